//! Command-line front end for the `frobhom` library.
//!
//! [`run`] is the whole program minus process setup, so tests drive it
//! in-process and `main` only prints the [`Outcome`].

pub mod args;
mod bench;
pub mod report;

use std::ffi::OsString;
use std::time::Instant;

use clap::Parser;
use frobhom::frobenius::{HomomorphismReport, Verdict};
use frobhom::instances::{
    check_compose_theorem, check_sum_theorem, check_trace_identity, check_vanishing_propagation,
    InstanceReport,
};
use frobhom::rings::matrix_entry_map;
use frobhom::symbolic::{
    verify_composition_formula, verify_recursion_equivalence, verify_sum_formula, verify_symmetry,
    IdentityVerdict,
};
use frobhom::{Error, Limits};
use serde_json::{json, Value};

pub use args::{Cli, Format};
pub use report::Report;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), text)
            } else {
                (text, String::new())
            };
            return Outcome {
                code,
                stdout,
                stderr,
            };
        }
    };

    let mut stderr = String::new();
    let limits = limits_from(&cli, &mut stderr);
    let start = Instant::now();
    match dispatch(&cli, &limits, &mut stderr) {
        Ok(mut report) => {
            report.elapsed_ms = start.elapsed().as_millis() as u64;
            let stdout = match cli.format {
                Format::Json => report.to_json() + "\n",
                Format::Text => report.to_text(),
            };
            let code = if report.pass {
                EXIT_PASS
            } else {
                EXIT_VIOLATION
            };
            Outcome {
                code,
                stdout,
                stderr,
            }
        }
        Err(e) => {
            stderr.push_str(&format!("error: {e}\n"));
            Outcome {
                code: EXIT_USAGE,
                stdout: String::new(),
                stderr,
            }
        }
    }
}

fn limits_from(cli: &Cli, stderr: &mut String) -> Limits {
    let mut limits = Limits::default();
    let defaults = limits;
    let mut raise = |name: &str, slot: &mut usize, value: Option<usize>, default: usize| {
        if let Some(v) = value {
            if v > default {
                stderr.push_str(&format!(
                    "warning: {name} raised to {v} (default {default}); runtime grows factorially\n"
                ));
            }
            *slot = v;
        }
    };
    raise(
        "--limit-perms",
        &mut limits.perms,
        cli.limit_perms,
        defaults.perms,
    );
    raise(
        "--limit-partitions",
        &mut limits.partitions,
        cli.limit_partitions,
        defaults.partitions,
    );
    if let Some(v) = cli.limit_symbolic {
        let largest = [
            defaults.symbolic_recursion,
            defaults.symbolic_symmetry,
            defaults.symbolic_sum,
            defaults.symbolic_compose,
        ]
        .into_iter()
        .max()
        .unwrap_or(0);
        raise(
            "--limit-symbolic",
            &mut limits.symbolic_recursion,
            Some(v),
            largest,
        );
        limits.symbolic_symmetry = v;
        limits.symbolic_sum = v;
        limits.symbolic_compose = v;
    }
    limits
}

fn dispatch(cli: &Cli, limits: &Limits, stderr: &mut String) -> frobhom::Result<Report> {
    use args::{BenchTarget, Command, VerifyTarget};
    match &cli.command {
        Command::Verify { target } => {
            let r = match target {
                VerifyTarget::Recursion { n } => {
                    let v = verify_recursion_equivalence(*n, limits)?;
                    verify_report("recursion", "n", &v, "permutations", v.lhs_summands)
                }
                VerifyTarget::Symmetry { n } => {
                    let v = verify_symmetry(*n, limits)?;
                    verify_report("symmetry", "n", &v, "argument_orders", v.lhs_summands)
                }
                VerifyTarget::Sum { p } => {
                    let v = verify_sum_formula(*p, limits)?;
                    verify_report("sum", "p", &v, "bipartitions", v.rhs_summands)
                }
                VerifyTarget::Compose { n } => {
                    let v = verify_composition_formula(*n, limits)?;
                    verify_report("compose", "n", &v, "partitions", v.rhs_summands)
                }
            };
            Ok(r)
        }
        Command::Check { target } => check(target, limits),
        Command::Bench { target } => match target {
            BenchTarget::Explicit(a) => {
                bench::run(a, frobhom::frobenius::Strategy::Explicit, limits, stderr)
            }
            BenchTarget::Recursive(a) => {
                bench::run(a, frobhom::frobenius::Strategy::Recursive, limits, stderr)
            }
        },
    }
}

fn verify_report(name: &str, key: &str, v: &IdentityVerdict, summands: &str, count: u64) -> Report {
    let mut r = Report::new(format!("verify {name}"));
    r.param(key, v.n);
    r.pass = v.pass;
    r.count("lhs_terms", v.lhs_terms)
        .count("rhs_terms", v.rhs_terms)
        .count(summands, count);
    if !v.pass {
        r.counterexample = Some(json!({
            "difference": v.difference.to_string(),
            "difference_terms": v.difference.num_terms(),
        }));
    }
    r
}

fn check(target: &args::CheckTarget, limits: &Limits) -> frobhom::Result<Report> {
    use args::CheckTarget;
    let (name, params, result) = match target {
        CheckTarget::Trace {
            dim,
            trials,
            seed,
            bound,
            inject_noncentral,
        } => {
            let params = json!({"dim": dim, "trials": trials, "seed": seed, "bound": bound});
            let result = if *inject_noncentral {
                matrix_entry_map(*dim, 1, 2).and_then(|_| {
                    Err(Error::InvalidParameter(
                        "--inject-noncentral needs a dimension of at least 2".into(),
                    ))
                })
            } else {
                check_trace_identity(*dim, *trials, *seed, *bound, limits)
            };
            ("trace", params, result)
        }
        CheckTarget::SumTheorem {
            p,
            f_indices,
            g_indices,
        } => (
            "sum-theorem",
            json!({"p": p, "f_indices": f_indices, "g_indices": g_indices}),
            check_sum_theorem(*p, f_indices, g_indices, limits),
        ),
        CheckTarget::ComposeTheorem {
            p,
            q,
            g_spec,
            f_indices,
        } => (
            "compose-theorem",
            json!({"p": p, "q": q, "g_spec": g_spec, "f_indices": f_indices}),
            check_compose_theorem(*p, *q, g_spec, f_indices, limits),
        ),
        CheckTarget::Vanishing { p, f_indices, m } => (
            "vanishing",
            json!({"p": p, "f_indices": f_indices, "m": m}),
            check_vanishing_propagation(*p, f_indices, *m, limits),
        ),
    };
    let mut r = Report::new(format!("check {name}"));
    if let Value::Object(map) = params {
        r.params = map;
    }
    match result {
        Ok(inst) => fill_instance(&mut r, &inst),
        Err(Error::PrecheckFailed(pre)) => {
            r.pass = false;
            r.count("prechecks", 1);
            r.counterexample = Some(witness_json(&pre, "precheck failed"));
        }
        Err(Error::NotCentral { map, left, right }) => {
            r.pass = false;
            r.counterexample = Some(json!({
                "reason": "map is not central",
                "map": map,
                "left": left,
                "right": right,
            }));
        }
        Err(e) => return Err(e),
    }
    Ok(r)
}

fn fill_instance(r: &mut Report, inst: &InstanceReport) {
    r.pass = inst.pass();
    let (mut random, mut spanning) = (0u64, 0u64);
    for c in &inst.checks {
        if c.verdict == Verdict::CertifiedOnSpanningSet {
            spanning += c.tuples_checked;
        } else {
            random += c.tuples_checked;
        }
    }
    r.count("tuples_checked", inst.tuples_checked())
        .count("random_tuples", random)
        .count("spanning_tuples", spanning)
        .count("centrality_pairs", inst.centrality_pairs)
        .count("prechecks", inst.prechecks.len())
        .count("verdict", verdict_name(inst.verdict()));
    let levels: Vec<usize> = inst.checks.iter().map(|c| c.level).collect();
    r.count("levels", levels);
    if let Some(t) = &inst.tightness {
        r.count("tightness_level", t.level);
        match &t.witness {
            Some(w) if t.verdict == Verdict::Counterexample => {
                r.count("tightness_value", w.value.clone())
                    .count("tightness_inputs", w.inputs.clone());
            }
            _ => {
                r.count("tightness_value", "0");
            }
        }
    }
    if let Some(bad) = inst.checks.iter().find(|c| !c.passed()) {
        r.counterexample = Some(witness_json(bad, "nonzero value"));
    }
}

fn witness_json(h: &HomomorphismReport, reason: &str) -> Value {
    let mut v = json!({
        "reason": reason,
        "label": h.label,
        "map": h.map_id,
        "level": h.level,
    });
    if let (Some(w), Value::Object(map)) = (&h.witness, &mut v) {
        map.insert("inputs".into(), json!(w.inputs));
        map.insert("value".into(), json!(w.value));
        if let Some(i) = &w.indices {
            map.insert("indices".into(), json!(i));
        }
        if let Some(t) = w.trial {
            map.insert("trial".into(), json!(t));
        }
    }
    v
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::CertifiedOnSpanningSet => "CERTIFIED_ON_SPANNING_SET",
        Verdict::NotFalsified => "NOT_FALSIFIED",
        Verdict::Counterexample => "COUNTEREXAMPLE",
    }
}
