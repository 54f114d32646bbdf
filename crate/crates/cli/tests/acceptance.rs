//! Acceptance criteria, one line per criterion. Run with
//! `cargo test -p frobhom-cli --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use frobhom::frobenius::{frob_explicit, frob_recursive};
use frobhom::rings::{trace_map, IntMatrix};
use frobhom_cli::{run, Report};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

type Check = Result<String, String>;

struct Criterion {
    id: &'static str,
    title: &'static str,
    budget: Duration,
    body: fn() -> Check,
}

fn cli(args: &str) -> Result<Report, String> {
    let argv = std::iter::once("frobhom").chain(args.split_whitespace());
    let out = run(argv);
    if out.code != 0 {
        return Err(format!(
            "`{args}` exited {}: {}{}",
            out.code, out.stdout, out.stderr
        ));
    }
    let json_argv = std::iter::once("frobhom")
        .chain(args.split_whitespace())
        .chain(["--format", "json"]);
    let out = run(json_argv);
    serde_json::from_str(&out.stdout).map_err(|e| format!("`{args}`: bad JSON: {e}"))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn count(r: &Report, key: &str) -> Value {
    r.counts.get(key).cloned().unwrap_or(Value::Null)
}

fn exact_pass(r: &Report) -> Result<(), String> {
    ensure(r.pass && r.counterexample.is_none(), || {
        format!("{} failed: {:?}", r.command, r.counterexample)
    })
}

fn ac1() -> Check {
    for k in 0..=6 {
        exact_pass(&cli(&format!("verify recursion --n {k}"))?)?;
    }
    Ok("zero difference for n = 0..6".into())
}

fn ac2() -> Check {
    for k in 0..=4 {
        let r = cli(&format!("verify symmetry --n {k}"))?;
        exact_pass(&r)?;
        let orders: u64 = (1..=k).product();
        ensure(count(&r, "argument_orders") == json!(orders), || {
            format!(
                "n = {k}: expected {orders} orders, got {}",
                count(&r, "argument_orders")
            )
        })?;
    }
    Ok("all k! argument orders agree for k = 0..4".into())
}

fn ac3() -> Check {
    for k in 0..=5 {
        let r = cli(&format!("verify sum --p {k}"))?;
        exact_pass(&r)?;
        ensure(count(&r, "bipartitions") == json!(1u64 << k), || {
            format!("p = {k}: wrong bipartition count")
        })?;
    }
    Ok("2^p-term expansion exact for p = 0..5".into())
}

fn ac4() -> Check {
    // Bell numbers
    let bell = [1u64, 1, 2, 5, 15];
    for (k, b) in bell.iter().enumerate() {
        let r = cli(&format!("verify compose --n {k}"))?;
        exact_pass(&r)?;
        ensure(count(&r, "partitions") == json!(b), || {
            format!("n = {k}: expected {b} partitions")
        })?;
    }
    Ok("exact for n = 0..4; n = 3 sums over 5 partitions".into())
}

fn ac5() -> Check {
    for d in 1..=3 {
        let r = cli(&format!(
            "check trace --dim {d} --trials 100 --seed 42 --bound 3"
        ))?;
        exact_pass(&r)?;
        ensure(count(&r, "random_tuples") == json!(100), || {
            format!("d = {d}: expected 100 random tuples")
        })?;
        ensure(count(&r, "tightness_value") != json!("0"), || {
            format!("d = {d}: Tr_{d} vanished at the diagonal units")
        })?;
    }
    let r = cli("check trace --dim 2 --trials 100 --seed 42 --bound 3")?;
    ensure(count(&r, "tightness_value") == json!("1"), || {
        "Tr_2(E11, E22) != 1".into()
    })?;
    ensure(
        count(&r, "tightness_inputs") == json!(["[[1,0],[0,0]]", "[[0,0],[0,1]]"]),
        || "unexpected tightness witness".into(),
    )?;
    Ok("Tr_{d+1} = 0 on 100/100 trials for d = 1..3; Tr_2(E11,E22) = 1".into())
}

fn ac6() -> Check {
    let r = cli("check sum-theorem --p 5 --f-indices 1,2 --g-indices 3,4,5")?;
    exact_pass(&r)?;
    ensure(count(&r, "spanning_tuples") == json!(5u64.pow(6)), || {
        format!("expected 5^6 tuples, got {}", count(&r, "spanning_tuples"))
    })?;
    ensure(count(&r, "levels") == json!([6]), || {
        "wrong certified level".into()
    })?;
    let t = count(&r, "tightness_value");
    ensure(t != json!("0") && !t.is_null(), || {
        "(f+g)_5 vanished everywhere".into()
    })?;
    Ok(format!(
        "(f+g)_6 = 0 on 15625 tuples; (f+g)_5 = {t} somewhere"
    ))
}

fn ac7() -> Check {
    let r = cli("check compose-theorem --p 4 --q 2 --g-spec 1,2;3,4 --f-indices 1,2")?;
    exact_pass(&r)?;
    ensure(count(&r, "prechecks") == json!(2), || {
        "prechecks missing".into()
    })?;
    ensure(count(&r, "spanning_tuples") == json!(4u64.pow(5)), || {
        format!("expected 4^5 tuples, got {}", count(&r, "spanning_tuples"))
    })?;
    ensure(count(&r, "levels") == json!([5]), || {
        "wrong certified level".into()
    })?;
    Ok("(f.g)_5 = 0 on 1024 tuples".into())
}

fn ac8() -> Check {
    let families = ["1", "2,4", "1,3,5"];
    for f in families {
        // a sum of k coordinate projections is a k-homomorphism: f_{k+1} = 0
        let m = f.split(',').count() + 1;
        let r = cli(&format!("check vanishing --p 5 --f-indices {f} --m {m}"))?;
        exact_pass(&r)?;
        ensure(count(&r, "levels") == json!([m + 1, m + 2]), || {
            format!("{{{f}}}: wrong levels {}", count(&r, "levels"))
        })?;
        ensure(
            count(&r, "verdict") == json!("CERTIFIED_ON_SPANNING_SET"),
            || format!("{{{f}}}: not certified"),
        )?;
    }
    Ok(format!(
        "{} projection sums certified at m+1 and m+2",
        families.len()
    ))
}

fn ac9() -> Check {
    let tr = trace_map(2).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for n in 0..=5 {
        for trial in 0..100 {
            let args: Vec<IntMatrix> = (0..n).map(|_| IntMatrix::random(2, 3, &mut rng)).collect();
            let e = frob_explicit(&tr, &args).map_err(|e| e.to_string())?;
            let r = frob_recursive(&tr, &args).map_err(|e| e.to_string())?;
            ensure(e == r, || format!("n = {n}, trial {trial}: {e} != {r}"))?;
        }
    }
    Ok("600 tuples, explicit == recursive".into())
}

fn ac10() -> Check {
    let commands = [
        "check trace --dim 2 --trials 100 --seed 42",
        "check trace --dim 3 --trials 20 --seed 7 --bound 5",
        "check sum-theorem --p 4 --f-indices 1 --g-indices 2,3",
        "verify compose --n 3",
        "bench explicit --n 4 --seed 9 --reps 2",
        "bench recursive --n 3 --ring symbolic --reps 2",
    ];
    for c in commands {
        let argv = || {
            std::iter::once("frobhom")
                .chain(c.split_whitespace())
                .chain(["--format", "json"])
        };
        let (a, b) = (run(argv()), run(argv()));
        ensure(a.code == 0 && b.code == 0, || format!("`{c}` failed"))?;
        let strip = |s: &str| -> Result<Report, String> {
            let mut r: Report = serde_json::from_str(s).map_err(|e| e.to_string())?;
            r.elapsed_ms = 0;
            Ok(r)
        };
        let (ra, rb) = (strip(&a.stdout)?, strip(&b.stdout)?);
        ensure(ra.to_json() == rb.to_json(), || {
            format!("`{c}` differs between runs")
        })?;
        let without_elapsed = |s: &str| -> String {
            s.lines()
                .filter(|l| !l.contains("\"elapsed_ms\""))
                .collect::<Vec<_>>()
                .join("\n")
        };
        ensure(
            without_elapsed(&a.stdout) == without_elapsed(&b.stdout),
            || format!("`{c}` stdout bytes differ"),
        )?;
    }
    Ok(format!("{} seeded commands byte-identical", commands.len()))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: "AC1",
            title: "recursion equals explicit sum",
            budget: Duration::from_secs(30),
            body: ac1,
        },
        Criterion {
            id: "AC2",
            title: "symmetry in the arguments",
            budget: Duration::from_secs(10),
            body: ac2,
        },
        Criterion {
            id: "AC3",
            title: "sum formula",
            budget: Duration::from_secs(60),
            body: ac3,
        },
        Criterion {
            id: "AC4",
            title: "composition formula",
            budget: Duration::from_secs(60),
            body: ac4,
        },
        Criterion {
            id: "AC5",
            title: "fundamental trace identity",
            budget: Duration::from_secs(60),
            body: ac5,
        },
        Criterion {
            id: "AC6",
            title: "sum of homomorphisms",
            budget: Duration::from_secs(120),
            body: ac6,
        },
        Criterion {
            id: "AC7",
            title: "composition of homomorphisms",
            budget: Duration::from_secs(120),
            body: ac7,
        },
        Criterion {
            id: "AC8",
            title: "vanishing propagation",
            budget: Duration::from_secs(30),
            body: ac8,
        },
        Criterion {
            id: "AC9",
            title: "explicit vs recursive oracle",
            budget: Duration::from_secs(30),
            body: ac9,
        },
        Criterion {
            id: "AC10",
            title: "determinism",
            budget: Duration::from_secs(60),
            body: ac10,
        },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.body)();
        let elapsed = start.elapsed();
        let (ok, detail) = match result {
            Ok(d) if elapsed <= c.budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget")),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "[{}] {} {}: {} ({:.2}s / {}s)",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.title,
            detail,
            elapsed.as_secs_f64(),
            c.budget.as_secs()
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
