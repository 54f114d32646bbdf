//! Certification of vanishing results on concrete rings: the trace identity
//! on integer matrices, and sums, compositions and level propagation of
//! projection sums on product rings `Z^p`.
//!
//! Product rings are spanned by their standard basis and matrix rings by
//! matrix units, so exhaustive sweeps over those give exact certificates.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frobenius::{check_n_homomorphism, HomomorphismReport, Inputs, Verdict};
use crate::rings::{
    projection_sum_map, projection_vector_map, trace_map, CentralMap, IntMatrix, MatrixRing,
    ProductRing, Ring,
};
use crate::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ScenarioKind {
    Trace,
    SumTheorem,
    ComposeTheorem,
    Vanishing,
}

/// A concrete certification run and its parameters. Index sets are
/// 1-based coordinates of `Z^p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum InstanceScenario {
    Trace {
        dim: usize,
        trials: usize,
        seed: u64,
        bound: i64,
    },
    SumTheorem {
        p: usize,
        f_indices: Vec<usize>,
        g_indices: Vec<usize>,
    },
    ComposeTheorem {
        p: usize,
        q: usize,
        g_spec: Vec<Vec<usize>>,
        f_indices: Vec<usize>,
    },
    Vanishing {
        p: usize,
        indices: Vec<usize>,
        m: usize,
    },
}

impl InstanceScenario {
    pub fn kind(&self) -> ScenarioKind {
        match self {
            InstanceScenario::Trace { .. } => ScenarioKind::Trace,
            InstanceScenario::SumTheorem { .. } => ScenarioKind::SumTheorem,
            InstanceScenario::ComposeTheorem { .. } => ScenarioKind::ComposeTheorem,
            InstanceScenario::Vanishing { .. } => ScenarioKind::Vanishing,
        }
    }

    pub fn validate(&self, limits: &Limits) -> Result<()> {
        match self {
            InstanceScenario::Trace {
                dim, trials, bound, ..
            } => {
                if *dim == 0 {
                    return Err(Error::InvalidParameter("dimension must be positive".into()));
                }
                crate::check("matrix dimension", *dim, limits.matrix_dim)?;
                limits.check_perms(dim + 1)?;
                if *trials == 0 {
                    return Err(Error::InvalidParameter("trials must be positive".into()));
                }
                if *bound <= 0 {
                    return Err(Error::InvalidParameter(
                        "entry bound must be positive".into(),
                    ));
                }
                Ok(())
            }
            InstanceScenario::SumTheorem {
                p,
                f_indices,
                g_indices,
            } => {
                check_p(*p)?;
                let n = distinct(*p, f_indices)?.len();
                let m = distinct(*p, g_indices)?.len();
                limits.check_perms(n + m + 1)
            }
            InstanceScenario::ComposeTheorem {
                p,
                q,
                g_spec,
                f_indices,
            } => {
                check_p(*p)?;
                check_p(*q)?;
                if g_spec.len() != *q {
                    return Err(Error::InvalidParameter(format!(
                        "g needs {q} coordinate index sets, got {}",
                        g_spec.len()
                    )));
                }
                let mut m = 0;
                for c in g_spec {
                    m = m.max(distinct(*p, c)?.len());
                }
                let n = distinct(*q, f_indices)?.len();
                limits.check_perms(m + 1)?;
                limits.check_perms(n * m + 1)
            }
            InstanceScenario::Vanishing { p, indices, m } => {
                check_p(*p)?;
                distinct(*p, indices)?;
                if *m == 0 {
                    return Err(Error::InvalidParameter(
                        "vanishing level must be at least 1 (f_0 = 1)".into(),
                    ));
                }
                limits.check_perms(m + 2)
            }
        }
    }

    pub fn run(&self, limits: &Limits) -> Result<InstanceReport> {
        self.validate(limits)?;
        match self {
            InstanceScenario::Trace {
                dim,
                trials,
                seed,
                bound,
            } => check_trace_identity(*dim, *trials, *seed, *bound, limits),
            InstanceScenario::SumTheorem {
                p,
                f_indices,
                g_indices,
            } => check_sum_theorem(*p, f_indices, g_indices, limits),
            InstanceScenario::ComposeTheorem {
                p,
                q,
                g_spec,
                f_indices,
            } => check_compose_theorem(*p, *q, g_spec, f_indices, limits),
            InstanceScenario::Vanishing { p, indices, m } => {
                check_vanishing_propagation(*p, indices, *m, limits)
            }
        }
    }
}

fn check_p(p: usize) -> Result<()> {
    if p == 0 {
        Err(Error::InvalidParameter(
            "product ring size must be positive".into(),
        ))
    } else {
        Ok(())
    }
}

fn distinct(p: usize, indices: &[usize]) -> Result<Vec<usize>> {
    let mut out = indices.to_vec();
    for &i in &out {
        if i == 0 || i > p {
            return Err(Error::IndexOutOfRange { index: i, bound: p });
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Outcome of one scenario.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceReport {
    pub kind: ScenarioKind,
    /// Hypotheses verified before the main claim, e.g. that the summands
    /// really are n- and m-homomorphisms.
    pub prechecks: Vec<HomomorphismReport>,
    /// The vanishing claims this scenario certifies.
    pub checks: Vec<HomomorphismReport>,
    /// Evaluation one level below the certified one; a counterexample here
    /// shows the level is sharp. Informational, never affects `pass`.
    pub tightness: Option<HomomorphismReport>,
    /// Pairs `(a, b)` on which `f(ab) = f(ba)` was re-checked.
    pub centrality_pairs: u64,
}

impl InstanceReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(HomomorphismReport::passed)
    }

    /// A counterexample anywhere wins; otherwise one spanning certificate
    /// suffices for `CertifiedOnSpanningSet`.
    pub fn verdict(&self) -> Verdict {
        if !self.pass() {
            Verdict::Counterexample
        } else if self
            .checks
            .iter()
            .any(|c| c.verdict == Verdict::CertifiedOnSpanningSet)
        {
            Verdict::CertifiedOnSpanningSet
        } else {
            Verdict::NotFalsified
        }
    }

    pub fn tuples_checked(&self) -> u64 {
        self.checks.iter().map(|c| c.tuples_checked).sum()
    }
}

fn labelled(mut r: HomomorphismReport, label: impl Into<String>) -> HomomorphismReport {
    r.label = label.into();
    r
}

fn precheck<S: Ring, T: Ring>(
    f: &CentralMap<S, T>,
    n: usize,
    basis: &[S::Elem],
    label: String,
    limits: &Limits,
) -> Result<HomomorphismReport> {
    let r = labelled(
        check_n_homomorphism(f, n, Inputs::SpanningSet(basis), limits)?,
        label,
    );
    if r.verdict == Verdict::Counterexample {
        return Err(Error::PrecheckFailed(Box::new(r)));
    }
    Ok(r)
}

/// `Tr_{d+1} = 0` on `d x d` integer matrices.
///
/// Runs `trials` random tuples with entries in `[-bound, bound]`, re-checks
/// `Tr(a_1 a_2) = Tr(a_2 a_1)` on each, and adds the matrix-unit sweep when
/// it fits under `limits.sweep_tuples`. Tightness: `Tr_d(E_11, .., E_dd) = 1`.
pub fn check_trace_identity(
    d: usize,
    trials: usize,
    seed: u64,
    bound: i64,
    limits: &Limits,
) -> Result<InstanceReport> {
    InstanceScenario::Trace {
        dim: d,
        trials,
        seed,
        bound,
    }
    .validate(limits)?;
    let tr = trace_map(d)?;
    let ring = MatrixRing::new(d)?;
    let level = d + 1;

    let sampler = move |rng: &mut ChaCha8Rng| IntMatrix::random(d, bound, rng);
    let random = check_n_homomorphism(
        &tr,
        d,
        Inputs::Random {
            trials,
            seed,
            sampler: &sampler,
        },
        limits,
    )?;
    let mut checks = vec![labelled(
        random,
        format!("Tr_{level} on {trials} random tuples"),
    )];

    // Same stream as the random check above.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut centrality_pairs = 0;
    for _ in 0..trials {
        let tuple: Vec<IntMatrix> = (0..level).map(|_| sampler(&mut rng)).collect();
        if !tr.is_central_at(&tuple[0], &tuple[1])? {
            return Err(Error::NotCentral {
                map: tr.name().to_string(),
                left: tuple[0].to_string(),
                right: tuple[1].to_string(),
            });
        }
        centrality_pairs += 1;
    }

    let units = ring.matrix_units();
    let sweep = (units.len() as u128).pow(level as u32);
    if sweep <= limits.sweep_tuples as u128 {
        let r = check_n_homomorphism(&tr, d, Inputs::SpanningSet(&units), limits)?;
        checks.push(labelled(r, format!("Tr_{level} on all matrix-unit tuples")));
    }

    let diagonal: Vec<IntMatrix> = (1..=d)
        .map(|i| IntMatrix::unit(d, i, i))
        .collect::<Result<_>>()?;
    let tightness = check_n_homomorphism(&tr, d - 1, Inputs::Tuples(&[diagonal]), limits)?;

    Ok(InstanceReport {
        kind: ScenarioKind::Trace,
        prechecks: Vec::new(),
        checks,
        tightness: Some(labelled(tightness, format!("Tr_{d} at (E11..E{d}{d})"))),
        centrality_pairs,
    })
}

/// For projection sums `f` over `n` coordinates and `g` over `m`, certifies
/// `(f+g)_{n+m+1} = 0` on all basis tuples of `Z^p`. When the index sets
/// are disjoint, also sweeps level `n+m` for a tightness witness.
pub fn check_sum_theorem(
    p: usize,
    f_indices: &[usize],
    g_indices: &[usize],
    limits: &Limits,
) -> Result<InstanceReport> {
    InstanceScenario::SumTheorem {
        p,
        f_indices: f_indices.to_vec(),
        g_indices: g_indices.to_vec(),
    }
    .validate(limits)?;
    let fi = distinct(p, f_indices)?;
    let gi = distinct(p, g_indices)?;
    let (n, m) = (fi.len(), gi.len());
    let basis = ProductRing::new(p).basis_vectors();
    let f = projection_sum_map(p, &fi)?;
    let g = projection_sum_map(p, &gi)?;
    let prechecks = vec![
        precheck(&f, n, &basis, format!("f is a {n}-homomorphism"), limits)?,
        precheck(&g, m, &basis, format!("g is a {m}-homomorphism"), limits)?,
    ];
    let h = f.sum(&g)?;
    let cert = check_n_homomorphism(&h, n + m, Inputs::SpanningSet(&basis), limits)?;
    let checks = vec![labelled(cert, format!("(f+g)_{} = 0", n + m + 1))];
    let disjoint = fi.iter().all(|i| !gi.contains(i));
    let tightness = if disjoint && n + m > 0 {
        let r = check_n_homomorphism(&h, n + m - 1, Inputs::SpanningSet(&basis), limits)?;
        Some(labelled(r, format!("(f+g)_{} tightness", n + m)))
    } else {
        None
    };
    Ok(InstanceReport {
        kind: ScenarioKind::SumTheorem,
        prechecks,
        checks,
        tightness,
        centrality_pairs: 0,
    })
}

/// `g: Z^p -> Z^q` given coordinatewise by projection sums (an
/// m-homomorphism, `m` the largest coordinate set), `f` a projection sum on
/// `Z^q` (an n-homomorphism); certifies `(f ∘ g)_{nm+1} = 0` on all basis
/// tuples of `Z^p`.
pub fn check_compose_theorem(
    p: usize,
    q: usize,
    g_spec: &[Vec<usize>],
    f_indices: &[usize],
    limits: &Limits,
) -> Result<InstanceReport> {
    InstanceScenario::ComposeTheorem {
        p,
        q,
        g_spec: g_spec.to_vec(),
        f_indices: f_indices.to_vec(),
    }
    .validate(limits)?;
    let m = g_spec
        .iter()
        .map(|c| distinct(p, c).map(|d| d.len()))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max()
        .unwrap_or(0);
    let fi = distinct(q, f_indices)?;
    let n = fi.len();
    let basis_p = ProductRing::new(p).basis_vectors();
    let basis_q = ProductRing::new(q).basis_vectors();
    let g = projection_vector_map(p, g_spec)?;
    let f = projection_sum_map(q, &fi)?;
    let prechecks = vec![
        precheck(&g, m, &basis_p, format!("g is a {m}-homomorphism"), limits)?,
        precheck(&f, n, &basis_q, format!("f is a {n}-homomorphism"), limits)?,
    ];
    let h = f.compose(&g)?;
    let cert = check_n_homomorphism(&h, n * m, Inputs::SpanningSet(&basis_p), limits)?;
    Ok(InstanceReport {
        kind: ScenarioKind::ComposeTheorem,
        prechecks,
        checks: vec![labelled(cert, format!("(f.g)_{} = 0", n * m + 1))],
        tightness: None,
        centrality_pairs: 0,
    })
}

/// Given `f_m = 0` on the basis sweep of `Z^p`, certifies `f_{m+1} = 0`
/// and `f_{m+2} = 0` the same way.
pub fn check_vanishing_propagation(
    p: usize,
    indices: &[usize],
    m: usize,
    limits: &Limits,
) -> Result<InstanceReport> {
    InstanceScenario::Vanishing {
        p,
        indices: indices.to_vec(),
        m,
    }
    .validate(limits)?;
    let f = projection_sum_map(p, indices)?;
    let basis = ProductRing::new(p).basis_vectors();
    let prechecks = vec![precheck(&f, m - 1, &basis, format!("f_{m} = 0"), limits)?];
    let mut checks = Vec::new();
    for level in [m + 1, m + 2] {
        let r = check_n_homomorphism(&f, level - 1, Inputs::SpanningSet(&basis), limits)?;
        checks.push(labelled(r, format!("f_{level} = 0")));
    }
    let tightness = if m >= 2 {
        let r = check_n_homomorphism(&f, m - 2, Inputs::SpanningSet(&basis), limits)?;
        Some(labelled(r, format!("f_{} tightness", m - 1)))
    } else {
        None
    };
    Ok(InstanceReport {
        kind: ScenarioKind::Vanishing,
        prechecks,
        checks,
        tightness,
        centrality_pairs: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::frob_explicit;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn trace_dim_one_is_certified() {
        let r = check_trace_identity(1, 10, 3, 3, &limits()).unwrap();
        assert_eq!(r.verdict(), Verdict::CertifiedOnSpanningSet);
        assert!(r.pass());
        assert_eq!(r.centrality_pairs, 10);
    }

    #[test]
    fn trace_dim_two_tightness() {
        let r = check_trace_identity(2, 100, 3, 3, &limits()).unwrap();
        assert!(r.pass());
        let t = r.tightness.unwrap();
        assert_eq!(t.verdict, Verdict::Counterexample);
        assert_eq!(t.witness.unwrap().value, "1");

        let tr = trace_map(2).unwrap();
        let e11 = IntMatrix::unit(2, 1, 1).unwrap();
        let e22 = IntMatrix::unit(2, 2, 2).unwrap();
        assert_eq!(frob_explicit(&tr, &[e11.clone(), e11.clone()]).unwrap(), 0);
        assert_eq!(frob_explicit(&tr, &[e11, e22]).unwrap(), 1);
    }

    #[test]
    fn trace_parameter_validation() {
        assert!(matches!(
            check_trace_identity(4, 1, 0, 3, &limits()),
            Err(Error::LimitExceeded { .. })
        ));
        assert!(check_trace_identity(0, 1, 0, 3, &limits()).is_err());
        assert!(check_trace_identity(2, 0, 0, 3, &limits()).is_err());
        assert!(check_trace_identity(2, 1, 0, 0, &limits()).is_err());
    }

    #[test]
    fn sum_theorem_small() {
        let r = check_sum_theorem(3, &[1], &[2], &limits()).unwrap();
        assert_eq!(r.verdict(), Verdict::CertifiedOnSpanningSet);
        assert_eq!(r.checks[0].tuples_checked, 27);
        let t = r.tightness.unwrap();
        assert_eq!(t.verdict, Verdict::Counterexample);
        assert_eq!(t.witness.unwrap().value, "1");
    }

    #[test]
    fn sum_theorem_overlapping_indices() {
        // f + g = 2 pi_1, a 2-homomorphism.
        let r = check_sum_theorem(1, &[1], &[1], &limits()).unwrap();
        assert!(r.pass());
        assert!(r.tightness.is_none());
        let f = projection_sum_map(1, &[1]).unwrap();
        let h = f.sum(&f).unwrap();
        let one = ProductRing::new(1).one();
        assert_eq!(
            frob_explicit(&h, &[one.clone(), one.clone(), one]).unwrap(),
            0
        );
    }

    #[test]
    fn compose_theorem_examples() {
        let r = check_compose_theorem(2, 1, &[vec![1, 2]], &[1], &limits()).unwrap();
        assert_eq!(r.verdict(), Verdict::CertifiedOnSpanningSet);
        assert_eq!(r.checks[0].level, 3);
        assert_eq!(r.checks[0].tuples_checked, 8);

        let r =
            check_compose_theorem(3, 3, &[vec![1], vec![2], vec![3]], &[1, 2], &limits()).unwrap();
        assert!(r.pass());
        assert_eq!(r.checks[0].level, 3);
    }

    #[test]
    fn compose_theorem_validation() {
        assert!(check_compose_theorem(2, 2, &[vec![1]], &[1], &limits()).is_err());
        assert!(check_compose_theorem(2, 1, &[vec![3]], &[1], &limits()).is_err());
    }

    #[test]
    fn vanishing_examples() {
        let r = check_vanishing_propagation(2, &[1], 2, &limits()).unwrap();
        assert_eq!(r.checks.len(), 2);
        assert!(r.pass());
        let r = check_vanishing_propagation(2, &[], 1, &limits()).unwrap();
        assert!(r.pass());
        let r = check_vanishing_propagation(3, &[1, 2], 3, &limits()).unwrap();
        assert!(r.pass());
        let t = r.tightness.unwrap();
        assert_eq!(t.level, 2);
        assert_eq!(t.verdict, Verdict::Counterexample);
        assert_eq!(t.witness.unwrap().indices.unwrap(), vec![0, 1]);
    }

    #[test]
    fn vanishing_precheck_failure() {
        match check_vanishing_propagation(3, &[1, 2], 2, &limits()) {
            Err(Error::PrecheckFailed(r)) => {
                assert_eq!(r.level, 2);
                assert_eq!(r.verdict, Verdict::Counterexample);
            }
            other => panic!("expected a failed pre-check, got {other:?}"),
        }
        assert!(check_vanishing_propagation(3, &[1], 0, &limits()).is_err());
    }

    #[test]
    fn disjoint_sum_equals_union_projection() {
        let f = projection_sum_map(5, &[1, 2]).unwrap();
        let g = projection_sum_map(5, &[4]).unwrap();
        let u = projection_sum_map(5, &[1, 2, 4]).unwrap();
        let h = f.sum(&g).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let r = ProductRing::new(5);
        for _ in 0..50 {
            let v = r.random(3, &mut rng);
            assert_eq!(h.apply(&v).unwrap(), u.apply(&v).unwrap());
        }
        let sum_report = check_sum_theorem(5, &[1, 2], &[4], &limits()).unwrap();
        let basis = r.basis_vectors();
        let direct = check_n_homomorphism(&u, 3, Inputs::SpanningSet(&basis), &limits()).unwrap();
        assert_eq!(sum_report.checks[0].level, direct.level);
        assert_eq!(direct.verdict, Verdict::CertifiedOnSpanningSet);
    }

    #[test]
    fn scenarios_are_reproducible() {
        let s = InstanceScenario::Trace {
            dim: 2,
            trials: 30,
            seed: 42,
            bound: 3,
        };
        assert_eq!(s.run(&limits()).unwrap(), s.run(&limits()).unwrap());
        assert_eq!(s.kind(), ScenarioKind::Trace);
    }
}
