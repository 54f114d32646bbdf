use std::time::{Duration, Instant};

use frobhom::frobenius::{frob_explicit_with, frob_recursive_with, Strategy};
use frobhom::rings::{generic_central_map, trace_map, CentralMap, FreeAlgebra, IntMatrix, Ring};
use frobhom::{Error, Limits, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::args::{BenchArgs, BenchRing};
use crate::report::Report;

/// Timings go to stderr so the stdout report stays byte-identical
/// across runs with the same seed.
pub fn run(
    a: &BenchArgs,
    strategy: Strategy,
    limits: &Limits,
    stderr: &mut String,
) -> Result<Report> {
    if a.reps == 0 {
        return Err(Error::InvalidParameter("reps must be positive".into()));
    }
    let name = match strategy {
        Strategy::Explicit => "explicit",
        Strategy::Recursive => "recursive",
    };
    let mut r = Report::new(format!("bench {name}"));
    r.param("n", a.n).param("reps", a.reps);
    let (value, times) = match a.ring {
        BenchRing::Matrix => {
            let seed = a.seed.ok_or_else(|| {
                Error::InvalidParameter("--seed is required for the matrix ring".into())
            })?;
            if a.bound <= 0 {
                return Err(Error::InvalidParameter(
                    "entry bound must be positive".into(),
                ));
            }
            frobhom::instances::InstanceScenario::Trace {
                dim: a.dim,
                trials: 1,
                seed,
                bound: a.bound,
            }
            .validate(limits)?;
            r.param("ring", "matrix")
                .param("dim", a.dim)
                .param("seed", seed)
                .param("bound", a.bound);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let args: Vec<IntMatrix> = (0..a.n)
                .map(|_| IntMatrix::random(a.dim, a.bound, &mut rng))
                .collect();
            time(&trace_map(a.dim)?, &args, strategy, a.reps, limits)?
        }
        BenchRing::Symbolic => {
            r.param("ring", "symbolic");
            let args = FreeAlgebra::new(a.n).generators();
            time(&generic_central_map(a.n), &args, strategy, a.reps, limits)?
        }
    };
    let mut sorted = times.clone();
    sorted.sort();
    let min = sorted[0];
    let median = sorted[sorted.len() / 2];
    stderr.push_str(&format!(
        "timing: min {} us, median {} us over {} reps\n",
        min.as_micros(),
        median.as_micros(),
        times.len()
    ));
    r.count("permutations", (1..=a.n as u64).product::<u64>())
        .count("repetitions", a.reps)
        .count("strategies_agree", true)
        .count("value", value);
    Ok(r)
}

/// Evaluates once with each strategy (they must agree), then times
/// `strategy` alone.
fn time<S: Ring, T: Ring>(
    f: &CentralMap<S, T>,
    args: &[S::Elem],
    strategy: Strategy,
    reps: usize,
    limits: &Limits,
) -> Result<(String, Vec<Duration>)> {
    let explicit = frob_explicit_with(f, args, limits)?;
    let recursive = frob_recursive_with(f, args, limits)?;
    if explicit != recursive {
        return Err(Error::InvalidParameter(format!(
            "strategies disagree: explicit {explicit}, recursive {recursive}"
        )));
    }
    let mut times = Vec::with_capacity(reps);
    for _ in 0..reps {
        let start = Instant::now();
        let v = match strategy {
            Strategy::Explicit => frob_explicit_with(f, args, limits)?,
            Strategy::Recursive => frob_recursive_with(f, args, limits)?,
        };
        times.push(start.elapsed());
        debug_assert_eq!(v, explicit);
    }
    Ok((explicit.to_string(), times))
}
