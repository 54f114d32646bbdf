//! Evaluation of the n-Frobenius maps `f_n` and n-homomorphism checks.
//!
//! Two evaluation routes are provided and kept independent of each other:
//!
//! * the explicit signed sum over `S_n`, where each permutation contributes
//!   `sign(σ)` times the product over its cycles `(i_1 .. i_k)` of
//!   `f(a_{i_1} ⋯ a_{i_k})`;
//! * the recursion on the last argument,
//!   `f_n(a_1..a_n) = f(a_n) f_{n-1}(a_1..a_{n-1})
//!                    - Σ_{i<n} f_{n-1}(a_1, .., a_i a_n, .., a_{n-1})`,
//!   with `f_0() = 1`.
//!
//! The explicit route is the reference; the recursion is the faster path for
//! moderate `n`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rings::{CentralMap, Ring};
use crate::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Explicit,
    Recursive,
}

/// `f_n(args)` by the permutation sum, with default limits.
pub fn frob_explicit<S: Ring, T: Ring>(f: &CentralMap<S, T>, args: &[S::Elem]) -> Result<T::Elem> {
    frob_explicit_with(f, args, &Limits::default())
}

pub fn frob_explicit_with<S: Ring, T: Ring>(
    f: &CentralMap<S, T>,
    args: &[S::Elem],
    limits: &Limits,
) -> Result<T::Elem> {
    limits.check_perms(args.len())?;
    explicit_sum(f, args, None)
}

/// Same value as [`frob_explicit_with`], with the sum split across the
/// rayon pool by the image of `1`. Exact addition makes the result
/// independent of scheduling.
pub fn frob_explicit_parallel<S: Ring, T: Ring>(
    f: &CentralMap<S, T>,
    args: &[S::Elem],
    limits: &Limits,
) -> Result<T::Elem> {
    let n = args.len();
    limits.check_perms(n)?;
    if n < 2 {
        return explicit_sum(f, args, None);
    }
    let partials: Vec<T::Elem> = (0..n)
        .into_par_iter()
        .map(|first| explicit_sum(f, args, Some(first)))
        .collect::<Result<_>>()?;
    f.target().sum(&partials)
}

/// The signed permutation sum, walked in cycle notation: each cycle opens
/// at the smallest unused index and is extended one index at a time, so
/// permutations sharing a prefix share its partial products. A subtree is
/// skipped once its running product is zero. `first_image` (0-based)
/// restricts the walk to permutations sending index 0 there.
fn explicit_sum<S: Ring, T: Ring>(
    f: &CentralMap<S, T>,
    args: &[S::Elem],
    first_image: Option<usize>,
) -> Result<T::Elem> {
    let n = args.len();
    let mut walk = CycleWalk {
        f,
        args,
        used: vec![false; n],
        acc: f.target().zero(),
    };
    let one = f.target().one();
    match (n, first_image) {
        (0, _) => Ok(one),
        (_, None) => {
            walk.used[0] = true;
            walk.extend(args[0].clone(), &one, 1, 0, n - 1)?;
            Ok(walk.acc)
        }
        (_, Some(0)) => {
            walk.used[0] = true;
            let closed = f.target().mul(&one, &f.apply(&args[0])?)?;
            walk.open(&closed, 0, n - 1)?;
            Ok(walk.acc)
        }
        (_, Some(j)) => {
            walk.used[0] = true;
            walk.used[j] = true;
            let word = f.source().mul(&args[0], &args[j])?;
            walk.extend(word, &one, 2, 0, n - 2)?;
            Ok(walk.acc)
        }
    }
}

struct CycleWalk<'a, S: Ring, T: Ring> {
    f: &'a CentralMap<S, T>,
    args: &'a [S::Elem],
    used: Vec<bool>,
    acc: T::Elem,
}

impl<S: Ring, T: Ring> CycleWalk<'_, S, T> {
    /// No cycle is open; `transpositions` is `n` minus the cycle count so far.
    fn open(&mut self, term: &T::Elem, transpositions: usize, left: usize) -> Result<()> {
        let target = self.f.target();
        if target.is_zero(term) {
            return Ok(());
        }
        let Some(start) = self.used.iter().position(|u| !u) else {
            self.acc = if transpositions.is_multiple_of(2) {
                target.add(&self.acc, term)?
            } else {
                target.sub(&self.acc, term)?
            };
            return Ok(());
        };
        self.used[start] = true;
        self.extend(self.args[start].clone(), term, 1, transpositions, left - 1)?;
        self.used[start] = false;
        Ok(())
    }

    /// A cycle of length `len` is open with product `word`.
    fn extend(
        &mut self,
        word: S::Elem,
        term: &T::Elem,
        len: usize,
        transpositions: usize,
        left: usize,
    ) -> Result<()> {
        let (source, target) = (self.f.source(), self.f.target());
        let closed = target.mul(term, &self.f.apply(&word)?)?;
        self.open(&closed, transpositions + len - 1, left)?;
        if left == 0 {
            return Ok(());
        }
        for j in 0..self.used.len() {
            if self.used[j] {
                continue;
            }
            self.used[j] = true;
            let longer = source.mul(&word, &self.args[j])?;
            self.extend(longer, term, len + 1, transpositions, left - 1)?;
            self.used[j] = false;
        }
        Ok(())
    }
}

/// `f_n(args)` by the recursion on the last argument, with default limits.
pub fn frob_recursive<S: Ring, T: Ring>(f: &CentralMap<S, T>, args: &[S::Elem]) -> Result<T::Elem> {
    frob_recursive_with(f, args, &Limits::default())
}

pub fn frob_recursive_with<S: Ring, T: Ring>(
    f: &CentralMap<S, T>,
    args: &[S::Elem],
    limits: &Limits,
) -> Result<T::Elem> {
    limits.check_perms(args.len())?;
    recursion(f, args)
}

fn recursion<S: Ring, T: Ring>(f: &CentralMap<S, T>, args: &[S::Elem]) -> Result<T::Elem> {
    let (source, target) = (f.source(), f.target());
    let Some((last, head)) = args.split_last() else {
        return Ok(target.one());
    };
    let mut acc = target.mul(&f.apply(last)?, &recursion(f, head)?)?;
    let mut modified = head.to_vec();
    for i in 0..head.len() {
        modified[i] = source.mul(&head[i], last)?;
        acc = target.sub(&acc, &recursion(f, &modified)?)?;
        modified[i] = head[i].clone();
    }
    Ok(acc)
}

/// `f_{|subset|}` at the sub-family `(args[i-1])_{i ∈ subset}` taken in
/// ascending index order. `subset` holds 1-based indices into `args`.
pub fn frob_subset<S: Ring, T: Ring>(
    f: &CentralMap<S, T>,
    args: &[S::Elem],
    subset: &[usize],
) -> Result<T::Elem> {
    FrobeniusEvaluator::new(f.clone(), Strategy::Explicit).eval_subset(args, subset)
}

fn gather<E: Clone>(args: &[E], subset: &[usize]) -> Result<Vec<E>> {
    let mut idx = subset.to_vec();
    idx.sort_unstable();
    if idx.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidParameter("subset repeats an index".into()));
    }
    idx.iter()
        .map(|&i| {
            if i == 0 || i > args.len() {
                Err(Error::IndexOutOfRange {
                    index: i,
                    bound: args.len(),
                })
            } else {
                Ok(args[i - 1].clone())
            }
        })
        .collect()
}

/// A central map bundled with an evaluation strategy and limits.
#[derive(Debug, Clone)]
pub struct FrobeniusEvaluator<S: Ring, T: Ring> {
    map: CentralMap<S, T>,
    strategy: Strategy,
    limits: Limits,
}

impl<S: Ring, T: Ring> FrobeniusEvaluator<S, T> {
    pub fn new(map: CentralMap<S, T>, strategy: Strategy) -> Self {
        Self {
            map,
            strategy,
            limits: Limits::default(),
        }
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn map(&self) -> &CentralMap<S, T> {
        &self.map
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    pub fn eval(&self, args: &[S::Elem]) -> Result<T::Elem> {
        match self.strategy {
            Strategy::Explicit => frob_explicit_with(&self.map, args, &self.limits),
            Strategy::Recursive => frob_recursive_with(&self.map, args, &self.limits),
        }
    }

    pub fn eval_subset(&self, args: &[S::Elem], subset: &[usize]) -> Result<T::Elem> {
        self.eval(&gather(args, subset)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    /// `f_{n+1}` vanishes on every tuple drawn from a spanning set; by
    /// multilinearity it vanishes identically.
    CertifiedOnSpanningSet,
    NotFalsified,
    Counterexample,
}

/// An input tuple on which `f_{n+1}` is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// The tuple in the source ring's notation.
    pub inputs: Vec<String>,
    /// 0-based positions in the spanning set (sweeps) or the single
    /// position in the tuple list (explicit tuples).
    pub indices: Option<Vec<usize>>,
    /// 0-based trial number (random mode).
    pub trial: Option<usize>,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomomorphismReport {
    pub label: String,
    pub map_id: String,
    /// The claimed homomorphism degree; `f_{n+1}` is what gets evaluated.
    pub n: usize,
    pub level: usize,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub tuples_checked: u64,
}

impl HomomorphismReport {
    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Counterexample
    }
}

/// Which tuples `check_n_homomorphism` evaluates `f_{n+1}` on.
pub enum Inputs<'a, E> {
    /// Every `(n+1)`-tuple of elements of a spanning set of the source.
    SpanningSet(&'a [E]),
    /// Exactly these tuples.
    Tuples(&'a [Vec<E>]),
    /// `trials` tuples drawn from `sampler` with a ChaCha8 stream.
    Random {
        trials: usize,
        seed: u64,
        sampler: &'a (dyn Fn(&mut ChaCha8Rng) -> E + Sync),
    },
}

/// Evaluates `f_{n+1}` on the requested tuples with the explicit formula.
///
/// A `SpanningSet` sweep finding no nonzero value is a complete certificate
/// provided the set really spans the source as a `Z`-module. When a nonzero
/// value exists, the reported witness is the first in sweep (or trial)
/// order regardless of how the work was scheduled.
pub fn check_n_homomorphism<S: Ring, T: Ring>(
    f: &CentralMap<S, T>,
    n: usize,
    inputs: Inputs<'_, S::Elem>,
    limits: &Limits,
) -> Result<HomomorphismReport> {
    let level = n + 1;
    limits.check_perms(level)?;
    let target = f.target();
    let eval = |tuple: &[S::Elem]| -> Result<Option<T::Elem>> {
        let v = frob_explicit_with(f, tuple, limits)?;
        Ok(if target.is_zero(&v) { None } else { Some(v) })
    };
    let mut report = HomomorphismReport {
        label: format!("{}_{}", f.name(), level),
        map_id: f.name().to_string(),
        n,
        level,
        verdict: Verdict::NotFalsified,
        witness: None,
        tuples_checked: 0,
    };

    match inputs {
        Inputs::SpanningSet(basis) => {
            let total = sweep_size(basis.len(), level, limits)?;
            let found = (0..total).into_par_iter().find_map_first(|t| {
                let digits = decode(t, basis.len(), level);
                let tuple: Vec<S::Elem> = digits.iter().map(|&d| basis[d].clone()).collect();
                match eval(&tuple) {
                    Ok(None) => None,
                    Ok(Some(v)) => Some(Ok((digits, tuple, v))),
                    Err(e) => Some(Err(e)),
                }
            });
            report.tuples_checked = total as u64;
            match found.transpose()? {
                None => report.verdict = Verdict::CertifiedOnSpanningSet,
                Some((digits, tuple, v)) => {
                    report.verdict = Verdict::Counterexample;
                    report.witness = Some(Witness {
                        inputs: tuple.iter().map(ToString::to_string).collect(),
                        indices: Some(digits),
                        trial: None,
                        value: v.to_string(),
                    });
                }
            }
        }
        Inputs::Tuples(tuples) => {
            for (k, tuple) in tuples.iter().enumerate() {
                if tuple.len() != level {
                    return Err(Error::InvalidParameter(format!(
                        "tuple {k} has {} entries, expected {level}",
                        tuple.len()
                    )));
                }
            }
            let found =
                tuples
                    .par_iter()
                    .enumerate()
                    .find_map_first(|(k, tuple)| match eval(tuple) {
                        Ok(None) => None,
                        Ok(Some(v)) => Some(Ok((k, v))),
                        Err(e) => Some(Err(e)),
                    });
            report.tuples_checked = tuples.len() as u64;
            if let Some((k, v)) = found.transpose()? {
                report.verdict = Verdict::Counterexample;
                report.witness = Some(Witness {
                    inputs: tuples[k].iter().map(ToString::to_string).collect(),
                    indices: Some(vec![k]),
                    trial: None,
                    value: v.to_string(),
                });
            }
        }
        Inputs::Random {
            trials,
            seed,
            sampler,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let tuples: Vec<Vec<S::Elem>> = (0..trials)
                .map(|_| (0..level).map(|_| sampler(&mut rng)).collect())
                .collect();
            let found =
                tuples
                    .par_iter()
                    .enumerate()
                    .find_map_first(|(k, tuple)| match eval(tuple) {
                        Ok(None) => None,
                        Ok(Some(v)) => Some(Ok((k, v))),
                        Err(e) => Some(Err(e)),
                    });
            report.tuples_checked = trials as u64;
            if let Some((k, v)) = found.transpose()? {
                report.verdict = Verdict::Counterexample;
                report.witness = Some(Witness {
                    inputs: tuples[k].iter().map(ToString::to_string).collect(),
                    indices: None,
                    trial: Some(k),
                    value: v.to_string(),
                });
            }
        }
    }
    Ok(report)
}

fn sweep_size(base: usize, len: usize, limits: &Limits) -> Result<usize> {
    let total = u32::try_from(len)
        .ok()
        .and_then(|l| base.checked_pow(l))
        .unwrap_or(usize::MAX);
    crate::check("spanning sweep", total, limits.sweep_tuples)?;
    Ok(total)
}

/// Base-`base` digits of `t`, most significant first, so that increasing
/// `t` walks tuples in lexicographic order.
fn decode(mut t: usize, base: usize, len: usize) -> Vec<usize> {
    let mut digits = vec![0; len];
    for slot in digits.iter_mut().rev() {
        *slot = t % base;
        t /= base;
    }
    digits
}
