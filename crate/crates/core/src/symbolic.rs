//! Exact verification of Frobenius-map identities in the universal setting.
//!
//! The arguments are the distinct generators of a free algebra and the map
//! is the generic central map into necklace variables, so a vanishing
//! difference at size `n` holds for every ring, every commutative target and
//! every central map at that size.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{enumerate_bipartitions, enumerate_set_partitions, SetPartition};
use crate::error::Result;
use crate::frobenius::{frob_explicit_with, frob_recursive_with, FrobeniusEvaluator, Strategy};
use crate::rings::{
    generic_central_map, generic_linear_map, necklace_map, CPolyRing, CPolynomial, Family,
    FreeAlgebra, NCPolynomial, Ring,
};
use crate::{check, Limits};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Identity {
    RecursionEqExplicit,
    Symmetry,
    SumFormula,
    CompositionFormula,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityVerdict {
    pub identity: Identity,
    pub n: usize,
    pub pass: bool,
    /// Terms of the fully expanded left side.
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    /// Summands of the defining sum on each side (permutations, argument
    /// orders, bipartitions or set partitions).
    pub lhs_summands: u64,
    pub rhs_summands: u64,
    /// Zero exactly when `pass`; otherwise a nonzero witness.
    pub difference: CPolynomial,
    pub elapsed: Duration,
}

fn generators(n: usize) -> Vec<NCPolynomial> {
    FreeAlgebra::new(n).generators()
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

#[allow(clippy::too_many_arguments)]
fn verdict(
    identity: Identity,
    n: usize,
    lhs: &CPolynomial,
    rhs: &CPolynomial,
    lhs_summands: u64,
    rhs_summands: u64,
    start: Instant,
) -> Result<IdentityVerdict> {
    let difference = lhs.sub(rhs)?;
    Ok(IdentityVerdict {
        identity,
        n,
        pass: difference.is_zero(),
        lhs_terms: lhs.num_terms(),
        rhs_terms: rhs.num_terms(),
        lhs_summands,
        rhs_summands,
        difference,
        elapsed: start.elapsed(),
    })
}

/// Explicit permutation sum minus the last-argument recursion at the `n`
/// distinct generators.
pub fn verify_recursion_equivalence(n: usize, limits: &Limits) -> Result<IdentityVerdict> {
    check("symbolic recursion check", n, limits.symbolic_recursion)?;
    limits.check_perms(n)?;
    let start = Instant::now();
    let f = generic_central_map(n);
    let args = generators(n);
    let lhs = frob_explicit_with(&f, &args, limits)?;
    let rhs = frob_recursive_with(&f, &args, limits)?;
    verdict(
        Identity::RecursionEqExplicit,
        n,
        &lhs,
        &rhs,
        factorial(n),
        factorial(n),
        start,
    )
}

/// `f_n` at every reordering of the generators against the identity order.
/// The reported difference is the first nonzero one in lexicographic order
/// of the reordering.
pub fn verify_symmetry(n: usize, limits: &Limits) -> Result<IdentityVerdict> {
    check("symbolic symmetry check", n, limits.symbolic_symmetry)?;
    let start = Instant::now();
    let f = generic_central_map(n);
    let args = generators(n);
    let base = frob_explicit_with(&f, &args, limits)?;
    let orders: Vec<_> = crate::combinatorics::enumerate_permutations(n, limits)?.collect();
    let first_bad = orders
        .par_iter()
        .map(|tau| -> Result<Option<CPolynomial>> {
            let permuted: Vec<NCPolynomial> =
                tau.images().iter().map(|&i| args[i - 1].clone()).collect();
            let value = frob_explicit_with(&f, &permuted, limits)?;
            Ok(if value == base { None } else { Some(value) })
        })
        .find_map_first(|r| r.transpose());
    let rhs = match first_bad.transpose()? {
        Some(value) => value,
        None => base.clone(),
    };
    verdict(
        Identity::Symmetry,
        n,
        &rhs,
        &base,
        orders.len() as u64,
        1,
        start,
    )
}

/// `(f+g)_p` against `Σ_{U ⊔ V = [p]} f_U · g_V`, with `f` and `g` generic
/// central maps into disjoint variable families.
pub fn verify_sum_formula(p: usize, limits: &Limits) -> Result<IdentityVerdict> {
    check("symbolic sum-formula check", p, limits.symbolic_sum)?;
    limits.check_perms(p)?;
    let start = Instant::now();
    let f = necklace_map(p, Family::X);
    let g = necklace_map(p, Family::Y);
    let sum = f.sum(&g)?;
    let args = generators(p);
    let lhs = frob_explicit_with(&sum, &args, limits)?;

    let fe = FrobeniusEvaluator::new(f, Strategy::Explicit).with_limits(*limits);
    let ge = FrobeniusEvaluator::new(g, Strategy::Explicit).with_limits(*limits);
    let bipartitions: Vec<_> = enumerate_bipartitions(p)?.collect();
    let summands: Vec<CPolynomial> = bipartitions
        .par_iter()
        .map(|b| {
            let fu = fe.eval_subset(&args, b.left())?;
            let gv = ge.eval_subset(&args, b.right())?;
            fu.mul(&gv)
        })
        .collect::<Result<_>>()?;
    let rhs = CPolyRing.sum(&summands)?;
    verdict(
        Identity::SumFormula,
        p,
        &lhs,
        &rhs,
        factorial(p),
        bipartitions.len() as u64,
        start,
    )
}

/// The left side `h_n(a_1..a_n)` of the composition formula, `h = f ∘ g`
/// with `g` the generic central map and `f` the generic linear map.
pub fn composition_lhs(n: usize, strategy: Strategy, limits: &Limits) -> Result<CPolynomial> {
    check("symbolic composition check", n, limits.symbolic_compose)?;
    let h = generic_linear_map().compose(&generic_central_map(n))?;
    FrobeniusEvaluator::new(h, strategy)
        .with_limits(*limits)
        .eval(&generators(n))
}

/// One summand `f_k(b_{P_1}, .., b_{P_k})` per set partition of `[n]`,
/// where `b_P = g_{|P|}` at the generators indexed by `P`.
pub fn composition_terms(n: usize, limits: &Limits) -> Result<Vec<(SetPartition, CPolynomial)>> {
    check("symbolic composition check", n, limits.symbolic_compose)?;
    let g =
        FrobeniusEvaluator::new(generic_central_map(n), Strategy::Explicit).with_limits(*limits);
    let f = FrobeniusEvaluator::new(generic_linear_map(), Strategy::Explicit).with_limits(*limits);
    let args = generators(n);
    let partitions: Vec<SetPartition> = enumerate_set_partitions(n, limits)?.collect();
    partitions
        .into_par_iter()
        .map(|pi| {
            let b: Vec<CPolynomial> = pi
                .blocks()
                .iter()
                .map(|block| g.eval_subset(&args, block))
                .collect::<Result<_>>()?;
            let term = f.eval(&b)?;
            Ok((pi, term))
        })
        .collect()
}

/// `h_n` against the sum over set partitions in the composition formula.
pub fn verify_composition_formula(n: usize, limits: &Limits) -> Result<IdentityVerdict> {
    check("symbolic composition check", n, limits.symbolic_compose)?;
    limits.check_perms(n)?;
    limits.check_partitions(n)?;
    let start = Instant::now();
    let lhs = composition_lhs(n, Strategy::Explicit, limits)?;
    let terms = composition_terms(n, limits)?;
    let rhs = CPolyRing.sum(terms.iter().map(|(_, t)| t))?;
    verdict(
        Identity::CompositionFormula,
        n,
        &lhs,
        &rhs,
        factorial(n),
        terms.len() as u64,
        start,
    )
}
