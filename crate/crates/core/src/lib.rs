//! Frobenius n-homomorphisms.
//!
//! For a central `Z`-linear map `f: A -> B` into a commutative ring, the
//! n-Frobenius map `f_n: A^n -> B` is the signed sum over `S_n` of products of
//! `f` evaluated on the cycle words of each permutation. `f` is an
//! n-homomorphism when `f_{n+1}` vanishes identically.
//!
//! The crate provides
//!
//! * [`combinatorics`]: permutations, cycles, set partitions, bipartitions,
//!   necklaces;
//! * [`rings`]: a small ring abstraction with integers, modular integers,
//!   integer matrices, product rings, commutative polynomials and the free
//!   noncommutative algebra, plus [`rings::CentralMap`];
//! * [`frobenius`]: evaluation of `f_n` by the explicit permutation sum and by
//!   the recursion on the last argument, and n-homomorphism checks;
//! * [`symbolic`]: exact verification of structural identities in the
//!   universal free-algebra setting;
//! * [`instances`]: certification of vanishing results on matrix and product
//!   rings.

pub mod combinatorics;
pub mod error;
pub mod frobenius;
pub mod instances;
pub mod rings;
pub mod symbolic;

pub use error::{Error, Result};

use serde::{Deserialize, Serialize};

/// Size caps guarding factorial and Bell-number blowup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest `n` for which `S_n` may be enumerated.
    pub perms: usize,
    /// Largest ground set whose set partitions may be enumerated.
    pub partitions: usize,
    pub symbolic_recursion: usize,
    pub symbolic_symmetry: usize,
    pub symbolic_sum: usize,
    pub symbolic_compose: usize,
    /// Largest matrix dimension accepted by trace scenarios.
    pub matrix_dim: usize,
    /// Largest number of tuples in one spanning sweep.
    pub sweep_tuples: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            perms: 10,
            partitions: 12,
            symbolic_recursion: 6,
            symbolic_symmetry: 5,
            symbolic_sum: 5,
            symbolic_compose: 4,
            matrix_dim: 3,
            sweep_tuples: 1_000_000,
        }
    }
}

impl Limits {
    pub(crate) fn check_perms(&self, n: usize) -> Result<()> {
        check("permutation", n, self.perms)
    }

    pub(crate) fn check_partitions(&self, n: usize) -> Result<()> {
        check("set partition", n, self.partitions)
    }
}

pub(crate) fn check(what: &'static str, requested: usize, limit: usize) -> Result<()> {
    if requested > limit {
        Err(Error::LimitExceeded {
            what,
            requested,
            limit,
        })
    } else {
        Ok(())
    }
}
