//! Rings, their elements, and central linear maps between them.
//!
//! All arithmetic is on `i64` with checked overflow; an overflow surfaces as
//! [`Error::Overflow`](crate::Error::Overflow) rather than wrapping.

mod central;
mod cpoly;
mod integers;
mod matrix;
mod ncpoly;
mod product;

use std::fmt;

pub use central::{
    generic_central_map, generic_linear_map, matrix_entry_map, necklace_map, projection_sum_map,
    projection_vector_map, trace_map, trace_map_with_seed, CentralMap, Centrality,
};
pub use cpoly::{CPolyRing, CPolynomial, Family, Monomial, VariableId};
pub use integers::{Integers, ModularIntegers};
pub use matrix::{trace, IntMatrix, MatrixRing};
pub use ncpoly::{FreeAlgebra, NCPolynomial};
pub use product::{ProductElem, ProductRing};

use crate::error::Result;

/// An associative unital ring, given as a value that knows how to operate
/// on its elements.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem>;
    fn neg(&self, x: &Self::Elem) -> Result<Self::Elem>;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem>;
    /// Multiplication by an integer, i.e. the `Z`-module structure.
    fn scale(&self, c: i64, x: &Self::Elem) -> Result<Self::Elem>;
    fn is_commutative(&self) -> bool;

    fn equals(&self, x: &Self::Elem, y: &Self::Elem) -> bool {
        x == y
    }

    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem> {
        self.add(x, &self.neg(y)?)
    }

    fn is_zero(&self, x: &Self::Elem) -> bool {
        self.equals(x, &self.zero())
    }

    /// Left-to-right product; the empty product is `one()`.
    fn product<'a, I>(&self, factors: I) -> Result<Self::Elem>
    where
        I: IntoIterator<Item = &'a Self::Elem>,
    {
        let mut acc: Option<Self::Elem> = None;
        for x in factors {
            acc = Some(match acc {
                None => x.clone(),
                Some(a) => self.mul(&a, x)?,
            });
        }
        Ok(acc.unwrap_or_else(|| self.one()))
    }

    fn sum<'a, I>(&self, terms: I) -> Result<Self::Elem>
    where
        I: IntoIterator<Item = &'a Self::Elem>,
    {
        let mut acc = self.zero();
        for x in terms {
            acc = self.add(&acc, x)?;
        }
        Ok(acc)
    }
}

pub(crate) fn checked_add(a: i64, b: i64, what: &'static str) -> Result<i64> {
    a.checked_add(b).ok_or(crate::Error::Overflow(what))
}

pub(crate) fn checked_mul(a: i64, b: i64, what: &'static str) -> Result<i64> {
    a.checked_mul(b).ok_or(crate::Error::Overflow(what))
}

pub(crate) fn checked_neg(a: i64, what: &'static str) -> Result<i64> {
    a.checked_neg().ok_or(crate::Error::Overflow(what))
}
