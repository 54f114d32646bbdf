use std::fmt;

use super::{checked_add, checked_mul, checked_neg, Ring};
use crate::error::{Error, Result};

/// An element of `Z^p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProductElem(Vec<i64>);

impl ProductElem {
    pub fn new(components: Vec<i64>) -> Self {
        Self(components)
    }

    pub fn components(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for ProductElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", items.join(","))
    }
}

/// `Z^p` with componentwise operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductRing {
    len: usize,
}

impl ProductRing {
    pub fn new(len: usize) -> Self {
        Self { len }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// The standard basis vector `e_i` (1-based); these are orthogonal
    /// idempotents.
    pub fn basis(&self, i: usize) -> Result<ProductElem> {
        if i == 0 || i > self.len {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: self.len,
            });
        }
        let mut v = vec![0; self.len];
        v[i - 1] = 1;
        Ok(ProductElem(v))
    }

    pub fn basis_vectors(&self) -> Vec<ProductElem> {
        (1..=self.len)
            .map(|i| self.basis(i).expect("in range"))
            .collect()
    }

    pub fn element(&self, components: Vec<i64>) -> Result<ProductElem> {
        let e = ProductElem(components);
        self.check(&e)?;
        Ok(e)
    }

    pub fn random<R: rand::Rng + ?Sized>(&self, bound: i64, rng: &mut R) -> ProductElem {
        ProductElem(
            (0..self.len)
                .map(|_| rng.gen_range(-bound..=bound))
                .collect(),
        )
    }

    fn check(&self, x: &ProductElem) -> Result<()> {
        if x.0.len() != self.len {
            return Err(Error::RingMismatch(format!(
                "vector of length {} in Z^{}",
                x.0.len(),
                self.len
            )));
        }
        Ok(())
    }

    fn zip(
        &self,
        x: &ProductElem,
        y: &ProductElem,
        op: impl Fn(i64, i64) -> Result<i64>,
    ) -> Result<ProductElem> {
        self.check(x)?;
        self.check(y)?;
        x.0.iter()
            .zip(&y.0)
            .map(|(a, b)| op(*a, *b))
            .collect::<Result<_>>()
            .map(ProductElem)
    }
}

impl Ring for ProductRing {
    type Elem = ProductElem;

    fn zero(&self) -> ProductElem {
        ProductElem(vec![0; self.len])
    }

    fn one(&self) -> ProductElem {
        ProductElem(vec![1; self.len])
    }

    fn add(&self, x: &ProductElem, y: &ProductElem) -> Result<ProductElem> {
        self.zip(x, y, |a, b| checked_add(a, b, "product ring addition"))
    }

    fn neg(&self, x: &ProductElem) -> Result<ProductElem> {
        self.check(x)?;
        x.0.iter()
            .map(|a| checked_neg(*a, "product ring negation"))
            .collect::<Result<_>>()
            .map(ProductElem)
    }

    fn mul(&self, x: &ProductElem, y: &ProductElem) -> Result<ProductElem> {
        self.zip(x, y, |a, b| {
            checked_mul(a, b, "product ring multiplication")
        })
    }

    fn scale(&self, c: i64, x: &ProductElem) -> Result<ProductElem> {
        self.check(x)?;
        x.0.iter()
            .map(|a| checked_mul(c, *a, "product ring scaling"))
            .collect::<Result<_>>()
            .map(ProductElem)
    }

    fn is_commutative(&self) -> bool {
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_vectors_are_orthogonal_idempotents() {
        let r = ProductRing::new(3);
        let basis = r.basis_vectors();
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                let p = r.mul(a, b).unwrap();
                if i == j {
                    assert_eq!(&p, a);
                } else {
                    assert!(r.is_zero(&p));
                }
            }
        }
        assert_eq!(r.sum(&basis).unwrap(), r.one());
        assert!(r.basis(4).is_err());
        assert!(r.basis(0).is_err());
    }

    #[test]
    fn length_mismatch() {
        let r = ProductRing::new(2);
        assert!(r.add(&ProductElem::new(vec![1]), &r.one()).is_err());
        assert!(r.element(vec![1, 2, 3]).is_err());
    }
}
