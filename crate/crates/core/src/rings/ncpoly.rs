//! The free noncommutative algebra `Z<g_0, ..., g_{k-1}>`.

use std::collections::BTreeMap;
use std::fmt;

use super::{checked_add, checked_mul, checked_neg, Ring};
use crate::combinatorics::Word;
use crate::error::{Error, Result};

/// A finite `Z`-combination of words. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NCPolynomial {
    alphabet_size: usize,
    terms: BTreeMap<Word, i64>,
}

impl NCPolynomial {
    pub fn zero(alphabet_size: usize) -> Self {
        Self {
            alphabet_size,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alphabet_size: usize) -> Self {
        Self::word(alphabet_size, Word::empty(), 1).expect("empty word is valid")
    }

    pub fn word(alphabet_size: usize, w: Word, c: i64) -> Result<Self> {
        let w = Word::new(w.letters().to_vec(), alphabet_size)?;
        let mut out = Self::zero(alphabet_size);
        if c != 0 {
            out.terms.insert(w, c);
        }
        Ok(out)
    }

    pub fn generator(alphabet_size: usize, letter: u32) -> Result<Self> {
        Self::word(alphabet_size, Word::letter(letter), 1)
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, i64)> {
        self.terms.iter().map(|(w, c)| (w, *c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: Word, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = checked_add(*e.get(), c, "free algebra addition")?;
                if s == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
        Ok(())
    }

    fn check_same(&self, other: &NCPolynomial) -> Result<()> {
        if self.alphabet_size != other.alphabet_size {
            return Err(Error::RingMismatch(format!(
                "free algebras on {} and {} generators",
                self.alphabet_size, other.alphabet_size
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &NCPolynomial) -> Result<NCPolynomial> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), *c)?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Result<NCPolynomial> {
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| Ok((w.clone(), checked_neg(*c, "free algebra negation")?)))
            .collect::<Result<_>>()?;
        Ok(Self {
            alphabet_size: self.alphabet_size,
            terms,
        })
    }

    pub fn sub(&self, other: &NCPolynomial) -> Result<NCPolynomial> {
        self.add(&other.neg()?)
    }

    pub fn scale(&self, c: i64) -> Result<NCPolynomial> {
        if c == 0 {
            return Ok(Self::zero(self.alphabet_size));
        }
        let terms = self
            .terms
            .iter()
            .map(|(w, k)| Ok((w.clone(), checked_mul(c, *k, "free algebra scaling")?)))
            .collect::<Result<_>>()?;
        Ok(Self {
            alphabet_size: self.alphabet_size,
            terms,
        })
    }

    /// Bilinear extension of word concatenation.
    pub fn mul(&self, other: &NCPolynomial) -> Result<NCPolynomial> {
        self.check_same(other)?;
        let mut out = Self::zero(self.alphabet_size);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let c = checked_mul(*c1, *c2, "free algebra multiplication")?;
                out.add_term(w1.concat(w2), c)?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for NCPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let magnitude = c.unsigned_abs();
            match (k, *c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if w.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude == 1 {
                write!(f, "{w}")?;
            } else {
                write!(f, "{magnitude}*{w}")?;
            }
        }
        Ok(())
    }
}

/// The free algebra on `alphabet_size` generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FreeAlgebra {
    alphabet_size: usize,
}

impl FreeAlgebra {
    pub fn new(alphabet_size: usize) -> Self {
        Self { alphabet_size }
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    /// The generators `g_0, ..., g_{k-1}`.
    pub fn generators(&self) -> Vec<NCPolynomial> {
        (0..self.alphabet_size as u32)
            .map(|l| NCPolynomial::generator(self.alphabet_size, l).expect("in range"))
            .collect()
    }

    pub fn word(&self, letters: &[u32], c: i64) -> Result<NCPolynomial> {
        NCPolynomial::word(self.alphabet_size, Word::from_letters(letters.to_vec()), c)
    }

    fn check(&self, x: &NCPolynomial) -> Result<()> {
        if x.alphabet_size != self.alphabet_size {
            return Err(Error::RingMismatch(format!(
                "element over {} generators in the free algebra on {}",
                x.alphabet_size, self.alphabet_size
            )));
        }
        Ok(())
    }
}

impl Ring for FreeAlgebra {
    type Elem = NCPolynomial;

    fn zero(&self) -> NCPolynomial {
        NCPolynomial::zero(self.alphabet_size)
    }

    fn one(&self) -> NCPolynomial {
        NCPolynomial::one(self.alphabet_size)
    }

    fn add(&self, x: &NCPolynomial, y: &NCPolynomial) -> Result<NCPolynomial> {
        self.check(x)?;
        x.add(y)
    }

    fn neg(&self, x: &NCPolynomial) -> Result<NCPolynomial> {
        self.check(x)?;
        x.neg()
    }

    fn mul(&self, x: &NCPolynomial, y: &NCPolynomial) -> Result<NCPolynomial> {
        self.check(x)?;
        x.mul(y)
    }

    fn scale(&self, c: i64, x: &NCPolynomial) -> Result<NCPolynomial> {
        self.check(x)?;
        x.scale(c)
    }

    fn is_commutative(&self) -> bool {
        self.alphabet_size <= 1
    }

    fn is_zero(&self, x: &NCPolynomial) -> bool {
        x.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn concatenation_is_noncommutative() {
        let r = FreeAlgebra::new(2);
        let [a, b]: [NCPolynomial; 2] = r.generators().try_into().unwrap();
        let ab = r.mul(&a, &b).unwrap();
        let ba = r.mul(&b, &a).unwrap();
        assert_eq!(ab, r.word(&[0, 1], 1).unwrap());
        assert_eq!(ba, r.word(&[1, 0], 1).unwrap());
        assert_ne!(ab, ba);
    }

    #[test]
    fn difference_of_squares_does_not_collapse() {
        let r = FreeAlgebra::new(2);
        let [a, b]: [NCPolynomial; 2] = r.generators().try_into().unwrap();
        let lhs = r
            .mul(&r.add(&a, &b).unwrap(), &r.sub(&a, &b).unwrap())
            .unwrap();
        let expected = r
            .word(&[0, 0], 1)
            .unwrap()
            .add(&r.word(&[0, 1], -1).unwrap())
            .unwrap()
            .add(&r.word(&[1, 0], 1).unwrap())
            .unwrap()
            .add(&r.word(&[1, 1], -1).unwrap())
            .unwrap();
        assert_eq!(lhs, expected);
        assert_eq!(lhs.to_string(), "aa - ab + ba - bb");
    }

    #[test]
    fn alphabet_checks() {
        assert!(NCPolynomial::generator(2, 2).is_err());
        let a = NCPolynomial::generator(2, 0).unwrap();
        let c = NCPolynomial::generator(3, 0).unwrap();
        assert!(matches!(a.mul(&c), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn unity() {
        let r = FreeAlgebra::new(3);
        let x = r
            .word(&[2, 0], 5)
            .unwrap()
            .add(&r.word(&[1], -2).unwrap())
            .unwrap();
        assert_eq!(r.mul(&x, &r.one()).unwrap(), x);
        assert_eq!(r.mul(&r.one(), &x).unwrap(), x);
        assert_eq!(r.one().to_string(), "1");
    }
}
