//! Commutative polynomials over `Z` in dynamically created variables.

use std::collections::BTreeMap;
use std::fmt;

use super::{checked_add, checked_mul, checked_neg, Ring};
use crate::combinatorics::{necklace_normal_form, Word};
use crate::error::{Error, Result};

/// Which family of necklace variables a central map writes into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    X,
    Y,
}

impl Family {
    /// The variable standing for `f(w)`; `w` is reduced to its necklace.
    pub fn variable(self, w: &Word) -> VariableId {
        let nf = necklace_normal_form(w);
        match self {
            Family::X => VariableId::X(nf),
            Family::Y => VariableId::Y(nf),
        }
    }
}

/// A polynomial variable.
///
/// `X`/`Y` hold the value of a generic central map on a word (keyed by the
/// word's necklace); `F` holds the value of a generic linear map on a
/// monomial. Identifiers are totally ordered: `X < Y < F < User`, then by
/// payload (words by length, then letters).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VariableId {
    X(Word),
    Y(Word),
    F(Monomial),
    User(String),
}

impl VariableId {
    /// An `X` variable for an arbitrary word, normalized to its necklace.
    pub fn necklace_x(w: &Word) -> Self {
        Family::X.variable(w)
    }
}

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VariableId::X(w) => write!(f, "X({w})"),
            VariableId::Y(w) => write!(f, "Y({w})"),
            VariableId::F(m) => write!(f, "F({m})"),
            VariableId::User(name) => write!(f, "{name}"),
        }
    }
}

/// A product of variables with positive exponents, sorted by variable.
/// The empty monomial is `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<(VariableId, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn var(v: VariableId) -> Self {
        Self(vec![(v, 1)])
    }

    /// Builds a normalized monomial from unsorted factors; zero exponents
    /// are dropped and repeated variables merged.
    pub fn from_factors(factors: impl IntoIterator<Item = (VariableId, u32)>) -> Result<Self> {
        let mut merged: BTreeMap<VariableId, u32> = BTreeMap::new();
        for (v, e) in factors {
            let slot = merged.entry(v).or_insert(0);
            *slot = slot
                .checked_add(e)
                .ok_or(Error::Overflow("monomial exponent"))?;
        }
        Ok(Self(merged.into_iter().filter(|(_, e)| *e > 0).collect()))
    }

    pub fn factors(&self) -> &[(VariableId, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|(_, e)| u64::from(*e)).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let e = a[i]
                        .1
                        .checked_add(b[j].1)
                        .ok_or(Error::Overflow("monomial exponent"))?;
                    out.push((a[i].0.clone(), e));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Ok(Monomial(out))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial with integer coefficients. No zero coefficient is ever
/// stored, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CPolynomial {
    terms: BTreeMap<Monomial, i64>,
}

impl CPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn var(v: VariableId) -> Self {
        Self::term(Monomial::var(v), 1)
    }

    pub fn user(name: &str) -> Self {
        Self::var(VariableId::User(name.to_string()))
    }

    pub fn term(m: Monomial, c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, i64)>) -> Result<Self> {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(m, c)?;
        }
        Ok(out)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.terms.iter().map(|(m, c)| (m, *c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = checked_add(*e.get(), c, "polynomial addition")?;
                if s == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &CPolynomial) -> Result<CPolynomial> {
        let (mut out, other) = if self.terms.len() >= other.terms.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (m, c) in &other.terms {
            out.add_term(m.clone(), *c)?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Result<CPolynomial> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| Ok((m.clone(), checked_neg(*c, "polynomial negation")?)))
            .collect::<Result<_>>()?;
        Ok(Self { terms })
    }

    pub fn sub(&self, other: &CPolynomial) -> Result<CPolynomial> {
        self.add(&other.neg()?)
    }

    pub fn scale(&self, c: i64) -> Result<CPolynomial> {
        if c == 0 {
            return Ok(Self::zero());
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, k)| Ok((m.clone(), checked_mul(c, *k, "polynomial scaling")?)))
            .collect::<Result<_>>()?;
        Ok(Self { terms })
    }

    pub fn mul(&self, other: &CPolynomial) -> Result<CPolynomial> {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = checked_mul(*c1, *c2, "polynomial multiplication")?;
                out.add_term(m1.mul(m2)?, c)?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for CPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let magnitude = c.unsigned_abs();
            match (k, *c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

/// `Z[variables]`. A single value serves every variable set, since
/// variables are created on demand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CPolyRing;

impl Ring for CPolyRing {
    type Elem = CPolynomial;

    fn zero(&self) -> CPolynomial {
        CPolynomial::zero()
    }

    fn one(&self) -> CPolynomial {
        CPolynomial::one()
    }

    fn add(&self, x: &CPolynomial, y: &CPolynomial) -> Result<CPolynomial> {
        x.add(y)
    }

    fn neg(&self, x: &CPolynomial) -> Result<CPolynomial> {
        x.neg()
    }

    fn mul(&self, x: &CPolynomial, y: &CPolynomial) -> Result<CPolynomial> {
        x.mul(y)
    }

    fn scale(&self, c: i64, x: &CPolynomial) -> Result<CPolynomial> {
        x.scale(c)
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn is_zero(&self, x: &CPolynomial) -> bool {
        x.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(letters: &[u32]) -> CPolynomial {
        CPolynomial::var(VariableId::necklace_x(&Word::from_letters(
            letters.to_vec(),
        )))
    }

    #[test]
    fn normalization_drops_zero_coefficients() {
        let p = x(&[0]).add(&x(&[0]).neg().unwrap()).unwrap();
        assert!(p.is_zero());
        assert_eq!(p, CPolynomial::zero());
        let q = CPolynomial::from_terms([(Monomial::one(), 2), (Monomial::one(), -2)]).unwrap();
        assert_eq!(q.num_terms(), 0);
    }

    #[test]
    fn display() {
        let a = x(&[0]);
        let b = x(&[1]);
        let ab = x(&[1, 0]);
        let f2 = a.mul(&b).unwrap().sub(&ab).unwrap();
        assert_eq!(f2.to_string(), "X(a)*X(b) - X(ab)");
        let sq = a
            .mul(&a)
            .unwrap()
            .scale(3)
            .unwrap()
            .add(&CPolynomial::constant(-1))
            .unwrap();
        assert_eq!(sq.to_string(), "-1 + 3*X(a)^2");
        assert_eq!(CPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn variable_order() {
        let w = Word::from_letters(vec![0]);
        let mut vars = [
            VariableId::User("z".into()),
            VariableId::F(Monomial::one()),
            VariableId::Y(w.clone()),
            VariableId::X(Word::from_letters(vec![0, 0])),
            VariableId::X(w.clone()),
        ];
        vars.sort();
        let shown: Vec<String> = vars.iter().map(ToString::to_string).collect();
        assert_eq!(shown, vec!["X(a)", "X(aa)", "Y(a)", "F(1)", "z"]);
    }

    #[test]
    fn monomial_merge() {
        let a = Monomial::var(VariableId::User("a".into()));
        let b = Monomial::var(VariableId::User("b".into()));
        let ab = a.mul(&b).unwrap();
        let ba = b.mul(&a).unwrap();
        assert_eq!(ab, ba);
        let a2b = ab.mul(&a).unwrap();
        assert_eq!(a2b.to_string(), "a^2*b");
        assert_eq!(a2b.degree(), 3);
        let built = Monomial::from_factors([
            (VariableId::User("b".into()), 1),
            (VariableId::User("a".into()), 2),
            (VariableId::User("c".into()), 0),
        ])
        .unwrap();
        assert_eq!(built, a2b);
    }

    #[test]
    fn coefficient_overflow() {
        let p = CPolynomial::constant(i64::MAX);
        assert!(p.add(&CPolynomial::one()).is_err());
        assert!(p.scale(2).is_err());
        assert!(p.mul(&CPolynomial::constant(2)).is_err());
    }
}
