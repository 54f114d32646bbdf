use super::{checked_add, checked_mul, checked_neg, Ring};
use crate::error::{Error, Result};

/// `Z` on `i64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Integers;

impl Ring for Integers {
    type Elem = i64;

    fn zero(&self) -> i64 {
        0
    }

    fn one(&self) -> i64 {
        1
    }

    fn add(&self, x: &i64, y: &i64) -> Result<i64> {
        checked_add(*x, *y, "integer addition")
    }

    fn neg(&self, x: &i64) -> Result<i64> {
        checked_neg(*x, "integer negation")
    }

    fn mul(&self, x: &i64, y: &i64) -> Result<i64> {
        checked_mul(*x, *y, "integer multiplication")
    }

    fn scale(&self, c: i64, x: &i64) -> Result<i64> {
        checked_mul(c, *x, "integer scaling")
    }

    fn is_commutative(&self) -> bool {
        true
    }
}

/// `Z / mZ`, elements kept in `0..m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModularIntegers {
    modulus: u64,
}

impl ModularIntegers {
    pub fn new(modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidParameter("modulus must be positive".into()));
        }
        Ok(Self { modulus })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn reduce(&self, x: i64) -> u64 {
        x.rem_euclid(self.modulus as i64) as u64
    }

    fn mul_mod(&self, x: u64, y: u64) -> u64 {
        ((x as u128 * y as u128) % self.modulus as u128) as u64
    }
}

impl Ring for ModularIntegers {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.modulus
    }

    fn add(&self, x: &u64, y: &u64) -> Result<u64> {
        Ok(((*x as u128 + *y as u128) % self.modulus as u128) as u64)
    }

    fn neg(&self, x: &u64) -> Result<u64> {
        Ok((self.modulus - x % self.modulus) % self.modulus)
    }

    fn mul(&self, x: &u64, y: &u64) -> Result<u64> {
        Ok(self.mul_mod(*x, *y))
    }

    fn scale(&self, c: i64, x: &u64) -> Result<u64> {
        Ok(self.mul_mod(self.reduce(c), *x))
    }

    fn is_commutative(&self) -> bool {
        true
    }
}
