use std::fmt;

use super::{checked_add, checked_mul, checked_neg, Ring};
use crate::error::{Error, Result};

/// A square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::InvalidParameter(
                "matrix dimension must be positive".into(),
            ));
        }
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidParameter("matrix is not square".into()));
        }
        Ok(Self {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = 1;
        }
        m
    }

    /// The matrix unit `E_{ij}` (1-based indices).
    pub fn unit(dim: usize, i: usize, j: usize) -> Result<Self> {
        for k in [i, j] {
            if k == 0 || k > dim {
                return Err(Error::IndexOutOfRange {
                    index: k,
                    bound: dim,
                });
            }
        }
        let mut m = Self::zero(dim);
        m.entries[(i - 1) * dim + (j - 1)] = 1;
        Ok(m)
    }

    /// Entries uniform in `[-bound, bound]`.
    pub fn random<R: rand::Rng + ?Sized>(dim: usize, bound: i64, rng: &mut R) -> Self {
        Self {
            dim,
            entries: (0..dim * dim)
                .map(|_| rng.gen_range(-bound..=bound))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// 0-based entry access.
    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.dim + col]
    }

    pub fn trace(&self) -> Result<i64> {
        (0..self.dim).try_fold(0i64, |acc, i| checked_add(acc, self.entry(i, i), "trace"))
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.dim.max(1))
            .map(<[i64]>::to_vec)
            .collect()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| {
                let items: Vec<String> = r.iter().map(ToString::to_string).collect();
                format!("[{}]", items.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

pub fn trace(m: &IntMatrix) -> Result<i64> {
    m.trace()
}

/// The ring of `dim x dim` integer matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatrixRing {
    dim: usize,
}

impl MatrixRing {
    pub fn new(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidParameter(
                "matrix dimension must be positive".into(),
            ));
        }
        Ok(Self { dim })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// All matrix units `E_{ij}`, row-major in `(i, j)`.
    pub fn matrix_units(&self) -> Vec<IntMatrix> {
        let mut out = Vec::with_capacity(self.dim * self.dim);
        for i in 1..=self.dim {
            for j in 1..=self.dim {
                out.push(IntMatrix::unit(self.dim, i, j).expect("in range"));
            }
        }
        out
    }

    fn check(&self, m: &IntMatrix) -> Result<()> {
        if m.dim != self.dim {
            return Err(Error::RingMismatch(format!(
                "{}x{} matrix in the ring of {}x{} matrices",
                m.dim, m.dim, self.dim, self.dim
            )));
        }
        Ok(())
    }
}

impl Ring for MatrixRing {
    type Elem = IntMatrix;

    fn zero(&self) -> IntMatrix {
        IntMatrix::zero(self.dim)
    }

    fn one(&self) -> IntMatrix {
        IntMatrix::identity(self.dim)
    }

    fn add(&self, x: &IntMatrix, y: &IntMatrix) -> Result<IntMatrix> {
        self.check(x)?;
        self.check(y)?;
        let entries = x
            .entries
            .iter()
            .zip(&y.entries)
            .map(|(a, b)| checked_add(*a, *b, "matrix addition"))
            .collect::<Result<_>>()?;
        Ok(IntMatrix {
            dim: self.dim,
            entries,
        })
    }

    fn neg(&self, x: &IntMatrix) -> Result<IntMatrix> {
        self.check(x)?;
        let entries = x
            .entries
            .iter()
            .map(|a| checked_neg(*a, "matrix negation"))
            .collect::<Result<_>>()?;
        Ok(IntMatrix {
            dim: self.dim,
            entries,
        })
    }

    fn mul(&self, x: &IntMatrix, y: &IntMatrix) -> Result<IntMatrix> {
        self.check(x)?;
        self.check(y)?;
        let d = self.dim;
        let mut out = IntMatrix::zero(d);
        for i in 0..d {
            for k in 0..d {
                let a = x.entry(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..d {
                    let p = checked_mul(a, y.entry(k, j), "matrix multiplication")?;
                    let slot = &mut out.entries[i * d + j];
                    *slot = checked_add(*slot, p, "matrix multiplication")?;
                }
            }
        }
        Ok(out)
    }

    fn scale(&self, c: i64, x: &IntMatrix) -> Result<IntMatrix> {
        self.check(x)?;
        let entries = x
            .entries
            .iter()
            .map(|a| checked_mul(c, *a, "matrix scaling"))
            .collect::<Result<_>>()?;
        Ok(IntMatrix {
            dim: self.dim,
            entries,
        })
    }

    fn is_commutative(&self) -> bool {
        self.dim == 1
    }
}
