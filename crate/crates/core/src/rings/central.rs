//! Central `Z`-linear maps into commutative rings.

use std::fmt;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{
    CPolyRing, CPolynomial, Family, FreeAlgebra, IntMatrix, Integers, MatrixRing, NCPolynomial,
    ProductElem, ProductRing, Ring, VariableId,
};
use crate::error::{Error, Result};

/// How centrality `f(ab) = f(ba)` is known to hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Centrality {
    /// True by construction.
    Structural,
    /// Not falsified on the given number of sampled pairs.
    Sampled { pairs_checked: usize },
}

type ApplyFn<S, T> =
    dyn Fn(&<S as Ring>::Elem) -> Result<<T as Ring>::Elem> + Send + Sync + 'static;

/// A `Z`-linear map `source -> target` with `target` commutative.
pub struct CentralMap<S: Ring, T: Ring> {
    name: String,
    source: S,
    target: T,
    apply: Arc<ApplyFn<S, T>>,
    centrality: Centrality,
}

impl<S: Ring, T: Ring> Clone for CentralMap<S, T> {
    fn clone(&self) -> Self {
        Self {
            name: self.name.clone(),
            source: self.source.clone(),
            target: self.target.clone(),
            apply: Arc::clone(&self.apply),
            centrality: self.centrality,
        }
    }
}

impl<S: Ring, T: Ring> fmt::Debug for CentralMap<S, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CentralMap")
            .field("name", &self.name)
            .field("source", &self.source)
            .field("target", &self.target)
            .field("centrality", &self.centrality)
            .finish()
    }
}

impl<S: Ring, T: Ring> CentralMap<S, T> {
    /// A map whose centrality holds by construction. The caller vouches
    /// for linearity and centrality.
    pub fn structural<F>(name: impl Into<String>, source: S, target: T, apply: F) -> Result<Self>
    where
        F: Fn(&S::Elem) -> Result<T::Elem> + Send + Sync + 'static,
    {
        if !target.is_commutative() {
            return Err(Error::NonCommutativeTarget);
        }
        Ok(Self {
            name: name.into(),
            source,
            target,
            apply: Arc::new(apply),
            centrality: Centrality::Structural,
        })
    }

    /// A black-box map; `f(ab) = f(ba)` is checked on every sample pair and
    /// the first failing pair is returned as [`Error::NotCentral`].
    pub fn sampled<F>(
        name: impl Into<String>,
        source: S,
        target: T,
        apply: F,
        samples: &[(S::Elem, S::Elem)],
    ) -> Result<Self>
    where
        F: Fn(&S::Elem) -> Result<T::Elem> + Send + Sync + 'static,
    {
        let mut map = Self::structural(name, source, target, apply)?;
        for (a, b) in samples {
            if !map.is_central_at(a, b)? {
                return Err(Error::NotCentral {
                    map: map.name.clone(),
                    left: a.to_string(),
                    right: b.to_string(),
                });
            }
        }
        map.centrality = Centrality::Sampled {
            pairs_checked: samples.len(),
        };
        Ok(map)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &S {
        &self.source
    }

    pub fn target(&self) -> &T {
        &self.target
    }

    pub fn centrality(&self) -> Centrality {
        self.centrality
    }

    pub fn apply(&self, x: &S::Elem) -> Result<T::Elem> {
        (self.apply)(x)
    }

    /// Whether `f(ab) = f(ba)` for this particular pair.
    pub fn is_central_at(&self, a: &S::Elem, b: &S::Elem) -> Result<bool> {
        let ab = self.apply(&self.source.mul(a, b)?)?;
        let ba = self.apply(&self.source.mul(b, a)?)?;
        Ok(self.target.equals(&ab, &ba))
    }

    /// The pointwise sum `x -> f(x) + g(x)`.
    pub fn sum(&self, other: &CentralMap<S, T>) -> Result<CentralMap<S, T>> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::RingMismatch(format!(
                "cannot add `{}` and `{}`",
                self.name, other.name
            )));
        }
        let (f, g) = (self.clone(), other.clone());
        let target = self.target.clone();
        let centrality = weakest(self.centrality, other.centrality);
        Ok(CentralMap {
            name: format!("({} + {})", self.name, other.name),
            source: self.source.clone(),
            target: self.target.clone(),
            apply: Arc::new(move |x| target.add(&f.apply(x)?, &g.apply(x)?)),
            centrality,
        })
    }

    /// `self ∘ inner`. Central whenever `inner` is, since
    /// `f(g(ab)) = f(g(ba))`.
    pub fn compose<A: Ring>(&self, inner: &CentralMap<A, S>) -> Result<CentralMap<A, T>> {
        let (f, g) = (self.clone(), inner.clone());
        Ok(CentralMap {
            name: format!("{} . {}", self.name, inner.name),
            source: inner.source.clone(),
            target: self.target.clone(),
            apply: Arc::new(move |x| f.apply(&g.apply(x)?)),
            centrality: inner.centrality,
        })
    }
}

fn weakest(a: Centrality, b: Centrality) -> Centrality {
    match (a, b) {
        (Centrality::Structural, Centrality::Structural) => Centrality::Structural,
        (Centrality::Sampled { pairs_checked: x }, Centrality::Sampled { pairs_checked: y }) => {
            Centrality::Sampled {
                pairs_checked: x.min(y),
            }
        }
        (Centrality::Sampled { pairs_checked }, _) | (_, Centrality::Sampled { pairs_checked }) => {
            Centrality::Sampled { pairs_checked }
        }
    }
}

/// Sends each word `w` of the free algebra to the variable `X(necklace(w))`.
/// This is the universal central map out of the free algebra.
pub fn generic_central_map(alphabet_size: usize) -> CentralMap<FreeAlgebra, CPolyRing> {
    necklace_map(alphabet_size, Family::X)
}

/// As [`generic_central_map`], writing into the given variable family.
pub fn necklace_map(alphabet_size: usize, family: Family) -> CentralMap<FreeAlgebra, CPolyRing> {
    let name = match family {
        Family::X => "X",
        Family::Y => "Y",
    };
    CentralMap::structural(
        name,
        FreeAlgebra::new(alphabet_size),
        CPolyRing,
        move |x: &NCPolynomial| {
            CPolynomial::from_terms(
                x.terms()
                    .map(|(w, c)| (super::Monomial::var(family.variable(w)), c)),
            )
        },
    )
    .expect("polynomial target is commutative")
}

/// Sends each monomial `m` to the variable `F(m)`, so the empty monomial
/// maps to `F(1)`. No unitality is imposed.
pub fn generic_linear_map() -> CentralMap<CPolyRing, CPolyRing> {
    CentralMap::structural("F", CPolyRing, CPolyRing, |x: &CPolynomial| {
        CPolynomial::from_terms(
            x.terms()
                .map(|(m, c)| (super::Monomial::var(VariableId::F(m.clone())), c)),
        )
    })
    .expect("polynomial target is commutative")
}

fn check_indices(p: usize, indices: &[usize]) -> Result<Vec<usize>> {
    let mut out = indices.to_vec();
    for &i in &out {
        if i == 0 || i > p {
            return Err(Error::IndexOutOfRange { index: i, bound: p });
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// `Z^p -> Z`, `v -> sum of v_i over i in indices`. With `k` distinct
/// indices this is a sum of `k` ring homomorphisms.
pub fn projection_sum_map(
    p: usize,
    indices: &[usize],
) -> Result<CentralMap<ProductRing, Integers>> {
    let indices = check_indices(p, indices)?;
    let name = format!(
        "proj{{{}}}",
        indices
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    );
    CentralMap::structural(
        name,
        ProductRing::new(p),
        Integers,
        move |v: &ProductElem| {
            if v.len() != p {
                return Err(Error::RingMismatch(format!(
                    "vector of length {} in Z^{p}",
                    v.len()
                )));
            }
            indices.iter().try_fold(0i64, |acc, &i| {
                super::checked_add(acc, v.components()[i - 1], "projection sum")
            })
        },
    )
}

/// `Z^p -> Z^q` whose `j`-th coordinate is the projection sum over
/// `coordinates[j]`.
pub fn projection_vector_map(
    p: usize,
    coordinates: &[Vec<usize>],
) -> Result<CentralMap<ProductRing, ProductRing>> {
    let coordinates: Vec<Vec<usize>> = coordinates
        .iter()
        .map(|c| check_indices(p, c))
        .collect::<Result<_>>()?;
    let q = coordinates.len();
    let name = format!(
        "({})",
        coordinates
            .iter()
            .map(|c| format!(
                "proj{{{}}}",
                c.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            ))
            .collect::<Vec<_>>()
            .join(", ")
    );
    CentralMap::structural(
        name,
        ProductRing::new(p),
        ProductRing::new(q),
        move |v: &ProductElem| {
            if v.len() != p {
                return Err(Error::RingMismatch(format!(
                    "vector of length {} in Z^{p}",
                    v.len()
                )));
            }
            coordinates
                .iter()
                .map(|c| {
                    c.iter().try_fold(0i64, |acc, &i| {
                        super::checked_add(acc, v.components()[i - 1], "projection sum")
                    })
                })
                .collect::<Result<Vec<i64>>>()
                .map(ProductElem::new)
        },
    )
}

/// Number of random pairs on which [`trace_map`] checks centrality.
pub const TRACE_CENTRALITY_SAMPLES: usize = 50;
const TRACE_SAMPLE_SEED: u64 = 0x0074_7261_6365;

/// The trace `Mat_d(Z) -> Z`, with centrality sampled on
/// [`TRACE_CENTRALITY_SAMPLES`] random pairs with entries in `[-3, 3]`.
pub fn trace_map(d: usize) -> Result<CentralMap<MatrixRing, Integers>> {
    trace_map_with_seed(d, TRACE_SAMPLE_SEED)
}

pub fn trace_map_with_seed(d: usize, seed: u64) -> Result<CentralMap<MatrixRing, Integers>> {
    let ring = MatrixRing::new(d)?;
    let samples = random_matrix_pairs(d, seed);
    CentralMap::sampled(format!("Tr{d}"), ring, Integers, IntMatrix::trace, &samples)
}

/// `A -> A[row][col]` (1-based). Linear, but central only when `d == 1`;
/// used to exercise the failure paths of centrality sampling.
pub fn matrix_entry_map(
    d: usize,
    row: usize,
    col: usize,
) -> Result<CentralMap<MatrixRing, Integers>> {
    let ring = MatrixRing::new(d)?;
    for k in [row, col] {
        if k == 0 || k > d {
            return Err(Error::IndexOutOfRange { index: k, bound: d });
        }
    }
    let samples = random_matrix_pairs(d, TRACE_SAMPLE_SEED);
    CentralMap::sampled(
        format!("entry({row},{col})"),
        ring,
        Integers,
        move |m: &IntMatrix| Ok(m.entry(row - 1, col - 1)),
        &samples,
    )
}

fn random_matrix_pairs(d: usize, seed: u64) -> Vec<(IntMatrix, IntMatrix)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..TRACE_CENTRALITY_SAMPLES)
        .map(|_| {
            (
                IntMatrix::random(d, 3, &mut rng),
                IntMatrix::random(d, 3, &mut rng),
            )
        })
        .collect()
}
