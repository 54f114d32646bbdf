//! Permutations with their cycle structure, set partitions, bipartitions and
//! words up to rotation.
//!
//! Every index visible through the public API is 1-based, matching the
//! `[n] = {1, ..., n}` convention used throughout the crate. Letters of a
//! [`Word`] are 0-based generator indices.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Limits;

/// A bijection of `{1, ..., n}`, stored as its list of images.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// `images[i]` is the image of `i + 1`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "image {v} is outside 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::InvalidPermutation(format!("image {v} repeated")));
            }
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    /// The transposition swapping `i` and `j` (both 1-based, distinct).
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        for k in [i, j] {
            if k == 0 || k > n {
                return Err(Error::IndexOutOfRange { index: k, bound: n });
            }
        }
        if i == j {
            return Err(Error::InvalidPermutation(
                "a transposition needs two distinct points".into(),
            ));
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, j - 1);
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// `self ∘ other`, i.e. `other` is applied first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::InvalidPermutation(format!(
                "cannot compose degrees {} and {}",
                self.degree(),
                other.degree()
            )));
        }
        Ok(Permutation {
            images: other.images.iter().map(|&i| self.apply(i)).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// All cycles, fixed points included, each starting at its minimal
    /// element and ordered by that element.
    pub fn cycles(&self) -> Vec<Cycle> {
        let n = self.degree();
        let mut visited = vec![false; n];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if visited[start - 1] {
                continue;
            }
            let mut entries = Vec::new();
            let mut i = start;
            while !visited[i - 1] {
                visited[i - 1] = true;
                entries.push(i);
                i = self.apply(i);
            }
            cycles.push(Cycle { entries });
        }
        cycles
    }

    /// `(-1)^(n - #cycles)`.
    pub fn sign(&self) -> i64 {
        if (self.degree() - self.cycles().len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn inversions(&self) -> usize {
        let mut count = 0;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.images.is_empty() {
            return write!(f, "()");
        }
        for c in self.cycles() {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// One cycle `(i_1, i_2, ..., i_k)` of a permutation, rotated so that
/// `i_1` is its minimal entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    entries: Vec<usize>,
}

impl Cycle {
    /// Canonicalizes any rotation of the given entries.
    pub fn new(mut entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidPermutation("empty cycle".into()));
        }
        let mut sorted = entries.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPermutation("cycle repeats an entry".into()));
        }
        let pos = entries
            .iter()
            .enumerate()
            .min_by_key(|(_, &v)| v)
            .map(|(i, _)| i)
            .unwrap_or(0);
        entries.rotate_left(pos);
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn cycles_of(p: &Permutation) -> Vec<Cycle> {
    p.cycles()
}

pub fn sign(p: &Permutation) -> i64 {
    p.sign()
}

/// Lexicographic enumeration of `S_n`, starting at the identity.
#[derive(Debug, Clone)]
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Permutations {
    pub fn new(n: usize) -> Self {
        Self {
            next: Some((1..=n).collect()),
        }
    }
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lexicographic(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { images: current })
    }
}

fn next_lexicographic(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub fn enumerate_permutations(n: usize, limits: &Limits) -> Result<Permutations> {
    limits.check_perms(n)?;
    Ok(Permutations::new(n))
}

/// A partition of `{1, ..., n}` into nonempty blocks. Blocks are sorted
/// internally and ordered by their minimal elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Builds the canonical form of an arbitrary block list, rejecting
    /// anything that is not a partition of `{1, ..., n}`.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidParameter("empty block".into()));
            }
            for &i in b {
                if i == 0 || i > n {
                    return Err(Error::IndexOutOfRange { index: i, bound: n });
                }
                if std::mem::replace(&mut seen[i - 1], true) {
                    return Err(Error::InvalidParameter(format!(
                        "{i} appears in two blocks"
                    )));
                }
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidParameter(format!(
                "{} is not covered by any block",
                missing + 1
            )));
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(Self { n, blocks })
    }

    fn from_rgs(rgs: &[usize]) -> Self {
        let k = rgs.iter().map(|&b| b + 1).max().unwrap_or(0);
        let mut blocks = vec![Vec::new(); k];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        Self {
            n: rgs.len(),
            blocks,
        }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let items: Vec<String> = b.iter().map(ToString::to_string).collect();
                format!("{{{}}}", items.join(","))
            })
            .collect();
        write!(f, "{{{}}}", blocks.join(","))
    }
}

/// Set partitions in restricted-growth-string order: the one-block
/// partition comes first and the all-singletons partition last.
#[derive(Debug, Clone)]
pub struct SetPartitions {
    rgs: Vec<usize>,
    done: bool,
}

impl SetPartitions {
    pub fn new(n: usize) -> Self {
        Self {
            rgs: vec![0; n],
            done: false,
        }
    }

    fn advance(&mut self) -> bool {
        let n = self.rgs.len();
        // prefix_max[i] = max(rgs[0..i])
        let mut prefix_max = vec![0; n];
        for i in 1..n {
            prefix_max[i] = prefix_max[i - 1].max(self.rgs[i - 1]);
        }
        for i in (1..n).rev() {
            if self.rgs[i] <= prefix_max[i] {
                self.rgs[i] += 1;
                for x in &mut self.rgs[i + 1..] {
                    *x = 0;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for SetPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let out = SetPartition::from_rgs(&self.rgs);
        if !self.advance() {
            self.done = true;
        }
        Some(out)
    }
}

pub fn enumerate_set_partitions(n: usize, limits: &Limits) -> Result<SetPartitions> {
    limits.check_partitions(n)?;
    Ok(SetPartitions::new(n))
}

/// An ordered decomposition `U ⊔ V = {1, ..., n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bipartition {
    n: usize,
    left: Vec<usize>,
    right: Vec<usize>,
}

impl Bipartition {
    pub fn from_left(n: usize, left: &[usize]) -> Result<Self> {
        let mut in_left = vec![false; n];
        for &i in left {
            if i == 0 || i > n {
                return Err(Error::IndexOutOfRange { index: i, bound: n });
            }
            in_left[i - 1] = true;
        }
        Ok(Self::from_membership(&in_left))
    }

    fn from_membership(in_left: &[bool]) -> Self {
        let (mut left, mut right) = (Vec::new(), Vec::new());
        for (i, &l) in in_left.iter().enumerate() {
            if l {
                left.push(i + 1);
            } else {
                right.push(i + 1);
            }
        }
        Self {
            n: in_left.len(),
            left,
            right,
        }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn left(&self) -> &[usize] {
        &self.left
    }

    pub fn right(&self) -> &[usize] {
        &self.right
    }
}

/// All `2^n` bipartitions; `U` runs through subsets in binary-counter
/// order, bit `i` standing for the element `i + 1`.
#[derive(Debug, Clone)]
pub struct Bipartitions {
    n: usize,
    mask: u64,
    end: u64,
}

impl Iterator for Bipartitions {
    type Item = Bipartition;

    fn next(&mut self) -> Option<Bipartition> {
        if self.mask >= self.end {
            return None;
        }
        let in_left: Vec<bool> = (0..self.n).map(|i| self.mask >> i & 1 == 1).collect();
        self.mask += 1;
        Some(Bipartition::from_membership(&in_left))
    }
}

pub fn enumerate_bipartitions(n: usize) -> Result<Bipartitions> {
    if n >= 63 {
        return Err(Error::LimitExceeded {
            what: "bipartition",
            requested: n,
            limit: 62,
        });
    }
    Ok(Bipartitions {
        n,
        mask: 0,
        end: 1u64 << n,
    })
}

/// A word in the generators of a free algebra. The empty word is the unit.
///
/// Words are ordered by length first, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>, alphabet_size: usize) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| l as usize >= alphabet_size) {
            return Err(Error::LetterOutOfRange {
                letter: bad as usize,
                alphabet: alphabet_size,
            });
        }
        Ok(Self(letters))
    }

    /// No alphabet check; callers own the bound.
    pub fn from_letters(letters: Vec<u32>) -> Self {
        Self(letters)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letter(l: u32) -> Self {
        Self(vec![l])
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Moves the first `r` letters (mod length) to the end.
    pub fn rotate(&self, r: usize) -> Word {
        let mut letters = self.0.clone();
        if !letters.is_empty() {
            let r = r % letters.len();
            letters.rotate_left(r);
        }
        Word(letters)
    }

    pub fn necklace(&self) -> Word {
        necklace_normal_form(self)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let small = self.0.iter().all(|&l| l < 26);
        for (i, &l) in self.0.iter().enumerate() {
            if small {
                write!(f, "{}", char::from(b'a' + l as u8))?;
            } else {
                if i > 0 {
                    write!(f, ".")?;
                }
                write!(f, "g{l}")?;
            }
        }
        Ok(())
    }
}

/// The lexicographically least rotation of `w`.
pub fn necklace_normal_form(w: &Word) -> Word {
    let letters = w.letters();
    let n = letters.len();
    if n < 2 {
        return w.clone();
    }
    let mut best = 0;
    for start in 1..n {
        let candidate = (0..n).map(|k| letters[(start + k) % n]);
        let incumbent = (0..n).map(|k| letters[(best + k) % n]);
        if candidate.lt(incumbent) {
            best = start;
        }
    }
    w.rotate(best)
}
