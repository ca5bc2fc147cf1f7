//! Permutations of `{1,…,m}`: group structure, cycle types, conjugacy
//! classes, and decomposition into adjacent transpositions.
//!
//! Elements are stored in one-line notation; cycle notation is a display
//! format only. The adjacent-transposition decomposition is the bridge to
//! the reflection presentation of the Weyl group of `A_{m-1}`.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// Largest degree accepted by [`enumerate_group`] (factorial growth guard).
pub const MAX_ENUM_DEGREE: usize = 9;

/// An element of the symmetric group `S_m` in one-line notation:
/// `images[i]` is the image of `i + 1` (values are 1-based).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// The identity of `S_m`.
    pub fn identity(m: usize) -> Self {
        Permutation {
            images: (1..=m).collect(),
        }
    }

    /// Builds a permutation from one-line notation, validating bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &v in &images {
            if v < 1 || v > m || seen[v - 1] {
                return Err(Error::NotAPermutation(images.clone(), m));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// The adjacent transposition swapping `i` and `i + 1` in `S_m` (1-based, `i < m`).
    pub fn adjacent_transposition(m: usize, i: usize) -> Result<Self> {
        if i < 1 || i >= m {
            return Err(Error::RootIndex { index: i, rank: m.saturating_sub(1) });
        }
        let mut images: Vec<usize> = (1..=m).collect();
        images.swap(i - 1, i);
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Composition `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        let images = other.images.iter().map(|&v| self.images[v - 1]).collect();
        Ok(Permutation { images })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// `+1` for even permutations, `-1` for odd.
    pub fn sign(&self) -> i64 {
        let ct = self.cycle_type();
        if (self.degree() - ct.parts().len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Cycle lengths, weakly decreasing, fixed points included as parts of size 1.
    pub fn cycle_type(&self) -> CycleType {
        let mut parts: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { parts }
    }

    /// Disjoint cycles (including fixed points), each starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let m = self.degree();
        let mut seen = vec![false; m];
        let mut cycles = Vec::new();
        for start in 1..=m {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut next = self.apply(start);
            while next != start {
                seen[next - 1] = true;
                cycle.push(next);
                next = self.apply(next);
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// A word `i_1…i_s` of adjacent-transposition indices with
    /// `self = t_{i_1} ∘ … ∘ t_{i_s}` (bubble-sort order, not minimal length).
    ///
    /// The word length always has the parity of [`Permutation::sign`], and
    /// re-multiplying the word reproduces the element.
    pub fn adjacent_decomposition(&self) -> Vec<usize> {
        // Sorting the one-line notation by adjacent swaps multiplies the
        // element by t_i on the right, so the word is the reversed swap list.
        let mut work = self.images.clone();
        let mut swaps = Vec::new();
        let m = work.len();
        loop {
            let mut swapped = false;
            for i in 0..m.saturating_sub(1) {
                if work[i] > work[i + 1] {
                    work.swap(i, i + 1);
                    swaps.push(i + 1);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        swaps.reverse();
        swaps
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with fixed points omitted; the identity prints as `(1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "(1)");
        }
        for cycle in cycles {
            write!(f, "({})", cycle.iter().join(""))?;
        }
        Ok(())
    }
}

/// A partition of `m` recording cycle lengths; classifies conjugacy classes of `S_m`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    /// Builds a cycle type from parts in any order; zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument("cycle type parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The `m` this is a partition of.
    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Order of the centralizer of an element of this type:
    /// `z = Π_j j^{m_j} · m_j!` over part sizes `j` with multiplicity `m_j`.
    pub fn centralizer_order(&self) -> u64 {
        let mut z = 1u64;
        for (len, group) in &self.parts.iter().chunk_by(|&&p| p) {
            let mult = group.count() as u64;
            z *= (len as u64).pow(mult as u32) * factorial(mult as usize);
        }
        z
    }

    /// Number of elements of this type in `S_m`: `m! / z`.
    pub fn class_size(&self) -> u64 {
        factorial(self.sum()) / self.centralizer_order()
    }

    /// Partition-style label `(3,1)`; used when the same data names the
    /// shape of an irreducible character rather than a conjugacy class.
    pub fn partition_label(&self) -> String {
        format!("({})", self.parts.iter().join(","))
    }

    /// A representative permutation with consecutive cycles `(1…ρ_1)(ρ_1+1…)…`.
    pub fn representative(&self) -> Permutation {
        let mut images: Vec<usize> = (1..=self.sum()).collect();
        let mut start = 1;
        for &len in &self.parts {
            for offset in 0..len {
                images[start - 1 + offset] = start + (offset + 1) % len;
            }
            start += len;
        }
        Permutation { images }
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleType{:?}", self.parts)
    }
}

impl fmt::Display for CycleType {
    /// Standard class label: `(12)(34)` for type (2,2); the identity class is `(1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut printed = false;
        let mut next = 1usize;
        for &len in &self.parts {
            if len > 1 {
                write!(f, "({})", (next..next + len).join(""))?;
                printed = true;
            }
            next += len;
        }
        if !printed {
            write!(f, "(1)")?;
        }
        Ok(())
    }
}

pub fn factorial(m: usize) -> u64 {
    (1..=m as u64).product()
}

/// All `m!` elements of `S_m`, identity first, in lexicographic order of
/// one-line notation.
pub fn enumerate_group(m: usize) -> Result<Vec<Permutation>> {
    if !(1..=MAX_ENUM_DEGREE).contains(&m) {
        return Err(Error::DegreeOutOfRange { degree: m, max: MAX_ENUM_DEGREE });
    }
    Ok((1..=m)
        .permutations(m)
        .map(|images| Permutation { images })
        .collect())
}

/// All partitions of `m` in reverse-lexicographic order: `(m)` first,
/// `(1^m)` last. This fixes the column order of character tables.
pub fn partitions(m: usize) -> Vec<CycleType> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(m, m, &mut current, &mut out);
    out
}

fn fill_partitions(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<CycleType>) {
    if remaining == 0 {
        out.push(CycleType { parts: current.clone() });
        return;
    }
    for first in (1..=remaining.min(max_part)).rev() {
        current.push(first);
        fill_partitions(remaining - first, first, current, out);
        current.pop();
    }
}
