//! Fixed-width vertex sets.
//!
//! Every face, facet, ground set and cone set in this crate is a subset of a
//! 64-element universe of dense vertex indices, stored as a single `u64`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A dense vertex index in `0..MAX_VERTICES`.
pub type Vertex = u8;

/// Size of the vertex universe.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices backed by a 64-bit mask.
///
/// Ordering is lexicographic on the ascending vertex lists, so `{1,2,4}`
/// sorts before `{1,3}` and `{1,2}` sorts before `{1,2,3}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

/// A facet is a nonempty vertex set; the alias documents intent at call sites.
pub type Facet = VertexSet;

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn singleton(v: Vertex) -> Self {
        debug_assert!((v as usize) < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn pair(a: Vertex, b: Vertex) -> Self {
        Self::singleton(a).with(b)
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn range(n: usize) -> Result<Self> {
        match n {
            0 => Ok(Self::EMPTY),
            MAX_VERTICES => Ok(VertexSet(u64::MAX)),
            n if n < MAX_VERTICES => Ok(VertexSet((1u64 << n) - 1)),
            n => Err(Error::UniverseTooLarge(n)),
        }
    }

    /// Builds a set from arbitrary indices, rejecting anything outside the universe.
    pub fn try_from_vertices<I>(vertices: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<u64>,
    {
        let mut bits = 0u64;
        for v in vertices {
            let v: u64 = v.into();
            if v >= MAX_VERTICES as u64 {
                return Err(Error::UniverseTooLarge(v as usize + 1));
            }
            bits |= 1 << v;
        }
        Ok(VertexSet(bits))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: Vertex) -> bool {
        (v as usize) < MAX_VERTICES && self.0 & (1u64 << v) != 0
    }

    #[inline]
    pub fn with(self, v: Vertex) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    #[inline]
    pub fn without(self, v: Vertex) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn min(self) -> Option<Vertex> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as Vertex)
    }

    pub fn max(self) -> Option<Vertex> {
        (self.0 != 0).then(|| (63 - self.0.leading_zeros()) as Vertex)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// All subsets of the given cardinality, in lexicographic order.
    pub fn subsets_of_size(self, size: usize) -> Subsets {
        let members: Vec<Vertex> = self.iter().collect();
        let cursor = if size <= members.len() { Some((0..size).collect()) } else { None };
        Subsets { members, cursor }
    }

    /// Maps each member `v` to `map[v]`.
    pub fn map(self, map: &[Vertex]) -> Self {
        self.iter().fold(Self::EMPTY, |acc, v| acc.with(map[v as usize]))
    }

    /// Compact rendering used in tests and diagnostics: `{1,2,3}`.
    pub fn to_list_string(self) -> String {
        let parts: Vec<String> = self.iter().map(|v| v.to_string()).collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_list_string())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromIterator<Vertex> for VertexSet {
    /// Panics on indices outside the universe; use [`VertexSet::try_from_vertices`]
    /// for untrusted input.
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        iter.into_iter().fold(Self::EMPTY, |acc, v| {
            assert!((v as usize) < MAX_VERTICES, "vertex {v} outside universe");
            acc.with(v)
        })
    }
}

impl IntoIterator for VertexSet {
    type Item = Vertex;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = Vertex;

    #[inline]
    fn next(&mut self) -> Option<Vertex> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(v as Vertex)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// Lexicographic k-subset iterator produced by [`VertexSet::subsets_of_size`].
pub struct Subsets {
    members: Vec<Vertex>,
    cursor: Option<Vec<usize>>,
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let idx = self.cursor.as_mut()?;
        let out: VertexSet = idx.iter().map(|&i| self.members[i]).collect();
        let n = self.members.len();
        let k = idx.len();
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                self.cursor = None;
                break;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Number of `k`-subsets of an `n`-set.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[Vertex]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn lexicographic_order() {
        assert!(s(&[1, 2, 4]) < s(&[1, 3]));
        assert!(s(&[1, 2]) < s(&[1, 2, 3]));
        assert!(s(&[2, 3, 4]) > s(&[1, 5, 6]));
        let mut v = vec![s(&[2, 3, 4]), s(&[1, 2, 4]), s(&[1, 3, 4]), s(&[1, 2, 3])];
        v.sort();
        assert_eq!(v, vec![s(&[1, 2, 3]), s(&[1, 2, 4]), s(&[1, 3, 4]), s(&[2, 3, 4])]);
    }

    #[test]
    fn subsets_enumerate_in_lex_order() {
        let all: Vec<_> = s(&[1, 2, 3, 4]).subsets_of_size(2).collect();
        assert_eq!(all, vec![s(&[1, 2]), s(&[1, 3]), s(&[1, 4]), s(&[2, 3]), s(&[2, 4]), s(&[3, 4])]);
        assert_eq!(s(&[1, 2]).subsets_of_size(3).count(), 0);
        assert_eq!(s(&[1, 2]).subsets_of_size(0).collect::<Vec<_>>(), vec![VertexSet::EMPTY]);
        assert_eq!(VertexSet::range(7).unwrap().subsets_of_size(3).count(), binomial(7, 3));
    }

    #[test]
    fn range_and_bounds() {
        assert_eq!(VertexSet::range(64).unwrap().len(), 64);
        assert!(VertexSet::range(65).is_err());
        assert!(VertexSet::try_from_vertices([3u64, 70]).is_err());
        assert_eq!(s(&[5, 9]).min(), Some(5));
        assert_eq!(s(&[5, 9]).max(), Some(9));
        assert_eq!(VertexSet::EMPTY.min(), None);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(8, 4), 70);
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(3, 5), 0);
    }
}
