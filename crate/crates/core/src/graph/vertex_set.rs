use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest vertex count a [`VertexSet`] can address.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex indices packed into a single 64-bit word.
///
/// The set carries no vertex count of its own; it is always interpreted
/// relative to the graph it is used with.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

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
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    /// The set `{0, 1, ..., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    #[inline]
    pub const fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest member, if any.
    #[inline]
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for VertexSet {
    #[inline]
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for VertexSet {
    #[inline]
    fn bitand_assign(&mut self, rhs: VertexSet) {
        self.0 &= rhs.0;
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

/// Complement within the full 64-bit universe; intersect with
/// [`VertexSet::full`] before counting.
impl Not for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let vertices = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&v) = vertices.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!(
                "vertex {v} exceeds the {MAX_VERTICES}-vertex mask width"
            )));
        }
        Ok(vertices.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_set_algebra() {
        let a: VertexSet = [0, 2, 5].into_iter().collect();
        let b: VertexSet = [2, 3].into_iter().collect();
        assert_eq!((a | b).to_vec(), vec![0, 2, 3, 5]);
        assert_eq!((a & b).to_vec(), vec![2]);
        assert_eq!((a - b).to_vec(), vec![0, 5]);
        assert_eq!(a.len(), 3);
        assert_eq!(a.first(), Some(0));
        assert_eq!(a.last(), Some(5));
        assert!(!a.is_disjoint(b));
        assert!(VertexSet::singleton(2).is_subset(b));
    }

    #[test]
    fn full_handles_word_width() {
        assert_eq!(VertexSet::full(0), VertexSet::EMPTY);
        assert_eq!(VertexSet::full(3).bits(), 0b111);
        assert_eq!(VertexSet::full(64).len(), 64);
    }

    #[test]
    fn serializes_as_sorted_array() {
        let s: VertexSet = [7, 1, 4].into_iter().collect();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, "[1,4,7]");
        let back: VertexSet = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<VertexSet>("[64]").is_err());
    }
}
