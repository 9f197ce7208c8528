use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest admissible vertex label.
pub const MAX_LABEL: u32 = 64;

/// A finite set of vertex labels in `1..=64`, stored as a bit mask
/// (label `v` occupies bit `v - 1`).
///
/// Labels are global: a face, a ground set and a sub-ground all use the
/// same encoding, so restricting to a sub-ground never relabels anything.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(label: u32) -> Result<Self> {
        check_label(label)?;
        Ok(VertexSet(1u64 << (label - 1)))
    }

    pub fn from_labels<I: IntoIterator<Item = u32>>(labels: I) -> Result<Self> {
        let mut bits = 0u64;
        for v in labels {
            check_label(v)?;
            bits |= 1u64 << (v - 1);
        }
        Ok(VertexSet(bits))
    }

    /// `{lo, lo+1, ..., hi}`; empty when `hi < lo`.
    pub fn range(lo: u32, hi: u32) -> Result<Self> {
        if hi < lo {
            return Ok(Self::EMPTY);
        }
        Self::from_labels(lo..=hi)
    }

    pub fn contains(self, label: u32) -> bool {
        (1..=MAX_LABEL).contains(&label) && self.0 & (1u64 << (label - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn with(self, label: u32) -> VertexSet {
        VertexSet(self.0 | (1u64 << (label - 1)))
    }

    pub fn without(self, label: u32) -> VertexSet {
        VertexSet(self.0 & !(1u64 << (label - 1)))
    }

    /// Smallest label, if any.
    pub fn min(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros() + 1)
    }

    /// Labels in increasing order.
    pub fn iter(self) -> Labels {
        Labels(self.0)
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.iter().collect()
    }

    /// Position of `label` among the members of `self` (0-based), i.e. the
    /// number of members smaller than `label`.
    pub fn rank_of(self, label: u32) -> usize {
        let below = if label <= 1 { 0 } else { (1u64 << (label - 1)) - 1 };
        (self.0 & below).count_ones() as usize
    }

    /// Places bit `i` of `pattern` on the `i`-th smallest member of `self`.
    pub fn deposit(self, pattern: u64) -> VertexSet {
        let mut out = 0u64;
        for (i, v) in self.iter().enumerate() {
            if pattern >> i & 1 == 1 {
                out |= 1u64 << (v - 1);
            }
        }
        VertexSet(out)
    }

    /// Inverse of [`deposit`](Self::deposit) for subsets of `self`.
    pub fn extract(self, subset: VertexSet) -> u64 {
        let mut out = 0u64;
        for (i, v) in self.iter().enumerate() {
            if subset.contains(v) {
                out |= 1u64 << i;
            }
        }
        out
    }

    /// All subsets of `self`, starting with `self` and ending with the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets { mask: self.0, next: Some(self.0) }
    }

    /// Lexicographic order on the sorted label lists.
    pub fn lex_cmp(self, other: VertexSet) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // Below the first difference both lists agree. The list holding the
        // differing label is smaller unless the other list stops there.
        let low = diff & diff.wrapping_neg();
        let above = !(low | (low - 1));
        let (holder_is_self, other_tail) = if self.0 & low != 0 {
            (true, other.0 & above)
        } else {
            (false, self.0 & above)
        };
        let holder_smaller = other_tail != 0;
        match (holder_is_self, holder_smaller) {
            (true, true) | (false, false) => Ordering::Less,
            _ => Ordering::Greater,
        }
    }
}

fn check_label(v: u32) -> Result<()> {
    if (1..=MAX_LABEL).contains(&v) {
        Ok(())
    } else {
        Err(Error::LabelOutOfRange(v))
    }
}

pub struct Labels(u64);

impl Iterator for Labels {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(tz + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Labels {}

pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = if cur == 0 { None } else { Some((cur - 1) & self.mask) };
        Some(VertexSet(cur))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
