use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

/// A subset of a ground set, stored as a bitmask over element indices.
///
/// Bit `i` is set when element `i` belongs to the subset.  The type is a
/// plain `u64` wrapper, so subsets are `Copy` and all set algebra is a single
/// machine instruction.  Ground sets are capped at 64 elements to keep this
/// representation total.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(u64);

impl Subset {
    /// The empty subset.
    pub const EMPTY: Subset = Subset(0);

    /// Builds a subset from a raw bitmask.
    pub const fn from_mask(mask: u64) -> Self {
        Subset(mask)
    }

    /// The full ground set of `n` elements.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 64);
        if n == 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    /// The singleton `{i}`.
    pub const fn singleton(i: usize) -> Self {
        Subset(1u64 << i)
    }

    /// The underlying bitmask.
    pub const fn mask(self) -> u64 {
        self.0
    }

    /// Whether element `i` belongs to the subset.
    pub const fn contains(self, i: usize) -> bool {
        self.0 & (1u64 << i) != 0
    }

    /// The subset with element `i` added.
    pub const fn with(self, i: usize) -> Self {
        Subset(self.0 | (1u64 << i))
    }

    /// The subset with element `i` removed.
    pub const fn without(self, i: usize) -> Self {
        Subset(self.0 & !(1u64 << i))
    }

    /// Number of elements.
    pub const fn card(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Whether the subset is empty.
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Set union.
    pub const fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    /// Set intersection.
    pub const fn inter(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    /// Set difference `self - other`.
    pub const fn minus(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    /// Whether `self` is a subset of `other`.
    pub const fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Iterates over the element indices in ascending order.
    pub fn iter(self) -> SubsetIter {
        SubsetIter(self.0)
    }

    /// Collects element indices from an iterator.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut mask = 0u64;
        for i in indices {
            debug_assert!(i < 64);
            mask |= 1u64 << i;
        }
        Subset(mask)
    }

    /// Iterates over all subsets of `self` in ascending mask order,
    /// including the empty set and `self` itself.
    pub fn subsets(self) -> SubsetsOf {
        SubsetsOf { of: self.0, next: Some(0) }
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        self.union(rhs)
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        self.inter(rhs)
    }
}

impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        self.minus(rhs)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Iterator over element indices of a subset, ascending.
pub struct SubsetIter(u64);

impl Iterator for SubsetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for SubsetIter {}

/// Iterator over all subsets of a fixed set, ascending by mask.
pub struct SubsetsOf {
    of: u64,
    next: Option<u64>,
}

impl Iterator for SubsetsOf {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        // standard subset-enumeration step within a mask
        self.next = if cur == self.of {
            None
        } else {
            Some((cur.wrapping_sub(self.of)) & self.of)
        };
        Some(Subset(cur))
    }
}
