use std::fmt;
use std::ops::Index;

use crate::core::Subset;

/// An integer vector indexed by ground-set elements.
///
/// The derived `Ord` is plain lexicographic order on the component list; the
/// decreasing preorder used for egalitarian comparison lives in the solver
/// module.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVector(Vec<i64>);

impl IntVector {
    /// Builds a vector from components.
    pub fn new(values: Vec<i64>) -> Self {
        IntVector(values)
    }

    /// The all-`value` vector of length `n`.
    pub fn constant(n: usize, value: i64) -> Self {
        IntVector(vec![value; n])
    }

    /// Number of components.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Whether the vector has no components.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The components as a slice.
    pub fn values(&self) -> &[i64] {
        &self.0
    }

    /// Component `i`.
    pub fn get(&self, i: usize) -> i64 {
        self.0[i]
    }

    /// Sets component `i`.
    pub fn set(&mut self, i: usize, value: i64) {
        self.0[i] = value;
    }

    /// Sum of the components indexed by `s`.
    pub fn sum_on(&self, s: Subset) -> i64 {
        s.iter().map(|i| self.0[i]).sum()
    }

    /// Sum of all components.
    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Components sorted in decreasing order.
    pub fn sorted_desc(&self) -> Vec<i64> {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// The vector `self + chi_s - chi_t`.
    pub fn unit_exchange(&self, s: usize, t: usize) -> Self {
        let mut v = self.0.clone();
        v[s] += 1;
        v[t] -= 1;
        IntVector(v)
    }

    /// The componentwise negation.
    pub fn negated(&self) -> Self {
        IntVector(self.0.iter().map(|&v| -v).collect())
    }

    /// Iterates over components.
    pub fn iter(&self) -> std::slice::Iter<'_, i64> {
        self.0.iter()
    }
}

impl Index<usize> for IntVector {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl From<Vec<i64>> for IntVector {
    fn from(v: Vec<i64>) -> Self {
        IntVector(v)
    }
}

impl<const N: usize> From<[i64; N]> for IntVector {
    fn from(v: [i64; N]) -> Self {
        IntVector(v.to_vec())
    }
}

impl FromIterator<i64> for IntVector {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        IntVector(iter.into_iter().collect())
    }
}

impl fmt::Debug for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}
