//! Finite sets of naturals.
//!
//! Domain and range complements of elements live here, and so does the
//! semilattice of finite subsets under union that the idempotents are
//! isomorphic to.

use std::collections::BTreeSet;
use std::fmt;

use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FiniteSet<T: Scalar>(BTreeSet<T>);

impl<T: Scalar> FiniteSet<T> {
    pub fn new() -> Self {
        FiniteSet(BTreeSet::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: T) -> bool {
        self.0.contains(&x)
    }

    /// Returns `false` if `x` was already present.
    pub fn insert(&mut self, x: T) -> bool {
        self.0.insert(x)
    }

    pub fn remove(&mut self, x: T) -> bool {
        self.0.remove(&x)
    }

    /// Ascending iteration.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = T> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn max(&self) -> Option<T> {
        self.0.last().copied()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union(&self, other: &Self) -> Self {
        FiniteSet(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &Self) -> Self {
        FiniteSet(self.0.intersection(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &Self) -> Self {
        FiniteSet(self.0.difference(&other.0).copied().collect())
    }

    pub fn as_btree(&self) -> &BTreeSet<T> {
        &self.0
    }
}

impl<T: Scalar> FromIterator<T> for FiniteSet<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        FiniteSet(iter.into_iter().collect())
    }
}

impl<T: Scalar, const N: usize> From<[T; N]> for FiniteSet<T> {
    fn from(items: [T; N]) -> Self {
        items.into_iter().collect()
    }
}

impl<T: Scalar> IntoIterator for FiniteSet<T> {
    type Item = T;
    type IntoIter = std::collections::btree_set::IntoIter<T>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

/// Written as `{a,b,c}`, ascending.
impl<T: Scalar> fmt::Display for FiniteSet<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl<T: Scalar> fmt::Debug for FiniteSet<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
