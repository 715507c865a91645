//! Upward-cofinite integer sets.
//!
//! Every set of values met in this crate (semigroups, relative ideals,
//! value sets of fractional ideals) is bounded below and contains every
//! integer from some point on. Such a set is stored as a sorted list of
//! the members below a threshold together with the threshold itself.
//! The representation is canonical: `threshold - 1` is never a member,
//! so two equal sets compare equal structurally.

use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntSet {
    below: Vec<i64>,
    threshold: i64,
}

impl IntSet {
    /// The set of all integers `>= threshold`.
    pub fn tail(threshold: i64) -> Self {
        IntSet { below: Vec::new(), threshold }
    }

    /// `members ∪ [threshold, ∞)`.
    pub fn new<I: IntoIterator<Item = i64>>(members: I, threshold: i64) -> Self {
        let set: BTreeSet<i64> = members.into_iter().filter(|&x| x < threshold).collect();
        let mut below: Vec<i64> = set.into_iter().collect();
        let mut threshold = threshold;
        while below.last() == Some(&(threshold - 1)) {
            below.pop();
            threshold -= 1;
        }
        IntSet { below, threshold }
    }

    pub fn threshold(&self) -> i64 {
        self.threshold
    }

    /// Members strictly below the threshold, ascending.
    pub fn explicit(&self) -> &[i64] {
        &self.below
    }

    pub fn min(&self) -> i64 {
        self.below.first().copied().unwrap_or(self.threshold)
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= self.threshold || self.below.binary_search(&x).is_ok()
    }

    /// Members in `[lo, hi)`.
    pub fn members_in(&self, lo: i64, hi: i64) -> impl Iterator<Item = i64> + '_ {
        (lo.max(self.min())..hi).filter(move |&x| self.contains(x))
    }

    /// `{x + k : x ∈ self}`.
    pub fn shifted(&self, k: i64) -> Self {
        IntSet {
            below: self.below.iter().map(|x| x + k).collect(),
            threshold: self.threshold + k,
        }
    }

    pub fn union(&self, other: &IntSet) -> Self {
        let threshold = self.threshold.min(other.threshold);
        let lo = self.min().min(other.min());
        IntSet::new((lo..threshold).filter(|&x| self.contains(x) || other.contains(x)), threshold)
    }

    pub fn intersection(&self, other: &IntSet) -> Self {
        let threshold = self.threshold.max(other.threshold);
        let lo = self.min().max(other.min());
        IntSet::new((lo..threshold).filter(|&x| self.contains(x) && other.contains(x)), threshold)
    }

    /// Minkowski sum `{x + y : x ∈ self, y ∈ other}`.
    pub fn sumset(&self, other: &IntSet) -> Self {
        let threshold = (self.threshold + other.min()).min(other.threshold + self.min());
        let mut members = BTreeSet::new();
        for &x in self.with_explicit_prefix(threshold - other.min()).iter() {
            for &y in other.with_explicit_prefix(threshold - x).iter() {
                members.insert(x + y);
            }
        }
        IntSet::new(members, threshold)
    }

    // Members below `hi` (hi may exceed the threshold).
    fn with_explicit_prefix(&self, hi: i64) -> Vec<i64> {
        self.members_in(i64::MIN, hi).collect()
    }

    /// `#(self \ other)`; both sets are bounded below so the count is finite.
    pub fn count_minus(&self, other: &IntSet) -> usize {
        self.members_in(i64::MIN, other.threshold).filter(|&x| !other.contains(x)).count()
    }

    /// Elements of `self \ other`, ascending.
    pub fn minus(&self, other: &IntSet) -> Vec<i64> {
        self.members_in(i64::MIN, other.threshold).filter(|&x| !other.contains(x)).collect()
    }

    pub fn is_subset(&self, other: &IntSet) -> bool {
        self.count_minus(other) == 0
    }

    /// `base + self ⊆ self`, i.e. `self` is a relative ideal of the monoid `base`.
    pub fn is_stable_under(&self, base: &IntSet) -> bool {
        self.sumset(base).is_subset(self)
    }
}

impl fmt::Debug for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for x in &self.below {
            write!(f, "{x}, ")?;
        }
        write!(f, "{}→}}", self.threshold)
    }
}
