//! Subsets of a point universe, stored as one machine word.
//!
//! Every geometry in this crate lives on at most [`MAX_POINTS`] points, so a
//! subset fits in a `u64` and the set algebra (union, intersection, symmetric
//! difference, complement) is constant-time.

use std::fmt;

use crate::error::{GeometryError, Result};

/// Hard cap on the size of a point universe.
pub const MAX_POINTS: usize = 64;

/// A subset of the points `0..universe`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PointSet {
    universe: usize,
    bits: u64,
}

impl PointSet {
    /// The empty subset of a `universe`-point ground set.
    pub fn empty(universe: usize) -> Self {
        assert!(universe <= MAX_POINTS, "universe {universe} exceeds {MAX_POINTS}");
        PointSet { universe, bits: 0 }
    }

    /// The full ground set.
    pub fn full(universe: usize) -> Self {
        assert!(universe <= MAX_POINTS);
        let bits = if universe == MAX_POINTS {
            u64::MAX
        } else {
            (1u64 << universe) - 1
        };
        PointSet { universe, bits }
    }

    /// Builds a set from point indices, rejecting out-of-range members.
    pub fn from_indices(universe: usize, indices: &[usize]) -> Result<Self> {
        let mut set = PointSet::empty(universe);
        for &i in indices {
            if i >= universe {
                return Err(GeometryError::Domain(format!(
                    "point index {i} out of range for universe of {universe}"
                )));
            }
            set.bits |= 1 << i;
        }
        Ok(set)
    }

    pub(crate) fn from_bits(universe: usize, bits: u64) -> Self {
        debug_assert!(universe <= MAX_POINTS);
        debug_assert_eq!(bits & !Self::full(universe).bits, 0);
        PointSet { universe, bits }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub(crate) fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        self.bits == Self::full(self.universe).bits
    }

    pub fn contains(&self, point: usize) -> bool {
        point < self.universe && self.bits >> point & 1 == 1
    }

    pub fn insert(&mut self, point: usize) {
        assert!(point < self.universe);
        self.bits |= 1 << point;
    }

    pub fn is_subset_of(&self, other: &PointSet) -> bool {
        self.assert_same_universe(other);
        self.bits & !other.bits == 0
    }

    pub fn union(&self, other: &PointSet) -> PointSet {
        self.assert_same_universe(other);
        PointSet { universe: self.universe, bits: self.bits | other.bits }
    }

    pub fn intersection(&self, other: &PointSet) -> PointSet {
        self.assert_same_universe(other);
        PointSet { universe: self.universe, bits: self.bits & other.bits }
    }

    pub fn symmetric_difference(&self, other: &PointSet) -> PointSet {
        self.assert_same_universe(other);
        PointSet { universe: self.universe, bits: self.bits ^ other.bits }
    }

    /// Complement within the universe.
    pub fn complement(&self) -> PointSet {
        PointSet {
            universe: self.universe,
            bits: !self.bits & Self::full(self.universe).bits,
        }
    }

    /// Ascending iterator over the members.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let universe = self.universe;
        let bits = self.bits;
        (0..universe).filter(move |i| bits >> i & 1 == 1)
    }

    /// Members as an ascending vector.
    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn assert_same_universe(&self, other: &PointSet) {
        assert_eq!(
            self.universe, other.universe,
            "point sets over different universes"
        );
    }
}

/// Orders sets by their ascending member lists, so `{0,9} < {1,2}` and a set
/// precedes its proper supersets. This is the order used for line
/// normalization and the deterministic hyperplane numbering.
impl Ord for PointSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PointSet {
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

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_complement() {
        let a = PointSet::from_indices(10, &[0, 3, 7]).unwrap();
        assert_eq!(a.complement().len(), 7);
        assert_eq!(a.complement().complement(), a);
        assert!(PointSet::full(10).is_full());
        assert!(PointSet::empty(10).complement().is_full());
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(PointSet::from_indices(5, &[5]).is_err());
    }

    #[test]
    fn set_order_is_member_list_order() {
        let u = 10;
        let mk = |idx: &[usize]| PointSet::from_indices(u, idx).unwrap();
        assert!(mk(&[0, 9]) < mk(&[1, 2]));
        assert!(mk(&[0, 1, 4]) < mk(&[0, 2, 5]));
        assert!(mk(&[0, 1]) < mk(&[0, 1, 2]));
    }

    fn arb_set(universe: usize) -> impl Strategy<Value = PointSet> {
        prop::bits::u64::masked(PointSet::full(universe).bits())
            .prop_map(move |bits| PointSet::from_bits(universe, bits))
    }

    proptest! {
        #[test]
        fn sym_diff_self_is_empty(a in arb_set(15)) {
            prop_assert!(a.symmetric_difference(&a).is_empty());
        }

        #[test]
        fn sym_diff_commutes(a in arb_set(15), b in arb_set(15)) {
            prop_assert_eq!(a.symmetric_difference(&b), b.symmetric_difference(&a));
        }

        #[test]
        fn double_complement(a in arb_set(15)) {
            prop_assert_eq!(a.complement().complement(), a);
        }

        // A Δ B Δ complement(A Δ B) is the full universe.
        #[test]
        fn xor_with_complement_fills_universe(a in arb_set(15), b in arb_set(15)) {
            let d = a.symmetric_difference(&b);
            prop_assert!(d.symmetric_difference(&d.complement()).is_full());
        }
    }
}
