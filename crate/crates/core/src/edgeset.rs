//! Edge labels, edge subsets and canonical set families.
//!
//! Every delta-matroid in this crate lives on the edge set of a map, whose
//! elements are numbered `1..=m`. Subsets are stored as 64-bit masks (bit
//! `i` is edge `i + 1`), which keeps the exchange checkers allocation free.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

/// Largest edge label an [`EdgeSet`] can hold.
pub const MAX_EDGE_ID: u32 = 64;

/// Label of an edge of the embedded graph, i.e. of one red/green
/// quadrilateral of the flag graph. Labels start at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

impl EdgeId {
    /// Zero-based position, as used for bit indices and array offsets.
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize - 1
    }

    #[inline]
    pub fn from_index(i: usize) -> Self {
        EdgeId(i as u32 + 1)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A subset of `{1, …, 64}`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct EdgeSet(u64);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    #[inline]
    pub fn from_bits(bits: u64) -> Self {
        EdgeSet(bits)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    /// The set `{1, …, m}`.
    pub fn full(m: usize) -> Self {
        assert!(m <= MAX_EDGE_ID as usize, "edge set holds at most 64 labels");
        if m == 64 {
            EdgeSet(u64::MAX)
        } else {
            EdgeSet((1u64 << m) - 1)
        }
    }

    #[inline]
    pub fn singleton(e: EdgeId) -> Self {
        debug_assert!(e.0 >= 1 && e.0 <= MAX_EDGE_ID);
        EdgeSet(1u64 << e.index())
    }

    #[inline]
    pub fn contains(self, e: EdgeId) -> bool {
        e.0 >= 1 && e.0 <= MAX_EDGE_ID && self.0 >> e.index() & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, e: EdgeId) {
        self.0 |= EdgeSet::singleton(e).0;
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        EdgeSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        EdgeSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        EdgeSet(self.0 & !other.0)
    }

    #[inline]
    pub fn symmetric_difference(self, other: Self) -> Self {
        EdgeSet(self.0 ^ other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// `self Δ {x, y}`. When `x == y` the pair collapses to `{x}`.
    #[inline]
    pub fn exchange(self, x: EdgeId, y: EdgeId) -> Self {
        if x == y {
            self.symmetric_difference(EdgeSet::singleton(x))
        } else {
            EdgeSet(self.0 ^ EdgeSet::singleton(x).0 ^ EdgeSet::singleton(y).0)
        }
    }

    /// Elements in increasing order.
    pub fn iter(self) -> EdgeSetIter {
        EdgeSetIter(self.0)
    }
}

impl FromIterator<EdgeId> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        let mut s = EdgeSet::EMPTY;
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl IntoIterator for EdgeSet {
    type Item = EdgeId;
    type IntoIter = EdgeSetIter;

    fn into_iter(self) -> EdgeSetIter {
        self.iter()
    }
}

pub struct EdgeSetIter(u64);

impl Iterator for EdgeSetIter {
    type Item = EdgeId;

    #[inline]
    fn next(&mut self) -> Option<EdgeId> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(EdgeId::from_index(i))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for EdgeSetIter {}

/// Canonical order: by size, then lexicographically on the sorted elements.
impl Ord for EdgeSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for EdgeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A deduplicated, canonically ordered family of subsets of a ground set.
///
/// Two families compare equal exactly when they have the same ground set and
/// the same members, independent of the order they were built in.
#[derive(Clone, PartialEq, Eq)]
pub struct SetFamily {
    ground: EdgeSet,
    members: Vec<EdgeSet>,
    lookup: HashSet<EdgeSet>,
}

impl SetFamily {
    /// Builds a family, sorting and deduplicating `members`. Elements of the
    /// members that fall outside `ground` are added to it.
    pub fn new(ground: EdgeSet, members: impl IntoIterator<Item = EdgeSet>) -> Self {
        let mut members: Vec<EdgeSet> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        let ground = members.iter().fold(ground, |g, s| g.union(*s));
        let lookup = members.iter().copied().collect();
        SetFamily {
            ground,
            members,
            lookup,
        }
    }

    /// Family whose ground set is the union of its members.
    pub fn from_sets(members: impl IntoIterator<Item = EdgeSet>) -> Self {
        SetFamily::new(EdgeSet::EMPTY, members)
    }

    pub fn ground(&self) -> EdgeSet {
        self.ground
    }

    pub fn members(&self) -> &[EdgeSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    #[inline]
    pub fn contains(&self, s: EdgeSet) -> bool {
        self.lookup.contains(&s)
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeSet> + '_ {
        self.members.iter().copied()
    }

    pub fn is_subfamily_of(&self, other: &SetFamily) -> bool {
        self.iter().all(|s| other.contains(s))
    }

    /// Members complemented within the ground set. This is the red-pair view
    /// of a green-pair feasible family.
    pub fn complemented(&self) -> SetFamily {
        let ground = self.ground;
        SetFamily::new(ground, self.iter().map(|s| ground.difference(s)))
    }

    pub fn min_size(&self) -> Option<usize> {
        self.members.first().map(|s| s.len())
    }

    pub fn max_size(&self) -> Option<usize> {
        self.members.last().map(|s| s.len())
    }

    /// Members of exactly `k` elements.
    pub fn of_size(&self, k: usize) -> SetFamily {
        SetFamily::new(self.ground, self.iter().filter(|s| s.len() == k))
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetFamily(ground={}, ", self.ground)?;
        f.debug_list().entries(self.members.iter()).finish()?;
        f.write_str(")")
    }
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(ids: &[u32]) -> EdgeSet {
        ids.iter().map(|&i| EdgeId(i)).collect()
    }

    #[test]
    fn canonical_order_is_size_then_lex() {
        let fam = SetFamily::from_sets([set(&[2, 3]), set(&[1]), set(&[]), set(&[1, 4]), set(&[3])]);
        let got: Vec<String> = fam.iter().map(|s| s.to_string()).collect();
        assert_eq!(got, ["{}", "{1}", "{3}", "{1,4}", "{2,3}"]);
    }

    #[test]
    fn exchange_with_equal_elements_is_single_flip() {
        let s = set(&[1, 2]);
        assert_eq!(s.exchange(EdgeId(1), EdgeId(1)), set(&[2]));
        assert_eq!(s.exchange(EdgeId(1), EdgeId(3)), set(&[2, 3]));
    }

    #[test]
    fn duplicates_collapse() {
        let fam = SetFamily::from_sets([set(&[1]), set(&[1]), set(&[2])]);
        assert_eq!(fam.len(), 2);
        assert_eq!(fam.ground(), set(&[1, 2]));
    }

    #[test]
    fn complement_within_ground() {
        let fam = SetFamily::new(set(&[1, 2]), [set(&[]), set(&[1, 2])]);
        assert_eq!(fam.complemented(), fam);
        let fam = SetFamily::new(set(&[1, 2, 3]), [set(&[1])]);
        assert_eq!(fam.complemented().members(), &[set(&[2, 3])]);
    }

    proptest! {
        #[test]
        fn family_equality_ignores_insertion_order(mut bits in proptest::collection::vec(0u64..256, 0..20)) {
            let a = SetFamily::from_sets(bits.iter().map(|&b| EdgeSet::from_bits(b)));
            bits.reverse();
            let b = SetFamily::from_sets(bits.iter().map(|&b| EdgeSet::from_bits(b)));
            prop_assert_eq!(a, b);
        }

        #[test]
        fn iteration_matches_bits(bits in any::<u64>()) {
            let s = EdgeSet::from_bits(bits);
            let rebuilt: EdgeSet = s.iter().collect();
            prop_assert_eq!(rebuilt, s);
            prop_assert_eq!(s.iter().len(), bits.count_ones() as usize);
        }
    }
}
