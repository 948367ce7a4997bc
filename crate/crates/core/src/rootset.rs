//! Subsets of the positive roots, stored as bit sets.

use std::fmt;

use crate::error::{Error, Result};
use crate::roots::RootSystem;

/// A set of positive-root indices. Holds at most 128 roots, enough for E8.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSet(u128);

impl RootSet {
    pub const CAPACITY: usize = 128;

    pub const fn empty() -> Self {
        RootSet(0)
    }

    /// The set `{0, …, n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= Self::CAPACITY);
        if n == Self::CAPACITY {
            RootSet(u128::MAX)
        } else {
            RootSet((1u128 << n) - 1)
        }
    }

    pub const fn from_bits(bits: u128) -> Self {
        RootSet(bits)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        RootSet(1u128 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u128 << i);
    }

    pub fn with(mut self, i: usize) -> Self {
        self.insert(i);
        self
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: RootSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: RootSet) -> Self {
        RootSet(self.0 | other.0)
    }

    pub fn intersection(self, other: RootSet) -> Self {
        RootSet(self.0 & other.0)
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        })
    }
}

impl FromIterator<usize> for RootSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = RootSet::empty();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A root set closed under addition: `β, γ ∈ A` and `β + γ ∈ Φ⁺` imply
/// `β + γ ∈ A`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClosedSet(RootSet);

impl ClosedSet {
    pub fn new(rs: &RootSystem, set: RootSet) -> Result<Self> {
        match rs.closure_witness(set) {
            None => Ok(ClosedSet(set)),
            Some((b, g)) => Err(Error::NotClosed(b, g)),
        }
    }

    /// Wraps a set that is known to be closed.
    pub(crate) fn new_unchecked(set: RootSet) -> Self {
        ClosedSet(set)
    }

    pub fn empty() -> Self {
        ClosedSet(RootSet::empty())
    }

    pub fn all(rs: &RootSystem) -> Self {
        ClosedSet(rs.all_roots())
    }

    pub fn set(self) -> RootSet {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0.contains(i)
    }

    pub fn len(self) -> usize {
        self.0.len()
    }

    pub fn is_empty(self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(self, other: ClosedSet) -> bool {
        self.0.is_subset(other.0)
    }
}

impl fmt::Debug for ClosedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Closed{:?}", self.0)
    }
}

/// Default bound on `|Φ⁺|` for exhaustive closed-set enumeration.
pub const DEFAULT_CLOSED_SET_BOUND: usize = 12;

/// All closed subsets of `Φ⁺`, in increasing bit order.
///
/// Filters all `2^|Φ⁺|` subsets, so refuses when `|Φ⁺|` exceeds `bound`.
pub fn enumerate_closed_sets(rs: &RootSystem, bound: usize) -> Result<impl Iterator<Item = ClosedSet> + '_> {
    let n = rs.len();
    if n > bound || n >= 64 {
        return Err(Error::TooLarge { size: 1u128 << n.min(127), bound: 1u128 << bound.min(127) });
    }
    Ok((0u64..1u64 << n).map(|b| RootSet::from_bits(b as u128)).filter(|&s| rs.is_closed(s)).map(ClosedSet))
}
