//! Bitset vertex sets and combination iteration.
//!
//! A [`VertexSet`] stands for an induced subgraph: the edges are always all
//! host edges between its members, so only the vertices are stored.

use std::fmt;

use serde::{Serialize, Serializer};

/// Largest vertex count supported by the bitset representation.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex ids in `0..64`, stored as a single machine word.
///
/// Ordering is by bit pattern, i.e. numeric order of the underlying word;
/// this is the "lexicographic" order used for every tie-break.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// The set `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        assert!(
            n <= MAX_VERTICES,
            "vertex set limited to {MAX_VERTICES} ids"
        );
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
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
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
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

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            assert!(v < MAX_VERTICES, "vertex id {v} out of bitset range");
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Serialized as the sorted list of member ids.
impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

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

/// All `s`-subsets of `{0..n-1}` in increasing bit-pattern order.
pub fn subsets_of_size(n: usize, s: usize) -> Combinations {
    combinations_within(VertexSet::full(n), s)
}

/// All `s`-subsets of `host` in increasing bit-pattern order.
///
/// Combinations are generated over member positions with Gosper's hack and
/// scattered onto the host's bits; the scatter is monotone, so the order
/// of the output matches the order of the positions.
pub fn combinations_within(host: VertexSet, s: usize) -> Combinations {
    let members: Vec<usize> = host.to_vec();
    let m = members.len();
    let next = if s > m {
        None
    } else if s == 0 {
        Some(0)
    } else {
        Some(low_mask(s))
    };
    Combinations {
        members,
        limit: m,
        next,
    }
}

#[inline]
fn low_mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// Iterator returned by [`subsets_of_size`] and [`combinations_within`].
#[derive(Clone, Debug)]
pub struct Combinations {
    members: Vec<usize>,
    limit: usize,
    next: Option<u64>,
}

impl Combinations {
    fn scatter(&self, positions: u64) -> VertexSet {
        let mut out = 0u64;
        let mut p = positions;
        while p != 0 {
            let i = p.trailing_zeros() as usize;
            out |= 1u64 << self.members[i];
            p &= p - 1;
        }
        VertexSet(out)
    }
}

impl Iterator for Combinations {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        let item = self.scatter(cur);
        self.next = if cur == 0 {
            None
        } else {
            // Gosper: next larger word with the same popcount.
            let c = cur & cur.wrapping_neg();
            let (r, overflow) = cur.overflowing_add(c);
            if overflow || c == 0 {
                None
            } else {
                let nxt = (((r ^ cur) >> 2) / c) | r;
                if self.limit < 64 && nxt >> self.limit != 0 {
                    None
                } else {
                    Some(nxt)
                }
            }
        };
        Some(item)
    }
}

/// Binomial coefficient, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}
