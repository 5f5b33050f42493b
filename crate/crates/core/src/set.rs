//! Subsets of a ground set `{0, 1, ..., n-1}` stored as a single `u64` word.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::{BuildHasherDefault, Hasher};

/// Largest ground set a single-word [`ElementSet`] can describe.
pub const MAX_GROUND: usize = 64;

/// A subset of `{0, ..., 63}` encoded as a bit vector (bit `i` set iff `i` is a member).
///
/// The encoding is canonical, so set equality is word equality and the derived
/// ordering is colexicographic on the member lists.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The ground set `{0, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_GROUND, "ground set of size {n} does not fit in one word");
        if n == MAX_GROUND {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        assert!(e < MAX_GROUND, "element {e} out of range");
        ElementSet(1u64 << e)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        e < MAX_GROUND && self.0 >> e & 1 == 1
    }

    #[must_use]
    pub fn with(self, e: usize) -> Self {
        self | Self::singleton(e)
    }

    #[must_use]
    pub fn without(self, e: usize) -> Self {
        self - Self::singleton(e)
    }

    /// `(self - out) ∪ in`, the result of exchanging one element.
    #[must_use]
    pub fn exchange(self, out: usize, into: usize) -> Self {
        self.without(out).with(into)
    }

    pub fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: ElementSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Size of the symmetric difference.
    pub fn distance(self, other: ElementSet) -> usize {
        (self.0 ^ other.0).count_ones() as usize
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest member plus one, i.e. the least `n` with `self ⊆ {0..n-1}`.
    pub fn span(self) -> usize {
        MAX_GROUND - self.0.leading_zeros() as usize
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Drops element `e` and shifts every larger element down by one.
    #[must_use]
    pub fn compact_out(self, e: usize) -> Self {
        let low = (1u64 << e) - 1;
        ElementSet((self.0 & low) | ((self.0 >> 1) & !low))
    }

    /// Relabels members through `labels` (member `i` becomes `labels[i]`).
    pub fn relabel(self, labels: &[usize]) -> Self {
        self.iter().map(|i| labels[i]).collect()
    }
}

impl std::ops::BitOr for ElementSet {
    type Output = ElementSet;
    fn bitor(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for ElementSet {
    type Output = ElementSet;
    fn bitand(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 & rhs.0)
    }
}

impl std::ops::BitXor for ElementSet {
    type Output = ElementSet;
    fn bitxor(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 ^ rhs.0)
    }
}

impl std::ops::Sub for ElementSet {
    type Output = ElementSet;
    fn sub(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 & !rhs.0)
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(ElementSet::EMPTY, |acc, e| acc.with(e))
    }
}

impl<const K: usize> From<[usize; K]> for ElementSet {
    fn from(elements: [usize; K]) -> Self {
        elements.into_iter().collect()
    }
}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = Elements;
    fn into_iter(self) -> Elements {
        self.iter()
    }
}

/// Members of an [`ElementSet`] in increasing order.
#[derive(Clone, Debug)]
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Elements {}

impl fmt::Display for ElementSet {
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

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Binomial coefficient, saturating at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
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

/// All `k`-subsets of `{0..n-1}` in colex order (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> KSubsets {
    assert!(n <= MAX_GROUND, "ground set of size {n} does not fit in one word");
    let next = if k > n { None } else { Some(ElementSet::full(k).0) };
    KSubsets { n, next }
}

/// The subset of rank `rank` in the colex order of `k`-subsets of `{0..n-1}`.
pub fn unrank_k_subset(n: usize, k: usize, mut rank: u64) -> Option<ElementSet> {
    if k > n || rank >= binomial(n, k) {
        return None;
    }
    let mut bits = 0u64;
    let mut top = n;
    for slot in (1..=k).rev() {
        // largest c with C(c, slot) <= rank
        let mut c = slot - 1;
        while c + 1 < top && binomial(c + 1, slot) <= rank {
            c += 1;
        }
        rank -= binomial(c, slot);
        bits |= 1u64 << c;
        top = c;
    }
    Some(ElementSet(bits))
}

/// Enumerates `k`-subsets starting from colex rank `start`, yielding at most `count` of them.
pub fn k_subsets_range(n: usize, k: usize, start: u64, count: u64) -> impl Iterator<Item = ElementSet> {
    let first = unrank_k_subset(n, k, start);
    KSubsets {
        n,
        next: first.map(|s| s.0),
    }
    .take(count.min(usize::MAX as u64) as usize)
}

#[derive(Clone, Debug)]
pub struct KSubsets {
    n: usize,
    next: Option<u64>,
}

impl Iterator for KSubsets {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            let low = cur & cur.wrapping_neg();
            let (ripple, overflow) = cur.overflowing_add(low);
            if overflow {
                None
            } else {
                let ones = ((cur ^ ripple) >> 2) / low;
                let nxt = ripple | ones;
                (ElementSet(nxt).span() <= self.n).then_some(nxt)
            }
        };
        Some(ElementSet(cur))
    }
}

/// Hasher for single-word keys; the encodings are already well spread in the low bits.
#[derive(Default, Clone, Copy)]
pub struct WordHasher(u64);

impl Hasher for WordHasher {
    fn finish(&self) -> u64 {
        self.0
    }

    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 = (self.0.rotate_left(5) ^ b as u64).wrapping_mul(0x51_7c_c1_b7_27_22_0a_95);
        }
    }

    fn write_u64(&mut self, word: u64) {
        self.0 = (self.0.rotate_left(5) ^ word).wrapping_mul(0x51_7c_c1_b7_27_22_0a_95);
    }
}

pub type SetIndex = HashSet<ElementSet, BuildHasherDefault<WordHasher>>;
pub type SetMap<V> = HashMap<ElementSet, V, BuildHasherDefault<WordHasher>>;
