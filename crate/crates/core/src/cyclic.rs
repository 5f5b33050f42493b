//! Cyclic orders whose `r`-intervals are all bases.
//!
//! [`find_cyclic_order`] builds one for any sparse paving matroid meeting the
//! density condition `r·|A| ≤ r(A)·n`; [`gabow_cycle`] builds one through two
//! disjoint bases, listing the first basis and then the second.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::matroid::{Matroid, MatroidError, SparsePavingMatroid};
use crate::set::ElementSet;

/// Ground sets above this size are refused by the exhaustive oracles.
pub const DEFAULT_ORACLE_MAX_N: usize = 9;
/// Ground sets above this size are refused by the subset-scanning density check.
pub const DENSITY_SCAN_MAX_N: usize = 20;

const SEED_ATTEMPTS_PER_ELEMENT: usize = 64;
const SEED_STREAM: u64 = 0x5eed_c1c1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CyclicError {
    #[error("order of length {len} is not a permutation of a ground set of size {n}")]
    NotAPermutation { len: usize, n: usize },
    #[error("order and matroid live on different ground sets")]
    GroundSetMismatch,
    #[error("not orderable{}", witness.map(|w| format!("; density witness A = {w}")).unwrap_or_default())]
    NotOrderable { witness: Option<ElementSet> },
    #[error("the two bases are not disjoint")]
    NotDisjoint,
    #[error("{0} is not a basis")]
    NotBases(ElementSet),
    #[error("{what} needs n ≤ {cap}, got n = {n}")]
    TooLarge { what: &'static str, n: usize, cap: usize },
    #[error("construction stalled: {0}")]
    Stuck(&'static str),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// A cyclic arrangement `(a0, ..., a(n-1))` of the ground set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclicOrder(Vec<usize>);

impl CyclicOrder {
    /// Checks that `elements` lists `0..n-1` exactly once each.
    pub fn new(elements: Vec<usize>, n: usize) -> Result<Self, CyclicError> {
        let err = CyclicError::NotAPermutation { len: elements.len(), n };
        if elements.len() != n {
            return Err(err);
        }
        let mut seen = ElementSet::EMPTY;
        for &e in &elements {
            if e >= n || seen.contains(e) {
                return Err(err);
            }
            seen = seen.with(e);
        }
        Ok(CyclicOrder(elements))
    }

    pub fn identity(n: usize) -> Self {
        CyclicOrder((0..n).collect())
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `{a_p, a_(p+1), ..., a_(p+k-1)}`, indices taken mod `n`.
    pub fn interval(&self, p: usize, k: usize) -> ElementSet {
        let n = self.0.len();
        (0..k).map(|j| self.0[(p + j) % n]).collect()
    }

    /// The `n` windows of length `k`, by starting position.
    pub fn intervals(&self, k: usize) -> impl Iterator<Item = ElementSet> + '_ {
        (0..self.0.len()).map(move |p| self.interval(p, k))
    }

    /// Rotates so that position `p` comes first.
    #[must_use]
    pub fn rotated(&self, p: usize) -> Self {
        let mut v = self.0.clone();
        let shift = p % v.len().max(1);
        v.rotate_left(shift);
        CyclicOrder(v)
    }

    /// Maps each entry through `labels`.
    #[must_use]
    pub fn relabel(&self, labels: &[usize]) -> Self {
        CyclicOrder(self.0.iter().map(|&e| labels[e]).collect())
    }
}

impl fmt::Display for CyclicOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CyclicOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.0.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

fn check_ground(n: usize, ord: &CyclicOrder) -> Result<(), CyclicError> {
    if ord.len() != n {
        return Err(CyclicError::GroundSetMismatch);
    }
    Ok(())
}

/// Number of `r`-intervals of `ord` that are circuit-hyperplanes.
pub fn ch_interval_count(m: &SparsePavingMatroid, ord: &CyclicOrder) -> Result<usize, CyclicError> {
    check_ground(m.n(), ord)?;
    Ok(count_bad(m, ord))
}

fn count_bad(m: &SparsePavingMatroid, ord: &CyclicOrder) -> usize {
    if m.ch_count() == 0 {
        return 0;
    }
    ord.intervals(m.rank()).filter(|&s| m.is_circuit_hyperplane(s)).count()
}

/// Every `r`-interval is a basis, tested through [`Matroid::is_basis`] only.
pub fn is_basis_cycle<M: Matroid>(m: &M, ord: &CyclicOrder) -> bool {
    ord.len() == m.ground_size() && ord.intervals(m.rank()).all(|s| m.is_basis(s))
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `ch · r! · (n-r)! / (n-1)!`, the mean number of circuit-hyperplane
/// intervals over all cycles on the ground set.
pub fn average_ch_intervals(m: &SparsePavingMatroid) -> BigRational {
    let (n, r) = (m.n(), m.rank());
    if n == 0 {
        return BigRational::zero();
    }
    let num = BigInt::from(m.ch_count()) * factorial(r) * factorial(n - r);
    BigRational::new(num, factorial(n - 1))
}

/// Visits the `(n-1)!` orders with `0` in front, in lexicographic order,
/// until `visit` returns true.
fn for_each_rooted(n: usize, mut visit: impl FnMut(&CyclicOrder) -> bool) -> bool {
    if n == 0 {
        return visit(&CyclicOrder(Vec::new()));
    }
    let mut ord = CyclicOrder((0..n).collect());
    loop {
        if visit(&ord) {
            return true;
        }
        let tail = &mut ord.0[1..];
        let Some(i) = (1..tail.len()).rev().find(|&i| tail[i - 1] < tail[i]) else {
            return false;
        };
        let j = (i..tail.len())
            .rev()
            .find(|&j| tail[i - 1] < tail[j])
            .expect("successor");
        tail.swap(i - 1, j);
        tail[i..].reverse();
    }
}

/// The mean of [`ch_interval_count`] taken over every rooted cycle.
pub fn exhaustive_mean_ch_intervals(m: &SparsePavingMatroid, max_n: usize) -> Result<BigRational, CyclicError> {
    let n = m.n();
    if n > max_n {
        return Err(CyclicError::TooLarge {
            what: "exhaustive cycle mean",
            n,
            cap: max_n,
        });
    }
    if n == 0 {
        return Ok(BigRational::zero());
    }
    let (mut total, mut cycles) = (0u64, 0u64);
    for_each_rooted(n, |ord| {
        total += count_bad(m, ord) as u64;
        cycles += 1;
        false
    });
    Ok(BigRational::new(BigInt::from(total), BigInt::from(cycles)))
}

/// The density condition in closed form: only a circuit-hyperplane `H` can
/// violate it, and does so iff `r² > n(r - 1)`. Returns the violating set.
pub fn check_density(m: &SparsePavingMatroid) -> Result<(), ElementSet> {
    let (n, r) = (m.n(), m.rank());
    match m.circuit_hyperplanes().first() {
        Some(&h) if r * r > n * (r.max(1) - 1) => Err(h),
        _ => Ok(()),
    }
}

/// The density condition by scanning every nonempty subset in encoding order.
/// The outer error is the size guard; the inner one carries the first
/// violating subset.
pub fn check_density_brute<M: Matroid>(m: &M, max_n: usize) -> Result<Result<(), ElementSet>, CyclicError> {
    let (n, r) = (m.ground_size(), m.rank());
    if n > max_n {
        return Err(CyclicError::TooLarge {
            what: "density scan",
            n,
            cap: max_n,
        });
    }
    for bits in 1..(1u64 << n) {
        let a = ElementSet::from_bits(bits);
        if r * a.len() > m.rank_of(a) * n {
            return Ok(Err(a));
        }
    }
    Ok(Ok(()))
}

/// Which branch of [`find_cyclic_order_traced`] produced the order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderRoute {
    /// Rank or nullity at most two.
    SmallRank,
    /// The seed cycle already avoided every circuit-hyperplane.
    Seed,
    Sigma2,
    Sigma3,
    Sigma4,
    Sigma5,
    Sigma6,
    Sigma,
}

impl fmt::Display for OrderRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderRoute::SmallRank => "small-rank",
            OrderRoute::Seed => "seed",
            OrderRoute::Sigma2 => "sigma2",
            OrderRoute::Sigma3 => "sigma3",
            OrderRoute::Sigma4 => "sigma4",
            OrderRoute::Sigma5 => "sigma5",
            OrderRoute::Sigma6 => "sigma6",
            OrderRoute::Sigma => "sigma",
        })
    }
}

/// Rearrangements of the first four places of a seed whose single bad interval
/// occupies places `3..r+3`, tried in order.
const LADDER: [(OrderRoute, [usize; 4]); 6] = [
    (OrderRoute::Sigma2, [0, 1, 3, 2]),
    (OrderRoute::Sigma3, [0, 2, 3, 1]),
    (OrderRoute::Sigma4, [0, 3, 2, 1]),
    (OrderRoute::Sigma5, [2, 3, 0, 1]),
    (OrderRoute::Sigma6, [3, 2, 0, 1]),
    (OrderRoute::Sigma, [1, 2, 3, 0]),
];

/// A cyclic order whose `r`-intervals are all bases, or the density witness
/// showing none exists.
pub fn find_cyclic_order(m: &SparsePavingMatroid) -> Result<CyclicOrder, CyclicError> {
    find_cyclic_order_traced(m).map(|(ord, _)| ord)
}

/// [`find_cyclic_order`], also reporting which branch succeeded.
pub fn find_cyclic_order_traced(m: &SparsePavingMatroid) -> Result<(CyclicOrder, OrderRoute), CyclicError> {
    check_density(m).map_err(|a| CyclicError::NotOrderable { witness: Some(a) })?;
    let (n, r) = (m.n(), m.rank());
    // complements of r-intervals are the (n-r)-intervals, so the dual works too
    let owned;
    let m = if r > n - r {
        owned = m.dual();
        &owned
    } else {
        m
    };
    let r = m.rank();
    if r <= 2 {
        return small_rank_order(m).map(|ord| (ord, OrderRoute::SmallRank));
    }
    let seed = seed_cycle(m)?;
    let Some(bad) = (0..n).find(|&p| m.is_circuit_hyperplane(seed.interval(p, r))) else {
        return Ok((seed, OrderRoute::Seed));
    };
    let seed = seed.rotated((bad + n - 3) % n);
    for (route, head) in LADDER {
        let mut v = seed.0.clone();
        for (slot, &from) in head.iter().enumerate() {
            v[slot] = seed.0[from];
        }
        let ord = CyclicOrder(v);
        if count_bad(m, &ord) == 0 {
            return Ok((ord, route));
        }
    }
    Err(CyclicError::Stuck(
        "every rung of the ladder meets a circuit-hyperplane",
    ))
}

/// Rank at most two, with `2r ≤ n`.
fn small_rank_order(m: &SparsePavingMatroid) -> Result<CyclicOrder, CyclicError> {
    let n = m.n();
    let chs = m.circuit_hyperplanes();
    if chs.is_empty() {
        return Ok(CyclicOrder::identity(n));
    }
    if m.rank() < 2 {
        // a loop; density fails
        return Err(CyclicError::NotOrderable { witness: Some(chs[0]) });
    }
    // rank 2: the circuit-hyperplanes are disjoint parallel pairs
    let mut pairs: Vec<(usize, usize)> = chs
        .iter()
        .map(|h| {
            let v = h.to_vec();
            (v[0], v[1])
        })
        .collect();
    pairs.sort_unstable();
    let paired: ElementSet = chs.iter().fold(ElementSet::EMPTY, |acc, &h| acc | h);
    let free: Vec<usize> = (m.ground() - paired).to_vec();
    let order = if let [(p, q)] = pairs[..] {
        // a lone pair would meet itself across the wrap, so split it with free elements
        let mut v = vec![p, free[0], q];
        v.extend_from_slice(&free[1..]);
        v
    } else {
        let mut v: Vec<usize> = pairs.iter().map(|&(p, _)| p).collect();
        v.extend_from_slice(&free);
        v.extend(pairs.iter().map(|&(_, q)| q));
        v
    };
    Ok(CyclicOrder(order))
}

/// A cycle with at most one circuit-hyperplane interval: the identity, then
/// seeded shuffles, then (for small `n`) every rooted cycle.
fn seed_cycle(m: &SparsePavingMatroid) -> Result<CyclicOrder, CyclicError> {
    let n = m.n();
    let identity = CyclicOrder::identity(n);
    if count_bad(m, &identity) <= 1 {
        return Ok(identity);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED_STREAM ^ n as u64);
    let mut v: Vec<usize> = (0..n).collect();
    for _ in 0..SEED_ATTEMPTS_PER_ELEMENT * n {
        v.shuffle(&mut rng);
        let ord = CyclicOrder(v.clone());
        if count_bad(m, &ord) <= 1 {
            return Ok(ord);
        }
    }
    if n <= DEFAULT_ORACLE_MAX_N {
        let mut found = None;
        for_each_rooted(n, |ord| {
            let hit = count_bad(m, ord) <= 1;
            if hit {
                found = Some(ord.clone());
            }
            hit
        });
        if let Some(ord) = found {
            return Ok(ord);
        }
    }
    Err(CyclicError::Stuck(
        "no seed cycle with at most one circuit-hyperplane interval",
    ))
}

/// Exhaustive search over rooted cycles, skipping mirror images.
pub fn brute_force_order<M: Matroid>(m: &M, max_n: usize) -> Result<CyclicOrder, CyclicError> {
    let n = m.ground_size();
    if n > max_n {
        return Err(CyclicError::TooLarge {
            what: "exhaustive cycle search",
            n,
            cap: max_n,
        });
    }
    let mut found = None;
    for_each_rooted(n, |ord| {
        let e = ord.elements();
        // (a0, a1, ..., a(n-1)) and its reversal have the same intervals
        if n >= 3 && e[1] > e[n - 1] {
            return false;
        }
        let hit = is_basis_cycle(m, ord);
        if hit {
            found = Some(ord.clone());
        }
        hit
    });
    found.ok_or(CyclicError::NotOrderable { witness: None })
}

/// One repair in [`gabow_cycle_traced`]: the 1-based problem position and the
/// rearrangement (1, 2 or 3) that removed it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Repair {
    pub position: usize,
    pub sigma: u8,
}

struct Blocks {
    b: Vec<usize>,
    c: Vec<usize>,
}

impl Blocks {
    fn set(&self, bs: &[usize], cs: &[usize]) -> ElementSet {
        bs.iter().chain(cs).copied().collect()
    }

    /// `{b_i, ..., b_r, c_1, ..., c_(i-1)}` is a basis for every `i`.
    fn starts_properly(&self, m: &SparsePavingMatroid) -> bool {
        (0..self.b.len()).all(|i| m.is_basis(self.set(&self.b[i..], &self.c[..i])))
    }

    /// 0-based `i ≥ 1` with `{c_i, ..., c_r, b_1, ..., b_(i-1)}` not a basis.
    fn problems(&self, m: &SparsePavingMatroid) -> Vec<usize> {
        (1..self.c.len())
            .filter(|&i| !m.is_basis(self.set(&self.b[..i], &self.c[i..])))
            .collect()
    }

    fn order(&self) -> CyclicOrder {
        CyclicOrder(self.b.iter().chain(&self.c).copied().collect())
    }
}

/// A cycle `(b1, ..., br, c1, ..., cr)` through disjoint bases `b1` and `b2`
/// that together make up the whole ground set, with every `r`-interval a basis.
pub fn gabow_cycle(m: &SparsePavingMatroid, b1: ElementSet, b2: ElementSet) -> Result<CyclicOrder, CyclicError> {
    gabow_cycle_traced(m, b1, b2).map(|(ord, _)| ord)
}

/// [`gabow_cycle`], also listing the repairs applied.
pub fn gabow_cycle_traced(
    m: &SparsePavingMatroid,
    b1: ElementSet,
    b2: ElementSet,
) -> Result<(CyclicOrder, Vec<Repair>), CyclicError> {
    if !b1.is_disjoint(b2) {
        return Err(CyclicError::NotDisjoint);
    }
    for b in [b1, b2] {
        if !m.is_basis(b) {
            return Err(CyclicError::NotBases(b));
        }
    }
    if b1 | b2 != m.ground() {
        return Err(CyclicError::GroundSetMismatch);
    }
    let r = m.rank();
    let b = b1.to_vec();
    // start properly: c_i keeps {b_(i+1), ..., b_r, c_1, ..., c_i} a basis
    let mut c = Vec::with_capacity(r);
    let mut left = b2;
    for i in 0..r {
        let base: ElementSet = b[i + 1..].iter().chain(&c).copied().collect();
        let ci = left
            .iter()
            .find(|&x| m.is_basis(base.with(x)))
            .ok_or(CyclicError::Stuck("basis exchange found no c_i"))?;
        c.push(ci);
        left = left.without(ci);
    }
    let mut blocks = Blocks { b, c };
    let mut repairs = Vec::new();
    let mut problems = blocks.problems(m);
    while let Some(&i) = problems.first() {
        if repairs.len() + 1 >= r.max(1) {
            return Err(CyclicError::Stuck("more repair rounds than r - 1"));
        }
        let mut fixed = false;
        for (sigma, candidate) in repair_candidates(&blocks, i) {
            let next = candidate.problems(m);
            if next.len() < problems.len() && candidate.starts_properly(m) {
                blocks = candidate;
                problems = next;
                repairs.push(Repair { position: i + 1, sigma });
                fixed = true;
                break;
            }
        }
        if !fixed {
            return Err(CyclicError::Stuck("no rearrangement removes the problem"));
        }
    }
    Ok((blocks.order(), repairs))
}

/// The rearrangements for a problem at 0-based position `i`.
fn repair_candidates(blocks: &Blocks, i: usize) -> Vec<(u8, Blocks)> {
    let r = blocks.c.len();
    let swap_c = |p: usize, q: usize| {
        let mut c = blocks.c.clone();
        c.swap(p, q);
        Blocks { b: blocks.b.clone(), c }
    };
    let mut out = vec![
        (1, swap_c(i - 1, i)),
        (2, {
            let mut b = blocks.b.clone();
            b.swap(i - 1, i);
            Blocks { b, c: blocks.c.clone() }
        }),
    ];
    let mut c = blocks.c.clone();
    if i + 1 < r {
        // (c_(i+1), c_(i-1), c_i) in places i-1, i, i+1
        c[i - 1] = blocks.c[i + 1];
        c[i] = blocks.c[i - 1];
        c[i + 1] = blocks.c[i];
        out.push((3, Blocks { b: blocks.b.clone(), c }));
    } else if i >= 2 {
        // last place: (c_(r-1), c_r, c_(r-2)) in the final three places
        c[i - 2] = blocks.c[i - 1];
        c[i - 1] = blocks.c[i];
        c[i] = blocks.c[i - 2];
        out.push((3, Blocks { b: blocks.b.clone(), c }));
    }
    out
}

/// [`gabow_cycle`] for disjoint bases that need not cover the ground set: the
/// other elements are deleted first.
pub fn gabow_cycle_in(m: &SparsePavingMatroid, b1: ElementSet, b2: ElementSet) -> Result<CyclicOrder, CyclicError> {
    if !b1.is_disjoint(b2) {
        return Err(CyclicError::NotDisjoint);
    }
    for b in [b1, b2] {
        if !m.is_basis(b) {
            return Err(CyclicError::NotBases(b));
        }
    }
    let minor = m.restrict_contract(b1 | b2, ElementSet::EMPTY)?;
    let mut local = vec![usize::MAX; m.n()];
    for (i, &g) in minor.labels.iter().enumerate() {
        local[g] = i;
    }
    let to_local = |s: ElementSet| -> ElementSet { s.iter().map(|e| local[e]).collect() };
    let ord = gabow_cycle(&minor.matroid, to_local(b1), to_local(b2))?;
    Ok(ord.relabel(&minor.labels))
}
