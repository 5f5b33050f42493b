//! Sparse paving matroids given by their circuit-hyperplanes, and small matroids
//! given by an explicit basis list.
//!
//! A rank-`r` matroid on `{0..n-1}` is sparse paving exactly when every
//! `r`-subset is either a basis or a circuit-hyperplane. Such a matroid is
//! therefore determined by `(n, r)` and the set of circuit-hyperplanes, which
//! must pairwise differ in at least four elements.

use thiserror::Error;

use crate::set::{binomial, k_subsets, ElementSet, SetIndex, MAX_GROUND};

/// Default ceiling on `C(n, r)` for conversions that materialize every basis.
pub const DEFAULT_EXPLICIT_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("rank {r} out of range for a ground set of size {n}")]
    RankOutOfRange { n: usize, r: usize },
    #[error("ground set of size {0} exceeds the {MAX_GROUND}-element limit")]
    GroundTooLarge(usize),
    #[error("set {set} has an element outside the ground set of size {n}")]
    ElementOutOfRange { set: ElementSet, n: usize },
    #[error("element {element} is not in the ground set of size {n}")]
    NoSuchElement { element: usize, n: usize },
    #[error("set {set} has size {found}, expected {expected}")]
    SizeMismatch {
        set: ElementSet,
        expected: usize,
        found: usize,
    },
    #[error("circuit-hyperplanes {first} and {second} differ in only {distance} elements")]
    DistanceViolation {
        first: ElementSet,
        second: ElementSet,
        distance: usize,
    },
    #[error("every {r}-subset is a circuit-hyperplane, so there is no basis")]
    NoBasis { r: usize },
    #[error("{0} is not a circuit-hyperplane")]
    NotACircuitHyperplane(ElementSet),
    #[error("swap precondition violated: {0}")]
    PreconditionViolated(SwapPrecondition),
    #[error("{what} would need {needed} items, above the cap of {cap}")]
    TooLarge { what: &'static str, needed: u64, cap: u64 },
    #[error("the basis list is empty")]
    EmptyBases,
    #[error("exchange axiom fails: no c completes ({b1} - {element}) + c inside {b2}")]
    ExchangeViolation {
        b1: ElementSet,
        b2: ElementSet,
        element: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SwapPrecondition {
    FirstNotBasis,
    SecondNotBasis,
    PivotNotInDifference,
    CandidatesNotInDifference,
}

impl std::fmt::Display for SwapPrecondition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SwapPrecondition::FirstNotBasis => "B is not a basis",
            SwapPrecondition::SecondNotBasis => "B' is not a basis",
            SwapPrecondition::PivotNotInDifference => "a is not in B - B'",
            SwapPrecondition::CandidatesNotInDifference => "X is not contained in B' - B",
        })
    }
}

/// Read access shared by both matroid representations, used by the oracles.
pub trait Matroid {
    fn ground_size(&self) -> usize;

    fn rank(&self) -> usize;

    fn is_basis(&self, set: ElementSet) -> bool;

    fn rank_of(&self, set: ElementSet) -> usize;

    fn ground(&self) -> ElementSet {
        ElementSet::full(self.ground_size())
    }

    /// `{e : rank(A + e) = rank(A)}`.
    fn closure_of(&self, set: ElementSet) -> ElementSet {
        let rank = self.rank_of(set);
        let mut closure = set;
        for e in (self.ground() - set).iter() {
            if self.rank_of(set.with(e)) == rank {
                closure = closure.with(e);
            }
        }
        closure
    }

    /// Every basis, in colex order.
    fn bases(&self) -> Vec<ElementSet> {
        k_subsets(self.ground_size(), self.rank())
            .filter(|&s| self.is_basis(s))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinorKind {
    Delete,
    Contract,
}

/// A single-element minor together with the original label of each new element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minor<M> {
    pub matroid: M,
    /// `labels[i]` is the element of the parent that became `i`.
    pub labels: Vec<usize>,
}

/// Sparse paving matroid on `{0..n-1}` stored by its circuit-hyperplanes.
#[derive(Clone)]
pub struct SparsePavingMatroid {
    n: usize,
    r: usize,
    chset: Vec<ElementSet>,
    index: SetIndex,
}

impl PartialEq for SparsePavingMatroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.r == other.r && self.chset == other.chset
    }
}

impl Eq for SparsePavingMatroid {}

impl std::fmt::Debug for SparsePavingMatroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SparsePavingMatroid")
            .field("n", &self.n)
            .field("r", &self.r)
            .field("chset", &self.chset)
            .finish()
    }
}

/// Checks every sparse paving invariant for `(n, r, chset)`.
pub fn validate(n: usize, r: usize, chset: &[ElementSet]) -> Result<(), MatroidError> {
    if n > MAX_GROUND {
        return Err(MatroidError::GroundTooLarge(n));
    }
    if r > n {
        return Err(MatroidError::RankOutOfRange { n, r });
    }
    let ground = ElementSet::full(n);
    for &h in chset {
        if !h.is_subset(ground) {
            return Err(MatroidError::ElementOutOfRange { set: h, n });
        }
        if h.len() != r {
            return Err(MatroidError::SizeMismatch {
                set: h,
                expected: r,
                found: h.len(),
            });
        }
    }
    let mut sorted = chset.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(MatroidError::DistanceViolation {
            first: w[0],
            second: w[1],
            distance: 0,
        });
    }
    if sorted.len() as u64 >= binomial(n, r) {
        return Err(MatroidError::NoBasis { r });
    }
    if let Some((first, second)) = close_pair(n, &sorted) {
        return Err(MatroidError::DistanceViolation {
            first,
            second,
            distance: first.distance(second),
        });
    }
    Ok(())
}

/// Finds two members of `sorted` (distinct, equal-size) at distance 2, if any.
fn close_pair(n: usize, sorted: &[ElementSet]) -> Option<(ElementSet, ElementSet)> {
    let m = sorted.len();
    let r = sorted.first().map_or(0, |s| s.len());
    let neighbor_cost = m * r * (n - r);
    if m * m / 2 <= neighbor_cost {
        for (i, &a) in sorted.iter().enumerate() {
            for &b in &sorted[i + 1..] {
                if a.distance(b) < 4 {
                    return Some((a, b));
                }
            }
        }
        return None;
    }
    let index: SetIndex = sorted.iter().copied().collect();
    let ground = ElementSet::full(n);
    for &h in sorted {
        for out in h.iter() {
            for into in (ground - h).iter() {
                let other = h.exchange(out, into);
                if index.contains(&other) {
                    return Some((h.min(other), h.max(other)));
                }
            }
        }
    }
    None
}

impl SparsePavingMatroid {
    /// Builds and validates a sparse paving matroid. The circuit-hyperplanes are
    /// stored sorted by encoding.
    pub fn new(n: usize, r: usize, chset: Vec<ElementSet>) -> Result<Self, MatroidError> {
        validate(n, r, &chset)?;
        Ok(Self::from_validated(n, r, chset))
    }

    pub(crate) fn from_validated(n: usize, r: usize, mut chset: Vec<ElementSet>) -> Self {
        chset.sort_unstable();
        let index = chset.iter().copied().collect();
        SparsePavingMatroid { n, r, chset, index }
    }

    /// The uniform matroid `U_{r,n}`.
    pub fn uniform(r: usize, n: usize) -> Result<Self, MatroidError> {
        Self::new(n, r, Vec::new())
    }

    pub fn validate(&self) -> Result<(), MatroidError> {
        validate(self.n, self.r, &self.chset)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn ground(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    /// Circuit-hyperplanes sorted by encoding.
    pub fn circuit_hyperplanes(&self) -> &[ElementSet] {
        &self.chset
    }

    pub fn ch_count(&self) -> usize {
        self.chset.len()
    }

    /// Number of bases, `C(n, r) - |chset|`.
    pub fn basis_count(&self) -> u64 {
        binomial(self.n, self.r) - self.chset.len() as u64
    }

    pub fn is_circuit_hyperplane(&self, set: ElementSet) -> bool {
        self.index.contains(&set)
    }

    pub fn is_basis(&self, set: ElementSet) -> bool {
        set.len() == self.r && set.is_subset(self.ground()) && !self.index.contains(&set)
    }

    pub fn rank_of(&self, set: ElementSet) -> usize {
        let size = set.len();
        if size < self.r {
            size
        } else if size == self.r && self.index.contains(&set) {
            self.r - 1
        } else {
            self.r
        }
    }

    pub fn closure_of(&self, set: ElementSet) -> ElementSet {
        let size = set.len();
        if size + 2 <= self.r {
            set
        } else if size + 1 == self.r {
            (self.ground() - set)
                .iter()
                .filter(|&e| self.index.contains(&set.with(e)))
                .fold(set, ElementSet::with)
        } else if self.index.contains(&set) {
            set
        } else {
            self.ground()
        }
    }

    pub fn dual(&self) -> SparsePavingMatroid {
        let ground = self.ground();
        let chset = self.chset.iter().map(|&h| ground - h).collect();
        Self::from_validated(self.n, self.n - self.r, chset)
    }

    /// Deletes or contracts `e`. A coloop is contracted when asked to delete and
    /// a loop is deleted when asked to contract, so the rank only drops for a
    /// genuine contraction or a coloop.
    pub fn minor(&self, kind: MinorKind, e: usize) -> Result<Minor<SparsePavingMatroid>, MatroidError> {
        if e >= self.n {
            return Err(MatroidError::NoSuchElement { element: e, n: self.n });
        }
        let kind = match kind {
            MinorKind::Delete if self.is_coloop(e) => MinorKind::Contract,
            MinorKind::Contract if self.is_loop(e) => MinorKind::Delete,
            k => k,
        };
        let (r, chset) = match kind {
            MinorKind::Delete => (
                self.r,
                self.chset
                    .iter()
                    .filter(|h| !h.contains(e))
                    .map(|h| h.compact_out(e))
                    .collect(),
            ),
            MinorKind::Contract => (
                self.r - 1,
                self.chset
                    .iter()
                    .filter(|h| h.contains(e))
                    .map(|h| h.compact_out(e))
                    .collect(),
            ),
        };
        let labels = (0..self.n).filter(|&x| x != e).collect();
        Ok(Minor {
            matroid: Self::from_validated(self.n - 1, r, chset),
            labels,
        })
    }

    pub fn delete(&self, e: usize) -> Result<Minor<SparsePavingMatroid>, MatroidError> {
        self.minor(MinorKind::Delete, e)
    }

    pub fn contract(&self, e: usize) -> Result<Minor<SparsePavingMatroid>, MatroidError> {
        self.minor(MinorKind::Contract, e)
    }

    /// The minor `M | keep / contract`, with `contract ⊆ keep`, relabelled onto
    /// `{0..|keep - contract| - 1}`.
    pub fn restrict_contract(
        &self,
        keep: ElementSet,
        contract: ElementSet,
    ) -> Result<Minor<SparsePavingMatroid>, MatroidError> {
        let mut current = Minor {
            matroid: self.clone(),
            labels: (0..self.n).collect(),
        };
        let removals = (self.ground() - keep)
            .iter()
            .map(|e| (e, MinorKind::Delete))
            .chain(contract.iter().map(|e| (e, MinorKind::Contract)));
        for (e, kind) in removals {
            let local = current
                .labels
                .iter()
                .position(|&x| x == e)
                .ok_or(MatroidError::NoSuchElement { element: e, n: self.n })?;
            let next = current.matroid.minor(kind, local)?;
            current = Minor {
                labels: next.labels.iter().map(|&i| current.labels[i]).collect(),
                matroid: next.matroid,
            };
        }
        Ok(current)
    }

    /// Every basis contains `e`.
    pub fn is_coloop(&self, e: usize) -> bool {
        // r-subsets avoiding e number C(n-1, r); all of them must be circuit-hyperplanes
        let avoiding = binomial(self.n - 1, self.r);
        avoiding == 0 || self.chset.iter().filter(|h| !h.contains(e)).count() as u64 == avoiding
    }

    /// No basis contains `e`.
    pub fn is_loop(&self, e: usize) -> bool {
        if self.r == 0 {
            return true;
        }
        let containing = binomial(self.n - 1, self.r - 1);
        self.chset.iter().filter(|h| h.contains(e)).count() as u64 == containing
    }

    /// Declares the circuit-hyperplane `h` to be a basis.
    pub fn relax(&self, h: ElementSet) -> Result<SparsePavingMatroid, MatroidError> {
        if !self.index.contains(&h) {
            return Err(MatroidError::NotACircuitHyperplane(h));
        }
        let chset = self.chset.iter().copied().filter(|&x| x != h).collect();
        Ok(Self::from_validated(self.n, self.r, chset))
    }

    /// The elements `x ∈ candidates` for which both `(b - pivot) + x` and
    /// `(b_prime - x) + pivot` are bases. At least `|candidates| - 2` qualify.
    pub fn swap_witnesses(
        &self,
        b: ElementSet,
        b_prime: ElementSet,
        pivot: usize,
        candidates: ElementSet,
    ) -> Result<ElementSet, MatroidError> {
        use SwapPrecondition::*;
        let violated = |p| Err(MatroidError::PreconditionViolated(p));
        if !self.is_basis(b) {
            return violated(FirstNotBasis);
        }
        if !self.is_basis(b_prime) {
            return violated(SecondNotBasis);
        }
        if !(b - b_prime).contains(pivot) {
            return violated(PivotNotInDifference);
        }
        if !candidates.is_subset(b_prime - b) {
            return violated(CandidatesNotInDifference);
        }
        Ok(candidates
            .iter()
            .filter(|&x| self.is_basis(b.exchange(pivot, x)) && self.is_basis(b_prime.exchange(x, pivot)))
            .collect())
    }

    pub fn to_explicit(&self) -> Result<ExplicitMatroid, MatroidError> {
        self.to_explicit_with_cap(DEFAULT_EXPLICIT_CAP)
    }

    pub fn to_explicit_with_cap(&self, cap: u64) -> Result<ExplicitMatroid, MatroidError> {
        let needed = binomial(self.n, self.r);
        if needed > cap {
            return Err(MatroidError::TooLarge {
                what: "explicit basis list",
                needed,
                cap,
            });
        }
        let bases = k_subsets(self.n, self.r).filter(|s| !self.index.contains(s)).collect();
        Ok(ExplicitMatroid::from_sorted_unchecked(self.n, self.r, bases))
    }
}

impl Matroid for SparsePavingMatroid {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn rank(&self) -> usize {
        self.r
    }

    fn is_basis(&self, set: ElementSet) -> bool {
        SparsePavingMatroid::is_basis(self, set)
    }

    fn rank_of(&self, set: ElementSet) -> usize {
        SparsePavingMatroid::rank_of(self, set)
    }

    fn closure_of(&self, set: ElementSet) -> ElementSet {
        SparsePavingMatroid::closure_of(self, set)
    }
}

/// A matroid given by its full list of bases.
#[derive(Clone)]
pub struct ExplicitMatroid {
    n: usize,
    r: usize,
    bases: Vec<ElementSet>,
    index: SetIndex,
}

impl PartialEq for ExplicitMatroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.r == other.r && self.bases == other.bases
    }
}

impl Eq for ExplicitMatroid {}

impl std::fmt::Debug for ExplicitMatroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ExplicitMatroid")
            .field("n", &self.n)
            .field("r", &self.r)
            .field("bases", &self.bases)
            .finish()
    }
}

/// Checks that `bases` is nonempty, equicardinal, inside the ground set and
/// satisfies the basis-exchange axiom (exhaustively).
pub fn explicit_validate(n: usize, bases: &[ElementSet]) -> Result<(), MatroidError> {
    if n > MAX_GROUND {
        return Err(MatroidError::GroundTooLarge(n));
    }
    let first = *bases.first().ok_or(MatroidError::EmptyBases)?;
    let r = first.len();
    let ground = ElementSet::full(n);
    for &b in bases {
        if !b.is_subset(ground) {
            return Err(MatroidError::ElementOutOfRange { set: b, n });
        }
        if b.len() != r {
            return Err(MatroidError::SizeMismatch {
                set: b,
                expected: r,
                found: b.len(),
            });
        }
    }
    let index: SetIndex = bases.iter().copied().collect();
    for &b1 in bases {
        for &b2 in bases {
            for element in (b1 - b2).iter() {
                let completes = (b2 - b1).iter().any(|c| index.contains(&b1.exchange(element, c)));
                if !completes {
                    return Err(MatroidError::ExchangeViolation { b1, b2, element });
                }
            }
        }
    }
    Ok(())
}

impl ExplicitMatroid {
    /// Validates and builds; duplicate bases are merged.
    pub fn new(n: usize, mut bases: Vec<ElementSet>) -> Result<Self, MatroidError> {
        bases.sort_unstable();
        bases.dedup();
        explicit_validate(n, &bases)?;
        let r = bases[0].len();
        Ok(Self::from_sorted_unchecked(n, r, bases))
    }

    pub(crate) fn from_sorted_unchecked(n: usize, r: usize, bases: Vec<ElementSet>) -> Self {
        let index = bases.iter().copied().collect();
        ExplicitMatroid { n, r, bases, index }
    }

    pub fn validate(&self) -> Result<(), MatroidError> {
        explicit_validate(self.n, &self.bases)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    /// Bases sorted by encoding.
    pub fn basis_list(&self) -> &[ElementSet] {
        &self.bases
    }

    pub fn is_basis(&self, set: ElementSet) -> bool {
        self.index.contains(&set)
    }

    /// `max |B ∩ A|` over all bases `B`.
    pub fn rank_of(&self, set: ElementSet) -> usize {
        let ceiling = set.len().min(self.r);
        let mut best = 0;
        for &b in &self.bases {
            best = best.max((b & set).len());
            if best == ceiling {
                break;
            }
        }
        best
    }

    pub fn dual(&self) -> ExplicitMatroid {
        let ground = ElementSet::full(self.n);
        let mut bases: Vec<_> = self.bases.iter().map(|&b| ground - b).collect();
        bases.sort_unstable();
        Self::from_sorted_unchecked(self.n, self.n - self.r, bases)
    }

    /// Same coloop/loop fallback as [`SparsePavingMatroid::minor`].
    pub fn minor(&self, kind: MinorKind, e: usize) -> Result<Minor<ExplicitMatroid>, MatroidError> {
        if e >= self.n {
            return Err(MatroidError::NoSuchElement { element: e, n: self.n });
        }
        let some_avoid = self.bases.iter().any(|b| !b.contains(e));
        let some_contain = self.bases.iter().any(|b| b.contains(e));
        let kind = match kind {
            MinorKind::Delete if !some_avoid => MinorKind::Contract,
            MinorKind::Contract if !some_contain => MinorKind::Delete,
            k => k,
        };
        let keep_containing = kind == MinorKind::Contract;
        let mut bases: Vec<_> = self
            .bases
            .iter()
            .filter(|b| b.contains(e) == keep_containing)
            .map(|b| b.compact_out(e))
            .collect();
        bases.sort_unstable();
        let r = if keep_containing { self.r - 1 } else { self.r };
        Ok(Minor {
            matroid: Self::from_sorted_unchecked(self.n - 1, r, bases),
            labels: (0..self.n).filter(|&x| x != e).collect(),
        })
    }
}

impl Matroid for ExplicitMatroid {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn rank(&self) -> usize {
        self.r
    }

    fn is_basis(&self, set: ElementSet) -> bool {
        ExplicitMatroid::is_basis(self, set)
    }

    fn rank_of(&self, set: ElementSet) -> usize {
        ExplicitMatroid::rank_of(self, set)
    }

    fn bases(&self) -> Vec<ElementSet> {
        self.bases.clone()
    }
}
