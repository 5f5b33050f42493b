//! Basis pair graphs and symmetric-exchange graphs on collections of bases.
//!
//! [`bpg_path`], [`white_moves`] and [`white2_path`] build explicit walks in
//! these graphs for sparse paving matroids; [`graph_connected`] is the
//! exhaustive breadth-first oracle they are checked against.

mod basis_pair;
mod oracle;
mod white;

use std::fmt;

use thiserror::Error;

use crate::matroid::{Matroid, MatroidError};
use crate::set::ElementSet;

pub use basis_pair::bpg_path;
pub use oracle::{graph_connected, graph_vertices, Connectivity, GraphKind, DEFAULT_VERTEX_CAP};
pub use white::{white2_path, white_moves};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexDefect {
    FirstNotBasis,
    SecondNotBasis,
    Overlap,
    NotAPartition,
}

impl fmt::Display for VertexDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VertexDefect::FirstNotBasis => "first block is not a basis",
            VertexDefect::SecondNotBasis => "second block is not a basis",
            VertexDefect::Overlap => "blocks overlap",
            VertexDefect::NotAPartition => "blocks do not cover the ground set",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExchangeError {
    #[error("not a vertex of the basis pair graph: {0}")]
    NotAVertex(VertexDefect),
    #[error("endpoints live on different ground sets")]
    GroundSetMismatch,
    #[error("the two collections have different multiset unions")]
    UnionMismatch,
    #[error("collection member {0} is not a basis")]
    NotBases(ElementSet),
    #[error("collections have {from} and {to} members")]
    CountMismatch { from: usize, to: usize },
    #[error("multiset of size {size} is not a positive multiple of the rank {rank}")]
    InvalidMultiset { size: usize, rank: usize },
    #[error("graph would exceed {cap} vertices")]
    TooLarge { cap: usize },
    #[error("construction stalled: {0}")]
    Stuck(&'static str),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// A vertex `(A1, A2, A3)` of the basis pair graph: `A1`, `A2` disjoint bases
/// and `A3` the rest of the ground set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisPairVertex {
    blocks: [ElementSet; 3],
}

impl BasisPairVertex {
    /// Builds the vertex with third block `E - (a1 ∪ a2)`.
    pub fn new<M: Matroid>(m: &M, a1: ElementSet, a2: ElementSet) -> Result<Self, ExchangeError> {
        let a3 = m.ground() - (a1 | a2);
        Self::from_blocks(m, [a1, a2, a3])
    }

    pub fn from_blocks<M: Matroid>(m: &M, blocks: [ElementSet; 3]) -> Result<Self, ExchangeError> {
        let [a1, a2, a3] = blocks;
        if !m.is_basis(a1) {
            return Err(ExchangeError::NotAVertex(VertexDefect::FirstNotBasis));
        }
        if !m.is_basis(a2) {
            return Err(ExchangeError::NotAVertex(VertexDefect::SecondNotBasis));
        }
        if !a1.is_disjoint(a2) || !a3.is_disjoint(a1 | a2) {
            return Err(ExchangeError::NotAVertex(VertexDefect::Overlap));
        }
        if a1 | a2 | a3 != m.ground() {
            return Err(ExchangeError::NotAVertex(VertexDefect::NotAPartition));
        }
        Ok(BasisPairVertex { blocks })
    }

    pub(crate) fn from_blocks_unchecked(blocks: [ElementSet; 3]) -> Self {
        BasisPairVertex { blocks }
    }

    pub fn blocks(&self) -> [ElementSet; 3] {
        self.blocks
    }

    pub fn first(&self) -> ElementSet {
        self.blocks[0]
    }

    pub fn second(&self) -> ElementSet {
        self.blocks[1]
    }

    pub fn rest(&self) -> ElementSet {
        self.blocks[2]
    }

    pub fn ground(&self) -> ElementSet {
        self.blocks[0] | self.blocks[1] | self.blocks[2]
    }
}

impl fmt::Debug for BasisPairVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.blocks[0], self.blocks[1], self.blocks[2])
    }
}

/// True iff `v` arises from `u` by transposing one element between two blocks,
/// i.e. `|A1 - B1| + |A2 - B2| + |A3 - B3| = 2`.
pub fn bpg_adjacent(u: &BasisPairVertex, v: &BasisPairVertex) -> bool {
    u.blocks
        .iter()
        .zip(v.blocks.iter())
        .map(|(&a, &b)| (a - b).len())
        .sum::<usize>()
        == 2
}

/// Element multiplicities over the ground set.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Multiset {
    counts: Vec<u32>,
}

impl Multiset {
    pub fn new(n: usize) -> Self {
        Multiset { counts: vec![0; n] }
    }

    /// Multiset union of `sets` over a ground set of size `n`.
    pub fn union_of(n: usize, sets: &[ElementSet]) -> Self {
        let mut ms = Multiset::new(n);
        for s in sets {
            ms.add_set(*s);
        }
        ms
    }

    pub fn from_counts(counts: Vec<u32>) -> Self {
        Multiset { counts }
    }

    pub fn add_set(&mut self, set: ElementSet) {
        for e in set {
            if e >= self.counts.len() {
                self.counts.resize(e + 1, 0);
            }
            self.counts[e] += 1;
        }
    }

    pub fn count(&self, e: usize) -> u32 {
        self.counts.get(e).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn size(&self) -> usize {
        self.counts.iter().map(|&c| c as usize).sum()
    }

    /// Total multiplicity of the members of `set`.
    pub fn weight(&self, set: ElementSet) -> usize {
        set.iter().map(|e| self.count(e) as usize).sum()
    }

    pub fn support(&self) -> ElementSet {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(e, _)| e)
            .collect()
    }

    fn trimmed(&self) -> &[u32] {
        let len = self.counts.iter().rposition(|&c| c > 0).map_or(0, |p| p + 1);
        &self.counts[..len]
    }

    /// Equality ignoring trailing zero counts.
    pub fn same_as(&self, other: &Multiset) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl fmt::Debug for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.counts.iter().enumerate().filter(|(_, &c)| c > 0))
            .finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CollectionKind {
    /// Order-insensitive; members are kept sorted by encoding.
    Multiset,
    /// Order-sensitive.
    Tuple,
}

/// `k` bases together with their multiset union.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisCollection {
    kind: CollectionKind,
    members: Vec<ElementSet>,
    union: Multiset,
}

impl BasisCollection {
    pub fn new<M: Matroid>(m: &M, kind: CollectionKind, mut members: Vec<ElementSet>) -> Result<Self, ExchangeError> {
        if members.is_empty() {
            return Err(ExchangeError::InvalidMultiset {
                size: 0,
                rank: m.rank(),
            });
        }
        if let Some(&bad) = members.iter().find(|&&b| !m.is_basis(b)) {
            return Err(ExchangeError::NotBases(bad));
        }
        if kind == CollectionKind::Multiset {
            members.sort_unstable();
        }
        let union = Multiset::union_of(m.ground_size(), &members);
        Ok(BasisCollection { kind, members, union })
    }

    pub fn multiset<M: Matroid>(m: &M, members: Vec<ElementSet>) -> Result<Self, ExchangeError> {
        Self::new(m, CollectionKind::Multiset, members)
    }

    pub fn tuple<M: Matroid>(m: &M, members: Vec<ElementSet>) -> Result<Self, ExchangeError> {
        Self::new(m, CollectionKind::Tuple, members)
    }

    pub fn kind(&self) -> CollectionKind {
        self.kind
    }

    pub fn members(&self) -> &[ElementSet] {
        &self.members
    }

    pub fn union(&self) -> &Multiset {
        &self.union
    }

    pub fn k(&self) -> usize {
        self.members.len()
    }
}

/// One symmetric exchange: member `i` gives up `x` and receives `y`, member
/// `j` gives up `y` and receives `x`. Always `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExchangeMove {
    pub i: usize,
    pub j: usize,
    pub x: usize,
    pub y: usize,
}

impl ExchangeMove {
    /// Orders the member indices, swapping the roles of `x` and `y` if needed.
    pub fn normalized(i: usize, j: usize, x: usize, y: usize) -> Self {
        if i < j {
            ExchangeMove { i, j, x, y }
        } else {
            ExchangeMove { i: j, j: i, x: y, y: x }
        }
    }
}

impl fmt::Display for ExchangeMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}:{}", self.i, self.j, self.x, self.y)
    }
}

/// Why a move sequence failed step verification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StepError {
    #[error("move {step}: member index out of range or i >= j")]
    BadIndices { step: usize },
    #[error("move {step}: elements are not in the required differences")]
    NotAnExchange { step: usize },
    #[error("move {step}: exchange produces a non-basis")]
    NotBases { step: usize },
    #[error("the final collection differs from the requested endpoint")]
    WrongEndpoint,
}

/// Applies `moves` to `start`, checking each one is a symmetric exchange
/// producing bases. For multisets, members are re-sorted after every move so
/// indices always refer to the canonical order. Returns the final members.
pub fn apply_moves<M: Matroid>(
    m: &M,
    kind: CollectionKind,
    start: &[ElementSet],
    moves: &[ExchangeMove],
) -> Result<Vec<ElementSet>, StepError> {
    let mut cur = start.to_vec();
    if kind == CollectionKind::Multiset {
        cur.sort_unstable();
    }
    for (step, mv) in moves.iter().enumerate() {
        if mv.i >= mv.j || mv.j >= cur.len() {
            return Err(StepError::BadIndices { step });
        }
        let (bi, bj) = (cur[mv.i], cur[mv.j]);
        if !(bi - bj).contains(mv.x) || !(bj - bi).contains(mv.y) {
            return Err(StepError::NotAnExchange { step });
        }
        let (ni, nj) = (bi.exchange(mv.x, mv.y), bj.exchange(mv.y, mv.x));
        if !m.is_basis(ni) || !m.is_basis(nj) {
            return Err(StepError::NotBases { step });
        }
        cur[mv.i] = ni;
        cur[mv.j] = nj;
        if kind == CollectionKind::Multiset {
            cur.sort_unstable();
        }
    }
    Ok(cur)
}

/// [`apply_moves`] followed by an endpoint comparison.
pub fn verify_moves<M: Matroid>(
    m: &M,
    kind: CollectionKind,
    from: &[ElementSet],
    moves: &[ExchangeMove],
    to: &[ElementSet],
) -> Result<(), StepError> {
    let end = apply_moves(m, kind, from, moves)?;
    let mut target = to.to_vec();
    if kind == CollectionKind::Multiset {
        target.sort_unstable();
    }
    if end == target {
        Ok(())
    } else {
        Err(StepError::WrongEndpoint)
    }
}

/// Checks that `path` is a walk of valid basis pair vertices of `m`.
pub fn verify_bpg_walk<M: Matroid>(m: &M, path: &[BasisPairVertex]) -> bool {
    path.iter().all(|v| BasisPairVertex::from_blocks(m, v.blocks()).is_ok())
        && path.windows(2).all(|w| bpg_adjacent(&w[0], &w[1]))
}
