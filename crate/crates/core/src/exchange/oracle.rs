//! Exhaustive connectivity checks: enumerate every vertex, then breadth-first
//! search along single exchanges.

use std::collections::{HashMap, VecDeque};

use super::{ExchangeError, Multiset};
use crate::matroid::Matroid;
use crate::set::ElementSet;

/// Default ceiling on the number of vertices enumerated.
pub const DEFAULT_VERTEX_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind<'a> {
    /// Ordered triples `(A1, A2, A3)` with `A1`, `A2` disjoint bases.
    BasisPair,
    /// Multisets of bases with multiset union `S`.
    WhiteMultiset(&'a Multiset),
    /// Tuples of bases with multiset union `S`.
    WhiteTuple(&'a Multiset),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Connectivity {
    /// Empty and single-vertex graphs count as connected.
    pub connected: bool,
    pub vertices: usize,
}

type Vertex = Vec<ElementSet>;

/// Decides whether the chosen exchange graph of `m` is connected.
pub fn graph_connected<M: Matroid>(m: &M, kind: GraphKind<'_>, cap: usize) -> Result<Connectivity, ExchangeError> {
    let vertices = graph_vertices(m, kind, cap)?;
    let sorted = matches!(kind, GraphKind::WhiteMultiset(_));
    let free_rest = matches!(kind, GraphKind::BasisPair);
    Ok(Connectivity {
        connected: bfs_reaches_all(m, &vertices, sorted, free_rest),
        vertices: vertices.len(),
    })
}

/// Every vertex of the chosen graph, as member lists (basis pair vertices are
/// `[A1, A2, A3]`; multiset vertices are sorted). Fails once `cap` is exceeded.
pub fn graph_vertices<M: Matroid>(
    m: &M,
    kind: GraphKind<'_>,
    cap: usize,
) -> Result<Vec<Vec<ElementSet>>, ExchangeError> {
    match kind {
        GraphKind::BasisPair => pair_vertices(m, cap),
        GraphKind::WhiteMultiset(s) => multiset_vertices(m, s, cap),
        GraphKind::WhiteTuple(s) => tuple_vertices(m, s, cap),
    }
}

fn pair_vertices<M: Matroid>(m: &M, cap: usize) -> Result<Vec<Vertex>, ExchangeError> {
    let ground = m.ground();
    let bases = m.bases();
    let mut out = Vec::new();
    for &a1 in &bases {
        for &a2 in &bases {
            if a1.is_disjoint(a2) {
                if out.len() == cap {
                    return Err(ExchangeError::TooLarge { cap });
                }
                out.push(vec![a1, a2, ground - (a1 | a2)]);
            }
        }
    }
    Ok(out)
}

fn members_needed<M: Matroid>(m: &M, s: &Multiset) -> Result<usize, ExchangeError> {
    let (size, rank) = (s.size(), m.rank());
    if rank == 0 || size == 0 || size % rank != 0 {
        return Err(ExchangeError::InvalidMultiset { size, rank });
    }
    Ok(size / rank)
}

/// Sorted vertices: nondecreasing sequences of bases whose union is `s`.
fn multiset_vertices<M: Matroid>(m: &M, s: &Multiset, cap: usize) -> Result<Vec<Vertex>, ExchangeError> {
    let k = members_needed(m, s)?;
    let support = s.support();
    let bases: Vec<_> = m.bases().into_iter().filter(|b| b.is_subset(support)).collect();
    let mut remaining: Vec<u32> = (0..m.ground_size()).map(|e| s.count(e)).collect();
    if s.counts().len() > m.ground_size() && s.counts()[m.ground_size()..].iter().any(|&c| c > 0) {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(k);
    extend_multisets(&bases, 0, k, &mut remaining, &mut stack, &mut out, cap)?;
    Ok(out)
}

fn extend_multisets(
    bases: &[ElementSet],
    start: usize,
    k: usize,
    remaining: &mut [u32],
    stack: &mut Vec<ElementSet>,
    out: &mut Vec<Vertex>,
    cap: usize,
) -> Result<(), ExchangeError> {
    if stack.len() == k {
        if remaining.iter().all(|&c| c == 0) {
            if out.len() == cap {
                return Err(ExchangeError::TooLarge { cap });
            }
            out.push(stack.clone());
        }
        return Ok(());
    }
    for (idx, &b) in bases.iter().enumerate().skip(start) {
        if b.iter().any(|e| remaining[e] == 0) {
            continue;
        }
        b.iter().for_each(|e| remaining[e] -= 1);
        stack.push(b);
        let res = extend_multisets(bases, idx, k, remaining, stack, out, cap);
        stack.pop();
        b.iter().for_each(|e| remaining[e] += 1);
        res?;
    }
    Ok(())
}

/// Every distinct ordering of every multiset vertex.
fn tuple_vertices<M: Matroid>(m: &M, s: &Multiset, cap: usize) -> Result<Vec<Vertex>, ExchangeError> {
    let mut out = Vec::new();
    for mut v in multiset_vertices(m, s, cap)? {
        loop {
            if out.len() == cap {
                return Err(ExchangeError::TooLarge { cap });
            }
            out.push(v.clone());
            if !next_permutation(&mut v) {
                break;
            }
        }
    }
    Ok(out)
}

/// Advances to the next lexicographic permutation; false after the last one.
fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[i - 1] < v[j])
        .expect("pivot has a successor");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Neighbours transpose one element between two members, keeping every member
/// a basis except the third block when `free_rest` is set.
fn bfs_reaches_all<M: Matroid>(m: &M, vertices: &[Vertex], sorted: bool, free_rest: bool) -> bool {
    if vertices.len() <= 1 {
        return true;
    }
    let index: HashMap<&Vertex, usize> = vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let needs_basis = |slot: usize| !(free_rest && slot == 2);
    let mut seen = vec![false; vertices.len()];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    let mut reached = 1;
    while let Some(at) = queue.pop_front() {
        let v = &vertices[at];
        for p in 0..v.len() {
            for q in p + 1..v.len() {
                for x in (v[p] - v[q]).iter() {
                    for y in (v[q] - v[p]).iter() {
                        let (np, nq) = (v[p].exchange(x, y), v[q].exchange(y, x));
                        if (needs_basis(p) && !m.is_basis(np)) || (needs_basis(q) && !m.is_basis(nq)) {
                            continue;
                        }
                        let mut w = v.clone();
                        w[p] = np;
                        w[q] = nq;
                        if sorted {
                            w.sort_unstable();
                        }
                        if let Some(&id) = index.get(&w) {
                            if !seen[id] {
                                seen[id] = true;
                                reached += 1;
                                queue.push_back(id);
                            }
                        }
                    }
                }
            }
        }
    }
    reached == vertices.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::SparsePavingMatroid;

    fn s<const K: usize>(e: [usize; K]) -> ElementSet {
        ElementSet::from(e)
    }

    #[test]
    fn oracle_examples() {
        let p44 = SparsePavingMatroid::new(4, 2, vec![s([0, 3]), s([1, 2])]).unwrap();
        assert_eq!(
            graph_connected(&p44, GraphKind::BasisPair, DEFAULT_VERTEX_CAP).unwrap(),
            Connectivity {
                connected: true,
                vertices: 4
            }
        );
        let u24 = SparsePavingMatroid::uniform(2, 4).unwrap();
        let once = Multiset::from_counts(vec![1; 4]);
        assert_eq!(
            graph_connected(&u24, GraphKind::WhiteMultiset(&once), DEFAULT_VERTEX_CAP).unwrap(),
            Connectivity {
                connected: true,
                vertices: 3
            }
        );
        assert_eq!(
            graph_connected(&u24, GraphKind::WhiteTuple(&once), DEFAULT_VERTEX_CAP).unwrap(),
            Connectivity {
                connected: true,
                vertices: 6
            }
        );
        // U(3,4): no two disjoint bases
        let u34 = SparsePavingMatroid::uniform(3, 4).unwrap();
        assert_eq!(
            graph_connected(&u34, GraphKind::BasisPair, DEFAULT_VERTEX_CAP).unwrap(),
            Connectivity {
                connected: true,
                vertices: 0
            }
        );
    }

    #[test]
    fn caps_and_bad_multisets() {
        let u24 = SparsePavingMatroid::uniform(2, 4).unwrap();
        assert_eq!(
            graph_connected(&u24, GraphKind::BasisPair, 5),
            Err(ExchangeError::TooLarge { cap: 5 })
        );
        let odd = Multiset::from_counts(vec![1, 1, 1]);
        assert_eq!(
            graph_connected(&u24, GraphKind::WhiteMultiset(&odd), DEFAULT_VERTEX_CAP),
            Err(ExchangeError::InvalidMultiset { size: 3, rank: 2 })
        );
    }

    #[test]
    fn permutations_are_distinct() {
        let mut v = vec![1, 1, 2];
        let mut all = vec![v.clone()];
        while next_permutation(&mut v) {
            all.push(v.clone());
        }
        assert_eq!(all, vec![vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1]]);
    }
}
