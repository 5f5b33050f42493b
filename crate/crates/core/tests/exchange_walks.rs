//! Constructive exchange walks checked step by step against the exhaustive
//! graphs over a corpus of small matroids.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sparse_paving::constructions::corpus;
use sparse_paving::exchange::{
    bpg_path, graph_connected, graph_vertices, verify_bpg_walk, verify_moves, white2_path, white_moves,
    BasisCollection, BasisPairVertex, CollectionKind, ExchangeMove, GraphKind, Multiset, DEFAULT_VERTEX_CAP,
};
use sparse_paving::{ElementSet, SparsePavingMatroid};

fn random_union(m: &SparsePavingMatroid, k: usize, rng: &mut ChaCha8Rng) -> Option<Multiset> {
    let bases = sparse_paving::Matroid::bases(m);
    if bases.is_empty() || m.rank() == 0 {
        return None;
    }
    let picks: Vec<ElementSet> = (0..k).map(|_| *bases.choose(rng).unwrap()).collect();
    Some(Multiset::union_of(m.n(), &picks))
}

#[test]
fn bpg_paths_follow_the_oracle_graph() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for entry in corpus(2, 8, 3, 5) {
        let m = &entry.matroid;
        let verts = graph_vertices(m, GraphKind::BasisPair, DEFAULT_VERTEX_CAP).unwrap();
        assert!(
            graph_connected(m, GraphKind::BasisPair, DEFAULT_VERTEX_CAP)
                .unwrap()
                .connected,
            "{}",
            entry.label
        );
        if verts.is_empty() {
            continue;
        }
        for _ in 0..300 {
            let a = verts.choose(&mut rng).unwrap();
            let b = verts.choose(&mut rng).unwrap();
            let u = BasisPairVertex::from_blocks(m, [a[0], a[1], a[2]]).unwrap();
            let v = BasisPairVertex::from_blocks(m, [b[0], b[1], b[2]]).unwrap();
            let path = bpg_path(m, &u, &v).unwrap_or_else(|e| panic!("{}: {u:?} -> {v:?}: {e}", entry.label));
            assert!(verify_bpg_walk(m, &path), "{}", entry.label);
            assert_eq!(path.first(), Some(&u));
            assert_eq!(path.last(), Some(&v));
            assert!(path.len() - 1 <= 4 * m.n());
        }
    }
}

fn check_white(kind: CollectionKind, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for entry in corpus(2, 8, 6, seed) {
        let m = &entry.matroid;
        for k in [2usize, 3] {
            for _ in 0..60 {
                let Some(s) = random_union(m, k, &mut rng) else {
                    continue;
                };
                let graph = match kind {
                    CollectionKind::Multiset => GraphKind::WhiteMultiset(&s),
                    CollectionKind::Tuple => GraphKind::WhiteTuple(&s),
                };
                let Ok(verts) = graph_vertices(m, graph, 200_000) else {
                    continue;
                };
                for _ in 0..20 {
                    let a = verts.choose(&mut rng).unwrap().clone();
                    let b = verts.choose(&mut rng).unwrap().clone();
                    let from = BasisCollection::new(m, kind, a.clone()).unwrap();
                    let to = BasisCollection::new(m, kind, b.clone()).unwrap();
                    let moves: Vec<ExchangeMove> = match kind {
                        CollectionKind::Multiset => white_moves(m, &from, &to),
                        CollectionKind::Tuple => white2_path(m, &from, &to),
                    }
                    .unwrap_or_else(|e| panic!("{}: {a:?} -> {b:?}: {e}", entry.label));
                    verify_moves(m, kind, &a, &moves, &b)
                        .unwrap_or_else(|e| panic!("{}: {a:?} -> {b:?}: {e}", entry.label));
                    assert!(
                        moves.len() <= 4 * k * m.rank(),
                        "{}: {} moves",
                        entry.label,
                        moves.len()
                    );
                }
            }
        }
    }
}

#[test]
fn white_moves_match_multisets() {
    check_white(CollectionKind::Multiset, 3);
}

#[test]
fn white2_paths_match_tuples() {
    check_white(CollectionKind::Tuple, 4);
}

#[test]
fn dual_moves_complement() {
    // in the dual the same exchange reads with x and y reversed
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for entry in corpus(4, 7, 2, 1) {
        let m = &entry.matroid;
        let d = m.dual();
        let Some(s) = random_union(m, 2, &mut rng) else {
            continue;
        };
        let Ok(verts) = graph_vertices(m, GraphKind::WhiteTuple(&s), 100_000) else {
            continue;
        };
        let a = verts[rng.gen_range(0..verts.len())].clone();
        let b = verts[rng.gen_range(0..verts.len())].clone();
        let from = BasisCollection::tuple(m, a.clone()).unwrap();
        let to = BasisCollection::tuple(m, b.clone()).unwrap();
        let moves = white2_path(m, &from, &to).unwrap();
        let ground = m.ground();
        let flip = |v: &[ElementSet]| v.iter().map(|&x| ground - x).collect::<Vec<_>>();
        let dual_moves: Vec<_> = moves
            .iter()
            .map(|mv| ExchangeMove {
                x: mv.y,
                y: mv.x,
                ..*mv
            })
            .collect();
        verify_moves(&d, CollectionKind::Tuple, &flip(&a), &dual_moves, &flip(&b)).unwrap();
    }
}

/// Scrambles `start` with random symmetric exchanges, giving a second vertex
/// with the same union without enumerating the graph.
fn scramble(m: &SparsePavingMatroid, start: &[ElementSet], steps: usize, rng: &mut ChaCha8Rng) -> Vec<ElementSet> {
    let mut cur = start.to_vec();
    for _ in 0..steps {
        let i = rng.gen_range(0..cur.len());
        let j = rng.gen_range(0..cur.len());
        let (di, dj) = (cur[i] - cur[j], cur[j] - cur[i]);
        if i == j || di.is_empty() {
            continue;
        }
        let x = di.to_vec()[rng.gen_range(0..di.len())];
        let y = dj.to_vec()[rng.gen_range(0..dj.len())];
        let (ni, nj) = (cur[i].exchange(x, y), cur[j].exchange(y, x));
        if m.is_basis(ni) && m.is_basis(nj) {
            cur[i] = ni;
            cur[j] = nj;
        }
    }
    cur
}

#[test]
fn white_moves_on_scrambled_endpoints() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for entry in corpus(6, 11, 4, 8) {
        let m = &entry.matroid;
        let bases = sparse_paving::Matroid::bases(m);
        if m.rank() == 0 || bases.is_empty() {
            continue;
        }
        for k in 2..=4usize {
            for _ in 0..20 {
                let a: Vec<ElementSet> = (0..k).map(|_| *bases.choose(&mut rng).unwrap()).collect();
                let b = scramble(m, &a, 40, &mut rng);
                for kind in [CollectionKind::Multiset, CollectionKind::Tuple] {
                    let from = BasisCollection::new(m, kind, a.clone()).unwrap();
                    let to = BasisCollection::new(m, kind, b.clone()).unwrap();
                    let moves = match kind {
                        CollectionKind::Multiset => white_moves(m, &from, &to),
                        CollectionKind::Tuple => white2_path(m, &from, &to),
                    }
                    .unwrap_or_else(|e| panic!("{}: {a:?} -> {b:?}: {e}", entry.label));
                    verify_moves(m, kind, &a, &moves, &b)
                        .unwrap_or_else(|e| panic!("{}: {a:?} -> {b:?}: {e}", entry.label));
                }
            }
        }
    }
}
