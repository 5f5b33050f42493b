//! Builders for sparse paving matroids: the Graham–Sloane residue classes and
//! a seeded greedy generator used to assemble test corpora.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::matroid::{MatroidError, SparsePavingMatroid, DEFAULT_EXPLICIT_CAP};
use crate::set::{binomial, k_subsets, k_subsets_range, ElementSet, SetIndex, MAX_GROUND};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("rank {r} out of range for a ground set of size {n}")]
    RankOutOfRange { n: usize, r: usize },
    #[error("residue {c} out of range modulo {n}")]
    ResidueOutOfRange { n: usize, c: usize },
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// Sum of the members of `set`, reduced modulo `n`.
pub fn position_residue(set: ElementSet, n: usize) -> usize {
    set.iter().sum::<usize>() % n
}

fn check_gs_args(n: usize, r: usize) -> Result<(), ConstructionError> {
    if n > MAX_GROUND {
        return Err(MatroidError::GroundTooLarge(n).into());
    }
    if r == 0 || r >= n {
        return Err(ConstructionError::RankOutOfRange { n, r });
    }
    Ok(())
}

/// The matroid whose circuit-hyperplanes are the `r`-subsets with position sum
/// congruent to `c` modulo `n`. Two such subsets at distance 2 would differ by
/// swapping `x` for `y` and so have sums differing by `y - x ≢ 0`, hence every
/// class is a valid circuit-hyperplane family.
pub fn graham_sloane(n: usize, r: usize, c: usize) -> Result<SparsePavingMatroid, ConstructionError> {
    check_gs_args(n, r)?;
    if c >= n {
        return Err(ConstructionError::ResidueOutOfRange { n, c });
    }
    let chset: Vec<_> = k_subsets(n, r).filter(|&s| position_residue(s, n) == c).collect();
    Ok(SparsePavingMatroid::new(n, r, chset)?)
}

const TALLY_CHUNK: u64 = 1 << 16;

/// Sizes of the `n` residue classes of `r`-subsets. The enumeration is split
/// into colex-rank chunks tallied in parallel; the merge is a plain sum so the
/// result does not depend on the worker count.
pub fn gs_class_sizes(n: usize, r: usize) -> Result<Vec<u64>, ConstructionError> {
    check_gs_args(n, r)?;
    let total = binomial(n, r);
    let chunks = total.div_ceil(TALLY_CHUNK);
    let sizes = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut tally = vec![0u64; n];
            for s in k_subsets_range(n, r, chunk * TALLY_CHUNK, TALLY_CHUNK) {
                tally[position_residue(s, n)] += 1;
            }
            tally
        })
        .reduce(
            || vec![0u64; n],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(sizes)
}

/// The largest residue class (smallest residue on ties) and its matroid.
pub fn gs_best_class(n: usize, r: usize) -> Result<(usize, SparsePavingMatroid), ConstructionError> {
    let sizes = gs_class_sizes(n, r)?;
    let best = sizes
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .map(|(c, _)| c)
        .unwrap_or(0);
    Ok((best, graham_sloane(n, r, best)?))
}

/// Shuffles all `r`-subsets with a seeded ChaCha stream and greedily admits
/// each one that keeps the circuit-hyperplanes at pairwise distance ≥ 4 and
/// leaves a basis, stopping once `target` have been admitted.
pub fn random_sparse_paving(
    n: usize,
    r: usize,
    target: usize,
    seed: u64,
) -> Result<SparsePavingMatroid, ConstructionError> {
    if n > MAX_GROUND {
        return Err(MatroidError::GroundTooLarge(n).into());
    }
    if r > n {
        return Err(ConstructionError::RankOutOfRange { n, r });
    }
    let total = binomial(n, r);
    if target == 0 {
        return Ok(SparsePavingMatroid::uniform(r, n)?);
    }
    if total > DEFAULT_EXPLICIT_CAP {
        return Err(MatroidError::TooLarge {
            what: "r-subset shuffle",
            needed: total,
            cap: DEFAULT_EXPLICIT_CAP,
        }
        .into());
    }
    let mut subsets: Vec<_> = k_subsets(n, r).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    subsets.shuffle(&mut rng);

    let ground = ElementSet::full(n);
    let mut chosen = Vec::new();
    let mut index = SetIndex::default();
    for h in subsets {
        if chosen.len() >= target || chosen.len() as u64 + 1 >= total {
            break;
        }
        let crowded = h
            .iter()
            .any(|out| (ground - h).iter().any(|into| index.contains(&h.exchange(out, into))));
        if !crowded {
            index.insert(h);
            chosen.push(h);
        }
    }
    Ok(SparsePavingMatroid::new(n, r, chosen)?)
}

/// Every sparse paving matroid of rank `r` on `{0..n-1}` (labelled, so
/// isomorphic copies repeat), in lexicographic order of their
/// circuit-hyperplane lists. Fails once more than `cap` would be produced.
pub fn all_sparse_paving(n: usize, r: usize, cap: usize) -> Result<Vec<SparsePavingMatroid>, ConstructionError> {
    if n > MAX_GROUND {
        return Err(MatroidError::GroundTooLarge(n).into());
    }
    if r > n {
        return Err(ConstructionError::RankOutOfRange { n, r });
    }
    let total = binomial(n, r);
    if total > DEFAULT_EXPLICIT_CAP {
        return Err(MatroidError::TooLarge {
            what: "r-subset list",
            needed: total,
            cap: DEFAULT_EXPLICIT_CAP,
        }
        .into());
    }
    let subsets: Vec<_> = k_subsets(n, r).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    extend_families(n, r, &subsets, 0, &mut chosen, &mut out, cap)?;
    Ok(out)
}

fn extend_families(
    n: usize,
    r: usize,
    subsets: &[ElementSet],
    start: usize,
    chosen: &mut Vec<ElementSet>,
    out: &mut Vec<SparsePavingMatroid>,
    cap: usize,
) -> Result<(), ConstructionError> {
    if chosen.len() < subsets.len() {
        if out.len() == cap {
            return Err(MatroidError::TooLarge {
                what: "sparse paving family",
                needed: cap as u64 + 1,
                cap: cap as u64,
            }
            .into());
        }
        out.push(SparsePavingMatroid::from_validated(n, r, chosen.clone()));
    }
    for (i, &h) in subsets.iter().enumerate().skip(start) {
        if chosen.iter().all(|&c| c.distance(h) >= 4) {
            chosen.push(h);
            let res = extend_families(n, r, subsets, i + 1, chosen, out, cap);
            chosen.pop();
            res?;
        }
    }
    Ok(())
}

/// A labelled matroid from [`corpus`].
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub label: String,
    pub matroid: SparsePavingMatroid,
}

/// A deterministic test corpus on ground sets of size `min_n..=max_n`: every
/// Graham–Sloane class, each uniform matroid, and `randoms` greedy random
/// matroids per `(n, r)` with targets spread between one circuit-hyperplane
/// and saturation.
pub fn corpus(min_n: usize, max_n: usize, randoms: usize, seed: u64) -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for n in min_n..=max_n {
        for r in 0..=n {
            out.push(CorpusEntry {
                label: format!("U({r},{n})"),
                matroid: SparsePavingMatroid::uniform(r, n).expect("uniform matroid"),
            });
            if r >= 1 && r < n {
                for c in 0..n {
                    out.push(CorpusEntry {
                        label: format!("GS({n},{r},{c})"),
                        matroid: graham_sloane(n, r, c).expect("Graham-Sloane class"),
                    });
                }
            }
            for i in 0..randoms {
                let target = match i % 3 {
                    0 => 1,
                    1 => 2 + i,
                    _ => usize::MAX,
                };
                let s = seed
                    .wrapping_mul(0x9e37_79b9_7f4a_7c15)
                    .wrapping_add((n * 1000 + r * 10 + i) as u64);
                let m = random_sparse_paving(n, r, target, s).expect("random matroid");
                if m.ch_count() > 0 {
                    out.push(CorpusEntry {
                        label: format!("R({n},{r},t={target},s={s})"),
                        matroid: m,
                    });
                }
            }
        }
    }
    out
}
