//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p spm-cli --test acceptance`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use sparse_paving::constructions::{
    all_sparse_paving, corpus, graham_sloane, gs_best_class, gs_class_sizes, random_sparse_paving, CorpusEntry,
};
use sparse_paving::cyclic::{
    average_ch_intervals, brute_force_order, ch_interval_count, check_density, check_density_brute,
    exhaustive_mean_ch_intervals, find_cyclic_order, gabow_cycle_traced, is_basis_cycle, CyclicError,
};
use sparse_paving::exchange::{
    bpg_adjacent, bpg_path, graph_connected, graph_vertices, verify_moves, white2_path, white_moves, BasisCollection,
    BasisPairVertex, CollectionKind, ExchangeError, GraphKind, Multiset, DEFAULT_VERTEX_CAP,
};
use sparse_paving::flats::{bounds, cyclic_flats_by_definition, cyclic_flats_of, zn_census};
use sparse_paving::{binomial, ElementSet, Matroid, SparsePavingMatroid};
use spm_cli::format::{parse_matroid, serialize, MatroidFile};

type Check = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("Graham-Sloane classes", 60, graham_sloane_contract),
        ("circuit-hyperplane count bound", 30, ch_count_bound),
        ("neighbour and swap lemmas", 60, lemma_suite),
        ("basis pair graph", 300, basis_pair_graph),
        ("multiset and tuple exchange graphs", 600, white_graphs),
        ("averaging lemma", 60, averaging),
        ("cyclic orders", 300, cyclic_orders),
        ("disjoint basis cycles", 300, basis_cycles),
        ("cyclic flats", 120, cyclic_flats),
        ("round trip and determinism", 30, round_trip),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let result = match result {
            Ok(detail) if elapsed > Duration::from_secs(*limit) => Err(format!(
                "{detail}; took {:.1} s, limit {limit} s",
                elapsed.as_secs_f64()
            )),
            other => other,
        };
        match result {
            Ok(detail) => println!(
                "criterion {}: PASS {name}: {detail} ({:.1} s)",
                i + 1,
                elapsed.as_secs_f64()
            ),
            Err(reason) => {
                failed += 1;
                println!(
                    "criterion {}: FAIL {name}: {reason} ({:.1} s)",
                    i + 1,
                    elapsed.as_secs_f64()
                );
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}

fn graham_sloane_contract() -> Check {
    let mut classes = 0;
    for n in 4..=14usize {
        for r in 1..n {
            let sizes = gs_class_sizes(n, r).map_err(|e| e.to_string())?;
            ensure!(sizes.len() == n, "({n},{r}): {} classes", sizes.len());
            ensure!(
                sizes.iter().sum::<u64>() == binomial(n, r),
                "({n},{r}): classes do not partition"
            );
            let built: Vec<_> = (0..n).into_par_iter().map(|c| graham_sloane(n, r, c)).collect();
            let mut total = 0;
            for (c, m) in built.into_iter().enumerate() {
                let m = m.map_err(|e| format!("GS({n},{r},{c}): {e}"))?;
                m.validate().map_err(|e| format!("GS({n},{r},{c}): {e}"))?;
                ensure!(m.ch_count() as u64 == sizes[c], "GS({n},{r},{c}): size mismatch");
                total += m.ch_count() as u64;
                classes += 1;
            }
            ensure!(total == binomial(n, r), "({n},{r}): built classes do not partition");
            let (_, best) = gs_best_class(n, r).map_err(|e| e.to_string())?;
            ensure!(
                best.ch_count() as u64 * n as u64 >= binomial(n, r),
                "({n},{r}): best class too small"
            );
        }
    }
    Ok(format!("{classes} classes validated"))
}

fn ch_bound_holds(m: &SparsePavingMatroid) -> bool {
    m.ch_count() as u64 * (m.n() - m.rank() + 1) as u64 <= binomial(m.n(), m.rank())
}

fn ch_count_bound() -> Check {
    let mut checked = 0;
    for n in 4..=14usize {
        for r in 1..n {
            for c in 0..n {
                let m = graham_sloane(n, r, c).map_err(|e| e.to_string())?;
                ensure!(ch_bound_holds(&m), "GS({n},{r},{c}) violates the bound");
                checked += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let draws: Vec<(usize, usize, usize, u64)> = (0..1200)
        .map(|_| {
            let n = rng.gen_range(1..=14);
            let r = rng.gen_range(0..=n);
            let target = if rng.gen_bool(0.5) {
                usize::MAX
            } else {
                rng.gen_range(0..40)
            };
            (n, r, target, rng.gen())
        })
        .collect();
    let randoms: Vec<Result<(), String>> = draws
        .par_iter()
        .map(|&(n, r, target, seed)| {
            let m = random_sparse_paving(n, r, target, seed).map_err(|e| e.to_string())?;
            m.validate()
                .map_err(|e| format!("random ({n},{r},{target},{seed}): {e}"))?;
            if ch_bound_holds(&m) {
                Ok(())
            } else {
                Err(format!("random ({n},{r},{target},{seed}) violates the bound"))
            }
        })
        .collect();
    randoms.into_iter().collect::<Result<Vec<_>, _>>()?;
    checked += draws.len();
    let p44 = graham_sloane(4, 2, 3).map_err(|e| e.to_string())?;
    ensure!(p44.ch_count() * 3 == 6, "P44 does not attain equality");
    Ok(format!("{checked} matroids, equality at P44"))
}

fn lemma_suite() -> Check {
    let entries = corpus(1, 12, 4, 3);
    let neighbour: Result<Vec<usize>, String> = entries
        .par_iter()
        .map(|entry| {
            let m = &entry.matroid;
            let mut count = 0;
            for &h in m.circuit_hyperplanes() {
                for out in h.iter() {
                    for into in (m.ground() - h).iter() {
                        if !m.is_basis(h.exchange(out, into)) {
                            return Err(format!("{}: {h} -{out} +{into} is not a basis", entry.label));
                        }
                        count += 1;
                    }
                }
            }
            Ok(count)
        })
        .collect();
    let neighbours: usize = neighbour?.iter().sum();

    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut instances = 0;
    let pool: Vec<&CorpusEntry> = entries
        .iter()
        .filter(|e| e.matroid.rank() >= 1 && e.matroid.n() >= 4)
        .collect();
    while instances < 12_000 {
        let m = &pool.choose(&mut rng).expect("corpus").matroid;
        let bases = m.bases();
        let (b, bp) = (
            *bases.choose(&mut rng).expect("basis"),
            *bases.choose(&mut rng).expect("basis"),
        );
        let out = (b - bp).to_vec();
        if out.is_empty() {
            continue;
        }
        let a = out[rng.gen_range(0..out.len())];
        let x = (bp - b).iter().filter(|_| rng.gen_bool(0.7)).collect::<ElementSet>();
        let w = m.swap_witnesses(b, bp, a, x).map_err(|e| e.to_string())?;
        for y in x.iter() {
            let both = m.is_basis(b.exchange(a, y)) && m.is_basis(bp.exchange(y, a));
            ensure!(both == w.contains(y), "swap witnesses wrong for {b} {bp} {a} {x}");
        }
        ensure!(
            w.len() + 2 >= x.len(),
            "swap lemma fails for {b} {bp} {a} {x}: {} witnesses",
            w.len()
        );
        instances += 1;
    }
    Ok(format!(
        "{neighbours} neighbours over {} matroids, {instances} swap instances",
        entries.len()
    ))
}

fn basis_pair_graph() -> Check {
    let entries = corpus(2, 10, 3, 5);
    let results: Vec<Result<(bool, usize), String>> = entries
        .par_iter()
        .enumerate()
        .map(|(idx, entry)| {
            let m = &entry.matroid;
            let verts = match graph_vertices(m, GraphKind::BasisPair, 100_000) {
                Ok(v) => v,
                Err(ExchangeError::TooLarge { .. }) => return Ok((false, 0)),
                Err(e) => return Err(format!("{}: {e}", entry.label)),
            };
            let conn = graph_connected(m, GraphKind::BasisPair, 100_000).map_err(|e| e.to_string())?;
            if !conn.connected {
                return Err(format!("{}: basis pair graph disconnected", entry.label));
            }
            if verts.is_empty() {
                return Ok((true, 0));
            }
            let members: std::collections::HashSet<&Vec<ElementSet>> = verts.iter().collect();
            let mut rng = ChaCha8Rng::seed_from_u64(idx as u64);
            for _ in 0..100 {
                let (a, b) = (
                    verts.choose(&mut rng).expect("vertex"),
                    verts.choose(&mut rng).expect("vertex"),
                );
                let u = BasisPairVertex::from_blocks(m, [a[0], a[1], a[2]]).map_err(|e| e.to_string())?;
                let v = BasisPairVertex::from_blocks(m, [b[0], b[1], b[2]]).map_err(|e| e.to_string())?;
                let path = bpg_path(m, &u, &v).map_err(|e| format!("{}: {u:?} -> {v:?}: {e}", entry.label))?;
                if path.first() != Some(&u) || path.last() != Some(&v) || path.len() - 1 > 4 * m.n() {
                    return Err(format!("{}: bad path {u:?} -> {v:?}", entry.label));
                }
                for w in &path {
                    if !members.contains(&w.blocks().to_vec()) {
                        return Err(format!("{}: {w:?} is not an oracle vertex", entry.label));
                    }
                }
                if !path.windows(2).all(|p| bpg_adjacent(&p[0], &p[1])) {
                    return Err(format!("{}: non-adjacent step {u:?} -> {v:?}", entry.label));
                }
            }
            Ok((true, verts.len()))
        })
        .collect();
    let mut tested = 0;
    let mut skipped = 0;
    for r in results {
        match r? {
            (true, _) => tested += 1,
            (false, _) => skipped += 1,
        }
    }
    Ok(format!(
        "{tested} matroids with 100 paths each, {skipped} above 10^5 vertices"
    ))
}

fn white_graphs() -> Check {
    let entries: Vec<CorpusEntry> = corpus(2, 8, 3, 6)
        .into_iter()
        .filter(|e| e.matroid.rank() >= 1 && e.matroid.basis_count() > 0)
        .collect();
    let results: Vec<Result<usize, String>> = entries
        .par_iter()
        .enumerate()
        .map(|(idx, entry)| {
            let m = &entry.matroid;
            let bases = m.bases();
            let mut rng = ChaCha8Rng::seed_from_u64(1000 + idx as u64);
            let mut graphs = 0;
            for k in [2usize, 3] {
                for _ in 0..20 {
                    let picks: Vec<ElementSet> = (0..k).map(|_| *bases.choose(&mut rng).expect("basis")).collect();
                    let s = Multiset::union_of(m.n(), &picks);
                    for kind in [CollectionKind::Multiset, CollectionKind::Tuple] {
                        let graph = match kind {
                            CollectionKind::Multiset => GraphKind::WhiteMultiset(&s),
                            CollectionKind::Tuple => GraphKind::WhiteTuple(&s),
                        };
                        let conn = graph_connected(m, graph, DEFAULT_VERTEX_CAP)
                            .map_err(|e| format!("{}: {e}", entry.label))?;
                        if !conn.connected {
                            return Err(format!("{}: {kind:?} graph of {s:?} disconnected", entry.label));
                        }
                        graphs += 1;
                        let verts = graph_vertices(m, graph, DEFAULT_VERTEX_CAP).map_err(|e| e.to_string())?;
                        for _ in 0..3 {
                            let a = verts.choose(&mut rng).expect("vertex").clone();
                            let b = verts.choose(&mut rng).expect("vertex").clone();
                            let from = BasisCollection::new(m, kind, a.clone()).map_err(|e| e.to_string())?;
                            let to = BasisCollection::new(m, kind, b.clone()).map_err(|e| e.to_string())?;
                            let moves = match kind {
                                CollectionKind::Multiset => white_moves(m, &from, &to),
                                CollectionKind::Tuple => white2_path(m, &from, &to),
                            }
                            .map_err(|e| format!("{}: {a:?} -> {b:?}: {e}", entry.label))?;
                            verify_moves(m, kind, &a, &moves, &b)
                                .map_err(|e| format!("{}: {a:?} -> {b:?}: {e}", entry.label))?;
                            if moves.len() > 4 * k * m.rank() {
                                return Err(format!("{}: {} moves for k = {k}", entry.label, moves.len()));
                            }
                        }
                    }
                }
            }
            Ok(graphs)
        })
        .collect();
    let mut graphs = 0;
    for r in results {
        graphs += r?;
    }
    Ok(format!("{graphs} graphs connected over {} matroids", entries.len()))
}

fn averaging() -> Check {
    let mut count = 0;
    for n in 1..=7usize {
        for r in 0..=n {
            let family = all_sparse_paving(n, r, 4_000_000).map_err(|e| e.to_string())?;
            let bad: Vec<String> = family
                .par_iter()
                .filter_map(|m| {
                    let avg = average_ch_intervals(m);
                    match exhaustive_mean_ch_intervals(m, 9) {
                        Ok(mean) if mean == avg => {}
                        Ok(mean) => return Some(format!("{m:?}: {avg} vs {mean}")),
                        Err(e) => return Some(e.to_string()),
                    }
                    if 2 * r <= n && avg.numer() >= &(avg.denom() * 2) {
                        return Some(format!("{m:?}: average {avg} is not below 2"));
                    }
                    None
                })
                .collect();
            ensure!(bad.is_empty(), "{}", bad[0]);
            count += family.len();
        }
    }
    let p44 = graham_sloane(4, 2, 3).map_err(|e| e.to_string())?;
    let avg = average_ch_intervals(&p44);
    ensure!(
        avg.numer().to_string() == "4" && avg.denom().to_string() == "3",
        "P44 average is {avg}"
    );
    Ok(format!("{count} matroids, P44 gives 4/3"))
}

fn order_agrees(m: &SparsePavingMatroid, label: &str) -> Result<(), String> {
    let density = check_density(m);
    let density_brute = check_density_brute(m, 20).map_err(|e| e.to_string())?;
    let brute = match brute_force_order(m, 9) {
        Ok(ord) => Some(ord),
        Err(CyclicError::NotOrderable { .. }) => None,
        Err(e) => return Err(format!("{label}: {e}")),
    };
    let found = match find_cyclic_order(m) {
        Ok(ord) => Some(ord),
        Err(CyclicError::NotOrderable { .. }) => None,
        Err(e) => return Err(format!("{label}: {e}")),
    };
    let verdicts = [found.is_some(), brute.is_some(), density.is_ok(), density_brute.is_ok()];
    if verdicts.iter().any(|&v| v != verdicts[0]) {
        return Err(format!("{label}: verdicts disagree {verdicts:?}"));
    }
    for ord in found.iter().chain(&brute) {
        if ch_interval_count(m, ord) != Ok(0) || !is_basis_cycle(m, ord) {
            return Err(format!("{label}: witness {ord:?} has a circuit-hyperplane interval"));
        }
    }
    Ok(())
}

fn cyclic_orders() -> Check {
    let mut exhaustive = 0;
    for n in 1..=7usize {
        for r in 0..=n {
            let family = all_sparse_paving(n, r, 4_000_000).map_err(|e| e.to_string())?;
            family
                .par_iter()
                .map(|m| order_agrees(m, &format!("({n},{r},{:?})", m.circuit_hyperplanes())))
                .collect::<Result<Vec<_>, _>>()?;
            exhaustive += family.len();
        }
    }
    let mid = corpus(8, 9, 12, 7);
    mid.par_iter()
        .map(|e| order_agrees(&e.matroid, &e.label))
        .collect::<Result<Vec<_>, _>>()?;
    let large: Vec<CorpusEntry> = corpus(10, 16, 4, 8)
        .into_iter()
        .filter(|e| e.matroid.rank() >= 3 && e.matroid.n() - e.matroid.rank() >= 3)
        .collect();
    large
        .par_iter()
        .map(|e| {
            let ord = find_cyclic_order(&e.matroid).map_err(|err| format!("{}: {err}", e.label))?;
            if is_basis_cycle(&e.matroid, &ord) {
                Ok(())
            } else {
                Err(format!("{}: unverified order {ord:?}", e.label))
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(format!(
        "{exhaustive} matroids with n <= 7, {} corpus matroids with n = 8, 9, {} with 10 <= n <= 16",
        mid.len(),
        large.len()
    ))
}

fn basis_cycles() -> Check {
    let entries: Vec<CorpusEntry> = (1..=8usize)
        .flat_map(|r| {
            corpus(2 * r, 2 * r, 4, 9)
                .into_iter()
                .filter(move |e| e.matroid.rank() == r)
        })
        .collect();
    let results: Vec<Result<usize, String>> = entries
        .par_iter()
        .enumerate()
        .map(|(idx, entry)| {
            let m = &entry.matroid;
            let r = m.rank();
            let ground = m.ground();
            let mut pairs: Vec<ElementSet> = m.bases().into_iter().filter(|&b| m.is_basis(ground - b)).collect();
            if pairs.len() > 1000 {
                pairs.shuffle(&mut ChaCha8Rng::seed_from_u64(idx as u64));
                pairs.truncate(1000);
            }
            for &b1 in &pairs {
                let b2 = ground - b1;
                let (ord, repairs) =
                    gabow_cycle_traced(m, b1, b2).map_err(|e| format!("{}: {b1} {b2}: {e}", entry.label))?;
                let els = ord.elements();
                let head: ElementSet = els[..r].iter().copied().collect();
                if !is_basis_cycle(m, &ord) || head != b1 || repairs.len() > r.saturating_sub(1) {
                    return Err(format!(
                        "{}: {b1} {b2}: cycle {ord:?} after {} repairs",
                        entry.label,
                        repairs.len()
                    ));
                }
            }
            Ok(pairs.len())
        })
        .collect();
    let mut pairs = 0;
    for r in results {
        pairs += r?;
    }
    Ok(format!("{pairs} basis pairs over {} matroids", entries.len()))
}

fn cyclic_flats() -> Check {
    let entries = corpus(1, 12, 4, 10);
    entries
        .par_iter()
        .map(|e| {
            let m = &e.matroid;
            let fast = cyclic_flats_of(m, 20).map_err(|err| err.to_string())?;
            let slow = cyclic_flats_by_definition(m, 20).map_err(|err| err.to_string())?;
            if fast != slow {
                return Err(format!("{}: fast path differs from the definition", e.label));
            }
            let (lo, hi) = slow.counting_sums();
            let cap = 1u128 << m.n();
            if lo > cap || hi > cap {
                return Err(format!("{}: counting sums {lo}, {hi} exceed 2^n", e.label));
            }
            if num_gt(slow.len(), &bounds(m.n(), None).zn_upper_floor()) {
                return Err(format!(
                    "{}: {} cyclic flats exceed the upper bound",
                    e.label,
                    slow.len()
                ));
            }
            Ok(())
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut z8 = 0;
    for n in 4..=20usize {
        let report = zn_census(n).map_err(|e| e.to_string())?;
        let low = &report.bounds.zn_lower_ceil;
        let high = report.bounds.zn_upper_floor();
        ensure!(
            !num_gt(report.certified as usize, &high) && !num_lt(report.certified as usize, low),
            "census {n}: {} outside [{low}, {high}]",
            report.certified
        );
        if n == 8 {
            z8 = report.certified;
        }
    }
    ensure!(z8 >= 11, "census 8 gives {z8}");
    Ok(format!(
        "{} matroids, census 4..=20 in range, z_8 >= {z8}",
        entries.len()
    ))
}

fn num_gt(a: usize, b: &impl std::fmt::Display) -> bool {
    b.to_string().parse::<u128>().is_ok_and(|b| a as u128 > b)
}

fn num_lt(a: usize, b: &impl std::fmt::Display) -> bool {
    b.to_string().parse::<u128>().map_or(true, |b| (a as u128) < b)
}

fn cli(args: &[&str]) -> (i32, String) {
    let out = spm_cli::execute(std::iter::once("spm").chain(args.iter().copied()));
    (out.code, out.text)
}

fn round_trip() -> Check {
    let entries = corpus(1, 16, 4, 11);
    let mut explicit = 0;
    for e in &entries {
        let file = MatroidFile::Sparse(e.matroid.clone());
        let text = serialize(&file);
        let back = parse_matroid(&text).map_err(|err| format!("{}: {err}", e.label))?;
        ensure!(
            back == file && serialize(&back) == text,
            "{}: round trip differs",
            e.label
        );
        if binomial(e.matroid.n(), e.matroid.rank()) <= 500 {
            let ex = MatroidFile::Explicit(e.matroid.to_explicit().map_err(|err| err.to_string())?);
            let text = serialize(&ex);
            let back = parse_matroid(&text).map_err(|err| format!("{}: {err}", e.label))?;
            ensure!(
                back == ex && serialize(&back) == text,
                "{}: explicit round trip differs",
                e.label
            );
            explicit += 1;
        }
    }

    let dir = tempfile::TempDir::new().map_err(|e| e.to_string())?;
    let path = |name: &str| dir.path().join(name).to_string_lossy().into_owned();
    let (m, low, pair) = (path("m.spm"), path("low.spm"), path("pair.spm"));
    for (args, file) in [
        (
            vec![
                "gen", "random", "--n", "10", "--r", "4", "--target", "12", "--seed", "5",
            ],
            &m,
        ),
        (
            vec!["gen", "random", "--n", "16", "--r", "1", "--target", "3", "--seed", "6"],
            &low,
        ),
        (vec!["gen", "gs", "--n", "12", "--r", "6"], &pair),
    ] {
        let (code, text) = cli(&args);
        ensure!(code == 0, "{args:?}: {text}");
        std::fs::write(file, text).map_err(|e| e.to_string())?;
    }
    let pair_b1 = {
        let MatroidFile::Sparse(pm) =
            parse_matroid(&std::fs::read_to_string(&pair).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?
        else {
            return Err("pair file is not sparse paving".into());
        };
        let g = pm.ground();
        let b1 = pm
            .bases()
            .into_iter()
            .find(|&b| pm.is_basis(g - b))
            .ok_or("no disjoint bases")?;
        (spm_cli::format::set_token(b1), spm_cli::format::set_token(g - b1))
    };
    let commands: Vec<Vec<&str>> = vec![
        vec![
            "gen", "random", "--n", "14", "--r", "6", "--target", "40", "--seed", "99",
        ],
        vec!["validate", &m],
        vec!["dual", &m],
        vec!["minor", &m, "--contract", "3"],
        vec!["flats", &m],
        vec!["flats", &low],
        vec!["avg", &m],
        vec!["order", "cyclic", &m],
        vec!["order", "pair", &pair, "--b1", &pair_b1.0, "--b2", &pair_b1.1],
        vec!["conj", "faber", &m],
        vec!["census", "--n", "16"],
        vec!["bounds", "--n", "30", "--r", "9"],
    ];
    let mut runs = 0;
    for args in &commands {
        let first = cli(args);
        ensure!(first.0 == 0, "{args:?}: exit {}: {}", first.0, first.1);
        for jobs in ["1", "4"] {
            let mut with_jobs = args.clone();
            with_jobs.extend(["--jobs", jobs]);
            ensure!(cli(&with_jobs) == first, "{args:?} with --jobs {jobs} differs");
            runs += 1;
        }
        ensure!(cli(args) == first, "{args:?} differs between runs");
        runs += 2;
    }
    Ok(format!(
        "{} sparse and {explicit} explicit round trips, {runs} CLI runs identical",
        entries.len()
    ))
}
