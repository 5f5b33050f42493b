//! Cyclic flats (flats that are unions of circuits) and the counting bounds on
//! how many a matroid on `n` elements can have.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::constructions::{gs_class_sizes, ConstructionError};
use crate::matroid::{Matroid, SparsePavingMatroid};
use crate::set::{binomial, ElementSet};

/// Largest ground set the subset scan accepts by default.
pub const DEFAULT_SCAN_MAX_N: usize = 20;

const SCAN_CHUNK: u64 = 1 << 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlatsError {
    #[error("scanning all subsets needs n ≤ {cap}, got n = {n}")]
    TooLarge { n: usize, cap: usize },
    #[error("census needs 4 ≤ n ≤ 24, got n = {0}")]
    OutOfRange(usize),
    #[error("census lower bound {found} for n = {n} lies outside [{low}, {high}]")]
    CensusOutOfBounds {
        n: usize,
        found: u64,
        low: BigInt,
        high: BigInt,
    },
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

/// The cyclic flats of a matroid, ordered by size and then by element list,
/// with `histogram[i]` counting those of size `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicFlats {
    pub flats: Vec<ElementSet>,
    pub histogram: Vec<u64>,
}

impl CyclicFlats {
    fn from_flats(n: usize, mut flats: Vec<ElementSet>) -> Self {
        flats.sort_by_key(|f| (f.len(), f.to_vec()));
        let mut histogram = vec![0; n + 1];
        for f in &flats {
            histogram[f.len()] += 1;
        }
        CyclicFlats { flats, histogram }
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// `(Σ a_i (i+1), Σ a_i (n-i+1))`; each is at most `2^n`, since the sets
    /// `F - e` (and `F + x`) obtained from distinct cyclic flats never collide.
    pub fn counting_sums(&self) -> (u128, u128) {
        let n = self.histogram.len() - 1;
        self.histogram.iter().enumerate().fold((0, 0), |(lo, hi), (i, &a)| {
            (
                lo + a as u128 * (i as u128 + 1),
                hi + a as u128 * (n - i) as u128 + a as u128,
            )
        })
    }
}

/// Cyclic flats of a sparse paving matroid. With rank and nullity at least two
/// they are `∅`, `E` and the circuit-hyperplanes; otherwise the subset scan
/// runs (bounded by `max_n`).
pub fn cyclic_flats_of(m: &SparsePavingMatroid, max_n: usize) -> Result<CyclicFlats, FlatsError> {
    let (n, r) = (m.n(), m.rank());
    if r >= 2 && n - r >= 2 {
        let mut flats = vec![ElementSet::EMPTY, m.ground()];
        flats.extend_from_slice(m.circuit_hyperplanes());
        return Ok(CyclicFlats::from_flats(n, flats));
    }
    cyclic_flats_by_definition(m, max_n)
}

/// Tests every subset for being closed and free of coloops.
pub fn cyclic_flats_by_definition<M: Matroid + Sync>(m: &M, max_n: usize) -> Result<CyclicFlats, FlatsError> {
    let n = m.ground_size();
    if n > max_n {
        return Err(FlatsError::TooLarge { n, cap: max_n });
    }
    let total = 1u64 << n;
    let chunks = total.div_ceil(SCAN_CHUNK);
    let flats: Vec<ElementSet> = (0..chunks)
        .into_par_iter()
        .flat_map_iter(|chunk| {
            let end = ((chunk + 1) * SCAN_CHUNK).min(total);
            (chunk * SCAN_CHUNK..end)
                .map(ElementSet::from_bits)
                .filter(|&f| is_cyclic_flat(m, f))
        })
        .collect();
    Ok(CyclicFlats::from_flats(n, flats))
}

fn is_cyclic_flat<M: Matroid>(m: &M, f: ElementSet) -> bool {
    let rank = m.rank_of(f);
    f.iter().all(|e| m.rank_of(f.without(e)) == rank) && (m.ground() - f).iter().all(|x| m.rank_of(f.with(x)) > rank)
}

/// The three counting bounds evaluated exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub n: usize,
    pub r: Option<usize>,
    /// `2^(n+1) / (n+2)`.
    pub zn_upper: BigRational,
    /// `2^(n-1) / n^(3/2) + 2`, written out.
    pub zn_lower_radical: String,
    /// The same, to 12 significant digits.
    pub zn_lower_decimal: String,
    /// `⌈2^(n-1) / n^(3/2)⌉ + 2`, the least integer meeting the lower bound.
    pub zn_lower_ceil: BigInt,
    /// `C(n,r) / (n-r+1)`.
    pub ch_upper: Option<BigRational>,
    /// Number of bases of a supplied matroid.
    pub basis_count: Option<u64>,
}

impl BoundsReport {
    /// `⌊2^(n+1) / (n+2)⌋`.
    pub fn zn_upper_floor(&self) -> BigInt {
        self.zn_upper.floor().to_integer()
    }
}

/// Evaluates the bounds for ground size `n` (and rank `r`, if given).
pub fn bounds(n: usize, r: Option<usize>) -> BoundsReport {
    let pow2 = |e: usize| BigInt::one() << e;
    let zn_upper = BigRational::new(pow2(n + 1), BigInt::from(n + 2));
    let ch_upper = r
        .filter(|&r| r <= n)
        .map(|r| BigRational::new(BigInt::from(binomial(n, r)), BigInt::from(n - r + 1)));
    BoundsReport {
        n,
        r,
        zn_upper,
        zn_lower_radical: format!("2^{}/({n}*sqrt({n})) + 2", n.saturating_sub(1)),
        zn_lower_decimal: lower_decimal(n),
        zn_lower_ceil: lower_ceil(n) + 2,
        ch_upper,
        basis_count: None,
    }
}

/// [`bounds`] for the size and rank of `m`, with its basis count filled in.
pub fn bounds_for(m: &SparsePavingMatroid) -> BoundsReport {
    BoundsReport {
        basis_count: Some(m.basis_count()),
        ..bounds(m.n(), Some(m.rank()))
    }
}

/// `⌈2^(n-1) / n^(3/2)⌉` as the least `q` with `q² n³ ≥ 4^(n-1)`.
fn lower_ceil(n: usize) -> BigInt {
    if n == 0 {
        return BigInt::zero();
    }
    let num = BigUint::one() << (2 * (n - 1));
    let den = BigUint::from(n).pow(3);
    let quotient = (&num + &den - 1u32) / &den;
    let root = quotient.sqrt();
    let q = if &root * &root == quotient { root } else { root + 1u32 };
    BigInt::from(q)
}

fn lower_decimal(n: usize) -> String {
    if n == 0 {
        return "undefined".to_string();
    }
    let nf = n as f64;
    let value = (nf - 1.0).exp2() / (nf * nf.sqrt()) + 2.0;
    significant(value, 12)
}

fn significant(value: f64, digits: usize) -> String {
    if !value.is_finite() || value == 0.0 {
        return format!("{value}");
    }
    let magnitude = value.abs().log10().floor() as i64;
    if !(-4..15).contains(&magnitude) {
        return format!("{:.*e}", digits - 1, value);
    }
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    format!("{value:.decimals$}")
}

/// Largest Graham–Sloane class for one rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankBest {
    pub r: usize,
    pub class: usize,
    pub circuit_hyperplanes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub n: usize,
    pub per_rank: Vec<RankBest>,
    /// `circuit_hyperplanes + 2` for the best rank: a matroid with this many
    /// cyclic flats exists.
    pub certified: u64,
    pub best: RankBest,
    pub bounds: BoundsReport,
}

/// Lower bound on `z_n` from the best Graham–Sloane class over ranks
/// `2..=n-2`, checked against both sides of the counting bounds.
pub fn zn_census(n: usize) -> Result<CensusReport, FlatsError> {
    if !(4..=24).contains(&n) {
        return Err(FlatsError::OutOfRange(n));
    }
    let mut per_rank = Vec::new();
    for r in 2..=n - 2 {
        let sizes = gs_class_sizes(n, r)?;
        let (class, &size) = sizes
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
            .expect("n classes");
        per_rank.push(RankBest {
            r,
            class,
            circuit_hyperplanes: size,
        });
    }
    let best = *per_rank
        .iter()
        .max_by(|a, b| a.circuit_hyperplanes.cmp(&b.circuit_hyperplanes).then(b.r.cmp(&a.r)))
        .expect("at least one rank");
    let certified = best.circuit_hyperplanes + 2;
    let bounds = bounds(n, None);
    let (low, high) = (bounds.zn_lower_ceil.clone(), bounds.zn_upper_floor());
    let found = BigInt::from(certified);
    if found < low || found > high {
        return Err(FlatsError::CensusOutOfBounds {
            n,
            found: certified,
            low,
            high,
        });
    }
    Ok(CensusReport {
        n,
        per_rank,
        certified,
        best,
        bounds,
    })
}

/// Decimal rendering of an exact rational, for reports.
pub fn rational_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}
