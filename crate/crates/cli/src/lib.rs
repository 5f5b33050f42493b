//! Command-line front end for the `sparse-paving` crate.
//!
//! [`execute`] runs one invocation and returns the exit code with the report
//! text, so the binary and the tests share one code path. Exit codes: 0 the
//! property holds, 1 it fails (a `WITNESS` line follows), 2 usage, parse or
//! validation error, 3 a computed witness failed re-verification.

pub mod format;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use sparse_paving::constructions::{graham_sloane, gs_best_class, random_sparse_paving};
use sparse_paving::cyclic::{
    average_ch_intervals, brute_force_order, check_density_brute, find_cyclic_order_traced, gabow_cycle_traced,
    is_basis_cycle, CyclicError, CyclicOrder, DEFAULT_ORACLE_MAX_N, DENSITY_SCAN_MAX_N,
};
use sparse_paving::exchange::{
    bpg_path, graph_connected, verify_bpg_walk, verify_moves, white2_path, white_moves, BasisCollection,
    BasisPairVertex, CollectionKind, ExchangeError, ExchangeMove, GraphKind, Multiset, DEFAULT_VERTEX_CAP,
};
use sparse_paving::flats::{
    bounds, bounds_for, cyclic_flats_by_definition, cyclic_flats_of, rational_to_f64, zn_census, BoundsReport,
    DEFAULT_SCAN_MAX_N,
};
use sparse_paving::{explicit_validate, ElementSet, Matroid, MinorKind, SparsePavingMatroid, DEFAULT_EXPLICIT_CAP};

use format::{parse_matroid, parse_set, parse_sets, serialize, serialize_sparse, set_token, MatroidFile};

#[derive(Debug, Parser)]
#[command(
    name = "spm",
    version,
    about = "Sparse paving matroids: constructions, exchange walks, cyclic orders"
)]
pub struct Cli {
    /// Worker threads for the parallel scans; output does not depend on it.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,
    /// Most vertices an exchange-graph oracle may enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_VERTEX_CAP)]
    cap_vertices: usize,
    /// Largest C(n,r) converted to an explicit basis list.
    #[arg(long, global = true, default_value_t = DEFAULT_EXPLICIT_CAP)]
    cap_explicit: u64,
    /// Largest ground set for the exhaustive cyclic-order oracle.
    #[arg(long, global = true, default_value_t = DEFAULT_ORACLE_MAX_N)]
    cap_oracle_n: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a matroid file.
    #[command(subcommand)]
    Gen(Gen),
    /// Parse and validate a matroid file.
    Validate {
        file: PathBuf,
        /// Also materialize every basis and check the exchange axiom.
        #[arg(long)]
        explicit: bool,
    },
    /// Write the dual matroid.
    Dual {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Delete or contract one element; later elements shift down by one.
    Minor {
        file: PathBuf,
        #[arg(long, conflicts_with = "contract", required_unless_present = "contract")]
        delete: Option<usize>,
        #[arg(long)]
        contract: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Turn one circuit-hyperplane into a basis.
    Relax {
        file: PathBuf,
        /// The circuit-hyperplane, as "i,j,...".
        #[arg(long)]
        ch: String,
        #[command(flatten)]
        out: Output,
    },
    /// Exchange-graph connectivity: constructive walks and exhaustive oracles.
    #[command(subcommand)]
    Conj(Conj),
    /// Cyclic orderings with every r-interval a basis.
    #[command(subcommand)]
    Order(Order),
    /// List the cyclic flats.
    Flats { file: PathBuf },
    /// Exact mean number of circuit-hyperplane r-intervals over all cyclic orders.
    Avg { file: PathBuf },
    /// Evaluate the counting bounds for ground size n.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: Option<usize>,
    },
    /// Lower bound on the largest number of cyclic flats from Graham-Sloane classes.
    Census {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Args)]
struct Output {
    /// Write the matroid here instead of standard output.
    #[arg(short = 'o', long = "output")]
    path: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Gen {
    /// Graham-Sloane residue class; the largest class when --class is omitted.
    Gs {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        class: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Greedy random circuit-hyperplanes.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        target: usize,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug, Subcommand)]
enum Conj {
    /// Basis pair graph: path between two vertices "A1;A2".
    Faber {
        file: PathBuf,
        #[arg(long, requires = "to")]
        from: Option<String>,
        #[arg(long, requires = "from")]
        to: Option<String>,
        /// Also decide connectivity by exhaustive search.
        #[arg(long)]
        oracle: bool,
    },
    /// Multisets of bases: symmetric exchanges between "B1|B2|...".
    White(WhiteArgs),
    /// Tuples of bases: symmetric exchanges between "B1|B2|...".
    White2(WhiteArgs),
}

#[derive(Debug, Args)]
struct WhiteArgs {
    file: PathBuf,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    from: String,
    #[arg(long)]
    to: String,
    /// Also decide connectivity by exhaustive search.
    #[arg(long)]
    oracle: bool,
}

#[derive(Debug, Subcommand)]
enum Order {
    /// A cyclic order of the ground set, or a density witness.
    Cyclic { file: PathBuf },
    /// A cyclic order starting with basis b1 followed by its complement b2.
    Pair {
        file: PathBuf,
        #[arg(long)]
        b1: String,
        #[arg(long)]
        b2: String,
    },
}

/// Exit code and report text of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub text: String,
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<std::fmt::Error> for Failure {
    fn from(_: std::fmt::Error) -> Self {
        Failure::Internal("formatting failed".into())
    }
}

type Run = Result<Outcome, Failure>;

fn usage(msg: impl std::fmt::Display) -> Failure {
    Failure::Usage(msg.to_string())
}

fn ok(text: String) -> Run {
    Ok(Outcome { code: 0, text })
}

/// Parses `argv` (program name first) and runs the command.
pub fn execute<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Outcome {
                code,
                text: e.render().to_string(),
            };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs as usize).build() {
        Ok(pool) => pool,
        Err(e) => {
            return Outcome {
                code: 2,
                text: format!("error: cannot start {} workers: {e}\n", cli.jobs),
            }
        }
    };
    match pool.install(|| run(&cli)) {
        Ok(outcome) => outcome,
        Err(Failure::Usage(msg)) => Outcome {
            code: 2,
            text: format!("error: {msg}\n"),
        },
        Err(Failure::Internal(msg)) => Outcome {
            code: 3,
            text: format!("internal error: {msg}\n"),
        },
    }
}

fn run(cli: &Cli) -> Run {
    match &cli.command {
        Command::Gen(Gen::Gs { n, r, class, out }) => {
            let m = match class {
                Some(c) => graham_sloane(*n, *r, *c),
                None => gs_best_class(*n, *r).map(|(_, m)| m),
            }
            .map_err(usage)?;
            emit(&serialize_sparse(&m), out)
        }
        Command::Gen(Gen::Random {
            n,
            r,
            target,
            seed,
            out,
        }) => {
            let m = random_sparse_paving(*n, *r, *target, *seed).map_err(usage)?;
            emit(&serialize_sparse(&m), out)
        }
        Command::Validate { file, explicit } => validate(cli, file, *explicit),
        Command::Dual { file, out } => {
            let dual = match load(file)? {
                MatroidFile::Sparse(m) => MatroidFile::Sparse(m.dual()),
                MatroidFile::Explicit(m) => MatroidFile::Explicit(m.dual()),
            };
            emit(&serialize(&dual), out)
        }
        Command::Minor {
            file,
            delete,
            contract,
            out,
        } => {
            let (kind, e) = match (delete, contract) {
                (Some(e), None) => (MinorKind::Delete, *e),
                (None, Some(e)) => (MinorKind::Contract, *e),
                _ => return Err(usage("give exactly one of --delete and --contract")),
            };
            let minor = match load(file)? {
                MatroidFile::Sparse(m) => MatroidFile::Sparse(m.minor(kind, e).map_err(usage)?.matroid),
                MatroidFile::Explicit(m) => MatroidFile::Explicit(m.minor(kind, e).map_err(usage)?.matroid),
            };
            emit(&serialize(&minor), out)
        }
        Command::Relax { file, ch, out } => {
            let m = load_sparse(file, "relax")?;
            let h = parse_set(ch, m.n()).map_err(|e| usage(format!("--ch: {e}")))?;
            emit(&serialize_sparse(&m.relax(h).map_err(usage)?), out)
        }
        Command::Conj(Conj::Faber { file, from, to, oracle }) => {
            faber(cli, file, from.as_deref(), to.as_deref(), *oracle)
        }
        Command::Conj(Conj::White(args)) => white(cli, args, CollectionKind::Multiset),
        Command::Conj(Conj::White2(args)) => white(cli, args, CollectionKind::Tuple),
        Command::Order(Order::Cyclic { file }) => order_cyclic(cli, file),
        Command::Order(Order::Pair { file, b1, b2 }) => order_pair(file, b1, b2),
        Command::Flats { file } => flats(file),
        Command::Avg { file } => {
            let m = load_sparse(file, "avg")?;
            let avg = average_ch_intervals(&m);
            ok(format!("{}/{}\n", avg.numer(), avg.denom()))
        }
        Command::Bounds { n, r } => {
            if r.is_some_and(|r| r > *n) {
                return Err(usage(format!("rank {} exceeds n = {n}", r.unwrap_or_default())));
            }
            ok(bounds_text(&bounds(*n, *r))?)
        }
        Command::Census { n } => census(*n),
    }
}

fn load(path: &Path) -> Result<MatroidFile, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    parse_matroid(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_sparse(path: &Path, command: &str) -> Result<SparsePavingMatroid, Failure> {
    match load(path)? {
        MatroidFile::Sparse(m) => Ok(m),
        MatroidFile::Explicit(_) => Err(usage(format!("{command} needs an `spm 1` file"))),
    }
}

fn emit(text: &str, out: &Output) -> Run {
    match &out.path {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
            ok(String::new())
        }
        None => ok(text.to_string()),
    }
}

fn validate(cli: &Cli, path: &Path, explicit: bool) -> Run {
    let mut text = String::new();
    match load(path)? {
        MatroidFile::Sparse(m) => {
            writeln!(
                text,
                "valid sparse paving matroid: n {} r {} circuit-hyperplanes {} bases {}",
                m.n(),
                m.rank(),
                m.ch_count(),
                m.basis_count()
            )?;
            if explicit {
                let e = m.to_explicit_with_cap(cli.cap_explicit).map_err(usage)?;
                explicit_validate(e.n(), e.basis_list())
                    .map_err(|err| Failure::Internal(format!("explicit form fails validation: {err}")))?;
                writeln!(text, "explicit basis list satisfies the exchange axiom")?;
            }
        }
        MatroidFile::Explicit(m) => {
            writeln!(
                text,
                "valid matroid: n {} r {} bases {}",
                m.n(),
                m.rank(),
                m.basis_list().len()
            )?;
        }
    }
    ok(text)
}

fn vertex_token(v: &BasisPairVertex) -> String {
    format!("{};{}", set_token(v.first()), set_token(v.second()))
}

fn oracle_line(
    text: &mut String,
    result: Result<sparse_paving::exchange::Connectivity, ExchangeError>,
) -> Result<bool, Failure> {
    let c = result.map_err(|e| match e {
        ExchangeError::TooLarge { .. } => usage(format!("{e}; raise --cap-vertices")),
        other => usage(other),
    })?;
    writeln!(
        text,
        "oracle: {} ({} vertices)",
        if c.connected { "connected" } else { "disconnected" },
        c.vertices
    )?;
    if !c.connected {
        writeln!(text, "WITNESS disconnected {}", c.vertices)?;
    }
    Ok(c.connected)
}

fn faber(cli: &Cli, path: &Path, from: Option<&str>, to: Option<&str>, oracle: bool) -> Run {
    let file = load(path)?;
    let mut text = String::new();
    let connected = if oracle {
        match &file {
            MatroidFile::Sparse(m) => {
                oracle_line(&mut text, graph_connected(m, GraphKind::BasisPair, cli.cap_vertices))?
            }
            MatroidFile::Explicit(m) => {
                oracle_line(&mut text, graph_connected(m, GraphKind::BasisPair, cli.cap_vertices))?
            }
        }
    } else {
        true
    };
    let m = match file {
        MatroidFile::Sparse(m) => m,
        MatroidFile::Explicit(_) if oracle && from.is_none() => {
            return Ok(Outcome {
                code: i32::from(!connected),
                text,
            })
        }
        MatroidFile::Explicit(_) => return Err(usage("constructive paths need an `spm 1` file; use --oracle")),
    };
    let vertex = |arg: &str, flag: &str| -> Result<BasisPairVertex, Failure> {
        let sets = parse_sets(arg, ';', m.n()).map_err(|e| usage(format!("{flag}: {e}")))?;
        let [a1, a2] = sets[..] else {
            return Err(usage(format!("{flag}: expected \"A1;A2\"")));
        };
        BasisPairVertex::new(&m, a1, a2).map_err(|e| usage(format!("{flag}: {e}")))
    };
    let (u, v) = match (from, to) {
        (Some(f), Some(t)) => (vertex(f, "--from")?, vertex(t, "--to")?),
        _ => {
            // default endpoints: the first disjoint basis pair and its swap
            let bases = m.bases();
            let pair = bases
                .iter()
                .find_map(|&a| bases.iter().find(|&&b| a.is_disjoint(b)).map(|&b| (a, b)));
            let Some((a1, a2)) = pair else {
                writeln!(text, "no two disjoint bases; the basis pair graph is empty")?;
                return Ok(Outcome {
                    code: i32::from(!connected),
                    text,
                });
            };
            let u = BasisPairVertex::new(&m, a1, a2).map_err(|e| Failure::Internal(e.to_string()))?;
            let v = BasisPairVertex::new(&m, a2, a1).map_err(|e| Failure::Internal(e.to_string()))?;
            (u, v)
        }
    };
    let path = bpg_path(&m, &u, &v).map_err(|e| match e {
        ExchangeError::Stuck(_) => Failure::Internal(e.to_string()),
        other => usage(other),
    })?;
    if !verify_bpg_walk(&m, &path) || path.first() != Some(&u) || path.last() != Some(&v) {
        return Err(Failure::Internal("basis pair path failed re-verification".into()));
    }
    writeln!(text, "path of length {}", path.len() - 1)?;
    for (i, w) in path.iter().enumerate() {
        writeln!(text, "{i}: {} | {} | {}", w.first(), w.second(), w.rest())?;
    }
    let tokens: Vec<String> = path.iter().map(vertex_token).collect();
    writeln!(text, "WITNESS {}", tokens.join(" "))?;
    Ok(Outcome {
        code: i32::from(!connected),
        text,
    })
}

fn white(cli: &Cli, args: &WhiteArgs, kind: CollectionKind) -> Run {
    let file = load(&args.file)?;
    let n = file.n();
    let members = |arg: &str, flag: &str| -> Result<Vec<ElementSet>, Failure> {
        let sets = parse_sets(arg, '|', n).map_err(|e| usage(format!("{flag}: {e}")))?;
        if sets.len() != args.k {
            return Err(usage(format!(
                "{flag}: expected {} bases, found {}",
                args.k,
                sets.len()
            )));
        }
        Ok(sets)
    };
    let (a, b) = (members(&args.from, "--from")?, members(&args.to, "--to")?);
    let mut text = String::new();
    let s = Multiset::union_of(n, &a);
    let graph = match kind {
        CollectionKind::Multiset => GraphKind::WhiteMultiset(&s),
        CollectionKind::Tuple => GraphKind::WhiteTuple(&s),
    };
    let connected = if args.oracle {
        match &file {
            MatroidFile::Sparse(m) => oracle_line(&mut text, graph_connected(m, graph, cli.cap_vertices))?,
            MatroidFile::Explicit(m) => oracle_line(&mut text, graph_connected(m, graph, cli.cap_vertices))?,
        }
    } else {
        true
    };
    let m = match file {
        MatroidFile::Sparse(m) => m,
        MatroidFile::Explicit(_) => return Err(usage("constructive moves need an `spm 1` file")),
    };
    let from = BasisCollection::new(&m, kind, a.clone()).map_err(|e| usage(format!("--from: {e}")))?;
    let to = BasisCollection::new(&m, kind, b.clone()).map_err(|e| usage(format!("--to: {e}")))?;
    let moves = match kind {
        CollectionKind::Multiset => white_moves(&m, &from, &to),
        CollectionKind::Tuple => white2_path(&m, &from, &to),
    }
    .map_err(|e| match e {
        ExchangeError::Stuck(_) => Failure::Internal(e.to_string()),
        other => usage(other),
    })?;
    verify_moves(&m, kind, &a, &moves, &b)
        .map_err(|e| Failure::Internal(format!("exchange moves failed re-verification: {e}")))?;
    writeln!(text, "{} move{}", moves.len(), if moves.len() == 1 { "" } else { "s" })?;
    let mut cur = from.members().to_vec();
    let show = |sets: &[ElementSet]| sets.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" | ");
    writeln!(text, "start: {}", show(&cur))?;
    for mv in &moves {
        apply(&mut cur, mv, kind);
        writeln!(text, "{mv}: {}", show(&cur))?;
    }
    let tokens: Vec<String> = moves.iter().map(|mv| mv.to_string()).collect();
    writeln!(text, "WITNESS {}", tokens.join(" ").trim_end())?;
    Ok(Outcome {
        code: i32::from(!connected),
        text,
    })
}

fn apply(cur: &mut [ElementSet], mv: &ExchangeMove, kind: CollectionKind) {
    cur[mv.i] = cur[mv.i].exchange(mv.x, mv.y);
    cur[mv.j] = cur[mv.j].exchange(mv.y, mv.x);
    if kind == CollectionKind::Multiset {
        cur.sort_unstable();
    }
}

fn order_line(ord: &CyclicOrder) -> String {
    format!("WITNESS {ord}")
}

fn order_cyclic(cli: &Cli, path: &Path) -> Run {
    let mut text = String::new();
    match load(path)? {
        MatroidFile::Sparse(m) => match find_cyclic_order_traced(&m) {
            Ok((ord, route)) => {
                if !is_basis_cycle(&m, &ord) {
                    return Err(Failure::Internal(format!("order {ord} failed re-verification")));
                }
                writeln!(
                    text,
                    "orderable: every {}-interval of {ord} is a basis (route {route})",
                    m.rank()
                )?;
                writeln!(text, "{}", order_line(&ord))?;
                ok(text)
            }
            Err(CyclicError::NotOrderable { witness }) => not_orderable(&m, witness, text),
            Err(e @ CyclicError::Stuck(_)) => Err(Failure::Internal(e.to_string())),
            Err(e) => Err(usage(e)),
        },
        MatroidFile::Explicit(m) => {
            let density = check_density_brute(&m, DENSITY_SCAN_MAX_N).map_err(usage)?;
            match brute_force_order(&m, cli.cap_oracle_n) {
                Ok(ord) => {
                    if !is_basis_cycle(&m, &ord) || density.is_err() {
                        return Err(Failure::Internal(format!("order {ord} failed re-verification")));
                    }
                    writeln!(
                        text,
                        "orderable: every {}-interval of {ord} is a basis (route oracle)",
                        m.rank()
                    )?;
                    writeln!(text, "{}", order_line(&ord))?;
                    ok(text)
                }
                Err(CyclicError::NotOrderable { .. }) => not_orderable(&m, density.err(), text),
                Err(e @ CyclicError::TooLarge { .. }) => Err(usage(format!("{e}; raise --cap-oracle-n"))),
                Err(e) => Err(usage(e)),
            }
        }
    }
}

fn not_orderable<M: Matroid>(m: &M, witness: Option<ElementSet>, mut text: String) -> Run {
    match witness {
        Some(a) => {
            // r(M) |A| > r(A) n
            if a.is_empty() || m.rank() * a.len() <= m.rank_of(a) * m.ground_size() {
                return Err(Failure::Internal(format!("density witness {a} failed re-verification")));
            }
            writeln!(text, "not orderable; density witness A = {a}")?;
            writeln!(
                text,
                "WITNESS {}",
                a.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
            )?;
        }
        None => {
            writeln!(
                text,
                "not orderable; no cyclic order exists although the density condition holds"
            )?;
            writeln!(text, "WITNESS none")?;
        }
    }
    Ok(Outcome { code: 1, text })
}

fn order_pair(path: &Path, b1: &str, b2: &str) -> Run {
    let m = load_sparse(path, "order pair")?;
    let b1 = parse_set(b1, m.n()).map_err(|e| usage(format!("--b1: {e}")))?;
    let b2 = parse_set(b2, m.n()).map_err(|e| usage(format!("--b2: {e}")))?;
    let (ord, repairs) = gabow_cycle_traced(&m, b1, b2).map_err(|e| match e {
        CyclicError::Stuck(_) => Failure::Internal(e.to_string()),
        CyclicError::GroundSetMismatch => usage("b1 and b2 must together cover the ground set"),
        other => usage(other),
    })?;
    let r = m.rank();
    let head: ElementSet = ord.elements()[..r].iter().copied().collect();
    if !is_basis_cycle(&m, &ord) || head != b1 {
        return Err(Failure::Internal(format!("cycle {ord} failed re-verification")));
    }
    let mut text = String::new();
    writeln!(
        text,
        "every {r}-interval of {ord} is a basis after {} repairs",
        repairs.len()
    )?;
    writeln!(text, "{}", order_line(&ord))?;
    ok(text)
}

/// Definition-level check: rank drops when any element is removed, and adding
/// any outside element raises it.
fn is_cyclic_flat<M: Matroid>(m: &M, f: ElementSet) -> bool {
    let rank = m.rank_of(f);
    f.iter().all(|e| m.rank_of(f.without(e)) == rank) && (m.ground() - f).iter().all(|x| m.rank_of(f.with(x)) > rank)
}

fn flats(path: &Path) -> Run {
    let file = load(path)?;
    let (found, verified) = match &file {
        MatroidFile::Sparse(m) => {
            let found = cyclic_flats_of(m, DEFAULT_SCAN_MAX_N).map_err(usage)?;
            let verified = found.flats.iter().all(|&f| is_cyclic_flat(m, f));
            (found, verified)
        }
        MatroidFile::Explicit(m) => {
            let found = cyclic_flats_by_definition(m, DEFAULT_SCAN_MAX_N).map_err(usage)?;
            let verified = found.flats.iter().all(|&f| is_cyclic_flat(m, f));
            (found, verified)
        }
    };
    if !verified {
        return Err(Failure::Internal("cyclic flat failed re-verification".into()));
    }
    let mut text = String::new();
    writeln!(text, "{} cyclic flats", found.len())?;
    for (size, &count) in found.histogram.iter().enumerate().filter(|(_, &c)| c > 0) {
        writeln!(text, "size {size}: {count}")?;
    }
    for f in &found.flats {
        writeln!(text, "{f}")?;
    }
    let tokens: Vec<String> = found.flats.iter().map(|&f| set_token(f)).collect();
    writeln!(text, "WITNESS {}", tokens.join(" "))?;
    if let MatroidFile::Sparse(m) = &file {
        let report = bounds_for(m);
        writeln!(text, "basis count {}", report.basis_count.unwrap_or_default())?;
    }
    ok(text)
}

fn bounds_text(b: &BoundsReport) -> Result<String, Failure> {
    let mut text = String::new();
    writeln!(text, "n {}", b.n)?;
    writeln!(
        text,
        "z_n upper: 2^{}/{} = {} ~ {} (floor {})",
        b.n + 1,
        b.n + 2,
        b.zn_upper,
        rational_to_f64(&b.zn_upper),
        b.zn_upper_floor()
    )?;
    writeln!(
        text,
        "z_n lower: {} ~ {} (least integer {})",
        b.zn_lower_radical, b.zn_lower_decimal, b.zn_lower_ceil
    )?;
    if let (Some(r), Some(ch)) = (b.r, &b.ch_upper) {
        writeln!(text, "r {r}")?;
        writeln!(
            text,
            "circuit-hyperplanes upper: C({},{r})/{} = {ch} ~ {}",
            b.n,
            b.n - r + 1,
            rational_to_f64(ch)
        )?;
    }
    Ok(text)
}

fn census(n: usize) -> Run {
    let report = zn_census(n).map_err(usage)?;
    let best = graham_sloane(n, report.best.r, report.best.class).map_err(|e| Failure::Internal(e.to_string()))?;
    if best.validate().is_err() || best.ch_count() as u64 != report.best.circuit_hyperplanes {
        return Err(Failure::Internal("census matroid failed re-verification".into()));
    }
    let mut text = String::new();
    writeln!(text, "n {n}")?;
    for row in &report.per_rank {
        writeln!(
            text,
            "r {} class {} circuit-hyperplanes {}",
            row.r, row.class, row.circuit_hyperplanes
        )?;
    }
    writeln!(
        text,
        "best: r {} class {} gives {} cyclic flats",
        report.best.r, report.best.class, report.certified
    )?;
    writeln!(
        text,
        "z_n >= {} within [{}, {}]",
        report.certified,
        report.bounds.zn_lower_ceil,
        report.bounds.zn_upper_floor()
    )?;
    writeln!(
        text,
        "WITNESS {} {} {}",
        report.best.r, report.best.class, report.certified
    )?;
    ok(text)
}
