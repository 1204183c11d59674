//! Command-line front end: solve instance files, run the exhaustive reference
//! solver, generate random instances, and benchmark the solvers.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use lcsgc::constraints::{GapConstraint, GapTuple, SigmaConstraints};
use lcsgc::json::{instance_to_json, parse_instance};
use lcsgc::oracle;
use lcsgc::{
    solve_traced, Algorithm, Error, ProblemInstance, SolveResult, SolveStats, Variant, Witness,
    Word,
};

#[derive(Parser)]
#[command(
    name = "lcsgc",
    version,
    about = "Longest common subsequence under gap-length constraints"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve an instance file with a fast solver.
    Solve {
        /// Instance JSON file.
        #[arg(long)]
        input: PathBuf,
        /// One of: auto, layered, segtree, deque, rmq, naive, blocked.
        #[arg(long, default_value = "auto")]
        algorithm: String,
        /// Request a witness where supported.
        #[arg(long)]
        witness: bool,
        /// Emit the report as JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Include structure operation counters in the report.
        #[arg(long)]
        stats: bool,
        /// Thread count for block-pair parallelism (bounded-range solves).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Solve an instance exhaustively with the reference oracle.
    Oracle {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Emit a deterministic pseudo-random instance as JSON.
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "classic")]
        variant: String,
        /// Length of the first word.
        #[arg(long, default_value_t = 8)]
        m: usize,
        /// Length of the second word.
        #[arg(long, default_value_t = 8)]
        n: usize,
        /// Alphabet size.
        #[arg(long, default_value_t = 3)]
        sigma: u32,
        /// Largest constraint bound sampled.
        #[arg(long, default_value_t = 4)]
        max_bound: u32,
        /// Range bound for the bounded-range variant (default: random).
        #[arg(long)]
        range_bound: Option<u32>,
    },
    /// Time solvers across a size range and print CSV rows.
    Bench {
        #[arg(long, default_value = "1c")]
        variant: String,
        #[arg(long, default_value = "auto")]
        algorithm: String,
        /// Comma-separated list of word lengths (m = n = size).
        #[arg(long, default_value = "256,512,1024", value_delimiter = ',')]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        sigma: u32,
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Debug, Serialize, Deserialize)]
struct WitnessReport {
    subsequence: Vec<u32>,
    into_v: Vec<usize>,
    into_w: Vec<usize>,
}

impl WitnessReport {
    fn new(w: &Witness) -> Self {
        WitnessReport {
            subsequence: w.subsequence.symbols().to_vec(),
            into_v: w.into_v.positions().to_vec(),
            into_w: w.into_w.positions().to_vec(),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct StatsReport {
    deque_inserts: u64,
    deque_removals: u64,
    tree_nodes_touched: u64,
}

#[derive(Debug, Serialize, Deserialize)]
struct Report {
    variant: String,
    m: usize,
    n: usize,
    sigma: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    h: Option<usize>,
    algorithm: String,
    length: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessReport>,
    duration_ns: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    stats: Option<StatsReport>,
}

impl Report {
    fn build(
        original_m: usize,
        original_n: usize,
        inst: &ProblemInstance,
        algorithm: &str,
        res: &SolveResult,
        duration_ns: u128,
        stats: Option<SolveStats>,
    ) -> Self {
        let h = (inst.variant == Variant::O1cSync)
            .then(|| inst.gaps.as_ref().map(|g| g.label().distinct_count()))
            .flatten();
        Report {
            variant: inst.variant.as_str().to_string(),
            m: original_m,
            n: original_n,
            sigma: inst.sigma(),
            h,
            algorithm: algorithm.to_string(),
            length: res.length,
            witness: res.witness.as_ref().map(WitnessReport::new),
            duration_ns,
            stats: stats.map(|s| StatsReport {
                deque_inserts: s.deque_inserts,
                deque_removals: s.deque_removals,
                tree_nodes_touched: s.tree_nodes_touched,
            }),
        }
    }

    fn print(&self, as_json: bool) {
        if as_json {
            println!(
                "{}",
                serde_json::to_string_pretty(self).expect("report serializes")
            );
            return;
        }
        print!(
            "variant: {}  m: {}  n: {}  sigma: {}",
            self.variant, self.m, self.n, self.sigma
        );
        if let Some(h) = self.h {
            print!("  h: {h}");
        }
        println!();
        println!("algorithm: {}", self.algorithm);
        println!("length: {}", self.length);
        if let Some(w) = &self.witness {
            println!(
                "witness: subsequence {:?}, v positions {:?}, w positions {:?}",
                w.subsequence, w.into_v, w.into_w
            );
        }
        println!("time: {} ns", self.duration_ns);
        if let Some(s) = &self.stats {
            println!(
                "stats: deque inserts {}, deque removals {}, tree nodes touched {}",
                s.deque_inserts, s.deque_removals, s.tree_nodes_touched
            );
        }
    }
}

fn fail(e: &Error) -> i32 {
    let obj = serde_json::json!({ "error": { "kind": e.kind(), "message": e.to_string() } });
    eprintln!("{obj}");
    2
}

fn fail_io(context: &str, e: &std::io::Error) -> i32 {
    let obj =
        serde_json::json!({ "error": { "kind": "Io", "message": format!("{context}: {e}") } });
    eprintln!("{obj}");
    2
}

fn set_threads(threads: Option<usize>) {
    if let Some(t) = threads {
        // ignore failure: the global pool can only be set once per process
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global();
    }
}

fn load_instance(path: &PathBuf) -> Result<(usize, usize, ProblemInstance), i32> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return Err(fail_io(&path.display().to_string(), &e)),
    };
    let inst = parse_instance(&text).map_err(|e| fail(&e))?;
    let (m, n) = (inst.v.len(), inst.w.len());
    let inst = inst.validate().map_err(|e| fail(&e))?;
    Ok((m, n, inst))
}

fn cmd_solve(
    input: PathBuf,
    algorithm: String,
    witness: bool,
    json: bool,
    stats: bool,
    threads: Option<usize>,
) -> i32 {
    set_threads(threads);
    let algorithm = match Algorithm::parse(&algorithm) {
        Some(a) => a,
        None => {
            return fail(&Error::UnsupportedAlgorithm {
                algorithm,
                variant: "any".into(),
            })
        }
    };
    let (m, n, inst) = match load_instance(&input) {
        Ok(x) => x,
        Err(code) => return code,
    };
    let start = Instant::now();
    let (res, solve_stats) = match solve_traced(&inst, algorithm, witness) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    let duration_ns = start.elapsed().as_nanos();
    let resolved = lcsgc::resolve_algorithm(&inst, algorithm);
    let report = Report::build(
        m,
        n,
        &inst,
        resolved.as_str(),
        &res,
        duration_ns,
        stats.then_some(solve_stats).flatten(),
    );
    report.print(json);
    0
}

fn cmd_oracle(input: PathBuf, json: bool) -> i32 {
    let cap = std::env::var("LCSGC_ORACLE_CAP")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .unwrap_or(oracle::DEFAULT_CAP);
    let (m, n, inst) = match load_instance(&input) {
        Ok(x) => x,
        Err(code) => return code,
    };
    let start = Instant::now();
    let res = match oracle::oracle_solve(&inst, cap) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    let duration_ns = start.elapsed().as_nanos();
    let res = if inst.swapped() {
        res.swap_words()
    } else {
        res
    };
    let report = Report::build(m, n, &inst, "oracle", &res, duration_ns, None);
    report.print(json);
    0
}

fn rand_word(rng: &mut ChaCha8Rng, len: usize, sigma: u32) -> Word {
    Word::from_symbols((0..len).map(|_| rng.gen_range(1..=sigma.max(1))).collect())
        .expect("letters are positive")
}

fn rand_constraint(rng: &mut ChaCha8Rng, max_bound: u32) -> GapConstraint {
    let l = rng.gen_range(0..=max_bound);
    GapConstraint::new(l, rng.gen_range(l..=max_bound)).expect("ordered bounds")
}

/// Increasing tuple: lower bounds sampled below a pivot and sorted descending,
/// upper bounds above it and sorted ascending, so consecutive intervals nest.
fn increasing_tuple(rng: &mut ChaCha8Rng, len: usize, max_bound: u32) -> GapTuple {
    let pivot = rng.gen_range(0..=max_bound);
    let mut lowers: Vec<u32> = (0..len).map(|_| rng.gen_range(0..=pivot)).collect();
    let mut uppers: Vec<u32> = (0..len).map(|_| rng.gen_range(pivot..=max_bound)).collect();
    lowers.sort_unstable_by(|a, b| b.cmp(a));
    uppers.sort_unstable();
    GapTuple::new(
        lowers
            .into_iter()
            .zip(uppers)
            .map(|(l, u)| GapConstraint::new(l, u).expect("l <= pivot <= u"))
            .collect(),
    )
}

/// Synchronized tuple with a small distinct set: a few nested intervals used
/// in a non-decreasing (by containment) position pattern, which is increasing
/// and therefore synchronized.
fn synchronized_tuple(rng: &mut ChaCha8Rng, len: usize, max_bound: u32) -> GapTuple {
    let distinct = rng.gen_range(1..=3usize);
    let base = increasing_tuple(rng, distinct, max_bound);
    let mut picks: Vec<usize> = (0..len).map(|_| rng.gen_range(0..distinct)).collect();
    picks.sort_unstable();
    let t = GapTuple::new(picks.into_iter().map(|p| base.get(p + 1)).collect());
    assert!(
        t.is_synchronized(),
        "constructed tuple must be synchronized"
    );
    t
}

fn rand_sigma_map(rng: &mut ChaCha8Rng, sigma: u32, max_bound: u32) -> Vec<GapConstraint> {
    (0..sigma)
        .map(|_| rand_constraint(rng, max_bound))
        .collect()
}

fn gen_instance(
    rng: &mut ChaCha8Rng,
    variant: Variant,
    m: usize,
    n: usize,
    sigma: u32,
    max_bound: u32,
    range_bound: Option<u32>,
) -> ProblemInstance {
    let v = rand_word(rng, m, sigma);
    let w = rand_word(rng, n, sigma);
    let gap_len = m.saturating_sub(1);
    let gaps = match variant {
        Variant::Mc => Some(GapTuple::new(
            (0..gap_len)
                .map(|_| rand_constraint(rng, max_bound))
                .collect(),
        )),
        Variant::McInc => {
            let t = increasing_tuple(rng, gap_len, max_bound);
            assert!(t.is_increasing(), "constructed tuple must be increasing");
            Some(t)
        }
        Variant::OneC => Some(GapTuple::constant(rand_constraint(rng, max_bound), 1)),
        Variant::O1cSync => Some(synchronized_tuple(rng, gap_len, max_bound)),
        _ => None,
    };
    let sigma_constraints = variant.needs_sigma().then(|| {
        SigmaConstraints::new(
            rand_sigma_map(rng, sigma, max_bound),
            rand_sigma_map(rng, sigma, max_bound),
        )
        .expect("maps have equal length")
    });
    let b = (variant == Variant::Br)
        .then(|| range_bound.unwrap_or_else(|| rng.gen_range(1..=n.max(1) as u32)));
    ProblemInstance::new(v, w, variant, gaps, sigma_constraints, b)
}

fn cmd_gen(
    seed: u64,
    variant: String,
    m: usize,
    n: usize,
    sigma: u32,
    max_bound: u32,
    range_bound: Option<u32>,
) -> i32 {
    let variant = match Variant::parse(&variant) {
        Some(v) => v,
        None => return fail(&Error::Json(format!("unknown variant {variant:?}"))),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inst = gen_instance(&mut rng, variant, m, n, sigma, max_bound, range_bound);
    println!("{}", instance_to_json(&inst));
    0
}

fn cmd_bench(
    variant: String,
    algorithm: String,
    sizes: Vec<usize>,
    seed: u64,
    sigma: u32,
    threads: Option<usize>,
) -> i32 {
    set_threads(threads);
    let variant = match Variant::parse(&variant) {
        Some(v) => v,
        None => return fail(&Error::Json(format!("unknown variant {variant:?}"))),
    };
    let algorithm = match Algorithm::parse(&algorithm) {
        Some(a) => a,
        None => {
            return fail(&Error::UnsupportedAlgorithm {
                algorithm,
                variant: variant.to_string(),
            })
        }
    };
    println!("variant,algorithm,m,n,param,nanoseconds");
    for size in sizes {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ size as u64);
        // modest bounds keep windows non-trivial at every size
        let max_bound = 8.min(size.saturating_sub(1) as u32);
        let b = Some(16.min(size.max(1)) as u32);
        let inst = gen_instance(&mut rng, variant, size, size, sigma, max_bound, b);
        let inst = match inst.validate() {
            Ok(i) => i,
            Err(e) => return fail(&e),
        };
        let resolved = lcsgc::resolve_algorithm(&inst, algorithm);
        let param = match variant {
            Variant::Br => inst.range_bound.unwrap_or(0) as usize,
            Variant::Sigma | Variant::SigmaL | Variant::SigmaR => inst.sigma() as usize,
            Variant::O1cSync => inst
                .gaps
                .as_ref()
                .map(|g| g.label().distinct_count())
                .unwrap_or(0),
            _ => 0,
        };
        let start = Instant::now();
        let res = match lcsgc::solve(&inst, algorithm, false) {
            Ok(r) => r,
            Err(e) => return fail(&e),
        };
        let ns = start.elapsed().as_nanos();
        // the length is recomputed by consumers; keep the row shape stable
        let _ = res.length;
        println!(
            "{},{},{},{},{},{}",
            variant.as_str(),
            resolved.as_str(),
            size,
            size,
            param,
            ns
        );
    }
    0
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.cmd {
        Cmd::Solve {
            input,
            algorithm,
            witness,
            json,
            stats,
            threads,
        } => cmd_solve(input, algorithm, witness, json, stats, threads),
        Cmd::Oracle { input, json } => cmd_oracle(input, json),
        Cmd::Gen {
            seed,
            variant,
            m,
            n,
            sigma,
            max_bound,
            range_bound,
        } => cmd_gen(seed, variant, m, n, sigma, max_bound, range_bound),
        Cmd::Bench {
            variant,
            algorithm,
            sizes,
            seed,
            sigma,
            threads,
        } => cmd_bench(variant, algorithm, sizes, seed, sigma, threads),
    };
    std::process::exit(code);
}
