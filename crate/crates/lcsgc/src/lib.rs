//! Longest common subsequence under gap-length constraints.
//!
//! Solvers for every variant of the problem: position-indexed gap tuples
//! (general, increasing, single-constraint, synchronized), letter-dependent
//! constraints, and bounded-range subsequences, plus a brute-force oracle
//! for cross-checking and witness verification.

pub mod constraints;
pub mod error;
pub mod instance;
pub mod json;
pub mod oracle;
pub mod solvers;
pub mod structures;
pub mod word;

pub use constraints::{GapConstraint, GapTuple, LabeledTuple, SigmaConstraints};
pub use error::{Error, Result};
pub use instance::{Embedding, ProblemInstance, SolveResult, Variant, Witness};
pub use word::Word;

/// Algorithm selector for [`solve`]; `Auto` picks the best bound for the
/// variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Auto,
    /// Layer-by-layer bit-matrix DP (MC family).
    Layered,
    /// 2D segment tree DP (increasing tuples).
    Segtree,
    /// Sliding-window deque scan (1C, sync, sigma family).
    Deque,
    /// Incremental square RMQ (sigma family).
    Rmq,
    /// All window pairs (bounded range).
    Naive,
    /// Block-decomposed window pairs (bounded range).
    Blocked,
}

impl Algorithm {
    pub fn as_str(&self) -> &'static str {
        match self {
            Algorithm::Auto => "auto",
            Algorithm::Layered => "layered",
            Algorithm::Segtree => "segtree",
            Algorithm::Deque => "deque",
            Algorithm::Rmq => "rmq",
            Algorithm::Naive => "naive",
            Algorithm::Blocked => "blocked",
        }
    }

    pub fn parse(s: &str) -> Option<Algorithm> {
        Some(match s {
            "auto" => Algorithm::Auto,
            "layered" => Algorithm::Layered,
            "segtree" => Algorithm::Segtree,
            "deque" => Algorithm::Deque,
            "rmq" => Algorithm::Rmq,
            "naive" => Algorithm::Naive,
            "blocked" => Algorithm::Blocked,
            _ => return None,
        })
    }
}

/// With `Auto`, the RMQ flavor wins for the sigma variants once the alphabet
/// outgrows `log2 m` (matching the `min(N*sigma, N*log m)` bounds).
fn sigma_auto_flavor(sigma: u32, m: usize) -> solvers::sigma::SigmaFlavor {
    let log_m = usize::BITS - m.max(1).leading_zeros();
    if sigma as u64 > log_m as u64 {
        solvers::sigma::SigmaFlavor::Rmq
    } else {
        solvers::sigma::SigmaFlavor::Deque
    }
}

/// The concrete algorithm `Auto` resolves to for this instance; non-`Auto`
/// selections pass through. `Classic` has a single algorithm and keeps `Auto`.
pub fn resolve_algorithm(inst: &ProblemInstance, algorithm: Algorithm) -> Algorithm {
    if algorithm != Algorithm::Auto {
        return algorithm;
    }
    match inst.variant {
        Variant::Mc => Algorithm::Layered,
        Variant::McInc => Algorithm::Segtree,
        Variant::OneC | Variant::O1cSync => Algorithm::Deque,
        Variant::Sigma | Variant::SigmaL | Variant::SigmaR => {
            match sigma_auto_flavor(inst.sigma(), inst.v.len()) {
                solvers::sigma::SigmaFlavor::Deque => Algorithm::Deque,
                solvers::sigma::SigmaFlavor::Rmq => Algorithm::Rmq,
            }
        }
        Variant::Br => Algorithm::Blocked,
        Variant::Classic => Algorithm::Auto,
    }
}

/// Structure operation counters gathered during a solve, where the chosen
/// algorithm exposes them.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub deque_inserts: u64,
    pub deque_removals: u64,
    pub tree_nodes_touched: u64,
}

impl SolveStats {
    fn from_scan(s: structures::ScanStats) -> Self {
        SolveStats {
            deque_inserts: s.inserts(),
            deque_removals: s.removals(),
            tree_nodes_touched: 0,
        }
    }
}

/// Dispatches a validated instance to the solver selected by `algorithm`.
/// Witnesses are produced where supported (classic LCS and the layered MC
/// solver) when `want_witness` is set.
pub fn solve(
    inst: &ProblemInstance,
    algorithm: Algorithm,
    want_witness: bool,
) -> Result<SolveResult> {
    Ok(solve_traced(inst, algorithm, want_witness)?.0)
}

/// As [`solve`], additionally returning operation counters for the algorithms
/// that count them (deque scans and the segment tree).
pub fn solve_traced(
    inst: &ProblemInstance,
    algorithm: Algorithm,
    want_witness: bool,
) -> Result<(SolveResult, Option<SolveStats>)> {
    use solvers::sigma::SigmaFlavor;
    use Algorithm as A;

    let unsupported = || Error::UnsupportedAlgorithm {
        algorithm: algorithm.as_str().into(),
        variant: inst.variant.to_string(),
    };
    let gaps = || {
        inst.gaps.as_ref().ok_or_else(|| Error::MissingField {
            variant: inst.variant.to_string(),
            field: "gaps".into(),
        })
    };
    let sigma_c = || {
        inst.sigma_constraints
            .as_ref()
            .ok_or_else(|| Error::MissingField {
                variant: inst.variant.to_string(),
                field: "sigma_constraints".into(),
            })
    };
    let flavor = |alg: Algorithm| match alg {
        A::Deque => Ok(SigmaFlavor::Deque),
        A::Rmq => Ok(SigmaFlavor::Rmq),
        A::Auto => Ok(sigma_auto_flavor(inst.sigma(), inst.v.len())),
        _ => Err(unsupported()),
    };

    let (res, stats) = match inst.variant {
        Variant::Classic => match algorithm {
            A::Auto => (
                solvers::br::lcs_classic(&inst.v, &inst.w, want_witness),
                None,
            ),
            _ => return Err(unsupported()),
        },
        Variant::Mc => match algorithm {
            A::Auto | A::Layered => (
                solvers::mc::lcs_mc(&inst.v, &inst.w, gaps()?, want_witness)?,
                None,
            ),
            _ => return Err(unsupported()),
        },
        Variant::McInc => match algorithm {
            A::Auto | A::Segtree => {
                let (res, nodes) = solvers::mc::lcs_mc_inc_stats(&inst.v, &inst.w, gaps()?)?;
                let stats = SolveStats {
                    tree_nodes_touched: nodes,
                    ..SolveStats::default()
                };
                (res, Some(stats))
            }
            A::Layered => (
                solvers::mc::lcs_mc(&inst.v, &inst.w, gaps()?, want_witness)?,
                None,
            ),
            _ => return Err(unsupported()),
        },
        Variant::OneC => match algorithm {
            A::Auto | A::Deque => {
                let g = gaps()?;
                let c = if g.is_empty() {
                    GapConstraint::trivial(inst.w.len() as u32)
                } else {
                    g.get(1)
                };
                let (res, scan) = solvers::constant::lcs_1c_stats(&inst.v, &inst.w, c);
                (res, Some(SolveStats::from_scan(scan)))
            }
            _ => return Err(unsupported()),
        },
        Variant::O1cSync => match algorithm {
            A::Auto | A::Deque => {
                let (res, scan) = solvers::constant::lcs_o1c_sync_stats(&inst.v, &inst.w, gaps()?)?;
                (res, Some(SolveStats::from_scan(scan)))
            }
            _ => return Err(unsupported()),
        },
        Variant::SigmaR => {
            let (res, scan) = solvers::sigma::lcs_sigma_r_stats(
                &inst.v,
                &inst.w,
                sigma_c()?.right_map(),
                flavor(algorithm)?,
            );
            (res, scan.map(SolveStats::from_scan))
        }
        Variant::SigmaL => {
            let (res, scan) = solvers::sigma::lcs_sigma_l_stats(
                &inst.v,
                &inst.w,
                sigma_c()?.left_map(),
                flavor(algorithm)?,
            );
            (res, scan.map(SolveStats::from_scan))
        }
        Variant::Sigma => {
            let (res, scan) =
                solvers::sigma::lcs_sigma_stats(&inst.v, &inst.w, sigma_c()?, flavor(algorithm)?);
            (res, scan.map(SolveStats::from_scan))
        }
        Variant::Br => {
            let b = inst.range_bound.ok_or_else(|| Error::MissingField {
                variant: inst.variant.to_string(),
                field: "B".into(),
            })?;
            let strategy = match algorithm {
                A::Auto | A::Blocked => solvers::br::BrStrategy::Blocked,
                A::Naive => solvers::br::BrStrategy::Naive,
                _ => return Err(unsupported()),
            };
            (
                solvers::br::lcs_br_exact(&inst.v, &inst.w, b, strategy)?,
                None,
            )
        }
    };
    let res = if inst.swapped() {
        res.swap_words()
    } else {
        res
    };
    Ok((res, stats))
}
