//! Letter-dependent gap-constraint solvers, each in a deque flavor (linear in
//! the alphabet) and an RMQ flavor (logarithmic in the word length).

use crate::constraints::{GapConstraint, SigmaConstraints};
use crate::instance::SolveResult;
use crate::structures::{Grid, ScanStats, SquareRmq, Window, WindowScanner};
use crate::word::Word;

/// Which machinery backs the window maxima.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SigmaFlavor {
    /// Per-letter sliding-window deque scans, O(N*sigma) / O(N*sigma^2).
    Deque,
    /// Incremental square RMQ, O(N log m) / O(N*sigma*log m).
    Rmq,
}

fn alphabet_size(v: &Word, w: &Word) -> usize {
    v.max_symbol().max(w.max_symbol()) as usize
}

/// Gap constraint preceding each letter. `right` must be total on the
/// alphabet of both words.
pub fn lcs_sigma_r(
    v: &Word,
    w: &Word,
    right: &[GapConstraint],
    flavor: SigmaFlavor,
) -> SolveResult {
    lcs_sigma_r_stats(v, w, right, flavor).0
}

/// As [`lcs_sigma_r`]; the deque flavor also reports its summed deque
/// operation counters.
pub fn lcs_sigma_r_stats(
    v: &Word,
    w: &Word,
    right: &[GapConstraint],
    flavor: SigmaFlavor,
) -> (SolveResult, Option<ScanStats>) {
    let (m, n) = (v.len(), w.len());
    if m == 0 || n == 0 {
        return (SolveResult::length_only(0), None);
    }
    match flavor {
        SigmaFlavor::Deque => {
            let (res, stats) = sigma_r_deque(v, w, right, m, n);
            (res, Some(stats))
        }
        SigmaFlavor::Rmq => (sigma_r_rmq(v, w, right, m, n), None),
    }
}

fn sigma_r_deque(
    v: &Word,
    w: &Word,
    right: &[GapConstraint],
    m: usize,
    n: usize,
) -> (SolveResult, ScanStats) {
    let sigma = alphabet_size(v, w);
    let mut grid = Grid::new(m, n);
    let mut scanners: Vec<WindowScanner> = (0..sigma)
        .map(|a| WindowScanner::new(n, Window::for_gap(right[a].lower(), right[a].upper())))
        .collect();
    let mut best = 0u32;
    for i in 1..=m {
        for s in scanners.iter_mut() {
            s.begin_row(i, &grid);
        }
        for j in 1..=n {
            for s in scanners.iter_mut() {
                s.advance_col(j);
            }
            if v.get(i) == w.get(j) {
                let a = v.get(i) as usize - 1;
                let val = scanners[a].window_max() + 1;
                grid.set(i, j, val);
                best = best.max(val);
            }
        }
    }
    let mut stats = ScanStats::default();
    for s in &scanners {
        stats.merge(s.stats());
    }
    (SolveResult::length_only(best as usize), stats)
}

fn sigma_r_rmq(v: &Word, w: &Word, right: &[GapConstraint], m: usize, n: usize) -> SolveResult {
    let mut rmq = SquareRmq::new(m, n);
    let mut best = 0u32;
    for i in 1..=m {
        for j in 1..=n {
            let val = if v.get(i) == w.get(j) {
                let c = right[v.get(i) as usize - 1];
                let (l, u) = (c.lower() as i64, c.upper() as i64);
                let (i, j) = (i as i64, j as i64);
                // an empty window (matches on the first row/column included)
                // yields 0 here, hence value 1
                1 + rmq
                    .query_square(i - u - 1, i - l - 1, j - u - 1, j - l - 1)
                    .expect("gap windows are square")
            } else {
                0
            };
            rmq.insert(i, j, val);
            best = best.max(val);
        }
    }
    SolveResult::length_only(best as usize)
}

/// Gap constraint following each letter; solved on the reversed words, where
/// it becomes a preceding-letter problem.
pub fn lcs_sigma_l(v: &Word, w: &Word, left: &[GapConstraint], flavor: SigmaFlavor) -> SolveResult {
    lcs_sigma_l_stats(v, w, left, flavor).0
}

/// As [`lcs_sigma_l`], with the deque flavor's operation counters.
pub fn lcs_sigma_l_stats(
    v: &Word,
    w: &Word,
    left: &[GapConstraint],
    flavor: SigmaFlavor,
) -> (SolveResult, Option<ScanStats>) {
    lcs_sigma_r_stats(&v.reversed(), &w.reversed(), left, flavor)
}

/// Constraints from both sides of every gap: the gap between consecutive
/// letters `b`, `a` must satisfy `left(b)` and `right(a)`.
pub fn lcs_sigma(v: &Word, w: &Word, sc: &SigmaConstraints, flavor: SigmaFlavor) -> SolveResult {
    lcs_sigma_stats(v, w, sc, flavor).0
}

/// As [`lcs_sigma`], with the deque flavor's operation counters.
pub fn lcs_sigma_stats(
    v: &Word,
    w: &Word,
    sc: &SigmaConstraints,
    flavor: SigmaFlavor,
) -> (SolveResult, Option<ScanStats>) {
    let (m, n) = (v.len(), w.len());
    if m == 0 || n == 0 {
        return (SolveResult::length_only(0), None);
    }
    match flavor {
        SigmaFlavor::Deque => {
            let (res, stats) = sigma_deque(v, w, sc, m, n);
            (res, Some(stats))
        }
        SigmaFlavor::Rmq => (sigma_rmq(v, w, sc, m, n), None),
    }
}

fn sigma_deque(
    v: &Word,
    w: &Word,
    sc: &SigmaConstraints,
    m: usize,
    n: usize,
) -> (SolveResult, ScanStats) {
    let sigma = alphabet_size(v, w);
    let mut grids: Vec<Grid> = (0..sigma).map(|_| Grid::new(m, n)).collect();
    // scanner (a, b) watches grid b through the combined window for a
    // following b; infeasible combinations get no scanner
    let mut scanners: Vec<Option<WindowScanner>> = (0..sigma * sigma)
        .map(|idx| {
            let (a, b) = (idx / sigma + 1, idx % sigma + 1);
            sc.right(a as u32)
                .intersect(&sc.left(b as u32))
                .map(|c| WindowScanner::new(n, Window::for_gap(c.lower(), c.upper())))
        })
        .collect();
    let mut best = 0u32;
    for i in 1..=m {
        for (idx, s) in scanners.iter_mut().enumerate() {
            if let Some(s) = s {
                s.begin_row(i, &grids[idx % sigma]);
            }
        }
        for j in 1..=n {
            for s in scanners.iter_mut().flatten() {
                s.advance_col(j);
            }
            if v.get(i) != w.get(j) {
                continue;
            }
            let a = v.get(i) as usize - 1;
            let prev = scanners[a * sigma..(a + 1) * sigma]
                .iter()
                .flatten()
                .map(|s| s.window_max())
                .max()
                .unwrap_or(0);
            let val = prev + 1;
            grids[a].set(i, j, val);
            best = best.max(val);
        }
    }
    let mut stats = ScanStats::default();
    for s in scanners.iter().flatten() {
        stats.merge(s.stats());
    }
    (SolveResult::length_only(best as usize), stats)
}

fn sigma_rmq(v: &Word, w: &Word, sc: &SigmaConstraints, m: usize, n: usize) -> SolveResult {
    let sigma = alphabet_size(v, w);
    let mut rmqs: Vec<SquareRmq> = (0..sigma).map(|_| SquareRmq::new(m, n)).collect();
    let mut best = 0u32;
    for i in 1..=m {
        for j in 1..=n {
            let matched = v.get(i) == w.get(j);
            let mut val = 0u32;
            if matched {
                let a = v.get(i);
                let mut prev = 0u32;
                for b in 1..=sigma as u32 {
                    if let Some(c) = sc.right(a).intersect(&sc.left(b)) {
                        let (l, u) = (c.lower() as i64, c.upper() as i64);
                        let (qi, qj) = (i as i64, j as i64);
                        prev = prev.max(
                            rmqs[b as usize - 1]
                                .query_square(qi - u - 1, qi - l - 1, qj - u - 1, qj - l - 1)
                                .expect("gap windows are square"),
                        );
                    }
                }
                val = prev + 1;
                best = best.max(val);
            }
            // every structure gets a row-major insert; only the matched
            // letter's gets the value
            for (b, r) in rmqs.iter_mut().enumerate() {
                let x = if matched && v.get(i) == b as u32 + 1 {
                    val
                } else {
                    0
                };
                r.insert(i, j, x);
            }
        }
    }
    SolveResult::length_only(best as usize)
}
