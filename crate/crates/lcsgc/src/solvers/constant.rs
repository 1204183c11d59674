//! Solvers for constant-style tuples: a single constraint on every gap (O(N))
//! and synchronized tuples with few distinct constraints (O(Nh)).

use crate::constraints::{GapConstraint, GapTuple};
use crate::error::{Error, Result};
use crate::instance::SolveResult;
use crate::structures::{Grid, ScanStats, Window, WindowScanner, WindowedMaxGrid};
use crate::word::Word;

/// Single-constraint LCS: one sliding-window scan, length only.
pub fn lcs_1c(v: &Word, w: &Word, c: GapConstraint) -> SolveResult {
    lcs_1c_stats(v, w, c).0
}

/// As [`lcs_1c`], also reporting the scan's deque operation counters.
pub fn lcs_1c_stats(v: &Word, w: &Word, c: GapConstraint) -> (SolveResult, ScanStats) {
    let window = Window::for_gap(c.lower(), c.upper());
    let (grid, stats) = WindowedMaxGrid::new(v.len(), w.len(), window)
        .run_scan_with_stats(|i, j| v.get(i) == w.get(j), |_, _, wmax| wmax + 1);
    (SolveResult::length_only(grid.max_value() as usize), stats)
}

/// Synchronized-tuple LCS. One grid and scanner per distinct constraint; the
/// grid for label `r` holds, per cell, the longest subsequence ending there
/// whose next gap carries constraint `r`. Length only, O(Nh).
pub fn lcs_o1c_sync(v: &Word, w: &Word, gaps: &GapTuple) -> Result<SolveResult> {
    Ok(lcs_o1c_sync_stats(v, w, gaps)?.0)
}

/// As [`lcs_o1c_sync`], also reporting the summed deque operation counters of
/// the h scanners.
pub fn lcs_o1c_sync_stats(v: &Word, w: &Word, gaps: &GapTuple) -> Result<(SolveResult, ScanStats)> {
    let (m, n) = (v.len(), w.len());
    let expected = m.saturating_sub(1);
    if gaps.len() != expected {
        return Err(Error::BadTupleLength {
            got: gaps.len(),
            expected,
        });
    }
    if !gaps.is_synchronized() {
        return Err(Error::NotSynchronized);
    }
    if m == 0 || n == 0 {
        return Ok((SolveResult::length_only(0), ScanStats::default()));
    }

    let lt = gaps.label();
    let h = lt.distinct_count();
    let t = gaps.len();
    let mut grids: Vec<Grid> = (0..h).map(|_| Grid::new(m, n)).collect();
    let mut scanners: Vec<WindowScanner> = lt
        .distinct()
        .iter()
        .map(|c| WindowScanner::new(n, Window::for_gap(c.lower(), c.upper())))
        .collect();

    let mut best = 0u32;
    let mut bucket: Vec<Option<u32>> = vec![None; h];
    for i in 1..=m {
        for (s, g) in scanners.iter_mut().zip(&grids) {
            s.begin_row(i, g);
        }
        for j in 1..=n {
            for s in scanners.iter_mut() {
                s.advance_col(j);
            }
            if v.get(i) != w.get(j) {
                continue;
            }
            // candidates: extend the best entry of each label's window, or
            // start fresh (window max 0); bucket each by its next gap's label
            bucket.iter_mut().for_each(|b| *b = None);
            let mut top = 0u32;
            for s in scanners.iter() {
                let mx = s.window_max();
                top = top.max(mx);
                if (mx as usize) < t {
                    let r = lt.label_of(mx as usize + 1) - 1;
                    bucket[r] = Some(bucket[r].map_or(mx, |b| b.max(mx)));
                }
            }
            // the longest candidate needs no successor gap; it only competes
            // for the answer
            best = best.max(top + 1);
            for (r, g) in grids.iter_mut().enumerate() {
                if let Some(mx) = bucket[r] {
                    g.set(i, j, mx + 1);
                }
            }
        }
    }
    let mut stats = ScanStats::default();
    for s in &scanners {
        stats.merge(s.stats());
    }
    Ok((SolveResult::length_only(best as usize), stats))
}
