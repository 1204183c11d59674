//! Amortized-linear sliding-window maxima over a grid filled in row-major
//! order, the workhorse behind the linear-time solvers.

use std::collections::VecDeque;

use super::grid::Grid;
use crate::error::{Error, Result};

/// Fixed window offsets: at cell `(i,j)` the queried submatrix is
/// `[i-row_upper : i-row_lower] x [j-col_upper : j-col_lower]`, intersected
/// with the grid. All four offsets must be positive so the window never
/// touches the cell's own row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    pub row_lower: u32,
    pub row_upper: u32,
    pub col_lower: u32,
    pub col_upper: u32,
}

impl Window {
    pub fn new(row_lower: u32, row_upper: u32, col_lower: u32, col_upper: u32) -> Result<Self> {
        if row_lower == 0 || col_lower == 0 || row_lower > row_upper || col_lower > col_upper {
            return Err(Error::BadConstraint {
                lower: row_lower,
                upper: row_upper,
            });
        }
        Ok(Window {
            row_lower,
            row_upper,
            col_lower,
            col_upper,
        })
    }

    /// Square window for a gap constraint `(l, u)`: offsets `(l+1, u+1)` on
    /// both axes.
    pub fn for_gap(lower: u32, upper: u32) -> Self {
        Window {
            row_lower: lower + 1,
            row_upper: upper + 1,
            col_lower: lower + 1,
            col_upper: upper + 1,
        }
    }
}

/// Operation counters for the amortized-cost accounting.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ScanStats {
    pub row_inserts: u64,
    pub row_removals: u64,
    pub col_inserts: u64,
    pub col_removals: u64,
}

impl ScanStats {
    pub fn merge(&mut self, other: ScanStats) {
        self.row_inserts += other.row_inserts;
        self.row_removals += other.row_removals;
        self.col_inserts += other.col_inserts;
        self.col_removals += other.col_removals;
    }

    pub fn inserts(&self) -> u64 {
        self.row_inserts + self.col_inserts
    }

    pub fn removals(&self) -> u64 {
        self.row_removals + self.col_removals
    }
}

/// Maintains, for a grid being filled row-major, the maximum over a fixed
/// rectangular window behind the current cell.
///
/// One monotone deque per column tracks the row window `[i-u1 : i-l1]`; the
/// per-row maxima feed a second monotone deque sweeping the column window
/// `[j-u2 : j-l2]`. Each cell enters and leaves each deque at most once, so a
/// whole scan costs O(mn).
#[derive(Debug)]
pub struct WindowScanner {
    window: Window,
    n: usize,
    /// Per-column deques of (row, value), values strictly decreasing.
    col_deques: Vec<VecDeque<(usize, u32)>>,
    /// Max over the current row window, per column; 0 when empty.
    row_max: Vec<u32>,
    /// Sweep deque of (column, row_max value) for the current row.
    sweep: VecDeque<(usize, u32)>,
    stats: ScanStats,
}

impl WindowScanner {
    pub fn new(n: usize, window: Window) -> Self {
        WindowScanner {
            window,
            n,
            col_deques: vec![VecDeque::new(); n],
            row_max: vec![0; n],
            sweep: VecDeque::new(),
            stats: ScanStats::default(),
        }
    }

    pub fn stats(&self) -> ScanStats {
        self.stats
    }

    /// Row setup: slide every column's row window to `[i-u1 : i-l1]`, reading
    /// the entering row from `grid`, and reset the column sweep. Must be
    /// called for `i = 1..=m` in order, before any `advance_col` of row `i`.
    pub fn begin_row(&mut self, i: usize, grid: &Grid) {
        let w = &self.window;
        let entering = i as i64 - w.row_lower as i64;
        let low = i as i64 - w.row_upper as i64;
        for f in 1..=self.n {
            let q = &mut self.col_deques[f - 1];
            while q.front().is_some_and(|&(r, _)| (r as i64) < low) {
                q.pop_front();
                self.stats.row_removals += 1;
            }
            if entering >= 1 {
                let x = grid.get(entering as usize, f);
                while q.back().is_some_and(|&(_, v)| v <= x) {
                    q.pop_back();
                    self.stats.row_removals += 1;
                }
                q.push_back((entering as usize, x));
                self.stats.row_inserts += 1;
            }
            self.row_max[f - 1] = q.front().map_or(0, |&(_, v)| v);
        }
        self.sweep.clear();
    }

    /// Column step: slide the sweep window to `[j-u2 : j-l2]`. Must be called
    /// for `j = 1..=n` in order within the current row.
    pub fn advance_col(&mut self, j: usize) {
        let w = &self.window;
        let entering = j as i64 - w.col_lower as i64;
        let low = j as i64 - w.col_upper as i64;
        while self.sweep.front().is_some_and(|&(c, _)| (c as i64) < low) {
            self.sweep.pop_front();
            self.stats.col_removals += 1;
        }
        if entering >= 1 {
            let x = self.row_max[entering as usize - 1];
            while self.sweep.back().is_some_and(|&(_, v)| v <= x) {
                self.sweep.pop_back();
                self.stats.col_removals += 1;
            }
            self.sweep.push_back((entering as usize, x));
            self.stats.col_inserts += 1;
        }
    }

    /// Maximum of the window behind the cell last passed to `advance_col`;
    /// 0 when the window misses the grid entirely.
    pub fn window_max(&self) -> u32 {
        self.sweep.front().map_or(0, |&(_, v)| v)
    }
}

/// A grid paired with one scanner; runs the row-major scan loop: at each cell,
/// fetch the window max `wmax` and, where `predicate` holds, store
/// `score(i, j, wmax)`.
pub struct WindowedMaxGrid {
    grid: Grid,
    scanner: WindowScanner,
}

impl WindowedMaxGrid {
    pub fn new(m: usize, n: usize, window: Window) -> Self {
        WindowedMaxGrid {
            grid: Grid::new(m, n),
            scanner: WindowScanner::new(n, window),
        }
    }

    pub fn stats(&self) -> ScanStats {
        self.scanner.stats()
    }

    pub fn run_scan(
        self,
        predicate: impl FnMut(usize, usize) -> bool,
        score: impl FnMut(usize, usize, u32) -> u32,
    ) -> Grid {
        self.run_scan_with_stats(predicate, score).0
    }

    pub fn run_scan_with_stats(
        mut self,
        mut predicate: impl FnMut(usize, usize) -> bool,
        mut score: impl FnMut(usize, usize, u32) -> u32,
    ) -> (Grid, ScanStats) {
        for i in 1..=self.grid.rows() {
            self.scanner.begin_row(i, &self.grid);
            for j in 1..=self.grid.cols() {
                self.scanner.advance_col(j);
                if predicate(i, j) {
                    let wmax = self.scanner.window_max();
                    self.grid.set(i, j, score(i, j, wmax));
                }
            }
        }
        (self.grid, self.scanner.stats())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn scan(
        m: usize,
        n: usize,
        window: Window,
        predicate: impl FnMut(usize, usize) -> bool,
        score: impl FnMut(usize, usize, u32) -> u32,
    ) -> Grid {
        WindowedMaxGrid::new(m, n, window).run_scan(predicate, score)
    }

    /// Rescan the full window per cell.
    fn naive_scan(
        m: usize,
        n: usize,
        w: Window,
        mut predicate: impl FnMut(usize, usize) -> bool,
        mut score: impl FnMut(usize, usize, u32) -> u32,
    ) -> Grid {
        let mut g = Grid::new(m, n);
        for i in 1..=m {
            for j in 1..=n {
                if predicate(i, j) {
                    let wmax = g.naive_window_max(
                        i as i64 - w.row_upper as i64,
                        i as i64 - w.row_lower as i64,
                        j as i64 - w.col_upper as i64,
                        j as i64 - w.col_lower as i64,
                    );
                    g.set(i, j, score(i, j, wmax));
                }
            }
        }
        g
    }

    #[test]
    fn two_by_two_unit_window() {
        let g = scan(
            2,
            2,
            Window::new(1, 1, 1, 1).unwrap(),
            |_, _| true,
            |_, _, m| m + 1,
        );
        assert_eq!((g.get(1, 1), g.get(1, 2)), (1, 1));
        assert_eq!((g.get(2, 1), g.get(2, 2)), (1, 2));
    }

    #[test]
    fn false_predicate_leaves_zero_grid() {
        let g = scan(
            4,
            5,
            Window::new(1, 2, 1, 2).unwrap(),
            |_, _| false,
            |_, _, m| m + 1,
        );
        assert_eq!(g.max_value(), 0);
    }

    #[test]
    fn always_empty_window_scores_zero_base() {
        let m = 3;
        let w = Window::new(m as u32 + 1, m as u32 + 1, 1, 1).unwrap();
        let g = scan(m, 3, w, |_, _| true, |_, _, wm| wm + 7);
        for i in 1..=m {
            for j in 1..=3 {
                assert_eq!(g.get(i, j), 7);
            }
        }
    }

    #[test]
    fn matches_naive_on_random_instances() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..500 {
            let m = rng.gen_range(1..=30);
            let n = rng.gen_range(1..=30);
            let l1 = rng.gen_range(1..=6);
            let l2 = rng.gen_range(1..=6);
            let w =
                Window::new(l1, l1 + rng.gen_range(0..6), l2, l2 + rng.gen_range(0..6)).unwrap();
            let mask: Vec<bool> = (0..m * n).map(|_| rng.gen_bool(0.5)).collect();
            let pred = |i: usize, j: usize| mask[(i - 1) * n + (j - 1)];
            let fast = scan(m, n, w, pred, |i, j, wm| wm + 1 + ((i + j) % 3) as u32);
            let slow = naive_scan(m, n, w, pred, |i, j, wm| wm + 1 + ((i + j) % 3) as u32);
            assert_eq!(fast, slow);
        }
    }

    #[test]
    fn deque_traffic_is_linear() {
        let m = 40;
        let n = 37;
        let mut wg = WindowedMaxGrid::new(m, n, Window::new(2, 9, 1, 5).unwrap());
        let cells = (m * n) as u64;
        let grid = std::mem::replace(&mut wg.grid, Grid::new(0, 0));
        let mut scanner = wg.scanner;
        let mut grid = grid;
        for i in 1..=m {
            scanner.begin_row(i, &grid);
            for j in 1..=n {
                scanner.advance_col(j);
                let wm = scanner.window_max();
                grid.set(i, j, wm + 1);
            }
        }
        let s = scanner.stats();
        assert!(s.row_inserts <= cells);
        assert!(s.row_removals <= s.row_inserts);
        assert!(s.col_inserts <= cells);
        assert!(s.col_removals <= s.col_inserts);
    }
}
