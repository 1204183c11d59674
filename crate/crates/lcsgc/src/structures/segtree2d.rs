//! Two-dimensional segment tree over an implicit all-zero matrix, supporting
//! rectangle "max-assign" updates and point queries.

use std::cell::Cell;

use crate::error::{Error, Result};

/// Outer tree over columns `[1..n]`; every outer node carries an inner tree
/// over rows `[1..m]` whose nodes store the best value pushed onto them.
///
/// `update` writes `x` into the O(log n * log m) canonical nodes covering the
/// rectangle; `query(i, j)` maxes the values on the inner root paths of every
/// outer node containing column `j`.
#[derive(Debug)]
pub struct SegmentTree2d {
    m: usize,
    n: usize,
    outer_size: usize,
    inner_size: usize,
    /// val[outer_node * 2*inner_size + inner_node]
    val: Vec<u32>,
    /// Nodes read or written, for the CLI's structure statistics.
    nodes_touched: Cell<u64>,
}

impl SegmentTree2d {
    pub fn new(m: usize, n: usize) -> Self {
        let outer_size = n.max(1).next_power_of_two();
        let inner_size = m.max(1).next_power_of_two();
        SegmentTree2d {
            m,
            n,
            outer_size,
            inner_size,
            val: vec![0; 2 * outer_size * 2 * inner_size],
            nodes_touched: Cell::new(0),
        }
    }

    pub fn nodes_touched(&self) -> u64 {
        self.nodes_touched.get()
    }

    #[inline]
    fn touch(&self) {
        self.nodes_touched.set(self.nodes_touched.get() + 1);
    }

    /// Logical `M[i,j] := max(M[i,j], x)` over the rectangle
    /// `[i1:i2] x [j1:j2]`. Coordinates may run off the grid (the rectangle is
    /// clipped); a fully out-of-range rectangle is a no-op.
    pub fn update(&mut self, i1: i64, i2: i64, j1: i64, j2: i64, x: u32) {
        let i1 = i1.max(1);
        let j1 = j1.max(1);
        let i2 = i2.min(self.m as i64);
        let j2 = j2.min(self.n as i64);
        if i1 > i2 || j1 > j2 || self.m == 0 || self.n == 0 {
            return;
        }
        let (i1, i2) = (i1 as usize, i2 as usize);
        // canonical outer decomposition of [j1:j2], iterative bottom-up
        let mut lo = j1 as usize - 1 + self.outer_size;
        let mut hi = j2 as usize - 1 + self.outer_size;
        loop {
            if lo & 1 == 1 {
                self.update_inner(lo, i1, i2, x);
                lo += 1;
            }
            if hi & 1 == 0 {
                self.update_inner(hi, i1, i2, x);
                if hi == 0 {
                    break;
                }
                hi -= 1;
            }
            if lo > hi {
                break;
            }
            lo >>= 1;
            hi >>= 1;
        }
    }

    fn update_inner(&mut self, outer: usize, i1: usize, i2: usize, x: u32) {
        let base = outer * 2 * self.inner_size;
        let mut lo = i1 - 1 + self.inner_size;
        let mut hi = i2 - 1 + self.inner_size;
        loop {
            if lo & 1 == 1 {
                self.touch();
                let cell = &mut self.val[base + lo];
                *cell = (*cell).max(x);
                lo += 1;
            }
            if hi & 1 == 0 {
                self.touch();
                let cell = &mut self.val[base + hi];
                *cell = (*cell).max(x);
                hi -= 1;
            }
            if lo > hi {
                break;
            }
            lo >>= 1;
            hi >>= 1;
        }
    }

    /// Current logical value of `M[i,j]`: the max of 0 and every update whose
    /// rectangle covers the cell.
    pub fn query(&self, i: usize, j: usize) -> Result<u32> {
        if i == 0 || j == 0 || i > self.m || j > self.n {
            return Err(Error::OutOfRange {
                i,
                j,
                m: self.m,
                n: self.n,
            });
        }
        let mut best = 0;
        let mut outer = j - 1 + self.outer_size;
        while outer >= 1 {
            let base = outer * 2 * self.inner_size;
            let mut inner = i - 1 + self.inner_size;
            while inner >= 1 {
                self.touch();
                best = best.max(self.val[base + inner]);
                inner >>= 1;
            }
            outer >>= 1;
        }
        Ok(best)
    }
}
