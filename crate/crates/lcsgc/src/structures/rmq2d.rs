//! Incremental square range-maximum structure: a 2D sparse table filled in
//! row-major order, answering square submatrix maxima in O(1).

use crate::error::{Error, Result};

/// Table `rmq[i][j][q]` = max of the `2^q x 2^q` square with bottom-right
/// corner `(i, j)`; entries with `i <= 0` or `j <= 0` read as 0. Cells must
/// be inserted in row-major order; each insert refreshes all `q` levels of
/// its cell in O(log m).
#[derive(Debug)]
pub struct SquareRmq {
    m: usize,
    n: usize,
    levels: usize,
    table: Vec<u32>,
    /// log-lookup: floor(log2(h)) for side lengths
    log2: Vec<usize>,
    next: (usize, usize),
}

impl SquareRmq {
    pub fn new(m: usize, n: usize) -> Self {
        // query sides are capped at max(m, n), so that bounds the levels
        let s = m.max(n).max(1);
        let levels = if s <= 1 {
            1
        } else {
            // 1 + ceil(log2 s)
            1 + (usize::BITS - (s - 1).leading_zeros()) as usize
        };
        let side_cap = s;
        let mut log2 = vec![0; side_cap + 1];
        for h in 2..=side_cap {
            log2[h] = log2[h / 2] + 1;
        }
        SquareRmq {
            m,
            n,
            levels,
            table: vec![0; m * n * levels],
            log2,
            next: (1, 1),
        }
    }

    #[inline]
    fn at(&self, i: i64, j: i64, q: usize) -> u32 {
        if i < 1 || j < 1 {
            return 0;
        }
        debug_assert!(i as usize <= self.m && j as usize <= self.n);
        self.table[((i as usize - 1) * self.n + (j as usize - 1)) * self.levels + q]
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, q: usize, x: u32) {
        self.table[((i - 1) * self.n + (j - 1)) * self.levels + q] = x;
    }

    /// Inserts the next cell in row-major order and refreshes its sparse
    /// table column: level `q` is the max of the four level `q-1` squares
    /// tiling it.
    pub fn insert(&mut self, i: usize, j: usize, x: u32) {
        assert_eq!(
            (i, j),
            self.next,
            "SquareRmq cells must be inserted in row-major order"
        );
        self.next = if j == self.n { (i + 1, 1) } else { (i, j + 1) };
        self.set(i, j, 0, x);
        for q in 1..self.levels {
            let d = 1i64 << (q - 1);
            let (i, j) = (i as i64, j as i64);
            let best = self
                .at(i - d, j - d, q - 1)
                .max(self.at(i, j - d, q - 1))
                .max(self.at(i - d, j, q - 1))
                .max(self.at(i, j, q - 1));
            self.set(i as usize, j as usize, q, best);
        }
    }

    /// Max over the square region `[i1:i2] x [j1:j2]` (so `i2-i1 = j2-j1`)
    /// via four overlapping power-of-two squares. Coordinates at or below 0
    /// address the zero padding; the region's cells inside the grid must all
    /// be inserted already.
    pub fn query_square(&self, i1: i64, i2: i64, j1: i64, j2: i64) -> Result<u32> {
        if i2 - i1 != j2 - j1 || i2 < i1 {
            return Err(Error::NonSquareQuery {
                rows: (i2 - i1 + 1).max(0) as usize,
                cols: (j2 - j1 + 1).max(0) as usize,
            });
        }
        if i2 < 1 || j2 < 1 {
            return Ok(0);
        }
        // A side larger than both end coordinates can be shrunk to
        // max(i2, j2): the dropped rows and columns are all zero padding.
        let side = ((i2 - i1 + 1).min(i2.max(j2))) as usize;
        let i1 = i2 - side as i64 + 1;
        let j1 = j2 - side as i64 + 1;
        let q = self.log2[side];
        let d = 1i64 << q;
        Ok(self
            .at(i1 + d - 1, j1 + d - 1, q)
            .max(self.at(i1 + d - 1, j2, q))
            .max(self.at(i2, j1 + d - 1, q))
            .max(self.at(i2, j2, q)))
    }
}
