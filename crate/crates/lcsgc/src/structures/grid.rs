/// Dense `m x n` matrix of non-negative scores, 1-based accessors, all cells
/// initially 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    m: usize,
    n: usize,
    data: Vec<u32>,
}

impl Grid {
    pub fn new(m: usize, n: usize) -> Self {
        Grid {
            m,
            n,
            data: vec![0; m * n],
        }
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[(i - 1) * self.n + (j - 1)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: u32) {
        self.data[(i - 1) * self.n + (j - 1)] = x;
    }

    pub fn max_value(&self) -> u32 {
        self.data.iter().copied().max().unwrap_or(0)
    }

    /// Brute-force max over the clipped rectangle; test oracle and shadow.
    pub fn naive_window_max(&self, i1: i64, i2: i64, j1: i64, j2: i64) -> u32 {
        let mut best = 0;
        let i1 = i1.max(1) as usize;
        let j1 = j1.max(1) as usize;
        let i2 = i2.min(self.m as i64);
        let j2 = j2.min(self.n as i64);
        if i2 < i1 as i64 || j2 < j1 as i64 {
            return 0;
        }
        for i in i1..=i2 as usize {
            for j in j1..=j2 as usize {
                best = best.max(self.get(i, j));
            }
        }
        best
    }
}
