//! Bounded-range LCS: classic LCS, exact window-pair solvers, and the
//! linear-time sandwich approximation.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::instance::{Embedding, SolveResult, Witness};
use crate::word::Word;

/// How the exact bounded-range answer is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BrStrategy {
    /// Every window pair directly, O(NB^2).
    Naive,
    /// Window pairs grouped into overlapping blocks; pairs of blocks are
    /// independent work items evaluated in parallel.
    Blocked,
}

/// Plain LCS by the quadratic table, with standard backtracking for the
/// witness.
pub fn lcs_classic(v: &Word, w: &Word, want_witness: bool) -> SolveResult {
    let (m, n) = (v.len(), w.len());
    let mut dp = vec![0u32; (m + 1) * (n + 1)];
    let idx = |i: usize, j: usize| i * (n + 1) + j;
    for i in 1..=m {
        for j in 1..=n {
            dp[idx(i, j)] = if v.get(i) == w.get(j) {
                dp[idx(i - 1, j - 1)] + 1
            } else {
                dp[idx(i - 1, j)].max(dp[idx(i, j - 1)])
            };
        }
    }
    let length = dp[idx(m, n)] as usize;
    let witness = want_witness.then(|| {
        let (mut i, mut j) = (m, n);
        let mut vpos = Vec::new();
        let mut wpos = Vec::new();
        while i > 0 && j > 0 {
            if v.get(i) == w.get(j) && dp[idx(i, j)] == dp[idx(i - 1, j - 1)] + 1 {
                vpos.push(i);
                wpos.push(j);
                i -= 1;
                j -= 1;
            } else if dp[idx(i - 1, j)] >= dp[idx(i, j - 1)] {
                i -= 1;
            } else {
                j -= 1;
            }
        }
        vpos.reverse();
        wpos.reverse();
        let subsequence =
            Word::from_symbols(vpos.iter().map(|&p| v.get(p)).collect()).expect("valid letters");
        Witness {
            subsequence,
            into_v: Embedding::new(vpos),
            into_w: Embedding::new(wpos),
        }
    });
    SolveResult { length, witness }
}

/// LCS length of two symbol slices with a rolling row, O(|a|*|b|) time and
/// O(|b|) space.
fn lcs_len(a: &[u32], b: &[u32]) -> usize {
    let mut row = vec![0u32; b.len() + 1];
    for &x in a {
        let mut diag = 0;
        for (j, &y) in b.iter().enumerate() {
            let up = row[j + 1];
            row[j + 1] = if x == y { diag + 1 } else { up.max(row[j]) };
            diag = up;
        }
    }
    row[b.len()] as usize
}

fn check_bound(b: u32, n: usize) -> Result<()> {
    let max = n.max(1);
    if b == 0 || b as usize > max {
        return Err(Error::BadRangeBound { bound: b, max });
    }
    Ok(())
}

/// Overlapping length-2B blocks covering every length-B window of the word.
fn blocks(word: &Word, b: usize) -> Vec<&[u32]> {
    let len = word.len();
    let syms = word.symbols();
    (0..)
        .map(|i| i * b)
        .take_while(|&start| start < len)
        .map(|start| &syms[start..len.min(start + 2 * b)])
        .collect()
}

/// Best classic LCS over all pairs of length-`bv` windows of `a` and
/// length-`bw` windows of `b` that fit inside the slices.
fn best_window_pair(a: &[u32], b: &[u32], bv: usize, bw: usize) -> usize {
    if a.len() < bv || b.len() < bw {
        return 0;
    }
    let mut best = 0;
    for sv in 0..=a.len() - bv {
        for sw in 0..=b.len() - bw {
            best = best.max(lcs_len(&a[sv..sv + bv], &b[sw..sw + bw]));
        }
    }
    best
}

/// Exact bounded-range LCS: the best classic LCS over all pairs of length-B
/// windows (the whole word when shorter than B). Length only.
pub fn lcs_br_exact(v: &Word, w: &Word, b: u32, strategy: BrStrategy) -> Result<SolveResult> {
    let (m, n) = (v.len(), w.len());
    check_bound(b, n.max(m))?;
    if m == 0 || n == 0 {
        return Ok(SolveResult::length_only(0));
    }
    let bv = (b as usize).min(m);
    let bw = (b as usize).min(n);
    let length = match strategy {
        BrStrategy::Naive => best_window_pair(v.symbols(), w.symbols(), bv, bw),
        BrStrategy::Blocked => {
            let bsv = blocks(v, b as usize);
            let bsw = blocks(w, b as usize);
            let pairs: Vec<(&[u32], &[u32])> = bsv
                .iter()
                .flat_map(|&x| bsw.iter().map(move |&y| (x, y)))
                .collect();
            pairs
                .par_iter()
                .map(|&(x, y)| best_window_pair(x, y, bv, bw))
                .max()
                .unwrap_or(0)
        }
    };
    Ok(SolveResult::length_only(length))
}

/// Sandwich approximation: `upper` is the best classic LCS over all block
/// pairs; the true bounded-range answer is at least a third of it, so
/// `lower = ceil(upper / 3)` brackets it from below.
pub fn lcs_br_approx(v: &Word, w: &Word, b: u32) -> Result<(usize, usize)> {
    let (m, n) = (v.len(), w.len());
    check_bound(b, n.max(m))?;
    if m == 0 || n == 0 {
        return Ok((0, 0));
    }
    let bsv = blocks(v, b as usize);
    let bsw = blocks(w, b as usize);
    let pairs: Vec<(&[u32], &[u32])> = bsv
        .iter()
        .flat_map(|&x| bsw.iter().map(move |&y| (x, y)))
        .collect();
    let upper = pairs
        .par_iter()
        .map(|&(x, y)| lcs_len(x, y))
        .max()
        .unwrap_or(0);
    // any common subsequence of a 2B-block pair splits into three parts, each
    // confined to a length-B window in both words, so upper <= 3 * exact and
    // the integer answer is at least ceil(upper / 3)
    Ok((upper.div_ceil(3), upper))
}
