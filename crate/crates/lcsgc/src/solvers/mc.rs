//! Solvers for arbitrary gap tuples: the O(Nk) layered bit-matrix DP and the
//! O(N log^2 N) segment-tree DP for increasing tuples.

use crate::constraints::GapTuple;
use crate::error::{Error, Result};
use crate::instance::{Embedding, SolveResult, Witness};
use crate::structures::SegmentTree2d;
use crate::word::Word;

/// One bit per cell: is there a constrained common subsequence of length `p`
/// whose embeddings end at `(i, j)`?
struct BitLayer {
    m: usize,
    n: usize,
    bits: Vec<u8>,
}

impl BitLayer {
    fn new(m: usize, n: usize) -> Self {
        BitLayer {
            m,
            n,
            bits: vec![0; m * n],
        }
    }

    #[inline]
    fn get(&self, i: i64, j: i64) -> u32 {
        if i < 1 || j < 1 || i > self.m as i64 || j > self.n as i64 {
            return 0;
        }
        self.bits[(i as usize - 1) * self.n + (j as usize - 1)] as u32
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize) {
        self.bits[(i - 1) * self.n + (j - 1)] = 1;
    }

    fn any(&self) -> bool {
        self.bits.iter().any(|&b| b != 0)
    }

    fn first_one(&self) -> Option<(usize, usize)> {
        self.bits
            .iter()
            .position(|&b| b != 0)
            .map(|p| (p / self.n + 1, p % self.n + 1))
    }
}

/// Sliding box sums over the previous layer: `box_sum(i, j)` counts the ones
/// of the previous layer in `[i-d+1 : i] x [j-d+1 : j]`, zero-padded out of
/// range.
fn box_sums(layer: &BitLayer, d: i64) -> Vec<u32> {
    let (m, n) = (layer.m, layer.n);
    // row sums first, then column sums over them
    let mut a = vec![0u32; m * n];
    for i in 1..=m {
        for j in 1..=n {
            let prev = if j > 1 { a[(i - 1) * n + (j - 2)] } else { 0 };
            a[(i - 1) * n + (j - 1)] =
                prev + layer.get(i as i64, j as i64) - layer.get(i as i64, j as i64 - d);
        }
    }
    let mut b = vec![0u32; m * n];
    for i in 1..=m {
        for j in 1..=n {
            let up = if i > 1 { b[(i - 2) * n + (j - 1)] } else { 0 };
            let leaving = if i as i64 - d >= 1 {
                a[(i - d as usize - 1) * n + (j - 1)]
            } else {
                0
            };
            b[(i - 1) * n + (j - 1)] = up - leaving + a[(i - 1) * n + (j - 1)];
        }
    }
    b
}

fn check_tuple_len(gaps: &GapTuple, m: usize) -> Result<()> {
    let expected = m.saturating_sub(1);
    if gaps.len() != expected {
        return Err(Error::BadTupleLength {
            got: gaps.len(),
            expected,
        });
    }
    Ok(())
}

/// Layer-by-layer solver for LCS-MC: layer `p` marks cells that end a common
/// subsequence of length `p` satisfying the first `p-1` gap constraints.
/// Runs in O(Nk); witness extraction retains all layers and backtracks.
pub fn lcs_mc(v: &Word, w: &Word, gaps: &GapTuple, want_witness: bool) -> Result<SolveResult> {
    let (m, n) = (v.len(), w.len());
    check_tuple_len(gaps, m)?;
    let zero = |want: bool| SolveResult {
        length: 0,
        witness: want.then(empty_witness),
    };
    if m == 0 || n == 0 {
        return Ok(zero(want_witness));
    }

    let mut cur = BitLayer::new(m, n);
    for i in 1..=m {
        for j in 1..=n {
            if v.get(i) == w.get(j) {
                cur.set(i, j);
            }
        }
    }
    if !cur.any() {
        return Ok(zero(want_witness));
    }

    let mut retained: Vec<BitLayer> = Vec::new();
    let mut k = 1;
    for p in 2..=m {
        // the gap preceding symbol p is constraint p-1 of the tuple
        let c = gaps.get(p - 1);
        let (l, u) = (c.lower() as i64, c.upper() as i64);
        let d = u - l + 1;
        let boxes = box_sums(&cur, d);
        let mut next = BitLayer::new(m, n);
        let mut nonzero = false;
        for i in 1..=m {
            for j in 1..=n {
                if v.get(i) != w.get(j) {
                    continue;
                }
                let bi = i as i64 - l - 1;
                let bj = j as i64 - l - 1;
                if bi >= 1 && bj >= 1 && boxes[(bi as usize - 1) * n + (bj as usize - 1)] > 0 {
                    next.set(i, j);
                    nonzero = true;
                }
            }
        }
        if !nonzero {
            break;
        }
        if want_witness {
            retained.push(std::mem::replace(&mut cur, next));
        } else {
            cur = next;
        }
        k = p;
    }

    let witness = want_witness.then(|| {
        retained.push(cur);
        backtrack(v, gaps, &retained)
    });
    Ok(SolveResult { length: k, witness })
}

fn empty_witness() -> Witness {
    Witness {
        subsequence: Word::from_symbols(Vec::new()).expect("empty word"),
        into_v: Embedding::new(Vec::new()),
        into_w: Embedding::new(Vec::new()),
    }
}

/// Walks back from any cell of the top layer, re-finding a predecessor inside
/// the gap window of each lower layer.
fn backtrack(v: &Word, gaps: &GapTuple, layers: &[BitLayer]) -> Witness {
    let k = layers.len();
    let (mut i, mut j) = layers[k - 1].first_one().expect("top layer is nonzero");
    let mut vpos = vec![i];
    let mut wpos = vec![j];
    for p in (1..k).rev() {
        let c = gaps.get(p);
        let (l, u) = (c.lower() as i64, c.upper() as i64);
        let layer = &layers[p - 1];
        let mut found = false;
        'scan: for pi in i as i64 - u - 1..=i as i64 - l - 1 {
            for pj in j as i64 - u - 1..=j as i64 - l - 1 {
                if layer.get(pi, pj) == 1 {
                    i = pi as usize;
                    j = pj as usize;
                    found = true;
                    break 'scan;
                }
            }
        }
        debug_assert!(found, "layer {p} must contain a predecessor");
        vpos.push(i);
        wpos.push(j);
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
}

/// Segment-tree solver for LCS-MC-INC. Visits cells row-major; a matched cell
/// is fixed to the best value pushed onto it, then pushes its extension window
/// forward. Length only.
pub fn lcs_mc_inc(v: &Word, w: &Word, gaps: &GapTuple) -> Result<SolveResult> {
    Ok(lcs_mc_inc_stats(v, w, gaps)?.0)
}

/// As [`lcs_mc_inc`], also reporting the number of tree nodes touched.
pub fn lcs_mc_inc_stats(v: &Word, w: &Word, gaps: &GapTuple) -> Result<(SolveResult, u64)> {
    if !gaps.is_increasing() {
        return Err(Error::NotIncreasing);
    }
    let (m, n) = (v.len(), w.len());
    check_tuple_len(gaps, m)?;
    if m == 0 || n == 0 {
        return Ok((SolveResult::length_only(0), 0));
    }

    let mut tree = SegmentTree2d::new(m, n);
    let mut best = 0u32;
    for i in 1..=m {
        for j in 1..=n {
            if v.get(i) != w.get(j) {
                continue;
            }
            // a match always ends at least a length-1 subsequence
            let p = tree.query(i, j)?.max(1);
            best = best.max(p);
            if (p as usize) < m {
                let c = gaps.get(p as usize);
                let (l, u) = (c.lower() as i64, c.upper() as i64);
                tree.update(
                    i as i64 + l + 1,
                    i as i64 + u + 1,
                    j as i64 + l + 1,
                    j as i64 + u + 1,
                    p + 1,
                );
            }
        }
    }
    Ok((
        SolveResult::length_only(best as usize),
        tree.nodes_touched(),
    ))
}
