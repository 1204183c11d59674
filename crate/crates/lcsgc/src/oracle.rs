//! Exhaustive reference solver and witness verifier. Intentionally
//! exponential; used to pin expected values and to cross-check every fast
//! solver on small instances.

use crate::error::{Error, Result};
use crate::instance::{Embedding, ProblemInstance, SolveResult, Variant, Witness};
use crate::word::Word;

/// Default cap on the word lengths the oracle accepts.
pub const DEFAULT_CAP: usize = 12;

/// Gap-step acceptance shared by the oracle and the witness verifier: may a
/// subsequence whose `p`-th symbol is `prev` be extended with symbol `next`
/// across gaps of length `gv` (in v) and `gw` (in w)?
fn step_allowed(inst: &ProblemInstance, p: usize, prev: u32, next: u32, gv: u32, gw: u32) -> bool {
    match inst.variant {
        Variant::Classic | Variant::Br => true,
        Variant::Mc | Variant::McInc | Variant::OneC | Variant::O1cSync => {
            let gaps = inst.gaps.as_ref().expect("validated MC-family instance");
            if p > gaps.len() {
                return false;
            }
            let c = gaps.get(p);
            c.contains(gv) && c.contains(gw)
        }
        Variant::Sigma | Variant::SigmaL | Variant::SigmaR => {
            let sc = inst
                .sigma_constraints
                .as_ref()
                .expect("validated sigma-family instance");
            // one-sided variants ignore the other map even if it is present
            let c = match inst.variant {
                Variant::SigmaR => Some(sc.right(next)),
                Variant::SigmaL => Some(sc.left(prev)),
                _ => sc.left(prev).intersect(&sc.right(next)),
            };
            match c {
                Some(c) => c.contains(gv) && c.contains(gw),
                None => false,
            }
        }
    }
}

/// Span bound for the bounded-range variant; other variants are unbounded.
fn span_ok(inst: &ProblemInstance, first: usize, last: usize) -> bool {
    match inst.range_bound {
        // span length last - first + 1 must be at most b
        Some(b) if inst.variant == Variant::Br => last - first < b as usize,
        _ => true,
    }
}

struct Search<'a> {
    inst: &'a ProblemInstance,
    vpos: Vec<usize>,
    wpos: Vec<usize>,
    best: SolveResult,
}

impl Search<'_> {
    fn record(&mut self) {
        if self.vpos.len() > self.best.length {
            let subsequence =
                Word::from_symbols(self.vpos.iter().map(|&i| self.inst.v.get(i)).collect())
                    .expect("letters are valid");
            self.best = SolveResult {
                length: self.vpos.len(),
                witness: Some(Witness {
                    subsequence,
                    into_v: Embedding::new(self.vpos.clone()),
                    into_w: Embedding::new(self.wpos.clone()),
                }),
            };
        }
    }

    /// Depth-first over pairs in lexicographic (i, j) order; the first
    /// maximal witness found is kept, so output is deterministic.
    fn extend(&mut self) {
        let (v, w) = (&self.inst.v, &self.inst.w);
        let (last_i, last_j) = match self.vpos.last() {
            Some(&i) => (i, *self.wpos.last().unwrap()),
            None => (0, 0),
        };
        for i in last_i + 1..=v.len() {
            for j in last_j + 1..=w.len() {
                if v.get(i) != w.get(j) {
                    continue;
                }
                if let Some(&fi) = self.vpos.first() {
                    if !span_ok(self.inst, fi, i) || !span_ok(self.inst, self.wpos[0], j) {
                        continue;
                    }
                    let p = self.vpos.len();
                    let gv = (i - last_i - 1) as u32;
                    let gw = (j - last_j - 1) as u32;
                    if !step_allowed(self.inst, p, v.get(last_i), v.get(i), gv, gw) {
                        continue;
                    }
                }
                self.vpos.push(i);
                self.wpos.push(j);
                self.record();
                self.extend();
                self.vpos.pop();
                self.wpos.pop();
            }
        }
    }
}

/// Enumerates all constraint-satisfying pairs of embeddings and returns the
/// longest, with a witness. The instance must be validated; both words must
/// fit under `cap`.
pub fn oracle_solve(inst: &ProblemInstance, cap: usize) -> Result<SolveResult> {
    let size = inst.v.len().max(inst.w.len());
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    let mut search = Search {
        inst,
        vpos: Vec::new(),
        wpos: Vec::new(),
        best: SolveResult {
            length: 0,
            witness: Some(Witness {
                subsequence: Word::from_symbols(Vec::new()).unwrap(),
                into_v: Embedding::new(Vec::new()),
                into_w: Embedding::new(Vec::new()),
            }),
        },
    };
    search.extend();
    Ok(search.best)
}

/// Checks that a result's witness realizes the claimed subsequence in both
/// words and satisfies every constraint of the instance's variant.
pub fn verify_witness(inst: &ProblemInstance, res: &SolveResult) -> bool {
    let Some(witness) = res.witness.as_ref() else {
        return false;
    };
    let k = res.length;
    let (s, ev, ew) = (&witness.subsequence, &witness.into_v, &witness.into_w);
    if s.len() != k || ev.len() != k || ew.len() != k {
        return false;
    }
    if !ev.is_strictly_increasing() || !ew.is_strictly_increasing() {
        return false;
    }
    for (word, emb) in [(&inst.v, ev), (&inst.w, ew)] {
        for p in 1..=k {
            let pos = emb.get(p);
            if pos == 0 || pos > word.len() || word.get(pos) != s.get(p) {
                return false;
            }
        }
    }
    if k > 0 && (!span_ok(inst, ev.get(1), ev.get(k)) || !span_ok(inst, ew.get(1), ew.get(k))) {
        return false;
    }
    for p in 1..k {
        let gv = ev.gap(p) as u32;
        let gw = ew.gap(p) as u32;
        if !step_allowed(inst, p, s.get(p), s.get(p + 1), gv, gw) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constraints::{GapConstraint, GapTuple, SigmaConstraints};
    use crate::instance::ProblemInstance;

    fn gc(l: u32, u: u32) -> GapConstraint {
        GapConstraint::new(l, u).unwrap()
    }

    fn classic(v: &str, w: &str) -> ProblemInstance {
        ProblemInstance::new(
            Word::from_text(v),
            Word::from_text(w),
            Variant::Classic,
            None,
            None,
            None,
        )
        .validate()
        .unwrap()
    }

    #[test]
    fn trivial_constraints_match_classic_lcs() {
        let inst = classic("abcde", "ace");
        let res = oracle_solve(&inst, DEFAULT_CAP).unwrap();
        assert_eq!(res.length, 3);
        assert!(verify_witness(&inst, &res));
    }

    #[test]
    fn empty_word_gives_zero() {
        let inst = classic("", "abc");
        let res = oracle_solve(&inst, DEFAULT_CAP).unwrap();
        assert_eq!(res.length, 0);
        assert!(verify_witness(&inst, &res));
    }

    #[test]
    fn cap_is_enforced() {
        let inst = classic("aaaaaaa", "aaaaaaa");
        assert!(matches!(
            oracle_solve(&inst, 5),
            Err(Error::CapExceeded { size: 7, cap: 5 })
        ));
    }

    #[test]
    fn symmetric_in_v_and_w() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let mk = |rng: &mut rand_chacha::ChaCha8Rng| {
                Word::from_symbols(
                    (0..rng.gen_range(0..8))
                        .map(|_| rng.gen_range(1..4))
                        .collect(),
                )
                .unwrap()
            };
            let v = mk(&mut rng);
            let w = mk(&mut rng);
            let sc = SigmaConstraints::new(
                (0..3)
                    .map(|_| {
                        let l = rng.gen_range(0..3);
                        gc(l, l + rng.gen_range(0..3))
                    })
                    .collect(),
                (0..3)
                    .map(|_| {
                        let l = rng.gen_range(0..3);
                        gc(l, l + rng.gen_range(0..3))
                    })
                    .collect(),
            )
            .unwrap();
            let a = ProblemInstance::new(
                v.clone(),
                w.clone(),
                Variant::Sigma,
                None,
                Some(sc.clone()),
                None,
            );
            let b = ProblemInstance::new(w, v, Variant::Sigma, None, Some(sc), None);
            // skip validation remapping so both sides see identical letters
            let la = oracle_solve(&a, DEFAULT_CAP).unwrap().length;
            let lb = oracle_solve(&b, DEFAULT_CAP).unwrap().length;
            assert_eq!(la, lb);
        }
    }

    #[test]
    fn bad_witnesses_are_rejected() {
        let mut inst = ProblemInstance::new(
            Word::from_text("aa"),
            Word::from_text("aa"),
            Variant::OneC,
            Some(GapTuple::new(vec![gc(1, 1)])),
            None,
            None,
        )
        .validate()
        .unwrap();
        // gap of length 0 is below the lower bound 1
        let bad = SolveResult {
            length: 2,
            witness: Some(Witness {
                subsequence: Word::from_text("aa"),
                into_v: Embedding::new(vec![1, 2]),
                into_w: Embedding::new(vec![1, 2]),
            }),
        };
        assert!(!verify_witness(&inst, &bad));
        // non-increasing positions
        let bad2 = SolveResult {
            length: 2,
            witness: Some(Witness {
                subsequence: Word::from_text("aa"),
                into_v: Embedding::new(vec![2, 2]),
                into_w: Embedding::new(vec![1, 2]),
            }),
        };
        assert!(!verify_witness(&inst, &bad2));
        // the oracle's own witness verifies
        inst.gaps = Some(GapTuple::new(vec![gc(0, 1)]));
        let good = oracle_solve(&inst, DEFAULT_CAP).unwrap();
        assert!(verify_witness(&inst, &good));
    }
}
