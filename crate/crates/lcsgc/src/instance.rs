use crate::constraints::{GapConstraint, GapTuple, SigmaConstraints};
use crate::error::{Error, Result};
use crate::word::{densify, Word};

/// Which gap-constrained LCS problem an instance asks for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Arbitrary tuple of gap constraints, one per potential gap.
    Mc,
    /// Increasing tuple of gap constraints.
    McInc,
    /// A single gap constraint applied to every gap.
    OneC,
    /// Synchronized tuple with few distinct constraints.
    O1cSync,
    /// Letter-dependent constraints from both sides of each gap.
    Sigma,
    /// Constraint determined by the letter before the gap.
    SigmaL,
    /// Constraint determined by the letter after the gap.
    SigmaR,
    /// Whole subsequence confined to a length-B range.
    Br,
    /// Plain LCS, no constraints.
    Classic,
}

impl Variant {
    pub fn as_str(&self) -> &'static str {
        match self {
            Variant::Mc => "mc",
            Variant::McInc => "mc-inc",
            Variant::OneC => "1c",
            Variant::O1cSync => "o1c-sync",
            Variant::Sigma => "sigma",
            Variant::SigmaL => "sigma-l",
            Variant::SigmaR => "sigma-r",
            Variant::Br => "br",
            Variant::Classic => "classic",
        }
    }

    pub fn parse(s: &str) -> Option<Variant> {
        Some(match s {
            "mc" => Variant::Mc,
            "mc-inc" => Variant::McInc,
            "1c" => Variant::OneC,
            "o1c-sync" => Variant::O1cSync,
            "sigma" => Variant::Sigma,
            "sigma-l" => Variant::SigmaL,
            "sigma-r" => Variant::SigmaR,
            "br" => Variant::Br,
            "classic" => Variant::Classic,
            _ => return None,
        })
    }

    /// Variants whose input carries a gap tuple of length `|v| - 1`.
    pub fn needs_gap_tuple(&self) -> bool {
        matches!(
            self,
            Variant::Mc | Variant::McInc | Variant::OneC | Variant::O1cSync
        )
    }

    pub fn needs_sigma(&self) -> bool {
        matches!(self, Variant::Sigma | Variant::SigmaL | Variant::SigmaR)
    }
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A full problem instance: two words plus the constraint data required by
/// the chosen variant. `N = |v| * |w|` is the base unit of every complexity
/// bound in this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemInstance {
    pub v: Word,
    pub w: Word,
    pub variant: Variant,
    pub gaps: Option<GapTuple>,
    pub sigma_constraints: Option<SigmaConstraints>,
    pub range_bound: Option<u32>,
    /// Set by `validate` when it swapped `v` and `w` to establish `|v| <= |w|`.
    swapped: bool,
    /// Set by `validate`; normalization notes (e.g. an empty input word).
    notes: Vec<String>,
}

impl ProblemInstance {
    pub fn new(
        v: Word,
        w: Word,
        variant: Variant,
        gaps: Option<GapTuple>,
        sigma_constraints: Option<SigmaConstraints>,
        range_bound: Option<u32>,
    ) -> Self {
        ProblemInstance {
            v,
            w,
            variant,
            gaps,
            sigma_constraints,
            range_bound,
            swapped: false,
            notes: Vec::new(),
        }
    }

    pub fn swapped(&self) -> bool {
        self.swapped
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    /// Alphabet size after normalization.
    pub fn sigma(&self) -> u32 {
        self.v.max_symbol().max(self.w.max_symbol())
    }

    /// Checks the variant/field contract and returns a normalized instance:
    /// `|v| <= |w|`, letters remapped to a dense `[1..sigma]` alphabet, and
    /// all constraint bounds clamped to `[0, |w|]`. Idempotent.
    pub fn validate(mut self) -> Result<ProblemInstance> {
        if self.v.len() > self.w.len() {
            std::mem::swap(&mut self.v, &mut self.w);
            self.swapped = !self.swapped;
        }
        let m = self.v.len();
        let n = self.w.len() as u32;
        if m == 0 {
            let note = "empty input word: answer is 0 by definition".to_string();
            if !self.notes.contains(&note) {
                self.notes.push(note);
            }
        }

        // dense alphabet, shared across both words; sigma maps are permuted
        // through the same table
        let (dv, dw, _, table) = densify(&self.v, &self.w);
        if self.variant.needs_sigma() {
            let sc = self
                .sigma_constraints
                .take()
                .ok_or_else(|| Error::MissingField {
                    variant: self.variant.to_string(),
                    field: "sigma_constraints".into(),
                })?;
            self.sigma_constraints = Some(remap_sigma(&sc, &table, n)?);
        }
        self.v = dv;
        self.w = dw;

        if self.variant.needs_gap_tuple() {
            let gaps = self.gaps.take().ok_or_else(|| Error::MissingField {
                variant: self.variant.to_string(),
                field: "gaps".into(),
            })?;
            let expected = m.saturating_sub(1);
            let gaps = match self.variant {
                // LCS-1C accepts either the single constraint or the expanded
                // constant tuple; all entries must agree.
                Variant::OneC => {
                    let first = *gaps.constraints().first().ok_or(Error::BadTupleLength {
                        got: 0,
                        expected: expected.max(1),
                    })?;
                    if gaps.constraints().iter().any(|c| *c != first) {
                        return Err(Error::BadConstraint {
                            lower: first.lower(),
                            upper: first.upper(),
                        });
                    }
                    if gaps.len() != 1 && gaps.len() != expected {
                        return Err(Error::BadTupleLength {
                            got: gaps.len(),
                            expected,
                        });
                    }
                    GapTuple::constant(first, expected.max(1))
                }
                _ => {
                    if gaps.len() != expected {
                        return Err(Error::BadTupleLength {
                            got: gaps.len(),
                            expected,
                        });
                    }
                    gaps
                }
            };
            self.gaps = Some(gaps.clamped(n));
        }

        if self.variant == Variant::Br {
            let b = self.range_bound.ok_or_else(|| Error::MissingField {
                variant: self.variant.to_string(),
                field: "B".into(),
            })?;
            if b == 0 || b as usize > self.w.len().max(1) {
                return Err(Error::BadRangeBound {
                    bound: b,
                    max: self.w.len().max(1),
                });
            }
        }
        Ok(self)
    }
}

fn remap_sigma(sc: &SigmaConstraints, table: &[(u32, u32)], n: u32) -> Result<SigmaConstraints> {
    let sigma = table.len();
    let trivial = GapConstraint::trivial(n);
    let mut left = vec![trivial; sigma];
    let mut right = vec![trivial; sigma];
    for &(old, new) in table {
        if old as usize <= sc.sigma() as usize {
            left[new as usize - 1] = sc.left(old);
            right[new as usize - 1] = sc.right(old);
        }
    }
    SigmaConstraints::new(
        left.iter().map(|c| c.clamped(n)).collect(),
        right.iter().map(|c| c.clamped(n)).collect(),
    )
}

/// A strictly increasing map from subsequence positions to 1-based word
/// positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    positions: Vec<usize>,
}

impl Embedding {
    pub fn new(positions: Vec<usize>) -> Self {
        Embedding { positions }
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// Image of 1-based subsequence position `i`.
    pub fn get(&self, i: usize) -> usize {
        self.positions[i - 1]
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.positions.windows(2).all(|p| p[0] < p[1])
    }

    /// Length of the `j`-th gap (1-based): `e(j+1) - e(j) - 1`.
    pub fn gap(&self, j: usize) -> usize {
        self.positions[j] - self.positions[j - 1] - 1
    }
}

/// A witness: the common subsequence and its two embeddings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub subsequence: Word,
    pub into_v: Embedding,
    pub into_w: Embedding,
}

/// Outcome of a solve: the answer length and, where cheap, a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub length: usize,
    pub witness: Option<Witness>,
}

impl SolveResult {
    pub fn length_only(length: usize) -> Self {
        SolveResult {
            length,
            witness: None,
        }
    }

    /// Swaps the two embeddings of the witness; used to report results in the
    /// caller's original word order after `validate` swapped the words.
    pub fn swap_words(mut self) -> Self {
        if let Some(w) = self.witness.as_mut() {
            std::mem::swap(&mut w.into_v, &mut w.into_w);
        }
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gc(l: u32, u: u32) -> GapConstraint {
        GapConstraint::new(l, u).unwrap()
    }

    fn mc_instance(gaps: Vec<GapConstraint>) -> ProblemInstance {
        ProblemInstance::new(
            Word::from_text("abc"),
            Word::from_text("abcd"),
            Variant::Mc,
            Some(GapTuple::new(gaps)),
            None,
            None,
        )
    }

    #[test]
    fn rejects_short_tuple() {
        // |v| = 3 wants 2 gaps
        let err = mc_instance(vec![gc(0, 1)]).validate().unwrap_err();
        assert_eq!(
            err,
            Error::BadTupleLength {
                got: 1,
                expected: 2
            }
        );
    }

    #[test]
    fn clamps_huge_upper_bound() {
        let inst = mc_instance(vec![gc(0, 1_000_000_000), gc(0, 0)])
            .validate()
            .unwrap();
        assert_eq!(inst.gaps.as_ref().unwrap().get(1), gc(0, 4));
    }

    #[test]
    fn validate_is_idempotent() {
        let inst = ProblemInstance::new(
            Word::from_text("bxa"),
            Word::from_text("ab"),
            Variant::Classic,
            None,
            None,
            None,
        )
        .validate()
        .unwrap();
        let again = inst.clone().validate().unwrap();
        assert_eq!(inst, again);
    }

    #[test]
    fn swaps_to_shorter_v() {
        let inst = ProblemInstance::new(
            Word::from_text("abcd"),
            Word::from_text("ab"),
            Variant::Classic,
            None,
            None,
            None,
        )
        .validate()
        .unwrap();
        assert!(inst.swapped());
        assert_eq!(inst.v.len(), 2);
    }

    #[test]
    fn empty_word_is_a_note_not_an_error() {
        let inst = ProblemInstance::new(
            Word::from_text(""),
            Word::from_text("ab"),
            Variant::Classic,
            None,
            None,
            None,
        )
        .validate()
        .unwrap();
        assert_eq!(inst.notes().len(), 1);
    }

    #[test]
    fn br_rejects_out_of_range_bound() {
        let inst = ProblemInstance::new(
            Word::from_text("ab"),
            Word::from_text("abc"),
            Variant::Br,
            None,
            None,
            Some(9),
        );
        assert!(matches!(
            inst.validate(),
            Err(Error::BadRangeBound { bound: 9, .. })
        ));
    }
}
