use crate::error::{Error, Result};

/// A single gap-length constraint `(lower, upper)`: the gap between two
/// consecutively embedded symbols must have length in `[lower, upper]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GapConstraint {
    lower: u32,
    upper: u32,
}

impl GapConstraint {
    pub fn new(lower: u32, upper: u32) -> Result<Self> {
        if lower > upper {
            return Err(Error::BadConstraint { lower, upper });
        }
        Ok(GapConstraint { lower, upper })
    }

    pub fn lower(&self) -> u32 {
        self.lower
    }

    pub fn upper(&self) -> u32 {
        self.upper
    }

    pub fn contains(&self, gap: u32) -> bool {
        self.lower <= gap && gap <= self.upper
    }

    /// Interval containment: `(a,b) ⊆ (c,d)` iff `c <= a` and `b <= d`.
    pub fn subset_of(&self, other: &GapConstraint) -> bool {
        other.lower <= self.lower && self.upper <= other.upper
    }

    /// Intersection of two constraints; `None` when empty.
    pub fn intersect(&self, other: &GapConstraint) -> Option<GapConstraint> {
        let lower = self.lower.max(other.lower);
        let upper = self.upper.min(other.upper);
        (lower <= upper).then_some(GapConstraint { lower, upper })
    }

    /// Clamps the upper bound (and lower bound, if needed) to `n`.
    pub fn clamped(&self, n: u32) -> GapConstraint {
        GapConstraint {
            lower: self.lower.min(n),
            upper: self.upper.min(n),
        }
    }

    /// The trivial, never-binding constraint `(0, n)`.
    pub fn trivial(n: u32) -> GapConstraint {
        GapConstraint { lower: 0, upper: n }
    }
}

/// An ordered tuple of gap-length constraints; entry `i` (1-based) constrains
/// the gap between the `i`-th and `(i+1)`-th symbol of a subsequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GapTuple {
    constraints: Vec<GapConstraint>,
}

impl GapTuple {
    pub fn new(constraints: Vec<GapConstraint>) -> Self {
        GapTuple { constraints }
    }

    pub fn constant(c: GapConstraint, len: usize) -> Self {
        GapTuple {
            constraints: vec![c; len],
        }
    }

    pub fn len(&self) -> usize {
        self.constraints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constraints.is_empty()
    }

    /// Constraint at 1-based position `i`.
    pub fn get(&self, i: usize) -> GapConstraint {
        self.constraints[i - 1]
    }

    pub fn constraints(&self) -> &[GapConstraint] {
        &self.constraints
    }

    pub fn clamped(&self, n: u32) -> GapTuple {
        GapTuple {
            constraints: self.constraints.iter().map(|c| c.clamped(n)).collect(),
        }
    }

    /// True iff each constraint interval is contained in the next one
    /// (lower bounds non-increasing, upper bounds non-decreasing).
    pub fn is_increasing(&self) -> bool {
        self.constraints.windows(2).all(|p| p[0].subset_of(&p[1]))
    }

    /// True iff for every pair `i <= j` with equal constraints, all shifted
    /// pairs satisfy `t[i+e] ⊆ t[j+e]` while both stay in range.
    pub fn is_synchronized(&self) -> bool {
        let t = &self.constraints;
        // Containment is transitive per shift, so within each group of equal
        // constraints it suffices to check consecutive occurrences.
        let mut sorted: Vec<usize> = (0..t.len()).collect();
        sorted.sort_by_key(|&i| (t[i], i));
        for pair in sorted.windows(2) {
            let (i, j) = (pair[0], pair[1]);
            if t[i] != t[j] {
                continue;
            }
            for e in 0..t.len() - j {
                if !t[i + e].subset_of(&t[j + e]) {
                    return false;
                }
            }
        }
        true
    }

    /// Sorts out the distinct constraints and labels each position with the
    /// index (1-based) of its constraint in the sorted distinct list.
    pub fn label(&self) -> LabeledTuple {
        let distinct = bucket_sorted_distinct(&self.constraints);
        let labels = self
            .constraints
            .iter()
            .map(|c| distinct.binary_search(c).expect("constraint present") + 1)
            .collect();
        LabeledTuple {
            tuple: self.clone(),
            distinct,
            labels,
        }
    }
}

/// Distinct constraints in lexicographic `(lower, upper)` order, via a
/// two-pass bucket sort when the value range is small, otherwise a
/// comparison sort.
fn bucket_sorted_distinct(constraints: &[GapConstraint]) -> Vec<GapConstraint> {
    let mut distinct: Vec<GapConstraint>;
    let max = constraints
        .iter()
        .map(|c| c.upper as usize)
        .max()
        .unwrap_or(0);
    if max <= 4 * constraints.len().max(16) {
        // radix on upper, then on lower
        let mut by_upper: Vec<Vec<GapConstraint>> = vec![Vec::new(); max + 1];
        for &c in constraints {
            by_upper[c.upper as usize].push(c);
        }
        let mut by_lower: Vec<Vec<GapConstraint>> = vec![Vec::new(); max + 1];
        for bucket in by_upper {
            for c in bucket {
                by_lower[c.lower as usize].push(c);
            }
        }
        distinct = by_lower.into_iter().flatten().collect();
    } else {
        distinct = constraints.to_vec();
        distinct.sort_unstable();
    }
    distinct.dedup();
    distinct
}

/// A gap tuple together with its distinct constraints and per-position labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledTuple {
    tuple: GapTuple,
    distinct: Vec<GapConstraint>,
    labels: Vec<usize>,
}

impl LabeledTuple {
    pub fn tuple(&self) -> &GapTuple {
        &self.tuple
    }

    /// Number of distinct constraints, `h`.
    pub fn distinct_count(&self) -> usize {
        self.distinct.len()
    }

    pub fn distinct(&self) -> &[GapConstraint] {
        &self.distinct
    }

    /// Distinct constraint with 1-based label `r`.
    pub fn constraint_for_label(&self, r: usize) -> GapConstraint {
        self.distinct[r - 1]
    }

    /// Label (1-based, into `distinct`) of the constraint at 1-based
    /// tuple position `i`.
    pub fn label_of(&self, i: usize) -> usize {
        self.labels[i - 1]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }
}

/// Per-letter gap constraints for the letter-dependent LCS variants: `left(a)`
/// constrains the gap following letter `a`, `right(a)` the gap preceding it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaConstraints {
    left: Vec<GapConstraint>,
    right: Vec<GapConstraint>,
}

impl SigmaConstraints {
    /// Both maps must be total on `[1..sigma]`, one entry per letter.
    pub fn new(left: Vec<GapConstraint>, right: Vec<GapConstraint>) -> Result<Self> {
        if left.len() != right.len() {
            return Err(Error::BadTupleLength {
                got: right.len(),
                expected: left.len(),
            });
        }
        Ok(SigmaConstraints { left, right })
    }

    pub fn trivial(sigma: u32, n: u32) -> Self {
        let t = vec![GapConstraint::trivial(n); sigma as usize];
        SigmaConstraints {
            left: t.clone(),
            right: t,
        }
    }

    pub fn sigma(&self) -> u32 {
        self.left.len() as u32
    }

    pub fn left(&self, letter: u32) -> GapConstraint {
        self.left[letter as usize - 1]
    }

    pub fn right(&self, letter: u32) -> GapConstraint {
        self.right[letter as usize - 1]
    }

    pub fn left_map(&self) -> &[GapConstraint] {
        &self.left
    }

    pub fn right_map(&self) -> &[GapConstraint] {
        &self.right
    }

    pub fn clamped(&self, n: u32) -> SigmaConstraints {
        SigmaConstraints {
            left: self.left.iter().map(|c| c.clamped(n)).collect(),
            right: self.right.iter().map(|c| c.clamped(n)).collect(),
        }
    }
}
