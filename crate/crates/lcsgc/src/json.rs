//! JSON instance format.
//!
//! Words are either a string (characters mapped to integers in
//! first-occurrence order, shared across both words) or an explicit integer
//! array, which is authoritative for the alphabet. The `left`/`right` maps
//! are keyed by single characters when both words are strings, by integer
//! letters otherwise; letters missing from a map get the trivial constraint.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::constraints::{GapConstraint, GapTuple, SigmaConstraints};
use crate::error::{Error, Result};
use crate::instance::{ProblemInstance, Variant};
use crate::word::{map_alphabet_pair, Word};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum WordJson {
    Text(String),
    Symbols(Vec<u32>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct InstanceJson {
    v: WordJson,
    w: WordJson,
    variant: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    gaps: Option<Vec<(u32, u32)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    left: Option<BTreeMap<String, (u32, u32)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    right: Option<BTreeMap<String, (u32, u32)>>,
    #[serde(rename = "B", skip_serializing_if = "Option::is_none")]
    b: Option<u32>,
}

/// Parses an instance from JSON. The result is not yet validated; run
/// [`ProblemInstance::validate`] before solving.
pub fn parse_instance(json: &str) -> Result<ProblemInstance> {
    let raw: InstanceJson = serde_json::from_str(json).map_err(|e| Error::Json(e.to_string()))?;
    let variant = Variant::parse(&raw.variant)
        .ok_or_else(|| Error::Json(format!("unknown variant {:?}", raw.variant)))?;

    // letter_of translates a sigma-map key into an integer letter
    #[allow(clippy::type_complexity)]
    let (v, w, letter_of): (Word, Word, Box<dyn Fn(&str) -> Result<u32>>) = match (&raw.v, &raw.w) {
        (WordJson::Text(tv), WordJson::Text(tw)) => {
            let (v, w, alphabet) = map_alphabet_pair(tv, tw);
            let lookup = move |key: &str| -> Result<u32> {
                let mut chars = key.chars();
                let (c, rest) = (chars.next(), chars.next());
                let c = match (c, rest) {
                    (Some(c), None) => c,
                    _ => {
                        return Err(Error::Json(format!(
                            "sigma map key {key:?} is not a single character"
                        )))
                    }
                };
                match alphabet.iter().position(|&s| s == c) {
                    Some(p) => Ok(p as u32 + 1),
                    // letters absent from both words cannot constrain
                    // anything; park them past the alphabet
                    None => Ok(alphabet.len() as u32 + 1),
                }
            };
            (v, w, Box::new(lookup))
        }
        _ => {
            let to_word = |wj: &WordJson| -> Result<Word> {
                match wj {
                        WordJson::Symbols(s) => Word::from_symbols(s.clone()),
                        WordJson::Text(_) => Err(Error::Json(
                            "mixed word encodings: use strings for both words or integer arrays for both"
                                .into(),
                        )),
                    }
            };
            let v = to_word(&raw.v)?;
            let w = to_word(&raw.w)?;
            let lookup = |key: &str| -> Result<u32> {
                key.parse::<u32>().ok().filter(|&l| l >= 1).ok_or_else(|| {
                    Error::Json(format!("sigma map key {key:?} is not a positive integer"))
                })
            };
            (v, w, Box::new(lookup))
        }
    };

    let gaps = match raw.gaps {
        Some(pairs) => Some(GapTuple::new(
            pairs
                .into_iter()
                .map(|(l, u)| GapConstraint::new(l, u))
                .collect::<Result<Vec<_>>>()?,
        )),
        None => None,
    };

    let sigma_constraints = if variant.needs_sigma() {
        let sigma = v.max_symbol().max(w.max_symbol());
        let n = v.len().max(w.len()) as u32;
        let build = |map: Option<BTreeMap<String, (u32, u32)>>| -> Result<Vec<GapConstraint>> {
            let mut out = vec![GapConstraint::trivial(n); sigma as usize];
            for (key, (l, u)) in map.unwrap_or_default() {
                let letter = letter_of(&key)?;
                if letter <= sigma {
                    out[letter as usize - 1] = GapConstraint::new(l, u)?;
                }
            }
            Ok(out)
        };
        let left = build(raw.left)?;
        let right = build(raw.right)?;
        Some(SigmaConstraints::new(left, right)?)
    } else {
        None
    };

    Ok(ProblemInstance::new(
        v,
        w,
        variant,
        gaps,
        sigma_constraints,
        raw.b,
    ))
}

/// Serializes an instance to the same JSON format, with words as integer
/// arrays (the lossless encoding) and sigma maps keyed by integer letters.
pub fn instance_to_json(inst: &ProblemInstance) -> String {
    let sigma_map = |f: &dyn Fn(u32) -> GapConstraint| -> BTreeMap<String, (u32, u32)> {
        let sigma = inst.v.max_symbol().max(inst.w.max_symbol());
        (1..=sigma)
            .map(|a| {
                let c = f(a);
                (a.to_string(), (c.lower(), c.upper()))
            })
            .collect()
    };
    let raw = InstanceJson {
        v: WordJson::Symbols(inst.v.symbols().to_vec()),
        w: WordJson::Symbols(inst.w.symbols().to_vec()),
        variant: inst.variant.as_str().to_string(),
        gaps: inst.gaps.as_ref().map(|g| {
            g.constraints()
                .iter()
                .map(|c| (c.lower(), c.upper()))
                .collect()
        }),
        left: inst
            .sigma_constraints
            .as_ref()
            .map(|sc| sigma_map(&|a| sc.left(a))),
        right: inst
            .sigma_constraints
            .as_ref()
            .map(|sc| sigma_map(&|a| sc.right(a))),
        b: inst.range_bound,
    };
    serde_json::to_string_pretty(&raw).expect("instance serializes")
}
