use rayon::prelude::*;
use serde::Serialize;

use super::oracle::oracle_decide;
use super::{enumerate_graphic_sequences, SearchError};
use crate::characterize::Target;
use crate::seq::DegreeSequence;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SigmaSearch {
    pub n: usize,
    pub target: Target,
    /// Smallest even sum at or above which every graphic sequence of length
    /// `n` is potentially target-graphic.
    pub sigma: u64,
    /// First (lexicographically largest) non-potential sequence with sum
    /// `sigma - 2`.
    #[serde(serialize_with = "serialize_opt_seq")]
    pub witness: Option<DegreeSequence>,
    pub sequences_checked: usize,
}

fn serialize_opt_seq<S: serde::Serializer>(
    seq: &Option<DegreeSequence>,
    s: S,
) -> Result<S::Ok, S::Error> {
    match seq {
        Some(q) => s.serialize_some(&q.render()),
        None => s.serialize_none(),
    }
}

/// Empirical threshold over all graphic sequences of length `n`. K6-C4 uses
/// the closed-form decider, K5-C4 the oracle.
pub fn sigma_search(n: usize, target: Target, bound: usize) -> Result<SigmaSearch, SearchError> {
    let min = target.min_order();
    if n < min {
        return Err(SearchError::TooShort { n, min });
    }
    if n > bound {
        return Err(SearchError::BoundExceeded { n, bound });
    }
    let all: Vec<DegreeSequence> = enumerate_graphic_sequences(n).collect();
    let potential: Vec<bool> = all
        .par_iter()
        .map(|s| match target {
            Target::K6MinusC4 => Ok(target.decide(s).is_potential()),
            Target::K5MinusC4 => oracle_decide(s, target, bound).map(|w| w.is_some()),
        })
        .collect::<Result<_, _>>()?;
    let mut worst: Option<&DegreeSequence> = None;
    for (s, &yes) in all.iter().zip(&potential) {
        if !yes && worst.is_none_or(|w| s.sigma() > w.sigma()) {
            worst = Some(s);
        }
    }
    Ok(SigmaSearch {
        n,
        target,
        sigma: worst.map_or(0, |w| w.sigma() + 2),
        witness: worst.cloned(),
        sequences_checked: all.len(),
    })
}
