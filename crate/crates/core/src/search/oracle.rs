//! Exhaustive potentially-H-graphic oracle.
//!
//! Walks every realization of the sequence (up to the twin symmetry described
//! in the walker) and tests each for the pattern. The pattern may sit on any
//! vertices; nothing here depends on the closed-form deciders.

use super::walker::Walker;
use super::SearchError;
use crate::characterize::Target;
use crate::graphs::{contains_pattern, find_k6c4, Graph, K6C4Witness, TargetPattern};
use crate::seq::DegreeSequence;

pub const DEFAULT_ORACLE_BOUND: usize = 10;

/// Calls `visit` on realizations of `seq` until it returns `true`. Every
/// realization is isomorphic to at least one visited graph. Returns whether
/// the visit stopped early.
pub fn for_each_realization(
    seq: &DegreeSequence,
    bound: usize,
    visit: &mut dyn FnMut(&Graph) -> bool,
) -> Result<bool, SearchError> {
    if seq.len() > bound {
        return Err(SearchError::BoundExceeded {
            n: seq.len(),
            bound,
        });
    }
    if !seq.is_graphic() {
        return Err(SearchError::NotGraphic(seq.render()));
    }
    let n = seq.len();
    let mut walker = Walker::new(Graph::new(n), seq.terms().to_vec(), vec![true; n]);
    Ok(walker.run(&mut |w| visit(&w.g)))
}

/// Host degrees must dominate the pattern's degrees position by position;
/// otherwise no realization can contain it.
fn degrees_dominate(seq: &DegreeSequence, pattern: &TargetPattern) -> bool {
    let need = pattern.degree_multiset();
    seq.len() >= need.len()
        && seq
            .terms()
            .iter()
            .zip(&need)
            .all(|(&d, &p)| d as usize >= p)
}

fn search(
    seq: &DegreeSequence,
    bound: usize,
    pattern: &TargetPattern,
    contains: impl Fn(&Graph) -> bool,
) -> Result<Option<Graph>, SearchError> {
    if seq.len() > bound {
        return Err(SearchError::BoundExceeded {
            n: seq.len(),
            bound,
        });
    }
    if !seq.is_graphic() {
        return Err(SearchError::NotGraphic(seq.render()));
    }
    if !degrees_dominate(seq, pattern) {
        return Ok(None);
    }
    let mut witness = None;
    for_each_realization(seq, bound, &mut |g| {
        if contains(g) {
            witness = Some(g.clone());
            true
        } else {
            false
        }
    })?;
    Ok(witness)
}

/// A realization containing `pattern`, if one exists.
pub fn oracle_decide_pattern(
    seq: &DegreeSequence,
    pattern: &TargetPattern,
    bound: usize,
) -> Result<Option<Graph>, SearchError> {
    search(seq, bound, pattern, |g| contains_pattern(g, pattern))
}

/// A realization containing K6-C4 and the placement found in it.
pub fn oracle_decide_k6c4(
    seq: &DegreeSequence,
    bound: usize,
) -> Result<Option<(Graph, K6C4Witness)>, SearchError> {
    let pattern = TargetPattern::k6_minus_c4();
    let found = search(seq, bound, &pattern, |g| find_k6c4(g).is_some())?;
    Ok(found.map(|g| {
        let w = find_k6c4(&g).expect("witness graph contains K6-C4");
        (g, w)
    }))
}

pub fn oracle_decide(
    seq: &DegreeSequence,
    target: Target,
    bound: usize,
) -> Result<Option<Graph>, SearchError> {
    match target {
        Target::K6MinusC4 => Ok(oracle_decide_k6c4(seq, bound)?.map(|(g, _)| g)),
        Target::K5MinusC4 => oracle_decide_pattern(seq, &target.pattern(), bound),
    }
}
