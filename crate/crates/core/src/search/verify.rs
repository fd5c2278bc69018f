use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use super::oracle::{oracle_decide, DEFAULT_ORACLE_BOUND};
use super::{enumerate_graphic_sequences, SearchError};
use crate::characterize::Target;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub oracle_bound: usize,
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            oracle_bound: DEFAULT_ORACLE_BOUND,
            jobs: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub sequence: String,
    pub decider_potential: bool,
    pub decider_reason: String,
    pub oracle_potential: bool,
}

/// Decider-versus-oracle comparison over every graphic sequence of length
/// `n`. Mismatches are listed in enumeration order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub target: Target,
    pub total_sequences: usize,
    pub agreements: usize,
    pub mismatches: Vec<Mismatch>,
    /// Excluded from JSON so reports are byte-stable.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_table(&self) -> String {
        let mut out = format!(
            "{} sequences checked, {} mismatches (n={}, target={})\n",
            self.total_sequences,
            self.mismatches.len(),
            self.n,
            self.target
        );
        if !self.mismatches.is_empty() {
            let _ = writeln!(
                out,
                "{:<28} {:<8} {:<24} oracle",
                "sequence", "decider", "reason"
            );
            for m in &self.mismatches {
                let _ = writeln!(
                    out,
                    "{:<28} {:<8} {:<24} {}",
                    m.sequence,
                    yes_no(m.decider_potential),
                    m.decider_reason,
                    yes_no(m.oracle_potential)
                );
            }
        }
        out
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn verify_range(
    n: usize,
    target: Target,
    opts: &VerifyOptions,
) -> Result<VerificationReport, SearchError> {
    if n > opts.oracle_bound {
        return Err(SearchError::BoundExceeded {
            n,
            bound: opts.oracle_bound,
        });
    }
    let start = Instant::now();
    let run = || {
        let seqs: Vec<_> = enumerate_graphic_sequences(n).collect();
        let outcomes: Vec<Option<Mismatch>> = seqs
            .par_iter()
            .map(|s| {
                let verdict = target.decide(s);
                let oracle = oracle_decide(s, target, opts.oracle_bound)?.is_some();
                Ok((verdict.is_potential() != oracle).then(|| Mismatch {
                    sequence: s.render(),
                    decider_potential: verdict.is_potential(),
                    decider_reason: verdict.reason.code(),
                    oracle_potential: oracle,
                }))
            })
            .collect::<Result<_, SearchError>>()?;
        Ok::<_, SearchError>(outcomes)
    };
    let outcomes = match opts.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .expect("thread pool")
            .install(run)?,
        None => run()?,
    };
    let total_sequences = outcomes.len();
    let mismatches: Vec<Mismatch> = outcomes.into_iter().flatten().collect();
    Ok(VerificationReport {
        n,
        target,
        total_sequences,
        agreements: total_sequences - mismatches.len(),
        mismatches,
        wall_time: start.elapsed(),
    })
}
