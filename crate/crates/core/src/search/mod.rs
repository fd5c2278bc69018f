//! Exhaustive machinery: realization constructors, the independent oracle,
//! enumeration of graphic sequences, the sum threshold search and the
//! decider-versus-oracle sweep.

mod enumerate;
mod oracle;
mod realize;
mod sigma;
mod verify;
mod walker;

pub use enumerate::{enumerate_graphic_sequences, GraphicSequences};
pub use oracle::{
    for_each_realization, oracle_decide, oracle_decide_k6c4, oracle_decide_pattern,
    DEFAULT_ORACLE_BOUND,
};
pub use realize::{
    realize_graphic, realize_with_k6c4, realize_with_k6c4_unchecked, RealizationCertificate,
};
pub use sigma::{sigma_search, SigmaSearch};
pub use verify::{verify_range, Mismatch, VerificationReport, VerifyOptions};

use thiserror::Error;

use crate::characterize::Verdict;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("({0}) is not graphic")]
    NotGraphic(String),
    #[error("n = {n} exceeds the oracle bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("n = {n} is below the minimum {min} for this operation")]
    TooShort { n: usize, min: usize },
    #[error("decider rejected ({sequence}): {}", verdict.explain())]
    Rejected { sequence: String, verdict: Verdict },
    #[error("no K6-C4 embedding on the six largest degrees completes for ({0})")]
    EmbeddingFailed(String),
}
