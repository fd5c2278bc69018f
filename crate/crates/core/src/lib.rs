//! Graphic and potentially K6-C4 / K5-C4 graphic degree sequences.
//!
//! * [`seq`]: the sequence model, exponent notation, Erdős–Gallai and
//!   laying off.
//! * [`characterize`]: closed-form deciders with reasoned verdicts.
//! * [`graphs`]: simple graphs, pattern containment, graph6 / edge list / DOT.
//! * [`search`]: realization constructors, the exhaustive oracle, sequence
//!   enumeration, the sum threshold search and decider-vs-oracle sweeps.

pub mod characterize;
pub mod graphs;
pub mod search;
pub mod seq;

pub use characterize::{
    decide_k5c4, decide_k6c4, explain, sigma_formula_k6c4, Reason, Target, Verdict,
};
pub use graphs::{Graph, TargetPattern};
pub use seq::{parse_notation, DegreeSequence};
