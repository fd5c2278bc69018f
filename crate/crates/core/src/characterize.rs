//! Closed-form deciders for potentially K6-C4-graphic and potentially
//! K5-C4-graphic sequences.
//!
//! Conditions are checked in a fixed order (graphic, length, degree
//! thresholds, head-sum bound, exception lists) and the verdict reports the
//! first one that fails.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graphs::TargetPattern;
use crate::seq::{parse_notation, shape_of, DegreeSequence, ParseError};

/// Raw text of the fixed K6-C4 exception table.
pub const K6C4_EXCEPTIONS_TXT: &str = include_str!("../data/k6c4_exceptions.txt");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Target {
    #[serde(rename = "k6-c4")]
    K6MinusC4,
    #[serde(rename = "k5-c4")]
    K5MinusC4,
}

impl Target {
    pub fn slug(self) -> &'static str {
        match self {
            Target::K6MinusC4 => "k6-c4",
            Target::K5MinusC4 => "k5-c4",
        }
    }

    pub fn pattern(self) -> TargetPattern {
        match self {
            Target::K6MinusC4 => TargetPattern::k6_minus_c4(),
            Target::K5MinusC4 => TargetPattern::k5_minus_c4(),
        }
    }

    /// Smallest length for which the decider goes past `TOO_SHORT`.
    pub fn min_order(self) -> usize {
        match self {
            Target::K6MinusC4 => 6,
            Target::K5MinusC4 => 5,
        }
    }

    pub fn decide(self, seq: &DegreeSequence) -> Verdict {
        match self {
            Target::K6MinusC4 => decide_k6c4(seq),
            Target::K5MinusC4 => decide_k5c4(seq),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

impl FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "k6-c4" | "k6c4" => Ok(Target::K6MinusC4),
            "k5-c4" | "k5c4" => Ok(Target::K5MinusC4),
            other => Err(format!(
                "unknown target `{other}` (expected k6-c4 or k5-c4)"
            )),
        }
    }
}

/// Why a sequence was accepted or rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reason {
    NotGraphic,
    TooShort {
        n: usize,
        min: usize,
    },
    /// K6-C4: `d2 < 5`.
    Cond1D2 {
        d2: u32,
    },
    /// K6-C4: `d6 < 3`.
    Cond1D6 {
        d6: u32,
    },
    /// K6-C4: `d1+d2+d3 > n+2k+t+1` for a `(d1,d2,d3,3^k,2^t,1^*)` sequence.
    Cond2Sum {
        sum: u64,
        bound: u64,
    },
    /// K6-C4: index into the fixed exception table.
    Cond3Fixed(usize),
    /// K6-C4: `(n-1,5,3^5,1^(n-7))`.
    Cond3FamilyA,
    /// K6-C4: `(n-1,5,3^6,1^(n-8))`.
    Cond3FamilyB,
    /// K5-C4: `d1 < 4`.
    K5D1 {
        d1: u32,
    },
    /// K5-C4: `d5 < 2`.
    K5D5 {
        d5: u32,
    },
    /// K5-C4: index into `(4,2^5), (4,2^6)`.
    K5Fixed(usize),
    /// K5-C4: `((n-2)^2,2^(n-2))`.
    K5FamilySquare,
    /// K5-C4: `(n-k,k+i,2^i,1^(n-i-2))`.
    K5FamilyKi {
        k: usize,
        i: usize,
    },
    Ok,
}

impl Reason {
    /// Stable machine-readable code, e.g. `COND3_FIXED(0)`.
    pub fn code(&self) -> String {
        match self {
            Reason::NotGraphic => "NOT_GRAPHIC".into(),
            Reason::TooShort { .. } => "TOO_SHORT".into(),
            Reason::Cond1D2 { .. } => "COND1_D2".into(),
            Reason::Cond1D6 { .. } => "COND1_D6".into(),
            Reason::Cond2Sum { .. } => "COND2_SUM".into(),
            Reason::Cond3Fixed(id) => format!("COND3_FIXED({id})"),
            Reason::Cond3FamilyA => "COND3_FAMILY_A".into(),
            Reason::Cond3FamilyB => "COND3_FAMILY_B".into(),
            Reason::K5D1 { .. } => "K5_D1".into(),
            Reason::K5D5 { .. } => "K5_D5".into(),
            Reason::K5Fixed(id) => format!("K5_FIXED({id})"),
            Reason::K5FamilySquare => "K5_FAMILY_SQUARE".into(),
            Reason::K5FamilyKi { k, i } => format!("K5_FAMILY_KI({k},{i})"),
            Reason::Ok => "OK".into(),
        }
    }

    pub fn is_ok(&self) -> bool {
        matches!(self, Reason::Ok)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub target: Target,
    pub reason: Reason,
    /// Rendered exception sequence when the reason is a list match.
    pub matched_exception: Option<String>,
}

impl Verdict {
    fn new(target: Target, reason: Reason) -> Self {
        Self {
            target,
            reason,
            matched_exception: None,
        }
    }

    fn exception(target: Target, reason: Reason, seq: &DegreeSequence) -> Self {
        Self {
            target,
            reason,
            matched_exception: Some(seq.render()),
        }
    }

    /// Yes exactly when the reason is `OK`.
    pub fn is_potential(&self) -> bool {
        self.reason.is_ok()
    }

    pub fn explain(&self) -> String {
        explain(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("line {line}: {source}")]
    Parse { line: usize, source: ParseError },
    #[error("entry ({0}) is not graphic")]
    NotGraphic(String),
    #[error("entry ({0}) listed twice")]
    Duplicate(String),
}

/// The two n-parameterized K6-C4 exception families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum K6C4Family {
    /// `(n-1,5,3^5,1^(n-7))`, `n >= 7`.
    A,
    /// `(n-1,5,3^6,1^(n-8))`, `n >= 8`.
    B,
}

impl K6C4Family {
    fn threes(self) -> usize {
        match self {
            K6C4Family::A => 5,
            K6C4Family::B => 6,
        }
    }

    pub fn min_n(self) -> usize {
        self.threes() + 2
    }

    pub fn descriptor(self) -> &'static str {
        match self {
            K6C4Family::A => "(n-1,5,3^5,1^(n-7))",
            K6C4Family::B => "(n-1,5,3^6,1^(n-8))",
        }
    }

    pub fn instance(self, n: usize) -> Option<DegreeSequence> {
        if n < self.min_n() {
            return None;
        }
        let ones = n - self.min_n();
        let terms = [n as u32 - 1, 5]
            .into_iter()
            .chain(std::iter::repeat_n(3, self.threes()))
            .chain(std::iter::repeat_n(1, ones));
        Some(DegreeSequence::new(terms))
    }

    pub fn matches(self, seq: &DegreeSequence) -> bool {
        self.instance(seq.len())
            .is_some_and(|inst| inst.terms() == seq.terms())
    }
}

/// Exception lists for the K6-C4 decider.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionTable {
    pub fixed: Vec<DegreeSequence>,
    pub families: [K6C4Family; 2],
}

impl ExceptionTable {
    /// Parses one sequence per line; `#` lines and blanks are skipped. Every
    /// entry must be graphic and appear once.
    pub fn parse(text: &str) -> Result<Self, TableError> {
        let mut fixed: Vec<DegreeSequence> = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let seq = parse_notation(line).map_err(|source| TableError::Parse {
                line: idx + 1,
                source,
            })?;
            if !seq.is_graphic() {
                return Err(TableError::NotGraphic(seq.render()));
            }
            if fixed.iter().any(|s| s.terms() == seq.terms()) {
                return Err(TableError::Duplicate(seq.render()));
            }
            fixed.push(seq);
        }
        Ok(Self {
            fixed,
            families: [K6C4Family::A, K6C4Family::B],
        })
    }

    /// The shipped table.
    pub fn standard() -> &'static ExceptionTable {
        static TABLE: OnceLock<ExceptionTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            ExceptionTable::parse(K6C4_EXCEPTIONS_TXT).expect("shipped exception table is valid")
        })
    }

    pub fn fixed_index(&self, seq: &DegreeSequence) -> Option<usize> {
        self.fixed.iter().position(|s| s.terms() == seq.terms())
    }
}

/// Potentially K6-C4-graphic decision.
pub fn decide_k6c4(seq: &DegreeSequence) -> Verdict {
    let target = Target::K6MinusC4;
    let verdict = |r| Verdict::new(target, r);
    if !seq.is_graphic() {
        return verdict(Reason::NotGraphic);
    }
    let n = seq.len();
    if n < 6 {
        return verdict(Reason::TooShort { n, min: 6 });
    }
    if seq.d(2) < 5 {
        return verdict(Reason::Cond1D2 { d2: seq.d(2) });
    }
    if seq.d(6) < 3 {
        return verdict(Reason::Cond1D6 { d6: seq.d(6) });
    }
    if let Some(shape) = shape_of(seq).filter(|s| s.matches) {
        let sum: u64 = shape.head.iter().map(|&d| u64::from(d)).sum();
        let bound = (n + 2 * shape.k + shape.t + 1) as u64;
        if sum > bound {
            return verdict(Reason::Cond2Sum { sum, bound });
        }
    }
    let table = ExceptionTable::standard();
    if let Some(id) = table.fixed_index(seq) {
        return Verdict::exception(target, Reason::Cond3Fixed(id), seq);
    }
    for (family, reason) in [
        (K6C4Family::A, Reason::Cond3FamilyA),
        (K6C4Family::B, Reason::Cond3FamilyB),
    ] {
        if family.matches(seq) {
            return Verdict::exception(target, reason, seq);
        }
    }
    verdict(Reason::Ok)
}

const K5C4_FIXED: [&[u32]; 2] = [&[4, 2, 2, 2, 2, 2], &[4, 2, 2, 2, 2, 2, 2]];

/// Potentially K5-C4-graphic decision.
pub fn decide_k5c4(seq: &DegreeSequence) -> Verdict {
    let target = Target::K5MinusC4;
    let verdict = |r| Verdict::new(target, r);
    if !seq.is_graphic() {
        return verdict(Reason::NotGraphic);
    }
    let n = seq.len();
    if n < 5 {
        return verdict(Reason::TooShort { n, min: 5 });
    }
    if seq.d(1) < 4 {
        return verdict(Reason::K5D1 { d1: seq.d(1) });
    }
    if seq.d(5) < 2 {
        return verdict(Reason::K5D5 { d5: seq.d(5) });
    }
    if let Some(id) = K5C4_FIXED.iter().position(|f| *f == seq.terms()) {
        return Verdict::exception(target, Reason::K5Fixed(id), seq);
    }
    if seq.terms() == k5c4_square(n).terms() {
        return Verdict::exception(target, Reason::K5FamilySquare, seq);
    }
    for (k, i) in k5c4_family_params(n) {
        if k5c4_family(n, k, i).terms() == seq.terms() {
            return Verdict::exception(target, Reason::K5FamilyKi { k, i }, seq);
        }
    }
    verdict(Reason::Ok)
}

/// `((n-2)^2, 2^(n-2))`.
pub fn k5c4_square(n: usize) -> DegreeSequence {
    let top = n.saturating_sub(2) as u32;
    DegreeSequence::new(
        [top, top]
            .into_iter()
            .chain(std::iter::repeat_n(2, n.saturating_sub(2))),
    )
}

/// `(n-k, k+i, 2^i, 1^(n-i-2))`; requires `i + 2 <= n` and `k <= n`.
pub fn k5c4_family(n: usize, k: usize, i: usize) -> DegreeSequence {
    let terms = [(n - k) as u32, (k + i) as u32]
        .into_iter()
        .chain(std::iter::repeat_n(2, i))
        .chain(std::iter::repeat_n(1, n - i - 2));
    DegreeSequence::new(terms)
}

/// All `(k, i)` parameters of the K5-C4 family at length `n`.
pub fn k5c4_family_params(n: usize) -> Vec<(usize, usize)> {
    let kmax = ((n.saturating_sub(1)) / 2).saturating_sub(1);
    (1..=kmax)
        .flat_map(|k| (3..=n.saturating_sub(2 * k)).map(move |i| (k, i)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("sigma formula needs n >= 6, got {0}")]
pub struct DomainError(pub usize);

/// Smallest even sum forcing a K6-C4 realization: `6n - 10` for `n >= 6`.
pub fn sigma_formula_k6c4(n: usize) -> Result<u64, DomainError> {
    if n < 6 {
        return Err(DomainError(n));
    }
    Ok(6 * n as u64 - 10)
}

/// One-line explanation of a verdict.
pub fn explain(v: &Verdict) -> String {
    let exception = || {
        format!(
            "matches exception ({})",
            v.matched_exception.as_deref().unwrap_or("")
        )
    };
    match v.reason {
        Reason::NotGraphic => "not graphic".into(),
        Reason::TooShort { n, min } => format!("too short: n = {n} < {min}"),
        Reason::Cond1D2 { d2 } => format!("fails condition (1): d2 = {d2} < 5"),
        Reason::Cond1D6 { d6 } => format!("fails condition (1): d6 = {d6} < 3"),
        Reason::Cond2Sum { sum, bound } => {
            format!("fails condition (2): d1+d2+d3 = {sum} > n+2k+t+1 = {bound}")
        }
        Reason::Cond3Fixed(_) => exception(),
        Reason::Cond3FamilyA => format!("{} in family {}", exception(), K6C4Family::A.descriptor()),
        Reason::Cond3FamilyB => format!("{} in family {}", exception(), K6C4Family::B.descriptor()),
        Reason::K5D1 { d1 } => format!("fails condition (1): d1 = {d1} < 4"),
        Reason::K5D5 { d5 } => format!("fails condition (1): d5 = {d5} < 2"),
        Reason::K5Fixed(_) => exception(),
        Reason::K5FamilySquare => format!("{} in family ((n-2)^2,2^(n-2))", exception()),
        Reason::K5FamilyKi { k, i } => {
            format!(
                "{} in family (n-k,k+i,2^i,1^(n-i-2)) with k={k}, i={i}",
                exception()
            )
        }
        Reason::Ok => match v.target {
            Target::K6MinusC4 => "potentially K6-C4-graphic".into(),
            Target::K5MinusC4 => "potentially K5-C4-graphic".into(),
        },
    }
}
