//! Degree sequences: the normalized data model, exponent notation, the
//! Erdős–Gallai test, laying off a term, and two classical special-case
//! graphicality criteria.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use thiserror::Error;

/// Upper bound on the expanded length of a parsed sequence.
pub const MAX_PARSED_LEN: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty sequence")]
    Empty,
    #[error("malformed item `{0}`")]
    Malformed(String),
    #[error("negative value in `{0}`")]
    Negative(String),
    #[error("exponent must be at least 1 in `{0}`")]
    ZeroExponent(String),
    #[error("number too large in `{0}`")]
    Overflow(String),
    #[error("sequence longer than {MAX_PARSED_LEN} terms")]
    TooLong,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LayoffError {
    #[error("layoff index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("term d_{index} = {term} exceeds n - 1 = {max}")]
    TermTooLarge { index: usize, term: u32, max: usize },
}

/// A non-increasing sequence of positive integers.
///
/// Zero terms are removed on construction; `stripped_zeros` remembers how
/// many there were. Non-graphic sequences are representable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DegreeSequence {
    terms: Vec<u32>,
    stripped_zeros: usize,
}

impl DegreeSequence {
    pub fn new<I: IntoIterator<Item = u32>>(terms: I) -> Self {
        let mut terms: Vec<u32> = terms.into_iter().collect();
        let before = terms.len();
        terms.retain(|&d| d > 0);
        let stripped_zeros = before - terms.len();
        terms.sort_unstable_by(|a, b| b.cmp(a));
        Self {
            terms,
            stripped_zeros,
        }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn terms(&self) -> &[u32] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn stripped_zeros(&self) -> usize {
        self.stripped_zeros
    }

    /// 1-based term access, `d(1)` is the largest term.
    pub fn d(&self, i: usize) -> u32 {
        self.terms[i - 1]
    }

    pub fn sigma(&self) -> u64 {
        self.terms.iter().map(|&d| u64::from(d)).sum()
    }

    pub fn sigma_is_even(&self) -> bool {
        self.sigma().is_multiple_of(2)
    }

    /// Residual sequence after laying off `d_k` (1-based `k`), zeros kept.
    ///
    /// If `d_k >= k` the first `d_k + 1` positions other than `k` lose one;
    /// otherwise the first `d_k` positions do. Position `k` is then removed
    /// and the rest re-sorted.
    pub fn layoff_raw(&self, k: usize) -> Result<Vec<u32>, LayoffError> {
        let n = self.len();
        if k == 0 || k > n {
            return Err(LayoffError::IndexOutOfRange { index: k, len: n });
        }
        let dk = self.terms[k - 1] as usize;
        if dk > n - 1 {
            return Err(LayoffError::TermTooLarge {
                index: k,
                term: self.terms[k - 1],
                max: n - 1,
            });
        }
        let mut out = self.terms.clone();
        if dk >= k {
            for (i, d) in out.iter_mut().enumerate().take(dk + 1) {
                if i != k - 1 {
                    *d -= 1;
                }
            }
        } else {
            for d in out.iter_mut().take(dk) {
                *d -= 1;
            }
        }
        out.remove(k - 1);
        out.sort_unstable_by(|a, b| b.cmp(a));
        Ok(out)
    }

    /// Normalized residual sequence; newly created zeros are stripped and
    /// added to the stripped-zero count.
    pub fn layoff(&self, k: usize) -> Result<DegreeSequence, LayoffError> {
        let raw = self.layoff_raw(k)?;
        let mut out = DegreeSequence::new(raw);
        out.stripped_zeros += self.stripped_zeros;
        Ok(out)
    }

    /// Lays off the last (smallest) term.
    pub fn layoff_last(&self) -> Result<DegreeSequence, LayoffError> {
        self.layoff(self.len())
    }

    /// Erdős–Gallai test. The empty sequence is graphic.
    pub fn is_graphic(&self) -> bool {
        erdos_gallai(&self.terms)
    }

    /// Graphicality by repeatedly laying off the smallest term.
    pub fn is_graphic_by_layoff(&self) -> bool {
        let mut cur = self.clone();
        while !cur.is_empty() {
            match cur.layoff_last() {
                Ok(next) => cur = next,
                Err(_) => return false,
            }
        }
        true
    }

    pub fn shape(&self) -> Option<SequenceShape> {
        shape_of(self)
    }

    pub fn render(&self) -> String {
        render_notation(&self.terms)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for DegreeSequence {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_notation(s)
    }
}

/// Erdős–Gallai on an arbitrary-order slice of nonnegative terms.
pub fn erdos_gallai(terms: &[u32]) -> bool {
    let mut d: Vec<u64> = terms.iter().map(|&x| u64::from(x)).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let n = d.len();
    let total: u64 = d.iter().sum();
    if total % 2 == 1 {
        return false;
    }
    if n > 0 && d[0] > (n - 1) as u64 {
        return false;
    }
    let mut prefix = 0u64;
    for r in 1..=n {
        prefix += d[r - 1];
        let r64 = r as u64;
        let tail: u64 = d[r..].iter().map(|&x| x.min(r64)).sum();
        if prefix > r64 * (r64 - 1) + tail {
            return false;
        }
    }
    true
}

/// Parses `item ("," item)*` where `item := INT | INT "^" INT`.
pub fn parse_notation(text: &str) -> Result<DegreeSequence, ParseError> {
    if text.trim().is_empty() {
        return Err(ParseError::Empty);
    }
    let mut terms = Vec::new();
    for raw in text.split(',') {
        let item = raw.trim();
        if item.is_empty() {
            return Err(ParseError::Malformed(raw.to_string()));
        }
        let (value, count) = match item.split_once('^') {
            Some((v, t)) => {
                let value = parse_int(v.trim(), item)?;
                let count = parse_int(t.trim(), item)?;
                if count == 0 {
                    return Err(ParseError::ZeroExponent(item.to_string()));
                }
                (value, count as usize)
            }
            None => (parse_int(item, item)?, 1),
        };
        if terms.len() + count > MAX_PARSED_LEN {
            return Err(ParseError::TooLong);
        }
        terms.extend(std::iter::repeat_n(value, count));
    }
    Ok(DegreeSequence::new(terms))
}

fn parse_int(tok: &str, item: &str) -> Result<u32, ParseError> {
    if let Some(rest) = tok.strip_prefix('-') {
        if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseError::Negative(item.to_string()));
        }
    }
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::Malformed(item.to_string()));
    }
    tok.parse::<u32>()
        .map_err(|_| ParseError::Overflow(item.to_string()))
}

/// Canonical exponent notation for a non-increasing slice, e.g. `6,5,3^5,2`.
pub fn render_notation(terms: &[u32]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < terms.len() {
        let v = terms[i];
        let mut j = i;
        while j < terms.len() && terms[j] == v {
            j += 1;
        }
        let run = j - i;
        if run == 1 {
            parts.push(v.to_string());
        } else {
            parts.push(format!("{v}^{run}"));
        }
        i = j;
    }
    parts.join(",")
}

/// `(d1,d2,d3,3^k,2^t,1^ones)` view of a sequence, read positionally.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SequenceShape {
    pub head: [u32; 3],
    /// Number of 3s after the head.
    pub k: usize,
    /// Number of 2s after the head.
    pub t: usize,
    pub ones: usize,
    /// Every term after the head lies in {1, 2, 3}.
    pub matches: bool,
}

/// `None` when the sequence has fewer than three terms.
pub fn shape_of(seq: &DegreeSequence) -> Option<SequenceShape> {
    let terms = seq.terms();
    if terms.len() < 3 {
        return None;
    }
    let tail = &terms[3..];
    let count = |v: u32| tail.iter().filter(|&&d| d == v).count();
    Some(SequenceShape {
        head: [terms[0], terms[1], terms[2]],
        k: count(3),
        t: count(2),
        ones: count(1),
        matches: tail.iter().all(|&d| (1..=3).contains(&d)),
    })
}

/// The hypotheses of the small-degree sufficient condition: even sum,
/// `n >= 4`, `d1 <= 3`, and not `(3^3,1)` or `(3^2,1^2)`. When they hold the
/// sequence is graphic.
pub fn lemma23_applies(seq: &DegreeSequence) -> bool {
    let t = seq.terms();
    seq.sigma_is_even() && t.len() >= 4 && t[0] <= 3 && t != [3, 3, 3, 1] && t != [3, 3, 1, 1]
}

const DEGREE_FOUR_EXCEPTIONS: [&str; 13] = [
    "4,3^2,1^2",
    "4,3,1^3",
    "4^2,2,1^2",
    "4^2,3,2,1",
    "4^3,1^2",
    "4^3,2^2",
    "4^3,3,1",
    "4^4,2",
    "4^2,3,1^3",
    "4^2,1^4",
    "4^3,2,1^2",
    "4^4,1^2",
    "4^3,1^4",
];

/// The 13 non-graphic sequences of the form `(4^x,3^y,2^z,1^m)`.
pub fn degree_four_exceptions() -> &'static [DegreeSequence] {
    static TABLE: OnceLock<Vec<DegreeSequence>> = OnceLock::new();
    TABLE.get_or_init(|| {
        DEGREE_FOUR_EXCEPTIONS
            .iter()
            .map(|s| parse_notation(s).expect("fixture parses"))
            .collect()
    })
}

/// Graphicality of `(4^x,3^y,2^z,1^m)` by exception lookup.
///
/// `None` unless the sum is even, `x+y+z+m >= 5` and `x >= 1`.
pub fn lemma24_decide(x: usize, y: usize, z: usize, m: usize) -> Option<bool> {
    let sigma = 4 * x + 3 * y + 2 * z + m;
    if !sigma.is_multiple_of(2) || x + y + z + m < 5 || x == 0 {
        return None;
    }
    let seq = degree_four_sequence(x, y, z, m);
    Some(!degree_four_exceptions().contains(&seq))
}

pub fn degree_four_sequence(x: usize, y: usize, z: usize, m: usize) -> DegreeSequence {
    let terms = std::iter::repeat_n(4, x)
        .chain(std::iter::repeat_n(3, y))
        .chain(std::iter::repeat_n(2, z))
        .chain(std::iter::repeat_n(1, m));
    DegreeSequence::new(terms)
}
