use crate::seq::DegreeSequence;

/// Positive graphic sequences of a fixed length in lexicographically
/// decreasing order.
#[derive(Debug, Clone)]
pub struct GraphicSequences {
    current: Option<Vec<u32>>,
}

impl GraphicSequences {
    pub fn new(n: usize) -> Self {
        let current = (n >= 2).then(|| vec![n as u32 - 1; n]);
        Self { current }
    }

    /// Next non-increasing candidate with terms in `1..=n-1`.
    fn advance(cur: &mut [u32]) -> bool {
        let Some(i) = cur.iter().rposition(|&d| d > 1) else {
            return false;
        };
        let v = cur[i] - 1;
        cur[i..].fill(v);
        true
    }
}

impl Iterator for GraphicSequences {
    type Item = DegreeSequence;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let cur = self.current.as_mut()?;
            let candidate = cur.clone();
            if !Self::advance(cur) {
                self.current = None;
            }
            let sum: u64 = candidate.iter().map(|&d| u64::from(d)).sum();
            if sum.is_multiple_of(2) {
                let seq = DegreeSequence::new(candidate);
                if seq.is_graphic() {
                    return Some(seq);
                }
            }
        }
    }
}

pub fn enumerate_graphic_sequences(n: usize) -> GraphicSequences {
    GraphicSequences::new(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rendered(n: usize) -> Vec<String> {
        enumerate_graphic_sequences(n).map(|s| s.render()).collect()
    }

    #[test]
    fn small_lengths() {
        assert!(rendered(0).is_empty());
        assert!(rendered(1).is_empty());
        assert_eq!(rendered(2), vec!["1^2"]);
        assert_eq!(rendered(3), vec!["2^3", "2,1^2"]);
    }

    #[test]
    fn contains_expected_members_in_decreasing_order() {
        let all: Vec<DegreeSequence> = enumerate_graphic_sequences(6).collect();
        let names: Vec<String> = all.iter().map(|s| s.render()).collect();
        assert_eq!(names[0], "5^6");
        assert!(names.contains(&"5^2,3^4".to_string()));
        assert!(all.windows(2).all(|w| w[0].terms() > w[1].terms()));
        assert!(all.iter().all(|s| s.len() == 6 && s.is_graphic()));
    }

    /// Independent count: every length-n vector over 1..n-1, sorted, deduped.
    fn brute_count(n: usize) -> usize {
        let mut seen = std::collections::BTreeSet::new();
        let total = (n - 1).pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let mut v = Vec::with_capacity(n);
            for _ in 0..n {
                v.push((c % (n - 1)) as u32 + 1);
                c /= n - 1;
            }
            let s = DegreeSequence::new(v);
            if s.is_graphic() {
                seen.insert(s.terms().to_vec());
            }
        }
        seen.len()
    }

    #[test]
    fn counts_match_brute_force() {
        for n in 2..=7 {
            assert_eq!(
                enumerate_graphic_sequences(n).count(),
                brute_count(n),
                "n={n}"
            );
        }
    }
}
