mod common;

use common::non_increasing;
use potgraph::seq::{
    degree_four_exceptions, degree_four_sequence, lemma23_applies, lemma24_decide,
};
use potgraph::{parse_notation, DegreeSequence};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn seq(s: &str) -> DegreeSequence {
    parse_notation(s).unwrap()
}

#[test]
fn erdos_gallai_matches_layoff_recursion_exhaustively() {
    for n in 1..=8 {
        for terms in non_increasing(n, 1, 7) {
            let s = DegreeSequence::new(terms);
            assert_eq!(s.is_graphic(), s.is_graphic_by_layoff(), "{s}");
        }
    }
}

#[test]
fn erdos_gallai_matches_layoff_recursion_on_random_sequences() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut graphic = 0;
    for _ in 0..100_000 {
        let n = rng.gen_range(1..=30);
        let max = rng.gen_range(1..=n as u32);
        let s = DegreeSequence::new((0..n).map(|_| rng.gen_range(1..=max)));
        let a = s.is_graphic();
        assert_eq!(a, s.is_graphic_by_layoff(), "{s}");
        graphic += usize::from(a);
    }
    // Guard against a generator that only produces one answer.
    assert!(graphic > 1_000 && graphic < 99_000, "{graphic}");
}

#[test]
fn every_layoff_preserves_graphicality() {
    let mut checked = 0;
    for n in 1..=8 {
        for terms in non_increasing(n, 1, 7) {
            let s = DegreeSequence::new(terms);
            for k in 1..=n {
                match s.layoff(k) {
                    Ok(r) => {
                        assert_eq!(s.is_graphic(), r.is_graphic(), "{s} k={k}");
                        checked += 1;
                    }
                    Err(_) => assert!(!s.is_graphic(), "{s} k={k}"),
                }
            }
        }
    }
    assert!(checked > 10_000);
}

#[test]
fn graphic_sequences_have_even_sum() {
    for n in 1..=8 {
        for terms in non_increasing(n, 1, 7) {
            let s = DegreeSequence::new(terms);
            if s.is_graphic() {
                assert!(s.sigma_is_even(), "{s}");
            }
        }
    }
}

#[test]
fn small_degree_sequences_are_graphic_except_two() {
    let excluded = [seq("3^3,1"), seq("3^2,1^2")];
    for s in &excluded {
        assert!(!s.is_graphic());
        assert!(!lemma23_applies(s));
    }
    for n in 4..=10 {
        for terms in non_increasing(n, 1, 3) {
            let s = DegreeSequence::new(terms);
            if !s.sigma_is_even() {
                assert!(!lemma23_applies(&s));
                continue;
            }
            let is_excluded = excluded.contains(&s);
            assert_eq!(lemma23_applies(&s), !is_excluded, "{s}");
            assert_eq!(s.is_graphic(), !is_excluded, "{s}");
        }
    }
}

#[test]
fn degree_four_exceptions_are_exactly_the_non_graphic_ones() {
    let mut found = Vec::new();
    for total in 5..=10 {
        for x in 1..=total {
            for y in 0..=total - x {
                for z in 0..=total - x - y {
                    let m = total - x - y - z;
                    let s = degree_four_sequence(x, y, z, m);
                    match lemma24_decide(x, y, z, m) {
                        None => assert!(!s.sigma_is_even(), "{s}"),
                        Some(g) => {
                            assert_eq!(g, s.is_graphic(), "{s}");
                            if !g {
                                found.push(s);
                            }
                        }
                    }
                }
            }
        }
    }
    found.sort_by(|a, b| b.terms().cmp(a.terms()));
    let mut listed = degree_four_exceptions().to_vec();
    listed.sort_by(|a, b| b.terms().cmp(a.terms()));
    assert_eq!(found, listed);
}

proptest! {
    #[test]
    fn notation_round_trips(terms in prop::collection::vec(1u32..40, 1..60)) {
        let s = DegreeSequence::new(terms.clone());
        prop_assert_eq!(parse_notation(&s.render()).unwrap(), s.clone());
        let plain = terms.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        prop_assert_eq!(parse_notation(&plain).unwrap(), s);
    }

    #[test]
    fn layoff_shortens_by_one(terms in prop::collection::vec(1u32..12, 1..14), k in 1usize..14) {
        let s = DegreeSequence::new(terms);
        if let Ok(raw) = s.layoff_raw(k) {
            prop_assert_eq!(raw.len(), s.len() - 1);
            let lost = s.sigma() - raw.iter().map(|&d| u64::from(d)).sum::<u64>();
            prop_assert_eq!(lost, 2 * u64::from(s.d(k)));
        }
    }
}
