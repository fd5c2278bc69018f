use std::collections::BTreeSet;

use serde::Serialize;

use super::walker::{complete_greedily, havel_hakimi, Walker};
use super::SearchError;
use crate::characterize::decide_k6c4;
use crate::graphs::{degree_sequence_of, find_k6c4, Graph, K6C4Witness};
use crate::seq::DegreeSequence;

/// Havel–Hakimi realization; vertex `i` receives degree `d_{i+1}`.
pub fn realize_graphic(seq: &DegreeSequence) -> Result<Graph, SearchError> {
    if !seq.is_graphic() {
        return Err(SearchError::NotGraphic(seq.render()));
    }
    let n = seq.len();
    let mut g = Graph::new(n);
    let mut residual = seq.terms().to_vec();
    let mut active: Vec<usize> = (0..n).collect();
    let ok = havel_hakimi(&mut g, &mut residual, &mut active);
    debug_assert!(ok, "Erdős–Gallai passed but Havel–Hakimi failed");
    Ok(g)
}

/// A realization carrying K6-C4 on the six largest-degree vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealizationCertificate {
    #[serde(skip)]
    pub graph: Graph,
    pub witness: K6C4Witness,
    /// Set by [`RealizationCertificate::revalidate`].
    pub checked: bool,
}

impl RealizationCertificate {
    pub fn hosts(&self) -> [usize; 6] {
        self.witness.hosts()
    }

    /// Checks vertex `i` has degree `d_{i+1}`, the hosts are vertices 0..6,
    /// and the witness edges are present. Records the outcome in `checked`.
    pub fn revalidate(&mut self, seq: &DegreeSequence) -> bool {
        let g = &self.graph;
        let degrees_match = g.n() == seq.len()
            && (0..g.n()).all(|v| g.degree(v) == seq.terms()[v] as usize)
            && degree_sequence_of(g).terms() == seq.terms();
        self.checked =
            degrees_match && self.hosts() == [0, 1, 2, 3, 4, 5] && self.witness.holds_in(g);
        self.checked
    }

    /// Comment lines describing the host placement.
    pub fn annotations(&self) -> Vec<String> {
        let w = &self.witness;
        vec![
            format!("K6-C4 hosts: {:?}", self.hosts()),
            format!("hubs: {} {}", w.hubs[0], w.hubs[1]),
            format!(
                "matched pairs: {}-{} {}-{}",
                w.pairs[0][0], w.pairs[0][1], w.pairs[1][0], w.pairs[1][1]
            ),
        ]
    }
}

/// Builds a realization containing K6-C4 after the decider accepts.
pub fn realize_with_k6c4(seq: &DegreeSequence) -> Result<RealizationCertificate, SearchError> {
    let verdict = decide_k6c4(seq);
    if !verdict.is_potential() {
        return Err(SearchError::Rejected {
            sequence: seq.render(),
            verdict,
        });
    }
    realize_with_k6c4_unchecked(seq)
}

/// Places K6-C4 on the six largest degrees and searches for a completion,
/// without consulting the decider.
///
/// Every choice of two hubs and one of the three matchings on the other four
/// hosts is tried, skipping placements whose residual demands are the same
/// up to relabeling. The hosts are then saturated by [`Walker`]; the
/// remaining vertices are pairwise non-adjacent, so Havel–Hakimi finishes.
pub fn realize_with_k6c4_unchecked(
    seq: &DegreeSequence,
) -> Result<RealizationCertificate, SearchError> {
    if !seq.is_graphic() {
        return Err(SearchError::NotGraphic(seq.render()));
    }
    let n = seq.len();
    if n < 6 {
        return Err(SearchError::EmbeddingFailed(seq.render()));
    }
    let d = seq.terms();
    let mut seen = BTreeSet::new();
    for a in 0..6 {
        for b in a + 1..6 {
            if d[a] < 5 || d[b] < 5 {
                continue;
            }
            let o: Vec<usize> = (0..6).filter(|&x| x != a && x != b).collect();
            if o.iter().any(|&x| d[x] < 3) {
                continue;
            }
            let matchings = [
                [[o[0], o[1]], [o[2], o[3]]],
                [[o[0], o[2]], [o[1], o[3]]],
                [[o[0], o[3]], [o[1], o[2]]],
            ];
            for pairs in matchings {
                let witness = K6C4Witness {
                    hubs: [a, b],
                    pairs,
                };
                if !seen.insert(placement_key(d, &witness)) {
                    continue;
                }
                if let Some(graph) = complete_placement(d, &witness) {
                    let mut cert = RealizationCertificate {
                        graph,
                        witness,
                        checked: false,
                    };
                    if !cert.revalidate(seq) {
                        return Err(SearchError::EmbeddingFailed(seq.render()));
                    }
                    return Ok(cert);
                }
            }
        }
    }
    Err(SearchError::EmbeddingFailed(seq.render()))
}

/// Residual demands of the hubs, and of each matched pair, sorted. Two
/// placements with equal keys pose isomorphic completion problems.
fn placement_key(d: &[u32], w: &K6C4Witness) -> ([u32; 2], [[u32; 2]; 2]) {
    let mut hubs = [d[w.hubs[0]] - 5, d[w.hubs[1]] - 5];
    hubs.sort_unstable();
    let mut pairs = w.pairs.map(|[x, y]| {
        let mut p = [d[x] - 3, d[y] - 3];
        p.sort_unstable();
        p
    });
    pairs.sort_unstable();
    (hubs, pairs)
}

fn complete_placement(d: &[u32], w: &K6C4Witness) -> Option<Graph> {
    let n = d.len();
    let mut g = Graph::new(n);
    let [h1, h2] = w.hubs;
    g.add_edge(h1, h2);
    for &x in w.pairs.iter().flatten() {
        g.add_edge(h1, x);
        g.add_edge(h2, x);
    }
    for &[x, y] in &w.pairs {
        g.add_edge(x, y);
    }
    let residual: Vec<u32> = (0..n).map(|v| d[v] - g.degree(v) as u32).collect();
    let pending: Vec<bool> = (0..n).map(|v| v < 6).collect();
    let mut walker = Walker::new(g, residual, pending);
    if !walker.feasible() {
        return None;
    }
    let mut found = None;
    walker.run(&mut |w| {
        found = complete_greedily(w);
        found.is_some()
    });
    let g = found?;
    debug_assert!(find_k6c4(&g).is_some());
    Some(g)
}
