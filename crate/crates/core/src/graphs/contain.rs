use serde::Serialize;

use super::{bits_of, Graph, TargetPattern};

/// Placement of K6-C4: two adjacent hubs, four common neighbours, and two
/// disjoint edges among those four.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct K6C4Witness {
    pub hubs: [usize; 2],
    pub pairs: [[usize; 2]; 2],
}

impl K6C4Witness {
    /// The six host vertices, ascending.
    pub fn hosts(&self) -> [usize; 6] {
        let mut h = [
            self.hubs[0],
            self.hubs[1],
            self.pairs[0][0],
            self.pairs[0][1],
            self.pairs[1][0],
            self.pairs[1][1],
        ];
        h.sort_unstable();
        h
    }

    /// True iff the six vertices are distinct and all 11 edges are in `g`.
    pub fn holds_in(&self, g: &Graph) -> bool {
        let hosts = self.hosts();
        if hosts.windows(2).any(|w| w[0] == w[1]) || hosts[5] >= g.n() {
            return false;
        }
        let [h1, h2] = self.hubs;
        if !g.has_edge(h1, h2) {
            return false;
        }
        let others = [
            self.pairs[0][0],
            self.pairs[0][1],
            self.pairs[1][0],
            self.pairs[1][1],
        ];
        others
            .iter()
            .all(|&w| g.has_edge(h1, w) && g.has_edge(h2, w))
            && self.pairs.iter().all(|&[a, b]| g.has_edge(a, b))
    }
}

/// First K6-C4 placement found scanning hub pairs in edge order.
pub fn find_k6c4(g: &Graph) -> Option<K6C4Witness> {
    let mut common = vec![0u64; g.words];
    for (u1, u2) in g.edges() {
        let mut count = 0;
        for ((c, a), b) in common.iter_mut().zip(g.row(u1)).zip(g.row(u2)) {
            *c = a & b;
            count += c.count_ones();
        }
        if count < 4 {
            continue;
        }
        let w: Vec<usize> = bits_of(&common).collect();
        for (i, &a) in w.iter().enumerate() {
            for &b in &w[i + 1..] {
                if !g.has_edge(a, b) {
                    continue;
                }
                for (j, &c) in w.iter().enumerate() {
                    if c == a || c == b {
                        continue;
                    }
                    for &d in &w[j + 1..] {
                        if d != a && d != b && g.has_edge(c, d) {
                            return Some(K6C4Witness {
                                hubs: [u1, u2],
                                pairs: [[a, b], [c, d]],
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

pub fn contains_k6c4(g: &Graph) -> bool {
    find_k6c4(g).is_some()
}

/// Injective map from pattern vertices into `g` preserving pattern edges
/// (not necessarily induced). `map[p]` is the host of pattern vertex `p`.
pub fn find_pattern(g: &Graph, p: &TargetPattern) -> Option<Vec<usize>> {
    if p.vertex_count > g.n() || p.edges.len() > g.edge_count() {
        return None;
    }
    if p.vertex_count == 0 {
        return Some(Vec::new());
    }
    let pdeg = p.degrees();
    let padj = {
        let mut adj = vec![Vec::new(); p.vertex_count];
        for &(u, v) in &p.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    };
    // Highest degree first, then vertices with the most already-placed
    // neighbours so adjacency constraints bite early.
    let mut order: Vec<usize> = Vec::with_capacity(p.vertex_count);
    let mut placed = vec![false; p.vertex_count];
    while order.len() < p.vertex_count {
        let next = (0..p.vertex_count)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = padj[v].iter().filter(|&&w| placed[w]).count();
                (links, pdeg[v], std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let hdeg = g.degrees();
    let mut map = vec![usize::MAX; p.vertex_count];
    let mut used = vec![false; g.n()];
    if extend(g, &hdeg, &pdeg, &padj, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    hdeg: &[usize],
    pdeg: &[usize],
    padj: &[Vec<usize>],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let pv = order[depth];
    for h in 0..g.n() {
        if used[h] || hdeg[h] < pdeg[pv] {
            continue;
        }
        let fits = padj[pv]
            .iter()
            .all(|&pw| map[pw] == usize::MAX || g.has_edge(h, map[pw]));
        if !fits {
            continue;
        }
        map[pv] = h;
        used[h] = true;
        if extend(g, hdeg, pdeg, padj, order, depth + 1, map, used) {
            return true;
        }
        map[pv] = usize::MAX;
        used[h] = false;
    }
    false
}

pub fn contains_pattern(g: &Graph, p: &TargetPattern) -> bool {
    find_pattern(g, p).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k6_minus(edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::complete(6);
        for &(u, v) in edges {
            g.remove_edge(u, v);
        }
        g
    }

    #[test]
    fn k6c4_examples() {
        let p = TargetPattern::k6_minus_c4();
        assert!(contains_k6c4(&Graph::complete(6)));
        let w = find_k6c4(&p.graph()).unwrap();
        assert!(w.holds_in(&p.graph()));
        assert_eq!(w.hosts(), [0, 1, 2, 3, 4, 5]);
        assert!(!contains_k6c4(&Graph::cycle(6)));
        // K6 - 2K2
        assert!(contains_k6c4(&k6_minus(&[(0, 1), (2, 3)])));
    }

    #[test]
    fn containment_chain_fixtures() {
        let k6_minus_e = k6_minus(&[(0, 1)]);
        let k6_minus_p2 = k6_minus(&[(0, 1), (1, 2)]);
        assert!(contains_k6c4(&k6_minus_e));
        assert!(contains_k6c4(&k6_minus_p2));
        // K_{1,2,2} on {0..4} (parts {0}, {1,2}, {3,4}) plus vertex 5 joined
        // to all five.
        let mut g = Graph::new(6);
        for (u, v) in [
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
        ] {
            g.add_edge(u, v);
        }
        for u in 0..5 {
            g.add_edge(u, 5);
        }
        assert!(contains_k6c4(&g));
        for h in [&k6_minus_e, &k6_minus_p2, &g] {
            assert!(contains_pattern(h, &TargetPattern::k6_minus_c4()));
        }
    }

    #[test]
    fn k6_minus_c4_minus_any_edge_is_free() {
        let p = TargetPattern::k6_minus_c4();
        for &(u, v) in &p.edges {
            let mut g = p.graph();
            g.remove_edge(u, v);
            assert!(!contains_k6c4(&g));
            assert!(!contains_pattern(&g, &p));
        }
    }

    #[test]
    fn pattern_examples() {
        let k6c4 = TargetPattern::k6_minus_c4();
        let k5c4 = TargetPattern::k5_minus_c4();
        assert!(contains_pattern(&Graph::complete(6), &k6c4));
        assert!(contains_pattern(&k5c4.graph(), &k5c4));
        assert!(!contains_pattern(&Graph::star(6), &k6c4));
        assert!(contains_pattern(&Graph::complete(5), &k5c4));
        assert!(!contains_pattern(&Graph::complete(4), &k5c4));
    }

    #[test]
    fn pattern_map_is_an_embedding() {
        let p = TargetPattern::k6_minus_c4();
        let g = Graph::complete(8);
        let map = find_pattern(&g, &p).unwrap();
        let mut hosts = map.clone();
        hosts.sort_unstable();
        hosts.dedup();
        assert_eq!(hosts.len(), 6);
        for &(u, v) in &p.edges {
            assert!(g.has_edge(map[u], map[v]));
        }
    }

    #[test]
    fn witness_rejects_wrong_hosts() {
        let g = Graph::complete(6);
        let bad = K6C4Witness {
            hubs: [0, 1],
            pairs: [[2, 3], [3, 4]],
        };
        assert!(!bad.holds_in(&g));
    }
}
