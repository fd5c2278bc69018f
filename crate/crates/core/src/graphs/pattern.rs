use super::Graph;

/// A small fixed graph to be found inside realizations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetPattern {
    pub name: &'static str,
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
}

impl TargetPattern {
    /// K6 minus the 4-cycle 2-3-4-5-2. Vertices 0 and 1 are the hubs; the
    /// surviving matching is {2,4}, {3,5}.
    pub fn k6_minus_c4() -> Self {
        let mut edges = vec![(0, 1)];
        for hub in 0..2 {
            for w in 2..6 {
                edges.push((hub, w));
            }
        }
        edges.extend([(2, 4), (3, 5)]);
        Self {
            name: "K6-C4",
            vertex_count: 6,
            edges,
        }
    }

    /// K5 minus the 4-cycle 1-2-3-4-1: vertex 0 joined to a matching
    /// {1,3}, {2,4}.
    pub fn k5_minus_c4() -> Self {
        Self {
            name: "K5-C4",
            vertex_count: 5,
            edges: vec![(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (2, 4)],
        }
    }

    pub fn graph(&self) -> Graph {
        Graph::from_edges(self.vertex_count, &self.edges).expect("pattern edges are valid")
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Pattern degrees, non-increasing.
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}
