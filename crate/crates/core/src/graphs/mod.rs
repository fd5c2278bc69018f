//! Simple undirected graphs on dense 0-based vertex labels.

mod contain;
mod format;
mod pattern;

pub use contain::{contains_k6c4, contains_pattern, find_k6c4, find_pattern, K6C4Witness};
pub use format::{
    decode_graph6, encode_graph6, parse_edge_list, write_dot, write_edge_list, FormatError,
};
pub use pattern::TargetPattern;

use thiserror::Error;

use crate::seq::DegreeSequence;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
}

/// Adjacency stored as one bit row per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Self {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            let v = (u + 1) % n;
            if u != v && !g.has_edge(u, v) {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn star(n: usize) -> Self {
        let mut g = Self::new(n);
        for v in 1..n {
            g.add_edge(0, v);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.set(u, v, true);
        Ok(())
    }

    /// Panics on loops or out-of-range vertices.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "bad edge {u} {v}");
        self.set(u, v, true);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.set(u, v, false);
    }

    fn set(&mut self, u: usize, v: usize, on: bool) {
        let (wu, bu) = (u * self.words + v / 64, v % 64);
        let (wv, bv) = (v * self.words + u / 64, u % 64);
        if on {
            self.bits[wu] |= 1 << bu;
            self.bits[wv] |= 1 << bv;
        } else {
            self.bits[wu] &= !(1 << bu);
            self.bits[wv] &= !(1 << bv);
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Bit row of `u`: bit `v` of word `v / 64` is set iff `uv` is an edge.
    pub fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits_of(self.row(u))
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        degree_sequence_of(self)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Set bit positions of a multi-word row, ascending.
pub(crate) fn bits_of(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(wi * 64 + b)
        })
    })
}

/// Sorted degree vector with zeros stripped (and counted).
pub fn degree_sequence_of(g: &Graph) -> DegreeSequence {
    DegreeSequence::new(g.degrees().into_iter().map(|d| d as u32))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacency_is_symmetric_and_loop_free() {
        let g = Graph::from_edges(70, &[(0, 69), (3, 65), (1, 2)]).unwrap();
        assert!(g.has_edge(69, 0) && g.has_edge(0, 69));
        assert!(g.has_edge(65, 3));
        assert!(!g.has_edge(0, 0));
        assert_eq!(g.edge_count(), 3);
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 69), (1, 2), (3, 65)]
        );
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(Graph::complete(6).degree_sequence().render(), "5^6");
        assert_eq!(
            TargetPattern::k6_minus_c4()
                .graph()
                .degree_sequence()
                .render(),
            "5^2,3^4"
        );
        assert_eq!(Graph::cycle(6).degree_sequence().render(), "2^6");
        let g = Graph::from_edges(4, &[(0, 1)]).unwrap();
        let d = g.degree_sequence();
        assert_eq!(d.terms(), &[1, 1]);
        assert_eq!(d.stripped_zeros(), 2);
    }

    #[test]
    fn remove_edge_clears_both_directions() {
        let mut g = Graph::complete(4);
        g.remove_edge(2, 1);
        assert!(!g.has_edge(1, 2) && !g.has_edge(2, 1));
        assert_eq!(g.edge_count(), 5);
    }
}
