//! Vertex-by-vertex realization search.
//!
//! A vertex is *processed* once all of its edges are fixed. Every fixed edge
//! therefore touches a processed vertex, so the unprocessed vertices carry no
//! edges among themselves beyond the ones present at the start. At each step
//! the pending vertex with the largest residual demand is saturated by
//! choosing neighbours among the unprocessed vertices.
//!
//! Candidates with equal residual and identical adjacency rows are twins:
//! swapping two of them maps the current partial graph to itself, so only
//! the number taken from each twin class matters. Completions are therefore
//! enumerated up to isomorphism rather than label by label.

use crate::graphs::Graph;
use crate::seq::erdos_gallai;

pub(crate) struct Walker {
    pub g: Graph,
    pub residual: Vec<u32>,
    pub unprocessed: Vec<bool>,
    pending: Vec<bool>,
    pub nodes: u64,
}

impl Walker {
    /// `pending` marks the vertices the walk saturates itself; the rest stay
    /// unprocessed until the leaf callback deals with them.
    pub fn new(g: Graph, residual: Vec<u32>, pending: Vec<bool>) -> Self {
        let n = g.n();
        Self {
            g,
            residual,
            unprocessed: vec![true; n],
            pending,
            nodes: 0,
        }
    }

    /// Necessary conditions on the unprocessed residual demand: each demand
    /// fits into the free pairs, and the demands pass Erdős–Gallai. The
    /// second test is exact when no edges join unprocessed vertices.
    pub fn feasible(&self) -> bool {
        let open: Vec<usize> = (0..self.g.n()).filter(|&x| self.unprocessed[x]).collect();
        for &x in &open {
            let r = self.residual[x] as usize;
            if r == 0 {
                continue;
            }
            let free = open
                .iter()
                .filter(|&&y| y != x && !self.g.has_edge(x, y))
                .count();
            if r > free {
                return false;
            }
        }
        let demand: Vec<u32> = open.iter().map(|&x| self.residual[x]).collect();
        erdos_gallai(&demand)
    }

    /// Depth-first walk; `leaf` runs once every pending vertex is processed
    /// and returns `true` to stop. Returns `true` if stopped.
    pub fn run(&mut self, leaf: &mut dyn FnMut(&Walker) -> bool) -> bool {
        self.nodes += 1;
        let next = (0..self.g.n())
            .filter(|&v| self.pending[v] && self.unprocessed[v])
            .max_by_key(|&v| (self.residual[v], std::cmp::Reverse(v)));
        let Some(v) = next else {
            return leaf(self);
        };
        self.unprocessed[v] = false;
        let need = self.residual[v] as usize;
        let classes = self.twin_classes(v);
        let mut counts = vec![0usize; classes.len()];
        let stop = self.choose(v, &classes, 0, need, &mut counts, leaf);
        self.unprocessed[v] = true;
        stop
    }

    /// Candidates for `v`, grouped into twin classes ordered by residual
    /// (descending) then lowest member.
    fn twin_classes(&self, v: usize) -> Vec<Vec<usize>> {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for x in 0..self.g.n() {
            if !self.unprocessed[x] || self.residual[x] == 0 || self.g.has_edge(v, x) {
                continue;
            }
            let twin = classes.iter_mut().find(|c| {
                let y = c[0];
                self.residual[y] == self.residual[x]
                    && self.pending[y] == self.pending[x]
                    && self.g.row(y) == self.g.row(x)
            });
            match twin {
                Some(c) => c.push(x),
                None => classes.push(vec![x]),
            }
        }
        classes.sort_by_key(|c| (std::cmp::Reverse(self.residual[c[0]]), c[0]));
        classes
    }

    fn choose(
        &mut self,
        v: usize,
        classes: &[Vec<usize>],
        idx: usize,
        need: usize,
        counts: &mut [usize],
        leaf: &mut dyn FnMut(&Walker) -> bool,
    ) -> bool {
        if need == 0 {
            return self.descend(v, classes, &counts[..idx], leaf);
        }
        if idx == classes.len() {
            return false;
        }
        let available: usize = classes[idx..].iter().map(Vec::len).sum();
        if available < need {
            return false;
        }
        let rest: usize = available - classes[idx].len();
        let hi = classes[idx].len().min(need);
        let lo = need.saturating_sub(rest);
        for c in (lo..=hi).rev() {
            counts[idx] = c;
            if self.choose(v, classes, idx + 1, need - c, counts, leaf) {
                counts[idx] = 0;
                return true;
            }
        }
        counts[idx] = 0;
        false
    }

    fn descend(
        &mut self,
        v: usize,
        classes: &[Vec<usize>],
        counts: &[usize],
        leaf: &mut dyn FnMut(&Walker) -> bool,
    ) -> bool {
        let chosen: Vec<usize> = classes
            .iter()
            .zip(counts)
            .flat_map(|(c, &k)| c[..k].iter().copied())
            .collect();
        for &x in &chosen {
            self.g.add_edge(v, x);
            self.residual[x] -= 1;
        }
        let saved = self.residual[v];
        self.residual[v] = 0;
        let stop = self.feasible() && self.run(leaf);
        self.residual[v] = saved;
        for &x in &chosen {
            self.g.remove_edge(v, x);
            self.residual[x] += 1;
        }
        stop
    }
}

/// Havel–Hakimi on the unprocessed vertices of `w`, which must carry no
/// edges among themselves. Returns `None` if the demand is not realizable.
pub(crate) fn complete_greedily(w: &Walker) -> Option<Graph> {
    let mut g = w.g.clone();
    let mut residual = w.residual.clone();
    let mut active: Vec<usize> = (0..g.n()).filter(|&x| w.unprocessed[x]).collect();
    if !havel_hakimi(&mut g, &mut residual, &mut active) {
        return None;
    }
    Some(g)
}

/// Repeatedly joins the vertex of largest residual to the next-largest ones
/// (ties by lowest index). `active` vertices must be pairwise non-adjacent.
pub(crate) fn havel_hakimi(g: &mut Graph, residual: &mut [u32], active: &mut Vec<usize>) -> bool {
    loop {
        active.retain(|&x| residual[x] > 0);
        if active.is_empty() {
            return true;
        }
        active.sort_by_key(|&x| (std::cmp::Reverse(residual[x]), x));
        let v = active[0];
        let need = residual[v] as usize;
        if need > active.len() - 1 {
            return false;
        }
        for &x in &active[1..=need] {
            g.add_edge(v, x);
            residual[x] -= 1;
        }
        residual[v] = 0;
    }
}
