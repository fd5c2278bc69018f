//! Helpers shared by the integration tests.
#![allow(dead_code)]

use potgraph::Graph;
use rand::Rng;

/// Every non-increasing sequence of `len` terms drawn from `lo..=hi`.
pub fn non_increasing(len: usize, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    fn go(len: usize, lo: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in (lo..=cap).rev() {
            cur.push(v);
            go(len, lo, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if lo <= hi {
        go(len, lo, hi, &mut Vec::new(), &mut out);
    }
    out
}

/// Each pair present independently with probability `p`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Graph on `n` vertices whose edge `i` (in `u<v` lexicographic order) is
/// present iff bit `i` of `mask` is set.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::new(n);
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> i & 1 == 1 {
                g.add_edge(u, v);
            }
            i += 1;
        }
    }
    g
}

/// Smallest edge mask over all vertex permutations. Exponential; small `n`
/// only.
pub fn canonical_mask(g: &Graph) -> u64 {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    permute(&mut perm, 0, &mut |p| {
        let mut mask = 0u64;
        let mut i = 0;
        for u in 0..n {
            for v in u + 1..n {
                if g.has_edge(p[u], p[v]) {
                    mask |= 1 << i;
                }
                i += 1;
            }
        }
        best = best.min(mask);
    });
    best
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}
