//! Canonical forms and small-graph enumeration.
//!
//! The canonical form of a graph is the minimum adjacency bit string over
//! all vertex permutations, found by a pruned placement search. Exact and
//! deterministic; meant for the desk-scale graphs of the forbidden-family
//! machinery (n <= ~10).

use crate::graph::Graph;
use std::collections::HashSet;

/// Canonical labeling of a graph.
///
/// `chunks[i]` packs the adjacency bits of the vertex at canonical position
/// `i` towards positions `0..i` (position 0 most significant), so comparing
/// chunk vectors lexicographically compares the underlying bit strings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    pub chunks: Vec<u64>,
    /// `perm[pos]` is the original vertex placed at canonical position `pos`.
    pub perm: Vec<usize>,
}

impl CanonicalForm {
    pub fn key(&self) -> (usize, Vec<u64>) {
        (self.n, self.chunks.clone())
    }

    /// Rebuilds the canonically labeled graph.
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for i in 1..self.n {
            for j in 0..i {
                if self.chunks[i] >> (i - 1 - j) & 1 == 1 {
                    edges.push((j, i));
                }
            }
        }
        Graph::from_edges(self.n, &edges)
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.n();
    assert!(n <= 64, "canonical form limited to n <= 64");
    let mut best: Option<Vec<u64>> = None;
    let mut best_perm = Vec::new();
    let mut placed = Vec::with_capacity(n);
    let mut chunks = Vec::with_capacity(n);
    let mut used = vec![false; n];
    place(
        g,
        &mut placed,
        &mut chunks,
        &mut used,
        true,
        &mut best,
        &mut best_perm,
    );
    CanonicalForm {
        n,
        chunks: best.unwrap_or_default(),
        perm: best_perm,
    }
}

fn place(
    g: &Graph,
    placed: &mut Vec<usize>,
    chunks: &mut Vec<u64>,
    used: &mut [bool],
    tight: bool,
    best: &mut Option<Vec<u64>>,
    best_perm: &mut Vec<usize>,
) {
    let n = g.n();
    let depth = placed.len();
    if depth == n {
        if best.as_ref().is_none_or(|b| chunks[..] < b[..]) {
            *best = Some(chunks.clone());
            *best_perm = placed.clone();
        }
        return;
    }
    let mut cands: Vec<(u64, usize)> = (0..n)
        .filter(|&v| !used[v])
        .map(|v| {
            let mut c = 0u64;
            for (j, &p) in placed.iter().enumerate() {
                if g.has_edge(v, p) {
                    c |= 1 << (depth - 1 - j);
                }
            }
            (c, v)
        })
        .collect();
    cands.sort_unstable();
    for (c, v) in cands {
        let mut child_tight = tight;
        if tight {
            if let Some(b) = best.as_ref() {
                if c > b[depth] {
                    break; // candidates sorted: nothing better remains
                }
                child_tight = c == b[depth];
            }
        }
        placed.push(v);
        chunks.push(c);
        used[v] = true;
        place(g, placed, chunks, used, child_tight, best, best_perm);
        used[v] = false;
        chunks.pop();
        placed.pop();
    }
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n()
        && degree_signature(a) == degree_signature(b)
        && canonical_form(a).chunks == canonical_form(b).chunks
}

/// Sorted degree multiset, the cheap prefilter in front of canonical forms.
pub fn degree_signature(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}

/// One-vertex extensions of the given canonical representatives, dedup'd up
/// to isomorphism. Output graphs are canonically labeled; order follows the
/// enumeration order, so it is deterministic.
pub fn extend_canonical(level: &[Graph]) -> Vec<Graph> {
    let mut seen: HashSet<(usize, Vec<u64>)> = HashSet::new();
    let mut out = Vec::new();
    for g in level {
        let n = g.n();
        let edges_base = g.edges();
        for mask in 0u64..(1u64 << n) {
            let mut edges = edges_base.clone();
            for j in 0..n {
                if mask >> j & 1 == 1 {
                    edges.push((j, n));
                }
            }
            let h = Graph::from_edges(n + 1, &edges);
            let cf = canonical_form(&h);
            if seen.insert(cf.key()) {
                out.push(cf.to_graph());
            }
        }
    }
    out
}

/// Canonical representatives of all graphs on 1..=`max_n` vertices,
/// `levels[i]` holding the graphs on `i+1` vertices.
pub fn enumerate_graphs(max_n: usize) -> Vec<Vec<Graph>> {
    let mut levels: Vec<Vec<Graph>> = Vec::new();
    if max_n == 0 {
        return levels;
    }
    levels.push(vec![Graph::empty(1)]);
    for _ in 1..max_n {
        let next = extend_canonical(levels.last().unwrap());
        levels.push(next);
    }
    levels
}
