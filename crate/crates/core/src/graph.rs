//! Simple undirected graphs over 0-indexed vertices with bitset adjacency rows.
//!
//! Graph values are immutable after construction; deletion and induction
//! return fresh values together with an index map, so the branching solvers
//! can share subgraphs freely.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

const WORD_BITS: usize = 64;

/// A set of vertices of a host graph, stored as a bitset.
///
/// All set bits must be smaller than the host vertex count `nbits`.
/// Binary operations require both operands to share the same host size.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    nbits: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(nbits: usize) -> Self {
        VertexSet {
            nbits,
            words: vec![0; nbits.div_ceil(WORD_BITS)],
        }
    }

    pub fn full(nbits: usize) -> Self {
        let mut s = Self::new(nbits);
        for w in 0..s.words.len() {
            s.words[w] = u64::MAX;
        }
        s.trim();
        s
    }

    pub fn singleton(nbits: usize, v: usize) -> Self {
        let mut s = Self::new(nbits);
        s.insert(v);
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(nbits: usize, iter: I) -> Self {
        let mut s = Self::new(nbits);
        for v in iter {
            s.insert(v);
        }
        s
    }

    fn trim(&mut self) {
        let rem = self.nbits % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn nbits(&self) -> usize {
        self.nbits
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < self.nbits);
        self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.nbits, "vertex {v} out of range 0..{}", self.nbits);
        self.words[v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.nbits, "vertex {v} out of range 0..{}", self.nbits);
        self.words[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
    }

    pub fn with(&self, v: usize) -> Self {
        let mut s = self.clone();
        s.insert(v);
        s
    }

    pub fn without(&self, v: usize) -> Self {
        let mut s = self.clone();
        s.remove(v);
        s
    }

    fn check_host(&self, other: &Self) {
        assert_eq!(
            self.nbits, other.nbits,
            "vertex sets over different hosts ({} vs {})",
            self.nbits, other.nbits
        );
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_host(other);
        let mut s = self.clone();
        for (a, b) in s.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
        s
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check_host(other);
        let mut s = self.clone();
        for (a, b) in s.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.check_host(other);
        let mut s = self.clone();
        for (a, b) in s.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        s
    }

    /// Complement within the host vertex range.
    pub fn complement(&self) -> Self {
        let mut s = self.clone();
        for w in s.words.iter_mut() {
            *w = !*w;
        }
        s.trim();
        s
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_host(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check_host(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * WORD_BITS + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Errors from reading DIMACS edge-format text.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum DimacsError {
    #[error("missing 'p edge <n> <m>' header")]
    MissingHeader,
    #[error("line {line}: malformed header: {msg}")]
    BadHeader { line: usize, msg: String },
    #[error("line {line}: endpoint {vertex} out of range 1..={n}")]
    EndpointOutOfRange { line: usize, vertex: i64, n: usize },
    #[error("line {line}: loop edge at vertex {vertex}")]
    LoopEdge { line: usize, vertex: usize },
    #[error("line {line}: unrecognized line {content:?}")]
    UnknownLine { line: usize, content: String },
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// An immutable simple graph: symmetric bitset adjacency, zero diagonal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            rows: vec![VertexSet::new(n); n],
        }
    }

    /// Builds a graph from an edge list. Panics on loops or out-of-range
    /// endpoints; parse untrusted input through [`Graph::parse_dimacs`] instead.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            assert!(u < n && v < n, "edge ({u},{v}) out of range for n={n}");
            assert_ne!(u, v, "loop edge at {u}");
            g.rows[u].insert(v);
            g.rows[v].insert(u);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 0..n {
            g.rows[v] = VertexSet::full(n).without(v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + self.n, v + self.n)));
        Graph::from_edges(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edge list with u < v, sorted ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.rows[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn full_vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph {
            n: self.n,
            rows: Vec::with_capacity(self.n),
        };
        for v in 0..self.n {
            g.rows.push(self.rows[v].complement().without(v));
        }
        g
    }

    /// Induced subgraph on `s`. The returned map sends new indices to old
    /// ones (`map[new] = old`); new indices follow ascending old order.
    pub fn induced_subgraph(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        assert_eq!(s.nbits(), self.n, "vertex set over a different host");
        let map: Vec<usize> = s.iter().collect();
        let m = map.len();
        let mut inv = vec![usize::MAX; self.n];
        for (new, &old) in map.iter().enumerate() {
            inv[old] = new;
        }
        let mut g = Graph::empty(m);
        for (new, &old) in map.iter().enumerate() {
            for w in self.rows[old].intersection(s).iter() {
                if inv[w] > new {
                    g.rows[new].insert(inv[w]);
                    g.rows[inv[w]].insert(new);
                }
            }
        }
        (g, map)
    }

    /// Deletes `s`, returning the graph on the remaining vertices plus the
    /// new-to-old index map.
    pub fn delete_vertices(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        self.induced_subgraph(&s.complement())
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        assert_eq!(s.nbits(), self.n, "vertex set over a different host");
        s.iter().all(|v| s.without(v).is_subset(&self.rows[v]))
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        assert_eq!(s.nbits(), self.n, "vertex set over a different host");
        s.iter().all(|v| s.is_disjoint(&self.rows[v]))
    }

    /// Parses DIMACS edge format: a `p edge n m` header and `e u v` lines
    /// with 1-indexed endpoints. Duplicate edge lines are idempotent.
    pub fn parse_dimacs(text: &str) -> Result<Graph, DimacsError> {
        let mut graph: Option<Graph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('c') {
                continue;
            }
            let mut tok = trimmed.split_whitespace();
            match tok.next() {
                Some("p") => {
                    if graph.is_some() {
                        return Err(DimacsError::BadHeader {
                            line,
                            msg: "duplicate header".into(),
                        });
                    }
                    let fmt = tok.next().unwrap_or("");
                    if fmt != "edge" {
                        return Err(DimacsError::BadHeader {
                            line,
                            msg: format!("expected 'edge' format, got {fmt:?}"),
                        });
                    }
                    let n = tok
                        .next()
                        .and_then(|t| t.parse::<usize>().ok())
                        .ok_or_else(|| DimacsError::BadHeader {
                            line,
                            msg: "bad vertex count".into(),
                        })?;
                    let _m = tok
                        .next()
                        .and_then(|t| t.parse::<usize>().ok())
                        .ok_or_else(|| DimacsError::BadHeader {
                            line,
                            msg: "bad edge count".into(),
                        })?;
                    if tok.next().is_some() {
                        return Err(DimacsError::BadHeader {
                            line,
                            msg: "trailing tokens".into(),
                        });
                    }
                    graph = Some(Graph::empty(n));
                }
                Some("e") => {
                    let g = graph.as_mut().ok_or(DimacsError::MissingHeader)?;
                    let mut endpoint = || {
                        tok.next()
                            .and_then(|t| t.parse::<i64>().ok())
                            .ok_or(DimacsError::UnknownLine {
                                line,
                                content: trimmed.to_string(),
                            })
                    };
                    let u = endpoint()?;
                    let v = endpoint()?;
                    for &x in [u, v].iter() {
                        if x < 1 || x as usize > g.n {
                            return Err(DimacsError::EndpointOutOfRange {
                                line,
                                vertex: x,
                                n: g.n,
                            });
                        }
                    }
                    if u == v {
                        return Err(DimacsError::LoopEdge {
                            line,
                            vertex: u as usize,
                        });
                    }
                    let (u, v) = (u as usize - 1, v as usize - 1);
                    g.rows[u].insert(v);
                    g.rows[v].insert(u);
                }
                _ => {
                    return Err(DimacsError::UnknownLine {
                        line,
                        content: trimmed.to_string(),
                    })
                }
            }
        }
        graph.ok_or(DimacsError::MissingHeader)
    }

    /// Serializes to DIMACS edge format with a sorted edge list.
    pub fn to_dimacs(&self) -> String {
        let edges = self.edges();
        let mut out = format!("p edge {} {}\n", self.n, edges.len());
        for (u, v) in edges {
            out.push_str(&format!("e {} {}\n", u + 1, v + 1));
        }
        out
    }

    /// JSON dump `{"n": int, "edges": [[u,v],...]}` with 0-indexed sorted edges.
    pub fn to_json(&self) -> String {
        let doc = GraphJson {
            n: self.n,
            edges: self.edges(),
        };
        serde_json::to_string(&doc).expect("graph json serialization")
    }

    pub fn from_json(text: &str) -> Result<Graph, String> {
        let doc: GraphJson = serde_json::from_str(text).map_err(|e| e.to_string())?;
        for &(u, v) in &doc.edges {
            if u >= doc.n || v >= doc.n {
                return Err(format!("edge ({u},{v}) out of range for n={}", doc.n));
            }
            if u == v {
                return Err(format!("loop edge at {u}"));
            }
        }
        Ok(Graph::from_edges(doc.n, &doc.edges))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Whether `cycle` lists an induced odd cycle of length >= 5 in `g`.
pub fn is_induced_odd_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let m = cycle.len();
    if m < 5 || m % 2 == 0 {
        return false;
    }
    let set = VertexSet::from_indices(g.n(), cycle.iter().copied());
    if set.len() != m {
        return false;
    }
    for i in 0..m {
        for j in (i + 1)..m {
            let consecutive = j == i + 1 || (i == 0 && j == m - 1);
            if g.has_edge(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HoleKind {
    /// Induced odd cycle of length >= 5 in the graph itself.
    Hole,
    /// Induced odd cycle of length >= 5 in the complement.
    Antihole,
}

/// A certificate that a graph is not perfect.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImperfectionWitness {
    pub kind: HoleKind,
    /// Cycle vertices in order; for an antihole these index the original
    /// graph but trace a hole of its complement.
    pub cycle: Vec<usize>,
}

/// Exhaustive search for an induced odd hole in `g` or in its complement.
///
/// Absence of a certificate means `g` is perfect. Intended for n <= ~14;
/// larger graphs are permitted but may be slow.
pub fn find_odd_hole_or_antihole(g: &Graph) -> Option<ImperfectionWitness> {
    if let Some(cycle) = find_odd_hole(g) {
        return Some(ImperfectionWitness {
            kind: HoleKind::Hole,
            cycle,
        });
    }
    find_odd_hole(&g.complement()).map(|cycle| ImperfectionWitness {
        kind: HoleKind::Antihole,
        cycle,
    })
}

/// DFS over induced paths anchored at their minimum vertex, closing cycles
/// of odd length 5, 7, 9, ... up to n.
pub fn find_odd_hole(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 5 {
        return None;
    }
    let mut path = Vec::with_capacity(n);
    let mut on_path = VertexSet::new(n);
    for start in 0..n {
        path.push(start);
        on_path.insert(start);
        if extend_hole_path(g, start, &mut path, &mut on_path) {
            return Some(path);
        }
        path.pop();
        on_path.remove(start);
    }
    None
}

fn extend_hole_path(g: &Graph, start: usize, path: &mut Vec<usize>, on_path: &mut VertexSet) -> bool {
    let len = path.len();
    let last = path[len - 1];
    let candidates: Vec<usize> = g
        .neighbors(last)
        .iter()
        .filter(|&w| w > start && !on_path.contains(w))
        .collect();
    for w in candidates {
        let nb = g.neighbors(w);
        // Inducedness: w may touch only the path endpoints.
        if len >= 2 && path[1..len - 1].iter().any(|&p| nb.contains(p)) {
            continue;
        }
        if len >= 2 && nb.contains(start) {
            let cycle_len = len + 1;
            if cycle_len >= 5 && cycle_len % 2 == 1 {
                path.push(w);
                return true;
            }
            // Adjacent to the anchor: usable only as a closing vertex.
            continue;
        }
        path.push(w);
        on_path.insert(w);
        if extend_hole_path(g, start, path, on_path) {
            return true;
        }
        path.pop();
        on_path.remove(w);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn random_graph(n: usize, seed: u64) -> Graph {
        // Tiny deterministic LCG; good enough for structural tests.
        let mut state = seed.wrapping_mul(0x9E3779B97F4A7C15).wrapping_add(1);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                if state >> 63 == 1 {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges)
    }

    #[test]
    fn parse_dimacs_path() {
        let g = Graph::parse_dimacs("p edge 3 2\ne 1 2\ne 2 3").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn parse_dimacs_isolated() {
        let g = Graph::parse_dimacs("p edge 2 0").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn parse_dimacs_out_of_range() {
        let err = Graph::parse_dimacs("p edge 2 1\ne 1 3").unwrap_err();
        assert_eq!(
            err,
            DimacsError::EndpointOutOfRange {
                line: 2,
                vertex: 3,
                n: 2
            }
        );
    }

    #[test]
    fn parse_dimacs_loop_rejected() {
        let err = Graph::parse_dimacs("p edge 2 1\ne 1 1").unwrap_err();
        assert_eq!(err, DimacsError::LoopEdge { line: 2, vertex: 1 });
    }

    #[test]
    fn parse_dimacs_duplicates_idempotent() {
        let g = Graph::parse_dimacs("p edge 2 2\ne 1 2\ne 2 1").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn parse_dimacs_missing_header() {
        assert_eq!(Graph::parse_dimacs("e 1 2"), Err(DimacsError::MissingHeader));
        assert_eq!(Graph::parse_dimacs("c nothing"), Err(DimacsError::MissingHeader));
    }

    #[test]
    fn dimacs_roundtrip_fixed_point() {
        let g = random_graph(9, 42);
        let text = g.to_dimacs();
        let g2 = Graph::parse_dimacs(&text).unwrap();
        assert_eq!(g, g2);
        assert_eq!(text, g2.to_dimacs());
    }

    #[test]
    fn json_roundtrip() {
        let g = random_graph(7, 5);
        let g2 = Graph::from_json(&g.to_json()).unwrap();
        assert_eq!(g, g2);
    }

    #[test]
    fn complement_of_c4_is_2k2() {
        let c4 = Graph::cycle(4);
        let cc = c4.complement();
        assert_eq!(cc.edges(), vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn complement_of_k3_is_edgeless() {
        assert_eq!(Graph::complete(3).complement().edge_count(), 0);
    }

    #[test]
    fn induced_subgraph_of_c4_prefix_is_path() {
        let c4 = Graph::cycle(4);
        let s = VertexSet::from_indices(4, [0, 1, 2]);
        let (h, map) = c4.induced_subgraph(&s);
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn induced_subgraph_full_is_identity() {
        let g = random_graph(8, 3);
        let (h, map) = g.induced_subgraph(&g.full_vertex_set());
        assert_eq!(h, g);
        assert_eq!(map, (0..8).collect::<Vec<_>>());
    }

    #[test]
    fn induced_subgraph_of_k4_pair_is_edge() {
        let k4 = Graph::complete(4);
        let (h, _) = k4.induced_subgraph(&VertexSet::from_indices(4, [0, 1]));
        assert_eq!(h.edges(), vec![(0, 1)]);
    }

    #[test]
    fn clique_and_independent_basics() {
        let k3 = Graph::complete(3);
        assert!(k3.is_clique(&VertexSet::full(3)));
        assert!(k3.is_independent(&VertexSet::singleton(3, 0)));
        let c4 = Graph::cycle(4);
        assert!(!c4.is_clique(&VertexSet::from_indices(4, [0, 1, 2])));
        assert!(c4.is_independent(&VertexSet::from_indices(4, [0, 2])));
        // Empty sets are both cliques and independent sets.
        assert!(c4.is_clique(&VertexSet::new(4)));
        assert!(c4.is_independent(&VertexSet::new(4)));
    }

    #[test]
    fn c5_is_its_own_odd_hole() {
        let c5 = Graph::cycle(5);
        let w = find_odd_hole_or_antihole(&c5).unwrap();
        assert_eq!(w.kind, HoleKind::Hole);
        assert!(is_induced_odd_cycle(&c5, &w.cycle));
    }

    #[test]
    fn c4_is_perfect() {
        assert!(find_odd_hole_or_antihole(&Graph::cycle(4)).is_none());
    }

    #[test]
    fn complement_of_c7_has_antihole() {
        let g = Graph::cycle(7).complement();
        let w = find_odd_hole_or_antihole(&g).unwrap();
        assert_eq!(w.kind, HoleKind::Antihole);
        assert!(is_induced_odd_cycle(&g.complement(), &w.cycle));
    }

    #[test]
    fn c7_with_pendant_has_hole() {
        let mut edges: Vec<_> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
        edges.push((0, 7));
        let g = Graph::from_edges(8, &edges);
        let w = find_odd_hole_or_antihole(&g).unwrap();
        assert_eq!(w.kind, HoleKind::Hole);
        assert!(is_induced_odd_cycle(&g, &w.cycle));
        assert_eq!(w.cycle.len(), 7);
    }

    #[test]
    fn hole_certificate_swaps_with_complement_small() {
        // Self-complementary relation on all graphs over 6 vertices: the
        // witness exists on g iff it exists on the complement, kinds swapped.
        for seed in 0..200u64 {
            let g = random_graph(6, seed);
            let a = find_odd_hole_or_antihole(&g);
            let b = find_odd_hole_or_antihole(&g.complement());
            assert_eq!(a.is_some(), b.is_some(), "seed {seed}");
        }
    }

    #[test]
    fn vertex_set_iter_and_ops() {
        let a = VertexSet::from_indices(100, [0, 63, 64, 99]);
        assert_eq!(a.to_vec(), vec![0, 63, 64, 99]);
        assert_eq!(a.len(), 4);
        let b = VertexSet::from_indices(100, [63, 64]);
        assert!(b.is_subset(&a));
        assert_eq!(a.difference(&b).to_vec(), vec![0, 99]);
        assert_eq!(a.intersection(&b), b);
        assert_eq!(a.complement().len(), 96);
        assert_eq!(a.first(), Some(0));
    }

    proptest! {
        #[test]
        fn complement_is_involution(n in 0usize..10, seed in 0u64..5000) {
            let g = random_graph(n, seed);
            prop_assert_eq!(g.complement().complement(), g);
        }

        #[test]
        fn clique_iff_independent_in_complement(n in 1usize..10, seed in 0u64..5000, mask in 0u32..1024) {
            let g = random_graph(n, seed);
            let s = VertexSet::from_indices(n, (0..n).filter(|&v| mask >> v & 1 == 1));
            prop_assert_eq!(g.is_clique(&s), g.complement().is_independent(&s));
        }
    }
}
