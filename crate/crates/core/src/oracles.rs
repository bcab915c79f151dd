//! Color-or-clique and cover-or-independent oracles on recognized perfect
//! subclasses, with an exact exponential fallback for small generic graphs.
//!
//! Every oracle either partitions the vertex set into at most `l` blocks of
//! the requested kind or produces an (l+1)-sized certificate of the opposite
//! kind. On perfect inputs exactly one outcome is available. Ties are broken
//! towards the lowest vertex index throughout, so all answers are
//! deterministic.

use crate::graph::{Graph, VertexSet};
use thiserror::Error;

/// Vertex cap for the exact generic fallback.
pub const DEFAULT_GENERIC_CAP: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphClass {
    Bipartite,
    Chordal,
    CoBipartite,
    CoChordal,
    GenericSmall,
}

/// Either a partition into at most `l` blocks or an (l+1)-sized certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleResult {
    Partition(Vec<VertexSet>),
    Certificate(VertexSet),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph fits no supported class and has {n} > {cap} vertices")]
    UnsupportedClass { n: usize, cap: usize },
    #[error("input is not perfect: needs more than {bound} colors yet has no clique of size {}", bound + 1)]
    NotPerfect { bound: usize },
}

enum Classified {
    Bipartite(VertexSet, VertexSet),
    Chordal(Vec<usize>),
    CoBipartite(Graph, VertexSet, VertexSet),
    CoChordal(Graph, Vec<usize>),
    GenericSmall,
}

impl Classified {
    fn tag(&self) -> GraphClass {
        match self {
            Classified::Bipartite(..) => GraphClass::Bipartite,
            Classified::Chordal(..) => GraphClass::Chordal,
            Classified::CoBipartite(..) => GraphClass::CoBipartite,
            Classified::CoChordal(..) => GraphClass::CoChordal,
            Classified::GenericSmall => GraphClass::GenericSmall,
        }
    }
}

fn classify_full(g: &Graph, cap: usize) -> Result<Classified, OracleError> {
    if let Some((a, b)) = two_coloring(g) {
        return Ok(Classified::Bipartite(a, b));
    }
    if let Some(peo) = lexbfs_peo(g) {
        return Ok(Classified::Chordal(peo));
    }
    let gc = g.complement();
    if let Some((a, b)) = two_coloring(&gc) {
        return Ok(Classified::CoBipartite(gc, a, b));
    }
    if let Some(peo) = lexbfs_peo(&gc) {
        return Ok(Classified::CoChordal(gc, peo));
    }
    if g.n() <= cap {
        return Ok(Classified::GenericSmall);
    }
    Err(OracleError::UnsupportedClass { n: g.n(), cap })
}

/// First matching tag in the order bipartite, chordal, co-bipartite,
/// co-chordal, generic-small.
pub fn classify(g: &Graph, cap: usize) -> Result<GraphClass, OracleError> {
    classify_full(g, cap).map(|c| c.tag())
}

/// BFS 2-coloring; the lowest vertex of each component lands in the first side.
pub fn two_coloring(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let n = g.n();
    let mut side = vec![2u8; n];
    let mut queue = std::collections::VecDeque::new();
    for s in 0..n {
        if side[s] != 2 {
            continue;
        }
        side[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u).iter() {
                if side[w] == 2 {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return None;
                }
            }
        }
    }
    let a = VertexSet::from_indices(n, (0..n).filter(|&v| side[v] == 0));
    let b = VertexSet::from_indices(n, (0..n).filter(|&v| side[v] == 1));
    Some((a, b))
}

/// Lexicographic BFS visiting order; ties go to the lowest index.
pub fn lexbfs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut visited = vec![false; n];
    let mut labels: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let mut pick = usize::MAX;
        for v in 0..n {
            if !visited[v] && (pick == usize::MAX || labels[v] > labels[pick]) {
                pick = v;
            }
        }
        visited[pick] = true;
        order.push(pick);
        let stamp = (n - step) as u32;
        for w in g.neighbors(pick).iter() {
            if !visited[w] {
                labels[w].push(stamp);
            }
        }
    }
    order
}

/// Standard perfect-elimination-ordering check.
pub fn is_peo(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in order {
        let later: Vec<usize> = g.neighbors(v).iter().filter(|&w| pos[w] > pos[v]).collect();
        if let Some(&u) = later.iter().min_by_key(|&&w| pos[w]) {
            if later.iter().any(|&w| w != u && !g.has_edge(u, w)) {
                return false;
            }
        }
    }
    true
}

/// A perfect elimination ordering, or `None` iff the graph is not chordal.
pub fn lexbfs_peo(g: &Graph) -> Option<Vec<usize>> {
    let mut order = lexbfs_order(g);
    order.reverse();
    if is_peo(g, &order) {
        Some(order)
    } else {
        None
    }
}

fn later_neighbors(g: &Graph, pos: &[usize], v: usize) -> Vec<usize> {
    g.neighbors(v).iter().filter(|&w| pos[w] > pos[v]).collect()
}

/// Greedy coloring along the reverse PEO; exact on chordal graphs. When a
/// vertex needs color index `l` the certificate clique is that vertex plus
/// one later neighbor per color, lowest indices first.
fn chordal_color_or_clique(g: &Graph, l: usize, peo: &[usize]) -> OracleResult {
    let n = g.n();
    if l == 0 {
        return if n == 0 {
            OracleResult::Partition(Vec::new())
        } else {
            OracleResult::Certificate(VertexSet::singleton(n, 0))
        };
    }
    let mut pos = vec![0usize; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    let mut color = vec![usize::MAX; n];
    let mut classes: Vec<VertexSet> = Vec::new();
    for &v in peo.iter().rev() {
        let later = later_neighbors(g, &pos, v);
        let mut used = vec![false; later.len() + 1];
        for &w in &later {
            let c = color[w];
            debug_assert_ne!(c, usize::MAX);
            if c < used.len() {
                used[c] = true;
            }
        }
        let mex = used.iter().position(|&u| !u).unwrap();
        if mex >= l {
            // Colors 0..l all appear among the later neighbors, which form
            // a clique; together with v that is an (l+1)-clique.
            let mut cert = VertexSet::singleton(n, v);
            for c in 0..l {
                let w = later
                    .iter()
                    .copied()
                    .filter(|&w| color[w] == c)
                    .min()
                    .expect("color present among later neighbors");
                cert.insert(w);
            }
            return OracleResult::Certificate(cert);
        }
        color[v] = mex;
        if mex == classes.len() {
            classes.push(VertexSet::new(n));
        }
        classes[mex].insert(v);
    }
    OracleResult::Partition(classes)
}

/// Clique cover along the PEO (each uncovered vertex starts a clique with
/// its uncovered later neighbors); the block starters form a maximum
/// independent set.
fn chordal_greedy_cover(g: &Graph, peo: &[usize]) -> (Vec<VertexSet>, Vec<usize>) {
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    let mut covered = vec![false; n];
    let mut blocks = Vec::new();
    let mut centers = Vec::new();
    for &v in peo {
        if covered[v] {
            continue;
        }
        covered[v] = true;
        let mut block = VertexSet::singleton(n, v);
        for w in later_neighbors(g, &pos, v) {
            if !covered[w] {
                covered[w] = true;
                block.insert(w);
            }
        }
        blocks.push(block);
        centers.push(v);
    }
    (blocks, centers)
}

fn chordal_cover_or_independent(g: &Graph, l: usize, peo: &[usize]) -> OracleResult {
    let (blocks, mut centers) = chordal_greedy_cover(g, peo);
    if blocks.len() <= l {
        OracleResult::Partition(blocks)
    } else {
        centers.sort_unstable();
        OracleResult::Certificate(VertexSet::from_indices(g.n(), centers[..=l].iter().copied()))
    }
}

fn bipartite_color_or_clique(g: &Graph, l: usize, a: &VertexSet, b: &VertexSet) -> OracleResult {
    let n = g.n();
    match l {
        0 => {
            if n == 0 {
                OracleResult::Partition(Vec::new())
            } else {
                OracleResult::Certificate(VertexSet::singleton(n, 0))
            }
        }
        1 => {
            if let Some(&(u, v)) = g.edges().first() {
                OracleResult::Certificate(VertexSet::from_indices(n, [u, v]))
            } else if n == 0 {
                OracleResult::Partition(Vec::new())
            } else {
                OracleResult::Partition(vec![VertexSet::full(n)])
            }
        }
        _ => {
            let blocks = [a, b]
                .into_iter()
                .filter(|s| !s.is_empty())
                .cloned()
                .collect();
            OracleResult::Partition(blocks)
        }
    }
}

/// Maximum matching by augmenting paths, vertices scanned in ascending order.
fn bipartite_matching(g: &Graph, a: &VertexSet, _b: &VertexSet) -> Vec<Option<usize>> {
    let n = g.n();
    let mut matched: Vec<Option<usize>> = vec![None; n];
    fn try_augment(
        g: &Graph,
        u: usize,
        matched: &mut Vec<Option<usize>>,
        seen: &mut [bool],
    ) -> bool {
        for w in g.neighbors(u).iter() {
            if seen[w] {
                continue;
            }
            seen[w] = true;
            let free = matched[w].is_none();
            if free || try_augment(g, matched[w].unwrap(), matched, seen) {
                matched[w] = Some(u);
                matched[u] = Some(w);
                return true;
            }
        }
        false
    }
    for u in a.iter() {
        if matched[u].is_none() {
            let mut seen = vec![false; n];
            try_augment(g, u, &mut matched, &mut seen);
        }
    }
    matched
}

/// Maximum independent set of a bipartite graph via Koenig's construction.
fn bipartite_mis(g: &Graph, a: &VertexSet, b: &VertexSet) -> VertexSet {
    let n = g.n();
    let matched = bipartite_matching(g, a, b);
    // Alternating reachability from unmatched vertices of side a.
    let mut reach = VertexSet::new(n);
    let mut queue: Vec<usize> = a.iter().filter(|&u| matched[u].is_none()).collect();
    for &u in &queue {
        reach.insert(u);
    }
    while let Some(u) = queue.pop() {
        if a.contains(u) {
            for w in g.neighbors(u).iter() {
                if !reach.contains(w) && matched[u] != Some(w) {
                    reach.insert(w);
                    queue.push(w);
                }
            }
        } else if let Some(m) = matched[u] {
            if !reach.contains(m) {
                reach.insert(m);
                queue.push(m);
            }
        }
    }
    a.intersection(&reach).union(&b.difference(&reach))
}

fn bipartite_cover_or_independent(g: &Graph, l: usize, a: &VertexSet, b: &VertexSet) -> OracleResult {
    let n = g.n();
    let matched = bipartite_matching(g, a, b);
    let matching_size = matched.iter().flatten().count() / 2;
    if n - matching_size <= l {
        let mut blocks = Vec::new();
        let mut placed = VertexSet::new(n);
        for u in a.iter() {
            if let Some(w) = matched[u] {
                blocks.push(VertexSet::from_indices(n, [u, w]));
                placed.insert(u);
                placed.insert(w);
            }
        }
        for v in placed.complement().iter() {
            blocks.push(VertexSet::singleton(n, v));
        }
        OracleResult::Partition(blocks)
    } else {
        let mis = bipartite_mis(g, a, b);
        debug_assert!(mis.len() > l);
        OracleResult::Certificate(VertexSet::from_indices(n, mis.iter().take(l + 1)))
    }
}

/// Exact maximum clique by branch and bound; first maximum found under the
/// deterministic lowest-vertex-first order.
fn max_clique_exact(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut best = VertexSet::new(n);
    let mut current = VertexSet::new(n);
    fn expand(g: &Graph, current: &mut VertexSet, cand: VertexSet, best: &mut VertexSet) {
        if current.len() + cand.len() <= best.len() {
            return;
        }
        match cand.first() {
            None => {
                if current.len() > best.len() {
                    *best = current.clone();
                }
            }
            Some(v) => {
                // Include v.
                current.insert(v);
                expand(g, current, cand.intersection(g.neighbors(v)), best);
                current.remove(v);
                // Exclude v.
                expand(g, current, cand.without(v), best);
            }
        }
    }
    expand(g, &mut current, g.full_vertex_set(), &mut best);
    best
}

/// Backtracking t-coloring with the usual first-use symmetry break.
fn try_color_exact(g: &Graph, t: usize) -> Option<Vec<VertexSet>> {
    let n = g.n();
    if n == 0 {
        return Some(Vec::new());
    }
    if t == 0 {
        return None;
    }
    let mut color = vec![usize::MAX; n];
    fn assign(g: &Graph, v: usize, t: usize, used: usize, color: &mut Vec<usize>) -> bool {
        if v == g.n() {
            return true;
        }
        let limit = (used + 1).min(t);
        for c in 0..limit {
            if g.neighbors(v).iter().all(|w| color[w] != c) {
                color[v] = c;
                if assign(g, v + 1, t, used.max(c + 1), color) {
                    return true;
                }
                color[v] = usize::MAX;
            }
        }
        false
    }
    if !assign(g, 0, t, 0, &mut color) {
        return None;
    }
    let used = color.iter().copied().max().map_or(0, |c| c + 1);
    let mut classes = vec![VertexSet::new(n); used];
    for v in 0..n {
        classes[color[v]].insert(v);
    }
    Some(classes)
}

fn exact_color_or_clique(g: &Graph, l: usize) -> Result<OracleResult, OracleError> {
    if let Some(classes) = try_color_exact(g, l) {
        return Ok(OracleResult::Partition(classes));
    }
    let clique = max_clique_exact(g);
    if clique.len() >= l + 1 {
        Ok(OracleResult::Certificate(VertexSet::from_indices(
            g.n(),
            clique.iter().take(l + 1),
        )))
    } else {
        Err(OracleError::NotPerfect { bound: l })
    }
}

/// Either at most `l` independent blocks covering the vertex set, or a
/// clique of size l+1.
pub fn color_or_clique(g: &Graph, l: usize, cap: usize) -> Result<OracleResult, OracleError> {
    match classify_full(g, cap)? {
        Classified::Bipartite(a, b) => Ok(bipartite_color_or_clique(g, l, &a, &b)),
        Classified::Chordal(peo) => Ok(chordal_color_or_clique(g, l, &peo)),
        // Independent blocks of g are clique blocks of the complement.
        Classified::CoBipartite(gc, a, b) => Ok(bipartite_cover_or_independent(&gc, l, &a, &b)),
        Classified::CoChordal(gc, peo) => Ok(chordal_cover_or_independent(&gc, l, &peo)),
        Classified::GenericSmall => exact_color_or_clique(g, l),
    }
}

/// Either at most `l` clique blocks covering the vertex set, or an
/// independent set of size l+1. The dual of [`color_or_clique`] under
/// complementation.
pub fn cover_or_independent(g: &Graph, l: usize, cap: usize) -> Result<OracleResult, OracleError> {
    match classify_full(g, cap)? {
        Classified::Bipartite(a, b) => Ok(bipartite_cover_or_independent(g, l, &a, &b)),
        Classified::Chordal(peo) => Ok(chordal_cover_or_independent(g, l, &peo)),
        Classified::CoBipartite(gc, a, b) => Ok(bipartite_color_or_clique(&gc, l, &a, &b)),
        Classified::CoChordal(gc, peo) => Ok(chordal_color_or_clique(&gc, l, &peo)),
        Classified::GenericSmall => exact_color_or_clique(&g.complement(), l),
    }
}

pub fn max_clique(g: &Graph, cap: usize) -> Result<VertexSet, OracleError> {
    let n = g.n();
    match classify_full(g, cap)? {
        Classified::Bipartite(..) => Ok(match g.edges().first() {
            Some(&(u, v)) => VertexSet::from_indices(n, [u, v]),
            None if n > 0 => VertexSet::singleton(n, 0),
            None => VertexSet::new(n),
        }),
        Classified::Chordal(peo) => {
            let mut pos = vec![0usize; n];
            for (i, &v) in peo.iter().enumerate() {
                pos[v] = i;
            }
            let mut best = VertexSet::new(n);
            for &v in &peo {
                let mut clique = VertexSet::singleton(n, v);
                for w in later_neighbors(g, &pos, v) {
                    clique.insert(w);
                }
                if clique.len() > best.len() {
                    best = clique;
                }
            }
            Ok(best)
        }
        Classified::CoBipartite(gc, a, b) => Ok(bipartite_mis(&gc, &a, &b)),
        Classified::CoChordal(gc, peo) => {
            let (_, mut centers) = chordal_greedy_cover(&gc, &peo);
            centers.sort_unstable();
            Ok(VertexSet::from_indices(n, centers))
        }
        Classified::GenericSmall => Ok(max_clique_exact(g)),
    }
}

pub fn max_independent_set(g: &Graph, cap: usize) -> Result<VertexSet, OracleError> {
    let n = g.n();
    match classify_full(g, cap)? {
        Classified::Bipartite(a, b) => Ok(bipartite_mis(g, &a, &b)),
        Classified::Chordal(peo) => {
            let (_, mut centers) = chordal_greedy_cover(g, &peo);
            centers.sort_unstable();
            Ok(VertexSet::from_indices(n, centers))
        }
        Classified::CoBipartite(gc, ..) => Ok(match gc.edges().first() {
            Some(&(u, v)) => VertexSet::from_indices(n, [u, v]),
            None if n > 0 => VertexSet::singleton(n, 0),
            None => VertexSet::new(n),
        }),
        Classified::CoChordal(gc, peo) => {
            let mut pos = vec![0usize; n];
            for (i, &v) in peo.iter().enumerate() {
                pos[v] = i;
            }
            let mut best = VertexSet::new(n);
            for &v in &peo {
                let mut clique = VertexSet::singleton(n, v);
                for w in later_neighbors(&gc, &pos, v) {
                    clique.insert(w);
                }
                if clique.len() > best.len() {
                    best = clique;
                }
            }
            Ok(best)
        }
        Classified::GenericSmall => Ok(max_clique_exact(&g.complement())),
    }
}
