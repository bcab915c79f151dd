//! Vertex partization on perfect graphs by iterative compression.
//!
//! `short_vertex_partization` is the bounded-depth branching search: given a
//! two-block partition Q of the vertex set, it looks for a deletion set S of
//! size at most k and an IC-partition P of G-S within Hamming distance rho
//! of Q restricted to G-S. `compress` runs it with the budget
//! rho = (r+k+1)l + rl that a (k+1)-sized previous solution justifies, and
//! `solve` drives the compression over vertex prefixes.
//!
//! Perfectness of the input is trusted; audit with
//! [`crate::graph::find_odd_hole_or_antihole`] at desk scale when in doubt.

use crate::graph::{Graph, VertexSet};
use crate::oracles::{self, OracleError, OracleResult, DEFAULT_GENERIC_CAP};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Vertex cap for the generic-small oracle fallback.
    pub generic_cap: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            generic_cap: DEFAULT_GENERIC_CAP,
        }
    }
}

#[derive(Debug, Error)]
pub enum SolverError {
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("contract violation: {0}")]
    Contract(String),
}

/// Explicit sub-blocks certifying the two sides of an [`ICPartition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refinement {
    pub independent_blocks: Vec<VertexSet>,
    pub clique_blocks: Vec<VertexSet>,
}

/// A two-block partition: `block1` splits into independent sets, `block2`
/// into cliques. The refinement carries the explicit sub-blocks when known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ICPartition {
    pub block1: VertexSet,
    pub block2: VertexSet,
    pub refinement: Option<Refinement>,
}

impl ICPartition {
    pub fn new(block1: VertexSet, block2: VertexSet) -> Self {
        ICPartition {
            block1,
            block2,
            refinement: None,
        }
    }

    pub fn refined(
        block1: VertexSet,
        block2: VertexSet,
        independent_blocks: Vec<VertexSet>,
        clique_blocks: Vec<VertexSet>,
    ) -> Self {
        ICPartition {
            block1,
            block2,
            refinement: Some(Refinement {
                independent_blocks,
                clique_blocks,
            }),
        }
    }

    /// The vertices covered by the partition.
    pub fn support(&self) -> VertexSet {
        self.block1.union(&self.block2)
    }

    /// Checks that the two blocks are disjoint and cover exactly `domain`,
    /// and that any refinement partitions its block into sets of the right
    /// kind. Block counts against (r,l) are checked by [`verify_solution`].
    pub fn validate(&self, g: &Graph, domain: &VertexSet) -> Result<(), String> {
        if self.block1.nbits() != g.n() || self.block2.nbits() != g.n() {
            return Err("partition blocks over a different host".into());
        }
        if !self.block1.is_disjoint(&self.block2) {
            return Err("blocks overlap".into());
        }
        if &self.support() != domain {
            return Err("blocks do not cover the expected vertex set".into());
        }
        if let Some(refinement) = &self.refinement {
            let mut seen = VertexSet::new(g.n());
            for b in &refinement.independent_blocks {
                if !g.is_independent(b) {
                    return Err("refinement block is not independent".into());
                }
                if !seen.is_disjoint(b) {
                    return Err("refinement blocks overlap".into());
                }
                seen = seen.union(b);
            }
            if seen != self.block1 {
                return Err("independent blocks do not partition block1".into());
            }
            let mut seen = VertexSet::new(g.n());
            for b in &refinement.clique_blocks {
                if !g.is_clique(b) {
                    return Err("refinement block is not a clique".into());
                }
                if !seen.is_disjoint(b) {
                    return Err("refinement blocks overlap".into());
                }
                seen = seen.union(b);
            }
            if seen != self.block2 {
                return Err("clique blocks do not partition block2".into());
            }
        }
        Ok(())
    }
}

/// The bit vector of a two-block partition over a fixed vertex order:
/// bit i is 0 for block1, 1 for block2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelVector {
    bits: Vec<bool>,
}

impl LabelVector {
    pub fn new(bits: Vec<bool>) -> Self {
        LabelVector { bits }
    }

    /// Labels of `vertices` (ascending index order) under the partition.
    pub fn from_partition(partition: &ICPartition, vertices: &VertexSet) -> Self {
        LabelVector {
            bits: vertices.iter().map(|v| partition.block2.contains(v)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }
}

/// Hamming distance between two equal-length label vectors.
pub fn hamming(a: &LabelVector, b: &LabelVector) -> Result<usize, SolverError> {
    if a.len() != b.len() {
        return Err(SolverError::Contract(format!(
            "label vectors of different lengths ({} vs {})",
            a.len(),
            b.len()
        )));
    }
    Ok(a.bits.iter().zip(&b.bits).filter(|(x, y)| x != y).count())
}

/// Parameters of a short-vertex-partization search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveParams {
    pub r: usize,
    pub ell: usize,
    pub k: usize,
    pub rho: usize,
}

impl SolveParams {
    pub fn new(r: usize, ell: usize, k: usize, rho: usize) -> Self {
        SolveParams { r, ell, k, rho }
    }
}

/// Instrumentation of one branching run: `nodes` counts calls that pass the
/// budget gate, `max_depth` their 1-based depth.
#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize)]
pub struct RunStats {
    pub nodes: u64,
    pub max_depth: usize,
    pub r: usize,
    pub ell: usize,
    pub k: usize,
    pub rho: usize,
}

impl RunStats {
    /// The branching-tree size bound (2(max(r,l)+1))^(k+rho+1).
    pub fn node_bound(&self) -> f64 {
        let base = 2.0 * (self.r.max(self.ell) as f64 + 1.0);
        base.powi((self.k + self.rho + 1) as i32)
    }

    pub fn depth_bound(&self) -> usize {
        self.k + self.rho + 1
    }

    pub fn within_bounds(&self) -> bool {
        (self.nodes as f64) <= self.node_bound() && self.max_depth <= self.depth_bound()
    }
}

/// A deletion set together with a refined partition certifying that the
/// remaining graph is an (r,l)-graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub deletion: VertexSet,
    pub partition: ICPartition,
}

#[derive(Debug)]
pub struct SolveOutcome {
    pub solution: Option<Solution>,
    /// One entry per compression run executed by the driver.
    pub runs: Vec<RunStats>,
}

impl SolveOutcome {
    pub fn total_nodes(&self) -> u64 {
        self.runs.iter().map(|r| r.nodes).sum()
    }

    pub fn max_depth(&self) -> usize {
        self.runs.iter().map(|r| r.max_depth).max().unwrap_or(0)
    }
}

/// The recursive branching algorithm for short vertex partization.
///
/// Steps, in order: (1) fail on exhausted budgets; (2) if G[Q1] is
/// r-colorable and the complement of G[Q2] is l-colorable, return the empty
/// deletion with the refined partition; (3) on an (r+1)-clique in G[Q1],
/// branch over deleting each clique vertex (k-1) and over moving each to Q2
/// (rho-1); (4) symmetrically on an (l+1)-independent set in G[Q2].
/// Deletion branches run before move branches, vertices in ascending order.
pub fn short_vertex_partization(
    g: &Graph,
    params: SolveParams,
    q: &ICPartition,
    cfg: &SolverConfig,
) -> Result<(Option<Solution>, RunStats), SolverError> {
    if !q.block1.is_disjoint(&q.block2) || q.support() != g.full_vertex_set() {
        return Err(SolverError::Contract(
            "starting partition must split the whole vertex set".into(),
        ));
    }
    let mut stats = RunStats {
        r: params.r,
        ell: params.ell,
        k: params.k,
        rho: params.rho,
        ..RunStats::default()
    };
    let solution = branch(
        g,
        params.r,
        params.ell,
        params.k as i64,
        params.rho as i64,
        &q.block1,
        &q.block2,
        1,
        &mut stats,
        cfg,
    )?;
    Ok((solution, stats))
}

#[allow(clippy::too_many_arguments)]
fn branch(
    g: &Graph,
    r: usize,
    ell: usize,
    k: i64,
    rho: i64,
    q1: &VertexSet,
    q2: &VertexSet,
    depth: usize,
    stats: &mut RunStats,
    cfg: &SolverConfig,
) -> Result<Option<Solution>, SolverError> {
    // Step 1.
    if k < 0 || rho < 0 {
        return Ok(None);
    }
    stats.nodes += 1;
    stats.max_depth = stats.max_depth.max(depth);

    let (g1, map1) = g.induced_subgraph(q1);
    match oracles::color_or_clique(&g1, r, cfg.generic_cap)? {
        OracleResult::Certificate(clique) => {
            // Step 3: an (r+1)-clique inside Q1.
            let witness: Vec<usize> = clique.iter().map(|i| map1[i]).collect();
            for &v in &witness {
                // 3(a): delete v.
                if let Some(sol) = branch(
                    g,
                    r,
                    ell,
                    k - 1,
                    rho,
                    &q1.without(v),
                    q2,
                    depth + 1,
                    stats,
                    cfg,
                )? {
                    return Ok(Some(Solution {
                        deletion: sol.deletion.with(v),
                        partition: sol.partition,
                    }));
                }
            }
            for &v in &witness {
                // 3(b): move v to the clique side.
                if let Some(sol) = branch(
                    g,
                    r,
                    ell,
                    k,
                    rho - 1,
                    &q1.without(v),
                    &q2.with(v),
                    depth + 1,
                    stats,
                    cfg,
                )? {
                    return Ok(Some(sol));
                }
            }
            Ok(None)
        }
        OracleResult::Partition(ind_blocks) => {
            let (g2, map2) = g.induced_subgraph(q2);
            match oracles::cover_or_independent(&g2, ell, cfg.generic_cap)? {
                OracleResult::Certificate(ind) => {
                    // Step 4: an (l+1)-independent set inside Q2.
                    let witness: Vec<usize> = ind.iter().map(|i| map2[i]).collect();
                    for &v in &witness {
                        // 4(a): delete v.
                        if let Some(sol) = branch(
                            g,
                            r,
                            ell,
                            k - 1,
                            rho,
                            q1,
                            &q2.without(v),
                            depth + 1,
                            stats,
                            cfg,
                        )? {
                            return Ok(Some(Solution {
                                deletion: sol.deletion.with(v),
                                partition: sol.partition,
                            }));
                        }
                    }
                    for &v in &witness {
                        // 4(b): move v to the independent side.
                        if let Some(sol) = branch(
                            g,
                            r,
                            ell,
                            k,
                            rho - 1,
                            &q1.with(v),
                            &q2.without(v),
                            depth + 1,
                            stats,
                            cfg,
                        )? {
                            return Ok(Some(sol));
                        }
                    }
                    Ok(None)
                }
                OracleResult::Partition(cli_blocks) => {
                    // Step 2: both sides certified; no more deletions needed.
                    let lift = |blocks: Vec<VertexSet>, map: &[usize]| -> Vec<VertexSet> {
                        blocks
                            .into_iter()
                            .map(|b| VertexSet::from_indices(g.n(), b.iter().map(|i| map[i])))
                            .collect()
                    };
                    let partition = ICPartition::refined(
                        q1.clone(),
                        q2.clone(),
                        lift(ind_blocks, &map1),
                        lift(cli_blocks, &map2),
                    );
                    Ok(Some(Solution {
                        deletion: VertexSet::new(g.n()),
                        partition,
                    }))
                }
            }
        }
    }
}

/// One compression step: given a (k+1)-sized deletion set `s_prev` with an
/// IC-partition `q` of the rest, finds a deletion set of size at most k.
/// Views the graph as an (r+k+1, l)-graph with partition (Q1 u S', Q2), so
/// the Hamming budget (r+k+1)l + rl suffices.
pub fn compress(
    g: &Graph,
    r: usize,
    ell: usize,
    k: usize,
    s_prev: &VertexSet,
    q: &ICPartition,
    cfg: &SolverConfig,
) -> Result<(Option<Solution>, RunStats), SolverError> {
    if s_prev.nbits() != g.n() {
        return Err(SolverError::Contract("s_prev over a different host".into()));
    }
    if s_prev.len() != k + 1 {
        return Err(SolverError::Contract(format!(
            "previous solution has {} vertices, expected k+1 = {}",
            s_prev.len(),
            k + 1
        )));
    }
    q.validate(g, &s_prev.complement())
        .map_err(|e| SolverError::Contract(format!("invalid starting partition: {e}")))?;
    let rho = (r + k + 1) * ell + r * ell;
    let start = ICPartition::new(q.block1.union(s_prev), q.block2.clone());
    short_vertex_partization(g, SolveParams::new(r, ell, k, rho), &start, cfg)
}

/// Iterative-compression driver for vertex partization.
///
/// Graphs on at most r+l+k vertices are solved directly (delete down to
/// r+l vertices, place survivors as singletons). Otherwise the compression
/// runs over vertex prefixes starting at i0 = r+l+k+1.
pub fn solve(
    g: &Graph,
    r: usize,
    ell: usize,
    k: usize,
    cfg: &SolverConfig,
) -> Result<SolveOutcome, SolverError> {
    let n = g.n();
    if n <= r + ell + k {
        return Ok(SolveOutcome {
            solution: Some(small_instance_solution(g, r, ell)),
            runs: Vec::new(),
        });
    }

    let i0 = r + ell + k + 1;
    let mut runs = Vec::new();

    // Bootstrap: delete the first k+1 vertices; the r+l survivors of the
    // prefix become singleton blocks, lowest indices on the independent side.
    let mut s_prev: Vec<usize> = (0..=k).collect();
    let mut ind_blocks: Vec<Vec<usize>> = ((k + 1)..(k + 1 + r)).map(|v| vec![v]).collect();
    let mut cli_blocks: Vec<Vec<usize>> = ((k + 1 + r)..i0).map(|v| vec![v]).collect();

    for i in i0..=n {
        let (gi, _) = g.induced_subgraph(&VertexSet::from_indices(n, 0..i));
        let to_sets = |blocks: &[Vec<usize>]| -> Vec<VertexSet> {
            blocks
                .iter()
                .map(|b| VertexSet::from_indices(i, b.iter().copied()))
                .collect()
        };
        let ind = to_sets(&ind_blocks);
        let cli = to_sets(&cli_blocks);
        let union = |sets: &[VertexSet]| {
            sets.iter()
                .fold(VertexSet::new(i), |acc, s| acc.union(s))
        };
        let q = ICPartition::refined(union(&ind), union(&cli), ind, cli);
        let s_prev_set = VertexSet::from_indices(i, s_prev.iter().copied());

        let (sol, stats) = compress(&gi, r, ell, k, &s_prev_set, &q, cfg)?;
        runs.push(stats);
        let sol = match sol {
            None => return Ok(SolveOutcome { solution: None, runs }),
            Some(sol) => sol,
        };
        if i == n {
            return Ok(SolveOutcome {
                solution: Some(sol),
                runs,
            });
        }

        // Set up instance i+1: the new vertex joins the deletion set, which
        // is padded back to k+1 with the lowest surviving vertices (removing
        // vertices keeps every block valid).
        let refinement = sol
            .partition
            .refinement
            .expect("solver solutions always carry a refinement");
        let mut next_ind: Vec<Vec<usize>> = refinement
            .independent_blocks
            .iter()
            .map(|b| b.to_vec())
            .collect();
        let mut next_cli: Vec<Vec<usize>> = refinement
            .clique_blocks
            .iter()
            .map(|b| b.to_vec())
            .collect();
        let mut s_next: Vec<usize> = sol.deletion.to_vec();
        s_next.push(i);
        let mut pad_pool: Vec<usize> = sol.deletion.complement().to_vec();
        pad_pool.reverse(); // pop() yields lowest first
        while s_next.len() < k + 1 {
            let w = pad_pool.pop().expect("prefix has more than k+1 vertices");
            s_next.push(w);
            for b in next_ind.iter_mut().chain(next_cli.iter_mut()) {
                b.retain(|&x| x != w);
            }
        }
        next_ind.retain(|b| !b.is_empty());
        next_cli.retain(|b| !b.is_empty());
        s_next.sort_unstable();
        s_prev = s_next;
        ind_blocks = next_ind;
        cli_blocks = next_cli;
    }
    unreachable!("loop returns at i == n")
}

fn small_instance_solution(g: &Graph, r: usize, ell: usize) -> Solution {
    let n = g.n();
    let keep = n.min(r + ell);
    let deletion = VertexSet::from_indices(n, keep..n);
    let ind_count = keep.min(r);
    let ind_blocks: Vec<VertexSet> = (0..ind_count).map(|v| VertexSet::singleton(n, v)).collect();
    let cli_blocks: Vec<VertexSet> = (ind_count..keep).map(|v| VertexSet::singleton(n, v)).collect();
    let block1 = VertexSet::from_indices(n, 0..ind_count);
    let block2 = VertexSet::from_indices(n, ind_count..keep);
    Solution {
        deletion,
        partition: ICPartition::refined(block1, block2, ind_blocks, cli_blocks),
    }
}

/// Recognition is solving with an empty deletion budget.
pub fn recognize(
    g: &Graph,
    r: usize,
    ell: usize,
    cfg: &SolverConfig,
) -> Result<Option<ICPartition>, SolverError> {
    Ok(solve(g, r, ell, 0, cfg)?.solution.map(|s| s.partition))
}

/// Re-validates a claimed solution without consulting any oracle: deletion
/// size, block structure, refinement counts and every sub-block's kind.
pub fn verify_solution(
    g: &Graph,
    r: usize,
    ell: usize,
    k: usize,
    sol: &Solution,
) -> Result<(), String> {
    if sol.deletion.nbits() != g.n() {
        return Err("deletion set over a different host".into());
    }
    if sol.deletion.len() > k {
        return Err(format!(
            "deletion set has {} > k = {k} vertices",
            sol.deletion.len()
        ));
    }
    if !sol.deletion.is_disjoint(&sol.partition.support()) {
        return Err("deleted vertices appear in the partition".into());
    }
    sol.partition.validate(g, &sol.deletion.complement())?;
    let refinement = sol
        .partition
        .refinement
        .as_ref()
        .ok_or("solution lacks a refinement")?;
    if refinement.independent_blocks.len() > r {
        return Err(format!(
            "{} independent blocks exceed r = {r}",
            refinement.independent_blocks.len()
        ));
    }
    if refinement.clique_blocks.len() > ell {
        return Err(format!(
            "{} clique blocks exceed l = {ell}",
            refinement.clique_blocks.len()
        ));
    }
    Ok(())
}

/// Serialized form of a solution:
/// `{"deleted": [...], "independent_blocks": [[...]], "clique_blocks": [[...]],
///   "stats": {"nodes": n, "depth": d}}`.
#[derive(Debug, Serialize, Deserialize)]
pub struct SolutionDocument {
    pub deleted: Vec<usize>,
    pub independent_blocks: Vec<Vec<usize>>,
    pub clique_blocks: Vec<Vec<usize>>,
    pub stats: StatsDocument,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct StatsDocument {
    pub nodes: u64,
    pub depth: usize,
}

impl SolutionDocument {
    pub fn from_solution(sol: &Solution, nodes: u64, depth: usize) -> Self {
        let refinement = sol.partition.refinement.as_ref();
        SolutionDocument {
            deleted: sol.deletion.to_vec(),
            independent_blocks: refinement
                .map(|r| r.independent_blocks.iter().map(|b| b.to_vec()).collect())
                .unwrap_or_default(),
            clique_blocks: refinement
                .map(|r| r.clique_blocks.iter().map(|b| b.to_vec()).collect())
                .unwrap_or_default(),
            stats: StatsDocument { nodes, depth },
        }
    }

    /// Rebuilds a [`Solution`] over a host with `n` vertices. Fails on any
    /// out-of-range index.
    pub fn to_solution(&self, n: usize) -> Result<Solution, String> {
        let check = |vs: &[usize]| -> Result<(), String> {
            match vs.iter().find(|&&v| v >= n) {
                Some(v) => Err(format!("vertex {v} out of range for n = {n}")),
                None => Ok(()),
            }
        };
        check(&self.deleted)?;
        for b in self.independent_blocks.iter().chain(&self.clique_blocks) {
            check(b)?;
        }
        let ind: Vec<VertexSet> = self
            .independent_blocks
            .iter()
            .map(|b| VertexSet::from_indices(n, b.iter().copied()))
            .collect();
        let cli: Vec<VertexSet> = self
            .clique_blocks
            .iter()
            .map(|b| VertexSet::from_indices(n, b.iter().copied()))
            .collect();
        let union = |sets: &[VertexSet]| sets.iter().fold(VertexSet::new(n), |a, s| a.union(s));
        Ok(Solution {
            deletion: VertexSet::from_indices(n, self.deleted.iter().copied()),
            partition: ICPartition::refined(union(&ind), union(&cli), ind, cli),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    fn bits(s: &str) -> LabelVector {
        LabelVector::new(s.chars().map(|c| c == '1').collect())
    }

    #[test]
    fn hamming_examples() {
        assert_eq!(hamming(&bits("0011"), &bits("0101")).unwrap(), 2);
        assert_eq!(hamming(&bits("0110"), &bits("0110")).unwrap(), 0);
        assert_eq!(hamming(&bits("0101010"), &bits("1010101")).unwrap(), 7);
        assert!(hamming(&bits("01"), &bits("011")).is_err());
    }

    #[test]
    fn step1_rejects_negative_budgets() {
        // k = -1 is modeled by the recursion; from the public surface a
        // zero-budget failing instance exercises the same gate.
        let g = Graph::complete(3);
        let q = ICPartition::new(g.full_vertex_set(), VertexSet::new(3));
        let (sol, stats) =
            short_vertex_partization(&g, SolveParams::new(1, 0, 0, 0), &q, &cfg()).unwrap();
        assert!(sol.is_none());
        assert!(stats.within_bounds(), "{stats:?}");
    }

    #[test]
    fn k3_vertex_cover_needs_two() {
        let g = Graph::complete(3);
        let q = ICPartition::new(g.full_vertex_set(), VertexSet::new(3));
        let (sol, stats) =
            short_vertex_partization(&g, SolveParams::new(1, 0, 2, 0), &q, &cfg()).unwrap();
        let sol = sol.unwrap();
        assert_eq!(sol.deletion.len(), 2);
        assert!(verify_solution(&g, 1, 0, 2, &sol).is_ok());
        assert!(stats.within_bounds());
        // And k = 1 is not enough.
        let (none, _) =
            short_vertex_partization(&g, SolveParams::new(1, 0, 1, 0), &q, &cfg()).unwrap();
        assert!(none.is_none());
    }

    #[test]
    fn c4_bipartition_without_deletion() {
        let g = Graph::cycle(4);
        let q = ICPartition::new(g.full_vertex_set(), VertexSet::new(4));
        let (sol, _) =
            short_vertex_partization(&g, SolveParams::new(2, 0, 0, 0), &q, &cfg()).unwrap();
        let sol = sol.unwrap();
        assert!(sol.deletion.is_empty());
        let refinement = sol.partition.refinement.unwrap();
        assert_eq!(
            refinement.independent_blocks,
            vec![
                VertexSet::from_indices(4, [0, 2]),
                VertexSet::from_indices(4, [1, 3])
            ]
        );
    }

    #[test]
    fn compress_k5_as_split_graph() {
        let g = Graph::complete(5);
        let s_prev = VertexSet::singleton(5, 0);
        let rest = VertexSet::from_indices(5, [2, 3, 4]);
        let q = ICPartition::refined(
            VertexSet::singleton(5, 1),
            rest.clone(),
            vec![VertexSet::singleton(5, 1)],
            vec![rest],
        );
        let (sol, stats) = compress(&g, 1, 1, 0, &s_prev, &q, &cfg()).unwrap();
        let sol = sol.unwrap();
        assert!(sol.deletion.is_empty());
        assert!(verify_solution(&g, 1, 1, 0, &sol).is_ok());
        assert_eq!(stats.rho, 3);
    }

    #[test]
    fn compress_validates_s_prev_size() {
        let g = Graph::complete(3);
        let q = ICPartition::new(VertexSet::from_indices(3, [1, 2]), VertexSet::new(3));
        let err = compress(&g, 1, 0, 1, &VertexSet::singleton(3, 0), &q, &cfg());
        assert!(matches!(err, Err(SolverError::Contract(_))));
    }

    #[test]
    fn solve_c4_bipartite() {
        let out = solve(&Graph::cycle(4), 2, 0, 0, &cfg()).unwrap();
        let sol = out.solution.unwrap();
        assert!(sol.deletion.is_empty());
        assert!(verify_solution(&Graph::cycle(4), 2, 0, 0, &sol).is_ok());
    }

    #[test]
    fn solve_2k2_split_deletion() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        // 2K2 is the classical split obstruction: NO at k = 0, YES at k = 1.
        assert!(solve(&g, 1, 1, 0, &cfg()).unwrap().solution.is_none());
        let out = solve(&g, 1, 1, 1, &cfg()).unwrap();
        let sol = out.solution.unwrap();
        assert_eq!(sol.deletion.len(), 1);
        assert!(verify_solution(&g, 1, 1, 1, &sol).is_ok());
    }

    #[test]
    fn recognize_examples() {
        // P3 is split: endpoints independent, middle as the clique.
        let p3 = Graph::path(3);
        let part = recognize(&p3, 1, 1, &cfg()).unwrap().unwrap();
        assert!(p3.is_independent(&part.block1));
        assert!(p3.is_clique(&part.block2));
        // C4 is not split.
        assert!(recognize(&Graph::cycle(4), 1, 1, &cfg()).unwrap().is_none());
        // A (0,0)-graph must be empty.
        assert!(recognize(&Graph::empty(3), 0, 0, &cfg()).unwrap().is_none());
        assert!(recognize(&Graph::empty(0), 0, 0, &cfg()).unwrap().is_some());
    }

    #[test]
    fn verify_rejects_broken_certificates() {
        let g = Graph::cycle(4);
        let out = solve(&g, 2, 0, 0, &cfg()).unwrap();
        let sol = out.solution.unwrap();
        assert!(verify_solution(&g, 2, 0, 0, &sol).is_ok());

        // Move a vertex across blocks: breaks independence.
        let mut broken = sol.clone();
        if let Some(refinement) = broken.partition.refinement.as_mut() {
            let v = refinement.independent_blocks[0].first().unwrap();
            refinement.independent_blocks[0].remove(v);
            refinement.independent_blocks[1].insert(v);
        }
        assert!(verify_solution(&g, 2, 0, 0, &broken).is_err());

        // Oversized deletion set.
        let sol2 = Solution {
            deletion: VertexSet::from_indices(4, [0, 1]),
            partition: ICPartition::refined(
                VertexSet::from_indices(4, [2, 3]),
                VertexSet::new(4),
                vec![VertexSet::singleton(4, 2), VertexSet::singleton(4, 3)],
                vec![],
            ),
        };
        assert!(verify_solution(&g, 2, 0, 1, &sol2).is_err());
    }

    #[test]
    fn hamming_contract_on_compress_output() {
        // For every compress call the returned partition must be within rho
        // of the starting partition restricted to the survivors.
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        let s_prev = VertexSet::from_indices(4, [0, 1]);
        let rest = VertexSet::from_indices(4, [2, 3]);
        let q = ICPartition::refined(
            VertexSet::new(4),
            rest.clone(),
            vec![],
            vec![VertexSet::from_indices(4, [2, 3])],
        );
        let (sol, stats) = compress(&g, 1, 1, 1, &s_prev, &q, &cfg()).unwrap();
        let sol = sol.unwrap();
        assert!(sol.deletion.len() <= 1);
        let survivors = sol.deletion.complement();
        let start = ICPartition::new(q.block1.union(&s_prev), q.block2.clone());
        let h = hamming(
            &LabelVector::from_partition(&sol.partition, &survivors),
            &LabelVector::from_partition(&start, &survivors),
        )
        .unwrap();
        assert!(h <= stats.rho, "hamming {h} exceeds rho {}", stats.rho);
    }

    #[test]
    fn solution_document_roundtrip() {
        let g = Graph::cycle(4);
        let sol = solve(&g, 2, 0, 0, &cfg()).unwrap().solution.unwrap();
        let doc = SolutionDocument::from_solution(&sol, 5, 2);
        let text = serde_json::to_string(&doc).unwrap();
        let back: SolutionDocument = serde_json::from_str(&text).unwrap();
        let sol2 = back.to_solution(4).unwrap();
        assert_eq!(sol, sol2);
        assert!(back.to_solution(2).is_err());
    }
}
