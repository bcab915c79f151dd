//! Solvers, reductions and kernels for (r,l) vertex partization on perfect
//! graphs: an iterative-compression FPT solver, a CNF-SAT hardness reduction
//! used as an instance generator, a forbidden-family hitting-set kernelizer,
//! and exhaustive brute-force oracles for cross-validation at desk scale.

pub mod budget;
pub mod brute;
pub mod generators;
pub mod graph;
pub mod iso;
pub mod kernel;
pub mod oracles;
pub mod sat;
pub mod solver;

pub use budget::{Budget, BudgetExceeded};
pub use graph::{find_odd_hole_or_antihole, Graph, HoleKind, ImperfectionWitness, VertexSet};
pub use oracles::{GraphClass, OracleError, OracleResult};
pub use solver::{ICPartition, LabelVector, Solution, SolveOutcome, SolveParams, SolverConfig};
