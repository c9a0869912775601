//! Extremal graphs for the second Zagreb index with a prescribed degree
//! sequence.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! * [`sequence`]: degree sequences, graphicness, classification by
//!   cyclomatic excess, and majorization.
//! * [`graph`]: a small simple-graph type and the second Zagreb index
//!   `M2(G) = Σ_{uv ∈ E} d(u)·d(v)`.
//! * [`constructor`]: the layered BFS construction with `c + 1` triangles
//!   on the two largest-degree vertices, and a BFS-ordering checker.
//! * [`bicyclic`]: the canonical bicyclic families and the exact maximum
//!   of `M2` over bicyclic realizations of a sequence.
//! * [`search`]: exhaustive enumeration of realizations (the oracle).
//! * [`moves`]: degree-preserving edge swaps, neighbor transfers and a
//!   hill-climbing driver.
//! * [`canon`]: canonical labelling for isomorphism checks on small graphs.
#![no_std]

extern crate alloc;
#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod bicyclic;
pub mod canon;
pub mod constructor;
pub mod graph;
pub mod moves;
pub mod search;
pub mod sequence;

pub use bicyclic::{bicyclic_max, BicyclicCase, BicyclicError, BicyclicFamily, BicyclicMaxResult};
pub use constructor::{
    construct_bm_star, construct_gm_star, verify_bfs_ordering, BfsOrderingReport, BfsViolation, ConstructionError,
    ConstructionTrace,
};
pub use graph::{GraphError, M2Value, SimpleGraph};
pub use search::{oracle_max_m2, OracleResult, RealizationSearch, SearchError};
pub use sequence::{
    ConditionReport, CycleClass, DegreeSequence, MajorizationChain, MajorizationOrder, SequenceClass, SequenceError,
};
