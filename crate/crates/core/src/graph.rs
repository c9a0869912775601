//! Simple undirected graphs and the second Zagreb index.
//!
//! Vertices are `0..n` internally; file formats and reports print them
//! 1-based.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::sequence::{DegreeSequence, SequenceError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} is not present")]
    MissingEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("ordering is not a permutation of the vertex set")]
    NotAPermutation,
    #[error("graph is not connected")]
    Disconnected,
    #[error(transparent)]
    Sequence(#[from] SequenceError),
}

/// Value of the second Zagreb index, `Σ_{uv ∈ E} d(u)·d(v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct M2Value(pub u64);

impl M2Value {
    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for M2Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<u64> for M2Value {
    fn from(v: u64) -> Self {
        M2Value(v)
    }
}

/// Undirected simple graph. The edge set and the sorted neighbor lists are
/// always kept in sync.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    edges: BTreeSet<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph { edges: BTreeSet::new(), adj: vec![Vec::new(); n] }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = SimpleGraph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    fn check_vertex(&self, vertex: usize) -> Result<(), GraphError> {
        if vertex >= self.order() {
            return Err(GraphError::VertexOutOfRange { vertex, n: self.order() });
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let e = ordered(u, v);
        if !self.edges.insert(e) {
            return Err(GraphError::DuplicateEdge(e.0, e.1));
        }
        for (a, b) in [(u, v), (v, u)] {
            let list = &mut self.adj[a];
            let at = list.binary_search(&b).unwrap_err();
            list.insert(at, b);
        }
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let e = ordered(u, v);
        if !self.edges.remove(&e) {
            return Err(GraphError::MissingEdge(e.0, e.1));
        }
        for (a, b) in [(u, v), (v, u)] {
            let list = &mut self.adj[a];
            let at = list.binary_search(&b).expect("adjacency in sync with edge set");
            list.remove(at);
        }
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&ordered(u, v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.adj.iter().map(|n| n.len() as u32).collect()
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically ordered.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    pub fn second_zagreb(&self) -> M2Value {
        M2Value(self.edges.iter().map(|&(u, v)| (self.degree(u) * self.degree(v)) as u64).sum())
    }

    /// Sorted degree multiset; fails on an isolated vertex.
    pub fn degree_sequence(&self) -> Result<DegreeSequence, GraphError> {
        if let Some(v) = (0..self.order()).find(|&v| self.degree(v) == 0) {
            return Err(GraphError::IsolatedVertex(v));
        }
        Ok(DegreeSequence::new(self.degrees())?)
    }

    /// BFS distances from `root`; `None` for unreachable vertices.
    pub fn distances_from(&self, root: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        if root >= self.order() {
            return dist;
        }
        dist[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have a distance");
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.distances_from(0).iter().all(Option::is_some)
    }

    /// Image of the graph under `perm`, where vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<SimpleGraph, GraphError> {
        let n = self.order();
        if perm.len() != n {
            return Err(GraphError::NotAPermutation);
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || core::mem::replace(&mut seen[p], true) {
                return Err(GraphError::NotAPermutation);
            }
        }
        SimpleGraph::from_edges(n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> SimpleGraph {
        SimpleGraph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path is simple")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> SimpleGraph {
        assert!(n >= 3, "cycle needs at least three vertices");
        let mut g = SimpleGraph::path(n);
        g.add_edge(n - 1, 0).expect("closing edge is new");
        g
    }

    /// Star with center `0` and `n - 1` leaves.
    pub fn star(n: usize) -> SimpleGraph {
        SimpleGraph::from_edges(n, (1..n).map(|v| (0, v))).expect("star is simple")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Builds a graph from 1-based edge pairs.
    fn one_based(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
        SimpleGraph::from_edges(n, edges.iter().map(|&(u, v)| (u - 1, v - 1))).unwrap()
    }

    fn vertex_form(g: &SimpleGraph) -> u64 {
        let twice: u64 = (0..g.order())
            .map(|v| {
                let s: usize = g.neighbors(v).iter().map(|&u| g.degree(u)).sum();
                (g.degree(v) * s) as u64
            })
            .sum();
        twice / 2
    }

    #[test]
    fn cycles_and_triangle() {
        assert_eq!(SimpleGraph::cycle(3).second_zagreb(), M2Value(12));
        for n in 3..12 {
            assert_eq!(SimpleGraph::cycle(n).second_zagreb().get(), 4 * n as u64);
        }
    }

    #[test]
    fn improvable_pair_values() {
        let g = one_based(7, &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 6), (4, 7)]);
        let g_prime = one_based(7, &[(1, 2), (1, 4), (1, 3), (1, 5), (2, 3), (3, 4), (2, 4), (2, 6), (5, 7)]);
        // hand sums: 16+12+12+8+12+12+8+3+3 and 16+12+12+8+12+9+12+4+2
        assert_eq!(g.second_zagreb(), M2Value(86));
        assert_eq!(g_prime.second_zagreb(), M2Value(87));
        assert_eq!(g.degree_sequence().unwrap().degrees(), &[4, 4, 3, 3, 2, 1, 1]);
        assert_eq!(g_prime.degree_sequence().unwrap(), g.degree_sequence().unwrap());
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(SimpleGraph::star(5).degree_sequence().unwrap().degrees(), &[4, 1, 1, 1, 1]);
        let bowtie = SimpleGraph::from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(bowtie.degree_sequence().unwrap().degrees(), &[4, 2, 2, 2, 2]);
        let mut g = SimpleGraph::path(3);
        g.adj.push(Vec::new());
        assert_eq!(g.degree_sequence(), Err(GraphError::IsolatedVertex(3)));
    }

    #[test]
    fn connectivity() {
        assert!(SimpleGraph::path(4).is_connected());
        let two_triangles = SimpleGraph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!two_triangles.is_connected());
    }

    #[test]
    fn structural_errors() {
        let mut g = SimpleGraph::new(3);
        assert_eq!(g.add_edge(1, 1), Err(GraphError::SelfLoop(1)));
        assert_eq!(g.add_edge(0, 3), Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 }));
        g.add_edge(2, 0).unwrap();
        assert_eq!(g.add_edge(0, 2), Err(GraphError::DuplicateEdge(0, 2)));
        assert_eq!(g.remove_edge(0, 1), Err(GraphError::MissingEdge(0, 1)));
        g.remove_edge(0, 2).unwrap();
        assert_eq!(g.size(), 0);
        assert!(g.neighbors(0).is_empty());
    }

    fn arb_graph() -> impl Strategy<Value = SimpleGraph> {
        (2usize..10).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                SimpleGraph::from_edges(n, all.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn edge_and_vertex_forms_agree(g in arb_graph()) {
            prop_assert_eq!(g.second_zagreb().get(), vertex_form(&g));
        }

        #[test]
        fn invariant_under_relabelling(g in arb_graph(), seed in any::<u64>()) {
            use rand::{seq::SliceRandom, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut perm: Vec<usize> = (0..g.order()).collect();
            for _ in 0..100 {
                perm.shuffle(&mut rng);
                let h = g.relabel(&perm).unwrap();
                prop_assert_eq!(h.second_zagreb(), g.second_zagreb());
                prop_assert_eq!(h.size(), g.size());
            }
        }

        #[test]
        fn excess_identity(g in arb_graph()) {
            if g.is_connected() && g.order() >= 2 {
                let class = g.degree_sequence().unwrap().classify().unwrap();
                prop_assert_eq!(g.size() as i64, g.order() as i64 + class.excess);
            }
        }
    }
}
