//! Layered BFS construction of the candidate-optimal graph for a degree
//! sequence, and a checker for BFS-orderings with non-increasing degrees.
//!
//! Vertex `i` of the output realizes degree `d[i]`. The root `0` is adjacent
//! to `1..=d[0]`; for excess `c >= 0` vertex `1` is also joined to
//! `2..=c+2`, closing the `c + 1` triangles `{0, 1, j}`. Every later vertex,
//! taken in index order, then receives its missing degree as fresh children
//! drawn from the next unused indices.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::{GraphError, M2Value, SimpleGraph};
use crate::sequence::{ConditionReport, CycleClass, DegreeSequence};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("sequence has no connected realization")]
    NotConnectedRealizable,
    #[error("condition {0} does not hold")]
    ConditionViolated(&'static str),
    #[error("not a bicyclic sequence")]
    NotBicyclic,
    #[error("vertex {vertex} already has {have} neighbors but its degree is {degree}")]
    DegreeOverflow { vertex: usize, have: usize, degree: u32 },
    #[error("degree budget exhausted: vertex {vertex} needs {need} children but only {left} vertices remain")]
    BudgetExhausted { vertex: usize, need: usize, left: usize },
    #[error("only {placed} of {n} vertices were attached")]
    Unplaced { placed: usize, n: usize },
}

/// Output of [`construct_gm_star`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionTrace {
    pub graph: SimpleGraph,
    /// BFS order; the construction uses the identity order.
    pub ordering: Vec<usize>,
    /// Distance of each vertex from the root.
    pub layers: Vec<usize>,
    pub triangles: Vec<[usize; 3]>,
    pub conditions: ConditionReport,
    pub warnings: Vec<String>,
}

impl ConstructionTrace {
    pub fn m2(&self) -> M2Value {
        self.graph.second_zagreb()
    }

    /// All four conditions hold, so the layered graph is known to be optimal.
    pub fn optimality_guaranteed(&self) -> bool {
        self.conditions.verdict()
    }
}

pub const PLATEAU_WARNING: &str = "condition (iii) violated; optimality not guaranteed";

/// Builds the layered graph with `c + 1` triangles on the two largest-degree
/// vertices.
///
/// Conditions (i), (ii) and (iv) are required. When only (iii) fails the
/// graph is still built and a warning is attached.
pub fn construct_gm_star(seq: &DegreeSequence) -> Result<ConstructionTrace, ConstructionError> {
    if !seq.is_connected_realizable() {
        return Err(ConstructionError::NotConnectedRealizable);
    }
    let conditions = seq.check_conditions();
    if !conditions.sum_condition {
        return Err(ConstructionError::ConditionViolated("(i)"));
    }
    if !conditions.top_two_condition {
        return Err(ConstructionError::ConditionViolated("(ii)"));
    }
    if !conditions.leaf_condition {
        return Err(ConstructionError::ConditionViolated("(iv)"));
    }
    let mut warnings = Vec::new();
    if !conditions.plateau_condition {
        warnings.push(String::from(PLATEAU_WARNING));
    }

    let d = seq.degrees();
    let n = d.len();
    let c = conditions.excess;
    let mut g = SimpleGraph::new(n);
    let mut next = 1usize;

    let root_children = d[0] as usize;
    attach_children(&mut g, 0, root_children, &mut next)?;

    let mut triangles = Vec::new();
    if c >= 0 {
        // (ii) gives d[0] >= c + 2, so every apex is a child of the root.
        for j in 2..=(c as usize + 2) {
            g.add_edge(1, j).expect("apex edges are new");
            triangles.push([0, 1, j]);
        }
    }

    for (v, &degree) in d.iter().enumerate().skip(1) {
        let have = g.degree(v);
        let want = degree as usize;
        if have > want {
            return Err(ConstructionError::DegreeOverflow { vertex: v, have, degree });
        }
        attach_children(&mut g, v, want - have, &mut next)?;
    }
    if next < n {
        return Err(ConstructionError::Unplaced { placed: next, n });
    }

    let layers =
        g.distances_from(0).into_iter().map(|h| h.expect("every attached vertex hangs off the root")).collect();
    Ok(ConstructionTrace { graph: g, ordering: (0..n).collect(), layers, triangles, conditions, warnings })
}

fn attach_children(
    g: &mut SimpleGraph,
    parent: usize,
    count: usize,
    next: &mut usize,
) -> Result<(), ConstructionError> {
    let left = g.order() - *next;
    if count > left {
        return Err(ConstructionError::BudgetExhausted { vertex: parent, need: count, left });
    }
    for child in *next..*next + count {
        g.add_edge(parent, child).expect("children are fresh vertices");
    }
    *next += count;
    Ok(())
}

/// Bicyclic specialization: two triangles sharing the edge between the two
/// largest-degree vertices.
pub fn construct_bm_star(seq: &DegreeSequence) -> Result<ConstructionTrace, ConstructionError> {
    let class = seq.classify().map_err(|_| ConstructionError::NotConnectedRealizable)?;
    if class.kind != CycleClass::Bicyclic {
        return Err(ConstructionError::NotBicyclic);
    }
    construct_gm_star(seq)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BfsViolation {
    /// `u ≺ v` but `h(u) > h(v)`.
    LayerMonotone,
    /// `u ≺ v` but `d(u) < d(v)`.
    DegreeMonotone,
    /// Parents of later vertices precede parents of earlier ones.
    ParentOrder,
}

impl BfsViolation {
    pub fn name(self) -> &'static str {
        match self {
            BfsViolation::LayerMonotone => "LayerMonotone",
            BfsViolation::DegreeMonotone => "DegreeMonotone",
            BfsViolation::ParentOrder => "ParentOrder",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BfsOrderingReport {
    pub violation: Option<BfsViolation>,
}

impl BfsOrderingReport {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks `ordering` (root first) against the three BFS-ordering rules.
///
/// Layer and degree monotonicity are checked together and the violation at
/// the lexicographically first offending pair of positions is reported;
/// when both fail on that pair, layers win. Parent order is only examined
/// once both hold.
pub fn verify_bfs_ordering(g: &SimpleGraph, ordering: &[usize]) -> Result<BfsOrderingReport, GraphError> {
    let n = g.order();
    if ordering.len() != n {
        return Err(GraphError::NotAPermutation);
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in ordering.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(GraphError::NotAPermutation);
        }
        pos[v] = i;
    }
    if n == 0 {
        return Ok(BfsOrderingReport { violation: None });
    }
    let dist = g.distances_from(ordering[0]);
    let h: Vec<usize> = dist.into_iter().collect::<Option<Vec<_>>>().ok_or(GraphError::Disconnected)?;

    let layer: Vec<usize> = ordering.iter().map(|&v| h[v]).collect();
    let degree: Vec<usize> = ordering.iter().map(|&v| g.degree(v)).collect();

    // suffix extrema over positions > i
    let mut suffix_min_layer = vec![usize::MAX; n + 1];
    let mut suffix_max_degree = vec![0usize; n + 1];
    for i in (0..n).rev() {
        suffix_min_layer[i] = suffix_min_layer[i + 1].min(layer[i]);
        suffix_max_degree[i] = suffix_max_degree[i + 1].max(degree[i]);
    }
    if let Some(i) = (0..n).find(|&i| layer[i] > suffix_min_layer[i + 1] || degree[i] < suffix_max_degree[i + 1]) {
        let j = (i + 1..n)
            .find(|&j| layer[j] < layer[i] || degree[j] > degree[i])
            .expect("suffix extrema witness a later position");
        let violation = if layer[j] < layer[i] { BfsViolation::LayerMonotone } else { BfsViolation::DegreeMonotone };
        return Ok(BfsOrderingReport { violation: Some(violation) });
    }

    // every parent of an earlier vertex must come no later than every
    // parent of a later one
    let mut latest_parent = 0usize;
    for &v in &ordering[1..] {
        let parents = g.neighbors(v).iter().filter(|&&u| h[u] + 1 == h[v]).map(|&u| pos[u]);
        let (lo, hi) = parents.fold((usize::MAX, 0), |(lo, hi), p| (lo.min(p), hi.max(p)));
        if lo < latest_parent {
            return Ok(BfsOrderingReport { violation: Some(BfsViolation::ParentOrder) });
        }
        latest_parent = latest_parent.max(hi);
    }
    Ok(BfsOrderingReport { violation: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(d: &[u32]) -> DegreeSequence {
        DegreeSequence::new(d.to_vec()).unwrap()
    }

    fn one_based(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
        SimpleGraph::from_edges(n, edges.iter().map(|&(u, v)| (u - 1, v - 1))).unwrap()
    }

    #[test]
    fn star() {
        let t = construct_gm_star(&seq(&[3, 1, 1, 1])).unwrap();
        assert_eq!(t.graph, SimpleGraph::star(4));
        assert_eq!(t.m2(), M2Value(9));
        assert!(t.triangles.is_empty());
        assert!(t.optimality_guaranteed());
    }

    #[test]
    fn first_counterexample_graph() {
        let t = construct_gm_star(&seq(&[4, 4, 3, 3, 2, 1, 1])).unwrap();
        let expected = one_based(7, &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 6), (4, 7)]);
        assert_eq!(t.graph, expected);
        assert_eq!(t.m2(), M2Value(86));
        assert_eq!(t.triangles, vec![[0, 1, 2], [0, 1, 3], [0, 1, 4]]);
        assert_eq!(t.warnings, vec![String::from(PLATEAU_WARNING)]);
        assert!(!t.optimality_guaranteed());
    }

    #[test]
    fn bicyclic_layout() {
        let pi = seq(&[4, 4, 4, 4, 4, 1, 1, 1, 1, 1, 1, 1, 1]);
        let t = construct_bm_star(&pi).unwrap();
        let expected = one_based(
            13,
            &[
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 6),
                (3, 7),
                (3, 8),
                (4, 9),
                (4, 10),
                (5, 11),
                (5, 12),
                (5, 13),
            ],
        );
        assert_eq!(t.graph, expected);
        // 6 edges of weight 16 among the hubs, 8 pendant edges of weight 4
        assert_eq!(t.m2(), M2Value(6 * 16 + 8 * 4));
        assert_eq!(t.triangles, vec![[0, 1, 2], [0, 1, 3]]);
        assert_eq!(t.layers, vec![0, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2]);
    }

    #[test]
    fn small_bicyclic() {
        let t = construct_bm_star(&seq(&[3, 3, 3, 3, 1, 1])).unwrap();
        assert_eq!(t.graph.edge_list(), vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 5)]);
        let t = construct_bm_star(&seq(&[4, 3, 2, 2, 2, 2, 1])).unwrap();
        assert_eq!(t.graph.degree_sequence().unwrap().degrees(), &[4, 3, 2, 2, 2, 2, 1]);
        assert_eq!(construct_bm_star(&seq(&[3, 1, 1, 1])), Err(ConstructionError::NotBicyclic));
    }

    #[test]
    fn rejections() {
        assert_eq!(construct_gm_star(&seq(&[1, 1, 1, 1])), Err(ConstructionError::NotConnectedRealizable));
        assert_eq!(construct_gm_star(&seq(&[2, 2, 2])), Err(ConstructionError::ConditionViolated("(iv)")));
        // c = 1 but d2 = 2
        assert_eq!(construct_gm_star(&seq(&[5, 2, 2, 2, 2, 2, 1])), Err(ConstructionError::ConditionViolated("(ii)")));
    }

    #[test]
    fn unicyclic_has_one_triangle() {
        let t = construct_gm_star(&seq(&[3, 2, 2, 1])).unwrap();
        assert_eq!(t.triangles, vec![[0, 1, 2]]);
        assert_eq!(t.graph.size(), 4);
    }

    #[test]
    fn complete_first_layer_terminates() {
        // d1 = n - 1: everything hangs off the root
        let t = construct_gm_star(&seq(&[5, 2, 2, 1, 1, 1])).unwrap();
        assert_eq!(t.layers.iter().max(), Some(&1));
        assert_eq!(t.graph.degree_sequence().unwrap().degrees(), &[5, 2, 2, 1, 1, 1]);
    }

    #[test]
    fn every_admissible_sequence_is_realized() {
        for n in 2..=10 {
            for c in -1..=3 {
                for pi in crate::sequence::connected_realizable_sequences(n, c) {
                    if !pi.check_conditions().admits_construction() {
                        continue;
                    }
                    match construct_gm_star(&pi) {
                        Ok(t) => {
                            assert_eq!(t.graph.degree_sequence().unwrap(), pi);
                            assert!(t.graph.is_connected());
                            assert_eq!(t.graph.size() as i64, n as i64 + c);
                            assert!(verify_bfs_ordering(&t.graph, &t.ordering).unwrap().holds(), "{pi}");
                            for (v, &h) in t.layers.iter().enumerate() {
                                assert_eq!(t.graph.distances_from(0)[v], Some(h));
                            }
                        }
                        // only when some condition fails may the
                        // construction run out of room
                        Err(e) => assert!(!pi.check_conditions().verdict(), "{pi}: {e}"),
                    }
                }
            }
        }
    }

    #[test]
    fn bfs_ordering_examples() {
        let path = SimpleGraph::path(3);
        assert_eq!(verify_bfs_ordering(&path, &[0, 2, 1]).unwrap().violation, Some(BfsViolation::DegreeMonotone));
        assert!(verify_bfs_ordering(&path, &[1, 0, 2]).unwrap().holds());

        // children of the second layer-1 vertex listed before those of the first
        let g = SimpleGraph::from_edges(5, [(0, 1), (0, 2), (1, 4), (2, 3)]).unwrap();
        assert_eq!(verify_bfs_ordering(&g, &[0, 1, 2, 3, 4]).unwrap().violation, Some(BfsViolation::ParentOrder));
        assert!(verify_bfs_ordering(&g, &[0, 1, 2, 4, 3]).unwrap().holds());

        let g = SimpleGraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(verify_bfs_ordering(&g, &[0, 2, 1, 3]).unwrap().violation, Some(BfsViolation::LayerMonotone));

        assert_eq!(verify_bfs_ordering(&path, &[0, 0, 1]), Err(GraphError::NotAPermutation));
        let split = SimpleGraph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(verify_bfs_ordering(&split, &[0, 1, 2, 3]), Err(GraphError::Disconnected));
    }

    #[test]
    fn alternative_optimum_has_no_bfs_ordering() {
        // second optimal graph for (4^5, 1^8) as drawn: a 4-cycle through
        // the two top hubs, so some leaf always sits on a shallower layer
        // than a hub
        let g = one_based(
            13,
            &[
                (1, 2),
                (1, 4),
                (1, 3),
                (1, 6),
                (2, 4),
                (3, 5),
                (2, 5),
                (2, 7),
                (3, 8),
                (3, 9),
                (4, 10),
                (4, 11),
                (5, 12),
                (5, 13),
            ],
        );
        let printed: Vec<usize> = (0..13).collect();
        assert_eq!(verify_bfs_ordering(&g, &printed).unwrap().violation, Some(BfsViolation::LayerMonotone));
        // hubs must come first under degree monotonicity; try every root
        // and every hub order
        let hubs = [0usize, 1, 2, 3, 4];
        for root in hubs {
            let dist = g.distances_from(root);
            let rest_hubs_max = hubs.iter().filter(|&&v| v != root).map(|&v| dist[v].unwrap()).max().unwrap();
            let leaves_min = (5..13).map(|v| dist[v].unwrap()).min().unwrap();
            assert!(rest_hubs_max > leaves_min, "root {root}");
        }
    }
}
