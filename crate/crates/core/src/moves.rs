//! Degree-preserving edge swaps, neighbor transfers and a hill climber.
//!
//! An [`EdgeSwap`] `(v1, u1, v2, u2)` replaces `u1v1, u2v2` by `v1v2, u1u2`.
//! Its effect on `M2` is exactly
//! `(d(v1) - d(u2)) * (d(v2) - d(u1))`, since no degree changes.
//!
//! A [`NeighborTransfer`] `(u, v, [w1..wk])` moves the edges `wi v` over to
//! `wi u`, so `u` gains `k` and `v` loses `k`.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{GraphError, M2Value, SimpleGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EdgeSwap {
    pub v1: usize,
    pub u1: usize,
    pub v2: usize,
    pub u2: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NeighborTransfer {
    pub u: usize,
    pub v: usize,
    pub ws: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SwapMove {
    EdgeSwap(EdgeSwap),
    NeighborTransfer(NeighborTransfer),
}

impl fmt::Display for EdgeSwap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let EdgeSwap { v1, u1, v2, u2 } = *self;
        write!(f, "swap(v1={v1}, u1={u1}, v2={v2}, u2={u2})")
    }
}

impl EdgeSwap {
    pub fn new(v1: usize, u1: usize, v2: usize, u2: usize) -> Self {
        EdgeSwap { v1, u1, v2, u2 }
    }

    /// Edges removed and added, each as `(min, max)`.
    pub fn removed(&self) -> [(usize, usize); 2] {
        [ordered(self.u1, self.v1), ordered(self.u2, self.v2)]
    }

    pub fn added(&self) -> [(usize, usize); 2] {
        [ordered(self.v1, self.v2), ordered(self.u1, self.u2)]
    }

    pub fn validate(&self, g: &SimpleGraph) -> Result<(), GraphError> {
        let vs = [self.v1, self.u1, self.v2, self.u2];
        let n = g.order();
        if let Some(&vertex) = vs.iter().find(|&&x| x >= n) {
            return Err(GraphError::VertexOutOfRange { vertex, n });
        }
        for i in 0..4 {
            for j in i + 1..4 {
                if vs[i] == vs[j] {
                    return Err(GraphError::SelfLoop(vs[i]));
                }
            }
        }
        for (a, b) in self.removed() {
            if !g.has_edge(a, b) {
                return Err(GraphError::MissingEdge(a, b));
            }
        }
        for (a, b) in self.added() {
            if g.has_edge(a, b) {
                return Err(GraphError::DuplicateEdge(a, b));
            }
        }
        Ok(())
    }

    /// `(d(v1) - d(u2)) * (d(v2) - d(u1))`.
    pub fn delta(&self, g: &SimpleGraph) -> i64 {
        let d = |x: usize| g.degree(x) as i64;
        (d(self.v1) - d(self.u2)) * (d(self.v2) - d(self.u1))
    }

    /// Both degree inequalities `d(v1) >= d(u2)` and `d(v2) >= d(u1)`,
    /// returned as `(holds, both_strict)`.
    pub fn preconditions(&self, g: &SimpleGraph) -> (bool, bool) {
        let a = g.degree(self.v1) as i64 - g.degree(self.u2) as i64;
        let b = g.degree(self.v2) as i64 - g.degree(self.u1) as i64;
        (a >= 0 && b >= 0, a > 0 && b > 0)
    }
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

pub fn apply_edge_swap(g: &SimpleGraph, mv: &EdgeSwap) -> Result<SimpleGraph, GraphError> {
    mv.validate(g)?;
    let mut out = g.clone();
    for (a, b) in mv.removed() {
        out.remove_edge(a, b)?;
    }
    for (a, b) in mv.added() {
        out.add_edge(a, b)?;
    }
    Ok(out)
}

impl NeighborTransfer {
    pub fn new(u: usize, v: usize, ws: Vec<usize>) -> Self {
        NeighborTransfer { u, v, ws }
    }

    pub fn validate(&self, g: &SimpleGraph) -> Result<(), GraphError> {
        let n = g.order();
        for &x in [self.u, self.v].iter().chain(&self.ws) {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n });
            }
        }
        if self.u == self.v {
            return Err(GraphError::SelfLoop(self.u));
        }
        for (i, &w) in self.ws.iter().enumerate() {
            if w == self.u {
                return Err(GraphError::SelfLoop(w));
            }
            if self.ws[..i].contains(&w) {
                return Err(GraphError::DuplicateEdge(self.u, w));
            }
            if !g.has_edge(w, self.v) {
                return Err(GraphError::MissingEdge(w, self.v));
            }
            if g.has_edge(w, self.u) {
                return Err(GraphError::DuplicateEdge(w, self.u));
            }
        }
        Ok(())
    }

    /// `d(u) >= d(v)` and the neighbor degree sum of `u` is at least that of
    /// `v`, both measured before the move.
    pub fn preconditions(&self, g: &SimpleGraph) -> bool {
        let sum = |x: usize| g.neighbors(x).iter().map(|&y| g.degree(y)).sum::<usize>();
        g.degree(self.u) >= g.degree(self.v) && sum(self.u) >= sum(self.v)
    }
}

pub fn apply_neighbor_transfer(g: &SimpleGraph, mv: &NeighborTransfer) -> Result<SimpleGraph, GraphError> {
    mv.validate(g)?;
    let mut out = g.clone();
    for &w in &mv.ws {
        out.remove_edge(w, mv.v)?;
        out.add_edge(w, mv.u)?;
    }
    Ok(out)
}

pub fn apply_move(g: &SimpleGraph, mv: &SwapMove) -> Result<SimpleGraph, GraphError> {
    match mv {
        SwapMove::EdgeSwap(s) => apply_edge_swap(g, s),
        SwapMove::NeighborTransfer(t) => apply_neighbor_transfer(g, t),
    }
}

/// Accepted swap with the `M2` value and connectivity right after it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoggedSwap {
    pub swap: EdgeSwap,
    pub m2_after: M2Value,
    /// `false` for the first half of a compound step, whose intermediate
    /// graph may be disconnected or worse than the start.
    pub step_complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalSearchOutcome {
    pub graph: SimpleGraph,
    pub initial: M2Value,
    pub moves: Vec<LoggedSwap>,
}

impl LocalSearchOutcome {
    pub fn m2(&self) -> M2Value {
        self.graph.second_zagreb()
    }
}

/// Neighborhood used by [`local_search_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Neighborhood {
    /// Single swaps whose result is connected.
    Single,
    /// Single swaps first; when none improves, pairs of swaps whose
    /// intermediate graph may be disconnected but whose result is not.
    Compound,
}

/// Every valid swap of `g` in scan order: pairs `e < f` of the sorted edge
/// list, with `e = (a, b)` fixed as `(v1, u1)` and `f = (c, d)` tried as
/// `(v2, u2) = (c, d)` and then `(d, c)`. The other two orientations give
/// the same graphs.
fn valid_swaps(g: &SimpleGraph) -> impl Iterator<Item = EdgeSwap> + '_ {
    let edges = g.edge_list();
    let pairs: Vec<EdgeSwap> = edges
        .iter()
        .enumerate()
        .flat_map(|(i, &(a, b))| {
            edges[i + 1..].iter().flat_map(move |&(c, d)| [EdgeSwap::new(a, b, c, d), EdgeSwap::new(a, b, d, c)])
        })
        .collect();
    pairs.into_iter().filter(move |mv| mv.validate(g).is_ok())
}

/// First strictly improving swap in scan order that keeps `g` connected.
pub fn first_improving_swap(g: &SimpleGraph) -> Option<EdgeSwap> {
    valid_swaps(g).filter(|mv| mv.delta(g) > 0).find(|mv| apply_edge_swap(g, mv).expect("validated").is_connected())
}

/// First pair of swaps, in nested scan order, with a positive net gain and a
/// connected result. Swap deltas depend only on degrees, which no swap
/// changes, so the gain is the sum of the two deltas.
pub fn first_improving_pair(g: &SimpleGraph) -> Option<(EdgeSwap, EdgeSwap)> {
    for first in valid_swaps(g) {
        let d1 = first.delta(g);
        let mid = apply_edge_swap(g, &first).expect("validated");
        let found = valid_swaps(&mid)
            .filter(|second| d1 + second.delta(&mid) > 0)
            .find(|second| apply_edge_swap(&mid, second).expect("validated").is_connected());
        if let Some(second) = found {
            return Some((first, second));
        }
    }
    None
}

/// Hill climbing with the [`Neighborhood::Compound`] neighborhood.
pub fn local_search(g: &SimpleGraph) -> LocalSearchOutcome {
    local_search_with(g, Neighborhood::Compound)
}

/// Applies improving moves until none is left. Each step raises `M2` by at
/// least one, so this terminates.
pub fn local_search_with(g: &SimpleGraph, neighborhood: Neighborhood) -> LocalSearchOutcome {
    let initial = g.second_zagreb();
    let mut graph = g.clone();
    let mut moves = Vec::new();
    let mut push = |graph: &mut SimpleGraph, swap: EdgeSwap, step_complete: bool| {
        *graph = apply_edge_swap(graph, &swap).expect("validated");
        moves.push(LoggedSwap { swap, m2_after: graph.second_zagreb(), step_complete });
    };
    loop {
        if let Some(swap) = first_improving_swap(&graph) {
            push(&mut graph, swap, true);
            continue;
        }
        if neighborhood == Neighborhood::Compound {
            if let Some((a, b)) = first_improving_pair(&graph) {
                push(&mut graph, a, false);
                push(&mut graph, b, true);
                continue;
            }
        }
        break;
    }
    LocalSearchOutcome { graph, initial, moves }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicyclic::build_b_pq_paths;
    use alloc::vec;
    use proptest::prelude::*;

    fn one_based(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
        SimpleGraph::from_edges(n, edges.iter().map(|&(u, v)| (u - 1, v - 1))).unwrap()
    }

    fn improvable() -> SimpleGraph {
        one_based(7, &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 6), (4, 7)])
    }

    fn improved() -> SimpleGraph {
        one_based(7, &[(1, 2), (1, 4), (1, 3), (1, 5), (2, 3), (3, 4), (2, 4), (2, 6), (5, 7)])
    }

    #[test]
    fn cycle_swap_is_neutral() {
        let c6 = SimpleGraph::cycle(6);
        // 1-based {1,2},{4,5} out, {1,4},{2,5} in
        let mv = EdgeSwap::new(0, 1, 3, 4);
        let out = apply_edge_swap(&c6, &mv).unwrap();
        assert_eq!(c6.second_zagreb(), M2Value(24));
        assert_eq!(out.second_zagreb(), M2Value(24));
        assert_eq!(out.degrees(), c6.degrees());
        assert!(out.has_edge(0, 3) && out.has_edge(1, 4));
    }

    #[test]
    fn duplicate_edge_is_rejected() {
        let p4 = SimpleGraph::path(4);
        // (v1,u1) = (2,1), (v2,u2) = (3,4) in 1-based labels
        let mv = EdgeSwap::new(1, 0, 2, 3);
        assert_eq!(apply_edge_swap(&p4, &mv), Err(GraphError::DuplicateEdge(1, 2)));
        assert!(matches!(apply_edge_swap(&p4, &EdgeSwap::new(0, 2, 1, 3)), Err(GraphError::MissingEdge(..))));
        assert!(apply_edge_swap(&p4, &EdgeSwap::new(0, 1, 0, 3)).is_err());
    }

    #[test]
    fn two_swaps_reach_the_improved_graph() {
        let g = improvable();
        let step1 = apply_edge_swap(&g, &EdgeSwap::new(2, 5, 3, 6)).unwrap();
        let step2 = apply_edge_swap(&step1, &EdgeSwap::new(1, 4, 5, 6)).unwrap();
        assert_eq!(step2, improved());
        assert_eq!(step2.second_zagreb(), M2Value(87));
    }

    /// Searches all chains of at most two valid swaps from `g` for `target`.
    fn reachable_within_two(g: &SimpleGraph, target: &SimpleGraph) -> bool {
        let swaps = |h: &SimpleGraph| {
            let edges = h.edge_list();
            let mut out = Vec::new();
            for &(a, b) in &edges {
                for &(c, d) in &edges {
                    for mv in [EdgeSwap::new(a, b, c, d), EdgeSwap::new(b, a, c, d)] {
                        if let Ok(next) = apply_edge_swap(h, &mv) {
                            out.push(next);
                        }
                    }
                }
            }
            out
        };
        if g == target {
            return true;
        }
        swaps(g).iter().any(|h| h == target || swaps(h).iter().any(|k| k == target))
    }

    #[test]
    fn improved_graph_found_by_bounded_scan() {
        assert!(reachable_within_two(&improvable(), &improved()));
    }

    #[test]
    fn local_search_improves_and_stops() {
        let out = local_search(&improvable());
        assert_eq!(out.initial, M2Value(86));
        assert!(out.m2() >= M2Value(87));
        assert!(!out.moves.is_empty());
        assert!(out.graph.is_connected());
        assert_eq!(out.graph.degrees(), improvable().degrees());
        // values at the end of each step strictly increase
        let values: Vec<u64> = core::iter::once(86)
            .chain(out.moves.iter().filter(|m| m.step_complete).map(|m| m.m2_after.get()))
            .collect();
        assert!(values.windows(2).all(|w| w[0] < w[1]));
        assert!(first_improving_swap(&out.graph).is_none());
        assert!(first_improving_pair(&out.graph).is_none());
        // a local optimum is a fixed point
        assert!(local_search(&out.graph).moves.is_empty());
    }

    #[test]
    fn single_swaps_are_stuck_on_the_improvable_graph() {
        let g = improvable();
        // the only improving swap splits off the edge 5-6
        let gains: Vec<EdgeSwap> = valid_swaps(&g).filter(|mv| mv.delta(&g) > 0).collect();
        assert_eq!(gains.len(), 1);
        assert!(!apply_edge_swap(&g, &gains[0]).unwrap().is_connected());
        assert!(local_search_with(&g, Neighborhood::Single).moves.is_empty());
    }

    #[test]
    fn cycles_are_local_optima() {
        for n in 4..9 {
            let c = SimpleGraph::cycle(n);
            let out = local_search(&c);
            assert!(out.moves.is_empty());
            assert_eq!(out.graph, c);
        }
    }

    #[test]
    fn transfer_between_two_stars() {
        // star on 0 with leaves 1,2,3; star on 4 with leaves 5,6; bridge 0-4
        let g = SimpleGraph::from_edges(7, [(0, 1), (0, 2), (0, 3), (4, 5), (4, 6), (0, 4)]).unwrap();
        let mv = NeighborTransfer::new(0, 4, vec![5]);
        assert!(mv.preconditions(&g));
        let out = apply_neighbor_transfer(&g, &mv).unwrap();
        assert!(out.second_zagreb() > g.second_zagreb());
        assert_eq!(out.degree(0), g.degree(0) + 1);
        assert_eq!(out.degree(4), g.degree(4) - 1);
    }

    #[test]
    fn empty_transfer_is_identity() {
        let g = improvable();
        assert_eq!(apply_neighbor_transfer(&g, &NeighborTransfer::new(0, 6, vec![])).unwrap(), g);
    }

    #[test]
    fn transfer_rejections() {
        let g = SimpleGraph::path(4);
        assert!(apply_neighbor_transfer(&g, &NeighborTransfer::new(0, 2, vec![1])).is_err());
        assert!(apply_neighbor_transfer(&g, &NeighborTransfer::new(0, 2, vec![3, 3])).is_err());
        assert!(apply_neighbor_transfer(&g, &NeighborTransfer::new(3, 3, vec![])).is_err());
        assert!(apply_neighbor_transfer(&g, &NeighborTransfer::new(0, 2, vec![9])).is_err());
    }

    #[test]
    fn pendant_path_transfer_round_trip() {
        // shared vertex 0; cycle vertices 1..=4; paths 0-5-6 and 0-7-8
        let g = build_b_pq_paths(3, 3, &[2, 2]).unwrap();
        assert_eq!(g.degree(0), 6);
        assert_eq!(g.degree(1), 2);
        let back = NeighborTransfer::new(1, 0, vec![5]);
        assert!(!back.preconditions(&g));
        let moved = apply_neighbor_transfer(&g, &back).unwrap();
        assert!(moved.second_zagreb() < g.second_zagreb());
        let forward = NeighborTransfer::new(0, 1, vec![5]);
        assert!(forward.preconditions(&moved));
        let restored = apply_neighbor_transfer(&moved, &forward).unwrap();
        assert_eq!(restored, g);
        assert!(restored.second_zagreb() > moved.second_zagreb());
    }

    fn arb_connected() -> impl Strategy<Value = SimpleGraph> {
        (5usize..11).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (Just(n), proptest::collection::vec(any::<bool>(), pairs), proptest::collection::vec(0usize..n, n - 1))
                .prop_map(|(n, bits, parents)| {
                    let mut g = SimpleGraph::new(n);
                    // random recursive tree keeps it connected
                    for v in 1..n {
                        let _ = g.add_edge(v, parents[v - 1] % v);
                    }
                    let mut k = 0;
                    for u in 0..n {
                        for v in u + 1..n {
                            if bits[k] && bits[(k * 7 + 3) % bits.len()] {
                                let _ = g.add_edge(u, v);
                            }
                            k += 1;
                        }
                    }
                    g
                })
        })
    }

    proptest! {
        #[test]
        fn swap_delta_is_exact(g in arb_connected(), picks in proptest::collection::vec((any::<usize>(), any::<usize>(), any::<bool>()), 8)) {
            let edges = g.edge_list();
            for (i, j, flip) in picks {
                let (a, b) = edges[i % edges.len()];
                let (c, d) = edges[j % edges.len()];
                let mv = if flip { EdgeSwap::new(a, b, d, c) } else { EdgeSwap::new(a, b, c, d) };
                if let Ok(out) = apply_edge_swap(&g, &mv) {
                    prop_assert_eq!(out.degrees(), g.degrees());
                    let diff = out.second_zagreb().get() as i64 - g.second_zagreb().get() as i64;
                    prop_assert_eq!(diff, mv.delta(&g));
                    let (holds, strict) = mv.preconditions(&g);
                    if holds {
                        prop_assert!(diff >= 0);
                        prop_assert_eq!(diff > 0, strict);
                    }
                }
            }
        }

        #[test]
        fn transfer_moves_k_degrees(g in arb_connected(), u in any::<usize>(), v in any::<usize>()) {
            let n = g.order();
            let (u, v) = (u % n, v % n);
            prop_assume!(u != v);
            let ws: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| w != u && !g.has_edge(w, u)).collect();
            let out = apply_neighbor_transfer(&g, &NeighborTransfer::new(u, v, ws.clone())).unwrap();
            let k = ws.len();
            for x in 0..n {
                let expect = if x == u { g.degree(x) + k } else if x == v { g.degree(x) - k } else { g.degree(x) };
                prop_assert_eq!(out.degree(x), expect);
            }
        }
    }
}
