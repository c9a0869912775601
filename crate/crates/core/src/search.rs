//! Exhaustive enumeration of the realizations of a degree sequence.
//!
//! Vertex `i` is pinned to degree `d[i]`. Every relabelling of a graph with
//! the same degree multiset maps onto exactly one pinned realization, so the
//! maximum of `M2` over pinned realizations is the maximum over all
//! (connected) graphs with that sequence. Counts over all labelled graphs
//! whose sorted degree sequence equals `d` are the pinned count times
//! `n! / Π m_k!`; see [`labelled_multiplier`].
//!
//! Search order: vertices are completed one at a time, each choosing its
//! remaining neighbors among later vertices in lexicographic order. A branch
//! is cut when the residual degrees of the unfinished vertices fail
//! Erdős–Gallai, or, for connected searches, when some component is already
//! closed off without spanning the graph. Realizations therefore come out in
//! increasing lexicographic order of their sorted edge lists.
//!
//! The top-level choices for vertex `0` ([`RealizationSearch::branches`])
//! partition the tree, so callers can hand them to separate workers and
//! combine the [`OracleSummary`] values with [`OracleSummary::merge`]; the
//! result does not depend on the partitioning.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use thiserror::Error;

use crate::graph::{M2Value, SimpleGraph};
use crate::sequence::{is_graphic_sorted, DegreeSequence};

/// Default bound on the order accepted by the oracle.
pub const DEFAULT_CAP: usize = 10;

/// Adjacency is held in `u64` masks.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("order {n} exceeds the search cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("sequence is not graphic")]
    NotGraphic,
    #[error("sequence has no connected realization")]
    NoConnectedRealization,
}

/// A realization handed to a visitor: adjacency masks plus its `M2`.
#[derive(Debug, Clone, Copy)]
pub struct Realization<'a> {
    adj: &'a [u64],
    m2: u64,
}

impl Realization<'_> {
    pub fn m2(&self) -> M2Value {
        M2Value(self.m2)
    }

    pub fn adjacency(&self) -> &[u64] {
        self.adj
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        edges_of(self.adj)
    }

    pub fn to_graph(&self) -> SimpleGraph {
        SimpleGraph::from_edges(self.adj.len(), self.edge_list()).expect("search emits simple graphs")
    }
}

fn edges_of(adj: &[u64]) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for (u, &mask) in adj.iter().enumerate() {
        let mut later = mask & !((2u64 << u) - 1);
        while later != 0 {
            let v = later.trailing_zeros() as usize;
            edges.push((u, v));
            later &= later - 1;
        }
    }
    edges
}

fn is_connected_masks(adj: &[u64]) -> bool {
    let n = adj.len();
    if n <= 1 {
        return true;
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    component_of(adj, 0) == full
}

fn component_of(adj: &[u64], start: usize) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen
}

/// `n! / Π m_k!` for the run lengths of `seq`, if it fits.
pub fn labelled_multiplier(seq: &DegreeSequence) -> Option<u128> {
    let mut result: u128 = 1;
    let mut placed: u128 = 0;
    for (_, count) in seq.multiplicities() {
        // multiply by C(placed + count, count) incrementally; each partial
        // product is itself a binomial, so the division is exact
        for i in 1..=count as u128 {
            placed += 1;
            result = result.checked_mul(placed)? / i;
        }
    }
    Some(result)
}

#[derive(Debug, Clone)]
pub struct RealizationSearch {
    degrees: Vec<u32>,
    connected_only: bool,
}

struct State {
    residual: Vec<u32>,
    adj: Vec<u64>,
    m2: u64,
}

impl RealizationSearch {
    pub fn new(seq: &DegreeSequence, connected_only: bool, cap: usize) -> Result<Self, SearchError> {
        let n = seq.len();
        let cap = cap.min(MAX_ORDER);
        if n > cap {
            return Err(SearchError::CapExceeded { n, cap });
        }
        if !seq.is_graphic() {
            return Err(SearchError::NotGraphic);
        }
        Ok(RealizationSearch { degrees: seq.degrees().to_vec(), connected_only })
    }

    pub fn order(&self) -> usize {
        self.degrees.len()
    }

    pub fn connected_only(&self) -> bool {
        self.connected_only
    }

    /// Neighbor sets of vertex `0`, as masks, in lexicographic order.
    pub fn branches(&self) -> Vec<u64> {
        let n = self.order();
        let k = self.degrees[0] as usize;
        let mut out = Vec::new();
        let mut pick = Vec::with_capacity(k);
        combinations(1, n, k, &mut pick, &mut |chosen| {
            out.push(chosen.iter().fold(0u64, |m, &v| m | 1 << v));
        });
        out
    }

    /// Visits every realization in the subtree where vertex `0` has exactly
    /// the neighbors in `branch`.
    pub fn visit_branch<F: FnMut(&Realization<'_>)>(&self, branch: u64, visit: &mut F) {
        let n = self.order();
        let mut state = State { residual: self.degrees.clone(), adj: vec![0; n], m2: 0 };
        if branch.count_ones() != self.degrees[0] {
            return;
        }
        let mut rest = branch;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if v == 0 || v >= n || state.residual[v] == 0 {
                return;
            }
            self.link(&mut state, 0, v);
        }
        self.finish_vertex(0, &mut state, visit);
    }

    pub fn visit<F: FnMut(&Realization<'_>)>(&self, visit: &mut F) {
        for branch in self.branches() {
            self.visit_branch(branch, visit);
        }
    }

    pub fn count(&self) -> u64 {
        let mut count = 0;
        self.visit(&mut |_| count += 1);
        count
    }

    pub fn graphs(&self) -> Vec<SimpleGraph> {
        let mut out = Vec::new();
        self.visit(&mut |r| out.push(r.to_graph()));
        out
    }

    pub fn summarize_branch(&self, branch: u64) -> OracleSummary {
        let mut summary = OracleSummary::default();
        self.visit_branch(branch, &mut |r| summary.observe(r));
        summary
    }

    pub fn summarize(&self) -> OracleSummary {
        let mut summary = OracleSummary::default();
        self.visit(&mut |r| summary.observe(r));
        summary
    }

    fn link(&self, st: &mut State, u: usize, v: usize) {
        st.residual[u] -= 1;
        st.residual[v] -= 1;
        st.adj[u] |= 1 << v;
        st.adj[v] |= 1 << u;
        st.m2 += u64::from(self.degrees[u]) * u64::from(self.degrees[v]);
    }

    fn unlink(&self, st: &mut State, u: usize, v: usize) {
        st.residual[u] += 1;
        st.residual[v] += 1;
        st.adj[u] &= !(1 << v);
        st.adj[v] &= !(1 << u);
        st.m2 -= u64::from(self.degrees[u]) * u64::from(self.degrees[v]);
    }

    fn fill<F: FnMut(&Realization<'_>)>(&self, i: usize, st: &mut State, visit: &mut F) {
        let n = self.order();
        if i == n {
            if !self.connected_only || is_connected_masks(&st.adj) {
                visit(&Realization { adj: &st.adj, m2: st.m2 });
            }
            return;
        }
        let need = st.residual[i];
        self.choose(i, i + 1, need, st, visit);
    }

    fn choose<F: FnMut(&Realization<'_>)>(&self, i: usize, start: usize, need: u32, st: &mut State, visit: &mut F) {
        if need == 0 {
            self.finish_vertex(i, st, visit);
            return;
        }
        let n = self.order();
        let mut available = (start..n).filter(|&j| st.residual[j] > 0).count() as u32;
        for j in start..n {
            if available < need {
                return;
            }
            if st.residual[j] == 0 {
                continue;
            }
            available -= 1;
            self.link(st, i, j);
            self.choose(i, j + 1, need - 1, st, visit);
            self.unlink(st, i, j);
        }
    }

    fn finish_vertex<F: FnMut(&Realization<'_>)>(&self, i: usize, st: &mut State, visit: &mut F) {
        let mut rest: Vec<u32> = st.residual[i + 1..].to_vec();
        rest.sort_unstable_by(|a, b| b.cmp(a));
        if !is_graphic_sorted(&rest) {
            return;
        }
        if self.connected_only && self.has_closed_component(i, st) {
            return;
        }
        self.fill(i + 1, st, visit);
    }

    /// Some component among vertices `0..=i` can no longer grow and does not
    /// span the graph.
    fn has_closed_component(&self, i: usize, st: &State) -> bool {
        let n = self.order();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut seen = 0u64;
        for v in 0..=i {
            if seen >> v & 1 == 1 {
                continue;
            }
            let comp = component_of(&st.adj, v);
            seen |= comp;
            if comp == full {
                return false;
            }
            let mut members = comp;
            let mut open = false;
            while members != 0 {
                let w = members.trailing_zeros() as usize;
                members &= members - 1;
                if st.residual[w] > 0 {
                    open = true;
                    break;
                }
            }
            if !open {
                return true;
            }
        }
        false
    }
}

fn combinations(start: usize, end: usize, k: usize, pick: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    if pick.len() == k {
        emit(pick);
        return;
    }
    let missing = k - pick.len();
    for v in start..end {
        if end - v < missing {
            break;
        }
        pick.push(v);
        combinations(v + 1, end, k, pick, emit);
        pick.pop();
    }
}

/// Running maximum and count over a set of realizations. The witness is the
/// maximizer with the lexicographically smallest sorted edge list.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OracleSummary {
    pub count: u64,
    pub best: Option<(M2Value, Vec<(usize, usize)>)>,
}

impl OracleSummary {
    pub fn observe(&mut self, r: &Realization<'_>) {
        self.count += 1;
        let replace = match &self.best {
            None => true,
            Some((m2, edges)) => match r.m2().cmp(m2) {
                Ordering::Greater => true,
                Ordering::Equal => r.edge_list() < *edges,
                Ordering::Less => false,
            },
        };
        if replace {
            self.best = Some((r.m2(), r.edge_list()));
        }
    }

    pub fn merge(mut self, other: OracleSummary) -> OracleSummary {
        self.count += other.count;
        self.best = match (self.best, other.best) {
            (None, b) | (b, None) => b,
            (Some(a), Some(b)) => {
                let a_wins = match a.0.cmp(&b.0) {
                    Ordering::Greater => true,
                    Ordering::Less => false,
                    Ordering::Equal => a.1 <= b.1,
                };
                Some(if a_wins { a } else { b })
            }
        };
        self
    }

    pub fn into_result(self, seq: &DegreeSequence) -> Result<OracleResult, SearchError> {
        let (max_m2, edges) = self.best.ok_or(SearchError::NoConnectedRealization)?;
        let witness = SimpleGraph::from_edges(seq.len(), edges).expect("search emits simple graphs");
        Ok(OracleResult {
            max_m2,
            witness,
            realizations: self.count,
            labelled_realizations: labelled_multiplier(seq).and_then(|m| m.checked_mul(u128::from(self.count))),
        })
    }
}

/// Exact maximum of `M2` over the connected realizations of a sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub max_m2: M2Value,
    pub witness: SimpleGraph,
    /// Connected realizations with vertex `i` pinned to degree `d[i]`.
    pub realizations: u64,
    /// Connected labelled graphs whose sorted degree sequence is the input.
    pub labelled_realizations: Option<u128>,
}

/// Single-threaded oracle.
pub fn oracle_max_m2(seq: &DegreeSequence, cap: usize) -> Result<OracleResult, SearchError> {
    RealizationSearch::new(seq, true, cap)?.summarize().into_result(seq)
}

/// Every realization of `seq` (connected ones only if asked), pinned degrees.
pub fn enumerate_realizations(
    seq: &DegreeSequence,
    connected_only: bool,
    cap: usize,
) -> Result<Vec<SimpleGraph>, SearchError> {
    Ok(RealizationSearch::new(seq, connected_only, cap)?.graphs())
}
