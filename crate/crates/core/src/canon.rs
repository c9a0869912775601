//! Canonical labelling by individualization and refinement.
//!
//! Two graphs are isomorphic exactly when their [`CanonicalForm`]s are equal.
//! The search explores every individualization branch, so its cost grows
//! with the automorphism group; it is intended for graphs of a few dozen
//! vertices at most.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::SimpleGraph;

/// Sorted edge list of the canonically relabelled graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub order: usize,
    pub edges: Vec<(usize, usize)>,
}

type Partition = Vec<Vec<usize>>;

/// Splits cells by the number of neighbors in each cell until nothing
/// changes. Sub-cells are ordered by their signature, which depends only on
/// the structure, never on the input labels.
fn refine(g: &SimpleGraph, mut cells: Partition) -> Partition {
    loop {
        let n = g.order();
        let mut cell_of = vec![0usize; n];
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let k = cells.len();
        let mut next: Partition = Vec::with_capacity(k);
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut sig = vec![0usize; k];
                    for &w in g.neighbors(v) {
                        sig[cell_of[w]] += 1;
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search(g: &SimpleGraph, cells: Partition, best: &mut Option<Vec<(usize, usize)>>) {
    let cells = refine(g, cells);
    let Some(split) = cells.iter().position(|c| c.len() > 1) else {
        let mut position = vec![0usize; g.order()];
        for (i, cell) in cells.iter().enumerate() {
            position[cell[0]] = i;
        }
        let mut edges: Vec<(usize, usize)> = g
            .edges()
            .map(|(u, v)| {
                let (a, b) = (position[u], position[v]);
                if a < b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        edges.sort_unstable();
        if best.as_ref().is_none_or(|b| edges < *b) {
            *best = Some(edges);
        }
        return;
    };
    for &v in &cells[split] {
        let mut branch = Vec::with_capacity(cells.len() + 1);
        branch.extend_from_slice(&cells[..split]);
        branch.push(vec![v]);
        branch.push(cells[split].iter().copied().filter(|&w| w != v).collect());
        branch.extend_from_slice(&cells[split + 1..]);
        search(g, branch, best);
    }
}

pub fn canonical_form(g: &SimpleGraph) -> CanonicalForm {
    let n = g.order();
    if n == 0 {
        return CanonicalForm { order: 0, edges: Vec::new() };
    }
    let mut best = None;
    search(g, vec![(0..n).collect()], &mut best);
    CanonicalForm { order: n, edges: best.unwrap_or_default() }
}

pub fn are_isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    let sorted = |g: &SimpleGraph| {
        let mut d = g.degrees();
        d.sort_unstable();
        d
    };
    a.order() == b.order() && a.size() == b.size() && sorted(a) == sorted(b) && canonical_form(a) == canonical_form(b)
}
