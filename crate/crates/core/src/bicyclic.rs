//! Canonical bicyclic families and the exact maximum of `M2` over the
//! bicyclic realizations of a sequence.
//!
//! Families (all of order `n` with `n + 1` edges):
//!
//! * `B(p,q)`: cycles `C_p` and `C_q` sharing one vertex, `p + q - 1 = n`.
//! * `B(p,r,q)`: `C_p` and `C_q` joined by a path of length `r`,
//!   `p + q + r - 1 = n`.
//! * `B(P_k,P_l,P_m)`: three internally disjoint `x`–`y` paths of lengths
//!   `k`, `l`, `m`, `k + l + m - 1 = n`.
//! * `B(p,q;p_1,...,p_s)`: `B(p,q)` with `s` pendant paths hung on the shared
//!   vertex.
//!
//! [`bicyclic_max`] dispatches on `d_n`, `d_2` and the leaf count `s`:
//!
//! | case | shape                         | maximum                |
//! |------|-------------------------------|------------------------|
//! | 1    | `(3,3,2^(n-2))`               | `4n + 17`              |
//! | 2    | `(4,2^(n-1))`                 | `4n + 20`              |
//! | 3    | `(s+4,2^k,1^s)`, `2s <= n-5`  | `4n + 2s² + 10s + 20`  |
//! | 4    | `(s+4,2^k,1^s)`, `2s > n-5`   | `sn + 6n + s + 10`     |
//! | 5    | `d_n = 1`, `d_2 >= 3`         | `M2` of the layered construction |

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::constructor::{construct_bm_star, ConstructionError};
use crate::graph::{M2Value, SimpleGraph};
use crate::sequence::{CycleClass, DegreeSequence};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BicyclicError {
    #[error("invalid family parameters: {0}")]
    InvalidParameters(String),
    #[error("sequence has no connected realization")]
    NotConnectedRealizable,
    #[error("sequence is not bicyclic (excess {0})")]
    NotBicyclic(i64),
    #[error("no bicyclic realization: {0}")]
    Infeasible(String),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

fn invalid(msg: impl Into<String>) -> BicyclicError {
    BicyclicError::InvalidParameters(msg.into())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BicyclicFamily {
    TwoCyclesSharedVertex { p: usize, q: usize },
    TwoCyclesPath { p: usize, r: usize, q: usize },
    Theta { k: usize, l: usize, m: usize },
    SharedVertexWithPaths { p: usize, q: usize, paths: Vec<usize> },
    BmStar,
}

impl BicyclicFamily {
    /// Realizes the family on vertices `0..n`.
    pub fn build(&self) -> Result<SimpleGraph, BicyclicError> {
        match self {
            BicyclicFamily::TwoCyclesSharedVertex { p, q } => build_b_pq(*p, *q),
            BicyclicFamily::TwoCyclesPath { p, r, q } => build_b_prq(*p, *r, *q),
            BicyclicFamily::Theta { k, l, m } => build_theta(*k, *l, *m),
            BicyclicFamily::SharedVertexWithPaths { p, q, paths } => build_b_pq_paths(*p, *q, paths),
            BicyclicFamily::BmStar => Err(invalid("B_M* depends on a degree sequence")),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            BicyclicFamily::TwoCyclesSharedVertex { .. } => "two-cycles-shared-vertex",
            BicyclicFamily::TwoCyclesPath { .. } => "two-cycles-path",
            BicyclicFamily::Theta { .. } => "theta",
            BicyclicFamily::SharedVertexWithPaths { .. } => "shared-vertex-with-paths",
            BicyclicFamily::BmStar => "bm-star",
        }
    }

    /// Numeric parameters in declaration order.
    pub fn params(&self) -> Vec<usize> {
        match self {
            BicyclicFamily::TwoCyclesSharedVertex { p, q } => vec![*p, *q],
            BicyclicFamily::TwoCyclesPath { p, r, q } => vec![*p, *r, *q],
            BicyclicFamily::Theta { k, l, m } => vec![*k, *l, *m],
            BicyclicFamily::SharedVertexWithPaths { p, q, paths } => {
                let mut v = vec![*p, *q];
                v.extend_from_slice(paths);
                v
            }
            BicyclicFamily::BmStar => Vec::new(),
        }
    }
}

impl fmt::Display for BicyclicFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BicyclicFamily::TwoCyclesSharedVertex { p, q } => write!(f, "B({p},{q})"),
            BicyclicFamily::TwoCyclesPath { p, r, q } => write!(f, "B({p},{r},{q})"),
            BicyclicFamily::Theta { k, l, m } => write!(f, "B(P_{k},P_{l},P_{m})"),
            BicyclicFamily::SharedVertexWithPaths { p, q, paths } => {
                write!(f, "B({p},{q};")?;
                for (i, len) in paths.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{len}")?;
                }
                f.write_str(")")
            }
            BicyclicFamily::BmStar => f.write_str("B_M*"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BicyclicWitness {
    pub family: BicyclicFamily,
    pub graph: SimpleGraph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BicyclicCase {
    /// `d_n = 2`, `d_2 >= 3`.
    ThetaWithChord = 1,
    /// `d_n = 2`, `d_2 = 2`.
    SharedVertex = 2,
    /// `d_n = 1`, `d_2 = 2`, `2s <= n - 5`.
    LongPendantPaths = 3,
    /// `d_n = 1`, `d_2 = 2`, `2s > n - 5`.
    ShortPendantPaths = 4,
    /// `d_n = 1`, `d_2 >= 3`.
    Layered = 5,
}

impl BicyclicCase {
    pub fn id(self) -> u8 {
        self as u8
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BicyclicMaxResult {
    pub case: BicyclicCase,
    pub value: M2Value,
    pub witness: BicyclicWitness,
}

/// Appends a path of `len` edges starting at `from`. With `to = Some(v)` the
/// last edge lands on `v`; otherwise a fresh end vertex is created.
/// Returns the end vertex.
fn add_path(g: &mut SimpleGraph, from: usize, to: Option<usize>, len: usize, next: &mut usize) -> usize {
    let fresh = if to.is_some() { len - 1 } else { len };
    let mut prev = from;
    for _ in 0..fresh {
        g.add_edge(prev, *next).expect("fresh vertex");
        prev = *next;
        *next += 1;
    }
    if let Some(v) = to {
        g.add_edge(prev, v).expect("closing edge is new");
        v
    } else {
        prev
    }
}

fn check_cycles(p: usize, q: usize) -> Result<(), BicyclicError> {
    if p < 3 || q < 3 {
        return Err(invalid(format!("cycle lengths must be >= 3, got p={p}, q={q}")));
    }
    Ok(())
}

/// `B(p,q)` with the shared vertex at `0`.
pub fn build_b_pq(p: usize, q: usize) -> Result<SimpleGraph, BicyclicError> {
    build_b_pq_paths_unchecked(p, q, &[])
}

/// `B(p,r,q)`: the path joins vertex `0` of `C_p` to the last cycle.
pub fn build_b_prq(p: usize, r: usize, q: usize) -> Result<SimpleGraph, BicyclicError> {
    check_cycles(p, q)?;
    if r == 0 {
        return Err(invalid("connecting path length must be >= 1"));
    }
    let n = p + q + r - 1;
    let mut g = SimpleGraph::new(n);
    let mut next = 1;
    add_path(&mut g, 0, Some(0), p, &mut next);
    let v = add_path(&mut g, 0, None, r, &mut next);
    add_path(&mut g, v, Some(v), q, &mut next);
    debug_assert_eq!(next, n);
    Ok(g)
}

/// `B(P_k,P_l,P_m)` with endpoints `x = 0`, `y = 1`; requires
/// `1 <= m <= min(k, l)` and at most one unit-length path.
pub fn build_theta(k: usize, l: usize, m: usize) -> Result<SimpleGraph, BicyclicError> {
    if m == 0 || m > k.min(l) {
        return Err(invalid(format!("theta needs 1 <= m <= min(k, l), got ({k},{l},{m})")));
    }
    if [k, l, m].iter().filter(|&&x| x == 1).count() > 1 {
        return Err(invalid(format!("theta ({k},{l},{m}) would need parallel edges")));
    }
    let n = k + l + m - 1;
    let mut g = SimpleGraph::new(n);
    let mut next = 2;
    for len in [k, l, m] {
        add_path(&mut g, 0, Some(1), len, &mut next);
    }
    debug_assert_eq!(next, n);
    Ok(g)
}

/// `B(p,q;p_1,...,p_s)` with `s >= 1` pendant paths on the shared vertex `0`.
pub fn build_b_pq_paths(p: usize, q: usize, lengths: &[usize]) -> Result<SimpleGraph, BicyclicError> {
    if lengths.is_empty() {
        return Err(invalid("at least one pendant path is required"));
    }
    if lengths.contains(&0) {
        return Err(invalid("pendant path lengths must be >= 1"));
    }
    build_b_pq_paths_unchecked(p, q, lengths)
}

fn build_b_pq_paths_unchecked(p: usize, q: usize, lengths: &[usize]) -> Result<SimpleGraph, BicyclicError> {
    check_cycles(p, q)?;
    let n = p + q - 1 + lengths.iter().sum::<usize>();
    let mut g = SimpleGraph::new(n);
    let mut next = 1;
    add_path(&mut g, 0, Some(0), p, &mut next);
    add_path(&mut g, 0, Some(0), q, &mut next);
    for &len in lengths {
        add_path(&mut g, 0, None, len, &mut next);
    }
    debug_assert_eq!(next, n);
    Ok(g)
}

/// Closed-form maximum for cases 1–4; `None` for case 5.
pub fn closed_form(case: BicyclicCase, n: u64, s: u64) -> Option<u64> {
    match case {
        BicyclicCase::ThetaWithChord => Some(4 * n + 17),
        BicyclicCase::SharedVertex => Some(4 * n + 20),
        BicyclicCase::LongPendantPaths => Some(4 * n + 2 * s * s + 10 * s + 20),
        BicyclicCase::ShortPendantPaths => Some(s * n + 6 * n + s + 10),
        BicyclicCase::Layered => None,
    }
}

/// Exact maximum of `M2` over bicyclic graphs with degree sequence `seq`,
/// with one optimal witness.
pub fn bicyclic_max(seq: &DegreeSequence) -> Result<BicyclicMaxResult, BicyclicError> {
    let class = seq.classify().map_err(|_| BicyclicError::NotConnectedRealizable)?;
    if class.kind != CycleClass::Bicyclic {
        return Err(BicyclicError::NotBicyclic(class.excess));
    }
    let d = seq.degrees();
    let n = d.len();
    let s = class.leaf_count;
    let (d1, d2, dn) = (d[0], d[1], d[n - 1]);

    let (case, family) = match (dn, d2) {
        (2, 3..) => {
            if d1 != 3 || d2 != 3 {
                return Err(BicyclicError::Infeasible(format!("{seq}: d_n = 2 and d_2 >= 3 force (3,3,2^(n-2))")));
            }
            let family = if n >= 6 {
                BicyclicFamily::TwoCyclesPath { p: 3, r: 1, q: n - 3 }
            } else {
                BicyclicFamily::Theta { k: 2, l: n - 2, m: 1 }
            };
            (BicyclicCase::ThetaWithChord, family)
        }
        (2, 2) => {
            if d1 != 4 {
                return Err(BicyclicError::Infeasible(format!("{seq}: d_n = d_2 = 2 forces (4,2^(n-1))")));
            }
            (BicyclicCase::SharedVertex, BicyclicFamily::TwoCyclesSharedVertex { p: 3, q: n - 2 })
        }
        (1, 2) => {
            if d1 as usize != s + 4 {
                return Err(BicyclicError::Infeasible(format!("{seq}: d_2 = 2 requires d_1 = s + 4 = {}", s + 4)));
            }
            // the two triangles use 5 vertices; the rest hang as s paths
            let spare = n - 5;
            if 2 * s <= spare {
                let mut paths = vec![spare - 2 * (s - 1)];
                paths.extend(core::iter::repeat_n(2, s - 1));
                (BicyclicCase::LongPendantPaths, BicyclicFamily::SharedVertexWithPaths { p: 3, q: 3, paths })
            } else {
                let twos = n - s - 5;
                let mut paths = vec![2; twos];
                paths.extend(core::iter::repeat_n(1, s - twos));
                (BicyclicCase::ShortPendantPaths, BicyclicFamily::SharedVertexWithPaths { p: 3, q: 3, paths })
            }
        }
        (1, 3..) => (BicyclicCase::Layered, BicyclicFamily::BmStar),
        _ => return Err(BicyclicError::Infeasible(format!("{seq}: unsupported degree profile"))),
    };

    let graph = match family {
        BicyclicFamily::BmStar => construct_bm_star(seq)?.graph,
        ref f => f.build()?,
    };
    debug_assert_eq!(graph.degree_sequence().ok().as_ref(), Some(seq));
    let value = match closed_form(case, n as u64, s as u64) {
        Some(v) => M2Value(v),
        None => graph.second_zagreb(),
    };
    Ok(BicyclicMaxResult { case, value, witness: BicyclicWitness { family, graph } })
}
