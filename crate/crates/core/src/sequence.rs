//! Degree sequences: validation, graphicness, classification and
//! majorization.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("degree sequence is empty")]
    Empty,
    #[error("degree at position {index} is zero; connected graphs need every degree >= 1")]
    ZeroDegree { index: usize },
    #[error("degree {degree} exceeds n - 1 = {max} for a simple graph on {n} vertices", max = .n - 1)]
    DegreeTooLarge { degree: u32, n: usize },
    #[error("degree sum {sum} is odd")]
    OddSum { sum: u64 },
    #[error("sequence has no connected realization")]
    NotConnectedRealizable,
    #[error("first sequence is not majorized by the second")]
    NotMajorized,
}

/// A non-increasing sequence of positive degrees with an even sum, every
/// entry at most `n - 1`.
///
/// Inputs are sorted on construction; [`DegreeSequence::was_reordered`]
/// records whether the caller's order had to change.
#[derive(Debug, Clone)]
pub struct DegreeSequence {
    degrees: Vec<u32>,
    reordered: bool,
}

// Identity is the multiset; the reorder flag is input provenance only.
impl PartialEq for DegreeSequence {
    fn eq(&self, other: &Self) -> bool {
        self.degrees == other.degrees
    }
}

impl Eq for DegreeSequence {}

impl core::hash::Hash for DegreeSequence {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.degrees.hash(state);
    }
}

impl PartialOrd for DegreeSequence {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DegreeSequence {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degrees.cmp(&other.degrees)
    }
}

impl DegreeSequence {
    pub fn new(mut degrees: Vec<u32>) -> Result<Self, SequenceError> {
        let n = degrees.len();
        if n == 0 {
            return Err(SequenceError::Empty);
        }
        if let Some(index) = degrees.iter().position(|&d| d == 0) {
            return Err(SequenceError::ZeroDegree { index });
        }
        if let Some(&degree) = degrees.iter().find(|&&d| d as usize >= n) {
            return Err(SequenceError::DegreeTooLarge { degree, n });
        }
        let sum: u64 = degrees.iter().map(|&d| u64::from(d)).sum();
        if sum % 2 == 1 {
            return Err(SequenceError::OddSum { sum });
        }
        let reordered = degrees.windows(2).any(|w| w[0] < w[1]);
        if reordered {
            degrees.sort_unstable_by(|a, b| b.cmp(a));
        }
        Ok(DegreeSequence { degrees, reordered })
    }

    /// Caller guarantees every invariant; used for sequences derived from
    /// already-valid ones.
    pub(crate) fn from_sorted(degrees: Vec<u32>) -> Self {
        debug_assert!(degrees.windows(2).all(|w| w[0] >= w[1]));
        DegreeSequence { degrees, reordered: false }
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// `true` when the input was not already non-increasing.
    pub fn was_reordered(&self) -> bool {
        self.reordered
    }

    pub fn sum(&self) -> u64 {
        self.degrees.iter().map(|&d| u64::from(d)).sum()
    }

    /// Cyclomatic excess `c = sum / 2 - n`, i.e. `|E| - |V|` of any realization.
    pub fn excess(&self) -> i64 {
        (self.sum() / 2) as i64 - self.len() as i64
    }

    /// Number of entries equal to `degree`.
    pub fn count_of(&self, degree: u32) -> usize {
        self.degrees.iter().filter(|&&d| d == degree).count()
    }

    /// Run lengths of equal degrees, largest degree first.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut runs: Vec<(u32, usize)> = Vec::new();
        for &d in &self.degrees {
            match runs.last_mut() {
                Some((value, count)) if *value == d => *count += 1,
                _ => runs.push((d, 1)),
            }
        }
        runs
    }

    pub fn is_graphic(&self) -> bool {
        is_graphic_sorted(&self.degrees)
    }

    pub fn is_connected_realizable(&self) -> bool {
        let n = self.len() as u64;
        self.is_graphic() && self.sum() >= 2 * (n - 1)
    }

    pub fn classify(&self) -> Result<SequenceClass, SequenceError> {
        if !self.is_connected_realizable() {
            return Err(SequenceError::NotConnectedRealizable);
        }
        let excess = self.excess();
        Ok(SequenceClass {
            excess,
            kind: CycleClass::from_excess(excess),
            leaf_count: self.count_of(1),
            degree2_count: self.count_of(2),
        })
    }

    /// Evaluates the four hypotheses under which the layered construction is
    /// optimal.
    pub fn check_conditions(&self) -> ConditionReport {
        let d = &self.degrees;
        let n = d.len();
        let c = self.excess();
        let sum_condition = c >= -1;
        let top_two_condition = n >= 2 && i64::from(d[1]) >= c + 2;
        let plateau_condition = if c <= 0 {
            true
        } else {
            let last = c as usize + 2;
            last < n && d[3..=last].windows(2).all(|w| w[0] == w[1])
        };
        let leaf_condition = d[n - 1] == 1;
        ConditionReport { excess: c, sum_condition, top_two_condition, plateau_condition, leaf_condition }
    }

    /// Majorization order: `ALessB` when `self ⊴ other`.
    pub fn majorization_cmp(&self, other: &DegreeSequence) -> MajorizationOrder {
        majorization_cmp_slices(&self.degrees, &other.degrees)
    }

    /// Chain of unit transfers from `self` up to `target`.
    ///
    /// Each step raises the first position where the target's prefix sum
    /// pulls ahead, and lowers the last entry of the block holding the first
    /// later position where the current sequence exceeds the target.
    pub fn majorization_chain(&self, target: &DegreeSequence) -> Result<MajorizationChain, SequenceError> {
        match self.majorization_cmp(target) {
            MajorizationOrder::Equal | MajorizationOrder::ALessB => {}
            _ => return Err(SequenceError::NotMajorized),
        }
        let goal = target.degrees();
        let mut current = self.degrees.clone();
        let mut steps = alloc::vec![DegreeSequence::from_sorted(current.clone())];
        while current != goal {
            let p = current.iter().zip(goal).position(|(a, b)| a != b).expect("sequences differ");
            debug_assert!(current[p] < goal[p]);
            let q = (p + 1..current.len()).find(|&i| current[i] > goal[i]).expect("equal sums force a later surplus");
            let mut q_end = q;
            while q_end + 1 < current.len() && current[q_end + 1] == current[q] {
                q_end += 1;
            }
            current[p] += 1;
            current[q_end] -= 1;
            steps.push(DegreeSequence::from_sorted(current.clone()));
        }
        Ok(MajorizationChain { steps })
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.degrees.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Prefix-sum dominance between two non-increasing vectors.
pub fn majorization_cmp_slices(a: &[u32], b: &[u32]) -> MajorizationOrder {
    let sum = |v: &[u32]| v.iter().map(|&d| u64::from(d)).sum::<u64>();
    if a.len() != b.len() || sum(a) != sum(b) {
        return MajorizationOrder::Incomparable;
    }
    if a == b {
        return MajorizationOrder::Equal;
    }
    let (mut pa, mut pb) = (0u64, 0u64);
    let (mut a_le, mut b_le) = (true, true);
    for (&x, &y) in a.iter().zip(b) {
        pa += u64::from(x);
        pb += u64::from(y);
        match pa.cmp(&pb) {
            Ordering::Less => b_le = false,
            Ordering::Greater => a_le = false,
            Ordering::Equal => {}
        }
    }
    match (a_le, b_le) {
        (true, false) => MajorizationOrder::ALessB,
        (false, true) => MajorizationOrder::BLessA,
        _ => MajorizationOrder::Incomparable,
    }
}

/// Erdős–Gallai test on a non-increasing sequence; zero entries allowed.
pub fn is_graphic_sorted(degrees: &[u32]) -> bool {
    debug_assert!(degrees.windows(2).all(|w| w[0] >= w[1]));
    let n = degrees.len();
    let total: u64 = degrees.iter().map(|&d| u64::from(d)).sum();
    if total % 2 == 1 {
        return false;
    }
    if degrees.first().is_some_and(|&d| d as usize >= n) {
        return false;
    }
    let mut prefix = 0u64;
    for k in 1..=n {
        prefix += u64::from(degrees[k - 1]);
        let kk = k as u64;
        let tail: u64 = degrees[k..].iter().map(|&d| u64::from(d).min(kk)).sum();
        if prefix > kk * (kk - 1) + tail {
            return false;
        }
    }
    true
}

/// All connected-realizable sequences of order `n` and excess `excess`, in
/// lexicographically increasing order.
pub fn connected_realizable_sequences(n: usize, excess: i64) -> Vec<DegreeSequence> {
    let mut out = Vec::new();
    if n < 2 || excess < -1 {
        return out;
    }
    let target = 2 * (n as i64 + excess);
    let max_degree = (n - 1) as u32;
    if target > (n * (n - 1)) as i64 {
        return out;
    }
    let mut current = Vec::with_capacity(n);
    partitions(target as u32, n, max_degree, &mut current, &mut out);
    out.reverse();
    out
}

fn partitions(remaining: u32, slots: usize, cap: u32, current: &mut Vec<u32>, out: &mut Vec<DegreeSequence>) {
    if slots == 0 {
        if remaining == 0 && is_graphic_sorted(current) {
            out.push(DegreeSequence::from_sorted(current.clone()));
        }
        return;
    }
    // every remaining slot needs at least 1 and at most `d`
    let slots_u = slots as u32;
    if remaining < slots_u {
        return;
    }
    let hi = cap.min(remaining - (slots_u - 1));
    for d in (1..=hi).rev() {
        if d * slots_u < remaining {
            break;
        }
        current.push(d);
        partitions(remaining - d, slots - 1, d, current, out);
        current.pop();
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CycleClass {
    Tree,
    Unicyclic,
    Bicyclic,
    Multicyclic,
}

impl CycleClass {
    pub fn from_excess(excess: i64) -> Self {
        match excess {
            i64::MIN..=-1 => CycleClass::Tree,
            0 => CycleClass::Unicyclic,
            1 => CycleClass::Bicyclic,
            _ => CycleClass::Multicyclic,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CycleClass::Tree => "tree",
            CycleClass::Unicyclic => "unicyclic",
            CycleClass::Bicyclic => "bicyclic",
            CycleClass::Multicyclic => "multicyclic",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SequenceClass {
    pub excess: i64,
    pub kind: CycleClass,
    pub leaf_count: usize,
    pub degree2_count: usize,
}

/// Conditions (i) to (iv) under which the layered construction is optimal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConditionReport {
    pub excess: i64,
    /// Degree sum is `2(n + c)` with `c >= -1`.
    pub sum_condition: bool,
    /// `d1 >= d2 >= c + 2`.
    pub top_two_condition: bool,
    /// `d3 >= d4 = ... = d_{c+3}`; vacuous for `c <= 0`.
    pub plateau_condition: bool,
    /// `dn = 1`.
    pub leaf_condition: bool,
}

impl ConditionReport {
    pub fn verdict(&self) -> bool {
        self.sum_condition && self.top_two_condition && self.plateau_condition && self.leaf_condition
    }

    /// Everything except the plateau condition holds.
    pub fn admits_construction(&self) -> bool {
        self.sum_condition && self.top_two_condition && self.leaf_condition
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MajorizationOrder {
    Equal,
    ALessB,
    BLessA,
    Incomparable,
}

impl MajorizationOrder {
    pub fn name(self) -> &'static str {
        match self {
            MajorizationOrder::Equal => "Equal",
            MajorizationOrder::ALessB => "ALessB",
            MajorizationOrder::BLessA => "BLessA",
            MajorizationOrder::Incomparable => "Incomparable",
        }
    }
}

/// Sequences from the lower end to the upper end of a majorization pair,
/// inclusive, consecutive entries differing by one unit transfer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MajorizationChain {
    steps: Vec<DegreeSequence>,
}

impl MajorizationChain {
    pub fn steps(&self) -> &[DegreeSequence] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `(p, q)` for each step: position `p` gained a unit, `q` lost one.
    pub fn transfers(&self) -> Vec<(usize, usize)> {
        self.steps
            .windows(2)
            .map(|w| {
                let (a, b) = (w[0].degrees(), w[1].degrees());
                let p = (0..a.len()).find(|&i| b[i] > a[i]).expect("gain");
                let q = (0..a.len()).find(|&i| b[i] < a[i]).expect("loss");
                (p, q)
            })
            .collect()
    }
}
