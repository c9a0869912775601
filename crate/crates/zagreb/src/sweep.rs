//! Exact maxima over every connected-realizable sequence of a given order
//! and cyclomatic excess, with a monotonicity check along the majorization
//! order.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;
use zagreb_core::sequence::connected_realizable_sequences;
use zagreb_core::{
    bicyclic_max, construct_gm_star, oracle_max_m2, BicyclicCase, BicyclicError, DegreeSequence, MajorizationOrder,
    SearchError,
};

#[derive(Debug, Error)]
pub enum SweepError {
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Bicyclic(#[from] BicyclicError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ValueSource {
    ClosedForm,
    BmStar,
    Oracle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub sequence: String,
    pub m2_max: u64,
    pub source: ValueSource,
    /// `M2` of the layered construction when its hypotheses allow building it.
    pub constructor_m2: Option<u64>,
    pub constructor_optimal: Option<bool>,
    /// Oracle value, present when cross-checking a closed form.
    pub oracle_m2: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub lower: String,
    pub upper: String,
    pub lower_m2: u64,
    pub upper_m2: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepOutcome {
    pub n: usize,
    pub excess: i64,
    pub rows: Vec<SweepRow>,
    pub comparable_pairs: Option<usize>,
    pub violations: Option<Vec<Violation>>,
    pub oracle_mismatches: Vec<String>,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, Copy)]
pub struct SweepOptions {
    pub cap: usize,
    pub verify_monotone: bool,
    /// Also run the oracle on sequences with a closed form.
    pub cross_check: bool,
}

fn evaluate(seq: &DegreeSequence, opts: SweepOptions) -> Result<SweepRow, SweepError> {
    let (m2_max, source, oracle_m2) = if seq.excess() == 1 {
        let best = bicyclic_max(seq)?;
        let source = if best.case == BicyclicCase::Layered { ValueSource::BmStar } else { ValueSource::ClosedForm };
        let oracle = if opts.cross_check { Some(oracle_max_m2(seq, opts.cap)?.max_m2.get()) } else { None };
        (best.value.get(), source, oracle)
    } else {
        (oracle_max_m2(seq, opts.cap)?.max_m2.get(), ValueSource::Oracle, None)
    };
    let constructor_m2 = construct_gm_star(seq).ok().map(|t| t.m2().get());
    Ok(SweepRow {
        sequence: seq.to_string(),
        m2_max,
        source,
        constructor_m2,
        constructor_optimal: constructor_m2.map(|c| c == m2_max),
        oracle_m2,
    })
}

pub fn sweep(n: usize, excess: i64, opts: SweepOptions) -> Result<SweepOutcome, SweepError> {
    let start = Instant::now();
    let seqs = connected_realizable_sequences(n, excess);
    if seqs.iter().any(|s| s.excess() != 1 || opts.cross_check) && n > opts.cap {
        return Err(SearchError::CapExceeded { n, cap: opts.cap }.into());
    }
    let rows: Vec<SweepRow> = seqs.par_iter().map(|s| evaluate(s, opts)).collect::<Result<_, _>>()?;

    let oracle_mismatches =
        rows.iter().filter(|r| r.oracle_m2.is_some_and(|o| o != r.m2_max)).map(|r| r.sequence.clone()).collect();

    let (comparable_pairs, violations) = if opts.verify_monotone {
        let mut pairs = 0;
        let mut bad = Vec::new();
        for (i, a) in seqs.iter().enumerate() {
            for (j, b) in seqs.iter().enumerate() {
                if a.majorization_cmp(b) != MajorizationOrder::ALessB {
                    continue;
                }
                pairs += 1;
                if rows[i].m2_max >= rows[j].m2_max {
                    bad.push(Violation {
                        lower: rows[i].sequence.clone(),
                        upper: rows[j].sequence.clone(),
                        lower_m2: rows[i].m2_max,
                        upper_m2: rows[j].m2_max,
                    });
                }
            }
        }
        (Some(pairs), Some(bad))
    } else {
        (None, None)
    };

    Ok(SweepOutcome {
        n,
        excess,
        rows,
        comparable_pairs,
        violations,
        oracle_mismatches,
        elapsed_ms: start.elapsed().as_millis(),
    })
}
