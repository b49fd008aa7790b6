//! Exhaustive checks of one statement over a rectangular parameter grid.

use std::ops::RangeInclusive;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::{BinomialProductMode, Case, CongruenceReport, Statement};
use crate::error::{Error, Result};

/// Independent parameter ranges for a sweep. Each statement draws the ranges
/// it uses, drops tuples that violate its preconditions (`p = 0`, `q < 1`
/// where `q` must be positive, and so on) and enumerates dependent indices
/// (`t`, `l`, `i`) over their full admissible range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRanges {
    pub n: RangeInclusive<i64>,
    pub m: RangeInclusive<i64>,
    pub p: RangeInclusive<i64>,
    pub q: RangeInclusive<i64>,
    pub alpha: RangeInclusive<i64>,
    pub s: RangeInclusive<i64>,
}

impl SweepRanges {
    /// `n in [0, max_n]`, `m in [0, max_m]`, `p in [-max_p, max_p]`,
    /// `q in [-max_q, max_q]`, `alpha in [0, 5]`, `s in [0, max_n]`.
    pub fn up_to(max_n: i64, max_m: i64, max_p: i64, max_q: i64) -> Self {
        Self {
            n: 0..=max_n,
            m: 0..=max_m,
            p: -max_p..=max_p,
            q: -max_q..=max_q,
            alpha: 0..=5,
            s: 0..=max_n,
        }
    }

    pub fn with_alpha(mut self, alpha: RangeInclusive<i64>) -> Self {
        self.alpha = alpha;
        self
    }

    pub fn with_s(mut self, s: RangeInclusive<i64>) -> Self {
        self.s = s;
        self
    }

    /// All admissible tuples of `statement`, in lexicographic loop order.
    pub fn cases(&self, statement: Statement) -> Vec<Case> {
        let nat = |r: &RangeInclusive<i64>| r.clone().filter(|v| *v >= 0);
        let pos = |r: &RangeInclusive<i64>| r.clone().filter(|v| *v >= 1);
        let nonzero = |r: &RangeInclusive<i64>| r.clone().filter(|v| *v != 0);
        let mut out = Vec::new();
        match statement {
            Statement::Carlitz => {
                for n in nat(&self.n) {
                    for m in pos(&self.m) {
                        for alpha in nat(&self.alpha) {
                            out.push(Case::Carlitz { n, m, alpha });
                        }
                    }
                }
            }
            Statement::Pochhammer => {
                for n in nat(&self.n) {
                    for m in nat(&self.m) {
                        for t in 0..=n {
                            for l in 0..=m {
                                for p in nonzero(&self.p) {
                                    for q in nonzero(&self.q) {
                                        out.push(Case::Pochhammer { n, m, t, l, p, q });
                                    }
                                }
                            }
                        }
                    }
                }
            }
            Statement::ParameterShift => {
                for n in nat(&self.n) {
                    for m in nat(&self.m) {
                        for q in pos(&self.q) {
                            for i in q..=m + q {
                                for p in nonzero(&self.p) {
                                    out.push(Case::ParameterShift { n, m, q, i, p });
                                }
                            }
                        }
                    }
                }
            }
            Statement::AlphaPeriodicity => {
                for n in nat(&self.n) {
                    for m in nat(&self.m) {
                        for q in pos(&self.q) {
                            out.push(Case::AlphaPeriodicity { n, m, q });
                        }
                    }
                }
            }
            Statement::BinomialPochhammer => {
                for m in nat(&self.m) {
                    for n in nat(&self.n) {
                        for q in pos(&self.q) {
                            for i in q..=m + q {
                                for p in nonzero(&self.p) {
                                    out.push(Case::BinomialPochhammer { m, n, q, i, p });
                                }
                            }
                        }
                    }
                }
            }
            Statement::BinomialProduct => {
                for m in nat(&self.m) {
                    for s in nat(&self.s) {
                        for q in pos(&self.q) {
                            for i in q..=m + q {
                                let mode = BinomialProductMode::WithFactorial;
                                out.push(Case::BinomialProduct { m, s, q, i, mode });
                            }
                        }
                    }
                }
            }
            Statement::Main => {
                for n in nat(&self.n) {
                    for m in nat(&self.m) {
                        for p in pos(&self.p) {
                            for q in pos(&self.q) {
                                out.push(Case::Main { n, m, p, q });
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub statement: Statement,
    pub checked: usize,
    pub failed: usize,
    pub failures: Vec<CongruenceReport>,
    /// Wall time; left out of the JSON so output is identical across job counts.
    #[serde(skip)]
    pub elapsed_ms: u128,
}

/// Runs every case of `statement` in `ranges` on `jobs` worker threads
/// (`0` picks the rayon default). Failures are listed in case order
/// regardless of the worker count.
pub fn sweep(statement: Statement, ranges: &SweepRanges, jobs: usize) -> Result<SweepSummary> {
    let start = Instant::now();
    let cases = ranges.cases(statement);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Internal(format!("cannot start worker pool: {e}")))?;
    let reports: Vec<CongruenceReport> =
        pool.install(|| cases.par_iter().map(Case::check).collect::<Result<_>>())?;
    let failures: Vec<_> = reports.into_iter().filter(|r| !r.holds).collect();
    Ok(SweepSummary {
        statement,
        checked: cases.len(),
        failed: failures.len(),
        failures,
        elapsed_ms: start.elapsed().as_millis(),
    })
}
