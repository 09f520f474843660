//! Exhaustive finite-frame validity search.
//!
//! Frames on `n` worlds are numbered `0..2^(n*n)`: bit `i * n + j` of the
//! number says whether world `i` sees world `j`. Worlds are named
//! `w1..wn`. Searches walk sizes `1..=max` and frame numbers in order, so
//! the first countermodel is well defined no matter how the frame space is
//! split across worker threads.

pub mod corpus;

use std::collections::BTreeMap;
use std::sync::Arc;
use std::thread;

use serde::Serialize;
use thiserror::Error;

use crate::budget::{Budget, BudgetExceeded};
use crate::frames::FrameClass;
use crate::kripke::{decode_valuation, first_failure, Evaluable, Frame, Program};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecideError {
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error("world count bound must be at least 1")]
    ZeroWorlds,
}

/// World names `w1..wn`.
pub fn world_names(n: usize) -> Arc<[String]> {
    (1..=n).map(|i| format!("w{i}")).collect::<Vec<_>>().into()
}

fn successors_of(n: usize, index: u64) -> Vec<u64> {
    let all = crate::kripke::all_mask(n);
    (0..n).map(|i| (index >> (i * n)) & all).collect()
}

/// Frame number `index` on the worlds `w1..wn`.
pub fn frame_at(n: usize, index: u64) -> Frame {
    Frame::from_successors(world_names(n), successors_of(n, index))
}

/// All `2^(n*n)` frames on `n` worlds, in frame-number order.
pub fn enumerate_frames(n: usize, budget: &Budget) -> Result<Vec<Frame>, DecideError> {
    if n == 0 {
        return Err(DecideError::ZeroWorlds);
    }
    budget.check_pow2("frames", (n * n) as u32)?;
    let names = world_names(n);
    Ok((0u64..1 << (n * n))
        .map(|k| Frame::from_successors(Arc::clone(&names), successors_of(n, k)))
        .collect())
}

/// Which frames a search ranges over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassQuery {
    pub base: FrameClass,
    /// Query the mirror closure of `base`: frames that agree off the
    /// diagonal with some member of `base`.
    pub mirror_closed: bool,
    pub max_world_count: usize,
}

impl ClassQuery {
    pub fn new(base: FrameClass, max_world_count: usize) -> Self {
        ClassQuery {
            base,
            mirror_closed: false,
            max_world_count,
        }
    }

    pub fn mirror_closed(mut self) -> Self {
        self.mirror_closed = true;
        self
    }

    pub fn contains(&self, f: &Frame) -> bool {
        self.contains_masks(f.successor_masks())
    }

    fn contains_masks(&self, succ: &[u64]) -> bool {
        if self.mirror_closed {
            self.base.mirror_closure_contains(succ)
        } else {
            self.base.contains_masks(succ)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub budget: Budget,
    /// Worker threads per frame size. Results do not depend on it.
    pub workers: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: Budget::default(),
            workers: 1,
        }
    }
}

impl SearchOptions {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportVerdict {
    /// No countermodel among frames up to the bound. This is not a claim
    /// about frames beyond the bound.
    ValidUpToBound,
    Countermodel,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Countermodel {
    pub frame: Frame,
    pub valuation: BTreeMap<String, Vec<String>>,
    pub world: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidityReport {
    pub verdict: ReportVerdict,
    pub countermodel: Option<Countermodel>,
    /// Class members examined, up to and including the countermodel frame.
    pub frames_checked: u64,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.verdict == ReportVerdict::ValidUpToBound
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

struct ChunkResult {
    members: u64,
    failure: Option<(u64, usize, u64)>,
}

fn search_chunk(
    prog: &Program,
    root: usize,
    q: &ClassQuery,
    n: usize,
    names: &Arc<[String]>,
    range: std::ops::Range<u64>,
) -> ChunkResult {
    let mut members = 0;
    let mut scratch = Vec::new();
    for index in range {
        let succ = successors_of(n, index);
        if !q.contains_masks(&succ) {
            continue;
        }
        members += 1;
        let frame = Frame::from_successors(Arc::clone(names), succ);
        if let Some((w, k)) = first_failure(prog, root, &frame, &mut scratch) {
            return ChunkResult {
                members,
                failure: Some((index, w, k)),
            };
        }
    }
    ChunkResult {
        members,
        failure: None,
    }
}

/// Decides validity of `f` over the frames of `q`, up to the world bound.
pub fn valid_over_class<F: Evaluable>(
    f: &F,
    q: &ClassQuery,
    opts: &SearchOptions,
) -> Result<ValidityReport, DecideError> {
    if q.max_world_count == 0 {
        return Err(DecideError::ZeroWorlds);
    }
    let (prog, root) = Program::single(f);
    let nvars = prog.vars().len();
    for n in 1..=q.max_world_count {
        opts.budget.check_pow2("frames", (n * n) as u32)?;
        opts.budget.check_pow2("valuations", (n * nvars) as u32)?;
    }

    let mut frames_checked = 0;
    for n in 1..=q.max_world_count {
        let names = world_names(n);
        let total = 1u64 << (n * n);
        let workers = (opts.workers.max(1) as u64).min(total);
        let step = total.div_ceil(workers);
        let ranges: Vec<_> = (0..workers)
            .map(|i| (i * step).min(total)..((i + 1) * step).min(total))
            .collect();

        let results: Vec<ChunkResult> = if workers == 1 {
            vec![search_chunk(&prog, root, q, n, &names, 0..total)]
        } else {
            thread::scope(|s| {
                let handles: Vec<_> = ranges
                    .into_iter()
                    .map(|r| {
                        let (prog, names) = (&prog, &names);
                        s.spawn(move || search_chunk(prog, root, q, n, names, r))
                    })
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("search worker panicked"))
                    .collect()
            })
        };

        for chunk in results {
            frames_checked += chunk.members;
            if let Some((index, w, k)) = chunk.failure {
                let frame = frame_at(n, index);
                let countermodel = Countermodel {
                    valuation: decode_valuation(&frame, prog.vars(), k),
                    world: frame.world(w).to_string(),
                    frame,
                };
                return Ok(ValidityReport {
                    verdict: ReportVerdict::Countermodel,
                    countermodel: Some(countermodel),
                    frames_checked,
                });
            }
        }
    }
    Ok(ValidityReport {
        verdict: ReportVerdict::ValidUpToBound,
        countermodel: None,
        frames_checked,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Comparison {
    Agree {
        verdict: ReportVerdict,
    },
    /// Exactly one query found a countermodel.
    Disagree {
        refuted_by: QuerySide,
        witness: Countermodel,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QuerySide {
    First,
    Second,
}

impl Comparison {
    pub fn agrees(&self) -> bool {
        matches!(self, Comparison::Agree { .. })
    }
}

/// Runs the same validity search under two class queries.
pub fn compare_class_validity<F: Evaluable>(
    f: &F,
    q1: &ClassQuery,
    q2: &ClassQuery,
    opts: &SearchOptions,
) -> Result<Comparison, DecideError> {
    let first = valid_over_class(f, q1, opts)?;
    let second = valid_over_class(f, q2, opts)?;
    Ok(match (first.countermodel, second.countermodel) {
        (None, None) => Comparison::Agree {
            verdict: ReportVerdict::ValidUpToBound,
        },
        (Some(_), Some(_)) => Comparison::Agree {
            verdict: ReportVerdict::Countermodel,
        },
        (Some(witness), None) => Comparison::Disagree {
            refuted_by: QuerySide::First,
            witness,
        },
        (None, Some(witness)) => Comparison::Disagree {
            refuted_by: QuerySide::Second,
            witness,
        },
    })
}
