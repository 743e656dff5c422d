//! Schedules: ordered rounds of (matching, duration), their cost, and the
//! feasibility validator.
//!
//! A round configures the switch to one matching and keeps it for the
//! round's duration. An edge present in a round transmits
//! `min(duration, remaining demand)`; leftover demand resumes in a later
//! round. A schedule is feasible when every round is a matching over the
//! instance's indices and every edge ends up served for exactly its weight.

use crate::instance::PbsInstance;
use crate::rational::{q, Q};
use num::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// The schedulers shipped by this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Posa,
    Os01pt,
    IOs01pt,
    IHsa,
    Sga,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Posa,
        Algorithm::Os01pt,
        Algorithm::IOs01pt,
        Algorithm::IHsa,
        Algorithm::Sga,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Posa => "posa",
            Algorithm::Os01pt => "os01pt",
            Algorithm::IOs01pt => "i-os01pt",
            Algorithm::IHsa => "i-hsa",
            Algorithm::Sga => "sga",
        }
    }

    pub fn from_name(name: &str) -> Option<Algorithm> {
        Algorithm::ALL.into_iter().find(|a| a.name() == name)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A set of (source, dest) pairs meant to share no endpoint.
///
/// Construction normalizes to canonical (source, dest) order but does not
/// reject conflicting pairs: schedules read from external files may violate
/// the matching property, and `validate_schedule` is the operation that
/// reports such conflicts. Matchings produced by the algorithms in this
/// crate always satisfy the invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Self {
        pairs.sort_unstable();
        Self { pairs }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// True when no source and no destination appears twice.
    pub fn is_valid(&self) -> bool {
        let mut sources: Vec<usize> = self.pairs.iter().map(|p| p.0).collect();
        let mut dests: Vec<usize> = self.pairs.iter().map(|p| p.1).collect();
        sources.sort_unstable();
        dests.sort_unstable();
        sources.windows(2).all(|w| w[0] != w[1]) && dests.windows(2).all(|w| w[0] != w[1])
    }
}

/// One switch configuration held for `duration` time units.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Round {
    pub matching: Matching,
    pub duration: Q,
}

/// An ordered sequence of rounds plus the label of the producing algorithm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schedule {
    algorithm: Algorithm,
    rounds: Vec<Round>,
}

impl Schedule {
    pub fn new(algorithm: Algorithm, rounds: Vec<Round>) -> Self {
        Self { algorithm, rounds }
    }

    pub fn algorithm(&self) -> Algorithm {
        self.algorithm
    }

    pub fn rounds(&self) -> &[Round] {
        &self.rounds
    }

    pub fn num_rounds(&self) -> usize {
        self.rounds.len()
    }

    pub fn total_duration(&self) -> Q {
        self.rounds.iter().map(|r| r.duration).sum()
    }

    /// Schedule cost: Σ round durations + d · (number of rounds).
    pub fn cost(&self, setup_cost: Q) -> Q {
        self.total_duration() + setup_cost * q(self.num_rounds() as i64)
    }

    /// Same rounds under a different algorithm label.
    pub fn retagged(mut self, algorithm: Algorithm) -> Self {
        self.algorithm = algorithm;
        self
    }
}

/// A single feasibility defect found by `validate_schedule`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// A round uses a pair that is not an edge of the instance (also covers
    /// out-of-range indices).
    UnknownEdge {
        round: usize,
        source: usize,
        dest: usize,
    },
    DuplicateSource { round: usize, source: usize },
    DuplicateDest { round: usize, dest: usize },
    NonPositiveDuration { round: usize, duration: Q },
    /// An edge appears in a round although its demand was already fully
    /// served in earlier rounds.
    ServedAfterExhaustion {
        round: usize,
        source: usize,
        dest: usize,
    },
    /// Total allocated time fell short of the edge weight.
    UnderServed {
        source: usize,
        dest: usize,
        missing: Q,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnknownEdge {
                round,
                source,
                dest,
            } => write!(f, "round {round}: pair ({source}, {dest}) is not an instance edge"),
            Violation::DuplicateSource { round, source } => {
                write!(f, "round {round}: source {source} appears twice")
            }
            Violation::DuplicateDest { round, dest } => {
                write!(f, "round {round}: dest {dest} appears twice")
            }
            Violation::NonPositiveDuration { round, duration } => {
                write!(f, "round {round}: non-positive duration {duration}")
            }
            Violation::ServedAfterExhaustion {
                round,
                source,
                dest,
            } => write!(
                f,
                "round {round}: edge ({source}, {dest}) already fully served"
            ),
            Violation::UnderServed {
                source,
                dest,
                missing,
            } => write!(
                f,
                "edge ({source}, {dest}) under-served by {missing}"
            ),
        }
    }
}

/// Validator verdict: ok, or the list of violations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return f.write_str("ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks a schedule against an instance.
///
/// Allocation semantics: within a round of duration δ, each listed edge
/// transmits `min(δ, remaining demand)`. The verdict is ok iff every round
/// is a valid matching of instance edges and every edge's allocations sum
/// to exactly its weight.
pub fn validate_schedule(inst: &PbsInstance, sched: &Schedule) -> ValidationReport {
    let mut violations = Vec::new();
    let mut remaining: BTreeMap<(usize, usize), Q> = inst
        .edges()
        .iter()
        .map(|e| ((e.source, e.dest), e.weight))
        .collect();

    for (round_idx, round) in sched.rounds().iter().enumerate() {
        if round.duration <= Q::zero() {
            violations.push(Violation::NonPositiveDuration {
                round: round_idx,
                duration: round.duration,
            });
            continue;
        }
        let mut used_sources = Vec::new();
        let mut used_dests = Vec::new();
        for &(source, dest) in round.matching.pairs() {
            if used_sources.contains(&source) {
                violations.push(Violation::DuplicateSource {
                    round: round_idx,
                    source,
                });
                continue;
            }
            if used_dests.contains(&dest) {
                violations.push(Violation::DuplicateDest { round: round_idx, dest });
                continue;
            }
            used_sources.push(source);
            used_dests.push(dest);
            let Some(rem) = remaining.get_mut(&(source, dest)) else {
                violations.push(Violation::UnknownEdge {
                    round: round_idx,
                    source,
                    dest,
                });
                continue;
            };
            if rem.is_zero() {
                violations.push(Violation::ServedAfterExhaustion {
                    round: round_idx,
                    source,
                    dest,
                });
                continue;
            }
            let allocated = round.duration.min(*rem);
            *rem -= allocated;
        }
    }

    for ((source, dest), rem) in remaining {
        if !rem.is_zero() {
            violations.push(Violation::UnderServed {
                source,
                dest,
                missing: rem,
            });
        }
    }

    ValidationReport { violations }
}
