//! Gain functions the solvers maximize. The contract every implementation
//! must honor: monotone in the attribute set (adding an attribute never
//! lowers the score), deterministic, and read-only against the dataset. The
//! solvers prune on nothing else.

use std::sync::atomic::{AtomicU64, Ordering};

use num_traits::ToPrimitive;

use crate::fbc::{fbc_bruteforce, fbc_with_stats, MaximalFrequentSet};
use crate::model::{AttrSet, Dataset};

#[derive(Debug, Clone, PartialEq)]
pub enum GainError {
    /// The gain was built against a different dataset than the one handed to
    /// the solve. Fingerprints are compared on every evaluation; the check is
    /// one integer comparison and has caught real mix-ups.
    DatasetMismatch { expected: u64, got: u64 },
    /// Oracle auditing found the fast count disagreeing with enumeration.
    OracleMismatch { node: String, fast: String, oracle: String },
    NegativeFeedback { row: usize, value: f64 },
    FeedbackLength { expected: usize, got: usize },
    EmptyWorkload,
    /// Raw workload scoring hit a node no row matches.
    ZeroDenominator { node: String },
}

impl std::fmt::Display for GainError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GainError::DatasetMismatch { expected, got } => {
                write!(f, "gain built for dataset {expected:#018x}, evaluated against {got:#018x}")
            }
            GainError::OracleMismatch { node, fast, oracle } => {
                write!(f, "count mismatch at {node}: fast {fast}, enumeration {oracle}")
            }
            GainError::NegativeFeedback { row, value } => {
                write!(f, "feedback for row {row} is {value}; scores must be non-negative")
            }
            GainError::FeedbackLength { expected, got } => {
                write!(f, "feedback vector has {got} entries, dataset has {expected} rows")
            }
            GainError::EmptyWorkload => write!(f, "workload gain needs at least one query"),
            GainError::ZeroDenominator { node } => {
                write!(f, "no row matches {node} and smoothing is off")
            }
        }
    }
}

impl std::error::Error for GainError {}

/// Score for a full attribute node. Implementations must be monotone
/// (`a ⊆ b` implies `evaluate(a) ≤ evaluate(b)`), deterministic, and
/// read-only; `Sync` so concurrent solves can share one instance.
pub trait GainFunction: Sync {
    fn evaluate(&self, attrs: AttrSet, d: &Dataset) -> Result<f64, GainError>;
    fn name(&self) -> &str;
}

// ─── frequent-based count ───────────────────────────────────────────────────

/// Counts the frequent attribute combinations dominated by the node, using
/// maximal frequent sets mined once up front. Evaluation never touches the
/// rows: it projects the maximal sets onto the node and runs the partition
/// count, so its cost depends on the family size, not on n.
///
/// Scores are exact integers as long as the count fits 2^53; beyond that the
/// f64 conversion rounds, which only matters above m ≈ 53.
pub struct FbcGain {
    fv: MaximalFrequentSet,
    oracle_check: bool,
    evals: AtomicU64,
    audit_violations: AtomicU64,
}

impl FbcGain {
    pub fn new(fv: MaximalFrequentSet, d: &Dataset) -> Result<FbcGain, GainError> {
        if fv.fingerprint() != d.fingerprint() {
            return Err(GainError::DatasetMismatch {
                expected: fv.fingerprint(),
                got: d.fingerprint(),
            });
        }
        Ok(FbcGain {
            fv,
            oracle_check: false,
            evals: AtomicU64::new(0),
            audit_violations: AtomicU64::new(0),
        })
    }

    /// Re-derives every evaluation by subset enumeration and errors on any
    /// disagreement. Exponential in node level; testing aid only.
    pub fn with_oracle_check(mut self) -> FbcGain {
        self.oracle_check = true;
        self
    }

    pub fn maximal_sets(&self) -> &MaximalFrequentSet {
        &self.fv
    }

    pub fn evals(&self) -> u64 {
        self.evals.load(Ordering::Relaxed)
    }

    /// Evaluations whose recursion-call count exceeded the
    /// `min(count, |F_v|^2) + |F_v|` budget. Stays zero unless the counting
    /// rule itself is broken.
    pub fn audit_violations(&self) -> u64 {
        self.audit_violations.load(Ordering::Relaxed)
    }
}

impl GainFunction for FbcGain {
    fn evaluate(&self, attrs: AttrSet, d: &Dataset) -> Result<f64, GainError> {
        if self.fv.fingerprint() != d.fingerprint() {
            return Err(GainError::DatasetMismatch {
                expected: self.fv.fingerprint(),
                got: d.fingerprint(),
            });
        }
        self.evals.fetch_add(1, Ordering::Relaxed);
        let projected = self.fv.project(attrs);
        let (count, stats) = fbc_with_stats(attrs, &projected);
        let family = projected.len() as u128;
        let bound = (count.to_u128().unwrap_or(u128::MAX))
            .min(family * family)
            .saturating_add(family);
        if u128::from(stats.recursion_calls) > bound {
            self.audit_violations.fetch_add(1, Ordering::Relaxed);
        }
        if self.oracle_check {
            if let Ok(oracle) = fbc_bruteforce(attrs, d, &self.fv.tau()) {
                if oracle != count {
                    return Err(GainError::OracleMismatch {
                        node: attrs.bit_string(d.m()),
                        fast: count.to_string(),
                        oracle: oracle.to_string(),
                    });
                }
            }
        }
        Ok(count.to_f64().expect("count fits f64 range"))
    }

    fn name(&self) -> &str {
        "fbc"
    }
}

// ─── feedback ───────────────────────────────────────────────────────────────

/// Additive gain from per-row desirability scores: each attribute is worth
/// the total score of the rows that carry it, and a node is worth the sum
/// over its attributes. Non-negative scores keep it monotone; callers with
/// negative raw feedback must offset it first.
pub struct FeedbackGain {
    per_attr: Vec<f64>,
    fingerprint: u64,
}

impl FeedbackGain {
    pub fn new(feedback: &[f64], d: &Dataset) -> Result<FeedbackGain, GainError> {
        if feedback.len() != d.n() {
            return Err(GainError::FeedbackLength { expected: d.n(), got: feedback.len() });
        }
        if let Some((row, &value)) = feedback
            .iter()
            .enumerate()
            .find(|(_, v)| !v.is_finite() || **v < 0.0)
        {
            return Err(GainError::NegativeFeedback { row, value });
        }
        let mut per_attr = vec![0.0; d.m()];
        for (r, score) in feedback.iter().enumerate() {
            for j in d.row(r).iter() {
                per_attr[j] += score;
            }
        }
        Ok(FeedbackGain { per_attr, fingerprint: d.fingerprint() })
    }

    /// The derived per-attribute totals.
    pub fn per_attr(&self) -> &[f64] {
        &self.per_attr
    }
}

impl GainFunction for FeedbackGain {
    fn evaluate(&self, attrs: AttrSet, d: &Dataset) -> Result<f64, GainError> {
        if self.fingerprint != d.fingerprint() {
            return Err(GainError::DatasetMismatch {
                expected: self.fingerprint,
                got: d.fingerprint(),
            });
        }
        Ok(attrs.iter().map(|j| self.per_attr[j]).sum())
    }

    fn name(&self) -> &str {
        "feedback"
    }
}

// ─── workload ───────────────────────────────────────────────────────────────

/// Scores a node by the share of workload queries it would answer, scaled by
/// how selective the node is: `n * |{q ⊆ attrs}| / (|W| * support(attrs))`.
/// Growing the node can only add answered queries and shrink the support, so
/// the ratio is monotone. With smoothing the support is floored at 1, which
/// keeps unsupplied combinations scoreable; without it they are errors.
pub struct WorkloadGain {
    queries: Vec<AttrSet>,
    smoothing: bool,
}

impl WorkloadGain {
    pub fn new(queries: Vec<AttrSet>, smoothing: bool) -> Result<WorkloadGain, GainError> {
        if queries.is_empty() {
            return Err(GainError::EmptyWorkload);
        }
        Ok(WorkloadGain { queries, smoothing })
    }

    pub fn queries(&self) -> &[AttrSet] {
        &self.queries
    }
}

impl GainFunction for WorkloadGain {
    fn evaluate(&self, attrs: AttrSet, d: &Dataset) -> Result<f64, GainError> {
        let answered = self
            .queries
            .iter()
            .filter(|q| q.is_subset_of(attrs))
            .count();
        let support = d.support_count(attrs);
        let denom = if self.smoothing {
            support.max(1)
        } else if support == 0 {
            return Err(GainError::ZeroDenominator { node: attrs.bit_string(d.m()) });
        } else {
            support
        };
        Ok(d.n() as f64 * answered as f64 / (self.queries.len() as f64 * denom as f64))
    }

    fn name(&self) -> &str {
        "workload"
    }
}
