//! Budgeted attribute-set optimization over binary datasets.
//!
//! Given records with priced attributes and a budget, the solvers here find
//! the gain-maximizing set of attributes to add to a record, for any monotone
//! gain function. The built-in frequent-based count gain scores a node by how
//! many frequent attribute combinations it dominates, computed without
//! touching the rows once the maximal frequent sets are mined.

pub mod fbc;
pub mod gain;
pub mod lattice;
pub mod model;
pub mod solver;
pub mod synth;

pub use fbc::{
    fbc, fbc_apriori, fbc_bruteforce, fbc_inclusion_exclusion, is_frequent,
    mine_maximal_frequents, FbcConfig, FbcError, MaximalFrequentSet,
};
pub use gain::{FbcGain, FeedbackGain, GainError, GainFunction, WorkloadGain};
pub use model::{AttrSet, AttributeCatalog, Dataset, Money, ParseError, QueryError};
pub use solver::{
    solve_baseline, solve_ggmfa, solve_ggmfa_ordinal, solve_igmfa, OrdinalGainFunction,
    OrdinalSolveRequest, OrdinalSolveResult, SolveError, SolveRequest, SolveResult, SolveStats,
};
