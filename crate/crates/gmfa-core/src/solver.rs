//! Budgeted gain maximization over the subset lattice of the flexible
//! attributes. Three solvers share one contract: maximize a monotone gain
//! over the sets whose added cost fits the budget.
//!
//! `solve_baseline` enumerates everything and is the ground truth.
//! `solve_igmfa` walks the lattice top-down and prunes on gain and recorded
//! feasibility. `solve_ggmfa` exploits the cost-descending broadcast tree so
//! that every node is generated at most once and gain is evaluated only on
//! maximal affordable nodes; it is the one to use. A DAG variant handles
//! ordinal attributes with per-step upgrade costs.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::time::{Duration, Instant};

use crate::gain::{GainError, GainFunction};
use crate::lattice::{lattice_children, lattice_parents, OrdinalCosts};
use crate::model::{AttrSet, AttributeCatalog, Dataset, Money};

/// One maximization problem: which attributes to add to the tuple.
pub struct SolveRequest<'a> {
    pub tuple_attrs: AttrSet,
    pub budget: Money,
    pub gain: &'a dyn GainFunction,
    /// Attributes the solver may add; `None` means all not already on the
    /// tuple. The tuple's own attributes are never candidates.
    pub flexible: Option<AttrSet>,
    pub deadline: Option<Instant>,
    /// Seeds the cost-ordered traversal at the highest affordable level
    /// instead of the root. Pays off when the budget covers only a few
    /// attributes; the seed count is C(m', level), so it is a liability for
    /// generous budgets.
    pub low_budget_jump: bool,
}

impl<'a> SolveRequest<'a> {
    pub fn new(tuple_attrs: AttrSet, budget: Money, gain: &'a dyn GainFunction) -> Self {
        SolveRequest {
            tuple_attrs,
            budget,
            gain,
            flexible: None,
            deadline: None,
            low_budget_jump: false,
        }
    }

    pub fn with_flexible(mut self, flexible: AttrSet) -> Self {
        self.flexible = Some(flexible);
        self
    }

    pub fn with_deadline(mut self, deadline: Instant) -> Self {
        self.deadline = Some(deadline);
        self
    }

    pub fn with_timeout(self, timeout: Duration) -> Self {
        self.with_deadline(Instant::now() + timeout)
    }

    pub fn with_low_budget_jump(mut self) -> Self {
        self.low_budget_jump = true;
        self
    }

    fn resolve_flexible(&self, m: usize) -> AttrSet {
        self.flexible
            .unwrap_or_else(|| AttrSet::full(m))
            .difference(self.tuple_attrs)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub nodes_generated: u64,
    pub gain_evals: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveResult {
    /// The attributes to add; disjoint from the tuple's.
    pub chosen: AttrSet,
    pub gain_value: f64,
    pub stats: SolveStats,
}

impl SolveResult {
    /// `{"chosen": [names...], "gain": g, "stats": {...}}`.
    pub fn to_json(&self, catalog: &AttributeCatalog) -> String {
        let names: Vec<String> = self
            .chosen
            .iter()
            .map(|k| format!("\"{}\"", escape_json(catalog.name(k))))
            .collect();
        format!(
            "{{\"chosen\":[{}],\"gain\":{},\"stats\":{{\"nodes_generated\":{},\"gain_evals\":{},\"elapsed_ms\":{}}}}}",
            names.join(","),
            self.gain_value,
            self.stats.nodes_generated,
            self.stats.gain_evals,
            self.stats.elapsed.as_millis(),
        )
    }
}

fn escape_json(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

#[derive(Debug)]
pub enum SolveError {
    /// The deadline passed mid-solve; stats cover the work done so far.
    Timeout(SolveStats),
    Gain(GainError),
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::Timeout(stats) => write!(
                f,
                "solve timed out after {:?} ({} nodes, {} gain evaluations)",
                stats.elapsed, stats.nodes_generated, stats.gain_evals
            ),
            SolveError::Gain(e) => write!(f, "gain evaluation failed: {e}"),
        }
    }
}

impl std::error::Error for SolveError {}

impl From<GainError> for SolveError {
    fn from(e: GainError) -> Self {
        SolveError::Gain(e)
    }
}

/// Deadline polling cheap enough for hot loops: the clock is read once per
/// 64 ticks.
struct Deadline {
    at: Option<Instant>,
    tick: u32,
}

impl Deadline {
    fn new(at: Option<Instant>) -> Deadline {
        Deadline { at, tick: 0 }
    }

    #[inline]
    fn expired(&mut self) -> bool {
        match self.at {
            None => false,
            Some(at) => {
                self.tick = self.tick.wrapping_add(1);
                self.tick & 0x3F == 0 && Instant::now() >= at
            }
        }
    }
}

/// Candidate ordering: higher gain wins, equal gains go to the smaller bit
/// representative.
fn improves(best: &Option<(f64, AttrSet)>, g: f64, cand: AttrSet, m: usize) -> bool {
    match best {
        None => true,
        Some((bg, bv)) => g > *bg || (g == *bg && cand.rep_value(m) < bv.rep_value(m)),
    }
}

// ─── exhaustive baseline ────────────────────────────────────────────────────

/// Enumerates every subset of the flexible attributes and evaluates the gain
/// on each affordable one. Exponential by construction; the ground truth the
/// other solvers are measured against.
pub fn solve_baseline(req: &SolveRequest, d: &Dataset) -> Result<SolveResult, SolveError> {
    let start = Instant::now();
    let m = d.m();
    let flexible = req.resolve_flexible(m);
    let catalog = d.catalog();
    let mut deadline = Deadline::new(req.deadline);
    let mut stats = SolveStats::default();
    let mut best: Option<(f64, AttrSet)> = None;

    for cand in flexible.subsets() {
        stats.nodes_generated += 1;
        if deadline.expired() {
            stats.elapsed = start.elapsed();
            return Err(SolveError::Timeout(stats));
        }
        if catalog.node_cost(cand) > req.budget {
            continue;
        }
        let g = req.gain.evaluate(req.tuple_attrs.union(cand), d)?;
        stats.gain_evals += 1;
        if improves(&best, g, cand, m) {
            best = Some((g, cand));
        }
    }
    let (gain_value, chosen) = best.expect("the empty set is always affordable");
    stats.elapsed = start.elapsed();
    Ok(SolveResult { chosen, gain_value, stats })
}

// ─── pruned breadth-first traversal ─────────────────────────────────────────

/// Top-down BFS over the flexible-attribute lattice. Every dequeued node
/// gets a gain evaluation first; it is then skipped if that gain cannot beat
/// the best feasible one found so far or if a lattice parent was already
/// recorded feasible. Affordable nodes are recorded and never expanded;
/// unaffordable ones enqueue their not-yet-seen children.
///
/// The first feasible node found at each gain level sticks: later nodes with
/// equal gain are skipped by the gain test, so the chosen set is the
/// breadth-first-earliest optimum rather than the smallest representative.
pub fn solve_igmfa(req: &SolveRequest, d: &Dataset) -> Result<SolveResult, SolveError> {
    let start = Instant::now();
    let m = d.m();
    let flexible = req.resolve_flexible(m);
    let catalog = d.catalog();
    let mut deadline = Deadline::new(req.deadline);
    let mut stats = SolveStats::default();

    let mut queue = VecDeque::new();
    let mut enqueued: HashSet<u64> = HashSet::new();
    let mut feasible: HashSet<u64> = HashSet::new();
    queue.push_back(flexible);
    enqueued.insert(flexible.raw());
    stats.nodes_generated = 1;

    let mut maxg = f64::NEG_INFINITY;
    let mut best: Option<AttrSet> = None;

    while let Some(v) = queue.pop_front() {
        if deadline.expired() {
            stats.elapsed = start.elapsed();
            return Err(SolveError::Timeout(stats));
        }
        let g = req.gain.evaluate(req.tuple_attrs.union(v), d)?;
        stats.gain_evals += 1;
        let parent_feasible = lattice_parents(v, flexible)
            .into_iter()
            .any(|p| feasible.contains(&p.raw()));
        if g <= maxg || parent_feasible {
            continue;
        }
        if catalog.node_cost(v) <= req.budget {
            feasible.insert(v.raw());
            maxg = g;
            best = Some(v);
        } else {
            for child in lattice_children(v) {
                if enqueued.insert(child.raw()) {
                    queue.push_back(child);
                    stats.nodes_generated += 1;
                }
            }
        }
    }

    let chosen = best.expect("the empty set is always affordable");
    stats.elapsed = start.elapsed();
    Ok(SolveResult { chosen, gain_value: maxg, stats })
}

// ─── cost-ordered tree traversal ────────────────────────────────────────────

/// Cost-descending traversal: flexible attributes are sorted from most to
/// least expensive, and each queue entry carries the index of the last
/// removal so children only drop later (cheaper) attributes. That yields two
/// structural guarantees: no node is generated twice, and an affordable node
/// is generated only from an unaffordable parent that is its cheapest
/// parent, making every affordable node encountered maximal affordable. Gain
/// is evaluated exactly once per such node.
pub fn solve_ggmfa(req: &SolveRequest, d: &Dataset) -> Result<SolveResult, SolveError> {
    solve_ggmfa_observed(req, d, &mut |_| {})
}

/// `solve_ggmfa` with a callback invoked for every generated node, in
/// generation order. Instrumentation hook for uniqueness and maximality
/// checks; the callback must not assume any particular traversal depth.
pub fn solve_ggmfa_observed(
    req: &SolveRequest,
    d: &Dataset,
    on_generate: &mut dyn FnMut(AttrSet),
) -> Result<SolveResult, SolveError> {
    let start = Instant::now();
    let m = d.m();
    let flexible = req.resolve_flexible(m);
    let catalog = d.catalog();
    let mut deadline = Deadline::new(req.deadline);
    let mut stats = SolveStats::default();

    // Flexible attributes from most expensive to cheapest; ties by index.
    let mut order: Vec<usize> = flexible.iter().collect();
    order.sort_by_key(|&k| (std::cmp::Reverse(catalog.cost(k)), k));
    let costs: Vec<Money> = order.iter().map(|&k| catalog.cost(k)).collect();
    let total: Money = costs.iter().copied().sum();

    // Queue of (node, first removable index, added cost).
    let mut queue: VecDeque<(AttrSet, usize, Money)> = VecDeque::new();
    if req.low_budget_jump {
        for seed in affordable_level_seeds(flexible, &order, &costs, total, req.budget) {
            on_generate(seed.0);
            stats.nodes_generated += 1;
            queue.push_back(seed);
        }
    } else {
        on_generate(flexible);
        stats.nodes_generated = 1;
        queue.push_back((flexible, 0, total));
    }

    let mut best: Option<(f64, AttrSet)> = None;
    while let Some((v, first, sigma)) = queue.pop_front() {
        if deadline.expired() {
            stats.elapsed = start.elapsed();
            return Err(SolveError::Timeout(stats));
        }
        if sigma <= req.budget {
            let g = req.gain.evaluate(req.tuple_attrs.union(v), d)?;
            stats.gain_evals += 1;
            if improves(&best, g, v, m) {
                best = Some((g, v));
            }
            continue;
        }
        for j in first..order.len() {
            let child = v.without(order[j]);
            on_generate(child);
            stats.nodes_generated += 1;
            queue.push_back((child, j + 1, sigma - costs[j]));
        }
    }

    let (gain_value, chosen) = best.expect("the empty set is always affordable");
    stats.elapsed = start.elapsed();
    Ok(SolveResult { chosen, gain_value, stats })
}

/// Seeds for the low-budget jump: every node at the highest level the budget
/// can possibly afford (even the cheapest attributes cannot fill one more
/// slot). Each seed keeps `level` attributes; its entry resumes removals
/// after the largest index already removed, which preserves the
/// generate-once guarantee for all descendants.
fn affordable_level_seeds(
    flexible: AttrSet,
    order: &[usize],
    costs: &[Money],
    total: Money,
    budget: Money,
) -> Vec<(AttrSet, usize, Money)> {
    let mp = order.len();
    // Cheapest attributes sit at the end of the descending order.
    let mut level = 0;
    let mut spent = Money::ZERO;
    for j in (0..mp).rev() {
        if spent + costs[j] > budget {
            break;
        }
        spent = spent + costs[j];
        level += 1;
    }
    if level == mp {
        return vec![(flexible, 0, total)];
    }
    let drop = mp - level;
    // All index sets of size `drop`, in lexicographic order.
    let mut removal: Vec<usize> = (0..drop).collect();
    let mut seeds = Vec::new();
    loop {
        let mut node = flexible;
        let mut sigma = total;
        for &j in &removal {
            node = node.without(order[j]);
            sigma = sigma - costs[j];
        }
        seeds.push((node, removal[drop - 1] + 1, sigma));
        // Next combination.
        let mut i = drop;
        loop {
            if i == 0 {
                return seeds;
            }
            i -= 1;
            if removal[i] != i + mp - drop {
                break;
            }
        }
        removal[i] += 1;
        for k in i + 1..drop {
            removal[k] = removal[k - 1] + 1;
        }
    }
}

// ─── ordinal attributes ─────────────────────────────────────────────────────

/// Gain over full value assignments, for catalogs where attributes have
/// ordered domains rather than presence bits.
pub trait OrdinalGainFunction: Sync {
    fn evaluate(&self, values: &[u8], d: &Dataset) -> Result<f64, GainError>;
    fn name(&self) -> &str;
}

/// Adapts a set-based gain to ordinal values by treating any positive value
/// as presence. Exact for binary domains.
pub struct BinaryGainAsOrdinal<'a>(pub &'a dyn GainFunction);

impl GainFunction for BinaryGainAsOrdinal<'_> {
    fn evaluate(&self, attrs: AttrSet, d: &Dataset) -> Result<f64, GainError> {
        self.0.evaluate(attrs, d)
    }

    fn name(&self) -> &str {
        self.0.name()
    }
}

impl OrdinalGainFunction for BinaryGainAsOrdinal<'_> {
    fn evaluate(&self, values: &[u8], d: &Dataset) -> Result<f64, GainError> {
        let attrs = AttrSet::from_indices(
            values
                .iter()
                .enumerate()
                .filter(|(_, &v)| v > 0)
                .map(|(k, _)| k),
        );
        self.0.evaluate(attrs, d)
    }

    fn name(&self) -> &str {
        self.0.name()
    }
}

pub struct OrdinalSolveRequest<'a> {
    /// The tuple's current value per attribute; upgrades only go up.
    pub tuple_values: Vec<u8>,
    pub budget: Money,
    pub gain: &'a dyn OrdinalGainFunction,
    pub upgrades: &'a OrdinalCosts,
    pub deadline: Option<Instant>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrdinalSolveResult {
    /// Final value per attribute (tuple values plus purchased upgrades).
    pub chosen_values: Vec<u8>,
    pub gain_value: f64,
    pub stats: SolveStats,
}

/// The cost-ordered traversal over the DAG of value assignments. Entries
/// carry the index of the last downgraded attribute; children may downgrade
/// the same attribute again or any later one, so every assignment is
/// generated exactly once. Affordable assignments are evaluated and never
/// expanded. Unlike the binary case an affordable assignment here is not
/// always maximal (step costs vary by level), which costs extra evaluations
/// but not correctness: every maximal affordable assignment still has all
/// its ancestors unaffordable, hence is reached and scored.
pub fn solve_ggmfa_ordinal(
    req: &OrdinalSolveRequest,
    d: &Dataset,
) -> Result<OrdinalSolveResult, SolveError> {
    let start = Instant::now();
    let m = req.upgrades.m();
    assert_eq!(req.tuple_values.len(), m, "tuple values must cover every attribute");
    assert_eq!(d.m(), m, "upgrade table and dataset disagree on attribute count");
    for (k, &v) in req.tuple_values.iter().enumerate() {
        assert!(
            u32::from(v) < req.upgrades.domain(k),
            "tuple value {v} outside domain of attribute {k}"
        );
    }
    let mut deadline = Deadline::new(req.deadline);
    let mut stats = SolveStats::default();

    // Attributes from most to least expensive by full remaining upgrade
    // cost; saturated attributes fall to the end and never spawn children.
    let full_upgrade: Vec<Money> = (0..m)
        .map(|k| req.upgrades.upgrade(k, req.tuple_values[k], req.upgrades.max_value(k)))
        .collect();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&k| (std::cmp::Reverse(full_upgrade[k]), k));

    let root: Vec<u8> = (0..m).map(|k| req.upgrades.max_value(k)).collect();
    let total: Money = full_upgrade.iter().copied().sum();

    let max_domain = (0..m).map(|k| req.upgrades.domain(k)).max().unwrap_or(2);
    let mut queue: VecDeque<(Vec<u8>, usize, Money)> = VecDeque::new();
    queue.push_back((root, 0, total));
    stats.nodes_generated = 1;

    let mut best: Option<(f64, Vec<u8>, u128)> = None;
    while let Some((v, first, sigma)) = queue.pop_front() {
        if deadline.expired() {
            stats.elapsed = start.elapsed();
            return Err(SolveError::Timeout(stats));
        }
        if sigma <= req.budget {
            let g = req.gain.evaluate(&v, d)?;
            stats.gain_evals += 1;
            let rep = crate::lattice::ordinal_index(&v, max_domain);
            let take = match &best {
                None => true,
                Some((bg, _, brep)) => g > *bg || (g == *bg && rep < *brep),
            };
            if take {
                best = Some((g, v, rep));
            }
            continue;
        }
        for j in first..m {
            let k = order[j];
            if v[k] <= req.tuple_values[k] {
                continue;
            }
            let mut child = v.clone();
            child[k] -= 1;
            let step = req.upgrades.step(k, child[k]);
            queue.push_back((child, j, sigma - step));
            stats.nodes_generated += 1;
        }
    }

    let (gain_value, chosen_values, _) =
        best.expect("the tuple's own assignment is always affordable");
    stats.elapsed = start.elapsed();
    Ok(OrdinalSolveResult { chosen_values, gain_value, stats })
}
