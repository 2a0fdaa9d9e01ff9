//! Frequent-based count: how many frequent attribute combinations a node
//! dominates. The count serves as a monotone gain function, so it gets
//! evaluated thousands of times per solve and must not touch the dataset.
//!
//! The pipeline is: mine the maximal frequent sets once ([`mine_maximal_frequents`]),
//! project them onto a query node ([`MaximalFrequentSet::project`]), then count
//! the union of the covered sublattices ([`fbc`]). Counting assigns every
//! frequent node to exactly one initial pattern (one per maximal set) using a
//! bipartite graph between a pattern's attributes and the earlier patterns;
//! the recursion in [`count_patterns`] is output sensitive: its total number
//! of calls stays within `min(FBC, |F|^2) + |F|`.
//!
//! Three independent reference implementations are kept for cross-checking:
//! subset enumeration, levelwise counting, and inclusion-exclusion.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::model::{AttrSet, Dataset};

// ─── frequency threshold ────────────────────────────────────────────────────

/// Relative support threshold, kept as an exact rational so the absolute
/// threshold `ceil(tau * n)` never suffers float rounding (0.1 of 20000 must
/// be 2000, not 2001).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FbcConfig {
    num: u64,
    den: u64,
}

impl FbcConfig {
    /// `tau = num / den`, requiring `0 < tau <= 1`.
    pub fn from_ratio(num: u64, den: u64) -> Result<FbcConfig, FbcError> {
        if num == 0 || den == 0 || num > den {
            return Err(FbcError::InvalidTau(format!("{num}/{den}")));
        }
        Ok(FbcConfig { num, den })
    }

    /// Accepts a decimal ("0.3") or a fraction ("3/10").
    pub fn parse(s: &str) -> Result<FbcConfig, FbcError> {
        let s = s.trim();
        let bad = || FbcError::InvalidTau(s.to_string());
        if let Some((a, b)) = s.split_once('/') {
            let num = a.trim().parse().map_err(|_| bad())?;
            let den = b.trim().parse().map_err(|_| bad())?;
            return FbcConfig::from_ratio(num, den);
        }
        let (int_part, frac_part) = match s.split_once('.') {
            Some((i, f)) => (i, f),
            None => (s, ""),
        };
        if frac_part.len() > 9
            || !frac_part.chars().all(|c| c.is_ascii_digit())
            || int_part.chars().any(|c| !c.is_ascii_digit())
            || (int_part.is_empty() && frac_part.is_empty())
        {
            return Err(bad());
        }
        let den = 10u64.pow(frac_part.len() as u32);
        let int: u64 = if int_part.is_empty() { 0 } else { int_part.parse().map_err(|_| bad())? };
        let frac: u64 = if frac_part.is_empty() { 0 } else { frac_part.parse().map_err(|_| bad())? };
        let num = int.checked_mul(den).and_then(|v| v.checked_add(frac)).ok_or_else(bad)?;
        FbcConfig::from_ratio(num, den)
    }

    pub fn tau(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Absolute support threshold for a dataset of `n` rows: `ceil(tau * n)`.
    pub fn min_support(&self, n: usize) -> u64 {
        let prod = self.num as u128 * n as u128;
        prod.div_ceil(self.den as u128) as u64
    }
}

impl fmt::Display for FbcConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Reduced decimal when the denominator is a power of ten, else n/d.
        let mut num = self.num;
        let mut den = self.den;
        let g = gcd(num, den);
        num /= g;
        den /= g;
        let mut digits = 0;
        let mut d = den;
        while d % 10 == 0 {
            d /= 10;
            digits += 1;
        }
        if d == 1 {
            if digits == 0 {
                write!(f, "{num}")
            } else {
                let scale = 10u64.pow(digits);
                write!(f, "{}.{:0width$}", num / scale, num % scale, width = digits as usize)
            }
        } else {
            write!(f, "{num}/{den}")
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

// ─── errors ─────────────────────────────────────────────────────────────────

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FbcError {
    InvalidTau(String),
    /// Subset enumeration refuses nodes past this level; it exists to check
    /// other implementations, not to be one.
    BruteforceGuard { level: u32, limit: u32 },
    InclusionExclusionGuard { size: usize, limit: usize },
    FileHeader { line: String },
    FileLine { line: usize, text: String },
    DatasetMismatch { field: &'static str, file: u64, dataset: u64 },
    NotFrequent { item: String },
    NotMaximal { item: String },
    Timeout,
}

impl fmt::Display for FbcError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FbcError::InvalidTau(s) => write!(f, "tau must lie in (0, 1]: got {s:?}"),
            FbcError::BruteforceGuard { level, limit } => {
                write!(f, "subset enumeration refused at level {level} (limit {limit})")
            }
            FbcError::InclusionExclusionGuard { size, limit } => {
                write!(f, "inclusion-exclusion refused for {size} maximal sets (limit {limit})")
            }
            FbcError::FileHeader { line } => {
                write!(f, "bad maximal-set file header: {line:?}")
            }
            FbcError::FileLine { line, text } => {
                write!(f, "bad maximal-set file line {line}: {text:?}")
            }
            FbcError::DatasetMismatch { field, file, dataset } => {
                write!(f, "maximal-set file was mined over {field}={file}, dataset has {field}={dataset}")
            }
            FbcError::NotFrequent { item } => {
                write!(f, "file item {item} is not frequent in this dataset")
            }
            FbcError::NotMaximal { item } => {
                write!(f, "file item {item} is not maximal in this dataset")
            }
            FbcError::Timeout => write!(f, "frequent-set computation hit its deadline"),
        }
    }
}

impl std::error::Error for FbcError {}

// ─── frequency and mining ───────────────────────────────────────────────────

/// Support of `node` meets the threshold derived from `cfg`.
pub fn is_frequent(node: AttrSet, d: &Dataset, cfg: &FbcConfig) -> bool {
    d.support_count(node) >= cfg.min_support(d.n())
}

/// The maximal frequent sets of a dataset: frequent nodes none of whose
/// lattice parents is frequent. Items are held in counting order
/// (non-increasing level, ties by ascending bit-representative value) and the
/// source dataset's fingerprint is pinned so gains can refuse mismatched
/// inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalFrequentSet {
    items: Vec<AttrSet>,
    tau: FbcConfig,
    n: usize,
    m: usize,
    fingerprint: u64,
}

impl MaximalFrequentSet {
    /// Caller-asserted construction, for fixtures and tests that have no
    /// dataset behind the items. Items are re-sorted into counting order.
    pub fn from_parts(
        items: Vec<AttrSet>,
        tau: FbcConfig,
        n: usize,
        m: usize,
        fingerprint: u64,
    ) -> MaximalFrequentSet {
        let mut set = MaximalFrequentSet { items, tau, n, m, fingerprint };
        set.normalize();
        set
    }

    fn normalize(&mut self) {
        let m = self.m;
        self.items
            .sort_by_key(|it| (std::cmp::Reverse(it.len()), it.rep_value(m)));
        self.items.dedup();
    }

    pub fn items(&self) -> &[AttrSet] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn tau(&self) -> FbcConfig {
        self.tau
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    /// Restriction to the sublattice under `node`: intersect every item with
    /// `node`, drop duplicates and anything dominated by another survivor.
    /// Equals mining the sublattice directly, at projection cost.
    pub fn project(&self, node: AttrSet) -> MaximalFrequentSet {
        let mut seen = HashSet::new();
        let mut projected: Vec<AttrSet> = self
            .items
            .iter()
            .map(|f| f.intersect(node))
            .filter(|p| seen.insert(p.raw()))
            .collect();
        projected.sort_by_key(|it| (std::cmp::Reverse(it.len()), it.rep_value(self.m)));
        let mut kept: Vec<AttrSet> = Vec::with_capacity(projected.len());
        for p in projected {
            if !kept.iter().any(|k| p.is_subset_of(*k)) {
                kept.push(p);
            }
        }
        MaximalFrequentSet {
            items: kept,
            tau: self.tau,
            n: self.n,
            m: self.m,
            fingerprint: self.fingerprint,
        }
    }

    /// Text form: `tau=<t> n=<rows> m=<attrs>` then one bit string per item
    /// in counting order.
    pub fn to_file_string(&self) -> String {
        let mut out = format!("tau={} n={} m={}\n", self.tau, self.n, self.m);
        for item in &self.items {
            out.push_str(&item.bit_string(self.m));
            out.push('\n');
        }
        out
    }

    /// Parses the text form and verifies it against `dataset`: row and
    /// attribute counts must match, and every listed item must actually be
    /// maximal frequent there. Catching a stale or foreign file here is far
    /// cheaper than debugging the nonsense counts it would cause.
    pub fn from_file_string(
        text: &str,
        dataset: &Dataset,
    ) -> Result<MaximalFrequentSet, FbcError> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines
            .next()
            .ok_or_else(|| FbcError::FileHeader { line: String::new() })?;
        let mut tau = None;
        let mut n = None;
        let mut m = None;
        for token in header.split_whitespace() {
            match token.split_once('=') {
                Some(("tau", v)) => tau = Some(FbcConfig::parse(v)?),
                Some(("n", v)) => n = v.parse::<usize>().ok(),
                Some(("m", v)) => m = v.parse::<usize>().ok(),
                _ => return Err(FbcError::FileHeader { line: header.to_string() }),
            }
        }
        let (tau, n, m) = match (tau, n, m) {
            (Some(t), Some(n), Some(m)) => (t, n, m),
            _ => return Err(FbcError::FileHeader { line: header.to_string() }),
        };
        if n != dataset.n() {
            return Err(FbcError::DatasetMismatch {
                field: "n",
                file: n as u64,
                dataset: dataset.n() as u64,
            });
        }
        if m != dataset.m() {
            return Err(FbcError::DatasetMismatch {
                field: "m",
                file: m as u64,
                dataset: dataset.m() as u64,
            });
        }
        let mut items = Vec::new();
        for (i, line) in lines {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            match AttrSet::parse_bits(line) {
                Some((set, width)) if width == m => items.push(set),
                _ => return Err(FbcError::FileLine { line: i + 1, text: line.to_string() }),
            }
        }
        let threshold = tau.min_support(n);
        let root = AttrSet::full(m);
        for &item in &items {
            if dataset.support_count(item) < threshold {
                return Err(FbcError::NotFrequent { item: item.bit_string(m) });
            }
            let has_frequent_parent = crate::lattice::lattice_parents(item, root)
                .into_iter()
                .any(|p| dataset.support_count(p) >= threshold);
            if has_frequent_parent {
                return Err(FbcError::NotMaximal { item: item.bit_string(m) });
            }
        }
        Ok(MaximalFrequentSet::from_parts(items, tau, n, m, dataset.fingerprint()))
    }
}

/// Levelwise bottom-up mining with the anti-monotone prune, then a maximality
/// filter. Only the output set is contracted, so any correct miner could sit
/// here; levelwise keeps the intermediate frequent sets around, which the
/// maximality filter wants anyway.
pub fn mine_maximal_frequents(d: &Dataset, cfg: &FbcConfig) -> MaximalFrequentSet {
    let universe = AttrSet::full(d.m());
    let levels = frequent_levels(d, cfg.min_support(d.n()), universe, None)
        .expect("no deadline set");
    let by_raw: Vec<HashSet<u64>> = levels
        .iter()
        .map(|level| level.iter().map(|s| s.raw()).collect())
        .collect();
    let mut items = Vec::new();
    for (k, level) in levels.iter().enumerate() {
        for &f in level {
            let extendable = universe.difference(f).iter().any(|a| {
                by_raw
                    .get(k + 1)
                    .map_or(false, |next| next.contains(&f.with(a).raw()))
            });
            if !extendable {
                items.push(f);
            }
        }
    }
    MaximalFrequentSet::from_parts(items, *cfg, d.n(), d.m(), d.fingerprint())
}

/// All frequent sets inside `universe`, grouped by level. Candidates at each
/// level come from prefix joins of the previous level plus the subset prune,
/// so nothing infrequent is ever support-counted unless all its sublevel
/// sets were frequent.
fn frequent_levels(
    d: &Dataset,
    threshold: u64,
    universe: AttrSet,
    deadline: Option<Instant>,
) -> Result<Vec<Vec<AttrSet>>, FbcError> {
    let mut levels: Vec<Vec<AttrSet>> = Vec::new();
    if (d.n() as u64) < threshold {
        return Ok(levels);
    }
    levels.push(vec![AttrSet::EMPTY]);
    let mut current: Vec<AttrSet> = universe
        .iter()
        .map(AttrSet::singleton)
        .filter(|&s| d.support_count(s) >= threshold)
        .collect();
    while !current.is_empty() {
        levels.push(current.clone());
        if let Some(t) = deadline {
            if Instant::now() >= t {
                return Err(FbcError::Timeout);
            }
        }
        let members: HashSet<u64> = current.iter().map(|s| s.raw()).collect();
        // Join sets sharing all but their largest member.
        let mut groups: HashMap<u64, Vec<AttrSet>> = HashMap::new();
        for &s in &current {
            let max_bit = 63 - s.raw().leading_zeros() as usize;
            groups.entry(s.without(max_bit).raw()).or_default().push(s);
        }
        let mut next = Vec::new();
        for group in groups.values() {
            for i in 0..group.len() {
                for j in i + 1..group.len() {
                    let cand = group[i].union(group[j]);
                    let all_subsets_frequent = cand
                        .iter()
                        .all(|a| members.contains(&cand.without(a).raw()));
                    if all_subsets_frequent && d.support_count(cand) >= threshold {
                        next.push(cand);
                    }
                }
            }
        }
        next.sort_by_key(|s| s.raw());
        next.dedup();
        current = next;
    }
    Ok(levels)
}

// ─── reference counters ─────────────────────────────────────────────────────

const BRUTEFORCE_LEVEL_LIMIT: u32 = 24;
const INCLUSION_EXCLUSION_LIMIT: usize = 24;

/// Counts frequent subsets of `node` by enumerating all `2^level` of them.
pub fn fbc_bruteforce(node: AttrSet, d: &Dataset, cfg: &FbcConfig) -> Result<BigUint, FbcError> {
    if node.len() > BRUTEFORCE_LEVEL_LIMIT {
        return Err(FbcError::BruteforceGuard {
            level: node.len(),
            limit: BRUTEFORCE_LEVEL_LIMIT,
        });
    }
    let threshold = cfg.min_support(d.n());
    let mut count: u64 = 0;
    for sub in node.subsets() {
        if d.support_count(sub) >= threshold {
            count += 1;
        }
    }
    Ok(BigUint::from(count))
}

/// Counts frequent subsets of `node` levelwise, re-counting support for every
/// candidate. The practical pre-mining baseline: cost grows with both the
/// dataset size and the count itself.
pub fn fbc_apriori(node: AttrSet, d: &Dataset, cfg: &FbcConfig) -> BigUint {
    fbc_apriori_deadline(node, d, cfg, None).expect("no deadline set")
}

/// `fbc_apriori` with a cooperative deadline, for benchmark harnesses that
/// must survive hopeless configurations.
pub fn fbc_apriori_deadline(
    node: AttrSet,
    d: &Dataset,
    cfg: &FbcConfig,
    deadline: Option<Instant>,
) -> Result<BigUint, FbcError> {
    let levels = frequent_levels(d, cfg.min_support(d.n()), node, deadline)?;
    Ok(BigUint::from(
        levels.iter().map(|l| l.len() as u64).sum::<u64>(),
    ))
}

/// Inclusion-exclusion over the projected maximal sets: every non-empty
/// subfamily contributes `±2^level` of its intersection (the sublattice of
/// the bitwise AND). Exponential in the family size, hence the guard.
pub fn fbc_inclusion_exclusion(items: &[AttrSet]) -> Result<BigUint, FbcError> {
    if items.len() > INCLUSION_EXCLUSION_LIMIT {
        return Err(FbcError::InclusionExclusionGuard {
            size: items.len(),
            limit: INCLUSION_EXCLUSION_LIMIT,
        });
    }
    // Terms fit i128 comfortably: 2^24 subfamilies, each at most 2^64.
    fn walk(items: &[AttrSet], idx: usize, acc: AttrSet, picked: u32) -> i128 {
        if idx == items.len() {
            if picked == 0 {
                return 0;
            }
            let term = 1i128 << acc.len();
            return if picked % 2 == 1 { term } else { -term };
        }
        walk(items, idx + 1, acc, picked)
            + walk(items, idx + 1, acc.intersect(items[idx]), picked + 1)
    }
    let full = AttrSet::from_raw(!0);
    let total = walk(items, 0, full, 0);
    debug_assert!(total >= 0);
    Ok(BigUint::from(total as u128))
}

// ─── pattern partition counting ─────────────────────────────────────────────

/// A length-m pattern over {0, 1, X}. Initial patterns (one per maximal set)
/// put X on the set's attributes and 0 elsewhere; counting then zeroes X
/// cells as attributes get decided.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    ones: AttrSet,
    xs: AttrSet,
    m: usize,
}

impl Pattern {
    pub fn initial(item: AttrSet, m: usize) -> Pattern {
        Pattern { ones: AttrSet::EMPTY, xs: item, m }
    }

    pub fn ones(&self) -> AttrSet {
        self.ones
    }

    pub fn xs(&self) -> AttrSet {
        self.xs
    }

    /// Number of X cells; the pattern covers `2^kx` nodes.
    pub fn kx(&self) -> u32 {
        self.xs.len()
    }

    /// The nodes this pattern stands for: everything between its 1 cells and
    /// its 1-or-X cells.
    pub fn covers(&self, v: AttrSet) -> bool {
        self.ones.is_subset_of(v) && v.is_subset_of(self.ones.union(self.xs))
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in 0..self.m {
            f.write_str(if self.ones.contains(k) {
                "1"
            } else if self.xs.contains(k) {
                "X"
            } else {
                "0"
            })?;
        }
        Ok(())
    }
}

/// For pattern `j`, the edges between its attributes (top) and every earlier
/// pattern (bottom). Attribute `k` connects to earlier pattern `l` exactly
/// when `k` is one of j's attributes and pattern `l` has a 0 at `k`; such an
/// attribute certifies that a node containing it lies outside `COV(P_l)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    adjacency: Vec<Vec<u32>>,
}

impl BipartiteGraph {
    /// Earlier-pattern indices adjacent to attribute `k`, ascending.
    pub fn adjacency(&self, k: usize) -> &[u32] {
        &self.adjacency[k]
    }

    pub fn has_edges(&self) -> bool {
        self.adjacency.iter().any(|l| !l.is_empty())
    }
}

/// Builds the initial pattern and bipartite graph for every item, in the
/// order given, with one pass per attribute over the item list. The running
/// prefix of earlier patterns with a 0 at attribute `k` is snapshotted into
/// each graph whose item holds `k`.
pub fn construct_bipartite_graphs(
    items: &[AttrSet],
    m: usize,
) -> (Vec<Pattern>, Vec<BipartiteGraph>) {
    let patterns: Vec<Pattern> = items.iter().map(|&it| Pattern::initial(it, m)).collect();
    let mut graphs: Vec<BipartiteGraph> = items
        .iter()
        .map(|_| BipartiteGraph { adjacency: vec![Vec::new(); m] })
        .collect();
    for k in 0..m {
        let mut zeros_so_far: Vec<u32> = Vec::new();
        for (j, item) in items.iter().enumerate() {
            if item.contains(k) {
                graphs[j].adjacency[k] = zeros_so_far.clone();
            } else {
                zeros_so_far.push(j as u32);
            }
        }
    }
    (patterns, graphs)
}

/// Counts the frequent nodes assigned to this pattern: members of its
/// coverage that, for every earlier pattern, keep at least one attribute
/// witnessing non-membership there. Returns the count and the number of
/// recursive calls taken.
pub fn count_patterns(pattern: &Pattern, graph: &BipartiteGraph) -> (BigUint, u64) {
    let lists: Vec<(usize, Vec<u32>)> = pattern
        .xs
        .iter()
        .filter(|&k| !graph.adjacency[k].is_empty())
        .map(|k| (k, graph.adjacency[k].clone()))
        .collect();
    let mut calls = 0;
    let count = count_rec(pattern.xs, &lists, &mut calls);
    (count, calls)
}

// Every call either returns a leaf count or genuinely branches two ways;
// steps whose absent-side is illegal fold into the loop instead of recursing,
// so the instrumented call count carries the accounting the output-sensitivity
// bound relies on (each call owns at least one counted node).
fn count_rec(xs: AttrSet, lists: &[(usize, Vec<u32>)], calls: &mut u64) -> BigUint {
    *calls += 1;
    let mut xs = xs;
    let mut lists: Vec<(usize, Vec<u32>)> = lists.to_vec();
    let mut factor = BigUint::one();
    loop {
        if lists.is_empty() {
            return factor * (BigUint::one() << xs.len());
        }
        // Largest adjacency list wins; ties go to the lowest attribute index.
        let q_list: Vec<u32> = lists
            .iter()
            .max_by(|(ka, la), (kb, lb)| la.len().cmp(&lb.len()).then(kb.cmp(ka)))
            .map(|(_, l)| l.clone())
            .unwrap();
        // Every attribute with that exact adjacency set is decided together.
        let s_len = lists.iter().filter(|(_, l)| *l == q_list).count();
        for (k, l) in &lists {
            if *l == q_list {
                xs = xs.without(*k);
            }
        }
        let reduced: Vec<(usize, Vec<u32>)> =
            lists.into_iter().filter(|(_, l)| *l != q_list).collect();
        let choices = (BigUint::one() << s_len) - BigUint::one();

        // The all-absent side is legal only if each pattern the decided
        // attributes were covering keeps a witness among the attributes
        // still live at this level.
        let all_absent_ok = q_list
            .iter()
            .all(|p| reduced.iter().any(|(_, l)| l.contains(p)));

        // Either way the decided patterns are settled on the some-present
        // side, so their remaining edges disappear.
        let remaining: Vec<(usize, Vec<u32>)> = reduced
            .iter()
            .map(|(k, l)| {
                (*k, l.iter().copied().filter(|p| !q_list.contains(p)).collect::<Vec<u32>>())
            })
            .filter(|(_, l)| !l.is_empty())
            .collect();

        if all_absent_ok {
            let absent = count_rec(xs, &reduced, calls);
            let present = count_rec(xs, &remaining, calls);
            return factor * (absent + choices * present);
        }
        factor *= choices;
        lists = remaining;
    }
}

/// Statistics from one full count: how many patterns were processed and the
/// total recursion depth charged across them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FbcStats {
    pub patterns: usize,
    pub recursion_calls: u64,
}

/// Sums the per-pattern counts over `items` taken in the order given. The
/// result is order-invariant (the rule assigns every covered node to exactly
/// one pattern under any ordering); the canonical order is the one
/// `MaximalFrequentSet` maintains.
pub fn count_partitioned(items: &[AttrSet], m: usize) -> (BigUint, u64) {
    let (patterns, graphs) = construct_bipartite_graphs(items, m);
    let mut total = BigUint::zero();
    let mut calls = 0;
    for (p, g) in patterns.iter().zip(&graphs) {
        let (c, k) = count_patterns(p, g);
        total += c;
        calls += k;
    }
    (total, calls)
}

/// The frequent-based count of `node`, given the maximal frequent sets
/// already projected onto it. Never reads the dataset.
pub fn fbc(node: AttrSet, fv: &MaximalFrequentSet) -> BigUint {
    fbc_with_stats(node, fv).0
}

/// `fbc` plus counting statistics.
pub fn fbc_with_stats(node: AttrSet, fv: &MaximalFrequentSet) -> (BigUint, FbcStats) {
    debug_assert!(fv.items.iter().all(|it| it.is_subset_of(node)));
    let (count, calls) = count_partitioned(&fv.items, fv.m);
    (count, FbcStats { patterns: fv.items.len(), recursion_calls: calls })
}
