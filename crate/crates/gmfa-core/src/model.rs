//! Dataset model: attribute sets as fixed-width bitsets, exact integer money,
//! the attribute catalog (names, costs, domains), and the immutable dataset
//! with its per-column inverted bitmaps.
//!
//! Attribute positions follow the catalog (file header) order everywhere a set
//! is rendered or parsed; position 1 is the leftmost character of a bit
//! string. Cost-descending order is a separate permutation captured by
//! [`AttributeCatalog::order`] and applied by the solvers internally.

use std::collections::HashMap;
use std::fmt;

/// Width cap for [`AttrSet`]. One machine word covers every dataset this
/// library targets; parsing rejects wider headers up front.
pub const MAX_ATTRS: usize = 64;

// ─── attribute sets ─────────────────────────────────────────────────────────

/// A set of attribute indices, stored as a u64 mask. Bit `k` corresponds to
/// the attribute at catalog position `k`. Width is context (`m` of the
/// catalog in play); operations never set bits at or above it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct AttrSet(u64);

impl AttrSet {
    pub const EMPTY: AttrSet = AttrSet(0);

    pub fn full(m: usize) -> AttrSet {
        debug_assert!(m <= MAX_ATTRS);
        if m == 64 {
            AttrSet(!0)
        } else {
            AttrSet((1u64 << m) - 1)
        }
    }

    pub fn singleton(k: usize) -> AttrSet {
        debug_assert!(k < MAX_ATTRS);
        AttrSet(1 << k)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(iter: I) -> AttrSet {
        let mut s = AttrSet::EMPTY;
        for k in iter {
            s = s.with(k);
        }
        s
    }

    pub fn raw(self) -> u64 {
        self.0
    }

    pub fn from_raw(bits: u64) -> AttrSet {
        AttrSet(bits)
    }

    pub fn contains(self, k: usize) -> bool {
        k < 64 && self.0 >> k & 1 == 1
    }

    #[must_use]
    pub fn with(self, k: usize) -> AttrSet {
        debug_assert!(k < MAX_ATTRS);
        AttrSet(self.0 | 1 << k)
    }

    #[must_use]
    pub fn without(self, k: usize) -> AttrSet {
        AttrSet(self.0 & !(1 << k))
    }

    pub fn union(self, other: AttrSet) -> AttrSet {
        AttrSet(self.0 | other.0)
    }

    pub fn intersect(self, other: AttrSet) -> AttrSet {
        AttrSet(self.0 & other.0)
    }

    pub fn difference(self, other: AttrSet) -> AttrSet {
        AttrSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: AttrSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Cardinality; the lattice level of the node this set represents.
    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Member indices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let k = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(k)
            }
        })
    }

    /// Decimal value of the big-endian bit representative: position 1
    /// (attribute 0) is the most significant bit. `"1010"` over m=4 maps to
    /// 10. This is the canonical node index and tie-break key.
    pub fn rep_value(self, m: usize) -> u64 {
        debug_assert!(m >= 1 && m <= MAX_ATTRS);
        self.0.reverse_bits() >> (64 - m)
    }

    /// Big-endian 0/1 string in catalog order, e.g. `"1010"`.
    pub fn bit_string(self, m: usize) -> String {
        (0..m)
            .map(|k| if self.contains(k) { '1' } else { '0' })
            .collect()
    }

    /// Parses a big-endian 0/1 string. Returns the set and its width.
    pub fn parse_bits(s: &str) -> Option<(AttrSet, usize)> {
        if s.is_empty() || s.len() > MAX_ATTRS {
            return None;
        }
        let mut set = AttrSet::EMPTY;
        for (k, c) in s.chars().enumerate() {
            match c {
                '1' => set = set.with(k),
                '0' => {}
                _ => return None,
            }
        }
        Some((set, s.len()))
    }

    /// Iterates every subset of `self` (the empty set and `self` included),
    /// via the carry-rippler trick. 2^len entries.
    pub fn subsets(self) -> impl Iterator<Item = AttrSet> {
        let mask = self.0;
        let mut sub = 0u64;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = AttrSet(sub);
            sub = sub.wrapping_sub(mask) & mask;
            done = sub == 0;
            Some(out)
        })
    }
}

impl fmt::Debug for AttrSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AttrSet({:b})", self.0)
    }
}

impl std::ops::BitOr for AttrSet {
    type Output = AttrSet;
    fn bitor(self, rhs: AttrSet) -> AttrSet {
        self.union(rhs)
    }
}

impl std::ops::BitAnd for AttrSet {
    type Output = AttrSet;
    fn bitand(self, rhs: AttrSet) -> AttrSet {
        self.intersect(rhs)
    }
}

// ─── money ──────────────────────────────────────────────────────────────────

/// Exact money in minor units (cents). Costs and budgets never touch floats.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Debug)]
pub struct Money(u64);

impl Money {
    pub const ZERO: Money = Money(0);

    pub fn from_cents(cents: u64) -> Money {
        Money(cents)
    }

    /// Whole currency units, the unit used by cost files and CLI flags.
    pub fn from_units(units: u64) -> Money {
        Money(units * 100)
    }

    pub fn cents(self) -> u64 {
        self.0
    }

    /// Parses a non-negative decimal amount in whole currency units, with at
    /// most two fractional digits ("1000", "10.5", "0.25").
    pub fn parse(s: &str) -> Option<Money> {
        let s = s.trim();
        if s.is_empty() || s.starts_with('+') || s.starts_with('-') {
            return None;
        }
        let (int_part, frac_part) = match s.split_once('.') {
            Some((i, f)) => (i, f),
            None => (s, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return None;
        }
        if frac_part.len() > 2 || !frac_part.chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
        if !int_part.is_empty() && !int_part.chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
        let units: u64 = if int_part.is_empty() {
            0
        } else {
            int_part.parse().ok()?
        };
        let cents: u64 = if frac_part.is_empty() {
            0
        } else {
            let padded = format!("{frac_part:0<2}");
            padded.parse().ok()?
        };
        units.checked_mul(100)?.checked_add(cents).map(Money)
    }
}

impl fmt::Display for Money {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 100 == 0 {
            write!(f, "{}", self.0 / 100)
        } else {
            write!(f, "{}.{:02}", self.0 / 100, self.0 % 100)
        }
    }
}

impl std::ops::Add for Money {
    type Output = Money;
    fn add(self, rhs: Money) -> Money {
        Money(self.0 + rhs.0)
    }
}

impl std::ops::Sub for Money {
    type Output = Money;
    fn sub(self, rhs: Money) -> Money {
        debug_assert!(self.0 >= rhs.0);
        Money(self.0 - rhs.0)
    }
}

impl std::iter::Sum for Money {
    fn sum<I: Iterator<Item = Money>>(iter: I) -> Money {
        Money(iter.map(|x| x.0).sum())
    }
}

// ─── errors ─────────────────────────────────────────────────────────────────

/// Parse failures for dataset and cost files. Every variant names the
/// offending row or column so a bad file can be fixed without guessing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    NoAttributes,
    TooManyAttributes { count: usize },
    DuplicateAttribute { name: String },
    RowWidth { row: usize, expected: usize, got: usize },
    NonBinaryCell { row: usize, column: String, value: String },
    BadCell { row: usize, column: String, value: String },
    CostRowFormat { row: usize },
    UnknownAttribute { row: usize, name: String },
    DuplicateCost { name: String },
    MissingCost { name: String },
    InvalidCost { name: String, value: String },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::NoAttributes => write!(f, "dataset header declares no attributes"),
            ParseError::TooManyAttributes { count } => {
                write!(f, "dataset has {count} attributes; at most {MAX_ATTRS} are supported")
            }
            ParseError::DuplicateAttribute { name } => {
                write!(f, "attribute {name:?} appears twice in the header")
            }
            ParseError::RowWidth { row, expected, got } => {
                write!(f, "row {row} has {got} cells, expected {expected}")
            }
            ParseError::NonBinaryCell { row, column, value } => {
                write!(f, "row {row}, column {column:?}: cell {value:?} is not 0 or 1")
            }
            ParseError::BadCell { row, column, value } => {
                write!(f, "row {row}, column {column:?}: cell {value:?} is not a small non-negative integer")
            }
            ParseError::CostRowFormat { row } => {
                write!(f, "cost file row {row} is not of the form name,amount")
            }
            ParseError::UnknownAttribute { row, name } => {
                write!(f, "cost file row {row} names unknown attribute {name:?}")
            }
            ParseError::DuplicateCost { name } => {
                write!(f, "cost file lists attribute {name:?} twice")
            }
            ParseError::MissingCost { name } => {
                write!(f, "cost file is missing attribute {name:?}")
            }
            ParseError::InvalidCost { name, value } => {
                write!(f, "cost for attribute {name:?} is not a non-negative amount: {value:?}")
            }
        }
    }
}

impl std::error::Error for ParseError {}

/// Failures of ordinal queries against a dataset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QueryError {
    ThresholdCount { expected: usize, got: usize },
    ThresholdOutsideDomain { attribute: String, value: u8, domain: u32 },
}

impl fmt::Display for QueryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QueryError::ThresholdCount { expected, got } => {
                write!(f, "query lists {expected} attributes but {got} thresholds")
            }
            QueryError::ThresholdOutsideDomain { attribute, value, domain } => {
                write!(
                    f,
                    "threshold {value} for attribute {attribute:?} is outside its domain 0..{domain}"
                )
            }
        }
    }
}

impl std::error::Error for QueryError {}

// ─── catalog ────────────────────────────────────────────────────────────────

/// Immutable attribute metadata: names, per-attribute acquisition costs,
/// domain cardinalities, and the cost-descending permutation used by the
/// search algorithms.
#[derive(Debug, Clone)]
pub struct AttributeCatalog {
    names: Vec<String>,
    costs: Vec<Money>,
    domains: Vec<u32>,
    order: Vec<usize>,
    index: HashMap<String, usize>,
}

impl AttributeCatalog {
    pub fn new(
        names: Vec<String>,
        costs: Vec<Money>,
        domains: Vec<u32>,
    ) -> Result<AttributeCatalog, ParseError> {
        if names.is_empty() {
            return Err(ParseError::NoAttributes);
        }
        if names.len() > MAX_ATTRS {
            return Err(ParseError::TooManyAttributes { count: names.len() });
        }
        assert_eq!(names.len(), costs.len());
        assert_eq!(names.len(), domains.len());
        let mut index = HashMap::new();
        for (k, name) in names.iter().enumerate() {
            if index.insert(name.clone(), k).is_some() {
                return Err(ParseError::DuplicateAttribute { name: name.clone() });
            }
        }
        // Descending cost, ties broken by catalog position.
        let mut order: Vec<usize> = (0..names.len()).collect();
        order.sort_by_key(|&k| (std::cmp::Reverse(costs[k]), k));
        Ok(AttributeCatalog { names, costs, domains, order, index })
    }

    pub fn m(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, k: usize) -> &str {
        &self.names[k]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn cost(&self, k: usize) -> Money {
        self.costs[k]
    }

    pub fn domain(&self, k: usize) -> u32 {
        self.domains[k]
    }

    /// Attribute indices sorted by descending cost, ties by ascending index.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn attr_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Total acquisition cost of a set of attributes.
    pub fn node_cost(&self, attrs: AttrSet) -> Money {
        attrs.iter().map(|k| self.costs[k]).sum()
    }

    /// Renders members as names in catalog order.
    pub fn names_of(&self, attrs: AttrSet) -> Vec<String> {
        attrs.iter().map(|k| self.names[k].clone()).collect()
    }
}

// ─── dataset ────────────────────────────────────────────────────────────────

/// An immutable binary (or small-ordinal) dataset. Rows are bitsets of the
/// non-zero attributes; a per-column inverted bitmap is built at load time so
/// support counting is an AND-popcount over columns and never scans tuples.
#[derive(Debug, Clone)]
pub struct Dataset {
    catalog: AttributeCatalog,
    rows: Vec<AttrSet>,
    columns: Vec<Vec<u64>>,
    values: Option<Vec<Vec<u8>>>,
    fingerprint: u64,
}

impl Dataset {
    pub fn from_parts(catalog: AttributeCatalog, rows: Vec<AttrSet>) -> Dataset {
        let width = AttrSet::full(catalog.m());
        for row in &rows {
            debug_assert!(row.is_subset_of(width));
        }
        let columns = build_columns(catalog.m(), &rows);
        let fingerprint = fingerprint(&catalog, &rows, None);
        Dataset { catalog, rows, columns, values: None, fingerprint }
    }

    fn from_ordinal_parts(catalog: AttributeCatalog, values: Vec<Vec<u8>>, n: usize) -> Dataset {
        let rows: Vec<AttrSet> = (0..n)
            .map(|r| AttrSet::from_indices((0..catalog.m()).filter(|&k| values[k][r] > 0)))
            .collect();
        let columns = build_columns(catalog.m(), &rows);
        let fingerprint = fingerprint(&catalog, &rows, Some(&values));
        Dataset { catalog, rows, columns, values: Some(values), fingerprint }
    }

    pub fn catalog(&self) -> &AttributeCatalog {
        &self.catalog
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn m(&self) -> usize {
        self.catalog.m()
    }

    pub fn row(&self, r: usize) -> AttrSet {
        self.rows[r]
    }

    pub fn rows(&self) -> &[AttrSet] {
        &self.rows
    }

    /// Ordinal cell value; 0/1 straight from the bitset for binary data.
    pub fn value(&self, r: usize, k: usize) -> u8 {
        match &self.values {
            Some(v) => v[k][r],
            None => self.rows[r].contains(k) as u8,
        }
    }

    /// 64-bit digest of catalog and cells; two datasets that differ anywhere
    /// disagree here with overwhelming probability.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    /// Row indices of tuples whose attribute set contains `attrs`.
    pub fn query_match(&self, attrs: AttrSet) -> Vec<usize> {
        let mut out = Vec::new();
        self.for_each_match(attrs, |r| out.push(r));
        out
    }

    /// `|query_match(attrs)|` computed on the inverted bitmaps without
    /// materializing the row set.
    pub fn support_count(&self, attrs: AttrSet) -> u64 {
        if attrs.is_empty() {
            return self.rows.len() as u64;
        }
        let mut cols = attrs.iter().map(|k| &self.columns[k]);
        let first = cols.next().unwrap();
        let rest: Vec<&Vec<u64>> = cols.collect();
        let mut count = 0u64;
        for (i, &block) in first.iter().enumerate() {
            let mut acc = block;
            for col in &rest {
                acc &= col[i];
            }
            count += acc.count_ones() as u64;
        }
        count
    }

    fn for_each_match(&self, attrs: AttrSet, mut visit: impl FnMut(usize)) {
        if attrs.is_empty() {
            (0..self.rows.len()).for_each(visit);
            return;
        }
        let cols: Vec<&Vec<u64>> = attrs.iter().map(|k| &self.columns[k]).collect();
        for i in 0..cols[0].len() {
            let mut acc = cols[0][i];
            for col in &cols[1..] {
                acc &= col[i];
            }
            while acc != 0 {
                visit(i * 64 + acc.trailing_zeros() as usize);
                acc &= acc - 1;
            }
        }
    }

    /// Row indices of tuples whose value meets a per-attribute minimum.
    /// `thresholds` aligns with `attrs.iter()` (ascending attribute index).
    /// With all thresholds at 1 on binary data this is exactly `query_match`.
    pub fn query_match_ordinal(
        &self,
        attrs: AttrSet,
        thresholds: &[u8],
    ) -> Result<Vec<usize>, QueryError> {
        let members: Vec<usize> = attrs.iter().collect();
        if members.len() != thresholds.len() {
            return Err(QueryError::ThresholdCount {
                expected: members.len(),
                got: thresholds.len(),
            });
        }
        for (&k, &t) in members.iter().zip(thresholds) {
            let dom = self.catalog.domain(k);
            if u32::from(t) >= dom {
                return Err(QueryError::ThresholdOutsideDomain {
                    attribute: self.catalog.name(k).to_string(),
                    value: t,
                    domain: dom,
                });
            }
        }
        let out = (0..self.rows.len())
            .filter(|&r| {
                members
                    .iter()
                    .zip(thresholds)
                    .all(|(&k, &t)| self.value(r, k) >= t)
            })
            .collect();
        Ok(out)
    }
}

fn build_columns(m: usize, rows: &[AttrSet]) -> Vec<Vec<u64>> {
    let blocks = rows.len().div_ceil(64);
    let mut columns = vec![vec![0u64; blocks]; m];
    for (r, row) in rows.iter().enumerate() {
        for k in row.iter() {
            columns[k][r / 64] |= 1 << (r % 64);
        }
    }
    columns
}

fn fingerprint(catalog: &AttributeCatalog, rows: &[AttrSet], values: Option<&Vec<Vec<u8>>>) -> u64 {
    let mut h = Fnv::new();
    h.write_u64(rows.len() as u64);
    h.write_u64(catalog.m() as u64);
    for k in 0..catalog.m() {
        h.write_bytes(catalog.name(k).as_bytes());
        h.write_u64(catalog.cost(k).cents());
        h.write_u64(catalog.domain(k) as u64);
    }
    for row in rows {
        h.write_u64(row.raw());
    }
    if let Some(values) = values {
        for col in values {
            h.write_bytes(col);
        }
    }
    h.finish()
}

/// FNV-1a, kept local so fingerprints are stable across releases.
struct Fnv(u64);

impl Fnv {
    fn new() -> Fnv {
        Fnv(0xcbf29ce484222325)
    }

    fn write_bytes(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 ^= b as u64;
            self.0 = self.0.wrapping_mul(0x100000001b3);
        }
        // Length separator so ("ab","c") and ("a","bc") differ.
        self.0 ^= 0xff;
        self.0 = self.0.wrapping_mul(0x100000001b3);
    }

    fn write_u64(&mut self, v: u64) {
        self.write_bytes(&v.to_le_bytes());
    }

    fn finish(&self) -> u64 {
        self.0
    }
}

// ─── parsing ────────────────────────────────────────────────────────────────

/// Parses a binary dataset CSV (header of attribute names, 0/1 cells) plus a
/// cost CSV of `name,amount` rows covering every attribute exactly once.
pub fn parse_dataset(data_csv: &str, costs_csv: &str) -> Result<Dataset, ParseError> {
    let (names, cell_rows) = split_csv(data_csv)?;
    let m = names.len();
    let mut rows = Vec::with_capacity(cell_rows.len());
    for (i, cells) in cell_rows.iter().enumerate() {
        let row_no = i + 1;
        if cells.len() != m {
            return Err(ParseError::RowWidth { row: row_no, expected: m, got: cells.len() });
        }
        let mut set = AttrSet::EMPTY;
        for (k, cell) in cells.iter().enumerate() {
            match cell.as_str() {
                "1" => set = set.with(k),
                "0" => {}
                other => {
                    return Err(ParseError::NonBinaryCell {
                        row: row_no,
                        column: names[k].clone(),
                        value: other.to_string(),
                    })
                }
            }
        }
        rows.push(set);
    }
    let costs = parse_costs(costs_csv, &names)?;
    let domains = vec![2u32; m];
    let catalog = AttributeCatalog::new(names, costs, domains)?;
    Ok(Dataset::from_parts(catalog, rows))
}

/// Parses a dataset whose cells are small non-negative integers. Each
/// attribute's domain is inferred as `max cell + 1` (at least 2). A row's
/// attribute set is its non-zero cells, so support counting and frequency are
/// unchanged; ordinal values back `query_match_ordinal`.
pub fn parse_dataset_ordinal(data_csv: &str, costs_csv: &str) -> Result<Dataset, ParseError> {
    let (names, cell_rows) = split_csv(data_csv)?;
    let m = names.len();
    let n = cell_rows.len();
    let mut values: Vec<Vec<u8>> = vec![vec![0u8; n]; m];
    for (i, cells) in cell_rows.iter().enumerate() {
        let row_no = i + 1;
        if cells.len() != m {
            return Err(ParseError::RowWidth { row: row_no, expected: m, got: cells.len() });
        }
        for (k, cell) in cells.iter().enumerate() {
            let v: u8 = cell.parse().map_err(|_| ParseError::BadCell {
                row: row_no,
                column: names[k].clone(),
                value: cell.clone(),
            })?;
            values[k][i] = v;
        }
    }
    let costs = parse_costs(costs_csv, &names)?;
    let domains: Vec<u32> = values
        .iter()
        .map(|col| (col.iter().copied().max().unwrap_or(0) as u32 + 1).max(2))
        .collect();
    let catalog = AttributeCatalog::new(names, costs, domains)?;
    Ok(Dataset::from_ordinal_parts(catalog, values, n))
}

fn split_csv(text: &str) -> Result<(Vec<String>, Vec<Vec<String>>), ParseError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or(ParseError::NoAttributes)?;
    let names: Vec<String> = header.split(',').map(|s| s.trim().to_string()).collect();
    if names.iter().all(|n| n.is_empty()) {
        return Err(ParseError::NoAttributes);
    }
    if names.len() > MAX_ATTRS {
        return Err(ParseError::TooManyAttributes { count: names.len() });
    }
    let rows = lines
        .map(|line| line.split(',').map(|s| s.trim().to_string()).collect())
        .collect();
    Ok((names, rows))
}

fn parse_costs(costs_csv: &str, names: &[String]) -> Result<Vec<Money>, ParseError> {
    let mut costs: Vec<Option<Money>> = vec![None; names.len()];
    let index: HashMap<&str, usize> =
        names.iter().enumerate().map(|(k, n)| (n.as_str(), k)).collect();
    for (i, line) in costs_csv.lines().enumerate() {
        let row_no = i + 1;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (name, amount) = line
            .split_once(',')
            .ok_or(ParseError::CostRowFormat { row: row_no })?;
        let name = name.trim();
        // A header line is tolerated but never required.
        if row_no == 1 && name.eq_ignore_ascii_case("name") {
            continue;
        }
        let k = *index
            .get(name)
            .ok_or_else(|| ParseError::UnknownAttribute { row: row_no, name: name.to_string() })?;
        if costs[k].is_some() {
            return Err(ParseError::DuplicateCost { name: name.to_string() });
        }
        let money = Money::parse(amount).ok_or_else(|| ParseError::InvalidCost {
            name: name.to_string(),
            value: amount.trim().to_string(),
        })?;
        costs[k] = Some(money);
    }
    costs
        .into_iter()
        .zip(names)
        .map(|(c, name)| c.ok_or_else(|| ParseError::MissingCost { name: name.clone() }))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    pub const FIG_DATA: &str = "\
Breakfast,TV,Internet,Washer
1,1,1,0
1,1,1,1
0,1,1,0
1,1,1,0
0,1,1,1
1,0,1,0
1,0,0,0
1,1,0,1
0,1,1,1
1,0,0,1
";

    pub const FIG_COSTS: &str = "Breakfast,1000\nTV,300\nInternet,250\nWasher,700\n";

    fn fig_dataset() -> Dataset {
        parse_dataset(FIG_DATA, FIG_COSTS).unwrap()
    }

    fn bits(s: &str) -> AttrSet {
        AttrSet::parse_bits(s).unwrap().0
    }

    #[test]
    fn parses_catalog_and_cost_order() {
        let d = fig_dataset();
        assert_eq!(d.n(), 10);
        assert_eq!(d.m(), 4);
        assert_eq!(d.catalog().name(0), "Breakfast");
        assert_eq!(d.catalog().cost(3), Money::from_units(700));
        // Breakfast 1000 > Washer 700 > TV 300 > Internet 250.
        assert_eq!(d.catalog().order(), &[0, 3, 1, 2]);
        assert_eq!(d.row(0), bits("1110"));
        assert_eq!(d.row(9), bits("1001"));
    }

    #[test]
    fn query_match_is_containment() {
        let d = fig_dataset();
        // {Breakfast, Washer} is held by accommodations 2, 8 and 10.
        let hits = d.query_match(bits("1001"));
        assert_eq!(hits, vec![1, 7, 9]);
        assert_eq!(d.query_match(AttrSet::EMPTY).len(), 10);
    }

    #[test]
    fn support_counts_match_figure() {
        let d = fig_dataset();
        assert_eq!(d.support_count(bits("0011")), 3);
        assert_eq!(d.support_count(bits("1011")), 1);
        assert_eq!(d.support_count(bits("1000")), 7);
        assert_eq!(d.support_count(bits("0111")), 3);
        assert_eq!(d.support_count(AttrSet::EMPTY), 10);
    }

    #[test]
    fn support_decomposes_and_is_anti_monotone() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..200 {
            let m = rng.gen_range(1..=10);
            let n = rng.gen_range(0..=150);
            let rows: Vec<AttrSet> = (0..n)
                .map(|_| AttrSet::from_raw(rng.gen::<u64>() & AttrSet::full(m).raw()))
                .collect();
            let names = (0..m).map(|k| format!("a{k}")).collect();
            let costs = vec![Money::from_units(1); m];
            let catalog = AttributeCatalog::new(names, costs, vec![2; m]).unwrap();
            let d = Dataset::from_parts(catalog, rows);

            let a = AttrSet::from_raw(rng.gen::<u64>() & AttrSet::full(m).raw());
            let b = a.union(AttrSet::from_raw(rng.gen::<u64>() & AttrSet::full(m).raw()));
            assert_eq!(d.support_count(a), d.query_match(a).len() as u64);
            assert!(d.support_count(b) <= d.support_count(a));
        }
    }

    #[test]
    fn rejects_malformed_data() {
        let bad_cell = "A,B\n1,2\n";
        match parse_dataset(bad_cell, "A,1\nB,1\n") {
            Err(ParseError::NonBinaryCell { row: 1, column, value }) => {
                assert_eq!(column, "B");
                assert_eq!(value, "2");
            }
            other => panic!("unexpected: {other:?}"),
        }

        let bad_width = "A,B\n1\n";
        assert_eq!(
            parse_dataset(bad_width, "A,1\nB,1\n").unwrap_err(),
            ParseError::RowWidth { row: 1, expected: 2, got: 1 }
        );

        assert_eq!(
            parse_dataset("A,B\n0,1\n", "A,1\n").unwrap_err(),
            ParseError::MissingCost { name: "B".into() }
        );
        assert_eq!(
            parse_dataset("A,B\n0,1\n", "A,1\nA,2\nB,1\n").unwrap_err(),
            ParseError::DuplicateCost { name: "A".into() }
        );
        match parse_dataset("A,B\n0,1\n", "A,-5\nB,1\n") {
            Err(ParseError::InvalidCost { name, value }) => {
                assert_eq!(name, "A");
                assert_eq!(value, "-5");
            }
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn header_only_gives_empty_dataset() {
        let d = parse_dataset("A,B,C\n", "A,1\nB,2\nC,3\n").unwrap();
        assert_eq!(d.n(), 0);
        assert_eq!(d.m(), 3);
        assert_eq!(d.support_count(bits("110")), 0);
    }

    #[test]
    fn rejects_oversized_header() {
        let names: Vec<String> = (0..65).map(|k| format!("a{k}")).collect();
        let header = names.join(",");
        let costs: String = names.iter().map(|n| format!("{n},1\n")).collect();
        assert_eq!(
            parse_dataset(&format!("{header}\n"), &costs).unwrap_err(),
            ParseError::TooManyAttributes { count: 65 }
        );
    }

    #[test]
    fn money_parses_exactly() {
        assert_eq!(Money::parse("1000"), Some(Money::from_cents(100_000)));
        assert_eq!(Money::parse("10.5"), Some(Money::from_cents(1050)));
        assert_eq!(Money::parse("0.25"), Some(Money::from_cents(25)));
        assert_eq!(Money::parse("-1"), None);
        assert_eq!(Money::parse("1.234"), None);
        assert_eq!(Money::parse(""), None);
        assert_eq!(Money::parse("1e3"), None);
        assert_eq!(format!("{}", Money::from_cents(1050)), "10.50");
        assert_eq!(format!("{}", Money::from_units(700)), "700");
    }

    #[test]
    fn bit_strings_round_trip_big_endian() {
        let (s, w) = AttrSet::parse_bits("1010").unwrap();
        assert_eq!(w, 4);
        assert!(s.contains(0) && s.contains(2));
        assert!(!s.contains(1) && !s.contains(3));
        assert_eq!(s.bit_string(4), "1010");
        assert_eq!(s.rep_value(4), 10);
        assert_eq!(bits("0111").rep_value(4), 7);
        assert_eq!(AttrSet::full(4).rep_value(4), 15);
        assert_eq!(AttrSet::parse_bits("10x1"), None);
    }

    #[test]
    fn subset_iteration_is_complete() {
        let s = bits("1011");
        let subs: Vec<AttrSet> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        let mut seen = std::collections::HashSet::new();
        for sub in subs {
            assert!(sub.is_subset_of(s));
            assert!(seen.insert(sub.raw()));
        }
    }

    #[test]
    fn ordinal_queries_respect_domains() {
        let data = "Rooms,Stars\n0,1\n2,0\n1,2\n2,2\n";
        let costs = "Rooms,10\nStars,20\n";
        let d = parse_dataset_ordinal(data, costs).unwrap();
        assert_eq!(d.catalog().domain(0), 3);
        assert_eq!(d.catalog().domain(1), 3);
        // Non-zero cells define the row's attribute set.
        assert_eq!(d.row(0), bits("01"));
        assert_eq!(d.support_count(bits("11")), 2);

        let hits = d.query_match_ordinal(bits("11"), &[1, 2]).unwrap();
        assert_eq!(hits, vec![2, 3]);
        let err = d.query_match_ordinal(bits("11"), &[1, 5]).unwrap_err();
        assert_eq!(
            err,
            QueryError::ThresholdOutsideDomain {
                attribute: "Stars".into(),
                value: 5,
                domain: 3
            }
        );
        let err = d.query_match_ordinal(bits("11"), &[1]).unwrap_err();
        assert_eq!(err, QueryError::ThresholdCount { expected: 2, got: 1 });
    }

    #[test]
    fn ordinal_with_unit_thresholds_equals_binary_query() {
        let d = fig_dataset();
        let q = bits("0110");
        let via_ordinal = d.query_match_ordinal(q, &[1, 1]).unwrap();
        assert_eq!(via_ordinal, d.query_match(q));
    }

    #[test]
    fn fingerprint_tracks_content() {
        let a = fig_dataset();
        let b = parse_dataset(&FIG_DATA.replace("1,0,0,1", "1,0,1,1"), FIG_COSTS).unwrap();
        let again = fig_dataset();
        assert_eq!(a.fingerprint(), again.fingerprint());
        assert_ne!(a.fingerprint(), b.fingerprint());
    }
}
