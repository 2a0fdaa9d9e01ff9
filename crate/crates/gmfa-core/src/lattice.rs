//! The lattice of attribute combinations and the spanning tree used to walk
//! it top-down without generating any node twice.
//!
//! A node is a width-m bitset; its parents add one attribute, its children
//! drop one. The spanning tree comes from hypercube broadcast: every non-root
//! node hangs off the parent obtained by setting the bit at `rho`, the
//! 1-based position (from the left) of its rightmost zero. When positions are
//! laid out in descending cost order, that tree parent is also the cheapest
//! lattice parent, which is what makes pruning at affordable nodes exact.
//!
//! `dag_tree_*` generalize the same construction to vectors over small
//! ordinal domains; binary domains reduce to the bitset tree.

use crate::model::{AttrSet, AttributeCatalog, Money};

/// A lattice node with its cached level and total acquisition cost.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeNode {
    pub bits: AttrSet,
    pub level: u32,
    pub cost: Money,
}

impl LatticeNode {
    pub fn new(bits: AttrSet, catalog: &AttributeCatalog) -> LatticeNode {
        LatticeNode { bits, level: bits.len(), cost: catalog.node_cost(bits) }
    }

    pub fn is_affordable(&self, budget: Money) -> bool {
        self.cost <= budget
    }
}

/// Parents of `bits` within the sublattice rooted at `root`: one node per
/// missing attribute, in ascending attribute order.
pub fn lattice_parents(bits: AttrSet, root: AttrSet) -> Vec<AttrSet> {
    debug_assert!(bits.is_subset_of(root));
    root.difference(bits).iter().map(|k| bits.with(k)).collect()
}

/// Children of `bits` in the full lattice: one node per member dropped.
pub fn lattice_children(bits: AttrSet) -> Vec<AttrSet> {
    bits.iter().map(|k| bits.without(k)).collect()
}

/// Affordable, and every lattice parent within `root` is not. The set of
/// such nodes is exactly the candidate frontier a budgeted search must score.
pub fn is_maximal_affordable(
    bits: AttrSet,
    root: AttrSet,
    catalog: &AttributeCatalog,
    budget: Money,
) -> bool {
    let cost = catalog.node_cost(bits);
    if cost > budget {
        return false;
    }
    root.difference(bits)
        .iter()
        .all(|k| cost + catalog.cost(k) > budget)
}

/// 1-based position, counted from the left, of the rightmost zero within
/// width `m`; 0 when every position is set.
pub fn rho(bits: AttrSet, m: usize) -> usize {
    let zeros = AttrSet::full(m).difference(bits).raw();
    if zeros == 0 {
        0
    } else {
        64 - zeros.leading_zeros() as usize
    }
}

/// Tree children: clear each set bit strictly right of position `rho`.
/// Everything right of the rightmost zero is set, so the children are the
/// nodes dropping one of the trailing attributes; the root sheds each of
/// its m members.
pub fn tree_children(bits: AttrSet, m: usize) -> Vec<AttrSet> {
    let start = rho(bits, m);
    (start..m).map(|k| bits.without(k)).collect()
}

/// Tree parent: set the bit at position `rho`. `None` on the all-ones root.
pub fn tree_parent(bits: AttrSet, m: usize) -> Option<AttrSet> {
    match rho(bits, m) {
        0 => None,
        p => Some(bits.with(p - 1)),
    }
}

// ─── ordinal domains ────────────────────────────────────────────────────────

/// Per-attribute upgrade prices: `steps[k][v]` buys the step from value `v`
/// to `v + 1`, so attribute `k` ranges over `0..=steps[k].len()`.
#[derive(Debug, Clone)]
pub struct OrdinalCosts {
    steps: Vec<Vec<Money>>,
}

impl OrdinalCosts {
    pub fn new(steps: Vec<Vec<Money>>) -> OrdinalCosts {
        OrdinalCosts { steps }
    }

    pub fn m(&self) -> usize {
        self.steps.len()
    }

    pub fn domain(&self, k: usize) -> u32 {
        self.steps[k].len() as u32 + 1
    }

    pub fn max_value(&self, k: usize) -> u8 {
        self.steps[k].len() as u8
    }

    pub fn step(&self, k: usize, from: u8) -> Money {
        self.steps[k][from as usize]
    }

    /// Cost of raising attribute `k` from 0 to `value`.
    pub fn cumulative(&self, k: usize, value: u8) -> Money {
        self.steps[k][..value as usize].iter().copied().sum()
    }

    /// Cost of raising attribute `k` between two values.
    pub fn upgrade(&self, k: usize, from: u8, to: u8) -> Money {
        debug_assert!(from <= to);
        self.steps[k][from as usize..to as usize].iter().copied().sum()
    }
}

/// A node of the ordinal lattice: one value per attribute, ordered by
/// componentwise domination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrdinalNode {
    pub values: Vec<u8>,
    pub level: u32,
    pub cost: Money,
}

impl OrdinalNode {
    pub fn new(values: Vec<u8>, costs: &OrdinalCosts) -> OrdinalNode {
        let level = values.iter().map(|&v| v as u32).sum();
        let cost = values
            .iter()
            .enumerate()
            .map(|(k, &v)| costs.cumulative(k, v))
            .sum();
        OrdinalNode { values, level, cost }
    }
}

/// Decimal value of the vector representative read big-endian in base
/// `max_d`; the ordinal counterpart of a node's bit-representative value.
pub fn ordinal_index(values: &[u8], max_d: u32) -> u128 {
    values
        .iter()
        .fold(0u128, |acc, &v| acc * max_d as u128 + v as u128)
}

/// DAG-tree children: decrement component `k` wherever `values[k] > 0` and
/// every later component already sits at the root's value. Starting from
/// `root` this generates each dominated vector exactly once.
pub fn dag_tree_children(values: &[u8], root: &[u8]) -> Vec<Vec<u8>> {
    debug_assert_eq!(values.len(), root.len());
    let mut out = Vec::new();
    for k in (0..values.len()).rev() {
        if values[k] > 0 {
            let mut child = values.to_vec();
            child[k] -= 1;
            out.push(child);
        }
        if values[k] != root[k] {
            break;
        }
    }
    out.reverse();
    out
}

/// DAG-tree parent: increment the rightmost component below the root's
/// value, which is the parent with the smallest ordinal index. `None` on the
/// root itself.
pub fn dag_tree_parent(values: &[u8], root: &[u8]) -> Option<Vec<u8>> {
    debug_assert_eq!(values.len(), root.len());
    for k in (0..values.len()).rev() {
        if values[k] < root[k] {
            let mut parent = values.to_vec();
            parent[k] += 1;
            return Some(parent);
        }
    }
    None
}
