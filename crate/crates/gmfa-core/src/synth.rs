//! Seeded synthetic datasets. Property suites want quick throwaway
//! instances; benchmarks want large datasets whose frequent-set structure
//! can be shaped (a flat Bernoulli grid has only shallow frequent sets, so
//! correlated attribute groups are the lever for deep ones).

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::model::{AttrSet, AttributeCatalog, Dataset, Money};

/// A block of attributes that tend to fire together: each row activates the
/// group with probability `activation`, and an active group sets each member
/// with probability `within`. Members may overlap across groups; a bit set
/// by anyone stays set.
#[derive(Debug, Clone, PartialEq)]
pub struct AttrGroup {
    pub members: Vec<usize>,
    pub activation: f64,
    pub within: f64,
}

/// Cost assignment for generated catalogs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CostModel {
    /// Mostly mid-range prices with a thin expensive tail: roughly 1/26 of
    /// attributes in 1..=9, 9/26 in 10..=99, 14/26 in 100..=999, the rest in
    /// 1000..=2999 (whole units).
    Brackets,
    /// Uniform whole-unit prices in `lo..=hi`.
    Uniform { lo: u64, hi: u64 },
    Fixed(u64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SynthSpec {
    pub n: usize,
    pub m: usize,
    /// Per-cell probability outside any group.
    pub base_density: f64,
    pub groups: Vec<AttrGroup>,
    pub costs: CostModel,
    pub seed: u64,
}

impl SynthSpec {
    pub fn uniform(n: usize, m: usize, density: f64, seed: u64) -> SynthSpec {
        SynthSpec {
            n,
            m,
            base_density: density,
            groups: Vec::new(),
            costs: CostModel::Brackets,
            seed,
        }
    }

    /// Packs disjoint groups of the given sizes into the low attribute
    /// indices, leaving the remainder as background noise.
    pub fn grouped(
        n: usize,
        m: usize,
        sizes: &[usize],
        activation: f64,
        within: f64,
        base_density: f64,
        seed: u64,
    ) -> SynthSpec {
        let mut groups = Vec::new();
        let mut next = 0;
        for &size in sizes {
            let members: Vec<usize> = (next..next + size).filter(|&k| k < m).collect();
            if members.len() > 1 {
                groups.push(AttrGroup { members, activation, within });
            }
            next += size;
        }
        SynthSpec { n, m, base_density, groups, costs: CostModel::Brackets, seed }
    }

    pub fn generate(&self) -> Dataset {
        assert!(self.m >= 1, "need at least one attribute");
        let mut rng = ChaCha12Rng::seed_from_u64(self.seed);
        let names: Vec<String> = (0..self.m).map(|k| format!("a{k:02}")).collect();
        // Costs draw from their own stream so the row bits for a given seed
        // do not depend on the cost model.
        let mut cost_rng = ChaCha12Rng::seed_from_u64(self.seed);
        cost_rng.set_stream(1);
        let costs = draw_costs(&mut cost_rng, self.m, self.costs);
        let domains = vec![2u32; self.m];
        let catalog = AttributeCatalog::new(names, costs, domains)
            .expect("generated catalog is well formed");

        let mut rows = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            let mut row = AttrSet::EMPTY;
            for k in 0..self.m {
                if rng.gen_bool(self.base_density) {
                    row = row.with(k);
                }
            }
            for g in &self.groups {
                if rng.gen_bool(g.activation) {
                    for &k in &g.members {
                        if rng.gen_bool(g.within) {
                            row = row.with(k);
                        }
                    }
                }
            }
            rows.push(row);
        }
        Dataset::from_parts(catalog, rows)
    }
}

fn draw_costs<R: Rng>(rng: &mut R, m: usize, model: CostModel) -> Vec<Money> {
    (0..m)
        .map(|k| {
            let units = match model {
                CostModel::Fixed(u) => u,
                CostModel::Uniform { lo, hi } => rng.gen_range(lo..=hi),
                CostModel::Brackets => {
                    // Bracket boundaries follow the 1:9:14:2 split over m.
                    let b = (k * 26) / m.max(1);
                    match b {
                        0 => rng.gen_range(1..=9),
                        1..=9 => rng.gen_range(10..=99),
                        10..=23 => rng.gen_range(100..=999),
                        _ => rng.gen_range(1000..=2999),
                    }
                }
            };
            Money::from_units(units)
        })
        .collect()
}

/// Quick instance for property tests: density drawn per dataset, uniform
/// costs, everything from the caller's generator.
pub fn random_dataset<R: Rng>(rng: &mut R, n: usize, m: usize) -> Dataset {
    let density = rng.gen_range(0.15..0.85);
    let names: Vec<String> = (0..m).map(|k| format!("a{k:02}")).collect();
    let costs: Vec<Money> = (0..m)
        .map(|_| Money::from_units(rng.gen_range(1..=3000)))
        .collect();
    let catalog = AttributeCatalog::new(names, costs, vec![2; m]).expect("well formed");
    let rows = (0..n)
        .map(|_| {
            let mut row = AttrSet::EMPTY;
            for k in 0..m {
                if rng.gen_bool(density) {
                    row = row.with(k);
                }
            }
            row
        })
        .collect();
    Dataset::from_parts(catalog, rows)
}
