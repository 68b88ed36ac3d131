//! Magnitude homology by blocks of fixed start, end, length and support.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::chains::{self, boundary, boundary_squares_to_zero, chains_from, spheres, PackedChain};
use super::snf::{smith, SparseMatrix};
use super::table::{BettiTable, HomologySummand};
use crate::arrangement::{IntersectionLattice, TopeGraph};
use crate::error::{Error, Result};

pub const DEFAULT_BUDGET: u64 = 5_000_000;

#[derive(Clone, Debug)]
pub struct HomologyOptions {
    pub max_length: usize,
    /// Cap on proper chains of a single length.
    pub budget: u64,
    /// Verify `∂∂ = 0` chain by chain.
    pub check_d2: bool,
    /// Skip blocks whose support does not span the center.
    pub interior_only: bool,
    /// Keep a table per support set.
    pub keep_supports: bool,
}

impl HomologyOptions {
    pub fn new(max_length: usize) -> Self {
        HomologyOptions {
            max_length,
            budget: DEFAULT_BUDGET,
            check_d2: false,
            interior_only: false,
            keep_supports: false,
        }
    }
}

/// Default length cap: `min(n + 2, 8)` up to 30 chambers, then 6.
pub fn default_length(n: usize, chambers: usize) -> usize {
    if chambers <= 30 {
        (n + 2).min(8)
    } else if chambers <= 130 {
        6
    } else {
        4
    }
}

/// `default_length` lowered until every length fits within `budget`.
pub fn fitted_length(g: &TopeGraph, budget: u64) -> usize {
    let cap = default_length(g.hyperplanes(), g.len()).min(chains::MAX_GRADE);
    let counts = chains::chain_counts(g, cap);
    counts
        .iter()
        .position(|by_k| by_k.iter().sum::<u128>() > budget as u128)
        .map_or(cap, |l| l.saturating_sub(1))
}

#[derive(Clone, Debug, Default)]
pub struct HomologyResult {
    pub table: BettiTable,
    /// Chains whose support intersects to the center.
    pub interior: BettiTable,
    /// Blocks with `d(start, end) = length`.
    pub geodesic: BettiTable,
    /// X-supported homology, keyed by flat id.
    pub by_flat: BTreeMap<usize, BettiTable>,
    pub by_support: BTreeMap<u64, BettiTable>,
    /// `#P_{k,l}` from the counting recursion.
    pub chain_counts: BTreeMap<(usize, usize), u64>,
    /// `#P_{k,l}` summed over enumerated blocks.
    pub block_counts: BTreeMap<(usize, usize), u64>,
    pub d2_ok: bool,
    pub blocks: usize,
}

/// Homology of one block given its bases per grade.
fn block_homology(g: &TopeGraph, grades: &mut [Vec<PackedChain>], check_d2: bool) -> (Vec<HomologySummand>, bool) {
    let top = grades.len();
    for gr in grades.iter_mut() {
        gr.sort_unstable();
    }
    let mut d2_ok = true;
    // ranks[k] = rank of ∂_k : C_k -> C_{k-1}
    let mut ranks = vec![0usize; top + 1];
    let mut torsion: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for k in 1..top {
        if grades[k].is_empty() || grades[k - 1].is_empty() {
            continue;
        }
        let index: HashMap<PackedChain, u32> =
            grades[k - 1].iter().enumerate().map(|(i, &c)| (c, i as u32)).collect();
        let mut m = SparseMatrix::new(grades[k - 1].len());
        for &c in &grades[k] {
            let row = boundary(g, c, k)
                .into_iter()
                .map(|(f, s)| (*index.get(&f).expect("boundary stays in its block"), s))
                .collect();
            m.push_row(row);
            if check_d2 && k >= 2 && !boundary_squares_to_zero(g, c, k) {
                d2_ok = false;
            }
        }
        if m.nnz() == 0 {
            continue;
        }
        let s = smith(&m);
        ranks[k] = s.rank;
        torsion[k] = s.torsion;
    }
    let out = (0..top)
        .map(|k| HomologySummand {
            free_rank: (grades[k].len() - ranks[k] - ranks[k + 1]) as u64,
            torsion: torsion[k + 1].clone(),
        })
        .collect();
    (out, d2_ok)
}

#[derive(Default)]
struct Partial {
    table: BettiTable,
    interior: BettiTable,
    geodesic: BettiTable,
    by_flat: BTreeMap<usize, BettiTable>,
    by_support: BTreeMap<u64, BettiTable>,
    block_counts: BTreeMap<(usize, usize), u64>,
    d2_ok: bool,
    blocks: usize,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        self.table.merge(&other.table);
        self.interior.merge(&other.interior);
        self.geodesic.merge(&other.geodesic);
        for (x, t) in other.by_flat {
            self.by_flat.entry(x).or_insert_with(|| BettiTable::new(t.max_length)).merge(&t);
        }
        for (s, t) in other.by_support {
            self.by_support.entry(s).or_insert_with(|| BettiTable::new(t.max_length)).merge(&t);
        }
        for (kl, c) in other.block_counts {
            *self.block_counts.entry(kl).or_default() += c;
        }
        self.d2_ok &= other.d2_ok;
        self.blocks += other.blocks;
        self
    }
}

pub fn magnitude_homology(g: &TopeGraph, lattice: &IntersectionLattice, opts: &HomologyOptions) -> Result<HomologyResult> {
    let big = |msg: String| Error::Stage { stage: "homology".into(), message: msg };
    if g.len() > chains::MAX_CHAMBERS {
        return Err(big(format!("{} chambers exceed the supported {}", g.len(), chains::MAX_CHAMBERS)));
    }
    if opts.max_length > chains::MAX_GRADE {
        return Err(big(format!("length cap {} exceeds {}", opts.max_length, chains::MAX_GRADE)));
    }
    let lmax = opts.max_length;
    let counts = chains::chain_counts(g, lmax);
    for (l, by_k) in counts.iter().enumerate() {
        let total: u128 = by_k.iter().sum();
        if total > opts.budget as u128 {
            return Err(Error::Budget { length: l, count: total.min(u64::MAX as u128) as u64, cap: opts.budget });
        }
    }
    let chain_counts = counts
        .iter()
        .enumerate()
        .flat_map(|(l, by_k)| by_k.iter().enumerate().filter(|(_, &c)| c > 0).map(move |(k, &c)| ((k, l), c as u64)))
        .collect();

    let sph = spheres(g);
    let top_flat = lattice.top().id;
    let partials: Vec<Partial> = (0..g.len())
        .into_par_iter()
        .map(|start| {
            let mut p = Partial {
                table: BettiTable::new(lmax),
                interior: BettiTable::new(lmax),
                geodesic: BettiTable::new(lmax),
                d2_ok: true,
                ..Default::default()
            };
            let mut closure_cache: HashMap<u64, usize> = HashMap::new();
            let mut blocks: Vec<_> = chains_from(g, &sph, start, lmax).into_iter().collect();
            blocks.sort_unstable_by_key(|(key, _)| *key);
            for ((l, end, support), mut grades) in blocks {
                for (k, cs) in grades.iter().enumerate() {
                    if !cs.is_empty() {
                        *p.block_counts.entry((k, l)).or_default() += cs.len() as u64;
                    }
                }
                let flat = *closure_cache.entry(support).or_insert_with(|| lattice.closure(support).id);
                if opts.interior_only && flat != top_flat {
                    continue;
                }
                p.blocks += 1;
                let (hs, ok) = block_homology(g, &mut grades, opts.check_d2);
                p.d2_ok &= ok;
                let geodesic = g.distance(start, end) == l;
                for (k, h) in hs.iter().enumerate() {
                    if h.is_zero() {
                        continue;
                    }
                    p.table.add(k, l, h);
                    if flat == top_flat {
                        p.interior.add(k, l, h);
                    }
                    if geodesic {
                        p.geodesic.add(k, l, h);
                    }
                    p.by_flat.entry(flat).or_insert_with(|| BettiTable::new(lmax)).add(k, l, h);
                    if opts.keep_supports {
                        p.by_support.entry(support).or_insert_with(|| BettiTable::new(lmax)).add(k, l, h);
                    }
                }
            }
            p
        })
        .collect();
    let merged = partials.into_iter().fold(
        Partial {
            table: BettiTable::new(lmax),
            interior: BettiTable::new(lmax),
            geodesic: BettiTable::new(lmax),
            d2_ok: true,
            ..Default::default()
        },
        Partial::merge,
    );
    Ok(HomologyResult {
        table: merged.table,
        interior: merged.interior,
        geodesic: merged.geodesic,
        by_flat: merged.by_flat,
        by_support: merged.by_support,
        chain_counts,
        block_counts: merged.block_counts,
        d2_ok: merged.d2_ok,
        blocks: merged.blocks,
    })
}
