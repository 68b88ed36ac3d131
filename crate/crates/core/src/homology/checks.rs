//! Identities that tie the computed tables to the intersection lattice and
//! to the magnitude series.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::engine::{magnitude_homology, HomologyOptions, HomologyResult};
use super::geodesic::{geodesic_betti_formula, geodesic_homology_direct};
use super::table::{BettiTable, HomologySummand};
use crate::algebra::PowerSeriesPrefix;
use crate::arrangement::{Arrangement, IntersectionLattice, TopeGraph};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail(String),
    Skipped(String),
}

impl CheckStatus {
    fn from_mismatches(m: Vec<String>) -> CheckStatus {
        if m.is_empty() {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail(m.join("; "))
        }
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, CheckStatus::Fail(_))
    }
}

pub type CheckMap = BTreeMap<String, CheckStatus>;

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

fn diff_tables(what: &str, got: &BettiTable, want: &BettiTable) -> Vec<String> {
    let mut keys: Vec<_> = got.entries.keys().chain(want.entries.keys()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    keys.into_iter()
        .filter_map(|(k, l)| {
            let (a, b) = (got.get(k, l), want.get(k, l));
            (a != b).then(|| format!("{what} ({k},{l}): {} vs {}", fmt_summand(&a), fmt_summand(&b)))
        })
        .collect()
}

fn fmt_summand(h: &HomologySummand) -> String {
    let mut s = h.free_rank.to_string();
    for d in &h.torsion {
        s.push_str(&format!("+Z/{d}"));
    }
    s
}

/// `beta_{0,0} = #Ch`, `beta_{1,1} = 2 sum_H c^H`,
/// `beta_{2,2} = beta_{1,1} + 4 sum c^X` over rank-2 flats with two
/// hyperplanes, everything else with `l <= 2` zero and torsion-free.
pub fn small_length(table: &BettiTable, lattice: &IntersectionLattice, chambers: usize) -> CheckStatus {
    if table.max_length < 2 {
        return CheckStatus::Skipped("needs length 2".into());
    }
    let b11: u64 = 2 * lattice.of_rank(1).map(|f| f.c_upper).sum::<u64>();
    let b22 = b11 + 4 * lattice.of_rank(2).filter(|f| f.size() == 2).map(|f| f.c_upper).sum::<u64>();
    let mut want = BettiTable::new(2);
    want.add(0, 0, &HomologySummand::free(chambers as u64));
    want.add(1, 1, &HomologySummand::free(b11));
    want.add(2, 2, &HomologySummand::free(b22));
    let mut got = BettiTable::new(2);
    for (&(k, l), h) in &table.entries {
        if l <= 2 {
            got.add(k, l, h);
        }
    }
    CheckStatus::from_mismatches(diff_tables("small length", &got, &want))
}

/// `beta_{l,l} = sum c^X 2^{rk X} C(l-1, rk X - 1)` over Boolean flats.
pub fn diagonal_formula(lattice: &IntersectionLattice, l: usize) -> u64 {
    if l == 0 {
        return lattice.bottom().c_upper;
    }
    lattice
        .flats()
        .iter()
        .filter(|f| f.rank >= 1 && f.is_boolean())
        .map(|f| f.c_upper * (1u64 << f.rank) * binom(l as u64 - 1, f.rank as u64 - 1))
        .sum()
}

pub fn diagonal(table: &BettiTable, lattice: &IntersectionLattice) -> CheckStatus {
    let mut m = Vec::new();
    for l in 0..=table.max_length {
        let h = table.get(l, l);
        let want = diagonal_formula(lattice, l);
        if h.free_rank != want || !h.torsion.is_empty() {
            m.push(format!("diagonal l={l}: {} vs {want}", fmt_summand(&h)));
        }
    }
    CheckStatus::from_mismatches(m)
}

/// Interior diagonal: `2^r C(l-1, r-1)` for Boolean arrangements, zero otherwise.
pub fn interior_diagonal(interior: &BettiTable, lattice: &IntersectionLattice) -> CheckStatus {
    let top = lattice.top();
    let mut m = Vec::new();
    for l in 1..=interior.max_length {
        let want = if top.is_boolean() {
            (1u64 << top.rank) * binom(l as u64 - 1, top.rank as u64 - 1)
        } else {
            0
        };
        let got = interior.get(l, l);
        if got.free_rank != want || !got.torsion.is_empty() {
            m.push(format!("interior diagonal l={l}: {} vs {want}", fmt_summand(&got)));
        }
    }
    CheckStatus::from_mismatches(m)
}

/// Non-zero `beta_{k,l}` needs `l/diam <= k <= l`, strictly on the left
/// when `diam > 1` and `l > 0`.
pub fn degree_bounds(table: &BettiTable, diameter: usize) -> CheckStatus {
    let m = table
        .entries
        .keys()
        .filter(|&&(k, l)| {
            let strict = diameter > 1 && l > 0;
            let low_ok = if strict { k * diameter > l } else { k * diameter >= l };
            !(low_ok && k <= l)
        })
        .map(|(k, l)| format!("nonzero at ({k},{l})"))
        .collect();
    CheckStatus::from_mismatches(m)
}

fn series_int(s: &PowerSeriesPrefix, l: usize) -> Option<BigInt> {
    s.coeff(l).filter(|c| c.is_integer()).map(BigRational::to_integer)
}

/// `sum_k (-1)^k #P_{k,l} = chi_l = c_l`.
pub fn euler_characteristic(result: &HomologyResult, series: &PowerSeriesPrefix) -> CheckStatus {
    let chi = result.table.euler_row();
    let mut m = Vec::new();
    for (l, &x) in chi.iter().enumerate() {
        let raw: i128 = result
            .chain_counts
            .iter()
            .filter(|(&(_, ll), _)| ll == l)
            .map(|(&(k, _), &c)| if k % 2 == 0 { c as i128 } else { -(c as i128) })
            .sum();
        if raw != x as i128 {
            m.push(format!("l={l}: chain alternating sum {raw} vs chi {x}"));
        }
        match series_int(series, l) {
            Some(c) if c == BigInt::from(x) => {}
            Some(c) => m.push(format!("l={l}: chi {x} vs series {c}")),
            None => {}
        }
    }
    CheckStatus::from_mismatches(m)
}

/// `chi°_l` matches the interior series, vanishes below `n`, and
/// `chi°_{l+n} = (-1)^r chi_l`.
pub fn interior_reciprocity(result: &HomologyResult, interior_series: &PowerSeriesPrefix, rank: usize, n: usize) -> CheckStatus {
    let chi = result.table.euler_row();
    let chio = result.interior.euler_row();
    let sign = if rank % 2 == 0 { 1 } else { -1 };
    let mut m = Vec::new();
    for (l, &x) in chio.iter().enumerate() {
        if let Some(c) = series_int(interior_series, l) {
            if c != BigInt::from(x) {
                m.push(format!("l={l}: interior chi {x} vs series {c}"));
            }
        }
        if l < n && x != 0 {
            m.push(format!("l={l}: interior chi {x} below n"));
        }
        if l >= n && x != sign * chi[l - n] {
            m.push(format!("l={l}: interior chi {x} vs {}", sign * chi[l - n]));
        }
    }
    CheckStatus::from_mismatches(m)
}

/// Direct order-complex route against the flat formula and the geodesic
/// blocks of the full computation.
pub fn geodesic(g: &TopeGraph, lattice: &IntersectionLattice, result: &HomologyResult) -> CheckStatus {
    let l = result.table.max_length;
    let direct = geodesic_homology_direct(g, l);
    let formula = geodesic_betti_formula(lattice, l);
    let mut m = diff_tables("direct vs formula", &direct, &formula);
    m.extend(diff_tables("blocks vs formula", &result.geodesic, &formula));
    CheckStatus::from_mismatches(m)
}

/// Boolean iff the table is diagonal; otherwise `beta_{r,n} >= #Ch`.
pub fn boolean_diagonality(table: &BettiTable, lattice: &IntersectionLattice, chambers: usize) -> CheckStatus {
    let top = lattice.top();
    if top.is_boolean() {
        let off: Vec<String> = table
            .entries
            .keys()
            .filter(|(k, l)| k != l)
            .map(|(k, l)| format!("off-diagonal ({k},{l}) for a Boolean arrangement"))
            .collect();
        return CheckStatus::from_mismatches(off);
    }
    let (r, n) = (top.rank, top.size());
    if table.max_length < n {
        return CheckStatus::Skipped(format!("needs length {n}"));
    }
    let b = table.beta(r, n);
    if b >= chambers as u64 {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail(format!("beta_({r},{n}) = {b} < {chambers}"))
    }
}

/// `MH(A; X) ≅ MH°(A_X)^{c^X}` for every flat below the top, with the
/// interior groups computed on the localization's own tope graph.
pub fn face_decomposition(a: &Arrangement, lattice: &IntersectionLattice, result: &HomologyResult, budget: u64) -> Result<CheckStatus> {
    let lmax = result.table.max_length;
    let mut total = BettiTable::new(lmax);
    for t in result.by_flat.values() {
        total.merge(t);
    }
    let mut m = diff_tables("sum over flats", &total, &result.table);
    for x in lattice.flats() {
        if x.id == lattice.top().id || x.size() > lmax {
            continue;
        }
        let ax = a.subarrangement(x.hyperplanes);
        let gx = TopeGraph::enumerate(&ax);
        let lx = IntersectionLattice::build(&ax);
        let mut opts = HomologyOptions::new(lmax);
        opts.interior_only = true;
        opts.budget = budget;
        let local = magnitude_homology(&gx, &lx, &opts)?;
        let want = local.interior.times(x.c_upper);
        let got = result.by_flat.get(&x.id).cloned().unwrap_or_else(|| BettiTable::new(lmax));
        m.extend(diff_tables(&format!("flat {}", x.id), &got, &want));
    }
    Ok(CheckStatus::from_mismatches(m))
}

/// Minimum length of a 4-cut: a proper 3-chain whose two 3-subchains are
/// geodesic while the whole chain is not.
pub fn four_cut_min(g: &TopeGraph) -> Option<usize> {
    let d = g.distance_matrix();
    let n = g.len();
    let mut best: Option<usize> = None;
    for x1 in 0..n {
        for x2 in 0..n {
            if x1 == x2 {
                continue;
            }
            let d12 = d[x1][x2];
            let before: Vec<usize> = (0..n).filter(|&x0| x0 != x1 && d[x0][x1] + d12 == d[x0][x2]).collect();
            for x3 in 0..n {
                if x3 == x2 || d12 + d[x2][x3] != d[x1][x3] {
                    continue;
                }
                for &x0 in &before {
                    let len = d[x0][x1] + d12 + d[x2][x3];
                    if len != d[x0][x3] && best.map_or(true, |b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    best
}

/// Bigraded convolution of free ranks; the Künneth prediction for a
/// direct sum when both factors are torsion-free.
pub fn kunneth_ranks(a: &BettiTable, b: &BettiTable) -> BettiTable {
    let lmax = a.max_length.min(b.max_length);
    let mut t = BettiTable::new(lmax);
    for (&(k1, l1), h1) in &a.entries {
        for (&(k2, l2), h2) in &b.entries {
            if l1 + l2 <= lmax {
                t.add(k1 + k2, l1 + l2, &HomologySummand::free(h1.free_rank * h2.free_rank));
            }
        }
    }
    t
}

/// `(k, l, beta_{k,l}, beta°_{k+r,l+n})` where both sides fit in the table.
pub fn shifted_interior_pairs(result: &HomologyResult, rank: usize, n: usize) -> Vec<(usize, usize, u64, u64)> {
    let lmax = result.table.max_length;
    (0..=lmax.saturating_sub(n))
        .filter(|l| l + n <= lmax)
        .flat_map(|l| (0..=l).map(move |k| (k, l)))
        .map(|(k, l)| (k, l, result.table.beta(k, l), result.interior.beta(k + rank, l + n)))
        .collect()
}

pub struct CheckInputs<'a> {
    pub arrangement: &'a Arrangement,
    pub graph: &'a TopeGraph,
    pub lattice: &'a IntersectionLattice,
    pub result: &'a HomologyResult,
    pub series: Option<&'a PowerSeriesPrefix>,
    pub interior_series: Option<&'a PowerSeriesPrefix>,
    pub face_check: bool,
    pub geodesic_check: bool,
    pub budget: u64,
}

pub fn run_checks(inp: &CheckInputs) -> Result<CheckMap> {
    let r = inp.result;
    let l = inp.lattice;
    let chambers = inp.graph.len();
    let diam = if chambers == 0 { 0 } else { inp.graph.distance(0, inp.graph.antipode(0)) };
    let mut c = CheckMap::new();
    c.insert(
        "d_squared".into(),
        if r.d2_ok { CheckStatus::Pass } else { CheckStatus::Fail("boundary does not square to zero".into()) },
    );
    c.insert(
        "block_counts".into(),
        if r.block_counts == r.chain_counts {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail("blocks do not partition the proper chains".into())
        },
    );
    c.insert("small_length".into(), small_length(&r.table, l, chambers));
    c.insert("diagonal".into(), diagonal(&r.table, l));
    c.insert("interior_diagonal".into(), interior_diagonal(&r.interior, l));
    c.insert("degree_bounds".into(), degree_bounds(&r.table, diam));
    c.insert("boolean_diagonality".into(), boolean_diagonality(&r.table, l, chambers));
    match inp.series {
        Some(s) => c.insert("euler_characteristic".into(), euler_characteristic(r, s)),
        None => c.insert("euler_characteristic".into(), CheckStatus::Skipped("no magnitude series".into())),
    };
    match inp.interior_series {
        Some(s) => c.insert(
            "interior_reciprocity".into(),
            interior_reciprocity(r, s, l.rank(), inp.arrangement.len()),
        ),
        None => c.insert("interior_reciprocity".into(), CheckStatus::Skipped("no magnitude series".into())),
    };
    if inp.geodesic_check {
        c.insert("geodesic".into(), geodesic(inp.graph, l, r));
    }
    if inp.face_check {
        c.insert("face_decomposition".into(), face_decomposition(inp.arrangement, l, r, inp.budget)?);
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::catalog;

    #[test]
    fn four_cuts() {
        let bl1 = TopeGraph::enumerate(&catalog::boolean(1));
        assert_eq!(four_cut_min(&bl1), None);
        let c4 = TopeGraph::enumerate(&catalog::boolean(2));
        assert_eq!(four_cut_min(&c4), Some(3));
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(2, 5), 0);
        assert_eq!(binom(0, 0), 1);
    }
}
