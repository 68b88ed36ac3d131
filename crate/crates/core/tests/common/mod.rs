//! Random small arrangements and the per-instance checks shared by the
//! property suite and the acceptance run.
#![allow(dead_code)]

use std::collections::HashSet;

use magarr_core::arrangement::faces::gate_identity_violation;
use magarr_core::arrangement::{tits_product, Arrangement, FaceLattice, IntersectionLattice, Sign, SignVector, TopeGraph};
use magarr_core::homology::{magnitude_homology, HomologyOptions};
use magarr_core::magnitude::{magnitude_direct, SolveStrategy};
use num_bigint::BigInt;

/// Drops zero rows and rows parallel to an earlier one.
pub fn dedupe(rows: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    let mut kept: Vec<Vec<i64>> = Vec::new();
    for r in rows {
        if r.iter().all(|&x| x == 0) {
            continue;
        }
        let parallel = kept.iter().any(|k| {
            // cross product vanishes
            let c = [k[1] * r[2] - k[2] * r[1], k[2] * r[0] - k[0] * r[2], k[0] * r[1] - k[1] * r[0]];
            c == [0, 0, 0]
        });
        if !parallel {
            kept.push(r);
        }
    }
    kept
}

/// Brute force: every sign vector in `{+,-}^n` tested for strict feasibility.
pub fn brute_force_chambers(a: &Arrangement) -> usize {
    (0u64..1 << a.len())
        .filter(|&m| {
            let sv = SignVector((0..a.len()).map(|i| if m >> i & 1 == 1 { Sign::Minus } else { Sign::Plus }).collect());
            a.sign_feasible(&sv).is_some()
        })
        .count()
}

pub fn zaslavsky(a: &Arrangement) {
    let g = TopeGraph::enumerate(a);
    let l = IntersectionLattice::build(a);
    let sum_mu: u64 = l.flats().iter().map(|f| f.mobius.unsigned_abs()).sum();
    assert_eq!(g.len() as u64, sum_mu);
    assert_eq!(g.len(), brute_force_chambers(a));
}

pub fn partial_cube_and_antipodes(a: &Arrangement) {
    let g = TopeGraph::enumerate(a);
    assert!(g.is_isometric());
    for c in 0..g.len() {
        let d = g.antipode(c);
        assert_eq!(g.antipode(d), c);
        assert_eq!(g.distance(c, d), a.len());
    }
}

pub fn gates_and_tits_laws(a: &Arrangement) {
    let g = TopeGraph::enumerate(a);
    let l = IntersectionLattice::build(a);
    let faces = FaceLattice::build(a, &l);
    assert!(gate_identity_violation(&g, &faces).is_none());
    let all: Vec<&SignVector> = faces.iter().map(|(_, f)| f).collect();
    let set: HashSet<&SignVector> = all.iter().copied().collect();
    for f in &all {
        assert_eq!(&tits_product(f, f), *f);
        assert_eq!(&tits_product(f, &f.negated()), *f);
        for h in &all {
            let fh = tits_product(f, h);
            assert!(set.contains(&fh));
            assert_eq!(tits_product(&fh, f), fh);
        }
    }
    for f in all.iter().step_by(3) {
        for h in all.iter().step_by(2) {
            for k in all.iter().step_by(5) {
                assert_eq!(tits_product(&tits_product(f, h), k), tits_product(f, &tits_product(h, k)));
            }
        }
    }
}

/// Raw chain counts, the Betti table and the series agree through `lmax`.
pub fn chains_euler_and_series(a: &Arrangement, lmax: usize) {
    let g = TopeGraph::enumerate(a);
    let l = IntersectionLattice::build(a);
    let h = magnitude_homology(&g, &l, &HomologyOptions::new(lmax)).unwrap();
    let m = magnitude_direct(a, &g, lmax, SolveStrategy::Auto).unwrap();
    let series: Vec<BigInt> = m.series.integers().unwrap();
    let chi = h.table.euler_row();
    for ell in 0..=lmax {
        let raw: i64 = h
            .chain_counts
            .iter()
            .filter(|(&(_, ll), _)| ll == ell)
            .map(|(&(k, _), &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum();
        assert_eq!(raw, chi[ell], "l = {ell}");
        assert_eq!(BigInt::from(chi[ell]), series[ell], "l = {ell}");
    }
}
