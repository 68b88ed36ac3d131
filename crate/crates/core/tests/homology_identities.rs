use magarr_core::arrangement::{catalog, Arrangement, IntersectionLattice, TopeGraph};
use magarr_core::homology::checks::{four_cut_min, kunneth_ranks, shifted_interior_pairs};
use magarr_core::homology::{magnitude_homology, run_checks, CheckInputs, CheckStatus, HomologyOptions, DEFAULT_BUDGET};
use magarr_core::magnitude::{magnitude_direct, SolveStrategy};

fn run(name: &str, lmax: usize) {
    let a = catalog::resolve(name).unwrap();
    let g = TopeGraph::enumerate(&a);
    let l = IntersectionLattice::build(&a);
    let mut opts = HomologyOptions::new(lmax);
    opts.check_d2 = true;
    let r = magnitude_homology(&g, &l, &opts).unwrap();
    let m = magnitude_direct(&a, &g, lmax, SolveStrategy::Auto).unwrap();
    let checks = run_checks(&CheckInputs {
        arrangement: &a,
        graph: &g,
        lattice: &l,
        result: &r,
        series: Some(&m.series),
        interior_series: Some(&m.interior_series),
        face_check: true,
        geodesic_check: true,
        budget: DEFAULT_BUDGET,
    })
    .unwrap();
    for (k, v) in &checks {
        assert_eq!(v, &CheckStatus::Pass, "{name}: {k}");
    }
}

#[test]
fn rank_two() {
    run("braid:3", 8);
    run("boolean:2", 8);
}

#[test]
fn boolean_three() {
    run("boolean:3", 6);
}

#[test]
fn u34() {
    run("u34", 6);
}

#[test]
fn a3() {
    run("braid:4", 7);
}

#[test]
fn interior_boolean_values() {
    let a = catalog::boolean(3);
    let g = TopeGraph::enumerate(&a);
    let l = IntersectionLattice::build(&a);
    let r = magnitude_homology(&g, &l, &HomologyOptions::new(5)).unwrap();
    // 2^3 C(l-1, 2)
    let diag: Vec<u64> = (1..=5).map(|l| r.interior.beta(l, l)).collect();
    assert_eq!(diag, vec![0, 0, 8, 24, 48]);
}

#[test]
fn kunneth_on_boolean_sum() {
    let bl1 = catalog::boolean(1);
    let bl2 = catalog::boolean(2);
    let sum = Arrangement::direct_sum(&bl1, &bl2);
    let table = |a: &Arrangement| {
        let g = TopeGraph::enumerate(a);
        let l = IntersectionLattice::build(a);
        magnitude_homology(&g, &l, &HomologyOptions::new(5)).unwrap().table
    };
    let (t1, t2, t) = (table(&bl1), table(&bl2), table(&sum));
    assert_eq!(t.ranks(), kunneth_ranks(&t1, &t2).ranks());
}

#[test]
fn hexagon_four_cut() {
    let g = TopeGraph::enumerate(&catalog::braid(3));
    // brute force over all proper 3-chains
    let n = g.len();
    let mut best = None::<usize>;
    for x0 in 0..n {
        for x1 in 0..n {
            for x2 in 0..n {
                for x3 in 0..n {
                    if x0 == x1 || x1 == x2 || x2 == x3 {
                        continue;
                    }
                    let d = |a, b| g.distance(a, b);
                    let len = d(x0, x1) + d(x1, x2) + d(x2, x3);
                    if d(x0, x1) + d(x1, x2) == d(x0, x2) && d(x1, x2) + d(x2, x3) == d(x1, x3) && len != d(x0, x3) {
                        best = Some(best.map_or(len, |b: usize| b.min(len)));
                    }
                }
            }
        }
    }
    assert_eq!(four_cut_min(&g), best);
    assert!(best.unwrap() >= 3);
}

#[test]
fn shifted_pairs_reported() {
    let a = catalog::braid(3);
    let g = TopeGraph::enumerate(&a);
    let l = IntersectionLattice::build(&a);
    let r = magnitude_homology(&g, &l, &HomologyOptions::new(6)).unwrap();
    let pairs = shifted_interior_pairs(&r, 2, 3);
    assert!(pairs.iter().any(|&(k, l, _, _)| (k, l) == (0, 0)));
}
