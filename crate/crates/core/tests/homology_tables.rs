use std::time::Instant;

use magarr_core::arrangement::{catalog, IntersectionLattice, TopeGraph};
use magarr_core::golden;
use magarr_core::homology::{magnitude_homology, HomologyOptions};

fn check(name: &str) {
    check_with(name, magarr_core::homology::DEFAULT_BUDGET);
}

fn check_with(name: &str, budget: u64) {
    let t = Instant::now();
    let gt = golden::find(name).unwrap();
    let a = catalog::resolve(gt.source.unwrap()).unwrap();
    let g = TopeGraph::enumerate(&a);
    let l = IntersectionLattice::build(&a);
    let mut opts = HomologyOptions::new(gt.max_length);
    opts.check_d2 = true;
    opts.budget = budget;
    let r = magnitude_homology(&g, &l, &opts).unwrap();
    assert!(r.d2_ok, "{name}");
    assert!(r.table.is_torsion_free(), "{name}: {:?}", r.table.torsion_cells());
    assert_eq!(r.table.ranks(), gt.table().ranks(), "{name}\n{}", r.table.to_tsv());
    assert_eq!(r.chain_counts, r.block_counts, "{name}");
    eprintln!("{name}: {:?}", t.elapsed());
}

#[test]
fn small_rank_two() {
    for name in ["bl2", "a2", "b2"] {
        check(name);
    }
}

#[test]
fn a3() {
    check("a3");
}

#[test]
fn u34_and_k4me() {
    check("u34");
    check("k4me");
}

#[test]
fn a4_u45() {
    check("u45");
    check("a4");
}

#[test]
fn a91() {
    check_with("a9_1", 20_000_000);
}
