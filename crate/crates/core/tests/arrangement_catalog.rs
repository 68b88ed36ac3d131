use std::collections::BTreeMap;

use magarr_core::algebra::IntPoly;
use magarr_core::arrangement::faces::gate_identity_violation;
use magarr_core::arrangement::{catalog, tits_product, FaceLattice, IntersectionLattice, TopeGraph};
use num_bigint::BigInt;

fn chi_at_minus_one(p: &IntPoly) -> u64 {
    let v = p.eval_i64(-1);
    let v: i64 = v.try_into().unwrap();
    v.unsigned_abs()
}

#[test]
fn chamber_counts_match_zaslavsky_and_known_values() {
    let expected = [
        ("boolean:1", 2),
        ("boolean:2", 4),
        ("boolean:3", 8),
        ("boolean:4", 16),
        ("braid:3", 6),
        ("braid:4", 24),
        ("coxeter:B2", 8),
        ("coxeter:B3", 48),
        ("u34", 14),
        ("u45", 30),
        ("k4me", 18),
        ("k5me", 96),
        ("bracelet", 102),
        ("nearpencil:4", 12),
        ("nearpencil:5", 16),
    ];
    for (name, count) in expected {
        let a = catalog::resolve(name).unwrap();
        let g = TopeGraph::enumerate(&a);
        let l = IntersectionLattice::build(&a);
        assert_eq!(g.len(), count, "{name}");
        assert_eq!(chi_at_minus_one(&l.characteristic_polynomial()), count as u64, "{name}");
        assert_eq!(l.bottom().c_upper, count as u64, "{name}");
        for x in 0..l.len() {
            assert_eq!(l.c_upper_mobius(x), l.flat(x).c_upper, "{name} flat {x}");
            let loc = l.localize(&a, l.flat(x).hyperplanes).unwrap();
            assert_eq!(TopeGraph::enumerate(&loc).len() as u64, l.flat(x).c_lower, "{name} flat {x}");
        }
        assert!(g.antipodal_ok(), "{name}");
        let r = a.rank();
        assert!((0..g.len()).all(|i| g.degree(i) >= r), "{name}");
    }
}

#[test]
fn braid_a4_has_120_chambers() {
    let a = catalog::braid(5);
    assert_eq!(TopeGraph::enumerate(&a).len(), 120);
}

#[test]
fn braid_rank_two_flat_statistics() {
    let a = catalog::braid(4);
    let l = IntersectionLattice::build(&a);
    assert_eq!(l.rank2_counts(), BTreeMap::from([(2, 6), (3, 8)]));
    for f in l.of_rank(2) {
        assert_eq!(f.c_upper, 2);
        assert_eq!(f.beta, Some(f.size() as u64 - 2));
    }
    for f in l.of_rank(1) {
        assert_eq!(l.restrict(&a, f.hyperplanes).unwrap().arrangement.len(), 3);
        assert_eq!(f.c_upper, 6);
    }
    let e = a.essentialize();
    assert_eq!(e.dim(), 3);
    let le = IntersectionLattice::build(&e);
    let masks = |l: &IntersectionLattice| l.flats().iter().map(|f| (f.rank, f.hyperplanes)).collect::<Vec<_>>();
    assert_eq!(masks(&l), masks(&le));
    assert_eq!(TopeGraph::enumerate(&e).chambers(), TopeGraph::enumerate(&a).chambers());
}

#[test]
fn rank_three_pairs_meet_once() {
    for name in ["braid:4", "coxeter:B3", "u34", "k4me", "nearpencil:5"] {
        let a = catalog::resolve(name).unwrap().essentialize();
        let l = IntersectionLattice::build(&a);
        let n = a.len();
        let pairs: usize = l.of_rank(2).map(|f| f.size() * (f.size() - 1) / 2).sum();
        assert_eq!(pairs, n * (n - 1) / 2, "{name}");
    }
}

#[test]
fn isometry_and_gates_on_small_fixtures() {
    for name in ["boolean:3", "braid:3", "braid:4", "coxeter:B2", "u34", "k4me", "nearpencil:4"] {
        let a = catalog::resolve(name).unwrap();
        let g = TopeGraph::enumerate(&a);
        assert!(g.is_isometric(), "{name}");
        let l = IntersectionLattice::build(&a);
        let faces = FaceLattice::build(&a, &l);
        assert_eq!(faces.len() as u64, l.face_count(), "{name}");
        assert!(gate_identity_violation(&g, &faces).is_none(), "{name}");
        for (_, f) in faces.iter() {
            assert_eq!(a.sign_feasible(f).map(|w| a.sign_vector(&w)), Some(f.clone()));
            assert_eq!(tits_product(f, f), *f);
            for (_, h) in faces.iter() {
                let fg = tits_product(f, h);
                assert_eq!(tits_product(f, &fg), fg);
            }
        }
    }
}

#[test]
fn boolean_and_hexagon_degrees_are_minimal() {
    for name in ["boolean:3", "braid:3"] {
        let a = catalog::resolve(name).unwrap();
        let g = TopeGraph::enumerate(&a);
        assert!((0..g.len()).all(|i| g.degree(i) == a.rank()));
    }
    let w = TopeGraph::enumerate(&catalog::boolean(2));
    assert_eq!(w.witness(0).len(), 2);
    assert!(w.witness(0).iter().all(|x| *x != BigInt::from(0)));
}
