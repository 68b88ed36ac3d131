//! Magnitude from the intersection lattice alone, by recursion over
//! localizations:
//!
//! `Mag(A_X) (1 - (-1)^{rk X} q^{#A_X}) = sum_{Y < X} c^Y_X (-1)^{rk Y} q^{#A_Y} Mag(A_Y)`
//!
//! where `c^Y_X` counts chambers of `(A_X)^Y`, i.e. faces of `A_X` with
//! support `Y`.

use crate::algebra::{IntPoly, RatFunc};
use crate::arrangement::IntersectionLattice;

/// `Mag(A_X)` for every flat `X`, indexed by flat id.
pub fn localized_magnitudes(lattice: &IntersectionLattice) -> Vec<RatFunc> {
    let nf = lattice.len();
    let mut mags: Vec<RatFunc> = Vec::with_capacity(nf);
    for x in 0..nf {
        let fx = lattice.flat(x);
        if x == 0 {
            mags.push(RatFunc::one());
            continue;
        }
        let mut sum = RatFunc::zero();
        for y in 0..x {
            if !lattice.leq(y, x) {
                continue;
            }
            let c: u64 = (y..=x)
                .filter(|&z| lattice.leq(y, z) && lattice.leq(z, x))
                .map(|z| lattice.mobius(y, z).unsigned_abs())
                .sum();
            let fy = lattice.flat(y);
            let sign = if fy.rank % 2 == 0 { 1 } else { -1 };
            let term = mags[y].scale_q_pow(fy.size());
            let coeff = RatFunc::from_int(sign * c as i64);
            sum = &sum + &(&coeff * &term);
        }
        let qn = IntPoly::q_pow(fx.size());
        let den = if fx.rank % 2 == 0 { &IntPoly::one() - &qn } else { &IntPoly::one() + &qn };
        mags.push(&sum / &RatFunc::from_poly(den));
    }
    mags
}

pub fn magnitude_by_face_decomposition(lattice: &IntersectionLattice) -> RatFunc {
    localized_magnitudes(lattice).pop().unwrap()
}

/// `Mag°(A) = (-1)^{rk A} q^{#A} Mag(A)`.
pub fn interior(mag: &RatFunc, rank: usize, n: usize) -> RatFunc {
    let m = mag.scale_q_pow(n);
    if rank % 2 == 0 {
        m
    } else {
        -m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{catalog, Arrangement};

    #[test]
    fn empty_and_boolean() {
        let empty = Arrangement::from_integers(2, &[]).unwrap();
        let l = IntersectionLattice::build(&empty);
        assert_eq!(magnitude_by_face_decomposition(&l), RatFunc::one());

        let l = IntersectionLattice::build(&catalog::boolean(2));
        let expect = RatFunc::reduce(IntPoly::from_i64(&[4]), IntPoly::from_i64(&[1, 2, 1])).unwrap();
        assert_eq!(magnitude_by_face_decomposition(&l), expect);
    }
}
