//! Determinant of the q-Varchenko matrix.

use crate::algebra::IntPoly;
use crate::arrangement::{IntersectionLattice, TopeGraph};
use crate::error::{AlgebraError, CheckFailure};

use super::solve::varchenko_matrix;

pub fn varchenko_det(g: &TopeGraph) -> Result<IntPoly, AlgebraError> {
    varchenko_matrix(g).determinant()
}

/// `prod_{X != 0} (1 - q^{2 #A_X})^{c^X beta_X}`.
pub fn det_product_formula(lattice: &IntersectionLattice) -> IntPoly {
    let mut p = IntPoly::one();
    for f in lattice.flats().iter().skip(1) {
        let e = f.c_upper * f.beta.unwrap_or(0);
        if e > 0 {
            let factor = &IntPoly::one() - &IntPoly::q_pow(2 * f.size());
            p = &p * &factor.pow(e as u32);
        }
    }
    p
}

/// Compares the eliminated determinant with the product formula.
pub fn check_varchenko_det(g: &TopeGraph, lattice: &IntersectionLattice) -> Result<IntPoly, CheckFailure> {
    let direct = varchenko_det(g).map_err(|e| CheckFailure::new("varchenko_det", e.to_string()))?;
    let formula = det_product_formula(lattice);
    if direct != formula {
        return Err(CheckFailure::new(
            "varchenko_det",
            format!("elimination gives {direct}, product formula gives {formula}"),
        ));
    }
    Ok(direct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::catalog;

    #[test]
    fn one_hyperplane() {
        let g = TopeGraph::enumerate(&catalog::boolean(1));
        assert_eq!(varchenko_det(&g).unwrap(), IntPoly::from_i64(&[1, 0, -1]));
    }

    #[test]
    fn three_lines() {
        let a = catalog::braid(3);
        let g = TopeGraph::enumerate(&a);
        let l = IntersectionLattice::build(&a);
        let one_minus = |k: usize| &IntPoly::one() - &IntPoly::q_pow(k);
        let expect = &one_minus(2).pow(6) * &one_minus(6);
        assert_eq!(check_varchenko_det(&g, &l).unwrap(), expect);
    }
}
