//! Exact rational simplex and strict sign feasibility.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::linalg::{combine, nullspace, primitive, pullback};
use super::Sign;

/// Maximizes `c.x` subject to `A x <= b`, `x >= 0`, with `b >= 0` so the
/// slack basis is feasible. Bland's rule on both entering and leaving
/// choices. Returns `None` when unbounded.
pub fn simplex_max(
    a: &[Vec<BigRational>],
    b: &[BigRational],
    c: &[BigRational],
) -> Option<(BigRational, Vec<BigRational>)> {
    let m = a.len();
    let nv = c.len();
    assert!(b.iter().all(|x| !x.is_negative()), "simplex_max needs b >= 0");
    let width = nv + m + 1;
    // rows 0..m constraints, row m objective (stores -c, maximizing)
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m + 1);
    for i in 0..m {
        let mut row = vec![BigRational::zero(); width];
        row[..nv].clone_from_slice(&a[i]);
        row[nv + i] = BigRational::one();
        row[width - 1] = b[i].clone();
        t.push(row);
    }
    let mut obj = vec![BigRational::zero(); width];
    for j in 0..nv {
        obj[j] = -c[j].clone();
    }
    t.push(obj);
    let mut basis: Vec<usize> = (nv..nv + m).collect();

    loop {
        let Some(enter) = (0..width - 1).find(|&j| t[m][j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let (r, _) = leave?;
        let inv = t[r][enter].recip();
        for x in t[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != r && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x = &*x - &(&f * y);
                    }
                }
            }
        }
        basis[r] = enter;
    }
    let mut x = vec![BigRational::zero(); nv];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < nv {
            x[bv] = t[i][width - 1].clone();
        }
    }
    Some((t[m][width - 1].clone(), x))
}

/// A point `x` with `sign(alpha_H . x) = sigma_H` for every `H`, as a
/// primitive integer vector, or `None` if the sign vector is not realized.
///
/// The zero entries cut out a subspace `x = B z`; on it the strict
/// inequalities are tested by maximizing a margin `t` over the box
/// `|z|_1 <= 1`, `t <= 1`.
pub fn sign_feasible(normals: &[Vec<BigInt>], dim: usize, sigma: &[Sign]) -> Option<Vec<BigInt>> {
    assert_eq!(normals.len(), sigma.len());
    let zero_rows: Vec<Vec<BigInt>> = normals
        .iter()
        .zip(sigma)
        .filter(|(_, s)| **s == Sign::Zero)
        .map(|(n, _)| n.clone())
        .collect();
    let basis = nullspace(&zero_rows, dim);
    let origin = vec![BigInt::zero(); dim];
    // restricted covectors scaled by their sign, each must be positive on z
    let mut gs: Vec<Vec<BigInt>> = Vec::new();
    for (n, s) in normals.iter().zip(sigma) {
        let g = pullback(n, &basis);
        match s {
            Sign::Zero => {
                if g.iter().any(|x| !x.is_zero()) {
                    return None;
                }
            }
            Sign::Plus | Sign::Minus => {
                if g.iter().all(|x| x.is_zero()) {
                    return None;
                }
                gs.push(if *s == Sign::Plus { g } else { g.into_iter().map(|x| -x).collect() });
            }
        }
    }
    if gs.is_empty() {
        return Some(origin);
    }
    let m = basis.len();
    if m == 1 {
        // one free direction: z > 0 or z < 0 must suit every covector
        for dir in [1i64, -1] {
            if gs.iter().all(|g| (&g[0] * dir).is_positive()) {
                let y = vec![BigInt::from(dir)];
                return Some(combine(&basis, &y, dim));
            }
        }
        return None;
    }
    // variables u_1..u_m, v_1..v_m, t
    let nv = 2 * m + 1;
    let q = |x: &BigInt| BigRational::from_integer(x.clone());
    let mut a = Vec::new();
    let mut b = Vec::new();
    for g in &gs {
        let mut row = vec![BigRational::zero(); nv];
        for j in 0..m {
            row[j] = -q(&g[j]);
            row[m + j] = q(&g[j]);
        }
        row[2 * m] = BigRational::one();
        a.push(row);
        b.push(BigRational::zero());
    }
    let mut box_row = vec![BigRational::one(); nv];
    box_row[2 * m] = BigRational::zero();
    a.push(box_row);
    b.push(BigRational::one());
    let mut t_row = vec![BigRational::zero(); nv];
    t_row[2 * m] = BigRational::one();
    a.push(t_row);
    b.push(BigRational::one());
    let mut c = vec![BigRational::zero(); nv];
    c[2 * m] = BigRational::one();

    let (opt, x) = simplex_max(&a, &b, &c).expect("bounded by construction");
    if !opt.is_positive() {
        return None;
    }
    let z: Vec<BigRational> = (0..m).map(|j| &x[j] - &x[m + j]).collect();
    let y = primitive(&z);
    Some(super::linalg::primitive_int(combine(&basis, &y, dim)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::linalg::dot;

    fn r(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    fn v(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn textbook_lp() {
        // max 3x + 2y, x + y <= 4, x + 3y <= 6, x <= 3
        let a = vec![vec![r(1), r(1)], vec![r(1), r(3)], vec![r(1), r(0)]];
        let (opt, x) = simplex_max(&a, &[r(4), r(6), r(3)], &[r(3), r(2)]).unwrap();
        assert_eq!(opt, r(11));
        assert_eq!(x, vec![r(3), r(1)]);
    }

    #[test]
    fn unbounded_lp() {
        let a = vec![vec![r(1), r(-1)]];
        assert!(simplex_max(&a, &[r(1)], &[r(0), r(1)]).is_none());
    }

    #[test]
    fn boolean_witness() {
        let normals = vec![v(&[1, 0]), v(&[0, 1])];
        let w = sign_feasible(&normals, 2, &[Sign::Plus, Sign::Plus]).unwrap();
        assert!(dot(&normals[0], &w) > BigInt::zero() && dot(&normals[1], &w) > BigInt::zero());
        let w = sign_feasible(&normals, 2, &[Sign::Minus, Sign::Zero]).unwrap();
        assert!(dot(&normals[0], &w) < BigInt::zero());
        assert_eq!(dot(&normals[1], &w), BigInt::zero());
    }

    #[test]
    fn center_and_infeasible() {
        let normals = vec![v(&[1, 0]), v(&[0, 1]), v(&[1, 1])];
        assert_eq!(sign_feasible(&normals, 2, &[Sign::Zero; 3]), Some(v(&[0, 0])));
        assert!(sign_feasible(&normals, 2, &[Sign::Plus, Sign::Plus, Sign::Minus]).is_none());
        assert!(sign_feasible(&normals, 2, &[Sign::Zero, Sign::Zero, Sign::Plus]).is_none());
        let w = sign_feasible(&normals, 2, &[Sign::Plus, Sign::Minus, Sign::Plus]).unwrap();
        assert!(dot(&normals[2], &w) > BigInt::zero());
    }
}
