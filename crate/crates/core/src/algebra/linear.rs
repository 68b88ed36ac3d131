//! Fraction-free linear algebra over `Z[q]`.

use super::poly::IntPoly;
use super::ratfunc::RatFunc;
use crate::error::AlgebraError;

/// Dense square matrix of integer polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<IntPoly>,
}

impl PolyMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> IntPoly) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &IntPoly {
        &self.entries[i * self.n + j]
    }

    /// Bareiss elimination on `[M | rhs]`; returns the determinant and,
    /// when `rhs` is given, the solution as reduced rational functions.
    ///
    /// Pivots are chosen by lowest degree within the current column.
    pub fn bareiss(&self, rhs: Option<&[IntPoly]>) -> Result<(IntPoly, Option<Vec<RatFunc>>), AlgebraError> {
        let n = self.n;
        let width = n + usize::from(rhs.is_some());
        let mut a: Vec<Vec<IntPoly>> = (0..n)
            .map(|i| {
                let mut row: Vec<IntPoly> = self.entries[i * n..(i + 1) * n].to_vec();
                if let Some(b) = rhs {
                    row.push(b[i].clone());
                }
                row
            })
            .collect();
        let mut prev = IntPoly::one();
        let mut sign_flip = false;
        for k in 0..n {
            let pivot_row = (k..n)
                .filter(|&i| !a[i][k].is_zero())
                .min_by_key(|&i| (a[i][k].degree(), i))
                .ok_or(AlgebraError::Singular)?;
            if pivot_row != k {
                a.swap(pivot_row, k);
                sign_flip = !sign_flip;
            }
            let (top, bottom) = a.split_at_mut(k + 1);
            let pivot_row = &top[k];
            let pk = &pivot_row[k];
            for row in bottom.iter_mut() {
                let rk = row[k].clone();
                for j in k + 1..width {
                    let val = &(pk * &row[j]) - &(&rk * &pivot_row[j]);
                    row[j] = val.div_exact(&prev).ok_or(AlgebraError::InexactDivision)?;
                }
                row[k] = IntPoly::zero();
            }
            prev = a[k][k].clone();
        }
        let mut det = if n == 0 { IntPoly::one() } else { a[n - 1][n - 1].clone() };
        if sign_flip {
            det = -det;
        }
        let solution = match rhs {
            None => None,
            Some(_) => Some(back_substitute(&a, n)?),
        };
        Ok((det, solution))
    }

    pub fn determinant(&self) -> Result<IntPoly, AlgebraError> {
        match self.bareiss(None) {
            Ok((det, _)) => Ok(det),
            Err(AlgebraError::Singular) => Ok(IntPoly::zero()),
            Err(e) => Err(e),
        }
    }

    /// Solves `M x = rhs` exactly.
    pub fn solve(&self, rhs: &[IntPoly]) -> Result<Vec<RatFunc>, AlgebraError> {
        Ok(self.bareiss(Some(rhs))?.1.unwrap())
    }
}

/// Back substitution on an upper-triangular augmented system, carried out
/// over a common denominator (the product of pivots) and reduced once.
fn back_substitute(a: &[Vec<IntPoly>], n: usize) -> Result<Vec<RatFunc>, AlgebraError> {
    // x_i = num_i / den_i kept unreduced until the end of each row.
    let mut xs: Vec<RatFunc> = vec![RatFunc::zero(); n];
    for i in (0..n).rev() {
        let mut acc = RatFunc::from_poly(a[i][n].clone());
        for j in i + 1..n {
            if !a[i][j].is_zero() && !xs[j].is_zero() {
                acc = &acc - &(&RatFunc::from_poly(a[i][j].clone()) * &xs[j]);
            }
        }
        xs[i] = RatFunc::reduce(
            acc.num().clone(),
            &a[i][i] * acc.den(),
        )?;
    }
    Ok(xs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn two_by_two_zeta() {
        let m = PolyMatrix::from_fn(2, |i, j| if i == j { p(&[1]) } else { p(&[0, 1]) });
        assert_eq!(m.determinant().unwrap(), p(&[1, 0, -1]));
        let w = m.solve(&[p(&[1]), p(&[1])]).unwrap();
        let expect = RatFunc::reduce(p(&[1]), p(&[1, 1])).unwrap();
        assert_eq!(w, vec![expect.clone(), expect]);
    }

    #[test]
    fn singular_is_reported() {
        let m = PolyMatrix::from_fn(2, |_, _| p(&[1]));
        assert!(m.determinant().unwrap().is_zero());
        assert!(matches!(m.solve(&[p(&[1]), p(&[1])]), Err(AlgebraError::Singular)));
    }

    #[test]
    fn permutation_sign() {
        let m = PolyMatrix::from_fn(2, |i, j| if i != j { p(&[1]) } else { IntPoly::zero() });
        assert_eq!(m.determinant().unwrap(), p(&[-1]));
    }
}
