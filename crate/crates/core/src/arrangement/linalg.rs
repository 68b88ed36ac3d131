//! Small dense linear algebra over Q for normals, flats and witnesses.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type QMatrix = Vec<Vec<BigRational>>;

pub fn to_rational(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().map(|x| BigRational::from_integer(x.clone())).collect()
}

/// Reduced row echelon form; returns the nonzero rows and their pivot columns.
pub fn rref(mut m: QMatrix, cols: usize) -> (QMatrix, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[row].clone();
        for (i, r) in m.iter_mut().enumerate() {
            if i != row && !r[col].is_zero() {
                let f = r[col].clone();
                for (x, y) in r.iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.truncate(row);
    (m, pivots)
}

pub fn rank(rows: &[Vec<BigInt>], cols: usize) -> usize {
    rref(rows.iter().map(|r| to_rational(r)).collect(), cols).1.len()
}

/// Basis of `{x : r.x = 0 for every row r}` as primitive integer vectors.
pub fn nullspace(rows: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    let (r, pivots) = rref(rows.iter().map(|r| to_rational(r)).collect(), cols);
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![BigRational::zero(); cols];
        v[free] = BigRational::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -r[i][free].clone();
        }
        basis.push(primitive(&v));
    }
    basis
}

/// Positive multiple of `v` with coprime integer entries (zero stays zero).
pub fn primitive(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    primitive_int(ints)
}

pub fn primitive_int(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
    v
}

/// `v` scaled so the first nonzero entry is positive; used to compare lines.
pub fn orient(mut v: Vec<BigInt>) -> Vec<BigInt> {
    if v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in v.iter_mut() {
            *x = -&*x;
        }
    }
    v
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `B y` where the columns of `B` are the given basis vectors.
pub fn combine(basis: &[Vec<BigInt>], y: &[BigInt], dim: usize) -> Vec<BigInt> {
    let mut x = vec![BigInt::zero(); dim];
    for (b, c) in basis.iter().zip(y) {
        for (xi, bi) in x.iter_mut().zip(b) {
            *xi += bi * c;
        }
    }
    x
}

/// Covector `alpha` pulled back along `B`: `(alpha . b_1, ..., alpha . b_m)`.
pub fn pullback(alpha: &[BigInt], basis: &[Vec<BigInt>]) -> Vec<BigInt> {
    basis.iter().map(|b| dot(alpha, b)).collect()
}

/// Whether two nonzero vectors are scalar multiples of each other.
pub fn proportional(a: &[BigInt], b: &[BigInt]) -> bool {
    let Some(i) = a.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    if b[i].is_zero() {
        return false;
    }
    a.iter().zip(b).all(|(x, y)| x * &b[i] == y * &a[i])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn nullspace_of_braid_row() {
        let ns = nullspace(&[v(&[1, -1, 0])], 3);
        assert_eq!(ns.len(), 2);
        for b in &ns {
            assert_eq!(dot(&v(&[1, -1, 0]), b), BigInt::zero());
        }
        assert_eq!(rank(&[v(&[1, 2]), v(&[2, 4])], 2), 1);
        assert_eq!(nullspace(&[], 2).len(), 2);
    }

    #[test]
    fn primitive_and_proportional() {
        let r = vec![
            BigRational::new(1.into(), 2.into()),
            BigRational::new((-3).into(), 4.into()),
        ];
        assert_eq!(primitive(&r), v(&[2, -3]));
        assert!(proportional(&v(&[2, -4]), &v(&[-1, 2])));
        assert!(!proportional(&v(&[1, 0]), &v(&[1, 1])));
        assert_eq!(orient(v(&[0, -2, 1])), v(&[0, 2, -1]));
    }
}
