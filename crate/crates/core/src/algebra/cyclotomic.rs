//! Cyclotomic polynomials and extraction of cyclotomic factors.

use std::collections::BTreeMap;


use super::poly::IntPoly;

/// Euler's totient.
pub fn totient(mut n: usize) -> usize {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// The `k`-th cyclotomic polynomial, from `q^k - 1 = prod_{d | k} Phi_d`.
pub fn cyclotomic(k: usize) -> IntPoly {
    assert!(k >= 1);
    let mut p = &IntPoly::q_pow(k) - &IntPoly::one();
    for d in 1..k {
        if k % d == 0 {
            p = p.div_exact(&cyclotomic(d)).expect("cyclotomic divisor");
        }
    }
    p
}

/// Multiset of cyclotomic factors `Phi_k^m` plus the leftover cofactor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicFactorization {
    pub factors: BTreeMap<usize, u32>,
    pub remainder: IntPoly,
}

impl CyclotomicFactorization {
    /// Multiplies everything back together.
    pub fn expand(&self) -> IntPoly {
        self.factors.iter().fold(self.remainder.clone(), |acc, (&k, &m)| {
            &acc * &cyclotomic(k).pow(m)
        })
    }

    pub fn multiplicity(&self, k: usize) -> u32 {
        self.factors.get(&k).copied().unwrap_or(0)
    }

    pub fn is_fully_cyclotomic(&self) -> bool {
        self.remainder.degree() == Some(0) && self.remainder.coeff(0) == 1.into()
    }

    /// `[[k, multiplicity], ...]` in increasing `k`.
    pub fn as_pairs(&self) -> Vec<[u64; 2]> {
        self.factors.iter().map(|(&k, &m)| [k as u64, m as u64]).collect()
    }
}

/// Divides out every `Phi_k` with `phi(k) <= deg p`, with multiplicity.
pub fn cyclotomic_factor(p: &IntPoly) -> CyclotomicFactorization {
    assert!(!p.is_zero(), "cyclotomic_factor of the zero polynomial");
    let mut remainder = p.clone();
    let mut factors = BTreeMap::new();
    let deg = p.degree().unwrap();
    // phi(k) >= sqrt(k/2), so k <= 2 deg^2 covers every candidate
    let bound = (2 * deg * deg).max(2);
    for k in 1..=bound {
        let phi = totient(k);
        if phi > remainder.degree().unwrap_or(0) {
            continue;
        }
        let ck = cyclotomic(k);
        let mut mult = 0;
        while let Some(q) = remainder.div_exact(&ck) {
            remainder = q;
            mult += 1;
        }
        if mult > 0 {
            factors.insert(k, mult);
        }
    }
    CyclotomicFactorization { factors, remainder }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), p(&[-1, 1]));
        assert_eq!(cyclotomic(2), p(&[1, 1]));
        assert_eq!(cyclotomic(4), p(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic(8), p(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic(10), p(&[1, -1, 1, -1, 1]));
    }

    #[test]
    fn totients() {
        let t: Vec<usize> = (1..=12).map(totient).collect();
        assert_eq!(t, vec![1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
    }

    #[test]
    fn coxeter_rank3_denominator() {
        let d = &(&p(&[1, 1]).pow(2) * &p(&[1, 1, 1])) * &p(&[1, 0, 1]);
        let f = cyclotomic_factor(&d);
        assert_eq!(f.factors, BTreeMap::from([(2, 2), (3, 1), (4, 1)]));
        assert!(f.is_fully_cyclotomic());
        assert_eq!(f.expand(), d);
    }

    #[test]
    fn linear_and_non_cyclotomic() {
        let f = cyclotomic_factor(&p(&[-1, 1]));
        assert_eq!(f.factors, BTreeMap::from([(1, 1)]));
        assert!(f.is_fully_cyclotomic());

        let g = cyclotomic_factor(&p(&[7, -10, 7]));
        assert!(g.factors.is_empty());
        assert_eq!(g.remainder, p(&[7, -10, 7]));
    }
}
