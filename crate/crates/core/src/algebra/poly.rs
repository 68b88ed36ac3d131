//! Dense univariate polynomials over the integers.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Integer polynomial in `q`, coefficients stored in ascending degree.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl From<Vec<BigInt>> for IntPoly {
    fn from(coeffs: Vec<BigInt>) -> Self {
        IntPoly::new(coeffs)
    }
}

impl From<IntPoly> for Vec<BigInt> {
    fn from(p: IntPoly) -> Self {
        p.coeffs
    }
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// `c * q^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    /// `q^k`
    pub fn q_pow(k: usize) -> Self {
        IntPoly::monomial(BigInt::one(), k)
    }

    /// The q-number `[n]_q = 1 + q + ... + q^{n-1}`.
    pub fn q_number(n: usize) -> Self {
        IntPoly::new(vec![BigInt::one(); n])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Lowest power of `q` with nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// gcd of all coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        self.div_scalar_exact(&g)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Exact division by a scalar; panics in debug builds if inexact.
    pub fn div_scalar_exact(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|a| {
                    debug_assert!((a % c).is_zero());
                    a / c
                })
                .collect(),
        )
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// `q^deg p(1/q)`: the coefficient sequence reversed.
    pub fn reversed(&self) -> IntPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        IntPoly::new(coeffs)
    }

    /// True iff the coefficient sequence reads the same backwards.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        let mut result = IntPoly::one();
        for _ in 0..e {
            result = &result * self;
        }
        result
    }

    /// Truncation modulo `q^n`.
    pub fn truncate(&self, n: usize) -> IntPoly {
        IntPoly::new(self.coeffs.iter().take(n).cloned().collect())
    }

    /// Division with remainder; `None` unless the divisor's leading
    /// coefficient divides every quotient step exactly.
    pub fn div_rem_exact(&self, divisor: &IntPoly) -> Option<(IntPoly, IntPoly)> {
        let dd = divisor.degree()?;
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((IntPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * dc;
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        Some((IntPoly::new(quot), IntPoly::new(rem)))
    }

    /// Exact quotient when `divisor` divides `self` in `Z[q]`.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        match self.div_rem_exact(divisor) {
            Some((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        let dd = divisor.degree().expect("pseudo_rem by zero polynomial");
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        while rem.len() > dd {
            let top = rem.pop().unwrap();
            let shift = rem.len() - dd;
            for c in rem.iter_mut() {
                *c *= &lead;
            }
            if !top.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate().take(dd) {
                    rem[shift + j] -= &top * dc;
                }
            }
            while rem.last().is_some_and(|c| c.is_zero()) && rem.len() > dd {
                rem.pop();
            }
        }
        IntPoly::new(rem)
    }

    /// Greatest common divisor in `Z[q]`, normalized to positive leading
    /// coefficient. Uses the primitive pseudo-remainder sequence.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let content = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&content)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntPoly {
    /// Human form, highest degree first: `3q^2 - q + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (k, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{abs}q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{abs}q^{k}")?,
            }
        }
        Ok(())
    }
}

impl PartialOrd for IntPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IntPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        IntPoly::new(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: &IntPoly) -> IntPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

/// Expanded product of q-numbers `[n_1]_q [n_2]_q ...`.
pub fn q_number_product(ns: &[usize]) -> IntPoly {
    ns.iter()
        .fold(IntPoly::one(), |acc, &n| &acc * &IntPoly::q_number(n))
}
