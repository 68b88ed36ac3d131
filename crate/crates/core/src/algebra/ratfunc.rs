//! Reduced rational functions in one variable and their power-series expansion.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::IntPoly;
use crate::error::AlgebraError;

/// A fraction `num / den` of integer polynomials in lowest terms.
///
/// Canonical form: no common polynomial factor, the combined content of
/// numerator and denominator is 1, and the denominator's leading
/// coefficient is positive.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    /// Reduces `num / den` to canonical form.
    pub fn reduce(num: IntPoly, den: IntPoly) -> Result<RatFunc, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let g = num.primitive_part().gcd(&den.primitive_part());
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        let mut c = num.content().gcd(&den.content());
        if den.leading().is_negative() {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_scalar_exact(&c);
            den = den.div_scalar_exact(&c);
        }
        Ok(RatFunc { num, den })
    }

    pub(crate) fn reduce_unchecked(num: IntPoly, den: IntPoly) -> RatFunc {
        RatFunc::reduce(num, den).expect("nonzero denominator")
    }

    pub fn zero() -> RatFunc {
        RatFunc {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> RatFunc {
        RatFunc::from_poly(IntPoly::one())
    }

    pub fn from_poly(p: IntPoly) -> RatFunc {
        RatFunc {
            num: p,
            den: IntPoly::one(),
        }
    }

    pub fn from_int(c: i64) -> RatFunc {
        RatFunc::from_poly(IntPoly::from_i64(&[c]))
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Value at an integer point; `None` when the denominator vanishes there.
    pub fn eval_i64(&self, x: i64) -> Option<BigRational> {
        let d = self.den.eval_i64(x);
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(self.num.eval_i64(x), d))
    }

    /// `q^shift * f(1/q)` in reduced form.
    pub fn reverse_substitute(&self, shift: usize) -> RatFunc {
        if self.is_zero() {
            return RatFunc::zero();
        }
        // f(1/q) = q^{dd-dn} * rev(num) / rev(den) with dn, dd the degrees
        let dn = self.num.degree().unwrap();
        let dd = self.den.degree().unwrap();
        let total = shift as i64 + dd as i64 - dn as i64;
        let (mut num, mut den) = (self.num.reversed(), self.den.reversed());
        if total >= 0 {
            num = num.shift(total as usize);
        } else {
            den = den.shift((-total) as usize);
        }
        RatFunc::reduce_unchecked(num, den)
    }

    pub fn scale_q_pow(&self, k: usize) -> RatFunc {
        RatFunc::reduce_unchecked(self.num.shift(k), self.den.clone())
    }

    pub fn inv(&self) -> Result<RatFunc, AlgebraError> {
        RatFunc::reduce(self.den.clone(), self.num.clone())
    }

    /// First `order + 1` coefficients of the expansion at `q = 0`.
    pub fn series(&self, order: usize) -> Result<PowerSeriesPrefix, AlgebraError> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(AlgebraError::PoleAtZero);
        }
        let mut out: Vec<BigRational> = Vec::with_capacity(order + 1);
        let d0r = BigRational::from_integer(d0.clone());
        for l in 0..=order {
            let mut acc = BigRational::from_integer(self.num.coeff(l));
            for j in 1..=l.min(self.den.degree().unwrap_or(0)) {
                let dj = self.den.coeff(j);
                if !dj.is_zero() {
                    acc -= &out[l - j] * BigRational::from_integer(dj);
                }
            }
            out.push(acc / &d0r);
        }
        Ok(PowerSeriesPrefix::from_rationals(out))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::reduce_unchecked(&self.num + &rhs.num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        let a = rhs.den.div_exact(&g).unwrap();
        let b = self.den.div_exact(&g).unwrap();
        RatFunc::reduce_unchecked(&(&self.num * &a) + &(&rhs.num * &b), &self.den * &a)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::reduce_unchecked(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        RatFunc::reduce_unchecked(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

/// Truncated power series `c_0 + c_1 q + ... + c_L q^L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeriesPrefix {
    coefficients: Vec<BigRational>,
}

impl PowerSeriesPrefix {
    pub fn from_rationals(coefficients: Vec<BigRational>) -> Self {
        PowerSeriesPrefix { coefficients }
    }

    pub fn from_integers(coefficients: Vec<BigInt>) -> Self {
        PowerSeriesPrefix {
            coefficients: coefficients.into_iter().map(BigRational::from_integer).collect(),
        }
    }

    /// Highest stored index `L`.
    pub fn order(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn rationals(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn is_integral(&self) -> bool {
        self.coefficients.iter().all(|c| c.is_integer())
    }

    /// Integer coefficients, or `None` if any coefficient is fractional.
    pub fn integers(&self) -> Option<Vec<BigInt>> {
        self.coefficients
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Integer coefficients; panics if the series is not integral.
    pub fn to_i128(&self) -> Vec<i128> {
        self.integers()
            .expect("integral series")
            .iter()
            .map(|c| i128::try_from(c).expect("coefficient fits in i128"))
            .collect()
    }

    pub fn coeff(&self, l: usize) -> Option<&BigRational> {
        self.coefficients.get(l)
    }
}

/// Rational reconstruction: finds `p/q` with `q(0) = 1`, `deg p < bound`,
/// `deg q <= len - bound` agreeing with `series` modulo `q^len`.
///
/// Runs the extended Euclidean algorithm on `(q^len, s)` over the rationals.
pub fn pade(series: &[BigInt], num_bound: usize) -> Option<RatFunc> {
    let n = series.len();
    if n == 0 {
        return Some(RatFunc::zero());
    }
    let to_q = |v: &[BigInt]| -> Vec<BigRational> {
        let mut v: Vec<BigRational> = v.iter().cloned().map(BigRational::from_integer).collect();
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        v
    };
    let mut modulus = vec![BigInt::zero(); n + 1];
    modulus[n] = BigInt::one();
    let (mut r0, mut r1) = (to_q(&modulus), to_q(series));
    let (mut t0, mut t1): (Vec<BigRational>, Vec<BigRational>) =
        (Vec::new(), vec![BigRational::one()]);
    while r1.len() > num_bound {
        let (quot, rem) = qpoly_div_rem(&r0, &r1);
        let t2 = qpoly_sub(&t0, &qpoly_mul(&quot, &t1));
        r0 = std::mem::replace(&mut r1, rem);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_empty() || t1[0].is_zero() {
        return None;
    }
    let scale = lcm_den(&r1).lcm(&lcm_den(&t1));
    Some(RatFunc::reduce_unchecked(
        scaled_to_int(&r1, &scale),
        scaled_to_int(&t1, &scale),
    ))
}

fn lcm_den(v: &[BigRational]) -> BigInt {
    v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

fn scaled_to_int(v: &[BigRational], scale: &BigInt) -> IntPoly {
    let s = BigRational::from_integer(scale.clone());
    IntPoly::new(v.iter().map(|c| (c * &s).to_integer()).collect())
}

fn qpoly_trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn qpoly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let z = BigRational::zero();
    qpoly_trim((0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect())
}

fn qpoly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    qpoly_trim(out)
}

fn qpoly_div_rem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    let lead = &b[db];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + db] / lead;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &c * bj;
        }
        quot[i] = c;
    }
    rem.truncate(db);
    (qpoly_trim(quot), qpoly_trim(rem))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn reduce_cancels_common_factor() {
        let f = RatFunc::reduce(p(&[-1, 0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!(f.num(), &p(&[1, 1]));
        assert_eq!(f.den(), &p(&[1]));
    }

    #[test]
    fn reduce_removes_content() {
        let f = RatFunc::reduce(p(&[48]), p(&[2, 2])).unwrap();
        assert_eq!(f.num(), &p(&[24]));
        assert_eq!(f.den(), &p(&[1, 1]));
    }

    #[test]
    fn reduce_rejects_zero_denominator() {
        assert!(matches!(
            RatFunc::reduce(p(&[1]), IntPoly::zero()),
            Err(AlgebraError::ZeroDenominator)
        ));
    }

    #[test]
    fn reduce_makes_denominator_leading_positive() {
        let f = RatFunc::reduce(p(&[1]), p(&[1, -1])).unwrap();
        assert_eq!(f.num(), &p(&[-1]));
        assert_eq!(f.den(), &p(&[-1, 1]));
    }

    #[test]
    fn geometric_series() {
        let f = RatFunc::reduce(p(&[1]), p(&[1, 1])).unwrap();
        let s = f.series(3).unwrap();
        assert_eq!(s.to_i128(), vec![1, -1, 1, -1]);
    }

    #[test]
    fn series_rejects_pole_at_zero() {
        let f = RatFunc::reduce(p(&[1]), p(&[0, 1])).unwrap();
        assert!(matches!(f.series(2), Err(AlgebraError::PoleAtZero)));
    }

    #[test]
    fn series_reports_non_integral() {
        let f = RatFunc::reduce(p(&[1]), p(&[2, 1])).unwrap();
        let s = f.series(2).unwrap();
        assert!(!s.is_integral());
    }

    #[test]
    fn reverse_substitution() {
        let f = RatFunc::reduce(p(&[2]), p(&[1, 1])).unwrap();
        let g = f.reverse_substitute(1);
        assert_eq!(g, RatFunc::reduce(p(&[0, 0, 2]), p(&[1, 1])).unwrap());
        assert_eq!(RatFunc::one().reverse_substitute(0), RatFunc::one());
    }

    #[test]
    fn pade_recovers_geometric() {
        let f = RatFunc::reduce(p(&[24]), p(&[1, 3, 5, 6, 5, 3, 1])).unwrap();
        let s = f.series(20).unwrap().integers().unwrap();
        assert_eq!(pade(&s, 10), Some(f));
    }

    #[test]
    fn arithmetic_round_trip() {
        let a = RatFunc::reduce(p(&[1]), p(&[1, 1])).unwrap();
        let b = RatFunc::reduce(p(&[0, 1]), p(&[1, 1])).unwrap();
        assert_eq!(&a + &b, RatFunc::one());
        assert_eq!(&(&a * &b) / &b, a);
    }
}
