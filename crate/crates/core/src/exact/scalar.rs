use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::gcd::{euclid, rational_gcd};
use super::{Field, Poly, Rational, Ring};
use crate::error::{Error, Result};

/// An element `a + b·√m` of ℚ(√m), with `m` squarefree.
///
/// Canonical form: when `b == 0` the radicand is reset to `0`, so a plain
/// rational has a single representation and mixes freely with any
/// extension. Arithmetic between two scalars with distinct nonzero
/// radicands is an error; the `checked_*` methods report it and the
/// operator impls panic on it.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExactScalar {
    a: Rational,
    b: Rational,
    m: u64,
}

pub fn is_squarefree(m: u64) -> bool {
    if m == 0 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= m {
        if m % (d * d) == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Split `n = s² · r` with `r` squarefree.
fn square_split(n: &BigInt) -> (BigInt, u64) {
    let mut rest = n.to_u64().expect("radicand must fit in u64");
    let mut square = BigInt::one();
    let mut d = 2u64;
    while d * d <= rest {
        while rest % (d * d) == 0 {
            rest /= d * d;
            square *= d;
        }
        d += 1;
    }
    (square, rest)
}

fn combine(m1: u64, m2: u64) -> Result<u64> {
    match (m1, m2) {
        (0, m) | (m, 0) => Ok(m),
        (x, y) if x == y => Ok(x),
        (x, y) => Err(Error::RadicandMismatch(x, y)),
    }
}

impl ExactScalar {
    /// Build `a + b√m`; `m` may carry square factors, which are pulled out.
    pub fn new(a: Rational, b: Rational, m: u64) -> Self {
        if m == 0 || b.is_zero() {
            return Self::rational(a);
        }
        let (s, r) = square_split(&BigInt::from(m));
        let b = b * BigRational::from_integer(s);
        if r == 1 {
            return Self::rational(a + b);
        }
        Self { a, b, m: r }
    }

    pub fn rational(a: Rational) -> Self {
        Self {
            a,
            b: Rational::zero(),
            m: 0,
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::rational(Rational::from_i64(n))
    }

    /// `√q` for a non-negative rational `q`, as `√(pq)/q` with the
    /// radicand reduced.
    pub fn sqrt(q: &Rational) -> Result<Self> {
        if q.is_negative() {
            return Err(Error::NegativeRadicand(q.to_string()));
        }
        if q.is_zero() {
            return Ok(Self::zero());
        }
        let num = q.numer() * q.denom();
        let root = num.sqrt();
        if &root * &root == num {
            return Ok(Self::rational(BigRational::new(root, q.denom().clone())));
        }
        let (s, r) = square_split(&num);
        Ok(Self {
            a: Rational::zero(),
            b: BigRational::new(s, q.denom().clone()),
            m: r,
        })
    }

    /// Rational part `a`.
    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    /// Surd coefficient `b`.
    pub fn surd_part(&self) -> &Rational {
        &self.b
    }

    /// Squarefree radicand, `0` for plain rationals.
    pub fn radicand(&self) -> u64 {
        self.m
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.a.clone())
    }

    /// Galois conjugate `a − b√m`.
    pub fn conjugate(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: -self.b.clone(),
            m: self.m,
        }
    }

    /// Field norm `a² − b²m`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_i64(self.m as i64)
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        let m = combine(self.m, o.m)?;
        Ok(Self::new(&self.a + &o.a, &self.b + &o.b, m))
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self> {
        let m = combine(self.m, o.m)?;
        Ok(Self::new(&self.a - &o.a, &self.b - &o.b, m))
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        let m = combine(self.m, o.m)?;
        let mq = Rational::from_i64(m as i64);
        let a = &self.a * &o.a + &self.b * &o.b * mq;
        let b = &self.a * &o.b + &self.b * &o.a;
        Ok(Self::new(a, b, m))
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = o.norm();
        let inv = Self::new(&o.a / &n, -(&o.b / &n), o.m);
        self.checked_mul(&inv)
    }
}

impl From<Rational> for ExactScalar {
    fn from(q: Rational) -> Self {
        Self::rational(q)
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if !self.a.is_zero() {
            write!(f, "{} + ", self.a)?;
        }
        write!(f, "{}*sqrt({})", self.b, self.m)
    }
}

fn unwrap_arith(r: Result<ExactScalar>) -> ExactScalar {
    r.unwrap_or_else(|e| panic!("{e}"))
}

impl<'a> Add<&'a ExactScalar> for ExactScalar {
    type Output = ExactScalar;
    fn add(self, o: &'a ExactScalar) -> ExactScalar {
        unwrap_arith(self.checked_add(o))
    }
}

impl Add for ExactScalar {
    type Output = ExactScalar;
    fn add(self, o: ExactScalar) -> ExactScalar {
        self + &o
    }
}

impl<'a> Sub<&'a ExactScalar> for ExactScalar {
    type Output = ExactScalar;
    fn sub(self, o: &'a ExactScalar) -> ExactScalar {
        unwrap_arith(self.checked_sub(o))
    }
}

impl Sub for ExactScalar {
    type Output = ExactScalar;
    fn sub(self, o: ExactScalar) -> ExactScalar {
        self - &o
    }
}

impl<'a> Mul<&'a ExactScalar> for ExactScalar {
    type Output = ExactScalar;
    fn mul(self, o: &'a ExactScalar) -> ExactScalar {
        unwrap_arith(self.checked_mul(o))
    }
}

impl Mul for ExactScalar {
    type Output = ExactScalar;
    fn mul(self, o: ExactScalar) -> ExactScalar {
        self * &o
    }
}

impl<'a> Div<&'a ExactScalar> for ExactScalar {
    type Output = ExactScalar;
    fn div(self, o: &'a ExactScalar) -> ExactScalar {
        unwrap_arith(self.checked_div(o))
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        Self {
            a: -self.a,
            b: -self.b,
            m: self.m,
        }
    }
}

impl Zero for ExactScalar {
    fn zero() -> Self {
        Self::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for ExactScalar {
    fn one() -> Self {
        Self::rational(Rational::one())
    }
}

impl Ring for ExactScalar {
    fn from_i64(n: i64) -> Self {
        Self::from_integer(n)
    }

    fn div_exact(&self, d: &Self) -> Option<Self> {
        self.checked_div(d).ok()
    }
}

impl Field for ExactScalar {
    /// Polynomials that are a scalar multiple of a rational polynomial are
    /// handed to the fast rational gcd.
    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        if a.is_zero() || b.is_zero() {
            return if a.is_zero() { b.monic() } else { a.monic() };
        }
        match (a.monic().to_rational(), b.monic().to_rational()) {
            (Some(ar), Some(br)) => rational_gcd(&ar, &br).map(|c| Self::rational(c.clone())),
            _ => euclid(a, b),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        ratio(n, d)
    }

    #[test]
    fn square_factors_are_extracted() {
        let x = ExactScalar::new(q(0, 1), q(1, 1), 8);
        assert_eq!(x.radicand(), 2);
        assert_eq!(x.surd_part(), &q(2, 1));
        let four = ExactScalar::new(q(1, 1), q(3, 1), 4);
        assert_eq!(four, ExactScalar::from_integer(7));
    }

    #[test]
    fn sqrt_of_rationals() {
        assert_eq!(
            ExactScalar::sqrt(&q(9, 4)).unwrap(),
            ExactScalar::rational(q(3, 2))
        );
        let s = ExactScalar::sqrt(&q(1, 3)).unwrap();
        assert_eq!(s.radicand(), 3);
        assert_eq!(s.surd_part(), &q(1, 3));
        assert_eq!(s.clone() * &s, ExactScalar::rational(q(1, 3)));
        assert!(ExactScalar::sqrt(&q(-1, 1)).is_err());
    }

    #[test]
    fn mixed_radicands_are_rejected() {
        let r2 = ExactScalar::sqrt(&q(2, 1)).unwrap();
        let r3 = ExactScalar::sqrt(&q(3, 1)).unwrap();
        assert_eq!(r2.checked_add(&r3), Err(Error::RadicandMismatch(2, 3)));
        // a rational mixes with either
        assert!(r2.checked_mul(&ExactScalar::from_integer(5)).is_ok());
        // product of the same surd collapses to a rational
        assert!((r3.clone() * &r3).is_rational());
    }

    #[test]
    fn division_and_inverse() {
        let x = ExactScalar::new(q(1, 1), q(1, 1), 2);
        let inv = ExactScalar::one() / &x;
        assert_eq!(inv, ExactScalar::new(q(-1, 1), q(1, 1), 2));
        assert_eq!(
            x.checked_div(&ExactScalar::zero()),
            Err(Error::DivisionByZero)
        );
    }

    proptest! {
        #[test]
        fn conjugate_product_is_norm(an in -50i64..50, ad in 1i64..20, bn in -50i64..50, bd in 1i64..20,
                                     m in prop::sample::select(vec![2u64, 3, 5, 6, 7, 10, 11])) {
            let x = ExactScalar::new(q(an, ad), q(bn, bd), m);
            let prod = x.clone() * &x.conjugate();
            let expected = q(an, ad) * q(an, ad) - q(bn, bd) * q(bn, bd) * q(m as i64, 1);
            prop_assert_eq!(prod, ExactScalar::rational(expected));
        }
    }
}
