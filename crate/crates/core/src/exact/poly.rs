use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{ExactScalar, Field, Ring};
use crate::error::{Error, Result};

/// Dense univariate polynomial, coefficients in ascending degree with
/// trailing zeros stripped. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c · z^n`
    pub fn monomial(c: R, n: usize) -> Self {
        let mut coeffs = vec![R::zero(); n + 1];
        coeffs[n] = c;
        Self::new(coeffs)
    }

    /// The variable `z`.
    pub fn var() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| R::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `z^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|x| R::product(x, c)).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| R::product(c, &R::from_i64(i as i64)))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |p, _| p.derivative())
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * x + c)
    }

    /// `p(c·z)`
    pub fn compose_scale(&self, c: &R) -> Self {
        let mut pow = R::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            out.push(x.clone() * &pow);
            pow = pow * c;
        }
        Self::new(out)
    }

    /// `p(−z)`
    pub fn reflect(&self) -> Self {
        self.compose_scale(&-R::one())
    }

    /// Only even powers present (the zero polynomial counts as even).
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(|c| c.is_zero())
    }

    pub fn is_odd(&self) -> bool {
        self.coeffs.iter().step_by(2).all(|c| c.is_zero())
    }

    /// For an even polynomial `p(z) = q(z²)`, return `q`.
    pub fn even_to_square(&self) -> Option<Self> {
        self.is_even()
            .then(|| Self::new(self.coeffs.iter().step_by(2).cloned().collect()))
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`
    /// in `R[z]`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.degree()? < dd {
            return None;
        }
        R::div_coeffs(&self.coeffs, &d.coeffs).map(Self::new)
    }

    /// Proportionality test: `Some((c, d))` with `d·self == c·other` and
    /// `c, d` the two leading coefficients, when the polynomials are
    /// proportional with nonzero constant.
    pub fn proportional(&self, other: &Self) -> Option<(R, R)> {
        let c = self.leading()?.clone();
        let d = other.leading()?.clone();
        if self.degree() != other.degree() {
            return None;
        }
        (self.scale(&d) == other.scale(&c)).then_some((c, d))
    }
}

impl<F: Field> Poly<F> {
    /// Euclidean division `(q, r)` with `deg r < deg d`. Panics on `d = 0`.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("polynomial division by zero");
        let Some(n) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if n < dd {
            return (Self::zero(), self.clone());
        }
        let inv_lead = F::one() / d.leading().expect("nonzero");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![F::zero(); n - dd + 1];
        for i in (0..=n - dd).rev() {
            let top = rem[i + dd].clone();
            if top.is_zero() {
                continue;
            }
            let q = top * &inv_lead;
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - &(q.clone() * dc);
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let inv = F::one() / l;
                self.scale(&inv)
            }
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        F::poly_gcd(self, other)
    }
}

impl Poly<ExactScalar> {
    /// The common radicand of all coefficients (0 if all are rational).
    pub fn radicand(&self) -> Result<u64> {
        let mut m = 0;
        for c in &self.coeffs {
            match (m, c.radicand()) {
                (_, 0) => {}
                (0, r) => m = r,
                (x, r) if x == r => {}
                (x, r) => return Err(Error::RadicandMismatch(x, r)),
            }
        }
        Ok(m)
    }

    /// Drop to ℚ when no coefficient carries a surd.
    pub fn to_rational(&self) -> Option<Poly<super::Rational>> {
        self.coeffs
            .iter()
            .map(|c| c.to_rational())
            .collect::<Option<Vec<_>>>()
            .map(Poly::new)
    }
}

impl<R: Ring> Zero for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for Poly<R> {
    fn one() -> Self {
        Poly::one()
    }
}

impl<'a, R: Ring> Add<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn add(self, o: &'a Poly<R>) -> Poly<R> {
        let (long, short) = if self.coeffs.len() >= o.coeffs.len() {
            (self, o)
        } else {
            (o, self)
        };
        let mut out = long.coeffs.clone();
        for (x, y) in out.iter_mut().zip(&short.coeffs) {
            *x = R::sum(x, y);
        }
        Poly::new(out)
    }
}

impl<'a, R: Ring> Sub<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn sub(self, o: &'a Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| R::difference(&self.coeff(i), &o.coeff(i))).collect())
    }
}

impl<'a, R: Ring> Mul<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn mul(self, o: &'a Poly<R>) -> Poly<R> {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        Poly::new(R::mul_coeffs(&self.coeffs, &o.coeffs))
    }
}

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<R: Ring> $tr<Poly<R>> for Poly<R> {
            type Output = Poly<R>;
            fn $m(self, o: Poly<R>) -> Poly<R> {
                (&self).$m(&o)
            }
        }
        impl<'a, R: Ring> $tr<&'a Poly<R>> for Poly<R> {
            type Output = Poly<R>;
            fn $m(self, o: &'a Poly<R>) -> Poly<R> {
                (&self).$m(o)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Binary operation selector for [`poly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Checked arithmetic on extension-field polynomials: both operands must
/// share a radicand or be plain rational.
pub fn poly_arith(
    p: &Poly<ExactScalar>,
    q: &Poly<ExactScalar>,
    op: PolyOp,
) -> Result<Poly<ExactScalar>> {
    let (mp, mq) = (p.radicand()?, q.radicand()?);
    if mp != 0 && mq != 0 && mp != mq {
        return Err(Error::RadicandMismatch(mp, mq));
    }
    Ok(match op {
        PolyOp::Add => p + q,
        PolyOp::Sub => p - q,
        PolyOp::Mul => p * q,
    })
}

impl<R: Ring + fmt::Display> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) if !rest.contains(' ') => (true, rest.to_string()),
                _ => (false, s),
            };
            let body = if body.contains(' ') {
                format!("({body})")
            } else {
                body
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = body == "1";
            match i {
                0 => write!(f, "{body}")?,
                1 if unit => write!(f, "z")?,
                1 => write!(f, "{body}z")?,
                _ if unit => write!(f, "z^{i}")?,
                _ => write!(f, "{body}z^{i}")?,
            }
        }
        Ok(())
    }
}
