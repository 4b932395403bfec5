use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{ExactScalar, Field, Poly, Rational};
use crate::error::{Error, Result};

/// Rational function `num / den` in lowest terms with a monic denominator,
/// so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc<F: Field> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RatFunc<F> {
    /// Normalize `num / den`. Errors when `den == 0`.
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self> {
        let Some(lead) = den.leading().cloned() else {
            return Err(Error::DivisionByZero);
        };
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (quo(&num, &g), quo(&den, &g))
        };
        let lead = den.leading().cloned().unwrap_or(lead);
        if lead != F::one() {
            let inv = F::one() / &lead;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(Self { num, den })
    }

    /// `num / den` already coprime with `den` monic.
    fn reduced(num: Poly<F>, den: Poly<F>) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        Self { num, den }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        Self {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn var() -> Self {
        Self::from_poly(Poly::var())
    }

    pub fn numer(&self) -> &Poly<F> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    pub fn derivative(&self) -> Self {
        if self.is_polynomial() {
            return Self::from_poly(self.num.derivative());
        }
        // With D = g·h, g = gcd(D, D'), the new numerator is prime to h.
        let dd = self.den.derivative();
        let g = self.den.gcd(&dd);
        let h = quo(&self.den, &g);
        let num = &(&self.num.derivative() * &h) - &(&self.num * &quo(&dd, &g));
        let r = num.gcd(&g);
        Self::reduced(quo(&num, &r), &quo(&self.den, &r) * &h)
    }

    /// `f' / f`. Errors on `f = 0`.
    pub fn logderiv(&self) -> Result<Self> {
        self.derivative().checked_div(self)
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(&self.num * &o.den, &self.den * &o.num)
    }

    /// `r(c·z)`
    pub fn compose_scale(&self, c: &F) -> Self {
        Self::new(self.num.compose_scale(c), self.den.compose_scale(c)).expect("nonzero scale")
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.num.scale(c), self.den.clone()).expect("nonzero denominator")
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::constant(F::one()), |acc, _| &acc * self)
    }

    /// `r(z) = s(z²)` for even `r`; `None` otherwise.
    pub fn even_to_square(&self) -> Option<Self> {
        let num = self.num.even_to_square()?;
        let den = self.den.even_to_square()?;
        Some(Self::new(num, den).expect("nonzero denominator"))
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> RatFunc<G> {
        RatFunc::new(self.num.map(&f), self.den.map(&f)).expect("nonzero denominator")
    }

    pub fn eval(&self, x: &F) -> Result<F> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(x) / &d)
    }
}

impl RatFunc<Rational> {
    pub fn to_scalar(&self) -> RatFunc<ExactScalar> {
        self.map(|c| ExactScalar::rational(c.clone()))
    }
}

impl RatFunc<ExactScalar> {
    /// Drop to ℚ when no coefficient carries a surd.
    pub fn to_rational(&self) -> Option<RatFunc<Rational>> {
        Some(RatFunc {
            num: self.num.to_rational()?,
            den: self.den.to_rational()?,
        })
    }

    pub fn radicand(&self) -> Result<u64> {
        let (a, b) = (self.num.radicand()?, self.den.radicand()?);
        match (a, b) {
            (0, m) | (m, 0) => Ok(m),
            (x, y) if x == y => Ok(x),
            (x, y) => Err(Error::RadicandMismatch(x, y)),
        }
    }
}

impl<F: Field> From<Poly<F>> for RatFunc<F> {
    fn from(p: Poly<F>) -> Self {
        Self::from_poly(p)
    }
}

impl<'a, F: Field> Add<&'a RatFunc<F>> for &'a RatFunc<F> {
    type Output = RatFunc<F>;
    fn add(self, o: &'a RatFunc<F>) -> RatFunc<F> {
        if self.is_polynomial() && o.is_polynomial() {
            return RatFunc::from_poly(&self.num + &o.num);
        }
        let g = self.den.gcd(&o.den);
        let (d1, d2) = (quo(&self.den, &g), quo(&o.den, &g));
        let t = &(&self.num * &d2) + &(&o.num * &d1);
        let r = t.gcd(&g);
        RatFunc::reduced(quo(&t, &r), &quo(&self.den, &r) * &d2)
    }
}

impl<'a, F: Field> Sub<&'a RatFunc<F>> for &'a RatFunc<F> {
    type Output = RatFunc<F>;
    fn sub(self, o: &'a RatFunc<F>) -> RatFunc<F> {
        self + &(-o)
    }
}

impl<'a, F: Field> Mul<&'a RatFunc<F>> for &'a RatFunc<F> {
    type Output = RatFunc<F>;
    fn mul(self, o: &'a RatFunc<F>) -> RatFunc<F> {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if std::ptr::eq(self, o) {
            return RatFunc::reduced(&self.num * &self.num, &self.den * &self.den);
        }
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let num = &quo(&self.num, &g1) * &quo(&o.num, &g2);
        RatFunc::reduced(num, &quo(&self.den, &g2) * &quo(&o.den, &g1))
    }
}

fn quo<F: Field>(a: &Poly<F>, g: &Poly<F>) -> Poly<F> {
    if g.degree() == Some(0) {
        return a.clone();
    }
    a.div_exact(g).expect("gcd divides")
}

impl<'a, F: Field> Div<&'a RatFunc<F>> for &'a RatFunc<F> {
    type Output = RatFunc<F>;
    fn div(self, o: &'a RatFunc<F>) -> RatFunc<F> {
        self.checked_div(o).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<F: Field> Neg for &RatFunc<F> {
    type Output = RatFunc<F>;
    fn neg(self) -> RatFunc<F> {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<F: Field> Neg for RatFunc<F> {
    type Output = RatFunc<F>;
    fn neg(self) -> RatFunc<F> {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<F: Field> $tr<RatFunc<F>> for RatFunc<F> {
            type Output = RatFunc<F>;
            fn $m(self, o: RatFunc<F>) -> RatFunc<F> {
                (&self).$m(&o)
            }
        }
        impl<'a, F: Field> $tr<&'a RatFunc<F>> for RatFunc<F> {
            type Output = RatFunc<F>;
            fn $m(self, o: &'a RatFunc<F>) -> RatFunc<F> {
                (&self).$m(o)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl<F: Field + fmt::Display> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({}) / ({})", self.num, self.den)
    }
}
