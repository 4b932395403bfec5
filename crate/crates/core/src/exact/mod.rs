//! Exact arithmetic: coefficient rings, the quadratic-extension scalar,
//! dense univariate polynomials, rational functions and fraction-free
//! determinants.

mod det;
mod gcd;
mod poly;
mod ratfunc;
mod scalar;

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use det::{bareiss_determinant, wronskian};
pub use poly::Poly;
pub use poly::{poly_arith, PolyOp};
pub use ratfunc::RatFunc;
pub use scalar::{is_squarefree, ExactScalar};

/// Arbitrary-precision integer.
pub type Integer = BigInt;
/// Arbitrary-precision rational, always stored in lowest terms.
pub type Rational = BigRational;

/// Integer polynomial; the natural home of Hermite polynomials and τ-functions.
pub type ZPoly = Poly<Integer>;
/// Polynomial over ℚ.
pub type QPoly = Poly<Rational>;
/// Rational function over ℚ.
pub type QRatFunc = RatFunc<Rational>;

/// Commutative ring with exact division where a quotient exists.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn from_i64(n: i64) -> Self;

    /// `self / d` if the quotient lies in the ring, `None` otherwise
    /// (including `d == 0`).
    fn div_exact(&self, d: &Self) -> Option<Self>;

    /// Coefficients of the product of two nonempty coefficient lists.
    fn mul_coeffs(a: &[Self], b: &[Self]) -> Vec<Self> {
        schoolbook(a, b)
    }

    /// Exact quotient of coefficient lists, `None` if `d` does not divide
    /// `a`. Requires `a.len() >= d.len()` and a nonzero top coefficient in `d`.
    fn div_coeffs(a: &[Self], d: &[Self]) -> Option<Vec<Self>> {
        long_division(a, d)
    }

    fn sum(x: &Self, y: &Self) -> Self {
        x.clone() + y
    }

    fn difference(x: &Self, y: &Self) -> Self {
        x.clone() - y
    }

    fn product(x: &Self, y: &Self) -> Self {
        x.clone() * y
    }
}

fn long_division<R: Ring>(a: &[R], d: &[R]) -> Option<Vec<R>> {
    let dd = d.len() - 1;
    let lead = &d[dd];
    let mut rem = a.to_vec();
    let mut quot = vec![R::zero(); a.len() - dd];
    for i in (0..quot.len()).rev() {
        let top = &rem[i + dd];
        if top.is_zero() {
            continue;
        }
        let q = top.div_exact(lead)?;
        for (j, dc) in d.iter().enumerate() {
            let cur = std::mem::replace(&mut rem[i + j], R::zero());
            rem[i + j] = cur - &(q.clone() * dc);
        }
        quot[i] = q;
    }
    rem[..dd].iter().all(|c| c.is_zero()).then_some(quot)
}

fn int_division(a: &[BigInt], d: &[BigInt]) -> Option<Vec<BigInt>> {
    let dd = d.len() - 1;
    let lead = &d[dd];
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - dd];
    for i in (0..quot.len()).rev() {
        if rem[i + dd].is_zero() {
            continue;
        }
        let (q, r) = rem[i + dd].div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for (j, dc) in d.iter().enumerate() {
            rem[i + j] -= &q * dc;
        }
        quot[i] = q;
    }
    rem[..dd].iter().all(Zero::is_zero).then_some(quot)
}

fn schoolbook<R: Ring>(a: &[R], b: &[R]) -> Vec<R> {
    let mut out = vec![R::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let cur = std::mem::replace(&mut out[i + j], R::zero());
            out[i + j] = cur + &(x.clone() * y);
        }
    }
    out
}

/// Scale rationals to integers by the lcm of their denominators.
fn clear_denominators(cs: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let mut lcm = BigInt::one();
    for c in cs {
        let d = c.denom();
        if !d.is_one() && !(&lcm % d).is_zero() {
            lcm = lcm.lcm(d);
        }
    }
    let ints = cs
        .iter()
        .map(|c| {
            if c.denom().is_one() {
                c.numer() * &lcm
            } else {
                c.numer() * (&lcm / c.denom())
            }
        })
        .collect();
    (ints, lcm)
}

/// gcd taking one Euclidean step first, so a long argument against a short
/// one costs a single division.
fn skewed_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (long, short) = if a.bits() >= b.bits() { (a, b) } else { (b, a) };
    if short.is_zero() {
        return long.abs();
    }
    if short.is_one() || long.is_one() {
        return BigInt::one();
    }
    let r = long % short;
    match (r.magnitude().to_u64(), short.magnitude().to_u64()) {
        (Some(x), Some(y)) => BigInt::from(x.gcd(&y)),
        _ => r.gcd(short),
    }
}

/// `n / d` in lowest terms, for `d > 0`.
fn lowest_terms(n: BigInt, d: BigInt) -> Rational {
    if d.is_one() {
        return BigRational::from_integer(n);
    }
    let g = skewed_gcd(&n, &d);
    if g.is_one() {
        BigRational::new_raw(n, d)
    } else {
        BigRational::new_raw(n / &g, d / g)
    }
}

fn rational_sum(x: &Rational, y: &Rational) -> Rational {
    let (dx, dy) = (x.denom(), y.denom());
    if dx == dy {
        return lowest_terms(x.numer() + y.numer(), dx.clone());
    }
    let g = skewed_gcd(dx, dy);
    let (ex, ey) = (dx / &g, dy / &g);
    lowest_terms(x.numer() * &ey + y.numer() * &ex, ex * dy)
}

/// Non-negative gcd of all entries, stopping early at 1.
pub(crate) fn content(cs: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in cs {
        if c.is_zero() {
            continue;
        }
        g = skewed_gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// A field. Polynomials over a field get gcd, Euclidean division and
/// rational functions.
pub trait Field: Ring + for<'a> Div<&'a Self, Output = Self> {
    /// Monic gcd of two polynomials. Implementations may override the
    /// generic Euclidean algorithm with something faster.
    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        gcd::euclid(a, b)
    }
}

impl Ring for Integer {
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }

    fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    fn div_coeffs(a: &[Self], d: &[Self]) -> Option<Vec<Self>> {
        int_division(a, d)
    }
}

impl Ring for Rational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn div_exact(&self, d: &Self) -> Option<Self> {
        (!d.is_zero()).then(|| self / d)
    }

    /// Multiply over ℤ and reduce each coefficient once at the end.
    fn mul_coeffs(a: &[Self], b: &[Self]) -> Vec<Self> {
        let (ia, da) = clear_denominators(a);
        let (ib, db) = clear_denominators(b);
        let den = da * db;
        let prod = schoolbook(&ia, &ib);
        if den.is_one() {
            return prod.into_iter().map(BigRational::from_integer).collect();
        }
        let g = skewed_gcd(&content(&prod), &den);
        let den = &den / &g;
        prod.into_iter()
            .map(|c| lowest_terms(if g.is_one() { c } else { c / &g }, den.clone()))
            .collect()
    }

    /// Divide over ℤ by the primitive part of `d`; by Gauss's lemma the
    /// quotient is integral whenever it exists.
    fn div_coeffs(a: &[Self], d: &[Self]) -> Option<Vec<Self>> {
        let (ia, da) = clear_denominators(a);
        let (id, dd) = clear_denominators(d);
        let c = content(&id);
        let id: Vec<BigInt> = if c.is_one() {
            id
        } else {
            id.iter().map(|x| x / &c).collect()
        };
        let q = int_division(&ia, &id)?;
        let den = da * c;
        Some(
            q.into_iter()
                .map(|c| lowest_terms(c * &dd, den.clone()))
                .collect(),
        )
    }

    fn sum(x: &Self, y: &Self) -> Self {
        rational_sum(x, y)
    }

    fn difference(x: &Self, y: &Self) -> Self {
        rational_sum(x, &-y)
    }

    fn product(x: &Self, y: &Self) -> Self {
        if x.is_zero() || y.is_zero() {
            return Self::zero();
        }
        let g1 = skewed_gcd(x.numer(), y.denom());
        let g2 = skewed_gcd(y.numer(), x.denom());
        let num = (x.numer() / &g1) * (y.numer() / &g2);
        BigRational::new_raw(num, (x.denom() / &g2) * (y.denom() / &g1))
    }
}

impl Field for Rational {
    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        gcd::rational_gcd(a, b)
    }
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_i64(n)
}

/// Shorthand for `num / den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Canonical `"num/den"` rendering used in JSON output.
pub fn rational_to_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parse `"num/den"` or a bare integer.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            (!d.is_zero()).then(|| BigRational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

impl ZPoly {
    pub fn to_rational(&self) -> QPoly {
        self.map(|c| BigRational::from_integer(c.clone()))
    }
}

impl QPoly {
    /// Write `self = c · p` with `p` a primitive integer polynomial with
    /// positive leading coefficient. Returns `(c, p)`; the zero polynomial
    /// gives `(0, 0)`.
    pub fn primitive_part(&self) -> (Rational, ZPoly) {
        if self.is_zero() {
            return (Rational::zero(), ZPoly::zero());
        }
        let (ints, lcm) = clear_denominators(self.coeffs());
        let mut c = content(&ints);
        if ints.last().is_some_and(|c| c < &BigInt::zero()) {
            c = -c;
        }
        let prim = if c.is_one() {
            ZPoly::new(ints)
        } else {
            ZPoly::new(ints.into_iter().map(|x| x / &c).collect())
        };
        (BigRational::new(c, lcm), prim)
    }

    /// Convert to an integer polynomial if every coefficient is integral.
    pub fn to_integer(&self) -> Option<ZPoly> {
        self.coeffs()
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(ZPoly::new)
    }
}
