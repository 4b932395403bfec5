use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Field, Poly, QPoly, ZPoly};

/// Monic gcd by the plain Euclidean algorithm.
pub fn euclid<F: Field>(a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b);
        a = b;
        b = r;
    }
    a.monic()
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit integers.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for b in BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in BASES {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes just below 2^62, descending.
fn primes() -> impl Iterator<Item = u64> {
    ((1u64 << 61)..(1u64 << 62))
        .rev()
        .step_by(2)
        .filter(|&n| is_prime(n))
}

fn reduce(p: &ZPoly, m: u64) -> Vec<u64> {
    let big = BigInt::from(m);
    let mut v: Vec<u64> = p
        .coeffs()
        .iter()
        .map(|c| c.mod_floor(&big).to_u64().expect("reduced"))
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Monic gcd over 𝔽_p.
fn gcd_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    while !b.is_empty() {
        let inv = powmod(*b.last().unwrap(), p - 2, p);
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let q = mulmod(*a.last().unwrap(), inv, p);
            for (i, bc) in b.iter().enumerate() {
                let t = mulmod(q, *bc, p);
                a[i + shift] = (a[i + shift] + p - t) % p;
            }
            while a.last() == Some(&0) {
                a.pop();
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    let inv = powmod(*a.last().expect("nonzero gcd"), p - 2, p);
    a.iter().map(|&c| mulmod(c, inv, p)).collect()
}

fn primitive(p: ZPoly) -> ZPoly {
    let content = super::content(p.coeffs());
    if content.is_zero() {
        return p;
    }
    let content = if p.leading().is_some_and(|l| l.is_negative()) {
        -content
    } else {
        content
    };
    ZPoly::new(p.into_coeffs().into_iter().map(|c| c / &content).collect())
}

/// Primitive gcd of primitive integer polynomials by images modulo many
/// primes, combined with the Chinese remainder theorem until a candidate
/// divides both inputs.
fn modular_gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let gamma = a.leading().unwrap().gcd(b.leading().unwrap());
    let mut modulus = BigInt::one();
    let mut image: Vec<BigInt> = Vec::new();
    let mut last: Option<ZPoly> = None;
    for p in primes() {
        let (ma, mb) = (reduce(a, p), reduce(b, p));
        if ma.len() != a.coeffs().len() || mb.len() != b.coeffs().len() {
            continue;
        }
        let g = gcd_mod(ma, mb, p);
        if g.len() == 1 {
            return ZPoly::one();
        }
        if !image.is_empty() && g.len() > image.len() {
            continue;
        }
        if g.len() < image.len() {
            image.clear();
        }
        let gm = gamma.mod_floor(&BigInt::from(p)).to_u64().unwrap();
        let g: Vec<u64> = g.iter().map(|&c| mulmod(c, gm, p)).collect();
        if image.is_empty() {
            modulus = BigInt::from(p);
            image = g.iter().map(|&c| BigInt::from(c)).collect();
            last = None;
        } else {
            let pb = BigInt::from(p);
            let inv = powmod(modulus.mod_floor(&pb).to_u64().unwrap(), p - 2, p);
            for (h, &c) in image.iter_mut().zip(&g) {
                let hp = h.mod_floor(&pb).to_u64().unwrap();
                let t = mulmod((c + p - hp) % p, inv, p);
                *h += &modulus * t;
            }
            modulus *= &pb;
        }
        let half = &modulus >> 1;
        let sym: Vec<BigInt> = image
            .iter()
            .map(|h| if h > &half { h - &modulus } else { h.clone() })
            .collect();
        let cand = primitive(ZPoly::new(sym));
        if last.as_ref() == Some(&cand)
            && a.div_exact(&cand).is_some()
            && b.div_exact(&cand).is_some()
        {
            return cand;
        }
        last = Some(cand);
    }
    unreachable!("the supply of primes is unbounded")
}

/// Monic gcd over ℚ via the primitive parts and a modular gcd over ℤ.
pub fn rational_gcd(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let (_, pa) = a.primitive_part();
    let (_, pb) = b.primitive_part();
    if pa.degree() == Some(0) || pb.degree() == Some(0) {
        return QPoly::one();
    }
    modular_gcd(&pa, &pb).to_rational().monic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use proptest::prelude::*;

    fn q(cs: &[i64]) -> QPoly {
        QPoly::from_i64s(cs)
    }

    #[test]
    fn common_factor_is_found() {
        let f = q(&[1, 1]);
        let a = &f * &q(&[-3, 0, 2]);
        let b = &f * &q(&[5, 7]);
        assert_eq!(rational_gcd(&a, &b), f);
        assert_eq!(euclid(&a, &b), f);
    }

    #[test]
    fn coprime_and_degenerate_inputs() {
        assert_eq!(rational_gcd(&q(&[1, 0, 1]), &q(&[0, 1])), q(&[1]));
        assert_eq!(rational_gcd(&q(&[]), &q(&[0, 4])), q(&[0, 1]));
        assert_eq!(rational_gcd(&q(&[]), &q(&[])), q(&[]));
        let half = QPoly::new(vec![ratio(1, 2), ratio(1, 3)]);
        assert_eq!(rational_gcd(&half, &(&half * &q(&[0, 1]))), half.monic());
    }

    #[test]
    fn primes_are_prime() {
        let ps: Vec<u64> = primes().take(3).collect();
        assert!(ps.iter().all(|&p| p < 1 << 62 && is_prime(p)));
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
        assert!(is_prime((1 << 61) - 1) && !is_prime(1 << 61) && !is_prime(561));
    }

    #[test]
    fn large_coefficients_need_several_primes() {
        let big = QPoly::new(vec![
            "123456789012345678901234567890123"
                .parse::<BigInt>()
                .unwrap()
                .into(),
            "98765432109876543210987654321"
                .parse::<BigInt>()
                .unwrap()
                .into(),
        ]);
        let a = &big * &q(&[3, 0, 1]);
        let b = &big * &q(&[-7, 2]);
        assert_eq!(rational_gcd(&a, &b), big.monic());
    }

    proptest! {
        #[test]
        fn matches_euclid(f in prop::collection::vec(-5i64..5, 1..4),
                          g in prop::collection::vec(-5i64..5, 1..5),
                          h in prop::collection::vec(-5i64..5, 1..5)) {
            let (f, g, h) = (q(&f), q(&g), q(&h));
            prop_assume!(!f.is_zero());
            let a = &f * &g;
            let b = &f * &h;
            prop_assert_eq!(rational_gcd(&a, &b), euclid(&a, &b));
        }
    }
}
