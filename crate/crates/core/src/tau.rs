//! Hermite-type τ-functions of Maya diagrams.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{bareiss_determinant, wronskian, QPoly, Rational, ZPoly};
use crate::hermite::HermiteCache;
use crate::maya::MayaDiagram;

/// τ-function of a diagram, computed on its standard-form translate
/// `diagram - shift`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TauFunction {
    pub diagram: MayaDiagram,
    pub standard_shift: i64,
    pub poly: ZPoly,
}

impl TauFunction {
    pub fn degree(&self) -> usize {
        self.poly.degree().expect("τ is never zero")
    }
}

/// `Σ t_i - q(q-1)/2` for a standard-form diagram with positive sites `t`.
pub fn standard_degree(m: &MayaDiagram) -> usize {
    let t = m.positive_sites();
    let q = t.len() as i64;
    (t.iter().sum::<i64>() - q * (q - 1) / 2) as usize
}

/// `Wr[H_{t_q}, …, H_{t_1}]` over the occupied positive sites, ascending.
///
/// ```
/// use maya_painleve::maya::MayaDiagram;
/// use maya_painleve::tau::tau_standard;
/// let m = MayaDiagram::from_positive(&[1, 2]).unwrap();
/// assert_eq!(tau_standard(&m).unwrap().to_string(), "8z^2 + 4");
/// ```
pub fn tau_standard(m: &MayaDiagram) -> Result<ZPoly> {
    tau_standard_with(HermiteCache::global(), m)
}

pub fn tau_standard_with(cache: &HermiteCache, m: &MayaDiagram) -> Result<ZPoly> {
    if !m.is_standard() {
        return Err(Error::NotStandardForm);
    }
    let hs = m
        .positive_sites()
        .iter()
        .map(|&t| cache.hermite(t))
        .collect::<Result<Vec<_>>>()?;
    wronskian(&hs)
}

/// Pseudo-Wronskian of the Frobenius symbol `(s_1 > … > s_r | t_q < … < t_1)`.
/// Rows for `s_i` run along conjugate Hermite indices, rows for `t_j` along
/// derivatives. Both lists are given in descending order.
pub fn pseudo_wronskian(s: &[i64], t: &[i64]) -> Result<ZPoly> {
    pseudo_wronskian_with(HermiteCache::global(), s, t)
}

pub fn pseudo_wronskian_with(cache: &HermiteCache, s: &[i64], t: &[i64]) -> Result<ZPoly> {
    let n = s.len() + t.len();
    let mut rows = Vec::with_capacity(n);
    for &si in s {
        rows.push(
            (0..n as i64)
                .map(|j| cache.conjugate_hermite(si + j))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    for &tj in t.iter().rev() {
        let h = cache.hermite(tj)?;
        rows.push((0..n).map(|j| h.nth_derivative(j)).collect());
    }
    bareiss_determinant(&rows)
}

/// Normalized pseudo-Wronskian, invariant under translation of the diagram.
pub fn tau_normalized(m: &MayaDiagram) -> Result<QPoly> {
    let s = m.frob_minus();
    let t = m.frob_plus();
    let pw = pseudo_wronskian(&s, &t)?;
    let mut norm = BigInt::one();
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            norm *= 2 * (s[j] - s[i]);
        }
    }
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            norm *= 2 * (t[i] - t[j]);
        }
    }
    if (s.len() * t.len()) % 2 == 1 {
        norm = -norm;
    }
    let inv = Rational::new(BigInt::one(), norm);
    Ok(pw.to_rational().scale(&inv))
}

/// τ of an arbitrary diagram through its standard-form translate.
pub fn tau_of_diagram(m: &MayaDiagram) -> Result<TauFunction> {
    tau_of_diagram_with(HermiteCache::global(), m)
}

pub fn tau_of_diagram_with(cache: &HermiteCache, m: &MayaDiagram) -> Result<TauFunction> {
    let (std, c) = m.to_standard();
    Ok(TauFunction {
        diagram: m.clone(),
        standard_shift: c,
        poly: tau_standard_with(cache, &std)?,
    })
}

/// Integer partition `λ_1 ≥ λ_2 ≥ … > 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition(Vec<i64>);

impl Partition {
    pub fn new(mut parts: Vec<i64>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.iter().any(|&x| x <= 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidFrobenius(format!(
                "{parts:?} is not a partition"
            )));
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `t_i = λ_i + q - i`.
    pub fn sites(&self) -> Vec<i64> {
        let q = self.0.len() as i64;
        self.0
            .iter()
            .enumerate()
            .map(|(i, l)| l + q - 1 - i as i64)
            .collect()
    }

    /// The standard-form diagram with occupied sites `t_i`.
    pub fn diagram(&self) -> MayaDiagram {
        MayaDiagram::from_positive(&self.sites()).expect("distinct non-negative sites")
    }

    /// All partitions of `n`, parts non-increasing, in reverse lexicographic order.
    pub fn all(n: i64) -> Vec<Partition> {
        fn rec(rest: i64, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for part in (1..=rest.min(max)).rev() {
                cur.push(part);
                rec(rest - part, part, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

fn factorial(n: i64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `C_λ · det(H_{λ_i+j-i} / (λ_i+j-i)!)` with `C_λ = 2^{n(n-1)/2} ∏ t_i!`,
/// computed over ℚ independently of any Wronskian.
pub fn schur_tau(lambda: &Partition) -> Result<ZPoly> {
    let cache = HermiteCache::global();
    let n = lambda.len();
    let parts = lambda.parts();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let idx = parts[i] + j as i64 - i as i64;
            row.push(if idx < 0 {
                QPoly::zero()
            } else {
                let inv = Rational::new(BigInt::one(), factorial(idx));
                cache.hermite(idx)?.to_rational().scale(&inv)
            });
        }
        rows.push(row);
    }
    let det = bareiss_determinant(&rows)?;
    let mut c = BigInt::from(2).pow((n * n.saturating_sub(1) / 2) as u32);
    for t in lambda.sites() {
        c *= factorial(t);
    }
    det.scale(&Rational::from_integer(c))
        .to_integer()
        .ok_or(Error::InexactDivision("Schur normalization"))
}
