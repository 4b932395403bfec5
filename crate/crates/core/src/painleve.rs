//! Noumi-Yamada systems and the Painlevé IV / V reductions of cyclic chains.

use num_traits::{One, Signed, Zero};

use crate::chain::{ChainSolution, CycleSpec, DressingChain};
use crate::error::{Error, Result};
use crate::exact::{rat, ratio, ExactScalar, Poly, QRatFunc, RatFunc, Rational};
use crate::hermite::HermiteCache;
use crate::maya::{KBlockCoordinates, MayaDiagram};
use crate::tau::tau_of_diagram_with;

/// Which Noumi-Yamada system a period lands in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NYParity {
    /// Odd period, symmetric form.
    Even,
    /// Even period, needs the half-sum normalizations.
    Odd,
}

/// A rational solution of the Noumi-Yamada system, stored in the chain
/// variable `z` as `F_i = -(w_i + w_{i+1})`.
#[derive(Clone, Debug, PartialEq)]
pub struct NYSolution {
    pub fs: Vec<QRatFunc>,
    pub alphas: Vec<Rational>,
    pub delta: Rational,
}

impl NYSolution {
    pub fn from_chain(chain: &DressingChain<Rational>) -> Result<Self> {
        let delta = chain.delta();
        if !delta.is_positive() {
            return Err(Error::NonPositiveDelta(
                delta.floor().to_integer().try_into().unwrap_or(i64::MIN),
            ));
        }
        let p = chain.p();
        let fs = (0..p)
            .map(|i| -(&chain.ws[i] + &chain.ws[(i + 1) % p]))
            .collect();
        let alphas = chain.a.iter().map(|a| -(a / &delta)).collect();
        Ok(Self { fs, alphas, delta })
    }

    pub fn p(&self) -> usize {
        self.fs.len()
    }

    pub fn parity(&self) -> NYParity {
        if self.p() % 2 == 1 {
            NYParity::Even
        } else {
            NYParity::Odd
        }
    }

    /// `f_i(x) = F_i(x/√Δ)/√Δ`, which is rational because `F_i` is odd.
    pub fn f_x(&self, i: usize) -> Result<QRatFunc> {
        let s = ExactScalar::sqrt(&(Rational::one() / &self.delta))?;
        self.fs[i]
            .to_scalar()
            .compose_scale(&s)
            .scale(&s)
            .to_rational()
            .ok_or(Error::SurdResidue("f_i(x)"))
    }

    /// Residual of each equation, in `z`. All vanish on solutions.
    pub fn residuals(&self) -> Vec<QRatFunc> {
        let dfs: Vec<_> = self.fs.iter().map(RatFunc::derivative).collect();
        ny_equations(
            self.parity(),
            &self.fs,
            &dfs,
            &RatFunc::var(),
            &self.alphas,
            &self.delta,
        )
    }

    /// `ΣF − Δz`, or for even p the two half sums `ΣF_odd − Δz/2`, `ΣF_even − Δz/2`.
    pub fn normalization_residuals(&self) -> Vec<QRatFunc> {
        normalizations(self.parity(), &self.fs, &RatFunc::var(), &self.delta)
    }
}

fn ny_equations(
    parity: NYParity,
    fs: &[QRatFunc],
    dfs: &[QRatFunc],
    z: &QRatFunc,
    alphas: &[Rational],
    delta: &Rational,
) -> Vec<QRatFunc> {
    match parity {
        NYParity::Even => even_equations(fs, dfs, alphas, delta),
        NYParity::Odd => odd_equations(fs, dfs, z, alphas, delta),
    }
}

fn even_equations(
    fs: &[QRatFunc],
    dfs: &[QRatFunc],
    alphas: &[Rational],
    delta: &Rational,
) -> Vec<QRatFunc> {
    // alt_i = Σ_{j=1}^{p-1} (-1)^{j+1} f_{i+j}; for odd p consecutive sums
    // satisfy alt_{i+1} = f_{i+1} - f_i - alt_i.
    let p = fs.len();
    let f = |i: usize| &fs[i % p];
    let mut alt = RatFunc::constant(Rational::zero());
    for j in 1..p {
        alt = if j % 2 == 1 { &alt + f(j) } else { &alt - f(j) };
    }
    let mut out = Vec::with_capacity(p);
    for i in 0..p {
        let lhs = &dfs[i] - &(&fs[i] * &alt);
        out.push(&lhs - &RatFunc::constant(delta * &alphas[i]));
        alt = &(f(i + 1) - &fs[i]) - &alt;
    }
    out
}

fn odd_equations(
    fs: &[QRatFunc],
    dfs: &[QRatFunc],
    z: &QRatFunc,
    alphas: &[Rational],
    delta: &Rational,
) -> Vec<QRatFunc> {
    let p = fs.len();
    let n = p / 2;
    let f = |i: usize| &fs[i % p];
    let alpha = |i: usize| &alphas[i % p];
    let two = rat(2);
    (0..p)
        .map(|i| {
            let mut coef = Rational::one();
            let mut fsum = RatFunc::constant(Rational::zero());
            for k in 1..n {
                coef -= &two * alpha(i + 2 * k);
                fsum = &fsum + f(i + 2 * k);
            }
            let mut s = RatFunc::constant(Rational::zero());
            for j in 1..=n {
                for k in 1..n {
                    let prod = f(2 * j + i - 1) * f(2 * k + i);
                    s = if 2 * k + 1 > 2 * j {
                        &s + &prod
                    } else {
                        &s - &prod
                    };
                }
            }
            let bracket = &RatFunc::constant(coef) + &s.scale(&(&two / delta));
            let lhs = &(z * &dfs[i]) - &(&fs[i] * &bracket);
            &lhs - &fsum.scale(&(&two * &alphas[i]))
        })
        .collect()
}

fn normalizations(
    parity: NYParity,
    fs: &[QRatFunc],
    z: &QRatFunc,
    delta: &Rational,
) -> Vec<QRatFunc> {
    let sum = |it: &mut dyn Iterator<Item = &QRatFunc>| {
        it.fold(RatFunc::constant(Rational::zero()), |s, f| &s + f)
    };
    match parity {
        NYParity::Even => vec![&sum(&mut fs.iter()) - &z.scale(delta)],
        NYParity::Odd => {
            let target = z.scale(&(delta / rat(2)));
            vec![
                &sum(&mut fs.iter().skip(1).step_by(2)) - &target,
                &sum(&mut fs.iter().step_by(2)) - &target,
            ]
        }
    }
}

/// Noumi-Yamada form of a chain solution.
pub fn to_noumi_yamada(sol: &ChainSolution) -> Result<NYSolution> {
    if sol.delta <= 0 {
        return Err(Error::NonPositiveDelta(sol.delta));
    }
    NYSolution::from_chain(&sol.chain())
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct NYReport {
    pub equations: Vec<bool>,
    pub normalizations: Vec<bool>,
    pub alpha_sum: bool,
}

impl NYReport {
    pub fn passed(&self) -> bool {
        self.equations
            .iter()
            .chain(&self.normalizations)
            .all(|&b| b)
            && self.alpha_sum
    }
}

pub fn verify_ny(ny: &NYSolution) -> NYReport {
    NYReport {
        equations: ny.residuals().iter().map(RatFunc::is_zero).collect(),
        normalizations: ny
            .normalization_residuals()
            .iter()
            .map(RatFunc::is_zero)
            .collect(),
        alpha_sum: ny.alphas.iter().fold(Rational::zero(), |s, a| s + a) == Rational::one(),
    }
}

/// `2yy'' = y'² + 3y⁴ + 8ty³ + 4(t² − a)y² + 2b`.
#[derive(Clone, Debug, PartialEq)]
pub struct P4Solution {
    pub y: RatFunc<ExactScalar>,
    pub a: Rational,
    pub b: Rational,
}

impl P4Solution {
    /// `y` with coefficients in ℚ, when it has no surd part.
    pub fn y_rational(&self) -> Option<QRatFunc> {
        self.y.to_rational()
    }

    /// Left side minus right side of the equation, multiplied by `D⁴`
    /// where `y = N/D`. Working with polynomials avoids a gcd per operation.
    pub fn residual(&self) -> Poly<ExactScalar> {
        let c = |x: &Rational| Poly::constant(ExactScalar::rational(x.clone()));
        let k = |n: i64| Poly::constant(ExactScalar::from_integer(n));
        let (n, d) = (self.y.numer(), self.y.denom());
        let p = &(&n.derivative() * d) - &(n * &d.derivative());
        let t = Poly::var();
        let n2 = n * n;
        let d2 = d * d;
        let mut r = &(&k(2) * n) * &(&(&p.derivative() * d) - &(&k(2) * &(&p * &d.derivative())));
        r = &r - &(&p * &p);
        r = &r - &(&k(3) * &(&n2 * &n2));
        r = &r - &(&(&k(8) * &t) * &(&(&n2 * n) * d));
        r = &r - &(&(&k(4) * &(&(&t * &t) - &c(&self.a))) * &(&n2 * &d2));
        &r - &(&c(&(&self.b * rat(2))) * &(&d2 * &d2))
    }
}

/// Reduce a 3-cyclic solution to P_IV via `y(t) = s·F_0(-s t)`, `s = 1/√k`.
pub fn to_p4(sol: &ChainSolution) -> Result<P4Solution> {
    if sol.p() != 3 {
        return Err(Error::WrongPeriod {
            expected: 3,
            got: sol.p(),
        });
    }
    let ny = to_noumi_yamada(sol)?;
    let s = ExactScalar::sqrt(&Rational::new(1.into(), sol.k().into()))?;
    let y = ny.fs[0].to_scalar().compose_scale(&-s.clone()).scale(&s);
    let d = rat(sol.delta);
    let a = (rat(sol.a[1]) - rat(sol.a[2])) / &d;
    let b = -rat(2) * rat(sol.a[0]) * rat(sol.a[0]) / (&d * &d);
    Ok(P4Solution { y, a, b })
}

pub fn verify_p4(s: &P4Solution) -> Result<bool> {
    if s.y.is_zero() {
        return Err(Error::Degenerate("y vanishes identically"));
    }
    Ok(s.residual().is_zero())
}

/// The two classes of 3-cyclic diagrams.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum P4Family {
    /// `Ξ(0, n1, n1+n2)`, shift 1.
    GeneralizedHermite,
    /// `Ξ(0|n1|n2)`, shift 3.
    Okamoto,
}

impl P4Family {
    pub fn diagram(self, n1: i64, n2: i64) -> MayaDiagram {
        match self {
            Self::GeneralizedHermite => MayaDiagram::xi(&[0, n1, n1 + n2]).expect("n1, n2 >= 0"),
            Self::Okamoto => KBlockCoordinates::new(vec![vec![0], vec![n1], vec![n2]])
                .expect("n1, n2 >= 0")
                .diagram(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::GeneralizedHermite => "GH",
            Self::Okamoto => "O",
        }
    }
}

/// One of the three closed forms per family, at parameters `(n1, n2)`.
///
/// GH rows:
/// 1. `y = (log τ(n1,n2)/τ(n1,n2+1))'`
/// 2. `y = (log τ(n1,n2)/τ(n1-1,n2))'`
/// 3. `y = -2t + (log τ(n1,n2)/τ(n1+1,n2-1))'`
///
/// Okamoto rows carry `-2t/3` and take τ at `t/√3`:
/// 1. denominator `τ(n1-1,n2-1)`
/// 2. denominator `τ(n1+1,n2)`
/// 3. denominator `τ(n1,n2+1)`
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct P4ClosedForm {
    pub family: P4Family,
    pub row: u8,
    pub n1: i64,
    pub n2: i64,
}

impl P4ClosedForm {
    fn partner(&self) -> Option<(i64, i64)> {
        let (n1, n2) = (self.n1, self.n2);
        let (m1, m2) = match (self.family, self.row) {
            (P4Family::GeneralizedHermite, 1) => (n1, n2 + 1),
            (P4Family::GeneralizedHermite, 2) => (n1 - 1, n2),
            (P4Family::GeneralizedHermite, 3) => (n1 + 1, n2 - 1),
            (P4Family::Okamoto, 1) => (n1 - 1, n2 - 1),
            (P4Family::Okamoto, 2) => (n1 + 1, n2),
            (P4Family::Okamoto, 3) => (n1, n2 + 1),
            _ => return None,
        };
        (n1 >= 0 && n2 >= 0 && m1 >= 0 && m2 >= 0).then_some((m1, m2))
    }

    pub fn params(&self) -> Result<(Rational, Rational)> {
        self.partner()
            .ok_or(Error::Degenerate("closed form out of range"))?;
        let (n1, n2) = (self.n1, self.n2);
        let o = |x: i64| ratio(-2, 9) * rat(x * x);
        Ok(match (self.family, self.row) {
            (P4Family::GeneralizedHermite, 1) => (rat(-(1 + n1 + 2 * n2)), rat(-2 * n1 * n1)),
            (P4Family::GeneralizedHermite, 2) => (rat(2 * n1 + n2 - 1), rat(-2 * n2 * n2)),
            (P4Family::GeneralizedHermite, _) => {
                (rat(n2 - n1 - 1), rat(-2 * (n1 + n2) * (n1 + n2)))
            }
            (P4Family::Okamoto, 1) => (rat(n1 + n2), o(1 - 3 * n1 + 3 * n2)),
            (P4Family::Okamoto, 2) => (rat(-1 - 2 * n1 + n2), o(2 + 3 * n2)),
            (P4Family::Okamoto, _) => (rat(-2 - 2 * n2 + n1), o(1 + 3 * n1)),
        })
    }

    /// Build `y` directly from the Hermite Wronskians, bypassing the chain.
    pub fn solution(&self) -> Result<P4Solution> {
        self.solution_with(HermiteCache::global())
    }

    pub fn solution_with(&self, cache: &HermiteCache) -> Result<P4Solution> {
        let (m1, m2) = self
            .partner()
            .ok_or(Error::Degenerate("closed form out of range"))?;
        let (lin, k) = match (self.family, self.row) {
            (P4Family::GeneralizedHermite, 3) => (rat(-2), rat(1)),
            (P4Family::GeneralizedHermite, _) => (rat(0), rat(1)),
            (P4Family::Okamoto, _) => (ratio(-2, 3), ratio(1, 3)),
        };
        let s = ExactScalar::sqrt(&k)?;
        let logd = |m: &MayaDiagram| -> Result<RatFunc<ExactScalar>> {
            let tau =
                RatFunc::from_poly(tau_of_diagram_with(cache, m)?.poly.to_rational()).to_scalar();
            tau.compose_scale(&s).logderiv()
        };
        let num = logd(&self.family.diagram(self.n1, self.n2))?;
        let den = logd(&self.family.diagram(m1, m2))?;
        let t = RatFunc::from_poly(Poly::monomial(ExactScalar::rational(lin), 1));
        let (a, b) = self.params()?;
        Ok(P4Solution {
            y: &t + &(&num - &den),
            a,
            b,
        })
    }
}

/// Which closed form a 3-cyclic spec reduces to. Permutations that agree in
/// their last entry share a row.
pub fn classify_p4(spec: &CycleSpec) -> Result<P4ClosedForm> {
    if spec.p() != 3 {
        return Err(Error::WrongPeriod {
            expected: 3,
            got: spec.p(),
        });
    }
    let blocks = spec.kblocks.blocks();
    let (family, n1, n2) = match spec.k() {
        1 => (
            P4Family::GeneralizedHermite,
            blocks[0][1],
            blocks[0][2] - blocks[0][1],
        ),
        _ => (P4Family::Okamoto, blocks[1][0], blocks[2][0]),
    };
    let (row, d1, d2) = match (family, spec.perm[2]) {
        (P4Family::GeneralizedHermite, 2) => (1, 0, -1),
        (P4Family::GeneralizedHermite, 1) => (3, -1, 1),
        (P4Family::GeneralizedHermite, _) => (2, 1, 0),
        (P4Family::Okamoto, 2) => (3, 0, -1),
        (P4Family::Okamoto, 1) => (2, -1, 0),
        (P4Family::Okamoto, _) => (1, 1, 1),
    };
    let form = P4ClosedForm {
        family,
        row,
        n1: n1 + d1,
        n2: n2 + d2,
    };
    form.partner()
        .ok_or(Error::Degenerate("closed form out of range"))?;
    Ok(form)
}

/// `y'' = y'²(1/(2y) + 1/(y−1)) − y'/t + (y−1)²/t²·(ay + b/y) + cy/t + dy(y+1)/(y−1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct P5Solution {
    pub y: QRatFunc,
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl P5Solution {
    pub fn params(&self) -> [Rational; 4] {
        [
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
        ]
    }

    pub fn residual(&self) -> Result<QRatFunc> {
        let y = &self.y;
        let one = RatFunc::constant(Rational::one());
        let ym1 = y - &one;
        if y.is_zero() || ym1.is_zero() {
            return Err(Error::Degenerate("y is constant 0 or 1"));
        }
        let t = RatFunc::var();
        let k = |q: &Rational| RatFunc::constant(q.clone());
        let (y1, y2) = (y.derivative(), y.derivative().derivative());
        let w = &one.checked_div(&y.scale(&rat(2)))? + &one.checked_div(&ym1)?;
        let mut rhs = &(&y1 * &y1) * &w;
        rhs = &rhs - &y1.checked_div(&t)?;
        let inner = &(&k(&self.a) * y) + &k(&self.b).checked_div(y)?;
        rhs = &rhs + &(&(&ym1 * &ym1).checked_div(&(&t * &t))? * &inner);
        rhs = &rhs + &(&k(&self.c) * y).checked_div(&t)?;
        rhs = &rhs + &(&(&k(&self.d) * y) * &(y + &one)).checked_div(&ym1)?;
        Ok(&y2 - &rhs)
    }
}

/// Reduce a 4-cyclic solution to P_V via `y = -F_2/F_0` and `t = z²`.
pub fn to_p5(sol: &ChainSolution) -> Result<P5Solution> {
    if sol.p() != 4 {
        return Err(Error::WrongPeriod {
            expected: 4,
            got: sol.p(),
        });
    }
    let ny = to_noumi_yamada(sol)?;
    if ny.fs[0].is_zero() {
        return Err(Error::Degenerate("F_0 vanishes identically"));
    }
    let ratio = -ny.fs[2].checked_div(&ny.fs[0])?;
    let y = ratio.even_to_square().ok_or(Error::NotEven)?;
    let al = &ny.alphas;
    let d = &ny.delta;
    Ok(P5Solution {
        y,
        a: &al[0] * &al[0] / rat(2),
        b: -(&al[2] * &al[2]) / rat(2),
        c: d / rat(4) * (&al[3] - &al[1]),
        d: -(d * d) / rat(32),
    })
}

pub fn verify_p5(s: &P5Solution) -> Result<bool> {
    Ok(s.residual()?.is_zero())
}
