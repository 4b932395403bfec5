//! Cyclic dressing chains built from Maya-diagram cycles.
//!
//! A p-cyclic chain is a tuple of rational functions `w_0 … w_{p-1}` and
//! constants `a_0 … a_{p-1}` with
//! `(w_i + w_{i+1})' + w_{i+1}² - w_i² = a_i`, indices mod p.

use crate::error::{Error, Result};
use crate::exact::{rat, Field, Poly, QRatFunc, RatFunc, Rational, ZPoly};
use crate::hermite::HermiteCache;
use crate::maya::{FlipSequence, KBlockCoordinates, MayaDiagram};
use crate::tau::{tau_of_diagram_with, TauFunction};

/// Block coordinates together with the order in which the flips are taken.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycleSpec {
    pub kblocks: KBlockCoordinates,
    pub perm: Vec<usize>,
}

impl CycleSpec {
    pub fn new(kblocks: KBlockCoordinates, perm: Vec<usize>) -> Result<Self> {
        crate::maya::check_permutation(&perm, kblocks.p())?;
        Ok(Self { kblocks, perm })
    }

    /// `coords` in `"0,3,4|2"` syntax.
    pub fn parse(coords: &str, perm: &[usize]) -> Result<Self> {
        Self::new(KBlockCoordinates::parse(coords)?, perm.to_vec())
    }

    pub fn p(&self) -> usize {
        self.kblocks.p()
    }

    pub fn k(&self) -> i64 {
        self.kblocks.k() as i64
    }

    /// The flips in the order they are applied.
    pub fn flip_sequence(&self) -> FlipSequence {
        self.kblocks
            .canonical_flip_sequence()
            .permuted(&self.perm)
            .expect("validated permutation")
    }
}

/// Abstract chain data over a field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DressingChain<F: Field> {
    pub ws: Vec<RatFunc<F>>,
    pub a: Vec<F>,
}

/// Which chain symmetry to apply.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Symmetry<F> {
    /// `ŵ_i = -w_{-i}`, `â_i = -a_{-i-1}`.
    Reversal,
    /// `ŵ_i = w_{i+1}`, `â_i = a_{i+1}`.
    Cyclic,
    /// `ŵ_i(z) = c·w_i(cz)`, `â_i = c²·a_i`.
    Scaling(F),
}

impl<F: Field> DressingChain<F> {
    pub fn p(&self) -> usize {
        self.ws.len()
    }

    /// `Δ = -Σ a_i`.
    pub fn delta(&self) -> F {
        -self.a.iter().fold(F::zero(), |s, x| s + x)
    }

    /// `(w_i + w_{i+1})' + w_{i+1}² - w_i² - a_i` for each `i`.
    pub fn residuals(&self) -> Vec<RatFunc<F>> {
        let p = self.p();
        (0..p)
            .map(|i| {
                let (w0, w1) = (&self.ws[i], &self.ws[(i + 1) % p]);
                let sum = w0 + w1;
                let lhs = &sum.derivative() + &(&(w1 - w0) * &sum);
                &lhs - &RatFunc::constant(self.a[i].clone())
            })
            .collect()
    }

    /// `Σ w_i + (Δ/2) z`, identically zero on solutions.
    pub fn first_integral(&self) -> RatFunc<F> {
        let half = self.delta() / &F::from_i64(2);
        let sum = self.ws.iter().fold(RatFunc::zero(), |s, w| &s + w);
        &sum + &RatFunc::from_poly(Poly::monomial(half, 1))
    }

    /// For even p, `2 Σ (-1)^i w_i² + Σ (-1)^i a_i`, which vanishes on solutions.
    pub fn alternating_integral(&self) -> Option<RatFunc<F>> {
        if self.p() % 2 == 1 {
            return None;
        }
        let mut acc = RatFunc::zero();
        for (i, (w, a)) in self.ws.iter().zip(&self.a).enumerate() {
            let term = &(w * w).scale(&F::from_i64(2)) + &RatFunc::constant(a.clone());
            acc = if i % 2 == 0 {
                &acc + &term
            } else {
                &acc - &term
            };
        }
        Some(acc)
    }

    pub fn apply(&self, sym: &Symmetry<F>) -> Result<Self> {
        let p = self.p();
        Ok(match sym {
            Symmetry::Reversal => Self {
                ws: (0..p).map(|i| -&self.ws[(p - i) % p]).collect(),
                a: (0..p)
                    .map(|i| -self.a[(2 * p - i - 1) % p].clone())
                    .collect(),
            },
            Symmetry::Cyclic => Self {
                ws: (0..p).map(|i| self.ws[(i + 1) % p].clone()).collect(),
                a: (0..p).map(|i| self.a[(i + 1) % p].clone()).collect(),
            },
            Symmetry::Scaling(c) => {
                if c.is_zero() {
                    return Err(Error::ZeroScale);
                }
                Self {
                    ws: self
                        .ws
                        .iter()
                        .map(|w| w.compose_scale(c).scale(c))
                        .collect(),
                    a: self.a.iter().map(|x| x.clone() * c * c).collect(),
                }
            }
        })
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> DressingChain<G> {
        DressingChain {
            ws: self.ws.iter().map(|w| w.map(&f)).collect(),
            a: self.a.iter().map(&f).collect(),
        }
    }
}

/// A rational solution of the p-cyclic chain with all intermediate data.
#[derive(Clone, Debug)]
pub struct ChainSolution {
    pub spec: CycleSpec,
    pub flip_seq: FlipSequence,
    /// `M_0 … M_p`.
    pub diagrams: Vec<MayaDiagram>,
    /// `τ_0 … τ_p`.
    pub taus: Vec<TauFunction>,
    pub sigmas: Vec<i64>,
    pub a: Vec<i64>,
    pub delta: i64,
    pub ws: Vec<QRatFunc>,
}

impl ChainSolution {
    pub fn p(&self) -> usize {
        self.ws.len()
    }

    pub fn k(&self) -> i64 {
        self.flip_seq.k
    }

    pub fn chain(&self) -> DressingChain<Rational> {
        DressingChain {
            ws: self.ws.clone(),
            a: self.a.iter().map(|&x| rat(x)).collect(),
        }
    }

    pub fn alphas(&self) -> Vec<Rational> {
        self.a
            .iter()
            .map(|&x| Rational::new((-x).into(), self.delta.into()))
            .collect()
    }
}

fn logderiv(p: &ZPoly) -> QRatFunc {
    RatFunc::from_poly(p.to_rational())
        .logderiv()
        .expect("τ is nonzero")
}

/// Build the chain attached to a cycle spec.
///
/// ```
/// use maya_painleve::chain::{build_cycle, CycleSpec};
/// let sol = build_cycle(&CycleSpec::parse("0,3,8", &[2, 1, 0]).unwrap()).unwrap();
/// assert_eq!(sol.a, vec![10, 6, -18]);
/// assert_eq!(sol.sigmas, vec![-1, 1, -1]);
/// ```
pub fn build_cycle(spec: &CycleSpec) -> Result<ChainSolution> {
    build_cycle_with(HermiteCache::global(), spec)
}

pub fn build_cycle_with(cache: &HermiteCache, spec: &CycleSpec) -> Result<ChainSolution> {
    let flip_seq = spec.flip_sequence();
    let (p, k) = (spec.p(), spec.k());
    let mus = &flip_seq.mus;
    let mut diagrams = vec![spec.kblocks.diagram()];
    let mut sigmas = Vec::with_capacity(p);
    for &mu in mus {
        let (next, sigma) = diagrams.last().unwrap().flip(mu);
        diagrams.push(next);
        sigmas.push(sigma);
    }
    if diagrams[p] != diagrams[0].shift(k) {
        return Err(Error::CycleNotClosed(k));
    }
    let taus = diagrams
        .iter()
        .map(|m| tau_of_diagram_with(cache, m))
        .collect::<Result<Vec<_>>>()?;
    if taus[p].poly.proportional(&taus[0].poly).is_none() {
        return Err(Error::TauNotProportional);
    }
    let a: Vec<i64> = (0..p)
        .map(|i| {
            let next = if i + 1 == p { mus[0] + k } else { mus[i + 1] };
            2 * (mus[i] - next)
        })
        .collect();
    let logs: Vec<QRatFunc> = taus[..p].iter().map(|t| logderiv(&t.poly)).collect();
    let ws = (0..p)
        .map(|i| {
            let sz = RatFunc::from_poly(Poly::monomial(rat(sigmas[i]), 1));
            &(&sz + &logs[(i + 1) % p]) - &logs[i]
        })
        .collect();
    Ok(ChainSolution {
        spec: spec.clone(),
        flip_seq,
        diagrams,
        taus,
        sigmas,
        a,
        delta: 2 * k,
        ws,
    })
}

/// Outcome of [`verify_chain`]; every field must be true for a valid solution.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ChainReport {
    pub equations: Vec<bool>,
    pub closure: bool,
    pub tau_proportional: bool,
    pub sum_rule: bool,
    pub first_integral: bool,
    /// Present only for even p.
    pub alternating_integral: Option<bool>,
}

impl ChainReport {
    pub fn passed(&self) -> bool {
        self.equations.iter().all(|&b| b)
            && self.closure
            && self.tau_proportional
            && self.sum_rule
            && self.first_integral
            && self.alternating_integral != Some(false)
    }
}

/// Substitute the solution into the chain equations exactly.
pub fn verify_chain(sol: &ChainSolution) -> ChainReport {
    let p = sol.p();
    let chain = sol.chain();
    ChainReport {
        equations: chain.residuals().iter().map(RatFunc::is_zero).collect(),
        closure: sol.diagrams[p] == sol.diagrams[0].shift(sol.k()),
        tau_proportional: sol.taus[p].poly.proportional(&sol.taus[0].poly).is_some(),
        sum_rule: sol.a.iter().sum::<i64>() == -sol.delta && sol.delta == 2 * sol.k(),
        first_integral: chain.first_integral().is_zero(),
        alternating_integral: chain.alternating_integral().map(|r| r.is_zero()),
    }
}

/// Result of a bilinear check between `M_1` and `M_2 = M_1 ∪ {m}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearCheck {
    pub epsilon: i64,
    pub holds: bool,
}

/// `D²f·g - 2z Df·g + ε f g = 0` with `f = τ_{M_2}`, `g = τ_{M_1}` and
/// `ε = 2(deg f - deg g)`, where `Df·g = f'g - fg'`.
pub fn verify_bilinear(m1: &MayaDiagram, m: i64) -> Result<BilinearCheck> {
    verify_bilinear_with(HermiteCache::global(), m1, m)
}

pub fn verify_bilinear_with(
    cache: &HermiteCache,
    m1: &MayaDiagram,
    m: i64,
) -> Result<BilinearCheck> {
    if m1.contains(m) {
        return Err(Error::SiteOccupied(m));
    }
    let m2 = m1.flip(m).0;
    let g = tau_of_diagram_with(cache, m1)?.poly;
    let f = tau_of_diagram_with(cache, &m2)?.poly;
    let epsilon = 2 * (f.degree().unwrap() as i64 - g.degree().unwrap() as i64);
    let (f1, g1) = (f.derivative(), g.derivative());
    let (f2, g2) = (f1.derivative(), g1.derivative());
    let two = crate::exact::Integer::from(2);
    let d1 = &(&f1 * &g) - &(&f * &g1);
    let d2 = &(&(&f2 * &g) - &(&f1 * &g1).scale(&two)) + &(&f * &g2);
    let z2 = ZPoly::from_i64s(&[0, 2]);
    let total = &(&d2 - &(&z2 * &d1)) + &(&f * &g).scale(&epsilon.into());
    Ok(BilinearCheck {
        epsilon,
        holds: total.is_zero(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maya::KBlockCoordinates;
    use crate::tau::standard_degree;

    fn build(coords: &str, perm: &[usize]) -> ChainSolution {
        build_cycle(&CycleSpec::parse(coords, perm).unwrap()).unwrap()
    }

    #[test]
    fn gold_chains() {
        let gh = build("0,3,8", &[2, 1, 0]);
        assert_eq!(gh.flip_seq.mus, vec![8, 3, 0]);
        assert_eq!(
            (gh.a.clone(), gh.sigmas.clone()),
            (vec![10, 6, -18], vec![-1, 1, -1])
        );
        let t =
            |s: &[i64]| crate::tau::tau_standard(&MayaDiagram::from_positive(s).unwrap()).unwrap();
        assert!(gh.taus[1]
            .poly
            .proportional(&t(&[3, 4, 5, 6, 7, 8]))
            .is_some());
        assert!(gh.taus[2].poly.proportional(&t(&[4, 5, 6, 7, 8])).is_some());

        let ok = build("0|3|2", &[2, 0, 1]);
        assert_eq!(ok.flip_seq.mus, vec![8, 0, 10]);
        assert_eq!(
            (ok.a.clone(), ok.sigmas.clone()),
            (vec![16, -20, -2], vec![-1, -1, -1])
        );

        let a4 = build("0,2,5,6,7", &[3, 4, 2, 1, 0]);
        assert_eq!(a4.flip_seq.mus, vec![6, 7, 5, 2, 0]);
        assert_eq!(a4.a, vec![-2, 4, 6, 4, -14]);
        assert_eq!(a4.sigmas, vec![1, -1, -1, 1, -1]);

        for sol in [gh, ok, a4] {
            assert!(verify_chain(&sol).passed());
        }
    }

    #[test]
    fn degenerate_cycle() {
        let sol = build("0,1,2,4,4", &[4, 2, 1, 3, 0]);
        assert_eq!(sol.flip_seq.mus, vec![4, 2, 1, 4, 0]);
        assert!(verify_chain(&sol).passed());
    }

    #[test]
    fn tampering_shows_in_residual() {
        let sol = build("0,3,8", &[2, 1, 0]);
        let mut chain = sol.chain();
        chain.a[0] = chain.a[0].clone() + rat(1);
        let res = chain.residuals();
        assert_eq!(res[0], QRatFunc::constant(rat(-1)));
        assert!(res[1].is_zero() && res[2].is_zero());
    }

    #[test]
    fn symmetries() {
        let sol = build("0,3,8", &[2, 1, 0]);
        let chain = sol.chain();
        let mut c = chain.clone();
        for _ in 0..3 {
            c = c.apply(&Symmetry::Cyclic).unwrap();
            assert!(c.residuals().iter().all(RatFunc::is_zero));
        }
        assert_eq!(c, chain);
        let rev = chain.apply(&Symmetry::Reversal).unwrap();
        assert!(rev.residuals().iter().all(RatFunc::is_zero));
        let mut ra = rev.a.clone();
        ra.sort();
        assert_eq!(ra, vec![rat(-10), rat(-6), rat(18)]);
        assert_eq!(chain.apply(&Symmetry::Scaling(rat(1))).unwrap(), chain);
        let sc = chain
            .apply(&Symmetry::Scaling(crate::exact::ratio(2, 3)))
            .unwrap();
        assert!(sc.residuals().iter().all(RatFunc::is_zero));
        assert_eq!(
            chain.apply(&Symmetry::Scaling(rat(0))),
            Err(Error::ZeroScale)
        );
    }

    #[test]
    fn bilinear_examples() {
        for n in 0..8 {
            let b = verify_bilinear(&MayaDiagram::vacuum(), n).unwrap();
            assert_eq!(
                b,
                BilinearCheck {
                    epsilon: 2 * n,
                    holds: true
                }
            );
        }
        let m1 = MayaDiagram::from_positive(&[3, 4, 5, 6, 7]).unwrap();
        let b = verify_bilinear(&m1, 8).unwrap();
        let m2 = MayaDiagram::from_positive(&[3, 4, 5, 6, 7, 8]).unwrap();
        assert_eq!(standard_degree(&m1), 15);
        assert_eq!(standard_degree(&m2), 18);
        assert_eq!(
            b,
            BilinearCheck {
                epsilon: 6,
                holds: true
            }
        );
        assert_eq!(verify_bilinear(&m1, 3), Err(Error::SiteOccupied(3)));
        // a vacancy below the origin
        let m = MayaDiagram::from_frobenius(&[2], &[1]).unwrap();
        assert!(verify_bilinear(&m, -3).unwrap().holds);
    }

    #[test]
    fn bad_specs() {
        let kb = KBlockCoordinates::parse("0,3,8").unwrap();
        assert!(CycleSpec::new(kb.clone(), vec![0, 1]).is_err());
        assert!(CycleSpec::new(kb, vec![0, 0, 1]).is_err());
    }
}
