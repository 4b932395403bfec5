//! Maya diagrams: subsets of ℤ that contain every sufficiently negative
//! integer and no sufficiently positive one.

mod cyclic;
mod render;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub(crate) use cyclic::check_permutation;
pub use cyclic::{
    admissible_shifts, enumerate_cyclic, odd_compositions, CyclicEnumerator, FlipSequence,
    KBlockCoordinates,
};

/// A Maya diagram stored through its Frobenius symbol: `minus` holds
/// `-m-1` for every vacant negative site `m`, `plus` holds every occupied
/// non-negative site.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "FrobeniusJson", into = "FrobeniusJson")]
pub struct MayaDiagram {
    minus: BTreeSet<i64>,
    plus: BTreeSet<i64>,
}

#[derive(Serialize, Deserialize)]
struct FrobeniusJson {
    minus: Vec<i64>,
    plus: Vec<i64>,
}

impl TryFrom<FrobeniusJson> for MayaDiagram {
    type Error = Error;
    fn try_from(j: FrobeniusJson) -> Result<Self> {
        MayaDiagram::from_frobenius(&j.minus, &j.plus)
    }
}

impl From<MayaDiagram> for FrobeniusJson {
    fn from(m: MayaDiagram) -> Self {
        FrobeniusJson {
            minus: m.frob_minus(),
            plus: m.frob_plus(),
        }
    }
}

/// Block coordinates `β_0 < β_1 < … < β_{2g}` of a Maya diagram
/// `(-∞, β_0) ∪ [β_1, β_2) ∪ … ∪ [β_{2g-1}, β_{2g})`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BlockCoordinates(Vec<i64>);

impl BlockCoordinates {
    /// Odd length, strictly increasing.
    pub fn new(betas: Vec<i64>) -> Result<Self> {
        if betas.len() % 2 == 0 {
            return Err(Error::InvalidBlocks(format!("even length {}", betas.len())));
        }
        if betas.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidBlocks(format!(
                "{betas:?} is not strictly increasing"
            )));
        }
        Ok(Self(betas))
    }

    pub fn betas(&self) -> &[i64] {
        &self.0
    }

    pub fn genus(&self) -> usize {
        self.0.len() / 2
    }
}

fn check_frobenius(xs: &[i64], what: &str) -> Result<BTreeSet<i64>> {
    let mut set = BTreeSet::new();
    for &x in xs {
        if x < 0 {
            return Err(Error::InvalidFrobenius(format!(
                "negative entry {x} in {what}"
            )));
        }
        if !set.insert(x) {
            return Err(Error::InvalidFrobenius(format!(
                "repeated entry {x} in {what}"
            )));
        }
    }
    Ok(set)
}

impl MayaDiagram {
    /// The vacuum `ℤ_{<0}`.
    pub fn vacuum() -> Self {
        Self {
            minus: BTreeSet::new(),
            plus: BTreeSet::new(),
        }
    }

    /// Build from the Frobenius lists `(s | t)`; entries must be distinct and
    /// non-negative, in any order.
    pub fn from_frobenius(s: &[i64], t: &[i64]) -> Result<Self> {
        Ok(Self {
            minus: check_frobenius(s, "s")?,
            plus: check_frobenius(t, "t")?,
        })
    }

    /// `ℤ_{<0}` with the given non-negative sites filled.
    pub fn from_positive(t: &[i64]) -> Result<Self> {
        Self::from_frobenius(&[], t)
    }

    /// Build from a predicate on `[lo, hi)`; sites below `lo` are occupied
    /// and sites from `hi` on are vacant.
    pub fn from_window(lo: i64, hi: i64, member: impl Fn(i64) -> bool) -> Self {
        let mut m = Self::vacuum();
        for x in lo.min(0)..hi.max(0) {
            let inside = if x < lo {
                true
            } else if x >= hi {
                false
            } else {
                member(x)
            };
            if x < 0 && !inside {
                m.minus.insert(-x - 1);
            } else if x >= 0 && inside {
                m.plus.insert(x);
            }
        }
        m
    }

    /// A window `[lo, hi)` outside of which the diagram agrees with the vacuum
    /// pattern: occupied below, vacant above.
    pub fn window(&self) -> (i64, i64) {
        let lo = self.minus.last().map_or(0, |s| -s - 1);
        let hi = self.plus.last().map_or(0, |t| t + 1);
        (lo, hi)
    }

    pub fn contains(&self, m: i64) -> bool {
        if m >= 0 {
            self.plus.contains(&m)
        } else {
            !self.minus.contains(&(-m - 1))
        }
    }

    /// Frobenius `s` list, descending.
    pub fn frob_minus(&self) -> Vec<i64> {
        self.minus.iter().rev().copied().collect()
    }

    /// Frobenius `t` list, descending.
    pub fn frob_plus(&self) -> Vec<i64> {
        self.plus.iter().rev().copied().collect()
    }

    pub fn index(&self) -> i64 {
        self.plus.len() as i64 - self.minus.len() as i64
    }

    /// No vacant negative sites and `0` vacant.
    pub fn is_standard(&self) -> bool {
        self.minus.is_empty() && !self.plus.contains(&0)
    }

    /// Smallest vacant site.
    pub fn first_vacancy(&self) -> i64 {
        let (lo, hi) = self.window();
        (lo..=hi)
            .find(|&x| !self.contains(x))
            .expect("diagram has a vacancy")
    }

    /// Translate to standard form. Returns `(M - c, c)` where `c` is the
    /// smallest vacant site of `M`.
    pub fn to_standard(&self) -> (Self, i64) {
        let c = self.first_vacancy();
        (self.shift(-c), c)
    }

    pub fn shift(&self, k: i64) -> Self {
        let (lo, hi) = self.window();
        Self::from_window(lo + k, hi + k, |x| self.contains(x - k))
    }

    /// Toggle site `m`; `σ = +1` when `m` was occupied before the flip.
    pub fn flip(&self, m: i64) -> (Self, i64) {
        let mut out = self.clone();
        let was = self.contains(m);
        if m >= 0 {
            if was {
                out.plus.remove(&m);
            } else {
                out.plus.insert(m);
            }
        } else if was {
            out.minus.insert(-m - 1);
        } else {
            out.minus.remove(&(-m - 1));
        }
        (out, if was { 1 } else { -1 })
    }

    pub fn multi_flip(&self, sites: impl IntoIterator<Item = i64>) -> Self {
        sites.into_iter().fold(self.clone(), |m, s| m.flip(s).0)
    }

    /// Symmetric difference `Υ(M, M')`.
    pub fn upsilon(&self, other: &Self) -> BTreeSet<i64> {
        let (l1, h1) = self.window();
        let (l2, h2) = other.window();
        (l1.min(l2)..h1.max(h2))
            .filter(|&x| self.contains(x) != other.contains(x))
            .collect()
    }

    pub fn block_coordinates(&self) -> BlockCoordinates {
        let (lo, hi) = self.window();
        let mut betas = Vec::new();
        let mut inside = true;
        for x in lo..=hi {
            if self.contains(x) != inside {
                betas.push(x);
                inside = !inside;
            }
        }
        BlockCoordinates(betas)
    }

    pub fn genus(&self) -> usize {
        self.block_coordinates().genus()
    }

    pub fn from_blocks(b: &BlockCoordinates) -> Self {
        Self::xi(b.betas()).expect("valid block coordinates")
    }

    /// `Ξ(β)` for a non-decreasing odd-length list; repeated entries give
    /// empty intervals.
    pub fn xi(betas: &[i64]) -> Result<Self> {
        if betas.len() % 2 == 0 {
            return Err(Error::InvalidBlocks(format!("even length {}", betas.len())));
        }
        if betas.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidBlocks(format!("{betas:?} is decreasing")));
        }
        let b0 = betas[0];
        let lo = b0;
        let hi = *betas.last().unwrap();
        let intervals: Vec<(i64, i64)> = betas[1..].chunks(2).map(|c| (c[0], c[1])).collect();
        Ok(Self::from_window(lo, hi, |x| {
            intervals.iter().any(|&(a, b)| a <= x && x < b)
        }))
    }

    /// `Θ(M^0, …, M^{k-1}) = ⋃ (k·M^i + i)`.
    pub fn interlace(parts: &[MayaDiagram]) -> Self {
        let k = parts.len() as i64;
        assert!(k >= 1, "interlacing needs at least one diagram");
        let (mut lo, mut hi) = (0, 0);
        for p in parts {
            let (l, h) = p.window();
            lo = lo.min(k * l);
            hi = hi.max(k * h);
        }
        Self::from_window(lo, hi, |x| {
            let (q, r) = (x.div_euclid(k), x.rem_euclid(k));
            parts[r as usize].contains(q)
        })
    }

    /// `M^{(i)} = { m : km + i ∈ M }` for `i = 0..k`.
    pub fn modular_decompose(&self, k: i64) -> Result<Vec<MayaDiagram>> {
        if k <= 0 {
            return Err(Error::InvalidShift(format!("modulus {k} must be positive")));
        }
        let (lo, hi) = self.window();
        Ok((0..k)
            .map(|i| {
                let (l, h) = (lo.div_euclid(k) - 1, hi.div_euclid(k) + 1);
                Self::from_window(l, h, |m| self.contains(k * m + i))
            })
            .collect())
    }

    /// Per-class `p_i = 2 g_i + 1` and their sum `p`.
    pub fn cyclic_signature(&self, k: i64) -> Result<(Vec<usize>, usize)> {
        let sig: Vec<usize> = self
            .modular_decompose(k)?
            .iter()
            .map(|m| 2 * m.genus() + 1)
            .collect();
        let p = sig.iter().sum();
        Ok((sig, p))
    }

    /// Positive Frobenius entries if standard; used to index τ-functions.
    pub fn positive_sites(&self) -> Vec<i64> {
        self.plus.iter().copied().collect()
    }
}

impl fmt::Display for MayaDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.frob_minus().iter().map(|x| x.to_string()).collect();
        let t: Vec<String> = self.frob_plus().iter().map(|x| x.to_string()).collect();
        write!(f, "({} | {})", s.join(","), t.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn xi(b: &[i64]) -> MayaDiagram {
        MayaDiagram::xi(b).unwrap()
    }

    #[test]
    fn frobenius_examples() {
        let v = MayaDiagram::from_frobenius(&[], &[]).unwrap();
        assert_eq!(v, MayaDiagram::vacuum());
        assert_eq!(v.index(), 0);
        let gh = MayaDiagram::from_frobenius(&[], &[7, 6, 5, 4, 3]).unwrap();
        assert_eq!(gh.index(), 5);
        assert_eq!(gh, xi(&[0, 3, 8]));
        let m = MayaDiagram::from_frobenius(&[1], &[0]).unwrap();
        assert!(!m.contains(-2) && m.contains(-1) && m.contains(0) && !m.contains(1));
        assert_eq!(m.index(), 0);
        assert!(MayaDiagram::from_frobenius(&[1, 1], &[]).is_err());
        assert!(MayaDiagram::from_frobenius(&[], &[-1]).is_err());
    }

    #[test]
    fn shifts_and_flips() {
        assert_eq!(MayaDiagram::vacuum().shift(0), MayaDiagram::vacuum());
        assert_eq!(xi(&[0, 3, 8]).shift(1), xi(&[1, 4, 9]));
        let (m1, s1) = xi(&[0, 3, 8]).flip(8);
        assert_eq!((m1.clone(), s1), (xi(&[0, 3, 9]), -1));
        let (m2, s2) = m1.flip(3);
        assert_eq!((m2, s2), (xi(&[0, 4, 9]), 1));
    }

    #[test]
    fn upsilon_examples() {
        let m = xi(&[0, 3, 8]);
        assert!(m.upsilon(&m).is_empty());
        assert_eq!(m.upsilon(&m.shift(1)), BTreeSet::from([0, 3, 8]));
        let k = KBlockCoordinates::parse("0,3,4|2").unwrap().diagram();
        assert_eq!(k.upsilon(&k.shift(2)), BTreeSet::from([0, 5, 6, 8]));
    }

    #[test]
    fn block_examples() {
        assert_eq!(MayaDiagram::vacuum().block_coordinates().betas(), &[0]);
        let g = xi(&[2, 3, 5, 7, 10]);
        assert_eq!(g.block_coordinates().betas(), &[2, 3, 5, 7, 10]);
        assert_eq!(g.genus(), 2);
        assert_eq!(xi(&[0, 3, 8]).block_coordinates().betas(), &[0, 3, 8]);
        assert!(BlockCoordinates::new(vec![0, 1]).is_err());
        assert!(BlockCoordinates::new(vec![0, 2, 1]).is_err());
        // degenerate entries collapse
        assert_eq!(xi(&[0, 2, 2]), MayaDiagram::vacuum());
    }

    #[test]
    fn interlacing_example() {
        let parts = [xi(&[0, 1, 4]), xi(&[-1, 1, 3, 5, 6]), xi(&[4])];
        let theta = MayaDiagram::interlace(&parts);
        assert_eq!(theta, xi(&[-2, -1, 0, 2, 10, 11, 12, 16, 17]));
        assert_eq!(theta.modular_decompose(3).unwrap(), parts.to_vec());
        assert_eq!(MayaDiagram::interlace(&parts[..1]), parts[0]);
        assert!(theta.modular_decompose(0).is_err());
    }

    #[test]
    fn signature_examples() {
        assert_eq!(
            MayaDiagram::vacuum().cyclic_signature(1).unwrap(),
            (vec![1], 1)
        );
        let okamoto = KBlockCoordinates::parse("0|3|2").unwrap().diagram();
        assert_eq!(okamoto.cyclic_signature(3).unwrap(), (vec![1, 1, 1], 3));
        let m = KBlockCoordinates::parse("0|3|1,2,4").unwrap().diagram();
        assert_eq!(m.cyclic_signature(3).unwrap(), (vec![1, 1, 3], 5));
    }

    #[test]
    fn standard_form() {
        let m = xi(&[2, 3, 5]);
        let (s, c) = m.to_standard();
        assert_eq!(c, 2);
        assert!(s.is_standard());
        assert_eq!(s.shift(c), m);
        assert!(MayaDiagram::vacuum().is_standard());
        assert!(!xi(&[1]).is_standard());
    }

    pub(crate) fn arb_diagram() -> impl Strategy<Value = MayaDiagram> {
        (
            prop::collection::btree_set(0i64..8, 0..4),
            prop::collection::btree_set(0i64..8, 0..4),
        )
            .prop_map(|(s, t)| {
                let s: Vec<i64> = s.into_iter().collect();
                let t: Vec<i64> = t.into_iter().collect();
                MayaDiagram::from_frobenius(&s, &t).unwrap()
            })
    }

    proptest! {
        #[test]
        fn shift_laws(m in arb_diagram(), k in -5i64..=5) {
            prop_assert_eq!(m.shift(k).index(), m.index() + k);
            prop_assert_eq!(m.shift(k).shift(-k), m.clone());
            prop_assert_eq!(MayaDiagram::from_blocks(&m.block_coordinates()), m.clone());
            let (f, _) = m.flip(4);
            prop_assert_eq!(f.flip(4).0, m);
        }

        #[test]
        fn upsilon_connects(a in arb_diagram(), b in arb_diagram()) {
            let u = a.upsilon(&b);
            prop_assert_eq!(a.multi_flip(u.iter().copied()), b.clone());
            prop_assert_eq!(b.multi_flip(u.iter().copied()), a.clone());
        }

        #[test]
        fn blocks_are_unit_shift_sites(m in arb_diagram()) {
            let sites: BTreeSet<i64> = m.block_coordinates().betas().iter().copied().collect();
            prop_assert_eq!(sites, m.upsilon(&m.shift(1)));
        }

        #[test]
        fn interlace_round_trip(parts in prop::collection::vec(arb_diagram(), 1..=5), m in arb_diagram(), k in 1i64..=5) {
            let k_parts = parts.len() as i64;
            prop_assert_eq!(MayaDiagram::interlace(&parts).modular_decompose(k_parts).unwrap(), parts);
            prop_assert_eq!(MayaDiagram::interlace(&m.modular_decompose(k).unwrap()), m);
        }

        #[test]
        fn json_round_trip(m in arb_diagram()) {
            let s = serde_json::to_string(&m).unwrap();
            prop_assert_eq!(serde_json::from_str::<MayaDiagram>(&s).unwrap(), m);
        }
    }
}
