use std::fmt;

use serde::{Deserialize, Serialize};

use super::MayaDiagram;
use crate::error::{Error, Result};

/// k-block coordinates `(β^{(0)} | … | β^{(k-1)})`: one odd-length
/// non-decreasing list per residue class mod k.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "KBlockJson", into = "KBlockJson")]
pub struct KBlockCoordinates {
    blocks: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct KBlockJson {
    k: usize,
    blocks: Vec<Vec<i64>>,
}

impl TryFrom<KBlockJson> for KBlockCoordinates {
    type Error = Error;
    fn try_from(j: KBlockJson) -> Result<Self> {
        if j.k != j.blocks.len() {
            return Err(Error::InvalidBlocks(format!(
                "k = {} but {} classes",
                j.k,
                j.blocks.len()
            )));
        }
        KBlockCoordinates::new(j.blocks)
    }
}

impl From<KBlockCoordinates> for KBlockJson {
    fn from(c: KBlockCoordinates) -> Self {
        KBlockJson {
            k: c.blocks.len(),
            blocks: c.blocks,
        }
    }
}

impl KBlockCoordinates {
    pub fn new(blocks: Vec<Vec<i64>>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidBlocks("no residue classes".into()));
        }
        for b in &blocks {
            if b.len() % 2 == 0 {
                return Err(Error::InvalidBlocks(format!("class {b:?} has even length")));
            }
            if b.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidBlocks(format!("class {b:?} is decreasing")));
            }
        }
        Ok(Self { blocks })
    }

    /// Parse `"0,3,4|2"`: classes separated by `|`, entries by `,`.
    pub fn parse(s: &str) -> Result<Self> {
        let blocks = s
            .split('|')
            .map(|class| {
                class
                    .split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<i64>()
                            .map_err(|_| Error::InvalidBlocks(format!("bad coordinate {x:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(blocks)
    }

    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<i64>] {
        &self.blocks
    }

    /// `(p_0, …, p_{k-1})`, the block lengths.
    pub fn signature(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn p(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// True when some class repeats an entry.
    pub fn is_degenerate(&self) -> bool {
        self.blocks
            .iter()
            .any(|b| b.windows(2).any(|w| w[0] == w[1]))
    }

    /// `Θ(Ξ(β^{(0)}), …, Ξ(β^{(k-1)}))`
    pub fn diagram(&self) -> MayaDiagram {
        let parts: Vec<MayaDiagram> = self
            .blocks
            .iter()
            .map(|b| MayaDiagram::xi(b).expect("validated"))
            .collect();
        MayaDiagram::interlace(&parts)
    }

    /// Flip sites `kβ^{(i)}_j + i`, class by class, ascending within a class.
    pub fn canonical_flip_sequence(&self) -> FlipSequence {
        let k = self.k() as i64;
        let mus = self
            .blocks
            .iter()
            .enumerate()
            .flat_map(|(i, b)| b.iter().map(move |&beta| k * beta + i as i64))
            .collect();
        FlipSequence { mus, k }
    }
}

impl fmt::Display for KBlockCoordinates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let classes: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{}", classes.join("|"))
    }
}

/// A sequence of flip sites taking a diagram to its translate by `k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct FlipSequence {
    pub mus: Vec<i64>,
    pub k: i64,
}

impl FlipSequence {
    pub fn len(&self) -> usize {
        self.mus.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mus.is_empty()
    }

    /// Reorder as `(μ_{π_0}, …, μ_{π_{p-1}})`.
    pub fn permuted(&self, perm: &[usize]) -> Result<FlipSequence> {
        check_permutation(perm, self.len())?;
        Ok(FlipSequence {
            mus: perm.iter().map(|&i| self.mus[i]).collect(),
            k: self.k,
        })
    }

    /// Apply every flip in order.
    pub fn apply(&self, m: &MayaDiagram) -> MayaDiagram {
        m.multi_flip(self.mus.iter().copied())
    }

    /// Whether the flips carry `m` to `m + k`.
    pub fn closes(&self, m: &MayaDiagram) -> bool {
        self.apply(m) == m.shift(self.k)
    }
}

pub(crate) fn check_permutation(perm: &[usize], p: usize) -> Result<()> {
    if perm.len() != p {
        return Err(Error::InvalidPermutation(format!(
            "length {} but p = {p}",
            perm.len()
        )));
    }
    let mut seen = vec![false; p];
    for &i in perm {
        if i >= p || std::mem::replace(&mut seen[i], true) {
            return Err(Error::InvalidPermutation(format!(
                "{perm:?} is not a bijection of 0..{p}"
            )));
        }
    }
    Ok(())
}

/// Shifts `k` for which `(p, k)`-cyclic diagrams exist: `p, p-2, …` down to
/// 1 or 2.
pub fn admissible_shifts(p: usize) -> Vec<usize> {
    (1..=p).rev().step_by(2).collect()
}

/// Ordered compositions of `p` into `k` odd positive parts, lexicographic.
pub fn odd_compositions(p: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut part = 1;
        while part + (slots - 1) <= rest {
            cur.push(part);
            rec(rest - part, slots - 1, cur, out);
            cur.pop();
            part += 2;
        }
    }
    let mut out = Vec::new();
    if k > 0 {
        rec(p, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Sequences of length `len` in `[lo, hi]`, strictly or weakly increasing,
/// lexicographic.
fn monotone_sequences(len: usize, lo: i64, hi: i64, strict: bool) -> Vec<Vec<i64>> {
    fn rec(
        len: usize,
        lo: i64,
        hi: i64,
        strict: bool,
        cur: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let start = match cur.last() {
            None => lo,
            Some(&x) if strict => x + 1,
            Some(&x) => x,
        };
        for v in start..=hi {
            cur.push(v);
            rec(len, lo, hi, strict, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, lo, hi, strict, &mut Vec::new(), &mut out);
    out
}

/// Lazily produced k-block coordinates, see [`enumerate_cyclic`].
pub type CyclicEnumerator = Box<dyn Iterator<Item = KBlockCoordinates> + Send>;

/// Every normalized `(p, k)`-cyclic coordinate tuple with entries in
/// `[0, max_coord]`. Normalization puts the smallest flip site at `0`, that
/// is `β^{(0)}_0 = 0`. Signatures run in lexicographic order, and within a
/// signature the classes run as an odometer with the last class fastest.
pub fn enumerate_cyclic(
    p: usize,
    k: usize,
    max_coord: i64,
    degenerate: bool,
) -> Result<CyclicEnumerator> {
    if k == 0 || !admissible_shifts(p).contains(&k) {
        return Err(Error::InvalidShift(format!(
            "k = {k} is not admissible for p = {p}"
        )));
    }
    if max_coord < 0 {
        return Err(Error::InvalidShift(format!(
            "max coordinate {max_coord} is negative"
        )));
    }
    let iter = odd_compositions(p, k).into_iter().flat_map(move |sig| {
        let choices: Vec<Vec<Vec<i64>>> = sig
            .iter()
            .enumerate()
            .map(|(i, &len)| {
                let mut seqs = monotone_sequences(len, 0, max_coord, !degenerate);
                if i == 0 {
                    seqs.retain(|s| s[0] == 0);
                }
                seqs
            })
            .collect();
        Odometer::new(choices)
    });
    Ok(Box::new(iter))
}

struct Odometer {
    choices: Vec<Vec<Vec<i64>>>,
    pos: Option<Vec<usize>>,
}

impl Odometer {
    fn new(choices: Vec<Vec<Vec<i64>>>) -> Self {
        let pos = choices
            .iter()
            .all(|c| !c.is_empty())
            .then(|| vec![0; choices.len()]);
        Self { choices, pos }
    }
}

impl Iterator for Odometer {
    type Item = KBlockCoordinates;

    fn next(&mut self) -> Option<KBlockCoordinates> {
        let pos = self.pos.as_mut()?;
        let item = KBlockCoordinates {
            blocks: pos
                .iter()
                .zip(&self.choices)
                .map(|(&i, c)| c[i].clone())
                .collect(),
        };
        let mut d = pos.len();
        loop {
            if d == 0 {
                self.pos = None;
                break;
            }
            d -= 1;
            pos[d] += 1;
            if pos[d] < self.choices[d].len() {
                break;
            }
            pos[d] = 0;
        }
        Some(item)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn canonical_sequences() {
        let gh = KBlockCoordinates::parse("0,3,8").unwrap();
        assert_eq!(gh.canonical_flip_sequence().mus, vec![0, 3, 8]);
        let ok = KBlockCoordinates::parse("0|3|2").unwrap();
        assert_eq!(ok.canonical_flip_sequence().mus, vec![0, 10, 8]);
        let ex = KBlockCoordinates::parse("0|3|1|2").unwrap();
        assert_eq!(ex.canonical_flip_sequence().mus, vec![0, 13, 6, 11]);
        for c in [gh, ok, ex] {
            assert!(c.canonical_flip_sequence().closes(&c.diagram()));
        }
    }

    #[test]
    fn degenerate_sequence_closes() {
        let c = KBlockCoordinates::parse("0,1,2,4,4").unwrap();
        assert!(c.is_degenerate());
        let mu = c.canonical_flip_sequence();
        let perm = mu.permuted(&[4, 2, 1, 3, 0]).unwrap();
        assert_eq!(perm.mus, vec![4, 2, 1, 4, 0]);
        assert!(perm.closes(&c.diagram()));
    }

    #[test]
    fn shifts() {
        assert_eq!(admissible_shifts(3), vec![3, 1]);
        assert_eq!(admissible_shifts(4), vec![4, 2]);
        assert_eq!(admissible_shifts(5), vec![5, 3, 1]);
        assert_eq!(
            odd_compositions(5, 3),
            vec![vec![1, 1, 3], vec![1, 3, 1], vec![3, 1, 1]]
        );
        assert_eq!(odd_compositions(4, 2), vec![vec![1, 3], vec![3, 1]]);
        assert!(enumerate_cyclic(4, 3, 3, false).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let all: Vec<_> = enumerate_cyclic(1, 1, 0, false).unwrap().collect();
        assert_eq!(all, vec![KBlockCoordinates::parse("0").unwrap()]);
        let target = KBlockCoordinates::parse("0|3|2").unwrap();
        assert!(enumerate_cyclic(3, 3, 4, false)
            .unwrap()
            .any(|c| c == target));
    }

    /// Exhaustive search over diagrams `ℤ_{<0} ∪ S`, `S ⊆ [1, bound)`.
    fn brute_force_unit_cyclic(p: usize, bound: i64) -> BTreeSet<MayaDiagram> {
        let sites: Vec<i64> = (1..bound).collect();
        let mut out = BTreeSet::new();
        for mask in 0u32..(1 << sites.len()) {
            let s: Vec<i64> = (0..sites.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| sites[i])
                .collect();
            let m = MayaDiagram::from_positive(&s).unwrap();
            if m.upsilon(&m.shift(1)).len() == p {
                out.insert(m);
            }
        }
        out
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for (p, max) in [(3, 3), (3, 5), (5, 6)] {
            let found: BTreeSet<MayaDiagram> = enumerate_cyclic(p, 1, max, false)
                .unwrap()
                .map(|c| c.diagram())
                .collect();
            assert_eq!(
                found,
                brute_force_unit_cyclic(p, max),
                "p = {p}, max = {max}"
            );
        }
    }

    #[test]
    fn enumerated_diagrams_are_cyclic() {
        for (p, k) in [(3, 1), (3, 3), (4, 2), (4, 4), (5, 1), (5, 3), (5, 5)] {
            for c in enumerate_cyclic(p, k, 3, false).unwrap() {
                let m = c.diagram();
                let u = m.upsilon(&m.shift(k as i64));
                assert!(u.len() <= p && (p - u.len()) % 2 == 0);
                assert_eq!(m.cyclic_signature(k as i64).unwrap(), (c.signature(), p));
                assert!(c.canonical_flip_sequence().closes(&m));
                assert_eq!(u.first(), Some(&0));
            }
        }
    }

    #[test]
    fn json_shape() {
        let c = KBlockCoordinates::parse("0,3,4|2").unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"k":2,"blocks":[[0,3,4],[2]]}"#);
        assert_eq!(serde_json::from_str::<KBlockCoordinates>(&s).unwrap(), c);
        assert!(serde_json::from_str::<KBlockCoordinates>(r#"{"k":3,"blocks":[[0]]}"#).is_err());
    }
}
