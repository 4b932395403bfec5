//! Spec in, certified solution out.

use serde::{Deserialize, Serialize};

use crate::chain::{build_cycle_with, verify_chain, ChainReport, ChainSolution, CycleSpec};
use crate::error::{Error, Result};
use crate::hermite::HermiteCache;
use crate::json::{self, ChainJson, NYJson, P4Json, P5Json, SolutionDoc};
use crate::painleve::{
    to_noumi_yamada, to_p4, to_p5, verify_ny, verify_p4, verify_p5, NYReport, NYSolution,
    P4Solution, P5Solution,
};

/// Everything derived from one spec.
#[derive(Clone, Debug)]
pub struct Solved {
    pub chain: ChainSolution,
    pub ny: NYSolution,
    pub p4: Option<P4Solution>,
    pub p5: Option<P5Solution>,
    pub report: SolutionReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionReport {
    pub chain: ChainReport,
    pub noumi_yamada: NYReport,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p4: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p5: Option<bool>,
}

impl SolutionReport {
    pub fn passed(&self) -> bool {
        self.chain.passed()
            && self.noumi_yamada.passed()
            && self.p4 != Some(false)
            && self.p5 != Some(false)
    }
}

fn report(
    chain: &ChainSolution,
    ny: &NYSolution,
    p4: Option<&P4Solution>,
    p5: Option<&P5Solution>,
) -> Result<SolutionReport> {
    Ok(SolutionReport {
        chain: verify_chain(chain),
        noumi_yamada: verify_ny(ny),
        p4: p4.map(verify_p4).transpose()?,
        p5: p5.map(verify_p5).transpose()?,
    })
}

pub fn solve(spec: &CycleSpec) -> Result<Solved> {
    solve_with(HermiteCache::global(), spec)
}

/// Build the chain, its Noumi-Yamada form and, for p = 3 or 4, the scalar
/// reduction, then verify all of them.
pub fn solve_with(cache: &HermiteCache, spec: &CycleSpec) -> Result<Solved> {
    let chain = build_cycle_with(cache, spec)?;
    let ny = to_noumi_yamada(&chain)?;
    let p4 = (chain.p() == 3).then(|| to_p4(&chain)).transpose()?;
    let p5 = (chain.p() == 4).then(|| to_p5(&chain)).transpose()?;
    let report = report(&chain, &ny, p4.as_ref(), p5.as_ref())?;
    Ok(Solved {
        chain,
        ny,
        p4,
        p5,
        report,
    })
}

impl Solved {
    pub fn document(&self) -> SolutionDoc {
        let spec = &self.chain.spec;
        SolutionDoc {
            chain: ChainJson::from(&self.chain),
            noumi_yamada: NYJson::new(&self.ny, spec),
            p4: self.p4.as_ref().map(|s| P4Json::new(s, spec)),
            p5: self.p5.as_ref().map(|s| P5Json::new(s, spec)),
        }
    }
}

/// Verify a document using only what it contains.
pub fn verify_document(doc: &SolutionDoc) -> Result<SolutionReport> {
    let chain = doc.chain.to_solution()?;
    let ny = doc.noumi_yamada.to_solution()?;
    if ny.fs.len() != chain.p() {
        return Err(Error::Json(
            "Noumi-Yamada period differs from the chain".into(),
        ));
    }
    let p4 = doc.p4.as_ref().map(P4Json::to_solution).transpose()?;
    let p5 = doc.p5.as_ref().map(P5Json::to_solution).transpose()?;
    report(&chain, &ny, p4.as_ref(), p5.as_ref())
}

/// A solution document with the report it was emitted with.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    #[serde(flatten)]
    pub solution: SolutionDoc,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub report: Option<SolutionReport>,
}

impl Solved {
    pub fn certificate(&self) -> Certificate {
        Certificate {
            solution: self.document(),
            report: Some(self.report.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reverified {
    pub report: SolutionReport,
    /// `None` when the input carried no report.
    pub matches_embedded: Option<bool>,
    /// Parsing and re-serializing twice gives the same text.
    pub stable: bool,
}

impl Reverified {
    pub fn passed(&self) -> bool {
        self.report.passed() && self.matches_embedded != Some(false) && self.stable
    }
}

/// Parse a certificate or bare document and check it from scratch.
pub fn reverify(text: &str) -> Result<Reverified> {
    let cert: Certificate = json::from_str(text)?;
    let once = json::to_string_pretty(&cert)?;
    let twice = json::to_string_pretty(&json::from_str::<Certificate>(&once)?)?;
    let report = verify_document(&cert.solution)?;
    Ok(Reverified {
        matches_embedded: cert.report.as_ref().map(|r| *r == report),
        report,
        stable: once == twice,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::json::{from_str, to_string_pretty};

    #[test]
    fn document_round_trip() {
        for (coords, perm) in [
            ("0,3,8", &[2, 1, 0][..]),
            ("0|3|1|2", &[0, 1, 3, 2]),
            ("0,2,5,6,7", &[3, 4, 2, 1, 0]),
        ] {
            let solved = solve(&CycleSpec::parse(coords, perm).unwrap()).unwrap();
            assert!(solved.report.passed());
            let text = to_string_pretty(&solved.document()).unwrap();
            let doc: SolutionDoc = from_str(&text).unwrap();
            assert_eq!(to_string_pretty(&doc).unwrap(), text);
            assert_eq!(verify_document(&doc).unwrap(), solved.report);
        }
    }

    #[test]
    fn tampered_scalar_fails() {
        let solved = solve(&CycleSpec::parse("0|3|2", &[2, 0, 1]).unwrap()).unwrap();
        let mut doc = solved.document();
        doc.p4.as_mut().unwrap().params.a = serde_json::json!("7/1");
        let r = verify_document(&doc).unwrap();
        assert_eq!(r.p4, Some(false));
        assert!(!r.passed());
    }

    #[test]
    fn certificate_round_trip() {
        let solved = solve(&CycleSpec::parse("0|3,4,6", &[0, 1, 3, 2]).unwrap()).unwrap();
        let text = to_string_pretty(&solved.certificate()).unwrap();
        let r = reverify(&text).unwrap();
        assert!(r.passed());
        assert_eq!(r.matches_embedded, Some(true));
        let bare = to_string_pretty(&solved.document()).unwrap();
        assert_eq!(reverify(&bare).unwrap().matches_embedded, None);
        let forged = text.replacen("\"closure\": true", "\"closure\": false", 1);
        assert_ne!(forged, text);
        assert_eq!(reverify(&forged).unwrap().matches_embedded, Some(false));
    }
}
