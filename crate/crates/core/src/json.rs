//! JSON documents for polynomials, τ-functions, chains and their reductions.
//!
//! Rationals are always written as `"num/den"` strings so that output is
//! stable under a parse/serialize round trip.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::chain::{ChainSolution, CycleSpec};
use crate::error::{Error, Result};
use crate::exact::{
    parse_rational, rational_to_string, ExactScalar, Field, Integer, Poly, RatFunc, Rational, Ring,
};
use crate::maya::{FlipSequence, KBlockCoordinates, MayaDiagram};
use crate::painleve::{NYSolution, P4Solution, P5Solution};
use crate::tau::TauFunction;

fn bad(what: impl Into<String>) -> Error {
    Error::Json(what.into())
}

fn rat_value(q: &Rational) -> Value {
    Value::String(rational_to_string(q))
}

fn value_rat(v: &Value) -> Result<Rational> {
    v.as_str()
        .and_then(parse_rational)
        .ok_or_else(|| bad(format!("expected \"num/den\", got {v}")))
}

/// Coefficient types that have a JSON form.
pub trait JsonCoeff: Ring {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

impl JsonCoeff for Rational {
    fn to_json(&self) -> Value {
        rat_value(self)
    }

    fn from_json(v: &Value) -> Result<Self> {
        value_rat(v)
    }
}

impl JsonCoeff for Integer {
    fn to_json(&self) -> Value {
        rat_value(&Rational::from_integer(self.clone()))
    }

    fn from_json(v: &Value) -> Result<Self> {
        let q = value_rat(v)?;
        q.is_integer()
            .then(|| q.to_integer())
            .ok_or_else(|| bad(format!("{v} is not an integer")))
    }
}

impl JsonCoeff for ExactScalar {
    /// Rational values stay plain strings; others become `{"a","b","m"}`.
    fn to_json(&self) -> Value {
        match self.to_rational() {
            Some(q) => rat_value(&q),
            None => serde_json::json!({
                "a": rational_to_string(self.rational_part()),
                "b": rational_to_string(self.surd_part()),
                "m": self.radicand(),
            }),
        }
    }

    fn from_json(v: &Value) -> Result<Self> {
        if v.is_string() {
            return Ok(Self::rational(value_rat(v)?));
        }
        let m = v
            .get("m")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("scalar needs integer \"m\""))?;
        let part = |k: &str| {
            v.get(k)
                .ok_or_else(|| bad(format!("scalar needs \"{k}\"")))
                .and_then(value_rat)
        };
        Ok(Self::new(part("a")?, part("b")?, m))
    }
}

/// Coefficients in ascending degree.
pub fn poly_to_json<R: JsonCoeff>(p: &Poly<R>) -> Value {
    Value::Array(p.coeffs().iter().map(JsonCoeff::to_json).collect())
}

pub fn poly_from_json<R: JsonCoeff>(v: &Value) -> Result<Poly<R>> {
    let cs = v
        .as_array()
        .ok_or_else(|| bad("polynomial must be an array"))?;
    Ok(Poly::new(
        cs.iter().map(R::from_json).collect::<Result<_>>()?,
    ))
}

pub fn ratfunc_to_json<F: Field + JsonCoeff>(r: &RatFunc<F>) -> Value {
    serde_json::json!({ "num": poly_to_json(r.numer()), "den": poly_to_json(r.denom()) })
}

pub fn ratfunc_from_json<F: Field + JsonCoeff>(v: &Value) -> Result<RatFunc<F>> {
    let part = |k: &str| {
        v.get(k)
            .ok_or_else(|| bad(format!("rational function needs \"{k}\"")))
    };
    RatFunc::new(poly_from_json(part("num")?)?, poly_from_json(part("den")?)?)
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct SpecJson {
    pub blocks: KBlockCoordinates,
    pub perm: Vec<usize>,
}

impl From<&CycleSpec> for SpecJson {
    fn from(s: &CycleSpec) -> Self {
        Self {
            blocks: s.kblocks.clone(),
            perm: s.perm.clone(),
        }
    }
}

impl SpecJson {
    pub fn to_spec(&self) -> Result<CycleSpec> {
        CycleSpec::new(self.blocks.clone(), self.perm.clone())
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct TauJson {
    pub diagram: MayaDiagram,
    pub poly: Value,
    pub degree: usize,
}

impl From<&TauFunction> for TauJson {
    fn from(t: &TauFunction) -> Self {
        Self {
            diagram: t.diagram.clone(),
            poly: poly_to_json(&t.poly),
            degree: t.degree(),
        }
    }
}

impl TauJson {
    pub fn to_tau(&self) -> Result<TauFunction> {
        let poly: Poly<Integer> = poly_from_json(&self.poly)?;
        if poly.degree() != Some(self.degree) {
            return Err(bad("τ degree does not match its coefficients"));
        }
        let (_, c) = self.diagram.to_standard();
        Ok(TauFunction {
            diagram: self.diagram.clone(),
            standard_shift: c,
            poly,
        })
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct ChainJson {
    pub k: i64,
    pub delta: i64,
    pub blocks: KBlockCoordinates,
    pub perm: Vec<usize>,
    pub flip_seq: Vec<i64>,
    pub sigmas: Vec<i64>,
    #[serde(rename = "as")]
    pub a: Vec<i64>,
    pub taus: Vec<TauJson>,
    pub ws: Vec<Value>,
}

impl From<&ChainSolution> for ChainJson {
    fn from(s: &ChainSolution) -> Self {
        Self {
            k: s.k(),
            delta: s.delta,
            blocks: s.spec.kblocks.clone(),
            perm: s.spec.perm.clone(),
            flip_seq: s.flip_seq.mus.clone(),
            sigmas: s.sigmas.clone(),
            a: s.a.clone(),
            taus: s.taus.iter().map(TauJson::from).collect(),
            ws: s.ws.iter().map(ratfunc_to_json).collect(),
        }
    }
}

impl ChainJson {
    /// Rebuild a solution purely from the document, without recomputing
    /// anything, so that verification checks what was written.
    pub fn to_solution(&self) -> Result<ChainSolution> {
        let spec = CycleSpec::new(self.blocks.clone(), self.perm.clone())?;
        let p = spec.p();
        if self.ws.len() != p
            || self.a.len() != p
            || self.sigmas.len() != p
            || self.taus.len() != p + 1
        {
            return Err(bad(format!("chain of period {p} has mismatched lengths")));
        }
        let taus = self
            .taus
            .iter()
            .map(TauJson::to_tau)
            .collect::<Result<Vec<_>>>()?;
        Ok(ChainSolution {
            spec,
            flip_seq: FlipSequence {
                mus: self.flip_seq.clone(),
                k: self.k,
            },
            diagrams: taus.iter().map(|t| t.diagram.clone()).collect(),
            taus,
            sigmas: self.sigmas.clone(),
            a: self.a.clone(),
            delta: self.delta,
            ws: self
                .ws
                .iter()
                .map(ratfunc_from_json)
                .collect::<Result<_>>()?,
        })
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct NYJson {
    pub source_spec: SpecJson,
    pub delta: Value,
    pub alphas: Vec<Value>,
    pub fs: Vec<Value>,
}

impl NYJson {
    pub fn new(ny: &NYSolution, spec: &CycleSpec) -> Self {
        Self {
            source_spec: spec.into(),
            delta: rat_value(&ny.delta),
            alphas: ny.alphas.iter().map(rat_value).collect(),
            fs: ny.fs.iter().map(ratfunc_to_json).collect(),
        }
    }

    pub fn to_solution(&self) -> Result<NYSolution> {
        Ok(NYSolution {
            fs: self
                .fs
                .iter()
                .map(ratfunc_from_json)
                .collect::<Result<_>>()?,
            alphas: self.alphas.iter().map(value_rat).collect::<Result<_>>()?,
            delta: value_rat(&self.delta)?,
        })
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct P4Params {
    pub a: Value,
    pub b: Value,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct P4Json {
    pub y: Value,
    pub params: P4Params,
    pub source_spec: SpecJson,
}

impl P4Json {
    pub fn new(s: &P4Solution, spec: &CycleSpec) -> Self {
        Self {
            y: ratfunc_to_json(&s.y),
            params: P4Params {
                a: rat_value(&s.a),
                b: rat_value(&s.b),
            },
            source_spec: spec.into(),
        }
    }

    pub fn to_solution(&self) -> Result<P4Solution> {
        Ok(P4Solution {
            y: ratfunc_from_json(&self.y)?,
            a: value_rat(&self.params.a)?,
            b: value_rat(&self.params.b)?,
        })
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct P5Params {
    pub a: Value,
    pub b: Value,
    pub c: Value,
    pub d: Value,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct P5Json {
    pub y: Value,
    pub params: P5Params,
    pub source_spec: SpecJson,
}

impl P5Json {
    pub fn new(s: &P5Solution, spec: &CycleSpec) -> Self {
        Self {
            y: ratfunc_to_json(&s.y),
            params: P5Params {
                a: rat_value(&s.a),
                b: rat_value(&s.b),
                c: rat_value(&s.c),
                d: rat_value(&s.d),
            },
            source_spec: spec.into(),
        }
    }

    pub fn to_solution(&self) -> Result<P5Solution> {
        Ok(P5Solution {
            y: ratfunc_from_json(&self.y)?,
            a: value_rat(&self.params.a)?,
            b: value_rat(&self.params.b)?,
            c: value_rat(&self.params.c)?,
            d: value_rat(&self.params.d)?,
        })
    }
}

/// Everything `solve` emits for one spec.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct SolutionDoc {
    pub chain: ChainJson,
    pub noumi_yamada: NYJson,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p4: Option<P4Json>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p5: Option<P5Json>,
}

pub fn to_string_pretty<T: Serialize>(v: &T) -> Result<String> {
    serde_json::to_string_pretty(v).map_err(|e| bad(e.to_string()))
}

pub fn from_str<'a, T: Deserialize<'a>>(s: &'a str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| bad(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{build_cycle, verify_chain};
    use crate::exact::{ratio, QPoly, QRatFunc};
    use crate::painleve::{to_noumi_yamada, to_p4, verify_ny};

    #[test]
    fn poly_forms() {
        let p = QPoly::new(vec![ratio(1, 2), ratio(0, 1), ratio(-3, 1)]);
        assert_eq!(poly_to_json(&p).to_string(), r#"["1/2","0/1","-3/1"]"#);
        assert_eq!(
            poly_from_json::<Rational>(&serde_json::json!(["1/2", "0", "-3"])).unwrap(),
            p
        );
        let s = ExactScalar::sqrt(&ratio(1, 3)).unwrap();
        let v = s.to_json();
        assert_eq!(v, serde_json::json!({"a": "0/1", "b": "1/3", "m": 3}));
        assert_eq!(ExactScalar::from_json(&v).unwrap(), s);
        assert!(Integer::from_json(&serde_json::json!("1/2")).is_err());
        assert!(poly_from_json::<Rational>(&serde_json::json!("x")).is_err());
        let r: QRatFunc = RatFunc::new(QPoly::from_i64s(&[1]), QPoly::from_i64s(&[0, 2])).unwrap();
        assert_eq!(
            ratfunc_from_json::<Rational>(&ratfunc_to_json(&r)).unwrap(),
            r
        );
        assert!(
            ratfunc_from_json::<Rational>(&serde_json::json!({"num": ["1/1"], "den": []})).is_err()
        );
    }

    #[test]
    fn chain_round_trip() {
        let spec = CycleSpec::parse("0,3,8", &[2, 1, 0]).unwrap();
        let sol = build_cycle(&spec).unwrap();
        let doc = ChainJson::from(&sol);
        let text = to_string_pretty(&doc).unwrap();
        let back: ChainJson = from_str(&text).unwrap();
        assert_eq!(to_string_pretty(&back).unwrap(), text);
        let rebuilt = back.to_solution().unwrap();
        assert_eq!(verify_chain(&rebuilt), verify_chain(&sol));
        assert!(text.contains("\"as\""));

        let ny = to_noumi_yamada(&sol).unwrap();
        let nj = NYJson::new(&ny, &spec);
        assert_eq!(verify_ny(&nj.to_solution().unwrap()), verify_ny(&ny));
        let p4 = to_p4(&sol).unwrap();
        assert_eq!(P4Json::new(&p4, &spec).to_solution().unwrap(), p4);
    }

    #[test]
    fn tampered_document_fails() {
        let sol = build_cycle(&CycleSpec::parse("0|3|2", &[2, 0, 1]).unwrap()).unwrap();
        let mut doc = ChainJson::from(&sol);
        doc.a[0] += 1;
        assert!(!verify_chain(&doc.to_solution().unwrap()).passed());
        doc.taus.pop();
        assert!(doc.to_solution().is_err());
    }
}
