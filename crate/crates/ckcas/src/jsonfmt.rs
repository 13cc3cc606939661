//! Stable machine-readable schema for omega specs and enveloping
//! elements: deterministic key order, terms sorted by monomial.

use anyhow::{anyhow, bail, Result};
use ck_core::{
    EnvelopingElement, Generator, OmegaEntry, OmegaPoly, OmegaSpec, PbwMonomial, Rational,
};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct JsonOmegaEntry {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fixed: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symbolic: Option<bool>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct JsonCoeffTerm {
    pub rational: String,
    pub exponents: Vec<u32>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct JsonTerm {
    pub monomial: Vec<[u64; 3]>,
    pub coeff: Vec<JsonCoeffTerm>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct JsonElement {
    pub n: usize,
    pub omega: Vec<JsonOmegaEntry>,
    pub terms: Vec<JsonTerm>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct JsonLabeledElement {
    pub label: String,
    pub element: JsonElement,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct JsonCasimirSet {
    pub invariants: Vec<JsonLabeledElement>,
}

fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn parse_rational(s: &str) -> Result<Rational> {
    let (p, q) = s
        .split_once('/')
        .ok_or_else(|| anyhow!("rational `{s}` must be p/q"))?;
    let p: BigInt = p.parse().map_err(|e| anyhow!("{e}"))?;
    let q: BigInt = q.parse().map_err(|e| anyhow!("{e}"))?;
    if q == BigInt::from(0) {
        bail!("zero denominator");
    }
    Ok(Rational::new(p, q))
}

pub fn omega_to_json(spec: &OmegaSpec) -> Vec<JsonOmegaEntry> {
    spec.entries()
        .iter()
        .map(|e| match e {
            OmegaEntry::Fixed(r) => JsonOmegaEntry {
                fixed: Some(rational_string(r)),
                symbolic: None,
            },
            OmegaEntry::Symbolic => JsonOmegaEntry {
                fixed: None,
                symbolic: Some(true),
            },
        })
        .collect()
}

pub fn omega_from_json(entries: &[JsonOmegaEntry]) -> Result<OmegaSpec> {
    let mut vals = Vec::new();
    for e in entries {
        match (&e.fixed, e.symbolic) {
            (Some(s), None) => vals.push(Some(parse_rational(s)?)),
            (None, Some(true)) => vals.push(None),
            _ => bail!("omega entry must be {{\"fixed\": \"p/q\"}} or {{\"symbolic\": true}}"),
        }
    }
    if vals.is_empty() {
        bail!("empty omega list");
    }
    Ok(OmegaSpec::mixed(&vals))
}

pub fn element_to_json(spec: &OmegaSpec, e: &EnvelopingElement) -> JsonElement {
    let terms = e
        .terms()
        .map(|(m, c)| JsonTerm {
            monomial: m
                .factors()
                .iter()
                .map(|&(g, p)| [g.a() as u64, g.b() as u64, p as u64])
                .collect(),
            coeff: c
                .terms()
                .map(|(exps, r)| JsonCoeffTerm {
                    rational: rational_string(r),
                    exponents: exps.clone(),
                })
                .collect(),
        })
        .collect();
    JsonElement {
        n: e.n(),
        omega: omega_to_json(spec),
        terms,
    }
}

pub fn element_from_json(j: &JsonElement) -> Result<(OmegaSpec, EnvelopingElement)> {
    let spec = omega_from_json(&j.omega)?;
    if spec.n() != j.n {
        bail!("omega list length {} does not match n = {}", spec.n(), j.n);
    }
    let mut e = EnvelopingElement::zero(j.n);
    for t in &j.terms {
        let pairs: Result<Vec<(Generator, u32)>> = t
            .monomial
            .iter()
            .map(|&[a, b, p]| {
                let g = Generator::new(a as usize, b as usize, j.n)
                    .map_err(|err| anyhow!("{err}"))?;
                Ok((g, p as u32))
            })
            .collect();
        let mut coeff = OmegaPoly::zero(j.n);
        for c in &t.coeff {
            if c.exponents.len() != j.n {
                bail!("exponent vector length must equal n");
            }
            coeff = coeff.add(&OmegaPoly::monomial(
                j.n,
                c.exponents.clone(),
                parse_rational(&c.rational)?,
            ));
        }
        e.add_term(PbwMonomial::from_pairs(&pairs?), coeff);
    }
    Ok((spec, e))
}
