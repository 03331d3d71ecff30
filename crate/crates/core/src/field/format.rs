//! JSON form of field elements:
//! `{"num":[{"exp":[..],"t":{"lo":k,"coeffs":[..]}},..],"den":[..]}` with
//! terms ordered by lattice vector, then by `t`-degree.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::element::FieldElement;
use super::lattice::LatticeVector;
use super::laurent::ScalarT;
use super::poly::{Mono, Poly};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct LaurentJson {
    pub lo: i32,
    pub coeffs: Vec<i128>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct TermJson {
    pub exp: Vec<i16>,
    pub t: LaurentJson,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct FieldJson {
    pub num: Vec<TermJson>,
    pub den: Vec<TermJson>,
}

fn poly_to_json(p: &Poly, rank: usize) -> Vec<TermJson> {
    let mut grouped: BTreeMap<LatticeVector, ScalarT> = BTreeMap::new();
    for (m, c) in p.terms() {
        grouped.entry(m.e).or_default().add_term(m.t as i32, *c);
    }
    grouped
        .into_iter()
        .map(|(e, s)| {
            let (lo, coeffs) = s.dense();
            TermJson { exp: e.coords(rank).to_vec(), t: LaurentJson { lo, coeffs } }
        })
        .collect()
}

fn poly_from_json(terms: &[TermJson]) -> Result<Poly> {
    let mut out = Vec::new();
    for term in terms {
        if term.exp.len() > super::lattice::MAX_RANK {
            return Err(Error::Parse(format!("exponent vector too long: {:?}", term.exp)));
        }
        let e = LatticeVector::from_slice(&term.exp);
        for (k, &c) in term.t.coeffs.iter().enumerate() {
            let deg = i16::try_from(term.t.lo + k as i32).map_err(|_| Error::Parse("t-degree overflow".into()))?;
            out.push((Mono::new(e, deg), c));
        }
    }
    Ok(Poly::from_terms(out))
}

impl FieldElement {
    pub fn to_json_repr(&self, rank: usize) -> FieldJson {
        let (num, den) = self.expanded();
        FieldJson { num: poly_to_json(&num, rank), den: poly_to_json(&den, rank) }
    }

    pub fn to_json(&self, rank: usize) -> serde_json::Value {
        serde_json::to_value(self.to_json_repr(rank)).expect("plain data serializes")
    }

    pub fn from_json_repr(repr: &FieldJson) -> Result<FieldElement> {
        let num = FieldElement::from_poly(&poly_from_json(&repr.num)?);
        let den = FieldElement::from_poly(&poly_from_json(&repr.den)?);
        num.div(&den)
    }

    pub fn from_json(value: &serde_json::Value) -> Result<FieldElement> {
        let repr: FieldJson = serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json_repr(&repr)
    }
}
