use std::collections::BTreeMap;
use std::fmt;

use super::element::FieldElement;
use super::lattice::LatticeVector;
use super::poly::{Mono, Poly};

/// A Laurent polynomial in `t` with integer coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ScalarT(BTreeMap<i32, i128>);

impl ScalarT {
    pub fn zero() -> Self {
        ScalarT(BTreeMap::new())
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exp: i32, coeff: i128) -> Self {
        let mut m = BTreeMap::new();
        if coeff != 0 {
            m.insert(exp, coeff);
        }
        ScalarT(m)
    }

    pub fn t_pow(exp: i32) -> Self {
        Self::monomial(exp, 1)
    }

    /// `t^{-1} - t`.
    pub fn quadratic_coeff() -> Self {
        Self::from_pairs(&[(-1, 1), (1, -1)])
    }

    /// `mu = t + t^{-1}`.
    pub fn mu() -> Self {
        Self::from_pairs(&[(-1, 1), (1, 1)])
    }

    pub fn from_pairs(pairs: &[(i32, i128)]) -> Self {
        let mut s = ScalarT::zero();
        for &(e, c) in pairs {
            s.add_term(e, c);
        }
        s
    }

    pub fn add_term(&mut self, exp: i32, coeff: i128) {
        if coeff == 0 {
            return;
        }
        let entry = self.0.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.0.remove(&exp);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i128)> + '_ {
        self.0.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coeff(&self, exp: i32) -> i128 {
        self.0.get(&exp).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn low_degree(&self) -> Option<i32> {
        self.0.keys().next().copied()
    }

    pub fn high_degree(&self) -> Option<i32> {
        self.0.keys().next_back().copied()
    }

    pub fn add(&self, other: &ScalarT) -> ScalarT {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn neg(&self) -> ScalarT {
        ScalarT(self.0.iter().map(|(&e, &c)| (e, -c)).collect())
    }

    pub fn sub(&self, other: &ScalarT) -> ScalarT {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &ScalarT) -> ScalarT {
        let mut out = ScalarT::zero();
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: i128) -> ScalarT {
        if c == 0 {
            return ScalarT::zero();
        }
        ScalarT(self.0.iter().map(|(&e, &k)| (e, k * c)).collect())
    }

    pub fn shift(&self, k: i32) -> ScalarT {
        ScalarT(self.0.iter().map(|(&e, &c)| (e + k, c)).collect())
    }

    /// `t -> t^{-1}`.
    pub fn bar(&self) -> ScalarT {
        ScalarT(self.0.iter().map(|(&e, &c)| (-e, c)).collect())
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from_terms(
            self.terms()
                .map(|(e, c)| (Mono::new(LatticeVector::ZERO, i16::try_from(e).expect("t-degree fits")), c))
                .collect(),
        )
    }

    pub fn to_field(&self) -> FieldElement {
        FieldElement::from_poly(&self.to_poly())
    }

    /// Dense form `(lo, coeffs)`; `(0, [])` for zero.
    pub fn dense(&self) -> (i32, Vec<i128>) {
        match (self.low_degree(), self.high_degree()) {
            (Some(lo), Some(hi)) => (lo, (lo..=hi).map(|e| self.coeff(e)).collect()),
            _ => (0, Vec::new()),
        }
    }

    pub fn from_dense(lo: i32, coeffs: &[i128]) -> ScalarT {
        let mut s = ScalarT::zero();
        for (k, &c) in coeffs.iter().enumerate() {
            s.add_term(lo + k as i32, c);
        }
        s
    }
}

impl fmt::Display for ScalarT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let body = match e {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            };
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (mag, body.is_empty()) {
                (_, true) => write!(f, "{mag}")?,
                (1, false) => write!(f, "{body}")?,
                (_, false) => write!(f, "{mag}*{body}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ScalarT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_basics() {
        let q = ScalarT::quadratic_coeff();
        let mu = ScalarT::mu();
        // (t^-1 - t)(t^-1 + t) = t^-2 - t^2
        assert_eq!(q.mul(&mu), ScalarT::from_pairs(&[(-2, 1), (2, -1)]));
        assert!(q.sub(&q).is_zero());
        assert_eq!(q.mul(&ScalarT::zero()), ScalarT::zero());
        assert_eq!(mu.to_string(), "t^-1 + t");
        let (lo, c) = q.dense();
        assert_eq!(ScalarT::from_dense(lo, &c), q);
    }
}
