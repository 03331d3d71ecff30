//! Kazhdan–Lusztig polynomials `P_{u,v}(q)` of type `A_n`.

use std::fmt;
use std::sync::Arc;

use crate::error::Result;
use crate::field::{FieldElement, ScalarT};
use crate::weyl::{bruhat_leq, WeylElement, WeylGroup};

/// Dense integer polynomial in `q`; trailing zeros are trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct KLPolynomial(Vec<i64>);

impl KLPolynomial {
    pub fn zero() -> Self {
        KLPolynomial(Vec::new())
    }

    pub fn one() -> Self {
        KLPolynomial(vec![1])
    }

    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        let mut v = coeffs.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        KLPolynomial(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let v: Vec<i64> = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Self::from_coeffs(&v)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_coeffs(&self.0.iter().map(|x| x * c).collect::<Vec<_>>())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut v = vec![0i64; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Self::from_coeffs(&v)
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![0i64; k];
        v.extend_from_slice(&self.0);
        KLPolynomial(v)
    }

    /// `P(t^k)` as a Laurent polynomial.
    pub fn at_t_power(&self, k: i32) -> ScalarT {
        let mut s = ScalarT::zero();
        for (d, &c) in self.0.iter().enumerate() {
            s.add_term(k * d as i32, c as i128);
        }
        s
    }

    /// Evaluation `q -> arg` in the field.
    pub fn substitute(&self, arg: &FieldElement) -> FieldElement {
        let mut acc = FieldElement::zero();
        for &c in self.0.iter().rev() {
            acc = acc.mul(arg).add(&FieldElement::integer(c as i128));
        }
        acc
    }
}

impl fmt::Display for KLPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (d, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mono = match d {
                0 => c.to_string(),
                1 if c == 1 => "q".to_string(),
                1 => format!("{c}*q"),
                _ if c == 1 => format!("q^{d}"),
                _ => format!("{c}*q^{d}"),
            };
            parts.push(mono);
        }
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

impl fmt::Debug for KLPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All KL polynomials of one Weyl group, computed once by the classical
/// recursion on a left descent and shared read-only afterwards.
#[derive(Debug)]
pub struct KLTable {
    group: Arc<WeylGroup>,
    /// `table[w][x] = P_{x,w}` by group index.
    table: Vec<Vec<KLPolynomial>>,
    leq: Vec<Vec<bool>>,
}

impl KLTable {
    pub fn new(group: Arc<WeylGroup>) -> Self {
        let els = group.elements().to_vec();
        let n = els.len();
        let leq: Vec<Vec<bool>> = (0..n).map(|x| (0..n).map(|w| bruhat_leq(&els[x], &els[w])).collect()).collect();
        let mut table: Vec<Vec<KLPolynomial>> = vec![Vec::new(); n];
        // elements are ordered by length, so every recursive call is ready
        for wi in 0..n {
            let w = els[wi];
            let mut row = vec![KLPolynomial::zero(); n];
            if w.is_identity() {
                row[wi] = KLPolynomial::one();
                table[wi] = row;
                continue;
            }
            let s = w.left_descents()[0];
            let v = w.mul_simple_left(s);
            let vi = group.index_of(&v);
            let lw = w.length();
            // z < v with s z < z and mu(z, v) != 0
            let corrections: Vec<(usize, i64, usize)> = (0..n)
                .filter(|&zi| zi != vi && leq[zi][vi] && els[zi].has_left_descent(s))
                .filter_map(|zi| {
                    let lz = els[zi].length();
                    let lv = v.length();
                    if (lv - lz).is_multiple_of(2) {
                        return None;
                    }
                    let m = table[vi][zi].coeff((lv - lz - 1) / 2);
                    (m != 0).then_some((zi, m, (lw - lz) / 2))
                })
                .collect();
            for xi in 0..n {
                if !leq[xi][wi] {
                    continue;
                }
                let x = els[xi];
                let sx = x.mul_simple_left(s);
                let sxi = group.index_of(&sx);
                let c = usize::from(sx.length() < x.length());
                let mut p = table[vi][sxi].shift(1 - c).add(&table[vi][xi].shift(c));
                for &(zi, m, d) in &corrections {
                    p = p.sub(&table[zi][xi].shift(d).scale(m));
                }
                row[xi] = p;
            }
            table[wi] = row;
        }
        KLTable { group, table, leq }
    }

    pub fn for_rank(rank: usize) -> Result<Self> {
        Ok(Self::new(Arc::new(WeylGroup::new(rank)?)))
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    /// `P_{u,v}`; zero unless `u <= v`.
    pub fn get(&self, u: &WeylElement, v: &WeylElement) -> &KLPolynomial {
        let ui = self.group.index_of(u);
        let vi = self.group.index_of(v);
        &self.table[vi][ui]
    }

    pub fn leq(&self, u: &WeylElement, v: &WeylElement) -> bool {
        self.leq[self.group.index_of(u)][self.group.index_of(v)]
    }

    /// `mu(u, v)`: the coefficient of `q^{(l(v)-l(u)-1)/2}` in `P_{u,v}`.
    pub fn mu_coefficient(&self, u: &WeylElement, v: &WeylElement) -> i64 {
        let (lu, lv) = (u.length(), v.length());
        if lu >= lv || (lv - lu) % 2 == 0 {
            return 0;
        }
        self.get(u, v).coeff((lv - lu - 1) / 2)
    }

    /// Checks `P_{u,v} = P_{u^-1,v^-1}` and the inversion formula
    /// `sum_v e_u e_v P_{v,w} P_{w0 v, w0 u} = delta_{w,u}`. Returns the
    /// first failing pair.
    pub fn verify_pdual(&self) -> std::result::Result<(), (WeylElement, WeylElement)> {
        let els = self.group.elements();
        let w0 = self.group.longest();
        for u in els {
            for v in els {
                if self.get(u, v) != self.get(&u.inverse(), &v.inverse()) {
                    return Err((*u, *v));
                }
            }
        }
        for w in els {
            for u in els {
                let mut acc = KLPolynomial::zero();
                for v in els {
                    let p = self.get(v, w);
                    if p.is_zero() {
                        continue;
                    }
                    let q = self.get(&w0.compose(v), &w0.compose(u));
                    acc = acc.add(&p.mul(q).scale(u.sign() * v.sign()));
                }
                let expected = if u == w { KLPolynomial::one() } else { KLPolynomial::zero() };
                if acc != expected {
                    return Err((*w, *u));
                }
            }
        }
        Ok(())
    }
}
