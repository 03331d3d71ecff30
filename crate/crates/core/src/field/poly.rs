//! Sparse Laurent polynomials in `t` and the lattice exponentials
//! `e^{alpha_1}, .., e^{alpha_n}` with integer coefficients.

use std::collections::BTreeMap;
use std::ops::{Add, Sub};

use num_integer::Integer;

use super::lattice::{LatticeVector, MAX_RANK};
use super::modp;

/// Number of variables: the lattice coordinates followed by `t`.
pub const NVARS: usize = MAX_RANK + 1;

/// A Laurent monomial `t^t e^{lambda}`. The derived order compares the
/// lattice part lexicographically, then the `t`-exponent.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Mono {
    pub e: LatticeVector,
    pub t: i16,
}

impl Mono {
    pub const ONE: Mono = Mono { e: LatticeVector::ZERO, t: 0 };

    pub fn new(e: LatticeVector, t: i16) -> Self {
        Mono { e, t }
    }

    pub fn t_pow(k: i16) -> Self {
        Mono { e: LatticeVector::ZERO, t: k }
    }

    pub fn exp(e: LatticeVector) -> Self {
        Mono { e, t: 0 }
    }

    #[inline]
    pub fn var(&self, k: usize) -> i16 {
        if k < MAX_RANK {
            self.e.0[k]
        } else {
            self.t
        }
    }

    #[inline]
    fn var_mut(&mut self, k: usize) -> &mut i16 {
        if k < MAX_RANK {
            &mut self.e.0[k]
        } else {
            &mut self.t
        }
    }

    #[inline]
    pub fn mul(&self, other: &Mono) -> Mono {
        let mut m = *self;
        for k in 0..NVARS {
            *m.var_mut(k) += other.var(k);
        }
        m
    }

    #[inline]
    pub fn div(&self, other: &Mono) -> Mono {
        let mut m = *self;
        for k in 0..NVARS {
            *m.var_mut(k) -= other.var(k);
        }
        m
    }

    pub fn inverse(&self) -> Mono {
        Mono::ONE.div(self)
    }

    pub fn meet(&self, other: &Mono) -> Mono {
        let mut m = *self;
        for k in 0..NVARS {
            *m.var_mut(k) = self.var(k).min(other.var(k));
        }
        m
    }

    /// Every exponent of `self` is at most the one in `other`.
    #[inline]
    pub fn divides(&self, other: &Mono) -> bool {
        (0..NVARS).all(|k| self.var(k) <= other.var(k))
    }

    pub fn is_one(&self) -> bool {
        *self == Mono::ONE
    }

    pub fn degree(&self) -> i32 {
        (0..NVARS).map(|k| self.var(k) as i32).sum()
    }

    /// Lex order with the variables reversed (`t` first).
    fn revkey(&self) -> [i16; NVARS] {
        let mut k = [0; NVARS];
        for (i, slot) in k.iter_mut().enumerate() {
            *slot = self.var(NVARS - 1 - i);
        }
        k
    }

    pub fn act(&self, matrix: &[[i16; MAX_RANK]; MAX_RANK]) -> Mono {
        let mut e = [0i16; MAX_RANK];
        for (i, row) in matrix.iter().enumerate() {
            let mut acc = 0i16;
            for (j, &m) in row.iter().enumerate() {
                acc += m * self.e.0[j];
            }
            e[i] = acc;
        }
        Mono { e: LatticeVector(e), t: self.t }
    }

    pub fn eval_mod(&self, t: u64, xs: &[u64; MAX_RANK]) -> Option<u64> {
        let mut acc = modp::pow_signed(t, self.t as i64)?;
        for (k, &x) in xs.iter().enumerate() {
            let e = self.e.0[k];
            if e != 0 {
                acc = modp::mul(acc, modp::pow_signed(x, e as i64)?);
            }
        }
        Some(acc)
    }
}

/// Element of the group algebra `Z[t, t^-1][Lambda]`: sorted terms,
/// no zero coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Poly {
    terms: Vec<(Mono, i128)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Mono::ONE, 1)
    }

    pub fn constant(c: i128) -> Self {
        Self::monomial(Mono::ONE, c)
    }

    pub fn monomial(m: Mono, c: i128) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn from_terms(mut terms: Vec<(Mono, i128)>) -> Self {
        terms.sort_unstable_by_key(|a| a.0);
        let mut out: Vec<(Mono, i128)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 += c,
                _ => {
                    if out.last().is_some_and(|l| l.1 == 0) {
                        out.pop();
                    }
                    out.push((m, c));
                }
            }
        }
        out.retain(|t| t.1 != 0);
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(Mono, i128)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0] == (Mono::ONE, 1)
    }

    pub fn as_monomial(&self) -> Option<(Mono, i128)> {
        if self.terms.len() == 1 {
            Some(self.terms[0])
        } else {
            None
        }
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|&(m, c)| (m, -c)).collect() }
    }

    pub fn scale(&self, c: i128) -> Poly {
        if c == 0 {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|&(m, k)| (m, k * c)).collect() }
    }

    pub fn mul_mono(&self, m: &Mono) -> Poly {
        Poly { terms: self.terms.iter().map(|(k, c)| (k.mul(m), *c)).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if let Some((m, c)) = other.as_monomial() {
            return self.mul_mono(&m).scale(c);
        }
        if let Some((m, c)) = self.as_monomial() {
            return other.mul_mono(&m).scale(c);
        }
        let mut acc: Vec<(Mono, i128)> = Vec::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                acc.push((ma.mul(mb), ca * cb));
            }
        }
        Poly::from_terms(acc)
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Sum of many polynomials in one merge.
    pub fn sum<'a>(items: impl IntoIterator<Item = &'a Poly>) -> Poly {
        let mut all = Vec::new();
        for p in items {
            all.extend_from_slice(&p.terms);
        }
        Poly::from_terms(all)
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_exponents(&self) -> Mono {
        let mut it = self.terms.iter();
        let first = match it.next() {
            Some(t) => t.0,
            None => return Mono::ONE,
        };
        it.fold(first, |acc, (m, _)| acc.meet(m))
    }

    fn max_exponents(&self) -> [i16; NVARS] {
        let mut mx = [i16::MIN; NVARS];
        for (m, _) in &self.terms {
            for (k, slot) in mx.iter_mut().enumerate() {
                *slot = (*slot).max(m.var(k));
            }
        }
        mx
    }

    pub fn content(&self) -> i128 {
        self.terms.iter().fold(0i128, |g, (_, c)| g.gcd(c))
    }

    /// Splits off the unit part: `self = coeff * x^shift * prim`, where
    /// `prim` has minimal exponents zero, content one and a positive
    /// leading coefficient. `prim` is canonical up to units.
    pub fn normalize(&self) -> (i128, Mono, Poly) {
        assert!(!self.is_zero(), "cannot normalize zero");
        let shift = self.min_exponents();
        let mut content = self.content();
        if self.terms.last().unwrap().1 < 0 {
            content = -content;
        }
        let inv = shift.inverse();
        let prim = Poly { terms: self.terms.iter().map(|(m, c)| (m.mul(&inv), c / content)).collect() };
        (content, shift, prim)
    }

    pub fn act(&self, matrix: &[[i16; MAX_RANK]; MAX_RANK]) -> Poly {
        let mut terms: Vec<(Mono, i128)> = self.terms.iter().map(|(m, c)| (m.act(matrix), *c)).collect();
        terms.sort_unstable_by_key(|a| a.0);
        Poly { terms }
    }

    pub fn eval_mod(&self, t: u64, xs: &[u64; MAX_RANK]) -> Option<u64> {
        let mut acc = 0;
        for (m, c) in &self.terms {
            acc = modp::add(acc, modp::mul(modp::from_i128(*c), m.eval_mod(t, xs)?));
        }
        Some(acc)
    }

    /// Exact quotient `self / divisor` if it exists in the Laurent ring.
    /// The divisor must be normalized (see [`Poly::normalize`]).
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if let Some((m, c)) = divisor.as_monomial() {
            if self.terms.iter().any(|(_, k)| k % c != 0) {
                return None;
            }
            let inv = m.inverse();
            return Some(Poly { terms: self.terms.iter().map(|(k, a)| (k.mul(&inv), a / c)).collect() });
        }
        let shift = self.min_exponents();
        let shifted = self.mul_mono(&shift.inverse());
        if !shifted.quick_divisible(divisor) {
            return None;
        }
        let (lead_m, lead_c) = *divisor.terms.last().unwrap();
        let mut rem: BTreeMap<Mono, i128> = shifted.terms.iter().copied().collect();
        let mut quotient = Vec::new();
        while let Some((&m, &c)) = rem.iter().next_back() {
            if !lead_m.divides(&m) || c % lead_c != 0 {
                return None;
            }
            let qm = m.div(&lead_m);
            let qc = c / lead_c;
            quotient.push((qm, qc));
            for (fm, fc) in &divisor.terms {
                let key = fm.mul(&qm);
                let entry = rem.entry(key).or_insert(0);
                *entry -= fc * qc;
                if *entry == 0 {
                    rem.remove(&key);
                }
            }
        }
        Some(Poly::from_terms(quotient).mul_mono(&shift))
    }

    /// Necessary conditions for `divisor | self`, where `self` has minimal
    /// exponents zero and `divisor` is normalized.
    fn quick_divisible(&self, divisor: &Poly) -> bool {
        let mx_s = self.max_exponents();
        let mx_d = divisor.max_exponents();
        if (0..NVARS).any(|k| mx_d[k] > mx_s[k]) {
            return false;
        }
        // extreme terms in two monomial orders must divide
        let term_divides = |a: &(Mono, i128), b: &(Mono, i128)| a.0.divides(&b.0) && b.1 % a.1 == 0;
        if !term_divides(&divisor.terms[0], &self.terms[0])
            || !term_divides(divisor.terms.last().unwrap(), self.terms.last().unwrap())
        {
            return false;
        }
        let rev_max = |p: &Poly| *p.terms.iter().max_by_key(|t| t.0.revkey()).unwrap();
        let rev_min = |p: &Poly| *p.terms.iter().min_by_key(|t| t.0.revkey()).unwrap();
        if !term_divides(&rev_max(divisor), &rev_max(self)) || !term_divides(&rev_min(divisor), &rev_min(self)) {
            return false;
        }
        if divisor.len() == 2 {
            if let Some(false) = self.vanishes_on_binomial(divisor) {
                return false;
            }
        }
        true
    }

    /// For a binomial `c1 m1 + c2 m2` with unit coefficients, evaluates
    /// `self` at a pseudo-random point of its zero set. `None` if no such
    /// point is easy to produce.
    fn vanishes_on_binomial(&self, divisor: &Poly) -> Option<bool> {
        let (m1, c1) = divisor.terms[0];
        let (m2, c2) = divisor.terms[1];
        if c1.abs() != 1 || c2.abs() != 1 {
            return None;
        }
        // m1/m2 = -c2/c1 on the zero set
        let d = m1.div(&m2);
        let pivot = (0..NVARS).find(|&k| d.var(k).abs() == 1)?;
        let target = if c1 == -c2 { 1u64 } else { modp::MODULUS - 1 };
        let mut vals = [0u64; NVARS];
        let mut seed: u64 = 0x9e37_79b9_7f4a_7c15;
        for (k, v) in vals.iter_mut().enumerate() {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407 + k as u64);
            *v = 2 + (seed >> 8) % (modp::MODULUS - 3);
        }
        // solve x_pivot^{±1} * prod_{k != pivot} x_k^{d_k} = target
        let mut rest = 1u64;
        for k in 0..NVARS {
            if k != pivot && d.var(k) != 0 {
                rest = modp::mul(rest, modp::pow_signed(vals[k], d.var(k) as i64)?);
            }
        }
        let x = modp::mul(target, modp::inv(rest)?);
        vals[pivot] = if d.var(pivot) == 1 { x } else { modp::inv(x)? };
        let mut xs = [0u64; MAX_RANK];
        xs.copy_from_slice(&vals[..MAX_RANK]);
        let value = self.eval_mod(vals[MAX_RANK], &xs)?;
        Some(value == 0)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        Poly::sum([self, rhs])
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        Poly::sum([self, &rhs.neg()])
    }
}
