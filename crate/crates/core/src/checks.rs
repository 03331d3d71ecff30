//! Named identity checks with pass/fail reports and witnesses.
//!
//! Every check is generic over the scalar domain, so the same code runs
//! exactly over [`FieldElement`] and probabilistically over
//! [`crate::field::ModScalar`].

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::billey::Rewriter;
use crate::error::{Error, Result};
use crate::field::{
    chern_mult, embed_hyperbolic_chern, fgl_hyperbolic, fgl_mult, mu, FieldElement, LatticeVector, Scalar, ScalarT, Theory,
};
use crate::hecke::{pairing_scalar, tl_project_hecke, BasisTag, HeckeContext, HeckeElement, PushPullMode, Sign, TLElement, TwistedElement};
use crate::hyperbolic::{divided_difference, mu_w, psi, x_word, HyperbolicLayer, OperatorKind};
use crate::localization::{
    bullet, invariant_basis, is_invariant, k_duality_pairing, odot, pairing_is_diagonal, push_to_point, pushforward,
    solve_in_span, DualClass, PushMode,
};
use crate::sample;
use crate::weyl::{bruhat_leq, ParabolicSubset, ReducedWord, WeylElement};

/// Name and one-line description of every check, in report order.
pub const CHECKS: &[(&str, &str)] = &[
    ("field-axioms", "associativity, distributivity and division in the coefficient field"),
    ("weyl-action", "the Weyl action on scalars is an action by field automorphisms"),
    ("fgl", "x^m and x^h satisfy the multiplicative and hyperbolic formal group laws"),
    ("pdual", "P_{u,v} = P_{u^-1,v^-1}, the KL inversion formula, P(0) = 1, P_{w,w_J} = 1"),
    ("tau-relations", "quadratic, braid and commutation relations of tau_i"),
    ("gamma-simple", "gamma^+_i = tau_i + t, its factorization, gamma^-_i gamma^+_i = 0, small gamma-hat examples"),
    ("triangularity", "delta_w expands in tau, gamma^+ and gamma^- over {u <= w}"),
    ("klcom", "(gamma^+_w gamma^-_{u^-1 w0})|_{w0} = delta_{w,u} a_{w0}"),
    ("anti-involution", "i(gamma^pm_w) = gamma^pm_{w^-1}; non-Hecke input is rejected"),
    ("iota", "iota(Y_J) = Y_J, iota is an involutive anti-homomorphism"),
    ("klfactor", "gamma^pm_w = z gamma^pm_s exactly when ws < w"),
    ("actions", "the two actions are commuting left actions; delta_w (.) pt_e = pt_w"),
    ("w0act", "a_{w0} delta_{w0} . pt_{w0} = prod (t - t^-1 e^{-alpha}) f_e"),
    ("inv", "z . pt_e = iota(z) (.) pt_e, adjointness of iota, Y_J (.) pt_e = Y_J . pt_e"),
    ("projection", "projection formula and W_J-invariance of Y_J . f"),
    ("comp", "Y_{Pi/J} Y_J = Y_Pi and independence of coset representatives"),
    ("gamma-longest", "gamma^+_{w_J} = Y_J prod_{alpha in Sigma_J^+} (t - t^-1 e^alpha)"),
    ("kdual", "K-theory duality for the full flag variety"),
    ("kdual-parabolic", "K-theory duality relative to W_J"),
    ("grassmannian", "gamma^-_w gamma^+_{w_J} = 0 off W_c and = gamma-hat^-_{I_w} gamma^+_{w_J} on W^J"),
    ("lemma-b", "b-hat_{w,I_u} = b_{w,u} for u in W^J"),
    ("fan-green", "gamma^-_w and gamma-hat^-_{I_w} agree in Temperley-Lieb for fully commutative w"),
    ("tl", "E_i relations and compatibility of the Temperley-Lieb projection with products"),
    ("x-relations", "X_i^2 = -X_i, Y_i^2 = Y_i and the twisted braid relations"),
    ("psi", "psi(tau_i) = mu Y_i - t, psi(gamma^pm_i), psi(gamma-hat^-_{I_u}) = mu_u X_{I_u}, psi(gamma^+_{w_J})"),
    ("hyper", "hyperbolic duality C_w / C~_u and the dual basis"),
    ("hyper-parabolic", "parabolic hyperbolic duality, invariance and coset constancy"),
    ("billey", "root polynomials: word independence, end terms, and C~^J_u|_w = b-hat'_{w,I_u}"),
    ("billey-oracle", "b-hat'_{w,I_u} from root polynomials equals b-hat_{w,I_u} from the twisted algebra"),
];

#[derive(Clone, Debug)]
pub struct CheckConfig {
    pub rank: usize,
    /// Restricts parabolic checks to one `J`; otherwise a default list is used.
    pub subset: Option<ParabolicSubset>,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub summary: String,
    pub witnesses: Vec<String>,
}

const MAX_WITNESSES: usize = 5;

struct Tally {
    cases: usize,
    failures: usize,
    witnesses: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { cases: 0, failures: 0, witnesses: Vec::new(), notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(witness());
            }
        }
    }

    fn note(&mut self, s: String) {
        self.notes.push(s);
    }
}

pub fn check_names() -> impl Iterator<Item = &'static str> {
    CHECKS.iter().map(|c| c.0)
}

/// Maximal proper subsets `Pi \ {k}`.
pub fn maximal_subsets(rank: usize) -> Vec<ParabolicSubset> {
    (1..=rank)
        .map(|k| {
            let members: Vec<usize> = (1..=rank).filter(|&i| i != k).collect();
            ParabolicSubset::new(rank, &members).expect("indices in range")
        })
        .collect()
}

fn maximal_list(cfg: &CheckConfig) -> Result<Vec<ParabolicSubset>> {
    match &cfg.subset {
        Some(j) => {
            j.require_maximal()?;
            Ok(vec![j.clone()])
        }
        None => Ok(maximal_subsets(cfg.rank)),
    }
}

/// The given `J`, or the maximal subsets plus `{1}` in rank 3.
fn any_list(cfg: &CheckConfig) -> Vec<ParabolicSubset> {
    match &cfg.subset {
        Some(j) => vec![j.clone()],
        None => {
            let mut out = maximal_subsets(cfg.rank);
            if cfg.rank == 3 {
                out.push(ParabolicSubset::new(3, &[1]).unwrap());
            }
            out
        }
    }
}

fn seed_for(cfg: &CheckConfig, name: &str) -> u64 {
    name.bytes().fold(cfg.seed ^ 0x9e37_79b9_7f4a_7c15, |acc, b| acc.rotate_left(5) ^ b as u64)
}

/// Runs one named check.
pub fn run_check<S: Scalar>(h: &HeckeContext<S>, name: &str, cfg: &CheckConfig) -> Result<CheckReport> {
    let mut rng = sample::rng(seed_for(cfg, name));
    let mut t = Tally::new();
    let r = &mut rng;
    match name {
        "field-axioms" => field_axioms(h, r, &mut t),
        "weyl-action" => weyl_action(h, r, &mut t),
        "fgl" => fgl(h, &mut t),
        "pdual" => pdual(h, &mut t),
        "tau-relations" => tau_relations(h, &mut t),
        "gamma-simple" => gamma_simple(h, &mut t),
        "triangularity" => triangularity(h, r, &mut t),
        "klcom" => klcom(h, r, &mut t),
        "anti-involution" => anti_involution(h, r, &mut t),
        "iota" => iota(h, cfg, r, &mut t),
        "klfactor" => klfactor(h, r, &mut t),
        "actions" => actions(h, r, &mut t),
        "w0act" => w0act(h, &mut t),
        "inv" => inv(h, cfg, r, &mut t),
        "projection" => projection(h, cfg, r, &mut t)?,
        "comp" => comp(h, cfg, r, &mut t)?,
        "gamma-longest" => gamma_longest(h, cfg, &mut t),
        "kdual" => kdual(h, r, &mut t)?,
        "kdual-parabolic" => kdual_parabolic(h, cfg, &mut t)?,
        "grassmannian" => grassmannian(h, cfg, &mut t)?,
        "lemma-b" => lemma_b(h, cfg, &mut t)?,
        "fan-green" => fan_green(h, &mut t),
        "tl" => tl(h, r, &mut t),
        "x-relations" => x_relations(h, &mut t),
        "psi" => psi_check(h, cfg, &mut t),
        "hyper" => hyper(h, &mut t),
        "hyper-parabolic" => hyper_parabolic(h, cfg, &mut t)?,
        "billey" => billey(h, cfg, &mut t)?,
        "billey-oracle" => billey_oracle(h, cfg, &mut t)?,
        _ => return Err(Error::Parse(format!("unknown check {name:?}; see `check --list`"))),
    }
    let mut summary = format!("{} cases, {} failed", t.cases, t.failures);
    for n in &t.notes {
        summary.push_str("; ");
        summary.push_str(n);
    }
    Ok(CheckReport { name: name.to_string(), passed: t.failures == 0, cases: t.cases, summary, witnesses: t.witnesses })
}

/// Runs several checks in parallel; reports come back in the given order.
pub fn run_checks<S: Scalar>(h: &HeckeContext<S>, names: &[&str], cfg: &CheckConfig) -> Result<Vec<CheckReport>> {
    use rayon::prelude::*;
    names.par_iter().map(|n| run_check(h, n, cfg)).collect()
}

fn eq<S: Scalar>(h: &HeckeContext<S>, a: &TwistedElement<S>, b: &TwistedElement<S>) -> bool {
    h.sub(a, b).is_zero()
}

fn fmt_pair(w: &WeylElement, u: &WeylElement) -> String {
    format!("w={w} u={u}")
}

fn field_axioms<S: Scalar>(h: &HeckeContext<S>, r: &mut ChaCha8Rng, t: &mut Tally) {
    for k in 0..30 {
        let a = h.lift(&sample::random_field(r, h.rank()));
        let b = h.lift(&sample::random_nonzero_field(r, h.rank()));
        let c = h.lift(&sample::random_field(r, h.rank()));
        t.check(a.add(&b).add(&c).equals(&a.add(&b.add(&c))), || format!("associativity, sample {k}"));
        t.check(a.mul(&b.add(&c)).equals(&a.mul(&b).add(&a.mul(&c))), || format!("distributivity, sample {k}"));
        t.check(a.div(&b).is_ok_and(|q| q.mul(&b).equals(&a)), || format!("division, sample {k}"));
        t.check(a.sub(&a).is_zero(), || format!("additive inverse, sample {k}"));
    }
}

fn weyl_action<S: Scalar>(h: &HeckeContext<S>, r: &mut ChaCha8Rng, t: &mut Tally) {
    for _ in 0..20 {
        let v = sample::random_element(r, h.elements());
        let w = sample::random_element(r, h.elements());
        let a = h.lift(&sample::random_field(r, h.rank()));
        let b = h.lift(&sample::random_field(r, h.rank()));
        t.check(h.act(&w, &a.mul(&b)).equals(&h.act(&w, &a).mul(&h.act(&w, &b))), || format!("w(ab), w={w}"));
        t.check(h.act(&w, &a.add(&b)).equals(&h.act(&w, &a).add(&h.act(&w, &b))), || format!("w(a+b), w={w}"));
        t.check(h.act(&v.compose(&w), &a).equals(&h.act(&v, &h.act(&w, &a))), || format!("(vw)(a), v={v} w={w}"));
    }
    let one = h.one_scalar();
    t.check(h.act(&h.group().longest(), &one).equals(&one), || "w0(1) = 1".into());
}

fn fgl<S: Scalar>(h: &HeckeContext<S>, t: &mut Tally) {
    let n = h.rank();
    let mut roots: Vec<LatticeVector> = (1..=n).map(LatticeVector::simple).collect();
    roots.extend((1..n).map(|i| LatticeVector::interval(i, i + 1)));
    for a in &roots {
        for b in &roots {
            let lhs = h.lift(&fgl_mult(&chern_mult(*a), &chern_mult(*b)));
            t.check(lhs.equals(&h.lift(&chern_mult(*a + *b))), || format!("F_m at {} and {}", a.root_label(), b.root_label()));
            let lhs = h.lift(&fgl_hyperbolic(&embed_hyperbolic_chern(*a), &embed_hyperbolic_chern(*b)));
            t.check(lhs.equals(&h.lift(&embed_hyperbolic_chern(*a + *b))), || {
                format!("F_h at {} and {}", a.root_label(), b.root_label())
            });
        }
    }
}

fn pdual<S: Scalar>(h: &HeckeContext<S>, t: &mut Tally) {
    let kl = h.kl();
    let res = kl.verify_pdual();
    t.check(res.is_ok(), || format!("eq. Pdual fails at {:?}", res.unwrap_err()));
    for v in h.elements() {
        for u in h.elements() {
            if kl.leq(u, v) {
                t.check(kl.get(u, v).coeff(0) == 1, || format!("P_{{{u},{v}}}(0) != 1"));
            }
        }
    }
    for j in maximal_subsets(h.rank()) {
        let wj = longest_in(h, &j);
        for w in h.elements().iter().filter(|w| bruhat_leq(w, &wj)) {
            t.check(kl.get(w, &wj).coeffs() == [1], || format!("P_{{{w},{wj}}} != 1"));
        }
    }
}

fn longest_in<S: Scalar>(h: &HeckeContext<S>, j: &ParabolicSubset) -> WeylElement {
    *h.elements().iter().filter(|w| j.in_subgroup(w)).max_by_key(|w| w.length()).unwrap()
}

fn tau_relations<S: Scalar>(h: &HeckeContext<S>, t: &mut Tally) {
    let n = h.rank();
    let q = h.scalar(&ScalarT::quadratic_coeff().to_field());
    for i in 1..=n {
        let ti = h.tau_simple(i);
        let rhs = h.add(&h.mul(&q, &ti), &h.one());
        t.check(eq(h, &h.mul(&ti, &ti), &rhs), || format!("tau_{i}^2"));
        for j in i + 1..=n {
            let tj = h.tau_simple(j);
            if j == i + 1 {
                let l = h.product(&[&ti, &tj, &ti]);
                let r = h.product(&[&tj, &ti, &tj]);
                t.check(eq(h, &l, &r), || format!("braid tau_{i} tau_{j}"));
            } else {
                t.check(eq(h, &h.mul(&ti, &tj), &h.mul(&tj, &ti)), || format!("tau_{i} tau_{j} commute"));
            }
        }
    }
}

fn gamma_simple<S: Scalar>(h: &HeckeContext<S>, t: &mut Tally) {
    let n = h.rank();
    let tt = FieldElement::t();
    let tinv = FieldElement::t_pow(-1);
    for i in 1..=n {
        let gp = h.gamma_simple(i, Sign::Plus);
        let gm = h.gamma_simple(i, Sign::Minus);
        t.check(eq(h, &gp, &h.add(&h.tau_simple(i), &h.scalar(&tt))), || format!("gamma^+_{i} = tau_{i} + t"));
        t.check(h.mul(&gm, &gp).is_zero(), || format!("gamma^-_{i} gamma^+_{i} = 0"));
        let a = LatticeVector::simple(i);
        let c = tinv.sub(&tt.mul(&FieldElement::exp(-a))).div(&chern_mult(a)).expect("nonzero");
        let s = WeylElement::simple(n, i);
        let fact = h.mul(&h.add(&h.delta(&s), &h.one()), &h.scalar(&c));
        t.check(eq(h, &gp, &fact), || format!("gamma^+_{i} factorization"));
    }
    if n >= 2 {
        let w = WeylElement::from_word(n, &[1, 2, 1]).unwrap();
        let lhs = h.sub(&h.gamma_hat(&[1, 2, 1], Sign::Minus), &h.gamma(&w, Sign::Minus));
        t.check(eq(h, &lhs, &h.gamma_simple(1, Sign::Minus)), || "gamma-hat^-_(1,2,1) - gamma^-_{s1s2s1} = gamma^-_1".into());
        let w = WeylElement::from_word(n, &[1, 2]).unwrap();
        t.check(eq(h, &h.gamma_hat(&[1, 2], Sign::Minus), &h.gamma(&w, Sign::Minus)), || "gamma-hat^-_(1,2)".into());
    }
    t.check(eq(h, &h.gamma_hat(&[], Sign::Minus), &h.one()), || "empty gamma-hat".into());
}

fn sample_elements<S: Scalar>(h: &HeckeContext<S>, r: &mut ChaCha8Rng, count: usize) -> Vec<WeylElement> {
    if h.elements().len() <= count {
        return h.elements().to_vec();
    }
    let mut out: Vec<WeylElement> = (0..count).map(|_| sample::random_element(r, h.elements())).collect();
    out.sort();
    out.dedup();
    out
}

fn triangularity<S: Scalar>(h: &HeckeContext<S>, r: &mut ChaCha8Rng, t: &mut Tally) {
    for w in sample_elements(h, r, 24) {
        let d = h.delta(&w);
        for tag in [BasisTag::Tau, BasisTag::GammaPlus, BasisTag::GammaMinus] {
            let exp = h.expand(&d, tag, None);
            t.check(exp.coeffs.keys().all(|u| bruhat_leq(u, &w)), || format!("{tag} expansion of delta_{w}"));
            t.check(eq(h, &h.recombine(&exp, None), &d), || format!("{tag} round trip at {w}"));
        }
    }
}

fn klcom<S: Scalar>(h: &HeckeContext<S>, r: &mut ChaCha8Rng, t: &mut Tally) {
    let a = h.a_w0();
    let zero = h.zero_scalar();
    let els = h.elements();
    for (w, u) in sample::pairs(r, els, els, 576) {
        let v = h.klcom_value(&w, &u);
        let target = if w == u { &a } else { &zero };
        t.check(v.equals(target), || fmt_pair(&w, &u));
    }
}

fn anti_involution<S: Scalar>(h: &HeckeContext<S>, r: &mut ChaCha8Rng, t: &mut Tally) {
    for w in sample_elements(h, r, 24) {
        for sign in [Sign::Plus, Sign::Minus] {
            let img = h.anti_involution_i(&h.gamma(&w, sign));
            t.check(img.is_ok_and(|z| eq(h, &z, &h.gamma(&w.inverse(), sign))), || {
                format!("i(gamma^{}_{w})", sign.symbol())
            });
        }
    }
    if h.rank() >= 2 {
        let lhs = h.anti_involution_i(&h.mul(&h.tau_simple(1), &h.tau_simple(2)));
        let s21 = WeylElement::from_word(h.rank(), &[2, 1]).unwrap();
        t.check(lhs.is_ok_and(|z| eq(h, &z, &h.tau(&s21))), || "i(tau_1 tau_2) = tau_2 tau_1".into());
    }
    let outside = h.scalar(&FieldElement::one().div(&chern_mult(LatticeVector::simple(1))).unwrap());
    if h.anti_involution_i(&outside).is_ok() {
        t.note("non-Hecke input not detected (probabilistic mode cannot decide Hecke membership)".into());
    }
}

fn iota<S: Scalar>(h: &HeckeContext<S>, cfg: &CheckConfig, r: &mut ChaCha8Rng, t: &mut Tally) {
    for theory in [Theory::Multiplicative, Theory::Hyperbolic] {
        for j in any_list(cfg) {
            let y = h.push_pull(&j, PushPullMode::Full, theory);
            t.check(eq(h, &h.iota(&y, theory), &y), || format!("iota(Y_J) for J={j}, theory {theory}"));
        }
        for k in 0..10 {
            let z1 = sample::random_twisted(h, r, 2);
            let z2 = sample::random_twisted(h, r, 2);
            t.check(eq(h, &h.iota(&h.iota(&z1, theory), theory), &z1), || format!("iota^2, sample {k}"));
            let lhs = h.iota(&h.mul(&z1, &z2), theory);
            let rhs = h.mul(&h.iota(&z2, theory), &h.iota(&z1, theory));
            t.check(eq(h, &lhs, &rhs), || format!("anti-homomorphism, sample {k}"));
        }
    }
}

fn klfactor<S: Scalar>(h: &HeckeContext<S>, r: &mut ChaCha8Rng, t: &mut Tally) {
    let n = h.rank();
    for w in sample_elements(h, r, 6) {
        for i in w.right_descents() {
            for sign in [Sign::Plus, Sign::Minus] {
                let y = h.gamma(&w, sign);
                let g = h.gamma_simple(i, sign);
                let z = h.solve_right_factor(&y, &g);
                t.check(z.is_some_and(|z| eq(h, &h.mul(&z, &g), &y)), || {
                    format!("gamma^{}_{w} = z gamma^{}_{i}", sign.symbol(), sign.symbol())
                });
            }
        }
    }
    if n >= 2 {
        let y = h.gamma_simple(2, Sign::Minus);
        let g = h.gamma_simple(1, Sign::Minus);
        t.check(h.solve_right_factor(&y, &g).is_none(), || "gamma^-_2 should not factor through gamma^-_1".into());
    }
}

fn actions<S: Scalar>(h: &HeckeContext<S>, r: &mut ChaCha8Rng, t: &mut Tally) {
    let m = Theory::Multiplicative;
    for k in 0..10 {
        let z1 = sample::random_twisted(h, r, 2);
        let z2 = sample::random_twisted(h, r, 2);
        let f = sample::random_class(h, r, m, 3);
        let z12 = h.mul(&z1, &z2);
        t.check(bullet(h, &z12, &f).equals(&bullet(h, &z1, &bullet(h, &z2, &f))), || format!("bullet action, sample {k}"));
        t.check(odot(h, &z12, &f).equals(&odot(h, &z1, &odot(h, &z2, &f))), || format!("odot action, sample {k}"));
        let a = bullet(h, &z1, &odot(h, &z2, &f));
        let b = odot(h, &z2, &bullet(h, &z1, &f));
        t.check(a.equals(&b), || format!("actions commute, sample {k}"));
        let c = h.lift(&sample::random_field(r, h.rank()));
        t.check(bullet(h, &z1, &f.scale(&c)).equals(&bullet(h, &z1, &f).scale(&c)), || format!("bullet linearity, sample {k}"));
        t.check(bullet(h, &h.one(), &f).equals(&f), || format!("delta_e . f, sample {k}"));
    }
    let e = WeylElement::identity(h.rank());
    let pt_e = DualClass::point(h, m, &e);
    for w in h.elements() {
        t.check(odot(h, &h.delta(w), &pt_e).equals(&DualClass::point(h, m, w)), || format!("delta_{w} (.) pt_e"));
    }
    let s = WeylElement::simple(h.rank(), 1);
    let c = h.lift(&FieldElement::exp(LatticeVector::simple(1)));
    let f = DualClass::fixed_point(h, m, &e);
    let twisted = !odot(h, &h.delta(&s), &f.scale(&c)).equals(&odot(h, &h.delta(&s), &f).scale(&c));
    t.check(twisted, || "odot should twist scalars".into());
}

fn w0act<S: Scalar>(h: &HeckeContext<S>, t: &mut Tally) {
    let w0 = h.group().longest();
    let m = Theory::Multiplicative;
    let z = TwistedElement::from_terms(h.rank(), [(w0, h.a_w0())]);
    let lhs = bullet(h, &z, &DualClass::point(h, m, &w0));
    let e = WeylElement::identity(h.rank());
    let rhs = DualClass::fixed_point(h, m, &e).scale(&h.lift(&pairing_scalar(h.rank())));
    t.check(lhs.equals(&rhs), || "a_w0 delta_w0 . pt_w0".into());
}

fn generators<S: Scalar>(h: &HeckeContext<S>, r: &mut ChaCha8Rng) -> Vec<(String, TwistedElement<S>)> {
    let mut out = vec![("delta_e".to_string(), h.one())];
    for i in 1..=h.rank() {
        out.push((format!("delta_{i}"), h.delta(&WeylElement::simple(h.rank(), i))));
        out.push((format!("tau_{i}"), h.tau_simple(i)));
    }
    out.push(("random scalar".into(), h.scalar(&sample::random_field(r, h.rank()))));
    out.push(("random".into(), sample::random_twisted(h, r, 2)));
    out
}

fn inv<S: Scalar>(h: &HeckeContext<S>, cfg: &CheckConfig, r: &mut ChaCha8Rng, t: &mut Tally) {
    for theory in [Theory::Multiplicative, Theory::Hyperbolic] {
        let e = WeylElement::identity(h.rank());
        let pt_e = DualClass::point(h, theory, &e);
        for (label, z) in generators(h, r) {
            let iz = h.iota(&z, theory);
            t.check(bullet(h, &z, &pt_e).equals(&odot(h, &iz, &pt_e)), || format!("z . pt_e for z = {label} ({theory})"));
            for k in 0..3 {
                let f = sample::random_class(h, r, theory, 2);
                let g = sample::random_class(h, r, theory, 2);
                let lhs = push_to_point(h, &bullet(h, &z, &f).product(&g));
                let rhs = push_to_point(h, &f.product(&bullet(h, &iz, &g)));
                t.check(lhs.equals(&rhs), || format!("adjointness for z = {label}, sample {k} ({theory})"));
            }
        }
        let mut subsets = any_list(cfg);
        subsets.push(ParabolicSubset::full(h.rank()));
        for j in subsets {
            let y = h.push_pull(&j, PushPullMode::Full, theory);
            t.check(odot(h, &y, &pt_e).equals(&bullet(h, &y, &pt_e)), || format!("Y_J (.) pt_e for J={j} ({theory})"));
        }
    }
}

fn projection<S: Scalar>(h: &HeckeContext<S>, cfg: &CheckConfig, r: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    let m = Theory::Multiplicative;
    for j in any_list(cfg) {
        let basis: Vec<DualClass<S>> = invariant_basis(h, &j, m).into_iter().map(|p| p.1).collect();
        for k in 0..5 {
            let g = sample::random_class(h, r, m, 3);
            let yg = pushforward(h, &g, &j, PushMode::ToParabolic)?;
            t.check(is_invariant(h, &yg, &j), || format!("Y_J . g invariant, J={j}, sample {k}"));
            t.check(solve_in_span(h, &basis, &yg).is_some(), || format!("Y_J . g in span of g_w, J={j}, sample {k}"));
            let f = basis.iter().fold(DualClass::zero(h, m), |acc, b| acc.add(&b.scale(&h.lift(&sample::random_field(r, h.rank())))));
            let lhs = pushforward(h, &f.product(&g), &j, PushMode::ToParabolic)?;
            t.check(lhs.equals(&f.product(&yg)), || format!("projection formula, J={j}, sample {k}"));
        }
    }
    Ok(())
}

fn comp<S: Scalar>(h: &HeckeContext<S>, cfg: &CheckConfig, r: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    let full = ParabolicSubset::full(h.rank());
    for theory in [Theory::Multiplicative, Theory::Hyperbolic] {
        let y_pi = h.push_pull(&full, PushPullMode::Full, theory);
        for j in any_list(cfg) {
            let y_j = h.push_pull(&j, PushPullMode::Full, theory);
            let y_rel = h.push_pull(&j, PushPullMode::Relative, theory);
            t.check(eq(h, &h.mul(&y_rel, &y_j), &y_pi), || format!("Y_(Pi/J) Y_J = Y_Pi, J={j} ({theory})"));
            let wj = longest_in(h, &j);
            let alt: Vec<WeylElement> =
                h.elements().iter().filter(|u| j.is_minimal_left(u)).map(|u| u.compose(&wj)).collect();
            let y_alt = h.push_pull_relative_with(&j, &alt, theory);
            for k in 0..3 {
                let f = pushforward(h, &sample::random_class(h, r, theory, 2), &j, PushMode::ToParabolic)?;
                t.check(bullet(h, &y_alt, &f).equals(&bullet(h, &y_rel, &f)), || {
                    format!("representative independence, J={j}, sample {k} ({theory})")
                });
            }
        }
        let e = WeylElement::identity(h.rank());
        t.check(push_to_point(h, &DualClass::point(h, theory, &e)).equals(&DualClass::unit(h, theory)), || {
            format!("Y_Pi . pt_e = 1 ({theory})")
        });
        let f = sample::random_class(h, r, theory, 3);
        t.check(push_to_point(h, &f).as_constant().is_some(), || format!("Y_Pi . f is constant ({theory})"));
    }
    Ok(())
}

fn gamma_longest<S: Scalar>(h: &HeckeContext<S>, cfg: &CheckConfig, t: &mut Tally) {
    let tt = FieldElement::t();
    let tinv = FieldElement::t_pow(-1);
    for j in any_list(cfg) {
        let c = j
            .positive_roots()
            .into_iter()
            .fold(FieldElement::one(), |acc, a| acc.mul(&tt.sub(&tinv.mul(&FieldElement::exp(a)))));
        let y = h.push_pull(&j, PushPullMode::Full, Theory::Multiplicative);
        let wj = longest_in(h, &j);
        t.check(eq(h, &h.gamma(&wj, Sign::Plus), &h.mul(&y, &h.scalar(&c))), || format!("gamma^+_(w_J), J={j}"));
    }
}

fn kdual<S: Scalar>(h: &HeckeContext<S>, r: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    let els = h.elements();
    let pairs = sample::pairs(r, els, els, 576);
    let entries = k_duality_pairing(h, &pairs, None)?;
    let bad = pairing_is_diagonal(h, &entries);
    for (w, u) in &pairs {
        t.check(!bad.contains(&(*w, *u)), || fmt_pair(w, u));
    }
    Ok(())
}

fn kdual_parabolic<S: Scalar>(h: &HeckeContext<S>, cfg: &CheckConfig, t: &mut Tally) -> Result<()> {
    for j in any_list(cfg) {
        let reps: Vec<WeylElement> = h.elements().iter().filter(|u| j.is_minimal_left(u)).copied().collect();
        let pairs: Vec<(WeylElement, WeylElement)> = reps.iter().flat_map(|w| reps.iter().map(move |u| (*w, *u))).collect();
        let entries = k_duality_pairing(h, &pairs, Some(&j))?;
        let bad = pairing_is_diagonal(h, &entries);
        for (w, u) in &pairs {
            t.check(!bad.contains(&(*w, *u)), || format!("J={j} {}", fmt_pair(w, u)));
        }
    }
    Ok(())
}

fn grassmannian<S: Scalar>(h: &HeckeContext<S>, cfg: &CheckConfig, t: &mut Tally) -> Result<()> {
    for j in maximal_list(cfg)? {
        let gp = h.gamma(&longest_in(h, &j), Sign::Plus);
        for w in h.elements() {
            if j.is_minimal_left(w) {
                t.check(w.is_fully_commutative(), || format!("{w} in W^J is not fully commutative, J={j}"));
                let lhs = h.mul(&h.gamma(w, Sign::Minus), &gp);
                let rhs = h.mul(&h.gamma_hat(&w.canonical_word(), Sign::Minus), &gp);
                t.check(eq(h, &lhs, &rhs), || format!("gamma^-_u gamma^+_(w_J) at u={w}, J={j}"));
            }
            if !w.is_fully_commutative() {
                t.check(h.mul(&h.gamma(w, Sign::Minus), &gp).is_zero(), || format!("gamma^-_w gamma^+_(w_J) at w={w}, J={j}"));
            }
        }
    }
    Ok(())
}

fn lemma_b<S: Scalar>(h: &HeckeContext<S>, cfg: &CheckConfig, t: &mut Tally) -> Result<()> {
    let layer = HyperbolicLayer::new(h);
    for j in maximal_list(cfg)? {
        for w in h.elements() {
            let row = layer.b_hat_row(w, &j);
            for u in h.elements().iter().filter(|u| j.is_minimal_left(u)) {
                let bh = row.get(u).cloned().unwrap_or_else(|| h.zero_scalar());
                t.check(bh.equals(&layer.b(w, u)), || format!("J={j} {}", fmt_pair(w, u)));
            }
        }
    }
    Ok(())
}

fn fan_green<S: Scalar>(h: &HeckeContext<S>, t: &mut Tally) {
    for w in h.elements().iter().filter(|w| w.is_fully_commutative()) {
        let diff = h.sub(&h.gamma_hat(&w.canonical_word(), Sign::Minus), &h.gamma(w, Sign::Minus));
        let exp = h.expand(&diff, BasisTag::GammaMinus, None);
        t.check(exp.coeffs.keys().all(|v| !v.is_fully_commutative()), || format!("w={w}"));
    }
}

fn random_hecke(rank: usize, elements: &[WeylElement], r: &mut ChaCha8Rng) -> HeckeElement {
    let terms = (0..2).map(|_| {
        let w = sample::random_element(r, elements);
        let c = ScalarT::from_pairs(&[(r.gen_range(-2..=2), r.gen_range(1..=3)), (r.gen_range(-2..=2), r.gen_range(-3..=-1))]);
        (w, c)
    });
    HeckeElement::from_terms(rank, terms)
}

fn tl<S: Scalar>(h: &HeckeContext<S>, r: &mut ChaCha8Rng, t: &mut Tally) {
    let n = h.rank();
    let kl = h.kl();
    for i in 1..=n {
        let s = WeylElement::simple(n, i);
        let g = HeckeElement::kl_basis(kl, &s, Sign::Minus);
        let lhs = tl_project_hecke(kl, &g.mul(&g));
        let rhs = tl_project_hecke(kl, &g).scale(&ScalarT::mu().neg());
        t.check(lhs == rhs, || format!("E_{i}^2 = -mu E_{i}"));
        t.check(tl_project_hecke(kl, &g) == TLElement::generator(n, i), || format!("p(gamma^-_{i}) = E_{i}"));
    }
    for w in h.elements().iter().filter(|w| !w.is_fully_commutative()) {
        t.check(tl_project_hecke(kl, &HeckeElement::kl_basis(kl, w, Sign::Minus)).is_zero(), || format!("p(gamma^-_{w}) = 0"));
    }
    for k in 0..20 {
        let a = random_hecke(n, h.elements(), r);
        let b = random_hecke(n, h.elements(), r);
        let lhs = tl_project_hecke(kl, &a.mul(&b));
        let rhs = tl_project_hecke(kl, &a).mul(&tl_project_hecke(kl, &b));
        t.check(lhs == rhs, || format!("p(ab) = p(a)p(b), sample {k}"));
    }
}

fn x_relations<S: Scalar>(h: &HeckeContext<S>, t: &mut Tally) {
    let n = h.rank();
    let m2 = h.lift(&crate::field::mu_pow(-2));
    for i in 1..=n {
        let x = divided_difference(h, i, OperatorKind::X);
        let y = divided_difference(h, i, OperatorKind::Y);
        t.check(h.add(&h.mul(&x, &x), &x).is_zero(), || format!("X_{i}^2 = -X_{i}"));
        t.check(eq(h, &h.mul(&y, &y), &y), || format!("Y_{i}^2 = Y_{i}"));
        for j in 1..=n {
            if i == j {
                continue;
            }
            let xj = divided_difference(h, j, OperatorKind::X);
            if i.abs_diff(j) == 1 {
                let lhs = h.sub(&x_word(h, &[j as u8, i as u8, j as u8]), &x_word(h, &[i as u8, j as u8, i as u8]));
                let rhs = h.sub(&xj, &x).scale_left(&m2);
                t.check(eq(h, &lhs, &rhs), || format!("twisted braid X_{j} X_{i} X_{j}"));
            } else {
                t.check(eq(h, &h.mul(&x, &xj), &h.mul(&xj, &x)), || format!("X_{i} X_{j} commute"));
            }
        }
    }
}

fn psi_check<S: Scalar>(h: &HeckeContext<S>, cfg: &CheckConfig, t: &mut Tally) {
    let n = h.rank();
    let m = h.lift(&mu());
    let tt = h.scalar(&FieldElement::t());
    for i in 1..=n {
        let x = divided_difference(h, i, OperatorKind::X);
        let y = divided_difference(h, i, OperatorKind::Y);
        let my = y.scale_left(&m);
        t.check(eq(h, &psi(&h.tau_simple(i)), &h.sub(&my, &tt)), || format!("psi(tau_{i}) = mu Y_{i} - t"));
        t.check(eq(h, &psi(&h.gamma_simple(i, Sign::Plus)), &my), || format!("psi(gamma^+_{i}) = mu Y_{i}"));
        t.check(eq(h, &psi(&h.gamma_simple(i, Sign::Minus)), &x.scale_left(&m)), || format!("psi(gamma^-_{i}) = mu X_{i}"));
        for j in 1..=n {
            let lhs = psi(&h.mul(&h.tau_simple(i), &h.tau_simple(j)));
            let rhs = h.mul(&psi(&h.tau_simple(i)), &psi(&h.tau_simple(j)));
            t.check(eq(h, &lhs, &rhs), || format!("psi(tau_{i} tau_{j})"));
        }
    }
    for u in h.elements() {
        let word = u.canonical_word();
        let lhs = psi(&h.gamma_hat(&word, Sign::Minus));
        let rhs = x_word(h, &word).scale_left(&h.lift(&mu_w(u)));
        t.check(eq(h, &lhs, &rhs), || format!("psi(gamma-hat^-_(I_u)) = mu_u X_(I_u) at u={u}"));
    }
    let layer = HyperbolicLayer::new(h);
    for j in any_list(cfg) {
        t.check(layer.check_gamma_plus_longest(&j), || format!("psi(gamma^+_(w_J)) = mu_(w_J) Y_J, J={j}"));
    }
}

fn hyper<S: Scalar>(h: &HeckeContext<S>, t: &mut Tally) {
    let layer = HyperbolicLayer::new(h);
    let bad = layer.check_full_duality();
    t.check(bad.is_empty(), || format!("C_w C~_u pairing, first mismatch {}", fmt_pair(&bad[0].0, &bad[0].1)));
    let bad = layer.check_dual_basis();
    t.check(bad.is_empty(), || format!("C_w dual-basis pairing, first mismatch {}", fmt_pair(&bad[0].0, &bad[0].1)));
    let bad_dual = layer.check_corollary_dual(h.elements());
    for w in h.elements() {
        t.check(!bad_dual.contains(w), || format!("mu_w psi(gamma^-_w)^* = C~_w at {w}"));
        let ok = if w.is_identity() {
            {
            let (one, zero) = (h.one_scalar(), h.zero_scalar());
            h.elements().iter().all(|u| layer.b(w, u).equals(if u.is_identity() { &one } else { &zero }))
        }
        } else {
            h.elements().iter().filter(|u| !bruhat_leq(u, w)).all(|u| layer.b(w, u).is_zero())
        };
        t.check(ok, || format!("support of b_(w,.) at {w}"));
    }
    let e = WeylElement::identity(h.rank());
    t.check(layer.c(&e).equals(&layer.point(&e)), || "C_e = pt_e".into());
}

fn hyper_parabolic<S: Scalar>(h: &HeckeContext<S>, cfg: &CheckConfig, t: &mut Tally) -> Result<()> {
    let layer = HyperbolicLayer::new(h);
    let hy = Theory::Hyperbolic;
    let e = WeylElement::identity(h.rank());
    for j in maximal_list(cfg)? {
        let bad = layer.check_parabolic_duality(&j)?;
        t.check(bad.is_empty(), || format!("C^J_w C~^J_u pairing, J={j}, first mismatch {}", fmt_pair(&bad[0].0, &bad[0].1)));
        let y = h.push_pull(&j, PushPullMode::Full, hy);
        let reps: Vec<WeylElement> = h.elements().iter().filter(|u| j.is_minimal_left(u)).copied().collect();
        let members: Vec<WeylElement> = h.elements().iter().filter(|v| j.in_subgroup(v)).copied().collect();
        for u in &reps {
            let cj = layer.c_j(u, &j)?;
            let ct = layer.c_tilde(u);
            t.check(is_invariant(h, &cj, &j), || format!("C^J_{u} invariant, J={j}"));
            t.check(is_invariant(h, &ct, &j), || format!("C~^J_{u} invariant, J={j}"));
            let bs = bullet(h, &y, &odot(h, &x_word(h, &u.canonical_word()), &layer.point(&e)));
            t.check(cj.equals(&bs), || format!("C^J_{u} = Y_J . (X_(I_u) (.) pt_e), J={j}"));
            for w in h.elements() {
                let base = layer.b(w, u);
                let ok = members.iter().all(|v| layer.b(&w.compose(v), u).equals(&base));
                t.check(ok, || format!("b_(wv,u) = b_(w,u) at w={w} u={u}, J={j}"));
            }
        }
        let c_e = layer.c_tilde(&e);
        t.check(c_e.equals(&DualClass::unit(h, hy)), || format!("C~^J_e = 1, J={j}"));
    }
    Ok(())
}

fn rank_group<S: Scalar>(h: &HeckeContext<S>, j: &ParabolicSubset) -> Rewriter {
    Rewriter::for_subset(h.group(), j)
}

fn billey<S: Scalar>(h: &HeckeContext<S>, cfg: &CheckConfig, t: &mut Tally) -> Result<()> {
    let layer = HyperbolicLayer::new(h);
    for j in maximal_list(cfg)? {
        let rw = rank_group(h, &j);
        let reps: Vec<(WeylElement, DualClass<S>)> =
            h.elements().iter().filter(|u| j.is_minimal_left(u)).map(|u| (*u, layer.c_tilde(u))).collect();
        for w in h.elements() {
            let all = w.reduced_words();
            // at most six words, spread over the sorted list
            let step = all.len().div_ceil(6);
            let words: Vec<&Vec<u8>> = all.iter().step_by(step.max(1)).chain(all.last()).collect();
            let polys: Vec<_> =
                words.iter().map(|word| rw.root_polynomial(&ReducedWord::new(h.rank(), word).expect("reduced"))).collect();
            t.check(polys.windows(2).all(|p| p[0] == p[1]), || format!("R_(I_w) depends on the word at w={w}, J={j}"));
            let e = WeylElement::identity(h.rank());
            t.check(polys[0].coefficient(&e).is_one(), || format!("constant term at w={w}"));
            let word = ReducedWord::new(h.rank(), rw.chosen_word(w))?;
            let top = word.prefix_roots().into_iter().fold(FieldElement::one(), |acc, b| acc.mul(&embed_hyperbolic_chern(b)));
            t.check(polys[0].coefficient(w) == top, || format!("top term at w={w}"));
            let chosen = rw.root_polynomial(&word);
            t.check(chosen == polys[0], || format!("R_(I_w) differs from the J-compatible word at w={w}, J={j}"));
            for (u, ct) in &reps {
                let bp = h.lift(&chosen.coefficient(u));
                t.check(ct.at(h, w).equals(&bp), || format!("C~^J_u|_w = b-hat'_(w,I_u), J={j} {}", fmt_pair(w, u)));
            }
        }
    }
    Ok(())
}

fn billey_oracle<S: Scalar>(h: &HeckeContext<S>, cfg: &CheckConfig, t: &mut Tally) -> Result<()> {
    let layer = HyperbolicLayer::new(h);
    let mut scaled = 0;
    let mut total = 0;
    for j in maximal_list(cfg)? {
        let rw = rank_group(h, &j);
        for w in h.elements() {
            let row = layer.b_hat_row(w, &j);
            let chosen = rw.root_polynomial(&ReducedWord::new(h.rank(), rw.chosen_word(w))?);
            for u in h.elements().iter().filter(|u| j.is_minimal_left(u)) {
                let bp = h.lift(&chosen.coefficient(u));
                let bh = row.get(u).cloned().unwrap_or_else(|| h.zero_scalar());
                total += 1;
                if bp.equals(&bh.mul(&h.lift(&mu_w(u)))) {
                    scaled += 1;
                }
                t.check(bp.equals(&bh), || format!("J={j} {}", fmt_pair(w, u)));
            }
        }
    }
    t.note(format!("b-hat' = mu_u b-hat holds in {scaled} of {total} cases"));
    Ok(())
}
