mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use klschubert::billey::{billey_coefficient, restriction, Rewriter};
use klschubert::checks::{self, CheckConfig, CHECKS};
use klschubert::field::{FieldElement, ModScalar, Scalar, Theory};
use klschubert::hecke::{pairing_scalar, HeckeContext, Sign};
use klschubert::hyperbolic::{mu_w, ClassVariant, HyperbolicLayer};
use klschubert::localization::{k_duality_pairing, opposite_class, pairing_is_diagonal, schubert_class};
use klschubert::reproduce::reproduce;
use klschubert::weyl::{parse_indices, ParabolicSubset, ReducedWord, WeylElement, WeylGroup};
use klschubert::{Error, Result};

use output::{Format, Output};

#[derive(Parser)]
#[command(name = "klschubert", version, about = "Exact Kazhdan-Lusztig Schubert calculus in type A")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Clone)]
struct Common {
    /// Rank n of the root system A_n.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=5))]
    rank: u8,
    /// Parabolic subset J as a comma separated list of simple indices, e.g. "1,2".
    #[arg(long = "J", value_name = "J")]
    subset: Option<String>,
}

#[derive(Args, Clone)]
struct Sampling {
    /// Seed for every random choice.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Evaluate at random points modulo 2^61-1 instead of exact arithmetic.
    #[arg(long)]
    fast: bool,
}

#[derive(Copy, Clone, ValueEnum)]
enum TheoryArg {
    M,
    H,
}

impl From<TheoryArg> for Theory {
    fn from(t: TheoryArg) -> Theory {
        match t {
            TheoryArg::M => Theory::Multiplicative,
            TheoryArg::H => Theory::Hyperbolic,
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum SignArg {
    Plus,
    Minus,
}

#[derive(Subcommand)]
enum Command {
    /// Verify identities of the theory.
    Check {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        sampling: Sampling,
        /// Run every check.
        #[arg(long, conflicts_with_all = ["lemma", "list"])]
        all: bool,
        /// Run one named check; may be repeated.
        #[arg(long)]
        lemma: Vec<String>,
        /// List the available checks.
        #[arg(long)]
        list: bool,
    },
    /// Kazhdan-Lusztig polynomials P_{u,v}.
    Klpoly {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        u: Option<String>,
        #[arg(long)]
        v: Option<String>,
    },
    /// A KL basis element gamma^pm_w, or gamma-hat along a word, in the delta basis.
    Gamma {
        #[command(flatten)]
        common: Common,
        /// Element as one-line notation "2,1,3" or a word "s1s2".
        #[arg(long)]
        w: String,
        #[arg(long, value_enum, default_value = "minus")]
        sign: SignArg,
        /// Use the product of simple gammas along the given word.
        #[arg(long)]
        hat: bool,
    },
    /// Fixed-point restrictions of a class.
    Class {
        #[command(flatten)]
        common: Common,
        #[arg(long, visible_alias = "u")]
        w: String,
        /// c, ctilde, cj, ctildej or dual; theory m supports c and ctilde.
        #[arg(long, default_value = "c")]
        variant: String,
        #[arg(long, value_enum, default_value = "h")]
        theory: TheoryArg,
    },
    /// The restriction of C~^J_u at w, by root polynomials and from the class.
    Restrict {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        u: String,
        #[arg(long)]
        w: String,
    },
    /// Coefficients of X_{I_u} in the root polynomial R_{I_w}; without --w, the full matrix over W x W^J.
    Billey {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        w: Option<String>,
        #[arg(long, requires = "w")]
        u: Option<String>,
        /// List the contribution of every subword (needs --w and --u).
        #[arg(long, requires = "u")]
        table: bool,
    },
    /// K-theory duality pairing matrix.
    Kdual {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Hyperbolic duality between C and C~ (parabolic when --J is given).
    Duality {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Recompute the A_4 root-polynomial example term by term against the golden data.
    ReproducePaper,
}

enum Failure {
    Usage(String),
    Computation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::DivisionByZero | Error::NotInHecke(_) | Error::NotInvariant => Failure::Computation(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Computation(e.to_string())
    }
}

enum Exit {
    Done(bool),
    /// stdout was closed early, e.g. by `head`
    Closed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Exit::Done(true)) | Ok(Exit::Closed) => ExitCode::SUCCESS,
        Ok(Exit::Done(false)) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Computation(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> std::result::Result<Exit, Failure> {
    let out = match cli.command {
        Command::Check { common, sampling, all, lemma, list } => {
            if list {
                list_checks()
            } else {
                let names: Vec<String> = if all {
                    checks::check_names().map(str::to_string).collect()
                } else if lemma.is_empty() {
                    return Err(Failure::Usage("pass --all, --lemma NAME or --list".into()));
                } else {
                    lemma
                };
                let (rank, subset) = resolve(&common)?;
                let cfg = CheckConfig { rank, subset, seed: sampling.seed };
                if sampling.fast {
                    run_checks(&HeckeContext::<ModScalar>::modular(rank, sampling.seed)?, &names, &cfg, false)?
                } else {
                    run_checks(&HeckeContext::exact(rank)?, &names, &cfg, true)?
                }
            }
        }
        Command::Klpoly { common, u, v } => klpoly(&common, u.as_deref(), v.as_deref())?,
        Command::Gamma { common, w, sign, hat } => gamma(&common, &w, sign, hat)?,
        Command::Class { common, w, variant, theory } => class(&common, &w, &variant, theory.into())?,
        Command::Restrict { common, u, w } => restrict(&common, &u, &w)?,
        Command::Billey { common, w: Some(w), u, table } => billey(&common, &w, u.as_deref(), table)?,
        Command::Billey { common, w: None, .. } => billey_matrix(&common)?,
        Command::Kdual { common, sampling } => {
            let (rank, subset) = resolve(&common)?;
            if sampling.fast {
                kdual(&HeckeContext::<ModScalar>::modular(rank, sampling.seed)?, subset, |_| "ok".into())?
            } else {
                kdual(&HeckeContext::exact(rank)?, subset, |c| c.render(rank))?
            }
        }
        Command::Duality { common, sampling } => {
            let (rank, subset) = resolve(&common)?;
            if sampling.fast {
                duality(&HeckeContext::<ModScalar>::modular(rank, sampling.seed)?, subset)?
            } else {
                duality(&HeckeContext::exact(rank)?, subset)?
            }
        }
        Command::ReproducePaper => reproduce_paper()?,
    };
    match out.emit(cli.format) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(Exit::Closed),
        r => {
            r?;
            Ok(Exit::Done(out.passed))
        }
    }
}

fn resolve(common: &Common) -> Result<(usize, Option<ParabolicSubset>)> {
    let rank = common.rank as usize;
    let subset = common.subset.as_deref().map(|s| ParabolicSubset::parse(rank, s)).transpose()?;
    Ok((rank, subset))
}

fn require_subset(common: &Common) -> Result<(usize, ParabolicSubset)> {
    match resolve(common)? {
        (rank, Some(j)) => Ok((rank, j)),
        _ => Err(Error::InvalidParabolic("this command needs --J".into())),
    }
}

/// One-line notation `2,1,3`, a word `s2s1` (or `e` for the identity).
fn parse_element(rank: usize, s: &str) -> Result<WeylElement> {
    let s = s.trim();
    if s == "e" || s == "id" {
        return Ok(WeylElement::identity(rank));
    }
    if let Some(rest) = s.strip_prefix('s') {
        let letters = rest
            .split('s')
            .map(|p| p.trim().parse::<u8>().map_err(|_| Error::Parse(format!("bad word {s:?}"))))
            .collect::<Result<Vec<u8>>>()?;
        return WeylElement::from_word(rank, &letters);
    }
    // a permutation of 1..=n+1 is one-line notation, anything else a word in the simple indices
    let values = parse_indices(s)?;
    match WeylElement::from_one_line(&values) {
        Ok(w) if w.rank() == rank => Ok(w),
        _ => WeylElement::from_word(rank, &values),
    }
}

fn word_of(rank: usize, s: &str) -> Result<Vec<u8>> {
    match s.trim().strip_prefix('s') {
        Some(rest) => {
            let letters = rest
                .split('s')
                .map(|p| p.trim().parse::<u8>().map_err(|_| Error::Parse(format!("bad word {s:?}"))))
                .collect::<Result<Vec<u8>>>()?;
            WeylElement::from_word(rank, &letters)?;
            Ok(letters)
        }
        None => Ok(parse_element(rank, s)?.canonical_word()),
    }
}

fn word_label(word: &[u8]) -> String {
    if word.is_empty() {
        return "e".into();
    }
    word.iter().map(|i| format!("s{i}")).collect()
}

fn list_checks() -> Output {
    let mut out = Output::new(vec!["check", "description"], json!(CHECKS.iter().map(|(n, d)| json!({"name": n, "description": d})).collect::<Vec<_>>()));
    out.rows = CHECKS.iter().map(|(n, d)| vec![n.to_string(), d.to_string()]).collect();
    out
}

fn run_checks<S: Scalar>(h: &HeckeContext<S>, names: &[String], cfg: &CheckConfig, exact: bool) -> Result<Output> {
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let reports = checks::run_checks(h, &refs, cfg)?;
    let mode = if exact { "exact" } else { "probabilistic (mod 2^61-1)" };
    let mut out = Output::new(vec!["check", "result", "detail"], json!({ "rank": cfg.rank, "mode": mode, "seed": cfg.seed, "reports": reports }));
    out.header.push(format!("rank {}, {mode}, seed {}", cfg.rank, cfg.seed));
    if exact && names.iter().any(|n| n == "klcom") {
        let a = klschubert::hecke::a_w0_exact(cfg.rank);
        out.header.push(format!("a_w0 = {}", a.render(cfg.rank)));
        out.json["a_w0"] = a.to_json(cfg.rank);
        let p = pairing_scalar(cfg.rank);
        out.header.push(format!("a_w0 w0(x_Pi) = prod (t - t^-1 e^-alpha) = {}", p.render(cfg.rank)));
        out.json["pairing_value"] = p.to_json(cfg.rank);
    }
    for r in &reports {
        out.rows.push(vec![r.name.clone(), if r.passed { "PASS" } else { "FAIL" }.into(), r.summary.clone()]);
        for w in &r.witnesses {
            out.footer.push(format!("{}: {w}", r.name));
        }
    }
    out.passed = reports.iter().all(|r| r.passed);
    let failed = reports.iter().filter(|r| !r.passed).count();
    out.footer.push(format!("{} of {} checks passed", reports.len() - failed, reports.len()));
    Ok(out)
}

fn klpoly(common: &Common, u: Option<&str>, v: Option<&str>) -> Result<Output> {
    let (rank, _) = resolve(common)?;
    let h = HeckeContext::exact(rank)?;
    let kl = h.kl();
    let pick = |s: Option<&str>| s.map(|s| parse_element(rank, s)).transpose();
    let (u, v) = (pick(u)?, pick(v)?);
    let mut out = Output::new(vec!["u", "v", "P_{u,v}"], Value::Null);
    let mut entries = Vec::new();
    for a in h.elements() {
        for b in h.elements() {
            if u.is_some_and(|x| x != *a) || v.is_some_and(|x| x != *b) || !kl.leq(a, b) {
                continue;
            }
            let p = kl.get(a, b);
            out.rows.push(vec![a.to_string(), b.to_string(), p.to_string()]);
            entries.push(json!({"u": a.to_string(), "v": b.to_string(), "coeffs": p.coeffs()}));
        }
    }
    if let (Some(a), Some(b)) = (u, v) {
        if !kl.leq(&a, &b) {
            out.rows.push(vec![a.to_string(), b.to_string(), "0".into()]);
            entries.push(json!({"u": a.to_string(), "v": b.to_string(), "coeffs": []}));
        }
    }
    out.json = json!({"rank": rank, "polynomials": entries});
    Ok(out)
}

fn gamma(common: &Common, w: &str, sign: SignArg, hat: bool) -> Result<Output> {
    let (rank, _) = resolve(common)?;
    let h = HeckeContext::exact(rank)?;
    let sign = match sign {
        SignArg::Plus => Sign::Plus,
        SignArg::Minus => Sign::Minus,
    };
    let (label, z) = if hat {
        let word = word_of(rank, w)?;
        (format!("gamma-hat^{}_({})", sign.symbol(), word_label(&word)), h.gamma_hat(&word, sign))
    } else {
        let el = parse_element(rank, w)?;
        (format!("gamma^{}_{{{el}}}", sign.symbol()), h.gamma(&el, sign))
    };
    let mut out = Output::new(vec!["delta", "coefficient"], Value::Null);
    out.header.push(label.clone());
    let mut terms = Vec::new();
    for (v, c) in z.terms() {
        out.rows.push(vec![v.to_string(), c.render(rank)]);
        terms.push(json!({"delta": v.to_string(), "coefficient": c.to_json(rank)}));
    }
    out.json = json!({"rank": rank, "element": label, "terms": terms});
    Ok(out)
}

fn class(common: &Common, w: &str, variant: &str, theory: Theory) -> Result<Output> {
    let (rank, subset) = resolve(common)?;
    let h = HeckeContext::exact(rank)?;
    let w = parse_element(rank, w)?;
    let variant: ClassVariant = variant.parse()?;
    let cls = match theory {
        Theory::Hyperbolic => HyperbolicLayer::new(&h).class(&w, variant, subset.as_ref())?.class,
        Theory::Multiplicative => match variant {
            ClassVariant::C => schubert_class(&h, &w, theory),
            ClassVariant::CTilde => opposite_class(&h, &w, theory),
            _ => return Err(Error::Parse("theory m supports the variants c and ctilde".into())),
        },
    };
    let mut out = Output::new(vec!["fixed point", "restriction"], Value::Null);
    out.header.push(format!("{variant:?} class of {w}, theory {theory}"));
    let mut values = Vec::new();
    for ((v, text), c) in cls.render(&h).into_iter().zip(cls.coeffs()) {
        values.push(json!({"fixed_point": v.to_string(), "value": c.to_json(rank)}));
        out.rows.push(vec![v.to_string(), text]);
    }
    out.json = json!({"rank": rank, "w": w.to_string(), "variant": format!("{variant:?}"), "theory": theory.to_string(), "restrictions": values});
    Ok(out)
}

fn restrict(common: &Common, u: &str, w: &str) -> Result<Output> {
    let (rank, j) = require_subset(common)?;
    let (u, w) = (parse_element(rank, u)?, parse_element(rank, w)?);
    let group = WeylGroup::new(rank)?;
    let rw = Rewriter::for_subset(&group, &j);
    let coeff = billey_coefficient(&rw, &w, &u, &j)?;
    let formula = restriction(&rw, &u, &w, &j)?;
    let mut rows = vec![("b-hat'_{w,I_u}", coeff), ("mu_u b-hat'_{w,I_u}", formula)];
    // the class itself needs the twisted algebra, which is only cheap enough up to rank 4
    if rank <= 4 {
        let h = HeckeContext::exact(rank)?;
        let layer = HyperbolicLayer::new(&h);
        rows.push(("C~^J_u|_w", layer.class_restriction(&u, &w, &j)?));
        rows.push(("mu_u b-hat_{w,I_u}", mu_w(&u).mul(&layer.b_hat(&w, &u, &j))));
    }
    let mut out = Output::new(vec!["quantity", "value"], Value::Null);
    out.header.push(format!("u={u} w={w} J={j}"));
    out.rows = rows.iter().map(|(k, v)| vec![k.to_string(), v.render(rank)]).collect();
    out.json = json!({
        "rank": rank, "u": u.to_string(), "w": w.to_string(), "J": j.to_string(),
        "values": rows.iter().map(|(k, v)| json!({"quantity": k, "value": v.to_json(rank)})).collect::<Vec<_>>(),
    });
    Ok(out)
}

fn billey(common: &Common, w: &str, u: Option<&str>, table: bool) -> Result<Output> {
    let (rank, j) = require_subset(common)?;
    let w = parse_element(rank, w)?;
    let group = WeylGroup::new(rank)?;
    let rw = Rewriter::for_subset(&group, &j);
    let word = rw.chosen_word(&w).to_vec();
    let mut out = Output::new(vec![], Value::Null);
    out.header.push(format!("w={w} I_w={} J={j}", word_label(&word)));
    match u {
        Some(u) if table => {
            let u = parse_element(rank, u)?;
            billey_coefficient(&rw, &w, &u, &j)?;
            let terms = rw.subword_contributions(&ReducedWord::new(rank, &word)?, &u);
            out.columns = vec!["subword", "contribution"];
            out.rows = terms.iter().map(|t| vec![t.label(), t.value.render(rank)]).collect();
            let total = FieldElement::sum(terms.iter().map(|t| t.value.clone()));
            out.footer.push(format!("sum = {}", total.render(rank)));
            out.json = json!({
                "rank": rank, "w": w.to_string(), "u": u.to_string(), "J": j.to_string(),
                "terms": terms.iter().map(|t| json!({"subword": t.label(), "value": t.value.to_json(rank)})).collect::<Vec<_>>(),
                "sum": total.to_json(rank),
            });
        }
        _ => {
            let targets: Vec<WeylElement> = match u {
                Some(u) => vec![parse_element(rank, u)?],
                None => group.elements().iter().filter(|v| j.is_minimal_left(v)).copied().collect(),
            };
            out.columns = vec!["u", "b-hat'_{w,I_u}"];
            let mut values = Vec::new();
            for v in targets {
                let c = billey_coefficient(&rw, &w, &v, &j)?;
                out.rows.push(vec![v.to_string(), c.render(rank)]);
                values.push(json!({"u": v.to_string(), "value": c.to_json(rank)}));
            }
            out.json = json!({"rank": rank, "w": w.to_string(), "J": j.to_string(), "coefficients": values});
        }
    }
    Ok(out)
}

/// `b-hat'_{w,I_u}` and `mu_u b-hat'_{w,I_u}` for every `w` and every `u` in `W^J`.
fn billey_matrix(common: &Common) -> Result<Output> {
    let (rank, j) = require_subset(common)?;
    let group = WeylGroup::new(rank)?;
    let rw = Rewriter::for_subset(&group, &j);
    let reps: Vec<WeylElement> = group.elements().iter().filter(|v| j.is_minimal_left(v)).copied().collect();
    let mut out = Output::new(vec!["w", "u", "b-hat'_{w,I_u}", "mu_u b-hat'_{w,I_u}"], Value::Null);
    out.header.push(format!("J={j}"));
    let mut entries = Vec::new();
    for w in group.elements() {
        let poly = rw.root_polynomial(&ReducedWord::new(rank, rw.chosen_word(w))?);
        for u in &reps {
            let c = poly.coefficient(u);
            let r = mu_w(u).mul(&c);
            out.rows.push(vec![w.to_string(), u.to_string(), c.render(rank), r.render(rank)]);
            entries.push(json!({"w": w.to_string(), "u": u.to_string(), "coefficient": c.to_json(rank), "restriction": r.to_json(rank)}));
        }
    }
    out.json = json!({"rank": rank, "J": j.to_string(), "entries": entries});
    Ok(out)
}

fn kdual<S: Scalar>(h: &HeckeContext<S>, subset: Option<ParabolicSubset>, show: impl Fn(&S) -> String) -> Result<Output> {
    let reps: Vec<WeylElement> = match &subset {
        Some(j) => h.elements().iter().filter(|u| j.is_minimal_left(u)).copied().collect(),
        None => h.elements().to_vec(),
    };
    let pairs: Vec<(WeylElement, WeylElement)> = reps.iter().flat_map(|w| reps.iter().map(move |u| (*w, *u))).collect();
    let entries = k_duality_pairing(h, &pairs, subset.as_ref())?;
    let bad = pairing_is_diagonal(h, &entries);
    let mut out = Output::new(vec!["w", "u", "ok", "value"], Value::Null);
    let rank = h.rank();
    out.header.push(format!(
        "expected diagonal value {}",
        pairing_scalar(rank).render(rank)
    ));
    let mut rows = Vec::new();
    for e in &entries {
        let ok = !bad.contains(&(e.w, e.u));
        let value = e.value.as_ref().map_or_else(|| "not constant".to_string(), &show);
        out.rows.push(vec![e.w.to_string(), e.u.to_string(), ok.to_string(), value.clone()]);
        rows.push(json!({"w": e.w.to_string(), "u": e.u.to_string(), "ok": ok, "value": value}));
    }
    out.passed = bad.is_empty();
    out.footer.push(format!("{} of {} entries as expected", entries.len() - bad.len(), entries.len()));
    out.json = json!({"rank": rank, "J": subset.map(|j| j.to_string()), "entries": rows, "passed": out.passed});
    Ok(out)
}

fn duality<S: Scalar>(h: &HeckeContext<S>, subset: Option<ParabolicSubset>) -> Result<Output> {
    let layer = HyperbolicLayer::new(h);
    let mut results = vec![];
    match &subset {
        Some(j) => results.push(("C^J_w vs C~^J_u", layer.check_parabolic_duality(j)?)),
        None => {
            results.push(("C_w vs C~_u", layer.check_full_duality()));
            results.push(("C_w vs dual basis", layer.check_dual_basis()));
        }
    }
    let mut out = Output::new(vec!["pairing", "result", "mismatches"], Value::Null);
    let mut js = Vec::new();
    for (name, bad) in &results {
        let listed: Vec<String> = bad.iter().map(|(w, u)| format!("({w};{u})")).collect();
        out.rows.push(vec![name.to_string(), if bad.is_empty() { "PASS" } else { "FAIL" }.into(), listed.join(" ")]);
        js.push(json!({"pairing": name, "passed": bad.is_empty(), "mismatches": listed}));
    }
    out.passed = results.iter().all(|(_, b)| b.is_empty());
    out.json = json!({"rank": h.rank(), "J": subset.map(|j| j.to_string()), "results": js});
    Ok(out)
}

fn reproduce_paper() -> Result<Output> {
    let r = reproduce()?;
    let mut out = Output::new(vec!["subword", "match", "term"], serde_json::to_value(&r).expect("serializable"));
    out.header.push(format!("A_4, J={}, w={}, u={}", r.subset, r.w, r.u));
    for row in &r.rows {
        let term = row.expected.clone().unwrap_or_else(|| "(not in golden table)".into());
        out.rows.push(vec![row.subword.clone(), if row.matches { "ok" } else { "MISMATCH" }.into(), term]);
        if let Some(c) = &row.computed {
            out.footer.push(format!("{} computed: {c}", row.subword));
        }
    }
    let yes = |b: bool| if b { "yes" } else { "NO" };
    out.footer.push(format!("sum equals the coefficient of X_(I_u) in R_(I_w): {}", yes(r.sum_matches_coefficient)));
    out.footer.push(format!("restriction(u, w, J) = mu^2 * sum: {}", yes(r.restriction_matches)));
    out.passed = r.passed();
    out.json["passed"] = json!(out.passed);
    Ok(out)
}
