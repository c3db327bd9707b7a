//! Batch front end: TOML job files in, pretty JSON reports out, plus a built-in selftest.

use std::collections::HashSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::blowup::{pullback, pushdown, regularity_criterion};
use crate::classify::{classify, Evidence, SurfaceInvariants};
use crate::elliptic::{
    canonical_bundle_degree, delta_degree, exists_nilpotent_special_tensor, is_properly_elliptic,
    multiple_fibre_claim_check, special_tensor_degree, weierstrass_example, EllipticDescriptor,
    FibreType, KodairaFibre, KodairaTable,
};
use crate::error::Error;
use crate::polyalg::substitute;
use crate::sample;
use crate::surfaces::{
    h0_fn_lattice, h0_fn_recursive, h0_fn_trace, product_bigenus, product_invariants,
    product_special_tensor_dim, split_tangent_identities, DivisorFn, NumericalProfile,
    ProductSurface,
};
use crate::tensor::{
    eigen_split, endo_to_tensor, nilpotent_decompose, nilpotent_endo, tensor_det, tensor_to_endo,
    SymTensor,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "bidisk",
    version,
    about = "Special tensors, model surfaces and bidisk uniformization checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run every job in a TOML job file and write a JSON report.
    Run {
        jobfile: PathBuf,
        /// Output path; stdout when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Run the built-in verification suite.
    Selftest {
        /// Kodaira table to check instead of the shipped one.
        #[arg(long)]
        fixture: Option<PathBuf>,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let stdout = std::io::stdout();
    match cli.command {
        Command::Run { jobfile, out } => run(&jobfile, out.as_deref(), &mut stdout.lock()),
        Command::Selftest { fixture } => {
            let (code, _) = selftest(fixture.as_deref(), &mut stdout.lock());
            code
        }
    }
}

/// Job payloads, tagged by `kind`.
#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum JobSpec {
    Classify(SurfaceInvariants),
    Tensor(TensorInput),
    Blowup(TensorInput),
    H0(DivisorFn),
    Elliptic(EllipticInput),
    Product(ProductSurface),
    Weierstrass(WeierstrassInput),
}

impl JobSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            JobSpec::Classify(_) => "classify",
            JobSpec::Tensor(_) => "tensor",
            JobSpec::Blowup(_) => "blowup",
            JobSpec::H0(_) => "h0",
            JobSpec::Elliptic(_) => "elliptic",
            JobSpec::Product(_) => "product",
            JobSpec::Weierstrass(_) => "weierstrass",
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorInput {
    /// Literal such as `"a11=z1; a22=z2; a12=0"`.
    pub tensor: String,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeierstrassInput {
    pub h: u32,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EllipticInput {
    pub b: i64,
    pub chi: i64,
    pub pg: i64,
    pub q: i64,
    #[serde(default)]
    pub multiple_fibre_orders: Vec<u32>,
    /// Kodaira tags such as `"I3"`, `"II*"`, `"2I0"`.
    #[serde(default)]
    pub singular_fibres: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct Job {
    pub id: String,
    pub line: usize,
    pub spec: JobSpec,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    #[serde(default)]
    job: Vec<toml::Spanned<toml::Table>>,
}

fn line_of(src: &str, offset: usize) -> usize {
    src[..offset.min(src.len())].matches('\n').count() + 1
}

/// Parses a job file. Errors name the line of the offending job.
pub fn parse_jobs(src: &str) -> Result<Vec<Job>, String> {
    let raw: RawFile = toml::from_str(src).map_err(|e| {
        let at = e
            .span()
            .map(|s| format!("line {}: ", line_of(src, s.start)))
            .unwrap_or_default();
        format!("{at}{}", e.message())
    })?;
    let mut seen = HashSet::new();
    let mut jobs = Vec::with_capacity(raw.job.len());
    for spanned in raw.job {
        let line = line_of(src, spanned.span().start);
        let mut table = spanned.into_inner();
        let id = match table.remove("id") {
            Some(toml::Value::String(s)) => s,
            Some(_) => return Err(format!("line {line}: job id must be a string")),
            None => return Err(format!("line {line}: job without id")),
        };
        if !seen.insert(id.clone()) {
            return Err(format!("line {line}: duplicate job id {id:?}"));
        }
        let spec: JobSpec = toml::Value::Table(table)
            .try_into()
            .map_err(|e: toml::de::Error| format!("line {line}: job {id:?}: {}", e.message()))?;
        jobs.push(Job { id, line, spec });
    }
    Ok(jobs)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JobReport {
    pub id: String,
    pub kind: String,
    pub status: String,
    pub verdict: Option<String>,
    pub result: Value,
    pub evidence: Vec<Evidence>,
    pub warnings: Vec<String>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub jobs: Vec<JobReport>,
}

impl Report {
    pub fn has_errors(&self) -> bool {
        self.jobs.iter().any(|j| j.error.is_some())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[derive(Default)]
struct Outcome {
    verdict: Option<String>,
    result: Value,
    evidence: Vec<Evidence>,
    warnings: Vec<String>,
}

impl Outcome {
    fn check(&mut self, label: &str, passed: bool, detail: impl Into<String>) {
        self.evidence.push(Evidence {
            label: label.to_string(),
            detail: detail.into(),
            passed,
        });
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

pub fn run_job(job: &Job) -> JobReport {
    let outcome = match &job.spec {
        JobSpec::Classify(inv) => classify_job(inv),
        JobSpec::Tensor(t) => tensor_job(t),
        JobSpec::Blowup(t) => blowup_job(t),
        JobSpec::H0(d) => Ok(h0_job(*d)),
        JobSpec::Elliptic(e) => elliptic_job(e),
        JobSpec::Product(p) => Ok(product_job(*p)),
        JobSpec::Weierstrass(w) => weierstrass_job(w.h),
    };
    let (status, error, o) = match outcome {
        Ok(o) => ("ok", None, o),
        Err(e) => ("error", Some(e.to_string()), Outcome::default()),
    };
    JobReport {
        id: job.id.clone(),
        kind: job.spec.kind().to_string(),
        status: status.to_string(),
        verdict: o.verdict,
        result: o.result,
        evidence: o.evidence,
        warnings: o.warnings,
        error,
    }
}

pub fn run_all(jobs: &[Job]) -> Report {
    Report {
        jobs: jobs.par_iter().map(run_job).collect(),
    }
}

/// Runs a job file; returns the exit status.
pub fn run(job_path: &Path, out: Option<&Path>, stdout: &mut dyn Write) -> i32 {
    let src = match std::fs::read_to_string(job_path) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", job_path.display());
            return EXIT_USAGE;
        }
    };
    let jobs = match parse_jobs(&src) {
        Ok(j) => j,
        Err(e) => {
            eprintln!("error: {}: {e}", job_path.display());
            return EXIT_USAGE;
        }
    };
    let report = run_all(&jobs);
    let text = report.to_json();
    let written = match out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return EXIT_USAGE;
    }
    if report.has_errors() {
        EXIT_FAILED
    } else {
        EXIT_OK
    }
}

fn classify_job(inv: &SurfaceInvariants) -> Result<Outcome, Error> {
    let c = classify(inv)?;
    Ok(Outcome {
        verdict: Some(c.verdict.to_string()),
        result: to_value(&c.verdict),
        evidence: c.evidence,
        warnings: Vec::new(),
    })
}

fn tensor_job(input: &TensorInput) -> Result<Outcome, Error> {
    let w: SymTensor = input.tensor.parse()?;
    let e = tensor_to_endo(&w);
    let det = tensor_det(&w);
    let mut o = Outcome::default();
    o.check(
        "tensor-endomorphism-correspondence",
        endo_to_tensor(&e)? == w && e.trace().is_zero(),
        "trace-zero endomorphism recovers the tensor",
    );
    let mut result = json!({
        "tensor": w.to_string(),
        "endomorphism": e.to_string(),
        "determinant": det,
    });
    if det.value.is_zero() {
        match nilpotent_decompose(&w) {
            Ok(n) => {
                o.check(
                    "nilpotent-decomposition",
                    n.verify(&e),
                    "e^2 = 0, e (beta, gamma)^t = 0, columns of e/delta lie on (beta, gamma)",
                );
                result["nilpotent"] = to_value(&n);
            }
            Err(err @ Error::NotASquare(_)) => {
                o.warnings.push(format!(
                    "nilpotent decomposition needs square roots outside Q[z1, z2]: {err}"
                ));
                result["nilpotent"] = Value::Null;
            }
            Err(err) => return Err(err),
        }
    } else if det.constant {
        let s = eigen_split(&w)?;
        o.check(
            "eigen-splitting",
            s.verify(&e),
            format!("eigenvalues +-{}", s.eigenvalue),
        );
        result["eigen"] = to_value(&s);
    } else {
        o.warnings.push(format!(
            "determinant {} is not constant, so this is not a special tensor",
            det.value
        ));
    }
    o.result = result;
    Ok(o)
}

fn blowup_job(input: &TensorInput) -> Result<Outcome, Error> {
    let w: SymTensor = input.tensor.parse()?;
    let regular = regularity_criterion(&w);
    let mut o = Outcome::default();
    o.check(
        "blowup-regularity",
        regular,
        "all coefficients vanish at the center",
    );
    match pullback(&w) {
        Ok(chart) => {
            let x = crate::polyalg::Poly2::z1();
            let ux = &x * &crate::polyalg::Poly2::z2();
            let pulled_det = substitute(&tensor_det(&w).value, &x, &ux);
            o.check(
                "blowup-determinant",
                tensor_det(&chart.tensor).value == pulled_det,
                "chart determinant is the pulled-back determinant",
            );
            o.check(
                "blowup-pushdown",
                pushdown(&chart)? == w,
                "pushdown recovers the tensor",
            );
            o.result = json!({ "regular": true, "chart": chart });
        }
        Err(Error::NonRegular(rest)) => {
            o.result = json!({ "regular": false, "chart": Value::Null, "pole_numerator": rest });
        }
        Err(e) => return Err(e),
    }
    Ok(o)
}

fn h0_job(d: DivisorFn) -> Outcome {
    let trace = h0_fn_trace(d);
    let lattice = h0_fn_lattice(d);
    let mut o = Outcome::default();
    o.check(
        "hirzebruch-lattice-oracle",
        trace.value == lattice,
        format!("recursive {} vs lattice {lattice}", trace.value),
    );
    o.result = json!({ "value": trace.value, "lattice": lattice, "steps": trace.steps });
    o
}

fn elliptic_job(input: &EllipticInput) -> Result<Outcome, Error> {
    let fibres = input
        .singular_fibres
        .iter()
        .map(|t| t.parse::<FibreType>().map(KodairaFibre::standard))
        .collect::<Result<Vec<_>, _>>()?;
    let d = EllipticDescriptor {
        b: input.b,
        chi: input.chi,
        pg: input.pg,
        q: input.q,
        multiple_fibre_orders: input.multiple_fibre_orders.clone(),
        singular_fibres: fibres,
    };
    d.validate()?;
    let mut o = Outcome::default();
    let delta = delta_degree(d.chi, d.b);
    let tensor_degree = special_tensor_degree(d.b, d.pg)?;
    o.check(
        "canonical-bundle-formula",
        delta + tensor_degree == 4 * d.b - 4,
        format!("deg delta = {delta}, deg(2K_B - delta) = {tensor_degree}"),
    );
    let existence = exists_nilpotent_special_tensor(d.b, d.pg)?;
    o.check(
        "riemann-roch-effectiveness",
        existence.guaranteed,
        existence.reason.clone(),
    );
    let fibre_checks: Vec<Value> = d
        .singular_fibres
        .iter()
        .map(|f| {
            let holds = multiple_fibre_claim_check(f);
            o.check(
                "multiple_fibre_claim_check",
                holds,
                format!("fibre {}", f.kind),
            );
            json!({ "fibre": f.kind, "multiplicities": f.multiplicities, "holds": holds })
        })
        .collect();
    let canonical = canonical_bundle_degree(&d);
    o.result = json!({
        "delta_degree": delta,
        "special_tensor_degree": tensor_degree,
        "nilpotent_tensor_guaranteed": existence.guaranteed,
        "canonical_degree": canonical,
        "properly_elliptic": is_properly_elliptic(&d),
        "fibres": fibre_checks,
    });
    if !is_properly_elliptic(&d) {
        o.warnings.push(format!(
            "canonical degree {canonical} <= 0: not properly elliptic"
        ));
    }
    Ok(o)
}

fn product_job(p: ProductSurface) -> Outcome {
    let inv = product_invariants(p);
    let dim = product_special_tensor_dim(p);
    let p2 = product_bigenus(p);
    let mut o = Outcome::default();
    o.check(
        "split-tangent-identities",
        split_tangent_identities(&inv),
        format!("K2 = {} = 8 chi, c2 = {}", inv.k2, inv.c2),
    );
    o.check(
        "noether",
        NumericalProfile::new(inv.k2, inv.chi, inv.c2, inv.q, inv.pg).is_ok(),
        "12 chi = K2 + c2 and chi = 1 + pg - q",
    );
    let (lo, hi) = (p.g1.min(p.g2), p.g1.max(p.g2));
    if lo == 1 && hi >= 2 {
        o.warnings.push(format!(
            "discrepancy: Kunneth gives h0(S^2 Omega^1(-K)) = {dim} for genera ({}, {}), so the special tensor is not unique although uniqueness is expected for this product",
            p.g1, p.g2
        ));
    }
    o.result = json!({
        "invariants": inv,
        "p2": p2,
        "special_tensor_dim": dim,
    });
    o
}

fn weierstrass_job(h: u32) -> Result<Outcome, Error> {
    let w = weierstrass_example(h)?;
    let mut o = Outcome::default();
    o.check(
        "weierstrass-residual-class",
        w.residual_degree == 0 && w.h0 == 1,
        format!("deg(K_B - 6M) = {}, h0 = {}", w.residual_degree, w.h0),
    );
    o.warnings.push(
        "h0 = 1 assumes K_B is linearly equivalent to 6M (M = h times the hyperelliptic g^1_2)"
            .into(),
    );
    o.result = to_value(&w);
    Ok(o)
}

/// One selftest check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

const SEED: u64 = 0x5eed_b1d1;

fn check(name: &'static str, failures: Vec<String>, ok: String) -> CheckResult {
    CheckResult {
        name,
        passed: failures.is_empty(),
        detail: failures.into_iter().next().unwrap_or(ok),
    }
}

fn table_checks(table: &KodairaTable) -> Vec<CheckResult> {
    let claim: Vec<String> = table
        .fibres
        .iter()
        .filter(|f| !multiple_fibre_claim_check(f))
        .map(|f| format!("fails on {} {:?}", f.kind, f.multiplicities))
        .collect();
    let standard: Vec<String> = KodairaTable::required_types()
        .into_iter()
        .filter_map(|t| match table.lookup(t) {
            None => Some(format!("{t} missing")),
            Some(f) if f.multiplicities != t.standard_multiplicities() => {
                Some(format!("{t} has {:?}", f.multiplicities))
            }
            Some(_) => None,
        })
        .collect();
    vec![
        check(
            "multiple_fibre_claim_check",
            claim,
            format!("{} fibres", table.fibres.len()),
        ),
        check(
            "kodaira_table_standard",
            standard,
            "all required types present".into(),
        ),
    ]
}

fn hirzebruch_check() -> CheckResult {
    let mut failures = Vec::new();
    let mut count = 0;
    for n in 0..=5 {
        for a in -10..=10 {
            for b in -10..=10 {
                let d = DivisorFn::new(n, a, b);
                count += 1;
                if h0_fn_recursive(d) != h0_fn_lattice(d) {
                    failures.push(format!("disagree at {d:?}"));
                }
            }
        }
    }
    check("hirzebruch_oracle", failures, format!("{count} divisors"))
}

fn rational_vanishing_check() -> CheckResult {
    let failures = (0..=20u32)
        .filter_map(|n| {
            let nn = n as i64 + 2;
            let chain = [
                DivisorFn::new(n, 2, -nn),
                DivisorFn::new(n, 1, -nn),
                DivisorFn::new(n, 0, -nn),
            ];
            let ok = chain
                .iter()
                .all(|&d| h0_fn_recursive(d) == 0 && h0_fn_lattice(d) == 0)
                && h0_fn_trace(chain[0])
                    .steps
                    .iter()
                    .map(|s| s.divisor)
                    .eq(chain);
            (!ok).then(|| format!("n = {n}"))
        })
        .collect();
    check(
        "rational_vanishing",
        failures,
        "h0(2 Sigma - (n + 2) F) = 0 for n <= 20".into(),
    )
}

fn tensor_roundtrip_check() -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut failures = Vec::new();
    for i in 0..200 {
        let w = sample::tensor(&mut rng, 4);
        if endo_to_tensor(&tensor_to_endo(&w)).ok() != Some(w.clone()) {
            failures.push(format!("tensor round trip #{i}: {w}"));
        }
        let e = sample::trace_zero_endo(&mut rng, 4);
        if endo_to_tensor(&e).map(|t| tensor_to_endo(&t)).ok() != Some(e.clone()) {
            failures.push(format!("endomorphism round trip #{i}: {e}"));
        }
    }
    check(
        "tensor_roundtrip",
        failures,
        "200 tensors, 200 endomorphisms".into(),
    )
}

fn nilpotent_check() -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let mut failures = Vec::new();
    for i in 0..150 {
        let (delta, beta, gamma) = sample::nilpotent_triple(&mut rng, 4);
        let e = nilpotent_endo(&delta, &beta, &gamma);
        let ok = endo_to_tensor(&e)
            .and_then(|w| nilpotent_decompose(&w))
            .is_ok_and(|n| n.delta == delta && n.beta == beta && n.gamma == gamma && n.verify(&e));
        if !ok {
            failures.push(format!(
                "#{i}: delta = {delta}, beta = {beta}, gamma = {gamma}"
            ));
        }
    }
    check("nilpotent_synthesis", failures, "150 triples".into())
}

fn blowup_check() -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    let mut failures = Vec::new();
    let mut cases: Vec<SymTensor> = vec!["a11=1; a22=0; a12=0".parse().expect("literal")];
    cases.extend((0..250).map(|_| sample::tensor_near_origin(&mut rng, 3)));
    for w in &cases {
        let lifted = pullback(w);
        if lifted.is_ok() != regularity_criterion(w) {
            failures.push(format!("criterion disagrees on {w}"));
        }
        if let Ok(chart) = lifted {
            if pushdown(&chart).ok().as_ref() != Some(w) {
                failures.push(format!("pushdown fails on {w}"));
            }
        }
    }
    check(
        "blowup_equivalence",
        failures,
        format!("{} tensors", cases.len()),
    )
}

fn product_check() -> CheckResult {
    let mut failures = Vec::new();
    for g1 in 0..=6 {
        for g2 in 0..=6 {
            let p = ProductSurface { g1, g2 };
            let n = product_invariants(p);
            let ok = n.k2 == 8 * n.chi
                && n.c2 == 12 * n.chi - n.k2
                && n.chi == 1 + n.pg - n.q
                && split_tangent_identities(&n);
            if !ok {
                failures.push(format!("({g1}, {g2})"));
            }
            let dim = product_special_tensor_dim(p);
            let expected = match (g1.min(g2), g1.max(g2)) {
                (0, 0) => Some(1),
                (1, 1) | (1, 2) => Some(3),
                (lo, _) if lo >= 2 => Some(1),
                _ => None,
            };
            if expected.is_some_and(|x| x != dim) {
                failures.push(format!("dim at ({g1}, {g2}) is {dim}"));
            }
        }
    }
    check("product_identities", failures, "0 <= g1, g2 <= 6".into())
}

fn elliptic_check() -> CheckResult {
    let mut failures = Vec::new();
    for b in 0..=30i64 {
        for pg in b..=30 {
            let chi = 1 + pg - b;
            let deg = special_tensor_degree(b, pg).expect("pg >= b");
            if b <= 20 && deg + delta_degree(chi, b) != 4 * b - 4 {
                failures.push(format!("degree identity at b = {b}, pg = {pg}"));
            }
            let window = b >= 3 && pg <= 2 * b - 3;
            if exists_nilpotent_special_tensor(b, pg)
                .map(|e| e.guaranteed)
                .ok()
                != Some(window)
            {
                failures.push(format!("window at b = {b}, pg = {pg}"));
            }
        }
    }
    for h in 1..=10 {
        match weierstrass_example(h) {
            Ok(w) if w.b == 6 * h as i64 + 1 && w.residual_degree == 0 && w.h0 == 1 => {}
            _ => failures.push(format!("weierstrass h = {h}")),
        }
    }
    check(
        "elliptic_arithmetic",
        failures,
        "b, pg <= 30; h <= 10".into(),
    )
}

/// Runs every check; `fixture` replaces the shipped Kodaira table.
pub fn selftest_checks(fixture: Option<&Path>) -> Result<Vec<CheckResult>, Error> {
    let table = match fixture {
        Some(path) => KodairaTable::from_path(path)?,
        None => KodairaTable::builtin(),
    };
    let mut out = table_checks(&table);
    out.extend([
        hirzebruch_check(),
        rational_vanishing_check(),
        tensor_roundtrip_check(),
        nilpotent_check(),
        blowup_check(),
        product_check(),
        elliptic_check(),
    ]);
    Ok(out)
}

/// Prints one line per check and returns the exit status with the results.
pub fn selftest(fixture: Option<&Path>, out: &mut dyn Write) -> (i32, Vec<CheckResult>) {
    let checks = match selftest_checks(fixture) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return (EXIT_USAGE, Vec::new());
        }
    };
    for c in &checks {
        let tag = if c.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{tag} {}: {}", c.name, c.detail);
    }
    let failed: Vec<&str> = checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.name)
        .collect();
    if failed.is_empty() {
        let _ = writeln!(out, "selftest: {} checks passed", checks.len());
        (EXIT_OK, checks)
    } else {
        let _ = writeln!(out, "selftest: failed {}", failed.join(", "));
        eprintln!("selftest failed: {}", failed.join(", "));
        (EXIT_FAILED, checks)
    }
}
