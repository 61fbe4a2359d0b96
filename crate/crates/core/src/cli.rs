//! Command-line front end: `factor`, `idempotents`, `codes`, `dual`,
//! `selfdual` and `verify`.
//!
//! Output is deterministic for a fixed configuration and seed (the `verify`
//! report's elapsed time aside, which `--no-timing` drops). Exit codes: 0 on
//! success, 2 on invalid input, 3 when a verification check fails.

use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::chainring::{AmbientElement, RingElement};
use crate::codes::{
    build_code, code_count, component_generators, dual_code, enumerate_range, self_dual_codes, CodeIndex, CodeRecord,
};
use crate::decomposition::{canonical_rearrange, compute_decomposition_seeded, Decomposition};
use crate::error::{Error, Result};
use crate::fieldpoly::{factor_xn_minus_delta_seeded, Field, FieldElement, FieldSpec, Poly, DEFAULT_SEED};
use crate::oracle::{check_record, RecordCheck};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

/// Enumeration refuses more than this many codes without `--force`.
pub const DEFAULT_MAX_CODES: u128 = 1_000_000;

#[derive(Parser, Debug)]
#[command(name = "constacyclic", version, about = "(δ+αu²)-constacyclic codes over F_q[u]/<u^4>")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Factor x^n − δ into monic irreducibles.
    Factor(JobConfig),
    /// Print the idempotents e_j, the units ω_j and the permutation τ.
    Idempotents(IdempotentArgs),
    /// Enumerate all codes, or describe one code and its dual.
    Codes(CodesArgs),
    /// Print the dual of one code.
    Dual(DualArgs),
    /// Enumerate the self-dual codes (q = 2^m, δ = 1).
    Selfdual(SelfDualArgs),
    /// Check codes against the linear-algebra oracle.
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FieldDisplay {
    /// Field elements as integers Σ c_i p^i.
    Enc,
    /// Field elements as polynomials in the generator y.
    Poly,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    All,
    Index,
    Selfdual,
}

/// Problem parameters shared by every subcommand.
#[derive(Args, Clone, Debug)]
pub struct JobConfig {
    /// Characteristic (prime).
    #[arg(long, default_value_t = 2)]
    pub p: u32,
    /// Extension degree, q = p^m.
    #[arg(long, default_value_t = 1)]
    pub m: u32,
    /// Field modulus as ascending coefficients, e.g. 1,1,1 for y^2 + y + 1.
    #[arg(long, value_delimiter = ',')]
    pub modulus: Option<Vec<u32>>,
    /// Code length, coprime to p.
    #[arg(long)]
    pub n: usize,
    /// δ as an encoded field element.
    #[arg(long, default_value_t = 1)]
    pub delta: u32,
    /// α as an encoded field element.
    #[arg(long, default_value_t = 1)]
    pub alpha: u32,
    /// Seed for the equal-degree splitting.
    #[arg(long, env = "CONSTACYCLIC_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,
    #[arg(long, value_enum, default_value_t = FieldDisplay::Enc)]
    pub field_display: FieldDisplay,
    /// Worker threads for enumeration and verification.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Args, Clone, Debug)]
pub struct Limits {
    /// Emit at most this many codes.
    #[arg(long)]
    pub limit: Option<u128>,
    /// Skip this many codes (lexicographic rank).
    #[arg(long, default_value_t = 0)]
    pub offset: u128,
    /// Allow unbounded enumeration of more than --max-codes codes.
    #[arg(long)]
    pub force: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_CODES)]
    pub max_codes: u128,
}

#[derive(Args, Clone, Debug)]
pub struct IdempotentArgs {
    #[command(flatten)]
    pub job: JobConfig,
    /// Reorder factors as τ-fixed, pair representatives, partners.
    #[arg(long)]
    pub rearrange: bool,
}

#[derive(Args, Clone, Debug)]
pub struct CodesArgs {
    #[command(flatten)]
    pub job: JobConfig,
    #[command(flatten)]
    pub limits: Limits,
    /// A single index, e.g. 2,2,2.
    #[arg(long, value_delimiter = ',')]
    pub index: Option<Vec<u8>>,
    /// Also emit the generators u^{l_j} e_j separately (JSON).
    #[arg(long)]
    pub components: bool,
}

#[derive(Args, Clone, Debug)]
pub struct DualArgs {
    #[command(flatten)]
    pub job: JobConfig,
    #[arg(long, value_delimiter = ',', required = true)]
    pub index: Vec<u8>,
}

#[derive(Args, Clone, Debug)]
pub struct SelfDualArgs {
    #[command(flatten)]
    pub job: JobConfig,
}

#[derive(Args, Clone, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub job: JobConfig,
    #[command(flatten)]
    pub limits: Limits,
    #[arg(long, value_enum, default_value_t = Scope::All)]
    pub scope: Scope,
    /// Index for --scope index.
    #[arg(long, value_delimiter = ',')]
    pub index: Option<Vec<u8>>,
    /// Omit the elapsed time so reports are reproducible byte for byte.
    #[arg(long)]
    pub no_timing: bool,
    /// Warn when the flattened length 4n exceeds this.
    #[arg(long, default_value_t = 240)]
    pub warn_dim: usize,
}

/// Validated parameters.
pub struct Instance {
    pub field: Field,
    pub n: usize,
    pub delta: FieldElement,
    pub alpha: FieldElement,
}

impl JobConfig {
    /// Checks every precondition before any computation.
    pub fn validate(&self) -> Result<Instance> {
        let field = Field::new(FieldSpec::new(self.p, self.m, self.modulus.clone())?);
        if self.n == 0 {
            return Err(Error::InvalidInput("n must be positive".into()));
        }
        if self.n.is_multiple_of(self.p as usize) {
            return Err(Error::NotCoprime { p: self.p, n: self.n });
        }
        let unit = |name: &str, v: u32| -> Result<FieldElement> {
            if v == 0 {
                return Err(Error::InvalidInput(format!("{name} must be nonzero")));
            }
            field.elem(v).map_err(|_| Error::InvalidInput(format!("{name} = {v} is not an element of F_{}", field.q())))
        };
        let delta = unit("delta", self.delta)?;
        let alpha = unit("alpha", self.alpha)?;
        if self.jobs == 0 {
            return Err(Error::InvalidInput("--jobs must be at least 1".into()));
        }
        Ok(Instance { field, n: self.n, delta, alpha })
    }

    fn decomposition(&self, inst: &Instance) -> Result<Decomposition> {
        compute_decomposition_seeded(&inst.field, inst.n, inst.delta, inst.alpha, self.seed)
    }

    fn render<'a>(&self, field: &'a Field) -> Render<'a> {
        Render { field, mode: self.field_display }
    }
}

/// Text rendering with field elements as integers or as polynomials in `y`.
pub struct Render<'a> {
    field: &'a Field,
    mode: FieldDisplay,
}

impl Render<'_> {
    fn elem(&self, a: FieldElement) -> String {
        match self.mode {
            FieldDisplay::Enc => a.to_string(),
            FieldDisplay::Poly => self.field.display_poly_basis(a),
        }
    }

    fn coeff(&self, a: FieldElement) -> String {
        let s = self.elem(a);
        if s.contains(' ') {
            format!("({s})")
        } else {
            s
        }
    }

    /// `Σ c_k var^k`, descending, in the crate's text style.
    fn terms(&self, coeffs: &[FieldElement], var: &str) -> String {
        let parts: Vec<String> = coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, &c)| {
                let v = match k {
                    0 => String::new(),
                    1 => var.to_string(),
                    _ => format!("{var}^{k}"),
                };
                match (c.enc(), k) {
                    (_, 0) => self.elem(c),
                    (1, _) => v,
                    _ => format!("{}*{v}", self.coeff(c)),
                }
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    pub fn poly(&self, p: &Poly) -> String {
        match self.mode {
            FieldDisplay::Enc => p.to_string(),
            FieldDisplay::Poly => self.terms(p.coeffs(), "x"),
        }
    }

    pub fn ring(&self, a: &RingElement) -> String {
        match self.mode {
            FieldDisplay::Enc => a.to_string(),
            FieldDisplay::Poly => self.terms(&a.0, "u"),
        }
    }

    pub fn ambient(&self, a: &AmbientElement) -> String {
        if self.mode == FieldDisplay::Enc {
            return a.to_string();
        }
        let parts: Vec<String> = a
            .coeffs()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let var = if i == 1 { "x".to_string() } else { format!("x^{i}") };
                let cs = self.ring(c);
                if i == 0 {
                    cs
                } else if *c == RingElement::ONE {
                    var
                } else if cs.contains(" + ") {
                    format!("({cs})*{var}")
                } else {
                    format!("{cs}*{var}")
                }
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Parses arguments, runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::InternalError(_) => EXIT_INTERNAL,
                _ => EXIT_INVALID,
            }
        }
    }
}

fn dispatch(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Factor(job) => cmd_factor(job, out),
        Command::Idempotents(a) => cmd_idempotents(a, out),
        Command::Codes(a) => cmd_codes(a, out),
        Command::Dual(a) => cmd_dual(a, out),
        Command::Selfdual(a) => cmd_selfdual(a, out),
        Command::Verify(a) => cmd_verify(a, out, err),
    }
    .inspect(|_| {
        let _ = out.flush();
    })
}

fn io(e: std::io::Error) -> Error {
    Error::InternalError(format!("write failed: {e}"))
}

fn emit_json(out: &mut dyn Write, v: &impl Serialize) -> Result<()> {
    let s = serde_json::to_string(v).map_err(|e| Error::InternalError(e.to_string()))?;
    writeln!(out, "{s}").map_err(io)
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|e| Error::InternalError(e.to_string()))
}

pub fn cmd_factor(job: &JobConfig, out: &mut dyn Write) -> Result<i32> {
    let inst = job.validate()?;
    let fz = factor_xn_minus_delta_seeded(&inst.field, inst.n, inst.delta, job.seed)?;
    match job.output {
        OutputFormat::Json => emit_json(out, &fz)?,
        OutputFormat::Text => {
            let r = job.render(&inst.field);
            for f in fz.polys() {
                writeln!(out, "{}", r.poly(f)).map_err(io)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn tau_cycles(tau: &[usize]) -> String {
    let mut seen = vec![false; tau.len()];
    let mut s = String::new();
    for start in 0..tau.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut j = start;
        while !seen[j] && j < tau.len() {
            seen[j] = true;
            cycle.push((j + 1).to_string());
            j = tau[j];
        }
        s.push_str(&format!("({})", cycle.join(" ")));
    }
    s
}

pub fn cmd_idempotents(a: &IdempotentArgs, out: &mut dyn Write) -> Result<i32> {
    let job = &a.job;
    let inst = job.validate()?;
    let mut d = job.decomposition(&inst)?;
    if a.rearrange {
        d = canonical_rearrange(&d)?;
    }
    if job.output == OutputFormat::Json {
        emit_json(out, &d)?;
        return Ok(EXIT_OK);
    }
    let r = job.render(&inst.field);
    let w = &mut *out;
    writeln!(w, "ambient: R[x]/<x^{} - ({})>", d.n, r.ring(&d.lambda())).map_err(io)?;
    for (j, rec) in d.factors.iter().enumerate() {
        let k = j + 1;
        writeln!(w, "f_{k}(x) = {}", r.poly(&rec.f)).map_err(io)?;
        writeln!(w, "eps_{k}(x) = {}", r.poly(&rec.eps)).map_err(io)?;
        writeln!(w, "e_{k}(x) = {}", r.ambient(&rec.e)).map_err(io)?;
        writeln!(w, "omega_{k}(x) = {}", r.poly(&rec.omega)).map_err(io)?;
    }
    if d.is_self_reciprocal_ambient() {
        writeln!(w, "tau = {}", tau_cycles(&d.tau)).map_err(io)?;
    } else {
        let images: Vec<String> = d.tau.iter().map(|t| (t + 1).to_string()).collect();
        writeln!(w, "tau = [{}] (onto the idempotents of the dual ambient)", images.join(", ")).map_err(io)?;
    }
    match (d.rho, d.eps_pairs) {
        (Some(rho), Some(eps)) => writeln!(w, "rho = {rho}, epsilon = {eps}").map_err(io)?,
        _ => writeln!(w, "rho, epsilon undefined: tau is not an involution").map_err(io)?,
    }
    Ok(EXIT_OK)
}

fn parse_index(ls: &[u8], d: &Decomposition) -> Result<CodeIndex> {
    CodeIndex::for_decomposition(ls.to_vec(), d)
}

fn code_line(rec: &CodeRecord, q: u32, r: &Render) -> String {
    let mut s = format!("C{}: |C| = {q}^{}, g(x) = {}", rec.index, rec.log_q_size, r.ambient(&rec.generator));
    if rec.self_dual == Some(true) {
        s.push_str(", self-dual");
    }
    s
}

#[derive(Serialize)]
struct RecordWithComponents<'a> {
    #[serde(flatten)]
    record: &'a CodeRecord,
    components: Vec<AmbientElement>,
}

fn check_enumeration_size(d: &Decomposition, limits: &Limits) -> Result<()> {
    let total = code_count(d.r());
    let requested = limits.limit.map_or(total.saturating_sub(limits.offset), |l| l.min(total));
    if requested > limits.max_codes && !limits.force {
        return Err(Error::InvalidInput(format!(
            "{requested} codes (5^{}) exceed the cap of {}; pass --limit or --force",
            d.r(),
            limits.max_codes
        )));
    }
    Ok(())
}

pub fn cmd_codes(a: &CodesArgs, out: &mut dyn Write) -> Result<i32> {
    let job = &a.job;
    let inst = job.validate()?;
    let d = job.decomposition(&inst)?;
    let r = job.render(&inst.field);
    let q = inst.field.q();

    if let Some(ls) = &a.index {
        let idx = parse_index(ls, &d)?;
        let rec = build_code(&d, &idx)?;
        let dual = dual_code(&d, &idx)?;
        match job.output {
            OutputFormat::Json => {
                let mut v = json!({ "code": rec, "dual": dual });
                if a.components {
                    v["components"] = json!(component_generators(&d, &idx)?);
                }
                emit_json(out, &v)?;
            }
            OutputFormat::Text => {
                writeln!(out, "{}", code_line(&rec, q, &r)).map_err(io)?;
                writeln!(out, "dual in R[x]/<x^{} - ({})>:", d.n, r.ring(&d.dual_lambda())).map_err(io)?;
                writeln!(out, "{}", code_line(&dual, q, &r)).map_err(io)?;
                writeln!(out, "|C|*|C^perp| = {q}^{}", rec.log_q_size + dual.log_q_size).map_err(io)?;
            }
        }
        return Ok(EXIT_OK);
    }

    check_enumeration_size(&d, &a.limits)?;
    let render_one = |rec: &CodeRecord| -> Result<String> {
        match job.output {
            OutputFormat::Text => Ok(code_line(rec, q, &r)),
            OutputFormat::Json if a.components => {
                let wrapped = RecordWithComponents { record: rec, components: component_generators(&d, &rec.index)? };
                serde_json::to_string(&wrapped).map_err(|e| Error::InternalError(e.to_string()))
            }
            OutputFormat::Json => serde_json::to_string(rec).map_err(|e| Error::InternalError(e.to_string())),
        }
    };
    let stream = enumerate_range(&d, a.limits.offset, a.limits.limit);
    if job.jobs <= 1 {
        for rec in stream {
            writeln!(out, "{}", render_one(&rec)?).map_err(io)?;
        }
        return Ok(EXIT_OK);
    }
    // batches keep memory bounded; collect preserves order within a batch
    let workers = pool(job.jobs)?;
    let mut stream = stream.peekable();
    const BATCH: usize = 4096;
    while stream.peek().is_some() {
        let batch: Vec<CodeRecord> = stream.by_ref().take(BATCH).collect();
        let lines: Vec<String> = workers.install(|| batch.par_iter().map(&render_one).collect::<Result<_>>())?;
        for line in lines {
            writeln!(out, "{line}").map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_dual(a: &DualArgs, out: &mut dyn Write) -> Result<i32> {
    let job = &a.job;
    let inst = job.validate()?;
    let d = job.decomposition(&inst)?;
    let idx = parse_index(&a.index, &d)?;
    let dual = dual_code(&d, &idx)?;
    match job.output {
        OutputFormat::Json => emit_json(out, &dual)?,
        OutputFormat::Text => {
            let r = job.render(&inst.field);
            writeln!(out, "dual of C{} in R[x]/<x^{} - ({})>:", idx, d.n, r.ring(&d.dual_lambda())).map_err(io)?;
            writeln!(out, "{}", code_line(&dual, inst.field.q(), &r)).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_selfdual(a: &SelfDualArgs, out: &mut dyn Write) -> Result<i32> {
    let job = &a.job;
    let inst = job.validate()?;
    let d = job.decomposition(&inst)?;
    let r = job.render(&inst.field);
    for rec in self_dual_codes(&d)? {
        match job.output {
            OutputFormat::Json => emit_json(out, &rec)?,
            OutputFormat::Text => writeln!(out, "g_{}(x) = {}", rec.index, r.ambient(&rec.generator)).map_err(io)?,
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct InstanceInfo {
    p: u32,
    m: u32,
    modulus: Vec<u32>,
    n: usize,
    delta: FieldElement,
    alpha: FieldElement,
    lambda: RingElement,
    seed: u64,
}

#[derive(Serialize, Default)]
struct Totals {
    cardinality: usize,
    constacyclic: usize,
    ideal: usize,
    duality: usize,
    self_dual: usize,
}

#[derive(Serialize)]
struct VerifyReport {
    instance: InstanceInfo,
    scope: Scope,
    decomposition_identities: bool,
    checked: usize,
    passed: usize,
    all_passed: bool,
    totals: Totals,
    records: Vec<RecordCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<f64>,
}

pub fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let start = Instant::now();
    let job = &a.job;
    let inst = job.validate()?;
    if 4 * inst.n > a.warn_dim {
        let _ = writeln!(err, "warning: oracle works with {}-dimensional vectors; this may be slow", 4 * inst.n);
    }
    let d = job.decomposition(&inst)?;
    let identities = d.verify().is_ok();
    let records: Vec<CodeRecord> = match a.scope {
        Scope::All => {
            check_enumeration_size(&d, &a.limits)?;
            enumerate_range(&d, a.limits.offset, a.limits.limit).collect()
        }
        Scope::Index => {
            let ls = a.index.as_ref().ok_or_else(|| Error::InvalidInput("--scope index needs --index".into()))?;
            vec![build_code(&d, &parse_index(ls, &d)?)?]
        }
        Scope::Selfdual => self_dual_codes(&d)?.collect(),
    };
    let field = &inst.field;
    let check = |rec: &CodeRecord| -> Result<RecordCheck> { check_record(rec, &dual_code(&d, &rec.index)?, field) };
    let checks: Vec<RecordCheck> = if job.jobs <= 1 {
        records.iter().map(check).collect::<Result<_>>()?
    } else {
        pool(job.jobs)?.install(|| records.par_iter().map(check).collect::<Result<_>>())?
    };

    let mut totals = Totals::default();
    for c in &checks {
        totals.cardinality += c.cardinality as usize;
        totals.constacyclic += c.constacyclic as usize;
        totals.ideal += c.ideal as usize;
        totals.duality += c.duality as usize;
        totals.self_dual += (c.self_dual_claim.is_some() && c.self_dual_claim == c.self_dual) as usize;
    }
    let passed = checks.iter().filter(|c| c.passed()).count();
    let all_passed = identities && passed == checks.len();
    let report = VerifyReport {
        instance: InstanceInfo {
            p: field.p(),
            m: field.m(),
            modulus: field.spec().modulus().to_vec(),
            n: d.n,
            delta: d.delta,
            alpha: d.alpha,
            lambda: d.lambda(),
            seed: job.seed,
        },
        scope: a.scope,
        decomposition_identities: identities,
        checked: checks.len(),
        passed,
        all_passed,
        totals,
        records: checks,
        elapsed_ms: (!a.no_timing).then(|| start.elapsed().as_secs_f64() * 1000.0),
    };
    match job.output {
        OutputFormat::Json => emit_json(out, &report)?,
        OutputFormat::Text => {
            let n = report.checked;
            let t = &report.totals;
            let w = &mut *out;
            writeln!(w, "decomposition identities: {}", if identities { "ok" } else { "FAILED" }).map_err(io)?;
            writeln!(w, "cardinality: {}/{n}", t.cardinality).map_err(io)?;
            writeln!(w, "constacyclic: {}/{n}", t.constacyclic).map_err(io)?;
            writeln!(w, "ideal: {}/{n}", t.ideal).map_err(io)?;
            writeln!(w, "duality: {}/{n}", t.duality).map_err(io)?;
            let claims = report.records.iter().filter(|c| c.self_dual_claim.is_some()).count();
            if claims > 0 {
                let sd_codes = report.records.iter().filter(|c| c.self_dual == Some(true)).count();
                writeln!(w, "self-dual claims confirmed: {}/{claims} ({sd_codes} self-dual codes)", t.self_dual)
                    .map_err(io)?;
            }
            for c in report.records.iter().filter(|c| !c.passed()) {
                writeln!(w, "FAILED {:?}", c.index).map_err(io)?;
            }
            writeln!(w, "{}/{n} codes passed", report.passed).map_err(io)?;
            if let Some(ms) = report.elapsed_ms {
                writeln!(w, "elapsed: {ms:.1} ms").map_err(io)?;
            }
        }
    }
    Ok(if all_passed { EXIT_OK } else { EXIT_VERIFY_FAILED })
}
