//! Argument handling and the five subcommands.

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use dickson_core::structure::{zero_divisor_probe, CoefficientPool};
use dickson_core::{certify, fingerprint, Algebra, Verdict};

use crate::catalog::{self, CatalogOptions};
use crate::criteria::{CHAR2_PROBE_TRIALS, DEFAULT_SEED};
use crate::dsl::{self, Env};
use crate::mapspec::{build_map, parse_map_spec};
use crate::report::{AlgebraReport, CertificateRecord, FingerprintRecord, Versions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USER: i32 = 2;
pub const EXIT_REFUTED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "dickson", version, about = "Exact analysis of Cayley-Dickson doublings and Dickson algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Specification file; without it names resolve against the built-in catalog.
    #[arg(long, global = true, value_name = "FILE")]
    pub spec: Option<std::path::PathBuf>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Probe trials.
    #[arg(long, global = true, value_name = "N")]
    pub trials: Option<usize>,
    /// Seed for every randomized step.
    #[arg(long, global = true, env = "DICKSON_SEED", value_name = "S")]
    pub seed: Option<u64>,
    /// Restrict the catalog to entries and checks carrying this tag.
    #[arg(long, global = true, value_name = "TAG")]
    pub only: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fingerprint and provenance of an algebra.
    Analyze { name: Option<String> },
    /// Randomized zero-divisor search.
    Probe { name: Option<String> },
    /// Division certificate, falling back to the probe where no certificate applies.
    Certify { name: Option<String> },
    /// Build a map from a family and check that it is a homomorphism.
    Isocheck {
        /// e.g. `scale(g=id, m=2)`, `inner(a=i, z=1)`, `explicit(identity)`.
        #[arg(long = "map", value_name = "FAMILY(PARAMS)")]
        map: String,
        source: String,
        target: Option<String>,
    },
    /// Run the built-in catalog and its expectations.
    Catalog,
}

/// A failure that ends the command with an exit code.
struct Exit(i32, String);

fn user(msg: impl Into<String>) -> Exit {
    Exit(EXIT_USER, msg.into())
}

struct Ctx<'a> {
    common: &'a Common,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn seed(&self) -> u64 {
        self.common.seed.unwrap_or(DEFAULT_SEED)
    }

    fn emit(&mut self, text: &str) -> Result<(), Exit> {
        self.out.write_all(text.as_bytes()).map_err(|e| Exit(EXIT_INTERNAL, format!("write failed: {e}")))
    }

    fn envs(&self) -> Result<Vec<Env>, Exit> {
        match &self.common.spec {
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| user(format!("{}: {e}", path.display())))?;
                let (_, env) = dsl::load(&text).map_err(|d| user(format!("{}:{d}", path.display())))?;
                Ok(vec![env])
            }
            None => Ok(catalog::PROGRAMS.iter().map(|t| dsl::load(t).expect("catalog programs are valid").1).collect()),
        }
    }

    /// The named algebra, or the last algebra of the spec file when no name is given.
    fn resolve(&self, envs: &[Env], name: Option<&str>) -> Result<(String, Algebra), Exit> {
        match name {
            Some(n) => envs
                .iter()
                .find_map(|e| e.algebra(n))
                .map(|a| (n.to_string(), a.clone()))
                .ok_or_else(|| {
                    let known: Vec<&str> = envs.iter().flat_map(|e| e.algebra_names()).collect();
                    user(format!("unknown algebra '{n}'; known: {}", known.join(", ")))
                }),
            None if self.common.spec.is_some() => envs[0]
                .last_algebra()
                .map(|(n, a)| (n.to_string(), a.clone()))
                .ok_or_else(|| user("the specification defines no algebra")),
            None => Err(user("name an algebra, or pass --spec FILE")),
        }
    }

    fn report(&mut self, r: &AlgebraReport) -> Result<(), Exit> {
        let text = if self.common.json { r.to_json() + "\n" } else { r.to_text() };
        self.emit(&text)
    }
}

fn probe_record(alg: &Algebra, trials: usize, seed: u64) -> CertificateRecord {
    let pool = CoefficientPool::default_for(alg.field());
    CertificateRecord::new("probe", &zero_divisor_probe(alg, trials, seed, &pool)).with_run(trials, seed)
}

fn verdict_exit(cert: &CertificateRecord) -> i32 {
    if cert.verdict == Verdict::NotDivision.as_str() {
        EXIT_REFUTED
    } else {
        EXIT_OK
    }
}

fn analyze(ctx: &mut Ctx, name: Option<&str>) -> Result<i32, Exit> {
    let envs = ctx.envs()?;
    let (name, alg) = ctx.resolve(&envs, name)?;
    let mut r = AlgebraReport::new(&name, &alg);
    r.fingerprint = Some(FingerprintRecord::from(&fingerprint(&alg)));
    if let Ok(c) = certify(&alg) {
        r.certificates.push(CertificateRecord::new("certify", &c));
    }
    ctx.report(&r)?;
    Ok(EXIT_OK)
}

fn probe(ctx: &mut Ctx, name: Option<&str>) -> Result<i32, Exit> {
    let envs = ctx.envs()?;
    let (name, alg) = ctx.resolve(&envs, name)?;
    let trials = ctx.common.trials.unwrap_or(CHAR2_PROBE_TRIALS);
    if trials == 0 {
        return Err(user("--trials must be positive"));
    }
    let mut r = AlgebraReport::new(&name, &alg);
    r.certificates.push(probe_record(&alg, trials, ctx.seed()));
    let code = verdict_exit(&r.certificates[0]);
    ctx.report(&r)?;
    Ok(code)
}

fn certify_cmd(ctx: &mut Ctx, name: Option<&str>) -> Result<i32, Exit> {
    let envs = ctx.envs()?;
    let (name, alg) = ctx.resolve(&envs, name)?;
    let mut r = AlgebraReport::new(&name, &alg);
    let cert = match certify(&alg) {
        Ok(c) => CertificateRecord::new("certify", &c),
        Err(_) => probe_record(&alg, ctx.common.trials.unwrap_or(CHAR2_PROBE_TRIALS), ctx.seed()),
    };
    let code = verdict_exit(&cert);
    r.certificates.push(cert);
    ctx.report(&r)?;
    Ok(code)
}

#[derive(Serialize)]
struct IsocheckReport {
    map: String,
    source: String,
    target: String,
    verdict: &'static str,
    failure: Option<String>,
    versions: Versions,
}

fn isocheck(ctx: &mut Ctx, map: &str, source: &str, target: Option<&str>) -> Result<i32, Exit> {
    let spec = parse_map_spec(map).map_err(|e| user(e.to_string()))?;
    let envs = ctx.envs()?;
    let (sname, src) = ctx.resolve(&envs, Some(source))?;
    let tgt = target.map(|t| ctx.resolve(&envs, Some(t))).transpose()?;
    let g = build_map(&spec, &src, tgt.as_ref().map(|(_, a)| a)).map_err(|e| user(e.to_string()))?;
    let failure = g.hom_failure().map(|f| f.describe(&g));
    let tname = tgt.map_or_else(|| g.target().describe(), |(n, _)| n);
    let r = IsocheckReport {
        map: g.params().to_string(),
        source: sname,
        target: tname,
        verdict: if failure.is_none() { "pass" } else { "fail" },
        failure,
        versions: Versions::default(),
    };
    let text = if ctx.common.json {
        serde_json::to_string_pretty(&r).expect("serializes") + "\n"
    } else {
        let mut s = format!("map     {}\nsource  {}\ntarget  {}\nverdict {}\n", r.map, r.source, r.target, r.verdict);
        if let Some(f) = &r.failure {
            s.push_str(&format!("refuted at {f}\n"));
        }
        s
    };
    ctx.emit(&text)?;
    Ok(if r.failure.is_none() { EXIT_OK } else { EXIT_REFUTED })
}

fn catalog_cmd(ctx: &mut Ctx) -> Result<i32, Exit> {
    if let Some(tag) = &ctx.common.only {
        let tags = catalog::all_tags();
        if !tags.contains(&tag.as_str()) {
            return Err(user(format!("unknown tag '{tag}'; known: {}", tags.join(", "))));
        }
    }
    let opts = CatalogOptions {
        only: ctx.common.only.clone(),
        probe_trials: ctx.common.trials.unwrap_or(CHAR2_PROBE_TRIALS),
        seed: ctx.seed(),
    };
    let r = catalog::run_catalog(&opts);
    let text = if ctx.common.json { serde_json::to_string_pretty(&r).expect("serializes") + "\n" } else { r.to_text() };
    ctx.emit(&text)?;
    Ok(if r.failures().is_empty() { EXIT_OK } else { EXIT_INTERNAL })
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Exit> {
    let mut ctx = Ctx { common: &cli.common, out };
    match &cli.command {
        Command::Analyze { name } => analyze(&mut ctx, name.as_deref()),
        Command::Probe { name } => probe(&mut ctx, name.as_deref()),
        Command::Certify { name } => certify_cmd(&mut ctx, name.as_deref()),
        Command::Isocheck { map, source, target } => isocheck(&mut ctx, map, source, target.as_deref()),
        Command::Catalog => catalog_cmd(&mut ctx),
    }
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USER } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{}", e.render()) } else { write!(out, "{}", e.render()) };
            return code;
        }
    };
    match catch_unwind(AssertUnwindSafe(|| dispatch(&cli, out))) {
        Ok(Ok(code)) => code,
        Ok(Err(Exit(code, msg))) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
        Err(_) => {
            let _ = writeln!(err, "error: internal invariant failure");
            EXIT_INTERNAL
        }
    }
}
