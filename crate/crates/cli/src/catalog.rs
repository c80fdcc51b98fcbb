//! The built-in catalog: named constructions written in the specification
//! language, their fingerprints, and the embedded expectations.

use rayon::prelude::*;
use serde::Serialize;

use dickson_core::structure::{zero_divisor_probe, CoefficientPool};
use dickson_core::{certify, fingerprint, Algebra, Verdict};

use crate::criteria::{self, Outcome};
use crate::dsl::{self, Env};
use crate::report::{self, AlgebraReport, CertificateRecord, FingerprintRecord, Versions};

pub const RATIONAL: &str = "\
field Q
quaternion H = (-1, -1)
etale K = sqrt(-1)
quaternion M = (1, 1)
octonion O = (-1, -1, -1)
algebra cay_h_i = cay(H, i)
algebra cay_m_h_i = cay_m(H, i)
algebra cay_r_h_i = cay_r(H, i)
algebra cay_h_j = cay(H, j)
algebra cay_m_h_j = cay_m(H, j)
algebra cay_r_h_j = cay_r(H, j)
opposite op_cay_h_i = op(cay_h_i)
opposite op_cay_m_h_i = op(cay_m_h_i)
opposite op_cay_r_h_i = op(cay_r_h_i)
algebra nonassoc_quat = cay(K, i)
algebra split_cay = cay(M, i)
algebra oct16 = cay(O, 1 + i)
";

pub const GF3: &str = "\
field GF(3)
quaternion S = (1, 1)
algebra gf3_split_cay_m = cay_m(S, i)
";

pub const CHAR2: &str = "\
field GF(2)(t)
quaternion2 T = [t, t)
algebra char2_cay = cay(T, i)
algebra char2_cay_m = cay_m(T, i)
algebra char2_cay_r = cay_r(T, i)
";

pub const PROGRAMS: [&str; 3] = [RATIONAL, GF3, CHAR2];

/// Names of the nine 8-dimensional variants over ℚ whose fingerprints must coincide.
pub const NINE: [&str; 9] = [
    "cay_h_i",
    "cay_m_h_i",
    "cay_r_h_i",
    "cay_h_j",
    "cay_m_h_j",
    "cay_r_h_j",
    "op_cay_h_i",
    "op_cay_m_h_i",
    "op_cay_r_h_i",
];

#[derive(Clone, Debug)]
pub struct Entry {
    pub name: &'static str,
    /// Index into [`PROGRAMS`].
    pub program: usize,
    /// Name bound in the program; `hamilton` is the base `H` itself.
    pub binding: &'static str,
    pub tags: &'static [&'static str],
    pub expected_division: Option<Verdict>,
    /// Division status from the probe only; no certificate is attempted.
    pub probe_only: bool,
}

const fn entry(
    name: &'static str,
    program: usize,
    binding: &'static str,
    tags: &'static [&'static str],
    expected_division: Option<Verdict>,
    probe_only: bool,
) -> Entry {
    Entry { name, program, binding, tags, expected_division, probe_only }
}

const DIV: Option<Verdict> = Some(Verdict::Division);
const NOT: Option<Verdict> = Some(Verdict::NotDivision);
const PROBE: Option<Verdict> = Some(Verdict::ProbabilisticNoWitness);

pub const ENTRIES: [Entry; 17] = [
    entry("cay_h_i", 0, "cay_h_i", &["q8"], DIV, false),
    entry("cay_m_h_i", 0, "cay_m_h_i", &["q8"], DIV, false),
    entry("cay_r_h_i", 0, "cay_r_h_i", &["q8"], DIV, false),
    entry("cay_h_j", 0, "cay_h_j", &["q8"], DIV, false),
    entry("cay_m_h_j", 0, "cay_m_h_j", &["q8"], DIV, false),
    entry("cay_r_h_j", 0, "cay_r_h_j", &["q8"], DIV, false),
    entry("op_cay_h_i", 0, "op_cay_h_i", &["q8"], DIV, false),
    entry("op_cay_m_h_i", 0, "op_cay_m_h_i", &["q8"], DIV, false),
    entry("op_cay_r_h_i", 0, "op_cay_r_h_i", &["q8"], DIV, false),
    entry("hamilton", 0, "H", &["baseline"], None, false),
    entry("nonassoc_quat", 0, "nonassoc_quat", &["baseline"], DIV, false),
    entry("split_cay", 0, "split_cay", &["split"], NOT, false),
    entry("oct16", 0, "oct16", &["oct16"], DIV, false),
    entry("gf3_split_cay_m", 1, "gf3_split_cay_m", &["gf3", "split"], NOT, false),
    entry("char2_cay", 2, "char2_cay", &["char2"], PROBE, true),
    entry("char2_cay_m", 2, "char2_cay_m", &["char2"], PROBE, true),
    entry("char2_cay_r", 2, "char2_cay_r", &["char2"], PROBE, true),
];

pub fn all_tags() -> Vec<&'static str> {
    let mut t: Vec<&'static str> = ENTRIES.iter().flat_map(|e| e.tags.iter().copied()).collect();
    t.extend(criteria::ALL.iter().flat_map(|(id, _)| criteria::tags_of(*id).iter().copied()));
    t.sort_unstable();
    t.dedup();
    t
}

fn env(program: usize) -> Env {
    dsl::load(PROGRAMS[program]).expect("catalog programs are valid").1
}

fn lookup(env: &Env, binding: &str) -> Algebra {
    match env.get(binding) {
        Some(dsl::Binding::Algebra(a)) => a.clone(),
        _ => panic!("catalog binding {binding} is not an algebra"),
    }
}

/// The nine 8-dimensional variants, in [`NINE`] order.
pub fn nine_variants() -> Vec<(String, Algebra)> {
    let env = env(0);
    NINE.iter().map(|n| (n.to_string(), lookup(&env, n))).collect()
}

#[derive(Clone, Debug)]
pub struct CatalogOptions {
    pub only: Option<String>,
    pub probe_trials: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryReport {
    pub tags: Vec<&'static str>,
    pub expected_division: Option<&'static str>,
    pub holds: bool,
    #[serde(flatten)]
    pub report: AlgebraReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExpectationRecord {
    pub id: String,
    pub title: String,
    pub holds: bool,
    pub elapsed_ms: f64,
    pub detail: Vec<String>,
}

impl From<&Outcome> for ExpectationRecord {
    fn from(o: &Outcome) -> ExpectationRecord {
        ExpectationRecord {
            id: format!("criterion-{}", o.id),
            title: o.title.to_string(),
            holds: o.holds,
            elapsed_ms: o.elapsed.as_secs_f64() * 1e3,
            detail: o.detail.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogReport {
    pub seed: u64,
    pub only: Option<String>,
    pub entries: Vec<EntryReport>,
    pub expectations: Vec<ExpectationRecord>,
    pub versions: Versions,
}

impl CatalogReport {
    /// Every entry-level and embedded expectation that failed.
    pub fn failures(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .entries
            .iter()
            .filter(|e| !e.holds)
            .map(|e| {
                let got = e.report.certificates.first().map_or("none", |c| c.verdict);
                format!("{}: expected division status {}, found {got}", e.report.algebra.name, e.expected_division.unwrap_or("-"))
            })
            .collect();
        out.extend(self.expectations.iter().filter(|x| !x.holds).map(|x| {
            let first = x.detail.iter().find(|d| d.starts_with("violated")).cloned().unwrap_or_default();
            format!("{} ({}): {first}", x.id, x.title)
        }));
        out
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        s.push_str(&report::fingerprint_header());
        s.push('\n');
        for e in &self.entries {
            let division = e.report.certificates.first().map_or("-", |c| c.verdict);
            if let Some(f) = &e.report.fingerprint {
                s.push_str(&report::fingerprint_row(&e.report.algebra.name, e.report.algebra.dim, f, division));
                s.push('\n');
            }
        }
        s.push('\n');
        for x in &self.expectations {
            let status = if x.holds { "ok  " } else { "FAIL" };
            s.push_str(&format!("{status} {} {} ({:.1} ms)\n", x.id, x.title, x.elapsed_ms));
        }
        let failures = self.failures();
        if failures.is_empty() {
            s.push_str("\nall expectations hold\n");
        } else {
            s.push_str(&format!("\n{} failed expectation(s):\n", failures.len()));
            for f in failures {
                s.push_str(&format!("  {f}\n"));
            }
        }
        s.push_str(&format!("seed {}\n", self.seed));
        s
    }
}

fn division_record(entry: &Entry, alg: &Algebra, opts: &CatalogOptions) -> CertificateRecord {
    let probe = || {
        let pool = CoefficientPool::default_for(alg.field());
        CertificateRecord::new("probe", &zero_divisor_probe(alg, opts.probe_trials, opts.seed, &pool))
            .with_run(opts.probe_trials, opts.seed)
    };
    if entry.probe_only {
        return probe();
    }
    match certify(alg) {
        Ok(c) => CertificateRecord::new("certify", &c),
        Err(_) => probe(),
    }
}

fn run_entry(entry: &Entry, alg: &Algebra, opts: &CatalogOptions) -> EntryReport {
    let mut report = AlgebraReport::new(entry.name, alg);
    report.fingerprint = Some(FingerprintRecord::from(&fingerprint(alg)));
    let cert = division_record(entry, alg, opts);
    let holds = entry.expected_division.is_none_or(|v| v.as_str() == cert.verdict)
        && cert.witness.as_ref().is_none_or(|w| w.reverified);
    report.certificates.push(cert);
    EntryReport {
        tags: entry.tags.to_vec(),
        expected_division: entry.expected_division.map(Verdict::as_str),
        holds,
        report,
    }
}

/// Runs the selected entries concurrently and the embedded checks in order.
/// Entries are reported sorted by name.
pub fn run_catalog(opts: &CatalogOptions) -> CatalogReport {
    let selected = |tags: &[&str]| opts.only.as_ref().is_none_or(|t| tags.contains(&t.as_str()));
    let envs: Vec<Env> = (0..PROGRAMS.len()).map(env).collect();
    let mut entries: Vec<EntryReport> = ENTRIES
        .par_iter()
        .filter(|e| selected(e.tags))
        .map(|e| run_entry(e, &lookup(&envs[e.program], e.binding), opts))
        .collect();
    entries.sort_by(|a, b| a.report.algebra.name.cmp(&b.report.algebra.name));
    let expectations = criteria::ALL
        .iter()
        .filter(|(id, _)| selected(criteria::tags_of(*id)))
        .map(|(_, check)| ExpectationRecord::from(&check(opts.seed)))
        .collect();
    CatalogReport { seed: opts.seed, only: opts.only.clone(), entries, expectations, versions: Versions::default() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn programs_round_trip_and_bind_every_entry() {
        for text in PROGRAMS {
            let p = dsl::parse_spec(text).unwrap();
            assert_eq!(dsl::parse_spec(&dsl::render(&p)).unwrap(), p);
        }
        for e in &ENTRIES {
            lookup(&env(e.program), e.binding);
        }
        let mut names: Vec<&str> = ENTRIES.iter().map(|e| e.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), ENTRIES.len());
    }

    #[test]
    fn nine_variants_are_eight_dimensional() {
        assert!(nine_variants().iter().all(|(_, a)| a.dim() == 8));
    }
}
