//! Report records and their text and JSON renderings.

use std::fmt::Write as _;

use dickson_core::structure::{Reason, WitnessOrigin};
use dickson_core::{Algebra, DivisionCertificate, Fingerprint, Provenance};
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Versions {
    pub dickson: &'static str,
    pub schema: u32,
}

impl Default for Versions {
    fn default() -> Versions {
        Versions { dickson: env!("CARGO_PKG_VERSION"), schema: SCHEMA_VERSION }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct AlgebraInfo {
    pub name: String,
    pub dim: usize,
    pub description: String,
    pub base: Option<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FingerprintRecord {
    pub nuc_l: usize,
    pub nuc_m: usize,
    pub nuc_r: usize,
    pub nuc: usize,
    pub comm: usize,
    pub center: usize,
    pub third_power_assoc_at_l: Option<bool>,
    pub der_dim: usize,
    pub der_derived_dim: usize,
    pub der_center_dim: usize,
    pub derived_kernel_dim: usize,
    pub division: Option<&'static str>,
}

impl From<&Fingerprint> for FingerprintRecord {
    fn from(f: &Fingerprint) -> FingerprintRecord {
        FingerprintRecord {
            nuc_l: f.nuc_l,
            nuc_m: f.nuc_m,
            nuc_r: f.nuc_r,
            nuc: f.nuc,
            comm: f.comm,
            center: f.center,
            third_power_assoc_at_l: f.third_power_assoc_at_l,
            der_dim: f.der_dim,
            der_derived_dim: f.der_derived_dim,
            der_center_dim: f.der_center_dim,
            derived_kernel_dim: f.derived_kernel_dim,
            division: f.division.map(|v| v.as_str()),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct WitnessRecord {
    pub x: String,
    pub y: String,
    pub product: String,
    pub origin: &'static str,
    pub trial: Option<usize>,
    pub reverified: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CertificateRecord {
    /// `certify` or `probe`.
    pub method: &'static str,
    pub verdict: &'static str,
    pub summary: String,
    pub certificate_grade: bool,
    pub witness: Option<WitnessRecord>,
    pub trials: Option<usize>,
    pub seed: Option<u64>,
}

fn origin_name(o: WitnessOrigin) -> &'static str {
    match o {
        WitnessOrigin::SampledPair => "sampled_pair",
        WitnessOrigin::LeftKernel => "left_kernel",
        WitnessOrigin::RightKernel => "right_kernel",
        WitnessOrigin::IsotropicVector => "isotropic_vector",
        WitnessOrigin::SplitEtale => "split_etale",
        WitnessOrigin::Opposite => "opposite",
    }
}

impl CertificateRecord {
    pub fn new(method: &'static str, cert: &DivisionCertificate) -> CertificateRecord {
        let witness = match &cert.reason {
            Reason::ZeroDivisor { x, y, origin, trial } => Some(WitnessRecord {
                x: x.to_string(),
                y: y.to_string(),
                product: (x * y).to_string(),
                origin: origin_name(*origin),
                trial: *trial,
                reverified: cert.reverify(),
            }),
            _ => None,
        };
        let (trials, seed) = match &cert.reason {
            Reason::Probe { trials, seed, .. } => (Some(*trials), Some(*seed)),
            _ => (None, None),
        };
        CertificateRecord {
            method,
            verdict: cert.verdict.as_str(),
            summary: cert.summary(),
            certificate_grade: cert.is_certificate_grade(),
            witness,
            trials,
            seed,
        }
    }

    /// A probe that found a witness records the seed it ran with.
    pub fn with_run(mut self, trials: usize, seed: u64) -> CertificateRecord {
        self.trials = Some(trials);
        self.seed = Some(seed);
        self
    }
}

/// Report for one algebra. Top-level JSON keys are fixed.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct AlgebraReport {
    pub algebra: AlgebraInfo,
    pub field: String,
    pub placement: Option<String>,
    pub scalar: Option<String>,
    pub fingerprint: Option<FingerprintRecord>,
    pub certificates: Vec<CertificateRecord>,
    pub versions: Versions,
}

impl AlgebraReport {
    pub fn new(name: &str, alg: &Algebra) -> AlgebraReport {
        let (placement, scalar, base) = provenance_parts(alg);
        AlgebraReport {
            algebra: AlgebraInfo { name: name.to_string(), dim: alg.dim(), description: alg.describe(), base },
            field: alg.field().to_string(),
            placement,
            scalar,
            fingerprint: None,
            certificates: Vec::new(),
            versions: Versions::default(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let a = &self.algebra;
        let _ = writeln!(s, "algebra   {} = {}  (dim {} over {})", a.name, a.description, a.dim, self.field);
        if let Some(p) = &self.placement {
            let _ = writeln!(s, "placement {p}");
        }
        if let Some(c) = &self.scalar {
            let _ = writeln!(s, "scalar    {c}");
        }
        if let Some(b) = &a.base {
            let _ = writeln!(s, "base      {b}");
        }
        if let Some(f) = &self.fingerprint {
            let _ = writeln!(s, "nucleus   left {} middle {} right {} full {}", f.nuc_l, f.nuc_m, f.nuc_r, f.nuc);
            let _ = writeln!(s, "commuter  {}  center {}", f.comm, f.center);
            if let Some(t) = f.third_power_assoc_at_l {
                let _ = writeln!(s, "(l l) l = l (l l): {t}");
            }
            let _ = writeln!(
                s,
                "Der       dim {}  derived {}  center {}  derived common kernel {}",
                f.der_dim, f.der_derived_dim, f.der_center_dim, f.derived_kernel_dim
            );
            let _ = writeln!(s, "division  {}", f.division.unwrap_or("undetermined"));
        }
        for c in &self.certificates {
            let _ = writeln!(s, "{}: {}", c.method, c.summary);
            if let Some(w) = &c.witness {
                let _ = writeln!(
                    s,
                    "  witness x = {}, y = {}, xy = {} ({}; re-verified: {})",
                    w.x, w.y, w.product, w.origin, w.reverified
                );
            }
            if let (Some(t), Some(seed)) = (c.trials, c.seed) {
                let _ = writeln!(s, "  trials {t}, seed {seed}");
            }
        }
        s
    }
}

fn provenance_parts(alg: &Algebra) -> (Option<String>, Option<String>, Option<String>) {
    match alg.provenance() {
        Some(Provenance::Doubling(d)) => {
            (Some(d.placement.name().to_string()), Some(d.scalar.to_string()), Some(d.base.describe()))
        }
        Some(Provenance::Opposite(o)) => {
            let (p, c, b) = provenance_parts(o);
            (p.map(|p| format!("op({p})")), c, b)
        }
        _ => (None, None, None),
    }
}

pub fn fingerprint_header() -> String {
    format!(
        "{:<16} {:>3} {:>5} {:>5} {:>5} {:>4} {:>4} {:>4} {:>6} {:>4} {:>6} {:>4} {:>4}  {}",
        "entry", "dim", "nuc_l", "nuc_m", "nuc_r", "nuc", "comm", "cent", "tpa(l)", "der", "der'", "zder", "ker'", "division"
    )
}

pub fn fingerprint_row(name: &str, dim: usize, f: &FingerprintRecord, division: &str) -> String {
    let tpa = f.third_power_assoc_at_l.map_or("-".to_string(), |b| b.to_string());
    format!(
        "{:<16} {:>3} {:>5} {:>5} {:>5} {:>4} {:>4} {:>4} {:>6} {:>4} {:>6} {:>4} {:>4}  {}",
        name,
        dim,
        f.nuc_l,
        f.nuc_m,
        f.nuc_r,
        f.nuc,
        f.comm,
        f.center,
        tpa,
        f.der_dim,
        f.der_derived_dim,
        f.der_center_dim,
        f.derived_kernel_dim,
        division
    )
}
