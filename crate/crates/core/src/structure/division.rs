//! Zero-divisor probes and certificate-grade division verdicts.

use std::fmt;

use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{AlgElement, Algebra, EtaleKind, Provenance, Side};
use crate::doubling::{dickson_double, halves, pair, DoublingSpec};
use crate::error::{Error, Result};
use crate::field::{hilbert_symbol_q, FieldSpec, FieldValue};
use crate::linalg::rank_mod_prime;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Division,
    NotDivision,
    ProbabilisticNoWitness,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Division => "division",
            Verdict::NotDivision => "not_division",
            Verdict::ProbabilisticNoWitness => "probabilistic_no_witness",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Where a zero-divisor witness came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessOrigin {
    SampledPair,
    LeftKernel,
    RightKernel,
    IsotropicVector,
    SplitEtale,
    Opposite,
}

#[derive(Clone, Debug)]
pub enum Reason {
    /// `(a,b)_ℚ` is division (symbol −1) and `c ∉ F`.
    HilbertSymbol { a: FieldValue, b: FieldValue, symbol: i8 },
    /// Octonion base with positive-definite norm and `N(c)` not a square.
    NormNotSquare { norm: FieldValue },
    /// Doubling of a separable quadratic field by `c ∉ F`, or the field itself.
    EtaleField,
    /// Anisotropic (positive-definite) norm form of an octonion algebra.
    DefiniteNorm,
    ZeroDivisor { x: AlgElement, y: AlgElement, origin: WitnessOrigin, trial: Option<usize> },
    Probe { trials: usize, seed: u64, norm_checks: usize, norm_violations: usize },
}

#[derive(Clone, Debug)]
pub struct DivisionCertificate {
    pub verdict: Verdict,
    pub reason: Reason,
}

impl DivisionCertificate {
    fn witness_cert(x: AlgElement, y: AlgElement, origin: WitnessOrigin, trial: Option<usize>) -> DivisionCertificate {
        DivisionCertificate { verdict: Verdict::NotDivision, reason: Reason::ZeroDivisor { x, y, origin, trial } }
    }

    pub fn witness(&self) -> Option<(&AlgElement, &AlgElement)> {
        match &self.reason {
            Reason::ZeroDivisor { x, y, .. } => Some((x, y)),
            _ => None,
        }
    }

    /// A not-division verdict re-verifies iff its witness has `x, y ≠ 0` and `xy = 0`.
    pub fn reverify(&self) -> bool {
        match (self.verdict, self.witness()) {
            (Verdict::NotDivision, Some((x, y))) => !x.is_zero() && !y.is_zero() && (x * y).is_zero(),
            (Verdict::NotDivision, None) => false,
            _ => true,
        }
    }

    pub fn is_certificate_grade(&self) -> bool {
        self.verdict != Verdict::ProbabilisticNoWitness
    }

    pub fn summary(&self) -> String {
        match &self.reason {
            Reason::HilbertSymbol { symbol, .. } => format!("division (Hilbert symbol {symbol}, c not in F)"),
            Reason::NormNotSquare { norm } => format!("division (norm {norm} not a square)"),
            Reason::EtaleField => "division (nucleus is a separable quadratic field, c not in F)".to_string(),
            Reason::DefiniteNorm => "division (anisotropic norm form)".to_string(),
            Reason::ZeroDivisor { x, y, .. } => format!("not division: ({x}) * ({y}) = 0"),
            Reason::Probe { trials, seed, .. } => {
                format!("no zero divisor found in {trials} trials (seed {seed}); not a proof of division")
            }
        }
    }
}

/// Coefficients the probe draws from.
#[derive(Clone, Debug)]
pub struct CoefficientPool(Vec<FieldValue>);

impl CoefficientPool {
    pub fn new(values: Vec<FieldValue>) -> CoefficientPool {
        assert!(!values.is_empty(), "empty coefficient pool");
        CoefficientPool(values)
    }

    pub fn integers(field: &FieldSpec, lo: i64, hi: i64) -> CoefficientPool {
        let mut v: Vec<FieldValue> = (lo..=hi).map(|n| field.from_i64(n)).collect();
        v.dedup();
        CoefficientPool::new(v)
    }

    /// `{-3..3}` over ℚ, all residues for small primes, and low-degree
    /// polynomials over GF(p)(t).
    pub fn default_for(field: &FieldSpec) -> CoefficientPool {
        match field {
            FieldSpec::Rationals => CoefficientPool::integers(field, -3, 3),
            FieldSpec::PrimeField(p) if *p <= 7 => CoefficientPool::new(field.elements().expect("finite")),
            FieldSpec::PrimeField(_) => CoefficientPool::integers(field, -3, 3),
            FieldSpec::RationalFunctions { p, .. } => {
                let t = field.variable().expect("function field");
                let consts: Vec<FieldValue> = (0..(*p).min(3) as i64).map(|c| field.from_i64(c)).collect();
                let mut v = Vec::new();
                for c2 in &consts {
                    for c1 in &consts {
                        for c0 in &consts {
                            v.push(&(&(c2 * &t.pow(2)) + &(c1 * &t)) + c0);
                        }
                    }
                }
                CoefficientPool::new(v)
            }
        }
    }

    pub fn values(&self) -> &[FieldValue] {
        &self.0
    }

    fn draw(&self, rng: &mut ChaCha8Rng) -> FieldValue {
        self.0[rng.gen_range(0..self.0.len())].clone()
    }
}

fn sample_block(pool: &CoefficientPool, rng: &mut ChaCha8Rng, len: usize, nonzero: bool) -> Vec<FieldValue> {
    loop {
        let v: Vec<FieldValue> = (0..len).map(|_| pool.draw(rng)).collect();
        if !nonzero || v.iter().any(|c| !c.is_zero()) {
            return v;
        }
    }
}

/// A nonzero sample. For doubled algebras: with probability 1/2 both halves are
/// forced nonzero, otherwise the support is one half chosen uniformly.
fn sample(alg: &Algebra, pool: &CoefficientPool, rng: &mut ChaCha8Rng) -> AlgElement {
    let n = alg.dim();
    let f = alg.field();
    let coeffs = if alg.doubling_spec().is_some() {
        let h = n / 2;
        if rng.gen_bool(0.5) {
            let mut c = sample_block(pool, rng, h, true);
            c.extend(sample_block(pool, rng, h, true));
            c
        } else {
            let block = sample_block(pool, rng, h, true);
            let zeros = vec![f.zero(); h];
            if rng.gen_bool(0.5) {
                [block, zeros].concat()
            } else {
                [zeros, block].concat()
            }
        }
    } else {
        sample_block(pool, rng, n, true)
    };
    alg.element(coeffs).expect("sample has algebra dimension")
}

/// Full rank modulo a prime implies full rank over ℚ, so the exact elimination
/// only runs when the cheap test is inconclusive.
const SCREEN_PRIME: u32 = 2_147_483_647;

fn kernel_vector(alg: &Algebra, x: &AlgElement, side: Side) -> Option<AlgElement> {
    let m = alg.mult_matrix(x, side).expect("own element");
    if matches!(alg.field(), FieldSpec::Rationals) && rank_mod_prime(&m, SCREEN_PRIME) == Some(m.rows()) {
        return None;
    }
    let ker = m.nullspace();
    ker.basis_vectors().into_iter().next().map(|v| alg.element(v).expect("length n"))
}

/// Checks the dichotomy `c ≠ N(u v⁻¹)·1` used in the division proofs; returns
/// `None` when the check does not apply to this sample.
fn norm_dichotomy(alg: &Algebra, x: &AlgElement) -> Option<bool> {
    let spec = alg.doubling_spec()?;
    let base = &spec.base;
    let (u, v) = halves(x).ok()?;
    let nv = base.norm(&v).ok()?;
    if nv.is_zero() {
        return None;
    }
    let vinv = base.involution_apply(&v).ok()?.scale(&nv.inv().ok()?);
    let w = &u * &vinv;
    let nw = base.norm(&w).ok()?;
    Some(base.scalar(&nw) == spec.scalar)
}

struct TrialOutcome {
    witness: Option<(AlgElement, AlgElement, WitnessOrigin)>,
    norm_checked: bool,
    norm_violation: bool,
}

fn run_trial(alg: &Algebra, pool: &CoefficientPool, seed: u64, trial: usize) -> TrialOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    let x = sample(alg, pool, &mut rng);
    let y = sample(alg, pool, &mut rng);
    let classical = alg.doubling_spec().is_some_and(DoublingSpec::is_classical);
    let (norm_checked, norm_violation) = match norm_dichotomy(alg, &x) {
        Some(hit) => (true, hit && !classical),
        None => (false, false),
    };
    let witness = if (&x * &y).is_zero() {
        Some((x, y, WitnessOrigin::SampledPair))
    } else if let Some(k) = kernel_vector(alg, &x, Side::Left) {
        Some((x, k, WitnessOrigin::LeftKernel))
    } else {
        kernel_vector(alg, &x, Side::Right).map(|k| (k, x, WitnessOrigin::RightKernel))
    };
    TrialOutcome { witness, norm_checked, norm_violation }
}

/// Seeded search for zero divisors. Each trial derives its own stream from
/// `(seed, trial)`, so the result does not depend on scheduling.
pub fn zero_divisor_probe(alg: &Algebra, trials: usize, seed: u64, pool: &CoefficientPool) -> DivisionCertificate {
    let outcomes: Vec<TrialOutcome> = (0..trials.max(1)).into_par_iter().map(|t| run_trial(alg, pool, seed, t)).collect();
    let norm_checks = outcomes.iter().filter(|o| o.norm_checked).count();
    let norm_violations = outcomes.iter().filter(|o| o.norm_violation).count();
    for (t, o) in outcomes.into_iter().enumerate() {
        if let Some((x, y, origin)) = o.witness {
            return DivisionCertificate::witness_cert(x, y, origin, Some(t));
        }
    }
    DivisionCertificate {
        verdict: Verdict::ProbabilisticNoWitness,
        reason: Reason::Probe { trials: trials.max(1), seed, norm_checks, norm_violations },
    }
}

/// Nonzero `x` with `N(x) = 0` in a quaternion algebra `(a,b)`: searches
/// `x0² = a x1² + b x2²` over a bounded grid.
fn isotropic_quaternion_vector(alg: &Algebra, a: &FieldValue, b: &FieldValue) -> Result<AlgElement> {
    let f = alg.field();
    let range: Vec<i64> = match f {
        FieldSpec::PrimeField(p) => (0..(*p as i64).min(400)).collect(),
        _ => (-120..=120).collect(),
    };
    for &x1 in &range {
        for &x2 in &range {
            if x1 == 0 && x2 == 0 {
                continue;
            }
            let (v1, v2) = (f.from_i64(x1), f.from_i64(x2));
            if v1.is_zero() && v2.is_zero() {
                continue;
            }
            let rhs = &(a * &(&v1 * &v1)) + &(b * &(&v2 * &v2));
            if let Some(x0) = rhs.sqrt() {
                let x = alg.element(vec![x0, v1, v2, f.zero()])?;
                debug_assert!(alg.norm(&x).is_ok_and(|n| n.is_zero()));
                return Ok(x);
            }
        }
    }
    Err(Error::WitnessNotFound(format!("no isotropic vector of ({a},{b}) in the search box")))
}

/// Nonzero isotropic vector by enumeration (finite fields, small algebras).
fn isotropic_by_enumeration(alg: &Algebra) -> Result<AlgElement> {
    let els = alg.field().elements().ok_or_else(|| Error::UnsupportedBase("infinite field".into()))?;
    let n = alg.dim();
    let total = (els.len() as u64).checked_pow(n as u32).filter(|&t| t <= 1 << 20);
    let total = total.ok_or_else(|| Error::UnsupportedBase("field too large to enumerate".into()))?;
    for idx in 1..total {
        let mut r = idx;
        let coeffs = (0..n)
            .map(|_| {
                let c = els[(r % els.len() as u64) as usize].clone();
                r /= els.len() as u64;
                c
            })
            .collect();
        let x = alg.element(coeffs)?;
        if alg.norm(&x)?.is_zero() {
            return Ok(x);
        }
    }
    Err(Error::WitnessNotFound("norm form is anisotropic".into()))
}

/// Zero-divisor pair `(x, σ(x))` inside a split associative composition algebra.
fn base_witness(base: &Algebra) -> Result<(AlgElement, AlgElement, WitnessOrigin)> {
    match base.provenance() {
        Some(Provenance::Etale(EtaleKind::Split)) => {
            let one = base.unit();
            let i = base.basis(1);
            if base.field().characteristic() == 2 {
                Ok((i.clone(), &one + &i, WitnessOrigin::SplitEtale))
            } else {
                Ok((&one + &i, &one - &i, WitnessOrigin::SplitEtale))
            }
        }
        Some(Provenance::Quaternion { a, b }) => {
            let x = isotropic_quaternion_vector(base, a, b)?;
            let y = base.involution_apply(&x)?;
            Ok((x, y, WitnessOrigin::IsotropicVector))
        }
        _ => {
            let x = isotropic_by_enumeration(base)?;
            let y = base.involution_apply(&x)?;
            Ok((x, y, WitnessOrigin::IsotropicVector))
        }
    }
}

fn all_negative(vals: &[&FieldValue]) -> bool {
    vals.iter().all(|v| v.as_rational().is_some_and(Signed::is_negative))
}

/// Certificate for an algebra with known provenance; see [`division_certificate`].
pub fn certify(alg: &Algebra) -> Result<DivisionCertificate> {
    let f = alg.field();
    match alg.provenance() {
        Some(Provenance::Opposite(orig)) => {
            let c = certify(orig)?;
            Ok(match c.witness() {
                Some((x, y)) => {
                    // xy = 0 in A means y∘x = 0 in A^op.
                    let (x2, y2) = (alg.transport(y)?, alg.transport(x)?);
                    DivisionCertificate::witness_cert(x2, y2, WitnessOrigin::Opposite, None)
                }
                None => c,
            })
        }
        Some(Provenance::Doubling(spec)) => certify_doubling(alg, spec),
        Some(Provenance::Quaternion { a, b }) => {
            if *f == FieldSpec::Rationals {
                let s = hilbert_symbol_q(a.as_rational().expect("Q"), b.as_rational().expect("Q"))?;
                if s == -1 {
                    return Ok(DivisionCertificate {
                        verdict: Verdict::Division,
                        reason: Reason::HilbertSymbol { a: a.clone(), b: b.clone(), symbol: s },
                    });
                }
            } else if !f.is_finite() {
                return Err(Error::UnsupportedBase(format!("quaternion algebra over {f}")));
            }
            let (x, y, o) = base_witness(alg)?;
            Ok(DivisionCertificate::witness_cert(x, y, o, None))
        }
        Some(Provenance::Etale(EtaleKind::Split)) => {
            let (x, y, o) = base_witness(alg)?;
            Ok(DivisionCertificate::witness_cert(x, y, o, None))
        }
        Some(Provenance::Etale(_)) => Ok(DivisionCertificate { verdict: Verdict::Division, reason: Reason::EtaleField }),
        Some(Provenance::Octonion { a, b, e }) if all_negative(&[a, b, e]) => {
            Ok(DivisionCertificate { verdict: Verdict::Division, reason: Reason::DefiniteNorm })
        }
        Some(Provenance::QuaternionChar2 { .. }) if f.is_finite() => {
            let (x, y, o) = base_witness(alg)?;
            Ok(DivisionCertificate::witness_cert(x, y, o, None))
        }
        _ => Err(Error::UnsupportedBase(alg.describe())),
    }
}

fn certify_doubling(alg: &Algebra, spec: &DoublingSpec) -> Result<DivisionCertificate> {
    let base = &spec.base;
    let f = base.field();
    let c = &spec.scalar;
    let lift = |(x, y, o): (AlgElement, AlgElement, WitnessOrigin)| -> Result<DivisionCertificate> {
        let zero = base.zero();
        Ok(DivisionCertificate::witness_cert(pair(alg, &x, &zero)?, pair(alg, &y, &zero)?, o, None))
    };
    match base.provenance() {
        Some(Provenance::Quaternion { a, b }) => {
            if *f == FieldSpec::Rationals {
                let s = hilbert_symbol_q(a.as_rational().expect("Q"), b.as_rational().expect("Q"))?;
                if s == 1 {
                    return lift(base_witness(base)?);
                }
                if c.is_scalar() {
                    return Err(Error::UnsupportedBase("classical doubling of a quaternion division algebra".into()));
                }
                Ok(DivisionCertificate {
                    verdict: Verdict::Division,
                    reason: Reason::HilbertSymbol { a: a.clone(), b: b.clone(), symbol: s },
                })
            } else if f.is_finite() {
                lift(base_witness(base)?)
            } else {
                Err(Error::UnsupportedBase(format!("quaternion base over {f}")))
            }
        }
        Some(Provenance::Octonion { a, b, e }) if *f == FieldSpec::Rationals => {
            if !all_negative(&[a, b, e]) {
                return Err(Error::UnsupportedBase("octonion base with indefinite norm".into()));
            }
            if c.is_scalar() {
                return Err(Error::UnsupportedBase("classical doubling of an octonion algebra".into()));
            }
            let norm = base.norm(c)?;
            if norm.is_square() {
                return Err(Error::UnsupportedBase(format!("norm {norm} of the scalar is a square")));
            }
            Ok(DivisionCertificate { verdict: Verdict::Division, reason: Reason::NormNotSquare { norm } })
        }
        Some(Provenance::Etale(EtaleKind::Split)) => lift(base_witness(base)?),
        Some(Provenance::Etale(_)) => {
            if c.is_scalar() {
                return Err(Error::UnsupportedBase("classical doubling of a quadratic field".into()));
            }
            Ok(DivisionCertificate { verdict: Verdict::Division, reason: Reason::EtaleField })
        }
        Some(Provenance::QuaternionChar2 { .. }) if f.is_finite() => lift(base_witness(base)?),
        _ => Err(Error::UnsupportedBase(base.describe())),
    }
}

/// Certificate-grade verdict for `Cay(D, c)`: Hilbert symbol for quaternion
/// bases over ℚ, the norm-square test for definite octonion bases over ℚ,
/// explicit zero divisors for split or finite bases.
pub fn division_certificate(spec: &DoublingSpec) -> Result<DivisionCertificate> {
    certify(&dickson_double(spec)?)
}
