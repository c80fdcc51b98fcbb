//! Quaternion, étale and octonion constructors and the six Cayley-Dickson
//! doubling rules with the scalar `c` placed left, middle or right.
//!
//! With `σ` the involution of the base and `(u,v)(u',v') = (uu' + φ(v,v'), v'u + vσ(u'))`:
//!
//! | placement   | φ(v, v')        |
//! |-------------|-----------------|
//! | Left        | c(σ(v')v)       |
//! | Middle      | σ(v')(cv)       |
//! | Right       | (σ(v')v)c       |
//! | LeftStar    | (cσ(v'))v       |
//! | MiddleStar  | σ(v'c)v         |
//! | RightStar   | σ(v')(vc)       |

use std::fmt;

use crate::algebra::{AlgElement, Algebra, EtaleKind, Provenance, Side};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, FieldValue};
use crate::linalg::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Placement {
    Left,
    Middle,
    Right,
    LeftStar,
    MiddleStar,
    RightStar,
}

impl Placement {
    pub const ALL: [Placement; 6] = [
        Placement::Left,
        Placement::Middle,
        Placement::Right,
        Placement::LeftStar,
        Placement::MiddleStar,
        Placement::RightStar,
    ];

    pub const UNSTARRED: [Placement; 3] = [Placement::Left, Placement::Middle, Placement::Right];

    pub fn is_starred(self) -> bool {
        matches!(self, Placement::LeftStar | Placement::MiddleStar | Placement::RightStar)
    }

    pub fn name(self) -> &'static str {
        match self {
            Placement::Left => "cay",
            Placement::Middle => "cay_m",
            Placement::Right => "cay_r",
            Placement::LeftStar => "cay_l_star",
            Placement::MiddleStar => "cay_m_star",
            Placement::RightStar => "cay_r_star",
        }
    }

    pub fn from_name(name: &str) -> Option<Placement> {
        Placement::ALL.into_iter().find(|p| p.name() == name)
    }
}

impl fmt::Display for Placement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Reading of the middle-starred rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MiddleStarVariant {
    /// `σ(v'c) v`
    #[default]
    ConjugateOfProduct,
    /// `(σ(v')c) v`
    ConjugateThenScalar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DoublingWarning {
    /// `c ∈ F·1`: a classical doubling.
    ScalarInField,
    /// `σ(c) = c`.
    ScalarFixedByInvolution,
}

#[derive(Clone, Debug)]
pub struct DoublingSpec {
    pub base: Algebra,
    pub scalar: AlgElement,
    pub placement: Placement,
    pub middle_star: MiddleStarVariant,
}

impl DoublingSpec {
    pub fn new(base: &Algebra, scalar: &AlgElement, placement: Placement) -> Result<DoublingSpec> {
        if !scalar.algebra().same_instance(base) {
            return Err(Error::AlgebraMismatch);
        }
        if base.involution().is_none() {
            return Err(Error::NoInvolution);
        }
        if placement.is_starred() && base.is_associative() {
            return Err(Error::PlacementNeedsNonassociativeBase);
        }
        let l = base.mult_matrix(scalar, Side::Left)?;
        let r = base.mult_matrix(scalar, Side::Right)?;
        if !l.is_invertible() || !r.is_invertible() {
            return Err(Error::ScalarNotInvertible);
        }
        Ok(DoublingSpec { base: base.clone(), scalar: scalar.clone(), placement, middle_star: MiddleStarVariant::default() })
    }

    pub fn with_middle_star(mut self, variant: MiddleStarVariant) -> DoublingSpec {
        self.middle_star = variant;
        self
    }

    pub fn is_classical(&self) -> bool {
        self.scalar.is_scalar()
    }

    pub fn warnings(&self) -> Vec<DoublingWarning> {
        let mut w = Vec::new();
        if self.is_classical() {
            w.push(DoublingWarning::ScalarInField);
        }
        if self.base.involution_apply(&self.scalar).is_ok_and(|s| s == self.scalar) {
            w.push(DoublingWarning::ScalarFixedByInvolution);
        }
        w
    }

    fn sigma(&self, x: &AlgElement) -> AlgElement {
        self.base.involution_apply(x).expect("base carries an involution")
    }

    /// The twisting term `φ(v, v')` of the first component.
    fn twist(&self, v: &AlgElement, v2: &AlgElement) -> AlgElement {
        let c = &self.scalar;
        match self.placement {
            Placement::Left => c * &(&self.sigma(v2) * v),
            Placement::Middle => &self.sigma(v2) * &(c * v),
            Placement::Right => &(&self.sigma(v2) * v) * c,
            Placement::LeftStar => &(c * &self.sigma(v2)) * v,
            Placement::MiddleStar => match self.middle_star {
                MiddleStarVariant::ConjugateOfProduct => &self.sigma(&(v2 * c)) * v,
                MiddleStarVariant::ConjugateThenScalar => &(&self.sigma(v2) * c) * v,
            },
            Placement::RightStar => &self.sigma(v2) * &(v * c),
        }
    }

    /// Evaluates the doubling rule on pairs of base elements.
    pub fn rule_product(&self, u: &AlgElement, v: &AlgElement, u2: &AlgElement, v2: &AlgElement) -> (AlgElement, AlgElement) {
        let first = &(u * u2) + &self.twist(v, v2);
        let second = &(v2 * u) + &(v * &self.sigma(u2));
        (first, second)
    }
}

fn next_generator(labels: &[String], field: &FieldSpec) -> char {
    "lmnopqrsuvwxyz"
        .chars()
        .find(|&g| !labels.iter().any(|l| l.contains(g)) && field.variable_name() != Some(&g.to_string()))
        .expect("a free generator letter")
}

fn doubled_labels(base: &Algebra) -> Vec<String> {
    let g = next_generator(base.labels(), base.field());
    let mut labels: Vec<String> = base.labels().to_vec();
    for (i, l) in base.labels().iter().enumerate() {
        labels.push(if i == base.unit_index() { g.to_string() } else { format!("{l}{g}") });
    }
    labels
}

/// Builds `Cay(D, c)` for the given placement. An involution `(u,v) ↦ (σ(u), -v)` is
/// attached only when `c ∈ F·1`.
pub fn dickson_double(spec: &DoublingSpec) -> Result<Algebra> {
    let base = &spec.base;
    let n = base.dim();
    let field = base.field();
    let zero = base.zero();
    let basis: Vec<AlgElement> = (0..n).map(|i| base.basis(i)).collect();
    let half = |p: usize| if p < n { (&basis[p], &zero) } else { (&zero, &basis[p - n]) };
    let mut tensor = Vec::with_capacity(8 * n * n * n);
    for p in 0..2 * n {
        for q in 0..2 * n {
            let (u, v) = half(p);
            let (u2, v2) = half(q);
            let (a, b) = spec.rule_product(u, v, u2, v2);
            tensor.extend(a.into_coeffs());
            tensor.extend(b.into_coeffs());
        }
    }
    let alg = Algebra::new(field, doubled_labels(base), tensor, base.unit_index())?;
    let alg = if spec.is_classical() {
        let sigma = base.involution().expect("checked in DoublingSpec::new");
        let mut m = Matrix::zeros(field, 2 * n, 2 * n);
        let minus_one = field.from_i64(-1);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, sigma.get(i, j).clone());
            }
            m.set(n + i, n + i, minus_one.clone());
        }
        alg.with_involution(m)?
    } else {
        alg
    };
    Ok(alg.with_provenance(Provenance::Doubling(Box::new(spec.clone()))))
}

/// `(u, v)` in a doubled algebra.
pub fn pair(alg: &Algebra, u: &AlgElement, v: &AlgElement) -> Result<AlgElement> {
    let spec = alg.doubling_spec().ok_or(Error::NotADoubling)?;
    if !u.algebra().same_instance(&spec.base) || !v.algebra().same_instance(&spec.base) {
        return Err(Error::AlgebraMismatch);
    }
    let mut c = u.coeffs().to_vec();
    c.extend_from_slice(v.coeffs());
    alg.element(c)
}

/// Splits an element of a doubled algebra into its halves.
pub fn halves(x: &AlgElement) -> Result<(AlgElement, AlgElement)> {
    let spec = x.algebra().doubling_spec().ok_or(Error::NotADoubling)?;
    let n = spec.base.dim();
    let u = spec.base.element(x.coeffs()[..n].to_vec())?;
    let v = spec.base.element(x.coeffs()[n..].to_vec())?;
    Ok((u, v))
}

fn table_from<F>(field: &FieldSpec, labels: &[&str], rule: F) -> Result<Algebra>
where
    F: Fn(usize, usize) -> Vec<(usize, FieldValue)>,
{
    let n = labels.len();
    let mut tensor = vec![field.zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            for (k, c) in rule(i, j) {
                tensor[(i * n + j) * n + k] = c;
            }
        }
    }
    Algebra::new(field, labels.iter().map(|s| s.to_string()).collect(), tensor, 0)
}

fn check_nonzero(field: &FieldSpec, vals: &[&FieldValue]) -> Result<()> {
    for v in vals {
        if v.spec() != *field {
            return Err(Error::FieldMismatch { left: field.to_string(), right: v.spec().to_string() });
        }
        if v.is_zero() {
            return Err(Error::ZeroParameter);
        }
    }
    Ok(())
}

/// The quaternion algebra `(a,b)_F` on `1, i, j, k` with `i² = a`, `j² = b`, `k = ij = -ji`.
pub fn make_quaternion(field: &FieldSpec, a: &FieldValue, b: &FieldValue) -> Result<Algebra> {
    if field.characteristic() == 2 {
        return Err(Error::CharTwoField);
    }
    check_nonzero(field, &[a, b])?;
    let one = field.one();
    let ab = a * b;
    let alg = table_from(field, &["1", "i", "j", "k"], |x, y| match (x, y) {
        (0, y) => vec![(y, one.clone())],
        (x, 0) => vec![(x, one.clone())],
        (1, 1) => vec![(0, a.clone())],
        (1, 2) => vec![(3, one.clone())],
        (1, 3) => vec![(2, a.clone())],
        (2, 1) => vec![(3, -&one)],
        (2, 2) => vec![(0, b.clone())],
        (2, 3) => vec![(1, -b)],
        (3, 1) => vec![(2, -a)],
        (3, 2) => vec![(1, b.clone())],
        (3, 3) => vec![(0, -&ab)],
        _ => unreachable!(),
    })?;
    let sigma = diag(field, &[1, -1, -1, -1]);
    Ok(alg.with_involution(sigma)?.with_provenance(Provenance::Quaternion { a: a.clone(), b: b.clone() }))
}

fn diag(field: &FieldSpec, d: &[i64]) -> Matrix {
    let mut m = Matrix::zeros(field, d.len(), d.len());
    for (i, &x) in d.iter().enumerate() {
        m.set(i, i, field.from_i64(x));
    }
    m
}

/// The characteristic-2 quaternion algebra `[a,b)` on `1, i, j, k = ij` with
/// `i² + i = a`, `j² = b`, `ij = ji + j`.
pub fn make_quaternion_char2(field: &FieldSpec, a: &FieldValue, b: &FieldValue) -> Result<Algebra> {
    if field.characteristic() != 2 {
        return Err(Error::WrongCharacteristic { expected: "2".into(), found: field.characteristic() });
    }
    if a.spec() != *field {
        return Err(Error::FieldMismatch { left: field.to_string(), right: a.spec().to_string() });
    }
    check_nonzero(field, &[b])?;
    let one = field.one();
    let ab = a * b;
    let alg = table_from(field, &["1", "i", "j", "k"], |x, y| match (x, y) {
        (0, y) => vec![(y, one.clone())],
        (x, 0) => vec![(x, one.clone())],
        (1, 1) => vec![(0, a.clone()), (1, one.clone())],
        (1, 2) => vec![(3, one.clone())],
        (1, 3) => vec![(2, a.clone()), (3, one.clone())],
        (2, 1) => vec![(2, one.clone()), (3, one.clone())],
        (2, 2) => vec![(0, b.clone())],
        (2, 3) => vec![(0, b.clone()), (1, b.clone())],
        (3, 1) => vec![(2, a.clone())],
        (3, 2) => vec![(1, b.clone())],
        (3, 3) => vec![(0, ab.clone())],
        _ => unreachable!(),
    })?;
    let mut sigma = Matrix::identity(field, 4);
    sigma.set(0, 1, one.clone());
    Ok(alg.with_involution(sigma)?.with_provenance(Provenance::QuaternionChar2 { a: a.clone(), b: b.clone() }))
}

/// Whether `x² + x = a` has a root in a characteristic-2 field.
///
/// Over GF(2)(t), a root `N/D` in lowest terms forces `d = D²` and
/// `N² + ND = n` for `a = n/d`; since `N ↦ N² + ND` is GF(2)-linear this is an
/// exact linear system in the coefficients of `N`.
pub fn artin_schreier_has_root(a: &FieldValue) -> bool {
    let field = a.spec();
    match &field {
        FieldSpec::PrimeField(_) => field.elements().expect("finite").iter().any(|x| &(x * x) + x == *a),
        FieldSpec::RationalFunctions { .. } => {
            let (n, d) = a.numer_denom().expect("function field");
            let Some(droot) = d.sqrt() else {
                return false;
            };
            let deg = |x: &FieldValue| x.poly_degree();
            let bound = (deg(&n).unwrap_or(0) / 2).max(deg(&droot).unwrap_or(0)) + 1;
            let t = field.variable().expect("function field");
            let monos: Vec<FieldValue> = (0..bound).map(|e| t.pow(e as u64)).collect();
            let images: Vec<FieldValue> = monos.iter().map(|m| &(m * m) + &(m * &droot)).collect();
            let top = images.iter().chain([&n]).filter_map(FieldValue::poly_degree).max().unwrap_or(0);
            let gf2 = FieldSpec::PrimeField(2);
            let coeff = |x: &FieldValue, e: usize| gf2.from_i64(x.poly_coeff(e) as i64);
            let rows: Vec<Vec<FieldValue>> = (0..=top).map(|e| images.iter().map(|im| coeff(im, e)).collect()).collect();
            let rhs: Vec<FieldValue> = (0..=top).map(|e| coeff(&n, e)).collect();
            let m = Matrix::from_rows(&gf2, rows).expect("rectangular");
            m.solve(&rhs).expect("dimensions agree").is_some()
        }
        FieldSpec::Rationals => unreachable!("characteristic 0"),
    }
}

/// A quadratic étale algebra on `1, i`: split, `F(√a)`, or `F[i]/(i² + i + a)` (char 2).
pub fn make_etale(field: &FieldSpec, kind: &EtaleKind) -> Result<Algebra> {
    let char2 = field.characteristic() == 2;
    let one = field.one();
    let (sq, lin, sigma_shift) = match kind {
        EtaleKind::Split if char2 => (field.zero(), one.clone(), true),
        EtaleKind::Split => (one.clone(), field.zero(), false),
        EtaleKind::Sqrt(a) => {
            if a.spec() != *field {
                return Err(Error::FieldMismatch { left: field.to_string(), right: a.spec().to_string() });
            }
            if char2 || a.is_zero() {
                return Err(Error::NotSeparable(format!("x^2 - {a}")));
            }
            if a.is_square() {
                return Err(Error::ParameterIsSquare(a.to_string()));
            }
            (a.clone(), field.zero(), false)
        }
        EtaleKind::ArtinSchreier(a) => {
            if a.spec() != *field {
                return Err(Error::FieldMismatch { left: field.to_string(), right: a.spec().to_string() });
            }
            if !char2 {
                return Err(Error::WrongCharacteristic { expected: "2".into(), found: field.characteristic() });
            }
            if artin_schreier_has_root(a) {
                return Err(Error::ParameterSplits(a.to_string()));
            }
            (a.clone(), one.clone(), true)
        }
    };
    let alg = table_from(field, &["1", "i"], |x, y| match (x, y) {
        (0, y) => vec![(y, one.clone())],
        (x, 0) => vec![(x, one.clone())],
        _ => vec![(0, sq.clone()), (1, lin.clone())],
    })?;
    let sigma = if sigma_shift {
        Matrix::from_rows(field, vec![vec![one.clone(), one.clone()], vec![field.zero(), one.clone()]])?
    } else {
        diag(field, &[1, -1])
    };
    Ok(alg.with_involution(sigma)?.with_provenance(Provenance::Etale(kind.clone())))
}

/// The octonion algebra `Cay(F, a, b, e)`: the classical doubling of `(a,b)_F` by `e`.
pub fn make_octonion(field: &FieldSpec, a: &FieldValue, b: &FieldValue, e: &FieldValue) -> Result<Algebra> {
    check_nonzero(field, &[a, b, e])?;
    let d = make_quaternion(field, a, b)?;
    let spec = DoublingSpec::new(&d, &d.scalar(e), Placement::Left)?;
    let o = dickson_double(&spec)?;
    Ok(o.with_provenance(Provenance::Octonion { a: a.clone(), b: b.clone(), e: e.clone() }))
}
