//! Unital algebras presented by structure constants.

mod expr;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::doubling::DoublingSpec;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, FieldValue};
use crate::linalg::{Echelon, Matrix, Subspace};

pub use expr::{ElementErrorKind, ElementParseError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NucleusPart {
    Left,
    Middle,
    Right,
    Full,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EtaleKind {
    Split,
    Sqrt(FieldValue),
    ArtinSchreier(FieldValue),
}

/// How an algebra was built.
#[derive(Clone, Debug)]
pub enum Provenance {
    Quaternion { a: FieldValue, b: FieldValue },
    QuaternionChar2 { a: FieldValue, b: FieldValue },
    Etale(EtaleKind),
    Octonion { a: FieldValue, b: FieldValue, e: FieldValue },
    Doubling(Box<DoublingSpec>),
    Opposite(Algebra),
}

struct AlgebraData {
    field: FieldSpec,
    dim: usize,
    labels: Vec<String>,
    tensor: Vec<FieldValue>,
    products: Vec<Vec<(usize, FieldValue)>>,
    unit: usize,
    involution: Option<Matrix>,
    provenance: Option<Provenance>,
}

/// A finite-dimensional unital algebra with structure tensor
/// `e_i e_j = sum_k c[i][j][k] e_k`. Cloning is cheap and clones are the same
/// algebra for the purpose of element compatibility.
#[derive(Clone)]
pub struct Algebra(Arc<AlgebraData>);

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({}, dim {} over {})", self.describe(), self.dim(), self.field())
    }
}

impl Algebra {
    /// Builds an algebra from a dense tensor indexed `(i*n + j)*n + k`.
    /// The unit law is checked on every basis element.
    pub fn new(field: &FieldSpec, labels: Vec<String>, tensor: Vec<FieldValue>, unit: usize) -> Result<Algebra> {
        let n = labels.len();
        if tensor.len() != n * n * n {
            return Err(Error::DimensionMismatch { expected: n * n * n, found: tensor.len() });
        }
        if unit >= n {
            return Err(Error::NotUnital(format!("unit index {unit} out of range")));
        }
        if let Some(v) = tensor.iter().find(|v| v.spec() != *field) {
            return Err(Error::FieldMismatch { left: field.to_string(), right: v.spec().to_string() });
        }
        let products = (0..n * n)
            .map(|ij| {
                (0..n)
                    .filter(|&k| !tensor[ij * n + k].is_zero())
                    .map(|k| (k, tensor[ij * n + k].clone()))
                    .collect()
            })
            .collect();
        let alg = Algebra(Arc::new(AlgebraData {
            field: field.clone(),
            dim: n,
            labels,
            tensor,
            products,
            unit,
            involution: None,
            provenance: None,
        }));
        for i in 0..n {
            let e = alg.basis(i);
            if alg.mul_raw(&alg.basis(unit).coeffs, &e.coeffs) != e.coeffs {
                return Err(Error::NotUnital(format!("1*{} != {}", alg.label(i), alg.label(i))));
            }
            if alg.mul_raw(&e.coeffs, &alg.basis(unit).coeffs) != e.coeffs {
                return Err(Error::NotUnital(format!("{}*1 != {}", alg.label(i), alg.label(i))));
            }
        }
        Ok(alg)
    }

    fn rebuild(&self, involution: Option<Matrix>, provenance: Option<Provenance>) -> Algebra {
        let d = &self.0;
        Algebra(Arc::new(AlgebraData {
            field: d.field.clone(),
            dim: d.dim,
            labels: d.labels.clone(),
            tensor: d.tensor.clone(),
            products: d.products.clone(),
            unit: d.unit,
            involution,
            provenance,
        }))
    }

    /// Attaches an involution after checking `σ² = id` and `σ(xy) = σ(y)σ(x)` on basis pairs.
    pub fn with_involution(&self, sigma: Matrix) -> Result<Algebra> {
        let n = self.dim();
        if sigma.rows() != n || sigma.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: sigma.rows() });
        }
        if sigma.mul(&sigma)? != Matrix::identity(self.field(), n) {
            return Err(Error::InvalidInvolution("sigma^2 != id".into()));
        }
        let images: Vec<Vec<FieldValue>> = (0..n).map(|i| sigma.column(i)).collect();
        for i in 0..n {
            for j in 0..n {
                let lhs = sigma.mul_vec(&self.mul_raw(&self.basis(i).coeffs, &self.basis(j).coeffs))?;
                let rhs = self.mul_raw(&images[j], &images[i]);
                if lhs != rhs {
                    return Err(Error::InvalidInvolution(format!(
                        "sigma({}*{}) != sigma({})*sigma({})",
                        self.label(i),
                        self.label(j),
                        self.label(j),
                        self.label(i)
                    )));
                }
            }
        }
        Ok(self.rebuild(Some(sigma), self.0.provenance.clone()))
    }

    pub fn with_provenance(&self, provenance: Provenance) -> Algebra {
        self.rebuild(self.0.involution.clone(), Some(provenance))
    }

    pub fn field(&self) -> &FieldSpec {
        &self.0.field
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.0.labels[i]
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.0.labels.iter().position(|l| l == label)
    }

    pub fn unit_index(&self) -> usize {
        self.0.unit
    }

    pub fn involution(&self) -> Option<&Matrix> {
        self.0.involution.as_ref()
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.0.provenance.as_ref()
    }

    /// The doubling data if this algebra was built by a doubling.
    pub fn doubling_spec(&self) -> Option<&DoublingSpec> {
        match self.provenance()? {
            Provenance::Doubling(d) => Some(d),
            _ => None,
        }
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &FieldValue {
        let n = self.dim();
        &self.0.tensor[(i * n + j) * n + k]
    }

    pub fn tensor(&self) -> &[FieldValue] {
        &self.0.tensor
    }

    pub fn same_instance(&self, other: &Algebra) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// Tensor-identical: same field, labels, unit and structure constants.
    pub fn same_table(&self, other: &Algebra) -> bool {
        self.field() == other.field()
            && self.0.labels == other.0.labels
            && self.0.unit == other.0.unit
            && self.0.tensor == other.0.tensor
    }

    pub fn describe(&self) -> String {
        match self.provenance() {
            None => format!("algebra[{}]", self.dim()),
            Some(Provenance::Quaternion { a, b }) => format!("({a},{b})"),
            Some(Provenance::QuaternionChar2 { a, b }) => format!("[{a},{b})"),
            Some(Provenance::Etale(EtaleKind::Split)) => "split".to_string(),
            Some(Provenance::Etale(EtaleKind::Sqrt(a))) => format!("sqrt({a})"),
            Some(Provenance::Etale(EtaleKind::ArtinSchreier(a))) => format!("artinschreier({a})"),
            Some(Provenance::Octonion { a, b, e }) => format!("({a},{b},{e})"),
            Some(Provenance::Doubling(d)) => {
                format!("{}({}, {})", d.placement.name(), d.base.describe(), d.scalar)
            }
            Some(Provenance::Opposite(a)) => format!("op({})", a.describe()),
        }
    }

    // ---- elements ----

    pub fn zero(&self) -> AlgElement {
        AlgElement { alg: self.clone(), coeffs: vec![self.field().zero(); self.dim()] }
    }

    pub fn unit(&self) -> AlgElement {
        self.basis(self.unit_index())
    }

    pub fn basis(&self, i: usize) -> AlgElement {
        let mut x = self.zero();
        x.coeffs[i] = self.field().one();
        x
    }

    pub fn basis_by_label(&self, label: &str) -> Option<AlgElement> {
        self.label_index(label).map(|i| self.basis(i))
    }

    /// `s * 1`.
    pub fn scalar(&self, s: &FieldValue) -> AlgElement {
        self.unit().scale(s)
    }

    pub fn element(&self, coeffs: Vec<FieldValue>) -> Result<AlgElement> {
        if coeffs.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: coeffs.len() });
        }
        if let Some(v) = coeffs.iter().find(|v| v.spec() != *self.field()) {
            return Err(Error::FieldMismatch { left: self.field().to_string(), right: v.spec().to_string() });
        }
        Ok(AlgElement { alg: self.clone(), coeffs })
    }

    pub fn element_i64(&self, coeffs: &[i64]) -> Result<AlgElement> {
        self.element(coeffs.iter().map(|&c| self.field().from_i64(c)).collect())
    }

    /// Parses a linear combination of basis labels such as `1 + 2*i - jl`.
    pub fn parse_element(&self, text: &str) -> std::result::Result<AlgElement, ElementParseError> {
        expr::parse_element(self, text)
    }

    fn owns(&self, x: &AlgElement) -> Result<()> {
        if self.same_instance(&x.alg) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub(crate) fn mul_raw(&self, x: &[FieldValue], y: &[FieldValue]) -> Vec<FieldValue> {
        let n = self.dim();
        let mut out = vec![self.field().zero(); n];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let s = xa * yb;
                for (k, c) in &self.0.products[a * n + b] {
                    out[*k] = &out[*k] + &(&s * c);
                }
            }
        }
        out
    }

    // ---- products ----

    pub fn mul(&self, x: &AlgElement, y: &AlgElement) -> Result<AlgElement> {
        self.owns(x)?;
        self.owns(y)?;
        Ok(AlgElement { alg: self.clone(), coeffs: self.mul_raw(&x.coeffs, &y.coeffs) })
    }

    /// `(xy)z - x(yz)`.
    pub fn associator(&self, x: &AlgElement, y: &AlgElement, z: &AlgElement) -> Result<AlgElement> {
        let l = self.mul(&self.mul(x, y)?, z)?;
        let r = self.mul(x, &self.mul(y, z)?)?;
        Ok(&l - &r)
    }

    pub fn commutator(&self, x: &AlgElement, y: &AlgElement) -> Result<AlgElement> {
        Ok(&self.mul(x, y)? - &self.mul(y, x)?)
    }

    /// Matrix of `L_x` or `R_x` acting on coordinate columns.
    pub fn mult_matrix(&self, x: &AlgElement, side: Side) -> Result<Matrix> {
        self.owns(x)?;
        let n = self.dim();
        let cols: Vec<Vec<FieldValue>> = (0..n)
            .map(|j| {
                let e = &self.basis(j).coeffs;
                match side {
                    Side::Left => self.mul_raw(&x.coeffs, e),
                    Side::Right => self.mul_raw(e, &x.coeffs),
                }
            })
            .collect();
        Ok(Matrix::from_columns(self.field(), n, &cols))
    }

    fn basis_product(&self, a: usize, b: usize) -> Vec<FieldValue> {
        let n = self.dim();
        let mut out = vec![self.field().zero(); n];
        for (k, c) in &self.0.products[a * n + b] {
            out[*k] = c.clone();
        }
        out
    }

    /// `[e_a, e_b, e_c]` as a coordinate vector.
    fn basis_associator(&self, a: usize, b: usize, c: usize) -> Vec<FieldValue> {
        let ab = self.basis_product(a, b);
        let bc = self.basis_product(b, c);
        let l = self.mul_raw(&ab, &self.basis(c).coeffs);
        let r = self.mul_raw(&self.basis(a).coeffs, &bc);
        l.iter().zip(&r).map(|(x, y)| x - y).collect()
    }

    /// Solves for all `x` with `sum_m x_m v_m(i,j) = 0` over the given families.
    fn solve_linear_condition<F>(&self, families: &[F]) -> Subspace
    where
        F: Fn(usize, usize, usize) -> Vec<FieldValue>,
    {
        let n = self.dim();
        let mut e = Echelon::new(self.field(), n);
        'outer: for family in families {
            for i in 0..n {
                for j in 0..n {
                    let cols: Vec<Vec<FieldValue>> = (0..n).map(|m| family(m, i, j)).collect();
                    for k in 0..n {
                        let row: Vec<FieldValue> = (0..n).map(|m| cols[m][k].clone()).collect();
                        e.insert(&row);
                        if e.rank() == n {
                            break 'outer;
                        }
                    }
                }
            }
        }
        e.kernel()
    }

    pub fn nucleus(&self, part: NucleusPart) -> Subspace {
        type Fam<'a> = Box<dyn Fn(usize, usize, usize) -> Vec<FieldValue> + 'a>;
        let left: Fam = Box::new(|m, i, j| self.basis_associator(m, i, j));
        let middle: Fam = Box::new(|m, i, j| self.basis_associator(i, m, j));
        let right: Fam = Box::new(|m, i, j| self.basis_associator(i, j, m));
        match part {
            NucleusPart::Left => self.solve_linear_condition(&[left]),
            NucleusPart::Middle => self.solve_linear_condition(&[middle]),
            NucleusPart::Right => self.solve_linear_condition(&[right]),
            NucleusPart::Full => self.solve_linear_condition(&[left, middle, right]),
        }
    }

    pub fn commuter(&self) -> Subspace {
        let fam = |m: usize, j: usize, _: usize| {
            let a = self.basis_product(m, j);
            let b = self.basis_product(j, m);
            a.iter().zip(&b).map(|(x, y)| x - y).collect::<Vec<_>>()
        };
        let n = self.dim();
        let mut e = Echelon::new(self.field(), n);
        for j in 0..n {
            let cols: Vec<Vec<FieldValue>> = (0..n).map(|m| fam(m, j, 0)).collect();
            for k in 0..n {
                let row: Vec<FieldValue> = (0..n).map(|m| cols[m][k].clone()).collect();
                e.insert(&row);
            }
        }
        e.kernel()
    }

    pub fn center(&self) -> Subspace {
        self.commuter().intersection(&self.nucleus(NucleusPart::Full)).expect("same ambient space")
    }

    pub fn is_associative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| self.basis_associator(a, b, c).iter().all(FieldValue::is_zero))))
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|a| (0..n).all(|b| self.basis_product(a, b) == self.basis_product(b, a)))
    }

    /// The opposite algebra `x∘y = yx`; an involution, if present, is kept.
    pub fn opposite(&self) -> Algebra {
        let n = self.dim();
        let mut tensor = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    tensor.push(self.structure_constant(j, i, k).clone());
                }
            }
        }
        let op = Algebra::new(self.field(), self.0.labels.clone(), tensor, self.0.unit).expect("opposite stays unital");
        op.rebuild(self.0.involution.clone(), Some(Provenance::Opposite(self.clone())))
    }

    /// Carries an element to a tensor-identical or same-dimension algebra by coordinates.
    pub fn transport(&self, x: &AlgElement) -> Result<AlgElement> {
        if x.alg.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: x.alg.dim() });
        }
        self.element(x.coeffs.clone())
    }

    /// Whether `(xx)x = x(xx)`.
    pub fn third_power_assoc_probe(&self, x: &AlgElement) -> Result<bool> {
        let xx = self.mul(x, x)?;
        Ok(self.mul(&xx, x)? == self.mul(x, &xx)?)
    }

    /// Two-sided inverse, when `x` has one.
    pub fn inverse(&self, x: &AlgElement) -> Result<AlgElement> {
        let l = self.mult_matrix(x, Side::Left)?;
        let y = l.solve(&self.unit().coeffs)?.ok_or(Error::NotInvertible)?;
        let y = AlgElement { alg: self.clone(), coeffs: y };
        if !l.is_invertible() || self.mul(&y, x)? != self.unit() {
            return Err(Error::NotInvertible);
        }
        Ok(y)
    }

    // ---- involution ----

    pub fn involution_apply(&self, x: &AlgElement) -> Result<AlgElement> {
        self.owns(x)?;
        let s = self.involution().ok_or(Error::NoInvolution)?;
        Ok(AlgElement { alg: self.clone(), coeffs: s.mul_vec(&x.coeffs)? })
    }

    fn scalar_part_checked(&self, y: &AlgElement) -> Result<FieldValue> {
        if y.is_scalar() {
            Ok(y.coeffs[self.unit_index()].clone())
        } else {
            Err(Error::NonScalarInvolution(y.to_string()))
        }
    }

    /// `x σ(x)` as a scalar.
    pub fn norm(&self, x: &AlgElement) -> Result<FieldValue> {
        let y = self.mul(x, &self.involution_apply(x)?)?;
        self.scalar_part_checked(&y)
    }

    /// `x + σ(x)` as a scalar.
    pub fn trace(&self, x: &AlgElement) -> Result<FieldValue> {
        let y = x + &self.involution_apply(x)?;
        self.scalar_part_checked(&y)
    }
}

/// A coordinate vector in an algebra's distinguished basis.
#[derive(Clone)]
pub struct AlgElement {
    alg: Algebra,
    coeffs: Vec<FieldValue>,
}

impl PartialEq for AlgElement {
    fn eq(&self, other: &Self) -> bool {
        self.alg.same_instance(&other.alg) && self.coeffs == other.coeffs
    }
}

impl Eq for AlgElement {}

impl fmt::Debug for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl AlgElement {
    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn coeffs(&self) -> &[FieldValue] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<FieldValue> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &FieldValue {
        &self.coeffs[i]
    }

    pub fn coeff_of(&self, label: &str) -> Option<&FieldValue> {
        self.alg.label_index(label).map(|i| &self.coeffs[i])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(FieldValue::is_zero)
    }

    /// Lies in `F·1`.
    pub fn is_scalar(&self) -> bool {
        let u = self.alg.unit_index();
        self.coeffs.iter().enumerate().all(|(i, c)| i == u || c.is_zero())
    }

    pub fn scalar_part(&self) -> &FieldValue {
        &self.coeffs[self.alg.unit_index()]
    }

    pub fn scale(&self, s: &FieldValue) -> AlgElement {
        AlgElement { alg: self.alg.clone(), coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn try_add(&self, other: &AlgElement) -> Result<AlgElement> {
        self.alg.owns(other)?;
        Ok(AlgElement { alg: self.alg.clone(), coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() })
    }

    pub fn try_sub(&self, other: &AlgElement) -> Result<AlgElement> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &AlgElement) -> Result<AlgElement> {
        self.alg.mul(self, other)
    }
}

fn render_coeff_term(c: &FieldValue, label: &str, is_unit: bool) -> String {
    let s = c.to_string();
    if is_unit {
        return s;
    }
    if c.is_one() {
        return label.to_string();
    }
    if (-c).is_one() {
        return format!("-{label}");
    }
    let needs_parens = s.contains('+') || s[1..].contains('-');
    if needs_parens {
        format!("({s})*{label}")
    } else {
        format!("{s}*{label}")
    }
}

impl fmt::Display for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = render_coeff_term(c, self.alg.label(i), i == self.alg.unit_index());
            if out.is_empty() {
                out = term;
            } else if let Some(rest) = term.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&term);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{out}")
    }
}

impl Neg for &AlgElement {
    type Output = AlgElement;
    fn neg(self) -> AlgElement {
        AlgElement { alg: self.alg.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! elem_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&AlgElement> for &AlgElement {
            type Output = AlgElement;
            fn $method(self, rhs: &AlgElement) -> AlgElement {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

elem_binop!(Add, add, try_add);
elem_binop!(Sub, sub, try_sub);
elem_binop!(Mul, mul, try_mul);

#[cfg(test)]
mod tests {
    use super::*;

    /// Two-dimensional algebra F[x]/(x^2 - a) written out by hand.
    fn quadratic(a: i64) -> Algebra {
        let f = FieldSpec::Rationals;
        let z = f.zero();
        let o = f.one();
        let t = vec![
            o.clone(), z.clone(), // 1*1
            z.clone(), o.clone(), // 1*x
            z.clone(), o.clone(), // x*1
            f.from_i64(a), z.clone(), // x*x
        ];
        Algebra::new(&f, vec!["1".into(), "x".into()], t, 0).unwrap()
    }

    #[test]
    fn unit_law_is_enforced() {
        let f = FieldSpec::Rationals;
        let t = vec![f.zero(); 8];
        assert!(matches!(Algebra::new(&f, vec!["1".into(), "x".into()], t, 0), Err(Error::NotUnital(_))));
    }

    #[test]
    fn commutative_algebra_has_full_commuter() {
        let a = quadratic(-1);
        assert_eq!(a.commuter().dim(), 2);
        assert_eq!(a.nucleus(NucleusPart::Full).dim(), 2);
        assert!(a.opposite().same_table(&a));
    }

    #[test]
    fn mult_matrix_of_unit_and_zero() {
        let a = quadratic(3);
        assert_eq!(a.mult_matrix(&a.unit(), Side::Left).unwrap(), Matrix::identity(a.field(), 2));
        assert!(a.mult_matrix(&a.zero(), Side::Right).unwrap().is_zero());
    }

    #[test]
    fn foreign_elements_are_rejected() {
        let a = quadratic(2);
        let b = quadratic(2);
        assert_eq!(a.mul(&a.unit(), &b.unit()), Err(Error::AlgebraMismatch));
    }

    #[test]
    fn bad_involution_is_rejected() {
        let a = quadratic(2);
        let f = a.field().clone();
        let swap = Matrix::from_i64(&f, &[&[0, 1], &[1, 0]]);
        assert!(a.with_involution(swap).is_err());
        let conj = Matrix::from_i64(&f, &[&[1, 0], &[0, -1]]);
        let a = a.with_involution(conj).unwrap();
        let x = a.element_i64(&[3, 5]).unwrap();
        assert_eq!(a.norm(&x).unwrap(), f.from_i64(9 - 2 * 25));
        assert_eq!(a.trace(&x).unwrap(), f.from_i64(6));
    }

    #[test]
    fn rendering() {
        let a = quadratic(2);
        assert_eq!(a.element_i64(&[1, -2]).unwrap().to_string(), "1 - 2*x");
        assert_eq!(a.element_i64(&[0, -1]).unwrap().to_string(), "-x");
        assert_eq!(a.zero().to_string(), "0");
    }

    #[test]
    fn inverse_in_quadratic_field() {
        let a = quadratic(-1);
        let x = a.element_i64(&[1, 1]).unwrap();
        let y = a.inverse(&x).unwrap();
        assert_eq!(a.mul(&x, &y).unwrap(), a.unit());
        let split = quadratic(1);
        let z = split.element_i64(&[1, 1]).unwrap();
        assert_eq!(split.inverse(&z), Err(Error::NotInvertible));
    }
}
