//! Derivation algebras `Der(A) = {D : D(xy) = D(x)y + xD(y)}` and their Lie structure.

use crate::algebra::{AlgElement, Algebra};
use crate::error::{Error, Result};
use crate::field::FieldValue;
use crate::linalg::{Echelon, Matrix, Subspace};

/// One Leibniz equation: component `r` of `D(e_i e_j) - D(e_i)e_j - e_i D(e_j)`.
/// Unknown `D[r][k]` (so that `D(e_k) = Σ_r D[r][k] e_r`) sits in column `r*n + k`.
fn leibniz_row(alg: &Algebra, i: usize, j: usize, r: usize) -> Vec<FieldValue> {
    let n = alg.dim();
    let mut row = vec![alg.field().zero(); n * n];
    for k in 0..n {
        let c = alg.structure_constant(i, j, k);
        if !c.is_zero() {
            row[r * n + k] = &row[r * n + k] + c;
        }
    }
    for s in 0..n {
        let a = alg.structure_constant(s, j, r);
        if !a.is_zero() {
            row[s * n + i] = &row[s * n + i] - a;
        }
        let b = alg.structure_constant(i, s, r);
        if !b.is_zero() {
            row[s * n + j] = &row[s * n + j] - b;
        }
    }
    row
}

/// The `n³ × n²` Leibniz system, rows ordered lexicographically by `(i, j, r)`.
pub fn derivation_system(alg: &Algebra) -> Matrix {
    let n = alg.dim();
    let mut rows = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for r in 0..n {
                rows.push(leibniz_row(alg, i, j, r));
            }
        }
    }
    Matrix::from_rows(alg.field(), rows).expect("n^2 columns")
}

fn flatten(m: &Matrix) -> Vec<FieldValue> {
    (0..m.rows()).flat_map(|r| m.row(r).to_vec()).collect()
}

fn unflatten(alg: &Algebra, v: &[FieldValue]) -> Matrix {
    let n = alg.dim();
    let rows = v.chunks(n).map(<[FieldValue]>::to_vec).collect();
    Matrix::from_rows(alg.field(), rows).expect("n x n")
}

pub fn lie_bracket(a: &Matrix, b: &Matrix) -> Matrix {
    a.mul(b).expect("square").sub(&b.mul(a).expect("square")).expect("same shape")
}

/// Whether `d` satisfies the Leibniz rule on every basis pair.
pub fn is_derivation(alg: &Algebra, d: &Matrix) -> bool {
    let n = alg.dim();
    let images: Vec<AlgElement> =
        (0..n).map(|k| alg.element(d.column(k)).expect("column length n")).collect();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let eij = &alg.basis(i) * &alg.basis(j);
            let lhs = alg.element(d.mul_vec(eij.coeffs()).expect("length n")).expect("length n");
            let rhs = &(&images[i] * &alg.basis(j)) + &(&alg.basis(i) * &images[j]);
            lhs == rhs
        })
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorSet {
    All,
    Derived,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LieDiagnostics {
    pub dim: usize,
    pub derived_dim: usize,
    pub center_dim: usize,
    pub abelian: bool,
}

#[derive(Clone, Debug)]
pub struct DerivationAlgebra {
    algebra: Algebra,
    space: Subspace,
    pivots: Vec<usize>,
    basis: Vec<Matrix>,
    /// `bracket[a][b]` = coordinates of `[D_a, D_b]` in `basis`.
    bracket: Vec<Vec<Vec<FieldValue>>>,
    closed: bool,
}

impl DerivationAlgebra {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn bracket_constants(&self) -> &[Vec<Vec<FieldValue>>] {
        &self.bracket
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn contains(&self, d: &Matrix) -> bool {
        self.space.contains(&flatten(d)).unwrap_or(false)
    }

    /// Coordinates of a member of the span, read at the RREF pivots.
    fn coordinates(&self, v: &[FieldValue]) -> Option<Vec<FieldValue>> {
        let coords: Vec<FieldValue> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let f = self.algebra.field();
        let mut recon = vec![f.zero(); v.len()];
        for (c, b) in coords.iter().zip(self.space.basis_vectors()) {
            for (r, x) in recon.iter_mut().zip(&b) {
                *r = &*r + &(c * x);
            }
        }
        (recon == v).then_some(coords)
    }

    /// Basis of the derived algebra `[Der, Der]` as matrices (RREF order).
    pub fn derived_basis(&self) -> Vec<Matrix> {
        let n2 = self.algebra.dim() * self.algebra.dim();
        let mut e = Echelon::new(self.algebra.field(), n2);
        for a in 0..self.dim() {
            for b in a + 1..self.dim() {
                e.insert(&flatten(&lie_bracket(&self.basis[a], &self.basis[b])));
            }
        }
        e.basis().iter().map(|v| unflatten(&self.algebra, v)).collect()
    }

    fn operators(&self, set: OperatorSet) -> Vec<Matrix> {
        match set {
            OperatorSet::All => self.basis.clone(),
            OperatorSet::Derived => self.derived_basis(),
        }
    }

    pub fn lie_diagnostics(&self) -> Result<LieDiagnostics> {
        if !self.closed {
            return Err(Error::ClosureFailure);
        }
        let d = self.dim();
        let f = self.algebra.field();
        let mut derived = Echelon::new(f, d);
        for a in 0..d {
            for b in 0..d {
                derived.insert(&self.bracket[a][b]);
            }
        }
        let mut center = Echelon::new(f, d);
        for i in 0..d {
            for k in 0..d {
                let row: Vec<FieldValue> = (0..d).map(|a| self.bracket[a][i][k].clone()).collect();
                center.insert(&row);
            }
        }
        let derived_dim = derived.rank();
        Ok(LieDiagnostics { dim: d, derived_dim, center_dim: d - center.rank(), abelian: derived_dim == 0 })
    }

    /// `{x : D(x) = 0 for every D in the set}`.
    pub fn common_kernel(&self, set: OperatorSet) -> Subspace {
        let n = self.algebra.dim();
        let f = self.algebra.field();
        let ops = self.operators(set);
        let mut stacked = Matrix::zeros(f, 0, n);
        for d in &ops {
            stacked = stacked.stack(d).expect("n columns");
        }
        stacked.nullspace()
    }

    /// The smallest subspace containing `seed` and stable under the chosen operators.
    pub fn module_spin(&self, seed: &AlgElement, set: OperatorSet) -> Subspace {
        let f = self.algebra.field();
        let n = self.algebra.dim();
        let ops = self.operators(set);
        let mut e = Echelon::new(f, n);
        let mut queue = vec![seed.coeffs().to_vec()];
        while let Some(v) = queue.pop() {
            if !e.insert(&v) {
                continue;
            }
            for d in &ops {
                let w = d.mul_vec(&v).expect("length n");
                if !e.contains(&w) {
                    queue.push(w);
                }
            }
        }
        Subspace::from_echelon(&e)
    }
}

/// Solves the Leibniz system, re-verifies every basis matrix and computes the
/// bracket constants.
pub fn derivations(alg: &Algebra) -> DerivationAlgebra {
    let n = alg.dim();
    let mut e = Echelon::new(alg.field(), n * n);
    for i in 0..n {
        for j in 0..n {
            for r in 0..n {
                e.insert(&leibniz_row(alg, i, j, r));
            }
        }
    }
    let space = e.kernel();
    let pivots = space
        .basis_vectors()
        .iter()
        .map(|v| v.iter().position(|x| !x.is_zero()).expect("nonzero basis row"))
        .collect();
    let basis: Vec<Matrix> = space.basis_vectors().iter().map(|v| unflatten(alg, v)).collect();
    for d in &basis {
        assert!(is_derivation(alg, d), "solver returned a non-derivation");
    }
    let mut out = DerivationAlgebra { algebra: alg.clone(), space, pivots, basis, bracket: Vec::new(), closed: true };
    let d = out.dim();
    let mut bracket = vec![vec![Vec::new(); d]; d];
    for a in 0..d {
        for b in 0..d {
            match out.coordinates(&flatten(&lie_bracket(&out.basis[a], &out.basis[b]))) {
                Some(c) => bracket[a][b] = c,
                None => {
                    out.closed = false;
                    bracket[a][b] = vec![alg.field().zero(); d];
                }
            }
        }
    }
    out.bracket = bracket;
    out
}
