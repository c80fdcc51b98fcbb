//! Exact linear algebra over any [`FieldSpec`].
//!
//! Elimination is done by an incremental echelon basis that is kept fully
//! reduced, so its row set is the unique RREF of everything inserted so far.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, FieldValue};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<FieldValue>,
}

impl Matrix {
    pub fn zeros(field: &FieldSpec, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &FieldSpec, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must share the same length and field.
    pub fn from_rows(field: &FieldSpec, rows: Vec<Vec<FieldValue>>) -> Result<Matrix> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
            }
            for v in row {
                if v.spec() != *field {
                    return Err(Error::FieldMismatch { left: field.to_string(), right: v.spec().to_string() });
                }
                data.push(v);
            }
        }
        Ok(Matrix { field: field.clone(), rows: n, cols, data })
    }

    pub fn from_i64(field: &FieldSpec, rows: &[&[i64]]) -> Matrix {
        let rows = rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect();
        Matrix::from_rows(field, rows).expect("rectangular input")
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: &FieldSpec, n: usize, cols: &[Vec<FieldValue>]) -> Matrix {
        let mut m = Matrix::zeros(field, n, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldValue {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldValue) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldValue] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<FieldValue> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<FieldValue>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldValue::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Matrix::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[FieldValue]) -> Result<Vec<FieldValue>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(&FieldValue, &FieldValue) -> FieldValue) -> Result<Matrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch { expected: self.rows * self.cols, found: other.rows * other.cols });
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect();
        Ok(Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, s: &FieldValue) -> Matrix {
        let data = self.data.iter().map(|a| a * s).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.cols });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data })
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(&self.field, self.cols);
        for i in 0..self.rows {
            e.insert(self.row(i));
        }
        e
    }

    /// Reduced row echelon form, rank and pivot columns.
    pub fn rref(&self) -> (Matrix, usize, Vec<usize>) {
        let e = self.echelon();
        let rank = e.rank();
        let pivots = e.pivots();
        let mut out = e.to_matrix();
        out.data.extend(std::iter::repeat(self.field.zero()).take((self.rows - rank) * self.cols));
        out.rows = self.rows;
        (out, rank, pivots)
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Right kernel `{v : M v = 0}`.
    pub fn nullspace(&self) -> Subspace {
        self.echelon().kernel()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotInvertible);
        }
        let n = self.rows;
        let mut e = Echelon::new(&self.field, 2 * n);
        for i in 0..n {
            let mut row = self.row(i).to_vec();
            row.extend((0..n).map(|j| if i == j { self.field.one() } else { self.field.zero() }));
            e.insert(&row);
        }
        if e.pivots().iter().take(n).copied().ne(0..n) {
            return Err(Error::NotInvertible);
        }
        let r = e.to_matrix();
        let mut inv = Matrix::zeros(&self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }

    /// Some solution of `M x = b`, if the system is consistent.
    pub fn solve(&self, b: &[FieldValue]) -> Result<Option<Vec<FieldValue>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: b.len() });
        }
        let mut e = Echelon::new(&self.field, self.cols + 1);
        for i in 0..self.rows {
            let mut row = self.row(i).to_vec();
            row.push(b[i].clone());
            e.insert(&row);
        }
        if e.pivots().contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &p) in e.rows.iter().zip(&e.pivot_cols) {
            if let Some((_, v)) = row.iter().find(|(c, _)| *c == self.cols) {
                x[p] = v.clone();
            }
        }
        Ok(Some(x))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

type SparseRow = Vec<(usize, FieldValue)>;

/// Incrementally built, fully reduced echelon basis of a row space.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: FieldSpec,
    cols: usize,
    rows: Vec<SparseRow>,
    pivot_cols: Vec<usize>,
    by_pivot: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new(field: &FieldSpec, cols: usize) -> Echelon {
        Echelon { field: field.clone(), cols, rows: Vec::new(), pivot_cols: Vec::new(), by_pivot: BTreeMap::new() }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        self.by_pivot.keys().copied().collect()
    }

    /// Residual of `v` after elimination against the current pivots.
    pub fn reduce(&self, v: &[FieldValue]) -> Vec<FieldValue> {
        debug_assert_eq!(v.len(), self.cols);
        let mut dense = v.to_vec();
        for (&p, &r) in &self.by_pivot {
            if dense[p].is_zero() {
                continue;
            }
            let f = dense[p].clone();
            for (c, x) in &self.rows[r] {
                dense[*c] = &dense[*c] - &(&f * x);
            }
        }
        dense
    }

    pub fn contains(&self, v: &[FieldValue]) -> bool {
        self.reduce(v).iter().all(FieldValue::is_zero)
    }

    /// Adds a row; returns whether it was independent of the current span.
    pub fn insert(&mut self, v: &[FieldValue]) -> bool {
        let dense = self.reduce(v);
        let Some(p) = dense.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = dense[p].inv().expect("nonzero pivot");
        let new_row: SparseRow =
            dense.iter().enumerate().skip(p).filter(|(_, x)| !x.is_zero()).map(|(c, x)| (c, x * &inv)).collect();
        for row in &mut self.rows {
            if let Some(f) = row.iter().find(|(c, _)| *c == p).map(|(_, x)| x.clone()) {
                *row = axpy(row, &new_row, &f);
            }
        }
        self.by_pivot.insert(p, self.rows.len());
        self.pivot_cols.push(p);
        self.rows.push(new_row);
        true
    }

    /// Basis rows ordered by pivot column (the RREF without zero rows).
    pub fn to_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(&self.field, self.rows.len(), self.cols);
        for (i, &r) in self.by_pivot.values().enumerate() {
            for (c, x) in &self.rows[r] {
                m.set(i, *c, x.clone());
            }
        }
        m
    }

    pub fn basis(&self) -> Vec<Vec<FieldValue>> {
        self.to_matrix().row_vectors()
    }

    /// Kernel of the matrix whose row space this is.
    pub fn kernel(&self) -> Subspace {
        let pivots: Vec<usize> = self.pivots();
        let mut vecs = Vec::new();
        for free in (0..self.cols).filter(|c| !self.by_pivot.contains_key(c)) {
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for &p in &pivots {
                let row = &self.rows[self.by_pivot[&p]];
                if let Some((_, x)) = row.iter().find(|(c, _)| *c == free) {
                    v[p] = -x;
                }
            }
            vecs.push(v);
        }
        Subspace::span(&self.field, self.cols, &vecs).expect("kernel vectors have ambient length")
    }
}

/// `row - f * other` for sparse rows sorted by column.
fn axpy(row: &SparseRow, other: &SparseRow, f: &FieldValue) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < other.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = other.get(j).map_or(usize::MAX, |e| e.0);
        if ci < cj {
            out.push(row[i].clone());
            i += 1;
        } else if cj < ci {
            out.push((cj, -(f * &other[j].1)));
            j += 1;
        } else {
            let v = &row[i].1 - &(f * &other[j].1);
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// A linear subspace of `F^n`, stored as an RREF basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(field: &FieldSpec, n: usize) -> Subspace {
        Subspace { ambient: n, basis: Matrix::zeros(field, 0, n) }
    }

    pub fn full(field: &FieldSpec, n: usize) -> Subspace {
        Subspace { ambient: n, basis: Matrix::identity(field, n) }
    }

    pub fn span(field: &FieldSpec, n: usize, vectors: &[Vec<FieldValue>]) -> Result<Subspace> {
        let mut e = Echelon::new(field, n);
        for v in vectors {
            if v.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: v.len() });
            }
            e.insert(v);
        }
        Ok(Subspace { ambient: n, basis: e.to_matrix() })
    }

    pub fn from_echelon(e: &Echelon) -> Subspace {
        Subspace { ambient: e.cols(), basis: e.to_matrix() }
    }

    pub fn field(&self) -> &FieldSpec {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<FieldValue>> {
        self.basis.row_vectors()
    }

    fn echelon(&self) -> Echelon {
        self.basis.echelon()
    }

    pub fn contains(&self, v: &[FieldValue]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: v.len() });
        }
        Ok(self.echelon().contains(v))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        let e = other.echelon();
        self.ambient == other.ambient && (0..self.dim()).all(|i| e.contains(self.basis.row(i)))
    }

    /// Annihilator `{w : <u, w> = 0 for all u}` under the standard pairing.
    pub fn annihilator(&self) -> Subspace {
        self.basis.nullspace()
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        let a = self.annihilator().basis;
        let b = other.annihilator().basis;
        Ok(a.stack(&b)?.nullspace())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Subspace::span(self.field(), self.ambient, &vs)
    }
}

/// Rank of a rational matrix reduced modulo `p` after clearing row denominators.
/// Returns `None` for non-rational matrices or when `p` divides a denominator.
pub fn rank_mod_prime(m: &Matrix, p: u32) -> Option<usize> {
    let p64 = p as u64;
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(m.rows());
    for i in 0..m.rows() {
        let row: Vec<_> = m.row(i).iter().map(|x| x.as_rational().cloned()).collect::<Option<_>>()?;
        let lcm = row.iter().fold(num_bigint::BigInt::from(1), |acc, q| acc.lcm(q.denom()));
        if (&lcm % p).is_zero() {
            return None;
        }
        rows.push(
            row.iter()
                .map(|q| {
                    let n = q.numer() * (&lcm / q.denom());
                    n.mod_floor(&num_bigint::BigInt::from(p)).to_u64().expect("residue")
                })
                .collect(),
        );
    }
    let cols = m.cols();
    let mut rank = 0;
    for c in 0..cols {
        let Some(r) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, r);
        let inv = crate::field::poly::pow_mod(rows[rank][c] as u32, p64 - 2, p) as u64;
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p64;
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + p64 - f * y % p64) % p64;
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(&q(), 3);
        let (r, rank, piv) = id.rref();
        assert_eq!((r, rank, piv), (id.clone(), 3, vec![0, 1, 2]));

        let z = Matrix::zeros(&q(), 2, 4);
        assert_eq!(z.rref().1, 0);
        assert_eq!(z.rref().0, z);

        let m = Matrix::from_i64(&q(), &[&[1, 2], &[2, 4]]);
        assert_eq!(m.rref(), (Matrix::from_i64(&q(), &[&[1, 2], &[0, 0]]), 1, vec![0]));
    }

    #[test]
    fn rref_matches_textbook_elimination() {
        let m = Matrix::from_i64(&q(), &[&[0, 2, 4, 2], &[1, 1, 1, 1], &[2, 4, 6, 4]]);
        let (r, rank, piv) = m.rref();
        assert_eq!(rank, 2);
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(r, Matrix::from_i64(&q(), &[&[1, 0, -1, 0], &[0, 1, 2, 1], &[0, 0, 0, 0]]));
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(Matrix::identity(&q(), 5).nullspace().dim(), 0);
        assert_eq!(Matrix::zeros(&q(), 1, 6).nullspace().dim(), 6);
        let gf2 = FieldSpec::prime(2).unwrap();
        let ns = Matrix::from_i64(&gf2, &[&[1, 1]]).nullspace();
        assert_eq!(ns.basis_vectors(), vec![vec![gf2.one(), gf2.one()]]);
    }

    #[test]
    fn contains_examples() {
        let s = Subspace::span(&q(), 2, &[vec![q().from_i64(1), q().from_i64(2)]]).unwrap();
        assert!(s.contains(&[q().zero(), q().zero()]).unwrap());
        assert!(s.contains(&[q().from_i64(2), q().from_i64(4)]).unwrap());
        let e1 = Subspace::span(&q(), 2, &[vec![q().one(), q().zero()]]).unwrap();
        assert!(!e1.contains(&[q().zero(), q().one()]).unwrap());
        assert!(matches!(e1.contains(&[q().one()]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn intersection_of_planes() {
        let f = q();
        let v = |a: i64, b: i64, c: i64| vec![f.from_i64(a), f.from_i64(b), f.from_i64(c)];
        let xy = Subspace::span(&f, 3, &[v(1, 0, 0), v(0, 1, 0)]).unwrap();
        let yz = Subspace::span(&f, 3, &[v(0, 1, 0), v(0, 0, 1)]).unwrap();
        let i = xy.intersection(&yz).unwrap();
        assert_eq!(i.basis_vectors(), vec![v(0, 1, 0)]);
        assert_eq!(xy.sum(&yz).unwrap().dim(), 3);
    }

    #[test]
    fn inverse_and_solve() {
        let m = Matrix::from_i64(&q(), &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(&q(), 2));
        let sing = Matrix::from_i64(&q(), &[&[1, 2], &[2, 4]]);
        assert_eq!(sing.inverse(), Err(Error::NotInvertible));
        let b = vec![q().from_i64(3), q().from_i64(2)];
        let x = m.solve(&b).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), b);
        assert_eq!(sing.solve(&[q().one(), q().one()]).unwrap(), None);
    }

    #[test]
    fn mod_p_rank_oracle() {
        let m = Matrix::from_i64(&q(), &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(rank_mod_prime(&m, 1_000_003), Some(2));
        // 3 divides the 2x2 minors of this matrix
        let n = Matrix::from_i64(&q(), &[&[1, 1], &[1, 4]]);
        assert_eq!(n.rank(), 2);
        assert_eq!(rank_mod_prime(&n, 3), Some(1));
    }
}
