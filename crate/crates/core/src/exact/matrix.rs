//! Dense matrices over exact scalars or polynomials.
//!
//! Over a field: reduced row echelon form, rank, canonical kernel bases and
//! linear solving. Over polynomials: products, minors, determinants by
//! memoized cofactor expansion, and Pfaffians of antisymmetric matrices.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use super::field::{Field, Scalar};
use super::poly::MultiPoly;
use crate::{Error, Result};

/// Row-major rectangular matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<T>,
}

/// Outcome of solving `A v = rhs`.
#[derive(Debug, Clone, PartialEq)]
pub enum LinSolve {
    Solution(Vec<Scalar>),
    Inconsistent,
}

impl<T: Clone> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidInput("ragged rows".to_string()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// A matrix with no rows but a definite column count.
    pub fn empty(cols: usize) -> Self {
        Matrix { rows: 0, cols, data: Vec::new() }
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.cols.max(1)).take(self.rows)
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.rows_iter().map(|r| r.to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix<T> {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    /// Stack `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != other.cols {
            return Err(Error::SizeMismatch);
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols, data })
    }
}

// ---------------------------------------------------------------------------
// Field linear algebra
// ---------------------------------------------------------------------------

impl Matrix<Scalar> {
    pub fn zero(field: &Field, rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| field.zero())
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { field.one() } else { field.zero() })
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self, field: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !field.is_zero(self.at(i, c))) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    let a = self.at(pr, j).clone();
                    let b = self.at(r, j).clone();
                    self.set(pr, j, b);
                    self.set(r, j, a);
                }
            }
            let inv = field.inv(self.at(r, c)).expect("pivot nonzero");
            for j in 0..self.cols {
                let v = field.mul(self.at(r, j), &inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && !field.is_zero(self.at(i, c)) {
                    let factor = self.at(i, c).clone();
                    for j in 0..self.cols {
                        let v = field.sub(self.at(i, j), &field.mul(&factor, self.at(r, j)));
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, field: &Field) -> usize {
        let mut m = self.clone();
        m.rref(field).len()
    }

    /// Canonical kernel basis: one vector per free column, then row-reduced
    /// so that row-equivalent matrices yield identical bases.
    pub fn kernel_basis(&self, field: &Field) -> Matrix<Scalar> {
        let mut m = self.clone();
        let pivots = m.rref(field);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![field.zero(); self.cols];
            v[fc] = field.one();
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(m.at(ri, fc));
            }
            rows.push(v);
        }
        if rows.is_empty() {
            return Matrix::empty(self.cols);
        }
        let mut k = Matrix::from_rows(rows).expect("uniform rows");
        k.rref(field);
        k
    }

    /// Solve `self * v = rhs` for a single solution (free variables zero).
    pub fn solve(&self, field: &Field, rhs: &[Scalar]) -> Result<LinSolve> {
        if rhs.len() != self.rows {
            return Err(Error::SizeMismatch);
        }
        let mut aug = Matrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                rhs[i].clone()
            }
        });
        let pivots = aug.rref(field);
        if pivots.contains(&self.cols) {
            return Ok(LinSolve::Inconsistent);
        }
        let mut v = vec![field.zero(); self.cols];
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = aug.at(ri, self.cols).clone();
        }
        Ok(LinSolve::Solution(v))
    }

    pub fn mat_mul(&self, field: &Field, other: &Matrix<Scalar>) -> Result<Matrix<Scalar>> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch);
        }
        Ok(Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = field.zero();
            for k in 0..self.cols {
                acc = field.add(&acc, &field.mul(self.at(i, k), other.at(k, j)));
            }
            acc
        }))
    }

    pub fn apply(&self, field: &Field, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::SizeMismatch);
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = field.zero();
                for j in 0..self.cols {
                    acc = field.add(&acc, &field.mul(self.at(i, j), &v[j]));
                }
                acc
            })
            .collect())
    }

    pub fn is_invertible(&self, field: &Field) -> bool {
        self.rows == self.cols && self.rank(field) == self.rows
    }

    /// Inverse of a square matrix, when it exists.
    pub fn inverse(&self, field: &Field) -> Option<Matrix<Scalar>> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.at(i, j).clone()
            } else if j - n == i {
                field.one()
            } else {
                field.zero()
            }
        });
        let pivots = aug.rref(field);
        if pivots.len() != n || pivots.iter().enumerate().any(|(k, &c)| c != k) {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| aug.at(i, n + j).clone()))
    }

    /// Drop zero rows (used after row reduction of spanning sets).
    pub fn drop_zero_rows(&self, field: &Field) -> Matrix<Scalar> {
        let rows: Vec<Vec<Scalar>> = self
            .rows_iter()
            .filter(|r| r.iter().any(|x| !field.is_zero(x)))
            .map(|r| r.to_vec())
            .collect();
        if rows.is_empty() {
            return Matrix::empty(self.cols);
        }
        Matrix::from_rows(rows).expect("uniform rows")
    }
}

// ---------------------------------------------------------------------------
// Polynomial matrices
// ---------------------------------------------------------------------------

impl Matrix<MultiPoly> {
    pub fn mat_mul(&self, other: &Matrix<MultiPoly>) -> Result<Matrix<MultiPoly>> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch);
        }
        let mut out = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = self.at(i, 0).mul(other.at(0, j))?;
                for k in 1..self.cols {
                    acc = acc.add(&self.at(i, k).mul(other.at(k, j))?)?;
                }
                out.push(acc);
            }
        }
        Ok(Matrix { rows: self.rows, cols: other.cols, data: out })
    }

    /// Determinant by cofactor expansion memoized on column subsets.
    pub fn determinant(&self) -> Result<MultiPoly> {
        if self.rows != self.cols {
            return Err(Error::NotSquare);
        }
        let n = self.rows;
        if n == 0 {
            return Err(Error::NotSquare);
        }
        let template = self.at(0, 0);
        let one = MultiPoly::one(template.ring.clone(), template.vars.clone());
        if n > 64 {
            return Err(Error::InvalidInput("matrix too large for determinant".to_string()));
        }
        let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut memo: BTreeMap<u64, MultiPoly> = BTreeMap::new();
        memo.insert(0, one);
        self.det_rec(full, &mut memo)
    }

    fn det_rec(&self, cols: u64, memo: &mut BTreeMap<u64, MultiPoly>) -> Result<MultiPoly> {
        if let Some(p) = memo.get(&cols) {
            return Ok(p.clone());
        }
        let k = cols.count_ones() as usize;
        let row = self.rows - k; // expand along successive rows
        let template = self.at(0, 0);
        let mut acc = MultiPoly::zero(template.ring.clone(), template.vars.clone());
        let mut sign_pos = true;
        for j in 0..self.cols {
            if cols & (1 << j) == 0 {
                continue;
            }
            let entry = self.at(row, j);
            if !entry.is_zero() {
                let minor = self.det_rec(cols & !(1 << j), memo)?;
                let term = entry.mul(&minor)?;
                acc = if sign_pos { acc.add(&term)? } else { acc.sub(&term)? };
            }
            sign_pos = !sign_pos;
        }
        memo.insert(cols, acc.clone());
        Ok(acc)
    }

    /// Pfaffian of an antisymmetric matrix of even size (zero diagonal and
    /// `A[j][i] = -A[i][j]` are validated).
    pub fn pfaffian(&self) -> Result<MultiPoly> {
        if self.rows != self.cols {
            return Err(Error::NotSquare);
        }
        let n = self.rows;
        if n == 0 || n % 2 != 0 {
            return Err(Error::NotAntisymmetric);
        }
        for i in 0..n {
            if !self.at(i, i).is_zero() {
                return Err(Error::NotAntisymmetric);
            }
            for j in (i + 1)..n {
                if self.at(j, i) != &self.at(i, j).neg() {
                    return Err(Error::NotAntisymmetric);
                }
            }
        }
        let idx: Vec<usize> = (0..n).collect();
        Ok(self.pf_rec(&idx)?)
    }

    fn pf_rec(&self, idx: &[usize]) -> Result<MultiPoly> {
        let template = self.at(0, 0);
        if idx.is_empty() {
            return Ok(MultiPoly::one(template.ring.clone(), template.vars.clone()));
        }
        let i0 = idx[0];
        let mut acc = MultiPoly::zero(template.ring.clone(), template.vars.clone());
        for (pos, &j) in idx.iter().enumerate().skip(1) {
            let entry = self.at(i0, j);
            if entry.is_zero() {
                continue;
            }
            let rest: Vec<usize> =
                idx.iter().copied().filter(|&k| k != i0 && k != j).collect();
            let term = entry.mul(&self.pf_rec(&rest)?)?;
            acc = if pos % 2 == 1 { acc.add(&term)? } else { acc.sub(&term)? };
        }
        Ok(acc)
    }

    /// All `size`-minors, rows and column subsets in lexicographic order.
    pub fn minors(&self, size: usize) -> Result<Vec<MultiPoly>> {
        if size == 0 || size > self.rows || size > self.cols {
            return Ok(Vec::new());
        }
        let row_sets = combinations(self.rows, size);
        let col_sets = combinations(self.cols, size);
        let mut out = Vec::new();
        for rs in &row_sets {
            for cs in &col_sets {
                let sub = Matrix::from_fn(size, size, |i, j| self.at(rs[i], cs[j]).clone());
                out.push(sub.determinant()?);
            }
        }
        Ok(out)
    }

    /// Evaluate every entry at a point.
    pub fn eval(&self, field: &Field, point: &[Scalar]) -> Result<Matrix<Scalar>> {
        let mut data = Vec::with_capacity(self.rows * self.cols);
        for e in &self.data {
            data.push(e.eval(field, point)?);
        }
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::CoeffRing;

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    #[test]
    fn kernel_by_inspection() {
        // kernel of [[0,1],[0,0]] over F_5 is span{(1,0)}
        let f = f5();
        let m = Matrix::from_rows(vec![
            vec![f.zero(), f.one()],
            vec![f.zero(), f.zero()],
        ])
        .unwrap();
        let k = m.kernel_basis(&f);
        assert_eq!(k.rows, 1);
        assert_eq!(k.row(0), &[f.one(), f.zero()]);
    }

    #[test]
    fn inconsistent_solve_over_q() {
        let q = Field::rationals();
        let m = Matrix::from_rows(vec![
            vec![q.one(), q.one()],
            vec![q.zero(), q.zero()],
        ])
        .unwrap();
        let res = m.solve(&q, &[q.from_i64(2), q.from_i64(1)]).unwrap();
        assert_eq!(res, LinSolve::Inconsistent);
        let res = m.solve(&q, &[q.from_i64(2), q.zero()]).unwrap();
        assert_eq!(res, LinSolve::Solution(vec![q.from_i64(2), q.zero()]));
    }

    #[test]
    fn kernel_basis_canonical_on_row_equivalent_input() {
        let f = f5();
        let a = Matrix::from_rows(vec![
            vec![f.one(), f.from_i64(2), f.from_i64(3)],
            vec![f.zero(), f.one(), f.from_i64(4)],
        ])
        .unwrap();
        // 2*row0 + row1, 3*row1
        let b = Matrix::from_rows(vec![
            vec![f.from_i64(2), f.zero(), f.zero()],
            vec![f.zero(), f.from_i64(3), f.from_i64(12)],
        ])
        .unwrap();
        let a2 = Matrix::from_rows(vec![
            {
                let r0 = a.row(0);
                let r1 = a.row(1);
                (0..3)
                    .map(|j| f.add(&f.scale_i64(&r0[j], 2), &r1[j]))
                    .collect()
            },
            a.row(1).iter().map(|x| f.scale_i64(x, 3)).collect(),
        ])
        .unwrap();
        let _ = b;
        assert_eq!(a.kernel_basis(&f), a2.kernel_basis(&f));
    }

    #[test]
    fn pfaffian_2x2_and_diag_det() {
        let vars = vec!["a".to_string(), "b".to_string(), "c".to_string()];
        let r = CoeffRing::Int;
        let a = MultiPoly::var(r.clone(), vars.clone(), 0);
        let b = MultiPoly::var(r.clone(), vars.clone(), 1);
        let c = MultiPoly::var(r.clone(), vars.clone(), 2);
        let zero = MultiPoly::zero(r.clone(), vars.clone());
        let m = Matrix::from_rows(vec![
            vec![zero.clone(), a.clone()],
            vec![a.neg(), zero.clone()],
        ])
        .unwrap();
        assert_eq!(m.pfaffian().unwrap(), a);

        let d = Matrix::from_rows(vec![
            vec![a.clone(), zero.clone(), zero.clone()],
            vec![zero.clone(), b.clone(), zero.clone()],
            vec![zero.clone(), zero.clone(), c.clone()],
        ])
        .unwrap();
        assert_eq!(d.determinant().unwrap().to_string(), "a*b*c");
    }

    #[test]
    fn pfaffian_rejects_non_antisymmetric() {
        let vars = vec!["a".to_string()];
        let r = CoeffRing::Int;
        let a = MultiPoly::var(r.clone(), vars.clone(), 0);
        let zero = MultiPoly::zero(r.clone(), vars.clone());
        let m = Matrix::from_rows(vec![
            vec![zero.clone(), a.clone()],
            vec![a.clone(), zero.clone()],
        ])
        .unwrap();
        assert_eq!(m.pfaffian().unwrap_err(), Error::NotAntisymmetric);
    }
}
