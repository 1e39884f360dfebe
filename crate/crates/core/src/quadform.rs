//! Quadratic forms over a field: polar forms, radicals, coranks with the
//! characteristic-2 correction, isotropy tests, orthogonals, and coordinate
//! hyperbolic reduction.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::exact::field::{Field, Scalar};
use crate::exact::matrix::Matrix;
use crate::exact::poly::{Coeff, CoeffRing, MultiPoly};
use crate::{Error, Result};

/// Quadratic form `q(v) = sum_{i<=j} a_ij v_i v_j` on a vector space of
/// dimension `dim` over `field`, stored as its upper-triangular coefficients.
/// Line-bundle values are always trivialized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticForm {
    pub field: Field,
    pub dim: usize,
    gram_upper: BTreeMap<(usize, usize), Scalar>,
}

/// A subspace in canonical reduced-echelon form; equality of subspaces is
/// equality of representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    pub ambient: usize,
    pub basis: Matrix<Scalar>,
}

/// Corank data of a form: the bilinear corank, the quadric corank, the
/// radical, and whether `q` is nonzero on the radical (only possible in
/// characteristic 2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorankReport {
    pub corank_b: usize,
    pub corank_q: usize,
    pub radical: Subspace,
    pub q_on_radical_nonzero: bool,
}

/// Isotropy flavours for [`isotropic_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsotropyMode {
    Plain,
    Regular,
}

impl QuadraticForm {
    pub fn new(field: Field, dim: usize, coeffs: BTreeMap<(usize, usize), Scalar>) -> Result<Self> {
        for (&(i, j), _) in &coeffs {
            if i > j || j >= dim {
                return Err(Error::InvalidInput(alloc::format!(
                    "coefficient index ({i},{j}) out of range for dimension {dim}"
                )));
            }
        }
        let gram_upper = coeffs
            .into_iter()
            .filter(|(_, c)| !field.is_zero(c))
            .collect();
        Ok(QuadraticForm { field, dim, gram_upper })
    }

    pub fn zero_form(field: Field, dim: usize) -> Self {
        QuadraticForm { field, dim, gram_upper: BTreeMap::new() }
    }

    /// Coefficient `a_ij` for `i <= j`.
    pub fn coeff(&self, i: usize, j: usize) -> Scalar {
        debug_assert!(i <= j);
        self.gram_upper
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&(usize, usize), &Scalar)> {
        self.gram_upper.iter()
    }

    /// Nonzero form on at least one coefficient.
    pub fn is_primitive(&self) -> bool {
        !self.gram_upper.is_empty()
    }

    /// `q(v)` exactly.
    pub fn eval(&self, v: &[Scalar]) -> Result<Scalar> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch);
        }
        let f = &self.field;
        let mut acc = f.zero();
        for (&(i, j), a) in &self.gram_upper {
            acc = f.add(&acc, &f.mul(a, &f.mul(&v[i], &v[j])));
        }
        Ok(acc)
    }

    /// Polar value `b(v, w) = q(v+w) - q(v) - q(w)` via the matrix entries.
    pub fn polar(&self, v: &[Scalar], w: &[Scalar]) -> Result<Scalar> {
        if v.len() != self.dim || w.len() != self.dim {
            return Err(Error::DimensionMismatch);
        }
        let f = &self.field;
        let mut acc = f.zero();
        for (&(i, j), a) in &self.gram_upper {
            let cross = if i == j {
                f.scale_i64(&f.mul(&v[i], &w[i]), 2)
            } else {
                f.add(&f.mul(&v[i], &w[j]), &f.mul(&v[j], &w[i]))
            };
            acc = f.add(&acc, &f.mul(a, &cross));
        }
        Ok(acc)
    }

    /// The symmetric polar matrix, `b_ij = a_ij` off the diagonal and
    /// `b_ii = 2 a_ii`; alternating in characteristic 2.
    pub fn polar_matrix(&self) -> Matrix<Scalar> {
        let f = &self.field;
        Matrix::from_fn(self.dim, self.dim, |i, j| {
            if i == j {
                f.scale_i64(&self.coeff(i, i), 2)
            } else {
                let (a, b) = if i < j { (i, j) } else { (j, i) };
                self.coeff(a, b)
            }
        })
    }

    /// The form as a polynomial in `x0..x{dim-1}`.
    pub fn to_poly(&self) -> MultiPoly {
        let vars: Vec<String> = (0..self.dim).map(|i| alloc::format!("x{i}")).collect();
        self.to_poly_named(&vars)
    }

    pub fn to_poly_named(&self, vars: &[String]) -> MultiPoly {
        let ring = CoeffRing::Fld(self.field.clone());
        let mut p = MultiPoly::zero(ring.clone(), vars.to_vec());
        for (&(i, j), a) in &self.gram_upper {
            let xi = MultiPoly::var(ring.clone(), vars.to_vec(), i);
            let xj = MultiPoly::var(ring.clone(), vars.to_vec(), j);
            let term = xi.mul(&xj).expect("same ring").scale(&Coeff::Fld(a.clone()));
            p = p.add(&term).expect("same ring");
        }
        p
    }

    /// Read a form off a homogeneous quadratic polynomial in `dim` variables.
    pub fn from_poly(field: &Field, dim: usize, p: &MultiPoly) -> Result<Self> {
        if p.vars.len() != dim {
            return Err(Error::DimensionMismatch);
        }
        if !p.is_homogeneous_of(2) {
            return Err(Error::InvalidInput(
                "expected a homogeneous quadratic polynomial".to_string(),
            ));
        }
        let mut coeffs = BTreeMap::new();
        for (m, c) in &p.terms {
            let Coeff::Fld(s) = c else { return Err(Error::RingMismatch) };
            let support: Vec<usize> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i)
                .collect();
            let key = match support.as_slice() {
                [i] => (*i, *i),
                [i, j] => (*i, *j),
                _ => unreachable!("degree-2 monomial"),
            };
            coeffs.insert(key, s.clone());
        }
        QuadraticForm::new(field.clone(), dim, coeffs)
    }

    /// Restrict to the coordinates not listed in `drop` (ascending).
    pub fn restrict_coords(&self, drop: &[usize]) -> QuadraticForm {
        let keep: Vec<usize> = (0..self.dim).filter(|i| !drop.contains(i)).collect();
        let pos: BTreeMap<usize, usize> =
            keep.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let mut coeffs = BTreeMap::new();
        for (&(i, j), a) in &self.gram_upper {
            if let (Some(&ni), Some(&nj)) = (pos.get(&i), pos.get(&j)) {
                coeffs.insert((ni, nj), a.clone());
            }
        }
        QuadraticForm { field: self.field.clone(), dim: keep.len(), gram_upper: coeffs }
    }

    /// Base change along a prime-subfield embedding.
    pub fn embed_into(&self, field: &Field) -> Result<QuadraticForm> {
        let mut coeffs = BTreeMap::new();
        for (&k, a) in &self.gram_upper {
            coeffs.insert(k, field.embed(a)?);
        }
        Ok(QuadraticForm { field: field.clone(), dim: self.dim, gram_upper: coeffs })
    }

    /// The form in the basis given by the rows of `basis`:
    /// `q'(s) = q(sum_i s_i basis_i)`.
    pub fn change_basis(&self, basis: &Matrix<Scalar>) -> Result<QuadraticForm> {
        if basis.cols != self.dim {
            return Err(Error::DimensionMismatch);
        }
        let f = &self.field;
        let n = basis.rows;
        let mut coeffs = BTreeMap::new();
        for i in 0..n {
            let qi = self.eval(basis.row(i))?;
            if !f.is_zero(&qi) {
                coeffs.insert((i, i), qi);
            }
            for j in (i + 1)..n {
                let bij = self.polar(basis.row(i), basis.row(j))?;
                if !f.is_zero(&bij) {
                    coeffs.insert((i, j), bij);
                }
            }
        }
        Ok(QuadraticForm { field: f.clone(), dim: n, gram_upper: coeffs })
    }
}

impl Subspace {
    /// Canonicalize a spanning set: row reduce and drop zero rows.
    pub fn from_spanning(field: &Field, ambient: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        for r in &rows {
            if r.len() != ambient {
                return Err(Error::DimensionMismatch);
            }
        }
        if rows.is_empty() {
            return Ok(Subspace { ambient, basis: Matrix::empty(ambient) });
        }
        let mut m = Matrix::from_rows(rows)?;
        m.rref(field);
        Ok(Subspace { ambient, basis: m.drop_zero_rows(field) })
    }

    pub fn zero(_field: &Field, ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::empty(ambient) }
    }

    /// Span of the listed coordinate vectors.
    pub fn coordinate(field: &Field, ambient: usize, coords: &[usize]) -> Self {
        let rows: Vec<Vec<Scalar>> = coords
            .iter()
            .map(|&c| {
                let mut v = vec![field.zero(); ambient];
                v[c] = field.one();
                v
            })
            .collect();
        Subspace::from_spanning(field, ambient, rows).expect("unit vectors")
    }

    pub fn full(field: &Field, ambient: usize) -> Self {
        Subspace::coordinate(field, ambient, &(0..ambient).collect::<Vec<_>>())
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn contains_vector(&self, field: &Field, v: &[Scalar]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch);
        }
        if v.iter().all(|x| field.is_zero(x)) {
            return Ok(true);
        }
        let stacked = self
            .basis
            .vstack(&Matrix::from_rows(vec![v.to_vec()]).expect("row"))?;
        Ok(stacked.rank(field) == self.dim())
    }

    pub fn contains(&self, field: &Field, other: &Subspace) -> Result<bool> {
        if other.ambient != self.ambient {
            return Err(Error::DimensionMismatch);
        }
        let stacked = self.basis.vstack(&other.basis)?;
        Ok(stacked.rank(field) == self.dim())
    }

    pub fn intersect(&self, field: &Field, other: &Subspace) -> Result<Subspace> {
        if other.ambient != self.ambient {
            return Err(Error::DimensionMismatch);
        }
        // Kernel of [A^T | B^T] gives coefficient pairs with A^T a + B^T b = 0;
        // intersection vectors are A^T a.
        let at = self.basis.transpose();
        let bt = other.basis.transpose();
        let joint = Matrix::from_fn(self.ambient, self.dim() + other.dim(), |i, j| {
            if j < self.dim() {
                at.at(i, j).clone()
            } else {
                bt.at(i, j - self.dim()).clone()
            }
        });
        let ker = joint.kernel_basis(field);
        let mut rows = Vec::new();
        for r in ker.rows_iter() {
            let coeffs = &r[..self.dim()];
            let mut v = vec![field.zero(); self.ambient];
            for (bi, c) in coeffs.iter().enumerate() {
                for (k, entry) in self.basis.row(bi).iter().enumerate() {
                    v[k] = field.add(&v[k], &field.mul(c, entry));
                }
            }
            rows.push(v);
        }
        Subspace::from_spanning(field, self.ambient, rows)
    }

    /// True when every basis row is a coordinate vector.
    pub fn is_coordinate(&self, field: &Field) -> bool {
        self.basis.rows_iter().all(|r| {
            r.iter().filter(|x| !field.is_zero(x)).count() == 1
                && r.iter().any(|x| *x == field.one())
        })
    }

    /// Pivot coordinates of the echelon basis.
    pub fn pivot_coords(&self, field: &Field) -> Vec<usize> {
        self.basis
            .rows_iter()
            .map(|r| r.iter().position(|x| !field.is_zero(x)).expect("nonzero row"))
            .collect()
    }
}

/// Polar matrix and bilinear radical of `q`, the radical in canonical
/// echelon form.
pub fn polar_and_radical(q: &QuadraticForm) -> (Matrix<Scalar>, Subspace) {
    let b = q.polar_matrix();
    let ker = b.kernel_basis(&q.field);
    let radical = Subspace { ambient: q.dim, basis: ker.drop_zero_rows(&q.field) };
    (b, radical)
}

/// Corank of the polar form and of the quadric, with the characteristic-2
/// correction: `corank Q = corank b - 1` exactly when `char = 2` and `q` is
/// not identically zero on the radical.
pub fn corank(q: &QuadraticForm) -> CorankReport {
    let (_, radical) = polar_and_radical(q);
    let corank_b = radical.dim();
    // On the radical the polar form vanishes, so q is zero on all of it
    // iff it vanishes on basis vectors and their pairwise sums.
    let f = &q.field;
    let mut nonzero = false;
    'outer: for i in 0..radical.dim() {
        let vi = radical.basis.row(i);
        if !f.is_zero(&q.eval(vi).expect("dim ok")) {
            nonzero = true;
            break;
        }
        for j in (i + 1)..radical.dim() {
            let sum: Vec<Scalar> = vi
                .iter()
                .zip(radical.basis.row(j))
                .map(|(a, b)| f.add(a, b))
                .collect();
            if !f.is_zero(&q.eval(&sum).expect("dim ok")) {
                nonzero = true;
                break 'outer;
            }
        }
    }
    let corank_q = if q.field.characteristic() == 2 && nonzero {
        corank_b - 1
    } else {
        corank_b
    };
    CorankReport { corank_b, corank_q, radical, q_on_radical_nonzero: nonzero }
}

/// Isotropy of `W` for `q`. `Plain` means `q` vanishes identically on `W`
/// (checked on basis vectors and polar pairs, which suffices in every
/// characteristic); `Regular` additionally requires the polar pairing
/// `E -> W^dual` to be surjective.
pub fn isotropic_check(q: &QuadraticForm, w: &Subspace, mode: IsotropyMode) -> Result<bool> {
    if w.ambient != q.dim {
        return Err(Error::DimensionMismatch);
    }
    let f = &q.field;
    for i in 0..w.dim() {
        if !f.is_zero(&q.eval(w.basis.row(i))?) {
            return Ok(false);
        }
        for j in (i + 1)..w.dim() {
            if !f.is_zero(&q.polar(w.basis.row(i), w.basis.row(j))?) {
                return Ok(false);
            }
        }
    }
    if mode == IsotropyMode::Regular {
        let pairing = pairing_matrix(q, w)?;
        if pairing.rank(f) != w.dim() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rows are `v -> b(w_i, v)` as functionals on the ambient space.
fn pairing_matrix(q: &QuadraticForm, w: &Subspace) -> Result<Matrix<Scalar>> {
    let f = &q.field;
    let mut rows = Vec::with_capacity(w.dim());
    for i in 0..w.dim() {
        let mut row = Vec::with_capacity(q.dim);
        for j in 0..q.dim {
            let mut ej = vec![f.zero(); q.dim];
            ej[j] = f.one();
            row.push(q.polar(w.basis.row(i), &ej)?);
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Ok(Matrix::empty(q.dim));
    }
    Ok(Matrix::from_rows(rows)?)
}

/// Orthogonal `F^perp` = kernel of `v -> (b(f_i, v))_i`.
pub fn orthogonal_subspace(q: &QuadraticForm, f_sub: &Subspace) -> Result<Subspace> {
    if f_sub.ambient != q.dim {
        return Err(Error::DimensionMismatch);
    }
    if f_sub.dim() == 0 {
        return Ok(Subspace::full(&q.field, q.dim));
    }
    let pairing = pairing_matrix(q, f_sub)?;
    let ker = pairing.kernel_basis(&q.field);
    Ok(Subspace { ambient: q.dim, basis: ker.drop_zero_rows(&q.field) })
}

/// Result of a hyperbolic reduction: the induced form `q'` on `F^perp/F` and
/// the change-of-basis rows exhibiting `q = sum x_i y_i + q'`.
#[derive(Debug, Clone)]
pub struct HyperbolicReduction {
    pub reduced: QuadraticForm,
    /// Rows: `f_0..f_{r-1}`, then the hyperbolic partners `v_0..v_{r-1}`,
    /// then a basis of the complement carrying `q'`.
    pub basis_rows: Matrix<Scalar>,
    pub rank_reduced_by: usize,
}

/// Split off one hyperbolic plane per basis vector of the regular isotropic
/// `F` and return the induced form on the orthogonal complement.
///
/// Each step picks the pivot with the lowest coordinate index among the
/// current complement basis, rescales it to pairing one, corrects it to be
/// isotropic, and projects the remaining vectors into the orthogonal of the
/// new hyperbolic plane.
pub fn hyperbolic_reduce(q: &QuadraticForm, f_sub: &Subspace) -> Result<HyperbolicReduction> {
    if !isotropic_check(q, f_sub, IsotropyMode::Regular)? {
        return Err(Error::NotRegularIsotropic);
    }
    let f = &q.field;
    let r = f_sub.dim();
    let mut f_rows: Vec<Vec<Scalar>> = f_sub.basis.to_rows();
    // complement candidates: coordinate vectors not pivotal for F
    let pivots = f_sub.pivot_coords(f);
    let mut comp: Vec<Vec<Scalar>> = (0..q.dim)
        .filter(|i| !pivots.contains(i))
        .map(|i| {
            let mut v = vec![f.zero(); q.dim];
            v[i] = f.one();
            v
        })
        .collect();
    let mut hyp_f: Vec<Vec<Scalar>> = Vec::with_capacity(r);
    let mut hyp_v: Vec<Vec<Scalar>> = Vec::with_capacity(r);

    for step in 0..r {
        let fv = f_rows[step].clone();
        let pivot = comp
            .iter()
            .position(|v| !f.is_zero(&q.polar(&fv, v).expect("dim ok")))
            .ok_or(Error::NotRegularIsotropic)?;
        let mut v = comp.remove(pivot);
        // scale to b(f, v) = 1
        let pair = q.polar(&fv, &v)?;
        let inv = f.inv(&pair).expect("nonzero pairing");
        for x in v.iter_mut() {
            *x = f.mul(x, &inv);
        }
        // make v isotropic: v <- v - q(v) f
        let qv = q.eval(&v)?;
        if !f.is_zero(&qv) {
            for (x, fe) in v.iter_mut().zip(&fv) {
                *x = f.sub(x, &f.mul(&qv, fe));
            }
        }
        debug_assert!(f.is_zero(&q.eval(&v).unwrap()));
        // project later F vectors off v (adding multiples of fv keeps span F)
        for later in f_rows.iter_mut().skip(step + 1) {
            let c = q.polar(later, &v)?;
            if !f.is_zero(&c) {
                for (x, fe) in later.iter_mut().zip(&fv) {
                    *x = f.sub(x, &f.mul(&c, fe));
                }
            }
        }
        // project complement into the orthogonal of {f, v}
        for w in comp.iter_mut() {
            let cv = q.polar(w, &v)?;
            let cf = q.polar(w, &fv)?;
            for k in 0..w.len() {
                let mut x = w[k].clone();
                if !f.is_zero(&cv) {
                    x = f.sub(&x, &f.mul(&cv, &fv[k]));
                }
                if !f.is_zero(&cf) {
                    x = f.sub(&x, &f.mul(&cf, &v[k]));
                }
                w[k] = x;
            }
        }
        hyp_f.push(fv);
        hyp_v.push(v);
    }

    let comp_mat = if comp.is_empty() {
        Matrix::empty(q.dim)
    } else {
        Matrix::from_rows(comp.clone())?
    };
    let reduced = q.change_basis(&comp_mat)?;
    let mut rows = hyp_f;
    rows.extend(hyp_v);
    rows.extend(comp);
    let basis_rows = Matrix::from_rows(rows).expect("uniform");
    Ok(HyperbolicReduction { reduced, basis_rows, rank_reduced_by: 2 * r })
}
