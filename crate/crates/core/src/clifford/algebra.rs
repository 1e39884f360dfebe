//! The Clifford algebra as a multiplication context over a quadratic form.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::exact::field::Scalar;
use crate::exact::matrix::Matrix;
use crate::quadform::QuadraticForm;
use crate::{Error, Result};

/// Homogeneous element of the Clifford algebra: coefficients on basis
/// monomials `e_S` whose cardinality matches the degree's parity, plus the
/// integer degree label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordElement {
    pub degree: i64,
    /// Subset mask -> nonzero coefficient.
    pub coeffs: BTreeMap<u32, Scalar>,
}

impl CliffordElement {
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Parity of every monomial matches the degree label.
    pub fn parity_consistent(&self) -> bool {
        let parity = (self.degree.rem_euclid(2)) as u32;
        self.coeffs.keys().all(|m| m.count_ones() % 2 == parity)
    }
}

/// Multiplication context for the Clifford algebra of one quadratic form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clifford {
    pub form: QuadraticForm,
}

impl Clifford {
    pub fn new(form: QuadraticForm) -> Self {
        Clifford { form }
    }

    /// Number of generators `n+1`.
    pub fn gens(&self) -> usize {
        self.form.dim
    }

    /// Dimension `2^n` of each fixed-parity graded piece.
    pub fn parity_dim(&self) -> usize {
        1usize << (self.gens() - 1)
    }

    pub fn zero(&self, degree: i64) -> CliffordElement {
        CliffordElement { degree, coeffs: BTreeMap::new() }
    }

    pub fn one(&self) -> CliffordElement {
        self.scalar_elem(self.form.field.one(), 0)
    }

    /// A scalar in an even degree (mask 0).
    pub fn scalar_elem(&self, c: Scalar, degree: i64) -> CliffordElement {
        debug_assert!(degree % 2 == 0);
        let mut coeffs = BTreeMap::new();
        if !self.form.field.is_zero(&c) {
            coeffs.insert(0u32, c);
        }
        CliffordElement { degree, coeffs }
    }

    /// Generator `e_i` in degree 1.
    pub fn generator(&self, i: usize) -> CliffordElement {
        debug_assert!(i < self.gens());
        let mut coeffs = BTreeMap::new();
        coeffs.insert(1u32 << i, self.form.field.one());
        CliffordElement { degree: 1, coeffs }
    }

    /// Degree-1 element from an ambient vector.
    pub fn from_vector(&self, v: &[Scalar]) -> Result<CliffordElement> {
        if v.len() != self.gens() {
            return Err(Error::DimensionMismatch);
        }
        let f = &self.form.field;
        let mut coeffs = BTreeMap::new();
        for (i, c) in v.iter().enumerate() {
            if !f.is_zero(c) {
                coeffs.insert(1u32 << i, c.clone());
            }
        }
        Ok(CliffordElement { degree: 1, coeffs })
    }

    /// Basis monomial `e_S` with its cardinality as the degree.
    pub fn monomial(&self, mask: u32) -> CliffordElement {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(mask, self.form.field.one());
        CliffordElement { degree: mask.count_ones() as i64, coeffs }
    }

    pub fn add(&self, a: &CliffordElement, b: &CliffordElement) -> Result<CliffordElement> {
        if (a.degree - b.degree) % 2 != 0 {
            return Err(Error::FormMismatch);
        }
        let f = &self.form.field;
        let mut coeffs = a.coeffs.clone();
        for (m, c) in &b.coeffs {
            let v = match coeffs.remove(m) {
                Some(old) => f.add(&old, c),
                None => c.clone(),
            };
            if !f.is_zero(&v) {
                coeffs.insert(*m, v);
            }
        }
        Ok(CliffordElement { degree: a.degree, coeffs })
    }

    pub fn scale(&self, a: &CliffordElement, c: &Scalar) -> CliffordElement {
        let f = &self.form.field;
        let mut coeffs = BTreeMap::new();
        for (m, x) in &a.coeffs {
            let v = f.mul(x, c);
            if !f.is_zero(&v) {
                coeffs.insert(*m, v);
            }
        }
        CliffordElement { degree: a.degree, coeffs }
    }

    pub fn neg(&self, a: &CliffordElement) -> CliffordElement {
        self.scale(a, &self.form.field.from_i64(-1))
    }

    pub fn sub(&self, a: &CliffordElement, b: &CliffordElement) -> Result<CliffordElement> {
        self.add(a, &self.neg(b))
    }

    /// Product in the Clifford algebra. Degrees add; bilinear in the inputs.
    pub fn mul(&self, a: &CliffordElement, b: &CliffordElement) -> CliffordElement {
        let f = &self.form.field;
        let mut acc: BTreeMap<u32, Scalar> = BTreeMap::new();
        for (&ma, ca) in &a.coeffs {
            for (&mb, cb) in &b.coeffs {
                let c = f.mul(ca, cb);
                for (m, k) in self.mul_monomials(ma, mb) {
                    let v = match acc.remove(&m) {
                        Some(old) => f.add(&old, &f.mul(&c, &k)),
                        None => f.mul(&c, &k),
                    };
                    if !f.is_zero(&v) {
                        acc.insert(m, v);
                    }
                }
            }
        }
        CliffordElement { degree: a.degree + b.degree, coeffs: acc }
    }

    /// `e_S * e_T` as a list of `(mask, coefficient)` pairs.
    fn mul_monomials(&self, s: u32, t: u32) -> Vec<(u32, Scalar)> {
        let f = &self.form.field;
        let mut acc: Vec<(u32, Scalar)> = vec![(s, f.one())];
        let mut rest = t;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut next: BTreeMap<u32, Scalar> = BTreeMap::new();
            for (m, c) in &acc {
                for (m2, k) in self.mul_monomial_gen(*m, j) {
                    let v = match next.remove(&m2) {
                        Some(old) => f.add(&old, &f.mul(c, &k)),
                        None => f.mul(c, &k),
                    };
                    if !f.is_zero(&v) {
                        next.insert(m2, v);
                    }
                }
            }
            acc = next.into_iter().collect();
        }
        acc
    }

    /// `e_S * e_j` by moving `e_j` leftwards through the sorted word:
    /// `e_i e_j = b_ij - e_j e_i` for `i > j` and `e_j e_j = a_jj`.
    fn mul_monomial_gen(&self, s: u32, j: usize) -> Vec<(u32, Scalar)> {
        let f = &self.form.field;
        if s == 0 {
            return vec![(1u32 << j, f.one())];
        }
        let last = 31 - s.leading_zeros() as usize;
        if last < j {
            return vec![(s | (1u32 << j), f.one())];
        }
        let s_rest = s & !(1u32 << last);
        if last == j {
            let a = self.form.coeff(j, j);
            if f.is_zero(&a) {
                return Vec::new();
            }
            return vec![(s_rest, a)];
        }
        // last > j: e_{S'} (b_{j,last} - e_j e_last)
        let mut out: Vec<(u32, Scalar)> = Vec::new();
        let b = self.form.coeff(j, last);
        if !f.is_zero(&b) {
            out.push((s_rest, b));
        }
        for (m, c) in self.mul_monomial_gen(s_rest, j) {
            debug_assert!(m & (1u32 << last) == 0);
            out.push((m | (1u32 << last), f.neg(&c)));
        }
        out
    }

    /// Left-multiplication operator on a fixed-parity component, as a matrix
    /// in the subset-monomial coordinates of `masks_in`/`masks_out`.
    pub fn left_mul_matrix(
        &self,
        a: &CliffordElement,
        masks_in: &[u32],
        masks_out: &[u32],
    ) -> Matrix<Scalar> {
        let f = &self.form.field;
        let pos: BTreeMap<u32, usize> =
            masks_out.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let mut out = Matrix::zero(f, masks_out.len(), masks_in.len());
        for (col, &m_in) in masks_in.iter().enumerate() {
            let prod = self.mul(a, &self.monomial(m_in));
            for (m, c) in &prod.coeffs {
                let row = *pos.get(m).expect("product stays in the parity component");
                out.set(row, col, c.clone());
            }
        }
        out
    }
}
