//! Special Clifford group membership and its action on isotropic subspaces
//! and their ideals.

use alloc::vec::Vec;

use super::algebra::{Clifford, CliffordElement};
use super::ideal::{ideal_basis, parity_masks};
use crate::exact::field::Scalar;
use crate::exact::matrix::LinSolve;
use crate::quadform::{isotropic_check, IsotropyMode, Subspace};
use crate::{Error, Result};

/// Result of testing `u` for special Clifford group membership and
/// transporting `W` and its ideal through conjugation.
#[derive(Debug, Clone)]
pub struct SgammaReport {
    pub is_member: bool,
    pub u_inverse: Option<CliffordElement>,
    pub conjugated_w: Option<Subspace>,
    /// Right multiplication by `u^{-1}` maps `I^W_d` onto `I^{uWu^{-1}}_d`,
    /// checked at degrees `d` and `d+1`.
    pub ideal_transported: Option<bool>,
}

/// Invert `u` in the even Clifford algebra by solving `u . x = 1` on the
/// even component; membership additionally requires `u e_i u^{-1}` to stay
/// in the span of the generators.
pub fn sgamma(cl: &Clifford, u: &CliffordElement, w: &Subspace, d: i64) -> Result<SgammaReport> {
    if u.degree % 2 != 0 || !u.parity_consistent() {
        return Err(Error::InvalidInput(alloc::string::String::from(
            "group candidates live in the even Clifford algebra",
        )));
    }
    let f = &cl.form.field;
    let even = parity_masks(cl.gens(), 0);

    // u . x = 1 on the even component
    let mul_mat = cl.left_mul_matrix(u, &even, &even);
    let mut one = alloc::vec![f.zero(); even.len()];
    one[0] = f.one();
    let u_inv = match mul_mat.solve(f, &one)? {
        LinSolve::Inconsistent => {
            return Ok(SgammaReport {
                is_member: false,
                u_inverse: None,
                conjugated_w: None,
                ideal_transported: None,
            })
        }
        LinSolve::Solution(sol) => super::ideal::coords_to_element(f, &sol, &even, -u.degree),
    };
    debug_assert_eq!(cl.mul(u, &u_inv).coeffs, cl.one().coeffs);

    // conjugation must preserve the span of the generators
    let mut conjugated_gens: Vec<Vec<Scalar>> = Vec::with_capacity(cl.gens());
    for i in 0..cl.gens() {
        let c = cl.mul(&cl.mul(u, &cl.generator(i)), &u_inv);
        let mut vecpart = alloc::vec![f.zero(); cl.gens()];
        let mut linear = true;
        for (m, s) in &c.coeffs {
            if m.count_ones() == 1 {
                vecpart[m.trailing_zeros() as usize] = s.clone();
            } else {
                linear = false;
                break;
            }
        }
        if !linear {
            return Ok(SgammaReport {
                is_member: false,
                u_inverse: Some(u_inv),
                conjugated_w: None,
                ideal_transported: None,
            });
        }
        conjugated_gens.push(vecpart);
    }

    // transport W: span of u w u^{-1} over basis vectors w
    if !isotropic_check(&cl.form, w, IsotropyMode::Plain)? {
        return Ok(SgammaReport {
            is_member: true,
            u_inverse: Some(u_inv),
            conjugated_w: None,
            ideal_transported: None,
        });
    }
    let mut rows = Vec::with_capacity(w.dim());
    for i in 0..w.dim() {
        let wv = cl.from_vector(w.basis.row(i))?;
        let c = cl.mul(&cl.mul(u, &wv), &u_inv);
        let mut vecpart = alloc::vec![f.zero(); cl.gens()];
        for (m, s) in &c.coeffs {
            debug_assert_eq!(m.count_ones(), 1);
            vecpart[m.trailing_zeros() as usize] = s.clone();
        }
        rows.push(vecpart);
    }
    let conj_w = Subspace::from_spanning(f, cl.gens(), rows)?;

    // ideal transport: I^W_e . u^{-1} = I^{conj W}_e as subspaces, e = d, d+1
    let mut transported = true;
    for e in [d, d + 1] {
        let src = ideal_basis(cl, w, e)?;
        let dst = ideal_basis(cl, &conj_w, e)?;
        let masks = &dst.masks;
        let mut rows = Vec::with_capacity(src.dim());
        for elem in &src.elements {
            let moved = cl.mul(elem, &u_inv);
            rows.push(super::ideal::element_coords(f, &moved, masks));
        }
        let mut m = crate::exact::matrix::Matrix::from_rows(rows)?;
        m.rref(f);
        let m = m.drop_zero_rows(f);
        if m != dst.coords {
            transported = false;
        }
    }

    Ok(SgammaReport {
        is_member: true,
        u_inverse: Some(u_inv),
        conjugated_w: Some(conj_w),
        ideal_transported: Some(transported),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::Field;
    use crate::quadform::QuadraticForm;
    use alloc::collections::BTreeMap;

    #[test]
    fn hyperbolic_plane_unit() {
        // q = x0x1 over Q, u = 1 + e0e1: u^{-1} = 1 - (1/2) e0e1,
        // u e0 u^{-1} = 2 e0, u e1 u^{-1} = (1/2) e1
        let qf = Field::rationals();
        let q = QuadraticForm::new(
            qf.clone(),
            2,
            [((0usize, 1usize), qf.one())].into_iter().collect(),
        )
        .unwrap();
        let cl = Clifford::new(q);
        let mut coeffs = BTreeMap::new();
        coeffs.insert(0u32, qf.one());
        coeffs.insert(0b11u32, qf.one());
        let u = CliffordElement { degree: 0, coeffs };
        let w = Subspace::coordinate(&qf, 2, &[0]);
        let rep = sgamma(&cl, &u, &w, 0).unwrap();
        assert!(rep.is_member);
        let uinv = rep.u_inverse.as_ref().unwrap();
        let half = qf.from_ratio(&1.into(), &2.into()).unwrap();
        assert_eq!(uinv.coeffs.get(&0), Some(&qf.one()));
        assert_eq!(uinv.coeffs.get(&0b11), Some(&qf.neg(&half)));
        // u e0 u^{-1} = 2 e0 spans the same line, so W is preserved
        assert_eq!(rep.conjugated_w.as_ref().unwrap(), &w);
        assert_eq!(rep.ideal_transported, Some(true));
        let conj = cl.mul(&cl.mul(&u, &cl.generator(0)), uinv);
        assert_eq!(conj.coeffs.get(&0b01), Some(&qf.from_i64(2)));
        let conj = cl.mul(&cl.mul(&u, &cl.generator(1)), uinv);
        assert_eq!(conj.coeffs.get(&0b10), Some(&half));
    }

    #[test]
    fn identity_element_is_member() {
        let f5 = Field::prime(5).unwrap();
        let q = QuadraticForm::new(
            f5.clone(),
            4,
            [((0usize, 1usize), f5.one()), ((2, 3), f5.one())]
                .into_iter()
                .collect(),
        )
        .unwrap();
        let cl = Clifford::new(q);
        let u = cl.one();
        let w = Subspace::coordinate(&f5, 4, &[0, 2]);
        let rep = sgamma(&cl, &u, &w, 0).unwrap();
        assert!(rep.is_member);
        assert_eq!(rep.conjugated_w.as_ref().unwrap(), &w);
        assert_eq!(rep.ideal_transported, Some(true));
    }

    #[test]
    fn odd_candidates_rejected_by_shape() {
        let qf = Field::rationals();
        let q = QuadraticForm::new(
            qf.clone(),
            2,
            [((0usize, 1usize), qf.one())].into_iter().collect(),
        )
        .unwrap();
        let cl = Clifford::new(q);
        let u = cl.generator(0);
        let w = Subspace::coordinate(&qf, 2, &[0]);
        assert!(sgamma(&cl, &u, &w, 0).is_err());
    }

    #[test]
    fn zero_divisor_is_not_member() {
        // u = e0 e1 in q = x0x1 squares to itself, not invertible
        let qf = Field::rationals();
        let q = QuadraticForm::new(
            qf.clone(),
            2,
            [((0usize, 1usize), qf.one())].into_iter().collect(),
        )
        .unwrap();
        let cl = Clifford::new(q);
        let u = cl.monomial(0b11);
        let w = Subspace::coordinate(&qf, 2, &[0]);
        let rep = sgamma(&cl, &u, &w, 0).unwrap();
        assert!(!rep.is_member);
    }
}
