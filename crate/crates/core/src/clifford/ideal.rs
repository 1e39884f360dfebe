//! Clifford ideals: the graded left ideal generated by the top wedge of an
//! isotropic subspace, with canonical row-reduced bases.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::algebra::{Clifford, CliffordElement};
use crate::exact::field::{Field, Scalar};
use crate::exact::matrix::Matrix;
use crate::quadform::{isotropic_check, IsotropyMode, Subspace};
use crate::{Error, Result};

/// Canonical basis of the degree-`d` piece of a Clifford ideal.
///
/// Coordinates live in the fixed-parity component with basis monomials
/// `e_S`, masks ascending; the basis matrix is in reduced row echelon form,
/// so it is the unique representative of the subspace it spans.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealBasis {
    pub w: Subspace,
    pub degree: i64,
    /// Masks of the parity component, ascending (length `2^n`).
    pub masks: Vec<u32>,
    /// Reduced-echelon coordinate rows, one per basis element.
    pub coords: Matrix<Scalar>,
    pub elements: Vec<CliffordElement>,
}

impl IdealBasis {
    pub fn dim(&self) -> usize {
        self.coords.rows
    }
}

/// Masks of cardinality parity `parity` in `0..2^gens`, ascending.
pub fn parity_masks(gens: usize, parity: u32) -> Vec<u32> {
    (0..(1u32 << gens))
        .filter(|m| m.count_ones() % 2 == parity)
        .collect()
}

/// Coordinates of a parity-homogeneous element in the given mask list.
pub fn element_coords(
    field: &Field,
    elem: &CliffordElement,
    masks: &[u32],
) -> Vec<Scalar> {
    let pos: BTreeMap<u32, usize> = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mut row = vec![field.zero(); masks.len()];
    for (m, c) in &elem.coeffs {
        row[*pos.get(m).expect("mask in component")] = c.clone();
    }
    row
}

/// Rebuild an element from coordinates.
pub fn coords_to_element(
    field: &Field,
    row: &[Scalar],
    masks: &[u32],
    degree: i64,
) -> CliffordElement {
    let mut coeffs = BTreeMap::new();
    for (i, c) in row.iter().enumerate() {
        if !field.is_zero(c) {
            coeffs.insert(masks[i], c.clone());
        }
    }
    CliffordElement { degree, coeffs }
}

/// The top wedge `det W` as the product of the echelon basis vectors.
pub fn det_w(cl: &Clifford, w: &Subspace) -> Result<CliffordElement> {
    let mut acc = cl.one();
    for i in 0..w.dim() {
        let v = cl.from_vector(w.basis.row(i))?;
        acc = cl.mul(&acc, &v);
    }
    Ok(acc)
}

/// Canonical basis of `I_d` for the isotropic `W`: multiply every monomial
/// of the complementary parity into `det W` and row reduce. The dimension is
/// always `2^{n-r}`.
pub fn ideal_basis(cl: &Clifford, w: &Subspace, d: i64) -> Result<IdealBasis> {
    if w.ambient != cl.gens() {
        return Err(Error::DimensionMismatch);
    }
    if !isotropic_check(&cl.form, w, IsotropyMode::Plain)? {
        return Err(Error::NotIsotropic);
    }
    let f = &cl.form.field;
    let gens = cl.gens();
    let r = w.dim() as i64;
    let gen_parity = ((d - r).rem_euclid(2)) as u32;
    let target_parity = (d.rem_euclid(2)) as u32;
    let masks = parity_masks(gens, target_parity);
    let detw = det_w(cl, w)?;

    let mut rows = Vec::new();
    for s in parity_masks(gens, gen_parity) {
        let prod = cl.mul(&cl.monomial(s), &detw);
        if !prod.is_zero() {
            rows.push(element_coords(f, &prod, &masks));
        }
    }
    let coords = if rows.is_empty() {
        Matrix::empty(masks.len())
    } else {
        let mut m = Matrix::from_rows(rows)?;
        m.rref(f);
        m.drop_zero_rows(f)
    };
    debug_assert_eq!(coords.rows, 1usize << (gens - 1 - w.dim()));
    let elements = coords
        .rows_iter()
        .map(|row| coords_to_element(f, row, &masks, d))
        .collect();
    Ok(IdealBasis { w: w.clone(), degree: d, masks, coords, elements })
}

/// Express an element of the component in the ideal's echelon basis;
/// errors when the element is not in the span.
pub fn express_in_basis(
    field: &Field,
    basis: &IdealBasis,
    elem: &CliffordElement,
) -> Result<Vec<Scalar>> {
    let coords = element_coords(field, elem, &basis.masks);
    // reduced echelon rows: coefficients are read off at the pivot columns
    let pivots: Vec<usize> = basis
        .coords
        .rows_iter()
        .map(|r| r.iter().position(|x| !field.is_zero(x)).expect("nonzero row"))
        .collect();
    let cs: Vec<Scalar> = pivots.iter().map(|&p| coords[p].clone()).collect();
    // verify the residual vanishes
    for j in 0..coords.len() {
        let mut acc = field.zero();
        for (bi, c) in cs.iter().enumerate() {
            acc = field.add(&acc, &field.mul(c, basis.coords.at(bi, j)));
        }
        if acc != coords[j] {
            return Err(Error::InvalidInput(alloc::string::String::from(
                "element is not in the ideal component",
            )));
        }
    }
    Ok(cs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::Field;
    use crate::quadform::QuadraticForm;

    fn form(field: &Field, dim: usize, terms: &[((usize, usize), i64)]) -> QuadraticForm {
        let coeffs = terms
            .iter()
            .map(|&((i, j), c)| ((i, j), field.from_i64(c)))
            .collect();
        QuadraticForm::new(field.clone(), dim, coeffs).unwrap()
    }

    #[test]
    fn surface_ideal_bases_match_worked_example() {
        // q = x0x3 + x1x2, W = span{e2,e3}:
        // odd basis {e0e2e3, e1e2e3}, even basis {e2e3, e0e1e2e3}
        let qf = Field::rationals();
        let q = form(&qf, 4, &[((0, 3), 1), ((1, 2), 1)]);
        let cl = Clifford::new(q);
        let w = Subspace::coordinate(&qf, 4, &[2, 3]);
        let odd = ideal_basis(&cl, &w, 1).unwrap();
        let even = ideal_basis(&cl, &w, 0).unwrap();
        assert_eq!(odd.dim(), 2);
        assert_eq!(even.dim(), 2);
        let mask = |bits: &[usize]| bits.iter().fold(0u32, |acc, &b| acc | (1 << b));
        assert_eq!(
            odd.elements[0].coeffs.keys().copied().collect::<Vec<_>>(),
            vec![mask(&[0, 2, 3])]
        );
        assert_eq!(
            odd.elements[1].coeffs.keys().copied().collect::<Vec<_>>(),
            vec![mask(&[1, 2, 3])]
        );
        assert_eq!(
            even.elements[0].coeffs.keys().copied().collect::<Vec<_>>(),
            vec![mask(&[2, 3])]
        );
        assert_eq!(
            even.elements[1].coeffs.keys().copied().collect::<Vec<_>>(),
            vec![mask(&[0, 1, 2, 3])]
        );
    }

    #[test]
    fn zero_subspace_gives_whole_parity_component() {
        let qf = Field::prime(5).unwrap();
        let q = form(&qf, 3, &[((0, 1), 1), ((2, 2), 1)]);
        let cl = Clifford::new(q);
        let w = Subspace::zero(&qf, 3);
        let even = ideal_basis(&cl, &w, 0).unwrap();
        assert_eq!(even.dim(), 4); // 2^n = 2^2
        let ident = Matrix::identity(&qf, 4);
        assert_eq!(even.coords, ident);
    }

    #[test]
    fn rank_one_subspace_dimension() {
        // q = x0x1 + x2x3, W = span{e2}: dim I_d = 2^{3-1} = 4 for every d
        let qf = Field::prime(3).unwrap();
        let q = form(&qf, 4, &[((0, 1), 1), ((2, 3), 1)]);
        let cl = Clifford::new(q);
        let w = Subspace::coordinate(&qf, 4, &[2]);
        for d in [0i64, 1, 2, 3] {
            assert_eq!(ideal_basis(&cl, &w, d).unwrap().dim(), 4);
        }
    }

    #[test]
    fn non_isotropic_rejected() {
        let qf = Field::rationals();
        let q = form(&qf, 2, &[((0, 1), 1)]);
        let cl = Clifford::new(q);
        let w = Subspace::from_spanning(&qf, 2, vec![vec![qf.one(), qf.one()]]).unwrap();
        assert_eq!(ideal_basis(&cl, &w, 0).unwrap_err(), Error::NotIsotropic);
    }
}
