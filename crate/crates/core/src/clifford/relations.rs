//! Ideal relations along hyperplane sections and cones.

use alloc::vec::Vec;

use super::algebra::Clifford;
use super::ideal::{element_coords, ideal_basis, parity_masks};
use crate::exact::field::Scalar;
use crate::exact::matrix::Matrix;
use crate::quadform::Subspace;
use crate::{Error, Result};

/// Verification record for the hyperplane ideal sequence
/// `0 -> I'_d -> I_d -> E'' ox I'_{d-1} -> 0`.
#[derive(Debug, Clone)]
pub struct HyperplaneIdealReport {
    pub dim_big: usize,
    pub dim_sub: usize,
    pub dim_sub_prev: usize,
    pub contained: bool,
    pub dims_add_up: bool,
    pub complement_spans: bool,
}

impl HyperplaneIdealReport {
    pub fn holds(&self) -> bool {
        self.contained && self.dims_add_up && self.complement_spans
    }
}

/// Check the ideal sequence for a coordinate hyperplane `E'` (the span of
/// all coordinates except one) and an isotropic `W` inside it: `I'_d` sits
/// inside `I_d`, dimensions add as `dim I_d = dim I'_d + dim I'_{d-1}`, and
/// left multiplication by the missing coordinate vector carries `I'_{d-1}`
/// onto a complement of `I'_d`.
pub fn hyperplane_ideal_check(
    cl: &Clifford,
    eprime: &Subspace,
    w: &Subspace,
    d: i64,
) -> Result<HyperplaneIdealReport> {
    let f = &cl.form.field;
    let gens = cl.gens();
    if eprime.ambient != gens || eprime.dim() != gens - 1 || !eprime.is_coordinate(f) {
        return Err(Error::NotCoordinate);
    }
    if !eprime.contains(f, w)? {
        return Err(Error::NotContained);
    }
    let kept = eprime.pivot_coords(f);
    let missing = (0..gens)
        .find(|i| !kept.contains(i))
        .expect("one coordinate is missing");

    // the subalgebra on the kept coordinates
    let sub_form = cl.form.restrict_coords(&[missing]);
    let sub_cl = Clifford::new(sub_form);
    let w_small = project_subspace(f, w, &kept)?;
    let sub_d = ideal_basis(&sub_cl, &w_small, d)?;
    let sub_prev = ideal_basis(&sub_cl, &w_small, d - 1)?;
    let big = ideal_basis(cl, w, d)?;

    // embed small-algebra coordinates into the big parity component
    let masks_big = parity_masks(gens, (d.rem_euclid(2)) as u32);
    let embed = |basis: &super::ideal::IdealBasis| -> Vec<Vec<Scalar>> {
        basis
            .elements
            .iter()
            .map(|e| {
                let lifted = lift_masks(e, &kept);
                element_coords(f, &lifted, &masks_big)
            })
            .collect()
    };
    let sub_rows = embed(&sub_d);

    // containment of I'_d in I_d
    let mut contained = true;
    for row in &sub_rows {
        let stacked = big.coords.vstack(&Matrix::from_rows(alloc::vec![row.clone()])?)?;
        if stacked.rank(f) != big.dim() {
            contained = false;
        }
    }

    let dims_add_up = big.dim() == sub_d.dim() + sub_prev.dim();

    // e_missing . I'_{d-1} complements I'_d inside I_d
    let mut comp_rows = Vec::new();
    for e in &sub_prev.elements {
        let lifted = lift_masks(e, &kept);
        let moved = cl.mul(&cl.generator(missing), &lifted);
        comp_rows.push(element_coords(f, &moved, &masks_big));
    }
    let mut all_rows = sub_rows;
    all_rows.extend(comp_rows);
    let complement_spans = if all_rows.is_empty() {
        big.dim() == 0
    } else {
        let span = Matrix::from_rows(all_rows)?;
        span.rank(f) == sub_d.dim() + sub_prev.dim() && {
            let stacked = big.coords.vstack(&span)?;
            stacked.rank(f) == big.dim()
        }
    };

    Ok(HyperplaneIdealReport {
        dim_big: big.dim(),
        dim_sub: sub_d.dim(),
        dim_sub_prev: sub_prev.dim(),
        contained,
        dims_add_up,
        complement_spans,
    })
}

/// Verification record for the cone relation `I-bar_d = I_{d+c}` after
/// dividing out the vertex wedge.
#[derive(Debug, Clone)]
pub struct ConeIdealReport {
    pub dim_quotient: usize,
    pub dim_big: usize,
    pub dims_match: bool,
    pub bijection: bool,
}

impl ConeIdealReport {
    pub fn holds(&self) -> bool {
        self.dims_match && self.bijection
    }
}

/// For a coordinate-spanned `K` inside the radical and an isotropic
/// `W` containing `K`, compare the degree-`d` ideal of the quotient form on
/// `E/K` with the degree-`d+c` ideal upstairs. Every monomial of `I_{d+c}`
/// contains the vertex wedge; dividing it out on the right realizes the
/// bijection `I_{d+c} -> I-bar_d` induced by `a . det W -> a-bar . det W-bar`.
pub fn cone_ideal_check(
    cl: &Clifford,
    k: &Subspace,
    w: &Subspace,
    d: i64,
) -> Result<ConeIdealReport> {
    let f = &cl.form.field;
    let gens = cl.gens();
    if k.ambient != gens || w.ambient != gens {
        return Err(Error::DimensionMismatch);
    }
    if !k.is_coordinate(f) {
        return Err(Error::NotCoordinate);
    }
    let radical = crate::quadform::corank(&cl.form).radical;
    if !radical.contains(f, k)? {
        return Err(Error::NotInRadical);
    }
    if !w.contains(f, k)? {
        return Err(Error::NotContaining);
    }
    let c = k.dim() as i64;
    let k_coords = k.pivot_coords(f);
    let kept: Vec<usize> = (0..gens).filter(|i| !k_coords.contains(i)).collect();

    // quotient data: form and W/K on the kept coordinates
    let bar_form = cl.form.restrict_coords(&k_coords);
    let bar_cl = Clifford::new(bar_form);
    let w_rows: Vec<Vec<Scalar>> = w
        .basis
        .rows_iter()
        .map(|r| kept.iter().map(|&i| r[i].clone()).collect())
        .collect();
    let w_bar = Subspace::from_spanning(f, kept.len(), w_rows)?;
    let bar = ideal_basis(&bar_cl, &w_bar, d)?;
    let big = ideal_basis(cl, w, d + c)?;
    let dims_match = bar.dim() == big.dim();

    // divide det K out of each upstairs basis element on the right
    let k_mask: u32 = k_coords.iter().fold(0, |acc, &i| acc | (1 << i));
    let bar_masks = parity_masks(kept.len(), (d.rem_euclid(2)) as u32);
    let mut rows = Vec::with_capacity(big.dim());
    let mut bijection = true;
    for e in &big.elements {
        let mut row = alloc::vec![f.zero(); bar_masks.len()];
        for (m, coeff) in &e.coeffs {
            if m & k_mask != k_mask {
                // theory says every monomial contains the vertex wedge
                bijection = false;
                continue;
            }
            let (small_mask, sign) = divide_mask(*m, k_mask, &kept);
            let idx = bar_masks
                .iter()
                .position(|&x| x == small_mask)
                .expect("parity preserved");
            let val = if sign > 0 { coeff.clone() } else { f.neg(coeff) };
            row[idx] = f.add(&row[idx], &val);
        }
        rows.push(row);
    }
    if bijection {
        let mut m = Matrix::from_rows(rows)?;
        m.rref(f);
        let m = m.drop_zero_rows(f);
        bijection = m.rows == big.dim() && m == bar.coords;
    }

    Ok(ConeIdealReport { dim_quotient: bar.dim(), dim_big: big.dim(), dims_match, bijection })
}

/// Factor `e_S = sign . e_{S minus K} . e_K` and reindex the remaining mask
/// to the kept coordinates. Vertex generators are central with square zero,
/// so each swap past a remaining generator contributes a sign.
fn divide_mask(mask: u32, k_mask: u32, kept: &[usize]) -> (u32, i32) {
    let rest = mask & !k_mask;
    // inversions between the two sorted blocks: pairs (a in rest, k in K)
    // with k < a; K generators keep their relative order
    let mut sign = 0u32;
    let mut k_bits = k_mask;
    while k_bits != 0 {
        let k = k_bits.trailing_zeros();
        k_bits &= k_bits - 1;
        sign += (rest >> (k + 1)).count_ones();
    }
    let small: u32 = kept
        .iter()
        .enumerate()
        .filter(|(_, &old)| rest & (1 << old) != 0)
        .fold(0, |acc, (new, _)| acc | (1 << new));
    (small, if sign % 2 == 0 { 1 } else { -1 })
}

fn project_subspace(
    f: &crate::exact::field::Field,
    w: &Subspace,
    kept: &[usize],
) -> Result<Subspace> {
    let rows: Vec<Vec<Scalar>> = w
        .basis
        .rows_iter()
        .map(|r| kept.iter().map(|&i| r[i].clone()).collect())
        .collect();
    Subspace::from_spanning(f, kept.len(), rows)
}

/// Lift an element of the subalgebra on the kept coordinates into the big
/// algebra (monomial-wise reindexing).
fn lift_masks(
    e: &super::algebra::CliffordElement,
    kept: &[usize],
) -> super::algebra::CliffordElement {
    let mut coeffs = alloc::collections::BTreeMap::new();
    for (m, c) in &e.coeffs {
        let mut big = 0u32;
        for (small, &old) in kept.iter().enumerate() {
            if m & (1 << small) != 0 {
                big |= 1 << old;
            }
        }
        coeffs.insert(big, c.clone());
    }
    super::algebra::CliffordElement { degree: e.degree, coeffs }
}
