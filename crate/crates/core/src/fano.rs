//! Finite-field enumeration of quadrics: rational points, isotropic
//! subspaces, ruling components, corank-2 structure, cover splitting under
//! Frobenius, singular-locus dimension estimates, and line classes on
//! reducible quadric surfaces.

use alloc::vec;
use alloc::vec::Vec;

use crate::clifford::{mf_equiv, spinor_phi, Clifford, MfEquivOutcome};
use crate::exact::field::{Field, Scalar};
use crate::exact::matrix::{combinations, Matrix};
use crate::quadform::{
    corank, hyperbolic_reduce, isotropic_check, IsotropyMode, QuadraticForm, Subspace,
};
use crate::{Error, Result};

/// Guard on the number of candidate echelon matrices per enumeration.
pub const MAX_CANDIDATES: u128 = 10_000_000;

/// Exhaustive list of isotropic `k`-subspaces in canonical echelon form.
#[derive(Debug, Clone)]
pub struct IsotropicEnumeration {
    pub form: QuadraticForm,
    /// Linear dimension of the listed subspaces.
    pub iso_dim: usize,
    pub subspaces: Vec<Subspace>,
    /// Ruling labels per subspace, when computed.
    pub component_labels: Option<Vec<u8>>,
}

/// Number of `k`-subspaces of an `n`-space over `F_q` (saturating).
pub fn gaussian_binomial(n: usize, k: usize, q: u128) -> u128 {
    if k > n {
        return 0;
    }
    // product of (q^{n-i} - 1)/(q^{i+1} - 1), kept exact at each step
    let mut num = 1u128;
    for i in 0..k {
        let a = q.saturating_pow((n - i) as u32).saturating_sub(1);
        let b = q.pow((i + 1) as u32) - 1;
        num = num.saturating_mul(a) / b;
    }
    num
}

/// Every reduced-echelon basis matrix of a `k`-subspace, one per subspace.
fn echelon_candidates(field: &Field, ambient: usize, k: usize) -> Result<Vec<Matrix<Scalar>>> {
    let elems = field.elements()?;
    let mut out = Vec::new();
    for pivots in combinations(ambient, k) {
        // free positions: (row, col) with col > pivot[row], col not a pivot
        let mut free = Vec::new();
        for (row, &p) in pivots.iter().enumerate() {
            for col in (p + 1)..ambient {
                if !pivots.contains(&col) {
                    free.push((row, col));
                }
            }
        }
        let mut idx = vec![0usize; free.len()];
        'fill: loop {
            let mut m = Matrix::zero(field, k, ambient);
            for (row, &p) in pivots.iter().enumerate() {
                m.set(row, p, field.one());
            }
            for (t, &(row, col)) in free.iter().enumerate() {
                m.set(row, col, elems[idx[t]].clone());
            }
            out.push(m);
            let mut t = 0;
            loop {
                if t == free.len() {
                    break 'fill;
                }
                idx[t] += 1;
                if idx[t] < elems.len() {
                    break;
                }
                idx[t] = 0;
                t += 1;
            }
        }
    }
    Ok(out)
}

/// Enumerate all isotropic `k`-subspaces of `q` over its finite field.
/// `k = 1` lists the points of `Q` as lines in the vector space.
pub fn enum_isotropic(q: &QuadraticForm, k: usize) -> Result<IsotropicEnumeration> {
    let field = &q.field;
    let order = field.order().ok_or(Error::FieldNotFinite)?;
    let candidates = gaussian_binomial(q.dim, k, order);
    if candidates > MAX_CANDIDATES {
        return Err(Error::TooLarge { candidates });
    }
    let mut subspaces = Vec::new();
    for m in echelon_candidates(field, q.dim, k)? {
        let w = Subspace { ambient: q.dim, basis: m };
        if isotropic_check(q, &w, IsotropyMode::Plain)? {
            subspaces.push(w);
        }
    }
    subspaces.sort_by(|a, b| a.basis.to_rows().cmp(&b.basis.to_rows()));
    Ok(IsotropicEnumeration { form: q.clone(), iso_dim: k, subspaces, component_labels: None })
}

fn intersection_dim(field: &Field, a: &Subspace, b: &Subspace) -> Result<usize> {
    let stacked = a.basis.vstack(&b.basis)?;
    Ok(a.dim() + b.dim() - stacked.rank(field))
}

/// Partition maximal isotropics on a smooth even-dimensional quadric into
/// the two rulings: `U` and `V` share a ruling exactly when
/// `dim(U meet V) = l + 1 (mod 2)`. The relation is verified to be an
/// equivalence with two classes; the lexicographically first subspace gets
/// label 0.
pub fn component_classes(e: &IsotropicEnumeration) -> Result<IsotropicEnumeration> {
    let rep = corank(&e.form);
    let dim = e.form.dim;
    if rep.corank_q != 0 || dim % 2 != 0 || dim < 2 || e.iso_dim != dim / 2 {
        return Err(Error::NotSmoothEvenMaximal);
    }
    if e.subspaces.is_empty() {
        return Err(Error::NotSmoothEvenMaximal);
    }
    let field = &e.form.field;
    let parity = (dim / 2) % 2; // l + 1 where dim = 2l + 2
    let same = |a: &Subspace, b: &Subspace| -> Result<bool> {
        Ok(intersection_dim(field, a, b)? % 2 == parity)
    };
    let first = &e.subspaces[0];
    let mut labels = Vec::with_capacity(e.subspaces.len());
    for w in &e.subspaces {
        labels.push(if same(first, w)? { 0u8 } else { 1u8 });
    }
    // the relation must be an equivalence with exactly these classes
    for (i, a) in e.subspaces.iter().enumerate() {
        for (j, b) in e.subspaces.iter().enumerate() {
            if same(a, b)? != (labels[i] == labels[j]) {
                return Err(Error::InvalidInput(alloc::string::String::from(
                    "ruling parity relation is not an equivalence",
                )));
            }
        }
    }
    if !labels.contains(&1) {
        return Err(Error::InvalidInput(alloc::string::String::from(
            "expected two ruling classes",
        )));
    }
    Ok(IsotropicEnumeration {
        form: e.form.clone(),
        iso_dim: e.iso_dim,
        subspaces: e.subspaces.clone(),
        component_labels: Some(labels),
    })
}

/// On a corank-2 quadric of dimension `2l + 2`, every maximal isotropic
/// `(l+2)`-subspace contains the radical; check it by enumeration.
pub fn corank2_radical_check(q: &QuadraticForm) -> Result<bool> {
    let rep = corank(q);
    if rep.corank_q != 2 || q.dim % 2 != 0 {
        return Err(Error::WrongCorank);
    }
    let k = q.dim / 2 + 1;
    let maximals = enum_isotropic(q, k)?;
    for w in &maximals.subspaces {
        if !w.contains(&q.field, &rep.radical)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The induced smooth form on the quotient by the radical, as the
/// restriction to the complementary coordinates.
pub fn quotient_by_radical(q: &QuadraticForm) -> Result<(QuadraticForm, Vec<usize>)> {
    let rep = corank(q);
    if rep.q_on_radical_nonzero {
        return Err(Error::WrongCorank);
    }
    let pivots = rep.radical.pivot_coords(&q.field);
    let kept: Vec<usize> = (0..q.dim).filter(|i| !pivots.contains(i)).collect();
    Ok((q.restrict_coords(&pivots), kept))
}

/// Splitting behaviour of the double cover attached to a corank-2 quadric
/// over `F_q`.
#[derive(Debug, Clone)]
pub struct CoverSplitReport {
    pub split: bool,
    /// Maximal isotropics of `q` rational over the base field.
    pub base_maximal_count: usize,
    /// Maximal isotropics of the smooth quotient over `F_{q^2}` per class.
    pub class_sizes: [usize; 2],
    /// A base-rational member of each ruling class, when one exists.
    pub rational_members: [Option<Subspace>; 2],
}

/// Decide whether the two rulings of the quotient-by-radical smooth form
/// are individually defined over the base field: enumerate maximal
/// isotropics over `F_{q^2}`, split them into classes, and look for members
/// whose canonical echelon form has all entries in the prime field.
pub fn cover_split(q: &QuadraticForm) -> Result<CoverSplitReport> {
    let rep = corank(q);
    if rep.corank_q != 2 || q.dim % 2 != 0 {
        return Err(Error::WrongCorank);
    }
    let p = match &q.field {
        Field::Prime(p) => *p,
        _ => {
            return Err(Error::InvalidInput(alloc::string::String::from(
                "cover splitting needs a prime base field",
            )))
        }
    };
    let base_max = enum_isotropic(q, q.dim / 2 + 1)?;
    let (qbar, _) = quotient_by_radical(q)?;
    let ext = Field::extension_of_degree(p, 2)?;
    let qbar_ext = qbar.embed_into(&ext)?;
    let maximals = enum_isotropic(&qbar_ext, qbar_ext.dim / 2)?;
    let labeled = component_classes(&maximals)?;
    let labels = labeled.component_labels.as_ref().expect("labeled");
    let mut class_sizes = [0usize; 2];
    let mut rational_members: [Option<Subspace>; 2] = [None, None];
    for (w, &lab) in labeled.subspaces.iter().zip(labels) {
        class_sizes[lab as usize] += 1;
        let rational = w
            .basis
            .rows_iter()
            .all(|row| row.iter().all(|s| ext.in_prime_subfield(s)));
        if rational && rational_members[lab as usize].is_none() {
            rational_members[lab as usize] = Some(w.clone());
        }
    }
    let split = rational_members.iter().all(Option::is_some);
    Ok(CoverSplitReport {
        split,
        base_maximal_count: base_max.subspaces.len(),
        class_sizes,
        rational_members,
    })
}

/// Point counts of `Sing Q = Q meet P(rad)` over `F_q`, `F_{q^2}`,
/// `F_{q^3}`, with the growth-rate dimension estimate.
#[derive(Debug, Clone)]
pub struct SingDimReport {
    pub counts: [u64; 3],
    pub dim: i64,
    pub corank_q: usize,
    /// Whether the estimate matches `corank_Q - 1`.
    pub consistent: bool,
}

/// Estimate the dimension of the singular locus by counting its points over
/// three field extensions: count at least `q^{e d}` over `F_{q^e}` declares
/// dimension at least `d`. The result must equal `corank_Q - 1`.
pub fn sing_dim(q: &QuadraticForm) -> Result<SingDimReport> {
    if q.dim > 6 {
        return Err(Error::TooLarge { candidates: 1u128 << q.dim });
    }
    let p = match &q.field {
        Field::Prime(p) => *p,
        _ => {
            return Err(Error::InvalidInput(alloc::string::String::from(
                "singular-locus counting needs a prime base field",
            )))
        }
    };
    let rep = corank(q);
    let rad_dim = rep.radical.dim();
    let mut counts = [0u64; 3];
    let mut dims = [0i64; 3];
    for e in 1..=3usize {
        let ext = if e == 1 { q.field.clone() } else { Field::extension_of_degree(p, e)? };
        let q_ext = q.embed_into(&ext)?;
        // basis of the radical embedded into the extension
        let rad_rows: Vec<Vec<Scalar>> = rep
            .radical
            .basis
            .rows_iter()
            .map(|r| r.iter().map(|s| ext.embed(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let mut count = 0u64;
        if rad_dim > 0 {
            for coeffs in crate::clifford::projective_points(&ext, rad_dim)? {
                let mut v = vec![ext.zero(); q.dim];
                for (c, row) in coeffs.iter().zip(&rad_rows) {
                    for (k, entry) in row.iter().enumerate() {
                        v[k] = ext.add(&v[k], &ext.mul(c, entry));
                    }
                }
                if ext.is_zero(&q_ext.eval(&v)?) {
                    count += 1;
                }
            }
        }
        counts[e - 1] = count;
        let qe = (p as u128).pow(e as u32);
        let mut d = -1i64;
        let mut bound = 1u128;
        while count as u128 >= bound {
            d += 1;
            bound = bound.saturating_mul(qe);
        }
        dims[e - 1] = d;
    }
    let dim = dims[2];
    let consistent =
        dims[0] == dims[1] && dims[1] == dims[2] && dim == rep.corank_q as i64 - 1;
    Ok(SingDimReport { counts, dim, corank_q: rep.corank_q, consistent })
}

/// Label of a line on a reducible quadric surface: which of the two
/// irreducible components carries it, and where it meets the singular line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineClassLabel {
    pub component: usize,
    pub meets_radical: Subspace,
}

/// Classify an isotropic 2-subspace (other than the radical) of a corank-2
/// quadric surface by its component and its intersection point with the
/// singular line.
pub fn line_class(q: &QuadraticForm, w: &Subspace) -> Result<LineClassLabel> {
    let rep = corank(q);
    if q.dim != 4 || rep.corank_q != 2 {
        return Err(Error::WrongShape);
    }
    if w.dim() != 2
        || w == &rep.radical
        || !isotropic_check(q, w, IsotropyMode::Plain)?
    {
        return Err(Error::WrongShape);
    }
    let components = enum_isotropic(q, 3)?;
    if components.subspaces.len() != 2 {
        return Err(Error::WrongShape);
    }
    let component = components
        .subspaces
        .iter()
        .position(|c| c.contains(&q.field, w).unwrap_or(false))
        .ok_or(Error::WrongShape)?;
    let meets_radical = w.intersect(&q.field, &rep.radical)?;
    if meets_radical.dim() != 1 {
        return Err(Error::WrongShape);
    }
    Ok(LineClassLabel { component, meets_radical })
}

/// Line labels plus the spinor agreement: the two spinor factorizations are
/// equivalent exactly when the labels coincide.
#[derive(Debug, Clone)]
pub struct LineAgreementReport {
    pub label_a: LineClassLabel,
    pub label_b: LineClassLabel,
    pub labels_equal: bool,
    pub equivalence: MfEquivOutcome,
    pub agree: bool,
}

pub fn line_spinor_agreement(
    q: &QuadraticForm,
    wa: &Subspace,
    wb: &Subspace,
    degree: i64,
    seed: u64,
) -> Result<LineAgreementReport> {
    let label_a = line_class(q, wa)?;
    let label_b = line_class(q, wb)?;
    let labels_equal = label_a == label_b;
    let cl = Clifford::new(q.clone());
    let fa = spinor_phi(&cl, wa, degree)?;
    let fb = spinor_phi(&cl, wb, degree)?;
    let equivalence = mf_equiv(&fa.pair(&cl)?, &fb.pair(&cl)?, seed)?;
    let agree = labels_equal == equivalence.pair.is_some();
    Ok(LineAgreementReport { label_a, label_b, labels_equal, equivalence, agree })
}

/// Witness of the correspondence between isotropic `k`-subspaces of the
/// hyperbolic reduction along `F` and isotropic `(k + rank F)`-subspaces of
/// `q` containing `F`.
#[derive(Debug, Clone)]
pub struct FanoCorrespondence {
    pub downstairs: usize,
    pub upstairs_containing: usize,
    /// The explicit lift of each downstairs subspace hits exactly the
    /// upstairs set, bijectively.
    pub matched: bool,
}

pub fn fano_correspondence(
    q: &QuadraticForm,
    f_sub: &Subspace,
    k: usize,
) -> Result<FanoCorrespondence> {
    let field = &q.field;
    let reduction = hyperbolic_reduce(q, f_sub)?;
    let down = enum_isotropic(&reduction.reduced, k)?;
    let up = enum_isotropic(q, k + f_sub.dim())?;
    let upstairs: Vec<&Subspace> = up
        .subspaces
        .iter()
        .filter(|w| w.contains(field, f_sub).unwrap_or(false))
        .collect();

    // lift: reduced coordinates ride on the complement rows of the reduction
    let r = f_sub.dim();
    let comp_rows: Vec<&[Scalar]> =
        (2 * r..2 * r + reduction.reduced.dim).map(|i| reduction.basis_rows.row(i)).collect();
    let mut lifted: Vec<Subspace> = Vec::with_capacity(down.subspaces.len());
    for g in &down.subspaces {
        let mut rows: Vec<Vec<Scalar>> = f_sub.basis.to_rows();
        for gi in g.basis.rows_iter() {
            let mut v = vec![field.zero(); q.dim];
            for (c, row) in gi.iter().zip(&comp_rows) {
                for (kk, entry) in row.iter().enumerate() {
                    v[kk] = field.add(&v[kk], &field.mul(c, entry));
                }
            }
            rows.push(v);
        }
        lifted.push(Subspace::from_spanning(field, q.dim, rows)?);
    }
    lifted.sort_by(|a, b| a.basis.to_rows().cmp(&b.basis.to_rows()));
    lifted.dedup();
    let mut upstairs_sorted: Vec<Subspace> = upstairs.iter().map(|w| (*w).clone()).collect();
    upstairs_sorted.sort_by(|a, b| a.basis.to_rows().cmp(&b.basis.to_rows()));
    let matched = lifted == upstairs_sorted && lifted.len() == down.subspaces.len();
    Ok(FanoCorrespondence {
        downstairs: down.subspaces.len(),
        upstairs_containing: upstairs_sorted.len(),
        matched,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(field: &Field, dim: usize, terms: &[((usize, usize), i64)]) -> QuadraticForm {
        let coeffs = terms
            .iter()
            .map(|&((i, j), c)| ((i, j), field.from_i64(c)))
            .collect();
        QuadraticForm::new(field.clone(), dim, coeffs).unwrap()
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(4, 1, 3), 40);
        assert_eq!(gaussian_binomial(4, 2, 3), 130);
        assert_eq!(gaussian_binomial(6, 3, 3), 33880);
        assert_eq!(gaussian_binomial(6, 3, 2), 1395);
    }

    #[test]
    fn smooth_surface_points_and_lines_over_f3() {
        let f3 = Field::prime(3).unwrap();
        let q = form(&f3, 4, &[((0, 1), 1), ((2, 3), 1)]);
        let points = enum_isotropic(&q, 1).unwrap();
        assert_eq!(points.subspaces.len(), 16); // (q+1)^2
        let lines = enum_isotropic(&q, 2).unwrap();
        assert_eq!(lines.subspaces.len(), 8); // 2(q+1)
    }

    #[test]
    fn corank2_maximal_isotropics_in_dim_4() {
        let f2 = Field::prime(2).unwrap();
        let q = form(&f2, 4, &[((0, 1), 1)]);
        let planes = enum_isotropic(&q, 3).unwrap();
        assert_eq!(planes.subspaces.len(), 2);
        assert!(corank2_radical_check(&q).unwrap());
        let f3 = Field::prime(3).unwrap();
        let q = form(&f3, 4, &[((0, 1), 1)]);
        assert!(corank2_radical_check(&q).unwrap());
    }

    #[test]
    fn corank2_check_in_dim_6() {
        let f2 = Field::prime(2).unwrap();
        let q = form(&f2, 6, &[((0, 1), 1), ((2, 3), 1)]);
        assert!(corank2_radical_check(&q).unwrap());
    }

    #[test]
    fn smooth_input_is_wrong_corank() {
        let f3 = Field::prime(3).unwrap();
        let q = form(&f3, 4, &[((0, 1), 1), ((2, 3), 1)]);
        assert_eq!(corank2_radical_check(&q).unwrap_err(), Error::WrongCorank);
    }

    #[test]
    fn ruling_classes_on_smooth_surface() {
        let f3 = Field::prime(3).unwrap();
        let q = form(&f3, 4, &[((0, 1), 1), ((2, 3), 1)]);
        let lines = enum_isotropic(&q, 2).unwrap();
        let labeled = component_classes(&lines).unwrap();
        let labels = labeled.component_labels.as_ref().unwrap();
        assert_eq!(labels.iter().filter(|&&l| l == 0).count(), 4);
        assert_eq!(labels.iter().filter(|&&l| l == 1).count(), 4);
        // same class: disjoint; across classes: meet in a point
        for (i, a) in labeled.subspaces.iter().enumerate() {
            for (j, b) in labeled.subspaces.iter().enumerate() {
                if i == j {
                    continue;
                }
                let d = intersection_dim(&f3, a, b).unwrap();
                if labels[i] == labels[j] {
                    assert_eq!(d, 0);
                } else {
                    assert_eq!(d, 1);
                }
            }
        }
    }

    #[test]
    fn ruling_classes_in_dim_6_over_f2() {
        let f2 = Field::prime(2).unwrap();
        let q = form(&f2, 6, &[((0, 1), 1), ((2, 3), 1), ((4, 5), 1)]);
        let planes = enum_isotropic(&q, 3).unwrap();
        assert_eq!(planes.subspaces.len(), 30);
        let labeled = component_classes(&planes).unwrap();
        let labels = labeled.component_labels.as_ref().unwrap();
        assert_eq!(labels.iter().filter(|&&l| l == 0).count(), 15);
        assert_eq!(labels.iter().filter(|&&l| l == 1).count(), 15);
    }

    #[test]
    fn cover_split_examples() {
        // x2^2 + x3^2 in dim 4: nonsplit over F_3, split over F_5
        let f3 = Field::prime(3).unwrap();
        let q = form(&f3, 4, &[((2, 2), 1), ((3, 3), 1)]);
        let rep = cover_split(&q).unwrap();
        assert!(!rep.split);
        assert_eq!(rep.base_maximal_count, 0);
        assert_eq!(rep.class_sizes, [1, 1]);

        let f5 = Field::prime(5).unwrap();
        let q = form(&f5, 4, &[((2, 2), 1), ((3, 3), 1)]);
        let rep = cover_split(&q).unwrap();
        assert!(rep.split);
        assert_eq!(rep.base_maximal_count, 2);

        // x0x1 in dim 4 is split over any field
        for p in [2u64, 3, 5, 7] {
            let f = Field::prime(p).unwrap();
            let q = form(&f, 4, &[((0, 1), 1)]);
            assert!(cover_split(&q).unwrap().split, "p = {p}");
        }
    }

    #[test]
    fn sing_dim_examples() {
        // smooth: empty singular locus
        let f3 = Field::prime(3).unwrap();
        let q = form(&f3, 4, &[((0, 1), 1), ((2, 3), 1)]);
        let rep = sing_dim(&q).unwrap();
        assert_eq!(rep.dim, -1);
        assert!(rep.consistent);

        // char 2 with q nonzero on the radical: corank_Q = 0, Sing empty
        let f2 = Field::prime(2).unwrap();
        let q = form(&f2, 3, &[((0, 0), 1), ((1, 2), 1)]);
        let rep = sing_dim(&q).unwrap();
        assert_eq!(rep.counts, [0, 0, 0]);
        assert_eq!(rep.dim, -1);
        assert!(rep.consistent);

        // x0x1 in dim 4: the singular line
        let q = form(&f2, 4, &[((0, 1), 1)]);
        let rep = sing_dim(&q).unwrap();
        assert_eq!(rep.dim, 1);
        assert_eq!(rep.corank_q, 2);
        assert!(rep.consistent);
    }

    #[test]
    fn line_classes_on_reducible_surface() {
        let f3 = Field::prime(3).unwrap();
        let q = form(&f3, 4, &[((0, 1), 1)]);
        // W = span{e1,e2}, W' = span{e1, e2+e3}: same component, different
        // intersection points; labels differ and spinors disagree
        let w = Subspace::coordinate(&f3, 4, &[1, 2]);
        let wp = Subspace::from_spanning(
            &f3,
            4,
            vec![
                vec![f3.zero(), f3.one(), f3.zero(), f3.zero()],
                vec![f3.zero(), f3.zero(), f3.one(), f3.one()],
            ],
        )
        .unwrap();
        let rep = line_spinor_agreement(&q, &w, &wp, 0, 0).unwrap();
        assert_eq!(rep.label_a.component, rep.label_b.component);
        assert_ne!(rep.label_a.meets_radical, rep.label_b.meets_radical);
        assert!(!rep.labels_equal);
        assert!(rep.equivalence.pair.is_none());
        assert!(rep.agree);

        // W' = span{e1, e2 + l e1}: same line data -> equivalent spinors
        for lambda in 0..3i64 {
            let wp = Subspace::from_spanning(
                &f3,
                4,
                vec![
                    vec![f3.zero(), f3.one(), f3.zero(), f3.zero()],
                    vec![f3.zero(), f3.from_i64(lambda), f3.one(), f3.zero()],
                ],
            )
            .unwrap();
            let rep = line_spinor_agreement(&q, &w, &wp, 0, 0).unwrap();
            assert!(rep.labels_equal);
            assert!(rep.equivalence.pair.is_some());
            assert!(rep.agree);
        }

        // opposite components never agree
        let w_in_x0 = Subspace::coordinate(&f3, 4, &[1, 2]);
        let w_in_x1 = Subspace::coordinate(&f3, 4, &[0, 2]);
        let rep = line_spinor_agreement(&q, &w_in_x0, &w_in_x1, 0, 0).unwrap();
        assert!(!rep.labels_equal);
        assert!(rep.equivalence.pair.is_none());
        assert!(rep.agree);
    }

    #[test]
    fn radical_line_is_rejected() {
        let f3 = Field::prime(3).unwrap();
        let q = form(&f3, 4, &[((0, 1), 1)]);
        let rad = corank(&q).radical;
        assert_eq!(line_class(&q, &rad).unwrap_err(), Error::WrongShape);
    }

    #[test]
    fn fano_correspondence_on_surface() {
        // q = x0x1 + x2x3 over F_3, F = span{e0}: lines through the point
        // correspond to points of the reduced conic
        let f3 = Field::prime(3).unwrap();
        let q = form(&f3, 4, &[((0, 1), 1), ((2, 3), 1)]);
        let f_sub = Subspace::coordinate(&f3, 4, &[0]);
        let c = fano_correspondence(&q, &f_sub, 1).unwrap();
        assert_eq!(c.downstairs, c.upstairs_containing);
        assert!(c.matched);
    }
}
