//! Quadric bundles over projective space in coordinates: fibers and coranks,
//! bilinear degeneracy ideals, hyperbolic reduction of bundles, universal and
//! specialized discriminant algebras, and the binary-quadric coordinate
//! algebra.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::exact::field::{Field, Scalar};
use crate::exact::matrix::Matrix;
use crate::exact::poly::{Coeff, CoeffRing, MultiPoly};
use crate::quadform::{corank, CorankReport, QuadraticForm};
use crate::{Error, Result};

/// A quadric bundle `Q subset P(E) -> P^m` with `E = O(a_0) + ... + O(a_n)`
/// and values in `O(l)`: the coefficient of `x_i x_j` is a homogeneous
/// polynomial of degree `l - a_i - a_j` in the base variables `y_0..y_m`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadricBundleData {
    pub field: Field,
    pub base_dim: usize,
    pub fiber_rank: usize,
    pub twists: Vec<i64>,
    pub l: i64,
    entries: BTreeMap<(usize, usize), MultiPoly>,
}

/// Discriminant data of an even-rank form: `beta`, `gamma`, and the sign
/// `sigma` with `beta^2 - 4 gamma = sigma . det(b)`. The cover is
/// `z^2 - beta z + gamma = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscriminantData {
    pub beta: MultiPoly,
    pub gamma: MultiPoly,
    pub sign_sigma: i8,
}

/// Coordinate algebra of a binary quadric `g0 T0^2 - b T0 T1 + g1 T1^2`:
/// the relation `z^2 - b z + g0 g1` and the two local representatives of `z`.
#[derive(Debug, Clone, PartialEq)]
pub struct BinaryAlgebra {
    pub beta: MultiPoly,
    pub gamma: MultiPoly,
    /// Numerator of `z` on `D+(T1)` (denominator `T1`): `g0 * T0`.
    pub rep_on_t1: MultiPoly,
    /// Numerator of `z` on `D+(T0)` (denominator `T0`): `(b T0 - g1 T1) T1`.
    pub rep_on_t0: MultiPoly,
}

impl QuadricBundleData {
    pub fn base_vars(base_dim: usize) -> Vec<String> {
        (0..=base_dim).map(|i| alloc::format!("y{i}")).collect()
    }

    pub fn new(
        field: Field,
        base_dim: usize,
        fiber_rank: usize,
        twists: Vec<i64>,
        l: i64,
        entries: BTreeMap<(usize, usize), MultiPoly>,
    ) -> Result<Self> {
        if twists.len() != fiber_rank {
            return Err(Error::InvalidInput("one twist per fiber coordinate".to_string()));
        }
        let vars = Self::base_vars(base_dim);
        let ring = CoeffRing::Fld(field.clone());
        let mut kept = BTreeMap::new();
        for ((i, j), p) in entries {
            if i > j || j >= fiber_rank {
                return Err(Error::InvalidInput(alloc::format!(
                    "entry index ({i},{j}) out of range"
                )));
            }
            if p.is_zero() {
                continue;
            }
            if p.vars != vars || p.ring != ring {
                return Err(Error::RingMismatch);
            }
            let want = l - twists[i] - twists[j];
            if want < 0 || !p.is_homogeneous_of(want as u32) {
                return Err(Error::InvalidInput(alloc::format!(
                    "entry ({i},{j}) must be homogeneous of degree {want}"
                )));
            }
            kept.insert((i, j), p);
        }
        Ok(QuadricBundleData { field, base_dim, fiber_rank, twists, l, entries: kept })
    }

    pub fn entry(&self, i: usize, j: usize) -> MultiPoly {
        debug_assert!(i <= j);
        self.entries.get(&(i, j)).cloned().unwrap_or_else(|| {
            MultiPoly::zero(CoeffRing::Fld(self.field.clone()), Self::base_vars(self.base_dim))
        })
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &MultiPoly)> {
        self.entries.iter()
    }

    /// Polar matrix with polynomial entries: `2 a_ii` on the diagonal.
    pub fn polar_matrix(&self) -> Matrix<MultiPoly> {
        let two = Coeff::Fld(self.field.from_i64(2));
        Matrix::from_fn(self.fiber_rank, self.fiber_rank, |i, j| {
            if i == j {
                self.entry(i, i).scale(&two)
            } else {
                let (a, b) = if i < j { (i, j) } else { (j, i) };
                self.entry(a, b)
            }
        })
    }
}

/// Substitute a base point into every entry and report the fiber form with
/// its corank. The point may live in an extension of the bundle's field.
pub fn fiber_and_corank(
    bundle: &QuadricBundleData,
    point_field: &Field,
    point: &[Scalar],
) -> Result<(QuadraticForm, CorankReport)> {
    if point.len() != bundle.base_dim + 1 {
        return Err(Error::DimensionMismatch);
    }
    if point.iter().all(|c| point_field.is_zero(c)) {
        return Err(Error::ZeroPoint);
    }
    let mut coeffs = BTreeMap::new();
    for (&(i, j), p) in &bundle.entries {
        let v = p.eval(point_field, point)?;
        if !point_field.is_zero(&v) {
            coeffs.insert((i, j), v);
        }
    }
    if coeffs.is_empty() {
        return Err(Error::NonPrimitiveFiber);
    }
    let q = QuadraticForm::new(point_field.clone(), bundle.fiber_rank, coeffs)?;
    let report = corank(&q);
    Ok((q, report))
}

/// Generators of the bilinear corank-`c` stratum ideal: all minors of size
/// `n + 2 - c` of the polar matrix. Their common vanishing at a point is
/// exactly `corank b >= c`.
pub fn stratum_minors(bundle: &QuadricBundleData, c: usize) -> Result<Vec<MultiPoly>> {
    if c > bundle.fiber_rank {
        return Err(Error::InvalidInput("corank exceeds fiber rank".to_string()));
    }
    let size = bundle.fiber_rank + 1 - c;
    bundle.polar_matrix().minors(size)
}

/// Variable names of the universal even-rank discriminant: diagonals
/// `xi0..xi{2m-1}`, then `xi{i}{j}` for `i < j`.
pub fn universal_vars(rank: usize) -> Vec<String> {
    let mut vars: Vec<String> = (0..rank).map(|i| alloc::format!("xi{i}")).collect();
    for i in 0..rank {
        for j in (i + 1)..rank {
            vars.push(alloc::format!("xi{i}{j}"));
        }
    }
    vars
}

/// The universal discriminant of an even-rank form over the integers:
/// `beta` is the Pfaffian of the antisymmetric off-diagonal matrix with the
/// sign normalization matching the printed low-rank examples, and `gamma`
/// is `(beta^2 - sigma det b)/4` for the unique sign making the division
/// exact.
pub fn universal_disc(rank: usize) -> Result<DiscriminantData> {
    if rank % 2 != 0 || rank == 0 {
        return Err(Error::OddRank);
    }
    if rank > 8 {
        return Err(Error::InvalidInput("universal discriminant supports rank <= 8".to_string()));
    }
    let vars = universal_vars(rank);
    let ring = CoeffRing::Int;
    let var_poly = |name: &str| {
        let idx = vars.iter().position(|v| v == name).expect("declared variable");
        MultiPoly::var(ring.clone(), vars.clone(), idx)
    };
    let zero = MultiPoly::zero(ring.clone(), vars.clone());

    let anti = Matrix::from_fn(rank, rank, |i, j| {
        if i == j {
            zero.clone()
        } else if i < j {
            var_poly(&alloc::format!("xi{i}{j}"))
        } else {
            var_poly(&alloc::format!("xi{j}{i}")).neg()
        }
    });
    let mut beta = anti.pfaffian()?;
    if (rank / 2) % 2 == 1 {
        beta = beta.neg();
    }

    let polar = Matrix::from_fn(rank, rank, |i, j| {
        if i == j {
            var_poly(&alloc::format!("xi{i}")).scale(&Coeff::Int(BigInt::from(2)))
        } else {
            let (a, b) = if i < j { (i, j) } else { (j, i) };
            var_poly(&alloc::format!("xi{a}{b}"))
        }
    });
    let det = polar.determinant()?;
    let beta2 = beta.mul(&beta)?;
    for sigma in [1i8, -1] {
        let num = if sigma == 1 { beta2.sub(&det)? } else { beta2.add(&det)? };
        if let Ok(gamma) = num.exact_int_div(&BigInt::from(4)) {
            return Ok(DiscriminantData { beta, gamma, sign_sigma: sigma });
        }
    }
    Err(Error::NoValidSign)
}

/// Discriminant data of an even-rank bundle: specialize the universal
/// `beta`/`gamma` at `xi_i -> a_ii` and `xi_ij -> a_ij`.
pub fn bundle_disc(bundle: &QuadricBundleData) -> Result<DiscriminantData> {
    if bundle.fiber_rank % 2 != 0 {
        return Err(Error::OddRank);
    }
    let universal = universal_disc(bundle.fiber_rank)?;
    let mut images = Vec::new();
    for i in 0..bundle.fiber_rank {
        images.push(bundle.entry(i, i));
    }
    for i in 0..bundle.fiber_rank {
        for j in (i + 1)..bundle.fiber_rank {
            images.push(bundle.entry(i, j));
        }
    }
    let beta = universal.beta.substitute(&images)?;
    let gamma = universal.gamma.substitute(&images)?;
    Ok(DiscriminantData { beta, gamma, sign_sigma: universal.sign_sigma })
}

/// Hyperbolic reduction of a bundle along a constant coordinate isotropic
/// subbundle `F` (given by fiber coordinate indices). Each step needs a
/// pivot coordinate whose pairing with the step's coordinate is a nonzero
/// constant; certificates may pin the pivots, otherwise the lowest index is
/// taken.
pub fn bundle_reduce(
    bundle: &QuadricBundleData,
    f_coords: &[usize],
    pivot_certificates: Option<&[usize]>,
) -> Result<QuadricBundleData> {
    let field = &bundle.field;
    let n1 = bundle.fiber_rank;
    for &c in f_coords {
        if c >= n1 {
            return Err(Error::DimensionMismatch);
        }
    }
    if let Some(p) = pivot_certificates {
        if p.len() != f_coords.len() {
            return Err(Error::InvalidInput("one pivot per reduction step".to_string()));
        }
    }
    // symbolic isotropy of F in every fiber
    for (a, &i) in f_coords.iter().enumerate() {
        for &j in f_coords.iter().skip(a) {
            let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
            if !bundle.entry(lo, hi).is_zero() {
                return Err(Error::NotIsotropicEverywhere);
            }
        }
    }

    let ring = CoeffRing::Fld(field.clone());
    let vars = QuadricBundleData::base_vars(bundle.base_dim);
    let zero = MultiPoly::zero(ring.clone(), vars.clone());
    let one = MultiPoly::one(ring.clone(), vars.clone());

    // basis vectors with polynomial coordinates
    let unit = |i: usize| {
        let mut v = vec![zero.clone(); n1];
        v[i] = one.clone();
        v
    };
    let sym_eval = |v: &[MultiPoly]| -> Result<MultiPoly> {
        let mut acc = zero.clone();
        for (&(i, j), a) in &bundle.entries {
            acc = acc.add(&a.mul(&v[i].mul(&v[j])?)?)?;
        }
        Ok(acc)
    };
    let sym_polar = |v: &[MultiPoly], w: &[MultiPoly]| -> Result<MultiPoly> {
        let mut acc = zero.clone();
        for (&(i, j), a) in &bundle.entries {
            let cross = if i == j {
                v[i].mul(&w[i])?.scale(&Coeff::Fld(field.from_i64(2)))
            } else {
                v[i].mul(&w[j])?.add(&v[j].mul(&w[i])?)?
            };
            acc = acc.add(&a.mul(&cross)?)?;
        }
        Ok(acc)
    };

    let mut f_vecs: Vec<Vec<MultiPoly>> = f_coords.iter().map(|&i| unit(i)).collect();
    let mut comp: Vec<(usize, Vec<MultiPoly>)> = (0..n1)
        .filter(|i| !f_coords.contains(i))
        .map(|i| (i, unit(i)))
        .collect();

    for step in 0..f_coords.len() {
        let fv = f_vecs[step].clone();
        // pick the pivot: pairing must be a nonzero constant
        let pivot_pos = match pivot_certificates {
            Some(certs) => {
                let pos = comp
                    .iter()
                    .position(|(i, _)| *i == certs[step])
                    .ok_or(Error::NoUnitPivot)?;
                let pair = sym_polar(&fv, &comp[pos].1)?;
                if pair.is_zero() || pair.total_degree() != Some(0) {
                    return Err(Error::NoUnitPivot);
                }
                pos
            }
            None => comp
                .iter()
                .position(|(_, v)| {
                    let pair = sym_polar(&fv, v).expect("ring fixed");
                    !pair.is_zero() && pair.total_degree() == Some(0)
                })
                .ok_or(Error::NoUnitPivot)?,
        };
        let (_, mut v) = comp.remove(pivot_pos);
        let pair = sym_polar(&fv, &v)?;
        // pair is a nonzero constant; rescale to pairing one
        let Coeff::Fld(c) = pair.terms.values().next().expect("nonzero").clone() else {
            return Err(Error::RingMismatch);
        };
        let cinv = field.inv(&c).expect("nonzero constant");
        for x in v.iter_mut() {
            *x = x.scale(&Coeff::Fld(cinv.clone()));
        }
        // make the pivot isotropic: v <- v - q(v) f
        let qv = sym_eval(&v)?;
        if !qv.is_zero() {
            for (x, fe) in v.iter_mut().zip(&fv) {
                *x = x.sub(&qv.mul(fe)?)?;
            }
        }
        // keep later F vectors orthogonal to v by adding multiples of f
        for later in f_vecs.iter_mut().skip(step + 1) {
            let cpair = sym_polar(later, &v)?;
            if !cpair.is_zero() {
                for (x, fe) in later.iter_mut().zip(&fv) {
                    *x = x.sub(&cpair.mul(fe)?)?;
                }
            }
        }
        // project the complement into the orthogonal of {f, v}
        for (_, w) in comp.iter_mut() {
            let cv = sym_polar(w, &v)?;
            let cf = sym_polar(w, &fv)?;
            for k in 0..n1 {
                let mut x = w[k].clone();
                if !cv.is_zero() {
                    x = x.sub(&cv.mul(&fv[k])?)?;
                }
                if !cf.is_zero() {
                    x = x.sub(&cf.mul(&v[k])?)?;
                }
                w[k] = x;
            }
        }
    }

    let mut entries = BTreeMap::new();
    for (a, (_, va)) in comp.iter().enumerate() {
        let qa = sym_eval(va)?;
        if !qa.is_zero() {
            entries.insert((a, a), qa);
        }
        for (boff, (_, vb)) in comp.iter().enumerate().skip(a + 1) {
            let p = sym_polar(va, vb)?;
            if !p.is_zero() {
                entries.insert((a, boff), p);
            }
        }
    }
    let twists: Vec<i64> = comp.iter().map(|(i, _)| bundle.twists[*i]).collect();
    QuadricBundleData::new(
        field.clone(),
        bundle.base_dim,
        comp.len(),
        twists,
        bundle.l,
        entries,
    )
}

/// Coordinate algebra of the binary quadric `g0 T0^2 - beta T0 T1 + g1 T1^2`
/// on `P^1`: the relation `z^2 - beta z + g0 g1` with the two standard local
/// representatives of `z`.
pub fn binary_algebra(
    gamma0: &MultiPoly,
    beta: &MultiPoly,
    gamma1: &MultiPoly,
) -> Result<BinaryAlgebra> {
    if gamma0.is_zero() && beta.is_zero() && gamma1.is_zero() {
        return Err(Error::ZeroForm);
    }
    let gamma = gamma0.mul(gamma1)?;
    // local representatives in the variables extended by T0, T1
    let mut ext_vars = gamma0.vars.clone();
    ext_vars.push("T0".to_string());
    ext_vars.push("T1".to_string());
    let lift = |p: &MultiPoly| -> MultiPoly {
        let mut out = MultiPoly::zero(p.ring.clone(), ext_vars.clone());
        for (m, c) in &p.terms {
            let mut exps = m.0.clone();
            exps.push(0);
            exps.push(0);
            out.terms.insert(crate::exact::poly::Mono(exps), c.clone());
        }
        out
    };
    let t0 = MultiPoly::var(gamma0.ring.clone(), ext_vars.clone(), ext_vars.len() - 2);
    let t1 = MultiPoly::var(gamma0.ring.clone(), ext_vars.clone(), ext_vars.len() - 1);
    let rep_on_t1 = lift(gamma0).mul(&t0)?;
    let rep_on_t0 = lift(beta).mul(&t0)?.sub(&lift(gamma1).mul(&t1)?)?.mul(&t1)?;
    Ok(BinaryAlgebra { beta: beta.clone(), gamma, rep_on_t1, rep_on_t0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse::parse_poly;

    fn poly(s: &str, vars: &[&str]) -> MultiPoly {
        parse_poly(s, vars, CoeffRing::Int).unwrap()
    }

    #[test]
    fn universal_rank_2() {
        let d = universal_disc(2).unwrap();
        let vars = ["xi0", "xi1", "xi01"];
        assert_eq!(d.beta, poly("-xi01", &vars));
        assert_eq!(d.gamma, poly("xi0*xi1", &vars));
        assert_eq!(d.sign_sigma, -1);
    }

    #[test]
    fn universal_rank_4_matches_corrected_print() {
        let d = universal_disc(4).unwrap();
        let vars: Vec<String> = universal_vars(4);
        let vr: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
        let beta = poly("xi01*xi23 - xi02*xi13 + xi03*xi12", &vr);
        assert_eq!(d.beta, beta);
        assert_eq!(d.sign_sigma, 1);
        let gamma = poly(
            "-4*xi0*xi1*xi2*xi3 \
             + xi0*xi1*xi23^2 + xi0*xi2*xi13^2 + xi0*xi3*xi12^2 \
             + xi1*xi2*xi03^2 + xi1*xi3*xi02^2 + xi2*xi3*xi01^2 \
             - xi0*xi12*xi13*xi23 - xi1*xi02*xi03*xi23 \
             - xi2*xi01*xi03*xi13 - xi3*xi01*xi02*xi12 \
             + xi01*xi03*xi12*xi23",
            &vr,
        );
        assert_eq!(d.gamma, gamma);
        assert_eq!(d.gamma.num_terms(), 12);
    }

    #[test]
    fn odd_rank_rejected() {
        assert_eq!(universal_disc(3).unwrap_err(), Error::OddRank);
    }

    fn bundle_from_strs(
        field: &Field,
        base_dim: usize,
        fiber_rank: usize,
        twists: Vec<i64>,
        l: i64,
        entries: &[((usize, usize), &str)],
    ) -> QuadricBundleData {
        let vars = QuadricBundleData::base_vars(base_dim);
        let vr: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
        let ring = CoeffRing::Fld(field.clone());
        let map = entries
            .iter()
            .map(|&((i, j), s)| ((i, j), parse_poly(s, &vr, ring.clone()).unwrap()))
            .collect();
        QuadricBundleData::new(field.clone(), base_dim, fiber_rank, twists, l, map).unwrap()
    }

    #[test]
    fn degree_validation_rejects_inhomogeneous() {
        let f = Field::rationals();
        let vars = QuadricBundleData::base_vars(1);
        let vr: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
        let ring = CoeffRing::Fld(f.clone());
        let bad = parse_poly("y0 + 1", &vr, ring).unwrap();
        let err = QuadricBundleData::new(
            f,
            1,
            2,
            vec![0, 0],
            1,
            [((0usize, 1usize), bad)].into_iter().collect(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
    }

    #[test]
    fn dual_numbers_style_fiber_coranks() {
        // q = x0x1 + y0 x2^2 over P^1, twists (0,1,0), l = 1
        let f = Field::prime(5).unwrap();
        let b = bundle_from_strs(
            &f,
            1,
            3,
            vec![0, 1, 0],
            1,
            &[((0, 1), "1"), ((2, 2), "y0")],
        );
        // fiber at y0 = 0: x0x1, corank_Q = 1 in dim 3
        let (_, rep) = fiber_and_corank(&b, &f, &[f.zero(), f.one()]).unwrap();
        assert_eq!(rep.corank_q, 1);
        // fiber at (1:1): x0x1 + x2^2 nondegenerate
        let (_, rep) = fiber_and_corank(&b, &f, &[f.one(), f.one()]).unwrap();
        assert_eq!(rep.corank_q, 0);
        // zero point rejected
        assert_eq!(
            fiber_and_corank(&b, &f, &[f.zero(), f.zero()]).unwrap_err(),
            Error::ZeroPoint
        );
    }

    #[test]
    fn constant_entry_bundle_has_constant_corank() {
        let f = Field::prime(3).unwrap();
        let b = bundle_from_strs(&f, 1, 2, vec![0, 0], 0, &[((0, 1), "1")]);
        for pt in [[f.one(), f.zero()], [f.one(), f.one()], [f.zero(), f.one()]] {
            let (_, rep) = fiber_and_corank(&b, &f, &pt).unwrap();
            assert_eq!(rep.corank_q, 0);
        }
    }

    #[test]
    fn stratum_minors_shapes() {
        let f = Field::rationals();
        let b = bundle_from_strs(
            &f,
            1,
            3,
            vec![0, 1, 0],
            1,
            &[((0, 1), "1"), ((2, 2), "y0")],
        );
        // c = 0: empty list, whole base
        assert!(stratum_minors(&b, 0).unwrap().is_empty());
        // c = 1 for a rank-3 bundle: the single 3x3 determinant
        let m1 = stratum_minors(&b, 1).unwrap();
        assert_eq!(m1.len(), 1);
        // det of [[0,1,0],[1,0,0],[0,0,2y0]] = -2 y0
        let vars = QuadricBundleData::base_vars(1);
        let vr: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
        let expect = parse_poly("-2*y0", &vr, CoeffRing::Fld(f.clone())).unwrap();
        assert_eq!(m1[0], expect);
    }

    #[test]
    fn reduce_split_bundle_returns_residual_form() {
        // q = x0 x1 + y0 x2^2 with unit pairing on (0,1)
        let f = Field::prime(5).unwrap();
        let b = bundle_from_strs(
            &f,
            1,
            3,
            vec![0, 1, 0],
            1,
            &[((0, 1), "1"), ((2, 2), "y0")],
        );
        let red = bundle_reduce(&b, &[0], None).unwrap();
        assert_eq!(red.fiber_rank, 1);
        assert_eq!(red.entry(0, 0), b.entry(2, 2));
        assert_eq!(red.twists, vec![0]);
    }

    #[test]
    fn reduce_preserves_pointwise_corank() {
        // cubic-fourfold-like analog with a degree-0 pairing entry:
        // twists (0,1,0,-1), l = 1
        let f = Field::prime(7).unwrap();
        let b = bundle_from_strs(
            &f,
            2,
            4,
            vec![0, 1, 0, -1],
            1,
            &[
                ((0, 1), "2"),
                ((0, 2), "y0 + y2"),
                ((0, 3), "y0*y1"),
                ((1, 2), "3"),
                ((1, 3), "y2"),
                ((2, 2), "y1"),
                ((2, 3), "y0^2 + y1*y2"),
                ((3, 3), "y0^3 + y1^3 + y2^3"),
            ],
        );
        let red = bundle_reduce(&b, &[0], None).unwrap();
        assert_eq!(red.fiber_rank, 2);
        assert_eq!(red.base_dim, 2);
        // corank agrees fiberwise at every rational base point; a fiber that
        // vanishes identically counts as corank = its dimension
        let corank_of = |bundle: &QuadricBundleData, pt: &[Scalar]| -> usize {
            match fiber_and_corank(bundle, &f, pt) {
                Ok((_, rep)) => rep.corank_q,
                Err(Error::NonPrimitiveFiber) => bundle.fiber_rank,
                Err(e) => panic!("unexpected error {e:?}"),
            }
        };
        for pt in crate::clifford::projective_points(&f, 3).unwrap() {
            assert_eq!(corank_of(&b, &pt), corank_of(&red, &pt), "at {pt:?}");
        }
    }

    #[test]
    fn reduce_requires_isotropy_and_unit_pivot() {
        let f = Field::rationals();
        let b = bundle_from_strs(&f, 1, 3, vec![0, 1, 0], 1, &[((0, 0), "y0"), ((1, 2), "1")]);
        assert_eq!(bundle_reduce(&b, &[0], None).unwrap_err(), Error::NotIsotropicEverywhere);
        let b = bundle_from_strs(&f, 1, 3, vec![0, 0, 0], 1, &[((0, 1), "y0"), ((2, 2), "y1")]);
        assert_eq!(bundle_reduce(&b, &[0], None).unwrap_err(), Error::NoUnitPivot);
    }

    #[test]
    fn binary_algebra_matches_rank_2_bundle_disc() {
        // (g0, b, g1) generic symbols: the relation matches bundle_disc of
        // the rank-2 bundle with a00 = g0, a01 = -b, a11 = g1
        let f = Field::rationals();
        let vars = QuadricBundleData::base_vars(2);
        let vr: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
        let ring = CoeffRing::Fld(f.clone());
        let g0 = parse_poly("y0", &vr, ring.clone()).unwrap();
        let be = parse_poly("y1", &vr, ring.clone()).unwrap();
        let g1 = parse_poly("y2", &vr, ring.clone()).unwrap();
        let alg = binary_algebra(&g0, &be, &g1).unwrap();

        let bundle = QuadricBundleData::new(
            f.clone(),
            2,
            2,
            vec![0, 0],
            1,
            [
                ((0usize, 0usize), g0.clone()),
                ((0, 1), be.neg()),
                ((1, 1), g1.clone()),
            ]
            .into_iter()
            .collect(),
        )
        .unwrap();
        let disc = bundle_disc(&bundle).unwrap();
        // universal rank 2: beta = -xi01 -> -(-b) = b; gamma = xi0 xi1 = g0 g1
        assert_eq!(disc.beta, alg.beta);
        assert_eq!(disc.gamma, alg.gamma);
        assert_eq!(disc.sign_sigma, -1);
    }

    #[test]
    fn binary_algebra_split_and_zero() {
        let f = Field::rationals();
        let vars: Vec<String> = vec![];
        let ring = CoeffRing::Fld(f.clone());
        let zero = MultiPoly::zero(ring.clone(), vars.clone());
        let one = MultiPoly::one(ring.clone(), vars.clone());
        // (0, 1, 0): z^2 - z, split algebra
        let alg = binary_algebra(&zero, &one, &zero).unwrap();
        assert!(alg.gamma.is_zero());
        assert_eq!(alg.beta, one);
        // (1, 0, 1): z^2 + 1
        let alg = binary_algebra(&one, &zero, &one).unwrap();
        assert_eq!(alg.gamma, one);
        assert!(alg.beta.is_zero());
        // all zero rejected
        assert_eq!(binary_algebra(&zero, &zero, &zero).unwrap_err(), Error::ZeroForm);
    }
}
