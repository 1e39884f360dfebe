//! Cubic fourfolds containing a plane: extraction of the projection data,
//! the quadric surface bundle over `P^2`, its discriminant cover, and the
//! two-disjoint-planes K3 model.
//!
//! Coordinates are fixed as `(x0:x1:x2:y0:y1:y2)` with the plane at
//! `V(y0,y1,y2)`; a cubic containing it decomposes as
//! `f = g + sum q_i x_i + sum l_ij x_i x_j` with `g` cubic, `q_i` quadric
//! and `l_ij` linear in the `y` variables.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::bundles::{bundle_disc, fiber_and_corank, DiscriminantData, QuadricBundleData};
use crate::exact::field::{Field, Scalar};
use crate::exact::poly::{Coeff, CoeffRing, Mono, MultiPoly};
use crate::{Error, Result};

/// The six projective coordinates, plane coordinates last.
pub fn cubic_vars() -> Vec<String> {
    ["x0", "x1", "x2", "y0", "y1", "y2"].iter().map(|s| s.to_string()).collect()
}

/// A cubic containing the plane `V(y0,y1,y2)` together with its extracted
/// projection data over the `y`-plane.
#[derive(Debug, Clone, PartialEq)]
pub struct CubicWithPlane {
    pub field: Field,
    pub f: MultiPoly,
    /// Cubic in `y`.
    pub g: MultiPoly,
    /// Quadrics in `y`, one per `x_i`.
    pub q: [MultiPoly; 3],
    /// Linear forms in `y`, keyed by `i <= j`.
    pub ell: BTreeMap<(usize, usize), MultiPoly>,
}

/// Outcome of the discriminant-cover computation: the cover data from the
/// printed closed formula, the cross-check against the universal
/// specialization, and degeneracy flags.
#[derive(Debug, Clone)]
pub struct CoverOutcome {
    pub disc: DiscriminantData,
    /// Exact agreement between the closed formula and `bundle_disc` of the
    /// projection bundle.
    pub cross_check: bool,
    /// The cover relation degenerates to `z^2 = 0` everywhere.
    pub degenerate: bool,
}

/// The two bidegree pieces cutting the K3 in `P^2 x P^2`.
#[derive(Debug, Clone)]
pub struct TwoPlanesK3 {
    /// Bidegree (2,1) in (x, y).
    pub f21: MultiPoly,
    /// Bidegree (1,2) in (x, y).
    pub f12: MultiPoly,
    pub degenerate: bool,
}

fn y_vars() -> Vec<String> {
    QuadricBundleData::base_vars(2)
}

/// Project a monomial of the six-variable ring onto the `y` variables.
fn y_part(m: &Mono) -> Mono {
    Mono(m.0[3..6].to_vec())
}

fn x_degree(m: &Mono) -> u32 {
    m.0[..3].iter().map(|&e| e as u32).sum()
}

/// Decompose a homogeneous cubic by `x`-degree. Fails when a monomial has
/// `x`-degree 3, which is exactly the plane not being contained.
pub fn extract(field: &Field, f: &MultiPoly) -> Result<CubicWithPlane> {
    if f.vars != cubic_vars() {
        return Err(Error::InvalidInput(
            "cubic must be written in x0,x1,x2,y0,y1,y2".to_string(),
        ));
    }
    if f.is_zero() || !f.is_homogeneous_of(3) {
        return Err(Error::NotCubic);
    }
    let ring = CoeffRing::Fld(field.clone());
    let yv = y_vars();
    let zero_y = || MultiPoly::zero(ring.clone(), yv.clone());

    let mut offending = Vec::new();
    let mut g = zero_y();
    let mut q = [zero_y(), zero_y(), zero_y()];
    let mut ell: BTreeMap<(usize, usize), MultiPoly> = BTreeMap::new();
    for (m, c) in &f.terms {
        match x_degree(m) {
            0 => {
                g.terms.insert(y_part(m), c.clone());
            }
            1 => {
                let i = (0..3).find(|&i| m.0[i] == 1).expect("x-degree one");
                q[i].terms.insert(y_part(m), c.clone());
            }
            2 => {
                let support: Vec<usize> = (0..3).filter(|&i| m.0[i] > 0).collect();
                let key = match support.as_slice() {
                    [i] => (*i, *i),
                    [i, j] => (*i, *j),
                    _ => unreachable!("x-degree two"),
                };
                ell.entry(key)
                    .or_insert_with(zero_y)
                    .terms
                    .insert(y_part(m), c.clone());
            }
            _ => {
                let mono_only = MultiPoly {
                    ring: ring.clone(),
                    vars: f.vars.clone(),
                    terms: [(m.clone(), c.clone())].into_iter().collect(),
                };
                offending.push(mono_only.to_string());
            }
        }
    }
    if !offending.is_empty() {
        return Err(Error::PlaneNotContained { monomials: offending });
    }
    ell.retain(|_, p| !p.is_zero());
    Ok(CubicWithPlane { field: field.clone(), f: f.clone(), g, q, ell })
}

impl CubicWithPlane {
    pub fn ell_at(&self, i: usize, j: usize) -> MultiPoly {
        debug_assert!(i <= j);
        self.ell
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| MultiPoly::zero(CoeffRing::Fld(self.field.clone()), y_vars()))
    }

    /// Reassemble `g + sum q_i x_i + sum l_ij x_i x_j` in the six variables.
    pub fn reassemble(&self) -> Result<MultiPoly> {
        let ring = CoeffRing::Fld(self.field.clone());
        let vars = cubic_vars();
        let lift = |p: &MultiPoly| -> MultiPoly {
            let mut out = MultiPoly::zero(ring.clone(), vars.clone());
            for (m, c) in &p.terms {
                let mut exps = vec![0u16; 3];
                exps.extend_from_slice(&m.0);
                out.terms.insert(Mono(exps), c.clone());
            }
            out
        };
        let xv = |i: usize| MultiPoly::var(ring.clone(), vars.clone(), i);
        let mut acc = lift(&self.g);
        for i in 0..3 {
            acc = acc.add(&lift(&self.q[i]).mul(&xv(i))?)?;
        }
        for (&(i, j), p) in &self.ell {
            acc = acc.add(&lift(p).mul(&xv(i))?.mul(&xv(j))?)?;
        }
        Ok(acc)
    }
}

/// The quadric surface bundle of linear projection from the plane:
/// `O^3 + O(-1) -> O(1)^3 + O(2)` over `P^2`, with the `l_ij` in the
/// 3x3 block, the `q_i` in the last column, and `g` in the corner.
pub fn projection_bundle(c: &CubicWithPlane) -> Result<QuadricBundleData> {
    let mut entries = BTreeMap::new();
    for (&(i, j), p) in &c.ell {
        entries.insert((i, j), p.clone());
    }
    for i in 0..3 {
        if !c.q[i].is_zero() {
            entries.insert((i, 3), c.q[i].clone());
        }
    }
    if !c.g.is_zero() {
        entries.insert((3, 3), c.g.clone());
    }
    QuadricBundleData::new(c.field.clone(), 2, 4, vec![0, 0, 0, -1], 1, entries)
}

/// The flat double cover `z^2 - beta z + gamma = 0` of `P^2`, computed from
/// the closed formula and cross-checked against the universal
/// specialization on the projection bundle.
pub fn discriminant_cover(c: &CubicWithPlane) -> Result<CoverOutcome> {
    let l = |i: usize, j: usize| c.ell_at(i, j);
    let q0 = &c.q[0];
    let q1 = &c.q[1];
    let q2 = &c.q[2];
    let beta = l(0, 1)
        .mul(q2)?
        .sub(&l(0, 2).mul(q1)?)?
        .add(&l(1, 2).mul(q0)?)?;
    // gamma = (l00 l12^2 + l11 l02^2 + l22 l01^2 - l01 l02 l12
    //          - 4 l00 l11 l22) g
    //         + l01 l12 q0 q2 + l11 l22 q0^2 + l00 l22 q1^2 + l00 l11 q2^2
    //         - l00 l12 q1 q2 - l11 l02 q0 q2 - l22 l01 q0 q1
    let four = Coeff::Fld(c.field.from_i64(4));
    let g_factor = l(0, 0)
        .mul(&l(1, 2).pow(2)?)?
        .add(&l(1, 1).mul(&l(0, 2).pow(2)?)?)?
        .add(&l(2, 2).mul(&l(0, 1).pow(2)?)?)?
        .sub(&l(0, 1).mul(&l(0, 2))?.mul(&l(1, 2))?)?
        .sub(&l(0, 0).mul(&l(1, 1))?.mul(&l(2, 2))?.scale(&four))?;
    let gamma = g_factor
        .mul(&c.g)?
        .add(&l(0, 1).mul(&l(1, 2))?.mul(q0)?.mul(q2)?)?
        .add(&l(1, 1).mul(&l(2, 2))?.mul(&q0.pow(2)?)?)?
        .add(&l(0, 0).mul(&l(2, 2))?.mul(&q1.pow(2)?)?)?
        .add(&l(0, 0).mul(&l(1, 1))?.mul(&q2.pow(2)?)?)?
        .sub(&l(0, 0).mul(&l(1, 2))?.mul(q1)?.mul(q2)?)?
        .sub(&l(1, 1).mul(&l(0, 2))?.mul(q0)?.mul(q2)?)?
        .sub(&l(2, 2).mul(&l(0, 1))?.mul(q0)?.mul(q1)?)?;

    let via_universal = bundle_disc(&projection_bundle(c)?)?;
    let cross_check = via_universal.beta == beta && via_universal.gamma == gamma;
    let degenerate = beta.is_zero() && gamma.is_zero();
    Ok(CoverOutcome {
        disc: DiscriminantData { beta, gamma, sign_sigma: via_universal.sign_sigma },
        cross_check,
        degenerate,
    })
}

/// Base points (over a finite field) whose fiber has corank at least 2;
/// the diagnostic behind the smoothness caveat.
pub fn corank2_points(
    c: &CubicWithPlane,
    point_field: &Field,
) -> Result<Vec<(Vec<Scalar>, usize)>> {
    let bundle = projection_bundle(c)?;
    let mut out = Vec::new();
    for pt in crate::clifford::projective_points(point_field, 3)? {
        match fiber_and_corank(&bundle, point_field, &pt) {
            Ok((_, rep)) if rep.corank_q >= 2 => out.push((pt, rep.corank_q)),
            Ok(_) => {}
            Err(Error::NonPrimitiveFiber) => out.push((pt, 4)),
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// Split a cubic containing both `V(y)` and `V(x)` into its bidegree
/// `(2,1)` and `(1,2)` pieces; these cut the K3 model in `P^2 x P^2`.
pub fn two_planes_k3(field: &Field, f: &MultiPoly) -> Result<TwoPlanesK3> {
    if f.vars != cubic_vars() {
        return Err(Error::InvalidInput(
            "cubic must be written in x0,x1,x2,y0,y1,y2".to_string(),
        ));
    }
    if f.is_zero() || !f.is_homogeneous_of(3) {
        return Err(Error::NotCubic);
    }
    let ring = CoeffRing::Fld(field.clone());
    let mut f21 = MultiPoly::zero(ring.clone(), f.vars.clone());
    let mut f12 = MultiPoly::zero(ring.clone(), f.vars.clone());
    let mut first_plane = Vec::new();
    let mut second_plane = Vec::new();
    for (m, c) in &f.terms {
        let mono_only = MultiPoly {
            ring: ring.clone(),
            vars: f.vars.clone(),
            terms: [(m.clone(), c.clone())].into_iter().collect(),
        };
        match x_degree(m) {
            1 => {
                f12.terms.insert(m.clone(), c.clone());
            }
            2 => {
                f21.terms.insert(m.clone(), c.clone());
            }
            0 => second_plane.push(mono_only.to_string()),
            _ => first_plane.push(mono_only.to_string()),
        }
    }
    if !first_plane.is_empty() {
        return Err(Error::PlaneNotContained { monomials: first_plane });
    }
    if !second_plane.is_empty() {
        return Err(Error::SecondPlaneNotContained { monomials: second_plane });
    }
    let degenerate = f21.is_zero() || f12.is_zero();
    Ok(TwoPlanesK3 { f21, f12, degenerate })
}
