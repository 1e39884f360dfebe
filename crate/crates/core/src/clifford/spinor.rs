//! Spinor matrix factorizations: Clifford multiplication between ideal
//! components as a matrix of linear forms, verification of the
//! matrix-factorization identity, pointwise rank sampling, duality, and the
//! randomized equivalence solver.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::algebra::Clifford;
use super::ideal::{express_in_basis, ideal_basis, IdealBasis};
use crate::exact::field::{Field, Scalar};
use crate::exact::matrix::Matrix;
use crate::exact::poly::{Coeff, CoeffRing, MultiPoly};
use crate::quadform::{corank, QuadraticForm, Subspace};
use crate::{Error, Result};

/// The Clifford multiplication map `(sum x_i e_i) . - : I_{d-1} -> I_d`
/// written in the canonical ideal bases; entries are linear forms in
/// `x0..xn`. Together with the map one degree down it is a matrix
/// factorization of `q`.
#[derive(Debug, Clone)]
pub struct SpinorFactorization {
    pub form: QuadraticForm,
    pub w: Subspace,
    pub degree: i64,
    pub phi: Matrix<MultiPoly>,
    pub source: IdealBasis,
    pub target: IdealBasis,
}

/// A bare matrix-factorization pair: `first . second = second . first = q . Id`.
#[derive(Debug, Clone)]
pub struct MfPair {
    pub form: QuadraticForm,
    pub first: Matrix<MultiPoly>,
    pub second: Matrix<MultiPoly>,
}

/// One sampled point of `Q` with the evaluated rank of `phi`.
#[derive(Debug, Clone)]
pub struct PointRankSample {
    pub point: Vec<Scalar>,
    pub rank: usize,
    pub on_pw_sing: bool,
    pub expected: Option<usize>,
}

/// Output of [`mf_verify`].
#[derive(Debug, Clone)]
pub struct MfVerifyReport {
    pub identity_holds: bool,
    pub point_ranks: Vec<PointRankSample>,
    pub ranks_consistent: bool,
}

/// Output of [`mf_equiv`].
#[derive(Debug, Clone)]
pub struct MfEquivOutcome {
    /// Constant invertible matrices with `B . f = g . A`, when found.
    pub pair: Option<(Matrix<Scalar>, Matrix<Scalar>)>,
    /// Dimension of the full intertwiner space.
    pub space_dim: usize,
    /// `none` may be a sampling artifact over fields smaller than 16.
    pub probabilistic: bool,
}

impl SpinorFactorization {
    /// The factorization as a pair `(phi_d, phi_{d+1})`.
    pub fn pair(&self, cl: &Clifford) -> Result<MfPair> {
        let next = spinor_phi(cl, &self.w, self.degree + 1)?;
        Ok(MfPair {
            form: self.form.clone(),
            first: self.phi.clone(),
            second: next.phi,
        })
    }
}

impl MfPair {
    /// Exact check of `first . second = second . first = q . Id`.
    pub fn verify(&self) -> Result<bool> {
        let n = self.first.rows;
        if self.first.cols != n || self.second.rows != n || self.second.cols != n {
            return Err(Error::SizeMismatch);
        }
        let template = self.first.at(0, 0);
        let qpoly = self.form.to_poly_named(&template.vars);
        let zero = MultiPoly::zero(template.ring.clone(), template.vars.clone());
        for (a, b) in [(&self.first, &self.second), (&self.second, &self.first)] {
            let prod = a.mat_mul(b)?;
            for i in 0..n {
                for j in 0..n {
                    let expect = if i == j { &qpoly } else { &zero };
                    if prod.at(i, j) != expect {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

/// Build the spinor matrix factorization of `q` for the isotropic `W` at
/// degree `d`.
pub fn spinor_phi(cl: &Clifford, w: &Subspace, d: i64) -> Result<SpinorFactorization> {
    if !cl.form.is_primitive() {
        return Err(Error::ZeroForm);
    }
    let source = ideal_basis(cl, w, d - 1)?;
    let target = ideal_basis(cl, w, d)?;
    let f = &cl.form.field;
    let gens = cl.gens();
    let vars: Vec<String> = (0..gens).map(|i| alloc::format!("x{i}")).collect();
    let ring = CoeffRing::Fld(f.clone());
    let dim = source.dim();
    let mut entries =
        vec![vec![MultiPoly::zero(ring.clone(), vars.clone()); dim]; dim];
    for (j, src) in source.elements.iter().enumerate() {
        for i in 0..gens {
            let prod = cl.mul(&cl.generator(i), src);
            if prod.is_zero() {
                continue;
            }
            let cs = express_in_basis(f, &target, &prod)?;
            let xi = MultiPoly::var(ring.clone(), vars.clone(), i);
            for (k, c) in cs.iter().enumerate() {
                if !f.is_zero(c) {
                    let term = xi.scale(&Coeff::Fld(c.clone()));
                    entries[k][j] = entries[k][j].add(&term)?;
                }
            }
        }
    }
    let phi = Matrix::from_rows(entries)?;
    Ok(SpinorFactorization {
        form: cl.form.clone(),
        w: w.clone(),
        degree: d,
        phi,
        source,
        target,
    })
}

/// Verify the matrix-factorization identity in both composition orders and,
/// over a finite field, record the rank of `phi` at every point of `Q`.
///
/// Off `PW` intersected with the singular locus the rank is `2^{n-r-1}`, on
/// it `phi` vanishes; the classification applies when `n + 1 - r >= 2`.
pub fn mf_verify(cl: &Clifford, fac: &SpinorFactorization) -> Result<MfVerifyReport> {
    let pair = fac.pair(cl)?;
    let identity_holds = pair.verify()?;

    let f = &cl.form.field;
    let mut point_ranks = Vec::new();
    let mut ranks_consistent = true;
    if f.is_finite() {
        let gens = cl.gens();
        let r = fac.w.dim();
        let classify = gens - r >= 2;
        let rad = corank(&cl.form).radical;
        for point in projective_points(f, gens)? {
            if !f.is_zero(&cl.form.eval(&point)?) {
                continue;
            }
            let at_point = fac.phi.eval(f, &point)?;
            let rank = at_point.rank(f);
            let on_pw_sing = fac.w.contains_vector(f, &point)?
                && rad.contains_vector(f, &point)?;
            let expected = if !classify {
                None
            } else if on_pw_sing {
                Some(0)
            } else {
                Some(1usize << (gens - r - 2))
            };
            if let Some(e) = expected {
                if rank != e {
                    ranks_consistent = false;
                }
            }
            point_ranks.push(PointRankSample { point, rank, on_pw_sing, expected });
        }
    }
    Ok(MfVerifyReport { identity_holds, point_ranks, ranks_consistent })
}

/// Canonical representatives of projective points: first nonzero
/// coordinate equal to one, enumerated by position of that coordinate.
pub fn projective_points(field: &Field, dim: usize) -> Result<Vec<Vec<Scalar>>> {
    let elems = field.elements()?;
    let mut out = Vec::new();
    for lead in 0..dim {
        // coordinates before `lead` are zero, coordinate `lead` is one
        let tail = dim - lead - 1;
        let mut idx = vec![0usize; tail];
        'tails: loop {
            let mut v = vec![field.zero(); dim];
            v[lead] = field.one();
            for (t, &i) in idx.iter().enumerate() {
                v[lead + 1 + t] = elems[i].clone();
            }
            out.push(v);
            let mut k = 0;
            loop {
                if k == tail {
                    break 'tails;
                }
                idx[k] += 1;
                if idx[k] < elems.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }
    Ok(out)
}

/// The dual matrix factorization: transposes in swapped order.
pub fn dual_pair(cl: &Clifford, fac: &SpinorFactorization) -> Result<MfPair> {
    let next = spinor_phi(cl, &fac.w, fac.degree + 1)?;
    Ok(MfPair {
        form: fac.form.clone(),
        first: next.phi.transpose(),
        second: fac.phi.transpose(),
    })
}

fn linear_coeff(field: &Field, p: &MultiPoly, var: usize) -> Result<Scalar> {
    let c = p.coefficient_of_var(var);
    if c.is_zero() {
        return Ok(field.zero());
    }
    if c.num_terms() != 1 || c.total_degree() != Some(0) {
        return Err(Error::InvalidInput(String::from("entry is not a linear form")));
    }
    match c.terms.values().next() {
        Some(Coeff::Fld(s)) => Ok(s.clone()),
        _ => Err(Error::RingMismatch),
    }
}

/// Search for constant invertible `(A, B)` with `B . f.first = g.first . A`.
///
/// The solution space is computed exactly by equating coefficients per
/// variable; invertibility is then sought by trying each basis vector, their
/// sum, and two rounds of 64 seeded random combinations. Over fields of
/// size < 16 a miss is flagged probabilistic.
pub fn mf_equiv(f: &MfPair, g: &MfPair, seed: u64) -> Result<MfEquivOutcome> {
    if f.form != g.form {
        return Err(Error::FormMismatch);
    }
    let n = f.first.rows;
    if g.first.rows != n || f.first.cols != n || g.first.cols != n {
        return Err(Error::SizeMismatch);
    }
    let field = &f.form.field;
    if f.first == g.first {
        let id = Matrix::identity(field, n);
        return Ok(MfEquivOutcome { pair: Some((id.clone(), id)), space_dim: usize::MAX, probabilistic: false });
    }
    let gens = f.form.dim;
    // unknowns: A (cols 0..n^2), B (cols n^2..2n^2)
    let unknowns = 2 * n * n;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for v in 0..gens {
        let fv = Matrix::from_fn(n, n, |i, j| {
            linear_coeff(field, f.first.at(i, j), v).expect("linear entries")
        });
        let gv = Matrix::from_fn(n, n, |i, j| {
            linear_coeff(field, g.first.at(i, j), v).expect("linear entries")
        });
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![field.zero(); unknowns];
                // (B fv)_{ij} = sum_k B[i,k] fv[k,j]
                for k in 0..n {
                    row[n * n + i * n + k] = fv.at(k, j).clone();
                }
                // -(gv A)_{ij} = -sum_k gv[i,k] A[k,j]
                for k in 0..n {
                    let cur = row[k * n + j].clone();
                    row[k * n + j] = field.sub(&cur, gv.at(i, k));
                }
                rows.push(row);
            }
        }
    }
    let system = Matrix::from_rows(rows)?;
    let kernel = system.kernel_basis(field);
    let space_dim = kernel.rows;
    if space_dim == 0 {
        return Ok(MfEquivOutcome { pair: None, space_dim, probabilistic: false });
    }

    let unpack = |sol: &[Scalar]| {
        let a = Matrix::from_fn(n, n, |i, j| sol[i * n + j].clone());
        let b = Matrix::from_fn(n, n, |i, j| sol[n * n + i * n + j].clone());
        (a, b)
    };
    let try_sol = |sol: &[Scalar]| {
        let (a, b) = unpack(sol);
        (a.is_invertible(field) && b.is_invertible(field)).then_some((a, b))
    };

    // deterministic candidates first
    for row in kernel.rows_iter() {
        if let Some(found) = try_sol(row) {
            return Ok(MfEquivOutcome { pair: Some(found), space_dim, probabilistic: false });
        }
    }
    let sum: Vec<Scalar> = (0..unknowns)
        .map(|j| {
            let mut acc = field.zero();
            for i in 0..space_dim {
                acc = field.add(&acc, kernel.at(i, j));
            }
            acc
        })
        .collect();
    if let Some(found) = try_sol(&sum) {
        return Ok(MfEquivOutcome { pair: Some(found), space_dim, probabilistic: false });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _round in 0..2 {
        for _ in 0..64 {
            let coeffs: Vec<Scalar> = (0..space_dim).map(|_| field.random(&mut rng)).collect();
            let cand: Vec<Scalar> = (0..unknowns)
                .map(|j| {
                    let mut acc = field.zero();
                    for (i, c) in coeffs.iter().enumerate() {
                        acc = field.add(&acc, &field.mul(c, kernel.at(i, j)));
                    }
                    acc
                })
                .collect();
            if let Some(found) = try_sol(&cand) {
                return Ok(MfEquivOutcome { pair: Some(found), space_dim, probabilistic: false });
            }
        }
    }
    let probabilistic = field.order().map(|o| o < 16).unwrap_or(false);
    Ok(MfEquivOutcome { pair: None, space_dim, probabilistic })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse::parse_poly;

    fn form(field: &Field, dim: usize, terms: &[((usize, usize), i64)]) -> QuadraticForm {
        let coeffs = terms
            .iter()
            .map(|&((i, j), c)| ((i, j), field.from_i64(c)))
            .collect();
        QuadraticForm::new(field.clone(), dim, coeffs).unwrap()
    }

    fn surface_setup(field: &Field) -> (Clifford, Subspace) {
        let q = form(field, 4, &[((0, 3), 1), ((1, 2), 1)]);
        (Clifford::new(q), Subspace::coordinate(field, 4, &[2, 3]))
    }

    #[test]
    fn surface_phi_is_the_worked_matrix() {
        // even phi for q = x0x3 + x1x2, W = span{e2,e3} is [[x3,x2],[-x1,x0]]
        let qf = Field::rationals();
        let (cl, w) = surface_setup(&qf);
        let fac = spinor_phi(&cl, &w, 0).unwrap();
        let vars = ["x0", "x1", "x2", "x3"];
        let ring = CoeffRing::Fld(qf.clone());
        let expect = |s: &str| parse_poly(s, &vars, ring.clone()).unwrap();
        assert_eq!(fac.phi.at(0, 0), &expect("x3"));
        assert_eq!(fac.phi.at(0, 1), &expect("x2"));
        assert_eq!(fac.phi.at(1, 0), &expect("-x1"));
        assert_eq!(fac.phi.at(1, 1), &expect("x0"));
    }

    #[test]
    fn dim2_point_and_residual_equations() {
        // q = x0x1, W = span{e0}: phi odd->even is (x1), next is (x0)
        let qf = Field::rationals();
        let q = form(&qf, 2, &[((0, 1), 1)]);
        let cl = Clifford::new(q);
        let w = Subspace::coordinate(&qf, 2, &[0]);
        let even = spinor_phi(&cl, &w, 0).unwrap();
        let odd = spinor_phi(&cl, &w, 1).unwrap();
        let vars = ["x0", "x1"];
        let ring = CoeffRing::Fld(qf.clone());
        assert_eq!(even.phi.at(0, 0), &parse_poly("x1", &vars, ring.clone()).unwrap());
        assert_eq!(odd.phi.at(0, 0), &parse_poly("x0", &vars, ring.clone()).unwrap());
    }

    #[test]
    fn degree_shift_periodicity() {
        let qf = Field::prime(5).unwrap();
        let (cl, w) = surface_setup(&qf);
        let a = spinor_phi(&cl, &w, 0).unwrap();
        let b = spinor_phi(&cl, &w, 2).unwrap();
        assert_eq!(a.phi, b.phi);
    }

    #[test]
    fn verify_surface_factorization() {
        for field in [Field::rationals(), Field::prime(3).unwrap()] {
            let (cl, w) = surface_setup(&field);
            let fac = spinor_phi(&cl, &w, 0).unwrap();
            let report = mf_verify(&cl, &fac).unwrap();
            assert!(report.identity_holds);
            assert!(report.ranks_consistent);
            if field.is_finite() {
                assert!(!report.point_ranks.is_empty());
                // smooth surface: nothing on PW cap Sing
                assert!(report.point_ranks.iter().all(|s| !s.on_pw_sing));
                assert!(report.point_ranks.iter().all(|s| s.rank == 1));
            }
        }
    }

    #[test]
    fn rank_drops_to_zero_on_singular_pw_points() {
        // q = x0x1 in dim 4, W = radical span{e2,e3}: phi vanishes on PW
        let f3 = Field::prime(3).unwrap();
        let q = form(&f3, 4, &[((0, 1), 1)]);
        let cl = Clifford::new(q);
        let w = Subspace::coordinate(&f3, 4, &[2, 3]);
        let fac = spinor_phi(&cl, &w, 0).unwrap();
        let report = mf_verify(&cl, &fac).unwrap();
        assert!(report.identity_holds);
        assert!(report.ranks_consistent);
        let on: Vec<_> = report.point_ranks.iter().filter(|s| s.on_pw_sing).collect();
        assert!(!on.is_empty());
        assert!(on.iter().all(|s| s.rank == 0));
    }

    #[test]
    fn paper_pair_multiplies_to_q() {
        let qf = Field::rationals();
        let (cl, w) = surface_setup(&qf);
        let fac = spinor_phi(&cl, &w, 0).unwrap();
        let pair = fac.pair(&cl).unwrap();
        assert!(pair.verify().unwrap());
    }

    #[test]
    fn equiv_reflexive_and_identity() {
        let f3 = Field::prime(3).unwrap();
        let (cl, w) = surface_setup(&f3);
        let fac = spinor_phi(&cl, &w, 0).unwrap();
        let pair = fac.pair(&cl).unwrap();
        let out = mf_equiv(&pair, &pair, 0).unwrap();
        let (a, b) = out.pair.unwrap();
        assert_eq!(a, Matrix::identity(&f3, 2));
        assert_eq!(b, Matrix::identity(&f3, 2));
    }

    #[test]
    fn projective_point_counts() {
        let f3 = Field::prime(3).unwrap();
        assert_eq!(projective_points(&f3, 2).unwrap().len(), 4);
        assert_eq!(projective_points(&f3, 4).unwrap().len(), 40);
        let f2 = Field::prime(2).unwrap();
        assert_eq!(projective_points(&f2, 6).unwrap().len(), 63);
    }
}
