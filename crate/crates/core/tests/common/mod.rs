//! Shared generators and the named 100-case invariant suites, used by both
//! the property tests and the acceptance gate.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quadrics_core::exact::field::{Field, Scalar};
use quadrics_core::exact::matrix::Matrix;
use quadrics_core::exact::parse::parse_poly;
use quadrics_core::exact::poly::{Coeff, CoeffRing, Mono, MultiPoly};
use quadrics_core::fano::fano_correspondence;
use quadrics_core::quadform::{
    corank, hyperbolic_reduce, isotropic_check, IsotropyMode, QuadraticForm, Subspace,
};

pub fn random_form(rng: &mut ChaCha8Rng, field: &Field, dim: usize) -> QuadraticForm {
    let mut coeffs = std::collections::BTreeMap::new();
    for i in 0..dim {
        for j in i..dim {
            if rng.random_range(0..3) > 0 {
                let c = field.random(rng);
                if !field.is_zero(&c) {
                    coeffs.insert((i, j), c);
                }
            }
        }
    }
    QuadraticForm::new(field.clone(), dim, coeffs).unwrap()
}

pub fn random_vector(rng: &mut ChaCha8Rng, field: &Field, dim: usize) -> Vec<Scalar> {
    (0..dim).map(|_| field.random(rng)).collect()
}

/// A form with `half` hyperbolic planes plus a random block, pushed through
/// a random change of basis, together with the transported regular
/// isotropic subspace spanned by the hyperbolic generators.
pub fn random_regular_pair(
    rng: &mut ChaCha8Rng,
    field: &Field,
    half: usize,
    extra: usize,
) -> (QuadraticForm, Subspace) {
    let dim = 2 * half + extra;
    let mut coeffs = std::collections::BTreeMap::new();
    for i in 0..half {
        coeffs.insert((2 * i, 2 * i + 1), field.one());
    }
    for i in 2 * half..dim {
        for j in i..dim {
            let c = field.random(rng);
            if !field.is_zero(&c) {
                coeffs.insert((i, j), c);
            }
        }
    }
    let split = QuadraticForm::new(field.clone(), dim, coeffs).unwrap();
    let basis = loop {
        let cand = Matrix::from_fn(dim, dim, |_, _| field.random(rng));
        if cand.is_invertible(field) {
            break cand;
        }
    };
    let q = split.change_basis(&basis).unwrap();
    // q(s) = split(C^T s): span{e_{2i}} pulls back to even rows of C^{-1}
    let cinv = basis.inverse(field).expect("invertible");
    let rows: Vec<Vec<Scalar>> = (0..half).map(|i| cinv.row(2 * i).to_vec()).collect();
    let f_sub = Subspace::from_spanning(field, dim, rows).unwrap();
    (q, f_sub)
}

pub fn suite_polar_consistency() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for field in [Field::prime(5).unwrap(), Field::prime(2).unwrap()] {
        for _ in 0..100 {
            let dim = rng.random_range(2..=6);
            let q = random_form(&mut rng, &field, dim);
            let v = random_vector(&mut rng, &field, dim);
            let w = random_vector(&mut rng, &field, dim);
            let sum: Vec<Scalar> = v.iter().zip(&w).map(|(a, b)| field.add(a, b)).collect();
            let lhs = q.polar(&v, &w).unwrap();
            let rhs = field.sub(
                &field.sub(&q.eval(&sum).unwrap(), &q.eval(&v).unwrap()),
                &q.eval(&w).unwrap(),
            );
            assert_eq!(lhs, rhs, "polar identity");
        }
    }
}

pub fn suite_char2_parity() {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    let f2 = Field::prime(2).unwrap();
    for _ in 0..100 {
        let dim = rng.random_range(2..=6);
        let q = random_form(&mut rng, &f2, dim);
        assert_eq!(q.polar_matrix().rank(&f2) % 2, 0, "alternating rank is even");
        let rep = corank(&q);
        if (dim - rep.corank_q) % 2 == 0 {
            assert_eq!(rep.corank_q, rep.corank_b);
        }
    }
}

pub fn suite_reduction_corank() {
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    let fields =
        [Field::prime(2).unwrap(), Field::prime(3).unwrap(), Field::prime(5).unwrap()];
    for case in 0..100 {
        let field = &fields[case % fields.len()];
        let half = rng.random_range(1..=2);
        let extra = rng.random_range(0..=2);
        let (q, f_sub) = random_regular_pair(&mut rng, field, half, extra);
        assert!(isotropic_check(&q, &f_sub, IsotropyMode::Regular).unwrap());
        let before = corank(&q);
        let red = hyperbolic_reduce(&q, &f_sub).unwrap();
        assert_eq!(red.reduced.dim, q.dim - 2 * f_sub.dim());
        let after = corank(&red.reduced);
        assert_eq!(before.corank_b, after.corank_b);
        assert_eq!(before.corank_q, after.corank_q);
        assert_eq!(before.q_on_radical_nonzero, after.q_on_radical_nonzero);
    }
}

pub fn suite_fano_correspondence() {
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    let fields = [Field::prime(2).unwrap(), Field::prime(3).unwrap()];
    let mut done = 0;
    while done < 100 {
        let field = &fields[done % fields.len()];
        let half = rng.random_range(1..=2);
        let extra = rng.random_range(0..=(6 - 2 * half).min(2));
        let (q, f_sub) = random_regular_pair(&mut rng, field, half, extra);
        let reduced_dim = q.dim - 2 * f_sub.dim();
        let max_k = reduced_dim.min(2);
        if max_k == 0 {
            done += 1;
            continue;
        }
        let k = rng.random_range(1..=max_k);
        let c = fano_correspondence(&q, &f_sub, k).unwrap();
        assert_eq!(c.downstairs, c.upstairs_containing);
        assert!(c.matched, "lifts must match the upstairs enumeration");
        done += 1;
    }
}

pub fn suite_parser_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(107);
    for case in 0..100 {
        let field =
            if case % 2 == 0 { Field::rationals() } else { Field::prime(5).unwrap() };
        let nvars = rng.random_range(1..=6);
        let vars: Vec<String> = (0..nvars).map(|i| format!("v{i}")).collect();
        let ring = CoeffRing::Fld(field.clone());
        let mut p = MultiPoly::zero(ring.clone(), vars.clone());
        for _ in 0..rng.random_range(1..=8) {
            let mut exps = vec![0u16; nvars];
            let deg = rng.random_range(0..=4);
            for _ in 0..deg {
                exps[rng.random_range(0..nvars)] += 1;
            }
            let c = field.random(&mut rng);
            if field.is_zero(&c) {
                continue;
            }
            let mono = Mono(exps);
            match p.terms.remove(&mono) {
                None => {
                    p.terms.insert(mono, Coeff::Fld(c));
                }
                Some(Coeff::Fld(old)) => {
                    let s = field.add(&old, &c);
                    if !field.is_zero(&s) {
                        p.terms.insert(mono, Coeff::Fld(s));
                    }
                }
                _ => unreachable!(),
            }
        }
        let printed = p.to_string();
        let vr: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
        let reparsed = parse_poly(&printed, &vr, ring).unwrap();
        assert_eq!(reparsed, p, "round trip of `{printed}`");
    }
}
