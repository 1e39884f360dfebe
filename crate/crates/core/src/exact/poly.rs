//! Sparse multivariate polynomials over the integers or an exact field.
//!
//! Terms are kept in graded lexicographic order (total degree first, then
//! exponent vectors lexicographically) with no stored zero coefficients, so
//! equality is structural and printing is canonical.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::field::{Field, Scalar};
use crate::{Error, Result};

/// Exponent vector with graded lexicographic ordering.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u16>);

impl Mono {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Coefficient ring of a polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoeffRing {
    Int,
    Fld(Field),
}

/// A single coefficient; the variant must match the owning ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coeff {
    Int(BigInt),
    Fld(Scalar),
}

/// Sparse multivariate polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    pub ring: CoeffRing,
    pub vars: Vec<String>,
    pub terms: BTreeMap<Mono, Coeff>,
}

impl CoeffRing {
    fn is_zero(&self, c: &Coeff) -> bool {
        match (self, c) {
            (CoeffRing::Int, Coeff::Int(n)) => n.is_zero(),
            (CoeffRing::Fld(f), Coeff::Fld(s)) => f.is_zero(s),
            _ => panic!("coefficient does not belong to this ring"),
        }
    }

    fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (CoeffRing::Int, Coeff::Int(x), Coeff::Int(y)) => Coeff::Int(x + y),
            (CoeffRing::Fld(f), Coeff::Fld(x), Coeff::Fld(y)) => Coeff::Fld(f.add(x, y)),
            _ => panic!("coefficient does not belong to this ring"),
        }
    }

    fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (CoeffRing::Int, Coeff::Int(x)) => Coeff::Int(-x),
            (CoeffRing::Fld(f), Coeff::Fld(x)) => Coeff::Fld(f.neg(x)),
            _ => panic!("coefficient does not belong to this ring"),
        }
    }

    fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (CoeffRing::Int, Coeff::Int(x), Coeff::Int(y)) => Coeff::Int(x * y),
            (CoeffRing::Fld(f), Coeff::Fld(x), Coeff::Fld(y)) => Coeff::Fld(f.mul(x, y)),
            _ => panic!("coefficient does not belong to this ring"),
        }
    }
}

impl MultiPoly {
    pub fn zero(ring: CoeffRing, vars: Vec<String>) -> Self {
        MultiPoly { ring, vars, terms: BTreeMap::new() }
    }

    pub fn constant(ring: CoeffRing, vars: Vec<String>, c: Coeff) -> Self {
        let mut p = MultiPoly::zero(ring, vars);
        if !p.ring.is_zero(&c) {
            let n = p.vars.len();
            p.terms.insert(Mono(vec![0; n]), c);
        }
        p
    }

    pub fn one(ring: CoeffRing, vars: Vec<String>) -> Self {
        let c = match &ring {
            CoeffRing::Int => Coeff::Int(BigInt::one()),
            CoeffRing::Fld(f) => Coeff::Fld(f.one()),
        };
        MultiPoly::constant(ring, vars, c)
    }

    /// The monomial `var_idx` with coefficient one.
    pub fn var(ring: CoeffRing, vars: Vec<String>, var_idx: usize) -> Self {
        let mut p = MultiPoly::one(ring, vars);
        let n = p.vars.len();
        let (_, c) = p.terms.pop_first().expect("one() has a term");
        let mut exps = vec![0u16; n];
        exps[var_idx] = 1;
        p.terms.insert(Mono(exps), c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Mono::total_degree).max()
    }

    /// `Some(d)` when every term has total degree `d`; zero counts as
    /// homogeneous of any degree and reports `None` here.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Mono::total_degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// True when zero or homogeneous of exactly degree `d`.
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.total_degree() == d)
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring || self.vars != other.vars {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    fn insert(&mut self, m: Mono, c: Coeff) {
        if !self.ring.is_zero(&c) {
            self.terms.insert(m, c);
        }
    }

    fn add_term(&mut self, m: Mono, c: Coeff) {
        let ring = self.ring.clone();
        match self.terms.remove(&m) {
            None => self.insert(m, c),
            Some(old) => {
                let s = ring.add(&old, &c);
                self.insert(m, s);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = self.ring.neg(c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = MultiPoly::zero(self.ring.clone(), self.vars.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), self.ring.mul(ca, cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        let mut out = MultiPoly::zero(self.ring.clone(), self.vars.clone());
        for (m, a) in &self.terms {
            out.insert(m.clone(), self.ring.mul(a, c));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = MultiPoly::one(self.ring.clone(), self.vars.clone());
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Exact division of an integer polynomial by a nonzero integer.
    /// Fails with the first offending monomial in display (descending) order.
    pub fn exact_int_div(&self, divisor: &BigInt) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::InvalidInput("division by zero".to_string()));
        }
        if self.ring != CoeffRing::Int {
            return Err(Error::RingMismatch);
        }
        let mut out = MultiPoly::zero(CoeffRing::Int, self.vars.clone());
        for (m, c) in self.terms.iter().rev() {
            let Coeff::Int(n) = c else { unreachable!() };
            let (q, r) = n.div_rem(divisor);
            if !r.is_zero() {
                return Err(Error::NotDivisible { monomial: self.format_mono(m) });
            }
            out.insert(m.clone(), Coeff::Int(q));
        }
        Ok(out)
    }

    /// Reinterpret an integer polynomial in a field (the coefficient map
    /// `Z -> F`). Field polynomials pass through unchanged if the field matches.
    pub fn into_field(&self, field: &Field) -> Result<Self> {
        match &self.ring {
            CoeffRing::Fld(f) => {
                if f == field {
                    Ok(self.clone())
                } else {
                    Err(Error::RingMismatch)
                }
            }
            CoeffRing::Int => {
                let ring = CoeffRing::Fld(field.clone());
                let mut out = MultiPoly::zero(ring, self.vars.clone());
                for (m, c) in &self.terms {
                    let Coeff::Int(n) = c else { unreachable!() };
                    out.insert(m.clone(), Coeff::Fld(field.from_bigint(n)));
                }
                Ok(out)
            }
        }
    }

    /// Evaluate a field polynomial at scalars of `field`, which may be an
    /// extension of the coefficient field (coefficients are embedded).
    pub fn eval(&self, field: &Field, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.vars.len() {
            return Err(Error::DimensionMismatch);
        }
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let base = match c {
                Coeff::Fld(s) => field.embed(s)?,
                Coeff::Int(n) => field.from_bigint(n),
            };
            let mut term = base;
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    term = field.mul(&term, &point[i]);
                }
            }
            acc = field.add(&acc, &term);
        }
        Ok(acc)
    }

    /// Substitute each variable by a polynomial (all in the same target ring).
    pub fn substitute(&self, images: &[MultiPoly]) -> Result<MultiPoly> {
        if images.len() != self.vars.len() {
            return Err(Error::DimensionMismatch);
        }
        let (ring, vars) = match images.first() {
            Some(p) => (p.ring.clone(), p.vars.clone()),
            None => (self.ring.clone(), Vec::new()),
        };
        for p in images {
            if p.ring != ring || p.vars != vars {
                return Err(Error::RingMismatch);
            }
        }
        // power cache per variable
        let mut powers: Vec<Vec<MultiPoly>> =
            images.iter().map(|p| vec![MultiPoly::one(ring.clone(), vars.clone()), p.clone()]).collect();
        let mut acc = MultiPoly::zero(ring.clone(), vars.clone());
        for (m, c) in &self.terms {
            let cc = match (&ring, c) {
                (CoeffRing::Int, Coeff::Int(n)) => Coeff::Int(n.clone()),
                (CoeffRing::Fld(f), Coeff::Int(n)) => Coeff::Fld(f.from_bigint(n)),
                (CoeffRing::Fld(f), Coeff::Fld(s)) => {
                    // same-field check piggybacks on compatible() of mul below
                    let _ = f;
                    Coeff::Fld(s.clone())
                }
                (CoeffRing::Int, Coeff::Fld(_)) => return Err(Error::RingMismatch),
            };
            let mut term = MultiPoly::constant(ring.clone(), vars.clone(), cc);
            for (i, &e) in m.0.iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i])?;
                    powers[i].push(next);
                }
                if e > 0 {
                    term = term.mul(&powers[i][e as usize])?;
                }
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Coefficient of `var_idx` in a polynomial of degree <= 1 in that
    /// variable, as a polynomial in the remaining grading.
    pub fn coefficient_of_var(&self, var_idx: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.ring.clone(), self.vars.clone());
        for (m, c) in &self.terms {
            if m.0[var_idx] == 1 {
                let mut exps = m.0.clone();
                exps[var_idx] = 0;
                out.insert(Mono(exps), c.clone());
            }
        }
        out
    }

    fn format_coeff(&self, c: &Coeff) -> String {
        match (c, &self.ring) {
            (Coeff::Int(n), _) => n.to_string(),
            (Coeff::Fld(s), CoeffRing::Fld(f)) => f.format(s),
            (Coeff::Fld(s), _) => s.to_string(),
        }
    }

    fn format_mono(&self, m: &Mono) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.vars[i].clone()),
                _ => parts.push(alloc::format!("{}^{}", self.vars[i], e)),
            }
        }
        parts.join("*")
    }
}

impl fmt::Display for MultiPoly {
    /// Graded-lex descending, explicit `*` and `^`, matching the parser
    /// grammar so that printing then parsing is the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let cs = self.format_coeff(c);
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, String::from(rest)),
                None => (false, cs),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let ms = self.format_mono(m);
            if ms.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{ms}")?;
            } else {
                write!(f, "{mag}*{ms}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_ring() -> CoeffRing {
        CoeffRing::Int
    }

    fn xy_vars() -> Vec<String> {
        vec!["x".to_string(), "y".to_string()]
    }

    #[test]
    fn grlex_order() {
        // x^2 > x*y > y^2 > x > y > 1
        let x2 = Mono(vec![2, 0]);
        let xy = Mono(vec![1, 1]);
        let y2 = Mono(vec![0, 2]);
        let x = Mono(vec![1, 0]);
        assert!(x2 > xy && xy > y2 && y2 > x);
    }

    #[test]
    fn arithmetic_and_display() {
        let r = int_ring();
        let v = xy_vars();
        let x = MultiPoly::var(r.clone(), v.clone(), 0);
        let y = MultiPoly::var(r.clone(), v.clone(), 1);
        let p = x.add(&y).unwrap().mul(&x.sub(&y).unwrap()).unwrap();
        // (x+y)(x-y) = x^2 - y^2
        assert_eq!(p.to_string(), "x^2 - y^2");
        let q = p.sub(&x.mul(&x).unwrap()).unwrap();
        assert_eq!(q.to_string(), "-y^2");
    }

    #[test]
    fn exact_int_div_cases() {
        let r = int_ring();
        let v = xy_vars();
        let x = MultiPoly::var(r.clone(), v.clone(), 0);
        let y = MultiPoly::var(r.clone(), v.clone(), 1);
        let four = MultiPoly::constant(r.clone(), v.clone(), Coeff::Int(BigInt::from(4)));
        let p = four.mul(&x.mul(&y).unwrap()).unwrap();
        assert_eq!(p.exact_int_div(&BigInt::from(4)).unwrap().to_string(), "x*y");

        let two_x = x.scale(&Coeff::Int(BigInt::from(2)));
        let err = two_x.exact_int_div(&BigInt::from(4)).unwrap_err();
        assert_eq!(err, Error::NotDivisible { monomial: "x".into() });

        // (8x^2 - 4xy)/4 = 2x^2 - xy
        let p = x
            .mul(&x)
            .unwrap()
            .scale(&Coeff::Int(BigInt::from(8)))
            .sub(&x.mul(&y).unwrap().scale(&Coeff::Int(BigInt::from(4))))
            .unwrap();
        assert_eq!(p.exact_int_div(&BigInt::from(4)).unwrap().to_string(), "2*x^2 - x*y");
    }

    #[test]
    fn field_coefficients_collapse() {
        let f2 = Field::prime(2).unwrap();
        let r = CoeffRing::Fld(f2);
        let v = xy_vars();
        let x = MultiPoly::var(r.clone(), v.clone(), 0);
        let p = x.add(&x).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn substitution() {
        let r = int_ring();
        let v = xy_vars();
        let x = MultiPoly::var(r.clone(), v.clone(), 0);
        let y = MultiPoly::var(r.clone(), v.clone(), 1);
        // p = x^2 + y, substitute x -> y, y -> x*y
        let p = x.mul(&x).unwrap().add(&y).unwrap();
        let q = p.substitute(&[y.clone(), x.mul(&y).unwrap()]).unwrap();
        assert_eq!(q.to_string(), "x*y + y^2");
    }
}
