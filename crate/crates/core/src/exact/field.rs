//! Fields and their scalars: the rationals, prime fields `F_p` with
//! `p < 2^31`, and extension fields `F_{p^k}` with `p <= 97` and `k <= 4`.
//!
//! A [`Field`] acts as the arithmetic context; a [`Scalar`] is plain data in
//! canonical form (reduced fraction, residue in `[0, p)`, or a coefficient
//! vector of length `k`). Equality of scalars is representational equality.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::{Error, Result};

/// Largest prime accepted for `F_p`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;
/// Largest base prime accepted for extension fields.
pub const MAX_EXT_PRIME: u64 = 97;
/// Largest extension degree.
pub const MAX_EXT_DEGREE: usize = 4;

/// An exact coefficient field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Field {
    /// The rational numbers with arbitrary-precision arithmetic.
    Rationals,
    /// The prime field `F_p`.
    Prime(u64),
    /// `F_p[t]/(modulus)` where `modulus` is monic irreducible of degree `k`,
    /// stored as its non-leading coefficients `c_0..c_{k-1}`
    /// (so the modulus is `t^k + c_{k-1} t^{k-1} + ... + c_0`).
    Ext { p: u64, k: usize, modulus: Vec<u64> },
}

/// A scalar in canonical form. Arithmetic goes through the owning [`Field`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod(u64),
    /// Coefficient vector `c_0 + c_1 t + ... + c_{k-1} t^{k-1}`.
    Ext(Vec<u64>),
}

/// Deterministic Miller-Rabin, valid for all `n < 3_215_031_751`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        return None;
    }
    Some(pow_mod(a, p - 2, p))
}

// Dense polynomial helpers over F_p, coefficients ascending, used only for
// extension-field arithmetic at tiny degrees.
mod fppoly {
    use super::{inv_mod, mul_mod};
    use alloc::vec;
    use alloc::vec::Vec;

    pub fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(x, y, p)) % p;
            }
        }
        trim(&mut out);
        out
    }

    /// Remainder of `a` modulo the monic polynomial `m` (leading coefficient 1
    /// implicit at degree `m.len()`), where `m` holds the non-leading terms.
    pub fn rem_monic(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let k = m.len();
        let mut r: Vec<u64> = a.to_vec();
        while r.len() > k {
            let lead = *r.last().unwrap();
            let deg = r.len() - 1;
            r.pop();
            if lead != 0 {
                for (i, &c) in m.iter().enumerate() {
                    let idx = deg - k + i;
                    let sub = mul_mod(lead, c, p);
                    r[idx] = (r[idx] + p - sub % p) % p;
                }
            }
            trim(&mut r);
        }
        r
    }

    /// Extended Euclid: inverse of `a` modulo the monic polynomial `m`.
    pub fn inv_mod_monic(a: &[u64], m: &[u64], p: u64) -> Option<Vec<u64>> {
        // full modulus including leading 1
        let mut modulus: Vec<u64> = m.to_vec();
        modulus.push(1);
        let (mut r0, mut r1) = (modulus, a.to_vec());
        trim(&mut r1);
        let (mut s0, mut s1): (Vec<u64>, Vec<u64>) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (q, r) = divrem(&r0, &r1, p)?;
            let qs1 = mul(&q, &s1, p);
            let s2 = sub(&s0, &qs1, p);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
        }
        // r0 = gcd; needs degree 0
        if r0.len() != 1 {
            return None;
        }
        let c = inv_mod(r0[0], p)?;
        let mut out: Vec<u64> = s0.iter().map(|&x| mul_mod(x, c, p)).collect();
        trim(&mut out);
        Some(out)
    }

    fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        let mut out = vec![0u64; n];
        for i in 0..n {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            out[i] = (x + p - y) % p;
        }
        trim(&mut out);
        out
    }

    pub fn divrem(a: &[u64], b: &[u64], p: u64) -> Option<(Vec<u64>, Vec<u64>)> {
        let mut r = a.to_vec();
        trim(&mut r);
        let mut b = b.to_vec();
        trim(&mut b);
        if b.is_empty() {
            return None;
        }
        let binv = inv_mod(*b.last().unwrap(), p)?;
        let db = b.len() - 1;
        if r.len() < b.len() {
            return Some((Vec::new(), r));
        }
        let mut q = vec![0u64; r.len() - db];
        while r.len() >= b.len() && !r.is_empty() {
            let lead = mul_mod(*r.last().unwrap(), binv, p);
            let shift = r.len() - b.len();
            q[shift] = lead;
            for i in 0..b.len() {
                let sub = mul_mod(lead, b[i], p);
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
            trim(&mut r);
        }
        trim(&mut q);
        Some((q, r))
    }
}

impl Field {
    /// Rationals.
    pub fn rationals() -> Self {
        Field::Rationals
    }

    /// Prime field, validating primality.
    pub fn prime(p: u64) -> Result<Self> {
        if p > MAX_PRIME {
            return Err(Error::InvalidField(alloc::format!("p = {p} exceeds 2^31 - 1")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(alloc::format!("{p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    /// Extension field with an explicit monic modulus (non-leading
    /// coefficients, ascending). Validates irreducibility by trial division.
    pub fn extension(p: u64, modulus: Vec<u64>) -> Result<Self> {
        let k = modulus.len();
        if !(2..=MAX_EXT_DEGREE).contains(&k) {
            return Err(Error::InvalidField(alloc::format!(
                "extension degree {k} outside 2..=4"
            )));
        }
        if p > MAX_EXT_PRIME || !is_prime(p) {
            return Err(Error::InvalidField(alloc::format!(
                "extension base {p} must be prime and <= 97"
            )));
        }
        let modulus: Vec<u64> = modulus.iter().map(|c| c % p).collect();
        if !modulus_irreducible(&modulus, p) {
            return Err(Error::InvalidField("modulus is reducible".to_string()));
        }
        Ok(Field::Ext { p, k, modulus })
    }

    /// `F_{p^k}` with the lexicographically first irreducible monic modulus.
    pub fn extension_of_degree(p: u64, k: usize) -> Result<Self> {
        if !(2..=MAX_EXT_DEGREE).contains(&k) {
            return Err(Error::InvalidField(alloc::format!(
                "extension degree {k} outside 2..=4"
            )));
        }
        if p > MAX_EXT_PRIME || !is_prime(p) {
            return Err(Error::InvalidField(alloc::format!(
                "extension base {p} must be prime and <= 97"
            )));
        }
        let mut coeffs = vec![0u64; k];
        loop {
            if modulus_irreducible(&coeffs, p) {
                return Ok(Field::Ext { p, k, modulus: coeffs });
            }
            // increment the coefficient vector in base p
            let mut i = 0;
            loop {
                if i == k {
                    return Err(Error::InvalidField(
                        "no irreducible modulus found".to_string(),
                    ));
                }
                coeffs[i] += 1;
                if coeffs[i] < p {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
        }
    }

    /// Characteristic: 0 for the rationals, `p` otherwise.
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
            Field::Ext { p, .. } => *p,
        }
    }

    /// Number of elements for finite fields.
    pub fn order(&self) -> Option<u128> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some(*p as u128),
            Field::Ext { p, k, .. } => Some((*p as u128).pow(*k as u32)),
        }
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self, Field::Rationals)
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::zero()),
            Field::Prime(_) => Scalar::Mod(0),
            Field::Ext { k, .. } => Scalar::Ext(vec![0; *k]),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::from_integer(n.clone())),
            Field::Prime(p) => Scalar::Mod(bigint_mod(n, *p)),
            Field::Ext { p, k, .. } => {
                let mut v = vec![0u64; *k];
                v[0] = bigint_mod(n, *p);
                Scalar::Ext(v)
            }
        }
    }

    /// Rational `num/den`; for positive-characteristic fields this is
    /// `num * den^{-1}` and fails when `den = 0` in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::InvalidInput("zero denominator".to_string()));
        }
        match self {
            Field::Rationals => Ok(Scalar::Rat(BigRational::new(num.clone(), den.clone()))),
            _ => {
                let d = self.from_bigint(den);
                let dinv = self
                    .inv(&d)
                    .ok_or_else(|| Error::InvalidInput("denominator is zero in field".to_string()))?;
                Ok(self.mul(&self.from_bigint(num), &dinv))
            }
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod(x) => *x == 0,
            Scalar::Ext(v) => v.iter().all(|&c| c == 0),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (Field::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod((x + y) % p),
            (Field::Ext { p, .. }, Scalar::Ext(x), Scalar::Ext(y)) => {
                Scalar::Ext(x.iter().zip(y).map(|(&u, &v)| (u + v) % p).collect())
            }
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            (Field::Prime(p), Scalar::Mod(x)) => Scalar::Mod((p - x % p) % p),
            (Field::Ext { p, .. }, Scalar::Ext(v)) => {
                Scalar::Ext(v.iter().map(|&c| (p - c % p) % p).collect())
            }
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (Field::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod(mul_mod(*x, *y, *p)),
            (Field::Ext { p, k, modulus }, Scalar::Ext(x), Scalar::Ext(y)) => {
                let prod = fppoly::mul(x, y, *p);
                let mut r = fppoly::rem_monic(&prod, modulus, *p);
                r.resize(*k, 0);
                Scalar::Ext(r)
            }
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if self.is_zero(a) {
            return None;
        }
        match (self, a) {
            (Field::Rationals, Scalar::Rat(x)) => Some(Scalar::Rat(x.recip())),
            (Field::Prime(p), Scalar::Mod(x)) => inv_mod(*x, *p).map(Scalar::Mod),
            (Field::Ext { p, k, modulus }, Scalar::Ext(v)) => {
                let mut r = fppoly::inv_mod_monic(v, modulus, *p)?;
                r.resize(*k, 0);
                Some(Scalar::Ext(r))
            }
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|binv| self.mul(a, &binv))
    }

    /// Multiply by the small integer `n` (used for the polar form's `2 a_ii`).
    pub fn scale_i64(&self, a: &Scalar, n: i64) -> Scalar {
        self.mul(a, &self.from_i64(n))
    }

    /// All field elements, ascending in the canonical order. Finite only.
    pub fn elements(&self) -> Result<Vec<Scalar>> {
        match self {
            Field::Rationals => Err(Error::FieldNotFinite),
            Field::Prime(p) => Ok((0..*p).map(Scalar::Mod).collect()),
            Field::Ext { p, k, .. } => {
                let mut out = Vec::new();
                let mut v = vec![0u64; *k];
                loop {
                    out.push(Scalar::Ext(v.clone()));
                    let mut i = 0;
                    loop {
                        if i == *k {
                            return Ok(out);
                        }
                        v[i] += 1;
                        if v[i] < *p {
                            break;
                        }
                        v[i] = 0;
                        i += 1;
                    }
                }
            }
        }
    }

    /// Uniform random element for finite fields; small random rational over `Q`.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        match self {
            Field::Rationals => {
                let num = rng.random_range(-9i64..=9);
                let den = rng.random_range(1i64..=9);
                Scalar::Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
            }
            Field::Prime(p) => Scalar::Mod(rng.random_range(0..*p)),
            Field::Ext { p, k, .. } => {
                Scalar::Ext((0..*k).map(|_| rng.random_range(0..*p)).collect())
            }
        }
    }

    /// Embed a scalar of the prime subfield into this field.
    ///
    /// Accepts `Mod` scalars when `self` is an extension of the same
    /// characteristic, and is the identity when the fields coincide.
    pub fn embed(&self, a: &Scalar) -> Result<Scalar> {
        match (self, a) {
            (Field::Rationals, Scalar::Rat(_)) => Ok(a.clone()),
            (Field::Prime(_), Scalar::Mod(_)) => Ok(a.clone()),
            (Field::Ext { p, k, .. }, Scalar::Mod(x)) => {
                let mut v = vec![0u64; *k];
                v[0] = x % p;
                Ok(Scalar::Ext(v))
            }
            (Field::Ext { .. }, Scalar::Ext(_)) => Ok(a.clone()),
            _ => Err(Error::RingMismatch),
        }
    }

    /// True when the scalar lies in the prime subfield.
    pub fn in_prime_subfield(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rat(_) | Scalar::Mod(_) => true,
            Scalar::Ext(v) => v[1..].iter().all(|&c| c == 0),
        }
    }

    /// Render a scalar; prime-field residues print bare, extension elements
    /// print as polynomials in the generator `t`.
    pub fn format(&self, a: &Scalar) -> String {
        match a {
            Scalar::Rat(r) => format_rational(r),
            Scalar::Mod(x) => x.to_string(),
            Scalar::Ext(v) => {
                let mut parts: Vec<String> = Vec::new();
                for (i, &c) in v.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    let part = match i {
                        0 => c.to_string(),
                        1 if c == 1 => "t".to_string(),
                        1 => alloc::format!("{c}*t"),
                        _ if c == 1 => alloc::format!("t^{i}"),
                        _ => alloc::format!("{c}*t^{i}"),
                    };
                    parts.push(part);
                }
                if parts.is_empty() {
                    "0".to_string()
                } else {
                    parts.join(" + ")
                }
            }
        }
    }

    /// Short human-readable field name, e.g. `Q`, `F5`, `GF(3^2)`.
    pub fn name(&self) -> String {
        match self {
            Field::Rationals => "Q".to_string(),
            Field::Prime(p) => alloc::format!("F{p}"),
            Field::Ext { p, k, .. } => alloc::format!("GF({p}^{k})"),
        }
    }
}

fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        alloc::format!("{}/{}", r.numer(), r.denom())
    }
}

fn bigint_mod(n: &BigInt, p: u64) -> u64 {
    let m = n % BigInt::from(p);
    let m = if m.sign() == Sign::Minus { m + BigInt::from(p) } else { m };
    let digits = m.to_u64_digits().1;
    digits.first().copied().unwrap_or(0)
}

/// Irreducibility of a monic polynomial over `F_p` at degree <= 4: no roots,
/// and for degree 4 additionally no monic quadratic divisor.
fn modulus_irreducible(coeffs: &[u64], p: u64) -> bool {
    let k = coeffs.len();
    if coeffs[0] == 0 {
        return false; // root at 0
    }
    // root search
    for x in 0..p {
        let mut acc = 1u64; // leading coefficient
        for i in (0..k).rev() {
            acc = (mul_mod(acc, x, p) + coeffs[i]) % p;
        }
        if acc == 0 {
            return false;
        }
    }
    if k == 4 {
        // quadratic divisor search
        let mut full: Vec<u64> = coeffs.to_vec();
        full.push(1);
        for b in 0..p {
            for c in 0..p {
                let q = [c, b, 1];
                if let Some((_, r)) = fppoly::divrem(&full, &q, p) {
                    if r.is_empty() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{}", format_rational(r)),
            Scalar::Mod(x) => write!(f, "{x}"),
            Scalar::Ext(v) => write!(f, "{v:?}"),
        }
    }
}
