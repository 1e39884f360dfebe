//! Input file formats: quadratic forms, subspaces, quadric bundles, and
//! cubics. All expressions use the library's polynomial grammar.

use std::collections::BTreeMap;

use quadrics_core::bundles::QuadricBundleData;
use quadrics_core::cubic4fold::cubic_vars;
use quadrics_core::exact::field::{Field, Scalar};
use quadrics_core::exact::parse::parse_poly;
use quadrics_core::exact::poly::{CoeffRing, MultiPoly};
use quadrics_core::quadform::{QuadraticForm, Subspace};
use quadrics_core::Error;

/// `Q`, `F<p>`, or `GF(p^k)`.
pub fn parse_field(spec: &str) -> Result<Field, Error> {
    let s = spec.trim();
    if s == "Q" {
        return Ok(Field::rationals());
    }
    if let Some(p) = s.strip_prefix('F') {
        let p: u64 = p
            .parse()
            .map_err(|_| Error::InvalidField(format!("bad prime in `{s}`")))?;
        return Field::prime(p);
    }
    if let Some(inner) = s.strip_prefix("GF(").and_then(|t| t.strip_suffix(')')) {
        let (p, k) = inner
            .split_once('^')
            .ok_or_else(|| Error::InvalidField(format!("expected GF(p^k), got `{s}`")))?;
        let p: u64 = p
            .trim()
            .parse()
            .map_err(|_| Error::InvalidField(format!("bad prime in `{s}`")))?;
        let k: usize = k
            .trim()
            .parse()
            .map_err(|_| Error::InvalidField(format!("bad degree in `{s}`")))?;
        return Field::extension_of_degree(p, k);
    }
    Err(Error::InvalidField(format!("unknown field spec `{s}` (use Q, Fp, or GF(p^k))")))
}

fn lines_of(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn line_error(path: &str, lineno: usize, msg: impl std::fmt::Display) -> Error {
    Error::InvalidInput(format!("{path}:{lineno}: {msg}"))
}

/// Form file: `field <spec>`, `dim <n+1>`, `q: <expression in x0..xn>`.
pub fn load_form(path: &str, text: &str) -> Result<QuadraticForm, Error> {
    let mut field: Option<Field> = None;
    let mut dim: Option<usize> = None;
    let mut q_expr: Option<(usize, String)> = None;
    for (no, line) in lines_of(text) {
        if let Some(rest) = line.strip_prefix("field") {
            field = Some(parse_field(rest)?);
        } else if let Some(rest) = line.strip_prefix("dim") {
            dim = Some(
                rest.trim()
                    .parse()
                    .map_err(|_| line_error(path, no, "bad dimension"))?,
            );
        } else if let Some(rest) = line.strip_prefix("q:") {
            q_expr = Some((no, rest.trim().to_string()));
        } else {
            return Err(line_error(path, no, format!("unrecognized line `{line}`")));
        }
    }
    let field = field.ok_or_else(|| line_error(path, 0, "missing `field` line"))?;
    let dim = dim.ok_or_else(|| line_error(path, 0, "missing `dim` line"))?;
    if dim == 0 || dim > 16 {
        return Err(line_error(path, 0, "dimension must be between 1 and 16"));
    }
    let (no, expr) = q_expr.ok_or_else(|| line_error(path, 0, "missing `q:` line"))?;
    let vars: Vec<String> = (0..dim).map(|i| format!("x{i}")).collect();
    let vr: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
    let poly = parse_poly(&expr, &vr, CoeffRing::Fld(field.clone()))
        .map_err(|e| line_error(path, no, e))?;
    if poly.is_zero() {
        return Ok(QuadraticForm::zero_form(field, dim));
    }
    QuadraticForm::from_poly(&field, dim, &poly).map_err(|e| line_error(path, no, e))
}

/// Subspace file: `ambient <n+1>` then `row: c0,c1,...,cn` per basis vector,
/// scalars read in the companion form's field.
pub fn load_subspace(path: &str, text: &str, field: &Field) -> Result<Subspace, Error> {
    let mut ambient: Option<usize> = None;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (no, line) in lines_of(text) {
        if let Some(rest) = line.strip_prefix("ambient") {
            ambient = Some(
                rest.trim()
                    .parse()
                    .map_err(|_| line_error(path, no, "bad ambient dimension"))?,
            );
        } else if let Some(rest) = line.strip_prefix("row:") {
            let n = ambient.ok_or_else(|| line_error(path, no, "`ambient` must come first"))?;
            let entries: Vec<&str> = rest.split(',').map(str::trim).collect();
            if entries.len() != n {
                return Err(line_error(path, no, format!("expected {n} entries")));
            }
            let mut row = Vec::with_capacity(n);
            for e in entries {
                row.push(parse_scalar(e, field).map_err(|err| line_error(path, no, err))?);
            }
            rows.push(row);
        } else {
            return Err(line_error(path, no, format!("unrecognized line `{line}`")));
        }
    }
    let ambient = ambient.ok_or_else(|| line_error(path, 0, "missing `ambient` line"))?;
    Subspace::from_spanning(field, ambient, rows)
}

/// A constant expression (integers, fractions, parentheses) as a scalar.
pub fn parse_scalar(text: &str, field: &Field) -> Result<Scalar, Error> {
    let p: MultiPoly = parse_poly(text, &[], CoeffRing::Fld(field.clone()))?;
    match p.terms.into_values().next() {
        None => Ok(field.zero()),
        Some(quadrics_core::exact::poly::Coeff::Fld(s)) => Ok(s),
        _ => Err(Error::RingMismatch),
    }
}

/// Bundle file: `field <spec>`, `base_dim m`, `fiber_rank n+1`,
/// `twists a0 ... an`, `L l`, then `entry i j: <expression in y0..ym>`.
/// Twist/degree validation happens at construction.
pub fn load_bundle(path: &str, text: &str) -> Result<QuadricBundleData, Error> {
    let mut field: Option<Field> = None;
    let mut base_dim: Option<usize> = None;
    let mut fiber_rank: Option<usize> = None;
    let mut twists: Option<Vec<i64>> = None;
    let mut l: Option<i64> = None;
    let mut entries: Vec<(usize, usize, usize, String)> = Vec::new();
    for (no, line) in lines_of(text) {
        if let Some(rest) = line.strip_prefix("field") {
            field = Some(parse_field(rest)?);
        } else if let Some(rest) = line.strip_prefix("base_dim") {
            base_dim =
                Some(rest.trim().parse().map_err(|_| line_error(path, no, "bad base_dim"))?);
        } else if let Some(rest) = line.strip_prefix("fiber_rank") {
            fiber_rank =
                Some(rest.trim().parse().map_err(|_| line_error(path, no, "bad fiber_rank"))?);
        } else if let Some(rest) = line.strip_prefix("twists") {
            let ts: Result<Vec<i64>, _> =
                rest.split_whitespace().map(str::parse).collect();
            twists = Some(ts.map_err(|_| line_error(path, no, "bad twists"))?);
        } else if let Some(rest) = line.strip_prefix("L") {
            l = Some(rest.trim().parse().map_err(|_| line_error(path, no, "bad L"))?);
        } else if let Some(rest) = line.strip_prefix("entry") {
            let (head, expr) = rest
                .split_once(':')
                .ok_or_else(|| line_error(path, no, "expected `entry i j: expr`"))?;
            let idx: Vec<&str> = head.split_whitespace().collect();
            if idx.len() != 2 {
                return Err(line_error(path, no, "expected two indices"));
            }
            let i: usize =
                idx[0].parse().map_err(|_| line_error(path, no, "bad index"))?;
            let j: usize =
                idx[1].parse().map_err(|_| line_error(path, no, "bad index"))?;
            entries.push((no, i, j, expr.trim().to_string()));
        } else {
            return Err(line_error(path, no, format!("unrecognized line `{line}`")));
        }
    }
    let field = field.ok_or_else(|| line_error(path, 0, "missing `field` line"))?;
    let base_dim = base_dim.ok_or_else(|| line_error(path, 0, "missing `base_dim` line"))?;
    let fiber_rank =
        fiber_rank.ok_or_else(|| line_error(path, 0, "missing `fiber_rank` line"))?;
    let twists = twists.ok_or_else(|| line_error(path, 0, "missing `twists` line"))?;
    let l = l.ok_or_else(|| line_error(path, 0, "missing `L` line"))?;
    let vars = QuadricBundleData::base_vars(base_dim);
    let vr: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
    let ring = CoeffRing::Fld(field.clone());
    let mut map = BTreeMap::new();
    for (no, i, j, expr) in entries {
        let p = parse_poly(&expr, &vr, ring.clone()).map_err(|e| line_error(path, no, e))?;
        map.insert((i, j), p);
    }
    QuadricBundleData::new(field, base_dim, fiber_rank, twists, l, map)
        .map_err(|e| line_error(path, 0, e))
}

/// Cubic file: `field <spec>` then `f: <expression in x0..x2,y0..y2>`.
pub fn load_cubic(path: &str, text: &str) -> Result<(Field, MultiPoly), Error> {
    let mut field: Option<Field> = None;
    let mut f_expr: Option<(usize, String)> = None;
    for (no, line) in lines_of(text) {
        if let Some(rest) = line.strip_prefix("field") {
            field = Some(parse_field(rest)?);
        } else if let Some(rest) = line.strip_prefix("f:") {
            f_expr = Some((no, rest.trim().to_string()));
        } else {
            return Err(line_error(path, no, format!("unrecognized line `{line}`")));
        }
    }
    let field = field.ok_or_else(|| line_error(path, 0, "missing `field` line"))?;
    let (no, expr) = f_expr.ok_or_else(|| line_error(path, 0, "missing `f:` line"))?;
    let vars = cubic_vars();
    let vr: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
    let poly = parse_poly(&expr, &vr, CoeffRing::Fld(field.clone()))
        .map_err(|e| line_error(path, no, e))?;
    Ok((field, poly))
}
