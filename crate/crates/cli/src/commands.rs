//! One function per subcommand; each fills in the report's result value.

use serde_json::{json, Value};

use quadrics_core::bundles::{bundle_disc, bundle_reduce, fiber_and_corank, universal_disc};
use quadrics_core::clifford::{
    dual_pair, ideal_basis, mf_equiv, mf_verify, spinor_phi, Clifford, CliffordElement,
};
use quadrics_core::cubic4fold::{corank2_points, discriminant_cover, extract, projection_bundle,
    two_planes_k3};
use quadrics_core::exact::field::Field;
use quadrics_core::fano::{component_classes, cover_split, enum_isotropic, line_class,
    line_spinor_agreement};
use quadrics_core::quadform::{corank, hyperbolic_reduce, CorankReport, QuadraticForm, Subspace};
use quadrics_core::Error;

use crate::report::{matrix_json, poly_matrix_json, scalar_json, subspace_json, Report};

fn corank_json(field: &Field, rep: &CorankReport) -> Value {
    json!({
        "corank_b": rep.corank_b,
        "corank_q": rep.corank_q,
        "q_on_radical_nonzero": rep.q_on_radical_nonzero,
        "radical": subspace_json(field, &rep.radical),
    })
}

fn element_string(field: &Field, e: &CliffordElement) -> String {
    if e.coeffs.is_empty() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (mask, c) in &e.coeffs {
        let mono: String = if *mask == 0 {
            "1".to_string()
        } else {
            (0..32)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| format!("e{i}"))
                .collect::<Vec<_>>()
                .join("")
        };
        let cs = field.format(c);
        if cs == "1" && *mask != 0 {
            parts.push(mono);
        } else if *mask == 0 {
            parts.push(cs);
        } else {
            parts.push(format!("{cs}*{mono}"));
        }
    }
    parts.join(" + ")
}

pub fn cmd_corank_form(report: &mut Report, q: &QuadraticForm) {
    let rep = corank(q);
    report.result = json!({
        "field": q.field.name(),
        "dim": q.dim,
        "q": q.to_poly().to_string(),
        "corank": corank_json(&q.field, &rep),
    });
}

pub fn cmd_corank_bundle(
    report: &mut Report,
    bundle: &quadrics_core::bundles::QuadricBundleData,
    point: &[quadrics_core::exact::field::Scalar],
) -> Result<(), Error> {
    let (fiber, rep) = fiber_and_corank(bundle, &bundle.field, point)?;
    report.result = json!({
        "field": bundle.field.name(),
        "point": point.iter().map(|s| scalar_json(&bundle.field, s)).collect::<Vec<_>>(),
        "fiber": fiber.to_poly().to_string(),
        "corank": corank_json(&bundle.field, &rep),
    });
    Ok(())
}

pub fn cmd_reduce_form(
    report: &mut Report,
    q: &QuadraticForm,
    w: &Subspace,
) -> Result<(), Error> {
    let red = hyperbolic_reduce(q, w)?;
    report.result = json!({
        "reduced_dim": red.reduced.dim,
        "reduced_q": red.reduced.to_poly().to_string(),
        "rank_reduced_by": red.rank_reduced_by,
        "basis_rows": matrix_json(&q.field, &red.basis_rows),
    });
    Ok(())
}

pub fn cmd_reduce_bundle(
    report: &mut Report,
    bundle: &quadrics_core::bundles::QuadricBundleData,
    w: &Subspace,
) -> Result<(), Error> {
    if !w.is_coordinate(&bundle.field) {
        return Err(Error::NotCoordinate);
    }
    let coords = w.pivot_coords(&bundle.field);
    let red = bundle_reduce(bundle, &coords, None)?;
    let entries: Vec<Value> = red
        .entries()
        .map(|(&(i, j), p)| json!({"i": i, "j": j, "entry": p.to_string()}))
        .collect();
    report.result = json!({
        "fiber_rank": red.fiber_rank,
        "twists": red.twists,
        "L": red.l,
        "entries": entries,
    });
    Ok(())
}

pub fn cmd_clifford_ideal(
    report: &mut Report,
    q: &QuadraticForm,
    w: &Subspace,
    degree: i64,
) -> Result<(), Error> {
    let cl = Clifford::new(q.clone());
    let basis = ideal_basis(&cl, w, degree)?;
    report.result = json!({
        "degree": degree,
        "dim": basis.dim(),
        "basis": basis
            .elements
            .iter()
            .map(|e| Value::String(element_string(&q.field, e)))
            .collect::<Vec<_>>(),
    });
    Ok(())
}

pub fn cmd_spinor_mf(
    report: &mut Report,
    q: &QuadraticForm,
    w: &Subspace,
    degree: i64,
) -> Result<(), Error> {
    let cl = Clifford::new(q.clone());
    let fac = spinor_phi(&cl, w, degree)?;
    let verify = mf_verify(&cl, &fac)?;
    let mut on_pw_sing = 0usize;
    let mut off = 0usize;
    for s in &verify.point_ranks {
        if s.on_pw_sing {
            on_pw_sing += 1;
        } else {
            off += 1;
        }
    }
    report.result = json!({
        "degree": degree,
        "size": fac.phi.rows,
        "phi": poly_matrix_json(&fac.phi),
        "identity_holds": verify.identity_holds,
        "point_ranks": {
            "sampled": verify.point_ranks.len(),
            "on_pw_sing": on_pw_sing,
            "off_pw_sing": off,
            "consistent": verify.ranks_consistent,
        },
    });
    Ok(())
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_mf_equiv(
    report: &mut Report,
    q: &QuadraticForm,
    w1: &Subspace,
    d1: i64,
    w2: &Subspace,
    d2: i64,
    dual: bool,
    seed: u64,
) -> Result<(), Error> {
    let cl = Clifford::new(q.clone());
    let f1 = spinor_phi(&cl, w1, d1)?;
    let left = if dual { dual_pair(&cl, &f1)? } else { f1.pair(&cl)? };
    let right = spinor_phi(&cl, w2, d2)?.pair(&cl)?;
    let out = mf_equiv(&left, &right, seed)?;
    report.result = json!({
        "found": out.pair.is_some(),
        "space_dim": if out.space_dim == usize::MAX { Value::String("full".into()) } else { json!(out.space_dim) },
        "probabilistic": out.probabilistic,
        "a": out.pair.as_ref().map(|(a, _)| matrix_json(&q.field, a)),
        "b": out.pair.as_ref().map(|(_, b)| matrix_json(&q.field, b)),
    });
    if out.probabilistic {
        report.warn("no equivalence found after sampling; over small fields this is probabilistic");
    }
    Ok(())
}

pub fn cmd_disc_universal(report: &mut Report, rank: usize) -> Result<(), Error> {
    let d = universal_disc(rank)?;
    report.result = json!({
        "rank": rank,
        "beta": d.beta.to_string(),
        "gamma": d.gamma.to_string(),
        "sigma": d.sign_sigma,
        "cover": format!("z^2 - ({}) z + ({}) = 0", d.beta, d.gamma),
    });
    Ok(())
}

pub fn cmd_disc_bundle(
    report: &mut Report,
    bundle: &quadrics_core::bundles::QuadricBundleData,
) -> Result<(), Error> {
    let d = bundle_disc(bundle)?;
    report.result = json!({
        "beta": d.beta.to_string(),
        "gamma": d.gamma.to_string(),
        "sigma": d.sign_sigma,
        "cover": format!("z^2 - ({}) z + ({}) = 0", d.beta, d.gamma),
    });
    Ok(())
}

pub fn cmd_cubic4_cover(
    report: &mut Report,
    field: &Field,
    f: &quadrics_core::exact::poly::MultiPoly,
) -> Result<(), Error> {
    let c = extract(field, f)?;
    let bundle = projection_bundle(&c)?;
    let out = discriminant_cover(&c)?;
    let survey = if field.is_finite() {
        let pts = corank2_points(&c, field)?;
        json!({
            "field": field.name(),
            "corank2_points": pts
                .iter()
                .map(|(p, c)| json!({
                    "point": p.iter().map(|s| scalar_json(field, s)).collect::<Vec<_>>(),
                    "corank": c,
                }))
                .collect::<Vec<_>>(),
        })
    } else {
        Value::Null
    };
    if out.degenerate {
        report.warn("cover relation is degenerate: beta = gamma = 0");
    }
    report.result = json!({
        "beta": out.disc.beta.to_string(),
        "gamma": out.disc.gamma.to_string(),
        "cover": format!("z^2 - ({}) z + ({}) = 0", out.disc.beta, out.disc.gamma),
        "cross_check": out.cross_check,
        "degenerate": out.degenerate,
        "bundle_twists": bundle.twists,
        "corank2_survey": survey,
    });
    Ok(())
}

pub fn cmd_cubic4_k3(
    report: &mut Report,
    field: &Field,
    f: &quadrics_core::exact::poly::MultiPoly,
) -> Result<(), Error> {
    let k3 = two_planes_k3(field, f)?;
    if k3.degenerate {
        report.warn("one bidegree piece vanishes; the K3 data is degenerate");
    }
    report.result = json!({
        "f21": k3.f21.to_string(),
        "f12": k3.f12.to_string(),
        "degenerate": k3.degenerate,
    });
    Ok(())
}

pub fn cmd_fano_enum(report: &mut Report, q: &QuadraticForm, k: usize) -> Result<(), Error> {
    let e = enum_isotropic(q, k)?;
    report.result = json!({
        "iso_dim": k,
        "count": e.subspaces.len(),
        "subspaces": e
            .subspaces
            .iter()
            .map(|w| subspace_json(&q.field, w))
            .collect::<Vec<_>>(),
    });
    Ok(())
}

pub fn cmd_fano_components(
    report: &mut Report,
    q: &QuadraticForm,
    k: usize,
) -> Result<(), Error> {
    let e = enum_isotropic(q, k)?;
    let labeled = component_classes(&e)?;
    let labels = labeled.component_labels.clone().unwrap_or_default();
    let sizes = [
        labels.iter().filter(|&&l| l == 0).count(),
        labels.iter().filter(|&&l| l == 1).count(),
    ];
    report.result = json!({
        "iso_dim": k,
        "count": labeled.subspaces.len(),
        "labels": labels,
        "class_sizes": sizes,
        "subspaces": labeled
            .subspaces
            .iter()
            .map(|w| subspace_json(&q.field, w))
            .collect::<Vec<_>>(),
    });
    Ok(())
}

pub fn cmd_cover_split(report: &mut Report, q: &QuadraticForm) -> Result<(), Error> {
    let rep = cover_split(q)?;
    report.result = json!({
        "split": rep.split,
        "base_maximal_count": rep.base_maximal_count,
        "class_sizes": rep.class_sizes,
        "rational_members": rep
            .rational_members
            .iter()
            .map(|m| match m {
                // members live over the quadratic extension; render entries there
                Some(w) => {
                    let ext = match &q.field {
                        Field::Prime(p) => Field::extension_of_degree(*p, 2).unwrap(),
                        other => other.clone(),
                    };
                    subspace_json(&ext, w)
                }
                None => Value::Null,
            })
            .collect::<Vec<_>>(),
    });
    Ok(())
}

pub fn cmd_line_class(
    report: &mut Report,
    q: &QuadraticForm,
    w: &Subspace,
    w2: Option<&Subspace>,
    degree: i64,
    seed: u64,
) -> Result<(), Error> {
    match w2 {
        None => {
            let label = line_class(q, w)?;
            report.result = json!({
                "component": label.component,
                "meets_radical": subspace_json(&q.field, &label.meets_radical),
            });
        }
        Some(w2) => {
            let rep = line_spinor_agreement(q, w, w2, degree, seed)?;
            report.result = json!({
                "label_a": {
                    "component": rep.label_a.component,
                    "meets_radical": subspace_json(&q.field, &rep.label_a.meets_radical),
                },
                "label_b": {
                    "component": rep.label_b.component,
                    "meets_radical": subspace_json(&q.field, &rep.label_b.meets_radical),
                },
                "labels_equal": rep.labels_equal,
                "equivalent": rep.equivalence.pair.is_some(),
                "agree": rep.agree,
            });
            if rep.equivalence.probabilistic {
                report.warn("equivalence search was probabilistic over a small field");
            }
        }
    }
    Ok(())
}
