use std::collections::BTreeSet;

use regsemi::biorder::{biorder_isomorphism, classify_locally_inverse};
use regsemi::category::{build_ls, cone_semigroup};
use regsemi::fundamental::fundamental_image;
use regsemi::groupoid::{build_gs, check_inductive_axioms, reconstruct, singular_squares};
use regsemi::{BiorderedSet, Caps, Error, Result, Semigroup};
use serde_json::{json, Value};

use crate::report::Timings;

/// Runs `f`; mathematical violations become a failing block and cap
/// overruns a skipped block. Input errors propagate.
fn section(failed: &mut bool, f: impl FnOnce() -> Result<Value>) -> Result<Value> {
    match f() {
        Ok(v) => {
            if v.get("pass") == Some(&Value::Bool(false)) {
                *failed = true;
            }
            Ok(v)
        }
        Err(e @ Error::CapExceeded { .. }) => Ok(json!({ "skipped": e.to_string() })),
        Err(
            e @ (Error::TheoremViolation { .. }
            | Error::WellDefinednessViolation(_)
            | Error::AxiomFailure { .. }
            | Error::FactorizationNotFound(_)),
        ) => {
            *failed = true;
            Ok(json!({ "pass": false, "violation": e.to_string() }))
        }
        Err(e) => Err(e),
    }
}

fn class_count(s: &Semigroup, class: impl Fn(usize) -> usize) -> usize {
    s.elements().map(class).collect::<BTreeSet<_>>().len()
}

/// The full analysis of one semigroup. The flag is true when some section
/// surfaced a violation. Sections that need regularity are `null` otherwise.
pub fn analyze(s: &Semigroup, caps: &Caps, timing: &mut Timings) -> Result<(Value, bool)> {
    let mut failed = false;
    let regular = s.is_regular();
    let g = s.green();
    let semigroup = json!({
        "order": s.order(),
        "idempotents": s.idempotents().len(),
        "regular": regular,
        "inverse": s.is_inverse(),
        "band": s.is_band(),
        "identity": s.identity(),
        "zero": s.zero(),
        "fundamental": s.is_fundamental(),
        "classes": {
            "R": class_count(s, |x| g.r_class(x)),
            "L": class_count(s, |x| g.l_class(x)),
            "H": class_count(s, |x| g.h_class(x)),
            "D": class_count(s, |x| g.d_class(x)),
        },
    });

    let b = BiorderedSet::extract(s);
    let biorder = timing.time("biorder", || {
        section(&mut failed, || {
            let axioms = b.verify_axioms();
            Ok(json!({
                "pass": axioms.all_biorder_pass() && (!regular || axioms.r.passed()),
                "size": b.size(),
                "basic_products": b.basic_product_count(),
                "semilattice": b.is_semilattice(),
                "axioms": axioms,
            }))
        })
    })?;

    let mut out = json!({ "semigroup": semigroup, "biorder": biorder });
    if !regular {
        for k in ["local_inverse", "fundamental", "groupoid", "category"] {
            out[k] = Value::Null;
        }
        return Ok((out, failed));
    }

    out["local_inverse"] = timing.time("local_inverse", || {
        section(&mut failed, || {
            let r = classify_locally_inverse(s)?;
            Ok(json!({ "pass": r.all_agree(), "holds": r.holds(), "conditions": r }))
        })
    })?;

    out["fundamental"] = timing.time("fundamental", || {
        section(&mut failed, || {
            let img = fundamental_image(s)?;
            let t = img.quotient.semigroup();
            let tb = BiorderedSet::extract(t);
            let iso = biorder_isomorphism(&b, &tb);
            let pass = t.is_regular()
                && t.is_fundamental()
                && iso.is_some()
                && img.is_injective() == s.is_fundamental();
            Ok(json!({
                "pass": pass,
                "quotient_order": t.order(),
                "quotient_fundamental": t.is_fundamental(),
                "biorder_isomorphism": iso,
                "image_order": img.image.order(),
                "representation": img.map,
                "injective": img.is_injective(),
            }))
        })
    })?;

    out["groupoid"] = timing.time("groupoid", || {
        section(&mut failed, || {
            let gs = build_gs(s)?;
            let inductive = check_inductive_axioms(s)?;
            let r = reconstruct(s)?;
            Ok(json!({
                "pass": inductive.all_pass(),
                "morphisms": gs.morphisms().len(),
                "singular_squares": singular_squares(&b).len(),
                "inductive": inductive,
                "reconstruction": { "classes": r.classes.len(), "isomorphism": r.class_of_element },
            }))
        })
    })?;

    out["category"] = timing.time("category", || {
        section(&mut failed, || {
            let c = build_ls(s)?;
            let cat = c.category();
            let nc = cat.verify_nc();
            let cones = section(&mut false, || {
                let t = cone_semigroup(cat, caps.cone_objects, caps.elements)?;
                Ok(json!({ "cones": t.cones.len(), "regular": t.semigroup.is_regular() }))
            })?;
            let cones_ok = cones.get("regular") != Some(&Value::Bool(false));
            Ok(json!({
                "pass": nc.all_pass() && cones_ok,
                "objects": cat.object_count(),
                "morphisms": cat.morphism_count(),
                "nc": nc,
                "cone_semigroup": cones,
            }))
        })
    })?;
    Ok((out, failed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use regsemi::Family;

    #[test]
    fn brandt_report() {
        let s = Family::Brandt(2).generate_default().unwrap();
        let (v, failed) = analyze(&s, &Caps::default(), &mut Timings::default()).unwrap();
        assert!(!failed);
        assert_eq!(v["semigroup"]["order"], 5);
        assert_eq!(v["semigroup"]["regular"], true);
        assert_eq!(v["semigroup"]["fundamental"], true);
        assert_eq!(v["category"]["pass"], true);
    }

    #[test]
    fn cone_cap_skips() {
        let s = Family::FullTransformation(3).generate_default().unwrap();
        let (v, failed) = analyze(&s, &Caps::default(), &mut Timings::default()).unwrap();
        assert!(!failed);
        assert!(v["category"]["cone_semigroup"]["skipped"].is_string());
    }

    #[test]
    fn non_regular_sections_are_null() {
        let s = Family::NullPlusZero(2).generate_default().unwrap();
        let (v, _) = analyze(&s, &Caps::default(), &mut Timings::default()).unwrap();
        assert_eq!(v["semigroup"]["regular"], false);
        assert!(v["groupoid"].is_null());
    }
}
