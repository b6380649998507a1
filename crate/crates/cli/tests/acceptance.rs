//! The acceptance suite: nine criteria, one PASS/FAIL line each. Runs with
//! `cargo test -p regsemi-cli --test acceptance`; exits non-zero if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use regsemi::biorder::{classify_locally_inverse, sandwich_coherence};
use regsemi::category::{build_ls, category_isomorphism, cone_product, cone_semigroup};
use regsemi::groupoid::{build_gs, check_inductive_axioms, reconstruct, singular_squares};
use regsemi::idempotent::{check_proper, confirm_sandwich_relations, gamma0, gamma_tau};
use regsemi::semigroup::{are_isomorphic, enumerate_corpus};
use regsemi::{BiorderedSet, Caps, Family, Semigroup};
use regsemi_cli::checks::fundamental_check;
use regsemi_cli::report::strip_timing;

type Verdict = Result<String, String>;

/// Name, time budget in seconds, and the check.
type Criterion = (&'static str, u64, fn() -> Verdict);

fn corpus() -> Vec<Semigroup> {
    enumerate_corpus(4).expect("order 4 is within the corpus limit")
}

fn regular_corpus() -> Vec<Semigroup> {
    corpus().into_iter().filter(|s| s.is_regular()).collect()
}

fn build(f: Family) -> Semigroup {
    f.generate_default().expect("family within caps")
}

fn ensure(cond: bool, witness: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(witness())
    }
}

fn axiom_suite() -> Verdict {
    let families = [
        Family::FullTransformation(2),
        Family::FullTransformation(3),
        Family::SymmetricInverse(2),
        Family::Brandt(2),
        Family::RectangularBand(2, 2),
        Family::ChainSemilattice(2),
        Family::ChainSemilattice(3),
        Family::MatrixMonoid { dim: 2, field: 2 },
    ];
    let mut inputs: Vec<(String, Semigroup)> = corpus()
        .into_iter()
        .enumerate()
        .map(|(i, s)| (format!("corpus #{i}"), s))
        .collect();
    inputs.extend(families.iter().map(|f| (f.to_string(), build(*f))));
    let mut regular = 0;
    for (name, s) in &inputs {
        let r = BiorderedSet::extract(s).verify_axioms();
        if let Some((axiom, w)) = r.first_biorder_failure() {
            return Err(format!("{name}: {axiom} fails at {w:?}"));
        }
        if s.is_regular() {
            regular += 1;
            ensure(r.r.passed(), || format!("{name}: (R) fails: {:?}", r.r))?;
        }
    }
    Ok(format!("{} semigroups, {regular} regular", inputs.len()))
}

fn sandwich_suite() -> Verdict {
    let mut pairs = 0;
    let mut inverse_instances = 0;
    let mut failures = Vec::new();
    for (i, s) in corpus().iter().enumerate() {
        let c = sandwich_coherence(s);
        pairs += c.pairs;
        inverse_instances += c.inverse_instances;
        if let Some((e, f)) = c.route_mismatch {
            failures.push(format!(
                "corpus #{i} (regular={}) idempotents ({e}, {f}), table {:?}",
                s.is_regular(),
                s.rows()
            ));
        }
        if let Some(w) = c.inverse_failure {
            failures.push(format!(
                "corpus #{i}: f(ef)'e outside the sandwich set at {w:?}"
            ));
        }
    }
    if !failures.is_empty() {
        return Err(format!(
            "{} mismatch(es) between table and biorder sandwich sets: {}",
            failures.len(),
            failures.join("; ")
        ));
    }
    Ok(format!(
        "{pairs} idempotent pairs, {inverse_instances} inverse instances"
    ))
}

fn fundamental_suite() -> Verdict {
    let mut families = vec![Family::Brandt(2), Family::FullTransformation(2)];
    families.extend((1..=4).map(Family::ChainSemilattice));
    for p in 1..=3 {
        for q in 1..=3 {
            families.push(Family::RectangularBand(p, q));
        }
    }
    for f in &families {
        let b = BiorderedSet::extract(&build(*f));
        let out = fundamental_check(&b, 0).map_err(|e| format!("{f}: {e}"))?;
        ensure(out.status == regsemi_cli::checks::Status::Pass, || {
            format!("{f}: {}", out.detail)
        })?;
    }
    Ok(format!(
        "{} biorders, 3 seeded re-runs each",
        families.len()
    ))
}

fn roundtrip_suite() -> Verdict {
    let mut inputs: Vec<(String, Semigroup)> = regular_corpus()
        .into_iter()
        .enumerate()
        .map(|(i, s)| (format!("regular corpus #{i}"), s))
        .collect();
    let mut families = vec![
        Family::Brandt(2),
        Family::FullTransformation(2),
        Family::SymmetricInverse(2),
    ];
    for p in 1..=2 {
        for q in 1..=3 {
            families.push(Family::RectangularBand(p, q));
        }
    }
    inputs.extend(families.iter().map(|f| (f.to_string(), build(*f))));
    for (name, s) in &inputs {
        let r = reconstruct(s).map_err(|e| format!("{name}: {e}"))?;
        ensure(are_isomorphic(s, &r.semigroup).is_some(), || {
            format!("{name}: not isomorphic")
        })?;
    }
    Ok(format!("{} semigroups", inputs.len()))
}

fn locally_inverse_suite() -> Verdict {
    let members = regular_corpus();
    let mut holds = 0;
    for (i, s) in members.iter().enumerate() {
        let r = classify_locally_inverse(s).map_err(|e| format!("regular corpus #{i}: {e}"))?;
        holds += usize::from(r.holds());
    }
    Ok(format!(
        "{} regular members, {holds} locally inverse",
        members.len()
    ))
}

fn inductive_suite() -> Verdict {
    let members = regular_corpus();
    let mut semilattices = 0;
    for (i, s) in members.iter().enumerate() {
        let r = check_inductive_axioms(s).map_err(|e| format!("regular corpus #{i}: {e}"))?;
        ensure(r.all_pass(), || format!("regular corpus #{i}: {r:?}"))?;
        let b = BiorderedSet::extract(s);
        if b.is_semilattice() && s.is_band() {
            semilattices += 1;
            // G(E) is trivial: every morphism of G(S) is an identity
            let gs = build_gs(s).map_err(|e| e.to_string())?;
            ensure(gs.morphisms().len() == b.size(), || {
                format!("semilattice #{i}: nontrivial G(S)")
            })?;
            ensure(singular_squares(&b).is_empty(), || {
                format!("semilattice #{i}: singular squares")
            })?;
        }
    }
    ensure(semilattices > 0, || "no semilattice in the corpus".into())?;
    Ok(format!(
        "{} regular members, {semilattices} semilattices",
        members.len()
    ))
}

fn proper_suite() -> Verdict {
    const BOUND: usize = 12;
    let caps = Caps::default();
    let mut biorders: Vec<(String, BiorderedSet)> = regular_corpus()
        .iter()
        .enumerate()
        .map(|(i, s)| (format!("regular corpus #{i}"), BiorderedSet::extract(s)))
        .collect();
    for (name, b) in &biorders {
        let g0 = gamma0(b, BOUND).map_err(|e| format!("{name}: {e}"))?;
        let tau = gamma_tau(b, BOUND).map_err(|e| format!("{name}: {e}"))?;
        ensure(g0.is_subset(&tau), || format!("{name}: Γ₀ ⊄ Γ_τ"))?;
        for (label, g) in [("Γ₀", &g0), ("Γ_τ", &tau)] {
            let r = check_proper(b, g).map_err(|e| format!("{name}: {e}"))?;
            ensure(r.all_pass(), || {
                format!("{name}: {label} not proper: {r:?}")
            })?;
        }
    }
    let families = [
        Family::Brandt(2),
        Family::FullTransformation(2),
        Family::SymmetricInverse(2),
        Family::RectangularBand(2, 2),
        Family::RectangularBand(2, 3),
        Family::ChainSemilattice(2),
        Family::ChainSemilattice(3),
    ];
    biorders.extend(
        families
            .iter()
            .map(|f| (f.to_string(), BiorderedSet::extract(&build(*f)))),
    );
    let mut relations = 0;
    for (name, b) in biorders.iter().filter(|(_, b)| b.size() <= 6) {
        for g in [gamma0(b, BOUND), gamma_tau(b, BOUND)] {
            let g = g.map_err(|e| format!("{name}: {e}"))?;
            let checks = confirm_sandwich_relations(b, &g, caps.oracle_budget)
                .map_err(|e| format!("{name}: {e}"))?;
            if let Some(c) = checks.iter().find(|c| !c.verified) {
                return Err(format!(
                    "{name}: {:?} = {:?} not confirmed: {:?}",
                    c.lhs, c.rhs, c.outcome
                ));
            }
            relations += checks.len();
        }
    }
    Ok(format!(
        "{} biorders, {relations} oracle confirmations",
        biorders.len()
    ))
}

fn category_suite() -> Verdict {
    let caps = Caps::default();
    let members = regular_corpus();
    for (i, s) in members.iter().enumerate() {
        let c = build_ls(s).map_err(|e| format!("regular corpus #{i}: {e}"))?;
        let nc = c.category().verify_nc();
        ensure(nc.all_pass(), || format!("regular corpus #{i}: {nc:?}"))?;
        let t = cone_semigroup(c.category(), caps.cone_objects, caps.elements)
            .map_err(|e| format!("regular corpus #{i}: {e}"))?;
        ensure(t.semigroup.is_regular(), || {
            format!("regular corpus #{i}: T(C) not regular")
        })?;
    }
    let mut products = 0;
    for f in [
        Family::Brandt(2),
        Family::FullTransformation(2),
        Family::ChainSemilattice(2),
        Family::ChainSemilattice(3),
        Family::ChainSemilattice(4),
    ] {
        let s = build(f);
        let c = build_ls(&s).map_err(|e| format!("{f}: {e}"))?;
        let cat = c.category();
        let rho: Vec<_> = s
            .elements()
            .map(|a| c.principal_cone(a))
            .collect::<Result<_, _>>()
            .map_err(|e| format!("{f}: {e}"))?;
        for a in s.elements() {
            for b in s.elements() {
                let p = cone_product(cat, &rho[a], &rho[b]).map_err(|e| format!("{f}: {e}"))?;
                ensure(p == rho[s.mul(a, b)], || {
                    format!("{f}: ρ^{a}ρ^{b} ≠ ρ^(ab)")
                })?;
                products += 1;
            }
        }
    }
    for f in [Family::CyclicGroup(3), Family::ChainSemilattice(2)] {
        let c = build_ls(&build(f)).map_err(|e| format!("{f}: {e}"))?;
        let t = cone_semigroup(c.category(), caps.cone_objects, caps.elements)
            .map_err(|e| format!("{f}: {e}"))?;
        let back = build_ls(&t.semigroup).map_err(|e| format!("{f}: T(C): {e}"))?;
        let iso = category_isomorphism(c.category(), back.category());
        ensure(
            iso.is_some_and(|i| i.is_valid(c.category(), back.category())),
            || format!("{f}: 𝕃(T(C)) not isomorphic to C"),
        )?;
    }
    Ok(format!(
        "{} regular members, {products} cone products, 2 recoveries",
        members.len()
    ))
}

fn determinism() -> Verdict {
    let run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_regsemi"))
            .args(["corpus", "--max-order", "3"])
            .output()
            .map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(format!(
                "exit {:?}: {}",
                out.status.code(),
                String::from_utf8_lossy(&out.stderr)
            ));
        }
        let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
        Ok(text
            .lines()
            .map(|l| strip_timing(l).to_string())
            .collect::<Vec<_>>())
    };
    let (a, b) = (run()?, run()?);
    ensure(a.len() == b.len(), || {
        format!("{} vs {} lines", a.len(), b.len())
    })?;
    if let Some(i) = (0..a.len()).find(|&i| a[i] != b[i]) {
        return Err(format!("line {i} differs"));
    }
    Ok(format!("{} lines identical", a.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("biorder axioms on corpus and families", 60, axiom_suite),
        ("sandwich coherence", 60, sandwich_suite),
        ("fundamental semigroup of a biorder", 300, fundamental_suite),
        ("groupoid round trip", 300, roundtrip_suite),
        ("locally inverse equivalence", 60, locally_inverse_suite),
        ("inductive axioms", 120, inductive_suite),
        ("proper cycle sets and oracle", 300, proper_suite),
        ("normal categories and cones", 300, category_suite),
        ("corpus determinism", 60, determinism),
    ];
    let mut failed = 0;
    for (i, (name, limit, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut verdict = f();
        let elapsed = start.elapsed();
        if verdict.is_ok() && elapsed > Duration::from_secs(*limit) {
            verdict = Err(format!("over the {limit} s budget"));
        }
        let ms = elapsed.as_millis();
        match verdict {
            Ok(detail) => println!("criterion {} PASS  {name} ({ms} ms): {detail}", i + 1),
            Err(w) => {
                failed += 1;
                println!("criterion {} FAIL  {name} ({ms} ms): {w}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
