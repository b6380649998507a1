use serde::Serialize;

use super::BiorderedSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "witness", rename_all = "snake_case")]
pub enum AxiomStatus {
    Pass,
    /// Indices in `E` exhibiting the failure, in the order the axiom names them.
    Fail(Vec<usize>),
}

impl AxiomStatus {
    pub fn passed(&self) -> bool {
        matches!(self, AxiomStatus::Pass)
    }

    fn from_witness(w: Option<Vec<usize>>) -> Self {
        w.map_or(AxiomStatus::Pass, AxiomStatus::Fail)
    }
}

/// One status per axiom. Dual forms are reported under the same name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub b1: AxiomStatus,
    pub b2: AxiomStatus,
    pub b3: AxiomStatus,
    pub b4: AxiomStatus,
    pub b5: AxiomStatus,
    /// Regularity: all sandwich sets nonempty.
    pub r: AxiomStatus,
}

impl AxiomReport {
    pub fn all_biorder_pass(&self) -> bool {
        self.first_biorder_failure().is_none()
    }

    pub fn all_pass(&self) -> bool {
        self.all_biorder_pass() && self.r.passed()
    }

    pub fn first_biorder_failure(&self) -> Option<(&'static str, &[usize])> {
        [
            ("B1", &self.b1),
            ("B2", &self.b2),
            ("B3", &self.b3),
            ("B4", &self.b4),
            ("B5", &self.b5),
        ]
        .into_iter()
        .find_map(|(name, st)| match st {
            AxiomStatus::Fail(w) => Some((name, w.as_slice())),
            AxiomStatus::Pass => None,
        })
    }

    pub fn entries(&self) -> [(&'static str, &AxiomStatus); 6] {
        [
            ("B1", &self.b1),
            ("B2", &self.b2),
            ("B3", &self.b3),
            ("B4", &self.b4),
            ("B5", &self.b5),
            ("R", &self.r),
        ]
    }
}

pub(super) fn check(e: &BiorderedSet) -> AxiomReport {
    let b1 = b1(e);
    // Later axioms read basic products; on a malformed domain they could be
    // missing, which the checks below report as failures of their own.
    AxiomReport {
        b2: AxiomStatus::from_witness(b2(e)),
        b3: AxiomStatus::from_witness(b3(e)),
        b4: AxiomStatus::from_witness(b4(e)),
        b5: AxiomStatus::from_witness(b5(e)),
        r: AxiomStatus::from_witness(e.regularity_witness().map(|(a, b)| vec![a, b])),
        b1: AxiomStatus::from_witness(b1),
    }
}

fn b1(e: &BiorderedSet) -> Option<Vec<usize>> {
    for a in e.elements() {
        for b in e.elements() {
            let should = e.omega_r(a, b) || e.omega_r(b, a) || e.omega_l(a, b) || e.omega_l(b, a);
            if should != e.product(a, b).is_some() {
                return Some(vec![a, b]);
            }
        }
    }
    None
}

fn b2(e: &BiorderedSet) -> Option<Vec<usize>> {
    for a in e.elements() {
        for f in e.elements() {
            if e.omega_l(f, a) {
                match e.product(a, f) {
                    Some(af) if e.l_related(f, af) && e.omega(af, a) => {}
                    _ => return Some(vec![a, f]),
                }
            }
            if e.omega_r(f, a) {
                match e.product(f, a) {
                    Some(fa) if e.r_related(f, fa) && e.omega(fa, a) => {}
                    _ => return Some(vec![a, f]),
                }
            }
        }
    }
    None
}

fn b3(e: &BiorderedSet) -> Option<Vec<usize>> {
    let p = |x, y| e.product(x, y);
    for a in e.elements() {
        for f in e.elements() {
            for g in e.elements() {
                // g ω^r f, f,g ω^l a  ⇒  ag ω^r af, gf ω^l a, a(gf) = (ag)(af)
                if e.omega_r(g, f) && e.omega_l(f, a) && e.omega_l(g, a) {
                    let ok = (|| {
                        let (ag, af, gf) = (p(a, g)?, p(a, f)?, p(g, f)?);
                        Some(e.omega_r(ag, af) && e.omega_l(gf, a) && p(a, gf)? == p(ag, af)?)
                    })();
                    if ok != Some(true) {
                        return Some(vec![a, f, g]);
                    }
                }
                // g ω^l f, f,g ω^r a  ⇒  ga ω^l fa, fg ω^r a, (fg)a = (fa)(ga)
                if e.omega_l(g, f) && e.omega_r(f, a) && e.omega_r(g, a) {
                    let ok = (|| {
                        let (ga, fa, fg) = (p(g, a)?, p(f, a)?, p(f, g)?);
                        Some(e.omega_l(ga, fa) && e.omega_r(fg, a) && p(fg, a)? == p(fa, ga)?)
                    })();
                    if ok != Some(true) {
                        return Some(vec![a, f, g]);
                    }
                }
            }
        }
    }
    None
}

fn b4(e: &BiorderedSet) -> Option<Vec<usize>> {
    let p = |x, y| e.product(x, y);
    for a in e.elements() {
        for f in e.elements() {
            for g in e.elements() {
                // g ω^l f ω^l a  ⇒  fg = f(ag)
                if e.omega_l(g, f) && e.omega_l(f, a) {
                    let ok = (|| Some(p(f, g)? == p(f, p(a, g)?)?))();
                    if ok != Some(true) {
                        return Some(vec![a, f, g]);
                    }
                }
                // g ω^r f ω^r a  ⇒  gf = (ga)f
                if e.omega_r(g, f) && e.omega_r(f, a) {
                    let ok = (|| Some(p(g, f)? == p(p(g, a)?, f)?))();
                    if ok != Some(true) {
                        return Some(vec![a, f, g]);
                    }
                }
            }
        }
    }
    None
}

fn b5(e: &BiorderedSet) -> Option<Vec<usize>> {
    let n = e.size();
    for a in 0..n {
        for f in 0..n {
            for g in 0..n {
                // f,g ω^l a  ⇒  S(af, ag) = a S(f, g)
                if e.omega_l(f, a) && e.omega_l(g, a) {
                    let ok = (|| {
                        let (af, ag) = (e.product(a, f)?, e.product(a, g)?);
                        let mut lhs = e.sandwich(af, ag);
                        let mut rhs = e
                            .sandwich(f, g)
                            .into_iter()
                            .map(|h| e.product(a, h))
                            .collect::<Option<Vec<_>>>()?;
                        lhs.sort_unstable();
                        rhs.sort_unstable();
                        rhs.dedup();
                        Some(lhs == rhs)
                    })();
                    if ok != Some(true) {
                        return Some(vec![a, f, g]);
                    }
                }
                // f,g ω^r a  ⇒  S(fa, ga) = S(f, g) a
                if e.omega_r(f, a) && e.omega_r(g, a) {
                    let ok = (|| {
                        let (fa, ga) = (e.product(f, a)?, e.product(g, a)?);
                        let mut lhs = e.sandwich(fa, ga);
                        let mut rhs = e
                            .sandwich(f, g)
                            .into_iter()
                            .map(|h| e.product(h, a))
                            .collect::<Option<Vec<_>>>()?;
                        lhs.sort_unstable();
                        rhs.sort_unstable();
                        rhs.dedup();
                        Some(lhs == rhs)
                    })();
                    if ok != Some(true) {
                        return Some(vec![a, f, g]);
                    }
                }
            }
        }
    }
    None
}
