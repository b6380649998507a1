//! Six independent characterisations of local inversion for a regular
//! semigroup. They are computed by unrelated routes and must agree.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{natural_partial_order, sandwich_semigroup, BiorderedSet};
use crate::error::{Error, Result};
use crate::semigroup::Semigroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalInverseReport {
    /// Every intrinsic sandwich set of `E(S)` is a singleton.
    pub pseudo_semilattice: bool,
    /// `eSe` is an inverse semigroup for every idempotent `e`.
    pub locally_inverse: bool,
    /// `ω(e)` is a semilattice (`ω^r = ω^l` on it) for every `e`.
    pub omega_ideals_are_semilattices: bool,
    /// Every sandwich set computed in `S` is a singleton.
    pub sandwich_singletons: bool,
    /// The natural partial order is compatible with multiplication.
    pub order_compatible: bool,
    /// Below any `x ≤ y`, each element of `L_y` (resp. `R_y`) has exactly one
    /// element of `L_x` (resp. `R_x`) beneath it.
    pub unique_bounded_pairs: bool,
    /// First counterexample (semigroup elements) for each failing condition.
    pub witnesses: BTreeMap<&'static str, Vec<usize>>,
}

impl LocalInverseReport {
    pub fn conditions(&self) -> [(&'static str, bool); 6] {
        [
            ("pseudo_semilattice", self.pseudo_semilattice),
            ("locally_inverse", self.locally_inverse),
            (
                "omega_ideals_are_semilattices",
                self.omega_ideals_are_semilattices,
            ),
            ("sandwich_singletons", self.sandwich_singletons),
            ("order_compatible", self.order_compatible),
            ("unique_bounded_pairs", self.unique_bounded_pairs),
        ]
    }

    pub fn all_agree(&self) -> bool {
        let c = self.conditions();
        c.iter().all(|&(_, v)| v == c[0].1)
    }

    /// The common verdict.
    pub fn holds(&self) -> bool {
        self.pseudo_semilattice
    }
}

/// Evaluates all six conditions and fails with a witness if they disagree.
pub fn classify_locally_inverse(s: &Semigroup) -> Result<LocalInverseReport> {
    let report = evaluate(s)?;
    if !report.all_agree() {
        let verdicts: Vec<String> = report
            .conditions()
            .iter()
            .map(|(n, v)| format!("{n}={v}"))
            .collect();
        return Err(Error::violation(
            "local inverse characterisations",
            format!("{}; witnesses {:?}", verdicts.join(" "), report.witnesses),
        ));
    }
    Ok(report)
}

/// All six conditions without the agreement check.
pub fn evaluate(s: &Semigroup) -> Result<LocalInverseReport> {
    s.require_regular()?;
    let e = BiorderedSet::extract(s);
    let origin = e.origin().expect("extracted").to_vec();
    let mut witnesses = BTreeMap::new();
    let mut record = |name, w: Option<Vec<usize>>| match w {
        Some(w) => {
            witnesses.insert(name, w);
            false
        }
        None => true,
    };

    let pseudo_semilattice = record(
        "pseudo_semilattice",
        pairs(e.size())
            .find_map(|(a, b)| (e.sandwich(a, b).len() != 1).then(|| vec![origin[a], origin[b]])),
    );
    let locally_inverse = record("locally_inverse", local_submonoid_witness(s));
    let omega_ideals_are_semilattices = record(
        "omega_ideals_are_semilattices",
        e.elements().find_map(|a| {
            let ideal = e.omega_ideal(a);
            ideal.iter().find_map(|&f| {
                ideal
                    .iter()
                    .find(|&&g| e.omega_r(f, g) != e.omega_l(f, g))
                    .map(|&g| vec![origin[a], origin[f], origin[g]])
            })
        }),
    );
    let sandwich_singletons = record(
        "sandwich_singletons",
        pairs(e.size()).find_map(|(a, b)| {
            let (x, y) = (origin[a], origin[b]);
            let sw = sandwich_semigroup(s, x, y).expect("idempotent arguments");
            (sw.len() != 1).then(|| vec![x, y])
        }),
    );
    let order = natural_partial_order(s)?;
    let order_compatible = record(
        "order_compatible",
        order.pairs().find_map(|(x, y)| {
            s.elements()
                .find(|&z| {
                    !order.holds(s.mul(z, x), s.mul(z, y)) || !order.holds(s.mul(x, z), s.mul(y, z))
                })
                .map(|z| vec![x, y, z])
        }),
    );
    let g = s.green();
    let unique_bounded_pairs = record(
        "unique_bounded_pairs",
        order.pairs().find_map(|(x, y)| {
            let unique = |class_of: &dyn Fn(usize) -> Vec<usize>| {
                class_of(y).into_iter().find(|&y1| {
                    class_of(x)
                        .into_iter()
                        .filter(|&x1| order.holds(x1, y1))
                        .count()
                        != 1
                })
            };
            let l_class = |z: usize| g.l().blocks()[g.l().block_of(z)].clone();
            let r_class = |z: usize| g.r().blocks()[g.r().block_of(z)].clone();
            unique(&l_class)
                .or_else(|| unique(&r_class))
                .map(|y1| vec![x, y, y1])
        }),
    );

    Ok(LocalInverseReport {
        pseudo_semilattice,
        locally_inverse,
        omega_ideals_are_semilattices,
        sandwich_singletons,
        order_compatible,
        unique_bounded_pairs,
        witnesses,
    })
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)))
}

/// An idempotent `e` and an element of `eSe` without exactly one inverse in `eSe`.
fn local_submonoid_witness(s: &Semigroup) -> Option<Vec<usize>> {
    for &e in s.idempotents() {
        let mut local: Vec<usize> = s.elements().map(|x| s.mul(s.mul(e, x), e)).collect();
        local.sort_unstable();
        local.dedup();
        for &x in &local {
            let count = local.iter().filter(|&&y| s.is_inverse_pair(x, y)).count();
            if count != 1 {
                return Some(vec![e, x]);
            }
        }
    }
    None
}
