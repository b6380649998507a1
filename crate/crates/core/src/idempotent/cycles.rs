use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::biorder::{AxiomStatus, BiorderedSet};
use crate::error::{Error, Result};
use crate::fundamental::{tau_iso, OmegaIso};
use crate::groupoid::{singular_squares, EChain};

/// Upper bound on chain prefixes visited per base point while enumerating
/// τ-commutative cycles.
pub const CYCLE_PREFIX_LIMIT: usize = 2_000_000;

/// A based E-cycle: a reduced E-chain whose first and last vertices agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ECycle(EChain);

impl ECycle {
    pub fn new(b: &BiorderedSet, vertices: Vec<usize>) -> Result<Self> {
        Self::from_chain(EChain::new(b, vertices)?)
    }

    pub fn from_chain(chain: EChain) -> Result<Self> {
        if chain.dom() != chain.cod() {
            return Err(Error::InvalidChain(format!("{chain} is not closed")));
        }
        Ok(ECycle(chain))
    }

    pub fn base(&self) -> usize {
        self.0.dom()
    }

    pub fn chain(&self) -> &EChain {
        &self.0
    }

    pub fn vertices(&self) -> &[usize] {
        self.0.vertices()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_trivial()
    }

    pub fn inverse(&self) -> Self {
        ECycle(self.0.inverse())
    }

    /// `f∗γ` for `f ω e`; `None` when the restriction is not closed.
    pub fn restrict(&self, b: &BiorderedSet, f: usize) -> Result<Option<Self>> {
        let r = self.0.restrict_left(b, f)?;
        Ok((r.dom() == r.cod()).then_some(ECycle(r)))
    }
}

impl fmt::Display for ECycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Provenance {
    Gamma0,
    GammaTau,
    UserSupplied,
}

/// A set of nontrivial based cycles of at most `bound` vertices. Trivial
/// cycles are members implicitly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleSet {
    bound: usize,
    provenance: Provenance,
    cycles: BTreeSet<ECycle>,
}

impl CycleSet {
    pub fn new(
        bound: usize,
        provenance: Provenance,
        cycles: impl IntoIterator<Item = ECycle>,
    ) -> Result<Self> {
        let cycles: BTreeSet<ECycle> = cycles.into_iter().filter(|c| !c.is_trivial()).collect();
        if let Some(long) = cycles.iter().find(|c| c.len() > bound) {
            return Err(Error::CapExceeded {
                what: "E-cycle length",
                limit: bound,
                actual: long.len(),
            });
        }
        Ok(CycleSet {
            bound,
            provenance,
            cycles,
        })
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ECycle> {
        self.cycles.iter()
    }

    pub fn contains(&self, c: &ECycle) -> bool {
        c.is_trivial() || self.cycles.contains(c)
    }

    pub fn is_subset(&self, other: &CycleSet) -> bool {
        self.cycles.iter().all(|c| other.contains(c))
    }

    pub fn based_at(&self, e: usize) -> impl Iterator<Item = &ECycle> {
        self.cycles.iter().filter(move |c| c.base() == e)
    }

    pub fn without(&self, c: &ECycle) -> CycleSet {
        let mut out = self.clone();
        out.cycles.remove(c);
        out.provenance = Provenance::UserSupplied;
        out
    }

    /// One cycle per line as space-separated vertex indices.
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        for c in &self.cycles {
            let line: Vec<String> = c.vertices().iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Reads the line format of [`CycleSet::to_file_string`]; blank lines and
    /// `#` comments are skipped.
    pub fn parse(b: &BiorderedSet, bound: usize, text: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let vertices = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|e| Error::parse(i + 1, format!("{t:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()?;
            let cycle = ECycle::new(b, vertices).map_err(|e| Error::parse(i + 1, e.to_string()))?;
            cycles.push(cycle);
        }
        CycleSet::new(bound, Provenance::UserSupplied, cycles)
    }
}

/// Boundaries `[e, f, h, g, e]` of the singular squares `(e f; g h)` and
/// their inverses.
pub fn gamma0(b: &BiorderedSet, bound: usize) -> Result<CycleSet> {
    if bound < 5 {
        return Err(Error::InvalidParameter(format!(
            "cycle bound {bound} is below 5"
        )));
    }
    let mut cycles = Vec::new();
    for sq in singular_squares(b) {
        let c = ECycle::new(b, sq.square.boundary().to_vec())?;
        cycles.push(c.inverse());
        cycles.push(c);
    }
    CycleSet::new(bound, Provenance::Gamma0, cycles)
}

/// `τ(e₁,e₂)τ(e₂,e₃)⋯τ(eₙ₋₁,eₙ)` as an ω-isomorphism `ω(e₁) → ω(eₙ)`.
pub fn tau_evaluate(b: &BiorderedSet, c: &EChain) -> Result<OmegaIso> {
    let v = c.vertices();
    let mut acc = OmegaIso::identity(b, v[0]);
    for w in v.windows(2) {
        acc = acc
            .then(&tau_iso(b, w[0], w[1])?)
            .expect("consecutive apexes agree");
    }
    Ok(acc)
}

pub fn is_tau_commutative(b: &BiorderedSet, c: &ECycle) -> Result<bool> {
    Ok(tau_evaluate(b, c.chain())?.is_identity())
}

fn tau_cycles_at(b: &BiorderedSet, e: usize, bound: usize) -> Result<Vec<ECycle>> {
    let mut out = Vec::new();
    let mut visited = 0usize;
    // (vertices, τ-composite from ω(e))
    let mut stack = vec![(vec![e], OmegaIso::identity(b, e))];
    while let Some((chain, acc)) = stack.pop() {
        visited += 1;
        if visited > CYCLE_PREFIX_LIMIT {
            return Err(Error::CapExceeded {
                what: "E-cycle prefixes per base point",
                limit: CYCLE_PREFIX_LIMIT,
                actual: visited,
            });
        }
        let last = *chain.last().expect("nonempty");
        if chain.len() > 1 && last == e && acc.is_identity() {
            out.push(ECycle::new(b, chain.clone())?);
        }
        if chain.len() == bound {
            continue;
        }
        for f in b.elements().rev() {
            if f == last || !b.chain_related(last, f) {
                continue;
            }
            if let [.., prev, _] = chain[..] {
                let r = b.r_related(prev, last) && b.r_related(last, f);
                let l = b.l_related(prev, last) && b.l_related(last, f);
                if r || l {
                    continue;
                }
            }
            let step = acc
                .then(&tau_iso(b, last, f)?)
                .expect("consecutive apexes agree");
            let mut next = chain.clone();
            next.push(f);
            stack.push((next, step));
        }
    }
    Ok(out)
}

/// Every nontrivial cycle of at most `bound` vertices whose τ-evaluation is
/// the identity of `ω(e)` at its base point `e`.
pub fn gamma_tau(b: &BiorderedSet, bound: usize) -> Result<CycleSet> {
    let per_base = b
        .elements()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|e| tau_cycles_at(b, e, bound))
        .collect::<Result<Vec<_>>>()?;
    CycleSet::new(bound, Provenance::GammaTau, per_base.into_iter().flatten())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProperReport {
    /// `Γ₀ ⊆ Γ ⊆ Γ_τ`; the witness is the offending cycle.
    pub p1: AxiomStatus,
    /// Closure under inversion; the witness is the cycle whose inverse is missing.
    pub p2: AxiomStatus,
    /// Closure under `f∗γ` for `f ω e`; the witness is `f` followed by `γ`.
    pub p3: AxiomStatus,
}

impl ProperReport {
    pub fn all_pass(&self) -> bool {
        self.p1.passed() && self.p2.passed() && self.p3.passed()
    }
}

fn status(w: Option<Vec<usize>>) -> AxiomStatus {
    w.map_or(AxiomStatus::Pass, AxiomStatus::Fail)
}

pub fn check_proper(b: &BiorderedSet, gamma: &CycleSet) -> Result<ProperReport> {
    let g0 = gamma0(b, gamma.bound().max(5))?;
    let mut p1 = g0
        .iter()
        .find(|c| !gamma.contains(c))
        .map(|c| c.vertices().to_vec());
    if p1.is_none() {
        for c in gamma.iter() {
            if !is_tau_commutative(b, c)? {
                p1 = Some(c.vertices().to_vec());
                break;
            }
        }
    }
    let p2 = gamma
        .iter()
        .find(|c| !gamma.contains(&c.inverse()))
        .map(|c| c.vertices().to_vec());
    let mut p3 = None;
    'outer: for c in gamma.iter() {
        for f in b.omega_ideal(c.base()) {
            let closed = c.restrict(b, f)?.is_some_and(|r| gamma.contains(&r));
            if !closed {
                let mut w = vec![f];
                w.extend_from_slice(c.vertices());
                p3 = Some(w);
                break 'outer;
            }
        }
    }
    Ok(ProperReport {
        p1: status(p1),
        p2: status(p2),
        p3: status(p3),
    })
}
