use std::collections::HashMap;

use serde::Serialize;

use super::cycles::{CycleSet, ECycle};
use crate::biorder::BiorderedSet;
use crate::error::{Error, Result};
use crate::groupoid::EChain;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MoveKind {
    /// `c₁c₂ ↦ c₁γc₂`, splitting at vertex `position`.
    Insert,
    /// Removes the occurrence of `γ` whose base sits at vertex `position`.
    Delete,
}

/// One rewriting step. A `reversed` step goes from `from` to `to` by undoing
/// the move that takes `to` to `from`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Step {
    pub from: EChain,
    pub to: EChain,
    pub kind: MoveKind,
    pub position: usize,
    pub cycle: ECycle,
    pub reversed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum OracleOutcome {
    Equivalent(Vec<Step>),
    /// `exhausted` means every chain reachable from one side was visited.
    NotFoundWithinBudget {
        explored: usize,
        exhausted: bool,
    },
}

impl OracleOutcome {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, OracleOutcome::Equivalent(_))
    }
}

pub fn apply_move(
    b: &BiorderedSet,
    chain: &EChain,
    kind: MoveKind,
    position: usize,
    cycle: &ECycle,
) -> Option<EChain> {
    let v = chain.vertices();
    if position >= v.len() || v[position] != cycle.base() {
        return None;
    }
    let g = cycle.vertices();
    let mut out = v[..=position].to_vec();
    match kind {
        MoveKind::Insert => {
            out.extend_from_slice(&g[1..]);
            out.extend_from_slice(&v[position + 1..]);
        }
        MoveKind::Delete => {
            let end = position + g.len();
            if end > v.len() || v[position..end] != *g {
                return None;
            }
            out.extend_from_slice(&v[end..]);
        }
    }
    EChain::new(b, out).ok()
}

type Move = (MoveKind, usize, ECycle);

fn neighbours(b: &BiorderedSet, gamma: &CycleSet, chain: &EChain) -> Vec<(EChain, Move)> {
    let mut out = Vec::new();
    for (i, &v) in chain.vertices().iter().enumerate() {
        for c in gamma.based_at(v) {
            for kind in [MoveKind::Insert, MoveKind::Delete] {
                if let Some(next) = apply_move(b, chain, kind, i, c) {
                    if &next != chain {
                        out.push((next, (kind, i, c.clone())));
                    }
                }
            }
        }
    }
    out
}

type Parents = HashMap<EChain, Option<(EChain, Move)>>;

fn assemble(fwd: &Parents, bwd: &Parents, meet: &EChain) -> Vec<Step> {
    let mut head = Vec::new();
    let mut at = meet.clone();
    while let Some(Some((parent, (kind, position, cycle)))) = fwd.get(&at) {
        head.push(Step {
            from: parent.clone(),
            to: at.clone(),
            kind: *kind,
            position: *position,
            cycle: cycle.clone(),
            reversed: false,
        });
        at = parent.clone();
    }
    head.reverse();
    let mut at = meet.clone();
    while let Some(Some((parent, (kind, position, cycle)))) = bwd.get(&at) {
        head.push(Step {
            from: at.clone(),
            to: parent.clone(),
            kind: *kind,
            position: *position,
            cycle: cycle.clone(),
            reversed: true,
        });
        at = parent.clone();
    }
    head
}

/// Bidirectional breadth-first search for a sequence of `Γ`-moves joining
/// `c` and `target`, visiting at most `budget` chains in total. Sound but
/// incomplete: moves only split at vertices of reduced chains.
pub fn chain_equiv_oracle(
    b: &BiorderedSet,
    gamma: &CycleSet,
    c: &EChain,
    target: &EChain,
    budget: usize,
) -> OracleOutcome {
    if c == target {
        return OracleOutcome::Equivalent(Vec::new());
    }
    let mut maps: [Parents; 2] = [HashMap::new(), HashMap::new()];
    maps[0].insert(c.clone(), None);
    maps[1].insert(target.clone(), None);
    let mut frontiers = [vec![c.clone()], vec![target.clone()]];
    loop {
        let explored = maps[0].len() + maps[1].len();
        if frontiers[0].is_empty() || frontiers[1].is_empty() {
            return OracleOutcome::NotFoundWithinBudget {
                explored,
                exhausted: true,
            };
        }
        let side = usize::from(frontiers[1].len() < frontiers[0].len());
        let layer = std::mem::take(&mut frontiers[side]);
        let mut next = Vec::new();
        for x in &layer {
            for (y, mv) in neighbours(b, gamma, x) {
                if maps[side].contains_key(&y) {
                    continue;
                }
                maps[side].insert(y.clone(), Some((x.clone(), mv)));
                if maps[1 - side].contains_key(&y) {
                    let (fwd, bwd) = (&maps[0], &maps[1]);
                    return OracleOutcome::Equivalent(assemble(fwd, bwd, &y));
                }
                if maps[0].len() + maps[1].len() >= budget {
                    return OracleOutcome::NotFoundWithinBudget {
                        explored: maps[0].len() + maps[1].len(),
                        exhausted: false,
                    };
                }
                next.push(y);
            }
        }
        frontiers[side] = next;
    }
}

/// Replays `path` and checks that it joins `c` to `target` with cycles of `gamma`.
pub fn verify_path(
    b: &BiorderedSet,
    gamma: &CycleSet,
    c: &EChain,
    target: &EChain,
    path: &[Step],
) -> bool {
    let mut at = c;
    for step in path {
        if &step.from != at || !gamma.contains(&step.cycle) {
            return false;
        }
        let (src, dst) = if step.reversed {
            (&step.to, &step.from)
        } else {
            (&step.from, &step.to)
        };
        if apply_move(b, src, step.kind, step.position, &step.cycle).as_ref() != Some(dst) {
            return false;
        }
        at = &step.to;
    }
    at == target
}

/// `(c∗h)(h∗d)` for the least `h ∈ S(cod c, dom d)`.
pub fn chain_product(b: &BiorderedSet, c: &EChain, d: &EChain) -> Result<EChain> {
    let (r, s) = (c.cod(), d.dom());
    let h = *b
        .sandwich(r, s)
        .first()
        .ok_or(Error::NotRegularBiorder(r, s))?;
    let left = c.restrict_right(b, h)?;
    let right = d.restrict_left(b, h)?;
    Ok(left
        .compose(b, &right)
        .expect("both restrictions meet at h"))
}

/// The chain representing a word over `E` in `G(E)/p`.
pub fn word_chain(b: &BiorderedSet, word: &[usize]) -> Result<EChain> {
    let (&first, rest) = word
        .split_first()
        .ok_or_else(|| Error::InvalidParameter("empty word".into()))?;
    let mut acc = EChain::trivial(first);
    for &e in rest {
        acc = chain_product(b, &acc, &EChain::trivial(e))?;
    }
    Ok(acc)
}

/// Co-bounded chains `c·ε(r, r')` and `ε(d, d')·c'` for the chains `c`, `c'`
/// of the two words; they are `Γ`-equivalent exactly when the relation holds
/// in the quotient by `Γ`.
pub fn relation_chains(b: &BiorderedSet, lhs: &[usize], rhs: &[usize]) -> Result<(EChain, EChain)> {
    let (c, c2) = (word_chain(b, lhs)?, word_chain(b, rhs)?);
    if !b.r_related(c.dom(), c2.dom()) || !b.l_related(c.cod(), c2.cod()) {
        return Err(Error::violation(
            "relation sides have R-related domains and L-related codomains",
            format!("{c} vs {c2}"),
        ));
    }
    let tail = EChain::new(b, vec![c.cod(), c2.cod()])?;
    let head = EChain::new(b, vec![c.dom(), c2.dom()])?;
    let x = c.compose(b, &tail).expect("shared codomain");
    let y = head.compose(b, &c2).expect("shared domain");
    Ok((x, y))
}

/// The oracle's verdict on one relation `lhs = rhs`, with a replayed path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub lhs: Vec<usize>,
    pub rhs: Vec<usize>,
    pub outcome: OracleOutcome,
    /// The returned path replays under [`verify_path`]; false when not found.
    pub verified: bool,
}

/// Runs [`chain_equiv_oracle`] on `e·f = e·h·f` for every `h ∈ S(e, f)`,
/// in `(e, f, h)` order.
pub fn confirm_sandwich_relations(
    b: &BiorderedSet,
    gamma: &CycleSet,
    budget: usize,
) -> Result<Vec<RelationCheck>> {
    b.require_regular()?;
    let mut out = Vec::new();
    for e in b.elements() {
        for f in b.elements() {
            for h in b.sandwich(e, f) {
                let (lhs, rhs) = (vec![e, f], vec![e, h, f]);
                let (x, y) = relation_chains(b, &lhs, &rhs)?;
                let outcome = chain_equiv_oracle(b, gamma, &x, &y, budget);
                let verified = match &outcome {
                    OracleOutcome::Equivalent(path) => verify_path(b, gamma, &x, &y, path),
                    OracleOutcome::NotFoundWithinBudget { .. } => false,
                };
                out.push(RelationCheck {
                    lhs,
                    rhs,
                    outcome,
                    verified,
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::idempotent::{gamma0, gamma_tau, tau_evaluate};
    use crate::semigroup::Family;

    fn biorder(f: Family) -> BiorderedSet {
        BiorderedSet::extract(&f.generate_default().unwrap())
    }

    #[test]
    fn identical_chains() {
        let b = biorder(Family::RectangularBand(2, 2));
        let g = gamma_tau(&b, 9).unwrap();
        let c = EChain::new(&b, vec![0, 1]).unwrap();
        assert_eq!(
            chain_equiv_oracle(&b, &g, &c, &c, 10),
            OracleOutcome::Equivalent(vec![])
        );
    }

    #[test]
    fn single_insertion() {
        let b = biorder(Family::RectangularBand(2, 2));
        let g = gamma_tau(&b, 5).unwrap();
        let gamma = g.based_at(0).next().unwrap().clone();
        let c = EChain::trivial(0);
        let c2 = gamma.chain().clone();
        let OracleOutcome::Equivalent(path) = chain_equiv_oracle(&b, &g, &c, &c2, 1000) else {
            panic!("not found");
        };
        assert_eq!(path.len(), 1);
        assert!(verify_path(&b, &g, &c, &c2, &path));
    }

    #[test]
    fn empty_set_separates_distinct_chains() {
        let b = biorder(Family::RectangularBand(2, 2));
        let g = gamma0(&b, 5).unwrap();
        let c = EChain::trivial(0);
        let c2 = gamma_tau(&b, 5)
            .unwrap()
            .based_at(0)
            .next()
            .unwrap()
            .chain()
            .clone();
        assert_eq!(
            chain_equiv_oracle(&b, &g, &c, &c2, 1000),
            OracleOutcome::NotFoundWithinBudget {
                explored: 2,
                exhausted: true
            }
        );
    }

    #[test]
    fn paths_replay_and_preserve_tau() {
        let b = biorder(Family::RectangularBand(2, 3));
        let g = gamma_tau(&b, 7).unwrap();
        let chains = crate::groupoid::chains_up_to(&b, 6);
        let mut found = 0;
        for c in chains.iter().step_by(7) {
            for d in chains.iter().step_by(11) {
                if c.dom() != d.dom() || c.cod() != d.cod() {
                    continue;
                }
                if let OracleOutcome::Equivalent(path) = chain_equiv_oracle(&b, &g, c, d, 2000) {
                    assert!(verify_path(&b, &g, c, d, &path));
                    assert_eq!(tau_evaluate(&b, c).unwrap(), tau_evaluate(&b, d).unwrap());
                    found += 1;
                }
            }
        }
        assert!(found > 0);
    }

    #[test]
    fn tampered_path_is_rejected() {
        let b = biorder(Family::RectangularBand(2, 2));
        let g = gamma_tau(&b, 5).unwrap();
        let c = EChain::trivial(0);
        let c2 = g.based_at(0).next().unwrap().chain().clone();
        let OracleOutcome::Equivalent(mut path) = chain_equiv_oracle(&b, &g, &c, &c2, 1000) else {
            panic!("not found");
        };
        path[0].position = 1;
        assert!(!verify_path(&b, &g, &c, &c2, &path));
    }

    #[test]
    fn sandwich_relations_confirmed() {
        for f in [
            Family::RectangularBand(2, 2),
            Family::Brandt(2),
            Family::FullTransformation(2),
        ] {
            let b = biorder(f);
            let g = gamma0(&b, 12).unwrap();
            let checks = confirm_sandwich_relations(&b, &g, 1000).unwrap();
            let expected: usize = b
                .elements()
                .flat_map(|e| b.elements().map(move |f| (e, f)))
                .map(|(e, f)| b.sandwich(e, f).len())
                .sum();
            assert_eq!(checks.len(), expected);
            assert!(checks.iter().all(|c| c.verified), "{f}");
        }
    }

    #[test]
    fn word_chains() {
        let b2 = biorder(Family::Brandt(2));
        for e in b2.elements() {
            assert_eq!(word_chain(&b2, &[e, e]).unwrap(), EChain::trivial(e));
        }
        let rb = biorder(Family::RectangularBand(2, 2));
        for e in rb.elements() {
            for f in rb.elements() {
                let c = word_chain(&rb, &[e, f]).unwrap();
                let h = rb.sandwich(e, f)[0];
                assert_eq!(c.vertices().iter().filter(|&&v| v == h).count(), 1);
                let (x, y) = relation_chains(&rb, &[e, f], &[e, h, f]).unwrap();
                assert_eq!(x, y);
            }
        }
    }
}
