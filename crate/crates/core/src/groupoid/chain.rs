use std::fmt;

use serde::Serialize;

use crate::biorder::{AxiomStatus, BiorderedSet};
use crate::error::{Error, Result};

/// A reduced E-chain: consecutive vertices are `R`- or `L`-related and no
/// vertex is inessential.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EChain(Vec<usize>);

fn inessential(b: &BiorderedSet, a: usize, x: usize, c: usize) -> bool {
    (b.r_related(a, x) && b.r_related(x, c)) || (b.l_related(a, x) && b.l_related(x, c))
}

/// Removes repeated vertices and inessential vertices until none remain.
fn reduce(b: &BiorderedSet, mut v: Vec<usize>) -> Vec<usize> {
    loop {
        let before = v.len();
        v.dedup();
        let mut out: Vec<usize> = Vec::with_capacity(v.len());
        for (i, &x) in v.iter().enumerate() {
            let drop = i + 1 < v.len()
                && out
                    .last()
                    .is_some_and(|&prev| inessential(b, prev, x, v[i + 1]));
            if !drop {
                out.push(x);
            }
        }
        v = out;
        if v.len() == before {
            return v;
        }
    }
}

impl EChain {
    /// Reduces an E-sequence to its chain.
    pub fn new(b: &BiorderedSet, vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidChain("empty".into()));
        }
        if let Some(&x) = vertices.iter().find(|&&x| x >= b.size()) {
            return Err(Error::InvalidChain(format!("vertex {x} out of range")));
        }
        for w in vertices.windows(2) {
            if !b.chain_related(w[0], w[1]) {
                return Err(Error::InvalidChain(format!(
                    "{} and {} are neither R- nor L-related",
                    w[0], w[1]
                )));
            }
        }
        Ok(EChain(reduce(b, vertices)))
    }

    pub fn trivial(e: usize) -> Self {
        EChain(vec![e])
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.0.len() == 1
    }

    pub fn dom(&self) -> usize {
        self.0[0]
    }

    pub fn cod(&self) -> usize {
        *self.0.last().expect("chains are nonempty")
    }

    pub fn inverse(&self) -> Self {
        EChain(self.0.iter().rev().copied().collect())
    }

    /// `self` followed by `next`, when `cod(self) = dom(next)`.
    pub fn compose(&self, b: &BiorderedSet, next: &EChain) -> Option<Self> {
        if self.cod() != next.dom() {
            return None;
        }
        let mut v = self.0.clone();
        v.extend_from_slice(&next.0[1..]);
        Some(EChain(reduce(b, v)))
    }

    /// `h∗c = [h, h₁, …, hₙ]` with `hᵢ = eᵢ hᵢ₋₁ eᵢ`, for `h ω^r e₁` or
    /// `h ω^l e₁`. When `h ω e₁` this is the restriction to `h`.
    pub fn restrict_left(&self, b: &BiorderedSet, h: usize) -> Result<Self> {
        let e1 = self.dom();
        if !b.omega_r(h, e1) && !b.omega_l(h, e1) {
            return Err(Error::DomainConditionFailed(format!(
                "{h} is not below {e1} in either quasi-order"
            )));
        }
        let mut out = vec![h];
        let mut prev = h;
        for &e in &self.0 {
            prev = b.bp(b.bp(e, prev), e);
            out.push(prev);
        }
        Ok(EChain(reduce(b, out)))
    }

    /// `c∗k = [k₁, …, kₙ, k]` with `kᵢ = eᵢ kᵢ₊₁ eᵢ`, for `k ω^l eₙ` or
    /// `k ω^r eₙ`.
    pub fn restrict_right(&self, b: &BiorderedSet, k: usize) -> Result<Self> {
        let en = self.cod();
        if !b.omega_r(k, en) && !b.omega_l(k, en) {
            return Err(Error::DomainConditionFailed(format!(
                "{k} is not below {en} in either quasi-order"
            )));
        }
        let mut out = vec![k];
        let mut next = k;
        for &e in self.0.iter().rev() {
            next = b.bp(b.bp(e, next), e);
            out.push(next);
        }
        out.reverse();
        Ok(EChain(reduce(b, out)))
    }

    /// `self ≤ other` iff `dom(self) ω dom(other)` and `self = dom(self)∗other`.
    pub fn leq(&self, b: &BiorderedSet, other: &EChain) -> bool {
        b.omega(self.dom(), other.dom())
            && other.restrict_left(b, self.dom()).is_ok_and(|r| &r == self)
    }
}

impl fmt::Display for EChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Every reduced chain with at most `max_len` vertices, sorted by length
/// then lexicographically.
pub fn chains_up_to(b: &BiorderedSet, max_len: usize) -> Vec<EChain> {
    let mut out: Vec<EChain> = b.elements().map(EChain::trivial).collect();
    let mut frontier: Vec<Vec<usize>> = b.elements().map(|e| vec![e]).collect();
    for _ in 1..max_len {
        let mut next = Vec::new();
        for chain in &frontier {
            let last = *chain.last().expect("nonempty");
            for f in b.elements() {
                if f == last || !b.chain_related(last, f) {
                    continue;
                }
                if chain.len() >= 2 && inessential(b, chain[chain.len() - 2], last, f) {
                    continue;
                }
                let mut c = chain.clone();
                c.push(f);
                next.push(c);
            }
        }
        out.extend(next.iter().cloned().map(EChain));
        frontier = next;
    }
    out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    out
}

/// The groupoid `G(E)` of E-chains when it is finite with every chain of at
/// most `max_len` vertices.
///
/// `G(E)` is infinite as soon as `E` has a nontrivial E-square, so this
/// fails with `CapExceeded` whenever a reduced chain of `max_len + 1`
/// vertices exists. [`chains_up_to`] gives a bounded window instead.
pub fn build_ge(b: &BiorderedSet, max_len: usize) -> Result<Vec<EChain>> {
    let window = chains_up_to(b, max_len + 1);
    if let Some(long) = window.iter().find(|c| c.len() > max_len) {
        return Err(Error::CapExceeded {
            what: "E-chain length",
            limit: max_len,
            actual: long.len(),
        });
    }
    Ok(window)
}

/// Ordered-groupoid axioms of `G(E)` quantified over chains of at most
/// `max_len` vertices. Operations are computed symbolically, so results may
/// leave the window.
pub fn check_chain_groupoid(b: &BiorderedSet, max_len: usize) -> [(&'static str, AxiomStatus); 4] {
    let chains = chains_up_to(b, max_len);
    let below: Vec<Vec<&EChain>> = chains
        .iter()
        .map(|c| {
            b.omega_ideal(c.dom())
                .into_iter()
                .map(|f| c.restrict_left(b, f).expect("ω is inside ω^r"))
                .filter_map(|r| chains.iter().find(|x| **x == r))
                .collect()
        })
        .collect();
    let status = |w: Option<Vec<usize>>| w.map_or(AxiomStatus::Pass, AxiomStatus::Fail);
    let idx = |c: &EChain| chains.iter().position(|x| x == c).unwrap_or(usize::MAX);

    let order = (|| {
        for (i, c) in chains.iter().enumerate() {
            if !c.leq(b, c) {
                return Some(vec![i]);
            }
            for d in &below[i] {
                if *d != c && c.leq(b, d) {
                    return Some(vec![idx(d), i]);
                }
                for e in &below[idx(d)] {
                    if !e.leq(b, c) {
                        return Some(vec![idx(e), idx(d), i]);
                    }
                }
            }
        }
        None
    })();
    let og1 = (|| {
        for (i, x) in chains.iter().enumerate() {
            for (j, y) in chains.iter().enumerate() {
                let Some(xy) = x.compose(b, y) else { continue };
                for u in &below[i] {
                    for v in &below[j] {
                        if let Some(uv) = u.compose(b, v) {
                            if !uv.leq(b, &xy) {
                                return Some(vec![idx(u), i, idx(v), j]);
                            }
                        }
                    }
                }
            }
        }
        None
    })();
    let og2 = (|| {
        for (i, y) in chains.iter().enumerate() {
            for x in &below[i] {
                if !x.inverse().leq(b, &y.inverse()) {
                    return Some(vec![idx(x), i]);
                }
            }
        }
        None
    })();
    let og3_star = (|| {
        for (i, x) in chains.iter().enumerate() {
            for f in b.omega_ideal(x.cod()) {
                // the corestriction is the inverse of the restriction of the inverse
                let u = x.inverse().restrict_left(b, f).expect("f ω r(x)").inverse();
                if u.cod() != f || !u.leq(b, x) || x.restrict_right(b, f).ok() != Some(u) {
                    return Some(vec![i, f]);
                }
            }
        }
        None
    })();
    [
        ("order", status(order)),
        ("OG1", status(og1)),
        ("OG2", status(og2)),
        ("OG3*", status(og3_star)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{Family, Semigroup};

    fn bos(f: Family) -> BiorderedSet {
        BiorderedSet::extract(&f.generate_default().unwrap())
    }

    #[test]
    fn reduction() {
        // rectangular band (1,1)=0 (1,2)=1 (2,1)=2 (2,2)=3; 0 R 1, 0 L 2
        let b = bos(Family::RectangularBand(2, 2));
        assert_eq!(EChain::new(&b, vec![0, 1, 0]).unwrap().vertices(), &[0]);
        assert_eq!(
            EChain::new(&b, vec![0, 0, 1, 1]).unwrap().vertices(),
            &[0, 1]
        );
        assert_eq!(
            EChain::new(&b, vec![0, 1, 3, 2]).unwrap().vertices(),
            &[0, 1, 3, 2]
        );
        assert!(EChain::new(&b, vec![0, 3]).is_err());
        let c = EChain::new(&b, vec![0, 1]).unwrap();
        let d = EChain::new(&b, vec![1, 3]).unwrap();
        assert_eq!(c.compose(&b, &d).unwrap().vertices(), &[0, 1, 3]);
        assert!(d.compose(&b, &c).is_none());
        assert!(c.compose(&b, &c.inverse()).unwrap().is_trivial());
    }

    #[test]
    fn semilattice_chains_are_trivial() {
        let s = Semigroup::new(vec![vec![0, 0, 0], vec![0, 1, 0], vec![0, 0, 2]]).unwrap();
        let b = BiorderedSet::extract(&s);
        let ge = build_ge(&b, 4).unwrap();
        assert_eq!(ge.len(), 3);
        assert!(ge.iter().all(EChain::is_trivial));
    }

    #[test]
    fn squares_make_the_chain_groupoid_infinite() {
        let b = bos(Family::RectangularBand(2, 2));
        assert!(matches!(
            build_ge(&b, 8),
            Err(Error::CapExceeded { limit: 8, .. })
        ));
        // from each vertex exactly one R-step and one L-step, alternating
        let w = chains_up_to(&b, 5);
        for n in 2..=5 {
            assert_eq!(w.iter().filter(|c| c.len() == n).count(), 8);
        }
    }

    #[test]
    fn restriction_of_trivial_chain() {
        let b = bos(Family::FullTransformation(3));
        for e in b.elements() {
            for f in b.omega_ideal(e) {
                assert_eq!(
                    EChain::trivial(e).restrict_left(&b, f).unwrap(),
                    EChain::trivial(f)
                );
            }
            for h in b.omega_r_ideal(e) {
                let r = EChain::trivial(e).restrict_left(&b, h).unwrap();
                assert_eq!(r.dom(), h);
                assert_eq!(r.cod(), b.bp(h, e));
            }
        }
    }

    #[test]
    fn ordered_axioms_on_windows() {
        for f in [
            Family::RectangularBand(2, 2),
            Family::FullTransformation(2),
            Family::Brandt(2),
            Family::RectangularBand(2, 3),
        ] {
            let b = bos(f);
            for (name, st) in check_chain_groupoid(&b, 4) {
                assert!(st.passed(), "{f} {name} {st:?}");
            }
        }
    }
}
