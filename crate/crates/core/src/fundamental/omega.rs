use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::biorder::{ideal_isomorphisms, BiorderedSet};
use crate::error::{Error, Result};

/// A principal order ideal `ω(e)` with the biorder structure it inherits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaIdeal {
    pub apex: usize,
    /// Members in ascending order.
    pub elements: Vec<usize>,
}

impl OmegaIdeal {
    pub fn new(b: &BiorderedSet, apex: usize) -> Self {
        OmegaIdeal {
            apex,
            elements: b.omega_ideal(apex),
        }
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    /// The ideal as a biordered set in its own right, indexed by position
    /// in [`OmegaIdeal::elements`].
    pub fn induced(&self, b: &BiorderedSet) -> BiorderedSet {
        let n = self.elements.len();
        let pos = |x: usize| self.elements.binary_search(&x).ok();
        let mut r = vec![false; n * n];
        let mut l = vec![false; n * n];
        let mut p = vec![None; n * n];
        for (i, &x) in self.elements.iter().enumerate() {
            for (j, &y) in self.elements.iter().enumerate() {
                r[i * n + j] = b.omega_r(x, y);
                l[i * n + j] = b.omega_l(x, y);
                p[i * n + j] = b.product(x, y).and_then(pos);
            }
        }
        let labels = self
            .elements
            .iter()
            .map(|&x| b.label(x).to_string())
            .collect();
        BiorderedSet::from_parts(n, r, l, p, Some(labels))
            .and_then(|raw| raw.into_verified())
            .expect("ideals of a biorder are biorders")
    }
}

/// A biorder isomorphism `ω(e) → ω(f)`. Maps act on the right, so `αβ`
/// means α first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OmegaIso {
    domain_apex: usize,
    codomain_apex: usize,
    domain: Vec<usize>,
    image: Vec<usize>,
}

impl OmegaIso {
    pub(crate) fn from_parts(domain: Vec<usize>, image: Vec<usize>, e: usize, f: usize) -> Self {
        debug_assert_eq!(domain.len(), image.len());
        OmegaIso {
            domain_apex: e,
            codomain_apex: f,
            domain,
            image,
        }
    }

    pub fn identity(b: &BiorderedSet, e: usize) -> Self {
        let d = b.omega_ideal(e);
        OmegaIso::from_parts(d.clone(), d, e, e)
    }

    /// `e_α`.
    pub fn domain_apex(&self) -> usize {
        self.domain_apex
    }

    /// `f_α`.
    pub fn codomain_apex(&self) -> usize {
        self.codomain_apex
    }

    pub fn domain(&self) -> &[usize] {
        &self.domain
    }

    /// Images aligned with [`OmegaIso::domain`].
    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, g: usize) -> Option<usize> {
        self.domain.binary_search(&g).ok().map(|i| self.image[i])
    }

    pub fn is_identity(&self) -> bool {
        self.domain == self.image
    }

    pub fn inverse(&self) -> Self {
        let mut pairs: Vec<(usize, usize)> = self
            .image
            .iter()
            .copied()
            .zip(self.domain.iter().copied())
            .collect();
        pairs.sort_unstable();
        let (domain, image) = pairs.into_iter().unzip();
        OmegaIso::from_parts(domain, image, self.codomain_apex, self.domain_apex)
    }

    /// `self` then `next`; defined when `f_self = e_next`.
    pub fn then(&self, next: &OmegaIso) -> Option<Self> {
        if self.codomain_apex != next.domain_apex {
            return None;
        }
        let image = self
            .image
            .iter()
            .map(|&y| next.apply(y).expect("codomain ideal equals next domain"))
            .collect();
        Some(OmegaIso::from_parts(
            self.domain.clone(),
            image,
            self.domain_apex,
            next.codomain_apex,
        ))
    }

    /// Set restriction to `ω(g)` for `g ω e_α`.
    pub fn restrict(&self, b: &BiorderedSet, g: usize) -> Option<Self> {
        if !b.omega(g, self.domain_apex) {
            return None;
        }
        let domain = b.omega_ideal(g);
        let image = domain
            .iter()
            .map(|&x| self.apply(x).expect("ω(g) ⊆ ω(e)"))
            .collect();
        Some(OmegaIso::from_parts(domain, image, g, self.apply(g)?))
    }

    /// Checks that this is a bijection `ω(e_α) → ω(f_α)` with `e_α ↦ f_α`
    /// preserving and reflecting both quasi-orders and basic products.
    pub fn is_valid(&self, b: &BiorderedSet) -> bool {
        let e = self.domain_apex;
        let f = self.codomain_apex;
        if e >= b.size() || f >= b.size() || self.domain != b.omega_ideal(e) {
            return false;
        }
        let mut sorted = self.image.clone();
        sorted.sort_unstable();
        if sorted != b.omega_ideal(f) || self.apply(e) != Some(f) {
            return false;
        }
        self.domain.iter().zip(&self.image).all(|(&x, &xi)| {
            self.domain.iter().zip(&self.image).all(|(&y, &yi)| {
                b.omega_r(x, y) == b.omega_r(xi, yi)
                    && b.omega_l(x, y) == b.omega_l(xi, yi)
                    && b.product(x, y).map(|z| self.apply(z)) == b.product(xi, yi).map(Some)
            })
        })
    }
}

impl fmt::Display for OmegaIso {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{} {{", self.domain_apex, self.codomain_apex)?;
        for (i, (x, y)) in self.domain.iter().zip(&self.image).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}:{y}")?;
        }
        write!(f, "}}")
    }
}

/// Invariants of an apex used to discard pairs that cannot carry an
/// ω-isomorphism: ideal size, depth profile, and R/L degree multisets.
fn apex_signature(b: &BiorderedSet, e: usize) -> (usize, Vec<usize>, Vec<(usize, usize)>) {
    let ideal = b.omega_ideal(e);
    let mut depth: Vec<usize> = ideal
        .iter()
        .map(|&g| ideal.iter().filter(|&&h| b.omega(h, g)).count())
        .collect();
    depth.sort_unstable();
    let mut degrees: Vec<(usize, usize)> = ideal
        .iter()
        .map(|&g| {
            (
                ideal.iter().filter(|&&h| b.r_related(g, h)).count(),
                ideal.iter().filter(|&&h| b.l_related(g, h)).count(),
            )
        })
        .collect();
    degrees.sort_unstable();
    (ideal.len(), depth, degrees)
}

/// Every ω-isomorphism of a regular biorder, sorted by apex pair then map.
pub fn enumerate_omega_isos(b: &BiorderedSet) -> Result<Vec<OmegaIso>> {
    b.require_regular()?;
    let sigs: Vec<_> = b.elements().map(|e| apex_signature(b, e)).collect();
    let ideals: Vec<Vec<usize>> = b.elements().map(|e| b.omega_ideal(e)).collect();
    let ideals = &ideals;
    let pairs: Vec<(usize, usize)> = b
        .elements()
        .flat_map(|e| b.elements().map(move |f| (e, f)))
        .filter(|&(e, f)| sigs[e] == sigs[f])
        .collect();
    let mut out: Vec<OmegaIso> = pairs
        .par_iter()
        .flat_map_iter(|&(e, f)| {
            ideal_isomorphisms(b, &ideals[e], b, &ideals[f], &[(e, f)], true)
                .into_iter()
                .map(move |image| OmegaIso::from_parts(ideals[e].clone(), image, e, f))
        })
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// `τ(e, f)`: `g ↦ gf` if `e R f`, `g ↦ fg` if `e L f`.
pub fn tau_iso(b: &BiorderedSet, e: usize, f: usize) -> Result<OmegaIso> {
    let domain = b.omega_ideal(e);
    let image: Vec<usize> = if b.r_related(e, f) {
        domain.iter().map(|&g| b.bp(g, f)).collect()
    } else if b.l_related(e, f) {
        domain.iter().map(|&g| b.bp(f, g)).collect()
    } else {
        return Err(Error::NotChainRelated(e, f));
    };
    Ok(OmegaIso::from_parts(domain, image, e, f))
}

/// `g∗α` for `g ω^r e_α` or `g ω^l e_α`.
pub fn restrict_left(b: &BiorderedSet, g: usize, alpha: &OmegaIso) -> Result<OmegaIso> {
    let e = alpha.domain_apex;
    if b.omega(g, e) {
        return Ok(alpha.restrict(b, g).expect("g ω e"));
    }
    let via = if b.omega_r(g, e) {
        b.bp(g, e)
    } else if b.omega_l(g, e) {
        b.bp(e, g)
    } else {
        return Err(Error::DomainConditionFailed(format!(
            "{g} is not below {e} in either quasi-order"
        )));
    };
    let tau = tau_iso(b, g, via)?;
    let rest = alpha.restrict(b, via).expect("basic product lies in ω(e)");
    Ok(tau.then(&rest).expect("apexes match"))
}

/// `α∗h` for `h ω^r f_α` or `h ω^l f_α`.
pub fn restrict_right(b: &BiorderedSet, alpha: &OmegaIso, h: usize) -> Result<OmegaIso> {
    let f = alpha.codomain_apex;
    let corestrict = |k: usize| alpha.inverse().restrict(b, k).expect("k ω f").inverse();
    if b.omega(h, f) {
        return Ok(corestrict(h));
    }
    let via = if b.omega_r(h, f) {
        b.bp(h, f)
    } else if b.omega_l(h, f) {
        b.bp(f, h)
    } else {
        return Err(Error::DomainConditionFailed(format!(
            "{h} is not below {f} in either quasi-order"
        )));
    };
    let tau = tau_iso(b, via, h)?;
    Ok(corestrict(via).then(&tau).expect("apexes match"))
}

/// `α p β`: `e_α R e_β`, `f_α L f_β` and `τ(e_α,e_β)β = ατ(f_α,f_β)`.
pub fn p_related(b: &BiorderedSet, alpha: &OmegaIso, beta: &OmegaIso) -> bool {
    let (ea, eb) = (alpha.domain_apex, beta.domain_apex);
    let (fa, fb) = (alpha.codomain_apex, beta.codomain_apex);
    if !b.r_related(ea, eb) || !b.l_related(fa, fb) {
        return false;
    }
    let lhs = tau_iso(b, ea, eb).expect("R-related").then(beta);
    let rhs = alpha.then(&tau_iso(b, fa, fb).expect("L-related"));
    lhs.is_some() && lhs == rhs
}
