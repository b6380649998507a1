use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::omega::{enumerate_omega_isos, p_related, restrict_left, restrict_right, OmegaIso};
use crate::biorder::BiorderedSet;
use crate::error::{Error, Result};
use crate::semigroup::Semigroup;

/// How class representatives and sandwich elements are picked when
/// multiplying classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Choice {
    /// Every representative pair and every sandwich element is tried and the
    /// resulting classes must coincide.
    Exhaustive,
    /// Least representatives and least sandwich element, unchecked.
    Canonical,
    /// Seeded random representatives and sandwich elements, unchecked.
    Seeded(u64),
}

/// `T_E` modulo `p`, with the data needed to interpret its elements.
#[derive(Debug, Clone)]
pub struct FundamentalQuotient {
    semigroup: Semigroup,
    isos: Vec<OmegaIso>,
    /// Class of each entry of `isos`.
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    lookup: HashMap<OmegaIso, usize>,
}

impl FundamentalQuotient {
    pub fn semigroup(&self) -> &Semigroup {
        &self.semigroup
    }

    pub fn into_semigroup(self) -> Semigroup {
        self.semigroup
    }

    /// All of `T_E`.
    pub fn isos(&self) -> &[OmegaIso] {
        &self.isos
    }

    /// Indices into [`FundamentalQuotient::isos`] per class, each ascending.
    /// Classes are ordered by least member.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn representative(&self, class: usize) -> &OmegaIso {
        &self.isos[self.classes[class][0]]
    }

    /// The element of the quotient containing `alpha`.
    pub fn class_of(&self, alpha: &OmegaIso) -> Option<usize> {
        self.lookup.get(alpha).map(|&i| self.class_of[i])
    }

    /// The element holding the identity on `ω(e)`; it is idempotent.
    pub fn idempotent_class(&self, b: &BiorderedSet, e: usize) -> usize {
        self.class_of(&OmegaIso::identity(b, e))
            .expect("identities are ω-isomorphisms")
    }
}

/// `[α][β] = [(α∗h)(h∗β)]` for a chosen `h ∈ S(f_α, e_β)`.
fn multiply(b: &BiorderedSet, alpha: &OmegaIso, beta: &OmegaIso, h: usize) -> OmegaIso {
    let left = restrict_right(b, alpha, h).expect("h ω^l f_α");
    let right = restrict_left(b, h, beta).expect("h ω^r e_β");
    left.then(&right).expect("both sides meet at h")
}

pub fn build_te_mod_p(b: &BiorderedSet) -> Result<FundamentalQuotient> {
    build_te_mod_p_with(b, Choice::Exhaustive)
}

pub fn build_te_mod_p_with(b: &BiorderedSet, choice: Choice) -> Result<FundamentalQuotient> {
    let isos = enumerate_omega_isos(b)?;
    let lookup: HashMap<OmegaIso, usize> = isos
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, a)| (a, i))
        .collect();

    // Assign each iso to the class of its least p-related iso, then confirm
    // that the p-neighbourhood of every iso is exactly its class.
    let n = isos.len();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        if class_of[i] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = (i..n)
            .filter(|&j| p_related(b, &isos[i], &isos[j]))
            .collect();
        for &j in &members {
            if class_of[j] != usize::MAX {
                return Err(Error::WellDefinednessViolation(format!(
                    "p is not transitive: {} lies in two classes",
                    isos[j]
                )));
            }
            class_of[j] = classes.len();
        }
        classes.push(members);
    }
    for i in 0..n {
        for j in 0..n {
            if p_related(b, &isos[i], &isos[j]) != (class_of[i] == class_of[j]) {
                return Err(Error::WellDefinednessViolation(format!(
                    "p is not an equivalence at ({}, {})",
                    isos[i], isos[j]
                )));
            }
        }
    }

    let k = classes.len();
    let mut rng = match choice {
        Choice::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut table = vec![0; k * k];
    for x in 0..k {
        for y in 0..k {
            let value = match choice {
                Choice::Exhaustive => {
                    let mut seen: Option<(usize, String)> = None;
                    for &i in &classes[x] {
                        for &j in &classes[y] {
                            let (a, c) = (&isos[i], &isos[j]);
                            for h in b.sandwich(a.codomain_apex(), c.domain_apex()) {
                                let prod = multiply(b, a, c, h);
                                let cls = class_of[lookup[&prod]];
                                match &seen {
                                    None => seen = Some((cls, format!("{a} * {c} via {h}"))),
                                    Some((v, first)) if *v != cls => {
                                        return Err(Error::WellDefinednessViolation(format!(
                                            "{first} gives class {v} but {a} * {c} via {h} gives {cls}"
                                        )))
                                    }
                                    _ => {}
                                }
                            }
                        }
                    }
                    seen.expect("sandwich sets of a regular biorder are nonempty")
                        .0
                }
                Choice::Canonical => {
                    let (a, c) = (&isos[classes[x][0]], &isos[classes[y][0]]);
                    let h = b.sandwich(a.codomain_apex(), c.domain_apex())[0];
                    class_of[lookup[&multiply(b, a, c, h)]]
                }
                Choice::Seeded(_) => {
                    let rng = rng.as_mut().expect("seeded");
                    let a = &isos[*classes[x].choose(rng).expect("nonempty")];
                    let c = &isos[*classes[y].choose(rng).expect("nonempty")];
                    let sw = b.sandwich(a.codomain_apex(), c.domain_apex());
                    let h = *sw.choose(rng).expect("regular");
                    class_of[lookup[&multiply(b, a, c, h)]]
                }
            };
            table[x * k + y] = value;
        }
    }
    let semigroup = Semigroup::from_table(k, table).map_err(|e| match e {
        Error::NonAssociative { a, b, c } => Error::violation(
            "associativity of the fundamental quotient",
            format!("classes ({a}, {b}, {c})"),
        ),
        other => other,
    })?;
    Ok(FundamentalQuotient {
        semigroup,
        isos,
        class_of,
        classes,
        lookup,
    })
}

/// The representation `S → T_{E(S)}/p`.
#[derive(Debug, Clone)]
pub struct FundamentalImage {
    pub quotient: FundamentalQuotient,
    /// Image of each element of `S`.
    pub map: Vec<usize>,
    /// The image as a semigroup, with its embedding into the quotient.
    pub image: Semigroup,
    pub embedding: Vec<usize>,
}

impl FundamentalImage {
    pub fn is_injective(&self) -> bool {
        let mut m = self.map.clone();
        m.sort_unstable();
        m.dedup();
        m.len() == self.map.len()
    }

    /// Kernel of the representation.
    pub fn kernel(&self) -> crate::semigroup::Congruence {
        crate::semigroup::Congruence::from_labels(&self.map)
    }
}

/// Sends `x` to the class of `g ↦ x'gx : ω(xx') → ω(x'x)` for an inverse
/// `x'`, and checks the result is a homomorphism onto a full subsemigroup.
pub fn fundamental_image(s: &Semigroup) -> Result<FundamentalImage> {
    s.require_regular()?;
    let b = BiorderedSet::extract(s);
    let quotient = build_te_mod_p(&b)?;
    let origin = b.origin().expect("extracted");
    let idx = |x: usize| b.index_of(x).expect("idempotent");
    let mut map = Vec::with_capacity(s.order());
    for x in s.elements() {
        let xi = s.inverses_of(x)[0];
        let (e, f) = (idx(s.mul(x, xi)), idx(s.mul(xi, x)));
        let domain = b.omega_ideal(e);
        let image = domain
            .iter()
            .map(|&g| idx(s.mul(s.mul(xi, origin[g]), x)))
            .collect();
        let alpha = OmegaIso::from_parts(domain, image, e, f);
        let class = quotient.class_of(&alpha).ok_or_else(|| {
            Error::violation(
                "conjugation is an ω-isomorphism",
                format!("x = {x}: {alpha}"),
            )
        })?;
        map.push(class);
    }
    let t = quotient.semigroup();
    for x in s.elements() {
        for y in s.elements() {
            if map[s.mul(x, y)] != t.mul(map[x], map[y]) {
                return Err(Error::violation(
                    "fundamental representation is a homomorphism",
                    format!("x = {x}, y = {y}"),
                ));
            }
        }
    }
    let mut elements = map.clone();
    elements.sort_unstable();
    elements.dedup();
    for e in b.elements() {
        let c = quotient.idempotent_class(&b, e);
        if elements.binary_search(&c).is_err() {
            return Err(Error::violation(
                "fundamental representation is full",
                format!("idempotent class {c} missed"),
            ));
        }
    }
    let (image, embedding) = t.subsemigroup(&elements)?;
    Ok(FundamentalImage {
        quotient,
        map,
        image,
        embedding,
    })
}
