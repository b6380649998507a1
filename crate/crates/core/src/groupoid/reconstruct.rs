use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::gs::{build_gs, GroupoidGS};
use crate::error::{Error, Result};
use crate::fundamental::Choice;
use crate::semigroup::{are_isomorphic, is_isomorphism, Semigroup};

/// `S(G) = G/p` rebuilt from `(G(S), ε_S)`.
#[derive(Debug, Clone)]
pub struct Reconstruction {
    pub semigroup: Semigroup,
    /// Morphism indices of `G(S)` per class, ordered by least member.
    pub classes: Vec<Vec<usize>>,
    /// `x ↦ [(x, x')]`, an isomorphism `S → S(G)`.
    pub class_of_element: Vec<usize>,
    /// An isomorphism `S → S(G)` found by independent search.
    pub witness: Vec<usize>,
}

/// `x p y` iff `d(x) R d(y)`, `r(x) L r(y)` and
/// `x ε(r(x), r(y)) = ε(d(x), d(y)) y`.
pub fn p_related(g: &GroupoidGS, x: usize, y: usize) -> Result<bool> {
    let b = g.biorder();
    let (dx, dy, rx, ry) = (g.dom(x), g.dom(y), g.cod(x), g.cod(y));
    if !b.r_related(dx, dy) || !b.l_related(rx, ry) {
        return Ok(false);
    }
    let lhs = g.compose(x, g.epsilon(rx, ry)?);
    let rhs = g.compose(g.epsilon(dx, dy)?, y);
    Ok(lhs.is_some() && lhs == rhs)
}

fn product(g: &GroupoidGS, x: usize, y: usize, h: usize) -> Result<usize> {
    let left = g.extended_corestriction(x, h)?;
    let right = g.extended_restriction(h, y)?;
    g.compose(left, right).ok_or_else(|| {
        Error::violation(
            "restrictions meet at the sandwich element",
            format!("{x} {y} {h}"),
        )
    })
}

pub fn reconstruct(s: &Semigroup) -> Result<Reconstruction> {
    reconstruct_with(s, Choice::Exhaustive)
}

pub fn reconstruct_with(s: &Semigroup, choice: Choice) -> Result<Reconstruction> {
    let g = build_gs(s)?;
    let b = g.biorder();
    let m = g.morphisms().len();

    let mut class_of = vec![usize::MAX; m];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..m {
        if class_of[i] != usize::MAX {
            continue;
        }
        let mut members = Vec::new();
        for (j, slot) in class_of.iter_mut().enumerate().skip(i) {
            if p_related(&g, i, j)? {
                if *slot != usize::MAX {
                    return Err(Error::violation(
                        "p is an equivalence",
                        format!("{j} in two classes"),
                    ));
                }
                *slot = classes.len();
                members.push(j);
            }
        }
        classes.push(members);
    }
    for i in 0..m {
        for j in 0..m {
            if p_related(&g, i, j)? != (class_of[i] == class_of[j]) {
                return Err(Error::violation(
                    "p is an equivalence",
                    format!("morphisms {i}, {j}"),
                ));
            }
        }
    }

    let k = classes.len();
    let mut rng = match choice {
        Choice::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut table = vec![0; k * k];
    for cx in 0..k {
        for cy in 0..k {
            table[cx * k + cy] = match choice {
                Choice::Exhaustive => {
                    let mut value: Option<usize> = None;
                    for &x in &classes[cx] {
                        for &y in &classes[cy] {
                            for h in b.sandwich(g.cod(x), g.dom(y)) {
                                let c = class_of[product(&g, x, y, h)?];
                                if value.is_some_and(|v| v != c) {
                                    return Err(Error::violation(
                                        "product on G/p is well defined",
                                        format!(
                                            "classes {cx}, {cy}: representatives {x}, {y} via {h}"
                                        ),
                                    ));
                                }
                                value = Some(c);
                            }
                        }
                    }
                    value.expect("regular biorder")
                }
                Choice::Canonical => {
                    let (x, y) = (classes[cx][0], classes[cy][0]);
                    let h = b.sandwich(g.cod(x), g.dom(y))[0];
                    class_of[product(&g, x, y, h)?]
                }
                Choice::Seeded(_) => {
                    let rng = rng.as_mut().expect("seeded");
                    let x = *classes[cx].choose(rng).expect("nonempty");
                    let y = *classes[cy].choose(rng).expect("nonempty");
                    let h = *b.sandwich(g.cod(x), g.dom(y)).choose(rng).expect("regular");
                    class_of[product(&g, x, y, h)?]
                }
            };
        }
    }
    let semigroup = Semigroup::from_table(k, table).map_err(|e| match e {
        Error::NonAssociative { a, b, c } => {
            Error::violation("associativity of G/p", format!("classes ({a}, {b}, {c})"))
        }
        other => other,
    })?;

    let mut class_of_element = vec![usize::MAX; s.order()];
    for (i, pair) in g.morphisms().iter().enumerate() {
        let c = class_of[i];
        if class_of_element[pair.x] != usize::MAX && class_of_element[pair.x] != c {
            return Err(Error::violation(
                "p-classes correspond to elements",
                format!("element {} spans classes", pair.x),
            ));
        }
        class_of_element[pair.x] = c;
    }
    if !is_isomorphism(s, &semigroup, &class_of_element) {
        return Err(Error::violation(
            "x ↦ [(x, x')] is an isomorphism",
            format!("map {class_of_element:?}"),
        ));
    }
    let witness = are_isomorphic(s, &semigroup)
        .ok_or_else(|| Error::violation("S(G(S)) is isomorphic to S", "no isomorphism found"))?;
    Ok(Reconstruction {
        semigroup,
        classes,
        class_of_element,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{enumerate_corpus, Family};

    #[test]
    fn families_round_trip() {
        for f in [
            Family::Brandt(2),
            Family::RectangularBand(2, 2),
            Family::SymmetricInverse(2),
            Family::FullTransformation(2),
            Family::FullTransformation(3),
            Family::BrandtGroup(2, 2),
        ] {
            let s = f.generate_default().unwrap();
            let r = reconstruct(&s).unwrap();
            assert_eq!(r.semigroup.order(), s.order(), "{f}");
        }
    }

    #[test]
    fn regular_corpus_round_trips() {
        for s in enumerate_corpus(3)
            .unwrap()
            .iter()
            .filter(|s| s.is_regular())
        {
            reconstruct(s).unwrap();
        }
    }

    #[test]
    fn seeded_choices_agree() {
        let s = Family::FullTransformation(3).generate_default().unwrap();
        let base = reconstruct_with(&s, Choice::Canonical).unwrap();
        for seed in 0..3 {
            let r = reconstruct_with(&s, Choice::Seeded(seed)).unwrap();
            assert_eq!(r.semigroup, base.semigroup);
        }
    }

    #[test]
    fn rejects_non_regular() {
        let s = Family::NullPlusZero(2).generate_default().unwrap();
        assert!(matches!(reconstruct(&s), Err(Error::NotRegular(_))));
    }
}
