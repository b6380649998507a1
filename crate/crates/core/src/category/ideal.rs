use std::collections::HashMap;

use serde::Serialize;

use super::cones::NormalCone;
use super::finite::{FiniteCategory, NormalFactorization};
use crate::error::{Error, Result};
use crate::semigroup::Semigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    /// Principal left ideals `Se` with morphisms `x ↦ xu`.
    Left,
    /// Principal right ideals `eS` with morphisms `x ↦ ux`.
    Right,
}

/// The category of principal one-sided ideals generated by idempotents.
///
/// Objects are `L`-classes of idempotents (`R`-classes for [`Side::Right`])
/// represented by their least idempotent. A morphism from the object of `e`
/// to that of `f` (both representatives) is stored as the unique `u ∈ eSf`
/// of its canonical triple. The right-hand category is built on the opposite
/// semigroup, so `u ∈ fSe` there when read in `S`.
#[derive(Debug, Clone)]
pub struct IdealCategory {
    side: Side,
    /// `S`, or its opposite for [`Side::Right`].
    working: Semigroup,
    representatives: Vec<usize>,
    object_of: Vec<Option<usize>>,
    elements: Vec<usize>,
    lookup: HashMap<(usize, usize, usize), usize>,
    category: FiniteCategory,
}

#[derive(Debug, Clone, Serialize)]
pub struct ObjectDump {
    pub representative: usize,
    pub label: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct MorphismDump {
    pub dom: usize,
    pub cod: usize,
    pub element: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CategoryDump {
    pub side: Side,
    pub objects: Vec<ObjectDump>,
    pub morphisms: Vec<MorphismDump>,
    /// `hom_sizes[a][b] = |C(a, b)|`.
    pub hom_sizes: Vec<Vec<usize>>,
    /// Pairs `(a, b)` with `a ⊆ b`, `a ≠ b`.
    pub inclusions: Vec<(usize, usize)>,
}

pub fn build_ls(s: &Semigroup) -> Result<IdealCategory> {
    IdealCategory::build(s, Side::Left)
}

/// `ℝ(S)`, obtained as the left-hand category of the opposite semigroup.
pub fn build_rs(s: &Semigroup) -> Result<IdealCategory> {
    IdealCategory::build(s, Side::Right)
}

impl IdealCategory {
    pub fn build(s: &Semigroup, side: Side) -> Result<Self> {
        s.require_regular()?;
        let w = match side {
            Side::Left => s.clone(),
            Side::Right => s.opposite(),
        };
        let green = w.green();
        let mut representatives: Vec<usize> = Vec::new();
        let mut object_of = vec![None; w.order()];
        for &e in w.idempotents() {
            let found = representatives.iter().position(|&r| green.l_related(r, e));
            let obj = found.unwrap_or_else(|| {
                representatives.push(e);
                representatives.len() - 1
            });
            object_of[e] = Some(obj);
        }
        let n = representatives.len();

        let mut dom = Vec::new();
        let mut cod = Vec::new();
        let mut elements = Vec::new();
        let mut lookup = HashMap::new();
        for (a, &e) in representatives.iter().enumerate() {
            for (b, &f) in representatives.iter().enumerate() {
                // eSf = { u : u = euf }
                for u in w.elements().filter(|&u| w.mul(w.mul(e, u), f) == u) {
                    lookup.insert((a, b, u), elements.len());
                    dom.push(a);
                    cod.push(b);
                    elements.push(u);
                }
            }
        }
        let category = FiniteCategory::from_fns(
            n,
            elements.len(),
            |x| dom[x],
            |x| cod[x],
            |x, y| {
                lookup
                    .get(&(dom[x], cod[y], w.mul(elements[x], elements[y])))
                    .copied()
            },
            |a| lookup[&(a, a, representatives[a])],
            |a, b| {
                let (e, f) = (representatives[a], representatives[b]);
                (w.mul(e, f) == e).then(|| lookup[&(a, b, e)])
            },
        )?;
        Ok(IdealCategory {
            side,
            working: w,
            representatives,
            object_of,
            elements,
            lookup,
            category,
        })
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn category(&self) -> &FiniteCategory {
        &self.category
    }

    /// Least idempotent of each object.
    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn object_of(&self, e: usize) -> Option<usize> {
        self.object_of[e]
    }

    /// The element `u` of the canonical triple of morphism `x`.
    pub fn element(&self, x: usize) -> usize {
        self.elements[x]
    }

    /// `ρ(e, u, f)` for idempotents `e`, `f` and `u ∈ eSf`, reduced to the
    /// canonical triple `(e₀, e₀u, f₀)` of the representatives.
    pub fn triple(&self, e: usize, u: usize, f: usize) -> Result<usize> {
        let w = &self.working;
        let (Some(a), Some(b)) = (
            self.object_of.get(e).copied().flatten(),
            self.object_of.get(f).copied().flatten(),
        ) else {
            return Err(Error::InvalidParameter(format!(
                "{e} or {f} is not idempotent"
            )));
        };
        if u >= w.order() || w.mul(w.mul(e, u), f) != u {
            return Err(Error::InvalidParameter(format!("{u} is not in {e}S{f}")));
        }
        let v = w.mul(self.representatives[a], u);
        Ok(self.lookup[&(a, b, v)])
    }

    /// `ρ(e, u, f) = ρ(e, g, g) ρ(g, u, h) ρ(h, h, f)` with `g` the least
    /// idempotent of `R_u ∩ ω(e)` and `h` the least idempotent of `L_u`.
    pub fn normal_factorize(&self, m: usize) -> Result<NormalFactorization> {
        let w = &self.working;
        let green = w.green();
        let cat = &self.category;
        let e = self.representatives[cat.dom(m)];
        let f = self.representatives[cat.cod(m)];
        let u = self.elements[m];
        let g = w
            .idempotents()
            .iter()
            .copied()
            .find(|&g| green.r_related(g, u) && w.mul(e, g) == g && w.mul(g, e) == g)
            .ok_or(Error::FactorizationNotFound(m))?;
        let h = w
            .idempotents()
            .iter()
            .copied()
            .find(|&h| green.l_related(h, u))
            .ok_or(Error::FactorizationNotFound(m))?;
        let q = self.triple(e, g, g)?;
        let iso = self.triple(g, u, h)?;
        let j = self.triple(h, h, f)?;
        let epimorphic = cat.compose(q, iso).expect("composable");
        let image = cat.cod(iso);
        let fits = cat.compose(epimorphic, j) == Some(m)
            && cat.inclusion(image, cat.cod(m)) == Some(j)
            && cat.retractions(cat.cod(q), cat.dom(m)).contains(&q)
            && cat.is_isomorphism(iso);
        if !fits {
            return Err(Error::violation(
                "normal factorization",
                format!("morphism {m}"),
            ));
        }
        Ok(NormalFactorization {
            retraction: q,
            isomorphism: iso,
            inclusion: j,
            epimorphic,
            image,
        })
    }

    /// `ρ^a`: the component at the object of `e` is `ρ(e, ea, f)` with `f`
    /// the least idempotent of `L_a`.
    pub fn principal_cone(&self, a: usize) -> Result<NormalCone> {
        let w = &self.working;
        let green = w.green();
        let f = w
            .idempotents()
            .iter()
            .copied()
            .find(|&f| green.l_related(f, a))
            .ok_or(Error::NotRegular(a))?;
        let components = self
            .representatives
            .iter()
            .map(|&e| self.triple(e, w.mul(e, a), f))
            .collect::<Result<Vec<_>>>()?;
        Ok(NormalCone {
            vertex: self.object_of[f].expect("idempotent"),
            components,
        })
    }

    pub fn dump(&self) -> CategoryDump {
        let cat = &self.category;
        let n = cat.object_count();
        CategoryDump {
            side: self.side,
            objects: self
                .representatives
                .iter()
                .map(|&e| ObjectDump {
                    representative: e,
                    label: self.working.label(e),
                })
                .collect(),
            morphisms: (0..cat.morphism_count())
                .map(|x| MorphismDump {
                    dom: cat.dom(x),
                    cod: cat.cod(x),
                    element: self.elements[x],
                })
                .collect(),
            hom_sizes: (0..n)
                .map(|a| (0..n).map(|b| cat.hom(a, b).len()).collect())
                .collect(),
            inclusions: (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .filter(|&(a, b)| a != b && cat.is_subobject(a, b))
                .collect(),
        }
    }
}
