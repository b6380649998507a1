use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::finite::FiniteCategory;
use crate::error::{Error, Result};
use crate::semigroup::Semigroup;

/// A normal cone: `components[c] ∈ C(c, vertex)`, compatible with every
/// inclusion, with at least one isomorphism component.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct NormalCone {
    pub vertex: usize,
    pub components: Vec<usize>,
}

impl NormalCone {
    pub fn component(&self, c: usize) -> usize {
        self.components[c]
    }

    pub fn is_valid(&self, cat: &FiniteCategory) -> bool {
        let n = cat.object_count();
        if self.components.len() != n || self.vertex >= n {
            return false;
        }
        let typed = (0..n).all(|c| {
            let x = self.components[c];
            x < cat.morphism_count() && cat.dom(x) == c && cat.cod(x) == self.vertex
        });
        typed
            && (0..n).all(|a| {
                (0..n).all(|b| {
                    cat.inclusion(a, b).is_none_or(|j| {
                        cat.compose(j, self.components[b]) == Some(self.components[a])
                    })
                })
            })
            && self.components.iter().any(|&x| cat.is_isomorphism(x))
    }
}

/// Objects ordered so that every proper superobject precedes its subobjects.
fn top_down(cat: &FiniteCategory) -> Vec<usize> {
    let n = cat.object_count();
    let above = |c: usize| (0..n).filter(|&b| b != c && cat.is_subobject(c, b)).count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&c| (above(c), c));
    order
}

struct Search<'a> {
    cat: &'a FiniteCategory,
    vertex: usize,
    order: &'a [usize],
    /// A prescribed component `(object, morphism)`.
    fixed: Option<(usize, usize)>,
    first_only: bool,
    assigned: Vec<Option<usize>>,
    out: Vec<NormalCone>,
}

impl Search<'_> {
    fn run(mut self) -> Vec<NormalCone> {
        self.go(0);
        self.out
    }

    fn go(&mut self, depth: usize) {
        let cat = self.cat;
        if self.first_only && !self.out.is_empty() {
            return;
        }
        if depth == self.order.len() {
            let components: Vec<usize> =
                self.assigned.iter().map(|x| x.expect("assigned")).collect();
            if components.iter().any(|&x| cat.is_isomorphism(x)) {
                self.out.push(NormalCone {
                    vertex: self.vertex,
                    components,
                });
            }
            return;
        }
        let c = self.order[depth];
        // components at proper superobjects are already assigned
        let mut forced: Option<usize> = None;
        for (b, gb) in self.assigned.iter().enumerate() {
            let (Some(j), Some(gb)) = (cat.inclusion(c, b), gb) else {
                continue;
            };
            if b == c {
                continue;
            }
            let value = cat.compose(j, *gb).expect("composable");
            match forced {
                Some(v) if v != value => return,
                _ => forced = Some(value),
            }
        }
        let candidates: Vec<usize> = match (forced, self.fixed) {
            (Some(v), Some((fc, fx))) if fc == c && fx != v => return,
            (Some(v), _) => vec![v],
            (None, Some((fc, fx))) if fc == c => vec![fx],
            (None, _) => cat.hom(c, self.vertex).to_vec(),
        };
        for x in candidates {
            self.assigned[c] = Some(x);
            self.go(depth + 1);
            self.assigned[c] = None;
        }
    }
}

fn search(
    cat: &FiniteCategory,
    vertex: usize,
    order: &[usize],
    fixed: Option<(usize, usize)>,
    first_only: bool,
) -> Vec<NormalCone> {
    Search {
        cat,
        vertex,
        order,
        fixed,
        first_only,
        assigned: vec![None; cat.object_count()],
        out: Vec::new(),
    }
    .run()
}

/// A normal cone with vertex `c` and `γ(c) = 1_c`.
pub fn identity_cone(cat: &FiniteCategory, c: usize) -> Option<NormalCone> {
    search(cat, c, &top_down(cat), Some((c, cat.identity(c))), true).pop()
}

/// Every normal cone, sorted by vertex then components.
pub fn enumerate_cones(cat: &FiniteCategory, max_objects: usize) -> Result<Vec<NormalCone>> {
    if cat.object_count() > max_objects {
        return Err(Error::CapExceeded {
            what: "objects for cone enumeration",
            limit: max_objects,
            actual: cat.object_count(),
        });
    }
    let order = top_down(cat);
    let mut cones: Vec<NormalCone> = (0..cat.object_count())
        .into_par_iter()
        .flat_map_iter(|d| search(cat, d, &order, None, false))
        .collect();
    cones.sort();
    Ok(cones)
}

/// `γ ∗ f`: the cone with components `γ(c) f`.
pub fn cone_compose(cat: &FiniteCategory, gamma: &NormalCone, f: usize) -> Option<NormalCone> {
    if cat.dom(f) != gamma.vertex {
        return None;
    }
    let components = gamma
        .components
        .iter()
        .map(|&x| cat.compose(x, f))
        .collect::<Option<Vec<_>>>()?;
    Some(NormalCone {
        vertex: cat.cod(f),
        components,
    })
}

/// `γδ = γ ∗ (δ(c_γ))°`.
pub fn cone_product(
    cat: &FiniteCategory,
    gamma: &NormalCone,
    delta: &NormalCone,
) -> Result<NormalCone> {
    let f = delta.component(gamma.vertex);
    let epi = cat.normal_factorization(f)?.epimorphic;
    let out = cone_compose(cat, gamma, epi).expect("epimorphic part starts at the vertex");
    if !out.is_valid(cat) {
        return Err(Error::violation(
            "the cone product is a normal cone",
            format!("{gamma:?} · {delta:?}"),
        ));
    }
    Ok(out)
}

/// `T(C)`: the normal cones under the cone product.
#[derive(Debug, Clone)]
pub struct ConeSemigroup {
    pub cones: Vec<NormalCone>,
    pub semigroup: Semigroup,
    index: HashMap<NormalCone, usize>,
}

impl ConeSemigroup {
    pub fn index_of(&self, cone: &NormalCone) -> Option<usize> {
        self.index.get(cone).copied()
    }
}

pub fn cone_semigroup(
    cat: &FiniteCategory,
    max_objects: usize,
    max_elements: usize,
) -> Result<ConeSemigroup> {
    let cones = enumerate_cones(cat, max_objects)?;
    let k = cones.len();
    if k > max_elements {
        return Err(Error::CapExceeded {
            what: "normal cones",
            limit: max_elements,
            actual: k,
        });
    }
    let index: HashMap<NormalCone, usize> = cones
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, c)| (c, i))
        .collect();
    let rows: Vec<Vec<usize>> = cones
        .par_iter()
        .map(|g| {
            cones
                .iter()
                .map(|d| {
                    let p = cone_product(cat, g, d)?;
                    index.get(&p).copied().ok_or_else(|| {
                        Error::violation("cones are closed under product", format!("{p:?}"))
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let table: Vec<usize> = rows.into_iter().flatten().collect();
    let semigroup = Semigroup::from_table(k, table).map_err(|e| match e {
        Error::NonAssociative { a, b, c } => Error::violation(
            "the cone product is associative",
            format!("cones ({a}, {b}, {c})"),
        ),
        other => other,
    })?;
    Ok(ConeSemigroup {
        cones,
        semigroup,
        index,
    })
}
