use serde::Serialize;

use crate::biorder::AxiomStatus;
use crate::error::{Error, Result};

/// A finite category with subobjects. Morphisms compose left to right:
/// `compose(x, y)` is `x` followed by `y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiniteCategory {
    objects: usize,
    dom: Vec<usize>,
    cod: Vec<usize>,
    compose: Vec<Option<usize>>,
    identity: Vec<usize>,
    /// `inclusion[a * objects + b]` is `j(a, b)` when `a ⊆ b`.
    inclusion: Vec<Option<usize>>,
    hom: Vec<Vec<usize>>,
    #[serde(skip)]
    outgoing: Vec<Vec<usize>>,
}

/// `m = q u j` with `q` a retraction, `u` an isomorphism and `j` an inclusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NormalFactorization {
    pub retraction: usize,
    pub isomorphism: usize,
    pub inclusion: usize,
    /// `qu`, the epimorphic part.
    pub epimorphic: usize,
    /// Codomain of `u`, the image of the morphism.
    pub image: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NcReport {
    /// Inclusions form a partial order of monomorphisms and any morphism
    /// factoring one inclusion through another is itself an inclusion.
    pub nc1: AxiomStatus,
    /// Every inclusion splits; the witness is `[a, b]`.
    pub nc2: AxiomStatus,
    /// Every morphism has a normal factorization; the witness is the morphism.
    pub nc3: AxiomStatus,
    /// Every object is the vertex of a normal cone with identity component
    /// there; the witness is the object.
    pub nc4: AxiomStatus,
}

impl NcReport {
    pub fn all_pass(&self) -> bool {
        self.nc1.passed() && self.nc2.passed() && self.nc3.passed() && self.nc4.passed()
    }
}

fn status(w: Option<Vec<usize>>) -> AxiomStatus {
    w.map_or(AxiomStatus::Pass, AxiomStatus::Fail)
}

impl FiniteCategory {
    /// Materializes and validates a category on `0..objects` and
    /// `0..morphisms`. `inclusion(a, b)` names `j(a, b)`.
    #[allow(clippy::too_many_arguments)]
    pub fn from_fns(
        objects: usize,
        morphisms: usize,
        dom: impl Fn(usize) -> usize,
        cod: impl Fn(usize) -> usize,
        compose: impl Fn(usize, usize) -> Option<usize>,
        identity: impl Fn(usize) -> usize,
        inclusion: impl Fn(usize, usize) -> Option<usize>,
    ) -> Result<Self> {
        let m = morphisms;
        let dom: Vec<usize> = (0..m).map(&dom).collect();
        let cod: Vec<usize> = (0..m).map(&cod).collect();
        if let Some(x) = (0..m).find(|&x| dom[x] >= objects || cod[x] >= objects) {
            return Err(Error::InvalidParameter(format!(
                "morphism {x} has an endpoint out of range"
            )));
        }
        let mut hom = vec![Vec::new(); objects * objects];
        for x in 0..m {
            hom[dom[x] * objects + cod[x]].push(x);
        }
        let mut outgoing = vec![Vec::new(); objects];
        for x in 0..m {
            outgoing[dom[x]].push(x);
        }
        let mut table = vec![None; m * m];
        for x in 0..m {
            for &y in &outgoing[cod[x]] {
                table[x * m + y] = compose(x, y);
            }
        }
        let cat = FiniteCategory {
            objects,
            dom,
            cod,
            compose: table,
            identity: (0..objects).map(identity).collect(),
            inclusion: (0..objects * objects)
                .map(|i| inclusion(i / objects, i % objects))
                .collect(),
            hom,
            outgoing,
        };
        cat.validate()?;
        Ok(cat)
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(format!("not a category: {msg}")));
        let m = self.morphism_count();
        for a in 0..self.objects {
            let i = self.identity[a];
            if i >= m || self.dom[i] != a || self.cod[i] != a {
                return bad(format!("identity of object {a}"));
            }
        }
        for x in 0..m {
            for &y in self.hom_from(self.cod[x]) {
                let Some(xy) = self.compose(x, y) else {
                    return bad(format!("{x};{y} undefined"));
                };
                if xy >= m || self.dom[xy] != self.dom[x] || self.cod[xy] != self.cod[y] {
                    return bad(format!("{x};{y} has the wrong endpoints"));
                }
            }
            let (d, c) = (self.identity[self.dom[x]], self.identity[self.cod[x]]);
            if self.compose(d, x) != Some(x) || self.compose(x, c) != Some(x) {
                return bad(format!("identities do not fix {x}"));
            }
        }
        for x in 0..m {
            for &y in self.hom_from(self.cod[x]) {
                let xy = self.compose(x, y).expect("checked");
                for &z in self.hom_from(self.cod[y]) {
                    let yz = self.compose(y, z).expect("checked");
                    if self.compose(xy, z) != self.compose(x, yz) {
                        return bad(format!("({x};{y});{z} differs from {x};({y};{z})"));
                    }
                }
            }
        }
        for a in 0..self.objects {
            for b in 0..self.objects {
                if let Some(j) = self.inclusion(a, b) {
                    if j >= m || self.dom[j] != a || self.cod[j] != b {
                        return bad(format!("inclusion of {a} in {b}"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn object_count(&self) -> usize {
        self.objects
    }

    pub fn morphism_count(&self) -> usize {
        self.dom.len()
    }

    pub fn dom(&self, x: usize) -> usize {
        self.dom[x]
    }

    pub fn cod(&self, x: usize) -> usize {
        self.cod[x]
    }

    pub fn compose(&self, x: usize, y: usize) -> Option<usize> {
        self.compose[x * self.morphism_count() + y]
    }

    pub fn identity(&self, a: usize) -> usize {
        self.identity[a]
    }

    pub fn hom(&self, a: usize, b: usize) -> &[usize] {
        &self.hom[a * self.objects + b]
    }

    /// Morphisms with domain `a`.
    fn hom_from(&self, a: usize) -> &[usize] {
        &self.outgoing[a]
    }

    pub fn inclusion(&self, a: usize, b: usize) -> Option<usize> {
        self.inclusion[a * self.objects + b]
    }

    /// `a ⊆ b`.
    pub fn is_subobject(&self, a: usize, b: usize) -> bool {
        self.inclusion(a, b).is_some()
    }

    pub fn inverse_of(&self, x: usize) -> Option<usize> {
        let (a, b) = (self.dom[x], self.cod[x]);
        self.hom(b, a).iter().copied().find(|&y| {
            self.compose(x, y) == Some(self.identity[a])
                && self.compose(y, x) == Some(self.identity[b])
        })
    }

    pub fn is_isomorphism(&self, x: usize) -> bool {
        self.inverse_of(x).is_some()
    }

    /// Morphisms `q: b → a` with `j(a, b) q = 1_a`.
    pub fn retractions(&self, a: usize, b: usize) -> Vec<usize> {
        let Some(j) = self.inclusion(a, b) else {
            return Vec::new();
        };
        self.hom(b, a)
            .iter()
            .copied()
            .filter(|&q| self.compose(j, q) == Some(self.identity[a]))
            .collect()
    }

    /// Every normal factorization of `m`, in index order.
    pub fn normal_factorizations(&self, m: usize) -> Vec<NormalFactorization> {
        let (a, d) = (self.dom[m], self.cod[m]);
        let mut out = Vec::new();
        for a2 in 0..self.objects {
            for q in self.retractions(a2, a) {
                for c in 0..self.objects {
                    let Some(j) = self.inclusion(c, d) else {
                        continue;
                    };
                    for &u in self.hom(a2, c) {
                        if !self.is_isomorphism(u) {
                            continue;
                        }
                        let qu = self.compose(q, u).expect("composable");
                        if self.compose(qu, j) == Some(m) {
                            out.push(NormalFactorization {
                                retraction: q,
                                isomorphism: u,
                                inclusion: j,
                                epimorphic: qu,
                                image: c,
                            });
                        }
                    }
                }
            }
        }
        out
    }

    pub fn normal_factorization(&self, m: usize) -> Result<NormalFactorization> {
        self.normal_factorizations(m)
            .into_iter()
            .next()
            .ok_or(Error::FactorizationNotFound(m))
    }

    /// The category with object `a` renamed `perm[a]`; morphism indices are kept.
    pub fn permute_objects(&self, perm: &[usize]) -> Result<FiniteCategory> {
        let n = self.objects;
        let mut inv = vec![usize::MAX; n];
        for (a, &p) in perm.iter().enumerate() {
            inv[p] = a;
        }
        FiniteCategory::from_fns(
            n,
            self.morphism_count(),
            |x| perm[self.dom[x]],
            |x| perm[self.cod[x]],
            |x, y| self.compose(x, y),
            |a| self.identity[inv[a]],
            |a, b| self.inclusion(inv[a], inv[b]),
        )
    }

    pub fn verify_nc(&self) -> NcReport {
        NcReport {
            nc1: status(self.nc1_witness()),
            nc2: status(self.nc2_witness()),
            nc3: status(
                (0..self.morphism_count())
                    .find(|&m| self.normal_factorizations(m).is_empty())
                    .map(|m| vec![m]),
            ),
            nc4: status(
                (0..self.objects)
                    .find(|&c| super::cones::identity_cone(self, c).is_none())
                    .map(|c| vec![c]),
            ),
        }
    }

    fn nc2_witness(&self) -> Option<Vec<usize>> {
        for a in 0..self.objects {
            for b in 0..self.objects {
                if self.is_subobject(a, b) && self.retractions(a, b).is_empty() {
                    return Some(vec![a, b]);
                }
            }
        }
        None
    }

    fn nc1_witness(&self) -> Option<Vec<usize>> {
        let n = self.objects;
        for a in 0..n {
            if self.inclusion(a, a) != Some(self.identity[a]) {
                return Some(vec![a, a]);
            }
            for b in 0..n {
                let Some(jab) = self.inclusion(a, b) else {
                    continue;
                };
                if a != b && self.is_subobject(b, a) {
                    return Some(vec![a, b]);
                }
                for c in 0..n {
                    if let Some(jbc) = self.inclusion(b, c) {
                        if self.compose(jab, jbc) != self.inclusion(a, c) {
                            return Some(vec![a, b, c]);
                        }
                    }
                }
                // monic
                for x in 0..n {
                    let h = self.hom(x, a);
                    for (i, &f) in h.iter().enumerate() {
                        for &g in &h[i + 1..] {
                            if self.compose(f, jab) == self.compose(g, jab) {
                                return Some(vec![a, b, f, g]);
                            }
                        }
                    }
                }
                // j(a, b) = h j(c, b) forces h = j(a, c)
                for c in 0..n {
                    let Some(jcb) = self.inclusion(c, b) else {
                        continue;
                    };
                    for &h in self.hom(a, c) {
                        if self.compose(h, jcb) == Some(jab) && self.inclusion(a, c) != Some(h) {
                            return Some(vec![a, b, c, h]);
                        }
                    }
                }
            }
        }
        None
    }
}
