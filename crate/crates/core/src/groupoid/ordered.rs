use serde::Serialize;

use crate::biorder::AxiomStatus;

/// A finite ordered groupoid with materialized tables. Morphisms and
/// vertices are dense indices.
#[derive(Debug, Clone)]
pub struct OrderedGroupoid {
    vertices: usize,
    dom: Vec<usize>,
    cod: Vec<usize>,
    /// `compose[x * m + y]` is `xy` (x first), when `cod(x) = dom(y)`.
    compose: Vec<Option<usize>>,
    inverse: Vec<usize>,
    identity: Vec<usize>,
    leq: Vec<bool>,
    /// Morphisms below each morphism.
    below: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderedGroupoidReport {
    /// Identities, associativity, inverses, and `≤` a partial order.
    pub groupoid: AxiomStatus,
    pub og1: AxiomStatus,
    pub og2: AxiomStatus,
    pub og3: AxiomStatus,
    pub og3_star: AxiomStatus,
}

impl OrderedGroupoidReport {
    pub fn all_pass(&self) -> bool {
        [
            &self.groupoid,
            &self.og1,
            &self.og2,
            &self.og3,
            &self.og3_star,
        ]
        .iter()
        .all(|s| s.passed())
    }
}

fn status(w: Option<Vec<usize>>) -> AxiomStatus {
    w.map_or(AxiomStatus::Pass, AxiomStatus::Fail)
}

impl OrderedGroupoid {
    /// Builds the tables from closures over morphism indices `0..morphisms`.
    #[allow(clippy::too_many_arguments)]
    pub fn from_fns(
        vertices: usize,
        morphisms: usize,
        dom: impl Fn(usize) -> usize,
        cod: impl Fn(usize) -> usize,
        compose: impl Fn(usize, usize) -> Option<usize>,
        inverse: impl Fn(usize) -> usize,
        identity: impl Fn(usize) -> usize,
        leq: impl Fn(usize, usize) -> bool,
    ) -> Self {
        let m = morphisms;
        let dom: Vec<usize> = (0..m).map(&dom).collect();
        let cod: Vec<usize> = (0..m).map(&cod).collect();
        let mut table = vec![None; m * m];
        for x in 0..m {
            for y in 0..m {
                if cod[x] == dom[y] {
                    table[x * m + y] = compose(x, y);
                }
            }
        }
        let mut order = vec![false; m * m];
        let mut below = vec![Vec::new(); m];
        for x in 0..m {
            for y in 0..m {
                if leq(y, x) {
                    order[y * m + x] = true;
                    below[x].push(y);
                }
            }
        }
        OrderedGroupoid {
            vertices,
            dom,
            cod,
            compose: table,
            inverse: (0..m).map(inverse).collect(),
            identity: (0..vertices).map(identity).collect(),
            leq: order,
            below,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
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

    pub fn inverse(&self, x: usize) -> usize {
        self.inverse[x]
    }

    pub fn identity(&self, v: usize) -> usize {
        self.identity[v]
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.morphism_count() + y]
    }

    /// Morphisms `u ≤ x` with `dom(u) = v`.
    fn restrictions(&self, v: usize, x: usize) -> Vec<usize> {
        self.below[x]
            .iter()
            .copied()
            .filter(|&u| self.dom[u] == v)
            .collect()
    }

    fn corestrictions(&self, x: usize, v: usize) -> Vec<usize> {
        self.below[x]
            .iter()
            .copied()
            .filter(|&u| self.cod[u] == v)
            .collect()
    }

    /// The unique `u ≤ x` with domain `v`, for `1_v ≤ 1_dom(x)`.
    pub fn restriction(&self, v: usize, x: usize) -> Option<usize> {
        match self.restrictions(v, x).as_slice() {
            [u] => Some(*u),
            _ => None,
        }
    }

    pub fn corestriction(&self, x: usize, v: usize) -> Option<usize> {
        match self.corestrictions(x, v).as_slice() {
            [u] => Some(*u),
            _ => None,
        }
    }

    pub fn check_axioms(&self) -> OrderedGroupoidReport {
        OrderedGroupoidReport {
            groupoid: status(self.groupoid_witness()),
            og1: status(self.og1_witness()),
            og2: status(self.og2_witness()),
            og3: status(self.og3_witness(false)),
            og3_star: status(self.og3_witness(true)),
        }
    }

    fn groupoid_witness(&self) -> Option<Vec<usize>> {
        let m = self.morphism_count();
        for v in 0..self.vertices {
            let i = self.identity[v];
            if self.dom[i] != v || self.cod[i] != v || self.compose(i, i) != Some(i) {
                return Some(vec![i]);
            }
        }
        for x in 0..m {
            let (d, r) = (self.identity[self.dom[x]], self.identity[self.cod[x]]);
            if self.compose(d, x) != Some(x) || self.compose(x, r) != Some(x) {
                return Some(vec![x]);
            }
            let xi = self.inverse[x];
            if self.compose(x, xi) != Some(d) || self.compose(xi, x) != Some(r) {
                return Some(vec![x]);
            }
            for y in 0..m {
                if self.cod[x] == self.dom[y] && self.compose(x, y).is_none() {
                    return Some(vec![x, y]);
                }
                let Some(xy) = self.compose(x, y) else {
                    continue;
                };
                if self.dom[xy] != self.dom[x] || self.cod[xy] != self.cod[y] {
                    return Some(vec![x, y]);
                }
                for z in 0..m {
                    if self.cod[y] != self.dom[z] {
                        continue;
                    }
                    let yz = self.compose(y, z).expect("composable");
                    if self.compose(xy, z) != self.compose(x, yz) {
                        return Some(vec![x, y, z]);
                    }
                }
            }
            // partial order
            if !self.leq(x, x) {
                return Some(vec![x]);
            }
            for &y in &self.below[x] {
                if y != x && self.leq(x, y) {
                    return Some(vec![y, x]);
                }
                for &z in &self.below[y] {
                    if !self.leq(z, x) {
                        return Some(vec![z, y, x]);
                    }
                }
            }
        }
        None
    }

    fn og1_witness(&self) -> Option<Vec<usize>> {
        let m = self.morphism_count();
        for x in 0..m {
            for y in 0..m {
                let Some(xy) = self.compose(x, y) else {
                    continue;
                };
                for &u in &self.below[x] {
                    for &v in &self.below[y] {
                        if let Some(uv) = self.compose(u, v) {
                            if !self.leq(uv, xy) {
                                return Some(vec![u, x, v, y]);
                            }
                        }
                    }
                }
            }
        }
        None
    }

    fn og2_witness(&self) -> Option<Vec<usize>> {
        for y in 0..self.morphism_count() {
            for &x in &self.below[y] {
                if !self.leq(self.inverse[x], self.inverse[y]) {
                    return Some(vec![x, y]);
                }
            }
        }
        None
    }

    fn og3_witness(&self, dual: bool) -> Option<Vec<usize>> {
        for x in 0..self.morphism_count() {
            let end = if dual { self.cod[x] } else { self.dom[x] };
            for v in 0..self.vertices {
                if !self.leq(self.identity[v], self.identity[end]) {
                    continue;
                }
                let found = if dual {
                    self.corestrictions(x, v)
                } else {
                    self.restrictions(v, x)
                };
                if found.len() != 1 {
                    return Some(vec![v, x]);
                }
            }
        }
        None
    }
}
