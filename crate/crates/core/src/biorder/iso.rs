use super::BiorderedSet;

/// Per-element invariants relative to a subset.
fn signature(b: &BiorderedSet, dom: &[usize], x: usize) -> [usize; 5] {
    let count = |f: &dyn Fn(usize) -> bool| dom.iter().filter(|&&y| f(y)).count();
    [
        count(&|y| b.omega_r(y, x)),
        count(&|y| b.omega_r(x, y)),
        count(&|y| b.omega_l(y, x)),
        count(&|y| b.omega_l(x, y)),
        count(&|y| b.product(x, y).is_some()),
    ]
}

struct Search<'a> {
    a: &'a BiorderedSet,
    b: &'a BiorderedSet,
    dom: &'a [usize],
    cod: &'a [usize],
    dom_pos: Vec<usize>,
    sig_a: Vec<[usize; 5]>,
    sig_b: Vec<[usize; 5]>,
    /// Image (as element of `b`) of `dom[i]`.
    map: Vec<Option<usize>>,
    used: Vec<bool>,
    all: bool,
    found: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn image(&self, x: usize) -> Option<usize> {
        match self.dom_pos[x] {
            usize::MAX => None,
            i => self.map[i],
        }
    }

    /// Checks every relation and product among assigned elements that
    /// involves `dom[i]`.
    fn consistent(&self, i: usize) -> bool {
        let (a, b) = (self.a, self.b);
        let x = self.dom[i];
        let y = self.map[i].expect("assigned");
        for (j, &x2) in self.dom.iter().enumerate() {
            let Some(y2) = self.map[j] else { continue };
            if a.omega_r(x, x2) != b.omega_r(y, y2)
                || a.omega_r(x2, x) != b.omega_r(y2, y)
                || a.omega_l(x, x2) != b.omega_l(y, y2)
                || a.omega_l(x2, x) != b.omega_l(y2, y)
            {
                return false;
            }
            for (p, q, pi, qi) in [(x, x2, y, y2), (x2, x, y2, y)] {
                match (a.product(p, q), b.product(pi, qi)) {
                    (None, None) => {}
                    (Some(z), Some(w)) => {
                        if let Some(zi) = self.image(z) {
                            if zi != w {
                                return false;
                            }
                        }
                    }
                    _ => return false,
                }
            }
        }
        // products whose value is x
        for (j, &p) in self.dom.iter().enumerate() {
            let Some(pi) = self.map[j] else { continue };
            for (k, &q) in self.dom.iter().enumerate() {
                let Some(qi) = self.map[k] else { continue };
                if a.product(p, q) == Some(x) && b.product(pi, qi) != Some(y) {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self, i: usize) {
        if !self.all && !self.found.is_empty() {
            return;
        }
        if i == self.dom.len() {
            self.found
                .push(self.map.iter().map(|m| m.expect("complete")).collect());
            return;
        }
        if self.map[i].is_some() {
            if self.consistent(i) {
                self.run(i + 1);
            }
            return;
        }
        for k in 0..self.cod.len() {
            if self.used[k] || self.sig_a[i] != self.sig_b[k] {
                continue;
            }
            self.map[i] = Some(self.cod[k]);
            self.used[k] = true;
            if self.consistent(i) {
                self.run(i + 1);
            }
            self.map[i] = None;
            self.used[k] = false;
        }
    }
}

/// Bijections `dom → cod` preserving and reflecting `ω^r`, `ω^l` and basic
/// products, extending the fixed assignments. `dom` and `cod` must be closed
/// under basic products. Each map is aligned with `dom` and lists images in
/// `b`. With `all == false` at most one is returned.
pub(crate) fn ideal_isomorphisms(
    a: &BiorderedSet,
    dom: &[usize],
    b: &BiorderedSet,
    cod: &[usize],
    fixed: &[(usize, usize)],
    all: bool,
) -> Vec<Vec<usize>> {
    if dom.len() != cod.len() {
        return Vec::new();
    }
    let mut dom_pos = vec![usize::MAX; a.size()];
    for (i, &x) in dom.iter().enumerate() {
        dom_pos[x] = i;
    }
    let mut cod_pos = vec![usize::MAX; b.size()];
    for (i, &y) in cod.iter().enumerate() {
        cod_pos[y] = i;
    }
    let sig_a: Vec<_> = dom.iter().map(|&x| signature(a, dom, x)).collect();
    let sig_b: Vec<_> = cod.iter().map(|&y| signature(b, cod, y)).collect();
    let mut sa = sig_a.clone();
    let mut sb = sig_b.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Vec::new();
    }
    let mut map = vec![None; dom.len()];
    let mut used = vec![false; cod.len()];
    for &(x, y) in fixed {
        let (i, k) = (dom_pos[x], cod_pos[y]);
        if i == usize::MAX || k == usize::MAX || sig_a[i] != sig_b[k] || used[k] {
            return Vec::new();
        }
        map[i] = Some(y);
        used[k] = true;
    }
    let mut search = Search {
        a,
        b,
        dom,
        cod,
        dom_pos,
        sig_a,
        sig_b,
        map,
        used,
        all,
        found: Vec::new(),
    };
    search.run(0);
    search.found
}

/// An isomorphism of biordered sets `a → b`, if one exists.
pub fn biorder_isomorphism(a: &BiorderedSet, b: &BiorderedSet) -> Option<Vec<usize>> {
    if a.size() != b.size() || a.basic_product_count() != b.basic_product_count() {
        return None;
    }
    let dom: Vec<usize> = a.elements().collect();
    let cod: Vec<usize> = b.elements().collect();
    ideal_isomorphisms(a, &dom, b, &cod, &[], false).pop()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::Family;

    fn bos(f: Family) -> BiorderedSet {
        BiorderedSet::extract(&f.generate_default().unwrap())
    }

    #[test]
    fn relabelled_semigroup_gives_isomorphic_biorder() {
        let s = Family::FullTransformation(3).generate_default().unwrap();
        let perm: Vec<usize> = (0..27).rev().collect();
        let t = s.relabel(&perm).unwrap();
        let (a, b) = (BiorderedSet::extract(&s), BiorderedSet::extract(&t));
        let m = biorder_isomorphism(&a, &b).unwrap();
        for x in a.elements() {
            for y in a.elements() {
                assert_eq!(a.omega_r(x, y), b.omega_r(m[x], m[y]));
                assert_eq!(a.product(x, y).map(|z| m[z]), b.product(m[x], m[y]));
            }
        }
    }

    #[test]
    fn left_and_right_zero_are_not_isomorphic() {
        assert!(
            biorder_isomorphism(&bos(Family::LeftZero(2)), &bos(Family::RightZero(2))).is_none()
        );
        assert!(
            biorder_isomorphism(&bos(Family::LeftZero(2)), &bos(Family::LeftZero(2))).is_some()
        );
    }

    #[test]
    fn chain_automorphisms_are_trivial() {
        let c = bos(Family::ChainSemilattice(4));
        let all: Vec<usize> = c.elements().collect();
        assert_eq!(ideal_isomorphisms(&c, &all, &c, &all, &[], true).len(), 1);
    }

    #[test]
    fn rectangular_band_automorphisms() {
        // 2x2 rectangular band: swaps of rows and of columns independently
        let r = bos(Family::RectangularBand(2, 2));
        let all: Vec<usize> = r.elements().collect();
        assert_eq!(ideal_isomorphisms(&r, &all, &r, &all, &[], true).len(), 4);
        assert_eq!(
            ideal_isomorphisms(&r, &all, &r, &all, &[(0, 3)], true).len(),
            1
        );
    }
}
