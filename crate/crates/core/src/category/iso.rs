use serde::Serialize;

use super::finite::FiniteCategory;

/// An isomorphism of categories with subobjects.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CategoryIsomorphism {
    pub objects: Vec<usize>,
    pub morphisms: Vec<usize>,
}

impl CategoryIsomorphism {
    /// Checks bijectivity and preservation of endpoints, composition,
    /// identities and inclusions.
    pub fn is_valid(&self, a: &FiniteCategory, b: &FiniteCategory) -> bool {
        let (n, m) = (a.object_count(), a.morphism_count());
        if n != b.object_count()
            || m != b.morphism_count()
            || self.objects.len() != n
            || self.morphisms.len() != m
        {
            return false;
        }
        let bijective = |map: &[usize], size: usize| {
            let mut seen = vec![false; size];
            map.iter()
                .all(|&x| x < size && !std::mem::replace(&mut seen[x], true))
        };
        if !bijective(&self.objects, n) || !bijective(&self.morphisms, m) {
            return false;
        }
        let (po, pm) = (&self.objects, &self.morphisms);
        (0..m).all(|x| b.dom(pm[x]) == po[a.dom(x)] && b.cod(pm[x]) == po[a.cod(x)])
            && (0..n).all(|c| pm[a.identity(c)] == b.identity(po[c]))
            && (0..n).all(|c| {
                (0..n).all(|d| a.inclusion(c, d).map(|j| pm[j]) == b.inclusion(po[c], po[d]))
            })
            && (0..m)
                .all(|x| (0..m).all(|y| a.compose(x, y).map(|z| pm[z]) == b.compose(pm[x], pm[y])))
    }
}

fn permutations(n: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    fn go(
        perm: &mut Vec<usize>,
        used: &mut [bool],
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if perm.len() == used.len() {
            return visit(perm);
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                perm.push(i);
                if go(perm, used, visit) {
                    return true;
                }
                perm.pop();
                used[i] = false;
            }
        }
        false
    }
    go(&mut Vec::with_capacity(n), &mut vec![false; n], &mut visit);
}

fn consistent(a: &FiniteCategory, b: &FiniteCategory, map: &[Option<usize>], x: usize) -> bool {
    let m = a.morphism_count();
    let img = |y: usize| map[y];
    for y in (0..m).filter(|&y| img(y).is_some()) {
        for (p, q) in [(x, y), (y, x)] {
            let (Some(fp), Some(fq)) = (img(p), img(q)) else {
                continue;
            };
            if let Some(pq) = a.compose(p, q) {
                if let Some(fpq) = img(pq) {
                    if b.compose(fp, fq) != Some(fpq) {
                        return false;
                    }
                }
            }
        }
    }
    // x as a composite of assigned morphisms
    for p in 0..m {
        for q in 0..m {
            if a.compose(p, q) == Some(x) {
                if let (Some(fp), Some(fq), Some(fx)) = (img(p), img(q), img(x)) {
                    if b.compose(fp, fq) != Some(fx) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn assign(
    a: &FiniteCategory,
    b: &FiniteCategory,
    objects: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut Vec<Option<usize>>,
    used: &mut Vec<bool>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    if map[x].is_some() {
        return consistent(a, b, map, x) && assign(a, b, objects, order, depth + 1, map, used);
    }
    for &y in b.hom(objects[a.dom(x)], objects[a.cod(x)]) {
        if used[y] {
            continue;
        }
        map[x] = Some(y);
        used[y] = true;
        if consistent(a, b, map, x) && assign(a, b, objects, order, depth + 1, map, used) {
            return true;
        }
        map[x] = None;
        used[y] = false;
    }
    false
}

/// Brute-force search for an isomorphism `a → b` preserving inclusions.
pub fn category_isomorphism(a: &FiniteCategory, b: &FiniteCategory) -> Option<CategoryIsomorphism> {
    let n = a.object_count();
    if n != b.object_count() || a.morphism_count() != b.morphism_count() {
        return None;
    }
    let m = a.morphism_count();
    let mut found = None;
    permutations(n, |po| {
        let shape = (0..n).all(|c| {
            (0..n).all(|d| {
                a.hom(c, d).len() == b.hom(po[c], po[d]).len()
                    && a.is_subobject(c, d) == b.is_subobject(po[c], po[d])
            })
        });
        if !shape {
            return false;
        }
        let mut map = vec![None; m];
        let mut used = vec![false; m];
        for c in 0..n {
            let (x, y) = (a.identity(c), b.identity(po[c]));
            map[x] = Some(y);
            used[y] = true;
            for d in 0..n {
                if let (Some(x), Some(y)) = (a.inclusion(c, d), b.inclusion(po[c], po[d])) {
                    if map[x].is_some_and(|z| z != y) || (map[x].is_none() && used[y]) {
                        return false;
                    }
                    map[x] = Some(y);
                    used[y] = true;
                }
            }
        }
        let order: Vec<usize> = (0..m).collect();
        if assign(a, b, po, &order, 0, &mut map, &mut used) {
            let iso = CategoryIsomorphism {
                objects: po.to_vec(),
                morphisms: map.into_iter().map(|x| x.expect("assigned")).collect(),
            };
            if iso.is_valid(a, b) {
                found = Some(iso);
                return true;
            }
        }
        false
    });
    found
}
