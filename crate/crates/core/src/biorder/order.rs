use serde::Serialize;

use crate::error::Result;
use crate::semigroup::Semigroup;

/// A binary relation on `0..n` as a dense boolean matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Relation {
    n: usize,
    m: Vec<bool>,
}

impl Relation {
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut m = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                m[a * n + b] = f(a, b);
            }
        }
        Relation { n, m }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn holds(&self, a: usize, b: usize) -> bool {
        self.m[a * self.n + b]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |a| {
            (0..self.n)
                .filter(move |&b| self.holds(a, b))
                .map(move |b| (a, b))
        })
    }

    pub fn is_partial_order(&self) -> bool {
        let n = self.n;
        (0..n).all(|a| self.holds(a, a))
            && self.pairs().all(|(a, b)| a == b || !self.holds(b, a))
            && self
                .pairs()
                .all(|(a, b)| (0..n).all(|c| !self.holds(b, c) || self.holds(a, c)))
    }
}

/// `x ≤ y` iff `xS¹ ⊆ yS¹` and `x = fy` for some idempotent `f` with `f R x`.
pub fn natural_partial_order(s: &Semigroup) -> Result<Relation> {
    s.require_regular()?;
    let g = s.green();
    let idem = s.idempotents();
    Ok(Relation::from_fn(s.order(), |x, y| {
        g.r_leq(x, y) && idem.iter().any(|&f| g.r_related(f, x) && s.mul(f, y) == x)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::semigroup::Family;

    /// For inverse semigroups the order is `x ≤ y ⇔ x = x x⁻¹ y`.
    fn inverse_order(s: &Semigroup) -> Relation {
        Relation::from_fn(s.order(), |x, y| {
            let xi = s.inverses_of(x)[0];
            s.mul(s.mul(x, xi), y) == x
        })
    }

    #[test]
    fn matches_inverse_semigroup_order() {
        for f in [
            Family::SymmetricInverse(3),
            Family::Brandt(3),
            Family::BrandtGroup(2, 3),
        ] {
            let s = f.generate_default().unwrap();
            assert!(s.is_inverse());
            let nat = natural_partial_order(&s).unwrap();
            assert_eq!(nat, inverse_order(&s), "{f}");
            assert!(nat.is_partial_order());
        }
    }

    #[test]
    fn on_idempotents_it_is_omega() {
        let s = Family::FullTransformation(3).generate_default().unwrap();
        let nat = natural_partial_order(&s).unwrap();
        assert!(nat.is_partial_order());
        for &e in s.idempotents() {
            for &f in s.idempotents() {
                let omega = s.mul(e, f) == e && s.mul(f, e) == e;
                assert_eq!(nat.holds(e, f), omega);
            }
        }
    }

    #[test]
    fn requires_regularity() {
        let s = Family::NullPlusZero(3).generate_default().unwrap();
        assert!(matches!(
            natural_partial_order(&s),
            Err(Error::NotRegular(_))
        ));
    }
}
