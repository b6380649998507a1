use serde::Serialize;

use super::BiorderedSet;
use crate::error::{Error, Result};
use crate::semigroup::Semigroup;

/// Agreement of the two sandwich-set routes over every idempotent pair, and
/// membership of `f(ef)′e` in `S(e, f)` for every inverse `(ef)′`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SandwichCoherence {
    pub pairs: usize,
    pub inverse_instances: usize,
    /// `(e, f)` whose table and intrinsic sandwich sets differ.
    pub route_mismatch: Option<(usize, usize)>,
    /// `(e, f, (ef)′, h)` with `h = f(ef)′e` outside `S(e, f)`.
    pub inverse_failure: Option<(usize, usize, usize, usize)>,
}

impl SandwichCoherence {
    pub fn passed(&self) -> bool {
        self.route_mismatch.is_none() && self.inverse_failure.is_none()
    }
}

/// Semigroup elements only; the inverse clause is checked on regular inputs.
pub fn sandwich_coherence(s: &Semigroup) -> SandwichCoherence {
    let b = BiorderedSet::extract(s);
    let origin = b.origin().expect("extracted");
    let regular = s.is_regular();
    let mut out = SandwichCoherence {
        pairs: 0,
        inverse_instances: 0,
        route_mismatch: None,
        inverse_failure: None,
    };
    for (i, &e) in origin.iter().enumerate() {
        for (j, &f) in origin.iter().enumerate() {
            out.pairs += 1;
            let table = sandwich_semigroup(s, e, f).expect("idempotents");
            let mut intrinsic: Vec<usize> =
                b.sandwich(i, j).into_iter().map(|h| origin[h]).collect();
            intrinsic.sort_unstable();
            if out.route_mismatch.is_none() && table != intrinsic {
                out.route_mismatch = Some((e, f));
            }
            if !regular {
                continue;
            }
            let ef = s.mul(e, f);
            for x in s.inverses_of(ef) {
                out.inverse_instances += 1;
                let h = s.mul(s.mul(f, x), e);
                if out.inverse_failure.is_none() && !table.contains(&h) {
                    out.inverse_failure = Some((e, f, x, h));
                }
            }
        }
    }
    out
}

/// `S(e, f) = { h ∈ E : he = h = fh, ehf = ef }`, read off the Cayley table.
/// Arguments and result are semigroup elements.
pub fn sandwich_semigroup(s: &Semigroup, e: usize, f: usize) -> Result<Vec<usize>> {
    for x in [e, f] {
        if x >= s.order() || !s.is_idempotent(x) {
            return Err(Error::NotIdempotent(x));
        }
    }
    let ef = s.mul(e, f);
    Ok(s.idempotents()
        .iter()
        .copied()
        .filter(|&h| s.mul(h, e) == h && s.mul(f, h) == h && s.mul(s.mul(e, h), f) == ef)
        .collect())
}

/// Maximal elements of `M(e, f)` under the preorder
/// `g ≺ h ⇔ eg ω^r eh ∧ gf ω^l hf`. On a regular biorder these are exactly
/// the greatest elements.
pub(super) fn intrinsic(b: &BiorderedSet, e: usize, f: usize) -> Vec<usize> {
    // On a verified biorder the products below are defined because
    // g ∈ M(e,f) means g ω^l e and g ω^r f.
    let m: Vec<(usize, Option<usize>, Option<usize>)> = b
        .elements()
        .filter(|&g| b.omega_l(g, e) && b.omega_r(g, f))
        .map(|g| (g, b.product(e, g), b.product(g, f)))
        .collect();
    let below = |g: &(usize, Option<usize>, Option<usize>),
                 h: &(usize, Option<usize>, Option<usize>)| {
        match (g.1, g.2, h.1, h.2) {
            (Some(eg), Some(gf), Some(eh), Some(hf)) => b.omega_r(eg, eh) && b.omega_l(gf, hf),
            _ => false,
        }
    };
    m.iter()
        .filter(|h| m.iter().all(|g| !below(h, g) || below(g, h)))
        .map(|h| h.0)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{enumerate_corpus, Family};

    /// Maps biorder indices back to semigroup elements.
    fn intrinsic_elements(s: &Semigroup, e: usize, f: usize) -> Vec<usize> {
        let b = BiorderedSet::extract(s);
        let (ie, jf) = (b.index_of(e).unwrap(), b.index_of(f).unwrap());
        let origin = b.origin().unwrap();
        b.sandwich(ie, jf).into_iter().map(|h| origin[h]).collect()
    }

    #[test]
    fn rectangular_band_sandwich() {
        let s = Family::RectangularBand(2, 2).generate_default().unwrap();
        // elements (i,j) lex: (1,1)=0 (1,2)=1 (2,1)=2 (2,2)=3
        assert_eq!(sandwich_semigroup(&s, 0, 3).unwrap(), vec![2]);
        assert_eq!(intrinsic_elements(&s, 0, 3), vec![2]);
    }

    #[test]
    fn brandt_sandwich_is_zero() {
        let s = Family::Brandt(2).generate_default().unwrap();
        assert_eq!(sandwich_semigroup(&s, 1, 4).unwrap(), vec![0]);
        assert_eq!(intrinsic_elements(&s, 1, 4), vec![0]);
    }

    #[test]
    fn rejects_non_idempotents() {
        let s = Family::Brandt(2).generate_default().unwrap();
        assert_eq!(sandwich_semigroup(&s, 2, 1), Err(Error::NotIdempotent(2)));
    }

    #[test]
    fn both_routes_agree_on_regular_corpus_and_families() {
        let mut all: Vec<Semigroup> = enumerate_corpus(4)
            .unwrap()
            .into_iter()
            .filter(Semigroup::is_regular)
            .collect();
        for f in [
            Family::FullTransformation(3),
            Family::SymmetricInverse(3),
            Family::MatrixMonoid { dim: 2, field: 2 },
            Family::RectangularBand(2, 3),
            Family::BrandtGroup(2, 2),
        ] {
            all.push(f.generate_default().unwrap());
        }
        for s in &all {
            for &e in s.idempotents() {
                for &f in s.idempotents() {
                    let mut lhs = sandwich_semigroup(s, e, f).unwrap();
                    let mut rhs = intrinsic_elements(s, e, f);
                    lhs.sort_unstable();
                    rhs.sort_unstable();
                    assert_eq!(lhs, rhs, "S({e},{f}) in {s:?}");
                }
            }
        }
    }

    #[test]
    fn routes_differ_off_regular_semigroups() {
        // 2 and 3 are idempotents with 2*3 = 1 not idempotent; E(S) is the
        // biorder of the three-element semilattice {0, a, b} with ab = 0
        let s = Semigroup::new(vec![
            vec![0, 0, 0, 0],
            vec![0, 0, 0, 1],
            vec![0, 1, 2, 1],
            vec![0, 0, 0, 3],
        ])
        .unwrap();
        let semilattice =
            Semigroup::new(vec![vec![0, 0, 0], vec![0, 1, 0], vec![0, 0, 2]]).unwrap();
        let (a, b) = (
            BiorderedSet::extract(&s),
            BiorderedSet::extract(&semilattice),
        );
        assert!(super::super::biorder_isomorphism(&a, &b).is_some());
        assert_eq!(sandwich_semigroup(&s, 2, 3).unwrap(), Vec::<usize>::new());
        assert_eq!(sandwich_semigroup(&semilattice, 1, 2).unwrap(), vec![0]);
        assert_eq!(intrinsic_elements(&s, 2, 3), vec![0]);
        assert_eq!(sandwich_coherence(&s).route_mismatch, Some((2, 3)));
    }

    #[test]
    fn coherence_on_regular_corpus() {
        for s in enumerate_corpus(4)
            .unwrap()
            .iter()
            .filter(|s| s.is_regular())
        {
            let c = sandwich_coherence(s);
            assert!(c.passed(), "{:?}: {c:?}", s.rows());
            assert!(c.inverse_instances >= c.pairs);
        }
    }
}
