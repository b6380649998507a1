//! Normal categories: the principal-ideal categories `𝕃(S)` and `ℝ(S)`,
//! normal factorizations, normal cones and the cone semigroup `T(C)`.

mod cones;
mod finite;
mod ideal;
mod iso;

pub use cones::{
    cone_compose, cone_product, cone_semigroup, enumerate_cones, identity_cone, ConeSemigroup,
    NormalCone,
};
pub use finite::{FiniteCategory, NcReport, NormalFactorization};
pub use ideal::{build_ls, build_rs, CategoryDump, IdealCategory, MorphismDump, ObjectDump, Side};
pub use iso::{category_isomorphism, CategoryIsomorphism};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biorder::AxiomStatus;
    use crate::semigroup::{are_isomorphic, enumerate_corpus, Family, Semigroup};
    use crate::Caps;

    fn ls(f: Family) -> (Semigroup, IdealCategory) {
        let s = f.generate_default().unwrap();
        let c = build_ls(&s).unwrap();
        (s, c)
    }

    #[test]
    fn group_has_one_object() {
        let (s, c) = ls(Family::CyclicGroup(3));
        let cat = c.category();
        assert_eq!(cat.object_count(), 1);
        assert_eq!(cat.hom(0, 0).len(), 3);
        let cones = enumerate_cones(cat, 6).unwrap();
        assert_eq!(cones.len(), 3);
        let t = cone_semigroup(cat, 6, 512).unwrap();
        assert!(are_isomorphic(&s, &t.semigroup).is_some());
    }

    #[test]
    fn hom_sets_are_corners() {
        let (s, c) = ls(Family::Brandt(2));
        let cat = c.category();
        assert_eq!(cat.object_count(), 3);
        for (a, &e) in c.representatives().iter().enumerate() {
            for (b, &f) in c.representatives().iter().enumerate() {
                let corner: std::collections::BTreeSet<usize> =
                    s.elements().flat_map(|x| [s.mul(s.mul(e, x), f)]).collect();
                assert_eq!(cat.hom(a, b).len(), corner.len());
            }
        }
        // E₁₁ S E₂₂ = {E₁₂, 0}
        let zero = c.object_of(s.zero().unwrap()).unwrap();
        for a in 0..3 {
            assert!(cat.is_subobject(zero, a));
            for b in (0..3).filter(|&b| a != zero && b != zero) {
                assert_eq!(cat.hom(a, b).len(), 2);
            }
        }
    }

    #[test]
    fn two_chain_inclusion() {
        let (_, c) = ls(Family::ChainSemilattice(2));
        let cat = c.category();
        assert_eq!(cat.object_count(), 2);
        let bottom = (0..2).find(|&a| cat.is_subobject(a, 1 - a)).unwrap();
        assert!(!cat.is_subobject(1 - bottom, bottom));
        // |0S0| + |0S1| + |1S0| + |1S1| = 1 + 1 + 1 + 2
        assert_eq!(cat.morphism_count(), 5);
    }

    #[test]
    fn regular_corpus_is_normal() {
        for s in enumerate_corpus(3)
            .unwrap()
            .iter()
            .filter(|s| s.is_regular())
        {
            for c in [build_ls(s).unwrap(), build_rs(s).unwrap()] {
                let r = c.category().verify_nc();
                assert!(r.all_pass(), "{:?} {r:?}", s.rows());
            }
        }
    }

    #[test]
    fn rejects_non_regular() {
        let s = Family::NullPlusZero(2).generate_default().unwrap();
        assert!(matches!(build_ls(&s), Err(crate::Error::NotRegular(_))));
    }

    #[test]
    fn normal_factorizations_compose_back() {
        let mut inputs: Vec<Semigroup> = enumerate_corpus(3)
            .unwrap()
            .into_iter()
            .filter(|s| s.is_regular())
            .collect();
        inputs.push(Family::FullTransformation(3).generate_default().unwrap());
        for s in &inputs {
            let c = build_ls(s).unwrap();
            let cat = c.category();
            for m in 0..cat.morphism_count() {
                let nf = c.normal_factorize(m).unwrap();
                let back = cat.compose(
                    cat.compose(nf.retraction, nf.isomorphism).unwrap(),
                    nf.inclusion,
                );
                assert_eq!(back, Some(m));
                // the epimorphic part does not depend on the factorization
                let all = cat.normal_factorizations(m);
                assert!(!all.is_empty());
                assert!(all.iter().all(|g| g.epimorphic == nf.epimorphic));
            }
        }
    }

    #[test]
    fn trivial_factorizations() {
        let (_, c) = ls(Family::ChainSemilattice(3));
        let cat = c.category();
        for a in 0..3 {
            let id = cat.identity(a);
            let nf = c.normal_factorize(id).unwrap();
            assert_eq!((nf.retraction, nf.isomorphism, nf.inclusion), (id, id, id));
            for b in 0..3 {
                if let Some(j) = cat.inclusion(a, b) {
                    let nf = c.normal_factorize(j).unwrap();
                    assert_eq!((nf.retraction, nf.isomorphism, nf.inclusion), (id, id, j));
                }
            }
        }
    }

    #[test]
    fn missing_splitting_fails_nc2() {
        // objects 0 ⊆ 1; morphisms 1₀, 1₁, j and nothing from 1 back to 0
        let compose = |x: usize, y: usize| match (x, y) {
            (0, 0) => Some(0),
            (1, 1) => Some(1),
            (0, 2) => Some(2),
            (2, 1) => Some(2),
            _ => None,
        };
        let cat = FiniteCategory::from_fns(
            2,
            3,
            |x| [0, 1, 0][x],
            |x| [0, 1, 1][x],
            compose,
            |a| a,
            |a, b| match (a, b) {
                (0, 0) => Some(0),
                (1, 1) => Some(1),
                (0, 1) => Some(2),
                _ => None,
            },
        )
        .unwrap();
        let r = cat.verify_nc();
        assert!(r.nc1.passed());
        assert_eq!(r.nc2, AxiomStatus::Fail(vec![0, 1]));
    }

    #[test]
    fn non_category_is_rejected() {
        let err = FiniteCategory::from_fns(1, 2, |_| 0, |_| 0, |_, _| Some(1), |_| 0, |_, _| None)
            .unwrap_err();
        assert!(matches!(err, crate::Error::InvalidParameter(_)));
    }

    /// Plain product-space enumeration with a filter written independently of
    /// [`NormalCone::is_valid`].
    fn cones_by_brute_force(cat: &FiniteCategory) -> Vec<NormalCone> {
        let n = cat.object_count();
        let mut out = Vec::new();
        for d in 0..n {
            let homs: Vec<&[usize]> = (0..n).map(|c| cat.hom(c, d)).collect();
            let mut idx = vec![0usize; n];
            loop {
                let comps: Vec<usize> = (0..n).map(|c| homs[c][idx[c]]).collect();
                let compatible = (0..n).all(|a| {
                    (0..n).all(|b| match cat.inclusion(a, b) {
                        Some(j) => cat.compose(j, comps[b]) == Some(comps[a]),
                        None => true,
                    })
                });
                let has_iso = comps.iter().any(|&x| {
                    cat.hom(d, cat.dom(x)).iter().any(|&y| {
                        cat.compose(x, y) == Some(cat.identity(cat.dom(x)))
                            && cat.compose(y, x) == Some(cat.identity(d))
                    })
                });
                if compatible && has_iso {
                    out.push(NormalCone {
                        vertex: d,
                        components: comps,
                    });
                }
                let mut k = 0;
                while k < n {
                    idx[k] += 1;
                    if idx[k] < homs[k].len() {
                        break;
                    }
                    idx[k] = 0;
                    k += 1;
                }
                if k == n {
                    break;
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn cone_enumeration_matches_brute_force() {
        for f in [
            Family::Brandt(2),
            Family::ChainSemilattice(3),
            Family::FullTransformation(2),
            Family::RectangularBand(2, 2),
        ] {
            let (_, c) = ls(f);
            assert_eq!(
                enumerate_cones(c.category(), 6).unwrap(),
                cones_by_brute_force(c.category()),
                "{f}"
            );
        }
        let (_, c) = ls(Family::FullTransformation(3));
        assert!(matches!(
            enumerate_cones(c.category(), Caps::default().cone_objects),
            Err(crate::Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn cone_enumeration_ignores_object_order() {
        let (_, c) = ls(Family::Brandt(2));
        let cat = c.category();
        let base = enumerate_cones(cat, 6).unwrap();
        let perm = [2, 0, 1];
        let moved = cat.permute_objects(&perm).unwrap();
        let mut back: Vec<NormalCone> = enumerate_cones(&moved, 6)
            .unwrap()
            .into_iter()
            .map(|g| NormalCone {
                vertex: perm.iter().position(|&p| p == g.vertex).unwrap(),
                components: (0..3).map(|a| g.components[perm[a]]).collect(),
            })
            .collect();
        back.sort();
        assert_eq!(back, base);
    }

    #[test]
    fn principal_cones() {
        for f in [
            Family::Brandt(2),
            Family::FullTransformation(2),
            Family::ChainSemilattice(2),
            Family::ChainSemilattice(3),
        ] {
            let (s, c) = ls(f);
            let cat = c.category();
            for &e in s.idempotents() {
                let cone = c.principal_cone(e).unwrap();
                let a = c.object_of(e).unwrap();
                assert_eq!(cone.component(a), cat.identity(a));
            }
            for a in s.elements() {
                let ra = c.principal_cone(a).unwrap();
                assert!(ra.is_valid(cat));
                for b in s.elements() {
                    let rb = c.principal_cone(b).unwrap();
                    let rab = c.principal_cone(s.mul(a, b)).unwrap();
                    assert_eq!(cone_product(cat, &ra, &rb).unwrap(), rab, "{f}: {a} {b}");
                }
            }
        }
    }

    #[test]
    fn zero_gives_constant_cone() {
        let (s, c) = ls(Family::Brandt(2));
        let z = s.zero().unwrap();
        let cone = c.principal_cone(z).unwrap();
        assert_eq!(cone.vertex, c.object_of(z).unwrap());
    }

    #[test]
    fn principal_cone_kernel_is_right_regular_kernel() {
        for s in enumerate_corpus(3)
            .unwrap()
            .iter()
            .filter(|s| s.is_regular())
        {
            let c = build_ls(s).unwrap();
            let cones: Vec<NormalCone> =
                s.elements().map(|a| c.principal_cone(a).unwrap()).collect();
            for a in s.elements() {
                for b in s.elements() {
                    let same_action = s.elements().all(|x| s.mul(x, a) == s.mul(x, b));
                    assert_eq!(cones[a] == cones[b], same_action);
                }
            }
        }
    }

    #[test]
    fn cone_semigroups_are_regular() {
        for s in enumerate_corpus(3)
            .unwrap()
            .iter()
            .filter(|s| s.is_regular())
        {
            let c = build_ls(s).unwrap();
            let t = cone_semigroup(c.category(), 6, 512).unwrap();
            assert!(t.semigroup.is_regular());
        }
    }

    #[test]
    fn category_recovered_from_cones() {
        for f in [
            Family::CyclicGroup(3),
            Family::ChainSemilattice(2),
            Family::Brandt(2),
        ] {
            let (_, c) = ls(f);
            let t = cone_semigroup(c.category(), 6, 512).unwrap();
            let back = build_ls(&t.semigroup).unwrap();
            let iso = category_isomorphism(c.category(), back.category()).expect("isomorphic");
            assert!(iso.is_valid(c.category(), back.category()));
        }
        let (_, a) = ls(Family::ChainSemilattice(2));
        let (_, b) = ls(Family::LeftZero(2));
        assert!(category_isomorphism(a.category(), b.category()).is_none());
    }

    #[test]
    fn dump_is_serializable() {
        let (_, c) = ls(Family::Brandt(2));
        let d = c.dump();
        assert_eq!(d.objects.len(), 3);
        assert_eq!(d.inclusions.len(), 2);
        assert_eq!(d.morphisms.len(), c.category().morphism_count());
    }
}
