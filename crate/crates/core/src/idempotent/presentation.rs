use std::fmt::Write as _;

use serde::Serialize;

use crate::biorder::BiorderedSet;
use crate::error::Result;

/// A semigroup presentation over the idempotents of a biorder.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Presentation {
    /// Labels of the generators; generator `i` is written `e{i}`.
    pub generators: Vec<String>,
    pub relations: Vec<(Vec<usize>, Vec<usize>)>,
}

fn word(w: &[usize], sep: &str) -> String {
    w.iter()
        .map(|g| format!("e{g}"))
        .collect::<Vec<_>>()
        .join(sep)
}

impl Presentation {
    /// `gen: e0 e1 …` followed by one `rel: e0.e1 = e2` line per relation.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, label) in self.generators.iter().enumerate() {
            writeln!(out, "# e{i} = {label}").unwrap();
        }
        let gens: Vec<String> = (0..self.generators.len())
            .map(|i| format!("e{i}"))
            .collect();
        writeln!(out, "gen: {}", gens.join(" ")).unwrap();
        for (l, r) in &self.relations {
            writeln!(out, "rel: {} = {}", word(l, "."), word(r, ".")).unwrap();
        }
        out
    }

    /// A GAP program building the finitely presented semigroup as `S`.
    pub fn to_gap(&self) -> String {
        let names: Vec<String> = (0..self.generators.len())
            .map(|i| format!("\"e{i}\""))
            .collect();
        let mut out = format!("F := FreeSemigroup({});;\n", names.join(", "));
        out.push_str("AssignGeneratorVariables(F);;\n");
        out.push_str("R := [\n");
        for (i, (l, r)) in self.relations.iter().enumerate() {
            let comma = if i + 1 < self.relations.len() {
                ","
            } else {
                ""
            };
            writeln!(out, "  [{}, {}]{comma}", word(l, "*"), word(r, "*")).unwrap();
        }
        out.push_str("];;\nS := F / R;;\n");
        out
    }
}

/// `IG(E)`: `e·f = ef` for every basic product, ordered by `(e, f)`.
pub fn present_ig(b: &BiorderedSet) -> Presentation {
    let mut relations = Vec::new();
    for e in b.elements() {
        for f in b.elements() {
            if let Some(ef) = b.product(e, f) {
                relations.push((vec![e, f], vec![ef]));
            }
        }
    }
    Presentation {
        generators: b.labels().to_vec(),
        relations,
    }
}

/// `RIG(E)`: the relations of `IG(E)` followed by `e·f = e·h·f` for every
/// pair `(e, f)` and every `h ∈ S(e, f)`.
pub fn present_rig(b: &BiorderedSet) -> Result<Presentation> {
    b.require_regular()?;
    let mut p = present_ig(b);
    for e in b.elements() {
        for f in b.elements() {
            for h in b.sandwich(e, f) {
                p.relations.push((vec![e, f], vec![e, h, f]));
            }
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::semigroup::Family;

    fn biorder(f: Family) -> BiorderedSet {
        BiorderedSet::extract(&f.generate_default().unwrap())
    }

    #[test]
    fn ig_relation_counts() {
        assert_eq!(
            present_ig(&biorder(Family::ChainSemilattice(2)))
                .relations
                .len(),
            4
        );
        let lz = biorder(Family::LeftZero(2));
        let defined = lz
            .elements()
            .flat_map(|e| lz.elements().map(move |f| (e, f)))
            .filter(|&(e, f)| {
                lz.omega_r(e, f) || lz.omega_l(e, f) || lz.omega_r(f, e) || lz.omega_l(f, e)
            })
            .count();
        assert_eq!(present_ig(&lz).relations.len(), defined);
        assert_eq!(defined, 4);
    }

    #[test]
    fn antichain_has_only_idempotent_relations() {
        let b = BiorderedSet::from_parts(
            2,
            vec![true, false, false, true],
            vec![true, false, false, true],
            vec![Some(0), None, None, Some(1)],
            None,
        )
        .unwrap()
        .into_verified()
        .unwrap();
        let p = present_ig(&b);
        assert_eq!(
            p.relations,
            vec![(vec![0, 0], vec![0]), (vec![1, 1], vec![1])]
        );
        assert!(matches!(present_rig(&b), Err(Error::NotRegularBiorder(..))));
    }

    #[test]
    fn rig_sandwich_relations() {
        let semilattice = biorder(Family::ChainSemilattice(3));
        let p = present_rig(&semilattice).unwrap();
        let ig = present_ig(&semilattice).relations.len();
        for (l, r) in &p.relations[ig..] {
            let (e, f) = (l[0], l[1]);
            assert_eq!(r, &vec![e, semilattice.product(e, f).unwrap(), f]);
        }

        let b2 = biorder(Family::Brandt(2));
        let p = present_rig(&b2).unwrap();
        let zero = (0..3).find(|&z| b2.omega_ideal(z).len() == 1).unwrap();
        let (e11, e22) = {
            let v: Vec<usize> = (0..3).filter(|&x| x != zero).collect();
            (v[0], v[1])
        };
        assert!(p
            .relations
            .contains(&(vec![e11, e22], vec![e11, zero, e22])));

        let rb = biorder(Family::RectangularBand(2, 2));
        let p = present_rig(&rb).unwrap();
        let s = Family::RectangularBand(2, 2).generate_default().unwrap();
        for e in rb.elements() {
            for f in rb.elements() {
                let fe = rb
                    .index_of(s.mul(rb.origin().unwrap()[f], rb.origin().unwrap()[e]))
                    .unwrap();
                assert!(p.relations.contains(&(vec![e, f], vec![e, fe, f])));
            }
        }
    }

    #[test]
    fn text_and_gap_forms() {
        let p = present_ig(&biorder(Family::ChainSemilattice(2)));
        let text = p.to_text();
        assert!(text.contains("gen: e0 e1\n"));
        assert!(text.contains("rel: e0.e1 = "));
        let gap = p.to_gap();
        assert!(gap.starts_with("F := FreeSemigroup(\"e0\", \"e1\");;"));
        assert_eq!(gap.matches('[').count(), 1 + p.relations.len());
    }
}
