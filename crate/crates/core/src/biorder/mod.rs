//! Biordered sets: the idempotents of a semigroup as a partial algebra under
//! basic products.
//!
//! A [`BiorderedSet`] is indexed densely `0..|E|`. When extracted from a
//! semigroup, [`BiorderedSet::origin`] maps each index back to the semigroup
//! element. Hand-built biorders enter as a [`RawBiorder`] and must pass the
//! axioms before any other operation is available.

mod axioms;
mod bosfile;
mod classify;
mod iso;
mod order;
mod sandwich;

pub use axioms::{AxiomReport, AxiomStatus};
pub use bosfile::{format_bos, parse_bos};
pub use classify::{
    classify_locally_inverse, evaluate as evaluate_local_inverse_conditions, LocalInverseReport,
};
pub use iso::biorder_isomorphism;
pub(crate) use iso::ideal_isomorphisms;
pub use order::{natural_partial_order, Relation};
pub use sandwich::{sandwich_coherence, sandwich_semigroup, SandwichCoherence};

use crate::error::{Error, Result};
use crate::semigroup::Semigroup;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiorderedSet {
    size: usize,
    omega_r: Vec<bool>,
    omega_l: Vec<bool>,
    product: Vec<Option<usize>>,
    labels: Vec<String>,
    origin: Option<Vec<usize>>,
}

/// A biorder whose quasi-orders have been validated but whose axioms have
/// not. Only axiom checking is available until [`RawBiorder::into_verified`]
/// succeeds.
#[derive(Debug, Clone)]
pub struct RawBiorder(BiorderedSet);

/// The translations `f ↦ fe` on `ω^r(e)` and `f ↦ ef` on `ω^l(e)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Translations {
    pub right: Vec<(usize, usize)>,
    pub left: Vec<(usize, usize)>,
}

fn check_quasi_order(name: &'static str, n: usize, rel: &[bool]) -> Result<()> {
    for a in 0..n {
        if !rel[a * n + a] {
            return Err(Error::NotQuasiOrder {
                relation: name,
                reason: format!("not reflexive at {a}"),
            });
        }
    }
    for a in 0..n {
        for b in 0..n {
            if !rel[a * n + b] {
                continue;
            }
            for c in 0..n {
                if rel[b * n + c] && !rel[a * n + c] {
                    return Err(Error::NotQuasiOrder {
                        relation: name,
                        reason: format!("not transitive at ({a}, {b}, {c})"),
                    });
                }
            }
        }
    }
    Ok(())
}

impl BiorderedSet {
    /// Reads `E(S)`, the two quasi-orders and the basic products off the
    /// Cayley table. Works for any semigroup, regular or not.
    pub fn extract(s: &Semigroup) -> BiorderedSet {
        let idem = s.idempotents().to_vec();
        let n = idem.len();
        let mut index = vec![usize::MAX; s.order()];
        for (i, &e) in idem.iter().enumerate() {
            index[e] = i;
        }
        let mut omega_r = vec![false; n * n];
        let mut omega_l = vec![false; n * n];
        for (i, &e) in idem.iter().enumerate() {
            for (j, &f) in idem.iter().enumerate() {
                omega_r[i * n + j] = s.mul(f, e) == e;
                omega_l[i * n + j] = s.mul(e, f) == e;
            }
        }
        let mut product = vec![None; n * n];
        for i in 0..n {
            for j in 0..n {
                let basic = omega_r[i * n + j]
                    || omega_r[j * n + i]
                    || omega_l[i * n + j]
                    || omega_l[j * n + i];
                if basic {
                    let p = index[s.mul(idem[i], idem[j])];
                    debug_assert!(p != usize::MAX, "basic products are idempotent");
                    product[i * n + j] = Some(p);
                }
            }
        }
        BiorderedSet {
            size: n,
            omega_r,
            omega_l,
            product,
            labels: idem.iter().map(|&e| s.label(e)).collect(),
            origin: Some(idem),
        }
    }

    /// Builds a biorder from raw tables (row-major, `|E|²` entries each).
    /// Rejects anything whose quasi-orders are not reflexive and transitive.
    pub fn from_parts(
        size: usize,
        omega_r: Vec<bool>,
        omega_l: Vec<bool>,
        product: Vec<Option<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<RawBiorder> {
        if size == 0 {
            return Err(Error::Empty);
        }
        let sq = size * size;
        for (name, len) in [
            ("omega_r", omega_r.len()),
            ("omega_l", omega_l.len()),
            ("basic products", product.len()),
        ] {
            if len != sq {
                return Err(Error::InvalidParameter(format!(
                    "{name} has {len} entries, expected {sq}"
                )));
            }
        }
        for (i, p) in product.iter().enumerate() {
            if let Some(v) = *p {
                if v >= size {
                    return Err(Error::IndexOutOfRange {
                        row: i / size,
                        col: i % size,
                        value: v,
                        order: size,
                    });
                }
            }
        }
        check_quasi_order("omega_r", size, &omega_r)?;
        check_quasi_order("omega_l", size, &omega_l)?;
        let labels = match labels {
            Some(l) if l.len() == size => l,
            _ => (0..size).map(|i| i.to_string()).collect(),
        };
        Ok(RawBiorder(BiorderedSet {
            size,
            omega_r,
            omega_l,
            product,
            labels,
            origin: None,
        }))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    /// `e ω^r f`, i.e. `fe = e`.
    #[inline]
    pub fn omega_r(&self, e: usize, f: usize) -> bool {
        self.omega_r[e * self.size + f]
    }

    /// `e ω^l f`, i.e. `ef = e`.
    #[inline]
    pub fn omega_l(&self, e: usize, f: usize) -> bool {
        self.omega_l[e * self.size + f]
    }

    /// The natural partial order `ω = ω^r ∩ ω^l`.
    #[inline]
    pub fn omega(&self, e: usize, f: usize) -> bool {
        self.omega_r(e, f) && self.omega_l(e, f)
    }

    pub fn r_related(&self, e: usize, f: usize) -> bool {
        self.omega_r(e, f) && self.omega_r(f, e)
    }

    pub fn l_related(&self, e: usize, f: usize) -> bool {
        self.omega_l(e, f) && self.omega_l(f, e)
    }

    /// `e (R ∪ L) f`.
    pub fn chain_related(&self, e: usize, f: usize) -> bool {
        self.r_related(e, f) || self.l_related(e, f)
    }

    /// The basic product `ef`, if defined.
    #[inline]
    pub fn product(&self, e: usize, f: usize) -> Option<usize> {
        self.product[e * self.size + f]
    }

    /// The basic product `ef` where the caller knows it is defined.
    #[inline]
    pub(crate) fn bp(&self, e: usize, f: usize) -> usize {
        self.product(e, f)
            .unwrap_or_else(|| panic!("basic product {e}*{f} is undefined"))
    }

    /// `ω(e)` in ascending order.
    pub fn omega_ideal(&self, e: usize) -> Vec<usize> {
        self.elements().filter(|&f| self.omega(f, e)).collect()
    }

    /// `ω^r(e) = { f : f ω^r e }`.
    pub fn omega_r_ideal(&self, e: usize) -> Vec<usize> {
        self.elements().filter(|&f| self.omega_r(f, e)).collect()
    }

    /// `ω^l(e) = { f : f ω^l e }`.
    pub fn omega_l_ideal(&self, e: usize) -> Vec<usize> {
        self.elements().filter(|&f| self.omega_l(f, e)).collect()
    }

    pub fn label(&self, e: usize) -> &str {
        &self.labels[e]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Index in `E` → element of the source semigroup.
    pub fn origin(&self) -> Option<&[usize]> {
        self.origin.as_deref()
    }

    /// The index in `E` of a semigroup element, when extracted.
    pub fn index_of(&self, element: usize) -> Option<usize> {
        self.origin.as_ref()?.iter().position(|&x| x == element)
    }

    /// Semilattices are exactly the biorders with `ω^r = ω^l`.
    pub fn is_semilattice(&self) -> bool {
        self.omega_r == self.omega_l
    }

    pub fn verify_axioms(&self) -> AxiomReport {
        axioms::check(self)
    }

    /// Axiom (R): every sandwich set is nonempty.
    pub fn is_regular(&self) -> bool {
        self.regularity_witness().is_none()
    }

    pub(crate) fn regularity_witness(&self) -> Option<(usize, usize)> {
        for e in self.elements() {
            for f in self.elements() {
                if self.sandwich(e, f).is_empty() {
                    return Some((e, f));
                }
            }
        }
        None
    }

    pub fn require_regular(&self) -> Result<()> {
        match self.regularity_witness() {
            Some((e, f)) => Err(Error::NotRegularBiorder(e, f)),
            None => Ok(()),
        }
    }

    /// The sandwich set `S(e, f)` computed from basic products alone: the
    /// maximal elements of `M(e,f) = ω^l(e) ∩ ω^r(f)` under the preorder
    /// `g ≺ h ⇔ eg ω^r eh and gf ω^l hf`.
    pub fn sandwich(&self, e: usize, f: usize) -> Vec<usize> {
        sandwich::intrinsic(self, e, f)
    }

    /// The translations τ^r(e) and τ^l(e).
    pub fn tau_translations(&self, e: usize) -> Translations {
        Translations {
            right: self
                .omega_r_ideal(e)
                .into_iter()
                .map(|f| (f, self.bp(f, e)))
                .collect(),
            left: self
                .omega_l_ideal(e)
                .into_iter()
                .map(|f| (f, self.bp(e, f)))
                .collect(),
        }
    }

    /// Number of defined basic products.
    pub fn basic_product_count(&self) -> usize {
        self.product.iter().filter(|p| p.is_some()).count()
    }
}

impl RawBiorder {
    pub fn verify_axioms(&self) -> AxiomReport {
        axioms::check(&self.0)
    }

    /// Accepts the biorder if (B1)–(B5) hold.
    pub fn into_verified(self) -> Result<BiorderedSet> {
        let report = self.verify_axioms();
        match report.first_biorder_failure() {
            Some((axiom, witness)) => Err(Error::AxiomFailure {
                axiom,
                witness: witness.to_vec(),
            }),
            None => Ok(self.0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::Family;

    fn biorder(f: Family) -> BiorderedSet {
        BiorderedSet::extract(&f.generate_default().unwrap())
    }

    #[test]
    fn chain_semilattice_orders_coincide() {
        let e = biorder(Family::ChainSemilattice(2));
        assert!(e.is_semilattice());
        assert!(e.omega_r(0, 1) && !e.omega_r(1, 0));
        assert_eq!(e.basic_product_count(), 4);
    }

    #[test]
    fn left_zero_orders() {
        // xy = x: ef = e so ω^l is universal; fe = f so e ω^r f only if e = f
        let e = biorder(Family::LeftZero(2));
        for a in 0..2 {
            for b in 0..2 {
                assert!(e.omega_l(a, b));
                assert_eq!(e.omega_r(a, b), a == b);
            }
        }
    }

    #[test]
    fn brandt_omega_is_trivial_off_zero() {
        let b2 = Family::Brandt(2).generate_default().unwrap();
        let e = BiorderedSet::extract(&b2);
        // E = {0, E11, E22}
        assert_eq!(e.origin(), Some(&[0, 1, 4][..]));
        for a in 0..3 {
            assert!(e.omega(0, a));
            for b in 1..3 {
                if a != b && a != 0 {
                    assert!(!e.omega(a, b));
                }
            }
        }
    }

    #[test]
    fn transitivity_violation_is_rejected_at_construction() {
        // ω^r: 0 ≤ 1, 1 ≤ 2 but not 0 ≤ 2
        let n = 3;
        let mut r = vec![false; 9];
        for i in 0..n {
            r[i * n + i] = true;
        }
        r[1] = true;
        r[n + 2] = true;
        let l = r.clone();
        let err = BiorderedSet::from_parts(n, r, l, vec![None; 9], None).unwrap_err();
        assert!(matches!(
            err,
            Error::NotQuasiOrder {
                relation: "omega_r",
                ..
            }
        ));
    }

    #[test]
    fn tau_translations() {
        let e = biorder(Family::ChainSemilattice(3));
        let t = e.tau_translations(1);
        assert_eq!(t.right, vec![(0, 0), (1, 1)]);
        assert_eq!(t.left, t.right);

        let lz = biorder(Family::LeftZero(2));
        let t = lz.tau_translations(0);
        assert_eq!(t.left, vec![(0, 0), (1, 0)]);

        let b = biorder(Family::FullTransformation(3));
        for e in b.elements() {
            for f in b.omega_ideal(e) {
                assert!(b.tau_translations(e).right.contains(&(f, f)));
            }
            for (_, img) in b.tau_translations(e).right {
                assert!(b.omega(img, e));
            }
        }
    }

    #[test]
    fn unverified_biorder_must_pass_axioms() {
        // two incomparable elements whose product is declared anyway: B1 fails
        let raw = BiorderedSet::from_parts(
            2,
            vec![true, false, false, true],
            vec![true, false, false, true],
            vec![Some(0), Some(0), None, Some(1)],
            None,
        )
        .unwrap();
        let err = raw.clone().into_verified().unwrap_err();
        assert_eq!(
            err,
            Error::AxiomFailure {
                axiom: "B1",
                witness: vec![0, 1]
            }
        );
        assert!(!raw.verify_axioms().all_biorder_pass());
    }
}
