//! Finite semigroups given by Cayley tables.
//!
//! Elements are dense indices `0..n`; `table[a * n + b]` is the product `ab`.
//! Derived data (idempotents, Green's relations) is computed on first use and
//! cached, so a [`Semigroup`] can be shared freely between threads.

mod cayfile;
mod congruence;
mod corpus;
mod families;
mod green;
mod iso;

use std::fmt;
use std::sync::OnceLock;

pub use cayfile::{format_cay, parse_cay};
pub use congruence::Congruence;
pub use corpus::{corpus_of_order, enumerate_corpus, enumerate_corpus_with, CORPUS_MAX_ORDER};
pub use families::Family;
pub use green::GreenData;
pub use iso::{are_isomorphic, is_isomorphism};

use crate::error::{Error, Result};

#[derive(Clone)]
pub struct Semigroup {
    order: usize,
    table: Vec<usize>,
    labels: Option<Vec<String>>,
    idempotents: OnceLock<Vec<usize>>,
    green: OnceLock<GreenData>,
}

/// Outcome of a regularity test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Regularity {
    /// `witness[x]` is some `x'` with `x x' x = x`.
    Regular(Vec<usize>),
    /// An element with no such `x'`.
    NotRegular(usize),
}

impl Regularity {
    pub fn is_regular(&self) -> bool {
        matches!(self, Regularity::Regular(_))
    }
}

impl Semigroup {
    /// Builds a semigroup from its rows, checking range and associativity.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        let mut flat = Vec::with_capacity(n * n);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != n {
                return Err(Error::NotSquare {
                    row,
                    len: r.len(),
                    expected: n,
                });
            }
            flat.extend(r);
        }
        Self::from_table(n, flat)
    }

    pub fn from_table(order: usize, table: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::Empty);
        }
        if table.len() != order * order {
            return Err(Error::NotSquare {
                row: table.len() / order,
                len: table.len() % order,
                expected: order,
            });
        }
        for (i, &v) in table.iter().enumerate() {
            if v >= order {
                return Err(Error::IndexOutOfRange {
                    row: i / order,
                    col: i % order,
                    value: v,
                    order,
                });
            }
        }
        if let Some((a, b, c)) = associativity_witness(order, &table) {
            return Err(Error::NonAssociative { a, b, c });
        }
        Ok(Self::from_parts_unchecked(order, table))
    }

    /// Skips validation; callers guarantee the table is an associative
    /// operation on `0..order`.
    pub(crate) fn from_parts_unchecked(order: usize, table: Vec<usize>) -> Self {
        Semigroup {
            order,
            table,
            labels: None,
            idempotents: OnceLock::new(),
            green: OnceLock::new(),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        if labels.len() == self.order {
            self.labels = Some(labels);
        }
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    /// Product of a nonempty word, left to right.
    pub fn product(&self, word: &[usize]) -> Option<usize> {
        let (&first, rest) = word.split_first()?;
        Some(rest.iter().fold(first, |acc, &x| self.mul(acc, x)))
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.mul(x, x) == x
    }

    /// `E(S)` in ascending index order.
    pub fn idempotents(&self) -> &[usize] {
        self.idempotents
            .get_or_init(|| self.elements().filter(|&x| self.is_idempotent(x)).collect())
    }

    /// The two-sided identity, if there is one.
    pub fn identity(&self) -> Option<usize> {
        self.elements().find(|&e| {
            self.elements()
                .all(|x| self.mul(e, x) == x && self.mul(x, e) == x)
        })
    }

    pub fn has_identity(&self) -> bool {
        self.identity().is_some()
    }

    pub fn zero(&self) -> Option<usize> {
        self.elements().find(|&z| {
            self.elements()
                .all(|x| self.mul(z, x) == z && self.mul(x, z) == z)
        })
    }

    pub fn is_band(&self) -> bool {
        self.idempotents().len() == self.order
    }

    pub fn green(&self) -> &GreenData {
        self.green.get_or_init(|| GreenData::compute(self))
    }

    /// Regularity with a witness `x'` for each `x` (the least index that works).
    pub fn regularity(&self) -> Regularity {
        let mut witness = Vec::with_capacity(self.order);
        for x in self.elements() {
            match self.elements().find(|&y| self.mul(self.mul(x, y), x) == x) {
                Some(y) => witness.push(y),
                None => return Regularity::NotRegular(x),
            }
        }
        Regularity::Regular(witness)
    }

    pub fn is_regular(&self) -> bool {
        self.regularity().is_regular()
    }

    /// Returns `Err(NotRegular)` with the first irregular element.
    pub fn require_regular(&self) -> Result<Vec<usize>> {
        match self.regularity() {
            Regularity::Regular(w) => Ok(w),
            Regularity::NotRegular(x) => Err(Error::NotRegular(x)),
        }
    }

    /// All `y` with `xyx = x` and `yxy = y`.
    pub fn inverses_of(&self, x: usize) -> Vec<usize> {
        self.elements()
            .filter(|&y| self.is_inverse_pair(x, y))
            .collect()
    }

    pub fn is_inverse_pair(&self, x: usize, y: usize) -> bool {
        self.mul(self.mul(x, y), x) == x && self.mul(self.mul(y, x), y) == y
    }

    /// Inverse semigroup: regular with commuting idempotents.
    pub fn is_inverse(&self) -> bool {
        let e = self.idempotents();
        self.is_regular()
            && e.iter()
                .all(|&a| e.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The largest congruence contained in Green's H relation.
    ///
    /// Starts from the H-partition and splits blocks until every block is
    /// stable under left and right multiplication.
    pub fn max_idempotent_separating_congruence(&self) -> Congruence {
        let n = self.order;
        let mut block: Vec<usize> = (0..n).map(|x| self.green().h_class(x)).collect();
        loop {
            let keys: Vec<(usize, Vec<usize>)> = (0..n)
                .map(|a| {
                    let mut k = Vec::with_capacity(2 * n);
                    k.extend((0..n).map(|x| block[self.mul(x, a)]));
                    k.extend((0..n).map(|x| block[self.mul(a, x)]));
                    (block[a], k)
                })
                .collect();
            let refined = Congruence::from_keys(&keys);
            if refined.num_blocks() == Congruence::from_labels(&block).num_blocks() {
                return refined;
            }
            block = refined.labels().to_vec();
        }
    }

    pub fn is_fundamental(&self) -> bool {
        self.max_idempotent_separating_congruence().is_identity()
    }

    /// The semigroup with reversed multiplication.
    pub fn opposite(&self) -> Semigroup {
        let n = self.order;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = self.mul(b, a);
            }
        }
        let mut s = Semigroup::from_parts_unchecked(n, table);
        s.labels = self.labels.clone();
        s
    }

    /// Relabels element `x` as `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Semigroup> {
        let n = self.order;
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::InvalidParameter(
                "relabelling is not a permutation".into(),
            ));
        }
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        let mut s = Semigroup::from_parts_unchecked(n, table);
        if let Some(l) = &self.labels {
            let mut nl = vec![String::new(); n];
            for (x, &p) in perm.iter().enumerate() {
                nl[p] = l[x].clone();
            }
            s.labels = Some(nl);
        }
        Ok(s)
    }

    /// The subsemigroup on `elements`, reindexed in ascending order; returns
    /// it with the embedding `new index -> old index`.
    pub fn subsemigroup(&self, elements: &[usize]) -> Result<(Semigroup, Vec<usize>)> {
        let mut members: Vec<usize> = elements.to_vec();
        members.sort_unstable();
        members.dedup();
        if members.is_empty() {
            return Err(Error::Empty);
        }
        let mut index = vec![usize::MAX; self.order];
        for (i, &m) in members.iter().enumerate() {
            index[m] = i;
        }
        let k = members.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in &members {
            for &b in &members {
                let p = index[self.mul(a, b)];
                if p == usize::MAX {
                    return Err(Error::InvalidParameter(format!(
                        "set is not closed: {a}*{b} = {}",
                        self.mul(a, b)
                    )));
                }
                table.push(p);
            }
        }
        let mut s = Semigroup::from_parts_unchecked(k, table);
        if let Some(l) = &self.labels {
            s.labels = Some(members.iter().map(|&m| l[m].clone()).collect());
        }
        Ok((s, members))
    }

    /// `S/ρ` with blocks in the congruence's own order. The congruence must be
    /// compatible with multiplication.
    pub fn quotient(&self, rho: &Congruence) -> Result<Semigroup> {
        if let Some((a, b, x)) = rho.compatibility_witness(self) {
            return Err(Error::InvalidParameter(format!(
                "partition is not a congruence: {a} ~ {b} but not under multiplication by {x}"
            )));
        }
        let k = rho.num_blocks();
        let mut table = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                let a = rho.blocks()[i][0];
                let b = rho.blocks()[j][0];
                table.push(rho.block_of(self.mul(a, b)));
            }
        }
        Ok(Semigroup::from_parts_unchecked(k, table))
    }
}

/// First failing triple in lexicographic order, if any.
pub(crate) fn associativity_witness(n: usize, t: &[usize]) -> Option<(usize, usize, usize)> {
    for a in 0..n {
        for b in 0..n {
            let ab = t[a * n + b];
            for c in 0..n {
                if t[ab * n + c] != t[a * n + t[b * n + c]] {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

impl PartialEq for Semigroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for Semigroup {}

impl fmt::Debug for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Semigroup")
            .field("order", &self.order)
            .field("table", &self.rows())
            .finish()
    }
}

impl fmt::Display for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_cay(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t2() -> Semigroup {
        Family::FullTransformation(2).generate_default().unwrap()
    }

    #[test]
    fn left_zero_has_two_idempotents() {
        let s = Semigroup::new(vec![vec![0, 0], vec![1, 1]]).unwrap();
        assert_eq!(s.idempotents(), &[0, 1]);
    }

    #[test]
    fn z2_has_one_idempotent() {
        let s = Semigroup::new(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(s.idempotents(), &[0]);
        assert_eq!(s.identity(), Some(0));
    }

    #[test]
    fn non_associative_table_is_rejected_with_least_witness() {
        // Brute force over all 8 triples: (0*1)*1 = 1*1 = 1 but 0*(1*1) = 0*1 = 1;
        // (1*0)*1 = 1*1 = 1, 1*(0*1) = 1*1 = 1; (0*1)*0 = 1*0 = 1, 0*(1*0) = 0*1 = 1.
        // All 8 agree, so the table is associative.
        let rows = vec![vec![0, 1], vec![1, 1]];
        let mut bad = None;
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    if rows[rows[a][b]][c] != rows[a][rows[b][c]] && bad.is_none() {
                        bad = Some((a, b, c));
                    }
                }
            }
        }
        assert_eq!(bad, None);
        assert!(Semigroup::new(rows).is_ok());

        let err = Semigroup::new(vec![vec![1, 0], vec![0, 0]]).unwrap_err();
        assert_eq!(err, Error::NonAssociative { a: 0, b: 0, c: 1 });
    }

    #[test]
    fn out_of_range_entry() {
        let err = Semigroup::new(vec![vec![0, 2], vec![1, 1]]).unwrap_err();
        assert!(matches!(
            err,
            Error::IndexOutOfRange {
                row: 0,
                col: 1,
                value: 2,
                ..
            }
        ));
        let err = Semigroup::new(vec![vec![0, 1], vec![1]]).unwrap_err();
        assert!(matches!(err, Error::NotSquare { row: 1, .. }));
    }

    #[test]
    fn regularity_of_bands_and_null_semigroups() {
        let band = Family::RectangularBand(2, 3).generate_default().unwrap();
        match band.regularity() {
            Regularity::Regular(w) => {
                for x in band.elements() {
                    assert_eq!(band.mul(band.mul(x, w[x]), x), x);
                }
            }
            Regularity::NotRegular(_) => panic!("bands are regular"),
        }
        let null = Family::NullPlusZero(3).generate_default().unwrap();
        assert_eq!(null.regularity(), Regularity::NotRegular(1));
        assert!(Family::Brandt(2).generate_default().unwrap().is_regular());
    }

    #[test]
    fn inverses_in_brandt() {
        let b2 = Family::Brandt(2).generate_default().unwrap();
        // 0, E11, E12, E21, E22
        assert_eq!(b2.inverses_of(2), vec![3]);
        assert_eq!(b2.inverses_of(0), vec![0]);
        assert!(b2.inverses_of(1).contains(&1));
    }

    #[test]
    fn regular_iff_every_element_has_an_inverse() {
        for s in [
            t2(),
            Family::NullPlusZero(3).generate_default().unwrap(),
            Family::Brandt(2).generate_default().unwrap(),
        ] {
            let all = s.elements().all(|x| !s.inverses_of(x).is_empty());
            assert_eq!(all, s.is_regular());
        }
    }

    #[test]
    fn mu_for_groups_and_combinatorial_semigroups() {
        let z3 = Family::CyclicGroup(3).generate_default().unwrap();
        assert!(z3.max_idempotent_separating_congruence().is_universal());
        assert!(!z3.is_fundamental());

        let band = Family::RectangularBand(2, 2).generate_default().unwrap();
        assert!(band.max_idempotent_separating_congruence().is_identity());

        let b2 = Family::Brandt(2).generate_default().unwrap();
        assert!(b2.max_idempotent_separating_congruence().is_identity());
        assert!(b2.is_fundamental());

        let bg = Family::BrandtGroup(2, 2).generate_default().unwrap();
        let mu = bg.max_idempotent_separating_congruence();
        assert_eq!(mu.num_blocks(), 5);
        assert!(mu.compatibility_witness(&bg).is_none());
    }

    #[test]
    fn opposite_swaps_left_and_right_zero() {
        let lz = Family::LeftZero(3).generate_default().unwrap();
        let rz = Family::RightZero(3).generate_default().unwrap();
        assert_eq!(lz.opposite(), rz);
    }

    #[test]
    fn subsemigroup_rejects_non_closed_sets() {
        let b2 = Family::Brandt(2).generate_default().unwrap();
        assert!(b2.subsemigroup(&[2, 3]).is_err());
        let (sub, emb) = b2.subsemigroup(&[0, 1]).unwrap();
        assert_eq!(sub.order(), 2);
        assert_eq!(emb, vec![0, 1]);
    }
}
