use std::collections::HashMap;
use std::hash::Hash;

use super::Semigroup;

/// A partition of `0..n`, normalised so blocks are numbered by their least
/// member. Used for congruences, though any partition can be stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Congruence {
    labels: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl Congruence {
    pub fn identity(n: usize) -> Self {
        Self::from_labels(&(0..n).collect::<Vec<_>>())
    }

    pub fn universal(n: usize) -> Self {
        Self::from_labels(&vec![0; n])
    }

    /// Elements with equal labels share a block.
    pub fn from_labels<K: Eq + Hash + Clone>(labels: &[K]) -> Self {
        Self::from_keys(labels)
    }

    pub(crate) fn from_keys<K: Eq + Hash + Clone>(keys: &[K]) -> Self {
        let mut ids: HashMap<&K, usize> = HashMap::new();
        let mut labels = Vec::with_capacity(keys.len());
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (x, k) in keys.iter().enumerate() {
            let next = ids.len();
            let id = *ids.entry(k).or_insert(next);
            if id == blocks.len() {
                blocks.push(Vec::new());
            }
            blocks[id].push(x);
            labels.push(id);
        }
        Congruence { labels, blocks }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.labels[x]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.labels[a] == self.labels[b]
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.len() == self.labels.len()
    }

    pub fn is_universal(&self) -> bool {
        self.blocks.len() <= 1
    }

    /// Every block of `self` lies inside a block of `other`.
    pub fn is_contained_in(&self, other: &Congruence) -> bool {
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&x| other.related(x, b[0])))
    }

    /// `(a, b, x)` with `a ~ b` but `xa !~ xb` or `ax !~ bx`.
    pub fn compatibility_witness(&self, s: &Semigroup) -> Option<(usize, usize, usize)> {
        for block in &self.blocks {
            let a = block[0];
            for &b in &block[1..] {
                for x in s.elements() {
                    if !self.related(s.mul(x, a), s.mul(x, b))
                        || !self.related(s.mul(a, x), s.mul(b, x))
                    {
                        return Some((a, b, x));
                    }
                }
            }
        }
        None
    }

    pub fn is_congruence_on(&self, s: &Semigroup) -> bool {
        self.len() == s.order() && self.compatibility_witness(s).is_none()
    }
}
