use super::{Congruence, Semigroup};

/// Green's relations of a finite semigroup, computed from principal ideals of
/// `S¹` (the identity is adjoined implicitly).
#[derive(Debug, Clone)]
pub struct GreenData {
    r: Congruence,
    l: Congruence,
    h: Congruence,
    d: Congruence,
    j: Congruence,
    /// `r_leq[i * nr + k]`: R-class `i` lies below R-class `k`.
    r_leq: Vec<bool>,
    l_leq: Vec<bool>,
    j_leq: Vec<bool>,
}

fn ideal(n: usize, x: usize, members: impl Iterator<Item = usize>) -> Vec<bool> {
    let mut v = vec![false; n];
    v[x] = true;
    for m in members {
        v[m] = true;
    }
    v
}

fn subset(a: &[bool], b: &[bool]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| !x || y)
}

fn class_order(c: &Congruence, ideals: &[Vec<bool>]) -> Vec<bool> {
    let k = c.num_blocks();
    let mut leq = vec![false; k * k];
    for i in 0..k {
        for j in 0..k {
            let a = &ideals[c.blocks()[i][0]];
            let b = &ideals[c.blocks()[j][0]];
            leq[i * k + j] = subset(a, b);
        }
    }
    leq
}

impl GreenData {
    pub(crate) fn compute(s: &Semigroup) -> Self {
        let n = s.order();
        let right: Vec<Vec<bool>> = (0..n)
            .map(|x| ideal(n, x, (0..n).map(|y| s.mul(x, y))))
            .collect();
        let left: Vec<Vec<bool>> = (0..n)
            .map(|x| ideal(n, x, (0..n).map(|y| s.mul(y, x))))
            .collect();
        let two: Vec<Vec<bool>> = (0..n)
            .map(|x| {
                let mut v = right[x].clone();
                for (m, &inl) in left[x].iter().enumerate() {
                    if inl {
                        for y in 0..n {
                            v[s.mul(m, y)] = true;
                        }
                        v[m] = true;
                    }
                }
                v
            })
            .collect();

        let r = Congruence::from_labels(&right);
        let l = Congruence::from_labels(&left);
        let j = Congruence::from_labels(&two);
        let h = Congruence::from_labels(
            &(0..n)
                .map(|x| (r.block_of(x), l.block_of(x)))
                .collect::<Vec<_>>(),
        );

        // D = R ∨ L via union-find over both partitions.
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut root = x;
            while p[root] != root {
                root = p[root];
            }
            let mut y = x;
            while p[y] != root {
                let next = p[y];
                p[y] = root;
                y = next;
            }
            root
        }
        for part in [&r, &l] {
            for block in part.blocks() {
                for &x in &block[1..] {
                    let (a, b) = (find(&mut parent, block[0]), find(&mut parent, x));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let roots: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
        let d = Congruence::from_labels(&roots);

        GreenData {
            r_leq: class_order(&r, &right),
            l_leq: class_order(&l, &left),
            j_leq: class_order(&j, &two),
            r,
            l,
            h,
            d,
            j,
        }
    }

    pub fn r(&self) -> &Congruence {
        &self.r
    }
    pub fn l(&self) -> &Congruence {
        &self.l
    }
    pub fn h(&self) -> &Congruence {
        &self.h
    }
    pub fn d(&self) -> &Congruence {
        &self.d
    }
    pub fn j(&self) -> &Congruence {
        &self.j
    }

    pub fn r_class(&self, x: usize) -> usize {
        self.r.block_of(x)
    }
    pub fn l_class(&self, x: usize) -> usize {
        self.l.block_of(x)
    }
    pub fn h_class(&self, x: usize) -> usize {
        self.h.block_of(x)
    }
    pub fn d_class(&self, x: usize) -> usize {
        self.d.block_of(x)
    }
    pub fn j_class(&self, x: usize) -> usize {
        self.j.block_of(x)
    }

    pub fn r_related(&self, a: usize, b: usize) -> bool {
        self.r.related(a, b)
    }
    pub fn l_related(&self, a: usize, b: usize) -> bool {
        self.l.related(a, b)
    }
    pub fn h_related(&self, a: usize, b: usize) -> bool {
        self.h.related(a, b)
    }

    /// `aS¹ ⊆ bS¹`.
    pub fn r_leq(&self, a: usize, b: usize) -> bool {
        let k = self.r.num_blocks();
        self.r_leq[self.r.block_of(a) * k + self.r.block_of(b)]
    }

    /// `S¹a ⊆ S¹b`.
    pub fn l_leq(&self, a: usize, b: usize) -> bool {
        let k = self.l.num_blocks();
        self.l_leq[self.l.block_of(a) * k + self.l.block_of(b)]
    }

    pub fn j_leq(&self, a: usize, b: usize) -> bool {
        let k = self.j.num_blocks();
        self.j_leq[self.j.block_of(a) * k + self.j.block_of(b)]
    }
}
