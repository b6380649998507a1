use super::Semigroup;

/// Per-element isomorphism invariants used to prune the search.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Signature {
    idempotent: bool,
    r_size: usize,
    l_size: usize,
    h_size: usize,
    d_size: usize,
    /// Index and period of the monogenic subsemigroup.
    index: usize,
    period: usize,
    left_fixed: usize,
    right_fixed: usize,
}

fn signatures(s: &Semigroup) -> Vec<Signature> {
    let g = s.green();
    let size = |c: &super::Congruence, x| c.blocks()[c.block_of(x)].len();
    s.elements()
        .map(|x| {
            let mut powers = vec![x];
            let (index, period) = loop {
                let next = s.mul(*powers.last().unwrap(), x);
                if let Some(pos) = powers.iter().position(|&p| p == next) {
                    break (pos + 1, powers.len() - pos);
                }
                powers.push(next);
            };
            Signature {
                idempotent: s.is_idempotent(x),
                r_size: size(g.r(), x),
                l_size: size(g.l(), x),
                h_size: size(g.h(), x),
                d_size: size(g.d(), x),
                index,
                period,
                left_fixed: s.elements().filter(|&y| s.mul(x, y) == y).count(),
                right_fixed: s.elements().filter(|&y| s.mul(y, x) == y).count(),
            }
        })
        .collect()
}

struct Search<'a> {
    s: &'a Semigroup,
    t: &'a Semigroup,
    sig_s: Vec<Signature>,
    sig_t: Vec<Signature>,
    fwd: Vec<Option<usize>>,
    bwd: Vec<Option<usize>>,
    trail: Vec<usize>,
}

impl Search<'_> {
    /// Maps `a -> b` and everything forced by multiplicativity.
    fn assign(&mut self, a: usize, b: usize) -> bool {
        let mut pending = vec![(a, b)];
        while let Some((x, y)) = pending.pop() {
            match self.fwd[x] {
                Some(z) if z == y => continue,
                Some(_) => return false,
                None => {}
            }
            if self.bwd[y].is_some() || self.sig_s[x] != self.sig_t[y] {
                return false;
            }
            self.fwd[x] = Some(y);
            self.bwd[y] = Some(x);
            self.trail.push(x);
            for &z in &self.trail {
                let w = self.fwd[z].expect("trail entries are mapped");
                pending.push((self.s.mul(x, z), self.t.mul(y, w)));
                pending.push((self.s.mul(z, x), self.t.mul(w, y)));
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().unwrap();
            let y = self.fwd[x].take().unwrap();
            self.bwd[y] = None;
        }
    }

    fn run(&mut self) -> bool {
        let Some(a) = self.fwd.iter().position(Option::is_none) else {
            return true;
        };
        for b in 0..self.t.order() {
            if self.bwd[b].is_some() || self.sig_s[a] != self.sig_t[b] {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(a, b) && self.run() {
                return true;
            }
            self.undo(mark);
        }
        false
    }
}

/// An isomorphism `S -> T` as an index map, if one exists.
///
/// Backtracking over signature-compatible images; every assignment is
/// propagated through products so most branches close immediately.
pub fn are_isomorphic(s: &Semigroup, t: &Semigroup) -> Option<Vec<usize>> {
    if s.order() != t.order() || s.idempotents().len() != t.idempotents().len() {
        return None;
    }
    let sig_s = signatures(s);
    let sig_t = signatures(t);
    let mut a = sig_s.clone();
    let mut b = sig_t.clone();
    a.sort();
    b.sort();
    if a != b {
        return None;
    }
    let n = s.order();
    let mut search = Search {
        s,
        t,
        sig_s,
        sig_t,
        fwd: vec![None; n],
        bwd: vec![None; n],
        trail: Vec::new(),
    };
    if search.run() {
        Some(search.fwd.into_iter().map(Option::unwrap).collect())
    } else {
        None
    }
}

/// `map` is a bijection `S -> T` with `map(ab) = map(a) map(b)`.
pub fn is_isomorphism(s: &Semigroup, t: &Semigroup, map: &[usize]) -> bool {
    if s.order() != t.order() || map.len() != s.order() {
        return false;
    }
    let mut seen = vec![false; t.order()];
    for &m in map {
        if m >= t.order() || std::mem::replace(&mut seen[m], true) {
            return false;
        }
    }
    s.elements().all(|a| {
        s.elements()
            .all(|b| map[s.mul(a, b)] == t.mul(map[a], map[b]))
    })
}
