//! Standard families of finite semigroups.
//!
//! Element order is fixed per family (documented on each variant) so that
//! generated tables are reproducible. Maps compose left to right: in a
//! transformation semigroup `x(fg) = (xf)g`.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Semigroup;
use crate::config::Caps;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Family {
    /// `T_n`: all self-maps of `{0..n}`, ordered lexicographically by image
    /// tuple `(0f, 1f, ...)`. Monoid.
    FullTransformation(usize),
    /// `I_n`: partial injections, image tuples ordered lexicographically with
    /// "undefined" before every point. Inverse monoid with zero.
    SymmetricInverse(usize),
    /// `B_n`: zero at index 0, then matrix units `E_ij` in lexicographic
    /// `(i, j)` order. No identity for `n > 1`.
    Brandt(usize),
    /// Brandt semigroup over the cyclic group `Z_g`: zero, then `(i, a, j)`
    /// ordered by `(i, j, a)`.
    BrandtGroup(usize, usize),
    /// `p x q` rectangular band, pairs `(i, j)` in lexicographic order.
    RectangularBand(usize, usize),
    /// Chain `0 < 1 < ... < k-1` under minimum.
    ChainSemilattice(usize),
    /// Multiplicative monoid of `dim x dim` matrices over `GF(field)`,
    /// entries read row-major, ordered lexicographically.
    MatrixMonoid { dim: usize, field: usize },
    /// `xy = x`.
    LeftZero(usize),
    /// `xy = y`.
    RightZero(usize),
    /// Null semigroup: every product is `0`.
    NullPlusZero(usize),
    /// `Z_n` under addition.
    CyclicGroup(usize),
}

fn checked_pow(base: usize, exp: usize) -> Option<usize> {
    (0..exp).try_fold(1usize, |acc, _| acc.checked_mul(base))
}

fn partial_injection_count(n: usize) -> Option<usize> {
    // sum_k C(n,k)^2 k!
    let mut total = 0usize;
    for k in 0..=n {
        let mut c = 1usize;
        for i in 0..k {
            c = c.checked_mul(n - i)? / (i + 1);
        }
        let mut f = 1usize;
        for i in 1..=k {
            f = f.checked_mul(i)?;
        }
        total = total.checked_add(c.checked_mul(c)?.checked_mul(f)?)?;
    }
    Some(total)
}

/// Every tuple over `0..base` of length `len`, lexicographically.
fn tuples(base: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..base).map(move |v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

fn build<T: Eq + Hash>(
    elements: &[T],
    mul: impl Fn(&T, &T) -> T,
    label: impl Fn(&T) -> String,
) -> Semigroup {
    let n = elements.len();
    let positions: HashMap<&T, usize> = elements.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let index = |x: &T| positions[x];
    let mut table = Vec::with_capacity(n * n);
    for a in elements {
        for b in elements {
            table.push(index(&mul(a, b)));
        }
    }
    Semigroup::from_parts_unchecked(n, table).with_labels(elements.iter().map(label).collect())
}

fn digits(v: &[usize]) -> String {
    v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("")
}

impl Family {
    /// The order of the generated semigroup, or `None` on overflow.
    pub fn order(&self) -> Option<usize> {
        use Family::*;
        match *self {
            FullTransformation(n) => checked_pow(n, n),
            SymmetricInverse(n) => partial_injection_count(n),
            Brandt(n) => n.checked_mul(n)?.checked_add(1),
            BrandtGroup(n, g) => n.checked_mul(n)?.checked_mul(g)?.checked_add(1),
            RectangularBand(p, q) => p.checked_mul(q),
            MatrixMonoid { dim, field } => checked_pow(field, dim.checked_mul(dim)?),
            ChainSemilattice(n) | LeftZero(n) | RightZero(n) | NullPlusZero(n) | CyclicGroup(n) => {
                Some(n)
            }
        }
    }

    fn validate(&self) -> Result<()> {
        use Family::*;
        let positive = match *self {
            FullTransformation(n)
            | SymmetricInverse(n)
            | Brandt(n)
            | ChainSemilattice(n)
            | LeftZero(n)
            | RightZero(n)
            | NullPlusZero(n)
            | CyclicGroup(n) => n > 0,
            BrandtGroup(n, g) => n > 0 && g > 0,
            RectangularBand(p, q) => p > 0 && q > 0,
            MatrixMonoid { dim, field } => {
                if field != 2 && field != 3 {
                    return Err(Error::InvalidParameter(format!(
                        "matrix field order must be 2 or 3, got {field}"
                    )));
                }
                dim > 0
            }
        };
        if positive {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "{self}: parameters must be positive"
            )))
        }
    }

    pub fn generate_default(&self) -> Result<Semigroup> {
        self.generate(&Caps::default())
    }

    pub fn generate(&self, caps: &Caps) -> Result<Semigroup> {
        self.validate()?;
        let order = self.order().unwrap_or(usize::MAX);
        if order > caps.elements {
            return Err(Error::CapExceeded {
                what: "semigroup order",
                limit: caps.elements,
                actual: order,
            });
        }
        use Family::*;
        let s = match *self {
            FullTransformation(n) => {
                let maps = tuples(n, n);
                build(
                    &maps,
                    |f, g| f.iter().map(|&x| g[x]).collect::<Vec<_>>(),
                    |f| digits(f),
                )
            }
            SymmetricInverse(n) => {
                // 0 encodes "undefined", v + 1 encodes image v
                let maps: Vec<Vec<usize>> = tuples(n + 1, n)
                    .into_iter()
                    .filter(|t| {
                        let mut seen = vec![false; n + 1];
                        t.iter()
                            .all(|&v| v == 0 || !std::mem::replace(&mut seen[v], true))
                    })
                    .collect();
                build(
                    &maps,
                    |f, g| {
                        f.iter()
                            .map(|&x| if x == 0 { 0 } else { g[x - 1] })
                            .collect::<Vec<_>>()
                    },
                    |f| {
                        f.iter()
                            .map(|&v| {
                                if v == 0 {
                                    "-".to_string()
                                } else {
                                    (v - 1).to_string()
                                }
                            })
                            .collect::<Vec<_>>()
                            .join("")
                    },
                )
            }
            Brandt(n) => brandt(n, 1),
            BrandtGroup(n, g) => brandt(n, g),
            RectangularBand(p, q) => {
                let els: Vec<(usize, usize)> =
                    (0..p).flat_map(|i| (0..q).map(move |j| (i, j))).collect();
                build(
                    &els,
                    |&(i, _), &(_, l)| (i, l),
                    |&(i, j)| format!("({},{})", i + 1, j + 1),
                )
            }
            ChainSemilattice(k) => {
                let els: Vec<usize> = (0..k).collect();
                build(&els, |&a, &b| a.min(b), |a| a.to_string())
            }
            MatrixMonoid { dim, field } => {
                let mats = tuples(field, dim * dim);
                build(
                    &mats,
                    |a, b| {
                        let mut c = vec![0; dim * dim];
                        for i in 0..dim {
                            for j in 0..dim {
                                c[i * dim + j] = (0..dim)
                                    .map(|k| a[i * dim + k] * b[k * dim + j])
                                    .sum::<usize>()
                                    % field;
                            }
                        }
                        c
                    },
                    |m| m.chunks(dim).map(digits).collect::<Vec<_>>().join(";"),
                )
            }
            LeftZero(n) => {
                let els: Vec<usize> = (0..n).collect();
                build(&els, |&a, _| a, |a| a.to_string())
            }
            RightZero(n) => {
                let els: Vec<usize> = (0..n).collect();
                build(&els, |_, &b| b, |a| a.to_string())
            }
            NullPlusZero(n) => {
                let els: Vec<usize> = (0..n).collect();
                build(&els, |_, _| 0, |a| a.to_string())
            }
            CyclicGroup(n) => {
                let els: Vec<usize> = (0..n).collect();
                build(&els, |&a, &b| (a + b) % n, |a| a.to_string())
            }
        };
        Ok(s)
    }

    /// Parses a kind name and its numeric parameters, e.g. `("brandt", [2])`.
    pub fn from_parts(kind: &str, params: &[usize]) -> Result<Family> {
        use Family::*;
        let arity = |k: usize| {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!(
                    "{kind} takes {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let f = match kind.replace('-', "_").as_str() {
            "full_transformation" | "T" => {
                arity(1)?;
                FullTransformation(params[0])
            }
            "symmetric_inverse" | "I" => {
                arity(1)?;
                SymmetricInverse(params[0])
            }
            "brandt" | "B" => {
                arity(1)?;
                Brandt(params[0])
            }
            "brandt_group" => {
                arity(2)?;
                BrandtGroup(params[0], params[1])
            }
            "rectangular_band" => {
                arity(2)?;
                RectangularBand(params[0], params[1])
            }
            "chain_semilattice" | "chain" => {
                arity(1)?;
                ChainSemilattice(params[0])
            }
            "matrix_monoid" | "M" => {
                arity(2)?;
                MatrixMonoid {
                    dim: params[0],
                    field: params[1],
                }
            }
            "left_zero" => {
                arity(1)?;
                LeftZero(params[0])
            }
            "right_zero" => {
                arity(1)?;
                RightZero(params[0])
            }
            "null_plus_zero" | "null" => {
                arity(1)?;
                NullPlusZero(params[0])
            }
            "cyclic_group" | "Z" => {
                arity(1)?;
                CyclicGroup(params[0])
            }
            other => return Err(Error::InvalidParameter(format!("unknown family {other:?}"))),
        };
        Ok(f)
    }
}

fn brandt(n: usize, g: usize) -> Semigroup {
    // None is zero; Some((i, j, a)) is the triple (i, a, j)
    let mut els: Vec<Option<(usize, usize, usize)>> = vec![None];
    for i in 0..n {
        for j in 0..n {
            for a in 0..g {
                els.push(Some((i, j, a)));
            }
        }
    }
    build(
        &els,
        |x, y| match (x, y) {
            (Some((i, j, a)), Some((k, l, b))) if j == k => Some((*i, *l, (a + b) % g)),
            _ => None,
        },
        |x| match x {
            None => "0".to_string(),
            Some((i, j, _)) if g == 1 => format!("E{}{}", i + 1, j + 1),
            Some((i, j, a)) => format!("({},{},{})", i + 1, a, j + 1),
        },
    )
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Family::*;
        match *self {
            FullTransformation(n) => write!(f, "full_transformation({n})"),
            SymmetricInverse(n) => write!(f, "symmetric_inverse({n})"),
            Brandt(n) => write!(f, "brandt({n})"),
            BrandtGroup(n, g) => write!(f, "brandt_group({n},{g})"),
            RectangularBand(p, q) => write!(f, "rectangular_band({p},{q})"),
            ChainSemilattice(k) => write!(f, "chain_semilattice({k})"),
            MatrixMonoid { dim, field } => write!(f, "matrix_monoid({dim},{field})"),
            LeftZero(n) => write!(f, "left_zero({n})"),
            RightZero(n) => write!(f, "right_zero({n})"),
            NullPlusZero(n) => write!(f, "null_plus_zero({n})"),
            CyclicGroup(n) => write!(f, "cyclic_group({n})"),
        }
    }
}

impl From<Family> for String {
    fn from(f: Family) -> String {
        f.to_string()
    }
}

impl TryFrom<String> for Family {
    type Error = Error;

    fn try_from(s: String) -> Result<Family> {
        s.parse()
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Accepts the `Display` form, e.g. `rectangular_band(2,3)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, rest) = match s.find('(') {
            Some(i) => (&s[..i], s[i + 1..].trim_end_matches(')')),
            None => (s, ""),
        };
        let params = rest
            .split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Error::InvalidParameter(format!("bad parameter {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Family::from_parts(kind, &params)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(f: Family) -> Semigroup {
        f.generate_default().unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(gen(Family::FullTransformation(2)).order(), 4);
        assert_eq!(gen(Family::FullTransformation(3)).order(), 27);
        assert_eq!(gen(Family::SymmetricInverse(2)).order(), 7);
        assert_eq!(gen(Family::SymmetricInverse(3)).order(), 34);
        assert_eq!(gen(Family::Brandt(2)).order(), 5);
        assert_eq!(gen(Family::BrandtGroup(2, 2)).order(), 9);
        assert_eq!(gen(Family::RectangularBand(2, 2)).order(), 4);
        assert_eq!(gen(Family::MatrixMonoid { dim: 2, field: 2 }).order(), 16);
        assert_eq!(gen(Family::MatrixMonoid { dim: 2, field: 3 }).order(), 81);
    }

    #[test]
    fn generated_tables_are_associative() {
        for f in [
            Family::FullTransformation(3),
            Family::SymmetricInverse(3),
            Family::BrandtGroup(2, 3),
            Family::MatrixMonoid { dim: 2, field: 3 },
            Family::RectangularBand(2, 3),
        ] {
            let s = gen(f);
            assert!(
                Semigroup::from_table(s.order(), s.table().to_vec()).is_ok(),
                "{f}"
            );
        }
    }

    #[test]
    fn idempotent_counts_by_brute_force() {
        // T2: square each of the 4 maps; identity and the two constants survive.
        let maps = tuples(2, 2);
        let brute = maps
            .iter()
            .filter(|f| f.iter().map(|&x| f[x]).collect::<Vec<_>>() == **f)
            .count();
        assert_eq!(brute, 3);
        assert_eq!(
            gen(Family::FullTransformation(2)).idempotents().len(),
            brute
        );

        // T3: all 27 maps.
        let brute = tuples(3, 3)
            .iter()
            .filter(|f| f.iter().map(|&x| f[x]).collect::<Vec<_>>() == **f)
            .count();
        assert_eq!(brute, 10);
        assert_eq!(
            gen(Family::FullTransformation(3)).idempotents().len(),
            brute
        );

        // M2(F2): square all 16 matrices directly.
        let brute = tuples(2, 4)
            .iter()
            .filter(|m| {
                let sq = [
                    (m[0] * m[0] + m[1] * m[2]) % 2,
                    (m[0] * m[1] + m[1] * m[3]) % 2,
                    (m[2] * m[0] + m[3] * m[2]) % 2,
                    (m[2] * m[1] + m[3] * m[3]) % 2,
                ];
                sq[..] == m[..]
            })
            .count();
        assert_eq!(brute, 8);
        assert_eq!(
            gen(Family::MatrixMonoid { dim: 2, field: 2 })
                .idempotents()
                .len(),
            brute
        );
    }

    #[test]
    fn rectangular_band_is_a_band() {
        assert!(gen(Family::RectangularBand(2, 2)).is_band());
    }

    #[test]
    fn cap_is_enforced() {
        let err = Family::FullTransformation(5)
            .generate_default()
            .unwrap_err();
        assert!(matches!(
            err,
            Error::CapExceeded {
                limit: 512,
                actual: 3125,
                ..
            }
        ));
        let caps = Caps {
            elements: 3,
            ..Caps::default()
        };
        assert!(Family::Brandt(2).generate(&caps).is_err());
    }

    #[test]
    fn parse_round_trip() {
        for f in [
            Family::Brandt(2),
            Family::RectangularBand(2, 3),
            Family::MatrixMonoid { dim: 2, field: 3 },
        ] {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
        assert!("matrix_monoid(2,5)"
            .parse::<Family>()
            .unwrap()
            .generate_default()
            .is_err());
        assert!("bogus(1)".parse::<Family>().is_err());
    }
}
