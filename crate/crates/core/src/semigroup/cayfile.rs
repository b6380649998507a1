//! The `.cay` Cayley-table format.
//!
//! ```text
//! 3
//! 0 0 0
//! 0 1 1
//! 0 1 2
//! # labels: z a e
//! ```
//!
//! Line 1 is the order `n`, then `n` rows of `n` indices; row `i`, column `j`
//! holds the product `i*j`. Lines starting with `#` are comments, and a
//! `# labels:` comment names the elements positionally.

use super::Semigroup;
use crate::error::{Error, Result};

pub fn parse_cay(text: &str) -> Result<Semigroup> {
    let mut order: Option<usize> = None;
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut labels: Option<Vec<String>> = None;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(l) = comment.trim().strip_prefix("labels:") {
                labels = Some(l.split_whitespace().map(str::to_string).collect());
            }
            continue;
        }
        let nums = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::parse(line_no, format!("not an index: {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        match order {
            None => {
                if nums.len() != 1 {
                    return Err(Error::parse(line_no, "first line must hold the order"));
                }
                order = Some(nums[0]);
            }
            Some(n) => {
                if rows.len() == n {
                    return Err(Error::parse(line_no, "more rows than the declared order"));
                }
                if nums.len() != n {
                    return Err(Error::parse(
                        line_no,
                        format!("row has {} entries, expected {n}", nums.len()),
                    ));
                }
                rows.push(nums);
            }
        }
    }
    let n = order.ok_or_else(|| Error::parse(1, "missing order"))?;
    if rows.len() != n {
        return Err(Error::parse(
            text.lines().count(),
            format!("expected {n} rows, found {}", rows.len()),
        ));
    }
    let mut s = Semigroup::new(rows)?;
    if let Some(l) = labels {
        if l.len() != n {
            return Err(Error::parse(
                0,
                format!("{} labels for {n} elements", l.len()),
            ));
        }
        s = s.with_labels(l);
    }
    Ok(s)
}

pub fn format_cay(s: &Semigroup) -> String {
    let mut out = format!("{}\n", s.order());
    for row in s.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    if let Some(labels) = s.labels() {
        if labels
            .iter()
            .all(|l| !l.is_empty() && !l.contains(char::is_whitespace))
        {
            out.push_str("# labels: ");
            out.push_str(&labels.join(" "));
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::Family;

    #[test]
    fn parses_with_comments_and_labels() {
        let text = "  3\n0 0 0\n 0  1 1 \n0 1 2\n# a comment\n# labels: z a e\n";
        let s = parse_cay(text).unwrap();
        assert_eq!(s.order(), 3);
        assert_eq!(s.mul(1, 2), 1);
        assert_eq!(s.label(2), "e");
    }

    #[test]
    fn round_trip() {
        let b2 = Family::Brandt(2).generate_default().unwrap();
        let again = parse_cay(&format_cay(&b2)).unwrap();
        assert_eq!(again, b2);
        assert_eq!(again.labels(), b2.labels());
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_cay("2\n0 0\n"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_cay("2\n0 x\n1 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_cay("2\n1 0\n0 0\n"),
            Err(Error::NonAssociative { .. })
        ));
        assert!(matches!(
            parse_cay("2\n0 0\n1 1\n# labels: a\n"),
            Err(Error::Parse { .. })
        ));
    }
}
