//! The `.bos` text format for biordered sets.
//!
//! ```text
//! 2
//! 1 0
//! 0 1
//!
//! 1 1
//! 1 1
//!
//! 0 0
//! 1 1
//! ```
//!
//! The size `|E|`, then three blocks of `|E|` rows separated by blank lines:
//! `ω^r` (row `e`, column `f` is `1` iff `e ω^r f`), `ω^l`, and the basic
//! products with `-` for undefined. `#` starts a comment line; `# labels:`
//! names the elements.

use super::{BiorderedSet, RawBiorder};
use crate::error::{Error, Result};

pub fn format_bos(b: &BiorderedSet) -> String {
    let n = b.size();
    let mut out = format!("{n}\n");
    for rel in [BiorderedSet::omega_r, BiorderedSet::omega_l] {
        for e in 0..n {
            let row: Vec<&str> = (0..n)
                .map(|f| if rel(b, e, f) { "1" } else { "0" })
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out.push('\n');
    }
    for e in 0..n {
        let row: Vec<String> = (0..n)
            .map(|f| b.product(e, f).map_or("-".to_string(), |p| p.to_string()))
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    if b.labels()
        .iter()
        .all(|l| !l.is_empty() && !l.contains(char::is_whitespace))
    {
        out.push_str("# labels: ");
        out.push_str(&b.labels().join(" "));
        out.push('\n');
    }
    out
}

/// Parses a `.bos` file. Quasi-orders are validated; axioms are not.
pub fn parse_bos(text: &str) -> Result<RawBiorder> {
    let mut size: Option<usize> = None;
    let mut blocks: Vec<Vec<(usize, Vec<&str>)>> = vec![Vec::new()];
    let mut labels = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if let Some(c) = line.strip_prefix('#') {
            if let Some(l) = c.trim().strip_prefix("labels:") {
                labels = Some(l.split_whitespace().map(str::to_string).collect());
            }
            continue;
        }
        if line.is_empty() {
            if size.is_some() && !blocks.last().expect("nonempty").is_empty() {
                blocks.push(Vec::new());
            }
            continue;
        }
        if size.is_none() {
            size = Some(
                line.parse()
                    .map_err(|_| Error::parse(i + 1, "first line must hold |E|"))?,
            );
            continue;
        }
        blocks
            .last_mut()
            .expect("nonempty")
            .push((i + 1, line.split_whitespace().collect()));
    }
    let n = size.ok_or_else(|| Error::parse(1, "missing size"))?;
    blocks.retain(|b| !b.is_empty());
    if blocks.len() != 3 {
        return Err(Error::parse(
            0,
            format!("expected 3 blocks, found {}", blocks.len()),
        ));
    }
    let mut cells: Vec<Vec<(usize, &str)>> = Vec::new();
    for block in &blocks {
        if block.len() != n {
            return Err(Error::parse(
                block[0].0,
                format!("block has {} rows, expected {n}", block.len()),
            ));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (line, row) in block {
            if row.len() != n {
                return Err(Error::parse(
                    *line,
                    format!("row has {} entries, expected {n}", row.len()),
                ));
            }
            flat.extend(row.iter().map(|t| (*line, *t)));
        }
        cells.push(flat);
    }
    let bits = |block: &[(usize, &str)]| -> Result<Vec<bool>> {
        block
            .iter()
            .map(|&(line, t)| match t {
                "0" => Ok(false),
                "1" => Ok(true),
                _ => Err(Error::parse(line, format!("expected 0 or 1, found {t:?}"))),
            })
            .collect()
    };
    let omega_r = bits(&cells[0])?;
    let omega_l = bits(&cells[1])?;
    let product = cells[2]
        .iter()
        .map(|&(line, t)| match t {
            "-" => Ok(None),
            _ => t
                .parse()
                .map(Some)
                .map_err(|_| Error::parse(line, format!("not an index: {t:?}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    BiorderedSet::from_parts(n, omega_r, omega_l, product, labels)
}
