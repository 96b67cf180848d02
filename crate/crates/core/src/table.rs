//! Cayley-table validation and the table file format.
//!
//! File format: line 1 holds `n`; the next `n` lines hold `n`
//! space-separated 0-based indices each; the identity is index 0.
//! Lines starting with `#` and blank lines are skipped on read so the
//! shipped catalog tables can carry provenance comments; the writer
//! never emits them.

use std::sync::Arc;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::group::{group_from_table_parts, Group};

/// Full associativity is checked only up to this order; larger tables
/// need the trust flag.
pub const FULL_ASSOCIATIVITY_LIMIT: usize = 256;

/// Validates the group axioms on an `n x n` index table and returns the
/// table-backed group. Row 0 and column 0 must be the identity
/// row/column. For `n` above [`FULL_ASSOCIATIVITY_LIMIT`] the full
/// associativity sweep is skipped only when `trust_large` is set;
/// otherwise the table is rejected.
pub fn validate_table(n: usize, table: Vec<usize>, trust_large: bool) -> Result<Group> {
    if n == 0 {
        return Err(Error::NotAGroup("empty table".into()));
    }
    if table.len() != n * n {
        return Err(Error::NotAGroup(format!(
            "expected {} entries, got {}",
            n * n,
            table.len()
        )));
    }
    for (pos, &v) in table.iter().enumerate() {
        if v >= n {
            return Err(Error::NotAGroup(format!(
                "entry {} at cell ({},{}) out of range",
                v,
                pos / n,
                pos % n
            )));
        }
    }
    // Identity at index 0.
    for j in 0..n {
        if table[j] != j {
            return Err(Error::NotAGroup(format!(
                "row 0 is not the identity row at column {j}"
            )));
        }
        if table[j * n] != j {
            return Err(Error::NotAGroup(format!(
                "column 0 is not the identity column at row {j}"
            )));
        }
    }
    // Latin square.
    for i in 0..n {
        let mut row_seen = vec![false; n];
        let mut col_seen = vec![false; n];
        for j in 0..n {
            let r = table[i * n + j];
            if row_seen[r] {
                return Err(Error::NotAGroup(format!("row {i} repeats entry {r}")));
            }
            row_seen[r] = true;
            let c = table[j * n + i];
            if col_seen[c] {
                return Err(Error::NotAGroup(format!("column {i} repeats entry {c}")));
            }
            col_seen[c] = true;
        }
    }
    // Inverses: every row reaches the identity.
    for i in 0..n {
        if !(0..n).any(|j| table[i * n + j] == 0) {
            return Err(Error::NotAGroup(format!("element {i} has no inverse")));
        }
    }
    if n <= FULL_ASSOCIATIVITY_LIMIT {
        for x in 0..n {
            for y in 0..n {
                let xy = table[x * n + y];
                for z in 0..n {
                    if table[xy * n + z] != table[x * n + table[y * n + z]] {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at ({x},{y},{z})"
                        )));
                    }
                }
            }
        }
    } else if !trust_large {
        return Err(Error::NotAGroup(format!(
            "order {n} exceeds the full-associativity limit {FULL_ASSOCIATIVITY_LIMIT}; \
             pass the trust flag to skip the sweep"
        )));
    }
    Ok(group_from_table_parts(n, Arc::new(table)))
}

/// Parses the table file format into `(n, table)`.
pub fn parse_table_text(text: &str) -> Result<(usize, Vec<usize>)> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::TableFormat("missing order line".into()))?
        .parse()
        .map_err(|_| Error::TableFormat("order line is not an integer".into()))?;
    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| Error::TableFormat(format!("missing row {i}")))?;
        let row: Vec<usize> = line
            .split_whitespace()
            .map(|tok| {
                tok.parse()
                    .map_err(|_| Error::TableFormat(format!("bad entry {tok:?} in row {i}")))
            })
            .collect::<Result<_>>()?;
        if row.len() != n {
            return Err(Error::TableFormat(format!(
                "row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        table.extend(row);
    }
    if lines.next().is_some() {
        return Err(Error::TableFormat("trailing content after the table".into()));
    }
    Ok((n, table))
}

/// Renders a table in the file format (UTF-8, LF line endings).
pub fn format_table(n: usize, table: &[usize]) -> String {
    let mut out = String::new();
    out.push_str(&n.to_string());
    out.push('\n');
    for i in 0..n {
        let row: Vec<String> = (0..n).map(|j| table[i * n + j].to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Looks up table elements by index, with range checking.
pub fn table_element(group: &Group, i: usize) -> Result<Element> {
    let e = Element::TableIndex(i);
    group.spec().check_element(&e)?;
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn c2_table() {
        let g = validate_table(2, vec![0, 1, 1, 0], false).unwrap();
        assert_eq!(g.order(), &BigUint::from(2u32));
    }

    #[test]
    fn non_associative_table_rejected() {
        // Latin square with identity row/column but a failing triple.
        // Rows: 0 1 2 3 4 / 1 0 3 4 2 / 2 3 4 0 1 / 3 4 1 2 0 / 4 2 0 1 3
        let t = vec![
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 3, 4, 0, 1, //
            3, 4, 1, 2, 0, //
            4, 2, 0, 1, 3,
        ];
        let err = validate_table(5, t, false).unwrap_err();
        match err {
            Error::NotAGroup(msg) => assert!(msg.contains("associativity"), "{msg}"),
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn bad_identity_row_rejected() {
        let err = validate_table(2, vec![1, 0, 0, 1], false).unwrap_err();
        assert!(matches!(err, Error::NotAGroup(_)));
    }

    #[test]
    fn latin_violation_rejected() {
        let err = validate_table(2, vec![0, 1, 1, 1], false).unwrap_err();
        assert!(matches!(err, Error::NotAGroup(_)));
    }

    #[test]
    fn parse_and_format_round_trip() {
        let text = "2\n0 1\n1 0\n";
        let (n, table) = parse_table_text(text).unwrap();
        assert_eq!(n, 2);
        assert_eq!(format_table(n, &table), text);
    }

    #[test]
    fn parse_skips_comments() {
        let text = "# provenance note\n2\n0 1\n1 0\n";
        let (n, table) = parse_table_text(text).unwrap();
        assert_eq!((n, table), (2, vec![0, 1, 1, 0]));
    }

    #[test]
    fn parse_rejects_ragged_rows() {
        assert!(matches!(
            parse_table_text("2\n0 1\n1\n"),
            Err(Error::TableFormat(_))
        ));
    }
}
