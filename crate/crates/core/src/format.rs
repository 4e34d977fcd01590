//! Text formats.
//!
//! A table file holds the order `n` followed by `n` rows of `n` entries.
//! A permutation file holds the degree followed by one permutation per line,
//! given by its images of `0..n`. Blank lines and text after `#` are ignored
//! in both. A census file starts with `census <family> <order> <count>` and
//! holds one table per record, records separated by lines containing `%`.

use crate::cayley::CayleyTable;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Numbers on the non-comment lines of `text`, with the byte offset of each.
fn numbers(text: &str) -> Result<Vec<Vec<(usize, usize)>>> {
    let mut lines = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let body = line.split('#').next().unwrap();
        let mut row = Vec::new();
        let mut pos = 0;
        for tok in body.split_whitespace() {
            let at = body[pos..].find(tok).unwrap() + pos;
            pos = at + tok.len();
            let v = tok.parse::<usize>().map_err(|_| Error::Parse {
                pos: offset + at,
                msg: format!("expected a non-negative integer, found {tok:?}"),
            })?;
            row.push((v, offset + at));
        }
        if !row.is_empty() {
            lines.push(row);
        }
        offset += line.len();
    }
    Ok(lines)
}

fn header(lines: &[Vec<(usize, usize)>], what: &str) -> Result<usize> {
    match lines.first().map(|l| l.as_slice()) {
        Some([(n, _)]) => Ok(*n),
        Some([_, (_, pos), ..]) => Err(Error::Parse {
            pos: *pos,
            msg: format!("the first line must hold only the {what}"),
        }),
        _ => Err(Error::Parse {
            pos: 0,
            msg: format!("missing {what}"),
        }),
    }
}

pub fn parse_table(text: &str) -> Result<CayleyTable> {
    let lines = numbers(text)?;
    let n = header(&lines, "order")?;
    let rows: Vec<Vec<usize>> = lines[1..]
        .iter()
        .map(|l| l.iter().map(|&(v, _)| v).collect())
        .collect();
    CayleyTable::new(n, &rows)
}

pub fn write_table(t: &CayleyTable) -> String {
    let n = t.order();
    let width = n.saturating_sub(1).to_string().len();
    let mut s = format!("{n}\n");
    for a in 0..n {
        let row: Vec<String> = t.row(a).iter().map(|v| format!("{v:>width$}")).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

pub fn parse_permutations(text: &str) -> Result<Vec<Permutation>> {
    let lines = numbers(text)?;
    let n = header(&lines, "degree")?;
    lines[1..]
        .iter()
        .map(|l| {
            if l.len() != n {
                return Err(Error::Parse {
                    pos: l[0].1,
                    msg: format!("expected {n} images, found {}", l.len()),
                });
            }
            Permutation::new(l.iter().map(|&(v, _)| v).collect())
        })
        .collect()
}

/// Exactly one permutation.
pub fn parse_permutation(text: &str) -> Result<Permutation> {
    let mut ps = parse_permutations(text)?;
    if ps.len() != 1 {
        return Err(Error::Parse {
            pos: 0,
            msg: format!("expected one permutation, found {}", ps.len()),
        });
    }
    Ok(ps.pop().unwrap())
}

pub fn write_permutations(degree: usize, ps: &[Permutation]) -> String {
    let mut s = format!("{degree}\n");
    for p in ps {
        let row: Vec<String> = p.images().iter().map(|v| v.to_string()).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub family: String,
    pub order: usize,
    pub tables: Vec<CayleyTable>,
}

pub fn write_census(family: &str, order: usize, tables: &[CayleyTable]) -> String {
    let mut s = format!("census {family} {order} {}\n", tables.len());
    for t in tables {
        s.push_str("%\n");
        s.push_str(&write_table(t));
    }
    s
}

pub fn parse_census(text: &str) -> Result<Census> {
    let mut records = text.split('%');
    let head = records.next().unwrap_or("");
    let fields: Vec<&str> = head
        .lines()
        .map(|l| l.split('#').next().unwrap().trim())
        .find(|l| !l.is_empty())
        .unwrap_or("")
        .split_whitespace()
        .collect();
    let bad = |msg: &str| Error::Parse {
        pos: 0,
        msg: msg.to_string(),
    };
    let [tag, family, order, count] = fields.as_slice() else {
        return Err(bad("expected `census <family> <order> <count>`"));
    };
    if *tag != "census" {
        return Err(bad("expected `census <family> <order> <count>`"));
    }
    let order: usize = order.parse().map_err(|_| bad("bad order"))?;
    let count: usize = count.parse().map_err(|_| bad("bad count"))?;
    let tables = records
        .filter(|r| !r.trim().is_empty())
        .map(parse_table)
        .collect::<Result<Vec<_>>>()?;
    if tables.len() != count {
        return Err(bad(&format!(
            "header announces {count} tables, found {}",
            tables.len()
        )));
    }
    if let Some(t) = tables.iter().find(|t| t.order() != order) {
        return Err(bad(&format!("record of order {} in an order-{order} census", t.order())));
    }
    Ok(Census {
        family: family.to_string(),
        order,
        tables,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_round_trip() {
        let t = CayleyTable::from_fn(11, |a, b| (3 * a + 9 * b) % 11).unwrap();
        let text = write_table(&t);
        assert!(text.starts_with("11\n 0  9  7"));
        assert_eq!(parse_table(&text).unwrap(), t);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# the cyclic group of order 2\n2\n\n0 1  # identity row\n1 0\n";
        assert_eq!(
            parse_table(text).unwrap(),
            CayleyTable::from_fn(2, |a, b| a ^ b).unwrap()
        );
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_table("2\n0 x\n1 0\n"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_table("2 2\n0 1\n1 0\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_table(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_table("2\n0 1\n"), Err(Error::Shape { .. })));
        assert!(matches!(parse_table("2\n0 2\n1 0\n"), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn permutations() {
        let ps = parse_permutations("3\n1 2 0\n0 2 1\n").unwrap();
        assert_eq!(ps.len(), 2);
        assert_eq!(parse_permutations(&write_permutations(3, &ps)).unwrap(), ps);
        assert!(parse_permutation("3\n1 2 0\n0 2 1\n").is_err());
        assert!(parse_permutations("3\n1 1 0\n").is_err());
        assert!(parse_permutations("3\n1 0\n").is_err());
    }

    #[test]
    fn census_round_trip() {
        let ts = vec![
            CayleyTable::from_fn(3, |_, b| b).unwrap(),
            CayleyTable::from_fn(3, |a, b| (2 * a + 3 - b) % 3).unwrap(),
        ];
        let text = write_census("quandle", 3, &ts);
        let c = parse_census(&text).unwrap();
        assert_eq!(c.family, "quandle");
        assert_eq!(c.order, 3);
        assert_eq!(c.tables, ts);
        let empty = parse_census(&write_census("latin-quandle", 6, &[])).unwrap();
        assert!(empty.tables.is_empty());
        assert!(parse_census("census quandle 3 5\n%\n1\n0\n").is_err());
    }
}
