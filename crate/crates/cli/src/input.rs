//! Parsing of command-line values and tableau inputs.

use std::fs;
use std::io::Read;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use demazure_core::tableau::{parse_rows, TableauJson};
use demazure_core::{Partition, Permutation, Tableau};

/// Integers separated by commas or whitespace, optionally bracketed.
pub fn parse_ints(s: &str) -> Result<Vec<u32>> {
    let body = s
        .trim()
        .trim_start_matches(['[', '('])
        .trim_end_matches([']', ')']);
    body.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u32>()
                .with_context(|| format!("not a nonnegative integer: {t:?}"))
        })
        .collect()
}

pub fn parse_partition(s: &str) -> Result<Partition> {
    Ok(Partition::new(parse_ints(s)?)?)
}

pub fn parse_permutation(s: &str) -> Result<Permutation> {
    Ok(Permutation::new(parse_ints(s)?)?)
}

/// Reads a tableau given inline or as a path (`-` for stdin).
///
/// JSON objects carry their own alphabet size. Row lists, either as JSON
/// arrays or in the text format, use `n` when given and otherwise the
/// largest entry.
pub fn read_tableau(source: &str, n: Option<usize>) -> Result<Tableau> {
    let text = if source == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else if looks_inline(source) {
        source.to_string()
    } else {
        fs::read_to_string(Path::new(source)).with_context(|| format!("cannot read {source}"))?
    };
    parse_tableau(&text, n)
}

fn looks_inline(s: &str) -> bool {
    let t = s.trim_start();
    t.starts_with('{') || t.starts_with('[') || t.contains('\n')
}

pub fn parse_tableau(text: &str, n: Option<usize>) -> Result<Tableau> {
    let t = text.trim();
    if t.starts_with('{') {
        let json: TableauJson = serde_json::from_str(t).context("invalid tableau JSON")?;
        if let Some(n) = n {
            if n != json.n {
                bail!("--n {n} disagrees with the tableau's n = {}", json.n);
            }
        }
        return Ok(Tableau::try_from(json)?);
    }
    let rows: Vec<Vec<u32>> = if t.starts_with('[') {
        serde_json::from_str(t).context("invalid row list JSON")?
    } else {
        parse_rows(t)?
    };
    let max = rows.iter().flatten().copied().max().unwrap_or(0) as usize;
    let n = match n {
        Some(n) => n,
        None if rows.is_empty() => bail!("an empty tableau needs --n"),
        None => max.max(rows.len()),
    };
    Tableau::from_rows(n, &rows).map_err(|e| anyhow!(e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_lists() {
        assert_eq!(parse_ints("3,1,2").unwrap(), vec![3, 1, 2]);
        assert_eq!(parse_ints("[2, 1, 0]").unwrap(), vec![2, 1, 0]);
        assert_eq!(parse_ints("(1 0 2)").unwrap(), vec![1, 0, 2]);
        assert!(parse_ints("1,-2").is_err());
    }

    #[test]
    fn tableau_forms_agree() {
        let a = parse_tableau("1 1\n2\n", Some(3)).unwrap();
        let b = parse_tableau("[[1,1],[2]]", Some(3)).unwrap();
        let c = parse_tableau(r#"{"n":3,"shape":[2,1,0],"rows":[[1,1],[2]]}"#, None).unwrap();
        assert_eq!(a, b);
        assert_eq!(b, c);
        assert_eq!(parse_tableau("1 1\n2", None).unwrap().n(), 2);
        assert!(parse_tableau(r#"{"n":3,"shape":[2,1,0],"rows":[[1,1],[2]]}"#, Some(4)).is_err());
    }
}
