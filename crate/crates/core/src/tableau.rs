//! Column-major tableaux over a partition shape, with the shared text and
//! JSON formats.
//!
//! A [`Tableau`] only guarantees a well-formed grid (entries in `[1, n]`,
//! column lengths matching the shape). Whether it is semistandard is a
//! separate question answered by [`Tableau::is_semistandard`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shape::{Cell, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TableauJson", into = "TableauJson")]
pub struct Tableau {
    shape: Partition,
    columns: Vec<Vec<u32>>,
}

/// Wire form: `{"n": 3, "shape": [2,1,0], "rows": [[1,1],[2]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableauJson {
    pub n: usize,
    pub shape: Vec<u32>,
    pub rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(shape: Partition, columns: Vec<Vec<u32>>) -> Result<Self> {
        let lens: Vec<usize> = columns.iter().map(Vec::len).collect();
        if lens != shape.column_lengths() {
            return Err(Error::MalformedTableau(format!(
                "column lengths {lens:?} do not match shape {shape}"
            )));
        }
        let n = shape.n() as u32;
        for (c, col) in columns.iter().enumerate() {
            if let Some(&bad) = col.iter().find(|&&e| e == 0 || e > n) {
                return Err(Error::MalformedTableau(format!(
                    "entry {bad} in column {} outside [1, {n}]",
                    c + 1
                )));
            }
        }
        Ok(Tableau { shape, columns })
    }

    /// Builds a tableau from its columns (top to bottom), inferring the shape.
    pub fn from_columns(n: usize, columns: Vec<Vec<u32>>) -> Result<Self> {
        let lens: Vec<usize> = columns.iter().map(Vec::len).collect();
        let shape = Partition::from_column_lengths(n, &lens)?;
        Tableau::new(shape, columns)
    }

    /// Builds a tableau from left-justified rows, top row first.
    pub fn from_rows(n: usize, rows: &[Vec<u32>]) -> Result<Self> {
        if rows.len() > n {
            return Err(Error::MalformedTableau(format!(
                "{} rows exceed alphabet size {n}",
                rows.len()
            )));
        }
        if rows.iter().any(Vec::is_empty) {
            return Err(Error::MalformedTableau("empty row".into()));
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::MalformedTableau(
                "row lengths must be weakly decreasing (ragged grid)".into(),
            ));
        }
        let mut parts: Vec<u32> = rows.iter().map(|r| r.len() as u32).collect();
        parts.resize(n, 0);
        let shape = Partition::new(parts)?;
        let columns = (0..shape.num_columns())
            .map(|c| {
                rows.iter()
                    .take_while(|r| r.len() > c)
                    .map(|r| r[c])
                    .collect()
            })
            .collect();
        Tableau::new(shape, columns)
    }

    /// The empty tableau over an alphabet of size `n`.
    pub fn empty(n: usize) -> Result<Self> {
        Tableau::new(Partition::empty(n)?, Vec::new())
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Vec<u32>] {
        &self.columns
    }

    /// Column `col` (1-based), top to bottom.
    pub fn column(&self, col: usize) -> &[u32] {
        &self.columns[col - 1]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        let height = self.shape.column_len(1);
        (0..height)
            .map(|r| {
                self.columns
                    .iter()
                    .take_while(|c| c.len() > r)
                    .map(|c| c[r])
                    .collect()
            })
            .collect()
    }

    /// The entry at an in-shape cell.
    pub fn get(&self, cell: Cell) -> Option<u32> {
        if cell.col == 0 || cell.row == 0 {
            return None;
        }
        self.columns.get(cell.col - 1)?.get(cell.row - 1).copied()
    }

    /// `T(col, row)` with the virtual boundary: `T(0, k) = k` and
    /// `T(j, ζ_j + 1) = n + 1`.
    ///
    /// Panics for any other cell outside the shape.
    pub fn at(&self, col: usize, row: usize) -> u32 {
        if col == 0 {
            return row as u32;
        }
        if row == self.shape.column_len(col) + 1 {
            return self.n() as u32 + 1;
        }
        self.get(Cell::new(col, row))
            .unwrap_or_else(|| panic!("cell ({col},{row}) outside shape {}", self.shape))
    }

    /// Returns a copy with one in-shape entry replaced.
    pub fn with_entry(&self, cell: Cell, value: u32) -> Result<Self> {
        if !self.shape.contains(cell) {
            return Err(Error::CellOutOfShape {
                col: cell.col,
                row: cell.row,
            });
        }
        let mut columns = self.columns.clone();
        columns[cell.col - 1][cell.row - 1] = value;
        Tableau::new(self.shape.clone(), columns)
    }

    /// Rows weakly increase and columns strictly increase, i.e.
    /// `T(j,i) ∈ [T(j-1,i), T(j,i+1) - 1]` for every cell.
    pub fn is_semistandard(&self) -> bool {
        self.first_violation().is_none()
    }

    pub fn check_semistandard(&self) -> Result<()> {
        match self.first_violation() {
            None => Ok(()),
            Some(cell) => Err(Error::NotSemistandard(format!(
                "entry {} at {cell} violates T(j,i) in [T(j-1,i), T(j,i+1)-1]",
                self.at(cell.col, cell.row)
            ))),
        }
    }

    fn first_violation(&self) -> Option<Cell> {
        self.shape.cells().find(|&c| {
            let v = self.at(c.col, c.row);
            v < self.at(c.col - 1, c.row) || v + 1 > self.at(c.col, c.row + 1)
        })
    }

    /// Multiplicity of each value `1..=n`.
    pub fn weight(&self) -> Vec<u32> {
        let mut w = vec![0u32; self.n()];
        for &e in self.columns.iter().flatten() {
            w[e as usize - 1] += 1;
        }
        w
    }

    /// Entry-wise comparison `self <= other`.
    pub fn entrywise_leq(&self, other: &Tableau) -> Result<bool> {
        if self.shape.column_lengths() != other.shape.column_lengths() {
            return Err(Error::ShapeMismatch(format!(
                "{} vs {}",
                self.shape, other.shape
            )));
        }
        Ok(self
            .columns
            .iter()
            .flatten()
            .zip(other.columns.iter().flatten())
            .all(|(a, b)| a <= b))
    }

    /// Every column's entries also appear in the column to its left.
    pub fn is_key(&self) -> bool {
        self.columns
            .windows(2)
            .all(|w| w[1].iter().all(|e| w[0].contains(e)))
    }

    /// Entries in column-major reading order (the lattice embedding).
    pub fn flatten(&self) -> Vec<u32> {
        self.columns.iter().flatten().copied().collect()
    }

    /// Text form: one row per line, entries separated by spaces.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(u32::to_string).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    /// Parses the text form. Blank lines and `#` comments are skipped.
    pub fn parse_text(text: &str, n: usize) -> Result<Self> {
        let rows = parse_rows(text)?;
        Tableau::from_rows(n, &rows)
    }

    pub fn to_json(&self) -> TableauJson {
        TableauJson::from(self.clone())
    }
}

/// Parses rows of whitespace-separated integers.
pub fn parse_rows(text: &str) -> Result<Vec<Vec<u32>>> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| {
            l.split_whitespace()
                .map(|tok| {
                    tok.parse::<u32>()
                        .map_err(|e| Error::Parse(format!("bad entry {tok:?}: {e}")))
                })
                .collect()
        })
        .collect()
}

impl TryFrom<TableauJson> for Tableau {
    type Error = Error;

    fn try_from(j: TableauJson) -> Result<Self> {
        let t = Tableau::from_rows(j.n, &j.rows)?;
        let mut shape = j.shape.clone();
        shape.resize(j.n, 0);
        if t.shape.parts() != shape.as_slice() {
            return Err(Error::ShapeMismatch(format!(
                "declared shape {:?} but rows have shape {}",
                j.shape, t.shape
            )));
        }
        Ok(t)
    }
}

impl From<Tableau> for TableauJson {
    fn from(t: Tableau) -> Self {
        TableauJson {
            n: t.n(),
            shape: t.shape.parts().to_vec(),
            rows: t.rows(),
        }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
