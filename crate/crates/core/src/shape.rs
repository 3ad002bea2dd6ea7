//! Partitions, their Young diagrams and cell addressing.
//!
//! Cells are addressed `(col, row)`, both 1-based, column first.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A box of a Young diagram, addressed column first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub col: usize,
    pub row: usize,
}

impl Cell {
    pub const fn new(col: usize, row: usize) -> Self {
        Cell { col, row }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.col, self.row)
    }
}

/// An `n`-partition: a weakly decreasing sequence of `n` nonnegative parts.
///
/// The alphabet size `n` is the length of `parts`; trailing zero parts are
/// kept so that `(2,1,0)` and `(2,1)` are different objects.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
    columns: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition {
                parts,
                reason: "alphabet size n must be at least 1".into(),
            });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "parts must be weakly decreasing".into(),
            });
        }
        let columns = column_lengths(&parts);
        Ok(Partition { parts, columns })
    }

    /// The empty shape over an alphabet of size `n`.
    pub fn empty(n: usize) -> Result<Self> {
        Partition::new(vec![0; n])
    }

    /// Builds the `n`-partition whose columns have the given lengths.
    pub fn from_column_lengths(n: usize, columns: &[usize]) -> Result<Self> {
        if columns.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::MalformedTableau(format!(
                "column lengths {columns:?} are not weakly decreasing"
            )));
        }
        if columns.iter().any(|&c| c == 0 || c > n) {
            return Err(Error::MalformedTableau(format!(
                "column lengths {columns:?} must lie in [1, {n}]"
            )));
        }
        let parts = (1..=n)
            .map(|i| columns.iter().filter(|&&c| c >= i).count() as u32)
            .collect();
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Alphabet size.
    pub fn n(&self) -> usize {
        self.parts.len()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Column lengths `ζ`, one per column, weakly decreasing.
    pub fn column_lengths(&self) -> &[usize] {
        &self.columns
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    /// Length of column `col` (1-based); zero beyond the last column.
    pub fn column_len(&self, col: usize) -> usize {
        if col == 0 {
            return 0;
        }
        self.columns.get(col - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.col >= 1 && cell.row >= 1 && cell.row <= self.column_len(cell.col)
    }

    /// Cells in column-major order: column 1 top to bottom, then column 2, ...
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, &len)| (1..=len).map(move |r| Cell::new(c + 1, r)))
    }

    /// Every `n`-partition of exactly `size` boxes.
    pub fn all_of_size(n: usize, size: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        fn rec(n: usize, left: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if cur.len() == n {
                if left == 0 {
                    out.push(Partition::new(cur.clone()).expect("decreasing by construction"));
                }
                return;
            }
            for p in (0..=max.min(left)).rev() {
                cur.push(p);
                rec(n, left - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, size as u32, size as u32, &mut cur, &mut out);
        out
    }

    /// Every `n`-partition with at most `max_size` boxes, smallest first.
    pub fn all_up_to(n: usize, max_size: usize) -> Vec<Partition> {
        (0..=max_size)
            .flat_map(|s| Partition::all_of_size(n, s))
            .collect()
    }
}

/// `ζ_j = #{i : parts_i >= j}` for `j = 1..=parts_1`.
pub fn column_lengths(parts: &[u32]) -> Vec<usize> {
    let width = parts.first().copied().unwrap_or(0);
    (1..=width)
        .map(|j| parts.iter().filter(|&&p| p >= j).count())
        .collect()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}
