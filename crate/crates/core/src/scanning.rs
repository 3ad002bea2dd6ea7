//! The scanning method: right keys read directly off a semistandard
//! tableau via earliest weakly increasing subsequences (EWIS) of column
//! bottoms, plus the mirror-image procedure for left keys.
//!
//! For an origin column `j`, paths are built bottom-up. Each path starts at
//! the current bottom of column `j`, follows the EWIS of the current bottoms
//! of columns `j+1, j+2, ...`, and its cells are then removed. The last
//! value on the path is the scanning-tableau entry at the origin.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::shape::Cell;
use crate::tableau::Tableau;

/// Values and 1-based positions of the EWIS of `seq`.
pub fn ewis(seq: &[u32]) -> Result<(Vec<u32>, Vec<usize>)> {
    let (&first, rest) = seq.split_first().ok_or(Error::EmptySequence)?;
    let mut values = vec![first];
    let mut positions = vec![1];
    let mut last = first;
    for (i, &x) in rest.iter().enumerate() {
        if x >= last {
            values.push(x);
            positions.push(i + 2);
            last = x;
        }
    }
    Ok((values, positions))
}

/// One northeasterly scanning path `P(T; j, i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanPath {
    pub origin: Cell,
    pub cells: Vec<Cell>,
    pub values: Vec<u32>,
}

impl ScanPath {
    /// The scanning-tableau entry contributed by this path.
    pub fn last_value(&self) -> u32 {
        *self.values.last().expect("paths are never empty")
    }

    /// Value at the last path cell strictly left of column `col`.
    pub fn last_value_before(&self, col: usize) -> Option<u32> {
        self.cells
            .iter()
            .zip(&self.values)
            .rev()
            .find(|(c, _)| c.col < col)
            .map(|(_, &v)| v)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }
}

/// A grid of vertical segments: column `c` holds rows `top[c]..=bottom[c]`.
///
/// Full tableaux have every `top` equal to 1. The Demazure enumerator also
/// scans partially filled grids whose last column is missing its upper rows.
pub(crate) struct Segments<'a> {
    pub columns: &'a [Vec<u32>],
    pub tops: Vec<usize>,
    pub bottoms: Vec<usize>,
}

impl Segments<'_> {
    fn value(&self, col: usize, row: usize) -> u32 {
        self.columns[col - 1][row - 1]
    }

    /// Paths originating in column `origin`, bottom-up.
    pub fn trace(&self, origin: usize) -> Vec<ScanPath> {
        let ncols = self.tops.len();
        let mut bottoms = self.bottoms.clone();
        let mut paths = Vec::new();
        while bottoms[origin - 1] >= self.tops[origin - 1] {
            let start = Cell::new(origin, bottoms[origin - 1]);
            let mut last = self.value(start.col, start.row);
            let mut cells = vec![start];
            let mut values = vec![last];
            for h in origin + 1..=ncols {
                let b = bottoms[h - 1];
                if b < self.tops[h - 1] {
                    continue;
                }
                let v = self.value(h, b);
                if v >= last {
                    cells.push(Cell::new(h, b));
                    values.push(v);
                    last = v;
                }
            }
            for c in &cells {
                bottoms[c.col - 1] -= 1;
            }
            paths.push(ScanPath {
                origin: start,
                cells,
                values,
            });
        }
        paths
    }
}

fn full_segments(t: &Tableau) -> Segments<'_> {
    Segments {
        columns: t.columns(),
        tops: vec![1; t.num_columns()],
        bottoms: t.shape().column_lengths().to_vec(),
    }
}

/// The `ζ_j` scanning paths that originate in column `j`, bottom-up.
pub fn scan_column(t: &Tableau, j: usize) -> Result<Vec<ScanPath>> {
    if j == 0 || j > t.num_columns() {
        return Err(Error::IndexOutOfRange {
            index: j,
            range: format!("[1, {}]", t.num_columns()),
        });
    }
    Ok(full_segments(t).trace(j))
}

/// The scanning tableau `S(T)` together with every scanning path.
#[derive(Debug, Clone)]
pub struct ScanResult {
    pub scanning_tableau: Tableau,
    /// Keyed by origin cell `(j, i)`.
    pub paths: BTreeMap<Cell, ScanPath>,
}

impl ScanResult {
    pub fn path(&self, origin: Cell) -> &ScanPath {
        &self.paths[&origin]
    }
}

/// Computes `S(T)`, which equals the right key of `T`.
pub fn scanning_tableau(t: &Tableau) -> ScanResult {
    let seg = full_segments(t);
    let mut columns: Vec<Vec<u32>> = t.columns().iter().map(|c| vec![0; c.len()]).collect();
    let mut paths = BTreeMap::new();
    for j in 1..=t.num_columns() {
        for p in seg.trace(j) {
            columns[j - 1][p.origin.row - 1] = p.last_value();
            paths.insert(p.origin, p);
        }
    }
    let scanning_tableau =
        Tableau::new(t.shape().clone(), columns).expect("same shape, entries from T");
    ScanResult {
        scanning_tableau,
        paths,
    }
}

/// Right key of `T` by the scanning method.
pub fn right_key(t: &Tableau) -> Tableau {
    scanning_tableau(t).scanning_tableau
}

/// Left key of `T`.
///
/// For the truncation to columns `1..=k`, each chain starts at the lowest
/// available entry of column `k` and steps left, picking in each column the
/// largest available entry not exceeding the previous one. The chain's final
/// value fills the next box (bottom-up) of column `k` of the left key. Chain
/// cells and everything below them become unavailable.
pub fn left_key(t: &Tableau) -> Tableau {
    let ncols = t.num_columns();
    let mut out: Vec<Vec<u32>> = t.columns().iter().map(|c| vec![0; c.len()]).collect();
    for k in (1..=ncols).rev() {
        // depth[c]: rows 1..=depth[c] of column c are still available
        let mut depth: Vec<usize> = t.columns()[..k].iter().map(Vec::len).collect();
        for slot in (1..=depth[k - 1]).rev() {
            let mut a = t.at(k, depth[k - 1]);
            depth[k - 1] -= 1;
            for c in (1..k).rev() {
                let col = &t.column(c)[..depth[c - 1]];
                let r = col
                    .iter()
                    .rposition(|&e| e <= a)
                    .unwrap_or_else(|| panic!("left-key chain stalled in column {c}"));
                a = col[r];
                depth[c - 1] = r;
            }
            out[k - 1][slot - 1] = a;
        }
    }
    Tableau::new(t.shape().clone(), out).expect("same shape, entries from T")
}
