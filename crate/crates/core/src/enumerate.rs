//! Southwest-first backtracking over fillings of a shape.
//!
//! Cells are filled column by column, left to right, and within a column
//! from the bottom up. When `(l, k)` is proposed, the whole of columns
//! `1..l` and rows `k+1..=ζ_l` of column `l` are already fixed, so
//! `T(l-1, k)` and `T(l, k+1)` are known and the semistandard window
//! `[T(l-1,k), T(l,k+1) - 1]` can be applied directly.

use crate::shape::{Cell, Partition};
use crate::tableau::Tableau;

/// A tableau under construction. Unfilled cells hold 0.
#[derive(Debug, Clone)]
pub struct PartialTableau {
    shape: Partition,
    columns: Vec<Vec<u32>>,
}

impl PartialTableau {
    fn new(shape: &Partition) -> Self {
        PartialTableau {
            columns: shape.column_lengths().iter().map(|&l| vec![0; l]).collect(),
            shape: shape.clone(),
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Entry at `(col, row)`; 0 if not yet filled.
    pub fn get(&self, col: usize, row: usize) -> u32 {
        self.columns[col - 1][row - 1]
    }

    pub fn columns(&self) -> &[Vec<u32>] {
        &self.columns
    }

    /// `T(col, row)` with the virtual boundary conventions.
    fn bound(&self, col: usize, row: usize) -> u32 {
        if col == 0 {
            row as u32
        } else if row == self.shape.column_len(col) + 1 {
            self.shape.n() as u32 + 1
        } else {
            self.get(col, row)
        }
    }
}

/// Enumerates the fillings of `shape` that are semistandard and whose
/// entries survive `admissible`.
///
/// `admissible(partial, cell, lo, hi)` receives the semistandard window
/// `[lo, hi]` for `cell` and returns the allowed values in increasing order.
/// The result is sorted by column-major reading.
pub fn fill_southwest<F>(shape: &Partition, mut admissible: F) -> Vec<Tableau>
where
    F: FnMut(&PartialTableau, Cell, u32, u32) -> Vec<u32>,
{
    let order: Vec<Cell> = (1..=shape.num_columns())
        .flat_map(|c| {
            (1..=shape.column_len(c))
                .rev()
                .map(move |r| Cell::new(c, r))
        })
        .collect();
    let mut partial = PartialTableau::new(shape);
    let mut out = Vec::new();
    descend(&order, 0, &mut partial, &mut admissible, &mut out);
    out.sort();
    out
}

fn descend<F>(
    order: &[Cell],
    pos: usize,
    partial: &mut PartialTableau,
    admissible: &mut F,
    out: &mut Vec<Tableau>,
) where
    F: FnMut(&PartialTableau, Cell, u32, u32) -> Vec<u32>,
{
    let Some(&cell) = order.get(pos) else {
        let t = Tableau::new(partial.shape.clone(), partial.columns.clone())
            .expect("filled grid is well formed");
        out.push(t);
        return;
    };
    let lo = partial.bound(cell.col - 1, cell.row);
    let hi = partial.bound(cell.col, cell.row + 1).saturating_sub(1);
    if lo > hi {
        return;
    }
    for v in admissible(partial, cell, lo, hi) {
        debug_assert!((lo..=hi).contains(&v));
        partial.columns[cell.col - 1][cell.row - 1] = v;
        descend(order, pos + 1, partial, admissible, out);
    }
    partial.columns[cell.col - 1][cell.row - 1] = 0;
}

/// Every semistandard tableau of `shape` with entries in `[1, n]`.
pub fn enumerate_ssyt(shape: &Partition) -> Vec<Tableau> {
    fill_southwest(shape, |_, _, lo, hi| (lo..=hi).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent generator: every grid with entries in `[1, n]`, filtered
    /// by the semistandard predicate.
    fn brute_force(shape: &Partition) -> Vec<Tableau> {
        let n = shape.n() as u32;
        let cells: Vec<Cell> = shape.cells().collect();
        let mut vals = vec![1u32; cells.len()];
        let mut out = Vec::new();
        loop {
            let mut columns: Vec<Vec<u32>> =
                shape.column_lengths().iter().map(|&l| vec![0; l]).collect();
            for (c, v) in cells.iter().zip(&vals) {
                columns[c.col - 1][c.row - 1] = *v;
            }
            let t = Tableau::new(shape.clone(), columns).unwrap();
            if t.is_semistandard() {
                out.push(t);
            }
            let mut p = 0;
            while p < vals.len() && vals[p] == n {
                vals[p] = 1;
                p += 1;
            }
            if p == vals.len() {
                break;
            }
            vals[p] += 1;
        }
        out.sort();
        out
    }

    #[test]
    fn worked_shape_has_eight() {
        let shape = Partition::new(vec![2, 1, 0]).unwrap();
        let got = enumerate_ssyt(&shape);
        let rows: Vec<Vec<Vec<u32>>> = got.iter().map(Tableau::rows).collect();
        let expected: Vec<Vec<Vec<u32>>> = [
            vec![vec![1, 1], vec![2]],
            vec![vec![1, 1], vec![3]],
            vec![vec![1, 2], vec![2]],
            vec![vec![1, 2], vec![3]],
            vec![vec![1, 3], vec![2]],
            vec![vec![1, 3], vec![3]],
            vec![vec![2, 2], vec![3]],
            vec![vec![2, 3], vec![3]],
        ]
        .into_iter()
        .collect();
        let mut exp_sorted: Vec<Tableau> = expected
            .iter()
            .map(|r| Tableau::from_rows(3, r).unwrap())
            .collect();
        exp_sorted.sort();
        assert_eq!(got.len(), 8);
        assert_eq!(got, exp_sorted);
        assert_eq!(rows.len(), 8);
    }

    #[test]
    fn small_counts() {
        let single = Partition::new(vec![1, 0, 0]).unwrap();
        assert_eq!(enumerate_ssyt(&single).len(), 3);
        let st = Partition::new(vec![3, 2, 1]).unwrap();
        assert_eq!(enumerate_ssyt(&st).len(), 8);
        let empty = Partition::empty(3).unwrap();
        assert_eq!(enumerate_ssyt(&empty), vec![Tableau::empty(3).unwrap()]);
    }

    #[test]
    fn matches_brute_force_filter() {
        for n in 1..=4 {
            for shape in Partition::all_up_to(n, 8) {
                if (n as u64).pow(shape.size() as u32) > 70_000 {
                    continue;
                }
                assert_eq!(enumerate_ssyt(&shape), brute_force(&shape), "shape {shape}");
            }
        }
    }

    #[test]
    fn output_is_sorted_and_distinct() {
        let shape = Partition::new(vec![3, 2, 0, 0]).unwrap();
        let all = enumerate_ssyt(&shape);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(Tableau::is_semistandard));
    }
}
