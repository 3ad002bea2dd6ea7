//! Local condition sets and the entrywise Demazure test.
//!
//! For a cell `(l, k)` the admissible values are determined by the scanning
//! paths of the entries southwest of it: columns `1..l` in full and the part
//! of column `l` strictly below row `k`. That is exactly what is known when a
//! tableau is filled column by column from the bottom up, so the same
//! computation drives both membership testing and enumeration.

use std::fmt;

use serde::Serialize;

use crate::enumerate::fill_southwest;
use crate::error::{Error, Result};
use crate::permutation::{key_of_permutation, Permutation};
use crate::scanning::{right_key, Segments};
use crate::shape::{Cell, Partition};
use crate::tableau::Tableau;

/// Path bookkeeping for one origin column `j` relative to a target cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColumnBounds {
    pub j: usize,
    /// `a(j)`
    pub a: usize,
    /// `b(j)`
    pub b: usize,
    /// `E(l,k;j,i)` for `i = a..b`.
    pub e: Vec<u32>,
}

impl ColumnBounds {
    pub fn rows(&self) -> std::ops::Range<usize> {
        self.a..self.b
    }

    pub fn e_at(&self, i: usize) -> u32 {
        self.e[i - self.a]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanBounds {
    pub cell: Cell,
    /// One entry per `j = 1..=l`; the last is the convention row.
    pub columns: Vec<ColumnBounds>,
}

impl ScanBounds {
    pub fn column(&self, j: usize) -> &ColumnBounds {
        &self.columns[j - 1]
    }
}

/// Sorted, pairwise disjoint, non-adjacent closed intervals.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct IntervalSet(Vec<(u32, u32)>);

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet(Vec::new())
    }

    /// Union of the given closed intervals; those with `lo > hi` are empty.
    pub fn union_of(intervals: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut v: Vec<(u32, u32)> = intervals.into_iter().filter(|(lo, hi)| lo <= hi).collect();
        v.sort_unstable();
        let mut out: Vec<(u32, u32)> = Vec::with_capacity(v.len());
        for (lo, hi) in v {
            match out.last_mut() {
                Some(last) if lo <= last.1.saturating_add(1) => last.1 = last.1.max(hi),
                _ => out.push((lo, hi)),
            }
        }
        IntervalSet(out)
    }

    pub fn intersect(&self, other: &IntervalSet) -> IntervalSet {
        let (mut p, mut q) = (0, 0);
        let mut out = Vec::new();
        while p < self.0.len() && q < other.0.len() {
            let (a, b) = self.0[p];
            let (c, d) = other.0[q];
            let lo = a.max(c);
            let hi = b.min(d);
            if lo <= hi {
                out.push((lo, hi));
            }
            if b < d {
                p += 1;
            } else {
                q += 1;
            }
        }
        IntervalSet(out)
    }

    pub fn intervals(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.iter().any(|&(lo, hi)| lo <= v && v <= hi)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> Vec<u32> {
        self.0.iter().flat_map(|&(lo, hi)| lo..=hi).collect()
    }

    /// Members inside `[lo, hi]`, ascending.
    pub fn values_within(&self, lo: u32, hi: u32) -> Vec<u32> {
        self.0
            .iter()
            .flat_map(|&(a, b)| a.max(lo)..=b.min(hi))
            .collect()
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "{{}}");
        }
        for (idx, (lo, hi)) in self.0.iter().enumerate() {
            if idx > 0 {
                write!(f, " u ")?;
            }
            write!(f, "[{lo},{hi}]")?;
        }
        Ok(())
    }
}

/// `B(T, w; l, k)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalConditionSet {
    pub cell: Cell,
    pub values: IntervalSet,
}

impl LocalConditionSet {
    pub fn contains(&self, v: u32) -> bool {
        self.values.contains(v)
    }
}

/// Scan bounds for `(l, k)` from a grid whose columns `1..l` are complete
/// and whose column `l` is known in rows `k+1..`.
fn bounds_from_grid(
    columns: &[Vec<u32>],
    lengths: &[usize],
    l: usize,
    k: usize,
) -> Result<ScanBounds> {
    let mut tops = vec![1; l];
    tops[l - 1] = k + 1;
    let seg = Segments {
        columns,
        tops,
        bottoms: lengths[..l].to_vec(),
    };
    let zeta_l = lengths[l - 1];
    let mut out = Vec::with_capacity(l);
    for j in 1..l {
        let paths = seg.trace(j);
        let origin_of = |target: Cell| -> Result<usize> {
            paths
                .iter()
                .find(|p| p.contains(target))
                .map(|p| p.origin.row)
                .ok_or_else(|| {
                    Error::Invariant(format!("no path from column {j} passes through {target}"))
                })
        };
        let a = origin_of(Cell::new(l - 1, k))?;
        let b = if k < zeta_l {
            origin_of(Cell::new(l, k + 1))?
        } else {
            lengths[j - 1] + 1
        };
        if a >= b {
            return Err(Error::Invariant(format!(
                "a({j}) = {a} is not below b({j}) = {b} for cell ({l},{k})"
            )));
        }
        // paths are listed bottom-up, so row i is at index zeta_j - i
        let zeta_j = lengths[j - 1];
        let e = (a..b)
            .map(|i| {
                paths[zeta_j - i]
                    .last_value_before(l)
                    .expect("a path always contains its origin")
            })
            .collect();
        out.push(ColumnBounds { j, a, b, e });
    }
    out.push(ColumnBounds {
        j: l,
        a: k,
        b: k + 1,
        e: vec![k as u32],
    });
    Ok(ScanBounds {
        cell: Cell::new(l, k),
        columns: out,
    })
}

fn check_cell(shape: &Partition, l: usize, k: usize) -> Result<()> {
    if shape.contains(Cell::new(l, k)) {
        Ok(())
    } else {
        Err(Error::CellOutOfShape { col: l, row: k })
    }
}

/// `a(j)`, `b(j)` and `E(l,k;j,i)` for every `j <= l`.
pub fn scan_bounds(t: &Tableau, l: usize, k: usize) -> Result<ScanBounds> {
    check_cell(t.shape(), l, k)?;
    bounds_from_grid(t.columns(), t.shape().column_lengths(), l, k)
}

fn condition_from_bounds(bounds: &ScanBounds, y: &Tableau) -> IntervalSet {
    let mut acc: Option<IntervalSet> = None;
    for cb in &bounds.columns {
        let union = IntervalSet::union_of(cb.rows().map(|i| (cb.e_at(i), y.at(cb.j, i))));
        acc = Some(match acc {
            None => union,
            Some(prev) => prev.intersect(&union),
        });
    }
    acc.unwrap_or_default()
}

fn check_alphabet(shape: &Partition, w: &Permutation) -> Result<()> {
    if shape.n() != w.n() {
        return Err(Error::AlphabetMismatch {
            expected: shape.n(),
            found: w.n(),
        });
    }
    Ok(())
}

/// `B(T, w; l, k)`.
pub fn local_condition_set(
    t: &Tableau,
    w: &Permutation,
    l: usize,
    k: usize,
) -> Result<LocalConditionSet> {
    check_alphabet(t.shape(), w)?;
    let y = key_of_permutation(t.shape(), w)?;
    let bounds = scan_bounds(t, l, k)?;
    Ok(LocalConditionSet {
        cell: Cell::new(l, k),
        values: condition_from_bounds(&bounds, &y),
    })
}

/// Entrywise test: every entry lies in its local condition set.
pub fn is_demazure(t: &Tableau, w: &Permutation) -> Result<bool> {
    check_alphabet(t.shape(), w)?;
    t.check_semistandard()?;
    let y = key_of_permutation(t.shape(), w)?;
    for cell in t.shape().cells() {
        let bounds = scan_bounds(t, cell.col, cell.row)?;
        if !condition_from_bounds(&bounds, &y).contains(t.at(cell.col, cell.row)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Definitional test: the right key is dominated by the key of `w`.
pub fn is_demazure_by_key(t: &Tableau, w: &Permutation) -> Result<bool> {
    check_alphabet(t.shape(), w)?;
    t.check_semistandard()?;
    let y = key_of_permutation(t.shape(), w)?;
    right_key(t).entrywise_leq(&y)
}

/// All Demazure tableaux of shape `shape` for `w`, in canonical order.
pub fn enumerate_demazure(shape: &Partition, w: &Permutation) -> Result<Vec<Tableau>> {
    check_alphabet(shape, w)?;
    let y = key_of_permutation(shape, w)?;
    let lengths = shape.column_lengths();
    let mut failure = None;
    let out = fill_southwest(shape, |partial, cell, lo, hi| {
        if failure.is_some() {
            return Vec::new();
        }
        match bounds_from_grid(partial.columns(), lengths, cell.col, cell.row) {
            Ok(bounds) => condition_from_bounds(&bounds, &y).values_within(lo, hi),
            Err(e) => {
                failure = Some(e);
                Vec::new()
            }
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_ssyt;
    use crate::jdt::right_key_jdt;
    use crate::scanning::scanning_tableau;

    fn cols(n: usize, c: &[&[u32]]) -> Tableau {
        Tableau::from_columns(n, c.iter().map(|x| x.to_vec()).collect()).unwrap()
    }

    fn perm(xs: &[u32]) -> Permutation {
        Permutation::new(xs.to_vec()).unwrap()
    }

    /// Bounds read off the full scan of `T`, straight from the definitions.
    fn bounds_by_definition(t: &Tableau, l: usize, k: usize) -> ScanBounds {
        let scan = scanning_tableau(t);
        let zeta = t.shape().column_lengths();
        let origin = |j: usize, target: Cell| {
            let rows: Vec<usize> = (1..=zeta[j - 1])
                .filter(|&i| scan.path(Cell::new(j, i)).contains(target))
                .collect();
            assert_eq!(
                rows.len(),
                1,
                "exactly one path from column {j} through {target}"
            );
            rows[0]
        };
        let mut columns = Vec::new();
        for j in 1..l {
            let a = origin(j, Cell::new(l - 1, k));
            let b = if k < zeta[l - 1] {
                origin(j, Cell::new(l, k + 1))
            } else {
                zeta[j - 1] + 1
            };
            let e = (a..b)
                .map(|i| {
                    let p = scan.path(Cell::new(j, i));
                    let h = p
                        .cells
                        .iter()
                        .map(|c| c.col)
                        .filter(|&h| h < l)
                        .max()
                        .unwrap();
                    let m = p.cells.iter().find(|c| c.col == h).unwrap().row;
                    t.at(h, m)
                })
                .collect();
            columns.push(ColumnBounds { j, a, b, e });
        }
        columns.push(ColumnBounds {
            j: l,
            a: k,
            b: k + 1,
            e: vec![k as u32],
        });
        ScanBounds {
            cell: Cell::new(l, k),
            columns,
        }
    }

    fn worked_tableau() -> Tableau {
        Tableau::from_rows(
            9,
            &[
                vec![1, 1, 3, 4, 6],
                vec![2, 3, 5, 7, 9],
                vec![4, 5, 6, 8],
                vec![5, 7, 9],
                vec![7],
                vec![8],
            ],
        )
        .unwrap()
    }

    #[test]
    fn interval_sets() {
        let u = IntervalSet::union_of([(1, 1), (2, 3), (5, 4), (7, 9)]);
        assert_eq!(u.intervals(), &[(1, 3), (7, 9)]);
        let v = IntervalSet::union_of([(2, 8)]);
        assert_eq!(u.intersect(&v).intervals(), &[(2, 3), (7, 8)]);
        assert_eq!(u.values_within(3, 7), vec![3, 7]);
        assert!(IntervalSet::union_of([(3, 2)]).is_empty());
        assert_eq!(u.to_string(), "[1,3] u [7,9]");
    }

    #[test]
    fn bounds_in_first_column_are_the_convention() {
        let t = cols(3, &[&[1, 2], &[3]]);
        let b = scan_bounds(&t, 1, 2).unwrap();
        assert_eq!(
            b.columns,
            vec![ColumnBounds {
                j: 1,
                a: 2,
                b: 3,
                e: vec![2]
            }]
        );
    }

    #[test]
    fn small_bounds_example() {
        let t = cols(3, &[&[1, 2], &[3]]);
        let b = scan_bounds(&t, 2, 1).unwrap();
        assert_eq!(
            b.column(1),
            &ColumnBounds {
                j: 1,
                a: 1,
                b: 3,
                e: vec![1, 2]
            }
        );
        assert!(matches!(
            scan_bounds(&t, 2, 2),
            Err(Error::CellOutOfShape { .. })
        ));
    }

    #[test]
    fn worked_bounds() {
        let t = worked_tableau();
        let b = scan_bounds(&t, 2, 4).unwrap();
        assert_eq!(b.column(1).a, 4);
        assert_eq!(b, bounds_by_definition(&t, 2, 4));
    }

    #[test]
    fn local_condition_examples() {
        let t = cols(3, &[&[1, 2], &[3]]);
        let b = local_condition_set(&t, &perm(&[3, 1, 2]), 2, 1).unwrap();
        assert_eq!(b.values.values(), vec![1, 2, 3]);
        let b = local_condition_set(&t, &Permutation::identity(3), 2, 1).unwrap();
        assert_eq!(b.values.values(), vec![1]);
        let b = local_condition_set(&t, &perm(&[3, 1, 2]), 1, 2).unwrap();
        assert_eq!(b.values.intervals(), &[(2, 3)]);
    }

    #[test]
    fn worked_demazure_set() {
        let shape = Partition::new(vec![2, 1, 0]).unwrap();
        let w = perm(&[3, 1, 2]);
        let members: Vec<Tableau> = [
            vec![vec![1, 1], vec![2]],
            vec![vec![1, 1], vec![3]],
            vec![vec![1, 2], vec![2]],
            vec![vec![1, 3], vec![2]],
            vec![vec![1, 3], vec![3]],
        ]
        .iter()
        .map(|r| Tableau::from_rows(3, r).unwrap())
        .collect();
        for t in enumerate_ssyt(&shape) {
            assert_eq!(
                is_demazure(&t, &w).unwrap(),
                members.contains(&t),
                "{:?}",
                t.rows()
            );
        }
        let mut expected = members.clone();
        expected.sort();
        assert_eq!(enumerate_demazure(&shape, &w).unwrap(), expected);
    }

    #[test]
    fn staircase_counterexample_tableau_is_excluded() {
        let t = cols(3, &[&[1, 2, 3], &[1, 3], &[2]]);
        let w = perm(&[3, 1, 2]);
        assert!(!is_demazure(&t, &w).unwrap());
        assert!(scanning_tableau(&t).scanning_tableau.at(2, 1) >= 2);
    }

    #[test]
    fn extreme_permutations() {
        for shape in Partition::all_up_to(3, 6) {
            let id = enumerate_demazure(&shape, &Permutation::identity(3)).unwrap();
            let y = key_of_permutation(&shape, &Permutation::identity(3)).unwrap();
            assert_eq!(id, vec![y.clone()]);
            assert!(is_demazure(&y, &Permutation::identity(3)).unwrap());
            let top = enumerate_demazure(&shape, &Permutation::longest(3)).unwrap();
            assert_eq!(top, enumerate_ssyt(&shape));
        }
    }

    #[test]
    fn bounds_match_the_definitions() {
        for n in 1..=4 {
            for shape in Partition::all_up_to(n, 7) {
                for t in enumerate_ssyt(&shape) {
                    for cell in shape.cells() {
                        assert_eq!(
                            scan_bounds(&t, cell.col, cell.row).unwrap(),
                            bounds_by_definition(&t, cell.col, cell.row)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn three_membership_tests_agree() {
        for n in 1..=4 {
            let perms = Permutation::all(n);
            for shape in Partition::all_up_to(n, 6) {
                for t in enumerate_ssyt(&shape) {
                    let jdt = right_key_jdt(&t).unwrap();
                    for w in &perms {
                        let y = key_of_permutation(&shape, w).unwrap();
                        let by_b = is_demazure(&t, w).unwrap();
                        assert_eq!(by_b, is_demazure_by_key(&t, w).unwrap());
                        assert_eq!(by_b, jdt.entrywise_leq(&y).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_is_filtered_ssyt() {
        for n in 1..=4 {
            for shape in Partition::all_up_to(n, 6) {
                let all = enumerate_ssyt(&shape);
                for w in Permutation::all(n) {
                    let got = enumerate_demazure(&shape, &w).unwrap();
                    let want: Vec<Tableau> = all
                        .iter()
                        .filter(|t| is_demazure_by_key(t, &w).unwrap())
                        .cloned()
                        .collect();
                    assert_eq!(got, want, "shape {shape}, w {w}");
                    let y = key_of_permutation(&shape, &w).unwrap();
                    for t in &got {
                        for c in shape.cells() {
                            let v = t.at(c.col, c.row);
                            assert!(c.row as u32 <= v && v <= y.at(c.col, c.row));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn monotone_in_the_key() {
        let perms = Permutation::all(3);
        for shape in Partition::all_up_to(3, 6) {
            let sets: Vec<(Tableau, Vec<Tableau>)> = perms
                .iter()
                .map(|w| {
                    (
                        key_of_permutation(&shape, w).unwrap(),
                        enumerate_demazure(&shape, w).unwrap(),
                    )
                })
                .collect();
            for (ya, da) in &sets {
                for (yb, db) in &sets {
                    if ya.entrywise_leq(yb).unwrap() {
                        assert!(da.iter().all(|t| db.contains(t)));
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        let t = cols(3, &[&[1, 2], &[3]]);
        assert!(matches!(
            is_demazure(&t, &Permutation::identity(4)),
            Err(Error::AlphabetMismatch { .. })
        ));
        let bad = cols(3, &[&[2, 3], &[1]]);
        assert!(matches!(
            is_demazure(&bad, &Permutation::identity(3)),
            Err(Error::NotSemistandard(_))
        ));
    }
}
