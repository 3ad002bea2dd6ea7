//! Jeu de taquin on skew tableaux, and the right key obtained from
//! successive length swaps. This is the slow reference path used to check
//! the scanning method.
//!
//! A skew tableau is stored column by column: column `c` is empty in rows
//! `1..=indent[c]` and filled in rows `indent[c]+1..=indent[c]+len[c]`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::shape::Cell;
use crate::tableau::Tableau;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewTableau {
    n: usize,
    indent: Vec<usize>,
    columns: Vec<Vec<u32>>,
}

/// Debug dump form.
#[derive(Debug, Clone, Serialize)]
pub struct SkewJson {
    pub outer: Vec<usize>,
    pub indent: Vec<usize>,
    pub columns: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Slot {
    Inner,
    Filled(u32),
    Hole,
    Outside,
}

impl SkewTableau {
    pub fn new(n: usize, indent: Vec<usize>, columns: Vec<Vec<u32>>) -> Result<Self> {
        if indent.len() != columns.len() {
            return Err(Error::MalformedSkew(format!(
                "{} indents for {} columns",
                indent.len(),
                columns.len()
            )));
        }
        let u = SkewTableau { n, indent, columns };
        u.validate()?;
        Ok(u)
    }

    pub fn from_tableau(t: &Tableau) -> Self {
        SkewTableau {
            n: t.n(),
            indent: vec![0; t.num_columns()],
            columns: t.columns().to_vec(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    pub fn indent(&self) -> &[usize] {
        &self.indent
    }

    pub fn columns(&self) -> &[Vec<u32>] {
        &self.columns
    }

    /// Entries of column `col`, top to bottom.
    pub fn column(&self, col: usize) -> &[u32] {
        &self.columns[col - 1]
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.columns.iter().map(Vec::len).collect()
    }

    /// Row of the last cell of column `col` in the outer shape.
    pub fn outer(&self, col: usize) -> usize {
        self.indent[col - 1] + self.columns[col - 1].len()
    }

    pub fn size(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// Filled entry at `(col, row)`, if any.
    pub fn get(&self, col: usize, row: usize) -> Option<u32> {
        if col == 0 || col > self.columns.len() {
            return None;
        }
        let top = self.indent[col - 1];
        if row > top && row <= self.outer(col) {
            Some(self.columns[col - 1][row - top - 1])
        } else {
            None
        }
    }

    pub fn is_straight(&self) -> bool {
        self.indent.iter().all(|&i| i == 0)
    }

    pub fn to_json(&self) -> SkewJson {
        SkewJson {
            outer: (1..=self.num_columns()).map(|c| self.outer(c)).collect(),
            indent: self.indent.clone(),
            columns: self.columns.clone(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let k = self.num_columns();
        for c in 1..k {
            if self.indent[c] > self.indent[c - 1] || self.outer(c + 1) > self.outer(c) {
                return Err(Error::MalformedSkew(format!(
                    "columns {c} and {} do not bound a skew diagram",
                    c + 1
                )));
            }
        }
        for (c, col) in self.columns.iter().enumerate() {
            if col.iter().any(|&e| e == 0 || e as usize > self.n) {
                return Err(Error::MalformedSkew(format!(
                    "column {} has an entry outside [1, {}]",
                    c + 1,
                    self.n
                )));
            }
            if col.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::MalformedSkew(format!(
                    "column {} is not strictly increasing",
                    c + 1
                )));
            }
        }
        for c in 1..k {
            let lo = self.indent[c].max(self.indent[c - 1]) + 1;
            let hi = self.outer(c).min(self.outer(c + 1));
            for r in lo..=hi {
                if self.get(c, r) > self.get(c + 1, r) {
                    return Err(Error::MalformedSkew(format!(
                        "row {r} decreases from column {c} to {}",
                        c + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// Inside corners: removable cells of the inner shape.
    pub fn inside_corners(&self) -> Vec<Cell> {
        (1..=self.num_columns())
            .filter(|&c| {
                let i = self.indent[c - 1];
                i > 0 && (c == self.num_columns() || self.indent[c] < i)
            })
            .map(|c| Cell::new(c, self.indent[c - 1]))
            .collect()
    }

    fn grid(&self) -> Vec<Vec<Slot>> {
        let height = (1..=self.num_columns())
            .map(|c| self.outer(c))
            .max()
            .unwrap_or(0)
            + 2;
        (1..=self.num_columns())
            .map(|c| {
                (1..=height)
                    .map(|r| {
                        if r <= self.indent[c - 1] {
                            Slot::Inner
                        } else if let Some(v) = self.get(c, r) {
                            Slot::Filled(v)
                        } else {
                            Slot::Outside
                        }
                    })
                    .collect()
            })
            .collect()
    }

    fn from_grid(n: usize, grid: &[Vec<Slot>]) -> Result<Self> {
        let mut indent = Vec::with_capacity(grid.len());
        let mut columns = Vec::with_capacity(grid.len());
        for (c, col) in grid.iter().enumerate() {
            let top = col.iter().take_while(|s| **s == Slot::Inner).count();
            let entries: Vec<u32> = col[top..]
                .iter()
                .map_while(|s| match s {
                    Slot::Filled(v) => Some(*v),
                    _ => None,
                })
                .collect();
            if col[top + entries.len()..]
                .iter()
                .any(|s| *s != Slot::Outside)
            {
                return Err(Error::Invariant(format!(
                    "column {} is not contiguous after a slide",
                    c + 1
                )));
            }
            indent.push(top);
            columns.push(entries);
        }
        SkewTableau::new(n, indent, columns)
            .map_err(|e| Error::Invariant(format!("slide broke the skew tableau: {e}")))
    }
}

fn slot(grid: &[Vec<Slot>], col: usize, row: usize) -> Slot {
    if col == 0 || row == 0 {
        return Slot::Inner;
    }
    grid.get(col - 1)
        .and_then(|c| c.get(row - 1))
        .copied()
        .unwrap_or(Slot::Outside)
}

fn filled(grid: &[Vec<Slot>], col: usize, row: usize) -> Option<u32> {
    match slot(grid, col, row) {
        Slot::Filled(v) => Some(v),
        _ => None,
    }
}

/// JDT slide into the inside corner `corner`.
pub fn jdt_slide(u: &SkewTableau, corner: Cell) -> Result<SkewTableau> {
    jdt_slide_vacating(u, corner).map(|(v, _)| v)
}

/// JDT slide that also reports the outer cell vacated at the end.
pub fn jdt_slide_vacating(u: &SkewTableau, corner: Cell) -> Result<(SkewTableau, Cell)> {
    let not_corner = Error::NotACorner {
        kind: "inside",
        col: corner.col,
        row: corner.row,
    };
    if !u.inside_corners().contains(&corner) {
        return Err(not_corner);
    }
    let mut g = u.grid();
    let (mut c, mut r) = (corner.col, corner.row);
    if filled(&g, c, r + 1).is_none() && filled(&g, c + 1, r).is_none() {
        return Err(not_corner);
    }
    g[c - 1][r - 1] = Slot::Hole;
    loop {
        let below = filled(&g, c, r + 1);
        let right = filled(&g, c + 1, r);
        let (nc, nr) = match (below, right) {
            (None, None) => break,
            (Some(_), None) => (c, r + 1),
            (None, Some(_)) => (c + 1, r),
            (Some(b), Some(x)) if b <= x => (c, r + 1),
            _ => (c + 1, r),
        };
        g[c - 1][r - 1] = g[nc - 1][nr - 1];
        g[nc - 1][nr - 1] = Slot::Hole;
        (c, r) = (nc, nr);
    }
    g[c - 1][r - 1] = Slot::Outside;
    Ok((SkewTableau::from_grid(u.n, &g)?, Cell::new(c, r)))
}

/// Whether `(col, row)` can be added to the outer shape.
fn is_outside_corner(u: &SkewTableau, corner: Cell) -> bool {
    let c = corner.col;
    c >= 1
        && c <= u.num_columns()
        && corner.row == u.outer(c) + 1
        && (c == 1 || u.outer(c - 1) >= corner.row)
}

/// Reverse JDT slide out of the outside corner `corner`.
pub fn rjdt_slide(u: &SkewTableau, corner: Cell) -> Result<SkewTableau> {
    rjdt_slide_vacating(u, corner).map(|(v, _)| v)
}

/// Reverse slide that also reports the inner cell vacated at the end.
pub fn rjdt_slide_vacating(u: &SkewTableau, corner: Cell) -> Result<(SkewTableau, Cell)> {
    let not_corner = Error::NotACorner {
        kind: "outside",
        col: corner.col,
        row: corner.row,
    };
    if !is_outside_corner(u, corner) {
        return Err(not_corner);
    }
    let mut g = u.grid();
    let (mut c, mut r) = (corner.col, corner.row);
    if filled(&g, c, r - 1).is_none() && filled(&g, c - 1, r).is_none() {
        return Err(not_corner);
    }
    g[c - 1][r - 1] = Slot::Hole;
    loop {
        let above = filled(&g, c, r - 1);
        let left = filled(&g, c - 1, r);
        let (nc, nr) = match (above, left) {
            (None, None) => break,
            (Some(_), None) => (c, r - 1),
            (None, Some(_)) => (c - 1, r),
            (Some(a), Some(l)) if a >= l => (c, r - 1),
            _ => (c - 1, r),
        };
        g[c - 1][r - 1] = g[nc - 1][nr - 1];
        g[nc - 1][nr - 1] = Slot::Hole;
        (c, r) = (nc, nr);
    }
    g[c - 1][r - 1] = Slot::Inner;
    Ok((SkewTableau::from_grid(u.n, &g)?, Cell::new(c, r)))
}

/// Removes an inner corner that has no filled neighbour. Such a corner
/// bounds an empty column and slides would move nothing.
fn drop_empty_corner(u: &SkewTableau, corner: Cell) -> Option<SkewTableau> {
    let c = corner.col;
    if u.columns[c - 1].is_empty() && u.get(c + 1, corner.row).is_none() {
        let mut v = u.clone();
        v.indent[c - 1] -= 1;
        Some(v)
    } else {
        None
    }
}

/// Rectifies `u`, choosing at each step the inside corner picked by `choose`
/// from the current list of corners.
pub fn rectify_with<F>(u: &SkewTableau, mut choose: F) -> Result<Tableau>
where
    F: FnMut(&[Cell]) -> usize,
{
    let mut cur = u.clone();
    loop {
        let corners = cur.inside_corners();
        if corners.is_empty() {
            break;
        }
        let corner = corners[choose(&corners)];
        cur = match drop_empty_corner(&cur, corner) {
            Some(v) => v,
            None => jdt_slide(&cur, corner)?,
        };
    }
    let cols: Vec<Vec<u32>> = cur.columns.into_iter().filter(|c| !c.is_empty()).collect();
    let t = Tableau::from_columns(cur.n, cols)
        .map_err(|e| Error::Invariant(format!("rectification is not straight: {e}")))?;
    if !t.is_semistandard() {
        return Err(Error::Invariant("rectification is not semistandard".into()));
    }
    Ok(t)
}

/// Rectification of `u`, sliding into the leftmost inside corner each time.
pub fn rectify(u: &SkewTableau) -> Result<Tableau> {
    rectify_with(u, |_| 0)
}

pub fn is_frank(u: &SkewTableau) -> Result<bool> {
    let mut mine: Vec<usize> = u.lengths().into_iter().filter(|&l| l > 0).collect();
    mine.sort_unstable();
    let t = rectify(u)?;
    let mut theirs = t.shape().column_lengths().to_vec();
    theirs.sort_unstable();
    Ok(mine == theirs)
}

/// Moves columns `1..=upto` down `d` rows using `d` reverse slides beneath
/// each column in turn.
fn shift_down(u: &SkewTableau, upto: usize, d: usize) -> Result<SkewTableau> {
    let mut cur = u.clone();
    for c in 1..=upto {
        if cur.columns[c - 1].is_empty() {
            cur.indent[c - 1] += d;
            continue;
        }
        for _ in 0..d {
            cur = rjdt_slide(&cur, Cell::new(c, cur.outer(c) + 1))?;
        }
    }
    let mut literal = u.clone();
    for i in &mut literal.indent[..upto] {
        *i += d;
    }
    if cur != literal {
        return Err(Error::Invariant(format!(
            "reverse slides did not shift columns 1..={upto} down {d} rows"
        )));
    }
    Ok(cur)
}

/// Number of rows in which columns `a` and `a + 1` both have cells.
fn attached(u: &SkewTableau, a: usize) -> usize {
    let top = u.indent[a - 1].max(u.indent[a]);
    let bottom = u.outer(a).min(u.outer(a + 1));
    bottom.saturating_sub(top)
}

/// The `j`-th length swap: exchanges the lengths of columns `j` and `j + 1`.
pub fn length_swap(u: &SkewTableau, j: usize) -> Result<SkewTableau> {
    let k = u.num_columns();
    if j == 0 || j >= k {
        return Err(Error::IndexOutOfRange {
            index: j,
            range: format!("[1, {}]", k.saturating_sub(1)),
        });
    }
    let mut cur = u.clone();
    if j >= 2 {
        let d = attached(u, j - 1);
        if d > 0 {
            cur = shift_down(&cur, j - 1, d)?;
        }
    }
    let (lj, lj1) = (u.columns[j - 1].len(), u.columns[j].len());
    if lj < lj1 {
        return Err(Error::Invariant(format!(
            "length swap {j} needs column {j} at least as long as column {}",
            j + 1
        )));
    }
    for _ in 0..lj - lj1 {
        cur = rjdt_slide(&cur, Cell::new(j + 1, cur.outer(j + 1) + 1))?;
    }
    let mut expected = u.lengths();
    expected.swap(j - 1, j);
    if cur.lengths() != expected {
        return Err(Error::Invariant(format!(
            "length swap {j} produced lengths {:?}, expected {expected:?}",
            cur.lengths()
        )));
    }
    Ok(cur)
}

/// `R_i(T)`: the rightmost column after swaps `i, i+1, ..., k-1`.
pub fn right_key_column(t: &Tableau, i: usize) -> Result<Vec<u32>> {
    let k = t.num_columns();
    if i == 0 || i > k {
        return Err(Error::IndexOutOfRange {
            index: i,
            range: format!("[1, {k}]"),
        });
    }
    let mut u = SkewTableau::from_tableau(t);
    for j in i..k {
        u = length_swap(&u, j)?;
    }
    Ok(u.columns[k - 1].clone())
}

/// Right key of `T` assembled column by column from length swaps.
pub fn right_key_jdt(t: &Tableau) -> Result<Tableau> {
    let cols = (1..=t.num_columns())
        .map(|i| right_key_column(t, i))
        .collect::<Result<Vec<_>>>()?;
    Tableau::new(t.shape().clone(), cols)
}

/// A skew diagram with the given column lengths, packed so that the rightmost
/// column starts in row 1 and each column ends no higher than the next.
fn packed_indents(lengths: &[usize]) -> Vec<usize> {
    let k = lengths.len();
    let mut tops = vec![1usize; k];
    for c in (0..k.saturating_sub(1)).rev() {
        let bottom_next = tops[c + 1] + lengths[c + 1] - 1;
        tops[c] = tops[c + 1].max((bottom_next + 1).saturating_sub(lengths[c]));
    }
    tops.into_iter().map(|t| t - 1).collect()
}

/// The unique skew tableau with the given column lengths that rectifies to
/// `t`, found by exhaustive search.
pub fn frank_filling(t: &Tableau, lengths: &[usize]) -> Result<SkewTableau> {
    let mut want = t.shape().column_lengths().to_vec();
    let mut got = lengths.to_vec();
    want.sort_unstable();
    got.sort_unstable();
    if want != got {
        return Err(Error::ShapeMismatch(format!(
            "{lengths:?} is not a rearrangement of the column lengths {:?}",
            t.shape().column_lengths()
        )));
    }
    let n = t.n();
    let indent = packed_indents(lengths);
    let mut search = FrankSearch {
        n,
        target: t,
        lengths,
        indent: &indent,
        remaining: t.weight(),
        columns: Vec::new(),
        found: Vec::new(),
    };
    search.run()?;
    match search.found.len() {
        1 => Ok(search.found.pop().unwrap()),
        m => Err(Error::Invariant(format!(
            "{m} skew fillings with lengths {lengths:?} rectify to the given tableau"
        ))),
    }
}

struct FrankSearch<'a> {
    n: usize,
    target: &'a Tableau,
    lengths: &'a [usize],
    indent: &'a [usize],
    remaining: Vec<u32>,
    columns: Vec<Vec<u32>>,
    found: Vec<SkewTableau>,
}

impl FrankSearch<'_> {
    fn run(&mut self) -> Result<()> {
        let c = self.columns.len();
        if c == self.lengths.len() {
            let u = SkewTableau::new(self.n, self.indent.to_vec(), self.columns.clone())?;
            if rectify(&u)? == *self.target {
                self.found.push(u);
                if self.found.len() > 1 {
                    return Err(Error::Invariant("frank filling is not unique".into()));
                }
            }
            return Ok(());
        }
        let mut col = Vec::with_capacity(self.lengths[c]);
        self.choose(c, &mut col, 1)
    }

    fn choose(&mut self, c: usize, col: &mut Vec<u32>, from: u32) -> Result<()> {
        if col.len() == self.lengths[c] {
            self.columns.push(col.clone());
            let r = self.run();
            self.columns.pop();
            return r;
        }
        let row = self.indent[c] + col.len() + 1;
        for v in from..=self.n as u32 {
            if self.remaining[v as usize - 1] == 0 {
                continue;
            }
            if c > 0 {
                let left = &self.columns[c - 1];
                let top = self.indent[c - 1];
                if row > top && row <= top + left.len() && left[row - top - 1] > v {
                    continue;
                }
            }
            self.remaining[v as usize - 1] -= 1;
            col.push(v);
            let r = self.choose(c, col, v + 1);
            col.pop();
            self.remaining[v as usize - 1] += 1;
            r?;
        }
        Ok(())
    }
}
