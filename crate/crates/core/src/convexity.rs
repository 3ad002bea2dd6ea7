//! Convexity of Demazure tableau sets as lattice point sets.
//!
//! Tableaux are embedded in `Z^N` by their column-major reading. A finite
//! set of lattice points is treated as convex when it contains every
//! integral point on the segment between any two of its members.

use std::collections::HashSet;

use serde::Serialize;

use crate::demazure::{enumerate_demazure, is_demazure, is_demazure_by_key};
use crate::enumerate::enumerate_ssyt;
use crate::error::{Error, Result};
use crate::jdt::right_key_jdt;
use crate::permutation::{key_of_permutation, Permutation};
use crate::shape::{Cell, Partition};
use crate::tableau::Tableau;

/// The partial staircase `(d, ..., d, d-1, ..., 2, 1)` with `n` parts.
pub fn staircase(d: usize, n: usize) -> Result<Partition> {
    if d == 0 || d > n {
        return Err(Error::IndexOutOfRange {
            index: d,
            range: format!("[1, {n}]"),
        });
    }
    Partition::new((1..=n).map(|i| d.min(n + 1 - i) as u32).collect())
}

/// Whether some column `j` of the key has a gap at or below the entry that
/// column `j` has and column `j + 1` lacks. When several entries are
/// dropped, the topmost one is used.
pub fn has_312_containing_gap(key: &Tableau) -> Result<bool> {
    if !key.is_key() || !key.is_semistandard() {
        return Err(Error::NotKey);
    }
    for j in 1..key.num_columns() {
        let col = key.column(j);
        let next = key.column(j + 1);
        let Some(r) = col.iter().position(|e| !next.contains(e)) else {
            continue;
        };
        if col[r..].windows(2).any(|w| w[1] - w[0] > 1) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Points of `Z^N` with constant-time membership.
#[derive(Debug, Clone)]
pub struct LatticePointSet {
    dim: usize,
    points: Vec<Vec<i64>>,
    index: HashSet<Vec<i64>>,
}

impl LatticePointSet {
    pub fn new(dim: usize, points: impl IntoIterator<Item = Vec<i64>>) -> Result<Self> {
        let mut set = LatticePointSet {
            dim,
            points: Vec::new(),
            index: HashSet::new(),
        };
        for p in points {
            if p.len() != dim {
                return Err(Error::AlphabetMismatch {
                    expected: dim,
                    found: p.len(),
                });
            }
            if set.index.insert(p.clone()) {
                set.points.push(p);
            }
        }
        Ok(set)
    }

    /// Embeds tableaux of a common shape.
    pub fn from_tableaux(shape: &Partition, tableaux: &[Tableau]) -> Result<Self> {
        LatticePointSet::new(shape.size(), tableaux.iter().map(embed))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        self.index.contains(p)
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }
}

pub fn embed(t: &Tableau) -> Vec<i64> {
    t.flatten().into_iter().map(i64::from).collect()
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Two members of a set and an integral point between them that is missing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MissingPoint {
    pub p: Vec<i64>,
    pub q: Vec<i64>,
    pub missing: Vec<i64>,
}

/// Segment-closure test; on failure returns the first violation found.
pub fn is_convex_lattice_set(s: &LatticePointSet) -> (bool, Option<MissingPoint>) {
    let pts = s.points();
    for (x, p) in pts.iter().enumerate() {
        for q in &pts[x + 1..] {
            let diff: Vec<i64> = q.iter().zip(p).map(|(b, a)| b - a).collect();
            let g = diff.iter().fold(0, |g, d| gcd(g, d.unsigned_abs()));
            for t in 1..g as i64 {
                let point: Vec<i64> = p
                    .iter()
                    .zip(&diff)
                    .map(|(a, d)| a + t * d / g as i64)
                    .collect();
                if !s.contains(&point) {
                    return (
                        false,
                        Some(MissingPoint {
                            p: p.clone(),
                            q: q.clone(),
                            missing: point,
                        }),
                    );
                }
            }
        }
    }
    (true, None)
}

/// Whether the Demazure tableaux are exactly the tableaux below the key.
pub fn demazure_equals_order_ideal(shape: &Partition, w: &Permutation) -> Result<bool> {
    let y = key_of_permutation(shape, w)?;
    let below: Vec<Tableau> = enumerate_ssyt(shape)
        .into_iter()
        .filter(|t| t.entrywise_leq(&y).expect("same shape"))
        .collect();
    Ok(enumerate_demazure(shape, w)? == below)
}

/// A system `A x <= b` over the column-major coordinates of a tableau.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InequalitySystem {
    pub dim: usize,
    pub rows: Vec<Inequality>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Inequality {
    pub coeffs: Vec<i64>,
    pub bound: i64,
}

impl InequalitySystem {
    pub fn satisfied_by(&self, x: &[i64]) -> bool {
        self.rows.iter().all(|row| {
            let lhs: i64 = row.coeffs.iter().zip(x).map(|(a, v)| a * v).sum();
            lhs <= row.bound
        })
    }
}

/// Semistandard conditions together with `T <= Y_λ(w)`, as linear
/// inequalities.
pub fn order_ideal_inequalities(shape: &Partition, w: &Permutation) -> Result<InequalitySystem> {
    let y = key_of_permutation(shape, w)?;
    let cells: Vec<Cell> = shape.cells().collect();
    let dim = cells.len();
    let coord = |c: Cell| cells.iter().position(|&d| d == c).expect("cell in shape");
    let mut rows = Vec::new();
    let mut push = |terms: &[(Cell, i64)], bound: i64| {
        let mut coeffs = vec![0; dim];
        for &(c, a) in terms {
            coeffs[coord(c)] += a;
        }
        rows.push(Inequality { coeffs, bound });
    };
    for &c in &cells {
        let (l, k) = (c.col, c.row);
        // T(l-1,k) <= T(l,k), with T(0,k) = k
        if l == 1 {
            push(&[(c, -1)], -(k as i64));
        } else {
            push(&[(Cell::new(l - 1, k), 1), (c, -1)], 0);
        }
        // T(l,k) <= T(l,k+1) - 1, with T(l, ζ_l + 1) = n + 1
        if shape.contains(Cell::new(l, k + 1)) {
            push(&[(c, 1), (Cell::new(l, k + 1), -1)], -1);
        } else {
            push(&[(c, 1)], shape.n() as i64);
        }
        push(&[(c, 1)], i64::from(y.at(l, k)));
    }
    Ok(InequalitySystem { dim, rows })
}

/// A reduced fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Ratio {
    pub num: i64,
    pub den: i64,
}

impl Ratio {
    fn new(num: i64, den: i64) -> Ratio {
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()) as i64;
        Ratio {
            num: num / g,
            den: den / g,
        }
    }
}

/// Intermediate data of the segment construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentConstruction {
    /// The pattern positions `(a, b, c)` and the auxiliary position `d`.
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub w_prime: Permutation,
    pub v: Permutation,
    /// Cells of `Y_λ(w')` whose entry `x_a` is replaced.
    pub locations: Vec<Cell>,
}

/// Two members of `D_λ(w)` and an integral point between them outside it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SegmentWitness {
    /// `u(0) = Y_λ(v)` and `u(1) = Y_λ(w')`.
    pub endpoints: [Tableau; 2],
    pub r: Ratio,
    pub point: Tableau,
    #[serde(skip)]
    pub construction: SegmentConstruction,
}

fn ensure(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Invariant(format!("segment construction: {what}")))
    }
}

fn replace_at(t: &Tableau, cells: &[Cell], value: u32) -> Tableau {
    let mut cols = t.columns().to_vec();
    for c in cells {
        cols[c.col - 1][c.row - 1] = value;
    }
    Tableau::new(t.shape().clone(), cols).expect("entries stay in range")
}

/// Builds the non-convexity witness for a 312-containing `w` on the full
/// staircase, checking every claimed property along the way.
pub fn counterexample_segment(shape: &Partition, w: &Permutation) -> Result<SegmentWitness> {
    let n = w.n();
    if *shape != staircase(n, n)? {
        return Err(Error::ShapeMismatch(format!(
            "{shape} is not the staircase with {n} parts"
        )));
    }
    let (a, b, c) = w
        .find_312()
        .ok_or_else(|| Error::Avoids312(w.one_rowed().to_vec()))?;
    let (xa, xb, xc) = (w.x(a), w.x(b), w.x(c));
    let d = (1..a)
        .filter(|&e| xb < w.x(e) && w.x(e) < xc)
        .max_by_key(|&e| w.x(e))
        .unwrap_or(b);
    let w_prime = w.swap_positions(b, d);
    let xb_prime = w_prime.x(b);
    let v = w_prime.swap_positions(a, b);

    let y_w = key_of_permutation(shape, w)?;
    let y_wp = key_of_permutation(shape, &w_prime)?;
    let y_v = key_of_permutation(shape, &v)?;

    let j = n + 1 - b;
    let m = b - a;
    let locations: Vec<Cell> = (j + 1..=j + m)
        .filter_map(|col| {
            y_wp.column(col)
                .iter()
                .position(|&e| e == xa)
                .map(|r| Cell::new(col, r + 1))
        })
        .collect();
    ensure(
        locations.len() == m,
        "x_a appears once in each of the m columns",
    )?;

    ensure(y_wp.entrywise_leq(&y_w)?, "Y(w') <= Y(w)")?;
    let skipped_range = (xb_prime..xa).collect::<Vec<u32>>();
    ensure(
        (j + 1..=n).all(|col| y_wp.column(col).iter().all(|e| !skipped_range.contains(e))),
        "columns after j avoid [x_b', x_a - 1]",
    )?;
    let i = y_wp
        .column(j)
        .iter()
        .position(|&e| e == xb_prime)
        .map(|r| r + 1)
        .ok_or_else(|| Error::Invariant("x_b' missing from column j".into()))?;
    ensure(y_wp.at(j, i + 1) == xa, "Y(w'; j, i+1) = x_a")?;
    ensure(y_wp.at(j + 1, i) == xa, "Y(w'; j+1, i) = x_a")?;
    ensure(
        replace_at(&y_wp, &locations, xb_prime) == y_v,
        "Y(v) is Y(w') with x_b' placed at L",
    )?;
    ensure(y_v.entrywise_leq(&y_wp)? && y_v != y_wp, "Y(v) < Y(w')")?;

    let point = replace_at(&y_wp, &locations, xc);
    ensure(point.is_semistandard(), "T(c) is semistandard")?;

    let r = Ratio::new(i64::from(xc - xb_prime), i64::from(xa - xb_prime));
    ensure(0 < r.num && r.num < r.den, "0 < r < 1")?;
    let (lo, hi) = (embed(&y_v), embed(&y_wp));
    let mut u = Vec::with_capacity(lo.len());
    for (p, q) in lo.iter().zip(&hi) {
        let scaled = r.num * (q - p);
        ensure(scaled % r.den == 0, "u(r) is integral")?;
        u.push(p + scaled / r.den);
    }
    ensure(u == embed(&point), "u(r) = T(c)")?;

    ensure(is_demazure(&y_v, w)?, "Y(v) is a Demazure tableau")?;
    ensure(is_demazure(&y_wp, w)?, "Y(w') is a Demazure tableau")?;
    ensure(!is_demazure(&point, w)?, "T(c) fails the entrywise test")?;
    ensure(
        !is_demazure_by_key(&point, w)?,
        "T(c) fails the scanning test",
    )?;
    ensure(
        !right_key_jdt(&point)?.entrywise_leq(&y_w)?,
        "T(c) fails the slide test",
    )?;
    ensure(
        point.at(j + 1, i) == xc && xc < point.at(j, i + 1),
        "path through (j+1, i)",
    )?;

    Ok(SegmentWitness {
        endpoints: [y_v, y_wp],
        r,
        point,
        construction: SegmentConstruction {
            a,
            b,
            c,
            d,
            w_prime,
            v,
            locations,
        },
    })
}

/// One line of a convexity sweep.
#[derive(Debug, Clone, Serialize)]
pub struct ConvexityEntry {
    pub w: Vec<u32>,
    pub avoiding: bool,
    pub convex: bool,
    pub set_size: usize,
    pub witness: Option<SegmentWitness>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(transparent)]
pub struct ConvexityReport {
    pub entries: Vec<ConvexityEntry>,
}

impl ConvexityReport {
    pub fn convex_count(&self) -> usize {
        self.entries.iter().filter(|e| e.convex).count()
    }

    /// Convex exactly when 312-avoiding.
    pub fn biconditional_holds(&self) -> bool {
        self.entries.iter().all(|e| e.convex == e.avoiding)
    }
}

/// Convexity of `D_λ(w)` for every `w`, with `λ = staircase(d, n)`.
/// Witnesses are constructed only for the full staircase.
pub fn convexity_report(d: usize, n: usize) -> Result<ConvexityReport> {
    let shape = staircase(d, n)?;
    let mut entries = Vec::new();
    for w in Permutation::all(n) {
        let set = enumerate_demazure(&shape, &w)?;
        let points = LatticePointSet::from_tableaux(&shape, &set)?;
        let (convex, _) = is_convex_lattice_set(&points);
        let avoiding = w.is_312_avoiding();
        let witness = if !avoiding && d == n {
            Some(counterexample_segment(&shape, &w)?)
        } else {
            None
        };
        if let Some(wit) = &witness {
            ensure(
                wit.endpoints.iter().all(|t| set.contains(t)) && !set.contains(&wit.point),
                "witness agrees with the enumerated set",
            )?;
        }
        entries.push(ConvexityEntry {
            w: w.one_rowed().to_vec(),
            avoiding,
            convex,
            set_size: set.len(),
            witness,
        });
    }
    Ok(ConvexityReport { entries })
}

/// The sweep on the full staircase `(n, n-1, ..., 1)`.
pub fn verify_convexity_theorem(n: usize) -> Result<ConvexityReport> {
    convexity_report(n, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cols(n: usize, c: &[&[u32]]) -> Tableau {
        Tableau::from_columns(n, c.iter().map(|x| x.to_vec()).collect()).unwrap()
    }

    fn perm(xs: &[u32]) -> Permutation {
        Permutation::new(xs.to_vec()).unwrap()
    }

    #[test]
    fn staircases() {
        assert_eq!(staircase(3, 3).unwrap().parts(), &[3, 2, 1]);
        assert_eq!(staircase(1, 3).unwrap().parts(), &[1, 1, 1]);
        assert_eq!(staircase(2, 4).unwrap().parts(), &[2, 2, 2, 1]);
        assert!(staircase(0, 3).is_err());
        assert!(staircase(4, 3).is_err());
    }

    #[test]
    fn gap_examples() {
        let k = cols(3, &[&[1, 2, 3], &[1, 3], &[3]]);
        assert!(has_312_containing_gap(&k).unwrap());
        let k = cols(3, &[&[1, 2, 3], &[1, 3], &[1]]);
        assert!(!has_312_containing_gap(&k).unwrap());
        let id = key_of_permutation(&staircase(3, 3).unwrap(), &Permutation::identity(3)).unwrap();
        assert!(!has_312_containing_gap(&id).unwrap());
        assert_eq!(
            has_312_containing_gap(&cols(3, &[&[1, 2], &[3]])),
            Err(Error::NotKey)
        );
    }

    #[test]
    fn avoiding_keys_have_no_bad_gaps() {
        for n in 1..=5 {
            for d in 1..=n {
                let shape = staircase(d, n).unwrap();
                for w in Permutation::all(n) {
                    let y = key_of_permutation(&shape, &w).unwrap();
                    if w.is_312_avoiding() {
                        assert!(!has_312_containing_gap(&y).unwrap(), "{w} d={d}");
                    }
                    if d == n {
                        // on the full staircase the converse holds as well
                        assert_eq!(has_312_containing_gap(&y).unwrap(), !w.is_312_avoiding());
                    }
                }
            }
        }
    }

    #[test]
    fn lattice_sets() {
        let single = LatticePointSet::new(2, [vec![1, 1]]).unwrap();
        assert!(is_convex_lattice_set(&single).0);
        let ends = LatticePointSet::new(2, [vec![0, 0], vec![2, 4]]).unwrap();
        let (ok, wit) = is_convex_lattice_set(&ends);
        assert!(!ok);
        assert_eq!(wit.unwrap().missing, vec![1, 2]);
        let line = LatticePointSet::new(2, [vec![0, 0], vec![1, 2], vec![2, 4]]).unwrap();
        assert!(is_convex_lattice_set(&line).0);
        assert!(LatticePointSet::new(2, [vec![0]]).is_err());
    }

    #[test]
    fn order_ideal_examples() {
        let st = staircase(3, 3).unwrap();
        assert!(demazure_equals_order_ideal(&st, &perm(&[1, 3, 2])).unwrap());
        assert!(!demazure_equals_order_ideal(&st, &perm(&[3, 1, 2])).unwrap());
        let col = staircase(1, 3).unwrap();
        for w in Permutation::all(3) {
            assert!(demazure_equals_order_ideal(&col, &w).unwrap());
        }
    }

    #[test]
    fn partial_staircases_are_order_ideals_and_convex() {
        for n in 1..=4 {
            for d in 1..=n {
                let shape = staircase(d, n).unwrap();
                let all = enumerate_ssyt(&shape);
                for w in Permutation::all(n)
                    .into_iter()
                    .filter(Permutation::is_312_avoiding)
                {
                    assert!(
                        demazure_equals_order_ideal(&shape, &w).unwrap(),
                        "{w} d={d}"
                    );
                    let set = enumerate_demazure(&shape, &w).unwrap();
                    let pts = LatticePointSet::from_tableaux(&shape, &set).unwrap();
                    assert!(is_convex_lattice_set(&pts).0);
                    let sys = order_ideal_inequalities(&shape, &w).unwrap();
                    for t in &all {
                        assert_eq!(sys.satisfied_by(&embed(t)), set.contains(t));
                    }
                }
            }
        }
    }

    #[test]
    fn inequality_system_rejects_non_tableaux() {
        let shape = staircase(2, 2).unwrap();
        let sys = order_ideal_inequalities(&shape, &Permutation::longest(2)).unwrap();
        assert_eq!(sys.dim, 3);
        assert!(sys.satisfied_by(&[1, 2, 1]));
        assert!(!sys.satisfied_by(&[2, 1, 1]));
        assert!(!sys.satisfied_by(&[1, 2, 0]));
        assert!(!sys.satisfied_by(&[1, 3, 1]));
    }

    #[test]
    fn worked_counterexample() {
        let st = staircase(3, 3).unwrap();
        let wit = counterexample_segment(&st, &perm(&[3, 1, 2])).unwrap();
        let con = &wit.construction;
        assert_eq!((con.a, con.b, con.c, con.d), (1, 2, 3, 2));
        assert_eq!(con.w_prime, perm(&[3, 1, 2]));
        assert_eq!(con.v, perm(&[1, 3, 2]));
        assert_eq!(con.locations, vec![Cell::new(3, 1)]);
        assert_eq!(wit.point, cols(3, &[&[1, 2, 3], &[1, 3], &[2]]));
        assert_eq!(wit.r, Ratio { num: 1, den: 2 });
        assert_eq!(
            counterexample_segment(&st, &perm(&[1, 3, 2])),
            Err(Error::Avoids312(vec![1, 3, 2]))
        );
        assert!(matches!(
            counterexample_segment(&staircase(2, 3).unwrap(), &perm(&[3, 1, 2])),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn witnesses_exist_for_every_312_containing_permutation() {
        for n in 3..=5 {
            let st = staircase(n, n).unwrap();
            for w in Permutation::all(n)
                .into_iter()
                .filter(|w| !w.is_312_avoiding())
            {
                let wit = counterexample_segment(&st, &w).unwrap();
                assert!(wit.point.is_semistandard());
            }
        }
        let wit = counterexample_segment(&staircase(4, 4).unwrap(), &perm(&[2, 4, 1, 3])).unwrap();
        assert_eq!(
            (wit.construction.a, wit.construction.b, wit.construction.c),
            (2, 3, 4)
        );
    }

    #[test]
    fn theorem_sweeps() {
        let r2 = verify_convexity_theorem(2).unwrap();
        assert_eq!(r2.convex_count(), 2);
        let r3 = verify_convexity_theorem(3).unwrap();
        assert_eq!(r3.convex_count(), 5);
        assert!(r3.biconditional_holds());
        let bad: Vec<&ConvexityEntry> = r3.entries.iter().filter(|e| !e.convex).collect();
        assert_eq!(bad.len(), 1);
        assert_eq!(bad[0].w, vec![3, 1, 2]);
        let r4 = verify_convexity_theorem(4).unwrap();
        assert_eq!(r4.convex_count(), 14);
        assert!(r4.biconditional_holds());
        assert!(r4.entries.iter().all(|e| e.avoiding == e.witness.is_none()));
    }

    #[test]
    fn report_json_shape() {
        let r = verify_convexity_theorem(3).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        let bad = v
            .as_array()
            .unwrap()
            .iter()
            .find(|e| e["convex"] == false)
            .unwrap();
        assert_eq!(bad["w"], serde_json::json!([3, 1, 2]));
        assert_eq!(bad["set_size"], 5);
        assert_eq!(bad["witness"]["r"], serde_json::json!({"num": 1, "den": 2}));
        assert_eq!(
            bad["witness"]["point"]["rows"],
            serde_json::json!([[1, 1, 2], [2, 3], [3]])
        );
        assert!(bad["witness"].get("construction").is_none());
    }
}
