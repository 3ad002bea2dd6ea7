#![allow(dead_code)]

use demazure_core::{Partition, Permutation, SparsePoly, Tableau};

pub fn part(p: &[u32]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

pub fn perm(w: &[u32]) -> Permutation {
    Permutation::new(w.to_vec()).unwrap()
}

pub fn rows(n: usize, r: &[&[u32]]) -> Tableau {
    let r: Vec<Vec<u32>> = r.iter().map(|x| x.to_vec()).collect();
    Tableau::from_rows(n, &r).unwrap()
}

/// Entrywise `a <= b` on tableaux of equal shape, computed from the rows.
pub fn leq(a: &Tableau, b: &Tableau) -> bool {
    assert_eq!(a.shape(), b.shape());
    a.rows()
        .iter()
        .zip(b.rows().iter())
        .all(|(x, y)| x.iter().zip(y).all(|(p, q)| p <= q))
}

/// Exact quotient of `num` by `t_i - t_{i+1}`, by long division on the power of `t_i`.
pub fn divide_by_difference(num: &SparsePoly, i: usize) -> SparsePoly {
    let mut rem = num.clone();
    let mut q = SparsePoly::zero(num.nvars());
    while !rem.is_zero() {
        let (lead, c) = rem
            .terms()
            .into_iter()
            .max_by(|a, b| a.0[i - 1].cmp(&b.0[i - 1]).then_with(|| a.0.cmp(b.0)))
            .map(|(e, c)| (e.to_vec(), c))
            .unwrap();
        assert!(lead[i - 1] > 0, "division is not exact");
        let mut qe = lead.clone();
        qe[i - 1] -= 1;
        let mut below = qe.clone();
        below[i] += 1;
        q.add_term(qe, c);
        rem.add_term(lead, -c);
        rem.add_term(below, c);
    }
    q
}

/// `(t_i f - t_{i+1} s_i f) / (t_i - t_{i+1})`.
pub fn pi_by_division(p: &SparsePoly, i: usize) -> SparsePoly {
    let tp = p.mul_var(i);
    divide_by_difference(&(&tp - &tp.swap_vars(i)), i)
}

/// Every reduced word of `w`, in application order.
pub fn all_reduced_words(w: &Permutation) -> Vec<Vec<usize>> {
    let xs = w.one_rowed();
    let descents: Vec<usize> = (1..xs.len()).filter(|&p| xs[p - 1] > xs[p]).collect();
    if descents.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in descents {
        for word in all_reduced_words(&w.swap_positions(p, p + 1)) {
            let mut full = vec![p];
            full.extend(word);
            out.push(full);
        }
    }
    out
}

/// `Y_λ(w)` from its definition: column `j` holds the sorted first `ζ_j` values of `w`.
pub fn key_by_definition(shape: &Partition, w: &Permutation) -> Tableau {
    let cols = shape
        .column_lengths()
        .iter()
        .map(|&z| {
            let mut c: Vec<u32> = w.one_rowed()[..z].to_vec();
            c.sort_unstable();
            c
        })
        .collect();
    Tableau::new(shape.clone(), cols).unwrap()
}

/// Triple-loop 312 test: positions `a < b < c` with `x_b < x_c < x_a`.
pub fn contains_312_brute(w: &Permutation) -> bool {
    let x = w.one_rowed();
    let n = x.len();
    (0..n).any(|a| (a + 1..n).any(|b| (b + 1..n).any(|c| x[b] < x[c] && x[c] < x[a])))
}
