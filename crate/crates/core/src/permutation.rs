//! Permutations in one-rowed form and the keys they determine.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shape::Partition;
use crate::tableau::Tableau;

/// A permutation of `[n]` in one-rowed form `(x_1, ..., x_n)`, where `x_i`
/// is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation {
    one_rowed: Vec<u32>,
}

impl Permutation {
    pub fn new(one_rowed: Vec<u32>) -> Result<Self> {
        let n = one_rowed.len();
        let mut seen = vec![false; n];
        for &x in &one_rowed {
            if x == 0 || x as usize > n || seen[x as usize - 1] {
                return Err(Error::InvalidPermutation {
                    one_rowed,
                    reason: format!("not a bijection on [1, {n}]"),
                });
            }
            seen[x as usize - 1] = true;
        }
        Ok(Permutation { one_rowed })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            one_rowed: (1..=n as u32).collect(),
        }
    }

    /// The longest element `w_0 = (n, n-1, ..., 1)`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            one_rowed: (1..=n as u32).rev().collect(),
        }
    }

    /// All of `S_n` in lexicographic order of one-rowed forms.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, cur: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation {
                    one_rowed: cur.clone(),
                });
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v as u32 + 1);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }

    /// Builds the permutation `s_{i_l} ... s_{i_1}` from a word listed in
    /// application order `[i_1, ..., i_l]`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut xs: Vec<u32> = (1..=n as u32).collect();
        for &i in word {
            if i == 0 || i >= n {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    range: format!("[1, {}]", n.saturating_sub(1)),
                });
            }
            // s_i acts on values, exchanging i and i+1.
            for x in xs.iter_mut() {
                if *x == i as u32 {
                    *x = i as u32 + 1;
                } else if *x == i as u32 + 1 {
                    *x = i as u32;
                }
            }
        }
        Ok(Permutation { one_rowed: xs })
    }

    pub fn one_rowed(&self) -> &[u32] {
        &self.one_rowed
    }

    pub fn n(&self) -> usize {
        self.one_rowed.len()
    }

    /// `x_i` for 1-based `i`.
    pub fn x(&self, i: usize) -> u32 {
        self.one_rowed[i - 1]
    }

    pub fn inversions(&self) -> usize {
        let xs = &self.one_rowed;
        (0..xs.len())
            .map(|a| (a + 1..xs.len()).filter(|&b| xs[a] > xs[b]).count())
            .sum()
    }

    /// A reduced word for `w = s_{i_l} ... s_{i_1}`, returned in application
    /// order `[i_1, ..., i_l]`.
    ///
    /// Repeatedly strips the smallest descent from the right, so the result is
    /// deterministic.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut xs = self.one_rowed.clone();
        let mut word = Vec::with_capacity(self.inversions());
        while let Some(p) = xs.windows(2).position(|w| w[0] > w[1]) {
            word.push(p + 1);
            xs.swap(p, p + 1);
        }
        word
    }

    /// A pattern `a < b < c` with `x_b < x_c < x_a`, if one exists.
    ///
    /// `b` is minimal, then `c` is minimal for that `b`, then `a` is chosen
    /// so that `x_a` is as small as possible.
    pub fn find_312(&self) -> Option<(usize, usize, usize)> {
        let xs = &self.one_rowed;
        let n = xs.len();
        for b in 1..n {
            for c in b + 1..n {
                if xs[b] < xs[c] {
                    if let Some(a) = (0..b).filter(|&a| xs[c] < xs[a]).min_by_key(|&a| xs[a]) {
                        return Some((a + 1, b + 1, c + 1));
                    }
                }
            }
        }
        None
    }

    pub fn is_312_avoiding(&self) -> bool {
        self.find_312().is_none()
    }

    /// Swaps the values at 1-based positions `p` and `q`.
    pub fn swap_positions(&self, p: usize, q: usize) -> Permutation {
        let mut one_rowed = self.one_rowed.clone();
        one_rowed.swap(p - 1, q - 1);
        Permutation { one_rowed }
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Self {
        p.one_rowed
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.one_rowed.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// `Y_λ(w)`: the key whose columns of length `k` hold `x_1, ..., x_k` sorted.
pub fn key_of_permutation(shape: &Partition, w: &Permutation) -> Result<Tableau> {
    if shape.n() != w.n() {
        return Err(Error::AlphabetMismatch {
            expected: shape.n(),
            found: w.n(),
        });
    }
    let columns = shape
        .column_lengths()
        .iter()
        .map(|&k| {
            let mut col = w.one_rowed[..k].to_vec();
            col.sort_unstable();
            col
        })
        .collect();
    Tableau::new(shape.clone(), columns)
}

/// The data attached to a composition `θ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionKey {
    /// `λ_θ`, the decreasing rearrangement of `θ`.
    pub shape: Partition,
    /// `w_θ`, the shortest permutation with `λ_θ = w_θ θ`.
    pub perm: Permutation,
    /// The key of `θ`: value `j` sits in its first `θ_j` columns.
    pub key: Tableau,
}

/// Sorts `θ` and builds its key directly from the column-membership rule.
///
/// `w_θ` is taken from a stable descending sort of positions, so
/// `x_i` is the position in `θ` of the `i`-th largest part, ties broken by
/// position. That choice has the fewest inversions.
pub fn key_of_composition(theta: &[u32]) -> Result<CompositionKey> {
    let n = theta.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| theta[b].cmp(&theta[a]));
    let parts: Vec<u32> = order.iter().map(|&p| theta[p]).collect();
    let shape = Partition::new(parts)?;
    let perm = Permutation::new(order.iter().map(|&p| p as u32 + 1).collect())?;
    let columns = (1..=shape.num_columns() as u32)
        .map(|c| {
            (1..=n as u32)
                .filter(|&j| theta[j as usize - 1] >= c)
                .collect()
        })
        .collect();
    let key = Tableau::new(shape.clone(), columns)?;
    Ok(CompositionKey { shape, perm, key })
}
