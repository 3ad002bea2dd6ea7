//! Sparse integer polynomials in `t_1, ..., t_n`, Demazure operators and
//! the characters built from them.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::demazure::enumerate_demazure;
use crate::enumerate::enumerate_ssyt;
use crate::error::{Error, Result};
use crate::permutation::{key_of_composition, Permutation};
use crate::shape::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

/// One term of the JSON form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coeff: i64,
}

fn checked(v: Option<i64>) -> i64 {
    v.expect("polynomial coefficient overflow")
}

/// Graded lexicographic order, largest first.
fn grlex_desc(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    db.cmp(&da).then_with(|| b.cmp(a))
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        SparsePoly::monomial(vec![0; nvars])
    }

    pub fn monomial(exp: Vec<u32>) -> Self {
        let mut p = SparsePoly::zero(exp.len());
        p.terms.insert(exp, 1);
        p
    }

    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, i64)>,
    ) -> Result<Self> {
        let mut p = SparsePoly::zero(nvars);
        for (exp, c) in terms {
            if exp.len() != nvars {
                return Err(Error::AlphabetMismatch {
                    expected: nvars,
                    found: exp.len(),
                });
            }
            p.add_term(exp, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: &[u32]) -> i64 {
        self.terms.get(exp).copied().unwrap_or(0)
    }

    /// Terms in graded lexicographic order, largest first.
    pub fn terms(&self) -> Vec<(&[u32], i64)> {
        let mut v: Vec<(&[u32], i64)> =
            self.terms.iter().map(|(e, &c)| (e.as_slice(), c)).collect();
        v.sort_by(|a, b| grlex_desc(a.0, b.0));
        v
    }

    pub fn add_term(&mut self, exp: Vec<u32>, c: i64) {
        assert_eq!(exp.len(), self.nvars, "exponent vector length");
        if c == 0 {
            return;
        }
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = checked(o.get().checked_add(c));
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: i64) -> SparsePoly {
        let mut p = SparsePoly::zero(self.nvars);
        for (e, &v) in &self.terms {
            p.add_term(e.clone(), checked(v.checked_mul(c)));
        }
        p
    }

    /// Whether every monomial has total degree `d`.
    pub fn is_homogeneous_of_degree(&self, d: u64) -> bool {
        self.terms
            .keys()
            .all(|e| e.iter().map(|&x| x as u64).sum::<u64>() == d)
    }

    pub fn all_coefficients_positive(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    /// `s_i p`: exchanges `t_i` and `t_{i+1}`.
    pub fn swap_vars(&self, i: usize) -> SparsePoly {
        let mut p = SparsePoly::zero(self.nvars);
        for (e, &c) in &self.terms {
            let mut f = e.clone();
            f.swap(i - 1, i);
            p.add_term(f, c);
        }
        p
    }

    /// `t_i p`.
    pub fn mul_var(&self, i: usize) -> SparsePoly {
        let mut p = SparsePoly::zero(self.nvars);
        for (e, &c) in &self.terms {
            let mut f = e.clone();
            f[i - 1] += 1;
            p.add_term(f, c);
        }
        p
    }

    pub fn to_json(&self) -> Vec<TermJson> {
        self.terms()
            .into_iter()
            .map(|(e, c)| TermJson {
                exp: e.to_vec(),
                coeff: c,
            })
            .collect()
    }

    pub fn from_json(nvars: usize, terms: &[TermJson]) -> Result<Self> {
        SparsePoly::from_terms(nvars, terms.iter().map(|t| (t.exp.clone(), t.coeff)))
    }

    fn combine(&self, other: &SparsePoly, sign: i64) -> SparsePoly {
        assert_eq!(
            self.nvars, other.nvars,
            "polynomials over different alphabets"
        );
        let mut p = self.clone();
        for (e, &c) in &other.terms {
            p.add_term(e.clone(), checked(c.checked_mul(sign)));
        }
        p
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        self.combine(rhs, 1)
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        self.combine(rhs, -1)
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        self.scale(-1)
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        assert_eq!(
            self.nvars, rhs.nvars,
            "polynomials over different alphabets"
        );
        let mut p = SparsePoly::zero(self.nvars);
        for (a, &x) in &self.terms {
            for (b, &y) in &rhs.terms {
                let e = a.iter().zip(b).map(|(u, v)| u + v).collect();
                p.add_term(e, checked(x.checked_mul(y)));
            }
        }
        p
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (exp, c)) in self.terms().into_iter().enumerate() {
            let mag = c.unsigned_abs();
            match (idx, c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = exp
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    if e == 1 {
                        format!("t{}", v + 1)
                    } else {
                        format!("t{}^{e}", v + 1)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Demazure operator `π_i` applied to `p`.
pub fn pi(p: &SparsePoly, i: usize) -> Result<SparsePoly> {
    let n = p.nvars;
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange {
            index: i,
            range: format!("[1, {}]", n.saturating_sub(1)),
        });
    }
    let mut out = SparsePoly::zero(n);
    for (e, &c) in &p.terms {
        let (a, b) = (e[i - 1], e[i]);
        let mut put = |x: u32, y: u32, c: i64| {
            let mut f = e.clone();
            f[i - 1] = x;
            f[i] = y;
            out.add_term(f, c);
        };
        if a >= b {
            for r in 0..=a - b {
                put(a - r, b + r, c);
            }
        } else if a + 1 < b {
            for r in a + 1..b {
                put(r, a + b - r, -c);
            }
        }
    }
    Ok(out)
}

/// Applies `π_{i_1}` first, then `π_{i_2}`, and so on.
pub fn demazure_character_with_word(shape: &Partition, word: &[usize]) -> Result<SparsePoly> {
    let mut p = SparsePoly::monomial(shape.parts().to_vec());
    for &i in word {
        p = pi(&p, i)?;
    }
    Ok(p)
}

/// `D_w(e(λ))` via a reduced word of `w`.
pub fn demazure_character_ops(shape: &Partition, w: &Permutation) -> Result<SparsePoly> {
    if shape.n() != w.n() {
        return Err(Error::AlphabetMismatch {
            expected: shape.n(),
            found: w.n(),
        });
    }
    demazure_character_with_word(shape, &w.reduced_word())
}

/// `κ_θ = π_{w_θ} t^{λ_θ}`.
pub fn key_polynomial(theta: &[u32]) -> Result<SparsePoly> {
    let ck = key_of_composition(theta)?;
    demazure_character_ops(&ck.shape, &ck.perm)
}

pub fn schur_polynomial(shape: &Partition) -> SparsePoly {
    let mut p = SparsePoly::zero(shape.n());
    for t in enumerate_ssyt(shape) {
        p.add_term(t.weight(), 1);
    }
    p
}

/// Sum of `wt(T)` over the Demazure tableaux of `shape` for `w`.
pub fn demazure_character_tableaux(shape: &Partition, w: &Permutation) -> Result<SparsePoly> {
    let mut p = SparsePoly::zero(shape.n());
    for t in enumerate_demazure(shape, w)? {
        p.add_term(t.weight(), 1);
    }
    Ok(p)
}
