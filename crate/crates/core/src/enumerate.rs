//! Exhaustive enumeration of subspaces of `F_p^n` in canonical RREF form.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{Subspace, Vector};
use crate::scalar::FieldSpec;

pub const DEFAULT_MAX_SUBSPACES: u64 = 4000;

/// Hard cap on the number of subspaces an enumeration may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_subspaces: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_subspaces: DEFAULT_MAX_SUBSPACES,
        }
    }
}

impl Budget {
    pub fn new(max_subspaces: u64) -> Self {
        Self { max_subspaces }
    }

    pub fn check(&self, needed: u128) -> Result<()> {
        if needed > self.max_subspaces as u128 {
            Err(Error::BudgetExceeded {
                needed,
                budget: self.max_subspaces,
            })
        } else {
            Ok(())
        }
    }
}

/// Number of `k`-dimensional subspaces of `F_q^n`.
pub fn gaussian_binomial(n: u32, k: u32, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num = num.saturating_mul(q.saturating_pow(n - i).saturating_sub(1));
        den = den.saturating_mul(q.saturating_pow(i + 1).saturating_sub(1));
    }
    if num == u128::MAX {
        return u128::MAX;
    }
    num / den
}

pub fn count_subspaces(n: u32, q: u64) -> u128 {
    (0..=n).fold(0u128, |acc, k| acc.saturating_add(gaussian_binomial(n, k, q)))
}

fn prime_of(field: FieldSpec) -> Result<u64> {
    field.modulus().ok_or(Error::NotFiniteField)
}

/// All subspaces of `F_p^n`, ordered by dimension, then pivot pattern, then
/// free entries.
pub fn enumerate_subspaces(field: FieldSpec, n: usize, budget: &Budget) -> Result<Vec<Subspace>> {
    let p = prime_of(field)?;
    budget.check(count_subspaces(n as u32, p))?;
    let mut out = Vec::new();
    for k in 0..=n {
        out.extend(subspaces_of_dim_unchecked(field, p, n, k));
    }
    Ok(out)
}

/// All `k`-dimensional subspaces of `F_p^n`.
pub fn subspaces_of_dim(field: FieldSpec, n: usize, k: usize, budget: &Budget) -> Result<Vec<Subspace>> {
    let p = prime_of(field)?;
    budget.check(gaussian_binomial(n as u32, k as u32, p))?;
    Ok(subspaces_of_dim_unchecked(field, p, n, k))
}

/// Every line inside `s`, as subspaces of the ambient space.
pub fn lines_in(s: &Subspace, budget: &Budget) -> Result<Vec<Subspace>> {
    let field = s.field();
    let p = prime_of(field)?;
    let d = s.dim();
    budget.check(gaussian_binomial(d as u32, 1, p))?;
    let mut out: Vec<Subspace> = subspaces_of_dim_unchecked(field, p, d, 1)
        .into_iter()
        .map(|line| {
            let c = &line.basis()[0];
            let mut v = Vector::zeros(field, s.ambient_dim());
            for (i, b) in s.basis().iter().enumerate() {
                v.axpy(c.get(i), b);
            }
            Subspace::span(field, s.ambient_dim(), &[v]).expect("vector in ambient space")
        })
        .collect();
    out.sort();
    Ok(out)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

fn subspaces_of_dim_unchecked(field: FieldSpec, p: u64, n: usize, k: usize) -> Vec<Subspace> {
    combinations(n, k)
        .into_par_iter()
        .map(|pivots| with_pivots(field, p, n, &pivots))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn with_pivots(field: FieldSpec, p: u64, n: usize, pivots: &[usize]) -> Vec<Subspace> {
    // free slots: row r, column c > pivots[r] that is not a pivot column
    let mut free = Vec::new();
    for (r, &pc) in pivots.iter().enumerate() {
        for c in (pc + 1)..n {
            if !pivots.contains(&c) {
                free.push((r, c));
            }
        }
    }
    let elements: Vec<_> = (0..p).map(|v| field.from_i64(v as i64)).collect();
    let mut digits = vec![0usize; free.len()];
    let mut out = Vec::new();
    loop {
        let mut rows: Vec<Vector> = pivots.iter().map(|&pc| Vector::unit(field, n, pc)).collect();
        for (slot, &(r, c)) in free.iter().enumerate() {
            rows[r].set(c, elements[digits[slot]].clone());
        }
        out.push(Subspace::from_rref_unchecked(field, n, rows, pivots.to_vec()));

        // odometer, last slot fastest
        let mut i = free.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < p as usize {
                break;
            }
            digits[i] = 0;
        }
    }
}
