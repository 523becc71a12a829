//! Exhaustive enumeration of positive solutions over the bound box
//! `1 <= w_i <= floor(N^(1/p_i))`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::equation::{DiophantineEquation, WeightVector};
use crate::error::{Error, Result};

/// Largest box (product of per-coordinate bounds) enumerated by default.
pub const DEFAULT_CAP: u128 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionSet {
    pub solutions: BTreeSet<WeightVector>,
    pub exhaustive: bool,
}

impl SolutionSet {
    pub fn contains(&self, w: &WeightVector) -> bool {
        self.solutions.contains(w)
    }

    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }
}

/// Largest `r` with `r^p <= n`, in exact integer arithmetic.
pub fn integer_root(n: u64, p: u32) -> u64 {
    assert!(p >= 1, "root degree must be positive");
    if n == 0 {
        return 0;
    }
    if p == 1 {
        return n;
    }
    if p >= 64 {
        return 1;
    }
    let fits = |r: u64| (r as u128).checked_pow(p).is_some_and(|v| v <= n as u128);
    // float estimate, then walk to the exact answer
    let mut r = (n as f64).powf(1.0 / p as f64).round() as u64;
    r = r.max(1);
    while !fits(r) {
        r -= 1;
    }
    while fits(r + 1) {
        r += 1;
    }
    r
}

/// Per-coordinate upper bounds of the search box.
pub fn bound_box(eq: &DiophantineEquation) -> Vec<u64> {
    eq.powers()
        .iter()
        .map(|&p| integer_root(eq.target(), p))
        .collect()
}

/// Number of tuples in the bound box, saturating at `u128::MAX`.
pub fn box_size(eq: &DiophantineEquation) -> u128 {
    bound_box(eq)
        .into_iter()
        .fold(1u128, |acc, b| acc.saturating_mul(b as u128))
}

/// All `w` in the bound box with `Σ w_i^{p_i} = N`.
///
/// With `cap = Some(c)`, fails with [`Error::BoxTooLarge`] when the box holds
/// more than `c` tuples. Coordinates are pruned against the remaining residual,
/// which does not change the returned set.
pub fn enumerate_solutions(eq: &DiophantineEquation, cap: Option<u128>) -> Result<SolutionSet> {
    let size = box_size(eq);
    if let Some(cap) = cap {
        if size > cap {
            return Err(Error::BoxTooLarge { size, cap });
        }
    }
    let mut solutions = BTreeSet::new();
    let mut prefix = Vec::with_capacity(eq.arity());
    search(eq.powers(), eq.target(), &mut prefix, &mut solutions);
    Ok(SolutionSet {
        solutions,
        exhaustive: true,
    })
}

fn search(powers: &[u32], residual: u64, prefix: &mut Vec<u64>, out: &mut BTreeSet<WeightVector>) {
    let i = prefix.len();
    let remaining = (powers.len() - i - 1) as u64;
    if remaining == 0 {
        let r = integer_root(residual, powers[i]);
        if r >= 1 && (r as u128).pow(powers[i]) == residual as u128 {
            prefix.push(r);
            out.insert(WeightVector::from_raw(prefix.clone()));
            prefix.pop();
        }
        return;
    }
    // every later coordinate contributes at least 1
    if residual <= remaining {
        return;
    }
    let hi = integer_root(residual - remaining, powers[i]);
    for w in 1..=hi {
        let term = (w as u128).pow(powers[i]) as u64;
        prefix.push(w);
        search(powers, residual - term, prefix, out);
        prefix.pop();
    }
}
