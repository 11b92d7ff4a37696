//! Exhaustive search for the largest commutative algebras of upper-triangular
//! matrices with small spanning index.

use std::collections::BTreeSet;

use super::algebra::{closure_unchecked, spanning_index, Algebra};
use super::matrix::{check_prime, strictly_upper_matrices};
use super::wspace::is_id_plus_square_zero;
use crate::budget::Budget;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LmaxSearch {
    pub d: usize,
    pub r: usize,
    pub p: u32,
    pub max_gens: usize,
    /// Largest dimension of an algebra with spanning index at most `r`.
    pub max_dim: usize,
    /// Every algebra attaining `max_dim`, sorted.
    pub achievers: Vec<Algebra>,
    /// Number of distinct algebras reached.
    pub algebras_seen: usize,
}

impl LmaxSearch {
    /// Whether every achiever is `<Id>` plus a square-zero ideal of the
    /// expected shape.
    pub fn achievers_structural(&self) -> bool {
        self.achievers
            .iter()
            .all(|a| is_id_plus_square_zero(a, self.r))
    }
}

/// Explores algebras `<Id, X_1, ..., X_k>` for commuting strictly
/// upper-triangular `X_i` and `k <= max_gens`, and reports the largest
/// dimension among those with spanning index at most `r`.
///
/// Algebras are explored level by level: level `k + 1` adjoins one more
/// strictly upper-triangular matrix commuting with an algebra from level
/// `k`. This reaches exactly the algebras generated by `k + 1` commuting
/// tuples, without visiting every tuple. The budget is still checked
/// against the nominal tuple count `p^{max_gens d(d-1)/2}`.
pub fn lmax_search(
    d: usize,
    r: usize,
    p: u32,
    max_gens: usize,
    budget: Budget,
) -> Result<LmaxSearch> {
    check_prime(p)?;
    if d == 0 || r == 0 {
        return Err(Error::invalid(format!(
            "lmax search needs d, r >= 1, got d = {d}, r = {r}"
        )));
    }
    let cells = d * (d - 1) / 2;
    let nominal = (p as u128)
        .checked_pow((cells * max_gens) as u32)
        .unwrap_or(u128::MAX);
    budget.check(nominal)?;

    let sut = strictly_upper_matrices(p, d);
    let start = closure_unchecked(p, d, &[]);
    let mut seen: BTreeSet<Algebra> = BTreeSet::from([start.clone()]);
    let mut level = vec![start];
    for _ in 0..max_gens {
        let mut next = Vec::new();
        for alg in &level {
            for g in &sut {
                if alg.contains(g) || !alg.basis().iter().all(|b| b.commutes_with(g)) {
                    continue;
                }
                let mut gens = alg.basis().to_vec();
                gens.push(g.clone());
                let bigger = closure_unchecked(p, d, &gens);
                if seen.insert(bigger.clone()) {
                    next.push(bigger);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        level = next;
    }

    let mut max_dim = 0;
    let mut achievers = Vec::new();
    for alg in &seen {
        if alg.dim() < max_dim || spanning_index(alg, budget)? > r {
            continue;
        }
        if alg.dim() > max_dim {
            max_dim = alg.dim();
            achievers.clear();
        }
        achievers.push(alg.clone());
    }
    Ok(LmaxSearch {
        d,
        r,
        p,
        max_gens,
        max_dim,
        achievers,
        algebras_seen: seen.len(),
    })
}
