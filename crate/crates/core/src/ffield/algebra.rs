//! Commutative matrix algebras over `F_p` and their spanning index.

use std::ops::ControlFlow;

use itertools::Itertools;
use num_traits::ToPrimitive;

use super::matrix::{check_prime, EchelonSpace, MatrixModP};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::grassmann::grass_point_count;

/// A unital subalgebra of `M_d(F_p)`, stored by its reduced row echelon
/// basis, so equal algebras compare and hash equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Algebra {
    p: u32,
    d: usize,
    basis: Vec<MatrixModP>,
}

impl Algebra {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[MatrixModP] {
        &self.basis
    }

    pub fn contains(&self, m: &MatrixModP) -> bool {
        let mut space = EchelonSpace::new(self.p, self.d * self.d);
        for b in &self.basis {
            space.insert(b.as_vector());
        }
        space.contains(m.as_vector())
    }

    /// Whether `A . span(vectors) = F_p^d`.
    pub fn spans_with(&self, vectors: &[Vec<u32>]) -> bool {
        let mut space = EchelonSpace::new(self.p, self.d);
        for b in &self.basis {
            for v in vectors {
                space.insert(&b.apply(v));
                if space.is_full() {
                    return true;
                }
            }
        }
        space.is_full()
    }
}

/// The subalgebra generated by the identity and `gens`, which must commute
/// pairwise.
pub fn algebra_closure(p: u32, d: usize, gens: &[MatrixModP]) -> Result<Algebra> {
    check_prime(p)?;
    if d == 0 {
        return Err(Error::invalid("matrix size must be at least 1"));
    }
    if let Some(g) = gens.iter().find(|g| g.p() != p || g.dim() != d) {
        return Err(Error::invalid(format!(
            "generator over F_{} of size {} in an algebra over F_{p} of size {d}",
            g.p(),
            g.dim()
        )));
    }
    for (i, j) in (0..gens.len()).tuple_combinations() {
        if !gens[i].commutes_with(&gens[j]) {
            return Err(Error::NonCommuting(i, j));
        }
    }
    Ok(closure_unchecked(p, d, gens))
}

pub(crate) fn closure_unchecked(p: u32, d: usize, gens: &[MatrixModP]) -> Algebra {
    let mut space = EchelonSpace::new(p, d * d);
    let mut elems = Vec::new();
    for m in std::iter::once(MatrixModP::identity(p, d)).chain(gens.iter().cloned()) {
        if space.insert(m.as_vector()) {
            elems.push(m);
        }
    }
    let mut i = 0;
    while i < elems.len() {
        for j in 0..=i {
            let prod = elems[i].mul(&elems[j]);
            if space.insert(prod.as_vector()) {
                elems.push(prod);
            }
        }
        i += 1;
    }
    let basis = space
        .into_rows()
        .into_iter()
        .map(|row| MatrixModP::from_raw(p, d, row))
        .collect();
    Algebra { p, d, basis }
}

/// Calls `f` on a basis of every `k`-dimensional subspace of `F_p^d`, each
/// visited once via its reduced row echelon form. Stops early on `Break`.
pub(crate) fn for_each_subspace<F>(p: u32, d: usize, k: usize, mut f: F) -> ControlFlow<()>
where
    F: FnMut(&[Vec<u32>]) -> ControlFlow<()>,
{
    for pivots in (0..d).combinations(k) {
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(t, &c0)| {
                (c0 + 1..d)
                    .filter(|c| !pivots.contains(c))
                    .map(move |c| (t, c))
            })
            .collect();
        let mut rows: Vec<Vec<u32>> = pivots
            .iter()
            .map(|&c| {
                let mut row = vec![0u32; d];
                row[c] = 1;
                row
            })
            .collect();
        let mut digits = vec![0u32; free.len()];
        loop {
            for (&(t, c), &v) in free.iter().zip(&digits) {
                rows[t][c] = v;
            }
            f(&rows)?;
            let mut carried = true;
            for x in digits.iter_mut().rev() {
                *x += 1;
                if *x < p {
                    carried = false;
                    break;
                }
                *x = 0;
            }
            if carried {
                break;
            }
        }
    }
    ControlFlow::Continue(())
}

/// Work needed to test every subspace of dimension up to `d` against `alg`.
fn spanning_work(alg: &Algebra) -> u128 {
    let d = alg.d as i64;
    let p = num_bigint::BigInt::from(alg.p);
    (1..=d)
        .map(|k| {
            let subspaces = grass_point_count(d, k, &p)
                .ok()
                .and_then(|c| c.to_u128())
                .unwrap_or(u128::MAX);
            subspaces.saturating_mul((alg.dim() * k as usize * alg.d * alg.d) as u128)
        })
        .fold(0u128, u128::saturating_add)
}

/// Least `k` such that some `k`-dimensional subspace `U` has `A . U = F_p^d`.
pub fn spanning_index(alg: &Algebra, budget: Budget) -> Result<usize> {
    budget.check(spanning_work(alg))?;
    for k in 1..=alg.d {
        let found = for_each_subspace(alg.p, alg.d, k, |rows| {
            if alg.spans_with(rows) {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if found.is_break() {
            return Ok(k);
        }
    }
    Err(Error::NotSpanning)
}
