//! Torus-fixed points and Białynicki-Birula cells of
//! `Hilb_2(A^n x P^(r-1))`.
//!
//! The torus acts with weights `0 < g_1 < ... < g_r < l_1 < ... < l_n` on
//! the coordinates of `P^(r-1)` and `A^n`. Under that ordering every fixed
//! point is isolated and the dimensions of its attracting (positive, `t -> 0`)
//! and repelling (negative, `t -> infinity`) cells have closed forms in the
//! point's indices, so no weights are needed here.
//!
//! Negative cells decompose the core and give the Poincaré polynomial;
//! positive cells decompose the whole variety and give its point count.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyseries::IntPolynomial;

/// A fixed point. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Hilb2FixedPoint {
    /// Two reduced points `0 x [e_i]` and `0 x [e_j]`, `i < j`.
    A { i: usize, j: usize },
    /// Double point at `0 x [e_i]` with tangent `y_{j/i}`, `j > i`.
    B { i: usize, j: usize },
    /// Double point at `0 x [e_i]` with tangent `y_{j/i}`, `j < i`.
    C { i: usize, j: usize },
    /// Double point at `0 x [e_i]` with tangent `x_k`.
    D { i: usize, k: usize },
}

impl Hilb2FixedPoint {
    pub fn kind(&self) -> char {
        match self {
            Hilb2FixedPoint::A { .. } => 'A',
            Hilb2FixedPoint::B { .. } => 'B',
            Hilb2FixedPoint::C { .. } => 'C',
            Hilb2FixedPoint::D { .. } => 'D',
        }
    }

    fn is_valid(&self, n: usize, r: usize) -> bool {
        match *self {
            Hilb2FixedPoint::A { i, j } | Hilb2FixedPoint::B { i, j } => 1 <= i && i < j && j <= r,
            Hilb2FixedPoint::C { i, j } => 1 <= j && j < i && i <= r,
            Hilb2FixedPoint::D { i, k } => (1..=r).contains(&i) && (1..=n).contains(&k),
        }
    }

    /// Dimension of the attracting cell.
    pub fn positive_dim(&self, n: usize, r: usize) -> usize {
        let (n2r, nr) = (2 * n + 2 * r, 2 * n + r);
        match *self {
            Hilb2FixedPoint::A { i, j } => n2r - i - j,
            Hilb2FixedPoint::B { i, j } => n2r + 1 - i - j,
            Hilb2FixedPoint::C { i, j } => n2r - 1 - i - j,
            Hilb2FixedPoint::D { i, k } => nr + 1 - i - k,
        }
    }

    /// Dimension of the repelling cell.
    pub fn negative_dim(&self, r: usize) -> usize {
        match *self {
            Hilb2FixedPoint::A { i, j } => i + j - 2,
            Hilb2FixedPoint::B { i, j } => i + j - 3,
            Hilb2FixedPoint::C { i, j } => i + j - 1,
            Hilb2FixedPoint::D { i, k } => r + i + k - 3,
        }
    }
}

impl fmt::Display for Hilb2FixedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Hilb2FixedPoint::A { i, j } => write!(f, "A({i},{j})"),
            Hilb2FixedPoint::B { i, j } => write!(f, "B({i},{j})"),
            Hilb2FixedPoint::C { i, j } => write!(f, "C({i},{j})"),
            Hilb2FixedPoint::D { i, k } => write!(f, "D({i},{k})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellRecord {
    pub point: Hilb2FixedPoint,
    pub positive_dim: usize,
    pub negative_dim: usize,
}

fn check_params(n: usize, r: usize) -> Result<()> {
    if n == 0 || r == 0 {
        return Err(Error::invalid(format!(
            "Hilb_2 needs n, r >= 1, got n = {n}, r = {r}"
        )));
    }
    Ok(())
}

/// Dimension of `Hilb_2` of the `(n + r - 1)`-fold `A^n x P^(r-1)`.
pub fn hilb2_dim(n: usize, r: usize) -> usize {
    2 * (n + r - 1)
}

/// All fixed points: kinds A, B, C (lexicographic in `(i, j)`), then D
/// (lexicographic in `(i, k)`).
pub fn enumerate_fixed_points(n: usize, r: usize) -> Result<Vec<Hilb2FixedPoint>> {
    check_params(n, r)?;
    let pairs = || (1..=r).flat_map(|i| (i + 1..=r).map(move |j| (i, j)));
    let mut out = Vec::with_capacity(3 * r * (r - 1) / 2 + r * n);
    out.extend(pairs().map(|(i, j)| Hilb2FixedPoint::A { i, j }));
    out.extend(pairs().map(|(i, j)| Hilb2FixedPoint::B { i, j }));
    out.extend((1..=r).flat_map(|i| (1..i).map(move |j| Hilb2FixedPoint::C { i, j })));
    out.extend((1..=r).flat_map(|i| (1..=n).map(move |k| Hilb2FixedPoint::D { i, k })));
    debug_assert!(out.iter().all(|p| p.is_valid(n, r)));
    Ok(out)
}

pub fn cell_dimensions(n: usize, r: usize) -> Result<Vec<CellRecord>> {
    Ok(enumerate_fixed_points(n, r)?
        .into_iter()
        .map(|point| CellRecord {
            point,
            positive_dim: point.positive_dim(n, r),
            negative_dim: point.negative_dim(r),
        })
        .collect())
}

fn cell_polynomial(records: &[CellRecord], dim: impl Fn(&CellRecord) -> usize) -> IntPolynomial {
    records.iter().fold(IntPolynomial::zero(), |acc, rec| {
        acc + IntPolynomial::monomial(1, dim(rec))
    })
}

/// `sum q^{negative_dim}` over fixed points: the Poincaré polynomial.
pub fn hilb2_poincare_cells(n: usize, r: usize) -> Result<IntPolynomial> {
    Ok(cell_polynomial(&cell_dimensions(n, r)?, |c| c.negative_dim))
}

/// `sum q^{positive_dim}` over fixed points: evaluating at a prime power `q`
/// gives the number of `F_q`-points.
pub fn hilb2_count_polynomial(n: usize, r: usize) -> Result<IntPolynomial> {
    Ok(cell_polynomial(&cell_dimensions(n, r)?, |c| c.positive_dim))
}

/// The Poincaré polynomial split by fixed-point kind, `[H_a, H_b, H_c, H_d]`.
pub fn hilb2_poincare_by_kind(n: usize, r: usize) -> Result<[IntPolynomial; 4]> {
    let records = cell_dimensions(n, r)?;
    let mut parts: [IntPolynomial; 4] = Default::default();
    for (slot, kind) in parts.iter_mut().zip(['A', 'B', 'C', 'D']) {
        let of_kind: Vec<_> = records
            .iter()
            .copied()
            .filter(|c| c.point.kind() == kind)
            .collect();
        *slot = cell_polynomial(&of_kind, |c| c.negative_dim);
    }
    Ok(parts)
}
