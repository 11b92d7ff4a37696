//! Independent reference implementations used as test oracles. None of
//! these call into the library's algorithms.

#![allow(dead_code)]

use num_bigint::BigInt;
use quotcoh_core::IntPolynomial;

/// Schoolbook product of dense coefficient vectors.
pub fn mul_i128(a: &[i128], b: &[i128]) -> Vec<i128> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub fn add_i128(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] += y;
    }
    trim(out)
}

pub fn trim(mut v: Vec<i128>) -> Vec<i128> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub fn to_poly(v: &[i128]) -> IntPolynomial {
    IntPolynomial::from_coeffs(v.iter().map(|&c| BigInt::from(c)).collect())
}

/// `[a choose b]_q` from the q-Pascal rule
/// `[a, b] = [a-1, b-1] + q^b [a-1, b]`, tabulated row by row.
pub fn gaussian_pascal(a: usize, b: usize) -> Vec<i128> {
    let mut rows: Vec<Vec<Vec<i128>>> = vec![vec![vec![1]]];
    for n in 1..=a {
        let prev = &rows[n - 1];
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let left = if k >= 1 {
                prev[k - 1].clone()
            } else {
                Vec::new()
            };
            let right = if k < n {
                let mut shifted = vec![0i128; k];
                shifted.extend_from_slice(&prev[k]);
                shifted
            } else {
                Vec::new()
            };
            row.push(add_i128(&left, &right));
        }
        rows.push(row);
    }
    rows[a][b].clone()
}

/// Number of `k`-dimensional subspaces of `F_p^d`, by counting linearly
/// independent ordered `k`-tuples and dividing by `|GL_k(F_p)|`.
pub fn subspace_count(p: u64, d: u32, k: u32) -> u128 {
    let frames = |n: u32| -> u128 {
        (0..k)
            .map(|i| u128::from(p).pow(n) - u128::from(p).pow(i))
            .product()
    };
    frames(d) / frames(k)
}

/// Points of `Hilb_2(A^n x P^(r-1))` over `F_q`, counted as a sum over the
/// support: two distinct rational points, a Galois-conjugate pair, or a
/// rational point with a tangent line.
pub fn hilb2_points_by_support(n: u32, r: u32, q: u128) -> u128 {
    let points = |q: u128| q.pow(n) * (q.pow(r) - 1) / (q - 1);
    let (a, a2) = (points(q), points(q * q));
    let lines = (q.pow(n + r - 1) - 1) / (q - 1);
    a * (a - 1) / 2 + (a2 - a) / 2 + a * lines
}
