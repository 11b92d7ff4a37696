use std::fmt;

use crate::error::{Error, Result};

/// Primes the brute-force machinery works over.
pub const SUPPORTED_PRIMES: [u32; 4] = [2, 3, 5, 7];

pub fn check_prime(p: u32) -> Result<()> {
    if SUPPORTED_PRIMES.contains(&p) {
        Ok(())
    } else {
        Err(Error::invalid(format!(
            "p must be one of {SUPPORTED_PRIMES:?}, got {p}"
        )))
    }
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    // Fermat
    let mut result = 1u32;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}

/// Square matrix over `F_p`, row-major, entries in `[0, p)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatrixModP {
    p: u32,
    dim: usize,
    entries: Vec<u32>,
}

impl MatrixModP {
    /// Entries are reduced mod `p`.
    pub fn new(p: u32, dim: usize, entries: &[i64]) -> Result<Self> {
        check_prime(p)?;
        if entries.len() != dim * dim {
            return Err(Error::invalid(format!(
                "{dim}x{dim} matrix needs {} entries, got {}",
                dim * dim,
                entries.len()
            )));
        }
        let pi = i64::from(p);
        Ok(MatrixModP {
            p,
            dim,
            entries: entries.iter().map(|&e| e.rem_euclid(pi) as u32).collect(),
        })
    }

    pub fn from_rows(p: u32, rows: &[&[i64]]) -> Result<Self> {
        let flat: Vec<i64> = rows.iter().flat_map(|r| r.iter().copied()).collect();
        if rows.iter().any(|r| r.len() != rows.len()) {
            return Err(Error::invalid("matrix rows must form a square"));
        }
        Self::new(p, rows.len(), &flat)
    }

    pub(crate) fn from_raw(p: u32, dim: usize, entries: Vec<u32>) -> Self {
        debug_assert_eq!(entries.len(), dim * dim);
        debug_assert!(entries.iter().all(|&e| e < p));
        MatrixModP { p, dim, entries }
    }

    pub fn zero(p: u32, dim: usize) -> Self {
        MatrixModP {
            p,
            dim,
            entries: vec![0; dim * dim],
        }
    }

    pub fn identity(p: u32, dim: usize) -> Self {
        Self::scalar(p, dim, 1)
    }

    pub fn scalar(p: u32, dim: usize, c: u32) -> Self {
        let mut m = Self::zero(p, dim);
        for i in 0..dim {
            m.entries[i * dim + i] = c % p;
        }
        m
    }

    /// The matrix unit with a one at `(row, col)`, 0-based.
    pub fn unit(p: u32, dim: usize, row: usize, col: usize) -> Self {
        let mut m = Self::zero(p, dim);
        m.entries[row * dim + col] = 1;
        m
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.entries[row * self.dim + col]
    }

    /// Entries as a vector of length `dim^2`.
    pub fn as_vector(&self) -> &[u32] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn is_scalar(&self) -> bool {
        let c = self.get(0, 0);
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.get(i, j) == if i == j { c } else { 0 }))
    }

    pub fn is_strictly_upper(&self) -> bool {
        (0..self.dim).all(|i| (0..=i).all(|j| self.get(i, j) == 0))
    }

    pub fn trace(&self) -> u32 {
        (0..self.dim).map(|i| self.get(i, i)).sum::<u32>() % self.p
    }

    pub fn mul(&self, rhs: &MatrixModP) -> MatrixModP {
        debug_assert_eq!((self.p, self.dim), (rhs.p, rhs.dim));
        let d = self.dim;
        let mut out = vec![0u32; d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.entries[i * d + k];
                if a == 0 {
                    continue;
                }
                for j in 0..d {
                    out[i * d + j] += a * rhs.entries[k * d + j];
                }
            }
        }
        for e in &mut out {
            *e %= self.p;
        }
        MatrixModP {
            p: self.p,
            dim: d,
            entries: out,
        }
    }

    pub fn add(&self, rhs: &MatrixModP) -> MatrixModP {
        MatrixModP {
            p: self.p,
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| (a + b) % self.p)
                .collect(),
        }
    }

    /// `self - c * I`.
    pub fn sub_scalar(&self, c: u32) -> MatrixModP {
        let mut m = self.clone();
        for i in 0..self.dim {
            let e = &mut m.entries[i * self.dim + i];
            *e = (*e + self.p - c % self.p) % self.p;
        }
        m
    }

    pub fn commutes_with(&self, rhs: &MatrixModP) -> bool {
        self.mul(rhs) == rhs.mul(self)
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        let d = self.dim;
        (0..d)
            .map(|i| (0..d).map(|j| self.entries[i * d + j] * v[j]).sum::<u32>() % self.p)
            .collect()
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.entries.chunks(self.dim)
    }

    pub fn columns(&self) -> impl Iterator<Item = Vec<u32>> + '_ {
        (0..self.dim).map(move |j| (0..self.dim).map(|i| self.get(i, j)).collect())
    }

    pub fn rank(&self) -> usize {
        rank_of(self.p, self.dim, self.rows().map(<[u32]>::to_vec))
    }
}

impl fmt::Debug for MatrixModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.p)?;
        f.debug_list().entries(self.rows()).finish()
    }
}

/// Row space over `F_p`, kept in reduced row echelon form.
#[derive(Debug, Clone)]
pub(crate) struct EchelonSpace {
    p: u32,
    len: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl EchelonSpace {
    pub fn new(p: u32, len: usize) -> Self {
        EchelonSpace {
            p,
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.len
    }

    fn reduce(&self, v: &mut [u32]) {
        let p = self.p;
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = v[piv];
            if c == 0 {
                continue;
            }
            for (x, &r) in v.iter_mut().zip(row) {
                *x = (*x + (p - c) * r) % p;
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        debug_assert_eq!(v.len(), self.len);
        let p = self.p;
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(piv) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inv_mod(w[piv], p);
        for x in &mut w {
            *x = *x * inv % p;
        }
        for row in &mut self.rows {
            let c = row[piv];
            if c != 0 {
                for (x, &y) in row.iter_mut().zip(&w) {
                    *x = (*x + (p - c) * y) % p;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < piv);
        self.pivots.insert(at, piv);
        self.rows.insert(at, w);
        true
    }

    pub fn into_rows(self) -> Vec<Vec<u32>> {
        self.rows
    }
}

pub(crate) fn rank_of(p: u32, len: usize, vectors: impl IntoIterator<Item = Vec<u32>>) -> usize {
    let mut space = EchelonSpace::new(p, len);
    for v in vectors {
        space.insert(&v);
        if space.is_full() {
            break;
        }
    }
    space.dim()
}

/// Every matrix in `F_p^{d x d}`, in lexicographic order of entries.
pub(crate) fn all_matrices(p: u32, d: usize) -> Vec<MatrixModP> {
    all_vectors(p, d * d)
        .into_iter()
        .map(|entries| MatrixModP::from_raw(p, d, entries))
        .collect()
}

/// Every strictly upper-triangular `d x d` matrix over `F_p`.
pub(crate) fn strictly_upper_matrices(p: u32, d: usize) -> Vec<MatrixModP> {
    let cells: Vec<(usize, usize)> = (0..d)
        .flat_map(|i| (i + 1..d).map(move |j| (i, j)))
        .collect();
    all_vectors(p, cells.len())
        .into_iter()
        .map(|vals| {
            let mut entries = vec![0u32; d * d];
            for (&(i, j), v) in cells.iter().zip(vals) {
                entries[i * d + j] = v;
            }
            MatrixModP::from_raw(p, d, entries)
        })
        .collect()
}

/// Every vector in `F_p^len`, lexicographic.
pub(crate) fn all_vectors(p: u32, len: usize) -> Vec<Vec<u32>> {
    let total = (p as usize).pow(len as u32);
    let mut out = Vec::with_capacity(total);
    let mut cur = vec![0u32; len];
    for _ in 0..total {
        out.push(cur.clone());
        for x in cur.iter_mut().rev() {
            *x += 1;
            if *x < p {
                break;
            }
            *x = 0;
        }
    }
    out
}
