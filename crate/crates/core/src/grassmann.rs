//! Gaussian binomials, Grassmannian point counts and stable Grassmannian
//! series.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polyseries::{IntPolynomial, TruncatedSeries};

/// Grassmannian of `quotient_dim`-dimensional quotients of an
/// `ambient`-dimensional space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GrassParams {
    ambient: u64,
    quotient_dim: u64,
}

impl GrassParams {
    pub fn new(ambient: i64, quotient_dim: i64) -> Result<Self> {
        if ambient < 0 || quotient_dim < 0 || quotient_dim > ambient {
            return Err(Error::invalid(format!(
                "Grassmannian needs 0 <= b <= a, got a = {ambient}, b = {quotient_dim}"
            )));
        }
        Ok(GrassParams {
            ambient: ambient as u64,
            quotient_dim: quotient_dim as u64,
        })
    }

    pub fn ambient(&self) -> u64 {
        self.ambient
    }

    pub fn quotient_dim(&self) -> u64 {
        self.quotient_dim
    }

    pub fn dim(&self) -> u64 {
        self.quotient_dim * (self.ambient - self.quotient_dim)
    }

    /// Poincaré polynomial in `q`, i.e. `[a choose b]_q`.
    pub fn poincare(&self) -> IntPolynomial {
        let (a, b) = (self.ambient as usize, self.quotient_dim as usize);
        let mut num = IntPolynomial::one();
        let mut den = IntPolynomial::one();
        for i in 1..=b {
            num = num * IntPolynomial::one_minus_q_pow(a - b + i);
            den = den * IntPolynomial::one_minus_q_pow(i);
        }
        num.exact_div(&den)
            .expect("q-binomial product formula always divides exactly")
    }
}

/// `[a choose b]_q`, computed from the product formula by exact division.
pub fn gaussian_binomial(a: i64, b: i64) -> Result<IntPolynomial> {
    Ok(GrassParams::new(a, b)?.poincare())
}

/// Like [`gaussian_binomial`] but an empty Grassmannian (`b > a`) gives the
/// zero polynomial.
pub fn grass_poincare_or_empty(a: i64, b: i64) -> Result<IntPolynomial> {
    if a >= 0 && b > a {
        return Ok(IntPolynomial::zero());
    }
    gaussian_binomial(a, b)
}

/// Number of `F_q`-points of `Grass(a, b)`; zero when `b > a`.
pub fn grass_point_count(a: i64, b: i64, q: &BigInt) -> Result<BigInt> {
    if *q < BigInt::from(2) {
        return Err(Error::invalid(format!(
            "field size must be at least 2, got {q}"
        )));
    }
    Ok(grass_poincare_or_empty(a, b)?.eval(q))
}

/// `prod_{i=1..b} 1/(1 - q^i)`: Poincaré series of `Grass(b, infinity)`.
pub fn stable_grass_series(b: usize, precision: usize) -> TruncatedSeries {
    let den = (1..=b).fold(IntPolynomial::one(), |acc, i| {
        acc * IntPolynomial::one_minus_q_pow(i)
    });
    TruncatedSeries::from_rational(&IntPolynomial::one(), &den, precision)
        .expect("denominator has constant term 1")
}

/// Hilbert series of `Z[c_1, ..., c_d] / (c_d^r)` with `deg c_i = 2i`.
pub fn target_ring_series(d: usize, r: usize, precision: usize) -> Result<TruncatedSeries> {
    if d == 0 || r == 0 {
        return Err(Error::invalid(format!(
            "target ring needs d, r >= 1, got d = {d}, r = {r}"
        )));
    }
    let num = IntPolynomial::one_minus_q_pow(d * r);
    let den = (1..d).fold(IntPolynomial::one_minus_q_pow(d), |acc, i| {
        acc * IntPolynomial::one_minus_q_pow(i)
    });
    TruncatedSeries::from_rational(&num, &den, precision)
}

/// Ordinary binomial coefficient, used for Euler characteristics.
pub fn binomial(a: u64, b: u64) -> BigInt {
    if b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    (0..b).fold(BigInt::from(1), |acc, i| acc * (a - i) / (i + 1))
}
