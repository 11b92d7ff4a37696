//! Closed-form Poincaré polynomials and series for Quot schemes of points,
//! the blowup assembly for `d = 2`, stable limits, `l_max`, and dimension
//! bounds for the span-dimension loci.

use num_bigint::BigInt;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grassmann::{gaussian_binomial, grass_poincare_or_empty, target_ring_series};
use crate::polyseries::{agree_up_to, IntPolynomial, TruncatedSeries};

fn check_nr(n: usize, r: usize) -> Result<()> {
    if n == 0 || r == 0 {
        return Err(Error::invalid(format!(
            "need n, r >= 1, got n = {n}, r = {r}"
        )));
    }
    Ok(())
}

/// `(q - 1)^2 (q + 1)`, the common denominator of the `d = 2` formulas.
fn d2_denominator() -> IntPolynomial {
    IntPolynomial::from_i64s(&[-1, 1]).pow(2) * IntPolynomial::from_i64s(&[1, 1])
}

fn q(e: usize) -> IntPolynomial {
    IntPolynomial::monomial(1, e)
}

/// Poincaré polynomial of `Hilb_2(A^n x P^(r-1))`:
/// `(q^r - 1)(q^{n+r} + q^{n+r-1} + q^{r+1} - q^2 - q - 1) / ((q-1)^2 (q+1))`.
pub fn hilb2_series_closed(n: usize, r: usize) -> Result<IntPolynomial> {
    check_nr(n, r)?;
    let second = q(n + r) + q(n + r - 1) + q(r + 1) - IntPolynomial::from_i64s(&[1, 1, 1]);
    (IntPolynomial::q_pow_minus_one(r) * second).exact_div(&d2_denominator())
}

/// Poincaré polynomial of `Grass(r, 2)`; zero for `r < 2`.
pub fn grass_r2_series(r: usize) -> IntPolynomial {
    if r < 2 {
        return IntPolynomial::zero();
    }
    (IntPolynomial::q_pow_minus_one(r) * IntPolynomial::q_pow_minus_one(r - 1))
        .exact_div(&d2_denominator())
        .expect("(q^r-1)(q^(r-1)-1) is divisible by (q-1)^2(q+1)")
}

/// `Z'` is a `P^2`-bundle over `Z = A^n x Grass(r, 2)`.
pub fn zprime_series(r: usize) -> IntPolynomial {
    grass_r2_series(r) * IntPolynomial::geometric(3)
}

/// Poincaré polynomial of `Quot_2(O^r)` on `A^n`:
/// `(q^r - 1)(q^{n+r} + q^{n+r-1} - q^r - 1) / ((q-1)^2 (q+1))`.
pub fn quot2_series(n: usize, r: usize) -> Result<IntPolynomial> {
    check_nr(n, r)?;
    let second = q(n + r) + q(n + r - 1) - q(r) - IntPolynomial::one();
    (IntPolynomial::q_pow_minus_one(r) * second).exact_div(&d2_denominator())
}

/// `H_Hilb + H_Z - H_Z'` from the abstract blowup sequence.
pub fn blowup_assemble(n: usize, r: usize) -> Result<IntPolynomial> {
    let assembled = hilb2_series_closed(n, r)? + grass_r2_series(r) - zprime_series(r);
    match assembled.first_negative() {
        Some(exponent) => Err(Error::NegativeCoefficient { exponent }),
        None => Ok(assembled),
    }
}

/// Two-term expansion of the `Quot_2` series,
/// `(1 - q^{2r}) / ((1-q^2)(1-q)) + q^{n+r-1} (q^r - 1) / (1-q)^2`,
/// evaluated as truncated series.
pub fn quot2_grouped_series(n: usize, r: usize, precision: usize) -> Result<TruncatedSeries> {
    check_nr(n, r)?;
    let stable = stable_quot2_series(r, precision)?;
    let one_minus_q = IntPolynomial::one_minus_q_pow(1);
    let tail = TruncatedSeries::from_rational(
        &(IntPolynomial::q_pow_minus_one(r).shift(n + r - 1)),
        &one_minus_q.pow(2),
        precision,
    )?;
    Ok(stable.add(&tail))
}

/// `(1 - q^{2r}) / ((1 - q^2)(1 - q))`: the `n -> infinity` limit.
pub fn stable_quot2_series(r: usize, precision: usize) -> Result<TruncatedSeries> {
    if r == 0 {
        return Err(Error::invalid("need r >= 1"));
    }
    let den = IntPolynomial::one_minus_q_pow(2) * IntPolynomial::one_minus_q_pow(1);
    TruncatedSeries::from_rational(&IntPolynomial::one_minus_q_pow(2 * r), &den, precision)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeAgreement {
    /// Largest `q`-degree through which the two series agree; `-1` if they
    /// already differ in degree 0.
    pub agrees_to: i64,
    pub first_mismatch: usize,
}

/// Compares `quot2_series(n, r)` with its stable limit.
pub fn degree_agreement(n: usize, r: usize) -> Result<DegreeAgreement> {
    let finite = quot2_series(n, r)?;
    let top = finite.degree().finite().unwrap_or(0) + 1;
    let stable = stable_quot2_series(r, top + 1)?;
    let agreement = agree_up_to(&finite, &stable, top)?;
    // The stable series has only positive coefficients, so the finite
    // polynomial must differ from it by degree top at the latest.
    let first_mismatch = agreement
        .first_mismatch
        .expect("a polynomial cannot agree with the stable series past its degree");
    Ok(DegreeAgreement {
        agrees_to: first_mismatch as i64 - 1,
        first_mismatch,
    })
}

/// `Quot_1(O^r)` on `A^n` is `A^n x P^(r-1)`.
pub fn quot_d1_series(n: usize, r: usize) -> Result<IntPolynomial> {
    check_nr(n, r)?;
    Ok(IntPolynomial::geometric(r))
}

/// Largest dimension of a commutative `r`-spanning subalgebra of `d x d`
/// matrices.
pub fn lmax(d: u64, r: u64) -> Result<u64> {
    if d == 0 || r == 0 {
        return Err(Error::invalid(format!(
            "need d, r >= 1, got d = {d}, r = {r}"
        )));
    }
    if r == 1 || d <= 2 {
        return Ok(d);
    }
    if d == 3 {
        return Err(Error::Unclassified { d, r });
    }
    // 1 < r < (d + 1) / 2
    if 2 * r < d + 1 {
        return Ok(r * (d - r) + 1);
    }
    let k = d / 2;
    if d.is_multiple_of(2) {
        Ok(k * k + 1)
    } else {
        Ok(k * (k + 1) + 1)
    }
}

/// Bounds on `dim Z_{n,r,l}`, valid when the locus is nonempty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LociBounds {
    pub lower: BigInt,
    pub upper: Ratio<BigInt>,
}

/// `lower = n l + r d - d^2`, `upper = lower + d^4 / 4`. Requires `n >= d^2`.
pub fn loci_dim_bounds(n: u64, r: u64, d: u64, l: u64) -> Result<LociBounds> {
    if d == 0 || r == 0 {
        return Err(Error::invalid("need d, r >= 1"));
    }
    if n < d * d {
        return Err(Error::invalid(format!(
            "need n >= d^2 = {}, got n = {n}",
            d * d
        )));
    }
    if l > d * d {
        return Err(Error::invalid(format!(
            "need l <= d^2 = {}, got l = {l}",
            d * d
        )));
    }
    let (n, r, d, l) = (
        BigInt::from(n),
        BigInt::from(r),
        BigInt::from(d),
        BigInt::from(l),
    );
    let lower = &n * &l + &r * &d - &d * &d;
    let slack = Ratio::new(d.pow(4), BigInt::from(4));
    let upper = Ratio::from_integer(lower.clone()) + slack;
    Ok(LociBounds { lower, upper })
}

/// Lower bound on the codimension of the complement of the maximal locus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementCodim {
    /// `n * l_max + r d - d^2`.
    pub max_locus_lower: BigInt,
    /// `n * (l_max - 1) + r d - d^2 + d^4 / 4`.
    pub complement_upper: Ratio<BigInt>,
    /// `max_locus_lower - complement_upper = n - d^4 / 4`.
    pub codim_lower: Ratio<BigInt>,
    /// Growth rate of `codim_lower` in `n`.
    pub slope: u64,
}

pub fn complement_codim_estimate(n: u64, r: u64, d: u64) -> Result<ComplementCodim> {
    let top = lmax(d, r)?;
    let max_locus = loci_dim_bounds(n, r, d, top)?;
    let below = loci_dim_bounds(n, r, d, top - 1)?;
    let codim_lower = Ratio::from_integer(max_locus.lower.clone()) - below.upper.clone();
    Ok(ComplementCodim {
        max_locus_lower: max_locus.lower,
        complement_upper: below.upper,
        codim_lower,
        slope: 1,
    })
}

/// Poincaré polynomial of the locus `R^{r,n}` for `d x d` matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RLocusPoincare {
    /// `1 < r < (d+1)/2`: `Grass(n r, d - r)`.
    Grassmannian(IntPolynomial),
    /// `d = 2k`, `r >= k`: `Grass(r, k) x Grass(n k, k)`.
    EvenProduct(IntPolynomial),
    /// `d = 2k + 1`, `r >= k + 1`: the two components
    /// `Grass(r, k) x Grass(n k, k + 1)` and `Grass(r, k + 1) x Grass(n (k + 1), k)`.
    OddSum(IntPolynomial, IntPolynomial),
}

impl RLocusPoincare {
    pub fn total(&self) -> IntPolynomial {
        match self {
            RLocusPoincare::Grassmannian(p) | RLocusPoincare::EvenProduct(p) => p.clone(),
            RLocusPoincare::OddSum(a, b) => a + b,
        }
    }
}

pub fn r_locus_poincare(d: u64, r: u64, n: u64) -> Result<RLocusPoincare> {
    if d == 0 || r == 0 || n == 0 {
        return Err(Error::invalid("need d, r, n >= 1"));
    }
    let (di, ri, ni) = (d as i64, r as i64, n as i64);
    if r > 1 && 2 * r < d + 1 {
        return Ok(RLocusPoincare::Grassmannian(gaussian_binomial(
            ni * ri,
            di - ri,
        )?));
    }
    let k = di / 2;
    if d.is_multiple_of(2) && ri >= k {
        return Ok(RLocusPoincare::EvenProduct(
            gaussian_binomial(ri, k)? * gaussian_binomial(ni * k, k)?,
        ));
    }
    if d % 2 == 1 && ri > k {
        let first = grass_poincare_or_empty(ri, k)? * grass_poincare_or_empty(ni * k, k + 1)?;
        let second = gaussian_binomial(ri, k + 1)? * gaussian_binomial(ni * (k + 1), k)?;
        return Ok(RLocusPoincare::OddSum(first, second));
    }
    Err(Error::RegimeError { d, r })
}

/// The stable `Quot_2` series against `Z[c_1, c_2] / (c_2^r)`.
pub fn stable_matches_target(r: usize, precision: usize) -> Result<bool> {
    Ok(stable_quot2_series(r, precision)? == target_ring_series(2, r, precision)?)
}
