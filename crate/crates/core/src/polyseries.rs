//! Dense exact-integer polynomials and truncated power series in `q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Degree of a polynomial. The zero polynomial has degree `NegInfinity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Polynomial in `q` with exact integer coefficients, stored ascending.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * q^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c.into();
        Self::from_coeffs(coeffs)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `1 + q + ... + q^(len-1)`; zero when `len == 0`.
    pub fn geometric(len: usize) -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one(); len],
        }
    }

    /// `q^exp - 1`.
    pub fn q_pow_minus_one(exp: usize) -> Self {
        Self::monomial(1, exp) - Self::one()
    }

    /// `1 - q^exp`.
    pub fn one_minus_q_pow(exp: usize) -> Self {
        Self::one() - Self::monomial(1, exp)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: usize) -> BigInt {
        self.coeffs.get(exp).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    /// Least exponent with a negative coefficient, if any.
    pub fn first_negative(&self) -> Option<usize> {
        self.coeffs.iter().position(Signed::is_negative)
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `q^shift`.
    pub fn shift(&self, shift: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); shift];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    /// Horner evaluation at an integer.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// Exact quotient `self / den`. Fails with [`Error::NotDivisible`] when
    /// the division leaves a remainder or would need non-integral
    /// coefficients.
    pub fn exact_div(&self, den: &IntPolynomial) -> Result<IntPolynomial> {
        let Some(lead) = den.coeffs.last() else {
            return Err(Error::invalid("division by the zero polynomial"));
        };
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let dl = den.coeffs.len();
        if self.coeffs.len() < dl {
            return Err(Error::NotDivisible {
                remainder: self.clone(),
            });
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dl + 1];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dl - 1];
            if top.is_zero() {
                continue;
            }
            let (qc, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NotDivisible {
                    remainder: Self::from_coeffs(rem),
                });
            }
            for (j, d) in den.coeffs.iter().enumerate() {
                rem[i + j] -= &qc * d;
            }
            quot[i] = qc;
        }
        let remainder = Self::from_coeffs(rem);
        if remainder.is_zero() {
            Ok(Self::from_coeffs(quot))
        } else {
            Err(Error::NotDivisible { remainder })
        }
    }

    fn add_impl(&self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    fn mul_impl(&self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&IntPolynomial> for &IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: &IntPolynomial) -> IntPolynomial {
                let f: fn(&IntPolynomial, &IntPolynomial) -> IntPolynomial = $body;
                f(self, rhs)
            }
        }
        impl $tr<IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: &IntPolynomial) -> IntPolynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<IntPolynomial> for &IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_impl(b));
forward_binop!(Sub, sub, |a, b| a.add_impl(&-b));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));

impl fmt::Display for IntPolynomial {
    /// Ascending form, e.g. `1 + 2q + q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// JSON array of decimal strings, ascending in `q`.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::from_coeffs(coeffs))
    }
}

/// Power series in `q` known exactly for exponents `0..precision`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(precision: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); precision],
        }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        TruncatedSeries { coeffs }
    }

    /// Truncates `p` to `precision` terms; lossless when `precision > deg p`.
    pub fn from_polynomial(p: &IntPolynomial, precision: usize) -> Self {
        TruncatedSeries {
            coeffs: (0..precision).map(|e| p.coeff(e)).collect(),
        }
    }

    /// Expansion of `num / den` to `precision` terms.
    pub fn from_rational(
        num: &IntPolynomial,
        den: &IntPolynomial,
        precision: usize,
    ) -> Result<Self> {
        let d0 = den.coeff(0);
        if d0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let dc = den.coeffs();
        let mut out: Vec<BigInt> = Vec::with_capacity(precision);
        for k in 0..precision {
            let mut acc = num.coeff(k);
            for (j, dj) in dc.iter().enumerate().take(k + 1).skip(1) {
                acc -= dj * &out[k - j];
            }
            let (s, r) = acc.div_rem(&d0);
            if !r.is_zero() {
                return Err(Error::NonIntegralSeries { exponent: k });
            }
            out.push(s);
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: usize) -> Option<&BigInt> {
        self.coeffs.get(exp)
    }

    pub fn truncate(&self, precision: usize) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().take(precision).cloned().collect(),
        }
    }

    /// The known part as a polynomial.
    pub fn to_polynomial(&self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.clone())
    }

    pub fn add(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.precision().min(rhs.precision());
        TruncatedSeries {
            coeffs: (0..n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }

    pub fn mul(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.precision().min(rhs.precision());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs }
    }

    pub fn mul_polynomial(&self, p: &IntPolynomial) -> TruncatedSeries {
        self.mul(&TruncatedSeries::from_polynomial(p, self.precision()))
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    precision: String,
    coeffs: Vec<String>,
}

/// `{"precision": "N", "coeffs": [...]}` with decimal-string values.
impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesRepr {
            precision: self.precision().to_string(),
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(deserializer)?;
        let precision: usize = repr.precision.parse().map_err(D::Error::custom)?;
        if precision != repr.coeffs.len() {
            return Err(D::Error::custom(
                "precision does not match coefficient count",
            ));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(TruncatedSeries { coeffs })
    }
}

/// Anything with exactly known low-order coefficients.
pub trait Coefficients {
    /// Number of known coefficients; `None` means all of them.
    fn known_terms(&self) -> Option<usize>;
    /// Coefficient of `q^exp`, if known.
    fn coefficient(&self, exp: usize) -> Option<BigInt>;
}

impl Coefficients for IntPolynomial {
    fn known_terms(&self) -> Option<usize> {
        None
    }
    fn coefficient(&self, exp: usize) -> Option<BigInt> {
        Some(self.coeff(exp))
    }
}

impl Coefficients for TruncatedSeries {
    fn known_terms(&self) -> Option<usize> {
        Some(self.precision())
    }
    fn coefficient(&self, exp: usize) -> Option<BigInt> {
        self.coeff(exp).cloned()
    }
}

/// Outcome of [`agree_up_to`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Agreement {
    pub first_mismatch: Option<usize>,
}

impl Agreement {
    pub fn agrees(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares coefficients of `q^0..=q^deg`, reporting the least mismatch.
pub fn agree_up_to<A, B>(a: &A, b: &B, deg: usize) -> Result<Agreement>
where
    A: Coefficients + ?Sized,
    B: Coefficients + ?Sized,
{
    for known in [a.known_terms(), b.known_terms()].into_iter().flatten() {
        if known <= deg {
            return Err(Error::InsufficientPrecision {
                needed: deg,
                available: known,
            });
        }
    }
    let first_mismatch = (0..=deg).find(|&e| a.coefficient(e) != b.coefficient(e));
    Ok(Agreement { first_mismatch })
}
