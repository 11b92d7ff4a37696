//! Brute-force point counts of `Quot_d(O^r)` on `A^n` over `F_p`.
//!
//! An `F_p`-point is a commuting `n`-tuple of `d x d` matrices together with
//! `r` vectors that generate `F_p^d` as a module over the algebra the
//! matrices generate, taken up to simultaneous conjugation by `GL_d(F_p)`.
//! The action is free, so the count is the raw tuple count divided by
//! `|GL_d(F_p)|`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use super::algebra::{closure_unchecked, Algebra};
use super::classify::{classify_d2, D2Class};
use super::matrix::{all_matrices, all_vectors, check_prime, MatrixModP};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::grassmann::grass_point_count;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotCensus {
    pub d: usize,
    pub n: usize,
    pub r: usize,
    pub p: u32,
    /// Commuting tuples with a generating `r`-frame, before dividing by `GL_d`.
    pub raw_total: BigInt,
    pub gl_order: BigInt,
    pub points: BigInt,
    /// Points split by the class of the matrix algebra; only for `d = 2`.
    pub by_class: Vec<(D2Class, BigInt)>,
}

impl QuotCensus {
    pub fn class_points(&self, class: D2Class) -> BigInt {
        self.by_class
            .iter()
            .find(|(c, _)| *c == class)
            .map(|(_, v)| v.clone())
            .unwrap_or_default()
    }
}

/// `|GL_d(F_p)| = prod_{i<d} (p^d - p^i)`.
pub fn gl_order(d: usize, p: u32) -> BigInt {
    let pd = BigInt::from(p).pow(d as u32);
    (0..d).fold(BigInt::one(), |acc, i| {
        acc * (&pd - BigInt::from(p).pow(i as u32))
    })
}

fn census_work(d: usize, n: usize, r: usize, p: u32) -> u128 {
    let pow = |e: usize| (p as u128).checked_pow(e as u32).unwrap_or(u128::MAX);
    pow(d * d * n).saturating_add(pow(d * d).saturating_mul(pow(d * r)))
}

fn for_each_commuting_tuple<'a>(
    candidates: &[&'a MatrixModP],
    n: usize,
    chosen: &mut Vec<&'a MatrixModP>,
    f: &mut dyn FnMut(&[&'a MatrixModP]),
) {
    if chosen.len() == n {
        f(chosen);
        return;
    }
    for &x in candidates {
        let next: Vec<&MatrixModP> = candidates
            .iter()
            .copied()
            .filter(|y| y.commutes_with(x))
            .collect();
        chosen.push(x);
        for_each_commuting_tuple(&next, n, chosen, f);
        chosen.pop();
    }
}

fn generating_frames(alg: &Algebra, r: usize) -> u128 {
    let d = alg.d();
    all_vectors(alg.p(), d * r)
        .into_iter()
        .filter(|flat| {
            let vs: Vec<Vec<u32>> = flat.chunks(d).map(<[u32]>::to_vec).collect();
            alg.spans_with(&vs)
        })
        .count() as u128
}

pub fn quot_census(d: usize, n: usize, r: usize, p: u32, budget: Budget) -> Result<QuotCensus> {
    check_prime(p)?;
    if d == 0 || n == 0 || r == 0 {
        return Err(Error::invalid(format!(
            "Quot count needs d, n, r >= 1, got d = {d}, n = {n}, r = {r}"
        )));
    }
    budget.check(census_work(d, n, r, p))?;

    let mats = all_matrices(p, d);
    let refs: Vec<&MatrixModP> = mats.iter().collect();
    let mut frames: HashMap<Algebra, u128> = HashMap::new();
    let mut raw: HashMap<Option<D2Class>, u128> = HashMap::new();
    let mut chosen = Vec::with_capacity(n);
    for_each_commuting_tuple(&refs, n, &mut chosen, &mut |tuple| {
        let gens: Vec<MatrixModP> = tuple.iter().map(|&m| m.clone()).collect();
        let alg = closure_unchecked(p, d, &gens);
        let count = *frames
            .entry(alg)
            .or_insert_with_key(|a| generating_frames(a, r));
        let class = (d == 2).then(|| classify_d2(&gens).expect("tuple commutes"));
        *raw.entry(class).or_default() += count;
    });

    let gl = gl_order(d, p);
    let divide = |total: BigInt| -> Result<BigInt> {
        if (&total % &gl).is_zero() {
            Ok(total / &gl)
        } else {
            Err(Error::NotDivisibleByGL {
                total,
                gl_order: gl.clone(),
            })
        }
    };
    let raw_total: BigInt = raw.values().map(|&v| BigInt::from(v)).sum();
    let points = divide(raw_total.clone())?;
    let mut by_class = Vec::new();
    if d == 2 {
        for class in [
            D2Class::Scalar,
            D2Class::Split,
            D2Class::NilpotentType,
            D2Class::NonSplit,
        ] {
            let v = raw.get(&Some(class)).copied().unwrap_or(0);
            by_class.push((class, divide(BigInt::from(v))?));
        }
    }
    Ok(QuotCensus {
        d,
        n,
        r,
        p,
        raw_total,
        gl_order: gl,
        points,
        by_class,
    })
}

/// Number of `F_p`-points of `Quot_d(O^r)` on `A^n`, by enumeration.
pub fn quot_point_count(d: usize, n: usize, r: usize, p: u32, budget: Budget) -> Result<BigInt> {
    Ok(quot_census(d, n, r, p, budget)?.points)
}

/// `F_q`-points of `Hilb_2(A^n x P^(r-1))`, by counting unordered pairs of
/// distinct rational points, conjugate pairs over `F_{q^2}`, and tangent
/// directions at each rational point.
pub fn hilb2_point_count_species(n: usize, r: usize, q: &BigInt) -> Result<BigInt> {
    if n == 0 || r == 0 {
        return Err(Error::invalid(format!(
            "Hilb_2 needs n, r >= 1, got n = {n}, r = {r}"
        )));
    }
    if *q < BigInt::from(2) {
        return Err(Error::invalid(format!(
            "field size must be at least 2, got {q}"
        )));
    }
    let points = |q: &BigInt| q.pow(n as u32) * (q.pow(r as u32) - 1u32) / (q - 1u32);
    let rational = points(q);
    let over_q2 = points(&(q * q));
    let directions = (q.pow((n + r - 1) as u32) - 1u32) / (q - 1u32);
    let pairs = &rational * (&rational - 1u32) / 2u32;
    let conjugate = (over_q2 - &rational) / 2u32;
    Ok(pairs + conjugate + rational * directions)
}

/// The four terms of `#Quot = #Hilb + #Z - #Z'` at `F_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowupCount {
    pub quot_brute: BigInt,
    pub hilb: BigInt,
    pub z: BigInt,
    pub zprime: BigInt,
}

impl fmt::Display for BlowupCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} = {} + {} − {}",
            self.quot_brute, self.hilb, self.z, self.zprime
        )
    }
}

/// `#Z = p^n #Grass(r, 2)`, the locus where the quotient is supported at
/// one point with scalar action.
fn z_count(n: usize, r: usize, p: u32) -> Result<BigInt> {
    let pb = BigInt::from(p);
    Ok(pb.clone().pow(n as u32) * grass_point_count(r as i64, 2, &pb)?)
}

pub fn blowup_count_identity(n: usize, r: usize, p: u32, budget: Budget) -> Result<BlowupCount> {
    check_prime(p)?;
    let pb = BigInt::from(p);
    let hilb = hilb2_point_count_species(n, r, &pb)?;
    let z = z_count(n, r, p)?;
    let zprime = &z * (&pb * &pb + &pb + 1u32);
    let quot_brute = quot_point_count(2, n, r, p, budget)?;
    let predicted = &hilb + &z - &zprime;
    if predicted != quot_brute {
        return Err(Error::Mismatch {
            what: format!("#Quot_2 over F_{p}, n = {n}, r = {r}"),
            expected: predicted.to_string(),
            actual: quot_brute.to_string(),
        });
    }
    Ok(BlowupCount {
        quot_brute,
        hilb,
        z,
        zprime,
    })
}

/// Points of `Quot_2` whose matrices are all scalar; checked against
/// `p^n #Grass(r, 2)`.
pub fn singular_count(n: usize, r: usize, p: u32, budget: Budget) -> Result<BigInt> {
    let census = quot_census(2, n, r, p, budget)?;
    let scalar = census.class_points(D2Class::Scalar);
    let expected = z_count(n, r, p)?;
    if scalar != expected {
        return Err(Error::Mismatch {
            what: format!("scalar locus of Quot_2 over F_{p}, n = {n}, r = {r}"),
            expected: expected.to_string(),
            actual: scalar.to_string(),
        });
    }
    Ok(scalar)
}
