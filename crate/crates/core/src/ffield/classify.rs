//! Classification of commuting families of `2 x 2` matrices.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::matrix::MatrixModP;
use crate::error::{Error, Result};

/// The algebra generated by a commuting family of `2 x 2` matrices is
/// either the scalars, or `F[x]/(f)` for the characteristic polynomial `f`
/// of any non-scalar member, which is split with distinct roots, a square,
/// or irreducible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum D2Class {
    Scalar,
    Split,
    NilpotentType,
    NonSplit,
}

impl fmt::Display for D2Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            D2Class::Scalar => "scalar",
            D2Class::Split => "split",
            D2Class::NilpotentType => "nilpotent",
            D2Class::NonSplit => "non-split",
        })
    }
}

pub fn classify_d2(gens: &[MatrixModP]) -> Result<D2Class> {
    if let Some(g) = gens.iter().find(|g| g.dim() != 2) {
        return Err(Error::invalid(format!(
            "expected 2x2 matrices, got size {}",
            g.dim()
        )));
    }
    if let Some(g) = gens.iter().find(|g| g.p() != gens[0].p()) {
        return Err(Error::invalid(format!(
            "mixed fields F_{} and F_{}",
            gens[0].p(),
            g.p()
        )));
    }
    check_commuting(gens.len(), |i, j| gens[i].commutes_with(&gens[j]))?;
    let Some(x) = gens.iter().find(|g| !g.is_scalar()) else {
        return Ok(D2Class::Scalar);
    };
    let p = x.p();
    let t = x.trace();
    let det = (x.get(0, 0) * x.get(1, 1) + p * p - x.get(0, 1) * x.get(1, 0)) % p;
    let roots = (0..p)
        .filter(|&z| (z * z + p * p - t * z + det) % p == 0)
        .count();
    Ok(match roots {
        2 => D2Class::Split,
        1 => D2Class::NilpotentType,
        _ => D2Class::NonSplit,
    })
}

/// Same classification over `Q`; each matrix is `[a, b, c, d]` row-major.
pub fn classify_d2_rational(gens: &[[BigRational; 4]]) -> Result<D2Class> {
    let mul = |x: &[BigRational; 4], y: &[BigRational; 4]| {
        [
            &x[0] * &y[0] + &x[1] * &y[2],
            &x[0] * &y[1] + &x[1] * &y[3],
            &x[2] * &y[0] + &x[3] * &y[2],
            &x[2] * &y[1] + &x[3] * &y[3],
        ]
    };
    check_commuting(gens.len(), |i, j| {
        mul(&gens[i], &gens[j]) == mul(&gens[j], &gens[i])
    })?;
    let is_scalar = |x: &[BigRational; 4]| x[1].is_zero() && x[2].is_zero() && x[0] == x[3];
    let Some(x) = gens.iter().find(|g| !is_scalar(g)) else {
        return Ok(D2Class::Scalar);
    };
    let t = &x[0] + &x[3];
    let det = &x[0] * &x[3] - &x[1] * &x[2];
    let disc = &t * &t - BigRational::from_integer(4.into()) * det;
    Ok(if disc.is_zero() {
        D2Class::NilpotentType
    } else if disc.is_positive() && is_square(disc.numer()) && is_square(disc.denom()) {
        D2Class::Split
    } else {
        D2Class::NonSplit
    })
}

fn is_square(n: &BigInt) -> bool {
    !n.is_negative() && {
        let s = n.sqrt();
        &(&s * &s) == n
    }
}

fn check_commuting(len: usize, commute: impl Fn(usize, usize) -> bool) -> Result<()> {
    for i in 0..len {
        for j in i + 1..len {
            if !commute(i, j) {
                return Err(Error::NonCommuting(i, j));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: u32, e: [i64; 4]) -> MatrixModP {
        MatrixModP::new(p, 2, &e).unwrap()
    }

    fn q(e: [i64; 4]) -> [BigRational; 4] {
        e.map(|x| BigRational::from_integer(x.into()))
    }

    #[test]
    fn finite_field_classes() {
        assert_eq!(classify_d2(&[]).unwrap(), D2Class::Scalar);
        assert_eq!(classify_d2(&[m(3, [2, 0, 0, 2])]).unwrap(), D2Class::Scalar);
        assert_eq!(classify_d2(&[m(3, [1, 0, 0, 2])]).unwrap(), D2Class::Split);
        assert_eq!(
            classify_d2(&[m(3, [1, 1, 0, 1])]).unwrap(),
            D2Class::NilpotentType
        );
        // x^2 + 1 has no root mod 3
        assert_eq!(
            classify_d2(&[m(3, [0, 2, 1, 0])]).unwrap(),
            D2Class::NonSplit
        );
        // x^2 + x + 1 has no root mod 2
        assert_eq!(
            classify_d2(&[m(2, [0, 1, 1, 1])]).unwrap(),
            D2Class::NonSplit
        );
        assert_eq!(
            classify_d2(&[m(5, [1, 0, 0, 1]), m(5, [0, 1, 0, 0]), m(5, [0, 0, 1, 0])]),
            Err(Error::NonCommuting(1, 2))
        );
    }

    #[test]
    fn rational_classes() {
        assert_eq!(
            classify_d2_rational(&[q([3, 0, 0, 3])]).unwrap(),
            D2Class::Scalar
        );
        assert_eq!(
            classify_d2_rational(&[q([1, 2, 2, 1])]).unwrap(),
            D2Class::Split
        );
        assert_eq!(
            classify_d2_rational(&[q([0, 1, 0, 0])]).unwrap(),
            D2Class::NilpotentType
        );
        assert_eq!(
            classify_d2_rational(&[q([0, 1, 2, 0])]).unwrap(),
            D2Class::NonSplit
        );
        assert_eq!(
            classify_d2_rational(&[q([0, -1, 1, 0])]).unwrap(),
            D2Class::NonSplit
        );
        assert!(classify_d2_rational(&[q([0, 1, 0, 0]), q([0, 0, 1, 0])]).is_err());
    }
}
