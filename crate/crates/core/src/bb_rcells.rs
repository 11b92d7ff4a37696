//! Fixed points and tangent characters for the smooth projective loci
//! `R^{r,n}_o`, compared against the product `Grass(r,m) x Grass(n*m,s)`.
//!
//! A fixed point of `R^{r,n}_o` is a choice of generators
//! `s_1 < ... < s_m` in `[r]` together with an `s`-element set of positions
//! `(i, j)` in `[n] x [m]`, where `(i, j)` stands for the element `X_i e_{s_j}`.
//! Each fixed point has `m(r-m) + s(nm-s)` invariant curves:
//!
//! * generator moves, replacing `s in S` by `s' not in S`, with character
//!   `lambda_s - lambda_s'`;
//! * position moves, replacing `(i, j) in P` by `(i', j') not in P`, with
//!   character `lambda_{s_j} - lambda_{s_j'} + gamma_i - gamma_i'`.
//!
//! On the product side the second factor has basis `e_{i,j}` of weight
//! `gamma_i + lambda_j`.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grassmann::gaussian_binomial;
use crate::polyseries::IntPolynomial;

/// Torus weights: `lambda` on the `r` generators, `gamma` on the `n`
/// variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightAssignment {
    lambda: Vec<i64>,
    gamma: Vec<i64>,
}

impl WeightAssignment {
    /// Requires `0 < lambda_1 < ... < lambda_r`, `gamma_1 > lambda_r` and
    /// `gamma_i - gamma_{i-1} > lambda_r`.
    pub fn new(lambda: Vec<i64>, gamma: Vec<i64>) -> Result<Self> {
        let bad = |msg: &str| Err(Error::invalid(format!("inadmissible weights: {msg}")));
        let Some(&top) = lambda.last() else {
            return bad("lambda is empty");
        };
        if gamma.is_empty() {
            return bad("gamma is empty");
        }
        if lambda[0] <= 0 || lambda.windows(2).any(|w| w[0] >= w[1]) {
            return bad("lambda must be positive and strictly increasing");
        }
        if gamma[0] <= top {
            return bad("gamma_1 must exceed lambda_r");
        }
        if gamma.windows(2).any(|w| w[1] - w[0] <= top) {
            return bad("consecutive gamma gaps must exceed lambda_r");
        }
        Ok(WeightAssignment { lambda, gamma })
    }

    /// `lambda_j = j`, `gamma_i = (r + 1) i`.
    pub fn standard(r: usize, n: usize) -> Self {
        let step = r as i64 + 1;
        WeightAssignment {
            lambda: (1..=r as i64).collect(),
            gamma: (1..=n as i64).map(|i| step * i).collect(),
        }
    }

    pub fn r(&self) -> usize {
        self.lambda.len()
    }

    pub fn n(&self) -> usize {
        self.gamma.len()
    }

    /// 1-based.
    pub fn lambda(&self, j: usize) -> i64 {
        self.lambda[j - 1]
    }

    /// 1-based.
    pub fn gamma(&self, i: usize) -> i64 {
        self.gamma[i - 1]
    }
}

/// Fixed point of `R^{r,n}_o`. All indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RCellFixedPoint {
    /// `s_1 < ... < s_m` in `[r]`.
    pub generators: Vec<usize>,
    /// Positions `(i, j)` in `[n] x [m]`, sorted.
    pub positions: Vec<(usize, usize)>,
}

/// An invariant curve through a fixed point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TangentMove {
    Generator {
        from: usize,
        to: usize,
    },
    Position {
        from: (usize, usize),
        to: (usize, usize),
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SignProfile {
    pub positive: usize,
    pub negative: usize,
}

impl SignProfile {
    fn record(&mut self, character: i64) -> Result<()> {
        match character.signum() {
            1 => self.positive += 1,
            -1 => self.negative += 1,
            _ => return Err(Error::ZeroCharacter),
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Shape {
    r: usize,
    m: usize,
    s: usize,
    n: usize,
}

/// Kept generators and quotient positions.
type SubsetPair = (Vec<usize>, Vec<(usize, usize)>);

impl Shape {
    fn new(r: usize, m: usize, s: usize, n: usize) -> Result<Self> {
        if r == 0 || n == 0 || m > r || s > n * m {
            return Err(Error::invalid(format!(
                "need r, n >= 1, m <= r, s <= n*m; got r = {r}, m = {m}, s = {s}, n = {n}"
            )));
        }
        Ok(Shape { r, m, s, n })
    }

    fn with_weights(r: usize, m: usize, s: usize, n: usize, w: &WeightAssignment) -> Result<Self> {
        if w.r() != r || w.n() != n {
            return Err(Error::invalid(format!(
                "weights are for r = {}, n = {}, expected r = {r}, n = {n}",
                w.r(),
                w.n()
            )));
        }
        Shape::new(r, m, s, n)
    }

    fn positions(&self) -> Vec<(usize, usize)> {
        (1..=self.n).cartesian_product(1..=self.m).collect()
    }

    fn tangent_dim(&self) -> usize {
        self.m * (self.r - self.m) + self.s * (self.n * self.m - self.s)
    }

    /// `(subset of [r], subset of [n] x [m])` pairs in lexicographic order.
    fn subset_pairs(&self) -> Vec<SubsetPair> {
        let cells = self.positions();
        (1..=self.r)
            .combinations(self.m)
            .cartesian_product(cells.into_iter().combinations(self.s).collect_vec())
            .collect()
    }
}

pub fn enumerate_r_fixed_points(
    r: usize,
    m: usize,
    s: usize,
    n: usize,
) -> Result<Vec<RCellFixedPoint>> {
    Ok(Shape::new(r, m, s, n)?
        .subset_pairs()
        .into_iter()
        .map(|(generators, positions)| RCellFixedPoint {
            generators,
            positions,
        })
        .collect())
}

/// Every invariant curve through `fp` with its torus character.
pub fn tangent_moves(
    fp: &RCellFixedPoint,
    w: &WeightAssignment,
) -> Result<Vec<(TangentMove, i64)>> {
    let shape = Shape::with_weights(w.r(), fp.generators.len(), fp.positions.len(), w.n(), w)?;
    let gens = &fp.generators;
    if gens.iter().any(|&g| g == 0 || g > shape.r) || gens.windows(2).any(|p| p[0] >= p[1]) {
        return Err(Error::invalid(
            "generators must be strictly increasing within [r]",
        ));
    }
    if fp
        .positions
        .iter()
        .any(|&(i, j)| !(1..=shape.n).contains(&i) || !(1..=shape.m).contains(&j))
    {
        return Err(Error::invalid("position outside [n] x [m]"));
    }

    let mut out = Vec::with_capacity(shape.tangent_dim());
    for &from in gens {
        for to in (1..=shape.r).filter(|t| !gens.contains(t)) {
            out.push((
                TangentMove::Generator { from, to },
                w.lambda(from) - w.lambda(to),
            ));
        }
    }
    let weight = |(i, j): (usize, usize)| w.lambda(gens[j - 1]) + w.gamma(i);
    for &from in &fp.positions {
        for to in shape
            .positions()
            .into_iter()
            .filter(|c| !fp.positions.contains(c))
        {
            out.push((
                TangentMove::Position { from, to },
                weight(from) - weight(to),
            ));
        }
    }
    Ok(out)
}

/// Numbers of positive and negative characters on the tangent space at
/// `fp`. A zero character is reported as [`Error::ZeroCharacter`].
pub fn tangent_sign_profile(fp: &RCellFixedPoint, w: &WeightAssignment) -> Result<SignProfile> {
    let mut profile = SignProfile::default();
    for (_, character) in tangent_moves(fp, w)? {
        profile.record(character)?;
    }
    Ok(profile)
}

fn poincare_from_profiles(profiles: &[SignProfile], what: &str) -> Result<IntPolynomial> {
    let sum = |f: fn(&SignProfile) -> usize| {
        profiles.iter().fold(IntPolynomial::zero(), |acc, p| {
            acc + IntPolynomial::monomial(1, f(p))
        })
    };
    let negative = sum(|p| p.negative);
    let positive = sum(|p| p.positive);
    if negative != positive {
        return Err(Error::Mismatch {
            what: format!("{what}: cell polynomial by negative vs positive characters"),
            expected: negative.to_string(),
            actual: positive.to_string(),
        });
    }
    Ok(negative)
}

/// Sign profiles of every fixed point of `R^{r,n}_o`, in enumeration order.
pub fn r_circ_profiles(
    r: usize,
    m: usize,
    s: usize,
    n: usize,
    w: &WeightAssignment,
) -> Result<Vec<(RCellFixedPoint, SignProfile)>> {
    Shape::with_weights(r, m, s, n, w)?;
    enumerate_r_fixed_points(r, m, s, n)?
        .into_iter()
        .map(|fp| {
            let profile = tangent_sign_profile(&fp, w)?;
            Ok((fp, profile))
        })
        .collect()
}

/// `sum q^{negative_count}` over fixed points of `R^{r,n}_o`; also checks it
/// against the positive-count sum.
pub fn r_circ_poincare(
    r: usize,
    m: usize,
    s: usize,
    n: usize,
    w: &WeightAssignment,
) -> Result<IntPolynomial> {
    let profiles: Vec<_> = r_circ_profiles(r, m, s, n, w)?
        .into_iter()
        .map(|(_, p)| p)
        .collect();
    poincare_from_profiles(&profiles, "R-locus")
}

/// The same sign count on `Grass(r,m) x Grass(n*m,s)`, whose second factor
/// carries weight `gamma_i + lambda_j` on `e_{i,j}`.
pub fn product_grassmannian_profile(
    r: usize,
    m: usize,
    s: usize,
    n: usize,
    w: &WeightAssignment,
) -> Result<IntPolynomial> {
    let shape = Shape::with_weights(r, m, s, n, w)?;
    let cells = shape.positions();
    let cell_weight = |(i, j): (usize, usize)| w.gamma(i) + w.lambda(j);
    let mut profiles = Vec::new();
    for (kept, quotient) in shape.subset_pairs() {
        let mut profile = SignProfile::default();
        for &a in &kept {
            for b in (1..=r).filter(|b| !kept.contains(b)) {
                profile.record(w.lambda(a) - w.lambda(b))?;
            }
        }
        for &a in &quotient {
            for &b in cells.iter().filter(|c| !quotient.contains(c)) {
                profile.record(cell_weight(a) - cell_weight(b))?;
            }
        }
        profiles.push(profile);
    }
    poincare_from_profiles(&profiles, "product Grassmannian")
}

/// `[r choose m]_q * [n m choose s]_q`.
pub fn expected_r_circ_poincare(r: usize, m: usize, s: usize, n: usize) -> Result<IntPolynomial> {
    Shape::new(r, m, s, n)?;
    Ok(gaussian_binomial(r as i64, m as i64)? * gaussian_binomial((n * m) as i64, s as i64)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn weight_validation() {
        assert!(WeightAssignment::new(vec![1, 2], vec![3, 6]).is_ok());
        assert!(WeightAssignment::new(vec![0, 2], vec![3, 6]).is_err());
        assert!(WeightAssignment::new(vec![2, 2], vec![3, 6]).is_err());
        assert!(WeightAssignment::new(vec![1, 2], vec![2, 6]).is_err());
        assert!(WeightAssignment::new(vec![1, 2], vec![3, 5]).is_err());
        assert!(WeightAssignment::new(vec![], vec![3]).is_err());
        let w = WeightAssignment::standard(3, 2);
        assert_eq!(
            WeightAssignment::new(w.lambda.clone(), w.gamma.clone()).unwrap(),
            w
        );
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_r_fixed_points(2, 2, 2, 2).unwrap().len(), 6);
        let single = enumerate_r_fixed_points(1, 1, 0, 1).unwrap();
        assert_eq!(
            single,
            vec![RCellFixedPoint {
                generators: vec![1],
                positions: vec![]
            }]
        );
        assert_eq!(enumerate_r_fixed_points(3, 1, 2, 2).unwrap().len(), 3);
        assert!(enumerate_r_fixed_points(2, 3, 0, 1).is_err());
        assert!(enumerate_r_fixed_points(2, 1, 3, 2).is_err());
    }

    #[test]
    fn sign_profile_examples() {
        let w = WeightAssignment::new(vec![1, 2], vec![3]).unwrap();
        let low = RCellFixedPoint {
            generators: vec![1],
            positions: vec![],
        };
        let high = RCellFixedPoint {
            generators: vec![2],
            positions: vec![],
        };
        assert_eq!(
            tangent_sign_profile(&low, &w).unwrap(),
            SignProfile {
                positive: 0,
                negative: 1
            }
        );
        assert_eq!(
            tangent_sign_profile(&high, &w).unwrap(),
            SignProfile {
                positive: 1,
                negative: 0
            }
        );
    }

    #[test]
    fn poincare_examples() {
        let w = WeightAssignment::new(vec![1, 2], vec![3, 6]).unwrap();
        assert_eq!(
            r_circ_poincare(2, 2, 2, 2, &w).unwrap(),
            p(&[1, 1, 2, 1, 1])
        );
        assert_eq!(
            product_grassmannian_profile(2, 2, 2, 2, &w).unwrap(),
            p(&[1, 1, 2, 1, 1])
        );
        let w3 = WeightAssignment::standard(3, 1);
        assert_eq!(r_circ_poincare(3, 2, 2, 1, &w3).unwrap(), p(&[1, 1, 1]));
        let w1 = WeightAssignment::standard(1, 1);
        assert_eq!(r_circ_poincare(1, 1, 0, 1, &w1).unwrap(), p(&[1]));
        let w21 = WeightAssignment::standard(2, 1);
        assert_eq!(
            product_grassmannian_profile(2, 1, 1, 1, &w21).unwrap(),
            p(&[1, 1])
        );
    }

    #[test]
    fn weights_must_match_shape() {
        let w = WeightAssignment::standard(2, 2);
        assert!(r_circ_poincare(3, 2, 2, 2, &w).is_err());
        assert!(product_grassmannian_profile(2, 2, 2, 1, &w).is_err());
    }

    #[test]
    fn profile_counts_total_tangent_dimension() {
        let w = WeightAssignment::standard(4, 2);
        for m in 0..=4 {
            for s in 0..=2 * m {
                let shape = Shape::new(4, m, s, 2).unwrap();
                for (_, prof) in r_circ_profiles(4, m, s, 2, &w).unwrap() {
                    assert_eq!(prof.positive + prof.negative, shape.tangent_dim());
                }
            }
        }
    }

    #[test]
    fn position_move_sign_depends_on_one_weight_family() {
        let w = WeightAssignment::new(vec![2, 3, 7], vec![9, 20, 31]).unwrap();
        for fp in enumerate_r_fixed_points(3, 2, 2, 3).unwrap() {
            for (mv, ch) in tangent_moves(&fp, &w).unwrap() {
                if let TangentMove::Position {
                    from: (i, j),
                    to: (i2, j2),
                } = mv
                {
                    let lambda_part =
                        w.lambda(fp.generators[j - 1]) - w.lambda(fp.generators[j2 - 1]);
                    let gamma_part = w.gamma(i) - w.gamma(i2);
                    if i == i2 {
                        assert_eq!(ch.signum(), lambda_part.signum());
                    } else {
                        assert_eq!(ch.signum(), gamma_part.signum());
                    }
                }
            }
        }
    }

    #[test]
    fn malformed_fixed_points_are_rejected() {
        let w = WeightAssignment::standard(3, 2);
        let unsorted = RCellFixedPoint {
            generators: vec![2, 1],
            positions: vec![],
        };
        assert!(tangent_sign_profile(&unsorted, &w).is_err());
        let outside = RCellFixedPoint {
            generators: vec![1],
            positions: vec![(1, 2)],
        };
        assert!(tangent_sign_profile(&outside, &w).is_err());
    }
}
