//! The square-zero spaces `W_{d-k,k}` of block matrices with support in the
//! top-right `(d-k) x k` block, and a structural recogniser for algebras of
//! the form `<Id> + (square-zero ideal)`.

use super::algebra::{closure_unchecked, Algebra};
use super::matrix::{check_prime, rank_of, EchelonSpace, MatrixModP};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WSpace {
    d: usize,
    k: usize,
}

/// `W_{d-k,k}`: matrices supported on the first `d - k` rows and the last `k`
/// columns. Requires `0 < k < d`.
pub fn w_space(d: usize, k: usize) -> Result<WSpace> {
    if k == 0 || k >= d {
        return Err(Error::invalid(format!(
            "W-space needs 0 < k < d, got d = {d}, k = {k}"
        )));
    }
    Ok(WSpace { d, k })
}

impl WSpace {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.k * (self.d - self.k)
    }

    /// Matrix units spanning the space.
    pub fn basis(&self, p: u32) -> Result<Vec<MatrixModP>> {
        check_prime(p)?;
        let (d, k) = (self.d, self.k);
        Ok((0..d - k)
            .flat_map(|i| (d - k..d).map(move |j| MatrixModP::unit(p, d, i, j)))
            .collect())
    }

    /// `<Id> + W`.
    pub fn algebra(&self, p: u32) -> Result<Algebra> {
        Ok(closure_unchecked(p, self.d, &self.basis(p)?))
    }
}

/// Whether `alg = <Id> + m` where `m` consists of strictly upper-triangular
/// matrices with `m^2 = 0`, whose common kernel has dimension at least
/// `d - r` and whose images together span at most `d - r` dimensions.
pub fn is_id_plus_square_zero(alg: &Algebra, r: usize) -> bool {
    let (p, d) = (alg.p(), alg.d());
    if r > d {
        return false;
    }
    let mut m_space = EchelonSpace::new(p, d * d);
    let mut m = Vec::new();
    for b in alg.basis() {
        let nil = b.sub_scalar(b.get(0, 0));
        if !nil.is_strictly_upper() {
            return false;
        }
        if m_space.insert(nil.as_vector()) {
            m.push(nil);
        }
    }
    if m.len() + 1 != alg.dim() {
        return false;
    }
    if m.iter().any(|x| m.iter().any(|y| !x.mul(y).is_zero())) {
        return false;
    }
    let stacked_rank = rank_of(
        p,
        d,
        m.iter()
            .flat_map(|x| x.rows().map(<[u32]>::to_vec).collect::<Vec<_>>()),
    );
    let image_rank = rank_of(p, d, m.iter().flat_map(|x| x.columns().collect::<Vec<_>>()));
    d - stacked_rank >= d - r && image_rank <= d - r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::ffield::algebra::spanning_index;

    #[test]
    fn w_space_laws() {
        for d in 2..=6 {
            for k in 1..d {
                let w = w_space(d, k).unwrap();
                let basis = w.basis(2).unwrap();
                assert_eq!(basis.len(), k * (d - k));
                for x in &basis {
                    for y in &basis {
                        assert!(x.mul(y).is_zero());
                    }
                }
                assert_eq!(w.algebra(2).unwrap().dim(), k * (d - k) + 1);
            }
        }
        assert!(w_space(3, 0).is_err());
        assert!(w_space(3, 3).is_err());
    }

    #[test]
    fn w_space_spanning_index_small() {
        for d in 2..=4 {
            for k in 1..d {
                let a = w_space(d, k).unwrap().algebra(2).unwrap();
                assert_eq!(spanning_index(&a, Budget::default()).unwrap(), k);
            }
        }
    }

    #[test]
    fn structural_recogniser() {
        let a = w_space(4, 2).unwrap().algebra(3).unwrap();
        assert!(is_id_plus_square_zero(&a, 2));
        assert!(!is_id_plus_square_zero(&a, 1));
        let j = MatrixModP::from_rows(2, &[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]).unwrap();
        let jordan = closure_unchecked(2, 3, &[j]);
        assert!(!is_id_plus_square_zero(&jordan, 3));
        let diag = MatrixModP::from_rows(2, &[&[1, 0], &[0, 0]]).unwrap();
        assert!(!is_id_plus_square_zero(
            &closure_unchecked(2, 2, &[diag]),
            2
        ));
    }
}
