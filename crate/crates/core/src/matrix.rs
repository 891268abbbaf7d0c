//! Fraction-free determinants over exact integral domains.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::laurent::{Coefficient, LaurentPoly};

/// An integral domain with exact division, enough for Bareiss elimination.
pub trait ExactRing: Clone + PartialEq + Zero + One {
    fn mul_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// `self / d`, where `d` is known to divide `self`.
    fn div_exact_ref(&self, d: &Self) -> Self;
}

macro_rules! exact_ring_int {
    ($($t:ty),*) => {$(
        impl ExactRing for $t {
            fn mul_ref(&self, other: &Self) -> Self {
                self * other
            }
            fn sub_ref(&self, other: &Self) -> Self {
                self - other
            }
            fn neg_ref(&self) -> Self {
                -self
            }
            fn div_exact_ref(&self, d: &Self) -> Self {
                debug_assert!((self % d).is_zero(), "inexact division");
                self / d
            }
        }
    )*};
}

exact_ring_int!(i64, i128, BigInt);

impl<C: Coefficient> ExactRing for LaurentPoly<C> {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn div_exact_ref(&self, d: &Self) -> Self {
        self.div_exact(d).expect("Bareiss step divides exactly")
    }
}

/// Determinant of a square matrix by Bareiss elimination with row pivoting.
/// The empty matrix has determinant 1.
pub fn determinant<R: ExactRing>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return R::zero();
            };
            m.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[k][k].mul_ref(&m[i][j]).sub_ref(&m[i][k].mul_ref(&m[k][j]));
                m[i][j] = v.div_exact_ref(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let det = if n == 0 { R::one() } else { m[n - 1][n - 1].clone() };
    if negate {
        det.neg_ref()
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Poly64;
    use proptest::prelude::*;

    fn cofactor(m: &[Vec<i128>]) -> i128 {
        if m.is_empty() {
            return 1;
        }
        (0..m.len())
            .map(|j| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| *v).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * cofactor(&minor)
            })
            .sum()
    }

    #[test]
    fn small_integer_matrices() {
        assert_eq!(determinant::<i64>(vec![]), 1);
        assert_eq!(determinant(vec![vec![0i64, 1], vec![1, 0]]), -1);
        assert_eq!(determinant(vec![vec![2i64, 0, 1], vec![1, 3, 2], vec![1, 1, 2]]), 6);
        assert_eq!(determinant(vec![vec![1i64, 2], vec![2, 4]]), 0);
        let big = vec![vec![BigInt::from(3), BigInt::from(1)], vec![BigInt::from(1), BigInt::from(2)]];
        assert_eq!(determinant(big), BigInt::from(5));
    }

    #[test]
    fn polynomial_matrix() {
        let t = Poly64::var();
        let one = Poly64::one();
        // [[t, -1], [1 - t, t]] -> t^2 - t + 1
        let m = vec![vec![t.clone(), -one.clone()], vec![&one - &t, t.clone()]];
        assert_eq!(determinant(m), Poly64::parse("t^2 - t + 1", 't').unwrap());
    }

    proptest! {
        #[test]
        fn agrees_with_cofactor_expansion(n in 0usize..6, cells in proptest::collection::vec(-6i128..6, 36)) {
            let m: Vec<Vec<i128>> = (0..n).map(|i| cells[i * 6..i * 6 + n].to_vec()).collect();
            prop_assert_eq!(determinant(m.clone()), cofactor(&m));
        }
    }
}
