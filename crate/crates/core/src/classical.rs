//! Alexander polynomial, determinant and the Jones chirality test.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::diagram::{Diagram, Sign};
use crate::laurent::{Coefficient, LaurentPoly};
use crate::matrix;

/// Arc index of every edge: arcs are the over-strand runs between
/// consecutive under-passages, numbered from the arc leaving edge `c` of
/// crossing 0.
pub fn arc_labels(d: &Diagram) -> Vec<usize> {
    let m = d.edge_count();
    if m == 0 {
        return Vec::new();
    }
    let mut starts_arc = vec![false; m + 1];
    for x in d.crossings() {
        starts_arc[x[2] as usize] = true;
    }
    let first = d.crossings()[0][2] as usize;
    let mut arc = vec![0; m + 1];
    let mut id = 0;
    for i in 0..m {
        let l = (first - 1 + i) % m + 1;
        if starts_arc[l] && i > 0 {
            id += 1;
        }
        arc[l] = id;
    }
    arc
}

/// Alexander matrix in `t`: one row per crossing, one column per arc.
pub fn alexander_matrix<C: Coefficient>(d: &Diagram) -> Vec<Vec<LaurentPoly<C>>> {
    let n = d.crossing_count();
    let arc = arc_labels(d);
    let t = LaurentPoly::<C>::var();
    let one = LaurentPoly::<C>::one();
    let mut m = vec![vec![LaurentPoly::zero(); n]; n];
    for (k, &[a, b, c, _]) in d.crossings().iter().enumerate() {
        let (into, out) = match d.sign(k) {
            Sign::Positive => (t.clone(), -one.clone()),
            Sign::Negative => (-one.clone(), t.clone()),
        };
        m[k][arc[b as usize]] += &(&one - &t);
        m[k][arc[a as usize]] += &into;
        m[k][arc[c as usize]] += &out;
    }
    m
}

/// Alexander polynomial, normalized so that `D(t) = D(1/t)` and `D(1) = 1`.
pub fn alexander_with<C: Coefficient>(d: &Diagram) -> LaurentPoly<C> {
    let n = d.crossing_count();
    if n == 0 {
        return LaurentPoly::one();
    }
    let minor: Vec<Vec<LaurentPoly<C>>> = alexander_matrix::<C>(d)
        .into_iter()
        .take(n - 1)
        .map(|mut r| {
            r.truncate(n - 1);
            r
        })
        .collect();
    normalize_alexander(&matrix::determinant(minor))
}

/// Alexander polynomial with exact integer coefficients.
pub fn alexander(d: &Diagram) -> LaurentPoly<BigInt> {
    alexander_with(d)
}

/// Fixes the unit `+-t^k`: centres the support on exponent 0 and makes the
/// value at 1 positive.
pub fn normalize_alexander<C: Coefficient>(p: &LaurentPoly<C>) -> LaurentPoly<C> {
    let (Some(lo), Some(hi)) = (p.min_exp(), p.max_exp()) else {
        return p.clone();
    };
    let shift = -(lo + hi).div_euclid(2);
    let at_one = p.terms().fold(C::zero(), |acc, (_, c)| acc + c.clone());
    let sign = if at_one.is_negative() { -C::one() } else { C::one() };
    p.mono_mul(&sign, shift)
}

/// `|D(-1)|`.
pub fn determinant(d: &Diagram) -> BigInt {
    let v = alexander(d).eval(&BigInt::from(-1)).expect("nonzero point");
    v.to_integer().abs()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Chirality {
    /// `V(t) = V(1/t)`; says nothing about amphicheirality.
    Symmetric,
    /// `V(t) != V(1/t)`, so the knot differs from its mirror image.
    ChiralCertified,
}

pub fn chirality_from_jones<C: Coefficient>(v: &LaurentPoly<C>) -> Chirality {
    if *v == v.substitute_inverse() {
        Chirality::Symmetric
    } else {
        Chirality::ChiralCertified
    }
}

pub fn jones_chirality_obstruction(d: &Diagram) -> Chirality {
    chirality_from_jones(&crate::bracket::jones(d))
}
