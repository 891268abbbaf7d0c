//! Exact Laurent polynomials in one variable.
//!
//! A [`LaurentPoly`] is a finite map from integer exponents to nonzero
//! coefficients. Every constructor and operation leaves the map in canonical
//! form (no stored zero), so derived equality is polynomial equality.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, One, Signed, Zero};
use thiserror::Error;

/// Integer-like scalar usable as a coefficient.
///
/// Implemented for every signed integer type that `num` knows about; the
/// crate aliases pick [`num_bigint::BigInt`] where exactness matters.
pub trait Coefficient:
    Clone + fmt::Debug + fmt::Display + Eq + Ord + Hash + Integer + Signed + FromPrimitive + FromStr + Send + Sync + 'static
{
}

impl<T> Coefficient for T where
    T: Clone
        + fmt::Debug
        + fmt::Display
        + Eq
        + Ord
        + Hash
        + Integer
        + Signed
        + FromPrimitive
        + FromStr
        + Send
        + Sync
        + 'static
{
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("cannot evaluate a Laurent polynomial at 0")]
    EvalAtZero,
    #[error("malformed polynomial {text:?} at byte {pos}: {reason}")]
    Parse { text: String, pos: usize, reason: &'static str },
}

fn add_exp(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("Laurent exponent overflow")
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly<C> {
    terms: BTreeMap<i64, C>,
}

impl<C: Coefficient> LaurentPoly<C> {
    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * x^e`.
    pub fn monomial(c: C, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    /// The variable itself, `x`.
    pub fn var() -> Self {
        Self::monomial(C::one(), 1)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    /// Adds `c * x^e` in place.
    pub fn add_term(&mut self, e: i64, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &C)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: i64) -> C {
        self.terms.get(&e).cloned().unwrap_or_else(C::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `max exponent - min exponent`; `None` for the zero polynomial.
    pub fn span(&self) -> Option<i64> {
        Some(self.max_exp()? - self.min_exp()?)
    }

    /// Coefficients at the lowest and highest exponent; `None` for zero.
    pub fn extreme_coeffs(&self) -> Option<(C, C)> {
        let lo = self.terms.values().next()?.clone();
        let hi = self.terms.values().next_back()?.clone();
        Some((lo, hi))
    }

    /// Multiplies by the monomial `c * x^e`.
    pub fn mono_mul(&self, c: &C, e: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(k, v)| (add_exp(*k, e), v.clone() * c.clone())).collect() }
    }

    /// Multiplies every exponent by `-1`, i.e. substitutes `x -> x^-1`.
    pub fn substitute_inverse(&self) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.checked_neg().expect("Laurent exponent overflow"), v.clone()))
                .collect(),
        }
    }

    /// Rewrites exponents through `f`; returns `None` as soon as `f` does.
    /// `f` must be injective on the support.
    pub fn map_exponents(&self, f: impl Fn(i64) -> Option<i64>) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (k, v) in &self.terms {
            let prev = terms.insert(f(*k)?, v.clone());
            debug_assert!(prev.is_none(), "exponent map must be injective");
        }
        Some(LaurentPoly { terms })
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> LaurentPoly<D> {
        LaurentPoly::from_terms(self.terms.iter().map(|(k, v)| (*k, f(v))))
    }

    /// Exact value at a nonzero integer point.
    pub fn eval(&self, x: &C) -> Result<Ratio<C>, PolyError> {
        if x.is_zero() {
            return Err(PolyError::EvalAtZero);
        }
        let Some(lo) = self.min_exp() else {
            return Ok(Ratio::from_integer(C::zero()));
        };
        // Horner on x^-lo * p, which has only non-negative exponents.
        let hi = self.max_exp().unwrap();
        let mut acc = C::zero();
        let mut e = hi;
        loop {
            acc = acc + self.coeff(e);
            if e == lo {
                break;
            }
            acc = acc * x.clone();
            e -= 1;
        }
        let shift = usize::try_from(lo.unsigned_abs()).expect("exponent too large to evaluate");
        let scale = num_traits::pow(x.clone(), shift);
        Ok(if lo >= 0 { Ratio::from_integer(acc * scale) } else { Ratio::new(acc, scale) })
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`
    /// in `Z[x, x^-1]`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (d_lo, d_hi) = (d.min_exp()?, d.max_exp()?);
        let d_lead = d.terms[&d_hi].clone();
        let Some(self_lo) = self.min_exp() else {
            return Some(Self::zero());
        };
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(r_hi) = rem.max_exp() {
            let q_exp = r_hi - d_hi;
            // every quotient term satisfies q_exp + d_lo >= self_lo
            if q_exp + d_lo < self_lo {
                return None;
            }
            let (q, r) = rem.terms[&r_hi].div_rem(&d_lead);
            if !r.is_zero() {
                return None;
            }
            rem -= &d.mono_mul(&q, q_exp);
            quot.add_term(q_exp, q);
        }
        Some(quot)
    }

    /// Text form in decreasing exponent order, e.g. `-t^2 + 3 - 2*t^-1`.
    pub fn render(&self, var: char) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mag = c.abs();
            if *e == 0 {
                out.push_str(&mag.to_string());
                continue;
            }
            if !mag.is_one() {
                out.push_str(&mag.to_string());
                out.push('*');
            }
            out.push(var);
            if *e != 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
        out
    }

    /// Parses the [`render`](Self::render) grammar. Also accepts `x^(-2)`,
    /// implicit multiplication (`2t`) and arbitrary whitespace.
    pub fn parse(text: &str, var: char) -> Result<Self, PolyError> {
        Parser { text, bytes: text.as_bytes(), pos: 0, var }.parse()
    }
}

struct Parser<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
    var: char,
}

impl Parser<'_> {
    fn err<T>(&self, reason: &'static str) -> Result<T, PolyError> {
        Err(PolyError::Parse { text: self.text.to_string(), pos: self.pos, reason })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn digits(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }

    fn exponent(&mut self) -> Result<i64, PolyError> {
        let paren = self.peek() == Some(b'(');
        if paren {
            self.pos += 1;
        }
        let neg = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let ds = self.digits();
        if ds.is_empty() {
            return self.err("expected exponent digits");
        }
        let Ok(mut e) = ds.parse::<i64>() else {
            return self.err("exponent out of range");
        };
        if neg {
            e = -e;
        }
        if paren {
            if self.peek() != Some(b')') {
                return self.err("expected ')'");
            }
            self.pos += 1;
        }
        Ok(e)
    }

    fn parse<C: Coefficient>(mut self) -> Result<LaurentPoly<C>, PolyError> {
        let mut p = LaurentPoly::zero();
        let mut first = true;
        let var = self.var as u32 as u8;
        loop {
            let neg = match self.peek() {
                None if first => return self.err("empty polynomial"),
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                Some(_) if first => false,
                Some(_) => return self.err("expected '+' or '-'"),
            };
            first = false;
            let ds = self.digits().to_string();
            let mut coeff = if ds.is_empty() {
                None
            } else {
                match ds.parse::<C>() {
                    Ok(c) => Some(c),
                    Err(_) => return self.err("bad coefficient"),
                }
            };
            if coeff.is_some() && self.peek() == Some(b'*') {
                self.pos += 1;
                if self.peek() != Some(var) {
                    return self.err("expected variable after '*'");
                }
            }
            let mut exp = 0;
            if self.peek() == Some(var) {
                self.pos += 1;
                exp = 1;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    exp = self.exponent()?;
                }
            } else if coeff.is_none() {
                return self.err("expected coefficient or variable");
            }
            let mut c = coeff.take().unwrap_or_else(C::one);
            if neg {
                c = -c;
            }
            p.add_term(exp, c);
        }
        Ok(p)
    }
}

impl<C: Coefficient> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render('t'))
    }
}

impl<C: Coefficient> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self.render('x'))
    }
}

impl<C: Coefficient> FromStr for LaurentPoly<C> {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s, 't')
    }
}

impl<C: Coefficient> Zero for LaurentPoly<C> {
    fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coefficient> One for LaurentPoly<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<C: Coefficient> AddAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn add_assign(&mut self, rhs: &LaurentPoly<C>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<C: Coefficient> SubAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn sub_assign(&mut self, rhs: &LaurentPoly<C>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl<C: Coefficient> Add<&LaurentPoly<C>> for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn add(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coefficient> Add for LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn add(mut self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
        self += &rhs;
        self
    }
}

impl<C: Coefficient> Sub<&LaurentPoly<C>> for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn sub(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Coefficient> Sub for LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn sub(mut self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
        self -= &rhs;
        self
    }
}

impl<C: Coefficient> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl<C: Coefficient> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn neg(self) -> LaurentPoly<C> {
        self.clone().neg()
    }
}

impl<C: Coefficient> Mul<&LaurentPoly<C>> for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn mul(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(add_exp(*e1, *e2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Mul for LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn mul(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
        &self * &rhs
    }
}

impl<C: Coefficient> MulAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn mul_assign(&mut self, rhs: &LaurentPoly<C>) {
        *self = &*self * rhs;
    }
}

impl<C: Coefficient> Sum for LaurentPoly<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl<C: Coefficient> Product for LaurentPoly<C> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, p| &acc * &p)
    }
}

impl<C: Coefficient> serde::Serialize for LaurentPoly<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.render('t'))
    }
}

impl<'de, C: Coefficient> serde::Deserialize<'de> for LaurentPoly<C> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Self::parse(&s, 't').map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    type P = LaurentPoly<BigInt>;

    fn p(s: &str) -> P {
        s.parse().unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn add_cancels_to_canonical_form() {
        assert_eq!(p("t + 1") + p("-1"), p("t"));
        assert_eq!(P::zero() + p("3*t^2 - t^-1"), p("3*t^2 - t^-1"));
        assert_eq!(p("t^-1 + t") + p("t^-1 - t"), p("2*t^-1"));
        assert_eq!((p("t") + p("-t")).num_terms(), 0);
    }

    #[test]
    fn multiplication() {
        assert_eq!(p("t - 1") * p("t + 1"), p("t^2 - 1"));
        assert_eq!(p("t^3 - 2 + t^-5") * P::one(), p("t^3 - 2 + t^-5"));
        let a: P = LaurentPoly::parse("-A^3", 'A').unwrap();
        let b: P = LaurentPoly::parse("-A^-3", 'A').unwrap();
        assert_eq!(a * b, P::one());
    }

    #[test]
    fn mono_mul_shifts_and_scales() {
        assert_eq!(p("t + 1").mono_mul(&big(1), -4), p("t^-3 + t^-4"));
        assert_eq!(p("2*t - 7").mono_mul(&big(1), 0), p("2*t - 7"));
        assert_eq!(P::one().mono_mul(&big(-1), 3), p("-t^3"));
        assert_eq!(p("t").mono_mul(&big(0), 3), P::zero());
    }

    #[test]
    fn substitute_inverse_negates_exponents() {
        assert_eq!(p("t^2 - t + 1").substitute_inverse(), p("t^-2 - t^-1 + 1"));
        assert_eq!(p("-t^-4 + t^-3 + t^-1").substitute_inverse(), p("-t^4 + t^3 + t"));
        let q = p("5*t^7 - t^-2 + 3");
        assert_eq!(q.substitute_inverse().substitute_inverse(), q);
    }

    #[test]
    fn span_and_extremes() {
        let trefoil = p("-t^-4 + t^-3 + t^-1");
        assert_eq!(trefoil.span(), Some(3));
        assert_eq!(P::one().span(), Some(0));
        assert_eq!(P::zero().span(), None);
        assert_eq!(trefoil.extreme_coeffs(), Some((big(-1), big(1))));
        assert_eq!(P::one().extreme_coeffs(), Some((big(1), big(1))));
        assert_eq!(p("3*t^2").extreme_coeffs(), Some((big(3), big(3))));
        assert_eq!(P::zero().extreme_coeffs(), None);
    }

    #[test]
    fn eval_is_exact() {
        assert_eq!(p("t^-1 + t").eval(&big(1)).unwrap(), Ratio::from_integer(big(2)));
        assert_eq!(p("t - 3 + t^-1").eval(&big(-1)).unwrap(), Ratio::from_integer(big(-5)));
        assert_eq!(P::zero().eval(&big(7)).unwrap(), Ratio::from_integer(big(0)));
        assert_eq!(p("t^-2").eval(&big(2)).unwrap(), Ratio::new(big(1), big(4)));
        assert_eq!(p("t^-1 + t^3").eval(&big(-2)).unwrap(), Ratio::new(big(-17), big(2)));
        assert_eq!(p("t").eval(&big(0)), Err(PolyError::EvalAtZero));
        assert_eq!(P::zero().eval(&big(0)), Err(PolyError::EvalAtZero));
    }

    #[test]
    fn render_format() {
        assert_eq!(p("-t^-4 + t^-3 + t^-1").to_string(), "t^-1 + t^-3 - t^-4");
        assert_eq!(p("t^-2 - t^-1 + 1 - t + t^2").to_string(), "t^2 - t + 1 - t^-1 + t^-2");
        assert_eq!(p("-1").to_string(), "-1");
        assert_eq!(p("-2*t^3 + 5").to_string(), "-2*t^3 + 5");
        assert_eq!(P::zero().to_string(), "0");
        let a: P = LaurentPoly::parse("-A^-3", 'A').unwrap();
        assert_eq!(a.render('A'), "-A^-3");
    }

    #[test]
    fn parse_accepts_table_style() {
        assert_eq!(p("t^(-2)-t^(-1)+ 1-t+ t^2"), p("t^2 - t + 1 - t^-1 + t^-2"));
        assert_eq!(p("1-3*t+ t^2"), p("t^2 - 3*t + 1"));
        assert_eq!(p("2t^3"), p("2*t^3"));
        assert_eq!(p("t + t"), p("2*t"));
        assert_eq!(p("0"), P::zero());
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "t^", "3*", "t t", "x + 1", "t^(2", "+-t"] {
            assert!(P::parse(bad, 't').is_err(), "{bad:?} should be rejected");
        }
    }

    #[test]
    fn div_exact() {
        let a = p("t^2 - 1");
        assert_eq!(a.div_exact(&p("t - 1")), Some(p("t + 1")));
        assert_eq!(p("t^-3 - t^-1").div_exact(&p("t^-2 - 1")), Some(p("t^-1")));
        assert_eq!(p("t^2 + 1").div_exact(&p("t - 1")), None);
        assert_eq!(p("t + 1").div_exact(&p("2")), None);
        assert_eq!(p("4*t + 2").div_exact(&p("2")), Some(p("2*t + 1")));
        assert_eq!(P::zero().div_exact(&p("t")), Some(P::zero()));
        assert_eq!(p("t").div_exact(&P::zero()), None);
    }

    #[test]
    fn works_over_machine_integers() {
        let a: LaurentPoly<i64> = "t - 1".parse().unwrap();
        let b: LaurentPoly<i64> = "t + 1".parse().unwrap();
        assert_eq!((&a * &b).to_string(), "t^2 - 1");
        assert_eq!(a.map_coeffs(|c| BigInt::from(*c)), p("t - 1"));
    }

    fn poly() -> impl Strategy<Value = P> {
        prop::collection::vec((-6i64..6, -5i64..=5), 0..6)
            .prop_map(|ts| P::from_terms(ts.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
    }

    fn nonzero_poly() -> impl Strategy<Value = P> {
        poly().prop_filter("nonzero", |p| !p.is_zero())
    }

    proptest! {
        #[test]
        fn ring_axioms(a in poly(), b in poly(), c in poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, P::zero());
        }

        #[test]
        fn span_is_additive(a in nonzero_poly(), b in nonzero_poly()) {
            prop_assert_eq!((&a * &b).span(), Some(a.span().unwrap() + b.span().unwrap()));
        }

        #[test]
        fn inverse_substitution_is_a_homomorphism(a in poly(), b in poly()) {
            prop_assert_eq!((&a + &b).substitute_inverse(), &a.substitute_inverse() + &b.substitute_inverse());
            prop_assert_eq!((&a * &b).substitute_inverse(), &a.substitute_inverse() * &b.substitute_inverse());
        }

        #[test]
        fn evaluation_is_multiplicative(a in poly(), b in poly(), x in prop_oneof![-4i64..=-1, 1i64..=4]) {
            let x = BigInt::from(x);
            prop_assert_eq!((&a * &b).eval(&x).unwrap(), a.eval(&x).unwrap() * b.eval(&x).unwrap());
        }

        #[test]
        fn render_parse_round_trip(a in poly()) {
            prop_assert_eq!(P::parse(&a.render('A'), 'A').unwrap(), a.clone());
            prop_assert_eq!(a.to_string().parse::<P>().unwrap(), a);
        }

        #[test]
        fn div_exact_inverts_mul(a in poly(), b in nonzero_poly()) {
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
        }
    }
}
