use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ArithError;

/// Exponent pair of a monomial `α^alpha · s^s`.
///
/// The derived ordering is lexicographic on `(alpha, s)`, which is the term
/// order used for serialization and for the canonical sign of denominators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exp {
    pub alpha: i32,
    pub s: i32,
}

impl Exp {
    pub const ZERO: Exp = Exp { alpha: 0, s: 0 };

    pub fn new(alpha: i32, s: i32) -> Self {
        Exp { alpha, s }
    }
}

impl Add for Exp {
    type Output = Exp;

    fn add(self, rhs: Exp) -> Exp {
        Exp::new(self.alpha + rhs.alpha, self.s + rhs.s)
    }
}

/// Sparse Laurent polynomial in `α` and `s` with big-integer coefficients.
///
/// No stored coefficient is ever zero, so two polynomials are equal exactly
/// when their term maps are equal. The zero polynomial has no terms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Exp, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, alpha: i32, s: i32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exp::new(alpha, s), c);
        }
        LaurentPoly { terms }
    }

    /// The variable `α`.
    pub fn alpha() -> Self {
        Self::monomial(1, 1, 0)
    }

    /// The variable `s`.
    pub fn s() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// Builds a polynomial from `(coefficient, α-exponent, s-exponent)` triples,
    /// summing repeated exponents.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (C, i32, i32)>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly::zero();
        for (c, a, s) in terms {
            p.add_term(Exp::new(a, s), c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Exp::ZERO).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, alpha: i32, s: i32) -> BigInt {
        self.terms
            .get(&Exp::new(alpha, s))
            .cloned()
            .unwrap_or_default()
    }

    /// The lexicographically least term.
    pub fn least_term(&self) -> Option<(&Exp, &BigInt)> {
        self.terms.iter().next()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// True when no term involves `α`.
    pub fn is_alpha_free(&self) -> bool {
        self.terms.keys().all(|e| e.alpha == 0)
    }

    /// Componentwise minimum exponents, `None` for the zero polynomial.
    pub fn min_exponents(&self) -> Option<Exp> {
        self.fold_exponents(i32::min)
    }

    /// Componentwise maximum exponents, `None` for the zero polynomial.
    pub fn max_exponents(&self) -> Option<Exp> {
        self.fold_exponents(i32::max)
    }

    fn fold_exponents(&self, f: fn(i32, i32) -> i32) -> Option<Exp> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        Some(it.fold(first, |acc, e| Exp::new(f(acc.alpha, e.alpha), f(acc.s, e.s))))
    }

    /// Multiplies by the monomial `α^da · s^ds`.
    pub fn shift(&self, da: i32, ds: i32) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (Exp::new(e.alpha + da, e.s + ds), c.clone()))
            .collect();
        LaurentPoly { terms }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return LaurentPoly::zero();
        }
        let terms = self.terms.iter().map(|(e, c)| (*e, c * k)).collect();
        LaurentPoly { terms }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = LaurentPoly::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The substitution `(α, s) → (α⁻¹, s⁻¹)` on exponents.
    pub fn mirror(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (Exp::new(-e.alpha, -e.s), c.clone()))
            .collect();
        LaurentPoly { terms }
    }

    /// Maps every exponent through `f`, summing collisions.
    pub fn map_exponents(&self, f: impl Fn(Exp) -> (Exp, bool)) -> Self {
        let mut out = LaurentPoly::zero();
        for (e, c) in &self.terms {
            let (e2, negate) = f(*e);
            out.add_term(e2, if negate { -c } else { c.clone() });
        }
        out
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, alpha: &BigRational, s: &BigRational) -> Result<BigRational, ArithError> {
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let a = rational_pow(alpha, e.alpha)?;
            let b = rational_pow(s, e.s)?;
            total += BigRational::from_integer(c.clone()) * a * b;
        }
        Ok(total)
    }

    pub(crate) fn add_term(&mut self, e: Exp, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub(crate) fn add_scaled(&mut self, other: &LaurentPoly, k: &BigInt) {
        for (e, c) in &other.terms {
            self.add_term(*e, c * k);
        }
    }

    /// Leading coefficient sign in the lexicographically least term.
    pub(crate) fn least_is_negative(&self) -> bool {
        self.least_term().is_some_and(|(_, c)| c.is_negative())
    }
}

fn rational_pow(x: &BigRational, n: i32) -> Result<BigRational, ArithError> {
    if n >= 0 {
        Ok(num_traits::pow(x.clone(), n as usize))
    } else if x.is_zero() {
        Err(ArithError::Pole)
    } else {
        Ok(num_traits::pow(x.recip(), n.unsigned_abs() as usize))
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (e, c) in &small.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut acc: BTreeMap<Exp, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                *acc.entry(*e1 + *e2).or_default() += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        LaurentPoly { terms: acc }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(e, c)| (*e, -c)).collect();
        LaurentPoly { terms }
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $tr:ident, $method:ident) => {
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &'a $ty) -> $ty {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<$ty> for &'a $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                self.$method(&rhs)
            }
        }
    };
}
pub(crate) use forward_owned_binop;

forward_owned_binop!(LaurentPoly, Add, add);
forward_owned_binop!(LaurentPoly, Sub, sub);
forward_owned_binop!(LaurentPoly, Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render::plain_poly(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i32, i32)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn zero_coefficients_are_never_stored() {
        let a = p(&[(1, 0, 1), (-1, 0, 1)]);
        assert!(a.is_zero());
        let b = p(&[(2, 1, 0)]) - p(&[(2, 1, 0)]);
        assert!(b.is_zero());
        assert_eq!(b, LaurentPoly::zero());
    }

    #[test]
    fn difference_of_squares() {
        let s_plus = p(&[(1, 0, 1), (1, 0, -1)]);
        let s_minus = p(&[(1, 0, 1), (-1, 0, -1)]);
        assert_eq!(&s_plus * &s_minus, p(&[(1, 0, 2), (-1, 0, -2)]));
    }

    #[test]
    fn pow_matches_repeated_product() {
        let x = p(&[(1, 1, 0), (-1, 0, 1), (3, -1, 2)]);
        let mut expect = LaurentPoly::one();
        for _ in 0..5 {
            expect = &expect * &x;
        }
        assert_eq!(x.pow(5), expect);
        assert!(x.pow(0).is_one());
    }

    #[test]
    fn exponent_bounds() {
        let x = p(&[(1, -2, 3), (4, 1, -1)]);
        assert_eq!(x.min_exponents(), Some(Exp::new(-2, -1)));
        assert_eq!(x.max_exponents(), Some(Exp::new(1, 3)));
        assert_eq!(LaurentPoly::zero().min_exponents(), None);
    }

    #[test]
    fn eval_at_zero_with_negative_power_is_a_pole() {
        let x = p(&[(1, 0, -1)]);
        let zero = BigRational::zero();
        let one = BigRational::one();
        assert_eq!(x.eval(&one, &zero), Err(ArithError::Pole));
    }
}
