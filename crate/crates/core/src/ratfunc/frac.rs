use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gcd;
use super::laurent::{forward_owned_binop, Exp, LaurentPoly};
use super::ArithError;

/// An element of `Q(α, s)` stored as a quotient of Laurent polynomials.
///
/// Every constructor yields the canonical shape: the denominator has
/// nonnegative exponents with minimum zero in each variable, and its
/// lexicographically least term is positive. Arithmetic additionally divides
/// out the gcd, so values produced by `+`, `-`, `*`, `/` are in lowest terms.
/// [`RatFunc::new_unreduced`] skips the gcd step.
///
/// Equality is decided by cross-multiplication and does not depend on
/// whether either side is reduced.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
    /// Known to be in lowest terms; lets arithmetic use the cheaper
    /// cross-gcd formulas.
    reduced: bool,
}

/// Images of `α` and `s` for [`RatFunc::substitute`].
#[derive(Clone, Debug)]
pub struct Substitution {
    pub alpha: RatFunc,
    pub s: RatFunc,
}

impl Substitution {
    /// `(α, s) → (α⁻¹, s⁻¹)`, the effect of mirroring a diagram.
    pub fn mirror() -> Self {
        Substitution {
            alpha: RatFunc::alpha_pow(-1),
            s: RatFunc::s_pow(-1),
        }
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
            reduced: true,
        }
    }

    pub fn one() -> Self {
        RatFunc::from_poly(LaurentPoly::one())
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        RatFunc::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFunc {
            num: p,
            den: LaurentPoly::one(),
            reduced: true,
        }
    }

    pub fn alpha_pow(n: i32) -> Self {
        RatFunc::from_poly(LaurentPoly::monomial(1, n, 0))
    }

    pub fn s_pow(n: i32) -> Self {
        RatFunc::from_poly(LaurentPoly::monomial(1, 0, n))
    }

    /// `num / den` in lowest terms.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ArithError> {
        Ok(RatFunc::new_unreduced(num, den)?.reduce())
    }

    /// `num / den` with only the monomial shift and sign normalization applied.
    pub fn new_unreduced(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(RatFunc::canonical_shape(num, den))
    }

    fn canonical_shape(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let m = den.min_exponents().expect("nonzero denominator");
        let (mut num, mut den) = if m == Exp::ZERO {
            (num, den)
        } else {
            (num.shift(-m.alpha, -m.s), den.shift(-m.alpha, -m.s))
        };
        if den.least_is_negative() {
            num = -num;
            den = -den;
        }
        let reduced = den.is_one();
        RatFunc { num, den, reduced }
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn into_parts(self) -> (LaurentPoly, LaurentPoly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// True when the value is a Laurent polynomial written over `1`.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Divides numerator and denominator by their gcd.
    pub fn reduce(self) -> Self {
        if self.num.is_zero() {
            return RatFunc::zero();
        }
        if self.reduced {
            return self;
        }
        let g = gcd::gcd(&self.num, &self.den);
        let (num, den) = (divide_out(self.num, &g), divide_out(self.den, &g));
        RatFunc::canonical_shape(num, den).mark_reduced()
    }

    fn mark_reduced(mut self) -> Self {
        self.reduced = true;
        self
    }

    /// True when numerator and denominator share no nonunit factor.
    pub fn is_reduced(&self) -> bool {
        let g = gcd::gcd(&self.num, &self.den);
        g.is_one() || (-&g).is_one()
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.num.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let r = RatFunc::canonical_shape(self.den.clone(), self.num.clone());
        Ok(if self.reduced { r.mark_reduced() } else { r })
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<Self, ArithError> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power; negative exponents invert first.
    pub fn powi(&self, n: i32) -> Result<Self, ArithError> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let k = n.unsigned_abs();
        let r = RatFunc::canonical_shape(base.num.pow(k), base.den.pow(k));
        Ok(if base.reduced { r.mark_reduced() } else { r })
    }

    /// Cross-multiplication equality: `a.num · b.den == b.num · a.den`.
    pub fn equals(&self, other: &RatFunc) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    /// The substitution `(α, s) → (α⁻¹, s⁻¹)`.
    pub fn mirror(&self) -> Self {
        let r = RatFunc::canonical_shape(self.num.mirror(), self.den.mirror());
        if self.reduced {
            r.mark_reduced()
        } else {
            r
        }
    }

    /// Composes with the given images of `α` and `s`.
    pub fn substitute(&self, sub: &Substitution) -> Result<Self, ArithError> {
        let num = substitute_poly(&self.num, sub)?;
        let den = substitute_poly(&self.den, sub)?;
        if den.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        num.checked_div(&den)
    }

    /// Exact value at `(α, s) = (alpha, s)`.
    pub fn eval_rational(
        &self,
        alpha: &BigRational,
        s: &BigRational,
    ) -> Result<BigRational, ArithError> {
        let d = self.den.eval(alpha, s)?;
        if d.is_zero() {
            return Err(ArithError::Pole);
        }
        Ok(self.num.eval(alpha, s)? / d)
    }
}

fn is_unit(g: &LaurentPoly) -> bool {
    g.is_monomial() && g.least_term().is_some_and(|(_, c)| c.abs().is_one())
}

/// `p / g`, skipping the division when `g` is a unit.
fn divide_out(p: LaurentPoly, g: &LaurentPoly) -> LaurentPoly {
    if is_unit(g) {
        p
    } else {
        gcd::div_exact(&p, g).expect("gcd divides")
    }
}

/// Signed monomial `±α^a s^b` if `r` is one.
fn unit_monomial(r: &RatFunc) -> Option<(bool, Exp)> {
    let (&e_num, c_num) = r.num.least_term()?;
    if !r.num.is_monomial() || !r.den.is_monomial() {
        return None;
    }
    let (&e_den, c_den) = r.den.least_term()?;
    if !c_den.is_one() || !c_num.abs().is_one() {
        return None;
    }
    Some((
        c_num.is_negative(),
        Exp::new(e_num.alpha - e_den.alpha, e_num.s - e_den.s),
    ))
}

fn substitute_poly(p: &LaurentPoly, sub: &Substitution) -> Result<RatFunc, ArithError> {
    if let (Some((na, ea)), Some((ns, es))) = (unit_monomial(&sub.alpha), unit_monomial(&sub.s)) {
        let mapped = p.map_exponents(|e| {
            let exp = Exp::new(
                ea.alpha * e.alpha + es.alpha * e.s,
                ea.s * e.alpha + es.s * e.s,
            );
            let negate = (na && e.alpha % 2 != 0) ^ (ns && e.s % 2 != 0);
            (exp, negate)
        });
        return Ok(RatFunc::from_poly(mapped));
    }
    let mut total = RatFunc::zero();
    for (e, c) in p.terms() {
        let term = sub.alpha.powi(e.alpha)? * sub.s.powi(e.s)?;
        total = total + term * RatFunc::from_int(c.clone());
    }
    Ok(total)
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl Eq for RatFunc {}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        RatFunc::from_int(c)
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;

    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if !(self.reduced && rhs.reduced) {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return RatFunc::canonical_shape(num, &self.den * &rhs.den).reduce();
        }
        // With both sides reduced, any common factor of the sum and the new
        // denominator divides gcd(den₁, den₂).
        let g = if self.den == rhs.den { self.den.clone() } else { gcd::gcd(&self.den, &rhs.den) };
        let ld = divide_out(self.den.clone(), &g);
        let rd = divide_out(rhs.den.clone(), &g);
        let num = &(&self.num * &rd) + &(&rhs.num * &ld);
        if num.is_zero() {
            return RatFunc::zero();
        }
        let mut den = &ld * &rhs.den;
        let h = gcd::gcd(&num, &g);
        let num = divide_out(num, &h);
        den = divide_out(den, &h);
        RatFunc::canonical_shape(num, den).mark_reduced()
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;

    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;

    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        if !(self.reduced && rhs.reduced) {
            return RatFunc::canonical_shape(&self.num * &rhs.num, &self.den * &rhs.den).reduce();
        }
        let g1 = gcd::gcd(&self.num, &rhs.den);
        let g2 = gcd::gcd(&rhs.num, &self.den);
        let num = &divide_out(self.num.clone(), &g1) * &divide_out(rhs.num.clone(), &g2);
        let den = &divide_out(self.den.clone(), &g2) * &divide_out(rhs.den.clone(), &g1);
        RatFunc::canonical_shape(num, den).mark_reduced()
    }
}

impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;

    /// Panics on division by zero; see [`RatFunc::checked_div`].
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;

    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
            reduced: self.reduced,
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;

    fn neg(self) -> RatFunc {
        RatFunc {
            num: -self.num,
            den: self.den,
            reduced: self.reduced,
        }
    }
}

forward_owned_binop!(RatFunc, Add, add);
forward_owned_binop!(RatFunc, Sub, sub);
forward_owned_binop!(RatFunc, Mul, mul);
forward_owned_binop!(RatFunc, Div, div);

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render::plain(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfunc::delta;

    fn poly(terms: &[(i64, i32, i32)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    fn rf(terms: &[(i64, i32, i32)]) -> RatFunc {
        RatFunc::from_poly(poly(terms))
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn add_examples() {
        assert_eq!(rf(&[(1, 0, 1)]) + rf(&[(1, 0, -1)]), rf(&[(1, 0, 1), (1, 0, -1)]));
        let x = rf(&[(3, 1, -2), (1, 0, 0)]);
        assert_eq!(&x + &RatFunc::zero(), x);
        let d_inv = delta().inv().unwrap();
        let sum = &d_inv + &(&RatFunc::one() - &d_inv);
        assert!(sum.is_one());
    }

    #[test]
    fn mul_examples() {
        let p = rf(&[(1, 0, 1), (1, 0, -1)]);
        let m = rf(&[(1, 0, 1), (-1, 0, -1)]);
        assert_eq!(&p * &m, rf(&[(1, 0, 2), (-1, 0, -2)]));
        let d = delta();
        assert!((&d * &d.inv().unwrap()).is_one());
        // (s - s^-1)·δ = α - α^-1 + s - s^-1, and the product is a polynomial.
        let prod = &m * &d;
        assert!(prod.is_polynomial());
        assert_eq!(prod.numer(), &poly(&[(1, 1, 0), (-1, -1, 0), (1, 0, 1), (-1, 0, -1)]));
    }

    #[test]
    fn inv_examples() {
        assert_eq!(RatFunc::alpha_pow(1).inv().unwrap(), RatFunc::alpha_pow(-1));
        assert!(RatFunc::one().inv().unwrap().is_one());
        let expect = RatFunc::new(
            poly(&[(1, 0, 1), (-1, 0, -1)]),
            poly(&[(1, 1, 0), (-1, -1, 0), (1, 0, 1), (-1, 0, -1)]),
        )
        .unwrap();
        assert_eq!(delta().inv().unwrap(), expect);
        assert_eq!(RatFunc::zero().inv(), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn equality_ignores_reduction_state() {
        let unreduced = RatFunc::new_unreduced(poly(&[(1, 0, 2), (-1, 0, 0)]), poly(&[(1, 0, 1), (-1, 0, 0)]))
            .unwrap();
        assert!(!unreduced.is_reduced());
        assert_eq!(unreduced, rf(&[(1, 0, 1), (1, 0, 0)]));
        assert_ne!(rf(&[(1, 0, 1)]), rf(&[(-1, 0, 1)]));
        let reduced = unreduced.clone().reduce();
        assert!(reduced.is_polynomial());
        assert_eq!(reduced.numer(), &poly(&[(1, 0, 1), (1, 0, 0)]));
    }

    #[test]
    fn substitute_examples() {
        let mirror = Substitution::mirror();
        assert_eq!(rf(&[(1, 1, 1)]).substitute(&mirror).unwrap(), rf(&[(1, -1, -1)]));
        let t = rf(&[(1, 0, 1), (-1, 0, -1)]);
        assert_eq!(t.substitute(&mirror).unwrap(), -&t);
        assert_eq!(delta().substitute(&mirror).unwrap(), delta());
        // A non-monomial image goes through the general path.
        let sub = Substitution { alpha: RatFunc::alpha_pow(1), s: rf(&[(1, 0, 1), (1, 0, 0)]) };
        let got = rf(&[(1, 0, 2)]).substitute(&sub).unwrap();
        assert_eq!(got, rf(&[(1, 0, 2), (2, 0, 1), (1, 0, 0)]));
        let vanish = Substitution { alpha: RatFunc::alpha_pow(1), s: RatFunc::one() };
        assert!(matches!(t.inv().unwrap().substitute(&vanish), Err(ArithError::ZeroDenominator)));
    }

    #[test]
    fn eval_examples() {
        let x = rf(&[(1, 0, 2), (-1, 0, -2)]);
        assert_eq!(x.eval_rational(&q(2, 1), &q(3, 1)).unwrap(), q(80, 9));
        assert_eq!(RatFunc::one().eval_rational(&q(-7, 3), &q(5, 11)).unwrap(), q(1, 1));
        // (3/2)/(8/3) + 1
        assert_eq!(delta().eval_rational(&q(2, 1), &q(3, 1)).unwrap(), q(25, 16));
        assert_eq!(delta().eval_rational(&q(2, 1), &q(1, 1)), Err(ArithError::Pole));
    }

    #[test]
    fn canonical_denominator_shape() {
        let x = RatFunc::new(poly(&[(1, 0, 0)]), poly(&[(-2, -1, -3), (4, 0, -1)])).unwrap();
        let den = x.denom();
        assert_eq!(den.min_exponents(), Some(Exp::ZERO));
        assert!(!den.least_is_negative());
    }
}
