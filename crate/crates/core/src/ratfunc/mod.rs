//! Exact arithmetic in the field `Q(α, s)`.

mod frac;
pub mod gcd;
mod laurent;
pub mod render;

use std::sync::OnceLock;

pub use frac::{RatFunc, Substitution};
pub use laurent::{Exp, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the evaluation point")]
    Pole,
    #[error("substituted denominator vanishes identically")]
    ZeroDenominator,
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("malformed json: {0}")]
    Json(String),
}

/// `s - s⁻¹`, the coefficient in the crossing-change relation.
pub fn s_minus_inv() -> LaurentPoly {
    LaurentPoly::from_terms([(1, 0, 1), (-1, 0, -1)])
}

/// `s + s⁻¹`
pub fn s_plus_inv() -> LaurentPoly {
    LaurentPoly::from_terms([(1, 0, 1), (1, 0, -1)])
}

/// Numerator of the loop value over `s - s⁻¹`: `α - α⁻¹ + s - s⁻¹`.
pub fn delta_numerator() -> LaurentPoly {
    LaurentPoly::from_terms([(1, 1, 0), (-1, -1, 0), (1, 0, 1), (-1, 0, -1)])
}

/// The loop value `δ = (α - α⁻¹)/(s - s⁻¹) + 1`.
pub fn delta() -> RatFunc {
    static DELTA: OnceLock<RatFunc> = OnceLock::new();
    DELTA
        .get_or_init(|| RatFunc::new(delta_numerator(), s_minus_inv()).expect("nonzero"))
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_closed_form() {
        let alpha_part = RatFunc::new(
            LaurentPoly::from_terms([(1, 1, 0), (-1, -1, 0)]),
            s_minus_inv(),
        )
        .unwrap();
        assert_eq!(delta(), &alpha_part + &RatFunc::one());
        assert_eq!(&delta() - &RatFunc::one(), alpha_part);
        assert_eq!(delta().mirror(), delta());
        assert!(delta().is_reduced());
    }
}
