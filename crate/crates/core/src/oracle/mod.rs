//! Brute-force skein evaluation on small link diagrams.
//!
//! This path shares nothing with [`crate::pipeline`] beyond the field
//! arithmetic: diagrams are built crossing by crossing and evaluated from the
//! skein relations directly, so agreement between the two is a real check.

mod build;
mod diagram;
mod eval;

pub use build::{braid_closure, build_diagram, Tangle};
pub use diagram::{Diagram, Over};
pub use eval::{kauffman_bruteforce, DeltaPoly, Evaluator, Strategy, DEFAULT_CROSSING_LIMIT};

use crate::pipeline::{FractionNotation, Pipeline};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("diagram has {crossings} crossings, above the limit of {limit}")]
    CrossingLimit { crossings: usize, limit: usize },
    #[error("malformed diagram: {0}")]
    Malformed(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Whether the oracle and the standard pipeline agree on `f`.
pub fn verify_pair(f: &FractionNotation) -> Result<bool, OracleError> {
    verify_pair_with(Pipeline::standard(), &mut Evaluator::new(), f)
}

pub fn verify_pair_with(
    pipeline: &Pipeline,
    evaluator: &mut Evaluator,
    f: &FractionNotation,
) -> Result<bool, OracleError> {
    let brute = evaluator.evaluate(&build_diagram(f))?;
    Ok(brute == pipeline.evaluate(f).value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfunc::{delta, RatFunc};

    fn notation(e: &[i32]) -> FractionNotation {
        FractionNotation::new(e.to_vec()).unwrap()
    }

    #[test]
    fn base_cases() {
        assert_eq!(kauffman_bruteforce(&Diagram::empty()).unwrap(), RatFunc::one());
        assert_eq!(kauffman_bruteforce(&Diagram::unlink(1)).unwrap(), delta());
        let curl = Diagram::parse("X l a l a A").unwrap();
        assert_eq!(kauffman_bruteforce(&curl).unwrap(), &RatFunc::alpha_pow(1) * &delta());
        assert_eq!(kauffman_bruteforce(&curl.mirror()).unwrap(), &RatFunc::alpha_pow(-1) * &delta());
    }

    #[test]
    fn crossing_limit() {
        let d = braid_closure(2, &[1; 5]);
        let err = Evaluator::new().with_crossing_limit(4).evaluate(&d).unwrap_err();
        assert_eq!(err, OracleError::CrossingLimit { crossings: 5, limit: 4 });
    }

    #[test]
    fn small_notations_agree() {
        for e in [&[1][..], &[-1], &[2], &[3], &[-2, 1, -2], &[1, 1, 1], &[2, -1, 1]] {
            assert!(verify_pair(&notation(e)).unwrap(), "{e:?}");
        }
    }

    #[test]
    fn strategies_and_memo_agree() {
        let d = build_diagram(&notation(&[2, 1, -3]));
        let a = Evaluator::new().evaluate(&d).unwrap();
        let b = Evaluator::new().with_strategy(Strategy::Reverse).with_memo(false).evaluate(&d).unwrap();
        assert_eq!(a, b);
    }
}
