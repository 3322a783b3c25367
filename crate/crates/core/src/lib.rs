//! Kauffman polynomials of 2-bridge knots and links.
//!
//! The polynomial of a diagram in continued-fraction notation is computed
//! as a product of 3×3 matrices over `Q(α, s)` ([`pipeline`]), built from the
//! skein algebra of 2-tangles ([`tangle`]). An independent brute-force
//! evaluator on planar diagrams ([`oracle`]) cross-checks the results.

pub mod cli;
pub mod oracle;
pub mod pipeline;
pub mod ratfunc;
pub mod tangle;

pub use pipeline::{kauffman_2bridge, FractionNotation, KauffmanResult, NotationError, Pipeline};
pub use ratfunc::{ArithError, LaurentPoly, RatFunc};
