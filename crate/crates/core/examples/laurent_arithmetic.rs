//! Exact arithmetic on Laurent polynomials and rational functions in `α`
//! and `s`: parsing, gcd-based reduction, evaluation at rational points.
//!
//! ```text
//! cargo run --example laurent_arithmetic
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;

use kauffman_skein::ratfunc::render::{parse_poly, parse_ratfunc, plain, plain_poly};
use kauffman_skein::ratfunc::{delta, gcd, RatFunc};

fn main() {
    let p = parse_poly("a^-1*s - a*s + 2").unwrap();
    let q = parse_poly("s - s^-1").unwrap();
    println!("p = {}", plain_poly(&p));
    println!("p·q = {}", plain_poly(&(&p * &q)));

    let x = parse_poly("s^2 - 1").unwrap();
    let y = parse_poly("s^3 - s").unwrap();
    println!("gcd(s² − 1, s³ − s) = {}", plain_poly(&gcd::gcd(&x, &y)));

    // Fractions are reduced to lowest terms on construction.
    let r = RatFunc::new(y, x).unwrap();
    println!("(s³ − s)/(s² − 1) = {}", plain(&r));

    let d = delta();
    println!("δ = {}", plain(&d));
    let two = BigRational::from_integer(BigInt::from(2));
    let three = BigRational::from_integer(BigInt::from(3));
    println!("δ(α = 2, s = 3) = {}", d.eval_rational(&two, &three).unwrap());

    let sum = &d + &parse_ratfunc("(1)/(s - s^-1)").unwrap();
    let back = &sum - &parse_ratfunc("(1)/(s - s^-1)").unwrap();
    assert_eq!(back, d);
    println!("δ + 1/(s − s⁻¹) = {}", plain(&sum));
}
