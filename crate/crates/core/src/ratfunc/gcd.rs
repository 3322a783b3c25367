//! Greatest common divisors and exact division in `Z[α, s]`.
//!
//! Laurent inputs are first shifted so that both minimum exponents are zero;
//! monomials are units in the Laurent ring, so the gcd is only defined up to
//! a signed monomial and the caller normalizes.
//!
//! The bivariate gcd is the recursive primitive polynomial remainder
//! sequence: polynomials are viewed in `Z[α][s]`, contents are taken in
//! `Z[α]` (itself via the univariate primitive PRS over `Z`), and every
//! pseudo-remainder is made primitive before the next step.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::{Exp, LaurentPoly};

/// Dense polynomial over `Z`, index = degree, no trailing zeros.
type UPoly = Vec<BigInt>;
/// Dense polynomial in `s` whose coefficients are `UPoly` in `α`.
type BiPoly = Vec<UPoly>;

fn trim_u(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn trim_bi(p: &mut BiPoly) {
    while p.last().is_some_and(|c| c.is_empty()) {
        p.pop();
    }
}

fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim_u(&mut out);
    out
}

/// `a - b * x^shift`
fn u_sub_shifted(a: &UPoly, b: &UPoly, shift: usize) -> UPoly {
    let len = a.len().max(b.len() + shift);
    let mut out = a.clone();
    out.resize(len, BigInt::zero());
    for (j, y) in b.iter().enumerate() {
        out[j + shift] -= y;
    }
    trim_u(&mut out);
    out
}

fn u_scale(a: &UPoly, k: &BigInt) -> UPoly {
    if k.is_zero() {
        return Vec::new();
    }
    a.iter().map(|c| c * k).collect()
}

fn u_content(a: &UPoly) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn u_div_scalar(a: &UPoly, k: &BigInt) -> UPoly {
    a.iter().map(|c| c / k).collect()
}

fn u_primitive(a: &UPoly) -> UPoly {
    let c = u_content(a);
    if c.is_zero() || c.is_one() {
        return a.clone();
    }
    u_div_scalar(a, &c)
}

/// Sign-normalized so the leading coefficient is positive.
fn u_normalize_sign(mut a: UPoly) -> UPoly {
    if a.last().is_some_and(|c| c.is_negative()) {
        for c in a.iter_mut() {
            *c = -&*c;
        }
    }
    a
}

/// Exact quotient `a / b` over `Z`, or `None` if `b` does not divide `a`.
fn u_div_exact(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let lb = b.last().unwrap();
    let mut r = a.clone();
    let mut q = vec![BigInt::zero(); a.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let (qc, rem) = r.last().unwrap().div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        r = u_sub_shifted(&r, &u_scale(b, &qc), shift);
        q[shift] = qc;
    }
    if r.is_empty() {
        trim_u(&mut q);
        Some(q)
    } else {
        None
    }
}

fn u_prem(a: &UPoly, b: &UPoly) -> UPoly {
    let lb = b.last().expect("nonzero divisor");
    let mut r = a.clone();
    while !r.is_empty() && r.len() >= b.len() {
        let shift = r.len() - b.len();
        let lr = r.last().unwrap().clone();
        r = u_sub_shifted(&u_scale(&r, lb), &u_scale(b, &lr), shift);
    }
    r
}

fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() {
        return u_normalize_sign(b.clone());
    }
    if b.is_empty() {
        return u_normalize_sign(a.clone());
    }
    let c = u_content(a).gcd(&u_content(b));
    let (mut p, mut q) = (u_primitive(a), u_primitive(b));
    if p.len() < q.len() {
        std::mem::swap(&mut p, &mut q);
    }
    while q.len() > 1 {
        let r = u_prem(&p, &q);
        p = q;
        if r.is_empty() {
            return u_normalize_sign(u_scale(&p, &c));
        }
        q = u_primitive(&r);
    }
    if q.is_empty() {
        u_normalize_sign(u_scale(&p, &c))
    } else {
        vec![c]
    }
}

fn bi_content(a: &BiPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for coeff in a {
        g = u_gcd(&g, coeff);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn bi_div_u(a: &BiPoly, k: &UPoly) -> BiPoly {
    a.iter()
        .map(|c| u_div_exact(c, k).expect("content divides every coefficient"))
        .collect()
}

fn bi_primitive(a: &BiPoly) -> BiPoly {
    let c = bi_content(a);
    if c.len() == 1 && c[0].is_one() {
        return a.clone();
    }
    bi_div_u(a, &c)
}

fn bi_scale(a: &BiPoly, k: &UPoly) -> BiPoly {
    let mut out: BiPoly = a.iter().map(|c| u_mul(c, k)).collect();
    trim_bi(&mut out);
    out
}

/// `a - b * s^shift`
fn bi_sub_shifted(a: &BiPoly, b: &BiPoly, shift: usize) -> BiPoly {
    let len = a.len().max(b.len() + shift);
    let mut out = a.clone();
    out.resize(len, Vec::new());
    for (j, y) in b.iter().enumerate() {
        out[j + shift] = u_sub_shifted(&out[j + shift], y, 0);
    }
    trim_bi(&mut out);
    out
}

fn bi_prem(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let lb = b.last().expect("nonzero divisor");
    let mut r = a.clone();
    while !r.is_empty() && r.len() >= b.len() {
        let shift = r.len() - b.len();
        let lr = r.last().unwrap().clone();
        r = bi_sub_shifted(&bi_scale(&r, lb), &bi_scale(b, &lr), shift);
    }
    r
}

fn bi_gcd(a: &BiPoly, b: &BiPoly) -> BiPoly {
    if a.is_empty() {
        return b.clone();
    }
    if b.is_empty() {
        return a.clone();
    }
    let c = u_gcd(&bi_content(a), &bi_content(b));
    let (mut p, mut q) = (bi_primitive(a), bi_primitive(b));
    if p.len() < q.len() {
        std::mem::swap(&mut p, &mut q);
    }
    let g = loop {
        if q.len() <= 1 {
            // q is a nonzero element of Z[α]; primitive parts then share only 1.
            break vec![vec![BigInt::one()]];
        }
        let r = bi_prem(&p, &q);
        if r.is_empty() {
            break q;
        }
        p = q;
        q = bi_primitive(&r);
    };
    bi_scale(&g, &c)
}

fn bi_div_exact(a: &BiPoly, b: &BiPoly) -> Option<BiPoly> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let lb = b.last().unwrap();
    let mut r = a.clone();
    let mut q: BiPoly = vec![Vec::new(); a.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let qc = u_div_exact(r.last().unwrap(), lb)?;
        r = bi_sub_shifted(&r, &bi_scale(b, &qc), shift);
        q[shift] = qc;
    }
    if r.is_empty() {
        trim_bi(&mut q);
        Some(q)
    } else {
        None
    }
}

/// Dense form of `p · α^-min.alpha · s^-min.s`.
fn to_dense(p: &LaurentPoly, min: Exp) -> BiPoly {
    let max = p.max_exponents().expect("nonzero polynomial");
    let ds = (max.s - min.s) as usize + 1;
    let da = (max.alpha - min.alpha) as usize + 1;
    let mut out: BiPoly = vec![vec![BigInt::zero(); da]; ds];
    for (e, c) in p.terms() {
        out[(e.s - min.s) as usize][(e.alpha - min.alpha) as usize] = c.clone();
    }
    for coeff in out.iter_mut() {
        trim_u(coeff);
    }
    trim_bi(&mut out);
    out
}

fn from_dense(p: &BiPoly, shift: Exp) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (j, coeff) in p.iter().enumerate() {
        for (i, c) in coeff.iter().enumerate() {
            out.add_term(Exp::new(i as i32 + shift.alpha, j as i32 + shift.s), c.clone());
        }
    }
    out
}

/// Gcd of two Laurent polynomials, returned with both minimum exponents zero.
///
/// The result is determined up to sign; the gcd of `0` and `p` is `p` with
/// its monomial content removed.
pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    match (a.min_exponents(), b.min_exponents()) {
        (None, None) => LaurentPoly::zero(),
        (Some(ma), None) => from_dense(&to_dense(a, ma), Exp::ZERO),
        (None, Some(mb)) => from_dense(&to_dense(b, mb), Exp::ZERO),
        (Some(ma), Some(mb)) => {
            if a.is_monomial() || b.is_monomial() {
                let ca = a.terms().fold(BigInt::zero(), |g, (_, c)| g.gcd(c));
                let cb = b.terms().fold(BigInt::zero(), |g, (_, c)| g.gcd(c));
                return LaurentPoly::constant(ca.gcd(&cb));
            }
            let g = bi_gcd(&to_dense(a, ma), &to_dense(b, mb));
            from_dense(&g, Exp::ZERO)
        }
    }
}

/// Exact quotient `a / b` in the Laurent ring, or `None` when `b` does not
/// divide `a`.
pub fn div_exact(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    let mb = b.min_exponents()?;
    let Some(ma) = a.min_exponents() else {
        return Some(LaurentPoly::zero());
    };
    let q = bi_div_exact(&to_dense(a, ma), &to_dense(b, mb))?;
    Some(from_dense(&q, Exp::new(ma.alpha - mb.alpha, ma.s - mb.s)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i32, i32)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    fn same_up_to_sign(a: &LaurentPoly, b: &LaurentPoly) -> bool {
        a == b || *a == -b
    }

    #[test]
    fn univariate_gcd_in_s() {
        // (s-1)(s+1) and (s-1)^2
        let a = p(&[(1, 0, 2), (-1, 0, 0)]);
        let b = p(&[(1, 0, 2), (-2, 0, 1), (1, 0, 0)]);
        assert!(same_up_to_sign(&gcd(&a, &b), &p(&[(1, 0, 1), (-1, 0, 0)])));
    }

    #[test]
    fn bivariate_common_factor_is_recovered() {
        let f = p(&[(1, 1, 0), (1, 0, 1)]); // α + s
        let g = p(&[(1, 1, 1), (-1, 0, 0)]); // αs - 1
        let h = p(&[(2, 2, 0), (-3, 0, 3), (1, 1, 1)]);
        let k = p(&[(5, 0, 2), (1, 3, 0), (-1, 0, 0)]);
        let a = &(&f * &g) * &h;
        let b = &(&f * &g) * &k;
        let d = gcd(&a, &b);
        assert!(same_up_to_sign(&d, &(&f * &g)), "got {d}");
    }

    #[test]
    fn integer_content_is_part_of_the_gcd() {
        let a = p(&[(6, 1, 0), (6, 0, 1)]);
        let b = p(&[(4, 1, 0), (4, 0, 1)]);
        assert!(same_up_to_sign(&gcd(&a, &b), &p(&[(2, 1, 0), (2, 0, 1)])));
    }

    #[test]
    fn laurent_shift_is_ignored() {
        let a = p(&[(1, -3, -1), (1, -2, 0)]); // α^-3 s^-1 (1 + αs)
        let b = p(&[(1, 4, 5), (1, 5, 6)]);
        assert!(same_up_to_sign(&gcd(&a, &b), &p(&[(1, 0, 0), (1, 1, 1)])));
    }

    #[test]
    fn coprime_inputs_give_a_unit() {
        let a = p(&[(1, 1, 0), (1, 0, 1)]);
        let b = p(&[(1, 1, 0), (-1, 0, 1)]);
        let d = gcd(&a, &b);
        assert!(same_up_to_sign(&d, &LaurentPoly::one()), "got {d}");
    }

    #[test]
    fn exact_division() {
        let f = p(&[(1, 1, 0), (1, 0, 1), (-2, -1, 3)]);
        let g = p(&[(3, 2, -1), (1, 0, 0)]);
        let prod = &f * &g;
        assert_eq!(div_exact(&prod, &g), Some(f.clone()));
        assert_eq!(div_exact(&prod, &f), Some(g));
        assert_eq!(div_exact(&f, &p(&[(1, 1, 1), (1, 0, 0)])), None);
    }
}
