//! Text forms of polynomials and rational functions.
//!
//! `plain` writes `α` as `a`, for example `-2*a^-1*s^3 - 1 + s`, with terms in
//! ascending `(α-exponent, s-exponent)` order. A rational function with a
//! nontrivial denominator prints as `(num)/(den)`. `plain` is also parsed
//! back by [`parse_poly`] and [`parse_ratfunc`].
//!
//! `latex` writes `\alpha` and `\frac{..}{..}`.
//!
//! `json` is `{"num": [[a_exp, s_exp, "coeff"], ...], "den": [...]}` with
//! coefficients as decimal strings so that big integers survive.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde_json::{json, Value};

use super::{ArithError, LaurentPoly, RatFunc};

fn poly_with(p: &LaurentPoly, mono: impl Fn(i32, i32) -> Vec<String>, sep: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let abs = c.abs();
        let mut parts = mono(e.alpha, e.s);
        if !abs.is_one() || parts.is_empty() {
            parts.insert(0, abs.to_string());
        }
        out.push_str(&parts.join(sep));
    }
    out
}

pub fn plain_poly(p: &LaurentPoly) -> String {
    poly_with(
        p,
        |a, s| {
            let mut parts = Vec::new();
            for (name, k) in [("a", a), ("s", s)] {
                match k {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    k => parts.push(format!("{name}^{k}")),
                }
            }
            parts
        },
        "*",
    )
}

pub fn latex_poly(p: &LaurentPoly) -> String {
    poly_with(
        p,
        |a, s| {
            let mut parts = Vec::new();
            for (name, k) in [("\\alpha", a), ("s", s)] {
                match k {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    k => parts.push(format!("{name}^{{{k}}}")),
                }
            }
            parts
        },
        " ",
    )
}

pub fn plain(r: &RatFunc) -> String {
    if r.denom().is_one() {
        plain_poly(r.numer())
    } else {
        format!("({})/({})", plain_poly(r.numer()), plain_poly(r.denom()))
    }
}

pub fn latex(r: &RatFunc) -> String {
    if r.denom().is_one() {
        latex_poly(r.numer())
    } else {
        format!("\\frac{{{}}}{{{}}}", latex_poly(r.numer()), latex_poly(r.denom()))
    }
}

fn poly_json(p: &LaurentPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(e, c)| json!([e.alpha, e.s, c.to_string()]))
            .collect(),
    )
}

pub fn to_json(r: &RatFunc) -> Value {
    json!({ "num": poly_json(r.numer()), "den": poly_json(r.denom()) })
}

fn poly_from_json(v: &Value) -> Result<LaurentPoly, ArithError> {
    let bad = |msg: &str| ArithError::Json(msg.to_string());
    let terms = v.as_array().ok_or_else(|| bad("term list must be an array"))?;
    let mut out = LaurentPoly::zero();
    for t in terms {
        let t = t.as_array().filter(|t| t.len() == 3).ok_or_else(|| bad("term must be [a, s, coeff]"))?;
        let exp = |x: &Value| {
            x.as_i64()
                .and_then(|k| i32::try_from(k).ok())
                .ok_or_else(|| bad("exponent must be a 32-bit integer"))
        };
        let c: BigInt = t[2]
            .as_str()
            .ok_or_else(|| bad("coefficient must be a decimal string"))?
            .parse()
            .map_err(|_| bad("coefficient is not a decimal integer"))?;
        out.add_term(super::Exp::new(exp(&t[0])?, exp(&t[1])?), c);
    }
    Ok(out)
}

/// Reads the `json` form back without reducing it.
pub fn from_json(v: &Value) -> Result<RatFunc, ArithError> {
    let num = poly_from_json(v.get("num").ok_or_else(|| ArithError::Json("missing \"num\"".into()))?)?;
    let den = poly_from_json(v.get("den").ok_or_else(|| ArithError::Json("missing \"den\"".into()))?)?;
    RatFunc::new_unreduced(num, den)
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += self.peek().unwrap().len_utf8();
        }
    }

    fn eat(&mut self, ch: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(ch) {
            self.pos += ch.len_utf8();
            true
        } else {
            false
        }
    }

    fn err(&self, msg: &str) -> ArithError {
        ArithError::Parse {
            offset: self.pos,
            message: msg.to_string(),
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn exponent(&mut self) -> Result<i32, ArithError> {
        if !self.eat('^') {
            return Ok(1);
        }
        self.skip_ws();
        let neg = self.eat('-');
        self.skip_ws();
        let d = self.digits().ok_or_else(|| self.err("expected exponent"))?;
        let k: i32 = d.parse().map_err(|_| self.err("exponent out of range"))?;
        Ok(if neg { -k } else { k })
    }

    fn term(&mut self) -> Result<LaurentPoly, ArithError> {
        let mut coeff = BigInt::one();
        let (mut a, mut s) = (0, 0);
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let d = self.digits().unwrap();
                    coeff *= d.parse::<BigInt>().unwrap();
                }
                Some('a') => {
                    self.pos += 1;
                    a += self.exponent()?;
                }
                Some('s') => {
                    self.pos += 1;
                    s += self.exponent()?;
                }
                _ => return Err(self.err("expected coefficient, `a` or `s`")),
            }
            if !self.eat('*') {
                break;
            }
        }
        Ok(LaurentPoly::monomial(coeff, a, s))
    }

    fn poly(&mut self) -> Result<LaurentPoly, ArithError> {
        let mut sign = !self.eat('-');
        let mut acc = LaurentPoly::zero();
        loop {
            let t = self.term()?;
            acc = if sign { &acc + &t } else { &acc - &t };
            if self.eat('+') {
                sign = true;
            } else if self.eat('-') {
                sign = false;
            } else {
                return Ok(acc);
            }
        }
    }

    fn finish(&mut self) -> Result<(), ArithError> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            Err(self.err("unexpected trailing input"))
        }
    }
}

/// Parses the `plain` polynomial grammar.
pub fn parse_poly(src: &str) -> Result<LaurentPoly, ArithError> {
    let mut cur = Cursor { src, pos: 0 };
    let p = cur.poly()?;
    cur.finish()?;
    Ok(p)
}

/// Parses `poly` or `(poly)/(poly)`.
pub fn parse_ratfunc(src: &str) -> Result<RatFunc, ArithError> {
    let mut cur = Cursor { src, pos: 0 };
    if !cur.eat('(') {
        let p = cur.poly()?;
        cur.finish()?;
        return Ok(RatFunc::from_poly(p));
    }
    let num = cur.poly()?;
    if !cur.eat(')') {
        return Err(cur.err("expected `)`"));
    }
    if !cur.eat('/') {
        cur.finish()?;
        return Ok(RatFunc::from_poly(num));
    }
    if !cur.eat('(') {
        return Err(cur.err("expected `(`"));
    }
    let den = cur.poly()?;
    if !cur.eat(')') {
        return Err(cur.err("expected `)`"));
    }
    cur.finish()?;
    if den.is_zero() {
        return Err(ArithError::DivisionByZero);
    }
    RatFunc::new_unreduced(num, den)
}
