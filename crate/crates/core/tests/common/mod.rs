#![allow(dead_code)]

use std::path::PathBuf;

use kauffman_skein::oracle::{braid_closure, Diagram};
use kauffman_skein::ratfunc::render::parse_poly;
use kauffman_skein::ratfunc::{delta, RatFunc};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

pub fn load_diagram(name: &str) -> Diagram {
    let text = std::fs::read_to_string(data_path(&format!("diagrams/{name}"))).unwrap();
    Diagram::parse(&text).unwrap()
}

pub fn poly(src: &str) -> RatFunc {
    RatFunc::from_poly(parse_poly(src).unwrap())
}

/// The Whitehead link polynomial as printed after substituting δ.
pub fn whitehead_final() -> RatFunc {
    let num = parse_poly(
        "-a^2 + a^4 - a^3*s + a^5*s + s^2 + a^2*s^2 - a^4*s^2 - a^6*s^2 + a*s^3 + 2*a^3*s^3 \
         - 2*a^5*s^3 - a^7*s^3 - 2*s^4 + a^4*s^4 + 2*a^6*s^4 - a*s^5 - 3*a^3*s^5 + a^5*s^5 \
         + 3*a^7*s^5 + 3*s^6 - 2*a^2*s^6 - a^4*s^6 - 2*a^6*s^6 + a*s^7 + 3*a^3*s^7 - a^5*s^7 \
         - 3*a^7*s^7 - 2*s^8 + a^4*s^8 + 2*a^6*s^8 - a*s^9 - 2*a^3*s^9 + 2*a^5*s^9 + a^7*s^9 \
         + s^10 + a^2*s^10 - a^4*s^10 - a^6*s^10 + a^3*s^11 - a^5*s^11 - a^2*s^12 + a^4*s^12",
    )
    .unwrap();
    // α³s⁴(−1 + s²)²
    let den = parse_poly("a^3*s^4 - 2*a^3*s^6 + a^3*s^8").unwrap();
    RatFunc::new_unreduced(num, den).unwrap()
}

/// The Whitehead link polynomial as printed before substituting δ, with δ
/// then taken as the loop value.
pub fn whitehead_in_delta() -> RatFunc {
    let d = delta();
    let d2 = &d * &d;
    let d3 = &d2 * &d;
    let one = RatFunc::one();
    let a = |k: i32| RatFunc::alpha_pow(k);
    let s = |k: i32| RatFunc::s_pow(k);
    let sq = poly("-1 + s^2");
    let sq2 = &sq * &sq;
    let alt = poly("-1 + 2*s^2 - 2*s^4 + s^6");
    let s246 = poly("s^2 - s^4 + s^6");

    let t1 = &a(7) * &s(4);
    let t2 = &(&(&poly("-2") * &a(4)) * &(&d2 - &one)) * &(&s(3) * &sq);
    let t3 = &(&a(3) * &poly("1 - s^2 + s^4")) * &(&(&one + &s(4)) + &(&(&(&d * &poly("2")) - &one) * &s(2)));
    let t4 = -(&(&(&(&d - &one) * &d) * &s(1)) * &alt);
    let t5 = &(&(&a(2) * &(&(&d + &d2) - &poly("2"))) * &s(1)) * &alt;
    let t6 = &(&poly("-2") * &a(5)) * &s246;
    let inner = &(&(&(&s(2) * &sq2) - &(&(&d2 * &s(2)) * &sq2)) + &(&d3 * &s246))
        + &(&d * &poly("-1 + s^2 - 2*s^4 + s^6 - s^8"));
    let t7 = &a(1) * &inner;
    let sum = [t2, t3, t4, t5, t6, t7].iter().fold(t1, |acc, t| &acc + t);
    let prefactor = (&(&a(2) * &d) * &s(4)).inv().unwrap();
    &prefactor * &sum
}

/// A pair of diagrams related by one move; the second should equal
/// `alpha^factor` times the first.
pub struct MovePair {
    pub name: String,
    pub before: Diagram,
    pub after: Diagram,
    pub alpha_factor: i32,
}

fn braid_pair(name: &str, n: usize, w: &[i32], m: usize, v: &[i32], alpha_factor: i32) -> MovePair {
    MovePair {
        name: format!("{name}: {w:?} on {n} vs {v:?} on {m}"),
        before: braid_closure(n, w),
        after: braid_closure(m, v),
        alpha_factor,
    }
}

/// Pairs related by cancelling a crossing pair.
pub fn r2_pairs() -> Vec<MovePair> {
    let mut out = vec![
        braid_pair("R2", 2, &[], 2, &[1, -1], 0),
        braid_pair("R2", 2, &[1], 2, &[1, 1, -1], 0),
        braid_pair("R2", 3, &[1, 2], 3, &[1, 2, -1, 1], 0),
        braid_pair("R2", 3, &[1, 1, 2], 3, &[1, -2, 2, 1, 2], 0),
        braid_pair("R2", 2, &[1, 1, 1], 2, &[1, -1, 1, 1, 1], 0),
        braid_pair("R2", 3, &[1, -2, 1, -2], 3, &[1, -2, 2, -2, 1, -2], 0),
        braid_pair("R2", 4, &[1, 2, 3], 4, &[1, 2, -3, 3, 3], 0),
    ];
    out.push(MovePair {
        name: "R2: hand-drawn bigon vs two circles".into(),
        before: Diagram::unlink(2),
        after: load_diagram("r2_unlink.txt"),
        alpha_factor: 0,
    });
    out
}

/// Pairs related by sliding a strand across a crossing.
pub fn r3_pairs() -> Vec<MovePair> {
    vec![
        braid_pair("R3", 3, &[1, 2, 1], 3, &[2, 1, 2], 0),
        braid_pair("R3", 3, &[1, 2, 1, 2], 3, &[2, 1, 2, 2], 0),
        braid_pair("R3", 3, &[1, 2, 1, -2], 3, &[2, 1, 2, -2], 0),
        braid_pair("R3", 3, &[-1, -2, -1], 3, &[-2, -1, -2], 0),
        braid_pair("R3", 4, &[1, 2, 1, 3], 4, &[2, 1, 2, 3], 0),
        braid_pair("R3", 4, &[3, 2, 3, -1], 4, &[2, 3, 2, -1], 0),
    ]
}

/// Pairs related by adding one curl; positive curls multiply by `α`.
pub fn r1_pairs() -> Vec<MovePair> {
    let mut out = vec![
        braid_pair("R1", 1, &[], 2, &[1], 1),
        braid_pair("R1", 2, &[1], 3, &[1, 2], 1),
        braid_pair("R1", 2, &[1, 1, 1], 3, &[1, 1, 1, 2], 1),
        braid_pair("R1", 3, &[1, -2], 4, &[1, -2, -3], -1),
        braid_pair("R1", 2, &[1, 1], 3, &[1, 1, -2], -1),
    ];
    out.push(MovePair {
        name: "R1: hand-drawn positive curl".into(),
        before: load_diagram("unknot.txt"),
        after: load_diagram("curl_positive.txt"),
        alpha_factor: 1,
    });
    out.push(MovePair {
        name: "R1: hand-drawn negative curl".into(),
        before: load_diagram("unknot.txt"),
        after: load_diagram("curl_negative.txt"),
        alpha_factor: -1,
    });
    out
}

/// Every diagram in the move corpus.
pub fn corpus() -> Vec<Diagram> {
    r1_pairs()
        .into_iter()
        .chain(r2_pairs())
        .chain(r3_pairs())
        .flat_map(|p| [p.before, p.after])
        .chain(["hopf.txt", "curl_positive.txt"].map(load_diagram))
        .collect()
}
