//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line with its
//! runtime, written straight to stderr so it shows even when output is
//! captured.

mod common;

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use kauffman_skein::oracle::{build_diagram, kauffman_bruteforce, Diagram, Evaluator};
use kauffman_skein::pipeline::{closure_row, kauffman_2bridge, matrix_b, matrix_b1, matrix_d, FractionNotation};
use kauffman_skein::ratfunc::{delta, RatFunc};
use kauffman_skein::tangle::{
    self, base_change_matrix, closed_form_base_change_matrix, cross, dot, idempotents_h, idempotents_v, Basis,
    SkeinMatrix, SkeinVector,
};

fn criterion(n: u32, name: &str, limit: Duration, body: impl FnOnce()) {
    let started = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(body));
    let elapsed = started.elapsed();
    let verdict = match (&outcome, elapsed <= limit) {
        (Ok(()), true) => "PASS".to_string(),
        (Ok(()), false) => format!("FAIL (over the {limit:?} limit)"),
        (Err(_), _) => "FAIL".to_string(),
    };
    let _ = writeln!(std::io::stderr(), "criterion {n} [{name}]: {verdict} in {elapsed:.2?}");
    if let Err(payload) = outcome {
        std::panic::resume_unwind(payload);
    }
    assert!(elapsed <= limit, "criterion {n} took {elapsed:?}, limit {limit:?}");
}

fn notation(e: &[i32]) -> FractionNotation {
    FractionNotation::new(e.to_vec()).unwrap()
}

#[test]
fn criterion_1_whitehead_value() {
    criterion(1, "Whitehead golden value", Duration::from_secs(1), || {
        let value = kauffman_2bridge(&notation(&[-2, 1, -2])).value;
        assert!(value.equals(&common::whitehead_final()));
    });
}

#[test]
fn criterion_2_whitehead_in_delta() {
    criterion(2, "Whitehead value before substituting delta", Duration::from_secs(1), || {
        let value = kauffman_2bridge(&notation(&[-2, 1, -2])).value;
        assert!(value.equals(&common::whitehead_in_delta()));
    });
}

fn gen(v: &SkeinVector) -> SkeinVector {
    v.to_basis(Basis::Gen)
}

#[test]
fn criterion_3_structure_constants() {
    criterion(3, "structure constants and base change", Duration::from_secs(10), || {
        let v = idempotents_v();
        let h = idempotents_h();
        let lambda = tangle::twist_eigenvalues(1);
        let lambda_inv = tangle::twist_eigenvalues(-1);

        // Vertical idempotents under stacking.
        for i in 0..3 {
            for j in 0..3 {
                let p = dot(&v[i], &v[j]).unwrap();
                if i == j {
                    assert_eq!(p, v[i], "e{}v is idempotent", i + 1);
                } else {
                    assert!(p.is_zero(), "e{}v ⊙ e{}v = 0", i + 1, j + 1);
                }
            }
        }
        let sum = v[0].add(&v[1]).unwrap().add(&v[2]).unwrap();
        assert_eq!(sum, tangle::identity());
        for i in 0..3 {
            for (x, l) in [(tangle::sigma(), &lambda[i]), (tangle::sigma_inverse(), &lambda_inv[i])] {
                assert_eq!(dot(&x, &v[i]).unwrap(), v[i].scale(l));
                assert_eq!(dot(&v[i], &x).unwrap(), v[i].scale(l));
            }
        }

        // Horizontal idempotents under juxtaposition.
        for i in 0..3 {
            for j in 0..3 {
                let p = cross(&h[i], &h[j]).unwrap();
                if i == j {
                    assert_eq!(p, h[i]);
                } else {
                    assert!(p.is_zero());
                }
            }
        }
        let sum = h[0].add(&h[1]).unwrap().add(&h[2]).unwrap();
        assert_eq!(sum, tangle::cupcap());
        for i in 0..3 {
            let x = tangle::sigma_h();
            assert_eq!(cross(&x, &h[i]).unwrap(), h[i].scale(&lambda[i]));
            assert_eq!(cross(&h[i], &x).unwrap(), h[i].scale(&lambda[i]));
        }

        // Mixed products: e_ih ⊗ e_jv = e_jv ⊗ e_ih = m_ij e_ih, and the
        // same with ⊙ and v, h exchanged.
        let m = closed_form_base_change_matrix();
        for i in 0..3 {
            for j in 0..3 {
                let mij = m.get(i, j);
                assert_eq!(cross(&h[i], &v[j]).unwrap(), h[i].scale(mij), "m{}{} under ⊗", i + 1, j + 1);
                assert_eq!(cross(&v[j], &h[i]).unwrap(), h[i].scale(mij));
                assert_eq!(dot(&v[i], &h[j]).unwrap(), v[i].scale(mij), "m{}{} under ⊙", i + 1, j + 1);
                assert_eq!(dot(&h[j], &v[i]).unwrap(), v[i].scale(mij));
            }
        }

        let derived = base_change_matrix();
        assert_eq!(derived, m);
        assert!(derived.mul(&derived).is_identity());
    });
}

/// Matrix of `x ↦ f(x)` on the horizontal basis, columns are images.
fn matrix_of(f: impl Fn(&SkeinVector) -> SkeinVector) -> SkeinMatrix {
    let h = idempotents_h();
    let cols: Vec<[RatFunc; 3]> = h.iter().map(|e| f(e).to_basis(Basis::IdempH).into_coords()).collect();
    SkeinMatrix::new(std::array::from_fn(|i| std::array::from_fn(|j| cols[j][i].clone())))
}

#[test]
fn criterion_4_linear_maps() {
    criterion(4, "linear maps against the tangle algebra", Duration::from_secs(30), || {
        for k in -3..=3 {
            let d = matrix_of(|x| cross(&gen(x), &tangle::horizontal_twist(k)).unwrap());
            assert_eq!(d, matrix_d(k), "D({k})");
            let b = matrix_of(|x| dot(&gen(x), &tangle::vertical_twist(k)).unwrap());
            assert_eq!(b, matrix_b(k), "B({k})");
            let b1 = matrix_of(|x| cross(&gen(x), &tangle::vertical_twist(k)).unwrap());
            assert_eq!(b1, matrix_b1(k), "B1({k})");
        }
        let row = closure_row();
        for (i, e) in idempotents_h().iter().enumerate() {
            assert_eq!(tangle::closure(e).unwrap(), row[i], "closure of e{}h", i + 1);
        }
        for a in -3..=3 {
            for b in -3..=3 {
                assert_eq!(matrix_d(a).mul(&matrix_d(b)), matrix_d(a + b));
                assert_eq!(matrix_b(a).mul(&matrix_b(b)), matrix_b(a + b));
            }
        }
    });
}

fn sweep_5_notations() -> Vec<FractionNotation> {
    let values = [-2, -1, 1, 2];
    let mut out: Vec<FractionNotation> = values.iter().map(|&b| notation(&[b])).collect();
    for &x in &values {
        for &y in &values {
            for &z in &values {
                out.push(notation(&[x, y, z]));
            }
        }
    }
    assert_eq!(out.len(), 68);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut sampled = 0;
    while sampled < 50 {
        let e: Vec<i32> = (0..5).map(|_| rng.gen_range(1..=4) * if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
        let f = notation(&e);
        if f.crossing_count() <= 10 {
            out.push(f);
            sampled += 1;
        }
    }
    out
}

#[test]
fn criterion_5_oracle_sweep() {
    criterion(5, "pipeline against brute force, 118 notations", Duration::from_secs(600), || {
        let mut ev = Evaluator::new();
        let cases = sweep_5_notations();
        let failures: Vec<String> = cases
            .iter()
            .filter(|f| ev.evaluate(&build_diagram(f)).unwrap() != kauffman_2bridge(f).value)
            .map(|f| f.to_string())
            .collect();
        assert!(failures.is_empty(), "mismatches: {failures:?}");
    });
}

#[test]
fn criterion_6_mirror() {
    criterion(6, "mirror notation inverts both variables", Duration::from_secs(120), || {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..100 {
            let len = [1, 3, 5][rng.gen_range(0..3)];
            let e: Vec<i32> = (0..len).map(|_| rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
            let f = notation(&e);
            let value = kauffman_2bridge(&f).value;
            assert_eq!(kauffman_2bridge(&f.negated()).value, value.mirror(), "{f}");
        }
    });
}

#[test]
fn criterion_7_oracle_moves() {
    criterion(7, "oracle base cases and Reidemeister moves", Duration::from_secs(60), || {
        assert_eq!(kauffman_bruteforce(&Diagram::empty()).unwrap(), RatFunc::one());
        assert_eq!(kauffman_bruteforce(&Diagram::unlink(1)).unwrap(), delta());
        let curl = common::load_diagram("curl_positive.txt");
        assert_eq!(kauffman_bruteforce(&curl).unwrap(), &RatFunc::alpha_pow(1) * &delta());

        let (r1, r2, r3) = (common::r1_pairs(), common::r2_pairs(), common::r3_pairs());
        assert!(r2.len() >= 5 && r3.len() >= 5 && !r1.is_empty());
        for pair in r1.iter().chain(&r2).chain(&r3) {
            let before = kauffman_bruteforce(&pair.before).unwrap();
            let after = kauffman_bruteforce(&pair.after).unwrap();
            assert_eq!(after, &RatFunc::alpha_pow(pair.alpha_factor) * &before, "{}", pair.name);
        }
    });
}
