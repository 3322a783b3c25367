//! The 2-tangle skein algebra: idempotents, twist eigenvalues and the base
//! change matrix between the two idempotent bases.
//!
//! ```text
//! cargo run --example skein_algebra
//! ```

use kauffman_skein::ratfunc::render::plain;
use kauffman_skein::tangle::{
    self, base_change_matrix, closed_form_base_change_matrix, cross, dot, idempotents_h, idempotents_v, Basis,
};

fn main() {
    let v = idempotents_v();
    let h = idempotents_h();
    for (i, e) in v.iter().enumerate() {
        let [a, b, c] = e.coords();
        println!("e{}v = ({}) ID + ({}) CUPCAP + ({}) SIGMA", i + 1, plain(a), plain(b), plain(c));
    }

    let lambda = tangle::twist_eigenvalues(1);
    println!("twist eigenvalues: {}", lambda.iter().map(plain).collect::<Vec<_>>().join(", "));
    for (i, e) in v.iter().enumerate() {
        let twisted = dot(&tangle::sigma(), e).unwrap();
        assert_eq!(twisted, e.scale(&lambda[i]));
    }

    // Horizontal idempotents are orthogonal under juxtaposition.
    for i in 0..3 {
        for j in 0..3 {
            let p = cross(&h[i], &h[j]).unwrap();
            assert_eq!(p.is_zero(), i != j);
        }
    }

    let m = base_change_matrix();
    assert_eq!(m, closed_form_base_change_matrix());
    assert!(m.mul(&m).is_identity());
    println!("base change matrix M (M² = I):");
    for i in 0..3 {
        let row: Vec<String> = (0..3).map(|j| plain(m.get(i, j))).collect();
        println!("  [{}]", row.join(", "));
    }

    let sigma_in_h = tangle::sigma().to_basis(Basis::IdempH);
    println!("σ in the horizontal basis: {:?}", sigma_in_h.coords().iter().map(plain).collect::<Vec<_>>());
}
