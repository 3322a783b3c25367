//! Negating every entry of a notation mirrors the diagram, which inverts
//! both variables of the polynomial.
//!
//! ```text
//! cargo run --example mirror_symmetry
//! ```

use kauffman_skein::cli::parse_notation;
use kauffman_skein::kauffman_2bridge;
use kauffman_skein::oracle::{build_diagram, kauffman_bruteforce};
use kauffman_skein::ratfunc::render::plain;
use kauffman_skein::ratfunc::Substitution;

fn main() {
    for text in ["[3]", "[2,1,2]", "[-2,1,-2]", "[1,2,3]"] {
        let f = parse_notation(text).unwrap();
        let value = kauffman_2bridge(&f).value;
        let mirrored = kauffman_2bridge(&f.negated()).value;
        assert_eq!(mirrored, value.mirror());
        assert_eq!(mirrored, value.substitute(&Substitution::mirror()).unwrap());
        println!("{f} -> {}: {}", f.negated(), plain(&mirrored));
    }

    // The same holds diagrammatically, by flipping every crossing.
    let trefoil = build_diagram(&parse_notation("[3]").unwrap());
    let left = kauffman_bruteforce(&trefoil.mirror()).unwrap();
    assert_eq!(left, kauffman_bruteforce(&trefoil).unwrap().mirror());
    println!("mirror of the trefoil diagram: {}", plain(&left));
}
