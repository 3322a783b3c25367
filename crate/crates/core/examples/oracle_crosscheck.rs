//! Checks the matrix pipeline against the brute-force skein evaluator on a
//! few notations, and shows the oracle's memo table filling up.
//!
//! ```text
//! cargo run --release --example oracle_crosscheck
//! ```

use std::time::Instant;

use kauffman_skein::cli::parse_notation;
use kauffman_skein::kauffman_2bridge;
use kauffman_skein::oracle::{build_diagram, Evaluator, Strategy};

fn main() {
    let mut forward = Evaluator::new();
    let mut reverse = Evaluator::new().with_strategy(Strategy::Reverse).with_memo(false);
    for text in ["[1]", "[3]", "[2]", "[-2,1,-2]", "[2,1,2]", "[1,-3,2]", "[3,1,1,1,3]"] {
        let f = parse_notation(text).unwrap();
        let diagram = build_diagram(&f);
        let started = Instant::now();
        let matrix = kauffman_2bridge(&f).value;
        let brute = forward.evaluate(&diagram).unwrap();
        let other = reverse.evaluate(&diagram).unwrap();
        let ok = matrix == brute && brute == other;
        println!(
            "{text:>12}: {} crossings, {} components, {} in {:.1?}",
            diagram.crossing_count(),
            diagram.component_count(),
            if ok { "agree" } else { "DISAGREE" },
            started.elapsed()
        );
        assert!(ok);
    }
    println!("memoized subdiagrams: {}", forward.memo_len());
}
