//! The Whitehead link `[-2,1,-2]` through the matrix pipeline, printed in
//! every output format.
//!
//! ```text
//! cargo run --example whitehead
//! ```

use kauffman_skein::cli::parse_notation;
use kauffman_skein::pipeline::Pipeline;
use kauffman_skein::ratfunc::render;

fn main() {
    let f = parse_notation("[-2,1,-2]").expect("valid notation");
    let pipeline = Pipeline::standard();

    let reduced = pipeline.evaluate(&f);
    println!("notation:  {f} ({} crossings)", f.crossing_count());
    println!("plain:     {}", render::plain(&reduced.value));
    println!("latex:     {}", render::latex(&reduced.value));
    println!("json:      {}", render::to_json(&reduced.value));

    // The fraction-free product keeps common factors of numerator and
    // denominator; it is the same function.
    let raw = pipeline.evaluate_raw(&f);
    println!("raw:       {}", render::plain(&raw.value));
    assert!(raw.value.equals(&reduced.value));

    let pre = pipeline.pre_closure(&f);
    println!("before closing, in the horizontal idempotent basis:");
    for (i, c) in pre.iter().enumerate() {
        println!("  e{}h: {}", i + 1, render::plain(c));
    }
}
