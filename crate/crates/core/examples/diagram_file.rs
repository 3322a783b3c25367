//! Reads a diagram in the text format, evaluates it with the brute-force
//! oracle and writes it back out.
//!
//! ```text
//! cargo run --example diagram_file [PATH]
//! ```
//!
//! Without a path a built-in Hopf link is used.

use kauffman_skein::oracle::{braid_closure, kauffman_bruteforce, Diagram};
use kauffman_skein::ratfunc::render::plain;

const HOPF: &str = "\
# Hopf link: two crossings sharing all four arcs
X x y c d A
X c d x y A
";

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(&path).unwrap_or_else(|e| {
            eprintln!("{path}: {e}");
            std::process::exit(2)
        }),
        None => HOPF.to_string(),
    };
    let diagram = match Diagram::parse(&text) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2)
        }
    };
    println!(
        "{} crossings, {} components, writhe {}",
        diagram.crossing_count(),
        diagram.component_count(),
        diagram.writhe()
    );
    println!("value: {}", plain(&kauffman_bruteforce(&diagram).unwrap()));
    println!("canonical text:\n{}", diagram.to_text());

    // Braid closures produce the same kind of diagram.
    let from_braid = braid_closure(2, &[1, 1]);
    println!("closure of σ₁² as text:\n{}", from_braid.to_text());
}
