//! Generate the eleven-point example semigroup and draw its eggbox
//! diagrams: one grid per D-class, rows indexed by range idempotents,
//! columns by domain idempotents, maximal idempotents starred.
//!
//! Run with `cargo run --example eggbox`.

use zigzag::corpus::i11_subsemigroup;

fn main() {
    let s = i11_subsemigroup();

    println!("closure of the eleven-point generators");
    println!(
        "  order {} ({} nonzero), {} idempotents, {} maximal",
        s.order(),
        s.order() - 1,
        s.nonzero_idempotents().len(),
        s.maximal_idempotents().len()
    );

    let mut sizes: Vec<usize> = s.green().d_classes.iter().map(Vec::len).collect();
    sizes.sort_unstable();
    println!("  D-class sizes: {sizes:?}");
    println!();

    print!("{}", s.eggbox().render_text(&s));
}
