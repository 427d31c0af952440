//! The substrate everything else stands on: partial bijections of a
//! finite ground set, composed right-to-left, with inverses, idempotent
//! restrictions, and the natural partial order.
//!
//! Run with `cargo run --example partial_bijections`.

use zigzag::pbij::{GroundSet, PartialBijection};

fn main() {
    let g = GroundSet::integers(5).expect("nonempty ground");

    let a = PartialBijection::from_pairs(&g, &[(0, 2), (1, 3)]).unwrap();
    let b = PartialBijection::from_pairs(&g, &[(2, 4), (3, 0)]).unwrap();
    let comp = |f: &PartialBijection, g: &PartialBijection| f.compose(g).unwrap();

    println!("a      = {a}");
    println!("b      = {b}");
    println!("b∘a    = {}", comp(&b, &a));
    println!("a∘b    = {}", comp(&a, &b));
    println!("a⁻¹    = {}", a.inverse());
    println!("a⁻¹∘a  = {}  (domain idempotent)", comp(&a.inverse(), &a));
    println!("a∘a⁻¹  = {}  (range idempotent)", comp(&a, &a.inverse()));

    let regular = comp(&a, &comp(&a.inverse(), &a));
    println!("a(a⁻¹a) = {regular}  (every element is regular)");

    let small = PartialBijection::from_pairs(&g, &[(0, 2)]).unwrap();
    println!();
    println!("small  = {small}");
    println!("small ≤ a: {}", small.restricts(&a));
    println!("a ≤ small: {}", a.restricts(&small));
}
