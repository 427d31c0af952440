//! Quotient the eleven-point example by the domain-path relation: s ≈ t
//! when they share domain paths and act the same on them.  The quotient
//! repairs the Z3 failure and is isomorphic to the zigzag maps of the
//! path category.
//!
//! Run with `cargo run --example quotient`.

use zigzag::corpus::i11_subsemigroup;
use zigzag::paths::{check_z3, z_quotient};

fn main() {
    let s = i11_subsemigroup();
    println!(
        "eleven-point closure: order {}, Z3 {}",
        s.order(),
        if check_z3(&s).unwrap() {
            "pass"
        } else {
            "FAIL"
        }
    );

    let q = z_quotient(&s).expect("the relation is a congruence here");
    println!(
        "quotient: order {}, Z3 {}",
        q.semigroup.order(),
        if check_z3(&q.semigroup).unwrap() {
            "pass"
        } else {
            "FAIL"
        }
    );
    println!();

    println!("merged classes:");
    for class in q.partition.classes.iter().filter(|c| c.len() > 1) {
        let names: Vec<String> = class.iter().map(|&i| s.name(i)).collect();
        println!("  {{{}}}", names.join(", "));
    }
}
