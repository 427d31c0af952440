//! The enlargement IM(S): triples (e, s, f) with ss* ≤ e and s*s ≤ f over
//! nonzero idempotents e, f, multiplied diagonally.  For the symmetric
//! inverse monoid on two points this yields nineteen elements, and the
//! result always satisfies the zigzag axioms.
//!
//! Run with `cargo run --example morita`.

use zigzag::corpus::symmetric_inverse_monoid;
use zigzag::morita::im_construction;
use zigzag::paths::{check_z1, check_z2, check_z3, paths, theta_check};

fn main() {
    let base = symmetric_inverse_monoid(2);
    println!("base: I_2, order {}", base.order());

    let im = im_construction(&base).expect("the base is inverse with zero");
    println!("enlargement IM(I_2): order {}", im.order());
    for i in 0..im.order() as u32 {
        println!("  {}", im.name(i));
    }
    println!();

    println!(
        "maximal idempotents: {:?}",
        im.maximal_idempotents()
            .iter()
            .map(|&e| im.name(e))
            .collect::<Vec<_>>()
    );
    println!(
        "paths: {:?}",
        paths(&im).iter().map(|&p| im.name(p)).collect::<Vec<_>>()
    );
    println!();

    println!(
        "Z1 {}",
        if check_z1(&im).unwrap() {
            "pass"
        } else {
            "FAIL"
        }
    );
    println!(
        "Z2 {}",
        if check_z2(&im).unwrap() {
            "pass"
        } else {
            "FAIL"
        }
    );
    println!(
        "Z3 {}",
        if check_z3(&im).unwrap() {
            "pass"
        } else {
            "FAIL"
        }
    );
    match theta_check(&im) {
        Ok(()) => println!("θ is an isomorphism onto the zigzag maps of the path category"),
        Err(e) => println!("θ check failed: {e}"),
    }
}
