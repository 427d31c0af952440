//! For a singly aligned left cancellative category, the equal-source
//! morphism pairs [α, β] (up to a common invertible factor) form an
//! inverse semigroup whose product routes through cone meets.  This is
//! the same semigroup as the zigzag maps, witnessed by an isomorphism
//! sending [α, β] to τ_α ∘ τ_β⁻¹.
//!
//! Run with `cargo run --example pair_semigroup`.

use zigzag::cat::PairElem;
use zigzag::corpus::glued_paths;
use zigzag::semigroup::verify_isomorphism;

fn main() {
    let cat = glued_paths();
    let pairs = cat
        .pair_semigroup()
        .expect("singly aligned and left cancellative");
    println!(
        "pair semigroup of the glued-paths category: order {}",
        pairs.order()
    );
    for i in 0..pairs.order() as u32 {
        println!("  {}", pairs.name(i));
    }
    println!();

    let zm = cat.zigzag_semigroup().expect("left cancellative");
    let images: Vec<u32> = pairs
        .elements()
        .iter()
        .map(|e| match e {
            PairElem::Zero => zm.semigroup.zero().expect("zero adjoined"),
            PairElem::Pair { alpha, beta, .. } => {
                let ta = zm.translation[*alpha as usize];
                let tb = zm.translation[*beta as usize];
                zm.semigroup.product(ta, zm.semigroup.inverse_of(tb))
            }
        })
        .collect();

    match verify_isomorphism(&pairs, &zm.semigroup, &images) {
        Ok(()) => println!("[α,β] ↦ τ_α∘τ_β⁻¹ is an isomorphism onto the zigzag maps"),
        Err(e) => println!("no isomorphism: {e}"),
    }
}
