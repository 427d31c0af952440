//! Left translations and zigzag maps of a small category.  Every
//! morphism α acts on morphisms by x ↦ α∘x where defined; the closure of
//! these partial bijections under product and inverse, with the empty map
//! adjoined, is the zigzag-map semigroup.  Also prints zigzag normal
//! forms in the eleven-point semigroup.
//!
//! Run with `cargo run --example zigzag_maps`.

use zigzag::corpus::{glued_paths, i11_subsemigroup};
use zigzag::paths::zigzag_normal_form;

fn main() {
    let cat = glued_paths();
    println!(
        "glued-paths category: {} objects, {} morphisms",
        cat.object_count(),
        cat.morphism_count()
    );

    let ground = cat.translation_ground();
    println!("left translations:");
    for m in 0..cat.morphism_count() as u32 {
        let tau = cat.left_translation(&ground, m).expect("left cancellative");
        println!("  τ_{} = {}", cat.morphism_name(m), tau);
    }
    println!();

    let zm = cat.zigzag_semigroup().expect("left cancellative");
    println!("zigzag maps: order {}", zm.semigroup.order());
    for i in 0..zm.semigroup.order() as u32 {
        println!("  {}", zm.semigroup.name(i));
    }
    println!();

    let s = i11_subsemigroup();
    println!("zigzag normal forms in the eleven-point closure:");
    for i in s.nonzero().take(8) {
        let word = zigzag_normal_form(&s, i).expect("Z2 holds");
        let letters: Vec<String> = word
            .letters
            .iter()
            .map(|&(a, b)| format!("{}* {}", s.name(a), s.name(b)))
            .collect();
        println!("  {}  =  {}", s.name(i), letters.join(" · "));
    }
}
