//! Build the path category of the eleven-point example: objects are the
//! maximal idempotents, morphisms are the paths, and composition is the
//! semigroup product.  Prints the category and its interchange file.
//!
//! Run with `cargo run --example path_category`.

use zigzag::corpus::i11_subsemigroup;
use zigzag::formats::emit_cat;
use zigzag::paths::{domain_paths, path_category, paths};

fn main() {
    let s = i11_subsemigroup();

    let all_paths = paths(&s);
    println!(
        "paths of the eleven-point closure ({} of them):",
        all_paths.len()
    );
    for &p in &all_paths {
        println!("  {}", s.name(p));
    }
    println!();

    let sample = all_paths[all_paths.len() / 2];
    let dp: Vec<String> = domain_paths(&s, sample)
        .iter()
        .map(|&x| s.name(x))
        .collect();
    println!("domain paths of {}: {{{}}}", s.name(sample), dp.join(", "));
    println!();

    let pc = path_category(&s).expect("Z1 holds for this semigroup");
    let cat = &pc.category;
    println!(
        "path category: {} objects, {} morphisms",
        cat.object_count(),
        cat.morphism_count()
    );
    for o in 0..cat.object_count() as u32 {
        println!(
            "  object {} = idempotent {}",
            cat.object_name(o),
            s.name(pc.object_element[o as usize])
        );
    }
    for m in 0..cat.morphism_count() as u32 {
        println!(
            "  {} : {} -> {}   (path {})",
            cat.morphism_name(m),
            cat.object_name(cat.source(m)),
            cat.object_name(cat.target(m)),
            s.name(pc.morphism_element[m as usize])
        );
    }
    println!();

    println!("as a .cat file:");
    print!("{}", emit_cat(cat));
}
