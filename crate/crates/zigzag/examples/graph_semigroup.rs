//! The graph inverse semigroup of an acyclic graph, built two ways: once
//! directly from equal-source path pairs, and once as the zigzag maps of
//! the graph's path category.  The two constructions are verified to be
//! isomorphic element-for-element.
//!
//! Run with `cargo run --example graph_semigroup`.

use zigzag::corpus::two_arms;
use zigzag::graph::GraphPairElem;
use zigzag::semigroup::verify_isomorphism;

fn main() {
    let g = two_arms();
    println!(
        "two-arms graph: {} vertices, {} edges",
        g.vertex_count(),
        g.edge_count()
    );

    let paths = g.all_paths().expect("acyclic");
    println!("paths ({} of them):", paths.len());
    for p in &paths {
        println!(
            "  {}  : {} -> {}",
            p.display(&g),
            g.vertex_name(p.source()),
            g.vertex_name(p.target(&g))
        );
    }
    println!();

    let s = g.inverse_semigroup().expect("acyclic");
    println!("graph inverse semigroup: order {}", s.order());

    let cat = g.path_category().expect("acyclic");
    let zm = cat
        .zigzag_semigroup()
        .expect("path categories cancel on the left");
    println!(
        "zigzag maps of the path category: order {}",
        zm.semigroup.order()
    );

    // Map each pair (α, β) to τ_α ∘ τ_β⁻¹; empty paths name identities,
    // whose morphism index equals the vertex index.
    let morphism_of = |p: &zigzag::graph::GraphPath| -> u32 {
        if p.edges.is_empty() {
            p.vertex
        } else {
            cat.morphism_named(&p.display(&g))
                .expect("paths name morphisms")
        }
    };
    let images: Vec<u32> = s
        .elements()
        .iter()
        .map(|e| match e {
            GraphPairElem::Zero => zm.semigroup.zero().expect("zero adjoined"),
            GraphPairElem::Pair { alpha, beta, .. } => {
                let ta = zm.translation[morphism_of(alpha) as usize];
                let tb = zm.translation[morphism_of(beta) as usize];
                zm.semigroup.product(ta, zm.semigroup.inverse_of(tb))
            }
        })
        .collect();

    match verify_isomorphism(&s, &zm.semigroup, &images) {
        Ok(()) => println!("the two constructions are isomorphic"),
        Err(e) => println!("no isomorphism: {e}"),
    }
}
