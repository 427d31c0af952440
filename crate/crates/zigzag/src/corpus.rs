//! Named instances shared by the examples, the fixtures, and the test
//! suite: concrete semigroups in `I_n`, small categories with interesting
//! cancellation behaviour, and a seeded sampler for acyclic graphs.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cat::FiniteCategory;
use crate::graph::DirectedGraph;
use crate::morita;
use crate::pbij::{self, GroundSet, PartialBijection, PbijOps};
use crate::semigroup::{self, Element, FiniteInverseSemigroup, GenerateOptions, SemigroupError};

/// Build a partial bijection on `g` from 1-based integer point names.
pub fn pb(g: &Arc<GroundSet>, pairs: &[(u32, u32)]) -> PartialBijection {
    let resolved: Vec<(u32, u32)> = pairs
        .iter()
        .map(|&(s, t)| {
            (
                g.index_of(&s.to_string()).expect("source point in ground"),
                g.index_of(&t.to_string()).expect("target point in ground"),
            )
        })
        .collect();
    PartialBijection::from_pairs(g, &resolved).expect("valid pairs")
}

/// The four generators of the running eleven-point example: an identity
/// on {7,8,9,10}, two rank-three maps landing in it, and a rank-one map.
pub fn i11_generators() -> (Arc<GroundSet>, Vec<PartialBijection>) {
    let g = GroundSet::integers(11).expect("nonempty ground");
    let e = pb(&g, &[(7, 7), (8, 8), (9, 9), (10, 10)]);
    let a = pb(&g, &[(1, 7), (2, 8), (3, 9)]);
    let b = pb(&g, &[(4, 7), (5, 8), (6, 10)]);
    let c = pb(&g, &[(11, 7)]);
    (g, vec![e, a, b, c])
}

/// Closure of the eleven-point generators: 35 elements, five nonzero
/// D-classes of sizes 1, 4, 4, 9 and 16.
pub fn i11_subsemigroup() -> FiniteInverseSemigroup<PartialBijection> {
    let (g, gens) = i11_generators();
    let ops = PbijOps::new(&g);
    semigroup::generate(&ops, &gens, &GenerateOptions::default())
        .expect("the closure is small and inverse")
}

/// The full symmetric inverse monoid on `n` points.  Grows as fast as its
/// reputation suggests; n ≤ 4 stays comfortable.
pub fn symmetric_inverse_monoid(n: u32) -> FiniteInverseSemigroup<PartialBijection> {
    let g = GroundSet::integers(n).expect("nonempty ground");
    let ops = PbijOps::new(&g);
    semigroup::from_elements(&ops, pbij::enumerate_all(&g)).expect("I_n is inverse")
}

/// The chain semilattice of identities on {1..k} ⊃ {1..k-1} ⊃ … ⊃ ∅.
pub fn chain_semilattice(k: u32) -> FiniteInverseSemigroup<PartialBijection> {
    let g = GroundSet::integers(k).expect("nonempty ground");
    let ops = PbijOps::new(&g);
    let elements: Vec<PartialBijection> = (0..=k)
        .map(|i| {
            let pairs: Vec<(u32, u32)> = (0..i).map(|p| (p, p)).collect();
            PartialBijection::from_pairs(&g, &pairs).expect("identity restriction")
        })
        .collect();
    semigroup::from_elements(&ops, elements).expect("chains are inverse")
}

/// The cyclic group of order `n` acting on `n` points, with a zero
/// adjoined.
pub fn cyclic_group_with_zero(n: u32) -> FiniteInverseSemigroup<PartialBijection> {
    let g = GroundSet::integers(n).expect("nonempty ground");
    let ops = PbijOps::new(&g);
    let cycle: Vec<(u32, u32)> = (1..=n).map(|p| (p, p % n + 1)).collect();
    let opts = GenerateOptions {
        adjoin_zero: true,
        ..GenerateOptions::default()
    };
    semigroup::generate(&ops, &[pb(&g, &cycle)], &opts).expect("groups are inverse")
}

/// Closure of the single translation 1 → 2 on two points: five elements.
pub fn single_translation() -> FiniteInverseSemigroup<PartialBijection> {
    let g = GroundSet::integers(2).expect("nonempty ground");
    let ops = PbijOps::new(&g);
    semigroup::generate(&ops, &[pb(&g, &[(1, 2)])], &GenerateOptions::default())
        .expect("closure of one translation")
}

/// Two paths `a∘x` and `b∘y` glued at their composite: the shape
/// `W → A → U ← B ← W` with `c = a∘x = b∘y`.  Left and right
/// cancellative and singly aligned.
pub fn glued_paths() -> FiniteCategory {
    FiniteCategory::from_parts(
        &["U", "A", "B", "W"],
        &[
            ("a", "A", "U"),
            ("b", "B", "U"),
            ("x", "W", "A"),
            ("y", "W", "B"),
            ("c", "W", "U"),
        ],
        &[("a", "x", "c"), ("b", "y", "c")],
    )
    .expect("a valid category")
}

/// The cyclic group of order two as a one-object category.
pub fn cyclic2() -> FiniteCategory {
    FiniteCategory::from_parts(&["o"], &[("g", "o", "o")], &[("g", "g", "id_o")])
        .expect("a valid category")
}

/// Left cancellative but not singly aligned: two principal cones meeting
/// in a two-element set that is not itself a cone.
pub fn crossed_cones() -> FiniteCategory {
    FiniteCategory::from_parts(
        &["t", "p", "q", "s"],
        &[
            ("al", "p", "t"),
            ("be", "q", "t"),
            ("x", "s", "p"),
            ("y", "s", "p"),
            ("u", "s", "q"),
            ("v", "s", "q"),
            ("m1", "s", "t"),
            ("m2", "s", "t"),
        ],
        &[
            ("al", "x", "m1"),
            ("al", "y", "m2"),
            ("be", "u", "m2"),
            ("be", "v", "m1"),
        ],
    )
    .expect("a valid category")
}

/// Left cancellative and singly aligned but not right cancellative:
/// distinct parallel `p ≠ q` with `p∘r = q∘r`.
pub fn coequalized_pair() -> FiniteCategory {
    FiniteCategory::from_parts(
        &["x", "y", "z"],
        &[
            ("r", "x", "y"),
            ("p", "y", "z"),
            ("q", "y", "z"),
            ("d", "x", "z"),
        ],
        &[("p", "r", "d"), ("q", "r", "d")],
    )
    .expect("a valid category")
}

/// Every category fixture with a short name, cancellative or not.
pub fn fixture_categories() -> Vec<(String, FiniteCategory)> {
    vec![
        ("glued-paths".into(), glued_paths()),
        ("cyclic2".into(), cyclic2()),
        ("crossed-cones".into(), crossed_cones()),
        ("coequalized-pair".into(), coequalized_pair()),
    ]
}

/// A single edge u → v.
pub fn single_edge() -> DirectedGraph {
    DirectedGraph::from_parts(&["u", "v"], &[("a", "u", "v")]).expect("a valid graph")
}

/// The four-vertex figure behind the glued-paths category, before any
/// identification: two length-two walks `a∘x`, `b∘y` from W to U plus
/// the direct chord c.
pub fn two_arms() -> DirectedGraph {
    DirectedGraph::from_parts(
        &["U", "A", "B", "W"],
        &[
            ("a", "A", "U"),
            ("x", "W", "A"),
            ("b", "B", "U"),
            ("y", "W", "B"),
            ("c", "W", "U"),
        ],
    )
    .expect("a valid graph")
}

/// The commuting square u → {v, w} → z, with the diagonal left out.
pub fn diamond() -> DirectedGraph {
    DirectedGraph::from_parts(
        &["u", "v", "w", "z"],
        &[
            ("a", "u", "v"),
            ("b", "u", "w"),
            ("c", "v", "z"),
            ("d", "w", "z"),
        ],
    )
    .expect("a valid graph")
}

/// A one-vertex loop; the only cyclic fixture, kept for guard tests.
pub fn loop_graph() -> DirectedGraph {
    DirectedGraph::from_parts(&["v"], &[("e", "v", "v")]).expect("a valid graph")
}

/// Sample `count` acyclic graphs with at most 5 vertices and 6 edges.
/// Edges always point from a lower to a higher vertex index, so the
/// result is acyclic by construction; parallel edges are allowed.
/// Samples whose path count would make downstream closures large are
/// redrawn, keeping property runs fast without losing shape variety.
pub fn random_acyclic_graphs(seed: u64, count: usize) -> Vec<DirectedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let vertex_count = rng.gen_range(2..=5u32);
        let vertices: Vec<String> = (1..=vertex_count).map(|i| format!("v{i}")).collect();
        let vertex_refs: Vec<&str> = vertices.iter().map(String::as_str).collect();
        let edge_count = rng.gen_range(1..=6u32.min(vertex_count * 2));
        let edges: Vec<(String, String, String)> = (1..=edge_count)
            .map(|i| {
                let src = rng.gen_range(0..vertex_count - 1);
                let tgt = rng.gen_range(src + 1..vertex_count);
                (
                    format!("e{i}"),
                    vertices[src as usize].clone(),
                    vertices[tgt as usize].clone(),
                )
            })
            .collect();
        let edge_refs: Vec<(&str, &str, &str)> = edges
            .iter()
            .map(|(n, s, t)| (n.as_str(), s.as_str(), t.as_str()))
            .collect();
        let graph = DirectedGraph::from_parts(&vertex_refs, &edge_refs)
            .expect("sampled endpoints are valid and ordered");
        let paths = graph.all_paths().expect("sampled graphs are acyclic");
        let pair_count: usize = (0..vertex_count)
            .map(|v| paths.iter().filter(|p| p.source() == v).count().pow(2))
            .sum();
        if pair_count <= 150 {
            out.push(graph);
        }
    }
    out
}

/// Copy a semigroup into its faithful partial-bijection representation,
/// so heterogeneously built instances share one element type.
pub fn pbij_image<E: Element>(
    sgp: &FiniteInverseSemigroup<E>,
) -> Result<FiniteInverseSemigroup<PartialBijection>, SemigroupError> {
    let (ground, elements) = sgp.to_partial_bijections()?;
    let ops = PbijOps::new(&ground);
    semigroup::from_elements(&ops, elements)
}

/// Small semigroups worth running the Morita enlargement over.
pub fn morita_bases() -> Vec<(String, FiniteInverseSemigroup<PartialBijection>)> {
    let one = GroundSet::integers(1).expect("nonempty ground");
    let trivial = semigroup::from_elements(
        &PbijOps::new(&one),
        vec![
            PartialBijection::identity(&one),
            PartialBijection::empty(&one),
        ],
    )
    .expect("two elements");
    vec![
        ("trivial".into(), trivial),
        ("I2".into(), symmetric_inverse_monoid(2)),
        ("chain-2".into(), chain_semilattice(2)),
        ("chain-3".into(), chain_semilattice(3)),
        ("single-translation".into(), single_translation()),
        ("cyclic-2".into(), cyclic_group_with_zero(2)),
    ]
}

/// The standard corpus: a deterministic list of at least fifty named
/// inverse semigroups of varied provenance — closures in I_n, chains,
/// groups with zero, Morita enlargements, zigzag-map semigroups of the
/// fixture categories, and graph inverse semigroups of sampled acyclic
/// graphs, all carried by partial bijections.
pub fn standard_semigroups() -> Vec<(String, FiniteInverseSemigroup<PartialBijection>)> {
    let mut out: Vec<(String, FiniteInverseSemigroup<PartialBijection>)> = Vec::new();
    out.push(("i11-example".into(), i11_subsemigroup()));
    for n in 1..=3 {
        out.push((format!("I{n}"), symmetric_inverse_monoid(n)));
    }
    for k in 1..=6 {
        out.push((format!("chain-{k}"), chain_semilattice(k)));
    }
    for n in 1..=4 {
        out.push((format!("cyclic-{n}"), cyclic_group_with_zero(n)));
    }
    out.push(("single-translation".into(), single_translation()));
    for (name, base) in morita_bases() {
        let im = morita::im_construction(&base).expect("enlargements are inverse");
        out.push((
            format!("im-{name}"),
            pbij_image(&im).expect("faithful copy"),
        ));
    }
    for (name, cat) in fixture_categories() {
        let zm = cat
            .zigzag_semigroup()
            .expect("fixtures are left cancellative");
        out.push((format!("zm-{name}"), zm.semigroup));
    }
    for (i, graph) in random_acyclic_graphs(2026, 28).into_iter().enumerate() {
        let s = graph
            .inverse_semigroup()
            .expect("sampled graphs are acyclic");
        out.push((format!("graph-{i}"), pbij_image(&s).expect("faithful copy")));
    }
    out
}
