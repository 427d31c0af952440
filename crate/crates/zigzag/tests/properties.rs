//! Property tests: the partial-bijection laws under random maps, closure
//! generation invariants, and the classical shape of graph inverse
//! semigroups over seeded random acyclic graphs.

use proptest::prelude::*;

use zigzag::corpus;
use zigzag::graph::{DirectedGraph, GraphPairElem, GraphPath};
use zigzag::paths::{check_z1, check_z2, check_z3, paths};
use zigzag::pbij::{GroundSet, PartialBijection, PbijOps};
use zigzag::semigroup::{generate, GenerateOptions};

/// A uniform-ish random partial bijection on six points: two shuffles
/// zipped and truncated, so injectivity holds by construction.
fn pbij6() -> impl Strategy<Value = PartialBijection> {
    let g = GroundSet::integers(6).unwrap();
    let idx: Vec<u32> = (0..6).collect();
    (
        Just(idx.clone()).prop_shuffle(),
        Just(idx).prop_shuffle(),
        0usize..=6,
    )
        .prop_map(move |(dom, img, k)| {
            let pairs: Vec<(u32, u32)> = dom.into_iter().zip(img).take(k).collect();
            PartialBijection::from_pairs(&g, &pairs).expect("zipped shuffles are injective")
        })
}

fn pbij4() -> impl Strategy<Value = PartialBijection> {
    let g = GroundSet::integers(4).unwrap();
    let idx: Vec<u32> = (0..4).collect();
    (
        Just(idx.clone()).prop_shuffle(),
        Just(idx).prop_shuffle(),
        0usize..=4,
    )
        .prop_map(move |(dom, img, k)| {
            let pairs: Vec<(u32, u32)> = dom.into_iter().zip(img).take(k).collect();
            PartialBijection::from_pairs(&g, &pairs).expect("zipped shuffles are injective")
        })
}

proptest! {
    #[test]
    fn composition_is_associative((f, g, h) in (pbij6(), pbij6(), pbij6())) {
        let left = f.compose(&g.compose(&h).unwrap()).unwrap();
        let right = f.compose(&g).unwrap().compose(&h).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inversion_reverses_composition((f, g) in (pbij6(), pbij6())) {
        let fg = f.compose(&g).unwrap();
        let gf = g.inverse().compose(&f.inverse()).unwrap();
        prop_assert_eq!(fg.inverse(), gf);
    }

    #[test]
    fn every_map_is_regular(f in pbij6()) {
        let back = f.compose(&f.inverse()).unwrap().compose(&f).unwrap();
        prop_assert_eq!(back, f.clone());
        prop_assert_eq!(f.inverse().inverse(), f);
    }

    #[test]
    fn domain_idempotents_commute((f, g) in (pbij6(), pbij6())) {
        let e = f.inverse().compose(&f).unwrap();
        let d = g.inverse().compose(&g).unwrap();
        prop_assert!(e.is_idempotent());
        prop_assert_eq!(e.compose(&d).unwrap(), d.compose(&e).unwrap());
    }

    #[test]
    fn restriction_is_the_natural_order((f, g) in (pbij6(), pbij6())) {
        let down = g.compose(&f.inverse().compose(&f).unwrap()).unwrap();
        prop_assert_eq!(f.restricts(&g), down == f);
    }

    #[test]
    fn rank_never_grows_under_composition((f, g) in (pbij6(), pbij6())) {
        let fg = f.compose(&g).unwrap();
        prop_assert!(fg.rank() <= f.rank().min(g.rank()));
    }

    #[test]
    fn identity_and_zero_absorb(f in pbij6()) {
        let g = GroundSet::integers(6).unwrap();
        let id = PartialBijection::identity(&g);
        let zero = PartialBijection::empty(&g);
        prop_assert_eq!(id.compose(&f).unwrap(), f.clone());
        prop_assert_eq!(f.compose(&id).unwrap(), f.clone());
        prop_assert!(zero.compose(&f).unwrap().is_zero());
        prop_assert!(f.compose(&zero).unwrap().is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closures_are_inverse_semigroups(gens in prop::collection::vec(pbij4(), 1..=2)) {
        let g = GroundSet::integers(4).unwrap();
        let ops = PbijOps::new(&g);
        let s = generate(&ops, &gens, &GenerateOptions::default()).unwrap();
        s.verify_inverse_structure().unwrap();
        let idems = s.idempotents();
        for &e in &idems {
            for &f in &idems {
                prop_assert_eq!(s.product(e, f), s.product(f, e));
            }
        }
    }

    #[test]
    fn closure_generation_is_deterministic(gens in prop::collection::vec(pbij4(), 1..=2)) {
        let g = GroundSet::integers(4).unwrap();
        let ops = PbijOps::new(&g);
        let first = generate(&ops, &gens, &GenerateOptions::default()).unwrap();
        let second = generate(&ops, &gens, &GenerateOptions::default()).unwrap();
        prop_assert_eq!(first.elements(), second.elements());
    }
}

/// `gamma` factors as `beta∘ε`: same target, and the stored edges of
/// `beta` are an initial segment of those of `gamma`.
fn extends(g: &DirectedGraph, gamma: &GraphPath, beta: &GraphPath) -> bool {
    gamma.target(g) == beta.target(g)
        && gamma.edges.len() >= beta.edges.len()
        && gamma.edges[..beta.edges.len()] == beta.edges[..]
}

#[test]
fn sampled_graph_semigroups_have_the_classical_shape() {
    for graph in corpus::random_acyclic_graphs(4242, 10) {
        let s = graph.inverse_semigroup().unwrap();

        // Proper, combinatorial, 0-E-unitary, and fully zigzag.
        assert!(s.ambiguous_pair().is_none());
        assert!(s.dclass_maximal_defect().is_none());
        assert!(s.proper_defect().is_none());
        assert!(s.fat_h_class().is_none());
        assert!(s.zero_e_unitary_defect().unwrap().is_none());
        assert!(check_z1(&s).unwrap());
        assert!(check_z2(&s).unwrap());
        assert!(check_z3(&s).unwrap());
    }
}

#[test]
fn sampled_graph_idempotents_are_the_diagonal_pairs() {
    for graph in corpus::random_acyclic_graphs(20260817, 10) {
        let s = graph.inverse_semigroup().unwrap();
        let all_paths = graph.all_paths().unwrap();

        let idempotents = s.idempotents();
        assert_eq!(idempotents.len(), all_paths.len() + 1);
        for &e in &idempotents {
            match s.element(e) {
                GraphPairElem::Zero => {}
                GraphPairElem::Pair { alpha, beta, .. } => assert_eq!(alpha, beta),
            }
        }

        // The order of diagonal idempotents is extension of paths, the
        // maximal ones sit on the empty paths, and the paths of the
        // semigroup are the pairs with an empty second component.
        for &e in &idempotents {
            for &f in &idempotents {
                let (GraphPairElem::Pair { alpha: a, .. }, GraphPairElem::Pair { alpha: b, .. }) =
                    (s.element(e), s.element(f))
                else {
                    continue;
                };
                assert_eq!(s.natural_leq(e, f), extends(&graph, a, b));
            }
        }
        let maximal = s.maximal_idempotents();
        assert_eq!(maximal.len(), graph.vertex_count());
        for &m in &maximal {
            let GraphPairElem::Pair { alpha, .. } = s.element(m) else {
                panic!("zero cannot be maximal");
            };
            assert!(alpha.edges.is_empty());
        }
        for p in paths(&s) {
            let GraphPairElem::Pair { beta, .. } = s.element(p) else {
                panic!("zero is not a path");
            };
            assert!(beta.edges.is_empty());
        }
    }
}
