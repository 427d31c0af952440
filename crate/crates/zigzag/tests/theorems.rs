//! Structural theorems about zigzag maps, checked exhaustively on the
//! fixture categories: every map is a quotient of two translations,
//! inverse composites factor through cone meets, products follow the
//! four-factor rule, and the classical invariants (idempotents, natural
//! order, Green's relations, μ) all reduce to cone equivalence of the
//! components.

use std::collections::BTreeSet;

use zigzag::cat::{ConeMeet, FiniteCategory, ZigzagMaps};
use zigzag::corpus;
use zigzag::morita::im_construction;
use zigzag::paths::{check_z1, check_z2, check_z3, domain_paths, path_category, paths, theta_map};
use zigzag::semigroup::{Element, FiniteInverseSemigroup};

/// The singly aligned left cancellative fixtures: hand-built categories
/// plus path categories of graphs and of the eleven-point semigroup.
fn aligned_fixtures() -> Vec<(&'static str, FiniteCategory)> {
    let out = vec![
        ("glued-paths", corpus::glued_paths()),
        ("cyclic2", corpus::cyclic2()),
        ("coequalized-pair", corpus::coequalized_pair()),
        (
            "pc-single-edge",
            corpus::single_edge().path_category().unwrap(),
        ),
        ("pc-two-arms", corpus::two_arms().path_category().unwrap()),
        ("pc-diamond", corpus::diamond().path_category().unwrap()),
        (
            "pc-eleven",
            path_category(&corpus::i11_subsemigroup()).unwrap().category,
        ),
    ];
    for (name, cat) in &out {
        assert!(cat.is_left_cancellative(), "{name} cancels on the left");
        assert!(cat.is_singly_aligned(), "{name} is singly aligned");
    }
    out
}

/// Every left cancellative fixture, aligned or not.
fn all_lc_fixtures() -> Vec<(&'static str, FiniteCategory)> {
    let mut out = aligned_fixtures();
    out.push(("crossed-cones", corpus::crossed_cones()));
    out
}

/// For each element of the zigzag maps, an equal-source morphism pair
/// (α, β) with the element equal to τ_α ∘ τ_β⁻¹, if one exists.
fn quotient_pairs(cat: &FiniteCategory, zm: &ZigzagMaps) -> Vec<Option<(u32, u32)>> {
    let t = &zm.semigroup;
    let n = cat.morphism_count() as u32;
    (0..t.order() as u32)
        .map(|el| {
            if t.is_zero(el) {
                return None;
            }
            for a in 0..n {
                for b in 0..n {
                    if cat.source(a) == cat.source(b) {
                        let cand = t.product(
                            zm.translation[a as usize],
                            t.inverse_of(zm.translation[b as usize]),
                        );
                        if cand == el {
                            return Some((a, b));
                        }
                    }
                }
            }
            None
        })
        .collect()
}

#[test]
fn zigzag_maps_satisfy_the_axioms_on_every_fixture() {
    for (name, cat) in all_lc_fixtures() {
        let zm = cat.zigzag_semigroup().unwrap();
        let t = &zm.semigroup;
        assert!(check_z1(t).unwrap(), "{name}: Z1");
        assert!(check_z2(t).unwrap(), "{name}: Z2");
        assert!(check_z3(t).unwrap(), "{name}: Z3");
    }
}

#[test]
fn every_zigzag_map_of_an_aligned_category_is_a_translation_quotient() {
    for (name, cat) in aligned_fixtures() {
        let zm = cat.zigzag_semigroup().unwrap();
        for (el, pair) in quotient_pairs(&cat, &zm).iter().enumerate() {
            if !zm.semigroup.is_zero(el as u32) {
                assert!(
                    pair.is_some(),
                    "{name}: {} is no τ_α∘τ_β⁻¹",
                    zm.semigroup.name(el as u32)
                );
            }
        }
    }
}

#[test]
fn inverse_composites_factor_through_the_cone_meet() {
    for (name, cat) in aligned_fixtures() {
        let zm = cat.zigzag_semigroup().unwrap();
        let t = &zm.semigroup;
        let tr = &zm.translation;
        let n = cat.morphism_count() as u32;
        for alpha in 0..n {
            for beta in 0..n {
                let lhs = t.product(t.inverse_of(tr[beta as usize]), tr[alpha as usize]);
                match cat.cone_meet(alpha, beta) {
                    ConeMeet::Empty => {
                        assert!(t.is_zero(lhs), "{name}: empty meet, nonzero composite")
                    }
                    ConeMeet::Cone {
                        gamma,
                        via_alpha,
                        via_beta,
                    } => {
                        let rhs =
                            t.product(tr[via_beta as usize], t.inverse_of(tr[via_alpha as usize]));
                        assert_eq!(lhs, rhs, "{name}: τ_{beta}⁻¹τ_{alpha} mismatches");
                        // The factorization must not depend on which
                        // morphism spans the meet.
                        let meet = cat.cone(gamma);
                        for other in 0..n {
                            if cat.cone(other) == meet {
                                let ob = cat.left_divide(beta, other).unwrap();
                                let oa = cat.left_divide(alpha, other).unwrap();
                                let alt = t.product(tr[ob as usize], t.inverse_of(tr[oa as usize]));
                                assert_eq!(lhs, alt, "{name}: spanning choice matters");
                            }
                        }
                    }
                    ConeMeet::NotACone => {
                        panic!("{name}: aligned fixture with a non-cone meet")
                    }
                }
            }
        }
    }
}

#[test]
fn products_follow_the_four_factor_rule() {
    for (name, cat) in aligned_fixtures() {
        let zm = cat.zigzag_semigroup().unwrap();
        let t = &zm.semigroup;
        let tr = &zm.translation;
        let decomp = quotient_pairs(&cat, &zm);
        for p in t.nonzero() {
            for q in t.nonzero() {
                let (alpha, beta) = decomp[p as usize].unwrap();
                let (gamma, sigma) = decomp[q as usize].unwrap();
                let prod = t.product(p, q);
                match cat.cone_meet(beta, gamma) {
                    ConeMeet::Empty => {
                        assert!(t.is_zero(prod), "{name}: empty meet, nonzero product")
                    }
                    ConeMeet::Cone {
                        via_alpha: x,
                        via_beta: y,
                        ..
                    } => {
                        let left = cat.compose(alpha, x).unwrap();
                        let right = cat.compose(sigma, y).unwrap();
                        let expected =
                            t.product(tr[left as usize], t.inverse_of(tr[right as usize]));
                        assert_eq!(prod, expected, "{name}: four-factor rule broken");
                    }
                    ConeMeet::NotACone => {
                        panic!("{name}: aligned fixture with a non-cone meet")
                    }
                }
            }
        }
    }
}

#[test]
fn translation_quotients_coincide_exactly_up_to_an_invertible() {
    for (name, cat) in aligned_fixtures() {
        let zm = cat.zigzag_semigroup().unwrap();
        let t = &zm.semigroup;
        let tr = &zm.translation;
        let n = cat.morphism_count() as u32;
        let mut pairs = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if cat.source(a) == cat.source(b) {
                    pairs.push((a, b));
                }
            }
        }
        let invertibles = cat.invertibles();
        for &(alpha, beta) in &pairs {
            let lhs = t.product(tr[alpha as usize], t.inverse_of(tr[beta as usize]));
            for &(gamma, sigma) in &pairs {
                let rhs = t.product(tr[gamma as usize], t.inverse_of(tr[sigma as usize]));
                let lambda = invertibles.iter().any(|&l| {
                    cat.compose(gamma, l) == Some(alpha) && cat.compose(sigma, l) == Some(beta)
                });
                assert_eq!(
                    lhs == rhs,
                    lambda,
                    "{name}: equality of ({alpha},{beta}) and ({gamma},{sigma})"
                );
            }
        }
    }
}

#[test]
fn the_pair_semigroup_realizes_the_zigzag_maps() {
    use zigzag::cat::PairElem;
    use zigzag::semigroup::verify_isomorphism;

    for (name, cat) in aligned_fixtures() {
        let pairs = cat.pair_semigroup().unwrap();
        let zm = cat.zigzag_semigroup().unwrap();
        let images: Vec<u32> = pairs
            .elements()
            .iter()
            .map(|e| match e {
                PairElem::Zero => zm.semigroup.zero().unwrap(),
                PairElem::Pair { alpha, beta, .. } => zm.semigroup.product(
                    zm.translation[*alpha as usize],
                    zm.semigroup.inverse_of(zm.translation[*beta as usize]),
                ),
            })
            .collect();
        verify_isomorphism(&pairs, &zm.semigroup, &images)
            .unwrap_or_else(|e| panic!("{name}: [α,β] ↦ τ_α∘τ_β⁻¹ fails: {e}"));
    }
}

#[test]
fn idempotents_are_the_diagonal_translation_quotients() {
    for (name, cat) in aligned_fixtures() {
        let zm = cat.zigzag_semigroup().unwrap();
        let t = &zm.semigroup;
        let diagonal: BTreeSet<u32> = (0..cat.morphism_count() as u32)
            .map(|a| {
                t.product(
                    zm.translation[a as usize],
                    t.inverse_of(zm.translation[a as usize]),
                )
            })
            .collect();
        let idempotents: BTreeSet<u32> = t.nonzero_idempotents().into_iter().collect();
        assert_eq!(diagonal, idempotents, "{name}: E(T) ≠ {{τ_ατ_α⁻¹}}");
    }
}

#[test]
fn the_natural_order_is_simultaneous_right_division() {
    for (name, cat) in aligned_fixtures() {
        let zm = cat.zigzag_semigroup().unwrap();
        let t = &zm.semigroup;
        let decomp = quotient_pairs(&cat, &zm);
        let n = cat.morphism_count() as u32;
        for p in t.nonzero() {
            for q in t.nonzero() {
                let (alpha, beta) = decomp[p as usize].unwrap();
                let (gamma, sigma) = decomp[q as usize].unwrap();
                let divides = (0..n).any(|mu| {
                    cat.compose(gamma, mu) == Some(alpha) && cat.compose(sigma, mu) == Some(beta)
                });
                assert_eq!(
                    t.natural_leq(p, q),
                    divides,
                    "{name}: order of {} and {}",
                    t.name(p),
                    t.name(q)
                );
            }
        }
    }
}

#[test]
fn zero_e_unitary_coincides_with_right_cancellation() {
    let mut saw_failing_side = false;
    for (name, cat) in aligned_fixtures() {
        let zm = cat.zigzag_semigroup().unwrap();
        let unitary = zm.semigroup.zero_e_unitary_defect().unwrap().is_none();
        assert_eq!(
            unitary,
            cat.is_right_cancellative(),
            "{name}: 0-E-unitary must match right cancellativity"
        );
        if !unitary {
            saw_failing_side = true;
        }
    }
    assert!(saw_failing_side, "no fixture exercises the failing side");

    // The coequalized pair is the designated counterexample: p∘r = q∘r
    // with p ≠ q, and its zigzag maps are not 0-E-unitary.
    let cat = corpus::coequalized_pair();
    assert!(!cat.is_right_cancellative());
    let zm = cat.zigzag_semigroup().unwrap();
    assert!(zm.semigroup.zero_e_unitary_defect().unwrap().is_some());
}

#[test]
fn green_l_r_h_mirror_cone_equivalence_of_components() {
    for (name, cat) in aligned_fixtures() {
        let zm = cat.zigzag_semigroup().unwrap();
        let t = &zm.semigroup;
        let decomp = quotient_pairs(&cat, &zm);
        let green = t.green();
        for p in t.nonzero() {
            for q in t.nonzero() {
                let (alpha, beta) = decomp[p as usize].unwrap();
                let (gamma, sigma) = decomp[q as usize].unwrap();
                let seconds = cat.cone_equivalent(beta, sigma).is_some();
                let firsts = cat.cone_equivalent(alpha, gamma).is_some();
                let l = green.l_of[p as usize] == green.l_of[q as usize];
                let r = green.r_of[p as usize] == green.r_of[q as usize];
                let h = green.h_of[p as usize] == green.h_of[q as usize];
                assert_eq!(l, seconds, "{name}: L on {} {}", t.name(p), t.name(q));
                assert_eq!(r, firsts, "{name}: R on {} {}", t.name(p), t.name(q));
                assert_eq!(
                    h,
                    seconds && firsts,
                    "{name}: H on {} {}",
                    t.name(p),
                    t.name(q)
                );
            }
        }
    }
}

#[test]
fn the_mu_congruence_matches_componentwise_cone_equivalence() {
    for (name, cat) in aligned_fixtures() {
        let zm = cat.zigzag_semigroup().unwrap();
        let t = &zm.semigroup;
        let decomp = quotient_pairs(&cat, &zm);
        let mu = t.mu_congruence();
        for p in t.nonzero() {
            for q in t.nonzero() {
                let (alpha, beta) = decomp[p as usize].unwrap();
                let (gamma, sigma) = decomp[q as usize].unwrap();
                let mut formula = cat.cone_equivalent(beta, sigma).is_some();
                if formula {
                    for y in cat.cone(beta) {
                        let yb = cat.left_divide(beta, y).unwrap();
                        let ys = cat.left_divide(sigma, y).unwrap();
                        let la = cat.compose(alpha, yb).unwrap();
                        let ra = cat.compose(gamma, ys).unwrap();
                        if cat.cone_equivalent(la, ra).is_none() {
                            formula = false;
                            break;
                        }
                    }
                }
                assert_eq!(
                    mu.class_of[p as usize] == mu.class_of[q as usize],
                    formula,
                    "{name}: μ on {} and {}",
                    t.name(p),
                    t.name(q)
                );
            }
        }
    }
}

#[test]
fn paths_of_the_zigzag_maps_are_the_translations() {
    for (name, cat) in all_lc_fixtures() {
        let zm = cat.zigzag_semigroup().unwrap();
        let t = &zm.semigroup;
        let translations: BTreeSet<u32> = zm.translation.iter().copied().collect();
        let path_set: BTreeSet<u32> = paths(t).into_iter().collect();
        assert_eq!(translations, path_set, "{name}: paths(T) ≠ translations");

        // Domain paths of a map are the translations by the morphisms in
        // its domain.
        for el in 0..t.order() as u32 {
            let expected: BTreeSet<u32> = t
                .element(el)
                .domain()
                .into_iter()
                .map(|m| zm.translation[m as usize])
                .collect();
            let got: BTreeSet<u32> = domain_paths(t, el).into_iter().collect();
            assert_eq!(got, expected, "{name}: domain paths of {}", t.name(el));
        }
    }
}

/// Cone intersections in a path category are spanned by the paths whose
/// range sits under both ranges: t(a)C ∩ t(b)C = {t(z) : zz* ≤ aa*·bb*}.
fn check_cone_intersections<E: Element>(name: &str, sgp: &FiniteInverseSemigroup<E>) {
    let pc = path_category(sgp).unwrap();
    let cat = &pc.category;
    let all = paths(sgp);
    for &a in &all {
        for &b in &all {
            let lhs: BTreeSet<u32> = cat
                .cone(pc.morphism_of[&a])
                .intersection(&cat.cone(pc.morphism_of[&b]))
                .copied()
                .collect();
            let bound = sgp.product(
                sgp.product(a, sgp.inverse_of(a)),
                sgp.product(b, sgp.inverse_of(b)),
            );
            let rhs: BTreeSet<u32> = all
                .iter()
                .filter(|&&z| sgp.natural_leq(sgp.product(z, sgp.inverse_of(z)), bound))
                .map(|&z| pc.morphism_of[&z])
                .collect();
            assert_eq!(
                lhs,
                rhs,
                "{name}: meet of t({}) and t({})",
                sgp.name(a),
                sgp.name(b)
            );
        }
    }
}

#[test]
fn cone_intersections_come_from_joint_range_restrictions() {
    check_cone_intersections("eleven-point", &corpus::i11_subsemigroup());
    check_cone_intersections(
        "im-i2",
        &im_construction(&corpus::symmetric_inverse_monoid(2)).unwrap(),
    );
    check_cone_intersections("single-translation", &corpus::single_translation());
}

/// The domain paths of s are exactly the paths whose morphism lies in the
/// domain of the canonical image of s among the zigzag maps.
fn check_domain_transport<E: Element>(name: &str, sgp: &FiniteInverseSemigroup<E>) {
    assert!(check_z1(sgp).unwrap() && check_z2(sgp).unwrap());
    let pc = path_category(sgp).unwrap();
    let zm = pc.category.zigzag_semigroup().unwrap();
    let theta = theta_map(sgp, &pc, &zm).unwrap();
    for s in 0..sgp.order() as u32 {
        let lhs: BTreeSet<u32> = domain_paths(sgp, s)
            .into_iter()
            .map(|x| pc.morphism_of[&x])
            .collect();
        let rhs: BTreeSet<u32> = zm
            .semigroup
            .element(theta[s as usize])
            .domain()
            .into_iter()
            .collect();
        assert_eq!(lhs, rhs, "{name}: domain paths of {}", sgp.name(s));
    }
}

#[test]
fn domain_paths_transport_along_the_canonical_map() {
    // The eleven-point semigroup fails Z3, so its canonical map is not
    // injective; the domain-path description holds regardless.
    check_domain_transport("eleven-point", &corpus::i11_subsemigroup());
    check_domain_transport(
        "im-i2",
        &im_construction(&corpus::symmetric_inverse_monoid(2)).unwrap(),
    );
    check_domain_transport("single-translation", &corpus::single_translation());
    assert!(!check_z3(&corpus::i11_subsemigroup()).unwrap());
}

#[test]
fn a_group_as_a_category_has_group_with_zero_zigzag_maps() {
    let cat = corpus::cyclic2();
    assert_eq!(cat.invertibles().len(), cat.morphism_count());
    let zm = cat.zigzag_semigroup().unwrap();
    let t = &zm.semigroup;
    assert_eq!(t.order(), 3);
    assert_eq!(t.nonzero_idempotents().len(), 1);
    // One invertible orbit: every equal-source pair is cone equivalent.
    for a in 0..cat.morphism_count() as u32 {
        for b in 0..cat.morphism_count() as u32 {
            assert!(cat.cone_equivalent(a, b).is_some());
        }
    }
}

#[test]
fn path_categories_have_only_identity_invertibles() {
    for (name, cat) in [
        ("pc-two-arms", corpus::two_arms().path_category().unwrap()),
        (
            "pc-eleven",
            path_category(&corpus::i11_subsemigroup()).unwrap().category,
        ),
    ] {
        let identities: Vec<u32> = (0..cat.object_count() as u32).collect();
        assert_eq!(cat.invertibles(), identities, "{name}: extra invertibles");
        for a in 0..cat.morphism_count() as u32 {
            for b in 0..cat.morphism_count() as u32 {
                assert_eq!(
                    cat.cone_equivalent(a, b).is_some(),
                    a == b,
                    "{name}: cone equivalence must be trivial"
                );
            }
        }
    }
}
