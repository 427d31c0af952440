//! Structural properties of finite inverse semigroups: the four
//! unambiguity-style conditions, combinatoriality, 0-E-unitarity, and the
//! maximum idempotent-separating congruence μ.  Every check either returns
//! a witness for failure or `None`, so callers can print a concrete
//! counterexample instead of a bare boolean.

use super::{Element, FiniteInverseSemigroup, Partition, SemigroupError};

/// A nonzero idempotent lying under several (or no) maximal idempotents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z1Witness {
    pub idempotent: u32,
    pub maximal_above: Vec<u32>,
}

/// Why a semigroup fails to be proper in Perrot's sense.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProperFailure {
    /// Two idempotents with nonzero product but no order relation (P1).
    Ambiguous { e: u32, f: u32 },
    /// An idempotent under no or several maximal idempotents (P3).
    NoUniqueMaximal(Z1Witness),
    /// A D-class whose idempotents include no maximal one (P4).
    DClassWithoutMaximal { d_class: u32 },
    /// A D-class containing two distinct maximal idempotents (P4).
    DClassWithTwoMaximal {
        d_class: u32,
        first: u32,
        second: u32,
    },
}

impl<E: Element> FiniteInverseSemigroup<E> {
    /// P1 — unambiguity: whenever two nonzero idempotents have a nonzero
    /// product they must be comparable.  Returns an offending pair if not.
    /// Without a zero every product counts as nonzero.
    pub fn ambiguous_pair(&self) -> Option<(u32, u32)> {
        let idems = self.nonzero_idempotents();
        for (k, &e) in idems.iter().enumerate() {
            for &f in &idems[k + 1..] {
                let p = self.product(e, f);
                if self.is_zero(p) {
                    continue;
                }
                if !self.natural_leq(e, f) && !self.natural_leq(f, e) {
                    return Some((e, f));
                }
            }
        }
        None
    }

    /// P4 — every D-class contains exactly one maximal idempotent.
    pub fn dclass_maximal_defect(&self) -> Option<ProperFailure> {
        let maximal = self.maximal_idempotents();
        let green = self.green();
        for (di, members) in green.d_classes.iter().enumerate() {
            let in_class: Vec<u32> = maximal
                .iter()
                .copied()
                .filter(|m| members.contains(m))
                .collect();
            match in_class.as_slice() {
                [] => return Some(ProperFailure::DClassWithoutMaximal { d_class: di as u32 }),
                [_] => {}
                [a, b, ..] => {
                    return Some(ProperFailure::DClassWithTwoMaximal {
                        d_class: di as u32,
                        first: *a,
                        second: *b,
                    })
                }
            }
        }
        None
    }

    /// Proper in Perrot's sense: unambiguous (P1), finitely many idempotents
    /// above any idempotent (P2 — automatic here), unique maximal idempotent
    /// above each idempotent (P3), and one maximal idempotent per D-class
    /// (P4).  Returns the first failure found.
    pub fn proper_defect(&self) -> Option<ProperFailure> {
        if let Some((e, f)) = self.ambiguous_pair() {
            return Some(ProperFailure::Ambiguous { e, f });
        }
        if let Some(w) = self.z1_witness() {
            return Some(ProperFailure::NoUniqueMaximal(w));
        }
        self.dclass_maximal_defect()
    }

    pub fn is_proper(&self) -> bool {
        self.proper_defect().is_none()
    }

    /// Combinatorial: all H-classes trivial.  Returns an H-class with two
    /// elements otherwise.
    pub fn fat_h_class(&self) -> Option<(u32, u32)> {
        self.green()
            .h_classes
            .iter()
            .find(|h| h.len() > 1)
            .map(|h| (h[0], h[1]))
    }

    pub fn is_combinatorial(&self) -> bool {
        self.fat_h_class().is_none()
    }

    /// 0-E-unitary: no nonzero idempotent sits below a non-idempotent.
    /// Returns `(e, s)` with `0 ≠ e ≤ s`, `e` idempotent, `s` not.
    /// Requires a zero.
    pub fn zero_e_unitary_defect(&self) -> Result<Option<(u32, u32)>, SemigroupError> {
        self.require_zero()?;
        for e in self.nonzero_idempotents() {
            for s in self.nonzero() {
                if !self.is_idempotent(s) && self.natural_leq(e, s) {
                    return Ok(Some((e, s)));
                }
            }
        }
        Ok(None)
    }

    pub fn is_zero_e_unitary(&self) -> Result<bool, SemigroupError> {
        Ok(self.zero_e_unitary_defect()?.is_none())
    }

    /// The maximum idempotent-separating congruence μ: `s μ t` iff
    /// `s*s = t*t` and `s e s* = t e t*` for every idempotent `e`.
    pub fn mu_congruence(&self) -> Partition {
        let idems = self.idempotents();
        Partition::from_keys(self.order(), |s| MuClassKey::of(self, &idems, s))
    }
}

/// Hashable key identifying a μ-class: the domain idempotent together with
/// the conjugates of every idempotent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MuClassKey {
    domain: u32,
    conjugates: Vec<u32>,
}

impl MuClassKey {
    fn of<E: Element>(sgp: &FiniteInverseSemigroup<E>, idems: &[u32], s: u32) -> MuClassKey {
        let si = sgp.inverse_of(s);
        MuClassKey {
            domain: sgp.product(si, s),
            conjugates: idems
                .iter()
                .map(|&e| sgp.product(sgp.product(s, e), si))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbij::{GroundSet, PartialBijection, PbijOps};
    use crate::semigroup::{congruence_witness, from_elements, generate};
    use std::sync::Arc;

    fn pb(g: &Arc<GroundSet>, pairs: &[(u32, u32)]) -> PartialBijection {
        let resolved: Vec<(u32, u32)> = pairs
            .iter()
            .map(|&(s, t)| {
                (
                    g.index_of(&s.to_string()).unwrap(),
                    g.index_of(&t.to_string()).unwrap(),
                )
            })
            .collect();
        PartialBijection::from_pairs(g, &resolved).unwrap()
    }

    /// I({1,2}): 7 elements, one fat H-class (the unit group {id, swap}),
    /// and no ambiguous idempotent pairs since id{1}·id{2} = 0.
    fn i2() -> FiniteInverseSemigroup<PartialBijection> {
        let g = GroundSet::integers(2).unwrap();
        let ops = PbijOps::new(&g);
        let gens = [pb(&g, &[(1, 2), (2, 1)]), pb(&g, &[(1, 1)])];
        generate(&ops, &gens, &Default::default()).unwrap()
    }

    #[test]
    fn i2_is_unambiguous_but_not_combinatorial() {
        let s = i2();
        assert_eq!(s.order(), 7);
        assert_eq!(s.ambiguous_pair(), None);
        let (a, b) = s.fat_h_class().expect("unit group is a fat H-class");
        let g = s.green();
        assert_eq!(g.h_of[a as usize], g.h_of[b as usize]);
        assert!(!s.is_combinatorial());
    }

    #[test]
    fn i2_is_zero_e_unitary() {
        // On two points a map that fixes one point cannot move the other
        // anywhere, so nothing non-idempotent sits above an idempotent.
        let s = i2();
        assert_eq!(s.zero_e_unitary_defect().unwrap(), None);
    }

    #[test]
    fn a_partial_fix_breaks_zero_e_unitarity() {
        // t = {1→1, 2→3} fixes 1 while moving 2, so id{1} ≤ t with t not
        // idempotent.  (Three points are needed: see the test above.)
        let g = GroundSet::integers(3).unwrap();
        let ops = PbijOps::new(&g);
        let t = pb(&g, &[(1, 1), (2, 3)]);
        let opts = crate::semigroup::GenerateOptions {
            adjoin_zero: true,
            ..Default::default()
        };
        let s = generate(&ops, std::slice::from_ref(&t), &opts).unwrap();
        let (e, w) = s.zero_e_unitary_defect().unwrap().expect("partial fix");
        assert!(s.is_idempotent(e) && !s.is_idempotent(w));
        assert!(s.natural_leq(e, w));
        assert!(s.element(w) == &t || s.element(w) == &t.inverse());
    }

    #[test]
    fn semilattice_is_zero_e_unitary_but_not_proper() {
        let g = GroundSet::integers(2).unwrap();
        let ops = PbijOps::new(&g);
        let s = from_elements(
            &ops,
            vec![
                PartialBijection::identity(&g),
                pb(&g, &[(1, 1)]),
                pb(&g, &[(2, 2)]),
                PartialBijection::empty(&g),
            ],
        )
        .unwrap();
        assert!(s.is_zero_e_unitary().unwrap());
        assert!(s.is_combinatorial());
        // Each idempotent is its own D-class, so the classes of the two
        // small idempotents contain no maximal idempotent and P4 fails.
        assert!(matches!(
            s.proper_defect(),
            Some(ProperFailure::DClassWithoutMaximal { .. })
        ));
    }

    #[test]
    fn groups_with_zero_are_proper() {
        let g = GroundSet::integers(2).unwrap();
        let ops = PbijOps::new(&g);
        let swap = pb(&g, &[(1, 2), (2, 1)]);
        let opts = crate::semigroup::GenerateOptions {
            adjoin_zero: true,
            ..Default::default()
        };
        let s = generate(&ops, &[swap], &opts).unwrap();
        assert!(s.is_proper());
        assert!(s.is_zero_e_unitary().unwrap());
        assert!(!s.is_combinatorial());
    }

    #[test]
    fn incomparable_idempotents_with_nonzero_product_are_ambiguous() {
        let g = GroundSet::integers(3).unwrap();
        let ops = PbijOps::new(&g);
        // id{1,2} and id{2,3} meet in id{2} ≠ 0 but are incomparable.
        let e = pb(&g, &[(1, 1), (2, 2)]);
        let f = pb(&g, &[(2, 2), (3, 3)]);
        let s = generate(&ops, &[e.clone(), f.clone()], &Default::default()).unwrap();
        let (x, y) = s.ambiguous_pair().expect("ambiguous pair exists");
        let (x, y) = (s.element(x).clone(), s.element(y).clone());
        assert_eq!(
            (x.clone(), y.clone()),
            (e.clone(), f.clone()),
            "expected the generating idempotents, got ({x}, {y})"
        );
        assert!(!s.is_proper());
    }

    #[test]
    fn zero_e_unitary_needs_a_zero() {
        let g = GroundSet::integers(1).unwrap();
        let ops = PbijOps::new(&g);
        let s = generate(&ops, &[PartialBijection::identity(&g)], &Default::default()).unwrap();
        assert!(matches!(
            s.zero_e_unitary_defect(),
            Err(SemigroupError::NoZero)
        ));
    }

    #[test]
    fn mu_is_an_idempotent_separating_congruence_inside_h() {
        let s = i2();
        let mu = s.mu_congruence();
        assert!(congruence_witness(&s, &mu).is_none());
        // Separates idempotents: no class holds two of them.
        for class in &mu.classes {
            assert!(class.iter().filter(|&&x| s.is_idempotent(x)).count() <= 1);
        }
        // And μ refines H on the nonzero part.
        let green = s.green();
        for class in &mu.classes {
            for w in class.windows(2) {
                if !s.is_zero(w[0]) && !s.is_zero(w[1]) {
                    assert_eq!(green.h_of[w[0] as usize], green.h_of[w[1] as usize]);
                }
            }
        }
        // On I(X) the identity and the swap are μ-distinct (fundamental),
        // so μ is trivial here even though H is not.
        assert!(mu.is_trivial());
    }
}
