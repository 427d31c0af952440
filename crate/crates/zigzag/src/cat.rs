//! Finite small categories and the inverse semigroups they induce.
//!
//! A [`FiniteCategory`] stores objects, morphisms, and a full composition
//! table, validated against the category axioms on construction.
//! Composition is written in function order: `f∘g` is defined when the
//! source of `f` equals the target of `g`, and means "`g`, then `f`".
//!
//! On top of that sit the notions this crate revolves around: principal
//! cones `αC = {α∘x}`, the singly-aligned condition (every nonempty
//! intersection of cones is a cone), the partial bijections `τ_α : x ↦ α∘x`
//! acting on the morphisms of a left cancellative category, the inverse
//! semigroup [`FiniteCategory::zigzag_semigroup`] they generate, and the
//! isomorphic model [`FiniteCategory::pair_semigroup`] built from classes
//! of equal-source morphism pairs.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::pbij::{GroundSet, PartialBijection, PbijOps};
use crate::semigroup::{self, FiniteInverseSemigroup, GenerateOptions, InverseOps, SemigroupError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatError {
    #[error("category needs at least one object")]
    Empty,
    #[error("duplicate object {name:?}")]
    DuplicateObject { name: String },
    #[error("duplicate morphism name {name:?}")]
    DuplicateMorphism { name: String },
    #[error("unknown object {name:?}")]
    UnknownObject { name: String },
    #[error("unknown morphism {name:?}")]
    UnknownMorphism { name: String },
    #[error("{name:?} is not a usable morphism name")]
    BadName { name: String },
    #[error("{f} and {g} do not compose: source of {f} is not the target of {g}")]
    NotComposable { f: String, g: String },
    #[error("composite {f} . {g} = {h} has the wrong endpoints")]
    BadEndpoints { f: String, g: String, h: String },
    #[error("conflicting entries for the composite {f} . {g}")]
    ConflictingComposite { f: String, g: String },
    #[error("no composite declared for {f} . {g}")]
    MissingComposite { f: String, g: String },
    #[error("associativity fails on ({f} . {g}) . {h}")]
    NotAssociative { f: String, g: String, h: String },
    #[error("not left cancellative: {f} . {g} = {f} . {h} but {g} != {h}")]
    NotLeftCancellative { f: String, g: String, h: String },
    #[error("not singly aligned: the cones of {alpha} and {beta} meet in a non-cone")]
    NotSinglyAligned { alpha: String, beta: String },
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

/// A finite category with named objects and morphisms.
///
/// Morphism indices `0..object_count()` are the identities (index equals
/// the object's index); declared arrows follow in declaration order.
#[derive(Clone, Debug)]
pub struct FiniteCategory {
    objects: Vec<String>,
    names: Vec<String>,
    source: Vec<u32>,
    target: Vec<u32>,
    table: Vec<Option<u32>>,
    by_name: HashMap<String, u32>,
}

impl FiniteCategory {
    /// Build and validate a category.  `arrows` lists the non-identity
    /// morphisms as `(name, source, target)`; identities are created
    /// automatically and named `id_<object>`.  `composites` lists
    /// `(f, g, h)` entries meaning `f∘g = h`; entries involving identities
    /// may be omitted, all others are mandatory.
    pub fn from_parts(
        objects: &[&str],
        arrows: &[(&str, &str, &str)],
        composites: &[(&str, &str, &str)],
    ) -> Result<FiniteCategory, CatError> {
        if objects.is_empty() {
            return Err(CatError::Empty);
        }
        let mut object_index: HashMap<String, u32> = HashMap::new();
        for (i, o) in objects.iter().enumerate() {
            if object_index.insert(o.to_string(), i as u32).is_some() {
                return Err(CatError::DuplicateObject {
                    name: o.to_string(),
                });
            }
        }
        let mut names: Vec<String> = Vec::new();
        let mut source: Vec<u32> = Vec::new();
        let mut target: Vec<u32> = Vec::new();
        let mut by_name: HashMap<String, u32> = HashMap::new();
        for (i, o) in objects.iter().enumerate() {
            let name = format!("id_{o}");
            by_name.insert(name.clone(), i as u32);
            names.push(name);
            source.push(i as u32);
            target.push(i as u32);
        }
        for (name, src, tgt) in arrows {
            let s = *object_index
                .get(*src)
                .ok_or_else(|| CatError::UnknownObject {
                    name: src.to_string(),
                })?;
            let t = *object_index
                .get(*tgt)
                .ok_or_else(|| CatError::UnknownObject {
                    name: tgt.to_string(),
                })?;
            let id = names.len() as u32;
            if by_name.insert(name.to_string(), id).is_some() {
                return Err(CatError::DuplicateMorphism {
                    name: name.to_string(),
                });
            }
            names.push(name.to_string());
            source.push(s);
            target.push(t);
        }

        let n = names.len();
        let mut table: Vec<Option<u32>> = vec![None; n * n];
        let composable = |f: usize, g: usize| source[f] == target[g];
        // Identities compose neutrally.
        for f in 0..n {
            table[f * n + source[f] as usize] = Some(f as u32);
            table[target[f] as usize * n + f] = Some(f as u32);
        }
        let resolve = |name: &str| -> Result<u32, CatError> {
            by_name
                .get(name)
                .copied()
                .ok_or_else(|| CatError::UnknownMorphism {
                    name: name.to_string(),
                })
        };
        for (f, g, h) in composites {
            let (fi, gi, hi) = (resolve(f)?, resolve(g)?, resolve(h)?);
            if !composable(fi as usize, gi as usize) {
                return Err(CatError::NotComposable {
                    f: f.to_string(),
                    g: g.to_string(),
                });
            }
            if source[hi as usize] != source[gi as usize]
                || target[hi as usize] != target[fi as usize]
            {
                return Err(CatError::BadEndpoints {
                    f: f.to_string(),
                    g: g.to_string(),
                    h: h.to_string(),
                });
            }
            let slot = &mut table[fi as usize * n + gi as usize];
            match slot {
                Some(existing) if *existing != hi => {
                    return Err(CatError::ConflictingComposite {
                        f: f.to_string(),
                        g: g.to_string(),
                    })
                }
                _ => *slot = Some(hi),
            }
        }
        for f in 0..n {
            for g in 0..n {
                if composable(f, g) && table[f * n + g].is_none() {
                    return Err(CatError::MissingComposite {
                        f: names[f].clone(),
                        g: names[g].clone(),
                    });
                }
            }
        }

        let cat = FiniteCategory {
            objects: objects.iter().map(|o| o.to_string()).collect(),
            names,
            source,
            target,
            table,
            by_name,
        };
        cat.check_axioms()?;
        Ok(cat)
    }

    fn check_axioms(&self) -> Result<(), CatError> {
        let n = self.morphism_count();
        for f in 0..n as u32 {
            for g in 0..n as u32 {
                for h in 0..n as u32 {
                    if let (Some(gh), Some(fg)) = (self.compose(g, h), self.compose(f, g)) {
                        if self.compose(f, gh) != self.compose(fg, h) {
                            return Err(CatError::NotAssociative {
                                f: self.morphism_name(f).to_string(),
                                g: self.morphism_name(g).to_string(),
                                h: self.morphism_name(h).to_string(),
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn object_name(&self, o: u32) -> &str {
        &self.objects[o as usize]
    }

    pub fn morphism_count(&self) -> usize {
        self.names.len()
    }

    pub fn morphism_name(&self, m: u32) -> &str {
        &self.names[m as usize]
    }

    pub fn morphism_named(&self, name: &str) -> Option<u32> {
        self.by_name.get(name).copied()
    }

    /// Give a morphism a new unique name, e.g. to a custom identity label.
    pub fn rename_morphism(&mut self, from: &str, to: &str) -> Result<(), CatError> {
        let id = self
            .by_name
            .get(from)
            .copied()
            .ok_or_else(|| CatError::UnknownMorphism {
                name: from.to_string(),
            })?;
        if to.is_empty() || to.contains(char::is_whitespace) {
            return Err(CatError::BadName {
                name: to.to_string(),
            });
        }
        if self.by_name.contains_key(to) {
            return Err(CatError::DuplicateMorphism {
                name: to.to_string(),
            });
        }
        self.by_name.remove(from);
        self.by_name.insert(to.to_string(), id);
        self.names[id as usize] = to.to_string();
        Ok(())
    }

    pub fn source(&self, m: u32) -> u32 {
        self.source[m as usize]
    }

    pub fn target(&self, m: u32) -> u32 {
        self.target[m as usize]
    }

    pub fn identity(&self, o: u32) -> u32 {
        o
    }

    pub fn is_identity(&self, m: u32) -> bool {
        (m as usize) < self.objects.len()
    }

    /// `f∘g`, or `None` when the endpoints do not match.
    #[inline]
    pub fn compose(&self, f: u32, g: u32) -> Option<u32> {
        self.table[f as usize * self.names.len() + g as usize]
    }

    /// The unique `x` with `α∘x = γ`, if one exists.  Uniqueness holds in a
    /// left cancellative category; in general the lowest-index witness wins.
    pub fn left_divide(&self, alpha: u32, gamma: u32) -> Option<u32> {
        (0..self.morphism_count() as u32).find(|&x| self.compose(alpha, x) == Some(gamma))
    }

    pub fn is_invertible(&self, m: u32) -> bool {
        let (s, t) = (self.source(m), self.target(m));
        (0..self.morphism_count() as u32).any(|g| {
            self.compose(m, g) == Some(self.identity(t))
                && self.compose(g, m) == Some(self.identity(s))
        })
    }

    pub fn invertibles(&self) -> Vec<u32> {
        (0..self.morphism_count() as u32)
            .filter(|&m| self.is_invertible(m))
            .collect()
    }

    /// The principal cone `αC = {α∘x : x composable}`.  Contains `α`.
    pub fn cone(&self, alpha: u32) -> BTreeSet<u32> {
        (0..self.morphism_count() as u32)
            .filter_map(|x| self.compose(alpha, x))
            .collect()
    }

    /// Do `γ₁` and `γ₂` span the same cone?  Returns an invertible `λ` with
    /// `γ₁ = γ₂∘λ` when they do.
    pub fn cone_equivalent(&self, gamma1: u32, gamma2: u32) -> Option<u32> {
        self.invertibles()
            .into_iter()
            .find(|&l| self.compose(gamma2, l) == Some(gamma1))
    }

    /// Witness that left cancellation fails: `(f, g, h)` with
    /// `f∘g = f∘h` and `g ≠ h`.
    pub fn left_cancellation_defect(&self) -> Option<(u32, u32, u32)> {
        let n = self.morphism_count() as u32;
        for f in 0..n {
            for g in 0..n {
                let Some(fg) = self.compose(f, g) else {
                    continue;
                };
                for h in g + 1..n {
                    if self.compose(f, h) == Some(fg) {
                        return Some((f, g, h));
                    }
                }
            }
        }
        None
    }

    pub fn is_left_cancellative(&self) -> bool {
        self.left_cancellation_defect().is_none()
    }

    /// Witness that right cancellation fails: `(f, g, h)` with
    /// `g∘f = h∘f` and `g ≠ h`.
    pub fn right_cancellation_defect(&self) -> Option<(u32, u32, u32)> {
        let n = self.morphism_count() as u32;
        for f in 0..n {
            for g in 0..n {
                let Some(gf) = self.compose(g, f) else {
                    continue;
                };
                for h in g + 1..n {
                    if self.compose(h, f) == Some(gf) {
                        return Some((f, g, h));
                    }
                }
            }
        }
        None
    }

    pub fn is_right_cancellative(&self) -> bool {
        self.right_cancellation_defect().is_none()
    }

    /// The meet of two principal cones.
    pub fn cone_meet(&self, alpha: u32, beta: u32) -> ConeMeet {
        let meet: BTreeSet<u32> = self
            .cone(alpha)
            .intersection(&self.cone(beta))
            .copied()
            .collect();
        if meet.is_empty() {
            return ConeMeet::Empty;
        }
        // Any γ in the meet has γC ⊆ αC ∩ βC, so it spans the meet exactly
        // when the sizes agree.  Take the lowest-index such γ.
        for &gamma in &meet {
            if self.cone(gamma).len() == meet.len() {
                let via_alpha = self
                    .left_divide(alpha, gamma)
                    .expect("gamma lies in the cone of alpha");
                let via_beta = self
                    .left_divide(beta, gamma)
                    .expect("gamma lies in the cone of beta");
                return ConeMeet::Cone {
                    gamma,
                    via_alpha,
                    via_beta,
                };
            }
        }
        ConeMeet::NotACone
    }

    /// A pair of morphisms whose cones meet in a non-cone, if any.
    pub fn singly_aligned_defect(&self) -> Option<(u32, u32)> {
        let n = self.morphism_count() as u32;
        for a in 0..n {
            for b in a..n {
                if matches!(self.cone_meet(a, b), ConeMeet::NotACone) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_singly_aligned(&self) -> bool {
        self.singly_aligned_defect().is_none()
    }

    /// Ground set for the translation action: one point per morphism.
    pub fn translation_ground(&self) -> Arc<GroundSet> {
        GroundSet::named(self.names.clone()).expect("morphism names are unique and nonempty")
    }

    /// The partial bijection `τ_α : x ↦ α∘x` on the morphisms of the
    /// category, defined on `{x : target(x) = source(α)}`.  Injective
    /// exactly when nothing witnesses a left cancellation failure at `α`.
    pub fn left_translation(
        &self,
        ground: &Arc<GroundSet>,
        alpha: u32,
    ) -> Result<PartialBijection, CatError> {
        let pairs: Vec<(u32, u32)> = (0..self.morphism_count() as u32)
            .filter_map(|x| self.compose(alpha, x).map(|ax| (x, ax)))
            .collect();
        PartialBijection::from_pairs(ground, &pairs).map_err(|_| {
            let (f, g, h) = self
                .left_cancellation_defect()
                .expect("a non-injective translation witnesses a cancellation failure");
            CatError::NotLeftCancellative {
                f: self.morphism_name(f).to_string(),
                g: self.morphism_name(g).to_string(),
                h: self.morphism_name(h).to_string(),
            }
        })
    }

    /// The inverse semigroup of zigzag maps: the closure of all left
    /// translations inside the symmetric inverse monoid on the morphisms,
    /// with the empty map adjoined as zero.  Requires left cancellativity.
    pub fn zigzag_semigroup(&self) -> Result<ZigzagMaps, CatError> {
        let ground = self.translation_ground();
        let translations: Vec<PartialBijection> = (0..self.morphism_count() as u32)
            .map(|m| self.left_translation(&ground, m))
            .collect::<Result<_, _>>()?;
        let ops = PbijOps::new(&ground);
        let opts = GenerateOptions {
            adjoin_zero: true,
            ..Default::default()
        };
        let semigroup = semigroup::generate(&ops, &translations, &opts)?;
        let translation = translations
            .iter()
            .map(|t| {
                semigroup
                    .index_of(t)
                    .expect("generators are in the closure")
            })
            .collect();
        Ok(ZigzagMaps {
            ground,
            semigroup,
            translation,
        })
    }

    /// The inverse semigroup of equal-source morphism pairs `[α, β]` up to
    /// a common invertible factor, with the product routed through cone
    /// meets.  Defined for singly aligned left cancellative categories.
    pub fn pair_semigroup(&self) -> Result<FiniteInverseSemigroup<PairElem>, CatError> {
        if let Some((f, g, h)) = self.left_cancellation_defect() {
            return Err(CatError::NotLeftCancellative {
                f: self.morphism_name(f).to_string(),
                g: self.morphism_name(g).to_string(),
                h: self.morphism_name(h).to_string(),
            });
        }
        if let Some((a, b)) = self.singly_aligned_defect() {
            return Err(CatError::NotSinglyAligned {
                alpha: self.morphism_name(a).to_string(),
                beta: self.morphism_name(b).to_string(),
            });
        }
        let ops = PairOps { cat: self };
        let n = self.morphism_count() as u32;
        let mut elements = vec![PairElem::Zero];
        let mut seen = BTreeSet::new();
        for a in 0..n {
            for b in 0..n {
                if self.source(a) == self.source(b) {
                    let e = ops.pair(a, b);
                    if seen.insert(e.clone()) {
                        elements.push(e);
                    }
                }
            }
        }
        Ok(semigroup::from_elements(&ops, elements)?)
    }

    /// DOT rendering of the underlying object graph, with one labeled
    /// edge per non-identity morphism.
    pub fn to_dot(&self) -> String {
        let escape = |s: &str| s.replace('\\', "\\\\").replace('"', "\\\"");
        let mut out = String::from("digraph category {\n  rankdir=LR;\n");
        for o in &self.objects {
            out.push_str(&format!("  \"{}\";\n", escape(o)));
        }
        for m in 0..self.morphism_count() as u32 {
            if self.is_identity(m) {
                continue;
            }
            out.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                escape(self.object_name(self.source(m))),
                escape(self.object_name(self.target(m))),
                escape(self.morphism_name(m)),
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// Result of intersecting two principal cones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConeMeet {
    Empty,
    /// The meet is `γC`, with `γ = α∘via_alpha = β∘via_beta`.
    Cone {
        gamma: u32,
        via_alpha: u32,
        via_beta: u32,
    },
    /// Nonempty but spanned by no single morphism.
    NotACone,
}

/// The zigzag-map semigroup of a category, with bookkeeping.
pub struct ZigzagMaps {
    /// One ground point per morphism, named like the morphism.
    pub ground: Arc<GroundSet>,
    pub semigroup: FiniteInverseSemigroup<PartialBijection>,
    /// `translation[m]` is the semigroup index of `τ_m`.
    pub translation: Vec<u32>,
}

/// An element of the pair semigroup: zero, or a class `[α, β]` of morphism
/// pairs with equal source, canonicalized under `(α, β) ~ (α∘λ, β∘λ)` for
/// invertible `λ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PairElem {
    Zero,
    Pair {
        alpha: u32,
        beta: u32,
        label: String,
    },
}

impl fmt::Display for PairElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairElem::Zero => f.write_str("0"),
            PairElem::Pair { label, .. } => f.write_str(label),
        }
    }
}

/// Product and inverse for [`PairElem`] over a fixed category.
pub struct PairOps<'a> {
    pub cat: &'a FiniteCategory,
}

impl<'a> PairOps<'a> {
    /// The canonical representative of the class of `(α, β)`.
    pub fn pair(&self, alpha: u32, beta: u32) -> PairElem {
        debug_assert_eq!(self.cat.source(alpha), self.cat.source(beta));
        let mut best = (alpha, beta);
        for l in self.cat.invertibles() {
            if let (Some(a), Some(b)) = (self.cat.compose(alpha, l), self.cat.compose(beta, l)) {
                best = best.min((a, b));
            }
        }
        PairElem::Pair {
            alpha: best.0,
            beta: best.1,
            label: format!(
                "[{},{}]",
                self.cat.morphism_name(best.0),
                self.cat.morphism_name(best.1)
            ),
        }
    }
}

impl<'a> InverseOps for PairOps<'a> {
    type Elem = PairElem;

    /// `[α, β]·[α', β']` meets `βC` with `α'C`: empty meet gives zero, and
    /// a meet `γC` with `γ = β∘x = α'∘y` gives `[α∘x, β'∘y]`.
    fn product(&self, a: &PairElem, b: &PairElem) -> PairElem {
        let (
            PairElem::Pair { alpha, beta, .. },
            PairElem::Pair {
                alpha: a2,
                beta: b2,
                ..
            },
        ) = (a, b)
        else {
            return PairElem::Zero;
        };
        match self.cat.cone_meet(*beta, *a2) {
            ConeMeet::Empty => PairElem::Zero,
            ConeMeet::Cone {
                via_alpha: x,
                via_beta: y,
                ..
            } => {
                let left = self
                    .cat
                    .compose(*alpha, x)
                    .expect("x lands in the source of alpha");
                let right = self
                    .cat
                    .compose(*b2, y)
                    .expect("y lands in the source of beta'");
                self.pair(left, right)
            }
            ConeMeet::NotACone => {
                unreachable!("pair products require a singly aligned category")
            }
        }
    }

    fn inverse(&self, a: &PairElem) -> PairElem {
        match a {
            PairElem::Zero => PairElem::Zero,
            PairElem::Pair { alpha, beta, .. } => self.pair(*beta, *alpha),
        }
    }

    fn zero(&self) -> Option<PairElem> {
        Some(PairElem::Zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    use crate::corpus::{coequalized_pair, crossed_cones, cyclic2, glued_paths};

    #[test]
    fn missing_composites_are_rejected() {
        let err = FiniteCategory::from_parts(
            &["u", "v", "w"],
            &[("f", "u", "v"), ("g", "v", "w"), ("h", "u", "w")],
            &[],
        )
        .unwrap_err();
        assert_eq!(
            err,
            CatError::MissingComposite {
                f: "g".into(),
                g: "f".into()
            }
        );
    }

    #[test]
    fn bad_endpoints_are_rejected() {
        let err = FiniteCategory::from_parts(
            &["u", "v", "w"],
            &[("f", "u", "v"), ("g", "v", "w"), ("h", "v", "w")],
            &[("g", "f", "h")],
        )
        .unwrap_err();
        assert!(matches!(err, CatError::BadEndpoints { .. }));
    }

    #[test]
    fn conflicting_composites_are_rejected() {
        let err = FiniteCategory::from_parts(
            &["o"],
            &[("g", "o", "o")],
            &[("g", "g", "id_o"), ("g", "g", "g")],
        )
        .unwrap_err();
        assert!(matches!(err, CatError::ConflictingComposite { .. }));
    }

    #[test]
    fn identities_compose_neutrally_without_declarations() {
        let cat = glued_paths();
        let a = cat.morphism_named("a").unwrap();
        let id_a = cat.identity(cat.source(a));
        let id_u = cat.identity(cat.target(a));
        assert_eq!(cat.compose(a, id_a), Some(a));
        assert_eq!(cat.compose(id_u, a), Some(a));
        assert_eq!(cat.compose(a, id_u), None);
    }

    #[test]
    fn glued_paths_is_left_and_right_cancellative_and_singly_aligned() {
        let cat = glued_paths();
        assert_eq!(cat.left_cancellation_defect(), None);
        assert_eq!(cat.right_cancellation_defect(), None);
        assert_eq!(cat.singly_aligned_defect(), None);
    }

    #[test]
    fn cones_and_meets_of_glued_paths() {
        let cat = glued_paths();
        let m = |n: &str| cat.morphism_named(n).unwrap();
        assert_eq!(cat.cone(m("a")), BTreeSet::from([m("a"), m("c")]));
        assert_eq!(cat.cone(m("b")), BTreeSet::from([m("b"), m("c")]));
        assert_eq!(cat.cone(m("c")), BTreeSet::from([m("c")]));
        match cat.cone_meet(m("a"), m("b")) {
            ConeMeet::Cone {
                gamma,
                via_alpha,
                via_beta,
            } => {
                assert_eq!(gamma, m("c"));
                assert_eq!(via_alpha, m("x"));
                assert_eq!(via_beta, m("y"));
            }
            other => panic!("expected a cone meet, got {other:?}"),
        }
        // Cones over distinct objects never meet.
        assert_eq!(
            cat.cone_meet(cat.identity(1), cat.identity(2)),
            ConeMeet::Empty
        );
    }

    #[test]
    fn crossed_cones_is_not_singly_aligned() {
        let cat = crossed_cones();
        assert!(cat.is_left_cancellative());
        let (a, b) = cat.singly_aligned_defect().expect("crossing defect");
        let (al, be) = (
            cat.morphism_named("al").unwrap(),
            cat.morphism_named("be").unwrap(),
        );
        assert_eq!((a, b), (al.min(be), al.max(be)));
        assert_eq!(cat.cone_meet(al, be), ConeMeet::NotACone);
        // And the pair semigroup refuses to build.
        assert!(matches!(
            cat.pair_semigroup(),
            Err(CatError::NotSinglyAligned { .. })
        ));
    }

    #[test]
    fn coequalized_pair_is_not_right_cancellative() {
        let cat = coequalized_pair();
        assert!(cat.is_left_cancellative());
        assert!(cat.is_singly_aligned());
        let (f, g, h) = cat.right_cancellation_defect().expect("p . r = q . r");
        assert_eq!(cat.morphism_name(f), "r");
        assert_eq!((cat.morphism_name(g), cat.morphism_name(h)), ("p", "q"));
    }

    #[test]
    fn translations_act_by_left_composition() {
        let cat = glued_paths();
        let ground = cat.translation_ground();
        let a = cat.morphism_named("a").unwrap();
        let tau = cat.left_translation(&ground, a).unwrap();
        // τ_a is defined on {id_A, x} and sends them to {a, c}.
        let pt = |n: &str| ground.index_of(n).unwrap();
        assert_eq!(tau.rank(), 2);
        assert_eq!(tau.apply(pt("id_A")), Some(pt("a")));
        assert_eq!(tau.apply(pt("x")), Some(pt("c")));
        assert_eq!(tau.apply(pt("id_U")), None);
    }

    #[test]
    fn translations_of_a_non_cancellative_category_fail() {
        // f∘g = f∘h collapses two morphisms, so τ_f is not injective.
        let cat = FiniteCategory::from_parts(
            &["x", "y", "z"],
            &[
                ("g", "x", "y"),
                ("h", "x", "y"),
                ("f", "y", "z"),
                ("k", "x", "z"),
            ],
            &[("f", "g", "k"), ("f", "h", "k")],
        )
        .unwrap();
        assert_eq!(
            cat.left_cancellation_defect().map(|(f, g, h)| (
                cat.morphism_name(f),
                cat.morphism_name(g),
                cat.morphism_name(h)
            )),
            Some(("f", "g", "h"))
        );
        let ground = cat.translation_ground();
        let f = cat.morphism_named("f").unwrap();
        assert!(matches!(
            cat.left_translation(&ground, f),
            Err(CatError::NotLeftCancellative { .. })
        ));
        assert!(cat.zigzag_semigroup().is_err());
    }

    #[test]
    fn zigzag_semigroup_of_a_group_is_the_group_with_zero() {
        let zm = cyclic2().zigzag_semigroup().unwrap();
        assert_eq!(zm.semigroup.order(), 3);
        assert!(zm.semigroup.zero().is_some());
        let tau_id = zm.translation[0];
        assert!(zm.semigroup.is_idempotent(tau_id));
    }

    #[test]
    fn zigzag_and_pair_semigroups_of_glued_paths_agree_in_size() {
        let cat = glued_paths();
        let zm = cat.zigzag_semigroup().unwrap();
        let pairs = cat.pair_semigroup().unwrap();
        // Counting classes by source object: 1² + 2² + 2² + 4² = 25, plus 0.
        assert_eq!(pairs.order(), 26);
        assert_eq!(zm.semigroup.order(), 26);
        assert!(zm.semigroup.admits_unique_maximal_idempotents());
        assert!(pairs.admits_unique_maximal_idempotents());
    }

    #[test]
    fn pair_classes_absorb_invertible_factors() {
        let cat = cyclic2();
        let ops = PairOps { cat: &cat };
        let g = cat.morphism_named("g").unwrap();
        let id = cat.identity(0);
        // (id, g) ~ (id∘g, g∘g) = (g, id): one class either way.
        assert_eq!(ops.pair(id, g), ops.pair(g, id));
        let pairs = cat.pair_semigroup().unwrap();
        // Classes: [id,id] ~ [g,g] and [id,g] ~ [g,id], plus zero.
        assert_eq!(pairs.order(), 3);
    }

    #[test]
    fn pair_product_follows_the_meet() {
        let cat = glued_paths();
        let ops = PairOps { cat: &cat };
        let m = |n: &str| cat.morphism_named(n).unwrap();
        // [a,a]·[b,b]: aC ∩ bC = cC with c = a∘x = b∘y, so the product is
        // the idempotent [a∘x, b∘y] = [c, c].
        let p = ops.product(&ops.pair(m("a"), m("a")), &ops.pair(m("b"), m("b")));
        assert_eq!(p, ops.pair(m("c"), m("c")));
        // Disjoint cones annihilate: [x,x]·[y,y] = 0.
        let q = ops.product(&ops.pair(m("x"), m("x")), &ops.pair(m("y"), m("y")));
        assert_eq!(q, PairElem::Zero);
    }
}
