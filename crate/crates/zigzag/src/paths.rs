//! Paths, the zigzag axioms, and the canonical category of an inverse
//! semigroup.
//!
//! A path is an element whose domain idempotent `s*s` is maximal.  Three
//! axioms on an inverse semigroup with zero organize everything here:
//!
//! - **Z1** — every nonzero idempotent lies below a unique maximal
//!   idempotent;
//! - **Z2** — the paths, together with the zero, generate;
//! - **Z3** — elements are determined by their action on their domain
//!   paths: `P_s = P_t` and `s·x = t·x` for all `x ∈ P_s` force `s = t`.
//!
//! Under Z1 the paths form a left cancellative category
//! ([`path_category`]); under Z1–Z3 the semigroup is recovered, up to
//! isomorphism, as the zigzag maps of that category ([`theta_check`]).
//! Without Z3 the recovery still works after quotienting by the congruence
//! that identifies elements acting alike on domain paths ([`z_quotient`]).

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::cat::{CatError, FiniteCategory, ZigzagMaps};
use crate::semigroup::{
    self, congruence_witness, Element, FiniteInverseSemigroup, InverseOps, IsoFailure, Partition,
    SemigroupError,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("axiom {axiom} fails for this semigroup")]
    AxiomFailed { axiom: &'static str },
    #[error("the zero element has no zigzag word")]
    ZeroWord,
    #[error("element index {index} is out of range")]
    NoSuchElement { index: u32 },
    #[error("the domain-path relation is not a congruence: {s} and {t} split on {u}")]
    NotACongruence { s: String, t: String, u: String },
    #[error("the canonical map is not an isomorphism: {0}")]
    NotAnIsomorphism(#[from] IsoFailure),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Category(#[from] CatError),
}

/// All paths: elements whose domain idempotent is maximal.
pub fn paths<E: Element>(sgp: &FiniteInverseSemigroup<E>) -> Vec<u32> {
    let maximal = sgp.maximal_idempotents();
    sgp.nonzero()
        .filter(|&s| maximal.contains(&sgp.product(sgp.inverse_of(s), s)))
        .collect()
}

/// The domain paths of `s`: paths `x` with `x·x* ≤ s*·s`.
pub fn domain_paths<E: Element>(sgp: &FiniteInverseSemigroup<E>, s: u32) -> Vec<u32> {
    let dom = sgp.product(sgp.inverse_of(s), s);
    paths(sgp)
        .into_iter()
        .filter(|&x| sgp.natural_leq(sgp.product(x, sgp.inverse_of(x)), dom))
        .collect()
}

/// Z1: unique maximal idempotents.  The zigzag axioms are stated for
/// semigroups with zero, so a missing zero is an input error.
pub fn check_z1<E: Element>(sgp: &FiniteInverseSemigroup<E>) -> Result<bool, SemigroupError> {
    sgp.require_zero()?;
    Ok(sgp.admits_unique_maximal_idempotents())
}

/// Z2: the paths and the zero generate the whole semigroup.
pub fn check_z2<E: Element>(sgp: &FiniteInverseSemigroup<E>) -> Result<bool, SemigroupError> {
    sgp.require_zero()?;
    Ok(path_generated_part(sgp).iter().all(|r| r.is_some()))
}

/// Z3: right reductivity on domain paths.
pub fn check_z3<E: Element>(sgp: &FiniteInverseSemigroup<E>) -> Result<bool, SemigroupError> {
    sgp.require_zero()?;
    Ok(z3_merge_classes(sgp).is_empty())
}

/// The elements the paths fail to generate — the witnesses against Z2.
pub fn z2_uncovered<E: Element>(sgp: &FiniteInverseSemigroup<E>) -> Vec<u32> {
    path_generated_part(sgp)
        .iter()
        .enumerate()
        .filter(|(_, w)| w.is_none())
        .map(|(i, _)| i as u32)
        .collect()
}

/// Classes of two or more elements sharing both their domain paths and
/// their action on them — exactly the witnesses against Z3.  Each class is
/// ascending; classes are ordered by smallest member.
pub fn z3_merge_classes<E: Element>(sgp: &FiniteInverseSemigroup<E>) -> Vec<Vec<u32>> {
    domain_path_partition(sgp)
        .classes
        .into_iter()
        .filter(|c| c.len() > 1)
        .collect()
}

/// The partition of the elements by `(P_s, s·P_s)`: the identity partition
/// exactly when Z3 holds, and the congruence of the quotient construction
/// otherwise.
pub fn domain_path_partition<E: Element>(sgp: &FiniteInverseSemigroup<E>) -> Partition {
    let all_paths = paths(sgp);
    let ranges: Vec<u32> = all_paths
        .iter()
        .map(|&x| sgp.product(x, sgp.inverse_of(x)))
        .collect();
    Partition::from_keys(sgp.order(), |s| {
        let dom = sgp.product(sgp.inverse_of(s), s);
        let mut key: Vec<(u32, u32)> = Vec::new();
        for (&x, &r) in all_paths.iter().zip(&ranges) {
            if sgp.natural_leq(r, dom) {
                key.push((x, sgp.product(s, x)));
            }
        }
        key
    })
}

/// For each element, a word in the paths evaluating to it (`None` for
/// elements outside the path-generated part).  Words are `(path, inverted)`
/// tokens multiplied left to right.  The zero's word is `None` too: it is
/// adjoined, not spelled.
fn path_generated_part<E: Element>(
    sgp: &FiniteInverseSemigroup<E>,
) -> Vec<Option<Vec<(u32, bool)>>> {
    let mut words: Vec<Option<Vec<(u32, bool)>>> = vec![None; sgp.order()];
    let mut known: Vec<u32> = Vec::new();
    for p in paths(sgp) {
        if words[p as usize].is_none() {
            words[p as usize] = Some(vec![(p, false)]);
            known.push(p);
        }
    }
    let is_zero = |x: u32| sgp.is_zero(x);
    let mut level_start = 0;
    loop {
        let level_end = known.len();
        if level_start == level_end {
            break;
        }
        let mut fresh: Vec<(u32, Vec<(u32, bool)>)> = Vec::new();
        let claim = |x: u32, w: Vec<(u32, bool)>, fresh: &mut Vec<(u32, Vec<(u32, bool)>)>| {
            if !is_zero(x) && words[x as usize].is_none() && !fresh.iter().any(|(y, _)| *y == x) {
                fresh.push((x, w));
            }
        };
        for k in level_start..level_end {
            let a = known[k];
            let inv = sgp.inverse_of(a);
            let word = words[a as usize].as_ref().unwrap();
            let flipped: Vec<(u32, bool)> = word.iter().rev().map(|&(p, i)| (p, !i)).collect();
            claim(inv, flipped, &mut fresh);
            for &b in &known[..level_end] {
                let wa = words[a as usize].as_ref().unwrap();
                let wb = words[b as usize].as_ref().unwrap();
                let mut ab = wa.clone();
                ab.extend_from_slice(wb);
                claim(sgp.product(a, b), ab, &mut fresh);
                let mut ba = wb.clone();
                ba.extend_from_slice(wa);
                claim(sgp.product(b, a), ba, &mut fresh);
            }
        }
        fresh.sort_by_key(|(x, _)| *x);
        for (x, w) in fresh {
            words[x as usize] = Some(w);
            known.push(x);
        }
        level_start = level_end;
    }
    // Mark the zero as covered: Z2 adjoins it rather than spelling it.
    if let Some(z) = sgp.zero() {
        words[z as usize] = Some(Vec::new());
    }
    words
}

/// An alternating word `a₁*·b₁·a₂*·b₂⋯aₙ*·bₙ` in the paths of a semigroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZigzagWord {
    /// The letters `(aᵢ, bᵢ)`; each pair contributes `aᵢ*·bᵢ`.
    pub letters: Vec<(u32, u32)>,
}

impl ZigzagWord {
    pub fn evaluate<E: Element>(&self, sgp: &FiniteInverseSemigroup<E>) -> u32 {
        let mut acc: Option<u32> = None;
        for &(a, b) in &self.letters {
            let step = sgp.product(sgp.inverse_of(a), b);
            acc = Some(match acc {
                None => step,
                Some(prev) => sgp.product(prev, step),
            });
        }
        acc.expect("zigzag words are nonempty")
    }
}

impl fmt::Display for ZigzagWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (a, b)) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str("·")?;
            }
            write!(f, "{a}*·{b}")?;
        }
        Ok(())
    }
}

/// Write a nonzero element as an alternating word in paths.
///
/// The element's generating word is collected from the path closure, then
/// normalized: adjacent letters of equal polarity merge (their products are
/// again paths), and a maximal idempotent pads either end so the word
/// alternates `a₁*, b₁, …, aₙ*, bₙ`.  Requires Z1 and Z2.
pub fn zigzag_normal_form<E: Element>(
    sgp: &FiniteInverseSemigroup<E>,
    s: u32,
) -> Result<ZigzagWord, PathError> {
    if s as usize >= sgp.order() {
        return Err(PathError::NoSuchElement { index: s });
    }
    if sgp.is_zero(s) {
        return Err(PathError::ZeroWord);
    }
    if !check_z1(sgp)? {
        return Err(PathError::AxiomFailed { axiom: "Z1" });
    }
    let words = path_generated_part(sgp);
    if words.iter().any(|w| w.is_none()) {
        return Err(PathError::AxiomFailed { axiom: "Z2" });
    }
    let tokens = words[s as usize].clone().expect("all words present");

    // Merge adjacent tokens of equal polarity.  A nonzero word has nonzero
    // adjacent products, and nonzero products of paths are paths, so the
    // merged token is again a path: p·q for plain tokens, and
    // p*·q* = (q·p)* for inverted ones.
    let mut merged: Vec<(u32, bool)> = Vec::new();
    for (p, inv) in tokens {
        match merged.last_mut() {
            Some((q, qinv)) if *qinv == inv => {
                *q = if inv {
                    sgp.product(p, *q)
                } else {
                    sgp.product(*q, p)
                };
                debug_assert!(!sgp.is_zero(*q));
            }
            _ => merged.push((p, inv)),
        }
    }
    let top = |x: u32| {
        let range = sgp.product(x, sgp.inverse_of(x));
        sgp.unique_maximal_above(range).expect("Z1 was checked")
    };
    if let Some(&(first, false)) = merged.first() {
        merged.insert(0, (top(first), true));
    }
    if let Some(&(last, true)) = merged.last() {
        merged.push((top(last), false));
    }
    let letters: Vec<(u32, u32)> = merged
        .chunks(2)
        .map(|pair| {
            debug_assert!(pair[0].1 && !pair[1].1, "polarities alternate");
            (pair[0].0, pair[1].0)
        })
        .collect();
    let word = ZigzagWord { letters };
    debug_assert_eq!(word.evaluate(sgp), s);
    Ok(word)
}

/// The path category of a semigroup satisfying Z1.
///
/// Objects are the maximal idempotents; the morphisms are the paths, with
/// the path `s` running from the object `s*s` to the object `(s·s*)°`, and
/// composition given by the semigroup product.  Objects are named
/// `o1, o2, …` in element order and non-identity morphisms `m<i>` after
/// their element index.
pub struct PathCategory {
    pub category: FiniteCategory,
    /// Object index → the maximal idempotent it stands for.
    pub object_element: Vec<u32>,
    /// Morphism index → the path element it stands for.
    pub morphism_element: Vec<u32>,
    /// Path element → morphism index.
    pub morphism_of: HashMap<u32, u32>,
}

pub fn path_category<E: Element>(
    sgp: &FiniteInverseSemigroup<E>,
) -> Result<PathCategory, PathError> {
    if !check_z1(sgp)? {
        return Err(PathError::AxiomFailed { axiom: "Z1" });
    }
    let maximal = sgp.maximal_idempotents();
    let object_of: HashMap<u32, usize> = maximal.iter().enumerate().map(|(k, &e)| (e, k)).collect();
    let object_names: Vec<String> = (1..=maximal.len()).map(|k| format!("o{k}")).collect();
    let top = |x: u32| {
        let range = sgp.product(x, sgp.inverse_of(x));
        sgp.unique_maximal_above(range).expect("Z1 holds")
    };
    let all_paths = paths(sgp);
    let arrow_paths: Vec<u32> = all_paths
        .iter()
        .copied()
        .filter(|p| !maximal.contains(p))
        .collect();
    let arrows: Vec<(String, String, String)> = arrow_paths
        .iter()
        .map(|&p| {
            let dom = sgp.product(sgp.inverse_of(p), p);
            (
                format!("m{p}"),
                object_names[object_of[&dom]].clone(),
                object_names[object_of[&top(p)]].clone(),
            )
        })
        .collect();

    // Morphism indices in the category: identities first (one per object),
    // then the arrows in the order above.
    let mut morphism_element: Vec<u32> = maximal.clone();
    morphism_element.extend(&arrow_paths);
    let morphism_of: HashMap<u32, u32> = morphism_element
        .iter()
        .enumerate()
        .map(|(m, &p)| (p, m as u32))
        .collect();
    let cat_name = |p: u32| -> String {
        if let Some(k) = object_of.get(&p) {
            format!("id_{}", object_names[*k])
        } else {
            format!("m{p}")
        }
    };
    let mut composites: Vec<(String, String, String)> = Vec::new();
    for &f in &arrow_paths {
        for &g in &arrow_paths {
            // f∘g is declared when source(f) = target(g), i.e. f*f = g°.
            if sgp.product(sgp.inverse_of(f), f) == top(g) {
                let fg = sgp.product(f, g);
                debug_assert!(all_paths.contains(&fg), "paths compose to paths");
                composites.push((cat_name(f), cat_name(g), cat_name(fg)));
            }
        }
    }

    let object_refs: Vec<&str> = object_names.iter().map(|s| s.as_str()).collect();
    let arrow_refs: Vec<(&str, &str, &str)> = arrows
        .iter()
        .map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str()))
        .collect();
    let composite_refs: Vec<(&str, &str, &str)> = composites
        .iter()
        .map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str()))
        .collect();
    let category = FiniteCategory::from_parts(&object_refs, &arrow_refs, &composite_refs)?;
    Ok(PathCategory {
        category,
        object_element: maximal,
        morphism_element,
        morphism_of,
    })
}

/// The canonical map from a Z1∧Z2 semigroup onto the zigzag maps of its
/// path category: zero to zero, the path `a` to the translation by its
/// morphism, and everything else along its zigzag normal form.
pub fn theta_map<E: Element>(
    sgp: &FiniteInverseSemigroup<E>,
    pc: &PathCategory,
    zm: &ZigzagMaps,
) -> Result<Vec<u32>, PathError> {
    let tau = |p: u32| zm.translation[pc.morphism_of[&p] as usize];
    let t = &zm.semigroup;
    let mut map = Vec::with_capacity(sgp.order());
    for s in 0..sgp.order() as u32 {
        if sgp.is_zero(s) {
            map.push(t.require_zero()?);
            continue;
        }
        let word = zigzag_normal_form(sgp, s)?;
        let mut acc: Option<u32> = None;
        for (a, b) in word.letters {
            let step = t.product(t.inverse_of(tau(a)), tau(b));
            acc = Some(match acc {
                None => step,
                Some(prev) => t.product(prev, step),
            });
        }
        map.push(acc.expect("nonempty word"));
    }
    Ok(map)
}

/// The characterization theorem, checked mechanically: a semigroup with
/// zero satisfying Z1, Z2, Z3 is isomorphic to the zigzag maps of its path
/// category.  Fails with the offending axiom, or with the isomorphism
/// defect (which would refute the theorem on this instance).
pub fn theta_check<E: Element>(sgp: &FiniteInverseSemigroup<E>) -> Result<(), PathError> {
    for (axiom, ok) in [
        ("Z1", check_z1(sgp)?),
        ("Z2", check_z2(sgp)?),
        ("Z3", check_z3(sgp)?),
    ] {
        if !ok {
            return Err(PathError::AxiomFailed { axiom });
        }
    }
    let pc = path_category(sgp)?;
    let zm = pc.category.zigzag_semigroup()?;
    let map = theta_map(sgp, &pc, &zm)?;
    semigroup::check_isomorphism_map(sgp, &zm.semigroup, &map)?;
    Ok(())
}

/// A class of the domain-path congruence.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassElem {
    pub class: u32,
    label: String,
}

impl fmt::Display for ClassElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

struct QuotientOps<'a, E> {
    sgp: &'a FiniteInverseSemigroup<E>,
    partition: &'a Partition,
    reps: Vec<u32>,
    labels: Vec<String>,
}

impl<'a, E: Element> QuotientOps<'a, E> {
    fn elem(&self, class: u32) -> ClassElem {
        ClassElem {
            class,
            label: self.labels[class as usize].clone(),
        }
    }
}

impl<'a, E: Element> InverseOps for QuotientOps<'a, E> {
    type Elem = ClassElem;

    fn product(&self, a: &ClassElem, b: &ClassElem) -> ClassElem {
        let p = self
            .sgp
            .product(self.reps[a.class as usize], self.reps[b.class as usize]);
        self.elem(self.partition.class_of[p as usize])
    }

    fn inverse(&self, a: &ClassElem) -> ClassElem {
        let i = self.sgp.inverse_of(self.reps[a.class as usize]);
        self.elem(self.partition.class_of[i as usize])
    }

    fn zero(&self) -> Option<ClassElem> {
        self.sgp
            .zero()
            .map(|z| self.elem(self.partition.class_of[z as usize]))
    }
}

/// A quotient semigroup together with the partition that produced it.
pub struct Quotient {
    pub semigroup: FiniteInverseSemigroup<ClassElem>,
    pub partition: Partition,
}

/// Quotient a Z1∧Z2 semigroup by the domain-path relation
/// `s ≈ t iff P_s = P_t and s·x = t·x for all x ∈ P_s`.
///
/// The relation is re-verified to be a congruence on the instance before
/// the quotient is formed.  The result satisfies Z1–Z3 and is isomorphic
/// to the zigzag maps of the path category.
pub fn z_quotient<E: Element>(sgp: &FiniteInverseSemigroup<E>) -> Result<Quotient, PathError> {
    if !check_z1(sgp)? {
        return Err(PathError::AxiomFailed { axiom: "Z1" });
    }
    if !check_z2(sgp)? {
        return Err(PathError::AxiomFailed { axiom: "Z2" });
    }
    let partition = domain_path_partition(sgp);
    if let Some(w) = congruence_witness(sgp, &partition) {
        return Err(PathError::NotACongruence {
            s: sgp.name(w.s),
            t: sgp.name(w.t),
            u: sgp.name(w.u),
        });
    }
    let reps: Vec<u32> = partition.classes.iter().map(|c| c[0]).collect();
    let labels: Vec<String> = reps.iter().map(|&r| format!("[{}]", sgp.name(r))).collect();
    let ops = QuotientOps {
        sgp,
        partition: &partition,
        reps,
        labels,
    };
    let elements: Vec<ClassElem> = (0..partition.classes.len() as u32)
        .map(|c| ops.elem(c))
        .collect();
    let semigroup = semigroup::from_elements(&ops, elements)?;
    Ok(Quotient {
        semigroup,
        partition,
    })
}
