//! The enlargement of an inverse semigroup by triples over its idempotents.
//!
//! For a finite inverse semigroup `S`, the elements here are the triples
//! `(e, s, f)` with `e, f` nonzero idempotents, `s ≠ 0`, `s·s* ≤ e`, and
//! `s*·s ≤ f`, together with a zero.  Multiplication matches middles
//! diagonally:
//!
//! ```text
//! (e, s, f)·(e', t, f') = (e, s·t, f')   if f = e' and s·t ≠ 0,
//!                         0              otherwise,
//! ```
//!
//! and inversion flips the triple: `(e, s, f)* = (f, s*, e)`.  The result
//! is an inverse semigroup with zero satisfying all three zigzag axioms:
//! its maximal idempotents are the `(e, e, e)` and its paths the
//! `(e, s, s*·s)`.

use std::fmt;

use crate::semigroup::{self, Element, FiniteInverseSemigroup, InverseOps, SemigroupError};

/// An element of the enlargement: zero or a triple.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ImElem {
    Zero,
    Triple {
        e: u32,
        s: u32,
        f: u32,
        label: String,
    },
}

impl fmt::Display for ImElem {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ImElem::Zero => out.write_str("0"),
            ImElem::Triple { label, .. } => out.write_str(label),
        }
    }
}

/// Product and inverse for triples over a fixed base semigroup.
pub struct ImOps<'a, E> {
    pub base: &'a FiniteInverseSemigroup<E>,
}

impl<'a, E: Element> ImOps<'a, E> {
    pub fn triple(&self, e: u32, s: u32, f: u32) -> ImElem {
        debug_assert!(self.base.is_idempotent(e) && self.base.is_idempotent(f));
        debug_assert!(!self.base.is_zero(s));
        ImElem::Triple {
            e,
            s,
            f,
            label: format!(
                "({},{},{})",
                self.base.name(e),
                self.base.name(s),
                self.base.name(f)
            ),
        }
    }
}

impl<'a, E: Element> InverseOps for ImOps<'a, E> {
    type Elem = ImElem;

    fn product(&self, a: &ImElem, b: &ImElem) -> ImElem {
        let (
            ImElem::Triple { e, s, f, .. },
            ImElem::Triple {
                e: e2, s: t, f: f2, ..
            },
        ) = (a, b)
        else {
            return ImElem::Zero;
        };
        if f != e2 {
            return ImElem::Zero;
        }
        let st = self.base.product(*s, *t);
        if self.base.is_zero(st) {
            return ImElem::Zero;
        }
        self.triple(*e, st, *f2)
    }

    fn inverse(&self, a: &ImElem) -> ImElem {
        match a {
            ImElem::Zero => ImElem::Zero,
            ImElem::Triple { e, s, f, .. } => self.triple(*f, self.base.inverse_of(*s), *e),
        }
    }

    fn zero(&self) -> Option<ImElem> {
        Some(ImElem::Zero)
    }
}

/// Build the full enlargement of `base`: every admissible triple plus zero.
/// Triples are ordered by `(s, e, f)` with all indices ascending.
pub fn im_construction<E: Element>(
    base: &FiniteInverseSemigroup<E>,
) -> Result<FiniteInverseSemigroup<ImElem>, SemigroupError> {
    let ops = ImOps { base };
    let idempotents = base.nonzero_idempotents();
    let mut elements = vec![ImElem::Zero];
    for s in base.nonzero() {
        let range = base.product(s, base.inverse_of(s));
        let dom = base.product(base.inverse_of(s), s);
        for &e in idempotents.iter().filter(|&&e| base.natural_leq(range, e)) {
            for &f in idempotents.iter().filter(|&&f| base.natural_leq(dom, f)) {
                elements.push(ops.triple(e, s, f));
            }
        }
    }
    semigroup::from_elements(&ops, elements)
}
