//! Generic finite inverse semigroup engine.
//!
//! [`generate`] closes a generating set under product and inverse and returns
//! a [`FiniteInverseSemigroup`]: a table-based structure supporting the
//! natural partial order, Green's relations, eggbox diagrams, maximal
//! idempotents, and the various structural checks the rest of the crate
//! builds on.  The engine is agnostic about what the elements are — partial
//! bijections, path pairs, triples — as long as an [`InverseOps`]
//! implementation supplies product, inverse, and the zero of the universe.

mod axioms;
mod green;
mod iso;
mod json;

pub use axioms::{MuClassKey, ProperFailure, Z1Witness};
pub use green::{DClassGrid, EggboxDiagram, GreenData};
pub use iso::{check_isomorphism_map, extend_generator_map, verify_isomorphism, IsoFailure};
pub use json::digest;

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::pbij::{GroundSet, PartialBijection};

/// Bounds every element type must satisfy: value semantics, a canonical
/// total order (used to break ties during closure), and a display form.
pub trait Element: Clone + Eq + Ord + Hash + fmt::Display + fmt::Debug {}
impl<T: Clone + Eq + Ord + Hash + fmt::Display + fmt::Debug> Element for T {}

/// Product, inverse, and zero for some universe of elements.
///
/// Implementations must be closed: the product or inverse of any two
/// elements of the universe is again in the universe.  `zero` returns the
/// canonical zero element of the universe if one exists (for partial
/// bijections, the empty map).
pub trait InverseOps {
    type Elem: Element;

    fn product(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inverse(&self, a: &Self::Elem) -> Self::Elem;
    fn zero(&self) -> Option<Self::Elem>;
}

/// How an element first arose during closure.  Lets generator maps be
/// extended multiplicatively without re-deriving words.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Derivation {
    /// `k`-th entry of the generating set.
    Generator(u32),
    /// Product of two earlier elements.
    Product(u32, u32),
    /// Inverse of an earlier element.
    Inverse(u32),
    /// Zero adjoined after closure.
    AdjoinedZero,
}

/// Options for [`generate`].
#[derive(Clone, Debug)]
pub struct GenerateOptions {
    /// Abort with a resource error if the closure would exceed this many
    /// elements.
    pub size_cap: usize,
    /// Adjoin the universe's zero even when no product reaches it.
    pub adjoin_zero: bool,
}

impl Default for GenerateOptions {
    fn default() -> Self {
        GenerateOptions {
            size_cap: 100_000,
            adjoin_zero: false,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("closure exceeded the size cap of {cap} elements")]
    SizeCapExceeded { cap: usize },
    #[error("empty generating set")]
    EmptyGeneratingSet,
    #[error("duplicate element {name:?} in element list")]
    DuplicateElement { name: String },
    #[error("element set is not closed: {detail}")]
    NotClosed { detail: String },
    #[error("not an inverse semigroup: {detail}")]
    NotInverse { detail: String },
    #[error("semigroup has no zero element")]
    NoZero,
    #[error("element {name:?} is not a nonzero idempotent")]
    NotAnIdempotent { name: String },
    #[error("no unique maximal idempotent above {name:?}: found {found}")]
    NoUniqueMaximal { name: String, found: usize },
    #[error("semigroup has no nonzero element")]
    Degenerate,
}

/// A finite inverse semigroup with full product and inverse tables.
///
/// Elements are indexed `0..order()`; all structural queries work on
/// indices.  The element order is deterministic: breadth-first from the
/// generators with ties broken by the canonical order of the element type.
pub struct FiniteInverseSemigroup<E> {
    elements: Vec<E>,
    index: HashMap<E, u32>,
    product: Vec<u32>,
    star: Vec<u32>,
    zero: Option<u32>,
    generators: Vec<u32>,
    derivations: Vec<Derivation>,
    green: OnceLock<GreenData>,
}

impl<E: Element> fmt::Debug for FiniteInverseSemigroup<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteInverseSemigroup")
            .field("order", &self.order())
            .field("generators", &self.generators.len())
            .field("zero", &self.zero)
            .finish()
    }
}

/// Close `generators` under product and inverse.
///
/// Discovery is breadth-first: all elements reachable with `k` operations
/// appear before any that need `k + 1`, and elements discovered in the same
/// round are admitted in their canonical order, so the result is fully
/// deterministic.  With `adjoin_zero` the universe's zero is appended even
/// if no product vanishes.
pub fn generate<O: InverseOps>(
    ops: &O,
    generators: &[O::Elem],
    opts: &GenerateOptions,
) -> Result<FiniteInverseSemigroup<O::Elem>, SemigroupError> {
    let mut elements: Vec<O::Elem> = Vec::new();
    let mut index: HashMap<O::Elem, u32> = HashMap::new();
    let mut derivations: Vec<Derivation> = Vec::new();
    let mut gen_indices: Vec<u32> = Vec::new();

    for (k, g) in generators.iter().enumerate() {
        match index.get(g) {
            Some(&i) => {
                if !gen_indices.contains(&i) {
                    gen_indices.push(i);
                }
            }
            None => {
                let id = elements.len() as u32;
                index.insert(g.clone(), id);
                elements.push(g.clone());
                derivations.push(Derivation::Generator(k as u32));
                gen_indices.push(id);
            }
        }
    }
    if elements.is_empty() && !opts.adjoin_zero {
        return Err(SemigroupError::EmptyGeneratingSet);
    }

    let mut level_start = 0usize;
    loop {
        let level_end = elements.len();
        if level_start == level_end {
            break;
        }
        let mut fresh: Vec<O::Elem> = Vec::new();
        let mut how: HashMap<O::Elem, Derivation> = HashMap::new();
        let mut consider = |v: O::Elem, d: Derivation, fresh: &mut Vec<O::Elem>| {
            if !index.contains_key(&v) && !how.contains_key(&v) {
                how.insert(v.clone(), d);
                fresh.push(v);
            }
        };
        for (i, el) in elements
            .iter()
            .enumerate()
            .take(level_end)
            .skip(level_start)
        {
            consider(ops.inverse(el), Derivation::Inverse(i as u32), &mut fresh);
        }
        for i in level_start..level_end {
            for j in 0..level_end {
                consider(
                    ops.product(&elements[i], &elements[j]),
                    Derivation::Product(i as u32, j as u32),
                    &mut fresh,
                );
                consider(
                    ops.product(&elements[j], &elements[i]),
                    Derivation::Product(j as u32, i as u32),
                    &mut fresh,
                );
            }
        }
        fresh.sort();
        for v in fresh {
            if elements.len() >= opts.size_cap {
                return Err(SemigroupError::SizeCapExceeded { cap: opts.size_cap });
            }
            let id = elements.len() as u32;
            derivations.push(how.remove(&v).expect("derivation recorded"));
            index.insert(v.clone(), id);
            elements.push(v);
        }
        level_start = level_end;
    }

    let mut zero = ops.zero().and_then(|z| index.get(&z).copied());
    if zero.is_none() && opts.adjoin_zero {
        if let Some(z) = ops.zero() {
            let id = elements.len() as u32;
            index.insert(z.clone(), id);
            elements.push(z);
            derivations.push(Derivation::AdjoinedZero);
            zero = Some(id);
        }
    }

    finish(ops, elements, index, zero, gen_indices, derivations)
}

/// Build a semigroup from an explicitly enumerated, already-closed element
/// list.  The given order is kept; every element counts as a generator.
pub fn from_elements<O: InverseOps>(
    ops: &O,
    elements: Vec<O::Elem>,
) -> Result<FiniteInverseSemigroup<O::Elem>, SemigroupError> {
    if elements.is_empty() {
        return Err(SemigroupError::EmptyGeneratingSet);
    }
    let mut index = HashMap::with_capacity(elements.len());
    for (i, e) in elements.iter().enumerate() {
        if index.insert(e.clone(), i as u32).is_some() {
            return Err(SemigroupError::DuplicateElement {
                name: e.to_string(),
            });
        }
    }
    let zero = ops.zero().and_then(|z| index.get(&z).copied());
    let generators: Vec<u32> = (0..elements.len() as u32).collect();
    let derivations: Vec<Derivation> = generators
        .iter()
        .map(|&i| Derivation::Generator(i))
        .collect();
    finish(ops, elements, index, zero, generators, derivations)
}

fn finish<O: InverseOps>(
    ops: &O,
    elements: Vec<O::Elem>,
    index: HashMap<O::Elem, u32>,
    zero: Option<u32>,
    generators: Vec<u32>,
    derivations: Vec<Derivation>,
) -> Result<FiniteInverseSemigroup<O::Elem>, SemigroupError> {
    let n = elements.len();
    let look = |v: &O::Elem, what: &str, a: &O::Elem, b: Option<&O::Elem>| {
        index.get(v).copied().ok_or_else(|| {
            let of = match b {
                Some(b) => format!("{what} of {a} and {b}"),
                None => format!("{what} of {a}"),
            };
            SemigroupError::NotClosed {
                detail: format!("{of} gives {v}, which is not in the element set"),
            }
        })
    };
    let mut product = vec![0u32; n * n];
    for i in 0..n {
        for j in 0..n {
            let v = ops.product(&elements[i], &elements[j]);
            product[i * n + j] = look(&v, "product", &elements[i], Some(&elements[j]))?;
        }
    }
    let mut star = vec![0u32; n];
    for i in 0..n {
        let v = ops.inverse(&elements[i]);
        star[i] = look(&v, "inverse", &elements[i], None)?;
    }
    let sgp = FiniteInverseSemigroup {
        elements,
        index,
        product,
        star,
        zero,
        generators,
        derivations,
        green: OnceLock::new(),
    };
    sgp.verify_inverse_structure()?;
    Ok(sgp)
}

impl<E: Element> FiniteInverseSemigroup<E> {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: u32) -> &E {
        &self.elements[i as usize]
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    /// Display form of element `i`.
    pub fn name(&self, i: u32) -> String {
        self.elements[i as usize].to_string()
    }

    pub fn index_of(&self, e: &E) -> Option<u32> {
        self.index.get(e).copied()
    }

    #[inline]
    pub fn product(&self, i: u32, j: u32) -> u32 {
        self.product[i as usize * self.elements.len() + j as usize]
    }

    #[inline]
    pub fn inverse_of(&self, i: u32) -> u32 {
        self.star[i as usize]
    }

    pub fn zero(&self) -> Option<u32> {
        self.zero
    }

    /// Index of the zero, or an input error for zero-less semigroups.
    pub fn require_zero(&self) -> Result<u32, SemigroupError> {
        self.zero.ok_or(SemigroupError::NoZero)
    }

    pub fn is_zero(&self, i: u32) -> bool {
        self.zero == Some(i)
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn derivation(&self, i: u32) -> Derivation {
        self.derivations[i as usize]
    }

    /// All element indices except the zero.
    pub fn nonzero(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.order() as u32).filter(move |&i| !self.is_zero(i))
    }

    #[inline]
    pub fn is_idempotent(&self, i: u32) -> bool {
        self.product(i, i) == i
    }

    /// All idempotents, including the zero if present.
    pub fn idempotents(&self) -> Vec<u32> {
        (0..self.order() as u32)
            .filter(|&i| self.is_idempotent(i))
            .collect()
    }

    pub fn nonzero_idempotents(&self) -> Vec<u32> {
        self.nonzero().filter(|&i| self.is_idempotent(i)).collect()
    }

    /// Natural partial order: `s ≤ t` iff `s = t·(s*·s)`.
    #[inline]
    pub fn natural_leq(&self, s: u32, t: u32) -> bool {
        s == self.product(t, self.product(self.inverse_of(s), s))
    }

    /// Idempotents `f` with `e ≤ f`, including `e` itself (ascending).
    pub fn idempotents_above(&self, e: u32) -> Result<Vec<u32>, SemigroupError> {
        self.check_nonzero_idempotent(e)?;
        Ok(self
            .nonzero()
            .filter(|&f| self.is_idempotent(f) && self.natural_leq(e, f))
            .collect())
    }

    fn check_nonzero_idempotent(&self, e: u32) -> Result<(), SemigroupError> {
        if self.is_zero(e) || !self.is_idempotent(e) {
            return Err(SemigroupError::NotAnIdempotent { name: self.name(e) });
        }
        Ok(())
    }

    /// Nonzero idempotents maximal in the natural partial order.
    pub fn maximal_idempotents(&self) -> Vec<u32> {
        let idems = self.nonzero_idempotents();
        idems
            .iter()
            .copied()
            .filter(|&e| idems.iter().all(|&f| f == e || !self.natural_leq(e, f)))
            .collect()
    }

    /// Does every nonzero idempotent lie below exactly one maximal
    /// idempotent?  (Axiom Z1; equals Perrot's P3.)
    pub fn admits_unique_maximal_idempotents(&self) -> bool {
        self.z1_witness().is_none()
    }

    /// A nonzero idempotent violating unique maximal idempotents, if any.
    pub fn z1_witness(&self) -> Option<Z1Witness> {
        let maximal = self.maximal_idempotents();
        for e in self.nonzero_idempotents() {
            let above: Vec<u32> = maximal
                .iter()
                .copied()
                .filter(|&m| self.natural_leq(e, m))
                .collect();
            if above.len() != 1 {
                return Some(Z1Witness {
                    idempotent: e,
                    maximal_above: above,
                });
            }
        }
        None
    }

    /// The unique maximal idempotent above `e`, written `e°`.
    pub fn unique_maximal_above(&self, e: u32) -> Result<u32, SemigroupError> {
        self.check_nonzero_idempotent(e)?;
        let above: Vec<u32> = self
            .maximal_idempotents()
            .into_iter()
            .filter(|&m| self.natural_leq(e, m))
            .collect();
        match above.as_slice() {
            [m] => Ok(*m),
            _ => Err(SemigroupError::NoUniqueMaximal {
                name: self.name(e),
                found: above.len(),
            }),
        }
    }

    /// Exhaustively re-verify the inverse semigroup axioms on the tables:
    /// unique generalized inverses and commuting idempotents, plus zero
    /// absorption when a zero is present.
    pub fn verify_inverse_structure(&self) -> Result<(), SemigroupError> {
        let n = self.order() as u32;
        for i in 0..n {
            let s = self.inverse_of(i);
            if self.product(self.product(i, s), i) != i || self.product(self.product(s, i), s) != s
            {
                return Err(SemigroupError::NotInverse {
                    detail: format!(
                        "{} fails the inverse laws against {}",
                        self.name(i),
                        self.name(s)
                    ),
                });
            }
            let mut count = 0usize;
            for j in 0..n {
                if self.product(self.product(i, j), i) == i
                    && self.product(self.product(j, i), j) == j
                {
                    count += 1;
                }
            }
            if count != 1 {
                return Err(SemigroupError::NotInverse {
                    detail: format!("{} has {count} generalized inverses", self.name(i)),
                });
            }
        }
        let idems = self.idempotents();
        for &e in &idems {
            for &f in &idems {
                if self.product(e, f) != self.product(f, e) {
                    return Err(SemigroupError::NotInverse {
                        detail: format!(
                            "idempotents {} and {} do not commute",
                            self.name(e),
                            self.name(f)
                        ),
                    });
                }
            }
        }
        if let Some(z) = self.zero {
            for i in 0..n {
                if self.product(z, i) != z || self.product(i, z) != z {
                    return Err(SemigroupError::NotInverse {
                        detail: format!("zero is not absorbing against {}", self.name(i)),
                    });
                }
            }
        }
        Ok(())
    }

    /// Green's relation data (cached).
    pub fn green(&self) -> &GreenData {
        self.green.get_or_init(|| GreenData::compute(self))
    }

    /// Eggbox diagrams for all D-classes.
    pub fn eggbox(&self) -> EggboxDiagram {
        EggboxDiagram::build(self)
    }

    /// The faithful representation by partial bijections on the nonzero
    /// elements: `s` acts by `x ↦ s·x` on `{x ≠ 0 : x = (s*·s)·x}`.  The
    /// zero (if present) becomes the empty map.  Point `i` of the ground
    /// set is named by the 1-based position of the `i`-th nonzero element.
    pub fn to_partial_bijections(
        &self,
    ) -> Result<(Arc<GroundSet>, Vec<PartialBijection>), SemigroupError> {
        let points: Vec<u32> = self.nonzero().collect();
        if points.is_empty() {
            return Err(SemigroupError::Degenerate);
        }
        let ground = GroundSet::integers(points.len() as u32).expect("nonempty ground");
        let slot: HashMap<u32, u32> = points
            .iter()
            .enumerate()
            .map(|(k, &x)| (x, k as u32))
            .collect();
        let mut reps = Vec::with_capacity(self.order());
        for s in 0..self.order() as u32 {
            let dom_projector = self.product(self.inverse_of(s), s);
            let mut pairs = Vec::new();
            for (k, &x) in points.iter().enumerate() {
                if self.product(dom_projector, x) == x {
                    let image = self.product(s, x);
                    debug_assert!(!self.is_zero(image));
                    pairs.push((k as u32, slot[&image]));
                }
            }
            reps.push(
                PartialBijection::from_pairs(&ground, &pairs).expect("translation is injective"),
            );
        }
        Ok((ground, reps))
    }
}

/// A partition of the element indices of a semigroup.
///
/// Classes are ordered by smallest member and each class is ascending, so
/// partitions compare deterministically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub class_of: Vec<u32>,
    pub classes: Vec<Vec<u32>>,
}

impl Partition {
    /// Group `0..n` by key.
    pub fn from_keys<K: Eq + Hash>(n: usize, mut key: impl FnMut(u32) -> K) -> Partition {
        let mut class_of = vec![0u32; n];
        let mut classes: Vec<Vec<u32>> = Vec::new();
        let mut seen: HashMap<K, u32> = HashMap::new();
        for i in 0..n as u32 {
            let k = key(i);
            let id = *seen.entry(k).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() as u32 - 1
            });
            class_of[i as usize] = id;
            classes[id as usize].push(i);
        }
        Partition { class_of, classes }
    }

    pub fn is_trivial(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }
}

/// Witness that a partition fails to be a congruence: multiplying the
/// related pair `(s, t)` by `u` (on the side indicated) lands in different
/// classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceWitness {
    pub s: u32,
    pub t: u32,
    pub u: u32,
    pub on_left: bool,
}

/// Exhaustively check that a partition is a two-sided congruence.
pub fn congruence_witness<E: Element>(
    sgp: &FiniteInverseSemigroup<E>,
    partition: &Partition,
) -> Option<CongruenceWitness> {
    let class = |i: u32| partition.class_of[i as usize];
    for members in &partition.classes {
        let rep = members[0];
        for &s in &members[1..] {
            for u in 0..sgp.order() as u32 {
                if class(sgp.product(s, u)) != class(sgp.product(rep, u)) {
                    return Some(CongruenceWitness {
                        s,
                        t: rep,
                        u,
                        on_left: false,
                    });
                }
                if class(sgp.product(u, s)) != class(sgp.product(u, rep)) {
                    return Some(CongruenceWitness {
                        s,
                        t: rep,
                        u,
                        on_left: true,
                    });
                }
            }
        }
    }
    None
}
