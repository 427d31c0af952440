//! Isomorphism checking between table-based semigroups.
//!
//! Candidate maps are either given in full (one target index per source
//! index) or induced from images of the generators, extended
//! multiplicatively along the derivation trace that [`super::generate`]
//! records.  Verification is exhaustive: bijectivity plus compatibility
//! with every product and inverse.

use thiserror::Error;

use super::{Derivation, Element, FiniteInverseSemigroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IsoFailure {
    #[error("expected images for {expected} generators, got {got}")]
    WrongGeneratorCount { expected: usize, got: usize },
    #[error("generator image {image} is out of range for the target")]
    ImageOutOfRange { image: u32 },
    #[error("map has {got} entries for a semigroup of order {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("source has an adjoined zero but the target has no zero")]
    MissingZero,
    #[error("orders differ: {left} versus {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("map is not injective: elements {s} and {t} share an image")]
    NotInjective { s: u32, t: u32 },
    #[error("map does not respect the product of {s} and {t}")]
    NotMultiplicative { s: u32, t: u32 },
    #[error("map does not respect the inverse of {s}")]
    NotStarCompatible { s: u32 },
}

/// Extend images of the generators to the whole source semigroup, following
/// each element's derivation.  The result maps source indices to target
/// indices; it is multiplicative by construction on the derivation tree but
/// still needs [`check_isomorphism_map`] to count as an isomorphism.
pub fn extend_generator_map<E1: Element, E2: Element>(
    source: &FiniteInverseSemigroup<E1>,
    target: &FiniteInverseSemigroup<E2>,
    generator_images: &[u32],
) -> Result<Vec<u32>, IsoFailure> {
    let gens = source.generators();
    if generator_images.len() != gens.len() {
        return Err(IsoFailure::WrongGeneratorCount {
            expected: gens.len(),
            got: generator_images.len(),
        });
    }
    for &img in generator_images {
        if img as usize >= target.order() {
            return Err(IsoFailure::ImageOutOfRange { image: img });
        }
    }
    let mut map = vec![0u32; source.order()];
    for i in 0..source.order() as u32 {
        map[i as usize] = match source.derivation(i) {
            Derivation::Generator(_) => {
                let pos = gens
                    .iter()
                    .position(|&g| g == i)
                    .expect("generator derivations point at generator indices");
                generator_images[pos]
            }
            Derivation::Product(a, b) => target.product(map[a as usize], map[b as usize]),
            Derivation::Inverse(a) => target.inverse_of(map[a as usize]),
            Derivation::AdjoinedZero => target.zero().ok_or(IsoFailure::MissingZero)?,
        };
    }
    Ok(map)
}

/// Exhaustively verify that `map` (source index → target index) is an
/// inverse semigroup isomorphism.
pub fn check_isomorphism_map<E1: Element, E2: Element>(
    source: &FiniteInverseSemigroup<E1>,
    target: &FiniteInverseSemigroup<E2>,
    map: &[u32],
) -> Result<(), IsoFailure> {
    let n = source.order();
    if map.len() != n {
        return Err(IsoFailure::WrongLength {
            expected: n,
            got: map.len(),
        });
    }
    if n != target.order() {
        return Err(IsoFailure::OrderMismatch {
            left: n,
            right: target.order(),
        });
    }
    for &img in map {
        if img as usize >= target.order() {
            return Err(IsoFailure::ImageOutOfRange { image: img });
        }
    }
    let mut seen = vec![u32::MAX; n];
    for (s, &img) in map.iter().enumerate() {
        if seen[img as usize] != u32::MAX {
            return Err(IsoFailure::NotInjective {
                s: seen[img as usize],
                t: s as u32,
            });
        }
        seen[img as usize] = s as u32;
    }
    for s in 0..n as u32 {
        if map[source.inverse_of(s) as usize] != target.inverse_of(map[s as usize]) {
            return Err(IsoFailure::NotStarCompatible { s });
        }
        for t in 0..n as u32 {
            if map[source.product(s, t) as usize]
                != target.product(map[s as usize], map[t as usize])
            {
                return Err(IsoFailure::NotMultiplicative { s, t });
            }
        }
    }
    Ok(())
}

/// Extend generator images and verify the result, in one call.
pub fn verify_isomorphism<E1: Element, E2: Element>(
    source: &FiniteInverseSemigroup<E1>,
    target: &FiniteInverseSemigroup<E2>,
    generator_images: &[u32],
) -> Result<(), IsoFailure> {
    let map = extend_generator_map(source, target, generator_images)?;
    check_isomorphism_map(source, target, &map)
}
