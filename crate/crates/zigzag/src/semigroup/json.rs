//! JSON snapshots of semigroups.
//!
//! The snapshot is self-contained: element names, full product and star
//! tables, the zero, generators, idempotents, and the Green's class
//! partitions.  Keys serialize in sorted order, so the byte output — and
//! therefore its digest — is stable across runs and platforms.

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use super::{Element, FiniteInverseSemigroup};

impl<E: Element> FiniteInverseSemigroup<E> {
    /// Schema-1 snapshot of the whole structure.
    pub fn snapshot(&self) -> Value {
        let n = self.order();
        let product: Vec<Vec<u32>> = (0..n as u32)
            .map(|i| (0..n as u32).map(|j| self.product(i, j)).collect())
            .collect();
        let star: Vec<u32> = (0..n as u32).map(|i| self.inverse_of(i)).collect();
        let green = self.green();
        json!({
            "schema": 1,
            "order": n,
            "elements": (0..n as u32).map(|i| self.name(i)).collect::<Vec<_>>(),
            "generators": self.generators(),
            "zero": self.zero(),
            "product": product,
            "star": star,
            "idempotents": self.idempotents(),
            "maximal_idempotents": self.maximal_idempotents(),
            "green": {
                "l": green.l_classes,
                "r": green.r_classes,
                "h": green.h_classes,
                "d": green.d_classes,
            },
        })
    }
}

/// Hex SHA-256 of a JSON value's canonical serialization.
pub fn digest(value: &Value) -> String {
    let bytes = serde_json::to_vec(value).expect("JSON serialization cannot fail");
    let mut hasher = Sha256::new();
    hasher.update(&bytes);
    let out = hasher.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbij::{GroundSet, PartialBijection, PbijOps};
    use crate::semigroup::generate;

    #[test]
    fn snapshot_is_stable_and_complete() {
        let g = GroundSet::integers(2).unwrap();
        let ops = PbijOps::new(&g);
        let gen = PartialBijection::from_pairs(&g, &[(0, 1)]).unwrap();
        let s = generate(&ops, std::slice::from_ref(&gen), &Default::default()).unwrap();
        let a = s.snapshot();
        assert_eq!(a["schema"], 1);
        assert_eq!(a["order"], 5);
        assert_eq!(a["elements"].as_array().unwrap().len(), 5);
        assert_eq!(a["product"].as_array().unwrap().len(), 5);
        let t = generate(&ops, &[gen], &Default::default()).unwrap();
        let b = t.snapshot();
        assert_eq!(digest(&a), digest(&b));
        assert_eq!(digest(&a).len(), 64);
    }
}
