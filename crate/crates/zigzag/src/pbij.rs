//! Partial bijections on a finite ground set.
//!
//! A [`PartialBijection`] is an injective partial map from a [`GroundSet`] to
//! itself.  Under composition-on-the-largest-domain these form the symmetric
//! inverse monoid `I(X)`; the empty map is its zero.  Points are interned to
//! dense indices so composition is array-indexable; the original names are
//! kept for display.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use thiserror::Error;

/// Errors raised when building or combining partial bijections.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PbijError {
    #[error("ground sets differ: left has {left} points, right has {right}")]
    GroundMismatch { left: usize, right: usize },
    #[error("point index {index} out of range for ground set of {size} points")]
    PointOutOfRange { index: u32, size: usize },
    #[error("duplicate source point {name:?}")]
    DuplicateSource { name: String },
    #[error("duplicate target point {name:?}")]
    DuplicateTarget { name: String },
    #[error("ground set must be nonempty")]
    EmptyGround,
    #[error("duplicate point name {name:?}")]
    DuplicatePointName { name: String },
}

/// An interned, ordered set of point names.
///
/// Shared by every partial bijection over the same universe via `Arc`, so
/// equality of elements never has to re-compare name tables in the common
/// case.
#[derive(Debug)]
pub struct GroundSet {
    names: Vec<String>,
    index: HashMap<String, u32>,
}

impl GroundSet {
    /// Ground set with the given point names, in order.
    pub fn named<S: Into<String>>(names: Vec<S>) -> Result<Arc<Self>, PbijError> {
        if names.is_empty() {
            return Err(PbijError::EmptyGround);
        }
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.clone(), i as u32).is_some() {
                return Err(PbijError::DuplicatePointName { name: n.clone() });
            }
        }
        Ok(Arc::new(GroundSet { names, index }))
    }

    /// Ground set `{1, 2, ..., n}` with decimal names.
    pub fn integers(n: u32) -> Result<Arc<Self>, PbijError> {
        Self::named((1..=n).map(|i| i.to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, index: u32) -> &str {
        &self.names[index as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Index of a point name, if present.
    pub fn index_of(&self, name: &str) -> Option<u32> {
        self.index.get(name).copied()
    }
}

fn same_ground(a: &Arc<GroundSet>, b: &Arc<GroundSet>) -> bool {
    Arc::ptr_eq(a, b) || a.names == b.names
}

/// An injective partial self-map of a ground set.
///
/// Stored densely: `map[i]` is the image of point `i`, if any.  The empty
/// map plays the role of the zero element and displays as `0`; every other
/// map displays in two-row form, e.g. `(1 2 3 / 7 8 9)`.
#[derive(Clone, Debug)]
pub struct PartialBijection {
    ground: Arc<GroundSet>,
    map: Vec<Option<u32>>,
}

impl PartialBijection {
    /// The empty map (zero of `I(X)`).
    pub fn empty(ground: &Arc<GroundSet>) -> Self {
        PartialBijection {
            ground: Arc::clone(ground),
            map: vec![None; ground.len()],
        }
    }

    /// The identity on the whole ground set.
    pub fn identity(ground: &Arc<GroundSet>) -> Self {
        PartialBijection {
            ground: Arc::clone(ground),
            map: (0..ground.len() as u32).map(Some).collect(),
        }
    }

    /// The identity restricted to the given point indices.
    pub fn identity_on(ground: &Arc<GroundSet>, points: &[u32]) -> Result<Self, PbijError> {
        let mut map = vec![None; ground.len()];
        for &p in points {
            if p as usize >= ground.len() {
                return Err(PbijError::PointOutOfRange {
                    index: p,
                    size: ground.len(),
                });
            }
            map[p as usize] = Some(p);
        }
        Ok(PartialBijection {
            ground: Arc::clone(ground),
            map,
        })
    }

    /// Build from explicit `(source, target)` pairs of point indices.
    ///
    /// Rejects repeated sources (not a function), repeated targets (not
    /// injective), and out-of-range indices.
    pub fn from_pairs(ground: &Arc<GroundSet>, pairs: &[(u32, u32)]) -> Result<Self, PbijError> {
        let n = ground.len();
        let mut map = vec![None; n];
        let mut hit = vec![false; n];
        for &(src, dst) in pairs {
            for p in [src, dst] {
                if p as usize >= n {
                    return Err(PbijError::PointOutOfRange { index: p, size: n });
                }
            }
            if map[src as usize].is_some() {
                return Err(PbijError::DuplicateSource {
                    name: ground.name(src).to_string(),
                });
            }
            if hit[dst as usize] {
                return Err(PbijError::DuplicateTarget {
                    name: ground.name(dst).to_string(),
                });
            }
            map[src as usize] = Some(dst);
            hit[dst as usize] = true;
        }
        Ok(PartialBijection {
            ground: Arc::clone(ground),
            map,
        })
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    /// Image of a point index, if defined.
    pub fn apply(&self, point: u32) -> Option<u32> {
        self.map.get(point as usize).copied().flatten()
    }

    /// Domain as ascending point indices.
    pub fn domain(&self) -> Vec<u32> {
        (0..self.map.len() as u32)
            .filter(|&i| self.map[i as usize].is_some())
            .collect()
    }

    /// Range as ascending point indices.
    pub fn range(&self) -> Vec<u32> {
        let mut r: Vec<u32> = self.map.iter().flatten().copied().collect();
        r.sort_unstable();
        r
    }

    /// Number of points where the map is defined.
    pub fn rank(&self) -> usize {
        self.map.iter().flatten().count()
    }

    /// True for the empty map.
    pub fn is_zero(&self) -> bool {
        self.map.iter().all(Option::is_none)
    }

    /// A partial bijection is idempotent exactly when it is an identity on
    /// its domain.
    pub fn is_idempotent(&self) -> bool {
        self.map
            .iter()
            .enumerate()
            .all(|(i, v)| v.is_none() || *v == Some(i as u32))
    }

    /// Composition `self ∘ other` on the largest possible domain:
    /// `x ↦ self(other(x))` wherever both steps are defined.
    pub fn compose(&self, other: &PartialBijection) -> Result<PartialBijection, PbijError> {
        if !same_ground(&self.ground, &other.ground) {
            return Err(PbijError::GroundMismatch {
                left: self.ground.len(),
                right: other.ground.len(),
            });
        }
        let map = other
            .map
            .iter()
            .map(|v| v.and_then(|mid| self.map[mid as usize]))
            .collect();
        Ok(PartialBijection {
            ground: Arc::clone(&self.ground),
            map,
        })
    }

    /// The inverse map (swap every pair).
    pub fn inverse(&self) -> PartialBijection {
        let mut map = vec![None; self.map.len()];
        for (i, v) in self.map.iter().enumerate() {
            if let Some(j) = v {
                map[*j as usize] = Some(i as u32);
            }
        }
        PartialBijection {
            ground: Arc::clone(&self.ground),
            map,
        }
    }

    /// True when `self` is a restriction of `other` (every pair of `self`
    /// is a pair of `other`).  This is the natural partial order of `I(X)`,
    /// stated set-theoretically.
    pub fn restricts(&self, other: &PartialBijection) -> bool {
        same_ground(&self.ground, &other.ground)
            && self
                .map
                .iter()
                .enumerate()
                .all(|(i, v)| v.is_none() || other.map[i] == *v)
    }
}

impl PartialEq for PartialBijection {
    fn eq(&self, other: &Self) -> bool {
        same_ground(&self.ground, &other.ground) && self.map == other.map
    }
}

impl Eq for PartialBijection {}

impl Hash for PartialBijection {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ground.len().hash(state);
        self.map.hash(state);
    }
}

impl PartialOrd for PartialBijection {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PartialBijection {
    fn cmp(&self, other: &Self) -> Ordering {
        self.map
            .cmp(&other.map)
            .then_with(|| self.ground.names().cmp(other.ground.names()))
    }
}

impl fmt::Display for PartialBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let dom = self.domain();
        let top: Vec<&str> = dom.iter().map(|&i| self.ground.name(i)).collect();
        let bot: Vec<&str> = dom
            .iter()
            .map(|&i| self.ground.name(self.map[i as usize].unwrap()))
            .collect();
        write!(f, "({} / {})", top.join(" "), bot.join(" "))
    }
}

/// Semigroup operations for partial bijections over a fixed ground set.
#[derive(Clone, Debug)]
pub struct PbijOps {
    ground: Arc<GroundSet>,
}

impl PbijOps {
    pub fn new(ground: &Arc<GroundSet>) -> Self {
        PbijOps {
            ground: Arc::clone(ground),
        }
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }
}

impl crate::semigroup::InverseOps for PbijOps {
    type Elem = PartialBijection;

    fn product(&self, a: &PartialBijection, b: &PartialBijection) -> PartialBijection {
        a.compose(b).expect("elements share the ops ground set")
    }

    fn inverse(&self, a: &PartialBijection) -> PartialBijection {
        a.inverse()
    }

    fn zero(&self) -> Option<PartialBijection> {
        Some(PartialBijection::empty(&self.ground))
    }
}

/// All injective partial self-maps of the ground set, by backtracking.
/// The count grows super-exponentially; keep the ground set small.
pub fn enumerate_all(g: &Arc<GroundSet>) -> Vec<PartialBijection> {
    let n = g.len() as u32;
    let mut out = Vec::new();
    let mut map: Vec<Option<u32>> = vec![None; n as usize];
    fn rec(
        g: &Arc<GroundSet>,
        point: u32,
        n: u32,
        used: &mut Vec<bool>,
        map: &mut Vec<Option<u32>>,
        out: &mut Vec<PartialBijection>,
    ) {
        if point == n {
            let pairs: Vec<(u32, u32)> = map
                .iter()
                .enumerate()
                .filter_map(|(i, v)| v.map(|t| (i as u32, t)))
                .collect();
            out.push(PartialBijection::from_pairs(g, &pairs).unwrap());
            return;
        }
        map[point as usize] = None;
        rec(g, point + 1, n, used, map, out);
        for t in 0..n {
            if !used[t as usize] {
                used[t as usize] = true;
                map[point as usize] = Some(t);
                rec(g, point + 1, n, used, map, out);
                map[point as usize] = None;
                used[t as usize] = false;
            }
        }
    }
    rec(g, 0, n, &mut vec![false; n as usize], &mut map, &mut out);
    out
}
