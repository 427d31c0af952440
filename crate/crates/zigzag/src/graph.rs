//! Directed graphs, their path categories, and graph inverse semigroups.
//!
//! A finite directed graph with no directed cycle has finitely many paths,
//! which form a left cancellative, right cancellative, singly aligned
//! category under concatenation.  The same path data also carries the
//! graph inverse semigroup: pairs of equal-source paths under the
//! prefix-matching product, with a zero.  The two constructions are
//! implemented independently — the semigroup never routes through the
//! category — so agreement between them is a real check, not a tautology.
//!
//! Paths are written in composition order: `c.a` is the walk `a` followed
//! by the walk `c`, a morphism from the source of `a` to the target of
//! `c`.  An empty path is written as its vertex.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::cat::{CatError, FiniteCategory};
use crate::semigroup::{self, FiniteInverseSemigroup, InverseOps, SemigroupError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph needs at least one vertex")]
    Empty,
    #[error("duplicate vertex {name:?}")]
    DuplicateVertex { name: String },
    #[error("duplicate edge {name:?}")]
    DuplicateEdge { name: String },
    #[error("unknown vertex {name:?}")]
    UnknownVertex { name: String },
    #[error("name {name:?} is empty or contains '.'")]
    BadName { name: String },
    #[error("graph has a directed cycle: {}", cycle.join(" "))]
    Cyclic { cycle: Vec<String> },
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Category(#[from] CatError),
}

#[derive(Clone, Debug)]
pub struct DirectedGraph {
    vertices: Vec<String>,
    vertex_index: HashMap<String, u32>,
    edge_names: Vec<String>,
    edge_source: Vec<u32>,
    edge_target: Vec<u32>,
}

impl DirectedGraph {
    /// Build a graph from vertex names and `(name, source, target)` edges.
    /// Parallel edges and loops are representable (loops just make every
    /// path construction fail later).  Names must be nonempty and must not
    /// contain `'.'`, which is reserved for spelling paths.
    pub fn from_parts(
        vertices: &[&str],
        edges: &[(&str, &str, &str)],
    ) -> Result<DirectedGraph, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::Empty);
        }
        let check_name = |n: &str| {
            if n.is_empty() || n.contains('.') {
                Err(GraphError::BadName {
                    name: n.to_string(),
                })
            } else {
                Ok(())
            }
        };
        let mut vertex_index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            check_name(v)?;
            if vertex_index.insert(v.to_string(), i as u32).is_some() {
                return Err(GraphError::DuplicateVertex {
                    name: v.to_string(),
                });
            }
        }
        let mut edge_names = Vec::new();
        let mut edge_source = Vec::new();
        let mut edge_target = Vec::new();
        let mut seen = HashMap::new();
        for (name, src, tgt) in edges {
            check_name(name)?;
            if seen.insert(name.to_string(), ()).is_some() {
                return Err(GraphError::DuplicateEdge {
                    name: name.to_string(),
                });
            }
            let s = *vertex_index
                .get(*src)
                .ok_or_else(|| GraphError::UnknownVertex {
                    name: src.to_string(),
                })?;
            let t = *vertex_index
                .get(*tgt)
                .ok_or_else(|| GraphError::UnknownVertex {
                    name: tgt.to_string(),
                })?;
            edge_names.push(name.to_string());
            edge_source.push(s);
            edge_target.push(t);
        }
        Ok(DirectedGraph {
            vertices: vertices.iter().map(|v| v.to_string()).collect(),
            vertex_index,
            edge_names,
            edge_source,
            edge_target,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_name(&self, v: u32) -> &str {
        &self.vertices[v as usize]
    }

    pub fn vertex_named(&self, name: &str) -> Option<u32> {
        self.vertex_index.get(name).copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_names.len()
    }

    pub fn edge_name(&self, e: u32) -> &str {
        &self.edge_names[e as usize]
    }

    pub fn edge_source(&self, e: u32) -> u32 {
        self.edge_source[e as usize]
    }

    pub fn edge_target(&self, e: u32) -> u32 {
        self.edge_target[e as usize]
    }

    /// A directed cycle as a walk-ordered edge sequence, if one exists.
    pub fn find_cycle(&self) -> Option<Vec<u32>> {
        fn dfs(
            g: &DirectedGraph,
            u: u32,
            colors: &mut [u8],
            vert_stack: &mut Vec<u32>,
            edge_stack: &mut Vec<u32>,
        ) -> Option<Vec<u32>> {
            colors[u as usize] = 1;
            vert_stack.push(u);
            for e in 0..g.edge_count() as u32 {
                if g.edge_source(e) != u {
                    continue;
                }
                let w = g.edge_target(e);
                match colors[w as usize] {
                    1 => {
                        let pos = vert_stack.iter().position(|&x| x == w).unwrap();
                        let mut cycle = edge_stack[pos..].to_vec();
                        cycle.push(e);
                        return Some(cycle);
                    }
                    0 => {
                        edge_stack.push(e);
                        if let Some(c) = dfs(g, w, colors, vert_stack, edge_stack) {
                            return Some(c);
                        }
                        edge_stack.pop();
                    }
                    _ => {}
                }
            }
            colors[u as usize] = 2;
            vert_stack.pop();
            None
        }
        let mut colors = vec![0u8; self.vertex_count()];
        for v in 0..self.vertex_count() as u32 {
            if colors[v as usize] == 0 {
                if let Some(c) = dfs(self, v, &mut colors, &mut Vec::new(), &mut Vec::new()) {
                    return Some(c);
                }
            }
        }
        None
    }

    fn require_acyclic(&self) -> Result<(), GraphError> {
        match self.find_cycle() {
            Some(cycle) => Err(GraphError::Cyclic {
                cycle: cycle
                    .iter()
                    .map(|&e| self.edge_name(e).to_string())
                    .collect(),
            }),
            None => Ok(()),
        }
    }

    /// Every path of the graph, shortest first, deterministically ordered.
    /// Rejects cyclic graphs, whose path sets are infinite.
    pub fn all_paths(&self) -> Result<Vec<GraphPath>, GraphError> {
        self.require_acyclic()?;
        let mut paths: Vec<GraphPath> = (0..self.vertex_count() as u32)
            .map(GraphPath::empty)
            .collect();
        let mut level_start = 0;
        loop {
            let level_end = paths.len();
            if level_start == level_end {
                break;
            }
            let mut fresh = Vec::new();
            for p in &paths[level_start..level_end] {
                let v = p.target(self);
                for e in 0..self.edge_count() as u32 {
                    if self.edge_source(e) == v {
                        fresh.push(p.extended_by(e));
                    }
                }
            }
            fresh.sort();
            fresh.dedup();
            paths.extend(fresh);
            level_start = level_end;
        }
        Ok(paths)
    }

    /// The path category: objects are vertices, morphisms are paths,
    /// composition is concatenation.
    pub fn path_category(&self) -> Result<FiniteCategory, GraphError> {
        let paths = self.all_paths()?;
        let nonempty: Vec<&GraphPath> = paths.iter().filter(|p| !p.edges.is_empty()).collect();
        let objects: Vec<&str> = self.vertices.iter().map(|v| v.as_str()).collect();
        let arrows: Vec<(String, String, String)> = nonempty
            .iter()
            .map(|p| {
                (
                    p.display(self),
                    self.vertex_name(p.source()).to_string(),
                    self.vertex_name(p.target(self)).to_string(),
                )
            })
            .collect();
        let mut composites: Vec<(String, String, String)> = Vec::new();
        for f in &nonempty {
            for g in &nonempty {
                if f.source() == g.target(self) {
                    let mut edges = f.edges.clone();
                    edges.extend_from_slice(&g.edges);
                    let fg = GraphPath {
                        vertex: g.source(),
                        edges,
                    };
                    composites.push((f.display(self), g.display(self), fg.display(self)));
                }
            }
        }
        let arrow_refs: Vec<(&str, &str, &str)> = arrows
            .iter()
            .map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str()))
            .collect();
        let comp_refs: Vec<(&str, &str, &str)> = composites
            .iter()
            .map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str()))
            .collect();
        Ok(FiniteCategory::from_parts(
            &objects,
            &arrow_refs,
            &comp_refs,
        )?)
    }

    /// The graph inverse semigroup: zero plus all pairs of equal-source
    /// paths `(α, β)`, with the prefix-matching product.  Built directly
    /// from path pairs, independent of the category machinery.
    pub fn inverse_semigroup(&self) -> Result<FiniteInverseSemigroup<GraphPairElem>, GraphError> {
        let paths = self.all_paths()?;
        let ops = GraphPairOps { graph: self };
        let mut elements = vec![GraphPairElem::Zero];
        for a in &paths {
            for b in &paths {
                if a.source() == b.source() {
                    elements.push(ops.pair(a.clone(), b.clone()));
                }
            }
        }
        Ok(semigroup::from_elements(&ops, elements)?)
    }

    /// DOT rendering of the graph itself.
    pub fn to_dot(&self) -> String {
        let escape = |s: &str| s.replace('\\', "\\\\").replace('"', "\\\"");
        let mut out = String::from("digraph graph_ {\n  rankdir=LR;\n");
        for v in &self.vertices {
            out.push_str(&format!("  \"{}\";\n", escape(v)));
        }
        for e in 0..self.edge_count() as u32 {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                escape(self.vertex_name(self.edge_source(e))),
                escape(self.vertex_name(self.edge_target(e))),
                escape(self.edge_name(e)),
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// A path: a source vertex and the edges of the walk from it, stored in
/// composition order (`edges[0]` is walked last).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GraphPath {
    pub vertex: u32,
    pub edges: Vec<u32>,
}

impl GraphPath {
    pub fn empty(vertex: u32) -> GraphPath {
        GraphPath {
            vertex,
            edges: Vec::new(),
        }
    }

    pub fn source(&self) -> u32 {
        self.vertex
    }

    pub fn target(&self, g: &DirectedGraph) -> u32 {
        match self.edges.first() {
            Some(&e) => g.edge_target(e),
            None => self.vertex,
        }
    }

    /// The path continued by one more edge out of its target.
    fn extended_by(&self, e: u32) -> GraphPath {
        let mut edges = vec![e];
        edges.extend_from_slice(&self.edges);
        GraphPath {
            vertex: self.vertex,
            edges,
        }
    }

    pub fn display(&self, g: &DirectedGraph) -> String {
        if self.edges.is_empty() {
            g.vertex_name(self.vertex).to_string()
        } else {
            self.edges
                .iter()
                .map(|&e| g.edge_name(e))
                .collect::<Vec<_>>()
                .join(".")
        }
    }

    /// If `gamma = self∘ε` for some path `ε`, return `ε`.
    fn left_quotient(&self, g: &DirectedGraph, gamma: &GraphPath) -> Option<GraphPath> {
        if gamma.edges.len() >= self.edges.len()
            && gamma.edges[..self.edges.len()] == self.edges[..]
            && gamma.target(g) == self.target(g)
        {
            Some(GraphPath {
                vertex: gamma.vertex,
                edges: gamma.edges[self.edges.len()..].to_vec(),
            })
        } else {
            None
        }
    }

    /// Concatenation `self∘other`; the target of `other` must be the
    /// source of `self`.
    fn after(&self, other: &GraphPath) -> GraphPath {
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        GraphPath {
            vertex: other.vertex,
            edges,
        }
    }
}

/// An element of a graph inverse semigroup.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GraphPairElem {
    Zero,
    Pair {
        alpha: GraphPath,
        beta: GraphPath,
        label: String,
    },
}

impl fmt::Display for GraphPairElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphPairElem::Zero => f.write_str("0"),
            GraphPairElem::Pair { label, .. } => f.write_str(label),
        }
    }
}

/// Product and inverse of path pairs over a fixed graph.
pub struct GraphPairOps<'a> {
    pub graph: &'a DirectedGraph,
}

impl<'a> GraphPairOps<'a> {
    pub fn pair(&self, alpha: GraphPath, beta: GraphPath) -> GraphPairElem {
        debug_assert_eq!(alpha.source(), beta.source());
        let label = format!(
            "({},{})",
            alpha.display(self.graph),
            beta.display(self.graph)
        );
        GraphPairElem::Pair { alpha, beta, label }
    }
}

impl<'a> InverseOps for GraphPairOps<'a> {
    type Elem = GraphPairElem;

    /// `(α,β)(γ,δ)`: if `γ = β∘ε` the product is `(α∘ε, δ)`; if
    /// `β = γ∘ε` it is `(α, δ∘ε)`; otherwise zero.
    fn product(&self, a: &GraphPairElem, b: &GraphPairElem) -> GraphPairElem {
        let (
            GraphPairElem::Pair { alpha, beta, .. },
            GraphPairElem::Pair {
                alpha: gamma,
                beta: delta,
                ..
            },
        ) = (a, b)
        else {
            return GraphPairElem::Zero;
        };
        if let Some(eps) = beta.left_quotient(self.graph, gamma) {
            self.pair(alpha.after(&eps), delta.clone())
        } else if let Some(eps) = gamma.left_quotient(self.graph, beta) {
            self.pair(alpha.clone(), delta.after(&eps))
        } else {
            GraphPairElem::Zero
        }
    }

    fn inverse(&self, a: &GraphPairElem) -> GraphPairElem {
        match a {
            GraphPairElem::Zero => GraphPairElem::Zero,
            GraphPairElem::Pair { alpha, beta, .. } => self.pair(beta.clone(), alpha.clone()),
        }
    }

    fn zero(&self) -> Option<GraphPairElem> {
        Some(GraphPairElem::Zero)
    }
}
