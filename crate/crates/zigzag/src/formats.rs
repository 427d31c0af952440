//! Text formats for the three input kinds, with matching emitters.
//!
//! All three are line oriented and UTF-8; `#` starts a comment that runs
//! to the end of the line, and blank lines are ignored.
//!
//! * `.pbij` — a ground size and named generators:
//!   ```text
//!   ground 11
//!   gen e = 7:7 8:8 9:9 10:10
//!   gen a = 1:7 2:8 3:9
//!   ```
//! * `.cat` — objects, morphisms, and composition entries; composites
//!   involving identities may be omitted, and `id` lines give identities
//!   custom names:
//!   ```text
//!   object U
//!   mor a src=A rng=U
//!   comp a x = c        # means a∘x = c, with src(a) = rng(x)
//!   id U = one_U
//!   ```
//! * `.graph` — vertices and edges:
//!   ```text
//!   vertex u
//!   edge f : u -> v
//!   ```

use std::sync::Arc;

use thiserror::Error;

use crate::cat::{CatError, FiniteCategory};
use crate::graph::{DirectedGraph, GraphError};
use crate::pbij::{GroundSet, PartialBijection, PbijError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: expected {expected}")]
    Malformed { line: usize, expected: &'static str },
    #[error("line {line}: unknown directive {found:?}")]
    UnknownDirective { line: usize, found: String },
    #[error("line {line}: {name:?} was already declared")]
    Duplicate { line: usize, name: String },
    #[error("line {line}: point {point:?} is not in the ground set")]
    UnknownPoint { line: usize, point: String },
    #[error("line {line}: duplicate source point {point:?}")]
    DuplicateSource { line: usize, point: String },
    #[error("the file must start with a `ground N` line")]
    MissingGround,
    #[error("line {line}: {source}")]
    BadMap { line: usize, source: PbijError },
    #[error(transparent)]
    Category(#[from] CatError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A parsed `.pbij` file: the ground set and the named generators, in
/// declaration order.
#[derive(Debug)]
pub struct PbijFile {
    pub ground: Arc<GroundSet>,
    pub generators: Vec<(String, PartialBijection)>,
}

/// Strip the comment, if any, and trim; `None` for lines with no content.
fn content(line: &str) -> Option<&str> {
    let code = line.split('#').next().unwrap_or("").trim();
    (!code.is_empty()).then_some(code)
}

pub fn parse_pbij(text: &str) -> Result<PbijFile, FormatError> {
    let mut ground: Option<Arc<GroundSet>> = None;
    let mut generators: Vec<(String, PartialBijection)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let Some(code) = content(raw) else { continue };
        let tokens: Vec<&str> = code.split_whitespace().collect();
        match tokens[0] {
            "ground" => {
                if ground.is_some() {
                    return Err(FormatError::Duplicate {
                        line,
                        name: "ground".into(),
                    });
                }
                let [_, n] = tokens[..] else {
                    return Err(FormatError::Malformed {
                        line,
                        expected: "`ground N`",
                    });
                };
                let n: u32 = n.parse().map_err(|_| FormatError::Malformed {
                    line,
                    expected: "`ground N` with N a positive integer",
                })?;
                ground = Some(
                    GroundSet::integers(n)
                        .map_err(|source| FormatError::BadMap { line, source })?,
                );
            }
            "gen" => {
                let g = ground.as_ref().ok_or(FormatError::MissingGround)?;
                if tokens.len() < 3 || tokens[2] != "=" {
                    return Err(FormatError::Malformed {
                        line,
                        expected: "`gen NAME = a:b a:b ...`",
                    });
                }
                let name = tokens[1].to_string();
                if generators.iter().any(|(n, _)| *n == name) {
                    return Err(FormatError::Duplicate { line, name });
                }
                let mut pairs: Vec<(u32, u32)> = Vec::new();
                for pair in &tokens[3..] {
                    let Some((src, tgt)) = pair.split_once(':') else {
                        return Err(FormatError::Malformed {
                            line,
                            expected: "point pairs of the form a:b",
                        });
                    };
                    let point = |p: &str| {
                        g.index_of(p).ok_or_else(|| FormatError::UnknownPoint {
                            line,
                            point: p.to_string(),
                        })
                    };
                    let (s, t) = (point(src)?, point(tgt)?);
                    if pairs.iter().any(|&(existing, _)| existing == s) {
                        return Err(FormatError::DuplicateSource {
                            line,
                            point: src.to_string(),
                        });
                    }
                    pairs.push((s, t));
                }
                let map = PartialBijection::from_pairs(g, &pairs)
                    .map_err(|source| FormatError::BadMap { line, source })?;
                generators.push((name, map));
            }
            found => {
                return Err(FormatError::UnknownDirective {
                    line,
                    found: found.to_string(),
                })
            }
        }
    }
    let ground = ground.ok_or(FormatError::MissingGround)?;
    Ok(PbijFile { ground, generators })
}

pub fn emit_pbij(file: &PbijFile) -> String {
    let mut out = format!("ground {}\n", file.ground.len());
    for (name, map) in &file.generators {
        let pairs: Vec<String> = map
            .domain()
            .iter()
            .map(|&p| {
                format!(
                    "{}:{}",
                    file.ground.name(p),
                    file.ground.name(map.apply(p).expect("domain point"))
                )
            })
            .collect();
        out.push_str(format!("gen {} = {}\n", name, pairs.join(" ")).trim_end());
        out.push('\n');
    }
    out
}

pub fn parse_cat(text: &str) -> Result<FiniteCategory, FormatError> {
    let mut objects: Vec<String> = Vec::new();
    let mut identity_names: Vec<(String, String)> = Vec::new();
    let mut arrows: Vec<(String, String, String)> = Vec::new();
    let mut composites: Vec<(String, String, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let Some(code) = content(raw) else { continue };
        let tokens: Vec<&str> = code.split_whitespace().collect();
        match tokens[0] {
            "object" => {
                let [_, name] = tokens[..] else {
                    return Err(FormatError::Malformed {
                        line,
                        expected: "`object NAME`",
                    });
                };
                objects.push(name.to_string());
            }
            "id" => {
                let [_, object, "=", name] = tokens[..] else {
                    return Err(FormatError::Malformed {
                        line,
                        expected: "`id OBJECT = NAME`",
                    });
                };
                identity_names.push((object.to_string(), name.to_string()));
            }
            "mor" => {
                let [_, name, src, rng] = tokens[..] else {
                    return Err(FormatError::Malformed {
                        line,
                        expected: "`mor NAME src=OBJ rng=OBJ`",
                    });
                };
                let (Some(src), Some(rng)) = (src.strip_prefix("src="), rng.strip_prefix("rng="))
                else {
                    return Err(FormatError::Malformed {
                        line,
                        expected: "`mor NAME src=OBJ rng=OBJ`",
                    });
                };
                arrows.push((name.to_string(), src.to_string(), rng.to_string()));
            }
            "comp" => {
                let [_, f, g, "=", h] = tokens[..] else {
                    return Err(FormatError::Malformed {
                        line,
                        expected: "`comp F G = H`",
                    });
                };
                composites.push((f.to_string(), g.to_string(), h.to_string()));
            }
            found => {
                return Err(FormatError::UnknownDirective {
                    line,
                    found: found.to_string(),
                })
            }
        }
    }
    // Custom identity names may appear inside comp lines; translate them
    // to the auto-generated names the constructor knows.
    let resolve = |name: &str| -> String {
        identity_names
            .iter()
            .find(|(_, custom)| custom == name)
            .map(|(object, _)| format!("id_{object}"))
            .unwrap_or_else(|| name.to_string())
    };
    let object_refs: Vec<&str> = objects.iter().map(String::as_str).collect();
    let arrow_refs: Vec<(&str, &str, &str)> = arrows
        .iter()
        .map(|(n, s, t)| (n.as_str(), s.as_str(), t.as_str()))
        .collect();
    let resolved: Vec<(String, String, String)> = composites
        .iter()
        .map(|(f, g, h)| (resolve(f), resolve(g), resolve(h)))
        .collect();
    let comp_refs: Vec<(&str, &str, &str)> = resolved
        .iter()
        .map(|(f, g, h)| (f.as_str(), g.as_str(), h.as_str()))
        .collect();
    let mut cat = FiniteCategory::from_parts(&object_refs, &arrow_refs, &comp_refs)?;
    for (object, name) in &identity_names {
        cat.rename_morphism(&format!("id_{object}"), name)?;
    }
    Ok(cat)
}

pub fn emit_cat(cat: &FiniteCategory) -> String {
    let mut out = String::new();
    for o in 0..cat.object_count() as u32 {
        out.push_str(&format!("object {}\n", cat.object_name(o)));
    }
    for o in 0..cat.object_count() as u32 {
        let name = cat.morphism_name(cat.identity(o));
        if name != format!("id_{}", cat.object_name(o)) {
            out.push_str(&format!("id {} = {}\n", cat.object_name(o), name));
        }
    }
    for m in 0..cat.morphism_count() as u32 {
        if !cat.is_identity(m) {
            out.push_str(&format!(
                "mor {} src={} rng={}\n",
                cat.morphism_name(m),
                cat.object_name(cat.source(m)),
                cat.object_name(cat.target(m)),
            ));
        }
    }
    for f in 0..cat.morphism_count() as u32 {
        for g in 0..cat.morphism_count() as u32 {
            if cat.is_identity(f) || cat.is_identity(g) {
                continue;
            }
            if let Some(h) = cat.compose(f, g) {
                out.push_str(&format!(
                    "comp {} {} = {}\n",
                    cat.morphism_name(f),
                    cat.morphism_name(g),
                    cat.morphism_name(h),
                ));
            }
        }
    }
    out
}

pub fn parse_graph(text: &str) -> Result<DirectedGraph, FormatError> {
    let mut vertices: Vec<String> = Vec::new();
    let mut edges: Vec<(String, String, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let Some(code) = content(raw) else { continue };
        let tokens: Vec<&str> = code.split_whitespace().collect();
        match tokens[0] {
            "vertex" => {
                let [_, name] = tokens[..] else {
                    return Err(FormatError::Malformed {
                        line,
                        expected: "`vertex NAME`",
                    });
                };
                vertices.push(name.to_string());
            }
            "edge" => {
                let [_, name, ":", src, "->", rng] = tokens[..] else {
                    return Err(FormatError::Malformed {
                        line,
                        expected: "`edge NAME : SRC -> RNG`",
                    });
                };
                edges.push((name.to_string(), src.to_string(), rng.to_string()));
            }
            found => {
                return Err(FormatError::UnknownDirective {
                    line,
                    found: found.to_string(),
                })
            }
        }
    }
    let vertex_refs: Vec<&str> = vertices.iter().map(String::as_str).collect();
    let edge_refs: Vec<(&str, &str, &str)> = edges
        .iter()
        .map(|(n, s, t)| (n.as_str(), s.as_str(), t.as_str()))
        .collect();
    Ok(DirectedGraph::from_parts(&vertex_refs, &edge_refs)?)
}

pub fn emit_graph(g: &DirectedGraph) -> String {
    let mut out = String::new();
    for v in 0..g.vertex_count() as u32 {
        out.push_str(&format!("vertex {}\n", g.vertex_name(v)));
    }
    for e in 0..g.edge_count() as u32 {
        out.push_str(&format!(
            "edge {} : {} -> {}\n",
            g.edge_name(e),
            g.vertex_name(g.edge_source(e)),
            g.vertex_name(g.edge_target(e)),
        ));
    }
    out
}
