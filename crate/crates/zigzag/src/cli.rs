//! Command implementations behind the `zigzag` binary.
//!
//! Each command reads one input file, runs a construction or a batch of
//! checks, and renders either a human-readable text summary or a JSON run
//! report (`"schema": 1`).  Emission flags (`--emit`, `--dot`) switch the
//! output to a raw artifact — a `.cat` file, a `.pbij` file, or DOT.
//!
//! Exit codes are a stable contract: 0 success, 1 property failure,
//! 2 parse or usage error, 3 precondition or resource error.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::formats::{self, FormatError, PbijFile};
use crate::morita;
use crate::paths::{self, PathError};
use crate::pbij::{PartialBijection, PbijOps};
use crate::semigroup::{
    self, EggboxDiagram, FiniteInverseSemigroup, GenerateOptions, SemigroupError,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY_FAILURE: i32 = 1;
pub const EXIT_PARSE_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: FormatError },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => EXIT_PRECONDITION,
            CliError::Parse { .. } => EXIT_PARSE_USAGE,
            CliError::Usage(_) => EXIT_PARSE_USAGE,
            CliError::Precondition(_) => EXIT_PRECONDITION,
        }
    }
}

impl From<SemigroupError> for CliError {
    fn from(e: SemigroupError) -> CliError {
        CliError::Precondition(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

/// One executed command: what to print and how to exit.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome {
            stdout,
            exit_code: EXIT_OK,
        }
    }
}

#[derive(Debug, Clone)]
pub enum CliCommand {
    Gen { file: PathBuf },
    Eggbox { file: PathBuf, dot: bool },
    Check { file: PathBuf, props: Vec<String> },
    Pathcat { file: PathBuf, emit: Option<String> },
    Zm { file: PathBuf },
    Theta { file: PathBuf },
    Morita { file: PathBuf, emit: Option<String> },
    Graphis { file: PathBuf, emit: Option<String> },
}

pub fn run(cmd: &CliCommand, format: OutputFormat) -> Result<Outcome, CliError> {
    match cmd {
        CliCommand::Gen { file } => cmd_gen(file, format),
        CliCommand::Eggbox { file, dot } => cmd_eggbox(file, *dot),
        CliCommand::Check { file, props } => cmd_check(file, props, format),
        CliCommand::Pathcat { file, emit } => cmd_pathcat(file, emit.as_deref(), format),
        CliCommand::Zm { file } => cmd_zm(file, format),
        CliCommand::Theta { file } => cmd_theta(file, format),
        CliCommand::Morita { file, emit } => cmd_morita(file, emit.as_deref(), format),
        CliCommand::Graphis { file, emit } => cmd_graphis(file, emit.as_deref(), format),
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn input_digest(text: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(text.as_bytes());
    format!("{:x}", hasher.finalize())
}

/// Assemble the JSON run report shared by every command.
fn report(
    command: &str,
    path: &Path,
    digest: &str,
    summary: Value,
    verdicts: Option<Value>,
    started: Instant,
) -> Value {
    let mut out = json!({
        "schema": 1,
        "command": command,
        "input": path.display().to_string(),
        "input_digest": digest,
        "summary": summary,
        "total_ms": started.elapsed().as_millis() as u64,
    });
    if let Some(v) = verdicts {
        out["verdicts"] = v;
    }
    out
}

fn load_closure(
    path: &Path,
) -> Result<(String, PbijFile, FiniteInverseSemigroup<PartialBijection>), CliError> {
    let text = read_input(path)?;
    let parsed = formats::parse_pbij(&text).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })?;
    let ops = PbijOps::new(&parsed.ground);
    let generators: Vec<PartialBijection> =
        parsed.generators.iter().map(|(_, m)| m.clone()).collect();
    let sgp = semigroup::generate(&ops, &generators, &GenerateOptions::default())?;
    Ok((input_digest(&text), parsed, sgp))
}

fn cmd_gen(path: &Path, format: OutputFormat) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let (digest, parsed, sgp) = load_closure(path)?;
    let summary = json!({
        "order": sgp.order(),
        "generators": parsed.generators.len(),
        "idempotents": sgp.idempotents().len(),
        "nonzero_idempotents": sgp.nonzero_idempotents().len(),
        "maximal_idempotents": sgp.maximal_idempotents().len(),
        "has_zero": sgp.zero().is_some(),
    });
    let stdout = match format {
        OutputFormat::Json => pretty(report("gen", path, &digest, summary, None, started)),
        OutputFormat::Text => format!(
            "order {}\ngenerators {}\nidempotents {} ({} nonzero, {} maximal)\n",
            sgp.order(),
            parsed.generators.len(),
            sgp.idempotents().len(),
            sgp.nonzero_idempotents().len(),
            sgp.maximal_idempotents().len(),
        ),
    };
    Ok(Outcome::ok(stdout))
}

fn cmd_eggbox(path: &Path, dot: bool) -> Result<Outcome, CliError> {
    let (_, _, sgp) = load_closure(path)?;
    let diagram = EggboxDiagram::build(&sgp);
    let stdout = if dot {
        diagram.render_dot(&sgp)
    } else {
        diagram.render_text(&sgp)
    };
    Ok(Outcome::ok(stdout))
}

const ALL_PROPS: [&str; 10] = [
    "z1",
    "z2",
    "z3",
    "p1",
    "p2",
    "p3",
    "p4",
    "proper",
    "combinatorial",
    "0eu",
];

/// One verdict: pass/fail with an optional witness, or an error when the
/// property is not even well posed on this input (e.g. no zero).
enum Verdict {
    Pass,
    Fail(Option<String>),
    Error(String),
}

fn check_one(
    sgp: &FiniteInverseSemigroup<PartialBijection>,
    prop: &str,
) -> Result<Verdict, CliError> {
    let name = |i: u32| sgp.name(i);
    let class = |c: &[u32]| {
        let names: Vec<String> = c.iter().map(|&i| name(i)).collect();
        format!("{{{}}}", names.join(", "))
    };
    Ok(match prop {
        "z1" => match paths::check_z1(sgp) {
            Ok(true) => Verdict::Pass,
            Ok(false) => {
                let w = sgp.z1_witness().expect("failing Z1 has a witness");
                Verdict::Fail(Some(format!(
                    "idempotent {} has {} maximal idempotents above it",
                    name(w.idempotent),
                    w.maximal_above.len(),
                )))
            }
            Err(e) => Verdict::Error(e.to_string()),
        },
        "z2" => match paths::check_z2(sgp) {
            Ok(true) => Verdict::Pass,
            Ok(false) => {
                let missed = paths::z2_uncovered(sgp);
                Verdict::Fail(Some(format!("paths do not generate {}", class(&missed))))
            }
            Err(e) => Verdict::Error(e.to_string()),
        },
        "z3" => match paths::check_z3(sgp) {
            Ok(true) => Verdict::Pass,
            Ok(false) => {
                let classes = paths::z3_merge_classes(sgp);
                let rendered: Vec<String> = classes.iter().map(|c| class(c)).collect();
                Verdict::Fail(Some(format!(
                    "elements agreeing on all domain paths: {}",
                    rendered.join(" ")
                )))
            }
            Err(e) => Verdict::Error(e.to_string()),
        },
        "p1" => match sgp.ambiguous_pair() {
            None => Verdict::Pass,
            Some((e, f)) => Verdict::Fail(Some(format!(
                "{} and {} have a nonzero product but are incomparable",
                name(e),
                name(f),
            ))),
        },
        // Finitely many idempotents above each — automatic here.
        "p2" => Verdict::Pass,
        "p3" => {
            if sgp.admits_unique_maximal_idempotents() {
                Verdict::Pass
            } else {
                let w = sgp.z1_witness().expect("failing P3 has a witness");
                Verdict::Fail(Some(format!(
                    "idempotent {} has {} maximal idempotents above it",
                    name(w.idempotent),
                    w.maximal_above.len(),
                )))
            }
        }
        "p4" => match sgp.dclass_maximal_defect() {
            None => Verdict::Pass,
            Some(defect) => Verdict::Fail(Some(describe_proper_failure(sgp, &defect))),
        },
        "proper" => match sgp.proper_defect() {
            None => Verdict::Pass,
            Some(defect) => Verdict::Fail(Some(describe_proper_failure(sgp, &defect))),
        },
        "combinatorial" => match sgp.fat_h_class() {
            None => Verdict::Pass,
            Some((a, b)) => Verdict::Fail(Some(format!(
                "{} and {} share an H-class",
                name(a),
                name(b),
            ))),
        },
        "0eu" => match sgp.zero_e_unitary_defect() {
            Ok(None) => Verdict::Pass,
            Ok(Some((e, s))) => Verdict::Fail(Some(format!(
                "idempotent {} lies below the non-idempotent {}",
                name(e),
                name(s),
            ))),
            Err(e) => Verdict::Error(e.to_string()),
        },
        unknown => {
            return Err(CliError::Usage(format!(
                "unknown property {unknown:?}; choose from {}",
                ALL_PROPS.join(", ")
            )))
        }
    })
}

fn describe_proper_failure(
    sgp: &FiniteInverseSemigroup<PartialBijection>,
    defect: &semigroup::ProperFailure,
) -> String {
    use semigroup::ProperFailure::*;
    match defect {
        Ambiguous { e, f } => format!(
            "{} and {} have a nonzero product but are incomparable",
            sgp.name(*e),
            sgp.name(*f),
        ),
        NoUniqueMaximal(w) => format!(
            "idempotent {} has {} maximal idempotents above it",
            sgp.name(w.idempotent),
            w.maximal_above.len(),
        ),
        DClassWithoutMaximal { d_class } => {
            format!("D-class {d_class} contains no maximal idempotent")
        }
        DClassWithTwoMaximal {
            d_class,
            first,
            second,
        } => format!(
            "D-class {d_class} contains two maximal idempotents {} and {}",
            sgp.name(*first),
            sgp.name(*second),
        ),
    }
}

fn cmd_check(path: &Path, props: &[String], format: OutputFormat) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let (digest, _, sgp) = load_closure(path)?;
    let requested: Vec<String> = if props.is_empty() {
        ALL_PROPS.iter().map(|p| p.to_string()).collect()
    } else {
        let mut seen = Vec::new();
        for p in props {
            let p = p.trim().to_lowercase();
            if !seen.contains(&p) {
                seen.push(p);
            }
        }
        seen
    };
    let mut lines = String::new();
    let mut verdicts = serde_json::Map::new();
    let mut any_fail = false;
    let mut any_error = false;
    for prop in &requested {
        let verdict = check_one(&sgp, prop)?;
        let (status, detail) = match verdict {
            Verdict::Pass => ("pass", None),
            Verdict::Fail(witness) => {
                any_fail = true;
                ("fail", witness)
            }
            Verdict::Error(message) => {
                any_error = true;
                ("error", Some(message))
            }
        };
        match &detail {
            Some(d) => lines.push_str(&format!("{prop}: {status}  {d}\n")),
            None => lines.push_str(&format!("{prop}: {status}\n")),
        }
        let mut entry = json!({ "status": status });
        if let Some(d) = detail {
            entry["witness"] = Value::String(d);
        }
        verdicts.insert(prop.clone(), entry);
    }
    let exit_code = if any_error {
        EXIT_PRECONDITION
    } else if any_fail {
        EXIT_PROPERTY_FAILURE
    } else {
        EXIT_OK
    };
    let stdout = match format {
        OutputFormat::Json => pretty(report(
            "check",
            path,
            &digest,
            json!({ "order": sgp.order() }),
            Some(Value::Object(verdicts)),
            started,
        )),
        OutputFormat::Text => lines,
    };
    Ok(Outcome { stdout, exit_code })
}

fn cmd_pathcat(path: &Path, emit: Option<&str>, format: OutputFormat) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let (digest, _, sgp) = load_closure(path)?;
    let pc = paths::path_category(&sgp).map_err(path_error)?;
    match emit {
        Some("cat") => return Ok(Outcome::ok(formats::emit_cat(&pc.category))),
        Some("dot") => return Ok(Outcome::ok(pc.category.to_dot())),
        Some(other) => {
            return Err(CliError::Usage(format!(
                "unknown emission {other:?}; choose cat or dot"
            )))
        }
        None => {}
    }
    let summary = json!({
        "objects": pc.category.object_count(),
        "morphisms": pc.category.morphism_count(),
    });
    let stdout = match format {
        OutputFormat::Json => pretty(report("pathcat", path, &digest, summary, None, started)),
        OutputFormat::Text => format!(
            "objects {}\nmorphisms {}\n",
            pc.category.object_count(),
            pc.category.morphism_count(),
        ),
    };
    Ok(Outcome::ok(stdout))
}

fn cmd_zm(path: &Path, format: OutputFormat) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let text = read_input(path)?;
    let cat = formats::parse_cat(&text).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })?;
    let zm = cat
        .zigzag_semigroup()
        .map_err(|e| CliError::Precondition(e.to_string()))?;
    let elements: Vec<String> = (0..zm.semigroup.order() as u32)
        .map(|i| zm.semigroup.name(i))
        .collect();
    let summary = json!({
        "order": zm.semigroup.order(),
        "idempotents": zm.semigroup.idempotents().len(),
        "elements": elements,
    });
    let stdout = match format {
        OutputFormat::Json => pretty(report(
            "zm",
            path,
            &input_digest(&text),
            summary,
            None,
            started,
        )),
        OutputFormat::Text => {
            let mut out = format!("order {}\n", zm.semigroup.order());
            for e in &elements {
                out.push_str(e);
                out.push('\n');
            }
            out
        }
    };
    Ok(Outcome::ok(stdout))
}

fn path_error(e: PathError) -> CliError {
    match e {
        PathError::AxiomFailed { axiom } => CliError::Precondition(format!("{axiom} fails")),
        other => CliError::Precondition(other.to_string()),
    }
}

fn cmd_theta(path: &Path, format: OutputFormat) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let (digest, _, sgp) = load_closure(path)?;
    match paths::theta_check(&sgp) {
        Ok(()) => {
            let summary = json!({
                "order": sgp.order(),
                "isomorphic": true,
            });
            let stdout = match format {
                OutputFormat::Json => pretty(report(
                    "theta",
                    path,
                    &digest,
                    summary,
                    Some(json!({ "theta": { "status": "pass" } })),
                    started,
                )),
                OutputFormat::Text => format!(
                    "theta: verified isomorphism onto the zigzag maps (order {})\n",
                    sgp.order()
                ),
            };
            Ok(Outcome::ok(stdout))
        }
        Err(PathError::NotAnIsomorphism(witness)) => {
            let stdout = match format {
                OutputFormat::Json => pretty(report(
                    "theta",
                    path,
                    &digest,
                    json!({ "order": sgp.order(), "isomorphic": false }),
                    Some(json!({
                        "theta": { "status": "fail", "witness": witness.to_string() }
                    })),
                    started,
                )),
                OutputFormat::Text => format!("theta: fail  {witness}\n"),
            };
            Ok(Outcome {
                stdout,
                exit_code: EXIT_PROPERTY_FAILURE,
            })
        }
        Err(other) => Err(path_error(other)),
    }
}

fn cmd_morita(path: &Path, emit: Option<&str>, format: OutputFormat) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let (digest, _, base) = load_closure(path)?;
    let im = morita::im_construction(&base)?;
    match emit {
        Some("pbij") => {
            let (ground, elements) = im.to_partial_bijections()?;
            let generators: Vec<(String, PartialBijection)> = elements
                .into_iter()
                .enumerate()
                .map(|(i, m)| (format!("g{i}"), m))
                .collect();
            return Ok(Outcome::ok(formats::emit_pbij(&PbijFile {
                ground,
                generators,
            })));
        }
        Some(other) => {
            return Err(CliError::Usage(format!(
                "unknown emission {other:?}; choose pbij"
            )))
        }
        None => {}
    }
    let summary = json!({
        "base_order": base.order(),
        "order": im.order(),
        "triples": im.order() - 1,
        "maximal_idempotents": im.maximal_idempotents().len(),
    });
    let stdout = match format {
        OutputFormat::Json => pretty(report("morita", path, &digest, summary, None, started)),
        OutputFormat::Text => format!(
            "base order {}\norder {} ({} triples + zero)\n",
            base.order(),
            im.order(),
            im.order() - 1,
        ),
    };
    Ok(Outcome::ok(stdout))
}

fn cmd_graphis(path: &Path, emit: Option<&str>, format: OutputFormat) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let text = read_input(path)?;
    let graph = formats::parse_graph(&text).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })?;
    match emit {
        Some("dot") => return Ok(Outcome::ok(graph.to_dot())),
        Some(other) => {
            return Err(CliError::Usage(format!(
                "unknown emission {other:?}; choose dot"
            )))
        }
        None => {}
    }
    let paths = graph
        .all_paths()
        .map_err(|e| CliError::Precondition(e.to_string()))?;
    let sgp = graph
        .inverse_semigroup()
        .map_err(|e| CliError::Precondition(e.to_string()))?;
    let summary = json!({
        "vertices": graph.vertex_count(),
        "edges": graph.edge_count(),
        "paths": paths.len(),
        "order": sgp.order(),
        "idempotents": sgp.idempotents().len(),
    });
    let stdout = match format {
        OutputFormat::Json => pretty(report(
            "graphis",
            path,
            &input_digest(&text),
            summary,
            None,
            started,
        )),
        OutputFormat::Text => format!(
            "vertices {}\nedges {}\npaths {}\norder {}\n",
            graph.vertex_count(),
            graph.edge_count(),
            paths.len(),
            sgp.order(),
        ),
    };
    Ok(Outcome::ok(stdout))
}

fn pretty(v: Value) -> String {
    let mut out = serde_json::to_string_pretty(&v).expect("reports serialize");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write_temp(name: &str, contents: &str) -> PathBuf {
        let dir = std::env::temp_dir().join("zigzag-cli-tests");
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join(name);
        let mut f = fs::File::create(&path).unwrap();
        f.write_all(contents.as_bytes()).unwrap();
        path
    }

    const I2: &str = "ground 2\ngen s = 1:2 2:1\ngen e = 1:1\n";

    #[test]
    fn gen_reports_the_closure_summary() {
        let path = write_temp("i2.pbij", I2);
        let out = run(&CliCommand::Gen { file: path }, OutputFormat::Text).unwrap();
        assert_eq!(out.exit_code, EXIT_OK);
        assert!(out.stdout.contains("order 7"));
        assert!(out.stdout.contains("generators 2"));
    }

    #[test]
    fn gen_emits_a_versioned_json_report() {
        let path = write_temp("i2-json.pbij", I2);
        let out = run(&CliCommand::Gen { file: path }, OutputFormat::Json).unwrap();
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["summary"]["order"], 7);
        assert_eq!(v["input_digest"].as_str().unwrap().len(), 64);
    }

    #[test]
    fn check_flags_unknown_properties_as_usage_errors() {
        let path = write_temp("i2-props.pbij", I2);
        let err = run(
            &CliCommand::Check {
                file: path,
                props: vec!["z9".into()],
            },
            OutputFormat::Text,
        )
        .unwrap_err();
        assert_eq!(err.exit_code(), EXIT_PARSE_USAGE);
    }

    #[test]
    fn check_exit_code_reflects_failures() {
        let path = write_temp("i2-check.pbij", I2);
        let out = run(
            &CliCommand::Check {
                file: path.clone(),
                props: vec!["z1".into(), "combinatorial".into()],
            },
            OutputFormat::Text,
        )
        .unwrap();
        // I₂ satisfies Z1 but is not combinatorial (its group H-classes).
        assert_eq!(out.exit_code, EXIT_PROPERTY_FAILURE);
        assert!(out.stdout.contains("z1: pass"));
        assert!(out.stdout.contains("combinatorial: fail"));
    }

    #[test]
    fn parse_errors_exit_with_code_two() {
        let path = write_temp("bad.pbij", "ground 2\ngen a = 1:1 1:2\n");
        let err = run(&CliCommand::Gen { file: path }, OutputFormat::Text).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_PARSE_USAGE);
        assert!(err.to_string().contains("duplicate source"));
    }

    #[test]
    fn missing_files_are_resource_errors() {
        let err = run(
            &CliCommand::Gen {
                file: PathBuf::from("/nonexistent/x.pbij"),
            },
            OutputFormat::Text,
        )
        .unwrap_err();
        assert_eq!(err.exit_code(), EXIT_PRECONDITION);
    }

    #[test]
    fn theta_succeeds_on_a_zigzag_semigroup() {
        let path = write_temp("one-arrow.pbij", "ground 2\ngen t = 1:2\n");
        let out = run(&CliCommand::Theta { file: path }, OutputFormat::Text).unwrap();
        assert_eq!(out.exit_code, EXIT_OK);
        assert!(out.stdout.contains("verified isomorphism"));
    }

    #[test]
    fn cyclic_graphs_are_precondition_failures() {
        let path = write_temp("loop.graph", "vertex v\nedge e : v -> v\n");
        let err = run(
            &CliCommand::Graphis {
                file: path,
                emit: None,
            },
            OutputFormat::Text,
        )
        .unwrap_err();
        assert_eq!(err.exit_code(), EXIT_PRECONDITION);
        assert!(err.to_string().contains('e'));
    }
}
