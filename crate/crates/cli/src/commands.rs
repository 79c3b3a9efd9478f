//! Subcommand implementations. Each returns the process exit status.

use std::fs;
use std::io::Write;
use std::path::Path;

use serde::Serialize;
use serde_json::Value;
use stringcone::degeneration::{degeneration_certificate, infer_cone, CertificateOptions};
use stringcone::pathcrystal::CrystalGraph;
use stringcone::polyhedra::{format_vectors, lattice_points_in_section};
use stringcone::polyhedra::linalg::to_big;
use stringcone::{TypeLabel, WeylWord};

use crate::config::{RunConfig, SubcommandKind};
use crate::error::{exit, CliError};
use crate::verify;

pub fn run(kind: SubcommandKind, config: &RunConfig) -> Result<i32, CliError> {
    match kind {
        SubcommandKind::Crystal => crystal(config),
        SubcommandKind::Polytope => polytope(config),
        SubcommandKind::Cone => cone(config),
        SubcommandKind::Degenerate => degenerate(config),
        SubcommandKind::Verify => {
            let report = verify::run_suite(config.timings);
            emit(config.output.as_deref(), &to_json(&report))?;
            Ok(if report.passing { exit::OK } else { exit::CHECK_FAILED })
        }
    }
}

/// Runs `f` on a pool with the configured thread count.
pub fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    if threads == 0 {
        return f();
    }
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool").install(f)
}

/// Pretty JSON with arrays of scalars kept on one line. Key order follows the struct.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("report serializes");
    let mut out = String::new();
    write_value(&mut out, &value, 0);
    out.push('\n');
    out
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) if items.iter().all(is_scalar) => {
            let parts: Vec<String> = items.iter().map(|x| x.to_string()).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (k, x) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(out, x, indent + 1);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (k, (key, x)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                write_value(out, x, indent + 1);
                out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn crystal(config: &RunConfig) -> Result<i32, CliError> {
    let datum = config.datum()?;
    let lambda = config.lambda.as_ref().expect("validated");
    let graph = CrystalGraph::enumerate(&datum, lambda, config.node_cap).map_err(|e| e.at_stage("crystal"))?;
    emit(config.output.as_deref(), &graph.dump())?;
    Ok(exit::OK)
}

/// Section of the certified cone over `lambda`: its inequalities `c + <u, psi> >= 0`,
/// written as `(c, u)` rows, followed by its integral points.
fn polytope(config: &RunConfig) -> Result<i32, CliError> {
    let datum = config.datum()?;
    let word = config.word(&datum);
    let lambda = config.lambda.as_ref().expect("validated");
    let top = lambda.0.iter().copied().max().unwrap_or(0);
    let inferred = infer_cone(&datum, &word, config.level_bound, top, config.node_cap).map_err(|e| e.at_stage("cone"))?;
    let rank = datum.rank();
    let mut rows: Vec<_> = inferred
        .cone
        .facets_i64()?
        .into_iter()
        .filter(|u| u[rank..].iter().any(|&x| x != 0))
        .map(|u| {
            let c: i64 = u[..rank].iter().zip(&lambda.0).map(|(a, b)| a * b).sum();
            let mut row = vec![c];
            row.extend_from_slice(&u[rank..]);
            to_big(&row)
        })
        .collect();
    rows.sort();
    rows.dedup();
    let points = lattice_points_in_section(&inferred.cone, &lambda.0).map_err(|e| e.at_stage("cone"))?;
    let mut text = format_vectors(word.len() + 1, &rows);
    text.push_str(&format!("points {}\n", points.len()));
    for p in &points {
        let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
        text.push_str(&parts.join(" "));
        text.push('\n');
    }
    emit(config.output.as_deref(), &text)?;
    Ok(exit::OK)
}

#[derive(Serialize)]
struct ConeDocument<'a> {
    #[serde(rename = "type")]
    type_label: TypeLabel,
    rank: usize,
    word: &'a WeylWord,
    hull_level: i64,
    certified_level: i64,
    rays: Vec<Vec<i64>>,
    facets: Vec<Vec<i64>>,
}

/// Writes the H-representation to `--out` (stdout without it) and the JSON next to it as `<out>.json`.
fn cone(config: &RunConfig) -> Result<i32, CliError> {
    let datum = config.datum()?;
    let word = config.word(&datum);
    let inferred = infer_cone(&datum, &word, config.level_bound, 0, config.node_cap).map_err(|e| e.at_stage("cone"))?;
    let doc = ConeDocument {
        type_label: datum.type_label,
        rank: datum.rank(),
        word: &word,
        hull_level: inferred.hull_level,
        certified_level: inferred.certified_level,
        rays: inferred.cone.rays_i64()?,
        facets: inferred.cone.facets_i64()?,
    };
    let hrep = inferred.cone.to_hrep_text();
    match &config.output {
        Some(p) => {
            fs::write(p, &hrep)?;
            let mut json_path = p.clone().into_os_string();
            json_path.push(".json");
            fs::write(json_path, to_json(&doc))?;
        }
        None => emit(None, &hrep)?,
    }
    Ok(exit::OK)
}

fn degenerate(config: &RunConfig) -> Result<i32, CliError> {
    let datum = config.datum()?;
    let word = config.word(&datum);
    let options = CertificateOptions {
        level_bound: config.level_bound,
        check_level: 0,
        cap: config.node_cap,
        record_timings: config.timings,
    };
    let report = degeneration_certificate(&datum, &word, config.demazure_word.as_ref(), &options)?;
    emit(config.output.as_deref(), &to_json(&report))?;
    if !report.passing() {
        eprintln!("failed checks: {}", report.failed_checks().join(", "));
        return Ok(exit::CHECK_FAILED);
    }
    Ok(exit::OK)
}
