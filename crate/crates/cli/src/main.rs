//! `omx`: build affine oriented matroids from arrangement or cocircuit
//! files, run the ideal / resolution / Cohen-Macaulay / general-position /
//! manifold pipelines, and emit deterministic JSON reports.
//!
//! Exit codes: 0 = success, 1 = a mathematical check failed (the witness is
//! in `findings`), 2 = input or usage error.

use anyhow::{anyhow, Context, Result};
use clap::{Parser, ValueEnum};
use omx_core::linalg::Field;
use omx_core::nps::{self, FIELD_BATTERY};
use omx_core::om::{AffineOrientedMatroid, OmFile};
use omx_core::realize::Arrangement;
use omx_core::report::build_report;
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Verb {
    /// Build the oriented matroid of an arrangement and emit its cocircuit file.
    BuildOm,
    /// Check the covector axioms of the input.
    CheckAxioms,
    /// Print the matroid ideal and its specialization.
    Ideal,
    /// Print the Betti numbers of the cellular resolution with
    /// faithfulness and acyclicity verdicts.
    Resolution,
    /// Cohen-Macaulay verdicts over the field battery, by both routes.
    Cm,
    /// The five-condition general-position report.
    Genpos,
    /// Homology-manifold and homology-sphere diagnostics.
    Manifold,
    /// The full report.
    Report,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FieldChoice {
    Q,
    F2,
    F3,
    F5,
    All,
}

impl FieldChoice {
    fn fields(self) -> Vec<Field> {
        match self {
            FieldChoice::Q => vec![Field::Q],
            FieldChoice::F2 => vec![Field::Fp(2)],
            FieldChoice::F3 => vec![Field::Fp(3)],
            FieldChoice::F5 => vec![Field::Fp(5)],
            FieldChoice::All => FIELD_BATTERY.to_vec(),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "omx", version, about = "Affine oriented matroid workbench")]
struct Cli {
    #[arg(value_enum)]
    verb: Verb,
    /// Arrangement JSON ({name, dimension, vectors, g}) or OM JSON
    /// ({elements, g, cocircuits}).
    input: PathBuf,
    /// Write the JSON output here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Coefficient field(s) for Cohen-Macaulay checks.
    #[arg(long, value_enum, default_value = "all")]
    field: FieldChoice,
    /// Accept inputs whose distinguished element g is a loop.
    #[arg(long)]
    allow_loop_g: bool,
    /// Seed for randomized batteries (current verbs are deterministic).
    #[arg(long, default_value = "0")]
    seed: u64,
    /// Worker threads for the cohomology sweeps (0 = all cores).
    #[arg(long, default_value = "0")]
    parallel: usize,
}

/// Parsed input: the oriented matroid, the affine structure when `g` is
/// named, and provenance.
struct Input {
    om: omx_core::OrientedMatroid,
    affine: Option<AffineOrientedMatroid>,
    name: String,
    kind: &'static str,
}

impl Input {
    fn affine(&self) -> Result<&AffineOrientedMatroid> {
        self.affine
            .as_ref()
            .ok_or_else(|| anyhow!("this verb needs a distinguished element g in the input"))
    }
}

fn load_input(cli: &Cli) -> Result<Input> {
    let text = std::fs::read_to_string(&cli.input)
        .with_context(|| format!("cannot read {}", cli.input.display()))?;
    let value: Value =
        serde_json::from_str(&text).with_context(|| "input is not valid JSON")?;
    let default_name = cli
        .input
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "input".to_string());
    if value.get("vectors").is_some() {
        let arr = Arrangement::from_json(&text).context("invalid arrangement file")?;
        let name = if arr.name.is_empty() { default_name } else { arr.name.clone() };
        let aom = arr.realize(cli.allow_loop_g).context("realization failed")?;
        Ok(Input { om: aom.om().clone(), affine: Some(aom), name, kind: "arrangement" })
    } else if value.get("cocircuits").is_some() {
        let file = OmFile::from_json(&text).context("invalid OM file")?;
        let (om, affine) =
            file.build(cli.allow_loop_g).context("invalid cocircuit data")?;
        Ok(Input { om, affine, name: default_name, kind: "om" })
    } else {
        Err(anyhow!("input is neither an arrangement file (vectors) nor an OM file (cocircuits)"))
    }
}

fn emit(cli: &Cli, value: &Value) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    match &cli.output {
        None => print!("{text}"),
        Some(path) => std::fs::write(path, text)
            .with_context(|| format!("cannot write {}", path.display()))?,
    }
    Ok(())
}

/// Run a verb; `Ok(true)` means every asserted property held.
fn run(cli: &Cli) -> Result<bool> {
    let input = load_input(cli)?;
    let fields = cli.field.fields();
    match cli.verb {
        Verb::BuildOm => {
            let file = OmFile::from_affine(input.affine()?);
            emit(cli, &serde_json::to_value(&file)?)?;
            Ok(true)
        }
        Verb::CheckAxioms => {
            let verdict = omx_core::om::check_covector_axioms(input.om.covectors());
            let ok = verdict.pass();
            let value = json!({
                "input": input.name,
                "kind": input.kind,
                "verdict": if ok { "pass" } else { "fail" },
                "failure": verdict.failure.map(|f| f.to_string()),
            });
            emit(cli, &value)?;
            Ok(ok)
        }
        Verb::Ideal => {
            let aom = input.affine()?;
            let ideal = nps::matroid_ideal(aom);
            let value = json!({
                "input": input.name,
                "ideal": ideal.generator_strings(),
                "specialization": ideal.specialize().generator_strings(),
            });
            emit(cli, &value)?;
            Ok(true)
        }
        Verb::Resolution => {
            let aom = input.affine()?;
            let res = nps::cellular_resolution(aom).context("resolution undefined")?;
            let faithful = nps::check_faithful(&res);
            let acyclic = fields.iter().all(|&f| nps::check_acyclic(&res, f));
            let value = json!({
                "input": input.name,
                "betti": res.betti,
                "faithful": faithful,
                "acyclic": acyclic,
            });
            emit(cli, &value)?;
            Ok(faithful && acyclic)
        }
        Verb::Cm => {
            let aom = input.affine()?;
            let res = nps::cellular_resolution(aom).context("resolution undefined")?;
            let delta = omx_core::sr::complex_from_ideal(&res.ideal);
            let delta_bar = omx_core::sr::complex_from_ideal(&res.ideal.specialize());
            let mut cellular = serde_json::Map::new();
            let mut reisner = serde_json::Map::new();
            let mut reisner_bar = serde_json::Map::new();
            let mut verdicts = Vec::new();
            for &f in &fields {
                let c = nps::is_cm_cellular(&res, f);
                let r = delta.is_cm_reisner(f).is_cm();
                let rb = delta_bar.is_cm_reisner(f).is_cm();
                cellular.insert(f.to_string(), Value::Bool(c));
                reisner.insert(f.to_string(), Value::Bool(r));
                reisner_bar.insert(f.to_string(), Value::Bool(rb));
                verdicts.extend([c, r, rb]);
            }
            let agree = verdicts.iter().all(|&v| v == verdicts[0]);
            let value = json!({
                "input": input.name,
                "cellular": cellular,
                "reisner": reisner,
                "reisner_specialized": reisner_bar,
                "agree": agree,
            });
            emit(cli, &value)?;
            Ok(agree)
        }
        Verb::Genpos => {
            let gp =
                nps::genpos_report(input.affine()?, &fields).context("report undefined")?;
            let value = json!({
                "input": input.name,
                "rank": gp.rank,
                "full_rank": gp.full_rank,
                "c1": gp.conditions[0],
                "c2": gp.conditions[1],
                "c3": gp.conditions[2],
                "c4": gp.conditions[3],
                "c5": gp.conditions[4],
                "dims": [gp.dims.0, gp.dims.1],
                "krull_dims": [gp.krull_dims.0, gp.krull_dims.1],
                "notes": gp.notes,
                "findings": gp.findings,
            });
            let ok = gp.findings.is_empty();
            emit(cli, &value)?;
            Ok(ok)
        }
        Verb::Manifold => {
            let mf =
                nps::manifold_report(input.affine()?).context("report undefined")?;
            let cells: Vec<Value> = mf
                .cells
                .iter()
                .map(|c| {
                    json!({
                        "cell": c.name,
                        "dim": c.dim,
                        "boundary": c.boundary,
                        "homology": c.top_homology.to_string(),
                        "ok": c.matches_interior_pattern(),
                    })
                })
                .collect();
            let value = json!({
                "input": input.name,
                "assumes_cm": mf.assumes_cm,
                "cells": cells,
                "delta_manifold": mf.delta_manifold,
                "boundary_sphere": mf.delta_boundary_sphere,
                "x_boundary_manifold": mf.x_boundary_manifold,
                "x_boundary_sphere": mf.x_boundary_sphere,
                "findings": mf.findings,
            });
            let ok = mf.findings.is_empty();
            emit(cli, &value)?;
            Ok(ok)
        }
        Verb::Report => {
            let report = build_report(input.affine()?, &input.name, &fields)
                .context("report undefined")?;
            let ok = report.findings.is_empty();
            emit(cli, &serde_json::to_value(&report)?)?;
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let _ = cli.seed; // reserved for randomized batteries
    if cli.parallel > 0 {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.parallel).build_global();
    }
    match run(&cli) {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
