//! Assembly of the machine-readable report emitted by the CLI.

use crate::linalg::Field;
use crate::nps::{
    self, cellular_resolution, genpos_report, manifold_report, matroid_ideal, NpsError,
};
use crate::om::AffineOrientedMatroid;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct GenposJson {
    pub c1: bool,
    pub c2: bool,
    pub c3: bool,
    pub c4: bool,
    pub c5: bool,
    pub dims: [usize; 2],
    pub krull_dims: [usize; 2],
}

#[derive(Debug, Clone, Serialize)]
pub struct CellJson {
    pub cell: String,
    pub dim: i32,
    pub boundary: bool,
    pub homology: String,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ManifoldJson {
    pub cells: Vec<CellJson>,
    pub delta_manifold: bool,
    pub boundary_sphere: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x_boundary_manifold: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x_boundary_sphere: Option<bool>,
}

/// The full report for one input.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub input: String,
    pub rank: usize,
    pub full_rank: bool,
    pub ideal: Vec<String>,
    pub betti: Vec<usize>,
    pub genpos: GenposJson,
    pub manifold: ManifoldJson,
    pub notes: Vec<String>,
    pub findings: Vec<String>,
}

/// Run the whole pipeline on an affine oriented matroid.
pub fn build_report(
    aom: &AffineOrientedMatroid,
    input: &str,
    fields: &[Field],
) -> Result<Report, NpsError> {
    let ideal = matroid_ideal(aom);
    let res = cellular_resolution(aom)?;
    let gp = genpos_report(aom, fields)?;
    let mf = manifold_report(aom)?;

    let mut findings = gp.findings.clone();
    findings.extend(mf.findings.iter().cloned());
    if !nps::check_faithful(&res) {
        findings.push("the cellular resolution labeling is not faithful".into());
    }
    for &field in fields {
        if !nps::check_acyclic(&res, field) {
            findings.push(format!("the cellular resolution is not acyclic over {field}"));
        }
    }
    if !nps::regularity_precondition_check(&ideal).pass() {
        findings.push("the matroid ideal fails the regularity precondition".into());
    }

    Ok(Report {
        input: input.to_string(),
        rank: gp.rank,
        full_rank: gp.full_rank,
        ideal: ideal.generator_strings(),
        betti: res.betti.clone(),
        genpos: GenposJson {
            c1: gp.conditions[0],
            c2: gp.conditions[1],
            c3: gp.conditions[2],
            c4: gp.conditions[3],
            c5: gp.conditions[4],
            dims: [gp.dims.0, gp.dims.1],
            krull_dims: [gp.krull_dims.0, gp.krull_dims.1],
        },
        manifold: ManifoldJson {
            cells: mf
                .cells
                .iter()
                .map(|c| CellJson {
                    cell: c.name.clone(),
                    dim: c.dim,
                    boundary: c.boundary,
                    homology: c.top_homology.to_string(),
                    ok: c.matches_interior_pattern(),
                })
                .collect(),
            delta_manifold: mf.delta_manifold,
            boundary_sphere: mf.delta_boundary_sphere,
            x_boundary_manifold: mf.x_boundary_manifold,
            x_boundary_sphere: mf.x_boundary_sphere,
        },
        notes: gp.notes.clone(),
        findings,
    })
}
