//! The main pipeline: matroid ideals, their specialization, the labeled
//! cellular resolution supported on the bounded complex, faithfulness and
//! acyclicity checks, Cohen-Macaulay criteria through two independent
//! routes, the five-way general-position equivalence report, the canonical
//! ideal with its degree table, manifold diagnostics and the regularity
//! precondition.

use crate::cw::{CellComplex, CwError, Strata};
use crate::linalg::{AbelianGroup, Field};
use crate::monomial::{SquarefreeIdeal, VarSet};
use crate::om::AffineOrientedMatroid;
use crate::sign::{Sign, SignVector};
use crate::sr::{complex_from_ideal, SimplicialComplex};
use rayon::prelude::*;
use std::collections::HashSet;

#[derive(Debug, Clone, thiserror::Error)]
pub enum NpsError {
    #[error("the bounded complex is empty")]
    EmptyBoundedComplex,
    #[error("g is a coloop; the report is undefined")]
    GIsColoop,
    #[error(transparent)]
    Cw(#[from] CwError),
}

/// The standard field battery: Q, F2, F3, F5.
pub const FIELD_BATTERY: [Field; 4] =
    [Field::Q, Field::Fp(2), Field::Fp(3), Field::Fp(5)];

/// Variable mask of the monomial `m_lambda`: `x_i` for positive signs,
/// `y_i` for negative signs, `g` excluded.
pub fn monomial_mask(aom: &AffineOrientedMatroid, v: &SignVector) -> u64 {
    let n = aom.hyperplane_elements().len();
    let mut mask = 0u64;
    for (i, &e) in aom.hyperplane_elements().iter().enumerate() {
        match v.get(e) {
            Sign::Plus => mask |= 1 << i,
            Sign::Minus => mask |= 1 << (n + i),
            Sign::Zero => {}
        }
    }
    mask
}

/// Variable mask of `n_lambda = (prod x_i y_i) / m_lambda`.
pub fn complement_mask(aom: &AffineOrientedMatroid, v: &SignVector) -> u64 {
    let n = aom.hyperplane_elements().len();
    let full = VarSet::XY(n).full_mask();
    full & !monomial_mask(aom, v)
}

/// The matroid ideal: generated by `m_lambda` over the positive cocircuits.
/// Zero when `g` is a loop (by convention), the unit ideal when `g` is a
/// coloop.
pub fn matroid_ideal(aom: &AffineOrientedMatroid) -> SquarefreeIdeal {
    let n = aom.hyperplane_elements().len();
    let vars = VarSet::XY(n);
    if aom.g_is_loop() {
        return SquarefreeIdeal::zero(vars);
    }
    let positive = aom.positive_cocircuits();
    SquarefreeIdeal::new(vars, positive.iter().map(|c| monomial_mask(aom, c)))
}

/// A minimal cellular resolution: the bounded complex with incidence
/// numbers and squarefree degree labels, plus the Betti row it supports.
#[derive(Debug, Clone)]
pub struct LabeledResolution {
    pub complex: CellComplex,
    /// `betti[i]` is the rank of the i-th free module (= cells of dim i-1).
    pub betti: Vec<usize>,
    pub ideal: SquarefreeIdeal,
}

/// Build the labeled resolution supported on the bounded complex.
pub fn cellular_resolution(
    aom: &AffineOrientedMatroid,
) -> Result<LabeledResolution, NpsError> {
    let bounded = aom.bounded_complex();
    if bounded.is_empty() {
        return Err(NpsError::EmptyBoundedComplex);
    }
    let mut complex = CellComplex::from_bounded_poset(&bounded)?;
    complex.build_incidence()?;
    let labels: Vec<u64> = (0..complex.n_cells())
        .map(|i| match complex.cell(i).covector {
            None => 0,
            Some(v) => monomial_mask(aom, &v),
        })
        .collect();
    complex.set_labels(labels)?;
    let betti = complex.f_vector();
    Ok(LabeledResolution { complex, betti, ideal: matroid_ideal(aom) })
}

/// Faithfulness: the label map is injective and reflects the face order.
pub fn check_faithful(res: &LabeledResolution) -> bool {
    let labels = res.complex.labels().expect("resolution carries labels");
    let mut seen = HashSet::new();
    for &l in labels {
        if !seen.insert(l) {
            return false;
        }
    }
    let n = res.complex.n_cells();
    for upper in 0..n {
        for lower in 0..n {
            if upper == lower {
                continue;
            }
            let strictly_bigger =
                labels[lower] & !labels[upper] == 0 && labels[lower] != labels[upper];
            if strictly_bigger && !res.complex.leq(lower, upper) {
                return false;
            }
        }
    }
    true
}

/// Distinct degree masks worth sweeping: all squarefree degrees, one
/// representative per distinct cell set.
fn distinct_masks(
    complex: &CellComplex,
    of_degree: impl Fn(&CellComplex, u64) -> u128 + Sync,
) -> Vec<u128> {
    let labels = complex.labels().expect("labels required");
    let var_mask = labels.iter().fold(0u64, |m, &l| m | l);
    // Enumerate subsets of the union of used variables, then dedup cell
    // sets. Unused variables never change a filter.
    let mut subsets = Vec::new();
    let mut s = var_mask;
    loop {
        subsets.push(s);
        if s == 0 {
            break;
        }
        s = (s - 1) & var_mask;
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for a in subsets {
        let mask = of_degree(complex, a);
        if seen.insert(mask) {
            out.push(mask);
        }
    }
    out
}

/// Acyclicity of the labeled complex: every lower degree-truncation
/// `X_{<=a}` that contains a cell has vanishing reduced homology over the
/// field.
pub fn check_acyclic(res: &LabeledResolution, field: Field) -> bool {
    let masks = distinct_masks(&res.complex, |c, a| {
        c.ideal_of_degree(a).expect("labels present")
    });
    masks.par_iter().all(|&mask| {
        if mask == 1 {
            return true; // only the empty cell
        }
        let sub = res.complex.subcomplex(mask).expect("degree ideals are closed");
        sub.reduced_betti(field)
            .expect("subcomplex keeps incidence")
            .iter()
            .all(|&b| b == 0)
    })
}

/// The Cohen-Macaulay sweep: cohomology of every up-set `X^{>= a}` must be
/// concentrated in the top dimension.
pub fn is_cm_cellular(res: &LabeledResolution, field: Field) -> bool {
    let top = (res.complex.dim() + 1) as usize;
    let masks = distinct_masks(&res.complex, |c, a| {
        c.filter_of_degree(a).expect("labels present")
    });
    masks.par_iter().all(|&mask| {
        let complex = res.complex.cochain_complex(mask).expect("up-sets are filters");
        complex
            .betti(field)
            .iter()
            .enumerate()
            .all(|(i, &b)| i == top || b == 0)
    })
}

/// The five conditions of the general-position characterization, computed
/// by independent code paths, with the dimension bookkeeping.
#[derive(Debug, Clone)]
pub struct GenposReport {
    pub rank: usize,
    pub n_hyperplanes: usize,
    pub full_rank: bool,
    pub bounded_rank: Option<usize>,
    /// (1) general position, (2) the doubled quotient is CM, (3) the
    /// specialized quotient is CM, (4) the positive supports are matroid
    /// circuits of rank n-r, (5) positive and full restricted supports
    /// agree.
    pub conditions: [bool; 5],
    /// The dimension formulas (2n - r, n - r).
    pub dims: (usize, usize),
    /// Krull dimensions actually computed from the two complexes.
    pub krull_dims: (usize, usize),
    /// Informational remarks (not failures).
    pub notes: Vec<String>,
    pub findings: Vec<String>,
}

impl GenposReport {
    pub fn has_findings(&self) -> bool {
        !self.findings.is_empty()
    }
}

/// Evaluate the five equivalent conditions independently over a field
/// battery.
pub fn genpos_report(
    aom: &AffineOrientedMatroid,
    fields: &[Field],
) -> Result<GenposReport, NpsError> {
    if aom.g_is_coloop() {
        return Err(NpsError::GIsColoop);
    }
    let r = aom.om().rank();
    let n = aom.hyperplane_elements().len();
    let mut findings = Vec::new();

    let c1 = aom.is_general_position();

    let res = cellular_resolution(aom)?;
    let cellular: Vec<bool> = fields.iter().map(|&f| is_cm_cellular(&res, f)).collect();
    let delta_m = complex_from_ideal(&res.ideal);
    let reisner_m: Vec<bool> =
        fields.iter().map(|&f| delta_m.is_cm_reisner(f).is_cm()).collect();
    if cellular.iter().any(|&b| b != cellular[0]) {
        findings.push(format!("cellular CM verdict varies across fields: {cellular:?}"));
    }
    if reisner_m.iter().any(|&b| b != reisner_m[0]) {
        findings.push(format!("Reisner CM verdict varies across fields: {reisner_m:?}"));
    }
    if cellular[0] != reisner_m[0] {
        findings.push(format!(
            "cellular CM ({}) disagrees with Reisner on the Stanley-Reisner complex ({})",
            cellular[0], reisner_m[0]
        ));
    }
    let c2 = cellular[0];

    let bar = res.ideal.specialize();
    let delta_bar = complex_from_ideal(&bar);
    let reisner_bar: Vec<bool> =
        fields.iter().map(|&f| delta_bar.is_cm_reisner(f).is_cm()).collect();
    if reisner_bar.iter().any(|&b| b != reisner_bar[0]) {
        findings.push(format!(
            "specialized Reisner CM verdict varies across fields: {reisner_bar:?}"
        ));
    }
    let c3 = reisner_bar[0];

    let positive = aom.underlying_restricted_circuits(true);
    let c4 = positive.check_axioms().pass() && positive.matroid_rank() + r == n;

    let full_family = aom.underlying_restricted_circuits(false);
    let c5 = positive == full_family;

    let fr = aom.full_rank();
    let mut notes = Vec::new();
    if fr.full_rank {
        let all = [c1, c2, c3, c4, c5];
        if all.iter().any(|&c| c != all[0]) {
            findings.push(format!(
                "full rank holds but the five conditions disagree: {all:?}"
            ));
        }
    } else {
        notes.push(
            "not full rank: the quotient is a polynomial extension of the \
             full-rank restriction, and the five-way equivalence is not asserted"
                .to_string(),
        );
    }

    let dims = (2 * n - r, n - r);
    let krull_dims = (
        delta_m.dim().map_or(0, |d| (d + 1) as usize),
        delta_bar.dim().map_or(0, |d| (d + 1) as usize),
    );
    if fr.full_rank && c2 && krull_dims != dims {
        findings.push(format!(
            "Krull dimensions {krull_dims:?} differ from the formulas {dims:?}"
        ));
    }

    Ok(GenposReport {
        rank: r,
        n_hyperplanes: n,
        full_rank: fr.full_rank,
        bounded_rank: fr.bounded_poset_rank,
        conditions: [c1, c2, c3, c4, c5],
        dims,
        krull_dims,
        notes,
        findings,
    })
}

/// The canonical ideal: generated by the complement monomials of the topes
/// of the bounded complex, reduced modulo the matroid ideal.
pub fn canonical_ideal(aom: &AffineOrientedMatroid) -> Result<SquarefreeIdeal, NpsError> {
    let res = cellular_resolution(aom)?;
    let strata = Strata::compute(aom, &res.complex);
    Ok(canonical_ideal_from(aom, &res, &strata))
}

fn canonical_ideal_from(
    aom: &AffineOrientedMatroid,
    res: &LabeledResolution,
    strata: &Strata,
) -> SquarefreeIdeal {
    let n = aom.hyperplane_elements().len();
    let gens = strata
        .topes
        .iter()
        .map(|&t| {
            let v = res.complex.cell(t).covector.expect("bounded cells carry covectors");
            complement_mask(aom, &v)
        })
        .filter(|&mask| !res.ideal.contains(mask));
    SquarefreeIdeal::new(VarSet::XY(n), gens)
}

/// One row of the canonical degree table: a face of the Stanley-Reisner
/// complex, the top link cohomology dimension, and whether the face
/// monomial lies in the canonical ideal.
#[derive(Debug, Clone)]
pub struct CanonicalRow {
    pub face: u64,
    pub link_cohomology: usize,
    pub in_canonical: bool,
}

#[derive(Debug, Clone)]
pub struct CanonicalTable {
    pub rows: Vec<CanonicalRow>,
    /// Whether every row satisfies dim = membership and dim <= 1.
    pub all_match: bool,
}

/// Verify the canonical-module degree identity: for every face F of the
/// Stanley-Reisner complex, the top reduced link cohomology has dimension
/// equal to the (0 or 1) dimension of the canonical ideal in that
/// squarefree degree.
pub fn canonical_degree_table(
    aom: &AffineOrientedMatroid,
    field: Field,
) -> Result<CanonicalTable, NpsError> {
    let res = cellular_resolution(aom)?;
    let strata = Strata::compute(aom, &res.complex);
    let canonical = canonical_ideal_from(aom, &res, &strata);
    let delta = complex_from_ideal(&res.ideal);
    let d = delta.dim().expect("proper ideal has a nonvoid complex");
    let faces: Vec<u64> = delta.faces().into_iter().collect();
    let rows: Vec<CanonicalRow> = faces
        .par_iter()
        .map(|&face| {
            let link = delta.link(face).expect("faces enumerate from facets");
            let degree = d - face.count_ones() as i32;
            let link_cohomology = link.reduced_betti_in_degree(degree, field);
            let in_canonical = canonical.contains(face) && !res.ideal.contains(face);
            CanonicalRow { face, link_cohomology, in_canonical }
        })
        .collect();
    let all_match = rows
        .iter()
        .all(|r| r.link_cohomology <= 1 && (r.link_cohomology == 1) == r.in_canonical);
    Ok(CanonicalTable { rows, all_match })
}

/// Diagnostics for a single cell of the bounded complex.
#[derive(Debug, Clone)]
pub struct CellDiagnostic {
    pub name: String,
    pub dim: i32,
    /// Combinatorial boundary membership (from the strata).
    pub boundary: bool,
    /// Relative homology in the top dimension over the integers.
    pub top_homology: AbelianGroup,
    /// Whether everything below the top vanishes.
    pub lower_vanishes: bool,
}

impl CellDiagnostic {
    /// The interior pattern: Z on top for interior cells, nothing at all
    /// for boundary cells.
    pub fn matches_interior_pattern(&self) -> bool {
        if !self.lower_vanishes {
            return false;
        }
        if self.boundary {
            self.top_homology.is_zero()
        } else {
            self.top_homology.is_free_of_rank(1)
        }
    }
}

/// The manifold / sphere diagnostics of the bounded complex and the
/// Stanley-Reisner complex.
#[derive(Debug, Clone)]
pub struct ManifoldReport {
    pub assumes_cm: bool,
    pub cells: Vec<CellDiagnostic>,
    /// Every cell matches the interior pattern over Z.
    pub interior_pattern: bool,
    /// The cohomological boundary equals the combinatorial boundary.
    pub boundary_match: bool,
    /// The Stanley-Reisner complex is a homology manifold over Z.
    pub delta_manifold: bool,
    /// Its boundary subcomplex is a homology sphere over Z.
    pub delta_boundary_sphere: bool,
    /// The monomials n of cells outside / on the boundary of the bounded
    /// complex lie in the matroid ideal.
    pub n_monomials_in_ideal: bool,
    /// Degreewise identity between top cell cohomology and the canonical
    /// ideal.
    pub omega_degrees_match: bool,
    /// The CW boundary is a homology manifold without boundary (None when
    /// the boundary is empty).
    pub x_boundary_manifold: Option<bool>,
    /// The CW boundary has the global homology of a sphere (recorded, not
    /// asserted).
    pub x_boundary_sphere: Option<bool>,
    pub findings: Vec<String>,
}

impl ManifoldReport {
    pub fn has_findings(&self) -> bool {
        !self.findings.is_empty()
    }
}

/// Run the manifold diagnostics. When the quotient is Cohen-Macaulay every
/// deviation from the expected pattern is recorded as a finding; otherwise
/// the tables are reported raw.
pub fn manifold_report(aom: &AffineOrientedMatroid) -> Result<ManifoldReport, NpsError> {
    if aom.g_is_coloop() {
        return Err(NpsError::GIsColoop);
    }
    let res = cellular_resolution(aom)?;
    let strata = Strata::compute(aom, &res.complex);
    let canonical = canonical_ideal_from(aom, &res, &strata);
    let assumes_cm = is_cm_cellular(&res, Field::Fp(2));
    let full_rank = aom.full_rank().full_rank;
    let mut findings = Vec::new();

    let complex = &res.complex;
    let d = complex.dim();
    let top_index = (d + 1) as usize;

    // Per-cell relative homology over Z.
    let cell_ids: Vec<usize> = (1..complex.n_cells()).collect();
    let cells: Vec<CellDiagnostic> = cell_ids
        .par_iter()
        .map(|&i| {
            let cochain = complex.cochain_complex(complex.up_set(i)).expect("up-set");
            let homology = cochain.homology_z();
            let top = homology.get(top_index).cloned().unwrap_or_else(AbelianGroup::zero);
            let lower_vanishes = homology
                .iter()
                .enumerate()
                .all(|(j, h)| j == top_index || h.is_zero());
            CellDiagnostic {
                name: complex.cell(i).name.clone(),
                dim: complex.cell(i).dim,
                boundary: strata.is_boundary_cell(i),
                top_homology: top,
                lower_vanishes,
            }
        })
        .collect();
    let interior_pattern = cells.iter().all(CellDiagnostic::matches_interior_pattern);
    let boundary_match = cells.iter().all(|c| {
        let cohomological_boundary = c.top_homology.is_zero() && c.lower_vanishes;
        cohomological_boundary == c.boundary
    });

    // Lemma on the complement monomials: positive covectors outside the
    // bounded complex, and boundary cells, have n in the matroid ideal.
    let bounded: HashSet<SignVector> = aom.bounded_complex().into_iter().collect();
    let outside_ok = aom
        .positive_part()
        .iter()
        .filter(|v| !bounded.contains(v))
        .all(|v| res.ideal.contains(complement_mask(aom, v)));
    let boundary_ok = strata.boundary.iter().all(|&i| {
        let v = complex.cell(i).covector.expect("bounded cells carry covectors");
        res.ideal.contains(complement_mask(aom, &v))
    });
    let n_monomials_in_ideal = outside_ok && boundary_ok;

    // Degreewise canonical identity over F2 (the cheap field); the degree
    // table covers the field-independent statement.
    let omega_degrees_match = cell_ids.par_iter().all(|&i| {
        let v = complex.cell(i).covector.expect("covector");
        let n_mask = complement_mask(aom, &v);
        let expected = usize::from(!res.ideal.contains(n_mask) && canonical.contains(n_mask));
        let cochain = complex.cochain_complex(complex.up_set(i)).expect("up-set");
        let betti = cochain.betti(Field::Fp(2));
        betti.get(top_index).copied().unwrap_or(0) == expected
    });

    // The Stanley-Reisner complex as a homology manifold over Z.
    let delta = complex_from_ideal(&res.ideal);
    let d_delta = delta.dim().expect("proper ideal");
    let nonempty_faces: Vec<u64> =
        delta.faces().into_iter().filter(|&f| f != 0).collect();
    let delta_manifold = nonempty_faces.par_iter().all(|&face| {
        let link = delta.link(face).expect("face");
        let expected_degree = d_delta - face.count_ones() as i32;
        link_has_manifold_pattern(&link, expected_degree, false)
    });

    // Its boundary: faces whose monomial misses the canonical ideal.
    let boundary_faces: Vec<u64> = nonempty_faces
        .iter()
        .copied()
        .filter(|&f| !(canonical.contains(f) && !res.ideal.contains(f)))
        .collect();
    let delta_boundary = SimplicialComplex::from_facets(
        delta.labels().to_vec(),
        boundary_faces.iter().copied(),
    );
    let delta_boundary_sphere = if delta_boundary.is_void() {
        false
    } else {
        let bd_dim = delta_boundary.dim().expect("nonvoid");
        let global = delta_boundary
            .reduced_homology_z()
            .iter()
            .enumerate()
            .all(|(k, h)| {
                if k as i32 - 1 == bd_dim {
                    h.is_free_of_rank(1)
                } else {
                    h.is_zero()
                }
            });
        let local = delta_boundary
            .faces()
            .into_iter()
            .filter(|&f| f != 0)
            .collect::<Vec<u64>>()
            .par_iter()
            .all(|&face| {
                let link = delta_boundary.link(face).expect("face");
                let expected = bd_dim - face.count_ones() as i32;
                link_has_manifold_pattern(&link, expected, true)
            });
        global && local
    };

    // The CW boundary as a homology manifold without boundary, plus its
    // global homology (an empirical sphere check).
    let boundary_mask = strata.boundary_mask();
    let (x_boundary_manifold, x_boundary_sphere) = if strata.boundary.is_empty() {
        (None, None)
    } else {
        let sub = complex.subcomplex(boundary_mask)?;
        let bd_dim = sub.dim();
        let bd_top = (bd_dim + 1) as usize;
        let manifold = (1..sub.n_cells()).into_par_iter().all(|i| {
            let cochain = sub.cochain_complex(sub.up_set(i)).expect("up-set");
            let homology = cochain.homology_z();
            homology.iter().enumerate().all(|(j, h)| {
                if j == bd_top {
                    h.is_free_of_rank(1)
                } else {
                    h.is_zero()
                }
            })
        });
        let sphere = sub
            .reduced_homology_z()?
            .iter()
            .enumerate()
            .all(|(j, h)| {
                if j == bd_top {
                    h.is_free_of_rank(1)
                } else {
                    h.is_zero()
                }
            });
        (Some(manifold), Some(sphere))
    };

    if assumes_cm {
        if !interior_pattern {
            findings.push("a cell violates the interior cohomology pattern".into());
        }
        if !boundary_match {
            findings
                .push("cohomological and combinatorial boundaries disagree".into());
        }
        if !delta_manifold {
            findings.push("the Stanley-Reisner complex is not a homology manifold".into());
        }
        if !delta_boundary_sphere {
            findings.push("the Stanley-Reisner boundary is not a homology sphere".into());
        }
        // The complement-monomial and canonical-degree statements assume
        // full rank on top of Cohen-Macaulayness.
        if full_rank && !n_monomials_in_ideal {
            findings.push("a complement monomial escapes the matroid ideal".into());
        }
        if full_rank && !omega_degrees_match {
            findings.push("canonical degrees disagree with top cohomology".into());
        }
        if x_boundary_manifold == Some(false) {
            findings.push("the CW boundary is not a homology manifold".into());
        }
    }

    Ok(ManifoldReport {
        assumes_cm,
        cells,
        interior_pattern,
        boundary_match,
        delta_manifold,
        delta_boundary_sphere,
        n_monomials_in_ideal,
        omega_degrees_match,
        x_boundary_manifold,
        x_boundary_sphere,
        findings,
    })
}

/// Reduced link homology concentrated in one degree: zero elsewhere, and at
/// the expected degree either 0 or Z (manifold) or exactly Z (sphere).
fn link_has_manifold_pattern(
    link: &SimplicialComplex,
    expected_degree: i32,
    require_z: bool,
) -> bool {
    let homology = link.reduced_homology_z();
    for (k, h) in homology.iter().enumerate() {
        let degree = k as i32 - 1;
        if degree == expected_degree {
            if require_z {
                if !h.is_free_of_rank(1) {
                    return false;
                }
            } else if !(h.is_zero() || h.is_free_of_rank(1)) {
                return false;
            }
        } else if !h.is_zero() {
            return false;
        }
    }
    true
}

/// Verdict of the regularity precondition: no generator uses both `x_i`
/// and `y_i`, and every facet of the Stanley-Reisner complex meets
/// `{x_i, y_i}` for every `i`.
#[derive(Debug, Clone)]
pub struct PreconditionVerdict {
    pub generator_condition: bool,
    pub prime_condition: bool,
    pub witness: Option<String>,
}

impl PreconditionVerdict {
    pub fn pass(&self) -> bool {
        self.generator_condition && self.prime_condition
    }
}

/// Check the squarefree precondition family on an ideal over the doubled
/// variables.
pub fn regularity_precondition_check(ideal: &SquarefreeIdeal) -> PreconditionVerdict {
    let n = ideal.vars().hyperplanes();
    debug_assert!(matches!(ideal.vars(), VarSet::XY(_)));
    for g in ideal.generator_masks() {
        for i in 0..n {
            if g >> i & 1 == 1 && g >> (n + i) & 1 == 1 {
                return PreconditionVerdict {
                    generator_condition: false,
                    prime_condition: true,
                    witness: Some(format!(
                        "generator {} contains x{} and y{}",
                        ideal.vars().monomial_string(g),
                        i + 1,
                        i + 1
                    )),
                };
            }
        }
    }
    // Minimal primes of a squarefree ideal are facet complements: the prime
    // condition says every facet contains x_i or y_i for each i.
    let delta = complex_from_ideal(ideal);
    for facet in delta.facet_masks() {
        for i in 0..n {
            if facet >> i & 1 == 0 && facet >> (n + i) & 1 == 0 {
                return PreconditionVerdict {
                    generator_condition: true,
                    prime_condition: false,
                    witness: Some(format!(
                        "facet {} misses both x{} and y{}",
                        ideal.vars().monomial_string(facet),
                        i + 1,
                        i + 1
                    )),
                };
            }
        }
    }
    PreconditionVerdict { generator_condition: true, prime_condition: true, witness: None }
}
