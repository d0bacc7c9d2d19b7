//! Regular CW complexes presented by their face posets.
//!
//! A complex is built from a graded poset of sign vectors (typically the
//! bounded complex of an affine oriented matroid, with the zero vector as
//! the empty cell). An incidence function is constructed dimension by
//! dimension from fundamental cycles of cell boundaries, order filters give
//! cellular cochain complexes, and barycentric subdivision bridges to
//! simplicial computations.

use crate::linalg::{chain_betti, chain_homology_z, AbelianGroup, Field, IntMatrix};
use crate::om::AffineOrientedMatroid;
use crate::sign::SignVector;
use crate::sr::SimplicialComplex;
use num_bigint::BigInt;
use std::collections::HashMap;

#[derive(Debug, Clone, thiserror::Error)]
pub enum CwError {
    #[error("the input poset is not graded (cover from rank {lower} to {upper})")]
    NotGraded { lower: usize, upper: usize },
    #[error("cell {0} does not bound a homology sphere; the poset is not a regular CW complex")]
    NotRegular(String),
    #[error("incidence function not built yet")]
    MissingIncidence,
    #[error("labels not set")]
    MissingLabels,
    #[error("label map is not order preserving (cells {lower} <= {upper})")]
    LabelsNotOrderPreserving { lower: String, upper: String },
    #[error("the requested cell set is not an order filter")]
    NotOrderFilter,
    #[error("the requested cell set is not downward closed")]
    NotOrderIdeal,
    #[error("operation undefined for the empty cell")]
    EmptyCell,
}

/// Maximum number of cells (bitmask-backed cell sets).
pub const MAX_CELLS: usize = 128;

/// A single cell: its dimension and, when it came from a covector poset,
/// the covector itself.
#[derive(Debug, Clone)]
pub struct Cell {
    pub dim: i32,
    pub covector: Option<SignVector>,
    pub name: String,
}

/// A finite regular CW complex with the empty cell at index 0.
#[derive(Debug, Clone)]
pub struct CellComplex {
    cells: Vec<Cell>,
    /// below[i] = bitmask of cells strictly below cell i (always contains
    /// the empty cell for i != 0).
    below: Vec<u128>,
    /// Cover pairs (upper, lower).
    covers: Vec<(usize, usize)>,
    incidence: Option<HashMap<(usize, usize), i64>>,
    /// Squarefree degree labels as variable masks; labels[0] = 0.
    labels: Option<Vec<u64>>,
}

impl CellComplex {
    /// Build the face complex of a bounded poset of sign vectors, adding
    /// the empty cell below everything. Cell dimension is poset rank minus
    /// one; the poset must be graded.
    pub fn from_bounded_poset(bounded: &[SignVector]) -> Result<CellComplex, CwError> {
        let mut sorted = bounded.to_vec();
        sorted.sort_by_key(|v| (v.support_mask().count_ones(), *v));
        sorted.dedup();
        let names: Vec<String> = sorted.iter().map(|v| v.to_string()).collect();
        let n = sorted.len();
        let order = sorted.clone();
        let rel = move |i: usize, j: usize| order[i].lt(&order[j]);
        Self::from_strict_order(n, rel, names, Some(sorted))
    }

    /// Build from an abstract strict order on `n` items (the empty cell is
    /// added automatically).
    pub fn from_strict_order(
        n: usize,
        strictly_below: impl Fn(usize, usize) -> bool,
        names: Vec<String>,
        covectors: Option<Vec<SignVector>>,
    ) -> Result<CellComplex, CwError> {
        assert!(n < MAX_CELLS, "too many cells");
        assert_eq!(names.len(), n);
        // Poset rank of each item: longest chain below it (empty cell is
        // rank 0).
        let mut order: Vec<usize> = (0..n).collect();
        // Iterate until ranks stabilize; at desk scale a simple DP over a
        // topological order suffices.
        let mut rank = vec![1usize; n];
        order.sort_by_key(|&i| (0..n).filter(|&j| strictly_below(j, i)).count());
        for &i in &order {
            let r = (0..n)
                .filter(|&j| strictly_below(j, i))
                .map(|j| rank[j])
                .max()
                .unwrap_or(0)
                + 1;
            rank[i] = r;
        }
        let mut cells = vec![Cell { dim: -1, covector: None, name: "{}".to_string() }];
        let mut below: Vec<u128> = vec![0];
        for i in 0..n {
            cells.push(Cell {
                dim: rank[i] as i32 - 1,
                covector: covectors.as_ref().map(|c| c[i]),
                name: names[i].clone(),
            });
            let mut mask: u128 = 1; // the empty cell
            for j in 0..n {
                if strictly_below(j, i) {
                    mask |= 1u128 << (j + 1);
                }
            }
            below.push(mask);
        }
        // Covers: strict relations with nothing in between.
        let mut covers = Vec::new();
        for upper in 1..=n {
            for lower in 0..=n {
                if lower == upper || below[upper] >> lower & 1 == 0 {
                    continue;
                }
                let between = below[upper] & !below[lower] & !(1u128 << lower);
                let has_mid = (0..=n).any(|m| {
                    m != upper && m != lower && between >> m & 1 == 1 && below[m] >> lower & 1 == 1
                });
                if !has_mid {
                    covers.push((upper, lower));
                }
            }
        }
        covers.sort();
        covers.dedup();
        let complex = CellComplex { cells, below, covers, incidence: None, labels: None };
        // Gradedness: every cover steps the rank by exactly one.
        for &(upper, lower) in &complex.covers {
            let ru = complex.cells[upper].dim + 1;
            let rl = complex.cells[lower].dim + 1;
            if ru != rl + 1 {
                return Err(CwError::NotGraded { lower: rl as usize, upper: ru as usize });
            }
        }
        Ok(complex)
    }

    pub fn n_cells(&self) -> usize {
        self.cells.len()
    }

    /// Dimension of the complex (-1 if only the empty cell).
    pub fn dim(&self) -> i32 {
        self.cells.iter().map(|c| c.dim).max().unwrap_or(-1)
    }

    pub fn cell(&self, i: usize) -> &Cell {
        &self.cells[i]
    }

    pub fn cells_of_dim(&self, d: i32) -> Vec<usize> {
        (0..self.cells.len()).filter(|&i| self.cells[i].dim == d).collect()
    }

    /// Cell counts per dimension starting at the empty cell.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut out = vec![0usize; (self.dim() + 2) as usize];
        for c in &self.cells {
            out[(c.dim + 1) as usize] += 1;
        }
        out
    }

    pub fn leq(&self, lower: usize, upper: usize) -> bool {
        lower == upper || self.below[upper] >> lower & 1 == 1
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Index of the cell carrying a given covector.
    pub fn cell_of_covector(&self, v: &SignVector) -> Option<usize> {
        (1..self.cells.len()).find(|&i| self.cells[i].covector.as_ref() == Some(v))
    }

    pub fn full_mask(&self) -> u128 {
        if self.cells.len() == 128 {
            u128::MAX
        } else {
            (1u128 << self.cells.len()) - 1
        }
    }

    /// The order filter of cells above (and including) the given cell.
    pub fn up_set(&self, cell: usize) -> u128 {
        let mut mask = 1u128 << cell;
        for i in 0..self.cells.len() {
            if self.below[i] >> cell & 1 == 1 {
                mask |= 1u128 << i;
            }
        }
        mask
    }

    pub fn is_order_filter(&self, mask: u128) -> bool {
        (0..self.cells.len()).all(|i| {
            mask >> i & 1 == 0
                || (0..self.cells.len())
                    .all(|j| self.below[j] >> i & 1 == 0 || mask >> j & 1 == 1)
        })
    }

    pub fn is_order_ideal(&self, mask: u128) -> bool {
        (0..self.cells.len())
            .all(|i| mask >> i & 1 == 0 || self.below[i] & !mask == 0)
    }

    /// Attach squarefree degree labels (one variable mask per cell; the
    /// empty cell must carry 0 and the map must be order preserving).
    pub fn set_labels(&mut self, labels: Vec<u64>) -> Result<(), CwError> {
        assert_eq!(labels.len(), self.cells.len());
        assert_eq!(labels[0], 0, "the empty cell must have degree zero");
        for upper in 0..self.cells.len() {
            for lower in 0..self.cells.len() {
                if self.below[upper] >> lower & 1 == 1 && labels[lower] & !labels[upper] != 0 {
                    return Err(CwError::LabelsNotOrderPreserving {
                        lower: self.cells[lower].name.clone(),
                        upper: self.cells[upper].name.clone(),
                    });
                }
            }
        }
        self.labels = Some(labels);
        Ok(())
    }

    pub fn labels(&self) -> Option<&[u64]> {
        self.labels.as_deref()
    }

    /// The order filter `{cell : label(cell) >= a}` for a squarefree degree.
    pub fn filter_of_degree(&self, a: u64) -> Result<u128, CwError> {
        let labels = self.labels.as_ref().ok_or(CwError::MissingLabels)?;
        let mut mask = 0u128;
        for (i, &l) in labels.iter().enumerate() {
            if a & !l == 0 {
                mask |= 1u128 << i;
            }
        }
        Ok(mask)
    }

    /// The order ideal `{cell : label(cell) <= a}`.
    pub fn ideal_of_degree(&self, a: u64) -> Result<u128, CwError> {
        let labels = self.labels.as_ref().ok_or(CwError::MissingLabels)?;
        let mut mask = 0u128;
        for (i, &l) in labels.iter().enumerate() {
            if l & !a == 0 {
                mask |= 1u128 << i;
            }
        }
        Ok(mask)
    }

    /// Construct an incidence function dimension by dimension.
    ///
    /// For each k-cell the already-oriented (k-1)-skeleton of its boundary
    /// is a homology (k-1)-sphere; the generator of its top cycle group has
    /// all coefficients +-1 and those coefficients become the incidence
    /// numbers. Fails if some boundary is not a homology sphere (the input
    /// was not a regular CW poset).
    pub fn build_incidence(&mut self) -> Result<(), CwError> {
        let mut inc: HashMap<(usize, usize), i64> = HashMap::new();
        for &v in &self.cells_of_dim(0) {
            inc.insert((v, 0), 1);
        }
        for d in 1..=self.dim() {
            for &sigma in &self.cells_of_dim(d) {
                let top: Vec<usize> = self
                    .cells_of_dim(d - 1)
                    .into_iter()
                    .filter(|&t| self.below[sigma] >> t & 1 == 1)
                    .collect();
                let sub: Vec<usize> = self
                    .cells_of_dim(d - 2)
                    .into_iter()
                    .filter(|&t| self.below[sigma] >> t & 1 == 1)
                    .collect();
                let mut boundary = IntMatrix::zero(sub.len(), top.len());
                for (col, &t) in top.iter().enumerate() {
                    for (row, &s) in sub.iter().enumerate() {
                        if let Some(&c) = inc.get(&(t, s)) {
                            boundary[(row, col)] = BigInt::from(c);
                        }
                    }
                }
                let kernel = boundary.kernel_basis();
                if kernel.len() != 1 {
                    return Err(CwError::NotRegular(self.cells[sigma].name.clone()));
                }
                let cycle = &kernel[0];
                for (col, &t) in top.iter().enumerate() {
                    let c = &cycle[col];
                    let value = if *c == BigInt::from(1) {
                        1
                    } else if *c == BigInt::from(-1) {
                        -1
                    } else {
                        return Err(CwError::NotRegular(self.cells[sigma].name.clone()));
                    };
                    inc.insert((sigma, t), value);
                }
            }
        }
        // d(d(sigma)) = 0 for every dimension gap of two.
        for upper in 0..self.cells.len() {
            for lower in 0..self.cells.len() {
                if self.cells[upper].dim != self.cells[lower].dim + 2
                    || !self.leq(lower, upper)
                {
                    continue;
                }
                let total: i64 = (0..self.cells.len())
                    .filter(|&m| self.leq(lower, m) && self.leq(m, upper))
                    .map(|m| {
                        inc.get(&(upper, m)).copied().unwrap_or(0)
                            * inc.get(&(m, lower)).copied().unwrap_or(0)
                    })
                    .sum();
                if total != 0 {
                    return Err(CwError::NotRegular(self.cells[upper].name.clone()));
                }
            }
        }
        self.incidence = Some(inc);
        Ok(())
    }

    pub fn has_incidence(&self) -> bool {
        self.incidence.is_some()
    }

    /// Incidence number `[upper : lower]` (0 unless upper covers lower).
    pub fn incidence(&self, upper: usize, lower: usize) -> i64 {
        self.incidence
            .as_ref()
            .and_then(|m| m.get(&(upper, lower)).copied())
            .unwrap_or(0)
    }

    /// Flip the orientation of one cell (negating its incidences both up
    /// and down); cohomology must not notice.
    pub fn flip_orientation(&mut self, cell: usize) {
        let Some(inc) = self.incidence.as_mut() else { return };
        let keys: Vec<(usize, usize)> = inc
            .keys()
            .copied()
            .filter(|&(u, l)| u == cell || l == cell)
            .collect();
        for k in keys {
            *inc.get_mut(&k).unwrap() *= -1;
        }
    }

    /// Cellular cochain complex of an order filter, over the integers.
    ///
    /// Degrees run from -1 (the empty cell) to the complex dimension;
    /// the map in degree i sends a cell to its incidence-weighted cofaces.
    pub fn cochain_complex(&self, filter: u128) -> Result<CochainComplex, CwError> {
        if self.incidence.is_none() {
            return Err(CwError::MissingIncidence);
        }
        if !self.is_order_filter(filter) {
            return Err(CwError::NotOrderFilter);
        }
        let top = self.dim();
        let mut graded: Vec<Vec<usize>> = Vec::new();
        for d in -1..=top {
            graded.push(
                self.cells_of_dim(d).into_iter().filter(|&i| filter >> i & 1 == 1).collect(),
            );
        }
        let spaces: Vec<usize> = graded.iter().map(Vec::len).collect();
        let mut maps = Vec::new();
        for k in 0..graded.len().saturating_sub(1) {
            let mut m = IntMatrix::zero(spaces[k + 1], spaces[k]);
            for (col, &low) in graded[k].iter().enumerate() {
                for (row, &high) in graded[k + 1].iter().enumerate() {
                    let c = self.incidence(high, low);
                    if c != 0 {
                        m[(row, col)] = BigInt::from(c);
                    }
                }
            }
            maps.push(m);
        }
        Ok(CochainComplex { min_degree: -1, spaces, maps })
    }

    /// The subcomplex on a downward-closed set of cells (the empty cell is
    /// always kept).
    pub fn subcomplex(&self, keep: u128) -> Result<CellComplex, CwError> {
        let keep = keep | 1;
        if !self.is_order_ideal(keep) {
            return Err(CwError::NotOrderIdeal);
        }
        let kept: Vec<usize> =
            (0..self.cells.len()).filter(|&i| keep >> i & 1 == 1).collect();
        let index_of: HashMap<usize, usize> =
            kept.iter().copied().enumerate().map(|(new, old)| (old, new)).collect();
        let cells: Vec<Cell> = kept.iter().map(|&i| self.cells[i].clone()).collect();
        let below: Vec<u128> = kept
            .iter()
            .map(|&i| {
                let mut mask = 0u128;
                for (&old, &new) in &index_of {
                    if self.below[i] >> old & 1 == 1 {
                        mask |= 1u128 << new;
                    }
                }
                mask
            })
            .collect();
        let covers: Vec<(usize, usize)> = self
            .covers
            .iter()
            .filter(|(u, l)| keep >> *u & 1 == 1 && keep >> *l & 1 == 1)
            .map(|(u, l)| (index_of[u], index_of[l]))
            .collect();
        let incidence = self.incidence.as_ref().map(|inc| {
            inc.iter()
                .filter(|((u, l), _)| keep >> *u & 1 == 1 && keep >> *l & 1 == 1)
                .map(|((u, l), &c)| ((index_of[u], index_of[l]), c))
                .collect()
        });
        let labels = self
            .labels
            .as_ref()
            .map(|l| kept.iter().map(|&i| l[i]).collect());
        Ok(CellComplex { cells, below, covers, incidence, labels })
    }

    /// Reduced homology of the whole complex over the integers.
    pub fn reduced_homology_z(&self) -> Result<Vec<AbelianGroup>, CwError> {
        Ok(self.cochain_complex(self.full_mask())?.homology_z())
    }

    /// Reduced Betti numbers of the whole complex over a field.
    pub fn reduced_betti(&self, field: Field) -> Result<Vec<usize>, CwError> {
        Ok(self.cochain_complex(self.full_mask())?.betti(field))
    }

    /// Order complex of the nonempty cells: vertices are cells, simplices
    /// are chains.
    pub fn order_complex(&self) -> SimplicialComplex {
        let n = self.cells.len() - 1; // skip the empty cell
        let labels: Vec<String> =
            (1..self.cells.len()).map(|i| self.cells[i].name.clone()).collect();
        // Maximal chains via depth-first extension along covers.
        let mut chains: Vec<u64> = Vec::new();
        let maximal: Vec<usize> = (1..self.cells.len())
            .filter(|&i| (1..self.cells.len()).all(|j| self.below[j] >> i & 1 == 0))
            .collect();
        fn extend(
            complex: &CellComplex,
            cell: usize,
            mask: u64,
            chains: &mut Vec<u64>,
        ) {
            let lower: Vec<usize> = complex
                .covers
                .iter()
                .filter(|(u, l)| *u == cell && *l != 0)
                .map(|(_, l)| *l)
                .collect();
            if lower.is_empty() {
                chains.push(mask);
                return;
            }
            for l in lower {
                extend(complex, l, mask | 1 << (l - 1), chains);
            }
        }
        for &m in &maximal {
            extend(self, m, 1u64 << (m - 1), &mut chains);
        }
        if n == 0 {
            return SimplicialComplex::void(labels);
        }
        SimplicialComplex::from_facets(labels, chains)
    }

    /// The barycentric pair of Proposition `link-iso`: the order complex of
    /// the whole complex together with the order complex of the cells not
    /// above `sigma`. Its relative cohomology computes the cohomology of
    /// the up-set cochain complex.
    pub fn barycentric_pair(
        &self,
        sigma: usize,
    ) -> Result<(SimplicialComplex, SimplicialComplex), CwError> {
        if sigma == 0 {
            return Err(CwError::EmptyCell);
        }
        let sd = self.order_complex();
        let up = self.up_set(sigma);
        let mut away = 0u64;
        for i in 1..self.cells.len() {
            if up >> i & 1 == 0 {
                away |= 1 << (i - 1);
            }
        }
        let sd_a = sd.restrict(away);
        Ok((sd, sd_a))
    }
}

/// A cochain complex of free Z-modules indexed by cell dimension.
#[derive(Debug, Clone)]
pub struct CochainComplex {
    pub min_degree: i32,
    /// spaces[k] is the rank in degree `min_degree + k`.
    pub spaces: Vec<usize>,
    /// maps[k] : degree min_degree+k -> min_degree+k+1.
    pub maps: Vec<IntMatrix>,
}

impl CochainComplex {
    pub fn degree_index(&self, degree: i32) -> Option<usize> {
        let idx = degree - self.min_degree;
        if idx < 0 || idx as usize >= self.spaces.len() {
            None
        } else {
            Some(idx as usize)
        }
    }

    /// Verify that consecutive differentials compose to zero.
    pub fn is_complex(&self) -> bool {
        for k in 0..self.maps.len().saturating_sub(1) {
            if self.maps[k].rows() == 0 || self.maps[k].cols() == 0 {
                continue;
            }
            if !(&self.maps[k + 1] * &self.maps[k]).is_zero() {
                return false;
            }
        }
        true
    }

    /// Cohomology dimensions over a field, indexed like `spaces`.
    pub fn betti(&self, field: Field) -> Vec<usize> {
        let boundaries = self.dual_boundaries();
        chain_betti(&self.spaces, &boundaries, field)
    }

    /// Homology of the dual chain complex over the integers (for an up-set
    /// cochain complex this is the relative cellular homology the manifold
    /// diagnostics need), indexed like `spaces`.
    pub fn homology_z(&self) -> Vec<AbelianGroup> {
        let boundaries = self.dual_boundaries();
        chain_homology_z(&self.spaces, &boundaries)
    }

    fn dual_boundaries(&self) -> Vec<IntMatrix> {
        let mut out = Vec::with_capacity(self.spaces.len());
        out.push(IntMatrix::zero(0, self.spaces[0]));
        for k in 1..self.spaces.len() {
            out.push(self.maps[k - 1].transpose());
        }
        out
    }

    /// Indices (relative to `min_degree`) with nonvanishing field
    /// cohomology.
    pub fn support(&self, field: Field) -> Vec<usize> {
        self.betti(field)
            .into_iter()
            .enumerate()
            .filter(|(_, b)| *b > 0)
            .map(|(i, _)| i)
            .collect()
    }
}

/// Topes, subtopes and the boundary of the bounded complex.
#[derive(Debug, Clone)]
pub struct Strata {
    /// Cell indices of the maximal cells of the bounded complex.
    pub topes: Vec<usize>,
    /// Cell indices covered by a tope.
    pub subtopes: Vec<usize>,
    /// Cell indices of the combinatorial boundary (downward closure of
    /// free subtopes and of dangling maximal cells).
    pub boundary: Vec<usize>,
    /// Topes of the ambient covector set.
    pub ambient_topes: Vec<SignVector>,
}

impl Strata {
    /// Compute the strata of the bounded complex inside its ambient
    /// oriented matroid.
    pub fn compute(aom: &AffineOrientedMatroid, complex: &CellComplex) -> Strata {
        let n = complex.n_cells();
        let is_maximal =
            |i: usize| (1..n).all(|j| j == i || complex.below[j] >> i & 1 == 0);
        let topes: Vec<usize> = (1..n).filter(|&i| is_maximal(i)).collect();
        let tope_set: Vec<bool> = (0..n).map(|i| topes.contains(&i)).collect();
        let subtopes: Vec<usize> = (1..n)
            .filter(|&i| {
                !tope_set[i]
                    && complex
                        .covers
                        .iter()
                        .any(|&(u, l)| l == i && tope_set[u])
            })
            .collect();
        // Combinatorial boundary: seeds are cells of dimension d-1 lying
        // under at most one d-cell, and maximal cells of dimension < d;
        // the boundary is the downward closure of the seeds.
        let d = complex.dim();
        let seed: Vec<bool> = (0..n)
            .map(|i| {
                if i == 0 {
                    return false;
                }
                let dim_i = complex.cells[i].dim;
                let free_subcell = dim_i == d - 1
                    && complex
                        .covers
                        .iter()
                        .filter(|&&(u, l)| l == i && complex.cells[u].dim == d)
                        .count()
                        <= 1;
                free_subcell || (dim_i < d && is_maximal(i))
            })
            .collect();
        let mut boundary_mask = 0u128;
        for (i, &is_seed) in seed.iter().enumerate() {
            if is_seed {
                boundary_mask |= 1u128 << i;
                boundary_mask |= complex.below[i];
            }
        }
        boundary_mask &= !1u128;
        let boundary: Vec<usize> = (1..n).filter(|&i| boundary_mask >> i & 1 == 1).collect();
        let covectors = aom.om().covectors();
        let ambient_topes: Vec<SignVector> = covectors
            .iter()
            .copied()
            .filter(|v| !v.is_zero() && !covectors.iter().any(|w| v.lt(w)))
            .collect();
        Strata { topes, subtopes, boundary, ambient_topes }
    }

    pub fn boundary_mask(&self) -> u128 {
        self.boundary.iter().fold(0u128, |m, &i| m | 1u128 << i)
    }

    pub fn is_boundary_cell(&self, i: usize) -> bool {
        self.boundary.contains(&i)
    }
}

/// Convenience: the oriented bounded complex of an affine oriented matroid
/// (incidence built, no labels yet).
pub fn bounded_cell_complex(aom: &AffineOrientedMatroid) -> Result<CellComplex, CwError> {
    let mut complex = CellComplex::from_bounded_poset(&aom.bounded_complex())?;
    complex.build_incidence()?;
    Ok(complex)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// A single closed edge: two vertices under one 1-cell.
    fn edge_complex() -> CellComplex {
        // items: 0 = v1, 1 = v2, 2 = e
        let rel = |a: usize, b: usize| b == 2 && a < 2;
        let mut c = CellComplex::from_strict_order(
            3,
            rel,
            vec!["v1".into(), "v2".into(), "e".into()],
            None,
        )
        .unwrap();
        c.build_incidence().unwrap();
        c
    }

    /// A square: 4 vertices, 4 edges, one 2-cell.
    fn square_complex() -> CellComplex {
        // 0..4 vertices, 4..8 edges (edge i joins v_i and v_{i+1 mod 4}), 8 face
        let edge_ends = [(0usize, 1usize), (1, 2), (2, 3), (3, 0)];
        let rel = move |a: usize, b: usize| {
            if b == 8 {
                return a < 8;
            }
            if (4..8).contains(&b) {
                let (x, y) = edge_ends[b - 4];
                return a == x || a == y;
            }
            false
        };
        let names = (0..9).map(|i| format!("c{i}")).collect();
        let mut c = CellComplex::from_strict_order(9, rel, names, None).unwrap();
        c.build_incidence().unwrap();
        c
    }

    #[test]
    fn edge_incidences_are_opposite() {
        let c = edge_complex();
        // cells: 0 empty, 1 v1, 2 v2, 3 e
        let a = c.incidence(3, 1);
        let b = c.incidence(3, 2);
        assert_eq!(a.abs(), 1);
        assert_eq!(b.abs(), 1);
        assert_eq!(a + b, 0);
        assert_eq!(c.incidence(1, 0), 1);
    }

    #[test]
    fn square_boundary_closes() {
        let c = square_complex();
        let face = c.cells_of_dim(2)[0];
        let edges = c.cells_of_dim(1);
        // Every edge appears with coefficient +-1 and the cycle closes.
        for &e in &edges {
            assert_eq!(c.incidence(face, e).abs(), 1);
        }
        for &v in &c.cells_of_dim(0) {
            let total: i64 =
                edges.iter().map(|&e| c.incidence(face, e) * c.incidence(e, v)).sum();
            assert_eq!(total, 0);
        }
        // The square is contractible.
        let h = c.reduced_homology_z().unwrap();
        assert!(h.iter().all(AbelianGroup::is_zero));
    }

    #[test]
    fn up_set_cochain_of_edge_cell() {
        let c = edge_complex();
        let e = 3;
        let complex = c.cochain_complex(c.up_set(e)).unwrap();
        assert!(complex.is_complex());
        let betti = complex.betti(Field::Q);
        // H^1 has rank one, everything else vanishes.
        assert_eq!(betti, vec![0, 0, 1]);
    }

    #[test]
    fn barycentric_pair_of_edge_matches_cellular() {
        let c = edge_complex();
        let (sd, sd_a) = c.barycentric_pair(3).unwrap();
        let rel = crate::sr::relative_betti(&sd, &sd_a, Field::Q).unwrap();
        assert_eq!(rel, vec![0, 1]);
        assert!(matches!(c.barycentric_pair(0), Err(CwError::EmptyCell)));
    }

    #[test]
    fn orientation_flip_preserves_cohomology() {
        let mut c = square_complex();
        let before = c.cochain_complex(c.full_mask()).unwrap().betti(Field::Q);
        c.flip_orientation(5);
        assert!(c.cochain_complex(c.full_mask()).unwrap().is_complex());
        let after = c.cochain_complex(c.full_mask()).unwrap().betti(Field::Q);
        assert_eq!(before, after);
    }

    #[test]
    fn filters_and_ideals_from_labels() {
        let mut c = edge_complex();
        // v1 -> x1, v2 -> y1, e -> x1 y1.
        c.set_labels(vec![0, 0b01, 0b10, 0b11]).unwrap();
        assert_eq!(c.filter_of_degree(0).unwrap(), 0b1111);
        assert_eq!(c.filter_of_degree(0b01).unwrap(), 0b1010);
        assert_eq!(c.ideal_of_degree(0b01).unwrap(), 0b0011);
        assert!(c.is_order_filter(c.filter_of_degree(0b11).unwrap()));
    }

    #[test]
    fn non_order_preserving_labels_are_rejected() {
        let mut c = edge_complex();
        let err = c.set_labels(vec![0, 0b01, 0b10, 0b01]).unwrap_err();
        assert!(matches!(err, CwError::LabelsNotOrderPreserving { .. }));
    }

    #[test]
    fn non_filters_are_rejected_by_the_cochain_constructor() {
        let c = edge_complex();
        // A vertex alone is not an order filter (the edge above it is
        // missing).
        let err = c.cochain_complex(0b0010).unwrap_err();
        assert!(matches!(err, CwError::NotOrderFilter));
    }

    #[test]
    fn non_graded_posets_are_rejected() {
        // a < b < d and c < d: d covers both b (rank 2) and c (rank 1).
        let rel = |x: usize, y: usize| {
            matches!((x, y), (0, 1) | (0, 3) | (1, 3) | (2, 3))
        };
        let names = (0..4).map(|i| format!("c{i}")).collect();
        let err = CellComplex::from_strict_order(4, rel, names, None).unwrap_err();
        assert!(matches!(err, CwError::NotGraded { .. }));
    }

    #[test]
    fn irregular_boundaries_are_rejected() {
        // A "2-cell" glued onto two disjoint closed edges: its boundary is
        // not a homology circle, so no incidence function exists.
        // items: 0..4 vertices, 4..6 edges (0-1 and 2-3), 6 the face.
        let rel = |x: usize, y: usize| match y {
            4 => x < 2,
            5 => x == 2 || x == 3,
            6 => x < 6,
            _ => false,
        };
        let names = (0..7).map(|i| format!("c{i}")).collect();
        let mut c = CellComplex::from_strict_order(7, rel, names, None).unwrap();
        let err = c.build_incidence().unwrap_err();
        assert!(matches!(err, CwError::NotRegular(_)));
    }
}
