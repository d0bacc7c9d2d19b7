//! Simplicial complexes, the Stanley-Reisner dictionary, links and
//! restrictions, reduced (co)homology over fields and the integers,
//! Reisner's Cohen-Macaulay criterion and the matroid-complex test.

use crate::linalg::{chain_betti, chain_homology_z, AbelianGroup, Field, IntMatrix};
use crate::monomial::SquarefreeIdeal;
use num_bigint::BigInt;
use rayon::prelude::*;
use std::collections::{BTreeSet, HashSet};

#[derive(Debug, Clone, thiserror::Error)]
pub enum SrError {
    #[error("{0:?} is not a face of the complex")]
    NotAFace(Vec<usize>),
    #[error("the second complex is not a subcomplex of the first")]
    NotASubcomplex,
}

/// A finite simplicial complex on an ordered vertex set, given by facets.
///
/// `facets` is an antichain of vertex masks. An empty facet set is the void
/// complex (no faces at all); the facet set `{0}` is the irrelevant complex
/// whose only face is the empty one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    n_vertices: usize,
    labels: Vec<String>,
    facets: BTreeSet<u64>,
}

impl SimplicialComplex {
    pub fn from_facets(labels: Vec<String>, facets: impl IntoIterator<Item = u64>) -> Self {
        let n_vertices = labels.len();
        assert!(n_vertices <= 64, "vertex set too large");
        let raw: Vec<u64> = facets.into_iter().collect();
        let mut maximal = BTreeSet::new();
        for &f in &raw {
            if !raw.iter().any(|&g| f & !g == 0 && f != g) {
                maximal.insert(f);
            }
        }
        SimplicialComplex { n_vertices, labels, facets: maximal }
    }

    pub fn void(labels: Vec<String>) -> Self {
        SimplicialComplex { n_vertices: labels.len(), labels, facets: BTreeSet::new() }
    }

    pub fn irrelevant(labels: Vec<String>) -> Self {
        Self::from_facets(labels, [0])
    }

    pub fn full_simplex(labels: Vec<String>) -> Self {
        let n = labels.len();
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Self::from_facets(labels, [mask])
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn facet_masks(&self) -> impl Iterator<Item = u64> + '_ {
        self.facets.iter().copied()
    }

    pub fn n_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension: `None` for the void complex, `Some(-1)` for `{0}`.
    pub fn dim(&self) -> Option<i32> {
        self.facets.iter().map(|f| f.count_ones() as i32 - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        let mut sizes = self.facets.iter().map(|f| f.count_ones());
        match sizes.next() {
            None => true,
            Some(first) => sizes.all(|s| s == first),
        }
    }

    /// All faces (including the empty face for non-void complexes).
    pub fn faces(&self) -> BTreeSet<u64> {
        let mut out = BTreeSet::new();
        for &f in &self.facets {
            let mut s = f;
            loop {
                out.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        out
    }

    pub fn is_face(&self, mask: u64) -> bool {
        self.facets.iter().any(|&f| mask & !f == 0)
    }

    /// The link of a face.
    pub fn link(&self, face: u64) -> Result<SimplicialComplex, SrError> {
        if !self.is_face(face) {
            let verts = (0..self.n_vertices).filter(|&v| face >> v & 1 == 1).collect();
            return Err(SrError::NotAFace(verts));
        }
        let facets = self
            .facets
            .iter()
            .filter(|&&f| face & !f == 0)
            .map(|&f| f & !face);
        Ok(SimplicialComplex::from_facets(self.labels.clone(), facets))
    }

    /// The induced subcomplex on a vertex subset.
    pub fn restrict(&self, vertices: u64) -> SimplicialComplex {
        if self.is_void() {
            return self.clone();
        }
        let facets = self.facets.iter().map(|&f| f & vertices);
        SimplicialComplex::from_facets(self.labels.clone(), facets)
    }

    /// Faces grouped by dimension: `grades[k]` holds the (k-1)-faces, so
    /// grade 0 is the empty face.
    fn graded_faces(&self) -> Vec<Vec<u64>> {
        let dim = match self.dim() {
            None => return Vec::new(),
            Some(d) => d,
        };
        let mut grades: Vec<Vec<u64>> = vec![Vec::new(); (dim + 2) as usize];
        for face in self.faces() {
            grades[face.count_ones() as usize].push(face);
        }
        for g in &mut grades {
            g.sort();
        }
        grades
    }

    /// Boundary matrices of the augmented chain complex; `boundaries[k]`
    /// maps (k-1)-chains to (k-2)-chains in the grading of `graded_faces`.
    fn boundary_matrices(grades: &[Vec<u64>]) -> Vec<IntMatrix> {
        let index_of: Vec<std::collections::HashMap<u64, usize>> = grades
            .iter()
            .map(|g| g.iter().copied().enumerate().map(|(i, f)| (f, i)).collect())
            .collect();
        let mut boundaries = Vec::with_capacity(grades.len());
        for k in 0..grades.len() {
            if k == 0 {
                boundaries.push(IntMatrix::zero(0, grades[0].len()));
                continue;
            }
            let mut m = IntMatrix::zero(grades[k - 1].len(), grades[k].len());
            for (col, &face) in grades[k].iter().enumerate() {
                let verts: Vec<usize> =
                    (0..64).filter(|&v| face >> v & 1 == 1).collect();
                for (pos, &v) in verts.iter().enumerate() {
                    let sub = face & !(1u64 << v);
                    let row = index_of[k - 1][&sub];
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    m[(row, col)] = BigInt::from(sign);
                }
            }
            boundaries.push(m);
        }
        boundaries
    }

    /// Reduced homology over the integers; index `k` holds degree `k - 1`,
    /// starting at the empty face in degree -1.
    pub fn reduced_homology_z(&self) -> Vec<AbelianGroup> {
        let grades = self.graded_faces();
        if grades.is_empty() {
            return Vec::new();
        }
        let dims: Vec<usize> = grades.iter().map(Vec::len).collect();
        let boundaries = Self::boundary_matrices(&grades);
        chain_homology_z(&dims, &boundaries)
    }

    /// Reduced Betti numbers over a field, indexed like
    /// [`reduced_homology_z`].
    pub fn reduced_betti(&self, field: Field) -> Vec<usize> {
        let grades = self.graded_faces();
        if grades.is_empty() {
            return Vec::new();
        }
        let dims: Vec<usize> = grades.iter().map(Vec::len).collect();
        let boundaries = Self::boundary_matrices(&grades);
        chain_betti(&dims, &boundaries, field)
    }

    /// Reduced Betti number in a single homological degree.
    pub fn reduced_betti_in_degree(&self, degree: i32, field: Field) -> usize {
        let table = self.reduced_betti(field);
        let idx = degree + 1;
        if idx < 0 || idx as usize >= table.len() {
            0
        } else {
            table[idx as usize]
        }
    }

    /// Euler characteristic (non-reduced): alternating sum of face counts.
    pub fn euler_characteristic(&self) -> i64 {
        self.faces()
            .iter()
            .filter(|&&f| f != 0)
            .map(|f| if (f.count_ones() - 1) % 2 == 0 { 1 } else { -1 })
            .sum()
    }

    /// Reisner's criterion: Cohen-Macaulay over the field iff every link
    /// (including the whole complex) has vanishing reduced homology below
    /// its dimension. Returns the first offending face as a witness.
    pub fn is_cm_reisner(&self, field: Field) -> ReisnerVerdict {
        if self.is_void() {
            return ReisnerVerdict { witness: None };
        }
        let mut by_dim: Vec<Vec<u64>> = Vec::new();
        for face in self.faces() {
            let k = face.count_ones() as usize;
            while by_dim.len() <= k {
                by_dim.push(Vec::new());
            }
            by_dim[k].push(face);
        }
        for grade in &by_dim {
            let failures: Vec<u64> = grade
                .par_iter()
                .filter(|&&face| {
                    let link = self.link(face).expect("faces enumerate from facets");
                    let Some(dim) = link.dim() else { return false };
                    if dim <= 0 {
                        return false;
                    }
                    let betti = link.reduced_betti(field);
                    (0..dim).any(|i| betti[(i + 1) as usize] != 0)
                })
                .copied()
                .collect();
            if let Some(&witness) = failures.iter().min() {
                return ReisnerVerdict { witness: Some(witness) };
            }
        }
        ReisnerVerdict { witness: None }
    }

    /// Whether the complex is the independence complex of a matroid:
    /// every vertex-restriction is pure.
    pub fn is_matroid_complex(&self) -> bool {
        let n = self.n_vertices;
        (0u64..(1 << n)).all(|subset| self.restrict(subset).is_pure())
    }

    /// Minimal non-faces (the Stanley-Reisner generators of the complex).
    pub fn minimal_nonfaces(&self) -> Vec<u64> {
        let n = self.n_vertices;
        let faces = self.faces();
        let mut nonfaces: Vec<u64> = Vec::new();
        for mask in 0u64..(1 << n) {
            if !faces.contains(&mask)
                && (0..n).all(|v| {
                    mask >> v & 1 == 0 || faces.contains(&(mask & !(1 << v)))
                })
            {
                nonfaces.push(mask);
            }
        }
        nonfaces
    }
}

/// Verdict of the Reisner test; `witness` is the first face whose link has
/// homology below its dimension.
#[derive(Debug, Clone)]
pub struct ReisnerVerdict {
    pub witness: Option<u64>,
}

impl ReisnerVerdict {
    pub fn is_cm(&self) -> bool {
        self.witness.is_none()
    }
}

/// The Stanley-Reisner complex of a squarefree monomial ideal: faces are the
/// squarefree monomials outside the ideal. The unit ideal yields the void
/// complex.
pub fn complex_from_ideal(ideal: &SquarefreeIdeal) -> SimplicialComplex {
    let vars = ideal.vars();
    let n = vars.count();
    let labels: Vec<String> = (0..n).map(|v| vars.var_name(v)).collect();
    if ideal.is_unit() {
        return SimplicialComplex::void(labels);
    }
    let mut facets: Vec<u64> = Vec::new();
    for mask in 0u64..(1 << n) {
        if ideal.contains(mask) {
            continue;
        }
        // Keep only maximal faces: adding any vertex must land in the ideal.
        if (0..n).all(|v| mask >> v & 1 == 1 || ideal.contains(mask | 1 << v)) {
            facets.push(mask);
        }
    }
    SimplicialComplex::from_facets(labels, facets)
}

/// Relative cochain Betti numbers of a simplicial pair `(X, A)` over a
/// field, indexed by cohomological degree starting at 0.
pub fn relative_betti(
    x: &SimplicialComplex,
    a: &SimplicialComplex,
    field: Field,
) -> Result<Vec<usize>, SrError> {
    let x_faces = x.faces();
    let a_faces = a.faces();
    if !a_faces.is_subset(&x_faces) {
        return Err(SrError::NotASubcomplex);
    }
    let Some(dim) = x.dim() else {
        return Ok(Vec::new());
    };
    if dim < 0 {
        return Ok(Vec::new());
    }
    // Relative cochains: faces of X not in A, graded by dimension >= 0.
    let rel: HashSet<u64> = x_faces
        .iter()
        .filter(|f| **f != 0 && !a_faces.contains(*f))
        .copied()
        .collect();
    let mut grades: Vec<Vec<u64>> = vec![Vec::new(); (dim + 1) as usize];
    for &f in &rel {
        grades[(f.count_ones() - 1) as usize].push(f);
    }
    for g in &mut grades {
        g.sort();
    }
    let index_of: Vec<std::collections::HashMap<u64, usize>> = grades
        .iter()
        .map(|g| g.iter().copied().enumerate().map(|(i, f)| (f, i)).collect())
        .collect();
    // Coboundary in degree k: for each k-face F, sum over vertices v with
    // F+v a relative face, with the usual position sign.
    let n = x.n_vertices();
    let mut maps: Vec<IntMatrix> = Vec::new();
    for k in 0..grades.len() {
        let rows = if k + 1 < grades.len() { grades[k + 1].len() } else { 0 };
        let mut m = IntMatrix::zero(rows, grades[k].len());
        if k + 1 < grades.len() {
            for (col, &face) in grades[k].iter().enumerate() {
                for v in 0..n {
                    if face >> v & 1 == 1 {
                        continue;
                    }
                    let up = face | 1 << v;
                    let Some(&row) = index_of[k + 1].get(&up) else { continue };
                    let pos = (up & ((1u64 << v) - 1)).count_ones();
                    let sign = if pos.is_multiple_of(2) { 1 } else { -1 };
                    m[(row, col)] = BigInt::from(sign);
                }
            }
        }
        maps.push(m);
    }
    // Cohomology dimensions: dim C^k - rank d^k - rank d^{k-1}.
    let mut out = Vec::new();
    for k in 0..grades.len() {
        let rank_out = if maps[k].rows() > 0 && maps[k].cols() > 0 {
            maps[k].rank(field)
        } else {
            0
        };
        let rank_in = if k > 0 && maps[k - 1].rows() > 0 && maps[k - 1].cols() > 0 {
            maps[k - 1].rank(field)
        } else {
            0
        };
        out.push(grades[k].len() - rank_out - rank_in);
    }
    Ok(out)
}
