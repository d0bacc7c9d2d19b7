//! Realization of affine oriented matroids from integer hyperplane
//! arrangements.
//!
//! An arrangement is a list of integer normal vectors in an ambient space
//! together with a distinguished normal for the affine chart. Cocircuits are
//! enumerated as the sign vectors of generators of the one-dimensional
//! intersections cut out by corank-one subsets, intersected with the row
//! space so non-essential arrangements work unchanged.

use crate::linalg::{normalize_int_vector, Field, IntMatrix};
use crate::om::{AffineOrientedMatroid, OmError, OrientedMatroid};
use crate::sign::{Sign, SignVector};
use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

#[derive(Debug, Clone, thiserror::Error)]
pub enum RealizeError {
    #[error("vector {index} has length {got}, expected ambient dimension {expected}")]
    DimensionMismatch { index: usize, got: usize, expected: usize },
    #[error("all normal vectors are zero; the arrangement spans nothing")]
    EmptyRowspace,
    #[error("the distinguished vector g is zero (a loop); pass allow_loop_g to accept")]
    GIsLoop,
    #[error(transparent)]
    Om(#[from] OmError),
}

/// An integer linear hyperplane arrangement with a distinguished element.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Arrangement {
    #[serde(default)]
    pub name: String,
    /// Ambient dimension (d + 1 for an affine arrangement in R^d).
    pub dimension: usize,
    /// Normal vectors of the hyperplanes indexed by 1..n.
    pub vectors: Vec<Vec<i64>>,
    /// Normal vector of the chart hyperplane g.
    pub g: Vec<i64>,
}

impl Arrangement {
    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("arrangement serializes")
    }

    pub fn n_hyperplanes(&self) -> usize {
        self.vectors.len()
    }

    fn validate(&self) -> Result<(), RealizeError> {
        for (i, v) in self.vectors.iter().chain(std::iter::once(&self.g)).enumerate() {
            if v.len() != self.dimension {
                return Err(RealizeError::DimensionMismatch {
                    index: i,
                    got: v.len(),
                    expected: self.dimension,
                });
            }
        }
        Ok(())
    }

    /// All normals, the `g` normal last; ground order is 1..n then g.
    fn all_normals(&self) -> Vec<Vec<BigInt>> {
        self.vectors
            .iter()
            .chain(std::iter::once(&self.g))
            .map(|v| v.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    /// Ground labels "1".."n" and "g".
    pub fn labels(&self) -> Vec<String> {
        let mut labels: Vec<String> = (1..=self.n_hyperplanes()).map(|i| i.to_string()).collect();
        labels.push("g".to_string());
        labels
    }

    /// Sign vector of a rational point: one sign per element, from the inner
    /// product with each normal.
    pub fn sign_vector_of_point(&self, point: &[BigRational]) -> SignVector {
        assert_eq!(point.len(), self.dimension, "dimension mismatch");
        let normals = self.all_normals();
        let signs: Vec<Sign> = normals
            .iter()
            .map(|normal| {
                let dot: BigRational = normal
                    .iter()
                    .zip(point)
                    .map(|(a, b)| BigRational::from_integer(a.clone()) * b)
                    .sum();
                if dot.is_zero() {
                    Sign::Zero
                } else if dot > BigRational::zero() {
                    Sign::Plus
                } else {
                    Sign::Minus
                }
            })
            .collect();
        SignVector::from_signs(&signs)
    }

    fn sign_vector_of_int_point(&self, point: &[BigInt]) -> SignVector {
        let rational: Vec<BigRational> =
            point.iter().map(|x| BigRational::from_integer(x.clone())).collect();
        self.sign_vector_of_point(&rational)
    }

    /// Enumerate the cocircuits of the realized oriented matroid.
    ///
    /// Every rank-(r-1) subset of the normals cuts the row space in a line;
    /// the sign vectors of its two generators are cocircuits, and all
    /// cocircuits arise this way.
    pub fn cocircuits(&self) -> Result<Vec<SignVector>, RealizeError> {
        self.validate()?;
        let normals = self.all_normals();
        let full = IntMatrix::from_rows(normals.clone());
        let r = full.rank(Field::Q);
        if r == 0 {
            return Err(RealizeError::EmptyRowspace);
        }
        // Rows spanning the orthogonal complement of the row space: a point
        // lies in the row space iff it annihilates the kernel basis.
        let kernel = full.kernel_basis();
        let mut lines: BTreeSet<Vec<BigInt>> = BTreeSet::new();
        let m = normals.len();
        for subset in (0..m).combinations(r - 1) {
            let mut rows: Vec<Vec<BigInt>> =
                subset.iter().map(|&i| normals[i].clone()).collect();
            let sub = IntMatrix::from_rows(rows.clone());
            if sub.rank(Field::Q) != r - 1 {
                continue;
            }
            rows.extend(kernel.iter().cloned());
            let system = IntMatrix::from_rows(rows);
            let basis = system.kernel_basis();
            debug_assert_eq!(basis.len(), 1, "corank-one subset must cut a line");
            lines.insert(normalize_int_vector(&basis[0]));
        }
        let mut cocircuits: Vec<SignVector> = Vec::new();
        for w in &lines {
            let v = self.sign_vector_of_int_point(w);
            cocircuits.push(v);
            cocircuits.push(v.opposite());
        }
        cocircuits.sort();
        cocircuits.dedup();
        Ok(cocircuits)
    }

    /// Build the affine oriented matroid of the arrangement.
    pub fn realize(&self, allow_loop_g: bool) -> Result<AffineOrientedMatroid, RealizeError> {
        self.validate()?;
        if self.g.iter().all(|&x| x == 0) && !allow_loop_g {
            return Err(RealizeError::GIsLoop);
        }
        let cocircuits = self.cocircuits()?;
        let om = OrientedMatroid::from_cocircuits(self.labels(), cocircuits)?;
        let g = self.n_hyperplanes();
        let aom = if allow_loop_g {
            AffineOrientedMatroid::new_allowing_loop_g(om, g)
        } else {
            AffineOrientedMatroid::new(om, g)?
        };
        Ok(aom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    /// The running four-plane example: lines y = 0, y = x, x = 0, x + y = 1
    /// in the chart z = 1.
    pub(crate) fn cm_arr_1() -> Arrangement {
        Arrangement {
            name: "cm-arr-1".into(),
            dimension: 3,
            vectors: vec![
                vec![0, 1, 0],
                vec![-1, 1, 0],
                vec![1, 0, 0],
                vec![1, 1, -1],
            ],
            g: vec![0, 0, 1],
        }
    }

    #[test]
    fn sign_vector_of_origin_is_zero() {
        let a = cm_arr_1();
        let v = a.sign_vector_of_point(&[rat(0), rat(0), rat(0)]);
        assert!(v.is_zero());
    }

    #[test]
    fn sign_vectors_of_named_points() {
        let a = cm_arr_1();
        assert_eq!(
            a.sign_vector_of_point(&[rat(0), rat(0), rat(1)]).to_string(),
            "000-+"
        );
        assert_eq!(
            a.sign_vector_of_point(&[rat(1), rat(1), rat(2)]).to_string(),
            "+0+0+"
        );
    }

    #[test]
    fn cocircuit_count_of_cm_arr_1() {
        let a = cm_arr_1();
        let cocircuits = a.cocircuits().unwrap();
        assert_eq!(cocircuits.len(), 16);
        let aom = a.realize(false).unwrap();
        assert_eq!(aom.om().rank(), 3);
        assert_eq!(aom.positive_cocircuits().len(), 4);
    }

    #[test]
    fn single_hyperplane_with_chart() {
        // A single hyperplane meets the chart in one cell; the arrangement
        // is central, so g is a coloop, the positive cocircuit is a lone
        // vertex and the bounded complex is empty by convention.
        let a = Arrangement {
            name: "point".into(),
            dimension: 2,
            vectors: vec![vec![1, 0]],
            g: vec![0, 1],
        };
        let aom = a.realize(false).unwrap();
        assert!(aom.g_is_coloop());
        assert_eq!(aom.positive_cocircuits(), vec!["0+".parse().unwrap()]);
        assert!(aom.bounded_complex().is_empty());
    }

    #[test]
    fn zero_g_is_rejected() {
        let a = Arrangement {
            name: "loop-g".into(),
            dimension: 2,
            vectors: vec![vec![1, 0]],
            g: vec![0, 0],
        };
        assert!(matches!(a.realize(false), Err(RealizeError::GIsLoop)));
        let aom = a.realize(true).unwrap();
        assert!(aom.g_is_loop());
        assert!(aom.bounded_complex().is_empty());
    }

    #[test]
    fn non_essential_arrangements_realize_inside_their_rowspace() {
        // Everything lives in the z = 0 coordinate plane of the ambient
        // space; corank-one subsets still cut unique lines because the
        // kernel is intersected with the row space.
        let flat = Arrangement {
            name: "flat".into(),
            dimension: 3,
            vectors: vec![vec![1, 0, 0], vec![1, 2, 0]],
            g: vec![0, 1, 0],
        };
        let aom = flat.realize(false).unwrap();
        assert_eq!(aom.om().rank(), 2);
        // Same combinatorics as the corresponding essential arrangement.
        let essential = Arrangement {
            name: "essential".into(),
            dimension: 2,
            vectors: vec![vec![1, 0], vec![1, 2]],
            g: vec![0, 1],
        };
        let reference = essential.realize(false).unwrap();
        assert_eq!(aom.om().covectors(), reference.om().covectors());
        assert_eq!(aom.bounded_complex(), reference.bounded_complex());
    }

    #[test]
    fn all_zero_arrangement_is_rejected() {
        let a = Arrangement {
            name: "nothing".into(),
            dimension: 2,
            vectors: vec![vec![0, 0]],
            g: vec![0, 0],
        };
        assert!(matches!(a.realize(true), Err(RealizeError::EmptyRowspace)));
    }
}
