//! A workbench for affine oriented matroids and their matroid ideals.
//!
//! The crate builds oriented matroids from integer hyperplane arrangements
//! or raw cocircuit data, assembles the bounded complex as a regular CW
//! complex supporting the minimal cellular resolution of the matroid ideal,
//! and verifies Cohen-Macaulayness criteria, the general-position
//! equivalence, canonical-ideal degree identities and homology-manifold
//! diagnostics, all in exact arithmetic.

pub mod cw;
pub mod linalg;
pub mod monomial;
pub mod nps;
pub mod om;
pub mod realize;
pub mod report;
pub mod sign;
pub mod sr;

pub use cw::{CellComplex, CochainComplex, Strata};
pub use linalg::{AbelianGroup, Field, IntMatrix, SmithForm};
pub use monomial::{SquarefreeIdeal, VarSet};
pub use om::{AffineOrientedMatroid, CircuitFamily, OmFile, OrientedMatroid};
pub use realize::Arrangement;
pub use sign::{Sign, SignVector};
pub use sr::SimplicialComplex;
