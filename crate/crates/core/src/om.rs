//! Oriented matroids and affine oriented matroids.
//!
//! Covector sets are validated against the covector axioms (L0)-(L3),
//! cocircuits are the support-minimal nonzero covectors, and the full
//! covector set is regenerated from cocircuits by closing under composition.
//! The affine side adds the distinguished element `g`, the positive part,
//! the bounded complex, general position and the circuit-family machinery
//! of the general-position characterization.

use crate::sign::SignVector;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

#[derive(Debug, Clone, thiserror::Error)]
pub enum OmError {
    #[error("covector axioms violated: {0}")]
    AxiomsViolated(AxiomFailure),
    #[error("cocircuit set is not closed under negation (witness {0})")]
    NotClosedUnderNegation(SignVector),
    #[error("input vectors are not the cocircuits of their span (offender {0})")]
    NotMinimal(SignVector),
    #[error("sign vectors have mismatched ground sets")]
    GroundMismatch,
    #[error("element {0} named as g is a loop")]
    GIsLoop(String),
    #[error("no element named {0} in the ground set")]
    UnknownElement(String),
    #[error("empty covector input")]
    EmptyInput,
}

/// The four covector axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CovectorAxiom {
    L0,
    L1,
    L2,
    L3,
}

impl fmt::Display for CovectorAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CovectorAxiom::L0 => "L0",
            CovectorAxiom::L1 => "L1",
            CovectorAxiom::L2 => "L2",
            CovectorAxiom::L3 => "L3",
        };
        write!(f, "{s}")
    }
}

/// A concrete witness for the first violated covector axiom.
#[derive(Debug, Clone)]
pub struct AxiomFailure {
    pub axiom: CovectorAxiom,
    pub lambda: Option<SignVector>,
    pub mu: Option<SignVector>,
    pub element: Option<usize>,
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "axiom {}", self.axiom)?;
        if let Some(l) = &self.lambda {
            write!(f, ", lambda={l}")?;
        }
        if let Some(m) = &self.mu {
            write!(f, ", mu={m}")?;
        }
        if let Some(e) = self.element {
            write!(f, ", element index {e}")?;
        }
        Ok(())
    }
}

/// Outcome of a covector-axiom check.
#[derive(Debug, Clone)]
pub struct CovectorVerdict {
    pub failure: Option<AxiomFailure>,
}

impl CovectorVerdict {
    pub fn pass(&self) -> bool {
        self.failure.is_none()
    }
}

/// Check the covector axioms (L0)-(L3) on a set of sign vectors, returning
/// the first violation with a witness. (L3) is checked by exhaustive search
/// for the eliminating covector.
pub fn check_covector_axioms(vectors: &[SignVector]) -> CovectorVerdict {
    let fail = |axiom, lambda, mu, element| CovectorVerdict {
        failure: Some(AxiomFailure { axiom, lambda, mu, element }),
    };
    if vectors.is_empty() {
        return fail(CovectorAxiom::L0, None, None, None);
    }
    let len = vectors[0].len();
    assert!(vectors.iter().all(|v| v.len() == len), "ground set mismatch");
    let mut sorted = vectors.to_vec();
    sorted.sort();
    sorted.dedup();
    let set: HashSet<SignVector> = sorted.iter().copied().collect();

    if !set.contains(&SignVector::zero(len)) {
        return fail(CovectorAxiom::L0, None, None, None);
    }
    for v in &sorted {
        if !set.contains(&v.opposite()) {
            return fail(CovectorAxiom::L1, Some(*v), None, None);
        }
    }
    for a in &sorted {
        for b in &sorted {
            if !set.contains(&a.compose(b)) {
                return fail(CovectorAxiom::L2, Some(*a), Some(*b), None);
            }
        }
    }
    // Group covectors by the elements where they vanish, to prune the (L3)
    // search for the eliminating covector.
    let mut zero_at: Vec<Vec<SignVector>> = vec![Vec::new(); len];
    for v in &sorted {
        for (e, slot) in zero_at.iter_mut().enumerate() {
            if v.support_mask() >> e & 1 == 0 {
                slot.push(*v);
            }
        }
    }
    for a in &sorted {
        for b in &sorted {
            let sep = a.separation_mask(b);
            if sep == 0 {
                continue;
            }
            let comp = a.compose(b);
            let keep = !sep;
            for (e, candidates) in zero_at.iter().enumerate() {
                if sep >> e & 1 == 0 {
                    continue;
                }
                let found = candidates.iter().any(|nu| nu.agrees_on(&comp, keep));
                if !found {
                    return fail(CovectorAxiom::L3, Some(*a), Some(*b), Some(e));
                }
            }
        }
    }
    CovectorVerdict { failure: None }
}

/// Support-minimal elements of a family of nonzero sign vectors.
fn support_minimal(vectors: &[SignVector]) -> Vec<SignVector> {
    let mut out: Vec<SignVector> = Vec::new();
    for v in vectors {
        let vm = v.support_mask();
        if vectors.iter().any(|w| {
            let wm = w.support_mask();
            wm & !vm == 0 && wm != vm
        }) {
            continue;
        }
        out.push(*v);
    }
    out.sort();
    out.dedup();
    out
}

/// Cocircuits of a covector set: the support-minimal elements of `L \ {0}`.
pub fn cocircuits_of(covectors: &[SignVector]) -> Vec<SignVector> {
    let nonzero: Vec<SignVector> =
        covectors.iter().copied().filter(|v| !v.is_zero()).collect();
    support_minimal(&nonzero)
}

/// Cocircuits computed instead as the `<=`-minimal elements of `L \ {0}`;
/// agrees with [`cocircuits_of`] on every oriented matroid.
pub fn cocircuits_by_order(covectors: &[SignVector]) -> Vec<SignVector> {
    let nonzero: Vec<SignVector> =
        covectors.iter().copied().filter(|v| !v.is_zero()).collect();
    let mut out: Vec<SignVector> = nonzero
        .iter()
        .copied()
        .filter(|v| !nonzero.iter().any(|w| w.lt(v)))
        .collect();
    out.sort();
    out
}

/// Close a cocircuit set under composition, producing the covector set.
///
/// Fails if the input is not closed under negation or if the closure does
/// not satisfy the covector axioms (which signals invalid input).
pub fn span_from_cocircuits(cocircuits: &[SignVector]) -> Result<Vec<SignVector>, OmError> {
    if cocircuits.is_empty() {
        return Err(OmError::EmptyInput);
    }
    let len = cocircuits[0].len();
    if cocircuits.iter().any(|v| v.len() != len) {
        return Err(OmError::GroundMismatch);
    }
    let set: HashSet<SignVector> = cocircuits.iter().copied().collect();
    for v in &set {
        if !set.contains(&v.opposite()) {
            return Err(OmError::NotClosedUnderNegation(*v));
        }
    }
    let mut seen: HashSet<SignVector> = set.clone();
    seen.insert(SignVector::zero(len));
    let mut worklist: Vec<SignVector> = seen.iter().copied().collect();
    while let Some(v) = worklist.pop() {
        let snapshot: Vec<SignVector> = seen.iter().copied().collect();
        for w in snapshot {
            for c in [v.compose(&w), w.compose(&v)] {
                if seen.insert(c) {
                    worklist.push(c);
                }
            }
        }
    }
    let mut covectors: Vec<SignVector> = seen.into_iter().collect();
    covectors.sort_by_key(|v| (v.support_mask().count_ones(), *v));
    let verdict = check_covector_axioms(&covectors);
    if let Some(failure) = verdict.failure {
        return Err(OmError::AxiomsViolated(failure));
    }
    Ok(covectors)
}

/// An oriented matroid given by its covector set.
#[derive(Debug, Clone)]
pub struct OrientedMatroid {
    labels: Vec<String>,
    covectors: Vec<SignVector>,
    covector_set: HashSet<SignVector>,
    cocircuits: Vec<SignVector>,
    poset_rank: HashMap<SignVector, usize>,
    rank: usize,
    loops: u64,
    coloops: u64,
}

impl OrientedMatroid {
    /// Build from a covector set, validating the axioms.
    pub fn from_covectors(
        labels: Vec<String>,
        covectors: Vec<SignVector>,
    ) -> Result<Self, OmError> {
        let mut covectors = covectors;
        covectors.sort_by_key(|v| (v.support_mask().count_ones(), *v));
        covectors.dedup();
        let verdict = check_covector_axioms(&covectors);
        if let Some(failure) = verdict.failure {
            return Err(OmError::AxiomsViolated(failure));
        }
        let n = covectors[0].len();
        assert_eq!(labels.len(), n, "label count must match ground size");
        let covector_set: HashSet<SignVector> = covectors.iter().copied().collect();
        let cocircuits = cocircuits_of(&covectors);

        // Poset rank: longest chain below each covector. Covectors are
        // sorted by support size, which refines the order.
        let mut poset_rank: HashMap<SignVector, usize> = HashMap::new();
        for v in &covectors {
            if v.is_zero() {
                poset_rank.insert(*v, 0);
                continue;
            }
            let r = covectors
                .iter()
                .filter(|w| (*w).lt(v))
                .map(|w| poset_rank[w])
                .max()
                .unwrap_or(0)
                + 1;
            poset_rank.insert(*v, r);
        }
        let rank = poset_rank.values().copied().max().unwrap_or(0);

        let mut support_union = 0u64;
        for v in &covectors {
            support_union |= v.support_mask();
        }
        let ground_mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let loops = !support_union & ground_mask;
        let mut coloops = 0u64;
        for c in &cocircuits {
            let m = c.support_mask();
            if m.count_ones() == 1 {
                coloops |= m;
            }
        }

        Ok(OrientedMatroid {
            labels,
            covectors,
            covector_set,
            cocircuits,
            poset_rank,
            rank,
            loops,
            coloops,
        })
    }

    /// Build from a cocircuit set; covectors are regenerated by composition
    /// closure and the input must be exactly the minimal covectors of the
    /// span.
    pub fn from_cocircuits(
        labels: Vec<String>,
        cocircuits: Vec<SignVector>,
    ) -> Result<Self, OmError> {
        let covectors = span_from_cocircuits(&cocircuits)?;
        let om = Self::from_covectors(labels, covectors)?;
        let mut given = cocircuits;
        given.sort();
        given.dedup();
        if given != om.cocircuits {
            let offender = given
                .iter()
                .find(|v| !om.cocircuits.contains(v))
                .copied()
                .unwrap_or_else(|| om.cocircuits[0]);
            return Err(OmError::NotMinimal(offender));
        }
        Ok(om)
    }

    pub fn ground_size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn covectors(&self) -> &[SignVector] {
        &self.covectors
    }

    pub fn cocircuits(&self) -> &[SignVector] {
        &self.cocircuits
    }

    pub fn contains(&self, v: &SignVector) -> bool {
        self.covector_set.contains(v)
    }

    /// Rank: the length of a maximal chain in the covector poset.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Rank of a covector in the poset (0 for the zero vector).
    pub fn poset_rank(&self, v: &SignVector) -> usize {
        self.poset_rank[v]
    }

    pub fn loops_mask(&self) -> u64 {
        self.loops
    }

    pub fn coloops_mask(&self) -> u64 {
        self.coloops
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.loops >> e & 1 == 1
    }

    pub fn is_coloop(&self, e: usize) -> bool {
        self.coloops >> e & 1 == 1
    }

    /// Restriction to the elements listed in `f` (in the given order).
    pub fn restriction(&self, f: &[usize]) -> Result<OrientedMatroid, OmError> {
        let labels = f.iter().map(|&e| self.labels[e].clone()).collect();
        let mut covectors: Vec<SignVector> =
            self.covectors.iter().map(|v| v.restrict(f)).collect();
        covectors.sort();
        covectors.dedup();
        OrientedMatroid::from_covectors(labels, covectors)
    }

    /// Contraction by the elements in `a`: covectors vanishing on `a`,
    /// viewed on the remaining ground set.
    pub fn contraction(&self, a: &[usize]) -> Result<OrientedMatroid, OmError> {
        let mut away = 0u64;
        for &e in a {
            away |= 1 << e;
        }
        let keep: Vec<usize> = (0..self.ground_size()).filter(|e| away >> e & 1 == 0).collect();
        let labels = keep.iter().map(|&e| self.labels[e].clone()).collect();
        let mut covectors: Vec<SignVector> = self
            .covectors
            .iter()
            .filter(|v| v.support_mask() & away == 0)
            .map(|v| v.restrict(&keep))
            .collect();
        covectors.sort();
        covectors.dedup();
        OrientedMatroid::from_covectors(labels, covectors)
    }

    /// Restriction of the cocircuit set: `Min { c|_F : c cocircuit meeting F }`.
    pub fn restricted_cocircuits(&self, f: &[usize]) -> Vec<SignVector> {
        let restricted: Vec<SignVector> = self
            .cocircuits
            .iter()
            .map(|c| c.restrict(f))
            .filter(|c| !c.is_zero())
            .collect();
        support_minimal(&restricted)
    }

    /// Whether element `e` is in general position: `e` is not a coloop and
    /// every restricted cocircuit on `E - e` is the restriction of a
    /// cocircuit whose support contains `e`.
    pub fn in_general_position(&self, e: usize) -> bool {
        if self.is_coloop(e) {
            return false;
        }
        let rest: Vec<usize> = (0..self.ground_size()).filter(|&x| x != e).collect();
        let restricted = self.restricted_cocircuits(&rest);
        let through_e: HashSet<SignVector> = self
            .cocircuits
            .iter()
            .filter(|c| c.support_mask() >> e & 1 == 1)
            .map(|c| c.restrict(&rest))
            .collect();
        restricted.iter().all(|c| through_e.contains(c))
    }
}

/// An affine oriented matroid: an oriented matroid with a distinguished
/// element `g` that is not a loop (unless explicitly allowed, in which case
/// the matroid ideal is zero and the bounded complex empty).
#[derive(Debug, Clone)]
pub struct AffineOrientedMatroid {
    om: OrientedMatroid,
    g: usize,
    g_is_loop: bool,
}

impl AffineOrientedMatroid {
    pub fn new(om: OrientedMatroid, g: usize) -> Result<Self, OmError> {
        if om.is_loop(g) {
            return Err(OmError::GIsLoop(om.labels[g].clone()));
        }
        Ok(AffineOrientedMatroid { om, g, g_is_loop: false })
    }

    /// Constructor that tolerates `g` being a loop (the degenerate
    /// convention with zero matroid ideal and empty bounded complex).
    pub fn new_allowing_loop_g(om: OrientedMatroid, g: usize) -> Self {
        let g_is_loop = om.is_loop(g);
        AffineOrientedMatroid { om, g, g_is_loop }
    }

    pub fn om(&self) -> &OrientedMatroid {
        &self.om
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn g_is_loop(&self) -> bool {
        self.g_is_loop
    }

    pub fn g_is_coloop(&self) -> bool {
        self.om.is_coloop(self.g)
    }

    /// Indices of the non-`g` elements, in ground order. These carry the
    /// variable indices 1..n of the polynomial ring.
    pub fn hyperplane_elements(&self) -> Vec<usize> {
        (0..self.om.ground_size()).filter(|&e| e != self.g).collect()
    }

    /// Covectors with positive sign at `g`.
    pub fn positive_part(&self) -> Vec<SignVector> {
        self.om
            .covectors
            .iter()
            .copied()
            .filter(|v| v.get(self.g) == crate::sign::Sign::Plus)
            .collect()
    }

    /// Cocircuits with positive sign at `g`.
    pub fn positive_cocircuits(&self) -> Vec<SignVector> {
        self.om
            .cocircuits
            .iter()
            .copied()
            .filter(|v| v.get(self.g) == crate::sign::Sign::Plus)
            .collect()
    }

    /// The bounded complex: covectors in the positive part whose whole
    /// lower interval (minus zero) stays in the positive part. Empty when
    /// `g` is a loop or a coloop.
    pub fn bounded_complex(&self) -> Vec<SignVector> {
        if self.g_is_loop || self.g_is_coloop() {
            return Vec::new();
        }
        let positive: Vec<SignVector> = self.positive_part();
        positive
            .into_iter()
            .filter(|v| {
                self.om.covectors.iter().all(|w| {
                    w.is_zero()
                        || !w.leq(v)
                        || w.get(self.g) == crate::sign::Sign::Plus
                })
            })
            .collect()
    }

    pub fn is_general_position(&self) -> bool {
        self.om.in_general_position(self.g)
    }

    /// Full-rank test: every non-loop element appears in the support of
    /// some bounded covector. Also reports the rank of the bounded complex
    /// as a poset (`None` when the bounded complex is empty).
    pub fn full_rank(&self) -> FullRankReport {
        let bounded = self.bounded_complex();
        let mut support_union = 0u64;
        let mut max_rank = None;
        for v in &bounded {
            support_union |= v.support_mask();
            let r = self.om.poset_rank(v);
            max_rank = Some(max_rank.map_or(r, |m: usize| m.max(r)));
        }
        let full_rank = (0..self.om.ground_size())
            .all(|e| self.om.is_loop(e) || support_union >> e & 1 == 1);
        FullRankReport { full_rank, bounded_poset_rank: max_rank.map(|r| r - 1) }
    }

    /// Supports in `[n]` of either the positive cocircuits or of the
    /// restriction of all cocircuits to `[n]`, as a circuit family.
    pub fn underlying_restricted_circuits(&self, positive_only: bool) -> CircuitFamily {
        let hyperplanes = self.hyperplane_elements();
        let supports: Vec<u64> = if positive_only {
            self.positive_cocircuits()
                .iter()
                .map(|c| c.restrict(&hyperplanes).support_mask())
                .filter(|&m| m != 0)
                .collect()
        } else {
            self.om
                .restricted_cocircuits(&hyperplanes)
                .iter()
                .map(|c| c.support_mask())
                .collect()
        };
        CircuitFamily::from_masks(hyperplanes.len(), supports)
    }

    /// Contraction by a non-`g` element, staying affine.
    pub fn contraction(&self, e: usize) -> Result<AffineOrientedMatroid, OmError> {
        assert_ne!(e, self.g, "cannot contract the distinguished element");
        let om = self.om.contraction(&[e])?;
        let new_g = if e < self.g { self.g - 1 } else { self.g };
        Ok(AffineOrientedMatroid::new_allowing_loop_g(om, new_g))
    }
}

/// Result of the full-rank test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FullRankReport {
    pub full_rank: bool,
    /// Poset rank of the bounded complex (its dimension as a CW complex).
    pub bounded_poset_rank: Option<usize>,
}

/// A family of subsets of `{0, .., n-1}` meant to be matroid circuits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitFamily {
    ground_size: usize,
    circuits: BTreeSet<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CircuitFailure {
    EmptyCircuit,
    EliminationFails { a: Vec<usize>, b: Vec<usize>, e: usize },
}

impl fmt::Display for CircuitFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CircuitFailure::EmptyCircuit => write!(f, "the empty set is a circuit"),
            CircuitFailure::EliminationFails { a, b, e } => write!(
                f,
                "elimination fails for {a:?} and {b:?} at element {e}"
            ),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CircuitVerdict {
    pub failure: Option<CircuitFailure>,
}

impl CircuitVerdict {
    pub fn pass(&self) -> bool {
        self.failure.is_none()
    }
}

impl CircuitFamily {
    pub fn from_masks(ground_size: usize, masks: Vec<u64>) -> Self {
        // Keep only inclusion-minimal members.
        let mut minimal = BTreeSet::new();
        for &m in &masks {
            if !masks.iter().any(|&w| w & !m == 0 && w != m) {
                minimal.insert(m);
            }
        }
        CircuitFamily { ground_size, circuits: minimal }
    }

    pub fn from_sets(ground_size: usize, sets: &[Vec<usize>]) -> Self {
        let masks = sets
            .iter()
            .map(|s| s.iter().fold(0u64, |m, &e| m | 1 << e))
            .collect();
        Self::from_masks(ground_size, masks)
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn circuits(&self) -> Vec<Vec<usize>> {
        self.circuits
            .iter()
            .map(|&m| (0..self.ground_size).filter(|&e| m >> e & 1 == 1).collect())
            .collect()
    }

    pub fn len(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }

    /// Circuit axioms: no empty circuit, members form an antichain (by
    /// construction) and the elimination axiom holds.
    pub fn check_axioms(&self) -> CircuitVerdict {
        let to_set = |m: u64| -> Vec<usize> {
            (0..self.ground_size).filter(|&e| m >> e & 1 == 1).collect()
        };
        if self.circuits.contains(&0) {
            return CircuitVerdict { failure: Some(CircuitFailure::EmptyCircuit) };
        }
        for &a in &self.circuits {
            for &b in &self.circuits {
                if a == b {
                    continue;
                }
                let common = a & b;
                if common == 0 {
                    continue;
                }
                for e in 0..self.ground_size {
                    if common >> e & 1 == 0 {
                        continue;
                    }
                    let target = (a | b) & !(1u64 << e);
                    if !self.circuits.iter().any(|&c| c & !target == 0) {
                        return CircuitVerdict {
                            failure: Some(CircuitFailure::EliminationFails {
                                a: to_set(a),
                                b: to_set(b),
                                e,
                            }),
                        };
                    }
                }
            }
        }
        CircuitVerdict { failure: None }
    }

    /// Matroid rank: the maximum size of a subset containing no circuit.
    pub fn matroid_rank(&self) -> usize {
        let n = self.ground_size;
        let mut best = 0;
        for subset in 0u64..(1 << n) {
            if subset.count_ones() as usize <= best {
                continue;
            }
            if self.circuits.iter().all(|&c| c & !subset != 0) {
                best = subset.count_ones() as usize;
            }
        }
        best
    }

    /// Independent sets: subsets containing no circuit. Used to build the
    /// independence complex.
    pub fn is_independent(&self, subset: u64) -> bool {
        self.circuits.iter().all(|&c| c & !subset != 0)
    }
}

/// On-disk description of an oriented matroid.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OmFile {
    pub elements: Vec<serde_json::Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<serde_json::Value>,
    pub cocircuits: Vec<String>,
}

fn element_name(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

impl OmFile {
    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("OM file serializes")
    }

    /// Reconstruct the oriented matroid (and the affine structure when `g`
    /// is named).
    pub fn build(
        &self,
        allow_loop_g: bool,
    ) -> Result<(OrientedMatroid, Option<AffineOrientedMatroid>), OmError> {
        let labels: Vec<String> = self.elements.iter().map(element_name).collect();
        let mut cocircuits = Vec::new();
        for s in &self.cocircuits {
            let v: SignVector = s
                .parse()
                .map_err(|_| OmError::UnknownElement(format!("bad sign string {s:?}")))?;
            if v.len() != labels.len() {
                return Err(OmError::GroundMismatch);
            }
            cocircuits.push(v);
        }
        let om = OrientedMatroid::from_cocircuits(labels.clone(), cocircuits)?;
        let affine = match &self.g {
            None => None,
            Some(gv) => {
                let name = element_name(gv);
                let g = labels
                    .iter()
                    .position(|l| *l == name)
                    .ok_or(OmError::UnknownElement(name))?;
                let aom = if allow_loop_g {
                    AffineOrientedMatroid::new_allowing_loop_g(om.clone(), g)
                } else {
                    AffineOrientedMatroid::new(om.clone(), g)?
                };
                Some(aom)
            }
        };
        Ok((om, affine))
    }

    /// Serialize an affine oriented matroid.
    pub fn from_affine(aom: &AffineOrientedMatroid) -> OmFile {
        let om = aom.om();
        let mut cocircuits: Vec<String> =
            om.cocircuits().iter().map(|c| c.to_string()).collect();
        cocircuits.sort();
        OmFile {
            elements: om
                .labels()
                .iter()
                .map(|l| serde_json::Value::String(l.clone()))
                .collect(),
            g: Some(serde_json::Value::String(om.labels()[aom.g()].clone())),
            cocircuits,
        }
    }
}
