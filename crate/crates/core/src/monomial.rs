//! Squarefree monomial ideals over the polynomial rings `k[x_1..x_n]` and
//! `k[x_1..x_n, y_1..y_n]`.
//!
//! Monomials are variable subsets stored as bitmasks. Variable index `i-1`
//! is `x_i`; in the doubled ring, index `n+i-1` is `y_i`. Generating sets
//! are kept inclusion-minimal, so ideal membership of a squarefree monomial
//! is a divisibility scan.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// The ambient variable set of an ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VarSet {
    /// `x_1..x_n, y_1..y_n`.
    XY(usize),
    /// `x_1..x_n`.
    X(usize),
}

impl VarSet {
    pub fn count(&self) -> usize {
        match *self {
            VarSet::XY(n) => 2 * n,
            VarSet::X(n) => n,
        }
    }

    pub fn hyperplanes(&self) -> usize {
        match *self {
            VarSet::XY(n) | VarSet::X(n) => n,
        }
    }

    pub fn full_mask(&self) -> u64 {
        let c = self.count();
        if c == 64 {
            u64::MAX
        } else {
            (1u64 << c) - 1
        }
    }

    pub fn var_name(&self, index: usize) -> String {
        match *self {
            VarSet::XY(n) => {
                if index < n {
                    format!("x{}", index + 1)
                } else {
                    format!("y{}", index + 1 - n)
                }
            }
            VarSet::X(_) => format!("x{}", index + 1),
        }
    }

    /// Render a variable subset as a monomial, factors ordered x before y by
    /// ascending index ("1" for the empty monomial).
    pub fn monomial_string(&self, mask: u64) -> String {
        if mask == 0 {
            return "1".to_string();
        }
        let parts: Vec<String> = (0..self.count())
            .filter(|&v| mask >> v & 1 == 1)
            .map(|v| self.var_name(v))
            .collect();
        parts.join("*")
    }
}

/// A squarefree monomial ideal with an inclusion-minimal generating set.
///
/// The zero ideal has no generators; the unit ideal is generated by the
/// empty monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeIdeal {
    vars: VarSet,
    gens: BTreeSet<u64>,
}

impl SquarefreeIdeal {
    pub fn new(vars: VarSet, gens: impl IntoIterator<Item = u64>) -> Self {
        let raw: Vec<u64> = gens.into_iter().collect();
        let mut minimal = BTreeSet::new();
        for &g in &raw {
            debug_assert_eq!(g & !vars.full_mask(), 0, "generator outside variable set");
            if !raw.iter().any(|&h| h & !g == 0 && h != g) {
                minimal.insert(g);
            }
        }
        SquarefreeIdeal { vars, gens: minimal }
    }

    pub fn zero(vars: VarSet) -> Self {
        SquarefreeIdeal { vars, gens: BTreeSet::new() }
    }

    pub fn unit(vars: VarSet) -> Self {
        SquarefreeIdeal { vars, gens: std::iter::once(0).collect() }
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.contains(&0)
    }

    pub fn generator_masks(&self) -> impl Iterator<Item = u64> + '_ {
        self.gens.iter().copied()
    }

    pub fn n_generators(&self) -> usize {
        self.gens.len()
    }

    /// Whether the squarefree monomial with this support lies in the ideal.
    pub fn contains(&self, monomial: u64) -> bool {
        self.gens.iter().any(|&g| g & !monomial == 0)
    }

    /// Generators rendered as monomial strings, sorted lexicographically.
    pub fn generator_strings(&self) -> Vec<String> {
        let mut out: Vec<String> =
            self.gens.iter().map(|&g| self.vars.monomial_string(g)).collect();
        out.sort();
        out
    }

    /// Image under the specialization `y_i -> x_i`, re-minimalized.
    pub fn specialize(&self) -> SquarefreeIdeal {
        match self.vars {
            VarSet::X(_) => self.clone(),
            VarSet::XY(n) => {
                let gens = self.gens.iter().map(|&g| {
                    let x_part = g & ((1u64 << n) - 1);
                    let y_part = g >> n;
                    x_part | y_part
                });
                SquarefreeIdeal::new(VarSet::X(n), gens)
            }
        }
    }
}

impl fmt::Display for SquarefreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "({})", self.generator_strings().join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy4() -> VarSet {
        VarSet::XY(4)
    }

    fn mask(vars: &[usize]) -> u64 {
        vars.iter().fold(0, |m, &v| m | 1 << v)
    }

    #[test]
    fn monomial_rendering_orders_x_before_y() {
        let v = xy4();
        // x3 * y2 (indices 2 and 5 with n = 4).
        assert_eq!(v.monomial_string(mask(&[2, 5])), "x3*y2");
        assert_eq!(v.monomial_string(0), "1");
    }

    #[test]
    fn generators_are_minimalized() {
        let i = SquarefreeIdeal::new(xy4(), [mask(&[0]), mask(&[0, 1]), mask(&[2, 3])]);
        assert_eq!(i.n_generators(), 2);
        assert!(i.contains(mask(&[0, 5])));
        assert!(!i.contains(mask(&[1, 2])));
    }

    #[test]
    fn specialization_merges_xy_pairs() {
        // (x1*x2, x1*x3, y2*x3, y4) with n = 4.
        let o = SquarefreeIdeal::new(
            xy4(),
            [mask(&[0, 1]), mask(&[0, 2]), mask(&[5, 2]), mask(&[7])],
        );
        let bar = o.specialize();
        assert_eq!(
            bar.generator_strings(),
            vec!["x1*x2", "x1*x3", "x2*x3", "x4"]
        );
    }

    #[test]
    fn specialization_of_y_free_ideal_is_identity_on_generators() {
        let o = SquarefreeIdeal::new(VarSet::XY(3), [mask(&[0]), mask(&[1])]);
        assert_eq!(o.specialize().generator_strings(), vec!["x1", "x2"]);
    }

    #[test]
    fn unit_and_zero_sentinels() {
        assert!(SquarefreeIdeal::unit(xy4()).is_unit());
        assert!(SquarefreeIdeal::zero(xy4()).is_zero());
        assert!(SquarefreeIdeal::unit(xy4()).contains(0));
        assert!(!SquarefreeIdeal::zero(xy4()).contains(mask(&[0])));
    }
}
