//! Exact linear algebra over the rationals, prime fields and the integers.
//!
//! Everything here works with arbitrary-precision scalars: ranks are computed
//! by fraction-free (Bareiss) elimination, kernels by rational Gauss–Jordan
//! with an integer renormalization, and integral structure by Smith normal
//! form with unimodular transforms. These kernels back cocircuit enumeration
//! and all (co)homology computations.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Coefficient field for rank computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    /// The rational numbers.
    Q,
    /// The prime field with `p` elements.
    Fp(u64),
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Q => write!(f, "Q"),
            Field::Fp(p) => write!(f, "F{p}"),
        }
    }
}

/// Dense matrix with arbitrary-precision integer entries, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BigInt::is_zero)
    }

    /// Row rank over the given field.
    pub fn rank(&self, field: Field) -> usize {
        match field {
            Field::Q => self.rank_q(),
            Field::Fp(p) => self.rank_fp(p),
        }
    }

    /// Rank over the rationals by fraction-free Bareiss elimination.
    fn rank_q(&self) -> usize {
        let mut a = self.data.clone();
        let (m, n) = (self.rows, self.cols);
        let at = |a: &[BigInt], i: usize, j: usize| a[i * n + j].clone();
        let mut prev = BigInt::one();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..n {
            if row == m {
                break;
            }
            let Some(piv) = (row..m).find(|&i| !a[i * n + col].is_zero()) else {
                continue;
            };
            if piv != row {
                for j in 0..n {
                    a.swap(row * n + j, piv * n + j);
                }
            }
            let pivot = at(&a, row, col);
            for i in row + 1..m {
                for j in col + 1..n {
                    let v = &pivot * &a[i * n + j] - &a[i * n + col] * &a[row * n + j];
                    a[i * n + j] = &v / &prev;
                }
                a[i * n + col] = BigInt::zero();
            }
            prev = pivot;
            rank += 1;
            row += 1;
        }
        rank
    }

    /// Rank over the prime field F_p by Gaussian elimination on residues.
    fn rank_fp(&self, p: u64) -> usize {
        assert!(p >= 2, "modulus must be a prime >= 2");
        let p_big = BigInt::from(p);
        let (m, n) = (self.rows, self.cols);
        let mut a: Vec<u64> = self
            .data
            .iter()
            .map(|x| {
                let r = x.mod_floor(&p_big);
                u64::try_from(r).expect("residue fits in u64")
            })
            .collect();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..n {
            if row == m {
                break;
            }
            let Some(piv) = (row..m).find(|&i| !a[i * n + col].is_multiple_of(p)) else {
                continue;
            };
            for j in 0..n {
                a.swap(row * n + j, piv * n + j);
            }
            let inv = mod_inverse(a[row * n + col] % p, p);
            for j in col..n {
                a[row * n + j] = mulmod(a[row * n + j] % p, inv, p);
            }
            for i in 0..m {
                if i != row && !a[i * n + col].is_multiple_of(p) {
                    let f = a[i * n + col] % p;
                    for j in col..n {
                        let sub = mulmod(f, a[row * n + j], p);
                        a[i * n + j] = (a[i * n + j] % p + p - sub) % p;
                    }
                }
            }
            rank += 1;
            row += 1;
        }
        rank
    }

    /// Basis of the right kernel over the rationals.
    ///
    /// Each basis vector is rescaled to integer entries of content 1 with the
    /// first nonzero entry positive, so downstream enumeration is
    /// deterministic. The basis size is always `cols - rank`.
    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        let (m, n) = (self.rows, self.cols);
        let mut a: Vec<BigRational> =
            self.data.iter().map(|x| BigRational::from_integer(x.clone())).collect();
        // Gauss-Jordan to reduced row echelon form.
        let mut pivot_cols = Vec::new();
        let mut row = 0;
        for col in 0..n {
            if row == m {
                break;
            }
            let Some(piv) = (row..m).find(|&i| !a[i * n + col].is_zero()) else {
                continue;
            };
            for j in 0..n {
                a.swap(row * n + j, piv * n + j);
            }
            let inv = a[row * n + col].recip();
            for j in col..n {
                let v = &a[row * n + j] * &inv;
                a[row * n + j] = v;
            }
            for i in 0..m {
                if i != row && !a[i * n + col].is_zero() {
                    let f = a[i * n + col].clone();
                    for j in col..n {
                        let v = &a[i * n + j] - &f * &a[row * n + j];
                        a[i * n + j] = v;
                    }
                }
            }
            pivot_cols.push(col);
            row += 1;
        }
        let mut basis = Vec::new();
        let mut pivot_iter = pivot_cols.iter().copied().peekable();
        let mut free_cols = Vec::new();
        for col in 0..n {
            if pivot_iter.peek() == Some(&col) {
                pivot_iter.next();
            } else {
                free_cols.push(col);
            }
        }
        for &fc in &free_cols {
            let mut v = vec![BigRational::zero(); n];
            v[fc] = BigRational::one();
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -a[r * n + fc].clone();
            }
            basis.push(normalize_rational_vector(&v));
        }
        basis
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * &other[(k, j)];
                    out[(i, j)] += add;
                }
            }
        }
        out
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a nonzero mod p.
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mulmod(result, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    result
}

/// Scale a rational vector to integer entries with content 1 and first
/// nonzero entry positive.
pub fn normalize_rational_vector(v: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in v {
        if !x.is_zero() {
            lcm = lcm.lcm(x.denom());
        }
    }
    let mut ints: Vec<BigInt> =
        v.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let mut content = BigInt::zero();
    for x in &ints {
        content = content.gcd(x);
    }
    if !content.is_zero() && !content.is_one() {
        for x in &mut ints {
            *x /= &content;
        }
    }
    if let Some(first) = ints.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in &mut ints {
                *x = -x.clone();
            }
        }
    }
    ints
}

/// Normalize an integer vector to content 1 with first nonzero entry positive.
pub fn normalize_int_vector(v: &[BigInt]) -> Vec<BigInt> {
    let rats: Vec<BigRational> = v.iter().map(|x| BigRational::from_integer(x.clone())).collect();
    normalize_rational_vector(&rats)
}

/// Smith normal form `U * A * V = D` with unimodular `U`, `V` and a
/// nonnegative diagonal satisfying the divisibility chain d_1 | d_2 | ...
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SmithForm {
    /// Number of nonzero diagonal entries (the integer rank).
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    /// Invariant factors strictly greater than 1.
    pub fn torsion(&self) -> Vec<BigUint> {
        self.diagonal
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .map(|d| d.magnitude().clone())
            .collect()
    }
}

/// Smith normal form of an integer matrix.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (m, n) = (a.rows(), a.cols());
    let mut a = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    let swap_rows = |a: &mut IntMatrix, u: &mut IntMatrix, r1: usize, r2: usize| {
        if r1 == r2 {
            return;
        }
        for j in 0..n {
            let tmp = a[(r1, j)].clone();
            a[(r1, j)] = a[(r2, j)].clone();
            a[(r2, j)] = tmp;
        }
        for j in 0..m {
            let tmp = u[(r1, j)].clone();
            u[(r1, j)] = u[(r2, j)].clone();
            u[(r2, j)] = tmp;
        }
    };
    let swap_cols = |a: &mut IntMatrix, v: &mut IntMatrix, c1: usize, c2: usize| {
        if c1 == c2 {
            return;
        }
        for i in 0..m {
            let tmp = a[(i, c1)].clone();
            a[(i, c1)] = a[(i, c2)].clone();
            a[(i, c2)] = tmp;
        }
        for i in 0..n {
            let tmp = v[(i, c1)].clone();
            v[(i, c1)] = v[(i, c2)].clone();
            v[(i, c2)] = tmp;
        }
    };
    // row[r1] -= q * row[r2]
    let row_sub = |a: &mut IntMatrix, u: &mut IntMatrix, r1: usize, r2: usize, q: &BigInt| {
        for j in 0..n {
            let s = q * &a[(r2, j)];
            a[(r1, j)] -= s;
        }
        for j in 0..m {
            let s = q * &u[(r2, j)];
            u[(r1, j)] -= s;
        }
    };
    let col_sub = |a: &mut IntMatrix, v: &mut IntMatrix, c1: usize, c2: usize, q: &BigInt| {
        for i in 0..m {
            let s = q * &a[(i, c2)];
            a[(i, c1)] -= s;
        }
        for i in 0..n {
            let s = q * &v[(i, c2)];
            v[(i, c1)] -= s;
        }
    };

    let mut t = 0;
    while t < m.min(n) {
        // Locate a nonzero entry of minimal absolute value in the submatrix.
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if !a[(i, j)].is_zero()
                    && best.is_none_or(|(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        swap_rows(&mut a, &mut u, t, bi);
        swap_cols(&mut a, &mut v, t, bj);

        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if !a[(i, t)].is_zero() {
                    let q = rounded_div(&a[(i, t)], &a[(t, t)]);
                    row_sub(&mut a, &mut u, i, t, &q);
                    if !a[(i, t)].is_zero() {
                        swap_rows(&mut a, &mut u, t, i);
                        dirty = true;
                    }
                }
            }
            for j in t + 1..n {
                if !a[(t, j)].is_zero() {
                    let q = rounded_div(&a[(t, j)], &a[(t, t)]);
                    col_sub(&mut a, &mut v, j, t, &q);
                    if !a[(t, j)].is_zero() {
                        swap_cols(&mut a, &mut v, t, j);
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // Pivot divides its row and column; enforce divisibility of the
            // rest of the submatrix so the diagonal forms a chain.
            let mut offending = None;
            'scan: for i in t + 1..m {
                for j in t + 1..n {
                    if !(&a[(i, j)] % &a[(t, t)]).is_zero() {
                        offending = Some(i);
                        break 'scan;
                    }
                }
            }
            match offending {
                Some(i) => {
                    let minus_one = BigInt::from(-1);
                    row_sub(&mut a, &mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        t += 1;
    }

    // Make the diagonal nonnegative (negating a row keeps U unimodular).
    for i in 0..m.min(n) {
        if a[(i, i)].is_negative() {
            for j in 0..n {
                let neg = -a[(i, j)].clone();
                a[(i, j)] = neg;
            }
            for j in 0..m {
                let neg = -u[(i, j)].clone();
                u[(i, j)] = neg;
            }
        }
    }

    let diagonal = (0..m.min(n)).map(|i| a[(i, i)].clone()).collect();
    SmithForm { diagonal, left: u, right: v }
}

fn rounded_div(a: &BigInt, b: &BigInt) -> BigInt {
    // Round-to-nearest quotient keeps remainders small.
    let (q, r) = a.div_rem(b);
    if &r.abs() * 2 > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Determinant by fraction-free elimination (used by tests to certify that
/// Smith transforms are unimodular).
pub fn determinant(a: &IntMatrix) -> BigInt {
    assert_eq!(a.rows(), a.cols(), "determinant of a non-square matrix");
    let n = a.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.clone();
    let mut prev = BigInt::one();
    let mut sign = 1i32;
    for k in 0..n - 1 {
        if m[(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                let tmp = m[(k, j)].clone();
                m[(k, j)] = m[(p, j)].clone();
                m[(p, j)] = tmp;
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[(k, k)] * &m[(i, j)] - &m[(i, k)] * &m[(k, j)];
                m[(i, j)] = &v / &prev;
            }
            m[(i, k)] = BigInt::zero();
        }
        prev = m[(k, k)].clone();
    }
    let d = m[(n - 1, n - 1)].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// A finitely generated abelian group, as a free rank plus torsion factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    pub rank: usize,
    pub torsion: Vec<BigUint>,
}

impl AbelianGroup {
    pub fn zero() -> Self {
        AbelianGroup { rank: 0, torsion: Vec::new() }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup { rank, torsion: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free_of_rank(&self, rank: usize) -> bool {
        self.rank == rank && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Homology of a chain complex given by boundary matrices.
///
/// `dims[i]` is the rank of the i-th chain group and `boundaries[i]` the map
/// from degree i to degree i-1 (`dims[i-1] x dims[i]`; degree-0 boundary maps
/// to the zero group unless the caller includes an augmentation row).
/// Returns one group per degree: `H_i = ker d_i / im d_{i+1}`.
pub fn chain_homology_z(dims: &[usize], boundaries: &[IntMatrix]) -> Vec<AbelianGroup> {
    let n = dims.len();
    let rank_at = |i: usize| -> usize {
        if i < n && boundaries[i].rows() > 0 && boundaries[i].cols() > 0 {
            smith_normal_form(&boundaries[i]).rank()
        } else {
            0
        }
    };
    let torsion_at = |i: usize| -> Vec<BigUint> {
        if i < n && boundaries[i].rows() > 0 && boundaries[i].cols() > 0 {
            smith_normal_form(&boundaries[i]).torsion()
        } else {
            Vec::new()
        }
    };
    (0..n)
        .map(|i| {
            let r_in = rank_at(i);
            let r_out = if i + 1 < n { rank_at(i + 1) } else { 0 };
            let rank = dims[i] - r_in - r_out;
            let torsion = if i + 1 < n { torsion_at(i + 1) } else { Vec::new() };
            AbelianGroup { rank, torsion }
        })
        .collect()
}

/// Betti numbers of the same chain complex over a field.
pub fn chain_betti(dims: &[usize], boundaries: &[IntMatrix], field: Field) -> Vec<usize> {
    let n = dims.len();
    let rank_at = |i: usize| -> usize {
        if i < n && boundaries[i].rows() > 0 && boundaries[i].cols() > 0 {
            boundaries[i].rank(field)
        } else {
            0
        }
    };
    (0..n)
        .map(|i| {
            let r_in = rank_at(i);
            let r_out = if i + 1 < n { rank_at(i + 1) } else { 0 };
            dims[i] - r_in - r_out
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows)
    }

    #[test]
    fn rank_identity() {
        assert_eq!(m(&[vec![1, 0], vec![0, 1]]).rank(Field::Q), 2);
    }

    #[test]
    fn rank_ones() {
        assert_eq!(m(&[vec![1, 1], vec![1, 1]]).rank(Field::Q), 1);
    }

    #[test]
    fn rank_mod_two_of_even_matrix() {
        assert_eq!(m(&[vec![2, 0], vec![0, 2]]).rank(Field::Fp(2)), 0);
        assert_eq!(m(&[vec![2, 0], vec![0, 2]]).rank(Field::Fp(3)), 2);
    }

    #[test]
    fn kernel_of_single_equation() {
        let k = m(&[vec![1, 1, 0]]).kernel_basis();
        let as_i64: Vec<Vec<i64>> = k
            .iter()
            .map(|v| v.iter().map(|x| i64::try_from(x).unwrap()).collect())
            .collect();
        assert_eq!(as_i64, vec![vec![1, -1, 0], vec![0, 0, 1]]);
    }

    #[test]
    fn kernel_of_two_by_three() {
        let k = m(&[vec![0, 1, 0], vec![-1, 1, 0]]).kernel_basis();
        assert_eq!(k.len(), 1);
        let v: Vec<i64> = k[0].iter().map(|x| i64::try_from(x).unwrap()).collect();
        assert_eq!(v, vec![0, 0, 1]);
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(m(&[vec![1, 0], vec![0, 1]]).kernel_basis().is_empty());
    }

    #[test]
    fn snf_identity() {
        let s = smith_normal_form(&IntMatrix::identity(2));
        assert_eq!(s.diagonal, vec![BigInt::from(1), BigInt::from(1)]);
    }

    #[test]
    fn snf_zero() {
        let s = smith_normal_form(&m(&[vec![0]]));
        assert_eq!(s.diagonal, vec![BigInt::zero()]);
    }

    /// Determinantal-divisor oracle: d_1 = gcd of entries, d_1 d_2 = gcd of
    /// 2x2 minors, etc.
    fn snf_diagonal_by_minors(a: &IntMatrix) -> Vec<BigInt> {
        use itertools::Itertools;
        let (m_, n_) = (a.rows(), a.cols());
        let r = m_.min(n_);
        let mut divisors = vec![BigInt::one()];
        for k in 1..=r {
            let mut g = BigInt::zero();
            for rows in (0..m_).combinations(k) {
                for cols in (0..n_).combinations(k) {
                    let mut sub = IntMatrix::zero(k, k);
                    for (i, &ri) in rows.iter().enumerate() {
                        for (j, &cj) in cols.iter().enumerate() {
                            sub[(i, j)] = a[(ri, cj)].clone();
                        }
                    }
                    g = g.gcd(&determinant(&sub));
                }
            }
            divisors.push(g);
        }
        (1..=r)
            .map(|k| {
                if divisors[k].is_zero() {
                    BigInt::zero()
                } else {
                    &divisors[k] / &divisors[k - 1]
                }
            })
            .collect()
    }

    #[test]
    fn snf_by_minors_oracle() {
        let a = m(&[vec![2, 4], vec![6, 8]]);
        let expected = snf_diagonal_by_minors(&a);
        assert_eq!(expected, vec![BigInt::from(2), BigInt::from(4)]);
        let s = smith_normal_form(&a);
        assert_eq!(s.diagonal, expected);
    }

    #[test]
    fn determinant_matches_cofactor_example() {
        assert_eq!(determinant(&m(&[vec![2, 4], vec![6, 8]])), BigInt::from(-8));
        assert_eq!(determinant(&m(&[vec![0, 1], vec![1, 0]])), BigInt::from(-1));
    }

    fn check_snf_invariants(a: &IntMatrix) {
        let s = smith_normal_form(a);
        // U A V equals the diagonal form exactly.
        let d = &(&s.left * a) * &s.right;
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                let expect =
                    if i == j { s.diagonal[i].clone() } else { BigInt::zero() };
                assert_eq!(d[(i, j)], expect, "UAV mismatch at ({i},{j})");
            }
        }
        // Unimodular transforms.
        assert_eq!(determinant(&s.left).abs(), BigInt::one());
        assert_eq!(determinant(&s.right).abs(), BigInt::one());
        // Divisibility chain on the nonzero part, zeros trailing.
        let diag = &s.diagonal;
        for w in diag.windows(2) {
            if w[0].is_zero() {
                assert!(w[1].is_zero(), "zero before nonzero in diagonal");
            } else if !w[1].is_zero() {
                assert!((&w[1] % &w[0]).is_zero(), "divisibility chain broken");
            }
        }
        assert!(diag.iter().all(|d| !d.is_negative()));
        // Rank over Q equals the number of nonzero diagonal entries.
        assert_eq!(a.rank(Field::Q), s.rank());
        // Kernel vectors annihilate the matrix; dimension pairs with rank.
        let kernel = a.kernel_basis();
        assert_eq!(kernel.len() + a.rank(Field::Q), a.cols());
        for v in &kernel {
            assert!(a.apply(v).iter().all(BigInt::is_zero));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn snf_invariants_hold(rows in 1usize..5, cols in 1usize..5,
                               seed in proptest::collection::vec(-9i64..=9, 16)) {
            let data: Vec<Vec<i64>> = (0..rows)
                .map(|i| (0..cols).map(|j| seed[(i * cols + j) % seed.len()]).collect())
                .collect();
            check_snf_invariants(&m(&data));
        }

        #[test]
        fn snf_diagonal_matches_minors_oracle(rows in 1usize..4, cols in 1usize..4,
                                              seed in proptest::collection::vec(-6i64..=6, 9)) {
            let data: Vec<Vec<i64>> = (0..rows)
                .map(|i| (0..cols).map(|j| seed[(i * cols + j) % seed.len()]).collect())
                .collect();
            let a = m(&data);
            prop_assert_eq!(smith_normal_form(&a).diagonal, snf_diagonal_by_minors(&a));
        }
    }
}
