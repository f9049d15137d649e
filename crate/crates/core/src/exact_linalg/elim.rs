//! Exact Gaussian elimination: rank, null-space bases, determinants, linear
//! solves with inconsistency certificates, and inverses.
//!
//! Reduction is deterministic (pivot = first row with a nonzero entry in the
//! current column), so every derived object - particular solutions, basis
//! vectors, witnesses - is reproducible. Determinants go through fraction-free
//! Bareiss elimination on a denominator-cleared integer copy to keep
//! intermediate growth linear in the usual way.

use num::bigint::BigInt;
use num::{One, Zero};

use super::matrix::{Matrix, Vector};
use super::rational::{rat, Rational};

/// Row echelon data for M: `reduced` = T * M in reduced row echelon form,
/// `pivots` the pivot column of each nonzero row, `transform` the invertible
/// T accumulated from the row operations.
pub struct Rref {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
    pub transform: Matrix,
}

pub fn rref(m: &Matrix) -> Rref {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.clone();
    let mut t = Matrix::identity(rows);
    let mut pivots = Vec::new();
    let mut pivot_row = 0;

    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        let Some(src) = (pivot_row..rows).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        if src != pivot_row {
            swap_rows(&mut a, src, pivot_row);
            swap_rows(&mut t, src, pivot_row);
        }
        let inv = rat(1) / a.get(pivot_row, col).clone();
        scale_row(&mut a, pivot_row, &inv);
        scale_row(&mut t, pivot_row, &inv);
        for r in 0..rows {
            if r != pivot_row && !a.get(r, col).is_zero() {
                let factor = a.get(r, col).clone();
                sub_scaled_row(&mut a, r, pivot_row, &factor);
                sub_scaled_row(&mut t, r, pivot_row, &factor);
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }

    Rref { reduced: a, pivots, transform: t }
}

fn swap_rows(m: &mut Matrix, a: usize, b: usize) {
    for j in 0..m.cols() {
        let x = m.get(a, j).clone();
        let y = m.get(b, j).clone();
        m.set(a, j, y);
        m.set(b, j, x);
    }
}

fn scale_row(m: &mut Matrix, r: usize, c: &Rational) {
    for j in 0..m.cols() {
        let v = m.get(r, j) * c;
        m.set(r, j, v);
    }
}

/// row[r] -= factor * row[src]
fn sub_scaled_row(m: &mut Matrix, r: usize, src: usize, factor: &Rational) {
    for j in 0..m.cols() {
        let v = m.get(r, j) - factor * m.get(src, j);
        m.set(r, j, v);
    }
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).pivots.len()
}

/// Basis of { x : M x = 0 }, one vector per free column in ascending column
/// order, each scaled to primitive integer form with the first nonzero entry
/// positive. Empty for trivial kernels.
pub fn null_space_basis(m: &Matrix) -> Vec<Vector> {
    let r = rref(m);
    let cols = m.cols();
    let mut basis = Vec::new();
    for free in 0..cols {
        if r.pivots.contains(&free) {
            continue;
        }
        let mut v = Vector::zeros(cols);
        v.0[free] = rat(1);
        for (row, &pc) in r.pivots.iter().enumerate() {
            v.0[pc] = -r.reduced.get(row, free).clone();
        }
        basis.push(v.canonical_direction());
    }
    debug_assert!(basis.iter().all(|v| m.mul_vec(v).is_zero()));
    basis
}

/// det of a square matrix; the empty 0x0 matrix has determinant 1. Computed
/// by Bareiss fraction-free elimination over integers after clearing each
/// row's denominators.
pub fn det(m: &Matrix) -> Rational {
    let n = m.n();
    if n == 0 {
        return rat(1);
    }
    // clear denominators rowwise; det scales by the product of the factors
    let mut b: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    let mut scale = BigInt::one();
    for i in 0..n {
        let lcm = (0..n).fold(BigInt::one(), |acc, j| {
            num::integer::lcm(acc, m.get(i, j).denom().clone())
        });
        b.push(
            (0..n)
                .map(|j| (m.get(i, j) * Rational::from_integer(lcm.clone())).to_integer())
                .collect(),
        );
        scale *= lcm;
    }

    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if b[k][k].is_zero() {
            let Some(src) = (k + 1..n).find(|&r| !b[r][k].is_zero()) else {
                return rat(0);
            };
            b.swap(k, src);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &b[i][j] * &b[k][k] - &b[i][k] * &b[k][j];
                b[i][j] = num / &prev; // exact division in Bareiss
            }
            b[i][k] = BigInt::zero();
        }
        prev = b[k][k].clone();
    }
    Rational::new(sign * b[n - 1][n - 1].clone(), scale)
}

/// Outcome of solving M x = b exactly.
pub enum LinearSolve {
    /// The affine solution set: one particular solution plus a basis of the
    /// kernel (empty basis = unique solution).
    Solution { particular: Vector, null_basis: Vec<Vector> },
    /// Proof of inconsistency: y with y^T M = 0 but y^T b != 0.
    Inconsistent { certificate: Vector },
}

pub fn solve_linear(m: &Matrix, b: &Vector) -> LinearSolve {
    assert_eq!(m.rows(), b.len(), "dimension mismatch in solve");
    let cols = m.cols();
    let mut aug = Matrix::zeros(m.rows(), cols + 1);
    for i in 0..m.rows() {
        for j in 0..cols {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, cols, b[i].clone());
    }
    let r = rref(&aug);

    if let Some(row) = r.pivots.iter().position(|&pc| pc == cols) {
        let certificate = r.transform.row(row);
        debug_assert!({
            let yt_m: Vector = Vector(
                (0..cols).map(|j| (0..m.rows()).map(|i| &certificate[i] * m.get(i, j)).sum()).collect(),
            );
            yt_m.is_zero() && !certificate.dot(b).is_zero()
        });
        return LinearSolve::Inconsistent { certificate };
    }

    let mut particular = Vector::zeros(cols);
    for (row, &pc) in r.pivots.iter().enumerate() {
        particular.0[pc] = r.reduced.get(row, cols).clone();
    }
    debug_assert_eq!(m.mul_vec(&particular), *b);
    LinearSolve::Solution { particular, null_basis: null_space_basis(m) }
}

/// Inverse of a nonsingular square matrix, None when singular.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.n();
    let r = rref(&m.augment(&Matrix::identity(n)));
    if r.pivots.len() < n || r.pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    let mut inv = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            inv.set(i, j, r.reduced.get(i, n + j).clone());
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::rational::ratio;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64_rows(rows)
    }

    /// Cofactor expansion along the first row; independent of the Bareiss
    /// path, usable as an oracle for small n.
    fn det_cofactor(a: &Matrix) -> Rational {
        let n = a.n();
        if n == 0 {
            return rat(1);
        }
        if n == 1 {
            return a.get(0, 0).clone();
        }
        let mut acc = rat(0);
        for j in 0..n {
            let mut minor = Matrix::zeros(n - 1, n - 1);
            for i in 1..n {
                let mut cj = 0;
                for jj in 0..n {
                    if jj != j {
                        minor.set(i - 1, cj, a.get(i, jj).clone());
                        cj += 1;
                    }
                }
            }
            let term = a.get(0, j) * det_cofactor(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn rank_of_known_matrices() {
        assert_eq!(rank(&m(&[&[2, -1], &[-4, 2]])), 1);
        assert_eq!(rank(&m(&[&[1, 0], &[1, 0]])), 1);
        assert_eq!(rank(&m(&[&[1, 4, 3], &[2, 1, 5], &[3, 2, 0]])), 3);
        assert_eq!(rank(&Matrix::zeros(3, 3)), 0);
        assert_eq!(rank(&Matrix::identity(4)), 4);
        // rectangular column block
        assert_eq!(rank(&m(&[&[1, 1], &[2, 2], &[3, 4]])), 2);
    }

    #[test]
    fn null_space_of_known_matrices() {
        assert_eq!(
            null_space_basis(&m(&[&[2, -1], &[-4, 2]])),
            vec![Vector::from_i64(&[1, 2])]
        );
        assert_eq!(
            null_space_basis(&m(&[&[3, -2, 0], &[-2, 1, 1], &[-3, 2, 0]])),
            vec![Vector::from_i64(&[2, 3, 1])]
        );
        assert_eq!(
            null_space_basis(&m(&[&[-1, 3], &[2, -6]])),
            vec![Vector::from_i64(&[3, 1])]
        );
        assert_eq!(
            null_space_basis(&m(&[&[-2, 1, 3], &[4, -2, -6], &[1, -1, -1]])),
            vec![Vector::from_i64(&[2, 1, 1])]
        );
        assert!(null_space_basis(&Matrix::identity(3)).is_empty());
    }

    #[test]
    fn det_matches_hand_values() {
        assert_eq!(det(&m(&[&[2, 1], &[1, -1]])), rat(-3));
        assert_eq!(det(&m(&[&[2, -1], &[-4, 2]])), rat(0));
        assert_eq!(det(&Matrix::zeros(0, 0)), rat(1));
        assert_eq!(det(&Matrix::identity(5)), rat(1));
        assert_eq!(det(&m(&[&[1, 1, 4], &[2, 2, 5], &[3, 4, 1]])), rat(3));
        let half = Matrix::from_rows(vec![vec![ratio(1, 2)]]);
        assert_eq!(det(&half), ratio(1, 2));
    }

    #[test]
    fn solve_underdetermined_system() {
        let a = m(&[&[-1, 3], &[2, -6]]);
        let b = Vector::from_i64(&[-1, 2]);
        match solve_linear(&a, &b) {
            LinearSolve::Solution { particular, null_basis } => {
                assert_eq!(particular, Vector::from_i64(&[1, 0]));
                assert_eq!(null_basis, vec![Vector::from_i64(&[3, 1])]);
            }
            LinearSolve::Inconsistent { .. } => panic!("system is consistent"),
        }
    }

    #[test]
    fn solve_reports_certified_inconsistency() {
        let a = m(&[&[1, 1], &[1, 1]]);
        let b = Vector::from_i64(&[1, 2]);
        match solve_linear(&a, &b) {
            LinearSolve::Inconsistent { certificate } => {
                let yt_m =
                    Vector((0..2).map(|j| (0..2).map(|i| &certificate[i] * a.get(i, j)).sum()).collect());
                assert!(yt_m.is_zero());
                assert!(!certificate.dot(&b).is_zero());
            }
            LinearSolve::Solution { .. } => panic!("system is inconsistent"),
        }
    }

    #[test]
    fn inverse_round_trips() {
        let a = m(&[&[2, 1], &[1, -1]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(a.mul_mat(&inv), Matrix::identity(2));
        assert_eq!(inv.mul_mat(&a), Matrix::identity(2));
        assert!(inverse(&m(&[&[2, -1], &[-4, 2]])).is_none());
        // 0x0 edge case: inverse of the empty matrix is the empty matrix
        assert_eq!(inverse(&Matrix::zeros(0, 0)).unwrap(), Matrix::zeros(0, 0));
    }

    fn small_matrix(max_n: usize) -> impl Strategy<Value = Matrix> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(-5i64..=5, n * n).prop_map(move |vals| {
                Matrix::from_rows(
                    vals.chunks(n).map(|row| row.iter().map(|&x| rat(x)).collect()).collect(),
                )
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn rank_plus_nullity_is_cols(a in small_matrix(4)) {
            prop_assert_eq!(rank(&a) + null_space_basis(&a).len(), a.cols());
        }

        #[test]
        fn null_basis_vectors_are_in_kernel(a in small_matrix(4)) {
            for v in null_space_basis(&a) {
                prop_assert!(a.mul_vec(&v).is_zero());
            }
        }

        #[test]
        fn det_agrees_with_cofactor_expansion(a in small_matrix(4)) {
            prop_assert_eq!(det(&a), det_cofactor(&a));
        }

        #[test]
        fn det_nonzero_iff_full_rank(a in small_matrix(4)) {
            prop_assert_eq!(det(&a).is_zero(), rank(&a) < a.n());
        }

        #[test]
        fn inverse_multiplies_to_identity(a in small_matrix(4)) {
            if let Some(inv) = inverse(&a) {
                prop_assert_eq!(a.mul_mat(&inv), Matrix::identity(a.n()));
            } else {
                prop_assert!(det(&a).is_zero());
            }
        }
    }
}
