//! Principal pivot transforms and Schur complements.
//!
//! For a nonsingular principal block A[aa] (a = alpha, b = its complement)
//! the transform exchanges the roles of the alpha variables:
//!
//!   A'[aa] = A[aa]^-1              A'[ab] = -A[aa]^-1 A[ab]
//!   A'[ba] = A[ba] A[aa]^-1        A'[bb] = A[bb] - A[ba] A[aa]^-1 A[ab]
//!
//! entries staying at their original index positions. alpha = {} is the
//! identity transform, with det A[aa] = 1 by the empty-minor convention.

use num::Signed;

use super::elim::{det, inverse};
use super::index_set::IndexSet;
use super::matrix::Matrix;
use super::rational::Rational;
use crate::error::{Error, Result};

pub struct PptResult {
    pub pivot_set: IndexSet,
    pub transformed: Matrix,
    /// Sign of det A[aa]: +1 or -1 (0 is impossible, the block must be
    /// nonsingular).
    pub pivot_det_sign: i8,
}

/// det of the principal minor on `alpha`; 1 for the empty set.
pub fn principal_minor(a: &Matrix, alpha: &IndexSet) -> Rational {
    det(&a.principal(alpha))
}

pub fn ppt(a: &Matrix, alpha: &IndexSet) -> Result<PptResult> {
    let n = a.n();
    if alpha.ambient() != n {
        return Err(Error::DimensionMismatch(format!(
            "pivot set over {} indices against a {}x{} matrix",
            alpha.ambient(),
            n,
            n
        )));
    }
    let aa = a.principal(alpha);
    let Some(aa_inv) = inverse(&aa) else {
        return Err(Error::SingularPivot(alpha.to_string()));
    };
    let pivot_det = det(&aa);
    let comp = alpha.complement();

    let ab = a.submatrix(alpha, &comp);
    let ba = a.submatrix(&comp, alpha);
    let bb = a.submatrix(&comp, &comp);

    let top_left = aa_inv.clone();
    let top_right = aa_inv.mul_mat(&ab).neg();
    let bottom_left = ba.mul_mat(&aa_inv);
    let bottom_right = bb_minus_schur_term(&bb, &ba, &aa_inv, &ab);

    let mut out = Matrix::zeros(n, n);
    place_block(&mut out, &top_left, alpha, alpha);
    place_block(&mut out, &top_right, alpha, &comp);
    place_block(&mut out, &bottom_left, &comp, alpha);
    place_block(&mut out, &bottom_right, &comp, &comp);

    Ok(PptResult {
        pivot_set: alpha.clone(),
        transformed: out,
        pivot_det_sign: if pivot_det.is_positive() { 1 } else { -1 },
    })
}

/// Schur complement A/A[aa] = A[bb] - A[ba] A[aa]^-1 A[ab], a square matrix
/// of side n - |alpha|. Coincides with the bb block of the transform.
pub fn schur_complement(a: &Matrix, alpha: &IndexSet) -> Result<Matrix> {
    let aa = a.principal(alpha);
    let Some(aa_inv) = inverse(&aa) else {
        return Err(Error::SingularPivot(alpha.to_string()));
    };
    let comp = alpha.complement();
    let ab = a.submatrix(alpha, &comp);
    let ba = a.submatrix(&comp, alpha);
    let bb = a.submatrix(&comp, &comp);
    Ok(bb_minus_schur_term(&bb, &ba, &aa_inv, &ab))
}

fn bb_minus_schur_term(bb: &Matrix, ba: &Matrix, aa_inv: &Matrix, ab: &Matrix) -> Matrix {
    let term = ba.mul_mat(aa_inv).mul_mat(ab);
    let mut out = bb.clone();
    for i in 0..out.rows() {
        for j in 0..out.cols() {
            let v = out.get(i, j) - term.get(i, j);
            out.set(i, j, v);
        }
    }
    out
}

fn place_block(dst: &mut Matrix, block: &Matrix, row_set: &IndexSet, col_set: &IndexSet) {
    for (bi, i) in row_set.iter().enumerate() {
        for (bj, j) in col_set.iter().enumerate() {
            dst.set(i, j, block.get(bi, bj).clone());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::matrix::Vector;
    use crate::exact_linalg::rational::{rat, ratio};
    use proptest::prelude::*;

    #[test]
    fn empty_pivot_set_is_identity_transform() {
        let a = Matrix::from_i64_rows(&[&[2, 1], &[1, -1]]);
        let r = ppt(&a, &IndexSet::empty(2)).unwrap();
        assert_eq!(r.transformed, a);
        assert_eq!(r.pivot_det_sign, 1);
    }

    #[test]
    fn hand_worked_two_by_two() {
        let a = Matrix::from_i64_rows(&[&[2, 1], &[1, -1]]);
        let alpha = IndexSet::new(2, vec![0]);
        let r = ppt(&a, &alpha).unwrap();
        let expected = Matrix::from_rows(vec![
            vec![ratio(1, 2), ratio(-1, 2)],
            vec![ratio(1, 2), ratio(-3, 2)],
        ]);
        assert_eq!(r.transformed, expected);
        assert_eq!(r.pivot_det_sign, 1);

        let schur = schur_complement(&a, &alpha).unwrap();
        assert_eq!(schur, Matrix::from_rows(vec![vec![ratio(-3, 2)]]));
    }

    #[test]
    fn singular_block_is_an_error() {
        let a = Matrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        let alpha = IndexSet::new(2, vec![0]);
        assert!(matches!(ppt(&a, &alpha), Err(Error::SingularPivot(_))));
        assert!(matches!(schur_complement(&a, &alpha), Err(Error::SingularPivot(_))));
    }

    #[test]
    fn schur_determinant_identity() {
        let a = Matrix::from_i64_rows(&[&[2, 1, 0], &[1, -1, 2], &[3, 0, 1]]);
        let alpha = IndexSet::new(3, vec![0, 1]);
        let aa_det = det(&a.principal(&alpha));
        let schur = schur_complement(&a, &alpha).unwrap();
        assert_eq!(det(&a), aa_det * det(&schur));
    }

    #[test]
    fn full_pivot_set_gives_the_inverse() {
        let a = Matrix::from_i64_rows(&[&[2, 1], &[1, -1]]);
        let r = ppt(&a, &IndexSet::full(2)).unwrap();
        assert_eq!(r.transformed, crate::exact_linalg::elim::inverse(&a).unwrap());
        assert_eq!(r.pivot_det_sign, -1);
    }

    fn small_square(max_n: usize) -> impl Strategy<Value = Matrix> {
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

        /// Pivoting twice on the same set restores the matrix.
        #[test]
        fn ppt_is_an_involution(a in small_square(4), mask in 0u64..16) {
            let alpha = IndexSet::from_bitmask(a.n(), mask & ((1 << a.n()) - 1));
            if let Ok(r) = ppt(&a, &alpha) {
                let back = ppt(&r.transformed, &alpha).unwrap();
                prop_assert_eq!(back.transformed, a);
            }
        }

        /// The bb block of the transform is exactly the Schur complement.
        #[test]
        fn transform_bb_block_is_schur(a in small_square(4), mask in 0u64..16) {
            let alpha = IndexSet::from_bitmask(a.n(), mask & ((1 << a.n()) - 1));
            if let Ok(r) = ppt(&a, &alpha) {
                let schur = schur_complement(&a, &alpha).unwrap();
                let comp = alpha.complement();
                prop_assert_eq!(r.transformed.submatrix(&comp, &comp), schur);
            }
        }

        /// det A = det A[aa] * det (A / A[aa]).
        #[test]
        fn schur_det_identity_random(a in small_square(4), mask in 0u64..16) {
            let alpha = IndexSet::from_bitmask(a.n(), mask & ((1 << a.n()) - 1));
            if let Ok(schur) = schur_complement(&a, &alpha) {
                let lhs = det(&a);
                let rhs = det(&a.principal(&alpha)) * det(&schur);
                prop_assert_eq!(lhs, rhs);
            }
        }

        /// PPT swaps w- and z-roles: if w - A z = q holds with the alpha
        /// coordinates exchanged, the transformed system holds too.
        #[test]
        fn ppt_exchanges_variable_roles(a in small_square(3), mask in 0u64..8,
                                        zvals in proptest::collection::vec(-4i64..=4, 3)) {
            let n = a.n();
            let alpha = IndexSet::from_bitmask(n, mask & ((1 << n) - 1));
            if let Ok(r) = ppt(&a, &alpha) {
                let z = Vector::from_i64(&zvals[..n]);
                let w = a.mul_vec(&z); // take q = 0: w = A z
                // exchanged vectors: (w', z') with w'_a = z_a, z'_a = w_a
                let mut wp = w.clone();
                let mut zp = z.clone();
                for i in alpha.iter() {
                    wp.0[i] = z[i].clone();
                    zp.0[i] = w[i].clone();
                }
                prop_assert_eq!(wp, r.transformed.mul_vec(&zp));
            }
        }
    }
}
