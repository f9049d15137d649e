//! Complementary cones, non-degeneracy of q, and the local degree.
//!
//! For a support `alpha`, the cone matrix C_alpha takes column i from -A for
//! i in alpha and from the identity otherwise; its nonnegative span is the
//! complementary cone of alpha. Solutions of LCP(q, A) correspond to cones
//! containing q. At non-degenerate q (no boundary or singular-cone
//! incidences) each containing cone contributes the sign of its principal
//! minor, and the local degree is the sum of those indices.

use crate::error::{Error, Result};
use crate::exact_linalg::{
    feasible, format_rational, inverse, ppt, principal_minor, solve_linear, Constraint,
    Feasibility, IndexSet, LinearSolve, Matrix, Rational, Vector,
};
use num::{One, Signed, Zero};

/// Position of q relative to one complementary cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConeMembership {
    /// q = C x with x strictly positive.
    Interior,
    /// q = C x with x nonnegative and some zero component.
    Boundary,
    /// The unique representation has a negative component.
    Outside,
    /// det C = 0; the cone spans a proper subspace.
    Singular,
}

/// The cone matrix C_alpha.
pub fn cone_matrix(a: &Matrix, alpha: &IndexSet) -> Matrix {
    let n = a.n();
    let mut c = Matrix::identity(n);
    for j in alpha.iter() {
        for i in 0..n {
            c.set(i, j, -a.get(i, j).clone());
        }
    }
    c
}

pub fn cone_membership(a: &Matrix, q: &Vector, alpha: &IndexSet) -> ConeMembership {
    assert_eq!(a.n(), q.len(), "q must match the matrix dimension");
    let c = cone_matrix(a, alpha);
    match solve_linear(&c, q) {
        LinearSolve::Inconsistent { .. } => ConeMembership::Singular,
        LinearSolve::Solution { particular, null_basis } => {
            if !null_basis.is_empty() {
                return ConeMembership::Singular;
            }
            if particular.is_positive() {
                ConeMembership::Interior
            } else if particular.is_nonneg() {
                ConeMembership::Boundary
            } else {
                ConeMembership::Outside
            }
        }
    }
}

/// True iff q avoids every cone facet: no boundary membership for
/// nonsingular cones, and no membership at all in singular cones.
pub fn is_q_nondegenerate(a: &Matrix, q: &Vector) -> bool {
    let n = a.n();
    assert_eq!(n, q.len(), "q must match the matrix dimension");
    for alpha in IndexSet::all_subsets(n) {
        match cone_membership(a, q, &alpha) {
            ConeMembership::Boundary => return false,
            ConeMembership::Singular => {
                // q inside a singular cone (even relatively interior) makes
                // the degree ill-defined; decide q in pos(C) by LP.
                let c = cone_matrix(a, &alpha);
                let mut cons: Vec<Constraint> = (0..n)
                    .map(|i| Constraint::eq(c.row(i), q[i].clone()))
                    .collect();
                for p in 0..n {
                    let mut e = Vector::zeros(n);
                    e.0[p] = Rational::one();
                    cons.push(Constraint::ge(e, Rational::zero()));
                }
                if let Feasibility::Feasible(_) =
                    feasible(n, &cons).expect("weak system never errors")
                {
                    return false;
                }
            }
            ConeMembership::Interior | ConeMembership::Outside => {}
        }
    }
    true
}

/// Local degree of A at q with the per-cone index breakdown.
#[derive(Debug, Clone)]
pub struct DegreeResult {
    pub value: i64,
    /// Supports with interior membership and their indices, in support
    /// enumeration order. The count equals the number of LCP solutions.
    pub contributions: Vec<(IndexSet, i8)>,
    pub q_nondegenerate: bool,
}

fn sign(r: &Rational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

pub fn local_degree(a: &Matrix, q: &Vector) -> Result<DegreeResult> {
    if !is_q_nondegenerate(a, q) {
        return Err(Error::DegenerateQ(format!(
            "q = {q} touches a cone facet; the local degree is undefined there"
        )));
    }
    let mut contributions = Vec::new();
    for alpha in IndexSet::all_subsets(a.n()) {
        if cone_membership(a, q, &alpha) == ConeMembership::Interior {
            let idx = sign(&principal_minor(a, &alpha));
            debug_assert!(idx != 0, "interior membership implies a nonsingular block");
            contributions.push((alpha, idx));
        }
    }
    let value = contributions.iter().map(|(_, s)| *s as i64).sum();
    Ok(DegreeResult {
        value,
        contributions,
        q_nondegenerate: true,
    })
}

/// The action of the principal pivot transform on the constant vector:
/// q'_beta = -(A[beta,beta])^{-1} q_beta,
/// q'_off = q_off - A[off,beta] (A[beta,beta])^{-1} q_beta.
pub fn ppt_q(a: &Matrix, q: &Vector, beta: &IndexSet) -> Result<Vector> {
    if beta.is_empty() {
        return Ok(q.clone());
    }
    let inv = inverse(&a.principal(beta))
        .ok_or_else(|| Error::SingularPivot(beta.to_string()))?;
    let qb = q.restrict(beta);
    let t = inv.mul_vec(&qb);
    let mut out = q.clone();
    for (pos, i) in beta.iter().enumerate() {
        out.0[i] = -t[pos].clone();
    }
    let off = beta.complement();
    for j in off.iter() {
        let row = Vector(beta.iter().map(|b| a.get(j, b).clone()).collect());
        out.0[j] = &q[j] - &row.dot(&t);
    }
    Ok(out)
}

/// Both sides of the degree relation under a principal pivot on `beta`.
#[derive(Debug, Clone)]
pub struct PptDegreeReport {
    pub beta: IndexSet,
    /// Sign of det A[beta, beta].
    pub pivot_sign: i8,
    pub original: DegreeResult,
    pub transformed: DegreeResult,
    pub transformed_q: Vector,
    /// transformed.value == pivot_sign * original.value
    pub holds: bool,
}

/// Evaluates deg_{A'}(q') against sgn(det A[beta,beta]) * deg_A(q) where
/// A' = ppt(A, beta) and q' = ppt_q(A, q, beta). Each precondition failure
/// is reported as its own error.
pub fn verify_ppt_degree_relation(
    a: &Matrix,
    q: &Vector,
    beta: &IndexSet,
) -> Result<PptDegreeReport> {
    let minor = principal_minor(a, beta);
    if minor.is_zero() {
        return Err(Error::SingularPivot(beta.to_string()));
    }
    let original = local_degree(a, q).map_err(|_| {
        Error::DegenerateQ(format!(
            "q = {q} is degenerate for the original matrix"
        ))
    })?;
    let transformed_matrix = ppt(a, beta)?.transformed;
    let transformed_q = ppt_q(a, q, beta)?;
    let transformed = local_degree(&transformed_matrix, &transformed_q).map_err(|_| {
        Error::DegenerateQ(format!(
            "transformed q' = {transformed_q} (det of pivot block {}) is degenerate for the transformed matrix",
            format_rational(&minor)
        ))
    })?;
    let pivot_sign = sign(&minor);
    let holds = transformed.value == pivot_sign as i64 * original.value;
    Ok(PptDegreeReport {
        beta: beta.clone(),
        pivot_sign,
        original,
        transformed,
        transformed_q,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lcp::{enumerate_solutions, LCPInstance};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64_rows(rows)
    }

    fn v(entries: &[i64]) -> Vector {
        Vector::from_i64(entries)
    }

    #[test]
    fn membership_cases() {
        let a = m(&[&[1, 0], &[0, 1]]);
        let empty = IndexSet::empty(2);
        assert_eq!(cone_membership(&a, &v(&[1, 1]), &empty), ConeMembership::Interior);
        assert_eq!(cone_membership(&a, &v(&[0, 1]), &empty), ConeMembership::Boundary);
        assert_eq!(cone_membership(&a, &v(&[-1, 1]), &empty), ConeMembership::Outside);

        let neg = m(&[&[-1, 0], &[0, -1]]);
        assert_eq!(
            cone_membership(&neg, &v(&[1, 1]), &IndexSet::full(2)),
            ConeMembership::Interior
        );

        let singular = m(&[&[2, -1], &[-4, 2]]);
        assert_eq!(
            cone_membership(&singular, &v(&[1, 1]), &IndexSet::full(2)),
            ConeMembership::Singular
        );
    }

    #[test]
    fn nondegeneracy() {
        let id = m(&[&[1, 0], &[0, 1]]);
        assert!(is_q_nondegenerate(&id, &v(&[1, 1])));
        assert!(!is_q_nondegenerate(&id, &v(&[0, 1])));

        let neg = m(&[&[-1, 0], &[0, -1]]);
        assert!(is_q_nondegenerate(&neg, &v(&[1, 1])));

        // The full-support cone of this singular matrix is the line through
        // (1, -2); q on that line is degenerate, q off it is fine.
        let singular = m(&[&[2, -1], &[-4, 2]]);
        assert!(is_q_nondegenerate(&singular, &v(&[1, 2])));
        assert!(!is_q_nondegenerate(&singular, &v(&[1, -2])));
    }

    #[test]
    fn degree_of_negated_identity_is_zero() {
        let neg = m(&[&[-1, 0], &[0, -1]]);
        let d = local_degree(&neg, &v(&[1, 1])).unwrap();
        assert_eq!(d.value, 0);
        let signs: Vec<i8> = d.contributions.iter().map(|(_, s)| *s).collect();
        assert_eq!(signs, vec![1, -1, -1, 1]);
        let supports: Vec<String> =
            d.contributions.iter().map(|(s, _)| s.to_string()).collect();
        assert_eq!(supports, vec!["{}", "{1}", "{2}", "{1,2}"]);
    }

    #[test]
    fn degree_of_identity_is_one() {
        let id = m(&[&[1, 0], &[0, 1]]);
        for q in [v(&[1, 1]), v(&[-1, 2]), v(&[-3, -4])] {
            let d = local_degree(&id, &q).unwrap();
            assert_eq!(d.value, 1);
            assert_eq!(d.contributions.len(), 1);
        }
    }

    #[test]
    fn degenerate_q_is_an_error() {
        let id = m(&[&[1, 0], &[0, 1]]);
        assert!(matches!(
            local_degree(&id, &v(&[0, 1])),
            Err(Error::DegenerateQ(_))
        ));
    }

    #[test]
    fn contribution_count_matches_enumeration() {
        let a = m(&[&[2, 1], &[1, -1]]);
        let q = v(&[1, 1]);
        let d = local_degree(&a, &q).unwrap();
        let inst = LCPInstance::new(a, q).unwrap();
        let pieces = enumerate_solutions(&inst).unwrap();
        assert_eq!(d.contributions.len(), pieces.len());
        assert!(pieces.iter().all(|p| p.is_point()));
    }

    #[test]
    fn ppt_degree_relation_identity_pivot() {
        let id = m(&[&[1, 0], &[0, 1]]);
        let r = verify_ppt_degree_relation(&id, &v(&[1, 2]), &IndexSet::empty(2)).unwrap();
        assert!(r.holds && r.pivot_sign == 1);
        assert_eq!(r.transformed_q, v(&[1, 2]));

        let r = verify_ppt_degree_relation(&id, &v(&[1, 2]), &IndexSet::new(2, vec![0])).unwrap();
        assert!(r.holds);
        assert_eq!(r.transformed_q, v(&[-1, 2]));
        assert_eq!(r.original.value, 1);
        assert_eq!(r.transformed.value, 1);
    }

    #[test]
    fn ppt_degree_relation_negative_pivot() {
        // Pivoting the exchange matrix on the full support flips the degree:
        // deg at (1,1) is +1, the pivot determinant is -1, and the
        // transformed problem has degree -1.
        let a = m(&[&[0, 1], &[1, 0]]);
        let r = verify_ppt_degree_relation(&a, &v(&[1, 1]), &IndexSet::full(2)).unwrap();
        assert_eq!(r.pivot_sign, -1);
        assert_eq!(r.original.value, 1);
        assert_eq!(r.transformed.value, -1);
        assert!(r.holds);
    }

    #[test]
    fn ppt_degree_relation_preconditions() {
        let singular = m(&[&[2, -1], &[-4, 2]]);
        assert!(matches!(
            verify_ppt_degree_relation(&singular, &v(&[1, 2]), &IndexSet::full(2)),
            Err(Error::SingularPivot(_))
        ));
        let id = m(&[&[1, 0], &[0, 1]]);
        assert!(matches!(
            verify_ppt_degree_relation(&id, &v(&[0, 1]), &IndexSet::empty(2)),
            Err(Error::DegenerateQ(_))
        ));
    }

    #[test]
    fn ppt_q_matches_block_formulas() {
        let a = m(&[&[2, 1], &[1, -1]]);
        let q = v(&[3, 5]);
        let beta = IndexSet::new(2, vec![0]);
        // q'_1 = -(1/2)*3, q'_2 = 5 - 1*(1/2)*3.
        let qp = ppt_q(&a, &q, &beta).unwrap();
        assert_eq!(qp, Vector(vec![
            crate::exact_linalg::ratio(-3, 2),
            crate::exact_linalg::ratio(7, 2),
        ]));
    }
}
