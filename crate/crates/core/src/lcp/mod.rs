//! LCP instances, solutions, solvers, and the local w-uniqueness checks.
//!
//! LCP(q, A): find w, z >= 0 with w - Az = q and w_i z_i = 0 for every i.
//! Solving goes through complementary pivoting ([`lemke_solve`]) or full
//! support enumeration ([`enumerate_solutions`]); the latter describes the
//! entire solution set as polyhedral pieces.

pub mod enumerate;
pub mod lemke;

pub use enumerate::{
    enumerate_solutions, enumerate_solutions_capped, w_solution_set, w_solution_set_capped,
    SolutionPiece, WSolutionSet, DEFAULT_ENUM_CAP,
};
pub use lemke::{lemke_solve, LemkeOutcome};

use crate::error::{Error, Result};
use crate::exact_linalg::{
    feasible, null_space_basis, ppt, Constraint, Feasibility, IndexSet, Matrix, Rational, Vector,
};
use num::{One, Zero};

/// One problem: the matrix A and the constant vector q.
#[derive(Debug, Clone)]
pub struct LCPInstance {
    pub a: Matrix,
    pub q: Vector,
}

impl LCPInstance {
    pub fn new(a: Matrix, q: Vector) -> Result<Self> {
        if !a.is_square() || a.rows() != q.len() {
            return Err(Error::DimensionMismatch(format!(
                "LCP needs square A and matching q; got {}x{} and length {}",
                a.rows(),
                a.cols(),
                q.len()
            )));
        }
        Ok(LCPInstance { a, q })
    }

    pub fn n(&self) -> usize {
        self.q.len()
    }
}

/// A single complementary solution. Constructed only through [`Solution::checked`]
/// or [`Solution::from_z`], which verify every invariant exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub w: Vector,
    pub z: Vector,
}

impl Solution {
    /// Validates w = q + Az, nonnegativity, and componentwise complementarity.
    pub fn checked(inst: &LCPInstance, w: Vector, z: Vector) -> Result<Self> {
        let sol = Solution { w, z };
        sol.validate(inst)?;
        Ok(sol)
    }

    /// Builds w = q + Az and validates.
    pub fn from_z(inst: &LCPInstance, z: Vector) -> Result<Self> {
        if z.len() != inst.n() {
            return Err(Error::DimensionMismatch(format!(
                "z has length {}, expected {}",
                z.len(),
                inst.n()
            )));
        }
        let w = inst.q.add(&inst.a.mul_vec(&z));
        Self::checked(inst, w, z)
    }

    pub fn validate(&self, inst: &LCPInstance) -> Result<()> {
        if self.w.len() != inst.n() || self.z.len() != inst.n() {
            return Err(Error::InvalidSolution("dimension mismatch".into()));
        }
        if self.w != inst.q.add(&inst.a.mul_vec(&self.z)) {
            return Err(Error::InvalidSolution("w - Az = q fails".into()));
        }
        if !self.w.is_nonneg() || !self.z.is_nonneg() {
            return Err(Error::InvalidSolution("negative component".into()));
        }
        if !self.w.hadamard(&self.z).is_zero() {
            return Err(Error::InvalidSolution("w_i z_i = 0 fails".into()));
        }
        Ok(())
    }
}

/// The Hadamard form psi(z) = z * (Az): component i is z_i (Az)_i.
pub fn psi(a: &Matrix, z: &Vector) -> Result<Vector> {
    if !a.is_square() || a.rows() != z.len() {
        return Err(Error::DimensionMismatch(format!(
            "psi needs square A matching z; got {}x{} and length {}",
            a.rows(),
            a.cols(),
            z.len()
        )));
    }
    Ok(z.hadamard(&a.mul_vec(z)))
}

/// The piecewise-linear map f(z) = z+ - A z-, whose preimages of q are in
/// bijection with the solutions of LCP(q, A).
pub fn f_map(a: &Matrix, z: &Vector) -> Result<Vector> {
    if !a.is_square() || a.rows() != z.len() {
        return Err(Error::DimensionMismatch(format!(
            "f_map needs square A matching z; got {}x{} and length {}",
            a.rows(),
            a.cols(),
            z.len()
        )));
    }
    Ok(z.pos_part().sub(&a.mul_vec(&z.neg_part())))
}

/// Folds a solution back into the single vector u with f_map(A, u) = q:
/// u_i = w_i where z_i = 0, and -z_i elsewhere. Coordinates with
/// w_i = z_i = 0 take the w branch.
pub fn u_vector(sol: &Solution) -> Vector {
    Vector(
        sol.z
            .iter()
            .zip(sol.w.iter())
            .map(|(zi, wi)| if zi.is_zero() { wi.clone() } else { -zi.clone() })
            .collect(),
    )
}

/// Outcome of the local w-uniqueness certificate at one solution.
///
/// `alpha` holds the indices where the solution's w is positive, `beta` the
/// rest. The certificate asks whether (w_alpha, z_beta) = 0 is the only
/// solution of the transformed homogeneous system; when it is not,
/// `violating_pair` carries a strictly positive exact solution.
#[derive(Debug, Clone)]
pub struct WUniquenessVerdict {
    pub alpha: IndexSet,
    pub beta: IndexSet,
    pub certificate_holds: bool,
    pub violating_pair: Option<(Vector, Vector)>,
}

/// Checks the pivot-based local w-uniqueness certificate at `sol`.
///
/// Requires A[alpha, alpha] nonsingular (for nonempty alpha); the blocks of
/// the principal pivot transform on alpha define the homogeneous system
/// { A'[i, alpha] w_alpha + A'[i, beta] z_beta = 0 for all i,
///   w_alpha > 0, z_beta > 0 }, and the certificate holds exactly when that
/// system is infeasible. With alpha empty this reduces to {Az = 0, z > 0}.
pub fn check_local_w_uniqueness(inst: &LCPInstance, sol: &Solution) -> Result<WUniquenessVerdict> {
    sol.validate(inst)?;
    let n = inst.n();
    let alpha = sol.w.support();
    let beta = alpha.complement();
    let transformed = ppt(&inst.a, &alpha)?.transformed;

    // Variable layout: the alpha entries of w, then the beta entries of z.
    let mut cons = Vec::with_capacity(2 * n);
    for p in 0..n {
        let mut e = Vector::zeros(n);
        e.0[p] = Rational::one();
        cons.push(Constraint::gt0(e));
    }
    for i in 0..n {
        let coeffs: Vec<Rational> = alpha
            .iter()
            .chain(beta.iter())
            .map(|j| transformed.get(i, j).clone())
            .collect();
        cons.push(Constraint::eq(Vector(coeffs), Rational::zero()));
    }
    match feasible(n, &cons).expect("homogeneous strict system") {
        Feasibility::Infeasible => Ok(WUniquenessVerdict {
            alpha,
            beta,
            certificate_holds: true,
            violating_pair: None,
        }),
        Feasibility::Feasible(x) => {
            let x = x.scaled_primitive();
            assert!(x.is_positive(), "violating pair must be strictly positive");
            let wa = Vector(x.0[..alpha.len()].to_vec());
            let zb = Vector(x.0[alpha.len()..].to_vec());
            Ok(WUniquenessVerdict {
                alpha,
                beta,
                certificate_holds: false,
                violating_pair: Some((wa, zb)),
            })
        }
    }
}

/// Outcome of the converse kernel test at one solution.
#[derive(Debug, Clone)]
pub struct ConverseVerdict {
    pub alpha: IndexSet,
    pub beta: IndexSet,
    /// True when z_beta = 0 is the only solution of A[beta, beta] z_beta = 0.
    pub only_trivial: bool,
    /// Nonzero kernel vector embedded into ambient dimension (zero on alpha).
    pub witness: Option<Vector>,
}

/// Converse direction of the w-uniqueness analysis: with alpha and beta read
/// off the solution's w as above and z_alpha pinned to zero by
/// complementarity, decides whether the remaining block system
/// A[beta, beta] z_beta = 0 has only the trivial solution.
pub fn check_w_uniqueness_converse(inst: &LCPInstance, sol: &Solution) -> Result<ConverseVerdict> {
    sol.validate(inst)?;
    let alpha = sol.w.support();
    let beta = alpha.complement();
    if beta.is_empty() {
        return Ok(ConverseVerdict {
            alpha,
            beta,
            only_trivial: true,
            witness: None,
        });
    }
    let basis = null_space_basis(&inst.a.principal(&beta));
    match basis.into_iter().next() {
        None => Ok(ConverseVerdict {
            alpha,
            beta,
            only_trivial: true,
            witness: None,
        }),
        Some(v) => {
            let witness = v.embed(&beta);
            Ok(ConverseVerdict {
                alpha,
                beta,
                only_trivial: false,
                witness: Some(witness),
            })
        }
    }
}

/// How an automatic solve concluded.
#[derive(Debug, Clone)]
pub enum AutoSolve {
    /// Complementary pivoting terminated with a solution.
    Lemke(Solution),
    /// Pivoting hit a secondary ray; the full enumeration is returned
    /// instead (empty means the LCP has no solution).
    Enumerated(Vec<SolutionPiece>),
}

/// Lemke first, enumeration on ray termination.
pub fn solve_auto(inst: &LCPInstance, cap: usize) -> Result<AutoSolve> {
    match lemke_solve(inst)? {
        LemkeOutcome::Solution(s) => Ok(AutoSolve::Lemke(s)),
        LemkeOutcome::RayTermination => Ok(AutoSolve::Enumerated(enumerate_solutions_capped(
            inst, cap,
        )?)),
    }
}
