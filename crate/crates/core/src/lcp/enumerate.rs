//! Full enumeration of SOL(q, A) as polyhedral pieces, one per complementary
//! support, with set-level deduplication.
//!
//! For a support `s`, the piece is P_s = { z : z = 0 off s, z >= 0,
//! A[s,s] z_s = -q_s, q + Az >= 0 }. Every LCP solution lies in the piece of
//! its support, so the union over all supports is the whole solution set.
//! Pieces that coincide with or sit inside another piece are removed; among
//! equal sets the inclusion-minimal support is kept.

use super::{LCPInstance, Solution};
use crate::error::{Error, Result};
use crate::exact_linalg::{
    feasible, maximize, null_space_basis, Constraint, Feasibility, IndexSet, Matrix, Maximum,
    Rational, Vector,
};
use num::{One, Signed, Zero};

/// Default bound on n for operations enumerating all 2^n supports.
/// Overridable per call; the CLI maps COMPMAT_NMAX onto it.
pub const DEFAULT_ENUM_CAP: usize = 14;

/// One support's worth of the solution set.
#[derive(Debug, Clone)]
pub struct SolutionPiece {
    /// The support: indices where z may be positive (w is pinned to zero).
    pub support: IndexSet,
    /// A vertex of the piece, validated as a Solution.
    pub particular: Solution,
    /// Basis of the kernel of A[s,s], embedded into ambient dimension. Each
    /// direction is oriented so that a small step from the particular point
    /// stays inside the piece whenever one of the two orientations does.
    pub ray_basis: Vec<Vector>,
    /// True iff w is the same at every point of the piece, decided by
    /// A[:,s] d = 0 for every kernel direction d.
    pub w_constant: bool,
}

impl SolutionPiece {
    /// Exact membership test against the piece's defining constraints.
    pub fn contains(&self, inst: &LCPInstance, z: &Vector) -> bool {
        if z.len() != inst.n() || !z.is_nonneg() {
            return false;
        }
        if self.support.complement().iter().any(|i| !z[i].is_zero()) {
            return false;
        }
        let w = inst.q.add(&inst.a.mul_vec(z));
        self.support.iter().all(|i| w[i].is_zero()) && w.is_nonneg()
    }

    /// A piece is a single point exactly when its support block has a
    /// trivial kernel.
    pub fn is_point(&self) -> bool {
        self.ray_basis.is_empty()
    }
}

/// A piece together with its defining LP over the support variables, kept
/// for the deduplication tests.
struct Candidate {
    piece: SolutionPiece,
    vars: usize,
    cons: Vec<Constraint>,
}

pub fn enumerate_solutions(inst: &LCPInstance) -> Result<Vec<SolutionPiece>> {
    enumerate_solutions_capped(inst, DEFAULT_ENUM_CAP)
}

pub fn enumerate_solutions_capped(inst: &LCPInstance, cap: usize) -> Result<Vec<SolutionPiece>> {
    let n = inst.n();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let mut cands = Vec::new();
    for sigma in IndexSet::all_subsets(n) {
        if let Some(c) = candidate_for_support(inst, &sigma)? {
            cands.push(c);
        }
    }
    Ok(dedup(inst, cands))
}

fn block_row(a: &Matrix, row: usize, cols: &IndexSet) -> Vector {
    Vector(cols.iter().map(|j| a.get(row, j).clone()).collect())
}

fn candidate_for_support(inst: &LCPInstance, sigma: &IndexSet) -> Result<Option<Candidate>> {
    let n = inst.n();
    let k = sigma.len();

    if k == 0 {
        if !inst.q.is_nonneg() {
            return Ok(None);
        }
        let piece = SolutionPiece {
            support: sigma.clone(),
            particular: Solution::checked(inst, inst.q.clone(), Vector::zeros(n))?,
            ray_basis: Vec::new(),
            w_constant: true,
        };
        return Ok(Some(Candidate {
            piece,
            vars: 0,
            cons: Vec::new(),
        }));
    }

    let mut cons = Vec::new();
    for i in sigma.iter() {
        cons.push(Constraint::eq(block_row(&inst.a, i, sigma), -inst.q[i].clone()));
    }
    for p in 0..k {
        let mut e = Vector::zeros(k);
        e.0[p] = Rational::one();
        cons.push(Constraint::ge(e, Rational::zero()));
    }
    for j in sigma.complement().iter() {
        cons.push(Constraint::ge(
            block_row(&inst.a, j, sigma),
            -inst.q[j].clone(),
        ));
    }
    let zs = match feasible(k, &cons).expect("weak system never errors") {
        Feasibility::Infeasible => return Ok(None),
        Feasibility::Feasible(zs) => zs,
    };
    let z = zs.embed(sigma);
    let particular = Solution::from_z(inst, z)?;

    let kernel = null_space_basis(&inst.a.principal(sigma));
    let w_constant = {
        let cols = inst.a.columns(sigma);
        kernel.iter().all(|d| cols.mul_vec(d).is_zero())
    };
    let ray_basis = kernel
        .into_iter()
        .map(|d| orient(inst, sigma, &zs, &particular.w, d).embed(sigma))
        .collect();

    Ok(Some(Candidate {
        piece: SolutionPiece {
            support: sigma.clone(),
            particular,
            ray_basis,
            w_constant,
        },
        vars: k,
        cons,
    }))
}

/// Flips a kernel direction if the particular point can move along the flip
/// but not along the direction itself. The test is exact: a small step stays
/// feasible iff every constraint tight at the point has nonnegative
/// derivative along the direction.
fn orient(inst: &LCPInstance, sigma: &IndexSet, zs: &Vector, w: &Vector, d: Vector) -> Vector {
    let ok = |d: &Vector| {
        for p in 0..zs.len() {
            if zs[p].is_zero() && d[p].is_negative() {
                return false;
            }
        }
        for j in sigma.complement().iter() {
            if w[j].is_zero() && block_row(&inst.a, j, sigma).dot(d).is_negative() {
                return false;
            }
        }
        true
    };
    if ok(&d) {
        return d;
    }
    let flipped = d.scale(&-Rational::one());
    if ok(&flipped) {
        flipped
    } else {
        d
    }
}

/// True iff the affine functional constant + coeffs . z_s, known to be
/// nonnegative on the candidate's piece, is identically zero there.
fn vanishes_on(c: &Candidate, coeffs: Vector, constant: Rational) -> bool {
    if c.piece.is_point() {
        let z = c
            .piece
            .particular
            .z
            .restrict(&c.piece.support);
        coeffs.dot(&z) + constant == Rational::zero()
    } else {
        match maximize(&coeffs, c.vars, &c.cons).expect("weak system never errors") {
            Maximum::Optimal { value, .. } => value + constant == Rational::zero(),
            Maximum::Unbounded => false,
            Maximum::Infeasible => unreachable!("piece is nonempty"),
        }
    }
}

/// Set containment P1 within P2: every z-coordinate that P2 forbids must
/// vanish on P1, and every w-coordinate that P2 pins to zero must vanish
/// on P1.
fn piece_subset_of(inst: &LCPInstance, c1: &Candidate, c2: &Candidate) -> bool {
    let (s1, s2) = (&c1.piece.support, &c2.piece.support);
    for i in s1.iter() {
        if s2.contains(i) {
            continue;
        }
        let p = s1.position_of(i).expect("i is in s1");
        let mut e = Vector::zeros(c1.vars);
        e.0[p] = Rational::one();
        if !vanishes_on(c1, e, Rational::zero()) {
            return false;
        }
    }
    for j in s2.iter() {
        if s1.contains(j) {
            continue;
        }
        if !vanishes_on(c1, block_row(&inst.a, j, s1), inst.q[j].clone()) {
            return false;
        }
    }
    true
}

fn dedup(inst: &LCPInstance, cands: Vec<Candidate>) -> Vec<SolutionPiece> {
    let mut alive = vec![true; cands.len()];
    for i in 0..cands.len() {
        for j in (i + 1)..cands.len() {
            if !alive[i] {
                break;
            }
            if !alive[j] {
                continue;
            }
            let i_in_j = piece_subset_of(inst, &cands[i], &cands[j]);
            let j_in_i = piece_subset_of(inst, &cands[j], &cands[i]);
            if i_in_j && j_in_i {
                // Equal sets: keep the earlier-enumerated support, which is
                // the inclusion-minimal (or cardinality-smaller) one.
                alive[j] = false;
            } else if i_in_j {
                alive[i] = false;
            } else if j_in_i {
                alive[j] = false;
            }
        }
    }
    cands
        .into_iter()
        .zip(alive)
        .filter_map(|(c, keep)| keep.then_some(c.piece))
        .collect()
}

/// The set of w vectors attained by solutions.
#[derive(Debug, Clone)]
pub enum WSolutionSet {
    Finite(Vec<Vector>),
    /// A piece along which w genuinely varies, making the w-solution set
    /// infinite.
    InfiniteWitness(SolutionPiece),
}

pub fn w_solution_set(inst: &LCPInstance) -> Result<WSolutionSet> {
    w_solution_set_capped(inst, DEFAULT_ENUM_CAP)
}

pub fn w_solution_set_capped(inst: &LCPInstance, cap: usize) -> Result<WSolutionSet> {
    let pieces = enumerate_solutions_capped(inst, cap)?;
    if let Some(p) = pieces.iter().find(|p| !p.w_constant) {
        return Ok(WSolutionSet::InfiniteWitness(p.clone()));
    }
    let mut ws: Vec<Vector> = Vec::new();
    for p in pieces {
        if !ws.contains(&p.particular.w) {
            ws.push(p.particular.w);
        }
    }
    Ok(WSolutionSet::Finite(ws))
}
