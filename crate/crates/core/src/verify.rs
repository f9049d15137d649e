//! Seeded randomized invariant suite plus replay of the worked examples that
//! ship as fixtures.
//!
//! Every runner derives its own deterministic RNG stream from the master
//! seed, so invariants can be executed one by one (the CLI and the acceptance
//! suite do) with the same draws as a full [`run`].

use crate::degree::{local_degree, verify_ppt_degree_relation};
use crate::error::Error;
use crate::exact_linalg::{
    det, feasible, null_space_basis, ppt, principal_minor, rank, rat, ratio, schur_complement,
    solve_linear, Constraint, Feasibility, IndexSet, LinearSolve, Matrix, Rational, Rel, Vector,
};
use crate::lcp::{
    enumerate_solutions, f_map, lemke_solve, psi, solve_auto, u_vector, w_solution_set, AutoSolve,
    LCPInstance, LemkeOutcome, Solution, WSolutionSet, DEFAULT_ENUM_CAP,
};
use crate::matrix_classes::{
    all_principal_kernels_trivial, is_column_adequate, is_column_competent, is_e0, is_p,
    is_principally_nondegenerate, is_r, is_r0, AdequacyMode,
};
use num::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt::Write as _;

/// Parameters of one verification run.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    /// Master seed; every invariant mixes its name into this.
    pub seed: u64,
    /// Target number of checked cases per invariant.
    pub trials: usize,
    /// Largest matrix dimension drawn. Runners with tighter documented
    /// bounds clamp below this.
    pub n_max: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 1,
            trials: 500,
            n_max: 4,
        }
    }
}

/// Outcome of one invariant over its sampled corpus.
#[derive(Debug, Clone)]
pub struct InvariantResult {
    pub name: &'static str,
    /// Samples that reached the invariant's assertion (after filtering).
    pub cases: usize,
    pub failures: usize,
    pub first_counterexample: Option<String>,
    /// Population and filter statistics worth reporting.
    pub notes: String,
}

impl InvariantResult {
    fn new(name: &'static str) -> Self {
        InvariantResult {
            name,
            cases: 0,
            failures: 0,
            first_counterexample: None,
            notes: String::new(),
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(detail());
        }
    }

    fn fail(&mut self, detail: String) {
        self.failures += 1;
        if self.first_counterexample.is_none() {
            self.first_counterexample = Some(detail);
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Results of a full run, in fixed invariant order.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub invariants: Vec<InvariantResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.invariants.iter().all(InvariantResult::passed)
    }

    pub fn render(&self) -> String {
        let mut out = format!(
            "seed={} trials={} n_max={}\n",
            self.config.seed, self.config.trials, self.config.n_max
        );
        for r in &self.invariants {
            let status = if r.passed() { "pass" } else { "FAIL" };
            let _ = write!(out, "{status}  {:<26} {:>5} cases", r.name, r.cases);
            if r.failures > 0 {
                let _ = write!(out, ", {} failures", r.failures);
            }
            if !r.notes.is_empty() {
                let _ = write!(out, "  [{}]", r.notes);
            }
            if let Some(cex) = &r.first_counterexample {
                let _ = write!(out, "\n      first counterexample: {cex}");
            }
            out.push('\n');
        }
        out
    }
}

/// Runs the whole battery.
pub fn run(cfg: &VerifyConfig) -> VerifyReport {
    let invariants = vec![
        inv_rank_nullity(cfg),
        inv_ppt_involution(cfg),
        inv_ppt_schur_block(cfg),
        inv_schur_det_identity(cfg),
        inv_lp_witness_exact(cfg),
        inv_solve_linear_exact(cfg),
        inv_cc_witness_soundness(cfg),
        inv_kernel_vs_minor_paths(cfg),
        inv_adequacy_modes_agree(cfg),
        inv_e0_r0_iff_r(cfg),
        inv_nondegenerate_implies_competent(cfg),
        inv_competent_nondegenerate_r0(cfg),
        inv_permutation_invariance(cfg),
        inv_diagonal_scaling(cfg),
        inv_ppt_closure(cfg),
        inv_e0_r0_adequacy(cfg),
        inv_z_matrix_literal(cfg),
        inv_lemke_in_union(cfg),
        inv_finite_w_evidence(cfg),
        inv_piece_w_constant_rank(cfg),
        inv_f_map_inversion(cfg),
        inv_psi_zero_on_lcp0(cfg),
        inv_degree_counts_pieces(cfg),
        inv_degree_scale_stable(cfg),
        inv_p_matrix_degree_one(cfg),
        inv_ppt_degree_relation(cfg),
        inv_lemke_validity(cfg),
    ];
    VerifyReport {
        config: cfg.clone(),
        invariants,
    }
}

// ---------------------------------------------------------------------------
// seeded generators

/// Independent deterministic stream per invariant: the runner name is FNV-1a
/// hashed into the master seed, so adding or reordering runners does not
/// reshuffle the draws of the others.
fn sub_rng(seed: u64, name: &str) -> ChaCha8Rng {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

fn rand_dim(rng: &mut ChaCha8Rng, hi: usize) -> usize {
    rng.gen_range(2..=hi.max(2))
}

fn rand_entry(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-5..=5))
}

fn rand_rect(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_rows(
        (0..rows)
            .map(|_| (0..cols).map(|_| rand_entry(rng)).collect())
            .collect(),
    )
}

fn rand_matrix(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    rand_rect(rng, n, n)
}

fn rand_vector(rng: &mut ChaCha8Rng, n: usize) -> Vector {
    Vector((0..n).map(|_| rand_entry(rng)).collect())
}

/// Entrywise nonnegative matrices are semimonotone by inspection; mixing
/// them in keeps the E0-filtered invariants populated.
fn rand_nonneg_matrix(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    Matrix::from_rows(
        (0..n)
            .map(|_| (0..n).map(|_| rat(rng.gen_range(0..=5))).collect())
            .collect(),
    )
}

/// Rank-one Gram matrices v v^T are column adequate with an (n-1)-dimensional
/// kernel: guaranteed competent members whose kernel sampling is nontrivial.
fn rand_rank_one(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let v: Vec<Rational> = (0..n)
        .map(|_| {
            let m = rng.gen_range(1..=3);
            rat(if rng.gen::<bool>() { m } else { -m })
        })
        .collect();
    Matrix::from_rows(
        (0..n)
            .map(|i| (0..n).map(|j| &v[i] * &v[j]).collect())
            .collect(),
    )
}

fn rand_z_matrix(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    Matrix::from_rows(
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            rand_entry(rng)
                        } else {
                            rat(rng.gen_range(-5..=0))
                        }
                    })
                    .collect()
            })
            .collect(),
    )
}

fn rand_perm(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.gen_range(0..=i));
    }
    p
}

fn rand_pos_diag(rng: &mut ChaCha8Rng, n: usize) -> Vector {
    Vector(
        (0..n)
            .map(|_| ratio(rng.gen_range(1..=4), rng.gen_range(1..=3)))
            .collect(),
    )
}

fn rand_nonempty_subset(rng: &mut ChaCha8Rng, n: usize) -> IndexSet {
    IndexSet::from_bitmask(n, rng.gen_range(1..(1u64 << n)))
}

/// Random combination of basis vectors with small integer coefficients,
/// skipped when it degenerates to zero.
fn rand_combination(rng: &mut ChaCha8Rng, basis: &[Vector]) -> Option<Vector> {
    let mut acc = Vector::zeros(basis[0].len());
    for b in basis {
        acc = acc.add(&b.scale(&rat(rng.gen_range(-3..=3))));
    }
    if acc.is_zero() {
        None
    } else {
        Some(acc)
    }
}

// ---------------------------------------------------------------------------
// elimination / LP / PPT invariants

pub fn inv_rank_nullity(cfg: &VerifyConfig) -> InvariantResult {
    let mut r = InvariantResult::new("rank_nullity");
    let mut rng = sub_rng(cfg.seed, r.name);
    for _ in 0..cfg.trials {
        let rows = rng.gen_range(1..=cfg.n_max.max(2));
        let cols = rng.gen_range(1..=cfg.n_max.max(2));
        let m = rand_rect(&mut rng, rows, cols);
        let rk = rank(&m);
        let nullity = null_space_basis(&m).len();
        r.check(rk + nullity == cols, || {
            format!("rank {rk} + nullity {nullity} != {cols} columns for {m:?}")
        });
    }
    r
}

pub fn inv_ppt_involution(cfg: &VerifyConfig) -> InvariantResult {
    let mut r = InvariantResult::new("ppt_involution");
    let mut rng = sub_rng(cfg.seed, r.name);
    let mut skipped = 0usize;
    for _ in 0..cfg.trials {
        let n = rand_dim(&mut rng, cfg.n_max);
        let a = rand_matrix(&mut rng, n);
        let alpha = rand_nonempty_subset(&mut rng, n);
        if principal_minor(&a, &alpha).is_zero() {
            skipped += 1;
            continue;
        }
        let once = ppt(&a, &alpha).expect("nonsingular pivot block").transformed;
        let twice = ppt(&once, &alpha).expect("pivot block of a PPT").transformed;
        r.check(twice == a, || format!("ppt twice on {alpha} changed {a:?}"));
    }
    r.notes = format!("{skipped} singular pivot blocks skipped");
    r
}

pub fn inv_ppt_schur_block(cfg: &VerifyConfig) -> InvariantResult {
    let mut r = InvariantResult::new("ppt_schur_block");
    let mut rng = sub_rng(cfg.seed, r.name);
    for _ in 0..cfg.trials {
        let n = rand_dim(&mut rng, cfg.n_max);
        let a = rand_matrix(&mut rng, n);
        let alpha = IndexSet::from_bitmask(n, rng.gen_range(1..((1u64 << n) - 1)));
        if principal_minor(&a, &alpha).is_zero() {
            continue;
        }
        let schur = schur_complement(&a, &alpha).expect("nonsingular pivot block");
        let transformed = ppt(&a, &alpha).expect("nonsingular pivot block").transformed;
        let comp = alpha.complement();
        let block = transformed.submatrix(&comp, &comp);
        r.check(schur == block, || {
            format!("Schur complement of {a:?} on {alpha} differs from the PPT block")
        });
    }
    r
}

pub fn inv_schur_det_identity(cfg: &VerifyConfig) -> InvariantResult {
    let mut r = InvariantResult::new("schur_det_identity");
    let mut rng = sub_rng(cfg.seed, r.name);
    for _ in 0..cfg.trials {
        let n = rand_dim(&mut rng, cfg.n_max);
        let a = rand_matrix(&mut rng, n);
        let alpha = IndexSet::from_bitmask(n, rng.gen_range(1..((1u64 << n) - 1)));
        let minor = principal_minor(&a, &alpha);
        if minor.is_zero() {
            continue;
        }
        let schur = schur_complement(&a, &alpha).expect("nonsingular pivot block");
        r.check(det(&a) == minor.clone() * det(&schur), || {
            format!("det factorization failed on {a:?} with pivot set {alpha}")
        });
    }
    r
}

pub fn inv_lp_witness_exact(cfg: &VerifyConfig) -> InvariantResult {
    let mut r = InvariantResult::new("lp_witness_exact");
    let mut rng = sub_rng(cfg.seed, r.name);
    let mut witnesses = 0usize;
    for t in 0..cfg.trials {
        let nv = rng.gen_range(1..=3);
        let nc = rng.gen_range(1..=4);
        let strict_system = t % 3 == 0;
        let cons: Vec<Constraint> = (0..nc)
            .map(|_| {
                let coeffs = rand_vector(&mut rng, nv);
                let rel = if strict_system {
                    [Rel::Gt, Rel::Lt, Rel::Ge, Rel::Le, Rel::Eq][rng.gen_range(0..5)]
                } else {
                    [Rel::Ge, Rel::Le, Rel::Eq][rng.gen_range(0..3)]
                };
                let rhs = if strict_system {
                    Rational::zero()
                } else {
                    rand_entry(&mut rng)
                };
                Constraint::new(coeffs, rel, rhs)
            })
            .collect();
        match feasible(nv, &cons) {
            Ok(Feasibility::Feasible(x)) => {
                witnesses += 1;
                r.check(cons.iter().all(|c| c.holds_at(&x)), || {
                    format!("witness {x} violates a constraint of {cons:?}")
                });
            }
            Ok(Feasibility::Infeasible) => {
                r.cases += 1;
            }
            Err(e) => r.fail(format!("solver error on {cons:?}: {e}")),
        }
    }
    r.notes = format!("{witnesses} witnesses re-verified");
    r
}

pub fn inv_solve_linear_exact(cfg: &VerifyConfig) -> InvariantResult {
    let mut r = InvariantResult::new("solve_linear_exact");
    let mut rng = sub_rng(cfg.seed, r.name);
    for _ in 0..cfg.trials {
        let rows = rng.gen_range(1..=cfg.n_max.max(2));
        let cols = rng.gen_range(1..=cfg.n_max.max(2));
        let m = rand_rect(&mut rng, rows, cols);
        let b = rand_vector(&mut rng, rows);
        match solve_linear(&m, &b) {
            LinearSolve::Solution {
                particular,
                null_basis,
            } => {
                let ok = m.mul_vec(&particular) == b
                    && null_basis.iter().all(|v| m.mul_vec(v).is_zero());
                r.check(ok, || format!("solution of {m:?} x = {b} does not re-verify"));
            }
            LinearSolve::Inconsistent { certificate } => {
                let ok = m.transpose().mul_vec(&certificate).is_zero()
                    && !certificate.dot(&b).is_zero();
                r.check(ok, || {
                    format!("inconsistency certificate {certificate} fails for {m:?} x = {b}")
                });
            }
        }
    }
    r
}

// ---------------------------------------------------------------------------
// matrix class invariants

pub fn inv_cc_witness_soundness(cfg: &VerifyConfig) -> InvariantResult {
    let mut r = InvariantResult::new("cc_witness_soundness");
    let mut rng = sub_rng(cfg.seed, r.name);
    let mut members = 0usize;
    let mut kernel_samples = 0usize;

    let sample_member = |r: &mut InvariantResult, rng: &mut ChaCha8Rng, a: &Matrix| {
        let mut sampled = 0usize;
        for sigma in IndexSet::nonempty_subsets(a.n()) {
            let basis = null_space_basis(&a.principal(&sigma));
            if basis.is_empty() {
                continue;
            }
            for _ in 0..8 {
                let Some(zs) = rand_combination(rng, &basis) else {
                    continue;
                };
                let z = zs.embed(&sigma);
                sampled += 1;
                r.check(a.mul_vec(&z).is_zero(), || {
                    format!("member {a:?} maps kernel sample z = {z} to Az != 0")
                });
            }
        }
        sampled
    };

    for t in 0..cfg.trials {
        let n = rand_dim(&mut rng, cfg.n_max);
        let a = if t % 4 == 3 {
            rand_rank_one(&mut rng, n)
        } else {
            rand_matrix(&mut rng, n)
        };
        let v = is_column_competent(&a);
        if v.member {
            members += 1;
            kernel_samples += sample_member(&mut r, &mut rng, &a);
        } else {
            let z = v.witness_vector.expect("non-member carries a witness");
            let az = a.mul_vec(&z);
            let ok = z.hadamard(&az).is_zero() && !az.is_zero();
            r.check(ok, || format!("witness {z} for {a:?} is not sound: Az = {az}"));
        }
    }
    // the sampling side of the invariant is only meaningful in bulk; top up
    // with guaranteed singular members until enough kernel points were drawn
    while cfg.trials > 0 && kernel_samples < 1000 {
        let n = rand_dim(&mut rng, cfg.n_max);
        let a = rand_rank_one(&mut rng, n);
        members += 1;
        kernel_samples += sample_member(&mut r, &mut rng, &a);
    }
    r.notes = format!("{members} members, {kernel_samples} kernel samples");
    r
}

pub fn inv_kernel_vs_minor_paths(cfg: &VerifyConfig) -> InvariantResult {
    let mut r = InvariantResult::new("kernel_vs_minor_paths");
    let mut rng = sub_rng(cfg.seed, r.name);
    for _ in 0..cfg.trials {
        let n = rand_dim(&mut rng, cfg.n_max);
        let a = rand_matrix(&mut rng, n);
        let by_minors = is_principally_nondegenerate(&a).member;
        let by_kernels = all_principal_kernels_trivial(&a).0;
        r.check(by_minors == by_kernels, || {
            format!("minor scan {by_minors} vs kernel scan {by_kernels} on {a:?}")
        });
    }
    r
}

/// Both adequacy procedures must agree; `is_column_adequate` fails hard on a
/// disagreement, so the invariant is that it never errors.
pub fn inv_adequacy_modes_agree(cfg: &VerifyConfig) -> InvariantResult {
    let mut r = InvariantResult::new("adequacy_modes_agree");
    let mut rng = sub_rng(cfg.seed, r.name);
    if cfg.trials == 0 {
        return r;
    }
    for f in fixtures::all() {
        match is_column_adequate(&f.matrix, AdequacyMode::Theorem) {
            Ok(_) => r.cases += 1,
            Err(e) => r.fail(format!("fixture {}: {e}", f.name)),
        }
    }
    for _ in 0..cfg.trials {
        let n = rand_dim(&mut rng, cfg.n_max.min(4));
        let a = rand_matrix(&mut rng, n);
        match is_column_adequate(&a, AdequacyMode::Theorem) {
            Ok(_) => r.cases += 1,
            Err(e) => r.fail(format!("{a:?}: {e}")),
        }
    }
    r
}

pub fn inv_e0_r0_iff_r(cfg: &VerifyConfig) -> InvariantResult {
    let mut r = InvariantResult::new("e0_r0_iff_r");
    let mut rng = sub_rng(cfg.seed, r.name);
    let mut population = 0usize;
    for _ in 0..cfg.trials {
        let n = rand_dim(&mut rng, cfg.n_max.min(4));
        let a = rand_matrix(&mut rng, n);
        population += 1;
        if !is_e0(&a).member {
            continue;
        }
        let r0 = is_r0(&a).member;
        let reg = is_r(&a).member;
        r.check(r0 == reg, || {
            format!("semimonotone {a:?}: R0 = {r0} but R = {reg}")
        });
    }
    r.notes = format!("{} semimonotone members among {population}", r.cases);
    r
}

pub fn inv_nondegenerate_implies_competent(cfg: &VerifyConfig) -> InvariantResult {
    let mut r = InvariantResult::new("nondegenerate_implies_cc");
    let mut rng = sub_rng(cfg.seed, r.name);
    let mut population = 0usize;
    for _ in 0..cfg.trials {
        let n = rand_dim(&mut rng, cfg.n_max);
        let a = rand_matrix(&mut rng, n);
        population += 1;
        if !is_principally_nondegenerate(&a).member {
            continue;
        }
        r.check(is_column_competent(&a).member, || {
            format!("principally non-degenerate {a:?} is not column competent")
        });
    }
    r.notes = format!("{} non-degenerate among {population}", r.cases);
    r
}

pub fn inv_competent_nondegenerate_r0(cfg: &VerifyConfig) -> InvariantResult {
    let mut r = InvariantResult::new("cc_nondegenerate_r0");
    let mut rng = sub_rng(cfg.seed, r.name);
    let mut population = 0usize;
    for _ in 0..cfg.trials {
        let n = rand_dim(&mut rng, cfg.n_max);
        let a = rand_matrix(&mut rng, n);
        population += 1;
        if !is_principally_nondegenerate(&a).member || !is_column_competent(&a).member {
            continue;
        }
        r.check(is_r0(&a).member, || {
            format!("competent non-degenerate {a:?} is not R0")
        });
    }
    r.notes = format!("{} qualifying among {population}", r.cases);
    r
}

pub fn inv_permutation_invariance(cfg: &VerifyConfig) -> InvariantResult {
    let mut r = InvariantResult::new("permutation_invariance");
    let mut rng = sub_rng(cfg.seed, r.name);
    for _ in 0..cfg.trials {
        let n = rand_dim(&mut rng, cfg.n_max);
        let a = rand_matrix(&mut rng, n);
        let perm = rand_perm(&mut rng, n);
        let conj = a.permute_symmetric(&perm);
        let before = is_column_competent(&a).member;
        let after = is_column_competent(&conj).member;
        r.check(before == after, || {
            format!("competence changed from {before} to {after} under permutation {perm:?} of {a:?}")
        });
    }
    r
}

pub fn inv_diagonal_scaling(cfg: &VerifyConfig) -> InvariantResult {
    let mut r = InvariantResult::new("diagonal_scaling");
    let mut rng = sub_rng(cfg.seed, r.name);
    let mut population = 0usize;
    for t in 0..cfg.trials {
        let n = rand_dim(&mut rng, cfg.n_max);
        let a = if t % 4 == 3 {
            rand_rank_one(&mut rng, n)
        } else {
            rand_matrix(&mut rng, n)
        };
        population += 1;
        if !is_column_competent(&a).member {
            continue;
        }
        let d = rand_pos_diag(&mut rng, n);
        let scaled = a.scale_symmetric(&d);
        r.check(is_column_competent(&scaled).member, || {
            format!("competent {a:?} lost competence under D = {d}")
        });
    }
    r.notes = format!("{} competent among {population}", r.cases);
    r
}

pub fn inv_ppt_closure(cfg: &VerifyConfig) -> InvariantResult {
    let mut r = InvariantResult::new("ppt_closure_cc");
    let mut rng = sub_rng(cfg.seed, r.name);
    let mut population = 0usize;
    for t in 0..cfg.trials {
        let n = rand_dim(&mut rng, cfg.n_max);
        let a = if t % 4 == 3 {
            rand_rank_one(&mut rng, n)
        } else {
            rand_matrix(&mut rng, n)
        };
        population += 1;
        let alpha = rand_nonempty_subset(&mut rng, n);
        if principal_minor(&a, &alpha).is_zero() {
            continue;
        }
        let schur = schur_complement(&a, &alpha).expect("nonsingular pivot block");
        if schur.rows() > 0 && det(&schur).is_zero() {
            continue;
        }
        if !is_column_competent(&a).member {
            continue;
        }
        let transformed = ppt(&a, &alpha).expect("nonsingular pivot block").transformed;
        r.check(is_column_competent(&transformed).member, || {
            format!("PPT of competent {a:?} on {alpha} is not competent")
        });
    }
    r.notes = format!("{} qualifying among {population}", r.cases);
    r
}

/// Column competent members of E0 and R0 whose block decomposition satisfies
/// the nonsingularity hypotheses must be column adequate.
pub fn inv_e0_r0_adequacy(cfg: &VerifyConfig) -> InvariantResult {
    let mut r = InvariantResult::new("e0_r0_adequacy");
    let mut rng = sub_rng(cfg.seed, r.name);
    let mut population = 0usize;
    for t in 0..cfg.trials {
        let n = rand_dim(&mut rng, cfg.n_max.min(4));
        let a = if t % 3 == 0 {
            rand_nonneg_matrix(&mut rng, n)
        } else {
            rand_matrix(&mut rng, n)
        };
        population += 1;
        let hypotheses = IndexSet::nonempty_subsets(n)
            .filter(|s| s.len() < n)
            .any(|s| {
                !principal_minor(&a, &s).is_zero()
                    && !det(&schur_complement(&a, &s).expect("nonsingular pivot block")).is_zero()
            });
        if !hypotheses
            || !is_column_competent(&a).member
            || !is_e0(&a).member
            || !is_r0(&a).member
        {
            continue;
        }
        match is_column_adequate(&a, AdequacyMode::Theorem) {
            Ok(v) => r.check(v.member, || {
                let mut detail =
                    format!("competent semimonotone R0 matrix {a:?} is not adequate");
                // Spell out where the degree argument behind the claimed
                // implication breaks: the pivot transform on the negative
                // block leaves E0, so its degree may legitimately be -1.
                if let Some(beta) = &v.witness_set {
                    let _ = write!(detail, " (det A[{beta}] < 0");
                    if let Ok(p) = ppt(&a, beta) {
                        let _ = write!(
                            detail,
                            "; the pivot transform on {beta} is{} semimonotone",
                            if is_e0(&p.transformed).member {
                                ""
                            } else {
                                " not"
                            }
                        );
                    }
                    detail.push(')');
                }
                detail
            }),
            Err(e) => r.fail(format!("{a:?}: {e}")),
        }
    }
    r.notes = if r.failures == 0 {
        format!("{} qualifying among {population}", r.cases)
    } else {
        format!(
            "{} qualifying among {population}; the claimed implication is refuted by exact counterexample",
            r.cases
        )
    };
    r
}

/// For Z-matrices and kernel-of-psi samples z with A|z| >= 0 and Az <= 0,
/// the two bounds collapse to Az = 0.
pub fn inv_z_matrix_literal(cfg: &VerifyConfig) -> InvariantResult {
    let mut r = InvariantResult::new("z_matrix_literal");
    let mut rng = sub_rng(cfg.seed, r.name);
    let mut sampled = 0usize;
    for _ in 0..cfg.trials {
        let n = rand_dim(&mut rng, cfg.n_max);
        let a = rand_z_matrix(&mut rng, n);
        for sigma in IndexSet::nonempty_subsets(n) {
            let basis = null_space_basis(&a.principal(&sigma));
            if basis.is_empty() {
                continue;
            }
            for _ in 0..8 {
                let Some(zs) = rand_combination(&mut rng, &basis) else {
                    continue;
                };
                let z = zs.embed(&sigma);
                sampled += 1;
                let az = a.mul_vec(&z);
                let hyp = a.mul_vec(&z.abs()).is_nonneg() && az.iter().all(|e| !e.is_positive());
                if !hyp {
                    continue;
                }
                r.check(az.is_zero(), || {
                    format!("Z-matrix {a:?}, z = {z}: A|z| >= 0 and Az <= 0 but Az = {az} != 0")
                });
            }
        }
    }
    r.notes = format!("{} kernel samples, {} passed the hypotheses", sampled, r.cases);
    r
}

// ---------------------------------------------------------------------------
// LCP invariants

pub fn inv_lemke_in_union(cfg: &VerifyConfig) -> InvariantResult {
    let mut r = InvariantResult::new("lemke_in_union");
    let mut rng = sub_rng(cfg.seed, r.name);
    let mut rays = 0usize;
    for _ in 0..cfg.trials {
        let n = rand_dim(&mut rng, cfg.n_max.min(4));
        let a = rand_matrix(&mut rng, n);
        let q = rand_vector(&mut rng, n);
        let inst = LCPInstance::new(a, q).expect("matching dimensions");
        match lemke_solve(&inst) {
            Ok(LemkeOutcome::Solution(s)) => {
                let pieces = match enumerate_solutions(&inst) {
                    Ok(p) => p,
                    Err(e) => {
                        r.fail(format!("enumeration failed on {inst:?}: {e}"));
                        continue;
                    }
                };
                r.check(pieces.iter().any(|p| p.contains(&inst, &s.z)), || {
                    format!("pivoting solution z = {} of {inst:?} lies in no piece", s.z)
                });
            }
            Ok(LemkeOutcome::RayTermination) => {
                rays += 1;
                r.cases += 1;
            }
            Err(e) => r.fail(format!("pivoting error on {inst:?}: {e}")),
        }
    }
    r.notes = format!("{rays} ray terminations");
    r
}

/// Sampled evidence for the finiteness theorem: competent fixtures must show
/// a finite w-set at every sampled q; non-competent fixtures are only logged
/// (sampling cannot refute a for-all-q statement).
pub fn inv_finite_w_evidence(cfg: &VerifyConfig) -> InvariantResult {
    let mut r = InvariantResult::new("finite_w_evidence");
    let mut rng = sub_rng(cfg.seed, r.name);
    if cfg.trials == 0 {
        return r;
    }
    let mut log = Vec::new();
    for f in fixtures::all() {
        let a = f.matrix.clone();
        let n = a.n();
        let cc = is_column_competent(&a);
        let mut infinite = 0usize;
        let mut witness_support_feasible = 0usize;
        for _ in 0..100 {
            let q = rand_vector(&mut rng, n);
            let inst = LCPInstance::new(a.clone(), q.clone()).expect("matching dimensions");
            match w_solution_set(&inst) {
                Ok(WSolutionSet::Finite(_)) => {
                    if cc.member {
                        r.cases += 1;
                    }
                }
                Ok(WSolutionSet::InfiniteWitness(piece)) => {
                    infinite += 1;
                    if cc.member {
                        r.check(false, || {
                            format!(
                                "competent fixture {} has infinite w-set at q = {q} (piece support {})",
                                f.name, piece.support
                            )
                        });
                    }
                }
                Err(e) => r.fail(format!("fixture {} at q = {q}: {e}", f.name)),
            }
            if let Some(z) = &cc.witness_vector {
                // does the witness support ever carry a feasible piece?
                let sigma = z.support();
                let mut cons = vec![];
                let comp = sigma.complement();
                let block = a.principal(&sigma);
                for (row, i) in sigma.iter().enumerate() {
                    cons.push(Constraint::eq(block.row(row), -q[i].clone()));
                }
                for p in 0..sigma.len() {
                    let mut e = Vector::zeros(sigma.len());
                    e.0[p] = Rational::one();
                    cons.push(Constraint::ge(e, Rational::zero()));
                }
                for j in comp.iter() {
                    let row = Vector(sigma.iter().map(|i| a.get(j, i).clone()).collect());
                    cons.push(Constraint::ge(row, -q[j].clone()));
                }
                if let Ok(Feasibility::Feasible(_)) = feasible(sigma.len(), &cons) {
                    witness_support_feasible += 1;
                }
            }
        }
        if !cc.member {
            log.push(format!(
                "{}: infinite {infinite}/100, witness support feasible {witness_support_feasible}/100",
                f.name
            ));
        }
    }
    r.notes = log.join("; ");
    r
}

pub fn inv_piece_w_constant_rank(cfg: &VerifyConfig) -> InvariantResult {
    let mut r = InvariantResult::new("piece_w_constant_rank");
    let mut rng = sub_rng(cfg.seed, r.name);
    for _ in 0..cfg.trials {
        let n = rand_dim(&mut rng, cfg.n_max.min(4));
        let a = rand_matrix(&mut rng, n);
        let q = rand_vector(&mut rng, n);
        let inst = LCPInstance::new(a.clone(), q).expect("matching dimensions");
        let pieces = match enumerate_solutions(&inst) {
            Ok(p) => p,
            Err(e) => {
                r.fail(format!("enumeration failed on {inst:?}: {e}"));
                continue;
            }
        };
        for piece in pieces {
            let sigma = &piece.support;
            let rank_equal = rank(&a.columns(sigma)) == rank(&a.principal(sigma));
            r.check(piece.w_constant == rank_equal, || {
                format!(
                    "piece {} of {inst:?}: w_constant = {} but rank equality = {rank_equal}",
                    sigma, piece.w_constant
                )
            });
        }
    }
    r
}

pub fn inv_f_map_inversion(cfg: &VerifyConfig) -> InvariantResult {
    let mut r = InvariantResult::new("f_map_inversion");
    let mut rng = sub_rng(cfg.seed, r.name);
    for _ in 0..cfg.trials {
        let n = rand_dim(&mut rng, cfg.n_max.min(4));
        let a = rand_matrix(&mut rng, n);
        let q = rand_vector(&mut rng, n);
        let inst = LCPInstance::new(a.clone(), q.clone()).expect("matching dimensions");
        let mut solutions = Vec::new();
        match enumerate_solutions(&inst) {
            Ok(pieces) => solutions.extend(pieces.into_iter().map(|p| p.particular)),
            Err(e) => {
                r.fail(format!("enumeration failed on {inst:?}: {e}"));
                continue;
            }
        }
        if let Ok(LemkeOutcome::Solution(s)) = lemke_solve(&inst) {
            solutions.push(s);
        }
        for s in solutions {
            let u = u_vector(&s);
            let image = f_map(&a, &u).expect("matching dimensions");
            r.check(image == q, || {
                format!("u = {u} from (w, z) = ({}, {}) maps to {image} != q = {q}", s.w, s.z)
            });
        }
    }
    r
}

pub fn inv_psi_zero_on_lcp0(cfg: &VerifyConfig) -> InvariantResult {
    let mut r = InvariantResult::new("psi_zero_on_lcp0");
    let mut rng = sub_rng(cfg.seed, r.name);
    for _ in 0..cfg.trials {
        let n = rand_dim(&mut rng, cfg.n_max.min(4));
        let a = rand_matrix(&mut rng, n);
        let inst = LCPInstance::new(a.clone(), Vector::zeros(n)).expect("matching dimensions");
        let pieces = match enumerate_solutions(&inst) {
            Ok(p) => p,
            Err(e) => {
                r.fail(format!("enumeration failed on {inst:?}: {e}"));
                continue;
            }
        };
        for piece in pieces {
            let mut points = vec![piece.particular.z.clone()];
            for _ in 0..4 {
                let mut z = piece.particular.z.clone();
                for ray in &piece.ray_basis {
                    z = z.add(&ray.scale(&rat(rng.gen_range(0..=2))));
                }
                points.push(z);
            }
            for z in points {
                if !piece.contains(&inst, &z) {
                    continue;
                }
                let image = psi(&a, &z).expect("matching dimensions");
                r.check(image.is_zero(), || {
                    format!("psi({z}) = {image} != 0 on a homogeneous solution piece of {a:?}")
                });
            }
        }
    }
    r
}

// ---------------------------------------------------------------------------
// degree invariants

pub fn inv_degree_counts_pieces(cfg: &VerifyConfig) -> InvariantResult {
    let mut r = InvariantResult::new("degree_counts_pieces");
    let mut rng = sub_rng(cfg.seed, r.name);
    let quota = cfg.trials;
    let mut attempts = 0usize;
    while r.cases < quota && attempts < quota * 30 {
        attempts += 1;
        let n = rand_dim(&mut rng, cfg.n_max.min(3));
        let a = rand_matrix(&mut rng, n);
        let q = rand_vector(&mut rng, n);
        let deg = match local_degree(&a, &q) {
            Ok(d) => d,
            Err(Error::DegenerateQ(_)) => continue,
            Err(e) => {
                r.fail(format!("unexpected degree error on {a:?}, q = {q}: {e}"));
                continue;
            }
        };
        let inst = LCPInstance::new(a.clone(), q.clone()).expect("matching dimensions");
        let pieces = match enumerate_solutions(&inst) {
            Ok(p) => p,
            Err(e) => {
                r.fail(format!("enumeration failed on {inst:?}: {e}"));
                continue;
            }
        };
        let ok = deg.contributions.len() == pieces.len() && pieces.iter().all(|p| p.is_point());
        r.check(ok, || {
            format!(
                "{} interior cones vs {} pieces (all points: {}) on {a:?}, q = {q}",
                deg.contributions.len(),
                pieces.len(),
                pieces.iter().all(|p| p.is_point())
            )
        });
    }
    if r.cases < quota {
        r.fail(format!("only {} of {quota} non-degenerate cases found", r.cases));
    }
    r
}

pub fn inv_degree_scale_stable(cfg: &VerifyConfig) -> InvariantResult {
    let mut r = InvariantResult::new("degree_scale_stable");
    let mut rng = sub_rng(cfg.seed, r.name);
    let quota = cfg.trials;
    let mut attempts = 0usize;
    let lambda = ratio(1001, 1000);
    while r.cases < quota && attempts < quota * 30 {
        attempts += 1;
        let n = rand_dim(&mut rng, cfg.n_max.min(3));
        let a = rand_matrix(&mut rng, n);
        let q = rand_vector(&mut rng, n);
        let d1 = match local_degree(&a, &q) {
            Ok(d) => d,
            Err(_) => continue,
        };
        match local_degree(&a, &q.scale(&lambda)) {
            Ok(d2) => r.check(
                d1.value == d2.value && d1.contributions == d2.contributions,
                || format!("degree moved from {} to {} when scaling q = {q} on {a:?}", d1.value, d2.value),
            ),
            Err(e) => r.fail(format!("scaled q became degenerate on {a:?}, q = {q}: {e}")),
        }
    }
    if r.cases < quota {
        r.fail(format!("only {} of {quota} non-degenerate cases found", r.cases));
    }
    r
}

pub fn inv_p_matrix_degree_one(cfg: &VerifyConfig) -> InvariantResult {
    let mut r = InvariantResult::new("p_matrix_degree_one");
    let mut rng = sub_rng(cfg.seed, r.name);
    let mut skipped = 0usize;
    for _ in 0..cfg.trials {
        let n = rand_dim(&mut rng, cfg.n_max.min(3));
        let mut a = rand_matrix(&mut rng, n);
        // strict diagonal dominance with positive diagonal forces a P-matrix
        for i in 0..n {
            let row_sum: Rational = (0..n)
                .filter(|&j| j != i)
                .map(|j| a.get(i, j).abs())
                .sum();
            a.set(i, i, row_sum + rat(rng.gen_range(1..=3)));
        }
        if !is_p(&a).member {
            r.fail(format!("diagonally dominant construction {a:?} is not P"));
            continue;
        }
        let mut checked = false;
        for _ in 0..5 {
            let q = rand_vector(&mut rng, n);
            if let Ok(d) = local_degree(&a, &q) {
                r.check(d.value == 1, || {
                    format!("P-matrix {a:?} has degree {} at q = {q}", d.value)
                });
                checked = true;
                break;
            }
        }
        if !checked {
            skipped += 1;
        }
    }
    r.notes = format!("{skipped} matrices without a sampled non-degenerate q");
    r
}

pub fn inv_ppt_degree_relation(cfg: &VerifyConfig) -> InvariantResult {
    let mut r = InvariantResult::new("ppt_degree_relation");
    let mut rng = sub_rng(cfg.seed, r.name);
    let quota = cfg.trials;
    let mut attempts = 0usize;
    while r.cases < quota && attempts < quota * 40 {
        attempts += 1;
        let n = rand_dim(&mut rng, cfg.n_max.min(3));
        let a = rand_matrix(&mut rng, n);
        let q = rand_vector(&mut rng, n);
        let beta = rand_nonempty_subset(&mut rng, n);
        match verify_ppt_degree_relation(&a, &q, &beta) {
            Ok(report) => r.check(report.holds, || {
                format!(
                    "deg' = {} but sgn(det block) * deg = {} * {} on {a:?}, q = {q}, beta = {beta}",
                    report.transformed.value, report.pivot_sign, report.original.value
                )
            }),
            Err(Error::SingularPivot(_)) | Err(Error::DegenerateQ(_)) => continue,
            Err(e) => r.fail(format!("unexpected error on {a:?}, beta = {beta}: {e}")),
        }
    }
    if r.cases < quota {
        r.fail(format!("only {} of {quota} precondition-passing triples found", r.cases));
    }
    r
}

// ---------------------------------------------------------------------------
// solver validity

/// On instances proved solvable by enumeration, complementary pivoting either
/// returns an exactly valid solution or ray-terminates into the enumeration
/// fallback; the combination never reports "no solution".
pub fn inv_lemke_validity(cfg: &VerifyConfig) -> InvariantResult {
    let mut r = InvariantResult::new("lemke_validity");
    let mut rng = sub_rng(cfg.seed, r.name);
    let quota = if cfg.trials == 0 { 0 } else { cfg.trials.max(200) };
    let mut attempts = 0usize;
    let mut rays = 0usize;
    while r.cases < quota && attempts < quota * 20 {
        attempts += 1;
        let n = rand_dim(&mut rng, cfg.n_max.min(4));
        let a = rand_matrix(&mut rng, n);
        let q = rand_vector(&mut rng, n);
        let inst = LCPInstance::new(a, q).expect("matching dimensions");
        let pieces = match enumerate_solutions(&inst) {
            Ok(p) => p,
            Err(e) => {
                r.fail(format!("enumeration failed on {inst:?}: {e}"));
                continue;
            }
        };
        if pieces.is_empty() {
            continue; // not solvable; out of scope for this invariant
        }
        match lemke_solve(&inst) {
            Ok(LemkeOutcome::Solution(s)) => {
                r.check(s.validate(&inst).is_ok(), || {
                    format!("pivoting solution ({}, {}) fails validation on {inst:?}", s.w, s.z)
                });
            }
            Ok(LemkeOutcome::RayTermination) => {
                rays += 1;
                match solve_auto(&inst, DEFAULT_ENUM_CAP) {
                    Ok(AutoSolve::Enumerated(p)) => r.check(!p.is_empty(), || {
                        format!("fallback reported no solution on solvable {inst:?}")
                    }),
                    Ok(AutoSolve::Lemke(_)) => r.fail(format!(
                        "fallback returned a pivoting solution after a ray on {inst:?}"
                    )),
                    Err(e) => r.fail(format!("fallback failed on {inst:?}: {e}")),
                }
            }
            Err(e) => r.fail(format!("pivoting error on {inst:?}: {e}")),
        }
    }
    if r.cases < quota {
        r.fail(format!("only {} of {quota} solvable instances found", r.cases));
    }
    r.notes = format!("{rays} ray terminations re-checked by enumeration");
    r
}

// ---------------------------------------------------------------------------
// fixtures

pub mod fixtures {
    use super::*;
    use crate::lcp::w_solution_set;

    /// One worked example: the matrix, an optional q, and stable file name.
    pub struct Fixture {
        pub name: &'static str,
        pub matrix: Matrix,
        pub q: Option<Vector>,
    }

    pub fn all() -> Vec<Fixture> {
        vec![
            Fixture {
                name: "xu_singular",
                matrix: Matrix::from_i64_rows(&[&[1, 0], &[1, 0]]),
                q: None,
            },
            Fixture {
                name: "xu_not_cc",
                matrix: Matrix::from_i64_rows(&[&[1, 1], &[0, 0]]),
                q: None,
            },
            Fixture {
                name: "nonsingular_not_cc",
                matrix: Matrix::from_i64_rows(&[&[1, 4, 3], &[2, 1, 5], &[3, 2, 0]]),
                q: None,
            },
            Fixture {
                name: "cc_not_p0",
                matrix: Matrix::from_i64_rows(&[&[2, 1], &[1, -1]]),
                q: None,
            },
            Fixture {
                name: "cc_p0_adequate",
                matrix: Matrix::from_i64_rows(&[&[2, -1], &[-4, 2]]),
                q: Some(Vector::from_i64(&[0, 0])),
            },
            Fixture {
                name: "r0_not_cc",
                matrix: Matrix::from_i64_rows(&[&[1, 1, 4], &[2, 2, 5], &[3, 4, 1]]),
                q: None,
            },
            Fixture {
                name: "kernel_line_3x3",
                matrix: Matrix::from_i64_rows(&[&[3, -2, 0], &[-2, 1, 1], &[-3, 2, 0]]),
                q: None,
            },
            Fixture {
                name: "lcp_ray_2x2",
                matrix: Matrix::from_i64_rows(&[&[-1, 3], &[2, -6]]),
                q: Some(Vector::from_i64(&[1, -2])),
            },
            Fixture {
                name: "lcp_segment_3x3",
                matrix: Matrix::from_i64_rows(&[&[-2, 1, 3], &[4, -2, -6], &[1, -1, -1]]),
                q: Some(Vector::from_i64(&[1, -2, 1])),
            },
        ]
    }

    /// One cited claim checked against the computed truth.
    #[derive(Debug, Clone)]
    pub struct CitationResult {
        pub fixture: &'static str,
        pub claim: &'static str,
        pub upheld: bool,
        pub detail: String,
    }

    fn cite(out: &mut Vec<CitationResult>, fixture: &'static str, claim: &'static str, upheld: bool, detail: String) {
        out.push(CitationResult {
            fixture,
            claim,
            upheld,
            detail,
        });
    }

    /// Replays every verdict the worked examples assert, exactly as cited.
    /// A refuted citation carries the computed counterexample in `detail`;
    /// refutations are reported, never patched over.
    pub fn replay() -> Vec<CitationResult> {
        let fx = all();
        let get = |name: &str| {
            fx.iter()
                .find(|f| f.name == name)
                .expect("fixture name is stable")
        };
        let mut out = Vec::new();

        let cc_claim = |out: &mut Vec<CitationResult>, f: &Fixture, expected: bool| {
            let v = is_column_competent(&f.matrix);
            let detail = match (&v.witness_vector, v.member) {
                (Some(z), false) => format!(
                    "computed: member = {}; witness z = {z} with Az = {}",
                    v.member,
                    f.matrix.mul_vec(z)
                ),
                _ => format!("computed: member = {}", v.member),
            };
            cite(
                out,
                f.name,
                if expected { "column competent" } else { "not column competent" },
                v.member == expected,
                detail,
            );
        };

        let f = get("xu_singular");
        cc_claim(&mut out, f, true);

        let f = get("xu_not_cc");
        cc_claim(&mut out, f, false);

        let f = get("nonsingular_not_cc");
        cc_claim(&mut out, f, false);
        let v = is_column_competent(&f.matrix);
        cite(
            &mut out,
            f.name,
            "competence witness z = (0,0,1)",
            v.witness_vector == Some(Vector::from_i64(&[0, 0, 1])),
            format!("computed witness: {:?}", v.witness_vector),
        );

        let f = get("cc_not_p0");
        cc_claim(&mut out, f, true);
        let p0 = crate::matrix_classes::is_p0(&f.matrix);
        cite(
            &mut out,
            f.name,
            "not P0",
            !p0.member,
            p0.certificate_note.clone(),
        );

        let f = get("cc_p0_adequate");
        cc_claim(&mut out, f, true);
        let p0 = crate::matrix_classes::is_p0(&f.matrix);
        cite(&mut out, f.name, "P0", p0.member, p0.certificate_note.clone());
        match is_column_adequate(&f.matrix, AdequacyMode::Direct) {
            Ok(v) => cite(&mut out, f.name, "column adequate", v.member, v.certificate_note),
            Err(e) => cite(&mut out, f.name, "column adequate", false, e.to_string()),
        }
        let r0 = is_r0(&f.matrix);
        cite(
            &mut out,
            f.name,
            "not R0, witness z = (1,2)",
            !r0.member && r0.witness_vector == Some(Vector::from_i64(&[1, 2])),
            format!("computed: member = {}, witness = {:?}", r0.member, r0.witness_vector),
        );
        let inst = LCPInstance::new(f.matrix.clone(), Vector::zeros(2)).expect("2x2 with q in R^2");
        let sol = Solution::from_z(&inst, Vector::from_i64(&[1, 2]));
        cite(
            &mut out,
            f.name,
            "z = (1,2) solves the homogeneous problem",
            sol.is_ok(),
            match &sol {
                Ok(s) => format!("w = {}", s.w),
                Err(e) => e.to_string(),
            },
        );

        let f = get("r0_not_cc");
        let r0 = is_r0(&f.matrix);
        cite(&mut out, f.name, "R0", r0.member, r0.certificate_note.clone());
        cc_claim(&mut out, f, false);
        let v = is_column_competent(&f.matrix);
        cite(
            &mut out,
            f.name,
            "competence witness z = (1,-1,0)",
            v.witness_vector == Some(Vector::from_i64(&[1, -1, 0])),
            format!("computed witness: {:?}", v.witness_vector),
        );

        let f = get("kernel_line_3x3");
        cc_claim(&mut out, f, true); // refuted: the kernel line misses part of ker psi
        match is_column_adequate(&f.matrix, AdequacyMode::Direct) {
            Ok(v) => cite(&mut out, f.name, "not column adequate", !v.member, v.certificate_note),
            Err(e) => cite(&mut out, f.name, "not column adequate", false, e.to_string()),
        }
        let kernel = null_space_basis(&f.matrix);
        cite(
            &mut out,
            f.name,
            "kernel of A is spanned by (2,3,1)",
            kernel == vec![Vector::from_i64(&[2, 3, 1])],
            format!("computed kernel basis: {kernel:?}"),
        );

        let f = get("lcp_ray_2x2");
        cc_claim(&mut out, f, true);
        let q = f.q.clone().expect("instance fixture");
        let inst = LCPInstance::new(f.matrix.clone(), q).expect("2x2 with q in R^2");
        let sol = Solution::from_z(&inst, Vector::from_i64(&[4, 1]));
        cite(
            &mut out,
            f.name,
            "z = (4,1) solves with w = (0,0)",
            matches!(&sol, Ok(s) if s.w.is_zero()),
            match &sol {
                Ok(s) => format!("w = {}", s.w),
                Err(e) => e.to_string(),
            },
        );
        let wset = w_solution_set(&inst).expect("within enumeration cap");
        cite(
            &mut out,
            f.name,
            "every solution has w = (0,0)",
            matches!(&wset, WSolutionSet::Finite(ws) if ws == &vec![Vector::zeros(2)]),
            format!("computed w-set: {wset:?}"),
        );

        let f = get("lcp_segment_3x3");
        cc_claim(&mut out, f, true); // refuted: see the computed witness
        let q = f.q.clone().expect("instance fixture");
        let inst = LCPInstance::new(f.matrix.clone(), q).expect("3x3 with q in R^3");
        let sol = Solution::from_z(&inst, Vector::from_i64(&[4, 4, 1]));
        cite(
            &mut out,
            f.name,
            "z = (4,4,1) solves with w = (0,0,0)",
            matches!(&sol, Ok(s) if s.w.is_zero()),
            match &sol {
                Ok(s) => format!("w = {}", s.w),
                Err(e) => e.to_string(),
            },
        );
        cite(
            &mut out,
            f.name,
            "(2,1,1) is a kernel direction",
            f.matrix.mul_vec(&Vector::from_i64(&[2, 1, 1])).is_zero(),
            format!("A(2,1,1) = {}", f.matrix.mul_vec(&Vector::from_i64(&[2, 1, 1]))),
        );
        let wset = w_solution_set(&inst).expect("within enumeration cap");
        cite(
            &mut out,
            f.name,
            "the w-solution set is finite",
            matches!(&wset, WSolutionSet::Finite(_)),
            match &wset {
                WSolutionSet::Finite(ws) => format!("computed w-set: {ws:?}"),
                WSolutionSet::InfiniteWitness(piece) => format!(
                    "piece over support {} has non-constant w: w varies along ray {:?} from z = {}",
                    piece.support, piece.ray_basis, piece.particular.z
                ),
            },
        );

        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sub_rng_streams_are_stable_and_independent() {
        let mut a1 = sub_rng(1, "alpha");
        let mut a2 = sub_rng(1, "alpha");
        let mut b = sub_rng(1, "beta");
        let xs1: Vec<u64> = (0..4).map(|_| a1.gen()).collect();
        let xs2: Vec<u64> = (0..4).map(|_| a2.gen()).collect();
        let ys: Vec<u64> = (0..4).map(|_| b.gen()).collect();
        assert_eq!(xs1, xs2);
        assert_ne!(xs1, ys);
    }

    #[test]
    fn small_run_passes_every_provable_invariant() {
        let cfg = VerifyConfig {
            seed: 7,
            trials: 12,
            n_max: 3,
        };
        let report = run(&cfg);
        // e0_r0_adequacy encodes a claimed implication that is actually
        // false (see adequacy_claim_has_exact_counterexample below), so its
        // outcome depends on whether the stream hits a counterexample; every
        // other invariant must hold.
        let failed: Vec<String> = report
            .invariants
            .iter()
            .filter(|r| r.name != "e0_r0_adequacy" && !r.passed())
            .map(|r| {
                format!(
                    "{}: {}",
                    r.name,
                    r.first_counterexample.clone().unwrap_or_default()
                )
            })
            .collect();
        assert!(failed.is_empty(), "failed invariants: {failed:?}");
        assert!(report.render().starts_with("seed=7 trials=12 n_max=3"));
    }

    #[test]
    fn adequacy_claim_has_exact_counterexample() {
        // Deterministic witness that "competent + E0 + R0 + nonsingular
        // blocks implies adequate" is false, independent of any RNG stream.
        // Found by inv_e0_r0_adequacy's own randomized search.
        let a = Matrix::from_i64_rows(&[&[4, 4, 3], &[3, 1, 1], &[5, 0, 3]]);
        assert!(is_column_competent(&a).member);
        assert!(is_e0(&a).member);
        assert!(is_r0(&a).member);
        // Strongest reading of the block hypotheses: every proper principal
        // block and every Schur complement is nonsingular.
        assert!(is_principally_nondegenerate(&a).member);
        for s in IndexSet::nonempty_subsets(3).filter(|s| s.len() < 3) {
            assert!(!det(&schur_complement(&a, &s).unwrap()).is_zero());
        }
        let verdict = is_column_adequate(&a, AdequacyMode::Direct).unwrap();
        assert!(!verdict.member, "counterexample must not be adequate");
        let beta = IndexSet::new(3, vec![0, 1]);
        assert_eq!(principal_minor(&a, &beta), rat(-8));
        // The degree argument behind the claim needs the pivot transform on
        // beta to stay in R; it does not even stay in E0.
        let transformed = ppt(&a, &beta).unwrap().transformed;
        assert!(!is_e0(&transformed).member);
        assert!(!is_r(&transformed).member);
        assert!(is_r(&a).member, "R0 iff R does hold for this E0 matrix");
    }

    #[test]
    fn replay_refutes_exactly_the_two_competence_citations_and_the_finite_w_citation() {
        let results = fixtures::replay();
        let refuted: Vec<(&str, &str)> = results
            .iter()
            .filter(|c| !c.upheld)
            .map(|c| (c.fixture, c.claim))
            .collect();
        assert_eq!(
            refuted,
            vec![
                ("kernel_line_3x3", "column competent"),
                ("lcp_segment_3x3", "column competent"),
                ("lcp_segment_3x3", "the w-solution set is finite"),
            ]
        );
        for c in &results {
            assert!(!c.detail.is_empty(), "{}: empty detail", c.claim);
        }
    }

    #[test]
    fn fixture_corpus_is_stable() {
        let fx = fixtures::all();
        assert_eq!(fx.len(), 9);
        let names: Vec<&str> = fx.iter().map(|f| f.name).collect();
        assert!(names.contains(&"xu_singular"));
        assert!(names.contains(&"cc_not_p0"));
        assert_eq!(
            fx.iter().filter(|f| f.q.is_some()).count(),
            3,
            "the two solved instances plus the homogeneous example carry q"
        );
    }
}
