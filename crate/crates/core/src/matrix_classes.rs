//! Deciders for the matrix classes that govern LCP solution structure.
//!
//! Each decider returns a [`ClassVerdict`]: the membership bit plus, on the
//! negative side, an exact witness (a vector violating the defining
//! implication, or the index set of an offending principal minor). Witnesses
//! are re-verified in exact arithmetic before they are returned.
//!
//! Column competence is decided through a finite characterization: a matrix
//! is column competent iff for every support `s`, the columns `A[:,s]` and
//! the principal block `A[s,s]` have equal rank. A vector z supported on `s`
//! has z_i (Az)_i = 0 for all i exactly when A[s,s] z_s = 0, and then
//! Az = A[:,s] z_s, so a rank gap is the same thing as a kernel vector of
//! the block that still moves under the full columns.

use crate::error::{Error, Result};
use crate::exact_linalg::{
    det, feasible, format_rational, null_space_basis, rank, Constraint, Feasibility, IndexSet,
    Matrix, Rational, Rel, Vector,
};
use num::{One, Signed, Zero};

/// Classes decided by this module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixClass {
    ColumnCompetent,
    ColumnAdequate,
    P0,
    P,
    PrincipallyNonDegenerate,
    Z,
    E0,
    R0,
    R,
}

impl MatrixClass {
    pub const ALL: [MatrixClass; 9] = [
        MatrixClass::ColumnCompetent,
        MatrixClass::ColumnAdequate,
        MatrixClass::P0,
        MatrixClass::P,
        MatrixClass::PrincipallyNonDegenerate,
        MatrixClass::Z,
        MatrixClass::E0,
        MatrixClass::R0,
        MatrixClass::R,
    ];

    /// Stable identifier used in reports and JSON output.
    pub fn name(self) -> &'static str {
        match self {
            MatrixClass::ColumnCompetent => "column_competent",
            MatrixClass::ColumnAdequate => "column_adequate",
            MatrixClass::P0 => "P0",
            MatrixClass::P => "P",
            MatrixClass::PrincipallyNonDegenerate => "principally_nondegenerate",
            MatrixClass::Z => "Z",
            MatrixClass::E0 => "E0",
            MatrixClass::R0 => "R0",
            MatrixClass::R => "R",
        }
    }
}

impl std::fmt::Display for MatrixClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of one class test.
#[derive(Debug, Clone)]
pub struct ClassVerdict {
    pub class_name: MatrixClass,
    pub member: bool,
    /// Vector witness for non-membership, when the class has one (a vector
    /// breaking the defining implication, embedded into ambient dimension).
    pub witness_vector: Option<Vector>,
    /// Index-set witness: the support or principal block where the failure
    /// was found.
    pub witness_set: Option<IndexSet>,
    /// Short description of the decision procedure and the failure, exact
    /// rationals only.
    pub certificate_note: String,
}

impl ClassVerdict {
    fn member(class_name: MatrixClass, note: impl Into<String>) -> Self {
        ClassVerdict {
            class_name,
            member: true,
            witness_vector: None,
            witness_set: None,
            certificate_note: note.into(),
        }
    }
}

/// Which of the two independent column-adequacy procedures to report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdequacyMode {
    /// Column competent and P0 simultaneously.
    Theorem,
    /// Sign-orthant feasibility scan of the literal definition.
    Direct,
}

/// One theorem cross-check evaluated during [`classify`].
#[derive(Debug, Clone)]
pub struct ConsistencyFlag {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// All verdicts for one matrix plus the cross-checks tying them together.
#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub matrix: Matrix,
    pub verdicts: Vec<ClassVerdict>,
    pub consistency_flags: Vec<ConsistencyFlag>,
}

impl ClassificationReport {
    pub fn verdict(&self, class: MatrixClass) -> &ClassVerdict {
        self.verdicts
            .iter()
            .find(|v| v.class_name == class)
            .expect("report carries every class")
    }
}

/// Decides column competence by the rank characterization, scanning supports
/// by cardinality then lexicographic order and returning the first failure.
pub fn is_column_competent(a: &Matrix) -> ClassVerdict {
    let n = a.n();
    for sigma in IndexSet::nonempty_subsets(n) {
        let cols = a.columns(&sigma);
        let block = a.principal(&sigma);
        if rank(&cols) == rank(&block) {
            continue;
        }
        // The block kernel is strictly larger than the column kernel, so
        // some block-kernel basis vector must move under the full columns.
        let v = null_space_basis(&block)
            .into_iter()
            .find(|v| !cols.mul_vec(v).is_zero())
            .expect("rank gap implies a kernel vector moving under the columns");
        let z = v.embed(&sigma);
        let az = a.mul_vec(&z);
        assert!(z.hadamard(&az).is_zero() && !az.is_zero(), "witness must break the implication");
        return ClassVerdict {
            class_name: MatrixClass::ColumnCompetent,
            member: false,
            witness_vector: Some(z),
            witness_set: Some(sigma.clone()),
            certificate_note: format!(
                "support {sigma}: rank of columns exceeds rank of principal block; \
                 witness z has z_i(Az)_i = 0 for all i but Az != 0"
            ),
        };
    }
    ClassVerdict::member(
        MatrixClass::ColumnCompetent,
        "rank(A[:,s]) = rank(A[s,s]) for every support s",
    )
}

/// Scans nonempty principal minors in enumeration order; returns the first
/// one failing `accept` together with its value.
fn minor_scan(a: &Matrix, accept: impl Fn(&Rational) -> bool) -> Option<(IndexSet, Rational)> {
    IndexSet::nonempty_subsets(a.n()).find_map(|sigma| {
        let minor = det(&a.principal(&sigma));
        if accept(&minor) {
            None
        } else {
            Some((sigma, minor))
        }
    })
}

fn minor_class_verdict(
    a: &Matrix,
    class: MatrixClass,
    accept: impl Fn(&Rational) -> bool,
    requirement: &str,
) -> ClassVerdict {
    match minor_scan(a, accept) {
        None => ClassVerdict::member(
            class,
            format!("all nonempty principal minors are {requirement}"),
        ),
        Some((sigma, minor)) => ClassVerdict {
            class_name: class,
            member: false,
            witness_vector: None,
            witness_set: Some(sigma.clone()),
            certificate_note: format!(
                "principal minor at {sigma} equals {}, not {requirement}",
                format_rational(&minor)
            ),
        },
    }
}

/// P0: every nonempty principal minor is nonnegative.
pub fn is_p0(a: &Matrix) -> ClassVerdict {
    minor_class_verdict(a, MatrixClass::P0, |m| !m.is_negative(), "nonnegative")
}

/// P: every nonempty principal minor is positive.
pub fn is_p(a: &Matrix) -> ClassVerdict {
    minor_class_verdict(a, MatrixClass::P, |m| m.is_positive(), "positive")
}

/// Principally non-degenerate: every nonempty principal minor is nonzero.
pub fn is_principally_nondegenerate(a: &Matrix) -> ClassVerdict {
    minor_class_verdict(
        a,
        MatrixClass::PrincipallyNonDegenerate,
        |m| !m.is_zero(),
        "nonzero",
    )
}

/// Second, determinant-free route to principal non-degeneracy: every
/// principal block has trivial kernel. Kept independent of [`is_principally_nondegenerate`]
/// so the two paths can cross-check each other.
pub fn all_principal_kernels_trivial(a: &Matrix) -> (bool, Option<IndexSet>) {
    for sigma in IndexSet::nonempty_subsets(a.n()) {
        if !null_space_basis(&a.principal(&sigma)).is_empty() {
            return (false, Some(sigma));
        }
    }
    (true, None)
}

/// Z: all off-diagonal entries nonpositive.
pub fn is_z(a: &Matrix) -> ClassVerdict {
    let n = a.n();
    for i in 0..n {
        for j in 0..n {
            if i != j && a.get(i, j).is_positive() {
                return ClassVerdict {
                    class_name: MatrixClass::Z,
                    member: false,
                    witness_vector: None,
                    witness_set: Some(IndexSet::new(n, vec![i, j])),
                    certificate_note: format!(
                        "off-diagonal entry ({}, {}) equals {}, which is positive",
                        i + 1,
                        j + 1,
                        format_rational(a.get(i, j))
                    ),
                };
            }
        }
    }
    ClassVerdict::member(MatrixClass::Z, "all off-diagonal entries are nonpositive")
}

/// Row `i` of the block `a[rows, cols]` as a coefficient vector over the
/// `cols` variables.
fn block_row(a: &Matrix, row: usize, cols: &IndexSet) -> Vector {
    Vector(cols.iter().map(|j| a.get(row, j).clone()).collect())
}

/// E0 (semimonotone): for every nonzero z >= 0 some i has z_i > 0 and
/// (Az)_i >= 0. Tested per support: membership fails exactly when
/// { z_s > 0, A[s,s] z_s < 0 } is feasible for some s.
pub fn is_e0(a: &Matrix) -> ClassVerdict {
    let n = a.n();
    for sigma in IndexSet::nonempty_subsets(n) {
        let k = sigma.len();
        let mut cons = Vec::with_capacity(2 * k);
        for p in 0..k {
            let mut e = Vector::zeros(k);
            e.0[p] = Rational::one();
            cons.push(Constraint::gt0(e));
        }
        for i in sigma.iter() {
            cons.push(Constraint::lt0(block_row(a, i, &sigma)));
        }
        if let Feasibility::Feasible(zs) =
            feasible(k, &cons).expect("homogeneous strict system")
        {
            let z = zs.scaled_primitive().embed(&sigma);
            let az = a.mul_vec(&z);
            for i in sigma.iter() {
                assert!(az[i].is_negative(), "E0 witness must have (Az)_i < 0 on its support");
            }
            return ClassVerdict {
                class_name: MatrixClass::E0,
                member: false,
                witness_vector: Some(z),
                witness_set: Some(sigma.clone()),
                certificate_note: format!(
                    "support {sigma}: z positive there with (Az)_i < 0 at every support index"
                ),
            };
        }
    }
    ClassVerdict::member(
        MatrixClass::E0,
        "for every support s, {z_s > 0, A[s,s] z_s < 0} is infeasible",
    )
}

/// R0: z = 0 is the only solution of LCP(0, A). Non-membership witness is a
/// nonzero solution, found per support via
/// { z_s > 0, A[s,s] z_s = 0, A[s-bar,s] z_s >= 0 }.
pub fn is_r0(a: &Matrix) -> ClassVerdict {
    let n = a.n();
    for sigma in IndexSet::nonempty_subsets(n) {
        let k = sigma.len();
        let mut cons = Vec::new();
        for p in 0..k {
            let mut e = Vector::zeros(k);
            e.0[p] = Rational::one();
            cons.push(Constraint::gt0(e));
        }
        for i in sigma.iter() {
            cons.push(Constraint::eq(block_row(a, i, &sigma), Rational::zero()));
        }
        for i in sigma.complement().iter() {
            cons.push(Constraint::ge(block_row(a, i, &sigma), Rational::zero()));
        }
        if let Feasibility::Feasible(zs) =
            feasible(k, &cons).expect("homogeneous strict system")
        {
            let z = zs.scaled_primitive().embed(&sigma);
            let az = a.mul_vec(&z);
            assert!(
                !z.is_zero() && z.is_nonneg() && az.is_nonneg() && z.hadamard(&az).is_zero(),
                "R0 witness must be a nonzero solution of LCP(0, A)"
            );
            return ClassVerdict {
                class_name: MatrixClass::R0,
                member: false,
                witness_vector: Some(z),
                witness_set: Some(sigma.clone()),
                certificate_note: format!(
                    "support {sigma}: nonzero solution of LCP(0, A) found"
                ),
            };
        }
    }
    ClassVerdict::member(
        MatrixClass::R0,
        "LCP(0, A) admits no nonzero solution on any support",
    )
}

/// R (regular): z = 0 is the only solution of {z >= 0, Az + t e >= 0,
/// z_i (Az + t e)_i = 0} over all t >= 0. Tested per support over the
/// variables (z_s, t).
pub fn is_r(a: &Matrix) -> ClassVerdict {
    let n = a.n();
    for sigma in IndexSet::nonempty_subsets(n) {
        let k = sigma.len();
        // Variable layout: k support entries of z, then t.
        let mut cons = Vec::new();
        for p in 0..k {
            let mut e = Vector::zeros(k + 1);
            e.0[p] = Rational::one();
            cons.push(Constraint::gt0(e));
        }
        let mut t_row = Vector::zeros(k + 1);
        t_row.0[k] = Rational::one();
        cons.push(Constraint::ge(t_row, Rational::zero()));
        for i in sigma.iter() {
            let mut row = block_row(a, i, &sigma);
            row.0.push(Rational::one());
            cons.push(Constraint::eq(row, Rational::zero()));
        }
        for i in sigma.complement().iter() {
            let mut row = block_row(a, i, &sigma);
            row.0.push(Rational::one());
            cons.push(Constraint::ge(row, Rational::zero()));
        }
        if let Feasibility::Feasible(x) =
            feasible(k + 1, &cons).expect("homogeneous strict system")
        {
            let x = x.scaled_primitive();
            let t = x.0[k].clone();
            let z = Vector(x.0[..k].to_vec()).embed(&sigma);
            return ClassVerdict {
                class_name: MatrixClass::R,
                member: false,
                witness_vector: Some(z),
                witness_set: Some(sigma.clone()),
                certificate_note: format!(
                    "support {sigma}: nonzero (z, t) with t = {} solves the parametrized system",
                    format_rational(&t)
                ),
            };
        }
    }
    ClassVerdict::member(
        MatrixClass::R,
        "the parametrized system has no nonzero solution on any support",
    )
}

/// Direct decision of column adequacy from the definition: the matrix fails
/// iff some sign orthant contains z with z_i (Az)_i <= 0 for all i and
/// Az != 0. Scans supports, then sign patterns on the support, then the
/// coordinate where Az is forced nonzero.
fn adequacy_direct(a: &Matrix) -> ClassVerdict {
    let n = a.n();
    for sigma in IndexSet::nonempty_subsets(n) {
        let k = sigma.len();
        for mask in 0u64..(1 << k) {
            // Bit 0 means positive sign for the corresponding support index.
            let sign_of = |i: usize| -> i8 {
                match sigma.position_of(i) {
                    None => 0,
                    Some(p) => {
                        if mask >> p & 1 == 0 {
                            1
                        } else {
                            -1
                        }
                    }
                }
            };
            let mut base = Vec::new();
            for i in 0..n {
                let mut e = Vector::zeros(n);
                e.0[i] = Rational::one();
                match sign_of(i) {
                    0 => base.push(Constraint::eq(e, Rational::zero())),
                    1 => base.push(Constraint::gt0(e)),
                    _ => base.push(Constraint::lt0(e)),
                }
            }
            for i in sigma.iter() {
                let row = a.row(i);
                if sign_of(i) == 1 {
                    base.push(Constraint::le(row, Rational::zero()));
                } else {
                    base.push(Constraint::ge(row, Rational::zero()));
                }
            }
            // Prefilter: if even the weak part of the orthant system is
            // empty, no coordinate case can succeed.
            let seed = match feasible(n, &base).expect("homogeneous strict system") {
                Feasibility::Infeasible => continue,
                Feasibility::Feasible(z) => z,
            };
            if let Some(v) = adequacy_violation(a, &sigma, seed) {
                return v;
            }
            for j in 0..n {
                for strict in [Rel::Gt, Rel::Lt] {
                    // Skip cases contradicting the orthant's own weak
                    // constraint on (Az)_j.
                    if (sign_of(j) == 1 && strict == Rel::Gt)
                        || (sign_of(j) == -1 && strict == Rel::Lt)
                    {
                        continue;
                    }
                    let mut cons = base.clone();
                    cons.push(Constraint::new(a.row(j), strict, Rational::zero()));
                    if let Feasibility::Feasible(z) =
                        feasible(n, &cons).expect("homogeneous strict system")
                    {
                        let v = adequacy_violation(a, &sigma, z)
                            .expect("feasible point with (Az)_j != 0 violates adequacy");
                        return v;
                    }
                }
            }
        }
    }
    ClassVerdict::member(
        MatrixClass::ColumnAdequate,
        "sign-orthant scan: z_i(Az)_i <= 0 for all i forces Az = 0 (direct mode)",
    )
}

/// Packages z as an adequacy violation if Az != 0, re-checking the defining
/// inequalities exactly.
fn adequacy_violation(a: &Matrix, sigma: &IndexSet, z: Vector) -> Option<ClassVerdict> {
    let z = z.scaled_primitive();
    let az = a.mul_vec(&z);
    if az.is_zero() {
        return None;
    }
    let psi = z.hadamard(&az);
    assert!(
        psi.0.iter().all(|c| !c.is_positive()),
        "adequacy witness must satisfy z_i(Az)_i <= 0 for all i"
    );
    Some(ClassVerdict {
        class_name: MatrixClass::ColumnAdequate,
        member: false,
        witness_vector: Some(z),
        witness_set: Some(sigma.clone()),
        certificate_note: format!(
            "support {sigma}: z has z_i(Az)_i <= 0 everywhere yet Az != 0 (direct mode)"
        ),
    })
}

/// Column adequacy via the composition theorem: member iff column competent
/// and P0.
fn adequacy_theorem(cc: &ClassVerdict, p0: &ClassVerdict) -> ClassVerdict {
    if cc.member && p0.member {
        ClassVerdict::member(
            MatrixClass::ColumnAdequate,
            "column competent and P0 (theorem mode)",
        )
    } else {
        let source = if !cc.member { cc } else { p0 };
        ClassVerdict {
            class_name: MatrixClass::ColumnAdequate,
            member: false,
            witness_vector: source.witness_vector.clone(),
            witness_set: source.witness_set.clone(),
            certificate_note: format!(
                "{} fails (theorem mode): {}",
                source.class_name, source.certificate_note
            ),
        }
    }
}

fn adequacy_both(
    a: &Matrix,
    cc: &ClassVerdict,
    p0: &ClassVerdict,
) -> Result<(ClassVerdict, ClassVerdict)> {
    let theorem = adequacy_theorem(cc, p0);
    let direct = adequacy_direct(a);
    if theorem.member != direct.member {
        return Err(Error::ModeDisagreement {
            theorem: theorem.member,
            direct: direct.member,
        });
    }
    Ok((theorem, direct))
}

/// Decides column adequacy, always running both procedures and failing hard
/// if they disagree.
pub fn is_column_adequate(a: &Matrix, mode: AdequacyMode) -> Result<ClassVerdict> {
    let cc = is_column_competent(a);
    let p0 = is_p0(a);
    let (theorem, direct) = adequacy_both(a, &cc, &p0)?;
    Ok(match mode {
        AdequacyMode::Theorem => theorem,
        AdequacyMode::Direct => direct,
    })
}

/// Runs every class test plus the theorem cross-checks. A failed cross-check
/// is an error, never a silently inconsistent report.
pub fn classify(a: &Matrix) -> Result<ClassificationReport> {
    let cc = is_column_competent(a);
    let p0 = is_p0(a);
    let p = is_p(a);
    let nd = is_principally_nondegenerate(a);
    let z = is_z(a);
    let e0 = is_e0(a);
    let r0 = is_r0(a);
    let r = is_r(a);
    let (adequate, adequate_direct) = adequacy_both(a, &cc, &p0)?;
    let (kernels_trivial, kernel_set) = all_principal_kernels_trivial(a);

    let flags = vec![
        ConsistencyFlag {
            name: "adequacy_modes_agree",
            passed: true,
            detail: format!(
                "theorem mode and direct sign-orthant mode both say member = {}",
                adequate_direct.member
            ),
        },
        ConsistencyFlag {
            name: "adequate_iff_competent_and_p0",
            passed: adequate_direct.member == (cc.member && p0.member),
            detail: format!(
                "direct adequacy = {}, column competent = {}, P0 = {}",
                adequate_direct.member, cc.member, p0.member
            ),
        },
        ConsistencyFlag {
            name: "nondegeneracy_paths_agree",
            passed: nd.member == kernels_trivial,
            detail: format!(
                "minor scan says {}, kernel scan says {}{}",
                nd.member,
                kernels_trivial,
                kernel_set
                    .map(|s| format!(" (nontrivial kernel at {s})"))
                    .unwrap_or_default()
            ),
        },
        ConsistencyFlag {
            name: "e0_members_have_r0_iff_r",
            passed: !e0.member || (r0.member == r.member),
            detail: format!(
                "E0 = {}, R0 = {}, R = {}",
                e0.member, r0.member, r.member
            ),
        },
        ConsistencyFlag {
            name: "p_implies_p0_and_nondegenerate",
            passed: !p.member || (p0.member && nd.member),
            detail: format!("P = {}, P0 = {}, nondegenerate = {}", p.member, p0.member, nd.member),
        },
        ConsistencyFlag {
            name: "nondegenerate_implies_competent",
            passed: !nd.member || cc.member,
            detail: format!("nondegenerate = {}, column competent = {}", nd.member, cc.member),
        },
        ConsistencyFlag {
            name: "competent_nondegenerate_implies_r0",
            passed: !(cc.member && nd.member) || r0.member,
            detail: format!(
                "column competent = {}, nondegenerate = {}, R0 = {}",
                cc.member, nd.member, r0.member
            ),
        },
    ];
    if let Some(bad) = flags.iter().find(|f| !f.passed) {
        return Err(Error::Inconsistent(format!("{}: {}", bad.name, bad.detail)));
    }
    Ok(ClassificationReport {
        matrix: a.clone(),
        verdicts: vec![cc, adequate, p0, p, nd, z, e0, r0, r],
        consistency_flags: flags,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::rat;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64_rows(rows)
    }

    fn assert_cc_witness_sound(a: &Matrix, v: &ClassVerdict) {
        let z = v.witness_vector.as_ref().expect("witness vector");
        let az = a.mul_vec(z);
        assert!(z.hadamard(&az).is_zero());
        assert!(!az.is_zero());
    }

    #[test]
    fn competent_examples() {
        let v = is_column_competent(&m(&[&[1, 0], &[1, 0]]));
        assert!(v.member);

        let v = is_column_competent(&m(&[&[1, 1], &[0, 0]]));
        assert!(!v.member);
        assert_cc_witness_sound(&m(&[&[1, 1], &[0, 0]]), &v);
        assert_eq!(v.witness_vector.unwrap(), Vector::from_i64(&[0, 1]));

        let a = m(&[&[1, 4, 3], &[2, 1, 5], &[3, 2, 0]]);
        let v = is_column_competent(&a);
        assert!(!v.member);
        assert_eq!(v.witness_vector.unwrap(), Vector::from_i64(&[0, 0, 1]));
    }

    #[test]
    fn competent_fails_on_zero_diagonal_coupling() {
        // z = (0,0,1) zeroes every product z_i(Az)_i yet Az = (0,1,0).
        let a = m(&[&[3, -2, 0], &[-2, 1, 1], &[-3, 2, 0]]);
        let v = is_column_competent(&a);
        assert!(!v.member);
        assert_eq!(
            v.witness_vector.as_ref().unwrap(),
            &Vector::from_i64(&[0, 0, 1])
        );
        assert_cc_witness_sound(&a, &v);
    }

    #[test]
    fn competent_fails_on_rank_one_coupled_block() {
        // z = (1,2,0) kills the products but Az = (0,0,-1).
        let a = m(&[&[-2, 1, 3], &[4, -2, -6], &[1, -1, -1]]);
        let v = is_column_competent(&a);
        assert!(!v.member);
        assert_eq!(
            v.witness_vector.as_ref().unwrap(),
            &Vector::from_i64(&[1, 2, 0])
        );
        assert_cc_witness_sound(&a, &v);
    }

    #[test]
    fn minor_classes() {
        let a = m(&[&[2, 1], &[1, -1]]);
        let v = is_p0(&a);
        assert!(!v.member);
        assert_eq!(v.witness_set.unwrap(), IndexSet::new(2, vec![1]));

        let a = m(&[&[2, -1], &[-4, 2]]);
        assert!(is_p0(&a).member);
        let v = is_p(&a);
        assert!(!v.member);
        assert_eq!(v.witness_set.unwrap(), IndexSet::new(2, vec![0, 1]));
        assert!(!is_principally_nondegenerate(&a).member);

        let id = Matrix::identity(3);
        assert!(is_p(&id).member);
        assert!(is_p0(&id).member);
        assert!(is_principally_nondegenerate(&id).member);
    }

    #[test]
    fn z_class() {
        assert!(is_z(&m(&[&[1, -2], &[0, 3]])).member);
        assert!(is_z(&Matrix::identity(2)).member);
        let v = is_z(&m(&[&[1, 4, 3], &[2, 1, 5], &[3, 2, 0]]));
        assert!(!v.member);
        assert!(v.certificate_note.contains("(1, 2)"));
    }

    #[test]
    fn e0_class() {
        assert!(is_e0(&Matrix::identity(2)).member);
        let v = is_e0(&m(&[&[-1]]));
        assert!(!v.member);
        assert_eq!(v.witness_vector.unwrap(), Vector::from_i64(&[1]));
        assert!(is_e0(&m(&[&[0, 1], &[1, 0]])).member);
    }

    #[test]
    fn r0_class() {
        assert!(is_r0(&m(&[&[1, 1, 4], &[2, 2, 5], &[3, 4, 1]])).member);
        assert!(is_r0(&Matrix::identity(2)).member);
        let v = is_r0(&m(&[&[2, -1], &[-4, 2]]));
        assert!(!v.member);
        assert_eq!(v.witness_vector.unwrap(), Vector::from_i64(&[1, 2]));
    }

    #[test]
    fn r_class() {
        assert!(is_r(&Matrix::identity(2)).member);
        let v = is_r(&m(&[&[2, -1], &[-4, 2]]));
        assert!(!v.member);
        assert!(v.certificate_note.contains("t = 0"));

        // On an E0 member, R and R0 must agree.
        let a = m(&[&[1, 1, 4], &[2, 2, 5], &[3, 4, 1]]);
        assert!(is_e0(&a).member);
        assert_eq!(is_r(&a).member, is_r0(&a).member);
    }

    #[test]
    fn adequacy_modes() {
        let a = m(&[&[2, -1], &[-4, 2]]);
        assert!(is_column_adequate(&a, AdequacyMode::Theorem).unwrap().member);
        assert!(is_column_adequate(&a, AdequacyMode::Direct).unwrap().member);

        let a = m(&[&[2, 1], &[1, -1]]);
        let v = is_column_adequate(&a, AdequacyMode::Theorem).unwrap();
        assert!(!v.member);
        let v = is_column_adequate(&a, AdequacyMode::Direct).unwrap();
        assert!(!v.member);
        let z = v.witness_vector.unwrap();
        let az = a.mul_vec(&z);
        assert!(!az.is_zero());
        assert!(z.hadamard(&az).0.iter().all(|c| !c.is_positive()));

        let a = m(&[&[3, -2, 0], &[-2, 1, 1], &[-3, 2, 0]]);
        assert!(!is_column_adequate(&a, AdequacyMode::Theorem).unwrap().member);
    }

    #[test]
    fn classify_reports() {
        let rep = classify(&Matrix::identity(3)).unwrap();
        for v in &rep.verdicts {
            assert!(v.member, "identity belongs to {}", v.class_name);
        }

        let rep = classify(&m(&[&[2, -1], &[-4, 2]])).unwrap();
        assert!(rep.verdict(MatrixClass::ColumnCompetent).member);
        assert!(rep.verdict(MatrixClass::ColumnAdequate).member);
        assert!(rep.verdict(MatrixClass::P0).member);
        assert!(!rep.verdict(MatrixClass::P).member);
        assert!(!rep.verdict(MatrixClass::PrincipallyNonDegenerate).member);
        assert!(!rep.verdict(MatrixClass::R0).member);
        assert!(rep.consistency_flags.iter().all(|f| f.passed));

        let rep = classify(&m(&[&[1, 1, 4], &[2, 2, 5], &[3, 4, 1]])).unwrap();
        assert!(rep.verdict(MatrixClass::R0).member);
        assert!(!rep.verdict(MatrixClass::ColumnCompetent).member);
    }

    #[test]
    fn kernel_path_matches_minor_path() {
        for a in [
            m(&[&[2, -1], &[-4, 2]]),
            m(&[&[2, 1], &[1, -1]]),
            Matrix::identity(3),
            m(&[&[1, 1], &[0, 0]]),
        ] {
            let (trivial, _) = all_principal_kernels_trivial(&a);
            assert_eq!(trivial, is_principally_nondegenerate(&a).member);
        }
    }

    fn small_matrix(n: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-4i64..=4, n * n).prop_map(move |entries| {
            let rows: Vec<Vec<Rational>> = entries
                .chunks(n)
                .map(|row| row.iter().map(|&e| rat(e)).collect())
                .collect();
            Matrix::from_rows(rows)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn prop_cc_witness_sound(a in small_matrix(3)) {
            let v = is_column_competent(&a);
            if !v.member {
                assert_cc_witness_sound(&a, &v);
            }
        }

        #[test]
        fn prop_adequacy_modes_agree(a in small_matrix(3)) {
            prop_assert!(is_column_adequate(&a, AdequacyMode::Theorem).is_ok());
        }

        #[test]
        fn prop_nondegeneracy_paths_agree(a in small_matrix(3)) {
            let (trivial, _) = all_principal_kernels_trivial(&a);
            prop_assert_eq!(trivial, is_principally_nondegenerate(&a).member);
        }

        #[test]
        fn prop_classify_consistent(a in small_matrix(2)) {
            let rep = classify(&a).unwrap();
            prop_assert!(rep.consistency_flags.iter().all(|f| f.passed));
        }
    }
}
