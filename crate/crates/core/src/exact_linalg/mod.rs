//! Exact rational linear algebra: scalars, vectors/matrices, index sets,
//! elimination, linear feasibility, and principal pivot transforms.

pub mod elim;
pub mod index_set;
pub mod lp;
pub mod matrix;
pub mod ppt;
pub mod rational;

pub use elim::{det, inverse, null_space_basis, rank, rref, solve_linear, LinearSolve};
pub use index_set::IndexSet;
pub use lp::{feasible, maximize, Constraint, Feasibility, Maximum, Rel};
pub use matrix::{Matrix, Vector};
pub use ppt::{ppt, principal_minor, schur_complement, PptResult};
pub use rational::{format_rational, parse_rational, rat, ratio, Rational};
