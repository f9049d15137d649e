//! Dense rational vectors and matrices.
//!
//! Matrices are rectangular in general (rank and null-space computations run
//! on column blocks); the LCP-facing entry points check squareness where it
//! is required. Dimensions are fixed at construction.

use std::fmt;
use std::ops::Index;

use num::{Signed, Zero};

use super::index_set::IndexSet;
use super::rational::{format_rational, rat, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector(pub Vec<Rational>);

impl Vector {
    pub fn zeros(n: usize) -> Self {
        Vector(vec![Rational::zero(); n])
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        Vector(entries.iter().map(|&x| rat(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|x| x.is_positive())
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.len(), other.len());
        Vector(self.iter().zip(other.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.len(), other.len());
        Vector(self.iter().zip(other.iter()).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &Rational) -> Vector {
        Vector(self.iter().map(|a| a * c).collect())
    }

    pub fn dot(&self, other: &Vector) -> Rational {
        assert_eq!(self.len(), other.len());
        self.iter().zip(other.iter()).map(|(a, b)| a * b).sum()
    }

    /// Componentwise product.
    pub fn hadamard(&self, other: &Vector) -> Vector {
        assert_eq!(self.len(), other.len());
        Vector(self.iter().zip(other.iter()).map(|(a, b)| a * b).collect())
    }

    /// Componentwise max(x, 0).
    pub fn pos_part(&self) -> Vector {
        Vector(
            self.iter()
                .map(|x| if x.is_positive() { x.clone() } else { Rational::zero() })
                .collect(),
        )
    }

    /// Componentwise max(-x, 0), so that self = pos_part - neg_part.
    pub fn neg_part(&self) -> Vector {
        Vector(
            self.iter()
                .map(|x| if x.is_negative() { -x.clone() } else { Rational::zero() })
                .collect(),
        )
    }

    pub fn abs(&self) -> Vector {
        Vector(self.iter().map(|x| x.abs()).collect())
    }

    /// Indices of nonzero entries.
    pub fn support(&self) -> IndexSet {
        let idx = (0..self.len()).filter(|&i| !self.0[i].is_zero()).collect();
        IndexSet::new(self.len(), idx)
    }

    /// Entries at `set`, in order.
    pub fn restrict(&self, set: &IndexSet) -> Vector {
        assert_eq!(set.ambient(), self.len());
        Vector(set.iter().map(|i| self.0[i].clone()).collect())
    }

    /// Places this vector's entries at the positions in `set` of an
    /// otherwise-zero vector of length `set.ambient()`.
    pub fn embed(&self, set: &IndexSet) -> Vector {
        assert_eq!(self.len(), set.len());
        let mut out = Vector::zeros(set.ambient());
        for (k, i) in set.iter().enumerate() {
            out.0[i] = self.0[k].clone();
        }
        out
    }

    /// Scales by the positive rational that clears denominators and divides
    /// out the numerator gcd. Preserves direction (no sign flip), so it is
    /// safe for witnesses of sign-constrained systems.
    pub fn scaled_primitive(&self) -> Vector {
        if self.is_zero() {
            return self.clone();
        }
        let lcm_den = self
            .iter()
            .filter(|x| !x.is_zero())
            .fold(num::BigInt::from(1), |acc, x| num::integer::lcm(acc, x.denom().clone()));
        let scaled: Vec<num::BigInt> = self
            .iter()
            .map(|x| (x * Rational::from_integer(lcm_den.clone())).to_integer())
            .collect();
        let gcd = scaled
            .iter()
            .filter(|n| !n.is_zero())
            .fold(num::BigInt::zero(), |acc, n| num::integer::gcd(acc, n.clone()));
        Vector(scaled.iter().map(|n| Rational::from_integer(n / gcd.clone())).collect())
    }

    /// Primitive form with the first nonzero entry positive. Only meaningful
    /// for direction vectors (null-space basis elements), where sign is free.
    pub fn canonical_direction(&self) -> Vector {
        let p = self.scaled_primitive();
        match p.iter().find(|x| !x.is_zero()) {
            Some(first) if first.is_negative() => p.scale(&rat(-1)),
            _ => p,
        }
    }
}

impl Index<usize> for Vector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rational(x))?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, rat(1));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Side length of a square matrix.
    pub fn n(&self) -> usize {
        assert!(self.is_square(), "matrix is {}x{}, expected square", self.rows, self.cols);
        self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn col(&self, j: usize) -> Vector {
        Vector((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn mul_vec(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        Vector(
            (0..self.rows)
                .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
                .collect(),
        )
    }

    pub fn mul_mat(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Rational::zero();
                for k in 0..self.cols {
                    acc += self.get(i, k) * other.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x.clone()).collect(),
        }
    }

    pub fn submatrix(&self, row_set: &IndexSet, col_set: &IndexSet) -> Matrix {
        assert_eq!(row_set.ambient(), self.rows);
        assert_eq!(col_set.ambient(), self.cols);
        let mut out = Matrix::zeros(row_set.len(), col_set.len());
        for (i, r) in row_set.iter().enumerate() {
            for (j, c) in col_set.iter().enumerate() {
                out.set(i, j, self.get(r, c).clone());
            }
        }
        out
    }

    /// Principal submatrix A[set][set].
    pub fn principal(&self, set: &IndexSet) -> Matrix {
        self.submatrix(set, set)
    }

    /// Column block A[:, set] (all rows).
    pub fn columns(&self, set: &IndexSet) -> Matrix {
        self.submatrix(&IndexSet::full(self.rows), set)
    }

    /// P A P^T for the permutation sending position i to perm[i].
    pub fn permute_symmetric(&self, perm: &[usize]) -> Matrix {
        let n = self.n();
        assert_eq!(perm.len(), n);
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(perm[i], perm[j], self.get(i, j).clone());
            }
        }
        out
    }

    /// D A D for a positive diagonal given by `diag`.
    pub fn scale_symmetric(&self, diag: &Vector) -> Matrix {
        let n = self.n();
        assert_eq!(diag.len(), n);
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, &diag[i] * self.get(i, j) * &diag[j]);
            }
        }
        out
    }

    /// Glues `self` and `right` side by side.
    pub fn augment(&self, right: &Matrix) -> Matrix {
        assert_eq!(self.rows, right.rows);
        let mut out = Matrix::zeros(self.rows, self.cols + right.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..right.cols {
                out.set(i, self.cols + j, right.get(i, j).clone());
            }
        }
        out
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", format_rational(self.get(i, j)))?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::rational::ratio;

    #[test]
    fn vector_parts_recompose() {
        let z = Vector::from_i64(&[-1, 2, 0]);
        assert_eq!(z.pos_part(), Vector::from_i64(&[0, 2, 0]));
        assert_eq!(z.neg_part(), Vector::from_i64(&[1, 0, 0]));
        assert_eq!(z.pos_part().sub(&z.neg_part()), z);
        assert_eq!(z.abs(), Vector::from_i64(&[1, 2, 0]));
        assert_eq!(z.support().to_string(), "{1,2}");
    }

    #[test]
    fn restrict_and_embed_are_inverse_on_support() {
        let z = Vector::from_i64(&[0, 5, 0, 7]);
        let s = z.support();
        assert_eq!(z.restrict(&s).embed(&s), z);
    }

    #[test]
    fn primitive_scaling() {
        let v = Vector(vec![ratio(1, 2), rat(1)]);
        assert_eq!(v.scaled_primitive(), Vector::from_i64(&[1, 2]));
        let w = Vector::from_i64(&[-2, -4]);
        // direction preserved
        assert_eq!(w.scaled_primitive(), Vector::from_i64(&[-1, -2]));
        // canonical direction flips sign
        assert_eq!(w.canonical_direction(), Vector::from_i64(&[1, 2]));
        assert!(Vector::zeros(3).scaled_primitive().is_zero());
    }

    #[test]
    fn matrix_products() {
        let a = Matrix::from_i64_rows(&[&[1, 2], &[3, 4]]);
        let v = Vector::from_i64(&[1, -1]);
        assert_eq!(a.mul_vec(&v), Vector::from_i64(&[-1, -1]));
        let i = Matrix::identity(2);
        assert_eq!(a.mul_mat(&i), a);
        assert_eq!(a.transpose().transpose(), a);
    }

    #[test]
    fn principal_and_column_blocks() {
        let a = Matrix::from_i64_rows(&[&[1, 4, 3], &[2, 1, 5], &[3, 2, 0]]);
        let s = IndexSet::new(3, vec![0, 2]);
        assert_eq!(a.principal(&s), Matrix::from_i64_rows(&[&[1, 3], &[3, 0]]));
        assert_eq!(
            a.columns(&s),
            Matrix::from_i64_rows(&[&[1, 3], &[2, 5], &[3, 0]])
        );
    }

    #[test]
    fn symmetric_permutation_moves_entries() {
        let a = Matrix::from_i64_rows(&[&[1, 2], &[3, 4]]);
        // swap indices 0 and 1
        let p = a.permute_symmetric(&[1, 0]);
        assert_eq!(p, Matrix::from_i64_rows(&[&[4, 3], &[2, 1]]));
    }
}
