//! Dense matrices over an exact field.
//!
//! Elimination always pivots on the first nonzero entry in column order so
//! that traces are reproducible.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Field;

#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Outcome of [`Matrix::solve`].
#[derive(Clone, Debug, PartialEq)]
pub enum Solution<T> {
    Unique(Vec<T>),
    Inconsistent,
    Underdetermined,
}

/// Outcome of [`in_span`]. `Member` holds coefficients reproducing the
/// target.
#[derive(Clone, Debug, PartialEq)]
pub enum SpanMembership<T> {
    Member(Vec<T>),
    NotMember,
}

impl<T> SpanMembership<T> {
    pub fn is_member(&self) -> bool {
        matches!(self, SpanMembership::Member(_))
    }
}

/// Reduced row echelon form plus the pivot column of each nonzero row.
struct Echelon<T> {
    m: Matrix<T>,
    pivots: Vec<usize>,
}

impl<T: Field> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                actual: data.len(),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let data = (0..rows * cols).map(|t| f(t / cols, t % cols)).collect();
        Matrix { rows, cols, data }
    }

    /// All rows must share one length; an empty list gives a `0 x 0` matrix.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    actual: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: n,
            cols,
            data,
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| T::from_int(v)).collect())
                .collect(),
        )
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

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    fn get_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                actual: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    pub fn mul(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                actual: other.rows,
            });
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(T::zero(), |acc, t| {
                acc + self.get(i, t).clone() * other.get(t, j).clone()
            })
        }))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Gauss-Jordan elimination to reduced row echelon form.
    fn echelon(&self) -> Echelon<T> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = T::one() / m.get(r, c).clone();
            for j in c..m.cols {
                let v = m.get(r, j).clone() * inv.clone();
                *m.get_mut(r, j) = v;
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j).clone() - factor.clone() * m.get(r, j).clone();
                    *m.get_mut(i, j) = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Determinant by elimination; errors on non-square input.
    pub fn determinant(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                actual: self.cols,
            });
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = T::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(T::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det = det * pivot.clone();
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone() / pivot.clone();
                for j in c..n {
                    let v = m.get(i, j).clone() - factor.clone() * m.get(c, j).clone();
                    *m.get_mut(i, j) = v;
                }
            }
        }
        Ok(det)
    }

    /// Classifies `M x = b` and returns `x` when it is unique.
    pub fn solve(&self, b: &[T]) -> Result<Solution<T>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                actual: b.len(),
            });
        }
        let augmented = Self::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let Echelon { m, pivots } = augmented.echelon();
        if pivots.last() == Some(&self.cols) {
            return Ok(Solution::Inconsistent);
        }
        if pivots.len() < self.cols {
            return Ok(Solution::Underdetermined);
        }
        let x = (0..self.cols).map(|r| m.get(r, self.cols).clone()).collect();
        Ok(Solution::Unique(x))
    }

    pub fn inverse(&self) -> Option<Matrix<T>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let augmented = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                T::one()
            } else {
                T::zero()
            }
        });
        let Echelon { m, pivots } = augmented.echelon();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| m.get(i, n + j).clone()))
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.data[i * self.cols..(i + 1) * self.cols]
                .iter()
                .map(|v| v.to_string())
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Rank of a list of equal-length vectors.
pub fn rank_of<T: Field>(vectors: &[Vec<T>]) -> Result<usize> {
    Ok(Matrix::from_rows(vectors.to_vec())?.rank())
}

/// Whether `target` is a rational combination of `vectors`.
///
/// Every vector (and the target) must have the same length; the empty span
/// contains only the zero vector.
pub fn in_span<T: Field>(vectors: &[Vec<T>], target: &[T]) -> Result<SpanMembership<T>> {
    let n = target.len();
    if let Some(v) = vectors.iter().find(|v| v.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: v.len(),
        });
    }
    if vectors.is_empty() {
        return Ok(if target.iter().all(T::is_zero) {
            SpanMembership::Member(Vec::new())
        } else {
            SpanMembership::NotMember
        });
    }
    // columns are the spanning vectors
    let a = Matrix::from_fn(n, vectors.len(), |i, j| vectors[j][i].clone());
    let augmented = Matrix::from_fn(n, vectors.len() + 1, |i, j| {
        if j < vectors.len() {
            a.get(i, j).clone()
        } else {
            target[i].clone()
        }
    });
    let Echelon { m, pivots } = augmented.echelon();
    if pivots.last() == Some(&vectors.len()) {
        return Ok(SpanMembership::NotMember);
    }
    let mut coeffs = vec![T::zero(); vectors.len()];
    for (r, &c) in pivots.iter().enumerate() {
        coeffs[c] = m.get(r, vectors.len()).clone();
    }
    debug_assert!(a.mul_vec(&coeffs).map(|v| v == target).unwrap_or(false));
    Ok(SpanMembership::Member(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::{BigRational, Ratio};
    use proptest::prelude::*;

    type Q = BigRational;

    fn q(v: i64) -> Q {
        Q::from_int(v)
    }

    fn m(rows: &[&[i64]]) -> Matrix<Q> {
        Matrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::<Q>::identity(3).rank(), 3);
        assert_eq!(Matrix::<Q>::zeros(2, 5).rank(), 0);
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn solve_examples() {
        let id = Matrix::<Q>::identity(2);
        assert_eq!(id.solve(&[q(3), q(4)]).unwrap(), Solution::Unique(vec![q(3), q(4)]));
        let a = m(&[&[1, 1], &[2, 2]]);
        assert_eq!(a.solve(&[q(1), q(3)]).unwrap(), Solution::Inconsistent);
        assert_eq!(a.solve(&[q(1), q(2)]).unwrap(), Solution::Underdetermined);
        assert!(a.solve(&[q(1)]).is_err());
    }

    #[test]
    fn span_examples() {
        let v = vec![vec![q(1), q(0)]];
        assert_eq!(in_span(&v, &[q(2), q(0)]).unwrap(), SpanMembership::Member(vec![q(2)]));
        assert_eq!(in_span(&v, &[q(0), q(1)]).unwrap(), SpanMembership::NotMember);
        assert!(in_span::<Q>(&[], &[q(0), q(0)]).unwrap().is_member());
        assert!(!in_span::<Q>(&[], &[q(1)]).unwrap().is_member());
        assert!(in_span(&v, &[q(1)]).is_err());
    }

    #[test]
    fn inverse_and_determinant() {
        let a = m(&[&[2, 1], &[7, 4]]);
        assert_eq!(a.determinant().unwrap(), q(1));
        let inv = a.inverse().unwrap();
        assert_eq!(inv, m(&[&[4, -1], &[-7, 2]]));
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant().unwrap(), q(-1));
    }

    #[test]
    fn works_over_small_rationals() {
        let a: Matrix<Ratio<i64>> = Matrix::from_i64_rows(&[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(a.rank(), 2);
        assert_eq!(a.determinant().unwrap(), Ratio::from_integer(-2));
    }

    fn arb_matrix() -> impl Strategy<Value = Matrix<Q>> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            prop::collection::vec(-3i64..4, r * c)
                .prop_map(move |d| Matrix::new(r, c, d.into_iter().map(q).collect()).unwrap())
        })
    }

    proptest! {
        #[test]
        fn rank_is_transpose_invariant(a in arb_matrix()) {
            prop_assert_eq!(a.rank(), a.transpose().rank());
        }

        #[test]
        fn unique_solutions_substitute_back(a in arb_matrix(), b in prop::collection::vec(-5i64..5, 4)) {
            let b: Vec<Q> = b.into_iter().take(a.rows()).map(q).collect();
            prop_assume!(b.len() == a.rows());
            match a.solve(&b).unwrap() {
                Solution::Unique(x) => prop_assert_eq!(a.mul_vec(&x).unwrap(), b),
                Solution::Underdetermined => prop_assert!(a.rank() < a.cols()),
                Solution::Inconsistent => {
                    let vs: Vec<Vec<Q>> = (0..a.cols()).map(|j| a.column(j)).collect();
                    prop_assert!(!in_span(&vs, &b).unwrap().is_member());
                }
            }
        }

        #[test]
        fn span_certificates_reproduce_target(a in arb_matrix(), w in prop::collection::vec(-3i64..4, 4)) {
            // target built from the columns is always a member
            let vs: Vec<Vec<Q>> = (0..a.cols()).map(|j| a.column(j)).collect();
            let w: Vec<Q> = w.into_iter().cycle().take(a.cols()).map(q).collect();
            let target = a.mul_vec(&w).unwrap();
            match in_span(&vs, &target).unwrap() {
                SpanMembership::Member(c) => prop_assert_eq!(a.mul_vec(&c).unwrap(), target),
                SpanMembership::NotMember => prop_assert!(false, "constructed member rejected"),
            }
        }
    }
}
