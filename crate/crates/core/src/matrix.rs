//! Dense exact-rational matrices and row vectors.
//!
//! Sizes here are desk scale (ambient dimensions of a few dozen), so plain
//! Gaussian elimination over `Scalar` is the whole story.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

pub type Vector = Vec<Scalar>;

pub fn zero_vector(len: usize) -> Vector {
    vec![Scalar::zero(); len]
}

pub fn unit_vector(len: usize, index: usize) -> Vector {
    let mut v = zero_vector(len);
    v[index] = Scalar::one();
    v
}

pub fn vector_from_ints(entries: &[i64]) -> Vector {
    entries.iter().map(|&n| scalar::int(n)).collect()
}

pub fn vector_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn vector_add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vector_sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vector_scale(a: &[Scalar], c: &Scalar) -> Vector {
    a.iter().map(|x| x * c).collect()
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Concatenates two coordinate blocks, e.g. to form an element of a direct sum.
pub fn vector_concat(a: &[Scalar], b: &[Scalar]) -> Vector {
    let mut v = a.to_vec();
    v.extend_from_slice(b);
    v
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for r in &rows {
            if r.len() != ncols {
                return Err(Error::DimensionMismatch {
                    expected: ncols,
                    got: r.len(),
                });
            }
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| vector_from_ints(r)).collect())
            .expect("integer literal rows have equal length")
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + a * b;
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Matrix acting on a coordinate column vector: `self * v`.
    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vector> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), v)).collect())
    }

    /// Row vector acting on the matrix: `v * self`.
    pub fn vec_mul(&self, v: &[Scalar]) -> Result<Vector> {
        if self.rows != v.len() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: v.len(),
            });
        }
        Ok((0..self.cols)
            .map(|j| (0..self.rows).map(|i| &v[i] * self.get(i, j)).sum())
            .collect())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                got: other.rows * other.cols,
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Reduced row echelon form: leading-1 pivots, pivot columns strictly
    /// increasing, zeros above and below pivots. Returns the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let pivot_row = (r..m.rows).find(|&i| !m.get(i, c).is_zero());
            let Some(p) = pivot_row else { continue };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip();
            m.scale_row(r, &inv);
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let factor = m.get(i, c).clone();
                    m.row_sub_scaled(i, r, &factor);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : self * x = 0}`, returned as rows in canonical RREF form.
    pub fn nullspace(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = zero_vector(self.cols);
            v[f] = Scalar::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, f).clone();
            }
            basis.push(v);
        }
        let m = Matrix::from_rows(basis).expect("nullspace rows have equal length");
        m.rref().0.drop_zero_rows()
    }

    pub fn drop_zero_rows(&self) -> Matrix {
        let rows: Vec<Vector> = self
            .rows_iter()
            .filter(|r| !vector_is_zero(r))
            .map(<[Scalar]>::to_vec)
            .collect();
        let cols = self.cols;
        let nrows = rows.len();
        Matrix {
            rows: nrows,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn det(&self) -> Result<Scalar> {
        if self.rows != self.cols {
            return Err(Error::NotSquare);
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(Scalar::zero());
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det *= &pivot;
            let inv = pivot.recip();
            for i in (c + 1)..n {
                if !m.get(i, c).is_zero() {
                    let factor = m.get(i, c) * &inv;
                    m.row_sub_scaled(i, c, &factor);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::NotSquare);
        }
        let n = self.rows;
        let mut aug = self.clone();
        let mut inv = Matrix::identity(n);
        let mut r = 0;
        for c in 0..n {
            let Some(p) = (r..n).find(|&i| !aug.get(i, c).is_zero()) else {
                return Err(Error::SingularMatrix);
            };
            aug.swap_rows(r, p);
            inv.swap_rows(r, p);
            let scale = aug.get(r, c).recip();
            aug.scale_row(r, &scale);
            inv.scale_row(r, &scale);
            for i in 0..n {
                if i != r && !aug.get(i, c).is_zero() {
                    let factor = aug.get(i, c).clone();
                    aug.row_sub_scaled(i, r, &factor);
                    inv.row_sub_scaled(i, r, &factor);
                }
            }
            r += 1;
        }
        Ok(inv)
    }

    /// Minor: determinant of the submatrix with row `i` and column `j` removed.
    pub fn minor(&self, i: usize, j: usize) -> Result<Scalar> {
        if self.rows != self.cols {
            return Err(Error::NotSquare);
        }
        let rows: Vec<Vector> = (0..self.rows)
            .filter(|&r| r != i)
            .map(|r| {
                (0..self.cols)
                    .filter(|&c| c != j)
                    .map(|c| self.get(r, c).clone())
                    .collect()
            })
            .collect();
        Matrix::from_rows(rows)?.det()
    }

    /// Cofactor matrix `C` with `C[i][j] = (-1)^(i+j) * minor(i, j)`; its
    /// transpose is the adjugate.
    pub fn cofactor_matrix(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::NotSquare);
        }
        let n = self.rows;
        if n == 1 {
            return Ok(Matrix::identity(1));
        }
        let mut c = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let mut m = self.minor(i, j)?;
                if (i + j) % 2 == 1 {
                    m = -m;
                }
                c.set(i, j, m);
            }
        }
        Ok(c)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, i: usize, c: &Scalar) {
        for j in 0..self.cols {
            let v = self.get(i, j) * c;
            self.set(i, j, v);
        }
    }

    /// row[i] -= factor * row[src]
    fn row_sub_scaled(&mut self, i: usize, src: usize, factor: &Scalar) {
        for j in 0..self.cols {
            let v = self.get(i, j) - factor * self.get(src, j);
            self.set(i, j, v);
        }
    }
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(scalar::format).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Expresses vectors in the row span of a fixed matrix.
///
/// Built once from a spanning set; `coordinates` then solves `x * basis = v`
/// for each query, returning `None` when `v` is outside the span.
pub struct SpanSolver {
    reduced: Matrix,
    pivots: Vec<usize>,
    /// transform * original = reduced
    transform: Matrix,
    original_rows: usize,
}

impl SpanSolver {
    pub fn new(basis: &Matrix) -> SpanSolver {
        let mut m = basis.clone();
        let mut t = Matrix::identity(basis.nrows());
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.ncols() {
            if r == m.nrows() {
                break;
            }
            let Some(p) = (r..m.nrows()).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            t.swap_rows(r, p);
            let inv = m.get(r, c).recip();
            m.scale_row(r, &inv);
            t.scale_row(r, &inv);
            for i in 0..m.nrows() {
                if i != r && !m.get(i, c).is_zero() {
                    let factor = m.get(i, c).clone();
                    m.row_sub_scaled(i, r, &factor);
                    t.row_sub_scaled(i, r, &factor);
                }
            }
            pivots.push(c);
            r += 1;
        }
        SpanSolver {
            reduced: m,
            pivots,
            transform: t,
            original_rows: basis.nrows(),
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.residual(v).iter().all(Scalar::is_zero)
    }

    fn eliminate(&self, v: &[Scalar]) -> (Vector, Vector) {
        let mut residual = v.to_vec();
        let mut mu = zero_vector(self.pivots.len());
        for (row, &p) in self.pivots.iter().enumerate() {
            if !residual[p].is_zero() {
                let factor = residual[p].clone();
                for j in 0..residual.len() {
                    let delta = &factor * self.reduced.get(row, j);
                    residual[j] = &residual[j] - &delta;
                }
                mu[row] = factor;
            }
        }
        (mu, residual)
    }

    pub fn residual(&self, v: &[Scalar]) -> Vector {
        self.eliminate(v).1
    }

    /// Coefficients over the *original* rows, or `None` if `v` is not in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        let (mu, residual) = self.eliminate(v);
        if !vector_is_zero(&residual) {
            return None;
        }
        let mut coords = zero_vector(self.original_rows);
        for (row, m) in mu.iter().enumerate() {
            if m.is_zero() {
                continue;
            }
            for k in 0..self.original_rows {
                let delta = m * self.transform.get(row, k);
                coords[k] = &coords[k] + &delta;
            }
        }
        Some(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn rref_canonicalizes_proportional_rows() {
        let m = Matrix::from_int_rows(&[&[2, 4], &[1, 2]]);
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0]);
        assert_eq!(r.row(0), &[int(1), int(2)][..]);
        assert!(vector_is_zero(r.row(1)));
    }

    #[test]
    fn det_and_inverse_agree() {
        let m = Matrix::from_int_rows(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let d = m.det().unwrap();
        assert_eq!(d, int(18));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(3));
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let m = Matrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.det().unwrap(), int(0));
        assert!(m.inverse().is_err());
    }

    #[test]
    fn nullspace_dimension_matches_rank() {
        let m = Matrix::from_int_rows(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = m.nullspace();
        assert_eq!(ns.nrows(), 2);
        for row in ns.rows_iter() {
            assert!(vector_is_zero(&m.mul_vec(row).unwrap()));
        }
    }

    #[test]
    fn cofactors_give_adjugate_identity() {
        // A * adj(A) = det(A) * I
        let m = Matrix::from_int_rows(&[&[1, 2, 0], &[3, 1, 2], &[0, 1, 1]]);
        let adj = m.cofactor_matrix().unwrap().transpose();
        let d = m.det().unwrap();
        assert_eq!(m.mul(&adj).unwrap(), Matrix::identity(3).scale(&d));
    }

    #[test]
    fn span_solver_coordinates() {
        let basis = Matrix::from_int_rows(&[&[1, 1, 0], &[0, 1, 1]]);
        let solver = SpanSolver::new(&basis);
        let v = vector_from_ints(&[2, 5, 3]);
        let coords = solver.coordinates(&v).unwrap();
        assert_eq!(coords, vector_from_ints(&[2, 3]));
        assert!(solver.coordinates(&vector_from_ints(&[0, 0, 1])).is_none());
    }
}
