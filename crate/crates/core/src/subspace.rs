//! Canonical linear subspaces and bilinear forms.
//!
//! A `Subspace` stores the reduced row echelon basis of its row span. RREF is
//! a unique normal form, so two subspaces are equal exactly when their
//! representations are equal; every operation below returns canonical output.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::{vector_is_zero, zero_vector, Matrix, SpanSolver, Vector};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    /// Canonicalizes a spanning set: the result is the RREF basis of the span.
    /// Idempotent, and invariant under row operations on the input.
    pub fn span(rows: &[Vector], ambient: usize) -> Result<Subspace> {
        for r in rows {
            if r.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    got: r.len(),
                });
            }
        }
        let m = Matrix::from_rows(rows.to_vec())?;
        let reduced = if rows.is_empty() {
            Matrix::zeros(0, ambient)
        } else {
            m.rref().0.drop_zero_rows()
        };
        Ok(Subspace {
            ambient,
            basis: reduced,
        })
    }

    pub fn zero(ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vector> {
        self.basis.rows_iter().map(<[Scalar]>::to_vec).collect()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        vector_is_zero(&self.reduce(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.rows_iter().all(|r| self.contains(r))
    }

    /// Residual of `v` after eliminating against the canonical basis.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut residual = v.to_vec();
        let pivots = self.pivot_columns();
        for (row, &p) in pivots.iter().enumerate() {
            if !residual[p].is_zero() {
                let factor = residual[p].clone();
                for j in 0..self.ambient {
                    let delta = &factor * self.basis.get(row, j);
                    residual[j] = &residual[j] - &delta;
                }
            }
        }
        residual
    }

    fn pivot_columns(&self) -> Vec<usize> {
        // rows are in RREF, so the pivot of row i is its first nonzero entry
        self.basis
            .rows_iter()
            .map(|r| r.iter().position(|x| !x.is_zero()).expect("no zero rows"))
            .collect()
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        Subspace::span(&rows, self.ambient)
    }

    /// Largest subspace contained in both; computed from the left null space
    /// of the stacked bases.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Subspace::zero(self.ambient));
        }
        // (u, v) with u*A - v*B = 0  <=>  u*A lies in both row spans
        let stacked = self.basis.vstack(&other.basis.scale(&-Scalar::from_integer(1.into())))?;
        let kernel = stacked.transpose().nullspace();
        let mut rows = Vec::new();
        for k in kernel.rows_iter() {
            let u = &k[..self.dim()];
            rows.push(self.basis.vec_mul(u)?);
        }
        Subspace::span(&rows, self.ambient)
    }

    /// Annihilator under the standard dot product: `{x : x . s = 0 for s in self}`.
    pub fn annihilator(&self) -> Subspace {
        let kernel = self.basis.nullspace();
        Subspace {
            ambient: self.ambient,
            basis: kernel,
        }
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subspace(dim {} of {}) {:?}",
            self.dim(),
            self.ambient,
            self.basis
        )
    }
}

/// Coset representatives completing a basis of `sub` to a basis of `sup`.
///
/// The representatives are the rows of `sup`'s canonical basis that survive
/// elimination against `sub`, reduced and rescaled to leading coefficient one,
/// so they are canonical given the two inputs. Their count is
/// `sup.dim() - sub.dim()`.
pub fn quotient_basis(sub: &Subspace, sup: &Subspace) -> Result<Vec<Vector>> {
    if sub.ambient_dim() != sup.ambient_dim() {
        return Err(Error::AmbientMismatch {
            left: sub.ambient_dim(),
            right: sup.ambient_dim(),
        });
    }
    if !sup.contains_subspace(sub) {
        return Err(Error::NotContained);
    }
    let mut reps = Vec::new();
    let mut accumulated = sub.clone();
    for row in sup.basis.rows_iter() {
        let residual = accumulated.reduce(row);
        if vector_is_zero(&residual) {
            continue;
        }
        let lead = residual
            .iter()
            .find(|x| !x.is_zero())
            .expect("nonzero residual")
            .clone();
        let rep: Vector = residual.iter().map(|x| x / &lead).collect();
        let mut rows = accumulated.basis_rows();
        rows.push(rep.clone());
        accumulated = Subspace::span(&rows, sub.ambient_dim())?;
        reps.push(rep);
    }
    Ok(reps)
}

/// A symmetric bilinear form given by its Gram matrix over the ambient basis.
/// Nondegeneracy is checked once at construction and recorded.
#[derive(Clone, Debug)]
pub struct BilinearForm {
    gram: Matrix,
    nondegenerate: bool,
}

impl BilinearForm {
    pub fn new(gram: Matrix) -> Result<BilinearForm> {
        if gram.nrows() != gram.ncols() {
            return Err(Error::NotSquare);
        }
        if gram != gram.transpose() {
            return Err(Error::AsymmetricForm);
        }
        let nondegenerate = !gram.det()?.is_zero();
        Ok(BilinearForm {
            gram,
            nondegenerate,
        })
    }

    pub fn dim(&self) -> usize {
        self.gram.nrows()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.nondegenerate
    }

    pub fn pairing(&self, x: &[Scalar], y: &[Scalar]) -> Result<Scalar> {
        let gy = self.gram.mul_vec(y)?;
        if x.len() != gy.len() {
            return Err(Error::DimensionMismatch {
                expected: gy.len(),
                got: x.len(),
            });
        }
        Ok(crate::matrix::dot(x, &gy))
    }
}

/// Orthogonal complement of `s` with respect to a nondegenerate form.
/// Satisfies `dim s + dim s_perp = ambient` and `(s_perp)_perp = s`.
pub fn orth_complement(s: &Subspace, form: &BilinearForm) -> Result<Subspace> {
    if !form.is_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    if form.dim() != s.ambient_dim() {
        return Err(Error::AmbientMismatch {
            left: form.dim(),
            right: s.ambient_dim(),
        });
    }
    if s.dim() == 0 {
        return Ok(Subspace::full(s.ambient_dim()));
    }
    // x is orthogonal to the span iff (S G) x^T = 0
    let sg = s.basis().mul(form.gram())?;
    Ok(Subspace {
        ambient: s.ambient_dim(),
        basis: sg.nullspace(),
    })
}

/// Convenience for tests and constructors: solver over a subspace basis.
pub fn solver_for(s: &Subspace) -> SpanSolver {
    SpanSolver::new(s.basis())
}

pub fn zero_padded(v: &[Scalar], offset: usize, total: usize) -> Vector {
    let mut out = zero_vector(total);
    out[offset..offset + v.len()].clone_from_slice(v);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::vector_from_ints;
    use crate::scalar::int;

    fn sp(rows: &[&[i64]], ambient: usize) -> Subspace {
        let rows: Vec<Vector> = rows.iter().map(|r| vector_from_ints(r)).collect();
        Subspace::span(&rows, ambient).unwrap()
    }

    #[test]
    fn identity_rows_span_full_space() {
        let s = sp(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], 3);
        assert_eq!(s, Subspace::full(3));
    }

    #[test]
    fn proportional_rows_collapse_to_line() {
        let s = sp(&[&[2, 4], &[1, 2]], 2);
        assert_eq!(s.dim(), 1);
        assert_eq!(s.basis().row(0), &[int(1), int(2)][..]);
    }

    #[test]
    fn span_rejects_wrong_length() {
        let rows = vec![vector_from_ints(&[1, 2, 3])];
        assert!(Subspace::span(&rows, 2).is_err());
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let s = sp(&[&[1, 2, 3], &[4, 5, 6]], 3);
        let again = Subspace::span(&s.basis_rows(), 3).unwrap();
        assert_eq!(s, again);
    }

    #[test]
    fn intersect_self_is_identity() {
        let s = sp(&[&[1, 2, 3], &[0, 1, 1]], 3);
        assert_eq!(s.intersect(&s).unwrap(), s);
    }

    #[test]
    fn distinct_lines_intersect_trivially() {
        let a = sp(&[&[1, 0]], 2);
        let b = sp(&[&[1, 1]], 2);
        assert_eq!(a.intersect(&b).unwrap(), Subspace::zero(2));
    }

    #[test]
    fn grassmann_dimension_law() {
        let a = sp(&[&[1, 0, 0, 0], &[0, 1, 0, 0]], 4);
        let b = sp(&[&[0, 1, 0, 0], &[0, 0, 1, 0]], 4);
        let inter = a.intersect(&b).unwrap();
        let sum = a.sum(&b).unwrap();
        assert_eq!(a.dim() + b.dim(), sum.dim() + inter.dim());
        assert_eq!(inter.dim(), 1);
    }

    #[test]
    fn quotient_of_space_by_itself_is_empty() {
        let s = sp(&[&[1, 0], &[0, 1]], 2);
        assert!(quotient_basis(&s, &s).unwrap().is_empty());
    }

    #[test]
    fn quotient_requires_containment() {
        let w = sp(&[&[1, 0]], 2);
        let v = sp(&[&[0, 1]], 2);
        assert!(matches!(
            quotient_basis(&w, &v),
            Err(Error::NotContained)
        ));
    }

    #[test]
    fn quotient_count_is_codimension() {
        let w = sp(&[&[1, 1, 0]], 3);
        let v = Subspace::full(3);
        let reps = quotient_basis(&w, &v).unwrap();
        assert_eq!(reps.len(), 2);
        // representatives extend w to all of v
        let mut rows = w.basis_rows();
        rows.extend(reps);
        assert_eq!(Subspace::span(&rows, 3).unwrap(), v);
    }

    #[test]
    fn orth_complement_of_zero_is_full() {
        let form = BilinearForm::new(Matrix::identity(3)).unwrap();
        let z = Subspace::zero(3);
        assert_eq!(orth_complement(&z, &form).unwrap(), Subspace::full(3));
    }

    #[test]
    fn orth_complement_is_involutive() {
        // hyperbolic form on 4 coordinates
        let gram = Matrix::from_int_rows(&[
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
        ]);
        let form = BilinearForm::new(gram).unwrap();
        let s = sp(&[&[1, 2, 0, 1], &[0, 1, 1, 0]], 4);
        let perp = orth_complement(&s, &form).unwrap();
        assert_eq!(s.dim() + perp.dim(), 4);
        assert_eq!(orth_complement(&perp, &form).unwrap(), s);
    }

    #[test]
    fn degenerate_form_is_rejected() {
        let gram = Matrix::from_int_rows(&[&[1, 0], &[0, 0]]);
        let form = BilinearForm::new(gram).unwrap();
        assert!(!form.is_nondegenerate());
        let s = sp(&[&[1, 0]], 2);
        assert!(matches!(
            orth_complement(&s, &form),
            Err(Error::DegenerateForm)
        ));
    }
}
