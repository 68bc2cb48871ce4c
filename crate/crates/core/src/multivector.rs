//! Sparse alternating tensors.
//!
//! A degree-k multivector is stored as a map from strictly increasing index
//! tuples to coefficients; inserting a term with permuted or repeated indices
//! sorts it and applies the permutation sign, so the representation is always
//! normalized.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct Multivector {
    arity: usize,
    dim: usize,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl Multivector {
    pub fn zero(arity: usize, dim: usize) -> Multivector {
        Multivector {
            arity,
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Scalar)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn coefficient(&self, indices: &[u32]) -> Scalar {
        self.terms.get(indices).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Adds `coeff * e_{i1} ^ ... ^ e_{ik}`. Indices may arrive in any order;
    /// repeated indices make the term vanish.
    pub fn add_term(&mut self, indices: &[usize], coeff: Scalar) {
        assert_eq!(indices.len(), self.arity, "term arity mismatch");
        if coeff.is_zero() {
            return;
        }
        let mut idx: Vec<u32> = indices.iter().map(|&i| i as u32).collect();
        let Some(sign_positive) = sort_with_parity(&mut idx) else {
            return; // repeated index
        };
        let signed = if sign_positive { coeff } else { -coeff };
        let entry = self.terms.entry(idx.clone()).or_insert_with(Scalar::zero);
        *entry += signed;
        if entry.is_zero() {
            self.terms.remove(&idx);
        }
    }

    pub fn add(&self, other: &Multivector) -> Result<Multivector> {
        if self.arity != other.arity || self.dim != other.dim {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: other.arity,
            });
        }
        let mut out = self.clone();
        for (idx, c) in other.terms() {
            let indices: Vec<usize> = idx.iter().map(|&i| i as usize).collect();
            out.add_term(&indices, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Multivector {
        if c.is_zero() {
            return Multivector::zero(self.arity, self.dim);
        }
        Multivector {
            arity: self.arity,
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    pub fn negate(&self) -> Multivector {
        self.scale(&-Scalar::from_integer(1.into()))
    }

    /// Wedge of `k` coordinate vectors, expanded over increasing index tuples
    /// via k-by-k minors.
    pub fn wedge_of_vectors(vectors: &[Vector], dim: usize) -> Multivector {
        let k = vectors.len();
        let mut out = Multivector::zero(k, dim);
        let mut tuple = vec![0usize; k];
        wedge_rec(vectors, dim, 0, 0, &mut tuple, &mut out);
        out
    }

    /// Evaluation on covectors in the determinant convention:
    /// `(e_a ^ e_b)(f, g) = f_a g_b - f_b g_a`.
    pub fn eval(&self, covectors: &[Vector]) -> Result<Scalar> {
        if covectors.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: covectors.len(),
            });
        }
        for f in covectors {
            if f.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    got: f.len(),
                });
            }
        }
        let mut total = Scalar::zero();
        for (idx, c) in self.terms() {
            let k = idx.len();
            let sub: Vec<Vector> = covectors
                .iter()
                .map(|f| idx.iter().map(|&j| f[j as usize].clone()).collect())
                .collect();
            let m = Matrix::from_rows(sub).expect("square eval block");
            debug_assert_eq!(m.nrows(), k);
            total += c * m.det().expect("square");
        }
        Ok(total)
    }
}

fn wedge_rec(
    vectors: &[Vector],
    dim: usize,
    depth: usize,
    start: usize,
    tuple: &mut Vec<usize>,
    out: &mut Multivector,
) {
    let k = vectors.len();
    if depth == k {
        let rows: Vec<Vector> = vectors
            .iter()
            .map(|v| tuple.iter().map(|&j| v[j].clone()).collect())
            .collect();
        let det = Matrix::from_rows(rows)
            .expect("minor rows")
            .det()
            .expect("square minor");
        if !det.is_zero() {
            out.add_term(tuple, det);
        }
        return;
    }
    for j in start..dim {
        tuple[depth] = j;
        wedge_rec(vectors, dim, depth + 1, j + 1, tuple, out);
    }
}

/// Sorts indices ascending; returns `None` on a repeated index, otherwise
/// `Some(true)` for an even permutation and `Some(false)` for odd.
fn sort_with_parity(idx: &mut [u32]) -> Option<bool> {
    let mut swaps = 0usize;
    // insertion sort, counting inversions
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            swaps += 1;
            j -= 1;
        }
    }
    for w in idx.windows(2) {
        if w[0] == w[1] {
            return None;
        }
    }
    Some(swaps % 2 == 0)
}

/// Pushforward of an alternating tensor along a linear map: applies the map
/// to every leg. `phi` maps the source coordinates (columns) to the target
/// coordinates (rows); `wedge_image(id, omega) == omega`.
pub fn wedge_image(phi: &Matrix, omega: &Multivector) -> Result<Multivector> {
    if phi.ncols() != omega.dim() {
        return Err(Error::DimensionMismatch {
            expected: omega.dim(),
            got: phi.ncols(),
        });
    }
    let target = phi.nrows();
    let mut out = Multivector::zero(omega.arity(), target);
    for (idx, c) in omega.terms() {
        let legs: Vec<Vector> = idx.iter().map(|&j| phi.column(j as usize)).collect();
        let image = Multivector::wedge_of_vectors(&legs, target).scale(c);
        out = out.add(&image)?;
    }
    Ok(out)
}

impl std::fmt::Debug for Multivector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(idx, c)| {
                let wedge: Vec<String> = idx.iter().map(|i| format!("e{i}")).collect();
                format!("{} {}", crate::scalar::format(c), wedge.join("^"))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
