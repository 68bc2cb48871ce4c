//! Quadratic doubles and Manin triples.
//!
//! A quadratic double is a Lie algebra of dimension 2n carrying a symmetric,
//! nondegenerate bilinear form that is invariant under the bracket. The two
//! constructions used throughout are the direct sum `g (+) g` with the
//! difference-of-Killing-forms pairing, and the semidirect product
//! `g x| g*` against the coadjoint action with the evaluation pairing.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::{basis_root_classification, LieAlgebra, RootClass, SparseVec};
use crate::matrix::{unit_vector, vector_concat, zero_vector, Matrix, Vector};
use crate::multivector::Multivector;
use crate::scalar::Scalar;
use crate::subspace::{orth_complement, solver_for, BilinearForm, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DoubleKind {
    DirectSum,
    Semidirect,
    Custom,
}

pub struct QuadraticDouble {
    pub algebra: LieAlgebra,
    pub form: BilinearForm,
    pub half_dim: usize,
    pub kind: DoubleKind,
}

impl QuadraticDouble {
    /// Wraps an algebra and form after checking symmetry, nondegeneracy, and
    /// exact invariance `<[x,y],z> + <y,[x,z]> = 0` on all basis triples.
    pub fn new(algebra: LieAlgebra, form: BilinearForm, kind: DoubleKind) -> Result<Self> {
        let dim = algebra.dim();
        if dim % 2 != 0 {
            return Err(Error::InvalidArgument(
                "a quadratic double must have even dimension".into(),
            ));
        }
        if form.dim() != dim {
            return Err(Error::AmbientMismatch {
                left: form.dim(),
                right: dim,
            });
        }
        if !form.is_nondegenerate() {
            return Err(Error::DegenerateForm);
        }
        check_invariance(&algebra, &form)?;
        Ok(QuadraticDouble {
            algebra,
            form,
            half_dim: dim / 2,
            kind,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        2 * self.half_dim
    }
}

fn check_invariance(algebra: &LieAlgebra, form: &BilinearForm) -> Result<()> {
    let dim = algebra.dim();
    let gram = form.gram();
    let pair_sparse = |v: &SparseVec, k: usize| -> Scalar {
        v.iter().map(|(m, c)| c * gram.get(*m, k)).sum()
    };
    for i in 0..dim {
        for j in 0..dim {
            for k in j..dim {
                // <[e_i, e_j], e_k> + <e_j, [e_i, e_k]> = 0
                let lhs = pair_sparse(algebra.bracket_basis(i, j), k);
                let rhs = pair_sparse(algebra.bracket_basis(i, k), j);
                if !(lhs + rhs).is_zero() {
                    return Err(Error::FormNotInvariant);
                }
            }
        }
    }
    Ok(())
}

/// The double `g (+) g` with pairing
/// `<(x1,x2),(y1,y2)> = kappa(x1,y1) - kappa(x2,y2)`, `kappa` the Killing
/// form. Requires `g` semisimple so the pairing is nondegenerate.
pub fn direct_sum_double(g: &LieAlgebra) -> Result<QuadraticDouble> {
    let kappa = g.killing_form();
    if !kappa.is_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    let n = g.dim();
    let dim = 2 * n;
    let mut brackets = vec![vec![SparseVec::new(); dim]; dim];
    for i in 0..n {
        for j in 0..n {
            brackets[i][j] = g.bracket_basis(i, j).clone();
            brackets[n + i][n + j] = g
                .bracket_basis(i, j)
                .iter()
                .map(|(k, c)| (n + k, c.clone()))
                .collect();
        }
    }
    let mut labels: Vec<String> = g.basis_labels().iter().map(|l| format!("l.{l}")).collect();
    labels.extend(g.basis_labels().iter().map(|l| format!("r.{l}")));
    let algebra = LieAlgebra::from_sparse_table(dim, brackets, labels)?;

    let mut gram = Matrix::zeros(dim, dim);
    for i in 0..n {
        for j in 0..n {
            gram.set(i, j, kappa.gram().get(i, j).clone());
            gram.set(n + i, n + j, -kappa.gram().get(i, j).clone());
        }
    }
    QuadraticDouble::new(algebra, BilinearForm::new(gram)?, DoubleKind::DirectSum)
}

/// The semidirect double `g x| g*` with `g*` abelian, bracket
/// `[(x,a),(y,b)] = ([x,y], ad*_x b - ad*_y a)` and pairing
/// `<(x,a),(y,b)> = a(y) + b(x)`. Works for any `g`.
pub fn semidirect_double(g: &LieAlgebra) -> Result<QuadraticDouble> {
    let n = g.dim();
    let dim = 2 * n;
    let mut brackets = vec![vec![SparseVec::new(); dim]; dim];
    for i in 0..n {
        for j in 0..n {
            brackets[i][j] = g.bracket_basis(i, j).clone();
        }
    }
    // [e_i, d^j] = ad*_(e_i) d^j = -sum_k c[i][k][j] d^k
    for i in 0..n {
        for j in 0..n {
            let mut entry = SparseVec::new();
            for k in 0..n {
                let c = g.structure_constant(i, k, j);
                if !c.is_zero() {
                    entry.push((n + k, -c));
                }
            }
            brackets[i][n + j] = entry.clone();
            brackets[n + j][i] = entry.into_iter().map(|(k, c)| (k, -c)).collect();
        }
    }
    let mut labels: Vec<String> = g.basis_labels().to_vec();
    labels.extend(g.basis_labels().iter().map(|l| format!("{l}*")));
    let algebra = LieAlgebra::from_sparse_table(dim, brackets, labels)?;

    let mut gram = Matrix::zeros(dim, dim);
    for i in 0..n {
        gram.set(i, n + i, Scalar::from_integer(1.into()));
        gram.set(n + i, i, Scalar::from_integer(1.into()));
    }
    QuadraticDouble::new(algebra, BilinearForm::new(gram)?, DoubleKind::Semidirect)
}

/// A subalgebra equal to its own orthogonal. Forces `dim = half_dim`, which
/// is asserted as a consequence check.
pub fn is_lagrangian(double: &QuadraticDouble, s: &Subspace) -> Result<bool> {
    if s.ambient_dim() != double.ambient_dim() {
        return Err(Error::AmbientMismatch {
            left: double.ambient_dim(),
            right: s.ambient_dim(),
        });
    }
    if !double.algebra.is_subalgebra(s)? {
        return Ok(false);
    }
    let perp = orth_complement(s, &double.form)?;
    if &perp != s {
        return Ok(false);
    }
    debug_assert_eq!(s.dim(), double.half_dim);
    Ok(true)
}

pub struct ManinTriple {
    pub double: QuadraticDouble,
    pub u: Subspace,
    pub u_star: Subspace,
    /// Basis (e_i) of `u`: the canonical rows of `u`.
    pub u_basis: Vec<Vector>,
    /// Basis (eps^i) of `u_star`, solved so that `<e_i, eps^j> = delta_ij`.
    pub u_star_basis: Vec<Vector>,
}

impl ManinTriple {
    pub fn half_dim(&self) -> usize {
        self.double.half_dim
    }
}

/// Assembles a Manin triple from two transversal Lagrangian subalgebras and
/// computes the pairing-dual bases.
pub fn make_manin_triple(
    double: QuadraticDouble,
    u: Subspace,
    w: Subspace,
) -> Result<ManinTriple> {
    if !is_lagrangian(&double, &u)? || !is_lagrangian(&double, &w)? {
        return Err(Error::NotLagrangian);
    }
    if u.intersect(&w)?.dim() != 0 {
        return Err(Error::NotTransversal);
    }
    let n = double.half_dim;
    let e: Vec<Vector> = u.basis_rows();
    let s: Vec<Vector> = w.basis_rows();
    let mut pairing = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            pairing.set(i, j, double.form.pairing(&e[i], &s[j])?);
        }
    }
    let inv = pairing.inverse().map_err(|_| Error::NotTransversal)?;
    let mut eps = Vec::with_capacity(n);
    for j in 0..n {
        let mut v = zero_vector(double.ambient_dim());
        for (k, srow) in s.iter().enumerate() {
            let c = inv.get(k, j);
            if !c.is_zero() {
                for (vi, si) in v.iter_mut().zip(srow) {
                    *vi = &*vi + &(c * si);
                }
            }
        }
        eps.push(v);
    }
    Ok(ManinTriple {
        double,
        u,
        u_star: w,
        u_basis: e,
        u_star_basis: eps,
    })
}

/// The standard splitting of `g (+) g` for semisimple `g` with root datum:
/// `u` is the diagonal and `u*` is the opposite-Cartan fiber product
/// `{(x, y) in b x b- : t-components of x and y opposite}`, which is the
/// complement to the diagonal (the equal-components fiber product meets the
/// diagonal in the Cartan and does not split the double).
pub fn standard_triple(g: &LieAlgebra) -> Result<ManinTriple> {
    let double = direct_sum_double(g)?;
    let n = g.dim();
    let diag_rows: Vec<Vector> = (0..n)
        .map(|k| {
            let e = unit_vector(n, k);
            vector_concat(&e, &e)
        })
        .collect();
    let diagonal = Subspace::span(&diag_rows, 2 * n)?;

    let classes = basis_root_classification(g)?;
    let mut dual_rows: Vec<Vector> = Vec::new();
    for (k, class) in classes.iter().enumerate() {
        let e = unit_vector(n, k);
        let z = zero_vector(n);
        match class {
            RootClass::Positive => dual_rows.push(vector_concat(&e, &z)),
            RootClass::Negative => dual_rows.push(vector_concat(&z, &e)),
            RootClass::Cartan => {
                let neg: Vector = e.iter().map(|c| -c.clone()).collect();
                dual_rows.push(vector_concat(&e, &neg));
            }
        }
    }
    let dual = Subspace::span(&dual_rows, 2 * n)?;
    make_manin_triple(double, diagonal, dual)
}

/// The induced cobracket on `u`: `delta(e_k)` is the alternating 2-tensor on
/// `u` dual to the bracket of `u*`, via
/// `<delta(e_k), eps^i (x) eps^j> = <e_k, [eps^i, eps^j]>`.
pub struct Cobracket {
    pub images: Vec<Multivector>,
}

impl Cobracket {
    pub fn is_zero(&self) -> bool {
        self.images.iter().all(Multivector::is_zero)
    }
}

pub fn cobracket(triple: &ManinTriple) -> Result<Cobracket> {
    let n = triple.half_dim();
    let mut images = Vec::with_capacity(n);
    for k in 0..n {
        let mut delta = Multivector::zero(2, n);
        for i in 0..n {
            for j in (i + 1)..n {
                let br = triple
                    .double
                    .algebra
                    .bracket(&triple.u_star_basis[i], &triple.u_star_basis[j])?;
                let coeff = triple.double.form.pairing(&triple.u_basis[k], &br)?;
                delta.add_term(&[i, j], coeff);
            }
        }
        images.push(delta);
    }
    Ok(Cobracket { images })
}

/// Checks the cocycle identity
/// `delta([x,y]) = ad_x delta(y) - ad_y delta(x)` exactly on all basis pairs
/// of `u`, with `ad` acting on 2-tensors by the Leibniz rule.
pub fn verify_cocycle(triple: &ManinTriple) -> Result<bool> {
    let n = triple.half_dim();
    let delta = cobracket(triple)?;
    // structure constants of u in the e-basis
    let solver = solver_for(&triple.u);
    let mut sc: Vec<Vec<Vector>> = vec![vec![zero_vector(n); n]; n];
    for i in 0..n {
        for j in 0..n {
            let br = triple
                .double
                .algebra
                .bracket(&triple.u_basis[i], &triple.u_basis[j])?;
            sc[i][j] = solver
                .coordinates(&br)
                .ok_or(Error::NotLagrangian)?;
        }
    }
    let ad_on_tensor = |x: usize, t: &Multivector| -> Multivector {
        let mut out = Multivector::zero(2, n);
        for (idx, c) in t.terms() {
            let (p, q) = (idx[0] as usize, idx[1] as usize);
            for (m, coeff) in sc[x][p].iter().enumerate() {
                if !coeff.is_zero() {
                    out.add_term(&[m, q], c * coeff);
                }
            }
            for (m, coeff) in sc[x][q].iter().enumerate() {
                if !coeff.is_zero() {
                    out.add_term(&[p, m], c * coeff);
                }
            }
        }
        out
    };
    for i in 0..n {
        for j in 0..n {
            let mut lhs = Multivector::zero(2, n);
            for (m, coeff) in sc[i][j].iter().enumerate() {
                if !coeff.is_zero() {
                    lhs = lhs.add(&delta.images[m].scale(coeff))?;
                }
            }
            let rhs = ad_on_tensor(i, &delta.images[j])
                .add(&ad_on_tensor(j, &delta.images[i]).negate())?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::make_sl;
    use crate::scalar::int;

    fn diagonal(n: usize) -> Subspace {
        let rows: Vec<Vector> = (0..n)
            .map(|k| {
                let e = unit_vector(n, k);
                vector_concat(&e, &e)
            })
            .collect();
        Subspace::span(&rows, 2 * n).unwrap()
    }

    #[test]
    fn direct_sum_double_of_sl2_has_dim_six() {
        let g = make_sl(2).unwrap();
        let d = direct_sum_double(&g).unwrap();
        assert_eq!(d.ambient_dim(), 6);
        assert_eq!(d.half_dim, 3);
        assert_eq!(d.kind, DoubleKind::DirectSum);
    }

    #[test]
    fn cross_factors_pair_to_zero_in_direct_sum() {
        let g = make_sl(2).unwrap();
        let d = direct_sum_double(&g).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let x = unit_vector(6, i);
                let y = unit_vector(6, 3 + j);
                assert_eq!(d.form.pairing(&x, &y).unwrap(), int(0));
            }
        }
    }

    #[test]
    fn direct_sum_form_determinant_is_killing_determinant_squared_up_to_sign() {
        let g = make_sl(2).unwrap();
        let kappa_det = g.killing_form().gram().det().unwrap();
        let d = direct_sum_double(&g).unwrap();
        let det = d.form.gram().det().unwrap();
        let squared = &kappa_det * &kappa_det;
        assert!(det == squared || det == -squared);
    }

    #[test]
    fn diagonal_is_lagrangian_in_direct_sum() {
        for n in [2usize, 3] {
            let g = make_sl(n).unwrap();
            let d = direct_sum_double(&g).unwrap();
            assert!(is_lagrangian(&d, &diagonal(g.dim())).unwrap());
        }
    }

    #[test]
    fn non_isotropic_half_dim_subspace_is_not_lagrangian() {
        // sl2 (+) 0 is a subalgebra of the right dimension with
        // <(H,0),(H,0)> = kappa(H,H) = 8, so it cannot be Lagrangian
        let g = make_sl(2).unwrap();
        let d = direct_sum_double(&g).unwrap();
        let rows: Vec<Vector> = (0..3)
            .map(|k| vector_concat(&unit_vector(3, k), &zero_vector(3)))
            .collect();
        let s = Subspace::span(&rows, 6).unwrap();
        assert!(d.algebra.is_subalgebra(&s).unwrap());
        assert!(!is_lagrangian(&d, &s).unwrap());
    }

    #[test]
    fn semidirect_dual_copy_is_abelian_and_isotropic() {
        let g = make_sl(2).unwrap();
        let d = semidirect_double(&g).unwrap();
        assert_eq!(d.ambient_dim(), 6);
        // [(0,a),(0,b)] = 0
        for i in 0..3 {
            for j in 0..3 {
                let a = unit_vector(6, 3 + i);
                let b = unit_vector(6, 3 + j);
                assert!(crate::matrix::vector_is_zero(
                    &d.algebra.bracket(&a, &b).unwrap()
                ));
            }
        }
        // <(x,0),(y,0)> = 0
        for i in 0..3 {
            for j in 0..3 {
                let x = unit_vector(6, i);
                let y = unit_vector(6, j);
                assert_eq!(d.form.pairing(&x, &y).unwrap(), int(0));
            }
        }
    }

    #[test]
    fn semidirect_halves_are_lagrangian() {
        let g = make_sl(2).unwrap();
        let d = semidirect_double(&g).unwrap();
        let g_part = Subspace::span(
            &(0..3)
                .map(|k| vector_concat(&unit_vector(3, k), &zero_vector(3)))
                .collect::<Vec<_>>(),
            6,
        )
        .unwrap();
        let dual_part = Subspace::span(
            &(0..3)
                .map(|k| vector_concat(&zero_vector(3), &unit_vector(3, k)))
                .collect::<Vec<_>>(),
            6,
        )
        .unwrap();
        assert!(is_lagrangian(&d, &g_part).unwrap());
        assert!(is_lagrangian(&d, &dual_part).unwrap());
    }

    #[test]
    fn standard_triple_of_sl2_splits_the_double() {
        let g = make_sl(2).unwrap();
        let t = standard_triple(&g).unwrap();
        assert_eq!(t.u.dim(), 3);
        assert_eq!(t.u_star.dim(), 3);
        assert_eq!(t.u.intersect(&t.u_star).unwrap().dim(), 0);
        assert_eq!(t.u.sum(&t.u_star).unwrap().dim(), 6);
    }

    #[test]
    fn dual_basis_gram_is_identity() {
        let g = make_sl(2).unwrap();
        let t = standard_triple(&g).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let p = t
                    .double
                    .form
                    .pairing(&t.u_basis[i], &t.u_star_basis[j])
                    .unwrap();
                assert_eq!(p, int(if i == j { 1 } else { 0 }));
            }
        }
    }

    #[test]
    fn semidirect_triple_validates() {
        let g = make_sl(2).unwrap();
        let d = semidirect_double(&g).unwrap();
        let g_part = Subspace::span(
            &(0..3)
                .map(|k| vector_concat(&unit_vector(3, k), &zero_vector(3)))
                .collect::<Vec<_>>(),
            6,
        )
        .unwrap();
        let dual_part = Subspace::span(
            &(0..3)
                .map(|k| vector_concat(&zero_vector(3), &unit_vector(3, k)))
                .collect::<Vec<_>>(),
            6,
        )
        .unwrap();
        let t = make_manin_triple(d, g_part, dual_part).unwrap();
        assert_eq!(t.half_dim(), 3);
    }

    #[test]
    fn manin_triple_rejects_non_transversal_pair() {
        let g = make_sl(2).unwrap();
        let d = direct_sum_double(&g).unwrap();
        let diag = diagonal(3);
        assert!(matches!(
            make_manin_triple(d, diag.clone(), diag),
            Err(Error::NotTransversal)
        ));
    }

    #[test]
    fn manin_triple_rejects_non_lagrangian_half() {
        let g = make_sl(2).unwrap();
        let d = direct_sum_double(&g).unwrap();
        let rows: Vec<Vector> = (0..3)
            .map(|k| vector_concat(&unit_vector(3, k), &zero_vector(3)))
            .collect();
        let left = Subspace::span(&rows, 6).unwrap();
        assert!(matches!(
            make_manin_triple(d, left, diagonal(3)),
            Err(Error::NotLagrangian)
        ));
    }

    #[test]
    fn semidirect_cobracket_vanishes() {
        let g = make_sl(2).unwrap();
        let d = semidirect_double(&g).unwrap();
        let g_part = Subspace::span(
            &(0..3)
                .map(|k| vector_concat(&unit_vector(3, k), &zero_vector(3)))
                .collect::<Vec<_>>(),
            6,
        )
        .unwrap();
        let dual_part = Subspace::span(
            &(0..3)
                .map(|k| vector_concat(&zero_vector(3), &unit_vector(3, k)))
                .collect::<Vec<_>>(),
            6,
        )
        .unwrap();
        let t = make_manin_triple(d, g_part, dual_part).unwrap();
        let delta = cobracket(&t).unwrap();
        assert!(delta.is_zero());
        assert!(verify_cocycle(&t).unwrap());
    }

    #[test]
    fn standard_cobracket_is_nonzero_and_cocycle_holds() {
        let g = make_sl(2).unwrap();
        let t = standard_triple(&g).unwrap();
        let delta = cobracket(&t).unwrap();
        assert!(!delta.is_zero());
        assert!(verify_cocycle(&t).unwrap());
    }
}
