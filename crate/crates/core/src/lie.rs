//! Lie algebras over the rationals, presented by structure constants.
//!
//! Constructors build the classical matrix models: `make_sl` gives type A
//! (traceless matrices), `make_classical` gives types B, C, D as the
//! orthogonal and symplectic algebras preserving an antidiagonal form, so
//! that in every model the Cartan subalgebra is diagonal and each non-Cartan
//! basis vector is a root vector. Antisymmetry and the Jacobi identity are
//! verified exactly on every basis pair and triple at construction time.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::{
    unit_vector, vector_is_zero, zero_vector, Matrix, SpanSolver, Vector,
};
use crate::scalar::{self, Scalar};
use crate::subspace::{BilinearForm, Subspace};

/// Sparse coordinate vector: (index, coefficient) pairs sorted by index.
pub type SparseVec = Vec<(usize, Scalar)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Series {
    A,
    B,
    C,
    D,
}

impl std::fmt::Display for Series {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Series::A => "A",
            Series::B => "B",
            Series::C => "C",
            Series::D => "D",
        };
        write!(f, "{s}")
    }
}

/// Simple-root bookkeeping relative to the fixed diagonal Cartan subalgebra.
#[derive(Clone)]
pub struct RootDatum {
    pub series: Series,
    pub rank: usize,
    pub cartan_matrix: Vec<Vec<i64>>,
    /// One (positive, negative) pair of one-dimensional root spaces per
    /// simple root, in Dynkin order.
    pub simple_root_spaces: Vec<(Subspace, Subspace)>,
    pub cartan_subalgebra: Subspace,
    /// Simple coroots, normalized so that the simple root takes value 2 on
    /// its own coroot.
    pub simple_coroots: Vec<Vector>,
}

/// Concrete realization of the algebra as matrices, used for conjugation,
/// transpose involutions, and commutator cross-checks.
pub struct MatrixModel {
    pub size: usize,
    pub basis_matrices: Vec<Matrix>,
    solver: SpanSolver,
}

impl MatrixModel {
    fn new(size: usize, basis_matrices: Vec<Matrix>) -> MatrixModel {
        let rows: Vec<Vector> = basis_matrices.iter().map(flatten).collect();
        let flat = Matrix::from_rows(rows).expect("equal flattened lengths");
        let solver = SpanSolver::new(&flat);
        MatrixModel {
            size,
            basis_matrices,
            solver,
        }
    }

    pub fn to_matrix(&self, coords: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.size, self.size);
        for (c, b) in coords.iter().zip(&self.basis_matrices) {
            if !c.is_zero() {
                out = out.add(&b.scale(c)).expect("same size");
            }
        }
        out
    }

    pub fn to_coords(&self, m: &Matrix) -> Option<Vector> {
        self.solver.coordinates(&flatten(m))
    }
}

fn flatten(m: &Matrix) -> Vector {
    let mut v = Vec::with_capacity(m.nrows() * m.ncols());
    for i in 0..m.nrows() {
        v.extend(m.row(i).iter().cloned());
    }
    v
}

pub struct LieAlgebra {
    dim: usize,
    /// Full bracket table: brackets[i][j] = [e_i, e_j] as a sparse vector.
    brackets: Vec<Vec<SparseVec>>,
    basis_labels: Vec<String>,
    pub root_datum: Option<RootDatum>,
    pub matrix_model: Option<MatrixModel>,
}

impl LieAlgebra {
    /// Builds an algebra from a dense table `c[i][j][k]` with
    /// `[e_i, e_j] = sum_k c[i][j][k] e_k`. Fails fast if antisymmetry or the
    /// Jacobi identity does not hold exactly.
    pub fn from_structure_constants(
        table: Vec<Vec<Vec<Scalar>>>,
        basis_labels: Vec<String>,
    ) -> Result<LieAlgebra> {
        let dim = table.len();
        let mut brackets = vec![vec![SparseVec::new(); dim]; dim];
        for (i, row) in table.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: row.len(),
                });
            }
            for (j, entry) in row.iter().enumerate() {
                if entry.len() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        got: entry.len(),
                    });
                }
                brackets[i][j] = entry
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, c.clone()))
                    .collect();
            }
        }
        let labels = if basis_labels.is_empty() {
            (0..dim).map(|i| format!("x{i}")).collect()
        } else {
            basis_labels
        };
        let algebra = LieAlgebra {
            dim,
            brackets,
            basis_labels: labels,
            root_datum: None,
            matrix_model: None,
        };
        algebra.validate()?;
        Ok(algebra)
    }

    /// Same contract as `from_structure_constants`, but takes the table
    /// already in sparse form.
    pub(crate) fn from_sparse_table(
        dim: usize,
        brackets: Vec<Vec<SparseVec>>,
        basis_labels: Vec<String>,
    ) -> Result<LieAlgebra> {
        let algebra = LieAlgebra {
            dim,
            brackets,
            basis_labels,
            root_datum: None,
            matrix_model: None,
        };
        algebra.validate()?;
        Ok(algebra)
    }

    /// Builds an algebra from linearly independent matrices closed under the
    /// commutator; structure constants are read off by expressing each
    /// commutator in the given basis.
    pub fn from_matrix_basis(
        size: usize,
        basis_matrices: Vec<Matrix>,
        basis_labels: Vec<String>,
    ) -> Result<LieAlgebra> {
        let dim = basis_matrices.len();
        let model = MatrixModel::new(size, basis_matrices);
        let mut brackets = vec![vec![SparseVec::new(); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                let a = &model.basis_matrices[i];
                let b = &model.basis_matrices[j];
                let comm = a.mul(b)?.add(&b.mul(a)?.scale(&scalar::int(-1)))?;
                let coords = model.to_coords(&comm).ok_or_else(|| {
                    Error::InvalidArgument(
                        "matrix basis is not closed under the commutator".into(),
                    )
                })?;
                brackets[i][j] = sparsify(&coords);
            }
        }
        let algebra = LieAlgebra {
            dim,
            brackets,
            basis_labels: basis_labels,
            root_datum: None,
            matrix_model: Some(model),
        };
        algebra.validate()?;
        Ok(algebra)
    }

    fn validate(&self) -> Result<()> {
        for i in 0..self.dim {
            for j in 0..=i {
                let mut sum = densify(&self.brackets[i][j], self.dim);
                for (k, c) in &self.brackets[j][i] {
                    sum[*k] = &sum[*k] + c;
                }
                if !vector_is_zero(&sum) {
                    return Err(Error::AntisymmetryFailure { i, j });
                }
            }
        }
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in (j + 1)..self.dim {
                    if !self.jacobi_holds(i, j, k) {
                        return Err(Error::JacobiFailure { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    fn jacobi_holds(&self, i: usize, j: usize, k: usize) -> bool {
        let mut acc = zero_vector(self.dim);
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            // [e_a, [e_b, e_c]]
            let inner = &self.brackets[b][c];
            for (m, w) in inner {
                for (t, v) in &self.brackets[a][*m] {
                    acc[*t] = &acc[*t] + &(w * v);
                }
            }
        }
        vector_is_zero(&acc)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.brackets[i][j]
    }

    /// Structure constant `c[i][j][k]`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.brackets[i][j]
            .iter()
            .find(|(t, _)| *t == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Scalar::zero)
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len().max(y.len()),
            });
        }
        let mut acc = zero_vector(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let prod = xi * yj;
                for (k, c) in &self.brackets[i][j] {
                    acc[*k] = &acc[*k] + &(&prod * c);
                }
            }
        }
        Ok(acc)
    }

    /// Matrix of `ad_x` acting on coordinate columns: `ad_matrix(x) * y = [x, y]`.
    pub fn ad_matrix(&self, x: &[Scalar]) -> Result<Matrix> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for (k, c) in &self.brackets[i][j] {
                    let v = m.get(*k, j) + xi * c;
                    m.set(*k, j, v);
                }
            }
        }
        Ok(m)
    }

    /// Killing form `kappa(x, y) = tr(ad_x . ad_y)` as a Gram matrix over the
    /// basis. Nondegenerate exactly when the algebra is semisimple.
    pub fn killing_form(&self) -> BilinearForm {
        let mut gram = Matrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in i..self.dim {
                // tr(ad_i ad_j) = sum_m sum_k c[j][m][k] c[i][k][m]
                let mut tr = Scalar::zero();
                for m in 0..self.dim {
                    for (k, a) in &self.brackets[j][m] {
                        for (t, b) in &self.brackets[i][*k] {
                            if *t == m {
                                tr += a * b;
                            }
                        }
                    }
                }
                gram.set(i, j, tr.clone());
                if i != j {
                    gram.set(j, i, tr);
                }
            }
        }
        BilinearForm::new(gram).expect("killing gram is symmetric by construction")
    }

    pub fn is_semisimple(&self) -> bool {
        self.killing_form().is_nondegenerate()
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool> {
        self.check_ambient(s)?;
        let rows = s.basis_rows();
        for i in 0..rows.len() {
            for j in (i + 1)..rows.len() {
                let br = self.bracket(&rows[i], &rows[j])?;
                if !s.contains(&br) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `{x in g : [x, S] subset S}`.
    pub fn normalizer(&self, s: &Subspace) -> Result<Subspace> {
        self.normalizer_within(&Subspace::full(self.dim), s)
    }

    /// `{x in container : [x, S] subset S}`.
    pub fn normalizer_within(&self, container: &Subspace, s: &Subspace) -> Result<Subspace> {
        self.check_ambient(s)?;
        self.check_ambient(container)?;
        let gens = container.basis_rows();
        if gens.is_empty() {
            return Ok(Subspace::zero(self.dim));
        }
        let mut constraint_rows: Vec<Vector> = Vec::new();
        for srow in s.basis_rows() {
            // residual of [gen_a, s] modulo S is linear in the coefficients
            let residuals: Vec<Vector> = gens
                .iter()
                .map(|gen| Ok(s.reduce(&self.bracket(gen, &srow)?)))
                .collect::<Result<_>>()?;
            for coord in 0..self.dim {
                let row: Vector = residuals.iter().map(|r| r[coord].clone()).collect();
                if !vector_is_zero(&row) {
                    constraint_rows.push(row);
                }
            }
        }
        if constraint_rows.is_empty() {
            return Ok(container.clone());
        }
        let kernel = Matrix::from_rows(constraint_rows)?.nullspace();
        let mut rows = Vec::new();
        for coeffs in kernel.rows_iter() {
            let mut v = zero_vector(self.dim);
            for (c, gen) in coeffs.iter().zip(&gens) {
                if !c.is_zero() {
                    for (vi, gi) in v.iter_mut().zip(gen) {
                        *vi = &*vi + &(c * gi);
                    }
                }
            }
            rows.push(v);
        }
        Subspace::span(&rows, self.dim)
    }

    /// Kernel of `ad`.
    pub fn center(&self) -> Subspace {
        let mut constraint_rows = Vec::new();
        for j in 0..self.dim {
            for coord in 0..self.dim {
                let row: Vector = (0..self.dim)
                    .map(|i| self.structure_constant(i, j, coord))
                    .collect();
                if !vector_is_zero(&row) {
                    constraint_rows.push(row);
                }
            }
        }
        if constraint_rows.is_empty() {
            return Subspace::full(self.dim);
        }
        let kernel = Matrix::from_rows(constraint_rows)
            .expect("constraint rows have length dim")
            .nullspace();
        Subspace::span(
            &kernel.rows_iter().map(<[Scalar]>::to_vec).collect::<Vec<_>>(),
            self.dim,
        )
        .expect("kernel rows have length dim")
    }

    /// Smallest subalgebra containing `s`: repeated bracket saturation,
    /// terminating by dimension monotonicity.
    pub fn subalgebra_closure(&self, s: &Subspace) -> Result<Subspace> {
        self.check_ambient(s)?;
        let mut current = s.clone();
        loop {
            let rows = current.basis_rows();
            let mut new_rows = rows.clone();
            for i in 0..rows.len() {
                for j in (i + 1)..rows.len() {
                    let br = self.bracket(&rows[i], &rows[j])?;
                    if !current.contains(&br) {
                        new_rows.push(br);
                    }
                }
            }
            let next = Subspace::span(&new_rows, self.dim)?;
            if next.dim() == current.dim() {
                return Ok(next);
            }
            current = next;
        }
    }

    fn check_ambient(&self, s: &Subspace) -> Result<()> {
        if s.ambient_dim() != self.dim {
            return Err(Error::AmbientMismatch {
                left: self.dim,
                right: s.ambient_dim(),
            });
        }
        Ok(())
    }

    /// Eigenvalue of `ad_h` on the basis vector at `index`; errors unless the
    /// basis vector really is an eigenvector.
    pub fn ad_eigenvalue(&self, h: &[Scalar], index: usize) -> Result<Scalar> {
        let image = self.bracket(h, &unit_vector(self.dim, index))?;
        let lambda = image[index].clone();
        let mut check = image;
        check[index] = Scalar::zero();
        if !vector_is_zero(&check) {
            return Err(Error::InvalidArgument(format!(
                "basis vector {index} is not an ad-eigenvector"
            )));
        }
        Ok(lambda)
    }

    /// Coordinates of the root of basis vector `index` over the simple roots,
    /// read off from the coroot eigenvalues; identically zero on the Cartan.
    pub fn simple_root_coordinates(&self, index: usize) -> Result<Vector> {
        let datum = self.root_datum.as_ref().ok_or(Error::MissingRootDatum)?;
        let eigen: Vector = datum
            .simple_coroots
            .iter()
            .map(|h| self.ad_eigenvalue(h, index))
            .collect::<Result<_>>()?;
        // eigen_j = <beta, coroot_j> = sum_i c_i A[i][j]
        let l = datum.rank;
        let mut at = Matrix::zeros(l, l);
        for i in 0..l {
            for j in 0..l {
                at.set(j, i, scalar::int(datum.cartan_matrix[i][j]));
            }
        }
        at.inverse()?.mul_vec(&eigen)
    }
}

/// Position of a basis vector relative to the fixed triangular decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootClass {
    Cartan,
    Positive,
    Negative,
}

/// Classifies each basis vector as Cartan, positive root, or negative root,
/// using the sign pattern of its simple-root coordinates. Valid for the
/// basis-adapted models built in this module.
pub fn basis_root_classification(g: &LieAlgebra) -> Result<Vec<RootClass>> {
    let mut classes = Vec::with_capacity(g.dim());
    for idx in 0..g.dim() {
        let coords = g.simple_root_coordinates(idx)?;
        if vector_is_zero(&coords) {
            classes.push(RootClass::Cartan);
        } else if coords.iter().all(|c| c >= &Scalar::zero()) {
            classes.push(RootClass::Positive);
        } else if coords.iter().all(|c| c <= &Scalar::zero()) {
            classes.push(RootClass::Negative);
        } else {
            return Err(Error::InvalidArgument(format!(
                "basis vector {idx} has mixed-sign root coordinates"
            )));
        }
    }
    Ok(classes)
}

fn sparsify(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.clone()))
        .collect()
}

fn densify(v: &SparseVec, dim: usize) -> Vector {
    let mut out = zero_vector(dim);
    for (k, c) in v {
        out[*k] = c.clone();
    }
    out
}

/// Traceless (n x n)-matrices, with basis the off-diagonal elementary
/// matrices plus `H_i = E_ii - E_(i+1)(i+1)`, and the type A root datum
/// relative to the diagonal Cartan.
pub fn make_sl(n: usize) -> Result<LieAlgebra> {
    if n < 2 {
        return Err(Error::UnsupportedAlgebra(format!(
            "sl({n}) requires n >= 2"
        )));
    }
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    let mut index_of = std::collections::BTreeMap::new();
    // positive root vectors E_(i,j), i < j, lexicographic
    for i in 0..n {
        for j in (i + 1)..n {
            index_of.insert((i, j), mats.len());
            mats.push(elementary(n, i, j));
            labels.push(format!("E({},{})", i + 1, j + 1));
        }
    }
    // Cartan H_i
    let cartan_start = mats.len();
    for i in 0..(n - 1) {
        let mut h = Matrix::zeros(n, n);
        h.set(i, i, scalar::int(1));
        h.set(i + 1, i + 1, scalar::int(-1));
        mats.push(h);
        labels.push(format!("H{}", i + 1));
    }
    // negative root vectors E_(j,i), mirroring the positive order
    for i in 0..n {
        for j in (i + 1)..n {
            index_of.insert((j, i), mats.len());
            mats.push(elementary(n, j, i));
            labels.push(format!("E({},{})", j + 1, i + 1));
        }
    }
    let dim = mats.len();
    let mut algebra = LieAlgebra::from_matrix_basis(n, mats, labels)?;

    let rank = n - 1;
    let simple_root_spaces: Vec<(Subspace, Subspace)> = (0..rank)
        .map(|k| {
            let pos = Subspace::span(&[unit_vector(dim, index_of[&(k, k + 1)])], dim)?;
            let neg = Subspace::span(&[unit_vector(dim, index_of[&(k + 1, k)])], dim)?;
            Ok((pos, neg))
        })
        .collect::<Result<_>>()?;
    let cartan_rows: Vec<Vector> = (0..rank)
        .map(|i| unit_vector(dim, cartan_start + i))
        .collect();
    let cartan_subalgebra = Subspace::span(&cartan_rows, dim)?;
    let datum = build_root_datum(
        &algebra,
        Series::A,
        rank,
        simple_root_spaces,
        cartan_subalgebra,
    )?;
    algebra.root_datum = Some(datum);
    Ok(algebra)
}

/// Orthogonal and symplectic algebras of rank at most 4, in the antidiagonal
/// models so(2l+1), sp(2l), so(2l): the Cartan is diagonal and every other
/// basis vector is a root vector.
pub fn make_classical(series: Series, rank: usize) -> Result<LieAlgebra> {
    let supported = match series {
        Series::A => return make_sl(rank + 1),
        Series::B | Series::C => (1..=4).contains(&rank),
        Series::D => (2..=4).contains(&rank),
    };
    if !supported {
        return Err(Error::UnsupportedAlgebra(format!(
            "{series}{rank} is outside the supported rank range"
        )));
    }
    let l = rank;
    let n = match series {
        Series::B => 2 * l + 1,
        Series::C | Series::D => 2 * l,
        Series::A => unreachable!(),
    };
    let sigma = |i: usize| n - 1 - i;
    // sign split for the symplectic form
    let sgn = |i: usize| if i < n / 2 { 1i64 } else { -1i64 };

    let mut mats: Vec<Matrix> = Vec::new();
    let mut labels = Vec::new();
    let mut index_of = std::collections::BTreeMap::new();

    let mut push = |mats: &mut Vec<Matrix>,
                    labels: &mut Vec<String>,
                    index_of: &mut std::collections::BTreeMap<(usize, usize), usize>,
                    i: usize,
                    j: usize,
                    m: Matrix| {
        index_of.insert((i, j), mats.len());
        mats.push(m);
        labels.push(format!("X({},{})", i + 1, j + 1));
    };

    // Off-diagonal, non-antidiagonal positions pair up under
    // (i, j) -> (sigma(j), sigma(i)); keep the lexicographically smaller one.
    for i in 0..n {
        for j in 0..n {
            if i == j || j == sigma(i) {
                continue;
            }
            let partner = (sigma(j), sigma(i));
            if (i, j) > partner {
                continue;
            }
            let mut m = elementary(n, i, j);
            let coeff = match series {
                Series::B | Series::D => scalar::int(-1),
                Series::C => scalar::int(-(sgn(i) * sgn(j))),
                Series::A => unreachable!(),
            };
            m = m.add(&elementary(n, sigma(j), sigma(i)).scale(&coeff))
                .expect("same size");
            push(&mut mats, &mut labels, &mut index_of, i, j, m);
        }
    }
    // Antidiagonal entries are free exactly in the symplectic case (long roots).
    if series == Series::C {
        for i in 0..n {
            push(
                &mut mats,
                &mut labels,
                &mut index_of,
                i,
                sigma(i),
                elementary(n, i, sigma(i)),
            );
        }
    }
    // Diagonal Cartan D_k = E_kk - E_(sigma k)(sigma k)
    let cartan_start = mats.len();
    for k in 0..l {
        let mut h = Matrix::zeros(n, n);
        h.set(k, k, scalar::int(1));
        h.set(sigma(k), sigma(k), scalar::int(-1));
        mats.push(h);
        labels.push(format!("H{}", k + 1));
    }

    let dim = mats.len();
    let expected_dim = match series {
        Series::B | Series::C => 2 * l * l + l,
        Series::D => 2 * l * l - l,
        Series::A => unreachable!(),
    };
    debug_assert_eq!(dim, expected_dim);

    let mut algebra = LieAlgebra::from_matrix_basis(n, mats, labels)?;

    // Simple root spaces per series.
    let mut simple_root_spaces = Vec::new();
    for k in 0..(l - 1) {
        let pos = Subspace::span(&[unit_vector(dim, index_of[&(k, k + 1)])], dim)?;
        let neg = Subspace::span(&[unit_vector(dim, index_of[&(k + 1, k)])], dim)?;
        simple_root_spaces.push((pos, neg));
    }
    let (last_pos, last_neg) = match series {
        Series::B => ((l - 1, l), (l, l - 1)), // epsilon_l, via the middle column
        Series::C => ((l - 1, sigma(l - 1)), (sigma(l - 1), l - 1)), // 2 epsilon_l
        Series::D => ((l - 2, sigma(l - 1)), (sigma(l - 1), l - 2)), // epsilon_(l-1) + epsilon_l
        Series::A => unreachable!(),
    };
    simple_root_spaces.push((
        Subspace::span(&[unit_vector(dim, index_of[&last_pos])], dim)?,
        Subspace::span(&[unit_vector(dim, index_of[&last_neg])], dim)?,
    ));

    let cartan_rows: Vec<Vector> = (0..l).map(|i| unit_vector(dim, cartan_start + i)).collect();
    let cartan_subalgebra = Subspace::span(&cartan_rows, dim)?;
    let datum = build_root_datum(&algebra, series, l, simple_root_spaces, cartan_subalgebra)?;
    algebra.root_datum = Some(datum);
    Ok(algebra)
}

fn elementary(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m.set(i, j, scalar::int(1));
    m
}

/// Normalizes coroots and verifies the whole simple-root bracket pattern
/// against the standard Cartan matrix of the series.
fn build_root_datum(
    g: &LieAlgebra,
    series: Series,
    rank: usize,
    simple_root_spaces: Vec<(Subspace, Subspace)>,
    cartan_subalgebra: Subspace,
) -> Result<RootDatum> {
    let dim = g.dim();
    let mut coroots = Vec::new();
    for (pos, neg) in &simple_root_spaces {
        if pos.dim() != 1 || neg.dim() != 1 {
            return Err(Error::InvalidArgument(
                "simple root spaces must be one-dimensional".into(),
            ));
        }
        let e = pos.basis().row(0).to_vec();
        let f_raw = neg.basis().row(0).to_vec();
        let h_raw = g.bracket(&e, &f_raw)?;
        if !cartan_subalgebra.contains(&h_raw) {
            return Err(Error::InvalidArgument(
                "[e, f] of a simple pair must lie in the Cartan".into(),
            ));
        }
        // scale f so that the root takes value 2 on the coroot
        let c = eigen_ratio(g, &h_raw, &e)?;
        if c.is_zero() {
            return Err(Error::DegenerateForm);
        }
        let t = scalar::int(2) / c;
        let h: Vector = h_raw.iter().map(|x| x * &t).collect();
        coroots.push(h);
    }

    // Cartan matrix entries A[i][j] = value of alpha_i on coroot_j.
    let mut cartan_matrix = vec![vec![0i64; rank]; rank];
    for (j, h) in coroots.iter().enumerate() {
        for (i, (pos, neg)) in simple_root_spaces.iter().enumerate() {
            let e = pos.basis().row(0).to_vec();
            let f = neg.basis().row(0).to_vec();
            let a = eigen_ratio(g, h, &e)?;
            let a_neg = eigen_ratio(g, h, &f)?;
            if a_neg != -a.clone() {
                return Err(Error::InvalidArgument(
                    "positive and negative simple root spaces are not opposite".into(),
                ));
            }
            if !a.is_integer() {
                return Err(Error::InvalidArgument(
                    "Cartan pairing must be an integer".into(),
                ));
            }
            let int_a: i64 = a.to_integer().try_into().map_err(|_| {
                Error::InvalidArgument("Cartan entry out of i64 range".into())
            })?;
            cartan_matrix[i][j] = int_a;
        }
    }
    for (i, row) in cartan_matrix.iter().enumerate() {
        for (j, &a) in row.iter().enumerate() {
            if i == j && a != 2 {
                return Err(Error::InvalidArgument(format!(
                    "Cartan diagonal entry A[{i}][{i}] = {a}, expected 2"
                )));
            }
            if i != j && a > 0 {
                return Err(Error::InvalidArgument(format!(
                    "Cartan off-diagonal entry A[{i}][{j}] = {a} is positive"
                )));
            }
        }
    }
    let expected = standard_cartan_matrix(series, rank);
    if cartan_matrix != expected {
        return Err(Error::InvalidArgument(format!(
            "computed Cartan matrix {cartan_matrix:?} does not match {series}{rank}"
        )));
    }
    let _ = dim;
    Ok(RootDatum {
        series,
        rank,
        cartan_matrix,
        simple_root_spaces,
        cartan_subalgebra,
        simple_coroots: coroots,
    })
}

fn eigen_ratio(g: &LieAlgebra, h: &[Scalar], v: &[Scalar]) -> Result<Scalar> {
    let image = g.bracket(h, v)?;
    let lead = v
        .iter()
        .position(|x| !x.is_zero())
        .ok_or_else(|| Error::InvalidArgument("zero root vector".into()))?;
    let lambda = &image[lead] / &v[lead];
    let check: Vector = image
        .iter()
        .zip(v)
        .map(|(im, vi)| im - &(&lambda * vi))
        .collect();
    if !vector_is_zero(&check) {
        return Err(Error::InvalidArgument(
            "root vector is not an eigenvector of the Cartan element".into(),
        ));
    }
    Ok(lambda)
}

pub fn standard_cartan_matrix(series: Series, rank: usize) -> Vec<Vec<i64>> {
    let l = rank;
    let mut a = vec![vec![0i64; l]; l];
    for i in 0..l {
        a[i][i] = 2;
    }
    let chain = |a: &mut Vec<Vec<i64>>, upto: usize| {
        for i in 0..upto {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    };
    match series {
        Series::A => chain(&mut a, l.saturating_sub(1)),
        Series::B => {
            chain(&mut a, l.saturating_sub(1));
            if l >= 2 {
                // alpha_l short: <alpha_(l-1), coroot_l> = -2
                a[l - 2][l - 1] = -2;
                a[l - 1][l - 2] = -1;
            }
        }
        Series::C => {
            chain(&mut a, l.saturating_sub(1));
            if l >= 2 {
                // alpha_l long: <alpha_l, coroot_(l-1)> = -2
                a[l - 2][l - 1] = -1;
                a[l - 1][l - 2] = -2;
            }
        }
        Series::D => {
            if l >= 2 {
                chain(&mut a, l - 2);
                if l >= 3 {
                    a[l - 3][l - 1] = -1;
                    a[l - 1][l - 3] = -1;
                }
            }
        }
    }
    a
}

/// An involutive Lie algebra automorphism, stored as its coordinate matrix.
pub struct InvolutionSpec {
    matrix: Matrix,
    identity: bool,
}

impl InvolutionSpec {
    pub fn new(g: &LieAlgebra, matrix: Matrix) -> Result<InvolutionSpec> {
        let dim = g.dim();
        if matrix.nrows() != dim || matrix.ncols() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: matrix.nrows(),
            });
        }
        if matrix.mul(&matrix)? != Matrix::identity(dim) {
            return Err(Error::NotInvolution);
        }
        for i in 0..dim {
            for j in (i + 1)..dim {
                let lhs = matrix.mul_vec(&g.bracket(&unit_vector(dim, i), &unit_vector(dim, j))?)?;
                let rhs = g.bracket(&matrix.column(i), &matrix.column(j))?;
                if lhs != rhs {
                    return Err(Error::NotInvolution);
                }
            }
        }
        let identity = matrix == Matrix::identity(dim);
        Ok(InvolutionSpec { matrix, identity })
    }

    /// `x -> -x^T` in a matrix model; an involution for every classical model
    /// here since each is stable under transpose.
    pub fn neg_transpose(g: &LieAlgebra) -> Result<InvolutionSpec> {
        let model = g.matrix_model.as_ref().ok_or(Error::MissingMatrixModel)?;
        let dim = g.dim();
        let mut m = Matrix::zeros(dim, dim);
        for j in 0..dim {
            let image = model.basis_matrices[j]
                .transpose()
                .scale(&scalar::int(-1));
            let coords = model.to_coords(&image).ok_or(Error::NotInvolution)?;
            for i in 0..dim {
                m.set(i, j, coords[i].clone());
            }
        }
        InvolutionSpec::new(g, m)
    }

    pub fn identity_involution(g: &LieAlgebra) -> InvolutionSpec {
        InvolutionSpec {
            matrix: Matrix::identity(g.dim()),
            identity: true,
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// The graph of the identity is the diagonal, not a symmetric-space
    /// datum; callers may want to flag it.
    pub fn is_identity(&self) -> bool {
        self.identity
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vector> {
        self.matrix.mul_vec(v)
    }

    /// Fixed subalgebra `{x : sigma(x) = x}`.
    pub fn fixed_subalgebra(&self) -> Subspace {
        let dim = self.matrix.nrows();
        let mut m = self.matrix.clone();
        for i in 0..dim {
            let v = m.get(i, i) - scalar::int(1);
            m.set(i, i, v);
        }
        let kernel = m.nullspace();
        Subspace::span(
            &kernel.rows_iter().map(<[Scalar]>::to_vec).collect::<Vec<_>>(),
            dim,
        )
        .expect("kernel rows have ambient length")
    }
}

/// Trace form `tr(xy)` of a matrix model, used to cross-check the Killing
/// normalization `kappa = 2n * trace` on sl(n).
pub fn trace_form(g: &LieAlgebra) -> Result<BilinearForm> {
    let model = g.matrix_model.as_ref().ok_or(Error::MissingMatrixModel)?;
    let dim = g.dim();
    let mut gram = Matrix::zeros(dim, dim);
    for i in 0..dim {
        for j in i..dim {
            let prod = model.basis_matrices[i].mul(&model.basis_matrices[j])?;
            let mut tr = Scalar::zero();
            for k in 0..model.size {
                tr += prod.get(k, k).clone();
            }
            gram.set(i, j, tr.clone());
            gram.set(j, i, tr);
        }
    }
    BilinearForm::new(gram)
}
