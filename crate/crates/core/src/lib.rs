//! Exact-rational computational toolkit for quadratic Lie-algebra doubles,
//! Manin triples, Lagrangian subalgebras, and the orbit combinatorics of the
//! wonderful compactification of a semisimple adjoint group.
//!
//! Everything is computed over the rationals with arbitrary precision: results
//! are algebraic identities, so equality is exact equality and there are no
//! tolerances anywhere.

pub mod double;
pub mod error;
pub mod matrix;
pub mod multivector;
pub mod parabolic;
pub mod lie;
pub mod scalar;
pub mod subspace;

pub use double::{
    cobracket, direct_sum_double, is_lagrangian, make_manin_triple, semidirect_double,
    standard_triple, verify_cocycle, Cobracket, DoubleKind, ManinTriple, QuadraticDouble,
};
pub use error::{Error, Result};
pub use lie::{make_classical, make_sl, InvolutionSpec, LieAlgebra, RootDatum, Series};
pub use matrix::{Matrix, Vector};
pub use multivector::{wedge_image, Multivector};
pub use parabolic::{
    bd_orbit_dimension, bd_validate, closure_relation, fiber_product_lagrangian, orbit_table,
    parabolic_data, stabilizer_algebra, BDTriple, OrbitRecord, ParabolicData,
};
pub use scalar::Scalar;
pub use subspace::{orth_complement, quotient_basis, BilinearForm, Subspace};
