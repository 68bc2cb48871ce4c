use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("subspace is not contained in the claimed superspace")]
    NotContained,

    #[error("bilinear form is degenerate")]
    DegenerateForm,

    #[error("bilinear form is not symmetric")]
    AsymmetricForm,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("matrix is not square")]
    NotSquare,

    #[error("antisymmetry fails at basis pair ({i}, {j})")]
    AntisymmetryFailure { i: usize, j: usize },

    #[error("Jacobi identity fails at basis triple ({i}, {j}, {k})")]
    JacobiFailure { i: usize, j: usize, k: usize },

    #[error("bilinear form is not invariant under the bracket")]
    FormNotInvariant,

    #[error("subspace is not a Lagrangian subalgebra")]
    NotLagrangian,

    #[error("the two subalgebras are not transversal")]
    NotTransversal,

    #[error("map is not an involutive Lie algebra automorphism")]
    NotInvolution,

    #[error("cocharacter grading is incompatible with the bracket")]
    GradingIncompatible,

    #[error("simple root index {index} out of range 1..={rank}")]
    RootIndexOutOfRange { index: usize, rank: usize },

    #[error("the algebra carries no root datum")]
    MissingRootDatum,

    #[error("the algebra carries no matrix model")]
    MissingMatrixModel,

    #[error("unsupported algebra: {0}")]
    UnsupportedAlgebra(String),

    #[error("multivector arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("projective point must have a nonzero coordinate")]
    ZeroProjectivePoint,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
