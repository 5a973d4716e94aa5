use thiserror::Error;

/// Errors raised by the classification engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not symmetric (entry ({row}, {col}) differs from its transpose)")]
    NotSymmetric { row: usize, col: usize },

    #[error("irreducible factor of degree {degree} remains: {factor}")]
    IrreducibleFactorTooLarge { degree: usize, factor: String },

    #[error("polynomial of degree {0} exceeds the supported factorization degree")]
    DegreeTooLarge(usize),

    #[error("antisymmetry fails for basis pair ({i}, {j})")]
    NotAntisymmetric { i: usize, j: usize },

    #[error("Jacobi identity fails on basis triple ({i}, {j}, {k})")]
    JacobiViolation { i: usize, j: usize, k: usize },

    #[error("vectors are linearly dependent")]
    LinearlyDependent,

    #[error("not a subalgebra: bracket of h-basis elements {i} and {j} leaves h")]
    NotSubalgebra { i: usize, j: usize },

    #[error("h and m are not complementary: {0}")]
    NotComplement(String),

    #[error("m is not ad(h)-invariant: [h_{i}, m_{j}] has an h-component")]
    NotInvariantComplement { i: usize, j: usize },

    #[error("Killing form restricted to the subspace is degenerate (rank {rank} < {dim})")]
    DegenerateRestriction { rank: usize, dim: usize },

    #[error("element is not central in h")]
    NotCentral,

    #[error("the form B(z, [X, Y]) vanishes identically on m")]
    ZeroForm,

    #[error("no invariant endomorphism squares to {epsilon} times the identity")]
    NoSolution { epsilon: i8 },

    #[error("commutant component is not split over the rationals: {0}")]
    IrrationalComponent(String),

    #[error("unsupported parameters for {space}: {reason}")]
    UnsupportedParameters { space: String, reason: String },

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("metric is singular at the sample point {0:?}")]
    SingularChart(Vec<f64>),

    #[error("unknown space identifier '{0}'")]
    UnknownSpace(String),

    #[error("{context}: {source}")]
    Context {
        context: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub fn context(self, context: impl Into<String>) -> Self {
        Error::Context {
            context: context.into(),
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
