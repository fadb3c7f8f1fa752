use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// The variants group into three kinds: malformed input (`NotSquare`,
/// `SizeMismatch`, ...), a theorem whose hypothesis is not met
/// ([`Error::is_inapplicable`]), and symbolic work refused for size
/// (`OverBudget`).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("ambient size must be positive")]
    EmptyAmbient,
    #[error("elements {0} and {1} do not commute")]
    NonCommuting(usize, usize),
    #[error("basis is linearly dependent")]
    LinearlyDependent,
    #[error("algebra is not commutative")]
    NotCommutative,
    #[error("algebra is not unital")]
    NotUnital,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("symbolic determinant of size {dim} exceeds budget {budget}")]
    OverBudget { dim: usize, budget: usize },
    #[error("matrix is derogatory")]
    Derogatory,
    #[error("two-form is degenerate")]
    Degenerate,
    #[error("antisymmetry fails at ({0}, {1})")]
    NotAntisymmetric(usize, usize),
    #[error("Jacobi identity fails at ({0}, {1}, {2})")]
    JacobiFails(usize, usize, usize),
    #[error("subspace is not inside the Heisenberg model")]
    NotInHeisenberg,
    #[error("matrix is singular")]
    Singular,
    #[error("inapplicable: {0}")]
    Inapplicable(String),
    #[error("unknown corpus family `{0}`")]
    UnknownFamily(String),
    #[error("invalid parameters for `{family}`: {reason}")]
    InvalidParams { family: String, reason: String },
}

impl Error {
    /// True when the error means "the hypothesis does not hold" rather
    /// than "the input is malformed".
    pub fn is_inapplicable(&self) -> bool {
        matches!(
            self,
            Error::Inapplicable(_)
                | Error::Derogatory
                | Error::NotCommutative
                | Error::NotUnital
                | Error::NonCommuting(..)
                | Error::Degenerate
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
