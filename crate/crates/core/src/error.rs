use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report.
///
/// The variant name doubles as the machine-readable error code used by the
/// CLI's JSON error object and by the C ABI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0:?} is reducible over the prime field")]
    Reducible(Vec<u32>),
    #[error("modulus must be monic of degree {expected}, got {found:?}")]
    DegreeMismatch { expected: u32, found: Vec<u32> },
    #[error("field GF({p}^{k}) exceeds the supported order of 65536")]
    FieldTooLarge { p: u32, k: u32 },
    #[error("invalid field element: {0}")]
    InvalidElement(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("field has odd extension degree and carries no involution")]
    NoInvolution,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("gram matrix is not Hermitian")]
    NotHermitian,
    #[error("form is degenerate (singular gram matrix)")]
    DegenerateForm,
    #[error("matrix is singular")]
    Singular,
    #[error("zero vector has no ray")]
    ZeroVector,
    #[error("basis vectors are linearly dependent")]
    DependentBasis,
    #[error("enumeration of dim {dim} over GF({q}^2) exceeds the guard (dim <= 4, q <= 5); override to proceed")]
    TooLarge { dim: usize, q: u32 },
    #[error("point is not in the quantum kernel")]
    NotKernelPoint,
    #[error("point is self-orthogonal; its polar plane contains it")]
    SelfOrthogonalInput,
    #[error("intersection has {count} points, expected exactly one")]
    NotUnique { count: usize },
    #[error("operator is not unitary")]
    NotUnitary,
    #[error("state is not in the span of the measurement basis")]
    NotInSpan,
    #[error("characteristic 2: use the characteristic-2 teleportation variant")]
    Char2NotSupported,
    #[error("characteristic is not 2")]
    NotChar2,
    #[error("state is zero")]
    ZeroState,
    #[error("message {0} has no encoding in characteristic 2")]
    Char2MessageUnsupported(String),
    #[error("state is not a multiple of a Bell-basis vector")]
    NotBellRay,
    #[error("search exhausted: {0}")]
    ExhaustedSearch(String),
    #[error("state is self-orthogonal and cannot be encoded")]
    SelfOrthogonalState,
    #[error("points span a subspace of rank {rank}, expected 3")]
    DegenerateSpan { rank: usize },
    #[error("malformed bitstream: {0}")]
    MalformedBitstream(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::Reducible(_) => "Reducible",
            Error::DegreeMismatch { .. } => "DegreeMismatch",
            Error::FieldTooLarge { .. } => "FieldTooLarge",
            Error::InvalidElement(_) => "InvalidElement",
            Error::DivisionByZero => "DivisionByZero",
            Error::FieldMismatch => "FieldMismatch",
            Error::NoInvolution => "NoInvolution",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NotSquare { .. } => "NotSquare",
            Error::NotHermitian => "NotHermitian",
            Error::DegenerateForm => "DegenerateForm",
            Error::Singular => "Singular",
            Error::ZeroVector => "ZeroVector",
            Error::DependentBasis => "DependentBasis",
            Error::TooLarge { .. } => "TooLarge",
            Error::NotKernelPoint => "NotKernelPoint",
            Error::SelfOrthogonalInput => "SelfOrthogonalInput",
            Error::NotUnique { .. } => "NotUnique",
            Error::NotUnitary => "NotUnitary",
            Error::NotInSpan => "NotInSpan",
            Error::Char2NotSupported => "Char2NotSupported",
            Error::NotChar2 => "NotChar2",
            Error::ZeroState => "ZeroState",
            Error::Char2MessageUnsupported(_) => "Char2MessageUnsupported",
            Error::NotBellRay => "NotBellRay",
            Error::ExhaustedSearch(_) => "ExhaustedSearch",
            Error::SelfOrthogonalState => "SelfOrthogonalState",
            Error::DegenerateSpan { .. } => "DegenerateSpan",
            Error::MalformedBitstream(_) => "MalformedBitstream",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }
}
