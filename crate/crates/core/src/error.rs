use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape {inner:?} is not contained in {outer:?}")]
    ShapeContainment { inner: Vec<usize>, outer: Vec<usize> },
    #[error("shape {0:?} is not a rectangle")]
    NotRectangular(Vec<usize>),
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),
    #[error("malformed part {0:?}: entries must be strictly increasing")]
    MalformedPart(Vec<u32>),
    #[error("malformed tableau: {0}")]
    MalformedTableau(String),
    #[error("invalid filling: {0}")]
    InvalidFilling(String),
    #[error("invalid reading {0:?}: {1}")]
    InvalidReading(Vec<u32>, String),
    #[error("tableau is not {expected}")]
    Classification { expected: &'static str },
    #[error("tableau does not agree with the filling")]
    FillingDisagreement,
    #[error("no value assigned to variable x{0}")]
    MissingAssignment(u32),
    #[error("degenerate factor x{0} - x{0}")]
    DegenerateFactor(u32),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("permutation moves entry {0} outside the acting range 1..={1}")]
    ActionDomain(u32, u32),
    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),
    #[error("not a wiring diagram: {0}")]
    NotWiringDiagram(String),
    #[error("entry out of range: {0}")]
    OutOfRange(String),
    #[error("weight {weight:?} does not match shape size {size}")]
    WeightMismatch { weight: Vec<usize>, size: usize },
    #[error("shape {shape:?} has more than {rows} rows")]
    TooTall { shape: Vec<usize>, rows: usize },
    #[error("element is zero")]
    ZeroElement,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("family is linearly dependent (rank {rank} < {len})")]
    DependentFamily { rank: usize, len: usize },
    #[error("target is not in the span of the family")]
    NotInSpan,
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable code, used in CLI error payloads.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ShapeContainment { .. } => "shape_containment",
            Error::NotRectangular(_) => "not_rectangular",
            Error::InvalidPartition(_) => "invalid_partition",
            Error::MalformedPart(_) => "malformed_part",
            Error::MalformedTableau(_) => "malformed_tableau",
            Error::InvalidFilling(_) => "invalid_filling",
            Error::InvalidReading(..) => "invalid_reading",
            Error::Classification { .. } => "classification",
            Error::FillingDisagreement => "filling_disagreement",
            Error::MissingAssignment(_) => "missing_assignment",
            Error::DegenerateFactor(_) => "degenerate_factor",
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::ActionDomain(..) => "action_domain",
            Error::UnsupportedShape(_) => "unsupported_shape",
            Error::NotWiringDiagram(_) => "not_wiring_diagram",
            Error::OutOfRange(_) => "out_of_range",
            Error::WeightMismatch { .. } => "weight_mismatch",
            Error::TooTall { .. } => "too_tall",
            Error::ZeroElement => "zero_element",
            Error::Unsupported(_) => "unsupported",
            Error::DependentFamily { .. } => "dependent_family",
            Error::NotInSpan => "not_in_span",
            Error::Internal(_) => "internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
