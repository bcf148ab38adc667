use thiserror::Error;

use crate::geom::Point;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("coordinate of {0:?} exceeds the supported magnitude {limit}", limit = crate::geom::COORD_LIMIT)]
    CoordinateOutOfRange(Point),

    #[error("points coincide: {0:?}")]
    EqualPoints(Point),

    #[error("direction vector must be non-zero")]
    ZeroDirection,

    #[error("line coefficients (a, b) must not both be zero")]
    DegenerateLine,

    #[error("vertical line has no dual point")]
    VerticalLine,

    #[error("rectangle bounds must satisfy lo < hi on both axes")]
    EmptyRect,

    #[error("input violates general position: {0}")]
    GeneralPosition(String),

    #[error("swap of blue points {a} and {b} on the {axis} list, which are not adjacent")]
    AdjacencyViolation { axis: &'static str, a: usize, b: usize },

    #[error("three or more lines meet at a single point")]
    ConcurrentLines,

    #[error("level index {k} out of range for {lines} lines")]
    LevelOutOfRange { k: usize, lines: usize },

    #[error("the red point set is empty")]
    EmptyRed,

    #[error("the pair collection is empty")]
    EmptyInstance,

    #[error("instance too large for the brute-force oracle: {0}")]
    LimitExceeded(String),

    #[error("instance generation failed: {0}")]
    Generation(String),

    #[error("certificate does not re-validate: {0}")]
    InvalidCertificate(String),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Stable machine-readable tag used in CLI error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::CoordinateOutOfRange(_) => "coordinate_out_of_range",
            Error::EqualPoints(_) => "equal_points",
            Error::ZeroDirection => "zero_direction",
            Error::DegenerateLine => "degenerate_line",
            Error::VerticalLine => "vertical_line",
            Error::EmptyRect => "empty_rect",
            Error::GeneralPosition(_) => "general_position",
            Error::AdjacencyViolation { .. } => "adjacency_violation",
            Error::ConcurrentLines => "concurrent_lines",
            Error::LevelOutOfRange { .. } => "level_out_of_range",
            Error::EmptyRed => "empty_red",
            Error::EmptyInstance => "empty_instance",
            Error::LimitExceeded(_) => "limit_exceeded",
            Error::Generation(_) => "generation",
            Error::InvalidCertificate(_) => "invalid_certificate",
            Error::Parse(_) => "parse",
            Error::Io(_) => "io",
            Error::Json(_) => "json",
        }
    }
}
