//! Error type shared by every module in the crate.

/// Errors reported by configuration validation, solvers, construction,
/// the numerical oracle, and the renderer.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A length that must be strictly positive and finite was not.
    #[error("radius must be positive and finite, got {0}")]
    NonPositiveRadius(f64),
    /// The chord T lies outside the admissible closed range [0, R].
    #[error("chord {chord} outside admissible range [0, {radius}]")]
    ChordOutOfRange { chord: f64, radius: f64 },
    /// A radius that must be nonnegative and finite was not.
    #[error("radius must be nonnegative and finite, got {0}")]
    NegativeRadius(f64),
    /// A dimensionless ratio lies outside [0, 1].
    #[error("ratio {0} outside admissible range [0, 1]")]
    ParameterOutOfRange(f64),
    /// The cusp offset n does not lie on the closed diameter [-R, R].
    #[error("point offset {offset} lies off the diameter [-{radius}, {radius}]")]
    PointOffDiameter { offset: f64, radius: f64 },
    /// P coincides with an endpoint of the diameter, so angle APB is undefined.
    #[error("degenerate triangle: P coincides with a diameter endpoint")]
    DegenerateTriangle,
    /// A sampling box with nonpositive width or height.
    #[error("bounding box must have positive width and height")]
    EmptyBox,
    /// Numerical verification needs a nondegenerate knife (T > 0).
    #[error("verification requires a strictly positive chord, got T = {0}")]
    DegenerateChord(f64),
    /// Render options that cannot produce a well-formed canvas.
    #[error("invalid render options: {0}")]
    InvalidOptions(String),
}

pub type Result<T> = std::result::Result<T, Error>;
