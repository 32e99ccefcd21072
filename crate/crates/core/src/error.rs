use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong in the planner core.
///
/// Diagnostic payloads are stored as `f64` regardless of the working scalar
/// so the enum stays non-generic and cheap to pass around.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("catenary scale must be positive, got {value}")]
    NonpositiveScale { value: f64 },

    #[error("horizontal span must be non-negative, got {value}")]
    NegativeSpan { value: f64 },

    #[error("shape ratio must be non-negative, got {value}")]
    NegativeShapeRatio { value: f64 },

    #[error("hanging length {value} outside [0, {length}]")]
    HangLengthOutOfRange { value: f64, length: f64 },

    #[error("singular state: zero tension with a non-flat hanging segment")]
    SingularState,

    #[error("invalid material: {reason}")]
    InvalidMaterial { reason: String },

    #[error("invalid solver config: {reason}")]
    InvalidSolverConfig { reason: String },

    #[error("lift height {height} outside [0, {limit})")]
    HeightOutOfRange { height: f64, limit: f64 },

    #[error("failed to bracket root below u = {limit} (target {target})")]
    BracketFailed { limit: f64, target: f64 },

    #[error("root finder did not converge within {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error("equilibrium residual {residual} exceeds tolerance {tolerance}")]
    ResidualExceeded { residual: f64, tolerance: f64 },

    #[error("step {step} must lie in (0, {length})")]
    InvalidStep { step: f64, length: f64 },

    #[error("lift heights must be strictly increasing")]
    HeightsNotIncreasing,

    #[error("invalid chain setup: {reason}")]
    InvalidChain { reason: String },

    #[error("stride must be at least 1")]
    InvalidStride,

    #[error("trajectory has no path length to resample")]
    DegeneratePath,

    #[error("trajectory contains no waypoints")]
    EmptyTrajectory,

    #[error("need at least two waypoints")]
    TooFewWaypoints,

    #[error("need at least two shape samples, got {value}")]
    InvalidSampleCount { value: usize },

    #[error("sample spacing must be positive, got {value}")]
    InvalidSpacing { value: f64 },
}
