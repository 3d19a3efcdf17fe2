use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Clone, Debug, Error, PartialEq)]
pub enum GeomError {
    #[error("non-finite input: {0}")]
    NonFinite(&'static str),

    #[error("{func} has a pole at {value}")]
    Pole { func: &'static str, value: f64 },

    #[error("{value} is outside the domain of {func}")]
    Domain { func: &'static str, value: f64 },

    #[error("homogeneous triple has no nonzero component")]
    ZeroTriple,

    #[error("points are coincident; the line through them is undefined")]
    CoincidentPoints,

    #[error("lines are coincident; their intersection is undefined")]
    CoincidentLines,

    #[error("no triangle exists with these measurements: {0}")]
    Inexistent(String),

    #[error("side {side} is not shorter than pi/sqrt(k) = {limit}")]
    OversizedSide { side: f64, limit: f64 },

    #[error("angles alone do not fix the size of a Euclidean triangle")]
    ScaleIndeterminate,

    #[error("angle sum {sum} is inconsistent with curvature {k}")]
    AngleSumInconsistent { sum: f64, k: f64 },

    #[error("triangle is not isosceles with apex C (a = {a}, b = {b})")]
    NotIsosceles { a: f64, b: f64 },

    #[error("the embedding is undefined for curvature 0")]
    FlatSpace,

    #[error("point at planar radius {r} is the projection pole or outside the model")]
    ProjectionPole { r: f64 },

    #[error("embedded point is off the surface (residual {residual})")]
    OffSurface { residual: f64 },

    #[error("reference triangle is degenerate")]
    DegenerateTriangle,

    #[error("translated edge planes do not meet in a single point")]
    ParallelPlanes,

    #[error("intersection of translated planes cannot be projected onto the surface")]
    CenterProjection,

    #[error("median point is undefined: the Euclidean centroid is at the surface center")]
    UndefinedMedian,

    #[error("point set is empty")]
    EmptyPointSet,

    #[error("solver did not converge after {iterations} iterations (residual {residual})")]
    NonConvergence { iterations: usize, residual: f64 },

    #[error("Jacobian is singular at {x1}, {x2}")]
    SingularJacobian { x1: f64, x2: f64 },
}

impl GeomError {
    /// Stable snake_case name, used in structured error reports.
    pub fn name(&self) -> &'static str {
        match self {
            GeomError::NonFinite(_) => "non_finite",
            GeomError::Pole { .. } => "pole",
            GeomError::Domain { .. } => "domain",
            GeomError::ZeroTriple => "zero_triple",
            GeomError::CoincidentPoints => "coincident_points",
            GeomError::CoincidentLines => "coincident_lines",
            GeomError::Inexistent(_) => "inexistent_triangle",
            GeomError::OversizedSide { .. } => "oversized_side",
            GeomError::ScaleIndeterminate => "scale_indeterminate",
            GeomError::AngleSumInconsistent { .. } => "angle_sum_inconsistent",
            GeomError::NotIsosceles { .. } => "not_isosceles",
            GeomError::FlatSpace => "flat_space",
            GeomError::ProjectionPole { .. } => "projection_pole",
            GeomError::OffSurface { .. } => "off_surface",
            GeomError::DegenerateTriangle => "degenerate_triangle",
            GeomError::ParallelPlanes => "parallel_planes",
            GeomError::CenterProjection => "center_projection",
            GeomError::UndefinedMedian => "undefined_median",
            GeomError::EmptyPointSet => "empty_point_set",
            GeomError::NonConvergence { .. } => "non_convergence",
            GeomError::SingularJacobian { .. } => "singular_jacobian",
        }
    }
}

pub type Result<T> = std::result::Result<T, GeomError>;
