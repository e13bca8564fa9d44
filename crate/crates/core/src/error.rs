//! Crate-wide error type.

use alloc::string::String;

/// Errors reported by the geometric kernels.
///
/// Validation of polyhedral surfaces is report-valued (see
/// [`crate::surface::ValidationReport`]); this enum covers hard failures of
/// operation preconditions and numeric domains.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A vector fails the hyperboloid point invariants (unit timelike norm,
    /// upper sheet) beyond the stated tolerance.
    #[error("not a hyperboloid point: <x,x>_M = {norm}, x0 = {x0} (tol {tol})")]
    InvalidPoint { norm: f64, x0: f64, tol: f64 },

    /// A vector is not Minkowski-orthogonal to its declared base point.
    #[error("not a tangent vector: <base,v>_M = {residual} (tol {tol})")]
    InvalidTangent { residual: f64, tol: f64 },

    /// Frame vectors are not an orthonormal tangent basis.
    #[error("invalid frame: {0}")]
    InvalidFrame(&'static str),

    /// A matrix fails the pseudo-orthogonality check at the given tolerance.
    #[error("matrix is not pseudo-orthogonal: max residual {residual} (tol {tol})")]
    NotPseudoOrthogonal { residual: f64, tol: f64 },

    /// A Klein-model point lies on or outside the unit sphere.
    #[error("point outside the Klein ball: |y|^2 = {norm_sq}")]
    OutsideKleinBall { norm_sq: f64 },

    /// A point lies outside the ball declared by homothety parameters.
    #[error("point at Klein radius {rho} outside the declared ball of radius {rho_b}")]
    OutsideDeclaredBall { rho: f64, rho_b: f64 },

    /// A scalar parameter is outside its documented range.
    #[error("parameter out of range: {0}")]
    ParamRange(&'static str),

    /// Side lengths violate the strict triangle inequality.
    #[error("triangle inequality violated for sides ({a}, {b}, {c})")]
    TriangleInequality { a: f64, b: f64, c: f64 },

    /// An inverse trigonometric argument drifted beyond the clamping window,
    /// which indicates a logic error rather than rounding.
    #[error("inverse-trig argument {value} out of domain by {excess}")]
    TrigDomain { value: f64, excess: f64 },

    /// arcosh argument below 1: the closed-form bound is vacuous for these
    /// inputs and no value is produced.
    #[error("arcosh domain violation: argument {0} < 1 (vacuous bound)")]
    VacuousBound(f64),

    /// A vertex index is outside the surface.
    #[error("vertex index {index} out of range ({count} vertices)")]
    BadVertex { index: usize, count: usize },

    /// A face of a comparison polyhedron cannot be built from oracle
    /// distances.
    #[error("unbuildable face {face}: oracle sides ({a}, {b}, {c}) violate the triangle inequality")]
    UnbuildableFace { face: usize, a: f64, b: f64, c: f64 },

    /// An oracle returned an unusable distance.
    #[error("invalid oracle distance for pair ({u}, {v}): {value}")]
    BadOracle { u: usize, v: usize, value: f64 },

    /// The surface failed validation; run `validate` for the full report.
    #[error("invalid surface: {0}")]
    InvalidSurface(String),

    /// The two transversal sides of a fundamental domain disagree in length.
    #[error("transversal length mismatch: {h0} vs {h1} (tol {tol})")]
    HeightMismatch { h0: f64, h1: f64, tol: f64 },

    /// A fundamental-domain triangle is degenerate.
    #[error("degenerate fundamental-domain triangle ({0})")]
    DegenerateTriangle(&'static str),

    /// The boundary geodesics of a flattened cylinder intersect or are
    /// asymptotic, so no axis geodesic exists.
    #[error("boundary geodesics are not ultraparallel: |<n_R,n_Q>_M| = {pole_product}")]
    BoundaryGeodesicsNotUltraparallel { pole_product: f64 },

    /// The solved quadrilateral satisfies neither situation relation.
    #[error("inconsistent axis solve: h = {h}, h+ = {h_plus}, h- = {h_minus}")]
    InconsistentSolve { h: f64, h_plus: f64, h_minus: f64 },

    /// An operation that requires a solved quadrilateral got an unsolved one.
    #[error("cylinder quadrilateral has not been solved for its axis")]
    NotSolved,

    /// An operation was applied to the wrong situation class.
    #[error("operation requires a ContainsAxis quadrilateral")]
    WrongSituation,

    /// Generated parameters violate the type-Cyl minimality condition on the
    /// checked power window.
    #[error("minimality violated at deck power {power}: d = {dist} < h = {h}")]
    MinimalityViolated { power: i32, dist: f64, h: f64 },

    /// Envelope inputs must satisfy omega <= Omega per family.
    #[error("envelope ordering violated in family {family}: Omega = {upper} < omega = {lower}")]
    EnvelopeOrdering {
        family: &'static str,
        upper: f64,
        lower: f64,
    },
}

pub type Result<T> = core::result::Result<T, Error>;
