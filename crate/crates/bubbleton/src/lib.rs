//! Constant mean curvature bubbleton surfaces in Euclidean 3-space.
//!
//! The round cylinder's extended frame is dressed with simple factors to
//! produce bubbletons, the immersion is read off with the Sym-Bobenko
//! formula, and the planar curve at `y = 0` is analysed for turning number
//! and self-intersections.
//!
//! Modules:
//! - [`algebra`]: complex first-order jets in the spectral parameter, 2×2
//!   complex matrices generic over plain/jet scalars, lines in CP¹, the
//!   spinor identification of R³ with su₂, and 2×2 Gram-Schmidt.
//! - [`cylinder`]: the vacuum extended frame, its monodromy and the
//!   period-closing conditions.
//! - [`dressing`]: simple factors, the admissible singularities α(K),
//!   single- and multi-lobe dressed frames, and the removable-singularity
//!   limit at λ = α.
//! - [`geometry`]: the Sym-Bobenko immersion, closed-form curves, turning
//!   number, self-intersection detection, surface meshes and a
//!   finite-difference mean-curvature estimator.

pub mod algebra;
pub mod cylinder;
pub mod dressing;
pub mod geometry;

use num_complex::Complex64;

/// Default tolerance for structural preconditions (trace-free, unitarity,
/// determinant checks) on 2×2 double-precision algebra.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Guard radius around the simple-factor singularities α and 1/α; inside it
/// the cancellation error in (α−λ)⁻¹ dominates double precision.
pub const POLE_TOL: f64 = 1e-6;

/// Errors shared by all modules.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("matrix is not trace-free anti-hermitian (deviation {deviation:.3e})")]
    NotInSu2 { deviation: f64 },
    #[error("matrix is numerically singular")]
    SingularInput,
    #[error("square root of zero requested")]
    ZeroArgument,
    #[error("zero homogeneous vector does not define a line")]
    ZeroVector,
    #[error("spectral parameter must be nonzero")]
    ZeroLambda,
    #[error("lambda {lambda} is too close to a simple-factor singularity")]
    PoleAtLambda { lambda: Complex64 },
    #[error("simple factor requires |alpha| != 1")]
    UnimodularAlpha,
    #[error("lobe number must be an integer >= 2, got {k}")]
    InvalidLobeNumber { k: i64 },
    #[error("each lobe number may appear only once")]
    DuplicateLobes,
    #[error("mean curvature must be nonzero")]
    ZeroMeanCurvature,
    #[error("limit extrapolation did not converge (singularity not removable)")]
    ExtrapolationDiverged,
    #[error("y=0 immersion is not planar (max imaginary part {max_imag:.3e})")]
    PlanarityViolated { max_imag: f64 },
    #[error("curve tangent turns too fast to certify the winding")]
    IrregularCurve,
    #[error("operation requires a closed curve")]
    CurveNotClosed,
    #[error("sample count too small, need at least {min}")]
    TooFewSamples { min: usize },
    #[error("operation requires at most one lobe")]
    SingleLobeRequired,
}

pub type Result<T> = std::result::Result<T, Error>;

pub use algebra::{
    gram_schmidt_qr, hermitian_projection, principal_sqrt, r3_to_spinor, spinor_to_r3, ComplexJet,
    LineCP1, Mat2, Scalar, Vec3,
};
pub use cylinder::{check_closing, frame, monodromy, mu, ClosingReport, Sheet};
pub use dressing::{
    alpha_for_lobes, dressed_frame, dressed_line, psi, residue_check, residue_closed_form,
    simple_factor, BubbletonParams, DressedFrame, ResidueReport, SimpleFactorParams,
};
pub use geometry::{
    bubbleton_curve_closed_form, curve_summands, cylinder_immersion_closed_form,
    extract_planar_curve, mean_curvature_estimate, planarity_defect, self_intersections,
    surface_mesh, sym_bobenko, turning_number, turning_number_quadrature, BubbletonSurface,
    CurveIntersection, CurveSummands, MeanCurvatureGrid, PlanarCurve, SurfaceMesh, TurningNumber,
};
