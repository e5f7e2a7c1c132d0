//! The Sym-Bobenko immersion, closed-form curves, turning number,
//! self-intersection detection, surface meshes and mean-curvature
//! estimation.

mod curvature;
mod curve;
mod intersect;
mod mesh;
mod turning;

pub use curvature::{mean_curvature_estimate, MeanCurvatureGrid};
pub use curve::{
    bubbleton_curve_closed_form, curve_summands, extract_planar_curve, planarity_defect,
    CurveSummands, PlanarCurve,
};
pub use intersect::{self_intersections, CurveIntersection};
pub use mesh::{surface_mesh, SurfaceMesh};
pub use turning::{turning_number, turning_number_quadrature, TurningNumber};

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::algebra::{spinor_to_r3_tol, ComplexJet, Mat2, Vec3};
use crate::dressing::{BubbletonParams, DressedFrame};
use crate::{Error, Result, DEFAULT_TOL};

/// The immersion from a frame carried as a λ-jet at the Sym point λ₀:
/// `f = −2i·λ₀·H⁻¹·(F'·F⁻¹)ᵗ`. The transpose fixes the x₁-orientation to
/// the closed-form cylinder parametrization; the result is trace-free
/// anti-hermitian for |λ₀| = 1.
pub fn sym_bobenko(
    frame_jet: &Mat2<ComplexJet>,
    lambda0: Complex64,
    h: f64,
) -> Result<Mat2<Complex64>> {
    if h == 0.0 {
        return Err(Error::ZeroMeanCurvature);
    }
    let log_der = frame_jet.der().mul(&frame_jet.value().inverse()?);
    let f = log_der
        .transpose()
        .scale(Complex64::new(0.0, -2.0) * lambda0 / h);
    let scale = f.norm().max(1.0);
    let deviation = f.add(&f.conj_transpose()).norm().max(f.trace().norm());
    if deviation > DEFAULT_TOL * scale {
        return Err(Error::NotInSu2 { deviation });
    }
    Ok(f)
}

/// The round cylinder in closed form,
/// `f₁(x, y) = (sin 2πx, −2πy, 1 − cos 2πx) / (2H)`.
pub fn cylinder_immersion_closed_form(x: f64, y: f64, h: f64) -> Vec3 {
    let s = 1.0 / (2.0 * h);
    Vec3::new(
        (2.0 * PI * x).sin() * s,
        -2.0 * PI * y * s,
        (1.0 - (2.0 * PI * x).cos()) * s,
    )
}

/// A bubbleton surface ready for pointwise evaluation: the dressed frame
/// together with the Sym point and mean curvature.
#[derive(Debug, Clone)]
pub struct BubbletonSurface {
    frame: DressedFrame,
    lambda0: Complex64,
    h: f64,
}

impl BubbletonSurface {
    pub fn new(params: &BubbletonParams) -> Result<Self> {
        if params.h == 0.0 {
            return Err(Error::ZeroMeanCurvature);
        }
        Ok(Self {
            frame: DressedFrame::new(params)?,
            lambda0: params.lambda0,
            h: params.h,
        })
    }

    pub fn mean_curvature(&self) -> f64 {
        self.h
    }

    /// The immersion as an su₂ matrix.
    pub fn su2_point(&self, z: Complex64) -> Result<Mat2<Complex64>> {
        let jet = self
            .frame
            .at(z)?
            .eval(ComplexJet::variable(self.lambda0))?;
        sym_bobenko(&jet, self.lambda0, self.h)
    }

    /// The immersion as a point of R³.
    pub fn point(&self, z: Complex64) -> Result<Vec3> {
        spinor_to_r3_tol(&self.su2_point(z)?, DEFAULT_TOL)
    }
}
