//! The round cylinder's extended frame, its monodromy with base point
//! z₀ = 0, and the period-closing conditions.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use crate::algebra::{ComplexJet, Mat2, Scalar};
use crate::{Error, Result, DEFAULT_TOL};

/// Choice of sheet for λ^{1/2}. The frame itself is single-valued: flipping
/// the sheet flips both λ^{±1/2} and sin μ, leaving every entry unchanged.
/// The alternate sheet exists so tests can assert exactly that.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Sheet {
    #[default]
    Principal,
    Alternate,
}

fn half_power<S: Scalar>(lambda: S, sheet: Sheet) -> Result<S> {
    if lambda.value().norm() == 0.0 {
        return Err(Error::ZeroLambda);
    }
    let s = lambda.sqrt();
    Ok(match sheet {
        Sheet::Principal => s,
        Sheet::Alternate => -s,
    })
}

/// The phase `μ_λ(z) = (π/2)(z·λ^{−1/2} + z̄·λ^{1/2})` on a chosen sheet.
pub fn mu_on<S: Scalar>(z: Complex64, lambda: S, sheet: Sheet) -> Result<S> {
    let root = half_power(lambda, sheet)?;
    let zs = S::from_complex(z);
    let zbs = S::from_complex(z.conj());
    Ok((zs * root.inv() + zbs * root) * S::from_real(FRAC_PI_2))
}

/// The phase μ on the principal sheet.
pub fn mu<S: Scalar>(z: Complex64, lambda: S) -> Result<S> {
    mu_on(z, lambda, Sheet::Principal)
}

/// Extended frame of the round cylinder,
/// `F_λ(z) = [[cos μ, i·λ^{−1/2}·sin μ], [i·λ^{1/2}·sin μ, cos μ]]`.
/// Unimodular everywhere, unitary for |λ| = 1.
pub fn frame_on<S: Scalar>(z: Complex64, lambda: S, sheet: Sheet) -> Result<Mat2<S>> {
    let root = half_power(lambda, sheet)?;
    let m = mu_on(z, lambda, sheet)?;
    let i = S::from_complex(Complex64::new(0.0, 1.0));
    let sin = m.sin();
    Ok(Mat2::new(m.cos(), i * root.inv() * sin, i * root * sin, m.cos()))
}

/// Extended frame on the principal sheet.
pub fn frame<S: Scalar>(z: Complex64, lambda: S) -> Result<Mat2<S>> {
    frame_on(z, lambda, Sheet::Principal)
}

/// Monodromy of the frame for the translation `z ↦ z + τ` with base point
/// z₀ = 0, which reduces to `M_λ(τ) = F_λ(τ)`.
pub fn monodromy<S: Scalar>(tau: Complex64, lambda: S) -> Result<Mat2<S>> {
    frame(tau, lambda)
}

/// Outcome of checking the closing conditions `M = ±1`, `M' = 0` on a
/// monodromy evaluated as a λ-jet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosingReport {
    /// +1 or −1, whichever sign of the identity the value is closer to.
    pub sign: i8,
    /// `‖M ∓ 1‖` for the better sign.
    pub value_deviation: f64,
    /// `‖M'‖`.
    pub derivative_deviation: f64,
    pub tol: f64,
    pub pass: bool,
}

impl ClosingReport {
    /// Evaluate the closing conditions on any frame-valued jet.
    pub fn from_jet(m: &Mat2<ComplexJet>, tol: f64) -> Self {
        let value = m.value();
        let id = Mat2::identity();
        let plus = value.dist(&id);
        let minus = value.dist(&id.scale(Complex64::new(-1.0, 0.0)));
        let (sign, value_deviation) = if plus <= minus { (1, plus) } else { (-1, minus) };
        let derivative_deviation = m.der().norm();
        ClosingReport {
            sign,
            value_deviation,
            derivative_deviation,
            tol,
            pass: value_deviation <= tol && derivative_deviation <= tol,
        }
    }
}

/// Check the period-closing conditions of the cylinder at `λ₀` for the
/// translation `z ↦ z + τ`, using the default structural tolerance.
pub fn check_closing(lambda0: Complex64, tau: Complex64) -> Result<ClosingReport> {
    check_closing_tol(lambda0, tau, DEFAULT_TOL)
}

/// As [`check_closing`] with an explicit tolerance.
pub fn check_closing_tol(lambda0: Complex64, tau: Complex64, tol: f64) -> Result<ClosingReport> {
    let m = monodromy(tau, ComplexJet::variable(lambda0))?;
    Ok(ClosingReport::from_jet(&m, tol))
}
