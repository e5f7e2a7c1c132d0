//! Simple factors, the admissible singularities α(K), dressed extended
//! frames for single and multi-lobe bubbletons, and the
//! removable-singularity limit at λ = α.

use num_complex::Complex64;

use crate::algebra::{
    gram_schmidt_qr, hermitian_projection, principal_sqrt, LineCP1, Mat2, Scalar,
};
use crate::cylinder::frame;
use crate::{Error, Result, DEFAULT_TOL, POLE_TOL};

/// The admissible singularity for lobe number K:
/// `α(K) = 2K² − 1 − 2K·√(K² − 1)`, the root in (0, 1) of
/// `α^{−1/2} + α^{1/2} = 2K`. Lobe numbers 0 and ±1 would put α on the unit
/// circle and are rejected.
pub fn alpha_for_lobes(k: u32) -> Result<f64> {
    if k < 2 {
        return Err(Error::InvalidLobeNumber { k: k as i64 });
    }
    let kf = k as f64;
    // α₋ = 1/α₊ evaluated through the larger root, which avoids the
    // cancellation in 2K² − 1 − 2K√(K²−1) that costs digits for large K.
    Ok(1.0 / (2.0 * kf * kf - 1.0 + 2.0 * kf * (kf * kf - 1.0).sqrt()))
}

/// The unnormalized simple-factor matrix
/// `ψ_{L,α}(λ) = π_L + ((α − λ)/(1 − ᾱλ))·π_L^⊥`.
/// Its determinant is `(α − λ)/(1 − ᾱλ)`, independently of L.
pub fn psi<S: Scalar>(line: &LineCP1, alpha: Complex64, lambda: S) -> Result<Mat2<S>> {
    let denom = S::one() - S::from_complex(alpha.conj()) * lambda;
    if denom.value().norm() <= DEFAULT_TOL {
        return Err(Error::PoleAtLambda {
            lambda: lambda.value(),
        });
    }
    let phi = (S::from_complex(alpha) - lambda) * denom.inv();
    let proj = hermitian_projection(line).promote_to::<S>();
    let comp = Mat2::<S>::identity().sub(&proj);
    Ok(proj.add(&comp.scale(phi)))
}

/// The scalar `φ(λ) = (α − λ)/(1 − ᾱλ)` (the determinant of ψ).
fn phi_scalar<S: Scalar>(alpha: Complex64, lambda: S) -> S {
    let denom = S::one() - S::from_complex(alpha.conj()) * lambda;
    (S::from_complex(alpha) - lambda) * denom.inv()
}

/// The constant Gram-Schmidt unitary normalizing ψ at λ = 0: writing
/// `(det ψ(0))^{−1/2}·ψ(0) = Q·R`, returns Q.
fn normalizing_unitary(line: &LineCP1, alpha: f64) -> Result<Mat2<Complex64>> {
    let psi0: Mat2<Complex64> = psi(line, Complex64::new(alpha, 0.0), Complex64::new(0.0, 0.0))?;
    let det_root = principal_sqrt(psi0.det())?;
    let (q, _r) = gram_schmidt_qr(&psi0.scale(det_root.inv()))?;
    Ok(q)
}

/// The simple factor `h_{L,α}(λ) = (det ψ)^{−1/2}·Q⁻¹·ψ_{L,α}(λ)`;
/// unimodular, unitary on the unit circle.
pub fn simple_factor<S: Scalar>(line: &LineCP1, alpha: f64, lambda: S) -> Result<Mat2<S>> {
    if (alpha.abs() - 1.0).abs() <= DEFAULT_TOL {
        return Err(Error::UnimodularAlpha);
    }
    let lam = lambda.value();
    let ac = Complex64::new(alpha, 0.0);
    if (lam - ac).norm() <= POLE_TOL || (lam - 1.0 / ac).norm() <= POLE_TOL {
        return Err(Error::PoleAtLambda { lambda: lam });
    }
    let q = normalizing_unitary(line, alpha)?;
    let scalar = principal_sqrt(phi_scalar(ac, lambda))?.inv();
    Ok(q
        .conj_transpose()
        .promote_to::<S>()
        .mul(&psi(line, ac, lambda)?)
        .scale(scalar))
}

/// The z-dependent transform of the dressing line,
/// `L̃(z) = conj(F_α(z))ᵗ·L`, renormalized.
pub fn dressed_line(z: Complex64, alpha: f64, line: &LineCP1) -> Result<LineCP1> {
    let f: Mat2<Complex64> = frame(z, Complex64::new(alpha, 0.0))?;
    LineCP1::new(f.conj_transpose().apply(line.vector()))
}

/// Parameters of one simple-factor lobe: the lobe number K, its admissible
/// singularity, and the dressing line (defaulting to [1 : 0]).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimpleFactorParams {
    pub k: u32,
    pub alpha: f64,
    pub line: LineCP1,
}

impl SimpleFactorParams {
    pub fn for_lobes(k: u32) -> Result<Self> {
        Ok(Self {
            k,
            alpha: alpha_for_lobes(k)?,
            line: LineCP1::e1(),
        })
    }

    pub fn with_line(k: u32, line: LineCP1) -> Result<Self> {
        Ok(Self {
            k,
            alpha: alpha_for_lobes(k)?,
            line,
        })
    }
}

/// Everything that determines a bubbleton surface: the lobe list, the mean
/// curvature, and the evaluation point λ₀ on the unit circle.
#[derive(Debug, Clone, PartialEq)]
pub struct BubbletonParams {
    pub lobes: Vec<SimpleFactorParams>,
    pub h: f64,
    pub lambda0: Complex64,
}

impl BubbletonParams {
    /// A single lobe with the default mean curvature H = −1/2 and λ₀ = 1.
    pub fn single(k: u32) -> Result<Self> {
        Self::multi(&[k])
    }

    /// Multiple lobes; the lobe numbers must be pairwise distinct and are
    /// applied in increasing order for reproducibility.
    pub fn multi(ks: &[u32]) -> Result<Self> {
        let mut sorted = ks.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLobes);
        }
        let lobes = sorted
            .iter()
            .map(|&k| SimpleFactorParams::for_lobes(k))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            lobes,
            h: -0.5,
            lambda0: Complex64::new(1.0, 0.0),
        })
    }

    /// The round cylinder itself (no dressing).
    pub fn cylinder() -> Self {
        Self {
            lobes: Vec::new(),
            h: -0.5,
            lambda0: Complex64::new(1.0, 0.0),
        }
    }

    pub fn with_mean_curvature(mut self, h: f64) -> Result<Self> {
        if h == 0.0 {
            return Err(Error::ZeroMeanCurvature);
        }
        self.h = h;
        Ok(self)
    }
}

#[derive(Debug, Clone)]
struct Lobe {
    alpha: f64,
    line: LineCP1,
    /// Q⁻¹ for the constant Gram-Schmidt unitary of ψ_{L,α}(0).
    q_inv: Mat2<Complex64>,
}

/// The dressed extended frame `Π_j h_{L_j,α_j} # F`. The scalar prefactors
/// `(det ψ)^{∓1/2}` of each simple-factor pair cancel exactly because the
/// determinant of ψ does not depend on the line, so a lobe contributes
/// `Q⁻¹·ψ_{L,α}(λ) · M · ψ_{L̃,α}(λ)⁻¹·Q̃(z)` with no square roots left.
#[derive(Debug, Clone)]
pub struct DressedFrame {
    lobes: Vec<Lobe>,
}

/// Per-point dressing data: the transformed line and its Gram-Schmidt
/// unitary for every lobe, computed once per z.
#[derive(Debug, Clone)]
pub struct DressedFrameAt {
    z: Complex64,
    stages: Vec<Stage>,
}

#[derive(Debug, Clone)]
struct Stage {
    alpha: f64,
    line: LineCP1,
    q_inv: Mat2<Complex64>,
    line_t: LineCP1,
    q_t: Mat2<Complex64>,
}

impl DressedFrame {
    pub fn new(params: &BubbletonParams) -> Result<Self> {
        let lobes = params
            .lobes
            .iter()
            .map(|p| {
                Ok(Lobe {
                    alpha: p.alpha,
                    line: p.line,
                    q_inv: normalizing_unitary(&p.line, p.alpha)?.conj_transpose(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { lobes })
    }

    /// Lobe singularities, for pole guarding.
    pub fn singularities(&self) -> impl Iterator<Item = f64> + '_ {
        self.lobes.iter().map(|l| l.alpha)
    }

    /// Prepare the z-dependent data. Lobe j sees the frame already dressed
    /// by lobes 0..j, evaluated at its own singularity, to transform its
    /// line.
    pub fn at(&self, z: Complex64) -> Result<DressedFrameAt> {
        let mut at = DressedFrameAt {
            z,
            stages: Vec::with_capacity(self.lobes.len()),
        };
        for lobe in &self.lobes {
            let partial = at.eval_unguarded(Complex64::new(lobe.alpha, 0.0))?;
            let line_t = LineCP1::new(partial.conj_transpose().apply(lobe.line.vector()))?;
            let q_t = normalizing_unitary(&line_t, lobe.alpha)?;
            at.stages.push(Stage {
                alpha: lobe.alpha,
                line: lobe.line,
                q_inv: lobe.q_inv,
                line_t,
                q_t,
            });
        }
        Ok(at)
    }
}

impl DressedFrameAt {
    pub fn z(&self) -> Complex64 {
        self.z
    }

    /// Evaluate the dressed frame at λ (plain or jet). Rejects λ within the
    /// pole guard radius of any α_j or 1/α_j.
    pub fn eval<S: Scalar>(&self, lambda: S) -> Result<Mat2<S>> {
        let lam = lambda.value();
        for stage in &self.stages {
            let ac = Complex64::new(stage.alpha, 0.0);
            if (lam - ac).norm() <= POLE_TOL || (lam - 1.0 / ac).norm() <= POLE_TOL {
                return Err(Error::PoleAtLambda { lambda: lam });
            }
        }
        self.eval_unguarded(lambda)
    }

    /// Evaluation without the pole guard, for limit extrapolation along
    /// λ → α where the singularity is removable.
    pub fn eval_unguarded<S: Scalar>(&self, lambda: S) -> Result<Mat2<S>> {
        let mut m = frame(self.z, lambda)?;
        for stage in &self.stages {
            let ac = Complex64::new(stage.alpha, 0.0);
            let left = stage
                .q_inv
                .promote_to::<S>()
                .mul(&psi(&stage.line, ac, lambda)?);
            let right = psi(&stage.line_t, ac, lambda)?
                .inverse()?
                .mul(&stage.q_t.promote_to::<S>());
            m = left.mul(&m).mul(&right);
        }
        Ok(m)
    }
}

/// Convenience wrapper: the dressed frame of `params` evaluated at (z, λ).
pub fn dressed_frame<S: Scalar>(
    z: Complex64,
    lambda: S,
    params: &BubbletonParams,
) -> Result<Mat2<S>> {
    DressedFrame::new(params)?.at(z)?.eval(lambda)
}

/// Result of the removable-singularity check at λ = α(K).
#[derive(Debug, Clone, PartialEq)]
pub struct ResidueReport {
    /// Extrapolated limit of the dressed monodromy as λ → α.
    pub limit: Mat2<Complex64>,
    /// Relative spread of the last two extrapolation stages.
    pub convergence: f64,
}

/// Numerically evaluate `lim_{λ→α} h_{L,α}·F_λ(1)·h_{L,α}⁻¹` by Richardson
/// extrapolation along λ = α + ε. The singularity is removable exactly for
/// the admissible α(K); the limit is `(−1)^K (1 + i·α^{−1/2}·2πK(K²−1)·E₁₂)`.
pub fn residue_check(k: u32) -> Result<ResidueReport> {
    if k < 2 {
        return Err(Error::InvalidLobeNumber { k: k as i64 });
    }
    residue_limit_for_alpha(alpha_for_lobes(k)?)
}

/// The same extrapolation for an arbitrary α ∈ (0, 1). Diverges (and
/// errors) when α is not an admissible singularity, because the pole of the
/// dressed monodromy is then genuine.
///
/// The monodromy is conjugated by the simple factor with the *same* line
/// on both sides, `h·F_λ(1)·h⁻¹`; the scalar prefactors cancel, leaving
/// `Q⁻¹·ψ(λ)·F_λ(1)·ψ(λ)⁻¹·Q`.
pub fn residue_limit_for_alpha(alpha: f64) -> Result<ResidueReport> {
    let line = LineCP1::e1();
    let ac = Complex64::new(alpha, 0.0);
    let q = normalizing_unitary(&line, alpha)?;
    let q_inv = q.conj_transpose();
    let tau = Complex64::new(1.0, 0.0);
    let conjugated = |lambda: Complex64| -> Result<Mat2<Complex64>> {
        let p: Mat2<Complex64> = psi(&line, ac, lambda)?;
        Ok(q_inv.mul(&p).mul(&frame(tau, lambda)?).mul(&p.inverse()?).mul(&q))
    };

    // ε_k = 10^{−k}·(1−α), k = 2..6; Neville extrapolation to ε = 0.
    let eps: Vec<f64> = (2..=6).map(|k| 10f64.powi(-k) * (1.0 - alpha)).collect();
    let values: Vec<Mat2<Complex64>> = eps
        .iter()
        .map(|&e| conjugated(Complex64::new(alpha + e, 0.0)))
        .collect::<Result<Vec<_>>>()?;

    // A genuine pole makes the samples blow up like 1/ε before any
    // extrapolation is meaningful.
    let first = values[0].norm();
    let last = values[values.len() - 1].norm();
    if !last.is_finite() || last > 10.0 * first + 10.0 {
        return Err(Error::ExtrapolationDiverged);
    }

    let mut table = values;
    let mut prev_diag = table[0];
    let mut last_step = f64::INFINITY;
    for j in 1..eps.len() {
        for i in (j..eps.len()).rev() {
            let num = table[i]
                .scale(Complex64::new(eps[i - j], 0.0))
                .sub(&table[i - 1].scale(Complex64::new(eps[i], 0.0)));
            table[i] = num.scale(Complex64::new(1.0 / (eps[i - j] - eps[i]), 0.0));
        }
        let diag = table[eps.len() - 1];
        last_step = diag.dist(&prev_diag);
        prev_diag = diag;
    }
    let limit = prev_diag;
    let scale = limit.norm().max(1.0);
    let convergence = last_step / scale;
    if !convergence.is_finite() || convergence > 1e-6 {
        return Err(Error::ExtrapolationDiverged);
    }
    Ok(ResidueReport { limit, convergence })
}

/// Closed form of the removable-singularity limit, for comparison:
/// `(−1)^K (1 + i·α^{−1/2}·2πK(K²−1)·E₁₂)`.
pub fn residue_closed_form(k: u32) -> Result<Mat2<Complex64>> {
    let alpha = alpha_for_lobes(k)?;
    let kf = k as f64;
    let coeff = 2.0 * std::f64::consts::PI * kf * (kf * kf - 1.0) / alpha.sqrt();
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    Ok(Mat2::new(
        Complex64::new(sign, 0.0),
        Complex64::new(0.0, sign * coeff),
        Complex64::new(0.0, 0.0),
        Complex64::new(sign, 0.0),
    ))
}
