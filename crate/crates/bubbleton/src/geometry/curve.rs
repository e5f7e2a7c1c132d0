//! The y = 0 curve of a single bubbleton: closed-form summands of the
//! immersion, the planar (X, Z) curve, pipeline extraction, and adaptive
//! polyline refinement.

use std::f64::consts::PI;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_complex::Complex64;

use crate::algebra::Mat2;
use crate::dressing::{alpha_for_lobes, BubbletonParams};
use crate::geometry::BubbletonSurface;
use crate::{Error, Result};

/// Real number with exact first and second derivatives, for analytic
/// differentiation of the trigonometric closed forms.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Jet2 {
    pub f: f64,
    pub d1: f64,
    pub d2: f64,
}

impl Jet2 {
    pub fn var(x: f64) -> Self {
        Self { f: x, d1: 1.0, d2: 0.0 }
    }
    pub fn constant(c: f64) -> Self {
        Self { f: c, d1: 0.0, d2: 0.0 }
    }
}

impl Add for Jet2 {
    type Output = Self;
    fn add(self, r: Self) -> Self {
        Self { f: self.f + r.f, d1: self.d1 + r.d1, d2: self.d2 + r.d2 }
    }
}

impl Sub for Jet2 {
    type Output = Self;
    fn sub(self, r: Self) -> Self {
        Self { f: self.f - r.f, d1: self.d1 - r.d1, d2: self.d2 - r.d2 }
    }
}

impl Mul for Jet2 {
    type Output = Self;
    fn mul(self, r: Self) -> Self {
        Self {
            f: self.f * r.f,
            d1: self.d1 * r.f + self.f * r.d1,
            d2: self.d2 * r.f + 2.0 * self.d1 * r.d1 + self.f * r.d2,
        }
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for Jet2 {
    type Output = Self;
    fn div(self, r: Self) -> Self {
        let inv = 1.0 / r.f;
        let g = Self {
            f: inv,
            d1: -r.d1 * inv * inv,
            d2: (2.0 * r.d1 * r.d1 - r.f * r.d2) * inv * inv * inv,
        };
        self * g
    }
}

impl Neg for Jet2 {
    type Output = Self;
    fn neg(self) -> Self {
        Self { f: -self.f, d1: -self.d1, d2: -self.d2 }
    }
}

/// Scalar interface shared by `f64` and [`Jet2`] so the curve formulas are
/// written once.
pub(crate) trait CurveReal:
    Copy + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Div<Output = Self> + Neg<Output = Self>
{
    fn from_f64(x: f64) -> Self;
    fn sin(self) -> Self;
    fn cos(self) -> Self;
}

impl CurveReal for f64 {
    fn from_f64(x: f64) -> Self {
        x
    }
    fn sin(self) -> Self {
        f64::sin(self)
    }
    fn cos(self) -> Self {
        f64::cos(self)
    }
}

impl CurveReal for Jet2 {
    fn from_f64(x: f64) -> Self {
        Jet2::constant(x)
    }
    fn sin(self) -> Self {
        let (s, c) = self.f.sin_cos();
        Jet2 {
            f: s,
            d1: self.d1 * c,
            d2: self.d2 * c - self.d1 * self.d1 * s,
        }
    }
    fn cos(self) -> Self {
        let (s, c) = self.f.sin_cos();
        Jet2 {
            f: c,
            d1: -self.d1 * s,
            d2: -self.d2 * s - self.d1 * self.d1 * c,
        }
    }
}

/// Precomputed constants of the closed-form curve for one lobe number.
#[derive(Debug, Clone, Copy)]
pub(crate) struct CurveConsts {
    pub k: u32,
    pub alpha: f64,
    pub sqrt_alpha: f64,
    /// K / (2√(K²−1)), the constant part of the diagonal summand.
    pub diag_const: f64,
}

impl CurveConsts {
    pub fn new(k: u32) -> Result<Self> {
        let alpha = alpha_for_lobes(k)?;
        let kf = k as f64;
        Ok(Self {
            k,
            alpha,
            sqrt_alpha: alpha.sqrt(),
            diag_const: kf / (2.0 * (kf * kf - 1.0).sqrt()),
        })
    }

    /// The rational-trigonometric pair (u, v) entering the off-diagonal and
    /// diagonal of the third curve summand.
    pub fn uv<T: CurveReal>(&self, x: T) -> (T, T) {
        let alpha = T::from_f64(self.alpha);
        let one = T::from_f64(1.0);
        let two = T::from_f64(2.0);
        let kf = self.k as f64;
        let two_pi = T::from_f64(2.0 * PI);

        let rm = T::from_f64((self.sqrt_alpha - 1.0) * (self.sqrt_alpha - 1.0));
        let rp = T::from_f64((self.sqrt_alpha + 1.0) * (self.sqrt_alpha + 1.0));
        let am1 = alpha - one;

        let cos_k = (two_pi * T::from_f64(kf) * x).cos();
        let cos_2k = (two_pi * T::from_f64(2.0 * kf) * x).cos();
        let cos_kp = (two_pi * T::from_f64(kf + 1.0) * x).cos();
        let cos_km = (two_pi * T::from_f64(kf - 1.0) * x).cos();
        let cos_1 = (two_pi * x).cos();
        let sin_kp = (two_pi * T::from_f64(kf + 1.0) * x).sin();
        let sin_km = (two_pi * T::from_f64(kf - 1.0) * x).sin();
        let sin_1 = (two_pi * x).sin();

        let factor = am1 * cos_k - alpha - one;
        let combo_cos = rm * cos_kp + rp * cos_km + two * am1 * cos_1;
        let combo_sin = rm * sin_kp - rp * sin_km + two * am1 * sin_1;
        let denom = two
            * am1
            * (-(am1 * am1 * cos_2k) + alpha * alpha + T::from_f64(6.0) * alpha + one);

        let ap1 = alpha + one;
        let u = ap1 * factor * combo_cos / denom;
        let v = ap1 * combo_sin * factor / denom;
        (u, v)
    }

    /// The planar curve (X, Z): `X = sin(2πx)/4 + v` and
    /// `Z = u − sin²(πx)/2 − K/(2√(K²−1))`. Both have period one and pass
    /// through the origin at x = 0.
    pub fn xz<T: CurveReal>(&self, x: T) -> (T, T) {
        let (u, v) = self.uv(x);
        let s = (T::from_f64(PI) * x).sin();
        let big_x = (T::from_f64(2.0 * PI) * x).sin() / T::from_f64(4.0) + v;
        let big_z = u - s * s / T::from_f64(2.0) - T::from_f64(self.diag_const);
        (big_x, big_z)
    }
}

/// The closed-form planar curve of the K-lobed bubbleton at parameter x.
pub fn bubbleton_curve_closed_form(x: f64, k: u32) -> Result<(f64, f64)> {
    Ok(CurveConsts::new(k)?.xz(x))
}

/// The three closed-form summands of the y = 0 immersion at λ = 1 in the
/// curve normalization (overall factor i, i.e. mean curvature −2): a
/// constant diagonal part, the cylinder part, and the dressing part.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveSummands {
    pub t1: Mat2<Complex64>,
    pub t2: Mat2<Complex64>,
    pub t3: Mat2<Complex64>,
}

impl CurveSummands {
    pub fn sum(&self) -> Mat2<Complex64> {
        self.t1.add(&self.t2).add(&self.t3)
    }
}

/// Evaluate the three summands at x for lobe number K.
pub fn curve_summands(x: f64, k: u32) -> Result<CurveSummands> {
    let consts = CurveConsts::new(k)?;
    let i = Complex64::new(0.0, 1.0);
    let a = consts.diag_const;
    let t1 = Mat2::diag(-i * a, i * a);

    let s = (PI * x).sin();
    let sc = 0.5 * (2.0 * PI * x).sin();
    let t2 = Mat2::new(
        -i * (0.5 * s * s),
        Complex64::new(-0.5 * sc, 0.0),
        Complex64::new(0.5 * sc, 0.0),
        i * (0.5 * s * s),
    );

    let (u, v) = consts.uv(x);
    let t3 = Mat2::new(
        i * u,
        Complex64::new(-v, 0.0),
        Complex64::new(v, 0.0),
        -i * u,
    );
    Ok(CurveSummands { t1, t2, t3 })
}

/// A sampled closed plane curve together with its exact evaluator, so the
/// analyses can refine wherever they need to.
#[derive(Clone)]
pub struct PlanarCurve {
    samples: Vec<(f64, [f64; 2])>,
    closed: bool,
    eval: Arc<dyn Fn(f64) -> [f64; 2] + Send + Sync>,
}

impl std::fmt::Debug for PlanarCurve {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PlanarCurve")
            .field("samples", &self.samples.len())
            .field("closed", &self.closed)
            .finish()
    }
}

impl PlanarCurve {
    /// Sample `eval` at n+1 uniform parameters on [0, 1].
    pub fn from_fn<F>(eval: F, n: usize, closed: bool) -> Result<Self>
    where
        F: Fn(f64) -> [f64; 2] + Send + Sync + 'static,
    {
        if n < 2 {
            return Err(Error::TooFewSamples { min: 2 });
        }
        let eval: Arc<dyn Fn(f64) -> [f64; 2] + Send + Sync> = Arc::new(eval);
        let samples = (0..=n)
            .map(|i| {
                let t = i as f64 / n as f64;
                (t, eval(t))
            })
            .collect();
        Ok(Self { samples, closed, eval })
    }

    /// The closed-form curve of a K-lobed bubbleton, adaptively refined.
    pub fn bubbleton(k: u32, n: usize) -> Result<Self> {
        let consts = CurveConsts::new(k)?;
        let mut curve = Self::from_fn(
            move |t| {
                let (x, z) = consts.xz(t);
                [x, z]
            },
            n.max(16),
            true,
        )?;
        curve.refine(MAX_TANGENT_TURN);
        Ok(curve)
    }

    pub fn samples(&self) -> &[(f64, [f64; 2])] {
        &self.samples
    }

    pub fn closed(&self) -> bool {
        self.closed
    }

    pub fn eval(&self, t: f64) -> [f64; 2] {
        (self.eval)(t)
    }

    pub(crate) fn evaluator(&self) -> Arc<dyn Fn(f64) -> [f64; 2] + Send + Sync> {
        Arc::clone(&self.eval)
    }

    /// Bisect every parameter interval across which the chord direction
    /// turns faster than `max_turn`, until all turns are resolved.
    pub fn refine(&mut self, max_turn: f64) {
        refine_samples(&mut self.samples, self.eval.as_ref(), max_turn, self.closed);
    }
}

/// Refinement threshold: resolve the tangent direction to 0.1 rad, which
/// guarantees at least ~60 samples around any small loop.
pub(crate) const MAX_TANGENT_TURN: f64 = 0.1;

const MIN_INTERVAL: f64 = 1e-12;
const MAX_SAMPLES: usize = 2_000_000;

fn chord_angle(p: &[f64; 2], q: &[f64; 2]) -> Option<f64> {
    let dx = q[0] - p[0];
    let dy = q[1] - p[1];
    if dx == 0.0 && dy == 0.0 {
        return None;
    }
    Some(dy.atan2(dx))
}

fn wrap_angle(a: f64) -> f64 {
    let mut a = a % (2.0 * PI);
    if a > PI {
        a -= 2.0 * PI;
    } else if a < -PI {
        a += 2.0 * PI;
    }
    a
}

pub(crate) fn refine_samples(
    samples: &mut Vec<(f64, [f64; 2])>,
    eval: &(dyn Fn(f64) -> [f64; 2] + Send + Sync),
    max_turn: f64,
    closed: bool,
) {
    for _pass in 0..64 {
        if samples.len() >= MAX_SAMPLES {
            break;
        }
        let n = samples.len();
        if n < 3 {
            break;
        }
        let angles: Vec<Option<f64>> = samples
            .windows(2)
            .map(|w| chord_angle(&w[0].1, &w[1].1))
            .collect();
        let m = angles.len();
        let mut mark = vec![false; m];
        let turns = if closed { m } else { m - 1 };
        for i in 0..turns {
            let j = (i + 1) % m;
            if let (Some(a), Some(b)) = (angles[i], angles[j]) {
                if wrap_angle(b - a).abs() > max_turn {
                    mark[i] = true;
                    mark[j] = true;
                }
            } else {
                // A degenerate chord: resolve it by subdividing.
                mark[i] = true;
            }
        }
        let mut inserts: Vec<(f64, [f64; 2])> = Vec::new();
        for (i, marked) in mark.iter().enumerate() {
            if !marked {
                continue;
            }
            let (t0, _) = samples[i];
            let (t1, _) = samples[i + 1];
            if t1 - t0 < MIN_INTERVAL {
                continue;
            }
            let tm = 0.5 * (t0 + t1);
            inserts.push((tm, eval(tm)));
        }
        if inserts.is_empty() {
            break;
        }
        samples.extend(inserts);
        samples.sort_by(|a, b| a.0.total_cmp(&b.0));
    }
}

/// Sample the full dressed-pipeline immersion along y = 0, assert
/// planarity of every sample, and return the (X, Z) = (x₁, x₃) curve,
/// refined where the tangent turns fast. Requires at most one lobe; the
/// round cylinder (no lobes) is allowed and yields the generating circle.
pub fn extract_planar_curve(params: &BubbletonParams, n: usize) -> Result<PlanarCurve> {
    if n < 16 {
        return Err(Error::TooFewSamples { min: 16 });
    }
    if params.lobes.len() > 1 {
        return Err(Error::SingleLobeRequired);
    }
    let surface = BubbletonSurface::new(params)?;
    let point_xz = {
        let surface = surface.clone();
        move |t: f64| -> [f64; 2] {
            let m = surface
                .su2_point(Complex64::new(t, 0.0))
                .expect("immersion defined along y = 0");
            [m.b.re, m.a.im]
        }
    };
    let mut curve = PlanarCurve::from_fn(point_xz, n, true)?;
    curve.refine(MAX_TANGENT_TURN);

    // Planarity: the off-diagonal entries must be real.
    let mut max_imag: f64 = 0.0;
    for &(t, _) in curve.samples() {
        let m = surface.su2_point(Complex64::new(t, 0.0))?;
        max_imag = max_imag.max(m.b.im.abs()).max(m.c.im.abs());
    }
    if max_imag > 1e-9 {
        return Err(Error::PlanarityViolated { max_imag });
    }

    // Closure of the period-one curve.
    let first = curve.samples().first().unwrap().1;
    let last = curve.samples().last().unwrap().1;
    if ((first[0] - last[0]).powi(2) + (first[1] - last[1]).powi(2)).sqrt() > 1e-9 {
        return Err(Error::CurveNotClosed);
    }
    Ok(curve)
}

/// Max imaginary part of the off-diagonal entries of the y = 0 immersion
/// over n+1 uniform samples, together with the max |x₂| component.
pub fn planarity_defect(params: &BubbletonParams, n: usize) -> Result<(f64, f64)> {
    let surface = BubbletonSurface::new(params)?;
    let mut max_imag: f64 = 0.0;
    let mut max_x2: f64 = 0.0;
    for i in 0..=n {
        let t = i as f64 / n as f64;
        let m = surface.su2_point(Complex64::new(t, 0.0))?;
        max_imag = max_imag.max(m.b.im.abs()).max(m.c.im.abs());
        max_x2 = max_x2.max(0.5 * (m.b.im + m.c.im).abs());
    }
    Ok((max_imag, max_x2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jet2_quotient_rule() {
        // r(x) = sin(3x) / (2 + cos x); compare against finite differences.
        let eval = |x: f64| (3.0 * x).sin() / (2.0 + x.cos());
        let x0 = 0.7;
        let j = {
            let x = Jet2::var(x0);
            (Jet2::constant(3.0) * x).sin() / (Jet2::constant(2.0) + x.cos())
        };
        let h = 1e-5;
        let d1 = (eval(x0 + h) - eval(x0 - h)) / (2.0 * h);
        let d2 = (eval(x0 + h) - 2.0 * eval(x0) + eval(x0 - h)) / (h * h);
        assert!((j.f - eval(x0)).abs() < 1e-14);
        assert!((j.d1 - d1).abs() < 1e-9);
        assert!((j.d2 - d2).abs() < 1e-5);
    }

    #[test]
    fn closed_form_curve_is_periodic() {
        for k in 2..=5u32 {
            let (x0, z0) = bubbleton_curve_closed_form(0.0, k).unwrap();
            let (x1, z1) = bubbleton_curve_closed_form(1.0, k).unwrap();
            assert!((x0 - x1).abs() < 1e-12 && (z0 - z1).abs() < 1e-12, "K={k}");
        }
    }

    #[test]
    fn closed_form_curve_starts_at_origin() {
        for k in 2..=6u32 {
            let (x0, z0) = bubbleton_curve_closed_form(0.0, k).unwrap();
            assert!(x0.abs() < 1e-12 && z0.abs() < 1e-12, "K={k}: ({x0}, {z0})");
        }
    }

    #[test]
    fn summand_t1_for_two_lobes() {
        let s = curve_summands(0.3, 2).unwrap();
        let a = 1.0 / 3.0f64.sqrt();
        let i = Complex64::new(0.0, 1.0);
        assert!(s.t1.dist(&Mat2::diag(-i * a, i * a)) < 1e-14);
    }

    #[test]
    fn summand_t2_vanishes_at_zero() {
        let s = curve_summands(0.0, 3).unwrap();
        assert!(s.t2.norm() < 1e-15);
    }

    #[test]
    fn refinement_resolves_small_loops() {
        let mut curve = PlanarCurve::from_fn(
            |t| {
                let (x, z) = CurveConsts::new(2).unwrap().xz(t);
                [x, z]
            },
            64,
            true,
        )
        .unwrap();
        let before = curve.samples().len();
        curve.refine(MAX_TANGENT_TURN);
        assert!(curve.samples().len() > before * 4);
    }
}
