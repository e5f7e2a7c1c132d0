//! The spinor identification of Euclidean 3-space with su₂:
//! `(x₁, x₂, x₃) ≅ [[i·x₃, x₁ + i·x₂], [−x₁ + i·x₂, −i·x₃]]`.

use num_complex::Complex64;

use super::mat2::Mat2;
use crate::{Error, Result, DEFAULT_TOL};

/// A point of R³, in length units of 1/H.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3 {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl Vec3 {
    pub fn new(x1: f64, x2: f64, x3: f64) -> Self {
        Self { x1, x2, x3 }
    }

    pub fn norm(&self) -> f64 {
        (self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3).sqrt()
    }

    pub fn dist(&self, rhs: &Self) -> f64 {
        Self::new(self.x1 - rhs.x1, self.x2 - rhs.x2, self.x3 - rhs.x3).norm()
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::new(self.x1 - rhs.x1, self.x2 - rhs.x2, self.x3 - rhs.x3)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::new(self.x1 + rhs.x1, self.x2 + rhs.x2, self.x3 + rhs.x3)
    }

    pub fn cross(&self, rhs: &Self) -> Self {
        Self::new(
            self.x2 * rhs.x3 - self.x3 * rhs.x2,
            self.x3 * rhs.x1 - self.x1 * rhs.x3,
            self.x1 * rhs.x2 - self.x2 * rhs.x1,
        )
    }

    pub fn dot(&self, rhs: &Self) -> f64 {
        self.x1 * rhs.x1 + self.x2 * rhs.x2 + self.x3 * rhs.x3
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.x1 * s, self.x2 * s, self.x3 * s)
    }
}

/// Embed a 3-vector as a trace-free anti-hermitian matrix.
pub fn r3_to_spinor(v: Vec3) -> Mat2<Complex64> {
    Mat2::new(
        Complex64::new(0.0, v.x3),
        Complex64::new(v.x1, v.x2),
        Complex64::new(-v.x1, v.x2),
        Complex64::new(0.0, -v.x3),
    )
}

/// Read the 3-vector off a trace-free anti-hermitian matrix, using the
/// default structural tolerance.
pub fn spinor_to_r3(m: &Mat2<Complex64>) -> Result<Vec3> {
    spinor_to_r3_tol(m, DEFAULT_TOL)
}

/// As [`spinor_to_r3`], with an explicit tolerance. A violated precondition
/// signals a branch or derivative bug upstream.
pub fn spinor_to_r3_tol(m: &Mat2<Complex64>, tol: f64) -> Result<Vec3> {
    let scale = m.norm().max(1.0);
    let anti = m.add(&m.conj_transpose()).norm();
    let trace = m.trace().norm();
    let deviation = anti.max(trace);
    if deviation > tol * scale {
        return Err(Error::NotInSu2 { deviation });
    }
    Ok(Vec3::new(
        0.5 * (m.b.re - m.c.re),
        0.5 * (m.b.im + m.c.im),
        0.5 * (m.a.im - m.d.im),
    ))
}
