//! Points of CP¹ as normalized homogeneous 2-vectors.

use num_complex::Complex64;

use super::mat2::Mat2;
use crate::{Error, Result};

/// A line in C², stored as a unit-norm homogeneous vector. Two
/// representatives describe the same line iff they are proportional.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineCP1 {
    v: [Complex64; 2],
}

impl LineCP1 {
    pub fn new(v: [Complex64; 2]) -> Result<Self> {
        let n = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
        if n < 1e-150 {
            return Err(Error::ZeroVector);
        }
        Ok(Self {
            v: [v[0] / n, v[1] / n],
        })
    }

    pub fn from_ratio(a: Complex64, b: Complex64) -> Result<Self> {
        Self::new([a, b])
    }

    /// The coordinate line L = [1 : 0].
    pub fn e1() -> Self {
        Self {
            v: [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
        }
    }

    /// The coordinate line L = [0 : 1].
    pub fn e2() -> Self {
        Self {
            v: [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
        }
    }

    pub fn vector(&self) -> [Complex64; 2] {
        self.v
    }

    /// Whether two stored representatives span the same line, up to `tol`.
    pub fn same_line(&self, other: &Self, tol: f64) -> bool {
        let inner = self.v[0].conj() * other.v[0] + self.v[1].conj() * other.v[1];
        (1.0 - inner.norm()).abs() <= tol
    }
}

/// Hermitian projection onto a line: for L = [a : b],
/// `π_L = (|a|² + |b|²)⁻¹ [[|a|², a·b̄], [ā·b, |b|²]]`.
/// Idempotent, hermitian, trace one.
pub fn hermitian_projection(line: &LineCP1) -> Mat2<Complex64> {
    let [a, b] = line.vector();
    // The stored representative is unit norm, so the denominator is 1.
    Mat2::new(
        Complex64::new(a.norm_sqr(), 0.0),
        a * b.conj(),
        a.conj() * b,
        Complex64::new(b.norm_sqr(), 0.0),
    )
}
