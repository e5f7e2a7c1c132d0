//! 2×2 complex matrices, generic over plain or jet scalars. The universal
//! carrier for extended frames, simple factors and monodromies.

use num_complex::Complex64;

use super::scalar::{ComplexJet, Scalar};
use crate::{Error, Result, DEFAULT_TOL};

/// Matrix `[[a, b], [c, d]]` over a [`Scalar`] type.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2<S> {
    pub a: S,
    pub b: S,
    pub c: S,
    pub d: S,
}

impl<S: Scalar> Mat2<S> {
    pub fn new(a: S, b: S, c: S, d: S) -> Self {
        Self { a, b, c, d }
    }

    pub fn identity() -> Self {
        Self::new(S::one(), S::zero(), S::zero(), S::one())
    }

    pub fn zero() -> Self {
        Self::new(S::zero(), S::zero(), S::zero(), S::zero())
    }

    pub fn diag(a: S, d: S) -> Self {
        Self::new(a, S::zero(), S::zero(), d)
    }

    /// Determinant `ad − bc`; exact under the jet rules when entries are jets.
    pub fn det(&self) -> S {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> S {
        self.a + self.d
    }

    pub fn transpose(&self) -> Self {
        Self::new(self.a, self.c, self.b, self.d)
    }

    pub fn scale(&self, s: S) -> Self {
        Self::new(self.a * s, self.b * s, self.c * s, self.d * s)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(
            self.a * rhs.a + self.b * rhs.c,
            self.a * rhs.b + self.b * rhs.d,
            self.c * rhs.a + self.d * rhs.c,
            self.c * rhs.b + self.d * rhs.d,
        )
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::new(
            self.a + rhs.a,
            self.b + rhs.b,
            self.c + rhs.c,
            self.d + rhs.d,
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::new(
            self.a - rhs.a,
            self.b - rhs.b,
            self.c - rhs.c,
            self.d - rhs.d,
        )
    }

    /// Inverse via the adjugate. Fails if the determinant's value part is
    /// numerically zero.
    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        if det.value().norm() < 1e-300 {
            return Err(Error::SingularInput);
        }
        let inv_det = det.inv();
        Ok(Self::new(
            self.d * inv_det,
            -self.b * inv_det,
            -self.c * inv_det,
            self.a * inv_det,
        ))
    }

    /// Value parts of all entries.
    pub fn value(&self) -> Mat2<Complex64> {
        Mat2::new(
            self.a.value(),
            self.b.value(),
            self.c.value(),
            self.d.value(),
        )
    }
}

impl Mat2<Complex64> {
    /// Conjugate transpose.
    pub fn conj_transpose(&self) -> Self {
        Self::new(self.a.conj(), self.c.conj(), self.b.conj(), self.d.conj())
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        (self.a.norm_sqr() + self.b.norm_sqr() + self.c.norm_sqr() + self.d.norm_sqr()).sqrt()
    }

    /// Frobenius distance to another matrix.
    pub fn dist(&self, rhs: &Self) -> f64 {
        self.sub(rhs).norm()
    }

    /// Frobenius deviation from the identity of `M · M†`.
    pub fn unitarity_defect(&self) -> f64 {
        self.mul(&self.conj_transpose()).dist(&Self::identity())
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_defect() <= tol
    }

    /// Promote all entries to constant jets.
    pub fn promote(&self) -> Mat2<ComplexJet> {
        self.promote_to::<ComplexJet>()
    }

    /// Promote all entries into any scalar type, as constants.
    pub fn promote_to<S: Scalar>(&self) -> Mat2<S> {
        Mat2::new(
            S::from_complex(self.a),
            S::from_complex(self.b),
            S::from_complex(self.c),
            S::from_complex(self.d),
        )
    }

    /// Apply to a homogeneous 2-vector.
    pub fn apply(&self, v: [Complex64; 2]) -> [Complex64; 2] {
        [
            self.a * v[0] + self.b * v[1],
            self.c * v[0] + self.d * v[1],
        ]
    }
}

impl Mat2<ComplexJet> {
    /// Derivative parts of all entries.
    pub fn der(&self) -> Mat2<Complex64> {
        Mat2::new(self.a.der, self.b.der, self.c.der, self.d.der)
    }
}

/// Gram-Schmidt (QR) factorization of an invertible 2×2 complex matrix:
/// `m = Q·R` with `Q` unitary and `R` upper triangular with positive real
/// diagonal. For unit-determinant input, `det Q = 1`.
pub fn gram_schmidt_qr(m: &Mat2<Complex64>) -> Result<(Mat2<Complex64>, Mat2<Complex64>)> {
    if m.det().norm() <= DEFAULT_TOL {
        return Err(Error::SingularInput);
    }
    let col1 = [m.a, m.c];
    let col2 = [m.b, m.d];
    let r11 = (col1[0].norm_sqr() + col1[1].norm_sqr()).sqrt();
    let q1 = [col1[0] / r11, col1[1] / r11];
    let r12 = q1[0].conj() * col2[0] + q1[1].conj() * col2[1];
    let w = [col2[0] - r12 * q1[0], col2[1] - r12 * q1[1]];
    let r22 = (w[0].norm_sqr() + w[1].norm_sqr()).sqrt();
    if r22 <= DEFAULT_TOL * r11 {
        return Err(Error::SingularInput);
    }
    let q2 = [w[0] / r22, w[1] / r22];
    let q = Mat2::new(q1[0], q2[0], q1[1], q2[1]);
    let r = Mat2::new(
        Complex64::new(r11, 0.0),
        r12,
        Complex64::new(0.0, 0.0),
        Complex64::new(r22, 0.0),
    );
    Ok((q, r))
}
