//! Scalars for frame algebra: plain complex numbers and first-order
//! λ-jets that propagate ∂/∂λ exactly through every operation.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::{Error, Result};

/// Common interface of the two scalar types the frame formulas are written
/// over: `Complex64` (plain evaluation) and [`ComplexJet`] (value plus exact
/// first λ-derivative). Conjugation is deliberately absent; the frame
/// formulas only ever conjugate constants, which stay `Complex64`.
pub trait Scalar:
    Copy
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_complex(c: Complex64) -> Self;

    /// The underlying value, with any derivative part dropped.
    fn value(&self) -> Complex64;

    /// Multiplicative inverse, jet rule `(1/a)' = -a'/a²`.
    fn inv(self) -> Self;

    /// Principal square root (branch cut on the negative real axis,
    /// `sqrt(1) = 1`), jet rule `(√a)' = a'/(2√a)`.
    fn sqrt(self) -> Self;

    fn sin(self) -> Self;
    fn cos(self) -> Self;

    fn from_real(x: f64) -> Self {
        Self::from_complex(Complex64::new(x, 0.0))
    }
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_complex(c: Complex64) -> Self {
        c
    }
    fn value(&self) -> Complex64 {
        *self
    }
    fn inv(self) -> Self {
        1.0 / self
    }
    fn sqrt(self) -> Self {
        Complex64::sqrt(self)
    }
    fn sin(self) -> Self {
        Complex64::sin(self)
    }
    fn cos(self) -> Self {
        Complex64::cos(self)
    }
}

/// A complex value paired with its first derivative with respect to the
/// spectral parameter λ. Arithmetic follows the exact jet rules, so a
/// computation run on `ComplexJet::variable(λ₀)` yields both `F(λ₀)` and
/// `F'(λ₀)` with no finite-difference error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexJet {
    pub val: Complex64,
    pub der: Complex64,
}

impl ComplexJet {
    pub fn new(val: Complex64, der: Complex64) -> Self {
        Self { val, der }
    }

    /// Promote a constant: derivative zero.
    pub fn constant(val: Complex64) -> Self {
        Self {
            val,
            der: Complex64::new(0.0, 0.0),
        }
    }

    /// Promote the variable λ itself: derivative one.
    pub fn variable(val: Complex64) -> Self {
        Self {
            val,
            der: Complex64::new(1.0, 0.0),
        }
    }
}

impl Add for ComplexJet {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.val + rhs.val, self.der + rhs.der)
    }
}

impl Sub for ComplexJet {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.val - rhs.val, self.der - rhs.der)
    }
}

impl Mul for ComplexJet {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.val * rhs.val,
            self.der * rhs.val + self.val * rhs.der,
        )
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for ComplexJet {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv()
    }
}

impl Neg for ComplexJet {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.val, -self.der)
    }
}

impl Scalar for ComplexJet {
    fn zero() -> Self {
        Self::constant(Complex64::new(0.0, 0.0))
    }
    fn one() -> Self {
        Self::constant(Complex64::new(1.0, 0.0))
    }
    fn from_complex(c: Complex64) -> Self {
        Self::constant(c)
    }
    fn value(&self) -> Complex64 {
        self.val
    }
    fn inv(self) -> Self {
        let iv = 1.0 / self.val;
        Self::new(iv, -self.der * iv * iv)
    }
    fn sqrt(self) -> Self {
        let s = self.val.sqrt();
        Self::new(s, self.der / (2.0 * s))
    }
    fn sin(self) -> Self {
        Self::new(self.val.sin(), self.der * self.val.cos())
    }
    fn cos(self) -> Self {
        Self::new(self.val.cos(), -self.der * self.val.sin())
    }
}

/// Principal branch square root with a zero-argument guard.
pub fn principal_sqrt<S: Scalar>(a: S) -> Result<S> {
    if a.value().norm() == 0.0 {
        return Err(Error::ZeroArgument);
    }
    Ok(a.sqrt())
}
