//! Scalars, jets, 2×2 matrices, CP¹ lines, the spinor identification of R³
//! with su₂, and Gram-Schmidt factorization.

mod line;
mod mat2;
mod scalar;
mod spinor;

pub use line::{hermitian_projection, LineCP1};
pub use mat2::{gram_schmidt_qr, Mat2};
pub use scalar::{principal_sqrt, ComplexJet, Scalar};
pub use spinor::{r3_to_spinor, spinor_to_r3, spinor_to_r3_tol, Vec3};
