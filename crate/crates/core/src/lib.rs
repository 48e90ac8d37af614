//! Exact symbolic Fourier transforms.
//!
//! This crate implements a family of computable Fourier "doublets": pairs of
//! signal/spectral algebras joined by an exactly invertible Fourier operator.
//!
//! - [`gaussian`]: the rational Gaussian closure (modulated Gaussians
//!   `e_alpha * g_{mu,rho}`) with pointwise product, convolution, Heisenberg
//!   action and Fourier transform, all exact over the Gelfond field.
//! - [`weyl`]: the Gaussian D-module (polynomial factors adjoined) with the
//!   Weyl-algebra action, Hermite machinery and the bivariate Phi polynomials
//!   governing convolution.
//! - [`twain`]: the free Heisenberg twain algebra over one generator and its
//!   rewrite system onto the Gaussian basis.
//! - [`finite`]: exact DFT/DFS over cyclotomic fields, the character doublet
//!   and the toroidal twain algebra.
//! - [`hyperbolic`]: the hyperbolic-secant doublet with its sigma polynomials
//!   and tanh extension.
//! - [`gelfond`]: the coefficient field for everything above, an exact tower
//!   `Q(zeta_2m)(e^{pi/n})(pi)` with a formal radical part.
//! - [`oracle`]: floating-point evaluation and adaptive quadrature used to
//!   cross-check the symbolic transforms numerically.
//!
//! All values are immutable and all operations are pure functions.

pub mod bigfloat;
pub mod error;
pub mod finite;
pub mod gaussian;
pub mod gelfond;
pub mod heisenberg;
pub mod hyperbolic;
pub mod oracle;
pub mod parse;
pub mod twain;
pub mod weyl;

mod algebra;

pub use error::Error;
pub use gelfond::GelfondNumber;

/// Exact rational scalar used for all parameters (means, scales, frequencies).
pub type Rat = num_rational::BigRational;

/// Convenience constructor for small rationals.
pub fn rat(p: i64, q: i64) -> Rat {
    use num_bigint::BigInt;
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Convenience constructor for integer rationals.
pub fn rint(p: i64) -> Rat {
    rat(p, 1)
}
