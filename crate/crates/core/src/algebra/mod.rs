//! Internal exact-arithmetic building blocks: rational utilities, univariate
//! polynomials over `Q` and over cyclotomic fields, and bivariate polynomials
//! in the tower generators `eta = e^{pi/n}` and `pi`.

pub mod bipoly;
pub mod cyclotomic;
pub mod ratpoly;
pub mod ratutil;

pub use bipoly::BiPoly;
pub use cyclotomic::Cyclo;
pub use ratpoly::RatPoly;
