//! Exact integer and rational kernels.

mod factor;
mod poly;
mod rat;
mod real;

pub use factor::{
    cubefree_and_noncube, exact_cbrt, factorize, is_prime, Factorization, DEFAULT_EFFORT,
};
pub use poly::{perfect_square_root, rational_roots, IntPoly};
pub use rat::{ParseRatError, Rat};
pub use real::{rational_reconstruct, Complex, Real};
