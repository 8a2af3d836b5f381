//! Binomial squares `a - bω` in pure cubic fields `Q(∛m)` and the rational
//! points of the Mordell curves `y^2 = x^3 - m b^3` they correspond to.
//!
//! * [`arith`]: exact integer and rational kernels.
//! * [`mordell`]: group law, halving and point search on `y^2 = x^3 + k`.
//! * [`purecubic`]: arithmetic in `Q(ω)`, `ω^3 = m`.
//! * [`binsq`]: the point/element correspondence and the induced group law.
//! * [`classfield`]: elements `a - b e^2 ω` attached to points and the sextic
//!   polynomials of the quadratic extensions they generate.

pub mod arith;
pub mod binsq;
pub mod classfield;
pub mod error;
pub mod mordell;
pub mod purecubic;

pub use arith::{IntPoly, Rat};
pub use error::{Error, Result};
pub use mordell::{CurvePoint, MordellCurve};
pub use purecubic::{CubicElement, CubicField};
