//! Group law on Mordell curves `y^2 = x^3 + k` over the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::{exact_cbrt, perfect_square_root, rational_roots, IntPoly, Rat};
use crate::error::{Error, Result};

/// The curve `y^2 = x^3 + k` with `k` a nonzero integer.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MordellCurve {
    k: BigInt,
}

impl fmt::Display for MordellCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k.is_negative() {
            write!(f, "y^2 = x^3 - {}", -&self.k)
        } else {
            write!(f, "y^2 = x^3 + {}", self.k)
        }
    }
}

/// A rational point: the point at infinity or an affine pair.
///
/// Affine points can only be built through [`MordellCurve::point`], which
/// checks the curve equation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CurvePoint {
    coords: Option<(Rat, Rat)>,
}

impl CurvePoint {
    pub const fn infinity() -> Self {
        CurvePoint { coords: None }
    }

    pub fn is_infinity(&self) -> bool {
        self.coords.is_none()
    }

    pub fn coords(&self) -> Option<(&Rat, &Rat)> {
        self.coords.as_ref().map(|(x, y)| (x, y))
    }

    pub fn x(&self) -> Option<&Rat> {
        self.coords.as_ref().map(|(x, _)| x)
    }

    pub fn y(&self) -> Option<&Rat> {
        self.coords.as_ref().map(|(_, y)| y)
    }

    /// `(x, -y)`.
    pub fn neg(&self) -> CurvePoint {
        CurvePoint {
            coords: self.coords.as_ref().map(|(x, y)| (x.clone(), -y)),
        }
    }

    fn affine_unchecked(x: Rat, y: Rat) -> Self {
        CurvePoint {
            coords: Some((x, y)),
        }
    }
}

impl fmt::Debug for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.coords {
            None => write!(f, "inf"),
            Some((x, y)) => write!(f, "({x}, {y})"),
        }
    }
}

impl MordellCurve {
    pub fn new(k: impl Into<BigInt>) -> Result<Self> {
        let k = k.into();
        if k.is_zero() {
            return Err(Error::InvalidCurve("k = 0 gives a singular cubic".into()));
        }
        Ok(MordellCurve { k })
    }

    /// `E_m : y^2 = x^3 - m`.
    pub fn from_m(m: &BigInt) -> Result<Self> {
        MordellCurve::new(-m)
    }

    /// The twist `y^2 = x^3 - m b^3`; `m b^3` must be an integer.
    pub fn twist(m: &BigInt, b: &Rat) -> Result<Self> {
        let mb3 = Rat::from_int(m.clone()) * b.cube();
        let k = mb3.to_integer().ok_or_else(|| {
            Error::InvalidCurve(format!("m·b³ = {mb3} is not an integer (m = {m}, b = {b})"))
        })?;
        MordellCurve::new(-k)
    }

    pub fn k(&self) -> &BigInt {
        &self.k
    }

    fn k_rat(&self) -> Rat {
        Rat::from_int(self.k.clone())
    }

    /// Validated affine point.
    pub fn point(&self, x: Rat, y: Rat) -> Result<CurvePoint> {
        if y.square() != x.cube() + self.k_rat() {
            return Err(Error::InvalidPoint(format!("({x}, {y}) is not on {self}")));
        }
        Ok(CurvePoint::affine_unchecked(x, y))
    }

    pub fn on_curve(&self, p: &CurvePoint) -> bool {
        match p.coords() {
            None => true,
            Some((x, y)) => y.square() == x.cube() + self.k_rat(),
        }
    }

    /// Chord-and-tangent addition.
    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        debug_assert!(self.on_curve(p) && self.on_curve(q));
        let ((x1, y1), (x2, y2)) = match (p.coords(), q.coords()) {
            (None, _) => return q.clone(),
            (_, None) => return p.clone(),
            (Some(a), Some(b)) => (a, b),
        };
        let slope = if x1 == x2 {
            if y1 == &-y2 {
                // Covers the y = 0 self-inverse case as well.
                return CurvePoint::infinity();
            }
            Rat::from(3) * x1.square() / (Rat::from(2) * y1)
        } else {
            (y2 - y1) / (x2 - x1)
        };
        let x3 = slope.square() - x1 - x2;
        let y3 = &slope * (x1 - &x3) - y1;
        CurvePoint::affine_unchecked(x3, y3)
    }

    /// Closed-form duplication: `x(2P) = (x^4 - 8kx)/(4y^2)`,
    /// `y(2P) = (x^6 + 20kx^3 - 8k^2)/(8y^3)`.
    pub fn double(&self, p: &CurvePoint) -> CurvePoint {
        let Some((x, y)) = p.coords() else {
            return CurvePoint::infinity();
        };
        if y.is_zero() {
            return CurvePoint::infinity();
        }
        let k = self.k_rat();
        let x3 = x.cube();
        let x2 = (&x3 * x - Rat::from(8) * &k * x) / (Rat::from(4) * y.square());
        let y2 = (x3.square() + Rat::from(20) * &k * &x3 - Rat::from(8) * k.square())
            / (Rat::from(8) * y.cube());
        CurvePoint::affine_unchecked(x2, y2)
    }

    pub fn scalar_mul(&self, n: &BigInt, p: &CurvePoint) -> CurvePoint {
        let base = if n.is_negative() { p.neg() } else { p.clone() };
        let n = n.abs();
        let mut acc = CurvePoint::infinity();
        for i in (0..n.bits()).rev() {
            acc = self.double(&acc);
            if n.bit(i) {
                acc = self.add(&acc, &base);
            }
        }
        acc
    }

    /// Rational 2-torsion: `(x, 0)` with `x^3 = -k`.
    pub fn two_torsion(&self) -> Vec<CurvePoint> {
        exact_cbrt(&-&self.k)
            .map(|x| vec![CurvePoint::affine_unchecked(Rat::from_int(x), Rat::zero())])
            .unwrap_or_default()
    }

    /// Quartic whose rational roots are the x-coordinates of candidate
    /// halves of a point with x-coordinate `x`:
    /// `t^4 - 4x t^3 - 8k t - 4k x`, with denominators cleared.
    pub fn halving_quartic(&self, x: &Rat) -> IntPoly {
        let k = self.k_rat();
        IntPoly::from_rats(&[
            -(Rat::from(4) * &k * x),
            -(Rat::from(8) * &k),
            Rat::zero(),
            -(Rat::from(4) * x),
            Rat::one(),
        ])
    }

    /// Every rational `Q` with `2Q = P`, in ascending order of `x(Q)`.
    pub fn halve(&self, p: &CurvePoint, effort_bound: u64) -> Result<Vec<CurvePoint>> {
        if !self.on_curve(p) {
            return Err(Error::InvalidPoint(format!("{p} is not on the curve")));
        }
        let Some((x, _)) = p.coords() else {
            let mut out = vec![CurvePoint::infinity()];
            out.extend(self.two_torsion());
            return Ok(out);
        };
        let mut out = Vec::new();
        for x0 in rational_roots(&self.halving_quartic(x), effort_bound)? {
            let rhs = x0.cube() + self.k_rat();
            let Some(y0) = perfect_square_root(&rhs) else {
                continue;
            };
            for y in [y0.clone(), -&y0] {
                let q = CurvePoint::affine_unchecked(x0.clone(), y);
                if self.double(&q) == *p && !out.contains(&q) {
                    out.push(q);
                }
            }
        }
        Ok(out)
    }

    /// Affine points with `x = a/e^2` in lowest terms for `1 <= e <= e_bound`
    /// and `|a| <= a_bound`, ordered by `e`, then `a`, then `y`.
    pub fn search_points(&self, e_bound: u64, a_bound: u64) -> Vec<CurvePoint> {
        let mut out = Vec::new();
        let a_bound = a_bound as i64;
        for e in 1..=e_bound {
            let e_big = BigInt::from(e);
            let e3 = &e_big * &e_big * &e_big;
            let k_e6 = &self.k * &e3 * &e3;
            let e2 = &e_big * &e_big;
            for a in -a_bound..=a_bound {
                if a.unsigned_abs().gcd(&e) != 1 {
                    continue;
                }
                let a_big = BigInt::from(a);
                let rhs = &a_big * &a_big * &a_big + &k_e6;
                if rhs.is_negative() {
                    continue;
                }
                let s = rhs.sqrt();
                if &s * &s != rhs {
                    continue;
                }
                let x = Rat::new(a_big, e2.clone());
                let y = Rat::new(s, e3.clone());
                if y.is_zero() {
                    out.push(CurvePoint::affine_unchecked(x, y));
                } else {
                    out.push(CurvePoint::affine_unchecked(x.clone(), -&y));
                    out.push(CurvePoint::affine_unchecked(x, y));
                }
            }
        }
        out
    }
}

/// Writes a rational `x` with square denominator as `a / e^2`, `e > 0`.
pub fn split_square_denominator(x: &Rat) -> Option<(BigInt, BigInt)> {
    let e = x.denom().sqrt();
    (&e * &e == *x.denom()).then(|| (x.numer().clone(), e))
}
