//! Arithmetic in the pure cubic field `K = Q(ω)` with `ω^3 = m`.
//!
//! Elements are kept in the power basis `r + sω + tω^2` with each coordinate
//! an independent canonical rational.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{
    cubefree_and_noncube, perfect_square_root, rational_reconstruct, Complex, IntPoly, Rat, Real,
    DEFAULT_EFFORT,
};
use crate::error::{Error, Result};

/// `Q(∛m)` for a cubefree integer `m` that is not a cube.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubicField {
    m: BigInt,
}

impl CubicField {
    pub fn new(m: impl Into<BigInt>) -> Result<Self> {
        Self::with_effort(m, DEFAULT_EFFORT)
    }

    pub fn with_effort(m: impl Into<BigInt>, effort_bound: u64) -> Result<Self> {
        let m = m.into();
        if m.is_zero() {
            return Err(Error::InvalidField(m.to_string()));
        }
        let (cubefree, cube) = cubefree_and_noncube(&m, effort_bound)?;
        if !cubefree || cube {
            return Err(Error::InvalidField(m.to_string()));
        }
        Ok(CubicField { m })
    }

    pub fn m(&self) -> &BigInt {
        &self.m
    }

    fn m_rat(&self) -> Rat {
        Rat::from_int(self.m.clone())
    }

    pub fn element(&self, r: Rat, s: Rat, t: Rat) -> CubicElement {
        CubicElement {
            field: self.clone(),
            r,
            s,
            t,
        }
    }

    pub fn rational(&self, r: Rat) -> CubicElement {
        self.element(r, Rat::zero(), Rat::zero())
    }

    pub fn one(&self) -> CubicElement {
        self.rational(Rat::one())
    }

    pub fn zero(&self) -> CubicElement {
        self.rational(Rat::zero())
    }

    pub fn omega(&self) -> CubicElement {
        self.element(Rat::zero(), Rat::one(), Rat::zero())
    }

    /// `a - bω`.
    pub fn binomial(&self, a: Rat, b: &Rat) -> CubicElement {
        self.element(a, -b, Rat::zero())
    }
}

/// Working precision for the numeric embeddings, in decimal digits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Precision {
    pub digits: u32,
}

impl Default for Precision {
    fn default() -> Self {
        Precision { digits: 256 }
    }
}

impl Precision {
    pub fn bits(&self) -> u32 {
        // log2(10) < 3.3220
        (self.digits as u64 * 33_220 / 10_000 + 1) as u32
    }
}

/// `r + sω + tω^2` in a fixed [`CubicField`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CubicElement {
    field: CubicField,
    pub r: Rat,
    pub s: Rat,
    pub t: Rat,
}

impl CubicElement {
    pub fn field(&self) -> &CubicField {
        &self.field
    }

    pub fn components(&self) -> [&Rat; 3] {
        [&self.r, &self.s, &self.t]
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero() && self.s.is_zero() && self.t.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.s.is_zero() && self.t.is_zero()
    }

    fn check_field(&self, other: &CubicElement) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.m.to_string(),
                other.field.m.to_string(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &CubicElement) -> Result<CubicElement> {
        self.check_field(other)?;
        Ok(self
            .field
            .element(&self.r + &other.r, &self.s + &other.s, &self.t + &other.t))
    }

    pub fn sub(&self, other: &CubicElement) -> Result<CubicElement> {
        self.check_field(other)?;
        Ok(self
            .field
            .element(&self.r - &other.r, &self.s - &other.s, &self.t - &other.t))
    }

    pub fn neg(&self) -> CubicElement {
        self.field.element(-&self.r, -&self.s, -&self.t)
    }

    pub fn scale(&self, c: &Rat) -> CubicElement {
        self.field.element(&self.r * c, &self.s * c, &self.t * c)
    }

    /// Ring product, reducing with `ω^3 = m`.
    pub fn mul(&self, other: &CubicElement) -> Result<CubicElement> {
        self.check_field(other)?;
        let m = self.field.m_rat();
        let (r1, s1, t1) = (&self.r, &self.s, &self.t);
        let (r2, s2, t2) = (&other.r, &other.s, &other.t);
        let r = r1 * r2 + &m * (s1 * t2 + t1 * s2);
        let s = r1 * s2 + s1 * r2 + &m * (t1 * t2);
        let t = r1 * t2 + s1 * s2 + t1 * r2;
        Ok(self.field.element(r, s, t))
    }

    pub fn square(&self) -> CubicElement {
        self.mul(self).expect("same field")
    }

    /// `N(r + sω + tω^2) = r^3 + m s^3 + m^2 t^3 - 3m rst`.
    pub fn norm(&self) -> Rat {
        let m = self.field.m_rat();
        self.r.cube() + &m * self.s.cube() + m.square() * self.t.cube()
            - Rat::from(3) * &m * &self.r * &self.s * &self.t
    }

    pub fn trace(&self) -> Rat {
        Rat::from(3) * &self.r
    }

    /// `r - sω + tω^2`.
    pub fn flip(&self) -> CubicElement {
        self.field.element(self.r.clone(), -&self.s, self.t.clone())
    }

    /// Image under `ω ↦ ∛m ∈ R`, to `bits` fractional bits.
    pub fn real_embedding(&self, bits: u32) -> Real {
        let theta = Real::from_rat(&self.field.m_rat(), bits).cbrt();
        let theta2 = theta.mul(&theta);
        Real::from_rat(&self.r, bits)
            .add(&theta.mul_rat(&self.s))
            .add(&theta2.mul_rat(&self.t))
    }

    /// Sign of the real embedding, decided by raising the precision until the
    /// value clears the rounding error.
    pub fn real_sign(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        // Rounding error is bounded by roughly (|s| + 3|t|·∛|m|) units in the
        // last place.
        let slack = self.s.numer().bits().max(self.t.numer().bits()) + self.field.m.bits() + 8;
        let mut bits = 128;
        loop {
            let v = self.real_embedding(bits);
            if v.mantissa().bits() > slack {
                return v.signum();
            }
            bits *= 2;
        }
    }

    /// `±self`, whichever has a positive real embedding.
    pub fn canonical(&self) -> CubicElement {
        if self.real_sign() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// A square root in `K`, normalized to a positive real embedding.
    ///
    /// The root is located numerically from the three embeddings of `self`,
    /// read back coordinate by coordinate with continued fractions, and then
    /// checked exactly. `Ok(None)` means no root was found and verified.
    pub fn sqrt_in_field(&self, precision: Precision) -> Result<Option<CubicElement>> {
        if self.is_zero() {
            return Ok(Some(self.clone()));
        }
        if self.is_rational() {
            // A square root of degree 2 cannot live in a cubic field.
            return Ok(perfect_square_root(&self.r).map(|r| self.field.rational(r)));
        }
        if self.real_sign() < 0 || perfect_square_root(&self.norm()).is_none() {
            return Ok(None);
        }
        let max_bits = self
            .components()
            .iter()
            .map(|c| c.height_bits())
            .max()
            .unwrap_or(0);
        let height_bits = 2 * max_bits + 64;
        let needed = 4 * height_bits + 8;
        let height_bound = BigInt::from(1u8) << height_bits;

        let attempts = [precision.bits(), precision.bits().saturating_mul(4)];
        for (i, &bits) in attempts.iter().enumerate() {
            if needed > bits as u64 {
                if i + 1 == attempts.len() {
                    return Err(Error::PrecisionExceeded {
                        needed,
                        available: bits as u64,
                    });
                }
                continue;
            }
            if let Some(root) = self.sqrt_at(bits, &height_bound) {
                return Ok(Some(root));
            }
        }
        Ok(None)
    }

    fn sqrt_at(&self, bits: u32, height_bound: &BigInt) -> Option<CubicElement> {
        let half = Rat::new(1, 2);
        let third = Rat::new(1, 3);
        let theta = Real::from_rat(&self.field.m_rat(), bits).cbrt();
        let theta2 = theta.mul(&theta);
        let root3_half = Real::from_rat(&Rat::from(3), bits).sqrt().mul_rat(&half);
        let neg_half = Real::from_rat(&-&half, bits);
        let rho = Complex::new(neg_half.clone(), root3_half.clone());
        let rho2 = Complex::new(neg_half, root3_half.neg());

        let real = self.real_embedding(bits);
        let w1 = rho.scale(&theta);
        let w1_sq = rho2.scale(&theta2);
        let conj = Complex::new(Real::from_rat(&self.r, bits), Real::zero(bits))
            .add(&w1.scale_rat(&self.s))
            .add(&w1_sq.scale_rat(&self.t));

        let g0 = real.sqrt();
        let principal = conj.sqrt();
        for g1 in [principal.clone(), principal.neg()] {
            let twice_re = |z: &Complex| z.re.add(&z.re);
            let u = g0.add(&twice_re(&g1)).mul_rat(&third);
            let v = g0
                .add(&twice_re(&rho2.mul(&g1)))
                .mul_rat(&third)
                .div(&theta);
            let w = g0
                .add(&twice_re(&rho.mul(&g1)))
                .mul_rat(&third)
                .div(&theta2);
            let coords = [u, v, w].map(|c| rational_reconstruct(&c, height_bound));
            let [Some(r), Some(s), Some(t)] = coords else {
                continue;
            };
            let candidate = self.field.element(r, s, t);
            if candidate.square() == *self {
                return Some(candidate.canonical());
            }
        }
        None
    }
}

/// Minimal polynomial of `a - bω`: `y^3 - 3a y^2 + 3a^2 y - (a^3 - m b^3)`,
/// scaled to integer coefficients.
pub fn binomial_minpoly(a: &Rat, b: &Rat, field: &CubicField) -> Result<IntPoly> {
    if b.is_zero() {
        return Err(Error::InvalidArgument(
            "b = 0 gives a rational element, not a cubic generator".into(),
        ));
    }
    let n = a.cube() - field.m_rat() * b.cube();
    Ok(IntPoly::from_rats(&[
        -n,
        Rat::from(3) * a.square(),
        Rat::from(-3) * a,
        Rat::one(),
    ]))
}

impl fmt::Display for CubicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = [(&self.r, ""), (&self.s, "ω"), (&self.t, "ω^2")];
        let mut first = true;
        for (c, basis) in terms {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            if basis.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{basis}")?;
            } else {
                write!(f, "{mag}{basis}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CubicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] (ω^3 = {})", self, self.field.m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    fn el(k: &CubicField, r: Rat, s: Rat, t: Rat) -> CubicElement {
        k.element(r, s, t)
    }

    #[test]
    fn field_validation() {
        assert!(CubicField::new(2).is_ok());
        assert!(CubicField::new(8).is_err());
        assert!(CubicField::new(16).is_err());
        assert!(CubicField::new(-47).is_ok());
        assert!(CubicField::new(11025).is_ok());
        assert!(CubicField::new(0).is_err());
    }

    #[test]
    fn introduction_squares() {
        let k = CubicField::new(2).unwrap();
        let a = el(&k, q(1, 1), q(-1, 1), q(-1, 1));
        assert_eq!(a.square(), el(&k, q(5, 1), q(0, 1), q(-1, 1)));
        let b = el(&k, q(9, 1), q(-6, 1), q(-2, 1));
        assert_eq!(b.square(), k.binomial(q(129, 1), &q(100, 1)));
        assert_eq!(a.mul(&k.one()).unwrap(), a);
    }

    #[test]
    fn field_mismatch_is_an_error() {
        let k2 = CubicField::new(2).unwrap();
        let k3 = CubicField::new(3).unwrap();
        assert!(matches!(
            k2.one().mul(&k3.one()),
            Err(Error::FieldMismatch(..))
        ));
    }

    #[test]
    fn norms_and_traces() {
        let k = CubicField::new(2).unwrap();
        assert_eq!(el(&k, q(5, 1), q(0, 1), q(-1, 1)).norm(), Rat::from(121));
        assert_eq!(k.one().norm(), Rat::one());
        assert_eq!(k.one().trace(), Rat::from(3));
        let k26 = CubicField::new(26).unwrap();
        assert_eq!(k26.binomial(q(3, 1), &q(1, 1)).norm(), Rat::one());
    }

    #[test]
    fn flip_preserves_binomial_shape() {
        let k = CubicField::new(2).unwrap();
        let a = el(&k, q(1, 1), q(-1, 1), q(-1, 1));
        let f = a.flip();
        assert_eq!(f, el(&k, q(1, 1), q(1, 1), q(-1, 1)));
        assert_eq!(f.flip(), a);
        // 1 - ω - ω^2 has 2rt + s^2 = -1, so the pattern is not expected here.
        assert_eq!(f.square().t, Rat::from(-1));
        // α_P for P = (3,5) satisfies 2rt + s^2 = 0; its flip squares to c - dω.
        let alpha = el(&k, q(-9, 10), q(3, 5), q(1, 5));
        assert!(alpha.square().t.is_zero());
        let sq = alpha.flip().square();
        assert!(sq.t.is_zero());
        assert!(!sq.s.is_zero());
        assert_eq!(k.one().flip(), k.one());
    }

    #[test]
    fn square_roots() {
        let k = CubicField::new(2).unwrap();
        let beta = el(&k, q(5, 1), q(0, 1), q(-1, 1));
        let root = beta.sqrt_in_field(Precision::default()).unwrap().unwrap();
        assert_eq!(root, el(&k, q(-1, 1), q(1, 1), q(1, 1)));
        assert_eq!(
            k.rational(q(4, 1))
                .sqrt_in_field(Precision::default())
                .unwrap(),
            Some(k.rational(q(2, 1)))
        );
        let k26 = CubicField::new(26).unwrap();
        let unit = k26.binomial(q(3, 1), &q(1, 1));
        assert_eq!(unit.sqrt_in_field(Precision::default()).unwrap(), None);
        // α_2P from the Bachet-Fermat chain, with fractional coordinates.
        let beta = k.binomial(q(2340922881, 58675600), &Rat::one());
        let root = beta.sqrt_in_field(Precision::default()).unwrap().unwrap();
        assert_eq!(root.square(), beta);
        assert_eq!(root.s.abs(), q(1290, 383));
    }

    #[test]
    fn precision_exhaustion_is_reported() {
        let k = CubicField::new(2).unwrap();
        let big = Rat::new(BigInt::from(3) << 400, BigInt::from(7));
        let alpha = el(&k, big.clone(), q(1, 3), big);
        let beta = alpha.square();
        let err = beta.sqrt_in_field(Precision { digits: 20 }).unwrap_err();
        assert!(matches!(err, Error::PrecisionExceeded { .. }));
        let root = beta
            .sqrt_in_field(Precision { digits: 2000 })
            .unwrap()
            .unwrap();
        assert_eq!(root, alpha.canonical());
    }

    #[test]
    fn minpoly_of_binomials() {
        let k = CubicField::new(2).unwrap();
        let p = binomial_minpoly(&q(129, 1), &q(100, 1), &k).unwrap();
        let c = 129i64.pow(3) - 2 * 100i64.pow(3);
        assert_eq!(p, IntPoly::from_i64(&[-c, 3 * 129 * 129, -387, 1]));
        assert!(binomial_minpoly(&q(5, 1), &Rat::zero(), &k).is_err());

        let k20 = CubicField::new(20).unwrap();
        let p = binomial_minpoly(&q(-19, 1), &q(-7, 1), &k20).unwrap();
        let c = (-19i64).pow(3) - 20 * (-7i64).pow(3);
        assert_eq!(p, IntPoly::from_i64(&[-c, 3 * 361, 57, 1]));
    }

    #[test]
    fn display() {
        let k = CubicField::new(2).unwrap();
        assert_eq!(
            el(&k, q(-9, 10), q(3, 5), q(1, 5)).to_string(),
            "-9/10 + 3/5ω + 1/5ω^2"
        );
        assert_eq!(el(&k, q(0, 1), q(-1, 1), q(0, 1)).to_string(), "-ω");
        assert_eq!(k.zero().to_string(), "0");
    }
}
