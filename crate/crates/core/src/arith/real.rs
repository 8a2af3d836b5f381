use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rat::Rat;

/// Binary fixed-point real: the value `mantissa / 2^bits`.
///
/// Operations between two values require equal `bits`; results are truncated
/// toward negative infinity, so each step adds at most one unit in the last
/// place of error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Real {
    mantissa: BigInt,
    bits: u32,
}

impl Real {
    pub fn from_mantissa(mantissa: BigInt, bits: u32) -> Self {
        Real { mantissa, bits }
    }

    pub fn from_rat(q: &Rat, bits: u32) -> Self {
        let scaled = q.numer() << bits;
        Real {
            mantissa: scaled.div_floor(q.denom()),
            bits,
        }
    }

    pub fn zero(bits: u32) -> Self {
        Real {
            mantissa: BigInt::zero(),
            bits,
        }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// The exact rational `mantissa / 2^bits`.
    pub fn to_rat(&self) -> Rat {
        Rat::new(self.mantissa.clone(), BigInt::one() << self.bits)
    }

    pub fn signum(&self) -> i32 {
        if self.mantissa.is_zero() {
            0
        } else if self.mantissa.is_negative() {
            -1
        } else {
            1
        }
    }

    pub fn abs(&self) -> Real {
        Real {
            mantissa: self.mantissa.abs(),
            bits: self.bits,
        }
    }

    pub fn add(&self, o: &Real) -> Real {
        debug_assert_eq!(self.bits, o.bits);
        Real {
            mantissa: &self.mantissa + &o.mantissa,
            bits: self.bits,
        }
    }

    pub fn sub(&self, o: &Real) -> Real {
        debug_assert_eq!(self.bits, o.bits);
        Real {
            mantissa: &self.mantissa - &o.mantissa,
            bits: self.bits,
        }
    }

    pub fn neg(&self) -> Real {
        Real {
            mantissa: -&self.mantissa,
            bits: self.bits,
        }
    }

    pub fn mul(&self, o: &Real) -> Real {
        debug_assert_eq!(self.bits, o.bits);
        Real {
            mantissa: (&self.mantissa * &o.mantissa) >> self.bits,
            bits: self.bits,
        }
    }

    pub fn mul_rat(&self, q: &Rat) -> Real {
        Real {
            mantissa: (&self.mantissa * q.numer()).div_floor(q.denom()),
            bits: self.bits,
        }
    }

    pub fn div(&self, o: &Real) -> Real {
        debug_assert_eq!(self.bits, o.bits);
        assert!(!o.mantissa.is_zero(), "division by zero");
        Real {
            mantissa: (&self.mantissa << self.bits).div_floor(&o.mantissa),
            bits: self.bits,
        }
    }

    /// Square root of a nonnegative value.
    pub fn sqrt(&self) -> Real {
        assert!(!self.mantissa.is_negative(), "sqrt of negative value");
        Real {
            mantissa: (&self.mantissa << self.bits).sqrt(),
            bits: self.bits,
        }
    }

    /// Real cube root (sign preserving).
    pub fn cbrt(&self) -> Real {
        Real {
            mantissa: (&self.mantissa << (2 * self.bits)).cbrt(),
            bits: self.bits,
        }
    }
}

/// Complex fixed-point value used for the non-real embeddings.
#[derive(Clone, Debug)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Self {
        Complex { re, im }
    }

    pub fn add(&self, o: &Complex) -> Complex {
        Complex::new(self.re.add(&o.re), self.im.add(&o.im))
    }

    pub fn mul(&self, o: &Complex) -> Complex {
        Complex::new(
            self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        )
    }

    pub fn scale(&self, r: &Real) -> Complex {
        Complex::new(self.re.mul(r), self.im.mul(r))
    }

    pub fn scale_rat(&self, q: &Rat) -> Complex {
        Complex::new(self.re.mul_rat(q), self.im.mul_rat(q))
    }

    pub fn neg(&self) -> Complex {
        Complex::new(self.re.neg(), self.im.neg())
    }

    /// Principal square root (nonnegative real part).
    pub fn sqrt(&self) -> Complex {
        let bits = self.re.bits();
        let modulus = self.re.mul(&self.re).add(&self.im.mul(&self.im)).sqrt();
        let half = Rat::new(1, 2);
        let clamp = |r: Real| if r.signum() < 0 { Real::zero(bits) } else { r };
        let re = clamp(modulus.add(&self.re).mul_rat(&half)).sqrt();
        let mut im = clamp(modulus.sub(&self.re).mul_rat(&half)).sqrt();
        if self.im.signum() < 0 {
            im = im.neg();
        }
        Complex::new(re, im)
    }
}

/// Best rational of height at most `height_bound` for `approx`.
///
/// Walks the continued fraction convergents of the exact value
/// `mantissa / 2^bits` and returns the first convergent with numerator and
/// denominator bounded by `height_bound` that lies within `2^(-bits/2)` of
/// the approximation. Distinct rationals of height `H` are at least `1/H^2`
/// apart, so the answer is unique whenever `H^2 < 2^(bits/2 - 1)` and the
/// approximation error is below `2^(-bits/2)`. Callers must still verify the
/// result exactly.
pub fn rational_reconstruct(approx: &Real, height_bound: &BigInt) -> Option<Rat> {
    let bits = approx.bits();
    let tol = Rat::new(1, BigInt::one() << (bits / 2));
    let target = approx.to_rat();

    let (mut p, mut q) = (approx.mantissa().clone(), BigInt::one() << bits);
    let (mut h_prev, mut h) = (BigInt::zero(), BigInt::one());
    let (mut k_prev, mut k) = (BigInt::one(), BigInt::zero());
    while !q.is_zero() {
        let (a, r) = p.div_mod_floor(&q);
        let h_next = &a * &h + &h_prev;
        let k_next = &a * &k + &k_prev;
        if h_next.abs() > *height_bound || k_next > *height_bound {
            return None;
        }
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
        let conv = Rat::new(h.clone(), k.clone());
        if (&conv - &target).abs() <= tol {
            return Some(conv);
        }
        p = std::mem::replace(&mut q, r);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    const BITS: u32 = 512;

    #[test]
    fn reconstructs_exact_half() {
        let half = Real::from_rat(&Rat::new(1, 2), BITS);
        assert_eq!(
            rational_reconstruct(&half, &BigInt::from(10)),
            Some(Rat::new(1, 2))
        );
    }

    #[test]
    fn reconstructs_after_rounding_noise() {
        let x = Real::from_rat(&Rat::new(129, 100), BITS);
        let noisy = Real::from_mantissa(x.mantissa() + 17, BITS);
        assert_eq!(
            rational_reconstruct(&noisy, &BigInt::from(1000)),
            Some(Rat::new(129, 100))
        );
        let neg = Real::from_rat(&Rat::new(-16641, 7660), BITS);
        assert_eq!(
            rational_reconstruct(&neg, &BigInt::from(100_000)),
            Some(Rat::new(-16641, 7660))
        );
    }

    #[test]
    fn pi_is_not_reconstructed() {
        let digits: BigInt = "314159265358979323846264338327950288419716939937510"
            .parse()
            .unwrap();
        let scale = num_traits::pow(BigInt::from(10), 50);
        let pi = Real::from_rat(&Rat::new(digits, scale), 160);
        assert_eq!(rational_reconstruct(&pi, &BigInt::from(10)), None);
    }

    #[test]
    fn roots_are_accurate() {
        let two = Real::from_rat(&Rat::from(2), BITS);
        let c = two.cbrt();
        let back = c.mul(&c).mul(&c);
        assert!((back.mantissa() - two.mantissa()).abs() < BigInt::from(16));
        let neg = Real::from_rat(&Rat::from(-20), BITS).cbrt();
        assert!(neg.signum() < 0);
        let s = two.sqrt();
        assert!((s.mul(&s).mantissa() - two.mantissa()).abs() < BigInt::from(16));
    }

    #[test]
    fn complex_sqrt_squares_back() {
        let z = Complex::new(
            Real::from_rat(&Rat::from(-3), BITS),
            Real::from_rat(&Rat::new(-7, 5), BITS),
        );
        let w = z.sqrt();
        let back = w.mul(&w);
        assert!((back.re.mantissa() - z.re.mantissa()).abs() < BigInt::from(64));
        assert!((back.im.mantissa() - z.im.mantissa()).abs() < BigInt::from(64));
    }
}
