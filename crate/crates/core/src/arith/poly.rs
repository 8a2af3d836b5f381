use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::factor::factorize;
use super::rat::Rat;
use crate::error::{Error, Result};

/// Univariate polynomial with integer coefficients, lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Trailing zero coefficients are dropped.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Multiplies rational coefficients by the lcm of their denominators.
    pub fn from_rats(coeffs: &[Rat]) -> Self {
        let l = Rat::common_denominator(coeffs);
        IntPoly::new(
            coeffs
                .iter()
                .map(|c| c.numer() * (&l / c.denom()))
                .collect(),
        )
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            g = -g;
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + Rat::from_int(c.clone()))
    }

    /// `den^deg · p(num/den)`, an exact integer.
    pub fn eval_homogeneous(&self, num: &BigInt, den: &BigInt) -> BigInt {
        let n = self.coeffs.len();
        let mut acc = BigInt::zero();
        let mut num_pow = BigInt::one();
        let mut den_pows = vec![BigInt::one(); n];
        for i in 1..n {
            den_pows[i] = &den_pows[i - 1] * den;
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            acc += c * &num_pow * &den_pows[n - 1 - i];
            num_pow *= num;
        }
        acc
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// Nonnegative rational square root, when `q` is a square.
pub fn perfect_square_root(q: &Rat) -> Option<Rat> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| Rat::new(n, d))
}

/// Every rational root of `p`, sorted ascending.
///
/// Powers of `x` are stripped first so the constant term is nonzero, then the
/// candidates `±d/e` with `d | constant` and `e | leading` are checked by exact
/// evaluation.
pub fn rational_roots(p: &IntPoly, effort_bound: u64) -> Result<BTreeSet<Rat>> {
    if p.is_zero() {
        return Err(Error::InvalidArgument(
            "the zero polynomial has every rational as a root".into(),
        ));
    }
    let mut roots = BTreeSet::new();
    let shift = p.coeffs.iter().take_while(|c| c.is_zero()).count();
    if shift > 0 {
        roots.insert(Rat::zero());
    }
    let q = IntPoly::new(p.coeffs[shift..].to_vec()).primitive();
    if q.degree() == Some(0) {
        return Ok(roots);
    }
    let constant = &q.coeffs[0];
    let leading = q.leading().expect("nonzero");
    let nums = factorize(constant, effort_bound)?.divisors();
    let dens = factorize(leading, effort_bound)?.divisors();
    for d in &dens {
        for n in &nums {
            if !n.gcd(d).is_one() {
                continue;
            }
            for cand in [n.clone(), -n] {
                if q.eval_homogeneous(&cand, d).is_zero() {
                    roots.insert(Rat::new(cand, d.clone()));
                }
            }
        }
    }
    Ok(roots)
}
