use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Trial division runs over all candidates below this bound first.
const TRIAL_BOUND: u32 = 10_000;

/// Default number of Pollard rho iterations allowed for one factorization.
pub const DEFAULT_EFFORT: u64 = 2_000_000;

/// Miller-Rabin with these bases is deterministic for n < 3_317_044_064_679_887_385_961_981.
const MR_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
const MR_LIMIT: &str = "3317044064679887385961981";

/// Signed prime factorization with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub sign: i8,
    pub prime_powers: Vec<(BigInt, u32)>,
}

impl Factorization {
    pub fn product(&self) -> BigInt {
        let mut n = BigInt::from(self.sign);
        for (p, e) in &self.prime_powers {
            n *= num_traits::pow(p.clone(), *e as usize);
        }
        n
    }

    /// All positive divisors, unordered.
    pub fn divisors(&self) -> Vec<BigInt> {
        let mut out = vec![BigInt::one()];
        for (p, e) in &self.prime_powers {
            let current = out.len();
            let mut pk = BigInt::one();
            for _ in 0..*e {
                pk *= p;
                for i in 0..current {
                    out.push(&out[i] * &pk);
                }
            }
        }
        out
    }
}

/// Deterministic primality within the certified Miller-Rabin range.
///
/// Returns `None` when `n` passes every base but lies above the range where
/// the base set is proven; callers treat that as an uncertified cofactor.
pub fn is_prime(n: &BigInt) -> Option<bool> {
    if *n < BigInt::from(2) {
        return Some(false);
    }
    for &p in &MR_BASES {
        let p = BigInt::from(p);
        if *n == p {
            return Some(true);
        }
        if (n % &p).is_zero() {
            return Some(false);
        }
    }
    let one = BigInt::one();
    let n_minus_1 = n - &one;
    let mut d = n_minus_1.clone();
    let mut s = 0u32;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    'bases: for &a in &MR_BASES {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return Some(false);
    }
    let limit: BigInt = MR_LIMIT.parse().expect("constant parses");
    if *n < limit {
        Some(true)
    } else {
        None
    }
}

/// Exact factorization of `n`: trial division, then Brent's variant of
/// Pollard rho on the remaining cofactors.
///
/// `effort_bound` caps the total number of rho iterations. A cofactor that
/// cannot be split, or whose primality cannot be certified, is an error.
pub fn factorize(n: &BigInt, effort_bound: u64) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::InvalidArgument("cannot factor 0".into()));
    }
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut rest = n.abs();
    let mut primes: Vec<BigInt> = Vec::new();

    let mut push_trial = |rest: &mut BigInt, p: u32| {
        let bp = BigInt::from(p);
        while (&*rest % &bp).is_zero() {
            *rest /= &bp;
            primes.push(bp.clone());
        }
    };
    push_trial(&mut rest, 2);
    push_trial(&mut rest, 3);
    let mut d = 5u32;
    while d < TRIAL_BOUND {
        if BigInt::from(d) * BigInt::from(d) > rest {
            break;
        }
        push_trial(&mut rest, d);
        push_trial(&mut rest, d + 2);
        d += 6;
    }

    let mut budget = effort_bound;
    let mut stack = Vec::new();
    if !rest.is_one() {
        stack.push(rest);
    }
    while let Some(c) = stack.pop() {
        if c.is_one() {
            continue;
        }
        let small = BigInt::from(TRIAL_BOUND);
        if c < &small * &small {
            // Everything below TRIAL_BOUND was removed, so c is prime.
            primes.push(c);
            continue;
        }
        match is_prime(&c) {
            Some(true) => {
                primes.push(c);
                continue;
            }
            None => return Err(Error::EffortExceeded(c.to_string())),
            Some(false) => {}
        }
        // Rho is slow on prime powers; peel squares and cubes directly.
        let root = c.sqrt();
        if &root * &root == c {
            stack.push(root.clone());
            stack.push(root);
            continue;
        }
        if let Some(root) = exact_cbrt(&c) {
            stack.extend([root.clone(), root.clone(), root]);
            continue;
        }
        let f =
            pollard_brent(&c, &mut budget).ok_or_else(|| Error::EffortExceeded(c.to_string()))?;
        let g = &c / &f;
        stack.push(f);
        stack.push(g);
    }

    primes.sort();
    let mut prime_powers: Vec<(BigInt, u32)> = Vec::new();
    for p in primes {
        match prime_powers.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => prime_powers.push((p, 1)),
        }
    }
    Ok(Factorization { sign, prime_powers })
}

/// Finds a nontrivial factor of the odd composite `n`, spending from `budget`.
fn pollard_brent(n: &BigInt, budget: &mut u64) -> Option<BigInt> {
    let one = BigInt::one();
    for c in 1u32.. {
        let c = BigInt::from(c);
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut y = BigInt::from(2);
        let mut r: u64 = 1;
        let mut q = BigInt::one();
        let mut g = BigInt::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        const BLOCK: u64 = 128;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                let steps = BLOCK.min(r - k);
                if *budget < steps {
                    return None;
                }
                *budget -= steps;
                for _ in 0..steps {
                    y = f(&y);
                    q = (q * (&x - &y).abs()) % n;
                }
                g = q.gcd(n);
                k += steps;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                if *budget == 0 {
                    return None;
                }
                *budget -= 1;
                ys = f(&ys);
                g = (&x - &ys).abs().gcd(n);
                if g > one {
                    break;
                }
            }
        }
        if &g != n {
            return Some(g);
        }
        if c > BigInt::from(64) {
            return None;
        }
    }
    None
}

/// Flags `(is_cubefree, is_cube)` for a nonzero integer.
pub fn cubefree_and_noncube(m: &BigInt, effort_bound: u64) -> Result<(bool, bool)> {
    if m.is_zero() {
        return Err(Error::InvalidArgument("m must be nonzero".into()));
    }
    let f = factorize(m, effort_bound)?;
    let cubefree = f.prime_powers.iter().all(|(_, e)| *e < 3);
    let cube = f.prime_powers.iter().all(|(_, e)| e % 3 == 0);
    Ok((cubefree, cube))
}

/// Integer cube root when `n` is a perfect cube (sign preserved).
pub fn exact_cbrt(n: &BigInt) -> Option<BigInt> {
    let r = n.cbrt();
    (&r * &r * &r == *n).then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn trial_division_oracle(mut n: u64) -> Vec<(u64, u32)> {
        let mut out = Vec::new();
        let mut p = 2;
        while p * p <= n {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            if e > 0 {
                out.push((p, e));
            }
            p += 1;
        }
        if n > 1 {
            out.push((n, 1));
        }
        out
    }

    fn as_u64(f: &Factorization) -> Vec<(u64, u32)> {
        f.prime_powers
            .iter()
            .map(|(p, e)| (p.to_u64().unwrap(), *e))
            .collect()
    }

    #[test]
    fn small_composite() {
        let f = factorize(&BigInt::from(12), DEFAULT_EFFORT).unwrap();
        assert_eq!(as_u64(&f), vec![(2, 2), (3, 1)]);
        assert_eq!(f.sign, 1);
    }

    #[test]
    fn unit_has_empty_factorization() {
        let f = factorize(&BigInt::one(), DEFAULT_EFFORT).unwrap();
        assert!(f.prime_powers.is_empty());
        assert_eq!(f.sign, 1);
        let f = factorize(&BigInt::from(-1), DEFAULT_EFFORT).unwrap();
        assert_eq!(f.sign, -1);
        assert_eq!(f.product(), BigInt::from(-1));
    }

    #[test]
    fn matches_trial_division() {
        // 717409 is the constant term of a sextic for m = 113.
        for n in [
            717409u64,
            92717641,
            4247721,
            3404025,
            1186320249,
            999_999_999_989 * 3,
        ] {
            let f = factorize(&BigInt::from(n), DEFAULT_EFFORT).unwrap();
            assert_eq!(as_u64(&f), trial_division_oracle(n), "n = {n}");
        }
    }

    #[test]
    fn splits_large_semiprime_with_rho() {
        let p: BigInt = "1000000007".parse().unwrap();
        let q: BigInt = "998244353".parse().unwrap();
        let n = &p * &q * BigInt::from(-5);
        let f = factorize(&n, DEFAULT_EFFORT).unwrap();
        assert_eq!(f.product(), n);
        assert_eq!(f.sign, -1);
        assert_eq!(f.prime_powers.len(), 3);
    }

    #[test]
    fn effort_bound_is_enforced() {
        let p: BigInt = "1000000000039".parse().unwrap();
        let q: BigInt = "1000000000061".parse().unwrap();
        let err = factorize(&(&p * &q), 10).unwrap_err();
        assert!(matches!(err, Error::EffortExceeded(_)));
    }

    #[test]
    fn uncertified_prime_is_rejected() {
        // 2^89 - 1 is prime but above the deterministic Miller-Rabin range.
        let m89 = (BigInt::one() << 89) - 1;
        assert_eq!(is_prime(&m89), None);
        assert!(factorize(&m89, DEFAULT_EFFORT).is_err());
        let m61 = (BigInt::one() << 61) - 1;
        assert_eq!(is_prime(&m61), Some(true));
    }

    #[test]
    fn cubefree_flags() {
        let check = |m: i64| cubefree_and_noncube(&BigInt::from(m), DEFAULT_EFFORT).unwrap();
        assert_eq!(check(2), (true, false));
        assert_eq!(check(8), (false, true));
        assert_eq!(check(11025), (true, false));
        assert_eq!(check(-27), (false, true));
        assert_eq!(check(24), (false, false));
    }

    #[test]
    fn divisors_of_360() {
        let f = factorize(&BigInt::from(360), DEFAULT_EFFORT).unwrap();
        let mut d: Vec<u64> = f.divisors().iter().map(|x| x.to_u64().unwrap()).collect();
        d.sort();
        let oracle: Vec<u64> = (1..=360).filter(|k| 360 % k == 0).collect();
        assert_eq!(d, oracle);
    }
}
