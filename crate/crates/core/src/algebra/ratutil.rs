//! Small helpers on exact rationals.

use crate::Rat;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Integer square root (floor).
pub fn isqrt(n: &BigUint) -> BigUint {
    if n.is_zero() {
        return BigUint::zero();
    }
    let bits = n.bits();
    let mut x = BigUint::one() << bits.div_ceil(2);
    loop {
        let y = (&x + n / &x) >> 1u32;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// Splits a positive integer as `n = s^2 * u` with `u` squarefree.
///
/// Trial division up to 10^6; the remaining cofactor is tested for being a
/// perfect square. Cofactors that are neither prime, semiprime nor a prime
/// square exceed 10^18 and do not arise at the parameter sizes this crate
/// works with.
pub fn squarefree_split_int(n: &BigUint) -> (BigUint, BigUint) {
    assert!(!n.is_zero(), "squarefree split of zero");
    let mut rem = n.clone();
    let mut square = BigUint::one();
    let mut free = BigUint::one();
    let mut p = BigUint::from(2u32);
    let limit = BigUint::from(1_000_000u64);
    while &p * &p <= rem && p <= limit {
        let mut e = 0u32;
        while (&rem % &p).is_zero() {
            rem /= &p;
            e += 1;
        }
        if e > 0 {
            if e % 2 == 1 {
                free *= &p;
            }
            square *= p.pow(e / 2);
        }
        p += if p == BigUint::from(2u32) { 1u32 } else { 2u32 };
    }
    if !rem.is_one() {
        let r = isqrt(&rem);
        if &r * &r == rem {
            square *= r;
        } else {
            free *= rem;
        }
    }
    (square, free)
}

/// Writes a positive rational as `r = t^2 * u` with `t` a positive rational
/// and `u` a squarefree positive integer, so that `sqrt(r) = t * sqrt(u)`.
pub fn squarefree_split(r: &Rat) -> (Rat, BigUint) {
    assert!(r.is_positive(), "squarefree split needs a positive rational");
    let p = r.numer().magnitude().clone();
    let q = r.denom().magnitude().clone();
    // sqrt(p/q) = sqrt(pq)/q
    let (s, u) = squarefree_split_int(&(&p * &q));
    let t = Rat::new(BigInt::from(s), BigInt::from(q));
    (t, u)
}

/// Exact power with integer exponent; `r` must be nonzero for negative `k`.
pub fn rat_pow(r: &Rat, k: i64) -> Rat {
    if k == 0 {
        return Rat::one();
    }
    let mag = {
        let mut acc = Rat::one();
        let mut base = r.clone();
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc *= &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    };
    if k < 0 {
        assert!(!mag.is_zero(), "negative power of zero");
        mag.recip()
    } else {
        mag
    }
}

/// Factorial as a rational.
pub fn factorial(n: u32) -> Rat {
    let mut acc = BigInt::one();
    for k in 2..=n as u64 {
        acc *= BigInt::from(k);
    }
    Rat::from_integer(acc)
}

/// Binomial coefficient `C(n, k)` for integer `n >= 0`.
pub fn binomial(n: u32, k: u32) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let mut acc = BigInt::one();
    for j in 0..k as u64 {
        acc = acc * BigInt::from(n as u64 - j) / BigInt::from(j + 1);
    }
    Rat::from_integer(acc)
}

/// Euler totient of `n`.
pub fn totient(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Prime factors (without multiplicity) of a squarefree integer.
pub fn prime_factors(n: &BigUint) -> Vec<u64> {
    let mut rem = n.clone();
    let mut out = Vec::new();
    let mut p = 2u64;
    while BigUint::from(p) * BigUint::from(p) <= rem {
        if (&rem % p).is_zero() {
            out.push(p);
            while (&rem % p).is_zero() {
                rem /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !rem.is_one() {
        out.push(rem.to_u64().expect("prime factor too large"));
    }
    out
}

/// Least common multiple of two positive integers.
pub fn lcm_u32(a: u32, b: u32) -> u32 {
    a / a.gcd(&b) * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn squarefree_small() {
        let (t, u) = squarefree_split(&rat(8, 1));
        assert_eq!(t, rat(2, 1));
        assert_eq!(u, BigUint::from(2u32));
        let (t, u) = squarefree_split(&rat(1, 2));
        assert_eq!(t, rat(1, 2));
        assert_eq!(u, BigUint::from(2u32));
        let (t, u) = squarefree_split(&rat(9, 4));
        assert_eq!(t, rat(3, 2) * rat(1, 1));
        assert_eq!(u, BigUint::from(1u32));
        // 8/3 = (2/3)^2 * 6
        let (t, u) = squarefree_split(&rat(8, 3));
        assert_eq!(t, rat(2, 3));
        assert_eq!(u, BigUint::from(6u32));
    }

    #[test]
    fn totient_table() {
        let vals = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, v) in vals.iter().enumerate() {
            assert_eq!(totient(i as u32 + 1), *v, "phi({})", i + 1);
        }
    }

    #[test]
    fn binomial_factorial() {
        assert_eq!(binomial(5, 2), rat(10, 1));
        assert_eq!(factorial(5), rat(120, 1));
        assert_eq!(binomial(3, 5), rat(0, 1));
    }
}
