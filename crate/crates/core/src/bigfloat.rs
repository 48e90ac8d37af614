//! Fixed-point decimal arithmetic on big integers, with just enough
//! elementary functions (`pi`, `exp`, `sin`/`cos`, `sqrt`) to evaluate tower
//! elements at an arbitrary digit count. Used by
//! [`crate::gelfond::GelfondNumber::eval`] and the equality-versus-numeric
//! tests; the quadrature oracle works in ordinary `f64`.

use crate::Rat;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A real number represented as `mant / 10^scale`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dec {
    pub mant: BigInt,
    pub scale: u32,
}

fn pow10(k: u32) -> BigInt {
    BigInt::from(10u32).pow(k)
}

impl Dec {
    pub fn zero(scale: u32) -> Self {
        Dec {
            mant: BigInt::zero(),
            scale,
        }
    }

    pub fn one(scale: u32) -> Self {
        Dec {
            mant: pow10(scale),
            scale,
        }
    }

    pub fn from_int(n: i64, scale: u32) -> Self {
        Dec {
            mant: BigInt::from(n) * pow10(scale),
            scale,
        }
    }

    pub fn from_rat(r: &Rat, scale: u32) -> Self {
        let mant = div_round(&(r.numer() * pow10(scale)), r.denom());
        Dec { mant, scale }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.scale, other.scale);
        Dec {
            mant: &self.mant + &other.mant,
            scale: self.scale,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.scale, other.scale);
        Dec {
            mant: &self.mant - &other.mant,
            scale: self.scale,
        }
    }

    pub fn neg(&self) -> Self {
        Dec {
            mant: -&self.mant,
            scale: self.scale,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.scale, other.scale);
        Dec {
            mant: div_round(&(&self.mant * &other.mant), &pow10(self.scale)),
            scale: self.scale,
        }
    }

    pub fn div(&self, other: &Self) -> Self {
        debug_assert_eq!(self.scale, other.scale);
        assert!(!other.mant.is_zero(), "Dec division by zero");
        Dec {
            mant: div_round(&(&self.mant * pow10(self.scale)), &other.mant),
            scale: self.scale,
        }
    }

    pub fn abs(&self) -> Self {
        Dec {
            mant: self.mant.abs(),
            scale: self.scale,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        // Split to keep precision for large magnitudes.
        let scale = pow10(self.scale);
        let (q, r) = (&self.mant / &scale, &self.mant % &scale);
        q.to_f64().unwrap_or(f64::NAN) + r.to_f64().unwrap_or(f64::NAN) / scale.to_f64().unwrap()
    }

    /// Decimal string with all stored fractional digits.
    pub fn to_decimal_string(&self) -> String {
        let neg = self.mant.is_negative();
        let m = self.mant.magnitude().to_string();
        let s = self.scale as usize;
        let padded = if m.len() <= s {
            format!("{}{}", "0".repeat(s + 1 - m.len()), m)
        } else {
            m
        };
        let (int_part, frac_part) = padded.split_at(padded.len() - s);
        let sign = if neg { "-" } else { "" };
        if s == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac_part}")
        }
    }

    /// Rounds to a smaller scale.
    pub fn round_to(&self, scale: u32) -> Self {
        assert!(scale <= self.scale);
        Dec {
            mant: div_round(&self.mant, &pow10(self.scale - scale)),
            scale,
        }
    }

    fn cmp_abs(&self, other: &Self) -> std::cmp::Ordering {
        self.mant.magnitude().cmp(other.mant.magnitude())
    }
}

fn div_round(num: &BigInt, den: &BigInt) -> BigInt {
    // Round half away from zero.
    let two: BigInt = BigInt::from(2);
    let doubled = num * &two;
    let q = &doubled / den;
    let adjusted = if (&q % &two).is_zero() {
        q.clone()
    } else if (num * den).is_negative() {
        &q - BigInt::one()
    } else {
        &q + BigInt::one()
    };
    adjusted / two
}

/// `pi` by Machin's formula at the given scale.
pub fn pi(scale: u32) -> Dec {
    let work = scale + 10;
    let a = atan_inv(5, work);
    let b = atan_inv(239, work);
    let mut v = Dec {
        mant: a.mant * 16 - b.mant * 4,
        scale: work,
    };
    v = v.round_to(scale);
    v
}

/// `atan(1/k)` via the Taylor series with integer arithmetic.
fn atan_inv(k: u64, scale: u32) -> Dec {
    let unit = pow10(scale);
    let k2 = BigInt::from(k) * BigInt::from(k);
    let mut term = &unit / BigInt::from(k);
    let mut acc = term.clone();
    let mut n = 1u64;
    while !term.is_zero() {
        term = term / &k2;
        n += 2;
        let piece = &term / BigInt::from(n);
        if ((n - 1) / 2) % 2 == 1 {
            acc -= &piece;
        } else {
            acc += &piece;
        }
        if piece.is_zero() {
            break;
        }
    }
    Dec { mant: acc, scale }
}

/// `exp(x)` via argument halving and the Taylor series.
pub fn exp(x: &Dec) -> Dec {
    let scale = x.scale;
    let work = scale + 20;
    let xw = Dec {
        mant: &x.mant * pow10(20),
        scale: work,
    };
    // Halve until |x| < 1/2.
    let half = Dec {
        mant: pow10(work) / BigInt::from(2),
        scale: work,
    };
    let mut halvings = 0u32;
    let mut arg = xw;
    while arg.cmp_abs(&half) == std::cmp::Ordering::Greater {
        arg = Dec {
            mant: &arg.mant / BigInt::from(2),
            scale: work,
        };
        halvings += 1;
        if halvings > 64 {
            break;
        }
    }
    let mut term = Dec::one(work);
    let mut acc = Dec::one(work);
    let mut n = 1u64;
    loop {
        term = term.mul(&arg);
        term = Dec {
            mant: div_round(&term.mant, &BigInt::from(n)),
            scale: work,
        };
        if term.mant.is_zero() {
            break;
        }
        acc = acc.add(&term);
        n += 1;
    }
    for _ in 0..halvings {
        acc = acc.mul(&acc);
    }
    acc.round_to(scale)
}

/// `(sin x, cos x)` via halving and double-angle recovery.
pub fn sincos(x: &Dec) -> (Dec, Dec) {
    let scale = x.scale;
    let work = scale + 20;
    let mut arg = Dec {
        mant: &x.mant * pow10(20),
        scale: work,
    };
    let half = Dec {
        mant: pow10(work) / BigInt::from(2),
        scale: work,
    };
    let mut halvings = 0u32;
    while arg.cmp_abs(&half) == std::cmp::Ordering::Greater {
        arg = Dec {
            mant: &arg.mant / BigInt::from(2),
            scale: work,
        };
        halvings += 1;
        if halvings > 64 {
            break;
        }
    }
    // Taylor series for sin and cos.
    let mut sin = arg.clone();
    let mut cos = Dec::one(work);
    let mut term = arg.clone();
    let x2 = arg.mul(&arg);
    let mut n = 1u64;
    // sin: x - x^3/3! + ...
    loop {
        term = term.mul(&x2);
        term = Dec {
            mant: div_round(&term.mant, &BigInt::from((2 * n) * (2 * n + 1))),
            scale: work,
        };
        if term.mant.is_zero() {
            break;
        }
        if n % 2 == 1 {
            sin = sin.sub(&term);
        } else {
            sin = sin.add(&term);
        }
        n += 1;
    }
    let mut term = Dec::one(work);
    let mut n = 1u64;
    loop {
        term = term.mul(&x2);
        term = Dec {
            mant: div_round(&term.mant, &BigInt::from((2 * n - 1) * (2 * n))),
            scale: work,
        };
        if term.mant.is_zero() {
            break;
        }
        if n % 2 == 1 {
            cos = cos.sub(&term);
        } else {
            cos = cos.add(&term);
        }
        n += 1;
    }
    for _ in 0..halvings {
        let s2 = sin.mul(&cos);
        let new_sin = Dec {
            mant: s2.mant * 2,
            scale: work,
        };
        let c2 = cos.mul(&cos);
        let new_cos = Dec {
            mant: c2.mant * 2 - pow10(work),
            scale: work,
        };
        sin = new_sin;
        cos = new_cos;
    }
    (sin.round_to(scale), cos.round_to(scale))
}

/// Square root of a nonnegative value by integer Newton iteration.
pub fn sqrt(x: &Dec) -> Dec {
    assert!(!x.mant.is_negative(), "sqrt of negative Dec");
    let n = &x.mant * pow10(x.scale);
    Dec {
        mant: BigInt::from(crate::algebra::ratutil::isqrt(n.magnitude())),
        scale: x.scale,
    }
}

/// Complex value in fixed-point decimals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CDec {
    pub re: Dec,
    pub im: Dec,
}

impl CDec {
    pub fn zero(scale: u32) -> Self {
        CDec {
            re: Dec::zero(scale),
            im: Dec::zero(scale),
        }
    }

    pub fn one(scale: u32) -> Self {
        CDec {
            re: Dec::one(scale),
            im: Dec::zero(scale),
        }
    }

    pub fn real(re: Dec) -> Self {
        let scale = re.scale;
        CDec {
            re,
            im: Dec::zero(scale),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        CDec {
            re: self.re.add(&other.re),
            im: self.im.add(&other.im),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        CDec {
            re: self.re.sub(&other.re),
            im: self.im.sub(&other.im),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        CDec {
            re: self.re.mul(&other.re).sub(&self.im.mul(&other.im)),
            im: self.re.mul(&other.im).add(&self.im.mul(&other.re)),
        }
    }

    pub fn div(&self, other: &Self) -> Self {
        let d = other.re.mul(&other.re).add(&other.im.mul(&other.im));
        let num = self.mul(&CDec {
            re: other.re.clone(),
            im: other.im.neg(),
        });
        CDec {
            re: num.re.div(&d),
            im: num.im.div(&d),
        }
    }

    pub fn scale_dec(&self, f: &Dec) -> Self {
        CDec {
            re: self.re.mul(f),
            im: self.im.mul(f),
        }
    }

    pub fn abs_sq(&self) -> Dec {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn to_c64(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn pi_digits() {
        let p = pi(40);
        assert!(p
            .to_decimal_string()
            .starts_with("3.141592653589793238462643383279502884197"));
    }

    #[test]
    fn exp_one() {
        let e = exp(&Dec::one(40));
        assert!(e
            .to_decimal_string()
            .starts_with("2.71828182845904523536028747135266249775"));
    }

    #[test]
    fn exp_pi_value() {
        // Gelfond's constant e^pi = 23.1406926327792690...
        let v = exp(&pi(40));
        assert!(v.to_decimal_string().starts_with("23.14069263277926900572908636794854738026"));
    }

    #[test]
    fn sincos_quarter_turn() {
        let p = pi(40);
        let half = Dec {
            mant: p.mant.clone() / 2,
            scale: 40,
        };
        let (s, c) = sincos(&half);
        assert!(s.sub(&Dec::one(40)).abs().to_f64() < 1e-38);
        assert!(c.abs().to_f64() < 1e-38);
    }

    #[test]
    fn sqrt_two() {
        let v = sqrt(&Dec::from_rat(&rat(2, 1), 40));
        assert!(v
            .to_decimal_string()
            .starts_with("1.41421356237309504880168872420969807856"));
    }

    #[test]
    fn dec_string_roundtrip() {
        let v = Dec::from_rat(&rat(-31, 8), 6);
        assert_eq!(v.to_decimal_string(), "-3.875000");
    }
}
