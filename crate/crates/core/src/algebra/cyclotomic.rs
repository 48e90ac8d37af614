//! Exact arithmetic in cyclotomic fields `Q(zeta_n)` on the power basis.
//!
//! Elements are vectors over the basis `1, zeta, ..., zeta^{d-1}` with
//! `d = phi(n)`, reduced modulo the `n`-th cyclotomic polynomial. Throughout
//! the crate the order `n` is even (`n = 2m` for the field `Q(e^{i pi/m})`).

use super::ratpoly::RatPoly;
use super::ratutil::totient;
use crate::Rat;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

fn cyclo_cache() -> &'static Mutex<HashMap<u32, RatPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, RatPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `n`-th cyclotomic polynomial, computed by dividing `x^n - 1` by the
/// cyclotomic polynomials of the proper divisors of `n`.
pub fn cyclotomic_poly(n: u32) -> RatPoly {
    if let Some(p) = cyclo_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    let result = if n == 1 {
        RatPoly::new(vec![-Rat::one(), Rat::one()])
    } else {
        let mut num = RatPoly::monomial(Rat::one(), n as usize).sub(&RatPoly::one());
        for d in 1..n {
            if n % d == 0 {
                let (q, r) = num.divrem(&cyclotomic_poly(d));
                debug_assert!(r.is_zero());
                num = q;
            }
        }
        num
    };
    cyclo_cache()
        .lock()
        .unwrap()
        .insert(n, result.clone());
    result
}

/// Power-of-`zeta_n` table: `x^k mod Phi_n` for `k = 0..n`.
fn power_table(n: u32) -> Vec<Vec<Rat>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<Vec<Rat>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return t.clone();
    }
    let phi = cyclotomic_poly(n);
    let d = totient(n) as usize;
    let mut table = Vec::with_capacity(n as usize);
    let mut cur = RatPoly::one();
    for _ in 0..n {
        let mut row = vec![Rat::zero(); d];
        for (i, c) in cur.coeffs.iter().enumerate() {
            row[i] = c.clone();
        }
        table.push(row);
        cur = RatPoly::monomial(Rat::one(), 1).mul(&cur);
        let (_, r) = cur.divrem(&phi);
        cur = r;
    }
    cache.lock().unwrap().insert(n, table.clone());
    table
}

/// An element of `Q(zeta_order)` on the power basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cyclo {
    pub order: u32,
    pub c: Vec<Rat>,
}

impl Cyclo {
    pub fn degree_of(order: u32) -> usize {
        totient(order) as usize
    }

    pub fn zero(order: u32) -> Self {
        Cyclo {
            order,
            c: vec![Rat::zero(); Self::degree_of(order)],
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rat(order, Rat::one())
    }

    pub fn from_rat(order: u32, r: Rat) -> Self {
        let mut z = Self::zero(order);
        z.c[0] = r;
        z
    }

    /// `zeta_order^k` with arbitrary integer exponent.
    pub fn root(order: u32, k: i64) -> Self {
        let k = k.rem_euclid(order as i64) as u32;
        let row = &power_table(order)[k as usize];
        Cyclo {
            order,
            c: row.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// Returns the value as a rational if it lies in `Q`.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.c.iter().skip(1).all(Zero::is_zero) {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    fn from_poly(order: u32, p: &RatPoly) -> Self {
        let (_, r) = p.divrem(&cyclotomic_poly(order));
        let mut c = vec![Rat::zero(); Self::degree_of(order)];
        for (i, v) in r.coeffs.iter().enumerate() {
            c[i] = v.clone();
        }
        Cyclo { order, c }
    }

    fn to_poly(&self) -> RatPoly {
        RatPoly::new(self.c.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.order, other.order);
        Cyclo {
            order: self.order,
            c: self
                .c
                .iter()
                .zip(&other.c)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.order, other.order);
        Cyclo {
            order: self.order,
            c: self
                .c
                .iter()
                .zip(&other.c)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Cyclo {
            order: self.order,
            c: self.c.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.order, other.order);
        Self::from_poly(self.order, &self.to_poly().mul(&other.to_poly()))
    }

    pub fn scale(&self, r: &Rat) -> Self {
        Cyclo {
            order: self.order,
            c: self.c.iter().map(|a| a * r).collect(),
        }
    }

    /// Field inverse via the extended Euclidean algorithm modulo `Phi_order`.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let phi = cyclotomic_poly(self.order);
        let (g, s, _) = self.to_poly().ext_gcd(&phi);
        debug_assert_eq!(g, RatPoly::one(), "cyclotomic polynomial not coprime");
        Some(Self::from_poly(self.order, &s))
    }

    /// Embeds into `Q(zeta_target)` where `order | target`.
    pub fn embed(&self, target: u32) -> Self {
        if target == self.order {
            return self.clone();
        }
        debug_assert_eq!(target % self.order, 0);
        let step = (target / self.order) as i64;
        let mut acc = Cyclo::zero(target);
        for (k, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            acc = acc.add(&Cyclo::root(target, k as i64 * step).scale(a));
        }
        acc
    }

    /// Attempts to rewrite the element on the power basis of the subfield
    /// `Q(zeta_sub)` with `sub | order`; `None` if it does not lie there.
    pub fn descend(&self, sub: u32) -> Option<Self> {
        if sub == self.order {
            return Some(self.clone());
        }
        debug_assert_eq!(self.order % sub, 0);
        let step = (self.order / sub) as i64;
        let d = Self::degree_of(self.order);
        let d_sub = Self::degree_of(sub);
        // Columns: images of the subfield basis in the big field.
        let cols: Vec<Vec<Rat>> = (0..d_sub)
            .map(|j| Cyclo::root(self.order, j as i64 * step).c)
            .collect();
        let sol = solve_linear(&cols, &self.c, d)?;
        Some(Cyclo { order: sub, c: sol })
    }

    /// Galois automorphism `zeta -> zeta^j`; requires `gcd(j, order) = 1`.
    pub fn galois(&self, j: i64) -> Self {
        let mut acc = Cyclo::zero(self.order);
        for (k, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            acc = acc.add(&Cyclo::root(self.order, k as i64 * j).scale(a));
        }
        acc
    }
}

/// Solves `A y = b` for `A` given by columns of length `dim`; returns `None`
/// if the system is inconsistent.
pub fn solve_linear(cols: &[Vec<Rat>], b: &[Rat], dim: usize) -> Option<Vec<Rat>> {
    let ncols = cols.len();
    // Augmented row-major matrix.
    let mut m: Vec<Vec<Rat>> = (0..dim)
        .map(|i| {
            let mut row: Vec<Rat> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    let mut pivot_of_col = vec![usize::MAX; ncols];
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..dim).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].recip();
        for v in m[rank].iter_mut() {
            *v *= &inv;
        }
        for r in 0..dim {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c2 in col..=ncols {
                    let sub = &m[rank][c2] * &f;
                    m[r][c2] -= sub;
                }
            }
        }
        pivot_of_col[col] = rank;
        rank += 1;
    }
    // Inconsistent if any zero row has nonzero rhs.
    for r in rank..dim {
        if !m[r][ncols].is_zero() {
            return None;
        }
    }
    let mut y = vec![Rat::zero(); ncols];
    for (col, &pr) in pivot_of_col.iter().enumerate() {
        if pr != usize::MAX {
            y[col] = m[pr][ncols].clone();
        }
    }
    // Verify (free columns may have allowed a non-solution in degenerate setups).
    for (i, row_b) in b.iter().enumerate() {
        let mut acc = Rat::zero();
        for (c, yc) in y.iter().enumerate() {
            acc += &cols[c][i] * yc;
        }
        if &acc != row_b {
            return None;
        }
    }
    Some(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1).coeffs, vec![rat(-1, 1), rat(1, 1)]);
        assert_eq!(cyclotomic_poly(2).coeffs, vec![rat(1, 1), rat(1, 1)]);
        assert_eq!(cyclotomic_poly(4).coeffs, vec![rat(1, 1), rat(0, 1), rat(1, 1)]);
        // Phi_12 = x^4 - x^2 + 1
        assert_eq!(
            cyclotomic_poly(12).coeffs,
            vec![rat(1, 1), rat(0, 1), rat(-1, 1), rat(0, 1), rat(1, 1)]
        );
    }

    #[test]
    fn roots_of_unity() {
        // zeta_8^4 = -1
        let z = Cyclo::root(8, 4);
        assert_eq!(z.as_rat(), Some(rat(-1, 1)));
        // zeta_4 + zeta_4^3 = i + (-i) = 0
        let s = Cyclo::root(4, 1).add(&Cyclo::root(4, 3));
        assert!(s.is_zero());
    }

    #[test]
    fn inverse_roundtrip() {
        let z = Cyclo::root(12, 1).add(&Cyclo::from_rat(12, rat(2, 1)));
        let inv = z.inv().unwrap();
        assert_eq!(z.mul(&inv), Cyclo::one(12));
    }

    #[test]
    fn embed_descend() {
        let z = Cyclo::root(4, 1); // i
        let big = z.embed(12);
        assert_eq!(big.descend(4), Some(z.clone()));
        assert_eq!(big.descend(2), None); // i is not rational
        // sqrt2 = zeta_8 + zeta_8^{-1} should not be in Q(zeta_4)
        let s2 = Cyclo::root(8, 1).add(&Cyclo::root(8, -1));
        assert_eq!(s2.embed(8).descend(4), None);
        assert!(s2.descend(2).is_none());
    }

    #[test]
    fn galois_conjugation() {
        let z = Cyclo::root(6, 1);
        let conj = z.galois(-1);
        // zeta * conj(zeta) = 1 for a root of unity
        assert_eq!(z.mul(&conj), Cyclo::one(6));
    }
}
