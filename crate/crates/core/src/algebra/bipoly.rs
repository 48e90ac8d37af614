//! Bivariate polynomials in the tower generators: `eta = e^{pi/n}` (outer
//! variable) and `pi` (inner variable), with cyclotomic coefficients.
//!
//! The fraction-field reduction in [`crate::gelfond`] needs gcds here; they
//! are computed by the primitive polynomial remainder sequence over
//! `K[pi][eta]`, with content gcds delegated to the Euclidean algorithm in
//! `K[pi]`.

use super::cyclotomic::Cyclo;
use crate::Rat;
use num_traits::Zero;

/// Univariate polynomial in `pi` over a cyclotomic field (dense, trimmed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiPoly {
    pub coeffs: Vec<Cyclo>,
}

impl PiPoly {
    pub fn new(mut coeffs: Vec<Cyclo>) -> Self {
        while coeffs.last().is_some_and(Cyclo::is_zero) {
            coeffs.pop();
        }
        PiPoly { coeffs }
    }

    pub fn zero() -> Self {
        PiPoly { coeffs: vec![] }
    }

    pub fn constant(c: Cyclo) -> Self {
        PiPoly::new(vec![c])
    }

    pub fn one(order: u32) -> Self {
        PiPoly::constant(Cyclo::one(order))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize, order: u32) -> Cyclo {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| Cyclo::zero(order))
    }

    pub fn leading(&self) -> Option<&Cyclo> {
        self.coeffs.last()
    }

    fn order(&self) -> Option<u32> {
        self.coeffs.first().map(|c| c.order)
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let order = self.order().unwrap();
        let n = self.coeffs.len().max(other.coeffs.len());
        PiPoly::new(
            (0..n)
                .map(|i| self.coeff(i, order).add(&other.coeff(i, order)))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        PiPoly {
            coeffs: self.coeffs.iter().map(Cyclo::neg).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return PiPoly::zero();
        }
        let order = self.order().unwrap();
        let mut out = vec![Cyclo::zero(order); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        PiPoly::new(out)
    }

    pub fn mul_cyclo(&self, c: &Cyclo) -> Self {
        if c.is_zero() {
            return PiPoly::zero();
        }
        PiPoly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Euclidean division over the cyclotomic coefficient field.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "PiPoly division by zero");
        let order = divisor.order().unwrap();
        let dd = divisor.degree().unwrap();
        let lead_inv = divisor.leading().unwrap().inv().unwrap();
        let mut rem: Vec<Cyclo> = self.coeffs.clone();
        if rem.len() <= dd {
            return (PiPoly::zero(), self.clone());
        }
        let mut quo = vec![Cyclo::zero(order); rem.len() - dd];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let q = rem.last().unwrap().mul(&lead_inv);
            if !q.is_zero() {
                for (i, b) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] = rem[k + i].sub(&q.mul(b));
                }
                quo[k] = q;
            }
            rem.pop();
            while rem.last().is_some_and(Cyclo::is_zero) && rem.len() > dd {
                rem.pop();
            }
        }
        (PiPoly::new(quo), PiPoly::new(rem))
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        if let Some(l) = a.leading() {
            let inv = l.inv().unwrap();
            a.mul_cyclo(&inv)
        } else {
            a
        }
    }

    /// Exact division; panics if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.divrem(divisor);
        assert!(r.is_zero(), "inexact PiPoly division");
        q
    }

    pub fn map_cyclo(&self, f: impl Fn(&Cyclo) -> Cyclo) -> Self {
        PiPoly::new(self.coeffs.iter().map(f).collect())
    }
}

/// Polynomial in `eta` with `PiPoly` coefficients (dense in `eta`, trimmed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly {
    pub coeffs: Vec<PiPoly>,
}

impl BiPoly {
    pub fn new(mut coeffs: Vec<PiPoly>) -> Self {
        while coeffs.last().is_some_and(PiPoly::is_zero) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    pub fn zero() -> Self {
        BiPoly { coeffs: vec![] }
    }

    pub fn one(order: u32) -> Self {
        BiPoly::new(vec![PiPoly::one(order)])
    }

    pub fn constant(p: PiPoly) -> Self {
        BiPoly::new(vec![p])
    }

    pub fn from_rat(order: u32, r: Rat) -> Self {
        if r.is_zero() {
            return BiPoly::zero();
        }
        BiPoly::new(vec![PiPoly::constant(Cyclo::from_rat(order, r))])
    }

    /// `c * eta^e * pi^p`.
    pub fn monomial(c: Cyclo, eta_exp: usize, pi_exp: usize) -> Self {
        if c.is_zero() {
            return BiPoly::zero();
        }
        let order = c.order;
        let mut pp = vec![Cyclo::zero(order); pi_exp + 1];
        pp[pi_exp] = c;
        let mut coeffs = vec![PiPoly::zero(); eta_exp];
        coeffs.push(PiPoly::new(pp));
        BiPoly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eta_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> PiPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(PiPoly::zero)
    }

    pub fn leading(&self) -> Option<&PiPoly> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        BiPoly::new((0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect())
    }

    pub fn neg(&self) -> Self {
        BiPoly {
            coeffs: self.coeffs.iter().map(PiPoly::neg).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return BiPoly::zero();
        }
        let mut out = vec![PiPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        BiPoly::new(out)
    }

    pub fn mul_pipoly(&self, p: &PiPoly) -> Self {
        if p.is_zero() {
            return BiPoly::zero();
        }
        BiPoly::new(self.coeffs.iter().map(|a| a.mul(p)).collect())
    }

    pub fn mul_cyclo(&self, c: &Cyclo) -> Self {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly::new(self.coeffs.iter().map(|a| a.mul_cyclo(c)).collect())
    }

    pub fn mul_rat(&self, r: &Rat, order: u32) -> Self {
        self.mul_cyclo(&Cyclo::from_rat(order, r.clone()))
    }

    /// Multiplies by `eta^k`.
    pub fn shift_eta(&self, k: usize) -> Self {
        if self.is_zero() {
            return BiPoly::zero();
        }
        let mut coeffs = vec![PiPoly::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        BiPoly::new(coeffs)
    }

    /// Content with respect to `pi`: monic gcd of the `eta`-coefficients.
    pub fn content(&self) -> PiPoly {
        let mut g = PiPoly::zero();
        for c in &self.coeffs {
            if !c.is_zero() {
                g = if g.is_zero() {
                    let inv = c.leading().unwrap().inv().unwrap();
                    c.mul_cyclo(&inv)
                } else {
                    g.gcd(c)
                };
                if g.degree() == Some(0) {
                    break;
                }
            }
        }
        g
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return BiPoly::zero();
        }
        let c = self.content();
        BiPoly::new(self.coeffs.iter().map(|a| {
            if a.is_zero() {
                PiPoly::zero()
            } else {
                a.exact_div(&c)
            }
        }).collect())
    }

    /// Pseudo-remainder of `self` by `divisor` with respect to `eta`.
    fn pseudo_rem(&self, divisor: &Self) -> Self {
        let db = divisor.eta_degree().unwrap();
        let lb = divisor.leading().unwrap().clone();
        let mut rem = self.clone();
        while let Some(dr) = rem.eta_degree() {
            if dr < db {
                break;
            }
            let lr = rem.leading().unwrap().clone();
            // lb*rem - lr*eta^{dr-db}*divisor kills the leading term.
            rem = rem
                .mul_pipoly(&lb)
                .sub(&divisor.shift_eta(dr - db).mul_pipoly(&lr));
        }
        rem
    }

    /// Gcd in `K[pi][eta]` (primitive PRS), normalized to have monic leading
    /// `PiPoly` coefficient and monic content.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalized_for_gcd();
        }
        if other.is_zero() {
            return self.normalized_for_gcd();
        }
        let content_gcd = self.content().gcd(&other.content());
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.eta_degree() < b.eta_degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = std::mem::replace(&mut b, r);
        }
        a.normalized_for_gcd().mul_pipoly(&content_gcd)
    }

    fn normalized_for_gcd(&self) -> Self {
        match self.leading() {
            None => BiPoly::zero(),
            Some(l) => {
                let linv = l.leading().unwrap().inv().unwrap();
                // Make the lex-leading (eta, then pi) coefficient one.
                self.mul_cyclo(&linv)
            }
        }
    }

    /// Exact division; panics if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        assert!(!divisor.is_zero(), "BiPoly division by zero");
        if self.is_zero() {
            return BiPoly::zero();
        }
        let db = divisor.eta_degree().unwrap();
        let lb = divisor.leading().unwrap();
        let mut rem = self.clone();
        let dq = self
            .eta_degree()
            .unwrap()
            .checked_sub(db)
            .expect("inexact BiPoly division (degree)");
        let mut quo = vec![PiPoly::zero(); dq + 1];
        while let Some(dr) = rem.eta_degree() {
            if dr < db {
                break;
            }
            let q = rem.leading().unwrap().exact_div(lb);
            rem = rem.sub(&divisor.shift_eta(dr - db).mul_pipoly(&q));
            debug_assert!(rem.eta_degree().map_or(true, |d| d < dr));
            quo[dr - db] = q;
        }
        assert!(rem.is_zero(), "inexact BiPoly division (remainder)");
        BiPoly::new(quo)
    }

    /// Rescales `eta` exponents by an integer factor (tower promotion).
    pub fn stretch_eta(&self, k: usize) -> Self {
        if self.is_zero() || k == 1 {
            return self.clone();
        }
        let mut coeffs = vec![PiPoly::zero(); self.coeffs.len().saturating_sub(1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[i * k] = c.clone();
            }
        }
        BiPoly::new(coeffs)
    }

    /// Divides all `eta` exponents by `k`; requires every exponent with a
    /// nonzero coefficient to be a multiple of `k`.
    pub fn compress_eta(&self, k: usize) -> Self {
        if k == 1 || self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![PiPoly::zero(); (self.coeffs.len() - 1) / k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                debug_assert_eq!(i % k, 0);
                coeffs[i / k] = c.clone();
            }
        }
        BiPoly::new(coeffs)
    }

    pub fn map_cyclo(&self, f: impl Fn(&Cyclo) -> Cyclo) -> Self {
        BiPoly::new(self.coeffs.iter().map(|p| p.map_cyclo(&f)).collect())
    }

    /// Gcd of all `eta` exponents carrying nonzero coefficients.
    pub fn eta_exponent_gcd(&self) -> Option<usize> {
        let mut g: Option<usize> = None;
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                g = Some(match g {
                    None => i,
                    Some(x) => num_integer::gcd(x, i),
                });
            }
        }
        g
    }

    /// Iterates over all cyclotomic coefficients.
    pub fn cyclo_coeffs(&self) -> impl Iterator<Item = &Cyclo> {
        self.coeffs.iter().flat_map(|p| p.coeffs.iter())
    }

    pub fn max_pi_degree(&self) -> usize {
        self.coeffs
            .iter()
            .filter_map(|p| p.degree())
            .max()
            .unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn c(r: i64, order: u32) -> Cyclo {
        Cyclo::from_rat(order, rat(r, 1))
    }

    // eta^2 - 1 over Q(zeta_2)
    fn eta2_minus_1() -> BiPoly {
        BiPoly::monomial(c(1, 2), 2, 0).sub(&BiPoly::one(2))
    }

    #[test]
    fn gcd_eta_factor() {
        // gcd(eta^2 - 1, eta - 1) = eta - 1
        let a = eta2_minus_1();
        let b = BiPoly::monomial(c(1, 2), 1, 0).sub(&BiPoly::one(2));
        let g = a.gcd(&b);
        assert_eq!(g, b);
        let q = a.exact_div(&g);
        // q = eta + 1
        let expect = BiPoly::monomial(c(1, 2), 1, 0).add(&BiPoly::one(2));
        assert_eq!(q, expect);
    }

    #[test]
    fn gcd_mixed_pi_eta() {
        // (eta + pi) * (eta*pi + 1) vs (eta + pi) * (eta - 2)
        let f1 = BiPoly::monomial(c(1, 2), 1, 0).add(&BiPoly::monomial(c(1, 2), 0, 1));
        let f2 = BiPoly::monomial(c(1, 2), 1, 1).add(&BiPoly::one(2));
        let f3 = BiPoly::monomial(c(1, 2), 1, 0).sub(&BiPoly::from_rat(2, rat(2, 1)));
        let a = f1.mul(&f2);
        let b = f1.mul(&f3);
        let g = a.gcd(&b);
        // Normalized gcd should equal f1 (unit leading coefficient).
        assert_eq!(g, f1);
        assert_eq!(a.exact_div(&g), f2);
        assert_eq!(b.exact_div(&g), f3);
    }

    #[test]
    fn content_extraction() {
        // pi * (eta + 1): content = pi (monic)
        let f = BiPoly::monomial(c(1, 2), 1, 1).add(&BiPoly::monomial(c(1, 2), 0, 1));
        let ct = f.content();
        assert_eq!(ct.degree(), Some(1));
        let pp = f.primitive_part();
        assert_eq!(pp, BiPoly::monomial(c(1, 2), 1, 0).add(&BiPoly::one(2)));
    }
}
