//! Exact univariate polynomials in q with big-integer coefficients.
//!
//! Everything downstream (Pochhammer symbols, Gaussian multinomials, the
//! rational functions carrying series coefficients) is built from this type.
//! Coefficients are dense, index i holding the coefficient of q^i, and the
//! trailing (highest-degree) zeros are always trimmed so that equality is
//! structural.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QPoly {
    /// coeffs[i] is the coefficient of q^i; empty means the zero polynomial.
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = QPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// c * q^exp
    pub fn monomial(exp: usize, c: BigInt) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c;
        QPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = QPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Number of trailing zero coefficients, i.e. the largest m with q^m
    /// dividing the polynomial. Zero polynomial reports 0.
    pub fn low_order(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }

    /// Quotient by q^m; panics if q^m does not divide the polynomial.
    pub fn shr_q(&self, m: usize) -> QPoly {
        if m == 0 {
            return self.clone();
        }
        assert!(
            self.low_order() >= m || self.is_zero(),
            "polynomial not divisible by q^{m}"
        );
        if self.is_zero() {
            return QPoly::zero();
        }
        QPoly::from_coeffs(self.coeffs[m..].to_vec())
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Greatest common divisor of all coefficients (nonnegative); zero for
    /// the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide every coefficient by d; panics on inexact division.
    pub fn div_scalar_exact(&self, d: &BigInt) -> QPoly {
        assert!(!d.is_zero(), "division by zero scalar");
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let (q, r) = c.div_rem(d);
                assert!(r.is_zero(), "inexact scalar division");
                q
            })
            .collect();
        QPoly::from_coeffs(coeffs)
    }

    /// Exact polynomial division. Returns None when the division leaves a
    /// remainder (including the case of a leading-coefficient mismatch over
    /// the integers).
    pub fn div_exact(&self, divisor: &QPoly) -> Option<QPoly> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(QPoly::zero());
        }
        let dd = divisor.degree().unwrap();
        let nd = self.degree().unwrap();
        if nd < dd {
            return None;
        }
        let dlead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let lead = rem[k + dd].clone();
            if lead.is_zero() {
                continue;
            }
            let (c, r) = lead.div_rem(&dlead);
            if !r.is_zero() {
                return None;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                let sub = dc * &c;
                rem[k + i] -= sub;
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(QPoly::from_coeffs(quot))
    }

    /// Quotient of self by (q - 1), or None if (q - 1) does not divide,
    /// i.e. the value at q = 1 is nonzero. Synthetic division.
    pub fn div_q_minus_one(&self) -> Option<QPoly> {
        if self.is_zero() {
            return Some(QPoly::zero());
        }
        if !self.eval_at_one().is_zero() {
            return None;
        }
        let n = self.coeffs.len();
        let mut quot = vec![BigInt::zero(); n - 1];
        // p(q) = (q - 1) * quot(q); process from the top coefficient down.
        let mut carry = BigInt::zero();
        for i in (1..n).rev() {
            carry += &self.coeffs[i];
            quot[i - 1] = carry.clone();
        }
        Some(QPoly::from_coeffs(quot))
    }

    fn primitive_part(&self) -> QPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        self.div_scalar_exact(&c)
    }

    /// Polynomial gcd over the integers: content gcd times the primitive
    /// gcd computed by the primitive pseudo-remainder sequence. The result
    /// has a positive leading coefficient (or is zero).
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        if self.is_zero() {
            return other.abs_leading();
        }
        if other.is_zero() {
            return self.abs_leading();
        }
        let cont = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = pseudo_rem(&a, &b).primitive_part();
            a = b;
            b = r;
        }
        let mut g = a.primitive_part();
        for c in g.coeffs.iter_mut() {
            *c *= &cont;
        }
        g.abs_leading()
    }

    fn abs_leading(&self) -> QPoly {
        match self.leading() {
            Some(l) if l.is_negative() => -self,
            _ => self.clone(),
        }
    }
}

/// Remainder of lead(b)^(deg a - deg b + 1) * a divided by b; the scaling
/// keeps every intermediate coefficient integral.
fn pseudo_rem(a: &QPoly, b: &QPoly) -> QPoly {
    let da = a.degree().expect("pseudo_rem of zero");
    let db = b.degree().expect("pseudo_rem by zero");
    debug_assert!(da >= db);
    let lead_b = b.leading().unwrap().clone();
    let mut rem = a.coeffs.clone();
    for k in (db..=da).rev() {
        let lead = rem[k].clone();
        for c in rem.iter_mut().take(k) {
            *c *= &lead_b;
        }
        for (i, bc) in b.coeffs.iter().enumerate().take(db) {
            let sub = bc * &lead;
            rem[k - db + i] -= sub;
        }
        rem[k] = BigInt::zero();
    }
    QPoly::from_coeffs(rem[..db].to_vec())
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = if first && c.is_negative() {
                // leading term keeps its own sign
                c.clone()
            } else {
                c.abs()
            };
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag.is_one() {
                        // suppress the coefficient 1 in front of q-powers
                    } else if mag == -BigInt::one() {
                        write!(f, "-")?;
                    } else {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// The q-Pochhammer symbol (q^2; q^2)_d = prod_{i=1..d} (1 - q^(2i)).
pub fn poch_q2(d: usize) -> QPoly {
    let mut acc = QPoly::one();
    for i in 1..=d {
        let factor = &QPoly::one() - &QPoly::monomial(2 * i, BigInt::one());
        acc = &acc * &factor;
    }
    acc
}

/// The Gaussian multinomial (q^2; q^2)_l / prod_i (q^2; q^2)_(d_i) for a
/// composition d of l. Computed as a product of q^2-binomials over the
/// partial sums so that every intermediate division is exact; panics if any
/// division leaves a remainder, which would signal an arithmetic bug.
pub fn gauss_multinomial(l: usize, d: &[usize]) -> QPoly {
    assert_eq!(d.iter().sum::<usize>(), l, "composition must sum to l");
    let mut acc = QPoly::one();
    let mut partial = 0usize;
    for &di in d {
        partial += di;
        if di == 0 || di == partial {
            continue;
        }
        let num = poch_q2(partial);
        let den = &poch_q2(di) * &poch_q2(partial - di);
        let binom = num
            .div_exact(&den)
            .expect("Gaussian binomial division must be exact");
        acc = &acc * &binom;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn poch_small_values() {
        assert_eq!(poch_q2(0), QPoly::one());
        assert_eq!(poch_q2(1), p(&[1, 0, -1]));
        // (1-q^2)(1-q^4) = 1 - q^2 - q^4 + q^6
        assert_eq!(poch_q2(2), p(&[1, 0, -1, 0, -1, 0, 1]));
    }

    #[test]
    fn gauss_multinomial_frozen_cases() {
        assert_eq!(gauss_multinomial(2, &[1, 1]), p(&[1, 0, 1]));
        assert_eq!(gauss_multinomial(3, &[3]), QPoly::one());
        assert_eq!(gauss_multinomial(3, &[2, 1]), p(&[1, 0, 1, 0, 1]));
    }

    #[test]
    fn gauss_multinomial_matches_definition() {
        // cross-check the partial-sum product against the defining quotient
        for l in 0..=6usize {
            for d1 in 0..=l {
                for d2 in 0..=(l - d1) {
                    let d3 = l - d1 - d2;
                    let d = [d1, d2, d3];
                    let den = &(&poch_q2(d1) * &poch_q2(d2)) * &poch_q2(d3);
                    let expected = poch_q2(l).div_exact(&den).unwrap();
                    assert_eq!(gauss_multinomial(l, &d), expected, "d = {d:?}");
                }
            }
        }
    }

    #[test]
    fn exact_division_detects_remainders() {
        let a = p(&[1, 0, 1]); // 1 + q^2
        let b = p(&[1, 1]); // 1 + q
        assert!(a.div_exact(&b).is_none());
        let c = &a * &b;
        assert_eq!(c.div_exact(&b).unwrap(), a);
    }

    #[test]
    fn q_minus_one_division() {
        // q^2 - 1 = (q - 1)(q + 1)
        assert_eq!(p(&[-1, 0, 1]).div_q_minus_one().unwrap(), p(&[1, 1]));
        assert!(p(&[1, 1]).div_q_minus_one().is_none());
        assert_eq!(QPoly::zero().div_q_minus_one().unwrap(), QPoly::zero());
    }

    #[test]
    fn gcd_with_content() {
        let a = p(&[2, 2]); // 2(1 + q)
        let b = p(&[4, 0, 4]); // 4(1 + q^2)
        assert_eq!(a.gcd(&b), p(&[2]));
        let c = &p(&[1, 1]) * &p(&[-1, 0, 1]);
        let d = &p(&[1, 1]) * &p(&[3, 7]);
        assert_eq!(c.gcd(&d), p(&[1, 1]));
    }

    #[test]
    fn gcd_normalizes_leading_sign() {
        let a = p(&[1, -1]); // 1 - q, leading coefficient negative
        let g = a.gcd(&a);
        assert!(g.leading().unwrap() > &BigInt::zero());
        assert_eq!(g, p(&[-1, 1]));
    }

    #[test]
    fn low_order_and_shift() {
        let a = p(&[0, 0, 3, 1]);
        assert_eq!(a.low_order(), 2);
        assert_eq!(a.shr_q(2), p(&[3, 1]));
    }
}
