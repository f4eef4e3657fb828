//! Rational functions in q, kept fully reduced at all times.
//!
//! The representation is a pair of integer polynomials with three
//! normalization rules: the denominator is never zero, numerator and
//! denominator share no polynomial factor (integer content included), and
//! the denominator's leading coefficient is positive. Reduction after every
//! operation keeps the intermediate objects small; the series recursion
//! cancels enormous Pochhammer products that would otherwise accumulate.

use crate::error::{Error, Result};
use crate::qpoly::QPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct QRat {
    num: QPoly,
    den: QPoly,
}

impl QRat {
    pub fn zero() -> Self {
        QRat {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        QRat {
            num: QPoly::one(),
            den: QPoly::one(),
        }
    }

    pub fn from_poly(p: QPoly) -> Self {
        QRat {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn from_parts(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = QRat { num, den };
        r.reduce();
        r
    }

    /// q^e, with negative e producing 1/q^(-e).
    pub fn q_power(e: i64) -> Self {
        if e >= 0 {
            QRat::from_poly(QPoly::monomial(e as usize, BigInt::one()))
        } else {
            QRat {
                num: QPoly::one(),
                den: QPoly::monomial((-e) as usize, BigInt::one()),
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QPoly {
        &self.den
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = QPoly::one();
            return;
        }
        // cheap passes first: common q-power, then integer content
        let m = self.num.low_order().min(self.den.low_order());
        if m > 0 {
            self.num = self.num.shr_q(m);
            self.den = self.den.shr_q(m);
        }
        let c = self.num.content().gcd(&self.den.content());
        if !c.is_one() {
            self.num = self.num.div_scalar_exact(&c);
            self.den = self.den.div_scalar_exact(&c);
        }
        let g = self.num.gcd(&self.den);
        if !g.is_one() {
            self.num = self.num.div_exact(&g).expect("gcd divides numerator");
            self.den = self.den.div_exact(&g).expect("gcd divides denominator");
        }
        if self.den.leading().is_some_and(|l| l.is_negative()) {
            self.num = -&self.num;
            self.den = -&self.den;
        }
    }

    pub fn scale_poly(&self, p: &QPoly) -> QRat {
        QRat::from_parts(&self.num * p, self.den.clone())
    }

    /// Value at q = 1. The reduced form makes pole detection immediate: a
    /// denominator vanishing at 1 cannot share the factor with the
    /// numerator. `order` only labels the error.
    pub fn eval_limit_q1(&self, order: usize) -> Result<BigInt> {
        let dv = self.den.eval_at_one();
        if dv.is_zero() {
            return Err(Error::PoleAtQOne { order });
        }
        let nv = self.num.eval_at_one();
        let (q, r) = nv.div_rem(&dv);
        if !r.is_zero() {
            return Err(Error::NonIntegerLimit { order });
        }
        Ok(q)
    }

    /// Laurent-polynomial view: Some((lowest exponent, coefficients)) when
    /// the denominator is a pure power of q and the leading integer divides
    /// every numerator coefficient; None otherwise. The zero function
    /// reports (0, []).
    pub fn to_laurent(&self) -> Option<(i64, Vec<BigInt>)> {
        if self.num.is_zero() {
            return Some((0, Vec::new()));
        }
        let dd = self.den.degree().unwrap();
        if self.den.low_order() != dd {
            return None; // more than one monomial survives in the denominator
        }
        let c = self.den.coeff(dd);
        let mut coeffs = Vec::with_capacity(self.num.coeffs().len());
        for v in self.num.coeffs() {
            let (q, r) = v.div_rem(&c);
            if !r.is_zero() {
                return None;
            }
            coeffs.push(q);
        }
        while coeffs.last().is_some_and(|v| v.is_zero()) {
            coeffs.pop();
        }
        let low = coeffs.iter().position(|v| !v.is_zero()).unwrap_or(0);
        let shifted: Vec<BigInt> = coeffs[low..].to_vec();
        Some((low as i64 - dd as i64, shifted))
    }
}

impl Add for &QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        QRat::from_parts(num, den)
    }
}

impl Sub for &QRat {
    type Output = QRat;
    fn sub(self, rhs: &QRat) -> QRat {
        self + &(-rhs)
    }
}

impl Mul for &QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        if self.is_zero() || rhs.is_zero() {
            return QRat::zero();
        }
        QRat::from_parts(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Debug for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
