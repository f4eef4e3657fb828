//! Laurent polynomials in the variable a whose coefficients are rational
//! functions of q. Sparse map keyed by the a-exponent; entries that reduce
//! to zero are removed immediately, so an empty map is the zero element and
//! the support is always exact.

use crate::qrat::QRat;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct ALaurent {
    terms: BTreeMap<i64, QRat>,
}

impl ALaurent {
    pub fn zero() -> Self {
        ALaurent::default()
    }

    pub fn one() -> Self {
        ALaurent::monomial(0, QRat::one())
    }

    pub fn monomial(a_exp: i64, coeff: QRat) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(a_exp, coeff);
        }
        ALaurent { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a_exp: i64) -> QRat {
        self.terms.get(&a_exp).cloned().unwrap_or_else(QRat::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &QRat)> {
        self.terms.iter()
    }

    pub fn min_a_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_a_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn insert_add(&mut self, a_exp: i64, coeff: QRat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&a_exp) {
            None => {
                self.terms.insert(a_exp, coeff);
            }
            Some(old) => {
                let sum = &old + &coeff;
                if !sum.is_zero() {
                    self.terms.insert(a_exp, sum);
                }
            }
        }
    }

    pub fn scale(&self, c: &QRat) -> ALaurent {
        if c.is_zero() {
            return ALaurent::zero();
        }
        let mut out = ALaurent::zero();
        for (&e, v) in &self.terms {
            out.insert_add(e, v * c);
        }
        out
    }

    /// Projection onto the a^0 slot.
    pub fn a0_part(&self) -> QRat {
        self.coeff(0)
    }
}

impl Add for &ALaurent {
    type Output = ALaurent;
    fn add(self, rhs: &ALaurent) -> ALaurent {
        let mut out = self.clone();
        for (&e, v) in &rhs.terms {
            out.insert_add(e, v.clone());
        }
        out
    }
}

impl Sub for &ALaurent {
    type Output = ALaurent;
    fn sub(self, rhs: &ALaurent) -> ALaurent {
        self + &(-rhs)
    }
}

impl Mul for &ALaurent {
    type Output = ALaurent;
    fn mul(self, rhs: &ALaurent) -> ALaurent {
        let mut out = ALaurent::zero();
        for (&e1, v1) in &self.terms {
            for (&e2, v2) in &rhs.terms {
                out.insert_add(e1 + e2, v1 * v2);
            }
        }
        out
    }
}

impl Neg for &ALaurent {
    type Output = ALaurent;
    fn neg(self) -> ALaurent {
        ALaurent {
            terms: self.terms.iter().map(|(&e, v)| (e, -v)).collect(),
        }
    }
}

impl fmt::Debug for ALaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, v) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "[{v}]")?,
                _ => write!(f, "a^{e}*[{v}]")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::QPoly;
    use num_bigint::BigInt;

    #[test]
    fn zero_terms_are_dropped() {
        let mut x = ALaurent::monomial(2, QRat::one());
        x.insert_add(2, -&QRat::one());
        assert!(x.is_zero());
        assert!(x.min_a_exp().is_none());
    }

    #[test]
    fn multiplication_adds_exponents() {
        let a = ALaurent::monomial(-1, QRat::q_power(3));
        let b = ALaurent::monomial(4, QRat::q_power(-1));
        let p = &a * &b;
        assert_eq!(p.min_a_exp(), Some(3));
        assert_eq!(p.coeff(3), QRat::q_power(2));
    }

    #[test]
    fn a0_projection() {
        let mut x = ALaurent::monomial(0, QRat::from_poly(QPoly::constant(BigInt::from(7))));
        x.insert_add(2, QRat::one());
        assert_eq!(
            x.a0_part(),
            QRat::from_poly(QPoly::constant(BigInt::from(7)))
        );
    }
}
