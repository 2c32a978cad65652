//! Finite formal sums sum_k r_k pi^k with rational r_k.
//!
//! pi is transcendental, so two such sums are equal iff their coefficient
//! maps are equal; the whole exact layer leans on that. Multiplication adds
//! exponents, division by pi^k is only defined when every term carries at
//! least pi^k.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Integer};

use crate::bernoulli::{euler_number, zeta_even_over_pi};
use crate::rational::{factorial, int_pow, rat_pow, rint, Rat};
use crate::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PiPoly {
    terms: BTreeMap<u32, Rat>,
}

impl PiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rat(rint(1))
    }

    pub fn from_rat(r: Rat) -> Self {
        let mut p = Self::default();
        if r != 0 {
            p.terms.insert(0, r);
        }
        p
    }

    /// r * pi^k as a single term.
    pub fn pi_pow(k: u32, r: Rat) -> Self {
        let mut p = Self::default();
        if r != 0 {
            p.terms.insert(k, r);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: u32) -> Rat {
        self.terms.get(&k).cloned().unwrap_or_else(|| rint(0))
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rat)> {
        self.terms.iter().map(|(k, r)| (*k, r))
    }

    /// The value as a plain rational; errors if any pi^k with k > 0 survives.
    pub fn into_rational(self) -> Result<Rat> {
        match self.degree() {
            None => Ok(rint(0)),
            Some(0) => Ok(self.terms.into_values().next().unwrap()),
            Some(d) => Err(Error::PiDegree(format!(
                "value has residual pi^{d} term, not rational"
            ))),
        }
    }

    pub fn mul_pi_pow(&self, k: u32) -> Self {
        let mut p = Self::default();
        for (e, r) in &self.terms {
            p.terms.insert(e + k, r.clone());
        }
        p
    }

    /// Divide by pi^k; every term must have exponent >= k.
    pub fn div_pi_pow(&self, k: u32) -> Result<Self> {
        let mut p = Self::default();
        for (e, r) in &self.terms {
            if *e < k {
                return Err(Error::PiDegree(format!(
                    "term pi^{e} not divisible by pi^{k}"
                )));
            }
            p.terms.insert(e - k, r.clone());
        }
        Ok(p)
    }

    pub fn scale(&self, r: &Rat) -> Self {
        if *r == 0 {
            return Self::default();
        }
        let mut p = Self::default();
        for (e, c) in &self.terms {
            p.terms.insert(*e, Rat::from(c * r));
        }
        p
    }

    fn insert_add(&mut self, k: u32, r: Rat) {
        if r == 0 {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(|| rint(0));
        *entry += r;
        if *entry == 0 {
            self.terms.remove(&k);
        }
    }

    /// Evaluate numerically at the given precision (bits).
    pub fn to_float(&self, prec: u32) -> Float {
        let pi = Float::with_val(prec, Constant::Pi);
        let mut acc = Float::with_val(prec, 0);
        for (e, r) in &self.terms {
            let mut t = Float::with_val(prec, r);
            t *= Float::with_val(prec, pi.clone().pow(*e));
            acc += t;
        }
        acc
    }
}

impl fmt::Display for PiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, r) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{r}")?,
                1 => write!(f, "{r} * pi")?,
                _ => write!(f, "{r} * pi^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add for PiPoly {
    type Output = PiPoly;
    fn add(mut self, rhs: PiPoly) -> PiPoly {
        for (k, r) in rhs.terms {
            self.insert_add(k, r);
        }
        self
    }
}

impl<'a> Add<&'a PiPoly> for PiPoly {
    type Output = PiPoly;
    fn add(mut self, rhs: &'a PiPoly) -> PiPoly {
        for (k, r) in &rhs.terms {
            self.insert_add(*k, r.clone());
        }
        self
    }
}

impl AddAssign for PiPoly {
    fn add_assign(&mut self, rhs: PiPoly) {
        for (k, r) in rhs.terms {
            self.insert_add(k, r);
        }
    }
}

impl Sub for PiPoly {
    type Output = PiPoly;
    fn sub(mut self, rhs: PiPoly) -> PiPoly {
        for (k, r) in rhs.terms {
            self.insert_add(k, -r);
        }
        self
    }
}

impl<'a> Sub<&'a PiPoly> for PiPoly {
    type Output = PiPoly;
    fn sub(mut self, rhs: &'a PiPoly) -> PiPoly {
        for (k, r) in &rhs.terms {
            self.insert_add(*k, Rat::from(-r.clone()));
        }
        self
    }
}

impl SubAssign for PiPoly {
    fn sub_assign(&mut self, rhs: PiPoly) {
        for (k, r) in rhs.terms {
            self.insert_add(k, -r);
        }
    }
}

impl Neg for PiPoly {
    type Output = PiPoly;
    fn neg(self) -> PiPoly {
        let mut p = PiPoly::default();
        for (k, r) in self.terms {
            p.terms.insert(k, -r);
        }
        p
    }
}

impl Mul for PiPoly {
    type Output = PiPoly;
    fn mul(self, rhs: PiPoly) -> PiPoly {
        (&self).mul(&rhs)
    }
}

impl<'a, 'b> Mul<&'b PiPoly> for &'a PiPoly {
    type Output = PiPoly;
    fn mul(self, rhs: &'b PiPoly) -> PiPoly {
        let mut p = PiPoly::default();
        for (ka, ra) in &self.terms {
            for (kb, rb) in &rhs.terms {
                p.insert_add(ka + kb, Rat::from(ra * rb));
            }
        }
        p
    }
}

impl MulAssign for PiPoly {
    fn mul_assign(&mut self, rhs: PiPoly) {
        *self = (&*self).mul(&rhs);
    }
}

impl Mul<Rat> for PiPoly {
    type Output = PiPoly;
    fn mul(self, r: Rat) -> PiPoly {
        self.scale(&r)
    }
}

impl From<Rat> for PiPoly {
    fn from(r: Rat) -> Self {
        PiPoly::from_rat(r)
    }
}

/// zeta(2m) = (-1)^{m+1} 2^{2m-1} B_{2m} pi^{2m} / (2m)!; zeta(0) = -1/2.
pub fn zeta2m(m: u32) -> PiPoly {
    PiPoly::pi_pow(2 * m, zeta_even_over_pi(m))
}

/// eta(2m) = (1 - 2^{1-2m}) zeta(2m), the alternating zeta at even argument.
pub fn eta2m(m: u32) -> PiPoly {
    let c = rint(1) - int_pow(2, 1 - 2 * m as i64);
    zeta2m(m).scale(&c)
}

/// theta_3(2m) = (1 - 3^{1-2m}) zeta(2m): inverse even powers of nonmultiples of 3.
pub fn theta3_2m(m: u32) -> PiPoly {
    let c = rint(1) - int_pow(3, 1 - 2 * m as i64);
    zeta2m(m).scale(&c)
}

/// theta_4(2m) = (2^{1-2m} - 4^{1-2m}) zeta(2m).
pub fn theta4_2m(m: u32) -> PiPoly {
    let c = int_pow(2, 1 - 2 * m as i64) - int_pow(4, 1 - 2 * m as i64);
    zeta2m(m).scale(&c)
}

/// theta_6(2m) = (-1 + 2^{1-2m} + 3^{1-2m} - 6^{1-2m}) zeta(2m).
pub fn theta6_2m(m: u32) -> PiPoly {
    let s = 2 * m as i64;
    let c = rint(-1) + int_pow(2, 1 - s) + int_pow(3, 1 - s) - int_pow(6, 1 - s);
    zeta2m(m).scale(&c)
}

/// phi_j(2m) = zeta(2m) / j^{2m}, the sum over multiples of j.
pub fn phi_j_2m(j: u32, m: u32) -> PiPoly {
    zeta2m(m).scale(&int_pow(j as i64, -2 * (m as i64)))
}

/// L(2k+1) = (-1)^k E_{2k} pi^{2k+1} / (4^{k+1} (2k)!), the odd values of the
/// alternating sum over odd integers (L(1) = pi/4).
pub fn l_odd(k: u32) -> PiPoly {
    let sign = if k % 2 == 0 { 1 } else { -1 };
    let num = Rat::from((euler_number(2 * k), Integer::from(1)));
    let den = rat_pow(&rint(4), k as i64 + 1) * Rat::from((factorial(2 * k), Integer::from(1)));
    PiPoly::pi_pow(2 * k + 1, rint(sign) * num / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn zeta_values() {
        assert_eq!(zeta2m(1), PiPoly::pi_pow(2, rat(1, 6)));
        assert_eq!(zeta2m(2), PiPoly::pi_pow(4, rat(1, 90)));
        assert_eq!(zeta2m(3), PiPoly::pi_pow(6, rat(1, 945)));
        assert_eq!(zeta2m(0), PiPoly::from_rat(rat(-1, 2)));
        assert_eq!(eta2m(1), PiPoly::pi_pow(2, rat(1, 12)));
        assert_eq!(theta3_2m(1), PiPoly::pi_pow(2, rat(1, 9)));
        assert_eq!(theta4_2m(1), PiPoly::pi_pow(2, rat(1, 24)));
        assert_eq!(theta6_2m(1), PiPoly::pi_pow(2, rat(-1, 18)));
        assert_eq!(l_odd(0), PiPoly::pi_pow(1, rat(1, 4)));
        assert_eq!(l_odd(1), PiPoly::pi_pow(3, rat(-1, 32)).scale(&rint(-1)));
    }

    #[test]
    fn ring_ops() {
        let a = PiPoly::pi_pow(2, rat(1, 6)) + PiPoly::from_rat(rint(3));
        let b = PiPoly::pi_pow(1, rat(-2, 5));
        let prod = (&a) * (&b);
        assert_eq!(prod.coeff(3), rat(-1, 15));
        assert_eq!(prod.coeff(1), rat(-6, 5));
        assert_eq!(prod.coeff(0), rint(0));
        let back = prod.div_pi_pow(1).unwrap();
        assert_eq!(back, a.scale(&rat(-2, 5)));
        assert!(prod.div_pi_pow(2).is_err());
        assert!((a.clone() - a).is_zero());
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = PiPoly::pi_pow(4, rat(1, 90));
        let b = zeta2m(2);
        let d = a - b;
        assert!(d.is_zero());
        assert_eq!(d.degree(), None);
        assert_eq!(format!("{d}"), "0");
    }

    #[test]
    fn display_format() {
        let p = PiPoly::from_rat(rat(-1, 2)) + PiPoly::pi_pow(1, rint(2)) + PiPoly::pi_pow(4, rat(3, 7));
        assert_eq!(format!("{p}"), "-1/2 + 2 * pi + 3/7 * pi^4");
    }

    #[test]
    fn numeric_eval() {
        let z2 = zeta2m(1).to_float(128);
        let want = Float::with_val(128, 1.644934066848226436472415166646_f64);
        let diff = Float::with_val(128, &z2 - &want).abs();
        assert!(diff < 1e-12);
    }
}
