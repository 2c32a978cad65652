//! Exact rational helpers over GMP rationals.
//!
//! `rug::Rational` already keeps values in lowest terms with a positive
//! denominator, which is the representation the rest of the crate assumes.

use rug::ops::Pow;
use rug::{Integer, Rational};

pub type Rat = Rational;

pub fn rat<T: Into<i64>>(p: T, q: T) -> Rat {
    let q = q.into();
    assert!(q != 0, "zero denominator");
    Rational::from((p.into(), q))
}

pub fn rint<T: Into<i64>>(n: T) -> Rat {
    Rational::from(n.into())
}

pub fn factorial(n: u32) -> Integer {
    Integer::from(Integer::factorial(n))
}

pub fn binomial(n: u64, k: u64) -> Integer {
    if k > n {
        return Integer::from(0);
    }
    Integer::from(Integer::binomial_u(n as u32, k as u32))
}

/// b^e for integer e of either sign; e < 0 inverts exactly.
pub fn rat_pow(b: &Rat, e: i64) -> Rat {
    if e >= 0 {
        b.clone().pow(e as u32)
    } else {
        assert!(*b != 0, "zero base with negative exponent");
        Rat::from(b.clone().pow((-e) as u32).recip_ref())
    }
}

/// n^e as an exact rational, n > 0.
pub fn int_pow(n: i64, e: i64) -> Rat {
    rat_pow(&rint(n), e)
}

/// Falling-free Pochhammer (x)_n = x(x+1)...(x+n-1), (x)_0 = 1.
pub fn pochhammer(x: &Rat, n: u32) -> Rat {
    let mut acc = rint(1);
    let mut term = x.clone();
    for _ in 0..n {
        acc *= &term;
        term += 1;
    }
    acc
}

/// t! / (d_1! d_2! ... d_s!) with the invariant sum(d_i) = t.
pub fn multinomial(t: u32, parts: &[u32]) -> crate::Result<Integer> {
    let sum: u32 = parts.iter().sum();
    if sum != t {
        return Err(crate::Error::Domain(format!(
            "multinomial parts sum to {sum}, expected {t}"
        )));
    }
    let mut num = factorial(t);
    for &d in parts {
        num /= factorial(d);
    }
    Ok(num)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_canonical() {
        let r = rat(6, -4);
        assert_eq!(r, rat(-3, 2));
        assert_eq!(r.denom().to_i32(), Some(2));
    }

    #[test]
    fn pow_negative_inverts() {
        assert_eq!(rat_pow(&rat(2, 3), -2), rat(9, 4));
        assert_eq!(int_pow(2, -1), rat(1, 2));
        assert_eq!(int_pow(12, 0), rint(1));
    }

    #[test]
    fn pochhammer_matches_factorial() {
        assert_eq!(pochhammer(&rint(1), 5), rint(120));
        assert_eq!(pochhammer(&rat(1, 2), 3), rat(15, 8));
        assert_eq!(pochhammer(&rint(7), 0), rint(1));
    }

    #[test]
    fn multinomial_checks_its_parts() {
        assert_eq!(multinomial(4, &[2, 1, 1]).unwrap(), 12);
        assert_eq!(multinomial(3, &[3]).unwrap(), 1);
        assert!(multinomial(4, &[2, 1]).is_err());
    }

    #[test]
    fn binomial_out_of_range_is_zero() {
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(10, 4), 210);
    }
}
