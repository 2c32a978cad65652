//! Working-precision context. All numeric code receives a `Ctx` and creates
//! floats through it, so precision tracking is by construction: a value's
//! precision is the context it was built with, and mixed-precision work is
//! resolved by building everything from the narrower context.

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Complex, Float};

use crate::rational::Rat;

/// Guard bits beyond the requested decimal digits. Iterated quadrature and
/// long alternating sums lose a few bits; 48 covers every routine here.
const GUARD_BITS: u32 = 48;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ctx {
    digits: u32,
    bits: u32,
}

impl Ctx {
    pub fn new(digits: u32) -> Ctx {
        let digits = digits.max(10);
        // log2(10) = 3.3219...
        let bits = (digits as f64 * 3.3219280948873626).ceil() as u32 + GUARD_BITS;
        Ctx { digits, bits }
    }

    /// A context with `extra` more decimal digits, for ladder comparisons.
    pub fn raise(&self, extra: u32) -> Ctx {
        Ctx::new(self.digits + extra)
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn f(&self, v: f64) -> Float {
        Float::with_val(self.bits, v)
    }

    pub fn fi(&self, v: i64) -> Float {
        Float::with_val(self.bits, v)
    }

    pub fn fu(&self, v: u64) -> Float {
        Float::with_val(self.bits, v)
    }

    pub fn from_rat(&self, r: &Rat) -> Float {
        Float::with_val(self.bits, r)
    }

    /// Parse a decimal literal exactly at working precision.
    pub fn parse(&self, s: &str) -> Float {
        Float::with_val(self.bits, Float::parse(s).expect("bad float literal"))
    }

    pub fn pi(&self) -> Float {
        Float::with_val(self.bits, Constant::Pi)
    }

    pub fn ln2(&self) -> Float {
        Float::with_val(self.bits, Constant::Log2)
    }

    pub fn c(&self, re: Float, im: Float) -> Complex {
        Complex::with_val(self.bits, (re, im))
    }

    pub fn c_re(&self, re: Float) -> Complex {
        Complex::with_val(self.bits, (re, Float::with_val(self.bits, 0)))
    }

    pub fn c_zero(&self) -> Complex {
        Complex::with_val(self.bits, (0, 0))
    }

    pub fn c_i(&self) -> Complex {
        Complex::with_val(self.bits, (0, 1))
    }

    pub fn c_from(&self, re: f64, im: f64) -> Complex {
        Complex::with_val(self.bits, (re, im))
    }

    /// 10^{-digits}: the abs/rel target the context promises.
    pub fn eps(&self) -> Float {
        self.pow10(-(self.digits as i32))
    }

    /// 10^e at working precision.
    pub fn pow10(&self, e: i32) -> Float {
        Float::with_val(self.bits, 10).pow(e)
    }

    /// exp(z) - 1 with full relative accuracy for small |z|.
    pub fn cexpm1(&self, z: &Complex) -> Complex {
        let mag = Float::with_val(self.bits, z.abs_ref());
        if mag > 0.25 {
            return Complex::with_val(self.bits, z.exp_ref()) - 1u32;
        }
        if mag.is_zero() {
            return self.c_zero();
        }
        // sum z^n/n! from n = 1; |z| <= 1/4 so ~bits/2 terms suffice
        let mut term = z.clone();
        let mut acc = z.clone();
        let stop = Float::with_val(self.bits, 2).pow(-(self.bits as i32) - 8);
        for n in 2..10_000u32 {
            term *= z;
            term /= n;
            acc += &term;
            let t = Float::with_val(self.bits, term.abs_ref());
            if t < stop {
                break;
            }
        }
        acc
    }
}

/// |a - b| as a Float (complex magnitude).
pub fn abs_diff(a: &Complex, b: &Complex) -> Float {
    let prec = a.prec().0.max(b.prec().0);
    let d = Complex::with_val(prec, a - b);
    Float::with_val(prec, d.abs_ref())
}

pub fn abs_diff_f(a: &Float, b: &Float) -> Float {
    let prec = a.prec().max(b.prec());
    let mut d = Float::with_val(prec, a - b);
    d.abs_mut();
    d
}

/// Magnitude of a complex value as a Float.
pub fn cabs(z: &Complex) -> Float {
    Float::with_val(z.prec().0, z.abs_ref())
}
