//! Double zeta values zeta(a,b) = sum_{n > m >= 1} n^{-a} m^{-b}, the
//! reflection identity, and the weighted sum formulas built on it.
//!
//! Plain truncation needs ~10^{P/(a-1)} terms at a = 2, so the outer sum is
//! cut at N and the tail re-expanded through the Euler-Maclaurin form of the
//! inner partial sums: S_b(n-1) = zeta(b) - zeta(b,n) for b >= 2, and
//! S_1(n-1) = psi(n) + gamma. Either way the tail collapses to a handful of
//! zeta(s, N+1) evaluations plus, for b = 1, one log-weighted power tail.

use rug::ops::Pow;
use rug::Float;

use crate::bernoulli::bernoulli;
use crate::mellin::{verdict_f, NumCheck};
use crate::prec::Ctx;
use crate::rational::{factorial, int_pow, pochhammer, rat, rat_pow, rint, Rat};
use crate::special;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct DoubleZetaValue {
    pub a: u32,
    pub b: u32,
    pub value: Float,
}

fn ztail(ctx: &Ctx, s: u32, from: u32) -> Result<Float> {
    special::hurwitz_auto(ctx, &ctx.fu(s as u64), &ctx.fu(from as u64))
}

/// sum_{n > N} n^{-sigma} ln n by Euler-Maclaurin on f(x) = x^{-sigma} ln x,
/// whose derivatives are f^{(r)}(x) = (-1)^r x^{-sigma-r}[(sigma)_r ln x - d_r]
/// with d_r = (sigma)_r sum_{i<r} 1/(sigma+i).
fn log_power_tail(ctx: &Ctx, sigma: u32, n: u32) -> Float {
    let bits = ctx.bits();
    let s = sigma as i64;
    let nf = ctx.fu(n as u64);
    let lnn = nf.clone().ln();
    let mut acc = Float::with_val(bits, (&nf).pow(1 - sigma as i32))
        * (lnn.clone() / ctx.from_rat(&rint(s - 1)) + ctx.from_rat(&rat(1, (s - 1) * (s - 1))));
    acc -= Float::with_val(bits, (&nf).pow(-(sigma as i32))) * &lnn / 2u32;
    let thresh = ctx.pow10(-(ctx.digits() as i32 + 8));
    let mut prev = Float::with_val(bits, f64::MAX);
    for k in 1..200u32 {
        let r = 2 * k - 1;
        let poch = pochhammer(&rint(s), r);
        let mut dsum = rint(0);
        for i in 0..r {
            dsum += rat(1, s + i as i64);
        }
        let d_r = Rat::from(&poch * dsum);
        let coeff = Rat::from(bernoulli(2 * k) / Rat::from(factorial(2 * k)));
        // f^{(2k-1)}(N) carries (-1)^{2k-1} = -1; the E-M sum subtracts it
        let bracket = ctx.from_rat(&poch) * &lnn - ctx.from_rat(&d_r);
        let term = ctx.from_rat(&coeff)
            * Float::with_val(bits, (&nf).pow(-(sigma as i32) - r as i32))
            * bracket;
        let mag = term.clone().abs();
        if mag > prev {
            break;
        }
        acc += term;
        if mag < thresh {
            break;
        }
        prev = mag;
    }
    acc
}

/// zeta(a,b) to full working precision; a >= 2 for convergence, b >= 1.
pub fn double_zeta(ctx: &Ctx, a: u32, b: u32) -> Result<Float> {
    if a < 2 {
        return Err(Error::Domain(format!("double_zeta diverges at a = {a}")));
    }
    if b < 1 {
        return Err(Error::Domain("double_zeta needs b >= 1".into()));
    }
    let bits = ctx.bits();
    let n_cut = 50 + 2 * ctx.digits();
    let mut sb = ctx.f(0.0);
    let mut direct = ctx.f(0.0);
    for n in 2..=n_cut {
        sb += Float::with_val(bits, ctx.fu(n as u64 - 1).pow(-(b as i32)));
        direct += sb.clone() * Float::with_val(bits, ctx.fu(n as u64).pow(-(a as i32)));
    }
    let from = n_cut + 1;
    let thresh = ctx.pow10(-(ctx.digits() as i32 + 8));
    let tail = if b >= 2 {
        // S_b(n-1) = zeta(b) - [n^{1-b}/(b-1) + n^{-b}/2
        //            + sum_k B_{2k}/(2k)! (b)_{2k-1} n^{-b-2k+1} + ...]
        let mut t = special::zeta_int(ctx, b) * ztail(ctx, a, from)?;
        t -= ztail(ctx, a + b - 1, from)? / ctx.from_rat(&rint(b as i64 - 1));
        t -= ztail(ctx, a + b, from)? / 2u32;
        let mut prev = Float::with_val(bits, f64::MAX);
        for k in 1..200u32 {
            let c = Rat::from(bernoulli(2 * k) / Rat::from(factorial(2 * k)))
                * pochhammer(&rint(b as i64), 2 * k - 1);
            let term = ctx.from_rat(&Rat::from(c)) * ztail(ctx, a + b + 2 * k - 1, from)?;
            let mag = term.clone().abs();
            if mag > prev {
                break;
            }
            t -= term;
            if mag < thresh {
                break;
            }
            prev = mag;
        }
        t
    } else {
        // S_1(n-1) = psi(n) + gamma,
        // psi(n) ~ ln n - 1/(2n) - sum_k B_{2k}/(2k) n^{-2k}
        let mut t = special::euler_gamma(ctx) * ztail(ctx, a, from)?;
        t += log_power_tail(ctx, a, n_cut);
        t -= ztail(ctx, a + 1, from)? / 2u32;
        let mut prev = Float::with_val(bits, f64::MAX);
        for k in 1..200u32 {
            let c = Rat::from(bernoulli(2 * k) / rint(2 * k as i64));
            let term = ctx.from_rat(&c) * ztail(ctx, a + 2 * k, from)?;
            let mag = term.clone().abs();
            if mag > prev {
                break;
            }
            t -= term;
            if mag < thresh {
                break;
            }
            prev = mag;
        }
        t
    };
    Ok(direct + tail)
}

pub fn double_zeta_value(ctx: &Ctx, a: u32, b: u32) -> Result<DoubleZetaValue> {
    Ok(DoubleZetaValue {
        a,
        b,
        value: double_zeta(ctx, a, b)?,
    })
}

/// |zeta(a,b) + zeta(b,a) - zeta(a) zeta(b) + zeta(a+b)|, a, b >= 2.
pub fn reflection_residual(ctx: &Ctx, a: u32, b: u32) -> Result<Float> {
    let lhs = double_zeta(ctx, a, b)? + double_zeta(ctx, b, a)?;
    let rhs = special::zeta_int(ctx, a) * special::zeta_int(ctx, b) - special::zeta_int(ctx, a + b);
    Ok((lhs - rhs).abs())
}

/// sum_{k=1}^{s-1} 2^{-2(s-k)} (1 - 2^{-2k}) [zeta(2k,2s-2k) + zeta(2s-2k,2k)]
///   = (2^{-2s-1}/3) (4^s + 6s - 1) zeta(2s).
pub fn check_theorem4(ctx: &Ctx, s: u32) -> Result<NumCheck> {
    assert!(s >= 2);
    let mut lhs = ctx.f(0.0);
    for k in 1..s {
        let w = Rat::from(
            rat_pow(&rat(1, 4), (s - k) as i64) * (rint(1) - rat_pow(&rat(1, 4), k as i64)),
        );
        let pair = double_zeta(ctx, 2 * k, 2 * (s - k))? + double_zeta(ctx, 2 * (s - k), 2 * k)?;
        lhs += ctx.from_rat(&w) * pair;
    }
    let c = Rat::from(
        rat_pow(&rat(1, 2), 2 * s as i64 + 1) / rint(3)
            * (int_pow(4, s as i64) + rint(6 * s as i64 - 1)),
    );
    let rhs = ctx.from_rat(&c) * special::zeta_int(ctx, 2 * s);
    Ok(verdict_f(ctx, "thm4_double_zeta", format!("s={s}"), &lhs, &rhs))
}

/// The generic bridge from a zeta convolution to a double zeta sum formula,
/// instantiated on the weights f(s,k) = 2(2^{2k+2}-1)/(2^{2s+2}-1) whose
/// convolution sums to zeta(2s+2):
/// sum_k f(s,k)[zeta(p,q) + zeta(q,p)] = sum_k f(s,k) zeta(p) zeta(q)
///   - zeta(2s+2) sum_k f(s,k), with (p,q) = (2s-2k, 2k+2).
pub fn check_bridge_weights(ctx: &Ctx, s: u32) -> Result<NumCheck> {
    assert!(s >= 2);
    let den = Rat::from(int_pow(2, 2 * s as i64 + 2) - rint(1));
    let mut lhs = ctx.f(0.0);
    let mut conv = ctx.f(0.0);
    let mut fsum = rint(0);
    for k in 0..s {
        let f = Rat::from(rint(2) * (int_pow(2, 2 * k as i64 + 2) - rint(1)) / &den);
        let (p, q) = (2 * (s - k), 2 * k + 2);
        let pair = double_zeta(ctx, p, q)? + double_zeta(ctx, q, p)?;
        lhs += ctx.from_rat(&f) * pair;
        conv += ctx.from_rat(&f) * special::zeta_int(ctx, p) * special::zeta_int(ctx, q);
        fsum += f;
    }
    let rhs = conv - ctx.from_rat(&fsum) * special::zeta_int(ctx, 2 * s + 2);
    Ok(verdict_f(ctx, "bridge_weights", format!("s={s}"), &lhs, &rhs))
}
