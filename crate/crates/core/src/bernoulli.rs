//! Bernoulli and Euler numbers, the shifted B* variant, and the associated
//! polynomials, all exact.
//!
//! The caches grow on demand and are process-wide; readers take the lock
//! briefly to clone what they need, so concurrent use from the suite runner is
//! safe.

use std::sync::{LazyLock, RwLock};

use rug::Integer;
use rug::Rational;

use crate::rational::{binomial, factorial, int_pow, rat, rat_pow, rint, Rat};

static BERNOULLI: LazyLock<RwLock<Vec<Rat>>> = LazyLock::new(|| RwLock::new(vec![rint(1)]));
static EULER: LazyLock<RwLock<Vec<Integer>>> = LazyLock::new(|| RwLock::new(vec![Integer::from(1)]));
static BSTAR: LazyLock<RwLock<Vec<Rat>>> =
    LazyLock::new(|| RwLock::new(vec![rint(1), rat(1, 4)]));

/// B_n with B_1 = -1/2, via B_s = -(1/(s+1)) sum_{k<s} C(s+1,k) B_k.
pub fn bernoulli(n: u32) -> Rat {
    {
        let cache = BERNOULLI.read().unwrap();
        if (n as usize) < cache.len() {
            return cache[n as usize].clone();
        }
    }
    let mut cache = BERNOULLI.write().unwrap();
    while cache.len() <= n as usize {
        let s = cache.len() as u32;
        if s % 2 == 1 && s > 1 {
            cache.push(rint(0));
            continue;
        }
        let mut acc = rint(0);
        for (k, b) in cache.iter().enumerate() {
            if *b != 0 {
                acc += b.clone() * binomial(s as u64 + 1, k as u64);
            }
        }
        acc /= -rint(s as i64 + 1);
        cache.push(acc);
    }
    cache[n as usize].clone()
}

/// Integer Euler numbers E_n (E_1 = E_3 = ... = 0), via
/// E_{2m} = -sum_{k<m} C(2m,2k) E_{2k}.
pub fn euler_number(n: u32) -> Integer {
    if n % 2 == 1 {
        return Integer::from(0);
    }
    let m = (n / 2) as usize;
    {
        let cache = EULER.read().unwrap();
        if m < cache.len() {
            return cache[m].clone();
        }
    }
    let mut cache = EULER.write().unwrap();
    while cache.len() <= m {
        let mm = cache.len() as u64;
        let mut acc = Integer::from(0);
        for (k, e) in cache.iter().enumerate() {
            acc += Integer::from(e * &binomial(2 * mm, 2 * k as u64));
        }
        cache.push(-acc);
    }
    cache[m].clone()
}

/// Shifted variant: B*_0 = 1, B*_1 = 1/4, and for s >= 2
/// B*_s = -(1/(s+1)) sum_{k<s} C(s+1,k) 2^{k-s} B_k.
pub fn b_star(s: u32) -> Rat {
    {
        let cache = BSTAR.read().unwrap();
        if (s as usize) < cache.len() {
            return cache[s as usize].clone();
        }
    }
    let mut cache = BSTAR.write().unwrap();
    while cache.len() <= s as usize {
        let n = cache.len() as u32;
        let mut acc = rint(0);
        for k in 0..n {
            let b = bernoulli(k);
            if b != 0 {
                acc += b * binomial(n as u64 + 1, k as u64) * int_pow(2, k as i64 - n as i64);
            }
        }
        acc /= -rint(n as i64 + 1);
        cache.push(acc);
    }
    cache[s as usize].clone()
}

/// B_n(x) = sum_k C(n,k) B_{n-k} x^k.
pub fn bernoulli_poly(n: u32, x: &Rat) -> Rat {
    let mut acc = rint(0);
    let mut xk = rint(1);
    for k in 0..=n {
        let b = bernoulli(n - k);
        if b != 0 {
            acc += b * binomial(n as u64, k as u64) * &xk;
        }
        xk *= x;
    }
    acc
}

/// E_n(x) = sum_k C(n,k) (E_k / 2^k) (x - 1/2)^{n-k}.
pub fn euler_poly(n: u32, x: &Rat) -> Rat {
    let shifted = Rational::from(x - &rat(1, 2));
    let mut acc = rint(0);
    for k in (0..=n).step_by(2) {
        let e = euler_number(k);
        if e != 0 {
            acc += Rat::from((e * binomial(n as u64, k as u64), Integer::from(1)))
                * rat_pow(&rat(1, 2), k as i64)
                * rat_pow(&shifted, (n - k) as i64);
        }
    }
    // odd k contributes nothing: odd Euler numbers vanish
    acc
}

/// Exact integral over [0,1] of E_n(x); used by the B_{2k+2} bridge.
pub fn euler_poly_integral01(n: u32) -> Rat {
    // termwise: int_0^1 (x-1/2)^m dx = 0 for odd m, (1/2)^m/(m+1) for even m
    let mut acc = rint(0);
    for k in (0..=n).step_by(2) {
        let m = n - k;
        if m % 2 != 0 {
            continue;
        }
        let e = euler_number(k);
        if e != 0 {
            acc += Rat::from((e * binomial(n as u64, k as u64), Integer::from(1)))
                * rat_pow(&rat(1, 2), (k + m) as i64)
                / rint(m as i64 + 1);
        }
    }
    acc
}

/// zeta(2m)/pi^{2m} as an exact rational (the m = 0 case gives zeta(0) = -1/2).
pub fn zeta_even_over_pi(m: u32) -> Rat {
    if m == 0 {
        return rat(-1, 2);
    }
    let sign = if m % 2 == 1 { 1 } else { -1 };
    rint(sign) * int_pow(2, 2 * m as i64 - 1) * bernoulli(2 * m)
        / Rat::from((factorial(2 * m), Integer::from(1)))
}
