//! Lower Hessenberg determinants and the layered-determinant calculus built
//! on them: the half-weighted form Psi_s(h, H), the corner-layered form
//! Delta_s(h), reciprocal power series, the multinomial expansion, and the
//! companion-matrix iteration.
//!
//! The recurrences are the primary O(s^2) path; dense matrices only exist in
//! the `direct` oracle routines, and the redundancy between the two is what
//! the tests exercise.

use rug::Integer;

use crate::pipoly::PiPoly;
use crate::rational::{multinomial, Rat};
use crate::{Error, Result};

/// Commutative ring contract; enough for determinant recurrences.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_integer(n: Integer) -> Self;
    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }
}

impl Ring for Rat {
    fn zero() -> Self {
        Rat::new()
    }
    fn one() -> Self {
        Rat::from(1)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        Rat::from(self + rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        Rat::from(self - rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        Rat::from(self * rhs)
    }
    fn neg_ref(&self) -> Self {
        Rat::from(-self.clone())
    }
    fn from_integer(n: Integer) -> Self {
        Rat::from(n)
    }
}

impl Ring for PiPoly {
    fn zero() -> Self {
        PiPoly::zero()
    }
    fn one() -> Self {
        PiPoly::one()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.clone() + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.clone() - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self.clone()
    }
    fn from_integer(n: Integer) -> Self {
        PiPoly::from_rat(Rat::from(n))
    }
}

/// Lower Hessenberg matrix: a_{ij} = 0 whenever j > i + 1 (1-indexed).
/// Row i stores only its min(i+1, n) admissible entries.
#[derive(Clone, Debug)]
pub struct HessenbergMatrix<R: Ring> {
    n: usize,
    rows: Vec<Vec<R>>,
}

impl<R: Ring> HessenbergMatrix<R> {
    /// Build from a 1-indexed entry function; f is only called on the
    /// admissible positions.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let rows = (1..=n)
            .map(|i| (1..=(i + 1).min(n)).map(|j| f(i, j)).collect())
            .collect();
        Self { n, rows }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry a_{ij}, 1-indexed; zero above the superdiagonal.
    pub fn entry(&self, i: usize, j: usize) -> R {
        if j > i + 1 {
            R::zero()
        } else {
            self.rows[i - 1][j - 1].clone()
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<R>> {
        (1..=self.n)
            .map(|i| (1..=self.n).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    /// Determinant by the Hessenberg recurrence
    /// det A_n = a_{nn} det A_{n-1}
    ///           + sum_r (-1)^{n-r} a_{nr} det A_{r-1} prod_{j=r}^{n-1} a_{j,j+1}.
    pub fn det(&self) -> R {
        let mut d: Vec<R> = Vec::with_capacity(self.n + 1);
        d.push(R::one());
        for k in 1..=self.n {
            let mut acc = self.entry(k, k).mul_ref(&d[k - 1]);
            let mut super_prod = R::one();
            for r in (1..k).rev() {
                super_prod = super_prod.mul_ref(&self.entry(r, r + 1));
                let term = self.entry(k, r).mul_ref(&d[r - 1]).mul_ref(&super_prod);
                if (k - r) % 2 == 0 {
                    acc = acc.add_ref(&term);
                } else {
                    acc = acc.sub_ref(&term);
                }
            }
            d.push(acc);
        }
        d.pop().unwrap()
    }
}

/// Cofactor (Laplace) expansion along the first row. Exponential; oracle use
/// only, sizes <= 8 or so.
pub fn det_cofactor<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = R::zero();
    for (j, a) in m[0].iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let minor: Vec<Vec<R>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = a.mul_ref(&det_cofactor(&minor));
        if j % 2 == 0 {
            acc = acc.add_ref(&term);
        } else {
            acc = acc.sub_ref(&term);
        }
    }
    acc
}

fn need_len<R>(v: &[R], s: usize, what: &str) -> Result<()> {
    if v.len() < s {
        Err(Error::Domain(format!(
            "{what} has {} entries, need {s}",
            v.len()
        )))
    } else {
        Ok(())
    }
}

/// Psi_1..Psi_s by the recurrence Psi_s = -H_s - sum_{k<s} h_{s-k} Psi_k.
/// h[i], big_h[i] hold h_{i+1}, H_{i+1}.
pub fn psi_seq<R: Ring>(h: &[R], big_h: &[R], s: usize) -> Result<Vec<R>> {
    need_len(h, s.saturating_sub(1), "h")?;
    need_len(big_h, s, "H")?;
    let mut psi: Vec<R> = Vec::with_capacity(s);
    for m in 1..=s {
        let mut acc = big_h[m - 1].neg_ref();
        for k in 1..m {
            acc = acc.sub_ref(&h[m - k - 1].mul_ref(&psi[k - 1]));
        }
        psi.push(acc);
    }
    Ok(psi)
}

/// The displayed s x s half-weighted matrix: first column H_1..H_s, ones on
/// the superdiagonal, Toeplitz bands h_1, h_2, ... below it.
pub fn psi_matrix<R: Ring>(h: &[R], big_h: &[R], s: usize) -> Result<Vec<Vec<R>>> {
    need_len(h, s.saturating_sub(1), "h")?;
    need_len(big_h, s, "H")?;
    let m = (1..=s)
        .map(|i| {
            (1..=s)
                .map(|j| {
                    if j == 1 {
                        big_h[i - 1].clone()
                    } else if j == i + 1 {
                        R::one()
                    } else if j <= i {
                        h[i - j].clone()
                    } else {
                        R::zero()
                    }
                })
                .collect()
        })
        .collect();
    Ok(m)
}

/// Psi_s by (-1)^s times the cofactor determinant of the displayed matrix.
pub fn psi_direct<R: Ring>(h: &[R], big_h: &[R], s: usize) -> Result<R> {
    let m = psi_matrix(h, big_h, s)?;
    let d = det_cofactor(&m);
    Ok(if s % 2 == 0 { d } else { d.neg_ref() })
}

/// Delta_0..Delta_m with Delta_0 = 1 and Delta_m = -sum_{j<m} Delta_j h_{m-j};
/// these are the coefficients of 1/(1 + sum h_k t^k).
pub fn delta_seq<R: Ring>(h: &[R], m: usize) -> Result<Vec<R>> {
    need_len(h, m, "h")?;
    let mut d: Vec<R> = Vec::with_capacity(m + 1);
    d.push(R::one());
    for k in 1..=m {
        let mut acc = R::zero();
        for j in 0..k {
            acc = acc.add_ref(&d[j].mul_ref(&h[k - j - 1]));
        }
        d.push(acc.neg_ref());
    }
    Ok(d)
}

/// Delta_s as (-1)^s times the cofactor determinant of the Toeplitz
/// Hessenberg matrix (the H = h special case of the half-weighted form).
pub fn delta_direct<R: Ring>(h: &[R], s: usize) -> Result<R> {
    need_len(h, s, "h")?;
    psi_direct(h, h, s)
}

/// Rebuild h_1..h_s from (Delta_1..Delta_s) by the symmetric inversion: the
/// map is an involution, and this route goes through the dense determinant.
pub fn h_from_delta_direct<R: Ring>(delta_tail: &[R], s: usize) -> Result<Vec<R>> {
    (1..=s).map(|k| delta_direct(delta_tail, k)).collect()
}

/// Exact involution check: h -> Delta (recurrence) -> h (direct determinant).
pub fn delta_roundtrip<R: Ring>(h: &[R], s: usize) -> Result<bool> {
    let d = delta_seq(h, s)?;
    let back = h_from_delta_direct(&d[1..], s)?;
    Ok(back.iter().zip(h).all(|(a, b)| a == b))
}

/// Delta_s by the multinomial expansion of the reciprocal series:
/// sum over d_1..d_s >= 0 with sum i d_i = s, t = sum d_i, of
/// (t; d_1..d_s) (-1)^t h_1^{d_1} ... h_s^{d_s}.
pub fn delta_multinomial<R: Ring>(h: &[R], s: usize) -> Result<R> {
    need_len(h, s, "h")?;
    if s == 0 {
        return Ok(R::one());
    }
    let mut acc = R::zero();
    let mut parts: Vec<u32> = vec![0; s];
    enumerate_weighted(s, s, &mut parts, &mut |d: &[u32]| -> Result<()> {
        let t: u32 = d.iter().sum();
        let coeff = multinomial(t, d)?;
        let mut term = R::from_integer(if t % 2 == 0 { coeff } else { -coeff });
        for (i, &di) in d.iter().enumerate() {
            for _ in 0..di {
                term = term.mul_ref(&h[i]);
            }
        }
        acc = acc.add_ref(&term);
        Ok(())
    })?;
    Ok(acc)
}

/// Visit every (d_1..d_s) with sum i d_i = rem, filling indices >= from 1 up
/// to `hi` part sizes. Parts indexed from largest size down.
fn enumerate_weighted<F: FnMut(&[u32]) -> Result<()>>(
    hi: usize,
    rem: usize,
    parts: &mut Vec<u32>,
    visit: &mut F,
) -> Result<()> {
    if rem == 0 {
        return visit(parts);
    }
    if hi == 0 {
        return Ok(());
    }
    for cnt in 0..=(rem / hi) {
        parts[hi - 1] = cnt as u32;
        enumerate_weighted(hi - 1, rem - cnt * hi, parts, visit)?;
    }
    parts[hi - 1] = 0;
    Ok(())
}

/// The n x n companion matrix of the Delta recurrence: ones on the
/// subdiagonal, last column (-h_n, ..., -h_1)^T.
pub fn companion_matrix<R: Ring>(h: &[R], n: usize) -> Result<Vec<Vec<R>>> {
    need_len(h, n, "h")?;
    let m = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if j + 1 == n {
                        h[n - 1 - i].neg_ref()
                    } else if i == j + 1 {
                        R::one()
                    } else {
                        R::zero()
                    }
                })
                .collect()
        })
        .collect();
    Ok(m)
}

/// Delta_0..Delta_k for the series with coefficients h_1..h_n (zero beyond),
/// by iterating the companion matrix on (0, ..., 0, 1)^T; the last state
/// component after k steps is Delta_k.
pub fn delta_via_companion<R: Ring>(h: &[R], n: usize, k: usize) -> Result<Vec<R>> {
    let c = companion_matrix(h, n)?;
    let mut v: Vec<R> = vec![R::zero(); n];
    v[n - 1] = R::one();
    let mut out = Vec::with_capacity(k + 1);
    out.push(R::one());
    for _ in 1..=k {
        let next: Vec<R> = (0..n)
            .map(|i| {
                let mut acc = R::zero();
                for j in 0..n {
                    if !c[i][j].is_zero() {
                        acc = acc.add_ref(&c[i][j].mul_ref(&v[j]));
                    }
                }
                acc
            })
            .collect();
        v = next;
        out.push(v[n - 1].clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rint};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn rand_rat(rng: &mut StdRng) -> Rat {
        let p: i32 = rng.gen_range(-9..=9);
        let q: i32 = rng.gen_range(1..=9);
        rat(p as i64, q as i64)
    }

    #[test]
    fn det_small_cases() {
        let a = HessenbergMatrix::from_fn(1, |_, _| rat(7, 3));
        assert_eq!(a.det(), rat(7, 3));
        // [[a,b],[c,d]] -> ad - bc
        let vals = [[rat(2, 1), rat(5, 1)], [rat(3, 1), rat(4, 1)]];
        let a = HessenbergMatrix::from_fn(2, |i, j| vals[i - 1][j - 1].clone());
        assert_eq!(a.det(), rint(2 * 4 - 5 * 3));
    }

    #[test]
    fn det_matches_cofactor_oracle() {
        let mut rng = StdRng::seed_from_u64(0x5eed);
        for n in 1..=7usize {
            for _ in 0..20 {
                let a = HessenbergMatrix::from_fn(n, |_, _| rand_rat(&mut rng));
                assert_eq!(a.det(), det_cofactor(&a.to_dense()), "n={n}");
            }
        }
    }

    #[test]
    fn psi_recurrence_matches_direct() {
        let mut rng = StdRng::seed_from_u64(0xabcd);
        for s in 1..=8usize {
            for _ in 0..20 {
                let h: Vec<Rat> = (0..s).map(|_| rand_rat(&mut rng)).collect();
                let hh: Vec<Rat> = (0..s).map(|_| rand_rat(&mut rng)).collect();
                let seq = psi_seq(&h, &hh, s).unwrap();
                let direct = psi_direct(&h, &hh, s).unwrap();
                assert_eq!(seq[s - 1], direct, "s={s}");
            }
        }
    }

    #[test]
    fn psi_small_closed_forms() {
        let h = [rat(3, 2), rat(1, 5)];
        let hh = [rat(-2, 7), rat(4, 3)];
        let psi = psi_seq(&h, &hh, 2).unwrap();
        assert_eq!(psi[0], rat(2, 7)); // -H_1
        assert_eq!(psi[1], Rat::from(&h[0] * &hh[0]) - &hh[1]); // h_1 H_1 - H_2
    }

    #[test]
    fn reciprocal_series_examples() {
        // 1/(1+t)
        let d = delta_seq(&[rint(1), rint(0), rint(0)], 3).unwrap();
        assert_eq!(d, vec![rint(1), rint(-1), rint(1), rint(-1)]);
        // 1/(1+t^2)
        let d = delta_seq(&[rint(0), rint(1), rint(0), rint(0)], 4).unwrap();
        assert_eq!(d, vec![rint(1), rint(0), rint(-1), rint(0), rint(1)]);
    }

    #[test]
    fn delta_three_routes_agree() {
        let mut rng = StdRng::seed_from_u64(0x77);
        for s in 1..=8usize {
            let h: Vec<Rat> = (0..s).map(|_| rand_rat(&mut rng)).collect();
            let rec = delta_seq(&h, s).unwrap();
            for k in 1..=s {
                assert_eq!(rec[k], delta_direct(&h, k).unwrap(), "direct k={k}");
                assert_eq!(rec[k], delta_multinomial(&h, k).unwrap(), "multinomial k={k}");
            }
        }
    }

    #[test]
    fn inversion_involution() {
        let mut rng = StdRng::seed_from_u64(0x1234);
        for s in 1..=8usize {
            for _ in 0..5 {
                let h: Vec<Rat> = (0..s).map(|_| rand_rat(&mut rng)).collect();
                assert!(delta_roundtrip(&h, s).unwrap(), "s={s}");
            }
        }
    }

    #[test]
    fn companion_layout_and_iteration() {
        let h = [rat(1, 2), rat(-3, 4)];
        let c = companion_matrix(&h, 2).unwrap();
        assert_eq!(c[0], vec![rint(0), rat(3, 4)]);
        assert_eq!(c[1], vec![rint(1), rat(-1, 2)]);

        let mut rng = StdRng::seed_from_u64(0x99);
        let h: Vec<Rat> = (0..4).map(|_| rand_rat(&mut rng)).collect();
        let mut padded = h.clone();
        padded.extend(std::iter::repeat(Rat::new()).take(4));
        let want = delta_seq(&padded, 8).unwrap();
        let got = delta_via_companion(&h, 4, 8).unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn psi_with_pi_poly_entries() {
        // same vectors lifted to the pi ring must reproduce the rational run
        let h = [rat(1, 6), rat(-1, 90)];
        let hh = [rat(2, 3), rat(5, 7)];
        let hp: Vec<PiPoly> = h.iter().cloned().map(PiPoly::from_rat).collect();
        let hhp: Vec<PiPoly> = hh.iter().cloned().map(PiPoly::from_rat).collect();
        let a = psi_seq(&h, &hh, 2).unwrap();
        let b = psi_seq(&hp, &hhp, 2).unwrap();
        assert_eq!(PiPoly::from_rat(a[1].clone()), b[1]);
    }
}
