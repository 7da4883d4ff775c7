use alloc::vec;
use alloc::vec::Vec;

use crate::error::ensure_finite;
use crate::math;
use crate::{Error, Result};

/// Largest |z| accepted by [`bessel_j`] and [`BesselTable`].
pub const MAX_ARGUMENT: f64 = 1.0e6;

const RESCALE_ABOVE: f64 = 1.0e200;
// Below this the leading power-series term is exact in double precision.
const TINY_ARGUMENT: f64 = 1.0e-150;

/// Order beyond which |J_k(z)| is below ~1e-20 for every k.
pub fn significant_order(z: f64) -> usize {
    let z = math::abs(z);
    if z == 0.0 {
        return 0;
    }
    math::ceil(z + 15.0 * math::cbrt(z) + 40.0) as usize
}

fn check_argument(z: f64) -> Result<f64> {
    let z = ensure_finite("Bessel argument must be finite", z)?;
    if math::abs(z) > MAX_ARGUMENT {
        return Err(Error::Domain {
            what: "Bessel argument exceeds MAX_ARGUMENT",
            value: z,
        });
    }
    Ok(z)
}

/// Integer-order Bessel function of the first kind J_n(z).
///
/// Orders up to |z| use forward recurrence seeded with J₀ and J₁; larger
/// orders use Miller's downward recurrence normalized by
/// J₀ + 2ΣJ_{2k} = 1. Negative orders and arguments follow
/// J_{-n}(z) = J_n(−z) = (−1)ⁿ J_n(z).
pub fn bessel_j(n: i64, z: f64) -> Result<f64> {
    let z = check_argument(z)?;
    let order = n.unsigned_abs();
    let mut sign = 1.0;
    if order % 2 == 1 && (n < 0) != (z < 0.0) {
        sign = -1.0;
    }
    let x = math::abs(z);
    if x == 0.0 {
        return Ok(if order == 0 { 1.0 } else { 0.0 });
    }
    let value = match order {
        0 => libm::j0(x),
        1 => libm::j1(x),
        _ if (order as f64) <= x => forward(order as usize, x),
        _ => *miller(x, order as usize).last().expect("non-empty"),
    };
    Ok(sign * value)
}

fn forward(order: usize, x: f64) -> f64 {
    let mut prev = libm::j0(x);
    let mut cur = libm::j1(x);
    for k in 1..order {
        let next = (2.0 * k as f64 / x) * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// J_0..=J_{n_max}(x) for x > 0 by Miller's algorithm.
fn miller(x: f64, n_max: usize) -> Vec<f64> {
    if x < TINY_ARGUMENT {
        let mut out = vec![1.0; n_max + 1];
        for k in 1..=n_max {
            out[k] = out[k - 1] * (x / (2.0 * k as f64));
        }
        return out;
    }
    let top = (n_max as f64).max(x).max(1.0);
    let mut start = math::ceil(top + 20.0 + math::sqrt(160.0 * top)) as usize;
    start += start % 2;

    let mut out = vec![0.0; n_max + 1];
    let mut above = 0.0; // f_{k+1}
    let mut cur = 1.0e-30; // f_k
    let mut norm = 0.0;
    let mut k = start;
    loop {
        if k <= n_max {
            out[k] = cur;
        }
        if k.is_multiple_of(2) {
            norm += if k == 0 { cur } else { 2.0 * cur };
        }
        if k == 0 {
            break;
        }
        let factor = 2.0 * k as f64 / x;
        if math::abs(cur) * factor > RESCALE_ABOVE {
            let scale = 1.0 / math::abs(cur);
            cur *= scale;
            above *= scale;
            norm *= scale;
            for v in out.iter_mut().skip(k) {
                *v *= scale;
            }
        }
        let below = factor * cur - above;
        above = cur;
        cur = below;
        k -= 1;
    }
    for v in &mut out {
        *v /= norm;
    }
    out
}

/// J_0..=J_{n_max}(z) evaluated in one Miller sweep (sign of `z` applied).
pub fn bessel_j_sequence(z: f64, n_max: usize) -> Result<Vec<f64>> {
    let z = check_argument(z)?;
    if z == 0.0 {
        let mut v = vec![0.0; n_max + 1];
        v[0] = 1.0;
        return Ok(v);
    }
    let mut values = miller(math::abs(z), n_max);
    if z < 0.0 {
        for v in values.iter_mut().skip(1).step_by(2) {
            *v = -*v;
        }
    }
    Ok(values)
}

/// Precomputed J_k(z) for every order that is numerically significant.
///
/// Orders outside the table return zero; by construction they are below
/// 1e-20 in magnitude.
#[derive(Debug, Clone, PartialEq)]
pub struct BesselTable {
    argument: f64,
    values: Vec<f64>,
}

impl BesselTable {
    pub fn new(z: f64) -> Result<Self> {
        Self::with_max_order(z, significant_order(z))
    }

    pub fn with_max_order(z: f64, n_max: usize) -> Result<Self> {
        let values = bessel_j_sequence(z, n_max)?;
        Ok(Self {
            argument: z,
            values,
        })
    }

    pub fn argument(&self) -> f64 {
        self.argument
    }

    pub fn max_order(&self) -> usize {
        self.values.len() - 1
    }

    #[inline]
    pub fn get(&self, n: i64) -> f64 {
        let k = n.unsigned_abs() as usize;
        match self.values.get(k) {
            Some(&v) if n < 0 && k % 2 == 1 => -v,
            Some(&v) => v,
            None => 0.0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values_at_origin() {
        assert_eq!(bessel_j(0, 0.0).unwrap(), 1.0);
        assert_eq!(bessel_j(1, 0.0).unwrap(), 0.0);
        assert_eq!(bessel_j(-7, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn reference_values() {
        // Abramowitz & Stegun table 9.4
        let cases = [
            (2, 1.0, 0.114_903_484_931_900_5),
            (5, 10.0, -0.234_061_528_186_793_6),
            (10, 1.0, 2.630_615_123_687_453e-10),
            (3, 20.0, -0.098_901_394_560_449_58),
        ];
        for (n, z, want) in cases {
            let got = bessel_j(n, z).unwrap();
            assert!(
                (got - want).abs() <= 1e-14 * want.abs().max(1e-2),
                "J_{n}({z}) = {got}"
            );
        }
    }

    #[test]
    fn parity_in_order_and_argument() {
        for n in 0..12_i64 {
            let p = if n % 2 == 0 { 1.0 } else { -1.0 };
            let j = bessel_j(n, 3.7).unwrap();
            assert_eq!(bessel_j(-n, 3.7).unwrap(), p * j);
            assert_eq!(bessel_j(n, -3.7).unwrap(), p * j);
        }
    }

    #[test]
    fn agrees_with_libm_jn() {
        for &z in &[0.3, 2.5, 17.0, 49.5, 310.0] {
            for n in 0..80 {
                let ours = bessel_j(n, z).unwrap();
                let theirs = libm::jn(n as i32, z);
                assert!(
                    (ours - theirs).abs() < 1e-13,
                    "n={n} z={z}: {ours} vs {theirs}"
                );
            }
        }
    }

    #[test]
    fn sequence_matches_pointwise() {
        for &z in &[0.01, 1.0, 7.3, 29.9, -4.2] {
            let seq = bessel_j_sequence(z, 60).unwrap();
            for (n, &v) in seq.iter().enumerate() {
                let p = bessel_j(n as i64, z).unwrap();
                assert!((v - p).abs() < 2e-15, "n={n} z={z}: {v} vs {p}");
            }
        }
    }

    #[test]
    fn table_is_zero_outside_range() {
        let t = BesselTable::new(2.0).unwrap();
        assert_eq!(t.get(t.max_order() as i64 + 5), 0.0);
        assert!(t.get(t.max_order() as i64).abs() < 1e-20);
        assert_eq!(t.get(-3), -t.get(3));
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(matches!(bessel_j(0, f64::NAN), Err(Error::Domain { .. })));
        assert!(matches!(
            bessel_j(2, 2.0 * MAX_ARGUMENT),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn tiny_arguments_underflow_cleanly() {
        let v = bessel_j(40, 1e-12).unwrap();
        assert_eq!(v, 0.0);
        let v = bessel_j(3, 1e-100).unwrap();
        assert!(v > 0.0 && v < 1e-300);
    }
}
