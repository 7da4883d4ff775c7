#![allow(clippy::excessive_precision)]

//! Globally adaptive Gauss–Kronrod (G10/K21) quadrature on finite intervals.

use alloc::vec::Vec;

use crate::math;
use crate::{Error, Result};

const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_208_067_085_863,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

// Gauss weights for the odd-indexed Kronrod abscissae.
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

/// Stopping rule for [`integrate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub absolute: f64,
    pub relative: f64,
    pub max_segments: usize,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            absolute: 1e-12,
            relative: 1e-12,
            max_segments: 2000,
        }
    }
}

impl Tolerance {
    pub fn new(absolute: f64, relative: f64) -> Self {
        Self {
            absolute,
            relative,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
    pub segments: usize,
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    lo: f64,
    hi: f64,
    value: f64,
    error: f64,
}

/// One K21 panel on `[lo, hi]`, returning `(kronrod, |kronrod − gauss|)`.
pub fn kronrod21<F: FnMut(f64) -> f64>(f: &mut F, lo: f64, hi: f64) -> (f64, f64) {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = f(center);
    let mut kronrod = fc * WGK[10];
    let mut gauss = 0.0;
    for (j, (&x, &w)) in XGK.iter().zip(WGK.iter()).take(10).enumerate() {
        let dx = half * x;
        let pair = f(center - dx) + f(center + dx);
        kronrod += w * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    (kronrod * half, math::abs((kronrod - gauss) * half))
}

/// Integrates `f` over `[lo, hi]`, bisecting the worst panel until the summed
/// error estimate drops below `max(absolute, relative·|I|)`.
pub fn integrate<F: FnMut(f64) -> f64>(
    mut f: F,
    lo: f64,
    hi: f64,
    tol: Tolerance,
) -> Result<Estimate> {
    if lo == hi {
        return Ok(Estimate {
            value: 0.0,
            error: 0.0,
            segments: 0,
        });
    }
    let (value, error) = kronrod21(&mut f, lo, hi);
    let mut segments = Vec::with_capacity(64);
    segments.push(Segment {
        lo,
        hi,
        value,
        error,
    });
    let mut total = value;
    let mut total_err = error;

    loop {
        let target = tol.absolute.max(tol.relative * math::abs(total));
        if total_err <= target {
            break;
        }
        if segments.len() >= tol.max_segments {
            return Err(Error::Quadrature {
                estimate: total,
                error_estimate: total_err,
            });
        }
        let worst = segments
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.error.total_cmp(&b.1.error))
            .map(|(i, _)| i)
            .expect("at least one segment");
        let seg = segments.swap_remove(worst);
        let mid = 0.5 * (seg.lo + seg.hi);
        if mid <= seg.lo || mid >= seg.hi {
            // Interval can no longer be split in floating point.
            return Err(Error::Quadrature {
                estimate: total,
                error_estimate: total_err,
            });
        }
        let (v1, e1) = kronrod21(&mut f, seg.lo, mid);
        let (v2, e2) = kronrod21(&mut f, mid, seg.hi);
        total += v1 + v2 - seg.value;
        total_err += e1 + e2 - seg.error;
        segments.push(Segment {
            lo: seg.lo,
            hi: mid,
            value: v1,
            error: e1,
        });
        segments.push(Segment {
            lo: mid,
            hi: seg.hi,
            value: v2,
            error: e2,
        });
    }

    // Re-sum to shed the drift accumulated by the incremental updates.
    let value = segments.iter().map(|s| s.value).sum();
    let error = segments.iter().map(|s| s.error).sum();
    Ok(Estimate {
        value,
        error,
        segments: segments.len(),
    })
}

/// Sums fixed K21 panels of width `panel` over `[lo, hi]`. Suited to long
/// oscillatory ranges where each panel spans about one period.
pub fn integrate_panels<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64, panel: f64) -> f64 {
    let count = math::ceil((hi - lo) / panel).max(1.0) as usize;
    let width = (hi - lo) / count as f64;
    (0..count)
        .map(|k| {
            let a = lo + k as f64 * width;
            kronrod21(&mut f, a, a + width).0
        })
        .sum()
}
