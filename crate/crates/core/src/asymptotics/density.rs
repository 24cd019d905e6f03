use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::combo::GammaSpec;
use crate::error::{Error, Result};

use super::roots::combo_roots;

/// Limiting zero density `(1/2pi) sqrt((4 - x)/x)` on `(0, 4)`.
pub fn limit_density(x: f64) -> f64 {
    if x <= 0.0 || x >= 4.0 {
        0.0
    } else {
        libm::sqrt((4.0 - x) / x) / (2.0 * PI)
    }
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

fn adaptive(f: &dyn Fn(f64) -> f64, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, eps: f64, depth: u32) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * eps {
        left + right + delta / 15.0
    } else {
        adaptive(f, a, m, fa, flm, fm, left, eps / 2.0, depth - 1)
            + adaptive(f, m, b, fm, frm, fb, right, eps / 2.0, depth - 1)
    }
}

/// Adaptive Simpson quadrature of `f` on `[a, b]` to absolute accuracy `eps`.
pub fn integrate(f: &dyn Fn(f64) -> f64, a: f64, b: f64, eps: f64) -> f64 {
    let fa = f(a);
    let fb = f(b);
    let fm = f(0.5 * (a + b));
    let whole = simpson(a, b, fa, fm, fb);
    adaptive(f, a, b, fa, fm, fb, whole, eps, 48)
}

/// Mass of the limiting density on `[a, b]`, integrated in `t = sqrt(x)`
/// where the integrand `sqrt(4 - t^2)/pi` has no singularity at the origin.
pub fn density_mass(a: f64, b: f64) -> f64 {
    let a = a.clamp(0.0, 4.0);
    let b = b.clamp(0.0, 4.0);
    if b <= a {
        return 0.0;
    }
    let g = |t: f64| libm::sqrt((4.0 - t * t).max(0.0)) / PI;
    integrate(&g, libm::sqrt(a), libm::sqrt(b), 1e-13)
}

#[derive(Clone, Debug, PartialEq)]
pub struct DensityReport {
    pub n: usize,
    /// Fraction of the `n` zeros whose scaled value `xi/n` falls in each bin
    /// of `[0, 4]`.
    pub empirical: Vec<f64>,
    pub expected: Vec<f64>,
    /// Total-variation distance, counting mass outside `[0, 4]` as mismatch.
    pub total_variation: f64,
}

/// Histogram of the scaled real zeros `xi/n` of `q_n` against the bin
/// masses of the limiting density.
pub fn density_compare(spec: &GammaSpec, n: usize, bins: usize) -> Result<DensityReport> {
    if n < 50 {
        return Err(Error::InvalidArgument("density comparison needs n >= 50".into()));
    }
    if bins == 0 {
        return Err(Error::InvalidArgument("bins must be positive".into()));
    }
    let width = 4.0 / bins as f64;
    let expected: Vec<f64> =
        (0..bins).map(|b| density_mass(b as f64 * width, (b + 1) as f64 * width)).collect();
    let mut counts = alloc::vec![0usize; bins];
    for z in combo_roots(spec, n)? {
        if z.im.abs() > 1e-7 * (1.0 + z.norm()) {
            continue;
        }
        let x = z.re / n as f64;
        if (0.0..=4.0).contains(&x) {
            counts[((x / width) as usize).min(bins - 1)] += 1;
        }
    }
    let empirical: Vec<f64> = counts.iter().map(|&c| c as f64 / n as f64).collect();
    let inside: f64 = empirical.iter().sum();
    let total_variation = 0.5
        * empirical.iter().zip(&expected).map(|(e, m)| (e - m).abs()).sum::<f64>()
        + 0.5 * (1.0 - inside);
    Ok(DensityReport { n, empirical, expected, total_variation })
}
