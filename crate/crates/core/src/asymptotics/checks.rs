use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::{LN_2, PI};

use num_traits::{One, Zero};

use crate::combo::GammaSpec;
use crate::error::{Error, Result};
use crate::laguerre::{laguerre, Family};
use crate::ratpoly::{rational_to_f64, scaled_ratio, Poly, Rational};

use super::phi::phi_map;
use super::special::hyper01;
use super::ComplexF;

/// An exact complex number with rational parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational { re, im: Rational::zero() }
    }

    pub fn to_complex(&self) -> ComplexF {
        ComplexF::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }

    fn scale(&self, s: &Rational) -> Self {
        GaussianRational { re: &self.re * s, im: &self.im * s }
    }

    /// Natural logarithm of a nonzero value, computed without overflow.
    pub fn ln(&self) -> Result<ComplexF> {
        if self.re.is_zero() && self.im.is_zero() {
            return Err(Error::InvalidArgument("logarithm of zero".into()));
        }
        let part = |r: &Rational| {
            if r.is_zero() {
                (0.0, i64::MIN)
            } else {
                scaled_ratio(r.numer(), r.denom())
            }
        };
        let (mr, er) = part(&self.re);
        let (mi, ei) = part(&self.im);
        let e = er.max(ei);
        let shift = |m: f64, x: i64| if x == i64::MIN { 0.0 } else { m * libm::exp2((x - e) as f64) };
        let m = ComplexF::new(shift(mr, er), shift(mi, ei));
        Ok(m.ln() + e as f64 * LN_2)
    }
}

/// Exact value of `p` at a Gaussian rational, by Horner's rule.
pub fn eval_gaussian(p: &Poly, z: &GaussianRational) -> GaussianRational {
    let mut re = Rational::zero();
    let mut im = Rational::zero();
    for c in p.coeffs().iter().rev() {
        let nr = &(&re * &z.re - &im * &z.im) + c;
        let ni = &re * &z.im + &im * &z.re;
        re = nr;
        im = ni;
    }
    GaussianRational { re, im }
}

fn principal_pow(z: ComplexF, a: f64) -> ComplexF {
    if a == 0.0 {
        ComplexF::one()
    } else {
        (z.ln() * a).exp()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MehlerHeineRow {
    pub n: usize,
    /// Largest absolute error over the grid.
    pub max_error: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MehlerHeineReport {
    /// Set when the check does not apply to the spec.
    pub skipped: Option<String>,
    pub rows: Vec<MehlerHeineRow>,
    /// Error at the last `n` is below the error at the first.
    pub decays: bool,
}

impl MehlerHeineReport {
    fn skip(reason: &str) -> Self {
        MehlerHeineReport { skipped: Some(reason.into()), rows: Vec::new(), decays: false }
    }
}

/// Compares `q_n(z/n)`, suitably normalized, with `P(1) 0F1(-; alpha+1; -z)`.
///
/// The UnitAtZero family needs no normalizer; the Standard family is
/// multiplied by `Gamma(1 + alpha) / n^alpha`. Other families, `P(1) = 0`
/// and `alpha <= -1` are skipped with a reason.
pub fn check_mehler_heine(spec: &GammaSpec, n_list: &[usize], z_grid: &[f64]) -> Result<MehlerHeineReport> {
    let family = spec.family;
    if !matches!(family, Family::UnitAtZero | Family::Standard) {
        return Ok(MehlerHeineReport::skip("no Mehler-Heine limit for this normalization"));
    }
    let p1: Rational = spec.gamma().iter().sum();
    if p1.is_zero() {
        return Ok(MehlerHeineReport::skip("P(1) = 0: the limit vanishes identically"));
    }
    if spec.alpha <= Rational::from_integer((-1).into()) {
        return Ok(MehlerHeineReport::skip("alpha <= -1"));
    }
    let alpha = rational_to_f64(&spec.alpha);
    let p1 = rational_to_f64(&p1);
    let mut rows = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let q = spec.build_qn(n)?;
        let norm = match family {
            Family::Standard => libm::exp(libm::lgamma(1.0 + alpha) - alpha * libm::log(n as f64)),
            _ => 1.0,
        };
        let mut max_error: f64 = 0.0;
        for &z in z_grid {
            let x = Rational::from_float(z)
                .ok_or_else(|| Error::InvalidArgument("non-finite grid point".into()))?
                / Rational::from_integer(n.into());
            let v = rational_to_f64(&q.eval(&x)) * norm;
            max_error = max_error.max((v - p1 * hyper01(alpha, z)).abs());
        }
        rows.push(MehlerHeineRow { n, max_error });
    }
    let decays = match (rows.first(), rows.last()) {
        (Some(a), Some(b)) if rows.len() > 1 => b.max_error < a.max_error,
        _ => false,
    };
    Ok(MehlerHeineReport { skipped: None, rows, decays })
}

#[derive(Clone, Debug, PartialEq)]
pub struct OuterPoint {
    pub z: ComplexF,
    /// Left side: `q_n(nz)` after removing the exponential and power growth.
    pub observed: ComplexF,
    /// Right side: the limiting prefactor times `P(-phi(z))`.
    pub predicted: ComplexF,
    pub relative_error: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OuterReport {
    pub skipped: Option<String>,
    pub n: usize,
    pub points: Vec<OuterPoint>,
}

impl OuterReport {
    pub fn max_error(&self) -> f64 {
        self.points.iter().map(|p| p.relative_error).fold(0.0, f64::max)
    }
}

/// Relative distance between two numbers given by their logarithms.
fn log_relative_error(ln_observed: ComplexF, ln_predicted: ComplexF) -> f64 {
    ((ln_observed - ln_predicted).exp() - 1.0).norm()
}

/// Evaluates `q_n(nz)` exactly at each Gaussian-rational grid point and
/// compares it with the outer asymptotic of the UnitAtZero or Standard
/// family. Grid points on the slit `[0, 4]` are rejected.
pub fn check_outer_asymptotic(spec: &GammaSpec, n: usize, z_grid: &[GaussianRational]) -> Result<OuterReport> {
    let family = spec.family;
    if !matches!(family, Family::UnitAtZero | Family::Standard) {
        return Ok(OuterReport {
            skipped: Some("no outer asymptotic for this normalization".into()),
            n,
            points: Vec::new(),
        });
    }
    let alpha = rational_to_f64(&spec.alpha);
    let k = spec.k() as f64;
    let nf = n as f64;
    let q = spec.build_qn(n)?;
    let p = spec.companion_p();
    let mut points = Vec::with_capacity(z_grid.len());
    for zg in z_grid {
        let z = zg.to_complex();
        let phi = phi_map(z)?;
        let s = 2.0 * phi - z + 2.0;
        let quarter = s.sqrt();
        let p_val = eval_complex(&p, -phi);
        let common = principal_pow(1.0 + phi, alpha) / (principal_pow(z, alpha) * quarter)
            * p_val
            * if spec.k().is_multiple_of(2) { 1.0 } else { -1.0 };
        let (predicted, ln_scale) = match family {
            Family::UnitAtZero => (
                common * libm::tgamma(1.0 + alpha) / principal_pow(phi, k - 0.5),
                0.5 * libm::log(2.0 * PI) + (alpha + 0.5) * libm::log(nf),
            ),
            _ => (common * principal_pow(phi, 0.5 - k), 0.5 * libm::log(2.0 * PI * nf)),
        };
        let value = eval_gaussian(&q, &zg.scale(&Rational::from_integer(n.into())));
        let ln_q = value.ln()?;
        let sign = if n.is_multiple_of(2) { 0.0 } else { PI };
        let ln_obs = ln_q + ln_scale - nf * (phi.ln() + z / (1.0 + phi)) + ComplexF::new(0.0, sign);
        let observed = ln_obs.exp();
        let relative_error = log_relative_error(ln_obs, predicted.ln());
        points.push(OuterPoint { z, observed, predicted, relative_error });
    }
    Ok(OuterReport { skipped: None, n, points })
}

/// `p(z)` in floats; only for low-degree polynomials.
fn eval_complex(p: &Poly, z: ComplexF) -> ComplexF {
    p.coeffs()
        .iter()
        .rev()
        .fold(ComplexF::zero(), |acc, c| acc * z + rational_to_f64(c))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RatioCheck {
    pub observed: ComplexF,
    pub predicted: ComplexF,
    pub relative_error: f64,
}

/// `L_{n-1}^alpha(nz) / L_n^alpha(nz)` against its limit `-1/phi(z)`.
pub fn check_ratio_limit(alpha: &Rational, n: usize, z: &GaussianRational) -> Result<RatioCheck> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let phi = phi_map(z.to_complex())?;
    let x = z.scale(&Rational::from_integer(n.into()));
    let a = eval_gaussian(&laguerre(n - 1, alpha, Family::Standard)?, &x).ln()?;
    let b = eval_gaussian(&laguerre(n, alpha, Family::Standard)?, &x).ln()?;
    let predicted = -phi.inv();
    let observed = (a - b).exp();
    Ok(RatioCheck { observed, predicted, relative_error: log_relative_error(a - b, predicted.ln()) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::{int, rat};
    use alloc::vec;

    fn real(n: i64) -> GaussianRational {
        GaussianRational::real(int(n))
    }

    #[test]
    fn gaussian_horner_and_log() {
        // (x^2 + 1) at 1 + 2i is -2 + 4i
        let p = Poly::from_ints(&[1, 0, 1]);
        let v = eval_gaussian(&p, &GaussianRational::new(int(1), int(2)));
        assert_eq!(v, GaussianRational::new(int(-2), int(4)));
        let l = v.ln().unwrap();
        assert!((l - ComplexF::new(-2.0, 4.0).ln()).norm() < 1e-14);
        // 10^400 stays finite through the scaled logarithm
        let big = GaussianRational::real(Rational::from_integer(num_bigint::BigInt::from(10u8).pow(400)));
        assert!((big.ln().unwrap().re - 400.0 * libm::log(10.0)).abs() < 1e-9);
    }

    #[test]
    fn mehler_heine_single_laguerre() {
        let spec = GammaSpec::new(vec![int(1)], int(0), Family::Standard).unwrap();
        let r = check_mehler_heine(&spec, &[200], &[1.0]).unwrap();
        assert!(r.rows[0].max_error < 1e-2, "{:?}", r);
    }

    #[test]
    fn mehler_heine_decays() {
        let grid = [0.5, 1.0, 2.0, 5.0];
        for family in [Family::Standard, Family::UnitAtZero] {
            let spec = GammaSpec::new(vec![int(1), rat(-1, 2)], rat(1, 2), family).unwrap();
            let r = check_mehler_heine(&spec, &[100, 400], &grid).unwrap();
            assert!(r.decays, "{family}: {:?}", r);
        }
    }

    #[test]
    fn mehler_heine_skips() {
        let spec = GammaSpec::new(vec![int(1), int(-1)], int(0), Family::Standard).unwrap();
        assert!(check_mehler_heine(&spec, &[50], &[1.0]).unwrap().skipped.is_some());
        let spec = GammaSpec::new(vec![int(1)], int(0), Family::Brenke).unwrap();
        assert!(check_mehler_heine(&spec, &[50], &[1.0]).unwrap().skipped.is_some());
    }

    #[test]
    fn ratio_limit() {
        let r = check_ratio_limit(&int(0), 300, &real(6)).unwrap();
        assert!(r.relative_error < 0.05, "{:?}", r);
    }

    #[test]
    fn outer_prefactor_both_families() {
        for family in [Family::UnitAtZero, Family::Standard] {
            let spec = GammaSpec::new(vec![int(1), rat(-1, 2)], int(0), family).unwrap();
            let r = check_outer_asymptotic(&spec, 300, &[real(6)]).unwrap();
            assert!(r.max_error() < 0.1, "{family}: {:?}", r);
        }
    }

    #[test]
    fn outer_error_decreases_off_axis() {
        let grid = vec![real(6), GaussianRational::new(int(2), int(3)), GaussianRational::new(rat(-1, 2), int(1))];
        for family in [Family::UnitAtZero, Family::Standard] {
            let spec = GammaSpec::new(vec![int(1), int(2), rat(1, 3)], rat(1, 2), family).unwrap();
            let a = check_outer_asymptotic(&spec, 100, &grid).unwrap();
            let b = check_outer_asymptotic(&spec, 400, &grid).unwrap();
            for (x, y) in a.points.iter().zip(&b.points) {
                assert!(y.relative_error < x.relative_error, "{family}: {:?} {:?}", x, y);
            }
            assert!(b.max_error() < 0.05, "{family}: {:?}", b);
        }
    }

    #[test]
    fn slit_rejected() {
        let spec = GammaSpec::new(vec![int(1)], int(0), Family::Standard).unwrap();
        assert!(check_outer_asymptotic(&spec, 10, &[real(2)]).is_err());
    }
}
