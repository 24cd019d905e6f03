use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::combo::GammaSpec;
use crate::error::{Error, Result};
use crate::laguerre::Family;
use crate::ratpoly::{rational_to_f64, Poly};
use crate::zeros::{analyze_zeros, ZeroReport};

use super::eval::{ComboEvaluator, MonomialEvaluator};
use super::phi::outer_limit;
use super::ComplexF;

/// Iteration controls for the simultaneous root finder.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AberthOptions {
    pub max_iter: usize,
    /// A root is converged once its correction is below `tol |z|`.
    pub tol: f64,
    /// Corrections below `floor |z|` that stop shrinking are treated as the
    /// rounding-noise level and also count as converged.
    pub floor: f64,
}

impl Default for AberthOptions {
    fn default() -> Self {
        AberthOptions { max_iter: 800, tol: 1e-14, floor: 1e-10 }
    }
}

/// Aberth-Ehrlich iteration (Gauss-Seidel updates) driven by a Newton
/// correction `p/p'`.
pub fn aberth<F: Fn(ComplexF) -> ComplexF>(
    newton: F,
    mut z: Vec<ComplexF>,
    opts: AberthOptions,
) -> Result<Vec<ComplexF>> {
    let n = z.len();
    let mut done = alloc::vec![false; n];
    let mut prev = alloc::vec![f64::INFINITY; n];
    for _ in 0..opts.max_iter {
        let mut active = 0;
        for i in 0..n {
            if done[i] {
                continue;
            }
            let nw = newton(z[i]);
            if !nw.re.is_finite() || !nw.im.is_finite() {
                // critical point of p: step aside
                let r = z[i].norm();
                z[i] += ComplexF::new(1e-8 * (1.0 + r), 1e-8);
                active += 1;
                continue;
            }
            let mut s = ComplexF::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    s += (z[i] - z[j]).inv();
                }
            }
            let w = nw / (ComplexF::new(1.0, 0.0) - nw * s);
            z[i] -= w;
            let scale = z[i].norm().max(1e-300);
            let step = w.norm();
            let stalled = step <= opts.floor * scale && step >= 0.5 * prev[i];
            prev[i] = step;
            if step <= opts.tol * scale || nw.norm() == 0.0 || stalled {
                done[i] = true;
            } else {
                active += 1;
            }
        }
        if active == 0 {
            return Ok(z);
        }
    }
    let unconverged = done.iter().filter(|d| !**d).count();
    Err(Error::NonConvergence { iterations: opts.max_iter, unconverged })
}

fn circle(count: usize, center: ComplexF, radius: f64, phase: f64) -> Vec<ComplexF> {
    (0..count)
        .map(|k| {
            let t = 2.0 * PI * k as f64 / count as f64 + phase;
            center + ComplexF::new(radius * libm::cos(t), radius * libm::sin(t))
        })
        .collect()
}

/// All complex roots of an exact polynomial.
pub fn complex_roots(p: &Poly) -> Result<Vec<ComplexF>> {
    let ev = MonomialEvaluator::new(p)?;
    let d = ev.degree();
    if d == 0 {
        return Ok(Vec::new());
    }
    let init = circle(d, ComplexF::new(0.0, 0.0), 1.0, 0.4);
    let y = aberth(|y| ev.newton(y), init, AberthOptions::default())?;
    let s = ev.scale();
    let mut out: Vec<ComplexF> = y.into_iter().map(|v| v * s).collect();
    sort_lex(&mut out);
    Ok(out)
}

/// Sorts by real part, then imaginary part.
pub fn sort_lex(z: &mut [ComplexF]) {
    z.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
}

/// `x` in `[0, 4]` with `F(x) = u` for the distribution function of the
/// density `(1/2pi) sqrt((4-x)/x)`; `F = (2t + sin 2t)/pi` with `x = 4 sin^2 t`.
pub fn density_quantile(u: f64) -> f64 {
    let (mut lo, mut hi) = (0.0, PI / 2.0);
    for _ in 0..60 {
        let m = 0.5 * (lo + hi);
        if (2.0 * m + libm::sin(2.0 * m)) / PI < u {
            lo = m;
        } else {
            hi = m;
        }
    }
    let s = libm::sin(0.5 * (lo + hi));
    4.0 * s * s
}

/// Starting points for the zeros of `q_n`: outliers predicted from the zeros
/// of `P` plus the remaining points spread by the limiting zero density,
/// nudged off the real axis.
pub fn initial_guesses(spec: &GammaSpec, n: usize) -> Vec<ComplexF> {
    let nf = n as f64;
    let mut out = Vec::with_capacity(n);
    if spec.family != Family::Monic && spec.k() > 0 {
        if let Ok(thetas) = complex_roots(&spec.companion_p()) {
            for t in thetas {
                let g = match spec.family {
                    Family::Brenke => Some(-t * nf * nf),
                    _ if t.norm() > 1.0 + 1e-9 => Some(outer_limit(t) * nf),
                    _ => None,
                };
                if let Some(g) = g {
                    if out.len() < n {
                        out.push(g + ComplexF::new(0.0, if t.im == 0.0 { 1e-3 * (1.0 + g.norm()) } else { 0.0 }));
                    }
                }
            }
        }
    }
    let bulk = n - out.len();
    for k in 0..bulk {
        let x = density_quantile((k as f64 + 0.5) / bulk as f64) * nf;
        let gap = 4.0 * nf / bulk as f64;
        let im = if k % 2 == 0 { 0.1 } else { -0.1 } * gap.min(x.max(1e-3));
        out.push(ComplexF::new(x, im));
    }
    out
}

/// All zeros of `q_n` in floating point, through the recurrence evaluator.
pub fn combo_roots(spec: &GammaSpec, n: usize) -> Result<Vec<ComplexF>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    if n <= 24 {
        // small degrees: exact coefficients are cheap and well scaled
        return complex_roots(&spec.build_qn(n)?);
    }
    let ev = ComboEvaluator::new(spec, n)?;
    let mut z = aberth(|x| ev.newton(x), initial_guesses(spec, n), AberthOptions::default())?;
    sort_lex(&mut z);
    Ok(z)
}

/// Approximate real zeros of `q_n`, for seeding a sign-change certificate.
pub fn approx_real_zeros(spec: &GammaSpec, n: usize) -> Option<Vec<f64>> {
    combo_roots(spec, n).ok().map(|z| nearly_real(&z, 1e-7))
}

/// Real parts of the roots whose imaginary part is below `tol (1 + |z|)`.
pub fn nearly_real(z: &[ComplexF], tol: f64) -> Vec<f64> {
    z.iter().filter(|w| w.im.abs() <= tol * (1.0 + w.norm())).map(|w| w.re).collect()
}

/// Checks that every certified isolating interval contains exactly one of the
/// returned roots with small imaginary part (as many as its multiplicity),
/// and that the total count matches the degree. Each nearly real root goes
/// to an exact root within tolerance if there is one, else to the closest
/// interval.
pub fn cross_validate(roots: &[ComplexF], report: &ZeroReport, tol: f64) -> bool {
    if roots.len() != report.degree {
        return false;
    }
    let real = nearly_real(roots, tol);
    if real.len() != report.real_count {
        return false;
    }
    let ivs: Vec<(f64, f64)> = report
        .roots
        .iter()
        .map(|r| (rational_to_f64(&r.interval.lo), rational_to_f64(&r.interval.hi)))
        .collect();
    let mut counts = alloc::vec![0usize; ivs.len()];
    for x in real {
        let dist = |&(lo, hi): &(f64, f64)| if x < lo { lo - x } else if x > hi { x - hi } else { 0.0 };
        let slack = tol * (1.0 + x.abs());
        let exact = (0..ivs.len()).find(|&i| ivs[i].0 == ivs[i].1 && dist(&ivs[i]) <= slack);
        let best = exact.or_else(|| (0..ivs.len()).min_by(|&i, &j| dist(&ivs[i]).total_cmp(&dist(&ivs[j]))));
        let Some(i) = best else { return false };
        if dist(&ivs[i]) > slack {
            return false;
        }
        counts[i] += 1;
    }
    counts.iter().zip(&report.roots).all(|(c, r)| *c == r.multiplicity)
}

/// Exact report plus numeric roots of an exact polynomial, cross-validated.
pub fn validated_roots(p: &Poly) -> Result<(Vec<ComplexF>, ZeroReport, bool)> {
    let roots = complex_roots(p)?;
    let rep = analyze_zeros(p, &[])?;
    let ok = cross_validate(&roots, &rep, 1e-7);
    Ok((roots, rep, ok))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::{int, rat, Rational};
    use alloc::vec;

    #[test]
    fn small_examples() {
        let r = complex_roots(&Poly::from_ints(&[1, 0, 1])).unwrap();
        assert!((r[0] - ComplexF::new(0.0, -1.0)).norm() < 1e-12);
        assert!((r[1] - ComplexF::new(0.0, 1.0)).norm() < 1e-12);
        let r = complex_roots(&Poly::from_ints(&[2, -4, 1])).unwrap();
        let s2 = libm::sqrt(2.0);
        assert!((r[0].re - (2.0 - s2)).abs() < 1e-12 && r[0].im.abs() < 1e-12);
        assert!((r[1].re - (2.0 + s2)).abs() < 1e-12 && r[1].im.abs() < 1e-12);
    }

    #[test]
    fn degree_twenty_product_matches_certified_intervals() {
        let roots: Vec<Rational> = (0..20).map(|k| rat(3 * k - 29, 4)).collect();
        let p = Poly::from_roots(&roots);
        let (r, rep, ok) = validated_roots(&p).unwrap();
        assert_eq!(r.len(), 20);
        assert_eq!(rep.real_count, 20);
        assert!(ok);
    }

    #[test]
    fn quantile_inverts_cdf() {
        assert!(density_quantile(0.0) < 1e-12);
        assert!((density_quantile(1.0) - 4.0).abs() < 1e-9);
        // F(2) = 1/2 + 1/pi
        let u = 0.5 + 1.0 / PI;
        assert!((density_quantile(u) - 2.0).abs() < 1e-9);
    }

    #[test]
    fn combo_roots_agree_with_exact_zeros_at_moderate_degree() {
        let spec = GammaSpec::new(vec![int(1), int(-3)], int(0), Family::UnitAtZero).unwrap();
        let n = 40;
        let z = combo_roots(&spec, n).unwrap();
        let rep = analyze_zeros(&spec.build_qn(n).unwrap(), &[]).unwrap();
        assert!(cross_validate(&z, &rep, 1e-8));
    }

    #[test]
    fn brenke_with_non_real_pair() {
        let spec = GammaSpec::new(vec![int(1), int(0), int(4)], int(0), Family::Brenke).unwrap();
        let z = combo_roots(&spec, 30).unwrap();
        assert_eq!(z.len(), 30);
        let non_real = z.iter().filter(|w| w.im.abs() > 1e-6 * (1.0 + w.norm())).count();
        assert_eq!(non_real, 2);
    }
}
