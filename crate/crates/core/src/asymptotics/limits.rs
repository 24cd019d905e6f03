use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::combo::GammaSpec;
use crate::error::{Error, Result};
use crate::laguerre::Family;
use crate::ratpoly::{rat, rational_to_f64, Rational};
use crate::zeros::{analyze_zeros, certify_by_sign_changes};

use super::phi::outer_limit;
use super::roots::{combo_roots, complex_roots, sort_lex};
use super::special::bessel_zero_scaled;
use super::ComplexF;

/// Margin by which non-real zeros of `P` must clear the closed unit disk.
pub const DISK_MARGIN: f64 = 1e-6;

/// Number of leftmost zeros predicted by [`verify_zero_limits`].
pub const DEFAULT_LEFTMOST: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PredictionKind {
    LeftmostBessel,
    Negative,
    RightmostPositive,
    NonReal,
}

impl PredictionKind {
    pub fn name(self) -> &'static str {
        match self {
            PredictionKind::LeftmostBessel => "leftmost",
            PredictionKind::Negative => "negative",
            PredictionKind::RightmostPositive => "rightmost",
            PredictionKind::NonReal => "non-real",
        }
    }
}

/// How a zero is scaled before it is compared with its limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scaling {
    /// `xi / n`
    N,
    /// `xi / n^2`
    NSquared,
    /// `n xi`
    NTimesXi,
    /// `xi / (n + 1)`
    NPlusOne,
}

impl Scaling {
    pub fn apply(self, xi: ComplexF, n: usize) -> ComplexF {
        let nf = n as f64;
        match self {
            Scaling::N => xi / nf,
            Scaling::NSquared => xi / (nf * nf),
            Scaling::NTimesXi => xi * nf,
            Scaling::NPlusOne => xi / (nf + 1.0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Scaling::N => "xi/n",
            Scaling::NSquared => "xi/n^2",
            Scaling::NTimesXi => "n*xi",
            Scaling::NPlusOne => "xi/(n+1)",
        }
    }
}

/// Predicted limit of one scaled zero.
///
/// `index` counts real zeros from the left for leftmost and negative zeros,
/// from the right for rightmost ones, and non-real zeros in increasing
/// lexicographic order of their limits.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AsymptoticPrediction {
    pub kind: PredictionKind,
    pub index: usize,
    pub scaling: Scaling,
    pub limit: ComplexF,
}

/// Zeros of the companion `P`: real ones in decreasing order with
/// multiplicity, non-real ones in floats.
#[derive(Clone, Debug, PartialEq)]
pub struct CompanionZeros {
    pub real: Vec<f64>,
    pub non_real: Vec<ComplexF>,
}

pub fn companion_zeros(spec: &GammaSpec) -> Result<CompanionZeros> {
    let p = spec.companion_p();
    let mut rep = analyze_zeros(&p, &[])?;
    rep.refine(&rat(1, 1 << 50));
    let mut real = Vec::with_capacity(rep.real_count);
    for r in &rep.roots {
        for _ in 0..r.multiplicity {
            real.push(r.approx());
        }
    }
    real.reverse();
    let mut non_real = Vec::new();
    if rep.non_real_count > 0 {
        let all = complex_roots(&p)?;
        let mut cands: Vec<ComplexF> = all.into_iter().filter(|z| z.im != 0.0).collect();
        // the numerically least-real roots are the real ones
        cands.sort_by(|a, b| b.im.abs().total_cmp(&a.im.abs()));
        cands.truncate(rep.non_real_count);
        non_real = cands;
    }
    Ok(CompanionZeros { real, non_real })
}

/// Whether every non-real zero of `P` lies outside the closed unit disk,
/// with margin [`DISK_MARGIN`].
pub fn non_real_outside_unit_disk(spec: &GammaSpec) -> Result<bool> {
    let z = companion_zeros(spec)?;
    Ok(z.non_real.iter().all(|w| w.norm() > 1.0 + DISK_MARGIN))
}

fn check_hypotheses(spec: &GammaSpec) -> Result<()> {
    if spec.k() == 0 {
        return Err(Error::InvalidArgument("no companion zeros for K = 0".into()));
    }
    if spec.alpha <= -Rational::one() {
        return Err(Error::InvalidArgument("alpha must exceed -1".into()));
    }
    match spec.family {
        Family::Monic => Err(Error::InvalidArgument("zero limits are not provided for the Monic family".into())),
        Family::UnitAtZero | Family::Standard => {
            let p1: Rational = spec.gamma().iter().sum();
            if p1.is_zero() {
                return Err(Error::InvalidArgument("P(1) = 0".into()));
            }
            if !non_real_outside_unit_disk(spec)? {
                return Err(Error::InvalidArgument("non-real zeros of P inside the closed unit disk".into()));
            }
            Ok(())
        }
        Family::Brenke => Ok(()),
    }
}

/// Limits of the scaled zeros of `q_n`, with `leftmost` Bessel-type
/// predictions for the smallest positive zeros.
pub fn predict_zero_limits(spec: &GammaSpec, leftmost: usize) -> Result<Vec<AsymptoticPrediction>> {
    check_hypotheses(spec)?;
    let alpha = rational_to_f64(&spec.alpha);
    let cz = companion_zeros(spec)?;
    let brenke = spec.family == Family::Brenke;
    // real zeros giving negative zeros of q_n, and those giving rightmost ones
    let (neg, right): (Vec<f64>, Vec<f64>) = if brenke {
        (cz.real.iter().copied().filter(|t| *t > 0.0).collect(), cz.real.iter().copied().filter(|t| *t < 0.0).collect())
    } else {
        (cz.real.iter().copied().filter(|t| *t > 1.0).collect(), cz.real.iter().copied().filter(|t| *t < -1.0).collect())
    };
    let real_limit = |t: f64| if brenke { -t } else { outer_limit(ComplexF::new(t, 0.0)).re };
    let real_scaling = if brenke { Scaling::NSquared } else { Scaling::N };
    let mut out = Vec::new();
    for i in 1..=leftmost {
        out.push(AsymptoticPrediction {
            kind: PredictionKind::LeftmostBessel,
            index: neg.len() + i,
            scaling: Scaling::NTimesXi,
            limit: ComplexF::new(bessel_zero_scaled(alpha, i)?, 0.0),
        });
    }
    for (j, t) in neg.iter().enumerate() {
        out.push(AsymptoticPrediction {
            kind: PredictionKind::Negative,
            index: j + 1,
            scaling: real_scaling,
            limit: ComplexF::new(real_limit(*t), 0.0),
        });
    }
    // the most negative theta gives the largest zero
    for (r, t) in right.iter().rev().enumerate() {
        out.push(AsymptoticPrediction {
            kind: PredictionKind::RightmostPositive,
            index: r + 1,
            scaling: real_scaling,
            limit: ComplexF::new(real_limit(*t), 0.0),
        });
    }
    let mut nr: Vec<ComplexF> =
        cz.non_real.iter().map(|&t| if brenke { -t } else { outer_limit(t) }).collect();
    sort_lex(&mut nr);
    for (j, l) in nr.into_iter().enumerate() {
        out.push(AsymptoticPrediction {
            kind: PredictionKind::NonReal,
            index: j + 1,
            scaling: if brenke { Scaling::NSquared } else { Scaling::NPlusOne },
            limit: l,
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct LimitSample {
    pub n: usize,
    pub observed: ComplexF,
    pub relative_deviation: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LimitOutcome {
    pub prediction: AsymptoticPrediction,
    pub samples: Vec<LimitSample>,
    /// Deviation at the last `n` is below the deviation at the first.
    pub shrinks: bool,
    pub within_tolerance: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct StructuralFailure {
    pub n: usize,
    pub message: String,
}

/// Real-zero count of `q_n` at one `n` of the list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RealCount {
    pub n: usize,
    pub numeric: usize,
    /// Certified lower bound from sign changes of the exact polynomial.
    pub certified_lower: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ZeroLimitReport {
    pub tolerance: f64,
    pub outcomes: Vec<LimitOutcome>,
    pub counts: Vec<RealCount>,
    pub structural: Vec<StructuralFailure>,
}

impl ZeroLimitReport {
    pub fn passed(&self) -> bool {
        self.structural.is_empty() && self.outcomes.iter().all(|o| o.within_tolerance)
    }
}

/// Tolerance on `|Im xi|` relative to `1 + |xi|` below which a numeric zero
/// is taken as real.
const REAL_TOL: f64 = 1e-7;

/// Computes the zeros of `q_n` for each `n` of the list and compares the
/// scaled zeros with [`predict_zero_limits`]. Real zeros are counted with a
/// sign-change certificate on the exact polynomial; non-real zeros are
/// paired with predicted limits by nearest neighbour.
pub fn verify_zero_limits(spec: &GammaSpec, n_list: &[usize], tol: f64) -> Result<ZeroLimitReport> {
    let preds = predict_zero_limits(spec, DEFAULT_LEFTMOST)?;
    let n_nr = preds.iter().filter(|p| p.kind == PredictionKind::NonReal).count();
    let mut samples: Vec<Vec<LimitSample>> = alloc::vec![Vec::new(); preds.len()];
    let mut counts = Vec::new();
    let mut structural = Vec::new();
    for &n in n_list {
        let roots = combo_roots(spec, n)?;
        let is_real = |z: &ComplexF| z.im.abs() <= REAL_TOL * (1.0 + z.norm());
        let mut real: Vec<f64> = roots.iter().filter(|z| is_real(z)).map(|z| z.re).collect();
        real.sort_by(f64::total_cmp);
        let non_real: Vec<ComplexF> = roots.iter().copied().filter(|z| !is_real(z)).collect();
        let cert = certify_by_sign_changes(&spec.build_qn(n)?.to_int(), &real);
        counts.push(RealCount { n, numeric: real.len(), certified_lower: cert.sign_changes() });
        if n < spec.k() + n_nr || real.len() != n - n_nr || cert.sign_changes() != real.len() {
            structural.push(StructuralFailure {
                n,
                message: alloc::format!(
                    "expected {} real zeros, found {} numerically with {} certified",
                    n.saturating_sub(n_nr),
                    real.len(),
                    cert.sign_changes()
                ),
            });
            continue;
        }
        let mut taken = alloc::vec![false; non_real.len()];
        for (p, s) in preds.iter().zip(samples.iter_mut()) {
            let observed = match p.kind {
                PredictionKind::LeftmostBessel | PredictionKind::Negative => {
                    real.get(p.index - 1).map(|&x| ComplexF::new(x, 0.0))
                }
                PredictionKind::RightmostPositive => {
                    real.len().checked_sub(p.index).map(|i| ComplexF::new(real[i], 0.0))
                }
                PredictionKind::NonReal => {
                    let best = (0..non_real.len()).filter(|&i| !taken[i]).min_by(|&i, &j| {
                        let d = |k: usize| (p.scaling.apply(non_real[k], n) - p.limit).norm();
                        d(i).total_cmp(&d(j))
                    });
                    best.map(|i| {
                        taken[i] = true;
                        non_real[i]
                    })
                }
            };
            let Some(xi) = observed else {
                structural.push(StructuralFailure {
                    n,
                    message: alloc::format!("no zero for {} index {}", p.kind.name(), p.index),
                });
                continue;
            };
            let observed = p.scaling.apply(xi, n);
            let relative_deviation = (observed - p.limit).norm() / p.limit.norm().max(f64::MIN_POSITIVE);
            s.push(LimitSample { n, observed, relative_deviation });
        }
    }
    let outcomes = preds
        .into_iter()
        .zip(samples)
        .map(|(prediction, samples)| {
            let shrinks = samples.len() > 1
                && samples.last().unwrap().relative_deviation < samples[0].relative_deviation;
            let within_tolerance = samples.last().is_some_and(|s| s.relative_deviation <= tol);
            LimitOutcome { prediction, samples, shrinks, within_tolerance }
        })
        .collect();
    Ok(ZeroLimitReport { tolerance: tol, outcomes, counts, structural })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::int;
    use alloc::vec;

    fn spec(g: &[i64], alpha: Rational, family: Family) -> GammaSpec {
        GammaSpec::new(g.iter().map(|&x| int(x)).collect(), alpha, family).unwrap()
    }

    fn find(p: &[AsymptoticPrediction], kind: PredictionKind, index: usize) -> AsymptoticPrediction {
        *p.iter().find(|x| x.kind == kind && x.index == index).unwrap()
    }

    #[test]
    fn predictions_single_term() {
        // K = 0 has no companion
        assert!(predict_zero_limits(&spec(&[1], int(0), Family::UnitAtZero), 2).is_err());
        let s = GammaSpec::new(vec![int(1), rat(1, 2)], int(-1), Family::UnitAtZero).unwrap();
        assert!(predict_zero_limits(&s, 1).is_err());
    }

    #[test]
    fn predictions_outer_and_bessel() {
        // P(x) = x - 3
        let p = predict_zero_limits(&spec(&[1, -3], int(0), Family::Standard), 2).unwrap();
        let neg = find(&p, PredictionKind::Negative, 1);
        assert_eq!(neg.scaling, Scaling::N);
        assert!((neg.limit.re + 4.0 / 3.0).abs() < 1e-12);
        let b = find(&p, PredictionKind::LeftmostBessel, 2);
        assert!((b.limit.re - 1.445796).abs() < 1e-5);
        // P(x) = x + 3: a rightmost zero near (3 + 1/3 + 2) n
        let p = predict_zero_limits(&spec(&[1, 3], int(0), Family::UnitAtZero), 1).unwrap();
        let r = find(&p, PredictionKind::RightmostPositive, 1);
        assert!((r.limit.re - 16.0 / 3.0).abs() < 1e-12);
        assert_eq!(find(&p, PredictionKind::LeftmostBessel, 1).index, 1);
    }

    #[test]
    fn predictions_brenke() {
        let p = predict_zero_limits(&spec(&[1, -2], int(0), Family::Brenke), 1).unwrap();
        let neg = find(&p, PredictionKind::Negative, 1);
        assert_eq!(neg.scaling, Scaling::NSquared);
        assert!((neg.limit.re + 2.0).abs() < 1e-12);
        // P = x^2 + 4
        let p = predict_zero_limits(&spec(&[1, 0, 4], int(0), Family::Brenke), 1).unwrap();
        let nr: Vec<_> = p.iter().filter(|x| x.kind == PredictionKind::NonReal).collect();
        assert_eq!(nr.len(), 2);
        assert!((nr[0].limit - ComplexF::new(0.0, -2.0)).norm() < 1e-12);
    }

    #[test]
    fn monic_and_disk_rejected() {
        assert!(predict_zero_limits(&spec(&[1, -3], int(0), Family::Monic), 1).is_err());
        // P = x^2 + 1/4 has non-real zeros inside the unit disk
        let s = GammaSpec::new(vec![int(1), int(0), rat(1, 4)], int(0), Family::UnitAtZero).unwrap();
        assert!(!non_real_outside_unit_disk(&s).unwrap());
        assert!(predict_zero_limits(&s, 1).is_err());
        // P(1) = 0
        assert!(predict_zero_limits(&spec(&[1, -1], int(0), Family::Standard), 1).is_err());
    }

    #[test]
    fn verify_unit_at_zero_outlier() {
        let r = verify_zero_limits(&spec(&[1, -3], int(0), Family::UnitAtZero), &[100, 200, 400], 0.05).unwrap();
        assert!(r.structural.is_empty(), "{:?}", r.structural);
        let neg = r.outcomes.iter().find(|o| o.prediction.kind == PredictionKind::Negative).unwrap();
        assert!(neg.shrinks && neg.within_tolerance, "{:?}", neg);
        let left = r.outcomes.iter().find(|o| o.prediction.kind == PredictionKind::LeftmostBessel).unwrap();
        assert!(left.samples.last().unwrap().relative_deviation < 0.02, "{:?}", left);
    }

    #[test]
    fn verify_brenke_non_real() {
        let r = verify_zero_limits(&spec(&[1, 0, 4], int(0), Family::Brenke), &[100, 200, 400], 0.05).unwrap();
        assert!(r.structural.is_empty(), "{:?}", r.structural);
        for o in r.outcomes.iter().filter(|o| o.prediction.kind == PredictionKind::NonReal) {
            assert!(o.shrinks && o.within_tolerance, "{:?}", o);
        }
        assert!(r.counts.iter().all(|c| c.certified_lower == c.n - 2));
    }

    #[test]
    fn verify_unit_at_zero_non_real() {
        // P = x^2 + 4: zeros 2i and -2i, outside the unit disk
        let r = verify_zero_limits(&spec(&[1, 0, 4], rat(1, 2), Family::UnitAtZero), &[100, 200, 400], 0.05).unwrap();
        assert!(r.structural.is_empty(), "{:?}", r.structural);
        let nr: Vec<_> = r.outcomes.iter().filter(|o| o.prediction.kind == PredictionKind::NonReal).collect();
        assert_eq!(nr.len(), 2);
        for o in nr {
            // -2i - 1/(2i) + 2 = 2 - 1.5i
            assert!((o.prediction.limit.re - 2.0).abs() < 1e-12);
            assert!((o.prediction.limit.im.abs() - 1.5).abs() < 1e-12);
            assert!(o.shrinks && o.within_tolerance, "{:?}", o);
        }
    }
}
