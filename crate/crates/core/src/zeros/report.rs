use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::Zero;

use super::isolate::{isolate_real_roots, RootInterval};
use super::squarefree::square_free_decompose;
use crate::error::{Error, Result};
use crate::ratpoly::{IntPoly, Poly, Rational};

/// One distinct real root with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealRoot {
    pub interval: RootInterval,
    pub multiplicity: usize,
    pub(super) factor: usize,
}

impl RealRoot {
    pub fn approx(&self) -> f64 {
        self.interval.approx()
    }
}

/// Counts of roots (with multiplicity) below, at and above a cut point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutCount {
    pub cut: Rational,
    pub below: usize,
    pub at: usize,
    pub above: usize,
}

/// Certified description of the real zeros of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroReport {
    pub degree: usize,
    /// Distinct real roots in increasing order with pairwise disjoint intervals.
    pub roots: Vec<RealRoot>,
    pub real_count: usize,
    pub non_real_count: usize,
    pub negative: usize,
    pub positive: usize,
    pub zero_multiplicity: usize,
    pub cuts: Vec<CutCount>,
    pub(super) factors: Vec<IntPoly>,
}

impl ZeroReport {
    pub fn distinct_real(&self) -> usize {
        self.roots.len()
    }

    pub fn all_real(&self) -> bool {
        self.non_real_count == 0
    }

    pub fn all_simple(&self) -> bool {
        self.roots.iter().all(|r| r.multiplicity == 1)
    }

    /// All zeros real, simple and strictly positive.
    pub fn all_positive_simple(&self) -> bool {
        self.all_real() && self.all_simple() && self.positive == self.degree
    }

    /// Counts relative to `c`, refining intervals that straddle it.
    pub fn count_relative(&mut self, c: &Rational) -> CutCount {
        let mut out = CutCount { cut: c.clone(), below: 0, at: 0, above: 0 };
        for r in &mut self.roots {
            match r.interval.compare(&self.factors[r.factor], c) {
                Ordering::Less => out.below += r.multiplicity,
                Ordering::Equal => out.at += r.multiplicity,
                Ordering::Greater => out.above += r.multiplicity,
            }
        }
        out
    }

    /// Sign of `root_i - c`, refining as needed.
    pub fn compare_root(&mut self, i: usize, c: &Rational) -> Ordering {
        let r = &mut self.roots[i];
        r.interval.compare(&self.factors[r.factor], c)
    }

    /// Floor of the `i`-th distinct root.
    pub fn floor_of_root(&mut self, i: usize) -> BigInt {
        let r = &mut self.roots[i];
        r.interval.floor(&self.factors[r.factor]).0
    }

    /// Ceiling of the `i`-th distinct root.
    pub fn ceil_of_root(&mut self, i: usize) -> BigInt {
        let r = &mut self.roots[i];
        let (f, exact) = r.interval.floor(&self.factors[r.factor]);
        if exact {
            f
        } else {
            f + 1
        }
    }

    /// Refines every open interval to width at most `w`.
    pub fn refine(&mut self, w: &Rational) {
        for r in &mut self.roots {
            r.interval.refine_to(&self.factors[r.factor], w);
        }
    }

    /// Midpoint approximations of the distinct real roots.
    pub fn approximations(&self) -> Vec<f64> {
        self.roots.iter().map(RealRoot::approx).collect()
    }

    /// Report for a polynomial already certified to have `degree` simple real
    /// roots in the given disjoint intervals.
    pub(crate) fn from_simple_intervals(p: IntPoly, intervals: Vec<RootInterval>) -> ZeroReport {
        let degree = p.degree().unwrap_or(0);
        let roots = intervals
            .into_iter()
            .map(|interval| RealRoot { interval, multiplicity: 1, factor: 0 })
            .collect();
        let mut rep = ZeroReport {
            degree,
            roots,
            real_count: degree,
            non_real_count: 0,
            negative: 0,
            positive: 0,
            zero_multiplicity: 0,
            cuts: Vec::new(),
            factors: alloc::vec![p],
        };
        rep.fill_signs();
        rep
    }

    fn fill_signs(&mut self) {
        let c = self.count_relative(&Rational::zero());
        self.negative = c.below;
        self.zero_multiplicity = c.at;
        self.positive = c.above;
    }
}

/// Exact real-zero analysis by square-free decomposition and Sturm isolation.
pub fn analyze_zeros(p: &Poly, cuts: &[Rational]) -> Result<ZeroReport> {
    let degree = p.degree().ok_or(Error::InvalidArgument("zero polynomial".into()))?;
    let mut factors = Vec::new();
    let mut roots = Vec::new();
    for (f, mult) in square_free_decompose(p) {
        let ip = f.to_int();
        for iv in isolate_real_roots(&ip) {
            roots.push(RealRoot { interval: iv, multiplicity: mult, factor: factors.len() });
        }
        factors.push(ip);
    }
    separate(&mut roots, &factors);
    let real_count = roots.iter().map(|r| r.multiplicity).sum();
    let mut rep = ZeroReport {
        degree,
        roots,
        real_count,
        non_real_count: degree - real_count,
        negative: 0,
        positive: 0,
        zero_multiplicity: 0,
        cuts: Vec::new(),
        factors,
    };
    rep.fill_signs();
    for c in cuts {
        let cc = rep.count_relative(c);
        rep.cuts.push(cc);
    }
    Ok(rep)
}

/// Sorts roots from coprime factors and refines until their intervals are
/// pairwise disjoint.
pub(super) fn separate(roots: &mut [RealRoot], factors: &[IntPoly]) {
    separate_bounded(roots, factors, usize::MAX);
}

/// As [`separate`], giving up after `budget` bisections. Returns whether the
/// intervals ended up disjoint.
pub(super) fn separate_bounded(roots: &mut [RealRoot], factors: &[IntPoly], budget: usize) -> bool {
    let mut spent = 0;
    loop {
        roots.sort_by(|a, b| (&a.interval.lo, &a.interval.hi).cmp(&(&b.interval.lo, &b.interval.hi)));
        let mut clash = None;
        'scan: for i in 0..roots.len() {
            for j in i + 1..roots.len() {
                if roots[j].interval.lo > roots[i].interval.hi {
                    break;
                }
                if roots[i].interval.overlaps(&roots[j].interval) {
                    clash = Some((i, j));
                    break 'scan;
                }
            }
        }
        let Some((i, j)) = clash else { return true };
        if spent >= budget {
            return false;
        }
        spent += 1;
        let k = if roots[i].interval.width() >= roots[j].interval.width() { i } else { j };
        let f = roots[k].factor;
        roots[k].interval.bisect(&factors[f]);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::{int, rat};

    #[test]
    fn mixed_multiplicities_and_signs() {
        // x^2 (x - 1)^3 (x + 2) (x^2 + 1) (x^2 - 2)
        let p = &(&(&Poly::from_roots(&[int(0), int(0), int(1), int(1), int(1), int(-2)])
            * &Poly::from_ints(&[1, 0, 1]))
            * &Poly::from_ints(&[-2, 0, 1]))
            * &Poly::one();
        let rep = analyze_zeros(&p, &[rat(3, 2)]).unwrap();
        assert_eq!(rep.degree, 10);
        assert_eq!(rep.real_count, 8);
        assert_eq!(rep.non_real_count, 2);
        assert_eq!(rep.distinct_real(), 5);
        assert_eq!(rep.negative, 2);
        assert_eq!(rep.zero_multiplicity, 2);
        assert_eq!(rep.positive, 4);
        assert_eq!(rep.cuts[0].below, 8);
        assert_eq!(rep.cuts[0].above, 0);
        let mults: Vec<usize> = rep.roots.iter().map(|r| r.multiplicity).collect();
        assert_eq!(mults, alloc::vec![1, 1, 2, 3, 1]);
        let approx = rep.approximations();
        assert!(approx.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn close_roots_from_different_factors_are_separated() {
        let p = &Poly::from_roots(&[rat(1, 1000), rat(1, 1000)]) * &Poly::from_roots(&[rat(1, 999)]);
        let rep = analyze_zeros(&p, &[]).unwrap();
        assert_eq!(rep.distinct_real(), 2);
        assert!(rep.roots[0].interval.hi <= rep.roots[1].interval.lo || rep.roots[1].interval.is_exact());
        assert_eq!(rep.roots[0].multiplicity, 2);
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert!(analyze_zeros(&Poly::zero(), &[]).is_err());
        let c = analyze_zeros(&Poly::from_ints(&[5]), &[]).unwrap();
        assert_eq!(c.real_count, 0);
    }
}
