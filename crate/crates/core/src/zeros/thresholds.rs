use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::report::analyze_zeros;
use crate::combo::GammaSpec;
use crate::error::{Error, Result};
use crate::ratpoly::{ceil, floor, int, pochhammer, factorial, Rational};

/// `n_l = max{K, floor(theta_i - alpha + K), i <= m - l}` for the zeros
/// `theta_1 <= ... <= theta_m` of `Q` with `theta_i >= alpha + 1`.
pub fn threshold_monic(thetas: &[Rational], alpha: &Rational, k: usize, l: usize) -> BigInt {
    let m = thetas.len().saturating_sub(l);
    let kr = Rational::from_integer(k.into());
    thetas[..m]
        .iter()
        .map(|t| floor(&(t - alpha + &kr)))
        .fold(BigInt::from(k), |a, b| a.max(b))
}

/// `(n_0, n_1)` for a spec, computed from the exact zeros of its `Q` (which may
/// be irrational). `None` when `Q` has non-real zeros.
pub fn monic_thresholds(spec: &GammaSpec) -> Option<(BigInt, BigInt)> {
    let k = spec.k();
    // zeros of Q(x + alpha) are theta - alpha
    let shifted = spec.companion_q().compose_shift(&spec.alpha);
    if k == 0 {
        return Some((BigInt::zero(), BigInt::zero()));
    }
    let mut rep = analyze_zeros(&shifted, &[]).expect("Q is nonzero");
    if rep.non_real_count > 0 {
        return None;
    }
    // floors of theta_i - alpha for theta_i - alpha >= 1, with multiplicity
    let mut floors = Vec::new();
    for i in 0..rep.roots.len() {
        if rep.compare_root(i, &Rational::one()) == core::cmp::Ordering::Less {
            continue;
        }
        let f = rep.floor_of_root(i);
        for _ in 0..rep.roots[i].multiplicity {
            floors.push(f.clone());
        }
    }
    let kb = BigInt::from(k);
    let n = |l: usize| {
        floors[..floors.len().saturating_sub(l)]
            .iter()
            .map(|f| f + &kb)
            .fold(kb.clone(), |a, b| a.max(b))
    };
    Some((n(0), n(1)))
}

/// Ceiling of `max{(1/8)((23/22) 46^(K-1) max_{2<=j<=K} |gamma_j| - 2|alpha|),
/// alpha + 9, 2K}`. The first clause is absent when `K < 2`.
pub fn threshold_real_simple(gamma: &[Rational], alpha: &Rational, k: usize) -> BigInt {
    let mut best = alpha + int(9);
    let two_k = int(2 * k as i64);
    if two_k > best {
        best = two_k;
    }
    if k >= 2 {
        let gmax = gamma[2..=k].iter().map(Signed::abs).max().expect("K >= 2");
        let c = Rational::new(23.into(), 22.into())
            * Rational::from_integer(BigInt::from(46).pow(k as u32 - 1))
            * gmax;
        let first = (c - int(2) * alpha.abs()) / int(8);
        if first > best {
            best = first;
        }
    }
    ceil(&best)
}

/// Bracket `[lo, hi]` of `2^(1/k)` with `hi - lo <= 2^-bits`.
fn root_of_two(k: usize, bits: u32) -> (Rational, Rational) {
    let two = int(2);
    let mut lo = Rational::one();
    let mut hi = int(2);
    let eps = Rational::new(BigInt::one(), BigInt::one() << bits);
    while &hi - &lo > eps {
        let m = (&lo + &hi) / int(2);
        let mut p = Rational::one();
        for _ in 0..k {
            p *= &m;
        }
        if p <= two {
            lo = m;
        } else {
            hi = m;
        }
    }
    (lo, hi)
}

/// `k_0 = floor(K + 1 + |alpha|/(2^(1/K) - 1) max{1, sum_{j<K} |gamma_j| / |P(1)|})`,
/// certified by refining an exact bracket of `2^(1/K)` until the floor is
/// determined.
pub fn threshold_k0(gamma: &[Rational], alpha: &Rational, k: usize) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::InvalidArgument("k0 needs K >= 1".into()));
    }
    let p1: Rational = gamma.iter().sum();
    if p1.is_zero() {
        return Err(Error::InvalidArgument("P(1) = 0".into()));
    }
    let s: Rational = gamma[..k].iter().map(Signed::abs).sum();
    let ratio = s / p1.abs();
    let m = if ratio > Rational::one() { ratio } else { Rational::one() };
    let a = alpha.abs() * m;
    let base = BigInt::from(k + 1);
    if a.is_zero() {
        return Ok(base);
    }
    if k == 1 {
        return Ok(base + floor(&a));
    }
    let mut bits = 32;
    loop {
        let (lo, hi) = root_of_two(k, bits);
        let f_lo = floor(&(&a / (hi - Rational::one())));
        let f_hi = floor(&(&a / (lo - Rational::one())));
        if f_lo == f_hi {
            return Ok(base + f_lo);
        }
        bits *= 2;
    }
}

/// Exact `q_n(0)` for the Standard normalization:
/// `sum_j gamma_j (alpha+1)_(n-j) / (n-j)!`.
pub fn standard_value_at_zero(gamma: &[Rational], alpha: &Rational, n: usize) -> Rational {
    let a1 = alpha + Rational::one();
    gamma
        .iter()
        .enumerate()
        .filter(|(j, _)| *j <= n)
        .map(|(j, g)| {
            g * pochhammer(&a1, n - j) / Rational::from_integer(factorial(n - j))
        })
        .sum()
}

/// The values `n` in `[k0, k0 + extra]` where `sign q_n(0) != sign P(1)`.
pub fn k0_sign_failures(spec: &GammaSpec, extra: usize) -> Result<(usize, Vec<usize>)> {
    let k = spec.k();
    let k0 = threshold_k0(spec.gamma(), &spec.alpha, k)?;
    let k0: usize = k0
        .try_into()
        .map_err(|_| Error::InvalidArgument("k0 does not fit in usize".into()))?;
    let p1: Rational = spec.gamma().iter().sum();
    let fails = (k0..=k0 + extra)
        .filter(|&n| {
            let v = standard_value_at_zero(spec.gamma(), &spec.alpha, n);
            v.signum() != p1.signum()
        })
        .collect();
    Ok((k0, fails))
}

/// True when `bound` is at most `cap`, so a window up to the bound is
/// checkable by exact computation.
pub fn desk_verifiable(bound: &BigInt, cap: usize) -> bool {
    *bound <= BigInt::from(cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laguerre::Family;
    use crate::ratpoly::rat;
    use alloc::vec;

    #[test]
    fn monic_threshold_examples() {
        assert_eq!(threshold_monic(&[], &int(0), 3, 0), BigInt::from(3));
        assert_eq!(threshold_monic(&[rat(3, 2)], &int(0), 2, 0), BigInt::from(3));
        assert_eq!(threshold_monic(&[rat(3, 2)], &int(0), 2, 1), BigInt::from(2));
        assert_eq!(threshold_monic(&[int(5), int(9)], &rat(1, 2), 2, 0), BigInt::from(10));
        assert_eq!(threshold_monic(&[int(5), int(9)], &rat(1, 2), 2, 1), BigInt::from(6));
    }

    #[test]
    fn monic_thresholds_from_spec_handles_irrational_zeros() {
        // Q = x^2 - 6x + 7, zeros 3 +- sqrt 2 = 1.585.., 4.414..
        let spec = GammaSpec::new(vec![int(1), int(7), int(7)], int(0), Family::Monic).unwrap();
        assert_eq!(spec.companion_q(), crate::Poly::from_ints(&[7, -6, 1]));
        let (n0, n1) = monic_thresholds(&spec).unwrap();
        assert_eq!(n0, BigInt::from(6));
        assert_eq!(n1, BigInt::from(3));
        // all zeros below alpha + 1
        let low = GammaSpec::from_q_zeros(&[rat(1, 2), rat(-3, 1)], int(0), Family::Monic).unwrap();
        assert_eq!(monic_thresholds(&low).unwrap(), (BigInt::from(2), BigInt::from(2)));
        let single = GammaSpec::from_q_zeros(&[rat(3, 2), int(-1)], int(0), Family::Monic).unwrap();
        assert_eq!(monic_thresholds(&single).unwrap(), (BigInt::from(3), BigInt::from(2)));
    }

    #[test]
    fn real_simple_threshold_examples() {
        assert_eq!(threshold_real_simple(&[int(1), int(3)], &int(0), 1), BigInt::from(9));
        // (1/8)(23/22 * 46) = 6.01.. < 9
        assert_eq!(threshold_real_simple(&[int(1), int(0), int(1)], &int(0), 2), BigInt::from(9));
        // (1/8)(23/22 * 4600) = 601.13..
        assert_eq!(threshold_real_simple(&[int(1), int(0), int(-100)], &int(0), 2), BigInt::from(602));
        assert_eq!(threshold_real_simple(&[int(1), int(1)], &int(20), 1), BigInt::from(29));
        assert!(!desk_verifiable(&BigInt::from(602), 400));
    }

    #[test]
    fn k0_examples() {
        assert_eq!(threshold_k0(&[int(1), int(1)], &int(1), 1).unwrap(), BigInt::from(3));
        assert_eq!(threshold_k0(&[int(1), int(4), int(2)], &int(0), 2).unwrap(), BigInt::from(3));
        assert!(threshold_k0(&[int(1), int(-1)], &int(1), 1).is_err());
        // K = 2, alpha = 1, gamma = (1, 1, 1): 3 + 1/(sqrt 2 - 1) = 5.414..
        assert_eq!(threshold_k0(&[int(1), int(1), int(1)], &int(1), 2).unwrap(), BigInt::from(5));
    }

    #[test]
    fn k0_sign_holds_on_example() {
        let spec = GammaSpec::new(vec![int(1), int(1)], int(1), Family::Standard).unwrap();
        let (k0, fails) = k0_sign_failures(&spec, 20).unwrap();
        assert_eq!(k0, 3);
        assert!(fails.is_empty());
    }

    #[test]
    fn value_at_zero_matches_construction() {
        let spec = GammaSpec::new(vec![int(1), rat(-7, 3), rat(2, 5)], rat(1, 2), Family::Standard).unwrap();
        for n in 2..10 {
            let q = spec.build_qn(n).unwrap();
            assert_eq!(q.eval(&int(0)), standard_value_at_zero(spec.gamma(), &spec.alpha, n));
        }
    }
}
