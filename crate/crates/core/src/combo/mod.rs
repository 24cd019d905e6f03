//! Finite combinations `q_n = sum_j gamma_j p_{n-j}` of Laguerre polynomials,
//! their companion polynomials, coefficient transforms and the generalized
//! Bell recurrence.

mod aux;
mod bell;
mod iserles;
mod series;

pub use aux::{build_aux_decomposition, AuxDecomposition};
pub use bell::{bell_generalized, verify_bell_identity, BellParams, BellIdentityReport};
pub use iserles::{build_iserles_expansion, iserles_r, iserles_shifts, IserlesShifts};
pub use series::{build_generating_series, verify_generating_series};

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laguerre::{laguerre, Family};
use crate::ratpoly::{rising_factorial_poly, stirling2_table, Poly, Rational};
use crate::zeros::{analyze_zeros, ZeroReport};

/// Coefficients `gamma_0 = 1, ..., gamma_K != 0`, the parameter `alpha` and
/// the normalization of the combination.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GammaSpec {
    gamma: Vec<Rational>,
    pub alpha: Rational,
    pub family: Family,
}

impl GammaSpec {
    pub fn new(gamma: Vec<Rational>, alpha: Rational, family: Family) -> Result<Self> {
        match (gamma.first(), gamma.last()) {
            (Some(g0), Some(gk)) if g0.is_one() && !gk.is_zero() => {}
            _ => return Err(Error::DegenerateCombination),
        }
        Ok(GammaSpec { gamma, alpha, family })
    }

    /// Spec whose companion `Q` is `prod (x - theta_i)`.
    pub fn from_q_zeros(thetas: &[Rational], alpha: Rational, family: Family) -> Result<Self> {
        let (gamma, degenerate) = gamma_from_q_zeros(thetas);
        if degenerate {
            return Err(Error::DegenerateCombination);
        }
        GammaSpec::new(gamma, alpha, family)
    }

    /// Spec whose companion `P` is `prod (x - theta_i)`.
    pub fn from_p_zeros(thetas: &[Rational], alpha: Rational, family: Family) -> Result<Self> {
        let p = Poly::from_roots(thetas);
        let k = thetas.len();
        let gamma = (0..=k).map(|j| p.coeff(k - j)).collect();
        GammaSpec::new(gamma, alpha, family)
    }

    pub fn k(&self) -> usize {
        self.gamma.len() - 1
    }

    pub fn gamma(&self) -> &[Rational] {
        &self.gamma
    }

    pub fn with_family(&self, family: Family) -> GammaSpec {
        GammaSpec { family, ..self.clone() }
    }

    pub fn with_alpha(&self, alpha: Rational) -> GammaSpec {
        GammaSpec { alpha, ..self.clone() }
    }

    /// `q_n = sum_j gamma_j p_{n-j}^alpha` for `n >= K`.
    pub fn build_qn(&self, n: usize) -> Result<Poly> {
        if n < self.k() {
            return Err(Error::InvalidArgument(alloc::format!(
                "n = {n} is below K = {}",
                self.k()
            )));
        }
        self.partial_qn(n)
    }

    /// `sum_{j <= min(n, K)} gamma_j p_{n-j}`, defined for every `n`.
    pub fn partial_qn(&self, n: usize) -> Result<Poly> {
        let mut acc = Poly::zero();
        for (j, g) in self.gamma.iter().enumerate().take(n + 1) {
            if g.is_zero() {
                continue;
            }
            acc = &acc + &laguerre(n - j, &self.alpha, self.family)?.scale(g);
        }
        Ok(acc)
    }

    /// `P(x) = sum_j gamma_j x^(K-j)`.
    pub fn companion_p(&self) -> Poly {
        let k = self.k();
        Poly::new((0..=k).map(|i| self.gamma[k - i].clone()).collect())
    }

    /// `Q(x) = sum_j (-1)^j gamma_j (x)_(K-j)`.
    pub fn companion_q(&self) -> Poly {
        companion_q_of(&self.gamma)
    }

    /// Zero counts of `P` that govern the zeros of `q_n`.
    pub fn companion_counts(&self) -> CompanionCounts {
        let p = self.companion_p();
        if self.k() == 0 {
            return CompanionCounts::default();
        }
        let mut rep: ZeroReport = analyze_zeros(&p, &[]).expect("P is nonzero");
        let above_one = rep.count_relative(&Rational::one());
        CompanionCounts {
            non_real: rep.non_real_count,
            above_one: above_one.above,
            at_one: above_one.at,
            positive: rep.positive,
            negative: rep.negative,
        }
    }
}

/// `Q` for an arbitrary coefficient vector, degenerate ones included.
pub fn companion_q_of(gamma: &[Rational]) -> Poly {
    let k = gamma.len().saturating_sub(1);
    let mut acc = Poly::zero();
    for (j, g) in gamma.iter().enumerate() {
        let s = if j % 2 == 0 { g.clone() } else { -g.clone() };
        acc = &acc + &rising_factorial_poly(k - j).scale(&s);
    }
    acc
}

/// Counts of the zeros of the companion polynomial `P`, with multiplicity.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CompanionCounts {
    pub non_real: usize,
    /// Real zeros greater than one.
    pub above_one: usize,
    /// Multiplicity of one as a zero.
    pub at_one: usize,
    pub positive: usize,
    pub negative: usize,
}

/// `gamma_j = (-1)^j binom(K, j)`, for which `q_n = L_n^{alpha - K}` in the
/// Standard family.
pub fn binomial_collapse_spec(k: usize, alpha: &Rational) -> GammaSpec {
    let gamma = (0..=k)
        .map(|j| {
            let b = Rational::from_integer(crate::ratpoly::binomial(k, j));
            if j % 2 == 0 { b } else { -b }
        })
        .collect();
    GammaSpec::new(gamma, alpha.clone(), Family::Standard).expect("gamma_K = +-1")
}

/// Degrees `K <= n <= n_max` at which the binomial combination differs from
/// `L_n^{alpha - K}`.
pub fn verify_binomial_collapse(k: usize, alpha: &Rational, n_max: usize) -> Result<Vec<usize>> {
    let spec = binomial_collapse_spec(k, alpha);
    let shifted = alpha - Rational::from_integer((k as i64).into());
    let mut bad = Vec::new();
    for n in k..=n_max {
        if spec.build_qn(n)? != laguerre(n, &shifted, Family::Standard)? {
            bad.push(n);
        }
    }
    Ok(bad)
}

/// `B` with `P_A(x) = (x - theta) P_B(x)`, where `P_A = sum A_j x^(K-j)`.
pub fn deflate_coefficients(a: &[Rational], theta: &Rational) -> Result<Vec<Rational>> {
    if a.len() < 2 {
        return Err(Error::InvalidArgument("need at least two coefficients".into()));
    }
    let mut residual = Rational::zero();
    for c in a {
        residual = residual * theta + c;
    }
    if !residual.is_zero() {
        return Err(Error::NotAZero { residual });
    }
    let mut b = Vec::with_capacity(a.len() - 1);
    let mut acc = Rational::zero();
    for c in &a[..a.len() - 1] {
        acc = acc * theta + c;
        b.push(acc.clone());
    }
    Ok(b)
}

/// `A` with `P_A(x) = (x - theta) P_B(x)`.
pub fn extend_coefficients(b: &[Rational], theta: &Rational) -> Vec<Rational> {
    let mut a = Vec::with_capacity(b.len() + 1);
    for j in 0..=b.len() {
        let cur = b.get(j).cloned().unwrap_or_else(Rational::zero);
        let prev = if j > 0 { &b[j - 1] * theta } else { Rational::zero() };
        a.push(cur - prev);
    }
    a
}

/// Coefficients `gamma` with `Q = prod (x - theta_i)`, via Stirling numbers of
/// the second kind. The flag is true when `gamma_K = 0`.
pub fn gamma_from_q_zeros(thetas: &[Rational]) -> (Vec<Rational>, bool) {
    let k = thetas.len();
    let prod = Poly::from_roots(thetas);
    // Phi_j = coefficient of x^(K-j)
    let phi: Vec<Rational> = (0..=k).map(|j| prod.coeff(k - j)).collect();
    let s = stirling2_table(k);
    let mut gamma = Vec::with_capacity(k + 1);
    for j in 0..=k {
        let mut acc = Rational::zero();
        for i in 0..=j {
            let st = Rational::from_integer(s[k - j + i][k - j].clone());
            let t = st * &phi[j - i];
            if i % 2 == 0 {
                acc += t;
            } else {
                acc -= t;
            }
        }
        gamma.push(if j % 2 == 0 { acc } else { -acc });
    }
    let degenerate = gamma.last().is_some_and(Zero::is_zero);
    (gamma, degenerate)
}
