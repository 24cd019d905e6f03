use alloc::vec::Vec;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::interlace::is_real_rooted;
use super::report::analyze_zeros;
use crate::error::Result;
use crate::laguerre::{laguerre, Family};
use crate::ratpoly::{int, Poly, Rational};

/// `T(sum a_k x^k) = sum a_k p_k` for the family `p_k` of the given
/// normalization.
pub fn apply_laguerre_map(p: &Poly, alpha: &Rational, family: Family) -> Result<Poly> {
    let mut acc = Poly::zero();
    for (k, a) in p.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        acc = &acc + &laguerre(k, alpha, family)?.scale(a);
    }
    Ok(acc)
}

/// Outcome of the explicit `(x - 1)^K` input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ViolatorOutcome {
    pub degree: usize,
    pub non_real: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreservationReport {
    pub family: Family,
    pub alpha: Rational,
    pub k: usize,
    pub trials: usize,
    /// Zeros of the sampled inputs whose image has non-real zeros.
    pub violations: Vec<Vec<Rational>>,
    pub violator: Option<ViolatorOutcome>,
}

impl PreservationReport {
    pub fn violation_count(&self) -> usize {
        self.violations.len()
    }
}

/// Random rational root with numerator in `[-12, 12]` and denominator in `[1, 4]`.
fn random_root(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-12i64..=12).into(), rng.gen_range(1i64..=4).into())
}

/// Whether `alpha` is a nonnegative integer.
fn nonnegative_integer(alpha: &Rational) -> bool {
    alpha.is_integer() && alpha >= &int(0)
}

/// Samples real-rooted inputs of degree `1..=K` with random rational zeros,
/// maps them through `T` and certifies that the images are real-rooted.
/// For the Standard family with `alpha < K - 2` not a nonnegative integer
/// the input `(x - 1)^K` is also mapped and its non-real count reported.
pub fn test_real_rooted_preservation(
    family: Family,
    alpha: &Rational,
    k: usize,
    trials: usize,
    seed: u64,
) -> Result<PreservationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = Vec::new();
    for _ in 0..trials {
        let d = rng.gen_range(1..=k.max(1));
        let roots: Vec<Rational> = (0..d).map(|_| random_root(&mut rng)).collect();
        let image = apply_laguerre_map(&Poly::from_roots(&roots), alpha, family)?;
        if !is_real_rooted(&image) {
            violations.push(roots);
        }
    }
    let violator = if family == Family::Standard
        && !nonnegative_integer(alpha)
        && alpha < &int(k as i64 - 2)
    {
        let input = Poly::from_roots(&alloc::vec![int(1); k]);
        let image = apply_laguerre_map(&input, alpha, family)?;
        let rep = analyze_zeros(&image, &[])?;
        Some(ViolatorOutcome { degree: rep.degree, non_real: rep.non_real_count })
    } else {
        None
    };
    Ok(PreservationReport { family, alpha: alpha.clone(), k, trials, violations, violator })
}
