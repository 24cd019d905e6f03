use num_traits::One;

use super::{deflate_coefficients, GammaSpec};
use crate::error::{Error, Result};
use crate::laguerre::Family;
use crate::ratpoly::Rational;

/// Result of lowering a standard combination by one zero of `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxDecomposition {
    /// The deflated spec at parameter `alpha - 1`.
    pub reduced: GammaSpec,
    pub theta: Rational,
    /// Exact check of the decomposition at the requested `n`.
    pub verified: bool,
}

/// Writes `q_n^{alpha; gamma} = r_n - (1 - theta) r_n'` with `r_n` the
/// combination for the deflated coefficients at `alpha - 1`.
pub fn build_aux_decomposition(spec: &GammaSpec, theta: &Rational, n: usize) -> Result<AuxDecomposition> {
    if spec.family != Family::Standard {
        return Err(Error::InvalidArgument(
            "the decomposition is defined for the standard family".into(),
        ));
    }
    let reduced_gamma = deflate_coefficients(spec.gamma(), theta)?;
    let reduced = GammaSpec::new(
        reduced_gamma,
        &spec.alpha - Rational::one(),
        Family::Standard,
    )?;
    let lhs = spec.build_qn(n)?;
    let r = reduced.build_qn(n)?;
    let rhs = &r - &r.derivative().scale(&(Rational::one() - theta));
    Ok(AuxDecomposition { reduced, theta: theta.clone(), verified: lhs == rhs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::{int, rat, Poly};
    use alloc::vec;

    #[test]
    fn linear_case() {
        let theta = rat(3, 5);
        let s = GammaSpec::new(vec![int(1), -theta.clone()], rat(1, 2), Family::Standard).unwrap();
        for n in 1..10 {
            let d = build_aux_decomposition(&s, &theta, n).unwrap();
            assert!(d.verified);
            assert_eq!(d.reduced.gamma(), &[int(1)]);
        }
    }

    #[test]
    fn quadratic_case() {
        let s = GammaSpec::from_p_zeros(&[rat(1, 2), int(3)], int(2), Family::Standard).unwrap();
        let d = build_aux_decomposition(&s, &int(3), 5).unwrap();
        assert!(d.verified);
        // reduced gamma_j = sum_i theta^i gamma_{j-i}
        assert_eq!(d.reduced.companion_p(), Poly::from_roots(&[rat(1, 2)]));
        assert!(matches!(
            build_aux_decomposition(&s, &int(2), 5),
            Err(Error::NotAZero { .. })
        ));
    }
}
