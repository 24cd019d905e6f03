use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use super::GammaSpec;
use crate::error::{Error, Result};
use crate::laguerre::{op_lambda, Family};
use crate::ratpoly::{int, Poly, Rational};
use crate::zeros::rational_roots;

/// Parameters `r`, `phi_1..phi_m`, `psi_1..psi_m` of the generalized Bell
/// recurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BellParams {
    pub r: Rational,
    pub phi: Vec<Rational>,
    pub psi: Vec<Rational>,
}

impl BellParams {
    /// `psi = 0` throughout.
    pub fn without_psi(r: Rational, phi: Vec<Rational>) -> Self {
        let psi = alloc::vec![Rational::zero(); phi.len()];
        BellParams { r, phi, psi }
    }
}

/// `B_0 = 1`, `B_{k+1} = Lambda_r B_k + (phi_{k+1} + x psi_{k+1}) B_k`.
pub fn bell_generalized(params: &BellParams, n: usize) -> Result<Poly> {
    if params.phi.len() < n || params.psi.len() < n {
        return Err(Error::InvalidArgument(alloc::format!(
            "need {n} terms of phi and psi"
        )));
    }
    let mut b = Poly::one();
    for k in 0..n {
        let lin = Poly::new(alloc::vec![params.phi[k].clone(), params.psi[k].clone()]);
        b = &op_lambda(&params.r, &b) + &(&lin * &b);
    }
    Ok(b)
}

/// Outcome of checking `q_n = (-1)^n B_n^{alpha+n-K+1; phi}` for a monic
/// combination.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BellIdentityReport {
    pub checked: Vec<usize>,
    pub failures: Vec<usize>,
    pub skipped: Option<String>,
}

impl BellIdentityReport {
    pub fn passed(&self) -> bool {
        self.skipped.is_none() && self.failures.is_empty()
    }
}

/// Verifies the Bell representation of a monic combination for
/// `K <= n <= n_max`. Skipped unless every zero of `Q` is rational.
pub fn verify_bell_identity(spec: &GammaSpec, n_max: usize) -> BellIdentityReport {
    let mut rep = BellIdentityReport::default();
    if spec.family != Family::Monic {
        rep.skipped = Some("identity applies to the monic family".into());
        return rep;
    }
    let k = spec.k();
    let mut thetas = Vec::new();
    for (t, m) in rational_roots(&spec.companion_q()) {
        for _ in 0..m {
            thetas.push(t.clone());
        }
    }
    if thetas.len() != k {
        rep.skipped = Some("Q has irrational or non-real zeros".into());
        return rep;
    }
    let mut phi: Vec<Rational> = thetas.iter().map(|t| -t.clone()).collect();
    for i in k + 1..=n_max.max(k) {
        phi.push(int(k as i64 - i as i64));
    }
    let params = |n: usize| {
        BellParams::without_psi(&spec.alpha + int(n as i64 - k as i64 + 1), phi.clone())
    };
    for n in k..=n_max {
        let lhs = spec.build_qn(n).expect("n >= K");
        let b = bell_generalized(&params(n), n).expect("enough terms");
        let rhs = if n % 2 == 0 { b } else { -b };
        rep.checked.push(n);
        if lhs != rhs {
            rep.failures.push(n);
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laguerre::laguerre;
    use crate::ratpoly::{bell_poly, rat};
    use alloc::vec;

    #[test]
    fn touchard_case() {
        for n in 0..9 {
            let p = BellParams::without_psi(int(0), vec![Rational::zero(); n]);
            let want = bell_poly(n).compose_scale(&int(-1));
            assert_eq!(bell_generalized(&p, n).unwrap(), want);
        }
    }

    #[test]
    fn monic_laguerre_case() {
        let a = rat(2, 3);
        for n in 0..9 {
            let phi: Vec<Rational> = (1..=n).map(|i| int(i as i64 - 1)).collect();
            let p = BellParams::without_psi(&a + int(1), phi);
            let l = laguerre(n, &a, Family::Monic).unwrap();
            let want = if n % 2 == 0 { l } else { -l };
            assert_eq!(bell_generalized(&p, n).unwrap(), want);
        }
    }

    #[test]
    fn shift_law_and_leading_coefficient() {
        let phi = vec![rat(1, 2), int(-3), rat(7, 4), int(0), rat(-2, 9)];
        let psi = vec![rat(1, 3), int(2), rat(-1, 2), int(5), rat(3, 4)];
        let r = rat(-5, 7);
        let s = rat(11, 3);
        for n in 0..=5 {
            let lhs = bell_generalized(&BellParams { r: &r + &s, phi: phi.clone(), psi: psi.clone() }, n)
                .unwrap();
            let shifted = phi.iter().map(|f| f + &s).collect();
            let rhs = bell_generalized(&BellParams { r: r.clone(), phi: shifted, psi: psi.clone() }, n)
                .unwrap();
            assert_eq!(lhs, rhs);
            let lead: Rational = psi[..n].iter().map(|p| p - int(1)).product();
            assert_eq!(lhs.leading().cloned().unwrap_or_default(), lead);
            assert_eq!(lhs.degree().unwrap_or(0), n);
        }
    }

    #[test]
    fn bell_identity_rational_zeros() {
        let s = GammaSpec::from_q_zeros(&[rat(1, 2), rat(-1, 3)], rat(1, 4), Family::Monic).unwrap();
        let rep = verify_bell_identity(&s, 10);
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.checked.len(), 9);
        let base = GammaSpec::new(vec![int(1)], int(3), Family::Monic).unwrap();
        assert!(verify_bell_identity(&base, 8).passed());
        let one = GammaSpec::from_q_zeros(&[rat(-7, 4)], rat(-1, 2), Family::Monic).unwrap();
        assert!(verify_bell_identity(&one, 12).passed());
    }

    #[test]
    fn bell_identity_skips_irrational() {
        // Q = x^2 - 2 has irrational zeros
        let s = GammaSpec::new(vec![int(1), int(1), int(-2)], int(0), Family::Monic).unwrap();
        assert_eq!(s.companion_q(), Poly::from_ints(&[-2, 0, 1]));
        let rep = verify_bell_identity(&s, 6);
        assert!(rep.skipped.is_some());
    }
}
