use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laguerre::{laguerre, Family};
use crate::ratpoly::{factorial, int, pochhammer, rising_factorial_poly, Poly, Rational};
use crate::zeros::analyze_zeros;

/// `sum_j tau_j (j+1)_u (alpha+j+1)_u L_j^alpha`.
pub fn build_iserles_expansion(tau: &[Rational], alpha: &Rational, u: usize) -> Result<Poly> {
    let mut acc = Poly::zero();
    for (j, t) in tau.iter().enumerate() {
        if t.is_zero() {
            continue;
        }
        let w = pochhammer(&int(j as i64 + 1), u) * pochhammer(&(alpha + int(j as i64 + 1)), u);
        acc = &acc + &laguerre(j, alpha, Family::Standard)?.scale(&(t * w));
    }
    Ok(acc)
}

/// `R(x) = sum_j tau_j / j! (alpha + 1 - x)_j`.
pub fn iserles_r(tau: &[Rational], alpha: &Rational) -> Poly {
    let a1 = alpha + Rational::one();
    let mut acc = Poly::zero();
    for (j, t) in tau.iter().enumerate() {
        let p = rising_factorial_poly(j).compose_shift(&a1).compose_scale(&int(-1));
        acc = &acc + &p.scale(&(t / Rational::from_integer(factorial(j))));
    }
    acc
}

/// Shifts computed from the zeros `zeta_1 >= ... >= zeta_K` of `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IserlesShifts {
    /// `max(0, floor(1 - zeta_{K-1}))`, absent when `K < 2`.
    pub u1: Option<BigInt>,
    /// `max(0, floor(1 - zeta_K))`.
    pub u0: BigInt,
}

/// Shifts `u_1` and `u_0`; errors unless `R` has only real zeros.
pub fn iserles_shifts(tau: &[Rational], alpha: &Rational) -> Result<IserlesShifts> {
    let r = iserles_r(tau, alpha);
    let k = r.degree().unwrap_or(0);
    if k == 0 {
        return Err(Error::InvalidArgument("R must have positive degree".into()));
    }
    let mut rep = analyze_zeros(&r, &[])?;
    if !rep.all_real() {
        return Err(Error::InvalidArgument("R has non-real zeros".into()));
    }
    // increasing order with multiplicity
    let mut idx: Vec<usize> = Vec::new();
    for (i, root) in rep.roots.iter().enumerate() {
        for _ in 0..root.multiplicity {
            idx.push(i);
        }
    }
    let mut shift = |i: usize| -> BigInt {
        (BigInt::one() - rep.ceil_of_root(i)).max(BigInt::zero())
    };
    let u0 = shift(idx[0]);
    let u1 = if k >= 2 { Some(shift(idx[1])) } else { None };
    Ok(IserlesShifts { u1, u0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::rat;
    use crate::zeros::is_real_rooted;
    use alloc::vec;

    #[test]
    fn zero_shift_is_plain_expansion() {
        let tau = vec![int(2), rat(-1, 3), int(5)];
        let a = rat(1, 2);
        let mut want = Poly::zero();
        for (j, t) in tau.iter().enumerate() {
            want = &want + &laguerre(j, &a, Family::Standard).unwrap().scale(t);
        }
        assert_eq!(build_iserles_expansion(&tau, &a, 0).unwrap(), want);
        let single = build_iserles_expansion(&[int(0), int(0), int(1)], &a, 2).unwrap();
        let w = pochhammer(&int(3), 2) * pochhammer(&(&a + int(3)), 2);
        assert_eq!(single, laguerre(2, &a, Family::Standard).unwrap().scale(&w));
    }

    #[test]
    fn r_in_terms_of_q() {
        // tau_j = (-1)^(K-j) j! gamma_(K-j) gives Q(x) = R(alpha + 1 - x)
        use crate::combo::GammaSpec;
        let s = GammaSpec::from_q_zeros(&[int(4), rat(13, 2)], int(1), Family::Monic).unwrap();
        let k = 2;
        let tau: Vec<Rational> = (0..=k)
            .map(|j| {
                let v = Rational::from_integer(factorial(j)) * &s.gamma()[k - j];
                if (k - j) % 2 == 0 { v } else { -v }
            })
            .collect();
        let r = iserles_r(&tau, &s.alpha);
        let back = r.compose_shift(&(&s.alpha + int(1))).compose_scale(&int(-1));
        assert_eq!(back, s.companion_q());
        // zeros of R are alpha + 1 - theta = {-2, -9/2}
        let sh = iserles_shifts(&tau, &s.alpha).unwrap();
        assert_eq!(sh.u0, BigInt::from(5));
        assert_eq!(sh.u1, Some(BigInt::from(3)));
        let out1 = build_iserles_expansion(&tau, &s.alpha, 3).unwrap();
        assert!(is_real_rooted(&out1));
        let mut rep = analyze_zeros(&build_iserles_expansion(&tau, &s.alpha, 5).unwrap(), &[]).unwrap();
        assert!(rep.all_real());
        assert_eq!(rep.count_relative(&int(0)).above, 2);
    }
}
