//! Generalized Laguerre polynomials in four normalizations, the three ladder
//! operators between them, and exact checks of the classical identities.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ratpoly::{factorial, int, pochhammer, Poly, Rational};

/// Normalization of `L_n^alpha`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Monic up to sign: `(-1)^n n! L_n^alpha`.
    Monic,
    /// Value one at the origin: `n! / (1+alpha)_n L_n^alpha`.
    UnitAtZero,
    /// The classical `L_n^alpha`.
    Standard,
    /// `L_n^alpha / (1+alpha)_n`.
    Brenke,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Monic, Family::UnitAtZero, Family::Standard, Family::Brenke];

    pub fn name(self) -> &'static str {
        match self {
            Family::Monic => "monic",
            Family::UnitAtZero => "unit_at_zero",
            Family::Standard => "standard",
            Family::Brenke => "brenke",
        }
    }

    /// Factor `c` with `p_n = c L_n^alpha`.
    pub fn factor(self, n: usize, alpha: &Rational) -> Result<Rational> {
        match self {
            Family::Standard => Ok(Rational::one()),
            Family::Monic => {
                let f = Rational::from_integer(factorial(n));
                Ok(if n.is_multiple_of(2) { f } else { -f })
            }
            Family::UnitAtZero => {
                let d = pochhammer(&(alpha + Rational::one()), n);
                if d.is_zero() {
                    return Err(Error::DegenerateParameter("(1+alpha)_n vanishes"));
                }
                Ok(Rational::from_integer(factorial(n)) / d)
            }
            Family::Brenke => {
                let d = pochhammer(&(alpha + Rational::one()), n);
                if d.is_zero() {
                    return Err(Error::DegenerateParameter("(1+alpha)_n vanishes"));
                }
                Ok(d.recip())
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        match s {
            "monic" => Ok(Family::Monic),
            "unit_at_zero" | "unitAtZero" => Ok(Family::UnitAtZero),
            "standard" => Ok(Family::Standard),
            "brenke" => Ok(Family::Brenke),
            _ => Err(Error::InvalidArgument(alloc::format!("unknown family {s:?}"))),
        }
    }
}

/// Coefficients of `L_n^alpha`, lowest power first, by the exact downward
/// recurrence `c_{l-1} = -c_l l (alpha+l) / (n-l+1)` from `c_n = (-1)^n / n!`.
pub fn standard_coeffs(n: usize, alpha: &Rational) -> Vec<Rational> {
    let mut c = vec![Rational::zero(); n + 1];
    let top = Rational::new(1.into(), factorial(n));
    c[n] = if n.is_multiple_of(2) { top } else { -top };
    for l in (1..=n).rev() {
        let f = int(l as i64) * (alpha + int(l as i64)) / int((n - l + 1) as i64);
        c[l - 1] = -(&c[l] * f);
    }
    c
}

/// `p_n^alpha` in the requested normalization.
pub fn laguerre(n: usize, alpha: &Rational, family: Family) -> Result<Poly> {
    let f = family.factor(n, alpha)?;
    Ok(Poly::new(standard_coeffs(n, alpha)).scale(&f))
}

/// `L_0^alpha, ..., L_{n_max}^alpha` by the three-term recurrence
/// `(k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}`.
pub fn laguerre_by_recurrence(n_max: usize, alpha: &Rational) -> Vec<Poly> {
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(Poly::one());
    if n_max == 0 {
        return out;
    }
    out.push(Poly::new(vec![alpha + Rational::one(), -Rational::one()]));
    for k in 1..n_max {
        let kk = int(k as i64);
        let lin = Poly::new(vec![int(2 * k as i64 + 1) + alpha, -Rational::one()]);
        let next = &(&lin * &out[k]) - &out[k - 1].scale(&(&kk + alpha));
        out.push(next.scale(&int(k as i64 + 1).recip()));
    }
    out
}

/// `Lambda_alpha f = x f' + (alpha - x) f`.
pub fn op_lambda(alpha: &Rational, f: &Poly) -> Poly {
    let xf = f.derivative().shift_up(1);
    let lin = Poly::new(vec![alpha.clone(), -Rational::one()]);
    &xf + &(&lin * f)
}

/// `Upsilon_alpha p = p + (x / alpha) p'`, undefined at `alpha = 0`.
pub fn op_upsilon(alpha: &Rational, p: &Poly) -> Result<Poly> {
    if alpha.is_zero() {
        return Err(Error::DegenerateParameter("Upsilon needs alpha != 0"));
    }
    let t = p.derivative().shift_up(1).scale(&alpha.recip());
    Ok(p + &t)
}

/// `Omega_alpha p = -(alpha p + x p')'`.
pub fn op_omega(alpha: &Rational, p: &Poly) -> Poly {
    let inner = &p.scale(alpha) + &p.derivative().shift_up(1);
    -&inner.derivative()
}

/// Identities checked by [`verify_standard_identities`] and
/// [`verify_operator_identities`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    /// `(L_n^alpha)' = -L_{n-1}^{alpha+1}`.
    Derivative,
    /// `L_n^{alpha-1} = L_n^alpha - L_{n-1}^alpha`.
    Contiguous,
    /// Series coefficients agree with the three-term recurrence.
    Recurrence,
    /// `Lambda_alpha` maps the monic `n`-th polynomial to minus the monic `(n+1)`-th at `alpha-1`.
    Lambda,
    /// `Upsilon_alpha` lowers the parameter of the unit-at-zero family.
    Upsilon,
    /// `Omega_alpha` lowers the degree of the Brenke family.
    Omega,
    /// `L_n^{-k} = (-x)^k (n-k)!/n! L_{n-k}^k` for integers `1 <= k <= n`.
    NegativeInteger,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdentityReport {
    pub checked: usize,
    pub skipped: usize,
    pub failures: Vec<(Identity, usize)>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, id: Identity, n: usize, ok: bool) {
        self.checked += 1;
        if !ok {
            self.failures.push((id, n));
        }
    }

    pub fn merge(&mut self, o: IdentityReport) {
        self.checked += o.checked;
        self.skipped += o.skipped;
        self.failures.extend(o.failures);
    }
}

/// Derivative, contiguous and recurrence identities for `n <= n_max`.
pub fn verify_standard_identities(alpha: &Rational, n_max: usize) -> IdentityReport {
    let mut rep = IdentityReport::default();
    let a1 = alpha + Rational::one();
    let am1 = alpha - Rational::one();
    let rec = laguerre_by_recurrence(n_max, alpha);
    let mut prev: Option<Poly> = None;
    for n in 0..=n_max {
        let l = Poly::new(standard_coeffs(n, alpha));
        rep.record(Identity::Recurrence, n, l == rec[n]);
        if n >= 1 {
            let rhs = -&Poly::new(standard_coeffs(n - 1, &a1));
            rep.record(Identity::Derivative, n, l.derivative() == rhs);
            let lower = Poly::new(standard_coeffs(n, &am1));
            let p = prev.as_ref().expect("previous degree");
            rep.record(Identity::Contiguous, n, lower == &l - p);
        }
        prev = Some(l);
    }
    rep
}

/// The three ladder identities for `n <= n_max`; `Upsilon` is skipped where
/// either side is undefined.
pub fn verify_operator_identities(alpha: &Rational, n_max: usize) -> IdentityReport {
    let mut rep = IdentityReport::default();
    let am1 = alpha - Rational::one();
    for n in 0..=n_max {
        let lhs = op_lambda(alpha, &laguerre(n, alpha, Family::Monic).expect("monic"));
        let rhs = -&laguerre(n + 1, &am1, Family::Monic).expect("monic");
        rep.record(Identity::Lambda, n, lhs == rhs);

        match (
            laguerre(n, alpha, Family::UnitAtZero),
            laguerre(n, &am1, Family::UnitAtZero),
        ) {
            (Ok(p), Ok(want)) if !alpha.is_zero() => {
                let got = op_upsilon(alpha, &p).expect("alpha != 0");
                rep.record(Identity::Upsilon, n, got == want);
            }
            _ => rep.skipped += 1,
        }

        if n >= 1 {
            match (
                laguerre(n, alpha, Family::Brenke),
                laguerre(n - 1, alpha, Family::Brenke),
            ) {
                (Ok(p), Ok(want)) => rep.record(Identity::Omega, n, op_omega(alpha, &p) == want),
                _ => rep.skipped += 1,
            }
        }
    }
    rep
}

/// `L_n^{-k}(x) = (-x)^k (n-k)!/n! L_{n-k}^k(x)` for every `1 <= k <= n <= n_max`.
pub fn verify_negative_integer_identity(n_max: usize) -> IdentityReport {
    let mut rep = IdentityReport::default();
    for n in 1..=n_max {
        for k in 1..=n {
            let lhs = Poly::new(standard_coeffs(n, &int(-(k as i64))));
            let s = Rational::new(factorial(n - k), factorial(n));
            let s = if k % 2 == 0 { s } else { -s };
            let rhs = Poly::new(standard_coeffs(n - k, &int(k as i64))).shift_up(k).scale(&s);
            rep.record(Identity::NegativeInteger, n, lhs == rhs);
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::{binomial, rat};

    fn series_oracle(n: usize, alpha: &Rational) -> Poly {
        // binom(n+alpha, n-l) = (alpha+l+1)_{n-l} / (n-l)!
        let mut c = Vec::new();
        for l in 0..=n {
            let b = pochhammer(&(alpha + int(l as i64 + 1)), n - l)
                / Rational::from_integer(factorial(n - l));
            let s = Rational::from_integer(factorial(l)).recip();
            let s = if l % 2 == 0 { s } else { -s };
            c.push(b * s);
        }
        Poly::new(c)
    }

    #[test]
    fn known_low_degree() {
        let a = rat(1, 2);
        assert_eq!(laguerre(0, &a, Family::Standard).unwrap(), Poly::one());
        assert_eq!(
            laguerre(1, &a, Family::Standard).unwrap(),
            Poly::new(vec![rat(3, 2), int(-1)])
        );
        // L_2^0 = 1 - 2x + x^2/2
        assert_eq!(
            laguerre(2, &int(0), Family::Standard).unwrap(),
            Poly::new(vec![int(1), int(-2), rat(1, 2)])
        );
    }

    #[test]
    fn recurrence_matches_series_oracle() {
        for a in [rat(-1, 2), int(0), rat(1, 3), int(-3), rat(7, 2)] {
            for n in 0..15 {
                assert_eq!(Poly::new(standard_coeffs(n, &a)), series_oracle(n, &a), "n={n}");
            }
        }
    }

    #[test]
    fn normalizations() {
        let a = rat(2, 5);
        for n in 0..10 {
            let m = laguerre(n, &a, Family::Monic).unwrap();
            assert_eq!(m.leading(), Some(&Rational::one()));
            let u = laguerre(n, &a, Family::UnitAtZero).unwrap();
            assert_eq!(u.eval(&int(0)), Rational::one());
            let b = laguerre(n, &a, Family::Brenke).unwrap();
            let l = laguerre(n, &a, Family::Standard).unwrap();
            assert_eq!(b.scale(&pochhammer(&(&a + Rational::one()), n)), l);
        }
    }

    #[test]
    fn alpha_zero_values_at_one() {
        // L_n^0(0) = 1 and the x coefficient is -n.
        for n in 1..12 {
            let l = laguerre(n, &int(0), Family::Standard).unwrap();
            assert_eq!(l.coeff(1), int(-(n as i64)));
            assert_eq!(l.coeff(0), Rational::from_integer(binomial(n, n)));
        }
    }

    #[test]
    fn degenerate_normalizations_rejected() {
        assert!(laguerre(3, &int(-2), Family::UnitAtZero).is_err());
        assert!(laguerre(3, &int(-2), Family::Brenke).is_err());
        assert!(laguerre(1, &int(-2), Family::Brenke).is_ok());
        assert!(laguerre(3, &int(-2), Family::Monic).is_ok());
        assert!(op_upsilon(&int(0), &Poly::one()).is_err());
    }

    #[test]
    fn identities_small() {
        for a in [rat(-1, 2), int(0), rat(1, 3), int(1), rat(5, 2)] {
            assert!(verify_standard_identities(&a, 12).passed());
            assert!(verify_operator_identities(&a, 12).passed());
        }
        assert!(verify_negative_integer_identity(10).passed());
    }

    #[test]
    fn operators_detect_perturbation() {
        let a = rat(1, 3);
        let p = laguerre(5, &a, Family::Monic).unwrap();
        let bumped = &p + &Poly::constant(rat(1, 1000));
        assert_ne!(op_lambda(&a, &bumped), -&laguerre(6, &(&a - int(1)), Family::Monic).unwrap());
    }

    #[test]
    fn family_names_roundtrip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("bogus".parse::<Family>().is_err());
    }
}
