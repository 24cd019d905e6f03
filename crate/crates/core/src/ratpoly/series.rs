use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{int, pochhammer, Poly, Rational};
use crate::error::{Error, Result};

/// Power series in `z` truncated after `z^order`, with coefficients that are
/// polynomials in `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Poly>,
}

impl TruncatedSeries {
    /// Builds a series from the listed coefficients, padding or truncating to
    /// `order + 1` terms.
    pub fn new(mut coeffs: Vec<Poly>, order: usize) -> Self {
        coeffs.resize(order + 1, Poly::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_scalars(c: &[Rational], order: usize) -> Self {
        Self::new(c.iter().cloned().map(Poly::constant).collect(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, m: usize) -> &Poly {
        &self.coeffs[m]
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, o: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(o.order());
        let mut out = Vec::with_capacity(order + 1);
        for m in 0..=order {
            let mut acc = Poly::zero();
            for i in 0..=m {
                if self.coeffs[i].is_zero() || o.coeffs[m - i].is_zero() {
                    continue;
                }
                acc = &acc + &(&self.coeffs[i] * &o.coeffs[m - i]);
            }
            out.push(acc);
        }
        TruncatedSeries { coeffs: out }
    }

    /// `exp(f)` for a series with zero constant term, from `E' = f' E`.
    pub fn exp(&self) -> Result<TruncatedSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::InvalidArgument(
                "exp needs a series with zero constant term".into(),
            ));
        }
        let order = self.order();
        let mut e: Vec<Poly> = Vec::with_capacity(order + 1);
        e.push(Poly::one());
        for m in 1..=order {
            let mut acc = Poly::zero();
            for k in 1..=m {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let t = (&self.coeffs[k] * &e[m - k]).scale(&int(k as i64));
                acc = &acc + &t;
            }
            e.push(acc.scale(&Rational::new(1.into(), (m as i64).into())));
        }
        Ok(TruncatedSeries { coeffs: e })
    }

    /// `0F1(-; a+1; -x z)`, whose `z^m` coefficient is `(-x)^m / (m! (a+1)_m)`.
    pub fn hyper01(a: &Rational, order: usize) -> Result<TruncatedSeries> {
        let mut out = Vec::with_capacity(order + 1);
        let b = a + Rational::one();
        let mut fact = Rational::one();
        for m in 0..=order {
            if m > 0 {
                fact *= int(m as i64);
            }
            let den = pochhammer(&b, m) * &fact;
            if den.is_zero() {
                return Err(Error::DegenerateParameter("0F1 lower parameter is a nonpositive integer"));
            }
            let sign = if m % 2 == 0 { Rational::one() } else { -Rational::one() };
            out.push(Poly::monomial(sign / den, m));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::{factorial, rat};

    #[test]
    fn exp_of_z_is_exponential_series() {
        let z = TruncatedSeries::from_scalars(&[int(0), int(1)], 10);
        let e = z.exp().unwrap();
        for m in 0..=10 {
            let want = Rational::new(1.into(), factorial(m));
            assert_eq!(e.coeff(m), &Poly::constant(want));
        }
    }

    #[test]
    fn exp_is_multiplicative() {
        let a = TruncatedSeries::from_scalars(&[int(0), rat(1, 2), int(3)], 8);
        let b = TruncatedSeries::from_scalars(&[int(0), int(-2), int(0), rat(1, 3)], 8);
        let sum = TruncatedSeries::new(
            (0..=8).map(|m| a.coeff(m) + b.coeff(m)).collect(),
            8,
        );
        assert_eq!(sum.exp().unwrap(), a.exp().unwrap().mul(&b.exp().unwrap()));
        assert!(TruncatedSeries::from_scalars(&[int(1)], 3).exp().is_err());
    }

    #[test]
    fn hyper01_rejects_negative_integer_parameter() {
        assert!(TruncatedSeries::hyper01(&int(-3), 5).is_err());
        assert!(TruncatedSeries::hyper01(&int(-3), 1).is_ok());
    }
}
