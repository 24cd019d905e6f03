use alloc::vec::Vec;

use crate::combo::GammaSpec;
use crate::error::{Error, Result};
use crate::laguerre::Family;
use crate::ratpoly::{rational_to_f64, Poly};

use super::ComplexF;

const BIG: f64 = 1e150;
const SHIFT: i32 = 500;

/// A float value `mantissa * 2^exp2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Scaled {
    pub mantissa: ComplexF,
    pub exp2: i64,
}

impl Scaled {
    /// Natural logarithm (principal branch).
    pub fn ln(&self) -> ComplexF {
        self.mantissa.ln() + self.exp2 as f64 * core::f64::consts::LN_2
    }
}

/// Float evaluation of `q_n / c_n`, where `c_n` is the normalization factor of
/// degree `n`, via the three-term recurrence of the standard Laguerre
/// polynomials with power-of-two rescaling, so large degrees neither
/// overflow nor pass through huge coefficients.
#[derive(Clone, Debug)]
pub struct ComboEvaluator {
    n: usize,
    alpha: f64,
    /// `gamma_j c_{n-j} / c_n`.
    weights: Vec<f64>,
}

impl ComboEvaluator {
    pub fn new(spec: &GammaSpec, n: usize) -> Result<Self> {
        let k = spec.k();
        if n < k {
            return Err(Error::InvalidArgument("n below K".into()));
        }
        let a = rational_to_f64(&spec.alpha);
        let mut weights = Vec::with_capacity(k + 1);
        for (j, g) in spec.gamma().iter().enumerate() {
            // c_{n-j} / c_n as a product over i = n-j+1 ..= n
            let mut r = 1.0;
            for i in (n - j + 1)..=n {
                let i = i as f64;
                r *= match spec.family {
                    Family::Standard => 1.0,
                    Family::Monic => -1.0 / i,
                    Family::UnitAtZero => (a + i) / i,
                    Family::Brenke => a + i,
                };
            }
            weights.push(rational_to_f64(g) * r);
        }
        Ok(ComboEvaluator { n, alpha: a, weights })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// `(q_n(x), q_n'(x))` up to the common positive factor `2^exp2 c_n`.
    pub fn eval(&self, x: ComplexF) -> (ComplexF, ComplexF, i64) {
        let n = self.n;
        let k = self.weights.len() - 1;
        let a = self.alpha;
        let zero = ComplexF::new(0.0, 0.0);
        let mut exp2: i64 = 0;
        let mut val = zero;
        let mut der = zero;
        // (L_{m-1}, L_m) and derivatives
        let (mut lp, mut l) = (zero, ComplexF::new(1.0, 0.0));
        let (mut dp, mut d) = (zero, zero);
        let add = |m: usize, l: ComplexF, d: ComplexF, val: &mut ComplexF, der: &mut ComplexF| {
            if m + k >= n {
                let w = self.weights[n - m];
                *val += l * w;
                *der += d * w;
            }
        };
        add(0, l, d, &mut val, &mut der);
        for m in 0..n {
            let mf = m as f64;
            let c = 2.0 * mf + 1.0 + a - x;
            let (ln, dn) = if m == 0 {
                (ComplexF::new(1.0 + a, 0.0) - x, ComplexF::new(-1.0, 0.0))
            } else {
                (
                    (c * l - lp * (mf + a)) / (mf + 1.0),
                    (c * d - l - dp * (mf + a)) / (mf + 1.0),
                )
            };
            lp = l;
            dp = d;
            l = ln;
            d = dn;
            add(m + 1, l, d, &mut val, &mut der);
            let mag = l.norm().max(d.norm()).max(lp.norm()).max(val.norm());
            if mag > BIG {
                let s = libm::ldexp(1.0, -SHIFT);
                l *= s;
                lp *= s;
                d *= s;
                dp *= s;
                val *= s;
                der *= s;
                exp2 += SHIFT as i64;
            } else if mag < 1.0 / BIG && mag > 0.0 {
                let s = libm::ldexp(1.0, SHIFT);
                l *= s;
                lp *= s;
                d *= s;
                dp *= s;
                val *= s;
                der *= s;
                exp2 -= SHIFT as i64;
            }
        }
        (val, der, exp2)
    }

    /// Newton correction `q_n(x) / q_n'(x)`.
    pub fn newton(&self, x: ComplexF) -> ComplexF {
        let (v, d, _) = self.eval(x);
        v / d
    }
}

/// Float evaluation of a small exact polynomial after an exact power-of-two
/// rescaling `x = 2^s y` that brings its roots near the unit circle.
#[derive(Clone, Debug)]
pub struct MonomialEvaluator {
    /// Coefficients of the monic `p(2^s y) / (lc 2^(s d))`, ascending.
    coeffs: Vec<f64>,
    shift: i32,
}

impl MonomialEvaluator {
    pub fn new(p: &Poly) -> Result<Self> {
        let d = p.degree().ok_or(Error::InvalidArgument("zero polynomial".into()))?;
        let m = p.monic();
        // Fujiwara-type bound 2 max |a_{d-k}|^(1/k)
        let mut bound: f64 = 0.0;
        for k in 1..=d {
            let (f, e) = crate::ratpoly::scaled_ratio(m.coeff(d - k).numer(), m.coeff(d - k).denom());
            if f != 0.0 {
                let log2 = (libm::log2(f.abs()) + e as f64) / k as f64;
                bound = bound.max(log2);
            }
        }
        let shift = libm::ceil(bound) as i32;
        let s = crate::ratpoly::Rational::new(
            num_bigint::BigInt::from(1) << shift.max(0) as usize,
            num_bigint::BigInt::from(1) << (-shift).max(0) as usize,
        );
        let scaled = m.compose_scale(&s).monic();
        let coeffs = scaled.coeffs().iter().map(rational_to_f64).collect();
        Ok(MonomialEvaluator { coeffs, shift })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Scale factor `2^s` between `x` and the internal variable.
    pub fn scale(&self) -> f64 {
        libm::ldexp(1.0, self.shift)
    }

    /// Newton correction in the internal variable `y`.
    pub fn newton(&self, y: ComplexF) -> ComplexF {
        let d = self.degree();
        if y.norm() <= 1.0 {
            let mut p = ComplexF::new(0.0, 0.0);
            let mut dp = ComplexF::new(0.0, 0.0);
            for c in self.coeffs.iter().rev() {
                dp = dp * y + p;
                p = p * y + *c;
            }
            p / dp
        } else {
            // reversed polynomial in u = 1/y
            let u = y.inv();
            let mut r = ComplexF::new(0.0, 0.0);
            let mut dr = ComplexF::new(0.0, 0.0);
            for c in self.coeffs.iter() {
                dr = dr * u + r;
                r = r * u + *c;
            }
            // p(y) = y^d r(u), p'(y) = d y^(d-1) r(u) - y^(d-2) r'(u)
            y * r / (r * d as f64 - dr * u)
        }
    }
}
