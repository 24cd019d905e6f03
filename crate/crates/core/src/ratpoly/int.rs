use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Poly, Rational};

/// Polynomial with integer coefficients in ascending powers, used for exact
/// sign evaluation and Sturm sequences.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    c: Vec<BigInt>,
}

fn sign_of(v: &BigInt) -> i8 {
    match v.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

impl IntPoly {
    pub fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        IntPoly { c }
    }

    /// Clears denominators and content; the leading sign is preserved.
    pub fn from_poly(p: &Poly) -> Self {
        let l = p
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
        let c = p
            .coeffs()
            .iter()
            .map(|a| a.numer() * (&l / a.denom()))
            .collect();
        IntPoly::new(c).primitive()
    }

    pub fn to_poly(&self) -> Poly {
        Poly::new(self.c.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.c.last()
    }

    pub fn content(&self) -> BigInt {
        self.c.iter().fold(BigInt::zero(), |g, a| g.gcd(a))
    }

    /// Divides by the (positive) content.
    pub fn primitive(&self) -> IntPoly {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPoly { c: self.c.iter().map(|a| a / &g).collect() }
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly { c: self.c.iter().map(|a| -a).collect() }
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| a * BigInt::from(k))
                .collect(),
        )
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) a = q b + r`.
    pub fn prem(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("nonzero divisor");
        let Some(da) = self.degree() else {
            return IntPoly::zero();
        };
        if da < db {
            return self.clone();
        }
        let lb = &b.c[db];
        let mut r = self.c.clone();
        let mut steps = 0usize;
        let mut top = da;
        loop {
            while top > 0 && r[top].is_zero() {
                top -= 1;
            }
            if top < db || r[top].is_zero() {
                break;
            }
            let lr = r[top].clone();
            for v in r.iter_mut().take(top + 1) {
                *v *= lb;
            }
            let off = top - db;
            for (i, bv) in b.c.iter().enumerate() {
                r[off + i] -= &lr * bv;
            }
            steps += 1;
            if top == 0 {
                break;
            }
        }
        let mut out = IntPoly::new(r);
        let extra = da - db + 1 - steps;
        if extra > 0 {
            let f = num_traits::pow(lb.clone(), extra);
            out = IntPoly { c: out.c.into_iter().map(|a| a * &f).collect() };
        }
        out
    }

    pub fn zero() -> IntPoly {
        IntPoly { c: Vec::new() }
    }

    /// `q^n p(a/q)` for `a/q` in lowest terms with `q > 0` and `n = deg p`.
    pub fn eval_homogeneous(&self, x: &Rational) -> BigInt {
        let Some(n) = self.degree() else {
            return BigInt::zero();
        };
        let p = x.numer();
        let q = x.denom();
        let mut acc = self.c[n].clone();
        let mut qpow = BigInt::one();
        for i in (0..n).rev() {
            qpow *= q;
            acc = acc * p + &self.c[i] * &qpow;
        }
        acc
    }

    /// Exact sign of `p(x)`.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        sign_of(&self.eval_homogeneous(x))
    }

    /// Sign of `p(x)` as `x -> +inf` (or `-inf` when `positive` is false).
    pub fn sign_at_infinity(&self, positive: bool) -> i8 {
        match self.degree() {
            None => 0,
            Some(n) => {
                let s = sign_of(&self.c[n]);
                if positive || n % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        }
    }

    /// Integer `B = 2^k` with every real root strictly inside `(-B, B)`.
    pub fn root_bound(&self) -> BigInt {
        let n = self.degree().unwrap_or(0);
        if n == 0 {
            return BigInt::one();
        }
        let lc = self.c[n].abs();
        let m = self.c[..n].iter().map(Signed::abs).max().unwrap_or_default();
        // Cauchy: 1 + max|a_i| / |a_n|
        let mut b = BigInt::one();
        let target = Rational::one() + Rational::new(m, lc);
        while Rational::from_integer(b.clone()).cmp(&target) != Ordering::Greater {
            b <<= 1;
        }
        b
    }

    pub fn scalar_mul(&self, s: &BigInt) -> IntPoly {
        IntPoly::new(self.c.iter().map(|a| a * s).collect())
    }
}
