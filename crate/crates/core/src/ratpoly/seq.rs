use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{int, Poly, Rational};

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient `C(n, k)` for nonnegative integers.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Rising factorial `(a)_k = a (a+1) ... (a+k-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut t = a.clone();
    for _ in 0..k {
        acc *= &t;
        t += Rational::one();
    }
    acc
}

/// The polynomial `(x)_k` in the variable `x`.
pub fn rising_factorial_poly(k: usize) -> Poly {
    let mut p = Poly::one();
    for i in 0..k {
        p = &p * &Poly::new(vec![int(i as i64), Rational::one()]);
    }
    p
}

/// Table `S[n][k]` of Stirling numbers of the second kind for `n <= max`.
pub fn stirling2_table(max: usize) -> Vec<Vec<BigInt>> {
    let mut s = vec![vec![BigInt::zero(); max + 1]; max + 1];
    s[0][0] = BigInt::one();
    for n in 1..=max {
        for k in 1..=n {
            s[n][k] = BigInt::from(k) * &s[n - 1][k] + &s[n - 1][k - 1];
        }
    }
    s
}

pub fn stirling2(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    stirling2_table(n)[n][k].clone()
}

/// Touchard polynomial `Be_n(x) = sum_k S(n, k) x^k`.
pub fn bell_poly(n: usize) -> Poly {
    let s = stirling2_table(n);
    Poly::new(s[n].iter().map(|v| Rational::from_integer(v.clone())).collect())
}
