use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ratpoly::{IntPoly, Poly, Rational};

/// Sturm sequence built from primitive pseudo-remainders, with signs fixed so
/// that each element is a positive multiple of the true negated remainder.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Self {
        let mut chain = Vec::new();
        if p.is_zero() {
            return SturmChain { chain };
        }
        chain.push(p.primitive());
        let d = p.derivative().primitive();
        if d.is_zero() {
            return SturmChain { chain };
        }
        chain.push(d);
        loop {
            let k = chain.len();
            let a = &chain[k - 2];
            let b = &chain[k - 1];
            if b.degree() == Some(0) {
                break;
            }
            let r = a.prem(b);
            if r.is_zero() {
                break;
            }
            let delta = a.degree().unwrap() - b.degree().unwrap() + 1;
            let lc_neg = b.leading().is_some_and(|l| l.sign() == num_bigint::Sign::Minus);
            let flip = !(lc_neg && delta % 2 == 1);
            let r = r.primitive();
            chain.push(if flip { r.neg() } else { r });
        }
        SturmChain { chain }
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0i8;
        let mut v = 0;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        Self::variations(self.chain.iter().map(|q| q.sign_at(x)))
    }

    pub fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::variations(self.chain.iter().map(|q| q.sign_at_infinity(positive)))
    }

    /// Distinct real roots in `(a, b]`.
    pub fn count(&self, a: &Rational, b: &Rational) -> usize {
        if a >= b {
            return 0;
        }
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }

    /// Distinct real roots on the whole line.
    pub fn count_all(&self) -> usize {
        self.variations_at_infinity(false)
            .saturating_sub(self.variations_at_infinity(true))
    }
}

/// Number of distinct real roots of `p` in `(a, b]`.
pub fn sturm_count(p: &Poly, a: &Rational, b: &Rational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::InvalidArgument("zero polynomial".into()));
    }
    if a >= b {
        return Err(Error::InvalidArgument("empty interval".into()));
    }
    Ok(SturmChain::new(&p.to_int()).count(a, b))
}

/// Number of distinct real roots of `p`.
pub fn sturm_count_all(p: &Poly) -> usize {
    if p.is_zero() || p.coeffs().iter().all(Zero::is_zero) {
        return 0;
    }
    SturmChain::new(&p.to_int()).count_all()
}
