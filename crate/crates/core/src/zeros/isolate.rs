use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::squarefree::square_free_decompose;
use super::sturm::SturmChain;
use crate::error::{Error, Result};
use crate::ratpoly::{floor, rational_to_f64, IntPoly, Poly, Rational};

/// Location of one real root.
///
/// `lo == hi` means the root is exactly `lo`. Otherwise the root lies in the
/// open interval `(lo, hi)`, is the only root of its square-free factor there,
/// and that factor does not vanish at `hi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RootInterval {
    pub fn exact(r: Rational) -> Self {
        RootInterval { lo: r.clone(), hi: r }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn approx(&self) -> f64 {
        rational_to_f64(&self.midpoint())
    }

    /// True when the two root sets cannot be told apart yet.
    pub fn overlaps(&self, o: &RootInterval) -> bool {
        match (self.is_exact(), o.is_exact()) {
            (true, true) => self.lo == o.lo,
            (true, false) => o.lo < self.lo && self.lo < o.hi,
            (false, true) => self.lo < o.lo && o.lo < self.hi,
            (false, false) => self.lo.clone().max(o.lo.clone()) < self.hi.clone().min(o.hi.clone()),
        }
    }

    /// Halves the interval around the root of the square-free `p`.
    pub fn bisect(&mut self, p: &IntPoly) {
        if self.is_exact() {
            return;
        }
        let s_hi = p.sign_at(&self.hi);
        let m = self.midpoint();
        let s = p.sign_at(&m);
        if s == 0 {
            *self = RootInterval::exact(m);
        } else if s == s_hi {
            self.hi = m;
        } else {
            self.lo = m;
        }
    }

    /// Bisects until the width is at most `w`.
    pub fn refine_to(&mut self, p: &IntPoly, w: &Rational) {
        while !self.is_exact() && &self.width() > w {
            self.bisect(p);
        }
    }

    /// `(floor, is_integer)` of the root, refining as needed.
    pub fn floor(&mut self, p: &IntPoly) -> (BigInt, bool) {
        loop {
            if self.is_exact() {
                return (floor(&self.lo), self.lo.is_integer());
            }
            let fl = floor(&self.lo);
            if fl == crate::ratpoly::ceil(&self.hi) - BigInt::one() {
                return (fl, false);
            }
            let m = Rational::from_integer(fl + BigInt::one());
            self.compare(p, &m);
        }
    }

    /// Sign of `root - c`, refining as needed.
    pub fn compare(&mut self, p: &IntPoly, c: &Rational) -> core::cmp::Ordering {
        use core::cmp::Ordering::*;
        if self.is_exact() {
            return self.lo.cmp(c);
        }
        if &self.hi <= c {
            return Less;
        }
        if &self.lo >= c {
            return Greater;
        }
        let s = p.sign_at(c);
        if s == 0 {
            *self = RootInterval::exact(c.clone());
            return Equal;
        }
        if s == p.sign_at(&self.hi) {
            self.hi = c.clone();
            Less
        } else {
            self.lo = c.clone();
            Greater
        }
    }
}

/// Isolating intervals for the real roots of a square-free integer
/// polynomial, in increasing order.
pub fn isolate_real_roots(p: &IntPoly) -> Vec<RootInterval> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let chain = SturmChain::new(p);
    let b = Rational::from_integer(p.root_bound());
    let lo = -b.clone();
    let vlo = chain.variations_at(&lo);
    let vhi = chain.variations_at(&b);
    let mut stack = vec![(lo, b, vlo, vhi)];
    while let Some((a, b, va, vb)) = stack.pop() {
        let k = va.saturating_sub(vb);
        if k == 0 {
            continue;
        }
        if k == 1 {
            if p.sign_at(&b) == 0 {
                out.push(RootInterval::exact(b));
            } else {
                out.push(RootInterval { lo: a, hi: b });
            }
            continue;
        }
        let m = (&a + &b) / Rational::from_integer(2.into());
        let vm = chain.variations_at(&m);
        stack.push((m.clone(), b, vm, vb));
        stack.push((a, m, va, vm));
    }
    out.sort_by(|x, y| (&x.lo, &x.hi).cmp(&(&y.lo, &y.hi)));
    out
}

/// Simplest fraction (smallest denominator, then numerator) in `[lo, hi]`.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo <= hi);
    if !lo.is_positive() && !hi.is_negative() {
        return Rational::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    let fl = floor(lo);
    let fl_r = Rational::from_integer(fl.clone());
    if fl_r == *lo {
        return fl_r;
    }
    let up = Rational::from_integer(fl + BigInt::one());
    if &up <= hi {
        return up;
    }
    let inner = simplest_between(&(hi - &fl_r).recip(), &(lo - &fl_r).recip());
    fl_r + inner.recip()
}

/// Rational roots of `p` with multiplicities, in increasing order.
pub fn rational_roots(p: &Poly) -> Vec<(Rational, usize)> {
    let mut out = Vec::new();
    for (f, mult) in square_free_decompose(p) {
        let ip = f.to_int();
        let lc = ip.leading().expect("nonconstant").abs();
        let w = Rational::new(BigInt::one(), &lc * &lc * BigInt::from(2));
        for mut iv in isolate_real_roots(&ip) {
            if iv.is_exact() {
                out.push((iv.lo, mult));
                continue;
            }
            iv.refine_to(&ip, &w);
            if iv.is_exact() {
                out.push((iv.lo, mult));
                continue;
            }
            let s = simplest_between(&iv.lo, &iv.hi);
            if ip.sign_at(&s) == 0 {
                out.push((s, mult));
            }
        }
    }
    out.sort();
    out
}

/// Refines an isolating interval of a root of `p` to width at most
/// `2^-bits` times its initial width and returns its midpoint.
pub fn refine_root(p: &Poly, interval: &RootInterval, bits: u32) -> Result<Rational> {
    if interval.is_exact() {
        return if p.eval(&interval.lo).is_zero() {
            Ok(interval.lo.clone())
        } else {
            Err(Error::NotIsolating)
        };
    }
    if interval.lo > interval.hi || p.is_zero() {
        return Err(Error::NotIsolating);
    }
    let sf = super::squarefree::square_free_part(p).to_int();
    let chain = SturmChain::new(&sf);
    let on_hi = sf.sign_at(&interval.hi) == 0;
    let inside = chain.count(&interval.lo, &interval.hi) - usize::from(on_hi);
    if inside != 1 {
        return Err(Error::NotIsolating);
    }
    let mut iv = interval.clone();
    while sf.sign_at(&iv.hi) == 0 {
        let m = iv.midpoint();
        if chain.count(&iv.lo, &m) == 1 {
            if sf.sign_at(&m) == 0 {
                return Ok(m);
            }
            iv.hi = m;
        } else {
            iv.lo = m;
        }
    }
    let w = interval.width() / Rational::from_integer(BigInt::one() << bits as usize);
    iv.refine_to(&sf, &w);
    Ok(iv.midpoint())
}
