use alloc::vec::Vec;

use super::isolate::{simplest_between, RootInterval};
use super::report::ZeroReport;
use crate::ratpoly::{IntPoly, Poly, Rational};

/// Sign alternation of `p` at rational separators placed between numerically
/// located real roots. Every recorded interval certainly contains a root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignCertificate {
    pub degree: usize,
    pub intervals: Vec<RootInterval>,
}

impl SignCertificate {
    /// Certified lower bound on the number of real roots.
    pub fn sign_changes(&self) -> usize {
        self.intervals.len()
    }

    /// True when every root is real, simple and isolated.
    pub fn complete(&self) -> bool {
        self.intervals.len() == self.degree
    }
}

fn to_rational(x: f64) -> Rational {
    Rational::from_float(x).expect("finite")
}

/// Builds the certificate from approximate real roots of `p`.
pub fn certify_by_sign_changes(p: &IntPoly, approx: &[f64]) -> SignCertificate {
    let degree = p.degree().unwrap_or(0);
    let mut r: Vec<f64> = approx.iter().copied().filter(|x| x.is_finite()).collect();
    r.sort_by(f64::total_cmp);
    r.dedup();
    let mut intervals = Vec::new();
    if r.is_empty() {
        return SignCertificate { degree, intervals };
    }
    let mut seps: Vec<Rational> = Vec::with_capacity(r.len() + 1);
    let first_gap = if r.len() > 1 { r[1] - r[0] } else { 1.0 };
    let pad0 = first_gap.max(1e-3 * r[0].abs()).max(1e-9);
    seps.push(simplest_between(&to_rational(r[0] - pad0), &to_rational(r[0] - pad0 / 2.0)));
    for w in r.windows(2) {
        let g = w[1] - w[0];
        let a = to_rational(w[0] + g / 4.0);
        let b = to_rational(w[1] - g / 4.0);
        if a < b {
            seps.push(simplest_between(&a, &b));
        }
    }
    let k = r.len();
    let last_gap = if k > 1 { r[k - 1] - r[k - 2] } else { 1.0 };
    let pad1 = last_gap.max(1e-3 * r[k - 1].abs()).max(1e-9);
    seps.push(simplest_between(
        &to_rational(r[k - 1] + pad1 / 2.0),
        &to_rational(r[k - 1] + pad1),
    ));
    let mut prev: Option<(Rational, i8)> = None;
    for s in seps {
        let sg = p.sign_at(&s);
        if sg == 0 {
            intervals.push(RootInterval::exact(s));
            prev = None;
            continue;
        }
        if let Some((ps, psg)) = &prev {
            if *psg != sg {
                intervals.push(RootInterval { lo: ps.clone(), hi: s.clone() });
            }
        }
        prev = Some((s, sg));
    }
    SignCertificate { degree, intervals }
}

/// Full report when the certificate accounts for every root, else `None`.
pub fn certified_report(p: &Poly, approx: &[f64]) -> Option<ZeroReport> {
    let ip = p.to_int();
    let cert = certify_by_sign_changes(&ip, approx);
    if cert.complete() {
        Some(ZeroReport::from_simple_intervals(ip, cert.intervals))
    } else {
        None
    }
}
