use alloc::vec::Vec;

use super::GammaSpec;
use crate::error::{Error, Result};
use crate::laguerre::Family;
use crate::ratpoly::{int, TruncatedSeries};

/// `e^z (sum_j gamma_j z^j) 0F1(-; alpha+1; -x z)` truncated after `z^order`.
pub fn build_generating_series(spec: &GammaSpec, order: usize) -> Result<TruncatedSeries> {
    if spec.family != Family::Brenke {
        return Err(Error::InvalidArgument(
            "the generating series is defined for the Brenke family".into(),
        ));
    }
    let ez = TruncatedSeries::from_scalars(&[int(0), int(1)], order).exp()?;
    let g = TruncatedSeries::from_scalars(spec.gamma(), order);
    let h = TruncatedSeries::hyper01(&spec.alpha, order)?;
    Ok(ez.mul(&g).mul(&h))
}

/// Indices `n <= n_max` at which the series coefficient differs from
/// `sum_{j <= min(n, K)} gamma_j p_{n-j}`.
pub fn verify_generating_series(spec: &GammaSpec, n_max: usize) -> Result<Vec<usize>> {
    let series = build_generating_series(spec, n_max + spec.k() + 2)?;
    let mut bad = Vec::new();
    for n in 0..=n_max {
        if series.coeff(n) != &spec.partial_qn(n)? {
            bad.push(n);
        }
    }
    Ok(bad)
}
