use alloc::vec::Vec;

use super::certify::certified_report;
use super::interlace::{check_interlace, interlace_from_reports, InterlaceVerdict};
use super::report::{analyze_zeros, ZeroReport};
use crate::combo::GammaSpec;
use crate::error::{Error, Result};
use crate::ratpoly::Poly;

/// Zeros of `q_n` and how they sit against those of `q_{n-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct WindowRecord {
    pub n: usize,
    pub poly: Poly,
    pub report: ZeroReport,
    /// Whether the real zeros of `q_n` interlace those of `q_{n-1}`;
    /// `None` at the first `n` of the window.
    pub interlace_prev: Option<InterlaceVerdict>,
    /// True when the report came from a sign-change certificate rather than
    /// a full Sturm isolation.
    pub via_certificate: bool,
}

/// Exact scan of `q_n` for `n` in `[n_min, n_max]`.
pub fn scan_window(spec: &GammaSpec, n_min: usize, n_max: usize) -> Result<Vec<WindowRecord>> {
    scan_window_with(spec, n_min, n_max, &|_, _| None)
}

/// As [`scan_window`], first trying a sign-change certificate built from
/// the approximate real zeros returned by `approx`. A certificate that does
/// not account for every zero falls back to Sturm isolation.
pub fn scan_window_with(
    spec: &GammaSpec,
    n_min: usize,
    n_max: usize,
    approx: &dyn Fn(usize, &Poly) -> Option<Vec<f64>>,
) -> Result<Vec<WindowRecord>> {
    if n_min < spec.k() {
        return Err(Error::InvalidArgument(alloc::format!(
            "window start {n_min} is below K = {}",
            spec.k()
        )));
    }
    let mut out: Vec<WindowRecord> = Vec::with_capacity(n_max.saturating_sub(n_min) + 1);
    for n in n_min..=n_max {
        let poly = spec.build_qn(n)?;
        let cert = approx(n, &poly).and_then(|a| certified_report(&poly, &a));
        let via_certificate = cert.is_some();
        let report = match cert {
            Some(r) => r,
            None => analyze_zeros(&poly, &[])?,
        };
        let interlace_prev = out.last().map(|prev| {
            interlace_from_reports(&report, &prev.report)
                .unwrap_or_else(|| check_interlace(&poly, &prev.poly))
        });
        out.push(WindowRecord { n, poly, report, interlace_prev, via_certificate });
    }
    Ok(out)
}

/// Smallest `n` of the scanned window from which `pred` holds for every
/// later record. `None` when it fails at the last record.
pub fn onset<F: Fn(&WindowRecord) -> bool>(records: &[WindowRecord], pred: F) -> Option<usize> {
    let mut start = None;
    for r in records.iter().rev() {
        if pred(r) {
            start = Some(r.n);
        } else {
            break;
        }
    }
    start
}
