use std::collections::BTreeMap;

use laguerre_core::asymptotics::{
    approx_real_zeros, check_mehler_heine, check_outer_asymptotic, check_ratio_limit, density_compare,
    verify_zero_limits,
};
use laguerre_core::combo::{verify_binomial_collapse, verify_generating_series, verify_bell_identity};
use laguerre_core::laguerre::{
    verify_negative_integer_identity, verify_operator_identities, verify_standard_identities,
};
use laguerre_core::zeros::{
    applicable_claims, desk_verifiable, evaluate_claim, k0_sign_failures, monic_thresholds, scan_window_with,
    test_real_rooted_preservation, threshold_real_simple, ClaimOutcome, Onset, WindowRecord,
};
use laguerre_core::{Family, Rational};
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::config::Experiment;
use crate::report::{complex, num, rat, rats, record};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        }
    }
}

/// Outcome of one named check. Exact results go under `certified`,
/// floating-point ones under `numeric`.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub check: String,
    pub anchor: &'static str,
    pub status: Status,
    pub reason: Option<String>,
    pub certified: Value,
    pub numeric: Value,
}

impl Verdict {
    fn new(check: &str, status: Status) -> Self {
        Verdict {
            check: check.into(),
            anchor: anchor(check),
            status,
            reason: None,
            certified: Value::Null,
            numeric: Value::Null,
        }
    }

    fn skip(check: &str, reason: impl Into<String>) -> Self {
        Verdict { reason: Some(reason.into()), ..Verdict::new(check, Status::Skip) }
    }

    fn fail(check: &str, reason: impl Into<String>) -> Self {
        Verdict { reason: Some(reason.into()), ..Verdict::new(check, Status::Fail) }
    }

    fn with(mut self, certified: Value, numeric: Value) -> Self {
        self.certified = certified;
        self.numeric = numeric;
        self
    }

    fn reason(mut self, r: impl Into<String>) -> Self {
        self.reason = Some(r.into());
        self
    }

    pub fn to_json(&self) -> Value {
        json!({
            "anchor": self.anchor,
            "status": self.status.name(),
            "reason": self.reason,
            "certified": self.certified,
            "numeric": self.numeric,
        })
    }
}

fn pass_if(b: bool) -> Status {
    if b {
        Status::Pass
    } else {
        Status::Fail
    }
}

/// The property each check tests.
pub fn anchor(check: &str) -> &'static str {
    match check {
        "zeros" => "real, non-real, negative and positive zero counts, simplicity and interlacing claimed for this normalization",
        "identities" => "derivative, contiguous, recurrence, negative-integer and ladder-operator identities",
        "bell-identity" => "monic combination equals the signed generalized Bell polynomial",
        "generating-series" => "Brenke combinations are the coefficients of e^z z^K P(1/z) 0F1(-; alpha+1; -xz)",
        "binomial-collapse" => "sum_j (-1)^j binom(K,j) L_{n-j}^alpha equals L_n^{alpha-K}",
        "thresholds" => "sign of q_n(0) equals sign of P(1) from k0 on; explicit degree thresholds",
        "mehler-heine" => "q_n(z/n), normalized, tends to P(1) 0F1(-; alpha+1; -z)",
        "outer" => "outer asymptotic of q_n(nz) through the conformal map phi",
        "limits" => "scaled zeros tend to Bessel zeros, conformal-map images of zeros of P, or -theta",
        "density" => "scaled zeros follow the density (1/2pi) sqrt((4-x)/x) on [0, 4]",
        "preservation" => "the map x^k -> p_k sends real-rooted polynomials of degree <= K to real-rooted ones",
        _ => "unknown check",
    }
}

/// Certified scan of the window, seeding sign-change certificates with
/// numeric zeros for large degrees.
pub fn scan(exp: &Experiment) -> laguerre_core::Result<Vec<WindowRecord>> {
    let spec = &exp.spec;
    scan_window_with(spec, exp.window.0, exp.window.1, &|n, _| {
        if n > 24 {
            approx_real_zeros(spec, n)
        } else {
            None
        }
    })
}

pub fn records_json(records: &[WindowRecord]) -> Value {
    Value::Array(records.iter().map(record).collect())
}

fn claim_json(c: &ClaimOutcome) -> Value {
    let reqs: Vec<Value> = c
        .outcomes
        .iter()
        .map(|o| {
            json!({
                "property": o.requirement.prop.describe(),
                "claimedFrom": match o.requirement.onset {
                    Onset::From(n) => json!(n),
                    Onset::Eventually => json!("eventually"),
                },
                "onset": o.onset,
                "failures": o.failures,
                "passed": o.passed,
            })
        })
        .collect();
    json!({"kind": c.claim.kind.name(), "statement": c.claim.anchor, "passed": c.passed(), "requirements": reqs})
}

/// Lazily scanned window shared by the checks of one run.
pub struct Context<'a> {
    pub exp: &'a Experiment,
    records: Option<Result<Vec<WindowRecord>, String>>,
}

impl<'a> Context<'a> {
    pub fn new(exp: &'a Experiment) -> Self {
        Context { exp, records: None }
    }

    pub fn records(&mut self) -> Result<&[WindowRecord], String> {
        if self.records.is_none() {
            self.records = Some(scan(self.exp).map_err(|e| e.to_string()));
        }
        match self.records.as_ref().expect("scanned") {
            Ok(r) => Ok(r),
            Err(e) => Err(e.clone()),
        }
    }

    pub fn scanned(&self) -> Option<&[WindowRecord]> {
        match &self.records {
            Some(Ok(r)) => Some(r),
            _ => None,
        }
    }

    pub fn run(&mut self, check: &str) -> Verdict {
        match check {
            "zeros" => self.zeros(),
            "identities" => identities(self.exp),
            "bell-identity" => bell(self.exp),
            "generating-series" => generating(self.exp),
            "binomial-collapse" => binomial(self.exp),
            "thresholds" => thresholds(self.exp),
            "mehler-heine" => mehler_heine(self.exp),
            "outer" => outer(self.exp),
            "limits" => limits(self.exp),
            "density" => density(self.exp),
            "preservation" => preservation(self.exp),
            other => Verdict::fail(other, "unknown check"),
        }
    }

    fn zeros(&mut self) -> Verdict {
        let spec = self.exp.spec.clone();
        let records = match self.records() {
            Ok(r) => r,
            Err(e) => return Verdict::fail("zeros", e),
        };
        let claims = applicable_claims(&spec);
        if claims.is_empty() {
            return Verdict::skip("zeros", "no zero-location claim applies (K = 0 or alpha <= -1)");
        }
        let outcomes: Vec<ClaimOutcome> = claims.iter().map(|c| evaluate_claim(c, &spec, records)).collect();
        let ok = outcomes.iter().all(ClaimOutcome::passed);
        let v = Verdict::new("zeros", pass_if(ok))
            .with(json!({"claims": outcomes.iter().map(claim_json).collect::<Vec<_>>()}), Value::Null);
        if ok {
            v
        } else {
            let bad: Vec<&str> = outcomes.iter().filter(|o| !o.passed()).map(|o| o.claim.kind.name()).collect();
            v.reason(format!("failed claims: {}", bad.join(", ")))
        }
    }
}

fn identities(exp: &Experiment) -> Verdict {
    let n_max = exp.window.1;
    let mut rep = verify_standard_identities(&exp.spec.alpha, n_max);
    rep.merge(verify_operator_identities(&exp.spec.alpha, n_max));
    rep.merge(verify_negative_integer_identity(n_max.min(40)));
    let failures: Vec<Value> = rep.failures.iter().map(|(id, n)| json!({"identity": format!("{id:?}"), "n": n})).collect();
    let v = Verdict::new("identities", pass_if(rep.passed()))
        .with(json!({"checked": rep.checked, "skipped": rep.skipped, "failures": failures}), Value::Null);
    if rep.passed() {
        v
    } else {
        v.reason(format!("{} identity instances fail", rep.failures.len()))
    }
}

fn bell(exp: &Experiment) -> Verdict {
    let rep = verify_bell_identity(&exp.spec, exp.window.1);
    if let Some(r) = &rep.skipped {
        return Verdict::skip("bell-identity", r.clone());
    }
    Verdict::new("bell-identity", pass_if(rep.passed()))
        .with(json!({"checked": rep.checked, "failures": rep.failures}), Value::Null)
}

fn generating(exp: &Experiment) -> Verdict {
    if exp.spec.family != Family::Brenke {
        return Verdict::skip("generating-series", "the generating series is defined for the Brenke family");
    }
    match verify_generating_series(&exp.spec, exp.window.1) {
        Ok(bad) => Verdict::new("generating-series", pass_if(bad.is_empty()))
            .with(json!({"nMax": exp.window.1, "failures": bad}), Value::Null),
        Err(e) => Verdict::fail("generating-series", e.to_string()),
    }
}

fn binomial(exp: &Experiment) -> Verdict {
    let k = exp.spec.k().max(1);
    match verify_binomial_collapse(k, &exp.spec.alpha, exp.window.1.max(k)) {
        Ok(bad) => Verdict::new("binomial-collapse", pass_if(bad.is_empty()))
            .with(json!({"K": k, "nMax": exp.window.1.max(k), "failures": bad}), Value::Null),
        Err(e) => Verdict::fail("binomial-collapse", e.to_string()),
    }
}

fn thresholds(exp: &Experiment) -> Verdict {
    let spec = &exp.spec;
    let k = spec.k();
    if k == 0 {
        return Verdict::skip("thresholds", "thresholds need K >= 1");
    }
    let mut cert = serde_json::Map::new();
    let cor = threshold_real_simple(spec.gamma(), &spec.alpha, k);
    cert.insert("realSimpleBound".into(), json!(cor.to_string()));
    cert.insert("realSimpleBoundDeskVerifiable".into(), json!(desk_verifiable(&cor, exp.cap)));
    if spec.family == Family::Monic {
        cert.insert(
            "monicThresholds".into(),
            match monic_thresholds(spec) {
                Some((n0, n1)) => json!({"n0": n0.to_string(), "n1": n1.to_string()}),
                None => Value::Null,
            },
        );
    }
    let p1: Rational = spec.gamma().iter().sum();
    let mut status = Status::Skip;
    let mut reason = Some("P(1) = 0: no sign threshold".to_string());
    if !p1.is_zero() {
        match k0_sign_failures(spec, 20) {
            Ok((k0, fails)) => {
                cert.insert("k0".into(), json!(k0));
                cert.insert("k0SignFailures".into(), json!(fails));
                cert.insert("signP1".into(), json!(if p1.is_positive() { 1 } else { -1 }));
                status = pass_if(fails.is_empty());
                reason = (!fails.is_empty()).then(|| format!("sign of q_n(0) differs from sign of P(1) at n = {fails:?}"));
            }
            Err(e) => {
                status = Status::Fail;
                reason = Some(e.to_string());
            }
        }
    }
    Verdict { reason, ..Verdict::new("thresholds", status) }.with(Value::Object(cert), Value::Null)
}

fn mehler_heine(exp: &Experiment) -> Verdict {
    let tol = exp.tolerance("mehler-heine", 1e-2);
    match check_mehler_heine(&exp.spec, &exp.n_list, &exp.z_grid) {
        Err(e) => Verdict::fail("mehler-heine", e.to_string()),
        Ok(r) => {
            if let Some(s) = r.skipped {
                return Verdict::skip("mehler-heine", s);
            }
            let last = r.rows.last().map_or(f64::INFINITY, |x| x.max_error);
            let ok = last <= tol && (r.rows.len() < 2 || r.decays);
            let rows: Vec<Value> = r.rows.iter().map(|x| json!({"n": x.n, "maxError": num(x.max_error)})).collect();
            let v = Verdict::new("mehler-heine", pass_if(ok))
                .with(Value::Null, json!({"tolerance": num(tol), "rows": rows, "decays": r.decays}));
            if ok {
                v
            } else {
                v.reason(format!("error {last:.3e} at the largest n, tolerance {tol:.1e}, decays: {}", r.decays))
            }
        }
    }
}

fn outer(exp: &Experiment) -> Verdict {
    let tol = exp.tolerance("outer", 0.1);
    let (Some(&n_lo), Some(&n_hi)) = (exp.n_list.iter().min(), exp.n_list.iter().max()) else {
        return Verdict::skip("outer", "empty nList");
    };
    let run = |n| check_outer_asymptotic(&exp.spec, n, &exp.outer_grid);
    let (hi, lo) = match (run(n_hi), run(n_lo)) {
        (Ok(h), Ok(l)) => (h, l),
        (Err(e), _) | (_, Err(e)) => return Verdict::fail("outer", e.to_string()),
    };
    if let Some(s) = hi.skipped {
        return Verdict::skip("outer", s);
    }
    let points: Vec<Value> = hi
        .points
        .iter()
        .zip(&lo.points)
        .map(|(h, l)| {
            json!({
                "z": complex(h.z),
                "predicted": complex(h.predicted),
                "observed": complex(h.observed),
                "relativeError": num(h.relative_error),
                "relativeErrorSmallestN": num(l.relative_error),
            })
        })
        .collect();
    let ratio = exp
        .outer_grid
        .first()
        .and_then(|z| check_ratio_limit(&exp.spec.alpha, n_hi, z).ok())
        .map_or(Value::Null, |r| {
            json!({"observed": complex(r.observed), "predicted": complex(r.predicted), "relativeError": num(r.relative_error)})
        });
    let ok = hi.max_error() <= tol;
    let v = Verdict::new("outer", pass_if(ok)).with(
        Value::Null,
        json!({"n": n_hi, "smallestN": n_lo, "tolerance": num(tol), "points": points, "ratio": ratio}),
    );
    if ok {
        v
    } else {
        v.reason(format!("largest relative error {:.3e} exceeds {tol:.1e}", hi.max_error()))
    }
}

fn limits(exp: &Experiment) -> Verdict {
    let tol = exp.tolerance("limits", 0.05);
    let r = match verify_zero_limits(&exp.spec, &exp.n_list, tol) {
        Ok(r) => r,
        Err(e) => return Verdict::skip("limits", e.to_string()),
    };
    let multi = exp.n_list.len() > 1;
    let shrink_ok = !multi || r.outcomes.iter().all(|o| o.shrinks);
    let ok = r.passed() && shrink_ok;
    let outcomes: Vec<Value> = r
        .outcomes
        .iter()
        .map(|o| {
            let p = &o.prediction;
            json!({
                "kind": p.kind.name(),
                "index": p.index,
                "scaling": p.scaling.name(),
                "limit": complex(p.limit),
                "samples": o.samples.iter().map(|s| json!({
                    "n": s.n, "observed": complex(s.observed), "relativeDeviation": num(s.relative_deviation)
                })).collect::<Vec<_>>(),
                "shrinks": o.shrinks,
                "withinTolerance": o.within_tolerance,
            })
        })
        .collect();
    let counts: Vec<Value> =
        r.counts.iter().map(|c| json!({"n": c.n, "realLowerBound": c.certified_lower})).collect();
    let structural: Vec<Value> = r.structural.iter().map(|s| json!({"n": s.n, "message": s.message})).collect();
    let v = Verdict::new("limits", pass_if(ok)).with(
        json!({"realZeroCounts": counts, "structuralFailures": structural}),
        json!({"tolerance": num(tol), "outcomes": outcomes}),
    );
    if ok {
        return v;
    }
    let bad: Vec<String> = r
        .outcomes
        .iter()
        .filter(|o| !o.within_tolerance || (multi && !o.shrinks))
        .map(|o| format!("{} {}", o.prediction.kind.name(), o.prediction.index))
        .collect();
    v.reason(format!("{} structural failures; off-limit predictions: {}", r.structural.len(), bad.join(", ")))
}

fn density(exp: &Experiment) -> Verdict {
    if exp.spec.family == Family::Monic {
        return Verdict::skip("density", "no zero-density limit is provided for the Monic family");
    }
    let tol = exp.tolerance("density", 0.08);
    let (Some(&n_lo), Some(&n_hi)) = (exp.n_list.iter().min(), exp.n_list.iter().max()) else {
        return Verdict::skip("density", "empty nList");
    };
    if n_lo < 50 {
        return Verdict::skip("density", "density comparison needs n >= 50");
    }
    let (hi, lo) = match (density_compare(&exp.spec, n_hi, exp.bins), density_compare(&exp.spec, n_lo, exp.bins)) {
        (Ok(h), Ok(l)) => (h, l),
        (Err(e), _) | (_, Err(e)) => return Verdict::fail("density", e.to_string()),
    };
    let ok = hi.total_variation < tol && (n_hi == n_lo || hi.total_variation < lo.total_variation);
    let v = Verdict::new("density", pass_if(ok)).with(
        Value::Null,
        json!({
            "n": n_hi,
            "bins": exp.bins,
            "tolerance": num(tol),
            "totalVariation": num(hi.total_variation),
            "smallestN": n_lo,
            "totalVariationSmallestN": num(lo.total_variation),
            "empirical": hi.empirical.iter().map(|&x| num(x)).collect::<Vec<_>>(),
            "expected": hi.expected.iter().map(|&x| num(x)).collect::<Vec<_>>(),
        }),
    );
    if ok {
        v
    } else {
        v.reason(format!(
            "total variation {:.4} at n = {n_hi} (tolerance {tol}), {:.4} at n = {n_lo}",
            hi.total_variation, lo.total_variation
        ))
    }
}

/// Whether real-rootedness preservation up to degree `k` is expected.
fn preservation_expected(family: Family, alpha: &Rational, k: usize) -> Option<bool> {
    if alpha <= &Rational::from_integer((-1).into()) {
        return None;
    }
    match family {
        Family::Monic => None,
        Family::UnitAtZero | Family::Brenke => Some(true),
        Family::Standard => {
            if alpha.is_integer() && !alpha.is_negative() {
                Some(true)
            } else {
                Some(alpha > &Rational::from_integer((k as i64 - 2).into()))
            }
        }
    }
}

fn preservation(exp: &Experiment) -> Verdict {
    let spec = &exp.spec;
    let k = spec.k().max(1);
    let Some(expected) = preservation_expected(spec.family, &spec.alpha, k) else {
        return Verdict::skip("preservation", "no preservation statement for this family and parameter");
    };
    let r = match test_real_rooted_preservation(spec.family, &spec.alpha, k, exp.trials, exp.seed) {
        Ok(r) => r,
        Err(e) => return Verdict::fail("preservation", e.to_string()),
    };
    let violator = r.violator.as_ref().map_or(Value::Null, |v| json!({"degree": v.degree, "nonReal": v.non_real}));
    let ok = if expected {
        r.violation_count() == 0
    } else {
        r.violator.as_ref().is_some_and(|v| v.non_real > 0)
    };
    let examples: Vec<Value> = r.violations.iter().take(5).map(|v| rats(v)).collect();
    let mut cert = BTreeMap::new();
    cert.insert("K", json!(k));
    cert.insert("trials", json!(r.trials));
    cert.insert("expectedPreserving", json!(expected));
    cert.insert("violations", json!(r.violation_count()));
    cert.insert("violationExamples", json!(examples));
    cert.insert("violator", violator);
    cert.insert("alpha", rat(&spec.alpha));
    let v = Verdict::new("preservation", pass_if(ok)).with(json!(cert), Value::Null);
    if ok {
        v
    } else if expected {
        v.reason(format!("{} real-rooted inputs map to polynomials with non-real zeros", r.violation_count()))
    } else {
        v.reason("the (x-1)^K input did not produce non-real zeros")
    }
}
