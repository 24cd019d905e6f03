use std::cmp::Ordering;

use laguerre_core::asymptotics::ComplexF;
use laguerre_core::combo::GammaSpec;
use laguerre_core::ratpoly::format_rational;
use laguerre_core::zeros::{WindowRecord, ZeroReport};
use laguerre_core::{Poly, Rational};
use serde_json::{json, Value};

pub const SCHEMA: &str = "laguerre-zeros/1";

/// Float rounded to ten significant digits, so reports are byte-stable.
pub fn num(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let r: f64 = format!("{x:.9e}").parse().expect("formatted float");
    json!(r)
}

pub fn complex(z: ComplexF) -> Value {
    json!([num(z.re), num(z.im)])
}

pub fn rat(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn rats(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rat).collect())
}

/// Coefficients, lowest power first.
pub fn poly(p: &Poly) -> Value {
    rats(p.coeffs())
}

pub fn experiment_header(name: &str, spec: &GammaSpec, window: (usize, usize), seed: u64) -> Value {
    json!({
        "name": name,
        "family": spec.family.name(),
        "alpha": rat(&spec.alpha),
        "gamma": rats(spec.gamma()),
        "K": spec.k(),
        "window": [window.0, window.1],
        "seed": seed,
    })
}

/// Sign of each distinct real zero: -1, 0 or 1.
pub fn root_signs(report: &ZeroReport) -> Vec<i8> {
    let mut r = report.clone();
    (0..r.roots.len())
        .map(|i| match r.compare_root(i, &Rational::from_integer(0.into())) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        })
        .collect()
}

pub fn zero_report(r: &ZeroReport) -> Value {
    let roots: Vec<Value> = r
        .roots
        .iter()
        .map(|x| json!({"lo": rat(&x.interval.lo), "hi": rat(&x.interval.hi), "mult": x.multiplicity}))
        .collect();
    json!({
        "degree": r.degree,
        "realCount": r.real_count,
        "nonRealCount": r.non_real_count,
        "negative": r.negative,
        "positive": r.positive,
        "zeroMultiplicity": r.zero_multiplicity,
        "allSimple": r.all_simple(),
        "roots": roots,
    })
}

pub fn record(rec: &WindowRecord) -> Value {
    let mut v = zero_report(&rec.report);
    let obj = v.as_object_mut().expect("object");
    obj.insert("n".into(), json!(rec.n));
    obj.insert("viaCertificate".into(), json!(rec.via_certificate));
    obj.insert(
        "interlacePrevious".into(),
        rec.interlace_prev.as_ref().map_or(Value::Null, |v| json!(v.name())),
    );
    v
}

/// Zero table rows `n, index, lo, hi, mult, sign`.
pub fn zero_table_csv(records: &[WindowRecord]) -> String {
    let mut out = String::from("n,index,lo,hi,mult,sign\n");
    for rec in records {
        let signs = root_signs(&rec.report);
        for (i, (r, s)) in rec.report.roots.iter().zip(signs).enumerate() {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                rec.n,
                i + 1,
                format_rational(&r.interval.lo),
                format_rational(&r.interval.hi),
                r.multiplicity,
                s
            ));
        }
    }
    out
}
