//! Command-line driver: experiment configs in, versioned JSON or CSV
//! reports out.

pub mod checks;
pub mod config;
pub mod report;

use std::path::{Path, PathBuf};

use laguerre_core::asymptotics::predict_zero_limits;
use laguerre_core::asymptotics::DEFAULT_LEFTMOST;
use laguerre_core::ratpoly::format_rational;
use rayon::prelude::*;
use serde_json::{json, Value};

use checks::{records_json, Context, Status, Verdict};
use config::{ConfigError, Experiment, Overrides};
use report::{complex, experiment_header, poly, zero_table_csv, SCHEMA};

/// Exit codes.
pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// Rendered output of a command and its exit code.
#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    pub body: String,
    pub code: i32,
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn header(exp: &Experiment, command: &str) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("command".into(), json!(command));
    m.insert("experiment".into(), experiment_header(&exp.name, &exp.spec, exp.window, exp.seed));
    m
}

/// Exact coefficients of `q_n` over the window and of `P` and `Q`.
pub fn construct(exp: &Experiment, format: Format) -> Result<Output, ConfigError> {
    let spec = &exp.spec;
    let mut qs = Vec::new();
    for n in exp.window.0..=exp.window.1 {
        qs.push((n, spec.build_qn(n).map_err(|e| ConfigError(e.to_string()))?));
    }
    let (p, q) = (spec.companion_p(), spec.companion_q());
    let body = match format {
        Format::Json => {
            let mut m = header(exp, "construct");
            m.insert(
                "certified".into(),
                json!({
                    "P": poly(&p),
                    "Q": poly(&q),
                    "q": qs.iter().map(|(n, x)| json!({"n": n, "coefficients": poly(x)})).collect::<Vec<_>>(),
                }),
            );
            render(&Value::Object(m))
        }
        Format::Csv => {
            let mut out = String::from("poly,n,power,coefficient\n");
            let mut rows = |name: &str, n: String, x: &laguerre_core::Poly| {
                for (k, c) in x.coeffs().iter().enumerate() {
                    out.push_str(&format!("{name},{n},{k},{}\n", format_rational(c)));
                }
            };
            rows("P", String::new(), &p);
            rows("Q", String::new(), &q);
            for (n, x) in &qs {
                rows("q", n.to_string(), x);
            }
            out
        }
    };
    Ok(Output { body, code: EXIT_PASS })
}

fn exit_for(verdicts: &[Verdict]) -> i32 {
    if verdicts.iter().any(|v| v.status == Status::Fail) {
        EXIT_FAIL
    } else {
        EXIT_PASS
    }
}

fn run_report(exp: &Experiment, command: &str, ctx: &Context, verdicts: &[Verdict]) -> Value {
    let mut m = header(exp, command);
    if let Some(r) = ctx.scanned() {
        m.insert("certified".into(), json!({"records": records_json(r)}));
    }
    let vmap: serde_json::Map<String, Value> = verdicts.iter().map(|v| (v.check.clone(), v.to_json())).collect();
    m.insert("verdicts".into(), Value::Object(vmap));
    m.insert("passed".into(), json!(exit_for(verdicts) == EXIT_PASS));
    Value::Object(m)
}

/// Certified zero report per degree of the window, with the claims that
/// apply to the spec.
pub fn zeros(exp: &Experiment, format: Format) -> Result<Output, ConfigError> {
    let mut ctx = Context::new(exp);
    let v = ctx.run("zeros");
    let code = exit_for(std::slice::from_ref(&v));
    let body = match format {
        Format::Json => render(&run_report(exp, "zeros", &ctx, &[v])),
        Format::Csv => {
            let recs = ctx.records().map_err(ConfigError)?;
            zero_table_csv(recs)
        }
    };
    Ok(Output { body, code })
}

/// Predicted limits of the scaled zeros.
pub fn predict(exp: &Experiment, format: Format) -> Result<Output, ConfigError> {
    let preds = predict_zero_limits(&exp.spec, DEFAULT_LEFTMOST).map_err(|e| ConfigError(e.to_string()))?;
    let body = match format {
        Format::Csv => {
            let mut out = String::from("kind,index,scaling,limit_re,limit_im\n");
            for p in &preds {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    p.kind.name(),
                    p.index,
                    p.scaling.name(),
                    report::num(p.limit.re),
                    report::num(p.limit.im)
                ));
            }
            out
        }
        Format::Json => {
            let mut m = header(exp, "predict");
            let rows: Vec<Value> = preds
                .iter()
                .map(|p| json!({"kind": p.kind.name(), "index": p.index, "scaling": p.scaling.name(), "limit": complex(p.limit)}))
                .collect();
            m.insert("numeric".into(), json!({"predictions": rows}));
            render(&Value::Object(m))
        }
    };
    Ok(Output { body, code: EXIT_PASS })
}

/// Runs the configured checks; `zeros` when none are named.
pub fn verify_report(exp: &Experiment) -> (Value, i32) {
    let mut ctx = Context::new(exp);
    let names: Vec<String> = if exp.checks.is_empty() { vec!["zeros".into()] } else { exp.checks.clone() };
    let verdicts: Vec<Verdict> = names.iter().map(|c| ctx.run(c)).collect();
    (run_report(exp, "verify", &ctx, &verdicts), exit_for(&verdicts))
}

pub fn verify(exp: &Experiment) -> Output {
    let (v, code) = verify_report(exp);
    Output { body: render(&v), code }
}

/// Loads and validates one config file.
pub fn load_experiment(path: &Path, ov: &Overrides) -> Result<Experiment, ConfigError> {
    let mut exp = config::load(path)?.validate(ov)?;
    if exp.name.is_empty() {
        exp.name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    }
    Ok(exp)
}

/// Result of one config in a sweep.
#[derive(Clone, Debug)]
pub struct SweepEntry {
    pub file: PathBuf,
    pub code: i32,
    pub report: Option<Value>,
    pub error: Option<String>,
}

/// Runs `verify` on every `*.json` file of `dir` in parallel. Writes one
/// report per config into `out_dir` when given. The exit code is the worst
/// over all configs.
pub fn sweep(dir: &Path, out_dir: Option<&Path>, ov: &Overrides) -> std::io::Result<Output> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json") && p.is_file())
        .collect();
    files.sort();
    if files.is_empty() {
        eprintln!("warning: no *.json configs in {}", dir.display());
    }
    let entries: Vec<SweepEntry> = files
        .par_iter()
        .map(|f| match load_experiment(f, ov) {
            Ok(exp) => {
                let (report, code) = verify_report(&exp);
                SweepEntry { file: f.clone(), code, report: Some(report), error: None }
            }
            Err(e) => SweepEntry { file: f.clone(), code: EXIT_INVALID, report: None, error: Some(e.0) },
        })
        .collect();
    if let Some(out) = out_dir {
        std::fs::create_dir_all(out)?;
        for e in &entries {
            if let (Some(r), Some(stem)) = (&e.report, e.file.file_stem()) {
                std::fs::write(out.join(format!("{}.report.json", stem.to_string_lossy())), render(r))?;
            }
        }
    }
    let code = entries.iter().map(|e| e.code).max().unwrap_or(EXIT_PASS);
    let rows: Vec<Value> = entries
        .iter()
        .map(|e| {
            let failed: Vec<String> = e
                .report
                .as_ref()
                .and_then(|r| r["verdicts"].as_object())
                .map(|m| m.iter().filter(|(_, v)| v["status"] == "fail").map(|(k, _)| k.clone()).collect())
                .unwrap_or_default();
            json!({
                "config": e.file.file_name().map(|s| s.to_string_lossy().into_owned()),
                "status": match e.code { EXIT_PASS => "pass", EXIT_FAIL => "fail", _ => "invalid" },
                "failedChecks": failed,
                "error": e.error,
            })
        })
        .collect();
    let agg = json!({
        "schema": SCHEMA,
        "command": "sweep",
        "configs": rows,
        "passed": code == EXIT_PASS,
    });
    let body = render(&agg);
    if let Some(out) = out_dir {
        std::fs::write(out.join("aggregate.json"), &body)?;
    }
    Ok(Output { body, code })
}
