//! Zero-location claims for a combination, checked on a finite window of
//! degrees. "For all n >= n0" becomes a check from `n0` to the end of the
//! window; "for n big enough" becomes an onset search.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{ToPrimitive, Zero};

use super::interlace::count_gaps_with_zero;
use super::thresholds::monic_thresholds;
use super::window::WindowRecord;
use crate::combo::{CompanionCounts, GammaSpec};
use crate::laguerre::{laguerre, Family};
use crate::ratpoly::{int, Rational};

/// A per-degree property of `q_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Prop {
    /// Exactly this many non-real zeros.
    NonReal(usize),
    /// The origin is a zero of exactly this multiplicity and every other real
    /// zero is simple.
    Simple { origin: usize },
    /// Every zero is real and positive.
    AllPositive,
    /// Exactly this many negative zeros.
    Negative(usize),
    /// The real zeros of `q_n` interlace those of `q_{n-1}`.
    Interlace,
    /// At least `n - K` gaps between consecutive zeros of the family member
    /// of degree `n` hold a zero of `q_n`.
    GapContainment,
}

impl Prop {
    pub fn describe(&self) -> String {
        match self {
            Prop::NonReal(c) => format!("exactly {c} non-real zeros"),
            Prop::Simple { origin: 0 } => "real zeros simple".into(),
            Prop::Simple { origin } => format!("zero of multiplicity {origin} at the origin, other real zeros simple"),
            Prop::AllPositive => "all zeros positive".into(),
            Prop::Negative(c) => format!("exactly {c} negative zeros"),
            Prop::Interlace => "zeros interlace those of the previous degree".into(),
            Prop::GapContainment => "at least n-K gaps of the Laguerre zeros hold a zero".into(),
        }
    }
}

/// Where a property is claimed to hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Onset {
    /// For every `n >= from`.
    From(usize),
    /// For every `n` past some unspecified point.
    Eventually,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Requirement {
    pub prop: Prop,
    pub onset: Onset,
}

fn from(prop: Prop, n: usize) -> Requirement {
    Requirement { prop, onset: Onset::From(n) }
}

fn eventually(prop: Prop) -> Requirement {
    Requirement { prop, onset: Onset::Eventually }
}

/// Which family of results a claim comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClaimKind {
    /// Monic combinations, controlled by the zeros of `Q`.
    MonicCombination,
    /// Combinations normalized to one at the origin, controlled by `P`.
    UnitAtZeroCombination,
    /// Standard combinations with `alpha >= K - N_nr - 1`.
    StandardCombination,
    /// Standard combinations with integer `alpha`.
    IntegerParameter,
    /// Standard combinations with `K - 2 < alpha < K - 1`.
    NarrowParameterBand,
    /// Brenke combinations.
    BrenkeCombination,
    /// Gap containment against the zeros of the family member.
    GapContainment,
}

impl ClaimKind {
    pub fn name(self) -> &'static str {
        match self {
            ClaimKind::MonicCombination => "monic-combination",
            ClaimKind::UnitAtZeroCombination => "unit-at-zero-combination",
            ClaimKind::StandardCombination => "standard-combination",
            ClaimKind::IntegerParameter => "integer-parameter",
            ClaimKind::NarrowParameterBand => "narrow-parameter-band",
            ClaimKind::BrenkeCombination => "brenke-combination",
            ClaimKind::GapContainment => "gap-containment",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub kind: ClaimKind,
    /// Human-readable statement of the property being tested.
    pub anchor: String,
    pub requirements: Vec<Requirement>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RequirementOutcome {
    pub requirement: Requirement,
    /// First degree from which the property holds through the end of the
    /// window.
    pub onset: Option<usize>,
    /// Degrees at or after the claimed start where the property fails.
    pub failures: Vec<usize>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimOutcome {
    pub claim: Claim,
    pub outcomes: Vec<RequirementOutcome>,
}

impl ClaimOutcome {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }
}

fn alpha_gt_minus_one(spec: &GammaSpec) -> bool {
    spec.alpha > int(-1)
}

/// Every claim that applies to `spec`, with the properties it asserts.
/// A spec with `K = 0` gets none: the results need `K >= 1`.
pub fn applicable_claims(spec: &GammaSpec) -> Vec<Claim> {
    let k = spec.k();
    if k == 0 {
        return Vec::new();
    }
    let c = spec.companion_counts();
    let mut out = Vec::new();
    match spec.family {
        Family::Monic => {
            if alpha_gt_minus_one(spec) {
                out.push(monic_claim(spec));
            }
        }
        Family::UnitAtZero => {
            if alpha_gt_minus_one(spec) {
                out.push(unit_at_zero_claim(k, &c));
            }
        }
        Family::Standard => out.extend(standard_claims(spec, &c)),
        Family::Brenke => {
            if alpha_gt_minus_one(spec) {
                out.push(brenke_claim(spec, k, &c));
            }
        }
    }
    if alpha_gt_minus_one(spec) {
        out.push(Claim {
            kind: ClaimKind::GapContainment,
            anchor: "combination of n-K+1 consecutive orthogonal polynomials: at least n-K gaps between zeros of the degree-n member hold a zero".into(),
            requirements: vec![from(Prop::GapContainment, k)],
        });
    }
    out
}

fn to_usize(b: num_bigint::BigInt) -> usize {
    b.to_usize().unwrap_or(usize::MAX)
}

fn monic_claim(spec: &GammaSpec) -> Claim {
    match monic_thresholds(spec) {
        Some((n0, n1)) => Claim {
            kind: ClaimKind::MonicCombination,
            anchor: "monic combination with real-rooted Q: real simple zeros from n1, positive simple from n0, eventual interlacing".into(),
            requirements: vec![
                from(Prop::NonReal(0), to_usize(n1.clone())),
                from(Prop::Simple { origin: 0 }, to_usize(n1)),
                from(Prop::AllPositive, to_usize(n0)),
                eventually(Prop::Interlace),
            ],
        },
        None => Claim {
            kind: ClaimKind::MonicCombination,
            anchor: "monic combination with non-real zeros of Q: eventually positive simple zeros and interlacing".into(),
            requirements: vec![
                eventually(Prop::AllPositive),
                eventually(Prop::Simple { origin: 0 }),
                eventually(Prop::Interlace),
            ],
        },
    }
}

fn unit_at_zero_claim(k: usize, c: &CompanionCounts) -> Claim {
    let s = c.at_one;
    if c.non_real == 0 {
        Claim {
            kind: ClaimKind::UnitAtZeroCombination,
            anchor: "unit-at-zero combination with real-rooted P: n real simple zeros for n >= K, N1 negative, interlacing".into(),
            requirements: vec![
                from(Prop::NonReal(0), k),
                from(Prop::Simple { origin: s }, k),
                from(Prop::Negative(c.above_one), k),
                from(Prop::Interlace, k),
            ],
        }
    } else {
        Claim {
            kind: ClaimKind::UnitAtZeroCombination,
            anchor: "unit-at-zero combination with non-real zeros of P: eventually n-Nnr real simple zeros, N1 negative, interlacing".into(),
            requirements: vec![
                eventually(Prop::NonReal(c.non_real)),
                eventually(Prop::Simple { origin: s }),
                eventually(Prop::Negative(c.above_one)),
                eventually(Prop::Interlace),
            ],
        }
    }
}

fn standard_claims(spec: &GammaSpec, c: &CompanionCounts) -> Vec<Claim> {
    let k = spec.k();
    let alpha = &spec.alpha;
    let mut out = Vec::new();
    if alpha.is_integer() && c.non_real == 0 {
        if alpha >= &Rational::zero() {
            let mut req = vec![
                from(Prop::NonReal(0), k),
                from(Prop::Simple { origin: 0 }, k),
                from(Prop::Interlace, k),
            ];
            if c.above_one == 0 {
                req.push(from(Prop::AllPositive, k));
            } else {
                req.push(eventually(Prop::Negative(c.above_one)));
            }
            out.push(Claim {
                kind: ClaimKind::IntegerParameter,
                anchor: "standard combination, integer alpha >= 0, real-rooted P: n real simple zeros for n >= K, interlacing".into(),
                requirements: req,
            });
        } else {
            let m = (-alpha).to_integer().to_usize().unwrap_or(usize::MAX).saturating_add(c.at_one);
            let mut req = vec![
                eventually(Prop::Simple { origin: m }),
                eventually(Prop::NonReal(0)),
                eventually(Prop::Interlace),
            ];
            if c.above_one > 0 {
                req.push(eventually(Prop::Negative(c.above_one)));
            }
            out.push(Claim {
                kind: ClaimKind::IntegerParameter,
                anchor: "standard combination, integer alpha <= -1, real-rooted P: eventually a zero of multiplicity -alpha+s at the origin and real simple zeros elsewhere".into(),
                requirements: req,
            });
        }
    }
    let nr = c.non_real as i64;
    if alpha >= &int(k as i64 - nr - 1) {
        let claim = if c.non_real == 0 {
            let mut req = vec![
                from(Prop::NonReal(0), k),
                from(Prop::Simple { origin: 0 }, k),
                from(Prop::Interlace, k),
            ];
            if c.above_one == 0 {
                req.push(from(Prop::AllPositive, k));
            } else {
                req.push(eventually(Prop::Negative(c.above_one)));
            }
            Claim {
                kind: ClaimKind::StandardCombination,
                anchor: "standard combination, alpha >= K-1, real-rooted P: n real simple zeros for n >= K, interlacing, positive when N1 = 0".into(),
                requirements: req,
            }
        } else {
            Claim {
                kind: ClaimKind::StandardCombination,
                anchor: "standard combination, alpha >= K-Nnr-1: eventually n-Nnr real simple zeros, N1 negative, interlacing".into(),
                requirements: vec![
                    eventually(Prop::NonReal(c.non_real)),
                    eventually(Prop::Simple { origin: 0 }),
                    eventually(Prop::Negative(c.above_one)),
                    eventually(Prop::Interlace),
                ],
            }
        };
        out.push(claim);
    }
    if c.non_real == 0 && alpha > &int(k as i64 - 2) && alpha < &int(k as i64 - 1) {
        out.push(Claim {
            kind: ClaimKind::NarrowParameterBand,
            anchor: "standard combination, K-2 < alpha < K-1, real-rooted P: n real simple zeros for n >= K".into(),
            requirements: vec![from(Prop::NonReal(0), k), from(Prop::Simple { origin: 0 }, k)],
        });
    }
    out
}

fn brenke_claim(spec: &GammaSpec, k: usize, c: &CompanionCounts) -> Claim {
    if c.non_real == 0 {
        Claim {
            kind: ClaimKind::BrenkeCombination,
            anchor: "Brenke combination with real-rooted P: real simple interlacing zeros for all n, eventually N+ negative".into(),
            requirements: vec![
                from(Prop::NonReal(0), k),
                from(Prop::Simple { origin: 0 }, k),
                from(Prop::Interlace, k),
                eventually(Prop::Negative(c.positive)),
            ],
        }
    } else {
        let mut req = vec![eventually(Prop::NonReal(c.non_real)), eventually(Prop::Negative(c.positive))];
        if spec.alpha >= Rational::zero() {
            req.push(eventually(Prop::Interlace));
        }
        Claim {
            kind: ClaimKind::BrenkeCombination,
            anchor: "Brenke combination with non-real zeros of P: eventually exactly n-Nnr real zeros, N+ negative".into(),
            requirements: req,
        }
    }
}

/// Evaluates one property on one record.
pub fn prop_holds(prop: Prop, spec: &GammaSpec, rec: &WindowRecord) -> bool {
    let r = &rec.report;
    match prop {
        Prop::NonReal(c) => r.non_real_count == c,
        Prop::Simple { origin } => {
            r.zero_multiplicity == origin
                && r.roots.iter().all(|x| x.multiplicity == 1 || x.interval.is_exact() && x.interval.lo.is_zero())
        }
        Prop::AllPositive => r.positive == r.degree,
        Prop::Negative(c) => r.negative == c,
        Prop::Interlace => rec.interlace_prev.as_ref().is_none_or(|v| v.holds()),
        Prop::GapContainment => {
            let Ok(l) = laguerre(rec.n, &spec.alpha, Family::Standard) else { return false };
            count_gaps_with_zero(&l, &rec.poly) + spec.k() >= rec.n
        }
    }
}

/// Checks a claim against scanned records (in increasing `n`).
pub fn evaluate_claim(claim: &Claim, spec: &GammaSpec, records: &[WindowRecord]) -> ClaimOutcome {
    let outcomes = claim
        .requirements
        .iter()
        .map(|req| {
            let holds: Vec<(usize, bool)> =
                records.iter().map(|r| (r.n, prop_holds(req.prop, spec, r))).collect();
            let mut onset = None;
            for &(n, h) in holds.iter().rev() {
                if !h {
                    break;
                }
                onset = Some(n);
            }
            let failures: Vec<usize> = match &req.onset {
                Onset::From(n0) => holds.iter().filter(|(n, h)| n >= n0 && !h).map(|(n, _)| *n).collect(),
                Onset::Eventually => holds.iter().filter(|(_, h)| !h).map(|(n, _)| *n).collect(),
            };
            let passed = match &req.onset {
                Onset::From(_) => failures.is_empty(),
                Onset::Eventually => onset.is_some(),
            };
            RequirementOutcome { requirement: req.clone(), onset, failures, passed }
        })
        .collect();
    ClaimOutcome { claim: claim.clone(), outcomes }
}
