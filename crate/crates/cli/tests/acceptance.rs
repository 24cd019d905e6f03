//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::Instant;

use laguerre_core::asymptotics::{density_compare, verify_zero_limits, PredictionKind, ZeroLimitReport};
use laguerre_core::combo::{verify_binomial_collapse, verify_generating_series, verify_bell_identity, GammaSpec};
use laguerre_core::laguerre::{
    verify_negative_integer_identity, verify_operator_identities, verify_standard_identities,
};
use laguerre_core::ratpoly::{int, rat};
use laguerre_core::zeros::{
    k0_sign_failures, monic_thresholds, onset, scan_window, test_real_rooted_preservation, WindowRecord,
};
use laguerre_core::{Family, Poly, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn random_rational(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Rational {
    rat(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

fn random_nonzero(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Rational {
    loop {
        let t = random_rational(rng, num, den);
        if !t.is_zero() {
            break t;
        }
    }
}

fn random_alpha(rng: &mut ChaCha8Rng) -> Rational {
    [rat(-1, 2), int(0), rat(1, 3), int(1), rat(5, 2)][rng.gen_range(0..5)].clone()
}

fn interlaces(r: &WindowRecord) -> bool {
    r.interlace_prev.as_ref().is_none_or(|v| v.holds())
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for a in [rat(-1, 2), int(0), rat(1, 3), int(1), rat(5, 2)] {
        let mut rep = verify_standard_identities(&a, 40);
        rep.merge(verify_operator_identities(&a, 40));
        check(rep.passed(), || format!("alpha = {a}: failures {:?}", rep.failures))?;
        checked += rep.checked;
    }
    let neg = verify_negative_integer_identity(40);
    check(neg.passed(), || format!("negative-integer failures {:?}", neg.failures))?;
    checked += neg.checked;
    let secs = start.elapsed().as_secs_f64();
    check(secs < 10.0, || format!("took {secs:.2} s"))?;
    Ok(format!("{checked} exact identity instances, {secs:.2} s"))
}

fn c2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for t in 0..20 {
        let k = rng.gen_range(1..=4);
        let thetas: Vec<Rational> = (0..k).map(|_| random_nonzero(&mut rng, 12, 4)).collect();
        let alpha = random_alpha(&mut rng);
        let spec = GammaSpec::from_q_zeros(&thetas, alpha, Family::Monic).map_err(|e| e.to_string())?;
        let rep = verify_bell_identity(&spec, 12);
        check(rep.passed() && !rep.checked.is_empty(), || format!("spec {t} ({thetas:?}): {rep:?}"))?;
    }
    Ok("20 random specs, n <= 12, exact equality".into())
}

fn c3() -> Outcome {
    let spec = GammaSpec::new(vec![int(1), rat(14, 5), rat(81, 100)], int(0), Family::Monic)
        .map_err(|e| e.to_string())?;
    let recs = scan_window(&spec, 2, 20).map_err(|e| e.to_string())?;
    for r in &recs {
        check(r.report.real_count == r.n, || format!("n = {}: {} real zeros", r.n, r.report.real_count))?;
    }
    let fails: Vec<usize> = recs.iter().filter(|r| !interlaces(r)).map(|r| r.n).collect();
    check(fails == [3, 4], || format!("interlacing fails at {fails:?}"))?;
    let on = onset(&recs, interlaces).ok_or("no interlacing onset")?;
    check(on == 5, || format!("onset {on}"))?;
    Ok("all real on [2, 20]; q3/q2 and q4/q3 fail to interlace; interlacing from n = 5 to 20".into())
}

/// Random Monic specs with every zero of `Q` below `alpha + 1`.
fn below_shift_specs() -> Vec<GammaSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    (0..50)
        .map(|_| {
            let k = rng.gen_range(1..=4);
            let alpha = random_alpha(&mut rng);
            let thetas: Vec<Rational> = (0..k)
                .map(|_| &alpha + int(1) - rat(rng.gen_range(1..=40), rng.gen_range(1..=4)))
                .collect();
            GammaSpec::from_q_zeros(&thetas, alpha, Family::Monic).expect("nonzero leading coefficient")
        })
        .collect()
}

fn c4() -> Outcome {
    for spec in below_shift_specs() {
        let k = spec.k();
        for r in scan_window(&spec, k, k + 15).map_err(|e| e.to_string())? {
            check(r.report.positive == r.n && r.report.all_simple(), || {
                format!("{:?} alpha {} n = {}: {} positive zeros", spec.gamma(), spec.alpha, r.n, r.report.positive)
            })?;
        }
    }
    Ok("50 specs, n positive simple zeros for every n in [K, K + 15]".into())
}

fn random_p_zeros(rng: &mut ChaCha8Rng, k: usize) -> Vec<Rational> {
    (0..k)
        .map(|_| loop {
            let t = random_nonzero(rng, 12, 4);
            if !t.is_one() {
                break t;
            }
        })
        .collect()
}

/// Real, simple, interlacing zeros for every `n` in `[K, K + 15]`, with
/// exactly `negative` of them negative: at every `n` when `eventual` is
/// false, otherwise from an onset inside the window.
fn real_rooted_protocol(spec: &GammaSpec, negative: usize, eventual: bool) -> Result<(), String> {
    let k = spec.k();
    let recs = scan_window(spec, k, k + 15).map_err(|e| e.to_string())?;
    let tag = |n: usize| format!("{} {:?} alpha {} n = {n}", spec.family.name(), spec.gamma(), spec.alpha);
    for r in &recs {
        let rep = &r.report;
        check(rep.real_count == r.n && rep.all_simple(), || format!("{}: not real simple", tag(r.n)))?;
        check(eventual || rep.negative == negative, || format!("{}: {} negative zeros", tag(r.n), rep.negative))?;
        check(negative > 0 || rep.positive == r.n, || format!("{}: not all positive", tag(r.n)))?;
        check(interlaces(r), || format!("{}: interlacing fails", tag(r.n)))?;
    }
    onset(&recs, |r| r.report.negative == negative)
        .ok_or_else(|| format!("{}: not {negative} negative zeros", tag(k + 15)))?;
    Ok(())
}

fn c5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..30 {
        let k = rng.gen_range(1..=4);
        let thetas = random_p_zeros(&mut rng, k);
        let alpha = random_alpha(&mut rng);
        let spec = GammaSpec::from_p_zeros(&thetas, alpha, Family::UnitAtZero).map_err(|e| e.to_string())?;
        let n1 = thetas.iter().filter(|t| **t > int(1)).count();
        real_rooted_protocol(&spec, n1, false)?;
    }
    Ok("30 specs, real simple interlacing zeros with N1 negative on [K, K + 15]".into())
}

fn c6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..30 {
        let k = rng.gen_range(1..=4);
        let thetas = random_p_zeros(&mut rng, k);
        let alpha = int(k as i64 - 1) + [int(0), rat(1, 3), int(1), rat(5, 2)][rng.gen_range(0..4)].clone();
        let spec = GammaSpec::from_p_zeros(&thetas, alpha, Family::Standard).map_err(|e| e.to_string())?;
        let n1 = thetas.iter().filter(|t| **t > int(1)).count();
        real_rooted_protocol(&spec, n1, true)?;
    }
    Ok("30 specs with alpha >= K - 1, real simple interlacing zeros on [K, K + 15], all positive when N1 = 0, N1 negative from an onset".into())
}

/// Brenke spec whose `P` is `(x^2 - 2bx + b^2 + c^2)` times linear factors
/// with the given zeros.
fn brenke_with_pair(b: Rational, c: Rational, real: &[Rational], alpha: Rational) -> GammaSpec {
    let quad = Poly::new(vec![&b * &b + &c * &c, -(int(2) * &b), int(1)]);
    let p = &quad * &Poly::from_roots(real);
    let gamma: Vec<Rational> = p.coeffs().iter().rev().cloned().collect();
    GammaSpec::new(gamma, alpha, Family::Brenke).expect("monic P")
}

fn c7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..15 {
        let k = rng.gen_range(1..=4);
        let thetas = random_p_zeros(&mut rng, k);
        let alpha = random_alpha(&mut rng);
        let spec = GammaSpec::from_p_zeros(&thetas, alpha, Family::Brenke).map_err(|e| e.to_string())?;
        for r in scan_window(&spec, k, k + 15).map_err(|e| e.to_string())? {
            check(r.report.real_count == r.n && interlaces(&r), || {
                format!("{:?} alpha {} n = {}: not real-rooted with interlacing", thetas, spec.alpha, r.n)
            })?;
        }
    }
    let mut pairs = 0;
    while pairs < 15 {
        let b = random_rational(&mut rng, 8, 2);
        let c = rat(rng.gen_range(1..=8), rng.gen_range(1..=2));
        if &b * &b + &c * &c < int(2) || c < b.abs() {
            continue;
        }
        pairs += 1;
        let extra = rng.gen_range(0..=2);
        let real = random_p_zeros(&mut rng, extra);
        let spec = brenke_with_pair(b.clone(), c.clone(), &real, random_alpha(&mut rng));
        let k = spec.k();
        let n_plus = real.iter().filter(|t| t.is_positive()).count();
        let recs = scan_window(&spec, k, k + 20).map_err(|e| e.to_string())?;
        let tag = || format!("pair {b} +- {c}i, real {real:?}, alpha {}", spec.alpha);
        let nr = onset(&recs, |r| r.report.non_real_count == 2)
            .ok_or_else(|| format!("{}: non-real count never settles at 2", tag()))?;
        check(nr <= k + 15, || format!("{}: non-real onset {nr} beyond K + 15", tag()))?;
        onset(&recs, |r| r.report.negative == n_plus)
            .ok_or_else(|| format!("{}: negative count never settles at {n_plus}", tag()))?;
    }
    Ok("15 real-rooted P give real interlacing zeros; 15 P with a non-real pair, |Im| >= |Re|, give 2 non-real and N+ negative zeros from an onset <= K + 15".into())
}

fn c8() -> Outcome {
    for k in 1..=5 {
        for a in [rat(-1, 2), int(0), rat(1, 3), int(2), rat(7, 2)] {
            let bad = verify_binomial_collapse(k, &a, 20).map_err(|e| e.to_string())?;
            check(bad.is_empty(), || format!("K = {k}, alpha = {a}: mismatch at {bad:?}"))?;
        }
    }
    Ok("K <= 5, n <= 20, five alpha values, exact".into())
}

fn c9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for a in [int(0), rat(1, 2), int(2)] {
        for _ in 0..4 {
            let k = rng.gen_range(1..=4);
            let mut gamma: Vec<Rational> = vec![int(1)];
            gamma.extend((0..k - 1).map(|_| random_rational(&mut rng, 6, 3)));
            gamma.push(random_nonzero(&mut rng, 6, 3));
            let spec = GammaSpec::new(gamma, a.clone(), Family::Brenke).map_err(|e| e.to_string())?;
            let bad = verify_generating_series(&spec, 25).map_err(|e| e.to_string())?;
            check(bad.is_empty(), || format!("{:?} alpha {a}: mismatch at {bad:?}", spec.gamma()))?;
        }
    }
    Ok("12 Brenke specs, coefficients n <= 25 exact".into())
}

/// Scaled observed zeros of the first prediction of `kind`, one per degree.
fn scaled(rep: &ZeroLimitReport, kind: PredictionKind) -> Option<Vec<f64>> {
    let o = rep.outcomes.iter().find(|o| o.prediction.kind == kind)?;
    Some(o.samples.iter().map(|s| s.observed.re).collect())
}

fn c10() -> Outcome {
    // j_{0,1}, first zero of J_0
    const J01: f64 = 2.404_825_557_695_773;
    let ns = [100, 200, 400];
    let u = GammaSpec::new(vec![int(1), int(-3)], int(0), Family::UnitAtZero).map_err(|e| e.to_string())?;
    let rep = verify_zero_limits(&u, &ns, 0.05).map_err(|e| e.to_string())?;
    let neg = scaled(&rep, PredictionKind::Negative).ok_or("no negative prediction")?;
    let devs: Vec<f64> = neg.iter().map(|x| (x + 4.0 / 3.0).abs() / (4.0 / 3.0)).collect();
    check(devs[2] < 0.05, || format!("negative deviation {:.4} at n = 400", devs[2]))?;
    check(devs.windows(2).all(|w| w[1] < w[0]), || format!("negative deviations not decreasing: {devs:?}"))?;
    let left = scaled(&rep, PredictionKind::LeftmostBessel).ok_or("no leftmost prediction")?;
    let target = J01 * J01 / 4.0;
    let dl = (left[2] - target).abs() / target;
    check(dl < 0.02, || format!("leftmost deviation {dl:.4} at n = 400"))?;
    let b = GammaSpec::new(vec![int(1), int(-2)], int(0), Family::Brenke).map_err(|e| e.to_string())?;
    let rep = verify_zero_limits(&b, &ns, 0.05).map_err(|e| e.to_string())?;
    let bn = scaled(&rep, PredictionKind::Negative).ok_or("no Brenke negative prediction")?;
    let db = (bn[2] + 2.0).abs() / 2.0;
    check(db < 0.05, || format!("Brenke deviation {db:.4} at n = 400"))?;
    Ok(format!(
        "xi_1/n deviations {:.4}, {:.4}, {:.4}; leftmost {dl:.4}; Brenke {db:.4}",
        devs[0], devs[1], devs[2]
    ))
}

fn c11() -> Outcome {
    let spec = GammaSpec::new(vec![int(1)], int(0), Family::Standard).map_err(|e| e.to_string())?;
    let hi = density_compare(&spec, 400, 20).map_err(|e| e.to_string())?;
    let lo = density_compare(&spec, 100, 20).map_err(|e| e.to_string())?;
    let (a, b) = (hi.total_variation, lo.total_variation);
    check(a < 0.08 && a < b, || format!("TV {a:.4} at n = 400, {b:.4} at n = 100"))?;
    Ok(format!("TV {a:.4} at n = 400 < {b:.4} at n = 100"))
}

fn c12() -> Outcome {
    let mut runs = 0;
    let mut violators = 0;
    for k in 1..=5usize {
        let kk = k as i64;
        let mut cases = vec![
            (Family::UnitAtZero, int(0)),
            (Family::UnitAtZero, rat(-1, 2)),
            (Family::Brenke, rat(1, 3)),
            (Family::Brenke, int(2)),
            (Family::Standard, int(0)),
            (Family::Standard, int(3)),
            (Family::Standard, int(kk - 2) + rat(1, 2)),
        ];
        if kk >= 2 {
            cases.push((Family::Standard, int(kk - 2) - rat(1, 2)));
        }
        for (family, alpha) in cases {
            let seed = 1000 * k as u64 + runs;
            let rep = test_real_rooted_preservation(family, &alpha, k, 200, seed).map_err(|e| e.to_string())?;
            runs += 1;
            let violating = family == Family::Standard && !alpha.is_integer() && alpha < int(kk - 2);
            if violating {
                let v = rep.violator.as_ref().ok_or_else(|| format!("K = {k} alpha {alpha}: no violator run"))?;
                check(v.non_real > 0, || format!("K = {k} alpha {alpha}: (x-1)^K image is real-rooted"))?;
                violators += 1;
            } else {
                check(rep.violations.is_empty(), || {
                    format!("{} K = {k} alpha {alpha}: {} violations", family.name(), rep.violations.len())
                })?;
            }
        }
    }
    Ok(format!("{runs} runs of 200 trials; {violators} violator inputs show non-real zeros"))
}

fn c13() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut done = 0;
    while done < 20 {
        let k = rng.gen_range(1..=4);
        let mut gamma: Vec<Rational> = vec![int(1)];
        gamma.extend((0..k - 1).map(|_| random_rational(&mut rng, 6, 3)));
        gamma.push(random_nonzero(&mut rng, 6, 3));
        if gamma.iter().sum::<Rational>().is_zero() {
            continue;
        }
        let spec = GammaSpec::new(gamma, random_alpha(&mut rng), Family::Standard).map_err(|e| e.to_string())?;
        let (k0, bad) = k0_sign_failures(&spec, 20).map_err(|e| e.to_string())?;
        check(bad.is_empty(), || format!("{:?} alpha {} k0 {k0}: sign fails at {bad:?}", spec.gamma(), spec.alpha))?;
        done += 1;
    }
    for spec in below_shift_specs() {
        let k = BigInt::from(spec.k());
        let t = monic_thresholds(&spec);
        check(t == Some((k.clone(), k)), || format!("{:?} alpha {}: thresholds {t:?}", spec.gamma(), spec.alpha))?;
    }
    Ok("20 random specs sign-stable on [k0, k0 + 20]; n0 = n1 = K on all 50 criterion-4 specs".into())
}

fn main() -> ExitCode {
    let criteria: [(usize, fn() -> Outcome); 13] = [
        (1, c1),
        (2, c2),
        (3, c3),
        (4, c4),
        (5, c5),
        (6, c6),
        (7, c7),
        (8, c8),
        (9, c9),
        (10, c10),
        (11, c11),
        (12, c12),
        (13, c13),
    ];
    let mut failed = 0;
    for (i, f) in criteria {
        let start = Instant::now();
        let r = f();
        let secs = start.elapsed().as_secs_f64();
        match r {
            Ok(msg) => println!("criterion {i}: PASS ({secs:.1} s) {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {i}: FAIL ({secs:.1} s) {msg}");
            }
        }
    }
    println!("acceptance: {} of 13 criteria passed", 13 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
