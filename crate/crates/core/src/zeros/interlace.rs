use alloc::vec::Vec;

use super::isolate::{isolate_real_roots, RootInterval};
use super::report::{separate, separate_bounded, RealRoot, ZeroReport};
use super::squarefree::square_free_part;
use super::sturm::SturmChain;
use crate::ratpoly::{Poly, Rational};

/// Which of the two zero sets an element belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    First,
    Second,
}

/// Why interlacing fails.
#[derive(Clone, Debug, PartialEq)]
pub enum InterlaceWitness {
    /// The first set is empty after removing common zeros.
    FirstEmpty,
    /// The smallest remaining element belongs to the second set.
    MinInSecond { min: f64 },
    /// Two consecutive elements of one set with nothing of the other between.
    Gap { side: Side, left: f64, right: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub enum InterlaceVerdict {
    StrictInterlace,
    InterlaceWithCommon { common: usize },
    Fails(InterlaceWitness),
}

impl InterlaceVerdict {
    pub fn holds(&self) -> bool {
        !matches!(self, InterlaceVerdict::Fails(_))
    }

    pub fn name(&self) -> &'static str {
        match self {
            InterlaceVerdict::StrictInterlace => "StrictInterlace",
            InterlaceVerdict::InterlaceWithCommon { .. } => "InterlaceWithCommon",
            InterlaceVerdict::Fails(_) => "Fails",
        }
    }
}

/// Applies the definition to a merged increasing sequence of labelled points.
fn verdict_from_sequence(seq: &[(Side, f64)], common: usize) -> InterlaceVerdict {
    let Some(&(first, min)) = seq.first() else {
        return if common > 0 {
            InterlaceVerdict::InterlaceWithCommon { common }
        } else {
            InterlaceVerdict::Fails(InterlaceWitness::FirstEmpty)
        };
    };
    if first == Side::Second {
        let any_first = seq.iter().any(|(s, _)| *s == Side::First);
        return InterlaceVerdict::Fails(if any_first {
            InterlaceWitness::MinInSecond { min }
        } else {
            InterlaceWitness::FirstEmpty
        });
    }
    for w in seq.windows(2) {
        if w[0].0 == w[1].0 {
            return InterlaceVerdict::Fails(InterlaceWitness::Gap {
                side: w[0].0,
                left: w[0].1,
                right: w[1].1,
            });
        }
    }
    if common > 0 {
        InterlaceVerdict::InterlaceWithCommon { common }
    } else {
        InterlaceVerdict::StrictInterlace
    }
}

/// Interlacing of finite sets of rationals: does `u` interlace `v`?
pub fn check_interlace_sets(u: &[Rational], v: &[Rational]) -> InterlaceVerdict {
    let mut u: Vec<Rational> = u.to_vec();
    let mut v: Vec<Rational> = v.to_vec();
    u.sort();
    u.dedup();
    v.sort();
    v.dedup();
    let common = u.iter().filter(|x| v.binary_search(x).is_ok()).count();
    let mut seq: Vec<(Rational, Side)> = u
        .iter()
        .filter(|x| v.binary_search(x).is_err())
        .map(|x| (x.clone(), Side::First))
        .chain(
            v.iter()
                .filter(|x| u.binary_search(x).is_err())
                .map(|x| (x.clone(), Side::Second)),
        )
        .collect();
    seq.sort_by(|a, b| a.0.cmp(&b.0));
    let seq: Vec<(Side, f64)> = seq
        .into_iter()
        .map(|(x, s)| (s, crate::ratpoly::rational_to_f64(&x)))
        .collect();
    verdict_from_sequence(&seq, common)
}

/// Merged, certified ordering of the real zeros of pairwise coprime
/// square-free polynomials, labelled by their index in `polys`.
pub fn merge_real_zeros(polys: &[Poly]) -> Vec<(usize, RootInterval)> {
    let factors: Vec<_> = polys.iter().map(Poly::to_int).collect();
    let mut roots = Vec::new();
    for (k, f) in factors.iter().enumerate() {
        for iv in isolate_real_roots(f) {
            roots.push(RealRoot { interval: iv, multiplicity: 1, factor: k });
        }
    }
    separate(&mut roots, &factors);
    roots.into_iter().map(|r| (r.factor, r.interval)).collect()
}

/// Splits the square-free parts of `p` and `q` into the parts without common
/// zeros and their monic gcd.
fn split_common(p: &Poly, q: &Poly) -> (Poly, Poly, Poly) {
    let ps = square_free_part(p);
    let qs = square_free_part(q);
    let g = Poly::gcd(&ps, &qs);
    let p1 = ps.exact_div(&g).expect("gcd divides");
    let q1 = qs.exact_div(&g).expect("gcd divides");
    (p1, q1, g)
}

/// Do the real zeros of `p` interlace the real zeros of `q`?
pub fn check_interlace(p: &Poly, q: &Poly) -> InterlaceVerdict {
    let (p1, q1, g) = split_common(p, q);
    let common = if g.degree().unwrap_or(0) == 0 {
        0
    } else {
        SturmChain::new(&g.to_int()).count_all()
    };
    let seq: Vec<(Side, f64)> = merge_real_zeros(&[p1, q1])
        .into_iter()
        .map(|(k, iv)| (if k == 0 { Side::First } else { Side::Second }, iv.approx()))
        .collect();
    verdict_from_sequence(&seq, common)
}

/// Interlacing decided from two certified reports whose real zeros are all
/// simple. `None` when the zeros cannot be separated within the refinement
/// budget (for example because of a common zero); callers then fall back to
/// [`check_interlace`].
pub fn interlace_from_reports(p: &ZeroReport, q: &ZeroReport) -> Option<InterlaceVerdict> {
    if !p.all_simple() || !q.all_simple() {
        return None;
    }
    let offset = p.factors.len();
    let factors: Vec<_> = p.factors.iter().chain(q.factors.iter()).cloned().collect();
    let mut roots: Vec<RealRoot> = p
        .roots
        .iter()
        .cloned()
        .chain(q.roots.iter().map(|r| RealRoot { factor: r.factor + offset, ..r.clone() }))
        .collect();
    let budget = 64 * (roots.len() + 1);
    if !separate_bounded(&mut roots, &factors, budget) {
        return None;
    }
    let seq: Vec<(Side, f64)> = roots
        .iter()
        .map(|r| (if r.factor < offset { Side::First } else { Side::Second }, r.approx()))
        .collect();
    Some(verdict_from_sequence(&seq, 0))
}

/// Number of gaps `(z_i, z_{i+1})` between consecutive real zeros of `l`
/// that contain a real zero of `q`.
pub fn count_gaps_with_zero(l: &Poly, q: &Poly) -> usize {
    let (l1, q1, g) = split_common(l, q);
    // labels: 0 zero of l only, 1 zero of q only, 2 common
    let merged = merge_real_zeros(&[l1, q1, g]);
    let mut gaps = 0;
    let mut seen_l = false;
    let mut hit = false;
    for (k, _) in merged {
        match k {
            1 => hit = true,
            _ => {
                if seen_l && hit {
                    gaps += 1;
                }
                seen_l = true;
                hit = false;
            }
        }
    }
    gaps
}

/// For each `lambda`, whether `p + lambda q` has only real simple zeros.
pub fn obreshkov_sample(p: &Poly, q: &Poly, lambdas: &[Rational]) -> Vec<(Rational, bool)> {
    lambdas
        .iter()
        .map(|l| {
            let f = p + &q.scale(l);
            let ok = match f.degree() {
                None => false,
                Some(0) => true,
                Some(d) => {
                    let sf = square_free_part(&f);
                    sf.degree() == Some(d) && SturmChain::new(&sf.to_int()).count_all() == d
                }
            };
            (l.clone(), ok)
        })
        .collect()
}

/// `true` when every zero of `p` is real.
pub fn is_real_rooted(p: &Poly) -> bool {
    match p.degree() {
        None => false,
        Some(0) => true,
        Some(_) => {
            let sf = square_free_part(p);
            let d = sf.degree().unwrap_or(0);
            d == 0 || SturmChain::new(&sf.to_int()).count_all() == d
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::{int, rat};
    use alloc::vec;

    #[test]
    fn set_patterns() {
        assert_eq!(check_interlace_sets(&[int(0), int(2)], &[int(1)]), InterlaceVerdict::StrictInterlace);
        assert_eq!(check_interlace_sets(&[int(0)], &[int(1)]), InterlaceVerdict::StrictInterlace);
        assert!(matches!(
            check_interlace_sets(&[int(1)], &[int(0), int(2)]),
            InterlaceVerdict::Fails(InterlaceWitness::MinInSecond { .. })
        ));
        assert!(matches!(
            check_interlace_sets(&[int(1), int(2), int(3)], &[int(2)]),
            InterlaceVerdict::Fails(InterlaceWitness::Gap { side: Side::First, .. })
        ));
        assert_eq!(
            check_interlace_sets(&[int(1), int(2), int(3)], &[int(2), rat(5, 2)]),
            InterlaceVerdict::InterlaceWithCommon { common: 1 }
        );
        assert!(!check_interlace_sets(&[], &[int(1)]).holds());
    }

    #[test]
    fn polynomial_interlacing_matches_sets() {
        let p = Poly::from_roots(&[int(-3), int(0), int(4)]);
        let q = Poly::from_roots(&[int(-1), int(2)]);
        assert_eq!(check_interlace(&p, &q), InterlaceVerdict::StrictInterlace);
        assert!(!check_interlace(&q, &p).holds());
        let pc = Poly::from_roots(&[int(1), int(2), int(3)]);
        let qc = Poly::from_roots(&[int(2), rat(5, 2)]);
        assert_eq!(check_interlace(&pc, &qc), InterlaceVerdict::InterlaceWithCommon { common: 1 });
    }

    #[test]
    fn non_real_zeros_are_ignored() {
        // real zeros {-1, 1} versus {0}
        let p = &Poly::from_roots(&[int(-1), int(1)]) * &Poly::from_ints(&[1, 0, 1]);
        let q = Poly::from_roots(&[int(0)]);
        assert_eq!(check_interlace(&p, &q), InterlaceVerdict::StrictInterlace);
    }

    #[test]
    fn interlacing_from_reports_agrees() {
        use crate::zeros::analyze_zeros;
        let p = Poly::from_roots(&[int(-3), rat(1, 3), int(4)]);
        let q = Poly::from_roots(&[int(-1), rat(1, 2)]);
        let rp = analyze_zeros(&p, &[]).unwrap();
        let rq = analyze_zeros(&q, &[]).unwrap();
        assert_eq!(interlace_from_reports(&rp, &rq), Some(check_interlace(&p, &q)));
        assert_eq!(interlace_from_reports(&rq, &rp), Some(check_interlace(&q, &p)));
        // a common zero exhausts the budget
        let c = Poly::from_roots(&[int(-3), int(2)]);
        let rc = analyze_zeros(&c, &[]).unwrap();
        assert_eq!(interlace_from_reports(&rp, &rc), None);
    }

    #[test]
    fn gap_counting() {
        let l = Poly::from_roots(&[int(0), int(2), int(4), int(6)]);
        let q = Poly::from_roots(&[int(1), int(2), int(5), rat(11, 2)]);
        // gaps (0,2) and (4,6) hold zeros of q; 2 is common and not inside a gap
        assert_eq!(count_gaps_with_zero(&l, &q), 2);
    }

    #[test]
    fn obreshkov_discriminant_example() {
        let p = Poly::from_ints(&[-1, 0, 1]);
        let q = Poly::x();
        let ls: Vec<Rational> = [-3, -1, 0, 1, 3].iter().map(|&v| int(v)).collect();
        assert!(obreshkov_sample(&p, &q, &ls).iter().all(|(_, ok)| *ok));
        // x^2 + 1 + lambda x is real-rooted only for |lambda| >= 2
        let p2 = Poly::from_ints(&[1, 0, 1]);
        let r = obreshkov_sample(&p2, &q, &[int(1), int(3)]);
        assert_eq!(r, vec![(int(1), false), (int(3), true)]);
    }
}
