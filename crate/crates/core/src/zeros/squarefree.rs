use alloc::vec::Vec;

use crate::ratpoly::Poly;

/// Yun decomposition `p = c * prod f_i^i` with monic, pairwise coprime,
/// square-free `f_i`. Returns `(f_i, i)` for the nonconstant factors.
pub fn square_free_decompose(p: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let p = p.monic();
    let dp = p.derivative();
    let b = Poly::gcd(&p, &dp);
    let mut c = p.exact_div(&b).expect("gcd divides");
    let mut d = &dp.exact_div(&b).expect("gcd divides") - &c.derivative();
    let mut i = 1;
    while c.degree().unwrap_or(0) > 0 {
        let a = Poly::gcd(&c, &d);
        c = c.exact_div(&a).expect("gcd divides");
        d = &d.exact_div(&a).expect("gcd divides") - &c.derivative();
        if a.degree().unwrap_or(0) > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

/// Monic square-free part of `p`.
pub fn square_free_part(p: &Poly) -> Poly {
    if p.degree().unwrap_or(0) == 0 {
        return Poly::one();
    }
    let g = Poly::gcd(p, &p.derivative());
    p.exact_div(&g).expect("gcd divides").monic()
}
