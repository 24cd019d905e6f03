use crate::error::{Error, Result};

/// `0F1(-; alpha + 1; -z) = sum_k (-z)^k / ((alpha+1)_k k!)`, summed with
/// Neumaier compensation until the term drops below `1e-16` of the running
/// magnitude.
pub fn hyper01(alpha: f64, z: f64) -> f64 {
    let mut sum = 1.0;
    let mut comp = 0.0;
    let mut term = 1.0;
    let mut k = 0.0;
    loop {
        k += 1.0;
        term *= -z / ((alpha + k) * k);
        let t = sum + term;
        if sum.abs() >= term.abs() {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
        // terms decrease once k^2 > |z|
        if k * k > z.abs() && term.abs() <= 1e-17 * (sum + comp).abs().max(1e-300) {
            break;
        }
        if k > 10_000.0 {
            break;
        }
    }
    sum + comp
}

/// `j_{i,alpha}^2 / 4`, the `i`-th positive zero of `z -> 0F1(-; alpha+1; -z)`,
/// by a sign-change scan followed by bisection to relative width `1e-13`.
pub fn bessel_zero_scaled(alpha: f64, i: usize) -> Result<f64> {
    if alpha <= -1.0 || !alpha.is_finite() {
        return Err(Error::InvalidArgument("need alpha > -1".into()));
    }
    if i == 0 {
        return Err(Error::InvalidArgument("zeros are indexed from 1".into()));
    }
    let mut found = 0;
    let mut a = 0.0;
    let mut fa = hyper01(alpha, a);
    loop {
        // zeros in z are spaced by about pi sqrt(z)
        let h = 0.02 * (1.0 + libm::sqrt(a));
        let b = a + h;
        let fb = hyper01(alpha, b);
        if fa == 0.0 || fa.signum() != fb.signum() {
            found += 1;
            if found == i {
                return Ok(bisect(alpha, a, b, fa));
            }
        }
        a = b;
        fa = fb;
        if a > 1e5 {
            return Err(Error::NonConvergence { iterations: 0, unconverged: i - found });
        }
    }
}

fn bisect(alpha: f64, mut a: f64, mut b: f64, mut fa: f64) -> f64 {
    if fa == 0.0 {
        return a;
    }
    while b - a > 1e-13 * b {
        let m = 0.5 * (a + b);
        let fm = hyper01(alpha, m);
        if fm == 0.0 {
            return m;
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `J_0(x)` from the integral `(1/pi) int_0^pi cos(x sin t) dt`.
    fn j0_integral(x: f64) -> f64 {
        let m = 2000;
        let h = core::f64::consts::PI / m as f64;
        let f = |t: f64| libm::cos(x * libm::sin(t));
        let mut s = f(0.0) + f(core::f64::consts::PI);
        for k in 1..m {
            s += if k % 2 == 1 { 4.0 } else { 2.0 } * f(k as f64 * h);
        }
        s * h / 3.0 / core::f64::consts::PI
    }

    #[test]
    fn values() {
        assert_eq!(hyper01(0.3, 0.0), 1.0);
        assert!((hyper01(0.0, 1.0) - 0.223_890_779_141_235_67).abs() < 1e-14);
        for z in [0.5, 2.0, 7.5, 20.0] {
            let x = 2.0 * libm::sqrt(z);
            assert!((hyper01(0.0, z) - j0_integral(x)).abs() < 1e-10, "z = {z}");
        }
    }

    #[test]
    fn zeros() {
        let z1 = bessel_zero_scaled(0.0, 1).unwrap();
        assert!((z1 - 2.404_825_557_695_773f64.powi(2) / 4.0).abs() < 1e-10);
        let z11 = bessel_zero_scaled(1.0, 1).unwrap();
        assert!((z11 - 3.831_705_970_207_512f64.powi(2) / 4.0).abs() < 1e-10);
        let mut prev = 0.0;
        for i in 1..=6 {
            let z = bessel_zero_scaled(0.5, i).unwrap();
            assert!(z > prev);
            assert!(hyper01(0.5, z).abs() < 1e-9);
            assert!(hyper01(0.5, z * (1.0 - 1e-6)).signum() != hyper01(0.5, z * (1.0 + 1e-6)).signum());
            prev = z;
        }
        // alpha = 1/2: j_{i,1/2} = i pi
        let z2 = bessel_zero_scaled(0.5, 2).unwrap();
        assert!((z2 - (2.0 * core::f64::consts::PI).powi(2) / 4.0).abs() < 1e-9);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(bessel_zero_scaled(-1.0, 1).is_err());
        assert!(bessel_zero_scaled(0.0, 0).is_err());
    }
}
