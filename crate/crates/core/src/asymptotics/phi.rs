use crate::error::{Error, Result};

use super::ComplexF;

/// Distance from the slit `[0, 4]` below which a point is treated as on it.
const SLIT_EPS: f64 = 1e-14;

fn finite(z: ComplexF) -> Result<ComplexF> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::InvalidArgument("non-finite complex value".into()))
    }
}

/// `phi(z) = (z - 2 + sqrt(z^2 - 4z)) / 2`, the conformal map of the plane
/// minus `[0, 4]` onto the exterior of the unit disk, positive for `z > 4`.
///
/// The two roots `w` of `w^2 - (z - 2) w + 1 = 0` have product one, so the
/// branch is fixed by taking the root of larger modulus.
pub fn phi_map(z: ComplexF) -> Result<ComplexF> {
    let z = finite(z)?;
    if z.im.abs() <= SLIT_EPS * (1.0 + z.re.abs()) && (0.0..=4.0).contains(&z.re) {
        return Err(Error::InvalidArgument("point on the slit [0, 4]".into()));
    }
    let s = (z * z - 4.0 * z).sqrt();
    let a = (z - 2.0 + s) / 2.0;
    let b = (z - 2.0 - s) / 2.0;
    Ok(if a.norm() >= b.norm() { a } else { b })
}

/// The `z` with `-phi(z) = w`, namely `2 - w - 1/w`.
pub fn phi_inverse(w: ComplexF) -> Result<ComplexF> {
    let w = finite(w)?;
    if w.norm() <= 1.0 {
        return Err(Error::InvalidArgument("|w| <= 1".into()));
    }
    Ok(2.0 - w - w.inv())
}

/// Limit of `xi / n` for a zero of `P` at `theta`: `-theta - 1/theta + 2`.
pub fn outer_limit(theta: ComplexF) -> ComplexF {
    -theta - theta.inv() + 2.0
}
