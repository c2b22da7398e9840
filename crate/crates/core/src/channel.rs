//! Local single-qubit channels and their lift to three qubits.
//!
//! A single-qubit map is fixed by three numbers `(u, v, z)`:
//!
//! ```text
//! rho_11 -> u rho_11 + v rho_22
//! rho_22 -> (1 - u) rho_11 + (1 - v) rho_22
//! rho_12 -> z rho_12
//! ```
//!
//! with basis slot 1 = `|1>` and slot 2 = `|0>`. Independent local maps on
//! A, B and C combine into the three-qubit element map implemented by
//! [`lift_three_qubit`]. Pure dephasing is `u = 1, v = 0, z = exp(-f(t))`,
//! for which the lift collapses to the decay classes of [`evolve_dephasing`].

use serde::{Deserialize, Serialize};

use crate::basis::decay_order;
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, ComplexMatrix, C64};
use crate::noise::{decay, NoiseParams};

/// Minimum eigenvalue tolerated on a lifted state.
pub const PSD_TOL: f64 = 1e-10;

/// Per-qubit channel parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChannelParams {
    pub u: f64,
    pub v: f64,
    pub z: C64,
}

impl ChannelParams {
    pub const IDENTITY: ChannelParams = ChannelParams {
        u: 1.0,
        v: 0.0,
        z: C64::new(1.0, 0.0),
    };

    /// Validates `0 <= u, v <= 1` and positivity of the single-qubit map on
    /// pure inputs.
    pub fn new(u: f64, v: f64, z: C64) -> Result<Self> {
        if !(0.0..=1.0).contains(&u) || !(0.0..=1.0).contains(&v) {
            return Err(Error::InvalidChannel(format!(
                "u = {u}, v = {v} must lie in [0, 1]"
            )));
        }
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::InvalidChannel(format!("z = {z} is not finite")));
        }
        let p = Self { u, v, z };
        if !p.is_positive() {
            return Err(Error::InvalidChannel(format!(
                "(u, v, z) = ({u}, {v}, {z}) maps a pure state outside the Bloch ball"
            )));
        }
        Ok(p)
    }

    /// Checks `rho_11' rho_22' >= |rho_12'|^2` for every pure input, sampled
    /// on a population grid. Pure inputs are the extreme points, so this is
    /// the positivity condition up to grid resolution.
    pub fn is_positive(&self) -> bool {
        const STEPS: usize = 2000;
        let z2 = self.z.norm_sqr();
        (0..=STEPS).all(|k| {
            let p = k as f64 / STEPS as f64;
            let top = self.u * p + self.v * (1.0 - p);
            let bottom = (1.0 - self.u) * p + (1.0 - self.v) * (1.0 - p);
            top * bottom - z2 * p * (1.0 - p) >= -1e-14
        })
    }

    /// Applies the single-qubit map to a 2x2 matrix.
    pub fn apply_single(&self, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
        if rho.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: rho.dim(),
            });
        }
        let mut out = *rho;
        let (r11, r22) = (rho[(0, 0)], rho[(1, 1)]);
        out[(0, 0)] = r11 * self.u + r22 * self.v;
        out[(1, 1)] = r11 * (1.0 - self.u) + r22 * (1.0 - self.v);
        out[(0, 1)] = self.z * rho[(0, 1)];
        out[(1, 0)] = self.z.conj() * rho[(1, 0)];
        Ok(out)
    }
}

/// Dephasing parameters at time `t`: `u = 1, v = 0, z = exp(-f(t))`.
pub fn dephasing_params(noise: &NoiseParams, t: f64) -> Result<ChannelParams> {
    let z = noise.coherence(t)?;
    Ok(ChannelParams {
        u: 1.0,
        v: 0.0,
        z: C64::new(z, 0.0),
    })
}

fn require_three_qubit(rho: &ComplexMatrix) -> Result<()> {
    if rho.dim() != 8 {
        return Err(Error::DimensionMismatch {
            expected: 8,
            found: rho.dim(),
        });
    }
    Ok(())
}

/// Three-qubit element map for independent local channels, written out
/// element by element (8 populations, 28 upper-triangle coherences; the
/// lower triangle is the conjugate mirror).
///
/// No positivity check is made on the output; see [`lift_three_qubit`].
pub fn lift_elements(
    rho0: &ComplexMatrix,
    pa: &ChannelParams,
    pb: &ChannelParams,
    pc: &ChannelParams,
) -> Result<ComplexMatrix> {
    require_three_qubit(rho0)?;
    let r = |i: usize, j: usize| rho0[(i - 1, j - 1)];
    let d = |i: usize| rho0[(i - 1, i - 1)].re;
    let re = |x: f64| C64::new(x, 0.0);

    let (ua, va, za) = (pa.u, pa.v, pa.z);
    let (ub, vb, zb) = (pb.u, pb.v, pb.z);
    let (uc, vc, zc) = (pc.u, pc.v, pc.z);
    let (nua, nva) = (1.0 - ua, 1.0 - va);
    let (nub, nvb) = (1.0 - ub, 1.0 - vb);
    let (nuc, nvc) = (1.0 - uc, 1.0 - vc);
    let (zbc, zcc) = (zb.conj(), zc.conj());

    let mut out = ComplexMatrix::zeros(8)?;
    let mut set = |i: usize, j: usize, val: C64| {
        if i == j {
            out[(i - 1, i - 1)] = C64::new(val.re, 0.0);
        } else {
            out[(i - 1, j - 1)] = val;
            out[(j - 1, i - 1)] = val.conj();
        }
    };

    // populations
    set(1, 1, re(
        ua * ub * uc * d(1) + ua * ub * vc * d(2) + ua * vb * uc * d(3) + ua * vb * vc * d(4)
            + va * ub * uc * d(5) + va * ub * vc * d(6) + va * vb * uc * d(7) + va * vb * vc * d(8),
    ));
    set(2, 2, re(
        ua * ub * nuc * d(1) + ua * ub * nvc * d(2) + ua * vb * nuc * d(3) + ua * vb * nvc * d(4)
            + va * ub * nuc * d(5) + va * ub * nvc * d(6) + va * vb * nuc * d(7) + va * vb * nvc * d(8),
    ));
    set(3, 3, re(
        ua * nub * uc * d(1) + ua * nub * vc * d(2) + ua * nvb * uc * d(3) + ua * nvb * vc * d(4)
            + va * nub * uc * d(5) + va * nub * vc * d(6) + va * nvb * uc * d(7) + va * nvb * vc * d(8),
    ));
    set(4, 4, re(
        ua * nub * nuc * d(1) + ua * nub * nvc * d(2) + ua * nvb * nuc * d(3) + ua * nvb * nvc * d(4)
            + va * nub * nuc * d(5) + va * nub * nvc * d(6) + va * nvb * nuc * d(7)
            + va * nvb * nvc * d(8),
    ));
    set(5, 5, re(
        nua * ub * uc * d(1) + nua * ub * vc * d(2) + nua * vb * uc * d(3) + nua * vb * vc * d(4)
            + nva * ub * uc * d(5) + nva * ub * vc * d(6) + nva * vb * uc * d(7) + nva * vb * vc * d(8),
    ));
    set(6, 6, re(
        nua * ub * nuc * d(1) + nua * ub * nvc * d(2) + nua * vb * nuc * d(3) + nua * vb * nvc * d(4)
            + nva * ub * nuc * d(5) + nva * ub * nvc * d(6) + nva * vb * nuc * d(7)
            + nva * vb * nvc * d(8),
    ));
    set(7, 7, re(
        nua * nub * uc * d(1) + nua * nub * vc * d(2) + nua * nvb * uc * d(3) + nua * nvb * vc * d(4)
            + nva * nub * uc * d(5) + nva * nub * vc * d(6) + nva * nvb * uc * d(7)
            + nva * nvb * vc * d(8),
    ));
    set(8, 8, re(
        nua * nub * nuc * d(1) + nua * nub * nvc * d(2) + nua * nvb * nuc * d(3)
            + nua * nvb * nvc * d(4) + nva * nub * nuc * d(5) + nva * nub * nvc * d(6)
            + nva * nvb * nuc * d(7) + nva * nvb * nvc * d(8),
    ));

    // coherences
    set(1, 2, zc * (ua * ub * r(1, 2) + ua * vb * r(3, 4) + va * ub * r(5, 6) + va * vb * r(7, 8)));
    set(1, 3, zb * (ua * uc * r(1, 3) + ua * vc * r(2, 4) + va * uc * r(5, 7) + va * vc * r(6, 8)));
    set(1, 4, zb * zc * (ua * r(1, 4) + va * r(5, 8)));
    set(1, 5, za * (ub * uc * r(1, 5) + ub * vc * r(2, 6) + vb * uc * r(3, 7) + vb * vc * r(4, 8)));
    set(1, 6, za * zc * (ub * r(1, 6) + vb * r(3, 8)));
    set(1, 7, za * zb * (uc * r(1, 7) + vc * r(2, 8)));
    set(1, 8, za * zb * zc * r(1, 8));
    set(2, 3, zb * zcc * (ua * r(2, 3) + va * r(6, 7)));
    set(2, 4, zb * (ua * nuc * r(1, 3) + ua * nvc * r(2, 4) + va * nuc * r(5, 7) + va * nvc * r(6, 8)));
    set(2, 5, za * zcc * (ub * r(2, 5) + vb * r(4, 7)));
    set(2, 6, za * (ub * nuc * r(1, 5) + ub * nvc * r(2, 6) + vb * nuc * r(3, 7) + vb * nvc * r(4, 8)));
    set(2, 7, za * zb * zcc * r(2, 7));
    set(2, 8, za * zb * (nuc * r(1, 7) + nvc * r(2, 8)));
    set(3, 4, zc * (ua * nub * r(1, 2) + ua * nvb * r(3, 4) + va * nub * r(5, 6) + va * nvb * r(7, 8)));
    set(3, 5, za * zbc * (uc * r(3, 5) + vc * r(4, 6)));
    set(3, 6, za * zbc * zc * r(3, 6));
    set(3, 7, za * (nub * uc * r(1, 5) + nub * vc * r(2, 6) + nvb * uc * r(3, 7) + nvb * vc * r(4, 8)));
    set(3, 8, za * zc * (nub * r(1, 6) + nvb * r(3, 8)));
    set(4, 5, za * zbc * zcc * r(4, 5));
    set(4, 6, za * zbc * (nuc * r(3, 5) + nvc * r(4, 6)));
    set(4, 7, za * zcc * (nub * r(2, 5) + nvb * r(4, 7)));
    set(4, 8, za * (nub * nuc * r(1, 5) + nub * nvc * r(2, 6) + nvb * nuc * r(3, 7) + nvb * nvc * r(4, 8)));
    set(5, 6, zc * (nua * ub * r(1, 2) + nua * vb * r(3, 4) + nva * ub * r(5, 6) + nva * vb * r(7, 8)));
    set(5, 7, zb * (nua * uc * r(1, 3) + nua * vc * r(2, 4) + nva * uc * r(5, 7) + nva * vc * r(6, 8)));
    set(5, 8, zb * zc * (nua * r(1, 4) + nva * r(5, 8)));
    set(6, 7, zb * zcc * (nua * r(2, 3) + nva * r(6, 7)));
    set(6, 8, zb * (nua * nuc * r(1, 3) + nua * nvc * r(2, 4) + nva * nuc * r(5, 7) + nva * nvc * r(6, 8)));
    set(7, 8, zc * (nua * nub * r(1, 2) + nua * nvb * r(3, 4) + nva * nub * r(5, 6) + nva * nvb * r(7, 8)));

    Ok(out)
}

/// Lifts three local channels to the three-qubit state and checks the
/// result stays positive semidefinite within [`PSD_TOL`].
///
/// A violation means the channel parameters do not describe a completely
/// positive map; it is reported rather than clamped.
pub fn lift_three_qubit(
    rho0: &ComplexMatrix,
    pa: &ChannelParams,
    pb: &ChannelParams,
    pc: &ChannelParams,
) -> Result<ComplexMatrix> {
    let out = lift_elements(rho0, pa, pb, pc)?;
    let min = hermitian_eigenvalues(&out)?.min();
    if min < -PSD_TOL {
        return Err(Error::ChannelContract(min));
    }
    Ok(out)
}

/// Dephasing evolution: populations fixed, each coherence scaled by
/// `exp(-n f(t))` where `n` is the number of qubits on which its kets differ.
pub fn evolve_dephasing(rho0: &ComplexMatrix, noise: &NoiseParams, t: f64) -> Result<ComplexMatrix> {
    require_three_qubit(rho0)?;
    let f = noise.decoherence_exponent(t)?;
    let factors = [1.0, decay(f), decay(2.0 * f), decay(3.0 * f)];
    let mut out = *rho0;
    for i in 0..8 {
        out[(i, i)] = C64::new(rho0[(i, i)].re, 0.0);
        for j in i + 1..8 {
            let val = rho0[(i, j)] * factors[decay_order(i, j) as usize];
            out[(i, j)] = val;
            out[(j, i)] = val.conj();
        }
    }
    Ok(out)
}
