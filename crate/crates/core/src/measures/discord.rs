//! Quantum discord with subsystem B as the measured party.
//!
//! `D = S(B) - S(AB) + min_Pi sum_i p_i S(A | i)`, minimized over rank-one
//! projective measurements `{|1><1|, |2><2|}` on B with
//! `|1> = cos(theta)|+z> + e^{i phi} sin(theta)|-z>`.

use std::f64::consts::{LN_2, PI};

use serde::{Deserialize, Serialize};

use crate::basis::Qubit;
use crate::error::{Error, Result};
use crate::linalg::{binary_entropy, partial_trace, shannon_entropy, von_neumann_entropy, ComplexMatrix, C64};
use crate::par::{map_indexed, Execution};

use super::concurrence::XStateParams;

/// Tolerance on `|b - c|` for the X-form discord.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Which analytic candidate attains the minimum. `D1` is the
/// `sigma_z` measurement, `D2` the equatorial one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Branch {
    D1,
    D2,
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Branch::D1 => "D1",
            Branch::D2 => "D2",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiscordX {
    pub value: f64,
    pub d1: f64,
    pub d2: f64,
    pub branch: Branch,
}

/// `(1 + x) ln(1 + x) + (1 - x) ln(1 - x)` for `x` in `[0, 1]`.
pub(crate) fn phi(x: f64) -> f64 {
    let x = x.clamp(0.0, 1.0);
    if x < 0.5 {
        x * (x.ln_1p() - (-x).ln_1p()) + (-x * x).ln_1p()
    } else if x >= 1.0 {
        2.0 * LN_2
    } else {
        (1.0 + x) * (1.0 + x).ln() + (1.0 - x) * (1.0 - x).ln()
    }
}

/// `phi(x) / x^2`, finite at `x = 0`.
pub(crate) fn phi_over_sq(x: f64) -> f64 {
    if x < 1e-4 {
        // phi = sum_k x^{2k} / (k (2k - 1))
        1.0 + x * x / 6.0
    } else {
        phi(x) / (x * x)
    }
}

/// `H(diag) - S(block)` in nats for a 2x2 block `[[p, c], [c*, q]]`.
///
/// Written as `(m/2)(phi(rad/m) - phi(|p-q|/m))` so that the result keeps
/// full relative accuracy when the coherence is small.
fn block_dephasing_gain(p: f64, q: f64, c: C64) -> f64 {
    let m = p + q;
    if m <= 0.0 {
        return 0.0;
    }
    let delta = (p - q).abs();
    let rad = delta.hypot(2.0 * c.norm());
    0.5 * m * (phi(rad / m) - phi(delta / m)).max(0.0)
}

fn block_eigenvalues(p: f64, q: f64, c: C64) -> [f64; 2] {
    let mean = 0.5 * (p + q);
    let rad = (0.5 * (p - q)).hypot(c.norm());
    [mean + rad, mean - rad]
}

/// X-form discord `min(D1, D2)` for an X-state with `b = c`.
pub fn discord_x(p: &XStateParams) -> Result<DiscordX> {
    let asym = (p.b - p.c).abs();
    if asym > SYMMETRY_TOL {
        return Err(Error::AsymmetricXState(asym));
    }
    let d1 = (block_dephasing_gain(p.a, p.d, p.w) + block_dephasing_gain(p.b, p.c, p.z)) / LN_2;

    let [l1, l2] = block_eigenvalues(p.a, p.d, p.w);
    let [l3, l4] = block_eigenvalues(p.b, p.c, p.z);
    let s_ab = shannon_entropy(&[l1, l2.max(0.0), l3, l4.max(0.0)]);
    let s_b = shannon_entropy(&[p.a + p.c, p.b + p.d]);
    let kappa = ((p.a - p.d).powi(2) + 4.0 * (p.z.norm() + p.w.norm()).powi(2))
        .sqrt()
        .min(1.0);
    let d2 = s_b - s_ab + binary_entropy(0.5 * (1.0 + kappa));

    let (value, branch) = if d1 <= d2 { (d1, Branch::D1) } else { (d2, Branch::D2) };
    Ok(DiscordX {
        value,
        d1,
        d2,
        branch,
    })
}

/// Projective measurement on B.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeasurementProjector {
    pub theta: f64,
    pub phi: f64,
}

impl MeasurementProjector {
    /// The two measurement kets `|1>, |2>`.
    pub fn kets(&self) -> [[C64; 2]; 2] {
        let (s, c) = self.theta.sin_cos();
        let e = C64::from_polar(1.0, self.phi);
        [[C64::new(c, 0.0), e * s], [C64::new(s, 0.0), -e * c]]
    }

    /// The two projectors `|i><i|`.
    pub fn projectors(&self) -> [ComplexMatrix; 2] {
        self.kets().map(|k| ComplexMatrix::outer(&k).expect("2 is a valid dimension"))
    }

    /// `sum_i p_i S(A | i)` in bits.
    pub fn conditional_entropy(&self, rho: &ComplexMatrix) -> f64 {
        self.kets()
            .iter()
            .map(|v| {
                // unnormalized conditional state of A
                let mut m = [[C64::new(0.0, 0.0); 2]; 2];
                for (a, row) in m.iter_mut().enumerate() {
                    for (a2, cell) in row.iter_mut().enumerate() {
                        let mut acc = C64::new(0.0, 0.0);
                        for b in 0..2 {
                            for b2 in 0..2 {
                                acc += v[b].conj() * rho[(2 * a + b, 2 * a2 + b2)] * v[b2];
                            }
                        }
                        *cell = acc;
                    }
                }
                let p = m[0][0].re + m[1][1].re;
                if p <= 0.0 {
                    return 0.0;
                }
                let y = ((m[0][0].re - m[1][1].re).hypot(2.0 * m[0][1].norm()) / p).min(1.0);
                p * binary_entropy(0.5 * (1.0 + y))
            })
            .sum()
    }
}

/// Search settings for [`discord_general`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiscordGrid {
    pub theta_points: usize,
    pub phi_points: usize,
    pub rounds: usize,
    pub zoom: f64,
    pub execution: Execution,
}

impl Default for DiscordGrid {
    fn default() -> Self {
        Self {
            theta_points: 64,
            phi_points: 128,
            rounds: 3,
            zoom: 10.0,
            execution: Execution::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiscordResult {
    pub value: f64,
    pub measured: Qubit,
    pub optimum: MeasurementProjector,
    /// Closest analytic branch: `D1` when the optimal axis is nearer the
    /// poles than the equator.
    pub branch: Branch,
}

const REFINE_POINTS: usize = 21;

/// Discord by grid search and local zoom over the Bloch sphere of B.
pub fn discord_general(rho: &ComplexMatrix, grid: &DiscordGrid) -> Result<DiscordResult> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: rho.dim(),
        });
    }
    if grid.theta_points < 2 || grid.phi_points < 1 || !(grid.zoom > 1.0) {
        return Err(Error::InvalidGrid(format!("degenerate discord grid {grid:?}")));
    }
    let s_ab = von_neumann_entropy(rho)?;
    let s_b = von_neumann_entropy(&partial_trace(rho, &[Qubit::B])?)?;

    let half_pi = 0.5 * PI;
    let cond = |theta: f64, phi: f64| MeasurementProjector { theta, phi }.conditional_entropy(rho);

    let d_theta = half_pi / (grid.theta_points - 1) as f64;
    let d_phi = 2.0 * PI / grid.phi_points as f64;
    let rows = map_indexed(grid.theta_points, grid.execution, |i| {
        let theta = i as f64 * d_theta;
        (0..grid.phi_points)
            .map(|j| {
                let phi = j as f64 * d_phi;
                (cond(theta, phi), theta, phi)
            })
            .fold((f64::INFINITY, 0.0, 0.0), |best, x| if x.0 < best.0 { x } else { best })
    });
    let mut best = rows
        .into_iter()
        .fold((f64::INFINITY, 0.0, 0.0), |best, x| if x.0 < best.0 { x } else { best });

    let (mut ht, mut hp) = (d_theta, d_phi);
    for _ in 0..grid.rounds {
        let (_, t0, p0) = best;
        let step_t = 2.0 * ht / (REFINE_POINTS - 1) as f64;
        let step_p = 2.0 * hp / (REFINE_POINTS - 1) as f64;
        for i in 0..REFINE_POINTS {
            let theta = (t0 - ht + i as f64 * step_t).clamp(0.0, half_pi);
            for j in 0..REFINE_POINTS {
                let phi = (p0 - hp + j as f64 * step_p).rem_euclid(2.0 * PI);
                let v = cond(theta, phi);
                if v < best.0 {
                    best = (v, theta, phi);
                }
            }
        }
        ht /= grid.zoom;
        hp /= grid.zoom;
    }

    let (min_cond, theta, phi) = best;
    let branch = if (2.0 * theta).cos().powi(2) > 0.5 { Branch::D1 } else { Branch::D2 };
    Ok(DiscordResult {
        value: (s_b - s_ab + min_cond).max(0.0),
        measured: Qubit::B,
        optimum: MeasurementProjector { theta, phi },
        branch,
    })
}
