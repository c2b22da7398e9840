//! Analytic correlation values for the GHZ-type and W-type families under
//! dephasing, and the sudden-death and discord-kink solvers built on them.
//!
//! With `e_k = exp(-k f(t))`:
//!
//! ```text
//! GHZ  |<B>| = 2 r e_3 |cos t_bc|         |<S>| = 4 r e_3 |cos t_bc - sin t_bc|
//!      N     = max(0, (4 r e_3 - (1 - r)) / 8)
//! W    |<B>| = (r/2)(1 + 2 e_2)|sin t_bc|  |<S>| = r (1 + 2 e_2)|cos t_bc + sin t_bc|
//!      N     = max(0, -3 + 3r + 8 sqrt(2) r e_2) / 24
//!      C     = max(0, 4 r e_2 - sqrt(3 (1 - r)(3 + r))) / 6
//!      D     = min(D1, D2) on the reduced X-state
//!              a = (1-r)/4, b = c = d = (3+r)/12, z = (r/3) e_2, w = 0
//! ```

use std::f64::consts::{LN_2, SQRT_2};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::basis::Qubit;
use crate::channel::evolve_dephasing;
use crate::error::{Error, Result};
use crate::linalg::{partial_trace, ComplexMatrix, C64, ZERO};
use crate::measures::bell::{bell_expectation, canonical_angles, operator, BellAngles, BellKind};
use crate::measures::concurrence::{concurrence_general, XStateParams};
use crate::measures::discord::{discord_x, phi_over_sq, Branch};
use crate::measures::negativity::tripartite_negativity;
use crate::noise::{decay, NoiseParams};
use crate::roots::{bisect, first_crossing, BISECTION_TOL};
use crate::states::{make_state, Family, PurityMix};

/// A numerically evaluated measure counts as alive only above this value.
pub const NUMERIC_ALIVE_TOL: f64 = 1e-12;

/// Window scanned for the discord branch crossing (units of `1/Gamma`).
pub const KINK_WINDOW: f64 = 20.0;
const KINK_STEPS: usize = 4000;
/// `|D1 - D2|` below this is treated as a tie when scanning for a sign change.
const KINK_TIE: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Measure {
    N,
    C,
    D,
    Mabk,
    Svetlichny,
}

impl Measure {
    pub const ALL: [Measure; 5] = [Measure::N, Measure::C, Measure::D, Measure::Mabk, Measure::Svetlichny];

    pub fn bell_kind(self) -> Option<BellKind> {
        match self {
            Measure::Mabk => Some(BellKind::Mabk),
            Measure::Svetlichny => Some(BellKind::Svetlichny),
            _ => None,
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Measure::N => "N",
            Measure::C => "C",
            Measure::D => "D",
            Measure::Mabk => "mabk",
            Measure::Svetlichny => "svetlichny",
        })
    }
}

impl FromStr for Measure {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim() {
            "N" | "n" => Ok(Measure::N),
            "C" | "c" => Ok(Measure::C),
            "D" | "d" => Ok(Measure::D),
            other => other
                .parse::<BellKind>()
                .map(|k| match k {
                    BellKind::Mabk => Measure::Mabk,
                    BellKind::Svetlichny => Measure::Svetlichny,
                })
                .map_err(|_| format!("unknown measure '{other}' (expected N, C, D, mabk, svetlichny)")),
        }
    }
}

/// `theta_bc` used for each Bell operator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThetaBc {
    pub mabk: f64,
    pub svetlichny: f64,
}

impl ThetaBc {
    /// The angles maximizing each expectation at `t = 0`.
    pub fn canonical(family: Family) -> Self {
        Self {
            mabk: canonical_angles(family, BellKind::Mabk).theta_bc(),
            svetlichny: canonical_angles(family, BellKind::Svetlichny).theta_bc(),
        }
    }

    pub fn uniform(theta_bc: f64) -> Self {
        Self {
            mabk: theta_bc,
            svetlichny: theta_bc,
        }
    }

    pub fn get(&self, kind: BellKind) -> f64 {
        match kind {
            BellKind::Mabk => self.mabk,
            BellKind::Svetlichny => self.svetlichny,
        }
    }

    pub fn angles(&self, family: Family, kind: BellKind) -> BellAngles {
        BellAngles::from_sum(family.into(), self.get(kind))
    }
}

/// Closed-form values at one point. `c`, `d`, `d1`, `d2` are zero for the
/// GHZ family, whose two-qubit reductions are classical.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormReport {
    pub n: f64,
    pub c: f64,
    pub d: f64,
    pub d1: f64,
    pub d2: f64,
    pub d_branch: Option<Branch>,
    pub mabk: f64,
    pub svetlichny: f64,
}

fn check_inputs(r: f64, t: f64) -> Result<()> {
    PurityMix::new(Family::Ghz, r)?;
    if !(t.is_finite() && t >= 0.0) {
        return Err(Error::InvalidTime(t));
    }
    Ok(())
}

pub fn ghz_closed_form(noise: &NoiseParams, r: f64, t: f64, theta: &ThetaBc) -> Result<ClosedFormReport> {
    check_inputs(r, t)?;
    let e3 = decay(3.0 * noise.decoherence_exponent(t)?);
    let cm = theta.mabk.cos();
    let (ss, cs) = theta.svetlichny.sin_cos();
    Ok(ClosedFormReport {
        n: (0.125 * (4.0 * r * e3 - (1.0 - r))).max(0.0),
        c: 0.0,
        d: 0.0,
        d1: 0.0,
        d2: 0.0,
        d_branch: None,
        mabk: 2.0 * r * e3 * cm.abs(),
        svetlichny: 4.0 * r * e3 * (cs - ss).abs(),
    })
}

/// Reduced two-qubit X-state of the W family after dephasing exponent `f`.
pub fn w_reduced_x_params(r: f64, f: f64) -> XStateParams {
    let bcd = (3.0 + r) / 12.0;
    XStateParams {
        a: (1.0 - r) / 4.0,
        b: bcd,
        c: bcd,
        d: bcd,
        z: C64::new(r / 3.0 * decay(2.0 * f), 0.0),
        w: ZERO,
    }
}

pub fn w_closed_form(noise: &NoiseParams, r: f64, t: f64, theta: &ThetaBc) -> Result<ClosedFormReport> {
    check_inputs(r, t)?;
    let f = noise.decoherence_exponent(t)?;
    let e2 = decay(2.0 * f);
    let (sm, _) = theta.mabk.sin_cos();
    let (ss, cs) = theta.svetlichny.sin_cos();
    let disc = discord_x(&w_reduced_x_params(r, f))?;
    Ok(ClosedFormReport {
        n: (-3.0 + 3.0 * r + 8.0 * SQRT_2 * r * e2).max(0.0) / 24.0,
        c: (4.0 * r * e2 - (3.0 * (1.0 - r) * (3.0 + r)).sqrt()).max(0.0) / 6.0,
        d: disc.value,
        d1: disc.d1,
        d2: disc.d2,
        d_branch: Some(disc.branch),
        mabk: 0.5 * r * (1.0 + 2.0 * e2) * sm.abs(),
        svetlichny: r * (1.0 + 2.0 * e2) * (cs + ss).abs(),
    })
}

pub fn closed_form(family: Family, noise: &NoiseParams, r: f64, t: f64, theta: &ThetaBc) -> Result<ClosedFormReport> {
    match family {
        Family::Ghz => ghz_closed_form(noise, r, t, theta),
        Family::W => w_closed_form(noise, r, t, theta),
    }
}

/// Positive multiple of (value - threshold). Only the sign is meaningful;
/// the rescaling keeps exponentially small but positive values from
/// underflowing to zero.
pub fn closed_form_margin(
    family: Family,
    measure: Measure,
    noise: &NoiseParams,
    r: f64,
    theta: &ThetaBc,
    t: f64,
) -> Result<f64> {
    check_inputs(r, t)?;
    let f = noise.decoherence_exponent(t)?;
    let (e2, e3) = (decay(2.0 * f), decay(3.0 * f));
    let m = match (family, measure) {
        (Family::Ghz, Measure::N) => 4.0 * r * e3 - (1.0 - r),
        (Family::W, Measure::N) => -3.0 + 3.0 * r + 8.0 * SQRT_2 * r * e2,
        (Family::W, Measure::C) => 4.0 * r * e2 - (3.0 * (1.0 - r) * (3.0 + r)).sqrt(),
        (Family::Ghz, Measure::C | Measure::D) => -1.0,
        (Family::W, Measure::D) => w_discord_margin(r, f)?,
        (_, Measure::Mabk | Measure::Svetlichny) => {
            let kind = measure.bell_kind().expect("Bell measure");
            let rep = closed_form(family, noise, r, t, theta)?;
            let v = if kind == BellKind::Mabk { rep.mabk } else { rep.svetlichny };
            v - kind.threshold()
        }
    };
    Ok(m)
}

/// `min(D1, D2) / |z|^2`. `D1` vanishes quadratically in the coherence,
/// so this stays O(1) long after `D1` itself would underflow.
fn w_discord_margin(r: f64, f: f64) -> Result<f64> {
    let p = w_reduced_x_params(r, f);
    let z = p.z.norm();
    if z == 0.0 {
        return Ok(0.0);
    }
    let m = p.b + p.c;
    let y = 2.0 * z / m;
    let d1_scaled = 2.0 / m * phi_over_sq(y) / LN_2;
    let d2_scaled = discord_x(&p)?.d2 / (z * z);
    Ok(d1_scaled.min(d2_scaled))
}

/// First time at which the closed-form `measure` reaches its threshold
/// (0 for N, C, D; 1 for MABK; 4 for Svetlichny).
pub fn death_time(
    family: Family,
    measure: Measure,
    noise: &NoiseParams,
    r: f64,
    theta: &ThetaBc,
) -> Result<Option<f64>> {
    PurityMix::new(family, r)?;
    first_crossing(
        |t| closed_form_margin(family, measure, noise, r, theta, t),
        1.0 / noise.damping(),
    )
}

/// Evolved state of the family at time `t`.
pub fn evolved_state(family: Family, noise: &NoiseParams, r: f64, t: f64) -> Result<ComplexMatrix> {
    let rho0 = make_state(&PurityMix::new(family, r)?);
    evolve_dephasing(&rho0, noise, t)
}

/// Margin from the numeric pipeline (state, channel, measures).
pub fn numeric_margin(
    family: Family,
    measure: Measure,
    noise: &NoiseParams,
    r: f64,
    theta: &ThetaBc,
    t: f64,
) -> Result<f64> {
    let rho = evolved_state(family, noise, r, t)?;
    Ok(match measure {
        Measure::N => tripartite_negativity(&rho)? - NUMERIC_ALIVE_TOL,
        Measure::C => {
            let ab = partial_trace(&rho, &[Qubit::A, Qubit::B])?;
            concurrence_general(&ab)? - NUMERIC_ALIVE_TOL
        }
        // Discord decays as the squared coherence and would underflow
        // inside the bracket; its margin is taken from the reduced X-state.
        Measure::D => closed_form_margin(family, measure, noise, r, theta, t)?,
        Measure::Mabk | Measure::Svetlichny => {
            let kind = measure.bell_kind().expect("Bell measure");
            let op = operator(kind, &theta.angles(family, kind));
            bell_expectation(&rho, &op)? - kind.threshold()
        }
    })
}

/// [`death_time`] re-solved on the numeric pipeline.
pub fn death_time_numeric(
    family: Family,
    measure: Measure,
    noise: &NoiseParams,
    r: f64,
    theta: &ThetaBc,
) -> Result<Option<f64>> {
    PurityMix::new(family, r)?;
    first_crossing(
        |t| numeric_margin(family, measure, noise, r, theta, t),
        1.0 / noise.damping(),
    )
}

/// First `t > 0` at which the W-family discord switches between its `D1`
/// and `D2` branches, searched over `[0, 20/Gamma]`.
pub fn discord_kink_time(noise: &NoiseParams, r: f64) -> Result<Option<f64>> {
    PurityMix::new(Family::W, r)?;
    let gap = |t: f64| -> Result<f64> {
        let f = noise.decoherence_exponent(t)?;
        let d = discord_x(&w_reduced_x_params(r, f))?;
        Ok(d.d1 - d.d2)
    };
    let unit = 1.0 / noise.damping();
    let h = KINK_WINDOW * unit / KINK_STEPS as f64;
    let mut last: Option<(f64, bool)> = None;
    for k in 0..=KINK_STEPS {
        let t = k as f64 * h;
        let g = gap(t)?;
        if g.abs() <= KINK_TIE {
            continue;
        }
        let positive = g > 0.0;
        if let Some((t_prev, prev)) = last {
            if prev != positive {
                let root = bisect(|s| Ok((gap(s)? > 0.0) == prev), t_prev, t, BISECTION_TOL * unit)?;
                return Ok(Some(root));
            }
        }
        last = Some((t, positive));
    }
    Ok(None)
}
