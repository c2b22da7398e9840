//! Stochastic-trajectory oracle for the dephased density matrix.
//!
//! Each trajectory draws one accumulated phase `phi_S = int_0^t Omega_S` per
//! qubit and applies the diagonal propagator
//! `U = exp(-(i/2) sum_S phi_S sigma_z^S)`. The ensemble mean of
//! `U rho0 U^H` converges to the dephasing channel output.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::basis::logical_values;
use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, C64};
use crate::noise::NoiseParams;
use crate::par::{map_indexed, pairwise_reduce, Execution};

/// Upper bound on `gamma * dt` in path mode.
pub const MAX_GAMMA_DT: f64 = 0.1;

/// Trajectories per reduction block. Blocks are fixed so that results do
/// not depend on how work is scheduled.
const BLOCK: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PhaseMode {
    /// Integrate a sampled OU frequency path.
    OuPath,
    /// Draw the Gaussian phase with variance `2 f(t)` directly.
    ExactPhase,
}

impl fmt::Display for PhaseMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PhaseMode::OuPath => "ou-path",
            PhaseMode::ExactPhase => "exact-phase",
        })
    }
}

impl FromStr for PhaseMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "ou-path" => Ok(PhaseMode::OuPath),
            "exact-phase" => Ok(PhaseMode::ExactPhase),
            other => Err(format!("unknown mode '{other}' (expected ou-path or exact-phase)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryConfig {
    pub n_traj: usize,
    pub dt: f64,
    pub seed: u64,
    pub mode: PhaseMode,
    pub execution: Execution,
}

impl TrajectoryConfig {
    pub fn new(n_traj: usize, dt: f64, seed: u64, mode: PhaseMode) -> Self {
        Self {
            n_traj,
            dt,
            seed,
            mode,
            execution: Execution::default(),
        }
    }

    pub fn with_execution(mut self, execution: Execution) -> Self {
        self.execution = execution;
        self
    }

    pub fn validate(&self, noise: &NoiseParams) -> Result<()> {
        if self.n_traj == 0 {
            return Err(Error::InvalidTrajectoryConfig("n_traj must be at least 1".into()));
        }
        if !(self.dt.is_finite() && self.dt > 0.0) {
            return Err(Error::InvalidTrajectoryConfig(format!("dt must be > 0, got {}", self.dt)));
        }
        let gdt = noise.bandwidth() * self.dt;
        if self.mode == PhaseMode::OuPath && gdt > MAX_GAMMA_DT * (1.0 + 1e-12) {
            return Err(Error::InvalidTrajectoryConfig(format!(
                "gamma * dt = {gdt} exceeds {MAX_GAMMA_DT}; the path would not resolve the correlation time"
            )));
        }
        Ok(())
    }
}

/// Independent stream for trajectory `index` under `seed`.
pub fn trajectory_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Accumulated phase of one qubit along an exactly discretized OU path,
/// integrated with the trapezoid rule. `Omega(0)` is drawn from the
/// stationary law.
fn ou_phase<R: Rng + ?Sized>(noise: &NoiseParams, t: f64, dt: f64, rng: &mut R) -> f64 {
    if t == 0.0 {
        return 0.0;
    }
    let steps = (t / dt).ceil().max(1.0) as usize;
    let h = t / steps as f64;
    let var = noise.stationary_variance();
    let rho = (-noise.bandwidth() * h).exp();
    let kick = (var * -(-2.0 * noise.bandwidth() * h).exp_m1()).sqrt();
    let mut omega = var.sqrt() * rng.sample::<f64, _>(StandardNormal);
    let mut phase = 0.0;
    for _ in 0..steps {
        let next = omega * rho + kick * rng.sample::<f64, _>(StandardNormal);
        phase += 0.5 * h * (omega + next);
        omega = next;
    }
    phase
}

/// Phases `(phi_A, phi_B, phi_C)` for one trajectory.
pub fn sample_phase<R: Rng + ?Sized>(
    noise: &NoiseParams,
    t: f64,
    cfg: &TrajectoryConfig,
    rng: &mut R,
) -> Result<[f64; 3]> {
    let var = noise.phase_variance(t)?;
    let mut out = [0.0; 3];
    for phi in out.iter_mut() {
        *phi = match cfg.mode {
            PhaseMode::ExactPhase => var.sqrt() * rng.sample::<f64, _>(StandardNormal),
            PhaseMode::OuPath => ou_phase(noise, t, cfg.dt, rng),
        };
    }
    Ok(out)
}

/// `sigma_z` eigenvalue of each qubit in basis state `index`.
fn z_signs(index: usize) -> [f64; 3] {
    logical_values(index).map(|b| if b == 1 { 1.0 } else { -1.0 })
}

/// `U rho0 U^H` for the diagonal phase propagator.
pub fn propagate(rho0: &ComplexMatrix, phases: &[f64; 3]) -> ComplexMatrix {
    let energy: [f64; 8] = std::array::from_fn(|i| {
        let s = z_signs(i);
        0.5 * (s[0] * phases[0] + s[1] * phases[1] + s[2] * phases[2])
    });
    let mut out = *rho0;
    for i in 0..8 {
        for j in 0..8 {
            if i != j {
                out[(i, j)] = rho0[(i, j)] * C64::from_polar(1.0, -(energy[i] - energy[j]));
            }
        }
    }
    out
}

/// Per-element running mean and centred second moment of the real and
/// imaginary parts.
#[derive(Debug, Clone)]
struct Moments {
    n: f64,
    mean: [[f64; 2]; 64],
    m2: [[f64; 2]; 64],
}

impl Moments {
    fn empty() -> Self {
        Self {
            n: 0.0,
            mean: [[0.0; 2]; 64],
            m2: [[0.0; 2]; 64],
        }
    }

    fn push(&mut self, m: &ComplexMatrix) {
        self.n += 1.0;
        for (k, z) in m.entries().enumerate() {
            for (p, x) in [z.re, z.im].into_iter().enumerate() {
                let delta = x - self.mean[k][p];
                self.mean[k][p] += delta / self.n;
                self.m2[k][p] += delta * (x - self.mean[k][p]);
            }
        }
    }

    fn merge(a: Self, b: Self) -> Self {
        let n = a.n + b.n;
        if n == 0.0 {
            return a;
        }
        let mut out = Self::empty();
        out.n = n;
        for k in 0..64 {
            for p in 0..2 {
                let delta = b.mean[k][p] - a.mean[k][p];
                out.mean[k][p] = a.mean[k][p] + delta * b.n / n;
                out.m2[k][p] = a.m2[k][p] + b.m2[k][p] + delta * delta * a.n * b.n / n;
            }
        }
        out
    }
}

/// Ensemble mean and per-element standard errors.
#[derive(Debug, Clone)]
pub struct EnsembleEstimate {
    pub mean: ComplexMatrix,
    /// Standard error of the real and imaginary part of each element,
    /// row-major.
    pub std_err: Vec<[f64; 2]>,
    pub n_traj: usize,
}

impl EnsembleEstimate {
    pub fn std_err_at(&self, i: usize, j: usize) -> [f64; 2] {
        self.std_err[i * 8 + j]
    }
}

/// Ensemble average with standard errors.
pub fn ensemble_estimate(
    rho0: &ComplexMatrix,
    noise: &NoiseParams,
    t: f64,
    cfg: &TrajectoryConfig,
) -> Result<EnsembleEstimate> {
    if rho0.dim() != 8 {
        return Err(Error::DimensionMismatch {
            expected: 8,
            found: rho0.dim(),
        });
    }
    cfg.validate(noise)?;
    noise.phase_variance(t)?;
    let blocks = cfg.n_traj.div_ceil(BLOCK);
    let partial = map_indexed(blocks, cfg.execution, |b| -> Result<Moments> {
        let mut acc = Moments::empty();
        let end = ((b + 1) * BLOCK).min(cfg.n_traj);
        for k in b * BLOCK..end {
            let mut rng = trajectory_rng(cfg.seed, k as u64);
            let phases = sample_phase(noise, t, cfg, &mut rng)?;
            acc.push(&propagate(rho0, &phases));
        }
        Ok(acc)
    });
    let partial: Vec<Moments> = partial.into_iter().collect::<Result<_>>()?;
    let total = pairwise_reduce(partial, Moments::merge).expect("n_traj >= 1");

    let mut mean = ComplexMatrix::zeros(8)?;
    let mut std_err = vec![[0.0; 2]; 64];
    let n = total.n;
    for i in 0..8 {
        for j in 0..8 {
            let k = i * 8 + j;
            mean[(i, j)] = C64::new(total.mean[k][0], total.mean[k][1]);
            if n > 1.0 {
                for p in 0..2 {
                    std_err[k][p] = (total.m2[k][p] / (n - 1.0) / n).sqrt();
                }
            }
        }
    }
    Ok(EnsembleEstimate {
        mean,
        std_err,
        n_traj: cfg.n_traj,
    })
}

/// Ensemble-averaged density matrix.
pub fn ensemble_density(
    rho0: &ComplexMatrix,
    noise: &NoiseParams,
    t: f64,
    cfg: &TrajectoryConfig,
) -> Result<ComplexMatrix> {
    Ok(ensemble_estimate(rho0, noise, t, cfg)?.mean)
}
