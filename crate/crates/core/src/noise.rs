//! Ornstein-Uhlenbeck frequency noise.
//!
//! Each qubit's transition frequency fluctuates as a stationary Gaussian
//! process with correlation `alpha(dt) = (Gamma gamma / 2) exp(-gamma |dt|)`.
//! The integrated kernel `G(t)` drives single-qubit dephasing and its
//! integral `f(t)` is the coherence decay exponent: `rho_01(t) = exp(-f) rho_01(0)`.
//! As `gamma / Gamma -> infinity` the noise becomes white and `f -> Gamma t / 2`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `gamma / Gamma` used for the memoryless regime in the figures.
pub const MARKOVIAN_RATIO: f64 = 10.0;
/// `gamma / Gamma` used for the memory-bearing regime in the figures.
pub const NON_MARKOVIAN_RATIO: f64 = 0.1;

/// `exp(-x)` for `x >= 0`, flushed to zero past `x = 700`.
pub(crate) fn decay(x: f64) -> f64 {
    if x > 700.0 {
        0.0
    } else {
        (-x).exp()
    }
}

/// Damping rate `Gamma` and bandwidth `gamma`, shared by all three qubits.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NoiseParams {
    damping: f64,
    bandwidth: f64,
}

fn check_time(t: f64) -> Result<()> {
    if t.is_finite() && t >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidTime(t))
    }
}

impl NoiseParams {
    pub fn new(damping: f64, bandwidth: f64) -> Result<Self> {
        if !(damping.is_finite() && damping > 0.0) {
            return Err(Error::InvalidNoise(format!("damping rate must be > 0, got {damping}")));
        }
        if !(bandwidth.is_finite() && bandwidth > 0.0) {
            return Err(Error::InvalidNoise(format!("bandwidth must be > 0, got {bandwidth}")));
        }
        Ok(Self { damping, bandwidth })
    }

    /// Unit damping rate with the given Markovianity `gamma / Gamma`. All
    /// times are then in units of `1 / Gamma`.
    pub fn from_ratio(gamma_ratio: f64) -> Result<Self> {
        Self::new(1.0, gamma_ratio)
    }

    pub fn damping(&self) -> f64 {
        self.damping
    }

    pub fn bandwidth(&self) -> f64 {
        self.bandwidth
    }

    /// Markovianity `gamma / Gamma`.
    pub fn ratio(&self) -> f64 {
        self.bandwidth / self.damping
    }

    /// Noise correlation time `1 / gamma`.
    pub fn correlation_time(&self) -> f64 {
        1.0 / self.bandwidth
    }

    /// Stationary variance of the frequency noise, `alpha(0)`.
    pub fn stationary_variance(&self) -> f64 {
        0.5 * self.damping * self.bandwidth
    }

    /// Two-time correlation `alpha(dt)`.
    pub fn correlation(&self, dt: f64) -> f64 {
        self.stationary_variance() * decay(self.bandwidth * dt.abs())
    }

    /// `G(t) = int_0^t alpha(t - s) ds = (Gamma / 2)(1 - exp(-gamma t))`.
    pub fn memory_kernel(&self, t: f64) -> Result<f64> {
        check_time(t)?;
        Ok(0.5 * self.damping * -(-self.bandwidth * t).exp_m1())
    }

    /// `f(t) = int_0^t G(s) ds = (Gamma / 2)(t + (exp(-gamma t) - 1) / gamma)`.
    pub fn decoherence_exponent(&self, t: f64) -> Result<f64> {
        check_time(t)?;
        let x = self.bandwidth * t;
        // x + expm1(-x) cancels to x^2 / 2 for small x
        let g = if x < 1e-3 {
            x * x * (0.5 - x * (1.0 / 6.0 - x * (1.0 / 24.0 - x / 120.0)))
        } else {
            x + (-x).exp_m1()
        };
        Ok(0.5 * self.damping * g / self.bandwidth)
    }

    /// Variance of the accumulated phase `int_0^t Omega(s) ds`, equal to `2 f(t)`.
    pub fn phase_variance(&self, t: f64) -> Result<f64> {
        Ok(2.0 * self.decoherence_exponent(t)?)
    }

    /// Single-qubit coherence factor `exp(-f(t))`.
    pub fn coherence(&self, t: f64) -> Result<f64> {
        Ok(decay(self.decoherence_exponent(t)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
        let h = (b - a) / n as f64;
        let mut s = f(a) + f(b);
        for k in 1..n {
            let x = a + k as f64 * h;
            s += if k % 2 == 1 { 4.0 } else { 2.0 } * f(x);
        }
        s * h / 3.0
    }

    #[test]
    fn correlation_values() {
        let p = NoiseParams::new(1.0, 2.0).unwrap();
        assert_eq!(p.correlation(0.0), 1.0);
        assert_eq!(p.correlation(1e6), 0.0);
        assert_eq!(p.correlation(-0.3), p.correlation(0.3));
        let q = NoiseParams::new(1.0, 1.0).unwrap();
        assert!((q.correlation(1.0) - 0.5 * (-1.0f64).exp()).abs() < 1e-15);
        assert!((q.correlation(1.0) - 0.18394).abs() < 1e-5);
    }

    #[test]
    fn memory_kernel_values() {
        let p = NoiseParams::new(1.0, 10.0).unwrap();
        assert_eq!(p.memory_kernel(0.0).unwrap(), 0.0);
        assert!((p.memory_kernel(0.1).unwrap() - 0.5 * (1.0 - (-1.0f64).exp())).abs() < 1e-15);
        assert!((p.memory_kernel(0.1).unwrap() - 0.31606).abs() < 1e-5);
        let white = NoiseParams::new(1.0, 1e9).unwrap();
        assert!((white.memory_kernel(0.5).unwrap() - 0.5).abs() < 1e-15);
        assert!(matches!(p.memory_kernel(-1.0), Err(Error::InvalidTime(_))));
    }

    #[test]
    fn exponent_values() {
        let m = NoiseParams::new(1.0, 10.0).unwrap();
        assert_eq!(m.decoherence_exponent(0.0).unwrap(), 0.0);
        let expected = 0.5 * (1.0 + ((-10.0f64).exp() - 1.0) / 10.0);
        assert!((m.decoherence_exponent(1.0).unwrap() - expected).abs() < 1e-15);
        assert!((m.decoherence_exponent(1.0).unwrap() - 0.45000).abs() < 1e-4);
        let nm = NoiseParams::new(1.0, 0.1).unwrap();
        let expected = 0.5 * (1.0 + ((-0.1f64).exp() - 1.0) / 0.1);
        assert!((nm.decoherence_exponent(1.0).unwrap() - expected).abs() < 1e-15);
        assert!((nm.decoherence_exponent(1.0).unwrap() - 0.02419).abs() < 1e-5);
        assert!(nm.decoherence_exponent(f64::NAN).is_err());
    }

    #[test]
    fn exponent_series_branch_is_continuous() {
        let p = NoiseParams::new(1.0, 1.0).unwrap();
        let below = p.decoherence_exponent(1e-3 - 1e-12).unwrap();
        let above = p.decoherence_exponent(1e-3 + 1e-12).unwrap();
        // the step itself moves f by about 4e-9 relative
        assert!((below - above).abs() < 1e-8 * below);
        // small-time behaviour f ~ Gamma gamma t^2 / 4
        let t = 1e-5;
        let f = p.decoherence_exponent(t).unwrap();
        assert!((f / (0.25 * t * t) - 1.0).abs() < 1e-4);
    }

    #[test]
    fn markovian_limit_is_linear() {
        for &gt in &[0.5, 1.0, 2.0, 5.0] {
            let f = NoiseParams::new(1.0, 1e12).unwrap().decoherence_exponent(gt).unwrap();
            assert!((f - gt / 2.0).abs() < 1e-11);
        }
    }

    #[test]
    fn kernel_is_integral_of_correlation() {
        for &(g, t) in &[(10.0, 0.1), (0.1, 3.0), (1.0, 1.0), (2.5, 0.7)] {
            let p = NoiseParams::new(1.0, g).unwrap();
            let quad = simpson(|s| p.correlation(t - s), 0.0, t, 2000);
            assert!((quad - p.memory_kernel(t).unwrap()).abs() < 1e-8, "g={g} t={t}");
        }
    }

    #[test]
    fn exponent_derivative_is_kernel() {
        let p = NoiseParams::new(1.3, 0.7).unwrap();
        let h = 1e-5;
        for &t in &[0.01, 0.5, 2.0, 8.0] {
            let fd = (p.decoherence_exponent(t + h).unwrap() - p.decoherence_exponent(t - h).unwrap())
                / (2.0 * h);
            assert!((fd - p.memory_kernel(t).unwrap()).abs() < 1e-8, "t={t}");
        }
    }

    #[test]
    fn exponent_is_convex() {
        let p = NoiseParams::new(1.0, 0.1).unwrap();
        let h = 0.01;
        for k in 1..2000 {
            let t = k as f64 * h;
            let second = p.decoherence_exponent(t + h).unwrap() - 2.0 * p.decoherence_exponent(t).unwrap()
                + p.decoherence_exponent(t - h).unwrap();
            assert!(second >= -1e-8, "t={t}");
        }
    }

    #[test]
    fn phase_variance_matches_double_integral() {
        for &(g, t) in &[(10.0, 1.0), (0.1, 2.0), (1.0, 0.5)] {
            let p = NoiseParams::new(1.0, g).unwrap();
            // split at the kink u = s so each piece is smooth
            let inner = |s: f64| {
                simpson(|u| p.correlation(s - u), 0.0, s, 200)
                    + simpson(|u| p.correlation(s - u), s, t, 200)
            };
            let double = simpson(inner, 0.0, t, 400);
            assert!((double - p.phase_variance(t).unwrap()).abs() < 1e-6, "g={g} t={t}");
        }
    }

    #[test]
    fn rejects_bad_params() {
        assert!(NoiseParams::new(0.0, 1.0).is_err());
        assert!(NoiseParams::new(1.0, -1.0).is_err());
        assert!(NoiseParams::new(f64::NAN, 1.0).is_err());
    }
}
