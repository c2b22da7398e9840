//! Two-qubit concurrence, general and X-form.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, kron, pauli, sqrt_psd, ComplexMatrix, C64, ZERO};

/// Off-X entries larger than this reject a matrix as an X-state.
pub const X_FORM_TOL: f64 = 1e-12;

/// Two-qubit X-state
///
/// ```text
/// | a  0  0  w |
/// | 0  b  z  0 |
/// | 0  z* c  0 |
/// | w* 0  0  d |
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct XStateParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub z: C64,
    pub w: C64,
}

impl XStateParams {
    pub fn from_matrix(rho: &ComplexMatrix) -> Result<Self> {
        if rho.dim() != 4 {
            return Err(Error::DimensionMismatch {
                expected: 4,
                found: rho.dim(),
            });
        }
        let mut off = 0.0f64;
        for i in 0..4 {
            for j in 0..4 {
                let on_x = i == j || i + j == 3;
                if !on_x {
                    off = off.max(rho[(i, j)].norm());
                }
            }
        }
        if off > X_FORM_TOL {
            return Err(Error::NotXState(off));
        }
        Ok(Self {
            a: rho[(0, 0)].re,
            b: rho[(1, 1)].re,
            c: rho[(2, 2)].re,
            d: rho[(3, 3)].re,
            z: rho[(1, 2)],
            w: rho[(0, 3)],
        })
    }

    pub fn to_matrix(&self) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(4).expect("4 is a valid dimension");
        m[(0, 0)] = C64::new(self.a, 0.0);
        m[(1, 1)] = C64::new(self.b, 0.0);
        m[(2, 2)] = C64::new(self.c, 0.0);
        m[(3, 3)] = C64::new(self.d, 0.0);
        m[(1, 2)] = self.z;
        m[(2, 1)] = self.z.conj();
        m[(0, 3)] = self.w;
        m[(3, 0)] = self.w.conj();
        m
    }

    /// `b c >= |z|^2` and `a d >= |w|^2` with non-negative populations.
    pub fn is_positive(&self, tol: f64) -> bool {
        [self.a, self.b, self.c, self.d].iter().all(|&p| p >= -tol)
            && self.b * self.c - self.z.norm_sqr() >= -tol
            && self.a * self.d - self.w.norm_sqr() >= -tol
    }
}

/// Wootters concurrence `max(0, s1 - s2 - s3 - s4)`.
///
/// The `s_i` are square roots of the eigenvalues of
/// `rho (sy sy) rho* (sy sy)`, obtained here as the singular values of
/// `sqrt(rho) (sy sy) sqrt(rho)*`. That route never takes a square root of
/// a nearly vanishing eigenvalue of `R`, which would amplify rounding to
/// `sqrt(eps)`.
pub fn concurrence_general(rho: &ComplexMatrix) -> Result<f64> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: rho.dim(),
        });
    }
    let yy = kron(&pauli::y(), &pauli::y())?;
    let root = sqrt_psd(rho)?;
    let x = &(&root * &yy) * &root.conj();

    // [[0, X], [X^H, 0]] has eigenvalues +-s_i.
    let mut h = ComplexMatrix::zeros(8)?;
    for i in 0..4 {
        for j in 0..4 {
            h[(i, 4 + j)] = x[(i, j)];
            h[(4 + j, i)] = x[(i, j)].conj();
        }
    }
    for i in 0..8 {
        h[(i, i)] = ZERO;
    }
    let spec = hermitian_eigenvalues(&h)?;
    let s: Vec<f64> = spec.values()[..4].iter().map(|&v| v.max(0.0)).collect();
    Ok((s[0] - s[1] - s[2] - s[3]).max(0.0))
}

/// X-form concurrence `2 max(0, |z| - sqrt(a d), |w| - sqrt(b c))`.
pub fn concurrence_x(p: &XStateParams) -> f64 {
    let ad = (p.a * p.d).max(0.0).sqrt();
    let bc = (p.b * p.c).max(0.0).sqrt();
    2.0 * (p.z.norm() - ad).max(p.w.norm() - bc).max(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bell() -> ComplexMatrix {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        ComplexMatrix::outer(&[C64::new(h, 0.0), ZERO, ZERO, C64::new(h, 0.0)]).unwrap()
    }

    #[test]
    fn bell_state_is_maximal() {
        assert!((concurrence_general(&bell()).unwrap() - 1.0).abs() < 1e-12);
        let p = XStateParams::from_matrix(&bell()).unwrap();
        assert!((concurrence_x(&p) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn maximally_mixed_is_zero() {
        let m = ComplexMatrix::identity(4).unwrap().scale_real(0.25);
        assert!(concurrence_general(&m).unwrap().abs() < 1e-12);
        let p = XStateParams {
            a: 0.25,
            b: 0.25,
            c: 0.25,
            d: 0.25,
            z: ZERO,
            w: ZERO,
        };
        assert_eq!(concurrence_x(&p), 0.0);
    }

    #[test]
    fn w_reduced_value() {
        let r: f64 = 0.98;
        let p = XStateParams {
            a: (1.0 - r) / 4.0,
            b: (3.0 + r) / 12.0,
            c: (3.0 + r) / 12.0,
            d: (3.0 + r) / 12.0,
            z: C64::new(r / 3.0, 0.0),
            w: ZERO,
        };
        let expect = (4.0 * r - (3.0 * (1.0 - r) * (3.0 + r)).sqrt()) / 6.0;
        assert!((concurrence_x(&p) - expect).abs() < 1e-15);
        assert!((concurrence_general(&p.to_matrix()).unwrap() - expect).abs() < 1e-12);
        assert!((expect - 0.57189).abs() < 1e-5);
    }

    #[test]
    fn rejects_non_x() {
        let mut m = ComplexMatrix::identity(4).unwrap().scale_real(0.25);
        m[(0, 1)] = C64::new(0.1, 0.0);
        m[(1, 0)] = C64::new(0.1, 0.0);
        assert!(matches!(XStateParams::from_matrix(&m), Err(Error::NotXState(_))));
        assert!(concurrence_general(&ComplexMatrix::identity(8).unwrap()).is_err());
    }

    #[test]
    fn round_trip() {
        let p = XStateParams {
            a: 0.1,
            b: 0.2,
            c: 0.3,
            d: 0.4,
            z: C64::new(0.1, -0.05),
            w: C64::new(0.0, 0.15),
        };
        assert_eq!(XStateParams::from_matrix(&p.to_matrix()).unwrap(), p);
        assert!(p.is_positive(0.0));
    }
}
