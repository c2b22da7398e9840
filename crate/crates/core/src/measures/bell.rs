//! MABK and Svetlichny operators and their expectations.
//!
//! Qubit A measures `M_A = P`, `M_A' = sigma_x`, with `P = sigma_y` for the
//! GHZ-type axes and `P = sigma_z` for the W-type axes. Qubits B and C use
//! the same pair rotated by `theta_B`, `theta_C`:
//! `M = cos(theta) P - sin(theta) sigma_x`, `M' = sin(theta) P + cos(theta) sigma_x`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{kron3, pauli, ComplexMatrix};
use crate::states::Family;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AxisFamily {
    /// `sigma_y` / `sigma_x` plane.
    Ghz,
    /// `sigma_z` / `sigma_x` plane.
    W,
}

impl From<Family> for AxisFamily {
    fn from(f: Family) -> Self {
        match f {
            Family::Ghz => AxisFamily::Ghz,
            Family::W => AxisFamily::W,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BellKind {
    Mabk,
    Svetlichny,
}

impl BellKind {
    /// Local-realistic bound: `|<B>| <= 1`, `|<S>| <= 4`.
    pub fn threshold(self) -> f64 {
        match self {
            BellKind::Mabk => 1.0,
            BellKind::Svetlichny => 4.0,
        }
    }
}

impl fmt::Display for BellKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BellKind::Mabk => "mabk",
            BellKind::Svetlichny => "svetlichny",
        })
    }
}

impl FromStr for BellKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "mabk" => Ok(BellKind::Mabk),
            "svetlichny" | "svet" => Ok(BellKind::Svetlichny),
            other => Err(format!("unknown Bell operator '{other}'")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BellAngles {
    pub theta_b: f64,
    pub theta_c: f64,
    pub axes: AxisFamily,
}

impl BellAngles {
    /// Canonical representative `theta_B = theta_bc`, `theta_C = 0`.
    pub fn from_sum(axes: AxisFamily, theta_bc: f64) -> Self {
        Self {
            theta_b: theta_bc,
            theta_c: 0.0,
            axes,
        }
    }

    pub fn theta_bc(&self) -> f64 {
        self.theta_b + self.theta_c
    }
}

struct Settings {
    a: [ComplexMatrix; 2],
    b: [ComplexMatrix; 2],
    c: [ComplexMatrix; 2],
}

fn rotated(p: &ComplexMatrix, x: &ComplexMatrix, theta: f64) -> [ComplexMatrix; 2] {
    let (s, c) = theta.sin_cos();
    [p.scale_real(c) - x.scale_real(s), p.scale_real(s) + x.scale_real(c)]
}

fn settings(angles: &BellAngles) -> Settings {
    let p = match angles.axes {
        AxisFamily::Ghz => pauli::y(),
        AxisFamily::W => pauli::z(),
    };
    let x = pauli::x();
    Settings {
        a: [p, x],
        b: rotated(&p, &x, angles.theta_b),
        c: rotated(&p, &x, angles.theta_c),
    }
}

/// Sum of `sign * M_A^(i) M_B^(j) M_C^(k)`, index 1 meaning primed.
fn combine(s: &Settings, terms: &[(f64, usize, usize, usize)]) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(8).expect("8 is a valid dimension");
    for &(sign, i, j, k) in terms {
        let t = kron3(&s.a[i], &s.b[j], &s.c[k]).expect("2x2 factors");
        out = out + t.scale_real(sign);
    }
    out
}

/// `B = (1/2)(M_A M_B M_C' + M_A M_B' M_C + M_A' M_B M_C - M_A' M_B' M_C')`.
pub fn bell_operator(angles: &BellAngles) -> ComplexMatrix {
    let s = settings(angles);
    combine(
        &s,
        &[(0.5, 0, 0, 1), (0.5, 0, 1, 0), (0.5, 1, 0, 0), (-0.5, 1, 1, 1)],
    )
}

/// Svetlichny operator: `+` on terms with at most one primed setting, `-` otherwise.
pub fn svetlichny_operator(angles: &BellAngles) -> ComplexMatrix {
    let s = settings(angles);
    combine(
        &s,
        &[
            (1.0, 0, 0, 0),
            (1.0, 0, 0, 1),
            (1.0, 0, 1, 0),
            (1.0, 1, 0, 0),
            (-1.0, 1, 1, 1),
            (-1.0, 1, 1, 0),
            (-1.0, 1, 0, 1),
            (-1.0, 0, 1, 1),
        ],
    )
}

pub fn operator(kind: BellKind, angles: &BellAngles) -> ComplexMatrix {
    match kind {
        BellKind::Mabk => bell_operator(angles),
        BellKind::Svetlichny => svetlichny_operator(angles),
    }
}

/// `|Tr(op rho)|`.
pub fn bell_expectation(rho: &ComplexMatrix, op: &ComplexMatrix) -> Result<f64> {
    if rho.dim() != 8 || op.dim() != 8 {
        return Err(Error::DimensionMismatch {
            expected: 8,
            found: if rho.dim() != 8 { rho.dim() } else { op.dim() },
        });
    }
    Ok((op * rho).trace().norm())
}

/// Angles maximizing the expectation on `rho0`, in canonical form with
/// `theta_bc` reduced to `(-pi/2, pi/2]`.
///
/// At `theta_C = 0` the operator is linear in `(cos theta_B, sin theta_B)`,
/// so `Tr(op rho) = P cos + Q sin` and the maximizer is `atan2(Q, P)`.
pub fn optimize_bell_angles(kind: BellKind, axes: AxisFamily, rho0: &ComplexMatrix) -> Result<BellAngles> {
    let at = |theta: f64| -> Result<f64> {
        let op = operator(kind, &BellAngles::from_sum(axes, theta));
        Ok((&op * rho0).trace().re)
    };
    let p = at(0.0)?;
    let q = at(FRAC_PI_2)?;
    let theta = if p == 0.0 && q == 0.0 { 0.0 } else { q.atan2(p) };
    Ok(BellAngles::from_sum(axes, reduce_mod_pi(theta)))
}

/// Maps an angle into `(-pi/2, pi/2]`; expectations are `pi`-periodic in `theta_bc`.
pub fn reduce_mod_pi(theta: f64) -> f64 {
    let mut t = theta.rem_euclid(PI);
    if t > FRAC_PI_2 {
        t -= PI;
    }
    t
}

/// Angles maximizing the family's expectation at `t = 0` for any purity.
pub fn canonical_angles(family: Family, kind: BellKind) -> BellAngles {
    let theta = match (family, kind) {
        (Family::Ghz, BellKind::Mabk) => 0.0,
        (Family::Ghz, BellKind::Svetlichny) => -FRAC_PI_4,
        (Family::W, BellKind::Mabk) => FRAC_PI_2,
        (Family::W, BellKind::Svetlichny) => FRAC_PI_4,
    };
    BellAngles::from_sum(family.into(), theta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{kron3, C64, ZERO};
    use crate::states::{make_state, PurityMix};

    fn pure(family: Family) -> ComplexMatrix {
        make_state(&PurityMix::new(family, 1.0).unwrap())
    }

    #[test]
    fn ghz_operator_at_zero_angles() {
        let (x, y) = (pauli::x(), pauli::y());
        let k = |a: &ComplexMatrix, b: &ComplexMatrix, c: &ComplexMatrix| kron3(a, b, c).unwrap();
        let expect = (k(&y, &y, &x) + k(&y, &x, &y) + k(&x, &y, &y) - k(&x, &x, &x)).scale_real(0.5);
        let op = bell_operator(&BellAngles::from_sum(AxisFamily::Ghz, 0.0));
        assert!(op.max_abs_diff(&expect) < 1e-15);
        assert!(op.is_hermitian(1e-15));
    }

    #[test]
    fn pure_state_maxima() {
        let ghz = pure(Family::Ghz);
        let w = pure(Family::W);
        let val = |rho: &ComplexMatrix, f: Family, k: BellKind| {
            bell_expectation(rho, &operator(k, &canonical_angles(f, k))).unwrap()
        };
        assert!((val(&ghz, Family::Ghz, BellKind::Mabk) - 2.0).abs() < 1e-12);
        assert!((val(&ghz, Family::Ghz, BellKind::Svetlichny) - 4.0 * 2f64.sqrt()).abs() < 1e-12);
        assert!((val(&w, Family::W, BellKind::Mabk) - 1.5).abs() < 1e-12);
        assert!((val(&w, Family::W, BellKind::Svetlichny) - 3.0 * 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn optimizer_finds_canonical_angles() {
        for family in Family::ALL {
            let rho = make_state(&PurityMix::new(family, 0.8).unwrap());
            for kind in [BellKind::Mabk, BellKind::Svetlichny] {
                let got = optimize_bell_angles(kind, family.into(), &rho).unwrap();
                let want = canonical_angles(family, kind);
                assert!((got.theta_bc() - want.theta_bc()).abs() < 1e-12, "{family} {kind}");
            }
        }
    }

    #[test]
    fn only_angle_sum_matters() {
        let w = make_state(&PurityMix::new(Family::W, 0.9).unwrap());
        let a = BellAngles {
            theta_b: 0.3,
            theta_c: 0.5,
            axes: AxisFamily::W,
        };
        let b = BellAngles::from_sum(AxisFamily::W, 0.8);
        for kind in [BellKind::Mabk, BellKind::Svetlichny] {
            let ea = bell_expectation(&w, &operator(kind, &a)).unwrap();
            let eb = bell_expectation(&w, &operator(kind, &b)).unwrap();
            assert!((ea - eb).abs() < 1e-12);
        }
    }

    #[test]
    fn traceless_on_maximally_mixed() {
        let m = ComplexMatrix::identity(8).unwrap().scale_real(0.125);
        let op = svetlichny_operator(&BellAngles::from_sum(AxisFamily::Ghz, 0.4));
        assert!(bell_expectation(&m, &op).unwrap() < 1e-15);
        let small = ComplexMatrix::outer(&[C64::new(1.0, 0.0), ZERO]).unwrap();
        assert!(bell_expectation(&small, &op).is_err());
    }

    #[test]
    fn reduce_range() {
        assert!((reduce_mod_pi(3.0 * FRAC_PI_4) + FRAC_PI_4).abs() < 1e-15);
        assert!((reduce_mod_pi(-FRAC_PI_2) - FRAC_PI_2).abs() < 1e-15);
        assert_eq!(reduce_mod_pi(0.0), 0.0);
    }
}
