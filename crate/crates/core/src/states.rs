//! GHZ-type and W-type mixed initial states.
//!
//! Both families are `(1 - r) I/8 + r |psi><psi|` with purity `r` in `[0, 1]`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::basis::basis_index;
use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, C64};

/// Initial-state family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Ghz,
    W,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::Ghz, Family::W];

    /// Basis indices carrying the pure-state amplitude.
    pub fn support(self) -> &'static [usize] {
        const GHZ: [usize; 2] = [basis_index(1, 1, 1), basis_index(0, 0, 0)];
        const W: [usize; 3] = [basis_index(1, 0, 0), basis_index(0, 1, 0), basis_index(0, 0, 1)];
        match self {
            Family::Ghz => &GHZ,
            Family::W => &W,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Ghz => "GHZ",
            Family::W => "W",
        })
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "ghz" => Ok(Family::Ghz),
            "w" => Ok(Family::W),
            other => Err(format!("unknown family '{other}' (expected GHZ or W)")),
        }
    }
}

/// A family together with its purity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PurityMix {
    family: Family,
    r: f64,
}

impl PurityMix {
    pub fn new(family: Family, r: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&r) {
            return Err(Error::InvalidPurity(r));
        }
        Ok(Self { family, r })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn purity(&self) -> f64 {
        self.r
    }
}

/// Builds the 8x8 density matrix of `mix`.
pub fn make_state(mix: &PurityMix) -> ComplexMatrix {
    let r = mix.r;
    let support = mix.family.support();
    let weight = r / support.len() as f64;
    let mut rho = ComplexMatrix::zeros(8).expect("8 is a valid dimension");
    for k in 0..8 {
        rho[(k, k)] = C64::new((1.0 - r) / 8.0, 0.0);
    }
    for &i in support {
        for &j in support {
            rho[(i, j)] += C64::new(weight, 0.0);
        }
    }
    rho
}
