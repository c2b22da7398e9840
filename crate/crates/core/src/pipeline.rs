//! End-to-end evaluation on a parameter grid, either from the closed forms
//! or from the numeric pipeline (state, channel, measures).

use serde::{Deserialize, Serialize};

use crate::basis::Qubit;
use crate::closed_form::{closed_form, evolved_state, Measure, ThetaBc};
use crate::error::{Error, Result};
use crate::linalg::partial_trace;
use crate::measures::bell::{bell_expectation, operator, BellKind};
use crate::measures::concurrence::concurrence_general;
use crate::measures::discord::{discord_general, Branch, DiscordGrid};
use crate::measures::negativity::tripartite_negativity;
use crate::noise::NoiseParams;
use crate::par::{map_indexed, Execution};
use crate::states::Family;

/// Measures at one `(family, r, gamma / Gamma, Gamma t)` point. Unrequested
/// measures are `None`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CorrelationReport {
    pub family: Family,
    pub r: f64,
    pub gamma_ratio: f64,
    pub t: f64,
    pub n: Option<f64>,
    pub c: Option<f64>,
    pub d: Option<f64>,
    pub d_branch: Option<Branch>,
    /// Party measured when computing discord.
    pub discord_party: Qubit,
    pub mabk: Option<f64>,
    pub svetlichny: Option<f64>,
}

impl CorrelationReport {
    fn empty(family: Family, r: f64, gamma_ratio: f64, t: f64) -> Self {
        Self {
            family,
            r,
            gamma_ratio,
            t,
            n: None,
            c: None,
            d: None,
            d_branch: None,
            discord_party: Qubit::B,
            mabk: None,
            svetlichny: None,
        }
    }

    pub fn get(&self, m: Measure) -> Option<f64> {
        match m {
            Measure::N => self.n,
            Measure::C => self.c,
            Measure::D => self.d,
            Measure::Mabk => self.mabk,
            Measure::Svetlichny => self.svetlichny,
        }
    }
}

/// Closed-form report at a point; time in units of `1/Gamma` with `Gamma = 1`.
pub fn closed_form_report(
    family: Family,
    r: f64,
    gamma_ratio: f64,
    t: f64,
    theta: &ThetaBc,
    measures: &[Measure],
) -> Result<CorrelationReport> {
    let noise = NoiseParams::from_ratio(gamma_ratio)?;
    let cf = closed_form(family, &noise, r, t, theta)?;
    let mut rep = CorrelationReport::empty(family, r, gamma_ratio, t);
    for &m in measures {
        match m {
            Measure::N => rep.n = Some(cf.n),
            Measure::C => rep.c = Some(cf.c),
            Measure::D => {
                rep.d = Some(cf.d);
                rep.d_branch = cf.d_branch;
            }
            Measure::Mabk => rep.mabk = Some(cf.mabk),
            Measure::Svetlichny => rep.svetlichny = Some(cf.svetlichny),
        }
    }
    Ok(rep)
}

/// Numeric report: evolve the initial state through the dephasing channel
/// and evaluate each measure on the resulting matrix.
pub fn numeric_report(
    family: Family,
    r: f64,
    gamma_ratio: f64,
    t: f64,
    theta: &ThetaBc,
    measures: &[Measure],
    grid: &DiscordGrid,
) -> Result<CorrelationReport> {
    let noise = NoiseParams::from_ratio(gamma_ratio)?;
    let rho = evolved_state(family, &noise, r, t)?;
    let mut rep = CorrelationReport::empty(family, r, gamma_ratio, t);
    let needs_ab = measures.iter().any(|m| matches!(m, Measure::C | Measure::D));
    let ab = if needs_ab {
        Some(partial_trace(&rho, &[Qubit::A, Qubit::B])?)
    } else {
        None
    };
    for &m in measures {
        match m {
            Measure::N => rep.n = Some(tripartite_negativity(&rho)?),
            Measure::C => rep.c = Some(concurrence_general(ab.as_ref().expect("reduced state"))?),
            Measure::D => {
                let d = discord_general(ab.as_ref().expect("reduced state"), grid)?;
                rep.d = Some(d.value);
                // GHZ reductions are classical; no branch to report.
                rep.d_branch = (family == Family::W).then_some(d.branch);
                rep.discord_party = d.measured;
            }
            Measure::Mabk | Measure::Svetlichny => {
                let kind = m.bell_kind().expect("Bell measure");
                let v = bell_expectation(&rho, &operator(kind, &theta.angles(family, kind)))?;
                if kind == BellKind::Mabk {
                    rep.mabk = Some(v);
                } else {
                    rep.svetlichny = Some(v);
                }
            }
        }
    }
    Ok(rep)
}

/// Grid of points to evaluate; all times are `Gamma t`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub family: Family,
    pub r_grid: Vec<f64>,
    pub gamma_ratio_grid: Vec<f64>,
    pub t_grid: Vec<f64>,
    pub measures: Vec<Measure>,
    pub theta: Option<ThetaBc>,
    pub numeric: bool,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        for (name, grid) in [
            ("r", &self.r_grid),
            ("gamma-ratio", &self.gamma_ratio_grid),
            ("t", &self.t_grid),
        ] {
            if grid.is_empty() {
                return Err(Error::InvalidGrid(format!("{name} grid is empty")));
            }
            if grid.windows(2).any(|w| !(w[1] > w[0])) {
                return Err(Error::InvalidGrid(format!("{name} grid is not strictly increasing")));
            }
        }
        if self.measures.is_empty() {
            return Err(Error::InvalidGrid("no measures selected".into()));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.r_grid.len() * self.gamma_ratio_grid.len() * self.t_grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `(r, gamma_ratio, t)` of flat index `k`, with `t` varying fastest.
    pub fn point(&self, k: usize) -> (f64, f64, f64) {
        let nt = self.t_grid.len();
        let ng = self.gamma_ratio_grid.len();
        (
            self.r_grid[k / (nt * ng)],
            self.gamma_ratio_grid[(k / nt) % ng],
            self.t_grid[k % nt],
        )
    }
}

/// Evaluates every grid point; rows come back in grid order.
pub fn sweep(cfg: &SweepConfig, exec: Execution) -> Result<Vec<CorrelationReport>> {
    cfg.validate()?;
    let theta = cfg.theta.unwrap_or_else(|| ThetaBc::canonical(cfg.family));
    // parallelism lives at the grid level; the discord search stays serial
    let grid = DiscordGrid {
        execution: Execution::Sequential,
        ..DiscordGrid::default()
    };
    map_indexed(cfg.len(), exec, |k| {
        let (r, g, t) = cfg.point(k);
        if cfg.numeric {
            numeric_report(cfg.family, r, g, t, &theta, &cfg.measures, &grid)
        } else {
            closed_form_report(cfg.family, r, g, t, &theta, &cfg.measures)
        }
    })
    .into_iter()
    .collect()
}

/// `n` evenly spaced points on `[0, t_max]` (a single `0` when `n == 1`).
pub fn linspace(t_max: f64, n: usize) -> Vec<f64> {
    match n {
        0 => vec![],
        1 => vec![0.0],
        _ => (0..n).map(|k| t_max * k as f64 / (n - 1) as f64).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(family: Family, numeric: bool) -> SweepConfig {
        SweepConfig {
            family,
            r_grid: vec![0.5, 0.98],
            gamma_ratio_grid: vec![0.1, 10.0],
            t_grid: linspace(2.0, 5),
            measures: Measure::ALL.to_vec(),
            theta: None,
            numeric,
        }
    }

    #[test]
    fn grid_order() {
        let c = cfg(Family::W, false);
        assert_eq!(c.len(), 20);
        assert_eq!(c.point(0), (0.5, 0.1, 0.0));
        assert_eq!(c.point(6), (0.5, 10.0, 0.5));
        assert_eq!(c.point(19), (0.98, 10.0, 2.0));
    }

    #[test]
    fn numeric_matches_closed_form() {
        for family in Family::ALL {
            let a = sweep(&cfg(family, false), Execution::default()).unwrap();
            let b = sweep(&cfg(family, true), Execution::default()).unwrap();
            for (x, y) in a.iter().zip(&b) {
                for m in Measure::ALL {
                    let tol = if m == Measure::D { 1e-4 } else { 1e-9 };
                    let (u, v) = (x.get(m).unwrap(), y.get(m).unwrap());
                    assert!((u - v).abs() < tol, "{family} {m} r={} g={} t={}: {u} {v}", x.r, x.gamma_ratio, x.t);
                }
            }
        }
    }

    #[test]
    fn rejects_bad_grids() {
        let mut c = cfg(Family::Ghz, false);
        c.t_grid = vec![0.0, 0.0];
        assert!(c.validate().is_err());
        c.t_grid = vec![];
        assert!(c.validate().is_err());
        let mut c = cfg(Family::Ghz, false);
        c.measures.clear();
        assert!(sweep(&c, Execution::Sequential).is_err());
    }

    #[test]
    fn linspace_ends() {
        assert_eq!(linspace(5.0, 11)[10], 5.0);
        assert_eq!(linspace(5.0, 1), vec![0.0]);
    }
}
