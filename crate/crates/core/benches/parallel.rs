use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use tricorr::closed_form::{evolved_state, Measure};
use tricorr::linalg::partial_trace;
use tricorr::mc::{ensemble_density, PhaseMode, TrajectoryConfig};
use tricorr::measures::{discord_general, DiscordGrid};
use tricorr::pipeline::{linspace, sweep, SweepConfig};
use tricorr::{make_state, Execution, Family, NoiseParams, PurityMix, Qubit};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn mc_ensemble(c: &mut Criterion) {
    let mut group = c.benchmark_group("mc_ensemble");
    group.sample_size(10);
    let rho0 = make_state(&PurityMix::new(Family::W, 1.0).unwrap());
    let noise = NoiseParams::new(1.0, 10.0).unwrap();
    for (name, exec) in MODES {
        for mode in [PhaseMode::ExactPhase, PhaseMode::OuPath] {
            let cfg = TrajectoryConfig::new(20_000, 1e-3, 1, mode).with_execution(exec);
            group.bench_with_input(BenchmarkId::new(name, mode), &cfg, |b, cfg| {
                b.iter(|| ensemble_density(black_box(&rho0), &noise, 1.0, cfg).unwrap())
            });
        }
    }
    group.finish();
}

fn discord_grid(c: &mut Criterion) {
    let mut group = c.benchmark_group("discord_grid");
    let noise = NoiseParams::from_ratio(10.0).unwrap();
    let rho = evolved_state(Family::W, &noise, 0.98, 0.5).unwrap();
    let ab = partial_trace(&rho, &[Qubit::A, Qubit::B]).unwrap();
    for (name, exec) in MODES {
        let grid = DiscordGrid {
            theta_points: 256,
            phi_points: 512,
            execution: exec,
            ..DiscordGrid::default()
        };
        group.bench_function(name, |b| b.iter(|| discord_general(black_box(&ab), &grid).unwrap()));
    }
    group.finish();
}

fn numeric_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("numeric_sweep");
    group.sample_size(10);
    let cfg = SweepConfig {
        family: Family::W,
        r_grid: vec![0.5, 0.98],
        gamma_ratio_grid: vec![0.1, 10.0],
        t_grid: linspace(5.0, 26),
        measures: Measure::ALL.to_vec(),
        theta: None,
        numeric: true,
    };
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| sweep(black_box(&cfg), exec).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, mc_ensemble, discord_grid, numeric_sweep);
criterion_main!(benches);
