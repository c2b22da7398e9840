use std::f64::consts::PI;

use proptest::prelude::*;

use tricorr::basis::Qubit;
use tricorr::channel::{lift_three_qubit, ChannelParams};
use tricorr::closed_form::{evolved_state, ThetaBc};
use tricorr::linalg::{
    hermitian_eigen, hermitian_eigenvalues, kron, partial_trace, sqrt_psd, ComplexMatrix, C64,
};
use tricorr::mc::{ensemble_density, PhaseMode, TrajectoryConfig};
use tricorr::measures::{
    bell_expectation, discord_general, discord_x, operator, optimize_bell_angles, BellAngles, BellKind, DiscordGrid,
    MeasurementProjector, XStateParams,
};
use tricorr::{make_state, Execution, Family, NoiseParams, PurityMix};

fn hermitian(dim: usize) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec(-1.0f64..1.0, 2 * dim * dim).prop_map(move |v| {
        let mut m = ComplexMatrix::zeros(dim).unwrap();
        for k in 0..dim * dim {
            m[(k / dim, k % dim)] = C64::new(v[2 * k], v[2 * k + 1]);
        }
        (m + m.adjoint()).scale_real(0.5)
    })
}

fn density(dim: usize) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec(-1.0f64..1.0, 2 * dim * dim).prop_map(move |v| {
        let mut g = ComplexMatrix::zeros(dim).unwrap();
        for k in 0..dim * dim {
            g[(k / dim, k % dim)] = C64::new(v[2 * k], v[2 * k + 1]);
        }
        let rho = &g * &g.adjoint();
        let tr = rho.trace().re;
        rho.scale_real(1.0 / tr)
    })
}

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![Just(Family::Ghz), Just(Family::W)]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn eigendecomposition_reconstructs(m in hermitian(8)) {
        let eig = hermitian_eigen(&m).unwrap();
        let v = eig.vectors;
        let d = ComplexMatrix::from_real_diagonal(eig.spectrum.values()).unwrap();
        let back = &(&v * &d) * &v.adjoint();
        prop_assert!(back.max_abs_diff(&m) < 1e-12);
        let id = ComplexMatrix::identity(8).unwrap();
        prop_assert!((&v.adjoint() * &v).max_abs_diff(&id) < 1e-12);
        let vals = eig.spectrum.values();
        prop_assert!(vals.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn density_spectrum_sums_to_one(rho in density(8)) {
        let spec = hermitian_eigenvalues(&rho).unwrap();
        prop_assert!((spec.sum() - 1.0).abs() < 1e-10);
        prop_assert!(spec.min() > -1e-10);
    }

    #[test]
    fn sqrt_squares_back(rho in density(4)) {
        let s = sqrt_psd(&rho).unwrap();
        prop_assert!((&s * &s).max_abs_diff(&rho) < 1e-10);
    }

    #[test]
    fn partial_traces_compose(rho in density(8)) {
        let ab = partial_trace(&rho, &[Qubit::A, Qubit::B]).unwrap();
        let a_direct = partial_trace(&rho, &[Qubit::A]).unwrap();
        let a_nested = partial_trace(&ab, &[Qubit::A]).unwrap();
        prop_assert!(a_direct.max_abs_diff(&a_nested) < 1e-15);
        prop_assert!((ab.trace().re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn partial_trace_of_product(a in density(2), bc in density(4)) {
        let rho = kron(&a, &bc).unwrap();
        prop_assert!(partial_trace(&rho, &[Qubit::A]).unwrap().max_abs_diff(&a) < 1e-14);
        prop_assert!(partial_trace(&rho, &[Qubit::B, Qubit::C]).unwrap().max_abs_diff(&bc) < 1e-14);
    }

    #[test]
    fn identity_channel_is_exact(rho in density(8)) {
        let id = ChannelParams::IDENTITY;
        prop_assert_eq!(lift_three_qubit(&rho, &id, &id, &id).unwrap(), rho);
    }

    #[test]
    fn ghz_family_has_two_eigenvalues(r in 0.0f64..=1.0) {
        let rho = make_state(&PurityMix::new(Family::Ghz, r).unwrap());
        let spec = hermitian_eigenvalues(&rho).unwrap();
        let lo = (1.0 - r) / 8.0;
        prop_assert!((spec.values()[0] - lo - r).abs() < 1e-14);
        prop_assert!(spec.values()[1..].iter().all(|&l| (l - lo).abs() < 1e-14));
    }

    #[test]
    fn measurement_projectors_complete(theta in 0.0f64..PI, phi in 0.0f64..(2.0 * PI)) {
        let [p1, p2] = MeasurementProjector { theta, phi }.projectors();
        prop_assert!((p1 + p2).max_abs_diff(&ComplexMatrix::identity(2).unwrap()) < 1e-14);
        prop_assert!((&p1 * &p2).frobenius_norm() < 1e-14);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn discord_is_nonnegative(rho in density(4)) {
        let grid = DiscordGrid { execution: Execution::Sequential, ..DiscordGrid::default() };
        prop_assert!(discord_general(&rho, &grid).unwrap().value >= 0.0);
    }

    #[test]
    fn grid_discord_matches_x_form(
        p in prop::array::uniform3(0.0f64..1.0),
        s in 0.0f64..1.0,
        angle in 0.0f64..(2.0 * PI),
    ) {
        prop_assume!(p.iter().sum::<f64>() > 1e-2);
        let tot = p[0] + 2.0 * p[1] + p[2];
        let (a, b, d) = (p[0] / tot, p[1] / tot, p[2] / tot);
        let x = XStateParams {
            a, b, c: b, d,
            z: C64::from_polar(s * b, angle),
            w: C64::new(0.0, 0.0),
        };
        let grid = DiscordGrid { execution: Execution::Sequential, ..DiscordGrid::default() };
        let g = discord_general(&x.to_matrix(), &grid).unwrap().value;
        let c = discord_x(&x).unwrap().value;
        prop_assert!((g - c).abs() < 2e-4, "grid {} closed {}", g, c);
    }

    #[test]
    fn bell_optimum_beats_grid(f in family(), r in 0.0f64..=1.0, ratio in 0.01f64..100.0, t in 0.0f64..3.0) {
        let rho = evolved_state(f, &NoiseParams::from_ratio(ratio).unwrap(), r, t).unwrap();
        for kind in [BellKind::Mabk, BellKind::Svetlichny] {
            let best = optimize_bell_angles(kind, f.into(), &rho).unwrap();
            let v = bell_expectation(&rho, &operator(kind, &best)).unwrap();
            let grid_max = (0..720)
                .map(|k| {
                    let a = BellAngles::from_sum(f.into(), k as f64 * PI / 360.0);
                    bell_expectation(&rho, &operator(kind, &a)).unwrap()
                })
                .fold(0.0, f64::max);
            prop_assert!(v >= grid_max - 1e-12);
            if r > 0.05 {
                let canonical = ThetaBc::canonical(f).get(kind);
                prop_assert!((best.theta_bc() - canonical).abs() < 1e-6);
            }
        }
    }

    #[test]
    fn ensemble_is_reproducible(seed in any::<u64>(), f in family(), t in 0.0f64..2.0) {
        let rho0 = make_state(&PurityMix::new(f, 1.0).unwrap());
        let noise = NoiseParams::new(1.0, 3.0).unwrap();
        let cfg = TrajectoryConfig::new(300, 0.01, seed, PhaseMode::OuPath);
        let a = ensemble_density(&rho0, &noise, t, &cfg).unwrap();
        let b = ensemble_density(&rho0, &noise, t, &cfg.with_execution(Execution::Sequential)).unwrap();
        prop_assert_eq!(a, b);
        prop_assert!((a.trace().re - 1.0).abs() < 1e-12);
        prop_assert!(a.is_hermitian(1e-15));
    }
}
