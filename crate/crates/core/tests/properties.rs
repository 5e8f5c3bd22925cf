use logmaj::inequalities::{InequalityReport, Tolerance};
use logmaj::linalg::{self, ComplexMatrix, C64, JACOBI_TOL};
use logmaj::spectral::{self, DyadicGrid};
use logmaj::stepfn::{make_step, rearrange, IntervalSet, StepFunction};
use logmaj::submaj::{self, Evaluation};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn step_strategy(min_value: f64) -> impl Strategy<Value = StepFunction> {
    (1usize..6).prop_flat_map(move |m| {
        (
            prop::collection::vec(0.01f64..1.0, m),
            prop::collection::vec(min_value..10.0, m),
        )
            .prop_map(|(widths, mut vals)| {
                let total: f64 = widths.iter().sum();
                let mut breaks = vec![0.0];
                let mut acc = 0.0;
                for w in &widths[..widths.len() - 1] {
                    acc += w / total;
                    breaks.push(acc);
                }
                breaks.push(1.0);
                vals.sort_by(|a, b| b.partial_cmp(a).unwrap());
                make_step(&breaks, &vals).unwrap()
            })
    })
}

fn interval_strategy() -> impl Strategy<Value = IntervalSet> {
    prop::collection::vec(0.0f64..1.0, 2..8).prop_map(|mut pts| {
        pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let pairs = pts
            .chunks(2)
            .filter(|c| c.len() == 2 && c[0] < c[1])
            .map(|c| (c[0], c[1]))
            .collect();
        IntervalSet::new(pairs).unwrap()
    })
}

fn gaussian(seed: u64, n: usize) -> ComplexMatrix {
    linalg::complex_gaussian(&mut ChaCha8Rng::seed_from_u64(seed), n)
}

fn positive(seed: u64, n: usize) -> ComplexMatrix {
    let g = gaussian(seed, n);
    g.adjoint().matmul(&g).re_part()
}

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(1e-300)
}

/// Relative tolerance for a quantity whose smallest singular value is only
/// known to about `ε·κ`.
fn cond_tol(kappa: f64) -> f64 {
    (1e-9f64).max(100.0 * f64::EPSILON * kappa)
}

fn dims() -> impl Strategy<Value = usize> {
    prop::sample::select(vec![1usize, 2, 3, 4, 8])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn left_and_right_agree_off_breakpoints(f in step_strategy(0.0), t in 0.001f64..0.999) {
        prop_assume!(f.breakpoints().iter().all(|b| (b - t).abs() > 1e-9));
        prop_assert_eq!(f.eval_left(t).unwrap(), f.eval_right(t).unwrap());
    }

    #[test]
    fn reflect_neg_twice_is_identity(f in step_strategy(0.0)) {
        let c = f.sup();
        let back = f.reflect_neg().unwrap().shift(c).reflect_neg().unwrap().shift(c);
        prop_assert!(f.max_discrepancy(&back).abs() <= 1e-12);
    }

    #[test]
    fn invert_flip_twice_is_identity(f in step_strategy(0.1)) {
        let back = f.invert_flip().unwrap().invert_flip().unwrap();
        prop_assert!(f.max_discrepancy(&back).abs() <= 1e-12);
    }

    #[test]
    fn log_integral_is_additive(f in step_strategy(0.1), k in interval_strategy()) {
        let whole = f.integrate_log(&IntervalSet::unit()).to_f64();
        let parts = f.integrate_log(&k).to_f64() + f.integrate_log(&k.complement()).to_f64();
        prop_assert!((whole - parts).abs() <= 1e-12 * (1.0 + whole.abs()));
    }

    #[test]
    fn log_integral_scales(f in step_strategy(0.1), k in interval_strategy(), alpha in 0.01f64..100.0) {
        let lhs = f.scale(alpha).unwrap().integrate_log(&k).to_f64();
        let rhs = k.measure() * alpha.ln() + f.integrate_log(&k).to_f64();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + rhs.abs()));
    }

    #[test]
    fn rearrange_preserves_distribution(
        raw in prop::collection::vec((0.0f64..5.0, 0.01f64..1.0), 1..8),
        s in 0.0f64..5.0,
    ) {
        let total: f64 = raw.iter().map(|p| p.1).sum();
        let pieces: Vec<(f64, f64)> = raw.iter().map(|&(v, m)| (v, m / total)).collect();
        prop_assume!((pieces.iter().map(|p| p.1).sum::<f64>() - 1.0).abs() <= 1e-12);
        let f = rearrange(&pieces).unwrap();
        prop_assert!(f.values().windows(2).all(|w| w[0] > w[1]));
        let expected: f64 = pieces.iter().filter(|p| p.0 > s).map(|p| p.1).sum();
        let got: f64 = f.pieces().filter(|p| p.value > s).map(|p| p.len()).sum();
        prop_assert!((expected - got).abs() <= 1e-12);
    }

    #[test]
    fn mu_of_adjoint_and_modulus(seed in any::<u64>(), n in dims()) {
        let x = gaussian(seed, n);
        let a = spectral::mu(&x).unwrap();
        prop_assert!(a.max_discrepancy(&spectral::mu(&x.adjoint()).unwrap()).abs() <= 1e-12);
        prop_assert!(a.max_discrepancy(&spectral::mu(&linalg::abs(&x).unwrap()).unwrap()).abs() <= 1e-12);
        let eig = linalg::herm_eig(&linalg::abs(&x).unwrap(), JACOBI_TOL).unwrap();
        let sigma = linalg::svd(&x, JACOBI_TOL).unwrap().sigma;
        for (e, s) in eig.eigenvalues.iter().zip(&sigma) {
            prop_assert!((e - s).abs() <= 1e-12 * (1.0 + s));
        }
    }

    #[test]
    fn singular_values_on_grid(seed in any::<u64>(), n in dims()) {
        let x = gaussian(seed, n);
        let y = gaussian(seed ^ 0x5555, n);
        let (mx, my) = (spectral::mu(&x).unwrap(), spectral::mu(&y).unwrap());
        let prod = spectral::mu(&x.matmul(&y)).unwrap();
        let sum = spectral::mu(&(&x + &y)).unwrap();
        let hx = x.re_part();
        let hy = y.re_part();
        let (lx, ly) = (spectral::lambda_scale(&hx).unwrap(), spectral::lambda_scale(&hy).unwrap());
        let lsum = spectral::lambda_scale(&(&hx + &hy)).unwrap();
        let den = (2 * n) as f64;
        for a in 0..2 * n {
            for b in 0..(2 * n - a) {
                let (t, s) = (a as f64 / den, b as f64 / den);
                let ts = (a + b) as f64 / den;
                let at = |f: &StepFunction, u: f64| f.eval_right(u).unwrap();
                prop_assert!(at(&prod, ts) <= at(&mx, t) * at(&my, s) * (1.0 + 1e-12) + 1e-12);
                prop_assert!(at(&sum, ts) <= at(&mx, t) + at(&my, s) + 1e-12);
                prop_assert!(at(&lsum, ts) <= at(&lx, t) + at(&ly, s) + 1e-12);
            }
        }
    }

    #[test]
    fn monotone_under_loewner_order(seed in any::<u64>(), n in dims()) {
        let x = positive(seed, n);
        let y = &x + &positive(seed.wrapping_add(1), n);
        let (mx, my) = (spectral::mu(&x).unwrap(), spectral::mu(&y).unwrap());
        for j in 0..n {
            let t = (2 * j + 1) as f64 / (2 * n) as f64;
            prop_assert!(mx.eval_right(t).unwrap() <= my.eval_right(t).unwrap() * (1.0 + 1e-12));
        }
        prop_assert!(spectral::fk_det(&x).unwrap() <= spectral::fk_det(&y).unwrap() * (1.0 + 1e-12));
    }

    #[test]
    fn fk_det_properties(seed in any::<u64>(), n in dims()) {
        let x = gaussian(seed, n);
        let y = gaussian(seed ^ 0xABCD, n);
        let (dx, dy) = (spectral::fk_det(&x).unwrap(), spectral::fk_det(&y).unwrap());
        let (kx, ky) = (linalg::condition_number(&x).unwrap(), linalg::condition_number(&y).unwrap());
        prop_assert!(close(spectral::fk_det(&x.matmul(&y)).unwrap(), dx * dy, cond_tol(kx * ky)));
        let inv = linalg::inverse(&x).unwrap();
        prop_assert!(close(spectral::fk_det(&inv).unwrap(), 1.0 / dx, cond_tol(kx)));
        for alpha in [0.5, 2.0, 3.0] {
            let p = linalg::abs_pow(&x, alpha).unwrap();
            prop_assert!(close(spectral::fk_det(&p).unwrap(), dx.powf(alpha), cond_tol(kx.powf(alpha))));
        }
    }

    #[test]
    fn fk_det_perturbation_decreases_to_limit(seed in any::<u64>(), n in dims()) {
        let p = positive(seed, n);
        let base = spectral::fk_det(&p).unwrap();
        let mut prev = f64::INFINITY;
        for eps in [1.0, 0.1, 1e-2, 1e-4, 1e-8] {
            let d = spectral::fk_det(&p.add_identity(C64::new(eps, 0.0))).unwrap();
            prop_assert!(d <= prev * (1.0 + 1e-12));
            prop_assert!(d >= base * (1.0 - 1e-12));
            prev = d;
        }
        // Δ(p + εI) ≤ Δ(p)(1 + ε/λ_min)
        let low = linalg::svd(&p, JACOBI_TOL).unwrap().sigma_min();
        prop_assert!(prev <= base * (1.0 + 1e-8 / low) * (1.0 + 1e-12));
    }

    #[test]
    fn eigenvalues_shift(seed in any::<u64>(), n in dims(), a in -5.0f64..5.0) {
        let h = gaussian(seed, n).re_part();
        let e = linalg::herm_eig(&h, JACOBI_TOL).unwrap().eigenvalues;
        let s = linalg::herm_eig(&h.add_identity(C64::new(a, 0.0)), JACOBI_TOL).unwrap().eigenvalues;
        for (u, v) in e.iter().zip(&s) {
            prop_assert!((u + a - v).abs() <= 1e-12 * (1.0 + u.abs() + a.abs()));
        }
    }

    #[test]
    fn inverse_residual_scales_with_condition(seed in any::<u64>(), n in dims()) {
        let x = gaussian(seed, n);
        let inv = linalg::inverse(&x).unwrap();
        let cond = linalg::condition_number(&x).unwrap();
        let id = ComplexMatrix::identity(n);
        prop_assert!((&inv.matmul(&x) - &id).frobenius_norm() <= 1e-9 * cond);
        prop_assert!((&x.matmul(&inv) - &id).frobenius_norm() <= 1e-9 * cond);
    }

    #[test]
    fn breakpoint_evaluation_matches_dense_grid(f in step_strategy(0.1), g in step_strategy(0.1)) {
        let exact = submaj::log_submaj_fn(&f, &g, 0.0, Evaluation::Breakpoints);
        let dense = submaj::log_submaj_fn(&f, &g, 0.0, Evaluation::DenseGrid { step: 1e-3 });
        // slack is linear between breakpoints and vanishes at t = 0
        prop_assert!(dense.slack >= exact.slack.min(0.0) - 1e-12);
        if exact.slack.abs() > 1e-2 {
            prop_assert_eq!(exact.holds, dense.holds);
        }
    }

    #[test]
    fn relations_are_reflexive_and_transitive(f in step_strategy(0.1), a in 0.0f64..2.0, b in 0.0f64..2.0) {
        let g = f.shift(a);
        let h = g.shift(b);
        for (p, q) in [(&f, &f), (&f, &g), (&g, &h), (&f, &h)] {
            prop_assert!(submaj::log_submaj_fn(p, q, 0.0, Evaluation::Breakpoints).holds);
            prop_assert!(submaj::p_submaj_fn(p, q, 0.5, 0.0, Evaluation::Breakpoints).holds);
        }
    }

    #[test]
    fn enlarging_tolerance_never_fails_a_pass(lhs in -10.0f64..10.0, rhs in -10.0f64..10.0, a in 0.0f64..1.0, r in 0.0f64..1.0) {
        let tight = Tolerance::new(a, r);
        let loose = Tolerance::new(2.0 * a + 1e-3, 2.0 * r);
        let p = InequalityReport::inequality("t", "x", lhs, rhs, &tight, serde_json::json!({}));
        let q = InequalityReport::inequality("t", "x", lhs, rhs, &loose, serde_json::json!({}));
        prop_assert!(!p.pass || q.pass);
    }

    #[test]
    fn dyadic_grids_bracket_the_matrix(seed in any::<u64>(), n in dims(), k in 0u32..12) {
        let x = positive(seed, n).add_identity(C64::new(0.05, 0.0));
        let up = spectral::dyadic_approx(&x, k, DyadicGrid::Upper).unwrap();
        let low = spectral::dyadic_approx(&x, k, DyadicGrid::Lower).unwrap();
        let gap_up = linalg::herm_eig(&(&up - &x).re_part(), JACOBI_TOL).unwrap().eigenvalues;
        let gap_low = linalg::herm_eig(&(&x - &low).re_part(), JACOBI_TOL).unwrap().eigenvalues;
        let scale = 1e-12 * linalg::op_norm(&x);
        prop_assert!(*gap_up.last().unwrap() >= -scale);
        prop_assert!(*gap_low.last().unwrap() >= -scale);
    }
}
