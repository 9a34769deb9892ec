//! Acceptance gate: one test per release criterion, each printing a
//! single verdict line (visible with `--nocapture`).
//!
//! Where independent analysis corrected a transcribed expectation, the
//! test asserts the verified behavior and says so in a comment next to
//! the assertion — nothing here is loosened silently.

mod common;

use std::time::Instant;

use beamsym::beam::BeamProfile;
use beamsym::classifier::generators::{lie_bracket, SymmetryFrame, SymmetryGenerator};
use beamsym::classifier::{classify, h_functions, residual_class1, ClassLabel};
use beamsym::equivalence::{build_transform, CanonicalForm, CanonicalMode};
use beamsym::expr::parse_expr;
use beamsym::gottlieb::{
    exponent_roots, g_from_solutions, make_gottlieb, schwarzian, schwarzian_target,
    solve_normal_ode, GottliebParams, Rational,
};
use beamsym::jet::Jet;
use beamsym::numeric::chebyshev_interior;
use beamsym::reduction::{reduce_stage1, reduce_stage2, reduce_stage3};
use beamsym::spectral::{assemble, solve_spectrum, uniform_frequencies, BoundaryCondition};
use common::{constraint_seed, constraint_trajectory, random_gottlieb};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn pass(n: usize, what: &str, detail: String) {
    println!("criterion {n:02} {what}: pass ({detail})");
}

#[test]
fn criterion_01_exemplar_classification() {
    let start = Instant::now();

    // (f, m, interval, label, satisfied H indices, violated H indices).
    // Indices into (H11, H12, H21, H22).  The exponential-rigidity beam
    // genuinely carries the scaling symmetry — the shift kappa = -4
    // annihilates H11 and H21 — so the generic class is witnessed by a
    // quadratic-density beam instead.
    let cases: [(&str, &str, (f64, f64), ClassLabel, &[usize], &[usize]); 5] = [
        ("1", "1", (0.0, 1.0), ClassLabel::A33PlusA1, &[0, 1, 2, 3], &[]),
        ("x", "x", (1.0, 2.0), ClassLabel::A1PlusA2, &[0, 2], &[1, 3]),
        ("1", "x^-4", (1.0, 2.0), ClassLabel::ThreeA1, &[1, 3], &[0, 2]),
        ("exp(x)", "1", (0.0, 1.0), ClassLabel::A1PlusA2, &[0, 2], &[1]),
        ("1", "1 + x^2", (0.0, 1.0), ClassLabel::TwoA1, &[], &[0, 1, 2, 3]),
    ];
    for (f, m, (a, b), label, satisfied, violated) in cases {
        let p = BeamProfile::new("exemplar", f, m, a, b).unwrap();
        let cls = classify(&p, 33, 1e-9).unwrap();
        assert_eq!(cls.label, label, "f = {f}, m = {m}");
        for &i in satisfied {
            assert!(
                cls.max_h[i] < 1e-9,
                "f = {f}, m = {m}: H index {i} = {:.3e} not satisfied",
                cls.max_h[i]
            );
        }
        for &i in violated {
            assert!(
                cls.max_h[i] > 1e-3,
                "f = {f}, m = {m}: H index {i} = {:.3e} not clearly violated",
                cls.max_h[i]
            );
        }
    }
    let dt = start.elapsed();
    assert!(dt.as_secs_f64() < 1.0, "classification took {dt:?}");
    pass(1, "exemplar classification", format!("5 beams in {dt:?}"));
}

#[test]
fn criterion_02_exponent_roots_exact() {
    let expected = [
        Rational::from(0),
        Rational::new(3, 2),
        Rational::new(5, 2),
        Rational::from(4),
    ];
    assert_eq!(exponent_roots(), expected);
    pass(2, "exponent roots exact", "{0, 3/2, 5/2, 4}".into());
}

#[test]
fn criterion_03_cross_identity_random_jets() {
    // H11 - g H12 + 20 (f/g') R1 = 0 must hold for arbitrary admissible
    // jets, not just profiles: 100 random draws.
    let mut rng = ChaCha8Rng::seed_from_u64(0xbea);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let mut fd = [0.0; 6];
        let mut gd = [0.0; 6];
        for k in 0..6 {
            fd[k] = rng.gen_range(-1.0..1.0);
            gd[k] = rng.gen_range(-1.0..1.0);
        }
        gd[0] = rng.gen_range(0.5..2.0); // g' bounded away from zero
        let fj = Jet::from_derivs(rng.gen_range(0.5..2.0), fd);
        let gj = Jet::from_derivs(rng.gen_range(-1.0..1.0), gd);

        let h = h_functions(&fj, &gj).unwrap();
        let (r1, _) = residual_class1(&fj, &gj).unwrap();
        let lhs = h.h11 - gj.value() * h.h12 + 20.0 * fj.value() / gj.deriv(1) * r1.defect;
        let scale = h.h11.abs()
            + (gj.value() * h.h12).abs()
            + (20.0 * fj.value() / gj.deriv(1) * r1.defect).abs();
        worst = worst.max(lhs.abs() / scale.max(1e-300));
    }
    assert!(worst < 1e-10, "worst relative error {worst:.3e}");
    pass(3, "cross-identity at 100 random jets", format!("worst {worst:.2e}"));
}

#[test]
fn criterion_04_gottlieb_profiles_inside_both_varieties() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x901713b);
    let mut worst_h: f64 = 0.0;
    let mut worst_r: f64 = 0.0;
    for exponent in exponent_roots() {
        for _ in 0..20 {
            let params = random_gottlieb(&mut rng, exponent);
            let beam = make_gottlieb(&params).unwrap();
            let cls = classify(&beam, 33, 1e-9).unwrap();
            assert_eq!(
                cls.label,
                ClassLabel::A33PlusA1,
                "m = {exponent}, mobius {:?}",
                params.mobius
            );
            for &h in &cls.max_h {
                worst_h = worst_h.max(h);
                assert!(h < 1e-9, "H residual {h:.3e} (m = {exponent})");
            }
            for &r in &cls.max_r {
                worst_r = worst_r.max(r);
                assert!(r < 1e-8, "constraint residual {r:.3e} (m = {exponent})");
            }
        }
    }
    pass(
        4,
        "80 random family members satisfy all determining functions",
        format!("worst H {worst_h:.2e}, worst constraint {worst_r:.2e}"),
    );
}

#[test]
fn criterion_05_commutator_table() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0111);
    let exponents = exponent_roots();
    let mut worst: f64 = 0.0;
    for i in 0..5 {
        let params = random_gottlieb(&mut rng, exponents[i % 4]);
        let beam = make_gottlieb(&params).unwrap();
        let frame = SymmetryFrame::new(&beam).unwrap();
        let f1 = frame.vector_field(SymmetryGenerator::X1);
        let f3 = frame.vector_field(SymmetryGenerator::X3);
        let f4 = frame.vector_field(SymmetryGenerator::X4);
        for _ in 0..20 {
            let t = rng.gen_range(0.1..2.0);
            let x = rng.gen_range(0.05..0.95);
            let u = rng.gen_range(-2.0..2.0);

            let c13 = lie_bracket(&f1, &f3, t, x, u).unwrap();
            let x1 = f1.components(t, x, u).unwrap();
            for k in 0..3 {
                let d = (c13[k] - 4.0 * x1[k]).abs();
                worst = worst.max(d);
                assert!(d < 1e-10, "[X1, X3] component {k} off by {d:.3e}");
            }

            let c34 = lie_bracket(&f3, &f4, t, x, u).unwrap();
            let x4 = f4.components(t, x, u).unwrap();
            for k in 0..3 {
                let d = (c34[k] + 2.0 * x4[k]).abs();
                worst = worst.max(d);
                assert!(d < 1e-10, "[X3, X4] component {k} off by {d:.3e}");
            }
        }
    }
    pass(
        5,
        "commutators [X1,X3] = 4X1 and [X3,X4] = -2X4",
        format!("5 profiles x 20 points, worst {worst:.2e}"),
    );
}

#[test]
fn criterion_06_pullback_residuals() {
    let start = Instant::now();

    // Two exact canonical solutions per representative.
    let modes_for = |form: CanonicalForm| -> [CanonicalMode; 2] {
        match form {
            CanonicalForm::UniformBeam => [
                CanonicalMode::bending_wave(1.25),
                CanonicalMode::bending_wave(0.7),
            ],
            CanonicalForm::WedgeBeam => [
                CanonicalMode::probe_for(CanonicalForm::WedgeBeam),
                CanonicalMode::wedge_series(1.0, [1.0, 0.5, 0.25]),
            ],
            CanonicalForm::InverseQuarticDensity => [
                CanonicalMode::power_mode(5.0).unwrap(),
                CanonicalMode::power_mode(3.5).unwrap(),
            ],
        }
    };

    // The three exemplars that genuinely lie on their representative's
    // orbit.  (The exponential-rigidity beam shares the scaling algebra
    // but is *not* point-equivalent to the wedge; see the final block.)
    let mut worst: f64 = 0.0;
    for (f, m, a, b) in [
        ("1", "1", 0.0, 1.0),
        ("x", "x", 1.0, 2.0),
        ("1", "x^-4", 1.0, 2.0),
    ] {
        let p = BeamProfile::new("exemplar", f, m, a, b).unwrap();
        let cls = classify(&p, 33, 1e-9).unwrap();
        let tr = build_transform(&p, &cls, None).unwrap();
        let (va, vb) = tr.valid_domain();
        let xs = chebyshev_interior(16, va + 0.02 * (vb - va), vb - 0.02 * (vb - va));
        for mode in modes_for(tr.canonical().form) {
            for ti in 0..16 {
                let t = 0.1 * ti as f64;
                for &x in &xs {
                    let (_, res) = tr.pullback_solution(&mode, t, x).unwrap();
                    worst = worst.max(res);
                    assert!(res < 1e-8, "f = {f}, m = {m}: residual {res:.3e} at ({t}, {x})");
                }
            }
        }
    }

    // Matching algebra is necessary, not sufficient: the exponential
    // beam's pullback does not solve the original equation, and the
    // residual says so loudly.
    let soft = BeamProfile::new("soft", "exp(x)", "1", 0.0, 1.0).unwrap();
    let cls = classify(&soft, 33, 1e-9).unwrap();
    assert_eq!(cls.label, ClassLabel::A1PlusA2);
    let tr = build_transform(&soft, &cls, None).unwrap();
    let orbit = tr.orbit_check().unwrap();
    assert!(
        !orbit.ok && orbit.max_residual > 1e-3,
        "expected an orbit obstruction, got {:.3e}",
        orbit.max_residual
    );

    let dt = start.elapsed();
    assert!(dt.as_secs_f64() < 5.0, "pullback sweep took {dt:?}");
    pass(
        6,
        "pullback solves the original equation on 16x16 grids",
        format!("worst on-orbit residual {worst:.2e}, obstruction {:.1e}, {dt:?}", tr.orbit_check().unwrap().max_residual),
    );
}

#[test]
fn criterion_07_isospectrality() {
    let start = Instant::now();
    let members = [
        GottliebParams {
            k: 1.0,
            a: 1.0,
            b: 1.0,
            exponent: Rational::new(3, 2),
            mobius: [0.0, 1.0, 1.0, 0.0],
            interval: (0.0, 1.0),
        },
        GottliebParams {
            k: 1.0,
            a: 1.0,
            b: 1.0,
            exponent: Rational::from(4),
            mobius: [1.0, 2.0, 3.0, 1.0],
            interval: (0.0, 1.0),
        },
    ];
    let mut worst_dev: f64 = 0.0;
    for params in members {
        let beam = make_gottlieb(&params).unwrap();
        let reference = uniform_frequencies(3, beam.g().unwrap().total());

        let mut errs = Vec::new();
        for n in [500usize, 1000, 2000] {
            let s = solve_spectrum(
                &assemble(&beam, n, BoundaryCondition::ClampedClamped).unwrap(),
                3,
            )
            .unwrap();
            let e: Vec<f64> = (0..3).map(|k| (s.omegas[k] - reference[k]).abs()).collect();
            if n == 2000 {
                for k in 0..3 {
                    let dev = e[k] / reference[k];
                    worst_dev = worst_dev.max(dev);
                    assert!(
                        dev < 5e-3,
                        "m = {}: mode {} deviation {dev:.3e}",
                        params.exponent,
                        k + 1
                    );
                }
            }
            errs.push(e);
        }
        for w in errs.windows(2) {
            for k in 0..3 {
                let order = (w[0][k] / w[1][k]).log2();
                assert!(
                    (1.7..=2.3).contains(&order),
                    "m = {}: mode {} observed order {order:.3}",
                    params.exponent,
                    k + 1
                );
            }
        }
    }
    let dt = start.elapsed();
    assert!(dt.as_secs_f64() < 60.0, "iso-spectrality took {dt:?}");
    pass(
        7,
        "family members iso-spectral with uniform partners",
        format!("worst deviation {worst_dev:.2e} at N = 2000, {dt:?}"),
    );
}

#[test]
fn criterion_08_schwarzian_route() {
    // g from the normal-form ODE for f = (1+x)^(3/2) ...
    let f = parse_expr("(1+x)^(3/2)").unwrap();
    let ode = solve_normal_ode(&f, (0.0, 1.0), [[1.0, 0.3], [0.0, 1.0]]).unwrap();
    let g = g_from_solutions(&ode).unwrap();
    assert!(g.xs.len() >= 33);

    // ... carries the Schwarzian the maximal class demands ...
    let params = GottliebParams {
        k: 1.0,
        a: 1.0,
        b: 1.0,
        exponent: Rational::new(3, 2),
        mobius: [0.0, 1.0, 1.0, 0.0],
        interval: (0.0, 1.0),
    };
    let closed = params.g_expr();
    let mut worst_target: f64 = 0.0;
    let mut worst_closed: f64 = 0.0;
    for i in 0..g.xs.len() {
        let x = g.xs[i];
        let s_ode = schwarzian(&g.jet(i)).unwrap();
        let fj = beamsym::expr::eval_jet(&f, x).unwrap();
        worst_target = worst_target.max((s_ode - schwarzian_target(&fj)).abs());

        // ... and agrees with the closed form up to Möbius freedom,
        // i.e. the Schwarzians are equal.
        let gj = beamsym::expr::eval_jet(&closed, x).unwrap();
        let s_closed = schwarzian(&gj).unwrap();
        worst_closed = worst_closed.max((s_ode - s_closed).abs());
    }
    assert!(worst_target < 1e-8, "ODE route misses the target: {worst_target:.3e}");
    assert!(worst_closed < 1e-8, "routes disagree: {worst_closed:.3e}");
    pass(
        8,
        "ODE and closed-form routes to g share the Schwarzian",
        format!(
            "{} nodes, target gap {worst_target:.2e}, route gap {worst_closed:.2e}",
            g.xs.len()
        ),
    );
}

#[test]
fn criterion_09_reduction_chain() {
    // Derived right-hand sides hold along both admissible power laws.
    for f_src in ["(1+x)^(3/2)", "(1+x)^4"] {
        let f = parse_expr(f_src).unwrap();
        let st = reduce_stage3(reduce_stage2(reduce_stage1(&f, (1.0, 2.0), 17).unwrap()).unwrap())
            .unwrap();
        assert!(st.residuals[0] < 1e-8, "{f_src}: stage-1 residual {:.3e}", st.residuals[0]);
        assert!(st.residuals[1] < 1e-8, "{f_src}: stage-2 residual {:.3e}", st.residuals[1]);
        // The transcribed variants really are different equations; the
        // comparison is part of the exported report.
        assert!(st.printed_gap[0] > 1e-3);
        assert!(st.printed_gap[1] > 1e-3);
        assert!(st.equilibrium.is_some(), "{f_src} should sit at a fixed point");
    }

    // Well-definedness of the final relation: two distinct trajectories
    // through the same (u, v) = (0.5, 0.3) must agree on dv/du there.
    let xs: Vec<f64> = (0..9).map(|i| 0.002 * i as f64).collect();
    let mut slopes = Vec::new();
    for (t0, y0) in [(2.0, 3.0), (1.3, 0.7)] {
        let z0 = 0.5 / t0;
        let zd0 = (0.3 - 0.5) / (t0 * t0);
        let rows = constraint_trajectory(constraint_seed(t0, y0, z0, zd0), &xs);
        let st = reduce_stage3(
            reduce_stage2(beamsym::reduction::reduce_stage1_from_jets(&rows).unwrap()).unwrap(),
        )
        .unwrap();
        assert!(st.equilibrium.is_none());
        let first = st.stage3[0];
        assert!((first[0] - 0.5).abs() < 1e-9 && (first[1] - 0.3).abs() < 1e-9);
        slopes.push(first[2]);
    }
    let gap = (slopes[0] - slopes[1]).abs();
    assert!(gap < 1e-8, "dv/du disagrees: {} vs {}", slopes[0], slopes[1]);
    // Independent value: F(1/2, 3/10) = 4 - 7/2 - (1/2)/3 = 5/12.
    assert!((slopes[0] - 5.0 / 12.0).abs() < 1e-10);
    pass(
        9,
        "reduction chain sound and the final relation well-defined",
        format!("dv/du gap {gap:.2e} at (u, v) = (0.5, 0.3)"),
    );
}

#[test]
fn criterion_10_cli_determinism() {
    use std::process::Command;

    let dir = std::env::temp_dir().join(format!("beamsym-acc-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let beam_path = dir.join("member.beam");

    let bin = env!("CARGO_BIN_EXE_beamsym");
    let gen = Command::new(bin)
        .args([
            "gottlieb",
            "--exponent",
            "3/2",
            "--A",
            "1",
            "--B",
            "1",
            "--K",
            "1",
            "--mobius",
            "0,1,1,0",
            "--interval",
            "0",
            "1",
            "--out",
        ])
        .arg(&beam_path)
        .output()
        .unwrap();
    assert!(gen.status.success());

    let beam = beam_path.to_str().unwrap();
    let commands: Vec<Vec<&str>> = vec![
        vec!["classify", "--beam", beam],
        vec!["canonicalize", "--beam", beam],
        vec![
            "gottlieb", "--exponent", "4", "--mobius", "1,2,3,1", "--interval", "0", "1",
        ],
        vec!["spectrum", "--beam", beam, "--grid", "400", "--modes", "2"],
        vec!["isospectral-check", "--beam", beam, "--grid", "400"],
        vec!["reduce", "--f", "(1+x)^4", "--interval", "1", "2", "--samples", "9"],
    ];
    for args in &commands {
        let run = || {
            let out = Command::new(bin).args(args).output().unwrap();
            assert!(
                out.status.success(),
                "{args:?} failed: {}",
                String::from_utf8_lossy(&out.stderr)
            );
            out.stdout
        };
        let first = run();
        let second = run();
        assert_eq!(first, second, "{args:?} not byte-identical");
        assert!(!first.is_empty());
    }
    std::fs::remove_dir_all(&dir).ok();
    pass(10, "every subcommand reports byte-identically", format!("{} commands", commands.len()));
}
