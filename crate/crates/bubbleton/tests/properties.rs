//! Property suites: structural invariants of the algebra, frame, dressing
//! and geometry layers.

use bubbleton::*;
use num_complex::Complex64;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn random_unit(rng: &mut StdRng) -> Complex64 {
    let t: f64 = rng.random_range(-std::f64::consts::PI..std::f64::consts::PI);
    c(t.cos(), t.sin())
}

fn random_su2(rng: &mut StdRng) -> Mat2<Complex64> {
    // Uniform-ish unit quaternion mapped to SU(2).
    let v: [f64; 4] = std::array::from_fn(|_| rng.random_range(-1.0..1.0));
    let n = (v.iter().map(|x| x * x).sum::<f64>()).sqrt().max(1e-9);
    let q: Vec<f64> = v.iter().map(|x| x / n).collect();
    Mat2::new(
        c(q[0], q[1]),
        c(q[2], q[3]),
        c(-q[2], q[3]),
        c(q[0], -q[1]),
    )
}

// ---------------------------------------------------------------------------
// algebra
// ---------------------------------------------------------------------------

proptest! {
    /// Jet derivative of rational-sqrt expressions matches a central finite
    /// difference to 1e-6 relative.
    #[test]
    fn jet_chain_rule_matches_finite_differences(
        lre in 0.4f64..1.6,
        lim in -0.8f64..0.8,
        are in 0.3f64..1.5,
        aim in -0.5f64..0.5,
        bre in 0.3f64..1.5,
        cre in 0.4f64..1.6,
        dim in -0.5f64..0.5,
    ) {
        let a = c(are, aim);
        let b = c(bre, 0.3);
        let d = c(cre, dim);
        let expr = |lam: ComplexJet| -> ComplexJet {
            let ac = ComplexJet::constant(a);
            let bc = ComplexJet::constant(b);
            let dc = ComplexJet::constant(d);
            // sqrt((a + bλ)/(d + λ)) · λ + 1/(a + λ²)
            let w = (ac + bc * lam) * (dc + lam).inv();
            w.sqrt() * lam + (ac + lam * lam).inv()
        };
        let lam0 = c(lre, lim);
        // Keep the sqrt argument away from the branch cut and the poles in
        // range, so the finite difference is comparable.
        let w0 = (a + b * lam0) / (d + lam0);
        prop_assume!(w0.norm() > 1e-2 && w0.arg().abs() < 2.5);
        prop_assume!((d + lam0).norm() > 0.2);
        prop_assume!((a + lam0 * lam0).norm() > 0.2);

        let jet = expr(ComplexJet::variable(lam0));
        let h = 1e-6;
        let plus = expr(ComplexJet::constant(lam0 + c(h, 0.0))).val;
        let minus = expr(ComplexJet::constant(lam0 - c(h, 0.0))).val;
        let fd = (plus - minus) / (2.0 * h);
        prop_assume!(jet.der.norm() > 1e-3 * (1.0 + jet.val.norm()));
        let rel = (jet.der - fd).norm() / jet.der.norm();
        prop_assert!(rel < 1e-6, "rel = {rel:.3e}");
    }

    /// Hermitian projections are idempotent and complementary.
    #[test]
    fn projection_idempotent_and_complementary(
        are in -2.0f64..2.0,
        aim in -2.0f64..2.0,
        bre in -2.0f64..2.0,
        bim in -2.0f64..2.0,
    ) {
        prop_assume!(are.abs() + aim.abs() + bre.abs() + bim.abs() > 1e-3);
        let line = LineCP1::from_ratio(c(are, aim), c(bre, bim)).unwrap();
        let p = hermitian_projection(&line);
        prop_assert!(p.mul(&p).dist(&p) < 1e-12);
        prop_assert!(p.dist(&p.conj_transpose()) < 1e-12);
        prop_assert!((p.trace() - c(1.0, 0.0)).norm() < 1e-12);
        let comp = Mat2::identity().sub(&p);
        prop_assert!(p.add(&comp).dist(&Mat2::identity()) < 1e-15);
        prop_assert!(p.mul(&comp).norm() < 1e-12);
    }

    /// Gram-Schmidt returns a unitary factor and reproduces the input.
    #[test]
    fn qr_factors_random_unit_determinant_matrices(
        are in -2.0f64..2.0,
        aim in -2.0f64..2.0,
        bre in -2.0f64..2.0,
        bim in -2.0f64..2.0,
        cre in -2.0f64..2.0,
        cim in -2.0f64..2.0,
        dre in -2.0f64..2.0,
        dim in -2.0f64..2.0,
    ) {
        let m = Mat2::new(c(are, aim), c(bre, bim), c(cre, cim), c(dre, dim));
        prop_assume!(m.det().norm() > 0.05);
        let m = m.scale(principal_sqrt(m.det()).unwrap().inv());
        let (q, r) = gram_schmidt_qr(&m).unwrap();
        prop_assert!(q.unitarity_defect() < 1e-12);
        prop_assert!((q.det() - c(1.0, 0.0)).norm() < 1e-12);
        prop_assert!(q.mul(&r).dist(&m) < 1e-12);
        prop_assert!(r.c.norm() < 1e-15);
        prop_assert!(r.a.im.abs() < 1e-15 && r.a.re > 0.0);
        prop_assert!(r.d.im.abs() < 1e-15 && r.d.re > 0.0);
    }

    /// Spinor identification round-trips exactly.
    #[test]
    fn spinor_round_trip(
        x1 in -10.0f64..10.0,
        x2 in -10.0f64..10.0,
        x3 in -10.0f64..10.0,
    ) {
        let v = Vec3::new(x1, x2, x3);
        let m = r3_to_spinor(v);
        prop_assert!(m.add(&m.conj_transpose()).norm() < 1e-14);
        prop_assert!(m.trace().norm() < 1e-14);
        let back = spinor_to_r3(&m).unwrap();
        prop_assert!(back.dist(&v) < 1e-14);
    }
}

/// The Gram-Schmidt unitary of the transformed simple-factor matrix at
/// λ = 0 along y = 0 has the closed form
/// `[[2√α, i(α−1)s], [i(α−1)s, 2√α]] / √((α−1)²s² + 4α)` with
/// s = sin(2Kπx).
#[test]
fn normalizing_unitary_closed_form() {
    let k = 2u32;
    let x = 0.125;
    let alpha = alpha_for_lobes(k).unwrap();
    let line_t = dressed_line(c(x, 0.0), alpha, &LineCP1::e1()).unwrap();
    let psi0: Mat2<Complex64> = psi(&line_t, c(alpha, 0.0), c(0.0, 0.0)).unwrap();
    let m0 = psi0.scale(c(1.0 / alpha.sqrt(), 0.0));
    let (q, r) = gram_schmidt_qr(&m0).unwrap();

    let s = (2.0 * k as f64 * std::f64::consts::PI * x).sin();
    let den = ((alpha - 1.0) * (alpha - 1.0) * s * s + 4.0 * alpha).sqrt();
    let expect = Mat2::new(
        c(2.0 * alpha.sqrt() / den, 0.0),
        c(0.0, (alpha - 1.0) * s / den),
        c(0.0, (alpha - 1.0) * s / den),
        c(2.0 * alpha.sqrt() / den, 0.0),
    );
    assert!(q.dist(&expect) < 1e-12, "{q:?}");
    assert!(q.mul(&r).dist(&m0) < 1e-13);
}

// ---------------------------------------------------------------------------
// cylinder
// ---------------------------------------------------------------------------

#[test]
fn frame_unitary_on_circle() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..50 {
        let z = c(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0));
        let lam = random_unit(&mut rng);
        let f: Mat2<Complex64> = frame(z, lam).unwrap();
        assert!(f.unitarity_defect() <= 1e-12, "z={z} λ={lam}");
        assert!((f.det() - c(1.0, 0.0)).norm() <= 1e-12);
    }
}

#[test]
fn frame_unimodular_off_circle() {
    let mut rng = StdRng::seed_from_u64(8);
    for _ in 0..50 {
        let z = c(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0));
        let lam = c(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0));
        if lam.norm() < 0.05 {
            continue;
        }
        let f: Mat2<Complex64> = frame(z, lam).unwrap();
        assert!((f.det() - c(1.0, 0.0)).norm() <= 1e-11, "z={z} λ={lam}");
    }
}

#[test]
fn frame_translation_property() {
    let mut rng = StdRng::seed_from_u64(9);
    for _ in 0..30 {
        let z = c(rng.random_range(-1.5..1.5), rng.random_range(-1.5..1.5));
        let lam = random_unit(&mut rng) * rng.random_range(0.5..1.5);
        let lhs: Mat2<Complex64> = frame(z + 1.0, lam).unwrap();
        let rhs = monodromy(c(1.0, 0.0), lam).unwrap().mul(&frame(z, lam).unwrap());
        assert!(lhs.dist(&rhs) <= 1e-12 * lhs.norm().max(1.0), "z={z} λ={lam}");
    }
}

#[test]
fn frame_reality_symmetry() {
    // conj(F_{1/λ̄})ᵗ = F_λ⁻¹ off the unit circle.
    let mut rng = StdRng::seed_from_u64(10);
    for _ in 0..30 {
        let z = c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        let r: f64 = rng.random_range(0.3..0.9);
        let lam = random_unit(&mut rng) * r;
        let mirror: Mat2<Complex64> = frame(z, 1.0 / lam.conj()).unwrap();
        let lhs = mirror.conj_transpose();
        let rhs = frame(z, lam).unwrap().inverse().unwrap();
        let scale = rhs.norm().max(1.0);
        assert!(lhs.dist(&rhs) <= 1e-10 * scale, "z={z} λ={lam}");
    }
}

#[test]
fn frame_single_valued_across_sheets() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..20 {
        let z = c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        let lam = c(rng.random_range(-1.5..1.5), rng.random_range(-1.5..1.5));
        if lam.norm() < 0.05 {
            continue;
        }
        let f1: Mat2<Complex64> = cylinder::frame_on(z, lam, Sheet::Principal).unwrap();
        let f2: Mat2<Complex64> = cylinder::frame_on(z, lam, Sheet::Alternate).unwrap();
        assert!(f1.dist(&f2) <= 1e-11 * f1.norm().max(1.0), "z={z} λ={lam}");
    }
}

// ---------------------------------------------------------------------------
// dressing
// ---------------------------------------------------------------------------

#[test]
fn psi_conjugation_equivariance() {
    // ψ_{UL,α} = U ψ_{L,α} U⁻¹ exactly, for any unitary U.
    let mut rng = StdRng::seed_from_u64(12);
    let alpha = alpha_for_lobes(2).unwrap();
    for _ in 0..40 {
        let u = random_su2(&mut rng);
        let line = LineCP1::from_ratio(
            c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
            c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
        );
        let line = match line {
            Ok(l) => l,
            Err(_) => continue,
        };
        let moved = LineCP1::new(u.apply(line.vector())).unwrap();
        let lam = c(rng.random_range(-1.5..1.5), rng.random_range(-1.5..1.5));
        if (1.0 - alpha * lam).norm() < 0.05 {
            continue;
        }
        let lhs: Mat2<Complex64> = psi(&moved, c(alpha, 0.0), lam).unwrap();
        let rhs = u
            .mul(&psi(&line, c(alpha, 0.0), lam).unwrap())
            .mul(&u.conj_transpose());
        assert!(lhs.dist(&rhs) < 1e-12 * (1.0 + lhs.norm()));
    }
}

#[test]
fn simple_factor_conjugation_equivariance_up_to_normalizer() {
    // h_{UL,α}(λ)·(U h_{L,α}(λ) U⁻¹)⁻¹ is a constant unitary, independent
    // of λ: the Gram-Schmidt normalizer of the moved line. For lines whose
    // ψ(0) is already positive-diagonal (e.g. U swapping [1:0] to [0:1])
    // the normalizer is the identity and equivariance is exact.
    let mut rng = StdRng::seed_from_u64(13);
    let alpha = alpha_for_lobes(3).unwrap();
    for _ in 0..20 {
        let u = random_su2(&mut rng);
        let line = LineCP1::e1();
        let moved = LineCP1::new(u.apply(line.vector())).unwrap();
        let lams = [c(0.9, 0.3), c(-0.6, 0.8), c(0.2, -1.2)];
        let mut constant: Option<Mat2<Complex64>> = None;
        for lam in lams {
            let h_moved: Mat2<Complex64> = simple_factor(&moved, alpha, lam).unwrap();
            let h_conj = u
                .mul(&simple_factor(&line, alpha, lam).unwrap())
                .mul(&u.conj_transpose());
            let ratio = h_moved.mul(&h_conj.inverse().unwrap());
            assert!(ratio.unitarity_defect() < 1e-10);
            match &constant {
                None => constant = Some(ratio),
                Some(prev) => {
                    assert!(ratio.dist(prev) < 1e-10, "normalizer depends on λ");
                }
            }
        }
    }

    // The coordinate swap is exactly equivariant.
    let swap = Mat2::new(c(0.0, 0.0), c(-1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0));
    for lam in [c(0.4, 0.7), c(-0.9, 0.1)] {
        let lhs: Mat2<Complex64> = simple_factor(&LineCP1::e2(), alpha, lam).unwrap();
        let rhs = swap
            .mul(&simple_factor(&LineCP1::e1(), alpha, lam).unwrap())
            .mul(&swap.conj_transpose());
        assert!(lhs.dist(&rhs) < 1e-12);
    }
}

#[test]
fn inverse_singularity_scalar_relation() {
    // h_{L,1/α}(λ) = s(λ)·h_{[0:1],α}(λ) with a scalar satisfying
    // s(1) = −1 and s'(1) = 0, so both dressings give the same immersion
    // at the Sym point λ₀ = 1.
    let alpha = alpha_for_lobes(2).unwrap();
    for lam in [c(0.85, 0.4), c(-0.3, 0.8), c(1.4, -0.2)] {
        let h_inv: Mat2<Complex64> = simple_factor(&LineCP1::e1(), 1.0 / alpha, lam).unwrap();
        let h_swap: Mat2<Complex64> = simple_factor(&LineCP1::e2(), alpha, lam).unwrap();
        let ratio = h_inv.mul(&h_swap.inverse().unwrap());
        let s = ratio.a;
        assert!(ratio.dist(&Mat2::identity().scale(s)) < 1e-12, "λ={lam}");
        assert!((s.norm() - 1.0).abs() < 1e-12);
    }
    // Jet at λ = 1: value −1, derivative 0.
    let one = ComplexJet::variable(c(1.0, 0.0));
    let h_inv = simple_factor(&LineCP1::e1(), 1.0 / alpha, one).unwrap();
    let h_swap = simple_factor(&LineCP1::e2(), alpha, one).unwrap();
    let ratio = h_inv.mul(&h_swap.inverse().unwrap());
    assert!((ratio.a.val - c(-1.0, 0.0)).norm() < 1e-12);
    assert!(ratio.a.der.norm() < 1e-12);
    assert!((ratio.d.val - c(-1.0, 0.0)).norm() < 1e-12);
    assert!(ratio.d.der.norm() < 1e-12);
}

#[test]
fn inverse_singularity_same_surface() {
    // Dressing with the line [0:1] (the reduced form of the 1/α dressing)
    // produces the same bubbleton moved by a rigid motion, with the
    // parameter shifted a quarter of the lobe period:
    //   f_swap(z) = Rot_{x2}(π/K)·(f(z + 1/(2K)) − f(1/(2K))).
    for k in [2u32, 3] {
        let base = BubbletonParams::single(k).unwrap();
        let surf = BubbletonSurface::new(&base).unwrap();
        let swapped = BubbletonParams {
            lobes: vec![SimpleFactorParams::with_line(k, LineCP1::e2()).unwrap()],
            h: -0.5,
            lambda0: c(1.0, 0.0),
        };
        let surf_swap = BubbletonSurface::new(&swapped).unwrap();

        let shift = 1.0 / (2.0 * k as f64);
        let origin = surf.point(c(shift, 0.0)).unwrap();
        let theta = std::f64::consts::PI / k as f64;
        let (st, ct) = theta.sin_cos();

        let mut rng = StdRng::seed_from_u64(100 + k as u64);
        let mut worst: f64 = 0.0;
        for _ in 0..40 {
            let z = c(rng.random_range(0.0..1.0), rng.random_range(-1.5..1.5));
            let fs = surf_swap.point(z).unwrap();
            let f = surf.point(z + shift).unwrap().sub(&origin);
            let rotated = Vec3::new(ct * f.x1 - st * f.x3, f.x2, st * f.x1 + ct * f.x3);
            worst = worst.max(fs.dist(&rotated));
        }
        assert!(worst < 1e-9, "K={k}: worst={worst:.3e}");
    }
}

#[test]
fn dressed_frame_unitary_on_circle() {
    let mut rng = StdRng::seed_from_u64(14);
    for k in [2u32, 3] {
        let params = BubbletonParams::single(k).unwrap();
        let frame = DressedFrame::new(&params).unwrap();
        for _ in 0..25 {
            let z = c(rng.random_range(0.0..1.0), rng.random_range(-1.0..1.0));
            let lam = random_unit(&mut rng);
            let m: Mat2<Complex64> = frame.at(z).unwrap().eval(lam).unwrap();
            assert!(m.unitarity_defect() <= 1e-10, "K={k} z={z} λ={lam}");
            assert!((m.det() - c(1.0, 0.0)).norm() <= 1e-10);
        }
    }
}

#[test]
fn dressed_closing_all_lobe_numbers() {
    for k in 2..=6u32 {
        let params = BubbletonParams::single(k).unwrap();
        let m = dressed_frame(c(1.0, 0.0), ComplexJet::variable(c(1.0, 0.0)), &params).unwrap();
        let report = ClosingReport::from_jet(&m, 1e-10);
        assert!(
            report.pass,
            "K={k}: value={:.3e} derivative={:.3e}",
            report.value_deviation, report.derivative_deviation
        );
        assert_eq!(report.sign, -1);
    }
}

#[test]
fn multi_lobe_closing_and_order_independence() {
    let params = BubbletonParams::multi(&[2, 3]).unwrap();
    let m = dressed_frame(c(1.0, 0.0), ComplexJet::variable(c(1.0, 0.0)), &params).unwrap();
    let report = ClosingReport::from_jet(&m, 1e-9);
    assert!(report.pass, "{report:?}");

    // Identity at the base point.
    let at0: Mat2<Complex64> = dressed_frame(c(0.0, 0.0), c(0.7, 0.2), &params).unwrap();
    assert!(at0.dist(&Mat2::identity()) < 1e-12);

    // Applying the lobes in the opposite order closes as well and produces
    // the same immersion.
    let reversed = BubbletonParams {
        lobes: params.lobes.iter().rev().cloned().collect(),
        ..params.clone()
    };
    let m_rev = dressed_frame(c(1.0, 0.0), ComplexJet::variable(c(1.0, 0.0)), &reversed).unwrap();
    assert!(ClosingReport::from_jet(&m_rev, 1e-9).pass);

    let sa = BubbletonSurface::new(&params).unwrap();
    let sb = BubbletonSurface::new(&reversed).unwrap();
    let mut rng = StdRng::seed_from_u64(15);
    for _ in 0..10 {
        let z = c(rng.random_range(0.0..1.0), rng.random_range(-1.0..1.0));
        let pa = sa.point(z).unwrap();
        let pb = sb.point(z).unwrap();
        assert!(pa.dist(&pb) < 1e-9, "z={z}");
    }
}

#[test]
fn three_lobe_closing() {
    let params = BubbletonParams::multi(&[2, 3, 4]).unwrap();
    let m = dressed_frame(c(1.0, 0.0), ComplexJet::variable(c(1.0, 0.0)), &params).unwrap();
    assert!(ClosingReport::from_jet(&m, 1e-9).pass);
}

#[test]
fn dressed_frame_holomorphic_near_singularity() {
    for k in [2u32, 3, 4] {
        let report = residue_check(k).unwrap();
        assert!(report.convergence <= 1e-6, "K={k}");
        // A plain evaluation just off α already sits near the limit.
        let params = BubbletonParams::single(k).unwrap();
        let alpha = params.lobes[0].alpha;
        let at = DressedFrame::new(&params)
            .unwrap()
            .at(c(1.0, 0.0))
            .unwrap();
        let close: Mat2<Complex64> = at
            .eval_unguarded(c(alpha + 1e-4 * (1.0 - alpha), 0.0))
            .unwrap();
        let rel = close.dist(&report.limit) / report.limit.norm();
        assert!(rel < 1e-2, "K={k}: rel={rel:.3e}");
    }
}

// ---------------------------------------------------------------------------
// geometry
// ---------------------------------------------------------------------------

#[test]
fn summands_match_pipeline_along_axis() {
    // t1 + t2 + t3 equals the transposed pipeline immersion in the curve
    // normalization (overall factor i, i.e. H = −2).
    let k = 2u32;
    let params = BubbletonParams::single(k)
        .unwrap()
        .with_mean_curvature(-2.0)
        .unwrap();
    let surface = BubbletonSurface::new(&params).unwrap();
    for i in 0..1000 {
        let x = i as f64 / 1000.0;
        let pipe = surface.su2_point(c(x, 0.0)).unwrap();
        let sum = curve_summands(x, k).unwrap().sum();
        assert!(
            pipe.dist(&sum.transpose()) < 1e-9,
            "x={x}: {:.3e}",
            pipe.dist(&sum.transpose())
        );
    }
}

#[test]
fn closed_form_curve_matches_pipeline_at_markers() {
    let k = 2u32;
    let params = BubbletonParams::single(k)
        .unwrap()
        .with_mean_curvature(-2.0)
        .unwrap();
    let surface = BubbletonSurface::new(&params).unwrap();
    for x in [0.0, 0.25] {
        let m = surface.su2_point(c(x, 0.0)).unwrap();
        let (cx, cz) = bubbleton_curve_closed_form(x, k).unwrap();
        assert!((m.b.re - cx).abs() < 1e-9, "x={x}");
        assert!((m.a.im - cz).abs() < 1e-9, "x={x}");
    }
}

#[test]
fn cylinder_curve_is_generating_circle() {
    let curve = extract_planar_curve(&BubbletonParams::cylinder(), 256).unwrap();
    // Radius 1/(2|H|) = 1 around (0, −1) for H = −1/2, under the
    // Sym-point normalization f(0) = 0.
    for &(_, [x, z]) in curve.samples() {
        let r = (x * x + (z + 1.0) * (z + 1.0)).sqrt();
        assert!((r - 1.0).abs() < 1e-10);
    }
    let tn = turning_number(&curve).unwrap();
    assert_eq!(tn.value.abs(), 1);
}

#[test]
fn pipeline_curve_x2_component_vanishes() {
    let params = BubbletonParams::single(2).unwrap();
    let (max_imag, max_x2) = geometry::planarity_defect(&params, 1024).unwrap();
    assert!(max_imag < 1e-10);
    assert!(max_x2 < 1e-10);
}

#[test]
fn quadrature_cross_check_of_turning_integral() {
    for k in [2u32, 3] {
        let quad = turning_number_quadrature(k).unwrap();
        let expect = (2 * k - 1) as f64;
        assert!((quad - expect).abs() < 1e-3, "K={k}: {quad}");
    }
}

#[test]
fn turning_number_six_lobes() {
    let curve = PlanarCurve::bubbleton(6, 4096).unwrap();
    let tn = turning_number(&curve).unwrap();
    assert_eq!(tn.value, 11);
    assert!((tn.raw - 11.0).abs() < 1e-6);
}

#[test]
fn extracted_pipeline_curve_matches_closed_form() {
    // In the curve normalization (H = −2) the extracted curve and the
    // closed form coincide pointwise.
    let k = 2u32;
    let params = BubbletonParams::single(k)
        .unwrap()
        .with_mean_curvature(-2.0)
        .unwrap();
    let curve = extract_planar_curve(&params, 2000).unwrap();
    assert!(curve.closed());
    for &(t, [x, z]) in curve.samples() {
        let (cx, cz) = bubbleton_curve_closed_form(t, k).unwrap();
        let d = ((x - cx).powi(2) + (z - cz).powi(2)).sqrt();
        assert!(d < 1e-9, "t={t}: {d:.3e}");
    }
}

#[test]
fn immersion_branch_independent() {
    // The immersion is insensitive to the sheet of λ^{1/2}: the frame is
    // single-valued, so the whole pipeline is. Checked through the frame
    // evaluated on the alternate sheet against the closed-form curve.
    let mut rng = StdRng::seed_from_u64(16);
    for _ in 0..20 {
        let z = c(rng.random_range(0.0..1.0), rng.random_range(-1.0..1.0));
        let lam = ComplexJet::variable(c(1.0, 0.0));
        let f1 = cylinder::frame_on(z, lam, Sheet::Principal).unwrap();
        let f2 = cylinder::frame_on(z, lam, Sheet::Alternate).unwrap();
        let p1 = sym_bobenko(&f1, c(1.0, 0.0), -0.5).unwrap();
        let p2 = sym_bobenko(&f2, c(1.0, 0.0), -0.5).unwrap();
        assert!(p1.dist(&p2) < 1e-10 * p1.norm().max(1.0), "z={z}");
    }
}

#[test]
fn far_field_is_a_translated_cylinder() {
    // Away from the bubble the surface approaches a rigidly translated
    // round cylinder of radius 1/(2|H|) = 1.
    let params = BubbletonParams::single(2).unwrap();
    let mesh = surface_mesh(&params, 48, 25, (5.0, 8.0)).unwrap();
    let mut c1 = 0.0;
    let mut c3 = 0.0;
    let mut count = 0.0;
    for j in 0..mesh.ny() {
        for i in 0..mesh.nx() - 1 {
            let p = mesh.point(i, j);
            c1 += p.x1;
            c3 += p.x3;
            count += 1.0;
        }
    }
    c1 /= count;
    c3 /= count;
    for j in 0..mesh.ny() {
        for i in 0..mesh.nx() {
            let p = mesh.point(i, j);
            let r = ((p.x1 - c1).powi(2) + (p.x3 - c3).powi(2)).sqrt();
            assert!((r - 1.0).abs() < 1e-2, "(i,j)=({i},{j}): r={r}");
        }
    }
}
