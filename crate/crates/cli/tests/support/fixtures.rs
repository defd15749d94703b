//! Worked examples with reference values from the oracles, each compared
//! against the library at the tolerance stated with the example.

use num_complex::Complex64 as C;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{PI, TAU};

use real_hardy::factorization::{
    blaschke_product, conjugate_function, inner_outer, outer_from_modulus, riesz_factorize,
};
use real_hardy::interpolation::{
    cf_solve, cf_toeplitz, np_solvable_real, np_solve, np_solve_real, pick_matrix, verify_interpolant,
    verify_taylor, CfProblem, InterpolationProblem,
};
use real_hardy::subspace::{classify, generate_invariant, subspace_distance, wandering_vector, Form, ShiftPowers, SubspaceBasis};
use real_hardy::szego::{geometric_mean, szego_infimum_ls, szego_ls_complex, Weight};
use real_hardy::{FourierPoly, GridFunction, Norm, ToleranceConfig};

use super::oracle::{self, c};

pub struct Fixture {
    pub name: &'static str,
    pub run: fn() -> Result<String, String>,
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(label: &str, err: f64, tol: f64) -> Result<(), String> {
    ensure(err <= tol, || format!("{label}: error {err:.3e} exceeds {tol:.0e}"))
}

fn tol() -> ToleranceConfig {
    ToleranceConfig::default()
}

fn random_terms(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Vec<(i64, C)> {
    (lo..=hi).map(|n| (n, c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))).collect()
}

fn on_circle(t: f64) -> C {
    C::from_polar(1.0, t)
}

fn series_err(a: &[C], b: &[C]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

fn star_matches_grid_definition() -> Result<String, String> {
    let terms = [(-2, c(3.0, 4.0)), (0, c(1.0, -1.0))];
    let f = FourierPoly::from_coeffs(terms);
    let fs = f.star();
    let mut worst = 0.0f64;
    for k in 0..64 {
        let t = TAU * k as f64 / 64.0;
        let expected = oracle::eval_terms(&terms, on_circle(-t)).conj();
        worst = worst.max((fs.eval_circle(t) - expected).norm());
    }
    within("f*(θ) vs conj f(−θ)", worst, 1e-13)?;
    ensure(fs.coeff(-2) == c(3.0, -4.0) && fs.coeff(0) == c(1.0, 1.0), || "coefficients".into())?;
    Ok(format!("max grid gap {worst:.1e}"))
}

fn phi_contracts_l2() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let terms = random_terms(&mut rng, 0, 32);
    let f = FourierPoly::from_coeffs(terms.clone());
    let real_terms: Vec<(i64, C)> = terms.iter().map(|&(n, a)| (n, c(a.re, 0.0))).collect();
    let l2 = |t: &[(i64, C)]| oracle::trapezoid(256, |th| c(oracle::eval_terms(t, on_circle(th)).norm_sqr(), 0.0)).re.sqrt();
    let (nf, nphi) = (l2(&terms), l2(&real_terms));
    within("‖f‖₂", (f.norm_l2() - nf).abs(), 1e-12)?;
    within("‖Φf‖₂", (f.phi().norm_l2() - nphi).abs(), 1e-12)?;
    ensure(nphi <= nf, || format!("{nphi} > {nf}"))?;
    Ok(format!("‖Φf‖₂ = {nphi:.6} ≤ ‖f‖₂ = {nf:.6}"))
}

fn multiply_matches_pointwise() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (tf, tg) = (random_terms(&mut rng, -8, 8), random_terms(&mut rng, 0, 16));
    let prod = &FourierPoly::from_coeffs(tf.clone()) * &FourierPoly::from_coeffs(tg.clone());
    let m = 128;
    let samples = prod.to_grid(m).map_err(|e| e.to_string())?;
    let mut worst = 0.0f64;
    for (k, s) in samples.samples().iter().enumerate() {
        let z = on_circle(TAU * k as f64 / m as f64);
        worst = worst.max((s - oracle::eval_terms(&tf, z) * oracle::eval_terms(&tg, z)).norm());
    }
    within("product samples", worst, 1e-9)?;
    Ok(format!("max gap {worst:.1e}"))
}

fn pairing_matches_trapezoid() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (tf, tg) = (random_terms(&mut rng, -16, 16), random_terms(&mut rng, -16, 16));
    let lib = FourierPoly::from_coeffs(tf.clone()).pairing(&FourierPoly::from_coeffs(tg.clone()));
    let quad = oracle::trapezoid(128, |t| oracle::eval_terms(&tf, on_circle(t)) * oracle::eval_terms(&tg, on_circle(t)));
    within("pairing", (lib - quad).norm(), 1e-10)?;
    Ok(format!("pairing {lib:.6}"))
}

fn l1_norm_of_one_plus_z() -> Result<String, String> {
    let quad = oracle::trapezoid(1 << 16, |t| c((c(1.0, 0.0) + on_circle(t)).norm(), 0.0)).re;
    within("oracle vs 4/π", (quad - 4.0 / PI).abs(), 1e-9)?;
    let lib = FourierPoly::from_real(0, &[1.0, 1.0]).norm(Norm::L1);
    within("library L1", (lib - quad).abs(), 1e-6)?;
    Ok(format!("‖1+z‖₁ = {lib:.9}"))
}

fn phi_matches_conjugate_evaluation() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let terms = random_terms(&mut rng, 0, 16);
    let g = FourierPoly::from_coeffs(terms.clone()).phi();
    let mut worst = 0.0f64;
    for _ in 0..16 {
        let z = C::from_polar(rng.gen_range(0.0..0.95), rng.gen_range(0.0..TAU));
        let expected = (oracle::eval_terms(&terms, z) + oracle::eval_terms(&terms, z.conj()).conj()) / 2.0;
        let got = g.eval_disk(z).map_err(|e| e.to_string())?;
        worst = worst.max((got - expected).norm());
    }
    within("Φ(f)(z)", worst, 1e-12)?;
    Ok(format!("max gap {worst:.1e}"))
}

fn grid_round_trip() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let f = FourierPoly::from_coeffs(random_terms(&mut rng, 0, 16));
    let g = f.to_grid(64).map_err(|e| e.to_string())?;
    let back = FourierPoly::from_grid(&g, 0, 16).map_err(|e| e.to_string())?;
    let err = back.max_coeff_diff(&f);
    within("round trip", err, 1e-12)?;
    Ok(format!("max coefficient error {err:.1e}"))
}

fn conjugate_pair_blaschke_is_real() -> Result<String, String> {
    let a = c(0.3, 0.4);
    let expected = oracle::blaschke_series(&[a, a.conj()], 0, 32);
    let imag = expected.iter().map(|x| x.im.abs()).fold(0.0, f64::max);
    within("oracle imaginary parts", imag, 1e-10)?;
    let b = blaschke_product(&[a, a.conj()], 0).map_err(|e| e.to_string())?;
    let got = b.taylor(31).taylor_coeffs(32);
    within("library series", series_err(&got, &expected), 1e-12)?;
    within("library imaginary parts", got.iter().map(|x| x.im.abs()).fold(0.0, f64::max), 1e-10)?;
    Ok(format!("max |Im| {imag:.1e}"))
}

fn single_blaschke_unimodular() -> Result<String, String> {
    let b = blaschke_product(&[c(0.5, 0.0)], 0).map_err(|e| e.to_string())?;
    let mut worst = 0.0f64;
    for k in 0..128 {
        let z = on_circle(TAU * k as f64 / 128.0);
        let direct = (c(0.5, 0.0) - z) / (c(1.0, 0.0) - 0.5 * z);
        worst = worst.max((b.eval(z) - direct).norm()).max((b.eval(z).norm() - 1.0).abs());
    }
    within("|B| = 1", worst, 1e-10)?;
    Ok(format!("max deviation {worst:.1e}"))
}

fn conjugate_function_analytic() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut terms = vec![(0, c(rng.gen_range(-1.0..1.0), 0.0))];
    for n in 1..=16 {
        let a = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        terms.push((n, a));
        terms.push((-n, a.conj()));
    }
    let f = FourierPoly::from_coeffs(terms.clone());
    // Real-valued on the circle.
    let im = (0..64).map(|k| oracle::eval_terms(&terms, on_circle(TAU * k as f64 / 64.0)).im.abs()).fold(0.0, f64::max);
    within("oracle real-valuedness", im, 1e-12)?;
    let h = &f + &conjugate_function(&f).scale(c(0.0, 1.0));
    let neg = (-16..0).map(|n| h.coeff(n).norm()).fold(0.0, f64::max);
    within("negative coefficients", neg, 1e-12)?;
    Ok(format!("max negative coefficient {neg:.1e}"))
}

fn outer_of_one_plus_half_z() -> Result<String, String> {
    let m = GridFunction::from_fn(256, |t| c((c(1.0, 0.0) + 0.5 * on_circle(t)).norm(), 0.0)).map_err(|e| e.to_string())?;
    let u = outer_from_modulus(&m, 64).map_err(|e| e.to_string())?;
    let err = u.max_coeff_diff(&FourierPoly::from_real(0, &[1.0, 0.5]));
    within("u vs 1 + z/2", err, 1e-8)?;
    Ok(format!("coefficient error {err:.1e}"))
}

fn outer_mean_log_equality() -> Result<String, String> {
    let m = GridFunction::from_fn(512, |t| c(2.0 + t.cos() + 0.3 * (2.0 * t).sin(), 0.0)).map_err(|e| e.to_string())?;
    let u = outer_from_modulus(&m, 100).map_err(|e| e.to_string())?;
    let terms: Vec<(i64, C)> = u.iter().collect();
    let mean_log = oracle::trapezoid(2048, |t| c(oracle::eval_terms(&terms, on_circle(t)).norm().ln(), 0.0)).re;
    let gap = (mean_log - u.coeff(0).norm().ln()).abs();
    within("mean log|u| vs log|u(0)|", gap, 1e-9)?;
    Ok(format!("gap {gap:.1e}"))
}

fn inner_outer_of_z2_minus_quarter() -> Result<String, String> {
    let f = FourierPoly::from_real(0, &[-0.25, 0.0, 1.0]);
    let r = inner_outer(&f, &tol()).map_err(|e| e.to_string())?;
    let expected = oracle::blaschke_series(&[c(0.5, 0.0), c(-0.5, 0.0)], 0, 40);
    within("inner series", series_err(&r.inner.taylor(39).taylor_coeffs(40), &expected), 1e-12)?;
    // (z² − 1/4) / B = −(1 − z²/4) by hand.
    within("outer", r.outer.max_coeff_diff(&FourierPoly::from_real(0, &[1.0, 0.0, -0.25])), 1e-12)?;
    ensure(r.sign == -1, || format!("sign {}", r.sign))?;
    ensure(r.inner.is_real_type(1e-12), || "inner not real-type".into())?;
    within("reconstruction", r.residual, 1e-9 * f.norm_l2())?;
    Ok(format!("residual {:.1e}", r.residual))
}

fn conjugate_pair_inner_is_real() -> Result<String, String> {
    let a = c(0.3, 0.4);
    let p = oracle::monic_from_roots(&[a, a.conj()]);
    let f = FourierPoly::from_dense(0, &p);
    let r = inner_outer(&f, &tol()).map_err(|e| e.to_string())?;
    let expected = oracle::blaschke_series(&[a, a.conj()], 0, 40);
    let got = r.inner.taylor(39).taylor_coeffs(40);
    within("inner series", series_err(&got, &expected), 1e-12)?;
    within("imaginary parts", got.iter().map(|x| x.im.abs()).fold(0.0, f64::max), 1e-10)?;
    Ok("inner has real coefficients".into())
}

fn riesz_of_square() -> Result<String, String> {
    let f = FourierPoly::from_real(0, &[1.0, 1.0, 0.25]);
    let l1 = oracle::trapezoid(4096, |t| c((c(1.0, 0.0) + 0.5 * on_circle(t)).norm_sqr(), 0.0)).re;
    within("oracle ‖f‖₁", (l1 - 1.25).abs(), 1e-12)?;
    let r = riesz_factorize(&f, 64, &tol()).map_err(|e| e.to_string())?;
    within("f₂ vs 1 + z/2", r.f2.max_coeff_diff(&FourierPoly::from_real(0, &[1.0, 0.5])), 1e-8)?;
    within("‖f₂‖₂²", (r.f2_norm_sq - l1).abs(), 1e-8)?;
    within("‖f₁‖₂²", (r.f1_norm_sq - l1).abs(), 1e-8)?;
    within("library ‖f‖₁", (r.l1_norm - l1).abs(), 1e-8)?;
    Ok(format!("‖f‖₁ = {l1}"))
}

fn pick_two_point_degenerate() -> Result<String, String> {
    let (z, w) = ([c(0.0, 0.0), c(0.5, 0.0)], [c(0.0, 0.0), c(0.5, 0.0)]);
    let hand: Vec<Vec<C>> = (0..2)
        .map(|i| (0..2).map(|j| (c(1.0, 0.0) - w[i] * w[j].conj()) / (c(1.0, 0.0) - z[i] * z[j].conj())).collect())
        .collect();
    let ev = oracle::hermitian_eigenvalues(&hand);
    within("oracle λ_min", ev[0].abs(), 1e-14)?;
    let p = pick_matrix(&z, &w).map_err(|e| e.to_string())?;
    let err = (0..2).flat_map(|i| (0..2).map(move |j| (i, j))).map(|(i, j)| (p[(i, j)] - hand[i][j]).norm()).fold(0.0, f64::max);
    within("matrix", err, 1e-15)?;
    within("unit entries", hand.iter().flatten().map(|e| (e - 1.0).norm()).fold(0.0, f64::max), 1e-15)?;
    let f = np_solve(&z, &w, &tol()).map_err(|e| e.to_string())?;
    within("f(z) = z", (f.eval(c(0.3, 0.2)) - c(0.3, 0.2)).norm(), 1e-12)?;
    Ok(format!("λ = {:?}", ev))
}

fn forced_real_block_determinant() -> Result<String, String> {
    let (z, w) = (0.5f64, c(0.3, 0.4));
    let det = ((1.0 - w.norm_sqr()).powi(2) - (c(1.0, 0.0) - w * w).norm_sqr()) / (1.0 - z * z).powi(2);
    ensure(det < 0.0, || "oracle determinant not negative".into())?;
    let p = InterpolationProblem::new(vec![c(z, 0.0)], vec![w]).map_err(|e| e.to_string())?;
    let report = np_solvable_real(&p, &tol());
    ensure(!report.solvable, || "reported solvable".into())?;
    let got = report.forced_real_blocks[0].determinant;
    within("determinant", (got - det).abs(), 1e-12)?;
    Ok(format!("det = {det:.12}"))
}

fn real_certificate() -> Result<String, String> {
    let (z, w) = (c(0.5, 0.0), c(0.25, 0.0));
    within("f = z/2 certifies", (z / 2.0 - w).norm(), 1e-16)?;
    let p = InterpolationProblem::new(vec![z], vec![w]).map_err(|e| e.to_string())?;
    let report = np_solvable_real(&p, &tol());
    ensure(report.solvable, || "reported unsolvable".into())?;
    let hand = (1.0 - 0.0625) / (1.0 - 0.25);
    within("1×1 Pick entry", (report.min_eigenvalue - hand).abs(), 1e-15)?;
    Ok(format!("P = [{hand}]"))
}

fn complex_node_pick_agrees_with_solver() -> Result<String, String> {
    let (z, w) = (c(0.3, 0.4), c(0.1, 0.2));
    let nodes = [z, z.conj()];
    let vals = [w, w.conj()];
    let hand: Vec<Vec<C>> = (0..2)
        .map(|i| (0..2).map(|j| (c(1.0, 0.0) - vals[i] * vals[j].conj()) / (c(1.0, 0.0) - nodes[i] * nodes[j].conj())).collect())
        .collect();
    let ev = oracle::hermitian_eigenvalues(&hand);
    let oracle_psd = ev[0] >= -1e-9 * ev[1].abs().max(1.0);
    let p = InterpolationProblem::new(vec![z], vec![w]).map_err(|e| e.to_string())?;
    let report = np_solvable_real(&p, &tol());
    ensure(report.solvable == oracle_psd, || "PSD disagreement".into())?;
    within("λ_min", (report.min_eigenvalue - ev[0]).abs(), 1e-12)?;
    let solved = np_solve_real(&p, &tol()).is_ok();
    ensure(solved == oracle_psd, || "solver disagrees with certificate".into())?;
    Ok(format!("λ_min = {:.6}, solvable = {oracle_psd}", ev[0]))
}

fn np_solve_unique_solution() -> Result<String, String> {
    let f = np_solve(&[c(0.0, 0.0), c(0.5, 0.0)], &[c(0.0, 0.0), c(0.5, 0.0)], &tol()).map_err(|e| e.to_string())?;
    let worst = (0..32)
        .map(|k| {
            let z = C::from_polar(0.9, TAU * k as f64 / 32.0);
            (f.eval(z) - z).norm()
        })
        .fold(0.0, f64::max);
    within("f = z", worst, 1e-12)?;
    Ok(format!("max |f(z) − z| {worst:.1e}"))
}

fn np_solve_two_points() -> Result<String, String> {
    let (z, w) = ([c(0.0, 0.0), c(0.5, 0.0)], [c(0.5, 0.0), c(0.0, 0.0)]);
    let f = np_solve(&z, &w, &tol()).map_err(|e| e.to_string())?;
    let num: Vec<(i64, C)> = f.num().iter().collect();
    let den: Vec<(i64, C)> = f.den().iter().collect();
    let eval = |x: C| oracle::eval_terms(&num, x) / oracle::eval_terms(&den, x);
    let resid = z.iter().zip(&w).map(|(&x, &y)| (eval(x) - y).norm()).fold(0.0, f64::max);
    let sup = oracle::sup_on_circle(8192, eval);
    within("residual", resid, 1e-9)?;
    within("sup-norm excess", (sup - 1.0).max(0.0), 1e-9)?;
    let p = InterpolationProblem::new(z.to_vec(), w.to_vec()).map_err(|e| e.to_string())?;
    ensure(verify_interpolant(&f, &p, 1e-9).pass, || "verifier rejects".into())?;
    Ok(format!("sup {sup:.6}"))
}

fn real_interpolant_conjugate_node() -> Result<String, String> {
    let (z, w) = (c(0.3, 0.4), c(0.1, 0.2));
    let p = InterpolationProblem::new(vec![z], vec![w]).map_err(|e| e.to_string())?;
    let g = np_solve_real(&p, &tol()).map_err(|e| e.to_string())?.rational;
    let num: Vec<(i64, C)> = g.num().iter().collect();
    let den: Vec<(i64, C)> = g.den().iter().collect();
    let at = |x: C| oracle::eval_terms(&num, x) / oracle::eval_terms(&den, x);
    within("g(z)", (at(z) - w).norm(), 1e-9)?;
    within("g(conj z)", (at(z.conj()) - w.conj()).norm(), 1e-9)?;
    within("sup-norm excess", (oracle::sup_on_circle(8192, at) - 1.0).max(0.0), 1e-9)?;
    Ok("g(conj z) = conj w".into())
}

fn cf_half_half() -> Result<String, String> {
    // TᵀT for T = [[0.5, 0], [0.5, 0.5]].
    let ev = oracle::jacobi_eigenvalues(vec![vec![0.5, 0.25], vec![0.25, 0.25]]);
    let sigma = ev[1].sqrt();
    within("σ_max vs (1+√5)/4", (sigma - (1.0 + 5f64.sqrt()) / 4.0).abs(), 1e-14)?;
    let problem = CfProblem::from_real(&[0.5, 0.5]).map_err(|e| e.to_string())?;
    let t = cf_toeplitz(&problem);
    ensure(t[(0, 1)] == c(0.0, 0.0) && t[(1, 0)] == c(0.5, 0.0), || "layout".into())?;
    let s = cf_solve(&problem, &tol()).map_err(|e| e.to_string())?;
    within("‖T‖", (s.toeplitz_norm - sigma).abs(), 1e-12)?;
    let report = verify_taylor(&s.rational, &problem, 1e-9);
    ensure(report.pass && report.real_type, || format!("{report:?}"))?;
    let num: Vec<(i64, C)> = s.rational.num().iter().collect();
    let den: Vec<(i64, C)> = s.rational.den().iter().collect();
    let sup = oracle::sup_on_circle(8192, |x| oracle::eval_terms(&num, x) / oracle::eval_terms(&den, x));
    within("sup-norm excess", (sup - 1.0).max(0.0), 1e-9)?;
    Ok(format!("σ_max = {sigma:.6}"))
}

fn np_solve_real_self_check() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    let mut solved = 0;
    for _ in 0..40 {
        let z = C::from_polar(rng.gen_range(0.1..0.9), rng.gen_range(0.0..TAU));
        let x = rng.gen_range(-0.9..0.9);
        let w = C::from_polar(rng.gen_range(0.0..0.6), rng.gen_range(0.0..TAU));
        let p = InterpolationProblem::new(vec![z, c(x, 0.0)], vec![w, c(rng.gen_range(-0.6..0.6), 0.0)])
            .map_err(|e| e.to_string())?;
        if let Ok(sol) = np_solve_real(&p, &tol()) {
            let report = verify_interpolant(&sol.rational, &p, 1e-9);
            ensure(report.pass, || format!("{report:?}"))?;
            solved += 1;
        }
    }
    ensure(solved > 0, || "no solvable sample".into())?;
    Ok(format!("{solved} of 40 solvable, all verified"))
}

fn geometric_mean_singular_weight() -> Result<String, String> {
    let m = 1 << 14;
    let samples: Vec<f64> = (0..m).map(|k| (c(1.0, 0.0) - on_circle(TAU * k as f64 / m as f64)).norm_sqr()).collect();
    // Grid mean of log w over the nonsingular samples.
    let mean: f64 = samples.iter().skip(1).map(|w| w.ln()).sum::<f64>() / m as f64;
    within("oracle mean log w", mean.abs(), 2e-3)?;
    let g = geometric_mean(&Weight::new(samples).map_err(|e| e.to_string())?);
    within("geometric mean", (g - 1.0).abs(), 1e-3)?;
    Ok(format!("geometric mean {g:.6}"))
}

fn szego_outer_weight() -> Result<String, String> {
    let w = Weight::from_fn(4096, |t| (c(1.0, 0.0) + 0.5 * on_circle(t)).norm_sqr()).map_err(|e| e.to_string())?;
    let gm = oracle::trapezoid(4096, |t| c((c(1.0, 0.0) + 0.5 * on_circle(t)).norm_sqr().ln(), 0.0)).re.exp();
    within("oracle geometric mean", (gm - 1.0).abs(), 1e-12)?;
    let inf = szego_infimum_ls(&w, 128).map_err(|e| e.to_string())?;
    within("infimum vs geometric mean", (inf - gm).abs(), 1e-4)?;
    within("library geometric mean", (geometric_mean(&w) - gm).abs(), 1e-12)?;
    Ok(format!("infimum {inf:.10}"))
}

fn two_bump_real_vs_complex() -> Result<String, String> {
    let bump = |t: f64, c0: f64| (-((t - c0).sin() / 0.3).powi(2)).exp();
    let w = Weight::from_fn(512, |t| 0.2 + bump(t, 1.0) + bump(t, -1.0)).map_err(|e| e.to_string())?;
    let n = 16;
    let reference = oracle::complex_weighted_ls(w.samples(), n);
    let real = szego_infimum_ls(&w, n).map_err(|e| e.to_string())?;
    let complex = szego_ls_complex(&w, n).map_err(|e| e.to_string())?.infimum;
    within("real vs oracle complex", (real - reference).abs(), 1e-8)?;
    within("library complex vs oracle", (complex - reference).abs(), 1e-8)?;
    Ok(format!("infimum {real:.10}"))
}

fn poly(c: &[f64]) -> FourierPoly {
    FourierPoly::from_real(0, c)
}

fn generator_rows(gens: &[Vec<f64>], shifts: impl Fn(usize) -> bool, n: usize) -> Vec<Vec<f64>> {
    let mut rows = Vec::new();
    for g in gens {
        let deg = g.len() - 1;
        for w in (0..n - deg).filter(|&w| shifts(w)) {
            let mut row = vec![0.0; n];
            row[w..w + g.len()].copy_from_slice(g);
            rows.push(row);
        }
    }
    rows
}

fn one_plus_z_two_three() -> Result<String, String> {
    let n = 32;
    let rows = generator_rows(&[vec![1.0, 1.0]], |w| w != 1, n);
    let rank = oracle::rank(rows, 1e-12);
    ensure(rank == n - 2, || format!("oracle rank {rank}"))?;
    let m = generate_invariant(&[poly(&[1.0, 1.0])], ShiftPowers::TwoThree, n).map_err(|e| e.to_string())?;
    ensure(m.dim() == rank, || format!("dimension {} vs {rank}", m.dim()))?;
    let r = classify(&m, &tol()).map_err(|e| e.to_string())?;
    ensure(r.form == Form::Constrained, || format!("{:?}", r.form))?;
    within("c", (r.c.unwrap() - 1.0).abs(), 1e-8)?;
    within("φ = 1", r.phi.max_coeff_diff(&FourierPoly::one()), 1e-8)?;
    Ok(format!("dimension {rank}"))
}

fn wandering_vector_of_z2_minus_quarter() -> Result<String, String> {
    let m = generate_invariant(&[poly(&[-0.25, 0.0, 1.0])], ShiftPowers::One, 64).map_err(|e| e.to_string())?;
    let w = wandering_vector(&m).map_err(|e| e.to_string())?;
    let expected = oracle::blaschke_series(&[c(0.5, 0.0), c(-0.5, 0.0)], 0, 64);
    let got = w.taylor_coeffs(64);
    let err = series_err(&got, &expected).min(series_err(&got.iter().map(|x| -x).collect::<Vec<_>>(), &expected));
    within("wandering vector vs Blaschke product", err, 1e-6)?;
    Ok(format!("error {err:.1e}"))
}

fn constant_generator_two_three() -> Result<String, String> {
    let n = 16;
    let rows = generator_rows(&[vec![1.0]], |w| w != 1, n);
    let base = oracle::rank(rows.clone(), 1e-12);
    let with = |v: Vec<f64>| {
        let mut r = rows.clone();
        r.push(v);
        oracle::rank(r, 1e-12)
    };
    let mut e0 = vec![0.0; n];
    e0[0] = 1.0;
    let mut e1 = vec![0.0; n];
    e1[1] = 1.0;
    ensure(with(e0) == base, || "1 ∉ 𝓜".into())?;
    ensure(with(e1) == base + 1, || "z ∈ 𝓜".into())?;
    let m = generate_invariant(&[FourierPoly::one()], ShiftPowers::TwoThree, n).map_err(|e| e.to_string())?;
    let r = classify(&m, &tol()).map_err(|e| e.to_string())?;
    ensure(r.form == Form::Constrained, || format!("{:?}", r.form))?;
    within("c", r.c.unwrap().abs(), 1e-8)?;
    within("φ = 1", r.phi.max_coeff_diff(&FourierPoly::one()), 1e-8)?;
    Ok("φ = 1, c = 0".into())
}

fn constructed_c_two() -> Result<String, String> {
    let gens = [poly(&[1.0, 2.0]), poly(&[0.0, 0.0, 1.0]), poly(&[0.0, 0.0, 0.0, 1.0])];
    let m = generate_invariant(&gens, ShiftPowers::TwoThree, 32).map_err(|e| e.to_string())?;
    let r = classify(&m, &tol()).map_err(|e| e.to_string())?;
    ensure(r.form == Form::Constrained, || format!("{:?}", r.form))?;
    within("c", (r.c.unwrap() - 2.0).abs(), 1e-8)?;
    within("φ = 1", r.phi.max_coeff_diff(&FourierPoly::one()), 1e-8)?;
    Ok(format!("c = {}", r.c.unwrap()))
}

fn blaschke_times_constrained() -> Result<String, String> {
    let zeros = [c(0.5, 0.0), c(-0.5, 0.0)];
    let big_b = oracle::blaschke_series(&zeros, 0, 64);
    let b: Vec<f64> = oracle::monic_from_roots(&zeros).iter().map(|x| x.re).collect();
    // b = κ·B·o with o(0) = 1, so b·[1 + c̃z] = κ·B·[1 + (c̃ + o₁)z] modulo z².
    let o1 = b[1] / b[0] - big_b[1].re / big_b[0].re;
    let target = 1.0;
    let ct = target - o1;
    let g0: Vec<f64> = oracle::series_mul(&b.iter().map(|&x| c(x, 0.0)).collect::<Vec<_>>(), &[c(1.0, 0.0), c(ct, 0.0)], 4)
        .iter()
        .map(|x| x.re)
        .collect();
    let gens = [poly(&g0), poly(&b).shift(2), poly(&b).shift(3)];
    let m = generate_invariant(&gens, ShiftPowers::TwoThree, 64).map_err(|e| e.to_string())?;
    let r = classify(&m, &tol()).map_err(|e| e.to_string())?;
    ensure(r.form == Form::Constrained, || format!("{:?}", r.form))?;
    within("fit", r.fit, 1e-6)?;
    within("c", (r.c.unwrap() - target).abs(), 1e-8)?;
    within("φ", series_err(&r.phi.taylor_coeffs(64), &big_b), 1e-6)?;
    Ok(format!("fit {:.1e}", r.fit))
}

fn rotated_basis_distance() -> Result<String, String> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let a = SubspaceBasis::from_polys(&[poly(&[1.0]), poly(&[0.0, 1.0])], 8).map_err(|e| e.to_string())?;
    let b = SubspaceBasis::from_polys(&[poly(&[s, s]), poly(&[s, -s])], 8).map_err(|e| e.to_string())?;
    let d = subspace_distance(&a, &b);
    within("distance", d, 1e-12)?;
    Ok(format!("distance {d:.1e}"))
}

fn cli_forcing_example() -> Result<String, String> {
    use std::io::Write;
    use std::process::{Command, Stdio};
    let mut child = Command::new(env!("CARGO_BIN_EXE_real-hardy"))
        .arg("np")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .map_err(|e| e.to_string())?;
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"nodes":[[0.5,0.0]],"values":[[0.3,0.4]]}"#)
        .map_err(|e| e.to_string())?;
    let out = child.wait_with_output().map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(2), || format!("status {:?}", out.status.code()))?;
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    ensure(report["output"]["solvable"] == serde_json::Value::Bool(false), || "solvable flag".into())?;
    Ok("exit 2, solvable = false".into())
}

pub fn all() -> Vec<Fixture> {
    macro_rules! fixtures {
        ($($f:ident),* $(,)?) => { vec![$(Fixture { name: stringify!($f), run: $f }),*] };
    }
    fixtures![
        star_matches_grid_definition,
        phi_contracts_l2,
        multiply_matches_pointwise,
        pairing_matches_trapezoid,
        l1_norm_of_one_plus_z,
        phi_matches_conjugate_evaluation,
        grid_round_trip,
        conjugate_pair_blaschke_is_real,
        single_blaschke_unimodular,
        conjugate_function_analytic,
        outer_of_one_plus_half_z,
        outer_mean_log_equality,
        inner_outer_of_z2_minus_quarter,
        conjugate_pair_inner_is_real,
        riesz_of_square,
        pick_two_point_degenerate,
        forced_real_block_determinant,
        real_certificate,
        complex_node_pick_agrees_with_solver,
        np_solve_unique_solution,
        np_solve_two_points,
        real_interpolant_conjugate_node,
        cf_half_half,
        np_solve_real_self_check,
        geometric_mean_singular_weight,
        szego_outer_weight,
        two_bump_real_vs_complex,
        one_plus_z_two_three,
        wandering_vector_of_z2_minus_quarter,
        constant_generator_two_three,
        constructed_c_two,
        blaschke_times_constrained,
        rotated_basis_distance,
        cli_forcing_example,
    ]
}
