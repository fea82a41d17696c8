//! Cross-checks against routes that share no code with the library:
//! closed-form characteristic roots, explicit tensor-index partial
//! transposes, and grid-wide invariants of the model.

use std::f64::consts::{FRAC_PI_3, FRAC_PI_4, FRAC_PI_8};

use num_complex::Complex64;
use proptest::prelude::*;

use unruh_tangle::spectra::{hermitian_eigenvalues, negativity, trace_norm};
use unruh_tangle::sweep::{grid_points, Quantity, SweepTable};
use unruh_tangle::tangles::{delta_surfaces, one_tangle_corrected, Vertex};
use unruh_tangle::{build_phi, rho_abici, two_mode_reductions, AccelPair, ComplexMatrix, ModeLabel};

fn hermitian(n: usize, re: &[f64], im: &[f64]) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(n).unwrap();
    let mut k = 0;
    for i in 0..n {
        m[(i, i)] = Complex64::new(re[k], 0.0);
        k += 1;
        for j in i + 1..n {
            let z = Complex64::new(re[k], im[k]);
            m[(i, j)] = z;
            m[(j, i)] = z.conj();
            k += 1;
        }
    }
    m
}

/// Roots of the 2×2 characteristic polynomial.
fn roots2(m: &ComplexMatrix) -> [f64; 2] {
    let (a, d) = (m[(0, 0)].re, m[(1, 1)].re);
    let b2 = m[(0, 1)].norm_sqr();
    let mean = 0.5 * (a + d);
    let r = (0.25 * (a - d).powi(2) + b2).sqrt();
    [mean - r, mean + r]
}

/// Roots of the 3×3 characteristic polynomial via the trigonometric form.
fn roots3(m: &ComplexMatrix) -> [f64; 3] {
    let (a, d, f) = (m[(0, 0)].re, m[(1, 1)].re, m[(2, 2)].re);
    let (b, c, e) = (m[(0, 1)], m[(0, 2)], m[(1, 2)]);
    let p1 = b.norm_sqr() + c.norm_sqr() + e.norm_sqr();
    let q = (a + d + f) / 3.0;
    let p2 = (a - q).powi(2) + (d - q).powi(2) + (f - q).powi(2) + 2.0 * p1;
    let p = (p2 / 6.0).sqrt();
    if p == 0.0 {
        return [q; 3];
    }
    // det((M − qI)/p) for a Hermitian 3×3.
    let (x, y, z) = ((a - q) / p, (d - q) / p, (f - q) / p);
    let (b, c, e) = (b / p, c / p, e / p);
    let det = x * y * z + 2.0 * (b * e * c.conj()).re
        - x * e.norm_sqr()
        - y * c.norm_sqr()
        - z * b.norm_sqr();
    let phi = (det / 2.0).clamp(-1.0, 1.0).acos() / 3.0;
    let hi = q + 2.0 * p * phi.cos();
    let lo = q + 2.0 * p * (phi + 2.0 * FRAC_PI_3).cos();
    [lo, 3.0 * q - hi - lo, hi]
}

proptest! {
    #[test]
    fn eigenvalues_match_2x2_roots(re in prop::collection::vec(-1.0f64..1.0, 3),
                                   im in prop::collection::vec(-1.0f64..1.0, 3)) {
        let m = hermitian(2, &re, &im);
        let got = hermitian_eigenvalues(&m).unwrap();
        for (g, e) in got.eigenvalues().iter().zip(roots2(&m)) {
            prop_assert!((g - e).abs() <= 1e-12, "{} vs {}", g, e);
        }
    }

    #[test]
    fn eigenvalues_match_3x3_roots(re in prop::collection::vec(-1.0f64..1.0, 6),
                                   im in prop::collection::vec(-1.0f64..1.0, 6)) {
        let m = hermitian(3, &re, &im);
        let got = hermitian_eigenvalues(&m).unwrap();
        let mut expected = roots3(&m);
        expected.sort_by(f64::total_cmp);
        for (g, e) in got.eigenvalues().iter().zip(expected) {
            prop_assert!((g - e).abs() <= 1e-12, "{} vs {}", g, e);
        }
    }
}

/// ρ^{T_k} by explicit sums over |a b c⟩⟨a' b' c'| index tuples.
fn brute_force_partial_transpose(rho: &ComplexMatrix, k: usize) -> ComplexMatrix {
    let idx = |t: [usize; 3]| t[0] * 4 + t[1] * 2 + t[2];
    let mut out = ComplexMatrix::zeros(8).unwrap();
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for a2 in 0..2 {
                    for b2 in 0..2 {
                        for c2 in 0..2 {
                            let mut row = [a, b, c];
                            let mut col = [a2, b2, c2];
                            let value = rho[(idx(row), idx(col))];
                            std::mem::swap(&mut row[k], &mut col[k]);
                            out[(idx(row), idx(col))] = value;
                        }
                    }
                }
            }
        }
    }
    out
}

#[test]
fn partial_transpose_matches_brute_force() {
    for p in grid_points(9) {
        let rho = rho_abici(p);
        for (k, v) in Vertex::ALL.into_iter().enumerate() {
            let lib = rho.partial_transpose(v.mode()).unwrap();
            assert_eq!(lib, brute_force_partial_transpose(rho.matrix(), k));
        }
    }
}

#[test]
fn one_tangle_oracle_from_coupling_block() {
    // Quadratic formula on the only non-diagonal block of ρ^{T_A}.
    let p = AccelPair::new(FRAC_PI_8, FRAC_PI_8).unwrap();
    let (s, c) = FRAC_PI_8.sin_cos();
    let a = s.powi(4) / 2.0;
    let b = c * c / 2.0;
    let negative = 0.5 * (a - (a * a + 4.0 * b * b).sqrt());
    let oracle = 2.0 * negative.abs();
    assert!((oracle - 0.842_897_442_383_441_8).abs() < 1e-14);
    assert!((one_tangle_corrected(p, Vertex::A) - oracle).abs() < 1e-14);
    let numeric = negativity(&rho_abici(p), ModeLabel::A).unwrap();
    assert!((numeric - oracle).abs() < 1e-12);
}

#[test]
fn trace_norm_at_infinite_acceleration() {
    let p = AccelPair::new(FRAC_PI_4, FRAC_PI_4).unwrap();
    let pt = rho_abici(p).partial_transpose(ModeLabel::A).unwrap();
    let expected = 1.0 + (17f64.sqrt() - 1.0) / 8.0;
    assert!((trace_norm(&pt).unwrap() - expected).abs() < 1e-14);
}

#[test]
fn inertial_single_mode_reduction() {
    let rho = rho_abici(AccelPair::new(0.0, 0.0).unwrap());
    let a = rho.partial_trace(&[ModeLabel::A]).unwrap();
    assert!(a.matrix().max_abs_diff(&ComplexMatrix::diagonal(&[0.5, 0.5]).unwrap()) < 1e-15);
}

#[test]
fn model_invariants_on_the_grid() {
    let low = (17f64.sqrt() - 1.0) / 8.0;
    for p in grid_points(33) {
        assert!((build_phi(p).norm_sqr() - 1.0).abs() <= 1e-12);

        let rho = rho_abici(p);
        assert!((trace_norm(rho.matrix()).unwrap() - 1.0).abs() <= 1e-11);

        // B_I ↔ C_I bit swap realizes r_b ↔ r_c.
        let swapped = rho_abici(p.swapped());
        let swap = |i: usize| (i & 0b100) | ((i & 0b010) >> 1) | ((i & 0b001) << 1);
        for i in 0..8 {
            for j in 0..8 {
                let d = rho.matrix()[(i, j)] - swapped.matrix()[(swap(i), swap(j))];
                assert!(d.norm() <= 1e-14);
            }
        }

        for v in Vertex::ALL {
            let n = one_tangle_corrected(p, v);
            assert!(n >= low - 1e-12 && n <= 1.0 + 1e-12, "{v} at {p:?}: {n}");
            assert!(negativity(&rho, v.mode()).unwrap() >= -1e-12);
        }

        let r = two_mode_reductions(p);
        for reduced in [&r.ab, &r.ac, &r.bc] {
            assert!((reduced.matrix().trace().re - 1.0).abs() <= 1e-12);
            assert!(negativity(reduced, reduced.modes()[1]).unwrap().abs() <= 1e-11);
        }

        let d = delta_surfaces(p);
        for x in [d.n_a, d.n_bi, d.n_ci, d.pi] {
            assert!(x >= -1e-12, "negative delta {x} at {p:?}");
        }
    }
}

#[test]
fn delta_pi_grows_toward_large_accelerations() {
    let t = SweepTable::evaluate(17, &[Quantity::Deltas]).unwrap();
    let dpi = t.column("delta_pi").unwrap();
    let n = 17;
    // Non-decreasing along the diagonal and both axes; the maximum sits on
    // the outer edge of the square.
    let rays: [Box<dyn Fn(usize) -> usize>; 3] = [
        Box::new(|i| i * n + i),
        Box::new(|i| i * n),
        Box::new(|i| i),
    ];
    for ray in &rays {
        let values: Vec<f64> = (0..n).map(|i| dpi[ray(i)]).collect();
        assert!(values.windows(2).all(|w| w[1] >= w[0]), "{values:?}");
    }
    let argmax = (0..dpi.len()).max_by(|&a, &b| dpi[a].total_cmp(&dpi[b])).unwrap();
    assert!(argmax / n == n - 1 || argmax % n == n - 1);
}

#[test]
fn parallel_and_sequential_sweeps_are_bitwise_identical() {
    let q = Quantity::ALL;
    let par = SweepTable::evaluate(17, &q).unwrap();
    let seq = SweepTable::evaluate_sequential(17, &q).unwrap();
    assert_eq!(par.rows.len(), seq.rows.len());
    for (a, b) in par.rows.iter().zip(&seq.rows) {
        let a: Vec<u64> = a.iter().map(|x| x.to_bits()).collect();
        let b: Vec<u64> = b.iter().map(|x| x.to_bits()).collect();
        assert_eq!(a, b);
    }
}
