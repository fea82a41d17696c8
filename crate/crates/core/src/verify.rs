//! Grid-wide invariant suites behind `unruh-tangle verify`.
//!
//! Each suite walks the grid and stops at the first failing
//! `(r_b, r_c, quantity)` triple. The closed forms under test are passed in
//! through [`ClosedForms`] so a mutated formula can be checked against the
//! matrix oracle.

use std::f64::consts::FRAC_PI_4;
use std::fmt;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::Result;
use crate::sweep::{grid_axis, grid_points};
use crate::tangles::{
    self, delta_pi_series, one_tangle_single_acceleration, Pair, TangleReport, Vertex,
    ORACLE_AGREEMENT, PI_AGREEMENT, TWO_TANGLE_CEILING,
};
use crate::tensor::ComplexMatrix;
use crate::unruh::{rho_abici, two_mode_reductions, AccelPair};

/// Entrywise agreement with the printed density-matrix templates.
pub const TEMPLATE_AGREEMENT: f64 = 1e-14;
/// Exchange symmetry of the closed forms.
pub const SYMMETRY_AGREEMENT: f64 = 1e-13;
/// Single-acceleration formula vs. the general `C_I` formula at `r_b = 0`.
pub const SINGLE_ACCELERATION_AGREEMENT: f64 = 1e-15;
/// Series check is restricted to points with `max(r_b, r_c)` at most this.
pub const SERIES_WINDOW: f64 = 0.15;
/// `|Δπ − series| ≤ SERIES_RESIDUAL_CONSTANT · max(r_b, r_c)⁶` inside the window.
/// The leading omitted term is `−7(r_b⁶ + r_c⁶)/72`, so the ratio tends to
/// `7/36 ≈ 0.194` along the diagonal.
pub const SERIES_RESIDUAL_CONSTANT: f64 = 0.25;
/// Endpoint values are checked to this accuracy.
pub const ENDPOINT_AGREEMENT: f64 = 1e-12;

/// The closed-form families being verified.
#[derive(Clone, Copy)]
pub struct ClosedForms {
    pub corrected: fn(AccelPair, Vertex) -> f64,
    pub legacy: fn(AccelPair, Vertex) -> f64,
}

impl Default for ClosedForms {
    fn default() -> Self {
        Self {
            corrected: tangles::one_tangle_corrected,
            legacy: tangles::one_tangle_legacy,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub r_b: f64,
    pub r_c: f64,
    pub quantity: String,
    pub detail: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "r_b = {}, r_c = {}, {}: {}",
            self.r_b, self.r_c, self.quantity, self.detail
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checks: usize,
    pub failure: Option<Failure>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub grid_n: usize,
    pub suites: Vec<SuiteResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    pub fn first_failure(&self) -> Option<(&'static str, &Failure)> {
        self.suites
            .iter()
            .find_map(|s| s.failure.as_ref().map(|f| (s.name, f)))
    }

    pub fn render_table(&self) -> String {
        let mut out = format!("verification on a {0}×{0} grid\n", self.grid_n);
        for s in &self.suites {
            let status = if s.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!("  {status}  {:<28} {:>7} checks\n", s.name, s.checks));
        }
        out
    }
}

fn fail(p: AccelPair, quantity: impl Into<String>, detail: String) -> Failure {
    Failure {
        r_b: p.r_b(),
        r_c: p.r_c(),
        quantity: quantity.into(),
        detail,
    }
}

fn check_close(
    p: AccelPair,
    quantity: impl Into<String>,
    got: f64,
    expected: f64,
    tol: f64,
) -> Option<Failure> {
    let diff = (got - expected).abs();
    // NaN fails.
    if diff <= tol {
        None
    } else {
        Some(fail(
            p,
            quantity,
            format!("{got} vs {expected} (|Δ| = {diff:e} > {tol:e})"),
        ))
    }
}

/// Runs `check` over the points in parallel and reports the first failure in
/// grid order.
fn run_suite<F>(
    name: &'static str,
    points: &[AccelPair],
    checks_per_point: usize,
    check: F,
) -> SuiteResult
where
    F: Fn(AccelPair) -> Option<Failure> + Sync,
{
    let failures: Vec<Option<Failure>> = points.par_iter().map(|&p| check(p)).collect();
    SuiteResult {
        name,
        checks: points.len() * checks_per_point,
        failure: failures.into_iter().flatten().next(),
    }
}

fn error_failure(p: AccelPair, quantity: &str, e: crate::error::Error) -> Failure {
    fail(p, quantity, format!("pipeline error: {e}"))
}

/// `ρ_{A B_I C_I}` and its three partial transposes as printed, entry by entry.
pub mod templates {
    use super::*;

    fn base(p: AccelPair) -> (ComplexMatrix, f64) {
        let (sb, cb) = p.r_b().sin_cos();
        let (sc, cc) = p.r_c().sin_cos();
        let diag = [
            cb * cb * cc * cc / 2.0,
            cb * cb * sc * sc / 2.0,
            sb * sb * cc * cc / 2.0,
            sb * sb * sc * sc / 2.0,
            0.0,
            0.0,
            0.0,
            0.5,
        ];
        (
            ComplexMatrix::diagonal(&diag).expect("8 entries"),
            cb * cc / 2.0,
        )
    }

    fn with_coupling(p: AccelPair, i: usize, j: usize) -> ComplexMatrix {
        let (mut m, coupling) = base(p);
        m[(i, j)] = Complex64::new(coupling, 0.0);
        m[(j, i)] = Complex64::new(coupling, 0.0);
        m
    }

    pub fn rho(p: AccelPair) -> ComplexMatrix {
        with_coupling(p, 0, 7)
    }

    pub fn partial_transpose(p: AccelPair, vertex: Vertex) -> ComplexMatrix {
        match vertex {
            Vertex::A => with_coupling(p, 3, 4),
            Vertex::BI => with_coupling(p, 2, 5),
            Vertex::CI => with_coupling(p, 1, 6),
        }
    }
}

fn template_suite(points: &[AccelPair]) -> SuiteResult {
    run_suite("matrix templates", points, 4, |p| {
        let rho = rho_abici(p);
        let diff = rho.matrix().max_abs_diff(&templates::rho(p));
        if diff > TEMPLATE_AGREEMENT {
            return Some(fail(p, "rho_abici", format!("max entry deviation {diff:e}")));
        }
        for v in Vertex::ALL {
            let pt = match rho.partial_transpose(v.mode()) {
                Ok(m) => m,
                Err(e) => return Some(error_failure(p, &format!("T_{v}"), e)),
            };
            let diff = pt.max_abs_diff(&templates::partial_transpose(p, v));
            if diff > TEMPLATE_AGREEMENT {
                return Some(fail(p, format!("T_{v}"), format!("max entry deviation {diff:e}")));
            }
        }
        None
    })
}

fn oracle_suite(points: &[AccelPair], forms: ClosedForms) -> SuiteResult {
    run_suite("oracle equivalence", points, 3, |p| {
        let report = match TangleReport::compute(p) {
            Ok(r) => r,
            Err(e) => return Some(error_failure(p, "numeric one-tangles", e)),
        };
        Vertex::ALL.into_iter().find_map(|v| {
            check_close(
                p,
                format!("N_{v}"),
                (forms.corrected)(p, v),
                report.numeric(v),
                ORACLE_AGREEMENT,
            )
        })
    })
}

fn symmetry_suite(points: &[AccelPair], forms: ClosedForms) -> SuiteResult {
    run_suite("exchange symmetry", points, 6, |p| {
        let q = p.swapped();
        [("corrected", forms.corrected), ("legacy", forms.legacy)]
            .into_iter()
            .find_map(|(family, f)| {
                Vertex::ALL.into_iter().find_map(|v| {
                    check_close(
                        p,
                        format!("N_{v} ({family}) under r_b ↔ r_c"),
                        f(p, v),
                        f(q, v.mirrored()),
                        SYMMETRY_AGREEMENT,
                    )
                })
            })
    })
}

fn two_tangle_suite(points: &[AccelPair], forms: ClosedForms) -> SuiteResult {
    run_suite("two-tangles and π-tangle", points, 7, |p| {
        let reductions = two_mode_reductions(p);
        for pair in Pair::ALL {
            let n = match reductions
                .get(pair.0.mode(), pair.1.mode())
                .map(|rho| crate::spectra::negativity(rho, pair.0.mode()))
            {
                Some(Ok(n)) => n,
                Some(Err(e)) => return Some(error_failure(p, &format!("N_{pair}"), e)),
                None => unreachable!("every pair has a reduction"),
            };
            if tangles::exceeds(n.abs(), TWO_TANGLE_CEILING) {
                return Some(fail(p, format!("N_{pair}"), format!("{n:e} does not vanish")));
            }
        }
        let numeric = match tangles::pi_tangle(p, tangles::Family::Numeric) {
            Ok(x) => x,
            Err(e) => return Some(error_failure(p, "π numeric", e)),
        };
        let closed: f64 = Vertex::ALL
            .iter()
            .map(|&v| (forms.corrected)(p, v).powi(2))
            .sum::<f64>()
            / 3.0;
        check_close(p, "π-tangle", closed, numeric, PI_AGREEMENT)
    })
}

fn series_suite(points: &[AccelPair], forms: ClosedForms) -> SuiteResult {
    let window: Vec<AccelPair> = points
        .iter()
        .copied()
        .filter(|p| p.r_b().max(p.r_c()) <= SERIES_WINDOW)
        .collect();
    run_suite("Δπ series residual", &window, 1, |p| {
        let avg = |f: fn(AccelPair, Vertex) -> f64| {
            Vertex::ALL.iter().map(|&v| f(p, v).powi(2)).sum::<f64>() / 3.0
        };
        let delta = avg(forms.legacy) - avg(forms.corrected);
        let bound = SERIES_RESIDUAL_CONSTANT * p.r_b().max(p.r_c()).powi(6);
        check_close(p, "Δπ − series", delta, delta_pi_series(p), bound)
    })
}

fn single_acceleration_suite(grid_n: usize, forms: ClosedForms) -> SuiteResult {
    let points: Vec<AccelPair> = grid_axis(grid_n)
        .into_iter()
        .map(|r| AccelPair::new(0.0, r).expect("axis in range"))
        .collect();
    run_suite("single acceleration", &points, 1, |p| {
        let single = match one_tangle_single_acceleration(p.r_c()) {
            Ok(x) => x,
            Err(e) => return Some(error_failure(p, "N_C_I single", e)),
        };
        check_close(
            p,
            "N_C_I single vs general",
            single,
            (forms.corrected)(p, Vertex::CI),
            SINGLE_ACCELERATION_AGREEMENT,
        )
    })
}

fn endpoint_suite(forms: ClosedForms) -> SuiteResult {
    let corner = AccelPair::new(FRAC_PI_4, FRAC_PI_4).expect("in range");
    let origin = AccelPair::new(0.0, 0.0).expect("in range");
    let infinite = (17f64.sqrt() - 1.0) / 8.0;
    run_suite("endpoints", &[origin, corner], 3, |p| {
        let expected = if p == corner { infinite } else { 1.0 };
        Vertex::ALL.into_iter().find_map(|v| {
            check_close(
                p,
                format!("N_{v}"),
                (forms.corrected)(p, v),
                expected,
                ENDPOINT_AGREEMENT,
            )
        })
    })
}

/// Runs every suite on a `grid_n × grid_n` grid with the library's formulas.
pub fn run(grid_n: usize) -> Result<VerifyReport> {
    run_with(grid_n, ClosedForms::default())
}

pub fn run_with(grid_n: usize, forms: ClosedForms) -> Result<VerifyReport> {
    if !(2..=crate::sweep::MAX_GRID).contains(&grid_n) {
        return Err(crate::error::Error::InvalidConfig(format!(
            "grid size {grid_n} outside [2, {}]",
            crate::sweep::MAX_GRID
        )));
    }
    let points = grid_points(grid_n);
    Ok(VerifyReport {
        grid_n,
        suites: vec![
            endpoint_suite(forms),
            template_suite(&points),
            oracle_suite(&points, forms),
            symmetry_suite(&points, forms),
            two_tangle_suite(&points, forms),
            single_acceleration_suite(grid_n, forms),
            series_suite(&points, forms),
        ],
    })
}
