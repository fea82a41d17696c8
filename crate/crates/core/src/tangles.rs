//! One-tangles, two-tangles and π-tangle of `ρ_{A B_I C_I}`.
//!
//! Three families are evaluated side by side:
//!
//! * **corrected**: closed forms read off the 2×2 coupling block of each
//!   partial transpose,
//! * **legacy**: the earlier, incorrect closed forms, kept so the
//!   difference surfaces can be reproduced,
//! * **numeric**: partial transpose, Jacobi spectrum and trace norm of the
//!   assembled density matrix, used as the oracle for the other two.
//!
//! Every Δ is *legacy minus corrected*.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::mode::ModeLabel;
use crate::spectra::negativity;
use crate::tensor::DensityMatrix;
use crate::unruh::{check_range, rho_abici, two_mode_reductions, AccelPair, TwoModeReductions};

/// Closed form vs. matrix oracle, per one-tangle.
pub const ORACLE_AGREEMENT: f64 = 1e-11;
/// Full π-tangle (with explicit two-tangles) vs. the squared-one-tangle average.
pub const PI_AGREEMENT: f64 = 1e-10;
/// Largest two-tangle still treated as vanishing.
pub const TWO_TANGLE_CEILING: f64 = 1e-11;
/// Slack on the `[0, 1]` range of negativities and π-tangles.
pub const RANGE_SLACK: f64 = 1e-12;

/// The party singled out by a one-tangle `N_{α(βγ)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Vertex {
    A,
    BI,
    CI,
}

impl Vertex {
    pub const ALL: [Vertex; 3] = [Vertex::A, Vertex::BI, Vertex::CI];

    pub fn mode(self) -> ModeLabel {
        match self {
            Vertex::A => ModeLabel::A,
            Vertex::BI => ModeLabel::BI,
            Vertex::CI => ModeLabel::CI,
        }
    }

    /// The vertex that plays this one's role once Bob and Charlie swap.
    pub fn mirrored(self) -> Vertex {
        match self {
            Vertex::A => Vertex::A,
            Vertex::BI => Vertex::CI,
            Vertex::CI => Vertex::BI,
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.mode().fmt(f)
    }
}

/// Ordered pair `(α, β)` of a two-tangle `N_{αβ}`; the partial transpose is
/// taken over `α`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Pair(pub Vertex, pub Vertex);

impl Pair {
    pub const ALL: [Pair; 6] = [
        Pair(Vertex::A, Vertex::BI),
        Pair(Vertex::A, Vertex::CI),
        Pair(Vertex::BI, Vertex::A),
        Pair(Vertex::BI, Vertex::CI),
        Pair(Vertex::CI, Vertex::A),
        Pair(Vertex::CI, Vertex::BI),
    ];
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.0, self.1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Corrected,
    Legacy,
    Numeric,
}

struct Trig {
    sb: f64,
    cb: f64,
    sc: f64,
    cc: f64,
}

impl Trig {
    fn of(p: AccelPair) -> Self {
        let (sb, cb) = p.r_b().sin_cos();
        let (sc, cc) = p.r_c().sin_cos();
        Self { sb, cb, sc, cc }
    }
}

/// Corrected one-tangle `N_{α(βγ)}` in closed form.
pub fn one_tangle_corrected(p: AccelPair, vertex: Vertex) -> f64 {
    let Trig { sb, cb, sc, cc } = Trig::of(p);
    let (sb2, sc2) = (sb * sb, sc * sc);
    let (sb4, sc4) = (sb2 * sb2, sc2 * sc2);
    match vertex {
        Vertex::A => 0.5 * ((sb4 * sc4 + 4.0 * cb * cb * cc * cc).sqrt() - sb2 * sc2),
        Vertex::BI => 0.5 * cc * ((sb4 * (cc * cc) + 4.0 * (cb * cb)).sqrt() - sb2 * cc),
        Vertex::CI => 0.5 * cb * ((cb * cb * sc4 + 4.0 * (cc * cc)).sqrt() - cb * sc2),
    }
}

/// The earlier closed forms, evaluated as written (symmetrized in `r_b ↔ r_c`).
pub fn one_tangle_legacy(p: AccelPair, vertex: Vertex) -> f64 {
    let Trig { sb, cb, sc, cc } = Trig::of(p);
    let (sb2, sc2) = (sb * sb, sc * sc);
    let (sb4, sc4) = (sb2 * sb2, sc2 * sc2);
    let cbcc = cb * cc;
    match vertex {
        Vertex::A => 0.5 * (cbcc - sb2 * sc2 + (sb4 * sc4 + cb * cb * cc * cc).sqrt()),
        Vertex::BI => 0.5 * (cbcc - sb2 * (cc * cc) + cc * (sb4 * (cc * cc) + cb * cb).sqrt()),
        Vertex::CI => 0.5 * (cbcc - cb * cb * sc2 + cb * (cb * cb * sc4 + cc * cc).sqrt()),
    }
}

/// `N_{C_I(AB_I)}` when only Charlie accelerates.
pub fn one_tangle_single_acceleration(r_c: f64) -> Result<f64> {
    check_range("r_c", r_c)?;
    let (s, c) = r_c.sin_cos();
    let s2 = s * s;
    let s4 = s2 * s2;
    Ok(0.5 * ((s4 + 4.0 * (c * c)).sqrt() - s2))
}

/// One-tangle from the matrix pipeline: `‖ρ^{T_α}‖₁ − 1`.
pub fn one_tangle_numeric(p: AccelPair, vertex: Vertex) -> Result<f64> {
    negativity(&rho_abici(p), vertex.mode())
}

fn two_tangle_of(reductions: &TwoModeReductions, pair: Pair) -> Result<f64> {
    let rho: &DensityMatrix = reductions
        .get(pair.0.mode(), pair.1.mode())
        .expect("pairs of distinct region I vertices always have a reduction");
    negativity(rho, pair.0.mode())
}

/// Two-tangle `N_{αβ}`: negativity of the two-mode reduction.
pub fn two_tangle(p: AccelPair, pair: Pair) -> Result<f64> {
    two_tangle_of(&two_mode_reductions(p), pair)
}

fn average_of_squares(n: [f64; 3]) -> f64 {
    (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]) / 3.0
}

fn closed_forms(p: AccelPair, f: fn(AccelPair, Vertex) -> f64) -> [f64; 3] {
    Vertex::ALL.map(|v| f(p, v))
}

/// π-tangle. Closed-form families use the average of squared one-tangles;
/// the numeric family subtracts explicitly computed two-tangles.
pub fn pi_tangle(p: AccelPair, family: Family) -> Result<f64> {
    match family {
        Family::Corrected => Ok(average_of_squares(closed_forms(p, one_tangle_corrected))),
        Family::Legacy => Ok(average_of_squares(closed_forms(p, one_tangle_legacy))),
        Family::Numeric => {
            let rho = rho_abici(p);
            let ones = [
                negativity(&rho, ModeLabel::A)?,
                negativity(&rho, ModeLabel::BI)?,
                negativity(&rho, ModeLabel::CI)?,
            ];
            let twos = TwoTangles::compute(&two_mode_reductions(p))?;
            Ok(pi_from_parts(ones, &twos))
        }
    }
}

/// `(π_A + π_B + π_C)/3` with `π_α = N²_{α(βγ)} − N²_{αβ} − N²_{αγ}`.
fn pi_from_parts(ones: [f64; 3], twos: &TwoTangles) -> f64 {
    let residual = |i: usize, v: Vertex| {
        let others: Vec<Vertex> = Vertex::ALL.into_iter().filter(|&w| w != v).collect();
        let n1 = twos.get(Pair(v, others[0]));
        let n2 = twos.get(Pair(v, others[1]));
        ones[i] * ones[i] - n1 * n1 - n2 * n2
    };
    (residual(0, Vertex::A) + residual(1, Vertex::BI) + residual(2, Vertex::CI)) / 3.0
}

/// `x > tol`, with NaN counted as exceeding.
pub(crate) fn exceeds(x: f64, tol: f64) -> bool {
    x.is_nan() || x > tol
}

/// Legacy-minus-corrected differences at one point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DeltaSurfaces {
    pub n_a: f64,
    pub n_bi: f64,
    pub n_ci: f64,
    pub pi: f64,
}

pub fn delta_surfaces(p: AccelPair) -> DeltaSurfaces {
    let legacy = closed_forms(p, one_tangle_legacy);
    let corrected = closed_forms(p, one_tangle_corrected);
    DeltaSurfaces {
        n_a: legacy[0] - corrected[0],
        n_bi: legacy[1] - corrected[1],
        n_ci: legacy[2] - corrected[2],
        pi: average_of_squares(legacy) - average_of_squares(corrected),
    }
}

/// Small-acceleration polynomial for Δπ:
/// `(r_b⁴ + r_c⁴)/12 − r_b² r_c² (r_b² + r_c²)/6 + 13 r_b⁴ r_c⁴/36`.
pub fn delta_pi_series(p: AccelPair) -> f64 {
    let b2 = p.r_b() * p.r_b();
    let c2 = p.r_c() * p.r_c();
    let (b4, c4) = (b2 * b2, c2 * c2);
    (b4 + c4) / 12.0 - b2 * c2 * (b2 + c2) / 6.0 + 13.0 * b4 * c4 / 36.0
}

/// The six two-tangles, named `<transposed><other>`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TwoTangles {
    pub a_bi: f64,
    pub a_ci: f64,
    pub bi_a: f64,
    pub bi_ci: f64,
    pub ci_a: f64,
    pub ci_bi: f64,
}

impl TwoTangles {
    fn compute(reductions: &TwoModeReductions) -> Result<Self> {
        let n = |pair| two_tangle_of(reductions, pair);
        Ok(Self {
            a_bi: n(Pair::ALL[0])?,
            a_ci: n(Pair::ALL[1])?,
            bi_a: n(Pair::ALL[2])?,
            bi_ci: n(Pair::ALL[3])?,
            ci_a: n(Pair::ALL[4])?,
            ci_bi: n(Pair::ALL[5])?,
        })
    }

    pub fn get(&self, pair: Pair) -> f64 {
        use Vertex::*;
        match pair {
            Pair(A, BI) => self.a_bi,
            Pair(A, CI) => self.a_ci,
            Pair(BI, A) => self.bi_a,
            Pair(BI, CI) => self.bi_ci,
            Pair(CI, A) => self.ci_a,
            Pair(CI, BI) => self.ci_bi,
            Pair(a, b) => panic!("two-tangle needs distinct vertices, got {a}{b}"),
        }
    }

    pub fn max(&self) -> f64 {
        Pair::ALL.iter().map(|&p| self.get(p)).fold(f64::MIN, f64::max)
    }
}

/// Every quantity at one `(r_b, r_c)` point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TangleReport {
    pub params: AccelPair,
    pub n_a: f64,
    pub n_bi: f64,
    pub n_ci: f64,
    pub n_a_legacy: f64,
    pub n_bi_legacy: f64,
    pub n_ci_legacy: f64,
    pub n_a_numeric: f64,
    pub n_bi_numeric: f64,
    pub n_ci_numeric: f64,
    pub two_tangles: TwoTangles,
    pub pi_corrected: f64,
    pub pi_legacy: f64,
    pub pi_numeric: f64,
    pub delta: DeltaSurfaces,
    pub delta_pi_series: f64,
}

impl TangleReport {
    pub fn compute(p: AccelPair) -> Result<Self> {
        let corrected = closed_forms(p, one_tangle_corrected);
        let legacy = closed_forms(p, one_tangle_legacy);
        let rho = rho_abici(p);
        let numeric = [
            negativity(&rho, ModeLabel::A)?,
            negativity(&rho, ModeLabel::BI)?,
            negativity(&rho, ModeLabel::CI)?,
        ];
        let two_tangles = TwoTangles::compute(&two_mode_reductions(p))?;
        Ok(Self {
            params: p,
            n_a: corrected[0],
            n_bi: corrected[1],
            n_ci: corrected[2],
            n_a_legacy: legacy[0],
            n_bi_legacy: legacy[1],
            n_ci_legacy: legacy[2],
            n_a_numeric: numeric[0],
            n_bi_numeric: numeric[1],
            n_ci_numeric: numeric[2],
            two_tangles,
            pi_corrected: average_of_squares(corrected),
            pi_legacy: average_of_squares(legacy),
            pi_numeric: pi_from_parts(numeric, &two_tangles),
            delta: delta_surfaces(p),
            delta_pi_series: delta_pi_series(p),
        })
    }

    pub fn corrected(&self, v: Vertex) -> f64 {
        [self.n_a, self.n_bi, self.n_ci][v as usize]
    }

    pub fn legacy(&self, v: Vertex) -> f64 {
        [self.n_a_legacy, self.n_bi_legacy, self.n_ci_legacy][v as usize]
    }

    pub fn numeric(&self, v: Vertex) -> f64 {
        [self.n_a_numeric, self.n_bi_numeric, self.n_ci_numeric][v as usize]
    }

    /// Human-readable descriptions of every broken invariant; empty when the
    /// closed forms, the matrix oracle and the range bounds all agree.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let in_unit = |x: f64| (-RANGE_SLACK..=1.0 + RANGE_SLACK).contains(&x);
        for v in Vertex::ALL {
            let diff = (self.corrected(v) - self.numeric(v)).abs();
            if exceeds(diff, ORACLE_AGREEMENT) {
                out.push(format!(
                    "N_{v}: closed form {} vs matrix oracle {} (|Δ| = {diff:e})",
                    self.corrected(v),
                    self.numeric(v)
                ));
            }
            for (label, x) in [
                ("corrected", self.corrected(v)),
                ("legacy", self.legacy(v)),
                ("numeric", self.numeric(v)),
            ] {
                if !in_unit(x) {
                    out.push(format!("N_{v} ({label}) = {x} outside [0, 1]"));
                }
            }
        }
        for pair in Pair::ALL {
            let n = self.two_tangles.get(pair);
            if exceeds(n.abs(), TWO_TANGLE_CEILING) {
                out.push(format!("two-tangle N_{pair} = {n:e} does not vanish"));
            }
        }
        let diff = (self.pi_numeric - self.pi_corrected).abs();
        if exceeds(diff, PI_AGREEMENT) {
            out.push(format!(
                "π-tangle: numeric {} vs corrected {} (|Δ| = {diff:e})",
                self.pi_numeric, self.pi_corrected
            ));
        }
        for (label, x) in [
            ("corrected", self.pi_corrected),
            ("legacy", self.pi_legacy),
            ("numeric", self.pi_numeric),
        ] {
            if !in_unit(x) {
                out.push(format!("π-tangle ({label}) = {x} outside [0, 1]"));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_4, FRAC_PI_8};

    fn pair(b: f64, c: f64) -> AccelPair {
        AccelPair::new(b, c).unwrap()
    }

    fn corner() -> AccelPair {
        pair(FRAC_PI_4, FRAC_PI_4)
    }

    // (√17 − 1)/8 and (1 + √5)/8.
    fn corrected_corner() -> f64 {
        (17f64.sqrt() - 1.0) / 8.0
    }

    fn legacy_corner() -> f64 {
        (1.0 + 5f64.sqrt()) / 8.0
    }

    #[test]
    fn corrected_infinite_acceleration() {
        for v in Vertex::ALL {
            let n = one_tangle_corrected(corner(), v);
            assert!((n - corrected_corner()).abs() < 1e-15, "{v}: {n}");
        }
        assert!((corrected_corner() - 0.390_388_20).abs() < 1e-8);
    }

    #[test]
    fn inertial_limit_is_one() {
        for v in Vertex::ALL {
            assert_eq!(one_tangle_corrected(pair(0.0, 0.0), v), 1.0);
            assert_eq!(one_tangle_legacy(pair(0.0, 0.0), v), 1.0);
        }
    }

    #[test]
    fn pi_over_eight_matches_high_precision_value() {
        // 40-digit evaluation of the closed form at (π/8, π/8).
        let expected = 0.842_897_442_383_441_8;
        let n = one_tangle_corrected(pair(FRAC_PI_8, FRAC_PI_8), Vertex::A);
        assert!((n - expected).abs() < 1e-15);
        let numeric = one_tangle_numeric(pair(FRAC_PI_8, FRAC_PI_8), Vertex::A).unwrap();
        assert!((numeric - n).abs() < 1e-11);
    }

    #[test]
    fn legacy_infinite_acceleration_is_positive() {
        let n = one_tangle_legacy(corner(), Vertex::A);
        assert!((n - legacy_corner()).abs() < 1e-15);
        assert!((n - 0.404_508_50).abs() < 1e-8);
    }

    #[test]
    fn legacy_and_corrected_agree_for_a_on_the_bob_axis() {
        for r in [0.05, 0.3, 0.6, FRAC_PI_4] {
            let p = pair(r, 0.0);
            assert!((one_tangle_legacy(p, Vertex::A) - r.cos()).abs() < 1e-15);
            assert!((one_tangle_corrected(p, Vertex::A) - r.cos()).abs() < 1e-15);
            assert!(delta_surfaces(p).n_a.abs() < 1e-15);
            assert!(delta_surfaces(p).n_ci.abs() < 1e-15);
        }
    }

    #[test]
    fn single_acceleration_values() {
        assert_eq!(one_tangle_single_acceleration(0.0).unwrap(), 1.0);
        assert!((one_tangle_single_acceleration(FRAC_PI_4).unwrap() - 0.5).abs() < 1e-15);
        assert!(one_tangle_single_acceleration(1.0).is_err());
        for k in 0..=100 {
            let r = FRAC_PI_4 * k as f64 / 100.0;
            assert_eq!(
                one_tangle_single_acceleration(r).unwrap(),
                one_tangle_corrected(pair(0.0, r), Vertex::CI)
            );
        }
    }

    #[test]
    fn two_tangles_vanish_at_probe_points() {
        for p in [pair(0.0, 0.0), corner(), pair(0.5, 0.3)] {
            for pr in Pair::ALL {
                assert!(two_tangle(p, pr).unwrap().abs() <= 1e-11, "{pr} at {p:?}");
            }
        }
    }

    #[test]
    fn pi_tangle_families() {
        for f in [Family::Corrected, Family::Legacy, Family::Numeric] {
            assert!((pi_tangle(pair(0.0, 0.0), f).unwrap() - 1.0).abs() < 1e-12);
        }
        let pc = pi_tangle(corner(), Family::Corrected).unwrap();
        assert!((pc - corrected_corner().powi(2)).abs() < 1e-15);
        assert!((pc - 0.152_403).abs() < 1e-6);
        let pl = pi_tangle(corner(), Family::Legacy).unwrap();
        assert!((pl - legacy_corner().powi(2)).abs() < 1e-15);
        assert!((pl - 0.163_627).abs() < 1e-6);
        let pn = pi_tangle(corner(), Family::Numeric).unwrap();
        assert!((pn - pc).abs() < 1e-10);
    }

    #[test]
    fn delta_surface_values() {
        assert_eq!(
            delta_surfaces(pair(0.0, 0.0)),
            DeltaSurfaces { n_a: 0.0, n_bi: 0.0, n_ci: 0.0, pi: 0.0 }
        );
        // 40-digit value of the corner difference.
        let d = delta_surfaces(corner());
        assert!((d.pi - 0.011_224_175_097_420_32).abs() < 1e-15);

        let r: f64 = 0.2;
        let (s, c) = r.sin_cos();
        let expected = 0.5 * (c - s * s + (s.powi(4) + c * c).sqrt())
            - 0.5 * ((s.powi(4) + 4.0 * c * c).sqrt() - s * s);
        let d = delta_surfaces(pair(r, 0.0));
        assert!((d.n_bi - expected).abs() < 1e-15);
    }

    #[test]
    fn sign_convention_on_the_axis() {
        // Δπ ≈ r⁴/12 with a relative correction of order r².
        for r in [0.01, 0.02, 0.05] {
            let d = delta_surfaces(pair(r, 0.0)).pi;
            let lead = r.powi(4) / 12.0;
            assert!(d > 0.0);
            assert!(((d - lead) / lead).abs() < 2.0 * r * r, "r = {r}");
        }
    }

    #[test]
    fn series_values() {
        assert_eq!(delta_pi_series(pair(0.0, 0.0)), 0.0);
        assert!((delta_pi_series(pair(0.1, 0.0)) - 1e-4 / 12.0).abs() < 1e-18);
        // 2e-4/12 − 2e-6/6 + 13e-8/36
        let expected = 2e-4 / 12.0 - 2e-6 / 6.0 + 13e-8 / 36.0;
        assert!((delta_pi_series(pair(0.1, 0.1)) - expected).abs() < 1e-18);
        assert!((expected - 1.633_694_444_4e-5).abs() < 1e-14);
    }

    #[test]
    fn report_is_consistent() {
        let report = TangleReport::compute(pair(0.3, 0.6)).unwrap();
        assert!(report.violations().is_empty(), "{:?}", report.violations());
        assert_eq!(report.corrected(Vertex::BI), report.n_bi);
        assert!(report.two_tangles.max() <= 1e-11);
    }

    #[test]
    fn report_flags_broken_oracle_agreement() {
        let mut report = TangleReport::compute(corner()).unwrap();
        report.n_bi += 1e-6;
        let v = report.violations();
        assert_eq!(v.len(), 1);
        assert!(v[0].starts_with("N_B_I"), "{v:?}");
    }
}
