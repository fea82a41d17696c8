//! The GHZ state shared by Alice, Bob and Charlie after Bob's and Charlie's
//! modes are expanded in Rindler region I/II modes.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mode::ModeLabel::{self, A, BI, BII, CI, CII};
use crate::tensor::{outer, DensityMatrix, PureState};

/// Acceleration parameters of Bob (`r_b`) and Charlie (`r_c`), each in
/// `[0, π/4]`. Zero is inertial; `π/4` is the infinite-acceleration limit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AccelPair {
    r_b: f64,
    r_c: f64,
}

impl AccelPair {
    pub fn new(r_b: f64, r_c: f64) -> Result<Self> {
        check_range("r_b", r_b)?;
        check_range("r_c", r_c)?;
        Ok(Self { r_b, r_c })
    }

    pub fn r_b(self) -> f64 {
        self.r_b
    }

    pub fn r_c(self) -> f64 {
        self.r_c
    }

    /// Bob and Charlie exchanged.
    pub fn swapped(self) -> Self {
        Self {
            r_b: self.r_c,
            r_c: self.r_b,
        }
    }
}

pub(crate) fn check_range(name: &'static str, value: f64) -> Result<()> {
    if (0.0..=FRAC_PI_4).contains(&value) {
        Ok(())
    } else {
        Err(Error::OutOfRange { name, value })
    }
}

/// Mode order of the full five-mode state.
pub const FULL_MODES: [ModeLabel; 5] = [A, BI, BII, CI, CII];

/// Modes accessible to the three observers.
pub const REGION_I_MODES: [ModeLabel; 3] = [A, BI, CI];

/// Five-mode state over `(A, B_I, B_II, C_I, C_II)`:
///
/// ```text
/// (1/√2) [ cos r_b cos r_c |00000⟩ + cos r_b sin r_c |00011⟩
///        + sin r_b cos r_c |01100⟩ + sin r_b sin r_c |01111⟩ + |11010⟩ ]
/// ```
pub fn build_phi(p: AccelPair) -> PureState {
    let (sb, cb) = p.r_b.sin_cos();
    let (sc, cc) = p.r_c.sin_cos();
    let mut amps = vec![Complex64::new(0.0, 0.0); 32];
    for (index, weight) in [
        (0b00000, cb * cc),
        (0b00011, cb * sc),
        (0b01100, sb * cc),
        (0b01111, sb * sc),
        (0b11010, 1.0),
    ] {
        amps[index] = Complex64::new(FRAC_1_SQRT_2 * weight, 0.0);
    }
    PureState::new(FULL_MODES.to_vec(), amps).expect("32 amplitudes over 5 distinct modes")
}

/// `ρ_{A B_I C_I}`: the five-mode projector with both region II modes traced out.
pub fn rho_abici(p: AccelPair) -> DensityMatrix {
    outer(&build_phi(p))
        .and_then(|full| full.partial_trace(&REGION_I_MODES))
        .expect("build_phi is normalized and carries every region I mode")
}

/// The three two-mode reductions of [`rho_abici`].
#[derive(Debug, Clone, PartialEq)]
pub struct TwoModeReductions {
    pub ab: DensityMatrix,
    pub ac: DensityMatrix,
    pub bc: DensityMatrix,
}

impl TwoModeReductions {
    /// Reduction over the unordered pair `{first, second}`.
    pub fn get(&self, first: ModeLabel, second: ModeLabel) -> Option<&DensityMatrix> {
        match (first.min(second), first.max(second)) {
            (A, BI) => Some(&self.ab),
            (A, CI) => Some(&self.ac),
            (BI, CI) => Some(&self.bc),
            _ => None,
        }
    }
}

pub fn two_mode_reductions(p: AccelPair) -> TwoModeReductions {
    let rho = rho_abici(p);
    let reduce = |keep: [ModeLabel; 2]| {
        rho.partial_trace(&keep)
            .expect("region I modes are present in ρ_{A B_I C_I}")
    };
    TwoModeReductions {
        ab: reduce([A, BI]),
        ac: reduce([A, CI]),
        bc: reduce([BI, CI]),
    }
}
