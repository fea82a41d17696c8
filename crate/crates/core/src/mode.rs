use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// A two-level fermionic mode.
///
/// `A` is Alice's inertial mode; `BI`/`BII` and `CI`/`CII` are the region I
/// and region II Rindler modes seen by Bob and Charlie. The derived ordering
/// `A < BI < BII < CI < CII` is the canonical mode order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ModeLabel {
    A,
    BI,
    BII,
    CI,
    CII,
}

impl ModeLabel {
    pub const ALL: [ModeLabel; 5] = [
        ModeLabel::A,
        ModeLabel::BI,
        ModeLabel::BII,
        ModeLabel::CI,
        ModeLabel::CII,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ModeLabel::A => "A",
            ModeLabel::BI => "B_I",
            ModeLabel::BII => "B_II",
            ModeLabel::CI => "C_I",
            ModeLabel::CII => "C_II",
        }
    }
}

impl fmt::Display for ModeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModeLabel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ModeLabel::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown mode label `{s}`"))
    }
}
