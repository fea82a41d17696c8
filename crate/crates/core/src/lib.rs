//! Entanglement of a tripartite fermionic GHZ state when two of the three
//! observers are uniformly accelerated.
//!
//! The crate is layered bottom-up:
//!
//! * [`tensor`] dense complex matrices over ordered two-level modes, with
//!   Kronecker products, projectors, partial traces and partial transposes.
//! * [`spectra`] a cyclic Jacobi eigensolver for Hermitian matrices, the
//!   trace norm, and the PPT negativity built on top of it.
//! * [`unruh`] the five-mode Unruh-transformed GHZ state and its reductions.
//! * [`tangles`] closed-form one-tangles (corrected and legacy), two-tangles,
//!   π-tangle, the Δ surfaces between the two formula families, and the
//!   small-acceleration series of Δπ.
//! * [`sweep`] and [`verify`] grid evaluation, CSV/JSON output and the
//!   invariant suite behind the `unruh-tangle` binary.

pub mod error;
pub mod format;
pub mod mode;
pub mod spectra;
pub mod sweep;
pub mod tangles;
pub mod tensor;
pub mod tolerance;
pub mod unruh;
pub mod verify;

pub use error::{Error, Result};
pub use mode::ModeLabel;
pub use spectra::{hermitian_eigenvalues, negativity, trace_norm, Spectrum};
pub use tangles::{Family, Pair, TangleReport, Vertex};
pub use tensor::{kron, outer, ComplexMatrix, DensityMatrix, PureState};
pub use tolerance::Tolerances;
pub use unruh::{build_phi, rho_abici, two_mode_reductions, AccelPair};
