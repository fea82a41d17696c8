//! Numerical tolerances shared by every module.

/// Single record holding every tolerance the library checks against.
///
/// Relative tolerances are scaled by the Frobenius norm of the matrix
/// under inspection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Relative asymmetry accepted when a matrix is claimed Hermitian.
    pub hermitian: f64,
    /// Relative asymmetry above which the eigensolver refuses its input.
    pub hermitian_reject: f64,
    /// Allowed deviation of a density matrix trace from 1.
    pub trace: f64,
    /// Most negative eigenvalue still accepted as positive semidefinite.
    pub psd_floor: f64,
    /// Allowed deviation of `Σ|amp|²` from 1 before a projector is refused.
    pub norm_reject: f64,
    /// Jacobi stops once off-diagonal Frobenius mass falls below this
    /// fraction of the total Frobenius norm.
    pub jacobi_off_diagonal: f64,
    /// Maximum number of full Jacobi sweeps.
    pub jacobi_max_sweeps: usize,
    /// Imaginary parts below this fraction of the norm are dropped and the
    /// real-symmetric path is taken.
    pub real_path_imag: f64,
    /// An eigenvalue counts as negative when below `-negative_eigenvalue * ‖M‖_F`.
    pub negative_eigenvalue: f64,
    /// Agreement required between the two negativity formulations.
    pub negativity_consistency: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        hermitian: 1e-13,
        hermitian_reject: 1e-10,
        trace: 1e-12,
        psd_floor: 1e-12,
        norm_reject: 1e-9,
        jacobi_off_diagonal: 1e-14,
        jacobi_max_sweeps: 100,
        real_path_imag: 1e-15,
        negative_eigenvalue: 1e-13,
        negativity_consistency: 1e-11,
    };
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}
