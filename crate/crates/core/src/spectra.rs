//! Hermitian spectra, trace norm and negativity.
//!
//! Eigenvalues come from cyclic Jacobi rotations. A complex Hermitian
//! `H = A + iB` is embedded as the real-symmetric `[[A, −B], [B, A]]`, whose
//! spectrum is that of `H` with every eigenvalue doubled. When the imaginary
//! part is negligible the Jacobi sweep runs on `A` directly.

use crate::error::{Error, Result};
use crate::mode::ModeLabel;
use crate::tensor::{ComplexMatrix, DensityMatrix};
use crate::tolerance::Tolerances;

/// Eigenvalues of a Hermitian matrix in ascending order.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    source_dim: usize,
}

impl Spectrum {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn min(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn max(&self) -> f64 {
        self.eigenvalues[self.eigenvalues.len() - 1]
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    /// `Σ|λ|`.
    pub fn abs_sum(&self) -> f64 {
        self.eigenvalues.iter().map(|l| l.abs()).sum()
    }

    /// `Σ|λ|` over eigenvalues strictly below `-threshold`.
    pub fn negative_mass(&self, threshold: f64) -> f64 {
        self.eigenvalues
            .iter()
            .filter(|&&l| l < -threshold)
            .map(|l| -l)
            .sum()
    }
}

pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<Spectrum> {
    hermitian_eigenvalues_with(m, &Tolerances::DEFAULT)
}

pub fn hermitian_eigenvalues_with(m: &ComplexMatrix, tol: &Tolerances) -> Result<Spectrum> {
    let asymmetry = m.relative_hermitian_deviation();
    if asymmetry > tol.hermitian_reject {
        return Err(Error::NotHermitian { asymmetry });
    }
    let n = m.dim();
    let norm = m.frobenius_norm();
    let max_imag = m.entries().iter().map(|z| z.im.abs()).fold(0.0, f64::max);

    let mut eigenvalues = if max_imag <= tol.real_path_imag * norm {
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                // Symmetrize so rounding-level asymmetry does not leak in.
                a[i * n + j] = 0.5 * (m[(i, j)].re + m[(j, i)].re);
            }
        }
        let mut values = jacobi_symmetric(&mut a, n, tol)?;
        values.sort_by(f64::total_cmp);
        values
    } else {
        let big = 2 * n;
        let mut a = vec![0.0; big * big];
        for i in 0..n {
            for j in 0..n {
                let re = 0.5 * (m[(i, j)].re + m[(j, i)].re);
                let im = 0.5 * (m[(i, j)].im - m[(j, i)].im);
                a[i * big + j] = re;
                a[(i + n) * big + j + n] = re;
                a[i * big + j + n] = -im;
                a[(i + n) * big + j] = im;
            }
        }
        let mut doubled = jacobi_symmetric(&mut a, big, tol)?;
        doubled.sort_by(f64::total_cmp);
        doubled.chunks(2).map(|p| 0.5 * (p[0] + p[1])).collect()
    };
    eigenvalues.sort_by(f64::total_cmp);
    Ok(Spectrum {
        eigenvalues,
        source_dim: n,
    })
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for q in 0..n {
            if p != q {
                sum += a[p * n + q] * a[p * n + q];
            }
        }
    }
    sum.sqrt()
}

/// Cyclic Jacobi on a dense real-symmetric `n × n` matrix (row-major).
/// Returns the unsorted diagonal once the off-diagonal mass is negligible.
fn jacobi_symmetric(a: &mut [f64], n: usize, tol: &Tolerances) -> Result<Vec<f64>> {
    let norm = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let target = tol.jacobi_off_diagonal * norm;

    for _ in 0..tol.jacobi_max_sweeps {
        if off_diagonal_norm(a, n) <= target {
            return Ok((0..n).map(|i| a[i * n + i]).collect());
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    let new_rp = c * arp - s * arq;
                    let new_rq = s * arp + c * arq;
                    a[r * n + p] = new_rp;
                    a[p * n + r] = new_rp;
                    a[r * n + q] = new_rq;
                    a[q * n + r] = new_rq;
                }
            }
        }
    }
    if off_diagonal_norm(a, n) <= target {
        return Ok((0..n).map(|i| a[i * n + i]).collect());
    }
    Err(Error::NoConvergence {
        sweeps: tol.jacobi_max_sweeps,
    })
}

/// Trace norm `‖M‖₁`. For Hermitian `M` the singular values are `|λ_i|`.
pub fn trace_norm(m: &ComplexMatrix) -> Result<f64> {
    Ok(hermitian_eigenvalues(m)?.abs_sum())
}

/// Both routes to the negativity of a unit-trace Hermitian matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NegativityForms {
    /// `‖M‖₁ − 1`.
    pub trace_norm_form: f64,
    /// `2 Σ|λ|` over the eigenvalues counted as negative.
    pub negative_mass_form: f64,
}

impl NegativityForms {
    pub fn discrepancy(&self) -> f64 {
        (self.trace_norm_form - self.negative_mass_form).abs()
    }
}

/// Evaluates both negativity formulations of a unit-trace Hermitian matrix
/// without checking that they agree.
pub fn negativity_forms(m: &ComplexMatrix) -> Result<NegativityForms> {
    let tol = Tolerances::DEFAULT;
    let spectrum = hermitian_eigenvalues_with(m, &tol)?;
    let threshold = tol.negative_eigenvalue * m.frobenius_norm();
    Ok(NegativityForms {
        trace_norm_form: spectrum.abs_sum() - 1.0,
        negative_mass_form: 2.0 * spectrum.negative_mass(threshold),
    })
}

/// Negativity of a unit-trace Hermitian matrix, `‖M‖₁ − 1`, cross-checked
/// against twice its negative eigenvalue mass.
pub fn matrix_negativity(m: &ComplexMatrix) -> Result<f64> {
    let forms = negativity_forms(m)?;
    if forms.discrepancy() > Tolerances::DEFAULT.negativity_consistency {
        return Err(Error::InconsistentNegativity {
            trace_norm_form: forms.trace_norm_form,
            negative_mass_form: forms.negative_mass_form,
        });
    }
    Ok(forms.trace_norm_form)
}

/// `‖ρ^{T_target}‖₁ − 1`.
pub fn negativity(rho: &DensityMatrix, target: ModeLabel) -> Result<f64> {
    matrix_negativity(&rho.partial_transpose(target)?)
}
