//! Dense complex matrices over ordered collections of two-level modes.
//!
//! Basis indices follow a big-endian convention: the first listed mode is
//! the most significant bit. For modes `(A, B_I, C_I)` index 3 is `|011⟩`,
//! i.e. `A = 0, B_I = 1, C_I = 1`.

use std::ops::{Index, IndexMut, Mul};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::mode::ModeLabel;
use crate::spectra::hermitian_eigenvalues;
use crate::tolerance::Tolerances;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Square complex matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyMatrix);
        }
        Ok(Self {
            dim,
            data: vec![ZERO; dim * dim],
        })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            m[(i, i)] = ONE;
        }
        Ok(m)
    }

    /// Builds a matrix from `dim²` row-major entries.
    pub fn from_vec(dim: usize, data: Vec<Complex64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyMatrix);
        }
        if data.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                actual: data.len(),
            });
        }
        Ok(Self { dim, data })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = f(i, j);
            }
        }
        Ok(m)
    }

    /// Builds a real matrix from its rows. All rows must have the same length
    /// as the number of rows.
    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let dim = rows.len();
        let data: Vec<Complex64> = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)))
            .collect();
        Self::from_vec(dim, data)
    }

    pub fn diagonal(values: &[f64]) -> Result<Self> {
        Self::from_fn(values.len(), |i, j| {
            if i == j {
                Complex64::new(values[i], 0.0)
            } else {
                ZERO
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `max |M[i][j] − conj(M[j][i])|`.
    pub fn hermitian_deviation(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            for j in i..self.dim {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// Hermitian deviation divided by the Frobenius norm (0 for the zero matrix).
    pub fn relative_hermitian_deviation(&self) -> f64 {
        let norm = self.frobenius_norm();
        if norm == 0.0 {
            0.0
        } else {
            self.hermitian_deviation() / norm
        }
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_deviation() <= tol * self.frobenius_norm()
    }

    pub fn dagger(&self) -> Self {
        let mut out = self.clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                out[(i, j)] = self[(j, i)].conj();
            }
        }
        out
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Swaps the bit at `bit` (counted from the least significant end) between
    /// row and column index of every entry.
    fn transpose_bit(&self, bit: usize) -> Self {
        let mask = 1usize << bit;
        let mut out = self.clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let row = (i & !mask) | (j & mask);
                let col = (j & !mask) | (i & mask);
                out[(row, col)] = self[(i, j)];
            }
        }
        out
    }

    /// Partial transpose of the mode at `position` in an ordered list of
    /// `n_modes` two-level modes (position 0 is the most significant bit).
    pub fn partial_transpose_at(&self, n_modes: usize, position: usize) -> Result<Self> {
        check_qubit_dim(self.dim, n_modes)?;
        assert!(position < n_modes, "position {position} out of {n_modes} modes");
        Ok(self.transpose_bit(n_modes - 1 - position))
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.dim + j]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = ComplexMatrix {
            dim: n,
            data: vec![ZERO; n * n],
        };
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

/// Kronecker product: `out[(i·nb + k, j·nb + l)] = a[i][j] · b[k][l]`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let nb = b.dim;
    let n = a.dim * nb;
    let mut data = vec![ZERO; n * n];
    for i in 0..a.dim {
        for j in 0..a.dim {
            let aij = a[(i, j)];
            for k in 0..nb {
                for l in 0..nb {
                    data[(i * nb + k) * n + j * nb + l] = aij * b[(k, l)];
                }
            }
        }
    }
    ComplexMatrix { dim: n, data }
}

fn check_qubit_dim(dim: usize, n_modes: usize) -> Result<()> {
    let expected = 1usize << n_modes;
    if dim != expected {
        return Err(Error::DimensionMismatch {
            expected,
            actual: dim,
        });
    }
    Ok(())
}

fn check_modes(modes: &[ModeLabel]) -> Result<()> {
    for (i, m) in modes.iter().enumerate() {
        if modes[..i].contains(m) {
            return Err(Error::DuplicateMode(*m));
        }
    }
    Ok(())
}

fn position_of(modes: &[ModeLabel], target: ModeLabel) -> Result<usize> {
    modes
        .iter()
        .position(|&m| m == target)
        .ok_or(Error::UnknownMode(target))
}

/// Amplitude vector over an ordered list of two-level modes.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    modes: Vec<ModeLabel>,
    amplitudes: Vec<Complex64>,
}

impl PureState {
    /// Normalization is not enforced here; [`outer`] refuses states whose
    /// norm is off by more than the configured tolerance.
    pub fn new(modes: Vec<ModeLabel>, amplitudes: Vec<Complex64>) -> Result<Self> {
        check_modes(&modes)?;
        let expected = 1usize << modes.len();
        if amplitudes.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                actual: amplitudes.len(),
            });
        }
        Ok(Self { modes, amplitudes })
    }

    pub fn modes(&self) -> &[ModeLabel] {
        &self.modes
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }
}

/// Projector `|ψ⟩⟨ψ|`.
pub fn outer(psi: &PureState) -> Result<DensityMatrix> {
    let deviation = (psi.norm_sqr() - 1.0).abs();
    if deviation > Tolerances::DEFAULT.norm_reject {
        return Err(Error::NotNormalized { deviation });
    }
    let amps = &psi.amplitudes;
    let matrix = ComplexMatrix::from_fn(amps.len(), |i, j| amps[i] * amps[j].conj())?;
    Ok(DensityMatrix {
        modes: psi.modes.clone(),
        matrix,
    })
}

/// Hermitian, unit-trace, positive-semidefinite matrix over ordered modes.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    modes: Vec<ModeLabel>,
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    /// Validates every density-matrix invariant against [`Tolerances::DEFAULT`].
    pub fn new(modes: Vec<ModeLabel>, matrix: ComplexMatrix) -> Result<Self> {
        let tol = Tolerances::DEFAULT;
        check_modes(&modes)?;
        check_qubit_dim(matrix.dim(), modes.len())?;
        let asymmetry = matrix.relative_hermitian_deviation();
        if asymmetry > tol.hermitian {
            return Err(Error::NotHermitian { asymmetry });
        }
        let trace = matrix.trace();
        let deviation = (trace - ONE).norm();
        if deviation > tol.trace {
            return Err(Error::NotUnitTrace { deviation });
        }
        let lowest = hermitian_eigenvalues(&matrix)?.min();
        if lowest < -tol.psd_floor {
            return Err(Error::NotPositive { eigenvalue: lowest });
        }
        Ok(Self { modes, matrix })
    }

    pub fn modes(&self) -> &[ModeLabel] {
        &self.modes
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// `tr(ρ²)`.
    pub fn purity(&self) -> f64 {
        (&self.matrix * &self.matrix).trace().re
    }

    /// Traces out every mode not in `keep`. The result lists the kept modes in
    /// their original relative order, whatever order `keep` gives them in.
    pub fn partial_trace(&self, keep: &[ModeLabel]) -> Result<DensityMatrix> {
        if keep.is_empty() {
            return Err(Error::EmptyKeepSet);
        }
        for &m in keep {
            position_of(&self.modes, m)?;
        }
        let n = self.modes.len();
        let bit_of = |pos: usize| n - 1 - pos;
        let (kept_bits, traced_bits): (Vec<usize>, Vec<usize>) = {
            let mut kept = Vec::new();
            let mut traced = Vec::new();
            for (pos, m) in self.modes.iter().enumerate() {
                if keep.contains(m) {
                    kept.push(bit_of(pos));
                } else {
                    traced.push(bit_of(pos));
                }
            }
            (kept, traced)
        };
        let kept_modes: Vec<ModeLabel> = self
            .modes
            .iter()
            .copied()
            .filter(|m| keep.contains(m))
            .collect();

        // Scatter the bits of a compact index onto the listed full-index bits,
        // most significant first.
        let scatter = |compact: usize, bits: &[usize]| -> usize {
            let k = bits.len();
            bits.iter()
                .enumerate()
                .filter(|&(i, _)| compact >> (k - 1 - i) & 1 == 1)
                .fold(0usize, |acc, (_, &b)| acc | (1 << b))
        };

        let dim = 1usize << kept_bits.len();
        let env_dim = 1usize << traced_bits.len();
        let mut out = ComplexMatrix::zeros(dim)?;
        for i in 0..dim {
            let row = scatter(i, &kept_bits);
            for j in 0..dim {
                let col = scatter(j, &kept_bits);
                out[(i, j)] = (0..env_dim)
                    .map(|e| {
                        let env = scatter(e, &traced_bits);
                        self.matrix[(row | env, col | env)]
                    })
                    .sum();
            }
        }
        Ok(DensityMatrix {
            modes: kept_modes,
            matrix: out,
        })
    }

    /// Transposes the row and column index bits belonging to `target`.
    ///
    /// The result is Hermitian with unit trace but need not be positive.
    pub fn partial_transpose(&self, target: ModeLabel) -> Result<ComplexMatrix> {
        let pos = position_of(&self.modes, target)?;
        self.matrix.partial_transpose_at(self.modes.len(), pos)
    }

    /// Tensor product `self ⊗ other`; the mode lists are concatenated.
    pub fn tensor(&self, other: &DensityMatrix) -> Result<DensityMatrix> {
        let mut modes = self.modes.clone();
        modes.extend_from_slice(&other.modes);
        check_modes(&modes)?;
        Ok(DensityMatrix {
            modes,
            matrix: kron(&self.matrix, &other.matrix),
        })
    }
}
