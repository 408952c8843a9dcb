//! Pure qubit states, density matrices and their spinor readings over ℍ and 𝕆.
//!
//! Basis index `i` encodes the ket `|b₀b₁…⟩` with qubit 0 as the most significant
//! bit, so `|01⟩` is index 1 and `|10⟩` is index 2. Qubit indices in this crate
//! are zero-based.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::algebra::{Octonion, Quaternion};
use crate::error::{Error, Result};
use crate::tolerance::Tolerances;

pub const MAX_QUBITS: usize = 4;

/// Normalized amplitude vector over `2ⁿ` basis states, `1 ≤ n ≤ 4`.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    qubits: usize,
    amplitudes: Vec<Complex64>,
}

/// Wire form shared with the CLI: `{"qubits": n, "amplitudes": [[re, im], ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateJson {
    pub qubits: usize,
    pub amplitudes: Vec<[f64; 2]>,
}

impl PureState {
    /// Builds a state, renormalizing inputs whose norm is within the default
    /// renormalization window of 1.
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        Self::with_tolerance(amplitudes, &Tolerances::default())
    }

    pub fn with_tolerance(amplitudes: Vec<Complex64>, tol: &Tolerances) -> Result<Self> {
        let len = amplitudes.len();
        let qubits = qubits_for_len(len)?;
        let norm = amplitudes.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if !norm.is_finite() || (norm - 1.0).abs() > tol.renormalize {
            return Err(Error::NotNormalizable { norm });
        }
        let amplitudes = amplitudes.into_iter().map(|c| c / norm).collect();
        Ok(Self { qubits, amplitudes })
    }

    /// Normalizes any nonzero finite amplitude vector.
    pub fn normalized(amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm = amplitudes.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if !(norm.is_finite() && norm > 0.0) {
            return Err(Error::NotNormalizable { norm });
        }
        Self::new(amplitudes.into_iter().map(|c| c / norm).collect())
    }

    /// Real amplitudes, normalized.
    pub fn from_real(amplitudes: &[f64]) -> Result<Self> {
        Self::normalized(amplitudes.iter().map(|&a| Complex64::new(a, 0.0)).collect())
    }

    /// Computational basis state `index` on `qubits` qubits.
    pub fn basis(qubits: usize, index: usize) -> Result<Self> {
        if !(1..=MAX_QUBITS).contains(&qubits) {
            return Err(Error::UnsupportedQubitCount(qubits));
        }
        let dim = 1 << qubits;
        if index >= dim {
            return Err(Error::DimensionMismatch(format!(
                "basis index {index} on {qubits} qubits"
            )));
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(Self { qubits, amplitudes })
    }

    /// `(|00⟩ + |11⟩)/√2`.
    pub fn bell() -> Self {
        Self::from_real(&[1.0, 0.0, 0.0, 1.0]).expect("valid")
    }

    /// `(|0…0⟩ + |1…1⟩)/√2` on `qubits` qubits.
    pub fn ghz(qubits: usize) -> Result<Self> {
        if !(1..=MAX_QUBITS).contains(&qubits) {
            return Err(Error::UnsupportedQubitCount(qubits));
        }
        let mut amps = vec![0.0; 1 << qubits];
        amps[0] = 1.0;
        amps[(1 << qubits) - 1] = 1.0;
        Self::from_real(&amps)
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn to_vector(&self) -> DVector<Complex64> {
        DVector::from_column_slice(&self.amplitudes)
    }

    pub fn expect_qubits(&self, n: usize) -> Result<()> {
        if self.qubits != n {
            return Err(Error::WrongQubitCount { expected: n, found: self.qubits });
        }
        Ok(())
    }

    /// `|c₀c₃ − c₁c₂|`, zero exactly for product states.
    pub fn separability_defect(&self) -> Result<f64> {
        self.expect_qubits(2)?;
        let c = &self.amplitudes;
        Ok((c[0] * c[3] - c[1] * c[2]).norm())
    }

    /// `(defect < tol, defect)`.
    pub fn is_separable_2q(&self, tol: f64) -> Result<(bool, f64)> {
        let defect = self.separability_defect()?;
        Ok((defect < tol, defect))
    }

    /// `q₀ = c₀ + c₁ j`, `q₁ = c₂ + c₃ j`.
    pub fn to_quaternion_pair(&self) -> Result<(Quaternion, Quaternion)> {
        self.expect_qubits(2)?;
        let c = &self.amplitudes;
        Ok((
            Quaternion::from_complex_pair(c[0], c[1]),
            Quaternion::from_complex_pair(c[2], c[3]),
        ))
    }

    /// Three-qubit amplitudes as an octonion pair.
    ///
    /// `q₀ = c₀ + c₁e₂`, `q₁ = c₂ + c₃*e₂`, `q₂ = c₄ + c₅e₂`, `q₃ = c₆ + c₇*e₂`,
    /// then `o₀ = q₀ + q₁e₄` and `o₁ = q₂ + q₃e₄`. The conjugated amplitudes keep
    /// the map isotropic on S¹⁵.
    pub fn to_octonion_pair(&self) -> Result<(Octonion, Octonion)> {
        self.expect_qubits(3)?;
        let c = &self.amplitudes;
        let q0 = Quaternion::from_complex_pair(c[0], c[1]);
        let q1 = Quaternion::from_complex_pair(c[2], c[3].conj());
        let q2 = Quaternion::from_complex_pair(c[4], c[5]);
        let q3 = Quaternion::from_complex_pair(c[6], c[7].conj());
        Ok((Octonion::cayley_dickson(q0, q1), Octonion::cayley_dickson(q2, q3)))
    }

    /// Inverse of [`PureState::to_quaternion_pair`].
    pub fn from_quaternion_pair(q0: Quaternion, q1: Quaternion) -> Result<Self> {
        let (c0, c1) = q0.complex_pair();
        let (c2, c3) = q1.complex_pair();
        Self::new(vec![c0, c1, c2, c3])
    }

    /// Inverse of [`PureState::to_octonion_pair`].
    pub fn from_octonion_pair(o0: Octonion, o1: Octonion) -> Result<Self> {
        let (q0, q1) = o0.quaternion_pair();
        let (q2, q3) = o1.quaternion_pair();
        let (c0, c1) = q0.complex_pair();
        let (c2, c3) = q1.complex_pair();
        let (c4, c5) = q2.complex_pair();
        let (c6, c7) = q3.complex_pair();
        Self::new(vec![c0, c1, c2, c3.conj(), c4, c5, c6, c7.conj()])
    }

    /// Kronecker product in the declared bit ordering: `self` supplies the
    /// more significant qubits.
    pub fn tensor(&self, other: &PureState) -> Result<PureState> {
        let qubits = self.qubits + other.qubits;
        if qubits > MAX_QUBITS {
            return Err(Error::UnsupportedQubitCount(qubits));
        }
        let amplitudes = self
            .amplitudes
            .iter()
            .flat_map(|a| other.amplitudes.iter().map(move |b| a * b))
            .collect();
        Ok(PureState { qubits, amplitudes })
    }

    pub fn density_matrix(&self) -> DensityMatrix {
        let v = self.to_vector();
        DensityMatrix { matrix: &v * v.adjoint() }
    }

    /// Haar-uniform pure state from normalized complex Gaussian amplitudes.
    pub fn random<R: Rng + ?Sized>(qubits: usize, rng: &mut R) -> Result<Self> {
        if !(1..=MAX_QUBITS).contains(&qubits) {
            return Err(Error::UnsupportedQubitCount(qubits));
        }
        loop {
            let amps: Vec<Complex64> = (0..1usize << qubits)
                .map(|_| {
                    Complex64::new(StandardNormal.sample(rng), StandardNormal.sample(rng))
                })
                .collect();
            let norm = amps.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
            if norm > 1e-150 {
                return Self::new(amps.into_iter().map(|c| c / norm).collect());
            }
        }
    }

    /// Tensor product of independent Haar-random single-qubit states.
    pub fn random_product<R: Rng + ?Sized>(qubits: usize, rng: &mut R) -> Result<Self> {
        if !(1..=MAX_QUBITS).contains(&qubits) {
            return Err(Error::UnsupportedQubitCount(qubits));
        }
        let mut state = Self::random(1, rng)?;
        for _ in 1..qubits {
            state = state.tensor(&Self::random(1, rng)?)?;
        }
        Ok(state)
    }

    pub fn to_json(&self) -> StateJson {
        StateJson {
            qubits: self.qubits,
            amplitudes: self.amplitudes.iter().map(|c| [c.re, c.im]).collect(),
        }
    }

    pub fn from_json(json: &StateJson, tol: &Tolerances) -> Result<Self> {
        let expected = 1usize.checked_shl(json.qubits as u32).unwrap_or(0);
        if !(1..=MAX_QUBITS).contains(&json.qubits) {
            return Err(Error::UnsupportedQubitCount(json.qubits));
        }
        if json.amplitudes.len() != expected {
            return Err(Error::AmplitudeLength { len: json.amplitudes.len(), expected });
        }
        let amps = json.amplitudes.iter().map(|&[re, im]| Complex64::new(re, im)).collect();
        Self::with_tolerance(amps, tol)
    }

    pub fn from_json_str(s: &str, tol: &Tolerances) -> Result<Self> {
        let json: StateJson = serde_json::from_str(s)?;
        Self::from_json(&json, tol)
    }
}

/// Deterministic Haar-random state for `seed`.
pub fn random_state(qubits: usize, seed: u64) -> Result<PureState> {
    PureState::random(qubits, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Deterministic mixed state: a convex combination of `qubits + 2` random pure
/// states with uniformly drawn weights.
pub fn random_mixed(qubits: usize, seed: u64) -> Result<DensityMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_mixed_with(qubits, &mut rng)
}

pub fn random_mixed_with<R: Rng + ?Sized>(qubits: usize, rng: &mut R) -> Result<DensityMatrix> {
    let terms = qubits + 2;
    let weights: Vec<f64> = (0..terms).map(|_| rng.random::<f64>() + 1e-3).collect();
    let total: f64 = weights.iter().sum();
    let dim = 1usize << qubits;
    let mut m = DMatrix::zeros(dim, dim);
    for w in weights {
        let s = PureState::random(qubits, rng)?;
        m += s.density_matrix().matrix * Complex64::new(w / total, 0.0);
    }
    DensityMatrix::new(m)
}

fn qubits_for_len(len: usize) -> Result<usize> {
    match len {
        2 => Ok(1),
        4 => Ok(2),
        8 => Ok(3),
        16 => Ok(4),
        _ => Err(Error::DimensionMismatch(format!(
            "amplitude vector of length {len} is not 2ⁿ for 1 ≤ n ≤ 4"
        ))),
    }
}

/// Hermitian, unit-trace, positive semidefinite matrix on `2ⁿ` dimensions.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: DMatrix<Complex64>,
}

impl DensityMatrix {
    /// Validates Hermiticity and unit trace to 1e-12 and the spectrum to
    /// `≥ -1e-10`.
    pub fn new(matrix: DMatrix<Complex64>) -> Result<Self> {
        let d = matrix.nrows();
        if d != matrix.ncols() {
            return Err(Error::InvalidDensityMatrix(format!(
                "not square: {}×{}",
                d,
                matrix.ncols()
            )));
        }
        qubits_for_len(d)?;
        let herm = (&matrix - matrix.adjoint()).iter().map(|c| c.norm()).fold(0.0, f64::max);
        if herm > 1e-12 {
            return Err(Error::InvalidDensityMatrix(format!(
                "not Hermitian (defect {herm:e})"
            )));
        }
        let tr = matrix.trace();
        if (tr - Complex64::new(1.0, 0.0)).norm() > 1e-12 {
            return Err(Error::InvalidDensityMatrix(format!("trace {tr} is not 1")));
        }
        let rho = Self { matrix };
        let min = rho.eigenvalues().into_iter().fold(f64::INFINITY, f64::min);
        if min < -1e-10 {
            return Err(Error::InvalidDensityMatrix(format!(
                "negative eigenvalue {min:e}"
            )));
        }
        Ok(rho)
    }

    /// `𝟙/d` on `qubits` qubits.
    pub fn maximally_mixed(qubits: usize) -> Result<Self> {
        if !(1..=MAX_QUBITS).contains(&qubits) {
            return Err(Error::UnsupportedQubitCount(qubits));
        }
        let d = 1usize << qubits;
        Ok(Self { matrix: DMatrix::identity(d, d) * Complex64::new(1.0 / d as f64, 0.0) })
    }

    /// Diagonal density matrix with the given populations.
    pub fn diagonal(populations: &[f64]) -> Result<Self> {
        let v = DVector::from_iterator(
            populations.len(),
            populations.iter().map(|&p| Complex64::new(p, 0.0)),
        );
        Self::new(DMatrix::from_diagonal(&v))
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn qubits(&self) -> usize {
        self.dim().trailing_zeros() as usize
    }

    /// Real eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut ev: Vec<f64> =
            self.matrix.clone().symmetric_eigenvalues().iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        ev
    }

    /// `Tr ρ²`.
    pub fn purity(&self) -> f64 {
        (&self.matrix * &self.matrix).trace().re
    }

    /// Reduced state on the listed qubits, kept in ascending order.
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityMatrix> {
        let n = self.qubits();
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if keep.is_empty() {
            return Err(Error::InvalidRegion("nothing to keep".into()));
        }
        if let Some(&bad) = keep.iter().find(|&&q| q >= n) {
            return Err(Error::InvalidQubitIndex { index: bad, qubits: n });
        }
        let traced: Vec<usize> = (0..n).filter(|q| !keep.contains(q)).collect();
        let dk = 1usize << keep.len();
        let dt = 1usize << traced.len();
        let index = |kept_bits: usize, traced_bits: usize| -> usize {
            let mut idx = 0;
            for (pos, &q) in keep.iter().enumerate() {
                let bit = (kept_bits >> (keep.len() - 1 - pos)) & 1;
                idx |= bit << (n - 1 - q);
            }
            for (pos, &q) in traced.iter().enumerate() {
                let bit = (traced_bits >> (traced.len() - 1 - pos)) & 1;
                idx |= bit << (n - 1 - q);
            }
            idx
        };
        let mut out = DMatrix::zeros(dk, dk);
        for r in 0..dk {
            for c in 0..dk {
                out[(r, c)] = (0..dt).map(|t| self.matrix[(index(r, t), index(c, t))]).sum();
            }
        }
        Ok(DensityMatrix { matrix: out })
    }
}
