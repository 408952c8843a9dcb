//! Light cones in 3+1, 5+1 and 9+1 dimensions as 2×2 Hermitian matrices over
//! ℂ, ℍ and 𝕆, with the Lorentz action by conjugation.
//!
//! A vector `(x₀, x₁, …, x_D)` is stored as `½[[x₀+x_D, d*], [d, x₀−x_D]]` with
//! `d = x₁ + x₂e₁ + … + x_{D−1}e_{D−2}`, so that `det = ¼(x₀² − Σxᵢ²)`.
//! For a pure state the matrix is the projector `ψψ†`.

use std::ops::Mul;

use nalgebra::Matrix2;
use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{random_gaussian, Associative, DivisionAlgebra, Quaternion};
use crate::error::{Error, Result};
use crate::hopf;
use crate::states::{DensityMatrix, PureState};

/// Intervals with `|x₀² − Σxᵢ²|` below this are null.
pub const NULL_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IntervalClass {
    Timelike,
    Null,
    Spacelike,
}

/// `(x₀, x₁, …, x_D)` with `D ∈ {3, 5, 9}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MinkowskiVector {
    pub components: Vec<f64>,
}

impl MinkowskiVector {
    pub fn new(components: Vec<f64>) -> Result<Self> {
        match components.len() {
            4 | 6 | 10 => Ok(Self { components }),
            n => Err(Error::DimensionMismatch(format!(
                "Minkowski vectors have 4, 6 or 10 components, got {n}"
            ))),
        }
    }

    /// Spatial dimension `D`.
    pub fn spatial_dim(&self) -> usize {
        self.components.len() - 1
    }

    pub fn time(&self) -> f64 {
        self.components[0]
    }

    pub fn spatial(&self) -> &[f64] {
        &self.components[1..]
    }

    /// `x₀² − Σxᵢ²`.
    pub fn interval(&self) -> f64 {
        self.time().powi(2) - self.spatial().iter().map(|x| x * x).sum::<f64>()
    }

    pub fn classify(&self) -> IntervalClass {
        self.classify_with(NULL_TOLERANCE)
    }

    pub fn classify_with(&self, tol: f64) -> IntervalClass {
        let s = self.interval();
        if s.abs() < tol {
            IntervalClass::Null
        } else if s > 0.0 {
            IntervalClass::Timelike
        } else {
            IntervalClass::Spacelike
        }
    }

    pub fn distance(&self, other: &MinkowskiVector) -> f64 {
        self.components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// `[[a+b, d*], [d, a−b]]` with real `a, b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitianRep<A> {
    pub a: f64,
    pub b: f64,
    pub d: A,
}

impl<A: DivisionAlgebra> HermitianRep<A> {
    /// `a² − b² − |d|²`.
    pub fn det(&self) -> f64 {
        self.a * self.a - self.b * self.b - self.d.norm_sqr()
    }

    pub fn to_mat2(&self) -> Mat2<A> {
        Mat2([
            [A::from_real(self.a + self.b), self.d.conj()],
            [self.d, A::from_real(self.a - self.b)],
        ])
    }

    /// Reads `a, b, d` from the diagonal and lower-left entry, together with
    /// the largest departure from Hermitian form.
    pub fn from_mat2(m: &Mat2<A>) -> (Self, f64) {
        let [[p, q], [r, s]] = m.0;
        let rep = Self {
            a: 0.5 * (p.re() + s.re()),
            b: 0.5 * (p.re() - s.re()),
            d: r,
        };
        let defect = p
            .imag_residue()
            .max(s.imag_residue())
            .max(q.distance(&r.conj()));
        (rep, defect)
    }

    pub fn to_vector(&self) -> MinkowskiVector {
        matrix_to_vec(self)
    }
}

/// Lifts a Minkowski vector of dimension `A::DIM + 2` to its Hermitian matrix.
pub fn vec_to_matrix<A: DivisionAlgebra>(v: &MinkowskiVector) -> Result<HermitianRep<A>> {
    let n = v.components.len();
    if n != A::DIM + 2 {
        return Err(Error::DimensionMismatch(format!(
            "{} matrices carry {} components, vector has {n}",
            A::NAME,
            A::DIM + 2
        )));
    }
    let x = &v.components;
    Ok(HermitianRep {
        a: 0.5 * x[0],
        b: 0.5 * x[n - 1],
        d: A::from_coeffs(&x[1..n - 1]).scale(0.5),
    })
}

pub fn matrix_to_vec<A: DivisionAlgebra>(m: &HermitianRep<A>) -> MinkowskiVector {
    let mut c = Vec::with_capacity(A::DIM + 2);
    c.push(2.0 * m.a);
    c.extend((0..A::DIM).map(|k| 2.0 * m.d.coeff(k)));
    c.push(2.0 * m.b);
    MinkowskiVector { components: c }
}

/// `(|ψ|², Hopf vector)` for a state of 1, 2 or 3 qubits.
pub fn state_to_lightray(s: &PureState) -> Result<MinkowskiVector> {
    let h = hopf::hopf(s)?;
    let mut c = Vec::with_capacity(h.coords.len() + 1);
    c.push(s.norm_sqr());
    c.extend(h.coords);
    MinkowskiVector::new(c)
}

/// `(1, Tr ρσ₁, Tr ρσ₂, Tr ρσ₃)` for a single-qubit density matrix.
pub fn density_to_vector(rho: &DensityMatrix) -> Result<MinkowskiVector> {
    if rho.dim() != 2 {
        return Err(Error::WrongQubitCount { expected: 1, found: rho.qubits() });
    }
    let m = rho.matrix();
    let off = m[(1, 0)];
    MinkowskiVector::new(vec![
        (m[(0, 0)] + m[(1, 1)]).re,
        2.0 * off.re,
        2.0 * off.im,
        (m[(0, 0)] - m[(1, 1)]).re,
    ])
}

/// 2×2 matrix over a division algebra.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2<A>(pub [[A; 2]; 2]);

impl<A: DivisionAlgebra> Mat2<A> {
    pub fn identity() -> Self {
        Self([[A::one(), A::zero()], [A::zero(), A::one()]])
    }

    pub fn diag(p: A, s: A) -> Self {
        Self([[p, A::zero()], [A::zero(), s]])
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let [[p, q], [r, s]] = self.0;
        Self([[p.conj(), r.conj()], [q.conj(), s.conj()]])
    }

    pub fn distance(&self, other: &Self) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                d = d.max(self.0[i][j].distance(&other.0[i][j]));
            }
        }
        d
    }

    pub fn scale(&self, s: f64) -> Self {
        Self(self.0.map(|row| row.map(|x| x.scale(s))))
    }
}

impl<A: DivisionAlgebra> Mul for Mat2<A> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let (l, r) = (self.0, rhs.0);
        let mut out = [[A::zero(); 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = l[i][0] * r[0][j] + l[i][1] * r[1][j];
            }
        }
        Self(out)
    }
}

impl From<Matrix2<Complex64>> for Mat2<Complex64> {
    fn from(m: Matrix2<Complex64>) -> Self {
        Self([[m[(0, 0)], m[(0, 1)]], [m[(1, 0)], m[(1, 1)]]])
    }
}

impl From<Mat2<Complex64>> for Matrix2<Complex64> {
    fn from(m: Mat2<Complex64>) -> Self {
        let [[p, q], [r, s]] = m.0;
        Matrix2::new(p, q, r, s)
    }
}

/// Dieudonné determinant `|a|·|d − c a⁻¹ b|`, falling back to `|b||c|` when
/// `a = 0`.
pub fn dieudonne_det<A: Associative>(m: &Mat2<A>) -> f64 {
    let [[a, b], [c, d]] = m.0;
    match a.inverse() {
        Ok(ai) => a.norm() * (d - c * ai * b).norm(),
        Err(_) => b.norm() * c.norm(),
    }
}

/// Levels with a Lorentz action `X ↦ MXM†` on unit-determinant matrices.
pub trait LorentzLevel: Associative {
    /// Distance of `M` from the unit-determinant group.
    fn unit_det_defect(m: &Mat2<Self>) -> f64;

    /// Projects a matrix with Dieudonné determinant 1 onto the group.
    fn into_unit_det(m: Mat2<Self>) -> Mat2<Self>;
}

impl LorentzLevel for Complex64 {
    /// `|det M − 1|` for SL(2,ℂ).
    fn unit_det_defect(m: &Mat2<Self>) -> f64 {
        let [[a, b], [c, d]] = m.0;
        (a * d - b * c - Complex64::new(1.0, 0.0)).norm()
    }

    /// Divides out the remaining determinant phase.
    fn into_unit_det(m: Mat2<Self>) -> Mat2<Self> {
        let [[a, b], [c, d]] = m.0;
        let w = (a * d - b * c).sqrt().inv();
        Mat2([[a * w, b * w], [c * w, d * w]])
    }
}

impl LorentzLevel for Quaternion {
    /// `|Δ(M) − 1|` with the Dieudonné determinant.
    fn unit_det_defect(m: &Mat2<Self>) -> f64 {
        (dieudonne_det(m) - 1.0).abs()
    }

    fn into_unit_det(m: Mat2<Self>) -> Mat2<Self> {
        m
    }
}

/// `X′ = MXM†`.
pub fn lorentz_act<A: LorentzLevel>(
    m: &Mat2<A>,
    x: &HermitianRep<A>,
    tol: f64,
) -> Result<HermitianRep<A>> {
    let defect = A::unit_det_defect(m);
    if defect > tol {
        return Err(Error::NonUnitDeterminant(defect));
    }
    let y = *m * x.to_mat2() * m.adjoint();
    Ok(HermitianRep::from_mat2(&y).0)
}

/// `diag(e^{λ/2}, e^{−λ/2})`, a boost of rapidity `λ` along the last axis.
pub fn boost<A: DivisionAlgebra>(rapidity: f64) -> Mat2<A> {
    Mat2::diag(
        A::from_real((0.5 * rapidity).exp()),
        A::from_real((-0.5 * rapidity).exp()),
    )
}

/// Random unit-determinant matrix with Gaussian entries, normalized so the
/// determinant is exactly 1 (complex) or has Dieudonné value 1 (quaternionic).
pub fn random_unit_det<A: LorentzLevel, R: Rng + ?Sized>(rng: &mut R) -> Mat2<A> {
    loop {
        let m = Mat2([
            [random_gaussian(rng), random_gaussian(rng)],
            [random_gaussian(rng), random_gaussian(rng)],
        ]);
        let delta = dieudonne_det(&m);
        if delta < 0.1 {
            continue;
        }
        let m = m.scale(1.0 / delta.sqrt());
        return A::into_unit_det(m);
    }
}

/// A point of the extended complex plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum ExtComplex {
    Finite(Complex64),
    Infinity,
}

impl ExtComplex {
    /// Chordal distance on the Riemann sphere.
    pub fn chordal_distance(&self, other: &ExtComplex) -> f64 {
        use ExtComplex::*;
        match (self, other) {
            (Infinity, Infinity) => 0.0,
            (Finite(z), Infinity) | (Infinity, Finite(z)) => 2.0 / (1.0 + z.norm_sqr()).sqrt(),
            (Finite(z), Finite(w)) => {
                2.0 * (z - w).norm()
                    / ((1.0 + z.norm_sqr()).sqrt() * (1.0 + w.norm_sqr()).sqrt())
            }
        }
    }
}

/// `z ↦ (az + b)/(cz + d)` on the extended plane. Poles go to ∞ and ∞ goes to
/// `a/c`.
pub fn mobius(m: &Matrix2<Complex64>, z: ExtComplex) -> ExtComplex {
    let (a, b, c, d) = (m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)]);
    let (num, den) = match z {
        ExtComplex::Finite(z) => (a * z + b, c * z + d),
        ExtComplex::Infinity => (a, c),
    };
    if den.norm_sqr() == 0.0 {
        ExtComplex::Infinity
    } else {
        ExtComplex::Finite(num / den)
    }
}
