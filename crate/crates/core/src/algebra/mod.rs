//! Normed division algebras ℂ, ℍ and 𝕆.
//!
//! [`DivisionAlgebra`] abstracts over the three so that the Hopf maps, light-cone
//! matrices and Clifford generators can be written once. Complex numbers reuse
//! [`num_complex::Complex64`]; quaternions and octonions are defined here.

mod octonion;
mod quaternion;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};

pub use octonion::{Octonion, MULTIPLICATION_TRIPLES};
pub use quaternion::{matrix_to_quat, quat_to_matrix, Quaternion};

/// A real normed division algebra of dimension 2, 4 or 8.
///
/// Coefficient 0 is the real part; coefficients `1..DIM` are the imaginary
/// units. For ℂ that is `i`, for ℍ `i, j, k`, for 𝕆 `e₁..e₇`.
pub trait DivisionAlgebra:
    Copy
    + Debug
    + PartialEq
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Neg<Output = Self>
    + Mul<Output = Self>
{
    const DIM: usize;
    const NAME: &'static str;

    fn zero() -> Self;

    fn from_real(r: f64) -> Self;

    fn coeff(&self, k: usize) -> f64;

    /// Builds an element from exactly `DIM` coefficients.
    fn from_coeffs(c: &[f64]) -> Self;

    fn conj(&self) -> Self;

    fn scale(&self, s: f64) -> Self;

    fn one() -> Self {
        Self::from_real(1.0)
    }

    /// Basis element `k` (0 is the identity).
    fn unit(k: usize) -> Self {
        let mut c = vec![0.0; Self::DIM];
        c[k] = 1.0;
        Self::from_coeffs(&c)
    }

    fn coeffs(&self) -> Vec<f64> {
        (0..Self::DIM).map(|k| self.coeff(k)).collect()
    }

    fn re(&self) -> f64 {
        self.coeff(0)
    }

    fn norm_sqr(&self) -> f64 {
        (0..Self::DIM).map(|k| self.coeff(k).powi(2)).sum()
    }

    fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Largest absolute imaginary coefficient.
    fn imag_residue(&self) -> f64 {
        (1..Self::DIM)
            .map(|k| self.coeff(k).abs())
            .fold(0.0, f64::max)
    }

    /// `conj(x) / |x|²`.
    fn inverse(&self) -> Result<Self> {
        let n = self.norm_sqr();
        if n == 0.0 {
            return Err(Error::ZeroElement);
        }
        Ok(self.conj().scale(1.0 / n))
    }

    /// Largest absolute coefficient difference.
    fn distance(&self, other: &Self) -> f64 {
        (0..Self::DIM)
            .map(|k| (self.coeff(k) - other.coeff(k)).abs())
            .fold(0.0, f64::max)
    }
}

/// Marker for the associative levels (ℂ and ℍ), where 2×2 matrices over the
/// algebra form a group under multiplication.
pub trait Associative: DivisionAlgebra {}

impl DivisionAlgebra for Complex64 {
    const DIM: usize = 2;
    const NAME: &'static str = "complex";

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }

    fn from_real(r: f64) -> Self {
        Complex64::new(r, 0.0)
    }

    fn coeff(&self, k: usize) -> f64 {
        match k {
            0 => self.re,
            1 => self.im,
            _ => panic!("complex coefficient index {k} out of range"),
        }
    }

    fn from_coeffs(c: &[f64]) -> Self {
        assert_eq!(c.len(), 2, "complex numbers have 2 coefficients");
        Complex64::new(c[0], c[1])
    }

    fn conj(&self) -> Self {
        Complex64::conj(self)
    }

    fn scale(&self, s: f64) -> Self {
        self * s
    }
}

impl Associative for Complex64 {}
impl Associative for Quaternion {}

/// `(xx)y - x(xy)`, `(xy)x - x(yx)` and `(yx)x - y(xx)`: the three
/// alternativity defects, reported as the largest coefficient error.
pub fn alternativity_defect<A: DivisionAlgebra>(x: A, y: A) -> f64 {
    let left = ((x * x) * y).distance(&(x * (x * y)));
    let flexible = ((x * y) * x).distance(&(x * (y * x)));
    let right = ((y * x) * x).distance(&(y * (x * x)));
    left.max(flexible).max(right)
}

/// `| |ab| - |a||b| |`.
pub fn norm_multiplicativity_defect<A: DivisionAlgebra>(a: A, b: A) -> f64 {
    ((a * b).norm() - a.norm() * b.norm()).abs()
}

/// Element with independent standard-normal coefficients.
pub fn random_gaussian<A: DivisionAlgebra, R: Rng + ?Sized>(rng: &mut R) -> A {
    let c: Vec<f64> = (0..A::DIM).map(|_| rng.sample(StandardNormal)).collect();
    A::from_coeffs(&c)
}

/// Uniformly distributed unit element.
pub fn random_unit<A: DivisionAlgebra, R: Rng + ?Sized>(rng: &mut R) -> A {
    loop {
        let x: A = random_gaussian(rng);
        let n = x.norm();
        if n > 1e-6 {
            return x.scale(1.0 / n);
        }
    }
}

/// `(ab)c - a(bc)`.
pub fn associator<A: DivisionAlgebra>(a: A, b: A, c: A) -> A {
    (a * b) * c - a * (b * c)
}
