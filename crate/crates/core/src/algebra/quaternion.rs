use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::Matrix2;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::DivisionAlgebra;

/// `r0 + r1 i + r2 j + r3 k` with `i² = j² = k² = ijk = -1`.
#[derive(Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Quaternion(pub [f64; 4]);

impl Quaternion {
    pub const I: Quaternion = Quaternion([0.0, 1.0, 0.0, 0.0]);
    pub const J: Quaternion = Quaternion([0.0, 0.0, 1.0, 0.0]);
    pub const K: Quaternion = Quaternion([0.0, 0.0, 0.0, 1.0]);

    pub const fn new(r0: f64, r1: f64, r2: f64, r3: f64) -> Self {
        Self([r0, r1, r2, r3])
    }

    /// `z + w j`, with `z, w` in the complex subalgebra spanned by `1, i`.
    pub fn from_complex_pair(z: Complex64, w: Complex64) -> Self {
        Self([z.re, z.im, w.re, w.im])
    }

    /// Inverse of [`Quaternion::from_complex_pair`].
    pub fn complex_pair(&self) -> (Complex64, Complex64) {
        let [r0, r1, r2, r3] = self.0;
        (Complex64::new(r0, r1), Complex64::new(r2, r3))
    }

    pub fn from_complex(z: Complex64) -> Self {
        Self([z.re, z.im, 0.0, 0.0])
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "({a} + {b}i + {c}j + {d}k)")
    }
}

impl Add for Quaternion {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut r = self.0;
        r.iter_mut().zip(rhs.0).for_each(|(a, b)| *a += b);
        Self(r)
    }
}

impl Sub for Quaternion {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut r = self.0;
        r.iter_mut().zip(rhs.0).for_each(|(a, b)| *a -= b);
        Self(r)
    }
}

impl Neg for Quaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self(self.0.map(|a| -a))
    }
}

impl Mul for Quaternion {
    type Output = Self;

    /// Hamilton product.
    fn mul(self, rhs: Self) -> Self {
        let [a0, a1, a2, a3] = self.0;
        let [b0, b1, b2, b3] = rhs.0;
        Self([
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        ])
    }
}

impl DivisionAlgebra for Quaternion {
    const DIM: usize = 4;
    const NAME: &'static str = "quaternionic";

    fn zero() -> Self {
        Self([0.0; 4])
    }

    fn from_real(r: f64) -> Self {
        Self([r, 0.0, 0.0, 0.0])
    }

    fn coeff(&self, k: usize) -> f64 {
        self.0[k]
    }

    fn from_coeffs(c: &[f64]) -> Self {
        Self(c.try_into().expect("quaternions have 4 coefficients"))
    }

    fn conj(&self) -> Self {
        let [a, b, c, d] = self.0;
        Self([a, -b, -c, -d])
    }

    fn scale(&self, s: f64) -> Self {
        Self(self.0.map(|a| a * s))
    }
}

/// `z + u j ↦ [[z, u], [-u*, z*]]`.
///
/// An injective ring homomorphism into 2×2 complex matrices with
/// `det Q = |q|²` and `Q(q*) = Q(q)†`.
pub fn quat_to_matrix(q: Quaternion) -> Matrix2<Complex64> {
    let (z, u) = q.complex_pair();
    Matrix2::new(z, u, -u.conj(), z.conj())
}

/// Reads a quaternion back from the first row of its matrix image.
pub fn matrix_to_quat(m: &Matrix2<Complex64>) -> Quaternion {
    Quaternion::from_complex_pair(m[(0, 0)], m[(0, 1)])
}
