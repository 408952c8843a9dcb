use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::{DivisionAlgebra, Quaternion};

/// Quaternionic triples `(abc)`: `e_a e_b = e_c` together with its cyclic
/// shifts, and `e_b e_a = -e_c`.
pub const MULTIPLICATION_TRIPLES: [[usize; 3]; 7] = [
    [1, 2, 3],
    [2, 4, 6],
    [4, 3, 5],
    [3, 6, 7],
    [6, 5, 1],
    [5, 7, 2],
    [7, 1, 4],
];

/// `TABLE[a][b] = (c, s)` means `e_a e_b = s e_c`, with `e_0 = 1`.
const TABLE: [[(usize, i8); 8]; 8] = build_table();

const fn build_table() -> [[(usize, i8); 8]; 8] {
    let mut t = [[(0usize, 0i8); 8]; 8];
    let mut a = 0;
    while a < 8 {
        t[0][a] = (a, 1);
        t[a][0] = (a, 1);
        if a > 0 {
            t[a][a] = (0, -1);
        }
        a += 1;
    }
    let mut n = 0;
    while n < 7 {
        let [x, y, z] = MULTIPLICATION_TRIPLES[n];
        let cyc = [[x, y, z], [y, z, x], [z, x, y]];
        let mut c = 0;
        while c < 3 {
            let [p, q, r] = cyc[c];
            t[p][q] = (r, 1);
            t[q][p] = (r, -1);
            c += 1;
        }
        n += 1;
    }
    t
}

/// `r0 + r1 e₁ + … + r7 e₇`.
#[derive(Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Octonion(pub [f64; 8]);

impl Octonion {
    pub const fn new(r: [f64; 8]) -> Self {
        Self(r)
    }

    /// Embeds `ℍ` as the span of `1, e₁, e₂, e₃`, identifying `i, j, k` with
    /// `e₁, e₂, e₃`.
    pub fn from_quaternion(q: Quaternion) -> Self {
        let mut r = [0.0; 8];
        r[..4].copy_from_slice(&q.0);
        Self(r)
    }

    /// Cayley–Dickson doubling `q0 + q1 e₄`.
    ///
    /// Under the triple table, `q1 e₄` places the coefficients of
    /// `q1 = s0 + s1 i + s2 j + s3 k` on `e₄, e₇, e₆, -e₅` respectively.
    pub fn cayley_dickson(q0: Quaternion, q1: Quaternion) -> Self {
        Self::from_quaternion(q0) + Self::from_quaternion(q1) * Self::unit(4)
    }

    /// Splits an octonion back into the quaternion pair of
    /// [`Octonion::cayley_dickson`].
    pub fn quaternion_pair(&self) -> (Quaternion, Quaternion) {
        let r = self.0;
        (
            Quaternion::new(r[0], r[1], r[2], r[3]),
            Quaternion::new(r[4], r[7], r[6], -r[5]),
        )
    }
}

impl fmt::Debug for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}", self.0[0])?;
        for (k, c) in self.0.iter().enumerate().skip(1) {
            write!(f, " + {c}e{k}")?;
        }
        write!(f, ")")
    }
}

impl Add for Octonion {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut r = self.0;
        r.iter_mut().zip(rhs.0).for_each(|(a, b)| *a += b);
        Self(r)
    }
}

impl Sub for Octonion {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut r = self.0;
        r.iter_mut().zip(rhs.0).for_each(|(a, b)| *a -= b);
        Self(r)
    }
}

impl Neg for Octonion {
    type Output = Self;
    fn neg(self) -> Self {
        Self(self.0.map(|a| -a))
    }
}

impl Mul for Octonion {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = [0.0; 8];
        for (a, &x) in self.0.iter().enumerate() {
            if x == 0.0 {
                continue;
            }
            for (b, &y) in rhs.0.iter().enumerate() {
                let (c, s) = TABLE[a][b];
                out[c] += f64::from(s) * x * y;
            }
        }
        Self(out)
    }
}

impl DivisionAlgebra for Octonion {
    const DIM: usize = 8;
    const NAME: &'static str = "octonionic";

    fn zero() -> Self {
        Self([0.0; 8])
    }

    fn from_real(r: f64) -> Self {
        let mut c = [0.0; 8];
        c[0] = r;
        Self(c)
    }

    fn coeff(&self, k: usize) -> f64 {
        self.0[k]
    }

    fn from_coeffs(c: &[f64]) -> Self {
        Self(c.try_into().expect("octonions have 8 coefficients"))
    }

    fn conj(&self) -> Self {
        let mut r = self.0.map(|a| -a);
        r[0] = self.0[0];
        Self(r)
    }

    fn scale(&self, s: f64) -> Self {
        Self(self.0.map(|a| a * s))
    }
}
