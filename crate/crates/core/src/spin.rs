//! Clifford generators, reflections, the split-preserving subgroup of U(2,ℍ),
//! and the gauge-group actions on one generation.

use nalgebra::{DMatrix, Matrix2, Matrix3, Matrix3x2, Matrix4, Vector2};
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::algebra::{DivisionAlgebra, Quaternion};
use crate::error::{Error, Result};
use crate::hopf::{HopfVector, Level};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `X(r, d) = [[r, L_d], [L_{d*}, −r]]` acting on pairs by left multiplication.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinGenerator<A> {
    pub r: f64,
    pub d: A,
}

impl<A: DivisionAlgebra> SpinGenerator<A> {
    pub fn new(r: f64, d: A) -> Self {
        Self { r, d }
    }

    /// `(r x + d y, d* x − r y)`.
    pub fn apply(&self, (x, y): (A, A)) -> (A, A) {
        (
            x.scale(self.r) + self.d * y,
            self.d.conj() * x - y.scale(self.r),
        )
    }

    /// `r² + |d|²`.
    pub fn clifford_square(&self) -> f64 {
        self.r * self.r + self.d.norm_sqr()
    }

    /// Largest deviation of `X²` from `(r² + |d|²)·1` over a real basis of the
    /// pair space.
    pub fn square_deviation(&self) -> f64 {
        let s = self.clifford_square();
        let mut worst: f64 = 0.0;
        for k in 0..A::DIM {
            let e = A::unit(k);
            for v in [(e, A::zero()), (A::zero(), e)] {
                let (p, q) = self.apply(self.apply(v));
                worst = worst
                    .max(p.distance(&v.0.scale(s)))
                    .max(q.distance(&v.1.scale(s)));
            }
        }
        worst
    }

    /// Coordinates `(r, d₀, …, d_{DIM−1})`.
    pub fn to_coords(&self) -> Vec<f64> {
        std::iter::once(self.r).chain(self.d.coeffs()).collect()
    }

    pub fn from_coords(v: &[f64]) -> Self {
        Self { r: v[0], d: A::from_coeffs(&v[1..]) }
    }

    /// `⟨x, x′⟩ = r r′ + Re(d* d′)`.
    pub fn inner(&self, other: &Self) -> f64 {
        self.to_coords()
            .iter()
            .zip(other.to_coords())
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn distance(&self, other: &Self) -> f64 {
        self.to_coords()
            .iter()
            .zip(other.to_coords())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// `−X′XX′` for a unit mirror `X′`.
///
/// The product is evaluated as an operator on the pair space and read back from
/// its image of `(1, 0)`, which is `(r, d*)` for any generator.
pub fn reflect<A: DivisionAlgebra>(
    x: &SpinGenerator<A>,
    mirror: &SpinGenerator<A>,
    tol: f64,
) -> Result<SpinGenerator<A>> {
    let n = mirror.clifford_square().sqrt();
    if (n - 1.0).abs() > tol {
        return Err(Error::NonUnit { what: "mirror", norm: n });
    }
    let probe = (A::one(), A::zero());
    let (p, q) = mirror.apply(x.apply(mirror.apply(probe)));
    Ok(SpinGenerator { r: -p.re(), d: -q.conj() })
}

/// [`reflect`] after scaling the mirror to unit norm.
pub fn reflect_normalized<A: DivisionAlgebra>(
    x: &SpinGenerator<A>,
    mirror: &SpinGenerator<A>,
) -> Result<SpinGenerator<A>> {
    let n = mirror.clifford_square().sqrt();
    if n == 0.0 {
        return Err(Error::ZeroElement);
    }
    let unit = SpinGenerator { r: mirror.r / n, d: mirror.d.scale(1.0 / n) };
    reflect(x, &unit, f64::INFINITY)
}

/// Matrix of `x ↦ −X′XX′` on `ℝ^{1+DIM}`.
pub fn reflection_matrix<A: DivisionAlgebra>(mirror: &SpinGenerator<A>) -> Result<DMatrix<f64>> {
    let n = A::DIM + 1;
    let mut m = DMatrix::zeros(n, n);
    for j in 0..n {
        let mut e = vec![0.0; n];
        e[j] = 1.0;
        let image = reflect_normalized(&SpinGenerator::from_coords(&e), mirror)?;
        m.set_column(j, &nalgebra::DVector::from_vec(image.to_coords()));
    }
    Ok(m)
}

/// `(‖RᵀR − 1‖_max, det R)`.
pub fn rotation_defect(m: &DMatrix<f64>) -> (f64, f64) {
    let n = m.nrows();
    let orth = (m.transpose() * m - DMatrix::identity(n, n)).abs().max();
    (orth, m.determinant())
}

/// Succeeds when `R` is orthogonal with determinant +1 within `tol`.
pub fn check_rotation(m: &DMatrix<f64>, tol: f64) -> Result<()> {
    let (orth, det) = rotation_defect(m);
    if orth > tol || (det - 1.0).abs() > tol {
        return Err(Error::NotRotation);
    }
    Ok(())
}

/// `(a, b, φ)` with `|a|² + |b|² = 1`, acting on `ℍ²` by the blocks
/// `A = e^{iφ}a`, `B = e^{iφ}b`, `C = −e^{iφ}b*`, `D = e^{iφ}a*`.
///
/// On `S = (Q, P)` with `Q = z + u j`, `P = w + v j` this is
/// `(z, w) ↦ e^{iφ}U(z, w)` and `(u, v) ↦ e^{iφ}U(u, v)` with
/// `U = [[a, b], [−b*, a*]]`. On two-qubit amplitudes it is `U ⊗ 1` on the
/// first qubit times a global phase.
///
/// The parametrization double-counts: `(a, b, φ)` and
/// `(−a, −b, φ + π)` give the same element.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SplitElement {
    pub a: Complex64,
    pub b: Complex64,
    pub phi: f64,
}

impl SplitElement {
    pub fn new(a: Complex64, b: Complex64, phi: f64, tol: f64) -> Result<Self> {
        let n = a.norm_sqr() + b.norm_sqr();
        if (n - 1.0).abs() > tol {
            return Err(Error::InvalidGroupElement(format!(
                "|a|² + |b|² = {n}, expected 1"
            )));
        }
        Ok(Self { a, b, phi })
    }

    pub fn identity() -> Self {
        Self { a: c(1.0, 0.0), b: c(0.0, 0.0), phi: 0.0 }
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let u: Quaternion = crate::algebra::random_unit(rng);
        let (a, b) = u.complex_pair();
        Self { a, b, phi: rng.random_range(-std::f64::consts::PI..std::f64::consts::PI) }
    }

    /// `U = [[a, b], [−b*, a*]]`.
    pub fn su2(&self) -> Matrix2<Complex64> {
        Matrix2::new(self.a, self.b, -self.b.conj(), self.a.conj())
    }

    /// `[[A, B], [C, D]]` as complex numbers embedded in ℍ.
    pub fn blocks(&self) -> [[Quaternion; 2]; 2] {
        let p = Complex64::from_polar(1.0, self.phi);
        let q = |z: Complex64| Quaternion::from_complex(p * z);
        [[q(self.a), q(self.b)], [q(-self.b.conj()), q(self.a.conj())]]
    }

    /// Complex 4×4 image of the block matrix under `q ↦ quat_to_matrix(q)`.
    pub fn matrix4(&self) -> Matrix4<Complex64> {
        let b = self.blocks();
        let mut m = Matrix4::zeros();
        for (i, row) in b.iter().enumerate() {
            for (j, q) in row.iter().enumerate() {
                m.fixed_view_mut::<2, 2>(2 * i, 2 * j)
                    .copy_from(&crate::algebra::quat_to_matrix(*q));
            }
        }
        m
    }

    /// `(AQ + BP, CQ + DP)` with quaternion products.
    pub fn apply(&self, (q, p): (Quaternion, Quaternion)) -> (Quaternion, Quaternion) {
        let [[a, b], [cc, d]] = self.blocks();
        (a * q + b * p, cc * q + d * p)
    }

    /// The closed-form action on the complex components.
    pub fn apply_closed_form(&self, (q, p): (Quaternion, Quaternion)) -> (Quaternion, Quaternion) {
        let (z, u) = q.complex_pair();
        let (w, v) = p.complex_pair();
        let m = self.su2() * Complex64::from_polar(1.0, self.phi);
        let zw = m * Vector2::new(z, w);
        let uv = m * Vector2::new(u, v);
        (
            Quaternion::from_complex_pair(zw[0], uv[0]),
            Quaternion::from_complex_pair(zw[1], uv[1]),
        )
    }

    /// Group product `self ∘ other`.
    pub fn compose(&self, other: &SplitElement) -> SplitElement {
        let u = self.su2() * other.su2();
        SplitElement { a: u[(0, 0)], b: u[(0, 1)], phi: self.phi + other.phi }
    }

    /// `‖matrix4(e₁∘e₂) − matrix4(e₁)·matrix4(e₂)‖_max`.
    pub fn closure_defect(&self, other: &SplitElement) -> f64 {
        let lhs = self.compose(other).matrix4();
        let rhs = self.matrix4() * other.matrix4();
        (lhs - rhs).map(|z| z.norm()).max()
    }

    /// Induced action on the quaternionic Hopf base: `R(U)` on `(x₁, x₂, x₅)`
    /// and a rotation by `2φ` on `(x₃, x₄)`.
    pub fn induced_rotation(&self) -> (Matrix3<f64>, f64) {
        (su2_to_so3(&self.su2()), 2.0 * self.phi)
    }
}

fn pauli() -> [Matrix2<Complex64>; 3] {
    let (o, z, i) = (c(1.0, 0.0), c(0.0, 0.0), c(0.0, 1.0));
    [
        Matrix2::new(z, o, o, z),
        Matrix2::new(z, -i, i, z),
        Matrix2::new(o, z, z, -o),
    ]
}

/// Adjoint image `R_{ij} = ½ Tr(σᵢ U σⱼ U†)`.
pub fn su2_to_so3(u: &Matrix2<Complex64>) -> Matrix3<f64> {
    let s = pauli();
    Matrix3::from_fn(|i, j| 0.5 * (s[i] * u * s[j] * u.adjoint()).trace().re)
}

/// `R` on `(x₁, x₂, x₅)` and a rotation by `θ` on `(x₃, x₄)`.
pub fn so3_so2_action(r: &Matrix3<f64>, theta: f64, v: &HopfVector) -> Result<HopfVector> {
    check_rotation(&DMatrix::from_column_slice(3, 3, r.as_slice()), 1e-10)?;
    if v.level != Level::Quaternionic {
        return Err(Error::UnsupportedLevel(v.level.name()));
    }
    let x = &v.coords;
    let outer = r * nalgebra::Vector3::new(x[0], x[1], x[4]);
    let (s, co) = theta.sin_cos();
    let coords = vec![
        outer[0],
        outer[1],
        co * x[2] - s * x[3],
        s * x[2] + co * x[3],
        outer[2],
    ];
    HopfVector::new(Level::Quaternionic, coords)
}

/// `R₃` on `(x₁, x₂, x₉)` and `R₆` on `(x₃, …, x₈)` of an octonionic vector.
pub fn so3_so6_action(
    r3: &Matrix3<f64>,
    r6: &DMatrix<f64>,
    v: &HopfVector,
) -> Result<HopfVector> {
    check_rotation(&DMatrix::from_column_slice(3, 3, r3.as_slice()), 1e-10)?;
    if r6.shape() != (6, 6) {
        return Err(Error::DimensionMismatch("inner rotation must be 6×6".into()));
    }
    check_rotation(r6, 1e-10)?;
    if v.level != Level::Octonionic {
        return Err(Error::UnsupportedLevel(v.level.name()));
    }
    let x = &v.coords;
    let outer = r3 * nalgebra::Vector3::new(x[0], x[1], x[8]);
    let inner = r6 * nalgebra::DVector::from_column_slice(&x[2..8]);
    let mut coords = vec![outer[0], outer[1]];
    coords.extend(inner.iter());
    coords.push(outer[2]);
    HopfVector::new(Level::Octonionic, coords)
}

fn unitary_defect(m: &DMatrix<Complex64>) -> f64 {
    let n = m.nrows();
    (m.adjoint() * m - DMatrix::identity(n, n)).map(|z| z.norm()).max()
}

fn check_special_unitary(m: &DMatrix<Complex64>, what: &str, tol: f64) -> Result<()> {
    let u = unitary_defect(m);
    let d = (m.determinant() - c(1.0, 0.0)).norm();
    if u > tol || d > tol {
        return Err(Error::InvalidGroupElement(format!(
            "{what}: unitarity defect {u:e}, determinant defect {d:e}"
        )));
    }
    Ok(())
}

fn check_unit_phase(alpha: Complex64, tol: f64) -> Result<()> {
    if (alpha.norm() - 1.0).abs() > tol {
        return Err(Error::InvalidGroupElement(format!("|α| = {}", alpha.norm())));
    }
    Ok(())
}

/// `diag(α⁻³, α g)`, the embedding of U(1) × SU(3) in SU(4).
pub fn su3u1_embed(alpha: Complex64, g: &Matrix3<Complex64>, tol: f64) -> Result<Matrix4<Complex64>> {
    check_unit_phase(alpha, tol)?;
    check_special_unitary(&DMatrix::from_column_slice(3, 3, g.as_slice()), "g", tol)?;
    let mut m = Matrix4::zeros();
    m[(0, 0)] = alpha.powi(-3);
    m.fixed_view_mut::<3, 3>(1, 1).copy_from(&(g * alpha));
    Ok(m)
}

/// Haar-random element of SU(n) from the QR decomposition of a Ginibre matrix.
pub fn random_su<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DMatrix<Complex64> {
    let z = DMatrix::from_fn(n, n, |_, _| {
        c(rng.sample::<f64, _>(StandardNormal), rng.sample::<f64, _>(StandardNormal))
    });
    let qr = z.qr();
    let (mut q, r) = (qr.q(), qr.r());
    for j in 0..n {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { c(1.0, 0.0) };
        let col = q.column(j) * phase;
        q.set_column(j, &col);
    }
    let det = q.determinant();
    let fix = det.powf(-1.0 / n as f64);
    q * fix
}

/// `(g, h, α) ∈ SU(3) × SU(2) × U(1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenerationElement {
    pub g: Matrix3<Complex64>,
    pub h: Matrix2<Complex64>,
    pub alpha: Complex64,
}

impl GenerationElement {
    pub fn new(
        g: Matrix3<Complex64>,
        h: Matrix2<Complex64>,
        alpha: Complex64,
        tol: f64,
    ) -> Result<Self> {
        check_special_unitary(&DMatrix::from_column_slice(3, 3, g.as_slice()), "g", tol)?;
        check_special_unitary(&DMatrix::from_column_slice(2, 2, h.as_slice()), "h", tol)?;
        check_unit_phase(alpha, tol)?;
        Ok(Self { g, h, alpha })
    }

    pub fn identity() -> Self {
        Self { g: Matrix3::identity(), h: Matrix2::identity(), alpha: c(1.0, 0.0) }
    }

    /// `(ζ²·1₃, −1₂, ζ)` with `ζ = e^{iπ/3}`, generating the ℤ₆ kernel.
    pub fn z6_generator() -> Self {
        let zeta = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_3);
        Self {
            g: Matrix3::identity() * (zeta * zeta),
            h: -Matrix2::identity(),
            alpha: zeta,
        }
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let g = random_su(3, rng);
        let h = random_su(2, rng);
        Self {
            g: Matrix3::from_fn(|i, j| g[(i, j)]),
            h: Matrix2::from_fn(|i, j| h[(i, j)]),
            alpha: Complex64::from_polar(1.0, rng.random_range(-std::f64::consts::PI..std::f64::consts::PI)),
        }
    }

    pub fn compose(&self, other: &GenerationElement) -> GenerationElement {
        Self {
            g: self.g * other.g,
            h: self.h * other.h,
            alpha: self.alpha * other.alpha,
        }
    }

    pub fn pow(&self, n: u32) -> GenerationElement {
        (0..n).fold(Self::identity(), |acc, _| acc.compose(self))
    }

    /// `L′ = α⁻³ h L` and `Q′ = α (g ⊗ h) Q = α g Q hᵀ`, with `Q` indexed by
    /// (colour, isospin).
    pub fn act(
        &self,
        l: &Vector2<Complex64>,
        q: &Matrix3x2<Complex64>,
    ) -> (Vector2<Complex64>, Matrix3x2<Complex64>) {
        let l2 = self.h * l * self.alpha.powi(-3);
        let q2 = self.g * q * self.h.transpose() * self.alpha;
        (l2, q2)
    }
}

/// Largest entry difference between two `(L, Q)` pairs.
pub fn generation_distance(
    a: &(Vector2<Complex64>, Matrix3x2<Complex64>),
    b: &(Vector2<Complex64>, Matrix3x2<Complex64>),
) -> f64 {
    let dl = (a.0 - b.0).map(|z| z.norm()).max();
    let dq = (a.1 - b.1).map(|z| z.norm()).max();
    dl.max(dq)
}

/// Random `(L, Q)` with standard-normal complex entries.
pub fn random_generation<R: Rng + ?Sized>(
    rng: &mut R,
) -> (Vector2<Complex64>, Matrix3x2<Complex64>) {
    let mut z = || c(rng.sample::<f64, _>(StandardNormal), rng.sample::<f64, _>(StandardNormal));
    (Vector2::from_fn(|_, _| z()), Matrix3x2::from_fn(|_, _| z()))
}
