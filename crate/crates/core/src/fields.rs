//! Weyl, Dirac and Maxwell structures built from one and two qubits.
//!
//! Spinors need not be normalized. Momentum components are contravariant,
//! `k^μ = (|a|²+|b|², 2Re(a*b), 2Im(a*b), |a|²−|b|²)`, and are lowered with
//! `η = diag(+1, −1, −1, −1)` where a covariant index is needed.
//!
//! The five Σ matrices are
//! `Σ₁ = −σ₁ ⊕ σ₁`, `Σ₂ = −σ₂ ⊕ σ₂`, `Σ₅ = −σ₃ ⊕ σ₃`, and `Σ₃`, `Σ₄` the
//! off-diagonal `[[0, 1], [1, 0]]`, `[[0, −i], [i, 0]]` in 2×2 blocks. With this
//! basis the block equations read
//!
//! ```text
//! (K₀ + K₁σ₁ + K₂σ₂ + K₅σ₃) ψ_A = m e^{iφ} ψ_B
//! (K₀ − K₁σ₁ − K₂σ₂ − K₅σ₃) ψ_B = m e^{−iφ} ψ_A
//! ```
//!
//! with `m e^{iφ} = K₃ − iK₄`, so the Dirac spinor is `(ψ_B, e^{−iφ}ψ_A)`.

use nalgebra::{Matrix2, Matrix4, Vector2, Vector4};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::states::PureState;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Below this mass the phase is set to zero.
pub const MASSLESS: f64 = 1e-12;

const ETA: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KLevel {
    /// `k₀..k₃` from one spinor.
    Weyl4,
    /// `K₀..K₅` from a two-qubit state.
    Dim6,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KVector {
    pub level: KLevel,
    pub components: Vec<f64>,
}

impl KVector {
    /// `k₀² − Σᵢkᵢ²`.
    pub fn interval(&self) -> f64 {
        let k = &self.components;
        k[0] * k[0] - k[1..].iter().map(|x| x * x).sum::<f64>()
    }
}

pub fn pauli() -> [Matrix2<Complex64>; 3] {
    let (o, z, i) = (c(1.0, 0.0), c(0.0, 0.0), c(0.0, 1.0));
    [
        Matrix2::new(z, o, o, z),
        Matrix2::new(z, -i, i, z),
        Matrix2::new(o, z, z, -o),
    ]
}

fn block(tl: Matrix2<Complex64>, tr: Matrix2<Complex64>, bl: Matrix2<Complex64>, br: Matrix2<Complex64>) -> Matrix4<Complex64> {
    let mut m = Matrix4::zeros();
    m.fixed_view_mut::<2, 2>(0, 0).copy_from(&tl);
    m.fixed_view_mut::<2, 2>(0, 2).copy_from(&tr);
    m.fixed_view_mut::<2, 2>(2, 0).copy_from(&bl);
    m.fixed_view_mut::<2, 2>(2, 2).copy_from(&br);
    m
}

/// `kᵘ` of a single spinor `(a, b)`.
pub fn weyl_k(psi: &Vector2<Complex64>) -> KVector {
    let (a, b) = (psi[0], psi[1]);
    let w = a.conj() * b;
    KVector {
        level: KLevel::Weyl4,
        components: vec![
            a.norm_sqr() + b.norm_sqr(),
            2.0 * w.re,
            2.0 * w.im,
            a.norm_sqr() - b.norm_sqr(),
        ],
    }
}

/// `‖(k₀ − kᵢσⁱ) ψ‖` for a given `k`.
pub fn weyl_residual_with(k: &[f64], psi: &Vector2<Complex64>) -> f64 {
    let s = pauli();
    let op = Matrix2::identity() * c(k[0], 0.0)
        - s[0] * c(k[1], 0.0)
        - s[1] * c(k[2], 0.0)
        - s[2] * c(k[3], 0.0);
    (op * psi).norm()
}

pub fn weyl_residual(psi: &Vector2<Complex64>) -> f64 {
    weyl_residual_with(&weyl_k(psi).components, psi)
}

/// `Σ₁ … Σ₅`.
pub fn sigma_matrices() -> [Matrix4<Complex64>; 5] {
    let s = pauli();
    let z = Matrix2::zeros();
    let one = Matrix2::identity();
    let i = c(0.0, 1.0);
    [
        block(-s[0], z, z, s[0]),
        block(-s[1], z, z, s[1]),
        block(z, one, one, z),
        block(z, -one * i, one * i, z),
        block(-s[2], z, z, s[2]),
    ]
}

fn four_spinor(psi: &[Complex64]) -> Result<Vector4<Complex64>> {
    if psi.len() != 4 {
        return Err(Error::AmplitudeLength { len: psi.len(), expected: 4 });
    }
    Ok(Vector4::from_column_slice(psi))
}

/// `K₀ = ⟨Ψ|Ψ⟩`, `Kᵢ = ⟨Ψ|Σᵢ|Ψ⟩`.
pub fn sigma_k(psi: &[Complex64]) -> Result<KVector> {
    let v = four_spinor(psi)?;
    let mut k = vec![v.norm_squared()];
    for s in sigma_matrices() {
        k.push(v.dotc(&(s * v)).re);
    }
    Ok(KVector { level: KLevel::Dim6, components: k })
}

pub fn sigma_k_state(s: &PureState) -> Result<KVector> {
    s.expect_qubits(2)?;
    sigma_k(s.amplitudes())
}

/// `‖(K₀ − KᵢΣⁱ) Ψ‖`.
pub fn sigma_residual(psi: &[Complex64]) -> Result<f64> {
    let v = four_spinor(psi)?;
    let k = sigma_k(psi)?.components;
    let mut op = Matrix4::identity() * c(k[0], 0.0);
    for (ki, s) in k[1..].iter().zip(sigma_matrices()) {
        op -= s * c(*ki, 0.0);
    }
    Ok((op * v).norm())
}

/// `(m, φ)` with `m e^{iφ} = K₃ − iK₄`; `φ = 0` when massless.
pub fn mass_phase(k: &KVector) -> (f64, f64) {
    let (k3, k4) = (k.components[3], k.components[4]);
    let m = k3.hypot(k4);
    if m < MASSLESS {
        (m, 0.0)
    } else {
        (m, (-k4).atan2(k3))
    }
}

/// `γ₀ = [[0, 1], [1, 0]]`, `γᵢ = [[0, σᵢ], [−σᵢ, 0]]`.
pub fn gammas() -> [Matrix4<Complex64>; 4] {
    let s = pauli();
    let z = Matrix2::zeros();
    let one = Matrix2::identity();
    [
        block(z, one, one, z),
        block(z, s[0], -s[0], z),
        block(z, s[1], -s[1], z),
        block(z, s[2], -s[2], z),
    ]
}

/// `iγ₀γ₁γ₂γ₃ = diag(−1, −1, 1, 1)`.
pub fn gamma5() -> Matrix4<Complex64> {
    let g = gammas();
    g[0] * g[1] * g[2] * g[3] * c(0.0, 1.0)
}

/// `(P_L, P_R) = ½(1 ∓ γ₅)`.
pub fn chiral_projectors() -> (Matrix4<Complex64>, Matrix4<Complex64>) {
    let g5 = gamma5();
    let one = Matrix4::identity();
    ((one - g5) * c(0.5, 0.0), (one + g5) * c(0.5, 0.0))
}

/// Two spinors `ψ_A = (a, b)` and `ψ_B = (c, d)` of a two-qubit state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiracState {
    pub psi_a: Vector2<Complex64>,
    pub psi_b: Vector2<Complex64>,
}

impl DiracState {
    pub fn from_amplitudes(psi: &[Complex64]) -> Result<Self> {
        let v = four_spinor(psi)?;
        Ok(Self {
            psi_a: Vector2::new(v[0], v[1]),
            psi_b: Vector2::new(v[2], v[3]),
        })
    }

    pub fn from_state(s: &PureState) -> Result<Self> {
        s.expect_qubits(2)?;
        Self::from_amplitudes(s.amplitudes())
    }

    pub fn amplitudes(&self) -> [Complex64; 4] {
        [self.psi_a[0], self.psi_a[1], self.psi_b[0], self.psi_b[1]]
    }

    /// `Ψ′ = (ψ_B, ψ_A)`.
    pub fn assembled(&self) -> Vector4<Complex64> {
        Vector4::new(self.psi_b[0], self.psi_b[1], self.psi_a[0], self.psi_a[1])
    }

    pub fn k(&self) -> KVector {
        sigma_k(&self.amplitudes()).expect("four amplitudes")
    }

    /// `(ψ_B, e^{−iφ}ψ_A)` with the mass phase absorbed.
    pub fn dirac_spinor(&self) -> Vector4<Complex64> {
        let (_, phi) = mass_phase(&self.k());
        let p = Complex64::from_polar(1.0, -phi);
        Vector4::new(self.psi_b[0], self.psi_b[1], p * self.psi_a[0], p * self.psi_a[1])
    }

    /// `p = (K₀, K₁, K₂, K₅)`.
    pub fn momentum(&self) -> [f64; 4] {
        let k = self.k().components;
        [k[0], k[1], k[2], k[5]]
    }

    pub fn left(&self) -> Vector4<Complex64> {
        chiral_projectors().0 * self.assembled()
    }

    pub fn right(&self) -> Vector4<Complex64> {
        chiral_projectors().1 * self.assembled()
    }
}

/// `‖(p_μγ_μ − m) Ψ′‖` with the γ matrices of [`gammas`].
pub fn dirac_residual_with(p: &[f64; 4], m: f64, spinor: &Vector4<Complex64>) -> f64 {
    let g = gammas();
    let mut op = Matrix4::identity() * c(-m, 0.0);
    for (pi, gi) in p.iter().zip(g) {
        op += gi * c(*pi, 0.0);
    }
    (op * spinor).norm()
}

pub fn dirac_residual_state(d: &DiracState) -> f64 {
    let (m, _) = mass_phase(&d.k());
    dirac_residual_with(&d.momentum(), m, &d.dirac_spinor())
}

pub fn dirac_residual(psi: &[Complex64]) -> Result<f64> {
    Ok(dirac_residual_state(&DiracState::from_amplitudes(psi)?))
}

/// `ψ_A ↦ e^{iφ}ψ_A`, `ψ_B` unchanged.
pub fn chiral_gauge(d: &DiracState, phi: f64) -> DiracState {
    DiracState { psi_a: d.psi_a * Complex64::from_polar(1.0, phi), psi_b: d.psi_b }
}

/// Antisymmetric complex `F_{μν}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldTensor {
    pub f: Matrix4<Complex64>,
}

impl FieldTensor {
    /// `max |F_{μν} + F_{νμ}|`.
    pub fn antisymmetry_defect(&self) -> f64 {
        (self.f + self.f.transpose()).map(|z| z.norm()).max()
    }

    /// `max |F_{k0} − iF_{lm}|` over cyclic `(k, l, m)`.
    pub fn self_duality_defect(&self) -> f64 {
        let i = c(0.0, 1.0);
        [(1, 2, 3), (2, 3, 1), (3, 1, 2)]
            .iter()
            .map(|&(k, l, m)| (self.f[(k, 0)] - i * self.f[(l, m)]).norm())
            .fold(0.0, f64::max)
    }
}

/// The tensor built from the spinor `(a, b)`.
pub fn em_tensor(psi: &Vector2<Complex64>) -> FieldTensor {
    let (a, b) = (psi[0], psi[1]);
    let i = c(0.0, 1.0);
    let h = c(0.5, 0.0);
    let minus = (a * a - b * b) * h;
    let plus = (a * a + b * b) * h;
    let ab = a * b;
    let z = c(0.0, 0.0);
    #[rustfmt::skip]
    let f = Matrix4::new(
        z,          -minus,     -i * plus,  ab,
        minus,      z,          i * ab,     -plus,
        i * plus,   -i * ab,    z,          -i * minus,
        -ab,        plus,       i * minus,  z,
    );
    FieldTensor { f }
}

/// `(bianchi, source)` for contravariant `k` and tensor `F`:
/// `max |k_λF_{μν} + k_νF_{λμ} + k_μF_{νλ}|` with `k_μ = η_{μν}k^ν`, and
/// `max_μ |F_{μν}k^ν|`.
pub fn maxwell_residuals_with(k_upper: &[f64], f: &FieldTensor) -> (f64, f64) {
    let k: Vec<f64> = k_upper.iter().zip(ETA).map(|(x, e)| x * e).collect();
    let f = &f.f;
    let mut bianchi: f64 = 0.0;
    for l in 0..4 {
        for m in 0..4 {
            for n in 0..4 {
                let s = f[(m, n)] * k[l] + f[(l, m)] * k[n] + f[(n, l)] * k[m];
                bianchi = bianchi.max(s.norm());
            }
        }
    }
    let source = (0..4)
        .map(|mu| (0..4).map(|nu| f[(mu, nu)] * k_upper[nu]).sum::<Complex64>().norm())
        .fold(0.0, f64::max);
    (bianchi, source)
}

pub fn maxwell_residuals(psi: &Vector2<Complex64>) -> (f64, f64) {
    maxwell_residuals_with(&weyl_k(psi).components, &em_tensor(psi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use rand_distr::StandardNormal;

    const H: f64 = std::f64::consts::FRAC_1_SQRT_2;

    fn gaussian(rng: &mut ChaCha8Rng) -> Complex64 {
        c(rng.sample(StandardNormal), rng.sample(StandardNormal))
    }

    fn spinor(rng: &mut ChaCha8Rng) -> Vector2<Complex64> {
        Vector2::new(gaussian(rng), gaussian(rng))
    }

    fn four(rng: &mut ChaCha8Rng) -> Vec<Complex64> {
        (0..4).map(|_| gaussian(rng)).collect()
    }

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < tol)
    }

    #[test]
    fn weyl_examples() {
        let k = weyl_k(&Vector2::new(c(1.0, 0.0), c(0.0, 0.0)));
        assert_eq!(k.components, vec![1.0, 0.0, 0.0, 1.0]);
        let k = weyl_k(&Vector2::new(c(H, 0.0), c(H, 0.0)));
        assert!(close(&k.components, &[1.0, 1.0, 0.0, 0.0], 1e-15));
        assert_eq!(weyl_residual(&Vector2::new(c(1.0, 0.0), c(0.0, 0.0))), 0.0);
    }

    #[test]
    fn weyl_identities() {
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        for _ in 0..500 {
            let psi = spinor(&mut rng);
            let k = weyl_k(&psi);
            let scale = k.components[0].powi(2);
            assert!(k.interval().abs() < 1e-12 * scale);
            assert!(weyl_residual(&psi) < 1e-12 * (1.0 + scale));
            // explicit second component against the closed form
            let (a, b) = (psi[0], psi[1]);
            let k2 = (c(0.0, -1.0) * (a.conj() * b - b.conj() * a)).re;
            assert!((k.components[2] - k2).abs() < 1e-12 * (1.0 + scale));
        }
        let psi = Vector2::new(c(0.6, 0.0), c(0.0, 0.8));
        let mut k = weyl_k(&psi).components;
        k[3] += 0.1;
        assert!(weyl_residual_with(&k, &psi) > 1e-3);
    }

    #[test]
    fn sigma_matrices_are_clifford() {
        let s = sigma_matrices();
        for i in 0..5 {
            assert_eq!(s[i].adjoint(), s[i]);
            for j in 0..5 {
                let anti = s[i] * s[j] + s[j] * s[i];
                let expected = if i == j { Matrix4::identity() * c(2.0, 0.0) } else { Matrix4::zeros() };
                assert_eq!(anti, expected, "Σ{} Σ{}", i + 1, j + 1);
            }
        }
    }

    #[test]
    fn sigma_k_examples() {
        let s = PureState::from_real(&[1.0, 0.0, 1.0, 0.0]).unwrap();
        let k = sigma_k_state(&s).unwrap();
        assert!(close(&k.components, &[1.0, 0.0, 0.0, 1.0, 0.0, 0.0], 1e-15));
        let (m, phi) = mass_phase(&k);
        assert!((m - 1.0).abs() < 1e-15 && phi == 0.0);

        let k = sigma_k_state(&PureState::bell()).unwrap();
        assert!(close(&k.components, &[1.0, 0.0, 0.0, 0.0, 0.0, -1.0], 1e-15));
        assert_eq!(mass_phase(&k), (0.0, 0.0));

        assert!(sigma_k(&[c(1.0, 0.0)]).is_err());
        assert!(sigma_k_state(&PureState::basis(1, 0).unwrap()).is_err());
    }

    #[test]
    fn sigma_k_matches_component_expansions() {
        let mut rng = ChaCha8Rng::seed_from_u64(52);
        for _ in 0..200 {
            let p = four(&mut rng);
            let (a, b, cc, d) = (p[0], p[1], p[2], p[3]);
            let k = sigma_k(&p).unwrap().components;
            let i = c(0.0, 1.0);
            let k3 = (a.conj() * cc + cc.conj() * a + b.conj() * d + d.conj() * b).re;
            let k4 = (i * cc.conj() * a + i * d.conj() * b - i * a.conj() * cc - i * b.conj() * d).re;
            let k5 = -a.norm_sqr() + b.norm_sqr() + cc.norm_sqr() - d.norm_sqr();
            let k2 = (i * a.conj() * b - i * b.conj() * a - i * cc.conj() * d + i * d.conj() * cc).re;
            let k1 = (-a.conj() * b - b.conj() * a + cc.conj() * d + d.conj() * cc).re;
            assert!(close(&k[1..], &[k1, k2, k3, k4, k5], 1e-12));
        }
    }

    #[test]
    fn six_dimensional_null_and_mass_shell() {
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        for _ in 0..500 {
            let s = PureState::random(2, &mut rng).unwrap();
            let k = sigma_k_state(&s).unwrap();
            assert!(k.interval().abs() < 1e-12);
            assert!(sigma_residual(s.amplitudes()).unwrap() < 1e-12);
            let (m, _) = mass_phase(&k);
            let kc = &k.components;
            let shell = kc[0] * kc[0] - kc[1] * kc[1] - kc[2] * kc[2] - kc[5] * kc[5];
            assert!((m * m - shell).abs() < 1e-12);
        }
    }

    #[test]
    fn mass_phase_examples() {
        let k = KVector { level: KLevel::Dim6, components: vec![5.0, 0.0, 0.0, 3.0, 4.0, 0.0] };
        let (m, phi) = mass_phase(&k);
        assert!((m - 5.0).abs() < 1e-15);
        let back = Complex64::from_polar(m, phi);
        assert!((back - c(3.0, -4.0)).norm() < 1e-14);
        let k = KVector { level: KLevel::Dim6, components: vec![1.0, 1.0, 0.0, 0.0, 0.0, 0.0] };
        assert_eq!(mass_phase(&k), (0.0, 0.0));
    }

    #[test]
    fn gamma_structure() {
        let g5 = gamma5();
        let expected = Matrix4::from_diagonal(&Vector4::new(c(-1.0, 0.0), c(-1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)));
        assert!((g5 - expected).map(|z| z.norm()).max() < 1e-15);
        let (pl, pr) = chiral_projectors();
        let d = DiracState::from_amplitudes(&[c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0), c(4.0, 0.0)]).unwrap();
        assert_eq!(pl * d.assembled(), Vector4::new(c(3.0, 0.0), c(4.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)));
        assert_eq!(pr * d.assembled(), Vector4::new(c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0), c(2.0, 0.0)));
    }

    #[test]
    fn dirac_examples() {
        let s = PureState::from_real(&[1.0, 0.0, 1.0, 0.0]).unwrap();
        assert!(dirac_residual(s.amplitudes()).unwrap() < 1e-12);
        let bell = PureState::bell();
        assert!(dirac_residual(bell.amplitudes()).unwrap() < 1e-12);

        let d = DiracState::from_state(&s).unwrap();
        let mut p = d.momentum();
        p[1] += 0.1;
        let (m, _) = mass_phase(&d.k());
        assert!(dirac_residual_with(&p, m, &d.dirac_spinor()) > 1e-3);
    }

    #[test]
    fn dirac_holds_for_random_states() {
        let mut rng = ChaCha8Rng::seed_from_u64(54);
        let mut unabsorbed: f64 = 0.0;
        for _ in 0..500 {
            let s = PureState::random(2, &mut rng).unwrap();
            assert!(dirac_residual(s.amplitudes()).unwrap() < 1e-12);
            let d = DiracState::from_state(&s).unwrap();
            let (m, _) = mass_phase(&d.k());
            unabsorbed = unabsorbed.max(dirac_residual_with(&d.momentum(), m, &d.assembled()));
        }
        assert!(unabsorbed > 1e-3);
    }

    #[test]
    fn mass_is_twice_the_spinor_overlap() {
        let mut rng = ChaCha8Rng::seed_from_u64(55);
        for _ in 0..200 {
            let d = DiracState::from_amplitudes(&four(&mut rng)).unwrap();
            let (m, _) = mass_phase(&d.k());
            let overlap = d.psi_a.dotc(&d.psi_b).norm();
            assert!((m - 2.0 * overlap).abs() < 1e-12 * (1.0 + m));

            // orthogonal spinors
            let a = d.psi_a;
            let perp = Vector2::new(-a[1].conj(), a[0].conj()) * gaussian(&mut rng);
            let o = DiracState { psi_a: a, psi_b: perp };
            assert!(mass_phase(&o.k()).0 < 1e-10);
        }
        for k in 0..4 {
            let s = PureState::basis(2, k).unwrap();
            assert!(mass_phase(&sigma_k_state(&s).unwrap()).0 < 1e-10);
        }
    }

    #[test]
    fn chiral_gauge_properties() {
        let mut rng = ChaCha8Rng::seed_from_u64(56);
        let (pl, pr) = chiral_projectors();
        for _ in 0..100 {
            let d = DiracState::from_amplitudes(&four(&mut rng)).unwrap();
            assert_eq!(chiral_gauge(&d, 0.0), d);
            let phi: f64 = rng.random_range(-3.0..3.0);
            let g = chiral_gauge(&d, phi);
            assert!((pl * g.assembled() - pl * d.assembled()).norm() < 1e-12);
            let phase = Complex64::from_polar(1.0, phi);
            assert!((pr * g.assembled() - pr * d.assembled() * phase).norm() < 1e-12);
            let r0 = dirac_residual_state(&d);
            let r1 = dirac_residual_state(&g);
            assert!((r0 - r1).abs() < 1e-12 * (1.0 + d.k().components[0].powi(2)));
            assert!((g.dirac_spinor() - d.dirac_spinor()).norm() < 1e-12 * (1.0 + d.k().components[0]));
        }
        let d = DiracState::from_amplitudes(&[c(1.0, 0.0), c(0.5, 0.0), c(0.2, 0.0), c(0.1, 0.0)]).unwrap();
        let g = chiral_gauge(&d, std::f64::consts::PI);
        assert!((g.right() + d.right()).norm() < 1e-15);
        assert_eq!(g.left(), d.left());
    }

    #[test]
    fn em_tensor_examples() {
        let f = em_tensor(&Vector2::new(c(1.0, 0.0), c(0.0, 0.0))).f;
        assert_eq!(f[(0, 1)], c(-0.5, 0.0));
        assert_eq!(f[(0, 2)], c(0.0, -0.5));
        assert_eq!(f[(0, 3)], c(0.0, 0.0));
        let f = em_tensor(&Vector2::new(c(0.0, 0.0), c(1.0, 0.0))).f;
        assert_eq!(f[(0, 1)], c(0.5, 0.0));
        assert_eq!(f[(0, 2)], c(0.0, -0.5));
        assert_eq!(f[(0, 3)], c(0.0, 0.0));
    }

    #[test]
    fn maxwell_identities() {
        assert_eq!(maxwell_residuals(&Vector2::new(c(1.0, 0.0), c(0.0, 0.0))), (0.0, 0.0));
        let mut rng = ChaCha8Rng::seed_from_u64(57);
        for _ in 0..500 {
            let psi = spinor(&mut rng);
            let scale = 1.0 + psi.norm_squared().powi(2);
            let t = em_tensor(&psi);
            assert_eq!(t.antisymmetry_defect(), 0.0);
            assert!(t.self_duality_defect() < 1e-12 * scale);
            let (b, s) = maxwell_residuals(&psi);
            assert!(b < 1e-12 * scale && s < 1e-12 * scale, "{b} {s}");
        }
    }

    #[test]
    fn maxwell_residuals_detect_perturbations() {
        let psi = Vector2::new(c(H, 0.0), c(H, 0.0));
        let mut t = em_tensor(&psi);
        t.f[(0, 1)] += c(1e-3, 0.0);
        let (b, s) = maxwell_residuals_with(&weyl_k(&psi).components, &t);
        assert!(b > 5e-4 && b < 5e-3, "{b}");
        assert!(s > 5e-4 && s < 5e-3, "{s}");
    }
}
