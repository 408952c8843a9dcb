//! The complex, quaternionic and octonionic Hopf maps S³→S², S⁷→S⁴, S¹⁵→S⁸.
//!
//! The default route is the expectation-value formulation
//! `xᵢ = (x₀*, x₁*) σᵢ (x₀, x₁)ᵀ` with the Pauli-type generators
//! `[[0,1],[1,0]]`, `[[0,-e],[e,0]]` for each imaginary unit `e`, and
//! `[[1,0],[0,-1]]`. It has no singular points. The ratio route, an inverse
//! stereographic projection of `x₀x₁⁻¹`, is kept as an independent cross-check.
//!
//! Over 𝕆 the two parenthesizations `conj(x)·(e·y)` and `(conj(x)·e)·y` differ
//! by an associator, so each off-diagonal term is evaluated as the mean of both.
//! The mean is real to rounding; either order alone leaves an O(1) imaginary
//! part on generic states.

use serde::{Deserialize, Serialize};

use crate::algebra::{DivisionAlgebra, Octonion, Quaternion};
use crate::error::{Error, Result};
use crate::states::PureState;
use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Complex,
    Quaternionic,
    Octonionic,
}

impl Level {
    /// Number of base-space coordinates: 3, 5 or 9.
    pub fn coords(self) -> usize {
        match self {
            Level::Complex => 3,
            Level::Quaternionic => 5,
            Level::Octonionic => 9,
        }
    }

    pub fn qubits(self) -> usize {
        match self {
            Level::Complex => 1,
            Level::Quaternionic => 2,
            Level::Octonionic => 3,
        }
    }

    pub fn for_qubits(n: usize) -> Result<Self> {
        match n {
            1 => Ok(Level::Complex),
            2 => Ok(Level::Quaternionic),
            3 => Ok(Level::Octonionic),
            _ => Err(Error::UnsupportedQubitCount(n)),
        }
    }

    /// Level whose algebra has dimension `dim`.
    pub fn for_algebra_dim(dim: usize) -> Self {
        match dim {
            2 => Level::Complex,
            4 => Level::Quaternionic,
            8 => Level::Octonionic,
            _ => unreachable!("no normed division algebra of dimension {dim}"),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Level::Complex => "complex",
            Level::Quaternionic => "quaternionic",
            Level::Octonionic => "octonionic",
        }
    }
}

/// A point `(x₁, …, x_d)` on S², S⁴ or S⁸.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HopfVector {
    pub level: Level,
    pub coords: Vec<f64>,
}

impl HopfVector {
    pub fn new(level: Level, coords: Vec<f64>) -> Result<Self> {
        if coords.len() != level.coords() {
            return Err(Error::DimensionMismatch(format!(
                "{} Hopf vector needs {} coordinates, got {}",
                level.name(),
                level.coords(),
                coords.len()
            )));
        }
        Ok(Self { level, coords })
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coords.iter().map(|x| x * x).sum()
    }

    /// Largest absolute coordinate difference.
    pub fn distance(&self, other: &HopfVector) -> f64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// The pole `(0, …, 0, 1)`.
    pub fn north_pole(level: Level) -> Self {
        let mut coords = vec![0.0; level.coords()];
        coords[level.coords() - 1] = 1.0;
        Self { level, coords }
    }
}

/// Expectation-value Hopf map on an arbitrary pair, together with the largest
/// imaginary residue met while evaluating the coordinates.
pub fn expectation_with_residue<A: DivisionAlgebra>(x0: A, x1: A) -> (HopfVector, f64) {
    let level = Level::for_algebra_dim(A::DIM);
    let (c0, c1) = (x0.conj(), x1.conj());
    let mut coords = Vec::with_capacity(level.coords());
    let mut residue: f64 = 0.0;

    let first = c0 * x1 + c1 * x0;
    coords.push(first.re());
    residue = residue.max(first.imag_residue());

    for k in 1..A::DIM {
        let e = A::unit(k);
        let right = c0 * (-(e * x1)) + c1 * (e * x0);
        let left = (c1 * e) * x0 - (c0 * e) * x1;
        let v = (right + left).scale(0.5);
        coords.push(v.re());
        residue = residue.max(v.imag_residue());
    }

    let last = c0 * x0 - c1 * x1;
    coords.push(last.re());
    residue = residue.max(last.imag_residue());

    (HopfVector { level, coords }, residue)
}

/// Expectation-value Hopf map on an arbitrary pair.
pub fn hopf_pair<A: DivisionAlgebra>(x0: A, x1: A) -> HopfVector {
    expectation_with_residue(x0, x1).0
}

/// Ratio formulation: inverse stereographic projection of `z = x₀x₁⁻¹`,
/// `(2 z̄, |z|² − 1) / (|z|² + 1)`. A vanishing second component is the point at
/// infinity and maps to the pole with last coordinate +1.
pub fn hopf_ratio<A: DivisionAlgebra>(x0: A, x1: A) -> HopfVector {
    let level = Level::for_algebra_dim(A::DIM);
    let Ok(inv) = x1.inverse() else {
        return HopfVector::north_pole(level);
    };
    let z = x0 * inv;
    let n = z.norm_sqr();
    let zc = z.conj();
    let mut coords: Vec<f64> = (0..A::DIM).map(|k| 2.0 * zc.coeff(k) / (1.0 + n)).collect();
    coords.push((n - 1.0) / (n + 1.0));
    HopfVector { level, coords }
}

/// Single-qubit Bloch vector `xᵢ = ⟨σᵢ⟩`.
pub fn bloch_c(s: &PureState) -> Result<HopfVector> {
    s.expect_qubits(1)?;
    let a = s.amplitudes();
    Ok(hopf_pair(a[0], a[1]))
}

/// Quaternionic Hopf map of a two-qubit state, onto S⁴.
pub fn hopf_q(s: &PureState) -> Result<HopfVector> {
    let (q0, q1) = s.to_quaternion_pair()?;
    Ok(hopf_pair(q0, q1))
}

/// Octonionic Hopf map of a three-qubit state, onto S⁸.
pub fn hopf_o(s: &PureState) -> Result<HopfVector> {
    Ok(hopf_o_with_residue(s)?.0)
}

pub fn hopf_o_with_residue(s: &PureState) -> Result<(HopfVector, f64)> {
    let (o0, o1) = s.to_octonion_pair()?;
    Ok(expectation_with_residue(o0, o1))
}

/// The Hopf map matching the state's qubit count (1, 2 or 3).
pub fn hopf(s: &PureState) -> Result<HopfVector> {
    match s.qubits() {
        1 => bloch_c(s),
        2 => hopf_q(s),
        3 => hopf_o(s),
        n => Err(Error::UnsupportedQubitCount(n)),
    }
}

/// Ratio formulation for a state of 1, 2 or 3 qubits.
pub fn hopf_ratio_state(s: &PureState) -> Result<HopfVector> {
    match s.qubits() {
        1 => {
            let a = s.amplitudes();
            Ok(hopf_ratio::<Complex64>(a[0], a[1]))
        }
        2 => {
            let (q0, q1) = s.to_quaternion_pair()?;
            Ok(hopf_ratio(q0, q1))
        }
        3 => {
            let (o0, o1) = s.to_octonion_pair()?;
            Ok(hopf_ratio(o0, o1))
        }
        n => Err(Error::UnsupportedQubitCount(n)),
    }
}

/// Coordinates carried by the extra imaginary units: `(x₃, x₄)` over ℍ and
/// `(x₃, …, x₈)` over 𝕆. They vanish exactly when the ratio lies in ℂ.
pub fn entanglement_coords(v: &HopfVector) -> Result<Vec<f64>> {
    match v.level {
        Level::Complex => Err(Error::UnsupportedLevel("complex")),
        Level::Quaternionic => Ok(v.coords[2..4].to_vec()),
        Level::Octonionic => Ok(v.coords[2..8].to_vec()),
    }
}

/// Right action of a unit quaternion on the S³ fiber: `(q₀u, q₁u)`.
pub fn fiber_act(
    pair: (Quaternion, Quaternion),
    u: Quaternion,
    tol: f64,
) -> Result<(Quaternion, Quaternion)> {
    let n = u.norm();
    if (n - 1.0).abs() > tol {
        return Err(Error::NonUnit { what: "fiber element", norm: n });
    }
    Ok((pair.0 * u, pair.1 * u))
}

/// Normalized point `(z y, y)` on the fiber over the ratio `z`.
///
/// Alternativity gives `(zy)y⁻¹ = z`, so every `y ≠ 0` lands on the same base
/// point. Over 𝕆 this replaces the right action of [`fiber_act`], which does not
/// preserve the ratio there.
pub fn fiber_lift<A: DivisionAlgebra>(z: A, y: A) -> Result<(A, A)> {
    let x0 = z * y;
    let n = (x0.norm_sqr() + y.norm_sqr()).sqrt();
    if n == 0.0 {
        return Err(Error::ZeroElement);
    }
    Ok((x0.scale(1.0 / n), y.scale(1.0 / n)))
}

/// Two-qubit state carried by the S⁷ fiber of a three-qubit state.
///
/// Reads the larger of the halves `(c₀..c₃)` and `(c₄..c₇)` and renormalizes.
/// On states where qubit 0 factors out this is the state of qubits 1 and 2, up
/// to phase.
pub fn fiber_state(s: &PureState) -> Result<PureState> {
    s.expect_qubits(3)?;
    let a = s.amplitudes();
    let upper: f64 = a[..4].iter().map(|c| c.norm_sqr()).sum();
    let lower: f64 = a[4..].iter().map(|c| c.norm_sqr()).sum();
    let half = if upper >= lower { &a[..4] } else { &a[4..] };
    PureState::normalized(half.to_vec())
}

/// Single-qubit state carried by the S³ fiber of a two-qubit state.
pub fn fiber_state_q(s: &PureState) -> Result<PureState> {
    s.expect_qubits(2)?;
    let a = s.amplitudes();
    let half = if a[0].norm_sqr() + a[1].norm_sqr() >= a[2].norm_sqr() + a[3].norm_sqr() {
        &a[..2]
    } else {
        &a[2..]
    };
    PureState::normalized(half.to_vec())
}

/// Imaginary residue of the single-parenthesization evaluation
/// `conj(x₀)·(−e x₁) + conj(x₁)·(e x₀)`, maximized over the imaginary units.
/// Nonzero over 𝕆 on generic states; kept for diagnostics.
pub fn one_sided_residue(o0: Octonion, o1: Octonion) -> f64 {
    (1..8)
        .map(|k| {
            let e = Octonion::unit(k);
            (o0.conj() * (-(e * o1)) + o1.conj() * (e * o0)).imag_residue()
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const H: f64 = std::f64::consts::FRAC_1_SQRT_2;

    fn assert_coords(v: &HopfVector, expected: &[f64], tol: f64) {
        assert_eq!(v.coords.len(), expected.len());
        for (i, (a, b)) in v.coords.iter().zip(expected).enumerate() {
            assert!((a - b).abs() < tol, "x{} = {a}, expected {b}", i + 1);
        }
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn bloch_examples() {
        let zero = PureState::basis(1, 0).unwrap();
        assert_coords(&bloch_c(&zero).unwrap(), &[0.0, 0.0, 1.0], 1e-15);
        let plus = PureState::from_real(&[1.0, 1.0]).unwrap();
        assert_coords(&bloch_c(&plus).unwrap(), &[1.0, 0.0, 0.0], 1e-15);
        let plus_i = PureState::new(vec![c(H, 0.0), c(0.0, H)]).unwrap();
        assert_coords(&bloch_c(&plus_i).unwrap(), &[0.0, 1.0, 0.0], 1e-15);
        assert!(bloch_c(&PureState::bell()).is_err());
    }

    #[test]
    fn bloch_matches_closed_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..100 {
            let s = PureState::random(1, &mut rng).unwrap();
            let a = s.amplitudes();
            let x1 = (a[1] * a[0].conj() + a[0] * a[1].conj()).re;
            let x2 = (c(0.0, 1.0) * (a[0] * a[1].conj() - a[1] * a[0].conj())).re;
            let x3 = a[0].norm_sqr() - a[1].norm_sqr();
            assert_coords(&bloch_c(&s).unwrap(), &[x1, x2, x3], 1e-15);
        }
    }

    #[test]
    fn hopf_q_examples() {
        let s = PureState::basis(2, 0).unwrap();
        assert_coords(&hopf_q(&s).unwrap(), &[0.0, 0.0, 0.0, 0.0, 1.0], 1e-15);
        assert_coords(&hopf_q(&PureState::bell()).unwrap(), &[0.0, 0.0, 1.0, 0.0, 0.0], 1e-15);
        let s = PureState::from_real(&[1.0, 0.0, 1.0, 0.0]).unwrap();
        assert_coords(&hopf_q(&s).unwrap(), &[1.0, 0.0, 0.0, 0.0, 0.0], 1e-15);
    }

    #[test]
    fn quaternionic_entanglement_coords_are_twice_the_defect() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..200 {
            let s = PureState::random(2, &mut rng).unwrap();
            let a = s.amplitudes();
            let d = 2.0 * (a[0] * a[3] - a[1] * a[2]);
            let x = entanglement_coords(&hopf_q(&s).unwrap()).unwrap();
            assert!((x[0] - d.re).abs() < 1e-14 && (x[1] - d.im).abs() < 1e-14);
        }
    }

    #[test]
    fn hopf_o_examples() {
        let s = PureState::basis(3, 0).unwrap();
        let mut pole = vec![0.0; 9];
        pole[8] = 1.0;
        assert_coords(&hopf_o(&s).unwrap(), &pole, 1e-15);

        let mut x7 = vec![0.0; 9];
        x7[6] = 1.0;
        assert_coords(&hopf_o(&PureState::ghz(3).unwrap()).unwrap(), &x7, 1e-15);

        // qubit 0 factors out: the map stays at the pole, entanglement coordinates vanish
        let zero_bell = PureState::basis(1, 0).unwrap().tensor(&PureState::bell()).unwrap();
        let v = hopf_o(&zero_bell).unwrap();
        assert_coords(&v, &pole, 1e-15);

        // qubits 0 and 1 entangled: some entanglement coordinate is nonzero
        let bell_zero = PureState::bell().tensor(&PureState::basis(1, 0).unwrap()).unwrap();
        let e = entanglement_coords(&hopf_o(&bell_zero).unwrap()).unwrap();
        assert!(e.iter().any(|x| x.abs() > 0.5), "{e:?}");
    }

    #[test]
    fn octonionic_coordinates_are_real_only_when_symmetrized() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let mut worst_one_sided: f64 = 0.0;
        for _ in 0..200 {
            let s = PureState::random(3, &mut rng).unwrap();
            let (_, residue) = hopf_o_with_residue(&s).unwrap();
            assert!(residue < 1e-12);
            let (o0, o1) = s.to_octonion_pair().unwrap();
            worst_one_sided = worst_one_sided.max(one_sided_residue(o0, o1));
        }
        assert!(worst_one_sided > 1e-2);
    }

    #[test]
    fn ratio_matches_expectation() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 1..=3 {
            for _ in 0..200 {
                let s = PureState::random(n, &mut rng).unwrap();
                let a = hopf(&s).unwrap();
                let b = hopf_ratio_state(&s).unwrap();
                assert!(a.distance(&b) < 1e-9, "level {n}: {a:?} vs {b:?}");
            }
        }
    }

    #[test]
    fn ratio_point_at_infinity() {
        let v = hopf_ratio(Quaternion::one(), Quaternion::zero());
        assert_eq!(v, HopfVector::north_pole(Level::Quaternionic));
        let v = hopf_ratio(Octonion::one(), Octonion::zero());
        assert_eq!(v, HopfVector::north_pole(Level::Octonionic));
        let v = hopf_ratio(c(1.0, 0.0), c(0.0, 0.0));
        assert_eq!(v, HopfVector::north_pole(Level::Complex));
    }

    #[test]
    fn entanglement_coords_examples() {
        let e = entanglement_coords(&hopf_q(&PureState::bell()).unwrap()).unwrap();
        assert!((e[0] - 1.0).abs() < 1e-15 && e[1].abs() < 1e-15);

        let prod = PureState::from_real(&[0.3, 0.4])
            .unwrap()
            .tensor(&PureState::new(vec![c(0.6, 0.0), c(0.0, 0.8)]).unwrap())
            .unwrap();
        let e = entanglement_coords(&hopf_q(&prod).unwrap()).unwrap();
        assert!(e.iter().all(|x| x.abs() < 1e-15));

        let e = entanglement_coords(&hopf_o(&PureState::ghz(3).unwrap()).unwrap()).unwrap();
        let expected = [0.0, 0.0, 0.0, 0.0, 1.0, 0.0];
        assert!(e.iter().zip(expected).all(|(a, b)| (a - b).abs() < 1e-15));

        let zero = PureState::basis(1, 0).unwrap();
        assert!(matches!(
            entanglement_coords(&bloch_c(&zero).unwrap()),
            Err(Error::UnsupportedLevel(_))
        ));
    }

    #[test]
    fn fiber_action_examples() {
        let pair = PureState::bell().to_quaternion_pair().unwrap();
        assert_eq!(fiber_act(pair, Quaternion::one(), 1e-12).unwrap(), pair);
        let moved = fiber_act(pair, Quaternion::K, 1e-12).unwrap();
        assert!(hopf_pair(moved.0, moved.1).distance(&hopf_pair(pair.0, pair.1)) < 1e-15);
        assert!(matches!(
            fiber_act(pair, Quaternion::new(2.0, 0.0, 0.0, 0.0), 1e-12),
            Err(Error::NonUnit { .. })
        ));
    }

    #[test]
    fn octonionic_fiber_lift_is_constant() {
        let z = Octonion::new([0.3, -0.2, 0.5, 0.1, -0.7, 0.4, 0.2, -0.6]);
        let base = {
            let (a, b) = fiber_lift(z, Octonion::one()).unwrap();
            hopf_pair(a, b)
        };
        let ys = [
            Octonion::new([0.1, 0.9, -0.3, 0.2, 0.5, -0.4, 0.8, 0.3]),
            Octonion::unit(5),
            Octonion::new([-1.0, 0.0, 2.0, 0.0, 0.5, 0.0, -0.25, 3.0]),
        ];
        for y in ys {
            let (a, b) = fiber_lift(z, y).unwrap();
            assert!(hopf_pair(a, b).distance(&base) < 1e-14);
        }
        assert!(fiber_lift(z, Octonion::zero()).is_err());
    }

    #[test]
    fn iterated_fibration_on_product_states() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for _ in 0..50 {
            let a = PureState::random(1, &mut rng).unwrap();
            let b = PureState::random(1, &mut rng).unwrap();
            let c3 = PureState::random(1, &mut rng).unwrap();
            let s = a.tensor(&b).unwrap().tensor(&c3).unwrap();
            let top = hopf_o(&s).unwrap();
            let ba = bloch_c(&a).unwrap();
            let top3 = [top.coords[0], top.coords[1], top.coords[8]];
            assert!(top3.iter().zip(&ba.coords).all(|(x, y)| (x - y).abs() < 1e-12));

            let fiber = fiber_state(&s).unwrap();
            let mid = hopf_q(&fiber).unwrap();
            let bb = bloch_c(&b).unwrap();
            let mid3 = [mid.coords[0], mid.coords[1], mid.coords[4]];
            assert!(mid3.iter().zip(&bb.coords).all(|(x, y)| (x - y).abs() < 1e-12));
            assert!(entanglement_coords(&mid).unwrap().iter().all(|x| x.abs() < 1e-12));

            let inner = bloch_c(&fiber_state_q(&fiber).unwrap()).unwrap();
            assert!(inner.distance(&bloch_c(&c3).unwrap()) < 1e-12);
        }
    }
}
