//! Randomized invariant suites.
//!
//! Every trial draws from its own generator seeded from the master seed and the
//! trial index, and trial results are combined with order-independent
//! reductions, so parallel runs reproduce serial ones exactly.

use std::fmt;

use nalgebra::{DMatrix, Vector2};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{
    alternativity_defect, associator, norm_multiplicativity_defect, random_gaussian, random_unit,
    DivisionAlgebra, Octonion, Quaternion,
};
use crate::entropy::{self, EntropyGraph, GraphState};
use crate::fields::{self, DiracState};
use crate::hopf::{self, HopfVector};
use crate::spacetime::{self, Mat2, MinkowskiVector};
use crate::spin::{self, GenerationElement, SpinGenerator, SplitElement};
use crate::states::{random_mixed_with, PureState};
use crate::tolerance::Tolerances;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Algebra,
    Hopf,
    Spacetime,
    Spin,
    Fields,
    Entropy,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Algebra,
        Suite::Hopf,
        Suite::Spacetime,
        Suite::Spin,
        Suite::Fields,
        Suite::Entropy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Hopf => "hopf",
            Suite::Spacetime => "spacetime",
            Suite::Spin => "spin",
            Suite::Fields => "fields",
            Suite::Entropy => "entropy",
        }
    }

    /// A suite name, or `all` for every suite.
    pub fn parse(name: &str) -> Option<Vec<Suite>> {
        if name == "all" {
            return Some(Self::ALL.to_vec());
        }
        Self::ALL.iter().copied().find(|s| s.name() == name).map(|s| vec![s])
    }
}

/// How per-trial values are reduced and compared with the bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Aggregate {
    /// Worst case is the maximum; passes when `≤ bound`.
    Max,
    /// Worst case is the minimum; passes when `> bound`.
    Min,
    /// Fraction of trials; passes when `> bound`.
    Mean,
}

#[derive(Debug, Clone, Copy)]
enum Bound {
    Algebraic,
    UnitNorm,
    CrossFormulation,
    Fixed(f64),
}

impl Bound {
    fn value(self, tol: &Tolerances) -> f64 {
        match self {
            Bound::Algebraic => tol.algebraic,
            Bound::UnitNorm => tol.unit_norm,
            Bound::CrossFormulation => tol.cross_formulation,
            Bound::Fixed(v) => v,
        }
    }
}

struct Invariant {
    name: &'static str,
    aggregate: Aggregate,
    bound: Bound,
}

const fn max(name: &'static str, bound: Bound) -> Invariant {
    Invariant { name, aggregate: Aggregate::Max, bound }
}

const fn min_above(name: &'static str, threshold: f64) -> Invariant {
    Invariant { name, aggregate: Aggregate::Min, bound: Bound::Fixed(threshold) }
}

const fn fraction_above(name: &'static str, threshold: f64) -> Invariant {
    Invariant { name, aggregate: Aggregate::Mean, bound: Bound::Fixed(threshold) }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantResult {
    pub name: String,
    pub aggregate: Aggregate,
    pub value: f64,
    pub bound: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub trials: usize,
    pub results: Vec<InvariantResult>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub seed: u64,
    pub trials: usize,
    pub tolerances: Tolerances,
    pub suites: Vec<SuiteReport>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.suites {
            writeln!(f, "[{}] {} trials", s.suite.name(), s.trials)?;
            for note in &s.notes {
                writeln!(f, "  note  {note}")?;
            }
            for r in &s.results {
                let (label, op) = match r.aggregate {
                    Aggregate::Max => ("worst", "<="),
                    Aggregate::Min => ("min", ">"),
                    Aggregate::Mean => ("fraction", ">"),
                };
                writeln!(
                    f,
                    "  {}  {:<52} {label} {:.3e}  (bound {op} {:e})",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.name,
                    r.value,
                    r.bound
                )?;
            }
        }
        let failed: usize = self
            .suites
            .iter()
            .flat_map(|s| &s.results)
            .filter(|r| !r.passed)
            .count();
        if failed == 0 {
            write!(f, "all invariants hold")
        } else {
            write!(f, "{failed} invariant(s) failed")
        }
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Seed of trial `trial` of `suite` under master seed `seed`.
pub fn trial_seed(seed: u64, suite: Suite, trial: usize) -> u64 {
    let salt = splitmix64(suite as u64 + 1);
    splitmix64(splitmix64(seed ^ salt).wrapping_add(trial as u64))
}

fn combine(agg: Aggregate, a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        return f64::NAN;
    }
    match agg {
        Aggregate::Max => a.max(b),
        Aggregate::Min => a.min(b),
        Aggregate::Mean => a + b,
    }
}

fn identity(agg: Aggregate) -> f64 {
    match agg {
        Aggregate::Max => f64::NEG_INFINITY,
        Aggregate::Min => f64::INFINITY,
        Aggregate::Mean => 0.0,
    }
}

type TrialFn = fn(&mut ChaCha8Rng) -> Vec<f64>;

fn definition(suite: Suite) -> (&'static [Invariant], TrialFn) {
    match suite {
        Suite::Algebra => (ALGEBRA, algebra_trial),
        Suite::Hopf => (HOPF, hopf_trial),
        Suite::Spacetime => (SPACETIME, spacetime_trial),
        Suite::Spin => (SPIN, spin_trial),
        Suite::Fields => (FIELDS, fields_trial),
        Suite::Entropy => (ENTROPY, entropy_trial),
    }
}

/// Runs one suite for `trials` trials.
pub fn run_suite(suite: Suite, trials: usize, seed: u64, tol: &Tolerances) -> SuiteReport {
    let (invariants, trial) = definition(suite);
    let init: Vec<f64> = invariants.iter().map(|i| identity(i.aggregate)).collect();
    let reduced = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(seed, suite, t));
            let v = trial(&mut rng);
            debug_assert_eq!(v.len(), invariants.len());
            v
        })
        .reduce(
            || init.clone(),
            |a, b| {
                a.iter()
                    .zip(&b)
                    .zip(invariants)
                    .map(|((x, y), inv)| combine(inv.aggregate, *x, *y))
                    .collect()
            },
        );
    let results = invariants
        .iter()
        .zip(reduced)
        .map(|(inv, v)| {
            let value = match inv.aggregate {
                Aggregate::Mean => v / trials.max(1) as f64,
                _ => v,
            };
            let bound = inv.bound.value(tol);
            let passed = match inv.aggregate {
                Aggregate::Max => value <= bound,
                Aggregate::Min | Aggregate::Mean => value > bound,
            };
            InvariantResult { name: inv.name.to_string(), aggregate: inv.aggregate, value, bound, passed }
        })
        .collect();
    let notes = match suite {
        Suite::Algebra => vec![witness_note()],
        _ => Vec::new(),
    };
    SuiteReport { suite, trials, results, notes }
}

pub fn run(suites: &[Suite], trials: usize, seed: u64, tol: &Tolerances) -> CheckReport {
    CheckReport {
        seed,
        trials,
        tolerances: *tol,
        suites: suites.iter().map(|&s| run_suite(s, trials, seed, tol)).collect(),
    }
}

fn signed_units(o: Octonion) -> String {
    let terms: Vec<String> = (0..8)
        .filter(|&k| o.0[k] != 0.0)
        .map(|k| {
            let unit = if k == 0 { "1".to_string() } else { format!("e{k}") };
            match o.0[k] {
                1.0 => format!("+{unit}"),
                -1.0 => format!("-{unit}"),
                c => format!("{c:+}{unit}"),
            }
        })
        .collect();
    if terms.is_empty() { "0".into() } else { terms.join(" ") }
}

fn witness_note() -> String {
    let e = Octonion::unit;
    let left = (e(1) * e(2)) * e(4);
    let right = e(1) * (e(2) * e(4));
    format!(
        "non-associativity witness: (e1 e2) e4 = {}, e1 (e2 e4) = {}, associator = {}",
        signed_units(left),
        signed_units(right),
        signed_units(associator(e(1), e(2), e(4)))
    )
}

fn gaussian(rng: &mut ChaCha8Rng) -> f64 {
    rng.sample(StandardNormal)
}

fn max_of(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(0.0, |a, b| combine(Aggregate::Max, a, b))
}

fn coords_distance(a: &[f64], b: &[f64]) -> f64 {
    max_of(a.iter().zip(b).map(|(x, y)| (x - y).abs()))
}

const ALGEBRA: &[Invariant] = &[
    max("octonion norm multiplicativity", Bound::Algebraic),
    max("octonion alternativity", Bound::Algebraic),
    max("octonion inverse", Bound::Algebraic),
    max("quaternion associativity", Bound::Algebraic),
    max("quaternion norm multiplicativity", Bound::Algebraic),
    max("cayley-dickson round trip", Bound::Algebraic),
    max("witness (e1e2)e4 + e1(e2e4) = 0", Bound::Algebraic),
    min_above("witness associator norm", 1.0),
];

fn algebra_trial(rng: &mut ChaCha8Rng) -> Vec<f64> {
    let a: Octonion = random_gaussian(rng);
    let b: Octonion = random_gaussian(rng);
    let p: Quaternion = random_gaussian(rng);
    let q: Quaternion = random_gaussian(rng);
    let r: Quaternion = random_gaussian(rng);
    let inv = a.inverse().map(|i| (a * i).distance(&Octonion::one())).unwrap_or(f64::NAN);
    let (q0, q1) = a.quaternion_pair();
    let e = Octonion::unit;
    vec![
        norm_multiplicativity_defect(a, b),
        alternativity_defect(a, b),
        inv,
        associator(p, q, r).norm(),
        norm_multiplicativity_defect(p, q),
        Octonion::cayley_dickson(q0, q1).distance(&a),
        ((e(1) * e(2)) * e(4) + e(1) * (e(2) * e(4))).norm(),
        associator(e(1), e(2), e(4)).norm(),
    ]
}

const HOPF: &[Invariant] = &[
    max("unit norm (complex)", Bound::UnitNorm),
    max("unit norm (quaternionic)", Bound::UnitNorm),
    max("unit norm (octonionic)", Bound::UnitNorm),
    max("ratio vs expectation (complex)", Bound::CrossFormulation),
    max("ratio vs expectation (quaternionic)", Bound::CrossFormulation),
    max("ratio vs expectation (octonionic)", Bound::CrossFormulation),
    max("octonionic imaginary residue", Bound::Algebraic),
    max("quaternionic fiber invariance", Bound::UnitNorm),
    max("octonionic fiber (zy, y) invariance", Bound::UnitNorm),
    max("product states: |x3|+|x4|", Bound::UnitNorm),
    max("product states: separability defect", Bound::UnitNorm),
    max("|x3 + i x4| = 2 x defect", Bound::UnitNorm),
    fraction_above("Haar states: defect and (x3,x4) both nonzero", 0.999),
    max("Bell -> (0,0,1,0,0), GHZ -> x7 = 1", Bound::Algebraic),
    max("iterated fibration on product states", Bound::UnitNorm),
];

fn hopf_trial(rng: &mut ChaCha8Rng) -> Vec<f64> {
    let s1 = PureState::random(1, rng).expect("1 qubit");
    let s2 = PureState::random(2, rng).expect("2 qubits");
    let s3 = PureState::random(3, rng).expect("3 qubits");
    let h1 = hopf::bloch_c(&s1).expect("1 qubit");
    let h2 = hopf::hopf_q(&s2).expect("2 qubits");
    let (h3, residue) = hopf::hopf_o_with_residue(&s3).expect("3 qubits");

    let ratio = |s: &PureState, h: &HopfVector| {
        let half = s.dim() / 2;
        let second: f64 = s.amplitudes()[half..].iter().map(|c| c.norm_sqr()).sum();
        if second.sqrt() > 1e-3 {
            hopf::hopf_ratio_state(s).expect("supported level").distance(h)
        } else {
            0.0
        }
    };

    let pair = s2.to_quaternion_pair().expect("2 qubits");
    let u: Quaternion = random_unit(rng);
    let moved = hopf::fiber_act(pair, u, 1e-12).expect("unit");
    let fiber_q = hopf::hopf_pair(moved.0, moved.1).distance(&h2);

    let z: Octonion = random_gaussian(rng);
    let y1: Octonion = random_gaussian(rng);
    let y2: Octonion = random_gaussian(rng);
    let (a0, a1) = hopf::fiber_lift(z, y1).expect("nonzero");
    let (b0, b1) = hopf::fiber_lift(z, y2).expect("nonzero");
    let fiber_o = hopf::hopf_pair(a0, a1).distance(&hopf::hopf_pair(b0, b1));

    let prod = PureState::random_product(2, rng).expect("2 qubits");
    let hp = hopf::hopf_q(&prod).expect("2 qubits");
    let ep = hopf::entanglement_coords(&hp).expect("quaternionic");
    let defect_p = prod.separability_defect().expect("2 qubits");

    let e2 = hopf::entanglement_coords(&h2).expect("quaternionic");
    let defect2 = s2.separability_defect().expect("2 qubits");
    let both_nonzero = defect2 > 1e-8 && e2[0].abs() + e2[1].abs() > 1e-8;

    let bell = hopf::hopf_q(&PureState::bell()).expect("2 qubits");
    let ghz = hopf::hopf_o(&PureState::ghz(3).expect("3 qubits")).expect("3 qubits");
    let mut x7 = vec![0.0; 9];
    x7[6] = 1.0;
    let exact = coords_distance(&bell.coords, &[0.0, 0.0, 1.0, 0.0, 0.0])
        .max(coords_distance(&ghz.coords, &x7));

    let q: Vec<PureState> = (0..3).map(|_| PureState::random(1, rng).expect("1 qubit")).collect();
    let chain = q[0].tensor(&q[1]).and_then(|s| s.tensor(&q[2])).expect("3 qubits");
    let top = hopf::hopf_o(&chain).expect("3 qubits");
    let fiber = hopf::fiber_state(&chain).expect("3 qubits");
    let mid = hopf::hopf_q(&fiber).expect("2 qubits");
    let inner = hopf::bloch_c(&hopf::fiber_state_q(&fiber).expect("2 qubits")).expect("1 qubit");
    let b: Vec<HopfVector> = q.iter().map(|s| hopf::bloch_c(s).expect("1 qubit")).collect();
    let iterated = max_of([
        coords_distance(&[top.coords[0], top.coords[1], top.coords[8]], &b[0].coords),
        max_of(top.coords[2..8].iter().map(|x| x.abs())),
        coords_distance(&[mid.coords[0], mid.coords[1], mid.coords[4]], &b[1].coords),
        max_of(mid.coords[2..4].iter().map(|x| x.abs())),
        inner.distance(&b[2]),
    ]);

    vec![
        (h1.norm_sqr() - 1.0).abs(),
        (h2.norm_sqr() - 1.0).abs(),
        (h3.norm_sqr() - 1.0).abs(),
        ratio(&s1, &h1),
        ratio(&s2, &h2),
        ratio(&s3, &h3),
        residue,
        fiber_q,
        fiber_o,
        ep[0].abs() + ep[1].abs(),
        defect_p,
        (e2[0].hypot(e2[1]) - 2.0 * defect2).abs(),
        if both_nonzero { 1.0 } else { 0.0 },
        exact,
        iterated,
    ]
}

const SPACETIME: &[Invariant] = &[
    max("pure-state interval (complex)", Bound::UnitNorm),
    max("pure-state interval (quaternionic)", Bound::UnitNorm),
    max("pure-state interval (octonionic)", Bound::UnitNorm),
    min_above("mixed single-qubit interval", 0.0),
    max("det = interval/4 and round trip (all levels)", Bound::Algebraic),
    max("SL(2,C) conjugation preserves det", Bound::UnitNorm),
    max("unit-Dieudonne SL(2,H) conjugation preserves det", Bound::UnitNorm),
    max("Mobius composition homomorphism", Bound::Algebraic),
    max("Dieudonne multiplicativity (relative)", Bound::UnitNorm),
    max("product-state light ray has x3 = x4 = 0", Bound::Algebraic),
];

fn random_minkowski(n: usize, rng: &mut ChaCha8Rng) -> MinkowskiVector {
    MinkowskiVector::new((0..n).map(|_| rng.random_range(-1.0..1.0)).collect()).expect("valid length")
}

fn spacetime_trial(rng: &mut ChaCha8Rng) -> Vec<f64> {
    let interval = |n: usize, rng: &mut ChaCha8Rng| {
        let s = PureState::random(n, rng).expect("supported");
        spacetime::state_to_lightray(&s).expect("supported").interval().abs()
    };
    let i1 = interval(1, rng);
    let i2 = interval(2, rng);
    let i3 = interval(3, rng);

    // strictly mixed: a pure state blended with the identity
    let pure = PureState::random(1, rng).expect("1 qubit").density_matrix();
    let w: f64 = rng.random_range(0.01..1.0);
    let mixed_m = pure.matrix() * Complex64::new(1.0 - w, 0.0)
        + DMatrix::identity(2, 2) * Complex64::new(0.5 * w, 0.0);
    let mixed = crate::states::DensityMatrix::new(mixed_m).expect("valid");
    let mixed_interval = spacetime::density_to_vector(&mixed).expect("1 qubit").interval();

    let v4 = random_minkowski(4, rng);
    let v6 = random_minkowski(6, rng);
    let v10 = random_minkowski(10, rng);
    let m4 = spacetime::vec_to_matrix::<Complex64>(&v4).expect("dims");
    let m6 = spacetime::vec_to_matrix::<Quaternion>(&v6).expect("dims");
    let m10 = spacetime::vec_to_matrix::<Octonion>(&v10).expect("dims");
    let shape = max_of([
        (m4.det() - 0.25 * v4.interval()).abs(),
        (m6.det() - 0.25 * v6.interval()).abs(),
        (m10.det() - 0.25 * v10.interval()).abs(),
        m4.to_vector().distance(&v4),
        m6.to_vector().distance(&v6),
        m10.to_vector().distance(&v10),
    ]);

    let mc: Mat2<Complex64> = spacetime::random_unit_det(rng);
    let lc = spacetime::lorentz_act(&mc, &m4, 1e-9).map(|y| (y.det() - m4.det()).abs()).unwrap_or(f64::NAN);
    let mq: Mat2<Quaternion> = spacetime::random_unit_det(rng);
    let lq = spacetime::lorentz_act(&mq, &m6, 1e-9).map(|y| (y.det() - m6.det()).abs()).unwrap_or(f64::NAN);

    let a: nalgebra::Matrix2<Complex64> = spacetime::random_unit_det::<Complex64, _>(rng).into();
    let b: nalgebra::Matrix2<Complex64> = spacetime::random_unit_det::<Complex64, _>(rng).into();
    let z = spacetime::ExtComplex::Finite(random_gaussian(rng));
    let mobius = spacetime::mobius(&(a * b), z).chordal_distance(&spacetime::mobius(&a, spacetime::mobius(&b, z)));

    let rq = |rng: &mut ChaCha8Rng| -> Mat2<Quaternion> {
        Mat2(std::array::from_fn(|_| std::array::from_fn(|_| random_gaussian(rng))))
    };
    let (p, q) = (rq(rng), rq(rng));
    let lhs = spacetime::dieudonne_det(&(p * q));
    let rhs = spacetime::dieudonne_det(&p) * spacetime::dieudonne_det(&q);
    let dieudonne = (lhs - rhs).abs() / (1.0 + rhs);

    let prod = PureState::random_product(2, rng).expect("2 qubits");
    let ray = spacetime::state_to_lightray(&prod).expect("2 qubits");
    let split = ray.components[3].abs().max(ray.components[4].abs());

    vec![i1, i2, i3, mixed_interval, shape, lc, lq, mobius, dieudonne, split]
}

const SPIN: &[Invariant] = &[
    max("Clifford square (complex)", Bound::Algebraic),
    max("Clifford square (quaternionic)", Bound::Algebraic),
    max("Clifford square (octonionic)", Bound::Algebraic),
    max("reflection isometry", Bound::UnitNorm),
    max("reflection involution", Bound::UnitNorm),
    max("even reflection products are rotations", Bound::UnitNorm),
    max("split action = closed form", Bound::Algebraic),
    max("split action preserves norm", Bound::Algebraic),
    max("split group closure", Bound::Algebraic),
    max("split action equivariance on S4", Bound::UnitNorm),
    max("U(1) x SU(3) embedding is special unitary", Bound::Algebraic),
    max("Z6 kernel acts trivially", Bound::Algebraic),
    min_above("non-kernel element moves (L, Q)", 1e-6),
    max("generation action homomorphism", Bound::Algebraic),
];

fn reflection_checks<A: DivisionAlgebra>(rng: &mut ChaCha8Rng) -> (f64, f64, f64) {
    let g = |rng: &mut ChaCha8Rng| SpinGenerator::<A>::new(gaussian(rng), random_gaussian(rng));
    let (x, m1, m2) = (g(rng), g(rng), g(rng));
    let y = spin::reflect_normalized(&x, &m1).expect("nonzero mirror");
    let iso = (y.clifford_square() - x.clifford_square()).abs() / (1.0 + x.clifford_square());
    let inv = spin::reflect_normalized(&y, &m1).expect("nonzero mirror").distance(&x);
    let r = spin::reflection_matrix(&m2).expect("nonzero") * spin::reflection_matrix(&m1).expect("nonzero");
    let (orth, det) = spin::rotation_defect(&r);
    (iso, inv, orth.max((det - 1.0).abs()))
}

fn spin_trial(rng: &mut ChaCha8Rng) -> Vec<f64> {
    let r = gaussian(rng);
    let sq_c = SpinGenerator::new(r, random_gaussian::<Complex64, _>(rng)).square_deviation();
    let sq_q = SpinGenerator::new(r, random_gaussian::<Quaternion, _>(rng)).square_deviation();
    let sq_o = SpinGenerator::new(r, random_gaussian::<Octonion, _>(rng)).square_deviation();

    let rc = reflection_checks::<Complex64>(rng);
    let rq = reflection_checks::<Quaternion>(rng);
    let ro = reflection_checks::<Octonion>(rng);

    let e1 = SplitElement::random(rng);
    let e2 = SplitElement::random(rng);
    let s = PureState::random(2, rng).expect("2 qubits");
    let pair = s.to_quaternion_pair().expect("2 qubits");
    let (q, p) = e1.apply(pair);
    let (q2, p2) = e1.apply_closed_form(pair);
    let closed = q.distance(&q2).max(p.distance(&p2));
    let norm = (q.norm_sqr() + p.norm_sqr() - pair.0.norm_sqr() - pair.1.norm_sqr()).abs();
    let closure = e1.closure_defect(&e2);
    let moved = hopf::hopf_q(&PureState::from_quaternion_pair(q, p).expect("normalized")).expect("2 qubits");
    let (rot, theta) = e1.induced_rotation();
    let expected = spin::so3_so2_action(&rot, theta, &hopf::hopf_q(&s).expect("2 qubits")).expect("rotation");
    let equivariance = moved.distance(&expected);

    let g = GenerationElement::random(rng);
    let embed = spin::su3u1_embed(g.alpha, &g.g, 1.0)
        .map(|m| {
            let det = (m.determinant() - Complex64::new(1.0, 0.0)).norm();
            let unit = (m.adjoint() * m - nalgebra::Matrix4::identity()).map(|z| z.norm()).max();
            det.max(unit)
        })
        .unwrap_or(f64::NAN);

    let lq = spin::random_generation(rng);
    let z6 = GenerationElement::z6_generator();
    let kernel = max_of((0..6).map(|k| spin::generation_distance(&z6.pow(k).act(&lq.0, &lq.1), &lq)));
    let moves = spin::generation_distance(&g.act(&lq.0, &lq.1), &lq);
    let h = GenerationElement::random(rng);
    let mid = h.act(&lq.0, &lq.1);
    let hom = spin::generation_distance(&g.compose(&h).act(&lq.0, &lq.1), &g.act(&mid.0, &mid.1));

    vec![
        sq_c,
        sq_q,
        sq_o,
        max_of([rc.0, rq.0, ro.0]),
        max_of([rc.1, rq.1, ro.1]),
        max_of([rc.2, rq.2, ro.2]),
        closed,
        norm,
        closure,
        equivariance,
        embed,
        kernel,
        moves,
        hom,
    ]
}

const FIELDS: &[Invariant] = &[
    max("Weyl k null", Bound::UnitNorm),
    max("Weyl residual", Bound::Algebraic),
    max("dim-6 K null", Bound::UnitNorm),
    max("(K0 - K.Sigma) Psi = 0", Bound::UnitNorm),
    max("m^2 = K0^2 - K1^2 - K2^2 - K5^2", Bound::UnitNorm),
    max("Dirac residual", Bound::UnitNorm),
    max("Maxwell Bianchi residual", Bound::UnitNorm),
    max("Maxwell source residual", Bound::UnitNorm),
    max("F self-duality", Bound::Algebraic),
    max("chiral gauge: P_L unchanged, P_R picks up phase", Bound::Algebraic),
    max("orthogonal spinors are massless", Bound::UnitNorm),
];

fn fields_trial(rng: &mut ChaCha8Rng) -> Vec<f64> {
    let one = PureState::random(1, rng).expect("1 qubit");
    let psi = Vector2::new(one.amplitudes()[0], one.amplitudes()[1]);
    let k = fields::weyl_k(&psi);
    let (bianchi, source) = fields::maxwell_residuals(&psi);

    let s = PureState::random(2, rng).expect("2 qubits");
    let kk = fields::sigma_k_state(&s).expect("2 qubits");
    let (m, _) = fields::mass_phase(&kk);
    let c = &kk.components;
    let shell = (m * m - (c[0] * c[0] - c[1] * c[1] - c[2] * c[2] - c[5] * c[5])).abs();
    let d = DiracState::from_state(&s).expect("2 qubits");

    let phi: f64 = rng.random_range(-std::f64::consts::PI..std::f64::consts::PI);
    let g = fields::chiral_gauge(&d, phi);
    let phase = Complex64::from_polar(1.0, phi);
    let gauge = (g.left() - d.left()).norm().max((g.right() - d.right() * phase).norm());

    let a = d.psi_a;
    let perp = Vector2::new(-a[1].conj(), a[0].conj()) * Complex64::new(gaussian(rng), gaussian(rng));
    let scale = (a.norm_squared() + perp.norm_squared()).sqrt();
    let o = DiracState { psi_a: a / Complex64::new(scale, 0.0), psi_b: perp / Complex64::new(scale, 0.0) };
    let massless = fields::mass_phase(&o.k()).0;

    vec![
        k.interval().abs(),
        fields::weyl_residual(&psi),
        kk.interval().abs(),
        fields::sigma_residual(s.amplitudes()).expect("4 amplitudes"),
        shell,
        fields::dirac_residual_state(&d),
        bianchi,
        source,
        fields::em_tensor(&psi).self_duality_defect(),
        gauge,
        massless,
    ]
}

const ENTROPY: &[Invariant] = &[
    max("mutual information negativity", Bound::UnitNorm),
    max("S_RC negativity", Bound::UnitNorm),
    max("S(rho) - log2(dim)", Bound::UnitNorm),
    max("Bell pair I = 2 bits", Bound::UnitNorm),
    max("GHZ pairwise I = 1 bit", Bound::UnitNorm),
    max("Bell-pair products: S_sub = 0", Bound::UnitNorm),
];

fn entropy_trial(rng: &mut ChaCha8Rng) -> Vec<f64> {
    let n = rng.random_range(2..=4usize);
    let s = PureState::random(n, rng).expect("supported");
    let rho = s.density_matrix();
    let i = rng.random_range(0..n);
    let j = (i + rng.random_range(1..n)) % n;
    let mi = entropy::mutual_information(&rho, i, j).expect("valid qubits");
    let region: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.5)).collect();
    let region = if region.is_empty() || region.len() == n { vec![i] } else { region };
    let g = EntropyGraph::new(GraphState::Pure(s), region).expect("valid region");
    let rc = g.rc_entropy().expect("valid graph");

    let m = rng.random_range(1..=3usize);
    let mixed = random_mixed_with(m, rng).expect("supported");
    let bound = entropy::von_neumann(&mixed) - m as f64;

    let bell = PureState::bell().density_matrix();
    let bell_i = (entropy::mutual_information(&bell, 0, 1).expect("2 qubits") - 2.0).abs();
    let ghz = PureState::ghz(3).expect("3 qubits").density_matrix();
    let ghz_i = max_of(
        [(0, 1), (0, 2), (1, 2)]
            .iter()
            .map(|&(a, b)| (entropy::mutual_information(&ghz, a, b).expect("3 qubits") - 1.0).abs()),
    );

    // a Bell pair on random positions plus up to two single qubits
    let singles = rng.random_range(0..=2usize);
    let mut st = PureState::bell();
    for _ in 0..singles {
        st = st.tensor(&PureState::random(1, rng).expect("1 qubit")).expect("≤ 4 qubits");
    }
    let total = st.qubits();
    let mut perm: Vec<usize> = (0..total).collect();
    for k in (1..total).rev() {
        perm.swap(k, rng.random_range(0..=k));
    }
    let cut: Vec<usize> = (0..total).filter(|_| rng.random_bool(0.5)).collect();
    let cut = if cut.is_empty() || cut.len() == total { vec![0] } else { cut };
    let bg = EntropyGraph::with_nodes(GraphState::Pure(st), perm, cut).expect("valid graph");
    let sub = bg.subleading().expect("valid graph").abs();

    vec![(-mi).max(0.0), (-rc).max(0.0), bound.max(0.0), bell_i, ghz_i, sub]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_at_small_scale() {
        let report = run(&Suite::ALL, 200, 1, &Tolerances::default());
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn parallel_runs_are_reproducible() {
        let a = run_suite(Suite::Hopf, 300, 9, &Tolerances::default());
        let b = run_suite(Suite::Hopf, 300, 9, &Tolerances::default());
        assert_eq!(a, b);
        let c = run_suite(Suite::Hopf, 300, 10, &Tolerances::default());
        assert_ne!(a, c);
    }

    #[test]
    fn tiny_tolerance_forces_failures() {
        let report = run(&[Suite::Fields], 50, 1, &Tolerances::uniform(1e-30));
        assert!(!report.passed());
        assert!(format!("{report}").contains("FAIL"));
    }

    #[test]
    fn algebra_report_names_the_witness() {
        let r = run_suite(Suite::Algebra, 10, 1, &Tolerances::default());
        assert!(r.notes[0].contains("(e1 e2) e4 = -e5"), "{}", r.notes[0]);
        assert!(r.notes[0].contains("e1 (e2 e4) = +e5"));
    }

    #[test]
    fn suite_names() {
        assert_eq!(Suite::parse("all").unwrap().len(), 6);
        assert_eq!(Suite::parse("spin").unwrap(), vec![Suite::Spin]);
        assert!(Suite::parse("gravity").is_none());
    }

    #[test]
    fn nan_is_never_a_pass() {
        assert!(combine(Aggregate::Max, 0.0, f64::NAN).is_nan());
        assert!(combine(Aggregate::Min, f64::NAN, 1.0).is_nan());
    }
}
