//! Versioned JSON report of every analysis that applies to a state.
//!
//! Sections are present only when they apply to the state's qubit count.
//! See the repository README for the full schema.

use serde::{Deserialize, Serialize};

use crate::entropy::{self, EntropyGraph, GraphState};
use crate::error::Result;
use crate::fields::{self, DiracState};
use crate::hopf::{self, Level};
use crate::spacetime::{self, IntervalClass};
use crate::states::{PureState, StateJson};
use crate::tolerance::Tolerances;
use nalgebra::Vector2;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub input: StateJson,
    pub qubits: usize,
    pub tolerances: Tolerances,
    pub analyses: Analyses,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Analyses {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hopf: Option<HopfSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lightray: Option<LightraySection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub separability: Option<SeparabilitySection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weyl: Option<WeylSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dirac: Option<DiracSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entropy: Option<EntropySection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub region: Option<RegionSection>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HopfSection {
    pub level: Level,
    pub coords: Vec<f64>,
    /// `|Σxᵢ² − 1|`.
    pub norm_defect: f64,
    /// Largest coordinate difference from the ratio formulation.
    pub ratio_distance: f64,
    /// Largest imaginary part met while evaluating the coordinates.
    pub imaginary_residue: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LightraySection {
    pub components: Vec<f64>,
    pub interval: f64,
    pub class: IntervalClass,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeparabilitySection {
    /// Only for two qubits.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub separable: Option<bool>,
    /// `|c₀c₃ − c₁c₂|`, only for two qubits.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub defect: Option<f64>,
    pub entanglement_coords: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeylSection {
    pub k: Vec<f64>,
    pub null_defect: f64,
    pub weyl_residual: f64,
    pub maxwell_bianchi: f64,
    pub maxwell_source: f64,
    pub self_duality_defect: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiracSection {
    /// `K₀..K₅`.
    pub k: Vec<f64>,
    pub null_defect: f64,
    pub mass: f64,
    pub phase: f64,
    pub sigma_residual: f64,
    pub dirac_residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntropySection {
    /// `S(ρᵢ)` per qubit.
    pub qubit_entropies: Vec<f64>,
    /// `(i, j, I(i:j))` for `i < j`.
    pub mutual_information: Vec<(usize, usize, f64)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionSection {
    pub region: Vec<usize>,
    pub complement: Vec<usize>,
    pub region_entropy: f64,
    pub rc_entropy: f64,
    pub subleading: f64,
    pub links: Vec<(usize, usize, f64)>,
}

impl AnalysisReport {
    /// Runs every analysis valid for the state's qubit count.
    pub fn analyze(state: &PureState, tol: &Tolerances) -> Result<Self> {
        let n = state.qubits();
        let mut a = Analyses::default();

        if (1..=3).contains(&n) {
            let (h, residue) = match n {
                3 => hopf::hopf_o_with_residue(state)?,
                _ => (hopf::hopf(state)?, 0.0),
            };
            let ratio = hopf::hopf_ratio_state(state)?;
            a.hopf = Some(HopfSection {
                level: h.level,
                norm_defect: (h.norm_sqr() - 1.0).abs(),
                ratio_distance: h.distance(&ratio),
                imaginary_residue: residue,
                coords: h.coords.clone(),
            });

            let ray = spacetime::state_to_lightray(state)?;
            a.lightray = Some(LightraySection {
                interval: ray.interval(),
                class: ray.classify(),
                components: ray.components,
            });

            if n > 1 {
                let (separable, defect) = if n == 2 {
                    let (s, d) = state.is_separable_2q(tol.separability)?;
                    (Some(s), Some(d))
                } else {
                    (None, None)
                };
                a.separability = Some(SeparabilitySection {
                    separable,
                    defect,
                    entanglement_coords: hopf::entanglement_coords(&h)?,
                });
            }
        }

        if n == 1 {
            let amp = state.amplitudes();
            let psi = Vector2::new(amp[0], amp[1]);
            let k = fields::weyl_k(&psi);
            let (bianchi, source) = fields::maxwell_residuals(&psi);
            a.weyl = Some(WeylSection {
                null_defect: k.interval().abs(),
                weyl_residual: fields::weyl_residual(&psi),
                maxwell_bianchi: bianchi,
                maxwell_source: source,
                self_duality_defect: fields::em_tensor(&psi).self_duality_defect(),
                k: k.components,
            });
        }

        if n == 2 {
            let d = DiracState::from_state(state)?;
            let k = d.k();
            let (mass, phase) = fields::mass_phase(&k);
            a.dirac = Some(DiracSection {
                null_defect: k.interval().abs(),
                mass,
                phase,
                sigma_residual: fields::sigma_residual(state.amplitudes())?,
                dirac_residual: fields::dirac_residual_state(&d),
                k: k.components,
            });
        }

        if n >= 2 {
            let rho = state.density_matrix();
            let qubit_entropies = (0..n)
                .map(|q| entropy::region_entropy(&rho, &[q]))
                .collect::<Result<Vec<_>>>()?;
            let mut mutual_information = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    mutual_information.push((i, j, entropy::mutual_information(&rho, i, j)?));
                }
            }
            a.entropy = Some(EntropySection { qubit_entropies, mutual_information });
        }

        Ok(Self {
            schema_version: SCHEMA_VERSION,
            input: state.to_json(),
            qubits: n,
            tolerances: *tol,
            analyses: a,
        })
    }

    /// [`AnalysisReport::analyze`] plus the cut analysis of an entropy graph.
    pub fn analyze_graph(graph: &EntropyGraph, tol: &Tolerances) -> Result<Self> {
        let GraphState::Pure(state) = graph.state() else {
            unreachable!("graphs read from JSON hold pure states")
        };
        let mut report = Self::analyze(state, tol)?;
        report.analyses.region = Some(RegionSection {
            region: graph.region().to_vec(),
            complement: graph.complement(),
            region_entropy: graph.region_entropy()?,
            rc_entropy: graph.rc_entropy()?,
            subleading: graph.subleading()?,
            links: graph.links()?,
        });
        Ok(report)
    }

    /// True when every number in the serialized report is finite.
    pub fn all_finite(&self) -> bool {
        fn finite(v: &serde_json::Value) -> bool {
            match v {
                serde_json::Value::Number(n) => n.as_f64().is_some_and(f64::is_finite),
                serde_json::Value::Array(a) => a.iter().all(finite),
                serde_json::Value::Object(o) => o.values().all(finite),
                // serde_json writes non-finite floats as null
                serde_json::Value::Null => false,
                _ => true,
            }
        }
        serde_json::to_value(self).map(|v| finite(&v)).unwrap_or(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_report() {
        let r = AnalysisReport::analyze(&PureState::bell(), &Tolerances::default()).unwrap();
        assert_eq!(r.schema_version, SCHEMA_VERSION);
        let sep = r.analyses.separability.as_ref().unwrap();
        assert_eq!(sep.separable, Some(false));
        assert!((sep.defect.unwrap() - 0.5).abs() < 1e-15);
        let h = r.analyses.hopf.as_ref().unwrap();
        assert!(h.coords.iter().zip([0.0, 0.0, 1.0, 0.0, 0.0]).all(|(a, b)| (a - b).abs() < 1e-15));
        assert_eq!(r.analyses.dirac.as_ref().unwrap().mass, 0.0);
        assert!(r.analyses.weyl.is_none());
        assert!(r.all_finite());
    }

    #[test]
    fn single_qubit_report() {
        let r = AnalysisReport::analyze(&PureState::basis(1, 0).unwrap(), &Tolerances::default()).unwrap();
        assert_eq!(r.analyses.hopf.as_ref().unwrap().coords, vec![0.0, 0.0, 1.0]);
        assert_eq!(r.analyses.lightray.as_ref().unwrap().components, vec![1.0, 0.0, 0.0, 1.0]);
        assert!(r.analyses.separability.is_none() && r.analyses.entropy.is_none());
        assert!(r.analyses.weyl.is_some());
    }

    #[test]
    fn four_qubit_report_has_entropy_only() {
        let s = PureState::ghz(4).unwrap();
        let r = AnalysisReport::analyze(&s, &Tolerances::default()).unwrap();
        assert!(r.analyses.hopf.is_none() && r.analyses.lightray.is_none());
        assert_eq!(r.analyses.entropy.as_ref().unwrap().mutual_information.len(), 6);
    }

    #[test]
    fn report_roundtrips_through_json() {
        let s = PureState::ghz(3).unwrap();
        let r = AnalysisReport::analyze(&s, &Tolerances::default()).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        let back: AnalysisReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn graph_report() {
        let g = EntropyGraph::new(GraphState::Pure(PureState::bell()), vec![0]).unwrap();
        let r = AnalysisReport::analyze_graph(&g, &Tolerances::default()).unwrap();
        let region = r.analyses.region.unwrap();
        assert!((region.rc_entropy - 1.0).abs() < 1e-10);
        assert!(region.subleading.abs() < 1e-10);
    }
}
