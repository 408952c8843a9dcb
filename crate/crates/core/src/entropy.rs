//! Von Neumann entropy, pairwise mutual information and the cut-sum
//! approximation `S_RC(R) = ½ Σ_{i∈R, j∈R̄} I(i:j)` on a small qubit graph.
//!
//! Entropies are in bits. Eigenvalues below [`EIGEN_FLOOR`] count as zero.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::states::{DensityMatrix, PureState, StateJson};
use crate::tolerance::Tolerances;

pub const EIGEN_FLOOR: f64 = 1e-12;

/// `−Σ λ log₂ λ`.
pub fn von_neumann(rho: &DensityMatrix) -> f64 {
    let s: f64 = rho
        .eigenvalues()
        .into_iter()
        .filter(|&l| l > EIGEN_FLOOR)
        .map(|l| -l * l.log2())
        .sum();
    s.max(0.0)
}

fn check_qubit(rho: &DensityMatrix, q: usize) -> Result<()> {
    if q >= rho.qubits() {
        return Err(Error::InvalidQubitIndex { index: q, qubits: rho.qubits() });
    }
    Ok(())
}

/// Entropy of the reduced state on `qubits`.
pub fn region_entropy(rho: &DensityMatrix, qubits: &[usize]) -> Result<f64> {
    Ok(von_neumann(&rho.partial_trace(qubits)?))
}

/// `I(i:j) = S(ρᵢ) + S(ρⱼ) − S(ρᵢⱼ)`.
pub fn mutual_information(rho: &DensityMatrix, i: usize, j: usize) -> Result<f64> {
    check_qubit(rho, i)?;
    check_qubit(rho, j)?;
    if i == j {
        return Err(Error::InvalidRegion(format!("mutual information needs distinct qubits, got {i} twice")));
    }
    let si = region_entropy(rho, &[i])?;
    let sj = region_entropy(rho, &[j])?;
    let sij = region_entropy(rho, &[i, j])?;
    Ok(si + sj - sij)
}

/// Global state of an [`EntropyGraph`].
#[derive(Debug, Clone, PartialEq)]
pub enum GraphState {
    Pure(PureState),
    Mixed(DensityMatrix),
}

impl GraphState {
    pub fn density(&self) -> DensityMatrix {
        match self {
            GraphState::Pure(s) => s.density_matrix(),
            GraphState::Mixed(rho) => rho.clone(),
        }
    }

    pub fn qubits(&self) -> usize {
        match self {
            GraphState::Pure(s) => s.qubits(),
            GraphState::Mixed(rho) => rho.qubits(),
        }
    }
}

/// Nodes carrying one qubit each, split into a region `R` and its complement.
#[derive(Debug, Clone, PartialEq)]
pub struct EntropyGraph {
    node_qubits: Vec<usize>,
    region: Vec<usize>,
    state: GraphState,
}

impl EntropyGraph {
    /// One node per qubit, node `k` holding qubit `k`.
    pub fn new(state: GraphState, region: Vec<usize>) -> Result<Self> {
        let nodes = (0..state.qubits()).collect();
        Self::with_nodes(state, nodes, region)
    }

    /// `node_qubits[k]` is the qubit held by node `k`; `region` lists nodes.
    pub fn with_nodes(state: GraphState, node_qubits: Vec<usize>, region: Vec<usize>) -> Result<Self> {
        let n = state.qubits();
        for (k, &q) in node_qubits.iter().enumerate() {
            if q >= n {
                return Err(Error::InvalidQubitIndex { index: q, qubits: n });
            }
            if node_qubits[..k].contains(&q) {
                return Err(Error::InvalidRegion(format!("qubit {q} assigned to two nodes")));
            }
        }
        let mut region = region;
        region.sort_unstable();
        region.dedup();
        if let Some(&bad) = region.iter().find(|&&v| v >= node_qubits.len()) {
            return Err(Error::InvalidRegion(format!(
                "node {bad} out of range for {} nodes",
                node_qubits.len()
            )));
        }
        if region.is_empty() || region.len() == node_qubits.len() {
            return Err(Error::InvalidRegion(
                "region and its complement must both be non-empty".into(),
            ));
        }
        Ok(Self { node_qubits, region, state })
    }

    pub fn region(&self) -> &[usize] {
        &self.region
    }

    pub fn complement(&self) -> Vec<usize> {
        (0..self.node_qubits.len()).filter(|v| !self.region.contains(v)).collect()
    }

    pub fn state(&self) -> &GraphState {
        &self.state
    }

    fn qubits_of(&self, nodes: &[usize]) -> Vec<usize> {
        nodes.iter().map(|&v| self.node_qubits[v]).collect()
    }

    /// `S(ρ_R)`.
    pub fn region_entropy(&self) -> Result<f64> {
        region_entropy(&self.state.density(), &self.qubits_of(&self.region))
    }

    /// `I(i:j)` for every pair across the cut, as `(i, j, I)` with node labels.
    pub fn links(&self) -> Result<Vec<(usize, usize, f64)>> {
        let rho = self.state.density();
        let mut out = Vec::new();
        for &i in &self.region {
            for j in self.complement() {
                let mi = mutual_information(&rho, self.node_qubits[i], self.node_qubits[j])?;
                out.push((i, j, mi));
            }
        }
        Ok(out)
    }

    /// `½ Σ_{i∈R, j∈R̄} I(i:j)`.
    pub fn rc_entropy(&self) -> Result<f64> {
        Ok(0.5 * self.links()?.iter().map(|l| l.2).sum::<f64>())
    }

    /// `S(ρ_R) − S_RC(R)`. Negative when mutual information over-counts.
    pub fn subleading(&self) -> Result<f64> {
        Ok(self.region_entropy()? - self.rc_entropy()?)
    }
}

pub fn rc_entropy(g: &EntropyGraph) -> Result<f64> {
    g.rc_entropy()
}

pub fn subleading(g: &EntropyGraph) -> Result<f64> {
    g.subleading()
}

/// `{"region": [...], "state": {...}}` with an optional `"nodes"` map.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntropyJob {
    pub region: Vec<usize>,
    pub state: StateJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nodes: Option<Vec<usize>>,
}

impl EntropyJob {
    pub fn graph(&self, tol: &Tolerances) -> Result<EntropyGraph> {
        let state = GraphState::Pure(PureState::from_json(&self.state, tol)?);
        match &self.nodes {
            Some(nodes) => EntropyGraph::with_nodes(state, nodes.clone(), self.region.clone()),
            None => EntropyGraph::new(state, self.region.clone()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn von_neumann_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        let s = PureState::random(2, &mut rng).unwrap();
        assert!(von_neumann(&s.density_matrix()).abs() < 1e-10);
        assert!((von_neumann(&DensityMatrix::maximally_mixed(1).unwrap()) - 1.0).abs() < 1e-12);
        let h = von_neumann(&DensityMatrix::diagonal(&[0.75, 0.25]).unwrap());
        let oracle = -(0.75f64 * 0.75f64.log2() + 0.25 * 0.25f64.log2());
        assert!((h - oracle).abs() < 1e-12);
        assert!((h - 0.8113).abs() < 1e-4);
    }

    #[test]
    fn mutual_information_examples() {
        let bell = PureState::bell().density_matrix();
        assert!((mutual_information(&bell, 0, 1).unwrap() - 2.0).abs() < 1e-10);
        let ghz = PureState::ghz(3).unwrap().density_matrix();
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            assert!((mutual_information(&ghz, i, j).unwrap() - 1.0).abs() < 1e-10);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(62);
        let prod = PureState::random_product(3, &mut rng).unwrap().density_matrix();
        assert!(mutual_information(&prod, 0, 2).unwrap().abs() < 1e-10);

        assert!(mutual_information(&bell, 0, 0).is_err());
        assert!(matches!(
            mutual_information(&bell, 0, 2),
            Err(Error::InvalidQubitIndex { index: 2, qubits: 2 })
        ));
    }

    #[test]
    fn rc_entropy_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(63);
        let prod = PureState::random_product(3, &mut rng).unwrap();
        let g = EntropyGraph::new(GraphState::Pure(prod), vec![0]).unwrap();
        assert!(g.rc_entropy().unwrap().abs() < 1e-10);
        assert!(g.subleading().unwrap().abs() < 1e-10);

        let g = EntropyGraph::new(GraphState::Pure(PureState::bell()), vec![0]).unwrap();
        assert!((g.rc_entropy().unwrap() - 1.0).abs() < 1e-10);
        assert!((g.region_entropy().unwrap() - 1.0).abs() < 1e-10);
        assert!(g.subleading().unwrap().abs() < 1e-10);

        let g = EntropyGraph::new(GraphState::Pure(PureState::ghz(3).unwrap()), vec![0]).unwrap();
        assert!((g.rc_entropy().unwrap() - 1.0).abs() < 1e-10);
        assert!((g.region_entropy().unwrap() - 1.0).abs() < 1e-10);

        let s = PureState::random(3, &mut rng).unwrap();
        let g = EntropyGraph::new(GraphState::Pure(s), vec![0]).unwrap();
        assert!(g.subleading().unwrap().is_finite());
    }

    #[test]
    fn bell_pair_products_have_no_subleading_term() {
        let mut rng = ChaCha8Rng::seed_from_u64(64);
        let single = PureState::random(1, &mut rng).unwrap();
        let s = PureState::bell().tensor(&single).unwrap();
        for region in [vec![0], vec![1], vec![0, 2], vec![1, 2], vec![2]] {
            let g = EntropyGraph::new(GraphState::Pure(s.clone()), region).unwrap();
            assert!(g.subleading().unwrap().abs() < 1e-10);
        }
        let s = PureState::bell().tensor(&PureState::bell()).unwrap();
        for region in [vec![0], vec![0, 2], vec![1, 3], vec![0, 1]] {
            let g = EntropyGraph::new(GraphState::Pure(s.clone()), region).unwrap();
            assert!(g.subleading().unwrap().abs() < 1e-10);
        }
    }

    #[test]
    fn node_maps_and_regions() {
        let s = PureState::bell().tensor(&PureState::basis(1, 0).unwrap()).unwrap();
        // node 0 = qubit 2, node 1 = qubit 0, node 2 = qubit 1
        let g = EntropyGraph::with_nodes(GraphState::Pure(s.clone()), vec![2, 0, 1], vec![1]).unwrap();
        assert!((g.rc_entropy().unwrap() - 1.0).abs() < 1e-10);
        let links = g.links().unwrap();
        assert_eq!(links.len(), 2);
        assert!(links.iter().any(|&(i, j, mi)| i == 1 && j == 2 && (mi - 2.0).abs() < 1e-10));

        let pure = GraphState::Pure(s);
        assert!(EntropyGraph::new(pure.clone(), vec![]).is_err());
        assert!(EntropyGraph::new(pure.clone(), vec![0, 1, 2]).is_err());
        assert!(EntropyGraph::new(pure.clone(), vec![5]).is_err());
        assert!(EntropyGraph::with_nodes(pure.clone(), vec![0, 0, 1], vec![0]).is_err());
        assert!(EntropyGraph::with_nodes(pure, vec![0, 3], vec![0]).is_err());
    }

    #[test]
    fn mixed_states_are_accepted() {
        let rho = DensityMatrix::maximally_mixed(2).unwrap();
        let g = EntropyGraph::new(GraphState::Mixed(rho), vec![0]).unwrap();
        assert!(g.rc_entropy().unwrap().abs() < 1e-10);
        assert!((g.subleading().unwrap() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn job_json() {
        let job: EntropyJob = serde_json::from_str(
            r#"{"region": [0], "state": {"qubits": 2, "amplitudes": [[0.7071067811865476,0],[0,0],[0,0],[0.7071067811865476,0]]}}"#,
        )
        .unwrap();
        let g = job.graph(&Tolerances::default()).unwrap();
        assert!((g.rc_entropy().unwrap() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn entropy_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(65);
        for n in 1..=3 {
            let rho = crate::states::random_mixed_with(n, &mut rng).unwrap();
            let s = von_neumann(&rho);
            assert!(s >= 0.0 && s <= n as f64 + 1e-10);
        }
    }
}
