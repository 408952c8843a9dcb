//! The tolerance ladder shared by every residual check.
//!
//! | rung | default | used for |
//! |------|---------|----------|
//! | `algebraic` | 1e-12 | exact algebraic identities on unit-scale data |
//! | `unit_norm` | 1e-10 | unit norms, null intervals, Lorentz invariance |
//! | `cross_formulation` | 1e-9 | ratio map vs expectation values |
//! | `separability` | 1e-8 | entanglement coordinates, interval classification |
//! | `renormalize` | 1e-6 | how far an input state may be from unit norm |

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub algebraic: f64,
    pub unit_norm: f64,
    pub cross_formulation: f64,
    pub separability: f64,
    pub renormalize: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            algebraic: 1e-12,
            unit_norm: 1e-10,
            cross_formulation: 1e-9,
            separability: 1e-8,
            renormalize: 1e-6,
        }
    }
}

impl Tolerances {
    /// Every rung set to `tol`, except the input renormalization window which
    /// describes accepted data rather than a residual bound.
    pub fn uniform(tol: f64) -> Self {
        Self {
            algebraic: tol,
            unit_norm: tol,
            cross_formulation: tol,
            separability: tol,
            renormalize: Self::default().renormalize,
        }
    }
}
