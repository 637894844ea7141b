//! Bob's classical probabilistic machinery: two stochastic keep/flip gates
//! on the answer line, either sampled per round or composed exactly.
//!
//! The answer line starts at 0. Gate R0 always fires; R1 fires only when
//! x = 1. Each firing keeps the line value with probability ½ + α_j and
//! flips it otherwise.

use rand::Rng;

use crate::game::Bit;
use crate::preference::{GateId, PreferenceBias};

/// Row-stochastic transition matrix of one keep/flip gate:
/// `[[p_keep, p_flip], [p_flip, p_keep]]`. Symmetric, hence doubly
/// stochastic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StochasticGate {
    matrix: [[f64; 2]; 2],
}

impl StochasticGate {
    /// Build the gate matrix from the bias component for `gate`.
    pub fn for_gate(bias: &PreferenceBias, gate: GateId) -> StochasticGate {
        let p = bias.gate_probabilities(gate);
        StochasticGate {
            matrix: [[p.p_keep(), p.p_flip()], [p.p_flip(), p.p_keep()]],
        }
    }

    /// The raw matrix, row-major.
    pub fn matrix(&self) -> &[[f64; 2]; 2] {
        &self.matrix
    }

    /// Propagate a distribution over {0, 1} through the gate.
    pub fn apply(&self, dist: [f64; 2]) -> [f64; 2] {
        [
            self.matrix[0][0] * dist[0] + self.matrix[0][1] * dist[1],
            self.matrix[1][0] * dist[0] + self.matrix[1][1] * dist[1],
        ]
    }
}

/// Pr(u_Bob = 0 | x) for both slots, from exact gate composition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicalAnswerDistribution {
    p_zero: [f64; 2],
}

impl ClassicalAnswerDistribution {
    /// Compose the gate matrices against the point distribution at 0:
    /// R0 alone answers x = 0, then R1·R0 answers x = 1. The x = 1 entry
    /// works out to `p_keep0·p_keep1 + p_flip0·p_flip1 = ½ + 2α₀α₁` (the
    /// line keeps its value when both gates keep or both flip).
    pub fn evaluate(bias: &PreferenceBias) -> ClassicalAnswerDistribution {
        let after_r0 = StochasticGate::for_gate(bias, GateId::R0).apply([1.0, 0.0]);
        let after_r1 = StochasticGate::for_gate(bias, GateId::R1).apply(after_r0);
        ClassicalAnswerDistribution {
            p_zero: [after_r0[0], after_r1[0]],
        }
    }

    /// Probability the answer for slot `x` is 0.
    pub fn p_answer_zero(&self, x: Bit) -> f64 {
        self.p_zero[x.index()]
    }
}

/// Pr(u_Bob = 0 | x) from the composed gates.
pub fn classical_distribution(bias: &PreferenceBias, x: Bit) -> f64 {
    ClassicalAnswerDistribution::evaluate(bias).p_answer_zero(x)
}

/// Run the circuit once and read the answer for slot `x`.
///
/// Each gate draws a fresh uniform r ∈ [0, 1) and acts as identity when
/// r < Pr(r_j → 0), as NOT otherwise.
pub fn sample_answer_classical<R: Rng + ?Sized>(
    bias: &PreferenceBias,
    x: Bit,
    rng: &mut R,
) -> Bit {
    let mut value = switch(bias, GateId::R0, Bit::Zero, rng);
    if x == Bit::One {
        value = switch(bias, GateId::R1, value, rng);
    }
    value
}

fn switch<R: Rng + ?Sized>(bias: &PreferenceBias, gate: GateId, value: Bit, rng: &mut R) -> Bit {
    if rng.random::<f64>() < bias.gate_probabilities(gate).p_keep() {
        value
    } else {
        value.flipped()
    }
}
