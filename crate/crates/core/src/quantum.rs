//! Bob's quantum machinery: single-qubit keep/flip unitaries carrying a
//! phase difference chosen from the bias signs, statevector evolution
//! conditioned on the classical slot index, and Born-rule sampling.
//!
//! Each unitary has the same keep/flip marginals as its stochastic
//! counterpart, plus a phase φ_j. Only the difference Δ = (φ₁ − φ₀)/π can
//! show up in any probability; picking it from the sign of α₀α₁ turns the
//! interference term to Bob's advantage.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;

use crate::game::Bit;
use crate::preference::{GateId, PreferenceBias};

/// Phase difference Δ = (φ₁ − φ₀)/π, restricted to the three useful values.
///
/// The cosine it feeds is returned exactly (±1 or 0), so closed-form scores
/// built on it vanish exactly where they should.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PhaseDelta {
    /// Δ = 0: aligned phases, constructive at the 0-answer.
    Zero,
    /// Δ = ½: the undecided setting used when a bias component vanishes.
    Half,
    /// Δ = 1: opposed phases.
    One,
}

impl PhaseDelta {
    /// Δ in units of π.
    pub fn in_units_of_pi(self) -> f64 {
        match self {
            PhaseDelta::Zero => 0.0,
            PhaseDelta::Half => 0.5,
            PhaseDelta::One => 1.0,
        }
    }

    /// cos(πΔ), exact.
    pub fn cos_pi(self) -> f64 {
        match self {
            PhaseDelta::Zero => 1.0,
            PhaseDelta::Half => 0.0,
            PhaseDelta::One => -1.0,
        }
    }
}

/// The gate phases (φ₀, φ₁), with φ₁ − φ₀ = πΔ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseRule {
    delta: PhaseDelta,
    phi0: f64,
}

impl PhaseRule {
    /// The score-maximizing setting for a bias: Δ = 0 when α₀α₁ > 0,
    /// Δ = ½ when the product vanishes, Δ = 1 when it is negative.
    /// φ₀ = 0 by convention.
    pub fn from_bias(bias: &PreferenceBias) -> PhaseRule {
        let product = bias.alpha0() * bias.alpha1();
        let delta = if product > 0.0 {
            PhaseDelta::Zero
        } else if product < 0.0 {
            PhaseDelta::One
        } else {
            PhaseDelta::Half
        };
        PhaseRule { delta, phi0: 0.0 }
    }

    /// The same Δ with both phases shifted by a common offset. Every
    /// probability must be invariant under the offset; tests rely on this
    /// constructor to check that.
    pub fn with_offset(delta: PhaseDelta, phi0: f64) -> PhaseRule {
        PhaseRule { delta, phi0 }
    }

    /// The phase difference.
    pub fn delta(&self) -> PhaseDelta {
        self.delta
    }

    /// φ_j in radians.
    pub fn phi(&self, gate: GateId) -> f64 {
        match gate {
            GateId::R0 => self.phi0,
            GateId::R1 => self.phi0 + PI * self.delta.in_units_of_pi(),
        }
    }
}

/// A 2×2 keep/flip unitary
/// `[[√p, e^{iφ}√(1−p)], [e^{−iφ}√(1−p), −√p]]` with p = ½ + α_j.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitaryGate {
    matrix: [[Complex64; 2]; 2],
}

impl UnitaryGate {
    /// Build the gate for one bias component and phase assignment.
    pub fn build(bias: &PreferenceBias, gate: GateId, phases: &PhaseRule) -> UnitaryGate {
        let p = bias.gate_probabilities(gate);
        let keep = p.p_keep().sqrt();
        let flip = p.p_flip().sqrt();
        let phase = Complex64::from_polar(1.0, phases.phi(gate));
        UnitaryGate {
            matrix: [
                [Complex64::new(keep, 0.0), phase * flip],
                [phase.conj() * flip, Complex64::new(-keep, 0.0)],
            ],
        }
    }

    /// The raw matrix, row-major.
    pub fn matrix(&self) -> &[[Complex64; 2]; 2] {
        &self.matrix
    }

    /// One entry.
    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.matrix[row][col]
    }

    /// Max-norm of U·U† − I.
    pub fn unitarity_residual(&self) -> f64 {
        let m = &self.matrix;
        let mut residual: f64 = 0.0;
        for row in 0..2 {
            for col in 0..2 {
                let mut dot = Complex64::new(0.0, 0.0);
                for k in 0..2 {
                    dot += m[row][k] * m[col][k].conj();
                }
                let expected = if row == col { 1.0 } else { 0.0 };
                residual = residual.max((dot - expected).norm());
            }
        }
        residual
    }
}

/// Single-qubit state amp0·|0⟩ + amp1·|1⟩.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitState {
    amp0: Complex64,
    amp1: Complex64,
}

impl QubitState {
    /// The initial state |0⟩ of the answer line.
    pub fn zero() -> QubitState {
        QubitState {
            amp0: Complex64::new(1.0, 0.0),
            amp1: Complex64::new(0.0, 0.0),
        }
    }

    /// Amplitude of |0⟩.
    pub fn amp0(&self) -> Complex64 {
        self.amp0
    }

    /// Amplitude of |1⟩.
    pub fn amp1(&self) -> Complex64 {
        self.amp1
    }

    /// Apply a gate.
    pub fn apply(&mut self, gate: &UnitaryGate) {
        let m = gate.matrix();
        let amp0 = m[0][0] * self.amp0 + m[0][1] * self.amp1;
        let amp1 = m[1][0] * self.amp0 + m[1][1] * self.amp1;
        self.amp0 = amp0;
        self.amp1 = amp1;
    }

    /// Born probability of measuring 0.
    pub fn prob_zero(&self) -> f64 {
        self.amp0.norm_sqr()
    }

    /// | |amp0|² + |amp1|² − 1 |.
    pub fn normalization_drift(&self) -> f64 {
        (self.amp0.norm_sqr() + self.amp1.norm_sqr() - 1.0).abs()
    }
}

/// Pr(u_Bob = 0 | x) for both slots, by statevector evolution from |0⟩.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantumAnswerDistribution {
    p_zero: [f64; 2],
}

impl QuantumAnswerDistribution {
    /// Evolve |0⟩ through R̂₀ (answers x = 0), then through R̂₁ (answers
    /// x = 1), reading the Born probability after each step.
    pub fn evaluate(bias: &PreferenceBias, phases: &PhaseRule) -> QuantumAnswerDistribution {
        let mut state = QubitState::zero();
        state.apply(&UnitaryGate::build(bias, GateId::R0, phases));
        let p_x0 = state.prob_zero();
        state.apply(&UnitaryGate::build(bias, GateId::R1, phases));
        let p_x1 = state.prob_zero();
        QuantumAnswerDistribution { p_zero: [p_x0, p_x1] }
    }

    /// Probability the answer for slot `x` is 0.
    pub fn p_answer_zero(&self, x: Bit) -> f64 {
        self.p_zero[x.index()]
    }
}

/// Pr(u_Bob = 0 | x) with the phases picked from the bias itself.
pub fn quantum_distribution(bias: &PreferenceBias, x: Bit) -> f64 {
    QuantumAnswerDistribution::evaluate(bias, &PhaseRule::from_bias(bias)).p_answer_zero(x)
}

/// Measure the evolved line once for slot `x`: a Bernoulli draw on the
/// Born probability, fresh randomness per call.
pub fn sample_answer_quantum<R: Rng + ?Sized>(bias: &PreferenceBias, x: Bit, rng: &mut R) -> Bit {
    if rng.random::<f64>() < quantum_distribution(bias, x) {
        Bit::Zero
    } else {
        Bit::One
    }
}

/// The interference amplitude Γ = 2√((¼ − α₀²)(¼ − α₁²)) ∈ [0, ½]:
/// the extra score the phase setting can move in or out of Bob's favor.
pub fn gamma(bias: &PreferenceBias) -> f64 {
    let a0 = bias.alpha0();
    let a1 = bias.alpha1();
    2.0 * ((0.25 - a0 * a0) * (0.25 - a1 * a1)).sqrt()
}
