//! Verification sweeps: every closed form is re-derived by brute force on
//! random parameter draws, and every structural invariant is measured.

use std::fmt;

use bitguess_core::{
    gamma, oracle_expected_score, per_tau_score, per_tau_score_quantum_form,
    random_alice_strategy, Bit, ClassicalAnswerDistribution, GateId, PhaseRule, PreferenceBias,
    QuantumAnswerDistribution, QubitState, Reasoner, UnitaryGate,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Score agreement tolerance: brute force vs closed forms.
pub const SCORE_TOLERANCE: f64 = 1e-10;
/// Structural tolerance: unitarity, normalization, statevector identities.
pub const STRUCTURAL_TOLERANCE: f64 = 1e-12;

/// Worst residuals observed across a sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleReport {
    /// Parameter draws performed.
    pub draws: u64,
    /// Seed the draws came from.
    pub seed: u64,
    /// Gate-enumeration expectation vs composed-matrix score.
    pub max_classical_score_residual: f64,
    /// Statevector expectation vs interference-corrected score.
    pub max_quantum_score_residual: f64,
    /// Evolved |amp0|² vs the algebraic probability lines.
    pub max_statevector_residual: f64,
    /// Worst ‖U·U† − I‖ over all built gates.
    pub max_unitarity_residual: f64,
    /// Worst normalization drift after full evolution.
    pub max_normalization_drift: f64,
}

impl OracleReport {
    /// True when every residual sits inside its tolerance.
    pub fn passed(&self) -> bool {
        self.max_classical_score_residual <= SCORE_TOLERANCE
            && self.max_quantum_score_residual <= SCORE_TOLERANCE
            && self.max_statevector_residual <= STRUCTURAL_TOLERANCE
            && self.max_unitarity_residual <= STRUCTURAL_TOLERANCE
            && self.max_normalization_drift <= STRUCTURAL_TOLERANCE
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let line = |f: &mut fmt::Formatter<'_>, name: &str, value: f64, tol: f64| {
            writeln!(
                f,
                "{name:<28} max {value:.3e}  tol {tol:.0e}  {}",
                if value <= tol { "ok" } else { "FAIL" }
            )
        };
        writeln!(f, "oracle sweep: {} draws, seed {}", self.draws, self.seed)?;
        line(f, "classical score residual", self.max_classical_score_residual, SCORE_TOLERANCE)?;
        line(f, "quantum score residual", self.max_quantum_score_residual, SCORE_TOLERANCE)?;
        line(f, "statevector residual", self.max_statevector_residual, STRUCTURAL_TOLERANCE)?;
        line(f, "unitarity residual", self.max_unitarity_residual, STRUCTURAL_TOLERANCE)?;
        line(f, "normalization drift", self.max_normalization_drift, STRUCTURAL_TOLERANCE)?;
        writeln!(f, "oracle check: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Run the full verification sweep: `draws` random (bias, strategy) points,
/// each checked along every route.
pub fn oracle_check(draws: u64, seed: u64) -> OracleReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = OracleReport {
        draws,
        seed,
        max_classical_score_residual: 0.0,
        max_quantum_score_residual: 0.0,
        max_statevector_residual: 0.0,
        max_unitarity_residual: 0.0,
        max_normalization_drift: 0.0,
    };

    for _ in 0..draws {
        let alpha0 = rng.random::<f64>() - 0.5;
        let alpha1 = rng.random::<f64>() - 0.5;
        let bias = PreferenceBias::new(alpha0, alpha1).expect("draw stays in range");
        let strategy = random_alice_strategy(&mut rng);
        let phases = PhaseRule::from_bias(&bias);

        // Scores: brute force against the closed-form assembly.
        let closed = per_tau_score(strategy, &ClassicalAnswerDistribution::evaluate(&bias));
        let brute = oracle_expected_score(strategy, Reasoner::Classical, &bias, &phases);
        report.max_classical_score_residual =
            report.max_classical_score_residual.max((closed.xi_bar - brute).abs());

        let closed = per_tau_score_quantum_form(strategy, &bias, phases.delta());
        let brute = oracle_expected_score(strategy, Reasoner::Quantum, &bias, &phases);
        report.max_quantum_score_residual =
            report.max_quantum_score_residual.max((closed.xi_bar - brute).abs());

        // Distributions: evolved amplitudes against the algebraic lines.
        let evolved = QuantumAnswerDistribution::evaluate(&bias, &phases);
        let expected_x0 = 0.5 + alpha0;
        let expected_x1 =
            0.5 + 2.0 * alpha0 * alpha1 + gamma(&bias) * phases.delta().cos_pi();
        report.max_statevector_residual = report
            .max_statevector_residual
            .max((evolved.p_answer_zero(Bit::Zero) - expected_x0).abs())
            .max((evolved.p_answer_zero(Bit::One) - expected_x1).abs());

        // Structure: unitarity and normalization.
        let mut state = QubitState::zero();
        for gate_id in GateId::ALL {
            let gate = UnitaryGate::build(&bias, gate_id, &phases);
            report.max_unitarity_residual =
                report.max_unitarity_residual.max(gate.unitarity_residual());
            state.apply(&gate);
        }
        report.max_normalization_drift =
            report.max_normalization_drift.max(state.normalization_drift());
    }

    report
}
