//! Cross-module invariants tying the two machineries together.

use bitguess_core::{
    gamma, total_payoff, AliceStrategy, Bit, ClassicalAnswerDistribution, HintQuality,
    PhaseRule, PreferenceBias, QuantumAnswerDistribution, Reasoner,
};
use proptest::prelude::*;

fn p_correct(p_zero: f64, correct: Bit) -> f64 {
    match correct {
        Bit::Zero => p_zero,
        Bit::One => 1.0 - p_zero,
    }
}

/// With a truthful hint and the derived phase setting, the quantum circuit
/// is at least as likely to answer correctly as the stochastic one, slot by
/// slot, everywhere on the magnitude grid.
#[test]
fn quantum_dominates_classical_per_slot_for_well_hints() {
    for i in 0..=10 {
        for j in 0..=10 {
            let (m0, m1) = (i as f64 * 0.05, j as f64 * 0.05);
            for strategy in AliceStrategy::ALL {
                let bias = PreferenceBias::well_quantified(strategy, m0, m1).unwrap();
                let classical = ClassicalAnswerDistribution::evaluate(&bias);
                let quantum =
                    QuantumAnswerDistribution::evaluate(&bias, &PhaseRule::from_bias(&bias));
                for x in Bit::ALL {
                    let correct = strategy.answer(x);
                    let pc = p_correct(classical.p_answer_zero(x), correct);
                    let pq = p_correct(quantum.p_answer_zero(x), correct);
                    assert!(
                        pq >= pc - 1e-12,
                        "{strategy:?} ({m0},{m1}) x={x}: quantum {pq} < classical {pc}"
                    );
                }
            }
        }
    }
}

proptest! {
    /// Best and worst hint envelopes mirror each other for both machineries.
    #[test]
    fn envelopes_mirror(m0 in 0.0f64..=0.5, m1 in 0.0f64..=0.5) {
        for reasoner in Reasoner::ALL {
            let best = total_payoff(reasoner, m0, m1, HintQuality::WellQuantified)
                .unwrap()
                .xi_total;
            let worst = total_payoff(reasoner, m0, m1, HintQuality::IllQuantified)
                .unwrap()
                .xi_total;
            prop_assert!((best + worst).abs() <= 1e-12);
            prop_assert!(best.abs() <= 1.0 + 1e-12);
        }
    }

    /// The quantum advantage under truthful hints is exactly the
    /// interference amplitude, which never goes negative.
    #[test]
    fn quantum_gain_equals_gamma(m0 in 0.0f64..=0.5, m1 in 0.0f64..=0.5) {
        let c = total_payoff(Reasoner::Classical, m0, m1, HintQuality::WellQuantified)
            .unwrap()
            .xi_total;
        let q = total_payoff(Reasoner::Quantum, m0, m1, HintQuality::WellQuantified)
            .unwrap()
            .xi_total;
        let g = gamma(&PreferenceBias::new(m0, m1).unwrap());
        prop_assert!(g >= 0.0);
        // Zero magnitudes sit on the undecided phase branch where the gain
        // is forfeited; elsewhere the gap is Γ itself.
        if m0 == 0.0 || m1 == 0.0 {
            prop_assert_eq!(q, c);
        } else {
            prop_assert!((q - c - g).abs() <= 1e-12);
        }
    }
}
