//! Simulation library for a zero-sum two-bit guessing game played against
//! hinted reasoning machinery.
//!
//! Alice commits to one of the four one-bit answering rules
//! `u(x) = a0 ⊕ a1·x` and Bob guesses her answers for x = 0 and x = 1,
//! earning ±½ per guess. Bob's guesses come out of a two-gate circuit whose
//! keep/flip probabilities `(½ + α_j, ½ − α_j)` encode a quantified hint.
//! The circuit can run classically (stochastic switches) or as single-qubit
//! unitaries whose phase difference is picked from the hint signs; the
//! quantum variant converts the same hint into a strictly larger expected
//! score through interference — or a strictly worse one when the hint is
//! misleading.
//!
//! [`payoff`] holds the closed forms for both machineries together with a
//! brute-force oracle that recomputes every score from gate enumeration and
//! raw statevectors.

pub mod classical;
pub mod error;
pub mod game;
pub mod payoff;
pub mod preference;
pub mod quantum;

pub use classical::{
    classical_distribution, sample_answer_classical, ClassicalAnswerDistribution, StochasticGate,
};
pub use error::{Error, Result};
pub use game::{
    random_alice_strategy, score_round, AliceStrategy, Bit, GameSets, RoundRecord, Score,
};
pub use payoff::{
    oracle_expected_score, per_tau_score, per_tau_score_quantum_form, total_payoff,
    total_payoff_classical, total_payoff_quantum, AnswerDistribution, PayoffSummary, PerTauScore,
    Reasoner,
};
pub use preference::{GateId, GateProbabilities, HintQuality, PreferenceBias};
pub use quantum::{
    gamma, quantum_distribution, sample_answer_quantum, PhaseDelta, PhaseRule,
    QuantumAnswerDistribution, QubitState, UnitaryGate,
};
