//! Closed-form score machinery: per-strategy expected scores, totals over
//! uniformly random strategies, the best/worst hint envelopes, and a
//! brute-force oracle that recomputes every score from raw gate enumeration
//! or statevectors plus the game ledger.
//!
//! The well-quantified totals obey
//! `Ξ_classical = |α₀| + 2|α₀||α₁|` and `Ξ_quantum = Ξ_classical + Γ`,
//! and the ill-quantified totals are their mirrors
//! `−Ξ_classical` and `−Ξ_classical − Γ`. None of that is hard-coded here:
//! the totals are assembled from the per-strategy machinery, and the tests
//! pin the identities.

use crate::classical::ClassicalAnswerDistribution;
use crate::error::Result;
use crate::game::{score_round, AliceStrategy, Bit};
use crate::preference::{GateId, HintQuality, PreferenceBias};
use crate::quantum::{gamma, PhaseDelta, PhaseRule, QubitState, UnitaryGate};

/// Which machinery Bob runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Reasoner {
    /// Stochastic keep/flip gates.
    Classical,
    /// Unitary gates with the phase rule.
    Quantum,
}

impl Reasoner {
    /// Both machineries, in table order.
    pub const ALL: [Reasoner; 2] = [Reasoner::Classical, Reasoner::Quantum];

    /// Short table label.
    pub fn label(self) -> &'static str {
        match self {
            Reasoner::Classical => "classical",
            Reasoner::Quantum => "quantum",
        }
    }
}

/// Conditional answer distribution Pr(u_Bob = 0 | x).
pub trait AnswerDistribution {
    /// Probability the answer for slot `x` is 0.
    fn p_answer_zero(&self, x: Bit) -> f64;
}

impl AnswerDistribution for ClassicalAnswerDistribution {
    fn p_answer_zero(&self, x: Bit) -> f64 {
        ClassicalAnswerDistribution::p_answer_zero(self, x)
    }
}

impl AnswerDistribution for crate::quantum::QuantumAnswerDistribution {
    fn p_answer_zero(&self, x: Bit) -> f64 {
        crate::quantum::QuantumAnswerDistribution::p_answer_zero(self, x)
    }
}

/// Expected score against one strategy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PerTauScore {
    /// The strategy scored against.
    pub strategy: AliceStrategy,
    /// Expected round total, in [−1, 1].
    pub xi_bar: f64,
}

/// Total average score with its four per-strategy components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PayoffSummary {
    /// Mean of the four components (each strategy equally likely).
    pub xi_total: f64,
    /// Per-strategy expected scores, in family order.
    pub components: [PerTauScore; 4],
    /// The machinery the summary is for.
    pub reasoner: Reasoner,
    /// The hint quality the biases were built with.
    pub quality: HintQuality,
}

/// Expected score of an answer distribution against a fixed strategy:
/// Σ_x (Pr(correct at x) − Pr(wrong at x)) / 2.
pub fn per_tau_score<D: AnswerDistribution>(strategy: AliceStrategy, dist: &D) -> PerTauScore {
    let mut xi_bar = 0.0;
    for x in Bit::ALL {
        let p_zero = dist.p_answer_zero(x);
        let p_correct = match strategy.answer(x) {
            Bit::Zero => p_zero,
            Bit::One => 1.0 - p_zero,
        };
        xi_bar += p_correct - 0.5;
    }
    PerTauScore { strategy, xi_bar }
}

/// Per-strategy quantum score: the classical score plus the interference
/// term ±Γcos(πΔ), signed + when the strategy answers 0 at x = 1 (the term
/// raises Pr(u = 0 | x = 1)) and − when it answers 1.
pub fn per_tau_score_quantum_form(
    strategy: AliceStrategy,
    bias: &PreferenceBias,
    delta: PhaseDelta,
) -> PerTauScore {
    let classical = per_tau_score(strategy, &ClassicalAnswerDistribution::evaluate(bias));
    let sign = match strategy.answer(Bit::One) {
        Bit::Zero => 1.0,
        Bit::One => -1.0,
    };
    PerTauScore {
        strategy,
        xi_bar: classical.xi_bar + sign * gamma(bias) * delta.cos_pi(),
    }
}

/// Total average classical score at hint magnitudes (mag0, mag1): for each
/// strategy the hint of the given quality orients the bias, the composed
/// gate distribution is scored, and the four results are averaged.
pub fn total_payoff_classical(
    mag0: f64,
    mag1: f64,
    quality: HintQuality,
) -> Result<PayoffSummary> {
    summarize(Reasoner::Classical, mag0, mag1, quality, |strategy, bias| {
        per_tau_score(strategy, &ClassicalAnswerDistribution::evaluate(bias))
    })
}

/// Total average quantum score at hint magnitudes (mag0, mag1), with the
/// phase difference re-derived from each strategy's bias. Zero magnitudes
/// fall on the Δ = ½ branch, where the quantum total equals the classical.
pub fn total_payoff_quantum(mag0: f64, mag1: f64, quality: HintQuality) -> Result<PayoffSummary> {
    summarize(Reasoner::Quantum, mag0, mag1, quality, |strategy, bias| {
        per_tau_score_quantum_form(strategy, bias, PhaseRule::from_bias(bias).delta())
    })
}

/// Total average score for either machinery.
pub fn total_payoff(
    reasoner: Reasoner,
    mag0: f64,
    mag1: f64,
    quality: HintQuality,
) -> Result<PayoffSummary> {
    match reasoner {
        Reasoner::Classical => total_payoff_classical(mag0, mag1, quality),
        Reasoner::Quantum => total_payoff_quantum(mag0, mag1, quality),
    }
}

fn summarize(
    reasoner: Reasoner,
    mag0: f64,
    mag1: f64,
    quality: HintQuality,
    score: impl Fn(AliceStrategy, &PreferenceBias) -> PerTauScore,
) -> Result<PayoffSummary> {
    let mut components = [PerTauScore { strategy: AliceStrategy::ConstZero, xi_bar: 0.0 }; 4];
    for (slot, strategy) in AliceStrategy::ALL.into_iter().enumerate() {
        let bias = quality.bias_for(strategy, mag0, mag1)?;
        components[slot] = score(strategy, &bias);
    }
    let xi_total = components.iter().map(|c| c.xi_bar).sum::<f64>() / 4.0;
    Ok(PayoffSummary { xi_total, components, reasoner, quality })
}

/// Expected score recomputed with no closed forms anywhere: classical runs
/// enumerate every joint gate outcome, quantum runs evolve the raw
/// statevector, and each joint answer pair is pushed through the game
/// ledger.
pub fn oracle_expected_score(
    strategy: AliceStrategy,
    reasoner: Reasoner,
    bias: &PreferenceBias,
    phases: &PhaseRule,
) -> f64 {
    let outcomes = |x: Bit| match reasoner {
        Reasoner::Classical => classical_outcomes(bias, x),
        Reasoner::Quantum => quantum_outcomes(bias, phases, x),
    };
    let mut expected = 0.0;
    for (u0, w0) in outcomes(Bit::Zero) {
        for &(u1, w1) in &outcomes(Bit::One) {
            expected += w0 * w1 * score_round(strategy, (u0, u1)).xi_bob.to_f64();
        }
    }
    expected
}

fn classical_outcomes(bias: &PreferenceBias, x: Bit) -> Vec<(Bit, f64)> {
    let p0 = bias.gate_probabilities(GateId::R0);
    match x {
        Bit::Zero => vec![(Bit::Zero, p0.p_keep()), (Bit::One, p0.p_flip())],
        Bit::One => {
            let p1 = bias.gate_probabilities(GateId::R1);
            let mut outcomes = Vec::with_capacity(4);
            for (keep0, w0) in [(true, p0.p_keep()), (false, p0.p_flip())] {
                for (keep1, w1) in [(true, p1.p_keep()), (false, p1.p_flip())] {
                    let mut value = Bit::Zero;
                    if !keep0 {
                        value = value.flipped();
                    }
                    if !keep1 {
                        value = value.flipped();
                    }
                    outcomes.push((value, w0 * w1));
                }
            }
            outcomes
        }
    }
}

fn quantum_outcomes(bias: &PreferenceBias, phases: &PhaseRule, x: Bit) -> Vec<(Bit, f64)> {
    let mut state = QubitState::zero();
    state.apply(&UnitaryGate::build(bias, GateId::R0, phases));
    if x == Bit::One {
        state.apply(&UnitaryGate::build(bias, GateId::R1, phases));
    }
    let p = state.prob_zero();
    vec![(Bit::Zero, p), (Bit::One, 1.0 - p)]
}
