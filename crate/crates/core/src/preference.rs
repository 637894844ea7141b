//! Quantified preferences: the bias pair (α₀, α₁) behind Bob's gate
//! probabilities, and the hint qualities that orient it for a given strategy.
//!
//! A hint about gate `j` arrives already quantified as a keep probability
//! `Pr(r_j → 0) = ½ + α_j` with `α_j ∈ [−½, ½]`; positive bias prefers
//! keeping the line value (choosing coefficient `r_j = 0`), negative bias
//! prefers flipping it.

use crate::error::{Error, Result};
use crate::game::{AliceStrategy, Bit};

/// Which of the two reasoning gates a quantity refers to. The first gate
/// always acts on the answer line; the second only when x = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GateId {
    /// The unconditional gate.
    R0,
    /// The gate conditioned on x = 1.
    R1,
}

impl GateId {
    /// Both gates, in firing order.
    pub const ALL: [GateId; 2] = [GateId::R0, GateId::R1];

    /// 0 or 1.
    pub fn index(self) -> usize {
        match self {
            GateId::R0 => 0,
            GateId::R1 => 1,
        }
    }
}

/// Bob's preference bias 𝛂 = (α₀, α₁), each component in [−½, ½].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PreferenceBias {
    alpha0: f64,
    alpha1: f64,
}

impl PreferenceBias {
    /// Validate and wrap a bias pair.
    pub fn new(alpha0: f64, alpha1: f64) -> Result<PreferenceBias> {
        for (gate, value) in [(0, alpha0), (1, alpha1)] {
            if !(value.abs() <= 0.5) {
                return Err(Error::BiasOutOfRange { gate, value });
            }
        }
        Ok(PreferenceBias { alpha0, alpha1 })
    }

    /// The indifferent bias (0, 0).
    pub fn unbiased() -> PreferenceBias {
        PreferenceBias { alpha0: 0.0, alpha1: 0.0 }
    }

    /// α₀.
    pub fn alpha0(&self) -> f64 {
        self.alpha0
    }

    /// α₁.
    pub fn alpha1(&self) -> f64 {
        self.alpha1
    }

    /// The component for one gate.
    pub fn alpha(&self, gate: GateId) -> f64 {
        match gate {
            GateId::R0 => self.alpha0,
            GateId::R1 => self.alpha1,
        }
    }

    /// Keep/flip probabilities (½ + α_j, ½ − α_j) for one gate.
    pub fn gate_probabilities(&self, gate: GateId) -> GateProbabilities {
        let alpha = self.alpha(gate);
        GateProbabilities { p_keep: 0.5 + alpha, p_flip: 0.5 - alpha }
    }

    /// The bias a truthful hint of the given strength induces for `strategy`:
    /// each sign is set so the preferred coefficient choice is the true one,
    /// `sign(α_j) = +` when the coefficient is 0 and `−` when it is 1.
    pub fn well_quantified(strategy: AliceStrategy, mag0: f64, mag1: f64) -> Result<PreferenceBias> {
        let (a0, a1) = strategy.coefficients();
        Ok(PreferenceBias {
            alpha0: signed_magnitude(a0, mag0)?,
            alpha1: signed_magnitude(a1, mag1)?,
        })
    }

    /// The bias a worst-case misleading hint induces for `strategy`: the
    /// well-quantified bias of the complementary rule, i.e. the α₀ sign is
    /// wrong and the α₁ sign is right, steering Bob toward the rule that
    /// answers the opposite bit at every slot.
    ///
    /// Flipping both signs would be milder, not worse: two wrong coefficient
    /// preferences cancel in the x = 1 answer (`r0 ⊕ r1` is unchanged), so
    /// only the x = 0 answer would suffer.
    pub fn ill_quantified(strategy: AliceStrategy, mag0: f64, mag1: f64) -> Result<PreferenceBias> {
        PreferenceBias::well_quantified(strategy.complement(), mag0, mag1)
    }
}

fn signed_magnitude(coefficient: Bit, magnitude: f64) -> Result<f64> {
    if !(0.0..=0.5).contains(&magnitude) {
        return Err(Error::MagnitudeOutOfRange { value: magnitude });
    }
    Ok(match coefficient {
        Bit::Zero => magnitude,
        Bit::One => -magnitude,
    })
}

/// One gate's keep/flip probability pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GateProbabilities {
    p_keep: f64,
    p_flip: f64,
}

impl GateProbabilities {
    /// Pr(r_j → 0): act as identity.
    pub fn p_keep(&self) -> f64 {
        self.p_keep
    }

    /// Pr(r_j → 1): act as NOT.
    pub fn p_flip(&self) -> f64 {
        self.p_flip
    }
}

/// How a hint relates to the strategy it is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HintQuality {
    /// Signs point at the true rule.
    WellQuantified,
    /// Signs point at the complementary rule (worst case).
    IllQuantified,
    /// No hint: α₀ = α₁ = 0 regardless of the magnitudes.
    Unbiased,
}

impl HintQuality {
    /// All qualities, in table order.
    pub const ALL: [HintQuality; 3] = [
        HintQuality::WellQuantified,
        HintQuality::IllQuantified,
        HintQuality::Unbiased,
    ];

    /// Construct the bias this quality of hint induces for a strategy.
    pub fn bias_for(
        self,
        strategy: AliceStrategy,
        mag0: f64,
        mag1: f64,
    ) -> Result<PreferenceBias> {
        match self {
            HintQuality::WellQuantified => PreferenceBias::well_quantified(strategy, mag0, mag1),
            HintQuality::IllQuantified => PreferenceBias::ill_quantified(strategy, mag0, mag1),
            HintQuality::Unbiased => Ok(PreferenceBias::unbiased()),
        }
    }

    /// Short table label.
    pub fn label(self) -> &'static str {
        match self {
            HintQuality::WellQuantified => "well",
            HintQuality::IllQuantified => "ill",
            HintQuality::Unbiased => "unbiased",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn gate_probabilities_follow_the_bias() {
        let bias = PreferenceBias::new(0.3, 0.0).unwrap();
        let p = bias.gate_probabilities(GateId::R0);
        assert_eq!(p.p_keep(), 0.8);
        assert_eq!(p.p_flip(), 0.2);

        // Indifference and the flip-certain boundary.
        let p = PreferenceBias::unbiased().gate_probabilities(GateId::R1);
        assert_eq!((p.p_keep(), p.p_flip()), (0.5, 0.5));
        let p = PreferenceBias::new(0.0, -0.5).unwrap().gate_probabilities(GateId::R1);
        assert_eq!((p.p_keep(), p.p_flip()), (0.0, 1.0));
    }

    #[test]
    fn out_of_range_bias_is_rejected() {
        assert!(matches!(
            PreferenceBias::new(0.51, 0.0),
            Err(Error::BiasOutOfRange { gate: 0, .. })
        ));
        assert!(matches!(
            PreferenceBias::new(0.0, f64::NAN),
            Err(Error::BiasOutOfRange { gate: 1, .. })
        ));
        assert!(matches!(
            PreferenceBias::well_quantified(AliceStrategy::ConstZero, -0.1, 0.2),
            Err(Error::MagnitudeOutOfRange { .. })
        ));
    }

    #[test]
    fn well_quantified_signs_point_at_the_true_rule() {
        let cases = [
            (AliceStrategy::ConstZero, (0.3, 0.3), (0.3, 0.3)),
            (AliceStrategy::Identity, (0.1, 0.1), (0.1, -0.1)),
            (AliceStrategy::Negation, (0.2, 0.4), (-0.2, -0.4)),
            (AliceStrategy::ConstOne, (0.25, 0.15), (-0.25, 0.15)),
        ];
        for (strategy, (m0, m1), (a0, a1)) in cases {
            let bias = PreferenceBias::well_quantified(strategy, m0, m1).unwrap();
            assert_eq!((bias.alpha0(), bias.alpha1()), (a0, a1), "{strategy:?}");
        }
    }

    #[test]
    fn well_quantified_prefers_the_true_coefficients() {
        // Pr(r_j → a_j) must exceed ½ whenever the magnitude is positive.
        for strategy in AliceStrategy::ALL {
            let bias = PreferenceBias::well_quantified(strategy, 0.2, 0.3).unwrap();
            let (a0, a1) = strategy.coefficients();
            for (gate, coeff) in [(GateId::R0, a0), (GateId::R1, a1)] {
                let p = bias.gate_probabilities(gate);
                let p_true = match coeff {
                    Bit::Zero => p.p_keep(),
                    Bit::One => p.p_flip(),
                };
                assert!(p_true > 0.5, "{strategy:?} {gate:?}");
            }
        }
    }

    #[test]
    fn ill_quantified_is_the_complement_rule_hint() {
        let cases: [(AliceStrategy, (f64, f64)); 4] = [
            (AliceStrategy::ConstZero, (-0.3, 0.3)),
            (AliceStrategy::Identity, (-0.1, -0.1)),
            (AliceStrategy::Negation, (0.1, -0.1)),
            (AliceStrategy::ConstOne, (0.05, 0.05)),
        ];
        for (strategy, expected) in cases {
            let magnitudes = (expected.0.abs(), expected.1.abs());
            let bias =
                PreferenceBias::ill_quantified(strategy, magnitudes.0, magnitudes.1).unwrap();
            assert_eq!((bias.alpha0(), bias.alpha1()), expected, "{strategy:?}");
            let well =
                PreferenceBias::well_quantified(strategy.complement(), magnitudes.0, magnitudes.1)
                    .unwrap();
            assert_eq!(bias, well);
        }
    }

    #[test]
    fn zero_magnitudes_collapse_to_unbiased() {
        for strategy in AliceStrategy::ALL {
            for quality in HintQuality::ALL {
                let bias = quality.bias_for(strategy, 0.0, 0.0).unwrap();
                assert_eq!(bias.alpha0(), 0.0);
                assert_eq!(bias.alpha1(), 0.0);
            }
        }
    }

    proptest! {
        #[test]
        fn keep_and_flip_sum_to_one_exactly(alpha in -0.5f64..=0.5) {
            let bias = PreferenceBias::new(alpha, -alpha).unwrap();
            for gate in GateId::ALL {
                let p = bias.gate_probabilities(gate);
                prop_assert!(p.p_keep() >= 0.0 && p.p_keep() <= 1.0);
                prop_assert_eq!(p.p_keep() + p.p_flip(), 1.0);
            }
        }

        #[test]
        fn hint_signs_track_the_coefficients(
            tau in 1u8..=4,
            mag0 in 0.0f64..=0.5,
            mag1 in 0.0f64..=0.5,
        ) {
            let strategy = AliceStrategy::from_tau_index(tau).unwrap();
            let (a0, a1) = strategy.coefficients();
            let well = PreferenceBias::well_quantified(strategy, mag0, mag1).unwrap();
            let sign = |c: Bit| if c == Bit::Zero { 1.0 } else { -1.0 };
            prop_assert_eq!(well.alpha0(), sign(a0) * mag0);
            prop_assert_eq!(well.alpha1(), sign(a1) * mag1);

            // The misleading hint flips only the α₀ sign.
            let ill = PreferenceBias::ill_quantified(strategy, mag0, mag1).unwrap();
            prop_assert_eq!(ill.alpha0(), -well.alpha0());
            prop_assert_eq!(ill.alpha1(), well.alpha1());
        }
    }
}
