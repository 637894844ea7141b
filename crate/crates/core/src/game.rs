//! The guessing game itself: Alice's four answering rules, Bob's answers,
//! and the exact half-point scoring ledger.
//!
//! One round works on two memory slots indexed by `x ∈ {0, 1}`. Alice fills
//! both slots from a single rule `u(x) = a0 ⊕ a1·x`; Bob submits one guess
//! per slot and earns +½ per correct guess, −½ per wrong one. Alice's score
//! mirrors Bob's, so every round is zero-sum with totals in {−1, 0, 1}.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Neg};

use rand::Rng;

use crate::error::{Error, Result};

/// A single binary digit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bit {
    /// Logical 0.
    Zero,
    /// Logical 1.
    One,
}

impl Bit {
    /// Both values, in slot order.
    pub const ALL: [Bit; 2] = [Bit::Zero, Bit::One];

    /// Modulo-2 addition.
    pub fn xor(self, other: Bit) -> Bit {
        if self == other {
            Bit::Zero
        } else {
            Bit::One
        }
    }

    /// The other value.
    pub fn flipped(self) -> Bit {
        self.xor(Bit::One)
    }

    /// 0 or 1, handy for indexing per-slot arrays.
    pub fn index(self) -> usize {
        match self {
            Bit::Zero => 0,
            Bit::One => 1,
        }
    }

    /// Numeric value.
    pub fn as_u8(self) -> u8 {
        self.index() as u8
    }
}

impl fmt::Display for Bit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

/// Exact game score kept in integer half-point units.
///
/// Single answers are worth ±½ and a round total lands in {−1, 0, 1};
/// storing halves as integers keeps every ledger sum exact no matter how
/// many rounds are accumulated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Score {
    halves: i64,
}

impl Score {
    /// The zero score.
    pub const ZERO: Score = Score { halves: 0 };
    /// A won single answer.
    pub const PLUS_HALF: Score = Score { halves: 1 };
    /// A lost single answer.
    pub const MINUS_HALF: Score = Score { halves: -1 };

    /// Build a score from a count of half-points.
    pub const fn from_halves(halves: i64) -> Score {
        Score { halves }
    }

    /// The score as a count of half-points.
    pub const fn halves(self) -> i64 {
        self.halves
    }

    /// The score as a float (exact: halves are dyadic).
    pub fn to_f64(self) -> f64 {
        self.halves as f64 / 2.0
    }
}

impl Add for Score {
    type Output = Score;
    fn add(self, rhs: Score) -> Score {
        Score::from_halves(self.halves + rhs.halves)
    }
}

impl AddAssign for Score {
    fn add_assign(&mut self, rhs: Score) {
        self.halves += rhs.halves;
    }
}

impl Neg for Score {
    type Output = Score;
    fn neg(self) -> Score {
        Score::from_halves(-self.halves)
    }
}

impl Sum for Score {
    fn sum<I: Iterator<Item = Score>>(iter: I) -> Score {
        iter.fold(Score::ZERO, Add::add)
    }
}

impl fmt::Display for Score {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.halves % 2 == 0 {
            write!(f, "{}", self.halves / 2)
        } else {
            write!(f, "{}/2", self.halves)
        }
    }
}

/// One of the four answering rules `u(x) = a0 ⊕ a1·x` Alice can commit to.
///
/// The variant order fixes the family index: 1 ↔ constant 0, 2 ↔ identity,
/// 3 ↔ negation, 4 ↔ constant 1, i.e. coefficients (0,0), (0,1), (1,1),
/// (1,0). The rule's two memory bits are not stored; they are recomputed as
/// `answer(x)` on demand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AliceStrategy {
    /// `u(x) = 0`.
    ConstZero,
    /// `u(x) = x`.
    Identity,
    /// `u(x) = 1 ⊕ x`.
    Negation,
    /// `u(x) = 1`.
    ConstOne,
}

impl AliceStrategy {
    /// All four families in index order.
    pub const ALL: [AliceStrategy; 4] = [
        AliceStrategy::ConstZero,
        AliceStrategy::Identity,
        AliceStrategy::Negation,
        AliceStrategy::ConstOne,
    ];

    /// The 1-based family index.
    pub fn tau_index(self) -> u8 {
        match self {
            AliceStrategy::ConstZero => 1,
            AliceStrategy::Identity => 2,
            AliceStrategy::Negation => 3,
            AliceStrategy::ConstOne => 4,
        }
    }

    /// Look a family up by its 1-based index.
    pub fn from_tau_index(tau: u8) -> Result<AliceStrategy> {
        match tau {
            1 => Ok(AliceStrategy::ConstZero),
            2 => Ok(AliceStrategy::Identity),
            3 => Ok(AliceStrategy::Negation),
            4 => Ok(AliceStrategy::ConstOne),
            other => Err(Error::UnknownStrategyIndex(other)),
        }
    }

    /// The coefficients `(a0, a1)` of `u(x) = a0 ⊕ a1·x`.
    pub fn coefficients(self) -> (Bit, Bit) {
        match self {
            AliceStrategy::ConstZero => (Bit::Zero, Bit::Zero),
            AliceStrategy::Identity => (Bit::Zero, Bit::One),
            AliceStrategy::Negation => (Bit::One, Bit::One),
            AliceStrategy::ConstOne => (Bit::One, Bit::Zero),
        }
    }

    /// Evaluate the rule: `a0 ⊕ a1·x`.
    pub fn answer(self, x: Bit) -> Bit {
        let (a0, a1) = self.coefficients();
        match a1 {
            Bit::Zero => a0,
            Bit::One => a0.xor(x),
        }
    }

    /// The rule answering the opposite bit at every `x` (`a0` flipped):
    /// constant 0 ↔ constant 1, identity ↔ negation.
    pub fn complement(self) -> AliceStrategy {
        match self {
            AliceStrategy::ConstZero => AliceStrategy::ConstOne,
            AliceStrategy::Identity => AliceStrategy::Negation,
            AliceStrategy::Negation => AliceStrategy::Identity,
            AliceStrategy::ConstOne => AliceStrategy::ConstZero,
        }
    }

    /// Uniform draw over the four families.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> AliceStrategy {
        Self::ALL[rng.random_range(0..4)]
    }
}

impl fmt::Display for AliceStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tau_index())
    }
}

/// Uniform draw over the four answering rules.
pub fn random_alice_strategy<R: Rng + ?Sized>(rng: &mut R) -> AliceStrategy {
    AliceStrategy::random(rng)
}

/// A fully scored round.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RoundRecord {
    /// The rule Alice played.
    pub strategy: AliceStrategy,
    /// Bob's guesses for x = 0 and x = 1.
    pub bob_answers: (Bit, Bit),
    /// Bob's single points (±½ each) for x = 0 and x = 1.
    pub single_points_bob: (Score, Score),
    /// Bob's round total, in {−1, 0, 1}.
    pub xi_bob: Score,
    /// Alice's round total, always `−xi_bob`.
    pub xi_alice: Score,
}

/// Score Bob's two guesses against a strategy.
pub fn score_round(strategy: AliceStrategy, bob_answers: (Bit, Bit)) -> RoundRecord {
    let point = |x: Bit, guess: Bit| {
        if guess == strategy.answer(x) {
            Score::PLUS_HALF
        } else {
            Score::MINUS_HALF
        }
    };
    let single_points_bob = (point(Bit::Zero, bob_answers.0), point(Bit::One, bob_answers.1));
    let xi_bob = single_points_bob.0 + single_points_bob.1;
    RoundRecord {
        strategy,
        bob_answers,
        single_points_bob,
        xi_bob,
        xi_alice: -xi_bob,
    }
}

/// The fixed strategy and score sets of the game.
pub struct GameSets;

impl GameSets {
    /// Alice's strategy set: the four answering rules.
    pub const fn alice_strategies() -> [AliceStrategy; 4] {
        AliceStrategy::ALL
    }

    /// Bob's per-slot answer set.
    pub const fn bob_answers() -> [Bit; 2] {
        Bit::ALL
    }

    /// The possible round totals {−1, 0, 1}.
    pub const fn scores() -> [Score; 3] {
        [
            Score::from_halves(-2),
            Score::ZERO,
            Score::from_halves(2),
        ]
    }
}
