//! Domain types and the single-agent Gaussian decision primitives.
//!
//! Beliefs live in the open interval (0, 1) but every ratio computation runs
//! in log-odds space; `Probability` converts at the boundary.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::special::{ln_q_tail, q_tail};

/// Largest f64 strictly below 1.
const MAX_BELOW_ONE: f64 = 1.0 - f64::EPSILON / 2.0;

/// A probability in the open interval (0, 1).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Probability(f64);

impl Probability {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value > 0.0 && value < 1.0 {
            Ok(Self(value))
        } else {
            Err(Error::InvalidProbability(value))
        }
    }

    /// Half, the symmetric belief.
    pub const HALF: Probability = Probability(0.5);

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn complement(self) -> Self {
        Self(1.0 - self.0)
    }

    /// `ln(p / (1 - p))`, exact near both endpoints.
    pub fn log_odds(self) -> f64 {
        self.0.ln() - (-self.0).ln_1p()
    }

    /// Logistic map back from log-odds, clamped into the open interval.
    pub fn from_log_odds(lo: f64) -> Self {
        let p = if lo >= 0.0 {
            1.0 / (1.0 + (-lo).exp())
        } else {
            let e = lo.exp();
            e / (1.0 + e)
        };
        Self(p.clamp(f64::MIN_POSITIVE, MAX_BELOW_ONE))
    }

    /// Clamp an arbitrary finite value into the open interval.
    pub(crate) fn clamped(value: f64) -> Self {
        Self(value.clamp(f64::MIN_POSITIVE, MAX_BELOW_ONE))
    }
}

impl TryFrom<f64> for Probability {
    type Error = Error;
    fn try_from(value: f64) -> Result<Self> {
        Probability::new(value)
    }
}

impl From<Probability> for f64 {
    fn from(p: Probability) -> f64 {
        p.value()
    }
}

impl std::fmt::Display for Probability {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Error costs: `c10` for a false alarm (declare 1 under H=0), `c01` for a
/// missed detection (declare 0 under H=1). Correct decisions cost nothing.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "CostModelRepr", into = "CostModelRepr")]
pub struct CostModel {
    c10: f64,
    c01: f64,
}

#[derive(Clone, Serialize, Deserialize)]
struct CostModelRepr {
    c10: f64,
    c01: f64,
}

impl CostModel {
    pub fn new(c10: f64, c01: f64) -> Result<Self> {
        for c in [c10, c01] {
            if !(c.is_finite() && c > 0.0) {
                return Err(Error::InvalidCost(c));
            }
        }
        Ok(Self { c10, c01 })
    }

    /// Unit costs for both error kinds.
    pub fn unit() -> Self {
        Self { c10: 1.0, c01: 1.0 }
    }

    pub fn c10(&self) -> f64 {
        self.c10
    }

    pub fn c01(&self) -> f64 {
        self.c01
    }

    pub(crate) fn log_cost_ratio(&self) -> f64 {
        (self.c10 / self.c01).ln()
    }

    /// The prior `c01 / (c01 + c10)` at which both error kinds weigh the
    /// same; the threshold test at this belief is cost-neutral.
    pub fn balance_point(&self) -> Probability {
        Probability::clamped(self.c01 / (self.c01 + self.c10))
    }
}

impl TryFrom<CostModelRepr> for CostModel {
    type Error = Error;
    fn try_from(r: CostModelRepr) -> Result<Self> {
        CostModel::new(r.c10, r.c01)
    }
}

impl From<CostModel> for CostModelRepr {
    fn from(c: CostModel) -> Self {
        CostModelRepr { c10: c.c10, c01: c.c01 }
    }
}

/// Additive-Gaussian private-signal model: the signal is `H + Z` with
/// `Z ~ N(0, sigma^2)` and the hypothesis means fixed at 0 and 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct GaussianLikelihood {
    sigma: f64,
}

impl GaussianLikelihood {
    pub fn new(sigma: f64) -> Result<Self> {
        if sigma.is_finite() && sigma > 0.0 {
            Ok(Self { sigma })
        } else {
            Err(Error::InvalidSigma(sigma))
        }
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn variance(&self) -> f64 {
        self.sigma * self.sigma
    }
}

impl TryFrom<f64> for GaussianLikelihood {
    type Error = Error;
    fn try_from(sigma: f64) -> Result<Self> {
        GaussianLikelihood::new(sigma)
    }
}

impl From<GaussianLikelihood> for f64 {
    fn from(l: GaussianLikelihood) -> f64 {
        l.sigma
    }
}

/// A binary decision: declare hypothesis 0 or hypothesis 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Decision {
    Zero,
    One,
}

impl Decision {
    pub fn bit(self) -> u8 {
        match self {
            Decision::Zero => 0,
            Decision::One => 1,
        }
    }

    pub fn from_bit(bit: u8) -> Result<Self> {
        match bit {
            0 => Ok(Decision::Zero),
            1 => Ok(Decision::One),
            other => Err(Error::InvalidBit(other)),
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Decision::Zero => Decision::One,
            Decision::One => Decision::Zero,
        }
    }
}

impl std::fmt::Display for Decision {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.bit())
    }
}

/// The true state of the world in the binary test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    Null,
    Alt,
}

impl Hypothesis {
    /// Signal mean under this hypothesis.
    pub fn signal_mean(self) -> f64 {
        match self {
            Hypothesis::Null => 0.0,
            Hypothesis::Alt => 1.0,
        }
    }
}

/// Type I / Type II error probabilities of a threshold test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorPair {
    /// P(declare 1 | H=0) = Q(lambda / sigma)
    pub false_alarm: f64,
    /// P(declare 0 | H=1) = Q((1 - lambda) / sigma)
    pub missed_detection: f64,
}

/// Decision threshold of the likelihood-ratio test with belief `q`:
/// `lambda = 1/2 + sigma^2 ln(c10 q / (c01 (1 - q)))`.
///
/// A signal at or above the threshold declares 1 (ties resolve to 1).
pub fn decision_threshold(lik: GaussianLikelihood, belief: Probability, costs: &CostModel) -> f64 {
    threshold_of_log_odds(lik, belief.log_odds(), costs)
}

pub(crate) fn threshold_of_log_odds(lik: GaussianLikelihood, log_odds: f64, costs: &CostModel) -> f64 {
    0.5 + lik.variance() * (costs.log_cost_ratio() + log_odds)
}

/// Error probabilities of the threshold test at `lambda`.
pub fn error_probabilities(lik: GaussianLikelihood, lambda: f64) -> ErrorPair {
    let s = lik.sigma();
    ErrorPair {
        false_alarm: q_tail(lambda / s),
        missed_detection: q_tail((1.0 - lambda) / s),
    }
}

/// One belief-update step in log-odds space.
///
/// Observing decision 0 multiplies the odds by `(1 - P_FA) / P_MD`,
/// decision 1 by `P_FA / (1 - P_MD)`, with both error probabilities taken at
/// the updater's own threshold for the current belief. Carried out through
/// `ln Q` so extreme thresholds cannot underflow.
pub(crate) fn update_log_odds(
    log_odds: f64,
    decision: Decision,
    lik: GaussianLikelihood,
    costs: &CostModel,
) -> f64 {
    let lambda = threshold_of_log_odds(lik, log_odds, costs);
    let s = lik.sigma();
    match decision {
        // ln(1 - P_FA) = ln Q(-lambda/s), ln P_MD = ln Q((1 - lambda)/s)
        Decision::Zero => log_odds + ln_q_tail(-lambda / s) - ln_q_tail((1.0 - lambda) / s),
        // ln P_FA = ln Q(lambda/s), ln(1 - P_MD) = ln Q((lambda - 1)/s)
        Decision::One => log_odds + ln_q_tail(lambda / s) - ln_q_tail((lambda - 1.0) / s),
    }
}

/// Odds of the posterior belief after observing one decision.
///
/// As a function of the belief these are the order-preservation maps of the
/// update recursion: for Gaussian likelihoods both the decision-0 and the
/// decision-1 map are strictly increasing, which is what makes the posterior
/// ordering of two beliefs survive any shared decision sequence.
pub fn updated_odds(
    belief: Probability,
    decision: Decision,
    lik: GaussianLikelihood,
    costs: &CostModel,
) -> f64 {
    update_log_odds(belief.log_odds(), decision, lik, costs).exp()
}
