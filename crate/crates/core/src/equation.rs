//! Power-sum equations `x1^p1 + ... + xn^pn = N` and exact evaluation of
//! candidate tuples.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A power-sum Diophantine equation: `Σ x_i^{p_i} = target` over positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawEquation", into = "RawEquation")]
pub struct DiophantineEquation {
    powers: Vec<u32>,
    target: u64,
}

#[derive(Serialize, Deserialize)]
struct RawEquation {
    powers: Vec<u32>,
    target: u64,
}

impl TryFrom<RawEquation> for DiophantineEquation {
    type Error = Error;

    fn try_from(raw: RawEquation) -> Result<Self> {
        Self::new(raw.powers, raw.target)
    }
}

impl From<DiophantineEquation> for RawEquation {
    fn from(eq: DiophantineEquation) -> Self {
        RawEquation {
            powers: eq.powers,
            target: eq.target,
        }
    }
}

impl DiophantineEquation {
    pub fn new(powers: Vec<u32>, target: u64) -> Result<Self> {
        if powers.is_empty() {
            return Err(Error::InvalidEquation(
                "at least one variable is required".into(),
            ));
        }
        if let Some(i) = powers.iter().position(|&p| p == 0) {
            return Err(Error::InvalidEquation(format!(
                "power of x{} must be at least 1",
                i + 1
            )));
        }
        if target == 0 {
            return Err(Error::InvalidEquation("target must be at least 1".into()));
        }
        Ok(Self { powers, target })
    }

    /// Same power `p` on each of `n` variables.
    pub fn uniform(n: usize, power: u32, target: u64) -> Result<Self> {
        Self::new(vec![power; n], target)
    }

    pub fn powers(&self) -> &[u32] {
        &self.powers
    }

    pub fn target(&self) -> u64 {
        self.target
    }

    /// Number of variables.
    pub fn arity(&self) -> usize {
        self.powers.len()
    }

    /// Largest exponent; the `Max` term of the step-size denominator.
    pub fn max_power(&self) -> u32 {
        // non-empty by construction
        self.powers.iter().copied().max().unwrap_or(1)
    }

    /// Network output `Q = Σ w_i^{p_i}`, exact.
    ///
    /// Fails with [`Error::Overflow`] when the sum does not fit the signed
    /// 128-bit range used for the error term.
    pub fn evaluate(&self, w: &WeightVector) -> Result<u128> {
        self.check_arity(w)?;
        evaluate_raw(&self.powers, w.as_slice()).ok_or(Error::Overflow)
    }

    /// `E = Q - N`; zero exactly at a solution.
    pub fn error(&self, w: &WeightVector) -> Result<i128> {
        let q = self.evaluate(w)?;
        Ok(q as i128 - self.target as i128)
    }

    pub fn is_solution(&self, w: &WeightVector) -> bool {
        matches!(self.error(w), Ok(0))
    }

    fn check_arity(&self, w: &WeightVector) -> Result<()> {
        if w.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: w.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for DiophantineEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parse::format_equation(self))
    }
}

/// Σ base_i^exp_i in checked arithmetic, capped at `i128::MAX`.
pub(crate) fn evaluate_raw(powers: &[u32], weights: &[u64]) -> Option<u128> {
    let mut sum: u128 = 0;
    for (&p, &w) in powers.iter().zip(weights) {
        let term = (w as u128).checked_pow(p)?;
        sum = sum.checked_add(term)?;
    }
    (sum <= i128::MAX as u128).then_some(sum)
}

/// Update direction: `+1` grow the weights (undershoot), `-1` shrink them
/// (overshoot), `0` solved. This is `sgn(N - Q)`, i.e. `-sgn(E)`.
pub fn direction(error: i128) -> i8 {
    match error.signum() {
        -1 => 1,
        1 => -1,
        _ => 0,
    }
}

/// A candidate solution; each coordinate is a positive integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct WeightVector(Vec<u64>);

impl WeightVector {
    pub fn new(weights: Vec<u64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidWeights("empty weight vector".into()));
        }
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::InvalidWeights(format!(
                "w{} must be at least 1",
                i + 1
            )));
        }
        Ok(Self(weights))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<u64> {
        self.0
    }

    pub(crate) fn from_raw(weights: Vec<u64>) -> Self {
        debug_assert!(!weights.is_empty() && weights.iter().all(|&w| w >= 1));
        Self(weights)
    }
}

impl TryFrom<Vec<u64>> for WeightVector {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<WeightVector> for Vec<u64> {
    fn from(w: WeightVector) -> Self {
        w.0
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str(")")
    }
}
