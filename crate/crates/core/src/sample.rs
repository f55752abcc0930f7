//! Sample specifications and the value grids they induce.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{CuError, Result};
use crate::value::ExtValue;

/// Largest value cap and denominator cap accepted by [`SampleSpec::validate`].
pub const MAX_VALUE_CAP: u64 = 8;
pub const MAX_DENOMINATOR_CAP: u64 = 8;

/// Enumerations larger than this raise [`CuError::GridTooLarge`].
pub const DEFAULT_GRID_BOUND: u64 = 1_000_000;

/// Grid caps plus the sampling threshold and seed of a check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SampleSpec {
    pub value_cap: u64,
    pub denominator_cap: u64,
    pub max_tuples: u64,
    pub seed: u64,
}

impl Default for SampleSpec {
    fn default() -> Self {
        SampleSpec {
            value_cap: 4,
            denominator_cap: 4,
            max_tuples: 200_000,
            seed: 0,
        }
    }
}

impl SampleSpec {
    pub fn new(value_cap: u64, denominator_cap: u64) -> Self {
        SampleSpec { value_cap, denominator_cap, ..SampleSpec::default() }
    }

    pub fn with_max_tuples(self, max_tuples: u64) -> Self {
        SampleSpec { max_tuples, ..self }
    }

    pub fn with_seed(self, seed: u64) -> Self {
        SampleSpec { seed, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if self.value_cap == 0 || self.value_cap > MAX_VALUE_CAP {
            return Err(CuError::InvalidSample(format!(
                "value cap must lie in 1..={MAX_VALUE_CAP}, got {}",
                self.value_cap
            )));
        }
        if self.denominator_cap == 0 || self.denominator_cap > MAX_DENOMINATOR_CAP {
            return Err(CuError::InvalidSample(format!(
                "denominator cap must lie in 1..={MAX_DENOMINATOR_CAP}, got {}",
                self.denominator_cap
            )));
        }
        if self.max_tuples == 0 {
            return Err(CuError::InvalidSample("max tuples must be positive".into()));
        }
        Ok(())
    }

    /// The grid of universally quantified variables.
    pub fn grid(&self) -> ValueGrid {
        let mut rationals = Vec::new();
        for den in 1..=self.denominator_cap {
            for num in 0..=self.value_cap * den {
                rationals.push(ExtValue::ratio(num, den));
            }
        }
        ValueGrid::from_parts(self.value_cap, rationals)
    }

    /// A uniform grid of step `1/(factor · lcm(1..=d))` reaching one unit
    /// past the value cap, fine enough to hold differences, halves and
    /// `factor − 1` interior points between neighbouring grid values. Used for
    /// existential witnesses.
    pub fn witness_grid(&self, factor: u64) -> ValueGrid {
        let den = factor.max(1) * self.lcm_denominators();
        let cap = self.value_cap + 1;
        let rationals = (0..=cap * den).map(|n| ExtValue::ratio(n, den)).collect();
        ValueGrid::from_parts(cap, rationals)
    }

    /// `lcm(1, …, denominator_cap)`.
    pub fn lcm_denominators(&self) -> u64 {
        (1..=self.denominator_cap.max(1)).fold(1, |a, b| a.lcm(&b))
    }
}

/// The values an enumeration may use: integers for `ℕ̄`-valued instances and
/// rationals for the rest, both capped and closed with `∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueGrid {
    naturals: Vec<ExtValue>,
    rationals: Vec<ExtValue>,
    bound: u64,
}

impl ValueGrid {
    fn from_parts(cap: u64, mut rationals: Vec<ExtValue>) -> Self {
        rationals.push(ExtValue::Infinite);
        rationals.sort();
        rationals.dedup();
        let mut naturals: Vec<ExtValue> = (0..=cap).map(ExtValue::nat).collect();
        naturals.push(ExtValue::Infinite);
        ValueGrid { naturals, rationals, bound: DEFAULT_GRID_BOUND }
    }

    /// A grid with the given finite rationals (zero is always included).
    pub fn custom(cap: u64, mut rationals: Vec<ExtValue>) -> Self {
        rationals.push(ExtValue::zero());
        Self::from_parts(cap, rationals)
    }

    pub fn with_bound(mut self, bound: u64) -> Self {
        self.bound = bound;
        self
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// `0, 1, …, cap, ∞`.
    pub fn naturals(&self) -> &[ExtValue] {
        &self.naturals
    }

    /// Sorted, duplicate-free, starting at `0` and ending at `∞`.
    pub fn rationals(&self) -> &[ExtValue] {
        &self.rationals
    }

    pub fn positive_rationals(&self) -> impl Iterator<Item = &ExtValue> {
        self.rationals.iter().filter(|v| !v.is_zero())
    }
}
