use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Truncation bounds shared by every series in a computation.
///
/// Exponent bounds are inclusive. `min_q2` may be negative so that shifts
/// `p_n -> p_n - N q2^{-n}` can be carried out before cancellation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TruncationProfile {
    pub max_p_weight: u32,
    pub max_q1: u32,
    pub max_q2: i32,
    pub min_q2: i32,
    pub beta_order: u32,
    pub x_low: i32,
    pub x_high: i32,
}

impl TruncationProfile {
    pub fn new(
        max_p_weight: u32,
        max_q1: u32,
        max_q2: i32,
        min_q2: i32,
        beta_order: u32,
        x_low: i32,
        x_high: i32,
    ) -> Result<Self> {
        let profile = TruncationProfile {
            max_p_weight,
            max_q1,
            max_q2,
            min_q2,
            beta_order,
            x_low,
            x_high,
        };
        profile.validate()?;
        Ok(profile)
    }

    /// Profile for closed computations: `q` lives on the `q1` slot and is
    /// tied to the p-weight, `q2` is unused, the x window is `weight + 2`.
    pub fn closed(weight: u32, beta_order: u32) -> Self {
        let w = weight as i32;
        TruncationProfile {
            max_p_weight: weight,
            max_q1: weight,
            max_q2: 0,
            min_q2: 0,
            beta_order,
            x_low: -(w + 2),
            x_high: w + 2,
        }
    }

    /// Profile for open computations: `q2` is tied to the p-weight and may
    /// go negative down to `-max(weight, q1_max)` internally.
    pub fn open(weight: u32, q1_max: u32, beta_order: u32) -> Self {
        let w = weight as i32;
        TruncationProfile {
            max_p_weight: weight,
            max_q1: q1_max,
            max_q2: w,
            min_q2: -(weight.max(q1_max) as i32),
            beta_order,
            x_low: -(w + 2),
            x_high: w + 2,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.min_q2 > 0 || self.max_q2 < 0 {
            return Err(Error::InvalidProfile(format!(
                "need min_q2 <= 0 <= max_q2, got [{}, {}]",
                self.min_q2, self.max_q2
            )));
        }
        if self.x_low > 0 || self.x_high < 0 {
            return Err(Error::InvalidProfile(format!(
                "need x_low <= 0 <= x_high, got [{}, {}]",
                self.x_low, self.x_high
            )));
        }
        Ok(())
    }

    pub fn admits(&self, weight: u32, q1: u32, q2: i32) -> bool {
        weight <= self.max_p_weight && q1 <= self.max_q1 && q2 <= self.max_q2 && q2 >= self.min_q2
    }

    pub fn admits_x(&self, n: i32) -> bool {
        n >= self.x_low && n <= self.x_high
    }

    /// True if every bound of `self` is at most the corresponding bound of
    /// `other`, i.e. `self` is a shrink of `other`.
    pub fn is_within(&self, other: &TruncationProfile) -> bool {
        self.max_p_weight <= other.max_p_weight
            && self.max_q1 <= other.max_q1
            && self.max_q2 <= other.max_q2
            && self.min_q2 >= other.min_q2
            && self.beta_order <= other.beta_order
            && self.x_low >= other.x_low
            && self.x_high <= other.x_high
    }

    /// Smallest profile containing both.
    pub fn join(&self, other: &TruncationProfile) -> TruncationProfile {
        TruncationProfile {
            max_p_weight: self.max_p_weight.max(other.max_p_weight),
            max_q1: self.max_q1.max(other.max_q1),
            max_q2: self.max_q2.max(other.max_q2),
            min_q2: self.min_q2.min(other.min_q2),
            beta_order: self.beta_order.max(other.beta_order),
            x_low: self.x_low.min(other.x_low),
            x_high: self.x_high.max(other.x_high),
        }
    }

    pub fn with_weight(mut self, weight: u32) -> Self {
        self.max_p_weight = weight;
        self
    }

    pub fn with_x_window(mut self, low: i32, high: i32) -> Self {
        self.x_low = low;
        self.x_high = high;
        self
    }

    pub fn with_q2(mut self, min_q2: i32, max_q2: i32) -> Self {
        self.min_q2 = min_q2;
        self.max_q2 = max_q2;
        self
    }

    pub fn with_q1(mut self, max_q1: u32) -> Self {
        self.max_q1 = max_q1;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_inverted_windows() {
        assert!(TruncationProfile::new(3, 0, 0, 1, 2, -5, 5).is_err());
        assert!(TruncationProfile::new(3, 0, 0, 0, 2, 1, 5).is_err());
        assert!(TruncationProfile::new(3, 0, 0, 0, 2, -5, 5).is_ok());
    }

    #[test]
    fn within_and_join() {
        let a = TruncationProfile::closed(3, 2);
        let b = TruncationProfile::closed(4, 2);
        assert!(a.is_within(&b));
        assert!(!b.is_within(&a));
        assert_eq!(a.join(&b), b);
    }
}
