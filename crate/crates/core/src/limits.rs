use crate::error::{Error, Result};

/// Bounds on exponential enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest edge count (or non-loop edge count, for orientation spaces)
    /// accepted by subset and orientation enumerations.
    pub max_edges: usize,
    /// Largest state space accepted by group and lattice enumerations.
    pub max_states: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_edges: 16,
            max_states: 10_000_000,
        }
    }
}

impl Limits {
    /// Default limits with `max_states` taken from the `TFPOLY_GUARD`
    /// environment variable when it holds a positive integer.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(v) = std::env::var("TFPOLY_GUARD")
            .ok()
            .and_then(|s| s.trim().parse::<u128>().ok())
            .filter(|&v| v > 0)
        {
            limits.max_states = v;
        }
        limits
    }

    pub(crate) fn check_edges(&self, what: &str, edges: usize) -> Result<()> {
        if edges > self.max_edges {
            return Err(Error::SizeGuard {
                what: what.to_string(),
                needed: edges as u128,
                limit: self.max_edges as u128,
            });
        }
        Ok(())
    }

    pub(crate) fn check_states(&self, what: &str, states: u128) -> Result<()> {
        if states > self.max_states {
            return Err(Error::SizeGuard {
                what: what.to_string(),
                needed: states,
                limit: self.max_states,
            });
        }
        Ok(())
    }
}

/// `base^exp` saturating at `u128::MAX`.
pub(crate) fn saturating_pow(base: u128, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
    }
    acc
}
