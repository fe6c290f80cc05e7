use crate::error::{Error, Result};

/// Default bound on morphism iteration depth; `3^13` symbols is about 1.6M.
pub const DEFAULT_MAX_DEPTH: u32 = 13;

/// Default bound on Thue-Morse doubling depth.
pub const DEFAULT_THUE_MORSE_MAX_DEPTH: u32 = 20;

/// Environment variable overriding [`DEFAULT_MAX_DEPTH`].
pub const MAX_DEPTH_ENV: &str = "SQFW_MAX_DEPTH";

/// No configuration may ask for more than `3^30` symbols.
pub const HARD_MAX_DEPTH: u32 = 30;

/// Resource limits shared by the generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_depth: u32,
    pub thue_morse_max_depth: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_depth: DEFAULT_MAX_DEPTH,
            thue_morse_max_depth: DEFAULT_THUE_MORSE_MAX_DEPTH,
        }
    }
}

impl Limits {
    pub fn with_max_depth(max_depth: u32) -> Self {
        Limits {
            max_depth,
            ..Limits::default()
        }
    }

    /// Defaults, with `max_depth` taken from `SQFW_MAX_DEPTH` when set.
    pub fn from_env() -> std::result::Result<Self, String> {
        match std::env::var(MAX_DEPTH_ENV) {
            Ok(raw) => {
                let depth: u32 = raw
                    .trim()
                    .parse()
                    .map_err(|_| format!("{MAX_DEPTH_ENV}={raw:?} is not a non-negative integer"))?;
                if depth > HARD_MAX_DEPTH {
                    return Err(format!("{MAX_DEPTH_ENV}={depth} exceeds {HARD_MAX_DEPTH}"));
                }
                Ok(Limits::with_max_depth(depth))
            }
            Err(_) => Ok(Limits::default()),
        }
    }

    /// Largest number of symbols a window query may produce: `3^max_depth`.
    pub fn range_cap(&self) -> u64 {
        3u64.saturating_pow(self.max_depth)
    }

    pub fn check_depth(&self, n: u32) -> Result<()> {
        let max = self.max_depth.min(HARD_MAX_DEPTH);
        if n > max {
            return Err(Error::DepthLimit { requested: n, max });
        }
        Ok(())
    }
}

/// `(3^n - 1) / 2`, the largest logical index of the depth-`n` window.
pub fn half_width(n: u32) -> i64 {
    (3i64.pow(n) - 1) / 2
}
