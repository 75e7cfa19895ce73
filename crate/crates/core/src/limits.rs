//! Process-wide limits, read once from the environment.

use std::sync::OnceLock;

pub const DEFAULT_MAX_TOWER: u32 = 8;
pub const DEFAULT_ENUM_CAP: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Terms must stay below `w_{max_tower}(I+1)`.
    pub max_tower: u32,
    /// Upper bound on the candidate pool of the enumerator.
    pub enum_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_tower: DEFAULT_MAX_TOWER,
            enum_cap: DEFAULT_ENUM_CAP,
        }
    }
}

impl Limits {
    /// Reads `ORDKIT_MAX_TOWER` and `ORDKIT_ENUM_CAP`, falling back to the
    /// defaults on missing or malformed values.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(v) = env_parse("ORDKIT_MAX_TOWER") {
            limits.max_tower = v;
        }
        if let Some(v) = env_parse("ORDKIT_ENUM_CAP") {
            limits.enum_cap = v;
        }
        limits
    }
}

fn env_parse<T: std::str::FromStr>(key: &str) -> Option<T> {
    std::env::var(key).ok()?.trim().parse().ok()
}

static LIMITS: OnceLock<Limits> = OnceLock::new();

pub fn limits() -> Limits {
    *LIMITS.get_or_init(Limits::from_env)
}
