/// Enumeration and search caps. Exceeding any of them is reported as
/// [`Error::CapExceeded`](crate::Error::CapExceeded), never silently truncated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Total number of subspaces an enumeration may produce.
    pub max_subspaces: u128,
    /// Elements in a group closure or orbit.
    pub max_group: usize,
    /// Vectors enumerated by element searches (conjugators, eligible elements).
    pub max_search: u128,
}

pub const DEFAULT_MAX_SUBSPACES: u128 = 100_000;
pub const DEFAULT_MAX_GROUP: usize = 1_000_000;
pub const DEFAULT_MAX_SEARCH: u128 = 100_000;

/// Environment variable overriding [`Limits::max_subspaces`].
pub const MAX_SUBSPACES_ENV: &str = "SOLVLIE_MAX_SUBSPACES";

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_subspaces: DEFAULT_MAX_SUBSPACES,
            max_group: DEFAULT_MAX_GROUP,
            max_search: DEFAULT_MAX_SEARCH,
        }
    }
}

impl Limits {
    /// Defaults, with the subspace cap taken from `SOLVLIE_MAX_SUBSPACES`
    /// when it is set to a valid integer.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(cap) = std::env::var(MAX_SUBSPACES_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u128>().ok())
        {
            limits.max_subspaces = cap;
        }
        limits
    }
}
