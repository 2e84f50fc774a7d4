/// Name of the environment variable overriding [`Limits::max_edges`].
pub const MAX_EDGES_ENV: &str = "MAGICLAT_MAX_EDGES";

/// Which Hilbert basis algorithm to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HilbertAlgorithm {
    /// Breadth-first completion over all constraints at once.
    #[default]
    Completion,
    /// One constraint at a time, starting from the unit vectors. Much
    /// smaller intermediate sets on hosts with many edges.
    Intersection,
}

/// Resource caps applied before running the exponential algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest edge count accepted by the Hilbert basis completion.
    pub max_edges: usize,
    /// Largest number of extreme rays accepted by the face enumeration.
    pub max_rays: usize,
    /// Largest `q * r` accepted by the labeling counter and enumerator.
    pub max_search_volume: u64,
    /// Largest number of labelings an enumeration may return.
    pub max_enumerated: usize,
    pub hilbert: HilbertAlgorithm,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_edges: 20,
            max_rays: 20,
            max_search_volume: 4096,
            max_enumerated: 1_000_000,
            hilbert: HilbertAlgorithm::Completion,
        }
    }
}

impl Limits {
    /// Defaults, with `max_edges` taken from `MAGICLAT_MAX_EDGES` when set.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(cap) = std::env::var(MAX_EDGES_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            limits.max_edges = cap;
        }
        limits
    }

    pub(crate) fn check(what: &'static str, actual: u64, cap: u64) -> crate::Result<()> {
        if actual > cap {
            Err(crate::Error::Resource { what, actual, cap })
        } else {
            Ok(())
        }
    }
}
