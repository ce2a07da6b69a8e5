use serde::Serialize;

/// Environment variable overriding [`Caps::max_faces`].
pub const FACE_CAP_ENV: &str = "NEIGHBORLY_CAP_FACES";

/// Resource limits for every enumeration or search in the crate.
///
/// Exceeding a cap is always reported as [`crate::Error::CapExceeded`], never
/// as a truncated answer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Caps {
    /// Minimal transversals (dominating sets, minimal primes) per enumeration.
    pub max_sets: usize,
    /// Faces per complex.
    pub max_faces: usize,
    /// Nodes visited by shelling and linear-quotient order searches.
    pub max_search_nodes: usize,
    /// Recursion depth for the free vertex property.
    pub max_recursion_depth: usize,
    /// Variables accepted by the Hochster engine.
    pub max_ambient_hochster: usize,
    /// Variables accepted by the all-multidegree Koszul oracle.
    pub max_ambient_koszul: usize,
    /// Variables accepted by the sequentially Cohen-Macaulay test.
    pub max_ambient_seqcm: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_sets: 1_000_000,
            max_faces: 5_000_000,
            max_search_nodes: 5_000_000,
            max_recursion_depth: 10_000,
            max_ambient_hochster: 16,
            max_ambient_koszul: 12,
            max_ambient_seqcm: 10,
        }
    }
}

impl Caps {
    /// Defaults, with the face cap taken from `NEIGHBORLY_CAP_FACES` when set.
    pub fn from_env() -> Self {
        let mut caps = Caps::default();
        if let Some(v) = std::env::var(FACE_CAP_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
        {
            caps.max_faces = v;
        }
        caps
    }

    /// Raise or lower every ambient-size cap at once.
    pub fn with_max_ambient(mut self, n: usize) -> Self {
        self.max_ambient_hochster = n;
        self.max_ambient_koszul = self.max_ambient_koszul.min(n);
        self.max_ambient_seqcm = self.max_ambient_seqcm.min(n);
        self
    }
}
