use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The caller handed in something malformed or outside an operation's domain.
    #[error("invalid input: {0}")]
    Input(String),
    /// A configured brute-force cap or work budget would be exceeded.
    #[error("{what} exceeds the configured limit `{limit_name}` ({attempted} > {limit})")]
    Budget {
        what: &'static str,
        limit_name: &'static str,
        limit: u64,
        attempted: u64,
    },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn check_budget(
        what: &'static str,
        limit_name: &'static str,
        limit: u64,
        attempted: u64,
    ) -> Result<()> {
        if attempted > limit {
            Err(Error::Budget { what, limit_name, limit, attempted })
        } else {
            Ok(())
        }
    }
}

/// Caps for the exponential routines. Every exhaustive or product-sized
/// computation checks one of these and fails with [`Error::Budget`] instead of
/// running away.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Max vertex count for maximum-independent-set counting and enumeration.
    pub mis_vertices: usize,
    /// Max vertex count for sums over all independent sets (access proportions).
    pub all_sets_vertices: usize,
    /// Max order of a weighted graph scanned by 2^m subset enumeration.
    pub weighted_vertices: usize,
    /// Max pair count processed by a single union or join step of the
    /// feasible-tuple DP.
    pub dp_work: u64,
    /// Max number of child-tuple combinations tried at one prime node.
    pub prime_products: u64,
    /// Max number of tuples held by a single feasible-tuple set.
    pub dp_tuples: u64,
    /// Max number of generator multisets scanned by the generating-set solver.
    pub genset_candidates: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            mis_vertices: 40,
            all_sets_vertices: 25,
            weighted_vertices: 25,
            dp_work: 50_000_000,
            prime_products: 1 << 22,
            dp_tuples: 4_000_000,
            genset_candidates: 50_000_000,
        }
    }
}
