use crate::error::{Error, Result};

/// Size caps for the exhaustive procedures. All of them are exact, so the caps
/// only bound running time.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest order for which maximum matchings are enumerated.
    pub enumeration_order: usize,
    /// Largest number of maximum matchings enumerated for one graph.
    pub matching_count: usize,
    /// Largest order for the exact independence number.
    pub independence_order: usize,
    /// Largest order for the Hamiltonian cycle search.
    pub hamiltonian_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration_order: 24,
            matching_count: 1 << 20,
            independence_order: 62,
            hamiltonian_order: 12,
        }
    }
}

impl Limits {
    pub(crate) fn check(what: &'static str, got: usize, limit: usize) -> Result<()> {
        if got > limit {
            Err(Error::Capacity { what, got, limit })
        } else {
            Ok(())
        }
    }
}
