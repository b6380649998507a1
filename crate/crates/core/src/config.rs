/// Size limits shared by every construction that can blow up combinatorially.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Caps {
    /// Largest semigroup order any generator or quotient may produce.
    pub elements: usize,
    /// Largest object count for exhaustive cone enumeration.
    pub cone_objects: usize,
    /// Longest E-chain / E-cycle considered.
    pub chain_length: usize,
    /// Number of states the chain-equivalence search may visit.
    pub oracle_budget: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            elements: 512,
            cone_objects: 6,
            chain_length: 12,
            oracle_budget: 100_000,
        }
    }
}
