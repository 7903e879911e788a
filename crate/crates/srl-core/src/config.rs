//! Build and checking limits.

/// Resource limits for ring construction and exhaustive checking.
///
/// Identities quantified over pairs (involution axioms, commutativity) are
/// checked exhaustively up to `exhaustive_pair_bound` elements; identities
/// quantified over triples (associativity, distributivity) up to
/// `exhaustive_triple_bound`. Above a bound the checker switches to seeded
/// stratified sampling and says so in its report.
#[derive(Clone, Debug)]
pub struct BuildConfig {
    /// Hard cap on ring order; construction fails above it.
    pub order_cap: u64,
    /// Orders up to this get memoized operation tables (N^2 entries each).
    pub table_threshold: u32,
    /// Exhaustive bound for pair-quantified identities.
    pub exhaustive_pair_bound: u32,
    /// Exhaustive bound for triple-quantified identities.
    pub exhaustive_triple_bound: u32,
    /// Sample count per identity when sampling.
    pub sample_count: u32,
    /// Seed for all sampled fallbacks.
    pub seed: u64,
    /// Carrier cap for the module-isomorphism oracle.
    pub module_oracle_cap: u32,
    /// Degree bound for the Armendariz condition (bounded approximation).
    pub armendariz_degree: u32,
    /// Node budget for the Armendariz backtracking search.
    pub armendariz_budget: u64,
}

impl Default for BuildConfig {
    fn default() -> Self {
        BuildConfig {
            order_cap: 1 << 20,
            table_threshold: 1024,
            exhaustive_pair_bound: 4096,
            exhaustive_triple_bound: 512,
            sample_count: 20_000,
            seed: 0xB1EA5ED,
            module_oracle_cap: 512,
            armendariz_degree: 4,
            armendariz_budget: 5_000_000,
        }
    }
}
