//! Search budgets. Every exhaustive search counts the nodes it expands
//! and stops with an error once the cap is reached.

/// Default node cap for all searches.
pub const DEFAULT_SEARCH_BUDGET: u64 = 100_000_000;

/// Environment variable overriding the node cap.
pub const SEARCH_BUDGET_ENV: &str = "BSTS_SEARCH_BUDGET";

/// The active search budget: `BSTS_SEARCH_BUDGET` when set and parseable,
/// the default otherwise.
pub fn search_budget() -> u64 {
    std::env::var(SEARCH_BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_SEARCH_BUDGET)
}
