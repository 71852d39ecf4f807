//! Exact game values on small boards and the completion-based win checks.

mod bits;
mod canon;
pub mod completion;
mod search;
mod state;

pub use bits::BitGraph;
pub use canon::canonical_key;
pub use completion::{
    enumerate_completions, has_completion_with_target, has_completion_with_target_enumerated,
    win_check,
};
pub use search::{log2_states, solve_value, SolverConfig, SolverResult};
pub use state::SolverState;
