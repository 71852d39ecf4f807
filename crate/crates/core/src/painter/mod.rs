//! Painters: the adversaries from the lower-bound constructions plus
//! fixed, random and scripted baselines.

mod basic;
mod partition;
mod trees;

pub use basic::{explore_replies, FixedPainter, RandomPainter, ScriptedPainter};
pub use partition::{matching_partition_coloring, MatchingAdversary, PartitionColoring};
pub use trees::{blown_k4_coloring, BlownK4, Tree2Adversary, Tree3Adversary};
