//! The Builder strategies and the two subroutines they are built from.

mod comp_extend;
mod forest;
mod matching;
mod tree;
mod tree2;
mod tree3;
mod tree_extend;

pub use comp_extend::{comp_extend, CompExtension, CompTriple};
pub use forest::{shape_allowed, ForestComponent, GoodForest};
pub use matching::{grow_good_forest, MatchingBuilder};
pub use tree::ColoredTree;
pub use tree2::Tree2Builder;
pub use tree3::Tree3Builder;
pub use tree_extend::{
    allowed_counts_hold, allowed_values_hold, tree_extend, tree_extend_budget, ExtendExit,
    Extension,
};

use crate::error::{Error, Result};
use crate::game::Builder;

/// Strategy names accepted by [`builder_by_name`].
pub const BUILDER_NAMES: [&str; 3] = ["matching", "tree2", "tree3"];

pub fn builder_by_name(name: &str) -> Result<Box<dyn Builder + Send>> {
    match name {
        "matching" => Ok(Box::new(MatchingBuilder::new())),
        "tree2" => Ok(Box::new(Tree2Builder)),
        "tree3" => Ok(Box::new(Tree3Builder::new())),
        other => Err(Error::Malformed(format!(
            "unknown builder {other:?}; expected one of {}",
            BUILDER_NAMES.join(", ")
        ))),
    }
}
