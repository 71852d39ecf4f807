//! Restricted online Ramsey games: a Builder/Painter engine on a fixed board
//! `K_n`, the Builder strategies for matchings and trees, extremal Painter
//! colorings and adversaries, and an exact solver for small boards.

pub mod builder;
pub mod coloring;
pub mod detection;
pub mod error;
pub mod game;
pub mod painter;
pub mod solver;
pub mod transcript;
pub mod verify;

pub use coloring::Coloring;
pub use error::{Error, Result};
pub use game::{
    edge_count, run_game, verify_certificate, Builder, BuilderMove, Color, Edge, EngineConfig,
    GameOutcome, GameState, Goal, Painter, Session, StepBuilder, Stepwise, TargetSpec, Variant,
    WinCertificate,
};
pub use transcript::Transcript;
