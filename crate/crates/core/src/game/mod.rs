//! The two-node seeded Gibonacci game.

pub mod engine;
pub mod theory;
pub mod value;

pub use engine::{
    divergence_certificate, fire, play, seeded_fire, Firing, GameConfig, GameState, GameTrace, Node, Outcome,
    Strategy,
};
pub use theory::{
    classify, decision_form, pattern_state, predicted_moves, terminal_numbers, terminal_numbers_twin,
    threshold, twin_identity, Classification, GHat, Regime,
};
pub use value::{GameValue, LinearForm};
