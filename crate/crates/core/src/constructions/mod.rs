//! Constructive matchings and matching transformations on grids.

pub mod brackets;
pub mod cacm;
pub mod switch;
pub mod theorem13;

pub use brackets::{
    connect_matchings, eliminate_brackets, find_brackets, is_column_continuous, replay, Bracket,
    BracketKind,
};
pub use cacm::{all_horizontal_matching, cacm, cacm_forcing_set, dcacm, ucacm};
pub use switch::{alternating_four_cycles, apply_two_switch, TwoSwitchStep};
pub use theorem13::{
    theorem13_bound, theorem13_dimensions, theorem13_matching, theorem13_pattern, HeightCase,
    Theorem13Instance,
};
