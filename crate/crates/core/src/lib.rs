//! Parsimonious games: constant-sum homogeneous weighted majority games
//! with exactly as many minimal winning coalitions as players.
//!
//! A game is generated by its free type representation, the vector of
//! player counts per type below the single top player. From it this crate
//! builds the minimal homogeneous representation, the incidence matrix
//! over minimal winning coalitions, the twin game and the unique balanced
//! lottery, all in exact integer or rational arithmetic. The [`oracle`]
//! module re-derives every property from the raw `(q; w)` representation
//! by brute force.

pub mod error;
pub mod game;
pub mod incidence;
pub mod linalg;
pub mod lottery;
pub mod oracle;
pub mod twin;

pub use error::{Error, Result};
pub use game::{
    build_game, check_weight_identities, parse_min_homog_rep, parse_representation,
    validate_free_type_rep, FreeTypeRep, PGame,
};
pub use incidence::{
    build_incidence_matrix, coalition_of_player, determinant, expected_determinant,
    triangularization_coefficients, verify_block_structure, IncidenceMatrix, Triangularization,
};
pub use linalg::{format_rational, parse_rational, Rational};
pub use lottery::{
    balanced_lottery, expected_payoffs, simulate, solve_balanced_system, verify_balanced,
    BalancedLottery, SimulationSummary,
};
pub use oracle::{
    check_axioms, determinant_cofactor_oracle, enumerate_p_games, enumerate_p_games_bounded,
    full_verify, minimal_winning_coalitions_bruteforce, CoalitionSet, VerificationReport,
};
pub use twin::{
    is_self_twin, modified_transpose, self_twin_conditions, twin_game, twin_rep,
    SelfTwinConditions, TwinPair,
};
