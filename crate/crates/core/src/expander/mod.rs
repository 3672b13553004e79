//! Constructive conversions into bistellar moves: shellings of cones and
//! joins, shelled balls to cones, starrings, stellar exchanges, and derived
//! subdivisions.

mod cone;
mod exchange;
mod shellings;
mod subdivision;

pub use cone::{ball_to_cone_transcript, star_move_transcript, star_move_transcript_apex, star_move_transcript_with};
pub use exchange::{exchange_to_bistellar, factorize_link, greedy_factor, LinkFactorization, Witness};
pub use shellings::{cone_shelling, join_boundary_shelling, join_of_boundaries_shelling, simplex_boundary_shelling};
pub use subdivision::{barycentric_starrings, barycentric_subdivision, subdivision_to_bistellar};
