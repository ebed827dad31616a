//! Inner products on mapped fields.

mod circle;
mod gram;

pub use circle::{circle_inner_product, default_nodes, required_nodes};
pub use gram::{
    alpha_candidates, build_gram, gram_at, inner, GramContext, CANDIDATE_ANGLES, CANDIDATE_RADII, CONDITION_LIMIT,
};
