//! Truncated graded Lie algebras over the rationals.

mod algebra;
mod bch;
mod element;
mod grouplike;
mod lyndon;
mod registry;
mod solver;

pub use algebra::{describe_word, GradedPresentation, LieAlgebra, LieExpr, Sparse};
pub use bch::{bch, bch_terms, exp_ad, TensorSeries};
pub use element::{add_vec, linear_map_from_images, scale_vec, sub_vec, substitute, LieElement, LieMorphism, LinearMap, WordEvaluator};
pub use grouplike::GroupLike;
pub use lyndon::{is_lyndon, lyndon_words, standard_factorization, Word};
pub use solver::{solve_degreewise, Residual};
pub use registry::{
    algebra, element_from_json, element_to_json, free2, insertion, insertion_sizes, p_alg, pair_index, pairs, perm_map, presentation, project_map, project_tp,
    t_alg, t_gen, t_total, AlgKind,
};

use std::sync::Arc;

pub fn build_graded(name: &str, p: &GradedPresentation) -> crate::Result<Arc<LieAlgebra>> {
    Ok(Arc::new(LieAlgebra::build(name, p)?))
}
