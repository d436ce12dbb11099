//! Associators and the graded categories built from them.

mod associator;
mod functors;
mod graded;
mod groups;
mod pacd;

pub use associator::{associator_residuals, from_per_degree, per_degree, solve_associator, swap_ab, Associator};
pub use graded::{
    check_ibmc_contraction, check_total_contracts, gamma_rep, i_phi_between, i_phi_between_by_word, i_t_phi, k_phi_between, ibmc_data, tree_change, whiskered_totals,
    IbmcData,
};
pub use groups::{dih_graded_groupoid, dih_groupoid, Gamma0n, GradedGamma};
pub use pacd::{discrepancy, t_between, PacdStructure};
pub use functors::{j_phi, k_phi, pacd_contract, t0n_prounipotent, teich_to_graded, GradedMorphism, TeichGraded};
