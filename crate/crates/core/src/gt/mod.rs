//! The Grothendieck-Teichmuller semigroup and its graded counterpart, their actions on the universal
//! categories and Teichmuller groupoids, and the comparison through an associator.

mod action;
mod element;
mod grt;

pub use action::{
    eval_between, gt_act_on_associator, i_endofunctor, i_endofunctor_graded, j_on_padih, j_on_padih_graded, teich_act, teich_act_graded,
    EvalF, GtStructure,
};
pub use element::{check_gt_relations, eval_word, gt_mul, gt_residuals, pro_f, solve_gt, to_pro, GtElement, GtReport};
pub use grt::{
    check_grt, f2_coords, grt_act_on_associator, grt_ibmc_checks, grt_ibmc_data, grt_inv, grt_mul, i_phi, left_square, scale_action, GrtElement,
    GrtFunctor, GrtIbmcData, GrtReport,
};
