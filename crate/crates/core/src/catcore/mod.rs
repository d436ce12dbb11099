//! Small categories, group actions on them, quotient categories and the groupoids `C_{Gamma,G,S}`.

mod action;
mod category;
mod cgs;

pub use action::{factor_functor, CatAction, Factorization, Induced, Quotient};
pub use category::{check_category_laws, check_composable, check_functor, compose_chain, CatMorphism, FnFunctor, Functor, Groupoid, Mor, SmallCategory};
pub use cgs::{
    braid_lift, build_cgs, cyc_groupoid, cyclic_gens, dihedral_decompose, dihedral_gens, z_action_on_braids,
    BraidGroup, Cgs, Lift, PermGroup, Pullback, SymGroup,
};
