//! Trees, the universal (half-)balanced braided categories and their contractions.

pub mod axioms;
mod categories;
mod contraction;
mod constraint;
mod planar;
mod structure;
mod teich;
mod tree;

pub use constraint::{
    apply_step_to_tree, check_composable, decompose_to_constraints, eval_constraints, eval_step, eval_steps, to_right_comb,
    ConstraintWord, Elementary, Step,
};
pub use planar::{root_contract, PlanarTree};
pub use structure::{BraidStructure, Structure};
pub use tree::{tree_concat, tree_mirror, ParenTree};
pub use categories::{
    canonicalize, contract, contract_object, group_elements, hom, id_of, is_identity, letters, structure_morphism, umor_eq,
    umor_pow, CatKind, HomDescriptor, StructureKind, UMorphism, UObject,
};
pub use contraction::{contraction_checks, double_twist_braiding, hbal_lemma_checks, pab_families, theta_difference, twisted_braiding};
pub use teich::{
    teich_connecting, teich_cyc, teich_groupoid, teich_objects, teich_to_umorphism, umorphism_to_teich, TeichCycGroupoid, TeichGroupoid,
    TeichObject,
};
