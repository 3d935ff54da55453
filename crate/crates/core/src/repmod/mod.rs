//! Finite-dimensional right modules: homs, decompositions, presentations,
//! Ext, and Auslander–Reiten theory.

pub mod ar;
pub mod decompose;
pub mod dims;
pub mod ext;
pub mod hom;
pub mod module;
pub mod presentation;
pub mod standard;

pub use ar::{all_indecomposables, ar_sequence, brute_force_indecomposables, Indecomposables};
pub use decompose::{decompose, is_indecomposable, is_isomorphic, Summand};
pub use dims::{homological_dims, Bounded, HomologicalDims};
pub use ext::{ext_dim, ExtSpace, ShortExactSeq, SyzygyData};
pub use hom::{hom_basis, hom_dim, hom_space, HomSpace};
pub use module::{map_parts, DirectSum, MapParts, Module, ModuleMap};
pub use presentation::{
    is_injective, is_projective, minimal_presentation, projective_cover, projective_dimension, tau, tau_inverse,
    transpose_module, Presentation,
};
pub use standard::{injective, projective, simple, standard_modules, ProjMap, StandardModules};

#[cfg(test)]
mod tests;
