//! Permutation-group engine.

mod chain;
mod classes;
mod group;
mod subgroups;

pub use classes::{class_fusion, ClassData};
pub use group::{ElementIndex, PermGroup, ELEMENT_LIMIT};
pub use subgroups::{
    centralizer, frattini_index, frattini_subgroup, normal_subgroups, normalizer, o_p_prime,
    sylow_subgroup, NormalSubgroup, Quotient,
};

use crate::error::Result;

/// Builds a group and certifies its order with a stabilizer chain.
pub fn build_group(degree: usize, generators: &[alloc::vec::Vec<u32>]) -> Result<PermGroup> {
    PermGroup::from_image_arrays(degree, generators)
}

pub fn conjugacy_classes(g: &PermGroup) -> Result<ClassData> {
    ClassData::new(g)
}
