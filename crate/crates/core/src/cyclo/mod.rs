//! Cyclotomic integers, Galois elements and residue fields.

mod cyclotomic;
mod galois;
mod residue;

pub use cyclotomic::{common_ring, cyclotomic_polynomial, Cyclotomic, CyclotomicRing, DenseAccumulator, Ring};
pub use galois::{apply_galois, make_sigma, p_power_tau_elements, GaloisElement};
pub use residue::{make_residue_field, reduce_mod_p, FieldElement, ResidueField};
