//! The cone of magic labelings: minimal Hilbert basis, extreme rays,
//! positivity and decomposition.

mod decompose;
mod hilbert;
mod rays;

pub use decompose::decompose;
pub use hilbert::{hilbert_basis, hilbert_basis_with, is_irreducible, HilbertBasis};
pub use rays::{
    extreme_rays, is_positive, is_positive_with, positive_part, positive_part_with,
    verify_lift_property, verify_lift_property_with, PositivePart, Positivity,
};
