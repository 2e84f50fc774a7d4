//! Perfect matchings, factorizations and magic-square conversions.

mod check;
mod factor;
mod matchings;
mod square;

pub use check::{diagnose, diagnose_with, Diagnostics};
pub use factor::{factorizations, factorizations_with, factorize};
pub use matchings::{n_matchings, n_matchings_with, perfect_matchings, perfect_matchings_with};
pub use square::{
    labeling_to_semimagic, labeling_to_symmetric, semimagic_to_labeling, symmetric_to_labeling,
    SemiMagicHost, SquareMatrix,
};
