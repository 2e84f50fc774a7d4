//! Counting magic labelings and fitting `H(r) = I(r) + (-1)^r J(r)`.

mod count;
mod quasi;

pub use count::{
    bipartite_component_count, count_magic, count_magic_with, enumerate_magic,
    enumerate_magic_with, expected_degree,
};
pub use quasi::{
    fit_quasipolynomial, fit_quasipolynomial_with, EhrhartFit, EhrhartFunction, QuasiPolynomial,
};
