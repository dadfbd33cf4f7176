//! Coxeter-Conway frieze patterns as tame SL_2-tilings.

pub mod continuant;
pub mod quiddity;
pub mod tiling;

pub use continuant::{continuant, continuant_ext, scalar_value, y_matrix, y_product};
pub use quiddity::{
    enumerate_friezes, friezes_by_search, friezes_from_triangulations, quiddity_from_triangulation,
    reduce_quiddity, render_frieze, triangulations, Classification, Quiddity, Reduction,
    Triangulation, DEFAULT_ENUMERATION_BOUND,
};
pub use tiling::{check_frieze_symmetries, frieze_tiling, frieze_tiling_fn, FriezeSymmetries};

#[cfg(test)]
mod tests;
