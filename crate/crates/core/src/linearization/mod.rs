//! Linearization data of tame tilings and the extension routines that
//! complete partial tilings.

mod data;
mod extend;
mod suppress;

pub use data::{
    build_from_linearization, coefficients_from_relation, extract_linearization,
    relation_coefficients, translate_data, transpose_data, IndexedFamily, LinearizationData,
};
pub use extend::{extend_below_path, extend_from_fringe, PartialTiling, Shape};
pub use suppress::{suppress_line, suppress_periodic, Line};
