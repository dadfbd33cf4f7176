//! Exact arithmetic for SL_k-tilings of the plane: tame tilings and their
//! linearization data, duals, path tilings, friezes, quarter-plane tilings
//! and T-systems.

pub mod algebra;
pub mod duality;
pub mod error;
pub mod fixtures;
pub mod frieze;
pub mod linearization;
pub mod path;
pub mod quarter_plane;
pub mod random;
pub mod tiling;
pub mod tsystem;

pub use algebra::{ExactMatrix, LaurentPoly, Scalar};
pub use error::{Error, Result};
pub use path::{BiInfiniteWord, PathGeometry};
pub use tiling::{Domain, Tiling, VerifyReport, Window};
