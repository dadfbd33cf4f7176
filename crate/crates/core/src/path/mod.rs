pub mod counting;
pub mod geometry;
pub mod mu;
pub mod tiling;
pub mod weighted;
pub mod word;

pub use counting::count_noncrossing;
pub use geometry::{PathGeometry, Projection};
pub use tiling::{path_entry, path_tiling};
pub use weighted::{weighted_path_tiling, WeightedTiling};
pub use word::{BiInfiniteWord, FreeGroupWord, GroupLetter, Letter};

use crate::error::Result;

/// Path points `P(n)` for `n` in `range`.
pub fn path_points(w: &BiInfiniteWord, range: std::ops::Range<i64>) -> Result<Vec<(i64, i64)>> {
    Ok(PathGeometry::new(w).points(range))
}

pub fn projection_word(w: &BiInfiniteWord, p: (i64, i64)) -> FreeGroupWord {
    PathGeometry::new(w).projection_word(p)
}

pub fn short_projection_word(w: &BiInfiniteWord, p: (i64, i64)) -> FreeGroupWord {
    PathGeometry::new(w).short_projection_word(p)
}
