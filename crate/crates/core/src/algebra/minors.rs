//! Minors of materialized windows, addressed by absolute lattice indices.

use num_traits::One;

use super::scalar::Scalar;
use crate::error::{Error, Result};
use crate::tiling::Window;

/// Determinant of the submatrix on rows `rows` and columns `cols`.
/// The empty minor is 1.
pub fn minor(w: &Window, rows: &[i64], cols: &[i64]) -> Result<Scalar> {
    if rows.len() != cols.len() {
        return Err(Error::Index(format!(
            "{} rows but {} columns",
            rows.len(),
            cols.len()
        )));
    }
    if rows.is_empty() {
        return Ok(Scalar::one());
    }
    w.select(rows, cols)?.det()
}

/// `M_ij^(m)`: the `m x m` minor with upper-left corner `(i, j)`.
pub fn adjacent_minor(w: &Window, i: i64, j: i64, m: usize) -> Result<Scalar> {
    if m == 0 {
        return Ok(Scalar::one());
    }
    if !w.contains_block(i, j, m, m) {
        return Err(Error::Range(format!(
            "{m}x{m} block at ({i}, {j}) exits the window"
        )));
    }
    let rows: Vec<i64> = (i..i + m as i64).collect();
    let cols: Vec<i64> = (j..j + m as i64).collect();
    w.select(&rows, &cols)?.det()
}

/// Checks the condensation identity
/// `M^(r+1)_ij M^(r-1)_{i+1,j+1} = M^(r)_ij M^(r)_{i+1,j+1} - M^(r)_{i,j+1} M^(r)_{i+1,j}`.
pub fn dodgson_check(w: &Window, i: i64, j: i64, r: usize) -> Result<bool> {
    if r == 0 {
        return Err(Error::Argument("condensation needs r >= 1".into()));
    }
    if !w.contains_block(i, j, r + 1, r + 1) {
        return Err(Error::Range(format!(
            "{0}x{0} block at ({i}, {j}) exits the window",
            r + 1
        )));
    }
    let lhs = adjacent_minor(w, i, j, r + 1)? * adjacent_minor(w, i + 1, j + 1, r - 1)?;
    let rhs = adjacent_minor(w, i, j, r)? * adjacent_minor(w, i + 1, j + 1, r)?
        - adjacent_minor(w, i, j + 1, r)? * adjacent_minor(w, i + 1, j, r)?;
    Ok(lhs == rhs)
}

pub fn rank(w: &Window) -> usize {
    w.to_matrix().rank()
}
