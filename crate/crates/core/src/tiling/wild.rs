//! Non-tame tilings whose rank grows with the window.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::domain::Domain;
use super::tiling::Tiling;
use crate::algebra::scalar::{self, Scalar};

/// Default value for an unassigned free entry `x_st` (1-based block indices):
/// `1..=25` laid out row-major over a 5 x 5 block, repeated periodically, so
/// that any window meets pairwise distinct values.
pub fn default_x(s: i64, t: i64) -> Scalar {
    scalar::int(1 + 5 * (s - 1).rem_euclid(5) + (t - 1).rem_euclid(5))
}

fn sign(e: i64) -> Scalar {
    scalar::int(if e.rem_euclid(2) == 0 { 1 } else { -1 })
}

/// The SL2-tiling with free entries `x_st` at `(2s - 2, 2t - 1)`, `±1` on the
/// remaining even-row and odd-row/odd-column points, and `0` elsewhere.
pub fn wild_sl2(x: BTreeMap<(i64, i64), Scalar>) -> Tiling {
    let x = Arc::new(x);
    Tiling::new(2, Domain::FullPlane, "wild SL2", move |i: i64, j: i64| {
        let (s, t) = (i.div_euclid(2), j.div_euclid(2));
        Ok(match (i.rem_euclid(2), j.rem_euclid(2)) {
            (0, 0) | (1, 1) => sign(s + t),
            (0, _) => x
                .get(&(s + 1, t + 1))
                .cloned()
                .unwrap_or_else(|| default_x(s + 1, t + 1)),
            _ => scalar::zero(),
        })
    })
}

/// An SL3 analogue: the periodic permutation tiling `a_ij = [j - i = 0 mod 3]`
/// with free values at the points `j - i = 1 (mod 3)` on even rows.
pub fn wild_sl3() -> Tiling {
    Tiling::new(3, Domain::FullPlane, "wild SL3", |i: i64, j: i64| {
        Ok(match (j - i).rem_euclid(3) {
            0 => scalar::one(),
            1 if i.rem_euclid(2) == 0 => default_x(i.div_euclid(2) + 1, j + 1),
            _ => scalar::zero(),
        })
    })
}

/// SL4 analogue of [`wild_sl3`]: an even cycle is an odd permutation, so the
/// ones on `j - i = 0 (mod 4)` carry the sign `(-1)^((j - i) / 4)`.
pub fn wild_sl4() -> Tiling {
    Tiling::new(4, Domain::FullPlane, "wild SL4", |i: i64, j: i64| {
        Ok(match (j - i).rem_euclid(4) {
            0 => sign((j - i) / 4),
            1 if i.rem_euclid(2) == 0 => default_x(i.div_euclid(2) + 1, j + 1),
            _ => scalar::zero(),
        })
    })
}
