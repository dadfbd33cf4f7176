//! Independent oracle: counts families of non-crossing lattice paths inside
//! the k-fringe of a path.
//!
//! A fringe path runs from a horizontal projection to a vertical projection
//! with unit steps right and up, so it advances one diagonal per step. On
//! each diagonal the fringe has exactly `k` points, indexed by depth, and a
//! step along path letter `x` moves depth by `{0, +1}` (up, right) while `y`
//! moves it by `{-1, 0}`. Families are swept diagonal by diagonal with the
//! sorted depth tuple of live paths as state.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::geometry::PathGeometry;
use super::word::{BiInfiniteWord, Letter};
use crate::error::{Error, Result};

/// Default cap on the number of distinct sweep states per diagonal.
pub const DEFAULT_BUDGET: usize = 200_000;

/// Depths reachable from depth `d` across a path letter, within `[0, k)`.
fn moves(letter: Letter, d: usize, k: usize) -> impl Iterator<Item = usize> {
    let cand: [Option<usize>; 2] = match letter {
        Letter::X => [Some(d), Some(d + 1)],
        Letter::Y => [d.checked_sub(1), Some(d)],
    };
    cand.into_iter().flatten().filter(move |&e| e < k)
}

fn advance(state: &[usize], letter: Letter, k: usize, out: &mut Vec<Vec<usize>>) {
    fn go(
        state: &[usize],
        letter: Letter,
        k: usize,
        acc: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let Some((&d, rest)) = state.split_first() else {
            out.push(acc.clone());
            return;
        };
        for e in moves(letter, d, k) {
            if acc.last().is_none_or(|&l| l < e) {
                acc.push(e);
                go(rest, letter, k, acc, out);
                acc.pop();
            }
        }
    }
    go(state, letter, k, &mut Vec::with_capacity(state.len()), out);
}

/// Number of vertex-disjoint path families in the k-fringe joining the
/// horizontal projections of the rows `rows` to the vertical projections of
/// the columns `cols`. Equals the minor `M_IJ` of the path tiling.
pub fn count_noncrossing(
    w: &BiInfiniteWord,
    k: usize,
    rows: &[i64],
    cols: &[i64],
) -> Result<BigUint> {
    count_noncrossing_with_budget(w, k, rows, cols, DEFAULT_BUDGET)
}

pub fn count_noncrossing_with_budget(
    w: &BiInfiniteWord,
    k: usize,
    rows: &[i64],
    cols: &[i64],
    budget: usize,
) -> Result<BigUint> {
    if rows.len() != cols.len() {
        return Err(Error::Index(format!(
            "{} rows but {} columns",
            rows.len(),
            cols.len()
        )));
    }
    if rows.is_empty() {
        return Ok(BigUint::one());
    }
    let g = PathGeometry::new(w);
    for &i in rows {
        for &j in cols {
            if !g.is_below((i, j)) {
                return Err(Error::Domain(i, j));
            }
        }
    }
    let sources: BTreeSet<i64> = rows.iter().map(|&i| g.first_in_row(i)).collect();
    let sinks: BTreeSet<i64> = cols.iter().map(|&j| g.last_in_col(j)).collect();
    if sources.len() != rows.len() || sinks.len() != cols.len() {
        return Err(Error::Index("repeated row or column".into()));
    }
    let start = *sources.first().expect("nonempty");
    let end = *sinks.last().expect("nonempty");

    let mut layer: BTreeMap<Vec<usize>, BigUint> = BTreeMap::from([(vec![], BigUint::one())]);
    for n in start..=end {
        let mut next = BTreeMap::new();
        for (state, c) in std::mem::take(&mut layer) {
            let mut s = state;
            if sources.contains(&n) {
                if s.first() == Some(&0) {
                    continue;
                }
                s.insert(0, 0);
            }
            if sinks.contains(&n) {
                if s.first() != Some(&0) {
                    continue;
                }
                s.remove(0);
            }
            *next.entry(s).or_insert_with(BigUint::zero) += c;
        }
        if n == end {
            return Ok(next.remove(&Vec::new()).unwrap_or_default());
        }
        let letter = w.letter(n);
        let mut buf = Vec::new();
        for (state, c) in next {
            buf.clear();
            advance(&state, letter, k, &mut buf);
            for s in buf.drain(..) {
                *layer.entry(s).or_insert_with(BigUint::zero) += &c;
            }
        }
        if layer.len() > budget {
            return Err(Error::Resource(format!(
                "more than {budget} path states on one diagonal"
            )));
        }
    }
    unreachable!("loop returns on the last diagonal")
}
