//! T-systems: arrays `T(alpha, j, k)`, `0 <= alpha <= r + 1`, with unit
//! boundary slices and
//!
//! `T(a,j,k+1) T(a,j,k-1) = T(a,j+1,k) T(a,j-1,k) + T(a+1,j,k) T(a-1,j,k)`,
//!
//! together with the determinant solution in terms of the `alpha = 1` slice
//! and the passage to and from SL_{r+1}-tilings.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{ExactMatrix, Scalar};
use crate::error::{Error, Result};
use crate::tiling::{Failure, VerifyReport, Window};

/// Finite part of a T-system. Only `1 <= alpha <= r` is stored; the two
/// boundary slices read as 1. Every stored site has
/// `(alpha + j + k) % 2 == parity`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TSystemState {
    pub r: usize,
    pub parity: u8,
    values: BTreeMap<(usize, i64, i64), Scalar>,
}

#[derive(Serialize, Deserialize)]
struct SiteJson {
    alpha: usize,
    j: i64,
    k: i64,
    #[serde(with = "crate::algebra::scalar::serde_scalar")]
    value: Scalar,
}

#[derive(Serialize, Deserialize)]
struct StateJson {
    r: usize,
    parity: u8,
    sites: Vec<SiteJson>,
}

impl Serialize for TSystemState {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let sites = self
            .values
            .iter()
            .map(|(&(alpha, j, k), v)| SiteJson {
                alpha,
                j,
                k,
                value: v.clone(),
            })
            .collect();
        StateJson {
            r: self.r,
            parity: self.parity,
            sites,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TSystemState {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = StateJson::deserialize(d)?;
        let mut state = TSystemState::new(raw.r, raw.parity).map_err(serde::de::Error::custom)?;
        for s in raw.sites {
            state
                .insert(s.alpha, s.j, s.k, s.value)
                .map_err(serde::de::Error::custom)?;
        }
        Ok(state)
    }
}

fn parity_of(alpha: usize, j: i64, k: i64) -> u8 {
    (alpha as i64 + j + k).rem_euclid(2) as u8
}

impl TSystemState {
    pub fn new(r: usize, parity: u8) -> Result<Self> {
        if r == 0 || parity > 1 {
            return Err(Error::Argument(format!(
                "need r >= 1 and parity 0 or 1, got r = {r}, parity = {parity}"
            )));
        }
        Ok(TSystemState {
            r,
            parity,
            values: BTreeMap::new(),
        })
    }

    /// Stores an interior value; boundary slices and the wrong parity class
    /// are refused.
    pub fn insert(&mut self, alpha: usize, j: i64, k: i64, v: Scalar) -> Result<()> {
        if alpha == 0 || alpha > self.r {
            return Err(Error::Argument(format!(
                "alpha = {alpha} is not in 1..={}",
                self.r
            )));
        }
        if parity_of(alpha, j, k) != self.parity {
            return Err(Error::Argument(format!(
                "site ({alpha}, {j}, {k}) is off the parity class {}",
                self.parity
            )));
        }
        self.values.insert((alpha, j, k), v);
        Ok(())
    }

    /// `T(alpha, j, k)`, with 1 on the boundary slices.
    pub fn get(&self, alpha: usize, j: i64, k: i64) -> Option<Scalar> {
        if alpha == 0 || alpha == self.r + 1 {
            return (parity_of(alpha, j, k) == self.parity).then(Scalar::one);
        }
        self.values.get(&(alpha, j, k)).cloned()
    }

    pub fn sites(&self) -> impl Iterator<Item = (&(usize, i64, i64), &Scalar)> {
        self.values.iter()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Smallest and largest `k` with a stored site.
    pub fn k_range(&self) -> Option<(i64, i64)> {
        let ks = self.values.keys().map(|&(_, _, k)| k);
        Some((ks.clone().min()?, ks.max()?))
    }

    /// The `alpha` slice as a map `(j, k) -> value`.
    pub fn slice(&self, alpha: usize) -> BTreeMap<(i64, i64), Scalar> {
        self.values
            .iter()
            .filter(|(key, _)| key.0 == alpha)
            .map(|(&(_, j, k), v)| ((j, k), v.clone()))
            .collect()
    }

    /// Right-hand side of the Hirota equation centred at `(alpha, j, k)` and
    /// the divisor `T(alpha, j, k - 1)`, when every term is known.
    fn hirota_terms(&self, alpha: usize, j: i64, k: i64) -> Option<(Scalar, Scalar)> {
        let rhs = self.get(alpha, j + 1, k)? * self.get(alpha, j - 1, k)?
            + self.get(alpha + 1, j, k)? * self.get(alpha - 1, j, k)?;
        Some((rhs, self.get(alpha, j, k - 1)?))
    }
}

/// Fills `steps` further `k`-levels above the two topmost levels of
/// `initial`, which must hold every `alpha` in `1..=r` on those levels. A
/// level only covers the `j` whose neighbours are known, so the filled
/// region narrows by one site per level on each side.
pub fn hirota_propagate(initial: &TSystemState, steps: usize) -> Result<TSystemState> {
    let mut state = initial.clone();
    let (_, top) = state
        .k_range()
        .ok_or_else(|| Error::IncompleteData("no initial sites".into()))?;
    for alpha in 1..=state.r {
        for k in [top - 1, top] {
            if !state.values.keys().any(|&(a, _, kk)| a == alpha && kk == k) {
                return Err(Error::IncompleteData(format!(
                    "no values for alpha = {alpha} on level k = {k}"
                )));
            }
        }
    }
    for k in top..top + steps as i64 {
        // every site on level k + 1 depends on levels k and k - 1 only
        let js: Vec<(usize, i64)> = state
            .values
            .keys()
            .filter(|&&(_, _, kk)| kk == k - 1)
            .map(|&(a, j, _)| (a, j))
            .collect();
        let mut fresh = vec![];
        for (alpha, j) in js {
            let Some((rhs, div)) = state.hirota_terms(alpha, j, k) else {
                continue;
            };
            if div.is_zero() {
                return Err(Error::Singularity(format!(
                    "T({alpha}, {j}, {}) = 0",
                    k - 1
                )));
            }
            fresh.push((alpha, j, rhs / div));
        }
        if fresh.is_empty() {
            return Err(Error::IncompleteData(format!(
                "level k = {} has no site with all neighbours",
                k + 1
            )));
        }
        for (alpha, j, v) in fresh {
            state.values.insert((alpha, j, k + 1), v);
        }
    }
    Ok(state)
}

/// One report per `alpha` in `1..=r`, anchored at `(j, k)`: the Hirota
/// equation at every site whose six neighbours are known.
pub fn check_hirota(state: &TSystemState) -> Vec<VerifyReport> {
    (1..=state.r)
        .map(|alpha| {
            let mut report = VerifyReport {
                criterion: format!("Hirota equation, alpha = {alpha}"),
                checked: 0,
                failures: vec![],
            };
            // centres are the sites of the opposite class on this slice
            let centres: std::collections::BTreeSet<(i64, i64)> = state
                .values
                .keys()
                .filter(|key| key.0 == alpha)
                .map(|&(_, j, k)| (j, k + 1))
                .collect();
            for (j, k) in centres {
                let (Some((rhs, below)), Some(above)) =
                    (state.hirota_terms(alpha, j, k), state.get(alpha, j, k + 1))
                else {
                    continue;
                };
                report.checked += 1;
                let (got, expected) = (above * below, rhs);
                if got != expected {
                    report.failures.push(Failure {
                        anchor: (j, k),
                        expected,
                        got,
                    });
                }
            }
            report
        })
        .collect()
}

/// `det (T(1, j - a + b, k + a + b - alpha - 1))_{1 <= a, b <= alpha}`.
pub fn t_from_determinant(
    t1: impl Fn(i64, i64) -> Option<Scalar>,
    alpha: usize,
    j: i64,
    k: i64,
) -> Result<Scalar> {
    if alpha == 0 {
        return Ok(Scalar::one());
    }
    let a = alpha as i64;
    let mut rows = Vec::with_capacity(alpha);
    for r in 1..=a {
        let mut row = Vec::with_capacity(alpha);
        for c in 1..=a {
            let (jj, kk) = (j - r + c, k + r + c - a - 1);
            row.push(
                t1(jj, kk)
                    .ok_or_else(|| Error::Range(format!("T(1, {jj}, {kk}) is not available")))?,
            );
        }
        rows.push(row);
    }
    ExactMatrix::from_rows(rows)?.det()
}

/// Compares every stored `alpha >= 2` value, and the boundary slice
/// `alpha = r + 1`, with the determinant of the `alpha = 1` slice wherever
/// that determinant is available.
pub fn check_determinant(state: &TSystemState) -> Vec<VerifyReport> {
    let t1 = |j, k| state.get(1, j, k);
    (2..=state.r + 1)
        .map(|alpha| {
            let mut report = VerifyReport {
                criterion: format!("determinant formula, alpha = {alpha}"),
                checked: 0,
                failures: vec![],
            };
            // candidate sites: the alpha = 1 sites shifted into this class
            let sites: std::collections::BTreeSet<(i64, i64)> = state
                .values
                .keys()
                .filter(|key| key.0 == 1)
                .map(|&(_, j, k)| (j, k + alpha as i64 - 1))
                .collect();
            for (j, k) in sites {
                let (Some(expected), Ok(got)) =
                    (state.get(alpha, j, k), t_from_determinant(t1, alpha, j, k))
                else {
                    continue;
                };
                report.checked += 1;
                if got != expected {
                    report.failures.push(Failure {
                        anchor: (j, k),
                        expected,
                        got,
                    });
                }
            }
            report
        })
        .collect()
}

/// `j = a s + b t + c`, `k = d s + e t + f` from tiling coordinates
/// `(s, t)`; `|ae - bd| = 2`, so the image is one parity class.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct IndexMap {
    pub j: (i64, i64, i64),
    pub k: (i64, i64, i64),
}

impl IndexMap {
    pub fn apply(&self, s: i64, t: i64) -> (i64, i64) {
        (
            self.j.0 * s + self.j.1 * t + self.j.2,
            self.k.0 * s + self.k.1 * t + self.k.2,
        )
    }

    /// Tiling point over `(j, k)`, if there is one.
    pub fn source(&self, j: i64, k: i64) -> Option<(i64, i64)> {
        let det = self.j.0 * self.k.1 - self.j.1 * self.k.0;
        let (x, y) = (j - self.j.2, k - self.k.2);
        let (sn, tn) = (self.k.1 * x - self.j.1 * y, self.j.0 * y - self.k.0 * x);
        (sn % det == 0 && tn % det == 0).then(|| (sn / det, tn / det))
    }

    fn candidates() -> Vec<IndexMap> {
        let unit = [-1i64, 0, 1];
        let mut offsets: Vec<(i64, i64)> = (-2..=2)
            .flat_map(|c| (-2..=2).map(move |f| (c, f)))
            .collect();
        offsets.sort_by_key(|&(c, f)| (c.abs() + f.abs(), c, f));
        let mut out = vec![];
        for (c, f) in offsets {
            for a in unit {
                for b in unit {
                    for d in unit {
                        for e in unit {
                            if (a * e - b * d).abs() == 2 {
                                out.push(IndexMap {
                                    j: (a, b, c),
                                    k: (d, e, f),
                                });
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

impl std::fmt::Display for IndexMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let lin = |(a, b, c): (i64, i64, i64)| format!("{a}s + {b}t + {c}");
        write!(f, "j = {}, k = {}", lin(self.j), lin(self.k))
    }
}

/// Sites of all slices that a window of the `alpha = 1` slice determines.
fn state_from_window(w: &Window, r: usize, map: IndexMap) -> Result<TSystemState> {
    let (j0, k0) = map.apply(w.origin.0, w.origin.1);
    let mut state = TSystemState::new(r, parity_of(1, j0, k0))?;
    let mut t1 = BTreeMap::new();
    for s in w.row_range() {
        for t in w.col_range() {
            let (j, k) = map.apply(s, t);
            t1.insert((j, k), w.get(s, t)?.clone());
            state.insert(1, j, k, w.get(s, t)?.clone())?;
        }
    }
    let lookup = |j, k| t1.get(&(j, k)).cloned();
    for alpha in 2..=r {
        for &(j, k) in t1.keys() {
            // (j, k) is the top-left entry of the minor
            let k = k + alpha as i64 - 1;
            if let Ok(v) = t_from_determinant(lookup, alpha, j, k) {
                state.insert(alpha, j, k, v)?;
            }
        }
    }
    Ok(state)
}

/// Reads a window of an SL_{r+1}-tiling as the `alpha = 1` slice of a
/// T-system, trying the affine maps with coefficients in `{-1, 0, 1}` and
/// offsets in `-2..=2` in order of offset size; returns the first under
/// which the Hirota equations hold at every checkable site.
pub fn tsystem_from_tiling(w: &Window, r: usize) -> Result<(TSystemState, IndexMap)> {
    if r == 0 {
        return Err(Error::Argument("r must be at least 1".into()));
    }
    if w.rows() < r + 1 || w.cols() < r + 1 {
        return Err(Error::Range(format!(
            "{}x{} window is too small for r = {r}",
            w.rows(),
            w.cols()
        )));
    }
    for map in IndexMap::candidates() {
        let state = state_from_window(w, r, map)?;
        let reports = check_hirota(&state);
        let checked: usize = reports.iter().map(|r| r.checked).sum();
        if checked > 0 && reports.iter().all(VerifyReport::is_verified) {
            return Ok((state, map));
        }
    }
    Err(Error::MappingNotFound(format!(
        "no affine map turns the {}x{} window into a T-system with r = {r}",
        w.rows(),
        w.cols()
    )))
}
