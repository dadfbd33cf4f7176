//! Path tilings with Laurent monomial weights on turns.
//!
//! Each fringe point at depth `d` on diagonal `h` carries
//! `nu = t(h, d+1) / t(h, d)`, where `t(h, 0) = t(h, k) = 1`. Walking a path
//! from its horizontal projection with right/up steps, a right step followed
//! by an up step contributes `nu`, an up step followed by a right step
//! contributes `nu^-1`. The walk starts with a virtual right step and ends
//! with a virtual up step, which accounts for the endpoint factors and gives
//! the empty path the weight `nu`.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::geometry::PathGeometry;
use super::word::{BiInfiniteWord, Letter};
use crate::algebra::laurent::{LaurentPoly, Var};
use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::tiling::{Domain, Memo, Tiling};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum Dir {
    Right,
    Up,
}

/// `t(h, r)` as a polynomial, with the boundary convention applied.
pub fn t_var(h: i64, r: i64, k: usize) -> LaurentPoly {
    if r <= 0 || r >= k as i64 {
        LaurentPoly::one()
    } else {
        LaurentPoly::var(h, r as u32, 1)
    }
}

fn t_inv(h: i64, r: i64, k: usize) -> LaurentPoly {
    if r <= 0 || r >= k as i64 {
        LaurentPoly::one()
    } else {
        LaurentPoly::var(h, r as u32, -1)
    }
}

fn nu(h: i64, d: usize, k: usize, inverse: bool) -> LaurentPoly {
    let d = d as i64;
    if inverse {
        t_inv(h, d + 1, k).mul(&t_var(h, d, k))
    } else {
        t_var(h, d + 1, k).mul(&t_inv(h, d, k))
    }
}

fn turn(h: i64, d: usize, k: usize, from: Dir, to: Dir) -> Option<LaurentPoly> {
    match (from, to) {
        (Dir::Right, Dir::Up) => Some(nu(h, d, k, false)),
        (Dir::Up, Dir::Right) => Some(nu(h, d, k, true)),
        _ => None,
    }
}

/// Below-path tiling whose entries are weighted path sums.
#[derive(Clone)]
pub struct WeightedTiling {
    k: usize,
    geometry: Arc<PathGeometry>,
    memo: Arc<Memo<LaurentPoly>>,
}

impl std::fmt::Debug for WeightedTiling {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "WeightedTiling({}, k = {})",
            self.geometry.word(),
            self.k
        )
    }
}

pub fn weighted_path_tiling(w: &BiInfiniteWord, k: usize) -> Result<WeightedTiling> {
    if k == 0 {
        return Err(Error::Argument("order k must be positive".into()));
    }
    Ok(WeightedTiling {
        k,
        geometry: Arc::new(PathGeometry::new(w)),
        memo: Arc::new(Memo::default()),
    })
}

impl WeightedTiling {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn geometry(&self) -> &PathGeometry {
        &self.geometry
    }

    pub fn entry(&self, i: i64, j: i64) -> Result<LaurentPoly> {
        if !self.geometry.is_below((i, j)) {
            return Err(Error::Domain(i, j));
        }
        if let Some(v) = self.memo.get((i, j)) {
            return Ok(v);
        }
        let v = self.sum_paths(i, j);
        self.memo.insert((i, j), v.clone());
        Ok(v)
    }

    fn sum_paths(&self, i: i64, j: i64) -> LaurentPoly {
        let g = &self.geometry;
        let (start, end) = (g.first_in_row(i), g.last_in_col(j));
        let h0 = g.word().anchor().1 - g.word().anchor().0;
        let k = self.k;
        let mut layer: BTreeMap<(usize, Dir), LaurentPoly> =
            BTreeMap::from([((0, Dir::Right), LaurentPoly::one())]);
        for n in start..end {
            let h = h0 + n;
            let letter = g.word().letter(n);
            let mut next: BTreeMap<(usize, Dir), LaurentPoly> = BTreeMap::new();
            for ((d, from), wt) in layer {
                for to in [Dir::Right, Dir::Up] {
                    let e = match (letter, to) {
                        (Letter::X, Dir::Right) => d + 1,
                        (Letter::X, Dir::Up) | (Letter::Y, Dir::Right) => d,
                        (Letter::Y, Dir::Up) => match d.checked_sub(1) {
                            Some(e) => e,
                            None => continue,
                        },
                    };
                    if e >= k {
                        continue;
                    }
                    let w2 = match turn(h, d, k, from, to) {
                        Some(f) => wt.mul(&f),
                        None => wt.clone(),
                    };
                    let slot = next.entry((e, to)).or_insert_with(LaurentPoly::zero);
                    *slot = slot.add(&w2);
                }
            }
            layer = next;
        }
        let h_end = h0 + end;
        let mut total = LaurentPoly::zero();
        for ((d, from), wt) in layer {
            if d != 0 {
                continue;
            }
            let w2 = match turn(h_end, 0, k, from, Dir::Up) {
                Some(f) => wt.mul(&f),
                None => wt,
            };
            total = total.add(&w2);
        }
        total
    }

    /// Entries of the `rows x cols` block at `origin`, row-major.
    pub fn window(
        &self,
        origin: (i64, i64),
        rows: usize,
        cols: usize,
    ) -> Result<Vec<Vec<LaurentPoly>>> {
        (0..rows as i64)
            .map(|a| {
                (0..cols as i64)
                    .map(|b| self.entry(origin.0 + a, origin.1 + b))
                    .collect()
            })
            .collect()
    }

    /// The adjacent `m x m` minor at `(i, j)`, by cofactor expansion.
    pub fn adjacent_minor(&self, i: i64, j: i64, m: usize) -> Result<LaurentPoly> {
        let block = self.window((i, j), m, m)?;
        Ok(poly_det(&block))
    }

    /// Substitutes values for the variables, giving a below-path tiling over
    /// the rationals.
    pub fn specialize(
        &self,
        values: impl Fn(Var) -> Option<Scalar> + Send + Sync + 'static,
    ) -> Tiling {
        let me = self.clone();
        let values = Arc::new(values);
        Tiling::new(
            self.k,
            Domain::BelowPath(self.geometry.clone()),
            format!(
                "weighted_path_tiling({}, {}) specialized",
                self.geometry.word(),
                self.k
            ),
            move |i, j| {
                let v = values.clone();
                me.entry(i, j)?.eval(move |x| v(x))
            },
        )
    }
}

/// Determinant over Laurent polynomials by expansion along the first row.
pub fn poly_det(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = m.len();
    match n {
        0 => LaurentPoly::one(),
        1 => m[0][0].clone(),
        _ => {
            let mut acc = LaurentPoly::zero();
            for c in 0..n {
                if m[0][c].is_zero() {
                    continue;
                }
                let sub: Vec<Vec<LaurentPoly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(b, _)| b != c)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][c].mul(&poly_det(&sub));
                acc = if c % 2 == 0 {
                    acc.add(&term)
                } else {
                    acc.add(&term.negate())
                };
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{int, one};
    use crate::path::tiling::path_tiling;

    fn word(s: &str) -> BiInfiniteWord {
        s.parse().unwrap()
    }

    #[test]
    fn path_points_carry_first_variable() {
        let w = word("(xxy)*|yxy|(xyy)*@2,1");
        let t = weighted_path_tiling(&w, 3).unwrap();
        for n in -5..5 {
            let (i, j) = t.geometry().point(n);
            assert_eq!(t.entry(i, j).unwrap(), LaurentPoly::var(j - i, 1, 1));
        }
    }

    #[test]
    fn principal_minors_are_the_variables() {
        for (s, k) in [("(xy)*", 2), ("(xxyy)*", 3), ("(xxy)*|yxy|(xyy)*@2,1", 4)] {
            let w = word(s);
            let t = weighted_path_tiling(&w, k).unwrap();
            for n in -4..4 {
                let (i, j) = t.geometry().point(n);
                for r in 1..k {
                    assert_eq!(
                        t.adjacent_minor(i, j, r).unwrap(),
                        LaurentPoly::var(j - i, r as u32, 1),
                        "{s}, r={r}"
                    );
                }
            }
        }
    }

    #[test]
    fn weighted_tiling_is_slk_and_positive() {
        for (s, k) in [("(xy)*", 2), ("(xxyy)*", 3)] {
            let t = weighted_path_tiling(&word(s), k).unwrap();
            // k x k blocks hanging just below the path
            for n in -3..3 {
                let (i, j) = t.geometry().point(n);
                for (a, b) in [(0, 0), (1, 0), (0, -1)] {
                    let (i, j) = (i + a, j + b);
                    if t.geometry().is_below((i, j)) {
                        assert_eq!(
                            t.adjacent_minor(i, j, k).unwrap(),
                            LaurentPoly::one(),
                            "{s} at ({i}, {j})"
                        );
                        assert!(t.entry(i, j).unwrap().is_nonneg());
                    }
                }
            }
        }
    }

    #[test]
    fn unit_specialization_is_path_tiling() {
        let w = word("(xxyy)*|yxx|(xyy)*@1,1");
        let spec = weighted_path_tiling(&w, 3)
            .unwrap()
            .specialize(|_| Some(one()));
        let t = path_tiling(&w, 3).unwrap();
        for i in 0..6 {
            for j in 0..6 {
                if spec.contains(i, j) {
                    assert_eq!(spec.entry(i, j).unwrap(), t.entry(i, j).unwrap());
                }
            }
        }
        assert!(matches!(spec.entry(-3, 0), Err(Error::Domain(-3, 0))));
    }

    #[test]
    fn zigzag_one_step_below() {
        let t = weighted_path_tiling(&word("(xy)*"), 2).unwrap();
        // (1, 0) sits just below the path point (0, 0)
        let e = t.entry(1, 0).unwrap();
        assert!(e.is_nonneg() && e.len() >= 2);
        let at_two = e.eval(|_| Some(int(2))).unwrap();
        assert!(at_two > int(0));
    }
}
