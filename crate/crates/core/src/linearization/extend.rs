//! Completing partial tilings given below a path or on its fringe.
//!
//! Points above the path are the top-left corner of a `(k+1)`-block whose
//! other entries lie strictly south-east, so the vanishing `(k+1)`-minor
//! determines them. On a fringe, depth `k-1` points close a principal
//! `k`-block (minor 1) and deeper points close a `(k+1)`-block from the
//! bottom-right.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::matrix::ExactMatrix;
use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::path::{BiInfiniteWord, PathGeometry};
use crate::tiling::{Domain, Memo, Tiling};

/// Cap on the number of pending points while resolving one entry.
const STACK_LIMIT: usize = 1 << 20;

/// Diagonal indices of path points checked eagerly on either side of the
/// anchor.
const CHECK_RADIUS: i64 = 24;

type Values = Arc<dyn Fn(i64, i64) -> Result<Scalar> + Send + Sync>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shape {
    /// Every point weakly below the path.
    BelowPath(BiInfiniteWord),
    /// Points below the path at depth `< d`.
    Fringe(BiInfiniteWord, usize),
}

impl Shape {
    pub fn word(&self) -> &BiInfiniteWord {
        match self {
            Shape::BelowPath(w) | Shape::Fringe(w, _) => w,
        }
    }

    fn max_depth(&self) -> i64 {
        match self {
            Shape::BelowPath(_) => i64::MAX,
            Shape::Fringe(_, d) => *d as i64,
        }
    }
}

/// An assignment of scalars to every point of a shape.
#[derive(Clone)]
pub struct PartialTiling {
    shape: Shape,
    geometry: Arc<PathGeometry>,
    values: Values,
}

impl std::fmt::Debug for PartialTiling {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PartialTiling({:?})", self.shape)
    }
}

impl PartialTiling {
    pub fn new(
        shape: Shape,
        values: impl Fn(i64, i64) -> Result<Scalar> + Send + Sync + 'static,
    ) -> Self {
        let geometry = Arc::new(PathGeometry::new(shape.word()));
        PartialTiling {
            shape,
            geometry,
            values: Arc::new(values),
        }
    }

    /// Restriction of a tiling to the shape.
    pub fn from_tiling(shape: Shape, t: &Tiling) -> Self {
        let t = t.clone();
        Self::new(shape, move |i, j| t.entry(i, j))
    }

    /// Values given by `f(h, d)` for the point at depth `d` on diagonal
    /// `h = j - i`.
    pub fn from_diagonals(
        shape: Shape,
        f: impl Fn(i64, i64) -> Scalar + Send + Sync + 'static,
    ) -> Self {
        let g = PathGeometry::new(shape.word());
        Self::new(shape, move |i, j| Ok(f(j - i, g.depth((i, j)))))
    }

    /// Values from a finite table; points of the shape missing from it
    /// report a domain error when they are needed.
    pub fn from_map(shape: Shape, map: BTreeMap<(i64, i64), Scalar>) -> Self {
        Self::new(shape, move |i, j| {
            map.get(&(i, j)).cloned().ok_or(Error::Domain(i, j))
        })
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn geometry(&self) -> &PathGeometry {
        &self.geometry
    }

    pub fn contains(&self, i: i64, j: i64) -> bool {
        (0..self.shape.max_depth()).contains(&self.geometry.depth((i, j)))
    }

    pub fn value(&self, i: i64, j: i64) -> Result<Scalar> {
        if !self.contains(i, j) {
            return Err(Error::Domain(i, j));
        }
        (self.values)(i, j)
    }

    fn block(&self, i: i64, j: i64, m: usize) -> Result<ExactMatrix> {
        let mut rows = Vec::with_capacity(m);
        for a in 0..m as i64 {
            rows.push(
                (0..m as i64)
                    .map(|b| self.value(i + a, j + b))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        ExactMatrix::from_rows(rows)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Rule {
    Given,
    /// `(k+1)`-block with the point at its top-left corner.
    TopLeft,
    /// Principal `k`-block with the point at its bottom-right corner.
    Principal,
    /// `(k+1)`-block with the point at its bottom-right corner.
    BottomRight,
}

struct Extender {
    k: usize,
    part: PartialTiling,
    memo: Memo<Scalar>,
}

impl Extender {
    fn rule(&self, p: (i64, i64)) -> Rule {
        let d = self.part.geometry.depth(p);
        let k = self.k as i64;
        if d < 0 {
            Rule::TopLeft
        } else if d < self.part.shape.max_depth() {
            Rule::Given
        } else if d == k - 1 {
            Rule::Principal
        } else {
            Rule::BottomRight
        }
    }

    /// Top-left corner and size of the block that determines `p`.
    fn block_of(&self, p: (i64, i64), rule: Rule) -> ((i64, i64), usize) {
        let k = self.k as i64;
        match rule {
            Rule::Given => (p, 1),
            Rule::TopLeft => (p, self.k + 1),
            Rule::Principal => ((p.0 - k + 1, p.1 - k + 1), self.k),
            Rule::BottomRight => ((p.0 - k, p.1 - k), self.k + 1),
        }
    }

    fn get(&self, p: (i64, i64)) -> Result<Scalar> {
        if let Some(v) = self.memo.get(p) {
            return Ok(v);
        }
        let mut stack = vec![p];
        while let Some(&q) = stack.last() {
            if self.memo.get(q).is_some() {
                stack.pop();
                continue;
            }
            let rule = self.rule(q);
            if rule == Rule::Given {
                self.memo.insert(q, self.part.value(q.0, q.1)?);
                stack.pop();
                continue;
            }
            let ((i, j), m) = self.block_of(q, rule);
            let mut missing = false;
            let mut entries = Vec::with_capacity(m * m);
            for a in 0..m as i64 {
                for b in 0..m as i64 {
                    let r = (i + a, j + b);
                    if r == q {
                        entries.push(Scalar::zero());
                    } else if let Some(v) = self.memo.get(r) {
                        entries.push(v);
                    } else {
                        missing = true;
                        stack.push(r);
                    }
                }
            }
            if stack.len() > STACK_LIMIT {
                return Err(Error::Resource(format!(
                    "resolving ({}, {}) needs too many points",
                    p.0, p.1
                )));
            }
            if missing {
                continue;
            }
            let v = self.solve(q, rule, ExactMatrix::new(m, m, entries)?)?;
            self.memo.insert(q, v);
            stack.pop();
        }
        Ok(self.memo.get(p).expect("resolved"))
    }

    /// Value at `q` from its block with `q` set to zero; determinants are
    /// affine in `q` with the complementary minor as slope.
    fn solve(&self, q: (i64, i64), rule: Rule, block: ExactMatrix) -> Result<Scalar> {
        let m = block.rows();
        let d0 = det(&block)?;
        let (slope_idx, target): (Vec<usize>, Scalar) = match rule {
            Rule::TopLeft => ((1..m).collect(), Scalar::zero()),
            Rule::Principal => ((0..m - 1).collect(), Scalar::one()),
            Rule::BottomRight => ((0..m - 1).collect(), Scalar::zero()),
            Rule::Given => unreachable!("given points are read directly"),
        };
        let c = det(&block.submatrix(&slope_idx, &slope_idx))?;
        if c.is_zero() {
            return Err(match rule {
                Rule::Principal => Error::SingularFringe(q.1 - q.0, self.k as i64 - 1),
                _ => Error::Precondition(format!(
                    "adjacent {}-minor next to ({}, {}) vanishes",
                    m - 1,
                    q.0,
                    q.1
                )),
            });
        }
        Ok((target - d0) / c)
    }
}

fn det(m: &ExactMatrix) -> Result<Scalar> {
    if m.rows() == 0 {
        Ok(Scalar::one())
    } else {
        m.det()
    }
}

fn full_tiling(k: usize, part: PartialTiling, what: &str) -> Tiling {
    let prov = format!("{what} of {} with k = {k}", part.shape.word());
    let ext = Arc::new(Extender {
        k,
        part,
        memo: Memo::default(),
    });
    Tiling::new(k, Domain::FullPlane, prov, move |i, j| ext.get((i, j)))
}

/// Unique tame SL_k-tiling agreeing with a below-path assignment. Minors
/// are checked on blocks hanging off path points near the anchor.
pub fn extend_below_path(p: &PartialTiling, k: usize) -> Result<Tiling> {
    if k == 0 {
        return Err(Error::Argument("order k must be positive".into()));
    }
    if !matches!(p.shape, Shape::BelowPath(_)) {
        return Err(Error::Argument(
            "extend_below_path needs a below-path shape".into(),
        ));
    }
    if !p.shape.word().is_admissible() {
        return Err(Error::Admissibility(format!(
            "{} is not admissible",
            p.shape.word()
        )));
    }
    let g = &p.geometry;
    for n in -CHECK_RADIUS..=CHECK_RADIUS {
        let (i0, j0) = g.point(n);
        for a in 0..=2 {
            for b in 0..=2 {
                let (i, j) = (i0 + a, j0 + b);
                for (m, want) in [(k, Scalar::one()), (k + 1, Scalar::zero())] {
                    let got = p.block(i, j, m)?.det()?;
                    if got != want {
                        return Err(Error::Precondition(format!(
                            "adjacent {m}x{m} minor at ({i}, {j}) is {got}, expected {want}"
                        )));
                    }
                }
            }
        }
    }
    Ok(full_tiling(k, p.clone(), "extension"))
}

/// Unique tame SL_k-tiling with given values on the `(k-1)`-fringe of a
/// path. Principal minors of orders `1..k` are checked near the anchor;
/// further out a vanishing one surfaces when an entry needs it.
pub fn extend_from_fringe(p: &PartialTiling, k: usize) -> Result<Tiling> {
    if k == 0 {
        return Err(Error::Argument("order k must be positive".into()));
    }
    match &p.shape {
        Shape::Fringe(_, d) if *d == k - 1 => {}
        _ => {
            return Err(Error::Argument(format!(
                "extend_from_fringe needs a depth {} fringe",
                k - 1
            )))
        }
    }
    if !p.shape.word().is_admissible() {
        return Err(Error::Admissibility(format!(
            "{} is not admissible",
            p.shape.word()
        )));
    }
    let g = &p.geometry;
    for n in -CHECK_RADIUS..=CHECK_RADIUS {
        let (i, j) = g.point(n);
        for r in 1..k {
            if p.block(i, j, r)?.det()?.is_zero() {
                return Err(Error::SingularFringe(j - i, r as i64));
            }
        }
    }
    Ok(full_tiling(k, p.clone(), "fringe extension"))
}
