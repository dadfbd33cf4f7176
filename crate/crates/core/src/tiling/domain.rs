use std::fmt;
use std::sync::Arc;

use crate::path::PathGeometry;

/// Half-open integer interval with optional ends.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Interval {
    pub lo: Option<i64>,
    pub hi: Option<i64>,
}

impl Interval {
    pub const ALL: Interval = Interval { lo: None, hi: None };

    pub fn new(lo: Option<i64>, hi: Option<i64>) -> Self {
        Interval { lo, hi }
    }

    pub fn contains(&self, x: i64) -> bool {
        self.lo.is_none_or(|l| x >= l) && self.hi.is_none_or(|h| x < h)
    }

    fn shift(&self, d: i64) -> Interval {
        Interval {
            lo: self.lo.map(|l| l - d),
            hi: self.hi.map(|h| h - d),
        }
    }

    fn shrink(&self, m: usize) -> Interval {
        Interval {
            lo: self.lo,
            hi: self.hi.map(|h| h - m as i64 + 1),
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.lo, self.hi) {
            (None, None) => write!(f, "Z"),
            (Some(l), None) => write!(f, "[{l},inf)"),
            (None, Some(h)) => write!(f, "(-inf,{h})"),
            (Some(l), Some(h)) => write!(f, "[{l},{h})"),
        }
    }
}

/// The set of lattice points on which a tiling is defined.
#[derive(Clone, Debug)]
pub enum Domain {
    FullPlane,
    Rect {
        rows: Interval,
        cols: Interval,
    },
    /// Points weakly below the path.
    BelowPath(Arc<PathGeometry>),
    /// Points below the path at depth `< d` (distance at most `d`).
    Fringe(Arc<PathGeometry>, u32),
    /// `{ p : p + offset in base }`.
    Shifted(Box<Domain>, (i64, i64)),
    Transposed(Box<Domain>),
    /// Anchors whose `m x m` block lies in the base.
    Blocks(Box<Domain>, usize),
    Both(Box<Domain>, Box<Domain>),
}

impl Domain {
    pub fn quarter_plane() -> Self {
        Domain::Rect {
            rows: Interval::new(Some(0), None),
            cols: Interval::new(Some(0), None),
        }
    }

    pub fn rect(origin: (i64, i64), rows: usize, cols: usize) -> Self {
        Domain::Rect {
            rows: Interval::new(Some(origin.0), Some(origin.0 + rows as i64)),
            cols: Interval::new(Some(origin.1), Some(origin.1 + cols as i64)),
        }
    }

    pub fn contains(&self, i: i64, j: i64) -> bool {
        match self {
            Domain::FullPlane => true,
            Domain::Rect { rows, cols } => rows.contains(i) && cols.contains(j),
            Domain::BelowPath(g) => g.depth((i, j)) >= 0,
            Domain::Fringe(g, d) => (0..*d as i64).contains(&g.depth((i, j))),
            Domain::Shifted(b, (p, q)) => b.contains(i + p, j + q),
            Domain::Transposed(b) => b.contains(j, i),
            Domain::Blocks(b, m) => {
                let m = *m as i64;
                (0..m).all(|a| (0..m).all(|c| b.contains(i + a, j + c)))
            }
            Domain::Both(a, b) => a.contains(i, j) && b.contains(i, j),
        }
    }

    /// Domain of the translate `(i, j) -> a(i + p, j + q)`.
    pub fn shifted(&self, p: i64, q: i64) -> Domain {
        match self {
            Domain::FullPlane => Domain::FullPlane,
            Domain::Rect { rows, cols } => Domain::Rect {
                rows: rows.shift(p),
                cols: cols.shift(q),
            },
            Domain::BelowPath(g) => {
                let a = g.word().anchor();
                Domain::BelowPath(Arc::new(PathGeometry::new(
                    &g.word().with_anchor((a.0 - p, a.1 - q)),
                )))
            }
            Domain::Shifted(b, (p0, q0)) => Domain::Shifted(b.clone(), (p0 + p, q0 + q)),
            other => Domain::Shifted(Box::new(other.clone()), (p, q)),
        }
    }

    pub fn transposed(&self) -> Domain {
        match self {
            Domain::FullPlane => Domain::FullPlane,
            Domain::Rect { rows, cols } => Domain::Rect {
                rows: *cols,
                cols: *rows,
            },
            Domain::Transposed(b) => (**b).clone(),
            other => Domain::Transposed(Box::new(other.clone())),
        }
    }

    /// Anchors of `m x m` blocks inside this domain.
    pub fn blocks(&self, m: usize) -> Domain {
        match self {
            _ if m <= 1 => self.clone(),
            Domain::FullPlane => Domain::FullPlane,
            Domain::Rect { rows, cols } => Domain::Rect {
                rows: rows.shrink(m),
                cols: cols.shrink(m),
            },
            // below-path shapes are closed under moving down and right
            Domain::BelowPath(g) => Domain::BelowPath(g.clone()),
            other => Domain::Blocks(Box::new(other.clone()), m),
        }
    }

    pub fn both(a: Domain, b: Domain) -> Domain {
        match (a, b) {
            (Domain::FullPlane, d) | (d, Domain::FullPlane) => d,
            (a, b) => Domain::Both(Box::new(a), Box::new(b)),
        }
    }

    pub fn is_full_plane(&self) -> bool {
        matches!(self, Domain::FullPlane)
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::FullPlane => write!(f, "full-plane"),
            Domain::Rect { rows, cols } => write!(f, "rect(rows {rows}, cols {cols})"),
            Domain::BelowPath(g) => write!(f, "below-path({})", g.word()),
            Domain::Fringe(g, d) => write!(f, "fringe({}, {d})", g.word()),
            Domain::Shifted(b, (p, q)) => write!(f, "shift({b}, {p}, {q})"),
            Domain::Transposed(b) => write!(f, "transpose({b})"),
            Domain::Blocks(b, m) => write!(f, "blocks({b}, {m})"),
            Domain::Both(a, b) => write!(f, "both({a}, {b})"),
        }
    }
}
