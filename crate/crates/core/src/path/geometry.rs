//! Lattice geometry of the path of a bi-infinite word.
//!
//! `P(0)` is the anchor and each letter moves one step (`x` up, `y` right),
//! so `P(n)` lies on diagonal `j - i = h0 + n`. A point is below the path
//! when it lies weakly south-east of the path point on its diagonal; its
//! depth is the row offset from that point.

use super::word::{BiInfiniteWord, FreeGroupWord, Letter};

#[derive(Clone, Debug)]
pub struct PathGeometry {
    word: BiInfiniteWord,
    h0: i64,
    core_prefix: Vec<(i64, i64)>,
    right_prefix: Vec<(i64, i64)>,
    left_suffix: Vec<(i64, i64)>,
}

fn add(a: (i64, i64), b: (i64, i64)) -> (i64, i64) {
    (a.0 + b.0, a.1 + b.1)
}

fn scale(a: (i64, i64), t: i64) -> (i64, i64) {
    (a.0 * t, a.1 * t)
}

fn prefix(ls: &[Letter]) -> Vec<(i64, i64)> {
    let mut out = vec![(0, 0)];
    for l in ls {
        out.push(add(*out.last().unwrap(), l.step()));
    }
    out
}

/// Projections of a point onto the path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projection {
    pub point: (i64, i64),
    /// Path index of the horizontal projection: first path point in row i.
    pub gamma: i64,
    /// Path index of the vertical projection: last path point in column j.
    pub chi: i64,
    /// Row offset from the path point on the same diagonal; negative above.
    pub depth: i64,
}

impl Projection {
    pub fn below(&self) -> bool {
        self.depth >= 0
    }

    /// Distance to the path for points below it; path points have distance 1.
    pub fn distance(&self) -> Option<u64> {
        self.below().then_some(self.depth as u64 + 1)
    }
}

impl PathGeometry {
    pub fn new(word: &BiInfiniteWord) -> Self {
        let left_rev: Vec<Letter> = word.left_period().iter().rev().copied().collect();
        PathGeometry {
            h0: word.anchor().1 - word.anchor().0,
            core_prefix: prefix(word.core()),
            right_prefix: prefix(word.right_period()),
            left_suffix: prefix(&left_rev),
            word: word.clone(),
        }
    }

    pub fn word(&self) -> &BiInfiniteWord {
        &self.word
    }

    /// `P(n)`.
    pub fn point(&self, n: i64) -> (i64, i64) {
        let a = self.word.anchor();
        let c = self.word.core().len() as i64;
        if (0..=c).contains(&n) {
            return add(a, self.core_prefix[n as usize]);
        }
        if n > c {
            let r = self.word.right_period().len() as i64;
            let (q, m) = ((n - c) / r, (n - c) % r);
            let end = add(a, self.core_prefix[c as usize]);
            let per = self.right_prefix[r as usize];
            return add(add(end, scale(per, q)), self.right_prefix[m as usize]);
        }
        // n < 0: walk backwards through whole left periods
        let l = self.word.left_period().len() as i64;
        let back = -n;
        let (q, m) = (back / l, back % l);
        let per = self.left_suffix[l as usize];
        let d = add(scale(per, q), self.left_suffix[m as usize]);
        (a.0 - d.0, a.1 - d.1)
    }

    /// Path index of the point on diagonal `h`.
    pub fn index_on_diagonal(&self, h: i64) -> i64 {
        h - self.h0
    }

    pub fn depth(&self, p: (i64, i64)) -> i64 {
        let q = self.point(self.index_on_diagonal(p.1 - p.0));
        p.0 - q.0
    }

    pub fn is_below(&self, p: (i64, i64)) -> bool {
        self.depth(p) >= 0
    }

    /// Point at `depth` below the path point with index `n`.
    pub fn at_depth(&self, n: i64, depth: i64) -> (i64, i64) {
        let q = self.point(n);
        (q.0 + depth, q.1 + depth)
    }

    /// Smallest `n` with `row(P(n)) <= i`; rows are non-increasing in `n`.
    pub fn first_in_row(&self, i: i64) -> i64 {
        let mut hi = 0;
        let mut step = 1;
        while self.point(hi).0 > i {
            hi += step;
            step *= 2;
        }
        let mut lo = hi - 1;
        step = 1;
        while self.point(lo).0 <= i {
            lo -= step;
            step *= 2;
        }
        // invariant: row(P(lo)) > i >= row(P(hi))
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if self.point(mid).0 <= i {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        hi
    }

    /// Largest `n` with `col(P(n)) <= j`; columns are non-decreasing in `n`.
    pub fn last_in_col(&self, j: i64) -> i64 {
        let mut lo = 0;
        let mut step = 1;
        while self.point(lo).1 > j {
            lo -= step;
            step *= 2;
        }
        let mut hi = lo + 1;
        step = 1;
        while self.point(hi).1 <= j {
            hi += step;
            step *= 2;
        }
        // invariant: col(P(lo)) <= j < col(P(hi))
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if self.point(mid).1 <= j {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    pub fn project(&self, p: (i64, i64)) -> Projection {
        Projection {
            point: p,
            gamma: self.first_in_row(p.0),
            chi: self.last_in_col(p.1),
            depth: self.depth(p),
        }
    }

    /// Path letters with indices in `[from, to)`.
    pub fn segment(&self, from: i64, to: i64) -> Vec<Letter> {
        (from..to).map(|n| self.word.letter(n)).collect()
    }

    /// The projection word `w_p`. Horizontal path steps are read as `x` and
    /// vertical ones as `y`; above the path the segment is reversed and
    /// inverted.
    pub fn projection_word(&self, p: (i64, i64)) -> FreeGroupWord {
        let pr = self.project(p);
        if pr.gamma <= pr.chi {
            FreeGroupWord::from_letters(
                self.segment(pr.gamma, pr.chi)
                    .into_iter()
                    .map(Letter::swapped),
            )
        } else {
            FreeGroupWord::from_letters(
                self.segment(pr.chi, pr.gamma)
                    .into_iter()
                    .map(Letter::swapped),
            )
            .inverse()
        }
    }

    /// The short projection word `u_p`: `w_p` without its maximal `x`-prefix
    /// and `y`-suffix (below the path only; above, `u_p = w_p`).
    pub fn short_projection_word(&self, p: (i64, i64)) -> FreeGroupWord {
        use super::word::GroupLetter;
        let w = self.projection_word(p);
        if !self.is_below(p) {
            return w;
        }
        let ls = w.letters();
        let start = ls.iter().take_while(|&&l| l == GroupLetter::X).count();
        let rest = &ls[start..];
        let end = rest.len()
            - rest
                .iter()
                .rev()
                .take_while(|&&l| l == GroupLetter::Y)
                .count();
        FreeGroupWord(rest[..end].to_vec())
    }

    /// Path points with indices in `range`, in order.
    pub fn points(&self, range: std::ops::Range<i64>) -> Vec<(i64, i64)> {
        range.map(|n| self.point(n)).collect()
    }
}
