//! Derived arrays of adjacent minors, the dual `A* = d_{k-1} A`, and the
//! SL3 co-recursion that grows a tiling and its dual together.
//!
//! Entry `(i, j)` of a derived array is the minor whose block has `(i, j)` as
//! its top-left corner.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::One;

use crate::algebra::matrix::ExactMatrix;
use crate::algebra::minors::adjacent_minor;
use crate::algebra::scalar;
use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::path::{BiInfiniteWord, Letter, PathGeometry};
use crate::tiling::{verify_slk, Domain, Failure, Interval, Tiling, VerifyReport, Window};

fn too_small(d: &Domain, m: usize) -> bool {
    let short = |iv: &Interval| matches!((iv.lo, iv.hi), (Some(l), Some(h)) if h - l < m as i64);
    matches!(d, Domain::Rect { rows, cols } if short(rows) || short(cols))
}

/// The array of adjacent `m x m` minors; `m = 0` gives all ones.
pub fn derived(t: &Tiling, m: usize) -> Result<Tiling> {
    if too_small(t.domain(), m) {
        return Err(Error::Range(format!(
            "domain {} holds no {m}x{m} block",
            t.domain()
        )));
    }
    if m == 1 {
        return Ok(t.clone());
    }
    let src = t.clone();
    let prov = format!("derived({}, {m})", t.provenance());
    Ok(Tiling::new(
        t.k(),
        t.domain().blocks(m),
        prov,
        move |i, j| {
            if m == 0 {
                return Ok(Scalar::one());
            }
            let w = src.window((i, j), m, m)?;
            w.to_matrix().det()
        },
    ))
}

/// [`derived`] on a finite window; the result is `m - 1` smaller each way.
pub fn derived_window(w: &Window, m: usize) -> Result<Window> {
    if m > w.rows() || m > w.cols() {
        return Err(Error::Range(format!(
            "{}x{} window holds no {m}x{m} block",
            w.rows(),
            w.cols()
        )));
    }
    let out = Window::from_fn(w.origin, w.rows() + 1 - m, w.cols() + 1 - m, |i, j| {
        if m == 0 {
            Ok(Scalar::one())
        } else {
            adjacent_minor(w, i, j, m)
        }
    })?;
    Ok(match w.k {
        Some(k) => out.with_k(k),
        None => out,
    })
}

/// `A* = d_{k-1} A` for the declared order `k`.
pub fn dual(t: &Tiling) -> Result<Tiling> {
    if t.k() == 0 {
        return Err(Error::Argument("dual needs a positive order".into()));
    }
    derived(t, t.k() - 1)
}

pub fn dual_window(w: &Window, k: usize) -> Result<Window> {
    if k == 0 {
        return Err(Error::Argument("dual needs a positive order".into()));
    }
    Ok(derived_window(w, k - 1)?.with_k(k))
}

/// Checks `d_r(A*)(i, j) = d_s(A)(i + r - 1, j + r - 1)` for the anchors
/// `(i, j)` of the `rows x cols` rectangle at `origin`.
pub fn check_derivation_identity(
    t: &Tiling,
    r: usize,
    s: usize,
    origin: (i64, i64),
    rows: usize,
    cols: usize,
) -> Result<VerifyReport> {
    let k = t.k();
    if r + s != k {
        return Err(Error::Argument(format!("r + s = {} but k = {k}", r + s)));
    }
    let lhs = derived(&dual(t)?, r)?;
    let rhs = derived(t, s)?;
    let off = r as i64 - 1;
    let mut report = VerifyReport {
        criterion: format!("d_{r}(A*) = ({off}, {off}) . d_{s}(A)"),
        checked: 0,
        failures: vec![],
    };
    for a in 0..rows as i64 {
        for b in 0..cols as i64 {
            let (i, j) = (origin.0 + a, origin.1 + b);
            let got = lhs.entry(i, j)?;
            let expected = rhs.entry(i + off, j + off)?;
            report.checked += 1;
            if got != expected {
                report.failures.push(Failure {
                    anchor: (i, j),
                    expected,
                    got,
                });
            }
        }
    }
    Ok(report)
}

fn det(m: &ExactMatrix) -> Result<Scalar> {
    if m.rows() == 0 {
        Ok(Scalar::one())
    } else {
        m.det()
    }
}

/// Evaluates both sides of the condensation identity on a `(2k-1)`-square
/// window: with `B` its top-left `k`-block, `C` the `(k+1)`-square array of
/// adjacent `(k-1)`-minors and `D` the bottom-right `k`-block of `C`, the
/// top-left `h`-minor of `D` equals the bottom-right `(k-h)`-minor of `B`.
pub fn condense_sides(w: &Window, h: usize) -> Result<(Scalar, Scalar)> {
    let n = w.rows();
    if n != w.cols() || n.is_multiple_of(2) {
        return Err(Error::Dimension(format!(
            "condensation needs an odd square window, got {}x{}",
            n,
            w.cols()
        )));
    }
    let k = n.div_ceil(2);
    if h > k {
        return Err(Error::Argument(format!("h = {h} exceeds k = {k}")));
    }
    let slk = verify_slk(w, k)?;
    if let Some(f) = slk.failures.first() {
        return Err(Error::Precondition(format!(
            "adjacent {k}x{k} minor at {:?} is {}",
            f.anchor, f.got
        )));
    }
    let rank = w.to_matrix().rank();
    if rank != k {
        return Err(Error::Precondition(format!(
            "window has rank {rank}, expected {k}"
        )));
    }
    let a = w.to_matrix();
    let idx = |r: std::ops::Range<usize>| r.collect::<Vec<_>>();
    let b = a.submatrix(&idx(0..k), &idx(0..k));
    let c = derived_window(w, k - 1)?.to_matrix();
    let d = c.submatrix(&idx(1..k + 1), &idx(1..k + 1));
    let lhs = det(&d.submatrix(&idx(0..h), &idx(0..h)))?;
    let rhs = det(&b.submatrix(&idx(h..k), &idx(h..k)))?;
    Ok((lhs, rhs))
}

pub fn condense_check(w: &Window, h: usize) -> Result<bool> {
    let (l, r) = condense_sides(w, h)?;
    Ok(l == r)
}

/// A finite monotone lattice path from `start`, with `x` steps up and `y`
/// steps right, written like a path word: `xyxxy@4,0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Staircase {
    pub start: (i64, i64),
    pub steps: Vec<Letter>,
}

impl Staircase {
    /// The L-shaped staircase up the first column and along the first row
    /// of an `n x n` block at the origin.
    pub fn corner(n: usize) -> Self {
        let mut steps = vec![Letter::X; n - 1];
        steps.extend(vec![Letter::Y; n - 1]);
        Staircase {
            start: (n as i64 - 1, 0),
            steps,
        }
    }

    pub fn points(&self) -> Vec<(i64, i64)> {
        let mut p = self.start;
        let mut out = vec![p];
        for l in &self.steps {
            let (di, dj) = l.step();
            p = (p.0 + di, p.1 + dj);
            out.push(p);
        }
        out
    }

    pub fn end(&self) -> (i64, i64) {
        *self.points().last().expect("nonempty")
    }

    /// Points weakly below the staircase inside its bounding box.
    fn below(&self) -> Domain {
        let mut core = self.steps.clone();
        if core.is_empty() {
            core.push(Letter::X);
        }
        let w = BiInfiniteWord::new(
            vec![Letter::X, Letter::Y],
            core,
            vec![Letter::X, Letter::Y],
            self.start,
        )
        .expect("zigzag tails are admissible");
        Domain::BelowPath(Arc::new(PathGeometry::new(&w)))
    }
}

impl std::str::FromStr for Staircase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (steps, at) = s
            .split_once('@')
            .ok_or_else(|| Error::Parse(format!("missing @start in {s:?}")))?;
        let (a, b) = at
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("bad start {at:?}")))?;
        let num = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(e.to_string()))
        };
        let steps = steps
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(Letter::parse)
            .collect::<Result<_>>()?;
        Ok(Staircase {
            start: (num(a)?, num(b)?),
            steps,
        })
    }
}

/// Grows an SL3-tiling `A` and its dual together south-east of a staircase.
/// `A` is seeded on the staircase and the dual on its points other than the
/// bottom row and last column. Then
/// `a_ij = (a*_{i-1,j-1} + a_{i-1,j} a_{i,j-1}) / a_{i-1,j-1}` and
/// `a*_ij = (a_ij + a*_{i-1,j} a*_{i,j-1}) / a*_{i-1,j-1}`.
pub fn sl3_corecursion(
    stair: &Staircase,
    seed: impl Fn(i64, i64) -> Scalar,
    seed_dual: impl Fn(i64, i64) -> Scalar,
) -> Result<(Tiling, Tiling)> {
    let pts = stair.points();
    let (start, end) = (stair.start, stair.end());
    let on_path: std::collections::HashSet<(i64, i64)> = pts.iter().copied().collect();
    let below = stair.below();
    let span = |lo: i64, hi: i64| Interval::new(Some(lo), Some(hi + 1));
    let dom_a = Domain::both(
        Domain::Rect {
            rows: span(end.0, start.0),
            cols: span(start.1, end.1),
        },
        below.clone(),
    );
    let dom_d = Domain::both(
        Domain::Rect {
            rows: span(end.0, start.0 - 1),
            cols: span(start.1, end.1 - 1),
        },
        below,
    );

    let mut a: HashMap<(i64, i64), Scalar> = HashMap::new();
    let mut d: HashMap<(i64, i64), Scalar> = HashMap::new();
    let div = |num: Scalar, den: &Scalar, p: (i64, i64)| {
        scalar::checked_div(&num, den).map_err(|_| {
            Error::Precondition(format!(
                "singular seed: division by zero at ({}, {})",
                p.0, p.1
            ))
        })
    };
    for i in end.0..=start.0 {
        for j in start.1..=end.1 {
            let p = (i, j);
            if dom_a.contains(i, j) {
                let v = if on_path.contains(&p) {
                    seed(i, j)
                } else {
                    let num = &d[&(i - 1, j - 1)] + &a[&(i - 1, j)] * &a[&(i, j - 1)];
                    div(num, &a[&(i - 1, j - 1)], (i - 1, j - 1))?
                };
                a.insert(p, v);
            }
            if dom_d.contains(i, j) {
                let v = if on_path.contains(&p) {
                    seed_dual(i, j)
                } else {
                    let num = &a[&p] + &d[&(i - 1, j)] * &d[&(i, j - 1)];
                    div(num, &d[&(i - 1, j - 1)], (i - 1, j - 1))?
                };
                d.insert(p, v);
            }
        }
    }
    let lookup = |m: HashMap<(i64, i64), Scalar>| {
        move |i: i64, j: i64| m.get(&(i, j)).cloned().ok_or(Error::Domain(i, j))
    };
    Ok((
        Tiling::new(3, dom_a, "sl3 co-recursion", lookup(a)),
        Tiling::new(3, dom_d, "sl3 co-recursion dual", lookup(d)),
    ))
}

/// [`sl3_corecursion`] with every seed equal to 1.
pub fn sl3_corecursion_ones(stair: &Staircase) -> Result<(Tiling, Tiling)> {
    sl3_corecursion(stair, |_, _| Scalar::one(), |_, _| Scalar::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::int;
    use crate::fixtures;
    use crate::linearization::{build_from_linearization, IndexedFamily, LinearizationData};
    use crate::path::path_tiling;
    use crate::tiling::{check_tame, wild_sl3, wild_sl4};
    use proptest::prelude::*;

    fn word(s: &str) -> BiInfiniteWord {
        s.parse().unwrap()
    }

    fn same(a: &Tiling, b: &Tiling, origin: (i64, i64), n: usize) -> bool {
        a.window(origin, n, n)
            .unwrap()
            .same_entries(&b.window(origin, n, n).unwrap())
    }

    fn tame(k: usize, lambda: Vec<Vec<i64>>, gamma: Vec<Vec<i64>>) -> Tiling {
        let v = |r: Vec<Vec<i64>>| {
            r.into_iter()
                .map(|x| x.into_iter().map(int).collect())
                .collect()
        };
        let s = ExactMatrix::from_fn(k, k, |i, j| {
            crate::algebra::scalar::binomial((i + j) as u64, i as u64)
        });
        build_from_linearization(&LinearizationData {
            k,
            s: s.to_rows(),
            lambda: IndexedFamily::periodic(v(lambda)),
            gamma: IndexedFamily::periodic(v(gamma)),
            anchor: (0, 0),
        })
        .unwrap()
    }

    #[test]
    fn first_derivative_is_identity_and_kth_is_ones() {
        let t = path_tiling(&word("(xxy)*|yx|(xyy)*"), 3).unwrap();
        assert!(same(&derived(&t, 1).unwrap(), &t, (-4, -4), 8));
        let d3 = derived(&t, 3).unwrap().window((-4, -4), 6, 6).unwrap();
        assert!(d3.entries().iter().flatten().all(|x| x.is_one()));
        assert!(derived(&t, 0).unwrap().entry(100, -7).unwrap().is_one());
    }

    #[test]
    fn display19_dual_is_display20() {
        let d = dual_window(&fixtures::display19(), 3).unwrap();
        assert!(d.same_entries(&fixtures::display20()));
        let t = Tiling::from_window(&fixtures::display19(), 3);
        assert!(dual(&t)
            .unwrap()
            .window((0, 0), 6, 7)
            .unwrap()
            .same_entries(&fixtures::display20()));
        assert!(matches!(
            derived(&Tiling::from_window(&fixtures::display19(), 3), 8),
            Err(Error::Range(_))
        ));
    }

    #[test]
    fn sl2_dual_is_itself() {
        let t = Tiling::from_window(&fixtures::fig1(), 2);
        assert!(dual(&t)
            .unwrap()
            .window((0, 0), 8, 13)
            .unwrap()
            .same_entries(&fixtures::fig1()));
    }

    #[test]
    fn bidual_is_translate() {
        let cases = [
            path_tiling(&word("(xxyy)*"), 4).unwrap(),
            path_tiling(&word("(xy)*|yyx|(xxy)*"), 3).unwrap(),
            tame(3, vec![vec![2, 1], vec![1, 3]], vec![vec![1, 1]]),
            tame(4, vec![vec![1, 2, 1]], vec![vec![3, 1, 2], vec![1, 1, 1]]),
        ];
        for t in cases {
            let k = t.k() as i64;
            let dd = dual(&dual(&t).unwrap()).unwrap();
            assert!(same(&dd, &t.translate(k - 2, k - 2), (-3, -3), 6), "{t:?}");
        }
    }

    #[test]
    fn dual_of_tame_is_tame() {
        let cases = [
            (Tiling::from_window(&fixtures::fig1(), 2), (0, 0)),
            (path_tiling(&word("(xy)*"), 2).unwrap(), (-3, -3)),
            (
                tame(3, vec![vec![2, 1], vec![1, 3]], vec![vec![1, 1]]),
                (-3, -3),
            ),
            (path_tiling(&word("(xxyy)*"), 4).unwrap(), (-4, -4)),
        ];
        for (t, o) in cases {
            let k = t.k();
            let w = dual(&t).unwrap().window(o, 7, 7).unwrap();
            assert!(verify_slk(&w, k).unwrap().is_verified());
            assert!(check_tame(&w, k).unwrap().is_verified());
        }
    }

    #[test]
    fn derivation_identity() {
        let t = Tiling::from_window(&fixtures::display19(), 3);
        let r = check_derivation_identity(&t, 2, 1, (0, 0), 4, 5).unwrap();
        assert!(r.is_verified() && r.checked == 20);
        let p = path_tiling(&word("(xxyy)*"), 4).unwrap();
        for (r, s) in [(3, 1), (2, 2), (1, 3), (4, 0), (0, 4)] {
            assert!(
                check_derivation_identity(&p, r, s, (-2, -2), 4, 4)
                    .unwrap()
                    .is_verified(),
                "r = {r}"
            );
        }
        assert!(matches!(
            check_derivation_identity(&p, 2, 1, (0, 0), 1, 1),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn wild_sl3_bidual_still_translates() {
        let t = wild_sl3();
        assert!(check_derivation_identity(&t, 2, 1, (-3, -2), 6, 6)
            .unwrap()
            .is_verified());
    }

    #[test]
    fn sparse_wild_sl4_keeps_derivation_identity() {
        // its 7x7 windows are too sparse to notice the missing tameness
        let t = wild_sl4();
        for (r, s) in [(3, 1), (2, 2), (1, 3)] {
            assert!(check_derivation_identity(&t, r, s, (-4, -4), 8, 8)
                .unwrap()
                .is_verified());
        }
    }

    #[test]
    fn generic_wild_sl4_breaks_bidual() {
        // exploratory: tameness matters from k = 4 on
        let w = fixtures::wild_sl4_window();
        assert!(verify_slk(&w, 4).unwrap().is_verified());
        assert_eq!(w.to_matrix().rank(), 5);
        let t = Tiling::from_window(&w, 4);
        let bidual = check_derivation_identity(&t, 3, 1, (0, 0), 5, 5).unwrap();
        assert_eq!(bidual.failures.len(), 1);
        assert!(check_derivation_identity(&t, 2, 2, (0, 0), 6, 6)
            .unwrap()
            .is_verified());
    }

    #[test]
    fn condensation_on_display19() {
        let w = fixtures::display19().sub(0, 0, 5, 5).unwrap();
        for h in 0..=3 {
            assert!(condense_check(&w, h).unwrap(), "h = {h}");
        }
        let (l, r) = condense_sides(&w, 1).unwrap();
        assert_eq!(l, r);
        assert!(matches!(
            condense_check(&fixtures::fig1().sub(0, 0, 3, 4).unwrap(), 1),
            Err(Error::Dimension(_))
        ));
        let mut bad = w.clone();
        bad.set(2, 2, int(0)).unwrap();
        assert!(matches!(
            condense_check(&bad, 1),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn fig8_joint_computation() {
        let stair: Staircase = "xyxxyxyyyyy@4,0".parse().unwrap();
        let (a, d) = sl3_corecursion_ones(&stair).unwrap();
        let (fa, fd) = fixtures::fig8();
        for ((i, j), v) in fa {
            assert_eq!(a.entry(i, j).unwrap(), int(v), "A at ({i}, {j})");
        }
        for ((i, j), v) in fd {
            assert_eq!(d.entry(i, j).unwrap(), int(v), "dual at ({i}, {j})");
        }
        assert_eq!(a.entry(2, 2).unwrap(), int(2));
        // the dual really is d_2 A wherever the 2x2 block is defined
        let d2 = derived(&a, 2).unwrap();
        for i in 0..4 {
            for j in 0..7 {
                if d.contains(i, j) && (0..2).all(|x| (0..2).all(|y| a.contains(i + x, j + y))) {
                    assert_eq!(d.entry(i, j).unwrap(), d2.entry(i, j).unwrap());
                }
            }
        }
    }

    #[test]
    fn corner_seed_is_sl3_and_positive() {
        let (a, d) = sl3_corecursion_ones(&Staircase::corner(7)).unwrap();
        let w = a.window((0, 0), 7, 7).unwrap();
        assert!(verify_slk(&w, 3).unwrap().is_verified());
        assert!(w
            .entries()
            .iter()
            .flatten()
            .all(|x| *x > crate::algebra::scalar::zero()));
        assert!(d
            .window((0, 0), 6, 6)
            .unwrap()
            .same_entries(&derived_window(&w, 2).unwrap()));
    }

    #[test]
    fn zero_seed_is_reported() {
        let stair = Staircase::corner(4);
        let err = sl3_corecursion(
            &stair,
            |i, j| if (i, j) == (0, 0) { int(0) } else { int(1) },
            |_, _| int(1),
        );
        assert!(matches!(err, Err(Error::Precondition(m)) if m.contains("(0, 0)")));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn condensation_on_random_tame_windows(
            k in 2usize..=3,
            l in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 2), 1..4),
            g in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 2), 1..4),
            o in (-4i64..4, -4i64..4),
        ) {
            let trim = |v: Vec<Vec<i64>>| v.into_iter().map(|r| r[..k - 1].to_vec()).collect();
            let t = tame(k, trim(l), trim(g));
            let w = t.window(o, 2 * k - 1, 2 * k - 1).unwrap();
            for h in 0..=k {
                prop_assert!(condense_check(&w, h).unwrap());
            }
        }
    }
}
