use std::sync::Arc;

use num_bigint::BigInt;

use super::geometry::PathGeometry;
use super::mu::{corner, corner_prime};
use super::word::{BiInfiniteWord, GroupLetter, Letter};
use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::tiling::{Domain, Tiling};

/// `T_w(p)` through `mu'` and the unbarred word; agrees with [`path_tiling`]
/// everywhere and serves as its cross-check above the path.
pub fn path_entry_prime(g: &PathGeometry, p: (i64, i64), k: usize) -> BigInt {
    let pr = g.project(p);
    if pr.gamma <= pr.chi {
        let ls: Vec<GroupLetter> = g
            .segment(pr.gamma, pr.chi)
            .into_iter()
            .map(|l| l.swapped().into())
            .collect();
        corner(&ls, k)
    } else {
        let ls: Vec<GroupLetter> = g
            .segment(pr.chi, pr.gamma)
            .into_iter()
            .rev()
            .map(|l: Letter| l.swapped().into())
            .collect();
        corner_prime(&ls, k)
    }
}

/// `T_w(p)`: the bottom-right entry of `mu(w_p)`.
pub fn path_entry(g: &PathGeometry, p: (i64, i64), k: usize) -> BigInt {
    corner(g.projection_word(p).letters(), k)
}

/// The tame SL_k-tiling `p -> e_k mu(w_p) e_k^tr` of the whole plane.
pub fn path_tiling(w: &BiInfiniteWord, k: usize) -> Result<Tiling> {
    if k == 0 {
        return Err(Error::Argument("order k must be positive".into()));
    }
    if !w.is_admissible() {
        return Err(Error::Admissibility(w.to_string()));
    }
    let g = Arc::new(PathGeometry::new(w));
    Ok(Tiling::new(
        k,
        Domain::FullPlane,
        format!("path_tiling({w}, {k})"),
        move |i, j| Ok(Scalar::from_integer(path_entry(&g, (i, j), k))),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::minors::adjacent_minor;
    use crate::algebra::scalar::int;
    use crate::fixtures;
    use crate::tiling::{check_tame, verify_slk};

    fn word(s: &str) -> BiInfiniteWord {
        s.parse().unwrap()
    }

    #[test]
    fn zigzag_gives_even_fibonacci() {
        let t = path_tiling(&word("(xy)*"), 2).unwrap();
        // walking down the column below the path point (0, 0)
        let col: Vec<Scalar> = (0..6).map(|d| t.entry(d, 0).unwrap()).collect();
        let want: Vec<Scalar> = [1, 2, 5, 13, 34, 89].map(int).to_vec();
        assert_eq!(col, want);
    }

    #[test]
    fn finite_example_k2() {
        let g = PathGeometry::new(&word("(yx)*|yyxxyxyyyx|(yx)*@4,0"));
        for ((i, j), v) in fixtures::path_example_k2() {
            assert_eq!(path_entry(&g, (i, j), 2), BigInt::from(v), "at ({i}, {j})");
        }
    }

    #[test]
    fn fig5_below_and_above() {
        let t = path_tiling(&word("(xxyy)*"), 4).unwrap();
        let (si, sj) = fixtures::FIG5_SHIFT;
        for ((r, c), v) in fixtures::fig5_below_printed() {
            assert_eq!(
                t.entry(r + si, c + sj).unwrap(),
                int(v),
                "printed ({r}, {c})"
            );
        }
        let w = t.window(fixtures::fig5_block().origin, 5, 5).unwrap();
        assert!(w.same_entries(&fixtures::fig5_block()));
    }

    #[test]
    fn fig5_above_path_block_occurs() {
        let t = path_tiling(&word("(xxyy)*"), 4).unwrap();
        let g = PathGeometry::new(&word("(xxyy)*"));
        let hit = (-12..4)
            .flat_map(|a| (-12..4).map(move |b| (a, b)))
            .find(|&(a, b)| {
                fixtures::FIG5_ABOVE.iter().enumerate().all(|(r, row)| {
                    row.iter().enumerate().all(|(c, v)| {
                        v.is_none_or(|v| t.entry(a + r as i64, b + c as i64).unwrap() == int(v))
                    })
                })
            });
        let (a, b) = hit.expect("1437 block above the path");
        assert!(!g.is_below((a, b)));
    }

    #[test]
    fn prime_evaluator_agrees() {
        for s in ["(xxyy)*", "(xy)*|yyxxyxyyyx|(xyy)*@1,2", "(xxy)*|x|(yyx)*"] {
            let g = PathGeometry::new(&word(s));
            for k in 1..5 {
                for i in -6..6 {
                    for j in -6..6 {
                        assert_eq!(path_entry(&g, (i, j), k), path_entry_prime(&g, (i, j), k));
                    }
                }
            }
        }
    }

    #[test]
    fn tilings_are_tame_and_positive() {
        for (s, k) in [("(xy)*", 2), ("(xxyy)*", 4), ("(xxy)*|yxy|(xyy)*@2,1", 3)] {
            let t = path_tiling(&word(s), k).unwrap();
            let w = t.window((-4, -4), 8, 8).unwrap();
            assert!(verify_slk(&w, k).unwrap().is_verified(), "{s}");
            assert!(check_tame(&w, k).unwrap().is_verified(), "{s}");
            assert!(w.entries().iter().flatten().all(|x| x > &int(0)));
        }
    }

    #[test]
    fn principal_minors_are_one() {
        let w = word("(xxy)*|yxy|(xyy)*@2,1");
        let g = PathGeometry::new(&w);
        let k = 4;
        let t = path_tiling(&w, k).unwrap();
        let win = t.window((-8, -8), 20, 20).unwrap();
        for n in -6..6 {
            let (i, j) = g.point(n);
            for r in 1..k {
                assert_eq!(adjacent_minor(&win, i, j, r).unwrap(), int(1));
            }
        }
    }

    #[test]
    fn short_word_gives_same_entry() {
        let g = PathGeometry::new(&word("(xxyy)*|xyyx|(xyx)*"));
        for i in -5..8 {
            for j in -5..8 {
                if g.is_below((i, j)) {
                    let u = g.short_projection_word((i, j));
                    assert_eq!(corner(u.letters(), 4), path_entry(&g, (i, j), 4));
                }
            }
        }
    }

    #[test]
    fn catalan_on_zigzag() {
        let t = path_tiling(&word("(xy)*"), 7).unwrap();
        // column 0 starting at the path point (-1, 0)
        let col: Vec<Scalar> = (-1..6).map(|i| t.entry(i, 0).unwrap()).collect();
        assert_eq!(col, [1, 1, 2, 5, 14, 42, 132].map(int).to_vec());
    }

    #[test]
    fn rejects_zero_order() {
        assert!(path_tiling(&word("(xy)*"), 0).is_err());
    }
}
