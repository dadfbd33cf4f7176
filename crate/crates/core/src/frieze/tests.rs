use super::*;
use crate::algebra::scalar::int;
use crate::algebra::Scalar;
use crate::error::Error;
use crate::linearization::{suppress_periodic, Line};
use crate::tiling::{check_tame, verify_slk, Window};
use proptest::prelude::*;

fn v(xs: &[i64]) -> Vec<Scalar> {
    xs.iter().map(|&x| int(x)).collect()
}

fn catalan(n: u64) -> usize {
    (1..=n).fold(1u64, |c, i| c * (n + i) / i) as usize / (n as usize + 1)
}

#[test]
fn all_ones_window() {
    let t = frieze_tiling(&v(&[1])).unwrap();
    let w = t.window((0, 0), 4, 4).unwrap();
    let expected = Window::from_i64(
        (0, 0),
        &[
            &[0, -1, -1, 0],
            &[1, 0, -1, -1],
            &[1, 1, 0, -1],
            &[0, 1, 1, 0],
        ],
    );
    assert!(w.same_entries(&expected), "{w:?}");
}

#[test]
fn a_n_position() {
    let t = frieze_tiling(&v(&[4, 5, 6])).unwrap();
    for n in -3..6i64 {
        assert_eq!(
            t.entry(n + 1, n - 1).unwrap(),
            int([4, 5, 6][(n - 1).rem_euclid(3) as usize])
        );
    }
    // corner of a longer run is its continuant
    assert_eq!(t.entry(4, 0).unwrap(), continuant(&v(&[4, 5, 6])));
    assert_eq!(t.entry(0, 4).unwrap(), -continuant(&v(&[4, 5, 6])));
}

#[test]
fn triple_one_is_the_skew_periodic_two_diagonal_frieze() {
    let t = frieze_tiling(&v(&[1, 1, 1])).unwrap();
    let w = t.window((0, 0), 6, 6).unwrap();
    for i in 0..6i64 {
        for j in 0..6i64 {
            let expected = [0, 1, 1, 0, -1, -1][(i - j).rem_euclid(6) as usize];
            assert_eq!(w.get(i, j).unwrap(), &int(expected), "({i}, {j})");
        }
    }
    let s = check_frieze_symmetries(&t, 2, (-3, -3), 6, 6).unwrap();
    assert!(s.is_verified());
    assert_eq!(s.merged().checked, 5 * 36);
}

const FIG2: [&str; 12] = [
    "a b 1 0 -1 -a -b -1 0 1 a b",
    "1 c d 1 0 -1 -c -d -1 0 1 c",
    "0 1 e a 1 0 -1 -e -a -1 0 1",
    "-1 0 1 b c 1 0 -1 -b -c -1 0",
    "-e -1 0 1 d e 1 0 -1 -d -e -1",
    "-a -b -1 0 1 a b 1 0 -1 -a -b",
    "-1 -c -d -1 0 1 c d 1 0 -1 -c",
    "0 -1 -e -a -1 0 1 e a 1 0 -1",
    "1 0 -1 -b -c -1 0 1 b c 1 0",
    "e 1 0 -1 -d -e -1 0 1 d e 1",
    "a b 1 0 -1 -a -b -1 0 1 a b",
    "1 c d 1 0 -1 -c -d -1 0 1 c",
];

fn fig2_value(cell: &str, a: i64, b: i64) -> Scalar {
    let (neg, name) = match cell.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, cell),
    };
    let x = match name {
        "a" => int(a),
        "b" => int(b),
        "c" => Scalar::new((1 + b).into(), a.into()),
        "d" => Scalar::new((1 + a + b).into(), (a * b).into()),
        "e" => Scalar::new((1 + a).into(), b.into()),
        n => int(n.parse().unwrap()),
    };
    if neg {
        -x
    } else {
        x
    }
}

#[test]
fn width_two_generic_pattern() {
    for (a, b) in [(1, 1), (1, 2), (2, 1), (3, 2)] {
        let (c, d, e) = (
            fig2_value("c", a, b),
            fig2_value("d", a, b),
            fig2_value("e", a, b),
        );
        if (a, b) == (1, 1) {
            assert_eq!((c.clone(), d.clone(), e.clone()), (int(2), int(3), int(2)));
        }
        // the quiddity row is the diagonal b, d, a, c, e of the picture
        let t = frieze_tiling(&[int(b), d, int(a), c, e]).unwrap();
        for (r, line) in FIG2.iter().enumerate() {
            for (col, cell) in line.split_whitespace().enumerate() {
                let (r, col) = (r as i64, col as i64);
                assert_eq!(
                    t.entry(r + 2, col - 1).unwrap(),
                    fig2_value(cell, a, b),
                    "({r}, {col}) at a={a}, b={b}"
                );
            }
        }
    }
    let t = frieze_tiling(&v(&[1, 3, 1, 2, 2])).unwrap();
    assert!(check_frieze_symmetries(&t, 4, (0, 0), 7, 7)
        .unwrap()
        .row_skew
        .is_verified());
}

#[test]
fn corrupted_tiling_fails_with_witness() {
    let t = frieze_tiling(&v(&[3, 1, 2, 2, 1])).unwrap();
    let mut w = t.window((-6, -6), 20, 20).unwrap();
    w.set(0, 1, int(99)).unwrap();
    let bad = crate::tiling::Tiling::from_window(&w, 2);
    let s = check_frieze_symmetries(&bad, 4, (0, 0), 3, 3).unwrap();
    assert!(!s.is_verified());
    assert_eq!(s.diagonal_period.failures[0].anchor, (0, 1));
    assert_eq!(s.diagonal_period.failures[0].expected, int(99));
}

#[test]
fn zero_entry_is_rejected() {
    assert!(matches!(
        frieze_tiling(&v(&[1, 0, 2])),
        Err(Error::Precondition(_))
    ));
    let t = frieze_tiling_fn(|n| if n == 3 { int(0) } else { int(2) });
    assert!(t.entry(0, 0).is_ok());
    assert!(matches!(t.entry(5, 1), Err(Error::Precondition(_))));
}

#[test]
fn column_and_row_relations() {
    let word = [3, 1, 2, 2, 1];
    let t = frieze_tiling(&v(&word)).unwrap();
    let a = |n: i64| int(word[(n - 1).rem_euclid(5) as usize]);
    for r in -6..6i64 {
        for i in -6..6i64 {
            let col = t.entry(r, i).unwrap() - a(i + 1) * t.entry(r, i + 1).unwrap()
                + t.entry(r, i + 2).unwrap();
            assert_eq!(col, int(0));
            let row = t.entry(i, r).unwrap() - a(i + 1) * t.entry(i + 1, r).unwrap()
                + t.entry(i + 2, r).unwrap();
            assert_eq!(row, int(0));
        }
    }
}

#[test]
fn frieze_tilings_are_tame() {
    for word in [
        &[1][..],
        &[1, 1, 1],
        &[3, 1, 2, 2, 1],
        &[2, 5, -3],
        &[4, 1, 2, 3, 1, 2, 3],
    ] {
        let t = frieze_tiling(&v(word)).unwrap();
        let w = t.window((-5, -4), 10, 11).unwrap();
        assert!(verify_slk(&w, 2).unwrap().is_verified(), "{word:?}");
        assert!(check_tame(&w, 2).unwrap().is_verified(), "{word:?}");
    }
}

#[test]
fn non_quiddity_breaks_periodicity() {
    // the diagonal period holds by construction, the skew period does not
    let t = frieze_tiling(&v(&[2, 2])).unwrap();
    let s = check_frieze_symmetries(&t, 1, (0, 0), 3, 3).unwrap();
    assert!(s.diagonal_period.is_verified());
    assert!(!s.row_skew.is_verified() && !s.column_skew.is_verified());
}

#[test]
fn suppressing_a_one_reduces_the_quiddity() {
    // a_2 = 1, so row 2 and column 2 are sums of their neighbours
    let t = frieze_tiling(&v(&[3, 1, 2, 2, 1])).unwrap();
    let cols = suppress_periodic(&t, Line::Column, 2, 5, -5..5).unwrap();
    let both = suppress_periodic(&cols, Line::Row, 2, 5, -5..5).unwrap();
    let target = frieze_tiling(&v(&[2, 1, 2, 1])).unwrap();
    let w = both.window((-4, -4), 9, 9).unwrap();
    assert!(verify_slk(&w, 2).unwrap().is_verified());
    let hit = (-4..=4).any(|p| {
        target
            .window((-4 + p, -4 + p), 9, 9)
            .unwrap()
            .same_entries(&w)
    });
    assert!(hit);
}

#[test]
fn triangulation_quiddities() {
    let tri = Triangulation::new(3, []).unwrap();
    assert_eq!(
        quiddity_from_triangulation(&tri).unwrap().word(),
        &[1, 1, 1]
    );
    assert_eq!(
        quiddity_from_triangulation(&Triangulation::fan(5).unwrap())
            .unwrap()
            .word(),
        &[3, 1, 2, 2, 1]
    );
    let sq = Triangulation::new(4, [(1, 3)]).unwrap();
    assert_eq!(
        quiddity_from_triangulation(&sq).unwrap().word(),
        &[2, 1, 2, 1]
    );
}

#[test]
fn invalid_triangulations() {
    assert!(matches!(
        Triangulation::new(5, [(1, 3)]),
        Err(Error::Precondition(_))
    ));
    assert!(matches!(
        Triangulation::new(6, [(1, 4), (2, 5), (2, 6)]),
        Err(Error::Precondition(_))
    ));
    assert!(matches!(
        Triangulation::new(5, [(1, 2), (1, 3)]),
        Err(Error::Precondition(_))
    ));
    let bad = Triangulation {
        n_plus_1: 6,
        diagonals: [(1, 4), (2, 5), (3, 5)].into(),
    };
    assert!(quiddity_from_triangulation(&bad).is_err());
}

#[test]
fn reductions() {
    let r = reduce_quiddity(&[1, 1, 1]);
    assert_eq!(r.steps.len(), 1);
    assert_eq!(r.classification, Classification::MinusIdentity);

    let r = reduce_quiddity(&[3, 1, 2, 2, 1]);
    assert_eq!(
        r.steps,
        vec![vec![3, 1, 2, 2, 1], vec![2, 1, 2, 1], vec![1, 1, 1]]
    );
    assert_eq!(r.classification, Classification::MinusIdentity);
    assert_eq!(
        scalar_value(&y_product(&v(&[3, 1, 2, 2, 1]))),
        Some(int(-1))
    );

    let r = reduce_quiddity(&[2, 2]);
    assert_eq!(r.terminal(), &[2, 2]);
    assert_eq!(r.classification, Classification::Neither);
    assert_eq!(scalar_value(&y_product(&v(&[2, 2]))), None);

    assert_eq!(
        reduce_quiddity(&[1, 2, 1, 2, 1, 2, 1, 2]).classification,
        Classification::Identity
    );
    // the only factor wraps around the end of the word
    let r = reduce_quiddity(&[1, 2, 2, 1, 3]);
    assert_eq!(r.steps[1], vec![1, 2, 1, 2]);
}

#[test]
fn strict_quiddity() {
    assert!(Quiddity::new(vec![3, 1, 2, 2, 1]).is_ok());
    assert!(matches!(
        Quiddity::new(vec![2, 2]),
        Err(Error::Precondition(_))
    ));
    assert!(Quiddity::unchecked(vec![2, 0]).is_err());
    let q: Quiddity = "1, 3,1,2,2".parse().unwrap();
    assert_eq!(q.to_string(), "1,3,1,2,2");
    assert_eq!(q.canonical_rotation().word(), &[1, 2, 2, 1, 3]);
}

#[test]
fn catalan_counts() {
    let small: Vec<usize> = (2..=7)
        .map(|n| enumerate_friezes(n, None).unwrap().len())
        .collect();
    assert_eq!(small, vec![1, 2, 5, 14, 42, 132]);
    assert_eq!(enumerate_friezes(2, None).unwrap()[0].word(), &[1, 1, 1]);
    assert_eq!(friezes_by_search(8).len(), catalan(7));
}

#[test]
fn generators_agree_and_multiply_to_minus_id() {
    for n in 2..=7 {
        let a = friezes_from_triangulations(n);
        assert_eq!(a, friezes_by_search(n));
        for q in &a {
            assert_eq!(scalar_value(&y_product(&q.scalars())), Some(int(-1)), "{q}");
            assert_eq!(
                reduce_quiddity(q.word()).classification,
                Classification::MinusIdentity,
                "{q}"
            );
        }
    }
}

#[test]
fn enumeration_bound() {
    assert!(matches!(
        enumerate_friezes(11, None),
        Err(Error::Resource(_))
    ));
    assert!(matches!(
        enumerate_friezes(5, Some(4)),
        Err(Error::Resource(_))
    ));
    assert!(matches!(
        enumerate_friezes(1, None),
        Err(Error::Argument(_))
    ));
}

#[test]
fn rendering() {
    let q: Quiddity = "3,1,2,2,1".parse().unwrap();
    let text = render_frieze(&q);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(
        lines[0].split_whitespace().collect::<Vec<_>>(),
        ["1", "3", "2", "1"]
    );
    assert_eq!(
        lines[1].split_whitespace().collect::<Vec<_>>(),
        ["1", "1", "1", "1"]
    );
    assert!(lines[1].starts_with("  "));
    assert!(lines.iter().all(|l| l.trim_end().ends_with('1')));
}

proptest! {
    #[test]
    fn reduction_matches_y_product(w in prop::collection::vec(1u64..5, 1..10)) {
        let y = scalar_value(&y_product(&w.iter().map(|&a| int(a as i64)).collect::<Vec<_>>()));
        let expected = match y {
            Some(c) if c == int(-1) => Classification::MinusIdentity,
            Some(c) if c == int(1) => Classification::Identity,
            _ => Classification::Neither,
        };
        prop_assert_eq!(reduce_quiddity(&w).classification, expected);
    }

    #[test]
    fn random_frieze_windows_are_sl2(w in prop::collection::vec(prop_oneof![1i64..6, -5i64..0], 1..6), o in -8i64..8) {
        let t = frieze_tiling(&v(&w)).unwrap();
        let win = t.window((o, -o), 5, 6).unwrap();
        prop_assert!(verify_slk(&win, 2).unwrap().is_verified());
    }
}
