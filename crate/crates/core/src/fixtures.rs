//! Golden arrays transcribed from published figures, used by tests, the
//! acceptance suite and the CLI examples.
//!
//! Coordinates: unless noted, the top-left printed entry sits at `(0, 0)`.

use std::collections::BTreeMap;

use crate::algebra::scalar::{int, Scalar};
use crate::tiling::Window;

/// Partial array as (row, col) -> value.
pub type Sparse = BTreeMap<(i64, i64), i64>;

/// Positive integer SL2-tiling, 8 x 13.
pub fn fig1() -> Window {
    Window::from_i64(
        (0, 0),
        &[
            &[887, 567, 247, 174, 101, 28, 11, 5, 4, 3, 2, 1, 1],
            &[158, 101, 44, 31, 18, 5, 2, 1, 1, 1, 1, 1, 2],
            &[61, 39, 17, 12, 7, 2, 1, 1, 2, 3, 4, 5, 11],
            &[25, 16, 7, 5, 3, 1, 1, 2, 5, 8, 11, 14, 31],
            &[14, 9, 4, 3, 2, 1, 2, 5, 13, 21, 29, 37, 82],
            &[3, 2, 1, 1, 1, 1, 3, 8, 21, 34, 47, 60, 133],
            &[1, 1, 1, 2, 3, 4, 13, 35, 92, 149, 206, 263, 583],
            &[1, 2, 3, 7, 11, 15, 49, 132, 347, 562, 777, 992, 2199],
        ],
    )
    .with_k(2)
}

const HANKEL19: [i64; 14] = [8997, 1782, 353, 70, 14, 3, 1, 1, 2, 5, 14, 42, 131, 417];
const HANKEL20: [i64; 12] = [417, 131, 42, 14, 5, 2, 1, 1, 3, 14, 70, 353];

fn hankel(seq: &[i64], rows: usize, cols: usize) -> Window {
    let entries = (0..rows)
        .map(|i| (0..cols).map(|j| int(seq[i + j])).collect())
        .collect();
    Window::new((0, 0), entries).expect("rectangular")
}

/// SL3-tiling whose dual is [`display20`], 7 x 8.
pub fn display19() -> Window {
    hankel(&HANKEL19, 7, 8).with_k(3)
}

/// Dual of [`display19`], 6 x 7, aligned with its upper-left anchors.
pub fn display20() -> Window {
    hankel(&HANKEL20, 6, 7).with_k(3)
}

/// Quarter-plane SL3-tiling with binomial entries, 5 x 9.
pub fn fig7() -> Window {
    Window::from_i64(
        (0, 0),
        &[
            &[1, 1, 1, 1, 1, 1, 1, 1, 1],
            &[1, 2, 3, 4, 5, 6, 7, 8, 9],
            &[1, 3, 6, 10, 15, 21, 28, 36, 45],
            &[1, 4, 10, 19, 31, 46, 64, 85, 109],
            &[1, 5, 15, 31, 53, 81, 115, 155, 201],
        ],
    )
    .with_k(3)
}

/// Offset taking the printed positions of the SL4 figure to lattice points
/// of the path tiling of `(xxyy)*||(xxyy)*` anchored at the origin.
pub const FIG5_SHIFT: (i64, i64) = (-4, -3);

/// The below-path part of the SL4 figure in printed coordinates
/// (row, column) -> value.
pub fn fig5_below_printed() -> BTreeMap<(i64, i64), i64> {
    let rows: [(i64, i64, &[i64]); 7] = [
        (0, 5, &[1, 1, 1]),
        (1, 5, &[1, 2, 3]),
        (2, 3, &[1, 1, 1, 3, 6]),
        (3, 3, &[1, 2, 3, 10, 22]),
        (4, 1, &[1, 1, 1, 3, 6, 22, 53]),
        (5, 1, &[1, 2, 3, 10, 22, 84, 211]),
        (6, 1, &[1, 3, 6, 22, 53, 211, 553]),
    ];
    let mut out = BTreeMap::new();
    for (r, c0, vals) in rows {
        for (t, &v) in vals.iter().enumerate() {
            out.insert((r, c0 + t as i64), v);
        }
    }
    out
}

/// Full 5 x 5 block of the SL4 figure (printed rows 2-6, columns 3-7),
/// placed at lattice coordinates.
pub fn fig5_block() -> Window {
    let printed = fig5_below_printed();
    let entries = (2..7)
        .map(|r| (3..8).map(|c| int(printed[&(r, c)])).collect())
        .collect();
    Window::new((2 + FIG5_SHIFT.0, 3 + FIG5_SHIFT.1), entries)
        .expect("rectangular")
        .with_k(4)
}

/// The above-path completion of the SL4 figure as a 4 x 4 pattern with
/// holes, row-major, top-left first.
pub const FIG5_ABOVE: [[Option<i64>; 4]; 4] = [
    [Some(1437), Some(457), Some(30), Some(10)],
    [Some(457), Some(146), Some(10), Some(4)],
    [Some(30), Some(10), None, None],
    [Some(10), Some(4), None, None],
];

/// SL2 example for the finite word `yyxxyxyyyx` whose path starts at
/// `(4, 0)`; below-path values as (row, col) -> value.
pub fn path_example_k2() -> BTreeMap<(i64, i64), i64> {
    let rows: [(i64, i64, &[i64]); 5] = [
        (0, 6, &[1]),
        (1, 3, &[1, 1, 1, 1]),
        (2, 2, &[1, 1, 2, 3, 4]),
        (3, 2, &[1, 2, 5, 8, 11]),
        (4, 0, &[1, 1, 1, 3, 8, 13, 18]),
    ];
    let mut out = BTreeMap::new();
    for (r, c0, vals) in rows {
        for (t, &v) in vals.iter().enumerate() {
            out.insert((r, c0 + t as i64), v);
        }
    }
    out
}

/// Joint SL3 computation: the tiling and its dual as printed, each as
/// (row, col) -> value. The dual entry at (i, j) is the 2 x 2 minor of the
/// tiling anchored at (i, j).
pub fn fig8() -> (Sparse, Sparse) {
    let a_rows: [(i64, i64, &[i64]); 5] = [
        (0, 2, &[1, 1, 1, 1, 1, 1]),
        (1, 1, &[1, 1, 2, 3, 4]),
        (2, 1, &[1, 2, 5, 9]),
        (3, 0, &[1, 1, 3, 9]),
        (4, 0, &[1, 2, 7]),
    ];
    let d_rows: [(i64, i64, &[i64]); 4] = [
        (0, 2, &[1, 1, 1, 1, 1]),
        (1, 1, &[1, 1, 3, 6]),
        (2, 1, &[1, 3, 14]),
        (3, 0, &[1, 1, 6]),
    ];
    let collect = |rows: &[(i64, i64, &[i64])]| {
        let mut out = BTreeMap::new();
        for &(r, c0, vals) in rows {
            for (t, &v) in vals.iter().enumerate() {
                out.insert((r, c0 + t as i64), v);
            }
        }
        out
    };
    (collect(&a_rows), collect(&d_rows))
}

/// Generic width-2 frieze, skew-periodically extended, specialized at
/// a = b = 1 (so c = 2, d = 3, e = 2); 12 x 12.
pub fn fig2_specialized() -> Window {
    const ROWS: [&str; 12] = [
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
    let value = |tok: &str| -> Scalar {
        let (neg, sym) = tok.strip_prefix('-').map_or((false, tok), |s| (true, s));
        let v = match sym {
            "a" | "b" => 1,
            "c" | "e" => 2,
            "d" => 3,
            n => n.parse().expect("numeric token"),
        };
        int(if neg { -v } else { v })
    };
    let entries = ROWS
        .iter()
        .map(|r| r.split_whitespace().map(value).collect())
        .collect();
    Window::new((0, 0), entries).expect("rectangular").with_k(2)
}

/// Toric SL3 example with period 4: rows repeat every four.
pub fn toric_sl3() -> Window {
    let block: [[i64; 4]; 4] = [[1, 1, 1, 1], [1, 2, 3, 2], [1, 3, 6, 4], [1, 2, 4, 3]];
    let entries = (0..8)
        .map(|i| (0..8).map(|j| int(block[i % 4][j % 4])).collect())
        .collect();
    Window::new((0, 0), entries).expect("rectangular").with_k(3)
}

/// Dual of [`toric_sl3`] on its 7 x 7 anchor range; note the non-positive
/// entries.
pub fn toric_sl3_dual() -> Window {
    let block: [[i64; 4]; 4] = [[1, 1, -1, -1], [1, 3, 0, -2], [-1, 0, 2, 1], [-1, -2, 1, 2]];
    let entries = (0..7)
        .map(|i| (0..7).map(|j| int(block[i % 4][j % 4])).collect())
        .collect();
    Window::new((0, 0), entries).expect("rectangular").with_k(3)
}

/// A wild SL4 window (rank 5) found by filling row by row, with a free
/// entry where the governing 3x3 minor vanishes.
pub fn wild_sl4_window() -> Window {
    const ROWS: [&str; 9] = [
        "0 1 -1 2 2 2 -1 0 2",
        "1 2 1 2 1 1 -1 2 2",
        "-1 0 2 -1 1 2 0 1 0",
        "1 0 1 -1 -3 -41/11 4/11 37/11 -51/55",
        "1 -1 -1 -1 -3 -4 1 -1 -2",
        "1 -1 0 -2 -5 -71/11 8/11 52/11 -102/55",
        "1 0 -1 0 -2 -35/11 -10/11 78/11 67/55",
        "1 -1 1 -4 -10 -146/11 -15/11 282/11 8/11",
        "2 -1 0 -3 -9 -133/11 -5/11 193/11 -27/55",
    ];
    let entries = ROWS
        .iter()
        .map(|r| {
            r.split_whitespace()
                .map(|t| crate::algebra::scalar::parse(t).expect("rational literal"))
                .collect()
        })
        .collect();
    Window::new((0, 0), entries).expect("rectangular").with_k(4)
}
