//! Removing a line `L` of an SL_2-tiling with `L = L_prev + L_next`; the
//! neighbours become adjacent and every new 2x2 block still has minor 1.

use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::tiling::{Domain, Interval, Tiling};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Line {
    Row,
    Column,
}

impl std::str::FromStr for Line {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "row" => Ok(Line::Row),
            "column" | "col" => Ok(Line::Column),
            _ => Err(Error::Parse(format!("expected row or column, got {s:?}"))),
        }
    }
}

/// Entry of `t` at position `along` of line `line`.
fn at(t: &Tiling, which: Line, line: i64, along: i64) -> Result<Scalar> {
    match which {
        Line::Column => t.entry(along, line),
        Line::Row => t.entry(line, along),
    }
}

fn check_relation(t: &Tiling, which: Line, index: i64, verify: &Range<i64>) -> Result<()> {
    for s in verify.clone() {
        let mid = at(t, which, index, s)?;
        let sum = at(t, which, index - 1, s)? + at(t, which, index + 1, s)?;
        if mid != sum {
            let (i, j) = match which {
                Line::Column => (s, index),
                Line::Row => (index, s),
            };
            return Err(Error::Precondition(format!(
                "line {index} is not the sum of its neighbours at ({i}, {j}): {mid} vs {sum}"
            )));
        }
    }
    Ok(())
}

fn remap(
    t: &Tiling,
    which: Line,
    f: impl Fn(i64) -> i64 + Send + Sync + 'static,
    domain: Domain,
    prov: String,
) -> Tiling {
    let src = t.clone();
    Tiling::new(2, domain, prov, move |i, j| match which {
        Line::Column => src.entry(i, f(j)),
        Line::Row => src.entry(f(i), j),
    })
}

/// Suppresses line `index`, after checking `L_index = L_{index-1} +
/// L_{index+1}` at the positions `verify` along the line. Lines after
/// `index` move back by one.
pub fn suppress_line(t: &Tiling, which: Line, index: i64, verify: Range<i64>) -> Result<Tiling> {
    if t.k() != 2 {
        return Err(Error::Argument(format!(
            "suppression needs k = 2, got {}",
            t.k()
        )));
    }
    check_relation(t, which, index, &verify)?;
    let map = move |c: i64| if c < index { c } else { c + 1 };
    let domain = match t.domain() {
        Domain::FullPlane => Domain::FullPlane,
        Domain::Rect { rows, cols } => {
            let squeeze = |iv: &Interval| {
                let f = |x: i64| if x <= index { x } else { x - 1 };
                Interval::new(iv.lo.map(f), iv.hi.map(f))
            };
            match which {
                Line::Column => Domain::Rect {
                    rows: *rows,
                    cols: squeeze(cols),
                },
                Line::Row => Domain::Rect {
                    rows: squeeze(rows),
                    cols: *cols,
                },
            }
        }
        other => {
            return Err(Error::Argument(format!(
                "cannot suppress a line of a {other} domain"
            )))
        }
    };
    let prov = format!("{} with {which:?} {index} suppressed", t.provenance()).to_lowercase();
    Ok(remap(t, which, map, domain, prov))
}

/// Suppresses the lines `index + m * period` for all integers `m` of a
/// full-plane tiling. Lines just before `index` keep their numbers.
pub fn suppress_periodic(
    t: &Tiling,
    which: Line,
    index: i64,
    period: i64,
    verify: Range<i64>,
) -> Result<Tiling> {
    if t.k() != 2 {
        return Err(Error::Argument(format!(
            "suppression needs k = 2, got {}",
            t.k()
        )));
    }
    if period < 2 {
        return Err(Error::Argument(format!(
            "period must be at least 2, got {period}"
        )));
    }
    if !t.domain().is_full_plane() {
        return Err(Error::Argument(
            "periodic suppression needs a full-plane tiling".into(),
        ));
    }
    for m in -1..=1 {
        check_relation(t, which, index + m * period, &verify)?;
    }
    let map = move |c: i64| c + (c - index).div_euclid(period - 1) + 1;
    let prov = format!(
        "{} with {which:?}s {index} mod {period} suppressed",
        t.provenance()
    )
    .to_lowercase();
    Ok(remap(t, which, map, Domain::FullPlane, prov))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::int;
    use crate::linearization::{build_from_linearization, IndexedFamily, LinearizationData};
    use crate::tiling::{check_tame, verify_slk};

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| int(x)).collect()
    }

    /// Tame SL2-tiling whose column coefficients are `cols` periodically.
    fn tiling(cols: &[i64]) -> Tiling {
        let d = LinearizationData {
            k: 2,
            s: vec![v(&[1, 1]), v(&[1, 2])],
            lambda: IndexedFamily::periodic(cols.iter().map(|&a| v(&[a])).collect()),
            gamma: IndexedFamily::periodic(vec![v(&[3]), v(&[1]), v(&[2])]),
            anchor: (0, 0),
        };
        build_from_linearization(&d).unwrap()
    }

    #[test]
    fn single_column() {
        // lambda_j = a_j is attached to the column j - 1 in the middle of the relation
        let t = tiling(&[2, 1, 4, 3]);
        let s = suppress_line(&t, Line::Column, 0, -5..5).unwrap();
        let w = s.window((-4, -4), 8, 8).unwrap();
        assert!(verify_slk(&w, 2).unwrap().is_verified());
        assert!(check_tame(&w, 2).unwrap().is_verified());
        assert_eq!(s.entry(2, -1).unwrap(), t.entry(2, -1).unwrap());
        assert_eq!(s.entry(2, 0).unwrap(), t.entry(2, 1).unwrap());
    }

    #[test]
    fn wrong_column_is_rejected() {
        let t = tiling(&[2, 1, 4, 3]);
        match suppress_line(&t, Line::Column, 1, 0..3) {
            Err(Error::Precondition(msg)) => assert!(msg.contains("at (0, 1)")),
            other => panic!("{other:?}"),
        }
        assert!(suppress_line(&t.transpose(), Line::Row, 0, -3..3).is_ok());
    }

    #[test]
    fn periodic_columns() {
        let t = tiling(&[2, 1, 4, 3]);
        let s = suppress_periodic(&t, Line::Column, 0, 4, -3..3).unwrap();
        let w = s.window((-6, -7), 12, 14).unwrap();
        assert!(verify_slk(&w, 2).unwrap().is_verified());
        // old columns -5, -3, -2, -1, 1, 2, 3, 5 in order
        let olds: Vec<Scalar> = [-5, -3, -2, -1, 1, 2, 3, 5]
            .iter()
            .map(|&c| t.entry(1, c).unwrap())
            .collect();
        let news: Vec<Scalar> = (-4..4).map(|c| s.entry(1, c).unwrap()).collect();
        assert_eq!(news, olds);
    }

    #[test]
    fn rect_domain_shrinks() {
        let d = LinearizationData {
            k: 2,
            s: vec![v(&[1, 0]), v(&[0, 1])],
            lambda: IndexedFamily::constant(2, 5, v(&[1])),
            gamma: IndexedFamily::constant(2, 3, v(&[2])),
            anchor: (0, 0),
        };
        let t = build_from_linearization(&d).unwrap();
        let s = suppress_line(&t, Line::Column, 2, 0..4).unwrap();
        assert!(s.contains(0, 4) && !s.contains(0, 5));
    }
}
