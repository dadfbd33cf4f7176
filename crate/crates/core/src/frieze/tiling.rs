//! Frieze patterns embedded as full-plane tame SL_2-tilings.
//!
//! `a_n` sits at `(n + 1, n - 1)`; the main diagonal is 0, the
//! superdiagonal -1 and the subdiagonal 1. Every entry is a signed-order
//! continuant of consecutive `a`'s, so columns obey
//! `C_i - a_{i+1} C_{i+1} + C_{i+2} = 0`.

use std::sync::Arc;

use num_traits::Zero;

use super::continuant::continuant_ext;
use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::tiling::{Domain, Failure, Tiling, VerifyReport};

/// Entry `(r, c)` given the sequence `a`.
fn entry(a: &dyn Fn(i64) -> Result<Scalar>, r: i64, c: i64) -> Result<Scalar> {
    if r >= c {
        let xs = (c + 1..r).map(a).collect::<Result<Vec<_>>>()?;
        continuant_ext(r - c - 1, &xs)
    } else {
        let xs = (r + 1..c).map(a).collect::<Result<Vec<_>>>()?;
        Ok(-continuant_ext(c - r - 1, &xs)?)
    }
}

/// Tiling for an arbitrary bi-infinite sequence. A zero `a_n` is reported
/// as a precondition error by every entry that reads it.
pub fn frieze_tiling_fn(a: impl Fn(i64) -> Scalar + Send + Sync + 'static) -> Tiling {
    let a = Arc::new(move |n: i64| {
        let v = a(n);
        if v.is_zero() {
            Err(Error::Precondition(format!("a_{n} = 0")))
        } else {
            Ok(v)
        }
    });
    Tiling::new(2, Domain::FullPlane, "frieze", move |r, c| entry(&*a, r, c))
}

/// Tiling for the periodic sequence with `a_1, ..., a_p` = `word`.
pub fn frieze_tiling(word: &[Scalar]) -> Result<Tiling> {
    if word.is_empty() {
        return Err(Error::Argument("empty frieze word".into()));
    }
    if let Some(i) = word.iter().position(Zero::is_zero) {
        return Err(Error::Precondition(format!("a_{} = 0", i + 1)));
    }
    let w: Arc<[Scalar]> = word.into();
    let p = w.len() as i64;
    let prov = format!(
        "frieze ({})",
        word.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    );
    let a = move |n: i64| Ok(w[(n - 1).rem_euclid(p) as usize].clone());
    Ok(Tiling::new(2, Domain::FullPlane, prov, move |r, c| {
        entry(&a, r, c)
    }))
}

/// One report per symmetry of a frieze tiling of period `n + 1`.
#[derive(Clone, Debug)]
pub struct FriezeSymmetries {
    pub diagonal_period: VerifyReport,
    pub row_skew: VerifyReport,
    pub column_skew: VerifyReport,
    /// `a_ij = a_{j+n+1, i}`.
    pub glide_plus: VerifyReport,
    /// `a_ij = a_{j, i-n-1}`.
    pub glide_minus: VerifyReport,
}

impl FriezeSymmetries {
    pub fn reports(&self) -> [&VerifyReport; 5] {
        [
            &self.diagonal_period,
            &self.row_skew,
            &self.column_skew,
            &self.glide_plus,
            &self.glide_minus,
        ]
    }

    pub fn is_verified(&self) -> bool {
        self.reports().iter().all(|r| r.is_verified())
    }

    /// Everything in one report; failures keep their anchors.
    pub fn merged(&self) -> VerifyReport {
        let mut out = VerifyReport {
            criterion: self
                .reports()
                .iter()
                .map(|r| r.criterion.as_str())
                .collect::<Vec<_>>()
                .join("; "),
            checked: 0,
            failures: vec![],
        };
        for r in self.reports() {
            out.checked += r.checked;
            out.failures.extend(r.failures.iter().cloned());
        }
        out
    }
}

fn compare(
    t: &Tiling,
    criterion: String,
    origin: (i64, i64),
    rows: usize,
    cols: usize,
    image: impl Fn(i64, i64) -> Result<Scalar>,
) -> Result<VerifyReport> {
    let mut report = VerifyReport {
        criterion,
        checked: 0,
        failures: vec![],
    };
    for i in origin.0..origin.0 + rows as i64 {
        for j in origin.1..origin.1 + cols as i64 {
            let expected = t.entry(i, j)?;
            let got = image(i, j)?;
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

/// Checks the periodicity, skew-periodicity and glide symmetry of a frieze
/// tiling with `n` diagonals at every point of the given window.
pub fn check_frieze_symmetries(
    t: &Tiling,
    n: usize,
    origin: (i64, i64),
    rows: usize,
    cols: usize,
) -> Result<FriezeSymmetries> {
    let p = n as i64 + 1;
    let run =
        |c: String, f: &dyn Fn(i64, i64) -> Result<Scalar>| compare(t, c, origin, rows, cols, f);
    Ok(FriezeSymmetries {
        diagonal_period: run(format!("a(i+{p}, j+{p}) = a(i, j)"), &|i, j| {
            t.entry(i + p, j + p)
        })?,
        row_skew: run(format!("a(i+{p}, j) = -a(i, j)"), &|i, j| {
            Ok(-t.entry(i + p, j)?)
        })?,
        column_skew: run(format!("a(i, j+{p}) = -a(i, j)"), &|i, j| {
            Ok(-t.entry(i, j + p)?)
        })?,
        glide_plus: run(format!("a(j+{p}, i) = a(i, j)"), &|i, j| t.entry(j + p, i))?,
        glide_minus: run(format!("a(j, i-{p}) = a(i, j)"), &|i, j| t.entry(j, i - p))?,
    })
}
