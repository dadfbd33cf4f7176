use serde::{Deserialize, Serialize};

use super::window::Window;
use crate::algebra::minors::adjacent_minor;
use crate::algebra::scalar::{self, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Failure {
    pub anchor: (i64, i64),
    #[serde(with = "scalar::serde_scalar")]
    pub expected: Scalar,
    #[serde(with = "scalar::serde_scalar")]
    pub got: Scalar,
}

/// Outcome of a window-level check. `checked` counts the minors examined.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct VerifyReport {
    pub criterion: String,
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl VerifyReport {
    pub fn is_verified(&self) -> bool {
        self.failures.is_empty()
    }
}

fn anchors(w: &Window, m: usize) -> impl Iterator<Item = (i64, i64)> + '_ {
    let (r, c) = (
        w.rows() as i64 - m as i64 + 1,
        w.cols() as i64 - m as i64 + 1,
    );
    (0..r.max(0)).flat_map(move |a| (0..c.max(0)).map(move |b| (w.origin.0 + a, w.origin.1 + b)))
}

fn check_minors(w: &Window, m: usize, expected: &Scalar, report: &mut VerifyReport) -> Result<()> {
    for (i, j) in anchors(w, m) {
        let got = adjacent_minor(w, i, j, m)?;
        report.checked += 1;
        if &got != expected {
            report.failures.push(Failure {
                anchor: (i, j),
                expected: expected.clone(),
                got,
            });
        }
    }
    Ok(())
}

/// Every adjacent `k x k` minor inside the window equals 1.
pub fn verify_slk(w: &Window, k: usize) -> Result<VerifyReport> {
    if k == 0 || w.rows() < k || w.cols() < k {
        return Err(Error::Range(format!(
            "{}x{} window too small for k = {k}",
            w.rows(),
            w.cols()
        )));
    }
    let mut report = VerifyReport {
        criterion: format!("adjacent {k}x{k} minors = 1"),
        checked: 0,
        failures: vec![],
    };
    check_minors(w, k, &scalar::one(), &mut report)?;
    Ok(report)
}

/// Window proxy for tameness: every adjacent `(k+1) x (k+1)` minor vanishes
/// and the window has rank exactly `k`. A rank mismatch is reported as a
/// failure anchored at the window origin with expected/got ranks.
pub fn check_tame(w: &Window, k: usize) -> Result<VerifyReport> {
    if w.rows() <= k || w.cols() <= k {
        return Err(Error::Range(format!(
            "{}x{} window too small for a tameness check with k = {k}",
            w.rows(),
            w.cols()
        )));
    }
    let mut report = VerifyReport {
        criterion: format!("adjacent {0}x{0} minors = 0 and window rank = {k}", k + 1),
        checked: 0,
        failures: vec![],
    };
    check_minors(w, k + 1, &scalar::zero(), &mut report)?;
    let r = w.to_matrix().rank();
    report.checked += 1;
    if r != k {
        report.failures.push(Failure {
            anchor: w.origin,
            expected: scalar::int(k as i64),
            got: scalar::int(r as i64),
        });
    }
    Ok(report)
}
