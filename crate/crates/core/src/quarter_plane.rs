//! Tilings of `N x N`: the factorization `a_ij = Gamma_i S^-1 Lambda_j`, the
//! binomial SL_k family, its generating series, and the zigzag fixtures.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::scalar::{binomial, int};
use crate::algebra::{ExactMatrix, Scalar};
use crate::error::{Error, Result};
use crate::path::{path_tiling, BiInfiniteWord};
use crate::tiling::{Domain, Tiling, Window};

/// Row `i` of `Gamma` or column `j` of `Lambda`, as a `k`-vector.
pub type Border = Arc<dyn Fn(u64) -> Vec<Scalar> + Send + Sync>;

/// Largest series degree [`series_table`] expands.
pub const SERIES_DEGREE_BOUND: usize = 256;

/// The quarter-plane tiling `a_ij = Gamma_i S^-1 Lambda_j`.
pub fn block_reconstruct(gamma: Border, s: &ExactMatrix, lambda: Border) -> Result<Tiling> {
    let k = s.rows();
    if !s.is_square() || k == 0 {
        return Err(Error::Dimension(format!(
            "S must be square and nonempty, got {}x{}",
            s.rows(),
            s.cols()
        )));
    }
    if s.det()? != int(1) {
        return Err(Error::Precondition(format!(
            "det S = {}, expected 1",
            s.det()?
        )));
    }
    for (name, b) in [("Gamma", &gamma), ("Lambda", &lambda)] {
        if b(0).len() != k {
            return Err(Error::Dimension(format!(
                "{name} has width {}, expected {k}",
                b(0).len()
            )));
        }
    }
    let s_inv = s.inverse()?;
    // Gamma_i S^-1 is cached per row
    let rows: Arc<crate::tiling::Memo<Vec<Scalar>>> = Arc::default();
    Ok(Tiling::new(
        k,
        Domain::quarter_plane(),
        format!("block reconstruction, k = {k}"),
        move |i, j| {
            let left = match rows.get((i, 0)) {
                Some(v) => v,
                None => {
                    let g = gamma(i as u64);
                    let v: Vec<Scalar> = (0..k)
                        .map(|c| (0..k).map(|r| &g[r] * s_inv.get(r, c)).sum())
                        .collect();
                    rows.insert((i, 0), v.clone());
                    v
                }
            };
            let l = lambda(j as u64);
            Ok(left.iter().zip(&l).map(|(a, b)| a * b).sum())
        },
    ))
}

/// `(binom(n, 0), ..., binom(n, k-1))`.
pub fn binomial_border(k: usize) -> Border {
    Arc::new(move |n| (0..k as u64).map(|l| binomial(n, l)).collect())
}

/// `a_ij = sum_{l < k} binom(i, l) binom(j, l)` on `N x N`.
pub fn binomial_tiling(k: usize) -> Result<Tiling> {
    if k == 0 {
        return Err(Error::Argument("order k must be positive".into()));
    }
    Ok(Tiling::new(
        k,
        Domain::quarter_plane(),
        format!("binomial tiling, k = {k}"),
        move |i, j| {
            Ok((0..k as u64)
                .map(|l| binomial(i as u64, l) * binomial(j as u64, l))
                .sum())
        },
    ))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "series", content = "k")]
pub enum Series {
    /// `sum_{l=1}^k (xy)^{l-1} / ((1-x)(1-y))^l`
    Primal(usize),
    /// `1/((1-x)(1-y)) + sum_{l=2}^k xy / ((1-x)(1-y))^l`
    Dual(usize),
}

/// Coefficients `c(i, j)` for `0 <= i, j <= degree`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SeriesTable {
    pub series: Series,
    pub degree: usize,
    #[serde(with = "crate::algebra::scalar::serde_grid")]
    pub coefficients: Vec<Vec<Scalar>>,
}

impl SeriesTable {
    pub fn get(&self, i: usize, j: usize) -> Option<&Scalar> {
        self.coefficients.get(i).and_then(|r| r.get(j))
    }

    pub fn to_window(&self) -> Window {
        Window::new((0, 0), self.coefficients.clone()).expect("square table")
    }
}

/// `[x^n] (1 - x)^-l`.
fn inverse_power_coefficient(n: u64, l: u64) -> Scalar {
    if l == 0 {
        return if n == 0 { int(1) } else { int(0) };
    }
    binomial(n + l - 1, l - 1)
}

/// `[x^i y^j] (x y)^shift / ((1-x)(1-y))^l`.
fn term(i: u64, j: u64, shift: u64, l: u64) -> Scalar {
    if i < shift || j < shift {
        return int(0);
    }
    inverse_power_coefficient(i - shift, l) * inverse_power_coefficient(j - shift, l)
}

/// Expands the series exactly by reading coefficients off the binomial
/// series of each summand.
pub fn series_table(series: Series, degree: usize) -> Result<SeriesTable> {
    if degree > SERIES_DEGREE_BOUND {
        return Err(Error::Resource(format!(
            "degree {degree} exceeds {SERIES_DEGREE_BOUND}"
        )));
    }
    let coefficient = |i: u64, j: u64| -> Scalar {
        match series {
            Series::Primal(k) => (1..=k as u64).map(|l| term(i, j, l - 1, l)).sum(),
            Series::Dual(k) => {
                term(i, j, 0, 1) + (2..=k as u64).map(|l| term(i, j, 1, l)).sum::<Scalar>()
            }
        }
    };
    let coefficients = (0..=degree as u64)
        .map(|i| (0..=degree as u64).map(|j| coefficient(i, j)).collect())
        .collect();
    Ok(SeriesTable {
        series,
        degree,
        coefficients,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Zigzag {
    Fibonacci,
    Catalan,
}

impl std::str::FromStr for Zigzag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fibonacci" => Ok(Zigzag::Fibonacci),
            "catalan" => Ok(Zigzag::Catalan),
            _ => Err(Error::Parse(format!(
                "expected fibonacci or catalan, got {s:?}"
            ))),
        }
    }
}

/// `size x size` window of the `(xy)*` path tiling starting at the path
/// point `(0, -1)`, so that `a(i, j - 1)` depends on `i + j` only. The
/// Catalan window uses order `2 * size`, past the deepest point shown, where
/// the entries no longer depend on the order.
pub fn zigzag_fixture(kind: Zigzag, size: usize) -> Result<Window> {
    if size == 0 || size > 64 {
        return Err(Error::Range(format!(
            "zigzag window size must be in 1..=64, got {size}"
        )));
    }
    let k = match kind {
        Zigzag::Fibonacci => 2,
        Zigzag::Catalan => 2 * size,
    };
    let w: BiInfiniteWord = "(xy)*".parse()?;
    path_tiling(&w, k)?.window((0, -1), size, size)
}

pub fn catalan_number(n: u64) -> Scalar {
    binomial(2 * n, n) / int(n as i64 + 1)
}

/// `det (C_{h+i+j})_{0 <= i, j <= m}`.
pub fn hankel_catalan(h: u64, m: usize) -> Result<Scalar> {
    ExactMatrix::from_fn(m + 1, m + 1, |i, j| catalan_number(h + (i + j) as u64)).det()
}
