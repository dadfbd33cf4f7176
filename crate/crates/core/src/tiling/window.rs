use serde::{Deserialize, Serialize};

use crate::algebra::matrix::ExactMatrix;
use crate::algebra::scalar::{self, Scalar};
use crate::error::{Error, Result};

/// A finite rectangular block of a tiling. Rows grow downward, columns to
/// the right; `origin` is the lattice point of the top-left entry.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Window {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub origin: (i64, i64),
    rows: usize,
    cols: usize,
    #[serde(with = "scalar::serde_grid")]
    entries: Vec<Vec<Scalar>>,
}

impl Window {
    pub fn new(origin: (i64, i64), entries: Vec<Vec<Scalar>>) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        if entries.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged window rows".into()));
        }
        Ok(Window {
            k: None,
            origin,
            rows,
            cols,
            entries,
        })
    }

    pub fn from_i64(origin: (i64, i64), rows: &[&[i64]]) -> Self {
        let entries = rows
            .iter()
            .map(|r| r.iter().map(|&x| scalar::int(x)).collect())
            .collect();
        Window::new(origin, entries).expect("rectangular literal")
    }

    pub fn from_fn(
        origin: (i64, i64),
        rows: usize,
        cols: usize,
        mut f: impl FnMut(i64, i64) -> Result<Scalar>,
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows);
        for a in 0..rows {
            let mut row = Vec::with_capacity(cols);
            for b in 0..cols {
                row.push(f(origin.0 + a as i64, origin.1 + b as i64)?);
            }
            entries.push(row);
        }
        Ok(Window {
            k: None,
            origin,
            rows,
            cols,
            entries,
        })
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    /// Checks the declared dimensions after deserialization.
    pub fn validate(&self) -> Result<()> {
        if self.entries.len() != self.rows || self.entries.iter().any(|r| r.len() != self.cols) {
            return Err(Error::Dimension(format!(
                "window declares {}x{} but holds different entry counts",
                self.rows, self.cols
            )));
        }
        Ok(())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_range(&self) -> std::ops::Range<i64> {
        self.origin.0..self.origin.0 + self.rows as i64
    }

    pub fn col_range(&self) -> std::ops::Range<i64> {
        self.origin.1..self.origin.1 + self.cols as i64
    }

    pub fn contains(&self, i: i64, j: i64) -> bool {
        self.row_range().contains(&i) && self.col_range().contains(&j)
    }

    /// Whether the `rows x cols` block anchored at `(i, j)` lies inside.
    pub fn contains_block(&self, i: i64, j: i64, rows: usize, cols: usize) -> bool {
        rows == 0 && cols == 0
            || self.contains(i, j) && self.contains(i + rows as i64 - 1, j + cols as i64 - 1)
    }

    pub fn get(&self, i: i64, j: i64) -> Result<&Scalar> {
        if !self.contains(i, j) {
            return Err(Error::Index(format!("({i}, {j}) outside window")));
        }
        Ok(&self.entries[(i - self.origin.0) as usize][(j - self.origin.1) as usize])
    }

    pub fn set(&mut self, i: i64, j: i64, v: Scalar) -> Result<()> {
        if !self.contains(i, j) {
            return Err(Error::Index(format!("({i}, {j}) outside window")));
        }
        self.entries[(i - self.origin.0) as usize][(j - self.origin.1) as usize] = v;
        Ok(())
    }

    pub fn entries(&self) -> &[Vec<Scalar>] {
        &self.entries
    }

    /// Sub-window with absolute origin `(i, j)`.
    pub fn sub(&self, i: i64, j: i64, rows: usize, cols: usize) -> Result<Window> {
        if !self.contains_block(i, j, rows, cols) {
            return Err(Error::Range(format!(
                "{rows}x{cols} block at ({i}, {j}) exits window"
            )));
        }
        let mut w = Window::from_fn((i, j), rows, cols, |a, b| self.get(a, b).cloned())?;
        w.k = self.k;
        Ok(w)
    }

    pub fn transpose(&self) -> Window {
        let mut w = Window::from_fn(
            (self.origin.1, self.origin.0),
            self.cols,
            self.rows,
            |a, b| self.get(b, a).cloned(),
        )
        .expect("in range");
        w.k = self.k;
        w
    }

    pub fn to_matrix(&self) -> ExactMatrix {
        ExactMatrix::from_rows(self.entries.clone()).expect("rectangular")
    }

    /// The submatrix with absolute row set `rows` and column set `cols`.
    pub fn select(&self, rows: &[i64], cols: &[i64]) -> Result<ExactMatrix> {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                data.push(self.get(i, j)?.clone());
            }
        }
        ExactMatrix::new(rows.len(), cols.len(), data)
    }

    pub fn same_entries(&self, other: &Window) -> bool {
        self.origin == other.origin && self.entries == other.entries
    }
}
