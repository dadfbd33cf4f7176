use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::matrix::ExactMatrix;
use crate::algebra::scalar::{self, Scalar};
use crate::error::{Error, Result};
use crate::tiling::{Domain, Interval, Tiling, Window};

/// Coefficients `c_0..c_k` of the relation `sum_t c_t V_{j-k+t} = 0` tying
/// `k + 1` consecutive columns (or rows), given `a = (a_1, .., a_{k-1})`:
/// `c_t = (-1)^(k+t) a_t` with `a_0 = a_k = 1`.
pub fn relation_coefficients(a: &[Scalar]) -> Vec<Scalar> {
    let k = a.len() + 1;
    (0..=k)
        .map(|t| {
            let at = if t == 0 || t == k {
                scalar::one()
            } else {
                a[t - 1].clone()
            };
            if (k + t).is_multiple_of(2) {
                at
            } else {
                -at
            }
        })
        .collect()
}

/// Inverse of [`relation_coefficients`] for a relation normalized to
/// `c_k = 1`; `None` unless `c_0 = (-1)^k`.
pub fn coefficients_from_relation(c: &[Scalar]) -> Option<Vec<Scalar>> {
    let k = c.len().checked_sub(1)?;
    let sign = |t: usize| {
        if (k + t).is_multiple_of(2) {
            scalar::one()
        } else {
            -scalar::one()
        }
    };
    if !c[k].is_one() || c[0] != sign(0) {
        return None;
    }
    Some((1..k).map(|t| &c[t] * sign(t)).collect())
}

/// A family of vectors indexed by an integer range `[lo, hi]`, optionally
/// extended periodically in both directions.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct IndexedFamily {
    pub lo: i64,
    pub hi: i64,
    #[serde(default)]
    pub periodic: bool,
    #[serde(with = "scalar::serde_grid")]
    pub rows: Vec<Vec<Scalar>>,
}

impl IndexedFamily {
    pub fn new(lo: i64, rows: Vec<Vec<Scalar>>, periodic: bool) -> Self {
        IndexedFamily {
            lo,
            hi: lo + rows.len() as i64 - 1,
            periodic,
            rows,
        }
    }

    pub fn constant(lo: i64, hi: i64, v: Vec<Scalar>) -> Self {
        IndexedFamily {
            lo,
            hi,
            periodic: false,
            rows: vec![v; (hi - lo + 1).max(0) as usize],
        }
    }

    pub fn periodic(rows: Vec<Vec<Scalar>>) -> Self {
        Self::new(0, rows, true)
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn get(&self, j: i64) -> Option<&[Scalar]> {
        if self.rows.is_empty() {
            return None;
        }
        if self.periodic {
            let n = self.rows.len() as i64;
            return Some(&self.rows[(j - self.lo).rem_euclid(n) as usize]);
        }
        (self.lo..=self.hi)
            .contains(&j)
            .then(|| self.rows[(j - self.lo) as usize].as_slice())
    }

    /// Indices `n` such that line `n` is determined from the seed lines
    /// `0..k` by this family.
    fn reach(&self, k: i64) -> Interval {
        if self.periodic && !self.rows.is_empty() {
            return Interval::ALL;
        }
        let lo = if !self.is_empty() && self.lo < k && self.hi >= k - 1 {
            self.lo - k
        } else {
            0
        };
        let hi = if !self.is_empty() && self.lo <= k && self.hi >= k {
            self.hi
        } else {
            k - 1
        };
        Interval::new(Some(lo), Some(hi + 1))
    }

    fn shifted(&self, d: i64) -> IndexedFamily {
        IndexedFamily {
            lo: self.lo - d,
            hi: self.hi - d,
            ..self.clone()
        }
    }
}

/// `(S, lambda, gamma)`: the seed block `S` sitting at `anchor` and the
/// column (`lambda`) and row (`gamma`) recurrence coefficients, indexed
/// relative to the anchor.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LinearizationData {
    pub k: usize,
    #[serde(rename = "S", with = "scalar::serde_grid")]
    pub s: Vec<Vec<Scalar>>,
    pub lambda: IndexedFamily,
    pub gamma: IndexedFamily,
    #[serde(default)]
    pub anchor: (i64, i64),
}

impl LinearizationData {
    pub fn seed(&self) -> ExactMatrix {
        ExactMatrix::from_rows(self.s.clone()).expect("validated")
    }

    pub fn validate(&self) -> Result<()> {
        let k = self.k;
        if k == 0 {
            return Err(Error::Argument("order k must be positive".into()));
        }
        let s = ExactMatrix::from_rows(self.s.clone())?;
        if s.rows() != k || s.cols() != k {
            return Err(Error::Dimension(format!(
                "seed is {}x{}, expected {k}x{k}",
                s.rows(),
                s.cols()
            )));
        }
        if !s.det()?.is_one() {
            return Err(Error::Precondition(
                "seed block must have determinant 1".into(),
            ));
        }
        for (name, fam) in [("lambda", &self.lambda), ("gamma", &self.gamma)] {
            if fam.rows.iter().any(|r| r.len() != k - 1) {
                return Err(Error::Dimension(format!(
                    "{name} vectors must have length {}",
                    k - 1
                )));
            }
            if !fam.periodic && fam.hi - fam.lo + 1 != fam.rows.len() as i64 {
                return Err(Error::Dimension(format!(
                    "{name} range does not match its rows"
                )));
            }
        }
        Ok(())
    }
}

/// A line sequence `V_n` (restrictions of rows or columns to the seed),
/// filled outward from the seed and cached.
struct Lines {
    k: usize,
    family: IndexedFamily,
    cache: Mutex<BTreeMap<i64, Vec<Scalar>>>,
}

impl Lines {
    fn new(k: usize, family: IndexedFamily, seed: Vec<Vec<Scalar>>) -> Self {
        let cache = seed
            .into_iter()
            .enumerate()
            .map(|(n, v)| (n as i64, v))
            .collect();
        Lines {
            k,
            family,
            cache: Mutex::new(cache),
        }
    }

    fn get(&self, n: i64) -> Result<Vec<Scalar>> {
        let mut cache = self.cache.lock().expect("line cache");
        if let Some(v) = cache.get(&n) {
            return Ok(v.clone());
        }
        let k = self.k as i64;
        let missing = |m: i64| Error::Range(format!("no recurrence coefficients at index {m}"));
        if n >= k {
            let mut m = *cache.keys().next_back().expect("seed") + 1;
            while m <= n {
                let c = relation_coefficients(self.family.get(m).ok_or_else(|| missing(m))?);
                let v = combine(&cache, m - k, &c[..self.k], &-Scalar::one());
                cache.insert(m, v);
                m += 1;
            }
        } else {
            let mut m = *cache.keys().next().expect("seed") - 1;
            while m >= n {
                // relation for index m + k expresses V_m through V_{m+1..m+k}
                let c =
                    relation_coefficients(self.family.get(m + k).ok_or_else(|| missing(m + k))?);
                let scale = -Scalar::one() / &c[0];
                let v = combine(&cache, m + 1, &c[1..], &scale);
                cache.insert(m, v);
                m -= 1;
            }
        }
        Ok(cache[&n].clone())
    }
}

/// `scale * sum_t c_t V_{start + t}`.
fn combine(
    cache: &BTreeMap<i64, Vec<Scalar>>,
    start: i64,
    c: &[Scalar],
    scale: &Scalar,
) -> Vec<Scalar> {
    let len = cache[&start].len();
    let mut out = vec![Scalar::zero(); len];
    for (t, ct) in c.iter().enumerate() {
        if ct.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(&cache[&(start + t as i64)]) {
            *o += ct * x;
        }
    }
    out.iter_mut().for_each(|o| *o *= scale);
    out
}

/// The tame SL_k-tiling with the given linearization data. The domain is
/// the rectangle of rows and columns reachable from the seed, which is the
/// whole plane when both families are periodic.
pub fn build_from_linearization(d: &LinearizationData) -> Result<Tiling> {
    d.validate()?;
    let k = d.k;
    let s = d.seed();
    let s_inv = s.inverse()?;
    let rows = Lines::new(k, d.gamma.clone(), s.to_rows());
    let cols = Lines::new(k, d.lambda.clone(), s.transpose().to_rows());
    let (ri, ci) = (d.gamma.reach(k as i64), d.lambda.reach(k as i64));
    let domain = if ri == Interval::ALL && ci == Interval::ALL {
        Domain::FullPlane
    } else {
        Domain::Rect { rows: ri, cols: ci }
    };
    let domain = domain.shifted(-d.anchor.0, -d.anchor.1);
    let (a0, b0) = d.anchor;
    let state = Arc::new((rows, cols, s_inv));
    Ok(Tiling::new(
        k,
        domain,
        format!("linearization data anchored at ({a0}, {b0})"),
        move |i, j| {
            let (rows, cols, s_inv) = &*state;
            let x = rows.get(i - a0)?;
            let y = cols.get(j - b0)?;
            // x S^-1 y
            let mut acc = Scalar::zero();
            for (p, xp) in x.iter().enumerate() {
                if xp.is_zero() {
                    continue;
                }
                let mut inner = Scalar::zero();
                for (q, yq) in y.iter().enumerate() {
                    inner += s_inv.get(p, q) * yq;
                }
                acc += xp * inner;
            }
            Ok(acc)
        },
    ))
}

/// Solves for the relation expressing line `target` through the `k`
/// preceding lines, using the first nonsingular `k x k` system from the top
/// (or left) of the window, then checks it on every other position.
fn line_relation(lines: &ExactMatrix, target: usize, k: usize) -> Result<Vec<Scalar>> {
    // `lines` holds one line per matrix column; positions run down the rows
    let n = lines.rows();
    let prev: Vec<usize> = (target - k..target).collect();
    for top in 0..=n - k {
        let pos: Vec<usize> = (top..top + k).collect();
        let sys = lines.submatrix(&pos, &prev);
        let rhs: Vec<Scalar> = pos.iter().map(|&p| lines.get(p, target).clone()).collect();
        let Ok(sol) = sys.solve(&rhs) else { continue };
        for p in 0..n {
            let fit: Scalar = prev
                .iter()
                .zip(&sol)
                .map(|(&c, x)| lines.get(p, c) * x)
                .sum();
            if &fit != lines.get(p, target) {
                return Err(Error::NotTame(format!(
                    "line {target} is not a combination of the {k} before it"
                )));
            }
        }
        // relation: sum_t c_t V_{target-k+t} = 0 with c_k = 1
        let mut c: Vec<Scalar> = sol.into_iter().map(|x| -x).collect();
        c.push(Scalar::one());
        return coefficients_from_relation(&c).ok_or_else(|| {
            Error::NotTame(format!(
                "relation at line {target} has the wrong leading sign"
            ))
        });
    }
    Err(Error::NotTame(format!(
        "the {k} lines before line {target} are dependent"
    )))
}

/// Reads off `(S, lambda, gamma)` from a window of a tame SL_k-tiling. The
/// seed is the top-left `k x k` block; indices are relative to it.
pub fn extract_linearization(w: &Window, k: usize) -> Result<LinearizationData> {
    if k == 0 {
        return Err(Error::Argument("order k must be positive".into()));
    }
    if w.rows() < k || w.cols() < k {
        return Err(Error::Range(format!(
            "{}x{} window is smaller than {k}x{k}",
            w.rows(),
            w.cols()
        )));
    }
    let m = w.to_matrix();
    let s = m.submatrix(&(0..k).collect::<Vec<_>>(), &(0..k).collect::<Vec<_>>());
    if s.det()?.is_zero() {
        return Err(Error::NotTame("seed block is singular".into()));
    }
    let lambda: Vec<Vec<Scalar>> = (k..w.cols())
        .map(|j| line_relation(&m, j, k))
        .collect::<Result<_>>()?;
    let mt = m.transpose();
    let gamma: Vec<Vec<Scalar>> = (k..w.rows())
        .map(|i| line_relation(&mt, i, k))
        .collect::<Result<_>>()?;
    Ok(LinearizationData {
        k,
        s: s.to_rows(),
        lambda: IndexedFamily::new(k as i64, lambda, false),
        gamma: IndexedFamily::new(k as i64, gamma, false),
        anchor: w.origin,
    })
}

/// Data of the translate `(i, j) -> a(i + 1, j)`, with the same anchor.
pub fn translate_data(d: &LinearizationData) -> Result<LinearizationData> {
    d.validate()?;
    let k = d.k;
    let g = d
        .gamma
        .get(k as i64)
        .ok_or_else(|| Error::Range(format!("gamma_{k} is not available")))?;
    let c = relation_coefficients(g);
    // companion matrix: shift rows up, last row expresses R_k
    let comp = ExactMatrix::from_fn(k, k, |i, j| {
        if i + 1 < k {
            if j == i + 1 {
                scalar::one()
            } else {
                scalar::zero()
            }
        } else {
            -c[j].clone()
        }
    });
    let s_x = comp.mul(&d.seed())?;
    Ok(LinearizationData {
        k,
        s: s_x.to_rows(),
        lambda: d.lambda.clone(),
        gamma: d.gamma.shifted(1),
        anchor: d.anchor,
    })
}

/// Data of the transposed tiling.
pub fn transpose_data(d: &LinearizationData) -> LinearizationData {
    LinearizationData {
        k: d.k,
        s: d.seed().transpose().to_rows(),
        lambda: d.gamma.clone(),
        gamma: d.lambda.clone(),
        anchor: (d.anchor.1, d.anchor.0),
    }
}
