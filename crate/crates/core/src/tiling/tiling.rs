use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use super::domain::Domain;
use super::window::Window;
use crate::algebra::Scalar;
use crate::error::{Error, Result};

/// Pure point evaluator behind a tiling.
pub trait Evaluator: Send + Sync {
    fn eval(&self, i: i64, j: i64) -> Result<Scalar>;
}

impl<F> Evaluator for F
where
    F: Fn(i64, i64) -> Result<Scalar> + Send + Sync,
{
    fn eval(&self, i: i64, j: i64) -> Result<Scalar> {
        self(i, j)
    }
}

const MEMO_CAPACITY: usize = 1 << 18;

/// Point cache that forgets everything once full; callers only see a pure
/// function.
pub struct Memo<V> {
    map: Mutex<HashMap<(i64, i64), V>>,
}

impl<V> Default for Memo<V> {
    fn default() -> Self {
        Memo {
            map: Mutex::new(HashMap::new()),
        }
    }
}

impl<V: Clone> Memo<V> {
    pub fn get(&self, p: (i64, i64)) -> Option<V> {
        self.map.lock().expect("memo lock").get(&p).cloned()
    }

    pub fn insert(&self, p: (i64, i64), v: V) {
        let mut m = self.map.lock().expect("memo lock");
        if m.len() >= MEMO_CAPACITY {
            m.clear();
        }
        m.insert(p, v);
    }
}

struct Inner {
    k: usize,
    domain: Domain,
    provenance: String,
    eval: Box<dyn Evaluator>,
    memo: Memo<Scalar>,
}

/// A lazily evaluated array `(a_ij)` on a domain of the lattice.
#[derive(Clone)]
pub struct Tiling {
    inner: Arc<Inner>,
}

impl Tiling {
    pub fn new(
        k: usize,
        domain: Domain,
        provenance: impl Into<String>,
        eval: impl Evaluator + 'static,
    ) -> Self {
        Tiling {
            inner: Arc::new(Inner {
                k,
                domain,
                provenance: provenance.into(),
                eval: Box::new(eval),
                memo: Memo::default(),
            }),
        }
    }

    /// The finite tiling given by a window's entries.
    pub fn from_window(w: &Window, k: usize) -> Self {
        let w2 = w.clone();
        Tiling::new(
            k,
            Domain::rect(w.origin, w.rows(), w.cols()),
            format!("window at ({}, {})", w.origin.0, w.origin.1),
            move |i, j| w2.get(i, j).cloned(),
        )
    }

    pub fn k(&self) -> usize {
        self.inner.k
    }

    pub fn domain(&self) -> &Domain {
        &self.inner.domain
    }

    pub fn provenance(&self) -> &str {
        &self.inner.provenance
    }

    pub fn contains(&self, i: i64, j: i64) -> bool {
        self.inner.domain.contains(i, j)
    }

    pub fn entry(&self, i: i64, j: i64) -> Result<Scalar> {
        if !self.inner.domain.contains(i, j) {
            return Err(Error::Domain(i, j));
        }
        if let Some(v) = self.inner.memo.get((i, j)) {
            return Ok(v);
        }
        let v = self.inner.eval.eval(i, j)?;
        self.inner.memo.insert((i, j), v.clone());
        Ok(v)
    }

    /// Materializes a rectangle; fails on the first point (row-major) outside
    /// the domain.
    pub fn window(&self, origin: (i64, i64), rows: usize, cols: usize) -> Result<Window> {
        for a in 0..rows as i64 {
            for b in 0..cols as i64 {
                if !self.contains(origin.0 + a, origin.1 + b) {
                    return Err(Error::Domain(origin.0 + a, origin.1 + b));
                }
            }
        }
        Ok(Window::from_fn(origin, rows, cols, |i, j| self.entry(i, j))?.with_k(self.k()))
    }

    /// `(i, j) -> a(i + p, j + q)`.
    pub fn translate(&self, p: i64, q: i64) -> Tiling {
        if p == 0 && q == 0 {
            return self.clone();
        }
        let src = self.clone();
        Tiling::new(
            self.k(),
            self.domain().shifted(p, q),
            format!("translate({}, {p}, {q})", self.provenance()),
            move |i, j| src.entry(i + p, j + q),
        )
    }

    pub fn transpose(&self) -> Tiling {
        let src = self.clone();
        Tiling::new(
            self.k(),
            self.domain().transposed(),
            format!("transpose({})", self.provenance()),
            move |i, j| src.entry(j, i),
        )
    }

    /// Same values, declared order replaced.
    pub fn with_k(&self, k: usize) -> Tiling {
        let src = self.clone();
        Tiling::new(
            k,
            self.domain().clone(),
            self.provenance().to_string(),
            move |i, j| src.entry(i, j),
        )
    }
}

impl fmt::Debug for Tiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Tiling")
            .field("k", &self.k())
            .field("domain", &self.domain().to_string())
            .field("provenance", &self.provenance())
            .finish()
    }
}

pub fn window(t: &Tiling, origin: (i64, i64), rows: usize, cols: usize) -> Result<Window> {
    t.window(origin, rows, cols)
}

pub fn translate(t: &Tiling, p: i64, q: i64) -> Tiling {
    t.translate(p, q)
}

pub fn transpose(t: &Tiling) -> Tiling {
    t.transpose()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::int;
    use crate::fixtures;

    fn fig1() -> Tiling {
        Tiling::from_window(&fixtures::fig1(), 2)
    }

    #[test]
    fn window_errors_name_first_point() {
        let t = fig1();
        assert_eq!(t.window((6, 0), 3, 2).unwrap_err(), Error::Domain(8, 0));
        assert_eq!(
            t.window((0, 0), 1, 1).unwrap().get(0, 0).unwrap(),
            &int(887)
        );
    }

    #[test]
    fn translation_is_a_group_action() {
        let t = fig1();
        let w = t.window((2, 2), 4, 5).unwrap();
        assert!(t
            .translate(0, 0)
            .window((2, 2), 4, 5)
            .unwrap()
            .same_entries(&w));
        let back = t.translate(1, 2).translate(-1, -2);
        assert!(back.window((2, 2), 4, 5).unwrap().same_entries(&w));
        let up = t.translate(1, 0).window((0, 0), 2, 2).unwrap();
        assert_eq!(up.get(0, 0).unwrap(), &int(158));
    }

    #[test]
    fn transposition_swaps_indices() {
        let t = fig1().transpose();
        assert_eq!(t.entry(12, 7).unwrap(), int(2199));
        let tt = t.transpose();
        assert!(tt
            .window((0, 0), 8, 13)
            .unwrap()
            .same_entries(&fixtures::fig1()));
    }
}
