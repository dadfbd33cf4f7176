//! Quiddities, triangulations of polygons, the rewriting `(a+1) 1 (b+1) -> a b`
//! and the enumeration of positive integer friezes.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::continuant::{scalar_value, y_product};
use crate::algebra::scalar::int;
use crate::algebra::Scalar;
use crate::error::{Error, Result};

/// Largest `n` accepted by [`enumerate_friezes`] unless a bound is given.
pub const DEFAULT_ENUMERATION_BOUND: usize = 10;

/// Cyclic word `a_1, ..., a_{n+1}` of positive integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Quiddity(Vec<u64>);

impl Quiddity {
    /// Strict constructor: the Y-product over one period must be `-Id`.
    pub fn new(word: Vec<u64>) -> Result<Self> {
        let q = Quiddity::unchecked(word)?;
        match scalar_value(&y_product(&q.scalars())) {
            Some(c) if c == int(-1) => Ok(q),
            _ => Err(Error::Precondition(format!("Y-product of {q} is not -Id"))),
        }
    }

    /// Only positivity is checked.
    pub fn unchecked(word: Vec<u64>) -> Result<Self> {
        if word.is_empty() || word.contains(&0) {
            return Err(Error::Argument(format!(
                "quiddity entries must be positive: {word:?}"
            )));
        }
        Ok(Quiddity(word))
    }

    pub fn word(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn scalars(&self) -> Vec<Scalar> {
        self.0.iter().map(|&a| int(a as i64)).collect()
    }

    /// Lexicographically least rotation.
    pub fn canonical_rotation(&self) -> Quiddity {
        let n = self.0.len();
        (0..n)
            .map(|s| Quiddity(self.0[s..].iter().chain(&self.0[..s]).copied().collect()))
            .min()
            .expect("nonempty word")
    }
}

impl fmt::Display for Quiddity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl std::str::FromStr for Quiddity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let word = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u64>()
                    .map_err(|e| Error::Parse(format!("{p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Quiddity::unchecked(word)
    }
}

/// Triangulation of the polygon with vertices `1..=n_plus_1`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Triangulation {
    pub n_plus_1: usize,
    pub diagonals: BTreeSet<(usize, usize)>,
}

impl Triangulation {
    /// Normalizes each chord to `(low, high)` and validates.
    pub fn new(n_plus_1: usize, chords: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let diagonals = chords
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        let t = Triangulation {
            n_plus_1,
            diagonals,
        };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        let m = self.n_plus_1;
        if m < 3 {
            return Err(Error::Precondition(format!(
                "a polygon needs 3 vertices, got {m}"
            )));
        }
        if self.diagonals.len() != m - 3 {
            return Err(Error::Precondition(format!(
                "{} diagonals, expected {}",
                self.diagonals.len(),
                m - 3
            )));
        }
        for &(u, v) in &self.diagonals {
            if u < 1 || v > m || v - u < 2 || (u == 1 && v == m) {
                return Err(Error::Precondition(format!(
                    "({u}, {v}) is not a diagonal of the {m}-gon"
                )));
            }
        }
        for &(a, b) in &self.diagonals {
            for &(c, d) in &self.diagonals {
                if a < c && c < b && b < d {
                    return Err(Error::Precondition(format!(
                        "diagonals ({a}, {b}) and ({c}, {d}) cross"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Fan of diagonals out of vertex 1.
    pub fn fan(n_plus_1: usize) -> Result<Self> {
        Triangulation::new(n_plus_1, (3..n_plus_1).map(|v| (1, v)))
    }
}

/// Number of triangles at each vertex, in vertex order.
pub fn quiddity_from_triangulation(t: &Triangulation) -> Result<Quiddity> {
    t.validate()?;
    let mut counts = vec![1u64; t.n_plus_1];
    for &(u, v) in &t.diagonals {
        counts[u - 1] += 1;
        counts[v - 1] += 1;
    }
    Quiddity::unchecked(counts)
}

/// Every triangulation of the `m`-gon, in a fixed order.
pub fn triangulations(m: usize) -> Vec<Triangulation> {
    // chords of the sub-polygon lo..=hi, excluding the side (lo, hi)
    fn rec(lo: usize, hi: usize, out: &mut Vec<Vec<(usize, usize)>>) {
        if hi - lo < 2 {
            out.push(vec![]);
            return;
        }
        for apex in lo + 1..hi {
            let (mut left, mut right) = (vec![], vec![]);
            rec(lo, apex, &mut left);
            rec(apex, hi, &mut right);
            for l in &left {
                for r in &right {
                    let mut chords = l.clone();
                    chords.extend(r);
                    if apex - lo >= 2 {
                        chords.push((lo, apex));
                    }
                    if hi - apex >= 2 {
                        chords.push((apex, hi));
                    }
                    out.push(chords);
                }
            }
        }
    }
    if m < 3 {
        return vec![];
    }
    let mut all = vec![];
    rec(1, m, &mut all);
    all.into_iter()
        .map(|c| Triangulation::new(m, c).expect("generated triangulation is valid"))
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    MinusIdentity,
    Identity,
    Neither,
}

/// Words visited by [`reduce_quiddity`], starting with the input.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Reduction {
    pub steps: Vec<Vec<u64>>,
    pub classification: Classification,
}

impl Reduction {
    pub fn terminal(&self) -> &[u64] {
        self.steps.last().expect("trace holds the input")
    }
}

/// Middle position of a cyclic factor `(a+1) 1 (b+1)`, scanning from `start`.
fn find_factor(w: &[u64], start: usize) -> Option<usize> {
    let n = w.len();
    if n < 3 {
        return None;
    }
    (0..n)
        .map(|s| (start + s) % n)
        .find(|&p| w[p] == 1 && w[(p + n - 1) % n] >= 2 && w[(p + 1) % n] >= 2)
}

/// Rewrites `(a+1) 1 (b+1) -> a b` cyclically, always at the first factor
/// found scanning from the previous rewrite, until none is left.
pub fn reduce_quiddity(word: &[u64]) -> Reduction {
    let mut w = word.to_vec();
    let mut steps = vec![w.clone()];
    let mut start = 0;
    while let Some(p) = find_factor(&w, start) {
        let n = w.len();
        let (l, r) = ((p + n - 1) % n, (p + 1) % n);
        w[l] -= 1;
        w[r] -= 1;
        w.remove(p);
        // the right neighbour now sits at p, or at 0 when p was last
        start = if p == n - 1 { 0 } else { p };
        steps.push(w.clone());
    }
    let classification = if !w.is_empty() && w.iter().all(|&a| a == 1) {
        match w.len() % 6 {
            3 => Classification::MinusIdentity,
            0 => Classification::Identity,
            _ => Classification::Neither,
        }
    } else {
        Classification::Neither
    };
    Reduction {
        steps,
        classification,
    }
}

/// Quiddities of the `(n+1)`-gon from its triangulations, each read from
/// vertex 1, sorted.
pub fn friezes_from_triangulations(n: usize) -> Vec<Quiddity> {
    let mut out: Vec<Quiddity> = triangulations(n + 1)
        .iter()
        .map(|t| quiddity_from_triangulation(t).expect("valid triangulation"))
        .collect();
    out.sort();
    out
}

/// Positive integer friezes with `n` diagonals found by search: the first
/// `n - 2` entries of the quiddity row are free, each later one is forced by
/// the row of ones, and every partial continuant must stay positive.
pub fn friezes_by_search(n: usize) -> Vec<Quiddity> {
    let m = n + 1;
    let mut found = vec![];
    let mut word = Vec::with_capacity(m);
    // cont[s] = (q of a_s..a_t, q of a_s..a_{t-1}) for the current end t
    let mut cont: Vec<(i128, i128)> = Vec::with_capacity(m);
    search(m, &mut word, &mut cont, &mut found);
    found.sort();
    found
}

fn search(m: usize, word: &mut Vec<u64>, cont: &mut Vec<(i128, i128)>, found: &mut Vec<Quiddity>) {
    let t = word.len();
    if t == m {
        if closes_cyclically(word) {
            found.push(Quiddity(word.clone()));
        }
        return;
    }
    // the window of length m - 2 ending here must evaluate to 1
    let forced = if t + 1 >= m - 2 {
        let s = t + 3 - m;
        let (q1, q0) = if s < t { cont[s] } else { (1, 0) };
        if q1 <= 0 || (1 + q0) % q1 != 0 {
            return;
        }
        Some((1 + q0) / q1)
    } else {
        None
    };
    let candidates: Vec<u64> = match forced {
        Some(a) if a >= 1 => vec![a as u64],
        Some(_) => return,
        None => (1..=(m as u64 - 2).max(1)).collect(),
    };
    for a in candidates {
        let saved = cont.clone();
        let ok = extend(m, cont, a);
        if ok {
            word.push(a);
            search(m, word, cont, found);
            word.pop();
        }
        *cont = saved;
    }
}

/// Appends `a` to every open window and checks the sign pattern: positive up
/// to length `m - 3`, 1 at `m - 2`, 0 at `m - 1`.
fn extend(m: usize, cont: &mut Vec<(i128, i128)>, a: u64) -> bool {
    let t = cont.len();
    cont.push((1, 0));
    for (s, c) in cont.iter_mut().enumerate() {
        let len = t - s + 1;
        let next = a as i128 * c.0 - c.1;
        *c = (next, c.0);
        let ok = match len {
            l if l <= m.saturating_sub(3) => next > 0,
            l if l == m - 2 => next == 1,
            l if l == m - 1 => next == 0,
            _ => true,
        };
        if !ok {
            return false;
        }
    }
    true
}

/// The wrapped windows obey the same pattern as the straight ones.
fn closes_cyclically(w: &[u64]) -> bool {
    let m = w.len();
    (1..m).all(|s| {
        let (mut q, mut prev) = (1i128, 0i128);
        (1..m).all(|len| {
            let next = w[(s + len - 1) % m] as i128 * q - prev;
            prev = q;
            q = next;
            match len {
                l if l + 3 <= m => q > 0,
                l if l + 2 == m => q == 1,
                _ => q == 0,
            }
        })
    })
}

/// Both generators, which must agree; `n` above `bound` is refused.
pub fn enumerate_friezes(n: usize, bound: Option<usize>) -> Result<Vec<Quiddity>> {
    let bound = bound.unwrap_or(DEFAULT_ENUMERATION_BOUND);
    if n < 2 {
        return Err(Error::Argument(format!(
            "a frieze needs n >= 2 diagonals, got {n}"
        )));
    }
    if n > bound {
        return Err(Error::Resource(format!(
            "n = {n} exceeds the enumeration bound {bound}"
        )));
    }
    let a = friezes_from_triangulations(n);
    let b = friezes_by_search(n);
    if a != b {
        return Err(Error::Precondition(format!(
            "generators disagree for n = {n}: {} from triangulations, {} from search",
            a.len(),
            b.len()
        )));
    }
    Ok(a)
}

/// The band between the two rows of ones, one period, each line shifted one
/// cell right of the previous.
pub fn render_frieze(q: &Quiddity) -> String {
    let w = q.word();
    let m = w.len();
    let n = m - 1;
    let rows: Vec<Vec<String>> = (0..m)
        .map(|c| {
            let mut line = vec!["1".to_string()];
            let (mut q1, mut q0) = (1i128, 0i128);
            for len in 1..n {
                let next = w[(c + len - 1) % m] as i128 * q1 - q0;
                q0 = q1;
                q1 = next;
                line.push(next.to_string());
            }
            line
        })
        .collect();
    let width = rows.iter().flatten().map(String::len).max().unwrap_or(1) + 1;
    let mut out = String::new();
    for (c, row) in rows.iter().enumerate() {
        out.push_str(&" ".repeat(width * c));
        for cell in row {
            out.push_str(&format!("{cell:>width$}"));
        }
        out.push('\n');
    }
    out
}
