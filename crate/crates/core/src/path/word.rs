use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    /// Lattice step of the path: `x` goes up, `y` goes right.
    pub fn step(self) -> (i64, i64) {
        match self {
            Letter::X => (-1, 0),
            Letter::Y => (0, 1),
        }
    }

    pub fn swapped(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }

    pub(crate) fn parse(c: char) -> Result<Letter> {
        match c {
            'x' => Ok(Letter::X),
            'y' => Ok(Letter::Y),
            other => Err(Error::Parse(format!("unexpected letter {other:?} in word"))),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::X => "x",
            Letter::Y => "y",
        })
    }
}

/// An eventually periodic bi-infinite word `...LLL core RRR...` whose core
/// starts at `anchor`. Letter `n = 0` is the first core letter (or the first
/// right-period letter when the core is empty); letter `-1` is the last
/// letter of the left period.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BiInfiniteWord {
    left: Vec<Letter>,
    core: Vec<Letter>,
    right: Vec<Letter>,
    anchor: (i64, i64),
}

fn letters(s: &str) -> Result<Vec<Letter>> {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(Letter::parse)
        .collect()
}

fn has_both(w: &[Letter]) -> bool {
    w.contains(&Letter::X) && w.contains(&Letter::Y)
}

impl BiInfiniteWord {
    pub fn new(
        left: Vec<Letter>,
        core: Vec<Letter>,
        right: Vec<Letter>,
        anchor: (i64, i64),
    ) -> Result<Self> {
        if left.is_empty() || right.is_empty() {
            return Err(Error::Argument("periods must be nonempty".into()));
        }
        let w = BiInfiniteWord {
            left,
            core,
            right,
            anchor,
        };
        if !w.is_admissible() {
            return Err(Error::Admissibility(format!(
                "both periods of {w} need at least one x and one y"
            )));
        }
        Ok(w)
    }

    /// The purely periodic word `...ppp...` with letter 0 at `anchor`.
    pub fn periodic(period: &str, anchor: (i64, i64)) -> Result<Self> {
        let p = letters(period)?;
        Self::new(p.clone(), vec![], p, anchor)
    }

    pub fn with_anchor(&self, anchor: (i64, i64)) -> Self {
        BiInfiniteWord {
            anchor,
            ..self.clone()
        }
    }

    pub fn is_admissible(&self) -> bool {
        has_both(&self.left) && has_both(&self.right)
    }

    pub fn anchor(&self) -> (i64, i64) {
        self.anchor
    }

    pub fn core(&self) -> &[Letter] {
        &self.core
    }

    pub fn left_period(&self) -> &[Letter] {
        &self.left
    }

    pub fn right_period(&self) -> &[Letter] {
        &self.right
    }

    pub fn letter(&self, n: i64) -> Letter {
        let c = self.core.len() as i64;
        if n < 0 {
            self.left[n.rem_euclid(self.left.len() as i64) as usize]
        } else if n < c {
            self.core[n as usize]
        } else {
            self.right[(n - c).rem_euclid(self.right.len() as i64) as usize]
        }
    }

    /// The word read backwards with letters exchanged: its path is the
    /// mirror image of this one in the main diagonal.
    pub fn mirrored(&self) -> BiInfiniteWord {
        let flip = |w: &[Letter]| w.iter().rev().map(|l| l.swapped()).collect::<Vec<_>>();
        let end = crate::path::PathGeometry::new(self).point(self.core.len() as i64);
        BiInfiniteWord {
            left: flip(&self.right),
            core: flip(&self.core),
            right: flip(&self.left),
            anchor: (end.1, end.0),
        }
    }
}

impl FromStr for BiInfiniteWord {
    type Err = Error;

    /// Parses `"(L)* | core | (R)*"`, optionally followed by `@i,j` for the
    /// anchor. A bare period such as `"(xy)*"` means the purely periodic word.
    fn from_str(s: &str) -> Result<Self> {
        let (body, anchor) = match s.split_once('@') {
            Some((b, a)) => {
                let (i, j) = a
                    .split_once(',')
                    .ok_or_else(|| Error::Parse(format!("bad anchor {a:?}")))?;
                let i = i
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad anchor {a:?}")))?;
                let j = j
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad anchor {a:?}")))?;
                (b, (i, j))
            }
            None => (s, (0, 0)),
        };
        let period = |p: &str| -> Result<Vec<Letter>> {
            let p = p.trim();
            let inner = p
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(")*"))
                .ok_or_else(|| Error::Parse(format!("expected a period like (xy)*, got {p:?}")))?;
            letters(inner)
        };
        let parts: Vec<&str> = body.split('|').collect();
        match parts.as_slice() {
            [p] => {
                let p = period(p)?;
                Self::new(p.clone(), vec![], p, anchor)
            }
            [l, c, r] => Self::new(period(l)?, letters(c)?, period(r)?, anchor),
            _ => Err(Error::Parse(format!(
                "word {s:?} should read (L)* | core | (R)*"
            ))),
        }
    }
}

impl fmt::Display for BiInfiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |w: &[Letter]| w.iter().map(|l| l.to_string()).collect::<String>();
        write!(
            f,
            "({})*|{}|({})*",
            join(&self.left),
            join(&self.core),
            join(&self.right)
        )?;
        if self.anchor != (0, 0) {
            write!(f, "@{},{}", self.anchor.0, self.anchor.1)?;
        }
        Ok(())
    }
}

/// Letters of the free group on `x`, `y`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum GroupLetter {
    X,
    Y,
    XBar,
    YBar,
}

impl GroupLetter {
    pub fn inverse(self) -> GroupLetter {
        match self {
            GroupLetter::X => GroupLetter::XBar,
            GroupLetter::Y => GroupLetter::YBar,
            GroupLetter::XBar => GroupLetter::X,
            GroupLetter::YBar => GroupLetter::Y,
        }
    }
}

impl From<Letter> for GroupLetter {
    fn from(l: Letter) -> Self {
        match l {
            Letter::X => GroupLetter::X,
            Letter::Y => GroupLetter::Y,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct FreeGroupWord(pub Vec<GroupLetter>);

impl FreeGroupWord {
    pub fn empty() -> Self {
        FreeGroupWord(Vec::new())
    }

    pub fn from_letters(ls: impl IntoIterator<Item = Letter>) -> Self {
        FreeGroupWord(ls.into_iter().map(GroupLetter::from).collect())
    }

    pub fn letters(&self) -> &[GroupLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> FreeGroupWord {
        FreeGroupWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &FreeGroupWord) -> FreeGroupWord {
        FreeGroupWord(self.0.iter().chain(&other.0).copied().collect())
    }

    /// Cancels adjacent letter/inverse pairs.
    pub fn reduced(&self) -> FreeGroupWord {
        let mut out: Vec<GroupLetter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        FreeGroupWord(out)
    }
}

impl FromStr for FreeGroupWord {
    type Err = Error;

    /// Accepts `x`, `y`, and `X`/`Y` or `x̄`/`ȳ` for inverses.
    fn from_str(s: &str) -> Result<Self> {
        let mut out = Vec::new();
        for c in s.chars() {
            match c {
                'x' => out.push(GroupLetter::X),
                'y' => out.push(GroupLetter::Y),
                'X' => out.push(GroupLetter::XBar),
                'Y' => out.push(GroupLetter::YBar),
                '\u{304}' => {
                    let last = out
                        .pop()
                        .ok_or_else(|| Error::Parse("combining bar without letter".into()))?;
                    out.push(last.inverse());
                }
                c if c.is_whitespace() => {}
                other => return Err(Error::Parse(format!("unexpected letter {other:?}"))),
            }
        }
        Ok(FreeGroupWord(out))
    }
}

impl fmt::Display for FreeGroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                GroupLetter::X => "x",
                GroupLetter::Y => "y",
                GroupLetter::XBar => "x\u{304}",
                GroupLetter::YBar => "y\u{304}",
            })?;
        }
        Ok(())
    }
}
