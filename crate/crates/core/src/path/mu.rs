//! The matrix morphism on the free group and its corner entries.
//!
//! `N` is the nilpotent upper shift (`N[i][i+1] = 1`), `mu(x) = Id + N`,
//! `mu(y) = Id + N^tr`; barred letters map to the (integral) inverses.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::word::{FreeGroupWord, GroupLetter};
use crate::algebra::matrix::ExactMatrix;
use crate::algebra::scalar::{self, Scalar};

fn shift(k: usize, transpose: bool) -> ExactMatrix {
    ExactMatrix::from_fn(k, k, |i, j| {
        let hit = if transpose { i == j + 1 } else { j == i + 1 };
        if hit {
            scalar::one()
        } else {
            scalar::zero()
        }
    })
}

/// `sum_i (sign N)^i`, exact since `N` is nilpotent.
fn neumann(n: &ExactMatrix, sign: i64) -> ExactMatrix {
    let k = n.rows();
    let step = n.scale(&scalar::int(sign));
    let mut out = ExactMatrix::identity(k);
    let mut pow = ExactMatrix::identity(k);
    for _ in 1..k {
        pow = pow.mul(&step).expect("square");
        out = add(&out, &pow);
    }
    out
}

fn add(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    ExactMatrix::from_fn(a.rows(), a.cols(), |i, j| a.get(i, j) + b.get(i, j))
}

fn letter_matrix(l: GroupLetter, k: usize, prime: bool) -> ExactMatrix {
    let (n, bar) = match l {
        GroupLetter::X => (shift(k, false), false),
        GroupLetter::Y => (shift(k, true), false),
        GroupLetter::XBar => (shift(k, false), true),
        GroupLetter::YBar => (shift(k, true), true),
    };
    match (prime, bar) {
        (false, false) => add(&ExactMatrix::identity(k), &n),
        (false, true) => neumann(&n, -1),
        // mu'(x) = (Id - N)^-1 and mu'(x̄) = Id - N
        (true, false) => neumann(&n, 1),
        (true, true) => add(&ExactMatrix::identity(k), &n.neg()),
    }
}

fn product(g: &FreeGroupWord, k: usize, prime: bool) -> ExactMatrix {
    g.letters().iter().fold(ExactMatrix::identity(k), |m, &l| {
        m.mul(&letter_matrix(l, k, prime)).expect("square")
    })
}

/// `mu(g)` as a `k x k` integer matrix.
pub fn mu(g: &FreeGroupWord, k: usize) -> ExactMatrix {
    product(g, k, false)
}

/// The variant with `mu'(x) = (Id - N)^-1`, `mu'(y) = (Id - N^tr)^-1`.
pub fn mu_prime(g: &FreeGroupWord, k: usize) -> ExactMatrix {
    product(g, k, true)
}

/// `v <- v (Id +- N)` (`upper`) or `v (Id +- N^tr)`, using old entries.
fn unipotent(v: &mut [BigInt], upper: bool, add: bool) {
    let k = v.len();
    let idx: Vec<usize> = if upper {
        (1..k).rev().collect()
    } else {
        (0..k.saturating_sub(1)).collect()
    };
    for c in idx {
        let t = if upper {
            v[c - 1].clone()
        } else {
            v[c + 1].clone()
        };
        if add {
            v[c] += t;
        } else {
            v[c] -= t;
        }
    }
}

/// `v <- v (Id -+ N)^-1` (or with `N^tr`): a running sweep over new entries.
fn inverse_unipotent(v: &mut [BigInt], upper: bool, add: bool) {
    let k = v.len();
    let idx: Vec<usize> = if upper {
        (1..k).collect()
    } else {
        (0..k.saturating_sub(1)).rev().collect()
    };
    for c in idx {
        let t = if upper {
            v[c - 1].clone()
        } else {
            v[c + 1].clone()
        };
        if add {
            v[c] += t;
        } else {
            v[c] -= t;
        }
    }
}

/// Applies one letter to a row vector: `v <- v mu(l)`, or `v mu'(l)`.
fn apply(v: &mut [BigInt], l: GroupLetter, prime: bool) {
    let upper = matches!(l, GroupLetter::X | GroupLetter::XBar);
    let barred = matches!(l, GroupLetter::XBar | GroupLetter::YBar);
    match (prime, barred) {
        (false, false) => unipotent(v, upper, true),
        (false, true) => inverse_unipotent(v, upper, false),
        (true, false) => inverse_unipotent(v, upper, true),
        (true, true) => unipotent(v, upper, false),
    }
}

/// `e_k mu(g) e_k^tr` in `O(|g| k)` big-integer operations.
pub fn corner(g: &[GroupLetter], k: usize) -> BigInt {
    corner_with(g, k, false)
}

/// `e_k mu'(g) e_k^tr`.
pub fn corner_prime(g: &[GroupLetter], k: usize) -> BigInt {
    corner_with(g, k, true)
}

fn corner_with(g: &[GroupLetter], k: usize, prime: bool) -> BigInt {
    assert!(k > 0, "order must be positive");
    let mut v = vec![BigInt::zero(); k];
    v[k - 1] = BigInt::one();
    for &l in g {
        apply(&mut v, l, prime);
    }
    v.swap_remove(k - 1)
}

pub fn corner_scalar(g: &FreeGroupWord, k: usize) -> Scalar {
    Scalar::from_integer(corner(g.letters(), k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> FreeGroupWord {
        s.parse().unwrap()
    }

    #[test]
    fn small_products() {
        assert_eq!(mu(&w("xy"), 2), ExactMatrix::from_i64(&[&[2, 1], &[1, 1]]));
        assert!(mu(&FreeGroupWord::empty(), 4).is_identity());
        assert_eq!(mu(&w("xXy"), 3), mu(&w("y"), 3));
        assert_eq!(
            mu(&w("X"), 3),
            ExactMatrix::from_i64(&[&[1, -1, 1], &[0, 1, -1], &[0, 0, 1]])
        );
    }

    #[test]
    fn figure_corners() {
        assert_eq!(corner(w("xxyyxxyy").letters(), 4), BigInt::from(6));
        assert_eq!(corner(w("yyxx").letters(), 4), BigInt::from(6));
        assert_eq!(corner(w("YYXX").letters(), 4), BigInt::from(30));
        assert_eq!(corner_prime(w("yyxx").letters(), 4), BigInt::from(30));
    }

    fn group_word() -> impl Strategy<Value = FreeGroupWord> {
        proptest::collection::vec(0u8..4, 0..12).prop_map(|v| {
            FreeGroupWord(
                v.into_iter()
                    .map(|c| {
                        [
                            GroupLetter::X,
                            GroupLetter::Y,
                            GroupLetter::XBar,
                            GroupLetter::YBar,
                        ][c as usize]
                    })
                    .collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn morphism_and_fast_corner(a in group_word(), b in group_word(), k in 1usize..6) {
            let ab = mu(&a.concat(&b), k);
            prop_assert_eq!(&ab, &mu(&a, k).mul(&mu(&b, k)).unwrap());
            prop_assert!(mu(&a.concat(&a.inverse()), k).is_identity());
            let m = mu(&a, k);
            prop_assert_eq!(&Scalar::from_integer(corner(a.letters(), k)), m.get(k - 1, k - 1));
            prop_assert_eq!(Scalar::from_integer(corner_prime(a.letters(), k)), mu_prime(&a, k).get(k - 1, k - 1).clone());
        }

        #[test]
        fn barred_words_match_prime(a in proptest::collection::vec(0u8..2, 0..12), k in 1usize..6) {
            let plain = FreeGroupWord(a.iter().map(|&c| if c == 0 { GroupLetter::X } else { GroupLetter::Y }).collect());
            let barred = FreeGroupWord(plain.letters().iter().map(|l| l.inverse()).collect());
            prop_assert_eq!(corner(barred.letters(), k), corner_prime(plain.letters(), k));
        }
    }
}
