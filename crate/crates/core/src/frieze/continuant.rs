//! Continuants and the 2x2 matrices `Y(t)`.

use num_traits::{One, Zero};

use crate::algebra::{ExactMatrix, Scalar};
use crate::error::{Error, Result};

/// `q_n(x_1, ..., x_n)` from `q_n = x_n q_{n-1} - q_{n-2}`, `q_{-1} = 0`,
/// `q_0 = 1`.
pub fn continuant(xs: &[Scalar]) -> Scalar {
    let (mut prev, mut cur) = (Scalar::zero(), Scalar::one());
    for x in xs {
        let next = x * &cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Continuant of signed order: `order >= 0` takes exactly `order` arguments,
/// `order = -1` gives 0, and `order <= -2` takes `-order - 2` arguments and
/// gives `-q(xs)`, which is what the recurrence produces when run backward.
pub fn continuant_ext(order: i64, xs: &[Scalar]) -> Result<Scalar> {
    let want = match order {
        o if o >= 0 => o,
        -1 => 0,
        o => -o - 2,
    };
    if xs.len() as i64 != want {
        return Err(Error::Argument(format!(
            "order {order} takes {want} arguments, got {}",
            xs.len()
        )));
    }
    Ok(match order {
        o if o >= 0 => continuant(xs),
        -1 => Scalar::zero(),
        _ => -continuant(xs),
    })
}

/// `Y(t) = [[0, -1], [1, t]]`.
pub fn y_matrix(t: &Scalar) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(2, 2);
    m.set(0, 1, -Scalar::one());
    m.set(1, 0, Scalar::one());
    m.set(1, 1, t.clone());
    m
}

pub fn y_product(ts: &[Scalar]) -> ExactMatrix {
    ts.iter().fold(ExactMatrix::identity(2), |acc, t| {
        acc.mul(&y_matrix(t)).expect("2x2 product")
    })
}

/// The scalar matrix `c Id` if `m` is one.
pub fn scalar_value(m: &ExactMatrix) -> Option<Scalar> {
    let c = m.get(0, 0).clone();
    let diag = m.rows() == m.cols()
        && (0..m.rows()).all(|i| {
            (0..m.cols()).all(|j| {
                if i == j {
                    m.get(i, j) == &c
                } else {
                    m.get(i, j).is_zero()
                }
            })
        });
    diag.then_some(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::int;
    use proptest::prelude::*;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn base_cases() {
        assert_eq!(continuant(&[]), int(1));
        assert_eq!(continuant(&v(&[7])), int(7));
        assert_eq!(continuant(&v(&[2, 2])), int(3));
        assert_eq!(continuant(&v(&[1, 1, 1])), int(-1));
    }

    #[test]
    fn negative_orders() {
        assert_eq!(continuant_ext(-1, &[]).unwrap(), int(0));
        assert_eq!(continuant_ext(-2, &[]).unwrap(), int(-1));
        assert_eq!(continuant_ext(-3, &v(&[5])).unwrap(), int(-5));
        assert_eq!(continuant_ext(2, &v(&[2, 2])).unwrap(), int(3));
        assert!(continuant_ext(2, &v(&[2])).is_err());
    }

    #[test]
    fn backward_recurrence_agrees() {
        // q_{n-2} = x_n q_{n-1} - q_n, read at n = 0 and n = -1
        let a = int(5);
        let q_m2 = int(0) * int(1) - int(1);
        assert_eq!(continuant_ext(-2, &[]).unwrap(), q_m2);
        assert_eq!(
            continuant_ext(-3, std::slice::from_ref(&a)).unwrap(),
            &a * int(-1) - int(0)
        );
    }

    #[test]
    fn small_identities() {
        let one = int(1);
        let y1 = y_matrix(&one);
        let cube = y_product(&[one.clone(), one.clone(), one.clone()]);
        assert_eq!(cube, ExactMatrix::identity(2).neg());
        assert_eq!(y1.mul(&y1).unwrap().mul(&y1).unwrap(), cube);
        assert_eq!(scalar_value(&y_product(&v(&[1, 2, 1, 2]))), Some(int(-1)));
        assert_eq!(y_product(&v(&[3, 1, 3])), y_product(&v(&[2, 2])));
        assert_eq!(
            y_product(&v(&[2, 2])),
            ExactMatrix::from_i64(&[&[-1, -2], &[2, 3]])
        );
        assert_eq!(scalar_value(&y_product(&v(&[2, 2]))), None);
    }

    #[test]
    fn y_n_from_y1_and_y2() {
        let y2 = y_matrix(&int(2));
        let base = y2.mul(&y_product(&v(&[1, 1]))).unwrap();
        for n in 2..=8i64 {
            let mut rhs = ExactMatrix::identity(2);
            for _ in 0..n - 2 {
                rhs = rhs.mul(&base).unwrap();
            }
            rhs = rhs.mul(&y2).unwrap();
            if n % 2 == 1 {
                rhs = rhs.neg();
            }
            assert_eq!(y_matrix(&int(n)), rhs, "n = {n}");
        }
    }

    proptest! {
        #[test]
        fn product_entries_are_continuants(xs in prop::collection::vec(1i64..9, 1..=7)) {
            let xs = v(&xs);
            let n = xs.len();
            let m = y_product(&xs);
            let inner = if n >= 2 { continuant(&xs[1..n - 1]) } else { Scalar::zero() };
            prop_assert_eq!(m.get(0, 0), &-inner);
            prop_assert_eq!(m.get(0, 1), &-continuant(&xs[1..]));
            prop_assert_eq!(m.get(1, 0), &continuant(&xs[..n - 1]));
            prop_assert_eq!(m.get(1, 1), &continuant(&xs));
        }
    }
}
