//! Seeded random inputs for property checks and the command line. The same
//! seed always gives the same data.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::scalar::{int, ratio};
use crate::algebra::{ExactMatrix, Scalar};
use crate::linearization::{IndexedFamily, LinearizationData};
use crate::tiling::{wild_sl2, Tiling};

fn small(rng: &mut ChaCha8Rng) -> Scalar {
    ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3)).expect("nonzero denominator")
}

/// Unimodular integer matrix: a product of elementary matrices.
pub fn unimodular(k: usize, rng: &mut ChaCha8Rng) -> ExactMatrix {
    let mut m = ExactMatrix::identity(k);
    for _ in 0..2 * k {
        let (a, b) = (rng.gen_range(0..k), rng.gen_range(0..k));
        if a == b {
            continue;
        }
        let c = rng.gen_range(-2..=2);
        let e = ExactMatrix::from_fn(k, k, |i, j| {
            if i == j {
                int(1)
            } else if (i, j) == (a, b) {
                int(c)
            } else {
                int(0)
            }
        });
        m = m.mul(&e).expect("square");
    }
    m
}

/// Data with a unimodular seed at the origin and small rational
/// coefficients for indices `k..k + span` in both families.
pub fn random_linearization(k: usize, span: usize, seed: u64) -> LinearizationData {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s = unimodular(k, &mut rng).to_rows();
    let family = |rng: &mut ChaCha8Rng| {
        let rows = (0..span)
            .map(|_| (0..k - 1).map(|_| small(rng)).collect())
            .collect();
        IndexedFamily::new(k as i64, rows, false)
    };
    let lambda = family(&mut rng);
    let gamma = family(&mut rng);
    LinearizationData {
        k,
        s,
        lambda,
        gamma,
        anchor: (0, 0),
    }
}

/// Wild SL2-tiling with free entries drawn from `1..=9` for the blocks
/// `1..=blocks` in each direction.
pub fn random_wild_sl2(blocks: i64, seed: u64) -> Tiling {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut x = BTreeMap::new();
    for s in 1..=blocks {
        for t in 1..=blocks {
            x.insert((s, t), int(rng.gen_range(1..=9)));
        }
    }
    wild_sl2(x)
}
