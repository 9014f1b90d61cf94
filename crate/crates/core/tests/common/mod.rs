#![allow(dead_code)]

use pascal_det::exactalg::{rat, MPoly, Var};
use pascal_det::matrix::RingMatrix;
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Sparse polynomials in `x`, `rho`, `a` with small integer coefficients.
pub fn poly_strategy() -> impl Strategy<Value = MPoly> {
    prop::collection::vec((-5i64..=5, 0u32..3, 0u32..3, 0u32..2), 0..5).prop_map(|terms| {
        terms.into_iter().fold(MPoly::zero(), |acc, (c, i, j, k)| {
            let m = &(&MPoly::var(Var::X).pow(i) * &MPoly::var(Var::Rho).pow(j)) * &MPoly::var(Var::A).pow(k);
            &acc + &m.scale(&rat(c))
        })
    })
}

pub fn nonzero_poly_strategy() -> impl Strategy<Value = MPoly> {
    poly_strategy().prop_filter("nonzero", |p| !p.is_zero())
}

pub fn random_int_matrix(rng: &mut ChaCha8Rng, dim: usize, lo: i64, hi: i64) -> RingMatrix {
    let rows = (0..dim)
        .map(|_| (0..dim).map(|_| rng.gen_range(lo..=hi)).collect())
        .collect::<Vec<Vec<i64>>>();
    RingMatrix::from_ints(&rows)
}
