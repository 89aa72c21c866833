#![allow(dead_code)]

use hepta::{gen_random, HeptaBands, Rational};
use num_traits::Zero;
use proptest::prelude::*;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Random integer bands with `zeros` of `g_1 .. g_{n-3}` forced to zero.
pub fn with_zero_g(n: usize, seed: u64, zeros: usize) -> HeptaBands<Rational> {
    let h = gen_random(n, seed).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let picks = sample(&mut rng, n - 3, zeros.min(n - 3));
    picks.into_iter().fold(h, |h, i| h.with_g(i + 1, Rational::zero()))
}

pub fn bands(n: std::ops::RangeInclusive<usize>, max_zeros: usize) -> impl Strategy<Value = HeptaBands<Rational>> {
    (n, any::<u64>(), 0..=max_zeros).prop_map(|(n, seed, zeros)| with_zero_g(n, seed, zeros))
}

pub fn q(s: &str) -> Rational {
    hepta::parse_rational(s).unwrap()
}

/// Random integer bands with every `g_i` nonzero (zeros are replaced by 1).
pub fn nonzero_g(n: usize, seed: u64) -> HeptaBands<Rational> {
    let h = gen_random(n, seed).unwrap();
    let one = Rational::from_integer(1.into());
    h.zero_super_diagonals()
        .into_iter()
        .fold(h, |h, i| h.with_g(i, one.clone()))
}

pub fn nonzero_bands(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = HeptaBands<Rational>> {
    (n, any::<u64>()).prop_map(|(n, seed)| nonzero_g(n, seed))
}
