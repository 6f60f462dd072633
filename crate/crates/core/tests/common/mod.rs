//! Seeded random data shared by the integration tests.
#![allow(dead_code)]

use manin::catalog::{default_samples, CatalogEntry};
use manin::exact::Rational;
use manin::liealg::{Matrix3, StructureConstants};
use manin::manin::ManinTriple;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x6269_616c_6762;

pub fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}

pub fn small(rng: &mut impl Rng, lo: i64, hi: i64) -> Rational {
    Rational::from(rng.random_range(lo..=hi))
}

/// Invertible matrix with integer entries in `-2..=2`.
pub fn invertible(rng: &mut impl Rng) -> Matrix3 {
    loop {
        let m = Matrix3::from_fn(|_, _| small(rng, -2, 2));
        if !m.det().is_zero() {
            return m;
        }
    }
}

/// Antisymmetric tensor with independent entries in `lo..=hi`.
pub fn antisymmetric(rng: &mut impl Rng, lo: i64, hi: i64) -> StructureConstants<Rational> {
    let rows = std::array::from_fn(|_| std::array::from_fn(|_| small(rng, lo, hi)));
    StructureConstants::from_cyclic(rows)
}

/// A catalog entry at one of its default samples, moved to a random basis.
pub fn valid_pair(rng: &mut impl Rng, list: &[CatalogEntry]) -> ManinTriple<Rational> {
    let e = list.choose(rng).expect("nonempty catalog");
    let s = default_samples(e).choose(rng).cloned().expect("at least one sample");
    let t = e.instantiate(&s).expect("default samples are admissible");
    t.transform(&invertible(rng)).expect("invertible")
}
