#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wsbound::{bundled, parse_model, CurveModel, NumericalSemigroup};

pub fn klein() -> CurveModel {
    parse_model(bundled::KLEIN_QUARTIC).unwrap()
}

pub fn genus6() -> CurveModel {
    parse_model(bundled::GENUS6_NEWTON).unwrap()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `count` semigroups with 2 to 4 coprime generators in `2..=30`, drawn
/// from a fixed seed.
pub fn random_corpus(count: usize, seed: u64) -> Vec<(Vec<i64>, NumericalSemigroup)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let k = rng.gen_range(2..=4);
        let mut gens: Vec<i64> = (0..k).map(|_| rng.gen_range(2..=30)).collect();
        gens.sort_unstable();
        gens.dedup();
        if gens.iter().fold(0, |g, &x| gcd(g, x)) != 1 {
            continue;
        }
        let h = NumericalSemigroup::from_generators(&gens).unwrap();
        out.push((gens, h));
    }
    out
}
