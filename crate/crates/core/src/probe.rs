//! Seeded random probe polynomials.

use crate::poly::Poly;
use crate::rational::qi;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random polynomial of total degree ≤ `degree` in the first `active`
/// variables, small integer coefficients.
pub fn random_poly(rng: &mut ChaCha8Rng, nvars: usize, active: usize, degree: u32) -> Poly {
    let mut terms = Vec::new();
    let nterms = rng.gen_range(1..=4);
    for _ in 0..nterms {
        let mut e = vec![0u32; nvars];
        let d = rng.gen_range(0..=degree);
        for _ in 0..d {
            e[rng.gen_range(0..active)] += 1;
        }
        terms.push((e, qi(rng.gen_range(-3..=3))));
    }
    let p = Poly::from_terms(nvars, terms);
    if p.is_zero() {
        Poly::one(nvars)
    } else {
        p
    }
}

pub fn probes(seed: u64, count: usize, nvars: usize, active: usize, degree: u32) -> Vec<Poly> {
    let mut r = rng(seed);
    (0..count).map(|_| random_poly(&mut r, nvars, active, degree)).collect()
}
