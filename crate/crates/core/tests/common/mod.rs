#![allow(dead_code)]

use goldman_core::{are_conjugate, parse_element, ProjectiveMatrix, SubgroupSpec};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn w(s: &str) -> ProjectiveMatrix {
    parse_element(s).unwrap()
}

/// A random word over `S`, `T`, `T⁻¹` of length `1..=max_len`.
pub fn random_word(rng: &mut StdRng, max_len: usize) -> String {
    let len = rng.gen_range(1..=max_len);
    (0..len).map(|_| ['S', 'T', 't'][rng.gen_range(0..3)]).collect()
}

pub fn random_element(rng: &mut StdRng, max_len: usize) -> (String, ProjectiveMatrix) {
    let s = random_word(rng, max_len);
    let m = w(&s);
    (s, m)
}

pub fn random_hyperbolic_in(rng: &mut StdRng, max_len: usize, spec: &SubgroupSpec) -> (String, ProjectiveMatrix) {
    loop {
        let (s, m) = random_element(rng, max_len);
        if m.is_hyperbolic() && spec.is_member(&m) {
            return (s, m);
        }
    }
}

pub fn random_hyperbolic(rng: &mut StdRng, max_len: usize) -> (String, ProjectiveMatrix) {
    random_hyperbolic_in(rng, max_len, &SubgroupSpec::Full)
}

/// Two hyperbolic members of `spec` that are not conjugate in `spec`.
pub fn random_nonconjugate_pair(rng: &mut StdRng, max_len: usize, spec: &SubgroupSpec) -> (String, ProjectiveMatrix, String, ProjectiveMatrix) {
    loop {
        let (a, x) = random_hyperbolic_in(rng, max_len, spec);
        let (b, y) = random_hyperbolic_in(rng, max_len, spec);
        if are_conjugate(&x, &y, spec).unwrap().is_none() {
            return (a, x, b, y);
        }
    }
}
