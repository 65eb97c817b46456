//! Shared fixtures for the benchmarks: deterministic element sets so runs
//! compare like against like.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use yokonuma::sample::{random_word, random_y_element};
use yokonuma::{FramedBraidWord, TowerElement, YElement, YParams};

pub fn element_pairs(d: u64, n: usize, count: usize) -> Vec<(YElement, YElement)> {
    let params = YParams::new(d, n).expect("valid parameters");
    let mut rng = ChaCha8Rng::seed_from_u64(0xBE0);
    (0..count)
        .map(|_| {
            (
                random_y_element(params, &mut rng, 3),
                random_y_element(params, &mut rng, 3),
            )
        })
        .collect()
}

pub fn elements(d: u64, n: usize, count: usize) -> Vec<YElement> {
    let params = YParams::new(d, n).expect("valid parameters");
    let mut rng = ChaCha8Rng::seed_from_u64(0xBE1);
    (0..count)
        .map(|_| random_y_element(params, &mut rng, 3))
        .collect()
}

pub fn words(n: usize, len: usize, count: usize) -> Vec<FramedBraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xBE2);
    (0..count).map(|_| random_word(n, len, &mut rng)).collect()
}

pub fn tower(p: u64, depth: u32, n: usize) -> TowerElement {
    let mut rng = ChaCha8Rng::seed_from_u64(0xBE3);
    let word = random_word(n, 8, &mut rng);
    TowerElement::from_word(&word, p, depth, n).expect("valid tower")
}
