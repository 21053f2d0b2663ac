//! Fixtures shared by the benchmarks.

use hexchain_core::CodeWord;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed;

/// A reproducible random chain of `n` hexagons.
pub fn random_code(n: usize, seed: u64) -> CodeWord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ n as u64);
    CodeWord::random(n, &mut rng).expect("n >= 1")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_is_deterministic() {
        assert_eq!(random_code(50, SEED), random_code(50, SEED));
        assert_eq!(random_code(50, SEED).n(), 50);
        assert_eq!(random_code(1, SEED).n(), 1);
    }
}
