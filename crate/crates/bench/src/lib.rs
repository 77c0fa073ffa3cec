//! Seeded input builders shared by the benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tolrel::{random_tolerance, Tolerance, Universe};

/// A reproducible random tolerance on `n` elements with the given edge
/// density.
pub fn seeded_tolerance(n: usize, edge_prob: f64, seed: u64) -> Tolerance {
    let universe = Universe::indexed("x", n).expect("nonempty universe");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_tolerance(&mut rng, &universe, edge_prob)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeding_is_reproducible() {
        let a = seeded_tolerance(32, 0.3, 9);
        let b = seeded_tolerance(32, 0.3, 9);
        assert_eq!(a, b);
        assert_ne!(a, seeded_tolerance(32, 0.3, 10));
    }
}
