//! Seeded pseudo-random number generator.
//!
//! The generator is splitmix64: a single 64-bit state advanced by a fixed
//! odd increment, with the output mixed through two xor-shift multiplies.
//! The algorithm is fully specified here so streams are reproducible across
//! platforms and releases; every randomized routine in the crate draws from
//! a `Prng` seeded explicitly by the caller.

/// Splitmix64 generator. Identical seeds produce identical streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prng {
    state: u64,
}

const GOLDEN_GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

impl Prng {
    pub fn new(seed: u64) -> Self {
        Prng { state: seed }
    }

    /// Next raw 64-bit output.
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform draw in `[0, 1)` with 53 bits of mantissa.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform draw in `[lo, hi)`.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    /// Uniform integer in `[0, n)`. Uses rejection sampling so the
    /// distribution is exact for every `n`.
    pub fn next_index(&mut self, n: usize) -> usize {
        assert!(n > 0, "next_index on empty range");
        let n = n as u64;
        let zone = u64::MAX - (u64::MAX % n);
        loop {
            let v = self.next_u64();
            if v < zone {
                return (v % n) as usize;
            }
        }
    }

    /// Standard normal draw via Box-Muller (two uniforms per pair,
    /// second value discarded to keep the stream layout simple).
    pub fn next_normal(&mut self) -> f64 {
        let u1 = loop {
            let u = self.next_f64();
            if u > 0.0 {
                break u;
            }
        };
        let u2 = self.next_f64();
        (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
    }

    /// Derive an independent sub-stream. Splitmix64 is designed for this:
    /// the child is seeded from the parent's next output.
    pub fn split(&mut self) -> Prng {
        Prng::new(self.next_u64())
    }

    /// Fisher-Yates shuffle driven by this generator.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.next_index(i + 1);
            items.swap(i, j);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let mut a = Prng::new(42);
        let mut b = Prng::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn fixed_seed_reference_values() {
        // Frozen outputs of splitmix64 with seed 0; these pin the stream
        // across platforms and releases.
        let mut p = Prng::new(0);
        assert_eq!(p.next_u64(), 0xe220a8397b1dcdaf);
        assert_eq!(p.next_u64(), 0x6e789e6aa1b965f4);
        assert_eq!(p.next_u64(), 0x06c45d188009454f);
    }

    #[test]
    fn uniform_mean_over_million_draws() {
        let mut p = Prng::new(7);
        let n = 1_000_000;
        let mean = (0..n).map(|_| p.next_f64()).sum::<f64>() / n as f64;
        assert!(mean > 0.499 && mean < 0.501, "mean = {mean}");
    }

    #[test]
    fn unit_range() {
        let mut p = Prng::new(3);
        for _ in 0..10_000 {
            let v = p.next_f64();
            assert!((0.0..1.0).contains(&v));
        }
    }

    #[test]
    fn split_streams_differ() {
        let mut parent = Prng::new(9);
        let mut a = parent.split();
        let mut b = parent.split();
        assert_ne!(a.next_u64(), b.next_u64());
    }

    #[test]
    fn next_index_covers_range() {
        let mut p = Prng::new(11);
        let mut seen = [false; 7];
        for _ in 0..1000 {
            seen[p.next_index(7)] = true;
        }
        assert!(seen.iter().all(|&s| s));
    }
}
