//! Bitset oracle for r-fold sumsets, independent of the core order
//! table: layer r holds every sum of exactly r generators, computed by
//! shift-or convolution, and ord(h) is the largest r whose layer
//! contains h.

/// Layered bitsets of generator sums up to a fixed limit.
#[derive(Debug, Clone)]
pub struct FoldOracle {
    limit: u64,
    // layers[r-1] = bitset of sums of exactly r generators, truncated
    // to 0..=limit.
    layers: Vec<Vec<u64>>,
}

fn words_for(limit: u64) -> usize {
    (limit / 64 + 1) as usize
}

fn get_bit(bits: &[u64], i: u64) -> bool {
    bits[(i / 64) as usize] & (1u64 << (i % 64)) != 0
}

fn set_bit(bits: &mut [u64], i: u64) {
    bits[(i / 64) as usize] |= 1u64 << (i % 64);
}

/// dst |= src << k, truncated to dst's length.
fn shl_or(dst: &mut [u64], src: &[u64], k: u64) {
    let word = (k / 64) as usize;
    let bit = k % 64;
    for i in (0..src.len()).rev() {
        if src[i] == 0 {
            continue;
        }
        if let Some(slot) = dst.get_mut(i + word) {
            *slot |= src[i] << bit;
        }
        if bit > 0 {
            if let Some(slot) = dst.get_mut(i + word + 1) {
                *slot |= src[i] >> (64 - bit);
            }
        }
    }
}

impl FoldOracle {
    /// Builds all layers for sums of the given positive generators,
    /// keeping values ≤ limit.
    pub fn new(gens: &[u64], limit: u64) -> Self {
        assert!(!gens.is_empty() && gens.iter().all(|&g| g > 0));
        let words = words_for(limit);
        let mut first = vec![0u64; words];
        for &g in gens {
            if g <= limit {
                set_bit(&mut first, g);
            }
        }
        let mut layers = vec![first];
        loop {
            let prev = layers.last().unwrap();
            let mut next = vec![0u64; words];
            for &g in gens {
                shl_or(&mut next, prev, g);
            }
            // Mask tail bits past the limit.
            let spare = 63 - (limit % 64);
            if let Some(last) = next.last_mut() {
                *last &= u64::MAX >> spare;
            }
            if next.iter().all(|&w| w == 0) {
                return FoldOracle { limit, layers };
            }
            layers.push(next);
        }
    }

    /// Largest number of positive generator summands for h, or None
    /// when h is not a sum at all. ord(0) = 0.
    pub fn ord(&self, h: u64) -> Option<u64> {
        assert!(h <= self.limit, "oracle built only up to {}", self.limit);
        if h == 0 {
            return Some(0);
        }
        (1..=self.layers.len() as u64)
            .rev()
            .find(|&r| get_bit(&self.layers[(r - 1) as usize], h))
    }

    /// Whether h is a sum of generators (0 included as the empty sum).
    pub fn contains(&self, h: u64) -> bool {
        self.ord(h).is_some()
    }

    /// The largest value the oracle covers.
    pub fn limit(&self) -> u64 {
        self.limit
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_hand_values() {
        let o = FoldOracle::new(&[4, 5, 11], 200);
        assert_eq!(o.ord(0), Some(0));
        assert_eq!(o.ord(1), None);
        assert_eq!(o.ord(4), Some(1));
        assert_eq!(o.ord(11), Some(1));
        assert_eq!(o.ord(9), Some(2)); // 4+5
        assert_eq!(o.ord(15), Some(3)); // 5+5+5 beats 4+11
        assert_eq!(o.ord(20), Some(5)); // 4·5 beats 5·4
        assert!(o.contains(15));
        assert!(!o.contains(7));
    }

    #[test]
    fn layer_truncation_is_safe_at_word_boundaries() {
        // limit exactly on a word edge exercises the tail mask.
        let o = FoldOracle::new(&[63, 64, 65], 128);
        assert_eq!(o.ord(63), Some(1));
        assert_eq!(o.ord(126), Some(2));
        assert_eq!(o.ord(128), Some(2));
        assert_eq!(o.ord(127), Some(2));
        assert_eq!(o.ord(62), None);
    }
}
