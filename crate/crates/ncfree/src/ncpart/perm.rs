use std::fmt;

use super::Partition;
use crate::error::{domain, Result};

/// A permutation of `{1..n}`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// `images[i - 1]` is the image of `i`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut hit = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || std::mem::replace(&mut hit[x - 1], true) {
                return domain(format!("{images:?} is not a permutation of 1..={n}"));
            }
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self { images: (1..=n).collect() }
    }

    /// The long cycle `1 -> 2 -> ... -> n -> 1`.
    pub fn long_cycle(n: usize) -> Self {
        Self { images: (1..=n).map(|i| i % n + 1).collect() }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Self { images: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.n(), other.n(), "composing permutations of different degree");
        Self { images: other.images.iter().map(|&x| self.apply(x)).collect() }
    }

    /// The cycles as sorted blocks, ordered by minimum.
    pub fn cycle_blocks(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut blocks = Vec::new();
        for start in 1..=self.n() {
            if seen[start - 1] {
                continue;
            }
            let mut b = Vec::new();
            let mut x = start;
            while !seen[x - 1] {
                seen[x - 1] = true;
                b.push(x);
                x = self.apply(x);
            }
            b.sort_unstable();
            blocks.push(b);
        }
        blocks
    }

    /// The cycle partition; an error if it crosses.
    pub fn to_partition(&self) -> Result<Partition> {
        Partition::new(self.n(), self.cycle_blocks())
    }

    /// Each block `i_1 < ... < i_k` becomes the cycle `i_1 -> ... -> i_k -> i_1`.
    pub fn of_partition(pi: &Partition) -> Self {
        let mut images = vec![0; pi.n()];
        for b in pi.blocks() {
            for (k, &x) in b.iter().enumerate() {
                images[x - 1] = b[(k + 1) % b.len()];
            }
        }
        Self { images }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}
