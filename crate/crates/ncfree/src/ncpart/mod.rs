//! Non-crossing partitions of `{1..n}`, their permutation encoding and the
//! Kreweras complement.

mod enumerate;
mod kreweras;
mod parity;
mod perm;

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};

pub use enumerate::{catalan, count_nc, enumerate_nc, MAX_GROUND_SET};
pub use kreweras::{interlace_noncrossing, kreweras, kreweras_inverse, relative_kreweras};
pub use parity::{
    count_intervals, has_odd_block, has_odd_gap_block, interval_count_formula, interval_to_pprsv, intervals, is_parity_alternating,
    is_parity_preserving, pprsv_to_interval, relative_complement_via_2n, IntervalPair,
};
pub use perm::Permutation;

/// A non-crossing partition of `{1..n}` in canonical form: elements ascend
/// inside each block and blocks ascend by their minimum.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Validates and canonicalizes `blocks` as a non-crossing partition of `{1..n}`.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let blocks = canonicalize(n, blocks)?;
        if !noncrossing_canonical(n, &blocks) {
            return domain(format!("{} is crossing", Self { n, blocks }));
        }
        Ok(Self { n, blocks })
    }

    /// Caller guarantees canonical form and non-crossing.
    pub(crate) fn from_canonical(n: usize, blocks: Vec<Vec<usize>>) -> Self {
        debug_assert!(canonicalize(n, blocks.clone()).as_ref() == Ok(&blocks));
        debug_assert!(noncrossing_canonical(n, &blocks));
        Self { n, blocks }
    }

    /// Builds from 0-based blocks already in canonical order.
    pub(crate) fn from_blocks0(n: usize, blocks: &[Vec<usize>]) -> Self {
        Self::from_canonical(n, blocks.iter().map(|b| b.iter().map(|&x| x + 1).collect()).collect())
    }

    /// The partition into singletons, the minimum of NC(n).
    pub fn singletons(n: usize) -> Self {
        Self { n, blocks: (1..=n).map(|i| vec![i]).collect() }
    }

    /// The one-block partition, the maximum of NC(n).
    pub fn full(n: usize) -> Self {
        Self { n, blocks: vec![(1..=n).collect()] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Block sizes, sorted ascending.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.blocks.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    }

    /// `labels[i - 1]` is the index of the block holding `i`.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.n];
        for (k, b) in self.blocks.iter().enumerate() {
            for &x in b {
                labels[x - 1] = k;
            }
        }
        labels
    }

    /// The block containing `i` (1-based).
    pub fn block_of(&self, i: usize) -> Option<&[usize]> {
        self.blocks.iter().find(|b| b.binary_search(&i).is_ok()).map(Vec::as_slice)
    }

    pub fn same_block(&self, i: usize, j: usize) -> bool {
        self.block_of(i).is_some_and(|b| b.binary_search(&j).is_ok())
    }

    /// Refinement order: every block of `rho` is a union of blocks of `self`.
    pub fn refines(&self, rho: &Partition) -> Result<bool> {
        if self.n != rho.n {
            return domain(format!("ground sets differ: {} vs {}", self.n, rho.n));
        }
        let labels = rho.labels();
        Ok(self.blocks.iter().all(|b| b.iter().all(|&x| labels[x - 1] == labels[b[0] - 1])))
    }

    /// The image under `i -> i + k (mod n)`.
    pub fn rotate(&self, k: usize) -> Self {
        let n = self.n;
        let blocks = self.blocks.iter().map(|b| b.iter().map(|&x| (x - 1 + k) % n + 1).collect()).collect();
        Self::from_canonical(n, canonicalize(n, blocks).expect("rotation is a bijection"))
    }

    /// Restricts to a union of blocks, relabelled in increasing order.
    pub(crate) fn restrict(&self, support: &[usize]) -> Self {
        let pos = |x: usize| support.binary_search(&x).expect("support is a union of blocks") + 1;
        let blocks =
            self.blocks.iter().filter(|b| support.binary_search(&b[0]).is_ok()).map(|b| b.iter().map(|&x| pos(x)).collect()).collect();
        Self::from_canonical(support.len(), blocks)
    }

    /// The Kreweras complement.
    pub fn kreweras(&self) -> Partition {
        kreweras(self)
    }

    /// The permutation with each block as one increasing cycle.
    pub fn perm(&self) -> Permutation {
        Permutation::of_partition(self)
    }
}

/// Sorts and validates that `blocks` partition `{1..n}`.
fn canonicalize(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Vec<Vec<usize>>> {
    if n == 0 {
        return domain("ground set must be non-empty");
    }
    let mut seen = vec![false; n];
    for b in &mut blocks {
        if b.is_empty() {
            return domain("empty block");
        }
        b.sort_unstable();
        for &x in b.iter() {
            if x == 0 || x > n {
                return domain(format!("element {x} outside 1..={n}"));
            }
            if std::mem::replace(&mut seen[x - 1], true) {
                return domain(format!("element {x} appears twice"));
            }
        }
    }
    if let Some(missing) = seen.iter().position(|s| !s) {
        return domain(format!("element {} is not covered", missing + 1));
    }
    blocks.sort_unstable_by_key(|b| b[0]);
    Ok(blocks)
}

/// Stack scan: when revisiting a block it must be the most recently opened
/// block that is still unfinished.
fn noncrossing_canonical(n: usize, blocks: &[Vec<usize>]) -> bool {
    let mut label = vec![0usize; n];
    let mut last = vec![0usize; blocks.len()];
    for (k, b) in blocks.iter().enumerate() {
        for &x in b {
            label[x - 1] = k;
        }
        last[k] = *b.last().expect("non-empty");
    }
    let mut open: Vec<usize> = Vec::new();
    for x in 1..=n {
        let k = label[x - 1];
        let first = blocks[k][0] == x;
        if !first && open.last() != Some(&k) {
            return false;
        }
        if first && last[k] != x {
            open.push(k);
        } else if !first && last[k] == x {
            open.pop();
        }
    }
    true
}

/// True iff `blocks` (a set partition of `{1..n}`) has no crossing.
pub fn is_noncrossing(blocks: &[Vec<usize>], n: usize) -> Result<bool> {
    let blocks = canonicalize(n, blocks.to_vec())?;
    Ok(noncrossing_canonical(n, &blocks))
}

/// Refinement order `pi <= rho`.
pub fn refinement_leq(pi: &Partition, rho: &Partition) -> Result<bool> {
    pi.refines(rho)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            f.write_str("{")?;
            for (k, x) in b.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses the literal form `{1,4,5}{2,3}{6,8}{7}`; `n` is the largest element.
pub(crate) fn parse_blocks(s: &str) -> Result<Vec<Vec<usize>>> {
    let bad = |why: &str| Error::Parse(format!("partition literal {s:?}: {why}"));
    let mut blocks = Vec::new();
    let mut rest = s.trim();
    if rest.is_empty() {
        return Err(bad("empty"));
    }
    while !rest.is_empty() {
        let inner = rest.strip_prefix('{').ok_or_else(|| bad("expected '{'"))?;
        let close = inner.find('}').ok_or_else(|| bad("unclosed block"))?;
        let block =
            inner[..close].split(',').map(|t| t.trim().parse::<usize>().map_err(|_| bad("bad element"))).collect::<Result<Vec<_>>>()?;
        blocks.push(block);
        rest = inner[close + 1..].trim_start();
    }
    Ok(blocks)
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let blocks = parse_blocks(s)?;
        let n = blocks.iter().flatten().copied().max().unwrap_or(0);
        Partition::new(n, blocks)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// Brute-force crossing test straight from the definition.
    pub(crate) fn crossing_quadruple(n: usize, blocks: &[Vec<usize>]) -> bool {
        let mut label = vec![0; n + 1];
        for (k, b) in blocks.iter().enumerate() {
            for &x in b {
                label[x] = k;
            }
        }
        for a in 1..=n {
            for b in a + 1..=n {
                for c in b + 1..=n {
                    for d in c + 1..=n {
                        if label[a] == label[c] && label[b] == label[d] && label[a] != label[b] {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    /// Every set partition of `{1..n}` via restricted growth strings.
    pub(crate) fn all_set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
        fn go(i: usize, n: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
            if i > n {
                out.push(cur.clone());
                return;
            }
            for k in 0..cur.len() {
                cur[k].push(i);
                go(i + 1, n, cur, out);
                cur[k].pop();
            }
            cur.push(vec![i]);
            go(i + 1, n, cur, out);
            cur.pop();
        }
        let mut out = Vec::new();
        go(1, n, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn crossing_examples() {
        assert!(!is_noncrossing(&[vec![1, 3], vec![2, 4]], 4).unwrap());
        assert!(is_noncrossing(&[vec![1, 4], vec![2, 3]], 4).unwrap());
        assert!(is_noncrossing(&[vec![1, 4, 5], vec![2, 3], vec![6, 8], vec![7]], 8).unwrap());
    }

    #[test]
    fn stack_scan_matches_quadruple_search() {
        for n in 1..=7 {
            for p in all_set_partitions(n) {
                assert_eq!(is_noncrossing(&p, n).unwrap(), !crossing_quadruple(n, &p), "{p:?}");
            }
        }
    }

    #[test]
    fn invalid_partitions_rejected() {
        assert!(is_noncrossing(&[vec![1, 2]], 3).is_err());
        assert!(is_noncrossing(&[vec![1, 2], vec![2, 3]], 3).is_err());
        assert!(is_noncrossing(&[vec![1], vec![]], 1).is_err());
        assert!(Partition::new(0, vec![]).is_err());
        assert!("{1,3}{2,4}".parse::<Partition>().is_err());
    }

    #[test]
    fn literal_roundtrip_is_canonical() {
        let p: Partition = "{7}{6,8}{2,3}{5,4,1}".parse().unwrap();
        assert_eq!(p.to_string(), "{1,4,5}{2,3}{6,8}{7}");
        assert!("{1,2".parse::<Partition>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
    }

    #[test]
    fn refinement_examples() {
        let rho: Partition = "{1,2}{3}".parse().unwrap();
        assert!(Partition::singletons(3).refines(&rho).unwrap());
        assert!(rho.refines(&rho).unwrap());
        let a: Partition = "{1,2}{3}".parse().unwrap();
        let b: Partition = "{1}{2,3}".parse().unwrap();
        assert!(!a.refines(&b).unwrap());
        assert!(a.refines(&Partition::full(2)).is_err());
    }

    #[test]
    fn rotation_by_n_is_identity() {
        let p: Partition = "{1,4,5}{2,3}{6,8}{7}".parse().unwrap();
        assert_eq!(p.rotate(8), p);
        assert_eq!(p.rotate(1).to_string(), "{1,7}{2,5,6}{3,4}{8}");
    }
}
