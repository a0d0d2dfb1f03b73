use num_bigint::BigUint;
use num_traits::One;

use super::Partition;
use crate::error::{domain, Result};

/// Largest ground set accepted by [`enumerate_nc`]; |NC(12)| = 208012.
pub const MAX_GROUND_SET: usize = 12;

/// Depth-first walk over NC(n), blocks generated in order of their minimum
/// (the block of the first element, then recursively the next unassigned
/// element). Positions are 0-based.
///
/// `weight(block, acc)` is called as soon as a block is complete and returns
/// the updated accumulator, or `None` to prune every partition containing
/// that block. `visit` receives the canonical block list of each surviving
/// partition with its accumulator.
pub(crate) fn walk_nc<T, W, V>(n: usize, one: T, mut weight: W, mut visit: V)
where
    W: FnMut(&[usize], &T) -> Option<T>,
    V: FnMut(&[Vec<usize>], &T),
{
    let mut walker = Walker { n, assigned: vec![false; n], blocks: Vec::new() };
    walker.step(&one, &mut weight, &mut visit);
}

struct Walker {
    n: usize,
    assigned: Vec<bool>,
    blocks: Vec<Vec<usize>>,
}

impl Walker {
    fn step<T, W, V>(&mut self, acc: &T, weight: &mut W, visit: &mut V)
    where
        W: FnMut(&[usize], &T) -> Option<T>,
        V: FnMut(&[Vec<usize>], &T),
    {
        let Some(u) = self.assigned.iter().position(|a| !a) else {
            visit(&self.blocks, acc);
            return;
        };
        // The new block may not leave the gap of any earlier block that
        // contains u; everything strictly between u and `limit` is free.
        let limit = self.blocks.iter().filter_map(|b| b.get(b.partition_point(|&x| x < u)).copied()).min().unwrap_or(self.n);
        let mut block = vec![u];
        self.extend(&mut block, u + 1, limit, acc, weight, visit);
    }

    fn extend<T, W, V>(&mut self, block: &mut Vec<usize>, from: usize, limit: usize, acc: &T, weight: &mut W, visit: &mut V)
    where
        W: FnMut(&[usize], &T) -> Option<T>,
        V: FnMut(&[Vec<usize>], &T),
    {
        if let Some(next) = weight(block, acc) {
            for &x in block.iter() {
                self.assigned[x] = true;
            }
            self.blocks.push(block.clone());
            self.step(&next, weight, visit);
            self.blocks.pop();
            for &x in block.iter() {
                self.assigned[x] = false;
            }
        }
        for x in from..limit {
            block.push(x);
            self.extend(block, x + 1, limit, acc, weight, visit);
            block.pop();
        }
    }
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 || n > MAX_GROUND_SET {
        return domain(format!("ground set size {n} outside 1..={MAX_GROUND_SET}"));
    }
    Ok(())
}

/// Every non-crossing partition of `{1..n}`, each exactly once.
///
/// The order is deterministic: partitions are generated by choosing the block
/// of 1 first, then recursing into the remaining gaps.
///
/// ```
/// use ncfree::ncpart::enumerate_nc;
/// assert_eq!(enumerate_nc(4).unwrap().len(), 14);
/// ```
pub fn enumerate_nc(n: usize) -> Result<Vec<Partition>> {
    check_size(n)?;
    let mut out = Vec::new();
    walk_nc(n, (), |_, _| Some(()), |blocks, _| out.push(Partition::from_blocks0(n, blocks)));
    Ok(out)
}

/// |NC(n)| by walking the lattice without materializing it.
pub fn count_nc(n: usize) -> Result<usize> {
    check_size(n)?;
    let mut count = 0;
    walk_nc(n, (), |_, _| Some(()), |_, _| count += 1);
    Ok(count)
}

/// The Catalan number `(2n)! / (n! (n+1)!)`.
pub fn catalan(n: usize) -> BigUint {
    // C_{k+1} = C_k * 2(2k+1) / (k+2)
    let mut c = BigUint::one();
    for k in 0..n {
        c = c * BigUint::from(2 * (2 * k + 1)) / BigUint::from(k + 2);
    }
    c
}
