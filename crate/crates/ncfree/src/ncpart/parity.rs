use num_bigint::BigUint;
use num_traits::One;

use super::{enumerate_nc, kreweras, kreweras_inverse, Partition};
use crate::error::{domain, Result};

fn even_ground_set(sigma: &Partition) -> Result<()> {
    if sigma.n() % 2 != 0 {
        return domain(format!("{sigma} lives on an odd ground set"));
    }
    Ok(())
}

/// `i - Perm(sigma)(i)` is odd for every `i`. Cross-checked against the
/// block-size description (all blocks even).
pub fn is_parity_alternating(sigma: &Partition) -> Result<bool> {
    even_ground_set(sigma)?;
    let perm = sigma.perm();
    let by_perm = (1..=sigma.n()).all(|i| i.abs_diff(perm.apply(i)) % 2 == 1);
    let by_blocks = sigma.blocks().iter().all(|b| b.len() % 2 == 0);
    assert_eq!(by_perm, by_blocks, "parity descriptions disagree on {sigma}");
    Ok(by_perm)
}

/// `i - Perm(sigma)(i)` is even for every `i`. Cross-checked against the
/// description "every block lies inside the odds or inside the evens".
pub fn is_parity_preserving(sigma: &Partition) -> Result<bool> {
    even_ground_set(sigma)?;
    let perm = sigma.perm();
    let by_perm = (1..=sigma.n()).all(|i| i.abs_diff(perm.apply(i)) % 2 == 0);
    let by_blocks = sigma.blocks().iter().all(|b| b.iter().all(|&x| x % 2 == b[0] % 2));
    assert_eq!(by_perm, by_blocks, "parity descriptions disagree on {sigma}");
    Ok(by_perm)
}

/// A pair `lower <= upper` in NC(n).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntervalPair {
    lower: Partition,
    upper: Partition,
}

impl std::fmt::Display for IntervalPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} ≤ {}", self.lower, self.upper)
    }
}

impl IntervalPair {
    pub fn new(lower: Partition, upper: Partition) -> Result<Self> {
        if !lower.refines(&upper)? {
            return domain(format!("{lower} is not below {upper}"));
        }
        Ok(Self { lower, upper })
    }

    pub fn lower(&self) -> &Partition {
        &self.lower
    }

    pub fn upper(&self) -> &Partition {
        &self.upper
    }

    pub fn n(&self) -> usize {
        self.lower.n()
    }
}

/// Every interval of NC(n).
pub fn intervals(n: usize) -> Result<Vec<IntervalPair>> {
    let all = enumerate_nc(n)?;
    let mut out = Vec::new();
    for rho in &all {
        for pi in &all {
            if pi.refines(rho)? {
                out.push(IntervalPair { lower: pi.clone(), upper: rho.clone() });
            }
        }
    }
    Ok(out)
}

/// Number of intervals of NC(n), by enumeration.
pub fn count_intervals(n: usize) -> Result<usize> {
    Ok(intervals(n)?.len())
}

/// `(3n)! / (n! (2n+1)!)`.
pub fn interval_count_formula(n: usize) -> BigUint {
    let fact = |k: usize| (1..=k).fold(BigUint::one(), |acc, x| acc * BigUint::from(x));
    fact(3 * n) / (fact(n) * fact(2 * n + 1))
}

/// Sends `(pi, rho)` to the parity-preserving partition of `{1..2n}` carrying
/// `pi` on the evens (`i -> 2i`) and `K^{-1}(rho)` on the odds (`i -> 2i-1`).
pub fn interval_to_pprsv(pair: &IntervalPair) -> Partition {
    let odd = kreweras_inverse(&pair.upper);
    let mut blocks: Vec<Vec<usize>> = pair.lower.blocks().iter().map(|b| b.iter().map(|&x| 2 * x).collect()).collect();
    blocks.extend(odd.blocks().iter().map(|b| b.iter().map(|&x| 2 * x - 1).collect()));
    Partition::new(2 * pair.n(), blocks).expect("the interval bijection lands in NC(2n)")
}

/// Inverse of [`interval_to_pprsv`].
pub fn pprsv_to_interval(sigma: &Partition) -> Result<IntervalPair> {
    if !is_parity_preserving(sigma)? {
        return domain(format!("{sigma} is not parity-preserving"));
    }
    let n = sigma.n() / 2;
    let half = |parity: usize| -> Vec<Vec<usize>> {
        sigma.blocks().iter().filter(|b| b[0] % 2 == parity).map(|b| b.iter().map(|&x| x.div_ceil(2)).collect()).collect()
    };
    let lower = Partition::new(n, half(0))?;
    let odd = Partition::new(n, half(1))?;
    IntervalPair::new(lower, kreweras(&odd))
}

/// `K_rho(pi)` computed through NC(2n): the blocks of `K(sigma)` intersected
/// with the evens and halved, where `sigma` is [`interval_to_pprsv`].
pub fn relative_complement_via_2n(pair: &IntervalPair) -> Partition {
    let tau = kreweras(&interval_to_pprsv(pair));
    let blocks: Vec<Vec<usize>> = tau
        .blocks()
        .iter()
        .map(|b| b.iter().filter(|&&x| x % 2 == 0).map(|&x| x / 2).collect::<Vec<_>>())
        .filter(|b| !b.is_empty())
        .collect();
    Partition::new(pair.n(), blocks).expect("halved blocks form a partition")
}

/// Some block has odd size.
pub fn has_odd_block(pi: &Partition) -> bool {
    pi.blocks().iter().any(|b| b.len() % 2 == 1)
}

/// Some block is a singleton, or has odd size at least 3 with every
/// difference between consecutive elements odd.
pub fn has_odd_gap_block(pi: &Partition) -> bool {
    pi.blocks().iter().any(|b| b.len() == 1 || (b.len() % 2 == 1 && b.windows(2).all(|w| (w[1] - w[0]) % 2 == 1)))
}
