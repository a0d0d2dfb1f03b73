//! The ε-dependent circle of markers and the complementation maps `C_Q`, `C_R`.
//!
//! Markers sit on ordinal slots `0..2m` of a circle. Two chords cross iff
//! their endpoints interleave, so everything stays exact.

mod sums;

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};
use crate::ncpart::{is_noncrossing, Partition};

pub use sums::{layout_sum, verify_eq72_73, x_moment_sum, y_moment_sum, ProductMoments};

/// A string `(l_1, …, l_m)` over `{1, 2}` with `l_1 = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EpsString(Vec<u8>);

impl EpsString {
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        if letters.first() != Some(&1) {
            return domain("ε must start with 1");
        }
        if letters.iter().any(|&l| l != 1 && l != 2) {
            return domain("ε is a string over {1, 2}");
        }
        Ok(EpsString(letters))
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn m(&self) -> usize {
        self.0.len()
    }

    /// Number of 1's.
    pub fn n(&self) -> usize {
        self.0.iter().filter(|&&l| l == 1).count()
    }

    /// As many 1's as 2's.
    pub fn is_balanced(&self) -> bool {
        2 * self.n() == self.m()
    }

    /// `λ_i = -1` where `l_i = 1` and `+1` where `l_i = 2`.
    pub fn lambdas(&self) -> Vec<i8> {
        self.0.iter().map(|&l| if l == 1 { -1 } else { 1 }).collect()
    }

    /// Every string of length `m` starting with 1.
    pub fn all(m: usize) -> impl Iterator<Item = EpsString> {
        let tails = if m == 0 { 0 } else { 1usize << (m - 1) };
        (0..tails).map(move |bits| EpsString(std::iter::once(1).chain((0..m - 1).map(|k| 1 + ((bits >> k) & 1) as u8)).collect()))
    }

    /// The balanced strings of length `m`.
    pub fn balanced(m: usize) -> impl Iterator<Item = EpsString> {
        Self::all(m).filter(EpsString::is_balanced)
    }
}

impl FromStr for EpsString {
    type Err = Error;

    /// Digits, e.g. `"1212"`; commas and spaces are ignored.
    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .filter(|c| !matches!(c, ',' | ' ' | '(' | ')'))
            .map(|c| match c {
                '1' => Ok(1),
                '2' => Ok(2),
                _ => Err(Error::Parse(format!("bad ε letter {c:?}"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        EpsString::new(letters)
    }
}

impl fmt::Display for EpsString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|l| write!(f, "{l}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Marker {
    P(usize),
    Q(usize),
}

/// Markers in clockwise order from `P_1`; indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircularLayout {
    eps: EpsString,
    order: Vec<Marker>,
    p_slot: Vec<usize>,
    q_slot: Vec<usize>,
    red: Vec<usize>,
}

/// `Q_i` follows `P_i` when `l_i = 1` and precedes it when `l_i = 2`.
///
/// ```
/// use ncfree::epscomp::{build_layout, EpsString, Marker::*};
/// let l = build_layout(&"12".parse::<EpsString>().unwrap());
/// assert_eq!(l.order(), &[P(1), Q(1), Q(2), P(2)]);
/// ```
pub fn build_layout(eps: &EpsString) -> CircularLayout {
    let m = eps.m();
    let mut order = Vec::with_capacity(2 * m);
    for (k, &l) in eps.letters().iter().enumerate() {
        let (p, q) = (Marker::P(k + 1), Marker::Q(k + 1));
        if l == 1 {
            order.extend([p, q]);
        } else {
            order.extend([q, p]);
        }
    }
    let (mut p_slot, mut q_slot) = (vec![0; m], vec![0; m]);
    for (s, mk) in order.iter().enumerate() {
        match *mk {
            Marker::P(i) => p_slot[i - 1] = s,
            Marker::Q(i) => q_slot[i - 1] = s,
        }
    }
    let red = (1..=m).filter(|&i| eps.letters()[i - 1] == 1).collect();
    CircularLayout { eps: eps.clone(), order, p_slot, q_slot, red }
}

impl CircularLayout {
    pub fn eps(&self) -> &EpsString {
        &self.eps
    }

    pub fn order(&self) -> &[Marker] {
        &self.order
    }

    pub fn p_slot(&self, i: usize) -> usize {
        self.p_slot[i - 1]
    }

    pub fn q_slot(&self, i: usize) -> usize {
        self.q_slot[i - 1]
    }

    /// `red()[j-1]` is the `i` with `R_j = Q_i`.
    pub fn red(&self) -> &[usize] {
        &self.red
    }

    /// The `Q`'s strictly between `P_i` and `P_{i+1}` (cyclically).
    pub fn arc(&self, i: usize) -> Vec<usize> {
        let len = self.order.len();
        (1..len)
            .map(|d| self.order[(self.p_slot(i) + d) % len])
            .take_while(|mk| matches!(mk, Marker::Q(_)))
            .map(|mk| match mk {
                Marker::Q(j) => j,
                Marker::P(_) => unreachable!(),
            })
            .collect()
    }

    /// Whether some two-point block of `sigma` draws a chord between slots
    /// `a` and `b`. Singletons draw nothing.
    fn separated(&self, sigma: &Partition, a: usize, b: usize) -> bool {
        let (lo, hi) = (a.min(b), a.max(b));
        sigma.blocks().iter().filter(|blk| blk.len() >= 2).any(|blk| {
            let inside = blk.iter().filter(|&&h| (lo + 1..hi).contains(&self.p_slot(h))).count();
            inside != 0 && inside != blk.len()
        })
    }

    fn relation(&self, sigma: &Partition, slots: &[usize]) -> Vec<Vec<bool>> {
        let k = slots.len();
        (0..k).map(|i| (0..k).map(|j| i == j || !self.separated(sigma, slots[i], slots[j])).collect()).collect()
    }

    fn red_slots(&self) -> Vec<usize> {
        self.red.iter().map(|&i| self.q_slot(i)).collect()
    }

    /// The non-separation relations on the `Q`'s and on the `R`'s are
    /// both transitive.
    pub fn relations_transitive(&self, sigma: &Partition) -> bool {
        [self.relation(sigma, &self.q_slot), self.relation(sigma, &self.red_slots())].iter().all(|rel| {
            let k = rel.len();
            (0..k).all(|a| (0..k).all(|b| !rel[a][b] || (0..k).all(|c| !rel[b][c] || rel[a][c])))
        })
    }

    /// Classes of "no chord of `sigma` separates them" over the given slots.
    ///
    /// # Panics
    /// If the relation is not transitive.
    fn complement(&self, sigma: &Partition, slots: &[usize]) -> Result<Partition> {
        if sigma.n() != self.eps.m() {
            return domain(format!("partition of {} points against ε of length {}", sigma.n(), self.eps.m()));
        }
        let rel = self.relation(sigma, slots);
        let k = slots.len();
        let mut label = vec![usize::MAX; k];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for i in 0..k {
            if label[i] == usize::MAX {
                for j in (i..k).filter(|&j| rel[i][j]) {
                    label[j] = blocks.len();
                }
                blocks.push((i..k).filter(|&j| rel[i][j]).map(|j| j + 1).collect());
            }
        }
        for i in 0..k {
            for j in 0..k {
                assert_eq!(rel[i][j], label[i] == label[j], "complement relation is not transitive for {sigma} on ε = {}", self.eps);
            }
        }
        Partition::new(k, blocks)
    }

    /// `C_Q(σ)` on `{1..m}`.
    pub fn cq(&self, sigma: &Partition) -> Result<Partition> {
        self.complement(sigma, &self.q_slot)
    }

    /// `C_R(σ)` on `{1..n}`, indexed by red labels.
    pub fn cr(&self, sigma: &Partition) -> Result<Partition> {
        self.complement(sigma, &self.red_slots())
    }

    /// `σ` on the `P` slots together with `τ` on the `Q` slots is non-crossing.
    pub fn compatible(&self, sigma: &Partition, tau: &Partition) -> bool {
        let blocks: Vec<Vec<usize>> = sigma
            .blocks()
            .iter()
            .map(|b| b.iter().map(|&h| self.p_slot(h) + 1).collect())
            .chain(tau.blocks().iter().map(|b| b.iter().map(|&i| self.q_slot(i) + 1).collect()))
            .collect();
        is_noncrossing(&blocks, self.order.len()).expect("a set partition of the slots")
    }
}

/// `C_Q(σ)` for the layout of `eps`.
pub fn cq(sigma: &Partition, eps: &EpsString) -> Result<Partition> {
    build_layout(eps).cq(sigma)
}

/// `C_R(σ)` for the layout of `eps`.
pub fn cr(sigma: &Partition, eps: &EpsString) -> Result<Partition> {
    build_layout(eps).cr(sigma)
}

fn restrict(eps: &EpsString, block: &[usize]) -> Vec<u8> {
    block.iter().map(|&i| eps.letters()[i - 1]).collect()
}

/// Consecutive elements of every block (cyclically) carry different letters.
///
/// # Panics
/// If this disagrees with "every restriction is `(1,2,…,1,2)` or `(2,1,…,2,1)`".
pub fn is_eps_alternating(sigma: &Partition, eps: &EpsString) -> bool {
    let cyclic = sigma.blocks().iter().all(|b| {
        let w = restrict(eps, b);
        (0..w.len()).all(|k| w[k] != w[(k + 1) % w.len()])
    });
    let shaped = sigma.blocks().iter().all(|b| {
        let w = restrict(eps, b);
        w.len() % 2 == 0 && w.windows(2).all(|p| p[0] != p[1])
    });
    assert_eq!(cyclic, shaped, "two readings of ε-alternation disagree on {sigma}, ε = {eps}");
    cyclic
}

/// Some rotation of `w` alternates and `w` has odd length.
fn odd_rotated_alternating(w: &[u8]) -> bool {
    let k = w.len();
    k % 2 == 1 && (0..k).any(|r| (0..k - 1).all(|j| w[(r + j) % k] != w[(r + j + 1) % k]))
}

/// ε-alternating iff no singletons, no odd block reading as a rotated
/// alternating word, and `C_Q(σ)` has only even blocks. Returns whether the
/// two sides agree.
pub fn verify_prop_811(sigma: &Partition, eps: &EpsString) -> Result<bool> {
    if !eps.is_balanced() {
        return domain(format!("ε = {eps} is not balanced"));
    }
    let lhs = is_eps_alternating(sigma, eps);
    let no_singleton = sigma.blocks().iter().all(|b| b.len() >= 2);
    let no_odd_alt = sigma.blocks().iter().all(|b| !odd_rotated_alternating(&restrict(eps, b)));
    let even_cq = cq(sigma, eps)?.blocks().iter().all(|b| b.len() % 2 == 0);
    Ok(lhs == (no_singleton && no_odd_alt && even_cq))
}

#[cfg(test)]
mod tests;
