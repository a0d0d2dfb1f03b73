use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{words_up_to, NCSeries, Word, MAX_DEGREE};
use crate::error::Result;
use crate::gaussian::GaussianRational;

/// Dense tables above this many slots fall back to hashing.
const DENSE_LIMIT: u128 = 1 << 22;

/// Slot lookup for a word given as (length, base-`nvars` index, letters).
pub(crate) enum Slots {
    Dense { offsets: Vec<u128>, slots: Vec<u32> },
    Packed(HashMap<(usize, u128), u32>),
    Letters(HashMap<Vec<u8>, u32>),
}

impl Slots {
    #[inline]
    fn get(&self, len: usize, idx: u128, letters: &[u8]) -> u32 {
        match self {
            Slots::Dense { offsets, slots } => slots[(offsets[len] + idx) as usize],
            Slots::Packed(m) => m.get(&(len, idx)).copied().unwrap_or(0),
            Slots::Letters(m) => m.get(letters).copied().unwrap_or(0),
        }
    }
}

fn pack(nvars: usize, letters: &[u8]) -> u128 {
    letters.iter().fold(0u128, |acc, &l| acc.wrapping_mul(nvars as u128).wrapping_add(l as u128 - 1))
}

/// Coefficients over a common denominator, as Gaussian integers.
pub(crate) struct Scaled {
    nvars: usize,
    slots: Slots,
    denom: BigInt,
    small: Option<Vec<(i128, i128)>>,
    big: Vec<(BigInt, BigInt)>,
}

impl Scaled {
    pub(crate) fn new(s: &NCSeries) -> Self {
        Self::with_dense(s, true)
    }

    fn with_dense(s: &NCSeries, allow_dense: bool) -> Self {
        let denom = s.coeffs.values().flat_map(|c| [c.re().denom(), c.im().denom()]).fold(BigInt::one(), |acc, d| acc.lcm(d));
        let scale = |r: &BigRational| r.numer() * (&denom / r.denom());
        let terms: Vec<(&Word, (BigInt, BigInt))> = s.coeffs.iter().map(|(w, c)| (w, (scale(c.re()), scale(c.im())))).collect();
        let big: Vec<(BigInt, BigInt)> = terms.iter().map(|(_, v)| v.clone()).collect();
        let small = big.iter().map(|(a, b)| Some((i128::try_from(a).ok()?, i128::try_from(b).ok()?))).collect::<Option<Vec<_>>>();
        let words = terms.iter().map(|(w, _)| w.letters());
        let slots = build_slots(s.nvars, s.degree_cap, words, allow_dense);
        Scaled { nvars: s.nvars, slots, denom, small, big }
    }
}

fn build_slots<'w>(nvars: usize, cap: usize, words: impl Iterator<Item = &'w [u8]>, allow_dense: bool) -> Slots {
    // offsets[k] = number of words shorter than k
    let mut offsets = vec![0u128; cap + 2];
    let mut size = Some(0u128);
    let mut block = 1u128;
    for offset in offsets.iter_mut().skip(1).take(cap) {
        block = match block.checked_mul(nvars as u128) {
            Some(b) => b,
            None => {
                size = None;
                break;
            }
        };
        *offset = size.unwrap_or(0);
        size = size.and_then(|s| s.checked_add(block));
    }
    match size {
        None => Slots::Letters(words.zip(1u32..).map(|(w, i)| (w.to_vec(), i)).collect()),
        Some(total) if allow_dense && total <= DENSE_LIMIT => {
            let mut slots = vec![0u32; total as usize + 1];
            for (w, i) in words.zip(1u32..) {
                slots[(offsets[w.len()] + pack(nvars, w)) as usize] = i;
            }
            Slots::Dense { offsets, slots }
        }
        Some(_) => Slots::Packed(words.zip(1u32..).map(|(w, i)| ((w.len(), pack(nvars, w)), i)).collect()),
    }
}

/// Gaussian integers with overflow reported as `None`.
trait Ring: Clone {
    fn one() -> Self;
    fn zero() -> Self;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn add(&self, o: &Self) -> Option<Self>;
}

impl Ring for (i128, i128) {
    fn one() -> Self {
        (1, 0)
    }
    fn zero() -> Self {
        (0, 0)
    }
    #[inline]
    fn mul(&self, o: &Self) -> Option<Self> {
        if self.1 == 0 && o.1 == 0 {
            return Some((self.0.checked_mul(o.0)?, 0));
        }
        let re = self.0.checked_mul(o.0)?.checked_sub(self.1.checked_mul(o.1)?)?;
        let im = self.0.checked_mul(o.1)?.checked_add(self.1.checked_mul(o.0)?)?;
        Some((re, im))
    }
    #[inline]
    fn add(&self, o: &Self) -> Option<Self> {
        Some((self.0.checked_add(o.0)?, self.1.checked_add(o.1)?))
    }
}

impl Ring for (BigInt, BigInt) {
    fn one() -> Self {
        (BigInt::one(), BigInt::zero())
    }
    fn zero() -> Self {
        (BigInt::zero(), BigInt::zero())
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        if self.1.is_zero() && o.1.is_zero() {
            return Some((&self.0 * &o.0, BigInt::zero()));
        }
        Some((&self.0 * &o.0 - &self.1 * &o.1, &self.0 * &o.1 + &self.1 * &o.0))
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some((&self.0 + &o.0, &self.1 + &o.1))
    }
}

/// Depth-first walk over NC(k), one block at a time, smallest free element first.
///
/// `prev` holds π⁻¹ so that K(π)(x) = prev[x + 1 mod k]; a cycle of K started at
/// its minimum runs through the block in increasing order.
struct Walk<'a, R> {
    w: &'a [u8],
    nvars: u128,
    f: (&'a Slots, &'a [R]),
    g: (&'a Slots, &'a [R]),
    assigned: u64,
    prev: [u8; MAX_DEGREE],
    block: [u8; MAX_DEGREE],
    letters: [u8; MAX_DEGREE],
    sums: Vec<R>,
    overflow: bool,
}

impl<'a, R: Ring> Walk<'a, R> {
    fn full(&self) -> u64 {
        if self.w.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.w.len()) - 1
        }
    }

    fn next_block(&mut self, depth: usize, acc: &R) {
        if self.overflow {
            return;
        }
        if self.assigned == self.full() {
            self.leaf(depth, acc);
            return;
        }
        let u = (!self.assigned).trailing_zeros() as usize;
        let above = self.assigned.checked_shr(u as u32 + 1).unwrap_or(0);
        let limit = if above == 0 { self.w.len() } else { u + 1 + above.trailing_zeros() as usize };
        let base = self.assigned.count_ones() as usize;
        self.block[base] = u as u8;
        self.letters[base] = self.w[u];
        self.extend(base, 1, limit, (self.w[u] - 1) as u128, depth, acc);
    }

    /// The open block sits at `block[base..base + blen]`; deeper blocks stack above it.
    fn extend(&mut self, base: usize, blen: usize, limit: usize, idx: u128, depth: usize, acc: &R) {
        let slot = self.f.0.get(blen, idx, &self.letters[base..base + blen]);
        if slot != 0 {
            match acc.mul(&self.f.1[slot as usize - 1]) {
                Some(p) => {
                    let mut bits = 0u64;
                    for i in 0..blen {
                        let x = self.block[base + i];
                        bits |= 1 << x;
                        self.prev[self.block[base + (i + 1) % blen] as usize] = x;
                    }
                    self.assigned |= bits;
                    self.next_block(depth + 1, &p);
                    self.assigned &= !bits;
                }
                None => self.overflow = true,
            }
        }
        let last = self.block[base + blen - 1] as usize;
        for x in last + 1..limit {
            if self.overflow {
                return;
            }
            self.block[base + blen] = x as u8;
            self.letters[base + blen] = self.w[x];
            let next = idx.wrapping_mul(self.nvars).wrapping_add((self.w[x] - 1) as u128);
            self.extend(base, blen + 1, limit, next, depth, acc);
        }
    }

    fn leaf(&mut self, depth: usize, acc: &R) {
        let k = self.w.len();
        let mut seen = 0u64;
        let mut prod = acc.clone();
        let mut letters = [0u8; MAX_DEGREE];
        for s in 0..k {
            if seen >> s & 1 == 1 {
                continue;
            }
            let (mut x, mut len, mut idx) = (s, 0usize, 0u128);
            loop {
                seen |= 1 << x;
                letters[len] = self.w[x];
                len += 1;
                idx = idx.wrapping_mul(self.nvars).wrapping_add((self.w[x] - 1) as u128);
                x = self.prev[(x + 1) % k] as usize;
                if x == s {
                    break;
                }
            }
            let slot = self.g.0.get(len, idx, &letters[..len]);
            if slot == 0 {
                return;
            }
            match prod.mul(&self.g.1[slot as usize - 1]) {
                Some(p) => prod = p,
                None => {
                    self.overflow = true;
                    return;
                }
            }
        }
        match self.sums[depth].add(&prod) {
            Some(s) => self.sums[depth] = s,
            None => self.overflow = true,
        }
    }
}

/// Sums of `Π f · Π g` over NC(k), bucketed by the number of blocks of π.
fn bucket_sums<R: Ring>(w: &[u8], nvars: usize, f: (&Slots, &[R]), g: (&Slots, &[R])) -> Option<Vec<R>> {
    let mut walk = Walk {
        w,
        nvars: nvars as u128,
        f,
        g,
        assigned: 0,
        prev: [0; MAX_DEGREE],
        block: [0; MAX_DEGREE],
        letters: [0; MAX_DEGREE],
        sums: vec![R::zero(); w.len() + 1],
        overflow: false,
    };
    walk.next_block(0, &R::one());
    (!walk.overflow).then_some(walk.sums)
}

/// `Σ_{π ∈ NC(k)} coef_π(f) · coef_{K(π)}(g)` for one nonempty word.
pub(crate) fn star_coefficient(f: &Scaled, g: &Scaled, w: &[u8]) -> GaussianRational {
    let k = w.len();
    let fast = match (&f.small, &g.small) {
        (Some(a), Some(b)) => bucket_sums(w, f.nvars, (&f.slots, a), (&g.slots, b))
            .map(|s| s.into_iter().map(|(x, y)| (BigInt::from(x), BigInt::from(y))).collect()),
        _ => None,
    };
    let sums =
        fast.unwrap_or_else(|| bucket_sums(w, f.nvars, (&f.slots, &f.big), (&g.slots, &g.big)).expect("bigint arithmetic cannot overflow"));
    // π with j blocks pairs with K(π) having k + 1 - j blocks.
    let mut total = GaussianRational::zero();
    for (j, (re, im)) in sums.into_iter().enumerate() {
        if re.is_zero() && im.is_zero() {
            continue;
        }
        let d = num_traits::pow(f.denom.clone(), j) * num_traits::pow(g.denom.clone(), k + 1 - j);
        total += GaussianRational::new(BigRational::new(re, d.clone()), BigRational::new(im, d));
    }
    total
}

impl NCSeries {
    /// The boxed convolution `f ⋆ g`.
    ///
    /// ```
    /// use ncfree::ncseries::{moeb_series, sum_series, zeta_series};
    /// let z = zeta_series(2, 4).unwrap();
    /// let m = moeb_series(2, 4).unwrap();
    /// assert_eq!(z.boxstar(&m).unwrap(), sum_series(2, 4).unwrap());
    /// ```
    pub fn boxstar(&self, g: &NCSeries) -> Result<NCSeries> {
        self.same_shape(g)?;
        let mut out = NCSeries::zero(self.nvars, self.degree_cap)?;
        if self.is_zero() || g.is_zero() {
            return Ok(out);
        }
        let (ft, gt) = (Scaled::new(self), Scaled::new(g));
        let all: Vec<Vec<u8>> = words_up_to(self.nvars, self.degree_cap).collect();
        out.coeffs = all
            .into_par_iter()
            .filter_map(|w| {
                let c = star_coefficient(&ft, &gt, &w);
                (!c.is_zero()).then_some((Word(w), c))
            })
            .collect();
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{moeb_series, sum_series, zeta_series};
    use super::*;
    use crate::ncpart::{enumerate_nc, kreweras};

    /// `⋆` evaluated through the public, list-based API.
    fn boxstar_by_list(f: &NCSeries, g: &NCSeries) -> NCSeries {
        let mut out = NCSeries::zero(f.nvars(), f.degree_cap()).unwrap();
        for w in words_up_to(f.nvars(), f.degree_cap()) {
            let mut c = GaussianRational::zero();
            for pi in enumerate_nc(w.len()).unwrap() {
                let a = f.coef_partition(&w, &pi).unwrap();
                let b = g.coef_partition(&w, &kreweras(&pi)).unwrap();
                c += &(&a * &b);
            }
            out.set(&w, c).unwrap();
        }
        out
    }

    fn sample(nvars: usize, cap: usize, seed: i64) -> NCSeries {
        let terms = words_up_to(nvars, cap).enumerate().filter_map(|(k, w)| {
            let v = (k as i64 * 7 + seed * 13) % 5 - 2;
            (v != 0).then(|| (w, GaussianRational::ratio(v, (k as i64 % 3) + 1)))
        });
        NCSeries::from_terms(nvars, cap, terms).unwrap()
    }

    #[test]
    fn walker_route_matches_list_route() {
        for (n, d) in [(1, 6), (2, 5), (3, 3)] {
            let f = sample(n, d, 1);
            let g = sample(n, d, 2);
            assert_eq!(f.boxstar(&g).unwrap(), boxstar_by_list(&f, &g));
        }
    }

    #[test]
    fn sparse_table_agrees_with_dense() {
        let f = sample(2, 5, 3);
        let g = sample(2, 5, 4);
        let dense = (Scaled::new(&f), Scaled::new(&g));
        let sparse = (Scaled::with_dense(&f, false), Scaled::with_dense(&g, false));
        for w in words_up_to(2, 5) {
            assert_eq!(star_coefficient(&dense.0, &dense.1, &w), star_coefficient(&sparse.0, &sparse.1, &w));
        }
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let huge = GaussianRational::new(
            BigRational::new(BigInt::from(10).pow(30u32), BigInt::from(7)),
            BigRational::from_integer(BigInt::from(3)),
        );
        let f = sample(2, 4, 1).scale(&huge);
        let g = sample(2, 4, 2).scale(&huge);
        assert!(Scaled::new(&f).small.is_some());
        assert_eq!(f.boxstar(&g).unwrap(), boxstar_by_list(&f, &g));
    }

    #[test]
    fn letter_keys_for_huge_alphabets() {
        let f = NCSeries::from_terms(200, 20, [(vec![7], GaussianRational::from_int(2)), (vec![7, 150], GaussianRational::ratio(1, 3))])
            .unwrap();
        let g = NCSeries::from_terms(200, 20, [(vec![7], GaussianRational::from_int(5)), (vec![150], GaussianRational::one())]).unwrap();
        let (ft, gt) = (Scaled::new(&f), Scaled::new(&g));
        assert!(matches!(ft.slots, Slots::Letters(_)));
        for w in [vec![7u8], vec![7, 150], vec![150, 7], vec![7, 7, 150]] {
            let mut expect = GaussianRational::zero();
            for pi in enumerate_nc(w.len()).unwrap() {
                expect += &(&f.coef_partition(&w, &pi).unwrap() * &g.coef_partition(&w, &kreweras(&pi)).unwrap());
            }
            assert_eq!(star_coefficient(&ft, &gt, &w), expect);
        }
    }

    #[test]
    fn unit_and_inverse() {
        let f = sample(2, 5, 5);
        let s = sum_series(2, 5).unwrap();
        assert_eq!(f.boxstar(&s).unwrap(), f);
        assert_eq!(s.boxstar(&f).unwrap(), f);
        let z = zeta_series(2, 5).unwrap();
        let m = moeb_series(2, 5).unwrap();
        assert_eq!(z.boxstar(&m).unwrap(), s);
        assert_eq!(m.boxstar(&z).unwrap(), s);
    }

    #[test]
    fn z_star_z_is_z() {
        let z = NCSeries::from_terms(1, 6, [(vec![1], GaussianRational::one())]).unwrap();
        assert_eq!(z.boxstar(&z).unwrap(), z);
    }

    #[test]
    fn noncommutative_in_two_variables() {
        let f = sample(2, 3, 1);
        let g = sample(2, 3, 2);
        assert_ne!(f.boxstar(&g).unwrap(), g.boxstar(&f).unwrap());
        let (f1, g1) = (sample(1, 6, 1), sample(1, 6, 2));
        assert_eq!(f1.boxstar(&g1).unwrap(), g1.boxstar(&f1).unwrap());
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let a = NCSeries::zero(1, 3).unwrap();
        assert!(a.boxstar(&NCSeries::zero(1, 4).unwrap()).is_err());
        assert!(a.boxstar(&NCSeries::zero(2, 3).unwrap()).is_err());
    }
}
