use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use crate::error::Result;
use crate::gaussian::GaussianRational;
use crate::ncseries::{words, words_up_to, NCSeries};

/// Words of length `1..=max_len` grouped into rotation classes; each class
/// lists its distinct rotations, smallest first.
pub fn necklaces(nvars: usize, max_len: usize) -> Vec<Vec<Vec<u8>>> {
    let mut out = Vec::new();
    for k in 1..=max_len {
        let mut seen = HashSet::new();
        for w in words(nvars, k) {
            if seen.contains(&w) {
                continue;
            }
            let mut class: Vec<Vec<u8>> = (0..k).map(|r| w[r..].iter().chain(&w[..r]).copied().collect()).collect();
            class.sort();
            class.dedup();
            seen.extend(class.iter().cloned());
            out.push(class);
        }
    }
    out
}

/// A small rational `p/q` with `|p| ≤ 3`, `1 ≤ q ≤ 4`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> GaussianRational {
    let p: i64 = rng.gen_range(-3..=3);
    let q: i64 = rng.gen_range(1..=4);
    GaussianRational::real(BigRational::new(BigInt::from(p), BigInt::from(q)))
}

/// `random_rational() + i·random_rational()`.
pub fn random_gaussian<R: Rng + ?Sized>(rng: &mut R) -> GaussianRational {
    let re = random_rational(rng);
    let im = random_rational(rng);
    &re + &(&GaussianRational::i() * &im)
}

/// One random rational coefficient per word of length at most `content`.
pub fn random_series<R: Rng + ?Sized>(rng: &mut R, nvars: usize, cap: usize, content: usize) -> Result<NCSeries> {
    let terms: Vec<_> = words_up_to(nvars, content.min(cap)).map(|w| (w, random_rational(rng))).collect();
    NCSeries::from_terms(nvars, cap, terms)
}

/// Cyclically invariant series: one random coefficient per necklace of
/// length at most `content`, none above it. Necklaces rejected by `keep`
/// are left at zero.
pub fn random_tracial_series<R, F>(rng: &mut R, nvars: usize, cap: usize, content: usize, keep: F) -> Result<NCSeries>
where
    R: Rng + ?Sized,
    F: Fn(&[u8]) -> bool,
{
    let mut s = NCSeries::zero(nvars, cap)?;
    for class in necklaces(nvars, content.min(cap)) {
        let c = random_rational(rng);
        if !class.iter().all(|w| keep(w)) {
            continue;
        }
        for w in &class {
            s.set(w, c.clone())?;
        }
    }
    Ok(s)
}

/// Tracial pair cumulants vanishing on every rotation of an odd alternating
/// word `(1,2,…,1)` or `(2,1,…,2)`: a diagonally balanced pair.
pub fn random_diagonally_balanced_pair<R: Rng + ?Sized>(rng: &mut R, cap: usize, content: usize) -> Result<NCSeries> {
    random_tracial_series(rng, 2, cap, content, |w| !(w.len() % 2 == 1 && is_cyclically_alternating_rotation(w)))
}

/// Some rotation of `w` alternates between its two letters.
fn is_cyclically_alternating_rotation(w: &[u8]) -> bool {
    (0..w.len()).any(|r| {
        let rot: Vec<u8> = w[r..].iter().chain(&w[..r]).copied().collect();
        rot.windows(2).all(|p| p[0] != p[1])
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn necklace_counts() {
        // binary necklaces of length 1..6: 2, 3, 4, 6, 8, 14
        let counts: Vec<usize> = (1..=6).map(|k| necklaces(2, 6).iter().filter(|c| c[0].len() == k).count()).collect();
        assert_eq!(counts, [2, 3, 4, 6, 8, 14]);
        let total: usize = necklaces(3, 4).iter().map(Vec::len).sum();
        assert_eq!(total, 3 + 9 + 27 + 81);
    }

    #[test]
    fn tracial_by_construction() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let s = random_tracial_series(&mut rng, 3, 6, 5, |_| true).unwrap();
        assert!(s.is_cyclically_invariant());
        assert!(s.terms().iter().all(|(w, _)| w.len() <= 5));
    }

    #[test]
    fn balanced_pairs_zero_odd_alternating_classes() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let s = random_diagonally_balanced_pair(&mut rng, 7, 7).unwrap();
        for w in [vec![1], vec![2], vec![1, 2, 1], vec![1, 1, 2], vec![2, 1, 2, 1, 2], vec![1, 2, 2, 1, 2]] {
            assert!(s.coef(&w).unwrap().is_zero(), "{w:?}");
        }
        assert!(s.is_cyclically_invariant());
    }
}
