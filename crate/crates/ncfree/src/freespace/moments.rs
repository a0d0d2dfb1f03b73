use std::collections::HashMap;

use num_traits::{One, Zero};

use super::{Element, FreeSpace, Var};
use crate::error::Result;
use crate::gaussian::GaussianRational;
use crate::ncpart::enumerate_nc;
use crate::ncseries::moeb_coefficient;

/// Memoized moments of words in the variables of one space.
///
/// `φ(w) = Σ_V κ(w|V) Π φ(gap)`, where `V` runs over the possible blocks of
/// the first letter (same family, nonzero cumulant) and the gaps are the
/// stretches of `w` between consecutive elements of `V` and after its last.
pub struct MomentEngine<'a> {
    space: &'a FreeSpace,
    memo: HashMap<Vec<Var>, GaussianRational>,
}

impl<'a> MomentEngine<'a> {
    pub(crate) fn new(space: &'a FreeSpace) -> Self {
        MomentEngine { space, memo: HashMap::new() }
    }

    pub fn space(&self) -> &'a FreeSpace {
        self.space
    }

    pub fn moment_of_names<S: AsRef<str>>(&mut self, word: &[S]) -> Result<GaussianRational> {
        let w = word.iter().map(|n| self.space.resolve(n.as_ref())).collect::<Result<Vec<_>>>()?;
        self.space.check_len(w.len())?;
        Ok(self.moment(&w))
    }

    /// `φ(e_1 e_2 ⋯ e_k)` with the products written out.
    pub fn moment_of(&mut self, elems: &[&Element]) -> Result<GaussianRational> {
        let w = self.space.expand(elems)?;
        self.space.check_len(w.len())?;
        Ok(self.moment(&w))
    }

    /// Free cumulant `κ_k(e_1, …, e_k)` of elements, by Möbius inversion over NC(k).
    pub fn cumulant_of(&mut self, elems: &[&Element]) -> Result<GaussianRational> {
        let total: usize = elems.iter().map(|e| e.len()).sum();
        self.space.check_len(total)?;
        let mut acc = GaussianRational::zero();
        for pi in enumerate_nc(elems.len())? {
            let mut term = GaussianRational::one();
            for b in pi.blocks() {
                let sub: Vec<&Element> = b.iter().map(|&i| elems[i - 1]).collect();
                term *= &self.moment_of(&sub)?;
                if term.is_zero() {
                    break;
                }
            }
            if term.is_zero() {
                continue;
            }
            for v in pi.kreweras().blocks() {
                term *= &moeb_coefficient(v.len());
            }
            acc += &term;
        }
        Ok(acc)
    }

    /// Caller guarantees `w.len() <= cap`.
    pub(crate) fn moment(&mut self, w: &[Var]) -> GaussianRational {
        if w.is_empty() {
            return GaussianRational::one();
        }
        if let Some(v) = self.memo.get(w) {
            return v.clone();
        }
        let (fam, letter) = self.space.home[w[0] as usize];
        let mut total = GaussianRational::zero();
        let mut chosen = vec![0usize];
        let mut letters = vec![letter];
        if self.space.prefixes[fam].contains(&letters) {
            self.grow(w, fam, &mut chosen, &mut letters, &mut total);
        }
        self.memo.insert(w.to_vec(), total.clone());
        total
    }

    fn grow(&mut self, w: &[Var], fam: usize, chosen: &mut Vec<usize>, letters: &mut Vec<u8>, total: &mut GaussianRational) {
        let space = self.space;
        if let Some(k) = space.family_r[fam].get(letters) {
            let mut prod = k.clone();
            let ends = chosen.iter().skip(1).copied().chain([w.len()]);
            for (&a, b) in chosen.iter().zip(ends) {
                if a + 1 < b {
                    let m = self.moment(&w[a + 1..b]);
                    if m.is_zero() {
                        prod = GaussianRational::zero();
                        break;
                    }
                    prod = &prod * &m;
                }
            }
            *total += &prod;
        }
        let last = *chosen.last().expect("block holds the first letter");
        for x in last + 1..w.len() {
            let (f, l) = space.home[w[x] as usize];
            if f != fam {
                continue;
            }
            letters.push(l);
            if space.prefixes[fam].contains(letters.as_slice()) {
                chosen.push(x);
                self.grow(w, fam, chosen, letters, total);
                chosen.pop();
            }
            letters.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpart::catalan;
    use crate::ncseries::NCSeries;

    fn gr(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    /// Direct sum over NC(k) with the family-vanishing rule.
    fn moment_by_partitions(s: &FreeSpace, w: &[&str]) -> GaussianRational {
        let vars: Vec<Var> = w.iter().map(|n| s.resolve(n).unwrap()).collect();
        let mut acc = GaussianRational::zero();
        for pi in enumerate_nc(w.len()).unwrap() {
            let mut term = GaussianRational::one();
            for b in pi.blocks() {
                let fams: Vec<usize> = b.iter().map(|&i| s.home[vars[i - 1] as usize].0).collect();
                if fams.iter().any(|&f| f != fams[0]) {
                    term = GaussianRational::zero();
                    break;
                }
                let letters: Vec<u8> = b.iter().map(|&i| s.home[vars[i - 1] as usize].1).collect();
                term *= &s.family_r[fams[0]].coef(&letters).unwrap();
            }
            acc += &term;
        }
        acc
    }

    fn two_families() -> FreeSpace {
        let ab = NCSeries::from_terms(
            2,
            6,
            [
                (vec![1], GaussianRational::ratio(1, 2)),
                (vec![1, 2], gr(2)),
                (vec![2, 1], gr(-1)),
                (vec![2, 2], gr(1)),
                (vec![1, 1, 2], GaussianRational::ratio(1, 3)),
            ],
        )
        .unwrap();
        let c = NCSeries::from_terms(1, 6, [(vec![1], gr(1)), (vec![1, 1], gr(3)), (vec![1, 1, 1], gr(-2))]).unwrap();
        FreeSpace::builder(6).family(&["a", "b"], ab).family(&["c"], c).build().unwrap()
    }

    #[test]
    fn recursion_matches_partition_sum() {
        let s = two_families();
        let names = ["a", "b", "c"];
        let mut eng = s.engine();
        for k in 1..=6 {
            for w in crate::ncseries::words(3, k) {
                let word: Vec<&str> = w.iter().map(|&l| names[l as usize - 1]).collect();
                assert_eq!(eng.moment_of_names(&word).unwrap(), moment_by_partitions(&s, &word), "{word:?}");
            }
        }
    }

    #[test]
    fn free_semicirculars() {
        let semi = NCSeries::from_terms(1, 8, [(vec![1, 1], gr(1))]).unwrap();
        let s = FreeSpace::builder(8).family(&["a"], semi.clone()).family(&["b"], semi).build().unwrap();
        assert_eq!(s.mixed_moment(&["a", "b", "b", "a"]).unwrap(), gr(1));
        assert_eq!(s.mixed_moment(&["a", "b", "a", "b"]).unwrap(), gr(0));
        assert_eq!(s.mixed_moment::<&str>(&[]).unwrap(), gr(1));
        for k in 1..=4 {
            let w = vec!["a"; 2 * k];
            assert_eq!(s.mixed_moment(&w).unwrap(), GaussianRational::from(num_bigint::BigInt::from(catalan(k))));
        }
        assert!(matches!(s.mixed_moment(&["a"; 9]), Err(crate::Error::CapExceeded { needed: 9, cap: 8 })));
    }

    #[test]
    fn single_letter_is_first_cumulant() {
        let s = two_families();
        assert_eq!(s.mixed_moment(&["a"]).unwrap(), GaussianRational::ratio(1, 2));
        assert_eq!(s.mixed_moment(&["b"]).unwrap(), gr(0));
    }

    #[test]
    fn element_cumulants_invert_moments() {
        let s = two_families();
        let a = Element::var("a");
        let ac: Element = "a*c".parse().unwrap();
        let mut eng = s.engine();
        // κ_1 is the mean, κ_2 the covariance
        assert_eq!(eng.cumulant_of(&[&ac]).unwrap(), eng.moment_of(&[&ac]).unwrap());
        let m11 = eng.moment_of(&[&a, &ac]).unwrap();
        let cov = &m11 - &(&eng.moment_of(&[&a]).unwrap() * &eng.moment_of(&[&ac]).unwrap());
        assert_eq!(eng.cumulant_of(&[&a, &ac]).unwrap(), cov);
        // a single variable gives back its family cumulant
        let b = Element::var("b");
        assert_eq!(eng.cumulant_of(&[&a, &a, &b]).unwrap(), GaussianRational::ratio(1, 3));
    }
}
