//! Truncated formal power series in non-commuting variables `z_1..z_n`,
//! without constant term, over the Gaussian rationals.

mod boxstar;
mod serial;
mod special;
mod substitute;

use std::borrow::Borrow;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{domain, Error, Result};
use crate::gaussian::GaussianRational;
use crate::ncpart::Partition;

pub use special::{moeb_coefficient, moeb_series, sum_series, zeta_series};

/// Longest word any series may carry.
pub const MAX_DEGREE: usize = 64;

/// A non-empty word over the letters `1..=n`.
///
/// Words order first by length, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        if letters.is_empty() {
            return domain("words are non-empty");
        }
        if letters.contains(&0) {
            return domain("letters start at 1");
        }
        Ok(Self(letters))
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Borrow<[u8]> for Word {
    fn borrow(&self) -> &[u8] {
        &self.0
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// All words of length `k` over `1..=nvars`, in lexicographic order.
pub fn words(nvars: usize, k: usize) -> impl Iterator<Item = Vec<u8>> {
    let total = nvars.checked_pow(k as u32).expect("word count overflows");
    (0..total).map(move |mut idx| {
        let mut w = vec![0u8; k];
        for slot in w.iter_mut().rev() {
            *slot = (idx % nvars) as u8 + 1;
            idx /= nvars;
        }
        w
    })
}

/// All words of length `1..=max_len`, ordered by length then lexicographically.
pub fn words_up_to(nvars: usize, max_len: usize) -> impl Iterator<Item = Vec<u8>> {
    (1..=max_len).flat_map(move |k| words(nvars, k))
}

/// A series `Σ c_w z_w` over words of length at most `degree_cap`.
/// Absent words have coefficient zero; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct NCSeries {
    nvars: usize,
    degree_cap: usize,
    coeffs: HashMap<Word, GaussianRational>,
}

impl NCSeries {
    /// The zero series.
    pub fn zero(nvars: usize, degree_cap: usize) -> Result<Self> {
        if nvars == 0 || nvars > u8::MAX as usize {
            return domain(format!("number of variables {nvars} outside 1..=255"));
        }
        if degree_cap == 0 || degree_cap > MAX_DEGREE {
            return domain(format!("degree cap {degree_cap} outside 1..={MAX_DEGREE}"));
        }
        Ok(Self { nvars, degree_cap, coeffs: HashMap::new() })
    }

    /// Sums the given terms; repeated words accumulate.
    pub fn from_terms<I>(nvars: usize, degree_cap: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u8>, GaussianRational)>,
    {
        let mut s = Self::zero(nvars, degree_cap)?;
        for (w, c) in terms {
            s.add_term(&w, &c)?;
        }
        Ok(s)
    }

    /// A one-variable series from `[c_1, c_2, ...]`, `c_k` the coefficient of `z^k`.
    pub fn univariate(degree_cap: usize, coeffs: &[GaussianRational]) -> Result<Self> {
        if coeffs.len() > degree_cap {
            return Err(Error::CapExceeded { needed: coeffs.len(), cap: degree_cap });
        }
        Self::from_terms(1, degree_cap, coeffs.iter().enumerate().map(|(k, c)| (vec![1; k + 1], c.clone())))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    /// Number of non-zero coefficients.
    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check_word(&self, w: &[u8]) -> Result<()> {
        if w.is_empty() {
            return domain("words are non-empty");
        }
        if w.len() > self.degree_cap {
            return Err(Error::CapExceeded { needed: w.len(), cap: self.degree_cap });
        }
        if let Some(&bad) = w.iter().find(|&&l| l == 0 || l as usize > self.nvars) {
            return domain(format!("letter {bad} outside 1..={}", self.nvars));
        }
        Ok(())
    }

    /// The coefficient of `z_{w_1} ... z_{w_k}`.
    pub fn coef(&self, w: &[u8]) -> Result<GaussianRational> {
        self.check_word(w)?;
        Ok(self.get(w).cloned().unwrap_or_else(GaussianRational::zero))
    }

    /// Unchecked lookup; `None` means zero.
    /// Nonzero terms in no particular order.
    pub(crate) fn iter(&self) -> impl Iterator<Item = (&Word, &GaussianRational)> {
        self.coeffs.iter()
    }

    pub(crate) fn get(&self, w: &[u8]) -> Option<&GaussianRational> {
        self.coeffs.get(w)
    }

    /// The coefficient of the subword of `w` at the 1-based `positions`.
    pub fn coef_restricted(&self, w: &[u8], positions: &[usize]) -> Result<GaussianRational> {
        if positions.is_empty() {
            return domain("empty position set");
        }
        let mut sorted = positions.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted[0] == 0 || *sorted.last().expect("non-empty") > w.len() {
            return domain(format!("positions {positions:?} outside 1..={}", w.len()));
        }
        let sub: Vec<u8> = sorted.iter().map(|&p| w[p - 1]).collect();
        self.coef(&sub)
    }

    /// Product over the blocks of `pi` of the restricted coefficients.
    pub fn coef_partition(&self, w: &[u8], pi: &Partition) -> Result<GaussianRational> {
        if pi.n() != w.len() {
            return domain(format!("partition of {} points for a word of length {}", pi.n(), w.len()));
        }
        let mut acc = GaussianRational::from_int(1);
        for b in pi.blocks() {
            acc = &acc * &self.coef_restricted(w, b)?;
        }
        Ok(acc)
    }

    /// Sets a coefficient (zero removes the word).
    pub fn set(&mut self, w: &[u8], c: GaussianRational) -> Result<()> {
        self.check_word(w)?;
        if c.is_zero() {
            self.coeffs.remove(w);
        } else {
            self.coeffs.insert(Word(w.to_vec()), c);
        }
        Ok(())
    }

    /// Adds `c` to the coefficient of `w`.
    pub fn add_term(&mut self, w: &[u8], c: &GaussianRational) -> Result<()> {
        self.check_word(w)?;
        if c.is_zero() {
            return Ok(());
        }
        let entry = self.coeffs.entry(Word(w.to_vec())).or_insert_with(GaussianRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(w);
        }
        Ok(())
    }

    /// Non-zero terms ordered by length, then lexicographically.
    pub fn terms(&self) -> Vec<(&Word, &GaussianRational)> {
        let mut t: Vec<_> = self.coeffs.iter().collect();
        t.sort_unstable_by(|a, b| a.0.cmp(b.0));
        t
    }

    /// `[c_1, ..., c_D]` of a one-variable series.
    pub fn univariate_coeffs(&self) -> Result<Vec<GaussianRational>> {
        if self.nvars != 1 {
            return domain("not a one-variable series");
        }
        Ok((1..=self.degree_cap).map(|k| self.get(&vec![1; k]).cloned().unwrap_or_else(GaussianRational::zero)).collect())
    }

    fn same_shape(&self, other: &NCSeries) -> Result<()> {
        if self.nvars != other.nvars || self.degree_cap != other.degree_cap {
            return domain(format!(
                "shape mismatch: {} vars / cap {} vs {} vars / cap {}",
                self.nvars, self.degree_cap, other.nvars, other.degree_cap
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &NCSeries) -> Result<NCSeries> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_term(w.letters(), c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &NCSeries) -> Result<NCSeries> {
        self.add(&other.scale(&GaussianRational::from_int(-1)))
    }

    pub fn scale(&self, c: &GaussianRational) -> NCSeries {
        let coeffs = if c.is_zero() { HashMap::new() } else { self.coeffs.iter().map(|(w, x)| (w.clone(), x * c)).collect() };
        NCSeries { coeffs, ..*self }
    }

    /// Drops every word longer than `cap`.
    pub fn truncate(&self, cap: usize) -> Result<NCSeries> {
        let mut out = NCSeries::zero(self.nvars, cap)?;
        out.coeffs = self.coeffs.iter().filter(|(w, _)| w.len() <= cap).map(|(w, c)| (w.clone(), c.clone())).collect();
        Ok(out)
    }

    /// Same coefficients under a larger cap.
    pub fn extend_cap(&self, cap: usize) -> Result<NCSeries> {
        if cap < self.degree_cap {
            return domain(format!("cannot extend cap {} down to {cap}", self.degree_cap));
        }
        let mut out = self.clone();
        out.degree_cap = cap;
        Ok(out)
    }

    /// Every coefficient equals the coefficients of all cyclic rotations of its word.
    pub fn is_cyclically_invariant(&self) -> bool {
        self.coeffs.iter().all(|(w, c)| {
            let l = w.letters();
            (1..l.len()).all(|r| {
                let rot: Vec<u8> = l[r..].iter().chain(&l[..r]).copied().collect();
                self.get(&rot) == Some(c)
            })
        })
    }

    /// Maps letters through `relabel` (`relabel[l - 1]` is the new letter of `l`)
    /// into a series with `nvars` variables.
    pub fn relabel(&self, nvars: usize, relabel: &[u8]) -> Result<NCSeries> {
        if relabel.len() != self.nvars {
            return domain("relabelling must cover every variable");
        }
        let mut out = NCSeries::zero(nvars, self.degree_cap)?;
        for (w, c) in &self.coeffs {
            let nw: Vec<u8> = w.letters().iter().map(|&l| relabel[l as usize - 1]).collect();
            out.add_term(&nw, c)?;
        }
        Ok(out)
    }
}

impl fmt::Debug for NCSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCSeries[{} vars, cap {}]{{", self.nvars, self.degree_cap)?;
        for (k, (w, c)) in self.terms().into_iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w:?}: {c}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Display for NCSeries {
    /// Human-readable sum such as `1/2 z1z2 + z2z1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in terms.into_iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let mono: String = w.letters().iter().map(|l| format!("z{l}")).collect();
            if *c == GaussianRational::from_int(1) {
                f.write_str(&mono)?;
            } else if c.is_real() {
                write!(f, "{c} {mono}")?;
            } else {
                write!(f, "({c}) {mono}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, r: i64) -> GaussianRational {
        GaussianRational::ratio(p, r)
    }

    #[test]
    fn word_order_is_length_then_lex() {
        let mut ws: Vec<Word> = [vec![2, 1], vec![1], vec![1, 2], vec![2]].into_iter().map(|w| Word::new(w).unwrap()).collect();
        ws.sort();
        let got: Vec<&[u8]> = ws.iter().map(Word::letters).collect();
        assert_eq!(got, vec![&[1u8][..], &[2], &[1, 2], &[2, 1]]);
        assert!(Word::new(vec![]).is_err());
    }

    #[test]
    fn word_listing() {
        let all: Vec<Vec<u8>> = words(2, 2).collect();
        assert_eq!(all, vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]);
        assert_eq!(words_up_to(3, 3).count(), 3 + 9 + 27);
    }

    #[test]
    fn coefficient_reads_are_checked() {
        let s = NCSeries::from_terms(2, 3, [(vec![1, 2], q(1, 2))]).unwrap();
        assert_eq!(s.coef(&[1, 2]).unwrap(), q(1, 2));
        assert!(s.coef(&[2, 1]).unwrap().is_zero());
        assert!(matches!(s.coef(&[1, 1, 1, 1]), Err(Error::CapExceeded { needed: 4, cap: 3 })));
        assert!(s.coef(&[3]).is_err());
        assert!(s.coef(&[]).is_err());
    }

    #[test]
    fn restricted_and_partition_coefficients() {
        let s = NCSeries::from_terms(2, 4, [(vec![2, 1], q(3, 1)), (vec![1, 2, 1, 2], q(5, 1))]).unwrap();
        let w = [1, 2, 1, 2];
        assert_eq!(s.coef_restricted(&w, &[2, 3]).unwrap(), q(3, 1));
        assert_eq!(s.coef_restricted(&w, &[1, 2, 3, 4]).unwrap(), s.coef(&w).unwrap());
        assert!(s.coef_restricted(&w, &[]).is_err());
        assert!(s.coef_restricted(&w, &[5]).is_err());
        let one = Partition::full(4);
        assert_eq!(s.coef_partition(&w, &one).unwrap(), q(5, 1));
        let pi: Partition = "{1,4}{2,3}".parse().unwrap();
        // (1,2) has coefficient zero
        assert!(s.coef_partition(&w, &pi).unwrap().is_zero());
        assert!(s.coef_partition(&[1, 2], &pi).is_err());
        let z = zeta_series(2, 3).unwrap();
        assert_eq!(z.coef_restricted(&[1, 2, 2], &[1, 3]).unwrap(), q(1, 1));
    }

    #[test]
    fn zero_terms_are_not_stored() {
        let mut s = NCSeries::zero(1, 2).unwrap();
        s.add_term(&[1], &q(1, 1)).unwrap();
        s.add_term(&[1], &q(-1, 1)).unwrap();
        assert!(s.is_zero());
        s.set(&[1, 1], q(2, 1)).unwrap();
        s.set(&[1, 1], q(0, 1)).unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn cyclic_invariance_check() {
        let a = NCSeries::from_terms(2, 2, [(vec![1, 2], q(1, 1))]).unwrap();
        assert!(!a.is_cyclically_invariant());
        let b = a.add(&NCSeries::from_terms(2, 2, [(vec![2, 1], q(1, 1))]).unwrap()).unwrap();
        assert!(b.is_cyclically_invariant());
    }

    #[test]
    fn display_reads_naturally() {
        let s = NCSeries::from_terms(2, 2, [(vec![1, 2], q(1, 2)), (vec![2, 1], q(1, 1))]).unwrap();
        assert_eq!(s.to_string(), "1/2 z1z2 + z2z1");
    }
}
