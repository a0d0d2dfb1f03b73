use num_traits::Zero;

use super::NCSeries;
use crate::error::{domain, Result};
use crate::gaussian::GaussianRational;

impl NCSeries {
    /// Substitutes `z_i -> Σ_j c[i][j] z_j` and expands. Degrees are preserved,
    /// so nothing below the cap is lost.
    ///
    /// If `b = A a` entrywise (`b_i = Σ_j A[i][j] a_j`), multilinearity of
    /// cumulants gives `R(μ_b) = R(μ_a)` substituted with the transpose of `A`.
    pub fn linear_substitute(&self, c: &[Vec<GaussianRational>]) -> Result<NCSeries> {
        let n = self.nvars;
        if c.len() != n || c.iter().any(|row| row.len() != n) {
            return domain(format!("substitution matrix must be {n}x{n}"));
        }
        let mut out = NCSeries::zero(n, self.degree_cap)?;
        let mut word = Vec::with_capacity(self.degree_cap);
        for (w, coef) in &self.coeffs {
            expand(c, w.letters(), coef, &mut word, &mut out)?;
        }
        Ok(out)
    }
}

fn expand(c: &[Vec<GaussianRational>], rest: &[u8], acc: &GaussianRational, word: &mut Vec<u8>, out: &mut NCSeries) -> Result<()> {
    let Some((&first, tail)) = rest.split_first() else {
        return out.add_term(word, acc);
    };
    for (j, entry) in c[first as usize - 1].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        word.push(j as u8 + 1);
        expand(c, tail, &(acc * entry), word, out)?;
        word.pop();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn identity_and_zero() {
        let f = NCSeries::from_terms(2, 3, [(vec![1, 2], g("3")), (vec![2, 2, 1], g("1/2-i"))]).unwrap();
        let id = vec![vec![g("1"), g("0")], vec![g("0"), g("1")]];
        assert_eq!(f.linear_substitute(&id).unwrap(), f);
        let zero = vec![vec![g("0"), g("0")], vec![g("0"), g("0")]];
        assert!(f.linear_substitute(&zero).unwrap().is_zero());
        assert!(f.linear_substitute(&id[..1]).is_err());
    }

    #[test]
    fn circular_from_real_and_imaginary_parts() {
        // (z1² + z2²)/2 for (Re c, Im c); c = Re + i Im, c* = Re - i Im, so the
        // transpose of [[1, i], [1, -i]] yields the (c, c*) series.
        let half = g("1/2");
        let f = NCSeries::from_terms(2, 2, [(vec![1, 1], half.clone()), (vec![2, 2], half)]).unwrap();
        let ct = vec![vec![g("1"), g("1")], vec![g("i"), g("-1i")]];
        let expected = NCSeries::from_terms(2, 2, [(vec![1, 2], g("1")), (vec![2, 1], g("1"))]).unwrap();
        assert_eq!(f.linear_substitute(&ct).unwrap(), expected);
    }
}
