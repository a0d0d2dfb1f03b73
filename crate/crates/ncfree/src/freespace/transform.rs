use num_traits::{One, Zero};

use crate::error::Result;
use crate::gaussian::GaussianRational;
use crate::ncpart::enumerate_nc;
use crate::ncseries::{moeb_series, words_up_to, zeta_series, NCSeries};

/// The moment series `M(μ) = Σ μ(X_w) z_w`; the empty word has moment 1
/// and is not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentFunctional {
    series: NCSeries,
}

impl MomentFunctional {
    pub fn new(series: NCSeries) -> Self {
        MomentFunctional { series }
    }

    pub fn series(&self) -> &NCSeries {
        &self.series
    }

    pub fn into_series(self) -> NCSeries {
        self.series
    }

    pub fn nvars(&self) -> usize {
        self.series.nvars()
    }

    pub fn degree_cap(&self) -> usize {
        self.series.degree_cap()
    }

    /// `μ(X_w)`; 1 for the empty word.
    pub fn moment(&self, w: &[u8]) -> Result<GaussianRational> {
        if w.is_empty() {
            return Ok(GaussianRational::one());
        }
        self.series.coef(w)
    }
}

/// Free cumulants from moments: `R = M ⋆ Moeb`.
///
/// ```
/// use ncfree::freespace::{r_from_m, MomentFunctional};
/// use ncfree::{GaussianRational, NCSeries};
/// // even moments 1, 2, 5: the standard semicircular
/// let m = NCSeries::from_terms(1, 6, [2, 4, 6].into_iter().zip([1, 2, 5])
///     .map(|(k, c)| (vec![1; k], GaussianRational::from_int(c)))).unwrap();
/// let r = r_from_m(&MomentFunctional::new(m));
/// assert_eq!(r, NCSeries::from_terms(1, 6, [(vec![1, 1], GaussianRational::from_int(1))]).unwrap());
/// ```
pub fn r_from_m(m: &MomentFunctional) -> NCSeries {
    let moeb = moeb_series(m.nvars(), m.degree_cap()).expect("shape of a valid series");
    m.series.boxstar(&moeb).expect("same shape")
}

/// Moments from free cumulants: `M = R ⋆ Zeta`.
pub fn m_from_r(r: &NCSeries) -> MomentFunctional {
    let zeta = zeta_series(r.nvars(), r.degree_cap()).expect("shape of a valid series");
    MomentFunctional::new(r.boxstar(&zeta).expect("same shape"))
}

/// Moments from free cumulants by summing `coef_π(R)` over every π ∈ NC(k);
/// slow, and independent of `⋆`. Needs the cap within the enumeration limit.
pub fn m_from_r_direct(r: &NCSeries) -> Result<MomentFunctional> {
    let cap = r.degree_cap();
    let parts = (1..=cap).map(enumerate_nc).collect::<Result<Vec<_>>>()?;
    let mut out = NCSeries::zero(r.nvars(), cap)?;
    for w in words_up_to(r.nvars(), cap) {
        let mut c = GaussianRational::zero();
        for pi in &parts[w.len() - 1] {
            c += &r.coef_partition(&w, pi)?;
        }
        out.set(&w, c)?;
    }
    Ok(MomentFunctional::new(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpart::catalan;
    use num_bigint::BigInt;

    fn cat(k: usize) -> GaussianRational {
        GaussianRational::from(BigInt::from(catalan(k)))
    }

    #[test]
    fn zero_maps_to_zero() {
        let z = NCSeries::zero(2, 5).unwrap();
        assert!(r_from_m(&MomentFunctional::new(z.clone())).is_zero());
        assert!(m_from_r(&z).series().is_zero());
    }

    #[test]
    fn free_poisson_has_unit_cumulants() {
        let m = NCSeries::univariate(7, &(1..=7).map(cat).collect::<Vec<_>>()).unwrap();
        let r = r_from_m(&MomentFunctional::new(m));
        let ones = NCSeries::univariate(7, &vec![GaussianRational::from_int(1); 7]).unwrap();
        assert_eq!(r, ones);
        assert_eq!(m_from_r_direct(&ones).unwrap(), m_from_r(&ones));
    }

    #[test]
    fn semicircle_moments_are_catalan() {
        let r = NCSeries::from_terms(1, 8, [(vec![1, 1], GaussianRational::from_int(1))]).unwrap();
        let m = m_from_r(&r);
        for k in 1..=8 {
            let want = if k % 2 == 0 { cat(k / 2) } else { GaussianRational::zero() };
            assert_eq!(m.moment(&vec![1; k]).unwrap(), want);
        }
        assert_eq!(m.moment(&[]).unwrap(), GaussianRational::one());
        assert_eq!(m_from_r_direct(&r).unwrap(), m);
    }
}
