//! R-diagonal and diagonally balanced pairs: predicates, determining
//! series, and the Haar and circular pairs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{domain, Error, Result};
use crate::freespace::{random_rational, Element, FreeSpace};
use crate::gaussian::GaussianRational;
use crate::ncpart::catalan;
use crate::ncseries::{moeb_coefficient, moeb_series, NCSeries};

/// Joint R-series of a pair, in `z_1`, `z_2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSeries(NCSeries);

impl PairSeries {
    pub fn new(s: NCSeries) -> Result<Self> {
        if s.nvars() != 2 {
            return domain(format!("a pair series has 2 variables, not {}", s.nvars()));
        }
        Ok(PairSeries(s))
    }

    pub fn series(&self) -> &NCSeries {
        &self.0
    }

    pub fn into_series(self) -> NCSeries {
        self.0
    }

    pub fn degree_cap(&self) -> usize {
        self.0.degree_cap()
    }
}

/// The one-variable series `f(z) = Σ α_k z^k` of an R-diagonal pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeterminingSeries(NCSeries);

impl DeterminingSeries {
    pub fn new(s: NCSeries) -> Result<Self> {
        if s.nvars() != 1 {
            return domain("a determining series has one variable");
        }
        Ok(DeterminingSeries(s))
    }

    /// From `[α_1, α_2, …]` with the given cap.
    pub fn from_coeffs(cap: usize, alphas: &[GaussianRational]) -> Result<Self> {
        Ok(DeterminingSeries(NCSeries::univariate(cap, alphas)?))
    }

    pub fn series(&self) -> &NCSeries {
        &self.0
    }

    pub fn degree_cap(&self) -> usize {
        self.0.degree_cap()
    }

    /// `[α_1, …, α_cap]`.
    pub fn coefficients(&self) -> Vec<GaussianRational> {
        self.0.univariate_coeffs().expect("one variable")
    }

    /// `Σ α_k ((z_1z_2)^k + (z_2z_1)^k)` with cap `2·cap`.
    pub fn pair_series(&self) -> PairSeries {
        let cap = 2 * self.degree_cap();
        let terms = self
            .coefficients()
            .into_iter()
            .enumerate()
            .flat_map(|(k, a)| [(alternating(1, 2 * (k + 1)), a.clone()), (alternating(2, 2 * (k + 1)), a)]);
        PairSeries(NCSeries::from_terms(2, cap, terms).expect("cap within range"))
    }
}

/// `(s, 3-s, s, …)` of length `len`.
pub fn alternating(start: u8, len: usize) -> Vec<u8> {
    (0..len).map(|i| if i % 2 == 0 { start } else { 3 - start }).collect()
}

/// Nonzero coefficients only on `(1,2)^k` and `(2,1)^k`, equal for each `k`.
///
/// ```
/// use ncfree::rdiagonal::{circular_pair_r, haar_pair_r, is_r_diagonal};
/// assert!(is_r_diagonal(&circular_pair_r(6).unwrap()));
/// assert!(is_r_diagonal(&haar_pair_r(6).unwrap()));
/// ```
pub fn is_r_diagonal(p: &PairSeries) -> bool {
    let s = &p.0;
    s.iter().all(|(w, c)| {
        let l = w.letters();
        if l.len() % 2 == 1 || l.windows(2).any(|q| q[0] == q[1]) {
            return false;
        }
        let other = alternating(3 - l[0], l.len());
        s.get(&other) == Some(c)
    })
}

/// `α_k = coef((z_1z_2)^k)`, with cap `⌊D/2⌋`.
pub fn determining_series(p: &PairSeries) -> Result<DeterminingSeries> {
    if !is_r_diagonal(p) {
        return domain("the pair series is not R-diagonal");
    }
    let cap = p.degree_cap() / 2;
    if cap == 0 {
        return domain("cap 1 holds no alternating word");
    }
    let alphas: Vec<GaussianRational> = (1..=cap).map(|k| p.0.coef(&alternating(1, 2 * k)).expect("within cap")).collect();
    DeterminingSeries::from_coeffs(cap, &alphas)
}

/// Coefficients of `(1,2,…,1)` and `(2,1,…,2)` vanish through the cap.
pub fn is_diagonally_balanced_cumulants(p: &PairSeries) -> bool {
    (1..=p.degree_cap()).step_by(2).all(|k| [1, 2].iter().all(|&s| p.0.get(&alternating(s, k)).is_none()))
}

/// `φ(a_1a_2⋯a_1) = φ(a_2a_1⋯a_2) = 0` for odd lengths through `degree`.
pub fn is_diagonally_balanced_moments(s: &FreeSpace, a1: &Element, a2: &Element, degree: usize) -> Result<bool> {
    let needed = degree * a1.len().max(a2.len());
    if needed > s.degree_cap() {
        return Err(Error::CapExceeded { needed, cap: s.degree_cap() });
    }
    let mut eng = s.engine();
    let pair = [a1, a2];
    for k in (1..=degree).step_by(2) {
        for start in [1u8, 2] {
            let word: Vec<&Element> = alternating(start, k).iter().map(|&l| pair[l as usize - 1]).collect();
            if !eng.moment_of(&word)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `f = R(μ_{a_1a_2}) ⋆ Moeb` with cap `degree`, for a diagonally balanced
/// pair in a tracial space.
pub fn determining_from_product(s: &FreeSpace, a1: &Element, a2: &Element, degree: usize) -> Result<DeterminingSeries> {
    if !s.is_tracial() {
        return domain("the space must be tracial");
    }
    if !is_diagonally_balanced_moments(s, a1, a2, 2 * degree)? {
        return domain(format!("({a1}, {a2}) is not diagonally balanced"));
    }
    let prod = Element::product(a1.factors().iter().chain(a2.factors()).cloned())?;
    let r = s.joint_r_of(&[prod], degree)?;
    DeterminingSeries::new(r.boxstar(&moeb_series(1, degree)?)?)
}

/// `g = f ⋆ R_p`, one-variable and hence commutative.
pub fn absorb(f: &DeterminingSeries, rp: &NCSeries) -> Result<DeterminingSeries> {
    if rp.nvars() != 1 {
        return domain("R_p must be a one-variable series");
    }
    DeterminingSeries::new(f.0.boxstar(rp)?)
}

/// `Σ_k (-1)^{k+1} C_{k-1} ((z_1z_2)^k + (z_2z_1)^k)`: the pair `(u, u*)` for
/// a Haar unitary `u`.
pub fn haar_pair_r(d: usize) -> Result<PairSeries> {
    if d < 2 {
        return domain("the Haar pair needs cap at least 2");
    }
    let alphas: Vec<GaussianRational> = (1..=d / 2).map(moeb_coefficient).collect();
    let f = DeterminingSeries::from_coeffs(d / 2, &alphas)?;
    PairSeries::new(f.pair_series().0.extend_cap(d)?)
}

/// `z_1z_2 + z_2z_1`: a circular element and its adjoint.
pub fn circular_pair_r(d: usize) -> Result<PairSeries> {
    if d < 2 {
        return domain("the circular pair needs cap at least 2");
    }
    let one = GaussianRational::one();
    PairSeries::new(NCSeries::from_terms(2, d, [(vec![1, 2], one.clone()), (vec![2, 1], one)])?)
}

/// Random R-diagonal pair: small random `α_1, …, α_{⌊content/2⌋}`.
pub fn random_r_diagonal_pair<R: Rng + ?Sized>(rng: &mut R, cap: usize, content: usize) -> Result<PairSeries> {
    let k = content.min(cap) / 2;
    let alphas: Vec<GaussianRational> = (0..k).map(|_| random_rational(rng)).collect();
    let f = DeterminingSeries::from_coeffs(k.max(1), &alphas)?;
    PairSeries::new(f.pair_series().0.extend_cap(cap)?)
}

/// Moments `m_1..m_D` of the standard semicircular law: odd ones vanish,
/// `m_{2k}` is the Catalan number `C_k`.
pub fn semicircular_moments(d: usize) -> Vec<BigRational> {
    (1..=d).map(|k| if k % 2 == 1 { BigRational::zero() } else { BigRational::from_integer(BigInt::from(catalan(k / 2))) }).collect()
}

/// `m_k` of the quarter-circular law on `[0, 2]`. Even moments agree with the
/// semicircular ones; odd moments are not rational (`m_1 = 8/(3π)`) and are
/// refused.
pub fn quartercircular_moment(k: usize) -> Result<BigRational> {
    if k % 2 == 1 {
        return Err(Error::Unsupported(format!("quarter-circular moment of odd order {k} is irrational")));
    }
    Ok(BigRational::from_integer(BigInt::from(catalan(k / 2))))
}

/// The even quarter-circular moments `(k, m_k)` for `k ≤ d`.
pub fn quartercircular_moments(d: usize) -> Vec<(usize, BigRational)> {
    (2..=d).step_by(2).map(|k| (k, quartercircular_moment(k).expect("even order"))).collect()
}

/// `R(μ_{Re x, Im x})` for an R-diagonal `(x, x*)` with determining series `g`:
/// the pair series with `z_1 ↦ (z_1 - i z_2)/2`, `z_2 ↦ (z_1 + i z_2)/2`.
pub fn re_im_series(g: &DeterminingSeries) -> Result<NCSeries> {
    let half = GaussianRational::ratio(1, 2);
    let ihalf = &GaussianRational::i() * &half;
    let m = vec![vec![half.clone(), -ihalf.clone()], vec![half, ihalf]];
    g.pair_series().0.linear_substitute(&m)
}

/// Some nonzero coefficient involves both variables.
pub fn has_mixed_coefficients(s: &NCSeries) -> bool {
    s.iter().any(|(w, _)| {
        let l = w.letters();
        l.iter().any(|&x| x != l[0])
    })
}

/// `Re(up)` and `Im(up)` are free, given `R_p = R(μ_{pp*})` with `φ(pp*) = 1`
/// built in: `g = Moeb ⋆ R_p` must be exactly `z`.
///
/// Cross-checks against the change of variables: the real/imaginary pair
/// series has no mixed coefficient exactly when `β_k = 0` for `k ≥ 2`.
///
/// # Panics
/// If the two descriptions disagree.
pub fn free_re_im_condition(rp: &NCSeries) -> Result<bool> {
    let cap = rp.degree_cap();
    let moeb = DeterminingSeries::new(moeb_series(1, cap)?)?;
    let g = absorb(&moeb, rp)?;
    let beta = g.coefficients();
    let verdict = beta[0] == GaussianRational::one() && beta[1..].iter().all(Zero::is_zero);
    let probe = cap.min(6);
    let gp = DeterminingSeries::from_coeffs(probe, &beta[..probe])?;
    let mixed = has_mixed_coefficients(&re_im_series(&gp)?);
    assert_eq!(!mixed, beta[1..probe].iter().all(Zero::is_zero), "change of variables disagrees with β");
    Ok(verdict)
}
