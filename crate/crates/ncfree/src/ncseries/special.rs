use num_bigint::BigInt;

use super::{words_up_to, NCSeries};
use crate::error::Result;
use crate::gaussian::GaussianRational;
use crate::ncpart::catalan;

/// `(-1)^{k+1} (2k-2)! / ((k-1)! k!)`, the signed Catalan number `±C_{k-1}`.
pub fn moeb_coefficient(k: usize) -> GaussianRational {
    assert!(k >= 1, "Moeb has no constant term");
    let c = GaussianRational::from(BigInt::from(catalan(k - 1)));
    if k % 2 == 1 {
        c
    } else {
        -c
    }
}

/// Every word has coefficient 1.
pub fn zeta_series(nvars: usize, degree_cap: usize) -> Result<NCSeries> {
    NCSeries::zero(nvars, degree_cap)?;
    NCSeries::from_terms(nvars, degree_cap, words_up_to(nvars, degree_cap).map(|w| (w, GaussianRational::from_int(1))))
}

/// The ⋆-inverse of Zeta: a word of length `k` has coefficient [`moeb_coefficient`]`(k)`.
pub fn moeb_series(nvars: usize, degree_cap: usize) -> Result<NCSeries> {
    NCSeries::zero(nvars, degree_cap)?;
    let coeffs: Vec<GaussianRational> = (1..=degree_cap).map(moeb_coefficient).collect();
    NCSeries::from_terms(
        nvars,
        degree_cap,
        words_up_to(nvars, degree_cap).map(|w| {
            let c = coeffs[w.len() - 1].clone();
            (w, c)
        }),
    )
}

/// `z_1 + ... + z_n`, the unit of ⋆.
pub fn sum_series(nvars: usize, degree_cap: usize) -> Result<NCSeries> {
    NCSeries::from_terms(nvars, degree_cap, (1..=nvars).map(|l| (vec![l as u8], GaussianRational::from_int(1))))
}
