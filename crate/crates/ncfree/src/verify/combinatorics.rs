use std::collections::HashSet;

use rayon::prelude::*;

use super::{Params, Recorder};
use crate::epscomp::{build_layout, is_eps_alternating, verify_prop_811, EpsString};
use crate::error::Result;
use crate::ncpart::{
    count_intervals, enumerate_nc, has_odd_block, has_odd_gap_block, interlace_noncrossing, interval_count_formula, interval_to_pprsv,
    intervals, is_parity_alternating, is_parity_preserving, kreweras, pprsv_to_interval, relative_complement_via_2n, relative_kreweras,
    Partition,
};

pub(super) fn interlacing(p: &Params, rec: &mut Recorder) -> Result<()> {
    for n in 1..=p.degree {
        let all = enumerate_nc(n)?;
        for rho in &all {
            let k = kreweras(rho);
            for pi in &all {
                rec.check(format!("n={n} π={pi} ρ={rho}"), String::new, &pi.refines(&k)?, &interlace_noncrossing(pi, rho)?);
            }
        }
    }
    Ok(())
}

pub(super) fn intervals_through_2n(p: &Params, rec: &mut Recorder) -> Result<()> {
    for n in 1..=p.degree {
        let mut images = HashSet::new();
        for pair in intervals(n)? {
            let case = format!("n={n} π={} ρ={}", pair.lower(), pair.upper());
            let sigma = interval_to_pprsv(&pair);
            rec.holds(format!("{case} parity-preserving image"), || sigma.to_string(), is_parity_preserving(&sigma)?);
            rec.check(format!("{case} round trip"), String::new, &pair, &pprsv_to_interval(&sigma)?);
            let direct = relative_kreweras(pair.lower(), pair.upper())?;
            rec.check(format!("{case} K_ρ(π)"), String::new, &direct, &relative_complement_via_2n(&pair));
            images.insert(sigma);
        }
        let pprsv = enumerate_nc(2 * n)?.iter().filter(|s| is_parity_preserving(s).unwrap_or(false)).count();
        rec.check(format!("n={n} bijection onto parity-preserving"), String::new, &pprsv, &images.len());
    }
    Ok(())
}

pub(super) fn interval_counts(p: &Params, rec: &mut Recorder) -> Result<()> {
    for n in 1..=p.degree {
        let formula = interval_count_formula(n).to_string();
        let all = enumerate_nc(2 * n)?;
        let palt = all.iter().filter(|s| is_parity_alternating(s).unwrap_or(false)).count();
        let pprsv = all.iter().filter(|s| is_parity_preserving(s).unwrap_or(false)).count();
        rec.check(format!("n={n} intervals"), String::new, &formula, &count_intervals(n)?.to_string());
        rec.check(format!("n={n} parity-alternating"), String::new, &formula, &palt.to_string());
        rec.check(format!("n={n} parity-preserving"), String::new, &formula, &pprsv.to_string());
    }
    Ok(())
}

pub(super) fn odd_blocks(p: &Params, rec: &mut Recorder) -> Result<()> {
    for n in 1..=p.degree {
        for pi in enumerate_nc(n)? {
            rec.check(format!("n={n} π={pi}"), String::new, &has_odd_block(&pi), &has_odd_gap_block(&pi));
        }
    }
    Ok(())
}

/// Runs `body` over every balanced ε of even length up to `degree` and every
/// σ ∈ NC(m), in parallel over ε, merging in a fixed order.
fn sweep_balanced<F>(degree: usize, rec: &mut Recorder, body: F) -> Result<()>
where
    F: Fn(&EpsString, &Partition, &mut Recorder) -> Result<()> + Sync,
{
    for m in (2..=degree).step_by(2) {
        let all = enumerate_nc(m)?;
        let parts: Vec<Result<Recorder>> = EpsString::balanced(m)
            .collect::<Vec<_>>()
            .par_iter()
            .map(|e| {
                let mut r = Recorder::default();
                for sigma in &all {
                    body(e, sigma, &mut r)?;
                }
                Ok(r)
            })
            .collect();
        for r in parts {
            rec.merge(r?);
        }
    }
    Ok(())
}

pub(super) fn complement_structure(p: &Params, rec: &mut Recorder) -> Result<()> {
    sweep_balanced(p.degree, rec, |e, sigma, r| {
        let l = build_layout(e);
        r.holds(format!("ε={e} σ={sigma} transitive"), String::new, l.relations_transitive(sigma));
        if is_eps_alternating(sigma, e) {
            let q = l.cq(sigma)?;
            r.holds(format!("ε={e} σ={sigma} closure"), || format!("C_Q(σ)={q}"), is_eps_alternating(&q, e));
        }
        Ok(())
    })?;
    // C_Q(σ) is the largest τ that can sit on the Q's beside σ on the P's
    for m in 1..=p.degree.min(5) {
        let all = enumerate_nc(m)?;
        for e in EpsString::all(m) {
            let l = build_layout(&e);
            for sigma in &all {
                let c = l.cq(sigma)?;
                for tau in &all {
                    rec.check(format!("ε={e} σ={sigma} τ={tau} compatible"), String::new, &tau.refines(&c)?, &l.compatible(sigma, tau));
                }
            }
        }
    }
    Ok(())
}

pub(super) fn complement_doubling(p: &Params, rec: &mut Recorder) -> Result<()> {
    sweep_balanced(p.degree, rec, |e, sigma, r| {
        if !is_eps_alternating(sigma, e) {
            return Ok(());
        }
        let l = build_layout(e);
        let (q, red) = (l.cq(sigma)?, l.cr(sigma)?);
        let matched: Vec<usize> = red
            .blocks()
            .iter()
            .filter_map(|a| {
                let b = q.block_of(l.red()[a[0] - 1])?;
                let inside = a.iter().all(|&j| b.contains(&l.red()[j - 1]));
                (inside && b.len() == 2 * a.len()).then_some(b[0])
            })
            .collect();
        let distinct: HashSet<usize> = matched.iter().copied().collect();
        let ok = matched.len() == red.num_blocks() && distinct.len() == q.num_blocks();
        r.holds(format!("ε={e} σ={sigma}"), || format!("C_Q={q} C_R={red}"), ok);
        Ok(())
    })
}

pub(super) fn eps_alternation(p: &Params, rec: &mut Recorder) -> Result<()> {
    sweep_balanced(p.degree, rec, |e, sigma, r| {
        r.holds(format!("ε={e} σ={sigma}"), String::new, verify_prop_811(sigma, e)?);
        Ok(())
    })
}
