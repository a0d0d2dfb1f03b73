use num_traits::Zero;

use super::{instance_rng, Params, Recorder};
use crate::error::Result;
use crate::freespace::{random_diagonally_balanced_pair, random_tracial_series, Element, FreeSpace};
use crate::ncseries::{moeb_series, zeta_series, NCSeries};
use crate::rdiagonal::{
    absorb, alternating, circular_pair_r, determining_from_product, determining_series, haar_pair_r, is_diagonally_balanced_cumulants,
    is_diagonally_balanced_moments, is_r_diagonal, random_r_diagonal_pair, PairSeries,
};

/// Random R-diagonal `(a1, a2)` free from a random tracial `{p1, p2}`, cap `2d`.
struct Instance {
    space: FreeSpace,
    ra: PairSeries,
}

fn instance(seed: u64, i: usize, d: usize) -> Result<Instance> {
    let mut rng = instance_rng(seed, i);
    let ra = random_r_diagonal_pair(&mut rng, 2 * d, d.min(6))?;
    let rp = random_tracial_series(&mut rng, 2, 2 * d, 3, |_| true)?;
    let space = FreeSpace::builder(2 * d).family(&["a1", "a2"], ra.series().clone()).family(&["p1", "p2"], rp).tracial(true).build()?;
    Ok(Instance { space, ra })
}

fn el(s: &str) -> Element {
    s.parse().expect("element literal")
}

fn inputs(inst: &Instance) -> impl FnOnce() -> String + '_ {
    move || format!("R_a={} R_p={}", inst.ra.series(), inst.space.family_r(1))
}

/// R-diagonality of `(a1p1, p2a2)` and the determining-series formula.
fn product_pair(inst: &Instance, i: usize, d: usize, rec: &mut Recorder, check_diag: bool) -> Result<()> {
    let s = &inst.space;
    let rx = PairSeries::new(s.joint_r_of(&[el("a1*p1"), el("p2*a2")], d)?)?;
    let diag = is_r_diagonal(&rx);
    if check_diag {
        rec.holds(format!("instance {i:02} R-diagonal"), || format!("{} R_x={}", inputs(inst)(), rx.series()), diag);
    }
    if diag {
        let g = determining_series(&rx)?;
        let f = determining_series(&PairSeries::new(inst.ra.series().truncate(d)?)?)?;
        let rpp = s.joint_r_of(&[el("p1*p2")], d / 2)?;
        rec.check(format!("instance {i:02} g = f ⋆ R(μ_p1p2)"), inputs(inst), absorb(&f, &rpp)?.series(), g.series());
    }
    Ok(())
}

pub(super) fn conjugated_pairs(p: &Params, rec: &mut Recorder) -> Result<()> {
    let mut control = false;
    for i in 0..p.instances {
        let inst = instance(p.seed, i, p.degree)?;
        product_pair(&inst, i, p.degree, rec, true)?;
        if !control {
            let other = PairSeries::new(inst.space.joint_r_of(&[el("a1*p1"), el("a2*p2")], p.degree)?)?;
            control = !is_r_diagonal(&other);
        }
    }
    rec.holds("some (a1p1, a2p2) is not R-diagonal", String::new, control);
    Ok(())
}

pub(super) fn conjugated_determining(p: &Params, rec: &mut Recorder) -> Result<()> {
    for i in 0..p.instances {
        product_pair(&instance(p.seed, i, p.degree)?, i, p.degree, rec, false)?;
    }
    Ok(())
}

pub(super) fn determining_from_moments(p: &Params, rec: &mut Recorder) -> Result<()> {
    let d = p.degree;
    let half = d / 2;
    for i in 0..p.instances {
        let inst = instance(p.seed, i, d)?;
        let f = determining_from_product(&inst.space, &el("a1"), &el("a2"), half)?;
        let want = determining_series(&PairSeries::new(inst.ra.series().truncate(2 * half)?)?)?;
        rec.check(format!("instance {i:02} R-diagonal"), inputs(&inst), want.series(), f.series());

        // diagonally balanced: the alternating cumulants are read off f
        let mut rng = instance_rng(p.seed ^ 0x5e3, i);
        let rb = random_diagonally_balanced_pair(&mut rng, d, 4)?;
        let s = FreeSpace::builder(d).family(&["b1", "b2"], rb.clone()).tracial(true).build()?;
        let f = determining_from_product(&s, &el("b1"), &el("b2"), half)?.coefficients();
        for k in 1..=half {
            for start in [1, 2] {
                let c = rb.coef(&alternating(start, 2 * k))?;
                rec.check(format!("instance {i:02} balanced k={k} start={start}"), || rb.to_string(), &f[k - 1], &c);
            }
        }
    }
    let circ = FreeSpace::builder(2 * d).family(&["c", "cs"], circular_pair_r(2 * d)?.into_series()).tracial(true).build()?;
    rec.check("circular R(μ_cc*) = z/(1-z)", String::new, &zeta_series(1, d)?, &circ.joint_r_of(&[el("c*cs")], d)?);
    let haar = FreeSpace::builder(d).family(&["u", "us"], haar_pair_r(d)?.into_series()).tracial(true).build()?;
    let f = determining_from_product(&haar, &el("u"), &el("us"), half)?;
    rec.check("Haar f = Moeb", String::new, &moeb_series(1, half)?, f.series());
    Ok(())
}

fn odd_alternating_rotations(d: usize) -> impl Iterator<Item = Vec<u8>> {
    (1..=d).step_by(2).flat_map(|k| {
        [1u8, 2].into_iter().flat_map(move |s| {
            let w = alternating(s, k);
            (0..k).map(move |r| w[r..].iter().chain(&w[..r]).copied().collect::<Vec<u8>>())
        })
    })
}

pub(super) fn balance_forms(p: &Params, rec: &mut Recorder) -> Result<()> {
    let d = p.degree;
    for i in 0..p.instances {
        let mut rng = instance_rng(p.seed, i);
        let r: NCSeries = match i % 3 {
            0 => random_diagonally_balanced_pair(&mut rng, d, 4)?,
            1 => random_tracial_series(&mut rng, 2, d, 4, |_| true)?,
            _ => random_r_diagonal_pair(&mut rng, d, 4)?.into_series(),
        };
        let s = FreeSpace::builder(d).family(&["a1", "a2"], r.clone()).tracial(true).build()?;
        let pair = PairSeries::new(r.clone())?;
        let by_cumulants = is_diagonally_balanced_cumulants(&pair);
        let by_moments = is_diagonally_balanced_moments(&s, &el("a1"), &el("a2"), d)?;
        rec.check(format!("instance {i:02} moments vs cumulants"), || r.to_string(), &by_cumulants, &by_moments);
        if by_cumulants {
            let rotations_vanish = odd_alternating_rotations(d).all(|w| r.coef(&w).map(|c| c.is_zero()).unwrap_or(false));
            rec.holds(format!("instance {i:02} rotations vanish"), || r.to_string(), rotations_vanish);
        }
        if is_r_diagonal(&pair) {
            rec.holds(format!("instance {i:02} R-diagonal is balanced"), || r.to_string(), by_cumulants);
            let mut eng = s.engine();
            for n in 1..=d {
                for a in ["a1", "a2"] {
                    let m = eng.moment_of_names(&vec![a; n])?;
                    rec.holds(format!("instance {i:02} φ({a}^{n}) = 0"), || r.to_string(), m.is_zero());
                }
            }
        }
    }
    Ok(())
}
