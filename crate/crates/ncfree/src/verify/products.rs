use num_traits::Zero;

use super::{instance_rng, Params, Recorder};
use crate::epscomp::{build_layout, layout_sum, verify_eq72_73, EpsString};
use crate::error::Result;
use crate::freespace::{m_from_r, random_diagonally_balanced_pair, random_tracial_series, Element, FreeSpace};
use crate::gaussian::GaussianRational;
use crate::ncpart::enumerate_nc;
use crate::ncseries::{words_up_to, NCSeries};
use crate::rdiagonal::{determining_from_product, random_r_diagonal_pair};

const NAMES: [&str; 4] = ["a1", "a2", "p1", "p2"];

fn el(s: &str) -> Element {
    s.parse().expect("element literal")
}

/// `{a1, a2}` free from a random tracial `{p1, p2}`, with cap `3d` so that
/// the `y` words fit.
fn seven_space(seed: u64, i: usize, d: usize, r_diagonal: bool) -> Result<FreeSpace> {
    let mut rng = instance_rng(seed, i);
    let cap = 3 * d;
    let ra = if r_diagonal {
        random_r_diagonal_pair(&mut rng, cap, 4)?.into_series()
    } else {
        random_tracial_series(&mut rng, 2, cap, 3, |_| true)?
    };
    let rp = random_tracial_series(&mut rng, 2, cap, 3, |_| true)?;
    FreeSpace::builder(cap).family(&["a1", "a2"], ra).family(&["p1", "p2"], rp).tracial(true).build()
}

fn describe(s: &FreeSpace) -> String {
    format!("R_a={} R_p={}", s.family_r(0), s.family_r(1))
}

pub(super) fn layout_sums(p: &Params, rec: &mut Recorder) -> Result<()> {
    for i in 0..p.instances {
        let s = seven_space(p.seed, i, p.degree, false)?;
        for m in 1..=p.degree {
            for e in EpsString::all(m) {
                let pm = verify_eq72_73(&e, &s, NAMES)?;
                rec.check(format!("instance {i} ε={e} x"), || describe(&s), &pm.x_lhs, &pm.x_rhs);
                rec.check(format!("instance {i} ε={e} y"), || describe(&s), &pm.y_lhs, &pm.y_rhs);
            }
        }
    }
    Ok(())
}

pub(super) fn unbalanced_vanish(p: &Params, rec: &mut Recorder) -> Result<()> {
    let zero = GaussianRational::zero();
    for i in 0..p.instances {
        let s = seven_space(p.seed, i, p.degree, true)?;
        for m in 1..=p.degree {
            for e in EpsString::all(m).filter(|e| !e.is_balanced()) {
                let pm = verify_eq72_73(&e, &s, NAMES)?;
                rec.check(format!("instance {i} ε={e} x"), || describe(&s), &zero, &pm.x_lhs);
                rec.check(format!("instance {i} ε={e} y"), || describe(&s), &zero, &pm.y_lhs);
                rec.holds(format!("instance {i} ε={e} sums"), || describe(&s), pm.holds());
            }
        }
    }
    Ok(())
}

pub(super) fn x_y_agree(p: &Params, rec: &mut Recorder) -> Result<()> {
    for i in 0..p.instances {
        let s = seven_space(p.seed, i, p.degree, true)?;
        for m in (2..=p.degree).step_by(2) {
            for e in EpsString::balanced(m) {
                let pm = verify_eq72_73(&e, &s, NAMES)?;
                rec.check(format!("instance {i} ε={e}"), || describe(&s), &pm.x_lhs, &pm.y_lhs);
            }
        }
    }
    Ok(())
}

/// Haar `(u, ui)` free from two random diagonally balanced pairs, cap `2d`.
/// In the swapped form used below, `a_{j,1} = p_{j,2}·ui` and
/// `a_{j,2} = u·p_{j,1}`; these are letters `2j-1` and `2j`.
struct HaarInstance {
    space: FreeSpace,
    a: Vec<Element>,
}

fn haar_instance(seed: u64, i: usize, d: usize) -> Result<HaarInstance> {
    let mut rng = instance_rng(seed, i);
    let cap = 2 * d;
    let p1 = random_diagonally_balanced_pair(&mut rng, cap, 4)?;
    let p2 = random_diagonally_balanced_pair(&mut rng, cap, 4)?;
    let space = FreeSpace::builder(cap)
        .family(&["u", "ui"], crate::rdiagonal::haar_pair_r(cap)?.into_series())
        .family(&["p11", "p12"], p1)
        .family(&["p21", "p22"], p2)
        .tracial(true)
        .build()?;
    let a = ["p12*ui", "u*p11", "p22*ui", "u*p21"].map(el).to_vec();
    Ok(HaarInstance { space, a })
}

impl HaarInstance {
    fn describe(&self) -> String {
        format!("R_p1={} R_p2={}", self.space.family_r(1), self.space.family_r(2))
    }

    /// `Σ_j f_j(z_{j1}z_{j2}) + f_j(z_{j2}z_{j1})`, the free copy, with
    /// `f_j = R(μ_{p_{j,2}p_{j,1}}) ⋆ Moeb`.
    fn free_copy_r(&self, d: usize) -> Result<NCSeries> {
        let mut r = NCSeries::zero(4, d)?;
        for (j, (x, y)) in [("p12", "p11"), ("p22", "p21")].into_iter().enumerate() {
            let f = determining_from_product(&self.space, &el(x), &el(y), d / 2)?;
            let l = 2 * j as u8;
            r = r.add(&f.pair_series().series().extend_cap(d)?.relabel(4, &[l + 1, l + 2])?)?;
        }
        Ok(r)
    }
}

/// `l` of letter `x` in `1..=4`.
fn side(x: u8) -> u8 {
    (x - 1) % 2 + 1
}

fn vanishing_words(moments: &NCSeries, d: usize, rec: &mut Recorder, i: usize, inputs: impl Fn() -> String) {
    let mut all_two = Vec::new();
    let mut unbalanced = Vec::new();
    for w in words_up_to(4, d) {
        let ones = w.iter().filter(|&&x| side(x) == 1).count();
        let nonzero = moments.get(&w).is_some();
        if ones == 0 && nonzero {
            all_two.push(w.clone());
        }
        if 2 * ones != w.len() && nonzero {
            unbalanced.push(w);
        }
    }
    rec.check(format!("instance {i} all-2 words vanish"), &inputs, "[]", &format!("{all_two:?}"));
    rec.check(format!("instance {i} unbalanced words vanish"), &inputs, "[]", &format!("{unbalanced:?}"));
}

pub(super) fn haar_conjugates(p: &Params, rec: &mut Recorder) -> Result<()> {
    let d = p.degree;
    for i in 0..p.instances {
        let inst = haar_instance(p.seed, i, d)?;
        let groups = vec![vec![el("u*p11"), el("p12*ui")], vec![el("u*p21"), el("p22*ui")]];
        let direct = inst.space.check_freeness(&groups, d)?;
        let moments = inst.space.joint_moments(&inst.a, d)?;
        let copy = m_from_r(&inst.free_copy_r(d)?);
        let via_copy = moments.series() == copy.series();
        rec.holds(format!("instance {i} free by cumulants"), || inst.describe(), direct);
        rec.holds(format!("instance {i} moments match the free copy"), || inst.describe(), via_copy);
        vanishing_words(moments.series(), d, rec, i, || inst.describe());
    }
    Ok(())
}

pub(super) fn haar_vanishing(p: &Params, rec: &mut Recorder) -> Result<()> {
    for i in 0..p.instances {
        let inst = haar_instance(p.seed, i, p.degree)?;
        let moments = inst.space.joint_moments(&inst.a, p.degree)?;
        vanishing_words(moments.series(), p.degree, rec, i, || inst.describe());
    }
    Ok(())
}

pub(super) fn haar_product_sums(p: &Params, rec: &mut Recorder) -> Result<()> {
    let d = p.degree;
    for i in 0..p.instances {
        let inst = haar_instance(p.seed, i, d)?;
        let s = &inst.space;
        let rp = s.joint_r_of(&["p12", "p11", "p22", "p21"].map(el), d)?;
        let rb = inst.free_copy_r(d)?;
        let mut eng = s.engine();
        for m in 1..=d {
            let parts = enumerate_nc(m)?;
            for e in EpsString::all(m) {
                let layout = build_layout(&e);
                let q_word: Vec<u8> = e.lambdas().iter().map(|&l| if l == 1 { 1 } else { 2 }).collect();
                for h in words_up_to(2, m).filter(|h| h.len() == m) {
                    let w: Vec<u8> = h.iter().zip(e.letters()).map(|(&h, &l)| 2 * (h - 1) + l).collect();
                    let word: Vec<&Element> = w.iter().map(|&x| &inst.a[x as usize - 1]).collect();
                    let direct = eng.moment_of(&word)?;
                    let mut haar = s.engine();
                    let via_haar = layout_sum(&layout, &rp, &w, &q_word, |v| {
                        let names: Vec<&str> = v.iter().map(|&x| if x == 1 { "u" } else { "ui" }).collect();
                        haar.moment_of_names(&names)
                    })?;
                    let mut via_copy = GaussianRational::zero();
                    for sigma in &parts {
                        via_copy = &via_copy + &rb.coef_partition(&w, sigma)?;
                    }
                    let case = format!("instance {i} ε={e} h={h:?}");
                    rec.check(format!("{case} Haar sum"), || inst.describe(), &direct, &via_haar);
                    rec.check(format!("{case} free-copy sum"), || inst.describe(), &direct, &via_copy);
                }
            }
        }
    }
    Ok(())
}

pub(super) fn sandwich_freeness(p: &Params, rec: &mut Recorder) -> Result<()> {
    let d = p.degree;
    for i in 0..p.instances {
        let mut rng = instance_rng(p.seed, i);
        let cap = 3 * d;
        let rb = random_diagonally_balanced_pair(&mut rng, cap, 4)?;
        let ra = random_tracial_series(&mut rng, 2, cap, 3, |_| true)?;
        let s = FreeSpace::builder(cap).family(&["b1", "b2"], rb.clone()).family(&["a1", "a2"], ra.clone()).tracial(true).build()?;
        let c = vec![el("b1*a1*b2"), el("b1*a2*b2")];
        let x = vec![el("a1"), el("a2")];
        let inputs = || format!("R_b={rb} R_a={ra}");
        rec.holds(format!("instance {i} free"), inputs, s.check_freeness(&[c.clone(), x.clone()], d)?);
        for m in 1..=d.min(3) {
            rec.holds(format!("instance {i} criterion m={m}"), inputs, s.freeness_criterion_46(&c, &x, m)?);
        }
    }
    Ok(())
}
