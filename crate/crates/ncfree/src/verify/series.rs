use num_traits::{One, Zero};
use rand::Rng;

use super::{instance_rng, Params, Recorder};
use crate::error::Result;
use crate::freespace::{random_gaussian, random_series};
use crate::gaussian::GaussianRational;
use crate::ncseries::{moeb_series, sum_series, zeta_series, NCSeries};
use crate::rdiagonal::{absorb, free_re_im_condition, has_mixed_coefficients, re_im_series, DeterminingSeries};

pub(super) fn zetamoeb(p: &Params, rec: &mut Recorder) -> Result<()> {
    let d = p.degree;
    for nvars in 1..=if d <= 8 { 3 } else { 2 } {
        let (z, m, s) = (zeta_series(nvars, d)?, moeb_series(nvars, d)?, sum_series(nvars, d)?);
        rec.check(format!("nvars={nvars} Zeta⋆Moeb"), String::new, &s, &z.boxstar(&m)?);
        rec.check(format!("nvars={nvars} Moeb⋆Zeta"), String::new, &s, &m.boxstar(&z)?);
    }
    let small = d.min(6);
    for i in 0..p.instances {
        let mut rng = instance_rng(p.seed, i);
        let nvars = rng.gen_range(1..=2);
        let [f, g, h] = [0, 1, 2].map(|_| random_series(&mut rng, nvars, small, 3));
        let (f, g, h) = (f?, g?, h?);
        let inputs = || format!("f={f} g={g} h={h}");
        rec.check(format!("instance {i} associativity"), inputs, &f.boxstar(&g)?.boxstar(&h)?, &f.boxstar(&g.boxstar(&h)?)?);
        let (a, b) = (random_series(&mut rng, 1, d, d)?, random_series(&mut rng, 1, d, d)?);
        rec.check(format!("instance {i} one-variable commutativity"), || format!("a={a} b={b}"), &a.boxstar(&b)?, &b.boxstar(&a)?);
        for (name, c) in [("Zeta", zeta_series(nvars, small)?), ("Moeb", moeb_series(nvars, small)?)] {
            rec.check(format!("instance {i} {name} central"), || format!("f={f}"), &c.boxstar(&f)?, &f.boxstar(&c)?);
        }
    }
    Ok(())
}

pub(super) fn free_re_im(p: &Params, rec: &mut Recorder) -> Result<()> {
    let d = p.degree;
    let moeb = DeterminingSeries::new(moeb_series(1, d)?)?;
    let z = NCSeries::univariate(d, &[GaussianRational::one()])?;
    rec.check("absorb(Moeb, z/(1-z))", String::new, &z, absorb(&moeb, &zeta_series(1, d)?)?.series());

    let zeta = zeta_series(1, d)?;
    rec.holds("z/(1-z) is accepted", String::new, free_re_im_condition(&zeta)?);
    for i in 0..p.instances {
        let mut rng = instance_rng(p.seed, i);
        let mut c = zeta.univariate_coeffs()?;
        let k = i % d;
        let mut bump = random_gaussian(&mut rng);
        if bump.is_zero() {
            bump = GaussianRational::one();
        }
        c[k] = &c[k] + &bump;
        let cand = NCSeries::univariate(d, &c)?;
        rec.holds(format!("perturbation {i} rejected"), || cand.to_string(), !free_re_im_condition(&cand)?);
    }

    // no mixed real/imaginary coefficient iff β_k = 0 for k ≥ 2
    let half = 3;
    for i in 0..p.instances {
        let mut rng = instance_rng(p.seed ^ 0x1013, i);
        let tail_zero = i % 2 == 0;
        let beta: Vec<GaussianRational> =
            (0..half).map(|k| if k > 0 && tail_zero { GaussianRational::zero() } else { random_gaussian(&mut rng) }).collect();
        let g = DeterminingSeries::from_coeffs(half, &beta)?;
        let s = re_im_series(&g)?;
        let want = beta[1..].iter().all(Zero::is_zero);
        rec.check(format!("instance {i} change of variables"), || g.series().to_string(), &want, &!has_mixed_coefficients(&s));
    }
    Ok(())
}
