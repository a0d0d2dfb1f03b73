//! Right-hand sides of the product-moment formulas as sums over `NC(m)`.

use num_traits::Zero;

use super::{build_layout, CircularLayout, EpsString};
use crate::error::Result;
use crate::freespace::{Element, FreeSpace};
use crate::gaussian::GaussianRational;
use crate::ncpart::enumerate_nc;
use crate::ncseries::NCSeries;

/// `Σ_σ coef_{w;σ}(r) · Π_{B ∈ C_Q(σ)} moment(q_word|B)`.
pub fn layout_sum<F>(layout: &CircularLayout, r: &NCSeries, w: &[u8], q_word: &[u8], mut moment: F) -> Result<GaussianRational>
where
    F: FnMut(&[u8]) -> Result<GaussianRational>,
{
    let mut total = GaussianRational::zero();
    for sigma in enumerate_nc(layout.eps().m())? {
        let c = r.coef_partition(w, &sigma)?;
        if c.is_zero() {
            continue;
        }
        let mut term = c;
        for b in layout.cq(&sigma)?.blocks() {
            let sub: Vec<u8> = b.iter().map(|&i| q_word[i - 1]).collect();
            term = &term * &moment(&sub)?;
        }
        total = &total + &term;
    }
    Ok(total)
}

/// `Σ_σ coef_{ε;σ}(R_a) · coef_{ε;C_Q(σ)}(M_p)`, with `moment_p` the joint
/// moments of `(p_1, p_2)`.
pub fn x_moment_sum<F>(eps: &EpsString, r_a: &NCSeries, moment_p: F) -> Result<GaussianRational>
where
    F: FnMut(&[u8]) -> Result<GaussianRational>,
{
    layout_sum(&build_layout(eps), r_a, eps.letters(), eps.letters(), moment_p)
}

/// `Σ_σ coef_{ε;σ}(R_a) · Π_{A ∈ C_R(σ)} φ((p_1p_2)^{|A|})`.
pub fn y_moment_sum<F>(eps: &EpsString, r_a: &NCSeries, mut moment_pp: F) -> Result<GaussianRational>
where
    F: FnMut(usize) -> Result<GaussianRational>,
{
    let layout = build_layout(eps);
    let mut total = GaussianRational::zero();
    for sigma in enumerate_nc(eps.m())? {
        let c = r_a.coef_partition(eps.letters(), &sigma)?;
        if c.is_zero() {
            continue;
        }
        let mut term = c;
        for b in layout.cr(&sigma)?.blocks() {
            term = &term * &moment_pp(b.len())?;
        }
        total = &total + &term;
    }
    Ok(total)
}

/// Both sides for `x_1 = a_1p_1, x_2 = p_2a_2` and `y_1 = a_1p_1p_2, y_2 = a_2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductMoments {
    pub x_lhs: GaussianRational,
    pub x_rhs: GaussianRational,
    pub y_lhs: GaussianRational,
    pub y_rhs: GaussianRational,
}

impl ProductMoments {
    pub fn holds(&self) -> bool {
        self.x_lhs == self.x_rhs && self.y_lhs == self.y_rhs
    }
}

/// Evaluates `φ(x_{l_1}⋯x_{l_m})` and `φ(y_{l_1}⋯y_{l_m})` directly and
/// through the layout sums. `names` are `a_1, a_2, p_1, p_2`, with `{a_1, a_2}`
/// free from `{p_1, p_2}` in `s`.
pub fn verify_eq72_73(eps: &EpsString, s: &FreeSpace, names: [&str; 4]) -> Result<ProductMoments> {
    let [a1, a2, p1, p2] = names;
    let x = [Element::product([a1, p1])?, Element::product([p2, a2])?];
    let y = [Element::product([a1, p1, p2])?, Element::var(a2)];
    let pick = |pair: &[Element; 2]| -> Vec<Element> { eps.letters().iter().map(|&l| pair[l as usize - 1].clone()).collect() };
    let mut eng = s.engine();
    let xw = pick(&x);
    let yw = pick(&y);
    let x_lhs = eng.moment_of(&xw.iter().collect::<Vec<_>>())?;
    let y_lhs = eng.moment_of(&yw.iter().collect::<Vec<_>>())?;
    let fam = s.family_of(a1)?;
    let r_a =
        if s.family(fam) == [a1, a2] { s.family_r(fam).clone() } else { s.joint_r_of(&[Element::var(a1), Element::var(a2)], eps.m())? };
    let x_rhs = x_moment_sum(eps, &r_a, |w| {
        let names: Vec<&str> = w.iter().map(|&l| if l == 1 { p1 } else { p2 }).collect();
        eng.moment_of_names(&names)
    })?;
    let y_rhs = y_moment_sum(eps, &r_a, |k| {
        let names: Vec<&str> = (0..k).flat_map(|_| [p1, p2]).collect();
        eng.moment_of_names(&names)
    })?;
    Ok(ProductMoments { x_lhs, x_rhs, y_lhs, y_rhs })
}
