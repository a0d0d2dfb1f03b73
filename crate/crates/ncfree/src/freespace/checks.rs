use std::collections::HashMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{r_from_m, Element, FreeSpace, MomentFunctional, Var};
use crate::error::{domain, Error, Result};
use crate::gaussian::GaussianRational;
use crate::ncpart::enumerate_nc;
use crate::ncseries::{words_up_to, NCSeries};

impl FreeSpace {
    /// Fails unless words of `degree` elements, at most `maxlen` factors each,
    /// fit under the cap.
    fn check_degree(&self, degree: usize, maxlen: usize) -> Result<()> {
        let needed = degree * maxlen;
        if needed > self.degree_cap {
            return Err(Error::CapExceeded { needed, cap: self.degree_cap });
        }
        Ok(())
    }

    /// Joint moment series of `elems` through words of `degree` elements;
    /// element `j` is the variable `z_{j+1}`.
    pub fn joint_moments(&self, elems: &[Element], degree: usize) -> Result<MomentFunctional> {
        if elems.is_empty() || elems.len() > u8::MAX as usize {
            return domain("need between 1 and 255 elements");
        }
        self.check_degree(degree, elems.iter().map(Element::len).max().unwrap_or(1))?;
        let expanded: Vec<Vec<Var>> = elems.iter().map(|e| self.expand(&[e])).collect::<Result<_>>()?;
        let mut eng = self.engine();
        let mut out = NCSeries::zero(elems.len(), degree)?;
        let mut buf = Vec::new();
        for w in words_up_to(elems.len(), degree) {
            buf.clear();
            for &l in &w {
                buf.extend_from_slice(&expanded[l as usize - 1]);
            }
            out.set(&w, eng.moment(&buf))?;
        }
        Ok(MomentFunctional::new(out))
    }

    /// `R(μ_{e_1,…,e_s})` through `degree`, via the moments of the expanded words.
    ///
    /// ```
    /// use ncfree::freespace::{Element, FreeSpace};
    /// use ncfree::{GaussianRational, NCSeries};
    /// let unit = NCSeries::from_terms(1, 6, [(vec![1], GaussianRational::from_int(1))]).unwrap();
    /// let s = FreeSpace::builder(6).family(&["a"], unit.clone()).family(&["b"], unit.clone()).build().unwrap();
    /// let ab: Element = "a*b".parse().unwrap();
    /// assert_eq!(s.joint_r_of(&[ab], 3).unwrap(), unit.truncate(3).unwrap());
    /// ```
    pub fn joint_r_of(&self, elems: &[Element], degree: usize) -> Result<NCSeries> {
        Ok(r_from_m(&self.joint_moments(elems, degree)?))
    }

    /// The groups are free: no coefficient of the joint R-series of their
    /// union touches two groups, through words of `degree` elements.
    pub fn check_freeness(&self, groups: &[Vec<Element>], degree: usize) -> Result<bool> {
        let mut all = Vec::new();
        let mut group_of = Vec::new();
        for (g, members) in groups.iter().enumerate() {
            if members.is_empty() {
                return domain(format!("group {g} is empty"));
            }
            for e in members {
                if all.contains(e) {
                    return domain(format!("{e} appears twice"));
                }
                all.push(e.clone());
                group_of.push(g);
            }
        }
        let r = self.joint_r_of(&all, degree)?;
        let pure = r.iter().all(|(w, _)| {
            let g = group_of[w.letters()[0] as usize - 1];
            w.letters().iter().all(|&l| group_of[l as usize - 1] == g)
        });
        Ok(pure)
    }

    /// Every family series is invariant under rotation, and so is the moment
    /// of every word checked: all words up to length 4 when there are at most
    /// a few hundred, otherwise a fixed pseudo-random sample of words up to the cap.
    pub fn check_trace(&self) -> bool {
        if !self.family_r.iter().all(NCSeries::is_cyclically_invariant) {
            return false;
        }
        let n = self.variables.len();
        let short = self.degree_cap.min(4);
        let samples: Vec<Vec<Var>> = if (1..=short).map(|k| n.saturating_pow(k as u32)).sum::<usize>() <= 400 {
            words_up_to(n, short).map(|w| w.into_iter().map(|l| l as Var - 1).collect()).collect()
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x7ace);
            (0..200)
                .map(|_| {
                    let k = rng.gen_range(1..=self.degree_cap.min(8));
                    (0..k).map(|_| rng.gen_range(0..n) as Var).collect()
                })
                .collect()
        };
        let mut eng = self.engine();
        samples.iter().all(|w| {
            let m = eng.moment(w);
            (1..w.len()).all(|r| {
                let rot: Vec<Var> = w[r..].iter().chain(&w[..r]).copied().collect();
                eng.moment(&rot) == m
            })
        })
    }

    /// Checks `φ(c_1x_1⋯c_mx_m) = [coef (1,…,m)](R(μ_{c_1,…,c_m}) ⋆ M(μ_{x_1,…,x_m}))`
    /// for every choice of `c_i` among `c_gens` and `x_i` among `x_elems`.
    pub fn freeness_criterion_46(&self, c_gens: &[Element], x_elems: &[Element], m: usize) -> Result<bool> {
        if !self.tracial {
            return domain("the criterion needs a tracial space");
        }
        if c_gens.is_empty() || x_elems.is_empty() || m == 0 {
            return domain("need generators, elements and m ≥ 1");
        }
        let lc = c_gens.iter().map(Element::len).max().unwrap_or(1);
        let lx = x_elems.iter().map(Element::len).max().unwrap_or(1);
        self.check_degree(m, lc + lx)?;
        let parts = enumerate_nc(m)?;
        let comps: Vec<_> = parts.iter().map(|p| p.kreweras()).collect();
        let mut eng = self.engine();
        let mut cumulants: HashMap<Vec<usize>, GaussianRational> = HashMap::new();
        for ci in tuples(c_gens.len(), m) {
            for xi in tuples(x_elems.len(), m) {
                let word: Vec<&Element> = ci.iter().zip(&xi).flat_map(|(&c, &x)| [&c_gens[c], &x_elems[x]]).collect();
                let lhs = eng.moment_of(&word)?;
                let mut rhs = GaussianRational::zero();
                for (pi, k) in parts.iter().zip(&comps) {
                    let mut term = GaussianRational::one();
                    for b in pi.blocks() {
                        let key: Vec<usize> = b.iter().map(|&i| ci[i - 1]).collect();
                        let kappa = match cumulants.get(&key) {
                            Some(v) => v.clone(),
                            None => {
                                let sub: Vec<&Element> = key.iter().map(|&c| &c_gens[c]).collect();
                                let v = eng.cumulant_of(&sub)?;
                                cumulants.insert(key, v.clone());
                                v
                            }
                        };
                        term *= &kappa;
                        if term.is_zero() {
                            break;
                        }
                    }
                    if term.is_zero() {
                        continue;
                    }
                    for b in k.blocks() {
                        let sub: Vec<&Element> = b.iter().map(|&i| &x_elems[xi[i - 1]]).collect();
                        term *= &eng.moment_of(&sub)?;
                    }
                    rhs += &term;
                }
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// All `m`-tuples over `0..n`.
fn tuples(n: usize, m: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n.pow(m as u32)).map(move |mut idx| {
        let mut t = vec![0; m];
        for slot in t.iter_mut().rev() {
            *slot = idx % n;
            idx /= n;
        }
        t
    })
}
