//! Symbolic non-commutative probability spaces: named variables split into
//! mutually free families, each family given by its joint R-series.
//!
//! Mixed cumulants across families vanish by construction, so a space is a
//! complete, finite description of the joint distribution up to the cap.

mod checks;
mod moments;
mod random;
mod serial;
mod transform;

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};
use crate::ncseries::NCSeries;

pub use moments::MomentEngine;
pub use random::{necklaces, random_diagonally_balanced_pair, random_gaussian, random_rational, random_series, random_tracial_series};
pub use transform::{m_from_r, m_from_r_direct, r_from_m, MomentFunctional};

/// Index of a variable inside its space.
pub(crate) type Var = u16;

/// A formal product of variables, e.g. `a*p1*p2`.
///
/// Products are never simplified: `u*v` with `v` an inverse of `u` is still a
/// word of length two.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(Vec<String>);

impl Element {
    pub fn var(name: impl Into<String>) -> Self {
        Element(vec![name.into()])
    }

    pub fn product<I, S>(factors: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let f: Vec<String> = factors.into_iter().map(Into::into).collect();
        if f.is_empty() {
            return domain("a product needs at least one factor");
        }
        Ok(Element(f))
    }

    pub fn factors(&self) -> &[String] {
        &self.0
    }

    /// Number of factors.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromStr for Element {
    type Err = Error;

    /// Factors separated by `*` or `·`.
    fn from_str(s: &str) -> Result<Self> {
        let f: Vec<String> = s.split(['*', '·']).map(|t| t.trim().to_string()).collect();
        if f.iter().any(|t| t.is_empty() || t.contains(char::is_whitespace)) {
            return Err(Error::Parse(format!("bad product {s:?}")));
        }
        Ok(Element(f))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.join("*"))
    }
}

/// Mutually free families of variables with prescribed joint cumulants.
///
/// ```
/// use ncfree::freespace::FreeSpace;
/// use ncfree::{GaussianRational, NCSeries};
///
/// let semi = NCSeries::from_terms(1, 4, [(vec![1, 1], GaussianRational::from_int(1))]).unwrap();
/// let s = FreeSpace::builder(4).family(&["a"], semi.clone()).family(&["b"], semi).build().unwrap();
/// assert_eq!(s.mixed_moment(&["a", "b", "b", "a"]).unwrap(), GaussianRational::from_int(1));
/// assert_eq!(s.mixed_moment(&["a", "b", "a", "b"]).unwrap(), GaussianRational::from_int(0));
/// ```
#[derive(Clone, Debug)]
pub struct FreeSpace {
    variables: Vec<String>,
    families: Vec<Vec<Var>>,
    family_r: Vec<NCSeries>,
    degree_cap: usize,
    tracial: bool,
    /// (family, 1-based letter inside the family) per variable
    home: Vec<(usize, u8)>,
    /// prefixes of the words carrying a nonzero cumulant, per family
    prefixes: Vec<HashSet<Vec<u8>>>,
    index: HashMap<String, Var>,
}

/// Collects families before validation.
#[derive(Clone, Debug)]
pub struct FreeSpaceBuilder {
    degree_cap: usize,
    tracial: bool,
    families: Vec<(Vec<String>, NCSeries)>,
}

impl FreeSpaceBuilder {
    /// Adds a family; variable `names[j]` is `z_{j+1}` of `r`.
    pub fn family<S: AsRef<str>>(mut self, names: &[S], r: NCSeries) -> Self {
        self.families.push((names.iter().map(|s| s.as_ref().to_string()).collect(), r));
        self
    }

    /// Marks the space tracial; `build` then insists on cyclic invariance.
    pub fn tracial(mut self, yes: bool) -> Self {
        self.tracial = yes;
        self
    }

    pub fn build(self) -> Result<FreeSpace> {
        if self.families.is_empty() {
            return domain("a space needs at least one family");
        }
        let mut variables = Vec::new();
        let mut index = HashMap::new();
        let mut families = Vec::new();
        let mut home = Vec::new();
        let mut family_r = Vec::new();
        let mut prefixes = Vec::new();
        for (f, (names, r)) in self.families.into_iter().enumerate() {
            if names.is_empty() {
                return domain("empty family");
            }
            if r.nvars() != names.len() {
                return domain(format!("family {f} names {} variables but its series has {}", names.len(), r.nvars()));
            }
            if r.degree_cap() != self.degree_cap {
                return domain(format!("family {f} has cap {}, space has {}", r.degree_cap(), self.degree_cap));
            }
            if self.tracial && !r.is_cyclically_invariant() {
                return domain(format!("family {f} is not invariant under cyclic rotation"));
            }
            let mut members = Vec::new();
            for (j, name) in names.into_iter().enumerate() {
                if name.is_empty() || name.contains(['*', '·']) || name.contains(char::is_whitespace) {
                    return domain(format!("bad variable name {name:?}"));
                }
                if variables.len() >= Var::MAX as usize {
                    return domain("too many variables");
                }
                let v = variables.len() as Var;
                if index.insert(name.clone(), v).is_some() {
                    return domain(format!("variable {name} declared twice"));
                }
                variables.push(name);
                home.push((f, j as u8 + 1));
                members.push(v);
            }
            let mut pre = HashSet::new();
            for (w, _) in r.iter() {
                let l = w.letters();
                for k in 1..=l.len() {
                    pre.insert(l[..k].to_vec());
                }
            }
            families.push(members);
            prefixes.push(pre);
            family_r.push(r);
        }
        Ok(FreeSpace { variables, families, family_r, degree_cap: self.degree_cap, tracial: self.tracial, home, prefixes, index })
    }
}

impl FreeSpace {
    pub fn builder(degree_cap: usize) -> FreeSpaceBuilder {
        FreeSpaceBuilder { degree_cap, tracial: false, families: Vec::new() }
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    pub fn is_tracial(&self) -> bool {
        self.tracial
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn num_families(&self) -> usize {
        self.families.len()
    }

    /// Variable names of family `f`.
    pub fn family(&self, f: usize) -> Vec<&str> {
        self.families[f].iter().map(|&v| self.variables[v as usize].as_str()).collect()
    }

    /// Joint R-series of family `f`.
    pub fn family_r(&self, f: usize) -> &NCSeries {
        &self.family_r[f]
    }

    /// Index of the family holding `name`.
    pub fn family_of(&self, name: &str) -> Result<usize> {
        Ok(self.home[self.resolve(name)? as usize].0)
    }

    pub(crate) fn resolve(&self, name: &str) -> Result<Var> {
        self.index.get(name).copied().ok_or_else(|| Error::Domain(format!("unknown variable {name}")))
    }

    /// Concatenated factors of `elems`.
    pub(crate) fn expand(&self, elems: &[&Element]) -> Result<Vec<Var>> {
        let mut out = Vec::new();
        for e in elems {
            for f in e.factors() {
                out.push(self.resolve(f)?);
            }
        }
        Ok(out)
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len > self.degree_cap {
            return Err(Error::CapExceeded { needed: len, cap: self.degree_cap });
        }
        Ok(())
    }

    /// `φ(x_1 ⋯ x_k)` for variable names `x_i`; the empty word gives 1.
    pub fn mixed_moment<S: AsRef<str>>(&self, word: &[S]) -> Result<crate::GaussianRational> {
        self.engine().moment_of_names(word)
    }

    /// A moment evaluator whose memo outlives single queries.
    pub fn engine(&self) -> MomentEngine<'_> {
        MomentEngine::new(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::GaussianRational;

    fn semi(cap: usize) -> NCSeries {
        NCSeries::from_terms(1, cap, [(vec![1, 1], GaussianRational::from_int(1))]).unwrap()
    }

    #[test]
    fn element_parsing() {
        let e: Element = "a * p1·p2".parse().unwrap();
        assert_eq!(e.factors(), ["a", "p1", "p2"]);
        assert_eq!(e.to_string(), "a*p1*p2");
        assert!("a**b".parse::<Element>().is_err());
        assert!("".parse::<Element>().is_err());
    }

    #[test]
    fn builder_rejects_bad_input() {
        assert!(FreeSpace::builder(4).family(&["a"], semi(4)).family(&["a"], semi(4)).build().is_err());
        assert!(FreeSpace::builder(4).family(&["a", "b"], semi(4)).build().is_err());
        assert!(FreeSpace::builder(5).family(&["a"], semi(4)).build().is_err());
        let skew = NCSeries::from_terms(2, 4, [(vec![1, 2], GaussianRational::from_int(1))]).unwrap();
        assert!(FreeSpace::builder(4).family(&["a", "b"], skew.clone()).tracial(true).build().is_err());
        assert!(FreeSpace::builder(4).family(&["a", "b"], skew).build().is_ok());
    }

    #[test]
    fn lookups() {
        let s = FreeSpace::builder(4).family(&["a"], semi(4)).family(&["b"], semi(4)).build().unwrap();
        assert_eq!(s.family_of("b").unwrap(), 1);
        assert_eq!(s.family(0), ["a"]);
        assert!(s.family_of("c").is_err());
        assert!(s.mixed_moment(&["a", "c"]).is_err());
    }
}
