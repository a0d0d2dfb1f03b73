use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::FreeSpace;
use crate::error::{Error, Result};
use crate::ncseries::NCSeries;

/// On-disk shape: `{"variables", "families", "family_r", "degree_cap", "tracial"}`.
#[derive(Serialize, Deserialize)]
struct SpaceRepr {
    variables: Vec<String>,
    families: Vec<Vec<String>>,
    family_r: Vec<NCSeries>,
    degree_cap: usize,
    tracial: bool,
}

impl FreeSpace {
    fn repr(&self) -> SpaceRepr {
        SpaceRepr {
            variables: self.variables.clone(),
            families: (0..self.num_families()).map(|f| self.family(f).into_iter().map(String::from).collect()).collect(),
            family_r: self.family_r.clone(),
            degree_cap: self.degree_cap,
            tracial: self.tracial,
        }
    }

    fn from_repr(r: SpaceRepr) -> Result<Self> {
        if r.families.len() != r.family_r.len() {
            return Err(Error::Parse("one series per family expected".into()));
        }
        let mut b = FreeSpace::builder(r.degree_cap).tracial(r.tracial);
        for (names, series) in r.families.into_iter().zip(r.family_r) {
            b = b.family(&names, series);
        }
        let s = b.build()?;
        if s.variables != r.variables {
            return Err(Error::Parse("variable list disagrees with the families".into()));
        }
        Ok(s)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.repr()).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let r: SpaceRepr = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_repr(r)
    }
}

impl Serialize for FreeSpace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.repr().serialize(s)
    }
}

impl<'de> Deserialize<'de> for FreeSpace {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Self::from_repr(SpaceRepr::deserialize(d)?).map_err(D::Error::custom)
    }
}
