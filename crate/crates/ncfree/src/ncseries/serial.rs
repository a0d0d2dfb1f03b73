use std::fmt::Write;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::NCSeries;
use crate::error::{Error, Result};
use crate::gaussian::{format_rational, parse_rational, GaussianRational};

/// On-disk shape: `{"nvars", "degree_cap", "terms": [[word, re, im], ...]}`
/// with terms sorted by (length, word) and rationals as `"p/q"` strings.
#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    nvars: usize,
    degree_cap: usize,
    terms: Vec<(Vec<u8>, String, String)>,
}

impl NCSeries {
    fn repr(&self) -> SeriesRepr {
        SeriesRepr {
            nvars: self.nvars,
            degree_cap: self.degree_cap,
            terms: self
                .terms()
                .into_iter()
                .map(|(w, c)| (w.letters().to_vec(), format_rational(c.re()), format_rational(c.im())))
                .collect(),
        }
    }

    fn from_repr(r: SeriesRepr) -> Result<Self> {
        let mut s = NCSeries::zero(r.nvars, r.degree_cap)?;
        for (w, re, im) in r.terms {
            s.add_term(&w, &GaussianRational::new(parse_rational(&re)?, parse_rational(&im)?))?;
        }
        Ok(s)
    }

    /// Canonical JSON text, one term per line.
    pub fn to_json(&self) -> String {
        let r = self.repr();
        let mut out = String::new();
        writeln!(out, "{{\n  \"nvars\": {},\n  \"degree_cap\": {},", r.nvars, r.degree_cap).unwrap();
        if r.terms.is_empty() {
            out.push_str("  \"terms\": []\n}\n");
            return out;
        }
        out.push_str("  \"terms\": [\n");
        for (k, t) in r.terms.iter().enumerate() {
            let sep = if k + 1 == r.terms.len() { "" } else { "," };
            writeln!(out, "    {}{sep}", serde_json::to_string(t).expect("plain data")).unwrap();
        }
        out.push_str("  ]\n}\n");
        out
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let r: SeriesRepr = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_repr(r)
    }
}

impl Serialize for NCSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.repr().serialize(s)
    }
}

impl<'de> Deserialize<'de> for NCSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        NCSeries::from_repr(SeriesRepr::deserialize(d)?).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_roundtrip_and_layout() {
        let s = NCSeries::from_terms(2, 3, [(vec![2, 1], "1/2".parse().unwrap()), (vec![1], "-3+1/4i".parse().unwrap())]).unwrap();
        let text = s.to_json();
        assert_eq!(
            text,
            "{\n  \"nvars\": 2,\n  \"degree_cap\": 3,\n  \"terms\": [\n    [[1],\"-3\",\"1/4\"],\n    [[2,1],\"1/2\",\"0\"]\n  ]\n}\n"
        );
        assert_eq!(NCSeries::from_json(&text).unwrap(), s);
        let via_serde: NCSeries = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        assert_eq!(via_serde, s);
    }

    #[test]
    fn rejects_bad_files() {
        assert!(NCSeries::from_json("{").is_err());
        let too_long = r#"{"nvars":1,"degree_cap":1,"terms":[[[1,1],"1","0"]]}"#;
        assert!(NCSeries::from_json(too_long).is_err());
        let bad_num = r#"{"nvars":1,"degree_cap":1,"terms":[[[1],"x","0"]]}"#;
        assert!(NCSeries::from_json(bad_num).is_err());
    }

    #[test]
    fn empty_series() {
        let s = NCSeries::zero(1, 2).unwrap();
        assert_eq!(NCSeries::from_json(&s.to_json()).unwrap(), s);
    }
}
