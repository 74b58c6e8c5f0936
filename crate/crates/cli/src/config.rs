use std::str::FromStr;

use mindex_core::algebra::{Poly, Rational, Var};
use mindex_core::families::{Family, FamilySpec, IndexSet};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::CliError;

fn default_y() -> String {
    "min".into()
}

fn default_nmax() -> usize {
    6
}

/// One verification instance. Every rational is a `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub family: String,
    /// Seed tokens, e.g. `"1I,2II"`; empty for the undeformed family.
    #[serde(default)]
    pub indices: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<String>,
    /// Four comma-separated values.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<String>,
    /// `"min"` (Y = 1) or the coefficients `c0,c1,...` of Y.
    #[serde(default = "default_y")]
    pub y: String,
    /// Explicit X coefficients; overrides `y` (negative controls).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<String>,
    #[serde(default = "default_nmax")]
    pub nmax: usize,
}

pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    Rational::from_str(s.trim()).map_err(|e| CliError::Usage(format!("bad rational {s:?}: {e}")))
}

pub fn parse_list(s: &str) -> Result<Vec<Rational>, CliError> {
    s.split(',').map(parse_rational).collect()
}

fn need<'a>(v: &'a Option<String>, name: &str, family: Family) -> Result<&'a str, CliError> {
    v.as_deref().ok_or_else(|| CliError::Usage(format!("family {family} needs --{name}")))
}

impl RunConfig {
    pub fn family(&self) -> Result<Family, CliError> {
        Family::from_str(&self.family).map_err(|e| CliError::Usage(e.to_string()))
    }

    pub fn spec(&self) -> Result<FamilySpec<Rational>, CliError> {
        let family = self.family()?;
        let stray = |v: &Option<String>, name: &str| -> Result<(), CliError> {
            match v {
                Some(_) => Err(CliError::Usage(format!("--{name} does not apply to family {family}"))),
                None => Ok(()),
            }
        };
        Ok(match family {
            Family::L => {
                stray(&self.h, "h")?;
                stray(&self.a, "a")?;
                stray(&self.t, "t")?;
                FamilySpec::laguerre(parse_rational(need(&self.g, "g", family)?)?)
            }
            Family::J => {
                stray(&self.a, "a")?;
                stray(&self.t, "t")?;
                let g = parse_rational(need(&self.g, "g", family)?)?;
                FamilySpec::jacobi(g, parse_rational(need(&self.h, "h", family)?)?)
            }
            Family::W | Family::AW => {
                stray(&self.g, "g")?;
                stray(&self.h, "h")?;
                let a = parse_list(need(&self.a, "a", family)?)?;
                let a: [Rational; 4] = a
                    .try_into()
                    .map_err(|v: Vec<Rational>| CliError::Usage(format!("--a needs 4 values, got {}", v.len())))?;
                if family == Family::W {
                    stray(&self.t, "t")?;
                    FamilySpec::wilson(a)
                } else {
                    FamilySpec::askey_wilson(a, parse_rational(need(&self.t, "t", family)?)?)?
                }
            }
        })
    }

    pub fn index_set(&self) -> Result<IndexSet, CliError> {
        IndexSet::from_str(&self.indices).map_err(|e| CliError::Usage(e.to_string()))
    }

    /// `Y`; `None` when an explicit X is given.
    pub fn y_poly(&self) -> Result<Option<Poly<Rational>>, CliError> {
        if self.x.is_some() {
            return Ok(None);
        }
        if self.y.trim() == "min" {
            return Ok(Some(Poly::one(Var::Eta)));
        }
        let y = Poly::new(parse_list(&self.y)?, Var::Eta);
        if y.is_zero() {
            return Err(CliError::Usage("Y must be nonzero".into()));
        }
        Ok(Some(y))
    }

    pub fn x_poly(&self) -> Result<Option<Poly<Rational>>, CliError> {
        self.x.as_deref().map(|s| Ok(Poly::new(parse_list(s)?, Var::Eta))).transpose()
    }

    /// Checks every field without building anything.
    pub fn validate(&self) -> Result<(), CliError> {
        self.spec()?;
        self.index_set()?;
        self.y_poly()?;
        self.x_poly()?;
        Ok(())
    }

    /// Content hash of the canonical JSON form; names sweep outputs.
    pub fn hash(&self) -> String {
        let json = serde_json::to_string(self).expect("config serializes");
        let digest = Sha256::digest(json.as_bytes());
        digest.iter().take(12).map(|b| format!("{b:02x}")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> RunConfig {
        RunConfig {
            family: "L".into(),
            indices: "1I".into(),
            g: Some("7/3".into()),
            h: None,
            a: None,
            t: None,
            y: "min".into(),
            x: None,
            nmax: 6,
        }
    }

    #[test]
    fn parses_laguerre() {
        let c = cfg();
        assert_eq!(c.spec().unwrap(), FamilySpec::laguerre(Rational::frac(7, 3)));
        assert_eq!(c.y_poly().unwrap(), Some(Poly::one(Var::Eta)));
    }

    #[test]
    fn rejects_stray_and_missing() {
        let mut c = cfg();
        c.h = Some("1".into());
        assert!(c.spec().is_err());
        let mut c = cfg();
        c.g = None;
        assert!(c.spec().is_err());
        let mut c = cfg();
        c.indices = "1I,1I".into();
        assert!(c.index_set().is_err());
    }

    #[test]
    fn unknown_toml_key_rejected() {
        let r: Result<RunConfig, _> = toml::from_str("family = \"L\"\ng = \"1\"\nbogus = 3\n");
        assert!(r.is_err());
    }

    #[test]
    fn hash_is_stable_and_sensitive() {
        let a = cfg();
        let mut b = cfg();
        assert_eq!(a.hash(), b.hash());
        b.nmax = 7;
        assert_ne!(a.hash(), b.hash());
    }
}
