use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Subregular families. `Nc` and `Sf` share one decider.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Mon,
    Fin,
    Nil,
    Comb,
    Def,
    Sydef,
    Inf,
    Pre,
    Suf,
    Ord,
    Comm,
    Circ,
    Nc,
    Sf,
    Ps,
    Uf,
    Star,
    Lcom,
    Rcom,
    Twocom,
}

impl Family {
    pub const ALL: [Family; 20] = [
        Family::Mon,
        Family::Fin,
        Family::Nil,
        Family::Comb,
        Family::Def,
        Family::Sydef,
        Family::Inf,
        Family::Pre,
        Family::Suf,
        Family::Ord,
        Family::Comm,
        Family::Circ,
        Family::Nc,
        Family::Sf,
        Family::Ps,
        Family::Uf,
        Family::Star,
        Family::Lcom,
        Family::Rcom,
        Family::Twocom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Mon => "MON",
            Family::Fin => "FIN",
            Family::Nil => "NIL",
            Family::Comb => "COMB",
            Family::Def => "DEF",
            Family::Sydef => "SYDEF",
            Family::Inf => "INF",
            Family::Pre => "PRE",
            Family::Suf => "SUF",
            Family::Ord => "ORD",
            Family::Comm => "COMM",
            Family::Circ => "CIRC",
            Family::Nc => "NC",
            Family::Sf => "SF",
            Family::Ps => "PS",
            Family::Uf => "UF",
            Family::Star => "STAR",
            Family::Lcom => "LCOM",
            Family::Rcom => "RCOM",
            Family::Twocom => "2COM",
        }
    }

    /// Families without a complete decider; only partial rules apply.
    pub fn is_partial(self) -> bool {
        matches!(
            self,
            Family::Sydef | Family::Uf | Family::Lcom | Family::Rcom | Family::Twocom
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        let up = s.trim().to_ascii_uppercase();
        if up == "TWOCOM" {
            return Ok(Family::Twocom);
        }
        Family::ALL
            .into_iter()
            .find(|f| f.name() == up)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown family '{s}'")))
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for Family {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Verdict {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            Verdict::Yes => Some(true),
            Verdict::No => Some(false),
            Verdict::Unknown => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Decider,
    PartialRule,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Decider => "decider",
            Method::PartialRule => "partial-rule",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyVerdict {
    pub family: Family,
    pub verdict: Verdict,
    pub method: Method,
    pub evidence: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub caveat: Option<String>,
}

impl FamilyVerdict {
    pub(crate) fn decided(family: Family, yes: bool, evidence: impl Into<String>) -> Self {
        FamilyVerdict {
            family,
            verdict: Verdict::from_bool(yes),
            method: Method::Decider,
            evidence: evidence.into(),
            caveat: None,
        }
    }

    pub(crate) fn partial(family: Family, verdict: Verdict, evidence: impl Into<String>) -> Self {
        FamilyVerdict {
            family,
            verdict,
            method: Method::PartialRule,
            evidence: evidence.into(),
            caveat: None,
        }
    }

    pub fn is_yes(&self) -> bool {
        self.verdict == Verdict::Yes
    }

    pub fn is_no(&self) -> bool {
        self.verdict == Verdict::No
    }
}
