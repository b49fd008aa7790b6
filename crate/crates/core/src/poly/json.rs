//! JSON wire format for bivariate polynomials:
//! `{"vars":["x","y"],"terms":[{"e":[s,i],"num":"..","den":".."}]}`.
//!
//! Terms are emitted in canonical monomial order. Numerators and denominators
//! are decimal strings so no consumer loses precision.

use serde::{Deserialize, Serialize};

use super::{BiPoly, IntBiPoly, Monomial};
use crate::arith::{Integer, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyDoc {
    pub vars: Vec<String>,
    pub terms: Vec<TermDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub e: [u32; 2],
    pub num: String,
    pub den: String,
}

impl From<&BiPoly> for PolyDoc {
    fn from(p: &BiPoly) -> Self {
        PolyDoc {
            vars: vec!["x".into(), "y".into()],
            terms: p
                .terms()
                .map(|(m, c)| TermDoc {
                    e: [m.x, m.y],
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }
}

impl From<&IntBiPoly> for PolyDoc {
    fn from(p: &IntBiPoly) -> Self {
        PolyDoc::from(&p.to_rational_poly())
    }
}

impl TryFrom<PolyDoc> for BiPoly {
    type Error = Error;

    fn try_from(doc: PolyDoc) -> Result<BiPoly> {
        if doc.vars != ["x", "y"] {
            return Err(Error::Parse {
                position: "vars".into(),
                reason: format!("expected [\"x\",\"y\"], got {:?}", doc.vars),
            });
        }
        let mut p = BiPoly::zero();
        let mut seen = std::collections::BTreeSet::new();
        for (k, term) in doc.terms.into_iter().enumerate() {
            let position = format!("terms[{k}]");
            let bad = |reason: String| Error::Parse {
                position: position.clone(),
                reason,
            };
            let num: Integer = term
                .num
                .parse()
                .map_err(|_| bad(format!("numerator {:?} is not a decimal integer", term.num)))?;
            let den: Integer = term
                .den
                .parse()
                .map_err(|_| bad(format!("denominator {:?} is not a decimal integer", term.den)))?;
            if den == Integer::from(0) {
                return Err(bad("zero denominator".into()));
            }
            let mono = Monomial::new(term.e[0], term.e[1]);
            if !seen.insert(mono) {
                return Err(bad(format!("duplicate monomial {mono}")));
            }
            p.add_term(mono, Rational::new(num, den));
        }
        Ok(p)
    }
}

pub fn serialize(p: &BiPoly) -> String {
    serde_json::to_string(&PolyDoc::from(p)).expect("polynomial document serializes")
}

pub fn parse(text: &str) -> Result<BiPoly> {
    let doc: PolyDoc = serde_json::from_str(text).map_err(|e| Error::Parse {
        position: format!("line {}, column {}", e.line(), e.column()),
        reason: e.to_string(),
    })?;
    BiPoly::try_from(doc)
}
