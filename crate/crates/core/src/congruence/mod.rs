//! Decidable congruence checks over integers and integer polynomials.
//!
//! Every statement is reduced to a pair of sides and a modulus; the verdict
//! is whether `lhs - rhs` reduces to zero. On failure the witness is the first
//! nonzero coefficient of the reduced difference in canonical monomial order.

mod statements;
mod sweep;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer as _;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::arith::Integer;
use crate::error::{Error, Result};
use crate::poly::{IntBiPoly, Monomial};

pub use statements::{
    check_alpha_periodicity, check_binomial_pochhammer, check_binomial_product, check_carlitz,
    check_main_theorem, check_parameter_shift, check_pochhammer_congruence, BinomialProductMode,
    Case,
};
pub use sweep::{sweep, SweepRanges, SweepSummary};

/// The congruence statements that can be checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Statement {
    /// `(n+m)! L_{n+m}^a = n! L_n^a * m! L_m^a (mod m)`.
    Carlitz,
    /// Pochhammer-product congruence modulo `gcd(p, q)`.
    Pochhammer,
    /// Parameter shift `L_n^i` vs `L_n^{i-q}` with Pochhammer weights.
    ParameterShift,
    /// `n! L_n^{m+q} = n! L_n^m (mod q)`.
    AlphaPeriodicity,
    /// Binomial times Pochhammer congruence modulo `gcd(p, q)`.
    BinomialPochhammer,
    /// Factorial-weighted binomial products modulo `q`.
    BinomialProduct,
    /// Two-variable congruence for `L_{n,m}` modulo `gcd(p, q)`.
    Main,
}

impl Statement {
    pub const ALL: [Statement; 7] = [
        Statement::Carlitz,
        Statement::Pochhammer,
        Statement::ParameterShift,
        Statement::AlphaPeriodicity,
        Statement::BinomialPochhammer,
        Statement::BinomialProduct,
        Statement::Main,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Statement::Carlitz => "carlitz",
            Statement::Pochhammer => "pochhammer",
            Statement::ParameterShift => "parameter-shift",
            Statement::AlphaPeriodicity => "alpha-periodicity",
            Statement::BinomialPochhammer => "binomial-pochhammer",
            Statement::BinomialProduct => "binomial-product",
            Statement::Main => "main",
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Statement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Statement::ALL
            .into_iter()
            .find(|st| st.id() == s)
            .ok_or_else(|| Error::Range(format!("unknown statement {s:?}")))
    }
}

/// Where a congruence failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Location {
    /// Exponents `[s, i]` of `x^s y^i`.
    Monomial([u32; 2]),
    Scalar,
}

/// First failure of a congruence; all values are canonical residues.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub at: Location,
    #[serde(serialize_with = "decimal")]
    pub lhs: Integer,
    #[serde(serialize_with = "decimal")]
    pub rhs: Integer,
    #[serde(serialize_with = "decimal")]
    pub difference: Integer,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceReport {
    pub statement: Statement,
    pub params: BTreeMap<&'static str, i64>,
    #[serde(serialize_with = "decimal")]
    pub modulus: Integer,
    pub holds: bool,
    pub witness: Option<Witness>,
}

fn decimal<S: Serializer>(v: &Integer, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sides {
    Poly { lhs: IntBiPoly, rhs: IntBiPoly },
    Scalar { lhs: Integer, rhs: Integer },
}

/// A fully evaluated congruence `lhs = rhs (mod modulus)`, not yet decided.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congruence {
    pub statement: Statement,
    pub params: BTreeMap<&'static str, i64>,
    pub modulus: Integer,
    pub sides: Sides,
}

impl Congruence {
    pub fn decide(&self) -> CongruenceReport {
        let g = &self.modulus;
        let witness = match &self.sides {
            Sides::Poly { lhs, rhs } => {
                let diff = (lhs - rhs)
                    .reduce_mod(g)
                    .expect("congruence modulus is at least 1");
                let first = diff.terms().next().map(|(mono, d)| Witness {
                    at: Location::Monomial([mono.x, mono.y]),
                    lhs: lhs.coeff(mono).mod_floor(g),
                    rhs: rhs.coeff(mono).mod_floor(g),
                    difference: d.clone(),
                });
                first
            }
            Sides::Scalar { lhs, rhs } => {
                let d = (lhs - rhs).mod_floor(g);
                (!d.is_zero()).then(|| Witness {
                    at: Location::Scalar,
                    lhs: lhs.mod_floor(g),
                    rhs: rhs.mod_floor(g),
                    difference: d,
                })
            }
        };
        CongruenceReport {
            statement: self.statement,
            params: self.params.clone(),
            modulus: g.clone(),
            holds: witness.is_none(),
            witness,
        }
    }

    /// Adds one to the left-hand side at `at` (ignored for scalar sides).
    pub fn perturb_lhs(&mut self, at: Monomial) {
        match &mut self.sides {
            Sides::Poly { lhs, .. } => lhs.add_term(at, Integer::one()),
            Sides::Scalar { lhs, .. } => *lhs += 1,
        }
    }
}
