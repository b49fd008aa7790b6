//! Sparse exact polynomials in one and two variables.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent, so iteration order is the
//! canonical order used for serialization and witness reporting: ascending
//! total degree, and within one total degree, descending power of `x`.

mod bi;
pub mod json;
mod uni;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::arith::{Integer, Rational};

pub use bi::Poly2;
pub use uni::Poly1;

/// Univariate polynomial with rational coefficients.
pub type UniPoly = Poly1<Rational>;
/// Bivariate polynomial with rational coefficients.
pub type BiPoly = Poly2<Rational>;
/// Bivariate polynomial with integer coefficients.
pub type IntBiPoly = Poly2<Integer>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

/// Exponent pair of `x^x * y^y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };

    pub const fn new(x: u32, y: u32) -> Self {
        Self { x, y }
    }

    pub fn total_degree(self) -> u32 {
        self.x + self.y
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| other.x.cmp(&self.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.x, self.y) {
            (0, 0) => f.write_str("1"),
            (x, 0) => write_power(f, "x", x),
            (0, y) => write_power(f, "y", y),
            (x, y) => {
                write_power(f, "x", x)?;
                f.write_str("*")?;
                write_power(f, "y", y)
            }
        }
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, var: &str, exp: u32) -> fmt::Result {
    if exp == 1 {
        f.write_str(var)
    } else {
        write!(f, "{var}^{exp}")
    }
}

/// Exact coefficient ring. Implemented for [`Integer`] and [`Rational`].
pub trait Coefficient:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Signed
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn from_u32(n: u32) -> Self;
}

impl Coefficient for Integer {
    fn from_u32(n: u32) -> Self {
        Integer::from(n)
    }
}

impl Coefficient for Rational {
    fn from_u32(n: u32) -> Self {
        Rational::from_integer(Integer::from(n))
    }
}

/// Writes terms in the given order as `2 - 2*x + 1/2*x*y`.
pub(crate) fn fmt_terms<'a, C, M, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    C: Coefficient + 'a,
    M: fmt::Display + IsConstant,
    I: Iterator<Item = (M, &'a C)>,
{
    let mut first = true;
    for (mono, coeff) in terms {
        let negative = coeff.is_negative();
        let magnitude = coeff.abs();
        if first {
            if negative {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if negative { " - " } else { " + " })?;
        }
        first = false;
        if mono.is_constant() {
            write!(f, "{magnitude}")?;
        } else if magnitude.is_one() {
            write!(f, "{mono}")?;
        } else {
            write!(f, "{magnitude}*{mono}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

pub(crate) trait IsConstant {
    fn is_constant(&self) -> bool;
}

impl IsConstant for Monomial {
    fn is_constant(&self) -> bool {
        *self == Monomial::ONE
    }
}
