use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer as _;
use num_traits::One;

use super::{fmt_terms, Coefficient, Monomial, Poly1, Var};
use crate::arith::{Integer, Rational};
use crate::error::{Error, Result};

/// Sparse polynomial in `x` and `y`, iterated in canonical [`Monomial`] order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly2<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> Default for Poly2<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> Poly2<C> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(c, 0, 0)
    }

    pub fn x() -> Self {
        Self::term(C::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::term(C::one(), 0, 1)
    }

    /// `c * x^x_exp * y^y_exp`.
    pub fn term(c: C, x_exp: u32, y_exp: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::new(x_exp, y_exp), c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Lifts a univariate polynomial into `x`.
    pub fn from_x(p: &Poly1<C>) -> Self {
        Self::from_terms(p.terms().map(|(e, c)| (Monomial::new(e, 0), c.clone())))
    }

    /// Lifts a univariate polynomial into `y`.
    pub fn from_y(p: &Poly1<C>) -> Self {
        Self::from_terms(p.terms().map(|(e, c)| (Monomial::new(0, e), c.clone())))
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Monomial, &C)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn get(&self, m: Monomial) -> Option<&C> {
        self.terms.get(&m)
    }

    pub fn coeff(&self, m: Monomial) -> C {
        self.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.total_degree())
    }

    pub fn degree_in(&self, var: Var) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| match var {
                Var::X => m.x,
                Var::Y => m.y,
            })
            .max()
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (*m, v.clone() * c))
                .collect(),
        }
    }

    pub fn partial(&self, var: Var) -> Self {
        Self::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let (exp, lowered) = match var {
                Var::X if m.x > 0 => (m.x, Monomial::new(m.x - 1, m.y)),
                Var::Y if m.y > 0 => (m.y, Monomial::new(m.x, m.y - 1)),
                _ => return None,
            };
            Some((lowered, c.clone() * &C::from_u32(exp)))
        }))
    }

    /// `p(x, x)`.
    pub fn substitute_diagonal(&self) -> Poly1<C> {
        Poly1::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (m.total_degree(), c.clone())),
        )
    }

    /// `p(y, x)`.
    pub fn swap_vars(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.y, m.x), c.clone())),
        )
    }

    /// Exact value at `(x0, y0)`: Horner in `x` for each power of `y`, then
    /// Horner in `y` over those.
    pub fn eval(&self, x0: &C, y0: &C) -> C {
        let mut by_y: BTreeMap<u32, Poly1<C>> = BTreeMap::new();
        for (m, c) in &self.terms {
            by_y.entry(m.y)
                .or_default()
                .add_term(m.x, c.clone());
        }
        let outer = Poly1::from_terms(by_y.into_iter().map(|(e, p)| (e, p.eval(x0))));
        outer.eval(y0)
    }

    pub fn map_coeffs<D: Coefficient>(&self, mut f: impl FnMut(&C) -> D) -> Poly2<D> {
        Poly2::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }
}

impl Poly2<Rational> {
    /// Integer view of a polynomial whose coefficients all have denominator 1.
    pub fn to_integer_poly(&self) -> Result<Poly2<Integer>> {
        let mut out = Poly2::zero();
        for (m, c) in &self.terms {
            if !c.is_integer() {
                return Err(Error::NonIntegral {
                    monomial: *m,
                    value: c.to_string(),
                });
            }
            out.terms.insert(*m, c.to_integer());
        }
        Ok(out)
    }
}

impl Poly2<Integer> {
    pub fn to_rational_poly(&self) -> Poly2<Rational> {
        self.map_coeffs(|c| Rational::from_integer(c.clone()))
    }

    /// Coefficients replaced by canonical residues in `[0, modulus)`.
    pub fn reduce_mod(&self, modulus: &Integer) -> Result<Self> {
        if *modulus < Integer::one() {
            return Err(Error::Range(format!("modulus must be >= 1, got {modulus}")));
        }
        Ok(Self::from_terms(
            self.terms.iter().map(|(m, c)| (*m, c.mod_floor(modulus))),
        ))
    }
}

impl<C: Coefficient> Add for &Poly2<C> {
    type Output = Poly2<C>;

    fn add(self, rhs: &Poly2<C>) -> Poly2<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<C: Coefficient> Sub for &Poly2<C> {
    type Output = Poly2<C>;

    fn sub(self, rhs: &Poly2<C>) -> Poly2<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<C: Coefficient> Mul for &Poly2<C> {
    type Output = Poly2<C>;

    fn mul(self, rhs: &Poly2<C>) -> Poly2<C> {
        let mut out = Poly2::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(Monomial::new(ma.x + mb.x, ma.y + mb.y), ca.clone() * cb);
            }
        }
        out
    }
}

impl<C: Coefficient> Neg for &Poly2<C> {
    type Output = Poly2<C>;

    fn neg(self) -> Poly2<C> {
        Poly2 {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $method:ident),*) => {$(
        impl<C: Coefficient> $tr for Poly2<C> {
            type Output = Poly2<C>;

            fn $method(self, rhs: Poly2<C>) -> Poly2<C> {
                (&self).$method(&rhs)
            }
        }

        impl<C: Coefficient> $tr for Poly1<C> {
            type Output = Poly1<C>;

            fn $method(self, rhs: Poly1<C>) -> Poly1<C> {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl<C: Coefficient> fmt::Display for Poly2<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.terms.iter().map(|(m, c)| (*m, c)))
    }
}
