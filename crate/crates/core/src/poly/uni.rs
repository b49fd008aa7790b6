use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};


use super::{fmt_terms, Coefficient, IsConstant};

/// Sparse polynomial in `x`. Zero coefficients are never stored, so the zero
/// polynomial has no terms and degree `None`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly1<C> {
    terms: BTreeMap<u32, C>,
}

impl<C: Coefficient> Default for Poly1<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> Poly1<C> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    /// `x`.
    pub fn x() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn monomial(c: C, exp: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    /// Builds from dense coefficients, lowest degree first.
    pub fn from_coeffs<I: IntoIterator<Item = C>>(coeffs: I) -> Self {
        Self::from_terms(coeffs.into_iter().enumerate().map(|(k, c)| (k as u32, c)))
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (exp, c) in terms {
            p.add_term(exp, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: u32, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exp) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(exp, sum);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &C)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: u32) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
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

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.terms.values().next_back()
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (*e, v.clone() * c))
                .collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(e, _)| **e > 0)
                .map(|(e, c)| (e - 1, c.clone() * &C::from_u32(*e))),
        )
    }

    /// Exact division by `x^k`; `None` when some term has a lower power.
    pub fn divide_by_x_power(&self, k: u32) -> Option<Self> {
        if self.terms.keys().next().is_some_and(|e| *e < k) {
            return None;
        }
        Some(Self {
            terms: self.terms.iter().map(|(e, c)| (e - k, c.clone())).collect(),
        })
    }

    pub fn eval(&self, x0: &C) -> C {
        // Horner over the sparse exponents, highest first.
        let mut acc = C::zero();
        let mut prev = match self.degree() {
            Some(d) => d,
            None => return acc,
        };
        for (exp, c) in self.terms.iter().rev() {
            for _ in *exp..prev {
                acc = acc * x0;
            }
            acc = acc + c;
            prev = *exp;
        }
        for _ in 0..prev {
            acc = acc * x0;
        }
        acc
    }

    pub fn map_coeffs<D: Coefficient>(&self, mut f: impl FnMut(&C) -> D) -> Poly1<D> {
        Poly1::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }
}

impl<C: Coefficient> Add for &Poly1<C> {
    type Output = Poly1<C>;

    fn add(self, rhs: &Poly1<C>) -> Poly1<C> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<C: Coefficient> Sub for &Poly1<C> {
    type Output = Poly1<C>;

    fn sub(self, rhs: &Poly1<C>) -> Poly1<C> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<C: Coefficient> Mul for &Poly1<C> {
    type Output = Poly1<C>;

    fn mul(self, rhs: &Poly1<C>) -> Poly1<C> {
        let mut out = Poly1::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca.clone() * cb);
            }
        }
        out
    }
}

impl<C: Coefficient> Neg for &Poly1<C> {
    type Output = Poly1<C>;

    fn neg(self) -> Poly1<C> {
        Poly1 {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

struct XPower(u32);

impl fmt::Display for XPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => f.write_str("1"),
            1 => f.write_str("x"),
            e => write!(f, "x^{e}"),
        }
    }
}

impl IsConstant for XPower {
    fn is_constant(&self) -> bool {
        self.0 == 0
    }
}

impl<C: Coefficient> fmt::Display for Poly1<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.terms.iter().map(|(e, c)| (XPower(*e), c)))
    }
}
