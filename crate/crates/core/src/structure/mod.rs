//! Irreducibility evidence for `L_{n,m}`: the diagonal specialization
//! `L_{n,m}(x, x) = C(n+m, n) L_{n+m}(x)` plus irreducibility of the
//! univariate core `L_{n+m}`.

mod kronecker;

use serde::Serialize;

use crate::arith::{binomial, Integer, Rational};
use crate::error::{Error, Result};
use crate::laguerre::{bilaguerre, laguerre_alpha};
use crate::poly::{Poly1, UniPoly};

/// Default degree bound for the factor search.
pub const DEFAULT_MAX_DEGREE: usize = 8;

/// `L_{n,m}(x, x) == C(n+m, n) * L_{n+m}(x)`, exactly.
pub fn diagonal_identity_check(n: u32, m: u32) -> bool {
    let lhs = bilaguerre(n, m).substitute_diagonal();
    let rhs = laguerre_alpha(n + m, 0)
        .scale(&Rational::from_integer(binomial(n + m, i64::from(n))));
    lhs == rhs
}

/// A nonconstant integer factor of strictly lower degree, if `p` has one.
pub fn find_integer_factor(p: &UniPoly, max_degree: usize) -> Result<Option<Poly1<Integer>>> {
    let degree = match p.degree() {
        Some(d) if d >= 1 => d as usize,
        _ => return Err(Error::Range("factor search needs a nonconstant polynomial".into())),
    };
    if degree > max_degree {
        return Err(Error::DegreeTooLarge { degree, bound: max_degree });
    }
    if degree == 1 {
        return Ok(None);
    }
    let f = kronecker::primitive_part(p);
    if let Some(g) = kronecker::rational_root_factor(&f) {
        return Ok(Some(kronecker::to_poly(&g)));
    }
    for d in 1..=degree / 2 {
        let found = kronecker::factor_of_degree(&f, d).map_err(|()| {
            Error::Internal(format!("no usable interpolation nodes for a degree-{d} factor"))
        })?;
        if let Some(g) = found {
            return Ok(Some(kronecker::to_poly(&g)));
        }
    }
    Ok(None)
}

/// Irreducibility over the rationals by exhaustive Kronecker search, for
/// degree up to [`DEFAULT_MAX_DEGREE`].
pub fn kronecker_irreducible(p: &UniPoly) -> Result<bool> {
    kronecker_irreducible_bounded(p, DEFAULT_MAX_DEGREE)
}

pub fn kronecker_irreducible_bounded(p: &UniPoly, max_degree: usize) -> Result<bool> {
    Ok(find_integer_factor(p, max_degree)?.is_none())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoreIrreducibility {
    ProvenByFactorization,
    #[serde(rename = "asserted-by-Schur")]
    AssertedBySchur,
    NotChecked,
    /// The factor search found a factor of the core.
    RefutedByFactorization,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Conclusion {
    Irreducible,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub n: u32,
    pub m: u32,
    pub diagonal_ok: bool,
    pub core_degree: u32,
    pub core_irreducible: CoreIrreducibility,
    pub conclusion: Conclusion,
}

/// Certificate with the default factor-search bound.
pub fn irreducibility_certificate(n: u32, m: u32) -> Result<Certificate> {
    irreducibility_certificate_bounded(n, m, DEFAULT_MAX_DEGREE)
}

/// Checks both pillars: the diagonal identity, and irreducibility of the core
/// `L_{n+m}`, proven by factor search up to `max_degree` and otherwise taken
/// from Schur's theorem.
pub fn irreducibility_certificate_bounded(n: u32, m: u32, max_degree: usize) -> Result<Certificate> {
    let core_degree = n + m;
    if core_degree == 0 {
        return Err(Error::Range("L_{0,0} is constant; need n + m >= 1".into()));
    }
    let diagonal_ok = diagonal_identity_check(n, m);
    let core_irreducible = if core_degree as usize <= max_degree {
        if kronecker_irreducible_bounded(&laguerre_alpha(core_degree, 0), max_degree)? {
            CoreIrreducibility::ProvenByFactorization
        } else {
            CoreIrreducibility::RefutedByFactorization
        }
    } else {
        CoreIrreducibility::AssertedBySchur
    };
    let core_ok = matches!(
        core_irreducible,
        CoreIrreducibility::ProvenByFactorization | CoreIrreducibility::AssertedBySchur
    );
    let conclusion = if diagonal_ok && core_ok {
        Conclusion::Irreducible
    } else {
        Conclusion::Inconclusive
    };
    Ok(Certificate {
        n,
        m,
        diagonal_ok,
        core_degree,
        core_irreducible,
        conclusion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;

    fn q(coeffs: &[i64]) -> UniPoly {
        Poly1::from_coeffs(coeffs.iter().map(|c| rational(*c, 1)))
    }

    #[test]
    fn diagonal_examples() {
        for n in 0..6 {
            assert!(diagonal_identity_check(n, 0));
        }
        assert!(diagonal_identity_check(1, 1));
        assert!(diagonal_identity_check(3, 4));
    }

    #[test]
    fn kronecker_examples() {
        assert!(kronecker_irreducible(&q(&[1, -1])).unwrap());
        assert!(!kronecker_irreducible(&laguerre_alpha(2, 2)).unwrap());
        assert!(kronecker_irreducible(&laguerre_alpha(4, 0)).unwrap());
        assert!(kronecker_irreducible(&q(&[1, 0, 1])).unwrap());
    }

    #[test]
    fn reducible_factor_divides() {
        let f = laguerre_alpha(2, 2);
        let g = find_integer_factor(&f, 8).unwrap().unwrap();
        assert_eq!(g.degree(), Some(1));
        let root = if g.coeff(0) == Integer::from(-2) || g.coeff(0) == Integer::from(2) { 2 } else { 6 };
        assert_eq!(f.eval(&rational(root, 1)), rational(0, 1));
    }

    #[test]
    fn degree_bound() {
        let p = laguerre_alpha(9, 0);
        assert_eq!(
            kronecker_irreducible(&p),
            Err(Error::DegreeTooLarge { degree: 9, bound: 8 })
        );
        assert!(kronecker_irreducible(&UniPoly::one()).is_err());
    }

    #[test]
    fn certificate_examples() {
        let c = irreducibility_certificate(1, 0).unwrap();
        assert_eq!((c.core_degree, c.conclusion), (1, Conclusion::Irreducible));
        let c = irreducibility_certificate(2, 2).unwrap();
        assert_eq!(c.core_irreducible, CoreIrreducibility::ProvenByFactorization);
        assert_eq!(c.conclusion, Conclusion::Irreducible);
        let c = irreducibility_certificate(5, 6).unwrap();
        assert!(c.diagonal_ok);
        assert_eq!(c.core_irreducible, CoreIrreducibility::AssertedBySchur);
        assert_eq!(c.conclusion, Conclusion::Irreducible);
        assert!(irreducibility_certificate(0, 0).is_err());
    }

    #[test]
    fn certificate_json() {
        let v = serde_json::to_value(irreducibility_certificate(5, 6).unwrap()).unwrap();
        assert_eq!(v["core_irreducible"], "asserted-by-Schur");
        assert_eq!(v["conclusion"], "irreducible");
        assert_eq!(v["core_degree"], 11);
    }
}
