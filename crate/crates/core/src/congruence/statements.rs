use std::collections::BTreeMap;

use num_traits::One;

use super::{Congruence, CongruenceReport, Sides, Statement};
use crate::arith::{binomial, factorial, gcd, pochhammer_int, Integer};
use crate::error::{Error, Result};
use crate::laguerre::{scaled_bilaguerre, scaled_laguerre};
use crate::poly::IntBiPoly;

/// Whether [`Case::BinomialProduct`] keeps the `(m+q-i)!` weight. The weight
/// is required; dropping it exists only to exhibit the resulting failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum BinomialProductMode {
    #[default]
    WithFactorial,
    NoFactorial,
}

/// One parameter tuple of one statement. Fields are signed so that
/// out-of-range input is reported as an error rather than rejected by type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Case {
    Carlitz { n: i64, m: i64, alpha: i64 },
    Pochhammer { n: i64, m: i64, t: i64, l: i64, p: i64, q: i64 },
    ParameterShift { n: i64, m: i64, q: i64, i: i64, p: i64 },
    AlphaPeriodicity { n: i64, m: i64, q: i64 },
    BinomialPochhammer { m: i64, n: i64, q: i64, i: i64, p: i64 },
    BinomialProduct { m: i64, s: i64, q: i64, i: i64, mode: BinomialProductMode },
    Main { n: i64, m: i64, p: i64, q: i64 },
}

fn nonneg(name: &str, v: i64) -> Result<u32> {
    u32::try_from(v).map_err(|_| Error::Range(format!("{name} must be a nonnegative integer, got {v}")))
}

fn positive(name: &str, v: i64) -> Result<u32> {
    match nonneg(name, v)? {
        0 => Err(Error::Range(format!("{name} must be >= 1, got 0"))),
        x => Ok(x),
    }
}

fn nonzero(name: &str, v: i64) -> Result<i64> {
    if v == 0 {
        return Err(Error::Range(format!("{name} must be nonzero")));
    }
    Ok(v)
}

fn within(name: &str, v: i64, lo: i64, hi: i64) -> Result<u32> {
    if v < lo || v > hi {
        return Err(Error::Range(format!("{name} = {v} outside [{lo}, {hi}]")));
    }
    nonneg(name, v)
}

fn gcd_of(p: i64, q: i64) -> Integer {
    gcd(&Integer::from(p), &Integer::from(q)).expect("p and q are validated nonzero")
}

fn lift(p: &crate::poly::Poly1<Integer>) -> IntBiPoly {
    IntBiPoly::from_x(p)
}

impl Case {
    pub fn statement(&self) -> Statement {
        match self {
            Case::Carlitz { .. } => Statement::Carlitz,
            Case::Pochhammer { .. } => Statement::Pochhammer,
            Case::ParameterShift { .. } => Statement::ParameterShift,
            Case::AlphaPeriodicity { .. } => Statement::AlphaPeriodicity,
            Case::BinomialPochhammer { .. } => Statement::BinomialPochhammer,
            Case::BinomialProduct { .. } => Statement::BinomialProduct,
            Case::Main { .. } => Statement::Main,
        }
    }

    pub fn params(&self) -> BTreeMap<&'static str, i64> {
        let pairs: Vec<(&'static str, i64)> = match *self {
            Case::Carlitz { n, m, alpha } => vec![("n", n), ("m", m), ("alpha", alpha)],
            Case::Pochhammer { n, m, t, l, p, q } => {
                vec![("n", n), ("m", m), ("t", t), ("l", l), ("p", p), ("q", q)]
            }
            Case::ParameterShift { n, m, q, i, p } => {
                vec![("n", n), ("m", m), ("q", q), ("i", i), ("p", p)]
            }
            Case::AlphaPeriodicity { n, m, q } => vec![("n", n), ("m", m), ("q", q)],
            Case::BinomialPochhammer { m, n, q, i, p } => {
                vec![("m", m), ("n", n), ("q", q), ("i", i), ("p", p)]
            }
            Case::BinomialProduct { m, s, q, i, mode } => vec![
                ("m", m),
                ("s", s),
                ("q", q),
                ("i", i),
                ("factorial", i64::from(mode == BinomialProductMode::WithFactorial)),
            ],
            Case::Main { n, m, p, q } => vec![("n", n), ("m", m), ("p", p), ("q", q)],
        };
        pairs.into_iter().collect()
    }

    /// Evaluates both sides after validating the preconditions.
    pub fn congruence(&self) -> Result<Congruence> {
        let (modulus, sides) = match *self {
            Case::Carlitz { n, m, alpha } => {
                let (n, m, alpha) = (nonneg("n", n)?, positive("m", m)?, nonneg("alpha", alpha)?);
                let lhs = lift(&scaled_laguerre(n + m, alpha));
                let rhs = &lift(&scaled_laguerre(n, alpha)) * &lift(&scaled_laguerre(m, alpha));
                (Integer::from(m), Sides::Poly { lhs, rhs })
            }
            Case::Pochhammer { n, m, t, l, p, q } => {
                let (n, m) = (nonneg("n", n)?, nonneg("m", m)?);
                let t = within("t", t, 0, i64::from(n))?;
                let l = within("l", l, 0, i64::from(m))?;
                let (p, q) = (nonzero("p", p)?, nonzero("q", q)?);
                let base = Integer::from(l) + 1;
                let shifted = &base + t;
                let lhs = pochhammer_int(&(&base - p), m - l) * pochhammer_int(&(&shifted + q), n - t);
                let rhs = pochhammer_int(&base, m - l) * pochhammer_int(&shifted, n - t);
                (gcd_of(p, q), Sides::Scalar { lhs, rhs })
            }
            Case::ParameterShift { n, m, q, i, p } => {
                let (n, m, q) = (nonneg("n", n)?, nonneg("m", m)?, positive("q", q)?);
                let i = within("i", i, i64::from(q), i64::from(m + q))?;
                let p = nonzero("p", p)?;
                let l = i - q;
                let base = Integer::from(l) + 1;
                let lhs = lift(&scaled_laguerre(n, i)).scale(&pochhammer_int(&(&base - p), m - l));
                let rhs = lift(&scaled_laguerre(n, l)).scale(&pochhammer_int(&base, m - l));
                (gcd_of(p, i64::from(q)), Sides::Poly { lhs, rhs })
            }
            Case::AlphaPeriodicity { n, m, q } => {
                let (n, m, q) = (nonneg("n", n)?, nonneg("m", m)?, positive("q", q)?);
                let lhs = lift(&scaled_laguerre(n, m + q));
                let rhs = lift(&scaled_laguerre(n, m));
                (Integer::from(q), Sides::Poly { lhs, rhs })
            }
            Case::BinomialPochhammer { m, n, q, i, p } => {
                let (m, n, q) = (nonneg("m", m)?, nonneg("n", n)?, positive("q", q)?);
                let i = within("i", i, i64::from(q), i64::from(m + q))?;
                let p = nonzero("p", p)?;
                let k = i64::from(m + q - i);
                let l = i - q;
                let lhs = binomial(m, k) * pochhammer_int(&(Integer::from(n + l + 1) + p), m - l);
                let rhs = binomial(m + n, k) * pochhammer_int(&(Integer::from(l + 1) - p), m - l);
                (gcd_of(p, i64::from(q)), Sides::Scalar { lhs, rhs })
            }
            Case::BinomialProduct { m, s, q, i, mode } => {
                let (m, s, q) = (nonneg("m", m)?, nonneg("s", s)?, positive("q", q)?);
                let i = within("i", i, i64::from(q), i64::from(m + q))?;
                let k = m + q - i;
                let weight = match mode {
                    BinomialProductMode::WithFactorial => factorial(k),
                    BinomialProductMode::NoFactorial => Integer::one(),
                };
                let k = i64::from(k);
                let lhs = &weight * binomial(m, k) * binomial(m + s, k);
                let rhs = &weight * binomial(m + q, k) * binomial(m + s + q, k);
                (Integer::from(q), Sides::Scalar { lhs, rhs })
            }
            Case::Main { n, m, p, q } => {
                let (n, m, p, q) = (nonneg("n", n)?, nonneg("m", m)?, positive("p", p)?, positive("q", q)?);
                let lhs = scaled_bilaguerre(n + p, m + q);
                let rhs = &scaled_bilaguerre(n, m) * &scaled_bilaguerre(p, q);
                (gcd_of(i64::from(p), i64::from(q)), Sides::Poly { lhs, rhs })
            }
        };
        Ok(Congruence {
            statement: self.statement(),
            params: self.params(),
            modulus,
            sides,
        })
    }

    pub fn check(&self) -> Result<CongruenceReport> {
        Ok(self.congruence()?.decide())
    }
}

/// `(n+m)! L_{n+m}^alpha = n! L_n^alpha * m! L_m^alpha (mod m)`, with `m >= 1`.
pub fn check_carlitz(n: i64, m: i64, alpha: i64) -> Result<CongruenceReport> {
    Case::Carlitz { n, m, alpha }.check()
}

/// `(l+1-p)_{m-l} (l+1+t+q)_{n-t} = (l+1)_{m-l} (l+1+t)_{n-t} (mod gcd(p, q))`.
pub fn check_pochhammer_congruence(
    n: i64,
    m: i64,
    t: i64,
    l: i64,
    p: i64,
    q: i64,
) -> Result<CongruenceReport> {
    Case::Pochhammer { n, m, t, l, p, q }.check()
}

/// `(i-q+1-p)_{m-(i-q)} n! L_n^i = (i-q+1)_{m-(i-q)} n! L_n^{i-q} (mod gcd(p, q))`.
pub fn check_parameter_shift(n: i64, m: i64, q: i64, i: i64, p: i64) -> Result<CongruenceReport> {
    Case::ParameterShift { n, m, q, i, p }.check()
}

/// `n! L_n^{m+q} = n! L_n^m (mod q)`.
pub fn check_alpha_periodicity(n: i64, m: i64, q: i64) -> Result<CongruenceReport> {
    Case::AlphaPeriodicity { n, m, q }.check()
}

/// `C(m, m+q-i) (n+p+i-q+1)_{m-(i-q)} = C(m+n, m+q-i) (i-q-p+1)_{m-(i-q)} (mod gcd(p, q))`.
pub fn check_binomial_pochhammer(m: i64, n: i64, q: i64, i: i64, p: i64) -> Result<CongruenceReport> {
    Case::BinomialPochhammer { m, n, q, i, p }.check()
}

/// `k! C(m, k) C(m+s, k) = k! C(m+q, k) C(m+s+q, k) (mod q)` with `k = m+q-i`.
pub fn check_binomial_product(
    m: i64,
    s: i64,
    q: i64,
    i: i64,
    mode: BinomialProductMode,
) -> Result<CongruenceReport> {
    Case::BinomialProduct { m, s, q, i, mode }.check()
}

/// `(n+p)!(m+q)! L_{n+p,m+q} = n!m! L_{n,m} * p!q! L_{p,q} (mod gcd(p, q))`.
pub fn check_main_theorem(n: i64, m: i64, p: i64, q: i64) -> Result<CongruenceReport> {
    Case::Main { n, m, p, q }.check()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::congruence::{Location, Witness};
    use crate::poly::{Monomial, Poly1};

    fn ints(v: &[i64]) -> IntBiPoly {
        IntBiPoly::from_x(&Poly1::from_coeffs(v.iter().map(|c| int(*c))))
    }

    #[test]
    fn carlitz_hand_example() {
        let c = Case::Carlitz { n: 1, m: 2, alpha: 0 }.congruence().unwrap();
        let Sides::Poly { lhs, rhs } = &c.sides else { panic!() };
        assert_eq!(lhs - rhs, ints(&[4, -12, 4]));
        assert_eq!(c.modulus, int(2));
        assert!(c.decide().holds);
    }

    #[test]
    fn carlitz_examples() {
        for n in 0..5 {
            let r = check_carlitz(n, 1, 3).unwrap();
            assert!(r.holds);
            assert_eq!(r.modulus, int(1));
        }
        assert!(check_carlitz(3, 2, 2).unwrap().holds);
        assert!(matches!(check_carlitz(3, 0, 0), Err(Error::Range(_))));
    }

    #[test]
    fn pochhammer_examples() {
        let c = Case::Pochhammer { n: 2, m: 3, t: 1, l: 1, p: 4, q: 6 }.congruence().unwrap();
        assert_eq!(c.sides, Sides::Scalar { lhs: int(18), rhs: int(18) });
        assert_eq!(c.modulus, int(2));
        for l in 0..=4 {
            assert!(check_pochhammer_congruence(0, 4, 0, l, 6, 9).unwrap().holds);
            assert_eq!(check_pochhammer_congruence(3, 4, 1, l, 1, 1).unwrap().modulus, int(1));
        }
        assert!(check_pochhammer_congruence(2, 3, 3, 1, 4, 6).is_err());
        assert!(check_pochhammer_congruence(2, 3, 1, 1, 0, 6).is_err());
        assert!(check_pochhammer_congruence(2, 3, 1, 1, 4, 0).is_err());
    }

    #[test]
    fn parameter_shift_examples() {
        let c = Case::ParameterShift { n: 2, m: 2, q: 2, i: 3, p: 4 }.congruence().unwrap();
        let Sides::Poly { lhs, rhs } = &c.sides else { panic!() };
        assert_eq!(lhs, &ints(&[-40, 20, -2]));
        assert_eq!(rhs, &ints(&[12, -12, 2]));
        assert_eq!(c.modulus, int(2));
        assert!(c.decide().holds);
        assert!(check_parameter_shift(0, 3, 4, 5, 6).unwrap().holds);
        assert!(check_parameter_shift(3, 2, 3, 4, 5).unwrap().holds);
        assert!(check_parameter_shift(2, 2, 2, 1, 4).is_err());
        assert!(check_parameter_shift(2, 2, 2, 5, 4).is_err());
    }

    #[test]
    fn alpha_periodicity_examples() {
        let c = Case::AlphaPeriodicity { n: 2, m: 0, q: 2 }.congruence().unwrap();
        let Sides::Poly { lhs, rhs } = &c.sides else { panic!() };
        assert_eq!(lhs, &ints(&[12, -8, 1]));
        assert_eq!(rhs, &ints(&[2, -4, 1]));
        assert!(c.decide().holds);
        assert!(check_alpha_periodicity(4, 2, 1).unwrap().holds);
        assert!(check_alpha_periodicity(5, 3, 6).unwrap().holds);
    }

    #[test]
    fn binomial_pochhammer_examples() {
        let c = Case::BinomialPochhammer { m: 3, n: 2, q: 2, i: 3, p: 4 }.congruence().unwrap();
        assert_eq!(c.sides, Sides::Scalar { lhs: int(216), rhs: int(20) });
        assert!(c.decide().holds);
        let top = Case::BinomialPochhammer { m: 3, n: 2, q: 2, i: 5, p: 4 }.congruence().unwrap();
        assert_eq!(top.sides, Sides::Scalar { lhs: int(1), rhs: int(1) });
        assert!(check_binomial_pochhammer(3, 2, 2, 3, 5).unwrap().holds);
    }

    #[test]
    fn binomial_product_needs_the_factorial() {
        let r = check_binomial_product(3, 5, 6, 6, BinomialProductMode::WithFactorial).unwrap();
        assert!(r.holds);
        let c = Case::BinomialProduct { m: 3, s: 5, q: 6, i: 6, mode: BinomialProductMode::WithFactorial }
            .congruence()
            .unwrap();
        let Sides::Scalar { lhs, rhs } = &c.sides else { panic!() };
        assert_eq!((lhs % 6, rhs % 6), (int(0), int(0)));

        let r = check_binomial_product(3, 5, 6, 6, BinomialProductMode::NoFactorial).unwrap();
        assert!(!r.holds);
        assert_eq!(
            r.witness,
            Some(Witness { at: Location::Scalar, lhs: int(2), rhs: int(0), difference: int(2) })
        );
        assert!(check_binomial_product(3, 5, 6, 9, BinomialProductMode::NoFactorial).unwrap().holds);
    }

    #[test]
    fn main_theorem_examples() {
        assert!(check_main_theorem(2, 1, 2, 3).unwrap().holds);
        assert_eq!(check_main_theorem(2, 1, 2, 3).unwrap().modulus, int(1));
        let c = Case::Main { n: 0, m: 0, p: 3, q: 2 }.congruence().unwrap();
        let Sides::Poly { lhs, rhs } = &c.sides else { panic!() };
        assert_eq!(lhs, rhs);
        let r = check_main_theorem(1, 1, 2, 2).unwrap();
        assert!(r.holds);
        assert_eq!(r.modulus, int(2));
        assert!(check_main_theorem(1, 1, 0, 2).is_err());
    }

    #[test]
    fn main_theorem_leading_term_fact() {
        // p! q! L_{p,q} = (-1)^{p+q} x^p y^q  (mod gcd(p, q))
        for (p, q) in [(2u32, 2u32), (2, 4), (3, 6), (4, 6)] {
            let g = gcd_of(i64::from(p), i64::from(q));
            let reduced = scaled_bilaguerre(p, q).reduce_mod(&g).unwrap();
            let sign = if (p + q) % 2 == 0 { int(1) } else { int(-1) };
            let expected = IntBiPoly::term(sign, p, q).reduce_mod(&g).unwrap();
            assert_eq!(reduced, expected, "p={p} q={q}");
        }
        // one coefficient of the (1,1,2,2) instance, checked through that fact
        let lhs = scaled_bilaguerre(3, 3);
        let rhs_via_leading = &scaled_bilaguerre(1, 1) * &IntBiPoly::term(int(1), 2, 2);
        let at = Monomial::new(2, 2);
        assert_eq!(
            (lhs.coeff(at) - rhs_via_leading.coeff(at)) % 2,
            int(0)
        );
    }

    #[test]
    fn params_are_recorded() {
        let r = check_main_theorem(1, 2, 3, 4).unwrap();
        assert_eq!(r.params.get("q"), Some(&4));
        assert_eq!(r.statement, Statement::Main);
    }
}
