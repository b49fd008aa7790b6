//! Constructions of the one- and two-variable Laguerre polynomials.
//!
//! Every route is exact. The Rodrigues-style constructions never carry the
//! exponential weight: `e^{-x} P(x)` is closed under `d/dx` with
//! `P -> P' - P`, and `e^{-(x+y)/2} Q(x, y)` is closed under
//! `d/dx + d/dy` with `Q -> Q_x + Q_y - Q`, so both reduce to polynomial
//! recurrences.

use std::fmt;
use std::str::FromStr;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, factorial, Integer, Rational};
use crate::error::{Error, Result};
use crate::poly::{BiPoly, Monomial, Poly1, UniPoly, Var};

/// Degrees `n` (in `x`), `m` (in `y`) and the univariate parameter `alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct LaguerreParams {
    pub n: u32,
    pub m: u32,
    pub alpha: u32,
}

/// Construction route for the two-variable polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Route {
    /// Double-sum closed form.
    #[default]
    Explicit,
    /// Iterated weighted partial operator.
    Rodrigues,
    /// Single sum over powers of `y` with univariate polynomials in `x`.
    XExpansion,
    /// Single sum over powers of `x` with univariate polynomials in `y`.
    YExpansion,
}

impl Route {
    pub const ALL: [Route; 4] = [
        Route::Explicit,
        Route::Rodrigues,
        Route::XExpansion,
        Route::YExpansion,
    ];

    pub fn build(self, n: u32, m: u32) -> BiPoly {
        match self {
            Route::Explicit => bilaguerre(n, m),
            Route::Rodrigues => bilaguerre_rodrigues(n, m),
            Route::XExpansion => bilaguerre_via_x_expansion(n, m),
            Route::YExpansion => bilaguerre_via_y_expansion(n, m),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Route::Explicit => "explicit",
            Route::Rodrigues => "rodrigues",
            Route::XExpansion => "x-exp",
            Route::YExpansion => "y-exp",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Route::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Range(format!("unknown route {s:?}")))
    }
}

fn ratio(num: Integer, den: Integer) -> Rational {
    Rational::new(num, den)
}

fn sign(k: u32) -> Integer {
    if k.is_multiple_of(2) {
        Integer::one()
    } else {
        -Integer::one()
    }
}

/// `L_n^alpha(x) = sum_j (-1)^j / j! * C(n + alpha, n - j) * x^j`.
pub fn laguerre_alpha(n: u32, alpha: u32) -> UniPoly {
    Poly1::from_terms((0..=n).map(|j| {
        let num = sign(j) * binomial(n + alpha, i64::from(n) - i64::from(j));
        (j, ratio(num, factorial(j)))
    }))
}

/// `P -> P' - P`, the action of `d/dx` on `e^{-x} P(x)`.
pub fn weighted_derivative(p: &UniPoly) -> UniPoly {
    &p.derivative() - p
}

/// `L_n^alpha` from `(1/n!) e^x x^{-alpha} D^n (e^{-x} x^{n+alpha})`.
pub fn laguerre_rodrigues_1d(n: u32, alpha: u32) -> Result<UniPoly> {
    let mut p = Poly1::monomial(Rational::one(), n + alpha);
    for _ in 0..n {
        p = weighted_derivative(&p);
    }
    let reduced = p.divide_by_x_power(alpha).ok_or_else(|| {
        Error::Internal(format!(
            "x^{alpha} does not divide the Rodrigues numerator for n = {n}"
        ))
    })?;
    Ok(reduced.scale(&ratio(Integer::one(), factorial(n))))
}

/// `Q -> Q_x + Q_y - Q`, the action of `d/dx + d/dy` on `e^{-(x+y)/2} Q`.
pub fn weighted_partial(q: &BiPoly) -> BiPoly {
    &(&q.partial(Var::X) + &q.partial(Var::Y)) - q
}

/// `times`-fold application of [`weighted_partial`].
pub fn apply_weighted_partial(q: &BiPoly, times: u32) -> BiPoly {
    let mut q = q.clone();
    for _ in 0..times {
        q = weighted_partial(&q);
    }
    q
}

/// Two-variable Laguerre polynomial `L_{n,m}(x, y)` from its double-sum form
/// `sum_{i,s} (-1)^{i+s} / (i! s!) * C(m+n, m-i) * C(n+i, n-s) * x^s y^i`.
pub fn bilaguerre(n: u32, m: u32) -> BiPoly {
    let mut out = BiPoly::zero();
    for i in 0..=m {
        let outer = binomial(m + n, i64::from(m) - i64::from(i));
        for s in 0..=n {
            let num = sign(i + s) * &outer * binomial(n + i, i64::from(n) - i64::from(s));
            out.add_term(Monomial::new(s, i), ratio(num, factorial(i) * factorial(s)));
        }
    }
    out
}

/// `sum_i (-1)^i / i! * C(m+n, m-i) * L_n^i(x) * y^i`.
pub fn bilaguerre_via_x_expansion(n: u32, m: u32) -> BiPoly {
    let mut out = BiPoly::zero();
    for i in 0..=m {
        let c = ratio(
            sign(i) * binomial(m + n, i64::from(m) - i64::from(i)),
            factorial(i),
        );
        let inner = laguerre_alpha(n, i);
        for (s, v) in inner.terms() {
            out.add_term(Monomial::new(s, i), v.clone() * &c);
        }
    }
    out
}

/// `sum_s (-1)^s / s! * C(n+m, n-s) * L_m^s(y) * x^s`.
pub fn bilaguerre_via_y_expansion(n: u32, m: u32) -> BiPoly {
    let mut out = BiPoly::zero();
    for s in 0..=n {
        let c = ratio(
            sign(s) * binomial(n + m, i64::from(n) - i64::from(s)),
            factorial(s),
        );
        let inner = laguerre_alpha(m, s);
        for (i, v) in inner.terms() {
            out.add_term(Monomial::new(s, i), v.clone() * &c);
        }
    }
    out
}

/// `L_{n,m}` as `(1/(n! m!)) e^{(x+y)/2} (d/dx + d/dy)^{n+m} (e^{-(x+y)/2} x^n y^m)`.
pub fn bilaguerre_rodrigues(n: u32, m: u32) -> BiPoly {
    let seed = BiPoly::term(Rational::one(), n, m);
    apply_weighted_partial(&seed, n + m)
        .scale(&ratio(Integer::one(), factorial(n) * factorial(m)))
}

/// Closed form of `e^{(x+y)/2} (d/dx + d/dy)^t (e^{-(x+y)/2} x^n y^m)`:
/// `sum_{i <= min(t, m)} C(t, i) * m!/(m-i)! * [e^x D^{t-i}(e^{-x} x^n)] * y^{m-i}`.
pub fn d_partial_expansion(n: u32, m: u32, t: u32) -> BiPoly {
    // bracket[k] = e^x D^k (e^{-x} x^n)
    let mut bracket = Vec::with_capacity(t as usize + 1);
    bracket.push(Poly1::monomial(Rational::one(), n));
    for k in 1..=t as usize {
        let next = weighted_derivative(&bracket[k - 1]);
        bracket.push(next);
    }
    let mut out = BiPoly::zero();
    for i in 0..=t.min(m) {
        let falling = factorial(m) / factorial(m - i);
        let c = Rational::from_integer(binomial(t, i64::from(i)) * falling);
        for (s, v) in bracket[(t - i) as usize].terms() {
            out.add_term(Monomial::new(s, m - i), v.clone() * &c);
        }
    }
    out
}

/// `L_n^alpha(x) * L_m^beta(y)`.
pub fn product_laguerre_2(n: u32, alpha: u32, m: u32, beta: u32) -> BiPoly {
    &BiPoly::from_x(&laguerre_alpha(n, alpha)) * &BiPoly::from_y(&laguerre_alpha(m, beta))
}

/// `n! m! L_{n,m}` as an integer polynomial.
pub fn scaled_bilaguerre(n: u32, m: u32) -> crate::poly::IntBiPoly {
    bilaguerre(n, m)
        .scale(&Rational::from_integer(factorial(n) * factorial(m)))
        .to_integer_poly()
        .expect("n! m! L_{n,m} has integer coefficients")
}

/// `n! L_n^alpha` as an integer polynomial in `x`.
pub fn scaled_laguerre(n: u32, alpha: u32) -> Poly1<Integer> {
    laguerre_alpha(n, alpha).map_coeffs(|c| {
        let v = c * Rational::from_integer(factorial(n));
        debug_assert!(v.is_integer());
        v.to_integer()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;

    fn uq(coeffs: &[(i64, i64)]) -> UniPoly {
        Poly1::from_coeffs(coeffs.iter().map(|(n, d)| rational(*n, *d)))
    }

    fn l11() -> BiPoly {
        BiPoly::from_terms([
            (Monomial::new(0, 0), rational(2, 1)),
            (Monomial::new(1, 0), rational(-2, 1)),
            (Monomial::new(0, 1), rational(-2, 1)),
            (Monomial::new(1, 1), rational(1, 1)),
        ])
    }

    #[test]
    fn reducible_example_l22() {
        let expected = &uq(&[(-2, 1), (1, 1)]) * &uq(&[(-6, 1), (1, 1)]);
        let expected = expected.scale(&rational(1, 2));
        assert_eq!(laguerre_alpha(2, 2), expected);
        assert_eq!(laguerre_alpha(2, 2), uq(&[(6, 1), (-4, 1), (1, 2)]));
        assert_eq!(laguerre_rodrigues_1d(2, 2).unwrap(), expected);
    }

    #[test]
    fn small_univariate_cases() {
        for alpha in 0..4 {
            assert_eq!(laguerre_alpha(0, alpha), Poly1::one());
        }
        assert_eq!(laguerre_alpha(1, 0), uq(&[(1, 1), (-1, 1)]));
        assert_eq!(laguerre_rodrigues_1d(0, 0).unwrap(), Poly1::one());
    }

    #[test]
    fn degree_and_leading_coefficient() {
        for n in 0..8 {
            for alpha in 0..4 {
                let l = laguerre_alpha(n, alpha);
                assert_eq!(l.degree(), Some(n));
                assert_eq!(
                    l.leading_coeff().unwrap(),
                    &Rational::new(sign(n), factorial(n))
                );
            }
        }
    }

    #[test]
    fn rodrigues_matches_explicit_1d() {
        for n in 0..=8 {
            for alpha in 0..=4 {
                assert_eq!(laguerre_rodrigues_1d(n, alpha).unwrap(), laguerre_alpha(n, alpha));
            }
        }
    }

    #[test]
    fn bilaguerre_examples() {
        assert_eq!(bilaguerre(0, 0), BiPoly::one());
        assert_eq!(bilaguerre(1, 1), l11());
        assert_eq!(bilaguerre_rodrigues(1, 1), l11());
        assert_eq!(bilaguerre_rodrigues(0, 0), BiPoly::one());
        assert_eq!(bilaguerre_rodrigues(1, 0), BiPoly::from_x(&uq(&[(1, 1), (-1, 1)])));
        for n in 0..6 {
            assert_eq!(bilaguerre(n, 0), BiPoly::from_x(&laguerre_alpha(n, 0)));
        }
    }

    #[test]
    fn expansions_examples() {
        assert_eq!(bilaguerre_via_x_expansion(1, 1), l11());
        assert_eq!(bilaguerre_via_y_expansion(1, 1), l11());
        for k in 0..6 {
            let lk = laguerre_alpha(k, 0);
            assert_eq!(bilaguerre_via_x_expansion(0, k), BiPoly::from_y(&lk));
            assert_eq!(bilaguerre_via_x_expansion(k, 0), BiPoly::from_x(&lk));
            assert_eq!(bilaguerre_via_y_expansion(0, k), BiPoly::from_y(&lk));
        }
    }

    #[test]
    fn top_coefficient() {
        for n in 0..6 {
            for m in 0..6 {
                let l = bilaguerre(n, m);
                assert_eq!(l.total_degree(), Some(n + m));
                assert_eq!(
                    l.coeff(Monomial::new(n, m)),
                    Rational::new(sign(n + m), factorial(n) * factorial(m))
                );
            }
        }
    }

    #[test]
    fn d_partial_examples() {
        for n in 0..4 {
            for m in 0..4 {
                assert_eq!(d_partial_expansion(n, m, 0), BiPoly::term(Rational::one(), n, m));
            }
        }
        let expected = BiPoly::from_terms([
            (Monomial::new(1, 0), rational(1, 1)),
            (Monomial::new(0, 1), rational(1, 1)),
            (Monomial::new(1, 1), rational(-1, 1)),
        ]);
        assert_eq!(d_partial_expansion(1, 1, 1), expected);
    }

    #[test]
    fn d_partial_matches_raw_iteration() {
        for n in 0..=6 {
            for m in 0..=6 {
                for t in 0..=6 {
                    let raw = apply_weighted_partial(&BiPoly::term(Rational::one(), n, m), t);
                    assert_eq!(d_partial_expansion(n, m, t), raw, "n={n} m={m} t={t}");
                }
            }
        }
    }

    #[test]
    fn product_examples() {
        let one_minus_x = BiPoly::from_x(&uq(&[(1, 1), (-1, 1)]));
        let one_minus_y = BiPoly::from_y(&uq(&[(1, 1), (-1, 1)]));
        assert_eq!(product_laguerre_2(1, 0, 0, 0), one_minus_x);
        assert_eq!(product_laguerre_2(1, 0, 1, 0), &one_minus_x * &one_minus_y);
        assert_eq!(
            product_laguerre_2(2, 2, 0, 0),
            BiPoly::from_x(&uq(&[(6, 1), (-4, 1), (1, 2)]))
        );
    }

    #[test]
    fn derivative_lowers_degree_and_raises_alpha() {
        for k in 1..=10 {
            for alpha in 0..=4 {
                assert_eq!(
                    laguerre_alpha(k, alpha).derivative(),
                    -&laguerre_alpha(k - 1, alpha + 1)
                );
            }
        }
    }

    #[test]
    fn route_names_round_trip() {
        for r in Route::ALL {
            assert_eq!(r.name().parse::<Route>().unwrap(), r);
        }
        assert!("taylor".parse::<Route>().is_err());
    }

    #[test]
    fn scaled_forms() {
        let ip = scaled_bilaguerre(1, 1);
        assert_eq!(ip.to_rational_poly(), l11());
        let l2 = scaled_laguerre(2, 0);
        assert_eq!(l2, Poly1::from_coeffs([2, -4, 1].map(Integer::from)));
        assert!(laguerre_alpha(3, 1).scale(&Rational::from_integer(factorial(3))).terms().all(|(_, c)| c.is_integer()));
    }
}
