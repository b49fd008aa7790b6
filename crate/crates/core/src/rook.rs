//! Rook polynomials of the full square board and the two-variable analogue
//! built from `L_{n,m}`.
//!
//! `R_n(x) = n! x^n L_n(-1/x)` is computed by reversing exponents: the
//! coefficient `c_j` of `x^j` in `L_n` carries sign `(-1)^j`, which the
//! substitution `x -> -1/x` cancels, and lands on `x^{n-j}`.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::{factorial, Integer, Rational};
use crate::error::{Error, Result};
use crate::laguerre::{bilaguerre, laguerre_alpha};
use crate::poly::{IntBiPoly, Monomial, Poly1, UniPoly};

/// Default enumeration bound for [`rook_numbers_bruteforce`].
pub const DEFAULT_BRUTE_FORCE_BOUND: u32 = 6;

/// Rook numbers `r_0, ..., r_n` of the full `n x n` board.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RookVector {
    pub n: u32,
    #[serde(serialize_with = "decimals")]
    pub r: Vec<Integer>,
}

fn decimals<S: serde::Serializer>(v: &[Integer], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

impl RookVector {
    pub fn from_polynomial(n: u32, p: &UniPoly) -> Result<Self> {
        let r = (0..=n)
            .map(|k| {
                let c = p.coeff(k);
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::Internal(format!("rook coefficient of x^{k} is {c}")))
                }
            })
            .collect::<Result<_>>()?;
        Ok(Self { n, r })
    }
}

fn sign_absorbed(j: u32, c: &Rational) -> Rational {
    if j.is_multiple_of(2) {
        c.clone()
    } else {
        -c.clone()
    }
}

fn require_nonneg_integer(c: &Rational, at: &str) -> Result<()> {
    if !c.is_integer() || c.is_negative() {
        return Err(Error::Internal(format!(
            "rook transform coefficient at {at} is {c}, expected a nonnegative integer"
        )));
    }
    Ok(())
}

/// `R_n(x) = n! x^n L_n(-1/x)`.
pub fn rook_polynomial_from_laguerre(n: u32) -> Result<UniPoly> {
    let scale = Rational::from_integer(factorial(n));
    let mut out = Poly1::zero();
    for (j, c) in laguerre_alpha(n, 0).terms() {
        let v = sign_absorbed(j, c) * &scale;
        require_nonneg_integer(&v, &format!("x^{}", n - j))?;
        out.add_term(n - j, v);
    }
    Ok(out)
}

/// Rook numbers by exhaustive placement: each row holds at most one rook,
/// in a column no earlier row used.
pub fn rook_numbers_bruteforce(n: u32) -> Result<RookVector> {
    rook_numbers_bruteforce_bounded(n, DEFAULT_BRUTE_FORCE_BOUND)
}

pub fn rook_numbers_bruteforce_bounded(n: u32, bound: u32) -> Result<RookVector> {
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    let mut counts = vec![0u64; n as usize + 1];
    place(n, 0, 0, 0, &mut counts);
    Ok(RookVector {
        n,
        r: counts.into_iter().map(Integer::from).collect(),
    })
}

fn place(n: u32, row: u32, used_cols: u32, rooks: usize, counts: &mut [u64]) {
    if row == n {
        counts[rooks] += 1;
        return;
    }
    place(n, row + 1, used_cols, rooks, counts);
    for col in 0..n {
        if used_cols & (1 << col) == 0 {
            place(n, row + 1, used_cols | (1 << col), rooks + 1, counts);
        }
    }
}

/// `n! x^n m! y^m L_{n,m}(-1/x, -1/y)`, by reversing both exponents.
pub fn bilaguerre_rook_transform(n: u32, m: u32) -> Result<IntBiPoly> {
    let scale = Rational::from_integer(factorial(n) * factorial(m));
    let mut out = IntBiPoly::zero();
    for (mono, c) in bilaguerre(n, m).terms() {
        let v = sign_absorbed(mono.x + mono.y, c) * &scale;
        let target = Monomial::new(n - mono.x, m - mono.y);
        require_nonneg_integer(&v, &target.to_string())?;
        out.add_term(target, v.to_integer());
    }
    Ok(out)
}

/// CSV with header `n,k,r_k`, one row per rook number.
pub fn rook_table_csv(rows: &[RookVector]) -> String {
    let mut out = String::from("n,k,r_k\n");
    for row in rows {
        for (k, r) in row.r.iter().enumerate() {
            out.push_str(&format!("{},{},{}\n", row.n, k, r));
        }
    }
    out
}

impl RookVector {
    pub fn is_well_formed(&self) -> bool {
        self.r.len() == self.n as usize + 1
            && self.r.first().is_some_and(One::is_one)
            && self.r.iter().all(|v| !v.is_negative() && !v.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{binomial, int, rational};

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|x| int(*x)).collect()
    }

    #[test]
    fn transform_examples() {
        assert_eq!(rook_polynomial_from_laguerre(0).unwrap(), Poly1::one());
        assert_eq!(
            rook_polynomial_from_laguerre(2).unwrap(),
            Poly1::from_coeffs([1, 4, 2].map(|c| rational(c, 1)))
        );
        assert_eq!(
            rook_polynomial_from_laguerre(3).unwrap(),
            Poly1::from_coeffs([1, 9, 18, 6].map(|c| rational(c, 1)))
        );
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(rook_numbers_bruteforce(1).unwrap().r, ints(&[1, 1]));
        assert_eq!(rook_numbers_bruteforce(2).unwrap().r, ints(&[1, 4, 2]));
        assert_eq!(rook_numbers_bruteforce(4).unwrap().r[4], int(24));
        assert_eq!(
            rook_numbers_bruteforce(7),
            Err(Error::BoundExceeded { n: 7, bound: 6 })
        );
        assert!(rook_numbers_bruteforce(5).unwrap().is_well_formed());
    }

    #[test]
    fn bivariate_examples() {
        assert_eq!(bilaguerre_rook_transform(0, 0).unwrap(), IntBiPoly::one());
        let expected = IntBiPoly::from_terms([
            (Monomial::new(0, 0), int(1)),
            (Monomial::new(1, 0), int(2)),
            (Monomial::new(0, 1), int(2)),
            (Monomial::new(1, 1), int(2)),
        ]);
        assert_eq!(bilaguerre_rook_transform(1, 1).unwrap(), expected);
        for n in 0..6 {
            let uni = rook_polynomial_from_laguerre(n).unwrap();
            assert_eq!(
                bilaguerre_rook_transform(n, 0).unwrap().to_rational_poly(),
                crate::poly::BiPoly::from_x(&uni)
            );
        }
    }

    #[test]
    fn bivariate_closed_form() {
        // coefficient at (n - s, m - i) is n! m! / (i! s!) C(m+n, m-i) C(n+i, n-s)
        for n in 0..5u32 {
            for m in 0..5u32 {
                let t = bilaguerre_rook_transform(n, m).unwrap();
                for i in 0..=m {
                    for s in 0..=n {
                        let expected = factorial(n) * factorial(m) / (factorial(i) * factorial(s))
                            * binomial(m + n, i64::from(m - i))
                            * binomial(n + i, i64::from(n - s));
                        assert_eq!(t.coeff(Monomial::new(n - s, m - i)), expected);
                    }
                }
            }
        }
    }

    #[test]
    fn csv_rows() {
        let rows = [rook_numbers_bruteforce(2).unwrap()];
        assert_eq!(rook_table_csv(&rows), "n,k,r_k\n2,0,1\n2,1,4\n2,2,2\n");
    }
}
