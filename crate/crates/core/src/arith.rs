//! Integer and rational arithmetic plus the combinatorial primitives
//! (factorial, binomial, Pochhammer, gcd).

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// Default size of the shared factorial table.
pub const DEFAULT_TABLE_BOUND: usize = 256;

/// Memoized factorials `0!, 1!, ..., bound!`. Lookups past the bound fall
/// back to direct evaluation.
#[derive(Debug, Clone)]
pub struct FactorialTable {
    table: Vec<Integer>,
}

impl FactorialTable {
    pub fn new(bound: usize) -> Self {
        let mut table = Vec::with_capacity(bound + 1);
        table.push(Integer::one());
        for k in 1..=bound {
            let next = &table[k - 1] * Integer::from(k);
            table.push(next);
        }
        Self { table }
    }

    pub fn bound(&self) -> usize {
        self.table.len() - 1
    }

    pub fn factorial(&self, n: u32) -> Integer {
        match self.table.get(n as usize) {
            Some(v) => v.clone(),
            None => {
                let mut acc = self.table.last().cloned().unwrap_or_else(Integer::one);
                for k in self.table.len()..=n as usize {
                    acc *= Integer::from(k);
                }
                acc
            }
        }
    }

    pub fn binomial(&self, a: u32, b: i64) -> Integer {
        if b < 0 || b > i64::from(a) {
            return Integer::zero();
        }
        let b = b as u32;
        self.factorial(a) / (self.factorial(b) * self.factorial(a - b))
    }
}

fn shared_table() -> &'static FactorialTable {
    static TABLE: OnceLock<FactorialTable> = OnceLock::new();
    TABLE.get_or_init(|| FactorialTable::new(DEFAULT_TABLE_BOUND))
}

pub fn factorial(n: u32) -> Integer {
    shared_table().factorial(n)
}

/// `C(a, b)`, extended by zero outside `0 <= b <= a`.
pub fn binomial(a: u32, b: i64) -> Integer {
    shared_table().binomial(a, b)
}

/// Rising factorial `(x)_n = x (x+1) ... (x+n-1)`, with `(x)_0 = 1`.
pub fn pochhammer(x: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    let mut factor = x.clone();
    for _ in 0..n {
        acc *= &factor;
        factor += Rational::one();
    }
    acc
}

/// Integer specialization of [`pochhammer`], used by the scalar congruences.
pub fn pochhammer_int(x: &Integer, n: u32) -> Integer {
    let mut acc = Integer::one();
    let mut factor = x.clone();
    for _ in 0..n {
        acc *= &factor;
        factor += 1;
    }
    acc
}

/// Positive greatest common divisor; `gcd(p, 0) = |p|`.
pub fn gcd(p: &Integer, q: &Integer) -> Result<Integer> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    Ok(p.gcd(q).abs())
}

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(Integer::from(num), Integer::from(den))
}

pub fn int(v: i64) -> Integer {
    Integer::from(v)
}
