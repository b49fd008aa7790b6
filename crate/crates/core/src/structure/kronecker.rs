//! Kronecker's factor search for small-degree integer polynomials.
//!
//! A degree-`d` integer factor `g` of `f` is determined by its values at
//! `d + 1` integer nodes, and each value `g(a)` divides `f(a)`. The search
//! walks the divisor choices node by node and keeps the Newton divided
//! differences of the partial choice; for an integer polynomial at integer
//! nodes every divided difference is an integer, so a non-integral quotient
//! prunes the whole subtree.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::Rational;
use crate::poly::{Poly1, UniPoly};

/// Dense integer coefficients, lowest degree first, no trailing zeros.
pub(crate) type Dense = Vec<BigInt>;

const NODE_RADIUS: i64 = 12;
const MAX_NODE_VALUE: u128 = 100_000_000_000_000;

/// Primitive integer polynomial with positive leading coefficient, as a
/// rational multiple of `p`.
pub(crate) fn primitive_part(p: &UniPoly) -> Dense {
    let deg = p.degree().expect("nonzero polynomial") as usize;
    let lcm = p
        .terms()
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let mut dense: Dense = (0..=deg)
        .map(|k| (p.coeff(k as u32) * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let content = dense.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if dense[deg].is_negative() { -BigInt::one() } else { BigInt::one() };
    for c in &mut dense {
        *c = &*c / &content * &sign;
    }
    dense
}

pub(crate) fn to_poly(f: &[BigInt]) -> Poly1<BigInt> {
    Poly1::from_coeffs(f.iter().cloned())
}

fn eval(f: &[BigInt], a: &BigInt) -> BigInt {
    f.iter().rev().fold(BigInt::zero(), |acc, c| acc * a + c)
}

/// `f(a/b) * b^deg`.
fn eval_homogeneous(f: &[BigInt], a: &BigInt, b: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    let mut b_pow = BigInt::one();
    for c in f.iter().rev() {
        acc = acc * a + c * &b_pow;
        b_pow *= b;
    }
    acc
}

/// Exact division test over the integers.
fn divides(g: &[BigInt], f: &[BigInt]) -> bool {
    let dg = g.len() - 1;
    if f.len() < g.len() {
        return false;
    }
    let mut rem: Dense = f.to_vec();
    let lead = &g[dg];
    for shift in (0..=rem.len() - g.len()).rev() {
        let top = &rem[shift + dg];
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(lead);
        if !r.is_zero() {
            return false;
        }
        for (k, gk) in g.iter().enumerate() {
            rem[shift + k] -= &q * gk;
        }
    }
    rem.iter().all(Zero::is_zero)
}

fn positive_divisors(v: u128) -> Vec<u128> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u128;
    while d * d <= v {
        if v.is_multiple_of(d) {
            small.push(d);
            if d * d != v {
                large.push(v / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn signed_divisors(v: &BigInt) -> Option<Vec<BigInt>> {
    let magnitude = v.abs().to_u128()?;
    if magnitude == 0 || magnitude > MAX_NODE_VALUE {
        return None;
    }
    Some(positive_divisors(magnitude).into_iter().map(BigInt::from).collect())
}

/// A rational root `a/b` of `f`, returned as the primitive factor `b x - a`.
/// Gives up (returns `None`) when the end coefficients are too large to
/// enumerate divisors; the degree-1 Kronecker pass covers that case.
pub(crate) fn rational_root_factor(f: &[BigInt]) -> Option<Dense> {
    let constant = &f[0];
    if constant.is_zero() {
        return Some(vec![BigInt::zero(), BigInt::one()]);
    }
    let lead = f.last().expect("nonempty");
    let numerators = divisors_of_big(constant)?;
    let denominators = divisors_of_big(lead)?;
    for b in &denominators {
        for a in &numerators {
            if !a.gcd(b).is_one() {
                continue;
            }
            for a in [a.clone(), -a.clone()] {
                if eval_homogeneous(f, &a, b).is_zero() {
                    return Some(vec![-a, b.clone()]);
                }
            }
        }
    }
    None
}

fn divisors_of_big(v: &BigInt) -> Option<Vec<BigInt>> {
    let m = v.abs().to_u128().filter(|m| *m <= MAX_NODE_VALUE)?;
    Some(positive_divisors(m).into_iter().map(BigInt::from).collect())
}

struct Node {
    at: BigInt,
    choices: Vec<BigInt>,
}

/// Picks `count` interpolation nodes with the fewest divisor choices.
fn choose_nodes(f: &[BigInt], count: usize) -> Option<Vec<Node>> {
    let mut candidates: Vec<(usize, i64, Vec<BigInt>)> = Vec::new();
    for k in 0..=2 * NODE_RADIUS {
        // 0, 1, -1, 2, -2, ...
        let a = if k % 2 == 1 { (k + 1) / 2 } else { -(k / 2) };
        let value = eval(f, &BigInt::from(a));
        if let Some(divs) = signed_divisors(&value) {
            candidates.push((divs.len(), a, divs));
        }
    }
    if candidates.len() < count {
        return None;
    }
    candidates.sort_by_key(|(len, a, _)| (*len, a.abs(), *a));
    candidates.truncate(count);
    Some(
        candidates
            .into_iter()
            .map(|(_, a, divs)| Node {
                at: BigInt::from(a),
                choices: divs,
            })
            .collect(),
    )
}

struct Search<'a> {
    f: &'a [BigInt],
    lead: &'a BigInt,
    nodes: Vec<Node>,
    // rows[k][j] = g[a_j, ..., a_k]
    rows: Vec<Vec<BigInt>>,
}

impl Search<'_> {
    fn run(&mut self, level: usize) -> Option<Dense> {
        let d = self.nodes.len() - 1;
        let choices = self.nodes[level].choices.clone();
        for magnitude in &choices {
            let signs: &[i32] = if level == 0 { &[1] } else { &[1, -1] };
            for &s in signs {
                let v = if s > 0 { magnitude.clone() } else { -magnitude.clone() };
                if !self.extend(level, v) {
                    continue;
                }
                if level == d {
                    if let Some(g) = self.candidate() {
                        return Some(g);
                    }
                } else if let Some(g) = self.run(level + 1) {
                    return Some(g);
                }
            }
        }
        None
    }

    /// Appends the divided-difference row for `g(a_level) = v`; false if any
    /// entry is not an integer.
    fn extend(&mut self, level: usize, v: BigInt) -> bool {
        let mut row = vec![BigInt::zero(); level + 1];
        row[level] = v;
        for j in (0..level).rev() {
            let num = &row[j + 1] - &self.rows[level - 1][j];
            let den = &self.nodes[level].at - &self.nodes[j].at;
            let (q, r) = num.div_rem(&den);
            if !r.is_zero() {
                return false;
            }
            row[j] = q;
        }
        self.rows.truncate(level);
        self.rows.push(row);
        true
    }

    fn candidate(&self) -> Option<Dense> {
        let d = self.nodes.len() - 1;
        let newton: Vec<&BigInt> = self.rows.iter().map(|row| &row[0]).collect();
        let top = newton[d];
        if top.is_zero() || !(self.lead % top).is_zero() {
            return None;
        }
        // Horner on the Newton form: g = c_d; g = g (x - a_k) + c_k
        let mut g: Dense = vec![top.clone()];
        for k in (0..d).rev() {
            let a = &self.nodes[k].at;
            let mut next = vec![BigInt::zero(); g.len() + 1];
            for (e, c) in g.iter().enumerate() {
                next[e + 1] += c;
                next[e] -= c * a;
            }
            next[0] += newton[k];
            g = next;
        }
        divides(&g, self.f).then_some(g)
    }
}

/// A factor of `f` of exact degree `d`, if one exists. `Err` when too few
/// nodes have enumerable values (`f` must have no integer roots in the node
/// window, which the rational-root screen guarantees).
pub(crate) fn factor_of_degree(f: &[BigInt], d: usize) -> Result<Option<Dense>, ()> {
    let nodes = choose_nodes(f, d + 1).ok_or(())?;
    let lead = f.last().expect("nonempty");
    let mut search = Search {
        f,
        lead,
        nodes,
        rows: Vec::with_capacity(d + 1),
    };
    Ok(search.run(0))
}
