//! Browser bindings. Every export returns a JSON string, so the same
//! functions are tested natively and called from `www/index.html`.

use bilaguerre::arith::Rational;
use bilaguerre::congruence::{Case, Sides};
use bilaguerre::laguerre::bilaguerre;
use bilaguerre::poly::json::PolyDoc;
use bilaguerre::rook::{bilaguerre_rook_transform, rook_polynomial_from_laguerre};
use num_traits::ToPrimitive;
use serde::Serialize;
use wasm_bindgen::prelude::wasm_bindgen;

pub const MAX_DEGREE: u32 = 12;
pub const MAX_MODULUS_PARAM: u32 = 8;
/// Sample points per axis for the field view.
pub const GRID: usize = 41;
/// Field view covers `[0, SPAN]^2`.
pub const SPAN: i64 = 10;

#[derive(Serialize)]
struct Failure {
    error: String,
}

fn fail(msg: impl Into<String>) -> String {
    serde_json::to_string(&Failure { error: msg.into() }).expect("serializable")
}

fn degree_ok(n: u32, m: u32) -> Result<(), String> {
    if n > MAX_DEGREE || m > MAX_DEGREE {
        return Err(fail(format!("n and m are limited to {MAX_DEGREE} in the demo")));
    }
    Ok(())
}

#[derive(Serialize)]
struct Field {
    n: u32,
    m: u32,
    pretty: String,
    poly: PolyDoc,
    span: i64,
    grid: usize,
    /// Row-major, `values[j * grid + i]` at `(x_i, y_j)`. Exact values
    /// rounded to f64 for colouring only.
    values: Vec<f64>,
}

/// `L_{n,m}` with a grid of its values over `[0, SPAN]^2`.
#[wasm_bindgen]
pub fn field(n: u32, m: u32) -> String {
    if let Err(e) = degree_ok(n, m) {
        return e;
    }
    let p = bilaguerre(n, m);
    let step = Rational::new(SPAN.into(), (GRID as i64 - 1).into());
    let coords: Vec<Rational> = (0..GRID).map(|k| &step * Rational::from_integer(k.into())).collect();
    let mut values = Vec::with_capacity(GRID * GRID);
    for y in &coords {
        for x in &coords {
            values.push(p.eval(x, y).to_f64().unwrap_or(f64::NAN));
        }
    }
    serde_json::to_string(&Field {
        n,
        m,
        pretty: p.to_string(),
        poly: PolyDoc::from(&p),
        span: SPAN,
        grid: GRID,
        values,
    })
    .expect("serializable")
}

#[derive(Serialize)]
struct Cell {
    p: i64,
    q: i64,
    modulus: String,
    holds: bool,
    /// Monomials where the two sides differ over the integers.
    differing_terms: usize,
}

#[derive(Serialize)]
struct CongruenceGrid {
    n: i64,
    m: i64,
    cells: Vec<Cell>,
}

/// The main congruence at every `(p, q)` in `[1, max_p] x [1, max_q]`.
#[wasm_bindgen]
pub fn congruence_grid(n: u32, m: u32, max_p: u32, max_q: u32) -> String {
    if n > 6 || m > 6 {
        return fail("n and m are limited to 6 in the congruence grid");
    }
    if !(1..=MAX_MODULUS_PARAM).contains(&max_p) || !(1..=MAX_MODULUS_PARAM).contains(&max_q) {
        return fail(format!("p and q range over 1..={MAX_MODULUS_PARAM}"));
    }
    let (n, m, max_p, max_q) = (i64::from(n), i64::from(m), i64::from(max_p), i64::from(max_q));
    let mut cells = Vec::new();
    for q in 1..=max_q {
        for p in 1..=max_p {
            let c = match (Case::Main { n, m, p, q }).congruence() {
                Ok(c) => c,
                Err(e) => return fail(e.to_string()),
            };
            let differing_terms = match &c.sides {
                Sides::Poly { lhs, rhs } => (lhs - rhs).len(),
                Sides::Scalar { lhs, rhs } => usize::from(lhs != rhs),
            };
            let report = c.decide();
            cells.push(Cell { p, q, modulus: report.modulus.to_string(), holds: report.holds, differing_terms });
        }
    }
    serde_json::to_string(&CongruenceGrid { n, m, cells }).expect("serializable")
}

#[derive(Serialize)]
struct RookGrid {
    n: u32,
    m: u32,
    /// `coefficients[i][j]` multiplies `x^i y^j`.
    coefficients: Vec<Vec<String>>,
    rook_x: Vec<String>,
    rook_y: Vec<String>,
}

/// Coefficients of the rook transform of `L_{n,m}` beside the rook numbers
/// of the `n x n` and `m x m` boards.
#[wasm_bindgen]
pub fn rook_grid(n: u32, m: u32) -> String {
    if let Err(e) = degree_ok(n, m) {
        return e;
    }
    let t = match bilaguerre_rook_transform(n, m) {
        Ok(t) => t,
        Err(e) => return fail(e.to_string()),
    };
    let coefficients = (0..=n)
        .map(|i| (0..=m).map(|j| t.coeff(bilaguerre::poly::Monomial::new(i, j)).to_string()).collect())
        .collect();
    let rooks = |k: u32| -> Result<Vec<String>, String> {
        let r = rook_polynomial_from_laguerre(k).map_err(|e| fail(e.to_string()))?;
        Ok((0..=k).map(|e| r.coeff(e).to_string()).collect())
    };
    let (rook_x, rook_y) = match (rooks(n), rooks(m)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return e,
    };
    serde_json::to_string(&RookGrid { n, m, coefficients, rook_x, rook_y }).expect("serializable")
}
