//! Symbolic residuals of the Laguerre differential equations. A residual is
//! the left-hand side with the polynomial substituted; it must vanish.

use serde::Serialize;

use crate::arith::Rational;
use crate::laguerre::{bilaguerre, laguerre_alpha, product_laguerre_2};
use crate::poly::json::PolyDoc;
use crate::poly::{BiPoly, Poly1, UniPoly, Var};

/// Both rows of the two-variable system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualPair {
    pub row1: BiPoly,
    pub row2: BiPoly,
}

impl ResidualPair {
    pub fn is_zero(&self) -> bool {
        self.row1.is_zero() && self.row2.is_zero()
    }
}

impl Serialize for ResidualPair {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ResidualPair", 2)?;
        st.serialize_field("row1", &PolyDoc::from(&self.row1))?;
        st.serialize_field("row2", &PolyDoc::from(&self.row2))?;
        st.end()
    }
}

fn nat(k: u32) -> Rational {
    Rational::from_integer(k.into())
}

/// `x L'' + (alpha + 1 - x) L' + n L` for `L = L_n^alpha`.
pub fn ode_residual(n: u32, alpha: u32) -> UniPoly {
    let l = laguerre_alpha(n, alpha);
    let d1 = l.derivative();
    let d2 = d1.derivative();
    let drift = Poly1::from_coeffs([nat(alpha + 1), -nat(1)]);
    let x = Poly1::<Rational>::x();
    &(&(&x * &d2) + &(&drift * &d1)) + &l.scale(&nat(n))
}

/// The two rows for an arbitrary `l`, with the zeroth-order weights given:
/// `x L_xx + y L_xy + (1 - x) L_x + w1 L` and
/// `x L_yx + y L_yy + (1 - y) L_y + w2 L`.
pub fn pde_rows(l: &BiPoly, w1: &Rational, w2: &Rational) -> ResidualPair {
    let x = BiPoly::x();
    let y = BiPoly::y();
    let lx = l.partial(Var::X);
    let ly = l.partial(Var::Y);
    let lxx = lx.partial(Var::X);
    let lxy = lx.partial(Var::Y);
    let lyx = ly.partial(Var::X);
    let lyy = ly.partial(Var::Y);
    let one_minus_x = &BiPoly::one() - &x;
    let one_minus_y = &BiPoly::one() - &y;
    let row1 = &x * &lxx + &y * &lxy + &one_minus_x * &lx + l.scale(w1);
    let row2 = &x * &lyx + &y * &lyy + &one_minus_y * &ly + l.scale(w2);
    ResidualPair { row1, row2 }
}

/// The system for `L = L_{n,m}`.
pub fn pde_residuals(n: u32, m: u32) -> ResidualPair {
    pde_rows(&bilaguerre(n, m), &nat(n), &nat(m))
}

/// `x L_xx + y L_yy + (alpha + 1 - x) L_x + (beta + 1 - y) L_y + (n + m) L`
/// for `L = L_n^alpha(x) L_m^beta(y)`.
pub fn product_pde_residual(n: u32, alpha: u32, m: u32, beta: u32) -> BiPoly {
    let l = product_laguerre_2(n, alpha, m, beta);
    let x = BiPoly::x();
    let y = BiPoly::y();
    let lx = l.partial(Var::X);
    let ly = l.partial(Var::Y);
    let drift_x = &BiPoly::constant(nat(alpha + 1)) - &x;
    let drift_y = &BiPoly::constant(nat(beta + 1)) - &y;
    &x * &lx.partial(Var::X)
        + &y * &ly.partial(Var::Y)
        + &drift_x * &lx
        + &drift_y * &ly
        + l.scale(&nat(n + m))
}
