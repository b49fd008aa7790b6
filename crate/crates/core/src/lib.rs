//! Exact construction of the two-variable Laguerre polynomials `L_{n,m}(x, y)`
//! and machine checks of their identities, differential equations and
//! Carlitz-type congruences.

pub mod arith;
pub mod congruence;
mod error;
pub mod laguerre;
pub mod pde;
pub mod poly;
pub mod rook;
pub mod structure;

pub use error::{Error, Result};
