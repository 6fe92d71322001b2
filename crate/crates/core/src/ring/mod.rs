//! Exact arithmetic in `R = F_p[x, y, z, w]` and linear algebra on its graded pieces.

pub mod field;
pub mod linalg;
pub mod monomial;
mod parse;
pub mod poly;
pub mod subspace;

pub use field::{PrimeField, DEFAULT_CHECK_PRIME, DEFAULT_PRIME};
pub use monomial::{basis, dim_r, monomial_basis, Monomial, MonomialBasis, NVARS};
pub use parse::{parse_poly, parse_poly_at};
pub use poly::Polynomial;
pub use subspace::GradedSubspace;

/// Which of `add`, `sub`, `mul` to apply in [`poly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(a: &Polynomial, b: &Polynomial, op: ArithOp) -> crate::Result<Polynomial> {
    if a.field() != b.field() {
        return Err(crate::Error::Argument("operands over different primes".into()));
    }
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
    })
}
