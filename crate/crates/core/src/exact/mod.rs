//! Exact scalars: rationals, Laurent polynomials in `q`, rational functions
//! in `q`, a prime field, and dense linear algebra over any of them.

mod field;
mod fp;
mod laurent;
mod matrix;
mod poly;
mod ratfunc;

pub use field::{Field, QParam};
pub use fp::Fp;
pub use laurent::{qint, LaurentQ};
pub use matrix::{rank, rref, solve, ExactMatrix, IncrementalBasis, Rref};
pub use poly::Poly;
pub use ratfunc::RatFunc;

pub use num_bigint::BigInt;
pub use num_rational::BigRational as Rat;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Exact integer value of a rational, if it is one and fits in `i64`.
pub fn rat_to_i64(r: &Rat) -> Option<i64> {
    use num_traits::ToPrimitive;
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}
