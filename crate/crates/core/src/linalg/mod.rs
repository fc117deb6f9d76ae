//! Exact linear algebra over ℚ: rationals, dense matrices and canonical subspaces.

mod matrix;
mod rational;
mod subspace;

pub use matrix::{dot, Matrix};
pub use rational::Rational;
pub use subspace::Subspace;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Rescales a nonzero vector to coprime integers whose first nonzero entry is
/// positive. Returns `None` for the zero vector.
pub fn primitive_integer_vector(v: &[Rational]) -> Option<Vec<Rational>> {
    let first = v.iter().find(|x| !x.is_zero())?;
    let lcm = v
        .iter()
        .filter(|x| !x.is_zero())
        .fold(BigInt::one(), |acc, x| acc.lcm(&x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let flip = first.signum() < 0;
    Some(
        ints.into_iter()
            .map(|x| {
                let y = x / &gcd;
                Rational::from_bigint(if flip { -y } else { y })
            })
            .collect(),
    )
}

/// `Σ c_i · rows_i`.
pub fn combine_rows<'a>(coeffs: &[Rational], rows: impl Iterator<Item = &'a [Rational]>, len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::ZERO; len];
    for (c, row) in coeffs.iter().zip(rows) {
        if c.is_zero() {
            continue;
        }
        for (x, r) in out.iter_mut().zip(row) {
            if !r.is_zero() {
                *x += c * r;
            }
        }
    }
    out
}
