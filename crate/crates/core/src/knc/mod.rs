//! Closed forms for the critical group of `K_m x C_n`.
//!
//! With `alpha, beta = (m + 2 +- sqrt(m^2 + 4m)) / 2` (so `alpha + beta = m + 2`
//! and `alpha * beta = 1`) the integer sequences
//!
//! * `u_p = (alpha^p - beta^p) / (alpha - beta)`
//! * `v_p = alpha^p + beta^p`
//! * `tau_p = (p - u_p) / m`
//!
//! together with `h_p = u_p + u_{p+1}` and `g_p = tau_p + tau_{p+1}` determine
//! the invariant factors. The cokernel of `L(K_m x C_n)` reduces to a `2m x 2m`
//! relation matrix `A` (see [`relation_matrix_a`]), which is equivalent to
//! `0 + B + W + ... + W` with `m - 2` copies of `W`.

mod closed;
mod matrices;
mod sequence;

pub use closed::{
    critical_group_closed, tree_number_closed, ClosedFormCase, ClosedFormResult, Parity,
};
pub use matrices::{
    matrix_b, matrix_b_snf_closed, matrix_w, matrix_w_snf_closed, relation_matrix_a,
    verify_block_reduction,
};
pub use sequence::{h_g, sequence_point, SequencePoint};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Nonnegative gcd of all arguments; `gcd() = 0`.
pub(crate) fn gcd_all(xs: &[&BigInt]) -> BigInt {
    xs.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// `a / b`, failing loudly unless the division is exact.
pub(crate) fn div_exact(a: &BigInt, b: &BigInt, what: &str) -> Result<BigInt> {
    if b.is_zero() {
        return Err(Error::InternalConsistency(format!("{what}: division by zero")));
    }
    let (q, r) = a.div_rem(b);
    if !r.is_zero() {
        return Err(Error::InternalConsistency(format!(
            "{what}: {a} is not divisible by {b}"
        )));
    }
    Ok(q)
}
