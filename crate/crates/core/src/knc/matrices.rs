//! The relation matrix `A` of `K_m x C_n` and the blocks `B`, `W` it reduces to.

use num_bigint::BigInt;

use super::sequence::sequence_point;
use super::{div_exact, gcd_all};
use crate::error::{invalid, Result};
use crate::zmatrix::{block_diagonal, equivalent, IntMatrix};

fn check_range(m: usize, n: usize) -> Result<()> {
    if m < 3 || n < 3 {
        return invalid(format!("requires m, n >= 3 (got m={m}, n={n})"));
    }
    Ok(())
}

/// Sequence values at `n - 1, n, n + 1` as `(u, tau)` triples.
fn around(m: usize, n: usize) -> Result<([BigInt; 3], [BigInt; 3])> {
    let n = n as i64;
    let pts = [
        sequence_point(m, n - 1)?,
        sequence_point(m, n)?,
        sequence_point(m, n + 1)?,
    ];
    let [a, b, c] = pts;
    Ok(([a.u, b.u, c.u], [a.tau, b.tau, c.tau]))
}

pub(crate) fn build_b(m: usize, n: usize) -> Result<IntMatrix> {
    let ([_, u0, u1], [t_prev, t0, t1]) = around(m, n)?;
    IntMatrix::from_rows(vec![
        vec![BigInt::from(n), t_prev.clone(), t0.clone()],
        vec![BigInt::from(0), &t0 - &t_prev, &t1 - &t0],
        vec![BigInt::from(0), u0, u1 - 1],
    ])
}

pub(crate) fn build_w(m: usize, n: usize) -> Result<IntMatrix> {
    let ([u_prev, u0, u1], _) = around(m, n)?;
    IntMatrix::from_rows(vec![
        vec![u_prev + 1, u0.clone()],
        vec![u0, u1 - 1],
    ])
}

/// The 3x3 matrix
/// `[[n, tau_{n-1}, tau_n], [0, tau_n - tau_{n-1}, tau_{n+1} - tau_n], [0, u_n, u_{n+1} - 1]]`.
pub fn matrix_b(m: usize, n: usize) -> Result<IntMatrix> {
    check_range(m, n)?;
    build_b(m, n)
}

/// The symmetric 2x2 matrix `[[u_{n-1} + 1, u_n], [u_n, u_{n+1} - 1]]`.
pub fn matrix_w(m: usize, n: usize) -> Result<IntMatrix> {
    check_range(m, n)?;
    build_w(m, n)
}

/// Invariant factors of `B` in closed form, `s = floor(n / 2)`:
///
/// * `n = 2s + 1`: `((n, g_s), h_s, n h_s / (n, g_s))`
/// * `n = 2s`: `((u_s, 2 tau_s), u_s (n, u_s - 4 tau_s) / (u_s, 2 tau_s), n (m + 4) u_s / (n, u_s - 4 tau_s))`
pub(crate) fn b_factors(m: usize, n: usize) -> Result<[BigInt; 3]> {
    let s = (n / 2) as i64;
    let nn = BigInt::from(n);
    let at = sequence_point(m, s)?;
    if n % 2 == 1 {
        let next = sequence_point(m, s + 1)?;
        let (h, g) = at.h_g(&next);
        let first = gcd_all(&[&nn, &g]);
        let third = div_exact(&(&nn * &h), &first, "s_3(B)")?;
        Ok([first, h, third])
    } else {
        let (u, tau) = (&at.u, &at.tau);
        let first = gcd_all(&[u, &(2 * tau)]);
        let d = gcd_all(&[&nn, &(u - 4 * tau)]);
        let second = div_exact(&(u * &d), &first, "s_2(B)")?;
        let third = div_exact(&(&nn * BigInt::from(m + 4) * u), &d, "s_3(B)")?;
        Ok([first, second, third])
    }
}

/// Invariant factors of `W`: `(h_s, m h_s)` for odd `n`,
/// `((m, 2) u_s, m (m + 4) u_s / (m, 2))` for even `n`.
pub(crate) fn w_factors(m: usize, n: usize) -> Result<[BigInt; 2]> {
    let s = (n / 2) as i64;
    let mm = BigInt::from(m);
    let at = sequence_point(m, s)?;
    if n % 2 == 1 {
        let next = sequence_point(m, s + 1)?;
        let (h, _) = at.h_g(&next);
        let second = &mm * &h;
        Ok([h, second])
    } else {
        let m2 = gcd_all(&[&mm, &BigInt::from(2)]);
        let first = &m2 * &at.u;
        let second = div_exact(&(&mm * BigInt::from(m + 4) * &at.u), &m2, "s_2(W)")?;
        Ok([first, second])
    }
}

pub fn matrix_b_snf_closed(m: usize, n: usize) -> Result<[BigInt; 3]> {
    check_range(m, n)?;
    b_factors(m, n)
}

pub fn matrix_w_snf_closed(m: usize, n: usize) -> Result<[BigInt; 2]> {
    check_range(m, n)?;
    w_factors(m, n)
}

/// The `2m x 2m` relation matrix on generators
/// `x_{0,0}, x_{1,0}, x_{0,1}, x_{1,1}, ...`: blocks `E` on the diagonal and
/// `F` elsewhere, where
///
/// * `E = [[-u_{n-1} - 1 - tau_{n-1}, u_n + tau_n], [-u_n - tau_n, u_{n+1} - 1 + tau_{n+1}]]`
/// * `F = [[-tau_{n-1}, tau_n], [-tau_n, tau_{n+1}]]`
pub fn relation_matrix_a(m: usize, n: usize) -> Result<IntMatrix> {
    if m < 1 || n < 3 {
        return invalid(format!("relation matrix requires m >= 1, n >= 3 (got m={m}, n={n})"));
    }
    let ([u_prev, u0, u1], [t_prev, t0, t1]) = around(m, n)?;
    let f = [
        [-&t_prev, t0.clone()],
        [-&t0, t1.clone()],
    ];
    let e = [
        [-&u_prev - 1 - &t_prev, &u0 + &t0],
        [-&u0 - &t0, &u1 - 1 + &t1],
    ];
    let mut a = IntMatrix::zeros(2 * m, 2 * m);
    for bj in 0..m {
        for bk in 0..m {
            let block = if bj == bk { &e } else { &f };
            for (r, row) in block.iter().enumerate() {
                for (c, x) in row.iter().enumerate() {
                    a.set(2 * bj + r, 2 * bk + c, x.clone());
                }
            }
        }
    }
    Ok(a)
}

/// `A ~ 0_1 + B + W + ... + W` (`m - 2` copies of `W`), decided by comparing
/// Smith normal forms.
pub fn verify_block_reduction(m: usize, n: usize) -> Result<bool> {
    check_range(m, n)?;
    let a = relation_matrix_a(m, n)?;
    let mut blocks = vec![IntMatrix::zeros(1, 1), build_b(m, n)?];
    let w = build_w(m, n)?;
    blocks.extend(std::iter::repeat_n(w, m - 2));
    Ok(equivalent(&a, &block_diagonal(&blocks)))
}
