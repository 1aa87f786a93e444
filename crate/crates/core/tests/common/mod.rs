#![allow(dead_code)]

use critgroup::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;

/// `(u_p, v_p)` evaluated in `Z[sqrt(D)]`, `D = m^2 + 4m`, independently of the
/// library's recurrences. `alpha^p = (A + B sqrt(D)) / 2^p` where
/// `(A + B sqrt(D)) = (m + 2 + sqrt(D))^p`; then `v_p = 2A / 2^p` and
/// `u_p = 2B / 2^p`. Negative powers use `alpha^{-1} = beta`, which is checked.
pub fn quadratic_uv(m: usize, p: i64) -> (BigInt, BigInt) {
    let d = BigInt::from(m * m + 4 * m);
    let c = BigInt::from(m + 2);
    // alpha * beta = ((m+2)^2 - D) / 4 = 1
    assert_eq!((&c * &c - &d) / 4, BigInt::one());
    let k = p.unsigned_abs() as usize;
    let (mut a, mut b) = (BigInt::one(), BigInt::zero());
    for _ in 0..k {
        let na = &a * &c + &b * &d;
        let nb = &a + &b * &c;
        a = na;
        b = nb;
    }
    let denom = BigInt::one() << k;
    let exact = |x: BigInt| -> BigInt {
        let (q, r) = Integer::div_rem(&(x * 2), &denom);
        assert!(r.is_zero(), "inexact power in Z[sqrt(D)]");
        q
    };
    let v = exact(a);
    let u = exact(b);
    if p < 0 {
        (-u, v)
    } else {
        (u, v)
    }
}

pub fn ints(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

/// Matrices with 1..=6 rows and columns and entries in [-20, 20].
pub fn small_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
        prop::collection::vec(-20i64..=20, r * c).prop_map(move |xs| {
            let rows: Vec<Vec<i64>> = xs.chunks(c).map(<[i64]>::to_vec).collect();
            IntMatrix::from_i64(&rows)
        })
    })
}

/// Cofactor `det(L)` with row and column 0 removed, straight from the definition.
pub fn cofactor_tree_count(g: &critgroup::Multigraph) -> BigInt {
    if g.vertex_count() == 1 {
        return BigInt::one();
    }
    critgroup::determinant(&g.laplacian().minor_matrix(0, 0)).unwrap()
}
