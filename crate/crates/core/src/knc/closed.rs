//! The invariant-factor decomposition of `K(K_m x C_n)` and its tree number.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::matrices::b_factors;
use super::sequence::sequence_point;
use super::{div_exact, gcd_all};
use crate::critical_group::{canonicalize, AbelianGroup};
use crate::error::{invalid, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Odd,
    Even,
}

/// Which formula produced a [`ClosedFormResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosedFormCase {
    /// `m, n >= 3`, and also `m >= 3, n = 2` through the even branch with `s = 1`.
    General,
    /// `n = 1`: the graph is `K_m`, group `(Z_m)^{m-2}`.
    Complete,
    /// `m = 1`: the graph is `C_n`, group `Z_n`.
    Cycle,
    /// `m = 2`: the prism over `C_n`, three factors from the block `B`.
    Prism,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormResult {
    pub m: usize,
    pub n: usize,
    pub case: ClosedFormCase,
    pub parity: Parity,
    /// `floor(n / 2)`.
    pub s: usize,
    /// Factors in the order the closed form lists them, unit factors included.
    pub stated_factors: Vec<BigInt>,
    pub group: AbelianGroup,
    pub tree_count: BigInt,
}

fn repeat(x: &BigInt, times: usize) -> impl Iterator<Item = BigInt> + '_ {
    std::iter::repeat_n(x, times).cloned()
}

/// `n = 2s + 1`, `m >= 3`:
/// `(n, g_s) | h_s (m - 1 times) | gamma | m h_s (m - 3 times) | phi`.
fn odd_branch(m: usize, n: usize) -> Result<Vec<BigInt>> {
    let s = (n / 2) as i64;
    let (nn, mm) = (BigInt::from(n), BigInt::from(m));
    let (h, g) = sequence_point(m, s)?.h_g(&sequence_point(m, s + 1)?);
    let first = gcd_all(&[&nn, &g]);
    let n_h = gcd_all(&[&nn, &h]);
    let gamma = div_exact(&h, &first, "gamma")? * &n_h;
    let phi = div_exact(&(&nn * &mm * &h), &n_h, "phi")?;
    let mh = &mm * &h;

    let mut out = vec![first];
    out.extend(repeat(&h, m - 1));
    out.push(gamma);
    out.extend(repeat(&mh, m - 3));
    out.push(phi);
    Ok(out)
}

/// `n = 2s`, `m >= 3`:
/// `(u_s, 2 tau_s) | zeta | (m,2) u_s (m - 3 times) | eta | rho | chi (m - 3 times) | xi`.
fn even_branch(m: usize, n: usize) -> Result<Vec<BigInt>> {
    let s = (n / 2) as i64;
    let (nn, mm) = (BigInt::from(n), BigInt::from(m));
    let at = sequence_point(m, s)?;
    let (u, tau) = (&at.u, &at.tau);
    let m2 = gcd_all(&[&mm, &BigInt::from(2)]);
    let m4u = BigInt::from(m + 4) * u;

    let first = gcd_all(&[u, &(2 * tau)]);
    let d_n_u_4t = gcd_all(&[&nn, u, &(4 * tau)]);
    let d_n_diff = gcd_all(&[&nn, &(u - 4 * tau)]);
    let d_xi = gcd_all(&[&(&mm * &nn), &m4u, &(2 * &nn)]);

    let zeta = div_exact(&(u * &d_n_u_4t), &first, "zeta")?;
    let eta = div_exact(&(u * &m2 * &d_n_diff), &d_n_u_4t, "eta")?;
    let rho = div_exact(&(&m4u * &d_xi), &(&d_n_diff * &m2), "rho")?;
    let chi = div_exact(&(&mm * &m4u), &m2, "chi")?;
    let xi = div_exact(&(&nn * &mm * &m4u), &d_xi, "xi")?;
    let m2u = &m2 * u;

    let mut out = vec![first, zeta];
    out.extend(repeat(&m2u, m - 3));
    out.push(eta);
    out.push(rho);
    out.extend(repeat(&chi, m - 3));
    out.push(xi);
    Ok(out)
}

/// `m = 2`, `n >= 2`. Odd `n`: `((n, h_s), h_s, n h_s / (n, h_s))`. Even `n`:
/// `(u_s, n)` or `(u_s, n) / 2`, then `u_s` or `2 u_s` (for odd / even `s`),
/// then `6 n u_s / (n, u_s)`.
fn prism_factors(n: usize) -> Result<Vec<BigInt>> {
    let s = (n / 2) as i64;
    let nn = BigInt::from(n);
    let at = sequence_point(2, s)?;
    if n % 2 == 1 {
        let (h, _) = at.h_g(&sequence_point(2, s + 1)?);
        let first = gcd_all(&[&nn, &h]);
        let third = div_exact(&(&nn * &h), &first, "s_3(B) for m = 2")?;
        return Ok(vec![first, h, third]);
    }
    let u = &at.u;
    let n_u = gcd_all(&[u, &nn]);
    let (first, second) = if s % 2 == 1 {
        (n_u.clone(), u.clone())
    } else {
        (div_exact(&n_u, &BigInt::from(2), "s_1(B) for m = 2")?, 2 * u)
    };
    let third = div_exact(&(6 * &nn * u), &n_u, "s_3(B) for m = 2")?;
    Ok(vec![first, second, third])
}

fn check_chain(factors: &[BigInt]) -> Result<()> {
    if let Some(bad) = factors.iter().find(|f| !f.is_positive()) {
        return Err(Error::InternalConsistency(format!(
            "closed form produced non-positive factor {bad}"
        )));
    }
    if let Some(w) = factors.windows(2).find(|w| !w[1].is_multiple_of(&w[0])) {
        return Err(Error::InternalConsistency(format!(
            "closed-form factors are not a divisibility chain: {} does not divide {}",
            w[0], w[1]
        )));
    }
    Ok(())
}

/// Critical group of `K_m x C_n` from the closed-form factor lists.
///
/// Fails with [`Error::InternalConsistency`] if the stated factors are not a
/// divisibility chain, a division that should be exact is not, or the
/// `m = 2` factors disagree with the invariant factors of `B`.
pub fn critical_group_closed(m: usize, n: usize) -> Result<ClosedFormResult> {
    if m == 0 || n == 0 {
        return invalid(format!("K_m x C_n needs m, n >= 1 (got m={m}, n={n})"));
    }
    let parity = if n % 2 == 1 { Parity::Odd } else { Parity::Even };
    let (case, stated) = if m == 1 {
        (ClosedFormCase::Cycle, vec![BigInt::from(n)])
    } else if n == 1 {
        (ClosedFormCase::Complete, repeat(&BigInt::from(m), m - 2).collect())
    } else if m == 2 {
        let stated = prism_factors(n)?;
        let from_b = b_factors(2, n)?;
        if stated[..] != from_b[..] {
            return Err(Error::InternalConsistency(format!(
                "m = 2 factors {stated:?} disagree with the invariant factors of B {from_b:?}"
            )));
        }
        (ClosedFormCase::Prism, stated)
    } else if parity == Parity::Odd {
        (ClosedFormCase::General, odd_branch(m, n)?)
    } else {
        (ClosedFormCase::General, even_branch(m, n)?)
    };

    check_chain(&stated)?;
    let group = canonicalize(&stated)?;
    if group.raw_factors() != &stated[..] {
        return Err(Error::InternalConsistency(format!(
            "canonical form {:?} differs from the stated factors",
            group.raw_factors()
        )));
    }
    let order: BigInt = stated.iter().product();
    let tree_count = if m >= 3 && n >= 3 {
        let t = product_tree_number(m, n)?;
        if t != order {
            return Err(Error::InternalConsistency(format!(
                "product of stated factors {order} differs from the tree number {t}"
            )));
        }
        t
    } else {
        order
    };
    Ok(ClosedFormResult {
        m,
        n,
        case,
        parity,
        s: n / 2,
        stated_factors: stated,
        group,
        tree_count,
    })
}

/// `n (v_n - 2)^{m-1} / m`, with the division checked to be exact.
fn product_tree_number(m: usize, n: usize) -> Result<BigInt> {
    let v = sequence_point(m, n as i64)?.v;
    let base = v - 2;
    let numer = BigInt::from(n) * num_traits::pow(base, m - 1);
    div_exact(&numer, &BigInt::from(m), "tree number")
}

/// Number of spanning trees of `K_m x C_n`: `(n / m)(v_n - 2)^{m-1}` for
/// `m, n >= 3`, otherwise the order of the special-case group.
pub fn tree_number_closed(m: usize, n: usize) -> Result<BigInt> {
    if m == 0 || n == 0 {
        return invalid(format!("K_m x C_n needs m, n >= 1 (got m={m}, n={n})"));
    }
    if m >= 3 && n >= 3 {
        return product_tree_number(m, n);
    }
    let r = critical_group_closed(m, n)?;
    debug_assert!(r.tree_count == r.group.order() || r.tree_count.is_one());
    Ok(r.tree_count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn k3_c3() {
        let r = critical_group_closed(3, 3).unwrap();
        assert_eq!(r.stated_factors, ints(&[1, 6, 6, 18, 18]));
        assert_eq!(r.group.to_string(), "Z_6 x Z_6 x Z_18 x Z_18");
        assert_eq!(r.tree_count, BigInt::from(11664));
        assert_eq!((r.case, r.parity, r.s), (ClosedFormCase::General, Parity::Odd, 1));
    }

    #[test]
    fn k3_c4() {
        let r = critical_group_closed(3, 4).unwrap();
        assert_eq!(r.stated_factors, ints(&[1, 5, 5, 35, 420]));
        assert_eq!(r.tree_count, BigInt::from(367500));
        assert_eq!(r.parity, Parity::Even);
    }

    #[test]
    fn factor_counts() {
        for m in 3..8 {
            for n in 3..9 {
                let r = critical_group_closed(m, n).unwrap();
                assert_eq!(r.stated_factors.len(), 2 * m - 1);
                let prod: BigInt = r.stated_factors.iter().product();
                assert_eq!(prod, r.tree_count);
            }
        }
    }

    #[test]
    fn special_cases() {
        let g = |m, n| critical_group_closed(m, n).unwrap();
        assert_eq!(g(1, 7).group.invariant_factors(), ints(&[7]));
        assert_eq!(g(1, 7).case, ClosedFormCase::Cycle);
        assert!(g(1, 1).group.is_trivial());
        assert_eq!(g(1, 2).group.invariant_factors(), ints(&[2]));
        assert_eq!(g(5, 1).group.invariant_factors(), ints(&[5, 5, 5]));
        assert!(g(2, 1).group.is_trivial());
        assert_eq!(g(2, 3).stated_factors, ints(&[1, 5, 15]));
        assert_eq!(g(2, 4).stated_factors, ints(&[2, 8, 24]));
        assert_eq!(g(2, 2).group.invariant_factors(), ints(&[12]));
        // n = 2 with a doubled C_2 edge.
        assert_eq!(g(3, 2).group.invariant_factors(), ints(&[7, 42]));
        assert_eq!(g(5, 2).group.invariant_factors(), ints(&[9, 45, 45, 90]));
    }

    #[test]
    fn tree_numbers() {
        assert_eq!(tree_number_closed(3, 3).unwrap(), BigInt::from(11664));
        assert_eq!(tree_number_closed(3, 4).unwrap(), BigInt::from(367500));
        for n in 1..12 {
            assert_eq!(tree_number_closed(1, n).unwrap(), BigInt::from(n));
        }
        assert_eq!(tree_number_closed(4, 1).unwrap(), BigInt::from(16));
        assert_eq!(tree_number_closed(3, 2).unwrap(), BigInt::from(294));
        assert!(tree_number_closed(0, 3).is_err());
    }

    #[test]
    fn product_tree_formula_covers_special_cases() {
        for m in 1..7 {
            for n in 1..7 {
                assert_eq!(
                    product_tree_number(m, n).unwrap(),
                    tree_number_closed(m, n).unwrap(),
                    "m={m} n={n}"
                );
            }
        }
    }

    #[test]
    fn rejects_zero() {
        assert!(critical_group_closed(0, 3).is_err());
        assert!(critical_group_closed(3, 0).is_err());
    }

    #[test]
    fn chain_check() {
        assert!(check_chain(&ints(&[1, 2, 4])).is_ok());
        assert!(matches!(check_chain(&ints(&[2, 3])), Err(Error::InternalConsistency(_))));
        assert!(check_chain(&ints(&[0])).is_err());
    }
}
