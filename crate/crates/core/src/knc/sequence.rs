use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{invalid, Error, Result};

/// `(u_p, v_p, tau_p)` for one family parameter `m` and index `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequencePoint {
    pub m: usize,
    pub p: i64,
    pub u: BigInt,
    pub v: BigInt,
    pub tau: BigInt,
}

impl SequencePoint {
    /// `(h_p, g_p)` given the point at `p + 1`.
    pub fn h_g(&self, next: &SequencePoint) -> (BigInt, BigInt) {
        debug_assert_eq!((self.m, self.p + 1), (next.m, next.p));
        (&self.u + &next.u, &self.tau + &next.tau)
    }
}

/// Values for `p = 0, 1, ..., len - 1`.
struct Table {
    u: Vec<BigInt>,
    v: Vec<BigInt>,
    tau: Vec<BigInt>,
}

impl Table {
    fn seed(m: usize) -> Self {
        Table {
            u: vec![0.into(), 1.into()],
            v: vec![2.into(), BigInt::from(m + 2)],
            tau: vec![0.into(), 0.into()],
        }
    }

    fn extend_to(&mut self, m: usize, p: usize) {
        let c = BigInt::from(m + 2);
        while self.u.len() <= p {
            let k = self.u.len();
            let u = &c * &self.u[k - 1] - &self.u[k - 2];
            let v = &c * &self.v[k - 1] - &self.v[k - 2];
            let tau = &c * &self.tau[k - 1] - &self.tau[k - 2] - BigInt::from(k - 1);
            debug_assert_eq!(BigInt::from(k) - BigInt::from(m) * &tau, u);
            self.u.push(u);
            self.v.push(v);
            self.tau.push(tau);
        }
    }

    fn get(&self, p: usize) -> (BigInt, BigInt, BigInt) {
        (self.u[p].clone(), self.v[p].clone(), self.tau[p].clone())
    }
}

fn cache() -> &'static RwLock<HashMap<usize, Table>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Table>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn nonnegative_point(m: usize, p: usize) -> (BigInt, BigInt, BigInt) {
    {
        let tables = cache().read().unwrap_or_else(|e| e.into_inner());
        if let Some(t) = tables.get(&m).filter(|t| t.u.len() > p) {
            return t.get(p);
        }
    }
    let mut tables = cache().write().unwrap_or_else(|e| e.into_inner());
    let t = tables.entry(m).or_insert_with(|| Table::seed(m));
    t.extend_to(m, p);
    t.get(p)
}

/// Exact `(u_p, v_p, tau_p)` from the three-term recurrences with seeds
/// `u_0 = 0, u_1 = 1, v_0 = 2, v_1 = m + 2, tau_0 = tau_1 = 0`. Negative
/// indices use `u_{-p} = -u_p`, `v_{-p} = v_p` and `tau_p = (p - u_p) / m`.
pub fn sequence_point(m: usize, p: i64) -> Result<SequencePoint> {
    if m < 1 {
        return invalid("sequence parameter m must be at least 1");
    }
    let (u, v, tau) = nonnegative_point(m, p.unsigned_abs() as usize);
    if p >= 0 {
        return Ok(SequencePoint { m, p, u, v, tau });
    }
    let u = -u;
    let (tau, rem) = (BigInt::from(p) - &u).div_rem(&BigInt::from(m));
    if !rem.is_zero() {
        return Err(Error::InternalConsistency(format!(
            "u_{p} is not congruent to {p} mod {m}"
        )));
    }
    Ok(SequencePoint { m, p, u, v, tau })
}

/// `(h_p, g_p) = (u_p + u_{p+1}, tau_p + tau_{p+1})`.
pub fn h_g(m: usize, p: i64) -> Result<(BigInt, BigInt)> {
    let here = sequence_point(m, p)?;
    let next = sequence_point(m, p + 1)?;
    Ok(here.h_g(&next))
}
