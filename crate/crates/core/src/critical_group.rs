//! Critical groups of connected multigraphs.
//!
//! For connected `G` the Laplacian has rank `|V| - 1`, so its Smith normal form
//! is `diag(t_1, ..., t_{|V|-1}, 0)` with all `t_i` positive and
//! `coker L(G) = Z + K(G)`, where `K(G) = Z_{t_1} + ... + Z_{t_{|V|-1}}`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{invalid, Error, Result};
use crate::multigraph::Multigraph;
use crate::zmatrix::{determinant, smith_normal_form, IntMatrix};

/// A finite abelian group in invariant-factor form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    invariant_factors: Vec<BigInt>,
    raw_factors: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup {
            invariant_factors: Vec::new(),
            raw_factors: Vec::new(),
        }
    }

    /// Builds a group from a full nonzero SNF diagonal (leading 1s allowed).
    fn from_chain(raw: Vec<BigInt>) -> Result<Self> {
        if let Some(bad) = raw.iter().find(|t| !t.is_positive()) {
            return Err(Error::InternalConsistency(format!(
                "invariant factor {bad} is not positive"
            )));
        }
        if let Some(w) = raw.windows(2).find(|w| !w[1].is_multiple_of(&w[0])) {
            return Err(Error::InternalConsistency(format!(
                "{} does not divide {}",
                w[0], w[1]
            )));
        }
        Ok(AbelianGroup {
            invariant_factors: raw.iter().filter(|t| !t.is_one()).cloned().collect(),
            raw_factors: raw,
        })
    }

    /// Canonical factors, each at least 2, in divisibility order.
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    /// The SNF diagonal the group was read from, including leading 1s.
    pub fn raw_factors(&self) -> &[BigInt] {
        &self.raw_factors
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }
}

/// `Z_6 x Z_18`; the trivial group prints as `0`.
impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariant_factors.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.invariant_factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "Z_{t}")?;
        }
        Ok(())
    }
}

/// Canonical form of `Z_{f_1} + ... + Z_{f_k}` for positive `f_i` in any order.
pub fn canonicalize(factors: &[BigInt]) -> Result<AbelianGroup> {
    if let Some(bad) = factors.iter().find(|f| !f.is_positive()) {
        return invalid(format!("group factor {bad} must be positive"));
    }
    let snf = smith_normal_form(&IntMatrix::diagonal(factors));
    AbelianGroup::from_chain(snf.diag)
}

/// Critical group of a connected graph from the SNF of its full Laplacian.
pub fn critical_group(g: &Multigraph) -> Result<AbelianGroup> {
    if !g.is_connected()? {
        return Err(Error::NotConnected);
    }
    let n = g.vertex_count();
    let mut diag = smith_normal_form(&g.laplacian()).diag;
    let zeros = diag.iter().filter(|t| t.is_zero()).count();
    if zeros != 1 || !diag[n - 1].is_zero() {
        return Err(Error::InternalConsistency(format!(
            "Laplacian of a connected graph has {zeros} zero invariant factors"
        )));
    }
    diag.pop();
    AbelianGroup::from_chain(diag)
}

/// Number of spanning trees: determinant of the Laplacian with row and
/// column 0 deleted.
pub fn spanning_tree_count(g: &Multigraph) -> Result<BigInt> {
    if !g.is_connected()? {
        return Err(Error::NotConnected);
    }
    if g.vertex_count() == 1 {
        return Ok(BigInt::one());
    }
    let count = determinant(&g.laplacian().minor_matrix(0, 0))?;
    if cfg!(debug_assertions) {
        let order = critical_group(g)?.order();
        if order != count {
            return Err(Error::InternalConsistency(format!(
                "cofactor {count} differs from group order {order}"
            )));
        }
    }
    Ok(count)
}

pub fn group_order(g: &AbelianGroup) -> BigInt {
    g.order()
}

pub fn groups_isomorphic(a: &AbelianGroup, b: &AbelianGroup) -> bool {
    a.invariant_factors == b.invariant_factors
}
