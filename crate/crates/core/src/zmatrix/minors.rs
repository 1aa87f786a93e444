use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::IntMatrix;
use crate::error::{invalid, Result};

/// Exact determinant by fraction-free (Bareiss) elimination. Every division
/// in the elimination is exact.
pub fn determinant(a: &IntMatrix) -> Result<BigInt> {
    if !a.is_square() {
        return invalid(format!("determinant of non-square {}x{} matrix", a.rows(), a.cols()));
    }
    let n = a.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut m: Vec<Vec<BigInt>> = (0..n).map(|r| a.row(r).to_vec()).collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        let (head, tail) = m.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        for row in tail.iter_mut() {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let t = &row[j] * pivot - &lead * &pivot_row[j];
                row[j] = t / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Lexicographic k-subsets of `0..n`.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Nonnegative gcd of all `k x k` minors, by enumeration. The cost is
/// combinatorial; this is the reference oracle for small matrices.
pub fn minors_gcd(a: &IntMatrix, k: usize) -> Result<BigInt> {
    if k == 0 || k > a.rows().min(a.cols()) {
        return invalid(format!(
            "minor order {k} out of range for {}x{} matrix",
            a.rows(),
            a.cols()
        ));
    }
    let mut g = BigInt::zero();
    for rows in Combinations::new(a.rows(), k) {
        for cols in Combinations::new(a.cols(), k) {
            let d = determinant(&a.submatrix(&rows, &cols))?;
            g = g.gcd(&d);
            if g.is_one() {
                return Ok(g);
            }
        }
    }
    Ok(g)
}
