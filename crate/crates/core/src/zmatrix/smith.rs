//! Smith normal form with unimodular transform witnesses.
//!
//! Elimination proceeds one diagonal position at a time. The pivot is the
//! nonzero entry of least absolute value in the remaining lower-right block
//! (ties: lowest row, then lowest column). Row and column `k` are cleared by
//! Euclidean steps, re-pivoting whenever a nonzero remainder is left behind.
//! The resulting diagonal is made nonnegative and then turned into a
//! divisibility chain by replacing non-dividing pairs `(a, b)` with
//! `(gcd, lcm)` through 2x2 unimodular steps.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{determinant, IntMatrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    /// `min(rows, cols)` nonnegative entries, each dividing the next; zeros last.
    pub diag: Vec<BigInt>,
    /// Unimodular, `rows x rows`.
    pub left: IntMatrix,
    /// Unimodular, `cols x cols`.
    pub right: IntMatrix,
    pub source_dims: (usize, usize),
}

impl SmithDecomposition {
    /// The `rows x cols` matrix carrying `diag`.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let (r, c) = self.source_dims;
        IntMatrix::rect_diagonal(r, c, &self.diag)
    }

    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.diag.iter().take_while(|d| !d.is_zero()).count()
    }

    /// Checks every structural claim of the decomposition against `a`:
    /// `left * a * right` is the diagonal matrix, both transforms are
    /// unimodular, entries are nonnegative and form a divisibility chain.
    pub fn verify(&self, a: &IntMatrix) -> Result<(), String> {
        let (r, c) = self.source_dims;
        if (a.rows(), a.cols()) != (r, c) {
            return Err(format!("source dims {r}x{c} do not match {}x{}", a.rows(), a.cols()));
        }
        if self.diag.len() != r.min(c) {
            return Err("diagonal has the wrong length".into());
        }
        if let Some(d) = self.diag.iter().find(|d| d.is_negative()) {
            return Err(format!("negative invariant factor {d}"));
        }
        for w in self.diag.windows(2) {
            let ok = if w[0].is_zero() { w[1].is_zero() } else { w[1].is_multiple_of(&w[0]) };
            if !ok {
                return Err(format!("{} does not divide {}", w[0], w[1]));
            }
        }
        for (name, t, n) in [("left", &self.left, r), ("right", &self.right, c)] {
            if (t.rows(), t.cols()) != (n, n) {
                return Err(format!("{name} transform has the wrong shape"));
            }
            let det = determinant(t).map_err(|e| e.to_string())?;
            if det.abs() != BigInt::from(1) {
                return Err(format!("{name} transform has determinant {det}"));
            }
        }
        let product = &(&self.left * a) * &self.right;
        if product != self.diagonal_matrix() {
            return Err("left * A * right is not the claimed diagonal".into());
        }
        Ok(())
    }
}

/// Position of the least nonzero |entry| in rows/cols `k..`.
fn min_abs_pivot(w: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, &BigInt)> = None;
    for i in k..w.rows() {
        for j in k..w.cols() {
            let x = w.get(i, j);
            if x.is_zero() {
                continue;
            }
            let better = match best {
                None => true,
                Some((_, _, b)) => x.magnitude() < b.magnitude(),
            };
            if better {
                if x.magnitude().bits() == 1 {
                    return Some((i, j));
                }
                best = Some((i, j, x));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (a.rows(), a.cols());
    let mut w = a.clone();
    let mut left = IntMatrix::identity(rows);
    let mut right = IntMatrix::identity(cols);
    let n = rows.min(cols);

    for k in 0..n {
        let Some((pi, pj)) = min_abs_pivot(&w, k) else {
            break;
        };
        w.swap_rows(k, pi);
        left.swap_rows(k, pi);
        w.swap_cols(k, pj);
        right.swap_cols(k, pj);
        clear_row_and_col(&mut w, &mut left, &mut right, k);
    }

    let mut diag: Vec<BigInt> = (0..n).map(|i| w.get(i, i).clone()).collect();
    for (i, d) in diag.iter_mut().enumerate() {
        if d.is_negative() {
            *d = -std::mem::take(d);
            left.negate_row(i);
        }
    }

    let rank = diag.iter().take_while(|d| !d.is_zero()).count();
    for i in 0..rank {
        for j in i + 1..rank {
            if !diag[j].is_multiple_of(&diag[i]) {
                merge_pair(&mut diag, &mut left, &mut right, i, j);
            }
        }
    }

    let out = SmithDecomposition {
        diag,
        left,
        right,
        source_dims: (rows, cols),
    };
    if cfg!(debug_assertions) {
        if let Err(e) = out.verify(a) {
            panic!("smith_normal_form produced an invalid decomposition: {e}");
        }
    }
    out
}

/// Clears row and column `k` around the pivot at `(k, k)`, re-pivoting on
/// remainders until both are zero apart from the pivot.
fn clear_row_and_col(w: &mut IntMatrix, left: &mut IntMatrix, right: &mut IntMatrix, k: usize) {
    let (rows, cols) = (w.rows(), w.cols());
    loop {
        let pivot = w.get(k, k).clone();
        let mut leftover = false;
        for i in k + 1..rows {
            if w.get(i, k).is_zero() {
                continue;
            }
            let q = w.get(i, k) / &pivot;
            if !q.is_zero() {
                w.sub_row_multiple(i, k, &q);
                left.sub_row_multiple(i, k, &q);
            }
            leftover |= !w.get(i, k).is_zero();
        }
        for j in k + 1..cols {
            if w.get(k, j).is_zero() {
                continue;
            }
            let q = w.get(k, j) / &pivot;
            if !q.is_zero() {
                w.sub_col_multiple(j, k, &q);
                right.sub_col_multiple(j, k, &q);
            }
            leftover |= !w.get(k, j).is_zero();
        }
        if !leftover {
            return;
        }
        let (ni, nj) = min_abs_pivot(w, k).expect("nonzero remainder present");
        w.swap_rows(k, ni);
        left.swap_rows(k, ni);
        w.swap_cols(k, nj);
        right.swap_cols(k, nj);
    }
}

/// Replaces `(diag[i], diag[j])` with `(gcd, lcm)`. With `g = x*a + y*b`:
/// `[[x, y], [-b/g, a/g]] * diag(a, b) * [[1, -y*b/g], [1, x*a/g]] = diag(g, a*b/g)`.
fn merge_pair(
    diag: &mut [BigInt],
    left: &mut IntMatrix,
    right: &mut IntMatrix,
    i: usize,
    j: usize,
) {
    let (a, b) = (diag[i].clone(), diag[j].clone());
    let eg = a.extended_gcd(&b);
    let (mut g, mut x, mut y) = (eg.gcd, eg.x, eg.y);
    if g.is_negative() {
        g = -g;
        x = -x;
        y = -y;
    }
    let a_g = &a / &g;
    let b_g = &b / &g;
    let neg_b_g = -&b_g;
    left.combine_rows(i, j, [&x, &y, &neg_b_g, &a_g]);
    // Columns: new_i = col_i + col_j, new_j = -(y*b/g) col_i + (x*a/g) col_j.
    let one = BigInt::from(1);
    let c1 = -(&y * &b_g);
    let c2 = &x * &a_g;
    right.combine_cols(i, j, [&one, &one, &c1, &c2]);
    diag[j] = &a_g * &b;
    diag[i] = g;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag_of(a: &IntMatrix) -> Vec<i64> {
        smith_normal_form(a)
            .diag
            .iter()
            .map(|d| d.try_into().unwrap())
            .collect()
    }

    #[test]
    fn examples() {
        assert_eq!(diag_of(&IntMatrix::identity(4)), vec![1, 1, 1, 1]);
        assert_eq!(diag_of(&IntMatrix::from_i64(&[[2, 4], [6, 8]])), vec![2, 4]);
        let k3 = IntMatrix::from_i64(&[[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]);
        assert_eq!(diag_of(&k3), vec![1, 3, 0]);
    }

    #[test]
    fn degenerate_shapes() {
        assert_eq!(diag_of(&IntMatrix::zeros(3, 2)), vec![0, 0]);
        assert!(diag_of(&IntMatrix::zeros(0, 0)).is_empty());
        assert_eq!(diag_of(&IntMatrix::from_i64(&[[0, 6, 4]])), vec![2]);
        assert_eq!(diag_of(&IntMatrix::from_i64(&[[-3]])), vec![3]);
    }

    #[test]
    fn divisibility_fix_merges_coprime_entries() {
        let a = IntMatrix::from_i64(&[[6, 0, 0], [0, 4, 0], [0, 0, 9]]);
        assert_eq!(diag_of(&a), vec![1, 6, 36]);
        let a = IntMatrix::from_i64(&[[3, 0], [0, 4]]);
        assert_eq!(diag_of(&a), vec![1, 12]);
    }

    #[test]
    fn deterministic() {
        let a = IntMatrix::from_i64(&[[4, 6, 10], [-6, 9, 15], [2, 3, 7]]);
        assert_eq!(smith_normal_form(&a), smith_normal_form(&a));
    }

    #[test]
    fn verify_rejects_bad_witness() {
        let a = IntMatrix::from_i64(&[[2, 4], [6, 8]]);
        let mut snf = smith_normal_form(&a);
        assert!(snf.verify(&a).is_ok());
        snf.diag[1] = BigInt::from(8);
        assert!(snf.verify(&a).is_err());
    }
}
