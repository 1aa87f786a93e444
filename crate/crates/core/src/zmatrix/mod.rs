//! Dense matrices over the integers with arbitrary-precision entries.

mod minors;
mod smith;

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{invalid, Error, Result};

pub use minors::{determinant, minors_gcd};
pub use smith::{smith_normal_form, SmithDecomposition};

/// Row-major dense integer matrix. Zero-sized dimensions are allowed so that
/// deleting the only row and column of a `1 x 1` matrix is well defined.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return invalid("ragged rows");
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from small literals; panics on ragged input.
    pub fn from_i64<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        IntMatrix::from_rows(rows).expect("rectangular literal")
    }

    /// Square matrix with `diag` on the diagonal.
    pub fn diagonal(diag: &[BigInt]) -> Self {
        let n = diag.len();
        let mut m = IntMatrix::zeros(n, n);
        for (i, d) in diag.iter().enumerate() {
            m.data[i * n + i] = d.clone();
        }
        m
    }

    /// `rows x cols` matrix with `diag` on the main diagonal.
    pub fn rect_diagonal(rows: usize, cols: usize, diag: &[BigInt]) -> Self {
        let mut m = IntMatrix::zeros(rows, cols);
        for (i, d) in diag.iter().enumerate().take(rows.min(cols)) {
            m.data[i * cols + i] = d.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigInt) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn multiply(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return invalid(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            ));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out
    }

    /// The submatrix on the given row and column indices, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                data.push(self.get(r, c).clone());
            }
        }
        IntMatrix {
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }

    /// Deletes row `r` and column `c`.
    pub fn minor_matrix(&self, r: usize, c: usize) -> IntMatrix {
        let rows: Vec<usize> = (0..self.rows).filter(|&i| i != r).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&j| j != c).collect();
        self.submatrix(&rows, &cols)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub(crate) fn negate_row(&mut self, r: usize) {
        for x in &mut self.data[r * self.cols..(r + 1) * self.cols] {
            *x = -std::mem::take(x);
        }
    }

    /// `row[target] -= q * row[source]`.
    pub(crate) fn sub_row_multiple(&mut self, target: usize, source: usize, q: &BigInt) {
        let cols = self.cols;
        for j in 0..cols {
            let s = &self.data[source * cols + j];
            if s.is_zero() {
                continue;
            }
            let delta = q * s;
            self.data[target * cols + j] -= delta;
        }
    }

    /// `col[target] -= q * col[source]`.
    pub(crate) fn sub_col_multiple(&mut self, target: usize, source: usize, q: &BigInt) {
        let cols = self.cols;
        for i in 0..self.rows {
            let s = &self.data[i * cols + source];
            if s.is_zero() {
                continue;
            }
            let delta = q * s;
            self.data[i * cols + target] -= delta;
        }
    }

    /// Replaces rows `(a, b)` by `(x*a + y*b, z*a + w*b)`.
    pub(crate) fn combine_rows(&mut self, a: usize, b: usize, coef: [&BigInt; 4]) {
        let [x, y, z, w] = coef;
        for j in 0..self.cols {
            let ra = &self.data[a * self.cols + j];
            let rb = &self.data[b * self.cols + j];
            let na = x * ra + y * rb;
            let nb = z * ra + w * rb;
            self.data[a * self.cols + j] = na;
            self.data[b * self.cols + j] = nb;
        }
    }

    /// Replaces columns `(a, b)` by `(x*a + y*b, z*a + w*b)`.
    pub(crate) fn combine_cols(&mut self, a: usize, b: usize, coef: [&BigInt; 4]) {
        let [x, y, z, w] = coef;
        for i in 0..self.rows {
            let ca = &self.data[i * self.cols + a];
            let cb = &self.data[i * self.cols + b];
            let na = x * ca + y * cb;
            let nb = z * ca + w * cb;
            self.data[i * self.cols + a] = na;
            self.data[i * self.cols + b] = nb;
        }
    }

    /// Parses the matrix text format: a `rows cols` header followed by `rows`
    /// lines of `cols` whitespace-separated integers. Blank lines are skipped.
    pub fn parse_text(text: &str) -> Result<IntMatrix> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing \"rows cols\" header".into(),
        })?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse {
                line: hline,
                message: format!("bad header {header:?}"),
            })?;
        let [rows, cols] = dims[..] else {
            return Err(Error::Parse {
                line: hline,
                message: format!("expected \"rows cols\", got {header:?}"),
            });
        };
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            let (lno, line) = lines.next().ok_or(Error::Parse {
                line: hline + r + 1,
                message: format!("expected {rows} rows, found {r}"),
            })?;
            let before = data.len();
            for tok in line.split_whitespace() {
                let v: BigInt = tok.parse().map_err(|_| Error::Parse {
                    line: lno,
                    message: format!("not an integer: {tok:?}"),
                })?;
                data.push(v);
            }
            if data.len() - before != cols {
                return Err(Error::Parse {
                    line: lno,
                    message: format!("expected {cols} entries, found {}", data.len() - before),
                });
            }
        }
        if let Some((lno, _)) = lines.next() {
            return Err(Error::Parse {
                line: lno,
                message: "trailing data after last row".into(),
            });
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|r| self.row(r).iter().map(ToString::to_string).collect())
            .collect();
        write!(f, "IntMatrix{rows:?}")
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.multiply(rhs).expect("dimension mismatch in matrix product")
    }
}

/// Direct sum of the given blocks; entries outside the blocks are zero.
pub fn block_diagonal(blocks: &[IntMatrix]) -> IntMatrix {
    let rows = blocks.iter().map(IntMatrix::rows).sum();
    let cols = blocks.iter().map(IntMatrix::cols).sum();
    let mut out = IntMatrix::zeros(rows, cols);
    let (mut r0, mut c0) = (0, 0);
    for b in blocks {
        for i in 0..b.rows {
            for j in 0..b.cols {
                out.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
        r0 += b.rows;
        c0 += b.cols;
    }
    out
}

/// Square with determinant `+-1`.
pub fn is_unimodular(p: &IntMatrix) -> bool {
    p.is_square() && determinant(p).is_ok_and(|d| d.magnitude().is_one())
}

/// Same shape and same Smith normal form.
pub fn equivalent(a: &IntMatrix, b: &IntMatrix) -> bool {
    a.rows == b.rows
        && a.cols == b.cols
        && smith_normal_form(a).diag == smith_normal_form(b).diag
}
